use convcode::bounds::{block_bounds, bounds_report, griesmer_conv, heller, singleton_generalized};
use proptest::prelude::*;

const FIELDS: [u64; 8] = [2, 3, 4, 5, 7, 8, 9, 16];

fn tuple() -> impl Strategy<Value = (usize, usize, usize, usize, u64)> {
    (2usize..=16)
        .prop_flat_map(|n| (Just(n), 1..n))
        .prop_flat_map(|(n, k)| (Just(n), Just(k), 0usize..=12))
        .prop_flat_map(|(n, k, delta)| {
            let m_min = delta.div_ceil(k);
            (
                Just(n),
                Just(k),
                Just(delta),
                m_min..=m_min + 2,
                prop::sample::select(&FIELDS[..]),
            )
        })
        .prop_filter("m = 0 forces a block code", |&(_, _, delta, m, _)| {
            m > 0 || delta == 0
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(600))]

    #[test]
    fn griesmer_below_heller_and_singleton((n, k, delta, m, q) in tuple()) {
        let g = griesmer_conv(n, k, delta, m, q).unwrap();
        prop_assert!(g <= heller(n, k, delta, m, q).unwrap());
        prop_assert!(g <= singleton_generalized(n, k, delta).unwrap());
        prop_assert!(g >= 1);
        let r = bounds_report(n, k, delta, m, q).unwrap();
        prop_assert_eq!(r.griesmer, g);
    }
}

#[test]
fn block_case_consistency() {
    let mut checked = 0;
    for q in (2..=16u64).filter(|&q| convcode::gf::prime_power(q).is_some()) {
        for n in 2..=20 {
            for k in 1..n {
                let b = block_bounds(n, k, q).unwrap();
                assert_eq!(griesmer_conv(n, k, 0, 0, q).unwrap(), b.griesmer, "({n},{k})_{q}");
                assert!(b.griesmer <= b.plotkin, "({n},{k})_{q}");
                assert!(b.griesmer <= b.singleton, "({n},{k})_{q}");
                checked += 1;
            }
        }
    }
    assert!(checked > 1000);
}
