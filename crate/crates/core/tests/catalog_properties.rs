use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use convcode::catalog;
use convcode::code::profile;
use convcode::metrics::column_distances;
use convcode::poly::Poly;
use convcode::polymat::PolyMatrix;

fn random_poly(g: &PolyMatrix, rng: &mut StdRng, max_deg: usize) -> Poly {
    let q = g.field().q();
    let coeffs = (0..=rng.gen_range(0..=max_deg))
        .map(|_| rng.gen_range(0..q) as u8)
        .collect();
    Poly::from_coeffs(g.field(), coeffs)
}

#[test]
fn right_inverse_complexity_and_memory() {
    for e in catalog::list() {
        let g = e.matrix().unwrap();
        let h = g.right_inverse().unwrap();
        assert_eq!(
            g.mul(&h).unwrap(),
            PolyMatrix::identity(g.field(), g.rows()),
            "{}",
            e.id
        );
        let p = profile(&g).unwrap();
        let sum: usize = p.forney.iter().sum();
        assert_eq!(p.delta, sum, "{}", e.id);
        assert_eq!(g.leading_row_matrix().unwrap().rank(), g.rows(), "{}", e.id);
        assert!(p.k * p.memory >= p.delta, "{}", e.id);
    }
}

#[test]
fn membership_recovers_messages() {
    let mut rng = StdRng::seed_from_u64(11);
    for e in catalog::list() {
        let g = e.matrix().unwrap();
        let h = g.right_inverse().unwrap();
        for _ in 0..1000 {
            let u: Vec<Poly> = (0..g.rows()).map(|_| random_poly(&g, &mut rng, 4)).collect();
            let w = g.vec_mul(&u);
            assert_eq!(g.membership_with(&h, &w).unwrap(), u, "{}", e.id);
        }
    }
}

#[test]
fn column_distance_upper_bound() {
    for e in catalog::list() {
        let g = e.matrix().unwrap();
        let (n, k) = (g.cols(), g.rows());
        for (j, d) in column_distances(&g, 12).unwrap().into_iter().enumerate() {
            assert!(d as usize <= (n - k) * (j + 1) + 1, "{} d^c_{j} = {d}", e.id);
        }
    }
}
