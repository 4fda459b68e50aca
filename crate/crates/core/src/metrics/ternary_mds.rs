//! Exhaustive search over the two ternary 3×9 block-code families that a
//! `(3,2,3)_3` MDS convolutional code would have to contain. Distance 6 in
//! either family is necessary for such a code to exist.

use serde::Serialize;

use crate::gf::Field;
use crate::linalg::ConstMatrix;

use super::block_distance;

/// Fixed second and third rows of each family; the free parameters
/// `a1..a7` fill row one as `a1 a2 a3 0 a4 a5 0 a6 a7`.
const FAMILIES: [[[u8; 9]; 2]; 2] = [
    [[1, 1, 2, 1, 1, 1, 0, 0, 0], [0, 0, 0, 1, 1, 2, 1, 1, 1]],
    [[1, 2, 2, 1, 1, 1, 0, 0, 0], [0, 0, 0, 1, 2, 2, 1, 1, 1]],
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TernarySearchResult {
    pub family1_max_d: usize,
    pub family2_max_d: usize,
    pub candidates: usize,
}

/// The member of family `family` (1 or 2) with parameters `a`.
pub fn ternary_family(family: usize, a: [u8; 7]) -> ConstMatrix {
    let f3 = Field::prime(3).expect("3 is prime");
    let [r2, r3] = FAMILIES[family - 1];
    let r1 = vec![a[0], a[1], a[2], 0, a[3], a[4], 0, a[5], a[6]];
    ConstMatrix::from_rows(&f3, &[r1, r2.to_vec(), r3.to_vec()])
}

pub fn ternary_family_search() -> TernarySearchResult {
    let mut max = [0usize; 2];
    let mut candidates = 0;
    for (fam, best) in max.iter_mut().enumerate() {
        for x in 0..3usize.pow(7) {
            let mut a = [0u8; 7];
            let mut y = x;
            for v in a.iter_mut() {
                *v = (y % 3) as u8;
                y /= 3;
            }
            let d = block_distance(&ternary_family(fam + 1, a)).expect("3x9 is small");
            *best = (*best).max(d);
            candidates += 1;
        }
    }
    TernarySearchResult {
        family1_max_d: max[0],
        family2_max_d: max[1],
        candidates,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_parameters_bounded_by_row_weight() {
        for fam in 1..=2 {
            let m = ternary_family(fam, [0; 7]);
            // rows 2 and 3 have weight 6
            assert!(block_distance(&m).unwrap() <= 6);
        }
    }

    #[test]
    fn no_distance_six() {
        let r = ternary_family_search();
        assert_eq!(r.candidates, 2 * 2187);
        assert!(r.family1_max_d <= 5 && r.family2_max_d <= 5, "{r:?}");
    }
}
