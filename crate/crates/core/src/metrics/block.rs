//! Minimum distance of a block code given by a constant generator matrix.

use crate::linalg::ConstMatrix;

use super::MetricsError;

pub const MAX_BLOCK_ROWS: usize = 20;

/// Minimum weight over the nonzero combinations of the rows of `m`.
///
/// Only combinations whose first nonzero coefficient is 1 are visited, since
/// scaling preserves weight. Returns 0 when the rows are dependent.
pub fn block_distance(m: &ConstMatrix) -> Result<usize, MetricsError> {
    let k = m.rows();
    let q = m.field().q();
    if k > MAX_BLOCK_ROWS || (q as f64).powi(k as i32) > 1e9 {
        return Err(MetricsError::TooLarge);
    }
    let mut best = m.cols() + 1;
    let mut acc = vec![0u8; m.cols()];
    search(m, 0, false, &mut acc, &mut best);
    Ok(best.min(m.cols()))
}

fn search(m: &ConstMatrix, row: usize, started: bool, acc: &mut Vec<u8>, best: &mut usize) {
    let f = m.field();
    if row == m.rows() {
        if started {
            *best = (*best).min(acc.iter().filter(|&&v| v != 0).count());
        }
        return;
    }
    let coeffs: Vec<u8> = if started {
        f.elements().collect()
    } else {
        vec![0, 1]
    };
    for c in coeffs {
        if c == 0 {
            search(m, row + 1, started, acc, best);
            continue;
        }
        let saved = acc.clone();
        for (a, &g) in acc.iter_mut().zip(m.row(row)) {
            *a = f.add(*a, f.mul(c, g));
        }
        search(m, row + 1, true, acc, best);
        *acc = saved;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;

    #[test]
    fn hamming_identity_repetition() {
        let f = Field::prime(2).unwrap();
        let h = ConstMatrix::from_rows(
            &f,
            &[
                vec![1, 0, 0, 0, 0, 1, 1],
                vec![0, 1, 0, 0, 1, 0, 1],
                vec![0, 0, 1, 0, 1, 1, 0],
                vec![0, 0, 0, 1, 1, 1, 1],
            ],
        );
        assert_eq!(block_distance(&h).unwrap(), 3);
        assert_eq!(block_distance(&ConstMatrix::identity(&f, 5)).unwrap(), 1);
        assert_eq!(
            block_distance(&ConstMatrix::from_rows(&f, &[vec![1; 6]])).unwrap(),
            6
        );
        let dep = ConstMatrix::from_rows(&f, &[vec![1, 1], vec![1, 1]]);
        assert_eq!(block_distance(&dep).unwrap(), 0);
    }

    #[test]
    fn matches_full_enumeration_gf3() {
        use rand::{Rng, SeedableRng};
        let f = Field::prime(3).unwrap();
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..50 {
            let rows: Vec<Vec<u8>> = (0..4)
                .map(|_| (0..7).map(|_| rng.gen_range(0..3)).collect())
                .collect();
            let m = ConstMatrix::from_rows(&f, &rows);
            let mut best = usize::MAX;
            for x in 1..81usize {
                let u: Vec<u8> = (0..4).map(|i| ((x / 3usize.pow(i)) % 3) as u8).collect();
                best = best.min(m.vec_mul(&u).iter().filter(|&&v| v != 0).count());
            }
            assert_eq!(block_distance(&m).unwrap(), best);
        }
    }
}
