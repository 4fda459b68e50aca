//! Evenness of binary codes.
//!
//! Over GF(2), `wt(u+v) ≡ wt(u)+wt(v) (mod 2)` and shifting by `z` keeps
//! weight, so every codeword has even weight iff every generator row does.

use serde::Serialize;

use crate::budget::Budget;
use crate::polymat::PolyMatrix;

use super::MetricsError;

/// Total number of nonzero coefficients in each row.
pub fn row_weights(g: &PolyMatrix) -> Vec<usize> {
    (0..g.rows())
        .map(|r| g.row(r).iter().map(|p| p.weight()).sum())
        .collect()
}

pub fn is_even(g: &PolyMatrix) -> Result<bool, MetricsError> {
    let q = g.field().q();
    if q != 2 {
        return Err(MetricsError::NotBinary(q));
    }
    if g.right_inverse().is_err() {
        return Err(MetricsError::NotBasic);
    }
    Ok(row_weights(g).iter().all(|w| w % 2 == 0))
}

/// Outcome of enumerating every codeword `uG` with `deg u <= max_deg`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LowDegreeCheck {
    pub max_deg: usize,
    pub codewords: u64,
    pub min_weight: usize,
    pub all_even: bool,
    pub all_doubly_even: bool,
}

/// Maximum number of message bits `k(max_deg+1)` accepted.
pub const MAX_MESSAGE_BITS: usize = 32;

/// Exhaustive enumeration of the binary codewords `uG`, `deg u <= max_deg`,
/// in Gray-code order so each step adds one shifted row.
pub fn codeword_weights_mod4(
    g: &PolyMatrix,
    max_deg: usize,
    budget: &Budget,
) -> Result<LowDegreeCheck, MetricsError> {
    let q = g.field().q();
    if q != 2 {
        return Err(MetricsError::NotBinary(q));
    }
    let (k, n) = (g.rows(), g.cols());
    let bits = k * (max_deg + 1);
    if bits > MAX_MESSAGE_BITS {
        return Err(MetricsError::TooLarge);
    }
    let span = max_deg + g.max_degree().unwrap_or(0) + 1;
    let words = (n * span).div_ceil(64);
    // basis[b] = z^j * row i packed as bits t*n + c, with b = j*k + i
    let mut basis = vec![0u64; bits * words];
    for j in 0..=max_deg {
        for i in 0..k {
            let b = j * k + i;
            for c in 0..n {
                for (e, &coef) in g.get(i, c).coeffs().iter().enumerate() {
                    if coef != 0 {
                        let pos = (e + j) * n + c;
                        basis[b * words + pos / 64] |= 1 << (pos % 64);
                    }
                }
            }
        }
    }
    let mut acc = vec![0u64; words];
    let mut min_weight = usize::MAX;
    let (mut all_even, mut all_doubly_even) = (true, true);
    let total: u64 = (1u64 << bits) - 1;
    for x in 1..=total {
        if x & 0xFFFFF == 0 {
            budget.check()?;
        }
        let b = x.trailing_zeros() as usize;
        let row = &basis[b * words..(b + 1) * words];
        let mut w = 0;
        for (a, &r) in acc.iter_mut().zip(row) {
            *a ^= r;
            w += a.count_ones() as usize;
        }
        min_weight = min_weight.min(w);
        all_even &= w % 2 == 0;
        all_doubly_even &= w % 4 == 0;
    }
    Ok(LowDegreeCheck {
        max_deg,
        codewords: total,
        min_weight,
        all_even,
        all_doubly_even,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;
    use crate::text::parse_matrix_rows;

    #[test]
    fn parity_criterion_and_enumeration_agree() {
        let f = Field::prime(2).unwrap();
        let g1 = parse_matrix_rows(
            &f,
            "1, z, 1+z, 1+z, 1, z, 0
             z, 1+z, 0, 1+z, 1, 1, z
             0, z, 1, 0, 1+z, 1+z, 1+z",
        )
        .unwrap();
        assert_eq!(row_weights(&g1), vec![8, 8, 8]);
        assert!(is_even(&g1).unwrap());
        let c = codeword_weights_mod4(&g1, 3, &Budget::unlimited()).unwrap();
        assert!(c.all_even);
        assert_eq!(c.codewords, (1 << 12) - 1);
        assert_eq!(c.min_weight, 8);

        let odd = parse_matrix_rows(&f, "1+z+z^2, 1+z^2").unwrap();
        assert!(!is_even(&odd).unwrap());
        assert!(
            !codeword_weights_mod4(&odd, 4, &Budget::unlimited())
                .unwrap()
                .all_even
        );
    }

    #[test]
    fn doubly_even_extended_hamming() {
        let f = Field::prime(2).unwrap();
        let g = parse_matrix_rows(
            &f,
            "1,0,0,0,0,1,1,1; 0,1,0,0,1,0,1,1; 0,0,1,0,1,1,0,1; 0,0,0,1,1,1,1,0",
        )
        .unwrap();
        let c = codeword_weights_mod4(&g, 0, &Budget::unlimited()).unwrap();
        assert!(c.all_doubly_even);
        assert_eq!(c.min_weight, 4);
    }

    #[test]
    fn non_binary_rejected() {
        let f = Field::prime(3).unwrap();
        let g = parse_matrix_rows(&f, "1, 1").unwrap();
        assert_eq!(is_even(&g).unwrap_err(), MetricsError::NotBinary(3));
    }
}
