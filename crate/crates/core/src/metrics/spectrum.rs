//! Truncated weight spectrum over atomic trellis paths.
//!
//! An atomic path leaves the zero state with a nonzero input and returns to
//! it exactly once, at its end. Counts are per path (equivalently per
//! message whose codeword does not split into shorter codewords).

use serde::Serialize;

use crate::budget::Budget;
use crate::polymat::PolyMatrix;

use super::{require_minimal, MetricsError, Trellis};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightSpectrum {
    pub max_weight: u32,
    /// `(weight, number of atomic paths)` for every weight with a nonzero count.
    pub counts: Vec<(u32, u64)>,
}

impl WeightSpectrum {
    pub fn count(&self, w: u32) -> u64 {
        self.counts.iter().find(|(x, _)| *x == w).map_or(0, |&(_, c)| c)
    }
}

pub fn weight_spectrum(
    g: &PolyMatrix,
    max_weight: u32,
    budget: &Budget,
) -> Result<WeightSpectrum, MetricsError> {
    require_minimal(g)?;
    let t = Trellis::build(g)?;
    let h = t.distance_to_zero();
    let mut counts = vec![0u64; max_weight as usize + 1];
    let mut stack: Vec<(usize, u32)> = Vec::new();
    for u in 1..t.inputs() {
        let (ns, w) = t.edge(0, u);
        if ns == 0 {
            if w <= max_weight {
                counts[w as usize] += 1;
            }
        } else if w + h[ns] <= max_weight {
            stack.push((ns, w));
        }
    }
    let mut visited: u64 = 0;
    while let Some((s, acc)) = stack.pop() {
        visited += 1;
        if visited & 0xFFFF == 0 {
            budget.check()?;
        }
        for u in 0..t.inputs() {
            let (ns, w) = t.edge(s, u);
            let a = acc + w;
            if ns == 0 {
                if a <= max_weight {
                    counts[a as usize] += 1;
                }
            } else if a + h[ns] <= max_weight {
                stack.push((ns, a));
            }
        }
    }
    Ok(WeightSpectrum {
        max_weight,
        counts: counts
            .into_iter()
            .enumerate()
            .filter(|&(_, c)| c > 0)
            .map(|(w, c)| (w as u32, c))
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;
    use crate::text::parse_matrix_rows;

    #[test]
    fn octal_75_spectrum() {
        // transfer function D^5/(1-2D): 1, 2, 4, 8 paths of weight 5, 6, 7, 8
        let g = parse_matrix_rows(&Field::prime(2).unwrap(), "1+z+z^2, 1+z^2").unwrap();
        let s = weight_spectrum(&g, 8, &Budget::unlimited()).unwrap();
        assert_eq!(s.counts, vec![(5, 1), (6, 2), (7, 4), (8, 8)]);
    }

    #[test]
    fn repetition_code() {
        let f = Field::prime(2).unwrap();
        let g = parse_matrix_rows(&f, "1, 1, 1, 1").unwrap();
        let s = weight_spectrum(&g, 10, &Budget::unlimited()).unwrap();
        assert_eq!(s.counts, vec![(4, 1)]);
        assert_eq!(s.count(4), 1);
        assert_eq!(s.count(5), 0);
    }
}
