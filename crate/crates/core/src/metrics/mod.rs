//! Exact distance computations: free and column distances over the code
//! trellis, block distances, evenness, and truncated weight spectra.

mod block;
mod evenness;
mod spectrum;
mod ternary_mds;
mod trellis;

use serde::Serialize;
use thiserror::Error;

use crate::budget::{Budget, BudgetExceeded};
use crate::code::{profile, CodeError, CodeProfile};
use crate::polymat::PolyMatrix;

pub use block::{block_distance, MAX_BLOCK_ROWS};
pub use evenness::{codeword_weights_mod4, is_even, row_weights, LowDegreeCheck, MAX_MESSAGE_BITS};
pub use spectrum::{weight_spectrum, WeightSpectrum};
pub use ternary_mds::{ternary_family, ternary_family_search, TernarySearchResult};
pub use trellis::Trellis;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MetricsError {
    #[error("generator matrix is not right invertible")]
    NotBasic,
    #[error("generator matrix is not minimal")]
    NotMinimal,
    #[error("state space too large to enumerate")]
    TooLarge,
    #[error("encoder has a zero-weight cycle")]
    Catastrophic,
    #[error("operation requires a binary code (q = {0})")]
    NotBinary(usize),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// Profiles `g` and rejects non-basic or non-minimal matrices.
pub fn require_minimal(g: &PolyMatrix) -> Result<CodeProfile, MetricsError> {
    let p = profile(g)?;
    if !p.basic {
        return Err(MetricsError::NotBasic);
    }
    if !p.minimal {
        return Err(MetricsError::NotMinimal);
    }
    Ok(p)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceReport {
    pub d_free: u32,
    /// `d^c_0, d^c_1, …`
    pub coldist: Vec<u32>,
    /// First `l` with `d^c_l = d_free`.
    pub stabilization_index: usize,
}

pub fn free_distance(g: &PolyMatrix) -> Result<u32, MetricsError> {
    require_minimal(g)?;
    Ok(Trellis::build(g)?.free_distance())
}

/// `d^c_0 ..= d^c_last` by a forward pass over the trellis, depth by depth.
pub fn column_distances(g: &PolyMatrix, last: usize) -> Result<Vec<u32>, MetricsError> {
    require_minimal(g)?;
    let t = Trellis::build(g)?;
    let mut out = Vec::with_capacity(last + 1);
    let mut dp = ColumnDp::new(&t);
    out.push(dp.current());
    while out.len() <= last {
        out.push(dp.step());
    }
    Ok(out)
}

/// Free distance and column distances up to `min_last`, extended until the
/// column distances reach the free distance.
pub fn distance_report(
    g: &PolyMatrix,
    min_last: usize,
    budget: &Budget,
) -> Result<DistanceReport, MetricsError> {
    require_minimal(g)?;
    let t = Trellis::build(g)?;
    budget.check()?;
    let d_free = t.free_distance();
    let mut dp = ColumnDp::new(&t);
    let mut coldist = vec![dp.current()];
    while coldist.len() <= min_last || *coldist.last().unwrap() < d_free {
        budget.check()?;
        coldist.push(dp.step());
    }
    let stabilization_index = coldist
        .iter()
        .position(|&d| d == d_free)
        .expect("column distances reach the free distance");
    Ok(DistanceReport {
        d_free,
        coldist,
        stabilization_index,
    })
}

/// Minimum accumulated weight per end state at the current depth.
struct ColumnDp<'a> {
    t: &'a Trellis,
    cost: Vec<u32>,
}

impl<'a> ColumnDp<'a> {
    fn new(t: &'a Trellis) -> Self {
        let mut cost = vec![u32::MAX; t.states()];
        for u in 1..t.inputs() {
            let (ns, w) = t.edge(0, u);
            cost[ns] = cost[ns].min(w);
        }
        ColumnDp { t, cost }
    }

    fn current(&self) -> u32 {
        *self.cost.iter().min().expect("nonempty")
    }

    fn step(&mut self) -> u32 {
        let mut next = vec![u32::MAX; self.t.states()];
        for (s, &c) in self.cost.iter().enumerate() {
            if c == u32::MAX {
                continue;
            }
            for u in 0..self.t.inputs() {
                let (ns, w) = self.t.edge(s, u);
                next[ns] = next[ns].min(c + w);
            }
        }
        self.cost = next;
        self.current()
    }
}
