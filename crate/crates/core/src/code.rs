//! Code parameters read off a generator matrix, and column puncturing.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::polymat::{PolyMatError, PolyMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("generator matrix is empty")]
    Empty,
    #[error("dimension k={k} exceeds length n={n}")]
    KExceedsN { k: usize, n: usize },
    #[error("column index {0} is out of range")]
    ColumnOutOfRange(usize),
    #[error("column {0} listed twice")]
    DuplicateColumn(usize),
    #[error("punctured width {width} is below the dimension {k}")]
    TooNarrow { width: usize, k: usize },
    #[error(transparent)]
    Matrix(#[from] PolyMatError),
}

/// Parameters `(n,k,δ;m)_q` of a generator matrix, with the basic and
/// minimal flags. Non-basic or non-minimal inputs are profiled, not rejected.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeProfile {
    pub n: usize,
    pub k: usize,
    /// Maximum degree of the full-size minors (0 if they all vanish).
    pub delta: usize,
    pub memory: usize,
    pub q: usize,
    /// Row degrees sorted non-increasingly (the Forney indices when minimal).
    pub forney: Vec<usize>,
    /// Row degrees in row order; `None` marks a zero row.
    pub row_degrees: Vec<Option<usize>>,
    pub basic: bool,
    pub minimal: bool,
}

impl CodeProfile {
    /// `(n,k,δ;m)_q`
    pub fn id(&self) -> String {
        format!(
            "({},{},{};{})_{}",
            self.n, self.k, self.delta, self.memory, self.q
        )
    }

    pub fn is_block_code(&self) -> bool {
        self.delta == 0
    }
}

impl fmt::Display for CodeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.id())
    }
}

pub fn profile(g: &PolyMatrix) -> Result<CodeProfile, CodeError> {
    let (k, n) = (g.rows(), g.cols());
    if k == 0 || n == 0 {
        return Err(CodeError::Empty);
    }
    if k > n {
        return Err(CodeError::KExceedsN { k, n });
    }
    let row_degrees = g.row_degrees();
    let mut forney: Vec<usize> = row_degrees.iter().map(|d| d.unwrap_or(0)).collect();
    forney.sort_unstable_by(|a, b| b.cmp(a));
    let memory = forney.first().copied().unwrap_or(0);
    let (delta, basic) = match g.complexity() {
        Ok(delta) => (delta, g.right_inverse().is_ok()),
        Err(PolyMatError::RankDeficient) => (0, false),
        Err(e) => return Err(e.into()),
    };
    let minimal = basic && row_degrees.iter().all(Option::is_some) && forney.iter().sum::<usize>() == delta;
    Ok(CodeProfile {
        n,
        k,
        delta,
        memory,
        q: g.field().q(),
        forney,
        row_degrees,
        basic,
        minimal,
    })
}

/// Keeps the listed 1-based columns, in the listed order. The result must
/// be re-profiled; right invertibility and minimality are not preserved in
/// general.
pub fn puncture(g: &PolyMatrix, cols: &[usize]) -> Result<PolyMatrix, CodeError> {
    let mut seen = vec![false; g.cols()];
    let mut zero_based = Vec::with_capacity(cols.len());
    for &c in cols {
        if c == 0 || c > g.cols() {
            return Err(CodeError::ColumnOutOfRange(c));
        }
        if std::mem::replace(&mut seen[c - 1], true) {
            return Err(CodeError::DuplicateColumn(c));
        }
        zero_based.push(c - 1);
    }
    if cols.len() < g.rows() {
        return Err(CodeError::TooNarrow {
            width: cols.len(),
            k: g.rows(),
        });
    }
    Ok(g.select_columns(&zero_based))
}
