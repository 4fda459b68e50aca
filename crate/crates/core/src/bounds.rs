//! Upper bounds on the free distance of convolutional codes, in exact
//! integer arithmetic.
//!
//! Notation: `n` length, `k` dimension, `delta` complexity, `m` memory,
//! `q` field size. For a code with memory `m` the index set used by the
//! Heller and Griesmer bounds starts at 1 when `k*m == delta` and at 0
//! otherwise.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

use crate::code::CodeProfile;
use crate::gf::prime_power;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("need 1 <= k <= n (got n={n}, k={k})")]
    BadDimension { n: usize, k: usize },
    #[error("need k < n (got n={n}, k={k})")]
    NotProper { n: usize, k: usize },
    #[error("need k*m >= delta (got k={k}, m={m}, delta={delta})")]
    MemoryTooSmall { k: usize, m: usize, delta: usize },
    #[error("q={0} is not a prime power")]
    NotPrimePower(u64),
    #[error("column distances computed up to index {have}, need index {need}")]
    ColdistTooShort { have: usize, need: usize },
}

fn check_nk(n: usize, k: usize) -> Result<(), BoundsError> {
    if k == 0 || k > n {
        return Err(BoundsError::BadDimension { n, k });
    }
    Ok(())
}

fn check_conv(n: usize, k: usize, delta: usize, m: usize, q: u64) -> Result<(), BoundsError> {
    check_nk(n, k)?;
    if k >= n {
        return Err(BoundsError::NotProper { n, k });
    }
    if k * m < delta {
        return Err(BoundsError::MemoryTooSmall { k, m, delta });
    }
    if prime_power(q).is_none() {
        return Err(BoundsError::NotPrimePower(q));
    }
    Ok(())
}

/// `(n-k)(floor(delta/k)+1) + delta + 1`
pub fn singleton_generalized(n: usize, k: usize, delta: usize) -> Result<u64, BoundsError> {
    check_nk(n, k)?;
    Ok(((n - k) * (delta / k + 1) + delta + 1) as u64)
}

/// Forney indices forced on an MDS code: with `delta = a*k + r`, `k-r`
/// copies of `a` followed by `r` copies of `a+1`.
pub fn mds_forney_profile(n: usize, k: usize, delta: usize) -> Result<Vec<usize>, BoundsError> {
    check_nk(n, k)?;
    let (a, r) = (delta / k, delta % k);
    let mut v = vec![a; k - r];
    v.extend(std::iter::repeat_n(a + 1, r));
    Ok(v)
}

fn first_index(k: usize, delta: usize, m: usize) -> usize {
    if k * m == delta {
        1
    } else {
        0
    }
}

/// One Heller term: `floor(n(m+i) q^{K-1}(q-1) / (q^K - 1))`, `K = k(m+i)-delta`.
pub fn heller_term(n: usize, k: usize, delta: usize, m: usize, q: u64, i: usize) -> u64 {
    let dim = k * (m + i) - delta;
    let len = BigUint::from(n * (m + i));
    let qb = BigUint::from(q);
    let q_pow = qb.pow(dim as u32);
    let num = len * (&q_pow / &qb) * (q - 1);
    let den = q_pow - 1u32;
    (num / den).to_u64().expect("Heller term fits in u64")
}

/// Heller bound: minimum of the Heller terms over the admissible indices.
///
/// Every term is at least `n(m+i)(q-1)/q`, which grows linearly in `i`;
/// the scan stops once `n(m+i)(q-1)/q - 1` exceeds the running minimum.
pub fn heller(n: usize, k: usize, delta: usize, m: usize, q: u64) -> Result<u64, BoundsError> {
    check_conv(n, k, delta, m, q)?;
    let mut best = u64::MAX;
    let mut i = first_index(k, delta, m);
    loop {
        let len = (n * (m + i)) as u128;
        // envelope - 1 > best  <=>  len(q-1) > q(best+1)
        if best != u64::MAX && len * (q as u128 - 1) > q as u128 * (best as u128 + 1) {
            return Ok(best);
        }
        best = best.min(heller_term(n, k, delta, m, q, i));
        i += 1;
    }
}

/// `sum_{l=0}^{dim-1} ceil(d / q^l)`
pub fn griesmer_sum(d: u64, dim: usize, q: u64) -> u64 {
    let mut sum = 0u64;
    let mut pow: u64 = 1;
    for l in 0..dim {
        if pow >= d {
            // every remaining term is 1
            return sum + (dim - l) as u64;
        }
        sum += d.div_ceil(pow);
        pow = pow.saturating_mul(q);
    }
    sum
}

/// Smallest `i >= 1` with `q^{k(m+i)-delta} >= S(n,k,delta)`.
pub fn griesmer_cutoff(n: usize, k: usize, delta: usize, m: usize, q: u64) -> Result<usize, BoundsError> {
    check_conv(n, k, delta, m, q)?;
    let s = singleton_generalized(n, k, delta)?;
    let mut i = 1;
    loop {
        let dim = (k * (m + i) - delta) as u32;
        if q.checked_pow(dim).is_none_or(|v| v >= s) {
            return Ok(i);
        }
        i += 1;
    }
}

/// Griesmer bound: the largest `d' <= S(n,k,delta)` satisfying the Griesmer
/// inequality of every degree-truncated subcode up to the cutoff index.
pub fn griesmer_conv(n: usize, k: usize, delta: usize, m: usize, q: u64) -> Result<u64, BoundsError> {
    let i0 = griesmer_cutoff(n, k, delta, m, q)?;
    let s = singleton_generalized(n, k, delta)?;
    let start = first_index(k, delta, m);
    let feasible =
        |d: u64| (start..=i0).all(|i| griesmer_sum(d, k * (m + i) - delta, q) <= (n * (m + i)) as u64);
    Ok((1..=s).rev().find(|&d| feasible(d)).unwrap_or(1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BlockBounds {
    pub singleton: u64,
    pub plotkin: u64,
    pub griesmer: u64,
}

/// Singleton, Plotkin and Griesmer bounds for an `(n,k)_q` block code.
pub fn block_bounds(n: usize, k: usize, q: u64) -> Result<BlockBounds, BoundsError> {
    check_nk(n, k)?;
    if k >= n {
        return Err(BoundsError::NotProper { n, k });
    }
    if prime_power(q).is_none() {
        return Err(BoundsError::NotPrimePower(q));
    }
    let qb = BigUint::from(q);
    let qk = qb.pow(k as u32);
    let plotkin = (BigUint::from(n) * (&qk / &qb) * (q - 1)) / (qk - 1u32);
    let griesmer = (1..=n as u64)
        .rev()
        .find(|&d| griesmer_sum(d, k, q) <= n as u64)
        .unwrap_or(1);
    Ok(BlockBounds {
        singleton: (n - k + 1) as u64,
        plotkin: plotkin.to_u64().expect("Plotkin bound fits in u64"),
        griesmer,
    })
}

/// Lower bound on the field size of an MDS code, as the exact fraction
/// `numerator/denominator`, and the smallest prime power meeting it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MdsFieldBound {
    pub numerator: u64,
    pub denominator: u64,
    pub q_min: u64,
}

pub fn mds_min_field(n: usize, k: usize, delta: usize) -> Result<MdsFieldBound, BoundsError> {
    check_nk(n, k)?;
    if k >= n {
        return Err(BoundsError::NotProper { n, k });
    }
    let d = singleton_generalized(n, k, delta)?;
    let m = *mds_forney_profile(n, k, delta)?.iter().max().unwrap_or(&0);
    let (num, den) = if k == 1 || k * m == delta + 1 {
        (d, (n - k + 1) as u64)
    } else {
        (d, 1)
    };
    let g = gcd(num, den);
    let (num, den) = (num / g, den / g);
    let ceil = num.div_ceil(den).max(2);
    let q_min = (ceil..)
        .find(|&v| prime_power(v).is_some())
        .expect("prime powers are unbounded");
    Ok(MdsFieldBound {
        numerator: num,
        denominator: den,
        q_min,
    })
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MdsFlags {
    pub is_mds: bool,
    /// Earliest column-distance index at which an MDS code can reach its
    /// free distance: `floor(delta/k) + ceil(delta/(n-k))`.
    pub strongly_mds_index: usize,
    pub is_strongly_mds: bool,
    pub is_compact: bool,
}

/// MDS, strongly-MDS and compactness flags for a profiled code with free
/// distance `d` and column distances `coldist[0..]`.
pub fn mds_flags(p: &CodeProfile, d: u64, coldist: &[u64]) -> Result<MdsFlags, BoundsError> {
    check_nk(p.n, p.k)?;
    if p.k >= p.n {
        return Err(BoundsError::NotProper { n: p.n, k: p.k });
    }
    let s = singleton_generalized(p.n, p.k, p.delta)?;
    let idx = p.delta / p.k + p.delta.div_ceil(p.n - p.k);
    let dc = *coldist.get(idx).ok_or(BoundsError::ColdistTooShort {
        have: coldist.len().saturating_sub(1),
        need: idx,
    })?;
    let mut sorted = p.forney.clone();
    sorted.sort_unstable();
    let is_mds = d == s;
    Ok(MdsFlags {
        is_mds,
        strongly_mds_index: idx,
        is_strongly_mds: is_mds && dc == d,
        is_compact: sorted == mds_forney_profile(p.n, p.k, p.delta)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub singleton_gen: u64,
    pub heller: u64,
    pub griesmer: u64,
    pub i0: usize,
    /// Present for block-code parameters (`delta = m = 0`).
    pub block: Option<BlockBounds>,
    pub mds_min_field: MdsFieldBound,
    pub mds_forney: Vec<usize>,
}

pub fn bounds_report(
    n: usize,
    k: usize,
    delta: usize,
    m: usize,
    q: u64,
) -> Result<BoundsReport, BoundsError> {
    check_conv(n, k, delta, m, q)?;
    Ok(BoundsReport {
        singleton_gen: singleton_generalized(n, k, delta)?,
        heller: heller(n, k, delta, m, q)?,
        griesmer: griesmer_conv(n, k, delta, m, q)?,
        i0: griesmer_cutoff(n, k, delta, m, q)?,
        block: if delta == 0 && m == 0 {
            Some(block_bounds(n, k, q)?)
        } else {
            None
        },
        mds_min_field: mds_min_field(n, k, delta)?,
        mds_forney: mds_forney_profile(n, k, delta)?,
    })
}
