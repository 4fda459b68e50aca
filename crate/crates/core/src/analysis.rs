//! One-shot analysis of a generator matrix, shared by the command line and
//! browser front ends.

use serde::Serialize;

use crate::bounds::{bounds_report, mds_flags, BoundsReport, MdsFlags};
use crate::budget::Budget;
use crate::code::{profile, CodeError, CodeProfile};
use crate::metrics::{
    distance_report, is_even, weight_spectrum, DistanceReport, MetricsError, WeightSpectrum,
};
use crate::polymat::PolyMatrix;

#[derive(Debug, Clone, Copy, Default)]
pub struct AnalyzeOptions {
    /// Report column distances at least up to this index.
    pub coldist: Option<usize>,
    /// Count atomic paths up to this weight.
    pub spectrum: Option<u32>,
    pub budget: Budget,
}

#[derive(Debug, Clone, Serialize)]
pub struct Analysis {
    pub profile: CodeProfile,
    /// Bounds for the profile's parameters; absent when `k = n`.
    pub bounds: Option<BoundsReport>,
    pub distances: Option<DistanceReport>,
    pub mds: Option<MdsFlags>,
    /// Binary codes only.
    pub even: Option<bool>,
    pub spectrum: Option<WeightSpectrum>,
    /// Set when the budget ran out; fields computed before that are kept.
    pub partial: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum AnalyzeError {
    #[error(transparent)]
    Code(#[from] CodeError),
    /// Distances need a basic minimal matrix; the profile is still returned.
    #[error("{error}")]
    Unsupported {
        profile: Box<CodeProfile>,
        error: MetricsError,
    },
}

pub fn analyze(g: &PolyMatrix, opts: &AnalyzeOptions) -> Result<Analysis, AnalyzeError> {
    let p = profile(g)?;
    if !p.basic {
        return Err(unsupported(&p, MetricsError::NotBasic));
    }
    if !p.minimal {
        return Err(unsupported(&p, MetricsError::NotMinimal));
    }
    let mut out = Analysis {
        bounds: bounds_report(p.n, p.k, p.delta, p.memory, p.q as u64).ok(),
        distances: None,
        mds: None,
        even: None,
        spectrum: None,
        partial: false,
        profile: p,
    };
    if out.profile.q == 2 {
        out.even = Some(is_even(g).map_err(|e| unsupported(&out.profile, e))?);
    }
    let (n, k, delta) = (out.profile.n, out.profile.k, out.profile.delta);
    let mds_index = if k < n {
        delta / k + delta.div_ceil(n - k)
    } else {
        0
    };
    let last = opts.coldist.unwrap_or(0).max(mds_index);
    match distance_report(g, last, &opts.budget) {
        Ok(dr) => {
            if k < n {
                let cd: Vec<u64> = dr.coldist.iter().map(|&d| d as u64).collect();
                out.mds = mds_flags(&out.profile, dr.d_free as u64, &cd).ok();
            }
            out.distances = Some(dr);
        }
        Err(MetricsError::Budget(_)) => {
            out.partial = true;
            return Ok(out);
        }
        Err(e) => return Err(unsupported(&out.profile, e)),
    }
    if let Some(w) = opts.spectrum {
        match weight_spectrum(g, w, &opts.budget) {
            Ok(s) => out.spectrum = Some(s),
            Err(MetricsError::Budget(_)) => out.partial = true,
            Err(e) => return Err(unsupported(&out.profile, e)),
        }
    }
    Ok(out)
}

fn unsupported(p: &CodeProfile, error: MetricsError) -> AnalyzeError {
    AnalyzeError::Unsupported {
        profile: Box::new(p.clone()),
        error,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::get;
    use crate::gf::Field;
    use crate::text::parse_matrix_rows;

    #[test]
    fn g1() {
        let g = get("G1").unwrap().matrix().unwrap();
        let a = analyze(
            &g,
            &AnalyzeOptions {
                coldist: Some(4),
                ..Default::default()
            },
        )
        .unwrap();
        let d = a.distances.unwrap();
        assert_eq!((d.d_free, d.stabilization_index), (8, 2));
        assert_eq!(a.even, Some(true));
        assert_eq!(a.bounds.unwrap().griesmer, 8);
        assert!(!a.mds.unwrap().is_mds);
    }

    #[test]
    fn spectrum_and_rejects() {
        let g = get("(5,2,6;3)_2").unwrap().matrix().unwrap();
        let a = analyze(
            &g,
            &AnalyzeOptions {
                spectrum: Some(12),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(a.spectrum.unwrap().count(12), 10);
        let f = Field::prime(2).unwrap();
        let bad = parse_matrix_rows(&f, "z, z^2").unwrap();
        assert!(matches!(
            analyze(&bad, &AnalyzeOptions::default()),
            Err(AnalyzeError::Unsupported { .. })
        ));
        let id = PolyMatrix::identity(&f, 3);
        let a = analyze(&id, &AnalyzeOptions::default()).unwrap();
        assert_eq!(a.distances.unwrap().d_free, 1);
        assert!(a.bounds.is_none());
    }

    #[test]
    fn budget_gives_partial() {
        let g = get("(15,4,12;3)_2").unwrap().matrix().unwrap();
        let a = analyze(
            &g,
            &AnalyzeOptions {
                budget: Budget::seconds(0.0),
                ..Default::default()
            },
        )
        .unwrap();
        assert!(a.partial && a.distances.is_none());
    }
}
