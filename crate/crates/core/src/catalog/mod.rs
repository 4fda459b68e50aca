//! Embedded code tables with verification drivers.

mod data;

use std::fmt::Display;

use serde::Serialize;
use thiserror::Error;

use crate::bounds::{griesmer_conv, heller, mds_flags, mds_min_field, singleton_generalized, BoundsError};
use crate::budget::{Budget, BudgetExceeded};
use crate::code::{profile, puncture, CodeError, CodeProfile};
use crate::gf::{Field, GfError};
use crate::metrics::{
    codeword_weights_mod4, distance_report, is_even, DistanceReport, MetricsError, MAX_MESSAGE_BITS,
};
use crate::polymat::PolyMatrix;
use crate::skew::{
    ideal_generator_matrix, is_sigma_cyclic, same_row_module, Algebra, Automorphism, SkewError, SkewPoly,
};
use crate::text::{format_matrix_file, parse_matrix_rows, ParseError};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown catalog id {0:?}")]
    UnknownId(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Field(#[from] GfError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Metrics(#[from] MetricsError),
    #[error(transparent)]
    Skew(#[from] SkewError),
}

impl From<BudgetExceeded> for CatalogError {
    fn from(e: BudgetExceeded) -> Self {
        CatalogError::Metrics(MetricsError::Budget(e))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Evenness {
    Even,
    NotEven,
    EvenQuestion,
    DoublyEvenQuestion,
    Unmarked,
}

/// Where an entry's generator matrix comes from.
#[derive(Debug, Clone, Copy)]
pub enum Source {
    /// Field size and rows in matrix text.
    Rows(u64, &'static str),
    /// Same, but the text holds the transpose.
    TransposedRows(u64, &'static str),
    /// 1-based columns of another entry.
    Puncture(&'static str, &'static [usize]),
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub table: u8,
    pub name: Option<&'static str>,
    #[serde(skip)]
    pub source: Source,
    pub expected_g: u64,
    pub expected_coldist_index: Option<usize>,
    pub mds_star: bool,
    pub mds_bullet: bool,
    pub strongly_mds: bool,
    pub evenness: Evenness,
    pub cyclic: bool,
    pub sigma: Option<&'static str>,
    /// The generator polynomial is read off the sum of the first two rows
    /// rather than the first row.
    pub generator_from_row_sum: bool,
}

pub fn list() -> &'static [CatalogEntry] {
    data::ROWS
}

pub fn get(id: &str) -> Result<&'static CatalogEntry, CatalogError> {
    data::ROWS
        .iter()
        .find(|e| e.id == id || e.name == Some(id))
        .ok_or_else(|| CatalogError::UnknownId(id.to_string()))
}

impl CatalogEntry {
    pub fn q(&self) -> u64 {
        match self.source {
            Source::Rows(q, _) | Source::TransposedRows(q, _) => q,
            Source::Puncture(base, _) => get(base).map(|b| b.q()).unwrap_or(0),
        }
    }

    pub fn punctured_from(&self) -> Option<(&'static str, &'static [usize])> {
        match self.source {
            Source::Puncture(b, c) => Some((b, c)),
            _ => None,
        }
    }

    pub fn matrix(&self) -> Result<PolyMatrix, CatalogError> {
        match self.source {
            Source::Rows(q, text) => Ok(parse_matrix_rows(&Field::with_size(q)?, text)?),
            Source::TransposedRows(q, text) => {
                Ok(parse_matrix_rows(&Field::with_size(q)?, text)?.transpose())
            }
            Source::Puncture(base, cols) => Ok(puncture(&get(base)?.matrix()?, cols)?),
        }
    }

    /// Matrix file text, header included.
    pub fn export(&self) -> Result<String, CatalogError> {
        Ok(format_matrix_file(&self.matrix()?))
    }
}

/// Pairs `(shorter, longer)` where truncating the longer matrix to the
/// shorter one's memory reproduces it exactly.
pub const NESTED_CHAINS: &[(&str, &str)] = &[
    ("(7,3,3;1)_2", "(7,3,6;2)_2"),
    ("(7,3,6;2)_2", "(7,3,9;3)_2"),
    ("(3,1,1;1)_4", "(3,1,2;2)_4"),
    ("(3,1,2;2)_4", "(3,1,3;3)_4"),
    ("(3,1,3;3)_4", "(3,1,4;4)_4"),
    ("(3,1,4;4)_4", "(3,1,5;5)_4"),
    ("(5,2,2;1)_4", "(5,2,4;2)_4"),
];

pub fn is_truncation(short: &PolyMatrix, long: &PolyMatrix) -> bool {
    match short.max_degree() {
        Some(m) => long.truncate_degree(m) == *short,
        None => false,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Reported without an expectation.
    Info,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub expected: String,
    pub computed: String,
    pub status: CheckStatus,
}

impl Check {
    fn eq<T: PartialEq + Display>(name: &'static str, expected: T, computed: T) -> Check {
        Check::cond(
            name,
            expected.to_string(),
            computed.to_string(),
            expected == computed,
        )
    }

    fn cond(name: &'static str, expected: String, computed: String, ok: bool) -> Check {
        Check {
            name,
            expected,
            computed,
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
        }
    }

    fn info(name: &'static str, computed: String) -> Check {
        Check {
            name,
            expected: String::new(),
            computed,
            status: CheckStatus::Info,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LowDegreePolicy {
    Never,
    /// Only rows whose evenness is marked with a question.
    QuestionRows,
    AllBinary,
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub low_degree: LowDegreePolicy,
    pub low_degree_max: usize,
    pub budget: Budget,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            low_degree: LowDegreePolicy::QuestionRows,
            low_degree_max: 6,
            budget: Budget::unlimited(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub id: &'static str,
    pub passed: bool,
    pub profile: CodeProfile,
    pub distances: Option<DistanceReport>,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Recomputes everything the entry claims. Mismatches are report content;
/// errors are reserved for budget exhaustion and malformed data.
pub fn verify(entry: &CatalogEntry, opts: &VerifyOptions) -> Result<VerificationReport, CatalogError> {
    let g = entry.matrix()?;
    let p = profile(&g)?;
    let mut checks = vec![
        Check::eq("profile", entry.id.to_string(), p.id()),
        Check::eq("basic", true, p.basic),
        Check::eq("minimal", true, p.minimal),
    ];
    if !(p.basic && p.minimal) {
        return Ok(finish(entry, p, None, checks));
    }
    let (n, k, delta, m, q) = (p.n, p.k, p.delta, p.memory, p.q as u64);

    let gr = griesmer_conv(n, k, delta, m, q)?;
    checks.push(Check::eq("griesmer", entry.expected_g, gr));
    let h = heller(n, k, delta, m, q)?;
    checks.push(Check::cond(
        "heller_at_least_griesmer",
        format!(">= {gr}"),
        h.to_string(),
        h >= gr,
    ));

    let dr = distance_report(&g, 2 * (delta + 5), &opts.budget)?;
    checks.push(Check::eq("d_free", entry.expected_g, dr.d_free as u64));
    checks.push(match entry.expected_coldist_index {
        Some(i) => Check::eq("stabilization_index", i, dr.stabilization_index),
        None => Check::info("stabilization_index", dr.stabilization_index.to_string()),
    });
    let violation = dr
        .coldist
        .iter()
        .enumerate()
        .find(|&(j, &d)| d as usize > (n - k) * (j + 1) + 1);
    checks.push(Check::cond(
        "coldist_upper_bound",
        format!("d^c_j <= {}(j+1)+1", n - k),
        match violation {
            None => format!("holds for j <= {}", dr.coldist.len() - 1),
            Some((j, d)) => format!("d^c_{j} = {d}"),
        },
        violation.is_none(),
    ));

    let coldist: Vec<u64> = dr.coldist.iter().map(|&d| d as u64).collect();
    let flags = mds_flags(&p, dr.d_free as u64, &coldist)?;
    let s = singleton_generalized(n, k, delta)?;
    checks.push(Check::cond(
        "mds",
        if entry.mds_star {
            format!("d_free = {s}")
        } else {
            format!("d_free < {s}")
        },
        dr.d_free.to_string(),
        flags.is_mds == entry.mds_star,
    ));
    if entry.mds_bullet {
        checks.push(Check::eq("mds_min_field", q, mds_min_field(n, k, delta)?.q_min));
    }
    let strong = format!(
        "d^c_{} = {}",
        flags.strongly_mds_index, coldist[flags.strongly_mds_index]
    );
    checks.push(if entry.strongly_mds {
        Check::cond(
            "strongly_mds",
            format!("d^c_{} = {}", flags.strongly_mds_index, s),
            strong,
            flags.is_strongly_mds,
        )
    } else {
        Check::info(
            "strongly_mds",
            format!("{strong}, strongly MDS: {}", flags.is_strongly_mds),
        )
    });

    if q == 2 {
        evenness_checks(entry, &g, opts, &dr, &mut checks)?;
    }
    if let Some(text) = entry.sigma {
        cyclic_checks(entry, &g, text, &mut checks)?;
    }
    Ok(finish(entry, p, Some(dr), checks))
}

fn finish(
    entry: &CatalogEntry,
    profile: CodeProfile,
    distances: Option<DistanceReport>,
    checks: Vec<Check>,
) -> VerificationReport {
    VerificationReport {
        id: entry.id,
        passed: checks.iter().all(|c| c.status != CheckStatus::Fail),
        profile,
        distances,
        checks,
    }
}

fn verdict(even: bool) -> &'static str {
    if even {
        "even"
    } else {
        "not even"
    }
}

fn evenness_checks(
    entry: &CatalogEntry,
    g: &PolyMatrix,
    opts: &VerifyOptions,
    dr: &DistanceReport,
    checks: &mut Vec<Check>,
) -> Result<(), CatalogError> {
    let even = is_even(g)?;
    let question = matches!(
        entry.evenness,
        Evenness::EvenQuestion | Evenness::DoublyEvenQuestion
    );
    match entry.evenness {
        Evenness::Even | Evenness::NotEven => {
            checks.push(Check::eq(
                "even",
                verdict(entry.evenness == Evenness::Even),
                verdict(even),
            ));
        }
        Evenness::EvenQuestion | Evenness::DoublyEvenQuestion => {
            checks.push(Check::info("even", format!("settled: {}", verdict(even))));
        }
        Evenness::Unmarked => checks.push(Check::info("even", verdict(even).to_string())),
    }
    let run = match opts.low_degree {
        LowDegreePolicy::Never => false,
        LowDegreePolicy::QuestionRows => question,
        LowDegreePolicy::AllBinary => true,
    };
    if !run || g.rows() * (opts.low_degree_max + 1) > MAX_MESSAGE_BITS {
        return Ok(());
    }
    let ld = codeword_weights_mod4(g, opts.low_degree_max, &opts.budget)?;
    checks.push(Check::cond(
        "low_degree_parity",
        format!(
            "all weights {} for deg u <= {}",
            if even { "even" } else { "not all even" },
            ld.max_deg
        ),
        format!("all_even = {} over {} codewords", ld.all_even, ld.codewords),
        ld.all_even == even,
    ));
    checks.push(Check::cond(
        "low_degree_min_weight",
        format!(">= {}", dr.d_free),
        ld.min_weight.to_string(),
        ld.min_weight >= dr.d_free as usize,
    ));
    if entry.evenness == Evenness::DoublyEvenQuestion {
        // a weight = 2 mod 4 settles the question; the other outcome is only evidence
        checks.push(Check::info(
            "doubly_even",
            if ld.all_doubly_even {
                format!("evidence: all weights = 0 mod 4 for deg u <= {}", ld.max_deg)
            } else {
                format!(
                    "settled: not doubly even (weight = 2 mod 4 with deg u <= {})",
                    ld.max_deg
                )
            },
        ));
    }
    Ok(())
}

fn cyclic_checks(
    entry: &CatalogEntry,
    g: &PolyMatrix,
    sigma_text: &str,
    checks: &mut Vec<Check>,
) -> Result<(), CatalogError> {
    let alg = Algebra::new(g.cols(), g.field())?;
    let sigma = Automorphism::parse(&alg, sigma_text)?;
    checks.push(Check::eq("sigma_cyclic", true, is_sigma_cyclic(g, &sigma)?));
    checks.push(Check::eq(
        "identity_not_cyclic",
        false,
        is_sigma_cyclic(g, &Automorphism::identity(&alg))?,
    ));
    let mut gen = SkewPoly::from_vector(&sigma, g.row(0))?;
    if entry.generator_from_row_sum {
        gen = gen.add(&SkewPoly::from_vector(&sigma, g.row(1))?)?;
    }
    let same = match ideal_generator_matrix(&gen) {
        Ok(ig) => same_row_module(&ig, g)?,
        Err(SkewError::NotDirectSummand) => false,
        Err(e) => return Err(e.into()),
    };
    checks.push(Check::cond(
        "generator_polynomial",
        "ideal spans the code".to_string(),
        format!(
            "g = {}: {}",
            gen.to_text(),
            if same { "same module" } else { "different module" }
        ),
        same,
    ));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let t = |n| list().iter().filter(|e| e.table == n).count();
        assert_eq!((t(1), t(2), t(3)), (12, 18, 12));
        let mut ids: Vec<_> = list().iter().map(|e| e.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), 42);
    }

    #[test]
    fn lookups() {
        let e = get("(7,3,3;1)_2").unwrap();
        assert_eq!(
            (e.expected_g, e.expected_coldist_index, e.cyclic),
            (8, Some(2), true)
        );
        assert_eq!(e.sigma, Some("x^5"));
        assert_eq!(get("G1").unwrap().id, e.id);
        let e = get("(3,2,2;1)_5").unwrap();
        assert!(e.mds_star && e.mds_bullet && e.expected_g == 5);
        let e = get("(8,4,4;1)_2").unwrap();
        assert_eq!(
            e.punctured_from(),
            Some(("(15,4,4;1)_2", &[1, 2, 4, 5, 8, 11, 13, 14][..]))
        );
        assert_eq!(e.evenness, Evenness::NotEven);
        assert!(matches!(get("no-such-id"), Err(CatalogError::UnknownId(_))));
    }

    #[test]
    fn profiles_match_ids() {
        for e in list() {
            let p = profile(&e.matrix().unwrap()).unwrap();
            assert_eq!(p.id(), e.id);
            assert!(p.basic && p.minimal, "{}", e.id);
            assert_eq!(p.q as u64, e.q());
        }
    }

    #[test]
    fn nested_chains() {
        for &(a, b) in NESTED_CHAINS {
            let (ga, gb) = (
                get(a).unwrap().matrix().unwrap(),
                get(b).unwrap().matrix().unwrap(),
            );
            assert!(is_truncation(&ga, &gb), "{a} -> {b}");
        }
        // the chain stops at memory two for (5,2,2m;m)_4 and at three for (7,3,3m;m)_2
        for (a, b) in [("(5,2,4;2)_4", "(5,2,6;3)_4"), ("(7,3,9;3)_2", "(7,3,12;4)_2")] {
            let (ga, gb) = (
                get(a).unwrap().matrix().unwrap(),
                get(b).unwrap().matrix().unwrap(),
            );
            assert!(!is_truncation(&ga, &gb), "{a} -> {b}");
        }
    }

    #[test]
    fn export_round_trip() {
        for e in list() {
            let g = e.matrix().unwrap();
            assert_eq!(
                crate::text::parse_matrix_file(&e.export().unwrap()).unwrap(),
                g,
                "{}",
                e.id
            );
        }
    }

    fn quick(id: &str) -> VerificationReport {
        let r = verify(get(id).unwrap(), &VerifyOptions::default()).unwrap();
        assert!(r.passed, "{id}: {:#?}", r.checks);
        r
    }

    #[test]
    fn verify_small_entries() {
        let r = quick("(5,3,4;2)_2");
        assert_eq!(r.distances.as_ref().unwrap().stabilization_index, 7);
        let r = quick("(9,3,1;1)_8");
        assert!(r.check("strongly_mds").unwrap().computed.contains("true"));
        quick("(3,1,4;4)_4");
        quick("(7,3,3;1)_2");
        quick("(5,2,2;1)_16");
        quick("(6,3,3;1)_2");
    }
}
