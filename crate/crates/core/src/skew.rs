//! The algebra `A = F[x]/(x^n - 1)`, its automorphisms, the skew polynomial
//! ring `A[z;σ]` with the rule `a z = z σ(a)`, and σ-cyclic codes.
//!
//! Skew polynomials are stored with left coefficients, `Σ z^j a_j`. The map
//! `p : F[z]^n → A[z;σ]` sends entry `t`, coefficient of `z^j`, to the
//! coefficient of `x^t` in `a_j`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::gf::Field;
use crate::linalg::ConstMatrix;
use crate::poly::Poly;
use crate::polymat::{PolyMatError, PolyMatrix};
use crate::text::{parse_poly_in, ParseError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SkewError {
    #[error("length n={n} is not coprime to the field size q={q}")]
    NotCoprime { n: usize, q: usize },
    #[error("length must be at least 1")]
    ZeroLength,
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("sigma(x) = {0} does not define an automorphism")]
    InvalidAutomorphism(String),
    #[error("skew polynomials use different automorphisms")]
    SigmaMismatch,
    #[error("expected {expected} entries, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("search space of {0} candidates is too large")]
    TooLarge(u128),
    #[error("cannot parse `{0}`")]
    Parse(String),
    #[error("the generator polynomial is zero")]
    ZeroGenerator,
    #[error("the left ideal is not a direct summand of F[z]^n")]
    NotDirectSummand,
    #[error(transparent)]
    Matrix(#[from] PolyMatError),
}

impl From<ParseError> for SkewError {
    fn from(e: ParseError) -> Self {
        SkewError::Parse(e.to_string())
    }
}

/// `F[x]/(x^n - 1)` with `gcd(n, q) = 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct Algebra {
    n: usize,
    field: Field,
}

impl Algebra {
    pub fn new(n: usize, field: &Field) -> Result<Algebra, SkewError> {
        if n == 0 {
            return Err(SkewError::ZeroLength);
        }
        if gcd(n, field.q()) != 1 {
            return Err(SkewError::NotCoprime { n, q: field.q() });
        }
        Ok(Algebra {
            n,
            field: field.clone(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement {
            algebra: self.clone(),
            coeffs: vec![0; self.n],
        }
    }

    pub fn one(&self) -> AlgebraElement {
        self.monomial(1, 0)
    }

    /// `c x^e`, exponent taken mod n.
    pub fn monomial(&self, c: u8, e: usize) -> AlgebraElement {
        let mut a = self.zero();
        a.coeffs[e % self.n] = c;
        a
    }

    pub fn x(&self) -> AlgebraElement {
        self.monomial(1, 1)
    }

    pub fn element(&self, coeffs: Vec<u8>) -> Result<AlgebraElement, SkewError> {
        if coeffs.len() != self.n {
            return Err(SkewError::WrongLength {
                expected: self.n,
                got: coeffs.len(),
            });
        }
        Ok(AlgebraElement {
            algebra: self.clone(),
            coeffs,
        })
    }

    /// Reduces a polynomial (in any variable) mod `x^n - 1`.
    pub fn reduce(&self, p: &Poly) -> AlgebraElement {
        let f = &self.field;
        let mut a = self.zero();
        for (e, &c) in p.coeffs().iter().enumerate() {
            let i = e % self.n;
            a.coeffs[i] = f.add(a.coeffs[i], c);
        }
        a
    }

    /// Parses a polynomial in `x` with coefficients in the field grammar.
    pub fn parse(&self, text: &str) -> Result<AlgebraElement, SkewError> {
        Ok(self.reduce(&parse_poly_in(&self.field, text, 'x')?))
    }

    /// Element with index `v` when coefficient vectors are read as base-q
    /// numbers, `x^0` least significant.
    fn element_at(&self, mut v: u128) -> AlgebraElement {
        let q = self.field.q() as u128;
        let mut a = self.zero();
        for c in a.coeffs.iter_mut() {
            *c = (v % q) as u8;
            v /= q;
        }
        a
    }
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})[x]/(x^{}-1)", self.field.q(), self.n)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    algebra: Algebra,
    coeffs: Vec<u8>,
}

impl AlgebraElement {
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u8 {
        self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let f = &self.algebra.field;
        AlgebraElement {
            algebra: self.algebra.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        let f = &self.algebra.field;
        AlgebraElement {
            algebra: self.algebra.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| f.sub(a, b))
                .collect(),
        }
    }

    /// Cyclic convolution.
    pub fn mul(&self, other: &AlgebraElement) -> AlgebraElement {
        let f = &self.algebra.field;
        let n = self.algebra.n;
        let mut out = vec![0u8; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b != 0 {
                    let t = (i + j) % n;
                    out[t] = f.add(out[t], f.mul(a, b));
                }
            }
        }
        AlgebraElement {
            algebra: self.algebra.clone(),
            coeffs: out,
        }
    }

    pub fn pow(&self, mut e: usize) -> AlgebraElement {
        let mut base = self.clone();
        let mut acc = self.algebra.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn as_poly(&self) -> Poly {
        Poly::from_coeffs(&self.algebra.field, self.coeffs.clone())
    }

    /// Text in `x`, ascending powers: `1+x^2+a*x^3`.
    pub fn to_text(&self) -> String {
        self.as_poly().to_text_in('x')
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// Whether `σ(x) = a` extends to an F-algebra automorphism of `A`:
/// `a^n = 1` and `1, a, …, a^{n-1}` are linearly independent.
pub fn validate_automorphism(a: &AlgebraElement) -> bool {
    let alg = a.algebra();
    if a.pow(alg.n) != alg.one() {
        return false;
    }
    powers_matrix(a).rank() == alg.n
}

/// Rows `1, a, …, a^{n-1}`.
fn powers_matrix(a: &AlgebraElement) -> ConstMatrix {
    let alg = a.algebra();
    let mut rows = Vec::with_capacity(alg.n);
    let mut p = alg.one();
    for _ in 0..alg.n {
        rows.push(p.coeffs.clone());
        p = p.mul(a);
    }
    ConstMatrix::from_rows(&alg.field, &rows)
}

/// An automorphism of `A`, determined by `σ(x)`.
#[derive(Clone, PartialEq, Eq)]
pub struct Automorphism {
    image: AlgebraElement,
    /// `σ(x)^i` for `i < n`.
    powers: Vec<AlgebraElement>,
}

impl Automorphism {
    pub fn new(image: AlgebraElement) -> Result<Automorphism, SkewError> {
        if !validate_automorphism(&image) {
            return Err(SkewError::InvalidAutomorphism(image.to_text()));
        }
        let alg = image.algebra().clone();
        let mut powers = Vec::with_capacity(alg.n);
        let mut p = alg.one();
        for _ in 0..alg.n {
            powers.push(p.clone());
            p = p.mul(&image);
        }
        Ok(Automorphism { image, powers })
    }

    pub fn identity(alg: &Algebra) -> Automorphism {
        Automorphism::new(alg.x()).expect("x defines the identity")
    }

    /// Parses `σ(x)` as a polynomial in `x`.
    pub fn parse(alg: &Algebra, text: &str) -> Result<Automorphism, SkewError> {
        Automorphism::new(alg.parse(text)?)
    }

    pub fn algebra(&self) -> &Algebra {
        self.image.algebra()
    }

    pub fn image_of_x(&self) -> &AlgebraElement {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image == self.algebra().x()
    }

    /// `Σ f_i x^i ↦ Σ f_i σ(x)^i`.
    pub fn apply(&self, a: &AlgebraElement) -> AlgebraElement {
        let f = &self.algebra().field;
        let mut out = self.algebra().zero();
        for (i, &c) in a.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, &p) in out.coeffs.iter_mut().zip(&self.powers[i].coeffs) {
                *o = f.add(*o, f.mul(c, p));
            }
        }
        out
    }

    /// `σ^l(a)`.
    pub fn apply_pow(&self, a: &AlgebraElement, l: usize) -> AlgebraElement {
        (0..l).fold(a.clone(), |acc, _| self.apply(&acc))
    }
}

impl fmt::Debug for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x -> {}", self.image.to_text())
    }
}

/// Largest candidate count accepted by [`enumerate_automorphisms`].
pub const MAX_AUTOMORPHISM_CANDIDATES: u128 = 1 << 20;

/// All automorphisms of `A`, ordered by the base-q index of `σ(x)`.
pub fn enumerate_automorphisms(alg: &Algebra) -> Result<Vec<Automorphism>, SkewError> {
    let total = (alg.field.q() as u128)
        .checked_pow(alg.n as u32)
        .unwrap_or(u128::MAX);
    if total > MAX_AUTOMORPHISM_CANDIDATES {
        return Err(SkewError::TooLarge(total));
    }
    Ok((0..total)
        .map(|v| alg.element_at(v))
        .filter(validate_automorphism)
        .map(|a| Automorphism::new(a).expect("validated"))
        .collect())
}

/// An element `Σ z^j a_j` of `A[z;σ]`.
#[derive(Clone, PartialEq, Eq)]
pub struct SkewPoly {
    sigma: Automorphism,
    coeffs: Vec<AlgebraElement>,
}

impl SkewPoly {
    /// Left coefficients `a_0, a_1, …`; trailing zeros are stripped.
    pub fn new(sigma: &Automorphism, mut coeffs: Vec<AlgebraElement>) -> Result<SkewPoly, SkewError> {
        if coeffs.iter().any(|c| c.algebra() != sigma.algebra()) {
            return Err(SkewError::AlgebraMismatch);
        }
        while coeffs.last().is_some_and(AlgebraElement::is_zero) {
            coeffs.pop();
        }
        Ok(SkewPoly {
            sigma: sigma.clone(),
            coeffs,
        })
    }

    pub fn zero(sigma: &Automorphism) -> SkewPoly {
        SkewPoly {
            sigma: sigma.clone(),
            coeffs: Vec::new(),
        }
    }

    /// `z^j a`.
    pub fn monomial(sigma: &Automorphism, j: usize, a: AlgebraElement) -> SkewPoly {
        let mut coeffs = vec![sigma.algebra().zero(); j];
        coeffs.push(a);
        SkewPoly::new(sigma, coeffs).expect("same algebra")
    }

    pub fn constant(sigma: &Automorphism, a: AlgebraElement) -> SkewPoly {
        SkewPoly::monomial(sigma, 0, a)
    }

    pub fn sigma(&self) -> &Automorphism {
        &self.sigma
    }

    pub fn coeffs(&self) -> &[AlgebraElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn check(&self, other: &SkewPoly) -> Result<(), SkewError> {
        if self.sigma != other.sigma {
            return Err(SkewError::SigmaMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &SkewPoly) -> Result<SkewPoly, SkewError> {
        self.check(other)?;
        let alg = self.sigma.algebra();
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = alg.zero();
        let coeffs = (0..len)
            .map(|j| {
                self.coeffs
                    .get(j)
                    .unwrap_or(&zero)
                    .add(other.coeffs.get(j).unwrap_or(&zero))
            })
            .collect();
        SkewPoly::new(&self.sigma, coeffs)
    }

    /// `(Σ z^j a_j)(Σ z^l b_l) = Σ_t z^t Σ_{j+l=t} σ^l(a_j) b_l`.
    pub fn mul(&self, other: &SkewPoly) -> Result<SkewPoly, SkewError> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(SkewPoly::zero(&self.sigma));
        }
        let alg = self.sigma.algebra();
        let mut out = vec![alg.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (j, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mut twisted = a.clone();
            for (l, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[j + l] = out[j + l].add(&twisted.mul(b));
                }
                twisted = self.sigma.apply(&twisted);
            }
        }
        SkewPoly::new(&self.sigma, out)
    }

    /// Left multiplication by an algebra element.
    pub fn left_mul(&self, a: &AlgebraElement) -> SkewPoly {
        SkewPoly::constant(&self.sigma, a.clone())
            .mul(self)
            .expect("same automorphism")
    }

    /// `p^{-1}`: the vector in `F[z]^n` with entry `t` equal to
    /// `Σ_j coeff_t(a_j) z^j`.
    pub fn to_vector(&self) -> Vec<Poly> {
        let alg = self.sigma.algebra();
        (0..alg.n)
            .map(|t| Poly::from_coeffs(&alg.field, self.coeffs.iter().map(|a| a.coeff(t)).collect()))
            .collect()
    }

    /// `p`: inverse of [`to_vector`](Self::to_vector).
    pub fn from_vector(sigma: &Automorphism, v: &[Poly]) -> Result<SkewPoly, SkewError> {
        let alg = sigma.algebra();
        if v.len() != alg.n {
            return Err(SkewError::WrongLength {
                expected: alg.n,
                got: v.len(),
            });
        }
        if v.iter().any(|p| p.field() != &alg.field) {
            return Err(SkewError::AlgebraMismatch);
        }
        let len = v.iter().filter_map(Poly::deg).max().map_or(0, |d| d + 1);
        let coeffs = (0..len)
            .map(|j| {
                alg.element(v.iter().map(|p| p.coeff(j)).collect())
                    .expect("length n")
            })
            .collect();
        SkewPoly::new(sigma, coeffs)
    }

    /// Parses a sum of terms, each a `*`-product of factors read left to
    /// right in `A[z;σ]`: `z`, `z^j`, a parenthesized polynomial in `x`, or
    /// a field constant / power of `x`. So `z^2*(1+x)` is a left-coefficient
    /// term and `(1+x)*z^2` is normalized through `a z = z σ(a)`.
    pub fn parse(sigma: &Automorphism, text: &str) -> Result<SkewPoly, SkewError> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut total = SkewPoly::zero(sigma);
        for term in split_top_level(&s, '+').ok_or_else(|| SkewError::Parse(text.to_string()))? {
            if term.is_empty() {
                return Err(SkewError::Parse(text.to_string()));
            }
            let mut prod = SkewPoly::constant(sigma, sigma.algebra().one());
            for factor in split_top_level(term, '*').ok_or_else(|| SkewError::Parse(text.to_string()))? {
                prod = prod.mul(&parse_factor(sigma, factor)?)?;
            }
            total = total.add(&prod)?;
        }
        Ok(total)
    }

    /// `a_0+z*(a_1)+z^2*(a_2)…`, omitting zero coefficients.
    pub fn to_text(&self) -> String {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(j, a)| match j {
                0 => a.to_text(),
                1 => format!("z*({})", a.to_text()),
                _ => format!("z^{j}*({})", a.to_text()),
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }
}

impl fmt::Debug for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Display for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

fn parse_factor(sigma: &Automorphism, factor: &str) -> Result<SkewPoly, SkewError> {
    let alg = sigma.algebra();
    let bad = || SkewError::Parse(factor.to_string());
    if let Some(inner) = factor.strip_prefix('(') {
        let inner = inner.strip_suffix(')').ok_or_else(bad)?;
        return Ok(SkewPoly::constant(sigma, alg.parse(inner)?));
    }
    if let Some(rest) = factor.strip_prefix('z') {
        let j = if rest.is_empty() {
            1
        } else {
            rest.strip_prefix('^')
                .and_then(|e| e.parse().ok())
                .ok_or_else(bad)?
        };
        return Ok(SkewPoly::monomial(sigma, j, alg.one()));
    }
    Ok(SkewPoly::constant(sigma, alg.parse(factor)?))
}

/// Splits on `sep` outside parentheses; `None` on unbalanced input.
fn split_top_level(s: &str, sep: char) -> Option<Vec<&str>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return None;
                }
            }
            c if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    (depth == 0).then(|| {
        parts.push(&s[start..]);
        parts
    })
}

/// The n×n matrix with rows `p^{-1}(x^i g)`, satisfying
/// `p(u M) = p(u) g`.
pub fn sigma_circulant(g: &SkewPoly) -> PolyMatrix {
    let alg = g.sigma().algebra();
    let rows: Vec<Vec<Poly>> = (0..alg.n)
        .map(|i| g.left_mul(&alg.monomial(1, i)).to_vector())
        .collect();
    PolyMatrix::from_rows(&alg.field, rows).expect("n rows of length n")
}

/// A minimal, right invertible generator matrix of the code whose
/// polynomial part is `p^{-1}` of the left ideal generated by `g`.
///
/// Circulant rows are scanned in order and kept when they are not in the
/// F[z]-span of the rows kept so far. If the kept rows are dependent the
/// echelon basis of the whole circulant is used instead; a non-minimal basis
/// is row-reduced.
pub fn ideal_generator_matrix(g: &SkewPoly) -> Result<PolyMatrix, SkewError> {
    if g.is_zero() {
        return Err(SkewError::ZeroGenerator);
    }
    let m = sigma_circulant(g);
    let mut kept: Vec<usize> = Vec::new();
    for i in 0..m.rows() {
        let row = m.row(i);
        if row.iter().all(Poly::is_zero) {
            continue;
        }
        let spanned =
            !kept.is_empty() && PolyMatrix::echelon_contains(&m.select_rows(&kept).row_echelon(), row);
        if !spanned {
            kept.push(i);
        }
    }
    let mut basis = m.select_rows(&kept);
    if basis.rank() < basis.rows() {
        basis = m.row_echelon();
    }
    if basis.right_inverse().is_err() {
        return Err(SkewError::NotDirectSummand);
    }
    if !basis.is_minimal()? {
        basis = basis.to_row_reduced()?;
    }
    Ok(basis)
}

/// Whether `p(im G)` is a left ideal: `p^{-1}(x p(v))` must lie in the row
/// module for every row `v` (closure under `z` is automatic).
pub fn is_sigma_cyclic(g: &PolyMatrix, sigma: &Automorphism) -> Result<bool, SkewError> {
    let alg = sigma.algebra();
    if g.cols() != alg.n {
        return Err(SkewError::WrongLength {
            expected: alg.n,
            got: g.cols(),
        });
    }
    if g.field() != &alg.field {
        return Err(SkewError::AlgebraMismatch);
    }
    let h = g.right_inverse()?;
    let x = alg.x();
    for r in 0..g.rows() {
        let v = SkewPoly::from_vector(sigma, g.row(r))?;
        let w = v.left_mul(&x).to_vector();
        match g.membership_with(&h, &w) {
            Ok(_) => {}
            Err(PolyMatError::NotMember) => return Ok(false),
            Err(e) => return Err(e.into()),
        }
    }
    Ok(true)
}

/// Every row of `a` lies in the row module of `b` and vice versa. Both must
/// be basic.
pub fn same_row_module(a: &PolyMatrix, b: &PolyMatrix) -> Result<bool, SkewError> {
    let contained = |x: &PolyMatrix, y: &PolyMatrix| -> Result<bool, SkewError> {
        let h = y.right_inverse()?;
        Ok((0..x.rows()).all(|r| y.membership_with(&h, x.row(r)).is_ok()))
    };
    Ok(contained(a, b)? && contained(b, a)?)
}

/// Serializable summary of an automorphism list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AutomorphismList {
    pub n: usize,
    pub q: usize,
    pub count: usize,
    pub images: Vec<String>,
}

pub fn automorphism_list(alg: &Algebra) -> Result<AutomorphismList, SkewError> {
    let autos = enumerate_automorphisms(alg)?;
    Ok(AutomorphismList {
        n: alg.n,
        q: alg.field.q(),
        count: autos.len(),
        images: autos.iter().map(|a| a.image_of_x().to_text()).collect(),
    })
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_matrix_rows;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn a7() -> Algebra {
        Algebra::new(7, &Field::prime(2).unwrap()).unwrap()
    }

    fn sigma5() -> Automorphism {
        Automorphism::parse(&a7(), "x^5").unwrap()
    }

    fn example_g() -> SkewPoly {
        SkewPoly::parse(&sigma5(), "1+x^2+x^3+x^4 + z*(x+x^2+x^3+x^5)").unwrap()
    }

    fn g1() -> PolyMatrix {
        parse_matrix_rows(
            &Field::prime(2).unwrap(),
            "1, z, 1+z, 1+z, 1, z, 0
             z, 1+z, 0, 1+z, 1, 1, z
             0, z, 1, 0, 1+z, 1+z, 1+z",
        )
        .unwrap()
    }

    #[test]
    fn automorphism_criterion() {
        let alg = a7();
        assert!(validate_automorphism(&alg.x()));
        assert!(validate_automorphism(&alg.parse("x^5").unwrap()));
        assert!(!validate_automorphism(&alg.one()));
        assert!(!validate_automorphism(&alg.zero()));
        assert!(Automorphism::parse(&alg, "1+x").is_err());
    }

    #[test]
    fn count_for_length_seven() {
        let autos = enumerate_automorphisms(&a7()).unwrap();
        assert_eq!(autos.len(), 18);
        assert!(autos.iter().any(Automorphism::is_identity));
        let text: Vec<String> = autos.iter().map(|a| a.image_of_x().to_text()).collect();
        assert!(text.contains(&"x^5".to_string()));
        assert!(text.contains(&"x^2+x^3+x^4+x^5+x^6".to_string()));
    }

    #[test]
    fn gf4_length_three_includes_scaled_x() {
        let alg = Algebra::new(3, &Field::with_size(4).unwrap()).unwrap();
        let autos = enumerate_automorphisms(&alg).unwrap();
        let target = alg.parse("a^2*x").unwrap();
        assert!(autos.iter().any(|s| s.image_of_x() == &target));
    }

    #[test]
    fn algebra_guards() {
        let f2 = Field::prime(2).unwrap();
        assert_eq!(
            Algebra::new(6, &f2).unwrap_err(),
            SkewError::NotCoprime { n: 6, q: 2 }
        );
        let big = Algebra::new(21, &f2).unwrap();
        assert!(matches!(
            enumerate_automorphisms(&big),
            Err(SkewError::TooLarge(_))
        ));
    }

    #[test]
    fn apply_examples() {
        let s = sigma5();
        let alg = a7();
        assert_eq!(s.apply(&alg.parse("x^2").unwrap()), alg.parse("x^3").unwrap());
        assert_eq!(s.apply(&alg.parse("1+x").unwrap()), alg.parse("1+x^5").unwrap());
        let id = Automorphism::identity(&alg);
        let v = alg.parse("1+x^3+x^6").unwrap();
        assert_eq!(id.apply(&v), v);
        assert_eq!(s.apply(&alg.one()), alg.one());
    }

    #[test]
    fn worked_example_products() {
        let g = example_g();
        let alg = a7();
        let s = sigma5();
        let xg = g.left_mul(&alg.x());
        assert_eq!(
            xg,
            SkewPoly::parse(&s, "x+x^3+x^4+x^5 + z*(1+x+x^3+x^6)").unwrap()
        );
        let x2g = g.left_mul(&alg.parse("x^2").unwrap());
        assert_eq!(
            x2g,
            SkewPoly::parse(&s, "x^2+x^4+x^5+x^6 + z*(x+x^4+x^5+x^6)").unwrap()
        );
        let x3g = g.left_mul(&alg.parse("x^3").unwrap());
        assert_eq!(x3g, g.add(&x2g).unwrap());
        assert_eq!(x3g, x2g.left_mul(&alg.x()));
    }

    #[test]
    fn circulant_and_generator_matrix() {
        let m = sigma_circulant(&example_g());
        assert_eq!(m.select_rows(&[0, 1, 2]), g1());
        assert_eq!(ideal_generator_matrix(&example_g()).unwrap(), g1());
        let one = SkewPoly::constant(&sigma5(), a7().one());
        assert_eq!(sigma_circulant(&one), PolyMatrix::identity(a7().field(), 7));
        assert_eq!(
            ideal_generator_matrix(&one).unwrap(),
            PolyMatrix::identity(a7().field(), 7)
        );
        assert_eq!(
            ideal_generator_matrix(&SkewPoly::zero(&sigma5())).unwrap_err(),
            SkewError::ZeroGenerator
        );
    }

    #[test]
    fn not_a_direct_summand() {
        // z * g generates z * S, which is not a direct summand
        let zg = SkewPoly::monomial(&sigma5(), 1, a7().one())
            .mul(&example_g())
            .unwrap();
        assert_eq!(
            ideal_generator_matrix(&zg).unwrap_err(),
            SkewError::NotDirectSummand
        );
    }

    #[test]
    fn cyclicity_of_g1() {
        assert!(is_sigma_cyclic(&g1(), &sigma5()).unwrap());
        assert!(!is_sigma_cyclic(&g1(), &Automorphism::identity(&a7())).unwrap());
    }

    #[test]
    fn text_round_trip() {
        let g = example_g();
        assert_eq!(g.to_text(), "1+x^2+x^3+x^4+z*(x+x^2+x^3+x^5)");
        assert_eq!(SkewPoly::parse(&sigma5(), &g.to_text()).unwrap(), g);
        // right coefficient form: x z = z σ(x) = z x^5
        let s = sigma5();
        assert_eq!(
            SkewPoly::parse(&s, "x*z").unwrap(),
            SkewPoly::parse(&s, "z*(x^5)").unwrap()
        );
        assert_eq!(SkewPoly::parse(&s, "(1+x)*z^2").unwrap().to_text(), "z^2*(1+x^4)");
        assert!(SkewPoly::parse(&s, "z*(1+x").is_err());
        assert!(SkewPoly::parse(&s, "1++x").is_err());
        assert!(SkewPoly::parse(&s, "y").is_err());
    }

    fn random_element(alg: &Algebra, rng: &mut impl Rng) -> AlgebraElement {
        let q = alg.field().q() as u8;
        alg.element((0..alg.n()).map(|_| rng.gen_range(0..q)).collect())
            .unwrap()
    }

    fn random_skew(s: &Automorphism, rng: &mut impl Rng, max_len: usize) -> SkewPoly {
        let len = rng.gen_range(0..=max_len);
        let coeffs = (0..len).map(|_| random_element(s.algebra(), rng)).collect();
        SkewPoly::new(s, coeffs).unwrap()
    }

    fn catalog_sigmas() -> Vec<Automorphism> {
        let mk = |n: usize, q: u64, s: &str| {
            let alg = Algebra::new(n, &Field::with_size(q).unwrap()).unwrap();
            Automorphism::parse(&alg, s).unwrap()
        };
        vec![
            mk(7, 2, "x^5"),
            mk(15, 2, "x+x^7+x^10"),
            mk(15, 2, "x^3+x^5+x^7+x^10+x^12+x^13+x^14"),
            mk(3, 4, "a^2*x"),
            mk(5, 4, "x^2"),
            mk(3, 16, "a^10*x"),
            mk(5, 16, "x^3"),
            mk(7, 8, "x^5"),
            mk(7, 8, "a*x+a*x^2+a^3*x^3+a^3*x^4+a^3*x^5+a^2*x^6"),
        ]
    }

    #[test]
    fn ring_axioms_for_catalog_automorphisms() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for s in catalog_sigmas() {
            for _ in 0..200 {
                let (a, b, c) = (
                    random_skew(&s, &mut rng, 3),
                    random_skew(&s, &mut rng, 3),
                    random_skew(&s, &mut rng, 3),
                );
                let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
                let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
                assert_eq!(ab_c, a_bc, "{s:?}");
                let left = a.mul(&b.add(&c).unwrap()).unwrap();
                assert_eq!(left, a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
                let right = a.add(&b).unwrap().mul(&c).unwrap();
                assert_eq!(right, a.mul(&c).unwrap().add(&b.mul(&c).unwrap()).unwrap());
            }
            let z = SkewPoly::monomial(&s, 1, s.algebra().one());
            for _ in 0..100 {
                let a = random_element(s.algebra(), &mut rng);
                let az = SkewPoly::constant(&s, a.clone()).mul(&z).unwrap();
                assert_eq!(az, SkewPoly::monomial(&s, 1, s.apply(&a)));
            }
        }
    }

    #[test]
    fn p_is_module_isomorphism_and_circulant_identity() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(5);
        for s in catalog_sigmas() {
            let alg = s.algebra().clone();
            let f = alg.field().clone();
            let rand_vec = |rng: &mut rand::rngs::StdRng| -> Vec<Poly> {
                (0..alg.n())
                    .map(|_| {
                        let len = rng.gen_range(0..4);
                        Poly::from_coeffs(&f, (0..len).map(|_| rng.gen_range(0..f.q() as u8)).collect())
                    })
                    .collect()
            };
            let g = random_skew(&s, &mut rng, 3);
            let m = sigma_circulant(&g);
            for _ in 0..100 {
                let u = rand_vec(&mut rng);
                let w = rand_vec(&mut rng);
                let sum: Vec<Poly> = u.iter().zip(&w).map(|(a, b)| a + b).collect();
                let pu = SkewPoly::from_vector(&s, &u).unwrap();
                let pw = SkewPoly::from_vector(&s, &w).unwrap();
                assert_eq!(SkewPoly::from_vector(&s, &sum).unwrap(), pu.add(&pw).unwrap());
                let zu: Vec<Poly> = u.iter().map(|p| p.shift(1)).collect();
                let z = SkewPoly::monomial(&s, 1, alg.one());
                assert_eq!(SkewPoly::from_vector(&s, &zu).unwrap(), z.mul(&pu).unwrap());
                assert_eq!(pu.to_vector(), u);
                let um = m.vec_mul(&u);
                assert_eq!(SkewPoly::from_vector(&s, &um).unwrap(), pu.mul(&g).unwrap());
            }
        }
    }

    proptest! {
        #[test]
        fn identity_sigma_is_commutative(
            a in proptest::collection::vec(proptest::collection::vec(0u8..2, 7), 0..4),
            b in proptest::collection::vec(proptest::collection::vec(0u8..2, 7), 0..4),
        ) {
            let alg = a7();
            let id = Automorphism::identity(&alg);
            let mk = |v: Vec<Vec<u8>>| SkewPoly::new(&id, v.into_iter().map(|c| alg.element(c).unwrap()).collect()).unwrap();
            let (a, b) = (mk(a), mk(b));
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        }
    }
}
