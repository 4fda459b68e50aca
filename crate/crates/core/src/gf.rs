//! Table-backed arithmetic in small finite fields GF(p^m), p^m <= 256.
//!
//! Elements are stored as a `u8` index: the base-p digits of the index are
//! the coefficients of the element written as a polynomial in the adjoined
//! root (least significant digit = constant term). Multiplication goes
//! through log/antilog tables relative to a canonical primitive element,
//! which is printed as `a` in the text grammar.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Largest supported field size.
pub const MAX_FIELD_SIZE: usize = 256;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field of size {0} exceeds the supported maximum of 256 elements")]
    TooLarge(u64),
    #[error("modulus must be monic of degree {expected} with coefficients below {p}")]
    BadModulus { expected: u32, p: u32 },
    #[error("modulus is reducible over GF({0})")]
    Reducible(u32),
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("zero has no multiplicative inverse")]
    DivisionByZero,
    #[error("element index {0} is out of range")]
    OutOfRange(usize),
    #[error("cannot parse field element `{0}`")]
    Parse(String),
}

/// Moduli fixed for the fields used throughout the code tables:
/// `a^2+a+1`, `a^3+a+1`, `a^4+a+1` (coefficients low to high).
const DEFAULT_MODULI: [(u32, u32, &[u8]); 3] = [
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
];

struct Tables {
    p: u32,
    m: u32,
    q: usize,
    modulus: Vec<u8>,
    generator: u8,
    add: Vec<u8>,
    neg: Vec<u8>,
    // exp has length 2(q-1) so that exp[log a + log b] needs no reduction
    exp: Vec<u8>,
    log: Vec<u16>,
}

/// A finite field GF(p^m) together with its arithmetic tables.
///
/// Cloning is cheap (the tables are shared). Equality is structural on
/// `(p, m, modulus)`.
#[derive(Clone)]
pub struct Field {
    tables: Arc<Tables>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.tables, &other.tables)
            || (self.tables.p == other.tables.p
                && self.tables.m == other.tables.m
                && self.tables.modulus == other.tables.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q())?;
        if self.m() > 1 {
            write!(f, "[{}]", self.modulus_string())?;
        }
        Ok(())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q())
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` into `(p, m)` with `q = p^m`, if `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p as u32, m))
}

// Dense polynomial helpers over GF(p), used only while building tables.
fn poly_mulmod(a: &[u8], b: &[u8], modulus: &[u8], p: u32) -> Vec<u8> {
    let m = modulus.len() - 1;
    let mut prod = vec![0u32; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u32 * y as u32) % p;
        }
    }
    for top in (m..prod.len()).rev() {
        let c = prod[top];
        if c == 0 {
            continue;
        }
        // modulus is monic: subtract c * z^(top-m) * modulus
        for (k, &mk) in modulus.iter().enumerate() {
            let idx = top - m + k;
            prod[idx] = (prod[idx] + p * p - c * mk as u32 % p) % p;
        }
    }
    prod.truncate(m);
    prod.resize(m, 0);
    prod.into_iter().map(|c| c as u8).collect()
}

fn digits(mut v: usize, p: u32, m: u32) -> Vec<u8> {
    (0..m)
        .map(|_| {
            let d = (v % p as usize) as u8;
            v /= p as usize;
            d
        })
        .collect()
}

fn undigits(d: &[u8], p: u32) -> usize {
    d.iter().rev().fold(0, |acc, &c| acc * p as usize + c as usize)
}

fn poly_rem(a: &[u8], b: &[u8], p: u32) -> Vec<u8> {
    // b need not be monic; p is prime so the leading coefficient is invertible
    let mut r: Vec<u32> = a.iter().map(|&c| c as u32).collect();
    let db = b.len() - 1;
    let lead = b[db] as u32;
    let lead_inv = (1..p).find(|x| x * lead % p == 1).unwrap_or(1);
    while r.len() > db {
        let top = r.len() - 1;
        let c = r[top] * lead_inv % p;
        if c != 0 {
            for (k, &bk) in b.iter().enumerate() {
                let idx = top - db + k;
                r[idx] = (r[idx] + p * p - c * bk as u32 % p) % p;
            }
        }
        r.pop();
    }
    r.into_iter().map(|c| c as u8).collect()
}

/// Irreducibility over GF(p) by trial division with every monic polynomial
/// of degree up to half the degree of `f`.
pub fn is_irreducible(f: &[u8], p: u32) -> bool {
    let deg = f.len() - 1;
    if deg <= 1 {
        return deg == 1;
    }
    for d in 1..=deg / 2 {
        let count = (p as usize).pow(d as u32);
        for low in 0..count {
            let mut g = digits(low, p, d as u32);
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// Builds GF(p^m). For `m > 1` and no explicit modulus, q in {4, 8, 16}
    /// uses the table moduli above; other extension fields use the smallest
    /// primitive polynomial (ordered by coefficient index).
    pub fn new(p: u32, m: u32, modulus: Option<&[u8]>) -> Result<Field, GfError> {
        if !is_prime(p as u64) {
            return Err(GfError::NotPrime(p));
        }
        if m == 0 {
            return Err(GfError::ZeroDegree);
        }
        let q = (p as u64).checked_pow(m).unwrap_or(u64::MAX);
        if q > MAX_FIELD_SIZE as u64 {
            return Err(GfError::TooLarge(q));
        }
        let modulus = match modulus {
            Some(given) => {
                let given: Vec<u8> = given.to_vec();
                if given.len() != m as usize + 1
                    || given[m as usize] != 1
                    || given.iter().any(|&c| c as u32 >= p)
                {
                    return Err(GfError::BadModulus { expected: m, p });
                }
                if !is_irreducible(&given, p) {
                    return Err(GfError::Reducible(p));
                }
                given
            }
            None if m == 1 => vec![0, 1],
            None => DEFAULT_MODULI
                .iter()
                .find(|(dp, dm, _)| *dp == p && *dm == m)
                .map(|(_, _, f)| f.to_vec())
                .unwrap_or_else(|| smallest_primitive(p, m)),
        };
        Ok(Field {
            tables: Arc::new(build_tables(p, m, modulus)),
        })
    }

    pub fn prime(p: u32) -> Result<Field, GfError> {
        Field::new(p, 1, None)
    }

    /// The default field with `q` elements.
    pub fn with_size(q: u64) -> Result<Field, GfError> {
        let (p, m) = prime_power(q).ok_or(GfError::NotPrimePower(q))?;
        if q > MAX_FIELD_SIZE as u64 {
            return Err(GfError::TooLarge(q));
        }
        Field::new(p, m, None)
    }

    pub fn p(&self) -> u32 {
        self.tables.p
    }

    pub fn m(&self) -> u32 {
        self.tables.m
    }

    pub fn q(&self) -> usize {
        self.tables.q
    }

    /// Modulus coefficients, constant term first, including the leading 1.
    pub fn modulus(&self) -> &[u8] {
        &self.tables.modulus
    }

    /// The canonical primitive element.
    pub fn generator(&self) -> u8 {
        self.tables.generator
    }

    pub fn is_prime_field(&self) -> bool {
        self.tables.m == 1
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.tables.add[a as usize * self.tables.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.tables.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        if a == 0 || b == 0 {
            return 0;
        }
        let t = &self.tables;
        t.exp[t.log[a as usize] as usize + t.log[b as usize] as usize]
    }

    pub fn inv(&self, a: u8) -> Result<u8, GfError> {
        if a == 0 {
            return Err(GfError::DivisionByZero);
        }
        let t = &self.tables;
        let l = t.log[a as usize] as usize;
        Ok(t.exp[(t.q - 1 - l) % (t.q - 1)])
    }

    pub fn div(&self, a: u8, b: u8) -> Result<u8, GfError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `generator^k`, for any `k`.
    pub fn gen_pow(&self, k: usize) -> u8 {
        self.tables.exp[k % (self.tables.q - 1)]
    }

    pub fn pow(&self, a: u8, k: usize) -> u8 {
        if k == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let l = self.tables.log[a as usize] as usize;
        self.gen_pow(l * k % (self.tables.q - 1))
    }

    /// Discrete logarithm to the canonical generator; `None` for zero.
    pub fn log(&self, a: u8) -> Option<usize> {
        (a != 0).then(|| self.tables.log[a as usize] as usize)
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: u8) -> Option<usize> {
        let l = self.log(a)?;
        let n = self.q() - 1;
        Some(n / gcd(n, l))
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        (0..self.q()).map(|v| v as u8)
    }

    pub fn element(&self, value: usize) -> Result<FieldElement, GfError> {
        if value >= self.q() {
            return Err(GfError::OutOfRange(value));
        }
        Ok(FieldElement {
            value: value as u8,
            field: self.clone(),
        })
    }

    /// Parses an element: integers `0..p-1` in prime fields; `0`, `1`, `a`,
    /// `a^k` in extension fields (`α`, `β`, `γ` are accepted for `a`).
    pub fn parse_element(&self, text: &str) -> Result<u8, GfError> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let err = || GfError::Parse(text.to_string());
        if s.is_empty() {
            return Err(err());
        }
        if let Ok(v) = s.parse::<u64>() {
            if self.is_prime_field() {
                return if v < self.p() as u64 {
                    Ok(v as u8)
                } else {
                    Err(err())
                };
            }
            return match v {
                0 => Ok(0),
                1 => Ok(1),
                _ => Err(err()),
            };
        }
        let rest = s
            .strip_prefix('a')
            .or_else(|| s.strip_prefix('α'))
            .or_else(|| s.strip_prefix('β'))
            .or_else(|| s.strip_prefix('γ'))
            .ok_or_else(err)?;
        if self.is_prime_field() {
            return Err(err());
        }
        let k = if rest.is_empty() {
            1
        } else {
            rest.strip_prefix('^')
                .and_then(|e| e.parse::<usize>().ok())
                .ok_or_else(err)?
        };
        Ok(self.gen_pow(k))
    }

    pub fn format_element(&self, a: u8) -> String {
        if self.is_prime_field() || a <= 1 {
            return a.to_string();
        }
        match self.log(a) {
            Some(1) => "a".to_string(),
            Some(l) => format!("a^{l}"),
            None => "0".to_string(),
        }
    }

    /// Modulus as text in the variable `a`, e.g. `a^4+a+1`.
    pub fn modulus_string(&self) -> String {
        let mut terms = Vec::new();
        for (e, &c) in self.modulus().iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match e {
                0 => String::new(),
                1 => "a".to_string(),
                _ => format!("a^{e}"),
            };
            terms.push(match (c, mono.is_empty()) {
                (_, true) => c.to_string(),
                (1, false) => mono,
                (_, false) => format!("{c}*{mono}"),
            });
        }
        terms.join("+")
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn smallest_primitive(p: u32, m: u32) -> Vec<u8> {
    let q = (p as usize).pow(m);
    for low in 0..q {
        let mut f = digits(low, p, m);
        f.push(1);
        if f[0] == 0 || !is_irreducible(&f, p) {
            continue;
        }
        // x is primitive iff its order is q-1
        let x = digits(p as usize, p, m);
        let one = digits(1, p, m);
        let mut acc = x.clone();
        let mut order = 1;
        while acc != one {
            acc = poly_mulmod(&acc, &x, &f, p);
            order += 1;
        }
        if order == q - 1 {
            return f;
        }
    }
    unreachable!("every finite field has a primitive polynomial")
}

fn build_tables(p: u32, m: u32, modulus: Vec<u8>) -> Tables {
    let q = (p as usize).pow(m);
    let mut add = vec![0u8; q * q];
    let mut neg = vec![0u8; q];
    let digit_table: Vec<Vec<u8>> = (0..q).map(|v| digits(v, p, m)).collect();
    for a in 0..q {
        let da = &digit_table[a];
        let dn: Vec<u8> = da.iter().map(|&c| ((p - c as u32) % p) as u8).collect();
        neg[a] = undigits(&dn, p) as u8;
        for b in 0..q {
            let db = &digit_table[b];
            let s: Vec<u8> = da
                .iter()
                .zip(db)
                .map(|(&x, &y)| ((x as u32 + y as u32) % p) as u8)
                .collect();
            add[a * q + b] = undigits(&s, p) as u8;
        }
    }
    // smallest element of multiplicative order q-1
    let one = digit_table[1].clone();
    let mut generator = 0;
    let mut exp_cycle = Vec::new();
    for cand in 2..q.max(3) {
        if q == 2 {
            break;
        }
        let c = &digit_table[cand];
        let mut cycle = vec![1u8];
        let mut acc = c.clone();
        while acc != one {
            cycle.push(undigits(&acc, p) as u8);
            acc = poly_mulmod(&acc, c, &modulus, p);
        }
        if cycle.len() == q - 1 {
            generator = cand as u8;
            exp_cycle = cycle;
            break;
        }
    }
    if q == 2 {
        generator = 1;
        exp_cycle = vec![1];
    }
    let mut log = vec![0u16; q];
    for (i, &v) in exp_cycle.iter().enumerate() {
        log[v as usize] = i as u16;
    }
    let mut exp = exp_cycle.clone();
    exp.extend_from_slice(&exp_cycle);
    Tables {
        p,
        m,
        q,
        modulus,
        generator,
        add,
        neg,
        exp,
        log,
    }
}

/// A field element bound to its field; arithmetic between elements of
/// different fields is an error.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    pub value: u8,
    pub field: Field,
}

impl FieldElement {
    fn check(&self, other: &FieldElement) -> Result<(), GfError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(GfError::FieldMismatch)
        }
    }

    fn with(&self, value: u8) -> FieldElement {
        FieldElement {
            value,
            field: self.field.clone(),
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement, GfError> {
        self.check(other)?;
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement, GfError> {
        self.check(other)?;
        Ok(self.with(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement, GfError> {
        self.check(other)?;
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn invert(&self) -> Result<FieldElement, GfError> {
        Ok(self.with(self.field.inv(self.value)?))
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.format_element(self.value))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.format_element(self.value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_fields() -> Vec<Field> {
        [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16]
            .iter()
            .map(|&q| Field::with_size(q).unwrap())
            .collect()
    }

    #[test]
    fn gf4_generator_relation() {
        let f = Field::new(2, 2, None).unwrap();
        let a = f.generator();
        // a^2 = a + 1
        assert_eq!(f.mul(a, a), f.add(a, 1));
        // a * a^2 = 1
        assert_eq!(f.mul(a, f.gen_pow(2)), 1);
    }

    #[test]
    fn gf8_beta_cubed() {
        let f = Field::with_size(8).unwrap();
        let b = f.generator();
        assert_eq!(f.mul(b, f.gen_pow(2)), f.gen_pow(3));
        assert_eq!(f.gen_pow(3), f.add(b, 1));
    }

    #[test]
    fn gf16_gamma_order_and_inverse() {
        let f = Field::with_size(16).unwrap();
        let g = f.generator();
        assert_eq!(f.gen_pow(4), f.add(g, 1));
        assert_eq!(f.order(g), Some(15));
        assert_eq!(f.inv(g).unwrap(), f.gen_pow(14));
        assert_eq!(f.mul(g, f.gen_pow(14)), 1);
    }

    #[test]
    fn prime_field_basics() {
        let f = Field::prime(5).unwrap();
        assert_eq!(f.mul(2, 3), 1);
        assert_eq!(f.inv(2).unwrap(), 3);
        assert_eq!(f.inv(1).unwrap(), 1);
        assert_eq!(f.add(4, 3), 2);
        assert_eq!(f.neg(2), 3);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Field::new(4, 1, None).unwrap_err(), GfError::NotPrime(4));
        assert!(matches!(Field::new(2, 9, None), Err(GfError::TooLarge(512))));
        assert_eq!(
            Field::new(2, 2, Some(&[1, 0, 1])).unwrap_err(),
            GfError::Reducible(2)
        );
        assert!(matches!(
            Field::new(2, 2, Some(&[1, 1])),
            Err(GfError::BadModulus { .. })
        ));
        assert!(matches!(Field::with_size(6), Err(GfError::NotPrimePower(6))));
        assert_eq!(Field::new(2, 0, None).unwrap_err(), GfError::ZeroDegree);
    }

    #[test]
    fn non_primitive_modulus_still_gets_primitive_generator() {
        // a^4+a^3+a^2+a+1 is irreducible over GF(2) but a has order 5
        let f = Field::new(2, 4, Some(&[1, 1, 1, 1, 1])).unwrap();
        assert_eq!(f.order(f.generator()), Some(15));
        assert_ne!(f, Field::with_size(16).unwrap());
    }

    #[test]
    fn exhaustive_ring_axioms_small_fields() {
        for f in small_fields() {
            let els: Vec<u8> = f.elements().collect();
            for &a in &els {
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &els {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
                assert_eq!(f.mul(a, 1), a);
            }
        }
    }

    #[test]
    fn inverses_and_characteristic_all_fields() {
        for q in 2..=256u64 {
            let Ok(f) = Field::with_size(q) else { continue };
            let g = f.generator();
            assert_eq!(f.pow(g, q as usize - 1), 1);
            for j in 1..q as usize - 1 {
                assert_ne!(f.pow(g, j), 1, "q={q} j={j}");
            }
            for a in f.elements() {
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                let mut s = 0;
                for _ in 0..f.p() {
                    s = f.add(s, a);
                }
                assert_eq!(s, 0);
            }
        }
    }

    #[test]
    fn element_text_round_trip() {
        for f in small_fields() {
            for a in f.elements() {
                let t = f.format_element(a);
                assert_eq!(f.parse_element(&t).unwrap(), a, "{t}");
            }
        }
        let f = Field::with_size(8).unwrap();
        assert_eq!(f.parse_element("β^3").unwrap(), f.gen_pow(3));
        assert!(f.parse_element("2").is_err());
        assert!(Field::prime(5).unwrap().parse_element("5").is_err());
    }

    #[test]
    fn field_element_mismatch() {
        let a = Field::with_size(4).unwrap().element(2).unwrap();
        let b = Field::with_size(8).unwrap().element(2).unwrap();
        assert_eq!(a.mul(&b).unwrap_err(), GfError::FieldMismatch);
        let zero = Field::with_size(4).unwrap().element(0).unwrap();
        assert_eq!(zero.invert().unwrap_err(), GfError::DivisionByZero);
        assert_eq!(a.mul(&a.invert().unwrap()).unwrap().value, 1);
    }
}
