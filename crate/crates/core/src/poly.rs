//! Univariate polynomials in `z` over a small finite field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::gf::Field;

/// A polynomial with coefficients indexed by the power of `z`.
///
/// Trailing zeros are always stripped, so the zero polynomial has no
/// coefficients and degree `None` (standing in for minus infinity; note that
/// `None < Some(d)` for every `d`, which is the ordering the max/sum
/// conventions need).
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<u8>,
}

impl Poly {
    pub fn zero(field: &Field) -> Poly {
        Poly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field, 1)
    }

    pub fn constant(field: &Field, c: u8) -> Poly {
        Poly::from_coeffs(field, vec![c])
    }

    /// `c * z^e`
    pub fn monomial(field: &Field, c: u8, e: usize) -> Poly {
        let mut coeffs = vec![0; e + 1];
        coeffs[e] = c;
        Poly::from_coeffs(field, coeffs)
    }

    pub fn from_coeffs(field: &Field, mut coeffs: Vec<u8>) -> Poly {
        debug_assert!(coeffs.iter().all(|&c| (c as usize) < field.q()));
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    /// Coefficient of `z^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> u8 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> u8 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    pub fn scale(&self, c: u8) -> Poly {
        let f = &self.field;
        Poly::from_coeffs(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Multiplication by `z^e`.
    pub fn shift(&self, e: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; e];
        coeffs.extend_from_slice(&self.coeffs);
        Poly {
            field: self.field.clone(),
            coeffs,
        }
    }

    /// Drops every term of degree above `max_deg`.
    pub fn truncate(&self, max_deg: usize) -> Poly {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(max_deg + 1);
        Poly::from_coeffs(&self.field, coeffs)
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    ///
    /// Panics on division by the zero polynomial.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let f = &self.field;
        let db = divisor.coeffs.len() - 1;
        let lead_inv = f.inv(divisor.leading()).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return (Poly::zero(f), self.clone());
        }
        let mut quot = vec![0u8; rem.len() - db];
        for top in (db..rem.len()).rev() {
            let c = f.mul(rem[top], lead_inv);
            if c == 0 {
                continue;
            }
            quot[top - db] = c;
            for (k, &dk) in divisor.coeffs.iter().enumerate() {
                let idx = top - db + k;
                rem[idx] = f.sub(rem[idx], f.mul(c, dk));
            }
        }
        (Poly::from_coeffs(f, quot), Poly::from_coeffs(f, rem))
    }

    /// Exact quotient, if `divisor` divides `self`.
    pub fn exact_div(&self, divisor: &Poly) -> Option<Poly> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading()).expect("nonzero");
        self.scale(inv)
    }

    fn combine(&self, other: &Poly, op: impl Fn(u8, u8) -> u8) -> Poly {
        assert_eq!(self.field, other.field, "polynomials over different fields");
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| op(self.coeff(i), other.coeff(i))).collect();
        Poly::from_coeffs(&self.field, coeffs)
    }

    /// Text form, ascending powers: `1+z+a^2*z^3`.
    pub fn to_text(&self) -> String {
        self.to_text_in('z')
    }

    pub fn to_text_in(&self, var: char) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let f = &self.field;
        let mut terms = Vec::new();
        for (e, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mono = match e {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{e}"),
            };
            terms.push(match (c, mono.is_empty()) {
                (_, true) => f.format_element(c),
                (1, false) => mono,
                (_, false) => format!("{}*{mono}", f.format_element(c)),
            });
        }
        terms.join("+")
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let f = self.field.clone();
        self.combine(rhs, |a, b| f.add(a, b))
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let f = self.field.clone();
        self.combine(rhs, |a, b| f.sub(a, b))
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let f = &self.field;
        Poly::from_coeffs(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.field, rhs.field, "polynomials over different fields");
        let f = &self.field;
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(f);
        }
        let mut out = vec![0u8; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::from_coeffs(f, out)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(f: &Field, c: &[u8]) -> Poly {
        Poly::from_coeffs(f, c.to_vec())
    }

    #[test]
    fn degree_conventions() {
        let f = Field::prime(2).unwrap();
        assert_eq!(Poly::zero(&f).deg(), None);
        assert!(Poly::zero(&f).deg() < Some(0));
        assert_eq!(p(&f, &[1, 0, 1, 0, 0]).deg(), Some(2));
        assert_eq!(Poly::monomial(&f, 1, 3).to_text(), "z^3");
    }

    #[test]
    fn division_and_gcd() {
        let f = Field::prime(3).unwrap();
        let a = p(&f, &[2, 0, 1, 1]);
        let b = p(&f, &[1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.deg() < b.deg());
        let g = (&a * &b).gcd(&(&b * &p(&f, &[0, 1])));
        assert_eq!(g, b.monic());
    }

    #[test]
    fn gf4_text() {
        let f = Field::with_size(4).unwrap();
        let a = f.generator();
        let poly = p(&f, &[a, f.gen_pow(2), 1]);
        assert_eq!(poly.to_text(), "a+a^2*z+z^2");
    }
}
