//! Matrices over F[z]: full-size minors, complexity, row degrees, right
//! inverses and row-module membership.

use std::fmt;

use thiserror::Error;

use crate::gf::Field;
use crate::linalg::ConstMatrix;
use crate::poly::Poly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyMatError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("entries belong to different fields")]
    FieldMismatch,
    #[error("matrix has {rows} rows but only {cols} columns")]
    MoreRowsThanColumns { rows: usize, cols: usize },
    #[error("matrix is empty")]
    Empty,
    #[error("all full-size minors vanish")]
    RankDeficient,
    #[error("matrix has no polynomial right inverse (minors have a nonconstant common factor)")]
    NotBasic,
    #[error("row {0} is zero")]
    ZeroRow(usize),
    #[error("vector is not in the row module of the matrix")]
    NotMember,
}

#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn new(
        field: &Field,
        rows: usize,
        cols: usize,
        entries: Vec<Poly>,
    ) -> Result<PolyMatrix, PolyMatError> {
        if entries.len() != rows * cols {
            return Err(PolyMatError::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if entries.iter().any(|e| e.field() != field) {
            return Err(PolyMatError::FieldMismatch);
        }
        Ok(PolyMatrix {
            field: field.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<Poly>>) -> Result<PolyMatrix, PolyMatError> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != cols) {
            return Err(PolyMatError::Shape(format!(
                "row {} has {} entries, expected {cols}",
                bad + 1,
                rows[bad].len()
            )));
        }
        let n_rows = rows.len();
        PolyMatrix::new(field, n_rows, cols, rows.concat())
    }

    pub fn zeros(field: &Field, rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix {
            field: field.clone(),
            rows,
            cols,
            entries: vec![Poly::zero(field); rows * cols],
        }
    }

    pub fn identity(field: &Field, size: usize) -> PolyMatrix {
        PolyMatrix::padded_identity(field, size, size)
    }

    /// `[I_k | 0]` of shape k x n.
    pub fn padded_identity(field: &Field, k: usize, n: usize) -> PolyMatrix {
        let mut m = PolyMatrix::zeros(field, k, n);
        for i in 0..k.min(n) {
            m.set(i, i, Poly::one(field));
        }
        m
    }

    pub fn from_const(c: &ConstMatrix) -> PolyMatrix {
        let f = c.field();
        let mut m = PolyMatrix::zeros(f, c.rows(), c.cols());
        for r in 0..c.rows() {
            for col in 0..c.cols() {
                m.set(r, col, Poly::constant(f, c.get(r, col)));
            }
        }
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Poly {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Poly) {
        assert_eq!(p.field(), &self.field);
        self.entries[r * self.cols + c] = p;
    }

    pub fn row(&self, r: usize) -> &[Poly] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Poly>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut t = PolyMatrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Keeps the given 0-based columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> PolyMatrix {
        let mut m = PolyMatrix::zeros(&self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                m.set(r, j, self.get(r, c).clone());
            }
        }
        m
    }

    pub fn select_rows(&self, rows: &[usize]) -> PolyMatrix {
        let entries = rows.iter().flat_map(|&r| self.row(r).to_vec()).collect();
        PolyMatrix {
            field: self.field.clone(),
            rows: rows.len(),
            cols: self.cols,
            entries,
        }
    }

    /// Largest entry degree, `None` for the zero matrix.
    pub fn max_degree(&self) -> Option<usize> {
        self.entries.iter().map(Poly::deg).max().flatten()
    }

    /// Constant matrix of the coefficients of `z^j`.
    pub fn coefficient_matrix(&self, j: usize) -> ConstMatrix {
        let mut c = ConstMatrix::zeros(&self.field, self.rows, self.cols);
        for r in 0..self.rows {
            for col in 0..self.cols {
                c.set(r, col, self.get(r, col).coeff(j));
            }
        }
        c
    }

    /// Drops every term of degree above `max_deg` in every entry.
    pub fn truncate_degree(&self, max_deg: usize) -> PolyMatrix {
        PolyMatrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.truncate(max_deg)).collect(),
        }
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix, PolyMatError> {
        if self.cols != other.rows {
            return Err(PolyMatError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.field != other.field {
            return Err(PolyMatError::FieldMismatch);
        }
        let mut out = PolyMatrix::zeros(&self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = Poly::zero(&self.field);
                for t in 0..self.cols {
                    acc = &acc + &(self.get(r, t) * other.get(t, c));
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    /// Row vector `u` (length = rows) times the matrix.
    pub fn vec_mul(&self, u: &[Poly]) -> Vec<Poly> {
        assert_eq!(u.len(), self.rows, "message length must equal the row count");
        let mut out = vec![Poly::zero(&self.field); self.cols];
        for (r, ur) in u.iter().enumerate() {
            if ur.is_zero() {
                continue;
            }
            for (c, o) in out.iter_mut().enumerate() {
                *o = &*o + &(ur * self.get(r, c));
            }
        }
        out
    }

    /// All full-size (k x k) minors, keyed by their 0-based column sets in
    /// lexicographic order.
    pub fn full_minors(&self) -> Result<Vec<(Vec<usize>, Poly)>, PolyMatError> {
        self.check_wide()?;
        Ok(combinations(self.cols, self.rows)
            .into_iter()
            .map(|cols| {
                let d = self.select_columns(&cols).det_bareiss();
                (cols, d)
            })
            .collect())
    }

    /// Determinant by Laplace expansion along the first row. Exponential;
    /// meant for small matrices and cross-checks.
    pub fn det_laplace(&self) -> Poly {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let idx: Vec<usize> = (0..self.cols).collect();
        self.laplace(0, &idx)
    }

    fn laplace(&self, row: usize, cols: &[usize]) -> Poly {
        if cols.is_empty() {
            return Poly::one(&self.field);
        }
        let mut acc = Poly::zero(&self.field);
        for (pos, &c) in cols.iter().enumerate() {
            let e = self.get(row, c);
            if e.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = e * &self.laplace(row + 1, &rest);
            acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    /// Determinant by fraction-free (Bareiss) elimination with exact
    /// polynomial division.
    pub fn det_bareiss(&self) -> Poly {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let f = &self.field;
        if n == 0 {
            return Poly::one(f);
        }
        let mut m: Vec<Vec<Poly>> = self.row_vecs();
        let mut negate = false;
        let mut prev = Poly::one(f);
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return Poly::zero(f);
                };
                m.swap(k, swap);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
                }
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        if negate {
            -&det
        } else {
            det
        }
    }

    fn check_wide(&self) -> Result<(), PolyMatError> {
        if self.rows == 0 || self.cols == 0 {
            return Err(PolyMatError::Empty);
        }
        if self.rows > self.cols {
            return Err(PolyMatError::MoreRowsThanColumns {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(())
    }

    /// Maximum degree over all full-size minors.
    pub fn complexity(&self) -> Result<usize, PolyMatError> {
        self.full_minors()?
            .iter()
            .filter_map(|(_, m)| m.deg())
            .max()
            .ok_or(PolyMatError::RankDeficient)
    }

    /// Monic gcd of all full-size minors (zero if they all vanish).
    pub fn minor_gcd(&self) -> Result<Poly, PolyMatError> {
        Ok(self
            .full_minors()?
            .iter()
            .fold(Poly::zero(&self.field), |g, (_, m)| g.gcd(m)))
    }

    /// A polynomial right inverse H (n x k) with G H = I_k.
    ///
    /// Unimodular column operations bring G to `[L | 0]` with L lower
    /// triangular; G is basic exactly when every diagonal entry of L is a
    /// nonzero constant, and then `H = U[:, ..k] * L^-1`.
    pub fn right_inverse(&self) -> Result<PolyMatrix, PolyMatError> {
        self.check_wide()?;
        let (k, n) = (self.rows, self.cols);
        let f = self.field.clone();
        // work on columns: cols[j] = column j of G stacked over column j of U
        let mut cols: Vec<Vec<Poly>> = (0..n)
            .map(|j| {
                let mut col: Vec<Poly> = (0..k).map(|r| self.get(r, j).clone()).collect();
                col.extend((0..n).map(|r| if r == j { Poly::one(&f) } else { Poly::zero(&f) }));
                col
            })
            .collect();
        for i in 0..k {
            loop {
                let piv = (i..n)
                    .filter(|&j| !cols[j][i].is_zero())
                    .min_by_key(|&j| cols[j][i].deg())
                    .ok_or(PolyMatError::NotBasic)?;
                cols.swap(i, piv);
                let mut clean = true;
                for j in i + 1..n {
                    if cols[j][i].is_zero() {
                        continue;
                    }
                    let (q, r) = cols[j][i].div_rem(&cols[i][i]);
                    let (pivot_col, other) = split_pair(&mut cols, i, j);
                    for (t, p) in pivot_col.iter().enumerate() {
                        if !p.is_zero() {
                            other[t] = &other[t] - &(&q * p);
                        }
                    }
                    clean &= r.is_zero();
                }
                if clean {
                    break;
                }
            }
        }
        // L[r][c] = cols[c][r] for r, c < k
        if (0..k).any(|i| cols[i][i].deg() != Some(0)) {
            return Err(PolyMatError::NotBasic);
        }
        let mut linv = vec![vec![Poly::zero(&f); k]; k];
        for c in 0..k {
            let d = f.inv(cols[c][c].coeff(0)).expect("constant diagonal");
            linv[c][c] = Poly::constant(&f, d);
            for r in c + 1..k {
                let mut acc = Poly::zero(&f);
                for t in c..r {
                    acc = &acc + &(&cols[t][r] * &linv[t][c]);
                }
                let inv_rr = f.inv(cols[r][r].coeff(0)).expect("constant diagonal");
                linv[r][c] = (-&acc).scale(inv_rr);
            }
        }
        let mut h = PolyMatrix::zeros(&f, n, k);
        for r in 0..n {
            for c in 0..k {
                let mut acc = Poly::zero(&f);
                for t in c..k {
                    acc = &acc + &(&cols[t][k + r] * &linv[t][c]);
                }
                h.set(r, c, acc);
            }
        }
        Ok(h)
    }

    /// Row degrees; `None` for a zero row.
    pub fn row_degrees(&self) -> Vec<Option<usize>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(Poly::deg).max().flatten())
            .collect()
    }

    /// Row i of the result holds the coefficients of `z^{nu_i}` of row i.
    pub fn leading_row_matrix(&self) -> Result<ConstMatrix, PolyMatError> {
        let mut lead = ConstMatrix::zeros(&self.field, self.rows, self.cols);
        for (r, d) in self.row_degrees().into_iter().enumerate() {
            let d = d.ok_or(PolyMatError::ZeroRow(r))?;
            for c in 0..self.cols {
                lead.set(r, c, self.get(r, c).coeff(d));
            }
        }
        Ok(lead)
    }

    /// An equivalent matrix (same row module) whose leading row matrix has
    /// full rank, by repeatedly lowering the degree of a row involved in a
    /// dependency of the leading coefficients.
    pub fn to_row_reduced(&self) -> Result<PolyMatrix, PolyMatError> {
        let f = self.field.clone();
        let mut g = self.clone();
        loop {
            let lead = g.leading_row_matrix()?;
            let Some(c) = lead.left_kernel_vector() else {
                return Ok(g);
            };
            let deg: Vec<usize> = g.row_degrees().into_iter().map(|d| d.unwrap_or(0)).collect();
            let i = (0..g.rows)
                .filter(|&r| c[r] != 0)
                .max_by_key(|&r| deg[r])
                .expect("kernel vector is nonzero");
            let ci = f.inv(c[i]).expect("nonzero");
            let mut row = g.row(i).to_vec();
            for j in (0..g.rows).filter(|&j| j != i && c[j] != 0) {
                let factor = Poly::monomial(&f, f.mul(c[j], ci), deg[i] - deg[j]);
                for (t, e) in row.iter_mut().enumerate() {
                    *e = &*e + &(&factor * g.get(j, t));
                }
            }
            if row.iter().all(Poly::is_zero) {
                return Err(PolyMatError::RankDeficient);
            }
            for (t, e) in row.into_iter().enumerate() {
                g.set(i, t, e);
            }
        }
    }

    /// Whether the complexity equals the sum of the row degrees. Requires a
    /// basic matrix.
    pub fn is_minimal(&self) -> Result<bool, PolyMatError> {
        self.right_inverse()?;
        let delta = self.complexity()?;
        let degrees = self.row_degrees();
        let sum: usize = degrees
            .iter()
            .enumerate()
            .map(|(r, d)| d.ok_or(PolyMatError::ZeroRow(r)))
            .sum::<Result<usize, _>>()?;
        let by_degree = delta == sum;
        let by_leading = self.leading_row_matrix()?.rank() == self.rows;
        debug_assert_eq!(by_degree, by_leading, "minimality criteria disagree");
        Ok(by_degree)
    }

    /// Message `u` with `u G = w`, for a basic G.
    pub fn membership(&self, w: &[Poly]) -> Result<Vec<Poly>, PolyMatError> {
        let h = self.right_inverse()?;
        self.membership_with(&h, w)
    }

    /// As [`membership`](Self::membership), reusing a known right inverse.
    pub fn membership_with(&self, h: &PolyMatrix, w: &[Poly]) -> Result<Vec<Poly>, PolyMatError> {
        if w.len() != self.cols {
            return Err(PolyMatError::Shape(format!(
                "vector of length {} against {} columns",
                w.len(),
                self.cols
            )));
        }
        let u = h.vec_mul(w);
        if self.vec_mul(&u) == w {
            Ok(u)
        } else {
            Err(PolyMatError::NotMember)
        }
    }

    /// Row-echelon basis of the F[z]-row module, computed with unimodular
    /// row operations (Euclidean reduction column by column). Pivots are
    /// monic and strictly move right; zero rows are dropped.
    pub fn row_echelon(&self) -> PolyMatrix {
        let f = &self.field;
        let mut rows = self.row_vecs();
        let mut r = 0;
        for c in 0..self.cols {
            if r == rows.len() {
                break;
            }
            while let Some(piv) = (r..rows.len())
                .filter(|&i| !rows[i][c].is_zero())
                .min_by_key(|&i| rows[i][c].deg())
            {
                rows.swap(r, piv);
                let mut clean = true;
                for i in r + 1..rows.len() {
                    if rows[i][c].is_zero() {
                        continue;
                    }
                    let (q, rem) = rows[i][c].div_rem(&rows[r][c]);
                    let (pivot_row, other) = split_pair(&mut rows, r, i);
                    for (t, p) in pivot_row.iter().enumerate() {
                        if !p.is_zero() {
                            other[t] = &other[t] - &(&q * p);
                        }
                    }
                    clean &= rem.is_zero();
                }
                if clean {
                    let inv = f.inv(rows[r][c].leading()).expect("nonzero pivot");
                    for e in rows[r].iter_mut() {
                        *e = e.scale(inv);
                    }
                    r += 1;
                    break;
                }
            }
        }
        rows.truncate(r);
        let n_rows = rows.len();
        PolyMatrix {
            field: f.clone(),
            rows: n_rows,
            cols: self.cols,
            entries: rows.concat(),
        }
    }

    /// Rank over the rational function field F(z).
    pub fn rank(&self) -> usize {
        self.row_echelon().rows
    }

    /// Whether `w` lies in the F[z]-row module, given an echelon basis from
    /// [`row_echelon`](Self::row_echelon).
    pub fn echelon_contains(echelon: &PolyMatrix, w: &[Poly]) -> bool {
        let mut w = w.to_vec();
        for r in 0..echelon.rows {
            let row = echelon.row(r);
            let Some(c) = row.iter().position(|p| !p.is_zero()) else {
                continue;
            };
            if w[c].is_zero() {
                continue;
            }
            let Some(q) = w[c].exact_div(&row[c]) else {
                return false;
            };
            for (t, p) in row.iter().enumerate() {
                w[t] = &w[t] - &(&q * p);
            }
        }
        w.iter().all(Poly::is_zero)
    }

    pub fn to_text_rows(&self) -> Vec<String> {
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .map(Poly::to_text)
                    .collect::<Vec<_>>()
                    .join(", ")
            })
            .collect()
    }
}

fn split_pair<T>(v: &mut [T], a: usize, b: usize) -> (&T, &mut T) {
    assert!(a < b);
    let (lo, hi) = v.split_at_mut(b);
    (&lo[a], &mut hi[0])
}

/// All k-subsets of 0..n in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_text_rows() {
            writeln!(f, "[{row}]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_matrix_rows;
    use proptest::prelude::*;

    fn gf2() -> Field {
        Field::prime(2).unwrap()
    }

    fn g1() -> PolyMatrix {
        parse_matrix_rows(
            &gf2(),
            "1, z, 1+z, 1+z, 1, z, 0
             z, 1+z, 0, 1+z, 1, 1, z
             0, z, 1, 0, 1+z, 1+z, 1+z",
        )
        .unwrap()
    }

    fn g_5_2_6_4() -> PolyMatrix {
        parse_matrix_rows(
            &gf2(),
            "1+z^3+z^4, 1+z+z^4, 1+z^3, 1+z^2+z^3, z+z^3+z^4
             1+z^2, 1+z, z^2+z, z^2+z+1, z^2+z+1",
        )
        .unwrap()
    }

    #[test]
    fn complexity_examples() {
        let f = gf2();
        assert_eq!(PolyMatrix::padded_identity(&f, 3, 5).complexity().unwrap(), 0);
        assert_eq!(g1().complexity().unwrap(), 3);
        assert_eq!(g_5_2_6_4().complexity().unwrap(), 6);
        assert_eq!(
            PolyMatrix::zeros(&f, 3, 2).complexity().unwrap_err(),
            PolyMatError::MoreRowsThanColumns { rows: 3, cols: 2 }
        );
        assert_eq!(
            PolyMatrix::zeros(&f, 2, 3).complexity().unwrap_err(),
            PolyMatError::RankDeficient
        );
    }

    #[test]
    fn right_inverse_examples() {
        let f = gf2();
        let a = parse_matrix_rows(&f, "1, z").unwrap();
        let h = a.right_inverse().unwrap();
        assert_eq!(a.mul(&h).unwrap(), PolyMatrix::identity(&f, 1));
        let b = parse_matrix_rows(&f, "z, z^2").unwrap();
        assert_eq!(b.right_inverse().unwrap_err(), PolyMatError::NotBasic);
        let g = g1();
        let h = g.right_inverse().unwrap();
        assert_eq!(g.mul(&h).unwrap(), PolyMatrix::identity(&f, 3));
    }

    #[test]
    fn row_degrees_and_minimality() {
        let f = gf2();
        assert_eq!(g1().row_degrees(), vec![Some(1); 3]);
        assert_eq!(g_5_2_6_4().row_degrees(), vec![Some(4), Some(2)]);
        assert!(g1().is_minimal().unwrap());
        let nm = parse_matrix_rows(&f, "1, z\n z, z^2+1").unwrap();
        assert_eq!(nm.complexity().unwrap(), 0);
        assert!(!nm.is_minimal().unwrap());
        let c = parse_matrix_rows(&f, "1, 1, 0\n0, 1, 1").unwrap();
        assert_eq!(c.row_degrees(), vec![Some(0), Some(0)]);
        assert!(c.is_minimal().unwrap());
        let zero_row = parse_matrix_rows(&f, "1, z\n0, 0").unwrap();
        assert_eq!(
            zero_row.leading_row_matrix().unwrap_err(),
            PolyMatError::ZeroRow(1)
        );
    }

    #[test]
    fn membership_examples() {
        let f = gf2();
        let g = g1();
        let u = g.membership(g.row(0)).unwrap();
        assert_eq!(u, vec![Poly::one(&f), Poly::zero(&f), Poly::zero(&f)]);
        let z = Poly::monomial(&f, 1, 1);
        let w: Vec<Poly> = g
            .row(0)
            .iter()
            .zip(g.row(1))
            .map(|(a, b)| &z * &(a + b))
            .collect();
        assert_eq!(g.membership(&w).unwrap(), vec![z.clone(), z, Poly::zero(&f)]);
        let mut e1 = vec![Poly::zero(&f); 7];
        e1[0] = Poly::one(&f);
        assert_eq!(g.membership(&e1).unwrap_err(), PolyMatError::NotMember);
    }

    #[test]
    fn echelon_membership_matches_right_inverse_route() {
        let g = g1();
        let ech = g.row_echelon();
        assert_eq!(ech.rows(), 3);
        for r in 0..3 {
            assert!(PolyMatrix::echelon_contains(&ech, g.row(r)));
        }
        let f = gf2();
        let mut e1 = vec![Poly::zero(&f); 7];
        e1[0] = Poly::one(&f);
        assert!(!PolyMatrix::echelon_contains(&ech, &e1));
        // z * e1 is in the F(z)-span iff e1 is; a non-saturated module
        let m = parse_matrix_rows(&f, "z, 0\n0, 1").unwrap();
        let ech = m.row_echelon();
        assert!(!PolyMatrix::echelon_contains(
            &ech,
            &[Poly::one(&f), Poly::zero(&f)]
        ));
        assert!(PolyMatrix::echelon_contains(
            &ech,
            &[Poly::monomial(&f, 1, 2), Poly::one(&f)]
        ));
    }

    #[test]
    fn combinations_count() {
        assert_eq!(combinations(15, 4).len(), 1365);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert!(combinations(2, 3).is_empty());
    }

    fn arb_poly_matrix(
        q: u64,
        rows: usize,
        cols: usize,
        max_deg: usize,
    ) -> impl Strategy<Value = PolyMatrix> {
        let f = Field::with_size(q).unwrap();
        let qq = f.q() as u8;
        proptest::collection::vec(proptest::collection::vec(0..qq, max_deg + 1), rows * cols).prop_map(
            move |cs| {
                let entries = cs.into_iter().map(|c| Poly::from_coeffs(&f, c)).collect();
                PolyMatrix::new(&f, rows, cols, entries).unwrap()
            },
        )
    }

    #[test]
    fn row_reduction_to_minimal() {
        let f = Field::prime(2).unwrap();
        let g = parse_matrix_rows(&f, "1, z; z, z^2+1").unwrap();
        assert!(!g.is_minimal().unwrap());
        let r = g.to_row_reduced().unwrap();
        assert_eq!(r, PolyMatrix::identity(&f, 2));
        let g1 = parse_matrix_rows(
            &f,
            "1, z, 1+z, 1+z, 1, z, 0
             z, 1+z, 0, 1+z, 1, 1, z
             0, z, 1, 0, 1+z, 1+z, 1+z",
        )
        .unwrap();
        assert_eq!(g1.to_row_reduced().unwrap(), g1);
        // a unimodular mix of G1's rows reduces back to degree 3
        let mut mixed = g1.clone();
        for c in 0..7 {
            let e = mixed.get(0, c) + &(&Poly::monomial(&f, 1, 2) * g1.get(1, c));
            mixed.set(0, c, e);
        }
        let red = mixed.to_row_reduced().unwrap();
        assert!(red.is_minimal().unwrap());
        assert_eq!(red.complexity().unwrap(), 3);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn laplace_agrees_with_bareiss(m in arb_poly_matrix(3, 4, 4, 2)) {
            prop_assert_eq!(m.det_laplace(), m.det_bareiss());
        }

        #[test]
        fn laplace_agrees_with_bareiss_gf4(m in arb_poly_matrix(4, 4, 4, 2)) {
            prop_assert_eq!(m.det_laplace(), m.det_bareiss());
        }

        #[test]
        fn right_inverse_iff_unit_minor_gcd(m in arb_poly_matrix(2, 2, 4, 2)) {
            let gcd = m.minor_gcd().unwrap();
            match m.right_inverse() {
                Ok(h) => {
                    prop_assert_eq!(gcd.deg(), Some(0));
                    prop_assert_eq!(m.mul(&h).unwrap(), PolyMatrix::identity(m.field(), 2));
                }
                Err(e) => {
                    prop_assert_eq!(e, PolyMatError::NotBasic);
                    prop_assert_ne!(gcd.deg(), Some(0));
                }
            }
        }

        #[test]
        fn complexity_bounded_by_row_degrees(m in arb_poly_matrix(2, 3, 5, 2)) {
            let degs = m.row_degrees();
            if let (Ok(delta), true) = (m.complexity(), degs.iter().all(Option::is_some)) {
                let sum: usize = degs.iter().map(|d| d.unwrap()).sum();
                prop_assert!(delta <= sum);
                let full_rank_leading = m.leading_row_matrix().unwrap().rank() == 3;
                prop_assert_eq!(delta == sum, full_rank_leading);
            }
        }
    }
}
