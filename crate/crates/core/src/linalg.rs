//! Dense constant matrices over a finite field.

use std::fmt;

use crate::gf::Field;

#[derive(Clone, PartialEq, Eq)]
pub struct ConstMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl ConstMatrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> ConstMatrix {
        ConstMatrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &Field, size: usize) -> ConstMatrix {
        let mut m = ConstMatrix::zeros(field, size, size);
        for i in 0..size {
            m.set(i, i, 1);
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(field: &Field, rows: &[Vec<u8>]) -> ConstMatrix {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        ConstMatrix {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data: rows.concat(),
        }
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

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Rank by Gaussian elimination on a copy.
    pub fn rank(&self) -> usize {
        let f = &self.field;
        let mut m = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for c in 0..cols {
            if rank == rows {
                break;
            }
            let Some(piv) = (rank..rows).find(|&r| m[r * cols + c] != 0) else {
                continue;
            };
            if piv != rank {
                for j in 0..cols {
                    m.swap(piv * cols + j, rank * cols + j);
                }
            }
            let inv = f.inv(m[rank * cols + c]).expect("pivot is nonzero");
            for r in rank + 1..rows {
                let factor = f.mul(m[r * cols + c], inv);
                if factor == 0 {
                    continue;
                }
                for j in c..cols {
                    let v = f.mul(factor, m[rank * cols + j]);
                    m[r * cols + j] = f.sub(m[r * cols + j], v);
                }
            }
            rank += 1;
        }
        rank
    }

    /// A nonzero `c` with `c * self = 0`, if the rows are dependent.
    pub fn left_kernel_vector(&self) -> Option<Vec<u8>> {
        let f = &self.field;
        let (rows, cols) = (self.rows, self.cols);
        // eliminate on [M | I]; a row whose M part vanishes gives c
        let mut m: Vec<Vec<u8>> = (0..rows)
            .map(|r| {
                let mut v = self.row(r).to_vec();
                v.extend((0..rows).map(|i| u8::from(i == r)));
                v
            })
            .collect();
        let mut rank = 0;
        for c in 0..cols {
            let Some(piv) = (rank..rows).find(|&r| m[r][c] != 0) else {
                continue;
            };
            m.swap(piv, rank);
            let inv = f.inv(m[rank][c]).expect("pivot is nonzero");
            for r in rank + 1..rows {
                let factor = f.mul(m[r][c], inv);
                if factor == 0 {
                    continue;
                }
                for j in 0..cols + rows {
                    let v = f.mul(factor, m[rank][j]);
                    m[r][j] = f.sub(m[r][j], v);
                }
            }
            rank += 1;
        }
        (rank < rows).then(|| m[rank][cols..].to_vec())
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, u: &[u8]) -> Vec<u8> {
        assert_eq!(u.len(), self.rows);
        let f = &self.field;
        let mut out = vec![0u8; self.cols];
        for (r, &ur) in u.iter().enumerate() {
            if ur == 0 {
                continue;
            }
            for (c, o) in out.iter_mut().enumerate() {
                *o = f.add(*o, f.mul(ur, self.get(r, c)));
            }
        }
        out
    }
}

impl fmt::Debug for ConstMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self
                .row(r)
                .iter()
                .map(|&v| self.field.format_element(v))
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
