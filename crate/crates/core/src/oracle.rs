//! Reference free distance by direct enumeration of messages, sharing no
//! code with the trellis search. Used to cross-check it in tests.

use crate::polymat::PolyMatrix;

/// Minimum weight of `uG` over messages with `u_0 != 0` and `deg u <= max_deg`.
///
/// Messages are enumerated coefficient block by coefficient block. Output
/// block `t` depends only on `u_0..u_t`, so a prefix whose weight already
/// reaches the best found is abandoned. `u_0` is normalized to have its
/// first nonzero entry equal to 1, which does not change weights.
pub fn brute_force_free_distance(g: &PolyMatrix, max_deg: usize) -> usize {
    let f = g.field();
    let (k, n, q) = (g.rows(), g.cols(), f.q());
    let m = g.max_degree().unwrap_or(0);
    let inputs = q.pow(k as u32);
    // prod[j][u] = u · G_j as a length-n vector
    let prod: Vec<Vec<Vec<u8>>> = (0..=m)
        .map(|j| {
            let gj = g.coefficient_matrix(j);
            (0..inputs).map(|u| gj.vec_mul(&digits(u, q, k))).collect()
        })
        .collect();
    let first: Vec<usize> = (1..inputs)
        .filter(|&u| digits(u, q, k).into_iter().find(|&d| d != 0) == Some(1))
        .collect();
    let mut s = Search {
        f,
        n,
        m,
        max_deg,
        inputs,
        prod,
        hist: Vec::with_capacity(max_deg + 1),
        best: usize::MAX,
    };
    for u in first {
        s.hist.push(u);
        s.descend(0);
        s.hist.pop();
    }
    s.best
}

struct Search<'a> {
    f: &'a crate::gf::Field,
    n: usize,
    m: usize,
    max_deg: usize,
    inputs: usize,
    prod: Vec<Vec<Vec<u8>>>,
    hist: Vec<usize>,
    best: usize,
}

impl Search<'_> {
    /// Weight of output block `t` given the message blocks in `hist`.
    fn block_weight(&self, t: usize) -> usize {
        let mut v = vec![0u8; self.n];
        for j in 0..=self.m.min(t) {
            if let Some(&u) = self.hist.get(t - j) {
                for (x, &p) in v.iter_mut().zip(&self.prod[j][u]) {
                    *x = self.f.add(*x, p);
                }
            }
        }
        v.iter().filter(|&&x| x != 0).count()
    }

    fn descend(&mut self, acc: usize) {
        let t = self.hist.len() - 1;
        let acc = acc + self.block_weight(t);
        if acc >= self.best {
            return;
        }
        if t == self.max_deg {
            let tail: usize = (t + 1..=t + self.m).map(|s| self.block_weight(s)).sum();
            self.best = self.best.min(acc + tail);
            return;
        }
        // stopping here is the message with deg u = t
        let tail: usize = (t + 1..=t + self.m).map(|s| self.block_weight(s)).sum();
        self.best = self.best.min(acc + tail);
        for u in 1..self.inputs {
            self.hist.push(u);
            self.descend(acc);
            self.hist.pop();
        }
        // a zero block continues the message without ending it
        self.hist.push(0);
        self.descend(acc);
        self.hist.pop();
    }
}

fn digits(mut x: usize, q: usize, k: usize) -> Vec<u8> {
    (0..k)
        .map(|_| {
            let d = (x % q) as u8;
            x /= q;
            d
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;
    use crate::text::parse_matrix_rows;

    #[test]
    fn small_codes() {
        let f = Field::prime(2).unwrap();
        let g = parse_matrix_rows(&f, "1+z+z^2, 1+z^2").unwrap();
        assert_eq!(brute_force_free_distance(&g, 7), 5);
        let f4 = Field::with_size(4).unwrap();
        let g = parse_matrix_rows(&f4, "1+z, a+a^2*z, a^2+a*z").unwrap();
        assert_eq!(brute_force_free_distance(&g, 5), 6);
    }
}
