//! Shift-register trellis of a minimal generator matrix.
//!
//! Row `i` of `G` owns a register holding its last `ν_i` inputs, so the
//! state space has `q^δ` elements. States and inputs are packed as base-`q`
//! integers; register `i` occupies digits `off_i .. off_i + ν_i`, most
//! recent input first.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use crate::gf::Field;
use crate::polymat::PolyMatrix;

use super::MetricsError;

/// Upper limit on `states * inputs`, keeping the edge table under ~80 MB.
pub const MAX_EDGES: usize = 1 << 24;

pub struct Trellis {
    field: Field,
    n: usize,
    states: usize,
    inputs: usize,
    next: Vec<u32>,
    weight: Vec<u8>,
}

impl Trellis {
    /// Builds the edge table. `G` must be minimal; this is not re-checked.
    /// Fails if the trellis is too large or has a zero-weight cycle (a
    /// catastrophic encoder).
    pub fn build(g: &PolyMatrix) -> Result<Trellis, MetricsError> {
        let field = g.field().clone();
        let (k, n) = (g.rows(), g.cols());
        let q = field.q();
        let nu: Vec<usize> = g.row_degrees().iter().map(|d| d.unwrap_or(0)).collect();
        let delta: usize = nu.iter().sum();
        let states = checked_pow(q, delta).ok_or(MetricsError::TooLarge)?;
        let inputs = checked_pow(q, k).ok_or(MetricsError::TooLarge)?;
        if n > u8::MAX as usize || states.saturating_mul(inputs) > MAX_EDGES {
            return Err(MetricsError::TooLarge);
        }

        let mut offsets = Vec::with_capacity(k);
        let mut acc = 0;
        for &v in &nu {
            offsets.push(acc);
            acc += v;
        }
        // coefficient vectors: coef[i][j][c] = coefficient of z^j in G[i][c]
        let coef: Vec<Vec<Vec<u8>>> = (0..k)
            .map(|i| {
                (0..=nu[i])
                    .map(|j| (0..n).map(|c| g.get(i, c).coeff(j)).collect())
                    .collect()
            })
            .collect();

        let axpy = |out: &mut [u8], a: u8, x: &[u8]| {
            if a != 0 {
                for (o, &xv) in out.iter_mut().zip(x) {
                    *o = field.add(*o, field.mul(a, xv));
                }
            }
        };

        let mut state_out = vec![0u8; states * n];
        let mut digits = vec![0u8; delta];
        for s in 0..states {
            unpack(s, q, &mut digits);
            let out = &mut state_out[s * n..(s + 1) * n];
            for i in 0..k {
                for j in 1..=nu[i] {
                    axpy(out, digits[offsets[i] + j - 1], &coef[i][j]);
                }
            }
        }
        let mut input_out = vec![0u8; inputs * n];
        let mut udig = vec![0u8; k];
        for u in 0..inputs {
            unpack(u, q, &mut udig);
            let out = &mut input_out[u * n..(u + 1) * n];
            for i in 0..k {
                axpy(out, udig[i], &coef[i][0]);
            }
        }

        // next-state map: shift each register by one and insert the input digit
        let pow: Vec<usize> = (0..=delta).map(|e| q.pow(e as u32)).collect();
        let mut next = vec![0u32; states * inputs];
        let mut weight = vec![0u8; states * inputs];
        for s in 0..states {
            unpack(s, q, &mut digits);
            let mut shifted = 0usize;
            for i in 0..k {
                for j in (1..nu[i]).rev() {
                    shifted += digits[offsets[i] + j - 1] as usize * pow[offsets[i] + j];
                }
            }
            let so = &state_out[s * n..(s + 1) * n];
            for u in 0..inputs {
                unpack(u, q, &mut udig);
                let mut ns = shifted;
                for i in 0..k {
                    if nu[i] > 0 {
                        ns += udig[i] as usize * pow[offsets[i]];
                    }
                }
                let io = &input_out[u * n..(u + 1) * n];
                let w = so.iter().zip(io).filter(|(&a, &b)| field.add(a, b) != 0).count();
                next[s * inputs + u] = ns as u32;
                weight[s * inputs + u] = w as u8;
            }
        }

        let t = Trellis {
            field,
            n,
            states,
            inputs,
            next,
            weight,
        };
        if t.has_zero_weight_cycle() {
            return Err(MetricsError::Catastrophic);
        }
        Ok(t)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn states(&self) -> usize {
        self.states
    }

    pub fn inputs(&self) -> usize {
        self.inputs
    }

    #[inline]
    pub fn edge(&self, s: usize, u: usize) -> (usize, u32) {
        let e = s * self.inputs + u;
        (self.next[e] as usize, self.weight[e] as u32)
    }

    /// Zero-weight edges other than the zero self-loop, checked for a cycle
    /// by Kahn's algorithm.
    fn has_zero_weight_cycle(&self) -> bool {
        let mut indeg = vec![0u32; self.states];
        let zero_edges = |s: usize| {
            (0..self.inputs).filter_map(move |u| {
                let (ns, w) = self.edge(s, u);
                (w == 0 && (s, u) != (0, 0)).then_some(ns)
            })
        };
        for s in 0..self.states {
            for ns in zero_edges(s) {
                indeg[ns] += 1;
            }
        }
        let mut queue: VecDeque<usize> = (0..self.states).filter(|&s| indeg[s] == 0).collect();
        let mut seen = 0;
        while let Some(s) = queue.pop_front() {
            seen += 1;
            for ns in zero_edges(s) {
                indeg[ns] -= 1;
                if indeg[ns] == 0 {
                    queue.push_back(ns);
                }
            }
        }
        seen < self.states
    }

    /// Least weight from each state back to the zero state (`h[0] = 0`),
    /// by Dijkstra on the reversed edges.
    pub fn distance_to_zero(&self) -> Vec<u32> {
        let mut rev: Vec<Vec<(u32, u8)>> = vec![Vec::new(); self.states];
        for s in 0..self.states {
            for u in 0..self.inputs {
                let e = s * self.inputs + u;
                rev[self.next[e] as usize].push((s as u32, self.weight[e]));
            }
        }
        let mut dist = vec![u32::MAX; self.states];
        let mut heap = BinaryHeap::new();
        dist[0] = 0;
        heap.push(Reverse((0u32, 0usize)));
        while let Some(Reverse((d, s))) = heap.pop() {
            if d > dist[s] {
                continue;
            }
            for &(p, w) in &rev[s] {
                let nd = d + w as u32;
                if nd < dist[p as usize] {
                    dist[p as usize] = nd;
                    heap.push(Reverse((nd, p as usize)));
                }
            }
        }
        dist
    }

    /// Minimum weight over nonzero codewords: a first edge out of the zero
    /// state with nonzero input, then the cheapest way back.
    pub fn free_distance(&self) -> u32 {
        let h = self.distance_to_zero();
        (1..self.inputs)
            .map(|u| {
                let (ns, w) = self.edge(0, u);
                w + h[ns]
            })
            .min()
            .expect("at least one nonzero input")
    }
}

pub(crate) fn unpack(mut x: usize, q: usize, out: &mut [u8]) {
    for d in out.iter_mut() {
        *d = (x % q) as u8;
        x /= q;
    }
}

fn checked_pow(q: usize, e: usize) -> Option<usize> {
    q.checked_pow(u32::try_from(e).ok()?)
}
