//! Epsilon-coordinate labels for the supported root systems: the fixed
//! linear isometry into an orthonormal coordinate system. For E6 the seventh
//! coordinate carries sqrt(2)/2 realized exactly as (zeta_8 - zeta_8^3)/2.
//! Simple-root coordinates remain the internal truth; these labels are a
//! conformance and display layer.

use super::system::{RootFamily, RootSystem};
use super::RootError;
use crate::exact::{rat, rint, CycNum};

#[derive(Debug, Clone)]
pub struct EpsilonLabeling {
    pub eps_dim: usize,
    simple_labels: Vec<Vec<CycNum>>,
    root_labels: Vec<Vec<CycNum>>,
}

impl EpsilonLabeling {
    pub fn build(rs: &RootSystem) -> Result<Self, RootError> {
        let simple_labels = simple_labels(rs)?;
        let eps_dim = simple_labels[0].len();
        let root_labels = rs
            .roots()
            .iter()
            .map(|coords| combine(&simple_labels, eps_dim, coords))
            .collect();
        Ok(EpsilonLabeling {
            eps_dim,
            simple_labels,
            root_labels,
        })
    }

    pub fn label(&self, root_idx: usize) -> &[CycNum] {
        &self.root_labels[root_idx]
    }

    pub fn label_of_coords(&self, coords: &[i64]) -> Vec<CycNum> {
        combine(&self.simple_labels, self.eps_dim, coords)
    }

    pub fn root_by_label(&self, label: &[CycNum]) -> Option<usize> {
        self.root_labels
            .iter()
            .position(|l| l.iter().zip(label).all(|(a, b)| a == b))
    }

    /// Standard inner product in epsilon coordinates.
    pub fn eps_form(&self, a: &[CycNum], b: &[CycNum]) -> CycNum {
        let mut s = CycNum::zero(1);
        for (x, y) in a.iter().zip(b) {
            if !x.is_zero() && !y.is_zero() {
                s = s.add(&x.mul(y));
            }
        }
        s
    }

    /// The unit vector `eps_i` (1-based).
    pub fn eps(&self, i: usize) -> Vec<CycNum> {
        let mut v = vec![CycNum::zero(1); self.eps_dim];
        v[i - 1] = CycNum::one();
        v
    }
}

fn combine(simple_labels: &[Vec<CycNum>], eps_dim: usize, coords: &[i64]) -> Vec<CycNum> {
    let mut out = vec![CycNum::zero(1); eps_dim];
    for (i, &c) in coords.iter().enumerate() {
        if c == 0 {
            continue;
        }
        for (k, v) in simple_labels[i].iter().enumerate() {
            if !v.is_zero() {
                out[k] = out[k].add(&v.scale(&rint(c)));
            }
        }
    }
    out
}

fn simple_labels(rs: &RootSystem) -> Result<Vec<Vec<CycNum>>, RootError> {
    let n = rs.rank;
    let mut labels = Vec::with_capacity(n);
    match rs.family {
        RootFamily::A => {
            // alpha_i = eps_i - eps_(i+1) in Q^(n+1)
            for i in 0..n {
                let mut v = vec![CycNum::zero(1); n + 1];
                v[i] = CycNum::one();
                v[i + 1] = CycNum::from_int(-1);
                labels.push(v);
            }
        }
        RootFamily::D => {
            // alpha_i = eps_i - eps_(i+1) for i < n, alpha_n = eps_(n-1) + eps_n
            for i in 0..n - 1 {
                let mut v = vec![CycNum::zero(1); n];
                v[i] = CycNum::one();
                v[i + 1] = CycNum::from_int(-1);
                labels.push(v);
            }
            let mut v = vec![CycNum::zero(1); n];
            v[n - 2] = CycNum::one();
            v[n - 1] = CycNum::one();
            labels.push(v);
        }
        RootFamily::E6 => {
            // chain alpha_1..alpha_5 is eps_i - eps_(i+1); the branch node
            // alpha_6 = (-eps_1-eps_2-eps_3+eps_4+eps_5+eps_6)/2 + (sqrt2/2) eps_7
            for i in 0..5 {
                let mut v = vec![CycNum::zero(1); 7];
                v[i] = CycNum::one();
                v[i + 1] = CycNum::from_int(-1);
                labels.push(v);
            }
            let half = rat(1, 2);
            let z8 = CycNum::root_of_unity(8, 1);
            let sqrt2_half = z8.sub(&z8.pow(3).unwrap()).scale(&half);
            let mut v: Vec<CycNum> = [-1i64, -1, -1, 1, 1, 1]
                .iter()
                .map(|&s| CycNum::from_rational(rat(s, 2)))
                .collect();
            v.push(sqrt2_half);
            labels.push(v);
        }
    }
    Ok(labels)
}
