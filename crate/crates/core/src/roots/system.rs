//! Root system generation by closure under simple reflections, starting from
//! the Cartan matrix. Roots are stored as integer coordinate vectors in the
//! simple-root basis, in a deterministic order (height, then lexicographic).

use super::RootError;
use crate::exact::Rational;
use std::collections::HashMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootFamily {
    A,
    D,
    E6,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    pub family: RootFamily,
    pub rank: usize,
    cartan: Vec<Vec<i64>>,
    roots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    heights: Vec<i64>,
}

impl RootSystem {
    pub fn build(family: RootFamily, rank: usize) -> Result<Self, RootError> {
        let cartan = cartan_matrix(family, rank)?;
        let mut roots: Vec<Vec<i64>> = Vec::new();
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut queue: Vec<Vec<i64>> = Vec::new();
        for i in 0..rank {
            let mut v = vec![0i64; rank];
            v[i] = 1;
            queue.push(v);
        }
        while let Some(beta) = queue.pop() {
            if seen.contains_key(&beta) {
                continue;
            }
            seen.insert(beta.clone(), ());
            roots.push(beta.clone());
            for i in 0..rank {
                // simple reflection: s_i(beta) = beta - (beta, alpha_i) alpha_i
                let pairing: i64 = (0..rank).map(|k| beta[k] * cartan[k][i]).sum();
                let mut img = beta.clone();
                img[i] -= pairing;
                if !seen.contains_key(&img) {
                    queue.push(img);
                }
            }
        }
        roots.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| a.cmp(b))
        });
        let heights = roots.iter().map(|r| r.iter().sum()).collect();
        let index = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        Ok(RootSystem {
            family,
            rank,
            cartan,
            roots,
            index,
            heights,
        })
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn root(&self, idx: usize) -> &[i64] {
        &self.roots[idx]
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn height(&self, idx: usize) -> i64 {
        self.heights[idx]
    }

    pub fn index_of(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    pub fn simple_root_index(&self, i: usize) -> usize {
        let mut v = vec![0i64; self.rank];
        v[i] = 1;
        self.index_of(&v).expect("simple root present")
    }

    pub fn negate(&self, idx: usize) -> usize {
        let neg: Vec<i64> = self.roots[idx].iter().map(|c| -c).collect();
        self.index_of(&neg).expect("roots closed under negation")
    }

    /// The invariant form on integer coordinate vectors in the simple-root
    /// basis; all roots have `form(a, a) = 2`.
    pub fn form_coords(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0i64;
        for i in 0..self.rank {
            if a[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                if b[j] != 0 {
                    s += a[i] * self.cartan[i][j] * b[j];
                }
            }
        }
        s
    }

    pub fn form(&self, i: usize, j: usize) -> Rational {
        Rational::from_integer(self.form_coords(&self.roots[i], &self.roots[j]).into())
    }

    /// True if the coordinate vector is a root.
    pub fn is_root(&self, coords: &[i64]) -> bool {
        self.index.contains_key(coords)
    }
}

fn cartan_matrix(family: RootFamily, rank: usize) -> Result<Vec<Vec<i64>>, RootError> {
    let unsupported = || RootError::UnsupportedType {
        family: format!("{family:?}"),
        rank,
    };
    let mut a = vec![vec![0i64; rank]; rank];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let link = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match family {
        RootFamily::A => {
            if rank < 1 {
                return Err(unsupported());
            }
            for i in 0..rank.saturating_sub(1) {
                link(&mut a, i, i + 1);
            }
        }
        RootFamily::D => {
            if rank < 3 {
                return Err(unsupported());
            }
            for i in 0..rank - 2 {
                link(&mut a, i, i + 1);
            }
            link(&mut a, rank - 3, rank - 1);
        }
        RootFamily::E6 => {
            if rank != 6 {
                return Err(unsupported());
            }
            for i in 0..4 {
                link(&mut a, i, i + 1);
            }
            link(&mut a, 2, 5);
        }
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts() {
        assert_eq!(RootSystem::build(RootFamily::A, 2).unwrap().num_roots(), 6);
        assert_eq!(
            RootSystem::build(RootFamily::D, 4).unwrap().num_roots(),
            24
        );
        assert_eq!(
            RootSystem::build(RootFamily::E6, 6).unwrap().num_roots(),
            72
        );
        // classical counts N(N+1) for A_N and 2N(N-1) for D_N
        for n in 1..=6 {
            let rs = RootSystem::build(RootFamily::A, n).unwrap();
            assert_eq!(rs.num_roots(), n * (n + 1));
        }
        for n in 3..=6 {
            let rs = RootSystem::build(RootFamily::D, n).unwrap();
            assert_eq!(rs.num_roots(), 2 * n * (n - 1));
        }
    }

    #[test]
    fn unsupported_types_rejected() {
        assert!(RootSystem::build(RootFamily::D, 2).is_err());
        assert!(RootSystem::build(RootFamily::E6, 7).is_err());
    }

    #[test]
    fn form_values_in_a2() {
        let rs = RootSystem::build(RootFamily::A, 2).unwrap();
        let a1 = rs.simple_root_index(0);
        let a2 = rs.simple_root_index(1);
        assert_eq!(rs.form(a1, a1), crate::exact::rint(2));
        assert_eq!(rs.form(a1, a2), crate::exact::rint(-1));
        for i in 0..rs.num_roots() {
            assert_eq!(rs.form(i, rs.negate(i)), crate::exact::rint(-2));
            assert_eq!(rs.form(i, i), crate::exact::rint(2));
        }
    }

    #[test]
    fn closure_under_negation_and_sums() {
        let rs = RootSystem::build(RootFamily::D, 4).unwrap();
        for i in 0..rs.num_roots() {
            let _ = rs.negate(i);
        }
        // alpha + beta is a root iff the generation closure says so; check the
        // standard criterion (form == -1 implies sum is a root) as an oracle
        for i in 0..rs.num_roots() {
            for j in 0..rs.num_roots() {
                let s: Vec<i64> = rs
                    .root(i)
                    .iter()
                    .zip(rs.root(j))
                    .map(|(a, b)| a + b)
                    .collect();
                let form = rs.form_coords(rs.root(i), rs.root(j));
                if form == -1 {
                    assert!(rs.is_root(&s));
                }
                if rs.is_root(&s) {
                    assert_eq!(form, -1);
                }
            }
        }
    }

    #[test]
    fn deterministic_order() {
        let rs1 = RootSystem::build(RootFamily::E6, 6).unwrap();
        let rs2 = RootSystem::build(RootFamily::E6, 6).unwrap();
        assert_eq!(rs1.roots(), rs2.roots());
        // heights ascend
        for i in 1..rs1.num_roots() {
            assert!(rs1.height(i) >= rs1.height(i - 1));
        }
    }
}
