//! Univariate polynomials over cyclotomic scalars; just enough for minimal
//! polynomials: Euclidean division, gcd/lcm, derivative, squarefree tests.

use super::cyclotomic::CycNum;
use super::matrix::CycMatrix;

/// Little-endian coefficients; the zero polynomial is `[0]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycPoly {
    coeffs: Vec<CycNum>,
}

impl CycPoly {
    pub fn new(coeffs: Vec<CycNum>) -> Self {
        let mut p = CycPoly { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        CycPoly {
            coeffs: vec![CycNum::zero(1)],
        }
    }

    pub fn one() -> Self {
        CycPoly {
            coeffs: vec![CycNum::one()],
        }
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        CycPoly {
            coeffs: vec![CycNum::zero(1), CycNum::one()],
        }
    }

    /// `x - root`
    pub fn linear(root: &CycNum) -> Self {
        CycPoly::new(vec![root.neg(), CycNum::one()])
    }

    fn trim(&mut self) {
        while self.coeffs.len() > 1 && self.coeffs.last().unwrap().is_zero() {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[CycNum] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &CycNum {
        self.coeffs.last().unwrap()
    }

    pub fn is_constant(&self) -> bool {
        self.degree() == 0
    }

    /// True iff the polynomial is `c * x^k` for some `k >= 1`.
    pub fn is_power_of_x(&self) -> bool {
        !self.is_zero()
            && self.degree() >= 1
            && self.coeffs[..self.coeffs.len() - 1]
                .iter()
                .all(|c| c.is_zero())
    }

    pub fn add(&self, other: &CycPoly) -> CycPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![CycNum::zero(1); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] = out[i].add(c);
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] = out[i].add(c);
        }
        CycPoly::new(out)
    }

    pub fn neg(&self) -> CycPoly {
        CycPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn sub(&self, other: &CycPoly) -> CycPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &CycPoly) -> CycPoly {
        if self.is_zero() || other.is_zero() {
            return CycPoly::zero();
        }
        let mut out = vec![CycNum::zero(1); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        CycPoly::new(out)
    }

    pub fn scale(&self, c: &CycNum) -> CycPoly {
        CycPoly::new(self.coeffs.iter().map(|x| x.mul(c)).collect())
    }

    pub fn monic(&self) -> CycPoly {
        assert!(!self.is_zero());
        let inv = self.leading().inv().unwrap();
        self.scale(&inv)
    }

    pub fn divrem(&self, other: &CycPoly) -> (CycPoly, CycPoly) {
        assert!(!other.is_zero(), "polynomial division by zero");
        if self.is_zero() || self.degree() < other.degree() {
            return (CycPoly::zero(), self.clone());
        }
        let db = other.degree();
        let lead_inv = other.leading().inv().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![CycNum::zero(1); rem.len() - db];
        for k in (0..quot.len()).rev() {
            let c = rem[k + db].mul(&lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[k] = c.clone();
            for i in 0..=db {
                rem[k + i] = rem[k + i].sub(&other.coeffs[i].mul(&c));
            }
        }
        (CycPoly::new(quot), CycPoly::new(rem))
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &CycPoly) -> CycPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    pub fn lcm(&self, other: &CycPoly) -> CycPoly {
        if self.is_zero() || other.is_zero() {
            return CycPoly::zero();
        }
        let g = self.gcd(other);
        let (q, r) = self.divrem(&g);
        debug_assert!(r.is_zero());
        q.mul(other).monic()
    }

    pub fn derivative(&self) -> CycPoly {
        if self.degree() == 0 {
            return CycPoly::zero();
        }
        let mut out = Vec::with_capacity(self.degree());
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c.scale(&crate::exact::rint(k as i64)));
        }
        CycPoly::new(out)
    }

    /// Squarefree iff gcd with the derivative is a nonzero constant.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.degree() == 0 {
            return true;
        }
        self.gcd(&self.derivative()).is_constant()
    }

    pub fn eval(&self, x: &CycNum) -> CycNum {
        let mut acc = CycNum::zero(1);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Horner evaluation on a square matrix.
    pub fn eval_matrix(&self, m: &CycMatrix) -> CycMatrix {
        let n = m.rows();
        let mut acc = CycMatrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m);
            for i in 0..n {
                acc.set(i, i, acc.get(i, i).add(c));
            }
        }
        acc
    }

    /// Horner evaluation applied to a single vector: `p(M) v`.
    pub fn eval_matrix_vec(&self, m: &CycMatrix, v: &[CycNum]) -> Vec<CycNum> {
        let mut acc = vec![CycNum::zero(1); v.len()];
        for c in self.coeffs.iter().rev() {
            acc = m.apply(&acc);
            if !c.is_zero() {
                for (a, x) in acc.iter_mut().zip(v.iter()) {
                    *a = a.add(&x.mul(c));
                }
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> CycPoly {
        CycPoly::new(coeffs.iter().map(|&c| CycNum::from_int(c)).collect())
    }

    #[test]
    fn divrem_roundtrip() {
        let a = p(&[2, 0, -3, 1, 4]);
        let b = p(&[1, 1, 2]);
        let (q, r) = a.divrem(&b);
        assert_eq!(b.mul(&q).add(&r), a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_of_products() {
        let f = p(&[-1, 1]); // x - 1
        let g = p(&[2, 1]); // x + 2
        let h = p(&[0, 1]); // x
        let a = f.mul(&g);
        let b = f.mul(&h);
        assert_eq!(a.gcd(&b), f.monic());
        let l = a.lcm(&b);
        assert_eq!(l, f.mul(&g).mul(&h).monic());
    }

    #[test]
    fn squarefree_detection() {
        let f = p(&[-1, 1]);
        assert!(f.mul(&p(&[2, 1])).is_squarefree());
        assert!(!f.mul(&f).is_squarefree());
        assert!(p(&[0, 0, 1]).is_power_of_x());
        assert!(!p(&[0, 1, 1]).is_power_of_x());
    }

    #[test]
    fn matrix_evaluation() {
        // p(x) = x^2 - 5x  on M = [[1,2],[3,4]]
        let m = CycMatrix::from_rows(vec![
            vec![CycNum::from_int(1), CycNum::from_int(2)],
            vec![CycNum::from_int(3), CycNum::from_int(4)],
        ]);
        let poly = p(&[0, -5, 1]);
        let full = poly.eval_matrix(&m);
        // columnwise agreement with eval_matrix_vec
        for j in 0..2 {
            let e: Vec<CycNum> = (0..2)
                .map(|i| {
                    if i == j {
                        CycNum::one()
                    } else {
                        CycNum::zero(1)
                    }
                })
                .collect();
            let col = poly.eval_matrix_vec(&m, &e);
            for i in 0..2 {
                assert_eq!(&col[i], full.get(i, j));
            }
        }
        // Cayley-Hamilton: char poly is x^2 - 5x - 2
        let ch = p(&[-2, -5, 1]);
        assert!(ch.eval_matrix(&m).is_zero());
    }
}
