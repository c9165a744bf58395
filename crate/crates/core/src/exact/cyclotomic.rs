//! Elements of cyclotomic fields `Q(zeta_L)` in the power basis
//! `1, zeta_L, ..., zeta_L^(phi(L)-1)` reduced modulo the L-th cyclotomic
//! polynomial. The representation is canonical: two values are equal iff
//! their coefficient vectors agree once lifted to a common level.

use super::ExactError;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, ToPrimitive, Zero};
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

pub type Rational = BigRational;
pub type Int = BigInt;

/// Euler totient, by trial-division factorization (levels stay small here).
pub fn euler_phi(n: u64) -> usize {
    assert!(n >= 1);
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

fn divisors(n: u64) -> Vec<u64> {
    let mut ds = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            ds.push(d);
            if d != n / d {
                ds.push(n / d);
            }
        }
        d += 1;
    }
    ds.sort_unstable();
    ds
}

/// Exact division of integer polynomials (little-endian), panics if not exact.
fn int_poly_div_exact(num: &[Int], den: &[Int]) -> Vec<Int> {
    let mut rem: Vec<Int> = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    assert!(!lead.is_zero());
    let mut quot = vec![Int::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dd] / &lead;
        if !(&c * &lead == rem[k + dd]) {
            panic!("non-exact integer polynomial division");
        }
        quot[k] = c.clone();
        for i in 0..=dd {
            let t = &den[i] * &c;
            rem[k + i] -= t;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "nonzero remainder");
    quot
}

static CYCLOTOMIC_CACHE: Lazy<Mutex<HashMap<u64, Arc<Vec<Int>>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Monic integer coefficients of the L-th cyclotomic polynomial, little-endian.
fn cyclotomic_poly(level: u64) -> Arc<Vec<Int>> {
    assert!(level >= 1);
    if let Some(p) = CYCLOTOMIC_CACHE.lock().unwrap().get(&level) {
        return p.clone();
    }
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    let mut poly = vec![Int::zero(); level as usize + 1];
    poly[0] = Int::from(-1);
    poly[level as usize] = Int::one();
    for d in divisors(level) {
        if d == level {
            continue;
        }
        let phi_d = cyclotomic_poly(d);
        poly = int_poly_div_exact(&poly, &phi_d);
    }
    let arc = Arc::new(poly);
    CYCLOTOMIC_CACHE
        .lock()
        .unwrap()
        .insert(level, arc.clone());
    arc
}

/// An element of `Q(zeta_L)`.
#[derive(Clone)]
pub struct CycNum {
    level: u64,
    coeffs: Vec<Rational>,
}

impl CycNum {
    pub fn zero(level: u64) -> Self {
        CycNum {
            level,
            coeffs: vec![Rational::zero(); euler_phi(level)],
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        CycNum {
            level: 1,
            coeffs: vec![q],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(Int::from(n)))
    }

    /// `zeta_L^k`, reduced into the power basis at level L.
    pub fn root_of_unity(level: u64, k: i64) -> Self {
        assert!(level >= 1);
        let kk = k.rem_euclid(level as i64) as usize;
        let mut raw = vec![Rational::zero(); kk + 1];
        raw[kk] = Rational::one();
        Self::reduce_at(level, raw)
    }

    fn reduce_at(level: u64, mut raw: Vec<Rational>) -> Self {
        let phi = euler_phi(level);
        if raw.len() > phi {
            let modulus = cyclotomic_poly(level);
            // remainder of raw modulo the monic cyclotomic polynomial
            for k in (phi..raw.len()).rev() {
                let c = raw[k].clone();
                if c.is_zero() {
                    continue;
                }
                raw[k] = Rational::zero();
                for i in 0..phi {
                    let t = Rational::from_integer(modulus[i].clone()) * &c;
                    raw[k - phi + i] -= t;
                }
            }
        }
        raw.resize(phi, Rational::zero());
        CycNum {
            level,
            coeffs: raw,
        }
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Returns the value as a plain rational if it lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Re-express at a larger level; the level of `self` must divide it.
    pub fn lift(&self, level: u64) -> Result<CycNum, ExactError> {
        if level == self.level {
            return Ok(self.clone());
        }
        if level % self.level != 0 {
            return Err(ExactError::NonDivisibleLevel {
                from: self.level,
                to: level,
            });
        }
        let ratio = (level / self.level) as usize;
        let mut raw = vec![Rational::zero(); (self.coeffs.len() - 1) * ratio + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            raw[k * ratio] = c.clone();
        }
        Ok(Self::reduce_at(level, raw))
    }

    fn common_level(&self, other: &CycNum) -> u64 {
        self.level.lcm(&other.level)
    }

    pub fn add(&self, other: &CycNum) -> CycNum {
        let level = self.common_level(other);
        let a = self.lift(level).unwrap();
        let b = other.lift(level).unwrap();
        let coeffs = a
            .coeffs
            .iter()
            .zip(b.coeffs.iter())
            .map(|(x, y)| x + y)
            .collect();
        CycNum { level, coeffs }
    }

    pub fn sub(&self, other: &CycNum) -> CycNum {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CycNum {
        CycNum {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &CycNum) -> CycNum {
        let level = self.common_level(other);
        let a = self.lift(level).unwrap();
        let b = other.lift(level).unwrap();
        let mut raw = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                raw[i + j] += x * y;
            }
        }
        Self::reduce_at(level, raw)
    }

    pub fn scale(&self, q: &Rational) -> CycNum {
        CycNum {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Field inverse by extended Euclid against the cyclotomic polynomial.
    pub fn inv(&self) -> Result<CycNum, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(CycNum::from_rational(q.recip()).lift(self.level).unwrap());
        }
        let modulus: Vec<Rational> = cyclotomic_poly(self.level)
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        // extended Euclid: r0 = modulus, r1 = self; keep s-coefficients of r w.r.t. self
        let mut r0 = modulus;
        let mut r1 = trim(self.coeffs.clone());
        let mut s0 = vec![Rational::zero()];
        let mut s1 = vec![Rational::one()];
        while !is_zero_poly(&r1) {
            let (q, rem) = poly_divrem(&r0, &r1);
            let s_new = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = s_new;
        }
        // r0 = gcd (a nonzero constant since the modulus is irreducible)
        assert!(r0.len() == 1, "cyclotomic polynomial not coprime to element");
        let c = r0[0].recip();
        let inv_coeffs: Vec<Rational> = s0.iter().map(|x| x * &c).collect();
        Ok(Self::reduce_at(self.level, inv_coeffs))
    }

    pub fn div(&self, other: &CycNum) -> Result<CycNum, ExactError> {
        Ok(self.mul(&other.inv()?))
    }

    /// Galois substitution `zeta_L -> zeta_L^t` for `gcd(t, L) = 1`.
    pub fn galois(&self, t: u64) -> CycNum {
        assert!(Int::from(t).gcd(&Int::from(self.level)).is_one());
        let mut raw = vec![Rational::zero(); euler_phi(self.level) * t as usize + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let e = (k as u64 * t % self.level) as usize;
                raw[e] += c;
            }
        }
        Self::reduce_at(self.level, raw)
    }

    /// Complex conjugation `zeta_L -> zeta_L^(-1)`.
    pub fn conj(&self) -> CycNum {
        if self.level <= 2 {
            return self.clone();
        }
        self.galois(self.level - 1)
    }

    pub fn pow(&self, e: i64) -> Result<CycNum, ExactError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = CycNum::one().lift(self.level).unwrap();
        let mut k = e.unsigned_abs();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            k >>= 1;
        }
        Ok(acc)
    }

    /// Deterministic total order used for canonical sorting (not a numeric
    /// order): compares coefficient vectors at the common level, then levels.
    pub fn canonical_cmp(&self, other: &CycNum) -> std::cmp::Ordering {
        let level = self.common_level(other);
        let a = self.lift(level).unwrap();
        let b = other.lift(level).unwrap();
        for (x, y) in a.coeffs.iter().zip(b.coeffs.iter()) {
            match x.cmp(y) {
                std::cmp::Ordering::Equal => continue,
                ord => return ord,
            }
        }
        std::cmp::Ordering::Equal
    }

    /// Canonical byte encoding at the given level (which the own level must
    /// divide); used for exact hashing and deduplication.
    pub fn canonical_bytes(&self, level: u64, out: &mut Vec<u8>) {
        let lifted = self.lift(level).expect("level must embed");
        for c in &lifted.coeffs {
            let num = c.numer().to_signed_bytes_le();
            let den = c.denom().to_signed_bytes_le();
            out.extend_from_slice(&(num.len() as u32).to_le_bytes());
            out.extend_from_slice(&num);
            out.extend_from_slice(&(den.len() as u32).to_le_bytes());
            out.extend_from_slice(&den);
        }
    }

    /// Numerical evaluation at `zeta_L = exp(2*pi*i/L)`; for cross-oracles only.
    pub fn to_complex(&self) -> (f64, f64) {
        let theta = 2.0 * std::f64::consts::PI / self.level as f64;
        let (mut re, mut im) = (0.0f64, 0.0f64);
        for (k, c) in self.coeffs.iter().enumerate() {
            let v = c.numer().to_f64().unwrap_or(f64::NAN)
                / c.denom().to_f64().unwrap_or(f64::NAN);
            let (s, co) = (theta * k as f64).sin_cos();
            re += v * co;
            im += v * s;
        }
        (re, im)
    }
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        let level = self.common_level(other);
        self.lift(level).unwrap().coeffs == other.lift(level).unwrap().coeffs
    }
}

impl Eq for CycNum {}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        write!(f, "z{}[", self.level)?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.len() > 1 && p.last().unwrap().is_zero() {
        p.pop();
    }
    p
}

fn is_zero_poly(p: &[Rational]) -> bool {
    p.iter().all(|c| c.is_zero())
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(out)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let b = trim(b.to_vec());
    assert!(!is_zero_poly(&b), "polynomial division by zero");
    let mut rem = trim(a.to_vec());
    let db = b.len() - 1;
    let lead = b[db].clone();
    if rem.len() - 1 < db || is_zero_poly(&rem) {
        return (vec![Rational::zero()], rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] / &lead;
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for i in 0..=db {
            let t = &b[i] * &c;
            rem[k + i] -= t;
        }
    }
    (trim(quot), trim(rem))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rint};

    #[test]
    fn cyclotomic_polynomials() {
        // Phi_1 = x - 1, Phi_4 = x^2 + 1, Phi_6 = x^2 - x + 1, Phi_12 = x^4 - x^2 + 1
        assert_eq!(*cyclotomic_poly(1), vec![Int::from(-1), Int::from(1)]);
        assert_eq!(
            *cyclotomic_poly(4),
            vec![Int::from(1), Int::from(0), Int::from(1)]
        );
        assert_eq!(
            *cyclotomic_poly(6),
            vec![Int::from(1), Int::from(-1), Int::from(1)]
        );
        assert_eq!(
            *cyclotomic_poly(12),
            vec![
                Int::from(1),
                Int::from(0),
                Int::from(-1),
                Int::from(0),
                Int::from(1)
            ]
        );
    }

    #[test]
    fn embed_zeta2_to_level4() {
        // zeta_2 = -1; at level 4 its power-basis coefficients are (-1, 0)
        let z2 = CycNum::root_of_unity(2, 1);
        let at4 = z2.lift(4).unwrap();
        assert_eq!(at4.coeffs(), &[rint(-1), rint(0)]);
        // round trip through equality with the level-2 original
        assert_eq!(at4, z2);
    }

    #[test]
    fn embed_one_everywhere() {
        let one = CycNum::one();
        for level in [1u64, 2, 3, 4, 6, 8, 12, 24, 48] {
            let lifted = one.lift(level).unwrap();
            assert!(lifted.is_one());
        }
    }

    #[test]
    fn embed_zeta3_to_level6() {
        // zeta_3 at level 6 is zeta_6^2 = zeta_6 - 1 in the power basis;
        // pinned by the minimal-polynomial reduction oracle (cube equals 1,
        // and the value is a primitive cube root, not 1 itself).
        let z3 = CycNum::root_of_unity(3, 1);
        let at6 = z3.lift(6).unwrap();
        assert_eq!(at6, CycNum::root_of_unity(6, 2));
        assert_eq!(at6.coeffs(), &[rint(-1), rint(1)]);
        assert!(at6.pow(3).unwrap().is_one());
        assert!(!at6.is_one());
    }

    #[test]
    fn embed_requires_divisible_level() {
        let z3 = CycNum::root_of_unity(3, 1);
        assert_eq!(
            z3.lift(4),
            Err(ExactError::NonDivisibleLevel { from: 3, to: 4 })
        );
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = CycNum::root_of_unity(4, 1);
        assert_eq!(i.mul(&i), CycNum::from_int(-1));
    }

    #[test]
    fn cube_roots_sum() {
        let z = CycNum::root_of_unity(3, 1);
        let sum = z.add(&z.mul(&z));
        assert_eq!(sum, CycNum::from_int(-1));
    }

    #[test]
    fn inverse_of_one_plus_zeta5() {
        let x = CycNum::one().add(&CycNum::root_of_unity(5, 1));
        let inv = x.inv().unwrap();
        assert!(x.mul(&inv).is_one());
    }

    #[test]
    fn conjugation_is_field_involution() {
        let z = CycNum::root_of_unity(8, 1);
        assert!(z.conj().mul(&z).is_one());
        let x = z.add(&CycNum::from_rational(rat(3, 2)));
        let y = z.mul(&z).sub(&CycNum::from_int(5));
        assert_eq!(x.conj().conj(), x);
        assert_eq!(x.mul(&y).conj(), x.conj().mul(&y.conj()));
    }

    #[test]
    fn root_orders_up_to_48() {
        for level in 1..=48u64 {
            let z = CycNum::root_of_unity(level, 1);
            assert!(z.pow(level as i64).unwrap().is_one(), "level {level}");
            for k in 1..level {
                assert!(
                    !z.pow(k as i64).unwrap().is_one(),
                    "zeta_{level}^{k} must not be 1"
                );
            }
        }
    }

    #[test]
    fn sqrt2_from_level8() {
        // zeta_8 + zeta_8^(-1) squares to 2
        let z = CycNum::root_of_unity(8, 1);
        let s = z.add(&z.conj());
        assert_eq!(s.mul(&s), CycNum::from_int(2));
    }
}
