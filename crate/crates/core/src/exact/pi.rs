//! Formal values `i*pi*q` with `q` cyclotomic. These carry logarithms of
//! roots of unity exactly; every formula in scope is linear in `i*pi`, so no
//! product of two such values is ever defined.

use super::cyclotomic::{CycNum, Int, Rational};
use super::ExactError;
use num::{Integer, ToPrimitive, Zero};
use std::fmt;

/// The value `i*pi*factor`.
#[derive(Clone, PartialEq, Eq)]
pub struct PiScalar {
    factor: CycNum,
}

impl PiScalar {
    pub fn new(factor: CycNum) -> Self {
        PiScalar { factor }
    }

    pub fn zero() -> Self {
        PiScalar {
            factor: CycNum::zero(1),
        }
    }

    pub fn from_rational(q: Rational) -> Self {
        PiScalar {
            factor: CycNum::from_rational(q),
        }
    }

    pub fn factor(&self) -> &CycNum {
        &self.factor
    }

    pub fn is_zero(&self) -> bool {
        self.factor.is_zero()
    }

    pub fn add(&self, other: &PiScalar) -> PiScalar {
        PiScalar {
            factor: self.factor.add(&other.factor),
        }
    }

    pub fn sub(&self, other: &PiScalar) -> PiScalar {
        PiScalar {
            factor: self.factor.sub(&other.factor),
        }
    }

    pub fn neg(&self) -> PiScalar {
        PiScalar {
            factor: self.factor.neg(),
        }
    }

    pub fn scale_cyc(&self, c: &CycNum) -> PiScalar {
        PiScalar {
            factor: self.factor.mul(c),
        }
    }

    pub fn scale_rat(&self, q: &Rational) -> PiScalar {
        PiScalar {
            factor: self.factor.scale(q),
        }
    }
}

impl fmt::Display for PiScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})·iπ", self.factor)
    }
}

impl fmt::Debug for PiScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `exp(i*pi*q)` for rational `q = n/d` in lowest terms: the root of unity
/// `zeta_(2d)^n`, returned at level `2d`.
pub fn pi_exp(p: &PiScalar) -> Result<CycNum, ExactError> {
    let q = p
        .factor
        .as_rational()
        .ok_or(ExactError::NonRationalFactor)?;
    if q.is_zero() {
        return Ok(CycNum::one());
    }
    let d = q
        .denom()
        .to_u64()
        .ok_or(ExactError::LevelOverflow)?;
    let level = 2 * d;
    let n_red = q.numer().mod_floor(&Int::from(level));
    let n = n_red.to_i64().ok_or(ExactError::LevelOverflow)?;
    Ok(CycNum::root_of_unity(level, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rint};

    #[test]
    fn half_gives_i() {
        let p = PiScalar::from_rational(rat(1, 2));
        assert_eq!(pi_exp(&p).unwrap(), CycNum::root_of_unity(4, 1));
    }

    #[test]
    fn zero_gives_one() {
        assert!(pi_exp(&PiScalar::zero()).unwrap().is_one());
    }

    #[test]
    fn minus_half_gives_minus_i() {
        let p = PiScalar::from_rational(rat(-1, 2));
        let v = pi_exp(&p).unwrap();
        let i = CycNum::root_of_unity(4, 1);
        assert!(v.mul(&i).is_one());
        assert_eq!(v, i.neg());
    }

    #[test]
    fn non_rational_factor_rejected() {
        let p = PiScalar::new(CycNum::root_of_unity(3, 1));
        assert_eq!(pi_exp(&p), Err(ExactError::NonRationalFactor));
    }

    #[test]
    fn additivity() {
        for (a, b) in [
            (rat(1, 3), rat(1, 2)),
            (rat(-2, 5), rat(7, 5)),
            (rat(5, 6), rat(-1, 4)),
            (rint(1), rint(1)),
        ] {
            let pa = PiScalar::from_rational(a);
            let pb = PiScalar::from_rational(b);
            let lhs = pi_exp(&pa.add(&pb)).unwrap();
            let rhs = pi_exp(&pa).unwrap().mul(&pi_exp(&pb).unwrap());
            assert_eq!(lhs, rhs);
        }
    }
}
