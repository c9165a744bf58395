//! Operator-level computations: centralizers, minimal polynomials by Krylov
//! iteration, semisimplicity and nilpotency tests, exact exponentials with
//! `i*pi`-rational spectrum via Lagrange interpolation, and conjugation
//! automorphisms of the matrix realization.

use super::{AlgAutomorphism, AlgElement, AlgebraError, LieAlgebra};
use crate::exact::{CycMatrix, CycNum, CycPoly, Int, PiScalar, Rational, Subspace};
use num::{Integer, One, Signed, ToPrimitive, Zero};

/// Exact centralizer of a set of elements inside the subspace `ambient`
/// (pass `Subspace::full(dim)` for the whole algebra). Returns the canonical
/// echelon basis.
pub fn centralizer(alg: &LieAlgebra, elements: &[AlgElement], ambient: &Subspace) -> Subspace {
    let mut current = ambient.clone();
    for s in elements {
        if current.dim() == 0 {
            break;
        }
        let basis = current.basis_vectors();
        // columns: bracket of s with each basis vector
        let mut cols: Vec<Vec<CycNum>> = Vec::with_capacity(basis.len());
        for v in &basis {
            cols.push(
                alg.bracket(s, &AlgElement::new(v.clone()))
                    .into_coords(),
            );
        }
        let m = CycMatrix::from_fn(alg.dim, basis.len(), |i, j| cols[j][i].clone());
        let ns = m.nullspace();
        let mut vectors = Vec::with_capacity(ns.rows());
        for r in 0..ns.rows() {
            let coeffs = ns.row(r);
            let mut v = vec![CycNum::zero(1); alg.dim];
            for (k, c) in coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (i, b) in basis[k].iter().enumerate() {
                    if !b.is_zero() {
                        v[i] = v[i].add(&c.mul(b));
                    }
                }
            }
            vectors.push(v);
        }
        current = Subspace::from_vectors(alg.dim, &vectors);
    }
    current
}

/// Minimal polynomial of a square matrix: least common multiple of the local
/// minimal polynomials of the standard basis vectors, with early exit once
/// the current candidate annihilates a seed.
pub fn minimal_polynomial(m: &CycMatrix) -> CycPoly {
    let n = m.rows();
    assert_eq!(n, m.cols());
    if n == 0 {
        return CycPoly::one();
    }
    let mut p = CycPoly::one();
    for seed in 0..n {
        let mut e = vec![CycNum::zero(1); n];
        e[seed] = CycNum::one();
        if p.degree() >= 1 {
            let w = p.eval_matrix_vec(m, &e);
            if w.iter().all(|c| c.is_zero()) {
                continue;
            }
        }
        let local = local_minimal_polynomial(m, &e);
        p = p.lcm(&local);
        if p.degree() == n {
            break;
        }
    }
    p
}

/// Minimal polynomial of `m` relative to the vector `v` via Krylov iteration
/// with incremental echelon reduction.
fn local_minimal_polynomial(m: &CycMatrix, v: &[CycNum]) -> CycPoly {
    let n = v.len();
    // reduced vectors with pivot column, plus their expression in the Krylov
    // vectors v, Mv, M^2 v, ...
    let mut reduced: Vec<(usize, Vec<CycNum>, Vec<CycNum>)> = Vec::new();
    let mut cur = v.to_vec();
    for step in 0..=n {
        // combination starts as the step-th Krylov basis vector
        let mut combo = vec![CycNum::zero(1); step + 1];
        combo[step] = CycNum::one();
        let mut vec_red = cur.clone();
        for (pivot, basis_vec, basis_combo) in &reduced {
            let c = vec_red[*pivot].clone();
            if c.is_zero() {
                continue;
            }
            for (i, b) in basis_vec.iter().enumerate() {
                if !b.is_zero() {
                    vec_red[i] = vec_red[i].sub(&c.mul(b));
                }
            }
            for (i, b) in basis_combo.iter().enumerate() {
                if !b.is_zero() {
                    combo[i] = combo[i].sub(&c.mul(b));
                }
            }
        }
        if let Some(pivot) = vec_red.iter().position(|c| !c.is_zero()) {
            let inv = vec_red[pivot].inv().unwrap();
            let vec_norm: Vec<CycNum> = vec_red.iter().map(|c| c.mul(&inv)).collect();
            let combo_norm: Vec<CycNum> = combo.iter().map(|c| c.mul(&inv)).collect();
            reduced.push((pivot, vec_norm, combo_norm));
            cur = m.apply(&cur);
        } else {
            // dependence: the combination coefficients are the polynomial
            return CycPoly::new(combo);
        }
    }
    unreachable!("Krylov sequence must become dependent within n+1 steps");
}

pub fn is_semisimple(alg: &LieAlgebra, x: &AlgElement) -> bool {
    minimal_polynomial(&alg.ad_matrix(x)).is_squarefree()
}

pub fn is_nilpotent(alg: &LieAlgebra, x: &AlgElement) -> bool {
    if x.is_zero() {
        return true;
    }
    minimal_polynomial(&alg.ad_matrix(x)).is_power_of_x()
}

/// Checks that every root of the polynomial has the form `i*q` with `q`
/// rational, and returns the `q`s sorted ascending. The polynomial must
/// split over `Q(i)` into distinct such roots.
pub fn i_rational_spectrum(p: &CycPoly) -> Result<Vec<Rational>, AlgebraError> {
    let d = p.degree();
    let i_unit = CycNum::root_of_unity(4, 1);
    // q(s) = p(i*s) / i^d must have rational coefficients
    let mut rational_coeffs: Vec<Rational> = Vec::with_capacity(d + 1);
    for (k, c) in p.coeffs().iter().enumerate() {
        let scaled = c.mul(&i_unit.pow(k as i64 - d as i64).unwrap());
        match scaled.as_rational() {
            Some(q) => rational_coeffs.push(q),
            None => return Err(AlgebraError::NonPeriodicSpectrum),
        }
    }
    let roots = rational_roots(&rational_coeffs)?;
    if roots.len() != d {
        return Err(AlgebraError::NonPeriodicSpectrum);
    }
    let mut sorted = roots;
    sorted.sort();
    Ok(sorted)
}

/// All roots of a rational-coefficient polynomial that is required to split
/// over `Q`; fails if it does not split or the coefficients are too large to
/// factor by trial division.
fn rational_roots(coeffs: &[Rational]) -> Result<Vec<Rational>, AlgebraError> {
    let mut cur: Vec<Rational> = coeffs.to_vec();
    let mut roots = Vec::new();
    loop {
        while cur.len() > 1 && cur.last().unwrap().is_zero() {
            cur.pop();
        }
        if cur.len() <= 1 {
            break;
        }
        // clear denominators
        let mut den = Int::one();
        for c in &cur {
            den = den.lcm(c.denom());
        }
        let ints: Vec<Int> = cur
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        if ints[0].is_zero() {
            roots.push(Rational::zero());
            cur = deflate(&cur, &Rational::zero());
            continue;
        }
        let mut found = None;
        'search: for pd in divisors_bigint(&ints[0])? {
            for qd in divisors_bigint(ints.last().unwrap())? {
                for sign in [1i64, -1] {
                    let cand = Rational::new(&pd * Int::from(sign), qd.clone());
                    if eval_rational(&cur, &cand).is_zero() {
                        found = Some(cand);
                        break 'search;
                    }
                }
            }
        }
        match found {
            Some(r) => {
                cur = deflate(&cur, &r);
                roots.push(r);
            }
            None => return Err(AlgebraError::NonPeriodicSpectrum),
        }
    }
    Ok(roots)
}

fn eval_rational(coeffs: &[Rational], x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Synthetic division by `(x - r)`; the remainder is known to vanish.
fn deflate(coeffs: &[Rational], r: &Rational) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); coeffs.len() - 1];
    let mut carry = Rational::zero();
    for k in (0..coeffs.len() - 1).rev() {
        carry = &coeffs[k + 1] + &carry * r;
        out[k] = carry.clone();
    }
    out
}

fn divisors_bigint(n: &Int) -> Result<Vec<Int>, AlgebraError> {
    let n = n.abs();
    let nu = n.to_u64().ok_or(AlgebraError::NonPeriodicSpectrum)?;
    if nu == 0 {
        return Err(AlgebraError::NonPeriodicSpectrum);
    }
    if nu > 1_000_000_000_000 {
        return Err(AlgebraError::NonPeriodicSpectrum);
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= nu {
        if nu % d == 0 {
            out.push(Int::from(d));
            if d != nu / d {
                out.push(Int::from(nu / d));
            }
        }
        d += 1;
    }
    out.sort();
    Ok(out)
}

/// `exp(c * pi * M)` for a square matrix whose spectrum lies in `i*Q`,
/// computed exactly through Lagrange interpolation on the spectrum: the
/// result is `r(M)` where `r` interpolates `exp(c*pi*lambda)` at the
/// eigenvalues.
pub fn spectral_exp_matrix(c: &Rational, m: &CycMatrix) -> Result<CycMatrix, AlgebraError> {
    let p = minimal_polynomial(m);
    if !p.is_squarefree() {
        return Err(AlgebraError::NotSemisimple);
    }
    let qs = i_rational_spectrum(&p)?;
    interpolated_exp(c, m, &qs)
}

/// Same as [`spectral_exp_matrix`] but with the spectrum supplied by the
/// caller (as the rational parts `q` of eigenvalues `i*q`); the claimed
/// spectrum is certified by annihilation of the product of linear factors.
pub fn spectral_exp_matrix_known(
    c: &Rational,
    m: &CycMatrix,
    spectrum: &[Rational],
) -> Result<CycMatrix, AlgebraError> {
    let mut qs: Vec<Rational> = spectrum.to_vec();
    qs.sort();
    qs.dedup();
    // annihilation check: prod_j (M - i q_j) = 0
    let i_unit = CycNum::root_of_unity(4, 1);
    let mut ann = CycPoly::one();
    for q in &qs {
        let root = i_unit.scale(q);
        ann = ann.mul(&CycPoly::linear(&root));
    }
    let n = m.rows();
    for col in 0..n {
        let mut e = vec![CycNum::zero(1); n];
        e[col] = CycNum::one();
        let w = ann.eval_matrix_vec(m, &e);
        if !w.iter().all(|x| x.is_zero()) {
            return Err(AlgebraError::NonPeriodicSpectrum);
        }
    }
    interpolated_exp(c, m, &qs)
}

fn interpolated_exp(
    c: &Rational,
    m: &CycMatrix,
    qs: &[Rational],
) -> Result<CycMatrix, AlgebraError> {
    let i_unit = CycNum::root_of_unity(4, 1);
    let k = qs.len();
    // nodes lambda_j = i q_j and values exp(i pi c q_j)
    let nodes: Vec<CycNum> = qs.iter().map(|q| i_unit.scale(q)).collect();
    let values: Vec<CycNum> = qs
        .iter()
        .map(|q| {
            crate::exact::pi_exp(&PiScalar::from_rational(c * q))
                .map_err(|_| AlgebraError::NonPeriodicSpectrum)
        })
        .collect::<Result<_, _>>()?;
    // interpolation polynomial through (nodes, values)
    let vand = CycMatrix::from_fn(k, k, |r, col| nodes[r].pow(col as i64).unwrap());
    let rhs = CycMatrix::from_fn(k, 1, |r, _| values[r].clone());
    let coef = vand
        .solve(&rhs)
        .map_err(|_| AlgebraError::NonPeriodicSpectrum)?;
    let r_poly = CycPoly::new((0..k).map(|r| coef.get(r, 0).clone()).collect());
    // evaluate columnwise to exploit sparsity of m
    let n = m.rows();
    let mut out = CycMatrix::zeros(n, n);
    for col in 0..n {
        let mut e = vec![CycNum::zero(1); n];
        e[col] = CycNum::one();
        let w = r_poly.eval_matrix_vec(m, &e);
        for (i, x) in w.into_iter().enumerate() {
            if !x.is_zero() {
                out.set(i, col, x);
            }
        }
    }
    Ok(out)
}

/// `exp(c * pi * ad(x))` as an automorphism of the algebra.
pub fn spectral_exp(
    alg: &LieAlgebra,
    c: &Rational,
    x: &AlgElement,
) -> Result<AlgAutomorphism, AlgebraError> {
    let ad = alg.ad_matrix(x);
    Ok(AlgAutomorphism::new(spectral_exp_matrix(c, &ad)?))
}

/// The automorphism `y -> g y g^(-1)` of the matrix realization.
pub fn apply_matrix_conjugation(
    alg: &LieAlgebra,
    g: &CycMatrix,
) -> Result<AlgAutomorphism, AlgebraError> {
    let g_inv = g.inverse().map_err(|_| AlgebraError::SingularMatrix)?;
    let dim = alg.dim;
    let mut mat = CycMatrix::zeros(dim, dim);
    for j in 0..dim {
        let bj = alg.to_matrix(&alg.basis_element(j));
        let img = g.mul(&bj).mul(&g_inv);
        let coords = alg
            .from_matrix(&img)
            .expect("conjugation preserves tracelessness");
        for (i, c) in coords.coords().iter().enumerate() {
            if !c.is_zero() {
                mat.set(i, j, c.clone());
            }
        }
    }
    Ok(AlgAutomorphism::new(mat))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::matrix_sl::unit_index;
    use crate::algebra::{build_chevalley, build_matrix_sl};
    use crate::exact::{rat, rint};
    use crate::roots::{RootFamily, RootSystem};

    #[test]
    fn centralizer_of_cartan_is_cartan() {
        let alg = build_matrix_sl(3);
        let h1 = alg.basis_element(0);
        let h2 = alg.basis_element(1);
        let full = Subspace::full(alg.dim);
        let z = centralizer(&alg, &[h1, h2], &full);
        assert_eq!(z.dim(), 2);
        assert!(z.contains(alg.basis_element(0).coords()));
        assert!(z.contains(alg.basis_element(1).coords()));
    }

    #[test]
    fn centralizer_of_zero_is_everything() {
        let alg = build_matrix_sl(2);
        let z = centralizer(&alg, &[AlgElement::zero(alg.dim)], &Subspace::full(alg.dim));
        assert_eq!(z.dim(), alg.dim);
    }

    #[test]
    fn minimal_polynomial_of_diagonal() {
        // diag(1, 2, 2): min poly (x-1)(x-2)
        let m = CycMatrix::from_rows(vec![
            vec![CycNum::from_int(1), CycNum::zero(1), CycNum::zero(1)],
            vec![CycNum::zero(1), CycNum::from_int(2), CycNum::zero(1)],
            vec![CycNum::zero(1), CycNum::zero(1), CycNum::from_int(2)],
        ]);
        let p = minimal_polynomial(&m);
        assert_eq!(p.degree(), 2);
        assert!(p.eval(&CycNum::from_int(1)).is_zero());
        assert!(p.eval(&CycNum::from_int(2)).is_zero());
        assert!(p.is_squarefree());
    }

    #[test]
    fn semisimple_and_nilpotent_flags() {
        let alg = build_matrix_sl(2);
        let h = alg.basis_element(0);
        let e = alg.basis_element(unit_index(2, 0, 1));
        assert!(is_semisimple(&alg, &h));
        assert!(!is_nilpotent(&alg, &h));
        assert!(is_nilpotent(&alg, &e));
        assert!(!is_semisimple(&alg, &e));
        // mixed element: neither
        let x = h.add(&e);
        assert!(!is_semisimple(&alg, &x) || !is_nilpotent(&alg, &x));
    }

    #[test]
    fn spectrum_extraction() {
        // minimal polynomial x^2 + 1 has roots +-i, i.e. q = +-1
        let p = CycPoly::new(vec![CycNum::one(), CycNum::zero(1), CycNum::one()]);
        let qs = i_rational_spectrum(&p).unwrap();
        assert_eq!(qs, vec![rint(-1), rint(1)]);
        // x^2 - 1 has roots +-1, not i-rational
        let p = CycPoly::new(vec![CycNum::from_int(-1), CycNum::zero(1), CycNum::one()]);
        assert_eq!(
            i_rational_spectrum(&p),
            Err(AlgebraError::NonPeriodicSpectrum)
        );
    }

    #[test]
    fn rotation_exponential() {
        // K = [[0,1],[-1,0]]: exp((pi/2) K) = [[0,1],[-1,0]]
        let k = CycMatrix::from_rows(vec![
            vec![CycNum::zero(1), CycNum::from_int(1)],
            vec![CycNum::from_int(-1), CycNum::zero(1)],
        ]);
        let e = spectral_exp_matrix(&rat(1, 2), &k).unwrap();
        assert_eq!(e, k);
        // exp(pi K) = -id, exp(2 pi K) = id
        let e2 = spectral_exp_matrix(&rint(1), &k).unwrap();
        assert_eq!(e2, CycMatrix::identity(2).neg());
        let e4 = spectral_exp_matrix(&rint(2), &k).unwrap();
        assert!(e4.is_identity());
    }

    #[test]
    fn exp_of_zero_is_identity() {
        let alg = build_matrix_sl(3);
        let aut = spectral_exp(&alg, &rint(1), &AlgElement::zero(alg.dim)).unwrap();
        assert!(aut.is_identity());
    }

    #[test]
    fn nilpotent_exponent_rejected() {
        let alg = build_matrix_sl(2);
        let e = alg.basis_element(unit_index(2, 0, 1));
        assert_eq!(
            spectral_exp(&alg, &rint(1), &e),
            Err(AlgebraError::NotSemisimple)
        );
    }

    #[test]
    fn known_spectrum_certified() {
        let k = CycMatrix::from_rows(vec![
            vec![CycNum::zero(1), CycNum::from_int(1)],
            vec![CycNum::from_int(-1), CycNum::zero(1)],
        ]);
        let ok = spectral_exp_matrix_known(&rat(1, 2), &k, &[rint(1), rint(-1)]);
        assert_eq!(ok.unwrap(), k);
        // wrong spectrum is rejected by the annihilation check
        let bad = spectral_exp_matrix_known(&rat(1, 2), &k, &[rint(2), rint(-2)]);
        assert_eq!(bad, Err(AlgebraError::NonPeriodicSpectrum));
    }

    #[test]
    fn exp_is_automorphism_sl2_rotation_plane() {
        // J spanning the compact rotation in sl_2: exp(pi/2 ad K) preserves
        // brackets and has finite order
        let alg = build_matrix_sl(2);
        let e = alg.basis_element(unit_index(2, 0, 1));
        let f = alg.basis_element(unit_index(2, 1, 0));
        let k = e.sub(&f);
        // ad(e - f) has spectrum {0, 2i, -2i}, so exp((pi/2) ad K) squares to
        // the identity
        let aut = spectral_exp(&alg, &rat(1, 2), &k).unwrap();
        assert_eq!(aut.verify_bracket_preservation(&alg), Ok(()));
        assert_eq!(aut.order_up_to(16), Some(2));
        // and exp((pi/4) ad K) has order 4
        let aut4 = spectral_exp(&alg, &rat(1, 4), &k).unwrap();
        assert_eq!(aut4.order_up_to(16), Some(4));
        assert_eq!(aut4.pow(2), aut);
    }

    #[test]
    fn conjugation_examples() {
        let alg = build_matrix_sl(2);
        // identity conjugation
        let id = apply_matrix_conjugation(&alg, &CycMatrix::identity(2)).unwrap();
        assert!(id.is_identity());
        // g = diag(1, -1): e -> -e, f -> -f, h -> h
        let g = CycMatrix::from_rows(vec![
            vec![CycNum::from_int(1), CycNum::zero(1)],
            vec![CycNum::zero(1), CycNum::from_int(-1)],
        ]);
        let aut = apply_matrix_conjugation(&alg, &g).unwrap();
        let e = alg.basis_element(unit_index(2, 0, 1));
        let f = alg.basis_element(unit_index(2, 1, 0));
        let h = alg.basis_element(0);
        assert_eq!(aut.apply(&e), e.neg());
        assert_eq!(aut.apply(&f), f.neg());
        assert_eq!(aut.apply(&h), h);
        // singular g rejected
        let z = CycMatrix::zeros(2, 2);
        assert_eq!(
            apply_matrix_conjugation(&alg, &z),
            Err(AlgebraError::SingularMatrix)
        );
    }

    #[test]
    fn chevalley_cartan_elements_are_semisimple() {
        let rs = RootSystem::build(RootFamily::A, 2).unwrap();
        let alg = build_chevalley(&rs).unwrap();
        for i in 0..2 {
            assert!(is_semisimple(&alg, &alg.basis_element(i)));
        }
        // root vectors are nilpotent
        for r in 0..rs.num_roots() {
            assert!(is_nilpotent(
                &alg,
                &alg.basis_element(alg.root_vector_index(r))
            ));
        }
    }
}
