//! The hyperbolic direction in the second factor, A₂ = exp(t·H₂): there is no
//! closed-form coefficient action, so the operator is computed as a numeric
//! matrix exponential of the truncated dρ(H₂) with a padding band, plus the
//! Laguerre eigenbasis route that exists for α > 0, and the generic
//! closed-form-vs-exponential consistency check for the other five families.
//!
//! Conditioning: dρ(H₂) is exponentiated in the S-balanced basis (coordinates
//! scaled by the square roots of the diagonal S-weights). The weights grow
//! factorially, so the raw-basis exponential would mix entries across ~40
//! orders of magnitude; in the balanced basis the matrix is skew-symmetric
//! for α < 0 (its exponential is orthogonal) and modestly sized for α > 0.

use super::numeric::{even_weight, odd_weight, NumericFockVector};
use super::{GroupError, OneParamElement, OneParamFamily};
use crate::algebra::BasisElement;
use crate::fock::{
    nf_dim, rho, rho_element, to_matrix, FockVector, NfFamily, NfIndex,
};
use crate::scalar::{factorial, pochhammer, AlphaParam, GaussianRational};
use nalgebra::{DMatrix, DVector};
use num::complex::Complex64;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use num::BigInt;

/// Result of the numeric A₂ action: the degree-≤N part plus an a-posteriori
/// truncation indicator (relative S-amplitude that leaked into the padding
/// band).
pub struct A2Applied {
    pub vector: NumericFockVector,
    pub band_indicator: f64,
}

fn sqrt_weight(idx: NfIndex, alpha: &AlphaParam) -> f64 {
    match idx.family {
        NfFamily::F1 | NfFamily::F2 => even_weight(alpha, idx.j).sqrt(),
        NfFamily::F3 | NfFamily::F4 => odd_weight(alpha, idx.j).sqrt(),
    }
}

/// Apply A₂(t) = exp(t·dρ(H₂)) numerically: exponentiate the matrix truncated
/// at cutoff n+padding (balanced basis, scaling-and-squaring), apply it to
/// `f`, return the degree-≤n part and the padding-band indicator.
pub fn act_a2_expm(
    t: f64,
    f: &NumericFockVector,
    n: u32,
    alpha: &AlphaParam,
    padding: u32,
) -> Result<A2Applied, GroupError> {
    if f.cutoff() > n {
        return Err(GroupError::CutoffTooSmall(f.cutoff(), n));
    }
    let big = n + padding;
    let dim = nf_dim(big);
    let tm = to_matrix(&rho(BasisElement::H(2), alpha), big);
    let flat: Vec<NfIndex> = (0..dim).map(NfIndex::from_flat).collect();
    let sqrtw: Vec<f64> = flat.iter().map(|i| sqrt_weight(*i, alpha)).collect();
    let mut balanced = DMatrix::<f64>::zeros(dim, dim);
    for r in 0..dim {
        for c in 0..dim {
            let a = tm.entry(r, c);
            if !a.is_zero() {
                balanced[(r, c)] = t * a.to_f64_pair().0 * sqrtw[r] / sqrtw[c];
            }
        }
    }
    let e = balanced.exp();
    let mut x_re = DVector::<f64>::zeros(dim);
    let mut x_im = DVector::<f64>::zeros(dim);
    for (i, idx) in flat.iter().enumerate() {
        let c = f.get(*idx);
        x_re[i] = c.re * sqrtw[i];
        x_im[i] = c.im * sqrtw[i];
    }
    let y_re = &e * x_re;
    let y_im = &e * x_im;
    let mut out = NumericFockVector::zero(big);
    let mut band_mass = 0.0;
    let mut total_mass = 0.0;
    for (i, idx) in flat.iter().enumerate() {
        // In balanced coordinates |y|² is already the S-mass.
        let mass = y_re[i] * y_re[i] + y_im[i] * y_im[i];
        total_mass += mass;
        if idx.degree() > n {
            band_mass += mass;
        }
        out.set(*idx, Complex64::new(y_re[i] / sqrtw[i], y_im[i] / sqrtw[i]));
    }
    let band_indicator = if total_mass > 0.0 {
        (band_mass / total_mass).sqrt()
    } else {
        0.0
    };
    Ok(A2Applied {
        vector: out.truncated(n),
        band_indicator,
    })
}

/// Coefficients of x^0..x^k in L_k^{(a)}(2x), from the finite sum
/// L_k^{(a)}(2x) = (−1)^k/k! · Σᵢ (−1)^i/i! (−a−k)ᵢ(−k)ᵢ (2x)^{k−i}.
pub fn laguerre_coeffs(k: u32, a: &BigRational) -> Vec<BigRational> {
    let neg_a_minus_k = -(a + BigRational::from_integer(BigInt::from(k)));
    let neg_k = BigRational::from_integer(-BigInt::from(k));
    let lead = BigRational::from_integer(if k % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }) / factorial(k);
    let mut coeffs = vec![BigRational::zero(); k as usize + 1];
    for i in 0..=k {
        let m = (k - i) as usize;
        let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        let term = &lead
            * BigRational::from_integer(sign)
            * (pochhammer(&neg_a_minus_k, i) * pochhammer(&neg_k, i) / factorial(i))
            * BigRational::from_integer(BigInt::one() << m);
        coeffs[m] += term;
    }
    coeffs
}

/// Coefficients of x^0..x^n in e^{−x}·L_k^{(a)}(2x) (exact truncation of the
/// exponential series).
pub fn laguerre_expansion(k: u32, a: &BigRational, n: u32) -> Vec<BigRational> {
    let lag = laguerre_coeffs(k, a);
    let mut out = vec![BigRational::zero(); n as usize + 1];
    for (d, slot) in out.iter_mut().enumerate() {
        for (m, c) in lag.iter().enumerate().take(d + 1) {
            let r = (d - m) as u32;
            let sign = if r % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            *slot += c * BigRational::from_integer(sign) / factorial(r);
        }
    }
    out
}

/// The degree-≤n truncation of e^{−z₁}L_k^{(−1−α)}(2z₁) as an exact
/// family-1 Fock vector — an eigenvector of dρ(H₂) for eigenvalue 2k−α.
pub fn laguerre_family1_vector(k: u32, alpha: &AlphaParam, n: u32) -> FockVector {
    let a = -BigRational::one() - alpha.rational().clone();
    let mut v = FockVector::zero();
    for (j, c) in laguerre_expansion(k, &a, n).into_iter().enumerate() {
        v = v.add(&FockVector::term(
            NfIndex::new(NfFamily::F1, j as u32),
            GaussianRational::from_rational(c),
        ));
    }
    v
}

/// Exact residual dρ(H₂)(t_n v) − (2k−α)(t_n v) for the truncated Laguerre
/// eigenvector. The band structure of dρ(H₂) confines it to degrees
/// {n, n+1}: every interior coefficient is exactly zero.
pub fn laguerre_eigen_residual(k: u32, alpha: &AlphaParam, n: u32) -> FockVector {
    let v = laguerre_family1_vector(k, alpha, n);
    let d = rho(BasisElement::H(2), alpha);
    let eigen = GaussianRational::from_rational(
        BigRational::from_integer(BigInt::from(2 * k)) - alpha.rational().clone(),
    );
    d.apply(&v).sub(&v.scale(&eigen))
}

/// Laguerre-basis coefficients (g₁,g₂ even families, g₃,g₄ odd families).
#[derive(Clone, Debug, PartialEq)]
pub struct LaguerreCoeffs {
    pub g1: Vec<Complex64>,
    pub g2: Vec<Complex64>,
    pub g3: Vec<Complex64>,
    pub g4: Vec<Complex64>,
}

/// A₂(t) in the Laguerre eigenbasis, available for α > 0 only: multiplies
/// the (g₁,g₂) families by e^{t(2k−α)} and the (g₃,g₄) families by
/// e^{t(2k−α−1)}.
pub fn act_a2_laguerre(
    t: f64,
    g: &LaguerreCoeffs,
    alpha: &AlphaParam,
) -> Result<LaguerreCoeffs, GroupError> {
    if !alpha.rational().is_positive() {
        return Err(GroupError::AlphaNotPositive);
    }
    let a = alpha.to_f64();
    let mut out = g.clone();
    for (k, v) in out.g1.iter_mut().enumerate() {
        *v *= (t * (2.0 * k as f64 - a)).exp();
    }
    for (k, v) in out.g2.iter_mut().enumerate() {
        *v *= (t * (2.0 * k as f64 - a)).exp();
    }
    for (k, v) in out.g3.iter_mut().enumerate() {
        *v *= (t * (2.0 * k as f64 - a - 1.0)).exp();
    }
    for (k, v) in out.g4.iter_mut().enumerate() {
        *v *= (t * (2.0 * k as f64 - a - 1.0)).exp();
    }
    Ok(out)
}

/// Compare the closed-form action of one family against the numeric
/// exponential of its truncated generator matrix; returns the largest
/// coefficient deviation over the uncontaminated block (degrees at most
/// n − span, where span is the generator's degree-shift reach — the rows a
/// truncated exponential computes exactly as if untruncated).
pub fn exp_consistency_defect(
    family: OneParamFamily,
    t: f64,
    n: u32,
    alpha: &AlphaParam,
) -> Result<f64, GroupError> {
    if family == OneParamFamily::A2 {
        return Err(GroupError::A2NotClosedForm);
    }
    let op = rho_element(&family.generator(), alpha);
    let tm = to_matrix(&op, n);
    let span = tm.shift_min.unsigned_abs().max(tm.shift_max.unsigned_abs());
    let dim = nf_dim(n);
    let e = (tm.to_complex() * Complex64::new(t, 0.0)).exp();
    let mut max = 0.0f64;
    for ci in 0..dim {
        let col = NfIndex::from_flat(ci);
        let closed = super::numeric::act_closed_form(
            &OneParamElement::new(family, t),
            &NumericFockVector::basis(col, n),
            alpha,
        )?;
        for ri in 0..dim {
            let row = NfIndex::from_flat(ri);
            if row.degree() + span > n {
                continue;
            }
            max = max.max((e[(ri, ci)] - closed.get(row)).norm());
        }
    }
    Ok(max)
}
