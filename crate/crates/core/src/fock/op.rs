//! Exact polynomial differential operators on the Fock space.
//!
//! An operator is a sum of words in the atoms "multiply by zᵢ" and "left
//! derivative ∂ᵢ", with Gaussian-rational coefficients. Words act right to
//! left (the rightmost atom is applied first), matching the usual operator
//! product. Operators act on normal forms by applying the word to the
//! canonical lift and reducing again; the rewrite rules are degree
//! homogeneous, so each word shifts degree by exactly (#multiplications −
//! #derivatives), which is what the truncation bookkeeping relies on.

use super::{nf_basis, nf_dim, FockVector};
use crate::algebra::{AlgebraElement, BasisElement, Sign};
use crate::poly::{Parity, SuperPolynomial, Var};
use crate::scalar::{AlphaParam, GaussianRational};
use nalgebra::DMatrix;
use num::complex::Complex64;
use num::rational::BigRational;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

/// A single operator letter.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Atom {
    /// Left multiplication by a variable.
    MulZ(Var),
    /// Left partial derivative.
    Del(Var),
}

impl Atom {
    fn is_odd(self) -> bool {
        match self {
            Atom::MulZ(v) | Atom::Del(v) => v.is_odd(),
        }
    }

    fn degree_shift(self) -> i32 {
        match self {
            Atom::MulZ(_) => 1,
            Atom::Del(_) => -1,
        }
    }

    fn apply(self, p: &SuperPolynomial) -> SuperPolynomial {
        match self {
            Atom::MulZ(v) => SuperPolynomial::var(v).mul(p),
            Atom::Del(v) => p.partial(v),
        }
    }
}

/// A finite sum of coefficient·word operators. Identical words are merged,
/// so the representation is canonical for a fixed set of words.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FockOperator {
    terms: BTreeMap<Vec<Atom>, GaussianRational>,
}

impl FockOperator {
    pub fn zero() -> Self {
        FockOperator::default()
    }

    /// The identity (empty word).
    pub fn identity() -> Self {
        FockOperator::scalar(GaussianRational::one())
    }

    /// Scalar multiple of the identity.
    pub fn scalar(c: GaussianRational) -> Self {
        let mut t = BTreeMap::new();
        if !c.is_zero() {
            t.insert(Vec::new(), c);
        }
        FockOperator { terms: t }
    }

    pub fn scalar_rat(r: BigRational) -> Self {
        FockOperator::scalar(GaussianRational::from_rational(r))
    }

    /// Multiplication by zᵥ.
    pub fn z(v: Var) -> Self {
        FockOperator::word(vec![Atom::MulZ(v)])
    }

    /// Left derivative ∂ᵥ.
    pub fn d(v: Var) -> Self {
        FockOperator::word(vec![Atom::Del(v)])
    }

    fn word(w: Vec<Atom>) -> Self {
        let mut t = BTreeMap::new();
        t.insert(w, GaussianRational::one());
        FockOperator { terms: t }
    }

    fn add_word(&mut self, w: Vec<Atom>, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn scale(&self, s: &GaussianRational) -> FockOperator {
        let mut out = FockOperator::zero();
        for (w, c) in &self.terms {
            out.add_word(w.clone(), c * s);
        }
        out
    }

    pub fn scale_i(&self) -> FockOperator {
        self.scale(&GaussianRational::i())
    }

    /// Parity if homogeneous: every word must move parity the same way.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(|w| {
            Parity::of_bools(w.iter().filter(|a| a.is_odd()).count() % 2 == 1)
        });
        let first = it.next()?;
        if it.all(|p| p == first) {
            Some(first)
        } else {
            None
        }
    }

    /// (min, max) degree shift over all words; (0, 0) for the zero operator.
    pub fn degree_shift_bounds(&self) -> (i32, i32) {
        let mut min = i32::MAX;
        let mut max = i32::MIN;
        for w in self.terms.keys() {
            let s: i32 = w.iter().map(|a| a.degree_shift()).sum();
            min = min.min(s);
            max = max.max(s);
        }
        if min > max {
            (0, 0)
        } else {
            (min, max)
        }
    }

    /// Apply to a raw superpolynomial (no reduction).
    pub fn apply_poly(&self, p: &SuperPolynomial) -> SuperPolynomial {
        let mut out = SuperPolynomial::zero();
        for (w, c) in &self.terms {
            let mut acc = p.clone();
            for atom in w.iter().rev() {
                acc = atom.apply(&acc);
                if acc.is_zero() {
                    break;
                }
            }
            out = out.add(&acc.scale(c));
        }
        out
    }

    /// Apply on the Fock space: lift, apply, reduce.
    pub fn apply(&self, v: &FockVector) -> FockVector {
        FockVector::reduce(&self.apply_poly(v.as_poly()))
    }
}

impl Add for FockOperator {
    type Output = FockOperator;
    fn add(self, rhs: FockOperator) -> FockOperator {
        let mut out = self;
        for (w, c) in rhs.terms {
            out.add_word(w, c);
        }
        out
    }
}

impl Sub for FockOperator {
    type Output = FockOperator;
    fn sub(self, rhs: FockOperator) -> FockOperator {
        self + rhs.neg()
    }
}

impl Neg for FockOperator {
    type Output = FockOperator;
    fn neg(self) -> FockOperator {
        self.scale(&GaussianRational::from_int(-1))
    }
}

impl Mul for FockOperator {
    type Output = FockOperator;
    /// Operator composition: (A·B)(v) = A(B(v)).
    fn mul(self, rhs: FockOperator) -> FockOperator {
        let mut out = FockOperator::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_word(w, c1 * c2);
            }
        }
        out
    }
}

fn z(v: Var) -> FockOperator {
    FockOperator::z(v)
}

fn d(v: Var) -> FockOperator {
    FockOperator::d(v)
}

fn rat(n: i64, den: i64) -> GaussianRational {
    GaussianRational::from_ratio(n, den)
}

/// The Bessel operator 𝔅(zᵥ) of the model (with the representation
/// parameter tied to α):
///
/// * 𝔅(z₁) = (−α + z₁∂₁ + z₃∂₃ + z₄∂₄)∂₁ − 2α·z₂∂₃∂₄
/// * 𝔅(z₂) = (−1 + z₂∂₂ + z₃∂₃ + z₄∂₄)∂₂ − 2·z₁∂₃∂₄
/// * 𝔅(z₃) = (−2α + 2z₁∂₁ + 2αz₂∂₂ + 2(1+α)z₃∂₃)∂₄ + z₃∂₁∂₂
/// * 𝔅(z₄) = (2α − 2z₁∂₁ − 2αz₂∂₂ − 2(1+α)z₄∂₄)∂₃ + z₄∂₁∂₂
pub fn bessel(v: Var, alpha: &AlphaParam) -> FockOperator {
    use Var::*;
    let a = alpha.to_scalar();
    let two_a = &a * &GaussianRational::from_int(2);
    let two_1a = &two_a + &GaussianRational::from_int(2); // 2(1+α)
    match v {
        Z1 => {
            (FockOperator::scalar(-a.clone()) + z(Z1) * d(Z1) + z(Z3) * d(Z3) + z(Z4) * d(Z4))
                * d(Z1)
                - (z(Z2) * d(Z3) * d(Z4)).scale(&two_a)
        }
        Z2 => {
            (FockOperator::scalar(rat(-1, 1)) + z(Z2) * d(Z2) + z(Z3) * d(Z3) + z(Z4) * d(Z4))
                * d(Z2)
                - (z(Z1) * d(Z3) * d(Z4)).scale(&rat(2, 1))
        }
        Z3 => {
            (FockOperator::scalar(-two_a.clone())
                + (z(Z1) * d(Z1)).scale(&rat(2, 1))
                + (z(Z2) * d(Z2)).scale(&two_a)
                + (z(Z3) * d(Z3)).scale(&two_1a))
                * d(Z4)
                + z(Z3) * d(Z1) * d(Z2)
        }
        Z4 => {
            (FockOperator::scalar(two_a.clone())
                - (z(Z1) * d(Z1)).scale(&rat(2, 1))
                - (z(Z2) * d(Z2)).scale(&two_a)
                - (z(Z4) * d(Z4)).scale(&two_1a))
                * d(Z3)
                + z(Z4) * d(Z1) * d(Z2)
        }
    }
}

/// The operator realization ρ of D(2,1;α) on the Fock space.
///
/// Even part: ρ(F₁) = 2z₃∂₄, ρ(E₁) = ½z₄∂₃, ρ(H₁) = z₄∂₄ − z₃∂₃,
/// ρ(H₂) = z₁ − 𝔅(z₁), ρ(H₃) = z₂ − 𝔅(z₂), and
/// ρ(E₂/F₂) = −(i/2)(z₁+𝔅(z₁)) ± (i/2)(−α + 2z₁∂₁ + z₃∂₃ + z₄∂₄)
/// (E with +, F with −), ρ(E₃/F₃) analogously with z₂ and
/// (−1 + 2z₂∂₂ + z₃∂₃ + z₄∂₄).
///
/// Odd part, with W₃ = z₃+𝔅(z₃), V₃ = z₃−𝔅(z₃), W₄, V₄ analogous, and the
/// first-order parts P₃ = z₃∂₁ + 2αz₂∂₄ + z₃∂₂ + 2z₁∂₄,
/// P₄ = z₄∂₁ − 2αz₂∂₃ + z₄∂₂ − 2z₁∂₃, Q₃ = −z₃∂₁ − 2αz₂∂₄ + z₃∂₂ + 2z₁∂₄,
/// Q₄ = −z₄∂₁ + 2αz₂∂₃ + z₄∂₂ − 2z₁∂₃:
///
/// * ρ(u₋₋₋) = (i/2)(W₃ + P₃),  ρ(u₋₊₊) = (i/2)(−W₃ + P₃)
/// * ρ(u₊₋₋) = (i/4)(W₄ + P₄),  ρ(u₊₊₊) = (i/4)(−W₄ + P₄)
/// * ρ(u₋₋₊) = ½(−V₃ + Q₃),     ρ(u₋₊₋) = ½(−V₃ − Q₃)
/// * ρ(u₊₋₊) = ¼(−V₄ + Q₄),     ρ(u₊₊₋) = ¼(−V₄ − Q₄)
pub fn rho(x: BasisElement, alpha: &AlphaParam) -> FockOperator {
    use Var::*;
    let a = alpha.to_scalar();
    let two_a = &a * &GaussianRational::from_int(2);
    let half_i = GaussianRational::i().scale(&BigRational::new(1.into(), 2.into()));
    let quarter_i = GaussianRational::i().scale(&BigRational::new(1.into(), 4.into()));

    // Shared building blocks.
    let y2 = || {
        FockOperator::scalar(-a.clone())
            + (z(Z1) * d(Z1)).scale(&rat(2, 1))
            + z(Z3) * d(Z3)
            + z(Z4) * d(Z4)
    };
    let y3 = || {
        FockOperator::scalar(rat(-1, 1))
            + (z(Z2) * d(Z2)).scale(&rat(2, 1))
            + z(Z3) * d(Z3)
            + z(Z4) * d(Z4)
    };
    let w3 = || z(Z3) + bessel(Z3, alpha);
    let v3 = || z(Z3) - bessel(Z3, alpha);
    let w4 = || z(Z4) + bessel(Z4, alpha);
    let v4 = || z(Z4) - bessel(Z4, alpha);
    let p3 = || z(Z3) * d(Z1) + (z(Z2) * d(Z4)).scale(&two_a) + z(Z3) * d(Z2) + (z(Z1) * d(Z4)).scale(&rat(2, 1));
    let p4 = || z(Z4) * d(Z1) - (z(Z2) * d(Z3)).scale(&two_a) + z(Z4) * d(Z2) - (z(Z1) * d(Z3)).scale(&rat(2, 1));
    let q3 = || -(z(Z3) * d(Z1)) - (z(Z2) * d(Z4)).scale(&two_a) + z(Z3) * d(Z2) + (z(Z1) * d(Z4)).scale(&rat(2, 1));
    let q4 = || -(z(Z4) * d(Z1)) + (z(Z2) * d(Z3)).scale(&two_a) + z(Z4) * d(Z2) - (z(Z1) * d(Z3)).scale(&rat(2, 1));

    use Sign::{Minus as M, Plus as P};
    match x {
        BasisElement::F(1) => (z(Z3) * d(Z4)).scale(&rat(2, 1)),
        BasisElement::E(1) => (z(Z4) * d(Z3)).scale(&rat(1, 2)),
        BasisElement::H(1) => z(Z4) * d(Z4) - z(Z3) * d(Z3),
        BasisElement::H(2) => z(Z1) - bessel(Z1, alpha),
        BasisElement::H(3) => z(Z2) - bessel(Z2, alpha),
        BasisElement::E(2) => ((z(Z1) + bessel(Z1, alpha)).scale(&half_i).neg()) + y2().scale(&half_i),
        BasisElement::F(2) => ((z(Z1) + bessel(Z1, alpha)).scale(&half_i).neg()) - y2().scale(&half_i),
        BasisElement::E(3) => ((z(Z2) + bessel(Z2, alpha)).scale(&half_i).neg()) + y3().scale(&half_i),
        BasisElement::F(3) => ((z(Z2) + bessel(Z2, alpha)).scale(&half_i).neg()) - y3().scale(&half_i),
        BasisElement::U(M, M, M) => (w3() + p3()).scale(&half_i),
        BasisElement::U(M, P, P) => (w3().neg() + p3()).scale(&half_i),
        BasisElement::U(P, M, M) => (w4() + p4()).scale(&quarter_i),
        BasisElement::U(P, P, P) => (w4().neg() + p4()).scale(&quarter_i),
        BasisElement::U(M, M, P) => (v3().neg() + q3()).scale(&rat(1, 2)),
        BasisElement::U(M, P, M) => (v3().neg() - q3()).scale(&rat(1, 2)),
        BasisElement::U(P, M, P) => (v4().neg() + q4()).scale(&rat(1, 4)),
        BasisElement::U(P, P, M) => (v4().neg() - q4()).scale(&rat(1, 4)),
        BasisElement::E(_) | BasisElement::F(_) | BasisElement::H(_) => {
            unreachable!("sl(2) factor index is always 1..=3")
        }
    }
}

/// Linear extension of ρ to arbitrary algebra elements.
pub fn rho_element(x: &AlgebraElement, alpha: &AlphaParam) -> FockOperator {
    let mut out = FockOperator::zero();
    for (b, c) in x.terms() {
        out = out + rho(*b, alpha).scale(c);
    }
    out
}

/// Matrix of an operator on the degree-≤n slice, with truncation metadata.
#[derive(Clone, Debug)]
pub struct TruncatedMatrix {
    pub n: u32,
    /// Row-major entries over the flat degree-major basis.
    data: Vec<GaussianRational>,
    pub shift_min: i32,
    pub shift_max: i32,
}

impl TruncatedMatrix {
    pub fn dim(&self) -> usize {
        nf_dim(self.n)
    }

    pub fn entry(&self, r: usize, c: usize) -> &GaussianRational {
        &self.data[r * self.dim() + c]
    }

    /// Columns for basis degrees above this bound lost output to the
    /// truncation; everything at or below is exact.
    pub fn exact_col_degree(&self) -> i32 {
        self.n as i32 - self.shift_max.max(0)
    }

    /// Floating-point image for the numeric-exponential route.
    pub fn to_complex(&self) -> DMatrix<Complex64> {
        let dim = self.dim();
        DMatrix::from_fn(dim, dim, |r, c| {
            let (re, im) = self.entry(r, c).to_f64_pair();
            Complex64::new(re, im)
        })
    }

    pub fn is_identity(&self) -> bool {
        let dim = self.dim();
        (0..dim).all(|r| {
            (0..dim).all(|c| {
                let e = self.entry(r, c);
                if r == c {
                    *e == GaussianRational::one()
                } else {
                    e.is_zero()
                }
            })
        })
    }
}

/// Matrix of `op` on the degree-≤n slice: column c holds the coefficients of
/// `op(basis_c)`, with output above degree n discarded.
pub fn to_matrix(op: &FockOperator, n: u32) -> TruncatedMatrix {
    let dim = nf_dim(n);
    let (shift_min, shift_max) = op.degree_shift_bounds();
    let mut data = vec![GaussianRational::zero(); dim * dim];
    for (c, idx) in nf_basis(n).into_iter().enumerate() {
        let image = op.apply(&FockVector::basis(idx));
        for (ridx, coeff) in image.terms() {
            if ridx.degree() <= n {
                data[ridx.flat_index() * dim + c] = coeff.clone();
            }
        }
    }
    TruncatedMatrix {
        n,
        data,
        shift_min,
        shift_max,
    }
}

/// Largest coefficient of
/// `ρ(X)ρ(Y) − (−1)^{|X||Y|}ρ(Y)ρ(X) − ρ([X,Y])` applied to every
/// normal-form basis vector of degree ≤ n. Exactly 0 iff ρ is a
/// representation on that slice.
pub fn homomorphism_defect(
    sc: &crate::algebra::StructureConstants,
    x: BasisElement,
    y: BasisElement,
    n: u32,
) -> f64 {
    let alpha = sc.alpha();
    let op_x = rho(x, alpha);
    let op_y = rho(y, alpha);
    let op_bracket = rho_element(sc.bracket_basis(x, y), alpha);
    let koszul = x.parity().koszul_sign(y.parity());
    let mut max = 0.0f64;
    for idx in nf_basis(n) {
        let v = FockVector::basis(idx);
        let xy = op_x.apply(&op_y.apply(&v));
        let yx = op_y.apply(&op_x.apply(&v));
        let br = op_bracket.apply(&v);
        let signed_yx = if koszul < 0 { yx.neg() } else { yx };
        let defect = xy.sub(&signed_yx).sub(&br);
        max = max.max(defect.max_abs_coeff());
    }
    max
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::{NfFamily, NfIndex};
    use num::BigInt;

    fn alpha(n: i64, den: i64) -> AlphaParam {
        AlphaParam::new(BigRational::new(BigInt::from(n), BigInt::from(den))).unwrap()
    }

    fn c_rat(n: i64, den: i64) -> GaussianRational {
        GaussianRational::from_ratio(n, den)
    }

    #[test]
    fn bessel_z1_on_small_powers() {
        let a = alpha(-7, 3);
        let b1 = bessel(Var::Z1, &a);
        // 𝔅(z₁)z₁ = −α.
        let z1 = FockVector::basis(NfIndex::new(NfFamily::F1, 1));
        assert_eq!(
            b1.apply(&z1),
            FockVector::term(NfIndex::new(NfFamily::F1, 0), c_rat(7, 3))
        );
        // 𝔅(z₁)z₁² = 2(1−α)z₁.
        let z1sq = FockVector::basis(NfIndex::new(NfFamily::F1, 2));
        assert_eq!(
            b1.apply(&z1sq),
            FockVector::term(NfIndex::new(NfFamily::F1, 1), c_rat(20, 3))
        );
        // Constants are annihilated.
        assert!(b1.apply(&FockVector::one()).is_zero());
    }

    #[test]
    fn bessel_z3_on_z4_gives_minus_two_alpha() {
        let a = alpha(-2, 1);
        let b3 = bessel(Var::Z3, &a);
        let z4 = FockVector::basis(NfIndex::new(NfFamily::F4, 0));
        assert_eq!(
            b3.apply(&z4),
            FockVector::term(NfIndex::new(NfFamily::F1, 0), c_rat(4, 1))
        );
    }

    #[test]
    fn rho_h2_creates_z1_from_constant() {
        let a = alpha(-2, 1);
        let h2 = rho(BasisElement::H(2), &a);
        assert_eq!(
            h2.apply(&FockVector::one()),
            FockVector::basis(NfIndex::new(NfFamily::F1, 1))
        );
    }

    #[test]
    fn rho_sl2_first_factor_relations_on_slice() {
        // [ρ(E₁), ρ(F₁)] = ρ(H₁) exactly on the degree-≤5 slice.
        let a = alpha(-1, 2);
        let s = crate::algebra::StructureConstants::new(&a);
        assert_eq!(
            homomorphism_defect(&s, BasisElement::E(1), BasisElement::F(1), 5),
            0.0
        );
    }

    #[test]
    fn rho_operators_have_definite_parity() {
        let a = alpha(-7, 3);
        for b in BasisElement::all() {
            let op = rho(b, &a);
            assert_eq!(
                op.parity(),
                Some(b.parity()),
                "operator parity mismatch for {b}"
            );
        }
    }

    #[test]
    fn degree_shift_bounds_are_plus_minus_one_for_rho() {
        let a = alpha(-7, 3);
        for b in BasisElement::all() {
            let (lo, hi) = rho(b, &a).degree_shift_bounds();
            assert!(lo >= -1 && hi <= 1, "unexpected shifts for {b}: ({lo}, {hi})");
        }
    }

    #[test]
    fn identity_matrix_on_slice() {
        let m = to_matrix(&FockOperator::identity(), 3);
        assert_eq!(m.dim(), 13);
        assert!(m.is_identity());
        assert_eq!(m.exact_col_degree(), 3);
    }

    #[test]
    fn operator_algebra_combines_words() {
        // (z₁∂₁)·(z₁∂₁) has words of shift 0 only; sanity-check bounds.
        let e = FockOperator::z(Var::Z1) * FockOperator::d(Var::Z1);
        let sq = e.clone() * e.clone();
        assert_eq!(sq.degree_shift_bounds(), (0, 0));
        let sum = e.clone() + e.clone();
        assert_eq!(sum, e.scale(&GaussianRational::from_int(2)));
        let zero = e.clone() - e;
        assert_eq!(zero, FockOperator::zero());
    }

    #[test]
    fn bessel_operators_supercommute_on_low_degrees() {
        // [𝔅(zᵢ), 𝔅(zⱼ)} = 0 on the Fock space, checked exactly through
        // degree 6 — this is what makes the substitution p ↦ p(𝔅)
        // independent of the monomial word order up to the canonical signs.
        let a = alpha(-7, 3);
        let ops: Vec<(Var, FockOperator)> = Var::ALL
            .iter()
            .map(|v| (*v, bessel(*v, &a)))
            .collect();
        for (vi, bi) in &ops {
            for (vj, bj) in &ops {
                let sign = Parity::of_bools(vi.is_odd()).koszul_sign(Parity::of_bools(vj.is_odd()));
                for idx in nf_basis(6) {
                    let v = FockVector::basis(idx);
                    let ij = bi.apply(&bj.apply(&v));
                    let ji = bj.apply(&bi.apply(&v));
                    let signed = if sign < 0 { ji.neg() } else { ji };
                    assert_eq!(
                        ij.sub(&signed),
                        FockVector::zero(),
                        "supercommutator of B({vi}), B({vj}) failed on {idx}"
                    );
                }
            }
        }
    }
}
