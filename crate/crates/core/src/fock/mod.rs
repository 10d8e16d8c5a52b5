//! The polynomial Fock space: the quotient of the superpolynomial ring by
//! the ideal generated by z₂², z₂z₃, z₂z₄, and 2z₁z₂ + z₃z₄.
//!
//! Every class has a unique normal form
//! `f₁(z₁) + f₂(z₁)z₂ + f₃(z₁)z₃ + f₄(z₁)z₄`, so a degree-≤N slice has the
//! 4N+1 monomial basis 1, z₁, z₂, z₃, z₄, z₁², z₁z₂, z₁z₃, z₁z₄, …
//! (degree-major, and inside each degree the family order 1, 2, 3, 4).
//! Reduction is a single pass over monomials: z₂ may appear at most once and
//! never next to z₃ or z₄, and z₃z₄ rewrites to −2z₁z₂ — a degree-preserving
//! rule, which is what makes truncation bookkeeping exact.

mod op;
mod pairing;

pub use op::{
    bessel, homomorphism_defect, rho, rho_element, to_matrix, FockOperator, TruncatedMatrix,
};
pub use pairing::{
    bessel_fischer, det_exact, diagonal_symmetry, expected_bf, expected_s_diag, fundamental_symmetry,
    gram_matrix, inner_s, norm_sq_s, skew_supersymmetry_defect, sur_witness_defect, GramForm,
};

use crate::poly::{Parity, SuperMonomial, SuperPolynomial, Var};
use crate::scalar::GaussianRational;
use std::fmt;

/// Which of the four coefficient families a normal-form monomial belongs to.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum NfFamily {
    /// z₁^j
    F1,
    /// z₁^j z₂
    F2,
    /// z₁^j z₃
    F3,
    /// z₁^j z₄
    F4,
}

impl NfFamily {
    pub const ALL: [NfFamily; 4] = [NfFamily::F1, NfFamily::F2, NfFamily::F3, NfFamily::F4];

    /// Position of the family within a fixed-degree block of the flat order.
    pub fn offset(self) -> usize {
        match self {
            NfFamily::F1 => 0,
            NfFamily::F2 => 1,
            NfFamily::F3 => 2,
            NfFamily::F4 => 3,
        }
    }

    pub fn parity(self) -> Parity {
        match self {
            NfFamily::F3 | NfFamily::F4 => Parity::Odd,
            _ => Parity::Even,
        }
    }
}

/// A normal-form basis monomial: family i with z₁-power j, i.e. z₁^j,
/// z₁^j z₂, z₁^j z₃, or z₁^j z₄.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct NfIndex {
    pub family: NfFamily,
    pub j: u32,
}

impl NfIndex {
    pub fn new(family: NfFamily, j: u32) -> Self {
        NfIndex { family, j }
    }

    pub fn degree(self) -> u32 {
        match self.family {
            NfFamily::F1 => self.j,
            _ => self.j + 1,
        }
    }

    pub fn parity(self) -> Parity {
        self.family.parity()
    }

    pub fn monomial(self) -> SuperMonomial {
        match self.family {
            NfFamily::F1 => SuperMonomial::new(self.j, 0, false, false),
            NfFamily::F2 => SuperMonomial::new(self.j, 1, false, false),
            NfFamily::F3 => SuperMonomial::new(self.j, 0, true, false),
            NfFamily::F4 => SuperMonomial::new(self.j, 0, false, true),
        }
    }

    /// Inverse of [`NfIndex::monomial`]; `None` for non-normal monomials.
    pub fn from_monomial(m: &SuperMonomial) -> Option<NfIndex> {
        match (m.b, m.c, m.d) {
            (0, false, false) => Some(NfIndex::new(NfFamily::F1, m.a)),
            (1, false, false) => Some(NfIndex::new(NfFamily::F2, m.a)),
            (0, true, false) => Some(NfIndex::new(NfFamily::F3, m.a)),
            (0, false, true) => Some(NfIndex::new(NfFamily::F4, m.a)),
            _ => None,
        }
    }

    /// Position in the degree-major flat enumeration of the degree-≤n basis.
    pub fn flat_index(self) -> usize {
        let d = self.degree() as usize;
        if d == 0 {
            0
        } else {
            1 + 4 * (d - 1) + self.family.offset()
        }
    }

    /// Inverse of [`NfIndex::flat_index`].
    pub fn from_flat(idx: usize) -> NfIndex {
        if idx == 0 {
            return NfIndex::new(NfFamily::F1, 0);
        }
        let d = (idx - 1) / 4 + 1;
        let family = NfFamily::ALL[(idx - 1) % 4];
        let j = match family {
            NfFamily::F1 => d as u32,
            _ => d as u32 - 1,
        };
        NfIndex::new(family, j)
    }
}

impl fmt::Display for NfIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.monomial())
    }
}

/// Dimension of the degree-≤n slice: 4n + 1.
pub fn nf_dim(n: u32) -> usize {
    4 * n as usize + 1
}

/// The degree-≤n normal-form basis in flat order.
pub fn nf_basis(n: u32) -> Vec<NfIndex> {
    (0..nf_dim(n)).map(NfIndex::from_flat).collect()
}

/// An element of the Fock space in normal form.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FockVector {
    poly: SuperPolynomial,
}

impl FockVector {
    pub fn zero() -> Self {
        FockVector::default()
    }

    pub fn one() -> Self {
        FockVector {
            poly: SuperPolynomial::one(),
        }
    }

    /// The basis monomial for a normal-form index.
    pub fn basis(idx: NfIndex) -> Self {
        FockVector {
            poly: SuperPolynomial::monomial(idx.monomial(), GaussianRational::one()),
        }
    }

    pub fn term(idx: NfIndex, c: GaussianRational) -> Self {
        FockVector {
            poly: SuperPolynomial::monomial(idx.monomial(), c),
        }
    }

    /// Reduce an arbitrary superpolynomial to its normal form. Monomial by
    /// monomial: kill anything containing z₂², z₂z₃, or z₂z₄, and rewrite
    /// z₃z₄ → −2z₁z₂.
    pub fn reduce(p: &SuperPolynomial) -> FockVector {
        let mut out = SuperPolynomial::zero();
        for (m, c) in p.terms() {
            if m.b >= 2 || (m.b >= 1 && (m.c || m.d)) {
                continue;
            }
            if m.c && m.d {
                // z₁^a z₃z₄ = −2 z₁^{a+1} z₂ in the quotient.
                out.add_term(
                    SuperMonomial::new(m.a + 1, 1, false, false),
                    c.scale(&num::rational::BigRational::from_integer((-2).into())),
                );
            } else {
                out.add_term(*m, c.clone());
            }
        }
        FockVector { poly: out }
    }

    /// The canonical polynomial lift.
    pub fn as_poly(&self) -> &SuperPolynomial {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn degree(&self) -> Option<u32> {
        self.poly.degree()
    }

    pub fn coeff(&self, idx: NfIndex) -> GaussianRational {
        self.poly.coeff(&idx.monomial())
    }

    pub fn terms(&self) -> impl Iterator<Item = (NfIndex, &GaussianRational)> {
        self.poly.terms().map(|(m, c)| {
            (
                NfIndex::from_monomial(m).expect("FockVector invariant: normal-form support"),
                c,
            )
        })
    }

    pub fn add(&self, o: &FockVector) -> FockVector {
        FockVector {
            poly: self.poly.add(&o.poly),
        }
    }

    pub fn sub(&self, o: &FockVector) -> FockVector {
        FockVector {
            poly: self.poly.sub(&o.poly),
        }
    }

    pub fn neg(&self) -> FockVector {
        FockVector {
            poly: self.poly.neg(),
        }
    }

    pub fn scale(&self, s: &GaussianRational) -> FockVector {
        FockVector {
            poly: self.poly.scale(s),
        }
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.poly.max_abs_coeff()
    }

    pub fn conj_coeffs(&self) -> FockVector {
        FockVector {
            poly: self.poly.conj_coeffs(),
        }
    }

    /// Coefficients over the flat degree-≤n basis, discarding any support
    /// above degree n (truncation semantics).
    pub fn to_dense_truncated(&self, n: u32) -> Vec<GaussianRational> {
        let mut out = vec![GaussianRational::zero(); nf_dim(n)];
        for (idx, c) in self.terms() {
            if idx.degree() <= n {
                out[idx.flat_index()] = c.clone();
            }
        }
        out
    }

    pub fn from_dense(coeffs: &[GaussianRational]) -> FockVector {
        let mut poly = SuperPolynomial::zero();
        for (i, c) in coeffs.iter().enumerate() {
            poly.add_term(NfIndex::from_flat(i).monomial(), c.clone());
        }
        FockVector { poly }
    }

    /// Left-multiply by a variable and re-reduce.
    pub fn mul_var(&self, v: Var) -> FockVector {
        FockVector::reduce(&SuperPolynomial::var(v).mul(&self.poly))
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Var;

    fn z(v: Var) -> SuperPolynomial {
        SuperPolynomial::var(v)
    }

    #[test]
    fn rewriting_rules() {
        // z₂² → 0
        assert!(FockVector::reduce(&z(Var::Z2).mul(&z(Var::Z2))).is_zero());
        // z₂z₃ → 0, z₂z₄ → 0
        assert!(FockVector::reduce(&z(Var::Z2).mul(&z(Var::Z3))).is_zero());
        assert!(FockVector::reduce(&z(Var::Z2).mul(&z(Var::Z4))).is_zero());
        // z₃z₄ → −2z₁z₂
        let expect = FockVector::term(
            NfIndex::new(NfFamily::F2, 1),
            GaussianRational::from_int(-2),
        );
        assert_eq!(FockVector::reduce(&z(Var::Z3).mul(&z(Var::Z4))), expect);
        // z₄z₃ = −z₃z₄ → +2z₁z₂
        assert_eq!(
            FockVector::reduce(&z(Var::Z4).mul(&z(Var::Z3))),
            expect.neg()
        );
        // Normal monomials pass through unchanged.
        let m = z(Var::Z1).mul(&z(Var::Z1)).mul(&z(Var::Z2));
        assert_eq!(FockVector::reduce(&m).as_poly(), &m);
    }

    #[test]
    fn reduction_is_degree_preserving() {
        let p = z(Var::Z1).mul(&z(Var::Z3)).mul(&z(Var::Z4));
        let r = FockVector::reduce(&p);
        assert_eq!(p.degree(), r.as_poly().degree());
    }

    #[test]
    fn flat_enumeration_round_trips() {
        let basis = nf_basis(6);
        assert_eq!(basis.len(), 25);
        for (i, idx) in basis.iter().enumerate() {
            assert_eq!(idx.flat_index(), i);
            assert_eq!(NfIndex::from_flat(i), *idx);
            assert!(idx.degree() <= 6);
        }
        // Leading entries: 1, z1, z2, z3, z4, z1^2, z1*z2, z1*z3, z1*z4.
        let names: Vec<String> = basis.iter().take(9).map(|b| b.to_string()).collect();
        assert_eq!(
            names,
            vec!["1", "z1", "z2", "z3", "z4", "z1^2", "z1*z2", "z1*z3", "z1*z4"]
        );
    }

    #[test]
    fn dense_round_trip() {
        let mut coeffs = vec![GaussianRational::zero(); nf_dim(3)];
        coeffs[0] = GaussianRational::from_int(5);
        coeffs[7] = GaussianRational::i();
        let v = FockVector::from_dense(&coeffs);
        assert_eq!(v.to_dense_truncated(3), coeffs);
        // Truncation drops high-degree support silently.
        let w = FockVector::basis(NfIndex::new(NfFamily::F1, 9));
        assert!(w
            .to_dense_truncated(3)
            .iter()
            .all(|c| c.is_zero()));
    }

    #[test]
    fn mul_var_reduces() {
        // z₂ · z₂ = 0 in the quotient; z₃ · z₄-basis hits the rewrite rule.
        let v = FockVector::basis(NfIndex::new(NfFamily::F2, 0));
        assert!(v.mul_var(Var::Z2).is_zero());
        let w = FockVector::basis(NfIndex::new(NfFamily::F4, 0));
        let got = w.mul_var(Var::Z3);
        assert_eq!(
            got,
            FockVector::term(NfIndex::new(NfFamily::F2, 1), GaussianRational::from_int(-2))
        );
    }
}
