//! The Bessel–Fischer pairing ⟨p, q⟩ = p(𝔅)q̄ |_{z=0}, the fundamental
//! symmetry S, the positive form (·,·)_S = ⟨·, S·⟩, and Gram-matrix
//! utilities — all exact.
//!
//! Substituting 𝔅 into p walks each normal-form monomial z₁^j·(1|z₂|z₃|z₄)
//! left to right, so the operator word is 𝔅(z₁)^j followed by the family
//! factor, applied rightmost-first. The Bessel operators supercommute on the
//! quotient (tested in the operator module), so this canonical order is the
//! only convention needed.

use super::op::{bessel, rho_element};
use super::{nf_basis, FockVector, NfFamily, NfIndex};
use crate::algebra::{AlgebraElement, BasisElement};
use crate::poly::Var;
use crate::scalar::{factorial, sgn, AlphaParam, GaussianRational};
use num::rational::BigRational;
use num::traits::{Signed, Zero};

/// Which sesquilinear form a Gram matrix is built from.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum GramForm {
    /// The Bessel–Fischer product ⟨·,·⟩ (superhermitian, indefinite).
    BesselFischer,
    /// The positive form (·,·)_S = ⟨·, S·⟩.
    S,
}

/// Apply the substituted operator word of one normal-form monomial to `q`.
fn apply_bessel_word(idx: NfIndex, q: &FockVector, alpha: &AlphaParam) -> FockVector {
    let mut acc = match idx.family {
        NfFamily::F1 => q.clone(),
        NfFamily::F2 => bessel(Var::Z2, alpha).apply(q),
        NfFamily::F3 => bessel(Var::Z3, alpha).apply(q),
        NfFamily::F4 => bessel(Var::Z4, alpha).apply(q),
    };
    let b1 = bessel(Var::Z1, alpha);
    for _ in 0..idx.j {
        if acc.is_zero() {
            break;
        }
        acc = b1.apply(&acc);
    }
    acc
}

/// The Bessel–Fischer product ⟨p, q⟩ = (p(𝔅) q̄)(0): linear in `p`,
/// conjugate-linear in `q`.
pub fn bessel_fischer(p: &FockVector, q: &FockVector, alpha: &AlphaParam) -> GaussianRational {
    let qbar = q.conj_coeffs();
    let mut out = GaussianRational::zero();
    for (idx, c) in p.terms() {
        let image = apply_bessel_word(idx, &qbar, alpha);
        out += &(c * image.coeff(NfIndex::new(NfFamily::F1, 0)));
    }
    out
}

fn sgn_neg_alpha(alpha: &AlphaParam, k: u32) -> i32 {
    sgn(&alpha.neg_alpha_pochhammer(k))
}

/// A family-diagonal symmetry built from per-family weights ε and the signs
/// of (−α)ₖ:
///
/// * z₁^j        ↦  ε₁·sgn((−α)ⱼ)   · z₁^j
/// * z₁^j z₂     ↦ −ε₂·sgn((−α)ⱼ)   · z₁^j z₂
/// * z₁^j z₃     ↦  ε₃·sgn((−α)ⱼ₊₁) · z₁^j z₄
/// * z₁^j z₄     ↦ −ε₄·sgn((−α)ⱼ₊₁) · z₁^j z₃
///
/// With ε = (1,1,1,1) this is the fundamental symmetry S. Degenerate
/// (not a symmetry) when α ∈ ℕ, where the signs vanish.
pub fn diagonal_symmetry(
    v: &FockVector,
    alpha: &AlphaParam,
    eps: &[BigRational; 4],
) -> FockVector {
    let mut out = FockVector::zero();
    for (idx, c) in v.terms() {
        let (target, weight) = match idx.family {
            NfFamily::F1 => (
                NfIndex::new(NfFamily::F1, idx.j),
                &eps[0] * BigRational::from_integer(sgn_neg_alpha(alpha, idx.j).into()),
            ),
            NfFamily::F2 => (
                NfIndex::new(NfFamily::F2, idx.j),
                -(&eps[1] * BigRational::from_integer(sgn_neg_alpha(alpha, idx.j).into())),
            ),
            NfFamily::F3 => (
                NfIndex::new(NfFamily::F4, idx.j),
                &eps[2] * BigRational::from_integer(sgn_neg_alpha(alpha, idx.j + 1).into()),
            ),
            NfFamily::F4 => (
                NfIndex::new(NfFamily::F3, idx.j),
                -(&eps[3] * BigRational::from_integer(sgn_neg_alpha(alpha, idx.j + 1).into())),
            ),
        };
        out = out.add(&FockVector::term(target, c.scale(&weight)));
    }
    out
}

/// The fundamental symmetry S (all ε = 1). Satisfies S² = parity, S⁴ = 1.
pub fn fundamental_symmetry(v: &FockVector, alpha: &AlphaParam) -> FockVector {
    let one = BigRational::from_integer(1.into());
    diagonal_symmetry(v, alpha, &[one.clone(), one.clone(), one.clone(), one])
}

/// The positive form (p, q)_S = ⟨p, S(q)⟩.
pub fn inner_s(p: &FockVector, q: &FockVector, alpha: &AlphaParam) -> GaussianRational {
    bessel_fischer(p, &fundamental_symmetry(q, alpha), alpha)
}

/// ‖p‖²_S as an exact rational. Panics if the computed value is not real
/// (which would indicate a broken symmetry, not a user error).
pub fn norm_sq_s(p: &FockVector, alpha: &AlphaParam) -> BigRational {
    let v = inner_s(p, p, alpha);
    assert!(v.im.is_zero(), "(p,p)_S must be real, got {v}");
    v.re
}

/// Closed-form value of ⟨row, col⟩ on normal-form basis monomials: the only
/// non-zero entries are
///
/// * ⟨z₁^j, z₁^j⟩ = j!(−α)ⱼ           and  ⟨z₁^j z₂, z₁^j z₂⟩ = −j!(−α)ⱼ,
/// * ⟨z₁^j z₃, z₁^j z₄⟩ = 2·j!(−α)ⱼ₊₁ and  ⟨z₁^j z₄, z₁^j z₃⟩ = −2·j!(−α)ⱼ₊₁.
pub fn expected_bf(row: NfIndex, col: NfIndex, alpha: &AlphaParam) -> GaussianRational {
    if row.j != col.j {
        return GaussianRational::zero();
    }
    let j = row.j;
    let base = factorial(j) * alpha.neg_alpha_pochhammer(j);
    let odd = factorial(j) * alpha.neg_alpha_pochhammer(j + 1) * BigRational::from_integer(2.into());
    let val = match (row.family, col.family) {
        (NfFamily::F1, NfFamily::F1) => base,
        (NfFamily::F2, NfFamily::F2) => -base,
        (NfFamily::F3, NfFamily::F4) => odd,
        (NfFamily::F4, NfFamily::F3) => -odd,
        _ => BigRational::zero(),
    };
    GaussianRational::from_rational(val)
}

/// Closed-form diagonal of (·,·)_S: j!|(−α)ⱼ| on both even families and
/// 2·j!|(−α)ⱼ₊₁| on both odd families (off-diagonal entries vanish).
pub fn expected_s_diag(idx: NfIndex, alpha: &AlphaParam) -> BigRational {
    let j = idx.j;
    match idx.family {
        NfFamily::F1 | NfFamily::F2 => {
            let p = alpha.neg_alpha_pochhammer(j);
            factorial(j) * if p.is_negative() { -p } else { p }
        }
        NfFamily::F3 | NfFamily::F4 => {
            let p = alpha.neg_alpha_pochhammer(j + 1);
            factorial(j)
                * BigRational::from_integer(2.into())
                * if p.is_negative() { -p } else { p }
        }
    }
}

/// Gram matrix of the chosen form over the degree-≤n basis, exact.
pub fn gram_matrix(alpha: &AlphaParam, n: u32, form: GramForm) -> Vec<Vec<GaussianRational>> {
    let basis = nf_basis(n);
    // Precompute the column images: for column q, ⟨p, q⟩ applies p's word to
    // q̄, and every word is 𝔅(z₁)^j after an optional family factor — so we
    // build the iterated-𝔅(z₁) ladder once per column and family.
    let b = [
        bessel(Var::Z1, alpha),
        bessel(Var::Z2, alpha),
        bessel(Var::Z3, alpha),
        bessel(Var::Z4, alpha),
    ];
    let mut out = vec![vec![GaussianRational::zero(); basis.len()]; basis.len()];
    for (ci, col) in basis.iter().enumerate() {
        let qv = FockVector::basis(*col);
        let q = match form {
            GramForm::BesselFischer => qv,
            GramForm::S => fundamental_symmetry(&qv, alpha),
        };
        // ladder[f][j] = 𝔅(z₁)^j (𝔅-family-f (q̄)); family 0 means no factor.
        let base: [FockVector; 4] = [
            q.clone(),
            b[1].apply(&q),
            b[2].apply(&q),
            b[3].apply(&q),
        ];
        let mut ladder: Vec<Vec<FockVector>> = base.into_iter().map(|v| vec![v]).collect();
        for f in 0..4 {
            for _ in 0..n {
                let next = b[0].apply(ladder[f].last().unwrap());
                ladder[f].push(next);
            }
        }
        for (ri, row) in basis.iter().enumerate() {
            let f = row.family.offset();
            let image = &ladder[f][row.j as usize];
            out[ri][ci] = image.coeff(NfIndex::new(NfFamily::F1, 0));
        }
    }
    out
}

/// Exact determinant by Gaussian elimination with pivoting (the scalars form
/// a field, so plain fraction arithmetic is exact).
pub fn det_exact(m: &[Vec<GaussianRational>]) -> GaussianRational {
    let n = m.len();
    let mut a: Vec<Vec<GaussianRational>> = m.to_vec();
    let mut det = GaussianRational::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero());
        let Some(pivot) = pivot else {
            return GaussianRational::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &p;
            for c in col..n {
                let sub = &factor * &a[col][c];
                let val = &a[r][c] - &sub;
                a[r][c] = val;
            }
        }
    }
    det
}

/// Largest violation of skew-supersymmetry
/// `⟨ρ(X)p, q⟩ + (−1)^{|X||p|}⟨p, ρ(X)q⟩ = 0` over normal-form basis pairs of
/// degree ≤ n. Exactly 0 when the representation is compatible with the
/// pairing.
pub fn skew_supersymmetry_defect(alpha: &AlphaParam, x: BasisElement, n: u32) -> f64 {
    let op = super::op::rho(x, alpha);
    let basis = nf_basis(n);
    let images: Vec<FockVector> = basis
        .iter()
        .map(|idx| op.apply(&FockVector::basis(*idx)))
        .collect();
    let mut max = 0.0f64;
    for (pi, p) in basis.iter().enumerate() {
        let pv = FockVector::basis(*p);
        let koszul = x.parity().koszul_sign(p.parity());
        for (qi, q) in basis.iter().enumerate() {
            let qv = FockVector::basis(*q);
            let lhs = bessel_fischer(&images[pi], &qv, alpha);
            let rhs = bessel_fischer(&pv, &images[qi], alpha);
            let defect = if koszul < 0 { &lhs - &rhs } else { &lhs + &rhs };
            max = max.max(defect.abs_f64());
        }
    }
    max
}

/// Invariance defect of the candidate form (x, y)_J = ⟨x, J(y)⟩ built from a
/// family-diagonal J with weights ε, probed at X = E₃ + F₃, p = z₂, q = 1:
///
/// defect = (dρ(X)p, q)_J + (p, dρ(X)q)_J.
///
/// For positive ε this equals i·(ε₁ + ε₂) ≠ 0 — no diagonal candidate is
/// invariant, which is the witness that the representation is not strongly
/// super-unitary.
pub fn sur_witness_defect(alpha: &AlphaParam, eps: &[BigRational; 4]) -> GaussianRational {
    let x = AlgebraElement::basis(BasisElement::E(3)).add(&AlgebraElement::basis(
        BasisElement::F(3),
    ));
    let drho = rho_element(&x, alpha);
    let p = FockVector::basis(NfIndex::new(NfFamily::F2, 0));
    let q = FockVector::one();
    let lhs = bessel_fischer(&drho.apply(&p), &diagonal_symmetry(&q, alpha, eps), alpha);
    let rhs = bessel_fischer(&p, &diagonal_symmetry(&drho.apply(&q), alpha, eps), alpha);
    &lhs + &rhs
}
