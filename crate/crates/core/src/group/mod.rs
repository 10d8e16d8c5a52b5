//! Integrated group actions on the truncated Fock space: SL(2) exponentials
//! and Cartan decomposition, the six one-parameter families K₁,K₂,K₃ (elliptic)
//! and A₁,A₂,A₃ (hyperbolic), closed-form coefficient actions, and the
//! numeric-exponential route for A₂.
//!
//! Conventions: K(θ) = [[cos θ, −sin θ], [sin θ, cos θ]] = exp(θ(F−E)),
//! A(a) = diag(eᵃ, e⁻ᵃ) = exp(aH), with E, F, H the standard sl(2) triple.

pub mod a2;
pub mod numeric;

pub use a2::{
    act_a2_expm, act_a2_laguerre, exp_consistency_defect, laguerre_coeffs, laguerre_eigen_residual,
    laguerre_expansion, laguerre_family1_vector, A2Applied, LaguerreCoeffs,
};
pub use numeric::{act_closed_form, act_word, NumericFockVector, VectorFile, WordResult};

use crate::algebra::{AlgebraElement, BasisElement};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum GroupError {
    #[error("matrix determinant {0} is not 1 within 1e-12")]
    NotUnimodular(f64),
    #[error("factor index {0} must be 1, 2 or 3")]
    BadFactorIndex(u8),
    #[error("cannot parse group word element `{0}` (expected e.g. `K2(0.3)`)")]
    ParseWord(String),
    #[error("A2 has no closed-form coefficient action; use the numeric exponential")]
    A2NotClosedForm,
    #[error("the Laguerre-basis A2 action requires alpha > 0")]
    AlphaNotPositive,
    #[error("input vector degree {0} exceeds the requested cutoff {1}")]
    CutoffTooSmall(u32, u32),
}

/// An element of one SL(2) factor, double-precision entries, row-major.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct GroupElementSL2 {
    pub entries: [[f64; 2]; 2],
    pub factor_index: u8,
}

impl GroupElementSL2 {
    pub fn new(entries: [[f64; 2]; 2], factor_index: u8) -> Result<Self, GroupError> {
        if !(1..=3).contains(&factor_index) {
            return Err(GroupError::BadFactorIndex(factor_index));
        }
        let det = entries[0][0] * entries[1][1] - entries[0][1] * entries[1][0];
        if !(det - 1.0).abs().is_finite() || (det - 1.0).abs() > 1e-12 {
            return Err(GroupError::NotUnimodular(det));
        }
        Ok(GroupElementSL2 {
            entries,
            factor_index,
        })
    }

    pub fn identity(factor_index: u8) -> Self {
        GroupElementSL2 {
            entries: [[1.0, 0.0], [0.0, 1.0]],
            factor_index,
        }
    }

    pub fn det(&self) -> f64 {
        self.entries[0][0] * self.entries[1][1] - self.entries[0][1] * self.entries[1][0]
    }

    /// Product within the same factor.
    pub fn mul(&self, other: &GroupElementSL2) -> GroupElementSL2 {
        let a = &self.entries;
        let b = &other.entries;
        GroupElementSL2 {
            entries: [
                [
                    a[0][0] * b[0][0] + a[0][1] * b[1][0],
                    a[0][0] * b[0][1] + a[0][1] * b[1][1],
                ],
                [
                    a[1][0] * b[0][0] + a[1][1] * b[1][0],
                    a[1][0] * b[0][1] + a[1][1] * b[1][1],
                ],
            ],
            factor_index: self.factor_index,
        }
    }
}

/// The rotation K(θ) = exp(θ(F−E)).
pub fn rotation(theta: f64) -> [[f64; 2]; 2] {
    let (s, c) = theta.sin_cos();
    [[c, -s], [s, c]]
}

/// The diagonal A(a) = exp(aH) = diag(eᵃ, e⁻ᵃ).
pub fn diagonal(a: f64) -> [[f64; 2]; 2] {
    [[a.exp(), 0.0], [0.0, (-a).exp()]]
}

/// exp(X) for X = k(F−E) + aH + l(F+E) = [[a, l−k], [l+k, −a]], through the
/// discriminant ρ² = a² + l² − k²:
///
/// * ρ² > 0: cosh(ρ)I + sinh(ρ)/ρ · X,
/// * ρ² < 0: cos(|ρ|)I + sin(|ρ|)/|ρ| · X,
/// * ρ² = 0: I + X  (X is then nilpotent, X² = ρ²I = 0).
pub fn exp_sl2(k: f64, a: f64, l: f64) -> [[f64; 2]; 2] {
    let x = [[a, l - k], [l + k, -a]];
    let rho_sq = a * a + l * l - k * k;
    let (c0, c1) = if rho_sq > 0.0 {
        let rho = rho_sq.sqrt();
        (rho.cosh(), rho.sinh() / rho)
    } else if rho_sq < 0.0 {
        let rho = (-rho_sq).sqrt();
        (rho.cos(), rho.sin() / rho)
    } else {
        (1.0, 1.0)
    };
    [
        [c0 + c1 * x[0][0], c1 * x[0][1]],
        [c1 * x[1][0], c0 + c1 * x[1][1]],
    ]
}

/// Row-major 2×2 product.
pub fn mat_mul(a: &[[f64; 2]; 2], b: &[[f64; 2]; 2]) -> [[f64; 2]; 2] {
    [
        [
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
        ],
        [
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        ],
    ]
}

/// 2×2 transpose.
pub fn transpose(a: &[[f64; 2]; 2]) -> [[f64; 2]; 2] {
    [[a[0][0], a[1][0]], [a[0][1], a[1][1]]]
}

fn wrap_angle(t: f64) -> f64 {
    // Map into (−π, π].
    let mut t = t.rem_euclid(2.0 * std::f64::consts::PI);
    if t > std::f64::consts::PI {
        t -= 2.0 * std::f64::consts::PI;
    }
    t
}

/// Cartan (KAK) decomposition g = K(θ₁)A(a)K(θ₂), polar-style: diagonalize
/// gᵀg = K(θ₂)ᵀA(a)²K(θ₂) by a rotation, take a ≥ 0, recover
/// K(θ₁) = g·K(θ₂)⁻¹A(a)⁻¹. Angles land in (−π, π]; a ties (a = 0) resolve
/// to θ₂ = 0.
pub fn cartan_decompose(g: &GroupElementSL2) -> Result<(f64, f64, f64), GroupError> {
    if (g.det() - 1.0).abs() > 1e-12 {
        return Err(GroupError::NotUnimodular(g.det()));
    }
    let m = mat_mul(&transpose(&g.entries), &g.entries);
    let (p, q, r) = (m[0][0], m[0][1], m[1][1]);
    // Rotation angle killing the off-diagonal of K(θ)MK(θ)ᵀ, which equals
    // ((p−r)/2)·sin 2θ + q·cos 2θ.
    let mut theta2 = 0.5 * (-2.0 * q).atan2(p - r);
    let mut d = mat_mul(&mat_mul(&rotation(theta2), &m), &rotation(-theta2));
    if d[0][0] < d[1][1] {
        // Swap the eigenvalues so the growing direction comes first.
        theta2 += std::f64::consts::FRAC_PI_2;
        d = mat_mul(&mat_mul(&rotation(theta2), &m), &rotation(-theta2));
    }
    let mut a = 0.5 * d[0][0].max(f64::MIN_POSITIVE).ln();
    if a.abs() < 1e-14 {
        a = 0.0;
        theta2 = 0.0;
    }
    theta2 = wrap_angle(theta2);
    let k1 = mat_mul(&mat_mul(&g.entries, &rotation(-theta2)), &diagonal(-a));
    let theta1 = wrap_angle(k1[1][0].atan2(k1[0][0]));
    Ok((theta1, a, theta2))
}

/// The six one-parameter families: Kᵢ = exp(t(Fᵢ−Eᵢ)), Aᵢ = exp(tHᵢ).
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum OneParamFamily {
    K1,
    K2,
    K3,
    A1,
    A2,
    A3,
}

impl OneParamFamily {
    pub const ALL: [OneParamFamily; 6] = [
        OneParamFamily::K1,
        OneParamFamily::K2,
        OneParamFamily::K3,
        OneParamFamily::A1,
        OneParamFamily::A2,
        OneParamFamily::A3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OneParamFamily::K1 => "K1",
            OneParamFamily::K2 => "K2",
            OneParamFamily::K3 => "K3",
            OneParamFamily::A1 => "A1",
            OneParamFamily::A2 => "A2",
            OneParamFamily::A3 => "A3",
        }
    }

    /// The algebra element this family exponentiates.
    pub fn generator(self) -> AlgebraElement {
        match self {
            OneParamFamily::K1 => AlgebraElement::basis(BasisElement::F(1))
                .sub(&AlgebraElement::basis(BasisElement::E(1))),
            OneParamFamily::K2 => AlgebraElement::basis(BasisElement::F(2))
                .sub(&AlgebraElement::basis(BasisElement::E(2))),
            OneParamFamily::K3 => AlgebraElement::basis(BasisElement::F(3))
                .sub(&AlgebraElement::basis(BasisElement::E(3))),
            OneParamFamily::A1 => AlgebraElement::basis(BasisElement::H(1)),
            OneParamFamily::A2 => AlgebraElement::basis(BasisElement::H(2)),
            OneParamFamily::A3 => AlgebraElement::basis(BasisElement::H(3)),
        }
    }
}

impl std::fmt::Display for OneParamFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// One factor of a group word, e.g. K₂(0.3).
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct OneParamElement {
    pub family: OneParamFamily,
    pub t: f64,
}

impl OneParamElement {
    pub fn new(family: OneParamFamily, t: f64) -> Self {
        OneParamElement { family, t }
    }

    fn parse(token: &str) -> Result<Self, GroupError> {
        let bad = || GroupError::ParseWord(token.to_string());
        let open = token.find('(').ok_or_else(bad)?;
        if !token.ends_with(')') {
            return Err(bad());
        }
        let family = match &token[..open] {
            "K1" => OneParamFamily::K1,
            "K2" => OneParamFamily::K2,
            "K3" => OneParamFamily::K3,
            "A1" => OneParamFamily::A1,
            "A2" => OneParamFamily::A2,
            "A3" => OneParamFamily::A3,
            _ => return Err(bad()),
        };
        let arg = &token[open + 1..token.len() - 1];
        let t: f64 = arg.trim().parse().map_err(|_| bad())?;
        if !t.is_finite() {
            return Err(bad());
        }
        Ok(OneParamElement { family, t })
    }
}

impl std::fmt::Display for OneParamElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}({})", self.family, self.t)
    }
}

/// Parse a whitespace-separated group word such as `K2(0.3) A3(-1.2) A1(0.5)`.
/// The empty string parses to the empty word.
pub fn parse_word(text: &str) -> Result<Vec<OneParamElement>, GroupError> {
    text.split_whitespace().map(OneParamElement::parse).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn max_abs_diff(a: &[[f64; 2]; 2], b: &[[f64; 2]; 2]) -> f64 {
        let mut m = 0.0f64;
        for r in 0..2 {
            for c in 0..2 {
                m = m.max((a[r][c] - b[r][c]).abs());
            }
        }
        m
    }

    #[test]
    fn exp_of_diagonal_generator_is_diagonal_exponential() {
        let g = exp_sl2(0.0, 1.0, 0.0);
        assert!(max_abs_diff(&g, &[[1f64.exp(), 0.0], [0.0, (-1f64).exp()]]) < 1e-15);
    }

    #[test]
    fn exp_of_rotation_generator_is_rotation() {
        for theta in [0.2, -1.3, 2.9] {
            let g = exp_sl2(theta, 0.0, 0.0);
            assert!(max_abs_diff(&g, &rotation(theta)) < 1e-14);
        }
    }

    #[test]
    fn degenerate_discriminant_gives_linear_exponential() {
        // k = l = 1, a = 0: X = [[0,0],[2,0]] squares to zero, so
        // exp(X) = I + X. Cross-check against the scaling-and-squaring
        // exponential of the same matrix.
        let g = exp_sl2(1.0, 0.0, 1.0);
        assert_eq!(g, [[1.0, 0.0], [2.0, 1.0]]);
        let numeric = nalgebra::Matrix2::new(0.0, 0.0, 2.0, 0.0).exp();
        assert!((g[0][0] - numeric[(0, 0)]).abs() < 1e-12);
        assert!((g[0][1] - numeric[(0, 1)]).abs() < 1e-12);
        assert!((g[1][0] - numeric[(1, 0)]).abs() < 1e-12);
        assert!((g[1][1] - numeric[(1, 1)]).abs() < 1e-12);
    }

    #[test]
    fn exp_matches_numeric_exponential_on_samples() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let (k, a, l) = (
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
            );
            let g = exp_sl2(k, a, l);
            let numeric = nalgebra::Matrix2::new(a, l - k, l + k, -a).exp();
            let m = [[numeric[(0, 0)], numeric[(0, 1)]], [numeric[(1, 0)], numeric[(1, 1)]]];
            assert!(max_abs_diff(&g, &m) < 1e-11, "mismatch at k={k} a={a} l={l}");
        }
    }

    #[test]
    fn cartan_of_identity_and_diagonal() {
        let id = GroupElementSL2::identity(1);
        assert_eq!(cartan_decompose(&id).unwrap(), (0.0, 0.0, 0.0));
        let a0 = 0.8;
        let g = GroupElementSL2::new(diagonal(a0), 2).unwrap();
        let (t1, a, t2) = cartan_decompose(&g).unwrap();
        assert!(t1.abs() < 1e-12 && (a - a0).abs() < 1e-12 && t2.abs() < 1e-12);
    }

    #[test]
    fn cartan_reconstructs_random_unimodular_matrices() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..500 {
            let g = GroupElementSL2 {
                entries: mat_mul(
                    &mat_mul(&rotation(rng.gen_range(-3.0..3.0)), &diagonal(rng.gen_range(-2.0..2.0))),
                    &rotation(rng.gen_range(-3.0..3.0)),
                ),
                factor_index: 1,
            };
            let (t1, a, t2) = cartan_decompose(&g).unwrap();
            assert!(a >= 0.0);
            assert!(t1 > -std::f64::consts::PI && t1 <= std::f64::consts::PI);
            assert!(t2 > -std::f64::consts::PI && t2 <= std::f64::consts::PI);
            let rebuilt = mat_mul(&mat_mul(&rotation(t1), &diagonal(a)), &rotation(t2));
            assert!(
                max_abs_diff(&g.entries, &rebuilt) < 1e-12,
                "reconstruction failed for {:?}",
                g.entries
            );
        }
    }

    #[test]
    fn non_unimodular_is_rejected() {
        assert_eq!(
            GroupElementSL2::new([[2.0, 0.0], [0.0, 1.0]], 1),
            Err(GroupError::NotUnimodular(2.0))
        );
        let mut g = GroupElementSL2::identity(1);
        g.entries[0][0] = 3.0;
        assert!(cartan_decompose(&g).is_err());
    }

    #[test]
    fn word_grammar_round_trips() {
        let word = parse_word("K2(0.3) A3(-1.2) A1(0.5)").unwrap();
        assert_eq!(
            word,
            vec![
                OneParamElement::new(OneParamFamily::K2, 0.3),
                OneParamElement::new(OneParamFamily::A3, -1.2),
                OneParamElement::new(OneParamFamily::A1, 0.5),
            ]
        );
        assert!(parse_word("").unwrap().is_empty());
        assert!(parse_word("  \t ").unwrap().is_empty());
        for bad in ["K4(1)", "K2", "K2(", "K2(x)", "A3(inf)"] {
            assert!(parse_word(bad).is_err(), "`{bad}` should not parse");
        }
    }
}
