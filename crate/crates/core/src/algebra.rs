//! The 17-dimensional Lie superalgebra D(2,1;α).
//!
//! The even part is sl(2)³ (basis Eᵢ, Fᵢ, Hᵢ for factors i = 1, 2, 3); the
//! odd part is the outer tensor product of the three standard 2-dimensional
//! modules, with basis u_{ε₁ε₂ε₃}, εᵢ ∈ {+, −}. Brackets:
//!
//! * even–even: three commuting copies of sl(2);
//! * even–odd: the factor acts on its tensor slot
//!   (E·u₋ = u₊, F·u₊ = u₋, H·u± = ±u±);
//! * odd–odd: the symmetric pairing
//!   `p(x, y) = Σᵢ σᵢ · ψⱼ(xⱼ, yⱼ) ψₖ(xₖ, yₖ) · pᵢ(xᵢ, yᵢ)` over cyclic
//!   (i, j, k), where ψ is the symplectic form (ψ(u₊, u₋) = 1) and
//!   pᵢ(u₊, u₊) = 2Eᵢ, pᵢ(u₊, u₋) = −Hᵢ, pᵢ(u₋, u₋) = −2Fᵢ.
//!
//! The weights are σ₁ = (1+α)/2, σ₂ = −1/2, σ₃ = −α/2; their vanishing sum
//! is exactly what makes the graded Jacobi identity hold, and
//! [`StructureConstants::with_sigmas`] exists so tests can confirm that a
//! perturbed weight breaks it.

use crate::mat2::Mat2;
use crate::poly::Parity;
use crate::scalar::{AlphaParam, GaussianRational};
use num::rational::BigRational;
use num::traits::One;
use std::collections::BTreeMap;
use std::fmt;

/// Tensor-slot sign for odd basis elements.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    fn ch(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// One of the 17 basis elements, in the fixed enumeration
/// (E₁, F₁, H₁, E₂, F₂, H₂, E₃, F₃, H₃, u₊₊₊, u₊₊₋, u₊₋₊, u₊₋₋, u₋₊₊,
/// u₋₊₋, u₋₋₊, u₋₋₋).
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum BasisElement {
    /// Raising element of sl(2) factor `1..=3`.
    E(u8),
    /// Lowering element of sl(2) factor `1..=3`.
    F(u8),
    /// Cartan element of sl(2) factor `1..=3`.
    H(u8),
    /// Odd element u_{ε₁ε₂ε₃}.
    U(Sign, Sign, Sign),
}

pub const DIM: usize = 17;

impl BasisElement {
    /// All 17 basis elements in the fixed order.
    pub fn all() -> [BasisElement; DIM] {
        let mut out = [BasisElement::E(1); DIM];
        let mut idx = 0;
        for f in 1..=3u8 {
            out[idx] = BasisElement::E(f);
            out[idx + 1] = BasisElement::F(f);
            out[idx + 2] = BasisElement::H(f);
            idx += 3;
        }
        for s1 in Sign::BOTH {
            for s2 in Sign::BOTH {
                for s3 in Sign::BOTH {
                    out[idx] = BasisElement::U(s1, s2, s3);
                    idx += 1;
                }
            }
        }
        out
    }

    /// Position in the fixed enumeration.
    pub fn index(self) -> usize {
        match self {
            BasisElement::E(f) => 3 * (f as usize - 1),
            BasisElement::F(f) => 3 * (f as usize - 1) + 1,
            BasisElement::H(f) => 3 * (f as usize - 1) + 2,
            BasisElement::U(s1, s2, s3) => {
                let bit = |s: Sign| if s == Sign::Plus { 0 } else { 1 };
                9 + 4 * bit(s1) + 2 * bit(s2) + bit(s3)
            }
        }
    }

    pub fn parity(self) -> Parity {
        match self {
            BasisElement::U(..) => Parity::Odd,
            _ => Parity::Even,
        }
    }

    /// Grade under the three-grading g₋ ⊕ g₀ ⊕ g₊ induced by ad(H₂ + H₃):
    /// grade(x) = eigenvalue/2.
    pub fn grade(self) -> i32 {
        match self {
            BasisElement::E(2) | BasisElement::E(3) => 1,
            BasisElement::F(2) | BasisElement::F(3) => -1,
            BasisElement::U(_, s2, s3) => {
                let w = |s: Sign| if s == Sign::Plus { 1 } else { -1 };
                (w(s2) + w(s3)) / 2
            }
            _ => 0,
        }
    }
}

impl PartialOrd for BasisElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BasisElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.index().cmp(&other.index())
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisElement::E(i) => write!(f, "E{i}"),
            BasisElement::F(i) => write!(f, "F{i}"),
            BasisElement::H(i) => write!(f, "H{i}"),
            BasisElement::U(s1, s2, s3) => write!(f, "u{}{}{}", s1.ch(), s2.ch(), s3.ch()),
        }
    }
}

/// An element of the algebra: exact coefficients over the fixed basis.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct AlgebraElement {
    coeffs: BTreeMap<BasisElement, GaussianRational>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    pub fn basis(b: BasisElement) -> Self {
        AlgebraElement::term(b, GaussianRational::one())
    }

    pub fn term(b: BasisElement, c: GaussianRational) -> Self {
        let mut x = AlgebraElement::zero();
        x.add_term(b, c);
        x
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, b: BasisElement) -> GaussianRational {
        self.coeffs
            .get(&b)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisElement, &GaussianRational)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, b: BasisElement, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        let entry = self
            .coeffs
            .entry(b)
            .or_insert_with(GaussianRational::zero);
        *entry += &c;
        if entry.is_zero() {
            self.coeffs.remove(&b);
        }
    }

    pub fn add(&self, o: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (b, c) in o.terms() {
            out.add_term(*b, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (b, c) in o.terms() {
            out.add_term(*b, -c);
        }
        out
    }

    pub fn neg(&self) -> AlgebraElement {
        AlgebraElement::zero().sub(self)
    }

    pub fn scale(&self, s: &GaussianRational) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (b, c) in self.terms() {
            out.add_term(*b, c * s);
        }
        out
    }

    pub fn scale_rat(&self, s: &BigRational) -> AlgebraElement {
        self.scale(&GaussianRational::from_rational(s.clone()))
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.values().map(|c| c.abs_f64()).fold(0.0, f64::max)
    }

    /// True if supported entirely on basis elements of one parity.
    pub fn has_parity(&self, p: Parity) -> bool {
        self.coeffs.keys().all(|b| b.parity() == p)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(b, c)| format!("({c})·{b}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Errors from algebra-level operations.
#[derive(Debug, thiserror::Error)]
pub enum AlgebraError {
    #[error("adjoint action requires unimodular matrices; factor {0} has det = {1}")]
    NotUnimodular(usize, BigRational),
}

/// Defect summary for the graded Jacobi scan.
#[derive(Clone, Debug)]
pub struct JacobiScan {
    /// True iff every triple's defect is exactly zero.
    pub exact: bool,
    /// Largest coefficient magnitude over all defects (0 when exact).
    pub max_defect: f64,
    /// Worst triple, printed, when `exact` is false.
    pub witness: Option<String>,
}

/// The full bracket table of D(2,1;α) for a fixed α (and fixed weights σ).
pub struct StructureConstants {
    alpha: AlphaParam,
    sigma: [BigRational; 3],
    table: Vec<Vec<AlgebraElement>>,
}

/// ψ(x, y): symplectic form on the 2-dimensional slot module.
fn psi(x: Sign, y: Sign) -> i32 {
    match (x, y) {
        (Sign::Plus, Sign::Minus) => 1,
        (Sign::Minus, Sign::Plus) => -1,
        _ => 0,
    }
}

/// pᵢ(x, y): the symmetric sl(2)-valued pairing on slot `factor`.
fn p_pair(factor: u8, x: Sign, y: Sign) -> AlgebraElement {
    match (x, y) {
        (Sign::Plus, Sign::Plus) => {
            AlgebraElement::term(BasisElement::E(factor), GaussianRational::from_int(2))
        }
        (Sign::Minus, Sign::Minus) => {
            AlgebraElement::term(BasisElement::F(factor), GaussianRational::from_int(-2))
        }
        _ => AlgebraElement::term(BasisElement::H(factor), GaussianRational::from_int(-1)),
    }
}

/// The standard 2×2 matrices E, F, H over the rationals.
fn sl2_matrix(b: BasisElement) -> Mat2<BigRational> {
    let zero = BigRational::from_integer(0.into());
    let one = BigRational::one();
    match b {
        BasisElement::E(_) => Mat2::new(zero.clone(), one, zero.clone(), zero),
        BasisElement::F(_) => Mat2::new(zero.clone(), zero.clone(), one, zero),
        BasisElement::H(_) => Mat2::new(one.clone(), zero.clone(), zero, -one),
        _ => panic!("not an even basis element"),
    }
}

/// Decompose a traceless 2×2 rational matrix over {E, F, H} of `factor`.
fn decompose_sl2(factor: u8, m: &Mat2<BigRational>) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    out.add_term(
        BasisElement::H(factor),
        GaussianRational::from_rational(m.a.clone()),
    );
    out.add_term(
        BasisElement::E(factor),
        GaussianRational::from_rational(m.b.clone()),
    );
    out.add_term(
        BasisElement::F(factor),
        GaussianRational::from_rational(m.c.clone()),
    );
    out
}

/// Column of `m` acting on a slot basis vector: u₊ ↦ m₁₁u₊ + m₂₁u₋,
/// u₋ ↦ m₁₂u₊ + m₂₂u₋.
fn act_slot(m: &Mat2<BigRational>, s: Sign) -> [(Sign, BigRational); 2] {
    match s {
        Sign::Plus => [
            (Sign::Plus, m.a.clone()),
            (Sign::Minus, m.c.clone()),
        ],
        Sign::Minus => [
            (Sign::Plus, m.b.clone()),
            (Sign::Minus, m.d.clone()),
        ],
    }
}

impl StructureConstants {
    /// Build the bracket table with the canonical weights
    /// σ = ((1+α)/2, −1/2, −α/2).
    pub fn new(alpha: &AlphaParam) -> Self {
        let sigma = [alpha.sigma1(), alpha.sigma2(), alpha.sigma3()];
        StructureConstants::with_sigmas(alpha, sigma)
    }

    /// Build the table with explicit weights. Anything with
    /// σ₁ + σ₂ + σ₃ ≠ 0 violates the graded Jacobi identity; this
    /// constructor exists so the Jacobi checker can be shown to catch that.
    pub fn with_sigmas(alpha: &AlphaParam, sigma: [BigRational; 3]) -> Self {
        let basis = BasisElement::all();
        let mut table = vec![vec![AlgebraElement::zero(); DIM]; DIM];
        for x in basis {
            for y in basis {
                table[x.index()][y.index()] = bracket_basis_raw(&sigma, x, y);
            }
        }
        StructureConstants {
            alpha: alpha.clone(),
            sigma,
            table,
        }
    }

    pub fn alpha(&self) -> &AlphaParam {
        &self.alpha
    }

    pub fn sigma(&self) -> &[BigRational; 3] {
        &self.sigma
    }

    /// Bracket of two basis elements, from the table.
    pub fn bracket_basis(&self, x: BasisElement, y: BasisElement) -> &AlgebraElement {
        &self.table[x.index()][y.index()]
    }

    /// Bilinear extension of the bracket. All super-signs are baked into the
    /// table, so no parity bookkeeping is needed here.
    pub fn bracket(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (bx, cx) in x.terms() {
            for (by, cy) in y.terms() {
                let c = cx * cy;
                for (bz, cz) in self.bracket_basis(*bx, *by).terms() {
                    out.add_term(*bz, &c * cz);
                }
            }
        }
        out
    }

    /// Graded Jacobi defect
    /// `[x,[y,z]] − [[x,y],z] − (−1)^{|x||y|}[y,[x,z]]` for basis elements.
    pub fn jacobi_defect(
        &self,
        x: BasisElement,
        y: BasisElement,
        z: BasisElement,
    ) -> AlgebraElement {
        let xb = AlgebraElement::basis(x);
        let yb = AlgebraElement::basis(y);
        let a = self.bracket(&xb, self.bracket_basis(y, z));
        let b = self.bracket(self.bracket_basis(x, y), &AlgebraElement::basis(z));
        let c = self.bracket(&yb, self.bracket_basis(x, z));
        let signed_c = if x.parity().koszul_sign(y.parity()) < 0 {
            c.neg()
        } else {
            c
        };
        a.sub(&b).sub(&signed_c)
    }

    /// Scan the graded Jacobi identity over all 17³ ordered basis triples.
    pub fn check_super_jacobi(&self) -> JacobiScan {
        let basis = BasisElement::all();
        let mut max_defect = 0.0f64;
        let mut witness = None;
        for x in basis {
            for y in basis {
                for z in basis {
                    let d = self.jacobi_defect(x, y, z);
                    if !d.is_zero() {
                        let m = d.max_abs_coeff();
                        if m > max_defect {
                            max_defect = m;
                            witness = Some(format!("({x}, {y}, {z}) -> {d}"));
                        }
                    }
                }
            }
        }
        JacobiScan {
            exact: witness.is_none(),
            max_defect,
            witness,
        }
    }

    /// Scan super-antisymmetry `[x,y] + (−1)^{|x||y|}[y,x] = 0` over all
    /// ordered basis pairs; returns the largest violation (0 = exact).
    pub fn check_super_antisymmetry(&self) -> f64 {
        let basis = BasisElement::all();
        let mut max = 0.0f64;
        for x in basis {
            for y in basis {
                let xy = self.bracket_basis(x, y);
                let yx = self.bracket_basis(y, x);
                let signed = if x.parity().koszul_sign(y.parity()) < 0 {
                    yx.neg()
                } else {
                    yx.clone()
                };
                max = max.max(xy.add(&signed).max_abs_coeff());
            }
        }
        max
    }

    /// Check that brackets respect the three-grading: [g_i, g_j] ⊆ g_{i+j}
    /// (and vanish when |i+j| > 1). Returns the largest violation.
    pub fn check_grading(&self) -> f64 {
        let basis = BasisElement::all();
        let mut max = 0.0f64;
        for x in basis {
            for y in basis {
                let g = x.grade() + y.grade();
                for (b, c) in self.bracket_basis(x, y).terms() {
                    if g < -1 || g > 1 || b.grade() != g {
                        max = max.max(c.abs_f64());
                    }
                }
            }
        }
        max
    }

    /// Adjoint action of a triple of exact unimodular 2×2 matrices
    /// (one per sl(2) factor): conjugation on the even part, the tensor
    /// action on the odd part.
    pub fn adjoint_action(
        g: &[Mat2<BigRational>; 3],
        x: &AlgebraElement,
    ) -> Result<AlgebraElement, AlgebraError> {
        for (i, m) in g.iter().enumerate() {
            let det = m.det();
            if !det.is_one() {
                return Err(AlgebraError::NotUnimodular(i + 1, det));
            }
        }
        let mut out = AlgebraElement::zero();
        for (b, c) in x.terms() {
            let image = match *b {
                BasisElement::U(s1, s2, s3) => {
                    let mut acc = AlgebraElement::zero();
                    for (d1, c1) in act_slot(&g[0], s1) {
                        for (d2, c2) in act_slot(&g[1], s2) {
                            for (d3, c3) in act_slot(&g[2], s3) {
                                acc.add_term(
                                    BasisElement::U(d1, d2, d3),
                                    GaussianRational::from_rational(&c1 * &c2 * &c3),
                                );
                            }
                        }
                    }
                    acc
                }
                even => {
                    let f = match even {
                        BasisElement::E(f) | BasisElement::F(f) | BasisElement::H(f) => f,
                        _ => unreachable!(),
                    };
                    let a = &g[f as usize - 1];
                    let conj = a.mul(&sl2_matrix(even)).mul(&a.inverse_unimodular());
                    decompose_sl2(f, &conj)
                }
            };
            for (bz, cz) in image.terms() {
                out.add_term(*bz, &c.clone() * cz);
            }
        }
        Ok(out)
    }

    /// Export the full table as JSON: basis names, weights, and every
    /// non-zero bracket with coefficient strings.
    pub fn to_json(&self) -> serde_json::Value {
        let basis = BasisElement::all();
        let mut brackets = Vec::new();
        for x in basis {
            for y in basis {
                let v = self.bracket_basis(x, y);
                if v.is_zero() {
                    continue;
                }
                let value: serde_json::Map<String, serde_json::Value> = v
                    .terms()
                    .map(|(b, c)| (b.to_string(), serde_json::Value::String(c.to_string())))
                    .collect();
                brackets.push(serde_json::json!({
                    "x": x.to_string(),
                    "y": y.to_string(),
                    "value": value,
                }));
            }
        }
        serde_json::json!({
            "alpha": self.alpha.to_string(),
            "sigma": [
                self.sigma[0].to_string(),
                self.sigma[1].to_string(),
                self.sigma[2].to_string(),
            ],
            "basis": basis.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
            "brackets": brackets,
        })
    }
}

/// Bracket of two basis elements from first principles (sl(2) matrix
/// commutators, slot actions, and the weighted ψ/p pairing).
fn bracket_basis_raw(sigma: &[BigRational; 3], x: BasisElement, y: BasisElement) -> AlgebraElement {
    use BasisElement::*;
    match (x, y) {
        // Even–even: commutator within one factor, zero across factors.
        (E(f) | F(f) | H(f), E(g) | F(g) | H(g)) => {
            if f != g {
                return AlgebraElement::zero();
            }
            let mx = sl2_matrix(x);
            let my = sl2_matrix(y);
            let comm = mx.mul(&my).add(&my.mul(&mx).scale(&-BigRational::one()));
            decompose_sl2(f, &comm)
        }
        // Even–odd: act on the matching tensor slot.
        (E(f) | F(f) | H(f), U(s1, s2, s3)) => {
            let m = sl2_matrix(x);
            let mut out = AlgebraElement::zero();
            let slot = f as usize - 1;
            let signs = [s1, s2, s3];
            for (d, c) in act_slot(&m, signs[slot]) {
                let mut new = signs;
                new[slot] = d;
                out.add_term(U(new[0], new[1], new[2]), GaussianRational::from_rational(c));
            }
            out
        }
        // Odd–even: [u, X] = −[X, u] (X even).
        (U(..), E(..) | F(..) | H(..)) => bracket_basis_raw(sigma, y, x).neg(),
        // Odd–odd: the symmetric pairing p.
        (U(x1, x2, x3), U(y1, y2, y3)) => {
            let xs = [x1, x2, x3];
            let ys = [y1, y2, y3];
            let mut out = AlgebraElement::zero();
            for i in 0..3 {
                let j = (i + 1) % 3;
                let k = (i + 2) % 3;
                let scalar = psi(xs[j], ys[j]) * psi(xs[k], ys[k]);
                if scalar == 0 {
                    continue;
                }
                let factor = &sigma[i] * BigRational::from_integer(scalar.into());
                for (b, c) in p_pair(i as u8 + 1, xs[i], ys[i]).terms() {
                    out.add_term(*b, c.scale(&factor));
                }
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn alpha(n: i64, d: i64) -> AlphaParam {
        AlphaParam::new(q(n, d)).unwrap()
    }

    fn sc(n: i64, d: i64) -> StructureConstants {
        StructureConstants::new(&alpha(n, d))
    }

    /// Independent odd–odd oracle: evaluates the weighted ψ/p sum directly,
    /// without going through the table construction.
    fn oracle_odd_odd(
        sigma: &[BigRational; 3],
        xs: [Sign; 3],
        ys: [Sign; 3],
    ) -> AlgebraElement {
        let psi_v = |a: Sign, b: Sign| -> i64 {
            match (a, b) {
                (Sign::Plus, Sign::Minus) => 1,
                (Sign::Minus, Sign::Plus) => -1,
                _ => 0,
            }
        };
        let mut out = AlgebraElement::zero();
        for (i, j, k) in [(0usize, 1usize, 2usize), (1, 2, 0), (2, 0, 1)] {
            let factor = &sigma[i] * q(psi_v(xs[j], ys[j]) * psi_v(xs[k], ys[k]), 1);
            let pi = match (xs[i], ys[i]) {
                (Sign::Plus, Sign::Plus) => {
                    AlgebraElement::term(BasisElement::E(i as u8 + 1), GaussianRational::from_int(2))
                }
                (Sign::Minus, Sign::Minus) => {
                    AlgebraElement::term(BasisElement::F(i as u8 + 1), GaussianRational::from_int(-2))
                }
                _ => AlgebraElement::term(BasisElement::H(i as u8 + 1), GaussianRational::from_int(-1)),
            };
            for (b, c) in pi.terms() {
                out.add_term(*b, c.scale(&factor));
            }
        }
        out
    }

    #[test]
    fn basis_enumeration_is_stable() {
        let all = BasisElement::all();
        assert_eq!(all.len(), DIM);
        for (i, b) in all.iter().enumerate() {
            assert_eq!(b.index(), i);
        }
        assert_eq!(all[0].to_string(), "E1");
        assert_eq!(all[8].to_string(), "H3");
        assert_eq!(all[9].to_string(), "u+++");
        assert_eq!(all[16].to_string(), "u---");
        // 9 even, 8 odd
        assert_eq!(all.iter().filter(|b| b.parity() == Parity::Even).count(), 9);
    }

    #[test]
    fn sl2_relations() {
        let s = sc(-2, 1);
        let e = BasisElement::E(1);
        let f = BasisElement::F(1);
        let h = BasisElement::H(1);
        assert_eq!(*s.bracket_basis(e, f), AlgebraElement::basis(h));
        assert_eq!(
            *s.bracket_basis(h, e),
            AlgebraElement::term(e, GaussianRational::from_int(2))
        );
        assert_eq!(
            *s.bracket_basis(h, f),
            AlgebraElement::term(f, GaussianRational::from_int(-2))
        );
        // Factors commute.
        assert!(s.bracket_basis(e, BasisElement::E(2)).is_zero());
        assert!(s.bracket_basis(h, BasisElement::F(3)).is_zero());
    }

    #[test]
    fn even_action_on_slots() {
        let s = sc(-2, 1);
        let upmm = BasisElement::U(Sign::Plus, Sign::Minus, Sign::Minus);
        // [E₁, u₊₋₋] = 0 (slot already +; E kills u₊).
        assert!(s.bracket_basis(BasisElement::E(1), upmm).is_zero());
        // [F₁, u₊₋₋] = u₋₋₋.
        assert_eq!(
            *s.bracket_basis(BasisElement::F(1), upmm),
            AlgebraElement::basis(BasisElement::U(Sign::Minus, Sign::Minus, Sign::Minus))
        );
        // [E₂, u₊₋₋] = u₊₊₋.
        assert_eq!(
            *s.bracket_basis(BasisElement::E(2), upmm),
            AlgebraElement::basis(BasisElement::U(Sign::Plus, Sign::Plus, Sign::Minus))
        );
        // [H₃, u₊₋₋] = −u₊₋₋.
        assert_eq!(
            *s.bracket_basis(BasisElement::H(3), upmm),
            AlgebraElement::term(upmm, GaussianRational::from_int(-1))
        );
    }

    #[test]
    fn top_bottom_odd_bracket_matches_hand_value() {
        // [u₊₊₊, u₋₋₋] = −σ₁H₁ − σ₂H₂ − σ₃H₃; at α = −2 that is
        // ½H₁ + ½H₂ − H₃ (σ = (−1/2, −1/2, 1)).
        let s = sc(-2, 1);
        let top = BasisElement::U(Sign::Plus, Sign::Plus, Sign::Plus);
        let bottom = BasisElement::U(Sign::Minus, Sign::Minus, Sign::Minus);
        let mut expect = AlgebraElement::zero();
        expect.add_term(BasisElement::H(1), GaussianRational::from_ratio(1, 2));
        expect.add_term(BasisElement::H(2), GaussianRational::from_ratio(1, 2));
        expect.add_term(BasisElement::H(3), GaussianRational::from_int(-1));
        assert_eq!(*s.bracket_basis(top, bottom), expect);
    }

    #[test]
    fn odd_bracket_with_itself_vanishes_when_psi_does() {
        // Every ψ(u₊,u₊) factor is zero, so [u₊₊₊, u₊₊₊] has no surviving
        // term; the independent oracle agrees.
        let s = sc(-2, 1);
        let top = BasisElement::U(Sign::Plus, Sign::Plus, Sign::Plus);
        assert!(s.bracket_basis(top, top).is_zero());
        let o = oracle_odd_odd(
            s.sigma(),
            [Sign::Plus, Sign::Plus, Sign::Plus],
            [Sign::Plus, Sign::Plus, Sign::Plus],
        );
        assert!(o.is_zero());
    }

    #[test]
    fn all_odd_odd_brackets_match_independent_oracle() {
        for (n, d) in [(-1i64, 2i64), (-2, 1), (-7, 3), (1, 2), (5, 2)] {
            let s = sc(n, d);
            for s1 in Sign::BOTH {
                for s2 in Sign::BOTH {
                    for s3 in Sign::BOTH {
                        for t1 in Sign::BOTH {
                            for t2 in Sign::BOTH {
                                for t3 in Sign::BOTH {
                                    let x = BasisElement::U(s1, s2, s3);
                                    let y = BasisElement::U(t1, t2, t3);
                                    let got = s.bracket_basis(x, y);
                                    let want =
                                        oracle_odd_odd(s.sigma(), [s1, s2, s3], [t1, t2, t3]);
                                    assert_eq!(*got, want, "mismatch at [{x}, {y}]");
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn grading_matches_cartan_eigenvalue() {
        // grade(x) must be half the ad(H₂+H₃) eigenvalue.
        let s = sc(-7, 3);
        let h = AlgebraElement::basis(BasisElement::H(2)).add(&AlgebraElement::basis(
            BasisElement::H(3),
        ));
        for b in BasisElement::all() {
            let img = s.bracket(&h, &AlgebraElement::basis(b));
            let expect = AlgebraElement::term(b, GaussianRational::from_int(2 * b.grade() as i64));
            assert_eq!(img, expect, "eigenvalue mismatch at {b}");
        }
        assert_eq!(s.check_grading(), 0.0);
    }

    #[test]
    fn jacobi_holds_at_sample_alphas() {
        for (n, d) in [(-1i64, 2i64), (-2, 1), (-7, 3), (1, 2), (5, 2)] {
            let scan = sc(n, d).check_super_jacobi();
            assert!(scan.exact, "Jacobi failed at alpha = {n}/{d}: {:?}", scan.witness);
        }
    }

    #[test]
    fn antisymmetry_is_exact() {
        assert_eq!(sc(-7, 3).check_super_antisymmetry(), 0.0);
    }

    #[test]
    fn perturbed_weight_breaks_jacobi_with_known_defect() {
        // With σ₂ shifted by +1 the weight sum is 1, and the triple
        // (u₊₊₊, u₋₋₋, u₊₊₊) has defect 2(σ₁+σ₂+σ₃)·u₊₊₊ = 2·u₊₊₊.
        let a = alpha(-2, 1);
        let s = StructureConstants::with_sigmas(
            &a,
            [a.sigma1(), a.sigma2() + BigRational::one(), a.sigma3()],
        );
        let top = BasisElement::U(Sign::Plus, Sign::Plus, Sign::Plus);
        let bottom = BasisElement::U(Sign::Minus, Sign::Minus, Sign::Minus);
        let defect = s.jacobi_defect(top, bottom, top);
        assert_eq!(
            defect,
            AlgebraElement::term(top, GaussianRational::from_int(2))
        );
        let scan = s.check_super_jacobi();
        assert!(!scan.exact);
        assert!(scan.max_defect > 0.0);
    }

    #[test]
    fn adjoint_is_homomorphism_and_respects_bracket() {
        let s = sc(-7, 3);
        // diag(2, 1/2), a shear, and a lower-triangular matrix — all det 1.
        let g: [Mat2<BigRational>; 3] = [
            Mat2::new(q(2, 1), q(0, 1), q(0, 1), q(1, 2)),
            Mat2::new(q(1, 1), q(3, 1), q(0, 1), q(1, 1)),
            Mat2::new(q(1, 1), q(0, 1), q(-2, 1), q(1, 1)),
        ];
        let h: [Mat2<BigRational>; 3] = [
            Mat2::new(q(1, 1), q(1, 2), q(0, 1), q(1, 1)),
            Mat2::new(q(3, 1), q(1, 1), q(2, 1), q(1, 1)),
            Mat2::new(q(1, 1), q(0, 1), q(5, 1), q(1, 1)),
        ];
        let gh: [Mat2<BigRational>; 3] = [
            g[0].mul(&h[0]),
            g[1].mul(&h[1]),
            g[2].mul(&h[2]),
        ];
        for b in BasisElement::all() {
            let x = AlgebraElement::basis(b);
            let via_compose =
                StructureConstants::adjoint_action(&g, &StructureConstants::adjoint_action(&h, &x).unwrap())
                    .unwrap();
            let direct = StructureConstants::adjoint_action(&gh, &x).unwrap();
            assert_eq!(via_compose, direct, "Ad homomorphism failed at {b}");
        }
        // Ad(g)[x, y] = [Ad(g)x, Ad(g)y] on a few pairs.
        for x in [
            BasisElement::E(1),
            BasisElement::H(2),
            BasisElement::U(Sign::Plus, Sign::Minus, Sign::Plus),
        ] {
            for y in [
                BasisElement::F(1),
                BasisElement::U(Sign::Minus, Sign::Minus, Sign::Minus),
            ] {
                let bx = AlgebraElement::basis(x);
                let by = AlgebraElement::basis(y);
                let lhs = StructureConstants::adjoint_action(&g, &s.bracket(&bx, &by)).unwrap();
                let rhs = s.bracket(
                    &StructureConstants::adjoint_action(&g, &bx).unwrap(),
                    &StructureConstants::adjoint_action(&g, &by).unwrap(),
                );
                assert_eq!(lhs, rhs, "bracket equivariance failed at [{x}, {y}]");
            }
        }
    }

    #[test]
    fn adjoint_diag_exact_value() {
        // Ad(diag(2,1/2), I, I): E₁ ↦ 4E₁, F₁ ↦ F₁/4, H₁ ↦ H₁,
        // u₊ε₂ε₃ ↦ 2u₊ε₂ε₃, u₋ε₂ε₃ ↦ u₋ε₂ε₃/2.
        let g: [Mat2<BigRational>; 3] = [
            Mat2::new(q(2, 1), q(0, 1), q(0, 1), q(1, 2)),
            Mat2::identity(),
            Mat2::identity(),
        ];
        let ad = |b| StructureConstants::adjoint_action(&g, &AlgebraElement::basis(b)).unwrap();
        assert_eq!(
            ad(BasisElement::E(1)),
            AlgebraElement::term(BasisElement::E(1), GaussianRational::from_int(4))
        );
        assert_eq!(
            ad(BasisElement::F(1)),
            AlgebraElement::term(BasisElement::F(1), GaussianRational::from_ratio(1, 4))
        );
        assert_eq!(ad(BasisElement::H(1)), AlgebraElement::basis(BasisElement::H(1)));
        let up = BasisElement::U(Sign::Plus, Sign::Minus, Sign::Plus);
        assert_eq!(
            ad(up),
            AlgebraElement::term(up, GaussianRational::from_int(2))
        );
    }

    #[test]
    fn adjoint_rejects_non_unimodular() {
        let g: [Mat2<BigRational>; 3] = [
            Mat2::new(q(2, 1), q(0, 1), q(0, 1), q(1, 1)),
            Mat2::identity(),
            Mat2::identity(),
        ];
        let r = StructureConstants::adjoint_action(&g, &AlgebraElement::basis(BasisElement::E(1)));
        assert!(matches!(r, Err(AlgebraError::NotUnimodular(1, _))));
    }

    #[test]
    fn json_export_has_all_basis_names() {
        let v = sc(-2, 1).to_json();
        let names = v["basis"].as_array().unwrap();
        assert_eq!(names.len(), DIM);
        assert_eq!(names[9], "u+++");
        assert!(v["brackets"].as_array().unwrap().len() > 50);
    }
}
