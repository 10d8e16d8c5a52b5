//! Supercommutative polynomials in two even variables z₁, z₂ and two odd
//! (Grassmann) variables z₃, z₄.
//!
//! Monomials are kept in the canonical order z₁^a z₂^b z₃^c z₄^d with
//! c, d ∈ {0, 1}; reordering products into that form is where all Grassmann
//! signs are generated (z₃z₄ = −z₄z₃, z₃² = z₄² = 0). Partial derivatives
//! are *left* derivatives: ∂ᵢ is moved in from the left, acquiring a Koszul
//! sign each time it passes an odd variable. Concretely ∂₄(z₃z₄) = −z₃ while
//! ∂₃(z₃z₄) = z₄.

use crate::scalar::GaussianRational;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// One of the four variables.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum Var {
    Z1,
    Z2,
    Z3,
    Z4,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::Z1, Var::Z2, Var::Z3, Var::Z4];

    pub fn is_odd(self) -> bool {
        matches!(self, Var::Z3 | Var::Z4)
    }

    pub fn index(self) -> usize {
        match self {
            Var::Z1 => 1,
            Var::Z2 => 2,
            Var::Z3 => 3,
            Var::Z4 => 4,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z{}", self.index())
    }
}

/// Parity of a monomial, operator, or basis element.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_bools(odd: bool) -> Parity {
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    /// Parity addition (ℤ/2).
    pub fn plus(self, other: Parity) -> Parity {
        Parity::of_bools((self == Parity::Odd) ^ (other == Parity::Odd))
    }

    /// The sign (−1)^{|p||q|} implementing the Koszul rule.
    pub fn koszul_sign(self, other: Parity) -> i32 {
        if self == Parity::Odd && other == Parity::Odd {
            -1
        } else {
            1
        }
    }
}

/// Canonical monomial z₁^a z₂^b z₃^c z₄^d.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash, Serialize, Deserialize)]
pub struct SuperMonomial {
    pub a: u32,
    pub b: u32,
    pub c: bool,
    pub d: bool,
}

impl SuperMonomial {
    pub const ONE: SuperMonomial = SuperMonomial {
        a: 0,
        b: 0,
        c: false,
        d: false,
    };

    pub fn new(a: u32, b: u32, c: bool, d: bool) -> Self {
        SuperMonomial { a, b, c, d }
    }

    pub fn var(v: Var) -> Self {
        match v {
            Var::Z1 => SuperMonomial::new(1, 0, false, false),
            Var::Z2 => SuperMonomial::new(0, 1, false, false),
            Var::Z3 => SuperMonomial::new(0, 0, true, false),
            Var::Z4 => SuperMonomial::new(0, 0, false, true),
        }
    }

    pub fn degree(&self) -> u32 {
        self.a + self.b + self.c as u32 + self.d as u32
    }

    pub fn parity(&self) -> Parity {
        Parity::of_bools(self.c ^ self.d)
    }

    /// Product of canonical monomials: `None` if an odd variable repeats,
    /// otherwise the canonical product with the sign from moving the
    /// right-hand z₃ past the left-hand z₄.
    pub fn mul(&self, other: &SuperMonomial) -> Option<(i32, SuperMonomial)> {
        if (self.c && other.c) || (self.d && other.d) {
            return None;
        }
        let sign = if self.d && other.c { -1 } else { 1 };
        Some((
            sign,
            SuperMonomial::new(
                self.a + other.a,
                self.b + other.b,
                self.c || other.c,
                self.d || other.d,
            ),
        ))
    }
}

impl fmt::Display for SuperMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut parts: Vec<String> = Vec::new();
        for (var, exp) in [("z1", self.a), ("z2", self.b)] {
            match exp {
                0 => {}
                1 => parts.push(var.to_string()),
                _ => parts.push(format!("{var}^{exp}")),
            }
        }
        if self.c {
            parts.push("z3".to_string());
        }
        if self.d {
            parts.push("z4".to_string());
        }
        write!(f, "{}", parts.join("*"))
    }
}

/// A finite linear combination of canonical monomials with exact Gaussian
/// rational coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct SuperPolynomial {
    terms: BTreeMap<SuperMonomial, GaussianRational>,
}

impl SuperPolynomial {
    pub fn zero() -> Self {
        SuperPolynomial::default()
    }

    pub fn one() -> Self {
        SuperPolynomial::monomial(SuperMonomial::ONE, GaussianRational::one())
    }

    pub fn var(v: Var) -> Self {
        SuperPolynomial::monomial(SuperMonomial::var(v), GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        SuperPolynomial::monomial(SuperMonomial::ONE, c)
    }

    pub fn monomial(m: SuperMonomial, coeff: GaussianRational) -> Self {
        let mut p = SuperPolynomial::zero();
        p.add_term(m, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SuperMonomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &SuperMonomial) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_else(GaussianRational::zero)
    }

    /// Coefficient of the constant monomial.
    pub fn constant_term(&self) -> GaussianRational {
        self.coeff(&SuperMonomial::ONE)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn add_term(&mut self, m: SuperMonomial, coeff: GaussianRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry(m)
            .or_insert_with(GaussianRational::zero);
        *entry += &coeff;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &SuperPolynomial) -> SuperPolynomial {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SuperPolynomial) -> SuperPolynomial {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(*m, -c);
        }
        out
    }

    pub fn neg(&self) -> SuperPolynomial {
        let mut out = SuperPolynomial::zero();
        for (m, c) in self.terms() {
            out.add_term(*m, -c);
        }
        out
    }

    pub fn scale(&self, s: &GaussianRational) -> SuperPolynomial {
        let mut out = SuperPolynomial::zero();
        for (m, c) in self.terms() {
            out.add_term(*m, c * s);
        }
        out
    }

    pub fn mul(&self, other: &SuperPolynomial) -> SuperPolynomial {
        let mut out = SuperPolynomial::zero();
        for (m1, c1) in self.terms() {
            for (m2, c2) in other.terms() {
                if let Some((sign, m)) = m1.mul(m2) {
                    let mut c = c1 * c2;
                    if sign < 0 {
                        c = -c;
                    }
                    out.add_term(m, c);
                }
            }
        }
        out
    }

    /// Left partial derivative ∂ᵢ with the Koszul sign rule. For the odd
    /// variables: ∂₃(z₁^a z₂^b z₃ z₄^d) = z₁^a z₂^b z₄^d (no sign, z₃ sits
    /// left of z₄), while ∂₄ must pass z₃ first, so
    /// ∂₄(z₁^a z₂^b z₃^c z₄) = (−1)^c z₁^a z₂^b z₃^c.
    pub fn partial(&self, v: Var) -> SuperPolynomial {
        let mut out = SuperPolynomial::zero();
        for (m, c) in self.terms() {
            match v {
                Var::Z1 => {
                    if m.a > 0 {
                        out.add_term(
                            SuperMonomial::new(m.a - 1, m.b, m.c, m.d),
                            c.scale(&num::rational::BigRational::from_integer(
                                num::bigint::BigInt::from(m.a),
                            )),
                        );
                    }
                }
                Var::Z2 => {
                    if m.b > 0 {
                        out.add_term(
                            SuperMonomial::new(m.a, m.b - 1, m.c, m.d),
                            c.scale(&num::rational::BigRational::from_integer(
                                num::bigint::BigInt::from(m.b),
                            )),
                        );
                    }
                }
                Var::Z3 => {
                    if m.c {
                        out.add_term(SuperMonomial::new(m.a, m.b, false, m.d), c.clone());
                    }
                }
                Var::Z4 => {
                    if m.d {
                        let coeff = if m.c { -c } else { c.clone() };
                        out.add_term(SuperMonomial::new(m.a, m.b, m.c, false), coeff);
                    }
                }
            }
        }
        out
    }

    /// Coefficient-wise complex conjugation.
    pub fn conj_coeffs(&self) -> SuperPolynomial {
        let mut out = SuperPolynomial::zero();
        for (m, c) in self.terms() {
            out.add_term(*m, c.conj());
        }
        out
    }

    /// Largest coefficient magnitude, as a float (0 for the zero polynomial).
    pub fn max_abs_coeff(&self) -> f64 {
        self.terms
            .values()
            .map(|c| c.abs_f64())
            .fold(0.0, f64::max)
    }

    /// True if every monomial has the given parity (vacuously for 0).
    pub fn has_parity(&self, p: Parity) -> bool {
        self.terms.keys().all(|m| m.parity() == p)
    }
}

impl fmt::Display for SuperPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(m, c)| {
                if *m == SuperMonomial::ONE {
                    format!("({c})")
                } else {
                    format!("({c})·{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
