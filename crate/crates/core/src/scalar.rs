//! Exact scalars: Gaussian rationals `a + b·i` with arbitrary-precision
//! rational components, and the deformation parameter α.
//!
//! All structural identities in this crate are certified over these scalars;
//! nothing here ever rounds.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

/// A complex number with exact rational real and imaginary parts.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        GaussianRational::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        GaussianRational::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        GaussianRational::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// Exact rational `num/den`. Panics if `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        GaussianRational::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    pub fn from_rational(r: BigRational) -> Self {
        GaussianRational::new(r, BigRational::zero())
    }

    /// `r·i` for rational `r`.
    pub fn imaginary(r: BigRational) -> Self {
        GaussianRational::new(BigRational::zero(), r)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }

    /// `|z|² = re² + im²`, an exact non-negative rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussianRational::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        GaussianRational::new(&self.re * r, &self.im * r)
    }

    /// Floating-point image (re, im); exact values may overflow to ±∞.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        (
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    /// Floating-point magnitude `|z|`.
    pub fn abs_f64(&self) -> f64 {
        let (re, im) = self.to_f64_pair();
        re.hypot(im)
    }
}

impl fmt::Display for GaussianRational {
    /// Canonical form `p/q`, `r/s i`, or `p/q+r/s i` (denominator omitted
    /// when 1), matching the serialization used in JSON exports.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "{} i", self.im);
        }
        if self.im.is_negative() {
            write!(f, "{}-{} i", self.re, -self.im.clone())
        } else {
            write!(f, "{}+{} i", self.re, self.im)
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$method(rhs)
            }
        }
        impl $trait<GaussianRational> for &GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                self.$method(&rhs)
            }
        }
    };
}

impl Add<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}
forward_binop!(Add, add);

impl Sub<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}
forward_binop!(Sub, sub);

impl Mul<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}
forward_binop!(Mul, mul);

impl Div<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    /// Panics on division by zero.
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self * rhs.inv().expect("division by zero GaussianRational")
    }
}
forward_binop!(Div, div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl AddAssign for GaussianRational {
    fn add_assign(&mut self, rhs: GaussianRational) {
        *self += &rhs;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = (&*self) * rhs;
    }
}

/// Rising factorial `(a)ₖ = a(a+1)⋯(a+k−1)`, with `(a)₀ = 1`.
pub fn pochhammer(a: &BigRational, k: u32) -> BigRational {
    let mut acc = BigRational::one();
    let mut term = a.clone();
    for _ in 0..k {
        acc *= &term;
        term += BigRational::one();
    }
    acc
}

/// `k!` as an exact rational.
pub fn factorial(k: u32) -> BigRational {
    let mut acc = BigInt::one();
    for j in 2..=k as u64 {
        acc *= BigInt::from(j);
    }
    BigRational::from_integer(acc)
}

/// Sign of a rational: −1, 0, or +1.
pub fn sgn(r: &BigRational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_negative() {
        -1
    } else {
        1
    }
}

/// Errors from scalar-level validation.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ScalarError {
    /// α must avoid ℕ = {0, 1, 2, …}: at natural α the inner-product tables
    /// degenerate and the fundamental symmetry is undefined.
    #[error("alpha = {0} is a natural number; the pairing degenerates there")]
    NaturalAlpha(BigRational),
    #[error("cannot parse {0:?} as a rational number (expected p or p/q)")]
    BadRational(String),
}

/// The deformation parameter α: an exact rational, excluded from ℕ unless
/// explicitly overridden for degeneracy-boundary experiments.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AlphaParam {
    value: BigRational,
}

impl AlphaParam {
    /// Validating constructor; rejects α ∈ ℕ.
    pub fn new(value: BigRational) -> Result<Self, ScalarError> {
        if is_natural(&value) {
            return Err(ScalarError::NaturalAlpha(value));
        }
        Ok(AlphaParam { value })
    }

    /// Bypass the naturality guard. Only meaningful for probing the
    /// degenerate boundary (e.g. confirming the Gram matrix goes singular).
    pub fn new_unchecked(value: BigRational) -> Self {
        AlphaParam { value }
    }

    pub fn from_str_checked(s: &str) -> Result<Self, ScalarError> {
        let r = parse_rational(s)?;
        AlphaParam::new(r)
    }

    pub fn rational(&self) -> &BigRational {
        &self.value
    }

    pub fn to_scalar(&self) -> GaussianRational {
        GaussianRational::from_rational(self.value.clone())
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64().unwrap_or(f64::NAN)
    }

    pub fn is_natural(&self) -> bool {
        is_natural(&self.value)
    }

    /// σ₁ = (1+α)/2, the first weight in the triple-product bracket.
    pub fn sigma1(&self) -> BigRational {
        (BigRational::one() + &self.value) / BigRational::from_integer(BigInt::from(2))
    }

    /// σ₂ = −1/2.
    pub fn sigma2(&self) -> BigRational {
        -BigRational::new(BigInt::one(), BigInt::from(2))
    }

    /// σ₃ = −α/2.
    pub fn sigma3(&self) -> BigRational {
        -&self.value / BigRational::from_integer(BigInt::from(2))
    }

    /// `(−α)ₖ`, the rising factorial that populates the pairing tables.
    pub fn neg_alpha_pochhammer(&self, k: u32) -> BigRational {
        pochhammer(&-self.value.clone(), k)
    }
}

impl fmt::Display for AlphaParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

fn is_natural(r: &BigRational) -> bool {
    r.is_integer() && !r.is_negative()
}

/// Parse `p` or `p/q` into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational, ScalarError> {
    BigRational::from_str(s.trim()).map_err(|_| ScalarError::BadRational(s.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::bigint::BigUint;
    use proptest::prelude::*;
    use rand::{RngCore, SeedableRng};

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn field_inverse_is_exact_on_256_bit_operands() {
        // (a/b)·(b/a) must come back as exactly 1, with no drift, even for
        // operands hundreds of bits wide.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let mut bytes = [0u8; 32];
            rng.fill_bytes(&mut bytes);
            let a = BigUint::from_bytes_le(&bytes) + BigUint::from(1u8);
            rng.fill_bytes(&mut bytes);
            let b = BigUint::from_bytes_le(&bytes) + BigUint::from(1u8);
            let r = BigRational::new(BigInt::from(a), BigInt::from(b));
            let z = GaussianRational::from_rational(r);
            let w = z.inv().unwrap();
            assert_eq!(z * w, GaussianRational::one());
        }
    }

    #[test]
    fn complex_inverse_roundtrips() {
        let z = GaussianRational::new(q(3, 7), q(-5, 2));
        let w = z.inv().unwrap();
        assert_eq!(&z * &w, GaussianRational::one());
        assert_eq!(z.conj().conj(), z);
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussianRational::i();
        assert_eq!(&i * &i, GaussianRational::from_int(-1));
    }

    #[test]
    fn pochhammer_matches_direct_products() {
        // (2)₃ = 2·3·4
        assert_eq!(pochhammer(&q(2, 1), 3), q(24, 1));
        // (−1/2)₂ = (−1/2)(1/2)
        assert_eq!(pochhammer(&q(-1, 2), 2), q(-1, 4));
        // (x)₀ = 1 for any x
        assert_eq!(pochhammer(&q(-17, 5), 0), q(1, 1));
        // (−2)₃ = (−2)(−1)(0) = 0
        assert_eq!(pochhammer(&q(-2, 1), 3), q(0, 1));
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), q(1, 1));
        assert_eq!(factorial(5), q(120, 1));
    }

    #[test]
    fn alpha_guard_rejects_naturals_only() {
        assert!(AlphaParam::new(q(3, 1)).is_err());
        assert!(AlphaParam::new(q(0, 1)).is_err());
        assert!(AlphaParam::new(q(-2, 1)).is_ok());
        assert!(AlphaParam::new(q(5, 2)).is_ok());
        assert!(AlphaParam::new(q(-1, 2)).is_ok());
        assert!(AlphaParam::new_unchecked(q(1, 1)).is_natural());
    }

    #[test]
    fn sigma_weights_sum_to_minus_half_alpha_plus_half() {
        // σ₁ + σ₂ + σ₃ = (1+α)/2 − 1/2 − α/2 = 0 — the exact condition under
        // which the graded Jacobi identity holds.
        for a in [q(-1, 2), q(-2, 1), q(-7, 3), q(1, 2), q(5, 2)] {
            let alpha = AlphaParam::new(a).unwrap();
            let sum = alpha.sigma1() + alpha.sigma2() + alpha.sigma3();
            assert!(sum.is_zero());
        }
    }

    #[test]
    fn display_matches_export_format() {
        assert_eq!(GaussianRational::from_ratio(3, 4).to_string(), "3/4");
        assert_eq!(
            GaussianRational::new(q(1, 2), q(-2, 3)).to_string(),
            "1/2-2/3 i"
        );
        assert_eq!(GaussianRational::imaginary(q(7, 2)).to_string(), "7/2 i");
        assert_eq!(GaussianRational::zero().to_string(), "0");
        assert_eq!(GaussianRational::from_int(-3).to_string(), "-3");
    }

    #[test]
    fn parse_rational_accepts_both_forms() {
        assert_eq!(parse_rational("-7/3").unwrap(), q(-7, 3));
        assert_eq!(parse_rational("4").unwrap(), q(4, 1));
        assert!(parse_rational("x").is_err());
    }

    proptest! {
        #[test]
        fn mul_distributes_over_add(
            a in -50i64..50, b in 1i64..20,
            c in -50i64..50, d in 1i64..20,
            e in -50i64..50, f in 1i64..20,
        ) {
            let x = GaussianRational::new(q(a, b), q(c, d));
            let y = GaussianRational::new(q(c, f), q(e, b));
            let z = GaussianRational::new(q(e, d), q(a, f));
            let lhs = &x * &(&y + &z);
            let rhs = &x * &y + &x * &z;
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn conjugation_is_multiplicative(
            a in -50i64..50, b in 1i64..20,
            c in -50i64..50, d in 1i64..20,
        ) {
            let x = GaussianRational::new(q(a, b), q(c, d));
            let y = GaussianRational::new(q(c, d), q(a, b));
            prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        }
    }
}
