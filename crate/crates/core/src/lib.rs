//! Exact-arithmetic engine for the Lie superalgebra D(2,1;α), its polynomial
//! Fock representation, and the integrated actions of the corresponding
//! supergroup.
//!
//! Everything algebraic is computed over Gaussian rationals (complex numbers
//! with arbitrary-precision rational real and imaginary parts), so structural
//! identities — graded Jacobi, representation brackets, inner-product tables —
//! are checked *exactly*, with no floating-point tolerance. Floating point
//! enters only where a one-parameter group element is applied to a vector
//! (matrix exponentials, trigonometric/hyperbolic coefficients); those numeric
//! routes are cross-validated against exact closed forms.
//!
//! Module map:
//!
//! * [`scalar`] — exact Gaussian-rational scalars and the deformation
//!   parameter α (a rational that must not be a natural number).
//! * [`poly`] — supercommutative polynomials in two even variables z₁, z₂ and
//!   two odd (Grassmann) variables z₃, z₄, with signed partial derivatives.
//! * [`algebra`] — the 17-dimensional Lie superalgebra D(2,1;α): structure
//!   constants, super bracket, Jacobi checker, grading, adjoint action.
//! * [`fock`] — the Fock quotient space, normal forms, the operator
//!   realization ρ of the algebra, Bessel operators, the Bessel–Fischer
//!   pairing, and the fundamental symmetry.
//! * [`group`] — SL(2) exponentials and Cartan decomposition, closed-form
//!   actions of the one-parameter subgroups on coefficient vectors, the
//!   numeric-exponential route, and the Laguerre eigenbasis.
//! * [`report`] / [`verify`] — verification batteries producing structured
//!   pass/fail reports (JSON/CSV/text), shared by the test suite, the
//!   examples, and the thin `superfock` command-line binary.
//!
//! Runnable walkthroughs live in `examples/`; try
//! `cargo run --example jacobi_check` or `cargo run --example gram_table`.

pub mod algebra;
pub mod fock;
pub mod group;
pub mod mat2;
pub mod poly;
pub mod report;
pub mod scalar;
pub mod verify;

pub use algebra::{AlgebraElement, BasisElement, StructureConstants};
pub use fock::{FockOperator, FockVector};
pub use report::{CheckStatus, OutputFormat, RunConfig, VerificationReport};
pub use scalar::{AlphaParam, GaussianRational};
pub use verify::{gram_csv, verify_algebra, verify_all, verify_fock, verify_group, witness_not_strong};
