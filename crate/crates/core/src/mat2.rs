//! Minimal 2×2 matrices, generic over the scalar, used both with exact
//! rational entries (adjoint action) and with `f64` entries (group
//! exponentials and Cartan decomposition).

use num::traits::{One, Zero};
use std::ops::{Add, Mul, Neg, Sub};

/// Row-major 2×2 matrix `[[a, b], [c, d]]`.
#[derive(Clone, PartialEq, Debug)]
pub struct Mat2<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

impl<T> Mat2<T>
where
    T: Clone + Add<Output = T> + Sub<Output = T> + Mul<Output = T> + Neg<Output = T> + Zero + One,
{
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        Mat2::new(T::one(), T::zero(), T::zero(), T::one())
    }

    pub fn det(&self) -> T {
        self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone()
    }

    pub fn mul(&self, o: &Mat2<T>) -> Mat2<T> {
        Mat2::new(
            self.a.clone() * o.a.clone() + self.b.clone() * o.c.clone(),
            self.a.clone() * o.b.clone() + self.b.clone() * o.d.clone(),
            self.c.clone() * o.a.clone() + self.d.clone() * o.c.clone(),
            self.c.clone() * o.b.clone() + self.d.clone() * o.d.clone(),
        )
    }

    /// Inverse of a determinant-one matrix: `[[d, −b], [−c, a]]`.
    /// Only valid when `det == 1`; callers enforce that invariant.
    pub fn inverse_unimodular(&self) -> Mat2<T> {
        Mat2::new(
            self.d.clone(),
            -self.b.clone(),
            -self.c.clone(),
            self.a.clone(),
        )
    }

    pub fn transpose(&self) -> Mat2<T> {
        Mat2::new(self.a.clone(), self.c.clone(), self.b.clone(), self.d.clone())
    }

    /// Apply to a column vector.
    pub fn apply(&self, v: &(T, T)) -> (T, T) {
        (
            self.a.clone() * v.0.clone() + self.b.clone() * v.1.clone(),
            self.c.clone() * v.0.clone() + self.d.clone() * v.1.clone(),
        )
    }

    pub fn scale(&self, s: &T) -> Mat2<T> {
        Mat2::new(
            self.a.clone() * s.clone(),
            self.b.clone() * s.clone(),
            self.c.clone() * s.clone(),
            self.d.clone() * s.clone(),
        )
    }

    pub fn add(&self, o: &Mat2<T>) -> Mat2<T> {
        Mat2::new(
            self.a.clone() + o.a.clone(),
            self.b.clone() + o.b.clone(),
            self.c.clone() + o.c.clone(),
            self.d.clone() + o.d.clone(),
        )
    }
}
