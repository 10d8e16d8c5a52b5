//! For α > 0 the hyperbolic generator dρ(H₂) has an exact eigenbasis built
//! from Laguerre polynomials: e^{−z₁}L_k^{(−1−α)}(2z₁) is an eigenvector for
//! eigenvalue 2k − α (families 1–2; the odd families shift by −1).
//!
//! This demonstrates three things at α = 5/2:
//!   1. the truncated eigenvectors satisfy the eigen-relation exactly below
//!      the truncation band — the residual lives only in degrees {N, N+1};
//!   2. the flow is diagonal in the eigenbasis (act on Laguerre coefficients);
//!   3. the matrix-exponential route reproduces the eigenvalue scaling.
//!
//! Run with `cargo run --release --example laguerre_flow`.

use num::complex::Complex64;
use num::rational::BigRational;
use num::BigInt;
use superfock::fock::{nf_dim, NfIndex};
use superfock::group::numeric::NumericFockVector;
use superfock::group::{
    act_a2_expm, act_a2_laguerre, laguerre_eigen_residual, laguerre_family1_vector,
    LaguerreCoeffs,
};
use superfock::scalar::AlphaParam;

fn main() {
    let alpha = AlphaParam::new(BigRational::new(BigInt::from(5), BigInt::from(2))).unwrap();
    let n = 20u32;

    println!("1. residual support of the truncated eigenvectors (N = {n}):");
    for k in 0..=4u32 {
        let r = laguerre_eigen_residual(k, &alpha, n);
        let mut degs: Vec<u32> = r.terms().map(|(idx, _)| idx.degree()).collect();
        degs.sort_unstable();
        degs.dedup();
        assert!(degs.iter().all(|d| *d >= n && *d <= n + 1));
        println!(
            "   k = {k}: eigenvalue 2k−α = {}, residual degrees {degs:?}",
            2.0 * k as f64 - 2.5
        );
    }
    println!("   (interior coefficients vanish exactly — the defect is pure truncation)");
    println!();

    println!("2. the flow in the eigenbasis is diagonal:");
    let g = LaguerreCoeffs {
        g1: vec![Complex64::new(1.0, 0.0), Complex64::new(0.5, 0.0)],
        g2: vec![Complex64::new(0.0, 1.0)],
        g3: vec![Complex64::new(2.0, 0.0)],
        g4: vec![],
    };
    let t = 0.4;
    let out = act_a2_laguerre(t, &g, &alpha).unwrap();
    for (k, (before, after)) in g.g1.iter().zip(&out.g1).enumerate() {
        let lambda = 2.0 * k as f64 - 2.5;
        println!(
            "   g1[{k}]: {before:.4} -> {after:.4}   (factor e^{{t·({lambda})}} = {:.6})",
            (t * lambda).exp()
        );
    }
    let lambda3 = 2.0 * 0 as f64 - 2.5 - 1.0;
    println!(
        "   g3[0]: {:.4} -> {:.4}   (odd families shift the eigenvalue by −1: factor {:.6})",
        g.g3[0],
        out.g3[0],
        (t * lambda3).exp()
    );
    println!();

    println!("3. cross-check against the matrix-exponential route:");
    // Flow the truncated k = 1 eigenvector with the generic expm machinery
    // and compare against the pure eigenvalue scaling. At α = 5/2 the
    // S-weights nearly cancel the factorial decay of the coefficients, so the
    // truncated eigenvector still carries a polynomially small S-mass tail at
    // the cutoff; the flow redistributes that tail, which bounds the
    // agreement away from machine precision at the higher degrees.
    let k = 1u32;
    let t = 0.25;
    let cutoff = 20u32;
    let v = laguerre_family1_vector(k, &alpha, cutoff);
    let nv = NumericFockVector::from_fock(&v, cutoff);
    let flowed = act_a2_expm(t, &nv, cutoff, &alpha, 8).unwrap();
    let factor = (t * (2.0 * k as f64 - 2.5)).exp();
    let expected = nv.scale(Complex64::new(factor, 0.0));
    let err_to = |deg: u32| {
        let mut max = 0.0f64;
        for flat in 0..nf_dim(deg) {
            let idx = NfIndex::from_flat(flat);
            max = max.max((flowed.vector.get(idx) - expected.get(idx)).norm());
        }
        max
    };
    println!("   k = {k}, t = {t}, cutoff {cutoff}: expm route vs e^{{t(2k−α)}} scaling,");
    println!("   max coefficient deviation on degrees ≤ 3:  {:.3e}", err_to(3));
    println!("   max coefficient deviation on degrees ≤ 10: {:.3e}", err_to(10));
    println!("   (the tail leak visible at higher degrees shrinks as the cutoff grows)");
    assert!(err_to(3) < 1e-8, "routes disagree on the dominant block: {}", err_to(3));
    println!("   the two routes agree on the dominant coefficients.");
}
