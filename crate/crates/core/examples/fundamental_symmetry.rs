//! The diagonal sign symmetry S that turns the indefinite pairing into a
//! positive form: its orbit on basis monomials, its order, the isometry
//! property, and the resulting positive diagonal weights.
//!
//! Run with `cargo run --example fundamental_symmetry [alpha]` (default -7/3).

use superfock::fock::{
    bessel_fischer, expected_s_diag, fundamental_symmetry, inner_s, nf_basis, norm_sq_s,
    FockVector, NfFamily, NfIndex,
};
use superfock::scalar::parse_rational;
use superfock::{AlphaParam, GaussianRational};

fn main() {
    let alpha_text = std::env::args().nth(1).unwrap_or_else(|| "-7/3".into());
    let alpha = AlphaParam::new(parse_rational(&alpha_text).unwrap())
        .expect("alpha must not be a natural number");
    println!("alpha = {alpha}");
    println!();

    println!("orbit of S on low-degree monomials (note the family-3/4 swap):");
    for idx in nf_basis(2) {
        let v = FockVector::basis(idx);
        let s1 = fundamental_symmetry(&v, &alpha);
        let s2 = fundamental_symmetry(&s1, &alpha);
        let s4 = fundamental_symmetry(&fundamental_symmetry(&s2, &alpha), &alpha);
        println!(
            "  S({idx}) = {s1}    S^2 = {s2}    S^4 = {s4}",
        );
        assert!(s4.sub(&v).is_zero(), "S must have order four");
    }
    println!();

    println!("isometry: <Sp, Sq> = <p, q> on every basis pair to degree 6:");
    let basis = nf_basis(6);
    let mut checked = 0usize;
    for bp in &basis {
        let p = FockVector::basis(*bp);
        let sp = fundamental_symmetry(&p, &alpha);
        for bq in &basis {
            let q = FockVector::basis(*bq);
            let sq = fundamental_symmetry(&q, &alpha);
            assert_eq!(
                bessel_fischer(&sp, &sq, &alpha),
                bessel_fischer(&p, &q, &alpha)
            );
            checked += 1;
        }
    }
    println!("  {checked} pairs, all exact");
    println!();

    println!("positive form (p, q)_S = <p, Sq>: diagonal weights by family:");
    for family in NfFamily::ALL {
        print!("  {family:?}:");
        for j in 0..4u32 {
            let idx = NfIndex::new(family, j);
            let w = expected_s_diag(idx, &alpha);
            assert_eq!(
                inner_s(&FockVector::basis(idx), &FockVector::basis(idx), &alpha),
                GaussianRational::from_rational(w.clone())
            );
            print!(" ({idx}, {w})");
        }
        println!();
    }
    println!();

    let mixed = FockVector::basis(NfIndex::new(NfFamily::F1, 2))
        .add(&FockVector::basis(NfIndex::new(NfFamily::F3, 1)).scale(&GaussianRational::i()));
    println!(
        "norm of z1^2 + i*z1*z3 in the positive form: {}",
        norm_sq_s(&mixed, &alpha)
    );
}
