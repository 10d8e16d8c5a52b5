//! The operator realization of the superalgebra on the polynomial model:
//! images of sample generators, the tridiagonal band structure of the
//! hyperbolic Cartan operator, and exact scans of the two structural
//! properties (bracket compatibility and skew-supersymmetry).
//!
//! Run with `cargo run --example representation_check [alpha]` (default -2).

use superfock::fock::{
    homomorphism_defect, nf_basis, rho, skew_supersymmetry_defect, to_matrix, FockVector, NfFamily,
    NfIndex,
};
use superfock::scalar::parse_rational;
use superfock::{AlphaParam, BasisElement, StructureConstants};

fn main() {
    let alpha_text = std::env::args().nth(1).unwrap_or_else(|| "-2".into());
    let alpha = AlphaParam::new(parse_rational(&alpha_text).unwrap())
        .expect("alpha must not be a natural number");
    println!("alpha = {alpha}");
    println!();

    println!("images of sample generators on low-degree vectors:");
    let one = FockVector::one();
    let z1 = FockVector::basis(NfIndex::new(NfFamily::F1, 1));
    let z1z3 = FockVector::basis(NfIndex::new(NfFamily::F3, 1));
    for x in [
        BasisElement::H(2),
        BasisElement::H(3),
        BasisElement::E(1),
        BasisElement::F(1),
    ] {
        let op = rho(x, &alpha);
        println!(
            "  rho({x}): 1 -> {};  z1 -> {};  z1*z3 -> {}",
            op.apply(&one),
            op.apply(&z1),
            op.apply(&z1z3),
        );
    }
    println!();

    println!("band matrix of rho(H2) on family 1 to degree 4 (rows = outputs):");
    let m = to_matrix(&rho(BasisElement::H(2), &alpha), 4);
    let fam1: Vec<NfIndex> = nf_basis(4)
        .into_iter()
        .filter(|b| b.family == NfFamily::F1)
        .collect();
    for r in &fam1 {
        print!("  {:>5} |", r.to_string());
        for c in &fam1 {
            print!(
                "{:>10}",
                m.entry(r.flat_index(), c.flat_index()).to_string()
            );
        }
        println!();
    }
    println!("  (superdiagonal 1 = multiplication, subdiagonal j(j-1-alpha) = lowering)");
    println!();

    let sc = StructureConstants::new(&alpha);
    let mut max = 0.0f64;
    for x in BasisElement::all() {
        for y in BasisElement::all() {
            max = max.max(homomorphism_defect(&sc, x, y, 4));
        }
    }
    println!("bracket compatibility over all 17^2 generator pairs to degree 4: max defect {max}");

    let mut skew = 0.0f64;
    for x in BasisElement::all() {
        skew = skew.max(skew_supersymmetry_defect(&alpha, x, 4));
    }
    println!("skew-supersymmetry over all 17 generators to degree 4: max defect {skew}");
}
