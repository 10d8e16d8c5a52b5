//! Build the 17-dimensional superalgebra at a chosen deformation parameter,
//! print a few representative brackets, and export the full structure-constant
//! table as JSON.
//!
//! Run with `cargo run --example structure_constants [alpha]` (default -2).

use superfock::algebra::Sign;
use superfock::scalar::parse_rational;
use superfock::{AlgebraElement, AlphaParam, BasisElement, StructureConstants};

fn main() {
    let alpha_text = std::env::args().nth(1).unwrap_or_else(|| "-2".into());
    let alpha = AlphaParam::new(parse_rational(&alpha_text).expect("rational alpha"))
        .expect("alpha must not be a natural number");
    let sc = StructureConstants::new(&alpha);

    println!("alpha = {alpha}");
    println!(
        "weights: sigma1 = {}, sigma2 = {}, sigma3 = {}",
        alpha.sigma1(),
        alpha.sigma2(),
        alpha.sigma3(),
    );
    println!();

    println!("sl(2) triples (one per factor):");
    for i in 1..=3u8 {
        println!(
            "  [E{i}, F{i}] = {}    [H{i}, E{i}] = {}    [H{i}, F{i}] = {}",
            sc.bracket_basis(BasisElement::E(i), BasisElement::F(i)),
            sc.bracket_basis(BasisElement::H(i), BasisElement::E(i)),
            sc.bracket_basis(BasisElement::H(i), BasisElement::F(i)),
        );
    }
    println!();

    use Sign::{Minus as M, Plus as P};
    println!("a few odd-odd brackets (these carry the deformation):");
    let samples = [
        (BasisElement::U(P, P, P), BasisElement::U(M, M, M)),
        (BasisElement::U(P, P, P), BasisElement::U(P, M, M)),
        (BasisElement::U(P, M, P), BasisElement::U(M, P, M)),
    ];
    for (x, y) in samples {
        println!("  [{x}, {y}] = {}", sc.bracket_basis(x, y));
    }
    println!();

    println!("grading (grade of a bracket adds the grades):");
    let x = BasisElement::E(2);
    let y = BasisElement::U(P, M, M);
    println!(
        "  grade({x}) = {}, grade({y}) = {}, [{x}, {y}] = {}",
        x.grade(),
        y.grade(),
        sc.bracket_basis(x, y),
    );
    println!();

    println!("bilinear extension on a mixed element:");
    let mix = AlgebraElement::basis(BasisElement::E(1))
        .add(&AlgebraElement::basis(BasisElement::U(P, P, M)));
    let against = AlgebraElement::basis(BasisElement::U(M, M, P));
    println!(
        "  [E1 + {}, {}] = {}",
        BasisElement::U(P, P, M),
        against,
        sc.bracket(&mix, &against)
    );
    println!();

    let json = sc.to_json();
    let entries = json["brackets"].as_array().map(Vec::len).unwrap_or(0);
    println!("full JSON export: {entries} non-zero bracket entries; the first one:");
    println!(
        "{}",
        serde_json::to_string_pretty(&json["brackets"][0]).unwrap()
    );
}
