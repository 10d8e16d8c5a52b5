//! Print the exact Gram table of the sesquilinear pairing on the normal
//! basis, verify it against the closed-form factorial/shifted-product
//! formula, and show the degeneracy that appears when the deformation
//! parameter is a natural number.
//!
//! Run with `cargo run --example gram_table [alpha] [N]` (default -2, 3).

use num::BigRational;
use superfock::fock::{
    det_exact, expected_bf, gram_matrix, nf_basis, GramForm,
};
use superfock::scalar::parse_rational;
use superfock::AlphaParam;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let alpha_text = args.get(1).map(String::as_str).unwrap_or("-2");
    let n: u32 = args.get(2).map(|s| s.parse().unwrap()).unwrap_or(3);
    let alpha = AlphaParam::new(parse_rational(alpha_text).unwrap())
        .expect("alpha must not be a natural number");

    let basis = nf_basis(n);
    let g = gram_matrix(&alpha, n, GramForm::BesselFischer);

    println!("pairing table at alpha = {alpha}, degree <= {n} ({} basis monomials):", basis.len());
    print!("{:>10}", "");
    for b in &basis {
        print!("{:>10}", b.to_string());
    }
    println!();
    for (r, br) in basis.iter().enumerate() {
        print!("{:>10}", br.to_string());
        for entry in &g[r] {
            print!("{:>10}", entry.to_string());
        }
        println!();
    }
    println!();

    let mut mismatches = 0usize;
    for (r, br) in basis.iter().enumerate() {
        for (c, bc) in basis.iter().enumerate() {
            if g[r][c] != expected_bf(*br, *bc, &alpha) {
                mismatches += 1;
            }
        }
    }
    println!(
        "closed-form comparison: {mismatches} mismatches out of {} entries",
        basis.len() * basis.len()
    );
    println!(
        "determinant of the block: {}",
        det_exact(&g)
    );
    println!();

    println!("the same determinant at natural parameters (guard bypassed):");
    for nat in 0i64..=2 {
        let natural = AlphaParam::new_unchecked(BigRational::from_integer(nat.into()));
        let det = det_exact(&gram_matrix(&natural, n, GramForm::BesselFischer));
        println!("  alpha = {nat}: det = {det}");
    }
}
