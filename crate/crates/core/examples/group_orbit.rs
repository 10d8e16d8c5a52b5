//! Act words of one-parameter group elements on coefficient vectors:
//! parsing, rightmost-first application, preservation of the indefinite
//! pairing, and one-parameter additivity.
//!
//! Run with `cargo run --example group_orbit [alpha]` (default -2).

use rand::SeedableRng;
use superfock::group::{
    act_closed_form, act_word, parse_word, NumericFockVector, OneParamElement, OneParamFamily,
};
use superfock::scalar::parse_rational;
use superfock::AlphaParam;

fn main() {
    let alpha_text = std::env::args().nth(1).unwrap_or_else(|| "-2".into());
    let alpha = AlphaParam::new(parse_rational(&alpha_text).unwrap())
        .expect("alpha must not be a natural number");
    println!("alpha = {alpha}");
    println!();

    // The constant vector 1 under a hyperbolic-then-elliptic word.
    let word = parse_word("K3(0.7) A3(0.5)").unwrap();
    let one = NumericFockVector::basis(
        superfock::fock::NfIndex::new(superfock::fock::NfFamily::F1, 0),
        2,
    );
    let moved = act_word(&word, &one, &alpha, 16).unwrap();
    println!("word \"K3(0.7) A3(0.5)\" applied to the constant vector (rightmost first):");
    println!("  f1[0] = {:.6}", moved.vector.f1[0]);
    println!("  f2[0] = {:.6}", moved.vector.f2[0]);
    println!(
        "  (expected cosh(0.5)*e^(0.7i) and sinh(0.5)*e^(-0.7i) from the closed forms)"
    );
    println!();

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    let f = NumericFockVector::random(8, &mut rng).normalized_s(&alpha);
    let g = NumericFockVector::random(8, &mut rng).normalized_s(&alpha);
    let before = f.bf_inner(&g, &alpha);

    println!("pairing preservation along each closed-form family (unit-norm random pair):");
    for fam in [
        OneParamFamily::K1,
        OneParamFamily::K2,
        OneParamFamily::K3,
        OneParamFamily::A1,
        OneParamFamily::A3,
    ] {
        let e = OneParamElement::new(fam, 0.9);
        let uf = act_closed_form(&e, &f, &alpha).unwrap();
        let ug = act_closed_form(&e, &g, &alpha).unwrap();
        let after = uf.bf_inner(&ug, &alpha);
        println!(
            "  {}: |<Uf, Ug> - <f, g>| = {:.3e}",
            fam.name(),
            (after - before).norm()
        );
    }
    println!();

    println!("one-parameter additivity g(0.3) g(0.4) = g(0.7) (max coefficient gap):");
    for fam in [
        OneParamFamily::K1,
        OneParamFamily::K2,
        OneParamFamily::K3,
        OneParamFamily::A1,
        OneParamFamily::A3,
    ] {
        let two = act_closed_form(
            &OneParamElement::new(fam, 0.3),
            &act_closed_form(&OneParamElement::new(fam, 0.4), &f, &alpha).unwrap(),
            &alpha,
        )
        .unwrap();
        let oneshot = act_closed_form(&OneParamElement::new(fam, 0.7), &f, &alpha).unwrap();
        println!("  {}: {:.3e}", fam.name(), two.max_abs_diff(&oneshot));
    }
}
