//! The pairing cannot be made invariant by any rescaling of the odd
//! variables: for X = E₃ + F₃, p = z₂, q = 1 the invariance defect of the
//! scaled pairing is exactly ı·(ε₁ + ε₂), which is nonzero whenever the
//! scalings are positive.
//!
//! Run with `cargo run --example witness_scan`.

use num::rational::BigRational;
use num::BigInt;
use rand::{Rng, SeedableRng};
use superfock::fock::sur_witness_defect;
use superfock::scalar::AlphaParam;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn main() {
    let alpha = AlphaParam::new(q(-2, 1)).unwrap();

    println!("unit scalings (1, 1, 1, 1):");
    let unit = [q(1, 1), q(1, 1), q(1, 1), q(1, 1)];
    let d = sur_witness_defect(&alpha, &unit);
    println!("  defect = {d}   (the unscaled pairing itself is not invariant)");
    println!();

    println!("hand-picked scalings:");
    for eps in [
        [q(3, 1), q(1, 2), q(1, 1), q(1, 1)],
        [q(1, 4), q(1, 4), q(7, 1), q(2, 3)],
        [q(5, 1), q(5, 1), q(5, 1), q(5, 1)],
    ] {
        let d = sur_witness_defect(&alpha, &eps);
        let predicted = superfock::scalar::GaussianRational::imaginary(&eps[0] + &eps[1]);
        assert_eq!(d, predicted);
        println!(
            "  eps = ({}, {}, {}, {})  defect = {d}  =  i(eps1 + eps2)",
            eps[0], eps[1], eps[2], eps[3]
        );
    }
    println!();

    println!("random positive scalings (the defect never vanishes):");
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(77);
    let mut nonzero = 0;
    let trials = 500;
    for _ in 0..trials {
        let eps: Vec<BigRational> = (0..4)
            .map(|_| q(rng.gen_range(1..=9), rng.gen_range(1..=9)))
            .collect();
        let eps: [BigRational; 4] = eps.try_into().unwrap();
        let d = sur_witness_defect(&alpha, &eps);
        assert_eq!(
            d,
            superfock::scalar::GaussianRational::imaginary(&eps[0] + &eps[1])
        );
        assert!(!d.is_zero());
        nonzero += 1;
    }
    println!("  {nonzero}/{trials} trials: defect = i(eps1 + eps2) != 0, as predicted");
    println!();
    println!("Conclusion: positivity of the scalings forces eps1 + eps2 > 0, so no");
    println!("positive rescaling of the odd variables makes the pairing invariant.");
}
