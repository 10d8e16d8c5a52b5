//! Factor elements of one SL(2) factor as rotation · positive diagonal ·
//! rotation, and exponentiate Lie-algebra data through the three curvature
//! branches (hyperbolic, elliptic, parabolic).
//!
//! Run with `cargo run --example cartan_decomposition`.

use rand::{Rng, SeedableRng};
use superfock::group::{
    cartan_decompose, diagonal, exp_sl2, mat_mul, rotation, GroupElementSL2,
};

fn show(m: &[[f64; 2]; 2]) -> String {
    format!(
        "[[{:+.4}, {:+.4}], [{:+.4}, {:+.4}]]",
        m[0][0], m[0][1], m[1][0], m[1][1]
    )
}

fn main() {
    println!("exponentials of k(F-E) + aH + l(F+E) through the three branches:");
    let samples = [
        (0.0, 0.8, 0.0, "pure diagonal (hyperbolic)"),
        (1.2, 0.0, 0.0, "pure rotation (elliptic)"),
        (1.0, 0.6, 0.8, "parabolic: a^2 + l^2 = k^2"),
        (0.4, 0.5, 0.3, "generic hyperbolic"),
    ];
    for (k, a, l, label) in samples {
        println!("  (k, a, l) = ({k}, {a}, {l})  {label}");
        println!("    exp = {}", show(&exp_sl2(k, a, l)));
    }
    println!();

    println!("rotation–diagonal–rotation factorization:");
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    for i in 0..4 {
        let g = GroupElementSL2 {
            entries: mat_mul(
                &mat_mul(
                    &rotation(rng.gen_range(-3.0..3.0)),
                    &diagonal(rng.gen_range(-1.5..1.5)),
                ),
                &rotation(rng.gen_range(-3.0..3.0)),
            ),
            factor_index: 1,
        };
        let (t1, a, t2) = cartan_decompose(&g).unwrap();
        let back = mat_mul(&mat_mul(&rotation(t1), &diagonal(a)), &rotation(t2));
        let mut err = 0.0f64;
        for r in 0..2 {
            for c in 0..2 {
                err = err.max((back[r][c] - g.entries[r][c]).abs());
            }
        }
        println!("  sample {i}: g = {}", show(&g.entries));
        println!(
            "    theta1 = {t1:+.6}, a = {a:.6}, theta2 = {t2:+.6}, reconstruction error {err:.2e}"
        );
    }
    println!();

    println!("identity edge case: (theta1, a, theta2) = {:?}", {
        let id = GroupElementSL2::identity(1);
        cartan_decompose(&id).unwrap()
    });
}
