//! Acceptance suite: the battery of end-to-end guarantees this crate makes,
//! one test per guarantee, each printing a single `[PASS]`/`[FAIL]` line
//! (visible with `cargo test --test acceptance -- --nocapture`). Tolerances
//! and time budgets are pinned here, not configurable.

use std::time::{Duration, Instant};

use num::{BigInt, BigRational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use superfock::fock::{
    bessel_fischer, det_exact, expected_bf, expected_s_diag, fundamental_symmetry, gram_matrix,
    homomorphism_defect, inner_s, nf_basis, skew_supersymmetry_defect, sur_witness_defect,
    FockVector, GramForm,
};
use superfock::group::numeric::even_weight;
use superfock::group::{
    act_a2_expm, act_closed_form, exp_consistency_defect, laguerre_eigen_residual,
    NumericFockVector, OneParamElement, OneParamFamily,
};
use superfock::scalar::GaussianRational;
use superfock::{AlphaParam, BasisElement, StructureConstants};

/// Regular deformation parameters exercised throughout: three negative
/// (positive-form) points and two positive (form-breaking) points.
const SWEEP: [(i64, i64); 5] = [(-1, 2), (-2, 1), (-7, 3), (1, 2), (5, 2)];
const NEGATIVE: [(i64, i64); 3] = [(-1, 2), (-2, 1), (-7, 3)];
const POSITIVE: [(i64, i64); 2] = [(1, 2), (5, 2)];

const NUMERIC_TOL: f64 = 1e-10;
const DICHOTOMY_NEG_TOL: f64 = 1e-8;
const DICHOTOMY_POS_MIN: f64 = 1e-3;

fn alpha(p: i64, q: i64) -> AlphaParam {
    AlphaParam::new(BigRational::new(BigInt::from(p), BigInt::from(q))).unwrap()
}

fn conclude(name: &str, ok: bool, detail: String) {
    println!("[{}] {name}: {detail}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "{name}: {detail}");
}

const CLOSED_FAMILIES: [OneParamFamily; 5] = [
    OneParamFamily::K1,
    OneParamFamily::K2,
    OneParamFamily::K3,
    OneParamFamily::A1,
    OneParamFamily::A3,
];

#[test]
fn acceptance_01_jacobi_exact() {
    let start = Instant::now();
    let mut exact = true;
    for (p, q) in SWEEP {
        exact &= StructureConstants::new(&alpha(p, q))
            .check_super_jacobi()
            .exact;
    }
    let elapsed = start.elapsed();
    let ok = exact && elapsed < Duration::from_secs(10);
    conclude(
        "jacobi-identity",
        ok,
        format!("all 17^3 basis triples vanish exactly at 5 alphas in {elapsed:.2?} (budget 10s)"),
    );
}

#[test]
fn acceptance_02_representation_homomorphism_exact() {
    let start = Instant::now();
    let mut max = 0.0f64;
    for (p, q) in SWEEP {
        let a = alpha(p, q);
        let sc = StructureConstants::new(&a);
        for x in BasisElement::all() {
            for y in BasisElement::all() {
                max = max.max(homomorphism_defect(&sc, x, y, 8));
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = max == 0.0 && elapsed < Duration::from_secs(60);
    conclude(
        "representation-homomorphism",
        ok,
        format!(
            "all 17^2 generator pairs agree exactly to degree 8 at 5 alphas in {elapsed:.2?} \
             (budget 60s), max defect {max:e}"
        ),
    );
}

#[test]
fn acceptance_03_gram_table_exact_to_degree_20() {
    let start = Instant::now();
    let mut exact = true;
    for (p, q) in SWEEP {
        let a = alpha(p, q);
        let basis = nf_basis(20);
        let g = gram_matrix(&a, 20, GramForm::BesselFischer);
        for (r, br) in basis.iter().enumerate() {
            for (c, bc) in basis.iter().enumerate() {
                exact &= g[r][c] == expected_bf(*br, *bc, &a);
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = exact && elapsed < Duration::from_secs(30);
    conclude(
        "gram-table",
        ok,
        format!(
            "pairing matches the closed-form table (zeros included) to degree 20 at 5 alphas \
             in {elapsed:.2?} (budget 30s)"
        ),
    );
}

#[test]
fn acceptance_04_fundamental_symmetry_exact_to_degree_20() {
    let start = Instant::now();
    let mut ok = true;
    for (p, q) in SWEEP {
        let a = alpha(p, q);
        let basis = nf_basis(20);
        for bp in &basis {
            let v = FockVector::basis(*bp);
            let s1 = fundamental_symmetry(&v, &a);
            let s4 = fundamental_symmetry(
                &fundamental_symmetry(&fundamental_symmetry(&s1, &a), &a),
                &a,
            );
            ok &= s4.sub(&v).is_zero();
            for bq in &basis {
                let w = FockVector::basis(*bq);
                let sw = fundamental_symmetry(&w, &a);
                ok &= bessel_fischer(&s1, &sw, &a) == bessel_fischer(&v, &w, &a);
            }
            let want = GaussianRational::from_rational(expected_s_diag(*bp, &a));
            ok &= inner_s(&v, &v, &a) == want;
        }
    }
    let elapsed = start.elapsed();
    conclude(
        "fundamental-symmetry",
        ok,
        format!(
            "order four, pairing-isometric, and positive-diagonal (factorial-weight formula) \
             to degree 20 at 5 alphas in {elapsed:.2?}"
        ),
    );
}

#[test]
fn acceptance_05_skew_supersymmetry_exact() {
    let start = Instant::now();
    let mut max = 0.0f64;
    for (p, q) in SWEEP {
        let a = alpha(p, q);
        for x in BasisElement::all() {
            max = max.max(skew_supersymmetry_defect(&a, x, 8));
        }
    }
    let elapsed = start.elapsed();
    let ok = max == 0.0;
    conclude(
        "skew-supersymmetry",
        ok,
        format!(
            "all 17 generators skew-supersymmetric exactly to degree 8 at 5 alphas in \
             {elapsed:.2?}, max defect {max:e}"
        ),
    );
}

#[test]
fn acceptance_06_exponential_consistency() {
    let start = Instant::now();
    let mut max = 0.0f64;
    for (p, q) in SWEEP {
        let a = alpha(p, q);
        for fam in CLOSED_FAMILIES {
            for t in [0.3, 0.7, 1.2] {
                max = max.max(exp_consistency_defect(fam, t, 12, &a).unwrap());
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = max <= NUMERIC_TOL && elapsed < Duration::from_secs(30);
    conclude(
        "exponential-consistency",
        ok,
        format!(
            "matrix exponentials match closed forms at N=12, three times per family, 5 alphas, \
             max defect {max:.3e} <= {NUMERIC_TOL:e}, in {elapsed:.2?} (budget 30s)"
        ),
    );
}

#[test]
fn acceptance_07_superunitarity() {
    let start = Instant::now();
    let mut max_pairing = 0.0f64;
    let mut max_k3 = 0.0f64;
    let mut max_k2 = 0.0f64;
    for (p, q) in SWEEP {
        let a = alpha(p, q);
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0007);
        for fam in CLOSED_FAMILIES {
            for _ in 0..100 {
                let f = NumericFockVector::random(10, &mut rng).normalized_s(&a);
                let g = NumericFockVector::random(10, &mut rng).normalized_s(&a);
                let t = rng.gen_range(-2.0..2.0);
                let e = OneParamElement::new(fam, t);
                let uf = act_closed_form(&e, &f, &a).unwrap();
                let ug = act_closed_form(&e, &g, &a).unwrap();
                max_pairing =
                    max_pairing.max((uf.bf_inner(&ug, &a) - f.bf_inner(&g, &a)).norm());
            }
        }
        for _ in 0..5 {
            let f = NumericFockVector::random(10, &mut rng).normalized_s(&a);
            let mut even_mass = 0.0f64;
            for (j, c) in f.f1.iter().enumerate() {
                even_mass += even_weight(&a, j as u32) * c.norm_sqr();
            }
            for (j, c) in f.f2.iter().enumerate() {
                even_mass += even_weight(&a, j as u32) * c.norm_sqr();
            }
            for delta in [1e-3, 0.1, 0.5, 1.0, 2.5] {
                let moved = act_closed_form(
                    &OneParamElement::new(OneParamFamily::K3, delta),
                    &f,
                    &a,
                )
                .unwrap();
                let lhs = moved.sub(&f).norm_sq_s(&a);
                max_k3 = max_k3.max((lhs - (2.0 - 2.0 * delta.cos()) * even_mass).abs());
            }
            for k in 0..=80 {
                let delta = -10.0 + 0.25 * f64::from(k);
                let moved = act_closed_form(
                    &OneParamElement::new(OneParamFamily::K2, delta),
                    &f,
                    &a,
                )
                .unwrap();
                max_k2 = max_k2.max((moved.sub(&f).norm_sq_s(&a) - 4.0).max(0.0));
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = max_pairing <= NUMERIC_TOL && max_k3 <= NUMERIC_TOL && max_k2 <= NUMERIC_TOL;
    conclude(
        "superunitarity",
        ok,
        format!(
            "pairing preserved over 100 seeded pairs per family (max {max_pairing:.3e}), \
             rotation-continuity identity (max {max_k3:.3e}) and displacement bound \
             (max {max_k2:.3e}) all <= {NUMERIC_TOL:e}, 5 alphas, in {elapsed:.2?}"
        ),
    );
}

#[test]
fn acceptance_08_hyperbolic_flow_dichotomy() {
    let start = Instant::now();
    let (t, n, padding, probe_degree) = (0.3, 24, 16, 4);
    let mut neg_max = 0.0f64;
    let mut pos_min = f64::INFINITY;
    for (p, q) in NEGATIVE {
        let a = alpha(p, q);
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0008);
        for _ in 0..5 {
            let f = NumericFockVector::random_s_balanced(probe_degree, &a, &mut rng)
                .normalized_s(&a);
            let r = act_a2_expm(t, &f, n, &a, padding).unwrap();
            neg_max = neg_max.max((r.vector.norm_sq_s(&a) - 1.0).abs());
        }
    }
    for (p, q) in POSITIVE {
        let a = alpha(p, q);
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0008);
        let mut worst = 0.0f64;
        for _ in 0..5 {
            let f = NumericFockVector::random_s_balanced(probe_degree, &a, &mut rng)
                .normalized_s(&a);
            let r = act_a2_expm(t, &f, n, &a, padding).unwrap();
            worst = worst.max((r.vector.norm_sq_s(&a) - 1.0).abs());
        }
        pos_min = pos_min.min(worst);
    }
    let elapsed = start.elapsed();
    let ok = neg_max <= DICHOTOMY_NEG_TOL && pos_min >= DICHOTOMY_POS_MIN;
    conclude(
        "hyperbolic-flow-dichotomy",
        ok,
        format!(
            "positive form preserved for alpha<0 (max {neg_max:.3e} <= {DICHOTOMY_NEG_TOL:e}) \
             and broken for alpha>0 (min {pos_min:.3e} >= {DICHOTOMY_POS_MIN:e}) at t={t}, \
             N={n}, padding {padding}, in {elapsed:.2?}"
        ),
    );
}

#[test]
fn acceptance_09_laguerre_residual_confined_to_truncation_band() {
    let start = Instant::now();
    let n = 40u32;
    let mut ok = true;
    let mut nonzero = true;
    for (p, q) in POSITIVE {
        let a = alpha(p, q);
        for k in 0..=5 {
            let residual = laguerre_eigen_residual(k, &a, n);
            nonzero &= !residual.is_zero();
            for (idx, c) in residual.terms() {
                // Interior coefficients must vanish exactly; only the two
                // degrees at the truncation edge may survive.
                if idx.degree() < n {
                    ok &= c.is_zero();
                }
                ok &= idx.degree() <= n + 1;
            }
        }
    }
    let elapsed = start.elapsed();
    conclude(
        "laguerre-eigenvectors",
        ok && nonzero,
        format!(
            "hyperbolic-generator residual of the first six exponential-Laguerre vectors is \
             exactly zero below degree {n} and confined to the truncation edge, alpha in \
             {{1/2, 5/2}}, in {elapsed:.2?}"
        ),
    );
}

#[test]
fn acceptance_10_scaled_symmetry_witness() {
    let start = Instant::now();
    let a = alpha(-2, 1);
    let one = BigRational::from_integer(BigInt::from(1));
    let unit = sur_witness_defect(&a, &[one.clone(), one.clone(), one.clone(), one]);
    let two_i = GaussianRational::imaginary(BigRational::from_integer(BigInt::from(2)));
    let mut ok = unit == two_i;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0010);
    for _ in 0..100 {
        let mut eps = Vec::with_capacity(4);
        for _ in 0..4 {
            eps.push(BigRational::new(
                BigInt::from(rng.gen_range(1i64..=9)),
                BigInt::from(rng.gen_range(1i64..=9)),
            ));
        }
        let eps: [BigRational; 4] = [
            eps[0].clone(),
            eps[1].clone(),
            eps[2].clone(),
            eps[3].clone(),
        ];
        let defect = sur_witness_defect(&a, &eps);
        let expected = GaussianRational::imaginary(&eps[0] + &eps[1]);
        ok &= defect == expected && !defect.is_zero();
    }
    let elapsed = start.elapsed();
    conclude(
        "scaled-symmetry-witness",
        ok,
        format!(
            "witness defect equals i(eps1+eps2), nonzero for 100 random positive scalings and \
             exactly 2i at the unit scaling, in {elapsed:.2?}"
        ),
    );
}

#[test]
fn acceptance_11_natural_alpha_degeneracy() {
    let start = Instant::now();
    let mut ok = true;
    for nat in 0i64..=2 {
        let a = AlphaParam::new_unchecked(BigRational::from_integer(BigInt::from(nat)));
        let g = gram_matrix(&a, 3, GramForm::BesselFischer);
        ok &= det_exact(&g).is_zero();
    }
    let elapsed = start.elapsed();
    conclude(
        "natural-alpha-degeneracy",
        ok,
        format!(
            "Gram determinant on the degree-<=3 block is exactly zero at alpha in {{0, 1, 2}}, \
             in {elapsed:.2?}"
        ),
    );
}
