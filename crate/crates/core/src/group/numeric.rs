//! Double-precision truncated Fock vectors, the closed-form one-parameter
//! actions on their coefficient blocks, and the numeric forms of the two
//! pairings (via the exact weight formulas).
//!
//! Coefficient layout: four families indexed by the z₁-power j —
//! f1[j] ↔ z₁^j (degree j), f2[j] ↔ z₁^j z₂, f3[j] ↔ z₁^j z₃,
//! f4[j] ↔ z₁^j z₄ (degree j+1). At cutoff N that is lengths
//! (N+1, N, N, N), total 4N+1 coefficients.

use super::{GroupError, OneParamElement, OneParamFamily};
use crate::fock::{expected_s_diag, FockVector, NfFamily, NfIndex};
use crate::scalar::AlphaParam;
use num::complex::Complex64;
use num::ToPrimitive;
use serde::{Deserialize, Serialize};

/// Even-family S-weight j!|(−α)ⱼ| as a double.
pub fn even_weight(alpha: &AlphaParam, j: u32) -> f64 {
    expected_s_diag(NfIndex::new(NfFamily::F1, j), alpha)
        .to_f64()
        .expect("weight fits in f64")
}

/// Odd-family S-weight 2·j!|(−α)ⱼ₊₁| as a double.
pub fn odd_weight(alpha: &AlphaParam, j: u32) -> f64 {
    expected_s_diag(NfIndex::new(NfFamily::F3, j), alpha)
        .to_f64()
        .expect("weight fits in f64")
}

/// Signed even-family Bessel–Fischer weight j!(−α)ⱼ.
fn even_weight_signed(alpha: &AlphaParam, j: u32) -> f64 {
    (crate::scalar::factorial(j) * alpha.neg_alpha_pochhammer(j))
        .to_f64()
        .expect("weight fits in f64")
}

/// Signed odd-family Bessel–Fischer weight 2·j!(−α)ⱼ₊₁.
fn odd_weight_signed(alpha: &AlphaParam, j: u32) -> f64 {
    (crate::scalar::factorial(j)
        * alpha.neg_alpha_pochhammer(j + 1)
        * num::BigRational::from_integer(2.into()))
    .to_f64()
    .expect("weight fits in f64")
}

/// A truncated Fock-space vector with complex double coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericFockVector {
    cutoff: u32,
    pub f1: Vec<Complex64>,
    pub f2: Vec<Complex64>,
    pub f3: Vec<Complex64>,
    pub f4: Vec<Complex64>,
}

impl NumericFockVector {
    pub fn zero(cutoff: u32) -> Self {
        let n = cutoff as usize;
        NumericFockVector {
            cutoff,
            f1: vec![Complex64::new(0.0, 0.0); n + 1],
            f2: vec![Complex64::new(0.0, 0.0); n],
            f3: vec![Complex64::new(0.0, 0.0); n],
            f4: vec![Complex64::new(0.0, 0.0); n],
        }
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    /// Total number of coefficients, 4·cutoff + 1.
    pub fn len(&self) -> usize {
        self.f1.len() + self.f2.len() + self.f3.len() + self.f4.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn family(&self, f: NfFamily) -> &Vec<Complex64> {
        match f {
            NfFamily::F1 => &self.f1,
            NfFamily::F2 => &self.f2,
            NfFamily::F3 => &self.f3,
            NfFamily::F4 => &self.f4,
        }
    }

    fn family_mut(&mut self, f: NfFamily) -> &mut Vec<Complex64> {
        match f {
            NfFamily::F1 => &mut self.f1,
            NfFamily::F2 => &mut self.f2,
            NfFamily::F3 => &mut self.f3,
            NfFamily::F4 => &mut self.f4,
        }
    }

    /// Coefficient at a normal-form index (zero beyond the cutoff).
    pub fn get(&self, idx: NfIndex) -> Complex64 {
        self.family(idx.family)
            .get(idx.j as usize)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    /// Set a coefficient; the index must lie within the cutoff.
    pub fn set(&mut self, idx: NfIndex, value: Complex64) {
        let slot = self
            .family_mut(idx.family)
            .get_mut(idx.j as usize)
            .unwrap_or_else(|| panic!("index {idx} out of range for this cutoff"));
        *slot = value;
    }

    /// Basis vector at a normal-form index.
    pub fn basis(idx: NfIndex, cutoff: u32) -> Self {
        let mut v = NumericFockVector::zero(cutoff.max(idx.degree()));
        v.set(idx, Complex64::new(1.0, 0.0));
        v
    }

    /// Convert an exact vector; the cutoff is its degree (or `min_cutoff` if
    /// larger).
    pub fn from_fock(v: &FockVector, min_cutoff: u32) -> Self {
        let cutoff = v.degree().unwrap_or(0).max(min_cutoff);
        let mut out = NumericFockVector::zero(cutoff);
        for (idx, c) in v.terms() {
            let (re, im) = c.to_f64_pair();
            out.set(idx, Complex64::new(re, im));
        }
        out
    }

    /// Re-truncate: pad with zeros or drop coefficients beyond `cutoff`.
    pub fn truncated(&self, cutoff: u32) -> Self {
        let mut out = NumericFockVector::zero(cutoff);
        for (dst, src) in out.f1.iter_mut().zip(&self.f1) {
            *dst = *src;
        }
        for (dst, src) in out.f2.iter_mut().zip(&self.f2) {
            *dst = *src;
        }
        for (dst, src) in out.f3.iter_mut().zip(&self.f3) {
            *dst = *src;
        }
        for (dst, src) in out.f4.iter_mut().zip(&self.f4) {
            *dst = *src;
        }
        out
    }

    /// S-mass of the coefficients with degree strictly above `deg`.
    pub fn s_mass_above(&self, deg: u32, alpha: &AlphaParam) -> f64 {
        let mut sum = 0.0;
        for (j, c) in self.f1.iter().enumerate() {
            if j as u32 > deg {
                sum += even_weight(alpha, j as u32) * c.norm_sqr();
            }
        }
        for (j, c) in self.f2.iter().enumerate() {
            if j as u32 + 1 > deg {
                sum += even_weight(alpha, j as u32) * c.norm_sqr();
            }
        }
        for (j, c) in self.f3.iter().enumerate().chain(self.f4.iter().enumerate()) {
            if j as u32 + 1 > deg {
                sum += odd_weight(alpha, j as u32) * c.norm_sqr();
            }
        }
        sum
    }

    pub fn add(&self, o: &NumericFockVector) -> NumericFockVector {
        let mut out = self.truncated(self.cutoff.max(o.cutoff));
        for f in NfFamily::ALL {
            let dst = out.family_mut(f);
            for (j, c) in o.family(f).iter().enumerate() {
                dst[j] += c;
            }
        }
        out
    }

    pub fn sub(&self, o: &NumericFockVector) -> NumericFockVector {
        self.add(&o.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn scale(&self, s: Complex64) -> NumericFockVector {
        let mut out = self.clone();
        for f in NfFamily::ALL {
            for c in out.family_mut(f) {
                *c *= s;
            }
        }
        out
    }

    /// Largest coefficient deviation from `o` (over the union of supports).
    pub fn max_abs_diff(&self, o: &NumericFockVector) -> f64 {
        let mut m = 0.0f64;
        let n = self.cutoff.max(o.cutoff);
        for idx in crate::fock::nf_basis(n + 1) {
            m = m.max((self.get(idx) - o.get(idx)).norm());
        }
        m
    }

    /// The Bessel–Fischer product, evaluated through its closed-form Gram
    /// weights: ⟨p,q⟩ = Σⱼ j!(−α)ⱼ (p1ⱼq̄1ⱼ − p2ⱼq̄2ⱼ)
    ///              + Σⱼ 2·j!(−α)ⱼ₊₁ (p3ⱼq̄4ⱼ − p4ⱼq̄3ⱼ).
    pub fn bf_inner(&self, o: &NumericFockVector, alpha: &AlphaParam) -> Complex64 {
        let mut sum = Complex64::new(0.0, 0.0);
        let n = self.cutoff.min(o.cutoff) as usize;
        for j in 0..=n {
            let w = even_weight_signed(alpha, j as u32);
            sum += w * self.f1[j] * o.f1[j].conj();
            if j < self.f2.len() && j < o.f2.len() {
                sum -= w * self.f2[j] * o.f2[j].conj();
            }
        }
        for j in 0..n.min(self.f3.len()).min(o.f3.len()) {
            let w = odd_weight_signed(alpha, j as u32);
            sum += w * (self.f3[j] * o.f4[j].conj() - self.f4[j] * o.f3[j].conj());
        }
        sum
    }

    /// The positive form (p,q)_S through its diagonal weights.
    pub fn s_inner(&self, o: &NumericFockVector, alpha: &AlphaParam) -> Complex64 {
        let mut sum = Complex64::new(0.0, 0.0);
        for j in 0..self.f1.len().min(o.f1.len()) {
            sum += even_weight(alpha, j as u32) * self.f1[j] * o.f1[j].conj();
        }
        for j in 0..self.f2.len().min(o.f2.len()) {
            sum += even_weight(alpha, j as u32) * self.f2[j] * o.f2[j].conj();
        }
        for j in 0..self.f3.len().min(o.f3.len()) {
            sum += odd_weight(alpha, j as u32) * self.f3[j] * o.f3[j].conj();
        }
        for j in 0..self.f4.len().min(o.f4.len()) {
            sum += odd_weight(alpha, j as u32) * self.f4[j] * o.f4[j].conj();
        }
        sum
    }

    /// ‖p‖²_S.
    pub fn norm_sq_s(&self, alpha: &AlphaParam) -> f64 {
        self.s_inner(self, alpha).re
    }

    /// Seeded random vector with coefficients uniform in the unit square.
    pub fn random<R: rand::Rng>(cutoff: u32, rng: &mut R) -> Self {
        let mut v = NumericFockVector::zero(cutoff);
        for f in NfFamily::ALL {
            for c in v.family_mut(f) {
                *c = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            }
        }
        v
    }

    /// Seeded random vector with flat S-mass per coefficient: each slot gets
    /// a uniform complex number divided by the square root of its S-weight.
    /// Plain coefficient-uniform vectors concentrate essentially all S-mass
    /// at the top degree (the weights grow factorially), which makes them
    /// blind probes for anything happening at low degree; this distribution
    /// exercises every degree.
    pub fn random_s_balanced<R: rand::Rng>(cutoff: u32, alpha: &AlphaParam, rng: &mut R) -> Self {
        let mut v = NumericFockVector::zero(cutoff);
        for idx in crate::fock::nf_basis(cutoff) {
            let w = match idx.family {
                NfFamily::F1 | NfFamily::F2 => even_weight(alpha, idx.j),
                NfFamily::F3 | NfFamily::F4 => odd_weight(alpha, idx.j),
            }
            .sqrt();
            v.set(
                idx,
                Complex64::new(rng.gen_range(-1.0..1.0) / w, rng.gen_range(-1.0..1.0) / w),
            );
        }
        v
    }

    /// Scale to unit S-norm (useful before applying absolute tolerances: the
    /// raw weights grow factorially with the degree).
    pub fn normalized_s(&self, alpha: &AlphaParam) -> Self {
        let n = self.norm_sq_s(alpha);
        assert!(n > 0.0, "cannot normalize a null vector");
        self.scale(Complex64::new(1.0 / n.sqrt(), 0.0))
    }
}

/// Serialized form: four lists of [re, im] pairs.
#[derive(Serialize, Deserialize)]
pub struct VectorFile {
    pub f1: Vec<[f64; 2]>,
    pub f2: Vec<[f64; 2]>,
    pub f3: Vec<[f64; 2]>,
    pub f4: Vec<[f64; 2]>,
}

impl From<&NumericFockVector> for VectorFile {
    fn from(v: &NumericFockVector) -> Self {
        let enc = |xs: &Vec<Complex64>| xs.iter().map(|c| [c.re, c.im]).collect();
        VectorFile {
            f1: enc(&v.f1),
            f2: enc(&v.f2),
            f3: enc(&v.f3),
            f4: enc(&v.f4),
        }
    }
}

impl From<&VectorFile> for NumericFockVector {
    fn from(file: &VectorFile) -> Self {
        // The cutoff is implied by the longest family; short blocks pad out.
        let cutoff = (file.f1.len().max(1) - 1)
            .max(file.f2.len())
            .max(file.f3.len())
            .max(file.f4.len()) as u32;
        let mut v = NumericFockVector::zero(cutoff);
        let dec = |dst: &mut Vec<Complex64>, src: &Vec<[f64; 2]>| {
            for (slot, pair) in dst.iter_mut().zip(src) {
                *slot = Complex64::new(pair[0], pair[1]);
            }
        };
        dec(&mut v.f1, &file.f1);
        dec(&mut v.f2, &file.f2);
        dec(&mut v.f3, &file.f3);
        dec(&mut v.f4, &file.f4);
        v
    }
}

/// Apply one closed-form family to the coefficient blocks. A₂ has no closed
/// form and is rejected; everything else is exactly degree-preserving except
/// A₃, which grows the cutoff by one (its blocks couple f1[j] with f2[j],
/// one degree higher).
pub fn act_closed_form(
    e: &OneParamElement,
    f: &NumericFockVector,
    alpha: &AlphaParam,
) -> Result<NumericFockVector, GroupError> {
    let a = alpha.to_f64();
    let t = e.t;
    let phase = |x: f64| Complex64::new(0.0, x).exp();
    match e.family {
        OneParamFamily::K1 => {
            // Per degree: (f3, f4) ↦ [[cos, 2 sin], [−½ sin, cos]](f3, f4).
            let (s, c) = t.sin_cos();
            let mut out = f.clone();
            for j in 0..f.f3.len() {
                let (p3, p4) = (f.f3[j], f.f4[j]);
                out.f3[j] = c * p3 + 2.0 * s * p4;
                out.f4[j] = -0.5 * s * p3 + c * p4;
            }
            Ok(out)
        }
        OneParamFamily::K2 => {
            // Diagonal phases e^{it(α−2j)} (even families) and e^{it(α−1−2j)}
            // (odd families).
            let mut out = f.clone();
            for (j, v) in out.f1.iter_mut().enumerate() {
                *v *= phase(t * (a - 2.0 * j as f64));
            }
            for (j, v) in out.f2.iter_mut().enumerate() {
                *v *= phase(t * (a - 2.0 * j as f64));
            }
            for (j, v) in out.f3.iter_mut().enumerate() {
                *v *= phase(t * (a - 1.0 - 2.0 * j as f64));
            }
            for (j, v) in out.f4.iter_mut().enumerate() {
                *v *= phase(t * (a - 1.0 - 2.0 * j as f64));
            }
            Ok(out)
        }
        OneParamFamily::K3 => {
            let mut out = f.clone();
            for v in out.f1.iter_mut() {
                *v *= phase(t);
            }
            for v in out.f2.iter_mut() {
                *v *= phase(-t);
            }
            Ok(out)
        }
        OneParamFamily::A1 => {
            let mut out = f.clone();
            for v in out.f3.iter_mut() {
                *v *= (-t).exp();
            }
            for v in out.f4.iter_mut() {
                *v *= t.exp();
            }
            Ok(out)
        }
        OneParamFamily::A2 => Err(GroupError::A2NotClosedForm),
        OneParamFamily::A3 => {
            // (f1[j], f2[j]) ↦ [[cosh, sinh], [sinh, cosh]](f1[j], f2[j]);
            // the top pair reaches degree cutoff+1.
            let (ch, sh) = (t.cosh(), t.sinh());
            let mut out = f.truncated(f.cutoff + 1);
            for j in 0..=f.cutoff as usize {
                let p1 = f.f1[j];
                let p2 = if j < f.f2.len() {
                    f.f2[j]
                } else {
                    Complex64::new(0.0, 0.0)
                };
                out.f1[j] = ch * p1 + sh * p2;
                out.f2[j] = sh * p1 + ch * p2;
            }
            Ok(out)
        }
    }
}

/// A group word applied right-to-left (the last factor acts first, matching
/// operator composition ρ₀(e₁)ρ₀(e₂)…f). A₂ factors run through the numeric
/// exponential at the vector's current cutoff.
pub struct WordResult {
    pub vector: NumericFockVector,
    /// Largest A₂ padding-band indicator seen (0 when the word has no A₂).
    pub band_indicator: f64,
}

pub fn act_word(
    word: &[OneParamElement],
    f: &NumericFockVector,
    alpha: &AlphaParam,
    a2_padding: u32,
) -> Result<WordResult, GroupError> {
    let mut v = f.clone();
    let mut band = 0.0f64;
    for e in word.iter().rev() {
        if e.family == OneParamFamily::A2 {
            let applied = super::a2::act_a2_expm(e.t, &v, v.cutoff(), alpha, a2_padding)?;
            band = band.max(applied.band_indicator);
            v = applied.vector;
        } else {
            v = act_closed_form(e, &v, alpha)?;
        }
    }
    Ok(WordResult {
        vector: v,
        band_indicator: band,
    })
}
