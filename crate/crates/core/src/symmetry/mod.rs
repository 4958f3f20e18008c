//! Inner and transvection groups, orbits, automorphisms and coset
//! realizations of finite quandles.

mod action;
mod open_sub;
mod orbits;
mod realization;
mod search;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::group::PermutationGroup;
use crate::perm::Perm;
use crate::quandle::FiniteQuandle;

pub use action::{ActionFile, ActionOrbitComparison, QuandleAction};
pub use open_sub::{open_subquandle_check, OpenSubquandleReport, PointComparison};
pub use orbits::{
    is_connected, orbits, saturate_backward, saturate_forward, Certificate, Connectivity,
    OrbitDecomposition, Saturation,
};
pub use realization::{
    coset_realization, inter_orbit_action, sbar_hom, InterOrbitReport, Realization,
    RealizationChecks, Realizer, SbarReport, TR_ELEMENT_CAP,
};
pub use search::{aut, hom_check, iso_search, AutGroup, HomReport, MAX_SEARCH_SIZE};

/// A word in the symmetries `s_q^{±1}`; the first letter is applied first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedWord {
    pub letters: Vec<(usize, i8)>,
}

impl SignedWord {
    pub fn new(letters: Vec<(usize, i8)>) -> SignedWord {
        SignedWord { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&(_, s)| s as i64).sum()
    }

    /// Words with exponent sum zero evaluate into `Tr(Q)`.
    pub fn is_transvection(&self) -> bool {
        self.exponent_sum() == 0
    }

    pub fn push(&mut self, q: usize, sign: i8) {
        self.letters.push((q, sign));
    }

    /// Applies the word to a point.
    pub fn apply(&self, quandle: &FiniteQuandle, mut x: usize) -> usize {
        for &(q, s) in &self.letters {
            x = quandle.op_signed(q, x, s);
        }
        x
    }

    /// The permutation `s_{a_k}^{σ_k} ∘ ⋯ ∘ s_{a_1}^{σ_1}`.
    pub fn to_perm(&self, quandle: &FiniteQuandle) -> Perm {
        let n = quandle.size();
        let images: Vec<u32> = (0..n).map(|x| self.apply(quandle, x) as u32).collect();
        Perm::from_images(images).expect("products of symmetries are bijective")
    }
}

/// `Inn(Q) = ⟨s_q⟩`.
pub fn inn(quandle: &FiniteQuandle, cap: usize) -> Result<PermutationGroup> {
    PermutationGroup::close(quandle.size(), quandle.symmetries(), cap)
}

/// Generators `s_q ∘ s_0⁻¹` (q ≠ 0) of the transvection group.
pub fn tr_generators(quandle: &FiniteQuandle) -> Vec<Perm> {
    let s0_inv = quandle.symmetry_perm(0).inverse();
    (1..quandle.size())
        .map(|q| quandle.symmetry_perm(q).compose(&s0_inv))
        .filter(|p| !p.is_identity())
        .collect()
}

/// `Tr(Q)`: products with equally many `s` and `s⁻¹` factors, generated by
/// `s_q ∘ s_0⁻¹` since `s_a s_b⁻¹ = (s_a s_0⁻¹)(s_b s_0⁻¹)⁻¹`.
pub fn tr(quandle: &FiniteQuandle, cap: usize) -> Result<PermutationGroup> {
    PermutationGroup::close(quandle.size(), tr_generators(quandle), cap)
}

/// True iff every `s_q t s_q⁻¹` (t a generator of `Tr(Q)`) lies in `Tr(Q)`.
pub fn tr_is_normal(quandle: &FiniteQuandle, tr_group: &PermutationGroup) -> bool {
    let syms = quandle.symmetries();
    syms.iter()
        .all(|s| tr_group.generators().iter().all(|t| tr_group.contains(&s.conjugate(t))))
}
