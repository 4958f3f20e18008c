use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{orbit_of, PermutationGroup};
use crate::perm::Perm;
use crate::quandle::{closure_under, FiniteQuandle, QuandleFile};

/// An action of a quandle on `{0..m-1}`: one permutation per element with
/// `act[q] ∘ act[r] = act[q ▷ r] ∘ act[q]`.
#[derive(Clone, Debug)]
pub struct QuandleAction {
    quandle: FiniteQuandle,
    set_size: usize,
    act: Vec<Perm>,
    act_inv: Vec<Perm>,
}

impl QuandleAction {
    pub fn new(quandle: FiniteQuandle, set_size: usize, act: Vec<Vec<usize>>) -> Result<QuandleAction> {
        if act.len() != quandle.size() {
            return Err(Error::InvalidAction(format!(
                "{} permutations for a quandle of size {}",
                act.len(),
                quandle.size()
            )));
        }
        let mut perms = Vec::with_capacity(act.len());
        for (q, row) in act.iter().enumerate() {
            if row.len() != set_size {
                return Err(Error::InvalidAction(format!(
                    "row {q} has {} entries, expected {set_size}",
                    row.len()
                )));
            }
            let p = Perm::from_usize(row)
                .map_err(|e| Error::InvalidAction(format!("element {q} does not act bijectively: {e}")))?;
            perms.push(p);
        }
        let n = quandle.size();
        for q in 0..n {
            for r in 0..n {
                let lhs = perms[q].compose(&perms[r]);
                let rhs = perms[quandle.op(q, r)].compose(&perms[q]);
                if lhs != rhs {
                    return Err(Error::InvalidAction(format!(
                        "distributivity fails for q = {q}, r = {r}"
                    )));
                }
            }
        }
        let act_inv = perms.iter().map(Perm::inverse).collect();
        Ok(QuandleAction {
            quandle,
            set_size,
            act: perms,
            act_inv,
        })
    }

    /// The action of a quandle on itself by its symmetries.
    pub fn natural(quandle: &FiniteQuandle) -> QuandleAction {
        let act = quandle.symmetries();
        let act_inv = act.iter().map(Perm::inverse).collect();
        QuandleAction {
            quandle: quandle.clone(),
            set_size: quandle.size(),
            act,
            act_inv,
        }
    }

    pub fn quandle(&self) -> &FiniteQuandle {
        &self.quandle
    }

    pub fn set_size(&self) -> usize {
        self.set_size
    }

    pub fn act(&self, q: usize) -> &Perm {
        &self.act[q]
    }

    /// Closure of `seed` under every `act[q]` and `act[q]⁻¹`: the union of
    /// the `Op(Q, X)`-orbits meeting it.
    pub fn saturate_mixed(&self, seed: &[usize]) -> Vec<usize> {
        closure_under(self.set_size, seed, |x, push| {
            for q in 0..self.act.len() {
                push(self.act[q].apply(x));
                push(self.act_inv[q].apply(x));
            }
        })
    }

    /// `Op(Q, X) = ⟨act[q]⟩`.
    pub fn op_group(&self, cap: usize) -> Result<PermutationGroup> {
        PermutationGroup::close(self.set_size, self.act.clone(), cap)
    }

    pub fn tr_generators(&self) -> Vec<Perm> {
        let base_inv = &self.act_inv[0];
        self.act
            .iter()
            .skip(1)
            .map(|a| a.compose(base_inv))
            .filter(|p| !p.is_identity())
            .collect()
    }

    /// `Tr(Q, X)`, generated by `act[q] ∘ act[0]⁻¹`.
    pub fn tr_action_group(&self, cap: usize) -> Result<PermutationGroup> {
        PermutationGroup::close(self.set_size, self.tr_generators(), cap)
    }

    /// `Tr(Q, X)`-orbit of a point, without enumerating the group.
    pub fn tr_orbit(&self, x: usize) -> Vec<usize> {
        orbit_of(self.set_size, &self.tr_generators(), x)
    }

    /// Compares `Op(Q, X)`- and `Tr(Q, X)`-orbits point by point.
    pub fn compare_orbits(&self) -> Vec<ActionOrbitComparison> {
        (0..self.set_size)
            .map(|x| {
                let op = self.saturate_mixed(&[x]);
                let tr = self.tr_orbit(x);
                ActionOrbitComparison {
                    point: x,
                    equal: op == tr,
                    op_orbit: op,
                    tr_orbit: tr,
                }
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ActionOrbitComparison {
    pub point: usize,
    pub op_orbit: Vec<usize>,
    pub tr_orbit: Vec<usize>,
    pub equal: bool,
}

/// JSON form of an action: the quandle plus one image row per element.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ActionFile {
    pub quandle: serde_json::Value,
    pub set_size: usize,
    pub act: Vec<Vec<usize>>,
}

impl ActionFile {
    pub fn parse(text: &str) -> Result<QuandleAction> {
        let raw: ActionFile = serde_json::from_str(text)?;
        let (q, _) = QuandleFile::parse_value(raw.quandle)?;
        QuandleAction::new(q, raw.set_size, raw.act)
    }
}
