//! Realization of an orbit `Gq` as the coset quandle `(G/G_q, ▷_{φ_q})`
//! with `G = Tr(Q)`, and the inter-orbit maps `ψ_{q,r}`.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{inn, tr};
use crate::constructions::{EXHAUSTIVE_WELL_DEFINED_LIMIT, SAMPLED_WELL_DEFINED_PAIRS};
use crate::error::{Error, Result};
use crate::group::{CosetSpace, FiniteGroup, PermutationGroup};
use crate::par;
use crate::perm::Perm;
use crate::quandle::FiniteQuandle;

/// `Tr(Q)` is enumerated into an explicit group only up to this order.
pub const TR_ELEMENT_CAP: usize = 100_000;

const MAX_REPORTED: usize = 100;

/// Caches `Tr(Q)` both as permutations and as an abstract group whose
/// element `i` is permutation `i`.
pub struct Realizer {
    quandle: FiniteQuandle,
    perms: PermutationGroup,
    group: Arc<FiniteGroup>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealizationChecks {
    /// `φ_q` maps `G` into itself and is multiplicative.
    pub phi_is_automorphism: bool,
    /// `H ⊆ G^{φ_q}`.
    pub stabilizer_fixed_by_phi: bool,
    /// Every element of `H` commutes with `s_q`.
    pub stabilizer_commutes_with_symmetry: bool,
    /// `gH ▷ g'H` does not depend on the representatives.
    pub coset_operation_well_defined: bool,
    pub pi_bijective: bool,
    pub pi_homomorphism: bool,
    pub pi_inverse_homomorphism: bool,
}

impl RealizationChecks {
    pub fn all(&self) -> bool {
        self.phi_is_automorphism
            && self.stabilizer_fixed_by_phi
            && self.stabilizer_commutes_with_symmetry
            && self.coset_operation_well_defined
            && self.pi_bijective
            && self.pi_homomorphism
            && self.pi_inverse_homomorphism
    }
}

/// The data `(G, φ_q, H, π_q)` for one basepoint.
#[derive(Clone, Debug)]
pub struct Realization {
    pub base: usize,
    pub group: Arc<FiniteGroup>,
    /// `φ_q(g) = s_q g s_q⁻¹` as an index map on `G`.
    pub phi: Vec<usize>,
    /// `H = G_q`, the stabilizer of the basepoint.
    pub stabilizer: Vec<usize>,
    pub cosets: CosetSpace,
    /// `(G/H, ▷_{φ_q})`, cosets numbered as in `cosets`.
    pub coset_quandle: FiniteQuandle,
    /// `π_q(gH) = g(q)`.
    pub pi: Vec<usize>,
    /// The orbit `Gq`, sorted.
    pub orbit: Vec<usize>,
    pub checks: RealizationChecks,
}

#[derive(Serialize)]
struct RealizationJson<'a> {
    base: usize,
    group: GroupJson<'a>,
    stabilizer: &'a [usize],
    phi: &'a [usize],
    coset_reps: &'a [usize],
    coset_table: Vec<Vec<usize>>,
    pi: &'a [usize],
    orbit: &'a [usize],
    checks: &'a RealizationChecks,
}

#[derive(Serialize)]
struct GroupJson<'a> {
    order: usize,
    elements: &'a [String],
}

impl Realization {
    pub fn to_json(&self) -> serde_json::Value {
        let j = RealizationJson {
            base: self.base,
            group: GroupJson {
                order: self.group.order(),
                elements: self.group.labels(),
            },
            stabilizer: &self.stabilizer,
            phi: &self.phi,
            coset_reps: &self.cosets.reps,
            coset_table: self.coset_quandle.table(),
            pi: &self.pi,
            orbit: &self.orbit,
            checks: &self.checks,
        };
        serde_json::to_value(j).expect("realization serializes")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InterOrbitReport {
    pub q: usize,
    pub r: usize,
    pub same_orbit: bool,
    /// For `q = r`, whether `ψ_{q,q}` coincides with `φ_q`.
    pub reduces_to_phi: Option<bool>,
    /// Pairs of coset indices `(gG_q, hG_r)` checked for compatibility.
    pub pairs_checked: usize,
    pub compatible: bool,
    pub violations: Vec<(usize, usize)>,
    pub well_defined: bool,
    /// Well-definedness was checked over all of `G × G` rather than sampled.
    pub well_defined_exhaustive: bool,
}

impl InterOrbitReport {
    pub fn ok(&self) -> bool {
        self.compatible && self.well_defined && self.reduces_to_phi != Some(false)
    }
}

impl Realizer {
    pub fn new(quandle: &FiniteQuandle, cap: usize) -> Result<Realizer> {
        let perms = tr(quandle, cap.min(TR_ELEMENT_CAP))?;
        let group = Arc::new(FiniteGroup::from_permutation_group(&perms));
        Ok(Realizer {
            quandle: quandle.clone(),
            perms,
            group,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn permutations(&self) -> &PermutationGroup {
        &self.perms
    }

    fn check_point(&self, x: usize) -> Result<()> {
        if x >= self.quandle.size() {
            return Err(Error::Index {
                index: x,
                size: self.quandle.size(),
            });
        }
        Ok(())
    }

    /// `g ↦ left ∘ g ∘ right`, as an index map on `G`.
    fn sandwich(&self, left: &Perm, right: &Perm) -> Result<Vec<usize>> {
        let images = par::map_slice(self.perms.elements(), |g| {
            self.perms.index_of(&left.compose(g).compose(right))
        });
        images
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidAutomorphism("image leaves Tr(Q)".into()))
    }

    fn pi_map(&self, cosets: &CosetSpace, base: usize) -> Vec<usize> {
        let elems = self.perms.elements();
        cosets.reps.iter().map(|&g| elems[g].apply(base)).collect()
    }

    pub fn realize(&self, base: usize, seed: u64) -> Result<Realization> {
        self.check_point(base)?;
        let g = &*self.group;
        let n = g.order();
        let elems = self.perms.elements();
        let s_q = self.quandle.symmetry_perm(base);
        let phi = self.sandwich(&s_q, &s_q.inverse())?;

        let gens: Vec<usize> = self
            .perms
            .generators()
            .iter()
            .filter_map(|t| self.perms.index_of(t))
            .collect();
        // multiplicative on generators for every left factor forces it everywhere
        let phi_is_automorphism = phi[g.identity()] == g.identity()
            && is_bijection(&phi)
            && par::all_range(n, |a| gens.iter().all(|&t| phi[g.mul(a, t)] == g.mul(phi[a], phi[t])));

        let stabilizer = self.perms.stabilizer(base);
        let stabilizer_fixed_by_phi = stabilizer.iter().all(|&h| phi[h] == h);
        let stabilizer_commutes_with_symmetry = stabilizer
            .iter()
            .all(|&h| elems[h].compose(&s_q) == s_q.compose(&elems[h]));

        let cosets = g.cosets(&stabilizer)?;
        let raw = |x: usize, y: usize| g.mul(x, phi[g.mul(g.inv(x), y)]);
        let m = cosets.len();
        let coset_quandle =
            FiniteQuandle::from_fn(m, |i, j| cosets.coset_of(raw(cosets.reps[i], cosets.reps[j])))?;
        let consistent = |x: usize, y: usize| {
            cosets.coset_of(raw(x, y)) == coset_quandle.op(cosets.coset_of(x), cosets.coset_of(y))
        };
        let coset_operation_well_defined = if n <= EXHAUSTIVE_WELL_DEFINED_LIMIT {
            par::all_range(n, |x| (0..n).all(|y| consistent(x, y)))
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..SAMPLED_WELL_DEFINED_PAIRS).all(|_| consistent(rng.gen_range(0..n), rng.gen_range(0..n)))
        };

        let pi = self.pi_map(&cosets, base);
        let mut orbit = pi.clone();
        orbit.sort_unstable();
        orbit.dedup();
        let pi_bijective = orbit.len() == m;
        let q = &self.quandle;
        let pi_homomorphism =
            par::all_range(m, |i| (0..m).all(|j| pi[coset_quandle.op(i, j)] == q.op(pi[i], pi[j])));
        let pi_inverse_homomorphism = pi_bijective && {
            let mut back = vec![usize::MAX; q.size()];
            for (i, &x) in pi.iter().enumerate() {
                back[x] = i;
            }
            orbit.iter().all(|&x| {
                orbit.iter().all(|&y| {
                    let z = back[q.op(x, y)];
                    z != usize::MAX && z == coset_quandle.op(back[x], back[y])
                })
            })
        };

        Ok(Realization {
            base,
            group: Arc::clone(&self.group),
            phi,
            stabilizer,
            cosets,
            coset_quandle,
            pi,
            orbit,
            checks: RealizationChecks {
                phi_is_automorphism,
                stabilizer_fixed_by_phi,
                stabilizer_commutes_with_symmetry,
                coset_operation_well_defined,
                pi_bijective,
                pi_homomorphism,
                pi_inverse_homomorphism,
            },
        })
    }

    /// Verifies `π_r(g ψ_{q,r}(g⁻¹h) G_r) = π_q(gG_q) ▷ π_r(hG_r)` with
    /// `ψ_{q,r}(g) = s_q g s_r⁻¹`, over all coset pairs, and that the action
    /// does not depend on coset representatives.
    pub fn inter_orbit(&self, q: usize, r: usize, seed: u64) -> Result<InterOrbitReport> {
        self.check_point(q)?;
        self.check_point(r)?;
        let g = &*self.group;
        let n = g.order();
        let elems = self.perms.elements();
        let s_q = self.quandle.symmetry_perm(q);
        let s_r = self.quandle.symmetry_perm(r);
        let psi = self.sandwich(&s_q, &s_r.inverse())?;
        let reduces_to_phi = (q == r).then(|| psi == self.sandwich(&s_q, &s_q.inverse()).unwrap_or_default());

        let cq = g.cosets(&self.perms.stabilizer(q))?;
        let cr = g.cosets(&self.perms.stabilizer(r))?;
        let act = |x: usize, y: usize| cr.coset_of(g.mul(x, psi[g.mul(g.inv(x), y)]));

        let rows = par::map_range(cq.len(), |i| {
            let x = cq.reps[i];
            let lhs_base = elems[x].apply(q);
            (0..cr.len())
                .filter(|&j| {
                    let y = cr.reps[j];
                    let image = elems[cr.reps[act(x, y)]].apply(r);
                    image != self.quandle.op(lhs_base, elems[y].apply(r))
                })
                .map(|j| (i, j))
                .collect::<Vec<_>>()
        });
        let all_violations: Vec<(usize, usize)> = rows.into_iter().flatten().collect();
        let compatible = all_violations.is_empty();

        let consistent = |x: usize, y: usize| act(x, y) == act(cq.reps[cq.coset_of(x)], cr.reps[cr.coset_of(y)]);
        let exhaustive = n <= EXHAUSTIVE_WELL_DEFINED_LIMIT;
        let well_defined = if exhaustive {
            par::all_range(n, |x| (0..n).all(|y| consistent(x, y)))
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..SAMPLED_WELL_DEFINED_PAIRS).all(|_| consistent(rng.gen_range(0..n), rng.gen_range(0..n)))
        };

        let same_orbit = self.perms.orbit(q).binary_search(&r).is_ok();
        Ok(InterOrbitReport {
            q,
            r,
            same_orbit,
            reduces_to_phi,
            pairs_checked: cq.len() * cr.len(),
            compatible,
            violations: all_violations.into_iter().take(MAX_REPORTED).collect(),
            well_defined,
            well_defined_exhaustive: exhaustive,
        })
    }
}

fn is_bijection(map: &[usize]) -> bool {
    let mut seen = vec![false; map.len()];
    map.iter().all(|&x| x < map.len() && !std::mem::replace(&mut seen[x], true))
}

/// Builds `Tr(Q)` and realizes the orbit of `base` as a coset quandle.
pub fn coset_realization(quandle: &FiniteQuandle, base: usize, cap: usize, seed: u64) -> Result<Realization> {
    Realizer::new(quandle, cap)?.realize(base, seed)
}

pub fn inter_orbit_action(
    quandle: &FiniteQuandle,
    q: usize,
    r: usize,
    cap: usize,
    seed: u64,
) -> Result<InterOrbitReport> {
    Realizer::new(quandle, cap)?.inter_orbit(q, r, seed)
}

/// The map `x ↦ s_x s_q⁻¹` from `Q` into `(Inn(Q), ▷′_{φ_q})`, where
/// `g ▷′ h = g φ_q(h g⁻¹)` and `φ_q` is conjugation by `s_q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SbarReport {
    pub base: usize,
    pub group_order: usize,
    /// Index of `s_x s_q⁻¹` in the enumerated `Inn(Q)`.
    pub map: Vec<usize>,
    /// Cycle notation of each image.
    pub images: Vec<String>,
    pub is_homomorphism: bool,
    pub violations: Vec<(usize, usize)>,
    pub injective: bool,
    /// Nonempty fibers in order of their least element.
    pub fibers: Vec<Vec<usize>>,
    /// Fibers are exactly the classes `{x : s_x = s_y}`.
    pub fibers_match_symmetry_classes: bool,
}

pub fn sbar_hom(quandle: &FiniteQuandle, base: usize, cap: usize) -> Result<SbarReport> {
    let n = quandle.size();
    if base >= n {
        return Err(Error::Index { index: base, size: n });
    }
    let perms = inn(quandle, cap)?;
    let s_q = quandle.symmetry_perm(base);
    let s_q_inv = s_q.inverse();
    let idx = |p: &Perm| perms.index_of(p).expect("products of symmetries lie in Inn(Q)");
    let map: Vec<usize> = (0..n).map(|x| idx(&quandle.symmetry_perm(x).compose(&s_q_inv))).collect();
    let elems = perms.elements();
    let vedernikov_op = |a: usize, b: usize| {
        let (ga, gb) = (&elems[a], &elems[b]);
        let inner = gb.compose(&ga.inverse());
        idx(&ga.compose(&s_q.conjugate(&inner)))
    };
    let rows = par::map_range(n, |x| {
        (0..n)
            .filter(|&y| map[quandle.op(x, y)] != vedernikov_op(map[x], map[y]))
            .map(|y| (x, y))
            .collect::<Vec<_>>()
    });
    let violations: Vec<(usize, usize)> = rows.into_iter().flatten().collect();

    let mut fibers: Vec<Vec<usize>> = Vec::new();
    let mut fiber_of: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
    for (x, &img) in map.iter().enumerate() {
        let k = *fiber_of.entry(img).or_insert_with(|| {
            fibers.push(Vec::new());
            fibers.len() - 1
        });
        fibers[k].push(x);
    }
    let fibers_match_symmetry_classes = fibers == quandle.symmetry_classes();
    Ok(SbarReport {
        base,
        group_order: perms.order(),
        images: map.iter().map(|&g| elems[g].to_string()).collect(),
        injective: fibers.len() == n,
        is_homomorphism: violations.is_empty(),
        violations: violations.into_iter().take(MAX_REPORTED).collect(),
        fibers,
        fibers_match_symmetry_classes,
        map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{alexander, conjugation, dihedral, trivial, AlexanderParam};
    use crate::group::DEFAULT_CAP;

    #[test]
    fn singleton_realization_is_trivial() {
        let q = trivial(1).unwrap().quandle;
        let r = coset_realization(&q, 0, DEFAULT_CAP, 0).unwrap();
        assert_eq!(r.group.order(), 1);
        assert_eq!(r.stabilizer, vec![0]);
        assert_eq!(r.pi, vec![0]);
        assert!(r.checks.all());
    }

    #[test]
    fn dihedral_three_realization() {
        let q = dihedral(3).unwrap().quandle;
        let r = coset_realization(&q, 0, DEFAULT_CAP, 0).unwrap();
        assert_eq!(r.group.order(), 3);
        assert_eq!(r.stabilizer.len(), 1);
        assert_eq!(r.orbit, vec![0, 1, 2]);
        assert!(r.checks.all(), "{:?}", r.checks);
        assert!(r.group.is_abelian().is_none());
    }

    #[test]
    fn alexander_realizations_hold_at_every_base() {
        let q = alexander(7, 1, &AlexanderParam::Scalar(3)).unwrap().quandle;
        let z = Realizer::new(&q, DEFAULT_CAP).unwrap();
        for b in 0..7 {
            assert!(z.realize(b, 0).unwrap().checks.all());
        }
    }

    #[test]
    fn conjugation_s3_orbits_are_compatible() {
        let s3 = crate::group::FiniteGroup::symmetric(3);
        let c = conjugation(&s3).unwrap().quandle;
        let t = s3.labels().iter().position(|l| l == "(0 1)").unwrap();
        let rot = s3.labels().iter().position(|l| l == "(0 1 2)").unwrap();
        let z = Realizer::new(&c, DEFAULT_CAP).unwrap();
        let rep = z.inter_orbit(t, rot, 0).unwrap();
        assert!(!rep.same_orbit);
        assert!(rep.ok(), "{rep:?}");
        let same = z.inter_orbit(t, t, 0).unwrap();
        assert_eq!(same.reduces_to_phi, Some(true));
        assert!(same.ok());
        // non-connected quandles realize each orbit separately
        let real = z.realize(t, 0).unwrap();
        assert_eq!(real.orbit.len(), 3);
        assert!(real.checks.all());
    }

    #[test]
    fn sbar_examples() {
        let t = trivial(4).unwrap().quandle;
        let rep = sbar_hom(&t, 0, DEFAULT_CAP).unwrap();
        assert_eq!(rep.group_order, 1);
        assert_eq!(rep.fibers, vec![vec![0, 1, 2, 3]]);
        assert!(rep.is_homomorphism && rep.fibers_match_symmetry_classes);

        let r3 = dihedral(3).unwrap().quandle;
        let rep = sbar_hom(&r3, 0, DEFAULT_CAP).unwrap();
        assert!(rep.injective && rep.is_homomorphism);
        assert_eq!(rep.images[0], "()");

        let r4 = dihedral(4).unwrap().quandle;
        let rep = sbar_hom(&r4, 1, DEFAULT_CAP).unwrap();
        assert!(rep.is_homomorphism);
        assert_eq!(rep.fibers, vec![vec![0, 2], vec![1, 3]]);
        assert!(rep.fibers_match_symmetry_classes);
    }

    #[test]
    fn out_of_range_basepoint() {
        let q = dihedral(3).unwrap().quandle;
        assert!(matches!(coset_realization(&q, 3, DEFAULT_CAP, 0), Err(Error::Index { .. })));
        assert!(sbar_hom(&q, 9, DEFAULT_CAP).is_err());
    }
}
