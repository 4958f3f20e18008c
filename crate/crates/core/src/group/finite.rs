use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::perm_group::PermutationGroup;
use crate::error::{Error, Result};
use crate::par;
use crate::perm::Perm;

/// Groups up to this order keep a full multiplication table.
pub const TABLE_LIMIT: usize = 4096;
/// Associativity is checked on every triple up to this order, sampled above.
pub const EXHAUSTIVE_ASSOC_LIMIT: usize = 64;
const SAMPLED_ASSOC_TRIPLES: usize = 20_000;

#[derive(Clone, Debug)]
enum Repr {
    Table(Vec<u32>),
    Perms {
        elements: Vec<Perm>,
        index: HashMap<Perm, u32>,
    },
}

/// A finite group on the indices `0..order`.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    repr: Repr,
    identity: usize,
    inv: Vec<u32>,
    labels: Vec<String>,
}

impl FiniteGroup {
    /// Validates a multiplication table (`mul[a][b] = a·b`).
    pub fn from_table(mul: &[Vec<i64>], labels: Option<Vec<String>>) -> Result<FiniteGroup> {
        Self::from_table_seeded(mul, labels, 0)
    }

    pub fn from_table_seeded(
        mul: &[Vec<i64>],
        labels: Option<Vec<String>>,
        seed: u64,
    ) -> Result<FiniteGroup> {
        let n = mul.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (a, row) in mul.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Shape(format!("row {a} has {} entries, expected {n}", row.len())));
            }
            for (b, &v) in row.iter().enumerate() {
                if v < 0 || v as usize >= n {
                    return Err(Error::Range {
                        row: a,
                        col: b,
                        value: v,
                        size: n,
                    });
                }
                flat.push(v as u32);
            }
        }
        Self::from_flat(n, flat, labels, seed)
    }

    pub(crate) fn from_flat(
        n: usize,
        flat: Vec<u32>,
        labels: Option<Vec<String>>,
        seed: u64,
    ) -> Result<FiniteGroup> {
        let m = |a: usize, b: usize| flat[a * n + b] as usize;
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| m(e, x) == x && m(x, e) == x))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inv = vec![0u32; n];
        for (a, slot) in inv.iter_mut().enumerate() {
            let b = (0..n)
                .find(|&b| m(a, b) == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {a} has no inverse")))?;
            if m(b, a) != identity {
                return Err(Error::InvalidGroup(format!("inverse of {a} is one-sided")));
            }
            *slot = b as u32;
        }
        let assoc_fail = |a: usize, b: usize, c: usize| m(m(a, b), c) != m(a, m(b, c));
        if n <= EXHAUSTIVE_ASSOC_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if assoc_fail(a, b, c) {
                            return Err(Error::InvalidGroup(format!(
                                "associativity fails at ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..SAMPLED_ASSOC_TRIPLES {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if assoc_fail(a, b, c) {
                    return Err(Error::InvalidGroup(format!(
                        "associativity fails at ({a}, {b}, {c})"
                    )));
                }
            }
        }
        let labels = match labels {
            Some(l) if l.len() == n => l,
            Some(l) => {
                return Err(Error::Shape(format!("{} labels for order {n}", l.len())));
            }
            None => (0..n).map(|i| i.to_string()).collect(),
        };
        Ok(FiniteGroup {
            order: n,
            repr: Repr::Table(flat),
            identity,
            inv,
            labels,
        })
    }

    /// Converts an enumerated permutation group. Element `i` of the result is
    /// element `i` of `group`. Orders above [`TABLE_LIMIT`] multiply through
    /// the permutations instead of a table.
    pub fn from_permutation_group(group: &PermutationGroup) -> FiniteGroup {
        let elements = group.elements().to_vec();
        let n = elements.len();
        let index: HashMap<Perm, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        let inv: Vec<u32> = elements.iter().map(|p| index[&p.inverse()]).collect();
        let identity = index[&Perm::identity(group.degree())] as usize;
        let labels = elements.iter().map(|p| p.to_string()).collect();
        let repr = if n <= TABLE_LIMIT {
            let rows = par::map_range(n, |a| {
                elements
                    .iter()
                    .map(|b| index[&elements[a].compose(b)])
                    .collect::<Vec<u32>>()
            });
            Repr::Table(rows.into_iter().flatten().collect())
        } else {
            Repr::Perms { elements, index }
        };
        FiniteGroup {
            order: n,
            repr,
            identity,
            inv,
            labels,
        }
    }

    /// Builds a group from a trusted multiplication function.
    pub(crate) fn from_fn<F: Fn(usize, usize) -> usize>(
        n: usize,
        labels: Vec<String>,
        f: F,
    ) -> FiniteGroup {
        let mut flat = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                flat.push(f(a, b) as u32);
            }
        }
        Self::from_flat(n, flat, Some(labels), 0).expect("constructed group must satisfy the axioms")
    }

    pub fn cyclic(n: usize) -> FiniteGroup {
        Self::from_fn(n, (0..n).map(|i| i.to_string()).collect(), |a, b| (a + b) % n)
    }

    /// The symmetric group on `k` points; elements in lexicographic order of
    /// their image vectors, labelled in cycle notation.
    pub fn symmetric(k: usize) -> FiniteGroup {
        let perms = all_permutations(k);
        let index: HashMap<&Perm, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let labels = perms.iter().map(|p| p.to_string()).collect();
        Self::from_fn(perms.len(), labels, |a, b| index[&perms[a].compose(&perms[b])])
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.repr {
            Repr::Table(t) => t[a * self.order + b] as usize,
            Repr::Perms { elements, index } => index[&elements[a].compose(&elements[b])] as usize,
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    /// `g h g⁻¹`.
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn is_abelian(&self) -> Option<(usize, usize)> {
        for a in 0..self.order {
            for b in a + 1..self.order {
                if self.mul(a, b) != self.mul(b, a) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// The underlying permutation when built from a permutation group.
    pub fn as_perm(&self, a: usize) -> Option<&Perm> {
        match &self.repr {
            Repr::Perms { elements, .. } => Some(&elements[a]),
            Repr::Table(_) => None,
        }
    }

    pub fn mul_table(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    pub fn to_file(&self) -> GroupFile {
        GroupFile {
            order: self.order,
            mul: self.mul_table(),
            labels: Some(self.labels.clone()),
        }
    }

    /// Checks closure of `subset` under multiplication and inversion,
    /// returning a witness pair on failure.
    pub fn check_subgroup(&self, subset: &[usize]) -> Result<()> {
        if subset.is_empty() {
            return Err(Error::InvalidGroup("empty subset".into()));
        }
        let mut member = vec![false; self.order];
        for &h in subset {
            if h >= self.order {
                return Err(Error::Index {
                    index: h,
                    size: self.order,
                });
            }
            member[h] = true;
        }
        for &a in subset {
            for &b in subset {
                if !member[self.mul(a, self.inv(b))] {
                    return Err(Error::NotASubgroup(a, b));
                }
            }
        }
        Ok(())
    }

    /// Subgroup generated by `gens`, sorted.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order];
        member[self.identity] = true;
        let mut elems = vec![self.identity];
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    elems.push(y);
                }
            }
            i += 1;
        }
        elems.sort_unstable();
        elems
    }

    /// Orbit of `g` under conjugation, sorted.
    pub fn conjugacy_class(&self, g: usize) -> Result<Vec<usize>> {
        if g >= self.order {
            return Err(Error::Index {
                index: g,
                size: self.order,
            });
        }
        let mut class: Vec<usize> = (0..self.order).map(|x| self.conj(x, g)).collect();
        class.sort_unstable();
        class.dedup();
        Ok(class)
    }

    /// Left-coset decomposition `G/H`.
    pub fn cosets(&self, subgroup: &[usize]) -> Result<CosetSpace> {
        self.check_subgroup(subgroup)?;
        let mut index_of = vec![u32::MAX; self.order];
        let mut reps = Vec::new();
        let mut members = Vec::new();
        for g in 0..self.order {
            if index_of[g] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            let mut coset: Vec<usize> = subgroup.iter().map(|&h| self.mul(g, h)).collect();
            coset.sort_unstable();
            for &x in &coset {
                index_of[x] = c;
            }
            // g is the least unassigned index, hence the least in its coset
            reps.push(g);
            members.push(coset);
        }
        Ok(CosetSpace {
            subgroup: {
                let mut h = subgroup.to_vec();
                h.sort_unstable();
                h
            },
            reps,
            index_of,
            members,
        })
    }

    /// A small generating set, chosen greedily in index order.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![self.identity];
        for g in 0..self.order {
            if span.binary_search(&g).is_err() {
                gens.push(g);
                span = self.generated(&gens);
                if span.len() == self.order {
                    break;
                }
            }
        }
        gens
    }
}

/// Left cosets `gH` with the least element of each coset as representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetSpace {
    pub subgroup: Vec<usize>,
    pub reps: Vec<usize>,
    index_of: Vec<u32>,
    pub members: Vec<Vec<usize>>,
}

impl CosetSpace {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    #[inline]
    pub fn coset_of(&self, g: usize) -> usize {
        self.index_of[g] as usize
    }

    /// Position of `g` within its coset.
    pub fn position(&self, g: usize) -> usize {
        let c = self.coset_of(g);
        self.members[c].binary_search(&g).expect("element lies in its coset")
    }
}

/// A group automorphism stored as an index permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAutomorphism {
    map: Vec<u32>,
}

impl GroupAutomorphism {
    /// Validates `map` as an automorphism of `group` (exhaustive check).
    pub fn new(group: &FiniteGroup, map: Vec<usize>) -> Result<GroupAutomorphism> {
        let n = group.order();
        if map.len() != n {
            return Err(Error::InvalidAutomorphism(format!(
                "map has {} entries for a group of order {n}",
                map.len()
            )));
        }
        let mut seen = vec![false; n];
        for (i, &x) in map.iter().enumerate() {
            if x >= n || seen[x] {
                return Err(Error::InvalidAutomorphism(format!("not a bijection at {i}")));
            }
            seen[x] = true;
        }
        if map[group.identity()] != group.identity() {
            return Err(Error::InvalidAutomorphism("identity is not fixed".into()));
        }
        let ok = par::all_range(n, |a| {
            (0..n).all(|b| map[group.mul(a, b)] == group.mul(map[a], map[b]))
        });
        if !ok {
            return Err(Error::InvalidAutomorphism("not multiplicative".into()));
        }
        Ok(GroupAutomorphism {
            map: map.into_iter().map(|x| x as u32).collect(),
        })
    }

    pub(crate) fn from_trusted(map: Vec<usize>) -> GroupAutomorphism {
        GroupAutomorphism {
            map: map.into_iter().map(|x| x as u32).collect(),
        }
    }

    pub fn identity(group: &FiniteGroup) -> GroupAutomorphism {
        Self::from_trusted((0..group.order()).collect())
    }

    /// `x ↦ g x g⁻¹`.
    pub fn inner(group: &FiniteGroup, g: usize) -> GroupAutomorphism {
        Self::from_trusted((0..group.order()).map(|x| group.conj(g, x)).collect())
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x] as usize
    }

    pub fn map(&self) -> Vec<usize> {
        self.map.iter().map(|&x| x as usize).collect()
    }

    /// `{g : φ(g) = g}`, verified to be a subgroup.
    pub fn fixed_subgroup(&self, group: &FiniteGroup) -> Vec<usize> {
        let fixed: Vec<usize> = (0..group.order()).filter(|&g| self.apply(g) == g).collect();
        debug_assert!(group.check_subgroup(&fixed).is_ok());
        fixed
    }
}

/// Every automorphism of a small group, sorted by image vector. Generators
/// are mapped to elements of equal order and each candidate is checked.
pub fn all_automorphisms(group: &FiniteGroup, limit: usize) -> Result<Vec<GroupAutomorphism>> {
    let n = group.order();
    if n > limit {
        return Err(Error::TooLarge { size: n, limit });
    }
    let gens = group.generating_set();
    // Express every element as a word in the generators (BFS tree).
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[group.identity()] = true;
    let mut order = vec![group.identity()];
    let mut i = 0;
    while i < order.len() {
        let x = order[i];
        for (k, &g) in gens.iter().enumerate() {
            let y = group.mul(x, g);
            if !seen[y] {
                seen[y] = true;
                parent[y] = Some((x, k));
                order.push(y);
            }
        }
        i += 1;
    }
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            let o = group.element_order(g);
            (0..n).filter(|&x| group.element_order(x) == o).collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    loop {
        let images: Vec<usize> = choice.iter().zip(&candidates).map(|(&c, cs)| cs[c]).collect();
        let mut map = vec![usize::MAX; n];
        map[group.identity()] = group.identity();
        for &y in order.iter().skip(1) {
            let (x, k) = parent[y].expect("non-identity elements have parents");
            map[y] = group.mul(map[x], images[k]);
        }
        if let Ok(phi) = GroupAutomorphism::new(group, map) {
            out.push(phi);
        }
        // odometer
        let mut k = 0;
        loop {
            if k == choice.len() {
                out.sort_by(|a, b| a.map.cmp(&b.map));
                out.dedup();
                return Ok(out);
            }
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

fn all_permutations(k: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = (0..k as u32).collect();
    loop {
        out.push(Perm::from_images_unchecked(cur.clone()));
        // next lexicographic permutation
        let Some(i) = (1..k).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..k).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

/// JSON interchange form of a group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub order: usize,
    pub mul: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Deserialize)]
struct RawGroupFile {
    order: usize,
    mul: Vec<Vec<i64>>,
    #[serde(default)]
    labels: Option<Vec<String>>,
}

impl GroupFile {
    pub fn parse(text: &str) -> Result<FiniteGroup> {
        let raw: RawGroupFile = serde_json::from_str(text)?;
        Self::from_raw(raw)
    }

    pub fn parse_value(value: serde_json::Value) -> Result<FiniteGroup> {
        let raw: RawGroupFile = serde_json::from_value(value)?;
        Self::from_raw(raw)
    }

    fn from_raw(raw: RawGroupFile) -> Result<FiniteGroup> {
        if raw.mul.len() != raw.order {
            return Err(Error::Shape(format!(
                "order is {} but table has {} rows",
                raw.order,
                raw.mul.len()
            )));
        }
        FiniteGroup::from_table(&raw.mul, raw.labels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        FiniteGroup::symmetric(3)
    }

    fn find(g: &FiniteGroup, label: &str) -> usize {
        g.labels().iter().position(|l| l == label).unwrap()
    }

    #[test]
    fn symmetric_group_basics() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert_eq!(g.label(g.identity()), "()");
        assert!(g.is_abelian().is_some());
        assert_eq!(FiniteGroup::symmetric(4).order(), 24);
    }

    #[test]
    fn fixed_subgroup_examples() {
        let g = s3();
        let id = GroupAutomorphism::identity(&g);
        assert_eq!(id.fixed_subgroup(&g), (0..6).collect::<Vec<_>>());

        let z5 = FiniteGroup::cyclic(5);
        let double = GroupAutomorphism::new(&z5, (0..5).map(|x| 2 * x % 5).collect()).unwrap();
        assert_eq!(double.fixed_subgroup(&z5), vec![0]);

        let t = find(&g, "(0 1)");
        let c = GroupAutomorphism::inner(&g, t);
        let fixed = c.fixed_subgroup(&g);
        let labels: Vec<&str> = fixed.iter().map(|&x| g.label(x)).collect();
        assert_eq!(labels, vec!["()", "(0 1)"]);
    }

    #[test]
    fn coset_examples() {
        let g = s3();
        assert_eq!(g.cosets(&(0..6).collect::<Vec<_>>()).unwrap().len(), 1);
        let trivial = g.cosets(&[g.identity()]).unwrap();
        assert_eq!(trivial.len(), 6);
        let t = find(&g, "(0 1)");
        let cs = g.cosets(&[g.identity(), t]).unwrap();
        assert_eq!(cs.len(), 3);
        for c in 0..cs.len() {
            assert_eq!(cs.reps[c], *cs.members[c].iter().min().unwrap());
        }
        let c3 = find(&g, "(0 1 2)");
        assert!(matches!(g.cosets(&[g.identity(), c3]), Err(Error::NotASubgroup(..))));
    }

    #[test]
    fn conjugacy_classes() {
        let g = s3();
        let t = find(&g, "(0 1)");
        let class: Vec<&str> = g.conjugacy_class(t).unwrap().iter().map(|&x| g.label(x)).collect();
        assert_eq!(class.len(), 3);
        assert!(class.iter().all(|l| l.matches(' ').count() == 1));
        let z = FiniteGroup::cyclic(8);
        for x in 0..8 {
            assert_eq!(z.conjugacy_class(x).unwrap(), vec![x]);
        }
    }

    #[test]
    fn automorphisms_of_small_groups() {
        assert_eq!(all_automorphisms(&s3(), 100).unwrap().len(), 6);
        assert_eq!(all_automorphisms(&FiniteGroup::cyclic(8), 100).unwrap().len(), 4);
        assert_eq!(all_automorphisms(&FiniteGroup::cyclic(5), 100).unwrap().len(), 4);
    }

    #[test]
    fn invalid_tables_are_rejected() {
        // not associative: a Latin square with identity that is not a group
        let bad = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(FiniteGroup::from_table(&bad, None).is_err());
        assert!(FiniteGroup::from_table(&[vec![0, 0], vec![0, 0]], None).is_err());
        let z3 = FiniteGroup::from_table(&[vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]], None).unwrap();
        assert_eq!(z3.inv(1), 2);
    }

    #[test]
    fn automorphism_validation() {
        let z5 = FiniteGroup::cyclic(5);
        assert!(GroupAutomorphism::new(&z5, vec![0, 1, 2, 4, 3]).is_err());
        assert!(GroupAutomorphism::new(&z5, vec![1, 2, 3, 4, 0]).is_err());
        assert!(GroupAutomorphism::new(&z5, vec![0, 4, 3, 2, 1]).is_ok());
    }

    #[test]
    fn permutation_group_conversion_keeps_indices() {
        let a = Perm::parse_cycles("(0 1)", 3).unwrap();
        let b = Perm::parse_cycles("(0 1 2)", 3).unwrap();
        let pg = PermutationGroup::close(3, vec![a, b], 100).unwrap();
        let g = FiniteGroup::from_permutation_group(&pg);
        for x in 0..6 {
            for y in 0..6 {
                let p = pg.elements()[x].compose(&pg.elements()[y]);
                assert_eq!(pg.index_of(&p), Some(g.mul(x, y)));
            }
        }
    }
}
