//! Backtracking search for quandle isomorphisms and automorphism groups.
//!
//! A partial map is extended by propagation: once `f(x)` and `f(z)` are known,
//! `f(x ▷ z)`, `f(z ▷ x)` and the `▷⁻¹` counterparts are forced. Candidates are
//! filtered by an invariant profile of each element (cycle type of `s_q`,
//! orbit size, size of the image of `t_q`), all preserved by isomorphisms.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::Serialize;

use super::orbits::orbits;
use crate::error::{Error, Result};
use crate::group::{orbit_of, PermutationGroup};
use crate::perm::Perm;
use crate::quandle::FiniteQuandle;

/// Automorphism and isomorphism search is limited to this many elements.
pub const MAX_SEARCH_SIZE: usize = 64;

const NONE: u32 = u32::MAX;
const MAX_HOM_VIOLATIONS: usize = 100;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Profile {
    cycle_type: Vec<usize>,
    orbit_size: usize,
    column_image: usize,
}

fn profiles(q: &FiniteQuandle) -> Vec<Profile> {
    let dec = orbits(q);
    (0..q.size())
        .map(|x| {
            let mut col = vec![false; q.size()];
            for r in 0..q.size() {
                col[q.op(r, x)] = true;
            }
            Profile {
                cycle_type: q.symmetry_perm(x).cycle_type(),
                orbit_size: dec.orbit_of(x).len(),
                column_image: col.iter().filter(|&&b| b).count(),
            }
        })
        .collect()
}

struct Matcher<'a> {
    a: &'a FiniteQuandle,
    b: &'a FiniteQuandle,
    class_a: Vec<u32>,
    class_b: Vec<u32>,
}

#[derive(Clone)]
struct State {
    fwd: Vec<u32>,
    bwd: Vec<u32>,
    assigned: Vec<usize>,
}

impl<'a> Matcher<'a> {
    fn new(a: &'a FiniteQuandle, b: &'a FiniteQuandle) -> Option<Matcher<'a>> {
        let pa = profiles(a);
        let pb = if std::ptr::eq(a, b) { pa.clone() } else { profiles(b) };
        let mut sa = pa.clone();
        let mut sb = pb.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return None;
        }
        sa.dedup();
        let ids: BTreeMap<&Profile, u32> = sa.iter().enumerate().map(|(i, p)| (p, i as u32)).collect();
        Some(Matcher {
            a,
            b,
            class_a: pa.iter().map(|p| ids[p]).collect(),
            class_b: pb.iter().map(|p| ids[p]).collect(),
        })
    }

    fn empty(&self) -> State {
        State {
            fwd: vec![NONE; self.a.size()],
            bwd: vec![NONE; self.b.size()],
            assigned: Vec::new(),
        }
    }

    /// Sets `f(x) = y` and everything it forces; false on contradiction.
    fn assign(&self, st: &mut State, x: usize, y: usize) -> bool {
        let mut queue = vec![(x, y)];
        while let Some((x, y)) = queue.pop() {
            if st.fwd[x] == y as u32 {
                continue;
            }
            if st.fwd[x] != NONE || st.bwd[y] != NONE || self.class_a[x] != self.class_b[y] {
                return false;
            }
            st.fwd[x] = y as u32;
            st.bwd[y] = x as u32;
            st.assigned.push(x);
            for &z in &st.assigned {
                let w = st.fwd[z] as usize;
                queue.push((self.a.op(x, z), self.b.op(y, w)));
                queue.push((self.a.op(z, x), self.b.op(w, y)));
                queue.push((self.a.inv_op(x, z), self.b.inv_op(y, w)));
                queue.push((self.a.inv_op(z, x), self.b.inv_op(w, y)));
            }
        }
        true
    }

    fn search(&self, st: State) -> Option<Vec<u32>> {
        let Some(x) = st.fwd.iter().position(|&v| v == NONE) else {
            return Some(st.fwd);
        };
        for y in 0..self.b.size() {
            if st.bwd[y] != NONE || self.class_b[y] != self.class_a[x] {
                continue;
            }
            let mut next = st.clone();
            if self.assign(&mut next, x, y) {
                if let Some(f) = self.search(next) {
                    return Some(f);
                }
            }
        }
        None
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_SEARCH_SIZE {
        return Err(Error::TooLarge {
            size: n,
            limit: MAX_SEARCH_SIZE,
        });
    }
    Ok(())
}

/// Finds an isomorphism `Q1 → Q2`, if one exists.
pub fn iso_search(q1: &FiniteQuandle, q2: &FiniteQuandle) -> Result<Option<Vec<usize>>> {
    check_size(q1.size())?;
    check_size(q2.size())?;
    if q1.size() != q2.size() {
        return Ok(None);
    }
    let Some(m) = Matcher::new(q1, q2) else {
        return Ok(None);
    };
    let st = m.empty();
    Ok(m.search(st).map(|f| f.into_iter().map(|x| x as usize).collect()))
}

/// `Aut_▷(Q)` as a strong generating set relative to the base `0, 1, …, n-1`.
#[derive(Clone, Debug, Serialize)]
pub struct AutGroup {
    pub degree: usize,
    #[serde(serialize_with = "ser_perms")]
    pub generators: Vec<Perm>,
    /// `basic_orbits[i]` is the orbit of `i` under the pointwise stabilizer
    /// of `0..i`.
    pub basic_orbits: Vec<Vec<usize>>,
    #[serde(serialize_with = "ser_big")]
    pub order: BigUint,
}

fn ser_perms<S: serde::Serializer>(v: &[Perm], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|p| p.to_string()))
}

fn ser_big<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl AutGroup {
    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.basic_orbits[0].len() == self.degree
    }

    pub fn orbit(&self, x: usize) -> Vec<usize> {
        orbit_of(self.degree, &self.generators, x)
    }

    /// Enumerates the group; fails when it exceeds `cap`.
    pub fn to_permutation_group(&self, cap: usize) -> Result<PermutationGroup> {
        PermutationGroup::close(self.degree, self.generators.clone(), cap)
    }
}

/// Computes `Aut_▷(Q)` for `|Q| ≤ 64`.
pub fn aut(q: &FiniteQuandle) -> Result<AutGroup> {
    let n = q.size();
    check_size(n)?;
    let m = Matcher::new(q, q).expect("a quandle matches itself");
    let mut gens: Vec<Perm> = Vec::new();
    let mut basic_orbits = vec![Vec::new(); n];
    for i in (0..n).rev() {
        // fix 0..i pointwise
        let mut fixed = m.empty();
        for k in 0..i {
            let ok = m.assign(&mut fixed, k, k);
            debug_assert!(ok, "identity extends any pointwise fixing");
        }
        let mut orbit = orbit_of(n, &gens, i);
        let mut impossible = vec![false; n];
        for j in i..n {
            if orbit.binary_search(&j).is_ok() || impossible[j] || m.class_a[i] != m.class_b[j] {
                continue;
            }
            let mut st = fixed.clone();
            let found = if m.assign(&mut st, i, j) { m.search(st) } else { None };
            match found {
                Some(f) => {
                    let p = Perm::from_images(f).expect("search returns bijections");
                    gens.push(p);
                    orbit = orbit_of(n, &gens, i);
                }
                None => {
                    for x in orbit_of(n, &gens, j) {
                        impossible[x] = true;
                    }
                }
            }
        }
        basic_orbits[i] = orbit;
    }
    let order = basic_orbits
        .iter()
        .fold(BigUint::from(1u32), |acc, o| acc * BigUint::from(o.len()));
    Ok(AutGroup {
        degree: n,
        generators: gens,
        basic_orbits,
        order,
    })
}

/// Result of an exhaustive homomorphism check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomReport {
    pub is_homomorphism: bool,
    /// Pairs `(q, r)` with `f(q ▷ r) ≠ f(q) ▷ f(r)`, capped at 100.
    pub violations: Vec<(usize, usize)>,
    /// `f(q ▷⁻¹ r) = f(q) ▷⁻¹ f(r)` for all pairs.
    pub preserves_inverse: bool,
    pub bijective: bool,
}

pub fn hom_check(f: &[usize], q1: &FiniteQuandle, q2: &FiniteQuandle) -> Result<HomReport> {
    if f.len() != q1.size() {
        return Err(Error::Shape(format!(
            "map has {} entries for a quandle of size {}",
            f.len(),
            q1.size()
        )));
    }
    if let Some(&bad) = f.iter().find(|&&x| x >= q2.size()) {
        return Err(Error::Index {
            index: bad,
            size: q2.size(),
        });
    }
    let n = q1.size();
    let mut violations = Vec::new();
    let mut preserves_inverse = true;
    for q in 0..n {
        for r in 0..n {
            if f[q1.op(q, r)] != q2.op(f[q], f[r]) && violations.len() < MAX_HOM_VIOLATIONS {
                violations.push((q, r));
            }
            if f[q1.inv_op(q, r)] != q2.inv_op(f[q], f[r]) {
                preserves_inverse = false;
            }
        }
    }
    let mut image = f.to_vec();
    image.sort_unstable();
    image.dedup();
    Ok(HomReport {
        is_homomorphism: violations.is_empty(),
        violations,
        preserves_inverse,
        bijective: image.len() == n && n == q2.size(),
    })
}
