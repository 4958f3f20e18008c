use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Default cap on the number of elements a closure may enumerate.
pub const DEFAULT_CAP: usize = 1_000_000;

/// A permutation group given by generators, with its full element list.
///
/// Elements are enumerated breadth-first from the identity, so the element
/// list starts with the identity and is deterministic for a fixed generator
/// order. The element *set* does not depend on generator order.
#[derive(Clone, Debug)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
}

impl PermutationGroup {
    /// Closes `generators` under composition. All generators must act on
    /// `degree` points.
    pub fn close(degree: usize, generators: Vec<Perm>, cap: usize) -> Result<PermutationGroup> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::Shape(format!(
                    "generator {g} acts on {} points, expected {degree}",
                    g.degree()
                )));
            }
        }
        let id = Perm::identity(degree);
        let mut index = HashMap::new();
        let mut elements = vec![id.clone()];
        index.insert(id, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &generators {
                let next = g.compose(&elements[i]);
                if !index.contains_key(&next) {
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    index.insert(next.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(next);
                }
            }
        }
        Ok(PermutationGroup {
            degree,
            generators,
            elements,
            index,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Orbit of a point, sorted.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        orbit_of(self.degree, &self.generators, point)
    }

    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits_of(self.degree, &self.generators)
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).len() == self.degree
    }

    /// Indices of the elements fixing `point`.
    pub fn stabilizer(&self, point: usize) -> Vec<usize> {
        (0..self.order())
            .filter(|&i| self.elements[i].apply(point) == point)
            .collect()
    }

    /// Same element set as `other` (generators may differ).
    pub fn same_elements(&self, other: &PermutationGroup) -> bool {
        self.order() == other.order() && self.elements.iter().all(|e| other.contains(e))
    }
}

/// Orbit of `point` under the group generated by `gens`, sorted.
pub fn orbit_of(degree: usize, gens: &[Perm], point: usize) -> Vec<usize> {
    let mut seen = vec![false; degree];
    seen[point] = true;
    let mut stack = vec![point];
    let mut out = vec![point];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
                out.push(y);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Orbit partition under `gens`, ordered by least element.
pub fn orbits_of(degree: usize, gens: &[Perm]) -> Vec<Vec<usize>> {
    let mut assigned = vec![false; degree];
    let mut out = Vec::new();
    for p in 0..degree {
        if !assigned[p] {
            let o = orbit_of(degree, gens, p);
            for &x in &o {
                assigned[x] = true;
            }
            out.push(o);
        }
    }
    out
}
