//! Knot and link diagrams and their quandle coloring numbers.
//!
//! Arcs here are the edges of the diagram graph: every PD label is one arc,
//! and the over-strand at a crossing is split into an incoming and an
//! outgoing arc that a coloring must paint alike.

mod coloring;
mod parse;

use serde::Serialize;

use crate::error::{Error, Result};

pub use coloring::{count_colorings, count_colorings_brute_force, invariance_check, ColoringCount};
pub use parse::{parse_braid, parse_pd};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Crossing {
    pub over_in: usize,
    pub over_out: usize,
    pub under_in: usize,
    pub under_out: usize,
    /// +1 or -1.
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KnotDiagram {
    pub crossings: Vec<Crossing>,
    pub arc_count: usize,
    /// Arcs of each link component in the order of travel. Arcs that meet
    /// no crossing are closed loops on their own.
    pub components: Vec<Vec<usize>>,
}

impl KnotDiagram {
    /// The crossingless unknot.
    pub fn unknot() -> KnotDiagram {
        KnotDiagram {
            crossings: Vec::new(),
            arc_count: 1,
            components: vec![vec![0]],
        }
    }

    /// Validates that every arc enters exactly one crossing and leaves
    /// exactly one, or touches none at all.
    pub fn new(arc_count: usize, crossings: Vec<Crossing>) -> Result<KnotDiagram> {
        let mut next = vec![usize::MAX; arc_count];
        let mut leaves = vec![0usize; arc_count];
        let mut duplicated = Vec::new();
        for c in &crossings {
            if c.sign != 1 && c.sign != -1 {
                return Err(Error::Shape(format!("crossing sign {} is not ±1", c.sign)));
            }
            for a in [c.over_in, c.over_out, c.under_in, c.under_out] {
                if a >= arc_count {
                    return Err(Error::Index {
                        index: a,
                        size: arc_count,
                    });
                }
            }
            for (from, to) in [(c.under_in, c.under_out), (c.over_in, c.over_out)] {
                if next[from] != usize::MAX {
                    duplicated.push(from);
                }
                next[from] = to;
                leaves[to] += 1;
            }
        }
        duplicated.extend((0..arc_count).filter(|&a| leaves[a] > 1));
        let missing: Vec<usize> = (0..arc_count)
            .filter(|&a| (next[a] == usize::MAX) != (leaves[a] == 0))
            .collect();
        if !duplicated.is_empty() || !missing.is_empty() {
            duplicated.sort_unstable();
            duplicated.dedup();
            return Err(Error::InconsistentArcs { missing, duplicated });
        }
        let mut seen = vec![false; arc_count];
        let mut components = Vec::new();
        for start in 0..arc_count {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut a = next[start];
            while a != usize::MAX && a != start {
                seen[a] = true;
                comp.push(a);
                a = next[a];
            }
            components.push(comp);
        }
        Ok(KnotDiagram {
            crossings,
            arc_count,
            components,
        })
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// The mirror image: every crossing changes sign.
    pub fn mirror(&self) -> KnotDiagram {
        let mut m = self.clone();
        for c in &mut m.crossings {
            c.sign = -c.sign;
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknot_has_one_component() {
        let u = KnotDiagram::unknot();
        assert_eq!(u.component_count(), 1);
        assert!(u.crossings.is_empty());
    }

    #[test]
    fn kink_diagram() {
        // one crossing, the strand passes under then over itself
        let c = Crossing {
            under_in: 0,
            under_out: 1,
            over_in: 1,
            over_out: 0,
            sign: 1,
        };
        let d = KnotDiagram::new(2, vec![c]).unwrap();
        assert_eq!(d.components, vec![vec![0, 1]]);
    }

    #[test]
    fn double_exit_is_inconsistent() {
        let c = Crossing {
            under_in: 0,
            under_out: 1,
            over_in: 0,
            over_out: 1,
            sign: 1,
        };
        let err = KnotDiagram::new(2, vec![c]).unwrap_err();
        assert!(matches!(err, Error::InconsistentArcs { ref duplicated, .. } if duplicated == &vec![0, 1]));
    }
}
