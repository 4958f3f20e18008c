use serde::Serialize;

use super::SignedWord;
use crate::quandle::FiniteQuandle;

/// The chain `Z = Q⁰Z ⊆ Q¹Z ⊆ …` up to its fixpoint. Every set is sorted and
/// the last entry of `chain` equals `fixpoint`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Saturation {
    pub chain: Vec<Vec<usize>>,
    pub fixpoint: Vec<usize>,
}

fn saturate(quandle: &FiniteQuandle, seed: &[usize], inverse: bool) -> Saturation {
    let n = quandle.size();
    let mut member = vec![false; n];
    let mut current: Vec<usize> = Vec::new();
    for &z in seed {
        if !member[z] {
            member[z] = true;
            current.push(z);
        }
    }
    current.sort_unstable();
    let mut chain = vec![current.clone()];
    loop {
        // z = z ▷ z keeps the chain increasing
        let mut next_member = member.clone();
        let mut next = current.clone();
        for &z in &current {
            for q in 0..n {
                let y = if inverse { quandle.inv_op(q, z) } else { quandle.op(q, z) };
                if !next_member[y] {
                    next_member[y] = true;
                    next.push(y);
                }
            }
        }
        if next.len() == current.len() {
            break;
        }
        next.sort_unstable();
        member = next_member;
        current = next;
        chain.push(current.clone());
    }
    Saturation {
        fixpoint: current,
        chain,
    }
}

/// Iterates `Q^{i+1}Z = Q ▷ Q^iZ` until it stabilizes. On a finite carrier
/// the fixpoint is the union of the `Inn(Q)`-orbits meeting `Z`.
pub fn saturate_forward(quandle: &FiniteQuandle, seed: &[usize]) -> Saturation {
    saturate(quandle, seed, false)
}

/// Iterates `Q^{-(i+1)}Z = Q ▷⁻¹ Q^{-i}Z` until it stabilizes.
pub fn saturate_backward(quandle: &FiniteQuandle, seed: &[usize]) -> Saturation {
    saturate(quandle, seed, true)
}

/// Partition of a quandle into `Inn(Q)`-orbits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitDecomposition {
    pub orbit_id: Vec<usize>,
    pub orbits: Vec<Vec<usize>>,
    /// Least element of each orbit; witness words start here.
    pub bases: Vec<usize>,
    /// For each element, a word in positive symmetries carrying its orbit's
    /// base to it. Words come from a breadth-first sweep, so each is at most
    /// as long as the orbit minus one.
    pub witness_words: Vec<SignedWord>,
}

impl OrbitDecomposition {
    pub fn orbit_of(&self, x: usize) -> &[usize] {
        &self.orbits[self.orbit_id[x]]
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }
}

/// Orbits by forward saturation from each unseen basepoint, in increasing
/// basepoint order.
pub fn orbits(quandle: &FiniteQuandle) -> OrbitDecomposition {
    let n = quandle.size();
    let mut orbit_id = vec![usize::MAX; n];
    let mut words: Vec<Option<SignedWord>> = vec![None; n];
    let mut orbits = Vec::new();
    let mut bases = Vec::new();
    for base in 0..n {
        if orbit_id[base] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        orbit_id[base] = id;
        words[base] = Some(SignedWord::default());
        let mut members = vec![base];
        let mut frontier = vec![base];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &z in &frontier {
                for q in 0..n {
                    let y = quandle.op(q, z);
                    if orbit_id[y] == usize::MAX {
                        orbit_id[y] = id;
                        let mut w = words[z].clone().expect("frontier words are set");
                        w.push(q, 1);
                        words[y] = Some(w);
                        members.push(y);
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        members.sort_unstable();
        orbits.push(members);
        bases.push(base);
    }
    OrbitDecomposition {
        orbit_id,
        orbits,
        bases,
        witness_words: words.into_iter().map(|w| w.expect("every element is reached")).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// Words carrying element 0 to every element.
    Spanning { base: usize, words: Vec<SignedWord> },
    /// Two elements in different orbits.
    Separated { a: usize, b: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Connectivity {
    pub connected: bool,
    pub certificate: Certificate,
    /// Forward saturation of `{0}` reaches every element.
    pub forward_saturation_covers: bool,
}

pub fn is_connected(quandle: &FiniteQuandle) -> Connectivity {
    let dec = orbits(quandle);
    let covers = saturate_forward(quandle, &[0]).fixpoint.len() == quandle.size();
    if dec.len() == 1 {
        Connectivity {
            connected: true,
            certificate: Certificate::Spanning {
                base: 0,
                words: dec.witness_words,
            },
            forward_saturation_covers: covers,
        }
    } else {
        Connectivity {
            connected: false,
            certificate: Certificate::Separated {
                a: dec.orbits[0][0],
                b: dec.orbits[1][0],
            },
            forward_saturation_covers: covers,
        }
    }
}
