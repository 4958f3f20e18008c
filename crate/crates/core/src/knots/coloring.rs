use num_bigint::BigUint;
use serde::Serialize;

use super::KnotDiagram;
use crate::par;
use crate::quandle::FiniteQuandle;
use crate::symmetry::orbits;

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoringCount {
    #[serde(serialize_with = "ser_big")]
    pub total: BigUint,
    /// Colorings with every arc inside one `Inn(Q)`-orbit, per orbit in the
    /// order of [`orbits`]. For a knot these sum to `total`.
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_big_opt")]
    pub by_orbit: Option<Vec<BigUint>>,
}

fn ser_big<S: serde::Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn ser_big_opt<S: serde::Serializer>(v: &Option<Vec<BigUint>>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.collect_seq(v.iter().map(|x| x.to_string())),
        None => s.serialize_none(),
    }
}

/// A crossing relation on merged variables: `out = over ▷^sign inp`.
#[derive(Clone, Copy, Debug)]
struct Rel {
    over: usize,
    inp: usize,
    out: usize,
    sign: i8,
}

struct Solver<'a> {
    quandle: &'a FiniteQuandle,
    rels: Vec<Rel>,
    touching: Vec<Vec<usize>>,
    /// allowed colors, as a membership mask and a list
    allowed: Vec<bool>,
    domain: Vec<usize>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl<'a> Solver<'a> {
    /// Applies every relation that has two known ends; false on conflict.
    fn propagate(&self, assign: &mut [u32], mut work: Vec<usize>) -> bool {
        let q = self.quandle;
        while let Some(v) = work.pop() {
            for &ri in &self.touching[v] {
                let r = self.rels[ri];
                let (o, i, t) = (assign[r.over], assign[r.inp], assign[r.out]);
                let derived = match (o != NONE, i != NONE, t != NONE) {
                    (true, true, _) => Some((r.out, q.op_signed(o as usize, i as usize, r.sign))),
                    (true, false, true) => Some((r.inp, q.op_signed(o as usize, t as usize, -r.sign))),
                    _ => None,
                };
                if let Some((var, val)) = derived {
                    if assign[var] == NONE {
                        if !self.allowed[val] {
                            return false;
                        }
                        assign[var] = val as u32;
                        work.push(var);
                    } else if assign[var] as usize != val {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The unassigned variable with the most relations to assigned ones.
    fn pick(&self, block: &[usize], assign: &[u32]) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        for &v in block {
            if assign[v] != NONE {
                continue;
            }
            let score = self.touching[v]
                .iter()
                .filter(|&&ri| {
                    let r = self.rels[ri];
                    [r.over, r.inp, r.out].iter().any(|&w| w != v && assign[w] != NONE)
                })
                .count();
            if best.is_none_or(|(s, _)| score > s) {
                best = Some((score, v));
            }
        }
        best.map(|(_, v)| v)
    }

    fn count(&self, block: &[usize], assign: &mut [u32]) -> u64 {
        let Some(v) = self.pick(block, assign) else {
            return 1;
        };
        let mut total = 0;
        for &c in &self.domain {
            let mut next = assign.to_vec();
            next[v] = c as u32;
            if self.propagate(&mut next, vec![v]) {
                total += self.count(block, &mut next);
            }
        }
        total
    }

    /// Counts one connected block, splitting the first choice across workers.
    fn count_block(&self, block: &[usize], nvars: usize) -> u64 {
        let start = vec![NONE; nvars];
        let Some(v) = self.pick(block, &start) else {
            return 1;
        };
        let per_color = par::map_slice(&self.domain, |&c| {
            let mut a = start.clone();
            a[v] = c as u32;
            if self.propagate(&mut a, vec![v]) {
                self.count(block, &mut a)
            } else {
                0
            }
        });
        per_color.into_iter().sum()
    }
}

fn count_with_domain(diagram: &KnotDiagram, quandle: &FiniteQuandle, domain: Vec<usize>) -> BigUint {
    let n = diagram.arc_count;
    // over arcs keep their color through a crossing
    let mut parent: Vec<usize> = (0..n).collect();
    for c in &diagram.crossings {
        let (a, b) = (find(&mut parent, c.over_in), find(&mut parent, c.over_out));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut var_of = vec![usize::MAX; n];
    let mut nvars = 0;
    for a in 0..n {
        let r = find(&mut parent, a);
        if var_of[r] == usize::MAX {
            var_of[r] = nvars;
            nvars += 1;
        }
        var_of[a] = var_of[r];
    }
    let rels: Vec<Rel> = diagram
        .crossings
        .iter()
        .map(|c| Rel {
            over: var_of[c.over_in],
            inp: var_of[c.under_in],
            out: var_of[c.under_out],
            sign: c.sign,
        })
        .collect();
    let mut touching = vec![Vec::new(); nvars];
    for (i, r) in rels.iter().enumerate() {
        for v in [r.over, r.inp, r.out] {
            if touching[v].last() != Some(&i) {
                touching[v].push(i);
            }
        }
    }

    // independent blocks multiply
    let mut bparent: Vec<usize> = (0..nvars).collect();
    for r in &rels {
        for v in [r.inp, r.out] {
            let (a, b) = (find(&mut bparent, r.over), find(&mut bparent, v));
            if a != b {
                bparent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut block_of = vec![usize::MAX; nvars];
    for v in 0..nvars {
        let r = find(&mut bparent, v);
        if block_of[r] == usize::MAX {
            block_of[r] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[block_of[r]].push(v);
    }

    let mut allowed = vec![false; quandle.size()];
    for &c in &domain {
        allowed[c] = true;
    }
    let solver = Solver {
        quandle,
        rels,
        touching,
        allowed,
        domain,
    };
    let mut total = BigUint::from(1u32);
    for block in &blocks {
        total *= BigUint::from(solver.count_block(block, nvars));
        if total == BigUint::ZERO {
            break;
        }
    }
    total
}

/// Number of quandle colorings of the diagram. With `by_orbit`, also counts
/// the colorings confined to each `Inn(Q)`-orbit.
pub fn count_colorings(diagram: &KnotDiagram, quandle: &FiniteQuandle, by_orbit: bool) -> ColoringCount {
    let total = count_with_domain(diagram, quandle, (0..quandle.size()).collect());
    let by_orbit = by_orbit.then(|| {
        orbits(quandle)
            .orbits
            .into_iter()
            .map(|o| count_with_domain(diagram, quandle, o))
            .collect()
    });
    ColoringCount { total, by_orbit }
}

/// Checks every labeling of the arcs; usable only on tiny inputs.
pub fn count_colorings_brute_force(diagram: &KnotDiagram, quandle: &FiniteQuandle) -> BigUint {
    let n = diagram.arc_count;
    let k = quandle.size();
    let mut labels = vec![0usize; n];
    let mut count = BigUint::ZERO;
    if k == 0 {
        return count;
    }
    loop {
        let ok = diagram.crossings.iter().all(|c| {
            labels[c.over_in] == labels[c.over_out]
                && labels[c.under_out] == quandle.op_signed(labels[c.over_in], labels[c.under_in], c.sign)
        });
        if ok {
            count += 1u32;
        }
        let mut i = 0;
        while i < n && labels[i] + 1 == k {
            labels[i] = 0;
            i += 1;
        }
        if i == n {
            return count;
        }
        labels[i] += 1;
    }
}

/// True iff both diagrams have the same number of colorings by `quandle`.
pub fn invariance_check(d1: &KnotDiagram, d2: &KnotDiagram, quandle: &FiniteQuandle) -> bool {
    count_colorings(d1, quandle, false).total == count_colorings(d2, quandle, false).total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{alexander, dihedral, trivial, AlexanderParam};
    use crate::knots::{parse_braid, parse_pd};

    const TREFOIL: &str = "X[1,4,2,5];X[3,6,4,1];X[5,2,6,3]";
    const FIGURE_EIGHT: &str = "X[4,2,5,1];X[8,6,1,5];X[6,3,7,4];X[2,7,3,8]";

    #[test]
    fn trefoil_and_figure_eight() {
        let r3 = dihedral(3).unwrap().quandle;
        let r5 = dihedral(5).unwrap().quandle;
        let t = parse_pd(TREFOIL).unwrap();
        let f = parse_pd(FIGURE_EIGHT).unwrap();
        assert_eq!(count_colorings(&t, &r3, false).total, count_colorings_brute_force(&t, &r3));
        assert_eq!(count_colorings(&f, &r5, false).total, count_colorings_brute_force(&f, &r5));
        assert_eq!(count_colorings(&t, &r3, false).total, BigUint::from(9u32));
        assert_eq!(count_colorings(&f, &r5, false).total, BigUint::from(25u32));
    }

    #[test]
    fn unknot_and_trivial_quandle() {
        let q = alexander(5, 1, &AlexanderParam::Scalar(2)).unwrap().quandle;
        let u = KnotDiagram::unknot();
        assert_eq!(count_colorings(&u, &q, false).total, BigUint::from(5u32));
        let t4 = trivial(4).unwrap().quandle;
        for d in [parse_pd(TREFOIL).unwrap(), parse_pd(FIGURE_EIGHT).unwrap()] {
            assert_eq!(count_colorings(&d, &t4, false).total, BigUint::from(4u32));
        }
        let unlink = parse_braid("s1 s1'", 2).unwrap();
        assert_eq!(count_colorings(&unlink, &t4, false).total, BigUint::from(16u32));
        assert_eq!(count_colorings(&unlink, &q, false).total, BigUint::from(25u32));
    }

    #[test]
    fn braid_trefoil_matches_pd() {
        let r3 = dihedral(3).unwrap().quandle;
        let pd = parse_pd(TREFOIL).unwrap();
        let braid = parse_braid("s1 s1 s1", 2).unwrap();
        assert!(invariance_check(&pd, &braid, &r3));
        assert!(invariance_check(&pd, &pd, &r3));
    }

    #[test]
    fn by_orbit_sums_to_total_for_knots() {
        let r4 = dihedral(4).unwrap().quandle;
        let t = parse_pd(TREFOIL).unwrap();
        let c = count_colorings(&t, &r4, true);
        let sum: BigUint = c.by_orbit.as_ref().unwrap().iter().sum();
        assert_eq!(sum, c.total);
        assert_eq!(c.total, count_colorings_brute_force(&t, &r4));
    }

    #[test]
    fn mirror_counts_match_brute_force() {
        let q = alexander(7, 1, &AlexanderParam::Scalar(3)).unwrap().quandle;
        let t = parse_pd(TREFOIL).unwrap();
        let m = t.mirror();
        assert_eq!(count_colorings(&m, &q, false).total, count_colorings_brute_force(&m, &q));
        assert_eq!(count_colorings(&t, &q, false).total, count_colorings_brute_force(&t, &q));
    }
}
