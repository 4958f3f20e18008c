//! Finite quandles on the carrier `{0..n-1}`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{AxiomViolation, Error, Result};
use crate::par;
use crate::perm::Perm;

/// Maximum number of axiom violations collected by [`FiniteQuandle::validate`].
pub const MAX_WITNESSES: usize = 100;

/// A validated finite quandle. Both `▷` and `▷⁻¹` tables are materialized
/// row-major; the value is immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteQuandle {
    size: usize,
    op: Vec<u32>,
    inv: Vec<u32>,
}

/// The symmetry `s_q : r ↦ q ▷ r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementSymmetry {
    pub base: usize,
    pub perm: Perm,
}

impl std::fmt::Debug for FiniteQuandle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteQuandle")
            .field("size", &self.size)
            .field("table", &self.table())
            .finish()
    }
}

impl FiniteQuandle {
    /// Validates an operation table (and optionally a `▷⁻¹` table). All
    /// violations are reported, up to [`MAX_WITNESSES`].
    pub fn validate(table: &[Vec<i64>], inv_table: Option<&[Vec<i64>]>) -> Result<FiniteQuandle> {
        let op = flatten_checked(table)?;
        let n = table.len();
        let inv = match inv_table {
            Some(t) => {
                if t.len() != n {
                    return Err(Error::Shape(format!(
                        "inverse table has {} rows, expected {n}",
                        t.len()
                    )));
                }
                Some(flatten_checked(t)?)
            }
            None => None,
        };
        Self::from_flat(n, op, inv)
    }

    /// Validates a row-major table of `u32` entries.
    pub fn from_flat(n: usize, op: Vec<u32>, inv: Option<Vec<u32>>) -> Result<FiniteQuandle> {
        if n == 0 {
            return Err(Error::Shape("a quandle needs at least one element".into()));
        }
        assert_eq!(op.len(), n * n);
        let violations = check_axioms(n, &op, inv.as_deref());
        if !violations.is_empty() {
            return Err(Error::Axioms(violations));
        }
        let inv = inv.unwrap_or_else(|| invert_rows(n, &op));
        Ok(FiniteQuandle { size: n, op, inv })
    }

    /// Builds a table from `f(q, r) = q ▷ r` and validates it.
    pub fn from_fn<F>(n: usize, f: F) -> Result<FiniteQuandle>
    where
        F: Fn(usize, usize) -> usize,
    {
        let mut op = Vec::with_capacity(n * n);
        for q in 0..n {
            for r in 0..n {
                let v = f(q, r);
                if v >= n {
                    return Err(Error::Range {
                        row: q,
                        col: r,
                        value: v as i64,
                        size: n,
                    });
                }
                op.push(v as u32);
            }
        }
        Self::from_flat(n, op, None)
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    /// `q ▷ r`.
    #[inline]
    pub fn op(&self, q: usize, r: usize) -> usize {
        self.op[q * self.size + r] as usize
    }

    /// `q ▷⁻¹ r`.
    #[inline]
    pub fn inv_op(&self, q: usize, r: usize) -> usize {
        self.inv[q * self.size + r] as usize
    }

    /// `q ▷^{±1} r` with `sign` ±1.
    #[inline]
    pub fn op_signed(&self, q: usize, r: usize, sign: i8) -> usize {
        if sign >= 0 {
            self.op(q, r)
        } else {
            self.inv_op(q, r)
        }
    }

    pub fn row(&self, q: usize) -> &[u32] {
        &self.op[q * self.size..(q + 1) * self.size]
    }

    pub fn inv_row(&self, q: usize) -> &[u32] {
        &self.inv[q * self.size..(q + 1) * self.size]
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.size)
            .map(|q| self.row(q).iter().map(|&x| x as usize).collect())
            .collect()
    }

    fn check_index(&self, q: usize) -> Result<()> {
        if q >= self.size {
            return Err(Error::Index {
                index: q,
                size: self.size,
            });
        }
        Ok(())
    }

    pub fn symmetry(&self, q: usize) -> Result<ElementSymmetry> {
        self.check_index(q)?;
        Ok(ElementSymmetry {
            base: q,
            perm: self.symmetry_perm(q),
        })
    }

    pub(crate) fn symmetry_perm(&self, q: usize) -> Perm {
        Perm::from_images_unchecked(self.row(q).to_vec())
    }

    /// All symmetries `s_0, …, s_{n-1}` as permutations.
    pub fn symmetries(&self) -> Vec<Perm> {
        (0..self.size).map(|q| self.symmetry_perm(q)).collect()
    }

    /// The right translation `t_q : r ↦ r ▷ q`. Not necessarily bijective.
    pub fn right_translation(&self, q: usize) -> Result<Vec<usize>> {
        self.check_index(q)?;
        Ok((0..self.size).map(|r| self.op(r, q)).collect())
    }

    /// True iff `f` is an automorphism of this quandle.
    pub fn is_automorphism(&self, f: &Perm) -> bool {
        let n = self.size;
        f.degree() == n
            && par::all_range(n, |q| {
                (0..n).all(|r| f.apply(self.op(q, r)) == self.op(f.apply(q), f.apply(r)))
            })
    }

    /// Closure of `seed` under `▷` and `▷⁻¹`, re-indexed in increasing order,
    /// together with the embedding into `self`.
    pub fn subquandle_closure(&self, seed: &[usize]) -> Result<(FiniteQuandle, Vec<usize>)> {
        if seed.is_empty() {
            return Err(Error::Shape("subquandle closure needs a nonempty seed".into()));
        }
        for &s in seed {
            self.check_index(s)?;
        }
        let closed = self.close_subset(seed);
        let sub = self.restrict(&closed)?;
        Ok((sub, closed))
    }

    /// Sorted closure of a subset under both operations.
    pub fn close_subset(&self, seed: &[usize]) -> Vec<usize> {
        let n = self.size;
        let mut member = vec![false; n];
        let mut elems = Vec::new();
        for &s in seed {
            if !member[s] {
                member[s] = true;
                elems.push(s);
            }
        }
        let mut done = 0;
        while done < elems.len() {
            let x = elems[done];
            let mut i = 0;
            while i <= done {
                let y = elems[i];
                for v in [self.op(x, y), self.op(y, x), self.inv_op(x, y), self.inv_op(y, x)] {
                    if !member[v] {
                        member[v] = true;
                        elems.push(v);
                    }
                }
                i += 1;
            }
            done += 1;
        }
        elems.sort_unstable();
        elems
    }

    /// The quandle on a closed subset, indexed by position in `subset`.
    pub fn restrict(&self, subset: &[usize]) -> Result<FiniteQuandle> {
        let mut pos = vec![u32::MAX; self.size];
        for (i, &x) in subset.iter().enumerate() {
            pos[x] = i as u32;
        }
        let m = subset.len();
        let mut op = Vec::with_capacity(m * m);
        for &x in subset {
            for &y in subset {
                let v = pos[self.op(x, y)];
                if v == u32::MAX {
                    return Err(Error::NotClosed(x, y));
                }
                op.push(v);
            }
        }
        FiniteQuandle::from_flat(m, op, None)
    }

    /// Classes of elements with identical symmetries (`s_x = s_y`).
    pub fn symmetry_classes(&self) -> Vec<Vec<usize>> {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut rows: Vec<&[u32]> = Vec::new();
        for q in 0..self.size {
            match rows.iter().position(|r| *r == self.row(q)) {
                Some(i) => classes[i].push(q),
                None => {
                    rows.push(self.row(q));
                    classes.push(vec![q]);
                }
            }
        }
        classes
    }

    pub fn to_file(&self, labels: Option<Vec<String>>) -> QuandleFile {
        QuandleFile {
            size: self.size,
            table: self.table(),
            labels,
        }
    }
}

fn flatten_checked(table: &[Vec<i64>]) -> Result<Vec<u32>> {
    let n = table.len();
    let mut flat = Vec::with_capacity(n * n);
    for (q, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Shape(format!(
                "row {q} has {} entries, expected {n}",
                row.len()
            )));
        }
        for (r, &v) in row.iter().enumerate() {
            if v < 0 || v as usize >= n {
                return Err(Error::Range {
                    row: q,
                    col: r,
                    value: v,
                    size: n,
                });
            }
            flat.push(v as u32);
        }
    }
    Ok(flat)
}

fn invert_rows(n: usize, op: &[u32]) -> Vec<u32> {
    let mut inv = vec![0u32; n * n];
    for q in 0..n {
        for r in 0..n {
            inv[q * n + op[q * n + r] as usize] = r as u32;
        }
    }
    inv
}

fn check_axioms(n: usize, op: &[u32], inv: Option<&[u32]>) -> Vec<AxiomViolation> {
    let at = |q: usize, r: usize| op[q * n + r] as usize;
    let mut out = Vec::new();

    for q in 0..n {
        if at(q, q) != q {
            out.push(AxiomViolation {
                axiom: 1,
                witness: vec![q],
            });
        }
    }

    for q in 0..n {
        let mut hit = vec![None::<usize>; n];
        for r in 0..n {
            let v = at(q, r);
            if let Some(first) = hit[v] {
                // two preimages of the same value
                out.push(AxiomViolation {
                    axiom: 2,
                    witness: vec![q, first, r],
                });
            } else {
                hit[v] = Some(r);
            }
        }
        if let Some(inv) = inv {
            for r in 0..n {
                if inv[q * n + at(q, r)] as usize != r {
                    out.push(AxiomViolation {
                        axiom: 2,
                        witness: vec![q, r],
                    });
                }
            }
        }
    }
    if out.len() >= MAX_WITNESSES {
        out.truncate(MAX_WITNESSES);
        return out;
    }

    // Left distributivity, swept per q; each slice is capped so the merged
    // list is the same prefix regardless of scheduling.
    let budget = MAX_WITNESSES - out.len();
    let per_q = par::map_range(n, |q| {
        let mut found = Vec::new();
        for r in 0..n {
            let qr = at(q, r);
            for s in 0..n {
                if at(q, at(r, s)) != at(qr, at(q, s)) {
                    found.push(AxiomViolation {
                        axiom: 3,
                        witness: vec![q, r, s],
                    });
                    if found.len() >= budget {
                        return found;
                    }
                }
            }
        }
        found
    });
    out.extend(per_q.into_iter().flatten().take(budget));
    out
}

/// JSON interchange form of a quandle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuandleFile {
    pub size: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

/// Raw form used when reading untrusted files: entries may be negative.
#[derive(Deserialize)]
struct RawQuandleFile {
    size: usize,
    table: Vec<Vec<i64>>,
    #[serde(default)]
    labels: Option<Vec<String>>,
}

impl QuandleFile {
    /// Parses and validates a quandle JSON document.
    pub fn parse(text: &str) -> Result<(FiniteQuandle, Option<Vec<String>>)> {
        let raw: RawQuandleFile = serde_json::from_str(text)?;
        Self::from_raw(raw)
    }

    pub fn parse_value(value: serde_json::Value) -> Result<(FiniteQuandle, Option<Vec<String>>)> {
        let raw: RawQuandleFile = serde_json::from_value(value)?;
        Self::from_raw(raw)
    }

    fn from_raw(raw: RawQuandleFile) -> Result<(FiniteQuandle, Option<Vec<String>>)> {
        if raw.table.len() != raw.size {
            return Err(Error::Shape(format!(
                "size is {} but table has {} rows",
                raw.size,
                raw.table.len()
            )));
        }
        if let Some(l) = &raw.labels {
            if l.len() != raw.size {
                return Err(Error::Shape(format!(
                    "{} labels for {} elements",
                    l.len(),
                    raw.size
                )));
            }
        }
        let q = FiniteQuandle::validate(&raw.table, None)?;
        Ok((q, raw.labels))
    }
}

/// Elements reachable from `seed` by repeatedly applying `step`, sorted.
pub(crate) fn closure_under<F>(n: usize, seed: &[usize], mut step: F) -> Vec<usize>
where
    F: FnMut(usize, &mut dyn FnMut(usize)),
{
    let mut member = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    for &s in seed {
        if !member[s] {
            member[s] = true;
            stack.push(s);
        }
    }
    let mut all = stack.clone();
    while let Some(x) = stack.pop() {
        step(x, &mut |y| {
            if !member[y] {
                member[y] = true;
                stack.push(y);
                all.push(y);
            }
        });
    }
    let set: BTreeSet<usize> = all.into_iter().collect();
    set.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(n: usize, f: impl Fn(i64, i64) -> i64) -> Vec<Vec<i64>> {
        (0..n as i64)
            .map(|q| (0..n as i64).map(|r| f(q, r)).collect())
            .collect()
    }

    #[test]
    fn dihedral_three_is_valid() {
        let q = FiniteQuandle::validate(&table(3, |i, j| (2 * i - j).rem_euclid(3)), None).unwrap();
        assert_eq!(q.size(), 3);
        // s_0 on R_3 swaps 1 and 2
        assert_eq!(q.symmetry(0).unwrap().perm.to_string(), "(1 2)");
        assert!(q.is_automorphism(&q.symmetry(0).unwrap().perm));
    }

    #[test]
    fn trivial_table_is_valid_and_translations_are_constant() {
        for n in 1..6 {
            let q = FiniteQuandle::validate(&table(n, |_, r| r), None).unwrap();
            for x in 0..n {
                assert!(q.symmetry(x).unwrap().perm.is_identity());
                assert_eq!(q.right_translation(x).unwrap(), vec![x; n]);
            }
        }
    }

    #[test]
    fn idempotence_violation_is_reported() {
        let t = vec![vec![1, 0], vec![0, 1]];
        match FiniteQuandle::validate(&t, None) {
            Err(Error::Axioms(v)) => {
                assert!(v.contains(&AxiomViolation {
                    axiom: 1,
                    witness: vec![0]
                }));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn out_of_range_and_shape_errors() {
        assert!(matches!(
            FiniteQuandle::validate(&[vec![0, 2], vec![0, 1]], None),
            Err(Error::Range { row: 0, col: 1, .. })
        ));
        assert!(matches!(
            FiniteQuandle::validate(&[vec![0, -1], vec![0, 1]], None),
            Err(Error::Range { value: -1, .. })
        ));
        assert!(matches!(
            FiniteQuandle::validate(&[vec![0], vec![0, 1]], None),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn witnesses_are_capped() {
        // op[q][r] = 0 everywhere on 12 points violates everything
        let t = vec![vec![0i64; 12]; 12];
        match FiniteQuandle::validate(&t, None) {
            Err(Error::Axioms(v)) => assert_eq!(v.len(), MAX_WITNESSES),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn wrong_inverse_table_is_axiom_two() {
        let t = table(3, |i, j| (2 * i - j).rem_euclid(3));
        let bad_inv = table(3, |_, j| j);
        match FiniteQuandle::validate(&t, Some(&bad_inv)) {
            Err(Error::Axioms(v)) => assert!(v.iter().all(|w| w.axiom == 2)),
            other => panic!("unexpected {other:?}"),
        }
        let q = FiniteQuandle::validate(&t, Some(&t)).unwrap();
        assert_eq!(q.inv_op(1, 0), 2);
    }

    #[test]
    fn right_translation_of_alexander_five() {
        // v ▷ w = v + 2(w - v) on F_5: t_0(r) = r + 2(0 - r) = -r
        let q = FiniteQuandle::validate(&table(5, |v, w| (v + 2 * (w - v)).rem_euclid(5)), None).unwrap();
        assert_eq!(q.right_translation(0).unwrap(), vec![0, 4, 3, 2, 1]);
        let r3 = FiniteQuandle::validate(&table(3, |i, j| (2 * i - j).rem_euclid(3)), None).unwrap();
        let mut col = r3.right_translation(1).unwrap();
        col.sort();
        assert_eq!(col, vec![0, 1, 2]);
        assert!(r3.right_translation(3).is_err());
    }

    #[test]
    fn closure_of_whole_carrier_and_singletons() {
        let r3 = FiniteQuandle::validate(&table(3, |i, j| (2 * i - j).rem_euclid(3)), None).unwrap();
        let (sub, emb) = r3.subquandle_closure(&[0, 1, 2]).unwrap();
        assert_eq!(sub, r3);
        assert_eq!(emb, vec![0, 1, 2]);
        // in R_3 any two points generate everything, one point only itself
        assert_eq!(r3.subquandle_closure(&[1]).unwrap().1, vec![1]);
        assert_eq!(r3.subquandle_closure(&[0, 2]).unwrap().1, vec![0, 1, 2]);
        let triv = FiniteQuandle::validate(&table(4, |_, r| r), None).unwrap();
        let (s, e) = triv.subquandle_closure(&[2]).unwrap();
        assert_eq!((s.size(), e), (1, vec![2]));
        assert!(triv.subquandle_closure(&[]).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let r3 = FiniteQuandle::validate(&table(3, |i, j| (2 * i - j).rem_euclid(3)), None).unwrap();
        let text = serde_json::to_string(&r3.to_file(None)).unwrap();
        assert_eq!(text, r#"{"size":3,"table":[[0,2,1],[2,1,0],[1,0,2]]}"#);
        let (back, labels) = QuandleFile::parse(&text).unwrap();
        assert_eq!(back, r3);
        assert!(labels.is_none());
        assert!(QuandleFile::parse(r#"{"size":2,"table":[[0,1]]}"#).is_err());
    }
}
