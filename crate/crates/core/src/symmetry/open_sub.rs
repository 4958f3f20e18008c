use serde::Serialize;

use super::orbits::orbits;
use crate::error::{Error, Result};
use crate::group::orbit_of;
use crate::perm::Perm;
use crate::quandle::{closure_under, FiniteQuandle};

/// Orbits of one point of `Q` under the groups generated by a subquandle
/// `U` and by all of `Q`, acting through symmetries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointComparison {
    pub point: usize,
    pub op_sub: Vec<usize>,
    pub op_full: Vec<usize>,
    pub tr_sub: Vec<usize>,
    pub tr_full: Vec<usize>,
    pub op_equal: bool,
    pub tr_equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OpenSubquandleReport {
    pub subset: Vec<usize>,
    /// `U` meets every `Inn(Q)`-orbit.
    pub meets_every_orbit: bool,
    /// A finite carrier has the discrete topology, so `U` is dense only if
    /// it is all of `Q`.
    pub dense: bool,
    pub hypothesis_failure: bool,
    pub points: Vec<PointComparison>,
    /// Every point has equal `Op` and equal `Tr` orbits.
    pub orbits_equal: bool,
}

/// Compares `Op(U, Q)z` with `Op(Q, Q)z` and `Tr(U, Q)z` with `Tr(Q, Q)z`
/// for every `z`, where `U ⊆ Q` is a subquandle acting on `Q`.
pub fn open_subquandle_check(quandle: &FiniteQuandle, subset: &[usize]) -> Result<OpenSubquandleReport> {
    let n = quandle.size();
    if subset.is_empty() {
        return Err(Error::Shape("the subquandle must be nonempty".into()));
    }
    let mut u = subset.to_vec();
    u.sort_unstable();
    u.dedup();
    if let Some(&bad) = u.iter().find(|&&x| x >= n) {
        return Err(Error::Index { index: bad, size: n });
    }
    quandle.restrict(&u)?;

    let dec = orbits(quandle);
    let mut hit = vec![false; dec.len()];
    for &x in &u {
        hit[dec.orbit_id[x]] = true;
    }
    let dense = u.len() == n;

    let tr_gens = |elems: &[usize]| -> Vec<Perm> {
        let base_inv = quandle.symmetry_perm(elems[0]).inverse();
        elems[1..]
            .iter()
            .map(|&x| quandle.symmetry_perm(x).compose(&base_inv))
            .collect()
    };
    let all: Vec<usize> = (0..n).collect();
    let (tr_u, tr_q) = (tr_gens(&u), tr_gens(&all));
    let op_orbit = |elems: &[usize], z: usize| {
        closure_under(n, &[z], |x, push| {
            for &q in elems {
                push(quandle.op(q, x));
                push(quandle.inv_op(q, x));
            }
        })
    };
    let points: Vec<PointComparison> = (0..n)
        .map(|z| {
            let op_sub = op_orbit(&u, z);
            let op_full = op_orbit(&all, z);
            let tr_sub = orbit_of(n, &tr_u, z);
            let tr_full = orbit_of(n, &tr_q, z);
            PointComparison {
                point: z,
                op_equal: op_sub == op_full,
                tr_equal: tr_sub == tr_full,
                op_sub,
                op_full,
                tr_sub,
                tr_full,
            }
        })
        .collect();
    let orbits_equal = points.iter().all(|p| p.op_equal && p.tr_equal);
    Ok(OpenSubquandleReport {
        subset: u,
        meets_every_orbit: hit.iter().all(|&h| h),
        dense,
        hypothesis_failure: !dense,
        points,
        orbits_equal,
    })
}
