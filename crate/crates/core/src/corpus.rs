//! A fixed corpus of small quandles spanning every construction family.

use crate::constructions::{
    alexander, conj_class, conjugation, det_mod_p, dihedral, phi_space, section5_example, trivial,
    unipotent_class_quandle, vedernikov, AlexanderParam,
};
use crate::error::Result;
use crate::group::{all_automorphisms, matrix_group_sl2, FiniteGroup, GroupAutomorphism};
use crate::quandle::FiniteQuandle;

fn inverse_map(g: &FiniteGroup) -> GroupAutomorphism {
    GroupAutomorphism::new(g, (0..g.order()).map(|x| g.inv(x)).collect())
        .expect("inversion of an abelian group is an automorphism")
}

/// Every invertible 2×2 matrix over F_p.
fn gl2(p: u32) -> Vec<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    let m = vec![vec![a, b], vec![c, d]];
                    if det_mod_p(&m, p) != 0 {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

/// Named groups used by the corpus: S_3, S_4, Z/8 and SL₂(F_3).
pub fn corpus_groups() -> Vec<(String, FiniteGroup)> {
    vec![
        ("S3".to_string(), FiniteGroup::symmetric(3)),
        ("S4".to_string(), FiniteGroup::symmetric(4)),
        ("Z8".to_string(), FiniteGroup::cyclic(8)),
        (
            "SL2(3)".to_string(),
            matrix_group_sl2(3).expect("3 is a supported prime").0,
        ),
    ]
}

/// The standard corpus, in a fixed order:
/// trivial `n ≤ 12`; dihedral `3 ≤ n ≤ 12`; Alexander over F_3, F_5, F_7 in
/// dimension 1 and 2 with every invertible scalar, plus every matrix of
/// GL₂(F_3); conjugation quandles and every conjugacy class of S_3, S_4, Z/8
/// and SL₂(F_3); φ-spaces `(Z/n, -1, H)` for `3 ≤ n ≤ 12` and every `H`
/// inside the fixed subgroup; Vedernikov quandles of S_3 for every
/// automorphism; the section-5 family for `p ∈ {3, 5}`, `n ∈ {2, 3}`; and the
/// unipotent classes for `p ∈ {3, 5}`.
pub fn standard_corpus() -> Result<Vec<(String, FiniteQuandle)>> {
    let mut out: Vec<(String, FiniteQuandle)> = Vec::new();
    for n in 1..=12 {
        out.push((format!("trivial({n})"), trivial(n)?.quandle));
    }
    for n in 3..=12 {
        out.push((format!("dihedral({n})"), dihedral(n)?.quandle));
    }
    for p in [3u32, 5, 7] {
        for n in 1..=2 {
            for a in 1..p {
                let q = alexander(p, n, &AlexanderParam::Scalar(a))?.quandle;
                out.push((format!("alexander({p},{n},{a})"), q));
            }
        }
    }
    for m in gl2(3) {
        let name = format!("alexander(3,2,{m:?})");
        out.push((name, alexander(3, 2, &AlexanderParam::Matrix(m))?.quandle));
    }
    for (name, g) in corpus_groups() {
        out.push((format!("conj({name})"), conjugation(&g)?.quandle));
        let mut seen = vec![false; g.order()];
        for x in 0..g.order() {
            if seen[x] {
                continue;
            }
            let class = g.conjugacy_class(x)?;
            for &y in &class {
                seen[y] = true;
            }
            out.push((
                format!("conj_class({name},{})", g.label(x)),
                conj_class(&g, x)?.quandle,
            ));
        }
    }
    for n in 3..=12 {
        let g = FiniteGroup::cyclic(n);
        let phi = inverse_map(&g);
        let mut subgroups = vec![vec![0]];
        if n % 2 == 0 {
            subgroups.push(vec![0, n / 2]);
        }
        for h in subgroups {
            let q = phi_space(&g, &phi, &h, 0)?.quandle;
            out.push((format!("phi_space(Z{n},-1,{h:?})"), q));
        }
    }
    let s3 = FiniteGroup::symmetric(3);
    for (i, phi) in all_automorphisms(&s3, 64)?.iter().enumerate() {
        out.push((format!("vedernikov(S3,aut{i})"), vedernikov(&s3, phi)?.quandle));
    }
    for p in [3u32, 5] {
        for n in 2..=3 {
            out.push((format!("section5({p},{n})"), section5_example(p, n)?.quandle));
        }
    }
    for p in [3u32, 5] {
        out.push((format!("unipotent_class({p})"), unipotent_class_quandle(p)?.quandle));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_deterministic_and_covers_families() {
        let a = standard_corpus().unwrap();
        let b = standard_corpus().unwrap();
        assert_eq!(a.len(), b.len());
        assert!(a.iter().zip(&b).all(|(x, y)| x.0 == y.0 && x.1 == y.1));
        for prefix in [
            "trivial", "dihedral", "alexander", "conj(", "conj_class", "phi_space", "vedernikov",
            "section5", "unipotent",
        ] {
            assert!(a.iter().any(|(n, _)| n.starts_with(prefix)), "{prefix}");
        }
        // 48 matrices in GL2(F_3)
        assert_eq!(a.iter().filter(|(n, _)| n.starts_with("alexander(3,2,[")).count(), 48);
        assert_eq!(a.iter().filter(|(n, _)| n.starts_with("vedernikov")).count(), 6);
    }
}
