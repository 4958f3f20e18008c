//! Quandle families. Every constructor validates its output and returns a
//! [`ConstructionRecord`] that reproduces the table when replayed.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::group::{is_prime, matrix_group_sl2, FiniteGroup, GroupAutomorphism, GroupFile};
use crate::quandle::{FiniteQuandle, QuandleFile};

/// Carriers larger than this are refused by the table-building constructors.
pub const MAX_CARRIER: usize = 4096;
/// `phi_space` checks every pair of representatives up to this group order.
pub const EXHAUSTIVE_WELL_DEFINED_LIMIT: usize = 512;
pub(crate) const SAMPLED_WELL_DEFINED_PAIRS: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Trivial,
    Cocycle,
    Conj,
    ConjClass,
    PhiSpace,
    Vedernikov,
    Alexander,
    Dihedral,
    Section5,
    UnipotentClass,
}

/// Provenance of a constructed quandle.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConstructionRecord {
    pub family: Family,
    pub parameters: BTreeMap<String, Value>,
    pub labeling: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct Construction {
    pub quandle: FiniteQuandle,
    pub record: ConstructionRecord,
}

impl Construction {
    fn new(quandle: FiniteQuandle, family: Family, parameters: Value, labeling: Vec<String>) -> Self {
        let parameters = match parameters {
            Value::Object(m) => m.into_iter().collect(),
            _ => BTreeMap::new(),
        };
        Construction {
            quandle,
            record: ConstructionRecord {
                family,
                parameters,
                labeling,
            },
        }
    }

    pub fn to_file(&self) -> QuandleFile {
        self.quandle.to_file(Some(self.record.labeling.clone()))
    }
}

fn guard(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Shape("empty carrier".into()));
    }
    if n > MAX_CARRIER {
        return Err(Error::TooLarge {
            size: n,
            limit: MAX_CARRIER,
        });
    }
    Ok(())
}

pub fn trivial(n: usize) -> Result<Construction> {
    guard(n)?;
    let q = FiniteQuandle::from_fn(n, |_, r| r)?;
    Ok(Construction::new(
        q,
        Family::Trivial,
        json!({ "n": n }),
        (0..n).map(|i| i.to_string()).collect(),
    ))
}

/// The dihedral quandle `R_n`: `i ▷ j = 2i − j mod n`.
pub fn dihedral(n: usize) -> Result<Construction> {
    guard(n)?;
    let q = FiniteQuandle::from_fn(n, |i, j| (2 * i + n - j) % n)?;
    Ok(Construction::new(
        q,
        Family::Dihedral,
        json!({ "n": n }),
        (0..n).map(|i| i.to_string()).collect(),
    ))
}

/// Extension of the trivial quandle on `x_size` points by an abelian group:
/// `(x, a) ▷ (y, b) = (y, b + F(x, y))`, elements ordered lexicographically.
pub fn cocycle_extension(x_size: usize, group: &FiniteGroup, cocycle: &[Vec<usize>]) -> Result<Construction> {
    let k = group.order();
    guard(x_size * k)?;
    if let Some((a, b)) = group.is_abelian() {
        return Err(Error::NotAbelian(a, b));
    }
    if cocycle.len() != x_size || cocycle.iter().any(|row| row.len() != x_size) {
        return Err(Error::Shape(format!("cocycle must be a {x_size}×{x_size} table")));
    }
    for (x, row) in cocycle.iter().enumerate() {
        for (y, &v) in row.iter().enumerate() {
            if v >= k {
                return Err(Error::Range {
                    row: x,
                    col: y,
                    value: v as i64,
                    size: k,
                });
            }
        }
    }
    let bad: Vec<usize> = (0..x_size).filter(|&x| cocycle[x][x] != group.identity()).collect();
    if !bad.is_empty() {
        return Err(Error::Cocycle(bad));
    }
    let q = FiniteQuandle::from_fn(x_size * k, |u, v| {
        let (x, _) = (u / k, u % k);
        let (y, b) = (v / k, v % k);
        y * k + group.mul(b, cocycle[x][y])
    })?;
    let labels = (0..x_size * k)
        .map(|u| format!("({},{})", u / k, group.label(u % k)))
        .collect();
    Ok(Construction::new(
        q,
        Family::Cocycle,
        json!({ "x_size": x_size, "group": group.to_file(), "cocycle": cocycle }),
        labels,
    ))
}

/// Conjugation quandle `g ▷ h = g⁻¹ h g` on all of `G`.
pub fn conjugation(group: &FiniteGroup) -> Result<Construction> {
    let n = group.order();
    guard(n)?;
    let q = FiniteQuandle::from_fn(n, |g, h| group.mul(group.mul(group.inv(g), h), g))?;
    Ok(Construction::new(
        q,
        Family::Conj,
        json!({ "group": group.to_file() }),
        group.labels().to_vec(),
    ))
}

/// Conjugation quandle restricted to the class of `g`, elements in
/// increasing group index.
pub fn conj_class(group: &FiniteGroup, g: usize) -> Result<Construction> {
    let class = group.conjugacy_class(g)?;
    let c = conj_class_on(group, &class)?;
    let labels = class.iter().map(|&x| group.label(x).to_string()).collect();
    Ok(Construction::new(
        c,
        Family::ConjClass,
        json!({ "group": group.to_file(), "element": g }),
        labels,
    ))
}

fn conj_class_on(group: &FiniteGroup, class: &[usize]) -> Result<FiniteQuandle> {
    guard(class.len())?;
    let pos = |x: usize| class.binary_search(&x).expect("class is closed under conjugation");
    FiniteQuandle::from_fn(class.len(), |i, j| {
        let (g, h) = (class[i], class[j]);
        pos(group.mul(group.mul(group.inv(g), h), g))
    })
}

/// The coset quandle `xH ▷ yH = x φ(x⁻¹ y) H` on `G/H`, for `H ⊆ G^φ`.
pub fn phi_space(
    group: &FiniteGroup,
    phi: &GroupAutomorphism,
    subgroup: &[usize],
    seed: u64,
) -> Result<Construction> {
    group.check_subgroup(subgroup)?;
    let moved: Vec<usize> = subgroup.iter().copied().filter(|&h| phi.apply(h) != h).collect();
    if !moved.is_empty() {
        return Err(Error::NotFixed(moved));
    }
    let cosets = group.cosets(subgroup)?;
    guard(cosets.len())?;
    let raw = |x: usize, y: usize| group.mul(x, phi.apply(group.mul(group.inv(x), y)));
    let q = FiniteQuandle::from_fn(cosets.len(), |i, j| {
        cosets.coset_of(raw(cosets.reps[i], cosets.reps[j]))
    })?;

    // recompute with other representatives
    let n = group.order();
    let check = |x: usize, y: usize| -> Result<()> {
        let expect = q.op(cosets.coset_of(x), cosets.coset_of(y));
        if cosets.coset_of(raw(x, y)) != expect {
            return Err(Error::NotWellDefined((x, y)));
        }
        Ok(())
    };
    if n <= EXHAUSTIVE_WELL_DEFINED_LIMIT {
        for x in 0..n {
            for y in 0..n {
                check(x, y)?;
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..SAMPLED_WELL_DEFINED_PAIRS {
            check(rng.gen_range(0..n), rng.gen_range(0..n))?;
        }
    }
    let labels = cosets
        .reps
        .iter()
        .map(|&r| format!("{}H", group.label(r)))
        .collect();
    let mut h = subgroup.to_vec();
    h.sort_unstable();
    Ok(Construction::new(
        q,
        Family::PhiSpace,
        json!({ "group": group.to_file(), "phi": phi.map(), "subgroup": h }),
        labels,
    ))
}

/// `x ▷′ y = x φ(y x⁻¹)` on all of `G`.
pub fn vedernikov(group: &FiniteGroup, phi: &GroupAutomorphism) -> Result<Construction> {
    let n = group.order();
    guard(n)?;
    let q = FiniteQuandle::from_fn(n, |x, y| group.mul(x, phi.apply(group.mul(y, group.inv(x)))))?;
    Ok(Construction::new(
        q,
        Family::Vedernikov,
        json!({ "group": group.to_file(), "phi": phi.map() }),
        group.labels().to_vec(),
    ))
}

/// The Alexander parameter: a scalar or an `n×n` matrix over F_p.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlexanderParam {
    Scalar(u32),
    Matrix(Vec<Vec<u32>>),
}

impl AlexanderParam {
    fn matrix(&self, n: usize, p: u32) -> Result<Vec<Vec<u32>>> {
        match self {
            AlexanderParam::Scalar(a) => Ok((0..n)
                .map(|i| (0..n).map(|j| if i == j { a % p } else { 0 }).collect())
                .collect()),
            AlexanderParam::Matrix(m) => {
                if m.len() != n || m.iter().any(|r| r.len() != n) {
                    return Err(Error::Shape(format!("Alexander matrix must be {n}×{n}")));
                }
                Ok(m.iter().map(|r| r.iter().map(|x| x % p).collect()).collect())
            }
        }
    }
}

/// Determinant mod a prime by Gaussian elimination.
pub fn det_mod_p(m: &[Vec<u32>], p: u32) -> u32 {
    let n = m.len();
    let p64 = p as u64;
    let mut a: Vec<Vec<u64>> = m.iter().map(|r| r.iter().map(|&x| x as u64 % p64).collect()).collect();
    let mut det = 1u64;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| a[r][col] != 0) else {
            return 0;
        };
        if piv != col {
            a.swap(piv, col);
            det = (p64 - det) % p64;
        }
        det = det * a[col][col] % p64;
        let inv = pow_mod(a[col][col], p64 - 2, p64);
        let (top, rest) = a.split_at_mut(col + 1);
        let pivot = &top[col];
        for row in rest {
            let f = row[col] * inv % p64;
            for (x, &y) in row[col..].iter_mut().zip(&pivot[col..]) {
                *x = (*x + p64 * p64 - f * y % p64) % p64;
            }
        }
    }
    det as u32
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// Encodes vectors of F_p^n lexicographically (first coordinate most significant).
#[derive(Clone, Copy, Debug)]
pub struct FpVectors {
    pub p: u32,
    pub n: usize,
}

impl FpVectors {
    pub fn count(&self) -> usize {
        (self.p as usize).pow(self.n as u32)
    }

    pub fn decode(&self, mut idx: usize) -> Vec<u32> {
        let mut v = vec![0u32; self.n];
        for slot in v.iter_mut().rev() {
            *slot = (idx % self.p as usize) as u32;
            idx /= self.p as usize;
        }
        v
    }

    pub fn encode(&self, v: &[u32]) -> usize {
        v.iter().fold(0usize, |acc, &x| acc * self.p as usize + x as usize)
    }

    pub fn label(&self, idx: usize) -> String {
        let v = self.decode(idx);
        if self.n == 1 {
            return v[0].to_string();
        }
        let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        format!("({})", s.join(","))
    }
}

fn check_prime_power(p: u32, n: usize) -> Result<FpVectors> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 {
        return Err(Error::Shape("dimension must be positive".into()));
    }
    let space = FpVectors { p, n };
    let size = (p as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if size > MAX_CARRIER as u128 {
        return Err(Error::TooLarge {
            size: size.min(usize::MAX as u128) as usize,
            limit: MAX_CARRIER,
        });
    }
    Ok(space)
}

/// Alexander quandle on F_p^n: `v ▷ w = v + A(w − v)`.
pub fn alexander(p: u32, n: usize, a: &AlexanderParam) -> Result<Construction> {
    let space = check_prime_power(p, n)?;
    let m = a.matrix(n, p)?;
    if det_mod_p(&m, p) == 0 {
        return Err(Error::NotInvertible { p });
    }
    let vecs: Vec<Vec<u32>> = (0..space.count()).map(|i| space.decode(i)).collect();
    let q = FiniteQuandle::from_fn(space.count(), |vi, wi| {
        let (v, w) = (&vecs[vi], &vecs[wi]);
        let d: Vec<u32> = (0..n).map(|k| (w[k] + p - v[k]) % p).collect();
        let out: Vec<u32> = (0..n)
            .map(|i| {
                let ad: u32 = (0..n).map(|j| m[i][j] * d[j] % p).sum::<u32>() % p;
                (v[i] + ad) % p
            })
            .collect();
        space.encode(&out)
    })?;
    let labels = (0..space.count()).map(|i| space.label(i)).collect();
    Ok(Construction::new(
        q,
        Family::Alexander,
        json!({ "p": p, "n": n, "a": a }),
        labels,
    ))
}

/// `x ▷ y = (y₁, y₂ + (y₁ − x₁)², …, yₙ + (y₁ − x₁)ⁿ)` over F_p.
pub fn section5_example(p: u32, n: usize) -> Result<Construction> {
    if p < 3 {
        return Err(Error::NotPrime(p));
    }
    if n < 2 {
        return Err(Error::Shape("section5 example needs n ≥ 2".into()));
    }
    let space = check_prime_power(p, n)?;
    let vecs: Vec<Vec<u32>> = (0..space.count()).map(|i| space.decode(i)).collect();
    let q = FiniteQuandle::from_fn(space.count(), |xi, yi| {
        let (x, y) = (&vecs[xi], &vecs[yi]);
        let d = ((y[0] + p - x[0]) % p) as u64;
        let mut out = y.clone();
        let mut pw = d;
        for slot in out.iter_mut().skip(1) {
            pw = pw * d % p as u64;
            *slot = ((*slot as u64 + pw) % p as u64) as u32;
        }
        space.encode(&out)
    })?;
    let labels = (0..space.count()).map(|i| space.label(i)).collect();
    Ok(Construction::new(
        q,
        Family::Section5,
        json!({ "p": p, "n": n }),
        labels,
    ))
}

/// The conjugacy class of `J₁ = [[1,1],[0,1]]` in `SL₂(F_p)` as a quandle,
/// labelled by matrices.
pub fn unipotent_class_quandle(p: u32) -> Result<Construction> {
    let (group, mats) = matrix_group_sl2(p)?;
    let j1 = mats
        .iter()
        .position(|m| *m == [1, 1, 0, 1])
        .expect("J1 lies in SL2");
    let class = group.conjugacy_class(j1)?;
    let q = conj_class_on(&group, &class)?;
    let labels = class.iter().map(|&x| group.label(x).to_string()).collect();
    Ok(Construction::new(
        q,
        Family::UnipotentClass,
        json!({ "p": p }),
        labels,
    ))
}

fn param<T: serde::de::DeserializeOwned>(rec: &ConstructionRecord, key: &str) -> Result<T> {
    let v = rec
        .parameters
        .get(key)
        .ok_or_else(|| Error::Shape(format!("record is missing parameter '{key}'")))?;
    Ok(serde_json::from_value(v.clone())?)
}

impl ConstructionRecord {
    /// Re-runs the construction described by this record.
    pub fn replay(&self) -> Result<Construction> {
        let group = || -> Result<FiniteGroup> { GroupFile::parse_value(param::<Value>(self, "group")?) };
        match self.family {
            Family::Trivial => trivial(param(self, "n")?),
            Family::Dihedral => dihedral(param(self, "n")?),
            Family::Cocycle => cocycle_extension(
                param(self, "x_size")?,
                &group()?,
                &param::<Vec<Vec<usize>>>(self, "cocycle")?,
            ),
            Family::Conj => conjugation(&group()?),
            Family::ConjClass => conj_class(&group()?, param(self, "element")?),
            Family::PhiSpace => {
                let g = group()?;
                let phi = GroupAutomorphism::new(&g, param(self, "phi")?)?;
                phi_space(&g, &phi, &param::<Vec<usize>>(self, "subgroup")?, 0)
            }
            Family::Vedernikov => {
                let g = group()?;
                let phi = GroupAutomorphism::new(&g, param(self, "phi")?)?;
                vedernikov(&g, &phi)
            }
            Family::Alexander => alexander(param(self, "p")?, param(self, "n")?, &param(self, "a")?),
            Family::Section5 => section5_example(param(self, "p")?, param(self, "n")?),
            Family::UnipotentClass => unipotent_class_quandle(param(self, "p")?),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::mat_mul;

    #[test]
    fn trivial_and_dihedral_tables() {
        assert_eq!(trivial(1).unwrap().quandle.size(), 1);
        let t = trivial(3).unwrap().quandle;
        assert!((0..3).all(|q| t.symmetry(q).unwrap().perm.is_identity()));
        let r5 = dihedral(5).unwrap().quandle;
        assert_eq!(r5.op(1, 4), 3);
    }

    #[test]
    fn cocycle_extension_examples() {
        let z2 = FiniteGroup::cyclic(2);
        let c = cocycle_extension(1, &z2, &[vec![0]]).unwrap().quandle;
        assert_eq!(c, trivial(2).unwrap().quandle);

        let z3 = FiniteGroup::cyclic(3);
        let zero = vec![vec![0; 3]; 3];
        let q = cocycle_extension(3, &z3, &zero).unwrap().quandle;
        assert_eq!(q, trivial(9).unwrap().quandle);

        let f: Vec<Vec<usize>> = (0..3).map(|x| (0..3).map(|y| (y + 3 - x) % 3).collect()).collect();
        let q = cocycle_extension(3, &z3, &f).unwrap().quandle;
        // (x,a) ▷ (y,b) = (y, b + y - x)
        assert_eq!(q.op(3, 7), 8);

        let bad = vec![vec![1, 0], vec![0, 0]];
        assert!(matches!(cocycle_extension(2, &z3, &bad), Err(Error::Cocycle(v)) if v == vec![0]));
        let s3 = FiniteGroup::symmetric(3);
        assert!(matches!(
            cocycle_extension(1, &s3, &[vec![s3.identity()]]),
            Err(Error::NotAbelian(..))
        ));
    }

    #[test]
    fn conjugation_of_abelian_group_is_trivial() {
        let z8 = FiniteGroup::cyclic(8);
        assert_eq!(conjugation(&z8).unwrap().quandle, trivial(8).unwrap().quandle);
    }

    #[test]
    fn phi_space_of_negation_is_dihedral() {
        for n in 3..=12 {
            let z = FiniteGroup::cyclic(n);
            let neg = GroupAutomorphism::new(&z, (0..n).map(|x| (n - x) % n).collect()).unwrap();
            let q = phi_space(&z, &neg, &[0], 0).unwrap().quandle;
            assert_eq!(q, dihedral(n).unwrap().quandle, "n = {n}");
        }
    }

    #[test]
    fn phi_space_errors_and_singleton() {
        let s3 = FiniteGroup::symmetric(3);
        let id = GroupAutomorphism::identity(&s3);
        let all: Vec<usize> = (0..6).collect();
        assert_eq!(phi_space(&s3, &id, &all, 0).unwrap().quandle.size(), 1);
        let t = s3.labels().iter().position(|l| l == "(0 1)").unwrap();
        let u = s3.labels().iter().position(|l| l == "(1 2)").unwrap();
        let phi = GroupAutomorphism::inner(&s3, t);
        let h = vec![s3.identity(), u];
        assert!(matches!(phi_space(&s3, &phi, &h, 0), Err(Error::NotFixed(v)) if v == vec![u]));
    }

    #[test]
    fn vedernikov_identity_is_left_conjugation() {
        let s3 = FiniteGroup::symmetric(3);
        let q = vedernikov(&s3, &GroupAutomorphism::identity(&s3)).unwrap().quandle;
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(q.op(x, y), s3.conj(x, y));
            }
        }
        let one = FiniteGroup::cyclic(1);
        assert_eq!(vedernikov(&one, &GroupAutomorphism::identity(&one)).unwrap().quandle.size(), 1);
    }

    #[test]
    fn alexander_examples() {
        assert_eq!(
            alexander(5, 1, &AlexanderParam::Scalar(1)).unwrap().quandle,
            trivial(5).unwrap().quandle
        );
        assert_eq!(
            alexander(3, 1, &AlexanderParam::Scalar(2)).unwrap().quandle,
            dihedral(3).unwrap().quandle
        );
        assert!(matches!(
            alexander(5, 1, &AlexanderParam::Scalar(0)),
            Err(Error::NotInvertible { p: 5 })
        ));
        let singular = AlexanderParam::Matrix(vec![vec![1, 2], vec![2, 4]]);
        assert!(alexander(5, 2, &singular).is_err());
        let m = AlexanderParam::Matrix(vec![vec![0, 1], vec![1, 1]]);
        assert_eq!(alexander(3, 2, &m).unwrap().quandle.size(), 9);
        assert!(alexander(4, 1, &AlexanderParam::Scalar(3)).is_err());
    }

    #[test]
    fn determinant_mod_p() {
        assert_eq!(det_mod_p(&[vec![1, 2], vec![3, 4]], 7), (4 + 7 * 7 - 6) as u32 % 7);
        assert_eq!(det_mod_p(&[vec![0, 1], vec![1, 0]], 5), 4);
        assert_eq!(det_mod_p(&[vec![2, 4], vec![1, 2]], 5), 0);
    }

    #[test]
    fn section5_fixes_first_coordinate_and_is_idempotent() {
        let c = section5_example(5, 3).unwrap();
        let space = FpVectors { p: 5, n: 3 };
        let q = &c.quandle;
        for x in 0..q.size() {
            assert_eq!(q.op(x, x), x);
            for y in 0..q.size() {
                assert_eq!(space.decode(q.op(x, y))[0], space.decode(y)[0]);
            }
        }
        assert!(section5_example(2, 2).is_err());
        assert!(section5_example(5, 1).is_err());
    }

    #[test]
    fn unipotent_class_matches_closed_formula() {
        for p in [3u32, 5, 7] {
            let c = unipotent_class_quandle(p).unwrap();
            let (g, mats) = matrix_group_sl2(p).unwrap();
            let find = |m: [u32; 4]| mats.iter().position(|x| *x == m).unwrap();
            let j1_label = "[[1,1],[0,1]]";
            let j = c.record.labeling.iter().position(|l| l == j1_label).unwrap();
            assert_eq!(c.quandle.op(j, j), j);
            assert_eq!(c.quandle.size() as u32, (p * p - 1) / 2);
            for (i, label) in c.record.labeling.iter().enumerate() {
                let m = mats[g.labels().iter().position(|l| l == label).unwrap()];
                let (z, w) = (m[2], m[3]);
                // M ▷ J₁ = (1+zw, w²; −z², 1−zw)
                let expect = [
                    (1 + z * w) % p,
                    (w * w) % p,
                    (p * p - z * z) % p,
                    (1 + p * p - z * w % p) % p,
                ];
                let got = c.record.labeling[c.quandle.op(i, j)].clone();
                assert_eq!(got, crate::group::mat_label(&expect), "p={p} M={label}");
                // sanity: M⁻¹ J₁ M computed directly
                let minv = mats[g.inv(find(m))];
                let direct = mat_mul(&mat_mul(&minv, &[1, 1, 0, 1], p), &m, p);
                assert_eq!(direct, expect);
            }
        }
    }

    #[test]
    fn records_replay_identically() {
        let s3 = FiniteGroup::symmetric(3);
        let t = s3.labels().iter().position(|l| l == "(0 1)").unwrap();
        let z = FiniteGroup::cyclic(6);
        let neg = GroupAutomorphism::new(&z, (0..6).map(|x| (6 - x) % 6).collect()).unwrap();
        let builds = vec![
            trivial(4).unwrap(),
            dihedral(7).unwrap(),
            conj_class(&s3, t).unwrap(),
            conjugation(&s3).unwrap(),
            phi_space(&z, &neg, &[0, 3], 0).unwrap(),
            vedernikov(&s3, &GroupAutomorphism::inner(&s3, t)).unwrap(),
            alexander(3, 2, &AlexanderParam::Matrix(vec![vec![0, 1], vec![1, 1]])).unwrap(),
            section5_example(3, 2).unwrap(),
            unipotent_class_quandle(3).unwrap(),
            cocycle_extension(2, &FiniteGroup::cyclic(2), &[vec![0, 1], vec![1, 0]]).unwrap(),
        ];
        for b in builds {
            let text = serde_json::to_string(&b.record).unwrap();
            let back: ConstructionRecord = serde_json::from_str(&text).unwrap();
            let again = back.replay().unwrap();
            assert_eq!(
                serde_json::to_string(&again.to_file()).unwrap(),
                serde_json::to_string(&b.to_file()).unwrap()
            );
            assert_eq!(serde_json::to_string(&again.record).unwrap(), text);
        }
    }
}
