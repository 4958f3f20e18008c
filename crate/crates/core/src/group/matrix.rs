use std::collections::HashMap;

use super::finite::FiniteGroup;
use crate::error::{Error, Result};

/// Largest prime accepted by [`matrix_group_sl2`].
pub const MAX_SL2_PRIME: u32 = 13;

/// A 2×2 matrix over F_p in row-major order `[a, b, c, d]`.
pub type Mat2 = [u32; 4];

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

pub fn mat_mul(x: &Mat2, y: &Mat2, p: u32) -> Mat2 {
    let m = |a: u32, b: u32, c: u32, d: u32| (a * b + c * d) % p;
    [
        m(x[0], y[0], x[1], y[2]),
        m(x[0], y[1], x[1], y[3]),
        m(x[2], y[0], x[3], y[2]),
        m(x[2], y[1], x[3], y[3]),
    ]
}

pub fn mat_label(m: &Mat2) -> String {
    format!("[[{},{}],[{},{}]]", m[0], m[1], m[2], m[3])
}

/// `SL₂(F_p)` for a prime `p ≤ 13`, with elements in lexicographic order of
/// their entries. Returns the group and the matrix behind each index.
pub fn matrix_group_sl2(p: u32) -> Result<(FiniteGroup, Vec<Mat2>)> {
    if !is_prime(p) || p > MAX_SL2_PRIME {
        return Err(Error::NotPrime(p));
    }
    let mut mats = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    if (a * d + p * p - (b * c) % p) % p == 1 {
                        mats.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    let index: HashMap<Mat2, usize> = mats.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let labels = mats.iter().map(mat_label).collect();
    let group = FiniteGroup::from_fn(mats.len(), labels, |x, y| index[&mat_mul(&mats[x], &mats[y], p)]);
    Ok((group, mats))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_match_p_times_p_squared_minus_one() {
        for p in [2u32, 3, 5, 7] {
            let (g, _) = matrix_group_sl2(p).unwrap();
            assert_eq!(g.order() as u32, p * (p * p - 1));
        }
    }

    #[test]
    fn identity_matrix_is_group_identity() {
        let (g, mats) = matrix_group_sl2(3).unwrap();
        assert_eq!(mats[g.identity()], [1, 0, 0, 1]);
        assert_eq!(g.label(g.identity()), "[[1,0],[0,1]]");
    }

    #[test]
    fn rejects_composites_and_large_primes() {
        assert!(matrix_group_sl2(4).is_err());
        assert!(matrix_group_sl2(17).is_err());
        assert!(matrix_group_sl2(1).is_err());
    }

    #[test]
    fn unipotent_class_in_sl2_3() {
        // brute force over all 24 conjugators
        let (g, mats) = matrix_group_sl2(3).unwrap();
        let j1 = mats.iter().position(|m| *m == [1, 1, 0, 1]).unwrap();
        let mut brute: Vec<usize> = (0..g.order()).map(|a| g.conj(a, j1)).collect();
        brute.sort();
        brute.dedup();
        assert_eq!(g.conjugacy_class(j1).unwrap(), brute);
        assert_eq!(brute.len(), 4);
    }
}
