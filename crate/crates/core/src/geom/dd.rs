//! Double description method over the integers.
//!
//! Computes a generating set of the cone `{y : a·y ≥ 0 for every row a}`:
//! a basis of its lineality space plus one primitive integer vector per
//! extreme ray (modulo the lineality space). Constraints are processed one
//! at a time; lineality is split off first, and the remaining pointed part
//! is updated with the combinatorial adjacency test.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rational::primitive;

#[derive(Clone, Debug, Default)]
pub struct ConeGenerators {
    pub lineality: Vec<Vec<BigInt>>,
    pub rays: Vec<Vec<BigInt>>,
}

#[derive(Clone, PartialEq, Eq)]
struct ZeroSet(Vec<u64>);

impl ZeroSet {
    fn with_capacity(bits: usize) -> Self {
        ZeroSet(vec![0; bits.div_ceil(64).max(1)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn intersection(&self, other: &ZeroSet) -> ZeroSet {
        ZeroSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_subset(&self, other: &ZeroSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

struct Ray {
    v: Vec<BigInt>,
    zeros: ZeroSet,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter()
        .zip(b)
        .fold(BigInt::zero(), |acc, (x, y)| acc + x * y)
}

/// `s·u − t·v`, reduced to a primitive vector.
fn combine(s: &BigInt, u: &[BigInt], t: &BigInt, v: &[BigInt]) -> Vec<BigInt> {
    primitive(u.iter().zip(v).map(|(x, y)| s * x - t * y).collect())
}

/// Generators of `{y ∈ R^dim : a·y ≥ 0 for all a in rows}`.
pub fn cone_generators(dim: usize, rows: &[Vec<BigInt>]) -> ConeGenerators {
    let mut lineality: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| {
            let mut v = vec![BigInt::zero(); dim];
            v[i] = BigInt::one();
            v
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (k, a) in rows.iter().enumerate() {
        debug_assert_eq!(a.len(), dim);
        let split = lineality.iter().position(|l| !dot(a, l).is_zero());
        if let Some(p) = split {
            let mut l = lineality.swap_remove(p);
            let mut al = dot(a, &l);
            if al.is_negative() {
                l.iter_mut().for_each(|x| *x = -&*x);
                al = -al;
            }
            for other in lineality.iter_mut() {
                let ao = dot(a, other);
                if !ao.is_zero() {
                    *other = combine(&al, other, &ao, &l);
                }
            }
            for r in rays.iter_mut() {
                let ar = dot(a, &r.v);
                if !ar.is_zero() {
                    r.v = combine(&al, &r.v, &ar, &l);
                }
                r.zeros.insert(k);
            }
            // The split-off direction is tight on every earlier row.
            let mut zeros = ZeroSet::with_capacity(rows.len());
            for j in 0..k {
                zeros.insert(j);
            }
            rays.push(Ray { v: l, zeros });
            continue;
        }

        let values: Vec<BigInt> = rays.iter().map(|r| dot(a, &r.v)).collect();
        if values.iter().all(|v| !v.is_negative()) {
            for (r, v) in rays.iter_mut().zip(&values) {
                if v.is_zero() {
                    r.zeros.insert(k);
                }
            }
            continue;
        }

        let pointed_dim = dim - lineality.len();
        let pos: Vec<usize> = (0..rays.len())
            .filter(|&i| values[i].is_positive())
            .collect();
        let neg: Vec<usize> = (0..rays.len())
            .filter(|&i| values[i].is_negative())
            .collect();

        let mut fresh = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let common = rays[p].zeros.intersection(&rays[n].zeros);
                if pointed_dim >= 2 && common.len() + 2 < pointed_dim {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(i, r)| i == p || i == n || !common.is_subset(&r.zeros));
                if adjacent {
                    let v = combine(&values[p], &rays[n].v, &values[n], &rays[p].v);
                    let mut zeros = common;
                    zeros.insert(k);
                    fresh.push(Ray { v, zeros });
                }
            }
        }

        let mut kept: Vec<Ray> = Vec::with_capacity(rays.len() + fresh.len());
        for (r, v) in rays.into_iter().zip(&values) {
            if v.is_negative() {
                continue;
            }
            let mut r = r;
            if v.is_zero() {
                r.zeros.insert(k);
            }
            kept.push(r);
        }
        kept.extend(fresh);
        rays = kept;
    }

    ConeGenerators {
        lineality,
        rays: rays.into_iter().map(|r| r.v).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn sorted(mut rays: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
        rays.sort();
        rays
    }

    #[test]
    fn orthant_is_generated_by_unit_vectors() {
        let g = cone_generators(3, &[v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert!(g.lineality.is_empty());
        assert_eq!(
            sorted(g.rays),
            sorted(vec![v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])])
        );
    }

    #[test]
    fn half_plane_keeps_a_line() {
        let g = cone_generators(2, &[v(&[1, 0])]);
        assert_eq!(g.lineality.len(), 1);
        assert_eq!(g.rays.len(), 1);
        assert!(g.lineality[0][0].is_zero());
    }

    #[test]
    fn square_cone() {
        // Homogenized unit square: 0 <= x <= t, 0 <= y <= t, coordinates (t, x, y).
        let rows = [v(&[0, 1, 0]), v(&[1, -1, 0]), v(&[0, 0, 1]), v(&[1, 0, -1])];
        let g = cone_generators(3, &rows);
        assert!(g.lineality.is_empty());
        assert_eq!(
            sorted(g.rays),
            sorted(vec![
                v(&[1, 0, 0]),
                v(&[1, 1, 0]),
                v(&[1, 0, 1]),
                v(&[1, 1, 1])
            ])
        );
    }

    #[test]
    fn redundant_rows_do_not_create_extra_rays() {
        let rows = [v(&[1, 0]), v(&[0, 1]), v(&[1, 1]), v(&[2, 1])];
        let g = cone_generators(2, &rows);
        assert_eq!(sorted(g.rays), sorted(vec![v(&[1, 0]), v(&[0, 1])]));
    }
}
