//! Exact squared Euclidean distances and the squared Hausdorff distance
//! between bounded polyhedra.
//!
//! The nearest point of a polytope to `x` is the orthogonal projection of
//! `x` onto the affine span of some linearly independent set of active
//! constraints with nonnegative multipliers. At the dimensions handled here
//! (at most four) it is cheap to enumerate every such set, project, and keep
//! the closest feasible projection.

use num_traits::{Signed, Zero};

use super::polyhedron::{enumerate_vertices, HPolyhedron, HalfSpace};
use crate::error::{Error, Result};
use crate::rational::{RatVec, Rational};

fn bounded_vertices(p: &HPolyhedron) -> Result<Vec<RatVec>> {
    let v = enumerate_vertices(p)?;
    if !v.is_bounded() {
        return Err(Error::Unbounded);
    }
    Ok(v.vertices().to_vec())
}

/// Solves `m y = rhs` for a square system; `None` when singular.
fn solve(mut m: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = rhs.len();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        rhs.swap(c, p);
        let inv = m[c][c].recip();
        m[c].iter_mut().for_each(|x| *x *= &inv);
        rhs[c] *= &inv;
        let prow = m[c].clone();
        let pr = rhs[c].clone();
        for i in 0..n {
            if i == c || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for (x, y) in m[i].iter_mut().zip(&prow) {
                *x -= &f * y;
            }
            rhs[i] -= &f * &pr;
        }
    }
    Some(rhs)
}

fn subsets(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut impl FnMut(&[usize])) {
    if cur.len() == k {
        out(cur);
        return;
    }
    for i in start..n {
        if n - i < k - cur.len() {
            break;
        }
        cur.push(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop();
    }
}

fn sqdist_to_rows(x: &RatVec, rows: &[HalfSpace]) -> Rational {
    if rows.iter().all(|h| h.contains(x)) {
        return Rational::zero();
    }
    let dim = x.dim();
    let mut best: Option<Rational> = None;
    for k in 1..=dim.min(rows.len()) {
        subsets(
            rows.len(),
            k,
            0,
            &mut Vec::with_capacity(k),
            &mut |s: &[usize]| {
                // KKT: the multipliers of the chosen rows are nonnegative.
                let gram: Vec<Vec<Rational>> = s
                    .iter()
                    .map(|&i| {
                        s.iter()
                            .map(|&j| rows[i].normal.dot(&rows[j].normal))
                            .collect()
                    })
                    .collect();
                let rhs: Vec<Rational> = s
                    .iter()
                    .map(|&i| rows[i].normal.dot(x) - &rows[i].offset)
                    .collect();
                let Some(mu) = solve(gram, rhs) else {
                    return;
                };
                if mu.iter().any(Signed::is_negative) {
                    return;
                }
                let mut y = x.clone();
                for (m, &i) in mu.iter().zip(s) {
                    y = y.sub(&rows[i].normal.scale(m));
                }
                if rows.iter().all(|h| h.contains(&y)) {
                    let d = x.sub(&y).norm_sq();
                    if best.as_ref().is_none_or(|b| d < *b) {
                        best = Some(d);
                    }
                }
            },
        );
    }
    best.expect("a nonempty polytope has a nearest point")
}

/// Exact squared Euclidean distance from `x` to the bounded polyhedron `p`.
pub fn point_polytope_sqdist(x: &RatVec, p: &HPolyhedron) -> Result<Rational> {
    if x.dim() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: x.dim(),
        });
    }
    let c = p.canonicalize()?;
    bounded_vertices(&c)?;
    Ok(sqdist_to_rows(x, &c.explicit_halfspaces()))
}

/// Squared Hausdorff distance between two bounded polyhedra.
///
/// For convex bodies the farthest point of one from the other is attained
/// at a vertex, so both one-sided maxima range over vertices only.
pub fn hausdorff_sq(p: &HPolyhedron, q: &HPolyhedron) -> Result<Rational> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: q.dim(),
        });
    }
    let pc = p.canonicalize()?;
    let qc = q.canonicalize()?;
    let pv = bounded_vertices(&pc)?;
    let qv = bounded_vertices(&qc)?;
    let prows = pc.explicit_halfspaces();
    let qrows = qc.explicit_halfspaces();
    let one_sided = |verts: &[RatVec], rows: &[HalfSpace]| {
        verts
            .iter()
            .map(|v| sqdist_to_rows(v, rows))
            .max()
            .unwrap_or_else(Rational::zero)
    };
    Ok(one_sided(&pv, &qrows).max(one_sided(&qv, &prows)))
}

/// Checks `√a ≤ √b + √c` for nonnegative `a, b, c` without square roots.
pub fn sqrt_triangle_holds(a: &Rational, b: &Rational, c: &Rational) -> bool {
    let d = a - b - c;
    if !d.is_positive() {
        return true;
    }
    let four = Rational::from_integer(4.into());
    &d * &d <= four * b * c
}
