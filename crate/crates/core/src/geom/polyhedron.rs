//! H- and V-descriptions of rational polyhedra, conversion between them, and
//! the canonical H-form used for equality tests.
//!
//! The canonical form of a nonempty polyhedron consists of
//!
//! * its affine hull, written in reduced row echelon form and emitted as
//!   pairs of opposing halfspaces;
//! * one halfspace per facet, with its normal reduced modulo the affine hull
//!   (zero entries in the echelon pivot columns);
//! * every row `(normal, offset)` scaled to a primitive integer vector,
//!   oriented as `⟨normal, x⟩ ≤ offset`, and the list sorted
//!   lexicographically.
//!
//! When the set lies in the nonnegative orthant the flag
//! `includes_nonnegativity` is set and the rows `−x_i ≤ 0` are left implicit.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::dd::cone_generators;
use super::lp::{lp_feasible, maximize, Feasibility, LpOutcome, LpProblem};
use crate::error::{Error, Result};
use crate::rational::{primitive_integer_row, RatVec, Rational};

/// The closed halfspace `⟨normal, x⟩ ≤ offset`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct HalfSpace {
    pub normal: RatVec,
    pub offset: Rational,
}

impl HalfSpace {
    pub fn new(normal: RatVec, offset: Rational) -> Self {
        HalfSpace { normal, offset }
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.normal.dot(x) <= self.offset
    }

    /// The same halfspace with `(normal, offset)` scaled to a primitive
    /// integer row.
    pub fn primitive(&self) -> HalfSpace {
        let mut row: Vec<Rational> = self.normal.coords().to_vec();
        row.push(self.offset.clone());
        let ints = primitive_integer_row(&row);
        let (normal, offset) = ints.split_at(ints.len() - 1);
        HalfSpace {
            normal: RatVec::from_bigints(normal),
            offset: Rational::from_integer(offset[0].clone()),
        }
    }

    fn is_negative_unit(&self) -> bool {
        self.offset.is_zero()
            && self.normal.iter().filter(|c| !c.is_zero()).count() == 1
            && self.normal.iter().any(|c| *c == -Rational::one())
    }
}

impl fmt::Display for HalfSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·x ≤ {}", self.normal, self.offset)
    }
}

/// A polyhedron `{x : ⟨a, x⟩ ≤ b for every halfspace}`, intersected with
/// the nonnegative orthant when `includes_nonnegativity` is set.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HPolyhedron {
    dim: usize,
    halfspaces: Vec<HalfSpace>,
    includes_nonnegativity: bool,
}

/// A polyhedron `conv(vertices) + cone(rays)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VPolyhedron {
    dim: usize,
    vertices: Vec<RatVec>,
    rays: Vec<RatVec>,
}

impl HPolyhedron {
    pub fn new(
        dim: usize,
        halfspaces: Vec<HalfSpace>,
        includes_nonnegativity: bool,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidArgument("dimension must be positive".into()));
        }
        for h in &halfspaces {
            if h.normal.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: h.normal.dim(),
                });
            }
            if h.normal.is_zero() {
                return Err(Error::InvalidArgument("halfspace with zero normal".into()));
            }
        }
        Ok(HPolyhedron {
            dim,
            halfspaces,
            includes_nonnegativity,
        })
    }

    /// Convenience constructor from `(normal, offset)` rows.
    pub fn from_rows(
        dim: usize,
        rows: Vec<(RatVec, Rational)>,
        includes_nonnegativity: bool,
    ) -> Result<Self> {
        let hs = rows
            .into_iter()
            .map(|(a, b)| HalfSpace::new(a, b))
            .collect();
        Self::new(dim, hs, includes_nonnegativity)
    }

    /// The nonnegative orthant of `R^dim`.
    pub fn orthant(dim: usize) -> Self {
        HPolyhedron {
            dim,
            halfspaces: Vec::new(),
            includes_nonnegativity: true,
        }
    }

    /// The box `Π [0, upper_i]`.
    pub fn box_from_origin(upper: &[Rational]) -> Self {
        let dim = upper.len();
        let halfspaces = upper
            .iter()
            .enumerate()
            .map(|(i, u)| HalfSpace::new(RatVec::unit(dim, i), u.clone()))
            .collect();
        HPolyhedron {
            dim,
            halfspaces,
            includes_nonnegativity: true,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn halfspaces(&self) -> &[HalfSpace] {
        &self.halfspaces
    }

    pub fn includes_nonnegativity(&self) -> bool {
        self.includes_nonnegativity
    }

    /// All constraints, with the implicit orthant rows made explicit.
    pub fn explicit_halfspaces(&self) -> Vec<HalfSpace> {
        let mut out = self.halfspaces.clone();
        if self.includes_nonnegativity {
            for i in 0..self.dim {
                out.push(HalfSpace::new(
                    RatVec::unit(self.dim, i).scale(&-Rational::one()),
                    Rational::zero(),
                ));
            }
        }
        out
    }

    pub fn contains(&self, x: &RatVec) -> bool {
        x.dim() == self.dim
            && (!self.includes_nonnegativity || x.is_nonnegative())
            && self.halfspaces.iter().all(|h| h.contains(x))
    }

    /// Intersection, formed by concatenating the constraint lists.
    pub fn intersect(&self, other: &HPolyhedron) -> Result<HPolyhedron> {
        self.check_dim(other.dim)?;
        let mut halfspaces = self.halfspaces.clone();
        halfspaces.extend(other.halfspaces.iter().cloned());
        Ok(HPolyhedron {
            dim: self.dim,
            halfspaces,
            includes_nonnegativity: self.includes_nonnegativity || other.includes_nonnegativity,
        })
    }

    fn check_dim(&self, d: usize) -> Result<()> {
        if d != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: d,
            });
        }
        Ok(())
    }

    fn lp(&self) -> LpProblem {
        let mut lp = LpProblem::free(self.dim);
        for h in self.explicit_halfspaces() {
            lp.add_inequality(h.normal.into_coords(), h.offset);
        }
        lp
    }

    /// Maximizes `⟨w, x⟩` over the polyhedron.
    pub fn maximize(&self, w: &[Rational]) -> Result<LpOutcome> {
        self.check_dim(w.len())?;
        maximize(&self.lp(), w)
    }

    pub fn is_empty(&self) -> Result<bool> {
        Ok(!lp_feasible(&self.lp())?.is_feasible())
    }

    /// `other ⊆ self`, decided by one LP per constraint of `self`.
    pub fn contains_polyhedron(&self, other: &HPolyhedron) -> Result<bool> {
        self.check_dim(other.dim)?;
        for h in self.explicit_halfspaces() {
            match other.maximize(h.normal.coords())? {
                LpOutcome::Infeasible => return Ok(true),
                LpOutcome::Unbounded => return Ok(false),
                LpOutcome::Optimal { value, .. } => {
                    if value > h.offset {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Set equality via canonical forms.
    pub fn same_set(&self, other: &HPolyhedron) -> Result<bool> {
        self.check_dim(other.dim)?;
        Ok(self.canonicalize()? == other.canonicalize()?)
    }

    /// Canonical form: implicit equalities found and put in echelon form,
    /// redundant rows dropped by exact LP, rows made primitive and sorted.
    pub fn canonicalize(&self) -> Result<HPolyhedron> {
        let rows = self.explicit_halfspaces();
        let mut lp = LpProblem::free(self.dim);
        for h in &rows {
            lp.add_inequality(h.normal.coords().to_vec(), h.offset.clone());
        }
        if let Feasibility::Infeasible = lp_feasible(&lp)? {
            return Ok(Self::canonical_empty(self.dim));
        }

        let mut equalities = Vec::new();
        let mut others = Vec::new();
        for h in &rows {
            let neg: Vec<Rational> = h.normal.iter().map(|c| -c).collect();
            let tight = match maximize(&lp, &neg)? {
                LpOutcome::Optimal { value, .. } => value == -&h.offset,
                _ => false,
            };
            if tight {
                equalities.push((h.normal.coords().to_vec(), h.offset.clone()));
            } else {
                others.push(h.clone());
            }
        }

        let echelon = Echelon::new(self.dim, equalities);
        let mut candidates: Vec<HalfSpace> =
            others.iter().filter_map(|h| echelon.reduce(h)).collect();
        candidates.sort();
        candidates.dedup();

        // Drop redundant rows one at a time.
        let mut keep = vec![true; candidates.len()];
        for k in 0..candidates.len() {
            let mut sub = LpProblem::free(self.dim);
            for (row, rhs) in echelon.rows() {
                sub.add_equality(row.clone(), rhs.clone());
            }
            for (j, h) in candidates.iter().enumerate() {
                if j != k && keep[j] {
                    sub.add_inequality(h.normal.coords().to_vec(), h.offset.clone());
                }
            }
            if let LpOutcome::Optimal { value, .. } = maximize(&sub, candidates[k].normal.coords())?
            {
                if value <= candidates[k].offset {
                    keep[k] = false;
                }
            }
        }
        let facets: Vec<HalfSpace> = candidates
            .into_iter()
            .zip(keep)
            .filter_map(|(h, k)| k.then_some(h))
            .collect();

        let within_orthant = self.includes_nonnegativity || {
            let mut inside = true;
            for i in 0..self.dim {
                let w = RatVec::unit(self.dim, i).scale(&-Rational::one());
                if let LpOutcome::Optimal { value, .. } = maximize(&lp, w.coords())? {
                    if value.is_positive() {
                        inside = false;
                        break;
                    }
                } else {
                    inside = false;
                    break;
                }
            }
            inside
        };
        Ok(Self::assemble(self.dim, &echelon, facets, within_orthant))
    }

    fn canonical_empty(dim: usize) -> HPolyhedron {
        let e = RatVec::unit(dim, 0);
        HPolyhedron {
            dim,
            halfspaces: vec![
                HalfSpace::new(e.scale(&-Rational::one()), -Rational::one()),
                HalfSpace::new(e, -Rational::one()),
            ],
            includes_nonnegativity: false,
        }
    }

    fn assemble(
        dim: usize,
        echelon: &Echelon,
        facets: Vec<HalfSpace>,
        within_orthant: bool,
    ) -> HPolyhedron {
        let mut halfspaces = Vec::new();
        for (row, rhs) in echelon.rows() {
            let h = HalfSpace::new(RatVec::new(row.clone()), rhs.clone()).primitive();
            let neg = HalfSpace::new(h.normal.scale(&-Rational::one()), -&h.offset);
            halfspaces.push(h);
            halfspaces.push(neg);
        }
        halfspaces.extend(facets.into_iter().map(|h| h.primitive()));
        if within_orthant {
            halfspaces.retain(|h| !h.is_negative_unit());
        }
        halfspaces.sort();
        halfspaces.dedup();
        HPolyhedron {
            dim,
            halfspaces,
            includes_nonnegativity: within_orthant,
        }
    }

    /// Image under the coordinate scaling `x_i ↦ x_i · factors_i`
    /// (all factors positive).
    pub fn scale_coordinates(&self, factors: &[Rational]) -> Result<HPolyhedron> {
        self.check_dim(factors.len())?;
        if factors.iter().any(|f| !f.is_positive()) {
            return Err(Error::InvalidArgument(
                "scaling factors must be positive".into(),
            ));
        }
        // y = D x, so ⟨a, x⟩ ≤ b becomes ⟨D⁻¹ a, y⟩ ≤ b.
        let halfspaces = self
            .halfspaces
            .iter()
            .map(|h| {
                let normal = h.normal.iter().zip(factors).map(|(a, f)| a / f).collect();
                HalfSpace::new(RatVec::new(normal), h.offset.clone())
            })
            .collect();
        Ok(HPolyhedron {
            dim: self.dim,
            halfspaces,
            includes_nonnegativity: self.includes_nonnegativity,
        })
    }
}

impl fmt::Display for HPolyhedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, h) in self.halfspaces.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{h}")?;
        }
        if self.includes_nonnegativity {
            if !self.halfspaces.is_empty() {
                write!(f, ", ")?;
            }
            write!(f, "x ≥ 0")?;
        }
        write!(f, "}}")
    }
}

/// Affine equalities in reduced row echelon form (pivot entries 1).
struct Echelon {
    dim: usize,
    rows: Vec<(Vec<Rational>, Rational)>,
    pivots: Vec<usize>,
}

impl Echelon {
    fn new(dim: usize, input: Vec<(Vec<Rational>, Rational)>) -> Self {
        let mut rows = input;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..dim {
            let Some(p) = (r..rows.len()).find(|&i| !rows[i].0[c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = rows[r].0[c].recip();
            rows[r].0.iter_mut().for_each(|x| *x *= &inv);
            rows[r].1 *= &inv;
            let (pr, pb) = rows[r].clone();
            for (i, (row, b)) in rows.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pr) {
                    *x -= &f * y;
                }
                *b -= &f * &pb;
            }
            pivots.push(c);
            r += 1;
        }
        rows.truncate(r);
        Echelon { dim, rows, pivots }
    }

    fn rows(&self) -> &[(Vec<Rational>, Rational)] {
        &self.rows
    }

    /// Reduces a halfspace modulo the equalities; `None` if its normal
    /// vanishes (the row is implied).
    fn reduce(&self, h: &HalfSpace) -> Option<HalfSpace> {
        debug_assert_eq!(h.normal.dim(), self.dim);
        let mut a: Vec<Rational> = h.normal.coords().to_vec();
        let mut b = h.offset.clone();
        for ((row, rhs), &p) in self.rows.iter().zip(&self.pivots) {
            if a[p].is_zero() {
                continue;
            }
            let f = a[p].clone();
            for (x, y) in a.iter_mut().zip(row) {
                *x -= &f * y;
            }
            b -= &f * rhs;
        }
        if a.iter().all(Zero::is_zero) {
            return None;
        }
        Some(HalfSpace::new(RatVec::new(a), b).primitive())
    }
}

fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    primitive_integer_row(row)
}

/// Exact facet description of `conv(points) + cone(rays)`, canonicalized.
pub fn hull(points: &[RatVec], rays: &[RatVec]) -> Result<HPolyhedron> {
    let first = points.first().ok_or(Error::EmptyPointList)?;
    let dim = first.dim();
    if dim == 0 {
        return Err(Error::InvalidArgument("dimension must be positive".into()));
    }
    for v in points.iter().chain(rays) {
        if v.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: v.dim(),
            });
        }
    }

    // Generators of the homogenized cone, coordinates (t, x).
    let mut gens = Vec::with_capacity(points.len() + rays.len());
    for p in points {
        let mut row = vec![Rational::one()];
        row.extend(p.iter().cloned());
        gens.push(integer_row(&row));
    }
    for r in rays {
        if r.is_zero() {
            continue;
        }
        let mut row = vec![Rational::zero()];
        row.extend(r.iter().cloned());
        gens.push(integer_row(&row));
    }
    gens.sort();
    gens.dedup();

    // Inequalities of the cone are the generators of its dual.
    let dual = cone_generators(dim + 1, &gens);
    let to_row = |c: &[BigInt]| -> (Vec<Rational>, Rational) {
        let normal = c[1..].iter().map(|x| Rational::from_integer(-x)).collect();
        (normal, Rational::from_integer(c[0].clone()))
    };
    let equalities: Vec<(Vec<Rational>, Rational)> =
        dual.lineality.iter().map(|c| to_row(c)).collect();
    let echelon = Echelon::new(dim, equalities);
    let mut facets: Vec<HalfSpace> = dual
        .rays
        .iter()
        .filter_map(|c| {
            let (a, b) = to_row(c);
            echelon.reduce(&HalfSpace::new(RatVec::new(a), b))
        })
        .collect();
    facets.sort();
    facets.dedup();
    let within_orthant =
        points.iter().all(RatVec::is_nonnegative) && rays.iter().all(RatVec::is_nonnegative);
    Ok(HPolyhedron::assemble(dim, &echelon, facets, within_orthant))
}

/// Minimal vertex/ray description of a pointed polyhedron.
pub fn enumerate_vertices(p: &HPolyhedron) -> Result<VPolyhedron> {
    let dim = p.dim;
    let mut rows: Vec<Vec<BigInt>> = p
        .explicit_halfspaces()
        .iter()
        .map(|h| {
            let mut row = vec![h.offset.clone()];
            row.extend(h.normal.iter().map(|c| -c));
            integer_row(&row)
        })
        .collect();
    let mut t_row = vec![BigInt::zero(); dim + 1];
    t_row[0] = BigInt::one();
    rows.push(t_row);
    rows.sort();
    rows.dedup();

    let cone = cone_generators(dim + 1, &rows);
    let mut vertices = Vec::new();
    let mut rays = Vec::new();
    for g in &cone.rays {
        let t = &g[0];
        if t.is_positive() {
            let t = Rational::from_integer(t.clone());
            vertices.push(RatVec::new(
                g[1..]
                    .iter()
                    .map(|x| Rational::from_integer(x.clone()) / &t)
                    .collect(),
            ));
        } else {
            rays.push(RatVec::from_bigints(&g[1..]));
        }
    }
    if vertices.is_empty() {
        return Err(Error::EmptyPolyhedron);
    }
    if !cone.lineality.is_empty() {
        return Err(Error::NotPointed);
    }
    vertices.sort();
    rays.sort();
    Ok(VPolyhedron {
        dim,
        vertices,
        rays,
    })
}

impl VPolyhedron {
    /// Builds a V-description and reduces it to vertices and extreme rays.
    pub fn minimal(points: &[RatVec], rays: &[RatVec]) -> Result<Self> {
        enumerate_vertices(&hull(points, rays)?)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[RatVec] {
        &self.vertices
    }

    pub fn rays(&self) -> &[RatVec] {
        &self.rays
    }

    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn to_h(&self) -> Result<HPolyhedron> {
        hull(&self.vertices, &self.rays)
    }

    /// The system `x = Σ μ_k v_k + Σ ν_l r_l`, `Σ μ = 1`, `μ, ν ≥ 0` in the
    /// unknowns `(μ, ν)`.
    pub fn membership_lp(&self, x: &RatVec) -> Result<LpProblem> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.dim(),
            });
        }
        let nv = self.vertices.len();
        let n = nv + self.rays.len();
        let mut lp = LpProblem::nonnegative(n);
        for i in 0..self.dim {
            let row = self
                .vertices
                .iter()
                .chain(&self.rays)
                .map(|g| g[i].clone())
                .collect();
            lp.add_equality(row, x[i].clone());
        }
        let sum = (0..n)
            .map(|k| {
                if k < nv {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        lp.add_equality(sum, Rational::one());
        Ok(lp)
    }

    pub fn contains_lp(&self, x: &RatVec) -> Result<bool> {
        Ok(lp_feasible(&self.membership_lp(x)?)?.is_feasible())
    }
}

/// `min_{u ∈ P} ⟨w, u⟩`, finite when `w` pairs nonnegatively with every ray.
pub fn support_min(p: &VPolyhedron, w: &RatVec) -> Result<Rational> {
    if w.dim() != p.dim {
        return Err(Error::DimensionMismatch {
            expected: p.dim,
            found: w.dim(),
        });
    }
    if w.iter().any(Signed::is_negative) || p.rays.iter().any(|r| w.dot(r).is_negative()) {
        return Err(Error::UnboundedSupport);
    }
    Ok(p.vertices
        .iter()
        .map(|v| w.dot(v))
        .min()
        .expect("vertex list is nonempty"))
}

/// Minkowski sum of two polyhedra given by vertices and rays.
pub fn minkowski_sum(p: &VPolyhedron, q: &VPolyhedron) -> Result<VPolyhedron> {
    if p.dim != q.dim {
        return Err(Error::DimensionMismatch {
            expected: p.dim,
            found: q.dim,
        });
    }
    let mut points = Vec::with_capacity(p.vertices.len() * q.vertices.len());
    for a in &p.vertices {
        for b in &q.vertices {
            points.push(a.add(b));
        }
    }
    points.sort();
    points.dedup();
    let mut rays: Vec<RatVec> = p.rays.iter().chain(&q.rays).cloned().collect();
    rays.sort();
    rays.dedup();
    VPolyhedron::minimal(&points, &rays)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn pt(xs: &[i64]) -> RatVec {
        RatVec::from_ints(xs.iter().copied())
    }

    fn hs(normal: &[i64], offset: Rational) -> HalfSpace {
        HalfSpace::new(pt(normal), offset)
    }

    fn unit_square() -> HPolyhedron {
        HPolyhedron::box_from_origin(&[int(1), int(1)])
    }

    #[test]
    fn hull_of_newton_polygon() {
        let p = hull(&[pt(&[2, 0]), pt(&[0, 3])], &[pt(&[1, 0]), pt(&[0, 1])]).unwrap();
        assert!(p.includes_nonnegativity());
        assert_eq!(p.halfspaces(), &[hs(&[-3, -2], int(-6))]);
        // Explicitly: 3x + 2y ≥ 6, x ≥ 0, y ≥ 0.
        let mut all = p.explicit_halfspaces();
        all.sort();
        assert_eq!(
            all,
            vec![
                hs(&[-3, -2], int(-6)),
                hs(&[-1, 0], int(0)),
                hs(&[0, -1], int(0))
            ]
        );
        // Every facet is tight on at least two generators; each generator is inside.
        for g in [pt(&[2, 0]), pt(&[0, 3])] {
            assert!(p.contains(&g));
        }
    }

    #[test]
    fn hull_of_origin_and_unit_rays_is_orthant() {
        let rays: Vec<RatVec> = (0..3).map(|i| RatVec::unit(3, i)).collect();
        let p = hull(&[RatVec::zeros(3)], &rays).unwrap();
        assert_eq!(p, HPolyhedron::orthant(3));
    }

    #[test]
    fn hull_of_segment_has_paired_halfspaces() {
        let p = hull(&[pt(&[1, 0]), pt(&[0, 1])], &[]).unwrap();
        let expected = HPolyhedron::from_rows(
            2,
            vec![(pt(&[1, 1]), int(1)), (pt(&[-1, -1]), int(-1))],
            true,
        )
        .unwrap();
        assert!(p.same_set(&expected).unwrap());
        assert!(p.halfspaces().contains(&hs(&[1, 1], int(1))));
        assert!(p.halfspaces().contains(&hs(&[-1, -1], int(-1))));
        assert!(p.contains(&RatVec::new(vec![rat(1, 2), rat(1, 2)])));
        assert!(!p.contains(&RatVec::new(vec![rat(1, 2), rat(1, 3)])));
        assert_eq!(p.canonicalize().unwrap(), p);
    }

    #[test]
    fn hull_errors() {
        assert_eq!(hull(&[], &[]), Err(Error::EmptyPointList));
        assert!(matches!(
            hull(&[pt(&[1, 0]), pt(&[1])], &[]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn vertices_of_unit_square() {
        let v = enumerate_vertices(&unit_square()).unwrap();
        assert_eq!(
            v.vertices(),
            &[pt(&[0, 0]), pt(&[0, 1]), pt(&[1, 0]), pt(&[1, 1])]
        );
        assert!(v.rays().is_empty());
    }

    #[test]
    fn vertices_of_cut_square() {
        let p = HPolyhedron::from_rows(
            2,
            vec![
                (pt(&[1, 0]), int(1)),
                (pt(&[0, 1]), int(1)),
                (pt(&[1, 1]), rat(3, 2)),
            ],
            true,
        )
        .unwrap();
        let v = enumerate_vertices(&p).unwrap();
        let mut expected = vec![
            pt(&[0, 0]),
            pt(&[1, 0]),
            pt(&[0, 1]),
            RatVec::new(vec![int(1), rat(1, 2)]),
            RatVec::new(vec![rat(1, 2), int(1)]),
        ];
        expected.sort();
        assert_eq!(v.vertices(), expected.as_slice());
    }

    #[test]
    fn vertices_of_orthant() {
        let v = enumerate_vertices(&HPolyhedron::orthant(3)).unwrap();
        assert_eq!(v.vertices(), &[RatVec::zeros(3)]);
        assert_eq!(v.rays().len(), 3);
    }

    #[test]
    fn empty_and_lines_are_reported() {
        let empty = HPolyhedron::from_rows(1, vec![(pt(&[1]), int(-1))], true).unwrap();
        assert_eq!(enumerate_vertices(&empty), Err(Error::EmptyPolyhedron));
        assert!(empty.is_empty().unwrap());
        let strip = HPolyhedron::from_rows(2, vec![(pt(&[1, 0]), int(1))], false).unwrap();
        assert_eq!(enumerate_vertices(&strip), Err(Error::NotPointed));
    }

    #[test]
    fn canonicalize_drops_dominated_rows() {
        let p = HPolyhedron::from_rows(
            1,
            vec![(pt(&[1]), int(1)), (pt(&[1]), int(2)), (pt(&[2]), int(2))],
            true,
        )
        .unwrap();
        let c = p.canonicalize().unwrap();
        assert_eq!(c.halfspaces(), &[hs(&[1], int(1))]);
        assert!(c.includes_nonnegativity());
    }

    #[test]
    fn canonicalize_merges_scalar_multiples() {
        let p = HPolyhedron::from_rows(
            2,
            vec![(pt(&[1, 1]), rat(3, 2)), (pt(&[2, 2]), int(3))],
            true,
        )
        .unwrap();
        let c = p.canonicalize().unwrap();
        assert_eq!(c.halfspaces(), &[hs(&[2, 2], int(3))]);
    }

    #[test]
    fn canonicalize_detects_orthant_membership() {
        // Explicit nonnegativity rows become the implicit flag.
        let p = HPolyhedron::from_rows(
            2,
            vec![
                (pt(&[-1, 0]), int(0)),
                (pt(&[0, -1]), int(0)),
                (pt(&[1, 0]), int(1)),
                (pt(&[0, 1]), int(1)),
            ],
            false,
        )
        .unwrap();
        assert_eq!(
            p.canonicalize().unwrap(),
            unit_square().canonicalize().unwrap()
        );
    }

    #[test]
    fn canonical_empty_is_stable() {
        let a = HPolyhedron::from_rows(1, vec![(pt(&[1]), int(-1))], true).unwrap();
        let b = HPolyhedron::from_rows(1, vec![(pt(&[1]), int(0)), (pt(&[-1]), int(-2))], false)
            .unwrap();
        assert_eq!(a.canonicalize().unwrap(), b.canonicalize().unwrap());
    }

    #[test]
    fn support_function() {
        let p =
            VPolyhedron::minimal(&[pt(&[2, 0]), pt(&[0, 3])], &[pt(&[1, 0]), pt(&[0, 1])]).unwrap();
        assert_eq!(support_min(&p, &pt(&[3, 2])).unwrap(), int(6));
        assert_eq!(support_min(&p, &pt(&[0, 0])).unwrap(), int(0));
        assert_eq!(support_min(&p, &pt(&[-1, 2])), Err(Error::UnboundedSupport));
        let q = VPolyhedron::minimal(
            &[pt(&[1, 1, 1])],
            &(0..3).map(|i| RatVec::unit(3, i)).collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(support_min(&q, &RatVec::unit(3, 2)).unwrap(), int(1));
    }

    #[test]
    fn minkowski_examples() {
        let rays = vec![pt(&[1, 0]), pt(&[0, 1])];
        let x = VPolyhedron::minimal(&[pt(&[1, 0])], &rays).unwrap();
        let y = VPolyhedron::minimal(&[pt(&[0, 1])], &rays).unwrap();
        let s = minkowski_sum(&x, &y).unwrap();
        assert_eq!(s.vertices(), &[pt(&[1, 1])]);

        let zero = VPolyhedron::minimal(&[pt(&[0, 0])], &rays).unwrap();
        let a = VPolyhedron::minimal(&[pt(&[2, 0]), pt(&[0, 3])], &rays).unwrap();
        assert_eq!(minkowski_sum(&a, &zero).unwrap(), a);
    }

    #[test]
    fn minkowski_support_additivity() {
        let rays = vec![pt(&[1, 0]), pt(&[0, 1])];
        let a = VPolyhedron::minimal(&[pt(&[2, 0]), pt(&[0, 3])], &rays).unwrap();
        let b = VPolyhedron::minimal(&[pt(&[3, 0]), pt(&[0, 2])], &rays).unwrap();
        let s = minkowski_sum(&a, &b).unwrap();
        // Pairwise sums (5,0),(2,2),(3,3),(0,5); (3,3) is interior.
        assert_eq!(s.vertices(), &[pt(&[0, 5]), pt(&[2, 2]), pt(&[5, 0])]);
        let normals = [
            pt(&[3, 2]),
            pt(&[2, 3]),
            pt(&[1, 1]),
            pt(&[1, 0]),
            pt(&[0, 1]),
        ];
        for w in normals {
            assert_eq!(
                support_min(&s, &w).unwrap(),
                support_min(&a, &w).unwrap() + support_min(&b, &w).unwrap()
            );
        }
    }

    #[test]
    fn containment_and_scaling() {
        let sq = unit_square();
        let half = HPolyhedron::box_from_origin(&[rat(1, 2), rat(1, 3)]);
        assert!(sq.contains_polyhedron(&half).unwrap());
        assert!(!half.contains_polyhedron(&sq).unwrap());
        let scaled = sq.scale_coordinates(&[rat(1, 2), rat(1, 3)]).unwrap();
        assert!(scaled.same_set(&half).unwrap());
    }

    #[test]
    fn membership_lp_matches_contains() {
        let v = enumerate_vertices(&unit_square()).unwrap();
        assert!(v
            .contains_lp(&RatVec::new(vec![rat(1, 2), int(1)]))
            .unwrap());
        assert!(!v
            .contains_lp(&RatVec::new(vec![rat(3, 2), int(0)]))
            .unwrap());
    }
}
