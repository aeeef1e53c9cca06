//! LCT-polytopes: construction from monomial ideals (Newton polyhedron
//! criterion), from principal monomials (closed form), and from
//! log-resolution data, together with the standard transforms and bounds.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::geom::{
    enumerate_vertices, hull, lp_feasible, maximize, minkowski_sum, HPolyhedron, HalfSpace,
    LpOutcome, LpProblem, VPolyhedron,
};
use crate::monomial::{Exponent, MonomialIdeal};
use crate::rational::{RatVec, Rational};

/// Where an [`LctPolytope`] came from.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Provenance {
    Monomial(Vec<MonomialIdeal>),
    Principal(Vec<Exponent>),
    Resolution {
        data: ResolutionData,
        local: bool,
    },
    /// Produced by a geometric transform of another polytope.
    Transform(&'static str),
}

impl Provenance {
    pub fn tag(&self) -> &'static str {
        match self {
            Provenance::Monomial(_) => "monomial",
            Provenance::Principal(_) => "principal",
            Provenance::Resolution { .. } => "resolution",
            Provenance::Transform(name) => name,
        }
    }
}

/// A canonicalized LCT-polytope in `R^r`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LctPolytope {
    h: HPolyhedron,
    provenance: Provenance,
}

impl LctPolytope {
    /// Wraps an H-description, canonicalizing it.
    pub fn from_h(h: &HPolyhedron, provenance: Provenance) -> Result<Self> {
        Ok(LctPolytope {
            h: h.canonicalize()?,
            provenance,
        })
    }

    pub fn h(&self) -> &HPolyhedron {
        &self.h
    }

    pub fn into_h(self) -> HPolyhedron {
        self.h
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn dim(&self) -> usize {
        self.h.dim()
    }

    pub fn contains(&self, lambda: &RatVec) -> bool {
        self.h.contains(lambda)
    }

    pub fn vertices(&self) -> Result<VPolyhedron> {
        enumerate_vertices(&self.h)
    }

    /// Same underlying set (provenance is ignored).
    pub fn same_set(&self, other: &LctPolytope) -> bool {
        self.h == other.h
    }
}

/// Discrepancies and vanishing orders of a log resolution.
///
/// Divisor `j` contributes the inequality `Σ_i alpha[j][i]·λ_i ≤ kappa[j] + 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ResolutionData {
    r: usize,
    kappa: Vec<u32>,
    alpha: Vec<Vec<u32>>,
    through_x: Vec<usize>,
}

impl ResolutionData {
    pub fn new(
        r: usize,
        kappa: Vec<u32>,
        alpha: Vec<Vec<u32>>,
        through_x: Vec<usize>,
    ) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidResolution(m));
        if r == 0 {
            return bad("need at least one ideal".into());
        }
        if kappa.len() != alpha.len() {
            return bad(format!(
                "{} discrepancies but {} vanishing-order rows",
                kappa.len(),
                alpha.len()
            ));
        }
        if let Some(row) = alpha.iter().find(|row| row.len() != r) {
            return bad(format!(
                "vanishing-order row of length {}, expected {r}",
                row.len()
            ));
        }
        let mut through_x = through_x;
        through_x.sort_unstable();
        through_x.dedup();
        if let Some(&j) = through_x.iter().find(|&&j| j >= kappa.len()) {
            return bad(format!("divisor index {j} out of range"));
        }
        if let Some(i) = (0..r).find(|&i| through_x.iter().all(|&j| alpha[j][i] == 0)) {
            return bad(format!(
                "ideal {i} does not vanish along any divisor over x"
            ));
        }
        Ok(ResolutionData {
            r,
            kappa,
            alpha,
            through_x,
        })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn divisor_count(&self) -> usize {
        self.kappa.len()
    }

    pub fn kappa(&self) -> &[u32] {
        &self.kappa
    }

    pub fn alpha(&self) -> &[Vec<u32>] {
        &self.alpha
    }

    pub fn through_x(&self) -> &[usize] {
        &self.through_x
    }
}

fn check_ideals(ideals: &[MonomialIdeal]) -> Result<usize> {
    let n = ideals
        .first()
        .ok_or_else(|| Error::InvalidArgument("need at least one ideal".into()))?
        .n();
    for a in ideals {
        if a.n() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: a.n(),
            });
        }
        if !a.is_proper() {
            return Err(Error::ImproperIdeal);
        }
    }
    Ok(n)
}

fn exp_to_rat(u: &[u32]) -> Vec<Rational> {
    u.iter()
        .map(|&e| Rational::from_integer(e.into()))
        .collect()
}

/// Decides `e ∈ Σ λ_i·P_{a_i}` by exact LP over convex-combination weights
/// of the generators. A term with `λ_i = 0` is the whole orthant.
pub fn membership_oracle(ideals: &[MonomialIdeal], lambda: &RatVec) -> Result<bool> {
    let n = check_ideals(ideals)?;
    if lambda.dim() != ideals.len() {
        return Err(Error::DimensionMismatch {
            expected: ideals.len(),
            found: lambda.dim(),
        });
    }
    if !lambda.is_nonnegative() {
        return Err(Error::NegativeLambda);
    }
    // Unknowns μ_{i,k} ≥ 0 for the generators of each ideal with λ_i > 0.
    let mut columns: Vec<(usize, &Exponent)> = Vec::new();
    for (i, a) in ideals.iter().enumerate() {
        if lambda[i].is_positive() {
            columns.extend(a.generators().iter().map(|g| (i, g)));
        }
    }
    let mut lp = LpProblem::nonnegative(columns.len());
    for (i, _) in ideals
        .iter()
        .enumerate()
        .filter(|(i, _)| lambda[*i].is_positive())
    {
        let row = columns
            .iter()
            .map(|(k, _)| {
                if *k == i {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        lp.add_equality(row, Rational::one());
    }
    for j in 0..n {
        let row = columns
            .iter()
            .map(|(i, g)| &lambda[*i] * Rational::from_integer(g[j].into()))
            .collect();
        lp.add_inequality(row, Rational::one());
    }
    Ok(lp_feasible(&lp)?.is_feasible())
}

/// The LCT-polytope of monomial ideals:
/// `{λ ⪰ 0 : Σ_i h_i(w)·λ_i ≤ ⟨w, e⟩ for every w ∈ W}`, where `h_i` is the
/// support function of the i-th Newton polyhedron and `W` is the set of
/// inner facet normals of `P_{a_1} + ⋯ + P_{a_r}` (coordinate normals
/// included).
pub fn lct_polytope_monomial(ideals: &[MonomialIdeal]) -> Result<LctPolytope> {
    let n = check_ideals(ideals)?;
    let r = ideals.len();
    let newtons = ideals
        .iter()
        .map(|a| a.newton_polyhedron())
        .collect::<Result<Vec<_>>>()?;
    let mut sum = newtons[0].base().clone();
    for p in &newtons[1..] {
        sum = minkowski_sum(&sum, p.base())?;
    }

    let mut normals: Vec<RatVec> = sum
        .to_h()?
        .explicit_halfspaces()
        .into_iter()
        .map(|h| h.normal.scale(&-Rational::one()))
        .collect();
    normals.extend((0..n).map(|j| RatVec::unit(n, j)));
    normals.sort();
    normals.dedup();

    let mut rows = Vec::with_capacity(normals.len());
    for w in &normals {
        debug_assert!(w.is_nonnegative());
        let coeffs = newtons
            .iter()
            .map(|p| p.support(w))
            .collect::<Result<Vec<_>>>()?;
        if coeffs.iter().all(Zero::is_zero) {
            continue;
        }
        let bound: Rational = w.iter().sum();
        rows.push(HalfSpace::new(RatVec::new(coeffs), bound));
    }
    let h = HPolyhedron::new(r, rows, true)?;
    LctPolytope::from_h(&h, Provenance::Monomial(ideals.to_vec()))
}

/// Closed form for principal monomial ideals `(x^{q_i})`:
/// `{λ ⪰ 0 : Σ_i q_{i,j} λ_i ≤ 1 for every variable j}`.
pub fn lct_polytope_principal(q: &[Exponent]) -> Result<LctPolytope> {
    let r = q.len();
    let n = q
        .first()
        .ok_or_else(|| Error::InvalidArgument("need at least one exponent row".into()))?
        .len();
    for row in q {
        if row.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: row.len(),
            });
        }
        if row.iter().all(|&e| e == 0) {
            return Err(Error::ImproperIdeal);
        }
    }
    let rows = (0..n)
        .filter(|&j| q.iter().any(|row| row[j] > 0))
        .map(|j| {
            let normal = q
                .iter()
                .map(|row| Rational::from_integer(row[j].into()))
                .collect();
            HalfSpace::new(RatVec::new(normal), Rational::one())
        })
        .collect();
    let h = HPolyhedron::new(r, rows, true)?;
    LctPolytope::from_h(&h, Provenance::Principal(q.to_vec()))
}

/// `{λ ⪰ 0 : Σ_i α_{i,j} λ_i ≤ κ_j + 1}` over the divisors through `x`
/// (`local`) or over all divisors.
pub fn lct_polytope_from_resolution(data: &ResolutionData, local: bool) -> Result<LctPolytope> {
    let indices: Vec<usize> = if local {
        data.through_x.clone()
    } else {
        (0..data.divisor_count()).collect()
    };
    let rows = indices
        .into_iter()
        .filter(|&j| data.alpha[j].iter().any(|&a| a > 0))
        .map(|j| {
            HalfSpace::new(
                RatVec::new(exp_to_rat(&data.alpha[j])),
                Rational::from_integer((data.kappa[j] as u64 + 1).into()),
            )
        })
        .collect();
    let h = HPolyhedron::new(data.r, rows, true)?;
    LctPolytope::from_h(
        &h,
        Provenance::Resolution {
            data: data.clone(),
            local,
        },
    )
}

/// `lct(a) = max{c : e ∈ c·P_a}`, as the exact optimum of
/// `max Σ ν_k s.t. Σ ν_k g_k ⪯ e, ν ⪰ 0`.
pub fn lct_threshold(a: &MonomialIdeal) -> Result<Rational> {
    if !a.is_proper() {
        return Err(Error::ImproperIdeal);
    }
    let gens = a.generators();
    let mut lp = LpProblem::nonnegative(gens.len());
    for j in 0..a.n() {
        let row = gens
            .iter()
            .map(|g| Rational::from_integer(g[j].into()))
            .collect();
        lp.add_inequality(row, Rational::one());
    }
    let objective = vec![Rational::one(); gens.len()];
    match maximize(&lp, &objective)? {
        LpOutcome::Optimal { value, .. } => Ok(value),
        other => unreachable!("threshold LP of a proper ideal is bounded and feasible: {other:?}"),
    }
}

/// `1/ord(a) ≤ lct(a) ≤ n/ord(a)`.
pub fn order_bounds_check(a: &MonomialIdeal) -> Result<bool> {
    let ord = Rational::from_integer(a.ord()?.into());
    let n = Rational::from_integer(a.n().into());
    let lct = lct_threshold(a)?;
    Ok(ord.recip() <= lct && lct <= n / ord)
}

/// Image of `p` under `(u_1, …, u_r) ↦ (u_1/m_1, …, u_r/m_r)`.
pub fn power_rescale(p: &LctPolytope, m: &[u32]) -> Result<LctPolytope> {
    if m.len() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: m.len(),
        });
    }
    if m.contains(&0) {
        return Err(Error::InvalidArgument(
            "rescaling exponents must be positive".into(),
        ));
    }
    let factors: Vec<Rational> = m
        .iter()
        .map(|&k| Rational::from_integer(k.into()).recip())
        .collect();
    LctPolytope::from_h(
        &p.h.scale_coordinates(&factors)?,
        Provenance::Transform("power_rescale"),
    )
}

/// Inner simplex and outer box around an LCT-polytope, with the verdicts
/// `simplex ⊆ polytope` and `polytope ⊆ box`.
#[derive(Clone, Debug)]
pub struct ContainmentBounds {
    pub thresholds: Vec<Rational>,
    pub polytope: LctPolytope,
    pub simplex: HPolyhedron,
    pub outer_box: HPolyhedron,
    pub simplex_inside: bool,
    pub box_contains: bool,
}

impl ContainmentBounds {
    pub fn holds(&self) -> bool {
        self.simplex_inside && self.box_contains
    }
}

pub fn containment_bounds(ideals: &[MonomialIdeal]) -> Result<ContainmentBounds> {
    check_ideals(ideals)?;
    let r = ideals.len();
    let thresholds = ideals
        .iter()
        .map(lct_threshold)
        .collect::<Result<Vec<_>>>()?;
    let polytope = lct_polytope_monomial(ideals)?;
    let simplex = HPolyhedron::new(
        r,
        vec![HalfSpace::new(
            RatVec::new(thresholds.iter().map(|t| t.recip()).collect()),
            Rational::one(),
        )],
        true,
    )?;
    let outer_box = HPolyhedron::box_from_origin(&thresholds);
    let simplex_inside = polytope.h().contains_polyhedron(&simplex)?;
    let box_contains = outer_box.contains_polyhedron(polytope.h())?;
    Ok(ContainmentBounds {
        thresholds,
        polytope,
        simplex,
        outer_box,
        simplex_inside,
        box_contains,
    })
}

/// Whether every vertex stays inside after zeroing any one coordinate.
pub fn is_down_closed(p: &HPolyhedron) -> Result<bool> {
    let v = enumerate_vertices(p)?;
    if !v.is_bounded() {
        return Err(Error::Unbounded);
    }
    for vertex in v.vertices() {
        if !vertex.is_nonnegative() {
            return Ok(false);
        }
        for i in 0..p.dim() {
            let mut coords = vertex.coords().to_vec();
            coords[i] = Rational::zero();
            if !p.contains(&RatVec::new(coords)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `{λ + t·e_axis : λ ∈ P, 0 ≤ t ≤ 1/d}`.
pub fn prism_extend(p: &LctPolytope, d: u32, axis: usize) -> Result<LctPolytope> {
    if d == 0 {
        return Err(Error::InvalidArgument(
            "prism parameter must be positive".into(),
        ));
    }
    if axis >= p.dim() {
        return Err(Error::InvalidArgument(format!("axis {axis} out of range")));
    }
    let v = p.vertices()?;
    if !v.is_bounded() {
        return Err(Error::Unbounded);
    }
    let shift = RatVec::unit(p.dim(), axis).scale(&Rational::from_integer(d.into()).recip());
    let mut points: Vec<RatVec> = v.vertices().to_vec();
    points.extend(v.vertices().iter().map(|x| x.add(&shift)));
    Ok(LctPolytope {
        h: hull(&points, &[])?,
        provenance: Provenance::Transform("prism_extend"),
    })
}

/// The tuple `(b_1, …, b_axis + (y^d), …, b_r)` in one more variable `y`,
/// where `b_i` is the pullback of `a_i`.
pub fn extended_tuple(ideals: &[MonomialIdeal], d: u32, axis: usize) -> Result<Vec<MonomialIdeal>> {
    let n = check_ideals(ideals)?;
    if axis >= ideals.len() {
        return Err(Error::InvalidArgument(format!("axis {axis} out of range")));
    }
    if d == 0 {
        return Err(Error::InvalidArgument(
            "prism parameter must be positive".into(),
        ));
    }
    let mut y_d = vec![0; n + 1];
    y_d[n] = d;
    let y_d = MonomialIdeal::principal(y_d)?;
    ideals
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let b = a.extend_variables(1);
            if i == axis {
                b.sum(&y_d)
            } else {
                Ok(b)
            }
        })
        .collect()
}

/// Toric resolution data read off the Newton polyhedra: one divisor per
/// inner facet normal `w` of the Minkowski sum, with `κ = ⟨w, e⟩ − 1` and
/// `α_i = h_i(w)`.
pub fn toric_resolution_data(ideals: &[MonomialIdeal]) -> Result<ResolutionData> {
    check_ideals(ideals)?;
    let newtons = ideals
        .iter()
        .map(|a| a.newton_polyhedron())
        .collect::<Result<Vec<_>>>()?;
    let mut sum = newtons[0].base().clone();
    for p in &newtons[1..] {
        sum = minkowski_sum(&sum, p.base())?;
    }
    let mut kappa = Vec::new();
    let mut alpha = Vec::new();
    for h in sum.to_h()?.explicit_halfspaces() {
        let w = h.normal.scale(&-Rational::one());
        let row = newtons
            .iter()
            .map(|p| p.support(&w).map(|s| to_u32(&s)))
            .collect::<Result<Result<Vec<u32>>>>()??;
        let weight: Rational = w.iter().sum();
        kappa.push(to_u32(&weight)? - 1);
        alpha.push(row);
    }
    let through_x = (0..kappa.len()).collect();
    ResolutionData::new(ideals.len(), kappa, alpha, through_x)
}

fn to_u32(x: &Rational) -> Result<u32> {
    if !x.is_integer() || x.is_negative() {
        return Err(Error::InvalidArgument(format!(
            "{x} is not a nonnegative integer"
        )));
    }
    u32::try_from(x.to_integer()).map_err(|_| Error::Overflow)
}
