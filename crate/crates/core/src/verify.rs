//! Seeded randomized property suites.
//!
//! Instances are drawn up front from a ChaCha stream seeded with the
//! suite seed, evaluated concurrently, and reported in index order, so a
//! given `(suite, seed, count)` always produces the same report. A failing
//! tuple instance is greedily shrunk before it is reported.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geom::{
    enumerate_vertices, hausdorff_sq, hull, minkowski_sum, sqrt_triangle_holds, support_min,
    HPolyhedron, VPolyhedron,
};
use crate::lct::{
    containment_bounds, extended_tuple, is_down_closed, lct_polytope_monomial, lct_threshold,
    membership_oracle, order_bounds_check, power_rescale, prism_extend,
};
use crate::monomial::{Exponent, MonomialIdeal};
use crate::parallel::map_indexed;
use crate::rational::{RatVec, Rational};
use crate::sequence::{
    cor2_check, detect_stationary_limit, ex11_family, strictly_decreasing_positive,
    tail_intersection, truncation_family,
};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Prop1,
    Order,
    Cor2,
    Ex11,
    Oracle,
    Truncation,
    Geometry,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Prop1,
        Suite::Order,
        Suite::Cor2,
        Suite::Ex11,
        Suite::Oracle,
        Suite::Truncation,
        Suite::Geometry,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Prop1 => "prop1",
            Suite::Order => "order",
            Suite::Cor2 => "cor2",
            Suite::Ex11 => "ex11",
            Suite::Oracle => "oracle",
            Suite::Truncation => "truncate",
            Suite::Geometry => "geometry",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuiteFailure {
    pub instance: usize,
    pub checks: Vec<String>,
    pub reproducer: String,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub count: usize,
    pub failures: Vec<SuiteFailure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {} seed {} instances {}: {} failure(s)",
            self.suite,
            self.seed,
            self.count,
            self.failures.len()
        )?;
        for fail in &self.failures {
            writeln!(
                f,
                "  instance {}: {}",
                fail.instance,
                fail.checks.join(", ")
            )?;
            writeln!(f, "    reproducer: {}", fail.reproducer)?;
        }
        Ok(())
    }
}

/// A random tuple of monomial ideals plus the auxiliary parameters some
/// suites need. Every field indexed by ideal has one entry per ideal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TupleCase {
    pub n: usize,
    pub ideals: Vec<Vec<Exponent>>,
    /// Small positive integers, one per ideal (rescaling exponents).
    pub weights: Vec<u32>,
    /// Monomial multipliers, one per ideal (for smaller ideals).
    pub shifts: Vec<Exponent>,
    /// High-degree monomials, one list per ideal (for a partner tuple).
    pub partners: Vec<Vec<Exponent>>,
    /// Suite-specific level: truncation degree or prism parameter.
    pub level: u32,
    /// Suite-specific index: the prism axis.
    pub axis: usize,
}

impl TupleCase {
    pub fn tuple(&self) -> Result<Vec<MonomialIdeal>> {
        self.ideals
            .iter()
            .map(|g| MonomialIdeal::new(self.n, g.clone()))
            .collect()
    }

    /// Same low-degree part as the tuple modulo `m^level`, with the
    /// partner monomials in place of the high-degree generators.
    pub fn partner_tuple(&self) -> Result<Vec<MonomialIdeal>> {
        let n_deg = self.level;
        self.ideals
            .iter()
            .zip(&self.partners)
            .map(|(gens, extra)| {
                let mut b: Vec<Exponent> = gens
                    .iter()
                    .filter(|g| g.iter().sum::<u32>() < n_deg)
                    .cloned()
                    .collect();
                b.extend(extra.iter().cloned());
                if b.is_empty() {
                    b = crate::monomial::monomials_of_degree(self.n, n_deg);
                }
                MonomialIdeal::new(self.n, b)
            })
            .collect()
    }

    fn shrink_candidates(&self) -> Vec<TupleCase> {
        let mut out = Vec::new();
        let r = self.ideals.len();
        if r > 1 {
            for i in 0..r {
                let mut c = self.clone();
                c.ideals.remove(i);
                c.weights.remove(i);
                c.shifts.remove(i);
                c.partners.remove(i);
                c.axis = c.axis.min(r - 2);
                out.push(c);
            }
        }
        for i in 0..r {
            if self.ideals[i].len() > 1 {
                for k in 0..self.ideals[i].len() {
                    let mut c = self.clone();
                    c.ideals[i].remove(k);
                    out.push(c);
                }
            }
            for k in 0..self.ideals[i].len() {
                for j in 0..self.n {
                    if self.ideals[i][k][j] > 0 {
                        let mut c = self.clone();
                        c.ideals[i][k][j] -= 1;
                        if c.ideals[i][k].iter().any(|&e| e > 0) {
                            out.push(c);
                        }
                    }
                }
            }
            if self.weights[i] > 1 {
                let mut c = self.clone();
                c.weights[i] = 1;
                out.push(c);
            }
            if self.shifts[i].iter().any(|&e| e > 0) {
                let mut c = self.clone();
                c.shifts[i] = vec![0; self.n];
                out.push(c);
            }
            for k in 0..self.partners[i].len() {
                let mut c = self.clone();
                c.partners[i].remove(k);
                out.push(c);
            }
        }
        if self.level > 1 {
            let mut c = self.clone();
            c.level -= 1;
            out.push(c);
        }
        out
    }
}

impl fmt::Display for TupleCase {
    /// The tuple as an input file for the command-line tool, followed by
    /// the auxiliary parameters.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vecs = |v: &[Exponent]| {
            v.iter()
                .map(|g| format!("[{}]", join(g)))
                .collect::<Vec<_>>()
                .join(",")
        };
        let ideals = self
            .ideals
            .iter()
            .map(|g| format!("{{\"monomials\":[{}]}}", vecs(g)))
            .collect::<Vec<_>>()
            .join(",");
        write!(
            f,
            "{{\"format\":1,\"vars\":{},\"ideals\":[{ideals}]}}",
            self.n
        )?;
        write!(
            f,
            " weights=[{}] shifts=[{}] partners=[{}] level={} axis={}",
            join(&self.weights),
            vecs(&self.shifts),
            self.partners
                .iter()
                .map(|p| format!("[{}]", vecs(p)))
                .collect::<Vec<_>>()
                .join(","),
            self.level,
            self.axis
        )
    }
}

fn join<T: fmt::Display>(xs: &[T]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn random_exponent<R: Rng>(rng: &mut R, n: usize, max: u32) -> Exponent {
    loop {
        let g: Exponent = (0..n).map(|_| rng.gen_range(0..=max)).collect();
        if g.iter().any(|&e| e > 0) {
            return g;
        }
    }
}

/// A monomial of total degree exactly `deg`.
fn random_of_degree<R: Rng>(rng: &mut R, n: usize, deg: u32) -> Exponent {
    let mut g = vec![0; n];
    for _ in 0..deg {
        g[rng.gen_range(0..n)] += 1;
    }
    g
}

/// Draws one tuple case: `n ≤ 3` variables, `r ≤ 3` ideals, each with at
/// most four generators of exponents at most five.
pub fn random_tuple_case<R: Rng>(rng: &mut R) -> TupleCase {
    let n = rng.gen_range(1..=3);
    let r = rng.gen_range(1..=3);
    let ideals = (0..r)
        .map(|_| {
            let k = rng.gen_range(1..=4);
            (0..k).map(|_| random_exponent(rng, n, 5)).collect()
        })
        .collect();
    let weights = (0..r).map(|_| rng.gen_range(1..=3)).collect();
    let shifts = (0..r)
        .map(|_| (0..n).map(|_| rng.gen_range(0..=2)).collect())
        .collect();
    let level = rng.gen_range(2..=6);
    let partners = (0..r)
        .map(|_| {
            let k = rng.gen_range(0..=2);
            (0..k)
                .map(|_| {
                    let deg = rng.gen_range(level..=level + 2);
                    random_of_degree(rng, n, deg)
                })
                .collect()
        })
        .collect();
    let axis = rng.gen_range(0..r);
    TupleCase {
        n,
        ideals,
        weights,
        shifts,
        partners,
        level,
        axis,
    }
}

pub fn random_tuple_cases(seed: u64, count: usize) -> Vec<TupleCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_tuple_case(&mut rng)).collect()
}

type Checks = Vec<String>;

fn record(failed: &mut Checks, name: &str, outcome: Result<bool>) {
    match outcome {
        Ok(true) => {}
        Ok(false) => failed.push(name.to_string()),
        Err(e) => failed.push(format!("{name} (error: {e})")),
    }
}

fn q(k: usize, den: i64) -> Rational {
    Rational::new((k as i64).into(), den.into())
}

/// Every point of the quarter-integer grid in `[0, n]^r`.
fn quarter_grid(n: usize, r: usize) -> Vec<RatVec> {
    let side = 4 * n + 1;
    let total = side.pow(r as u32);
    (0..total)
        .map(|mut idx| {
            let coords = (0..r)
                .map(|_| {
                    let k = idx % side;
                    idx /= side;
                    q(k, 4)
                })
                .collect();
            RatVec::new(coords)
        })
        .collect()
}

pub fn check_oracle(case: &TupleCase) -> Checks {
    let mut failed = Vec::new();
    let outcome = (|| {
        let tuple = case.tuple()?;
        let p = lct_polytope_monomial(&tuple)?;
        for lam in quarter_grid(case.n, tuple.len()) {
            if membership_oracle(&tuple, &lam)? != p.contains(&lam) {
                return Ok(false);
            }
        }
        Ok(true)
    })();
    record(&mut failed, "oracle agreement on grid", outcome);
    failed
}

pub fn check_prop1(case: &TupleCase) -> Checks {
    let mut failed = Vec::new();
    let tuple = match case.tuple() {
        Ok(t) => t,
        Err(e) => return vec![format!("input (error: {e})")],
    };
    let r = tuple.len();
    let p = match lct_polytope_monomial(&tuple) {
        Ok(p) => p,
        Err(e) => return vec![format!("construction (error: {e})")],
    };
    let origin = RatVec::zeros(r);
    record(
        &mut failed,
        "origin",
        membership_oracle(&tuple, &origin).map(|m| m && p.contains(&origin)),
    );
    record(&mut failed, "down-closed", is_down_closed(p.h()));
    let n = Rational::from_integer(case.n.into());
    record(
        &mut failed,
        "inside [0,n]^r",
        HPolyhedron::box_from_origin(&vec![n; r]).contains_polyhedron(p.h()),
    );
    match containment_bounds(&tuple) {
        Ok(b) => {
            if !b.simplex_inside {
                failed.push("inner simplex".into());
            }
            if !b.box_contains {
                failed.push("outer box".into());
            }
        }
        Err(e) => failed.push(format!("bounds (error: {e})")),
    }
    record(
        &mut failed,
        "power rescale",
        (|| {
            let powered = tuple
                .iter()
                .zip(&case.weights)
                .map(|(a, &m)| a.power(m))
                .collect::<Result<Vec<_>>>()?;
            let direct = lct_polytope_monomial(&powered)?;
            Ok(power_rescale(&p, &case.weights)?.same_set(&direct))
        })(),
    );
    record(
        &mut failed,
        "monotone under inclusion",
        (|| {
            let smaller = tuple
                .iter()
                .zip(&case.shifts)
                .map(|(a, u)| a.product(&MonomialIdeal::principal(u.clone())?))
                .collect::<Result<Vec<_>>>()?;
            if !smaller.iter().zip(&tuple).all(|(s, a)| a.contains_ideal(s)) {
                return Ok(false);
            }
            let ps = lct_polytope_monomial(&smaller)?;
            p.h().contains_polyhedron(ps.h())
        })(),
    );
    failed
}

pub fn check_order(case: &TupleCase) -> Checks {
    let mut failed = Vec::new();
    let tuple = match case.tuple() {
        Ok(t) => t,
        Err(e) => return vec![format!("input (error: {e})")],
    };
    for (i, a) in tuple.iter().enumerate() {
        record(
            &mut failed,
            &format!("order bounds (ideal {i})"),
            order_bounds_check(a),
        );
        record(
            &mut failed,
            &format!("tight upper bound (ideal {i})"),
            (|| {
                let ord = a.ord()?;
                let lct = lct_threshold(&MonomialIdeal::maximal_power(case.n, ord))?;
                Ok(lct == Rational::new(case.n.into(), ord.into()))
            })(),
        );
    }
    failed
}

pub fn check_cor2(case: &TupleCase) -> Checks {
    let mut failed = Vec::new();
    record(
        &mut failed,
        "distance bound",
        (|| {
            let a = case.tuple()?;
            let b = case.partner_tuple()?;
            Ok(cor2_check(&a, &b, case.level)?.holds())
        })(),
    );
    failed
}

pub fn check_ex11(case: &TupleCase) -> Checks {
    const PREFIX: usize = 5;
    let mut failed = Vec::new();
    let tuple = match case.tuple() {
        Ok(t) => t,
        Err(e) => return vec![format!("input (error: {e})")],
    };
    let d = case.level;
    let base = match lct_polytope_monomial(&tuple) {
        Ok(p) => p,
        Err(e) => return vec![format!("construction (error: {e})")],
    };
    record(
        &mut failed,
        "prism coherence",
        (|| {
            let geometric = prism_extend(&base, d, case.axis)?;
            let algebraic = lct_polytope_monomial(&extended_tuple(&tuple, d, case.axis)?)?;
            Ok(geometric.same_set(&algebraic))
        })(),
    );
    match (|| {
        let seq = ex11_family(&tuple, PREFIX, case.axis)?;
        let rep = detect_stationary_limit(&seq, 3)?;
        let inter = tail_intersection(&seq, 1)?;
        let last = prism_extend(&base, PREFIX as u32, case.axis)?;
        Ok::<_, Error>((rep, inter == *last.h()))
    })() {
        Ok((rep, inter_ok)) => {
            if rep.stationary {
                failed.push("prefix not stationary".into());
            }
            if !strictly_decreasing_positive(&rep.sq_distance_profile) {
                failed.push("distance profile strictly decreasing".into());
            }
            if !inter_ok {
                failed.push("prefix intersection is last prism".into());
            }
        }
        Err(e) => failed.push(format!("family (error: {e})")),
    }
    failed
}

pub fn check_truncation(case: &TupleCase) -> Checks {
    let mut failed = Vec::new();
    let outcome = (|| {
        let tuple = case.tuple()?;
        let limit = lct_polytope_monomial(&tuple)?;
        let top = tuple
            .iter()
            .map(MonomialIdeal::max_degree)
            .max()
            .unwrap_or(1) as usize;
        // Without a pure power of every variable the truncations keep
        // changing the Newton polyhedron; the chain then only descends
        // towards the limit.
        let primary = tuple.iter().all(MonomialIdeal::is_m_primary);
        let seq = truncation_family(&tuple, top + 2)?;
        let terms = seq.terms()?;
        let mut checks = Vec::new();
        for (i, t) in terms.iter().enumerate() {
            if !t.h().contains_polyhedron(limit.h())? {
                checks.push(format!("term {} contains limit", i + 1));
            }
            if primary && i + 1 > top && !t.same_set(&limit) {
                checks.push(format!("term {} equals limit", i + 1));
            }
        }
        for (i, w) in terms.windows(2).enumerate() {
            if !w[0].h().contains_polyhedron(w[1].h())? {
                checks.push(format!("term {} contains term {}", i + 1, i + 2));
            }
        }
        let rep = detect_stationary_limit(&seq, 2)?;
        if primary {
            if !rep.stationary
                || rep.candidate_limit != *limit.h()
                || rep.m0.is_none_or(|m| m > top + 1)
            {
                checks.push("stationary at the limit".into());
            }
        } else if rep.sq_distance_profile.windows(2).any(|w| w[1] > w[0]) {
            checks.push("distance to the limit nonincreasing".into());
        }
        Ok::<_, Error>(checks)
    })();
    match outcome {
        Ok(checks) => failed.extend(checks),
        Err(e) => failed.push(format!("family (error: {e})")),
    }
    failed
}

fn shrink(case: &TupleCase, check: fn(&TupleCase) -> Checks) -> TupleCase {
    let mut current = case.clone();
    'outer: loop {
        for cand in current.shrink_candidates() {
            if !check(&cand).is_empty() {
                current = cand;
                continue 'outer;
            }
        }
        return current;
    }
}

/// A random point cloud together with a second and third one of the same
/// dimension, for the geometry kernel checks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeometryCase {
    pub dim: usize,
    pub clouds: [Vec<RatVec>; 3],
    pub probes: Vec<RatVec>,
    pub ideals: [Vec<Exponent>; 2],
    pub weight: RatVec,
}

impl fmt::Display for GeometryCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts = |v: &[RatVec]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(f, "dim={}", self.dim)?;
        for (i, c) in self.clouds.iter().enumerate() {
            write!(f, " P{i}=[{}]", pts(c))?;
        }
        write!(
            f,
            " probes=[{}] A={:?} B={:?} w={}",
            pts(&self.probes),
            self.ideals[0],
            self.ideals[1],
            self.weight
        )
    }
}

fn random_point<R: Rng>(rng: &mut R, dim: usize) -> RatVec {
    RatVec::new((0..dim).map(|_| q(rng.gen_range(0..=8), 2)).collect())
}

pub fn random_geometry_case<R: Rng>(rng: &mut R) -> GeometryCase {
    let dim = rng.gen_range(1..=3);
    let cloud = |rng: &mut R| {
        let k = rng.gen_range(1..=dim + 3);
        (0..k).map(|_| random_point(rng, dim)).collect::<Vec<_>>()
    };
    let clouds = [cloud(rng), cloud(rng), cloud(rng)];
    let probes = (0..4).map(|_| random_point(rng, dim)).collect();
    let ideal = |rng: &mut R| {
        let k = rng.gen_range(1..=4);
        (0..k)
            .map(|_| random_exponent(rng, dim, 5))
            .collect::<Vec<_>>()
    };
    let ideals = [ideal(rng), ideal(rng)];
    let weight = RatVec::new((0..dim).map(|_| q(rng.gen_range(0..=4), 1)).collect());
    GeometryCase {
        dim,
        clouds,
        probes,
        ideals,
        weight,
    }
}

pub fn random_geometry_cases(seed: u64, count: usize) -> Vec<GeometryCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_geometry_case(&mut rng)).collect()
}

pub fn check_geometry(case: &GeometryCase) -> Checks {
    let mut failed = Vec::new();
    let polys: Result<Vec<HPolyhedron>> = case.clouds.iter().map(|c| hull(c, &[])).collect();
    let polys = match polys {
        Ok(p) => p,
        Err(e) => return vec![format!("hull (error: {e})")],
    };

    for (i, (p, cloud)) in polys.iter().zip(&case.clouds).enumerate() {
        record(
            &mut failed,
            &format!("round trip P{i}"),
            (|| {
                let v = enumerate_vertices(p)?;
                let vertices_from_cloud = v.vertices().iter().all(|x| cloud.contains(x));
                let cloud_inside = cloud.iter().all(|x| p.contains(x));
                Ok(v.is_bounded()
                    && vertices_from_cloud
                    && cloud_inside
                    && hull(v.vertices(), &[])? == *p)
            })(),
        );
        record(
            &mut failed,
            &format!("lp membership P{i}"),
            (|| {
                let v = VPolyhedron::minimal(cloud, &[])?;
                for x in case.probes.iter().chain(cloud) {
                    if v.contains_lp(x)? != p.contains(x) {
                        return Ok(false);
                    }
                }
                Ok(true)
            })(),
        );
    }

    record(
        &mut failed,
        "hausdorff axioms",
        (|| {
            let [a, b, c] = [&polys[0], &polys[1], &polys[2]];
            let ab = hausdorff_sq(a, b)?;
            let ba = hausdorff_sq(b, a)?;
            let bc = hausdorff_sq(b, c)?;
            let ac = hausdorff_sq(a, c)?;
            let identity = hausdorff_sq(a, a)?.is_zero() && (ab.is_zero() == (a == b));
            Ok(ab == ba && identity && sqrt_triangle_holds(&ac, &ab, &bc))
        })(),
    );

    record(
        &mut failed,
        "support additivity",
        (|| {
            let a = MonomialIdeal::new(case.dim, case.ideals[0].clone())?.newton_polyhedron()?;
            let b = MonomialIdeal::new(case.dim, case.ideals[1].clone())?.newton_polyhedron()?;
            let sum = minkowski_sum(a.base(), b.base())?;
            let w = &case.weight;
            Ok(support_min(&sum, w)? == support_min(a.base(), w)? + support_min(b.base(), w)?)
        })(),
    );
    failed
}

fn run_tuple_suite(
    suite: Suite,
    seed: u64,
    count: usize,
    check: fn(&TupleCase) -> Checks,
) -> SuiteReport {
    let cases = random_tuple_cases(seed, count);
    let results = map_indexed(cases.len(), |i| check(&cases[i]));
    let failures = results
        .into_iter()
        .enumerate()
        .filter(|(_, checks)| !checks.is_empty())
        .map(|(i, checks)| SuiteFailure {
            instance: i,
            checks,
            reproducer: shrink(&cases[i], check).to_string(),
        })
        .collect();
    SuiteReport {
        suite,
        seed,
        count,
        failures,
    }
}

/// Runs `count` random instances of `suite` from `seed`.
pub fn run_suite(suite: Suite, seed: u64, count: usize) -> SuiteReport {
    match suite {
        Suite::Prop1 => run_tuple_suite(suite, seed, count, check_prop1),
        Suite::Order => run_tuple_suite(suite, seed, count, check_order),
        Suite::Cor2 => run_tuple_suite(suite, seed, count, check_cor2),
        Suite::Ex11 => run_tuple_suite(suite, seed, count, check_ex11),
        Suite::Oracle => run_tuple_suite(suite, seed, count, check_oracle),
        Suite::Truncation => run_tuple_suite(suite, seed, count, check_truncation),
        Suite::Geometry => {
            let cases = random_geometry_cases(seed, count);
            let results = map_indexed(cases.len(), |i| check_geometry(&cases[i]));
            let failures = results
                .into_iter()
                .enumerate()
                .filter(|(_, checks)| !checks.is_empty())
                .map(|(i, checks)| SuiteFailure {
                    instance: i,
                    checks,
                    reproducer: cases[i].to_string(),
                })
                .collect();
            SuiteReport {
                suite,
                seed,
                count,
                failures,
            }
        }
    }
}
