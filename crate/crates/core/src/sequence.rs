//! Finite prefixes of sequences of LCT-polytopes: tail intersections,
//! stabilization evidence, truncation families and the non-stationary
//! prism family.
//!
//! Everything here works on a materialized prefix and reports what the
//! prefix shows. Nothing asserts a statement about the infinite sequence.

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geom::{hausdorff_sq, HPolyhedron};
use crate::lct::{extended_tuple, lct_polytope_monomial, lct_threshold, LctPolytope};
use crate::monomial::MonomialIdeal;
use crate::parallel::map_indexed;
use crate::rational::Rational;

type Generator = dyn Fn(usize) -> Result<LctPolytope> + Send + Sync;

/// Terms `P_1, …, P_M` of a sequence produced by a pure function of the
/// (1-based) index. Terms are computed on demand and cached.
#[derive(Clone)]
pub struct PolytopeSequence {
    generator: Arc<Generator>,
    memo: Arc<Vec<OnceLock<LctPolytope>>>,
    known_limit: Option<HPolyhedron>,
}

impl fmt::Debug for PolytopeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PolytopeSequence")
            .field("prefix_length", &self.prefix_length())
            .field("known_limit", &self.known_limit)
            .finish_non_exhaustive()
    }
}

impl PolytopeSequence {
    pub fn new<F>(prefix_length: usize, generator: F) -> Result<Self>
    where
        F: Fn(usize) -> Result<LctPolytope> + Send + Sync + 'static,
    {
        if prefix_length == 0 {
            return Err(Error::InvalidArgument(
                "prefix must have at least one term".into(),
            ));
        }
        Ok(PolytopeSequence {
            generator: Arc::new(generator),
            memo: Arc::new((0..prefix_length).map(|_| OnceLock::new()).collect()),
            known_limit: None,
        })
    }

    /// The same sequence from explicitly listed terms.
    pub fn from_terms(terms: Vec<LctPolytope>) -> Result<Self> {
        let terms = Arc::new(terms);
        let len = terms.len();
        Self::new(len, move |m| Ok(terms[m - 1].clone()))
    }

    /// Attaches the limit the sequence is known to converge to, used as the
    /// reference polytope when the prefix does not stabilize.
    pub fn with_known_limit(mut self, limit: HPolyhedron) -> Self {
        self.known_limit = Some(limit);
        self
    }

    pub fn known_limit(&self) -> Option<&HPolyhedron> {
        self.known_limit.as_ref()
    }

    pub fn prefix_length(&self) -> usize {
        self.memo.len()
    }

    /// `P_m` for `1 ≤ m ≤ prefix_length`.
    pub fn term(&self, m: usize) -> Result<&LctPolytope> {
        if m == 0 || m > self.prefix_length() {
            return Err(Error::InvalidArgument(format!(
                "index {m} outside 1..={}",
                self.prefix_length()
            )));
        }
        let slot = &self.memo[m - 1];
        if let Some(p) = slot.get() {
            return Ok(p);
        }
        let p = (self.generator)(m)?;
        Ok(slot.get_or_init(|| p))
    }

    /// All terms of the prefix, generated concurrently.
    pub fn terms(&self) -> Result<Vec<&LctPolytope>> {
        let missing: Vec<usize> = (1..=self.prefix_length())
            .filter(|&m| self.memo[m - 1].get().is_none())
            .collect();
        let computed = map_indexed(missing.len(), |i| (self.generator)(missing[i]));
        for (m, p) in missing.into_iter().zip(computed) {
            let p = p?;
            let _ = self.memo[m - 1].set(p);
        }
        (1..=self.prefix_length()).map(|m| self.term(m)).collect()
    }
}

/// Evidence about the limit of a sequence read off a finite prefix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LimitReport {
    pub candidate_limit: HPolyhedron,
    /// First index of the stable tail, when the prefix stabilizes.
    pub m0: Option<usize>,
    /// `δ²(P_m, candidate_limit)` for `m = 1, …, M`.
    pub sq_distance_profile: Vec<Rational>,
    pub stationary: bool,
}

/// `P_{m0} ∩ ⋯ ∩ P_M`, canonicalized.
pub fn tail_intersection(seq: &PolytopeSequence, m0: usize) -> Result<HPolyhedron> {
    let len = seq.prefix_length();
    if m0 == 0 || m0 > len {
        return Err(Error::InvalidArgument(format!(
            "m0 = {m0} outside 1..={len}"
        )));
    }
    let terms = seq.terms()?;
    let mut acc = terms[m0 - 1].h().clone();
    for p in &terms[m0..] {
        acc = acc.intersect(p.h())?;
    }
    acc.canonicalize()
}

/// Looks for a stable tail.
///
/// The prefix counts as stationary when its last `window` terms are
/// canonically equal; `m0` is then the first index of the longest constant
/// run ending at the last term, and the candidate limit is that common
/// polytope. Otherwise the candidate is the sequence's known limit if it
/// has one, and the intersection of the whole prefix if not.
pub fn detect_stationary_limit(seq: &PolytopeSequence, window: usize) -> Result<LimitReport> {
    let len = seq.prefix_length();
    if window == 0 {
        return Err(Error::InvalidArgument("window must be positive".into()));
    }
    if len < window + 1 {
        return Err(Error::InvalidArgument(format!(
            "prefix of {len} terms is too short for a window of {window}"
        )));
    }
    let terms = seq.terms()?;
    let last = terms[len - 1];
    let run = terms.iter().rev().take_while(|p| p.same_set(last)).count();
    let stationary = run >= window;
    let (m0, candidate_limit) = if stationary {
        let m0 = len - run + 1;
        (Some(m0), tail_intersection(seq, m0)?)
    } else {
        let q = match seq.known_limit() {
            Some(q) => q.canonicalize()?,
            None => tail_intersection(seq, 1)?,
        };
        (None, q)
    };
    let profile = map_indexed(len, |i| hausdorff_sq(terms[i].h(), &candidate_limit));
    Ok(LimitReport {
        candidate_limit,
        m0,
        sq_distance_profile: profile.into_iter().collect::<Result<_>>()?,
        stationary,
    })
}

/// Term `q` is `LCT(a_1 + m^q, …, a_r + m^q)`, for `q = 1, …, prefix`.
/// The known limit is `LCT(a_1, …, a_r)`.
pub fn truncation_family(ideals: &[MonomialIdeal], prefix: usize) -> Result<PolytopeSequence> {
    let limit = lct_polytope_monomial(ideals)?;
    let ideals = ideals.to_vec();
    let seq = PolytopeSequence::new(prefix, move |q| {
        let q = u32::try_from(q).map_err(|_| Error::Overflow)?;
        let truncated = ideals
            .iter()
            .map(|a| a.truncate(q))
            .collect::<Result<Vec<_>>>()?;
        lct_polytope_monomial(&truncated)
    })?;
    Ok(seq.with_known_limit(limit.into_h()))
}

/// Squared Hausdorff distance of two tuples that agree modulo `m^N`,
/// against the bound `n²·r/N²`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cor2Report {
    pub sq_distance: Rational,
    pub bound: Rational,
}

impl Cor2Report {
    pub fn holds(&self) -> bool {
        self.sq_distance <= self.bound
    }
}

/// Compares `LCT(A)` and `LCT(B)` for tuples with `A_i + m^N = B_i + m^N`.
pub fn cor2_check(a: &[MonomialIdeal], b: &[MonomialIdeal], n_deg: u32) -> Result<Cor2Report> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    let r = a.len();
    let n = a
        .first()
        .ok_or_else(|| Error::InvalidArgument("need at least one ideal".into()))?
        .n();
    for (x, y) in a.iter().zip(b) {
        if x.n() != n || y.n() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: if x.n() != n { x.n() } else { y.n() },
            });
        }
        if x.truncate(n_deg)? != y.truncate(n_deg)? {
            return Err(Error::TruncationMismatch(n_deg));
        }
    }
    let pa = lct_polytope_monomial(a)?;
    let pb = lct_polytope_monomial(b)?;
    let sq_distance = hausdorff_sq(pa.h(), pb.h())?;
    let n = Rational::from_integer(n.into());
    let bound = &n * &n * Rational::from_integer(r.into())
        / Rational::from_integer((u64::from(n_deg) * u64::from(n_deg)).into());
    Ok(Cor2Report { sq_distance, bound })
}

/// Term `d` is the LCT-polytope of `(b_1, …, b_axis + (y^d), …, b_r)` in
/// one more variable, for `d = 1, …, prefix`. The known limit is the
/// LCT-polytope of the base tuple.
pub fn ex11_family(
    ideals: &[MonomialIdeal],
    prefix: usize,
    axis: usize,
) -> Result<PolytopeSequence> {
    let limit = lct_polytope_monomial(ideals)?;
    extended_tuple(ideals, 1, axis)?;
    let ideals = ideals.to_vec();
    let seq = PolytopeSequence::new(prefix, move |d| {
        let d = u32::try_from(d).map_err(|_| Error::Overflow)?;
        lct_polytope_monomial(&extended_tuple(&ideals, d, axis)?)
    })?;
    Ok(seq.with_known_limit(limit.into_h()))
}

/// Whether the intersection of the materialized prefix lies inside `q`.
pub fn limit_membership_bound_check(seq: &PolytopeSequence, q: &HPolyhedron) -> Result<bool> {
    let inter = tail_intersection(seq, 1)?;
    q.contains_polyhedron(&inter)
}

/// Orders and threshold upper bounds along one coordinate's ideal sequence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrderProbe {
    pub orders: Vec<u32>,
    pub max_order: u32,
    /// `n / ord(a^{(m)})` for each term.
    pub lct_upper_bounds: Vec<Rational>,
    /// The orders grow across the prefix and end at their maximum, so the
    /// thresholds of this coordinate trend to zero.
    pub flagged: bool,
}

/// Runs the order probe on each coordinate's sequence `a_i^{(1)}, a_i^{(2)}, …`.
pub fn order_divergence_probe(sequences: &[Vec<MonomialIdeal>]) -> Result<Vec<OrderProbe>> {
    sequences
        .iter()
        .map(|seq| {
            if seq.is_empty() {
                return Err(Error::InvalidArgument("empty ideal sequence".into()));
            }
            let orders = seq
                .iter()
                .map(MonomialIdeal::ord)
                .collect::<Result<Vec<_>>>()?;
            let lct_upper_bounds = seq
                .iter()
                .zip(&orders)
                .map(|(a, &o)| Rational::new(a.n().into(), o.into()))
                .collect();
            let max_order = *orders.iter().max().expect("nonempty");
            let (first, last) = (orders[0], orders[orders.len() - 1]);
            Ok(OrderProbe {
                flagged: last > first && last == max_order,
                orders,
                max_order,
                lct_upper_bounds,
            })
        })
        .collect()
}

/// `lct(a^{(m)})` along a sequence of ideals, for comparison with the
/// bounds reported by [`order_divergence_probe`].
pub fn threshold_profile(seq: &[MonomialIdeal]) -> Result<Vec<Rational>> {
    seq.iter().map(lct_threshold).collect()
}

/// Whether every entry is strictly smaller than the previous one and the
/// last entry is positive.
pub fn strictly_decreasing_positive(profile: &[Rational]) -> bool {
    profile.windows(2).all(|w| w[1] < w[0]) && profile.last().is_some_and(|x| !x.is_zero())
}
