//! Monomial ideals and their Newton polyhedra.

use std::fmt;

use crate::error::{Error, Result};
use crate::geom::{support_min, HPolyhedron, VPolyhedron};
use crate::rational::{RatVec, Rational};

/// Exponent vector of a monomial `x^u`.
pub type Exponent = Vec<u32>;

/// A monomial ideal in `n` variables, stored by its minimal generators in
/// sorted order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<Exponent>,
}

fn divides(u: &[u32], v: &[u32]) -> bool {
    u.iter().zip(v).all(|(a, b)| a <= b)
}

fn degree(u: &[u32]) -> u64 {
    u.iter().map(|&e| e as u64).sum()
}

/// Removes every generator divisible by another one; the result is sorted
/// and free of duplicates.
pub fn minimalize(mut generators: Vec<Exponent>) -> Vec<Exponent> {
    generators.sort_by(|a, b| degree(a).cmp(&degree(b)).then_with(|| a.cmp(b)));
    generators.dedup();
    let mut kept: Vec<Exponent> = Vec::with_capacity(generators.len());
    for g in generators {
        if !kept.iter().any(|k| divides(k, &g)) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

/// All exponent vectors of total degree `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Exponent> {
    fn go(n: usize, d: u32, prefix: &mut Exponent, out: &mut Vec<Exponent>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            go(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, d, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

impl MonomialIdeal {
    pub fn new(n: usize, generators: Vec<Exponent>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("need at least one variable".into()));
        }
        if generators.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        for g in &generators {
            if g.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: g.len(),
                });
            }
        }
        Ok(MonomialIdeal {
            n,
            generators: minimalize(generators),
        })
    }

    /// The principal ideal `(x^u)`.
    pub fn principal(u: Exponent) -> Result<Self> {
        Self::new(u.len(), vec![u])
    }

    /// The maximal ideal `m = (x_1, …, x_n)`.
    pub fn maximal(n: usize) -> Self {
        Self::maximal_power(n, 1)
    }

    /// `m^d`, generated by all monomials of degree `d`.
    pub fn maximal_power(n: usize, d: u32) -> Self {
        MonomialIdeal {
            n,
            generators: minimalize(monomials_of_degree(n, d)),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Exponent] {
        &self.generators
    }

    /// Proper means the ideal vanishes at the origin: no generator is `1`.
    pub fn is_proper(&self) -> bool {
        self.generators.iter().all(|g| g.iter().any(|&e| e > 0))
    }

    /// Whether some power of every variable lies in the ideal, i.e. the
    /// ideal is primary to the maximal ideal at the origin.
    pub fn is_m_primary(&self) -> bool {
        (0..self.n).all(|j| {
            self.generators
                .iter()
                .any(|g| g[j] > 0 && g.iter().enumerate().all(|(k, &e)| k == j || e == 0))
        })
    }

    fn require_proper(&self) -> Result<()> {
        if self.is_proper() {
            Ok(())
        } else {
            Err(Error::ImproperIdeal)
        }
    }

    fn check_same_n(&self, other: &MonomialIdeal) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    pub fn contains_monomial(&self, u: &[u32]) -> bool {
        self.generators.iter().any(|g| divides(g, u))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        self.n == other.n && other.generators.iter().all(|g| self.contains_monomial(g))
    }

    /// Largest `d` with `a ⊆ m^d`.
    pub fn ord(&self) -> Result<u32> {
        self.require_proper()?;
        Ok(self
            .generators
            .iter()
            .map(|g| degree(g) as u32)
            .min()
            .expect("nonempty"))
    }

    /// Largest total degree among the minimal generators.
    pub fn max_degree(&self) -> u32 {
        self.generators
            .iter()
            .map(|g| degree(g) as u32)
            .max()
            .expect("nonempty")
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_n(other)?;
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                let s: Option<Exponent> = a.iter().zip(b).map(|(x, y)| x.checked_add(*y)).collect();
                gens.push(s.ok_or(Error::Overflow)?);
            }
        }
        MonomialIdeal::new(self.n, gens)
    }

    pub fn power(&self, m: u32) -> Result<MonomialIdeal> {
        if m == 0 {
            return Err(Error::InvalidArgument("power must be positive".into()));
        }
        let mut acc = self.clone();
        for _ in 1..m {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `a + m^N`.
    pub fn truncate(&self, n_deg: u32) -> Result<MonomialIdeal> {
        if n_deg == 0 {
            return Err(Error::InvalidArgument(
                "truncation degree must be positive".into(),
            ));
        }
        self.require_proper()?;
        let mut gens = self.generators.clone();
        gens.extend(monomials_of_degree(self.n, n_deg));
        MonomialIdeal::new(self.n, gens)
    }

    /// `a + other`.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_n(other)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        MonomialIdeal::new(self.n, gens)
    }

    /// Pullback along the projection that forgets `extra` trailing variables.
    pub fn extend_variables(&self, extra: usize) -> MonomialIdeal {
        MonomialIdeal {
            n: self.n + extra,
            generators: self
                .generators
                .iter()
                .map(|g| {
                    let mut g = g.clone();
                    g.resize(self.n + extra, 0);
                    g
                })
                .collect(),
        }
    }

    pub fn newton_polyhedron(&self) -> Result<NewtonPolyhedron> {
        NewtonPolyhedron::new(self)
    }
}

fn var_name(n: usize, i: usize) -> String {
    if n <= 3 {
        ["x", "y", "z"][i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            let mut wrote = false;
            for (i, &e) in g.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if wrote {
                    write!(f, "*")?;
                }
                write!(f, "{}", var_name(self.n, i))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
                wrote = true;
            }
            if !wrote {
                write!(f, "1")?;
            }
        }
        write!(f, ")")
    }
}

/// The Newton polyhedron `conv(exponents of a) + R_+^n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NewtonPolyhedron {
    base: VPolyhedron,
    source: MonomialIdeal,
}

fn to_point(u: &[u32]) -> RatVec {
    RatVec::from_ints(u.iter().map(|&e| e as i64))
}

fn unit_rays(n: usize) -> Vec<RatVec> {
    (0..n).map(|i| RatVec::unit(n, i)).collect()
}

impl NewtonPolyhedron {
    pub fn new(a: &MonomialIdeal) -> Result<Self> {
        a.require_proper()?;
        let points: Vec<RatVec> = a.generators.iter().map(|g| to_point(g)).collect();
        let base = VPolyhedron::minimal(&points, &unit_rays(a.n))?;
        Ok(NewtonPolyhedron {
            base,
            source: a.clone(),
        })
    }

    pub fn base(&self) -> &VPolyhedron {
        &self.base
    }

    pub fn source(&self) -> &MonomialIdeal {
        &self.source
    }

    pub fn vertices(&self) -> &[RatVec] {
        self.base.vertices()
    }

    pub fn to_h(&self) -> Result<HPolyhedron> {
        self.base.to_h()
    }

    /// `h(w) = min_{u ∈ P} ⟨w, u⟩` for `w ⪰ 0`.
    pub fn support(&self, w: &RatVec) -> Result<Rational> {
        support_min(&self.base, w)
    }

    /// Newton polyhedron of the `m`-th power, by scaling vertices.
    pub fn scaled(&self, m: u32) -> Result<VPolyhedron> {
        let c = Rational::from_integer(m.into());
        let pts: Vec<RatVec> = self.vertices().iter().map(|v| v.scale(&c)).collect();
        VPolyhedron::minimal(&pts, &unit_rays(self.source.n))
    }
}
