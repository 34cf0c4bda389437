//! Degree-zero charts `S_(f)`, the correspondence `p ↦ pS_f ∩ S_(f)` on
//! monomial primes, and the monomial part of the homogeneous topology.

use std::fmt;

use serde::Serialize;

use crate::diophantine::{hilbert_basis, semigroup_member, ConstrainedSemigroup, Decomposition, ExponentVector};
use crate::error::{Error, Result};
use crate::ringspec::{Monomial, RingSpec};

/// The semigroup of degree-zero Laurent monomials of `S_f`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChartAlgebra {
    pub f: Monomial,
    pub units: Vec<ExponentVector>,
    pub generators: Vec<ExponentVector>,
    pub free_coords: Vec<usize>,
}

impl ChartAlgebra {
    /// Generators of the chart as a monoid, units taken with both signs.
    pub fn monoid_generators(&self) -> Vec<ExponentVector> {
        let mut out: Vec<ExponentVector> = self.units.iter().flat_map(|u| [u.clone(), -u]).collect();
        out.extend(self.generators.iter().cloned());
        out
    }

    pub fn is_pointed(&self) -> bool {
        self.units.is_empty()
    }
}

/// Ideal generated by a set of variables. The empty set is the zero ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct MonomialPrime(Vec<usize>);

impl MonomialPrime {
    pub fn new(mut vars: Vec<usize>) -> Self {
        vars.sort_unstable();
        vars.dedup();
        MonomialPrime(vars)
    }

    pub fn zero() -> Self {
        MonomialPrime(Vec::new())
    }

    pub fn vars(&self) -> &[usize] {
        &self.0
    }

    pub fn contains_var(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    /// A monomial lies in the prime iff one of its variables does.
    pub fn contains(&self, m: &Monomial) -> bool {
        m.support().iter().any(|&i| self.contains_var(i))
    }

    pub fn render(&self, spec: &RingSpec) -> String {
        if self.0.is_empty() {
            return "(0)".into();
        }
        let names: Vec<&str> = self.0.iter().map(|&i| spec.names()[i].as_str()).collect();
        format!("({})", names.join(","))
    }

    /// Parses `x,y`, `(x, y)` or `(0)`.
    pub fn parse(spec: &RingSpec, text: &str) -> Result<Self> {
        let inner = text.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if inner.is_empty() || inner == "0" {
            return Ok(MonomialPrime::zero());
        }
        let vars = inner.split(',').map(|t| spec.var_index(t.trim())).collect::<Result<Vec<_>>>()?;
        if vars.len() == spec.nvars() && spec.nvars() > 0 {
            return Err(Error::BadArgument {
                token: text.into(),
                message: "the ideal of all variables is not allowed".into(),
            });
        }
        Ok(MonomialPrime::new(vars))
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn chart_algebra(spec: &RingSpec, f: &Monomial) -> Result<ChartAlgebra> {
    spec.require_relevant(f)?;
    chart_semigroup(spec, f)
}

/// Same as [`chart_algebra`] without requiring `f` to be relevant.
pub fn chart_semigroup(spec: &RingSpec, f: &Monomial) -> Result<ChartAlgebra> {
    let free_coords = f.support();
    let s = ConstrainedSemigroup::for_grading(spec.grading(), free_coords.clone())?;
    let hb = hilbert_basis(&s)?;
    Ok(ChartAlgebra { f: f.clone(), units: hb.units, generators: hb.generators, free_coords })
}

#[derive(Clone, Debug, Serialize)]
pub struct IntersectionReport {
    pub product: ChartAlgebra,
    /// Generators of `S_(f)` supported in `supp(fg)`; these get inverted.
    pub inverted: Vec<ExponentVector>,
    /// Every monoid generator of `S_(fg)` with its decomposition over
    /// `S_(f)` and the inverses of `inverted`.
    pub decompositions: Vec<(ExponentVector, Option<Decomposition>)>,
    /// `S_(f)` and the inverses of `inverted` lie in `S_(fg)`.
    pub contained: bool,
    pub consistent: bool,
}

/// Rebuilds `S_(fg)` as `S_(f)` localized at its generators supported in
/// `supp(fg)`.
pub fn chart_intersection_check(spec: &RingSpec, f: &Monomial, g: &Monomial) -> Result<IntersectionReport> {
    spec.require_relevant(f)?;
    spec.require_relevant(g)?;
    let cf = chart_algebra(spec, f)?;
    let fg = f.mul(g);
    let product = chart_algebra(spec, &fg)?;
    let big_support = fg.support();
    let inverted: Vec<ExponentVector> =
        cf.generators.iter().filter(|a| a.support().iter().all(|i| big_support.contains(i))).cloned().collect();
    let mut pool = cf.monoid_generators();
    pool.extend(inverted.iter().map(|a| -a));

    let target = ConstrainedSemigroup::for_grading(spec.grading(), big_support)?;
    let contained = pool.iter().all(|a| target.contains(a));
    let decompositions = product
        .monoid_generators()
        .into_iter()
        .map(|a| semigroup_member(&pool, &a).map(|d| (a, d)))
        .collect::<Result<Vec<_>>>()?;
    let consistent = contained && decompositions.iter().all(|(_, d)| d.is_some());
    Ok(IntersectionReport { product, inverted, decompositions, contained, consistent })
}

/// Generators of `pS_f ∩ S_(f)`: chart generators with a positive exponent on
/// a variable of `p`. `f` need not be relevant.
pub fn psi_image(spec: &RingSpec, f: &Monomial, p: &MonomialPrime) -> Result<Vec<ExponentVector>> {
    if p.vars().iter().any(|&i| f.exponents()[i] > 0) {
        return Err(Error::PrimeMeetsF { prime: p.render(spec), f: spec.render_monomial(f) });
    }
    let chart = chart_semigroup(spec, f)?;
    Ok(chart.generators.into_iter().filter(|a| p.vars().iter().any(|&i| a.entries()[i] > 0)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "lowercase")]
pub enum PsiScan {
    Injective { primes: Vec<MonomialPrime> },
    Collision { first: MonomialPrime, second: MonomialPrime, image: Vec<ExponentVector> },
}

/// Monomial primes of `Proj`: those not containing every generator of the
/// irrelevant ideal. Ordered by size, then lexicographically.
pub fn proj_monomial_primes(spec: &RingSpec) -> Vec<MonomialPrime> {
    let n = spec.nvars();
    let gens = spec.irrelevant_generators();
    let mut out: Vec<MonomialPrime> = (0..1u64 << n)
        .map(|mask| MonomialPrime::new((0..n).filter(|i| mask & (1 << i) != 0).collect()))
        .filter(|p| gens.iter().any(|g| !p.contains(g)))
        .collect();
    out.sort_by(|a, b| a.vars().len().cmp(&b.vars().len()).then_with(|| a.cmp(b)));
    out
}

/// Compares `psi_image` over every prime of `Proj` avoiding `f`.
pub fn psi_collision_scan(spec: &RingSpec, f: &Monomial) -> Result<PsiScan> {
    let primes: Vec<MonomialPrime> = proj_monomial_primes(spec).into_iter().filter(|p| !p.contains(f)).collect();
    let mut images: Vec<(MonomialPrime, Vec<ExponentVector>)> = Vec::new();
    for p in primes {
        let image = psi_image(spec, f, &p)?;
        if let Some((q, _)) = images.iter().find(|(_, im)| *im == image) {
            return Ok(PsiScan::Collision { first: q.clone(), second: p, image });
        }
        images.push((p, image));
    }
    Ok(PsiScan::Injective { primes: images.into_iter().map(|(p, _)| p).collect() })
}

/// Square-free monomials `m` with `D₊(h) = ⋃ D₊(m)` and each `D₊(m)` a chart:
/// the inclusion-minimal sets `supp(h) ∪ supp(g)` for `g` in the irrelevant
/// ideal's generators.
pub fn cover_decomposition(spec: &RingSpec, h: &Monomial) -> Vec<Monomial> {
    let n = spec.nvars();
    let hs = h.support();
    let mut supports: Vec<Vec<usize>> = spec
        .irrelevant_generators()
        .iter()
        .map(|g| {
            let mut s: Vec<usize> = hs.iter().chain(g.support().iter()).copied().collect();
            s.sort_unstable();
            s.dedup();
            s
        })
        .collect();
    supports.sort();
    supports.dedup();
    let minimal: Vec<&Vec<usize>> =
        supports.iter().filter(|s| !supports.iter().any(|t| t != *s && t.iter().all(|i| s.contains(i)))).collect();
    let mut out: Vec<Monomial> = minimal.into_iter().map(|s| Monomial::from_vars(n, s)).collect();
    out.sort_by_key(|m| m.to_exponent_vector());
    out
}

/// Minimal monomial primes over a monomial ideal, keeping those that belong
/// to `Proj`. An empty generator list is the zero ideal.
pub fn v_plus(spec: &RingSpec, ideal: &[Monomial]) -> Vec<MonomialPrime> {
    let n = spec.nvars();
    let supports: Vec<u64> = ideal.iter().map(|m| m.support().iter().fold(0u64, |acc, &i| acc | (1 << i))).collect();
    let mut masks: Vec<u64> = (0..1u64 << n).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    let mut minimal: Vec<u64> = Vec::new();
    for mask in masks {
        if minimal.iter().any(|&m| m & !mask == 0) {
            continue;
        }
        if supports.iter().all(|&s| s & mask != 0) {
            minimal.push(mask);
        }
    }
    let gens = spec.irrelevant_generators();
    let mut out: Vec<MonomialPrime> = minimal
        .into_iter()
        .map(|m| MonomialPrime::new((0..n).filter(|i| m & (1 << i) != 0).collect()))
        .filter(|p| gens.iter().any(|g| !p.contains(g)))
        .collect();
    out.sort_by(|a, b| a.vars().len().cmp(&b.vars().len()).then_with(|| a.cmp(b)));
    out
}
