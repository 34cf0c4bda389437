//! Twisting sheaves `O_X(d)`.
//!
//! Freeness is decided on the group side (`d` in every support group of the
//! irrelevant ideal's generators), invertibility on the chart side (a unit of
//! degree `d` in every `S_g`). The two are computed independently.

use serde::Serialize;

use crate::charts::chart_algebra;
use crate::diophantine::{
    hilbert_basis, semigroup_member, shifted_minimal_generators, ConstrainedSemigroup, Decomposition, ExponentVector,
};
use crate::error::Result;
use crate::fgab::{GroupElement, Subgroup};
use crate::ringspec::{Monomial, RingSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SheafReport {
    pub d: GroupElement,
    pub free: bool,
    pub invertible: bool,
    pub chart_units: Vec<(Monomial, Option<ExponentVector>)>,
    pub obstruction: Option<Monomial>,
}

/// A Laurent monomial of degree `d` supported on `supp(f)`, reduced modulo
/// the degree-zero units of the chart. `None` iff `d ∉ D^f`.
pub fn unit_of_degree(spec: &RingSpec, f: &Monomial, d: &GroupElement) -> Result<Option<ExponentVector>> {
    spec.require_relevant(f)?;
    let Some(u) = spec.grading().solve_on(&f.support(), d) else {
        return Ok(None);
    };
    let chart = ConstrainedSemigroup::for_grading(spec.grading(), f.support())?;
    Ok(Some(chart.reduce_mod_units(&u)?))
}

/// Intersection of the support groups `D^g` over the irrelevant ideal.
pub fn free_locus(spec: &RingSpec) -> Result<Subgroup> {
    let mut acc = Subgroup::whole(spec.group());
    for g in spec.irrelevant_generators() {
        acc = acc.intersection(&spec.support_group(&g))?;
    }
    Ok(acc)
}

pub fn is_free(spec: &RingSpec, d: &GroupElement) -> Result<bool> {
    Ok(free_locus(spec)?.contains(d))
}

pub fn is_invertible(spec: &RingSpec, d: &GroupElement) -> Result<SheafReport> {
    let mut chart_units = Vec::new();
    let mut obstruction = None;
    for g in spec.irrelevant_generators() {
        let u = unit_of_degree(spec, &g, d)?;
        if u.is_none() && obstruction.is_none() {
            obstruction = Some(g.clone());
        }
        chart_units.push((g, u));
    }
    Ok(SheafReport {
        d: d.clone(),
        free: is_free(spec, d)?,
        invertible: obstruction.is_none(),
        chart_units,
        obstruction,
    })
}

/// Generators of `S(d)_(f)` over `S_(f)`, each taken modulo units.
///
/// A unit of degree `d` forces a single generator, but not conversely: with
/// `deg x = 1`, `deg y = 2` and `f = y`, the module in degree 1 is `x·S_(y)`.
pub fn twist_module_generators(spec: &RingSpec, f: &Monomial, d: &GroupElement) -> Result<Vec<ExponentVector>> {
    spec.require_relevant(f)?;
    shifted_minimal_generators(spec.grading(), &f.support(), d)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductTerm {
    pub from_d: ExponentVector,
    pub from_e: ExponentVector,
    pub remainder: Decomposition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistProductReport {
    pub surjective: bool,
    /// Each generator of `S(d+e)_(f)` with `a = u + v + q`, `q ∈ S_(f)`.
    pub terms: Vec<(ExponentVector, Option<ProductTerm>)>,
}

/// Whether `S(d)_(f) ⊗ S(e)_(f) → S(d+e)_(f)` is onto.
pub fn twist_product_surjective(
    spec: &RingSpec,
    f: &Monomial,
    d: &GroupElement,
    e: &GroupElement,
) -> Result<TwistProductReport> {
    let gd = twist_module_generators(spec, f, d)?;
    let ge = twist_module_generators(spec, f, e)?;
    let target = twist_module_generators(spec, f, &spec.group().add(d, e))?;
    let chart = chart_algebra(spec, f)?;
    let pool = chart.monoid_generators();
    let mut terms = Vec::new();
    for a in target {
        let mut found = None;
        'search: for u in &gd {
            for v in &ge {
                let q = &(&a - u) - v;
                if let Some(remainder) = semigroup_member(&pool, &q)? {
                    found = Some(ProductTerm { from_d: u.clone(), from_e: v.clone(), remainder });
                    break 'search;
                }
            }
        }
        terms.push((a, found));
    }
    Ok(TwistProductReport { surjective: terms.iter().all(|(_, t)| t.is_some()), terms })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sections {
    pub monomials: Vec<Monomial>,
    /// The slice is finite, so the bound missed nothing.
    pub complete: bool,
}

/// Monomials of degree `d` with total degree at most `bound`.
pub fn global_sections(spec: &RingSpec, d: &GroupElement, bound: u32) -> Result<Sections> {
    let n = spec.nvars();
    let mut monomials = Vec::new();
    let mut current = vec![0u32; n];
    enumerate(n, 0, bound, &mut current, &mut |e| {
        let m = Monomial::new(e.to_vec());
        if spec.grading().degree_of(&m.to_exponent_vector()) == *d {
            monomials.push(m);
        }
    });
    monomials.sort_by_key(|m| m.to_exponent_vector());
    let all_nonneg = ConstrainedSemigroup::for_grading(spec.grading(), Vec::new())?;
    let complete = hilbert_basis(&all_nonneg)?.generators.is_empty();
    Ok(Sections { monomials, complete })
}

fn enumerate(n: usize, i: usize, budget: u32, current: &mut Vec<u32>, visit: &mut impl FnMut(&[u32])) {
    if i == n {
        visit(current);
        return;
    }
    for k in 0..=budget {
        current[i] = k;
        enumerate(n, i + 1, budget - k, current, visit);
    }
    current[i] = 0;
}
