//! Weak pairs and separatedness of `Proj` and its conical submodels.
//!
//! The deciding test is surjectivity of `S_(f) ⊗ S_(g) → S_(fg)`: on
//! monomial charts it holds iff every monoid generator of `S_(fg)` is a sum of
//! elements of `S_(f)` and `S_(g)`.

use serde::Serialize;

use crate::charts::chart_algebra;
use crate::diophantine::{
    graver_basis, kernel_lattice, semigroup_member, ConstrainedSemigroup, Decomposition, ExponentVector,
};
use crate::error::Result;
use crate::ringspec::{Monomial, RingSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeakPairReport {
    pub f: Monomial,
    pub g: Monomial,
    pub weak: bool,
    /// First monoid generator of `S_(fg)` without a decomposition.
    pub witness: Option<ExponentVector>,
    pub decompositions: Vec<(ExponentVector, Option<Decomposition>)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DependencyClass {
    LengthOneOnly,
    NontrivialIrreducible,
    None,
    Undetermined,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DependencyReport {
    pub class: DependencyClass,
    pub witness: Option<ExponentVector>,
    /// Conformally minimal degree relations among the variables, one per
    /// `±` pair.
    pub relations: Vec<ExponentVector>,
    pub scope: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparationVerdict {
    pub separated: bool,
    pub weak_pairs: Vec<WeakPairReport>,
    pub dependencies: DependencyReport,
}

pub fn mu_surjective(spec: &RingSpec, f: &Monomial, g: &Monomial) -> Result<WeakPairReport> {
    let cf = chart_algebra(spec, f)?;
    let cg = chart_algebra(spec, g)?;
    let cfg = chart_algebra(spec, &f.mul(g))?;
    let mut pool = cf.monoid_generators();
    for a in cg.monoid_generators() {
        if !pool.contains(&a) {
            pool.push(a);
        }
    }
    let mut decompositions = Vec::new();
    let mut witness = None;
    for a in cfg.monoid_generators() {
        let d = semigroup_member(&pool, &a)?;
        if d.is_none() && witness.is_none() {
            witness = Some(a.clone());
        }
        decompositions.push((a, d));
    }
    Ok(WeakPairReport { f: f.clone(), g: g.clone(), weak: witness.is_some(), witness, decompositions })
}

/// All weak pairs among the minimal generators of `b` (default: the conical
/// ideal attached to `spec`, else the irrelevant ideal).
pub fn weak_pairs(spec: &RingSpec, b: Option<&[Monomial]>) -> Result<Vec<WeakPairReport>> {
    let gens = pair_generators(spec, b);
    let mut out = Vec::new();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let r = mu_surjective(spec, &gens[i], &gens[j])?;
            if r.weak {
                out.push(r);
            }
        }
    }
    Ok(out)
}

fn pair_generators(spec: &RingSpec, b: Option<&[Monomial]>) -> Vec<Monomial> {
    match b {
        None => spec.conical_generators(),
        Some(b) => {
            let mut out: Vec<Monomial> = Vec::new();
            for m in b {
                if !b.iter().any(|o| o != m && o.divides(m)) && !out.contains(m) {
                    out.push(m.clone());
                }
            }
            out.sort_by_key(|m| m.to_exponent_vector());
            out
        }
    }
}

pub fn is_separated(spec: &RingSpec, b: Option<&[Monomial]>) -> Result<SeparationVerdict> {
    let weak_pairs = weak_pairs(spec, b)?;
    Ok(SeparationVerdict { separated: weak_pairs.is_empty(), weak_pairs, dependencies: classify_dependencies(spec)? })
}

/// Classifies the degree relations among the variables.
///
/// Length-one-only: every minimal relation reads `deg(x_i^a) = deg(x_j^b)`.
/// Nontrivial-irreducible: some minimal relation has a side with two or more
/// variables and none of its powers up to the torsion exponent is a
/// nonnegative combination of the other minimal relations.
pub fn classify_dependencies(spec: &RingSpec) -> Result<DependencyReport> {
    let n = spec.nvars();
    let graver = graver_basis(n, &kernel_lattice(spec.grading()))?;
    let relations: Vec<ExponentVector> = graver.iter().filter(|a| leading_positive(a)).cloned().collect();
    let scope = "variable-degree relations only";
    if relations.is_empty() {
        return Ok(DependencyReport { class: DependencyClass::None, witness: None, relations, scope });
    }
    let side = |v: &ExponentVector| v.entries().iter().filter(|&&x| x > 0).count();
    if relations.iter().all(|a| side(a) == 1 && side(&-a) == 1) {
        return Ok(DependencyReport { class: DependencyClass::LengthOneOnly, witness: None, relations, scope });
    }
    let power_bound = spec.group().torsion().iter().fold(1i64, |acc, &m| num_integer::lcm(acc, m));
    for a in relations.iter().filter(|a| side(a) >= 2 || side(&-*a) >= 2) {
        // the other relations come in ± pairs, so the monoid they generate is
        // their lattice
        let others: Vec<ExponentVector> = graver.iter().filter(|b| *b != a && *b != &-a).cloned().collect();
        let span = ConstrainedSemigroup::new(n, others, (0..n).collect())?;
        let decomposes = (1..=power_bound).any(|k| span.contains(&a.scale(k)));
        if !decomposes {
            return Ok(DependencyReport {
                class: DependencyClass::NontrivialIrreducible,
                witness: Some(a.clone()),
                relations,
                scope,
            });
        }
    }
    Ok(DependencyReport { class: DependencyClass::Undetermined, witness: None, relations, scope })
}

fn leading_positive(a: &ExponentVector) -> bool {
    a.entries().iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)
}

/// Inclusion-maximal subsets of the irrelevant ideal's generators containing
/// no weak pair.
pub fn separated_submodels(spec: &RingSpec) -> Result<Vec<Vec<Monomial>>> {
    let gens = spec.irrelevant_generators();
    let k = gens.len();
    let mut weak = vec![vec![false; k]; k];
    for i in 0..k {
        for j in i + 1..k {
            let w = mu_surjective(spec, &gens[i], &gens[j])?.weak;
            weak[i][j] = w;
            weak[j][i] = w;
        }
    }
    let mut found: Vec<Vec<usize>> = Vec::new();
    bron_kerbosch(&weak, Vec::new(), (0..k).collect(), Vec::new(), &mut found);
    for s in &mut found {
        s.sort_unstable();
    }
    found.sort();
    Ok(found.into_iter().map(|s| s.into_iter().map(|i| gens[i].clone()).collect()).collect())
}

/// Maximal cliques of the complement of `weak`, i.e. maximal independent sets.
fn bron_kerbosch(weak: &[Vec<bool>], r: Vec<usize>, mut p: Vec<usize>, mut x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if p.is_empty() && x.is_empty() {
        out.push(r);
        return;
    }
    let adjacent = |a: usize, b: usize| a != b && !weak[a][b];
    let pivot = *p.iter().chain(&x).max_by_key(|&&u| p.iter().filter(|&&v| adjacent(u, v)).count()).unwrap();
    let candidates: Vec<usize> = p.iter().copied().filter(|&v| !adjacent(pivot, v)).collect();
    for v in candidates {
        let mut r2 = r.clone();
        r2.push(v);
        let p2 = p.iter().copied().filter(|&u| adjacent(u, v)).collect();
        let x2 = x.iter().copied().filter(|&u| adjacent(u, v)).collect();
        bron_kerbosch(weak, r2, p2, x2, out);
        p.retain(|&u| u != v);
        x.push(v);
    }
}
