//! Lattice and semigroup engine.
//!
//! Every chart algebra in this crate is a semigroup of Laurent exponent
//! vectors of the form `{a ∈ L : a_i ≥ 0 for i ∉ F}` where `L` is the kernel
//! of the grading map. Such a semigroup splits as the units lattice
//! `U = L ∩ Z^F` times a pointed part, and the pointed part is isomorphic to
//! `π(L) ∩ N^m` for the projection `π` onto the sign-constrained
//! coordinates. That orthant intersection is solved exactly with the
//! completion procedure in [`completion`].

mod completion;
mod lattice;

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fgab::matrix::{
    big_to_i64_vec, hermite_normal_form, i64_to_big_vec, left_kernel, reduce_mod_hermite, solve_left, IntMatrix,
};
use crate::fgab::{FgAbGroup, GroupElement, Subgroup};
use completion::Completion;
use lattice::LatticeEquations;

/// Exponents of a Laurent monomial, one entry per ring variable.
///
/// Ordered graded-lexicographically: first by `Σ|a_i|`, then by the entries
/// with larger leading exponents first (`x` before `y`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<i64>);

impl ExponentVector {
    pub fn new(entries: Vec<i64>) -> Self {
        ExponentVector(entries)
    }

    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        ExponentVector(v)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn scale(&self, k: i64) -> Self {
        ExponentVector(self.0.iter().map(|x| x * k).collect())
    }

    pub fn l1(&self) -> i64 {
        self.0.iter().map(|x| x.abs()).sum()
    }

    /// Numerator exponents.
    pub fn positive_part(&self) -> ExponentVector {
        ExponentVector(self.0.iter().map(|&x| x.max(0)).collect())
    }

    /// Denominator exponents (as nonnegative numbers).
    pub fn negative_part(&self) -> ExponentVector {
        ExponentVector(self.0.iter().map(|&x| (-x).max(0)).collect())
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] != 0).collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }
}

impl From<Vec<i64>> for ExponentVector {
    fn from(v: Vec<i64>) -> Self {
        ExponentVector(v)
    }
}

impl Add for &ExponentVector {
    type Output = ExponentVector;
    fn add(self, rhs: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &ExponentVector {
    type Output = ExponentVector;
    fn sub(self, rhs: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &ExponentVector {
    type Output = ExponentVector;
    fn neg(self) -> ExponentVector {
        self.scale(-1)
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.l1().cmp(&other.l1()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A grading map `Z^n → D` given by the degrees of the variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    group: FgAbGroup,
    degrees: Vec<GroupElement>,
}

impl Grading {
    pub fn new(group: FgAbGroup, degrees: Vec<GroupElement>) -> Result<Self> {
        for d in &degrees {
            if d.free().len() != group.rank() || d.torsion().len() != group.torsion().len() {
                return Err(Error::DimensionMismatch { expected: group.lifted_len(), got: d.flat().len() });
            }
        }
        Ok(Grading { group, degrees })
    }

    pub fn group(&self) -> &FgAbGroup {
        &self.group
    }

    pub fn degrees(&self) -> &[GroupElement] {
        &self.degrees
    }

    pub fn nvars(&self) -> usize {
        self.degrees.len()
    }

    /// `deg(a) = Σ a_i·deg(x_i)`.
    pub fn degree_of(&self, a: &ExponentVector) -> GroupElement {
        self.group.combination(&self.degrees, a.entries())
    }

    /// Subgroup generated by the degrees of the variables in `vars`.
    pub fn span(&self, vars: &[usize]) -> Subgroup {
        let gens = vars.iter().map(|&i| self.degrees[i].clone()).collect();
        Subgroup::new(&self.group, gens).expect("degrees belong to the group")
    }

    pub fn all_vars(&self) -> Vec<usize> {
        (0..self.nvars()).collect()
    }

    /// Exponent vector supported on `vars` with degree `d`, if one exists.
    pub fn solve_on(&self, vars: &[usize], d: &GroupElement) -> Option<ExponentVector> {
        let coeffs = self.span(vars).member(d)?;
        let mut v = vec![0; self.nvars()];
        for (&i, c) in vars.iter().zip(coeffs) {
            v[i] += c;
        }
        Some(ExponentVector(v))
    }
}

/// Basis of `{a ∈ Z^n : deg(a) = 0}`, torsion congruences included, in
/// Hermite normal form.
pub fn kernel_lattice(grading: &Grading) -> Vec<ExponentVector> {
    let n = grading.nvars();
    let group = grading.group();
    let width = group.lifted_len();
    let mut rows: Vec<Vec<i64>> = grading.degrees().iter().map(GroupElement::flat).collect();
    for (j, m) in group.torsion().iter().enumerate() {
        let mut r = vec![0; width];
        r[group.rank() + j] = *m;
        rows.push(r);
    }
    let kernel = left_kernel(&IntMatrix::from_rows(width, &rows));
    let projected: Vec<Vec<BigInt>> = kernel.rows_iter().map(|r| r[..n].to_vec()).collect();
    let hnf = hermite_normal_form(&IntMatrix::from_big_rows(n, projected));
    hnf.to_i64_rows().expect("kernel entries fit in i64 at supported sizes").into_iter().map(ExponentVector).collect()
}

/// `{a ∈ L : a_i ≥ 0 for every i ∉ F}`.
#[derive(Clone, Debug)]
pub struct ConstrainedSemigroup {
    nvars: usize,
    kernel_basis: Vec<ExponentVector>,
    free_coords: Vec<usize>,
}

impl ConstrainedSemigroup {
    pub fn new(nvars: usize, kernel_basis: Vec<ExponentVector>, free_coords: Vec<usize>) -> Result<Self> {
        if let Some(v) = kernel_basis.iter().find(|v| v.len() != nvars) {
            return Err(Error::DimensionMismatch { expected: nvars, got: v.len() });
        }
        let mut free_coords = free_coords;
        free_coords.sort_unstable();
        free_coords.dedup();
        if free_coords.iter().any(|&i| i >= nvars) {
            return Err(Error::Invariant("free coordinate out of range".into()));
        }
        Ok(ConstrainedSemigroup { nvars, kernel_basis, free_coords })
    }

    /// The chart semigroup of a grading: `L` is the grading kernel.
    pub fn for_grading(grading: &Grading, free_coords: Vec<usize>) -> Result<Self> {
        Self::new(grading.nvars(), kernel_lattice(grading), free_coords)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn kernel_basis(&self) -> &[ExponentVector] {
        &self.kernel_basis
    }

    pub fn free_coords(&self) -> &[usize] {
        &self.free_coords
    }

    /// Coordinates that must stay nonnegative.
    pub fn constrained_coords(&self) -> Vec<usize> {
        (0..self.nvars).filter(|i| self.free_coords.binary_search(i).is_err()).collect()
    }

    fn basis_matrix(&self) -> IntMatrix {
        let rows: Vec<&[i64]> = self.kernel_basis.iter().map(|v| v.entries()).collect();
        IntMatrix::from_rows(self.nvars, &rows)
    }

    fn in_lattice(&self, a: &ExponentVector) -> bool {
        solve_left(&self.basis_matrix(), &i64_to_big_vec(a.entries())).is_some()
    }

    /// Direct membership predicate (no generators involved).
    pub fn contains(&self, a: &ExponentVector) -> bool {
        a.len() == self.nvars && self.constrained_coords().iter().all(|&i| a.entries()[i] >= 0) && self.in_lattice(a)
    }

    /// Invertible elements: lattice vectors vanishing on every constrained
    /// coordinate.
    pub fn is_unit(&self, a: &ExponentVector) -> bool {
        self.constrained_coords().iter().all(|&i| a.entries()[i] == 0) && self.in_lattice(a)
    }

    /// Hermite basis of the units lattice `L ∩ Z^F`.
    fn units_hermite(&self) -> IntMatrix {
        let basis = self.basis_matrix();
        let constrained = self.constrained_coords();
        let restricted: Vec<Vec<i64>> =
            self.kernel_basis.iter().map(|v| constrained.iter().map(|&i| v.entries()[i]).collect()).collect();
        let k = left_kernel(&IntMatrix::from_rows(constrained.len(), &restricted));
        let units: Vec<Vec<BigInt>> = k.rows_iter().map(|c| basis.left_mul_vec(c)).collect();
        hermite_normal_form(&IntMatrix::from_big_rows(self.nvars, units))
    }

    /// Projection of `L` onto the constrained coordinates.
    fn projected_generators(&self) -> Vec<Vec<i64>> {
        let constrained = self.constrained_coords();
        self.kernel_basis.iter().map(|v| constrained.iter().map(|&i| v.entries()[i]).collect()).collect()
    }

    /// Lifts `y` (values on the constrained coordinates, `y - base_y ∈ π(L)`)
    /// to `base + ℓ` with `ℓ ∈ L`, reduced modulo units.
    fn lift(&self, base: &ExponentVector, y: &[i64], units: &IntMatrix) -> Result<ExponentVector> {
        let constrained = self.constrained_coords();
        let diff: Vec<i64> = constrained.iter().zip(y).map(|(&i, v)| v - base.entries()[i]).collect();
        let proj = IntMatrix::from_rows(constrained.len(), &self.projected_generators());
        let c = solve_left(&proj, &i64_to_big_vec(&diff))
            .ok_or_else(|| Error::Invariant("orthant solution outside the projected lattice".into()))?;
        let ell = self.basis_matrix().left_mul_vec(&c);
        let mut a: Vec<BigInt> = i64_to_big_vec(base.entries()).into_iter().zip(ell).map(|(x, y)| x + y).collect();
        reduce_mod_hermite(units, &mut a);
        Ok(ExponentVector(big_to_i64_vec(&a)?))
    }

    /// Canonical representative of `a` modulo the units lattice.
    pub fn reduce_mod_units(&self, a: &ExponentVector) -> Result<ExponentVector> {
        let mut v = i64_to_big_vec(a.entries());
        reduce_mod_hermite(&self.units_hermite(), &mut v);
        Ok(ExponentVector(big_to_i64_vec(&v)?))
    }
}

/// Units-lattice basis plus minimal generators of the pointed quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertBasis {
    pub units: Vec<ExponentVector>,
    pub generators: Vec<ExponentVector>,
}

impl HilbertBasis {
    /// `units ∪ −units ∪ generators`: a monoid generating set.
    pub fn monoid_generators(&self) -> Vec<ExponentVector> {
        let mut out: Vec<ExponentVector> = self.units.iter().flat_map(|u| [u.clone(), -u]).collect();
        out.extend(self.generators.iter().cloned());
        out
    }
}

pub fn hilbert_basis(s: &ConstrainedSemigroup) -> Result<HilbertBasis> {
    let units_h = s.units_hermite();
    let units: Vec<ExponentVector> = units_h.to_i64_rows()?.into_iter().map(ExponentVector).collect();
    let m = s.constrained_coords().len();
    let eqs = LatticeEquations::from_generators(m, &s.projected_generators())?;
    let zero = ExponentVector::zero(s.nvars);
    let mut generators =
        eqs.orthant_hilbert_basis()?.iter().map(|y| s.lift(&zero, y, &units_h)).collect::<Result<Vec<_>>>()?;
    generators.sort();
    Ok(HilbertBasis { units, generators })
}

/// Minimal generators (modulo units) of the module
/// `{a : deg(a) = d, a_i ≥ 0 for i ∉ F}` over the degree-zero chart semigroup.
pub fn shifted_minimal_generators(
    grading: &Grading,
    free_coords: &[usize],
    d: &GroupElement,
) -> Result<Vec<ExponentVector>> {
    let Some(base) = grading.solve_on(&grading.all_vars(), d) else {
        return Ok(Vec::new());
    };
    let s = ConstrainedSemigroup::for_grading(grading, free_coords.to_vec())?;
    let units_h = s.units_hermite();
    let constrained = s.constrained_coords();
    let y0: Vec<i64> = constrained.iter().map(|&i| base.entries()[i]).collect();
    let eqs = LatticeEquations::from_generators(constrained.len(), &s.projected_generators())?;
    let mut out = eqs.coset_minimal(&y0)?.iter().map(|y| s.lift(&base, y, &units_h)).collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// Nonnegative integer combination of generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub terms: Vec<(ExponentVector, u64)>,
}

impl Decomposition {
    pub fn total(&self, n: usize) -> ExponentVector {
        self.terms.iter().fold(ExponentVector::zero(n), |acc, (g, c)| &acc + &g.scale(*c as i64))
    }

    pub fn verifies(&self, b: &ExponentVector) -> bool {
        &self.total(b.len()) == b
    }
}

/// Decides `b ∈ N·generators` exactly, returning a decomposition.
pub fn semigroup_member(generators: &[ExponentVector], b: &ExponentVector) -> Result<Option<Decomposition>> {
    let n = b.len();
    if b.is_zero() {
        return Ok(Some(Decomposition { terms: Vec::new() }));
    }
    if let Some(g) = generators.iter().find(|g| g.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, got: g.len() });
    }
    let k = generators.len();
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut row: Vec<i64> = generators.iter().map(|g| g.entries()[i]).collect();
            row.push(-b.entries()[i]);
            row
        })
        .collect();
    let sols = Completion::new(&rows, k + 1).bound_to_one(k).stop_at_first().run()?;
    let Some(sol) = sols.into_iter().find(|s| s[k] == 1) else {
        return Ok(None);
    };
    let terms = generators.iter().zip(&sol[..k]).filter(|(_, &c)| c > 0).map(|(g, &c)| (g.clone(), c as u64)).collect();
    let dec = Decomposition { terms };
    if !dec.verifies(b) {
        return Err(Error::Invariant(format!("decomposition of {b} does not sum back")));
    }
    Ok(Some(dec))
}

impl ConstrainedSemigroup {
    /// Membership with a certificate over the Hilbert basis.
    pub fn member(&self, b: &ExponentVector) -> Result<Option<Decomposition>> {
        if !self.contains(b) {
            return Ok(None);
        }
        let hb = hilbert_basis(self)?;
        match semigroup_member(&hb.monoid_generators(), b)? {
            Some(d) => Ok(Some(d)),
            None => Err(Error::Invariant(format!("{b} lies in the semigroup but has no decomposition"))),
        }
    }
}

/// Conformally minimal nonzero elements of a lattice (its Graver basis).
///
/// Completion over a symmetric generating set: sums of pairs are reduced by
/// conformal subtraction, and every nonzero remainder joins the set. The
/// result is then cut down to its conformally minimal elements.
pub fn graver_basis(nvars: usize, lattice: &[ExponentVector]) -> Result<Vec<ExponentVector>> {
    let mut basis: Vec<Vec<i64>> = Vec::new();
    for v in lattice.iter().filter(|v| !v.is_zero()) {
        if v.len() != nvars {
            return Err(Error::DimensionMismatch { expected: nvars, got: v.len() });
        }
        basis.push(v.0.clone());
        basis.push(v.0.iter().map(|x| -x).collect());
    }
    let mut pending: BinaryHeap<Reverse<(i64, Vec<i64>)>> = BinaryHeap::new();
    let push_sum = |pending: &mut BinaryHeap<Reverse<(i64, Vec<i64>)>>, a: &[i64], b: &[i64]| {
        let s: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        if s.iter().any(|&x| x != 0) {
            pending.push(Reverse((s.iter().map(|x| x.abs()).sum(), s)));
        }
    };
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            push_sum(&mut pending, &basis[i], &basis[j]);
        }
    }
    let mut steps = 0usize;
    while let Some(Reverse((_, s))) = pending.pop() {
        steps += 1;
        if steps > GRAVER_STEP_LIMIT {
            return Err(Error::SearchExhausted { what: "graver completion", bound: GRAVER_STEP_LIMIT as u32 });
        }
        let r = conformal_normal_form(s, &basis);
        if r.iter().all(|&x| x == 0) {
            continue;
        }
        for b in &basis {
            push_sum(&mut pending, &r, b);
        }
        basis.push(r);
    }
    let all: Vec<ExponentVector> = basis.into_iter().map(ExponentVector).collect();
    let mut minimal: Vec<ExponentVector> =
        all.iter().filter(|a| !all.iter().any(|b| b != *a && conformally_below(b, a))).cloned().collect();
    minimal.sort();
    minimal.dedup();
    Ok(minimal)
}

const GRAVER_STEP_LIMIT: usize = 2_000_000;

fn conformal_normal_form(mut s: Vec<i64>, set: &[Vec<i64>]) -> Vec<i64> {
    let below = |b: &[i64], a: &[i64]| b.iter().zip(a).all(|(&x, &y)| x * y >= 0 && x.abs() <= y.abs());
    while let Some(g) = set.iter().find(|g| below(g, &s)) {
        for (x, y) in s.iter_mut().zip(g) {
            *x -= y;
        }
        if s.iter().all(|&x| x == 0) {
            break;
        }
    }
    s
}

/// `b ⊑ a`: same sign pattern where `b` is nonzero, and `|b_i| ≤ |a_i|`.
pub fn conformally_below(b: &ExponentVector, a: &ExponentVector) -> bool {
    b.entries().iter().zip(a.entries()).all(|(&x, &y)| x * y >= 0 && x.abs() <= y.abs())
}
