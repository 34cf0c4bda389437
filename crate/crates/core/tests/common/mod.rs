//! Shared helpers and brute-force oracles. Nothing here calls the lattice
//! algebra of the library: membership questions are answered by enumeration.
#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use projd::cli::{parse_ring_spec, FIXTURES};
use projd::diophantine::ExponentVector;
use projd::fgab::{FgAbGroup, GroupElement};
use projd::ringspec::{Monomial, RingSpec};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn fixture(name: &str) -> RingSpec {
    let (_, text) = FIXTURES.iter().find(|(n, _)| *n == name).expect("known fixture");
    parse_ring_spec(text).expect("fixtures parse")
}

pub fn all_fixtures() -> Vec<(&'static str, RingSpec)> {
    FIXTURES.iter().map(|(n, t)| (*n, parse_ring_spec(t).unwrap())).collect()
}

const NAMES: [&str; 8] = ["x", "y", "z", "w", "v", "u", "t", "s"];

/// Degrees given as flat coordinates (free, then torsion).
pub fn try_spec(rank: usize, torsion: &[i64], degrees: &[Vec<i64>]) -> Option<RingSpec> {
    let group = FgAbGroup::new(rank, torsion).ok()?;
    let vars =
        degrees.iter().enumerate().map(|(i, d)| (NAMES[i].to_string(), group.element_flat(d).unwrap())).collect();
    RingSpec::new(group, vars).ok()
}

pub fn unchecked_spec(rank: usize, torsion: &[i64], degrees: &[Vec<i64>]) -> RingSpec {
    let group = FgAbGroup::new(rank, torsion).unwrap();
    let vars =
        degrees.iter().enumerate().map(|(i, d)| (NAMES[i].to_string(), group.element_flat(d).unwrap())).collect();
    RingSpec::unchecked(group, vars).unwrap()
}

pub fn random_degrees(rng: &mut ChaCha8Rng, n: usize, rank: usize, torsion: &[i64], lo: i64, hi: i64) -> Vec<Vec<i64>> {
    (0..n)
        .map(|_| {
            let mut d: Vec<i64> = (0..rank).map(|_| rng.gen_range(lo..=hi)).collect();
            d.extend(torsion.iter().map(|&m| rng.gen_range(0..m)));
            d
        })
        .collect()
}

/// Retries until the grading is effective.
pub fn random_effective_spec(
    rng: &mut ChaCha8Rng,
    n: usize,
    rank: usize,
    torsion: &[i64],
    lo: i64,
    hi: i64,
    nonzero: bool,
) -> RingSpec {
    loop {
        let degs = random_degrees(rng, n, rank, torsion, lo, hi);
        if nonzero && degs.iter().any(|d| d.iter().all(|&c| c == 0)) {
            continue;
        }
        if let Some(s) = try_spec(rank, torsion, &degs) {
            return s;
        }
    }
}

pub fn ev(v: &[i64]) -> ExponentVector {
    ExponentVector::new(v.to_vec())
}

pub fn squarefree_monomials(n: usize) -> Vec<Monomial> {
    (0..1u32 << n)
        .map(|mask| Monomial::from_vars(n, &(0..n).filter(|i| mask & (1 << i) != 0).collect::<Vec<_>>()))
        .collect()
}

/// Degree arithmetic done by hand on flat coordinates.
#[derive(Clone, Debug)]
pub struct FlatGrading {
    pub rank: usize,
    pub torsion: Vec<i64>,
    pub degrees: Vec<Vec<i64>>,
}

impl FlatGrading {
    pub fn of(spec: &RingSpec) -> Self {
        FlatGrading {
            rank: spec.group().rank(),
            torsion: spec.group().torsion().to_vec(),
            degrees: (0..spec.nvars()).map(|i| spec.degree(i).flat()).collect(),
        }
    }

    pub fn reduce(&self, mut v: Vec<i64>) -> Vec<i64> {
        for (j, m) in self.torsion.iter().enumerate() {
            v[self.rank + j] = v[self.rank + j].rem_euclid(*m);
        }
        v
    }

    pub fn degree(&self, a: &[i64]) -> Vec<i64> {
        let w = self.rank + self.torsion.len();
        let mut out = vec![0; w];
        for (c, d) in a.iter().zip(&self.degrees) {
            for k in 0..w {
                out[k] += c * d[k];
            }
        }
        self.reduce(out)
    }

    pub fn element(&self, flat: &[i64]) -> Vec<i64> {
        self.reduce(flat.to_vec())
    }

    pub fn to_group(&self, spec: &RingSpec, flat: &[i64]) -> GroupElement {
        spec.group().element_flat(flat).unwrap()
    }
}

/// Elements of the subgroup generated by `gens` inside a box of the group,
/// found by breadth-first closure. Lattices generated by short vectors are
/// reached without leaving a slightly larger box, so queries well inside
/// the box are answered exactly.
pub struct SubgroupClosure {
    radius: i64,
    reached: HashSet<Vec<i64>>,
}

impl SubgroupClosure {
    pub fn new(g: &FlatGrading, gens: &[Vec<i64>], radius: i64) -> Self {
        let zero = vec![0; g.rank + g.torsion.len()];
        let mut reached = HashSet::from([zero.clone()]);
        let mut queue = VecDeque::from([zero]);
        let steps: Vec<Vec<i64>> = gens.iter().flat_map(|s| [s.clone(), s.iter().map(|x| -x).collect()]).collect();
        while let Some(p) = queue.pop_front() {
            for s in &steps {
                let q = g.reduce(p.iter().zip(s).map(|(a, b)| a + b).collect());
                if q[..g.rank].iter().any(|c| c.abs() > radius) || reached.contains(&q) {
                    continue;
                }
                reached.insert(q.clone());
                queue.push_back(q);
            }
        }
        SubgroupClosure { radius, reached }
    }

    pub fn contains(&self, d: &[i64]) -> bool {
        self.reached.contains(d)
    }

    pub fn radius(&self) -> i64 {
        self.radius
    }
}

/// All vectors of `[lo, hi]^n`.
pub fn box_points(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for v in lo..=hi {
                let mut q = p.clone();
                q.push(v);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// Inserts the values `y` on the coordinates `coords` into a zero vector.
pub fn spread(n: usize, coords: &[usize], y: &[i64]) -> Vec<i64> {
    let mut v = vec![0; n];
    for (&i, &c) in coords.iter().zip(y) {
        v[i] = c;
    }
    v
}

/// Sign-constrained part of the module `{a : deg(a) = d, a_i ≥ 0 off F}`,
/// seen through the constrained coordinates: `y ∈ [0, b]^m` such that
/// `d - deg(y)` is reached by the free variables.
pub struct ProjectedModule {
    pub constrained: Vec<usize>,
    pub members: Vec<Vec<i64>>,
}

impl ProjectedModule {
    pub fn new(g: &FlatGrading, free: &[usize], d: &[i64], b: i64) -> Self {
        let n = g.degrees.len();
        let constrained: Vec<usize> = (0..n).filter(|i| !free.contains(i)).collect();
        let free_degrees: Vec<Vec<i64>> = free.iter().map(|&i| g.degrees[i].clone()).collect();
        let max_entry = g.degrees.iter().flat_map(|d| d[..g.rank].iter()).map(|c| c.abs()).max().unwrap_or(0);
        let reach = (b * max_entry * n as i64) + d[..g.rank].iter().map(|c| c.abs()).max().unwrap_or(0);
        let closure = SubgroupClosure::new(g, &free_degrees, reach + 12);
        let members = box_points(constrained.len(), 0, b)
            .into_iter()
            .filter(|y| {
                let dy = g.degree(&spread(n, &constrained, y));
                let rest = g.reduce(d.iter().zip(&dy).map(|(a, b)| a - b).collect());
                closure.contains(&rest)
            })
            .collect();
        ProjectedModule { constrained, members }
    }

    /// Componentwise-minimal members.
    pub fn minimal(&self) -> Vec<Vec<i64>> {
        let below = |a: &Vec<i64>, b: &Vec<i64>| a != b && a.iter().zip(b).all(|(x, y)| x <= y);
        let mut out: Vec<Vec<i64>> =
            self.members.iter().filter(|y| !self.members.iter().any(|z| below(z, y))).cloned().collect();
        out.sort();
        out
    }

    /// Nonzero members that are not a sum of two nonzero members.
    pub fn irreducible(&self) -> Vec<Vec<i64>> {
        let set: HashSet<&Vec<i64>> = self.members.iter().collect();
        let mut out: Vec<Vec<i64>> = self
            .members
            .iter()
            .filter(|y| y.iter().any(|&c| c != 0))
            .filter(|y| {
                !self.members.iter().any(|z| {
                    z.iter().any(|&c| c != 0)
                        && z != *y
                        && z.iter().zip(y.iter()).all(|(a, b)| a <= b)
                        && set.contains(&y.iter().zip(z).map(|(a, b)| a - b).collect::<Vec<_>>())
                })
            })
            .cloned()
            .collect();
        out.sort();
        out
    }

    pub fn project(&self, a: &ExponentVector) -> Vec<i64> {
        self.constrained.iter().map(|&i| a.entries()[i]).collect()
    }
}

/// Is `b` a nonnegative combination of `gens`? Every generator must have
/// positive weight under `w`, which bounds the search.
pub fn positive_member_oracle(gens: &[Vec<i64>], w: &[i64], b: &[i64]) -> bool {
    let weight = |v: &[i64]| -> i64 { v.iter().zip(w).map(|(a, c)| a * c).sum() };
    assert!(gens.iter().all(|g| weight(g) > 0));
    let target = weight(b);
    if b.iter().all(|&c| c == 0) {
        return true;
    }
    if target <= 0 {
        return false;
    }
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut frontier = vec![vec![0; b.len()]];
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q: Vec<i64> = p.iter().zip(g).map(|(a, c)| a + c).collect();
            if q == b {
                return true;
            }
            if weight(&q) < target && seen.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    false
}

/// Membership in the span of a basis in Hermite form (pivots strictly
/// increasing), by back-substitution.
pub fn in_echelon_span(basis: &[ExponentVector], v: &[i64]) -> bool {
    let mut r = v.to_vec();
    for row in basis {
        let e = row.entries();
        let Some(p) = e.iter().position(|&c| c != 0) else { continue };
        if r[..p].iter().any(|&c| c != 0) {
            return false;
        }
        if r[p] % e[p] != 0 {
            return false;
        }
        let k = r[p] / e[p];
        for (x, y) in r.iter_mut().zip(e) {
            *x -= k * y;
        }
    }
    r.iter().all(|&c| c == 0)
}
