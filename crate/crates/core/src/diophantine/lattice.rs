//! Sublattices of `Z^m` described by equations, and their intersections with
//! the nonnegative orthant.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use super::completion::Completion;
use crate::error::{Error, Result};
use crate::fgab::matrix::{hermite_normal_form, smith_normal_form, IntMatrix};

/// `x ∈ Λ ⟺ E·x = 0 and c_j·x ≡ 0 (mod s_j)`, with every `c_j` reduced into
/// `[0, s_j)` so that `c_j·x ≥ 0` on the orthant.
#[derive(Clone, Debug)]
pub(crate) struct LatticeEquations {
    dim: usize,
    equalities: Vec<Vec<i64>>,
    congruences: Vec<(Vec<i64>, i64)>,
}

impl LatticeEquations {
    /// From a (not necessarily independent) list of lattice generators.
    pub(crate) fn from_generators(dim: usize, gens: &[Vec<i64>]) -> Result<Self> {
        let basis = IntMatrix::from_rows(dim, gens);
        let sm = smith_normal_form(&basis);
        let rank = sm.rank();
        let mut congruences = Vec::new();
        for j in 0..rank {
            let s = &sm.s[(j, j)];
            if s.is_one() {
                continue;
            }
            let s64 = s.to_i64().ok_or(Error::Overflow)?;
            let c =
                sm.v.column(j)
                    .iter()
                    .map(|x| {
                        let r = ((x % s) + s) % s;
                        r.to_i64().ok_or(Error::Overflow)
                    })
                    .collect::<Result<Vec<i64>>>()?;
            congruences.push((c, s64));
        }
        let eq_rows: Vec<Vec<BigInt>> = (rank..dim).map(|j| sm.v.column(j)).collect();
        let equalities = hermite_normal_form(&IntMatrix::from_big_rows(dim, eq_rows)).to_i64_rows()?;
        Ok(LatticeEquations { dim, equalities, congruences })
    }

    #[cfg(test)]
    pub(crate) fn contains(&self, x: &[i64]) -> bool {
        self.equalities.iter().all(|e| dot(e, x) == 0)
            && self.congruences.iter().all(|(c, s)| dot(c, x).rem_euclid(*s) == 0)
    }

    /// Rows of the nonnegative system over `(x, w, [t])`.
    fn system(&self, rhs: Option<&[i64]>) -> (Vec<Vec<i64>>, usize) {
        let k = self.congruences.len();
        let nvars = self.dim + k + usize::from(rhs.is_some());
        let mut rows = Vec::with_capacity(self.equalities.len() + k);
        for e in &self.equalities {
            let mut row = e.clone();
            row.resize(self.dim + k, 0);
            if let Some(y0) = rhs {
                row.push(-dot(e, y0));
            }
            rows.push(row);
        }
        for (j, (c, s)) in self.congruences.iter().enumerate() {
            let mut row = c.clone();
            row.resize(self.dim + k, 0);
            row[self.dim + j] = -s;
            if let Some(y0) = rhs {
                row.push(-dot(c, y0).rem_euclid(*s));
            }
            rows.push(row);
        }
        (rows, nvars)
    }

    /// Hilbert basis of `Λ ∩ N^m`.
    pub(crate) fn orthant_hilbert_basis(&self) -> Result<Vec<Vec<i64>>> {
        let (rows, nvars) = self.system(None);
        let sols = Completion::new(&rows, nvars).run()?;
        Ok(sols.into_iter().map(|s| s[..self.dim].to_vec()).collect())
    }

    /// Minimal elements of `(y0 + Λ) ∩ N^m` under the componentwise order.
    pub(crate) fn coset_minimal(&self, y0: &[i64]) -> Result<Vec<Vec<i64>>> {
        let (rows, nvars) = self.system(Some(y0));
        let t = nvars - 1;
        let sols = Completion::new(&rows, nvars).bound_to_one(t).run()?;
        Ok(sols.into_iter().filter(|s| s[t] == 1).map(|s| s[..self.dim].to_vec()).collect())
    }
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
