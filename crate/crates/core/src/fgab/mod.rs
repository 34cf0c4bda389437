//! Finitely generated abelian groups `Z^r ⊕ Z/m₁ ⊕ … ⊕ Z/m_t`.
//!
//! Torsion is handled by lifting: a torsion coordinate with order `m` becomes
//! a free coordinate together with the relation row `m·e_j`, so every index,
//! membership and intersection question is answered by integer lattice
//! algebra over [`matrix`].

pub mod matrix;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use matrix::{
    big_to_i64_vec, hermite_normal_form, i64_to_big_vec, left_kernel, smith_normal_form, solve_left, IntMatrix,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FgAbGroup {
    rank: usize,
    torsion: Vec<i64>,
}

/// Change of torsion coordinates produced when a group is normalized.
#[derive(Clone, Debug)]
pub struct TorsionChange {
    /// `map[i][j]`: contribution of original coordinate `i` to new coordinate `j`.
    map: Vec<Vec<i64>>,
}

impl TorsionChange {
    pub fn apply(&self, group: &FgAbGroup, free: Vec<i64>, torsion: &[i64]) -> Result<GroupElement> {
        if torsion.len() != self.map.len() {
            return Err(Error::DimensionMismatch { expected: self.map.len(), got: torsion.len() });
        }
        let t = group.torsion.len();
        let mut out = vec![0i64; t];
        for (i, c) in torsion.iter().enumerate() {
            for (j, o) in out.iter_mut().enumerate() {
                let m = group.torsion[j] as i128;
                let term = (*c as i128).rem_euclid(m) * (self.map[i][j] as i128) % m;
                *o = ((*o as i128 + term) % m) as i64;
            }
        }
        group.element(free, out)
    }
}

impl FgAbGroup {
    /// Builds `Z^rank ⊕ ⊕ Z/m`, normalizing the torsion orders into a
    /// divisibility chain. Orders equal to 1 are not accepted.
    pub fn new(rank: usize, torsion: &[i64]) -> Result<Self> {
        Ok(Self::normalizing(rank, torsion)?.0)
    }

    /// Like [`FgAbGroup::new`], also returning the coordinate change that
    /// carries elements written against `torsion` into the normalized group.
    pub fn normalizing(rank: usize, torsion: &[i64]) -> Result<(Self, TorsionChange)> {
        if let Some(&bad) = torsion.iter().find(|&&m| m < 2) {
            return Err(Error::BadTorsionOrder(bad));
        }
        let t = torsion.len();
        let mut diag = IntMatrix::zeros(t, t);
        for (i, m) in torsion.iter().enumerate() {
            diag[(i, i)] = BigInt::from(*m);
        }
        let sm = smith_normal_form(&diag);
        let factors = sm.invariant_factors();
        let keep: Vec<usize> = (0..factors.len()).filter(|&i| factors[i] > BigInt::from(1)).collect();
        let orders: Vec<i64> =
            keep.iter().map(|&i| factors[i].to_i64().ok_or(Error::Overflow)).collect::<Result<_>>()?;
        let map = (0..t)
            .map(|i| {
                keep.iter()
                    .map(|&j| {
                        let m = &factors[j];
                        let v = ((&sm.v[(i, j)] % m) + m) % m;
                        v.to_i64().ok_or(Error::Overflow)
                    })
                    .collect::<Result<Vec<i64>>>()
            })
            .collect::<Result<_>>()?;
        Ok((FgAbGroup { rank, torsion: orders }, TorsionChange { map }))
    }

    pub fn free(rank: usize) -> Self {
        FgAbGroup { rank, torsion: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[i64] {
        &self.torsion
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    /// Number of integer coordinates of a lifted element.
    pub fn lifted_len(&self) -> usize {
        self.rank + self.torsion.len()
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement { free: vec![0; self.rank], torsion: vec![0; self.torsion.len()] }
    }

    pub fn element(&self, free: Vec<i64>, torsion: Vec<i64>) -> Result<GroupElement> {
        if free.len() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, got: free.len() });
        }
        if torsion.len() != self.torsion.len() {
            return Err(Error::DimensionMismatch { expected: self.torsion.len(), got: torsion.len() });
        }
        let mut e = GroupElement { free, torsion };
        self.reduce(&mut e);
        Ok(e)
    }

    /// Element from a flat list of `rank + t` coordinates.
    pub fn element_flat(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.lifted_len() {
            return Err(Error::DimensionMismatch { expected: self.lifted_len(), got: coords.len() });
        }
        self.element(coords[..self.rank].to_vec(), coords[self.rank..].to_vec())
    }

    /// The standard generators `e_1..e_r` followed by the torsion generators.
    pub fn standard_generators(&self) -> Vec<GroupElement> {
        (0..self.lifted_len())
            .map(|k| {
                let mut coords = vec![0; self.lifted_len()];
                coords[k] = 1;
                self.element_flat(&coords).expect("standard generator")
            })
            .collect()
    }

    fn reduce(&self, e: &mut GroupElement) {
        for (c, m) in e.torsion.iter_mut().zip(&self.torsion) {
            *c = c.rem_euclid(*m);
        }
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let mut e = GroupElement {
            free: a.free.iter().zip(&b.free).map(|(x, y)| x + y).collect(),
            torsion: a.torsion.iter().zip(&b.torsion).map(|(x, y)| x + y).collect(),
        };
        self.reduce(&mut e);
        e
    }

    pub fn scale(&self, a: &GroupElement, k: i64) -> GroupElement {
        GroupElement {
            free: a.free.iter().map(|x| x * k).collect(),
            torsion: a
                .torsion
                .iter()
                .zip(&self.torsion)
                .map(|(x, m)| ((*x as i128 * k as i128).rem_euclid(*m as i128)) as i64)
                .collect(),
        }
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        self.scale(a, -1)
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.add(a, &self.neg(b))
    }

    /// Σ coeffs[i] · elems[i]
    pub fn combination(&self, elems: &[GroupElement], coeffs: &[i64]) -> GroupElement {
        elems.iter().zip(coeffs).fold(self.zero(), |acc, (e, &c)| self.add(&acc, &self.scale(e, c)))
    }

    fn torsion_relations(&self) -> Vec<Vec<BigInt>> {
        let n = self.lifted_len();
        self.torsion
            .iter()
            .enumerate()
            .map(|(j, m)| {
                let mut row = vec![BigInt::zero(); n];
                row[self.rank + j] = BigInt::from(*m);
                row
            })
            .collect()
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for m in &self.torsion {
            parts.push(format!("Z/{m}Z"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" x "))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    free: Vec<i64>,
    torsion: Vec<i64>,
}

impl GroupElement {
    pub fn free(&self) -> &[i64] {
        &self.free
    }

    pub fn torsion(&self) -> &[i64] {
        &self.torsion
    }

    pub fn is_zero(&self) -> bool {
        self.free.iter().chain(&self.torsion).all(|&x| x == 0)
    }

    pub fn flat(&self) -> Vec<i64> {
        self.free.iter().chain(&self.torsion).copied().collect()
    }

    fn lifted(&self) -> Vec<BigInt> {
        i64_to_big_vec(&self.flat())
    }

    /// Renders as `(a,b | c mod m)`; pure torsion prints as `(c mod m)`.
    pub fn render(&self, group: &FgAbGroup) -> String {
        let free: Vec<String> = self.free.iter().map(i64::to_string).collect();
        let tors: Vec<String> = self.torsion.iter().zip(group.torsion()).map(|(c, m)| format!("{c} mod {m}")).collect();
        match (free.is_empty(), tors.is_empty()) {
            (_, true) => format!("({})", free.join(",")),
            (true, false) => format!("({})", tors.join(", ")),
            (false, false) => format!("({} | {})", free.join(","), tors.join(", ")),
        }
    }
}

/// Index of a subgroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Index {
    Finite(u64),
    Infinite,
}

impl Index {
    pub fn is_finite(self) -> bool {
        matches!(self, Index::Finite(_))
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Index::Finite(k) => write!(f, "{k}"),
            Index::Infinite => write!(f, "infinite"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Subgroup {
    group: FgAbGroup,
    generators: Vec<GroupElement>,
}

impl Subgroup {
    pub fn new(group: &FgAbGroup, generators: Vec<GroupElement>) -> Result<Self> {
        for g in &generators {
            if g.free.len() != group.rank || g.torsion.len() != group.torsion.len() {
                return Err(Error::DimensionMismatch { expected: group.lifted_len(), got: g.flat().len() });
            }
        }
        Ok(Subgroup { group: group.clone(), generators })
    }

    pub fn trivial(group: &FgAbGroup) -> Self {
        Subgroup { group: group.clone(), generators: Vec::new() }
    }

    pub fn whole(group: &FgAbGroup) -> Self {
        Subgroup { group: group.clone(), generators: group.standard_generators() }
    }

    pub fn group(&self) -> &FgAbGroup {
        &self.group
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    /// Generators followed by the torsion relations, as lifted integer rows.
    fn relation_matrix(&self) -> IntMatrix {
        let mut rows: Vec<Vec<BigInt>> = self.generators.iter().map(GroupElement::lifted).collect();
        rows.extend(self.group.torsion_relations());
        IntMatrix::from_big_rows(self.group.lifted_len(), rows)
    }

    /// `[G : H]`.
    pub fn index(&self) -> Index {
        let sm = smith_normal_form(&self.relation_matrix());
        let f = sm.invariant_factors();
        if f.len() < self.group.lifted_len() {
            return Index::Infinite;
        }
        let prod = f.iter().fold(BigInt::from(1), |acc, d| acc * d);
        prod.to_u64().map(Index::Finite).unwrap_or(Index::Infinite)
    }

    /// Rank of the free part of the subgroup.
    pub fn free_rank(&self) -> usize {
        let rows: Vec<Vec<i64>> = self.generators.iter().map(|g| g.free.clone()).collect();
        matrix::rational_rank(&IntMatrix::from_rows(self.group.rank, &rows))
    }

    /// Integer coefficients `c` with `Σ c_i·generator_i = d`, if `d ∈ H`.
    pub fn member(&self, d: &GroupElement) -> Option<Vec<i64>> {
        let x = solve_left(&self.relation_matrix(), &d.lifted())?;
        let coeffs = big_to_i64_vec(&x[..self.generators.len()]).ok()?;
        debug_assert_eq!(&self.group.combination(&self.generators, &coeffs), d);
        Some(coeffs)
    }

    pub fn contains(&self, d: &GroupElement) -> bool {
        self.member(d).is_some()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.generators.iter().all(|g| other.contains(g))
    }

    /// Mutual membership of generators.
    pub fn same_as(&self, other: &Subgroup) -> bool {
        self.is_subgroup_of(other) && other.is_subgroup_of(self)
    }

    /// `H₁ ∩ H₂`, from the left kernel of the stacked relation system.
    pub fn intersection(&self, other: &Subgroup) -> Result<Subgroup> {
        if self.group != other.group {
            return Err(Error::Invariant("intersection of subgroups of different groups".into()));
        }
        let k1 = self.generators.len();
        let mut rows: Vec<Vec<BigInt>> = self.generators.iter().map(GroupElement::lifted).collect();
        rows.extend(other.generators.iter().map(GroupElement::lifted));
        rows.extend(self.group.torsion_relations());
        let stacked = IntMatrix::from_big_rows(self.group.lifted_len(), rows);
        let kernel = left_kernel(&stacked);
        let first = IntMatrix::from_big_rows(
            self.group.lifted_len(),
            self.generators.iter().map(GroupElement::lifted).collect(),
        );
        let mut elems: Vec<Vec<BigInt>> = kernel.rows_iter().map(|row| first.left_mul_vec(&row[..k1])).collect();
        elems.extend(self.group.torsion_relations());
        let hnf = hermite_normal_form(&IntMatrix::from_big_rows(self.group.lifted_len(), elems));
        let mut generators = Vec::new();
        for row in hnf.rows_iter() {
            let e = self.group.element_flat(&big_to_i64_vec(row)?)?;
            if !e.is_zero() {
                generators.push(e);
            }
        }
        Ok(Subgroup { group: self.group.clone(), generators })
    }
}

pub fn subgroup_index(h: &Subgroup) -> Index {
    h.index()
}

pub fn subgroup_member(h: &Subgroup, d: &GroupElement) -> Option<Vec<i64>> {
    h.member(d)
}

pub fn subgroup_intersection(a: &Subgroup, b: &Subgroup) -> Result<Subgroup> {
    a.intersection(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z_z2() -> FgAbGroup {
        FgAbGroup::new(1, &[2]).unwrap()
    }

    #[test]
    fn normalizes_torsion_chain() {
        let (g, change) = FgAbGroup::normalizing(0, &[2, 3]).unwrap();
        assert_eq!(g.torsion(), &[6]);
        // (1 mod 2, 0 mod 3) has order 2 in Z/6
        let e = change.apply(&g, vec![], &[1, 0]).unwrap();
        assert_eq!(g.scale(&e, 2), g.zero());
        assert!(!e.is_zero());
        let (g, _) = FgAbGroup::normalizing(1, &[4, 2]).unwrap();
        assert_eq!(g.torsion(), &[2, 4]);
        assert!(FgAbGroup::new(1, &[1]).is_err());
    }

    #[test]
    fn torsion_reduced() {
        let g = z_z2();
        let a = g.element(vec![1], vec![3]).unwrap();
        let b = g.element(vec![1], vec![-1]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.torsion(), &[1]);
    }

    #[test]
    fn index_examples() {
        let z2 = FgAbGroup::free(2);
        let h = Subgroup::new(&z2, vec![z2.element_flat(&[1, 0]).unwrap(), z2.element_flat(&[1, 1]).unwrap()]).unwrap();
        assert_eq!(h.index(), Index::Finite(1));
        let g = z_z2();
        let h = Subgroup::new(&g, vec![g.element_flat(&[1, 0]).unwrap()]).unwrap();
        assert_eq!(h.index(), Index::Finite(2));
        assert_eq!(Subgroup::whole(&g).index(), Index::Finite(1));
        assert_eq!(Subgroup::trivial(&g).index(), Index::Infinite);
        assert_eq!(Subgroup::trivial(&FgAbGroup::new(0, &[3]).unwrap()).index(), Index::Finite(3));
    }

    #[test]
    fn membership_examples() {
        let g = z_z2();
        let h = Subgroup::new(&g, vec![g.element_flat(&[1, 1]).unwrap()]).unwrap();
        assert_eq!(h.member(&g.element_flat(&[2, 0]).unwrap()), Some(vec![2]));
        assert_eq!(h.member(&g.zero()), Some(vec![0]));
        let h = Subgroup::new(&g, vec![g.element_flat(&[1, 0]).unwrap()]).unwrap();
        assert_eq!(h.member(&g.element_flat(&[1, 1]).unwrap()), None);
    }

    #[test]
    fn intersection_examples() {
        let g = z_z2();
        let a = Subgroup::new(&g, vec![g.element_flat(&[1, 0]).unwrap()]).unwrap();
        let b = Subgroup::new(&g, vec![g.element_flat(&[1, 1]).unwrap()]).unwrap();
        let i = a.intersection(&b).unwrap();
        let expect = Subgroup::new(&g, vec![g.element_flat(&[2, 0]).unwrap()]).unwrap();
        assert!(i.same_as(&expect));
        assert!(a.intersection(&a).unwrap().same_as(&a));

        let z2 = FgAbGroup::free(2);
        let a = Subgroup::new(&z2, vec![z2.element_flat(&[2, 0]).unwrap(), z2.element_flat(&[0, 2]).unwrap()]).unwrap();
        let b = Subgroup::new(&z2, vec![z2.element_flat(&[1, 1]).unwrap()]).unwrap();
        let expect = Subgroup::new(&z2, vec![z2.element_flat(&[2, 2]).unwrap()]).unwrap();
        assert!(a.intersection(&b).unwrap().same_as(&expect));
    }

    #[test]
    fn render_degrees() {
        let g = z_z2();
        assert_eq!(g.element_flat(&[2, 1]).unwrap().render(&g), "(2 | 1 mod 2)");
        let z2 = FgAbGroup::free(2);
        assert_eq!(z2.element_flat(&[1, 1]).unwrap().render(&z2), "(1,1)");
        let t = FgAbGroup::new(0, &[2]).unwrap();
        assert_eq!(t.element_flat(&[1]).unwrap().render(&t), "(1 mod 2)");
        assert_eq!(g.to_string(), "Z x Z/2Z");
    }
}
