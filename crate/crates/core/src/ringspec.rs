//! Multigraded polynomial rings `k[x_1..x_n]` with monomial degrees in a
//! finitely generated abelian group.

use std::fmt;

use serde::Serialize;

use crate::diophantine::{shifted_minimal_generators, ExponentVector, Grading};
use crate::error::{Error, Result};
use crate::fgab::matrix::{rational_rank, IntMatrix};
use crate::fgab::{FgAbGroup, GroupElement, Subgroup};

/// Largest power tried by [`RingSpec::degree_zero_companion`].
pub const COMPANION_BOUND: u32 = 32;

/// A monomial with coefficient 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// Square-free product of the given variables.
    pub fn from_vars(n: usize, vars: &[usize]) -> Self {
        let mut e = vec![0; n];
        for &i in vars {
            e[i] = 1;
        }
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] > 0).collect()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|a| a * k).collect())
    }

    pub fn to_exponent_vector(&self) -> ExponentVector {
        ExponentVector::new(self.0.iter().map(|&a| a as i64).collect())
    }

    /// `None` if some entry is negative.
    pub fn from_exponent_vector(v: &ExponentVector) -> Option<Monomial> {
        v.entries().iter().map(|&a| u32::try_from(a).ok()).collect::<Option<Vec<_>>>().map(Monomial)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingSpec {
    grading: Grading,
    names: Vec<String>,
    conical: Option<Vec<Monomial>>,
}

/// Output of [`RingSpec::degree_zero_companion`]: `deg(h^n · g) = deg(f^k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Companion {
    pub n: u32,
    pub g: Monomial,
    pub k: u32,
}

impl RingSpec {
    /// Validates names and effectiveness.
    pub fn new(group: FgAbGroup, variables: Vec<(String, GroupElement)>) -> Result<Self> {
        let spec = Self::unchecked(group, variables)?;
        spec.validate_effective()?;
        Ok(spec)
    }

    /// Skips the effectiveness check. Scaled gradings are built this way.
    pub fn unchecked(group: FgAbGroup, variables: Vec<(String, GroupElement)>) -> Result<Self> {
        let mut names: Vec<String> = Vec::with_capacity(variables.len());
        let mut degrees = Vec::with_capacity(variables.len());
        for (name, d) in variables {
            if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(Error::BadArgument { token: name, message: "variable names are alphanumeric".into() });
            }
            if names.contains(&name) {
                return Err(Error::DuplicateVariable(name));
            }
            names.push(name);
            degrees.push(d);
        }
        Ok(RingSpec { grading: Grading::new(group, degrees)?, names, conical: None })
    }

    /// Attaches a conical ideal `B`; every entry must be relevant.
    pub fn with_conical(mut self, b: Vec<Monomial>) -> Result<Self> {
        for m in &b {
            if m.exponents().len() != self.nvars() {
                return Err(Error::DimensionMismatch { expected: self.nvars(), got: m.exponents().len() });
            }
            if !self.is_relevant(m) {
                return Err(Error::BadConicalIdeal(self.render_monomial(m)));
            }
        }
        self.conical = Some(b);
        Ok(self)
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn group(&self) -> &FgAbGroup {
        self.grading.group()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn degree(&self, i: usize) -> &GroupElement {
        &self.grading.degrees()[i]
    }

    pub fn conical(&self) -> Option<&[Monomial]> {
        self.conical.as_deref()
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.names.iter().position(|n| n == name).ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn validate_effective(&self) -> Result<()> {
        let span = self.grading.span(&self.grading.all_vars());
        match self.group().standard_generators().into_iter().find(|e| !span.contains(e)) {
            None => Ok(()),
            Some(e) => Err(Error::NotEffective { missing: e.render(self.group()) }),
        }
    }

    /// `D^f`: the span of the degrees of the variables dividing `f`.
    pub fn support_group(&self, f: &Monomial) -> Subgroup {
        self.grading.span(&f.support())
    }

    pub fn is_relevant(&self, f: &Monomial) -> bool {
        self.support_group(f).index().is_finite()
    }

    pub fn require_relevant(&self, f: &Monomial) -> Result<()> {
        if self.is_relevant(f) {
            Ok(())
        } else {
            Err(Error::NotRelevant(self.render_monomial(f)))
        }
    }

    /// Minimal square-free relevant monomials, smallest supports first.
    pub fn irrelevant_generators(&self) -> Vec<Monomial> {
        let n = self.nvars();
        let mut masks: Vec<u64> = (0..1u64 << n).collect();
        masks.sort_by_key(|m| m.count_ones());
        let mut found: Vec<u64> = Vec::new();
        for mask in masks {
            if found.iter().any(|&f| f & !mask == 0) {
                continue;
            }
            let vars: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            if self.grading.span(&vars).index().is_finite() {
                found.push(mask);
            }
        }
        let mut gens: Vec<Monomial> = found
            .into_iter()
            .map(|m| Monomial::from_vars(n, &(0..n).filter(|i| m & (1 << i) != 0).collect::<Vec<_>>()))
            .collect();
        gens.sort_by_key(|m| m.to_exponent_vector());
        gens
    }

    /// `B` if one was attached, else the generators of the irrelevant ideal.
    /// Either way the result is reduced to its divisibility-minimal elements.
    pub fn conical_generators(&self) -> Vec<Monomial> {
        let Some(b) = &self.conical else {
            return self.irrelevant_generators();
        };
        let mut out: Vec<Monomial> = Vec::new();
        for m in b {
            if b.iter().any(|o| o != m && o.divides(m)) || out.contains(m) {
                continue;
            }
            out.push(m.clone());
        }
        out.sort_by_key(|m| m.to_exponent_vector());
        out
    }

    /// Smallest `n ≥ 1` (then `k ≥ 0`, then graded-lex `g`) with
    /// `deg(h^n · g) = deg(f^k)` for a monomial `g`. `None` when `f` is not
    /// relevant.
    pub fn degree_zero_companion(&self, h: &Monomial, f: &Monomial) -> Result<Option<Companion>> {
        if !self.is_relevant(f) {
            return Ok(None);
        }
        let group = self.group();
        let dh = self.grading.degree_of(&h.to_exponent_vector());
        let df = self.grading.degree_of(&f.to_exponent_vector());
        for n in 1..=COMPANION_BOUND {
            for k in 0..=COMPANION_BOUND {
                let d = group.sub(&group.scale(&df, k as i64), &group.scale(&dh, n as i64));
                let gens = shifted_minimal_generators(&self.grading, &[], &d)?;
                if let Some(g) = gens.into_iter().min() {
                    let g = Monomial::from_exponent_vector(&g)
                        .ok_or_else(|| Error::Invariant("companion with negative exponent".into()))?;
                    return Ok(Some(Companion { n, g, k }));
                }
            }
        }
        Err(Error::SearchExhausted { what: "degree-zero companion", bound: COMPANION_BOUND })
    }

    /// Relevance read off the components `V(x_i)` of `V(f)`: the free parts of
    /// the degrees in `supp(f)` must reach full rank.
    pub fn relevance_via_components(&self, f: &Monomial) -> bool {
        let r = self.group().rank();
        let rows: Vec<Vec<i64>> = f.support().iter().map(|&i| self.degree(i).free().to_vec()).collect();
        rational_rank(&IntMatrix::from_rows(r, &rows)) == r
    }

    /// Same variables, degrees multiplied by `n`. The result is usually not
    /// effective and is built without that check.
    pub fn veronese_scaled_spec(&self, n: u32) -> Result<RingSpec> {
        if n == 0 {
            return Err(Error::BadArgument { token: "0".into(), message: "scale must be positive".into() });
        }
        let vars = self
            .names
            .iter()
            .zip(self.grading.degrees())
            .map(|(name, d)| (name.clone(), self.group().scale(d, n as i64)))
            .collect();
        RingSpec::unchecked(self.group().clone(), vars)
    }

    fn joiner(&self) -> &'static str {
        if self.names.iter().all(|n| n.chars().count() == 1) {
            ""
        } else {
            "*"
        }
    }

    fn render_positive(&self, e: &[i64]) -> String {
        let parts: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| if a == 1 { self.names[i].clone() } else { format!("{}{}", self.names[i], superscript(a)) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(self.joiner())
        }
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        let e: Vec<i64> = m.exponents().iter().map(|&a| a as i64).collect();
        self.render_positive(&e)
    }

    /// Laurent monomial such as `xy/z` or `z/(xy)`.
    pub fn render_laurent(&self, v: &ExponentVector) -> String {
        let num = self.render_positive(v.positive_part().entries());
        let neg = v.negative_part();
        if neg.is_zero() {
            return num;
        }
        let den = self.render_positive(neg.entries());
        let multi = neg.entries().iter().filter(|&&a| a > 0).count() > 1;
        if multi {
            format!("{num}/({den})")
        } else {
            format!("{num}/{den}")
        }
    }

    /// Parses `xz`, `x^2*y`, `x²y`, `1`. Longest variable name wins.
    pub fn parse_monomial(&self, text: &str) -> Result<Monomial> {
        let v = self.parse_laurent(text)?;
        Monomial::from_exponent_vector(&v).ok_or_else(|| Error::BadArgument {
            token: text.into(),
            message: "monomial exponents must be nonnegative".into(),
        })
    }

    /// Parses `num` or `num/den` where both sides are monomials.
    pub fn parse_laurent(&self, text: &str) -> Result<ExponentVector> {
        let bad = |message: &str| Error::BadArgument { token: text.to_string(), message: message.to_string() };
        let (num, den) = match text.split_once('/') {
            Some((a, b)) => (a, Some(b)),
            None => (text, None),
        };
        let mut out = self.parse_product(num.trim()).map_err(|m| bad(&m))?;
        if let Some(den) = den {
            let den = den.trim().trim_start_matches('(').trim_end_matches(')');
            let d = self.parse_product(den.trim()).map_err(|m| bad(&m))?;
            out = &out - &d;
        }
        Ok(out)
    }

    fn parse_product(&self, text: &str) -> std::result::Result<ExponentVector, String> {
        let n = self.nvars();
        let mut e = vec![0i64; n];
        if text == "1" {
            return Ok(ExponentVector::new(e));
        }
        if text.is_empty() {
            return Err("empty monomial".into());
        }
        let chars: Vec<char> = text.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            if chars[i] == '*' || chars[i].is_whitespace() {
                i += 1;
                continue;
            }
            let rest: String = chars[i..].iter().collect();
            let var = (0..n)
                .filter(|&v| rest.starts_with(self.names[v].as_str()))
                .max_by_key(|&v| self.names[v].len())
                .ok_or_else(|| format!("unknown variable at `{rest}`"))?;
            i += self.names[var].chars().count();
            let mut power = String::new();
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    power.push(chars[i]);
                    i += 1;
                }
                if power.is_empty() {
                    return Err("missing exponent after `^`".into());
                }
            } else {
                while i < chars.len() {
                    match from_superscript(chars[i]) {
                        Some(d) => power.push(d),
                        None => break,
                    }
                    i += 1;
                }
            }
            let p: i64 =
                if power.is_empty() { 1 } else { power.parse().map_err(|_| "exponent too large".to_string())? };
            e[var] += p;
        }
        Ok(ExponentVector::new(e))
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars: Vec<String> = self
            .names
            .iter()
            .zip(self.grading.degrees())
            .map(|(n, d)| format!("{n}:{}", d.render(self.group())))
            .collect();
        write!(f, "k[{}] graded by {}", vars.join(", "), self.group())
    }
}

const SUPERSCRIPTS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];

fn superscript(k: i64) -> String {
    k.to_string().chars().map(|c| SUPERSCRIPTS[c.to_digit(10).unwrap() as usize]).collect()
}

fn from_superscript(c: char) -> Option<char> {
    SUPERSCRIPTS.iter().position(|&s| s == c).map(|d| char::from(b'0' + d as u8))
}
