use clap::Subcommand;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::charts::{chart_algebra, chart_intersection_check, cover_decomposition, psi_image, v_plus, MonomialPrime};
use crate::diophantine::ExponentVector;
use crate::error::{Error, Result};
use crate::fgab::GroupElement;
use crate::ringspec::{Monomial, RingSpec};
use crate::separation::{classify_dependencies, is_separated, separated_submodels, weak_pairs, DependencyClass};
use crate::sheaves::{global_sections, is_invertible};

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// Validate the spec and print the ring
    Check,
    /// Minimal generators of the irrelevant ideal
    Gens,
    /// Degree-zero chart S_(f)
    Chart { f: String },
    /// Rebuild S_(fg) from S_(f)
    Intersect { f: String, g: String },
    /// Image of a monomial prime in the chart of f
    Psi { f: String, p: String },
    /// Charts covering D+(h)
    Cover { h: String },
    /// Monomial primes of Proj containing a monomial ideal
    Vplus { ideal: String },
    /// Weak pairs among the generators
    WeakPairs,
    /// Separatedness verdict
    Separated,
    /// Classification of degree relations among the variables
    Deps,
    /// Maximal generator sets without weak pairs
    Submodels,
    /// Freeness and invertibility of O(d)
    Sheaf {
        #[arg(allow_hyphen_values = true)]
        d: String,
    },
    /// Monomials of degree d up to a total degree
    Sections {
        #[arg(allow_hyphen_values = true)]
        d: String,
        #[arg(long, default_value_t = 6)]
        bound: u32,
    },
    /// Smallest N, k and monomial g with deg(h^N g) = deg(f^k)
    Companion { h: String, f: String },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::Gens => "gens",
            Command::Chart { .. } => "chart",
            Command::Intersect { .. } => "intersect",
            Command::Psi { .. } => "psi",
            Command::Cover { .. } => "cover",
            Command::Vplus { .. } => "vplus",
            Command::WeakPairs => "weak-pairs",
            Command::Separated => "separated",
            Command::Deps => "deps",
            Command::Submodels => "submodels",
            Command::Sheaf { .. } => "sheaf",
            Command::Sections { .. } => "sections",
            Command::Companion { .. } => "companion",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub spec_digest: String,
    pub payload: Value,
    pub rendering: String,
}

pub fn digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

pub fn execute(spec: &RingSpec, spec_text: &str, cmd: &Command) -> Result<Report> {
    let (payload, rendering) = dispatch(spec, cmd)?;
    Ok(Report { command: cmd.name().into(), spec_digest: digest(spec_text), payload, rendering })
}

fn dispatch(spec: &RingSpec, cmd: &Command) -> Result<(Value, String)> {
    let mono = |t: &str| spec.parse_monomial(t);
    Ok(match cmd {
        Command::Check => {
            let text = format!("ok: {spec}");
            (json!({ "group": spec.group().to_string(), "variables": spec.names() }), text)
        }
        Command::Gens => {
            let gens = spec.irrelevant_generators();
            let mut text = braces(gens.iter().map(|g| spec.render_monomial(g)));
            if gens.len() == 1 && gens[0].is_one() {
                text.push_str("; Proj = Spec(S₀)");
            }
            (json!({ "generators": gens, "rendered": monomials(spec, &gens) }), text)
        }
        Command::Chart { f } => {
            let f = mono(f)?;
            let c = chart_algebra(spec, &f)?;
            let text = format!(
                "S_({}): units {}; generators {}",
                spec.render_monomial(&f),
                braces(c.units.iter().map(|u| spec.render_laurent(u))),
                braces(c.generators.iter().map(|g| spec.render_laurent(g)))
            );
            (to_value(&c), text)
        }
        Command::Intersect { f, g } => {
            let (f, g) = (mono(f)?, mono(g)?);
            let r = chart_intersection_check(spec, &f, &g)?;
            if !r.consistent {
                return Err(Error::Invariant(format!(
                    "S_({}) is not the localization of S_({})",
                    spec.render_monomial(&f.mul(&g)),
                    spec.render_monomial(&f)
                )));
            }
            let text = format!(
                "S_({}) = S_({}) with {} inverted; generators {}",
                spec.render_monomial(&f.mul(&g)),
                spec.render_monomial(&f),
                braces(r.inverted.iter().map(|a| spec.render_laurent(a))),
                braces(r.product.monoid_generators().iter().map(|a| spec.render_laurent(a)))
            );
            (to_value(&r), text)
        }
        Command::Psi { f, p } => {
            let f = mono(f)?;
            let p = MonomialPrime::parse(spec, p)?;
            let image = psi_image(spec, &f, &p)?;
            let text = format!("ψ_{}{} = {}", spec.render_monomial(&f), p.render(spec), ideal(spec, &image));
            (json!({ "prime": p, "image": image }), text)
        }
        Command::Cover { h } => {
            let h = mono(h)?;
            let cover = cover_decomposition(spec, &h);
            let parts: Vec<String> = cover.iter().map(|g| format!("D+({})", spec.render_monomial(g))).collect();
            let text = format!("D+({}) = {}", spec.render_monomial(&h), parts.join(" ∪ "));
            (json!({ "cover": cover, "rendered": monomials(spec, &cover) }), text)
        }
        Command::Vplus { ideal: gens } => {
            let gens = parse_ideal(spec, gens)?;
            let primes = v_plus(spec, &gens);
            let text = braces(primes.iter().map(|p| p.render(spec)));
            (json!({ "primes": primes }), text)
        }
        Command::WeakPairs => {
            let pairs = weak_pairs(spec, None)?;
            let lines: Vec<String> = pairs
                .iter()
                .map(|p| {
                    format!(
                        "({}, {}) witness {}",
                        spec.render_monomial(&p.f),
                        spec.render_monomial(&p.g),
                        spec.render_laurent(p.witness.as_ref().expect("weak pairs carry a witness"))
                    )
                })
                .collect();
            let text = if lines.is_empty() { "none".into() } else { lines.join("\n") };
            (to_value(&pairs), text)
        }
        Command::Separated => {
            let v = is_separated(spec, None)?;
            let text = if v.separated {
                "SEPARATED".to_string()
            } else {
                let pairs: Vec<String> = v
                    .weak_pairs
                    .iter()
                    .map(|p| format!("({}, {})", spec.render_monomial(&p.f), spec.render_monomial(&p.g)))
                    .collect();
                let witnesses: Vec<String> = v
                    .weak_pairs
                    .iter()
                    .map(|p| spec.render_laurent(p.witness.as_ref().expect("weak pairs carry a witness")))
                    .collect();
                let plural = if pairs.len() == 1 { "" } else { "s" };
                format!(
                    "NOT SEPARATED; weak pair{plural} {}; witness{} {}",
                    pairs.join(", "),
                    if plural.is_empty() { "" } else { "es" },
                    witnesses.join(", ")
                )
            };
            (to_value(&v), text)
        }
        Command::Deps => {
            let r = classify_dependencies(spec)?;
            let class = serde_json::to_value(r.class).expect("enum serializes");
            let mut text = class.as_str().unwrap_or_default().to_string();
            if r.class == DependencyClass::NontrivialIrreducible {
                let w = r.witness.as_ref().expect("nontrivial class carries a witness");
                text.push_str(&format!("; witness {}", relation(spec, w)));
            }
            (to_value(&r), text)
        }
        Command::Submodels => {
            let subs = separated_submodels(spec)?;
            let text =
                subs.iter().map(|s| braces(s.iter().map(|m| spec.render_monomial(m)))).collect::<Vec<_>>().join("\n");
            (json!({ "submodels": subs }), text)
        }
        Command::Sheaf { d } => {
            let d = parse_degree(spec, d)?;
            let r = is_invertible(spec, &d)?;
            if r.free != r.invertible {
                return Err(Error::Invariant(format!(
                    "freeness and invertibility disagree at {}",
                    d.render(spec.group())
                )));
            }
            let yn = |b: bool| if b { "yes" } else { "no" };
            let mut text = format!("free: {}; invertible: {}", yn(r.free), yn(r.invertible));
            match &r.obstruction {
                Some(g) => text.push_str(&format!("; obstruction chart {}", spec.render_monomial(g))),
                None => {
                    let w: Vec<String> =
                        r.chart_units.iter().filter_map(|(_, u)| u.as_ref()).map(|u| spec.render_laurent(u)).collect();
                    text.push_str(&format!("; witnesses {}", w.join(" | ")));
                }
            }
            (to_value(&r), text)
        }
        Command::Sections { d, bound } => {
            let d = parse_degree(spec, d)?;
            let s = global_sections(spec, &d, *bound)?;
            let text = format!(
                "{} ({})",
                braces(s.monomials.iter().map(|m| spec.render_monomial(m))),
                if s.complete { "complete" } else { "partial" }
            );
            (to_value(&s), text)
        }
        Command::Companion { h, f } => {
            let (h, f) = (mono(h)?, mono(f)?);
            match spec.degree_zero_companion(&h, &f)? {
                None => (Value::Null, "none".into()),
                Some(c) => {
                    let num = h.pow(c.n).mul(&c.g).to_exponent_vector();
                    let q = &num - &f.pow(c.k).to_exponent_vector();
                    let text = format!(
                        "N = {}; g = {}; k = {}; fraction {}",
                        c.n,
                        spec.render_monomial(&c.g),
                        c.k,
                        spec.render_laurent(&q)
                    );
                    (to_value(&c), text)
                }
            }
        }
    })
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report payloads serialize")
}

fn braces(items: impl Iterator<Item = String>) -> String {
    format!("{{{}}}", items.collect::<Vec<_>>().join(", "))
}

fn monomials(spec: &RingSpec, ms: &[Monomial]) -> Vec<String> {
    ms.iter().map(|m| spec.render_monomial(m)).collect()
}

fn ideal(spec: &RingSpec, gens: &[ExponentVector]) -> String {
    if gens.is_empty() {
        return "(0)".into();
    }
    format!("({})", gens.iter().map(|g| spec.render_laurent(g)).collect::<Vec<_>>().join(", "))
}

/// `deg(xy) = deg(z)` for the relation `xy/z`.
fn relation(spec: &RingSpec, a: &ExponentVector) -> String {
    let side = |v: ExponentVector| spec.render_laurent(&v);
    format!("deg({}) = deg({})", side(a.positive_part()), side(a.negative_part()))
}

/// Comma-separated monomials; `(0)`, `0` or nothing for the zero ideal.
pub fn parse_ideal(spec: &RingSpec, text: &str) -> Result<Vec<Monomial>> {
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')').trim();
    if inner.is_empty() || inner == "0" {
        return Ok(Vec::new());
    }
    inner.split(',').map(|t| spec.parse_monomial(t.trim())).collect()
}

/// `(2,0)`, `(1,0 | 1)`, `(1,0 | 1 mod 2)`, or a flat list `(1,1)` running
/// through free then torsion coordinates.
pub fn parse_degree(spec: &RingSpec, text: &str) -> Result<GroupElement> {
    let group = spec.group();
    let bad = |message: String| Error::BadArgument { token: text.to_string(), message };
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
    let numbers = |part: &str| -> Result<Vec<i64>> {
        part.split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| {
                let (value, modulus) = match s.split_once("mod") {
                    Some((v, m)) => (v.trim(), Some(m.trim())),
                    None => (s, None),
                };
                if let Some(m) = modulus {
                    if !group.torsion().iter().any(|t| t.to_string() == m) {
                        return Err(bad(format!("no torsion factor of order {m}")));
                    }
                }
                value.parse::<i64>().map_err(|_| bad(format!("`{value}` is not an integer")))
            })
            .collect()
    };
    match inner.split_once('|') {
        Some((free, torsion)) => group.element(numbers(free)?, numbers(torsion)?),
        None => group.element_flat(&numbers(inner)?),
    }
    .map_err(|e| bad(e.to_string()))
}
