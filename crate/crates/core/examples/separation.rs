//! Weak pairs, the separatedness verdict and separated sub-models.

use projd::fgab::FgAbGroup;
use projd::ringspec::RingSpec;
use projd::separation::{classify_dependencies, is_separated, separated_submodels};

fn spec(degrees: &[(&str, [i64; 2])]) -> projd::Result<RingSpec> {
    let g = FgAbGroup::free(2);
    let vars = degrees.iter().map(|(n, d)| Ok((n.to_string(), g.element_flat(d)?))).collect::<projd::Result<_>>()?;
    RingSpec::new(g, vars)
}

fn main() -> projd::Result<()> {
    let double_origin = spec(&[("x", [1, 0]), ("y", [0, 1]), ("z", [1, 1])])?;
    let five = spec(&[("x", [1, 0]), ("y", [1, 0]), ("v", [0, 1]), ("w", [0, 1]), ("z", [1, 1])])?;
    for s in [&double_origin, &five] {
        let verdict = is_separated(s, None)?;
        println!("{s}");
        println!("  separated: {}", verdict.separated);
        for w in &verdict.weak_pairs {
            let witness = w.witness.as_ref().map(|a| s.render_laurent(a)).unwrap_or_default();
            println!("  weak pair ({}, {}), witness {witness}", s.render_monomial(&w.f), s.render_monomial(&w.g));
        }
        println!("  relations: {:?}", classify_dependencies(s)?.class);
    }
    for b in separated_submodels(&double_origin)? {
        let names: Vec<String> = b.iter().map(|m| double_origin.render_monomial(m)).collect();
        println!("separated with B = ({})", names.join(", "));
    }
    Ok(())
}
