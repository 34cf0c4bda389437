//! Relevant monomials and the generators of the irrelevant ideal.

use projd::fgab::FgAbGroup;
use projd::ringspec::RingSpec;

fn main() -> projd::Result<()> {
    // Z x Z/2 with x -> (1,0), y -> (0,1), z -> (1,1)
    let g = FgAbGroup::new(1, &[2])?;
    let spec = RingSpec::new(
        g.clone(),
        vec![
            ("x".into(), g.element_flat(&[1, 0])?),
            ("y".into(), g.element_flat(&[0, 1])?),
            ("z".into(), g.element_flat(&[1, 1])?),
        ],
    )?;
    println!("{spec}");
    for f in ["x", "y", "z", "xy"] {
        let m = spec.parse_monomial(f)?;
        println!("{f}: relevant {}, [D : D^{f}] = {}", spec.is_relevant(&m), spec.support_group(&m).index());
    }
    let gens: Vec<String> = spec.irrelevant_generators().iter().map(|m| spec.render_monomial(m)).collect();
    println!("irrelevant ideal: ({})", gens.join(", "));

    let (h, f) = (spec.parse_monomial("xy")?, spec.parse_monomial("z")?);
    if let Some(c) = spec.degree_zero_companion(&h, &f)? {
        println!("deg((xy)^{} · {}) = deg(z^{})", c.n, spec.render_monomial(&c.g), c.k);
    }
    Ok(())
}
