//! Twisting sheaves: freeness, invertibility, chart modules and sections.

use projd::fgab::FgAbGroup;
use projd::ringspec::RingSpec;
use projd::sheaves::{free_locus, global_sections, is_invertible, twist_module_generators};

fn main() -> projd::Result<()> {
    let g = FgAbGroup::new(1, &[2])?;
    let spec = RingSpec::new(
        g.clone(),
        vec![
            ("x".into(), g.element_flat(&[1, 0])?),
            ("y".into(), g.element_flat(&[0, 1])?),
            ("z".into(), g.element_flat(&[1, 1])?),
        ],
    )?;
    let locus: Vec<String> = free_locus(&spec)?.generators().iter().map(|d| d.render(&g)).collect();
    println!("O(d) is free exactly for d in <{}>", locus.join(", "));

    for d in [[2, 0], [1, 0], [0, 1]] {
        let d = g.element_flat(&d)?;
        let report = is_invertible(&spec, &d)?;
        print!("O{}: invertible {}", d.render(&g), report.invertible);
        if let Some(f) = &report.obstruction {
            print!(" (no unit on the chart of {})", spec.render_monomial(f));
        }
        println!();
    }

    let x = spec.parse_monomial("x")?;
    let d = g.element_flat(&[0, 1])?;
    let gens: Vec<String> = twist_module_generators(&spec, &x, &d)?.iter().map(|a| spec.render_laurent(a)).collect();
    println!("S{}_(x) generated by {{{}}}", d.render(&g), gens.join(", "));

    let sections = global_sections(&spec, &g.element_flat(&[2, 0])?, 4)?;
    let ms: Vec<String> = sections.monomials.iter().map(|m| spec.render_monomial(m)).collect();
    println!("degree (2,0) up to total degree 4: {{{}}} complete {}", ms.join(", "), sections.complete);
    Ok(())
}
