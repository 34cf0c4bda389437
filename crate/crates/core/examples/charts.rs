//! Degree-zero charts, their intersections and covers.

use projd::charts::{chart_algebra, chart_intersection_check, cover_decomposition};
use projd::fgab::FgAbGroup;
use projd::ringspec::RingSpec;

fn main() -> projd::Result<()> {
    let g = FgAbGroup::free(2);
    let spec = RingSpec::new(
        g.clone(),
        vec![
            ("x".into(), g.element_flat(&[1, 0])?),
            ("y".into(), g.element_flat(&[0, 1])?),
            ("z".into(), g.element_flat(&[1, 1])?),
        ],
    )?;
    for f in ["xy", "xz", "yz", "xyz^2"] {
        let c = chart_algebra(&spec, &spec.parse_monomial(f)?)?;
        let units: Vec<String> = c.units.iter().map(|u| spec.render_laurent(u)).collect();
        let gens: Vec<String> = c.generators.iter().map(|u| spec.render_laurent(u)).collect();
        println!("S_({f}): units {{{}}}, generators {{{}}}", units.join(", "), gens.join(", "));
    }

    let (f, h) = (spec.parse_monomial("xy")?, spec.parse_monomial("xz")?);
    let report = chart_intersection_check(&spec, &f, &h)?;
    let inverted: Vec<String> = report.inverted.iter().map(|u| spec.render_laurent(u)).collect();
    println!("S_(xy·xz) from S_(xy) by inverting {{{}}}: consistent {}", inverted.join(", "), report.consistent);

    let cover: Vec<String> =
        cover_decomposition(&spec, &spec.parse_monomial("z")?).iter().map(|m| spec.render_monomial(m)).collect();
    println!("D+(z) is covered by the charts of {}", cover.join(", "));
    Ok(())
}
