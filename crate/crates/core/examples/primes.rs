//! Monomial primes of Proj and their images in a chart.

use projd::charts::{proj_monomial_primes, psi_collision_scan, psi_image, v_plus, PsiScan};
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
    let primes: Vec<String> = proj_monomial_primes(&spec).iter().map(|p| p.render(&spec)).collect();
    println!("monomial points: {}", primes.join(" "));

    for f in ["xz", "z"] {
        let m = spec.parse_monomial(f)?;
        for p in proj_monomial_primes(&spec).into_iter().filter(|p| !p.contains(&m)) {
            let image: Vec<String> = psi_image(&spec, &m, &p)?.iter().map(|a| spec.render_laurent(a)).collect();
            println!("  {f}: {} -> ({})", p.render(&spec), image.join(", "));
        }
        match psi_collision_scan(&spec, &m)? {
            PsiScan::Injective { .. } => println!("{f}: injective"),
            PsiScan::Collision { first, second, .. } => {
                println!("{f}: {} and {} collide", first.render(&spec), second.render(&spec))
            }
        }
    }

    let ideal = vec![spec.parse_monomial("xz")?, spec.parse_monomial("yz")?];
    let closed: Vec<String> = v_plus(&spec, &ideal).iter().map(|p| p.render(&spec)).collect();
    println!("V+(xz, yz) = {{{}}}", closed.join(", "));
    Ok(())
}
