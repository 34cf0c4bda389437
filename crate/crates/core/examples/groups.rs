//! Group arithmetic: Smith form, subgroup index and intersections.

use projd::fgab::matrix::{smith_normal_form, IntMatrix};
use projd::fgab::{FgAbGroup, Subgroup};

fn main() -> projd::Result<()> {
    let m = IntMatrix::from_rows(3, &[[2, 4, 4], [-6, 6, 12], [10, -4, -16]]);
    let snf = smith_normal_form(&m);
    println!("invariant factors: {:?}", snf.invariant_factors());

    // Z/4 x Z/6 is normalized to the divisibility chain Z/2 x Z/12
    let (g, _) = FgAbGroup::normalizing(1, &[4, 6])?;
    println!("group: {g}");

    let a = Subgroup::new(&g, vec![g.element_flat(&[2, 0, 0])?, g.element_flat(&[0, 1, 0])?])?;
    let b = Subgroup::new(&g, vec![g.element_flat(&[3, 1, 0])?])?;
    println!("[G : A] = {}", a.index());
    let meet = a.intersection(&b)?;
    let gens: Vec<String> = meet.generators().iter().map(|e| e.render(&g)).collect();
    println!("A ∩ B generated by {}", gens.join(", "));
    Ok(())
}
