//! Generators of sign-constrained kernel semigroups and exact membership.

use projd::diophantine::{hilbert_basis, kernel_lattice, ConstrainedSemigroup, ExponentVector, Grading};
use projd::fgab::FgAbGroup;

fn main() -> projd::Result<()> {
    let g = FgAbGroup::free(2);
    let grading = Grading::new(
        g.clone(),
        vec![g.element_flat(&[1, 0])?, g.element_flat(&[0, 1])?, g.element_flat(&[1, 1])?, g.element_flat(&[2, 1])?],
    )?;
    println!("kernel basis: {:?}", kernel_lattice(&grading).iter().map(|v| v.to_string()).collect::<Vec<_>>());

    for free in [vec![], vec![3], vec![0, 1]] {
        let s = ConstrainedSemigroup::for_grading(&grading, free.clone())?;
        let hb = hilbert_basis(&s)?;
        println!("F = {free:?}: units {:?}, generators {:?}", show(&hb.units), show(&hb.generators));
    }

    let s = ConstrainedSemigroup::for_grading(&grading, vec![0, 1])?;
    let b = ExponentVector::new(vec![-5, -3, 1, 2]);
    match s.member(&b)? {
        Some(dec) => {
            let terms: Vec<String> = dec.terms.iter().map(|(v, c)| format!("{c}·{v}")).collect();
            println!("{b} = {}", terms.join(" + "));
        }
        None => println!("{b} is not in the semigroup"),
    }
    Ok(())
}

fn show(v: &[ExponentVector]) -> Vec<String> {
    v.iter().map(|a| a.to_string()).collect()
}
