//! Property suites over randomly generated groups, gradings and specs.

mod common;

use std::collections::BTreeSet;

use common::*;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use projd::charts::{chart_algebra, chart_intersection_check, cover_decomposition, proj_monomial_primes, v_plus};
use projd::diophantine::{hilbert_basis, kernel_lattice, semigroup_member, ConstrainedSemigroup, ExponentVector};
use projd::fgab::matrix::{determinant_abs_is_one, smith_normal_form, IntMatrix};
use projd::fgab::{FgAbGroup, Index, Subgroup};
use projd::ringspec::{Monomial, RingSpec};
use projd::separation::{is_separated, mu_surjective};
use projd::sheaves::{global_sections, is_free, is_invertible, twist_module_generators, unit_of_degree};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, failure_persistence: None, ..ProptestConfig::default() }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small effective spec, possibly with torsion.
fn random_spec(seed: u64, max_n: usize) -> RingSpec {
    let mut r = rng(seed);
    let torsions: [&[i64]; 4] = [&[], &[], &[2], &[3]];
    let rank = r.gen_range(1..=2);
    let torsion = torsions[r.gen_range(0..torsions.len())];
    let n = r.gen_range((rank + torsion.len()).max(2)..=max_n);
    random_effective_spec(&mut r, n, rank, torsion, 0, 2, false)
}

fn flat_degree(spec: &RingSpec, r: &mut ChaCha8Rng, radius: i64) -> Vec<i64> {
    let mut d: Vec<i64> = (0..spec.group().rank()).map(|_| r.gen_range(-radius..=radius)).collect();
    d.extend(spec.group().torsion().iter().map(|&m| r.gen_range(0..m)));
    d
}

mod fgab {
    use super::*;

    proptest! {
        #![proptest_config(config(64))]

        #[test]
        fn smith_form_is_a_certified_diagonalization(
            rows in 1usize..4, cols in 1usize..4, entries in prop::collection::vec(-6i64..=6, 16)
        ) {
            let data: Vec<Vec<i64>> = (0..rows).map(|i| entries[i * cols..(i + 1) * cols].to_vec()).collect();
            let m = IntMatrix::from_rows(cols, &data);
            let snf = smith_normal_form(&m);
            prop_assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.s.clone());
            prop_assert!(determinant_abs_is_one(&snf.u) && determinant_abs_is_one(&snf.v));
            for i in 0..rows {
                for j in 0..cols {
                    if i != j {
                        prop_assert!(snf.s[(i, j)].is_zero());
                    }
                }
            }
            let d = snf.invariant_factors();
            for w in d.windows(2) {
                prop_assert!(w[1].is_multiple_of(&w[0]));
            }
            prop_assert!(d.iter().all(|x| *x > BigInt::zero()));
        }

        #[test]
        fn index_one_iff_generators_reached(seed in any::<u64>()) {
            let mut r = rng(seed);
            let g = FgAbGroup::new(r.gen_range(0..=2), [&[][..], &[2], &[2, 4]][r.gen_range(0..3)]).unwrap();
            let k = r.gen_range(0..=3);
            let gens = (0..k).map(|_| {
                let flat: Vec<i64> = (0..g.lifted_len()).map(|_| r.gen_range(-2..=2)).collect();
                g.element_flat(&flat).unwrap()
            }).collect();
            let h = Subgroup::new(&g, gens).unwrap();
            let all = g.standard_generators().iter().all(|e| h.contains(e));
            prop_assert_eq!(h.index() == Index::Finite(1), all);
        }

        #[test]
        fn intersection_matches_enumeration(seed in any::<u64>()) {
            let mut r = rng(seed);
            let rank = r.gen_range(1..=2);
            let torsion: &[i64] = [&[][..], &[2], &[3]][r.gen_range(0..3)];
            let g = FgAbGroup::new(rank, torsion).unwrap();
            let flat = FlatGrading { rank, torsion: torsion.to_vec(), degrees: Vec::new() };
            let random_gens = |r: &mut ChaCha8Rng| -> Vec<Vec<i64>> {
                (0..r.gen_range(1..=2)).map(|_| {
                    let mut v: Vec<i64> = (0..rank).map(|_| r.gen_range(-2..=2)).collect();
                    v.extend(torsion.iter().map(|&m| r.gen_range(0..m)));
                    v
                }).collect()
            };
            let (a, b) = (random_gens(&mut r), random_gens(&mut r));
            let sub = |v: &[Vec<i64>]| Subgroup::new(&g, v.iter().map(|x| g.element_flat(x).unwrap()).collect()).unwrap();
            let meet = sub(&a).intersection(&sub(&b)).unwrap();
            let (ca, cb) = (SubgroupClosure::new(&flat, &a, 14), SubgroupClosure::new(&flat, &b, 14));
            for free in box_points(rank, -3, 3) {
                let tor_points = torsion.iter().fold(vec![Vec::new()], |acc: Vec<Vec<i64>>, &m| {
                    acc.into_iter().flat_map(|p| (0..m).map(move |t| [p.clone(), vec![t]].concat())).collect()
                });
                for t in tor_points {
                    let d = [free.clone(), t].concat();
                    let expected = ca.contains(&d) && cb.contains(&d);
                    prop_assert_eq!(meet.contains(&g.element_flat(&d).unwrap()), expected, "{:?} ∩ {:?} at {:?}", a, b, d);
                }
            }
        }

        #[test]
        fn index_multiplies_along_scaling(seed in any::<u64>()) {
            let mut r = rng(seed);
            let rank = r.gen_range(1..=3);
            let g = FgAbGroup::free(rank);
            let gens: Vec<Vec<i64>> = (0..rank + 1).map(|_| (0..rank).map(|_| r.gen_range(-3..=3)).collect()).collect();
            let h1 = Subgroup::new(&g, gens.iter().map(|v| g.element_flat(v).unwrap()).collect()).unwrap();
            let k = r.gen_range(2..=3i64);
            let h2 = Subgroup::new(&g, gens.iter().map(|v| g.element_flat(&v.iter().map(|x| k * x).collect::<Vec<_>>()).unwrap()).collect()).unwrap();
            prop_assert!(h2.is_subgroup_of(&h1));
            match (h1.index(), h2.index()) {
                (Index::Finite(a), Index::Finite(b)) => prop_assert_eq!(b, a * (k as u64).pow(rank as u32)),
                (Index::Infinite, Index::Infinite) => {}
                other => prop_assert!(false, "{:?}", other),
            }
        }
    }
}

mod diophantine {
    use super::*;

    fn random_semigroup(seed: u64) -> (RingSpec, ConstrainedSemigroup) {
        let mut r = rng(seed);
        let torsions: [&[i64]; 3] = [&[], &[2], &[3]];
        let rank = r.gen_range(1..=2);
        let torsion = torsions[r.gen_range(0..3)];
        let n = r.gen_range(2..=5);
        let s = unchecked_spec(rank, torsion, &random_degrees(&mut r, n, rank, torsion, -1, 2));
        let free: Vec<usize> = (0..n).filter(|_| r.gen_bool(0.3)).collect();
        let cs = ConstrainedSemigroup::for_grading(s.grading(), free).unwrap();
        (s, cs)
    }

    proptest! {
        #![proptest_config(config(48))]

        #[test]
        fn hilbert_basis_elements_are_irreducible_members(seed in any::<u64>()) {
            let (s, cs) = random_semigroup(seed);
            let hb = hilbert_basis(&cs).unwrap();
            for u in &hb.units {
                prop_assert!(cs.contains(u) && cs.is_unit(u));
            }
            for (i, g) in hb.generators.iter().enumerate() {
                prop_assert!(cs.contains(g) && !cs.is_unit(g), "{} in {}", g, s);
                prop_assert!(s.grading().degree_of(g).is_zero());
                let mut rest: Vec<ExponentVector> = hb.units.iter().flat_map(|u| [u.clone(), -u]).collect();
                rest.extend(hb.generators.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, h)| h.clone()));
                prop_assert!(semigroup_member(&rest, g).unwrap().is_none(), "{} is reducible", g);
            }
        }

        #[test]
        fn hilbert_basis_ignores_the_lattice_basis(seed in any::<u64>()) {
            let (_, cs) = random_semigroup(seed);
            let mut r = rng(seed ^ 0x5eed);
            let mut basis = cs.kernel_basis().to_vec();
            if basis.len() >= 2 {
                let (i, j) = (r.gen_range(0..basis.len()), r.gen_range(0..basis.len()));
                if i != j {
                    let k = r.gen_range(-2..=2);
                    basis[i] = &basis[i] + &basis[j].scale(k);
                }
                basis.reverse();
            }
            if let Some(b) = basis.first_mut() {
                *b = -&*b;
            }
            let other = ConstrainedSemigroup::new(cs.nvars(), basis, cs.free_coords().to_vec()).unwrap();
            let (a, b) = (hilbert_basis(&cs).unwrap(), hilbert_basis(&other).unwrap());
            prop_assert_eq!(a.generators, b.generators);
            prop_assert_eq!(a.units, b.units);
        }

        #[test]
        fn box_elements_decompose_and_certificates_verify(seed in any::<u64>()) {
            let (_, cs) = random_semigroup(seed);
            let gens = hilbert_basis(&cs).unwrap().monoid_generators();
            let n = cs.nvars();
            for p in box_points(n, -3, 3).into_iter().step_by(11) {
                let b = ev(&p);
                if !cs.contains(&b) {
                    continue;
                }
                let dec = semigroup_member(&gens, &b).unwrap();
                prop_assert!(dec.as_ref().is_some_and(|d| d.verifies(&b)), "{} not reached", b);
            }
        }
    }
}

mod ringspec {
    use super::*;

    proptest! {
        #![proptest_config(config(48))]

        #[test]
        fn relevance_criteria_agree_and_are_monotone(seed in any::<u64>()) {
            let s = random_spec(seed, 6);
            let n = s.nvars();
            let sq = squarefree_monomials(n);
            for f in &sq {
                let rel = s.is_relevant(f);
                prop_assert_eq!(rel, s.support_group(f).index().is_finite());
                prop_assert_eq!(rel, s.relevance_via_components(f));
                for g in &sq {
                    if rel {
                        prop_assert!(s.is_relevant(&f.mul(g)));
                    }
                    if f.divides(g) {
                        prop_assert!(s.support_group(f).is_subgroup_of(&s.support_group(g)));
                    }
                }
                for k in 1..=4 {
                    prop_assert_eq!(s.veronese_scaled_spec(k).unwrap().is_relevant(f), rel);
                }
            }
        }

        #[test]
        fn irrelevant_generators_form_a_covering_antichain(seed in any::<u64>()) {
            let s = random_spec(seed, 6);
            let gens = s.irrelevant_generators();
            for g in &gens {
                prop_assert!(s.is_relevant(g));
                prop_assert!(gens.iter().all(|h| h == g || !h.divides(g)));
            }
            for f in squarefree_monomials(s.nvars()).into_iter().filter(|f| s.is_relevant(f)) {
                prop_assert!(gens.iter().any(|g| g.divides(&f)));
            }
        }

        #[test]
        fn companions_balance_degrees(seed in any::<u64>()) {
            let s = random_spec(seed, 5);
            let mut r = rng(seed);
            let n = s.nvars();
            let gens = s.irrelevant_generators();
            let f = &gens[r.gen_range(0..gens.len())];
            let h = Monomial::new((0..n).map(|_| r.gen_range(0..=2)).collect());
            if let Some(c) = s.degree_zero_companion(&h, f).unwrap() {
                let lhs = s.grading().degree_of(&h.pow(c.n).mul(&c.g).to_exponent_vector());
                let rhs = s.grading().degree_of(&f.pow(c.k).to_exponent_vector());
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}

mod charts {
    use super::*;

    proptest! {
        #![proptest_config(config(40))]

        #[test]
        fn cover_matches_avoidance_on_proj_primes(seed in any::<u64>()) {
            let s = random_spec(seed, 5);
            let n = s.nvars();
            let mut r = rng(seed);
            let h = Monomial::new((0..n).map(|_| r.gen_range(0..=1)).collect());
            let cover = cover_decomposition(&s, &h);
            for p in proj_monomial_primes(&s) {
                prop_assert_eq!(!p.contains(&h), cover.iter().any(|m| !p.contains(m)), "{}", p.render(&s));
            }
        }

        #[test]
        fn product_charts_contain_both_factors(seed in any::<u64>()) {
            let s = random_spec(seed, 5);
            let gens = s.irrelevant_generators();
            for f in &gens {
                for g in &gens {
                    let report = chart_intersection_check(&s, f, g).unwrap();
                    prop_assert!(report.consistent, "S_({}) vs S_({})", s.render_monomial(f), s.render_monomial(g));
                    let fg = chart_algebra(&s, &f.mul(g)).unwrap();
                    let pool = fg.monoid_generators();
                    for a in chart_algebra(&s, f).unwrap().monoid_generators() {
                        prop_assert!(semigroup_member(&pool, &a).unwrap().is_some());
                    }
                }
            }
        }

        #[test]
        fn vanishing_closure_contains_the_set(seed in any::<u64>()) {
            let s = random_spec(seed, 5);
            let primes = proj_monomial_primes(&s);
            let mut r = rng(seed);
            let y: Vec<_> = primes.iter().filter(|_| r.gen_bool(0.4)).cloned().collect();
            let ideal: Vec<Monomial> =
                squarefree_monomials(s.nvars()).into_iter().filter(|m| y.iter().all(|p| p.contains(m))).collect();
            let closed = v_plus(&s, &ideal);
            for p in &y {
                prop_assert!(closed.iter().any(|q| q.vars().iter().all(|&i| p.contains_var(i))));
            }
            for q in &closed {
                prop_assert!(ideal.iter().all(|m| q.contains(m)));
            }
        }
    }

    #[test]
    fn finite_group_has_a_single_chart() {
        let s = fixture("finite_z2");
        assert_eq!(s.irrelevant_generators(), vec![Monomial::one(1)]);
        assert!(chart_algebra(&s, &Monomial::one(1)).is_ok());
    }
}

mod separation {
    use super::*;

    proptest! {
        #![proptest_config(config(32))]

        #[test]
        fn weak_pairs_are_symmetric_and_witnessed(seed in any::<u64>()) {
            let s = random_spec(seed, 5);
            let gens = s.conical_generators();
            for f in &gens {
                for g in &gens {
                    let a = mu_surjective(&s, f, g).unwrap();
                    prop_assert_eq!(a.weak, mu_surjective(&s, g, f).unwrap().weak);
                    if f == g {
                        prop_assert!(!a.weak);
                    }
                    if let Some(w) = &a.witness {
                        prop_assert!(chart_algebra(&s, &f.mul(g)).unwrap().monoid_generators().contains(w));
                        let mut pool = chart_algebra(&s, f).unwrap().monoid_generators();
                        pool.extend(chart_algebra(&s, g).unwrap().monoid_generators());
                        prop_assert!(semigroup_member(&pool, w).unwrap().is_none());
                    }
                }
            }
            let verdict = is_separated(&s, None).unwrap();
            let weak: BTreeSet<(Monomial, Monomial)> =
                verdict.weak_pairs.iter().map(|w| (w.f.clone(), w.g.clone())).collect();
            let mut expected = BTreeSet::new();
            for (i, f) in gens.iter().enumerate() {
                for g in &gens[i + 1..] {
                    if mu_surjective(&s, f, g).unwrap().weak {
                        expected.insert((f.clone(), g.clone()));
                    }
                }
            }
            prop_assert_eq!(weak, expected);
        }

        #[test]
        fn separation_passes_to_smaller_generator_sets(seed in any::<u64>()) {
            let s = random_spec(seed, 5);
            let gens = s.irrelevant_generators();
            let mut r = rng(seed);
            let sub: Vec<Monomial> = gens.iter().filter(|_| r.gen_bool(0.6)).cloned().collect();
            if is_separated(&s, Some(&gens)).unwrap().separated {
                prop_assert!(is_separated(&s, Some(&sub)).unwrap().separated);
            }
        }
    }
}

mod sheaves {
    use super::*;

    proptest! {
        #![proptest_config(config(40))]

        #[test]
        fn freeness_is_a_subgroup_and_matches_invertibility(seed in any::<u64>()) {
            let s = random_spec(seed, 5);
            let g = s.group();
            prop_assert!(is_free(&s, &g.zero()).unwrap());
            let mut r = rng(seed);
            for _ in 0..8 {
                let d = g.element_flat(&flat_degree(&s, &mut r, 4)).unwrap();
                let e = g.element_flat(&flat_degree(&s, &mut r, 4)).unwrap();
                let (fd, fe) = (is_free(&s, &d).unwrap(), is_free(&s, &e).unwrap());
                prop_assert_eq!(fd, is_invertible(&s, &d).unwrap().invertible);
                prop_assert_eq!(fd, is_free(&s, &g.neg(&d)).unwrap());
                if fd && fe {
                    prop_assert!(is_free(&s, &g.add(&d, &e)).unwrap());
                }
            }
        }

        #[test]
        fn units_of_degree_single_out_cyclic_modules(seed in any::<u64>()) {
            let s = random_spec(seed, 4);
            let g = s.group();
            let mut r = rng(seed);
            let gens = s.irrelevant_generators();
            let f = &gens[r.gen_range(0..gens.len())];
            let d = g.element_flat(&flat_degree(&s, &mut r, 3)).unwrap();
            let module = twist_module_generators(&s, f, &d).unwrap();
            let unit = unit_of_degree(&s, f, &d).unwrap();
            if let Some(u) = unit {
                prop_assert_eq!(module.clone(), vec![u.clone()]);
                prop_assert_eq!(s.grading().degree_of(&u), d.clone());
                // multiplying by u moves degree-zero chart elements to degree d and back
                let chart = ConstrainedSemigroup::for_grading(s.grading(), f.support()).unwrap();
                for p in box_points(s.nvars(), -2, 2).into_iter().step_by(5) {
                    let a = ev(&p);
                    if chart.contains(&a) {
                        let moved = &a + &u;
                        prop_assert_eq!(s.grading().degree_of(&moved), d.clone());
                        prop_assert!(chart.contains(&(&moved - &u)));
                    }
                }
            }
        }

        #[test]
        fn sections_have_the_requested_degree(seed in any::<u64>()) {
            let s = random_spec(seed, 4);
            let mut r = rng(seed);
            let d = s.group().element_flat(&flat_degree(&s, &mut r, 3)).unwrap();
            let sections = global_sections(&s, &d, 4).unwrap();
            for m in &sections.monomials {
                prop_assert_eq!(s.grading().degree_of(&m.to_exponent_vector()), d.clone());
            }
            let pointed = kernel_lattice(s.grading()).is_empty()
                || hilbert_basis(&ConstrainedSemigroup::for_grading(s.grading(), Vec::new()).unwrap()).unwrap().generators.is_empty();
            prop_assert_eq!(sections.complete, pointed);
        }
    }

    #[test]
    fn cyclic_twist_without_a_unit() {
        let s = try_spec(1, &[], &[vec![1], vec![2]]).unwrap();
        let y = s.parse_monomial("y").unwrap();
        let d = s.group().element_flat(&[1]).unwrap();
        assert_eq!(twist_module_generators(&s, &y, &d).unwrap(), vec![ev(&[1, 0])]);
        assert_eq!(unit_of_degree(&s, &y, &d).unwrap(), None);
    }
}
