//! Randomized invariant checks. All arithmetic is exact, so every property
//! holds identically rather than within a tolerance.

use proptest::prelude::*;

use weylgrad::abgroups::{solve_in_group, AbGroup, AbHom};
use weylgrad::algebras::{cayley_good_basis, okubo_algebra, AlgElement};
use weylgrad::gradings::{
    builtin_grading, cartan_cayley_grading, support, universal_abelian_group,
};
use weylgrad::morphisms::{graded_automorphism_check, phi1_cayley, phi2_cayley, tau_cayley};
use weylgrad::scalars::CycScalar;

fn scalar(n: u32) -> impl Strategy<Value = CycScalar> {
    proptest::collection::vec(-3i64..4, 4).prop_map(move |cs| {
        let mut acc = CycScalar::from_int(n, 0);
        for (k, &c) in cs.iter().enumerate() {
            let term = &CycScalar::from_int(n, c) * &CycScalar::root_of_unity(n, k as i64);
            acc = &acc + &term;
        }
        acc
    })
}

fn cayley_element() -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-3i64..4, 8)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_field_axioms(a in scalar(12), b in scalar(12), c in scalar(12)) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        if !a.is_zero() {
            let inv = a.inv().unwrap();
            prop_assert!((&a * &inv).is_one());
        }
    }

    #[test]
    fn scalar_embedding_is_a_homomorphism(a in scalar(8), b in scalar(8)) {
        prop_assert_eq!((&a + &b).embed(24), &a.embed(24) + &b.embed(24));
        prop_assert_eq!((&a * &b).embed(24), &a.embed(24) * &b.embed(24));
    }

    #[test]
    fn cayley_composition_and_alternativity(x in cayley_element(), y in cayley_element()) {
        let c = cayley_good_basis().unwrap();
        let from = |v: &[i64]| AlgElement {
            algebra: c.clone(),
            coords: v.iter().map(|&i| CycScalar::from_int(c.conductor, i)).collect(),
        };
        let (x, y) = (from(&x), from(&y));
        prop_assert_eq!(x.mul(&y).norm(), &x.norm() * &y.norm());
        prop_assert_eq!(x.mul(&x.mul(&y)), x.mul(&x).mul(&y));
        prop_assert_eq!(y.mul(&x).mul(&x), y.mul(&x.mul(&x)));
    }

    #[test]
    fn okubo_symmetric_composition(x in cayley_element(), y in cayley_element(), z in cayley_element()) {
        let o = okubo_algebra().unwrap();
        let from = |v: &[i64]| AlgElement {
            algebra: o.clone(),
            coords: v.iter().map(|&i| CycScalar::from_int(o.conductor, i)).collect(),
        };
        let (x, y, z) = (from(&x), from(&y), from(&z));
        // n(x*y, z) = n(x, y*z), and x*(y*x) = n(x) y
        prop_assert_eq!(x.mul(&y).polar(&z), x.polar(&y.mul(&z)));
        prop_assert_eq!(x.mul(&y.mul(&x)), y.scale(&x.norm()));
    }

    #[test]
    fn solve_in_group_recombines(coeffs in proptest::collection::vec(-5i64..6, 3)) {
        // a known combination of generators is always solvable, and the
        // returned coefficients reproduce the target
        let g = AbGroup::new(1, vec![2, 6]);
        let gens: Vec<_> = (0..g.ngens()).map(|i| g.generator(i)).collect();
        let mut target = g.zero();
        for (gen, &c) in gens.iter().zip(&coeffs) {
            target = target.add(&gen.smul(c));
        }
        let sol = solve_in_group(&g, &gens, &target).unwrap();
        let mut back = g.zero();
        for (gen, &c) in gens.iter().zip(&sol) {
            back = back.add(&gen.smul(c));
        }
        prop_assert_eq!(back, target);
    }

    #[test]
    fn hom_composition_is_associative(
        m1 in proptest::collection::vec(proptest::collection::vec(0i64..2, 3), 3),
        m2 in proptest::collection::vec(proptest::collection::vec(0i64..2, 3), 3),
    ) {
        let g = AbGroup::new(0, vec![2, 2, 2]);
        let (Ok(f), Ok(h)) = (AbHom::new(g.clone(), g.clone(), m1), AbHom::new(g.clone(), g.clone(), m2)) else {
            return Ok(());
        };
        let e = g.elements();
        for x in &e {
            prop_assert_eq!(f.compose(&h).apply(x), f.apply(&h.apply(x)));
        }
    }
}

#[test]
fn support_perms_satisfy_their_invariants() {
    // every projection of a graded automorphism preserves component
    // dimensions and extends to an automorphism of the universal group;
    // compositions stay inside the group
    let g = cartan_cayley_grading().unwrap();
    let table = support(&g);
    let u = universal_abelian_group(&g).unwrap();
    let perms: Vec<_> = [tau_cayley().unwrap(), phi1_cayley().unwrap(), phi2_cayley().unwrap()]
        .iter()
        .map(|phi| graded_automorphism_check(&g, phi).unwrap())
        .collect();
    for p in &perms {
        for q in &perms {
            let r = p.compose(q);
            for (s, &t) in r.perm.iter().enumerate() {
                assert_eq!(table.entries[s].dim, table.entries[t].dim);
            }
            // recomputing the induced automorphism from the permutation
            // alone must succeed and agree
            let hom = weylgrad::weyl::induced_universal_hom(&u, &r.perm).unwrap();
            assert_eq!(hom.matrix, r.induced_universal.matrix);
        }
    }
}

#[test]
fn lower_divides_upper_for_small_gradings() {
    use weylgrad::weyl::{weyl_group, Strategy};
    for name in ["cartan_cayley", "cd_cayley"] {
        let r = weyl_group(name, None, Strategy::Full).unwrap();
        assert_eq!(r.upper_order % r.lower_order, 0, "{}", name);
    }
}

#[test]
fn builtin_gradings_are_homogeneous() {
    // grading_make re-validates homogeneity on construction; building every
    // builtin exercises that check
    for name in weylgrad::gradings::BUILTIN_NAMES {
        if name == "gamma_M" {
            continue;
        }
        builtin_grading(name, None).unwrap();
    }
}
