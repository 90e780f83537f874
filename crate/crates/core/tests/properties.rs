use std::sync::OnceLock;

use proptest::prelude::*;
use supergrade::abgroup::{subgroup_invariants, GradingGroup, GroupElement};
use supergrade::cliffordlab::{build_even_clifford, classify_configuration, EvenClifford, GradedQuadraticSpace, RawQuadraticSpace};
use supergrade::constructions::{build_d21, D21Alpha, D21Layout};
use supergrade::exactla::{add_scaled, joint_eigenspaces, unit_vec, zero_vec, Mat, Vector};
use supergrade::gradinglab::{grading_from_diag, is_refinement, DiagGenerators, Grading};
use supergrade::scalars::{parse_scalar, root_of_unity, CycNumber, Scalar};

fn small_scalar() -> impl Strategy<Value = Scalar> {
    (prop::collection::vec(-4i64..=4, 4), -3i64..=3, 1i64..=4).prop_map(|(cyc, a, d)| {
        let num = cyc.iter().enumerate().fold(Scalar::from_int(0), |acc, (k, c)| {
            &acc + &(&Scalar::from_int(*c) * &Scalar::from_cyc(CycNumber::zeta().pow(k as u32)))
        });
        let num = &num + &(&Scalar::from_int(a) * &Scalar::alpha());
        num.div(&(&Scalar::alpha() + &Scalar::from_int(d))).expect("alpha + d is nonzero")
    })
}

fn even_clifford() -> &'static EvenClifford {
    static CL: OnceLock<EvenClifford> = OnceLock::new();
    CL.get_or_init(|| {
        let g = GradingGroup::new(0, vec![2; 3]).unwrap();
        let degs = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [0, 1, 1], [1, 1, 1], [1, 0, 1]];
        let w: Vec<(GroupElement, Scalar)> = degs.iter().map(|d| (g.element_flat(d).unwrap(), Scalar::from_int(-1))).collect();
        build_even_clifford(&GradedQuadraticSpace::from_degrees(g, &[], &w).unwrap()).unwrap()
    })
}

/// An even element of `Cl` with integer coefficients on the first monomials.
fn even_element() -> impl Strategy<Value = Vector> {
    prop::collection::vec(-3i64..=3, 12).prop_map(|coefs| {
        let cl = even_clifford();
        let mut x = zero_vec(cl.clifford.dim());
        for (c, &m) in coefs.iter().zip(&cl.even_masks) {
            x[m as usize] = Scalar::from_int(*c);
        }
        x
    })
}

fn vector_in_u() -> impl Strategy<Value = Vector> {
    prop::collection::vec(-2i64..=2, 7).prop_map(|coefs| {
        let cl = &even_clifford().clifford;
        let mut x = zero_vec(cl.dim());
        for (g, c) in coefs.iter().enumerate() {
            add_scaled(&mut x, &Scalar::from_int(*c), &cl.generator(g));
        }
        x
    })
}

fn z2_squared() -> GradingGroup {
    GradingGroup::new(0, vec![2, 2]).unwrap()
}

fn random_grading() -> impl Strategy<Value = Grading> {
    prop::collection::vec((0i64..2, 0i64..2), 6).prop_map(|ds| {
        let g = z2_squared();
        let coords: Vec<Vec<i64>> = ds.iter().map(|&(a, b)| vec![a, b]).collect();
        Grading::from_coords(g, &coords).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn distributivity(a in small_scalar(), b in small_scalar(), c in small_scalar()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
    }

    #[test]
    fn specialization_is_a_ring_map(a in small_scalar(), b in small_scalar(), v in 5i64..20) {
        let at = CycNumber::from_int(v);
        let (sa, sb) = (a.specialize(&at).unwrap(), b.specialize(&at).unwrap());
        prop_assert_eq!((&a + &b).specialize(&at).unwrap(), &sa + &sb);
        prop_assert_eq!((&a * &b).specialize(&at).unwrap(), &sa * &sb);
    }

    #[test]
    fn scalar_text_round_trips(a in small_scalar()) {
        prop_assert_eq!(parse_scalar(&a.to_expr()).unwrap(), a);
    }

    #[test]
    fn subgroup_invariants_ignore_order_and_redundancy(
        gens in prop::collection::vec((-3i64..=3, 0i64..4, 0i64..2), 1..4),
        seed in any::<prop::sample::Index>(),
    ) {
        let g = GradingGroup::new(1, vec![4, 2]).unwrap();
        let elts: Vec<GroupElement> = gens.iter().map(|&(a, b, c)| g.element(&[a], &[b, c]).unwrap()).collect();
        let base = subgroup_invariants(&g, &elts).unwrap();
        let mut rev = elts.clone();
        rev.reverse();
        prop_assert_eq!(subgroup_invariants(&g, &rev).unwrap(), base.clone());
        let extra = elts[seed.index(elts.len())].add(&elts[0]).unwrap().times(3);
        rev.push(extra);
        prop_assert_eq!(subgroup_invariants(&g, &rev).unwrap(), base);
    }

    #[test]
    fn refinement_is_reflexive_and_antisymmetric(a in random_grading(), b in random_grading()) {
        prop_assert!(is_refinement(&a, &a).unwrap());
        if is_refinement(&a, &b).unwrap() && is_refinement(&b, &a).unwrap() {
            prop_assert_eq!(a.partition(), b.partition());
        }
    }

    #[test]
    fn coarsening_is_refined(a in random_grading(), keep_first in any::<bool>()) {
        let z2 = GradingGroup::new(0, vec![2]).unwrap();
        let k = if keep_first { 0 } else { 1 };
        let c = a.coarsen(z2.clone(), |d| Ok(z2.element(&[], &[d.coords()[k]])?)).unwrap();
        prop_assert!(is_refinement(&a, &c).unwrap());
    }

    #[test]
    fn bar_is_an_involutive_antiautomorphism(x in even_element(), y in even_element()) {
        let cl = &even_clifford().clifford;
        prop_assert_eq!(cl.bar(&cl.bar(&x)), x.clone());
        prop_assert_eq!(cl.bar(&cl.mul(&x, &y)), cl.mul(&cl.bar(&y), &cl.bar(&x)));
    }

    #[test]
    fn bar_preserves_components(k in 0usize..64) {
        let e = even_clifford();
        let m = e.even_masks[k];
        let b = e.clifford.bar(&e.clifford.monomial(m));
        let support: Vec<usize> = (0..b.len()).filter(|&i| !b[i].is_zero()).collect();
        prop_assert_eq!(support, vec![m as usize]);
    }

    #[test]
    fn double_commutator_identity(u in vector_in_u(), v in vector_in_u(), w in vector_in_u()) {
        let cl = &even_clifford().clifford;
        // polar form of arbitrary vectors of U, from uv + vu
        let polar = |x: &Vector, y: &Vector| {
            let mut s = cl.mul(x, y);
            add_scaled(&mut s, &Scalar::one(), &cl.mul(y, x));
            s[0].clone()
        };
        let lhs = cl.commutator(&cl.commutator(&u, &v), &w);
        let two = Scalar::from_int(2);
        let mut rhs = zero_vec(cl.dim());
        add_scaled(&mut rhs, &(&two * &polar(&v, &w)), &u);
        add_scaled(&mut rhs, &-(&two * &polar(&u, &w)), &v);
        prop_assert_eq!(lhs, rhs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn diag_grading_ignores_generator_order(order in Just(vec![0usize, 1, 2]).prop_shuffle()) {
        let d = build_d21(D21Alpha::Symbolic).unwrap();
        let a = &d.algebra;
        let torus: Vec<Mat> = (0..3).map(|l| a.left_mul(&unit_vec(a.dim(), D21Layout::sp(l, 0)))).collect();
        let base = grading_from_diag(a, &DiagGenerators::new(torus.clone(), vec![])).unwrap();
        let shuffled: Vec<Mat> = order.iter().map(|&k| torus[k].clone()).collect();
        let g = grading_from_diag(a, &DiagGenerators::new(shuffled, vec![])).unwrap();
        prop_assert_eq!(g.partition(), base.partition());
    }

    #[test]
    fn eigenspaces_fill_the_space(k in 1u32..12, n in 2usize..6) {
        let z = root_of_unity(12).unwrap();
        let powers: Vec<CycNumber> = (0..12).map(|j| z.pow(j)).collect();
        let diag: Vec<Scalar> = (0..n).map(|i| Scalar::from_cyc(z.pow(k * i as u32))).collect();
        let blocks = joint_eigenspaces(&[Mat::diag(&diag)], &powers).unwrap();
        prop_assert_eq!(blocks.iter().map(|b| b.dim()).sum::<usize>(), n);
    }

    /// The general division algorithm agrees with the case table on random
    /// seven dimensional configurations.
    #[test]
    fn classifiers_agree_on_random_configurations(degs in prop::collection::vec(prop::collection::vec(0i64..2, 4), 7)) {
        let g = GradingGroup::new(0, vec![2; 4]).unwrap();
        let elts: Vec<GroupElement> = degs.iter().map(|d| g.element_flat(d).unwrap()).collect();
        let raw = RawQuadraticSpace::with_standard_form(g, elts).unwrap();
        let r = classify_configuration(&raw).unwrap();
        prop_assert!(r.agree(), "{:?} vs {:?}", r.algorithm.class, r.table.class);
        prop_assert!([1, 4, 16, 64].contains(&r.algorithm.support.len()));
    }
}
