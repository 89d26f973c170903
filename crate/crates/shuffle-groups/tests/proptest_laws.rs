//! Property-based laws for the permutation algebra and the stabiliser chain,
//! over randomly generated permutations of small degree.

use num_bigint::BigUint;
use proptest::prelude::*;

use shuffle_groups::bsgs::PermGroup;
use shuffle_groups::perm::Permutation;

/// A random permutation of fixed degree, built from a shuffled image vector.
fn perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(images).expect("shuffle is a bijection"))
}

proptest! {
    #[test]
    fn composition_is_associative(
        p in perm(9), q in perm(9), r in perm(9)
    ) {
        let lhs = p.compose(&q).unwrap().compose(&r).unwrap();
        let rhs = p.compose(&q.compose(&r).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_cancels(p in perm(10)) {
        prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
        prop_assert!(p.inverse().compose(&p).unwrap().is_identity());
    }

    #[test]
    fn right_action_composition_law(p in perm(8), q in perm(8)) {
        let pq = p.compose(&q).unwrap();
        for i in 0..8 {
            prop_assert_eq!(pq.image(i), q.image(p.image(i)));
        }
    }

    #[test]
    fn sign_is_a_homomorphism(p in perm(9), q in perm(9)) {
        prop_assert_eq!(p.compose(&q).unwrap().sign(), p.sign() * q.sign());
        prop_assert_eq!(p.inverse().sign(), p.sign());
    }

    #[test]
    fn conjugation_preserves_cycle_type(p in perm(9), g in perm(9)) {
        let conj = p.conjugate_by(&g).unwrap();
        prop_assert_eq!(conj.cycle_type(), p.cycle_type());
        prop_assert_eq!(conj.order(), p.order());
    }

    #[test]
    fn display_parse_round_trip(p in perm(11)) {
        let text = p.to_string();
        let parsed = Permutation::parse_cycles(11, &text).unwrap();
        prop_assert_eq!(parsed, p);
    }

    #[test]
    fn power_matches_order(p in perm(10)) {
        let ord = p.order() as i64;
        prop_assert!(p.power(ord).is_identity());
        prop_assert_eq!(p.power(-1), p.inverse());
        prop_assert_eq!(p.power(ord - 1), p.inverse());
    }

    #[test]
    fn bsgs_order_matches_enumeration(p in perm(6), q in perm(6)) {
        let group = PermGroup::new(6, vec![p, q]).unwrap();
        let elements = group.elements_up_to(720).expect("subgroup of Sym(6)");
        prop_assert_eq!(group.order(), BigUint::from(elements.len()));
        // Every enumerated element sifts to the identity.
        for g in elements.iter().take(50) {
            prop_assert!(group.contains(g).unwrap());
        }
    }

    #[test]
    fn bsgs_membership_is_closed_under_products(p in perm(7), q in perm(7)) {
        let group = PermGroup::new(7, vec![p.clone(), q.clone()]).unwrap();
        let word = p.compose(&q).unwrap().compose(&p.inverse()).unwrap();
        prop_assert!(group.contains(&word).unwrap());
    }
}
