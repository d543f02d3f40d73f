use mzv_core::groupring::{identity_sides, named, product, verify_identity, GroupRingElem, Named, CATALOG};

#[test]
fn every_family_holds_up_to_six() {
    for (family, _) in CATALOG.iter() {
        for n in 2..=6 {
            assert!(verify_identity(family, n).unwrap(), "{family} at n = {n}");
        }
    }
}

#[test]
fn perturbed_identities_fail() {
    for n in 3..=5 {
        let nm = |w| named(n, w).unwrap();
        let (e, eps, t, p, pi) = (nm(Named::Identity), nm(Named::Epsilon), nm(Named::Tau0), nm(Named::P), nm(Named::PInv));
        let (lhs, rhs) = identity_sides("prop22.crucial", n).unwrap();
        assert_eq!(lhs, &e - &product(&[&eps, &t, &p, &t, &pi]));
        // without ε the left side changes and the identity breaks
        let wrong = &e - &product(&[&t, &p, &t, &pi]);
        assert_ne!(wrong, rhs, "n = {n}");

        let (lhs, rhs) = identity_sides("prop22.first", n).unwrap();
        assert_ne!(lhs, rhs.scaled(-1), "n = {n}");
        assert_ne!(&lhs + &GroupRingElem::identity(n), rhs);
    }
}

#[test]
fn unknown_keys_are_errors() {
    assert!(identity_sides("no.such.identity", 3).is_err());
    assert!(identity_sides("prop22.first", 1).is_err());
}
