use moonshine_core::gl2::{
    bracket, make_gl2, normalize_partner, verify_relations, verify_relations_with, FormalNaturalVector, Gl2Engine,
    Gl2Error, MElement, NaturalSymbol,
};
use moonshine_core::lattice::LatticeVector;
use num_rational::BigRational;
use proptest::prelude::*;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Primary `u` of weight `j + 1` with `(u, u) = 1`, and its partner.
fn partners(j: i64, label: &str) -> (FormalNaturalVector, FormalNaturalVector) {
    if j == -1 {
        return (FormalNaturalVector::vacuum(), FormalNaturalVector::vacuum());
    }
    let u: FormalNaturalVector = NaturalSymbol::new(label, (j + 1) as u32, true).unwrap().into();
    let v = normalize_partner(j, &u, &rat(1, 1)).unwrap();
    (u, v)
}

fn generators(j: i64) -> Vec<MElement> {
    let (u, v) = partners(j, "u");
    vec![
        MElement::e(j, &u),
        MElement::f(j, &v),
        MElement::h1(),
        MElement::h2(),
        MElement::e_real(),
        MElement::f_real(),
    ]
}

#[test]
fn antisymmetry_on_computable_pairs() {
    for j in [1, 2, 3] {
        let gens = generators(j);
        let mut computed = 0;
        for x in &gens {
            for y in &gens {
                match (bracket(x, y), bracket(y, x)) {
                    (Ok(a), Ok(b)) => {
                        assert_eq!(a, -&b, "[{x}, {y}]");
                        computed += 1;
                    }
                    (Err(Gl2Error::OutsideSpan(_)), Err(Gl2Error::OutsideSpan(_))) => {}
                    (a, b) => panic!("[{x}, {y}] = {a:?} but [{y}, {x}] = {b:?}"),
                }
            }
        }
        assert!(computed >= 30, "j = {j}: only {computed} pairs computed");
    }
}

#[test]
fn jacobi_identity_on_gl2_generators() {
    for j in [-1, 1, 2, 3] {
        let gens: Vec<MElement> = generators(j).into_iter().take(4).collect();
        let mut checked = 0;
        for x in &gens {
            for y in &gens {
                for z in &gens {
                    let cyc = |a: &MElement, b: &MElement, c: &MElement| bracket(a, &bracket(b, c)?);
                    let terms = [cyc(x, y, z), cyc(y, z, x), cyc(z, x, y)];
                    if terms.iter().any(Result::is_err) {
                        continue;
                    }
                    let sum = terms.iter().map(|t| t.as_ref().unwrap()).fold(MElement::zero(), |acc, t| &acc + t);
                    assert!(sum.is_zero(), "Jacobi fails on {x}, {y}, {z}: {sum}");
                    checked += 1;
                }
            }
        }
        assert_eq!(checked, 64, "j = {j}");
    }
}

#[test]
fn section_sign_does_not_change_brackets() {
    for j in [-1, 1, 2, 3, 5] {
        let (u, v) = partners(j, "u");
        let e = MElement::e(j, &u);
        let f = MElement::f(j, &v);
        let plain = Gl2Engine::new();
        let flipped = Gl2Engine::new().with_flipped_section(j);
        let rep = |engine: &Gl2Engine, x: &MElement| engine.representative(x)[0].2.clone();
        assert_eq!(rep(&flipped, &e), -&rep(&plain, &e));
        assert_eq!(rep(&flipped, &f), -&rep(&plain, &f));
        for (x, y) in [(&e, &f), (&MElement::h1(), &e), (&MElement::h2(), &f)] {
            assert_eq!(plain.bracket(x, y).unwrap(), flipped.bracket(x, y).unwrap());
        }
        assert!(verify_relations_with(&flipped, j, &u, &v).unwrap().all_passed());
    }
}

#[test]
fn h2_separates_the_imaginary_roots() {
    for j in [1, 2, 3] {
        let (u, _) = partners(j, "u");
        let e = MElement::e(j, &u);
        assert_eq!(bracket(&MElement::h2(), &e).unwrap(), e.scale_int(j));
        assert_eq!(bracket(&MElement::h1(), &e).unwrap(), e);
    }
}

#[test]
fn root_bookkeeping() {
    for j in [-1, 1, 2, 3, 10] {
        let (u, v) = partners(j, "u");
        let re = MElement::e(j, &u).root().unwrap();
        let rf = MElement::f(j, &v).root().unwrap();
        assert_eq!(re, LatticeVector::new(1, j));
        assert_eq!(rf, LatticeVector::new(-1, -j));
        assert_eq!(re.pairing(&rf), 2 * j);
    }
}

#[test]
fn different_families_commute() {
    // [e_{j,u}, f_{p,w}] = 0 unless (j, u) = (p, w)
    for (j, p) in [(1, 2), (2, 1), (2, 3), (3, 10)] {
        let (u, _) = partners(j, "u");
        let (_, w) = partners(p, "w");
        assert!(bracket(&MElement::e(j, &u), &MElement::f(p, &w)).unwrap().is_zero(), "j = {j}, p = {p}");
    }
    // orthogonal vectors of the same weight
    let u: FormalNaturalVector = NaturalSymbol::new("u", 3, true).unwrap().with_pairing("w", rat(0, 1)).into();
    let w: FormalNaturalVector = NaturalSymbol::new("w", 3, true).unwrap().into();
    assert!(bracket(&MElement::e(2, &u), &MElement::f(2, &w)).unwrap().is_zero());
}

#[test]
fn raising_pairs_are_rejected() {
    let (u, _) = partners(1, "u");
    let (w, _) = partners(2, "w");
    for (x, y) in [
        (MElement::e(1, &u), MElement::e(2, &w)),
        (MElement::f(1, &u), MElement::f(2, &w)),
        (MElement::e(2, &w), MElement::e_real()),
    ] {
        assert!(matches!(bracket(&x, &y), Err(Gl2Error::OutsideSpan(_))), "[{x}, {y}]");
    }
}

#[test]
fn non_primary_vectors_cannot_build_gl2() {
    let u: FormalNaturalVector = NaturalSymbol::new("u", 3, false).unwrap().with_pairing("u", rat(1, 1)).into();
    assert!(matches!(make_gl2(2, &u, &u), Err(Gl2Error::NotPrimary(_))));
}

#[test]
fn wrong_sign_partner_fails_validation() {
    let u = NaturalSymbol::new("u", 2, true).unwrap().with_pairing("v", rat(1, 1));
    let v = NaturalSymbol::new("v", 2, true).unwrap();
    assert!(matches!(make_gl2(1, &u.into(), &v.into()), Err(Gl2Error::PairingMismatch { .. })));
}

proptest! {
    #[test]
    fn normalized_partners_always_validate(
        j in prop_oneof![Just(1i64), Just(2), Just(3), Just(4), Just(7)],
        num in 1i64..200,
        den in 1i64..50,
        scale_num in 1i64..20,
        scale_den in 1i64..20,
        negative in any::<bool>(),
    ) {
        let scale = rat(if negative { -scale_num } else { scale_num }, scale_den);
        let symbol = NaturalSymbol::new("u", (j + 1) as u32, true).unwrap();
        let u = FormalNaturalVector::new(symbol, scale);
        let uu = rat(num, den);
        let v = normalize_partner(j, &u, &uu).unwrap();
        prop_assert!(make_gl2(j, &u, &v).is_ok());
        prop_assert!(verify_relations(j, &u, &v).unwrap().all_passed());
    }
}
