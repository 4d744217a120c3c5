//! The presentation suite: defining relations, the derived commutation
//! identities, the Cartan-type commutativity, and the representation axiom
//! on random basis vectors.

use coideal::element::{alias_expand, defining_relations, khat_bracket0, Alias, Element, Generator};
use coideal::pbw::{check_identity, element_act, midx, normal_form, PBWElement, PBWIndex};
use qfield::{qint, q_minus_qinv, Scalar};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn b0() -> Element {
    Element::gen(Generator::B0)
}
fn b1() -> Element {
    Element::gen(Generator::B1)
}
fn bm1() -> Element {
    Element::gen(Generator::Bminus1)
}
fn dd() -> Element {
    Element::gen(Generator::Dd)
}
fn d1() -> Element {
    Element::gen(Generator::D1)
}

#[test]
fn defining_relations_vanish() {
    let rels = defining_relations();
    assert!(rels.len() >= 16);
    for (label, el) in rels {
        assert!(check_identity(&el), "defining relation failed: {label}");
    }
}

#[test]
fn defining_relations_annihilate_random_basis_vectors() {
    // The relations must act as zero on every p vector, not only on p_0.
    let mut rng = StdRng::seed_from_u64(0x9e3779b9);
    let rels = defining_relations();
    let mut indices = Vec::new();
    for _ in 0..50 {
        indices.push(midx(
            rng.gen_range(0..=4),
            rng.gen_range(0..=4),
            rng.gen_range(0..=4),
            rng.gen_range(0..=4),
            rng.gen_range(0..=4),
            rng.gen_range(0..=4),
            rng.gen_range(-4..=4),
            rng.gen_range(-4..=4),
        ));
    }
    let cases: Vec<(String, Element, PBWIndex)> = rels
        .iter()
        .flat_map(|(label, el)| {
            indices
                .iter()
                .map(move |&idx| (label.clone(), el.clone(), idx))
        })
        .collect();
    assert!(coideal::par::all(cases, |(label, el, idx)| {
        let v = PBWElement::monomial(*idx, Scalar::one());
        let ok = element_act(el, &v).is_zero();
        if !ok {
            eprintln!("relation {label} does not annihilate p_{idx:?}");
        }
        ok
    }));
}

#[test]
fn cartan_subalgebra_is_commutative() {
    let z = alias_expand(Alias::Z);
    let w = alias_expand(Alias::W);
    let pairs: Vec<(&str, Element, Element)> = vec![
        ("[Dd, D1]", dd(), d1()),
        ("[B0, Dd]", b0(), dd()),
        ("[B0, D1]", b0(), d1()),
        ("[Z, B0]", z.clone(), b0()),
        ("[Dd, Z]", dd(), z.clone()),
        ("[D1, Z]", d1(), z.clone()),
        ("[W, Dd]", w.clone(), dd()),
        ("[W, D1]", w.clone(), d1()),
        ("[W, B0]", w.clone(), b0()),
        ("[Z, W]", z, w),
    ];
    for (label, a, b) in pairs {
        assert!(check_identity(&a.commutator(&b)), "{label} != 0");
    }
}

#[test]
fn commutation_lemma_identities() {
    let q = Scalar::q();
    let qinv = Scalar::q_pow(-1);
    let x = alias_expand(Alias::X);
    let y = alias_expand(Alias::Y);
    let khat = alias_expand(Alias::Khat);
    // B1*X = q^-1 X*B1 and B-1*Y = q^-1 Y*B-1
    assert!(check_identity(&b1().mul(&x).sub(&x.mul(&b1()).scale(&qinv))));
    assert!(check_identity(&bm1().mul(&y).sub(&y.mul(&bm1()).scale(&qinv))));
    // [B0, X]_q = B1 and [B0, Y]_q = B-1
    assert!(check_identity(&b0().comm(&x, &q).sub(&b1())));
    assert!(check_identity(&b0().comm(&y, &q).sub(&bm1())));
    // [X, Y] = -q^-1 [Khat; 0]
    assert!(check_identity(
        &x.commutator(&y).add(&khat_bracket0().scale(&qinv))
    ));
    // Khat*X = q^2 X*Khat and Khat*Y = q^-2 Y*Khat
    assert!(check_identity(
        &khat.mul(&x).sub(&x.mul(&khat).scale(&Scalar::q_pow(2)))
    ));
    assert!(check_identity(
        &khat.mul(&y).sub(&y.mul(&khat).scale(&Scalar::q_pow(-2)))
    ));
}

#[test]
fn dhat_weight_identities_for_aliases() {
    let x = alias_expand(Alias::X);
    let y = alias_expand(Alias::Y);
    let khat = alias_expand(Alias::Khat);
    let cases: Vec<(Element, Element, i64)> = vec![
        (dd(), x.clone(), 1),
        (dd(), y.clone(), -1),
        (d1(), y.clone(), 1),
        (d1(), x.clone(), -1),
        (khat.clone(), b1(), 2),
        (khat.clone(), bm1(), -2),
    ];
    for (d, g, pow) in cases {
        // d*g = q^pow g*d
        let rel = d.mul(&g).sub(&g.mul(&d).scale(&Scalar::q_pow(pow)));
        assert!(check_identity(&rel));
    }
}

#[test]
fn mixed_commutator_identities() {
    let q = Scalar::q();
    let qinv = Scalar::q_pow(-1);
    let two = qint(2);
    let x = alias_expand(Alias::X);
    let y = alias_expand(Alias::Y);
    let z = alias_expand(Alias::Z);
    let w = alias_expand(Alias::W);
    let khat = alias_expand(Alias::Khat);
    let khat_inv = alias_expand(Alias::KhatInv);

    // [B-1, Z]_{q^-1} = q^-2 [2] Khat^-1 Y
    let rhs = khat_inv.mul(&y).scale(&(&Scalar::q_pow(-2) * &two));
    assert!(check_identity(&bm1().comm(&z, &qinv).sub(&rhs)));
    // [Z, B1]_{q^-1} = -q^-3 [2] X Khat^-1 + (q^-1 - q^-5) B1 B0 Khat^-1
    let rhs = x
        .mul(&khat_inv)
        .scale(&-(&(&Scalar::q_pow(-3) * &two)))
        .add(
            &b1()
                .mul(&b0())
                .mul(&khat_inv)
                .scale(&(&Scalar::q_pow(-1) - &Scalar::q_pow(-5))),
        );
    assert!(check_identity(&z.comm(&b1(), &qinv).sub(&rhs)));
    // [X, Z]_q = [2] Khat^-1 B1
    let rhs = khat_inv.mul(&b1()).scale(&two);
    assert!(check_identity(&x.comm(&z, &q).sub(&rhs)));
    // [Z, Y]_q = -q [2] B-1 Khat^-1 - (q^3 - q^-1) Y B0 Khat^-1
    let rhs = bm1()
        .mul(&khat_inv)
        .scale(&-(&(&q * &two)))
        .sub(
            &y.mul(&b0())
                .mul(&khat_inv)
                .scale(&(&Scalar::q_pow(3) - &Scalar::q_pow(-1))),
        );
    assert!(check_identity(&z.comm(&y, &q).sub(&rhs)));
    // [B1, W]_{q^-1} = q^-2 [2] Khat X
    let rhs = khat.mul(&x).scale(&(&Scalar::q_pow(-2) * &two));
    assert!(check_identity(&b1().comm(&w, &qinv).sub(&rhs)));
    // [B-1, W]_q = q^-2 [2] Y Khat - (1 - q^-4) B-1 B0 Khat
    let rhs = y.mul(&khat).scale(&(&Scalar::q_pow(-2) * &two)).sub(
        &bm1()
            .mul(&b0())
            .mul(&khat)
            .scale(&(&Scalar::one() - &Scalar::q_pow(-4))),
    );
    assert!(check_identity(&bm1().comm(&w, &q).sub(&rhs)));
    // [Y, W]_q = [2] Khat B-1
    let rhs = khat.mul(&bm1()).scale(&two);
    assert!(check_identity(&y.comm(&w, &q).sub(&rhs)));
    // [X, W]_{q^-1} = q^-4 [2] Khat B1 + (q^-1 - q^-5) B0 Khat X
    let rhs = khat
        .mul(&b1())
        .scale(&(&Scalar::q_pow(-4) * &two))
        .add(
            &b0()
                .mul(&khat)
                .mul(&x)
                .scale(&(&Scalar::q_pow(-1) - &Scalar::q_pow(-5))),
        );
    assert!(check_identity(&x.comm(&w, &qinv).sub(&rhs)));
}

#[test]
fn w_in_terms_of_z() {
    // W = q^-2 Z - q^-2 (q - q^-1) [Khat;0] B0 - (q^-2 - 1) B-1 X
    //     - q^-2 (q - q^-1) Y B1
    let x = alias_expand(Alias::X);
    let y = alias_expand(Alias::Y);
    let z = alias_expand(Alias::Z);
    let w = alias_expand(Alias::W);
    let qm2 = Scalar::q_pow(-2);
    let d = q_minus_qinv();
    let rhs = z
        .scale(&qm2)
        .sub(&khat_bracket0().mul(&b0()).scale(&(&qm2 * &d)))
        .sub(&bm1().mul(&x).scale(&(&qm2 - &Scalar::one())))
        .sub(&y.mul(&b1()).scale(&(&qm2 * &d)));
    assert!(check_identity(&w.sub(&rhs)));
}

#[test]
fn q_jacobi_identity_on_random_words() {
    // [A,[B,C]_p] + [B,[C,A]_p] + [C,[A,B]_p] = 0 for random short words.
    let mut rng = StdRng::seed_from_u64(42);
    let random_word = |rng: &mut StdRng| -> Element {
        let len = rng.gen_range(0..=2);
        let w: Vec<Generator> = (0..len)
            .map(|_| Generator::ALL[rng.gen_range(0..7)])
            .collect();
        Element::from_word(w).scale(&Scalar::q_pow(rng.gen_range(-2..=2)))
    };
    let ps = [Scalar::q(), Scalar::q_pow(-1), Scalar::one()];
    for trial in 0..20 {
        let a = random_word(&mut rng);
        let b = random_word(&mut rng);
        let c = random_word(&mut rng);
        let p = &ps[trial % 3];
        let jac = a
            .commutator(&b.comm(&c, p))
            .add(&b.commutator(&c.comm(&a, p)))
            .add(&c.commutator(&a.comm(&b, p)));
        assert!(check_identity(&jac), "q-Jacobi failed on trial {trial}");
    }
}

#[test]
fn tau_is_an_involution_exchanging_z_and_w() {
    let z = alias_expand(Alias::Z);
    let w = alias_expand(Alias::W);
    assert_eq!(normal_form(&z.tau()), normal_form(&w));
    assert_eq!(normal_form(&w.tau()), normal_form(&z));
    assert_eq!(
        normal_form(&alias_expand(Alias::X).tau()),
        normal_form(&alias_expand(Alias::Y))
    );
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..30 {
        let len = rng.gen_range(0..=4);
        let w: Vec<Generator> = (0..len)
            .map(|_| Generator::ALL[rng.gen_range(0..7)])
            .collect();
        let el = Element::from_word(w);
        assert_eq!(normal_form(&el.tau().tau()), normal_form(&el));
    }
}
