//! Highest weight module oracles: frozen values for the character action,
//! the raising/lowering operators and their commutation, closed-form weight
//! tables cross-checked against the action engine, and the raising scalars.

use coideal::element::{alias_expand, Alias, Element, Generator};
use coideal::verma::{
    epm_scalar, f_basis_vector, magical_apply, magical_element, verma_act, weight_of,
    weight_table, HighestWeight, MagicalDir, Sign, VermaError, VermaVector,
};
use qfield::{qbracket, qint, Scalar};

fn gen_el(g: Generator) -> Element {
    Element::gen(g)
}

fn symbolic_hw(kd: i64, k1: i64, zeta: Scalar) -> HighestWeight {
    HighestWeight::new(kd, k1, Scalar::mu(), zeta)
}

#[test]
fn character_action_on_highest_weight_vector() {
    let hw = symbolic_hw(3, 0, Scalar::from_int(7));
    let v = VermaVector::highest_weight();

    // The raising part kills v.
    assert!(verma_act(&hw, &gen_el(Generator::B1), &v).is_zero());
    assert!(verma_act(&hw, &alias_expand(Alias::X), &v).is_zero());

    // The Cartan part acts by the character.
    let beta = qbracket(&Scalar::mu(), 0);
    assert_eq!(
        verma_act(&hw, &gen_el(Generator::B0), &v),
        v.scale(&beta)
    );
    assert_eq!(
        verma_act(&hw, &gen_el(Generator::Dd), &v),
        v.scale(&Scalar::q_pow(3))
    );
    assert_eq!(
        verma_act(&hw, &gen_el(Generator::DdInv), &v),
        v.scale(&Scalar::q_pow(-3))
    );
    assert_eq!(verma_act(&hw, &gen_el(Generator::D1), &v), v.clone());
    assert_eq!(
        verma_act(&hw, &alias_expand(Alias::Z), &v),
        v.scale(&Scalar::from_int(7))
    );

    // The lowering part moves along the basis.
    assert_eq!(
        verma_act(&hw, &gen_el(Generator::Bminus1), &v),
        VermaVector::basis(1, 0)
    );
    assert_eq!(
        verma_act(&hw, &alias_expand(Alias::Y), &v),
        VermaVector::basis(0, 1)
    );
}

#[test]
fn z_on_lowered_vector_frozen() {
    // Z B-1 v = q zeta B-1 v - q^{1-kappa} [2] Y v, here with kappa = 3 and
    // zeta = 7, so the Y coefficient freezes to -q^{-2}(q + q^{-1}).
    let hw = symbolic_hw(3, 0, Scalar::from_int(7));
    let bv = VermaVector::basis(1, 0);
    let mut expected = VermaVector::zero();
    expected.add_term(1, 0, &Scalar::from_int(7) * &Scalar::q());
    expected.add_term(0, 1, -&(&Scalar::q_pow(-2) * &qint(2)));
    assert_eq!(verma_act(&hw, &alias_expand(Alias::Z), &bv), expected);
}

#[test]
fn omega_is_the_w_eigenvalue_of_the_highest_weight_vector() {
    let cases = vec![
        symbolic_hw(3, 0, Scalar::from_int(7)),
        symbolic_hw(2, -1, Scalar::q_pow(2)),
        HighestWeight::new(4, 1, Scalar::q_pow(2), Scalar::zero()),
        HighestWeight::new(2, 0, &Scalar::i() * &Scalar::q(), Scalar::one()),
    ];
    for hw in cases {
        let v = VermaVector::highest_weight();
        assert_eq!(
            verma_act(&hw, &alias_expand(Alias::W), &v),
            v.scale(&hw.omega())
        );
    }
}

#[test]
fn magical_operators_on_the_highest_weight_vector() {
    let hw = symbolic_hw(3, 0, Scalar::from_int(7));
    let v = VermaVector::highest_weight();
    let mu = Scalar::mu();

    // F_+ v = B-1 v - mu^-1 Y v.
    let fv = magical_apply(&hw, Sign::Plus, MagicalDir::F, &mu, &v).unwrap();
    let mut expected = VermaVector::basis(1, 0);
    expected.add_term(0, 1, -mu.inv());
    assert_eq!(fv, expected);

    // Its B0-weight drops to [mu; -1].
    assert_eq!(
        verma_act(&hw, &gen_el(Generator::B0), &fv),
        fv.scale(&qbracket(&mu, -1))
    );

    // E_+ v = 0 and E_- v = 0.
    assert!(magical_apply(&hw, Sign::Plus, MagicalDir::E, &mu, &v)
        .unwrap()
        .is_zero());
    assert!(magical_apply(&hw, Sign::Minus, MagicalDir::E, &mu, &v)
        .unwrap()
        .is_zero());

    // Mixing two B0-weights is rejected.
    let mixed = v.add(&fv);
    assert_eq!(
        magical_apply(&hw, Sign::Plus, MagicalDir::F, &mu, &mixed),
        Err(VermaError::NotB0Eigenvector)
    );
}

#[test]
fn magical_commutation_on_weight_vectors() {
    let hw = symbolic_hw(2, 0, Scalar::q_pow(3));
    let q = Scalar::q();
    let qinv = Scalar::q_pow(-1);
    // Weight-[mu;0] vectors: the highest weight vector and F_+ F_- v.
    for w in [VermaVector::highest_weight(), f_basis_vector(&hw, 1, 1)] {
        let eta = Scalar::mu();
        let app = |s: Sign, d: MagicalDir, e: &Scalar, v: &VermaVector| {
            verma_act(&hw, &magical_element(s, d, e), v)
        };
        // F_+(q eta) F_-(eta) = F_-(q^-1 eta) F_+(eta)
        let lhs = app(
            Sign::Plus,
            MagicalDir::F,
            &(&q * &eta),
            &app(Sign::Minus, MagicalDir::F, &eta, &w),
        );
        let rhs = app(
            Sign::Minus,
            MagicalDir::F,
            &(&qinv * &eta),
            &app(Sign::Plus, MagicalDir::F, &eta, &w),
        );
        assert_eq!(lhs, rhs);
        // E_+(q eta) F_-(eta) = F_-(q eta) E_+(eta)
        let lhs = app(
            Sign::Plus,
            MagicalDir::E,
            &(&q * &eta),
            &app(Sign::Minus, MagicalDir::F, &eta, &w),
        );
        let rhs = app(
            Sign::Minus,
            MagicalDir::F,
            &(&q * &eta),
            &app(Sign::Plus, MagicalDir::E, &eta, &w),
        );
        assert_eq!(lhs, rhs);
        // F_+(q^-1 eta) E_-(eta) = E_-(q^-1 eta) F_+(eta)
        let lhs = app(
            Sign::Plus,
            MagicalDir::F,
            &(&qinv * &eta),
            &app(Sign::Minus, MagicalDir::E, &eta, &w),
        );
        let rhs = app(
            Sign::Minus,
            MagicalDir::E,
            &(&qinv * &eta),
            &app(Sign::Plus, MagicalDir::F, &eta, &w),
        );
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn weight_table_closed_forms_and_distinctness() {
    let hw = HighestWeight::new(3, 0, Scalar::q_pow(2), Scalar::zero());

    // (0,0) carries the highest weight itself.
    let w00 = weight_of(&hw, 0, 0);
    assert_eq!(w00.dd, Scalar::q_pow(3));
    assert_eq!(w00.d1, Scalar::one());
    assert_eq!(w00.b0, qint(2));
    assert_eq!(w00.z, Scalar::zero());
    assert_eq!(w00.w, Some(hw.omega()));

    // Frozen Z-value at (1,0): q * q^-2 * q^{1-3-1} [2][1] = q^-4 [2].
    let w10 = weight_of(&hw, 1, 0);
    assert_eq!(w10.z, &Scalar::q_pow(-3) + &Scalar::q_pow(-5));

    // Distinctness on a 6x6 block.
    let table = weight_table(&hw, 5, 5).unwrap();
    assert_eq!(table.len(), 36);
    for (i, (_, wi)) in table.iter().enumerate() {
        for (_, wj) in table.iter().skip(i + 1) {
            assert!(
                wi.dd != wj.dd || wi.d1 != wj.d1 || wi.b0 != wj.b0 || wi.z != wj.z
            );
        }
    }

    // An exceptional highest weight is rejected.
    let bad = HighestWeight::new(3, 0, &Scalar::i() * &Scalar::q(), Scalar::zero());
    assert_eq!(weight_table(&bad, 1, 1), Err(VermaError::NotGood));
}

#[test]
fn closed_form_weights_match_the_action_engine() {
    // Symbolic mu, concrete zeta; all four commuting operators.
    let hw = symbolic_hw(3, 1, Scalar::q_pow(2));
    let samples: Vec<(u32, u32)> = vec![(0, 0), (1, 0), (0, 1), (2, 1), (1, 2), (2, 2), (4, 4)];
    assert!(coideal::par::all(samples, |&(a, b)| {
        let v = f_basis_vector(&hw, a, b);
        let wt = weight_of(&hw, a, b);
        verma_act(&hw, &gen_el(Generator::Dd), &v) == v.scale(&wt.dd)
            && verma_act(&hw, &gen_el(Generator::D1), &v) == v.scale(&wt.d1)
            && verma_act(&hw, &gen_el(Generator::B0), &v) == v.scale(&wt.b0)
            && verma_act(&hw, &alias_expand(Alias::Z), &v) == v.scale(&wt.z)
            && verma_act(&hw, &alias_expand(Alias::W), &v) == v.scale(&wt.w.unwrap())
    }));
}

#[test]
fn raising_scalars_match_the_action_engine() {
    let hw = symbolic_hw(2, 0, Scalar::q_pow(3));
    let mu = Scalar::mu();
    for (a, b) in [(1u32, 0u32), (0, 1), (1, 1), (2, 1), (1, 2), (2, 2)] {
        let v = f_basis_vector(&hw, a, b);
        let eta = &mu * &Scalar::q_pow(b as i64 - a as i64);
        let (cp, cm) = epm_scalar(&hw, a as i64, b as i64);
        let ep = verma_act(&hw, &magical_element(Sign::Plus, MagicalDir::E, &eta), &v);
        let em = verma_act(&hw, &magical_element(Sign::Minus, MagicalDir::E, &eta), &v);
        let expect_p = if a == 0 {
            VermaVector::zero()
        } else {
            f_basis_vector(&hw, a - 1, b).scale(&(&cp * &qint(a as i64)))
        };
        let expect_m = if b == 0 {
            VermaVector::zero()
        } else {
            f_basis_vector(&hw, a, b - 1).scale(&(&cm * &qint(b as i64)))
        };
        assert_eq!(ep, expect_p, "E+ mismatch at ({a},{b})");
        assert_eq!(em, expect_m, "E- mismatch at ({a},{b})");
    }
}

#[test]
fn raising_scalar_independence_and_vanishing() {
    let kappa = 3;
    // Independence: the E+ scalar does not depend on b, the E- scalar not
    // on a.
    let hw = symbolic_hw(kappa, 0, Scalar::q_pow(3));
    assert_eq!(epm_scalar(&hw, 2, 0).0, epm_scalar(&hw, 2, 3).0);
    assert_eq!(epm_scalar(&hw, 0, 1).1, epm_scalar(&hw, 3, 1).1);

    // Dominance: zeta = [mu; kappa-2i] - q^-kappa [mu;0] makes the E+
    // scalar vanish first at a = i+1 and the E- scalar at b = kappa-i+1.
    let mu = Scalar::mu();
    for i in 0..=kappa {
        let zeta = &qbracket(&mu, kappa - 2 * i) - &(&Scalar::q_pow(-kappa) * &qbracket(&mu, 0));
        let hw = symbolic_hw(kappa, 0, zeta);
        for a in 1..=i {
            assert!(!epm_scalar(&hw, a, 0).0.is_zero(), "i={i} a={a}");
        }
        assert!(epm_scalar(&hw, i + 1, 0).0.is_zero(), "i={i}");
        for b in 1..=(kappa - i) {
            assert!(!epm_scalar(&hw, 0, b).1.is_zero(), "i={i} b={b}");
        }
        assert!(epm_scalar(&hw, 0, kappa - i + 1).1.is_zero(), "i={i}");
    }
}

#[test]
fn zw_commutator_octet_on_weight_vectors() {
    let hw = symbolic_hw(3, 1, Scalar::q());
    let kappa = hw.kappa();
    let q = Scalar::q();
    let qinv = Scalar::q_pow(-1);
    let two = qint(2);
    let z = alias_expand(Alias::Z);
    let w_el = alias_expand(Alias::W);

    let samples: Vec<(u32, u32)> = vec![(0, 0), (1, 0), (0, 1), (2, 1)];
    assert!(coideal::par::all(samples, |&(a, b)| {
        let v = f_basis_vector(&hw, a, b);
        let eta = &Scalar::mu() * &Scalar::q_pow(b as i64 - a as i64);
        // Khat-weight exponent of v.
        let kw = kappa - 2 * (a as i64 + b as i64);
        let act = |el: &Element, v: &VermaVector| verma_act(&hw, el, v);
        let mag = |s: Sign, d: MagicalDir| magical_element(s, d, &eta);

        let comm = |top: &Element, s: Sign, d: MagicalDir, p: &Scalar| {
            let m = mag(s, d);
            act(top, &act(&m, &v)).sub(&act(&m, &act(top, &v)).scale(p))
        };

        // [Z, F_+]_q v = eta^-1 q [2] q^-(kw-2) F_+ v, and its three
        // companions with the displayed signs and powers.
        let fpv = act(&mag(Sign::Plus, MagicalDir::F), &v);
        let fmv = act(&mag(Sign::Minus, MagicalDir::F), &v);
        let epv = act(&mag(Sign::Plus, MagicalDir::E), &v);
        let emv = act(&mag(Sign::Minus, MagicalDir::E), &v);

        comm(&z, Sign::Plus, MagicalDir::F, &q)
            == fpv.scale(&(&(&(&eta.inv() * &q) * &two) * &Scalar::q_pow(-kw)))
            && comm(&z, Sign::Minus, MagicalDir::F, &q)
                == fmv.scale(&-&(&(&(&eta * &q) * &two) * &Scalar::q_pow(-kw)))
            && comm(&z, Sign::Plus, MagicalDir::E, &qinv)
                == epv.scale(&-&(&(&(&eta.inv() * &qinv) * &two) * &Scalar::q_pow(-(kw + 2))))
            && comm(&z, Sign::Minus, MagicalDir::E, &qinv)
                == emv.scale(&(&(&(&eta * &qinv) * &two) * &Scalar::q_pow(-(kw + 2))))
            // The W quartet.
            && comm(&w_el, Sign::Plus, MagicalDir::F, &qinv)
                == fpv.scale(&(&(&(&eta * &qinv) * &two) * &Scalar::q_pow(kw - 2)))
            && comm(&w_el, Sign::Minus, MagicalDir::F, &qinv)
                == fmv.scale(&-&(&(&(&eta.inv() * &qinv) * &two) * &Scalar::q_pow(kw - 2)))
            && comm(&w_el, Sign::Plus, MagicalDir::E, &q)
                == epv.scale(&-&(&(&(&eta * &q) * &two) * &Scalar::q_pow(kw)))
            && comm(&w_el, Sign::Minus, MagicalDir::E, &q)
                == emv.scale(&(&(&(&eta.inv() * &q) * &two) * &Scalar::q_pow(kw)))
    }));
}

#[test]
fn lowering_in_terms_of_f_operators() {
    // B-1 and B1 on the weight vector F_+^a F_-^b v decompose through the
    // magical operators; this is the formula the quotient matrices use.
    let hw = symbolic_hw(2, 0, Scalar::q_pow(3));
    let mu = Scalar::mu();
    for (a, b) in [(0u32, 0u32), (1, 0), (0, 1), (1, 1), (2, 2)] {
        let v = f_basis_vector(&hw, a, b);
        let eta = &mu * &Scalar::q_pow(b as i64 - a as i64);
        let denom = (&eta + &eta.inv()).inv();

        let lhs = verma_act(&hw, &gen_el(Generator::Bminus1), &v);
        let rhs = f_basis_vector(&hw, a + 1, b)
            .scale(&(&eta * &denom))
            .add(&f_basis_vector(&hw, a, b + 1).scale(&(&eta.inv() * &denom)));
        assert_eq!(lhs, rhs, "B-1 at ({a},{b})");

        let (cp, cm) = epm_scalar(&hw, a as i64, b as i64);
        let lhs = verma_act(&hw, &gen_el(Generator::B1), &v);
        let mut rhs = VermaVector::zero();
        if a > 0 {
            rhs = rhs.add(
                &f_basis_vector(&hw, a - 1, b)
                    .scale(&(&(&eta.inv() * &denom) * &(&cp * &qint(a as i64)))),
            );
        }
        if b > 0 {
            rhs = rhs.add(
                &f_basis_vector(&hw, a, b - 1)
                    .scale(&(&(&eta * &denom) * &(&cm * &qint(b as i64)))),
            );
        }
        assert_eq!(lhs, rhs, "B1 at ({a},{b})");
    }
}
