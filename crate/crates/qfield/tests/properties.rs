//! Property-based checks: field axioms under cross-multiplication equality,
//! and the bracket identity used throughout the weight-module formulas.

use proptest::prelude::*;
use qfield::{qbracket, qint, q_minus_qinv, LaurentPoly, GaussianRational, Scalar};

/// Strategy for a small sparse Laurent polynomial in q and mu.
fn small_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-9i64..10, -4i64..=4, -2i64..=2), 0..4).prop_map(|terms| {
        let mut p = LaurentPoly::zero();
        for (c, qe, me) in terms {
            p += &LaurentPoly::monomial(GaussianRational::from_int(c), qe, me);
        }
        p
    })
}

fn small_scalar() -> impl Strategy<Value = Scalar> {
    (small_poly(), small_poly())
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| Scalar::ratio(n, d))
}

proptest! {
    #[test]
    fn addition_commutes(a in small_scalar(), b in small_scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn multiplication_commutes(a in small_scalar(), b in small_scalar()) {
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn addition_associates(a in small_scalar(), b in small_scalar(), c in small_scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    }

    #[test]
    fn multiplication_associates(a in small_scalar(), b in small_scalar(), c in small_scalar()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn distributivity_under_cross_mult_equality(
        a in small_scalar(), b in small_scalar(), c in small_scalar()
    ) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
    }

    #[test]
    fn additive_inverse(a in small_scalar()) {
        prop_assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn multiplicative_inverse(a in small_scalar()) {
        if let Some(inv) = a.try_inv() {
            prop_assert!((&a * &inv).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn bar_is_a_ring_involution(a in small_scalar(), b in small_scalar()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
    }
}

/// The bracket identity behind the Verma dominance criterion:
/// `[mu; k-2i] - q^-k [mu; 0] = mu q^-i [k-i] - mu^-1 q^(i-k) [i]`,
/// checked exactly on a grid of concrete unit values of mu.
#[test]
fn bracket_shift_identity_on_unit_grid() {
    let mut mus = Vec::new();
    for m in -6i64..=6 {
        mus.push(Scalar::q_pow(m));
        mus.push(&Scalar::i() * &Scalar::q_pow(m));
    }
    for mu in &mus {
        let mu_inv = mu.inv();
        for k in -6i64..=6 {
            for i in -6i64..=6 {
                let lhs = &qbracket(mu, k - 2 * i) - &(&Scalar::q_pow(-k) * &qbracket(mu, 0));
                let rhs = &(&(mu * &Scalar::q_pow(-i)) * &qint(k - i))
                    - &(&(&mu_inv * &Scalar::q_pow(i - k)) * &qint(i));
                assert_eq!(lhs, rhs, "mu={mu} k={k} i={i}");
            }
        }
    }
}

/// The same identity with mu left symbolic.
#[test]
fn bracket_shift_identity_symbolic() {
    let mu = Scalar::mu();
    let mu_inv = mu.inv();
    for k in -6i64..=6 {
        for i in -6i64..=6 {
            let lhs = &qbracket(&mu, k - 2 * i) - &(&Scalar::q_pow(-k) * &qbracket(&mu, 0));
            let rhs = &(&(&mu * &Scalar::q_pow(-i)) * &qint(k - i))
                - &(&(&mu_inv * &Scalar::q_pow(i - k)) * &qint(i));
            assert_eq!(lhs, rhs, "k={k} i={i}");
        }
    }
}

#[test]
fn qint_product_formula() {
    // [m][n+1] - [m+1][n] = [m-n], a standard consequence of the definitions,
    // exercised here to stress exact division by (q - q^-1).
    for m in -5i64..=5 {
        for n in -5i64..=5 {
            let lhs = &(&qint(m) * &qint(n + 1)) - &(&qint(m + 1) * &qint(n));
            assert_eq!(lhs, qint(m - n), "m={m} n={n}");
        }
    }
    // and [n] = (q^n - q^-n)/(q - q^-1) literally.
    for n in -6i64..=6 {
        let direct = &(&Scalar::q_pow(n) - &Scalar::q_pow(-n)) / &q_minus_qinv();
        assert_eq!(direct, qint(n));
    }
}
