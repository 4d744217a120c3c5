//! Exact coefficient arithmetic for quantum-algebra computations.
//!
//! The ground field is built in three layers:
//! - [`GaussianRational`]: exact rationals extended by a square root of -1,
//! - [`LaurentPoly`]: sparse Laurent polynomials in `q` and an optional
//!   central indeterminate `mu` over the Gaussian rationals,
//! - [`Scalar`]: the fraction field of those polynomials, with lazily
//!   unreduced fractions and cross-multiplication equality.
//!
//! On top sit the quantum-integer idioms: [`qint`] for `[n]`, [`qbracket`]
//! for `[mu;n]`, and the two `alpha` variants.

mod gaussian;
mod laurent;
mod scalar;

pub use gaussian::GaussianRational;
pub use laurent::{Exp, LaurentPoly};
pub use scalar::Scalar;

/// The quantum integer `[n] = (q^n - q^-n)/(q - q^-1)`, expanded exactly to
/// the Laurent polynomial `q^(n-1) + q^(n-3) + ... + q^(1-n)`.
pub fn qint(n: i64) -> Scalar {
    Scalar::from_poly(qint_poly(n))
}

/// [`qint`] as a plain Laurent polynomial.
pub fn qint_poly(n: i64) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    let sign = if n >= 0 {
        GaussianRational::one()
    } else {
        -GaussianRational::one()
    };
    let m = n.unsigned_abs() as i64;
    let mut e = m - 1;
    while e >= 1 - m {
        out += &LaurentPoly::monomial(sign.clone(), e, 0);
        e -= 2;
    }
    out
}

/// The two-parameter bracket `[mu;n] = (q - q^-1)^-1 (q^n mu - q^-n mu^-1)`.
/// Panics when `mu` is not invertible.
pub fn qbracket(mu: &Scalar, n: i64) -> Scalar {
    let mu_inv = mu.try_inv().expect("qbracket needs invertible mu");
    let num = &(&Scalar::q_pow(n) * mu) - &(&Scalar::q_pow(-n) * &mu_inv);
    &num / &q_minus_qinv()
}

/// `q^n + q^-n`, the variant used in Clebsch-Gordan coefficients.
pub fn alpha_plus(n: i64) -> Scalar {
    &Scalar::q_pow(n) + &Scalar::q_pow(-n)
}

/// `q^n - q^-n`, so that `[n] = alpha_minus(n)/alpha_minus(1)`.
pub fn alpha_minus(n: i64) -> Scalar {
    &Scalar::q_pow(n) - &Scalar::q_pow(-n)
}

/// The ubiquitous denominator `q - q^-1`.
pub fn q_minus_qinv() -> Scalar {
    alpha_minus(1)
}
