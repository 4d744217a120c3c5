//! Sparse Laurent polynomials in `q` and an optional second central
//! indeterminate `mu`, with Gaussian-rational coefficients.
//!
//! Exponents are machine-width signed integers; any arithmetic that would
//! overflow an exponent panics rather than wrapping.

use crate::gaussian::GaussianRational;
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Exponent pair: power of `q`, power of `mu`.
pub type Exp = (i64, i64);

fn exp_add(a: Exp, b: Exp) -> Exp {
    (
        a.0.checked_add(b.0).expect("q exponent overflow"),
        a.1.checked_add(b.1).expect("mu exponent overflow"),
    )
}

fn exp_sub(a: Exp, b: Exp) -> Exp {
    (
        a.0.checked_sub(b.0).expect("q exponent overflow"),
        a.1.checked_sub(b.1).expect("mu exponent overflow"),
    )
}

/// A sparse Laurent polynomial; no zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Exp, GaussianRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(GaussianRational::one(), 0, 0)
    }

    pub fn constant(c: GaussianRational) -> Self {
        LaurentPoly::monomial(c, 0, 0)
    }

    /// The monomial `c * q^qe * mu^me`.
    pub fn monomial(c: GaussianRational, qe: i64, me: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((qe, me), c);
        }
        LaurentPoly { terms }
    }

    pub fn q_pow(n: i64) -> Self {
        LaurentPoly::monomial(GaussianRational::one(), n, 0)
    }

    pub fn mu_pow(n: i64) -> Self {
        LaurentPoly::monomial(GaussianRational::one(), 0, n)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&(0, 0))
                .map(GaussianRational::is_one)
                .unwrap_or(false)
    }

    /// True when the polynomial is a single term.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// True when no `mu` power appears.
    pub fn is_mu_free(&self) -> bool {
        self.terms.keys().all(|&(_, m)| m == 0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Exp, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: Exp) -> GaussianRational {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    fn insert(&mut self, e: Exp, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(existing) => {
                *existing += &c;
                if existing.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    /// Substitute `q -> q^-1`, leaving `mu` fixed. An involutive ring map.
    pub fn bar(&self) -> Self {
        let mut out = LaurentPoly::zero();
        for (&(a, b), c) in &self.terms {
            out.insert((a.checked_neg().expect("q exponent overflow"), b), c.clone());
        }
        out
    }

    /// Substitute `mu -> c * q^qe`. Requires `c` nonzero when negative `mu`
    /// powers are present.
    pub fn substitute_mu(&self, c: &GaussianRational, qe: i64) -> Self {
        let mut out = LaurentPoly::zero();
        let cinv = if self.terms.keys().any(|&(_, m)| m < 0) {
            Some(c.inv())
        } else {
            None
        };
        for (&(a, m), coeff) in &self.terms {
            let mut scaled = coeff.clone();
            if m >= 0 {
                for _ in 0..m {
                    scaled *= c;
                }
            } else {
                let ci = cinv.as_ref().unwrap();
                for _ in 0..(-m) {
                    scaled *= ci;
                }
            }
            let shift = m.checked_mul(qe).expect("q exponent overflow");
            out.insert((a.checked_add(shift).expect("q exponent overflow"), 0), scaled);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = LaurentPoly::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Componentwise minimum exponent over all terms. Zero polynomial gives (0,0).
    pub fn min_exp(&self) -> Exp {
        let mut it = self.terms.keys();
        let Some(&first) = it.next() else { return (0, 0) };
        it.fold(first, |acc, &e| (acc.0.min(e.0), acc.1.min(e.1)))
    }

    /// Multiply by the monomial `q^qe * mu^me`.
    pub fn mul_monomial(&self, c: &GaussianRational, qe: i64, me: i64) -> Self {
        let mut out = LaurentPoly::zero();
        for (&e, coeff) in &self.terms {
            out.insert(exp_add(e, (qe, me)), coeff * c);
        }
        out
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        self.mul_monomial(c, 0, 0)
    }

    /// Leading term in lexicographic (q, mu) order. Panics on zero.
    fn leading(&self) -> (Exp, &GaussianRational) {
        let (&e, c) = self.terms.iter().next_back().expect("leading term of zero");
        (e, c)
    }

    /// Exact division: returns `self / div` when the division leaves no
    /// remainder, `None` otherwise. Works for arbitrary Laurent polynomials
    /// by factoring out monomial content first.
    pub fn try_exact_div(&self, div: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!div.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let smin = self.min_exp();
        let dmin = div.min_exp();
        // Shift both operands into plain-polynomial range so that
        // leading-term long division in lex order terminates.
        let f = self.mul_monomial(&GaussianRational::one(), -smin.0, -smin.1);
        let g = div.mul_monomial(&GaussianRational::one(), -dmin.0, -dmin.1);
        let (glead, gc) = {
            let (e, c) = g.leading();
            (e, c.clone())
        };
        let gcinv = gc.inv();
        let mut rem = f;
        let mut quot = LaurentPoly::zero();
        while !rem.is_zero() {
            let (rlead, rc) = {
                let (e, c) = rem.leading();
                (e, c.clone())
            };
            if rlead.0 < glead.0 || rlead.1 < glead.1 {
                return None;
            }
            let t_exp = exp_sub(rlead, glead);
            let t_c = &rc * &gcinv;
            quot.insert(t_exp, t_c.clone());
            rem = &rem - &g.mul_monomial(&t_c, t_exp.0, t_exp.1);
        }
        // Undo the content shifts.
        Some(quot.mul_monomial(
            &GaussianRational::one(),
            smin.0.checked_sub(dmin.0).expect("q exponent overflow"),
            smin.1.checked_sub(dmin.1).expect("mu exponent overflow"),
        ))
    }

    /// Monic univariate GCD in `q` for two mu-free polynomials, up to a
    /// monomial factor. Both inputs must be nonzero and mu-free.
    pub fn gcd_q(&self, other: &LaurentPoly) -> LaurentPoly {
        assert!(self.is_mu_free() && other.is_mu_free(), "gcd_q needs mu-free input");
        assert!(!self.is_zero() && !other.is_zero(), "gcd_q of zero");
        let mut a = self.mul_monomial(&GaussianRational::one(), -self.min_exp().0, 0);
        let mut b = other.mul_monomial(&GaussianRational::one(), -other.min_exp().0, 0);
        while !b.is_zero() {
            let r = q_rem(&a, &b);
            a = b;
            b = r;
        }
        // Make the result monic for a canonical representative.
        let lc = a.leading().1.clone();
        a.scale(&lc.inv())
    }
}

/// Remainder of univariate long division in `q` (mu-free, plain-polynomial
/// exponent range).
fn q_rem(f: &LaurentPoly, g: &LaurentPoly) -> LaurentPoly {
    let (glead, gc) = {
        let (e, c) = g.leading();
        (e.0, c.clone())
    };
    let gcinv = gc.inv();
    let mut rem = f.clone();
    while !rem.is_zero() {
        let (rlead, rc) = {
            let (e, c) = rem.leading();
            (e.0, c.clone())
        };
        if rlead < glead {
            break;
        }
        let t_c = &rc * &gcinv;
        rem = &rem - &g.mul_monomial(&t_c, rlead - glead, 0);
    }
    rem
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.insert(e, c.clone());
        }
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.insert(e, c.clone());
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.insert(e, -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e, c) in &self.terms {
            out.insert(e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                out.insert(exp_add(ea, eb), ca * cb);
            }
        }
        out
    }
}

fn fmt_monomial(e: Exp, out: &mut String) {
    let (qe, me) = e;
    if qe != 0 {
        out.push('q');
        if qe != 1 {
            out.push('^');
            out.push_str(&qe.to_string());
        }
    }
    if me != 0 {
        if qe != 0 {
            out.push('*');
        }
        out.push_str("mu");
        if me != 1 {
            out.push('^');
            out.push_str(&me.to_string());
        }
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical rendering: terms sorted by descending (q, mu) exponent,
    /// imaginary unit written as `i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in self.terms.iter().rev() {
            // Extract a sign when the coefficient is purely real or purely
            // imaginary; mixed complex coefficients print in parentheses.
            let (neg, mag) = if c.im.is_zero() && c.re.is_negative() {
                (true, -c.clone())
            } else if c.re.is_zero() && c.im.is_negative() {
                (true, -c.clone())
            } else {
                (false, c.clone())
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut mono = String::new();
            fmt_monomial(e, &mut mono);
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}
