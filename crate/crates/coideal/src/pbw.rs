//! PBW normal forms, computed through the faithful representation on the
//! space spanned by the vectors `p_idx`.
//!
//! A PBW monomial is `B-1^f Y^y B1^e X^x B0^b Z^z Dd^kd D1^k1`. Acting with
//! a word on `p_0` and reading off coordinates yields the unique PBW
//! expansion of that word; no rewrite system or confluence argument is
//! involved.

use crate::element::{alias_expand, Alias, Element, Generator, Word};
use qfield::{q_minus_qinv, Scalar};
use std::collections::BTreeMap;
use std::fmt;

/// Exponent tuple of a PBW monomial. The six leading entries are
/// nonnegative; the two Cartan exponents are arbitrary integers.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash, Default)]
pub struct PBWIndex {
    pub f: u32,
    pub y: u32,
    pub e: u32,
    pub x: u32,
    pub b: u32,
    pub z: u32,
    pub kd: i64,
    pub k1: i64,
}

impl PBWIndex {
    pub const ZERO: PBWIndex = PBWIndex {
        f: 0,
        y: 0,
        e: 0,
        x: 0,
        b: 0,
        z: 0,
        kd: 0,
        k1: 0,
    };

    /// Shifted index, or `None` when a shift would push one of the six
    /// nonnegative entries below zero (such terms are dropped, matching the
    /// convention that out-of-range monomials are zero).
    #[allow(clippy::too_many_arguments)]
    fn shifted(
        &self,
        df: i64,
        dy: i64,
        de: i64,
        dx: i64,
        db: i64,
        dz: i64,
        dkd: i64,
        dk1: i64,
    ) -> Option<PBWIndex> {
        let bump = |v: u32, d: i64| -> Option<u32> {
            let n = v as i64 + d;
            (n >= 0).then_some(n as u32)
        };
        Some(PBWIndex {
            f: bump(self.f, df)?,
            y: bump(self.y, dy)?,
            e: bump(self.e, de)?,
            x: bump(self.x, dx)?,
            b: bump(self.b, db)?,
            z: bump(self.z, dz)?,
            kd: self.kd.checked_add(dkd).expect("kd overflow"),
            k1: self.k1.checked_add(dk1).expect("k1 overflow"),
        })
    }

    /// The Z-grading: `deg B-1 = deg Y = -1`, `deg B1 = deg X = +1`, the
    /// rest degree zero.
    pub fn degree(&self) -> i64 {
        self.e as i64 + self.x as i64 - self.f as i64 - self.y as i64
    }

    /// Filtration level `f + y + e + x`.
    pub fn level(&self) -> u32 {
        self.f + self.y + self.e + self.x
    }

    /// Re-expands the monomial to a word combination in core generators
    /// (Y, X, Z expand through their definitions).
    pub fn word_element(&self) -> Element {
        let mut out = Element::gen(Generator::Bminus1).pow(self.f);
        out = out.mul(&alias_expand(Alias::Y).pow(self.y));
        out = out.mul(&Element::gen(Generator::B1).pow(self.e));
        out = out.mul(&alias_expand(Alias::X).pow(self.x));
        out = out.mul(&Element::gen(Generator::B0).pow(self.b));
        out = out.mul(&alias_expand(Alias::Z).pow(self.z));
        let dpow = |g: Generator, ginv: Generator, k: i64| -> Word {
            let gen = if k >= 0 { g } else { ginv };
            vec![gen; k.unsigned_abs() as usize]
        };
        let mut d_word = dpow(Generator::Dd, Generator::DdInv, self.kd);
        d_word.extend(dpow(Generator::D1, Generator::D1Inv, self.k1));
        out.mul(&Element::from_word(d_word))
    }
}

/// Convenience constructor used widely in tests:
/// `m(f, y, e, x, b, z, kd, k1)`.
#[allow(clippy::too_many_arguments)]
pub fn midx(f: u32, y: u32, e: u32, x: u32, b: u32, z: u32, kd: i64, k1: i64) -> PBWIndex {
    PBWIndex { f, y, e, x, b, z, kd, k1 }
}

/// A linear combination of PBW monomials with no zero coefficients; the
/// unique normal form of an algebra element.
#[derive(Clone, Debug, Default)]
pub struct PBWElement {
    terms: BTreeMap<PBWIndex, Scalar>,
}

impl PBWElement {
    pub fn zero() -> Self {
        PBWElement::default()
    }

    pub fn one() -> Self {
        PBWElement::monomial(PBWIndex::ZERO, Scalar::one())
    }

    pub fn monomial(idx: PBWIndex, c: Scalar) -> Self {
        let mut out = PBWElement::zero();
        out.add_term(idx, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PBWIndex, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, idx: &PBWIndex) -> Scalar {
        self.terms.get(idx).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, idx: PBWIndex, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&idx) {
            Some(existing) => {
                *existing += &c;
                if existing.is_zero() {
                    self.terms.remove(&idx);
                }
            }
            None => {
                self.terms.insert(idx, c);
            }
        }
    }

    pub fn add(&self, other: &PBWElement) -> PBWElement {
        let mut out = self.clone();
        for (&i, c) in &other.terms {
            out.add_term(i, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &PBWElement) -> PBWElement {
        let mut out = self.clone();
        for (&i, c) in &other.terms {
            out.add_term(i, -c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> PBWElement {
        let mut out = PBWElement::zero();
        for (&i, c) in &self.terms {
            out.add_term(i, c * s);
        }
        out
    }

    /// True when every monomial has the same Z-degree `d`.
    pub fn is_homogeneous_of(&self, d: i64) -> bool {
        self.terms.keys().all(|i| i.degree() == d)
    }
}

impl PartialEq for PBWElement {
    fn eq(&self, other: &PBWElement) -> bool {
        self.sub(other).is_zero()
    }
}

impl Eq for PBWElement {}

/// `q^n` as a scalar, shorthand for the transcription below.
fn qp(n: i64) -> Scalar {
    Scalar::q_pow(n)
}

/// `[n]` with an i64-converted argument.
fn qi(n: i64) -> Scalar {
    qfield::qint(n)
}

/// The action of a single generator on the basis vector `p_idx`.
///
/// The five displayed action formulas are transcribed summand by summand;
/// the labels `(1)..(8)` on the B1 action refer to the display order of its
/// eight summands. The inverse Cartan generators act by the inverse diagonal
/// scalars.
pub fn p_act(g: Generator, idx: &PBWIndex) -> PBWElement {
    let (f, y, e, x) = (idx.f as i64, idx.y as i64, idx.e as i64, idx.x as i64);
    let mut out = PBWElement::zero();
    let mut put = |target: Option<PBWIndex>, c: Scalar| {
        if let Some(t) = target {
            out.add_term(t, c);
        }
    };
    match g {
        Generator::Bminus1 => {
            put(idx.shifted(1, 0, 0, 0, 0, 0, 0, 0), Scalar::one());
        }
        Generator::Dd => {
            put(idx.shifted(0, 0, 0, 0, 0, 0, 1, 0), qp(e + x - f - y));
        }
        Generator::DdInv => {
            put(idx.shifted(0, 0, 0, 0, 0, 0, -1, 0), qp(f + y - e - x));
        }
        Generator::D1 => {
            put(idx.shifted(0, 0, 0, 0, 0, 0, 0, 1), qp(f + y - e - x));
        }
        Generator::D1Inv => {
            put(idx.shifted(0, 0, 0, 0, 0, 0, 0, -1), qp(e + x - f - y));
        }
        Generator::B0 => {
            put(idx.shifted(0, 0, 0, 0, 1, 0, 0, 0), qp(x + y - e - f));
            put(idx.shifted(1, -1, 0, 0, 0, 0, 0, 0), &qp(y - f - 1) * &qi(y));
            put(idx.shifted(-1, 1, 0, 0, 0, 0, 0, 0), qi(f));
            put(idx.shifted(0, 0, -1, 1, 0, 0, 0, 0), &qp(y - f) * &qi(e));
            put(
                idx.shifted(0, 0, 1, -1, 0, 0, 0, 0),
                &qp(y - f - e + x - 1) * &qi(x),
            );
        }
        Generator::B1 => {
            let denom_inv = q_minus_qinv().inv();
            // (1)
            put(
                idx.shifted(-1, 0, 0, 0, 0, 0, 1, -1),
                &(&qp(1 - 2 * y + 2 * e + 2 * x - f) * &qi(f)) * &denom_inv,
            );
            // (2)
            put(
                idx.shifted(-1, 0, 0, 0, 0, 0, -1, 1),
                -&(&(&qp(f + 2 * y - 2 * e - 2 * x - 1) * &qi(f)) * &denom_inv),
            );
            // (3)
            put(idx.shifted(0, 0, 1, 0, 0, 0, 0, 0), qp(-y));
            // (4)
            put(
                idx.shifted(1, -2, 0, 0, 0, 0, -1, 1),
                -&(&(&qp(2 * y - 2 * e - 2 * x - 3) * &qi(y)) * &qi(y - 1)),
            );
            // (5)
            put(idx.shifted(0, -1, 0, 0, 0, 1, 0, 0), &qp(-x - e) * &qi(y));
            // q^(2y) - 1, shared by the last three summands.
            let q2y_m1 = &qp(2 * y) - &Scalar::one();
            // (6)
            put(
                idx.shifted(0, -1, 1, -1, 0, 0, -1, 1),
                -&(&qp(-3 * e - x - 2)
                    * &(&(&(&q2y_m1 * &qi(y - 1)) * &qi(x)) + &(&(&qi(2) * &qi(y)) * &qi(x)))),
            );
            // (7)
            put(
                idx.shifted(0, -1, -1, 1, 0, 0, -1, 1),
                -&(&(&qp(-2 * e - 2 * x - 1) * &qi(e))
                    * &(&(&qi(2) * &qi(y)) + &(&q2y_m1 * &qi(y - 1)))),
            );
            // (8)
            let qe_m_qme = &qp(e) - &qp(-e);
            put(
                idx.shifted(0, -1, 0, 0, 1, 0, -1, 1),
                &(&(&(&qp(-2 * e - x - 1) * &qe_m_qme) * &qi(2)) * &qi(y))
                    - &(&(&qp(-3 * e - x - 1) * &q2y_m1) * &qi(y - 1)),
            );
        }
    }
    out
}

/// Applies a generator linearly to a whole combination of `p` vectors.
pub fn p_act_element(g: Generator, v: &PBWElement) -> PBWElement {
    let mut out = PBWElement::zero();
    for (idx, c) in v.iter() {
        for (&i2, c2) in p_act(g, idx).iter() {
            out.add_term(i2, c * c2);
        }
    }
    out
}

/// Applies a word to a `p` vector: the rightmost letter acts first.
pub fn word_act(w: &Word, v: &PBWElement) -> PBWElement {
    let mut cur = v.clone();
    for &g in w.iter().rev() {
        cur = p_act_element(g, &cur);
        if cur.is_zero() {
            break;
        }
    }
    cur
}

/// Applies a derived element to a `p` vector as a composite operator,
/// without expanding powers into words first. Linear in `v`, so this agrees
/// with acting by the alias expansion termwise but costs only a handful of
/// generator applications.
pub fn alias_act(a: Alias, v: &PBWElement) -> PBWElement {
    let qinv = Scalar::q_pow(-1);
    let g = p_act_element;
    match a {
        Alias::X => g(Generator::B0, &g(Generator::B1, v))
            .sub(&g(Generator::B1, &g(Generator::B0, v)).scale(&qinv)),
        Alias::Y => g(Generator::B0, &g(Generator::Bminus1, v))
            .sub(&g(Generator::Bminus1, &g(Generator::B0, v)).scale(&qinv)),
        Alias::Z => {
            let yv = alias_act(Alias::Y, v);
            g(Generator::B1, &yv).sub(&alias_act(Alias::Y, &g(Generator::B1, v)).scale(&qinv))
        }
        Alias::W => {
            let xv = alias_act(Alias::X, v);
            g(Generator::Bminus1, &xv)
                .sub(&alias_act(Alias::X, &g(Generator::Bminus1, v)).scale(&qinv))
        }
        Alias::Khat => g(Generator::Dd, &g(Generator::D1Inv, v)),
        Alias::KhatInv => g(Generator::DdInv, &g(Generator::D1, v)),
    }
}

/// Applies the PBW monomial `m_idx`, as an operator, to a `p` vector:
/// factors act right to left, aliases through [`alias_act`].
pub fn pbw_monomial_act(idx: &PBWIndex, v: &PBWElement) -> PBWElement {
    let mut cur = v.clone();
    let d_gen = |k: i64, pos: Generator, neg: Generator| if k >= 0 { pos } else { neg };
    for _ in 0..idx.k1.unsigned_abs() {
        cur = p_act_element(d_gen(idx.k1, Generator::D1, Generator::D1Inv), &cur);
    }
    for _ in 0..idx.kd.unsigned_abs() {
        cur = p_act_element(d_gen(idx.kd, Generator::Dd, Generator::DdInv), &cur);
    }
    for _ in 0..idx.z {
        cur = alias_act(Alias::Z, &cur);
    }
    for _ in 0..idx.b {
        cur = p_act_element(Generator::B0, &cur);
    }
    for _ in 0..idx.x {
        cur = alias_act(Alias::X, &cur);
    }
    for _ in 0..idx.e {
        cur = p_act_element(Generator::B1, &cur);
    }
    for _ in 0..idx.y {
        cur = alias_act(Alias::Y, &cur);
    }
    for _ in 0..idx.f {
        cur = p_act_element(Generator::Bminus1, &cur);
    }
    cur
}

/// Applies an arbitrary element to a `p` vector.
pub fn element_act(el: &Element, v: &PBWElement) -> PBWElement {
    let mut out = PBWElement::zero();
    for (w, c) in el.iter() {
        let acted = word_act(w, v);
        for (&i, c2) in acted.iter() {
            out.add_term(i, c * c2);
        }
    }
    out
}

/// The PBW normal form of an arbitrary element: act on `p_0` and read off
/// coordinates. Faithfulness of the representation makes this the unique
/// expansion in PBW monomials.
pub fn normal_form(el: &Element) -> PBWElement {
    element_act(el, &PBWElement::one())
}

/// True iff the element is zero in the algebra.
pub fn check_identity(el: &Element) -> bool {
    normal_form(el).is_zero()
}

/// Product in normal form. Each monomial of `a` acts as an operator on the
/// `p` vectors of `b` (using that `m_idx` applied to `p_0` is `p_idx`).
pub fn multiply(a: &PBWElement, b: &PBWElement) -> PBWElement {
    let mut out = PBWElement::zero();
    for (ia, ca) in a.iter() {
        let acted = pbw_monomial_act(ia, b);
        for (&i, c) in acted.iter() {
            out.add_term(i, c * ca);
        }
    }
    out
}

/// Normal form of the involution image of an element.
pub fn tau_normal_form(el: &Element) -> PBWElement {
    normal_form(&el.tau())
}

impl fmt::Display for PBWIndex {
    /// Prints as the monomial word, e.g. `B-1^2*Y*Z*Dd^-1`; the empty
    /// monomial prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        let mut push = |name: &str, p: i64| {
            if p == 1 {
                parts.push(name.to_string());
            } else if p != 0 {
                parts.push(format!("{name}^{p}"));
            }
        };
        push("B-1", self.f as i64);
        push("Y", self.y as i64);
        push("B1", self.e as i64);
        push("X", self.x as i64);
        push("B0", self.b as i64);
        push("Z", self.z as i64);
        push("Dd", self.kd);
        push("D1", self.k1);
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

impl fmt::Display for PBWElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (idx, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if idx == &PBWIndex::ZERO {
                write!(f, "({c})")?;
            } else if c.is_one() {
                write!(f, "{idx}")?;
            } else {
                write!(f, "({c})*{idx}")?;
            }
        }
        Ok(())
    }
}
