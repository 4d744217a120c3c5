//! Free-word elements of the algebra: finite linear combinations of words in
//! the seven core generators, before any normal ordering.

use qfield::{qint, q_minus_qinv, Scalar};
use std::collections::BTreeMap;
use std::fmt;

/// The core generator set. The Cartan-like generators carry explicit
/// inverses; everything else (X, Y, Z, W, Khat) is an alias that expands to
/// words in these.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Generator {
    Bminus1,
    B0,
    B1,
    /// D-hat-diamond
    Dd,
    DdInv,
    /// D-hat-one
    D1,
    D1Inv,
}

impl Generator {
    pub const ALL: [Generator; 7] = [
        Generator::Bminus1,
        Generator::B0,
        Generator::B1,
        Generator::Dd,
        Generator::DdInv,
        Generator::D1,
        Generator::D1Inv,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Generator::Bminus1 => "B-1",
            Generator::B0 => "B0",
            Generator::B1 => "B1",
            Generator::Dd => "Dd",
            Generator::DdInv => "Dd^-1",
            Generator::D1 => "D1",
            Generator::D1Inv => "D1^-1",
        }
    }

    /// The involution on generators: B_i -> B_{-i}, D_j -> D_j^{-1}.
    pub fn tau(self) -> Generator {
        match self {
            Generator::Bminus1 => Generator::B1,
            Generator::B0 => Generator::B0,
            Generator::B1 => Generator::Bminus1,
            Generator::Dd => Generator::DdInv,
            Generator::DdInv => Generator::Dd,
            Generator::D1 => Generator::D1Inv,
            Generator::D1Inv => Generator::D1,
        }
    }
}

/// Names of the derived elements that expand to words in core generators.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Alias {
    X,
    Y,
    Z,
    W,
    Khat,
    KhatInv,
}

/// A word in the core generators.
pub type Word = Vec<Generator>;

/// A finite linear combination of words over [`Scalar`], the working
/// representation of an arbitrary algebra expression.
#[derive(Clone, Debug, Default)]
pub struct Element {
    terms: BTreeMap<Word, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn one() -> Self {
        Element::from_word(Vec::new())
    }

    pub fn gen(g: Generator) -> Self {
        Element::from_word(vec![g])
    }

    pub fn from_word(w: Word) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, Scalar::one());
        Element { terms }
    }

    pub fn scalar(s: Scalar) -> Self {
        Element::one().scale(&s)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(existing) => {
                *existing += &c;
                if existing.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Element {
        Element::zero().sub(self)
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        let mut out = Element::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * s);
        }
        out
    }

    /// Concatenation product of words, bilinearly extended.
    pub fn mul(&self, other: &Element) -> Element {
        let mut out = Element::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                out.add_term(w, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Element {
        let mut out = Element::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// The p-commutator `[a, b]_p = a*b - p*b*a`.
    pub fn comm(&self, other: &Element, p: &Scalar) -> Element {
        self.mul(other).sub(&other.mul(self).scale(p))
    }

    /// Plain commutator `[a, b] = a*b - b*a`.
    pub fn commutator(&self, other: &Element) -> Element {
        self.comm(other, &Scalar::one())
    }

    /// The algebra involution: applies [`Generator::tau`] letterwise, keeping
    /// word order and coefficients (an algebra map, not an anti-map).
    pub fn tau(&self) -> Element {
        let mut out = Element::zero();
        for (w, c) in &self.terms {
            out.add_term(w.iter().map(|g| g.tau()).collect(), c.clone());
        }
        out
    }
}

/// Expands a derived element to a word combination in the core generators:
/// `X = [B0,B1]_{q^-1}`, `Y = [B0,B-1]_{q^-1}`, `Z = [B1,Y]_{q^-1}`,
/// `W = [B-1,X]_{q^-1}`, `Khat = Dd*D1^-1`.
pub fn alias_expand(name: Alias) -> Element {
    let qinv = Scalar::q_pow(-1);
    let b0 = Element::gen(Generator::B0);
    let b1 = Element::gen(Generator::B1);
    let bm1 = Element::gen(Generator::Bminus1);
    match name {
        Alias::X => b0.comm(&b1, &qinv),
        Alias::Y => b0.comm(&bm1, &qinv),
        Alias::Z => b1.comm(&alias_expand(Alias::Y), &qinv),
        Alias::W => bm1.comm(&alias_expand(Alias::X), &qinv),
        Alias::Khat => Element::from_word(vec![Generator::Dd, Generator::D1Inv]),
        Alias::KhatInv => Element::from_word(vec![Generator::DdInv, Generator::D1]),
    }
}

/// `[Khat; 0] = (Khat - Khat^-1)/(q - q^-1)`, a recurring right-hand side.
pub fn khat_bracket0() -> Element {
    alias_expand(Alias::Khat)
        .sub(&alias_expand(Alias::KhatInv))
        .scale(&q_minus_qinv().inv())
}

/// The defining relations of the presentation, each as an element whose
/// normal form must vanish, labeled for reporting.
pub fn defining_relations() -> Vec<(String, Element)> {
    let b0 = Element::gen(Generator::B0);
    let b1 = Element::gen(Generator::B1);
    let bm1 = Element::gen(Generator::Bminus1);
    let dd = Element::gen(Generator::Dd);
    let ddinv = Element::gen(Generator::DdInv);
    let d1 = Element::gen(Generator::D1);
    let d1inv = Element::gen(Generator::D1Inv);
    let one = Element::one();
    let q = Scalar::q();
    let qinv = Scalar::q_pow(-1);

    let mut rels: Vec<(String, Element)> = Vec::new();
    // Inverse pairs.
    rels.push(("Dd*Dd^-1 = 1".into(), dd.mul(&ddinv).sub(&one)));
    rels.push(("Dd^-1*Dd = 1".into(), ddinv.mul(&dd).sub(&one)));
    rels.push(("D1*D1^-1 = 1".into(), d1.mul(&d1inv).sub(&one)));
    rels.push(("D1^-1*D1 = 1".into(), d1inv.mul(&d1).sub(&one)));
    // The Cartan-like generators commute with each other and with B0.
    rels.push(("[Dd, D1] = 0".into(), dd.commutator(&d1)));
    rels.push(("[B0, Dd] = 0".into(), b0.commutator(&dd)));
    rels.push(("[B0, D1] = 0".into(), b0.commutator(&d1)));
    // D-weight relations.
    rels.push(("Dd*B1 = q*B1*Dd".into(), dd.comm(&b1, &q)));
    rels.push(("Dd*B-1 = q^-1*B-1*Dd".into(), dd.comm(&bm1, &qinv)));
    rels.push(("D1*B1 = q^-1*B1*D1".into(), d1.comm(&b1, &qinv)));
    rels.push(("D1*B-1 = q*B-1*D1".into(), d1.comm(&bm1, &q)));
    // The sl2-like commutator.
    rels.push((
        "[B1, B-1] = [Khat; 0]".into(),
        b1.commutator(&bm1).sub(&khat_bracket0()),
    ));
    // Quantum Serre relations; the B0-leading pair is inhomogeneous.
    let two = qint(2);
    for (bpm, tag) in [(&b1, "B1"), (&bm1, "B-1")] {
        let lhs = b0
            .pow(2)
            .mul(bpm)
            .sub(&b0.mul(bpm).mul(&b0).scale(&two))
            .add(&bpm.mul(&b0.pow(2)))
            .sub(bpm);
        rels.push((format!("Serre: B0^2*{tag} - [2]*B0*{tag}*B0 + {tag}*B0^2 = {tag}"), lhs));
        let lhs = bpm
            .pow(2)
            .mul(&b0)
            .sub(&bpm.mul(&b0).mul(bpm).scale(&two))
            .add(&b0.mul(&bpm.pow(2)));
        rels.push((format!("Serre: {tag}^2*B0 - [2]*{tag}*B0*{tag} + B0*{tag}^2 = 0"), lhs));
    }
    rels
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let word = if w.is_empty() {
                "1".to_string()
            } else {
                w.iter().map(|g| g.name()).collect::<Vec<_>>().join("*")
            };
            if c.is_one() {
                write!(f, "{word}")?;
            } else if w.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{word}")?;
            }
        }
        Ok(())
    }
}
