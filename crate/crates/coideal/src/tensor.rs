//! Tensor powers of the natural 4-dimensional module: the coideal action
//! through iterated comultiplication, the type-B Hecke algebra action with
//! its Jucys-Murphy elements, the inductively built weight vectors, and
//! the resulting decomposition and Clebsch-Gordan data.

use crate::element::{alias_expand, Alias, Element, Generator, Word};
use crate::matrix::Matrix;
use crate::par;
use crate::verma::{fd_quotient, HighestWeight, IrreducibleModule, Sign, VermaError};
use qfield::{qint, Scalar};
use std::collections::BTreeMap;
use std::fmt;

/// Errors for the tensor layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TensorError {
    /// A Hecke letter `H_i` needs `i < d` to act on `V^(x)d`.
    LetterOutOfRange { letter: usize, d: usize },
    /// A Jucys-Murphy index needs `1 <= i <= d`.
    JmIndexOutOfRange { index: usize, d: usize },
    /// The two rows of a partition must be weakly decreasing.
    NotTwoRow,
    /// The vector is not a joint eigenvector; names the first operator
    /// that fails.
    NotEigenvector(&'static str),
}

impl fmt::Display for TensorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TensorError::LetterOutOfRange { letter, d } => {
                write!(f, "Hecke letter H{letter} does not act on V^(x){d}")
            }
            TensorError::JmIndexOutOfRange { index, d } => {
                write!(f, "Jucys-Murphy index {index} is outside 1..={d}")
            }
            TensorError::NotTwoRow => write!(f, "rows must be weakly decreasing and nonnegative"),
            TensorError::NotEigenvector(op) => {
                write!(f, "vector is not an eigenvector of {op}")
            }
        }
    }
}

impl std::error::Error for TensorError {}

/// Basis indices of the natural module, in the linear order of the
/// underlying graph: `-1 -> -d -> d -> 1` (`d` prints the diamond vertex).
pub const BASIS: [u8; 4] = [0, 1, 2, 3];

/// The printed name of a single-factor basis index.
pub fn basis_name(j: u8) -> &'static str {
    ["-1", "-d", "d", "1"][j as usize]
}

/// A vector in `V^(x)d` as a finite combination of basis words.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorVector {
    d: usize,
    terms: BTreeMap<Vec<u8>, Scalar>,
}

impl TensorVector {
    pub fn zero(d: usize) -> Self {
        TensorVector { d, terms: BTreeMap::new() }
    }

    /// The empty tensor product: the unit of the ground field in `V^(x)0`.
    pub fn unit() -> Self {
        TensorVector::basis(&[])
    }

    pub fn basis(word: &[u8]) -> Self {
        assert!(word.iter().all(|&j| j < 4), "basis index out of range");
        let mut v = TensorVector::zero(word.len());
        v.add_term(word.to_vec(), Scalar::one());
        v
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u8>, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &[u8]) -> Scalar {
        self.terms.get(word).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, word: Vec<u8>, c: Scalar) {
        debug_assert_eq!(word.len(), self.d);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(word.clone()).or_insert_with(Scalar::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&word);
        }
    }

    pub fn add(&self, other: &TensorVector) -> TensorVector {
        assert_eq!(self.d, other.d, "tensor arity mismatch");
        let mut out = self.clone();
        for (w, c) in other.iter() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TensorVector) -> TensorVector {
        assert_eq!(self.d, other.d, "tensor arity mismatch");
        let mut out = self.clone();
        for (w, c) in other.iter() {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> TensorVector {
        let mut out = TensorVector::zero(self.d);
        for (w, c) in self.iter() {
            out.add_term(w.clone(), c * s);
        }
        out
    }

    /// The tensor product, concatenating basis words.
    pub fn tensor(&self, other: &TensorVector) -> TensorVector {
        let mut out = TensorVector::zero(self.d + other.d);
        for (w, c) in self.iter() {
            for (u, b) in other.iter() {
                let mut word = w.clone();
                word.extend_from_slice(u);
                out.add_term(word, c * b);
            }
        }
        out
    }

    /// If `image` is a scalar multiple of this vector, returns the scalar.
    pub fn eigenvalue_of(&self, image: &TensorVector) -> Option<Scalar> {
        let (w, c) = self.terms.iter().next()?;
        let lambda = &image.coeff(w) / c;
        (image == &self.scale(&lambda)).then_some(lambda)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .iter()
            .map(|(w, c)| {
                let word: Vec<&str> = w.iter().map(|&j| basis_name(j)).collect();
                serde_json::json!({ "basis": word.join(","), "coeff": c.to_string() })
            })
            .collect();
        serde_json::json!({ "d": self.d, "terms": terms })
    }
}

impl fmt::Display for TensorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in self.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let word: Vec<&str> = w.iter().map(|&j| basis_name(j)).collect();
            write!(f, "({c})*e[{}]", word.join(","))?;
        }
        Ok(())
    }
}

/// Operators on a single factor: the coideal generators together with the
/// ambient Cartan corrections that appear in the comultiplication.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum FactorOp {
    B1,
    Bm1,
    B0,
    Dd,
    DdInv,
    D1,
    D1Inv,
    K0Inv,
    K1Inv,
    Km1Inv,
    /// `E_-1 K_1^-1`, the tail of the comultiplication of B1.
    EmK,
    /// `E_1 K_-1^-1`, the tail of the comultiplication of B-1.
    EpK,
}

/// The matrix entries of a single-factor operator, as `(target, scalar)`
/// pairs on the basis index `j`.
fn factor_apply(op: FactorOp, j: u8) -> Vec<(u8, Scalar)> {
    let hit = |t: u8, s: Scalar| vec![(t, s)];
    let diag = |s: Scalar| vec![(j, s)];
    match op {
        FactorOp::B1 => match j {
            0 => hit(1, Scalar::one()),
            3 => hit(2, Scalar::one()),
            _ => vec![],
        },
        FactorOp::Bm1 => match j {
            1 => hit(0, Scalar::one()),
            2 => hit(3, Scalar::one()),
            _ => vec![],
        },
        FactorOp::B0 => match j {
            1 => hit(2, Scalar::one()),
            2 => hit(1, Scalar::one()),
            _ => vec![],
        },
        FactorOp::Dd => diag(Scalar::q_pow((j == 1 || j == 2) as i64)),
        FactorOp::DdInv => diag(Scalar::q_pow(-((j == 1 || j == 2) as i64))),
        FactorOp::D1 => diag(Scalar::q_pow((j == 0 || j == 3) as i64)),
        FactorOp::D1Inv => diag(Scalar::q_pow(-((j == 0 || j == 3) as i64))),
        FactorOp::K0Inv => match j {
            1 => diag(Scalar::q_pow(-1)),
            2 => diag(Scalar::q()),
            _ => diag(Scalar::one()),
        },
        FactorOp::K1Inv => match j {
            0 => diag(Scalar::q_pow(-1)),
            1 => diag(Scalar::q()),
            _ => diag(Scalar::one()),
        },
        FactorOp::Km1Inv => match j {
            2 => diag(Scalar::q_pow(-1)),
            3 => diag(Scalar::q()),
            _ => diag(Scalar::one()),
        },
        FactorOp::EmK => match j {
            3 => hit(2, Scalar::one()),
            _ => vec![],
        },
        FactorOp::EpK => match j {
            1 => hit(0, Scalar::one()),
            _ => vec![],
        },
    }
}

/// The diagonal scalar by which `Khat^(sign)` multiplies a basis word:
/// `q^(sign)` per diamond factor and `q^(-sign)` per outer factor.
fn khat_scalar(word: &[u8], sign: i64) -> Scalar {
    let e: i64 = word
        .iter()
        .map(|&j| if j == 1 || j == 2 { sign } else { -sign })
        .sum();
    Scalar::q_pow(e)
}

/// Acts with a coideal generator via the comultiplication, peeled off the
/// last factor: `B1` and `B-1` pick up the grouplike correction term, `B0`
/// only the Cartan twist, and the `Dd`/`D1` act factorwise.
pub fn gen_act(g: Generator, v: &TensorVector) -> TensorVector {
    match g {
        Generator::Dd | Generator::DdInv | Generator::D1 | Generator::D1Inv => {
            let op = match g {
                Generator::Dd => FactorOp::Dd,
                Generator::DdInv => FactorOp::DdInv,
                Generator::D1 => FactorOp::D1,
                _ => FactorOp::D1Inv,
            };
            let mut out = TensorVector::zero(v.d);
            for (w, c) in v.iter() {
                let mut s = c.clone();
                for &j in w.iter() {
                    let hits = factor_apply(op, j);
                    debug_assert_eq!(hits.len(), 1);
                    s = &s * &hits[0].1;
                }
                out.add_term(w.clone(), s);
            }
            out
        }
        Generator::B1 | Generator::Bminus1 | Generator::B0 => {
            let mut out = TensorVector::zero(v.d);
            for (w, c) in v.iter() {
                out = out.add(&gen_act_word(g, w).scale(c));
            }
            out
        }
    }
}

fn gen_act_word(g: Generator, word: &[u8]) -> TensorVector {
    let d = word.len();
    if d == 0 {
        return TensorVector::zero(0);
    }
    let (prefix, last) = (&word[..d - 1], word[d - 1]);
    let lift = |hits: Vec<(u8, Scalar)>| {
        let mut out = TensorVector::zero(d);
        for (t, s) in hits {
            let mut w = prefix.to_vec();
            w.push(t);
            out.add_term(w, s);
        }
        out
    };
    let recurse_tail = |hits: Vec<(u8, Scalar)>| {
        let mut out = TensorVector::zero(d);
        let acted = gen_act_word(g, prefix);
        for (t, s) in hits {
            for (w, c) in acted.iter() {
                let mut word = w.clone();
                word.push(t);
                out.add_term(word, c * &s);
            }
        }
        out
    };
    match g {
        Generator::B0 => {
            recurse_tail(factor_apply(FactorOp::K0Inv, last)).add(&lift(factor_apply(
                FactorOp::B0,
                last,
            )))
        }
        Generator::B1 => {
            let correction = &khat_scalar(prefix, 1) - &Scalar::one();
            recurse_tail(factor_apply(FactorOp::K1Inv, last))
                .add(&lift(factor_apply(FactorOp::B1, last)))
                .add(&lift(factor_apply(FactorOp::EmK, last)).scale(&correction))
        }
        Generator::Bminus1 => {
            let correction = &khat_scalar(prefix, -1) - &Scalar::one();
            recurse_tail(factor_apply(FactorOp::Km1Inv, last))
                .add(&lift(factor_apply(FactorOp::Bm1, last)))
                .add(&lift(factor_apply(FactorOp::EpK, last)).scale(&correction))
        }
        _ => unreachable!("Cartan generators take the diagonal path"),
    }
}

/// Acts with a word of generators, rightmost factor first.
pub fn word_act(w: &Word, v: &TensorVector) -> TensorVector {
    let mut out = v.clone();
    for &g in w.iter().rev() {
        out = gen_act(g, &out);
    }
    out
}

/// Acts with an algebra element (aliases are expanded first).
pub fn coideal_act(el: &Element, v: &TensorVector) -> TensorVector {
    let mut out = TensorVector::zero(v.d);
    for (w, c) in el.iter() {
        out = out.add(&word_act(w, v).scale(c));
    }
    out
}

/// Acts with a named alias such as X, Z or Khat.
pub fn alias_act(a: Alias, v: &TensorVector) -> TensorVector {
    coideal_act(&alias_expand(a), v)
}

/// A linear combination of words in the Hecke generators `H0..H(d-1)`.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct HeckeWord {
    terms: BTreeMap<Vec<usize>, Scalar>,
}

impl HeckeWord {
    pub fn zero() -> Self {
        HeckeWord::default()
    }

    pub fn one() -> Self {
        HeckeWord::from_word(&[])
    }

    pub fn letter(i: usize) -> Self {
        HeckeWord::from_word(&[i])
    }

    pub fn from_word(w: &[usize]) -> Self {
        let mut out = HeckeWord::zero();
        out.add_term(w.to_vec(), Scalar::one());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, w: Vec<usize>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w.clone()).or_insert_with(Scalar::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &HeckeWord) -> HeckeWord {
        let mut out = self.clone();
        for (w, c) in other.iter() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> HeckeWord {
        let mut out = HeckeWord::zero();
        for (w, c) in self.iter() {
            out.add_term(w.clone(), c * s);
        }
        out
    }

    /// Concatenation product: `self` acts after `other`.
    pub fn mul(&self, other: &HeckeWord) -> HeckeWord {
        let mut out = HeckeWord::zero();
        for (w, c) in self.iter() {
            for (u, b) in other.iter() {
                let mut word = w.clone();
                word.extend_from_slice(u);
                out.add_term(word, c * b);
            }
        }
        out
    }
}

/// One Hecke generator on `V^(x)d`: `H0` flips the first factor across the
/// graph involution, `Hi` acts on factors `i-1, i` by the two-factor braid
/// operator ordered along the graph.
pub fn hecke_letter_act(i: usize, v: &TensorVector) -> Result<TensorVector, TensorError> {
    let d = v.d;
    if i >= d.max(1) || d == 0 {
        return Err(TensorError::LetterOutOfRange { letter: i, d });
    }
    let mut out = TensorVector::zero(d);
    if i == 0 {
        for (w, c) in v.iter() {
            let mut word = w.clone();
            word[0] = 3 - word[0];
            out.add_term(word, c.clone());
        }
        return Ok(out);
    }
    let (p, r) = (i - 1, i);
    for (w, c) in v.iter() {
        let (a, b) = (w[p], w[r]);
        if a == b {
            out.add_term(w.clone(), c * &Scalar::q_pow(-1));
        } else {
            let mut swapped = w.clone();
            swapped[p] = b;
            swapped[r] = a;
            if a > b {
                out.add_term(swapped, c.clone());
                out.add_term(w.clone(), c * &(&Scalar::q_pow(-1) - &Scalar::q()));
            } else {
                out.add_term(swapped, c.clone());
            }
        }
    }
    Ok(out)
}

/// Acts with a Hecke combination, rightmost letter first.
pub fn hecke_act(h: &HeckeWord, v: &TensorVector) -> Result<TensorVector, TensorError> {
    let mut out = TensorVector::zero(v.d);
    for (w, c) in h.iter() {
        let mut acted = v.clone();
        for &i in w.iter().rev() {
            acted = hecke_letter_act(i, &acted)?;
        }
        out = out.add(&acted.scale(c));
    }
    Ok(out)
}

/// The Jucys-Murphy element `J_i` as a Hecke word:
/// `J1 = H0`, `J_i = H(i-1) J(i-1) H(i-1)`.
pub fn jucys_murphy_word(i: usize) -> HeckeWord {
    let mut w = vec![0];
    for k in 1..i {
        let mut next = vec![k];
        next.extend_from_slice(&w);
        next.push(k);
        w = next;
    }
    HeckeWord::from_word(&w)
}

/// Acts with `J_i` for `1 <= i <= d`.
pub fn jucys_murphy(i: usize, v: &TensorVector) -> Result<TensorVector, TensorError> {
    if i == 0 || i > v.d {
        return Err(TensorError::JmIndexOutOfRange { index: i, d: v.d });
    }
    hecke_act(&jucys_murphy_word(i), v)
}

/// The diamond-pair vector `e_-d ± q^n e_d`.
pub fn x_pm(sign: Sign, n: i64) -> TensorVector {
    let s = match sign {
        Sign::Plus => Scalar::q_pow(n),
        Sign::Minus => -&Scalar::q_pow(n),
    };
    let mut v = TensorVector::basis(&[1]);
    v.add_term(vec![2], s);
    v
}

/// The outer-pair vector `e_-1 ± q^n e_1`.
pub fn y_pm(sign: Sign, n: i64) -> TensorVector {
    let s = match sign {
        Sign::Plus => Scalar::q_pow(n),
        Sign::Minus => -&Scalar::q_pow(n),
    };
    let mut v = TensorVector::basis(&[0]);
    v.add_term(vec![3], s);
    v
}

/// The two-factor building block `q^-1 y_n (x) x_n - x_n (x) y_(n-2)`,
/// taken with a common sign on all three pair vectors.
pub fn eta(sign: Sign, n: i64) -> TensorVector {
    y_pm(sign, n)
        .tensor(&x_pm(sign, n))
        .scale(&Scalar::q_pow(-1))
        .sub(&x_pm(sign, n).tensor(&y_pm(sign, n - 2)))
}

/// A column-addition path: each step adds a two-box column to the first
/// (`Plus`) or second (`Minus`) component of a pair of rectangles. Paths
/// encode the standard fillings with odd top rows and even bottom rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityPath(pub Vec<Sign>);

impl ParityPath {
    /// Parses a string of `+` and `-` characters.
    pub fn parse(s: &str) -> Option<ParityPath> {
        s.chars()
            .map(|c| match c {
                '+' => Some(Sign::Plus),
                '-' => Some(Sign::Minus),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(ParityPath)
    }

    /// The rectangle widths `(s, t)` after the whole path.
    pub fn shape(&self) -> (u32, u32) {
        let s = self.0.iter().filter(|&&x| x == Sign::Plus).count() as u32;
        (s, self.0.len() as u32 - s)
    }
}

/// The product of column vectors along a path. Each step contributes an
/// `eta` factor whose index is the signed width difference before the
/// step: `s - t` for a column added on the first component, `t - s` for
/// one added on the second. The signed value is forced by weight
/// bookkeeping: the factor parameter must match the B0-weight of the
/// prefix, which changes sign with the component.
pub fn lambda_wedge(path: &ParityPath) -> TensorVector {
    let mut v = TensorVector::unit();
    let (mut s, mut t) = (0i64, 0i64);
    for &step in &path.0 {
        match step {
            Sign::Plus => {
                v = v.tensor(&eta(Sign::Plus, s - t));
                s += 1;
            }
            Sign::Minus => {
                v = v.tensor(&eta(Sign::Minus, t - s));
                t += 1;
            }
        }
    }
    v
}

/// A pair of two-row partitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Bipartition {
    pub lambda: (u32, u32),
    pub mu: (u32, u32),
}

impl Bipartition {
    pub fn new(lambda: (u32, u32), mu: (u32, u32)) -> Result<Self, TensorError> {
        if lambda.0 < lambda.1 || mu.0 < mu.1 {
            return Err(TensorError::NotTwoRow);
        }
        Ok(Bipartition { lambda, mu })
    }

    pub fn size(&self) -> u32 {
        self.lambda.0 + self.lambda.1 + self.mu.0 + self.mu.1
    }

    /// All two-row bipartitions of `d`, in lexicographic order.
    pub fn enumerate(d: u32) -> Vec<Bipartition> {
        let mut out = Vec::new();
        for l1 in 0..=d {
            for l2 in 0..=(d - l1).min(l1) {
                let rest = d - l1 - l2;
                for m1 in 0..=rest {
                    let m2 = rest - m1;
                    if m1 >= m2 {
                        out.push(Bipartition { lambda: (l1, l2), mu: (m1, m2) });
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Row differences and the offset: `s = lambda1 - lambda2`,
    /// `t = mu1 - mu2`, `r = lambda2 - mu2`.
    fn str_params(&self) -> (i64, i64, i64) {
        (
            self.lambda.0 as i64 - self.lambda.1 as i64,
            self.mu.0 as i64 - self.mu.1 as i64,
            self.lambda.1 as i64 - self.mu.1 as i64,
        )
    }

    /// The path of the rectangular core in the canonical filling: all
    /// first-component columns, then all second-component columns.
    pub fn core_path(&self) -> ParityPath {
        let mut steps = vec![Sign::Plus; self.lambda.1 as usize];
        steps.extend(vec![Sign::Minus; self.mu.1 as usize]);
        ParityPath(steps)
    }

    /// Content and component of the boxes in the canonical filling, in
    /// filling order: core columns top to bottom and left to right (first
    /// component, then second), then the leftover first-row boxes of each
    /// component from left to right.
    pub fn special_contents(&self) -> Vec<(i64, Sign)> {
        let mut out = Vec::new();
        for c in 0..self.lambda.1 as i64 {
            out.push((c, Sign::Plus));
            out.push((c - 1, Sign::Plus));
        }
        for c in 0..self.mu.1 as i64 {
            out.push((c, Sign::Minus));
            out.push((c - 1, Sign::Minus));
        }
        for c in self.lambda.1 as i64..self.lambda.0 as i64 {
            out.push((c, Sign::Plus));
        }
        for c in self.mu.1 as i64..self.mu.0 as i64 {
            out.push((c, Sign::Minus));
        }
        out
    }

    /// The Jucys-Murphy eigenvalues `(+-) q^(-2 content)` predicted from
    /// the canonical filling.
    pub fn jm_prediction(&self) -> Vec<Scalar> {
        self.special_contents()
            .iter()
            .map(|&(c, sign)| {
                let s = Scalar::q_pow(-2 * c);
                match sign {
                    Sign::Plus => s,
                    Sign::Minus => -&s,
                }
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "lambda": [self.lambda.0, self.lambda.1],
            "mu": [self.mu.0, self.mu.1],
        })
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(({},{}),({},{}))",
            self.lambda.0, self.lambda.1, self.mu.0, self.mu.1
        )
    }
}

/// The number of standard fillings of a two-row bipartition, by direct
/// corner-removal recursion.
pub fn specht_dim(bp: &Bipartition) -> u64 {
    fn go(l: (u32, u32), m: (u32, u32), memo: &mut BTreeMap<((u32, u32), (u32, u32)), u64>) -> u64 {
        if l == (0, 0) && m == (0, 0) {
            return 1;
        }
        if let Some(&v) = memo.get(&(l, m)) {
            return v;
        }
        let mut total = 0;
        if l.0 > l.1 {
            total += go((l.0 - 1, l.1), m, memo);
        }
        if l.1 > 0 {
            total += go((l.0, l.1 - 1), m, memo);
        }
        if m.0 > m.1 {
            total += go(l, (m.0 - 1, m.1), memo);
        }
        if m.1 > 0 {
            total += go(l, (m.0, m.1 - 1), memo);
        }
        memo.insert((l, m), total);
        total
    }
    go(bp.lambda, bp.mu, &mut BTreeMap::new())
}

/// The representative vector of a bipartition: the core wedge followed by
/// single diamond-pair factors, `s` of them with rising indices starting
/// at `r` and `t` of them with rising indices starting at `-r-s`. The
/// index ranges carry `s` and `t` factors; the box count of the shape
/// forces these lengths.
pub fn omega(bp: &Bipartition) -> TensorVector {
    let (s, t, r) = bp.str_params();
    let mut v = lambda_wedge(&bp.core_path());
    for k in 0..s {
        v = v.tensor(&x_pm(Sign::Plus, r + k));
    }
    for k in 0..t {
        v = v.tensor(&x_pm(Sign::Minus, -r - s + k));
    }
    v
}

/// Whether both raising operators kill the vector.
pub fn is_maximal(v: &TensorVector) -> bool {
    gen_act(Generator::B1, v).is_zero() && alias_act(Alias::X, v).is_zero()
}

/// A joint eigenvalue tuple on a tensor vector.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorWeight {
    pub dd: Scalar,
    pub d1: Scalar,
    pub b0: Scalar,
    pub z: Scalar,
    pub w: Scalar,
}

impl TensorWeight {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "dd": self.dd.to_string(),
            "d1": self.d1.to_string(),
            "b0": self.b0.to_string(),
            "z": self.z.to_string(),
            "w": self.w.to_string(),
        })
    }
}

/// The simultaneous `(Dd, D1, B0, Z, W)`-eigenvalues, or the first
/// operator on which the vector fails to be an eigenvector.
pub fn weight_of(v: &TensorVector) -> Result<TensorWeight, TensorError> {
    let eig = |name: &'static str, image: TensorVector| {
        v.eigenvalue_of(&image).ok_or(TensorError::NotEigenvector(name))
    };
    Ok(TensorWeight {
        dd: eig("Dd", gen_act(Generator::Dd, v))?,
        d1: eig("D1", gen_act(Generator::D1, v))?,
        b0: eig("B0", gen_act(Generator::B0, v))?,
        z: eig("Z", alias_act(Alias::Z, v))?,
        w: eig("W", alias_act(Alias::W, v))?,
    })
}

/// The closed-form weight of the representative vector of a bipartition.
pub fn expected_weight(bp: &Bipartition) -> TensorWeight {
    let (l1, l2) = (bp.lambda.0 as i64, bp.lambda.1 as i64);
    let (m1, m2) = (bp.mu.0 as i64, bp.mu.1 as i64);
    let kappa = l1 + m1 - l2 - m2;
    let n = l1 - m1;
    TensorWeight {
        dd: Scalar::q_pow(l1 + m1),
        d1: Scalar::q_pow(l2 + m2),
        b0: qint(n),
        z: &qint(l2 - m2) - &(&Scalar::q_pow(-kappa) * &qint(n)),
        w: &(&Scalar::q_pow(-2) * &qint(l2 - m2)) - &(&Scalar::q_pow(kappa - 2) * &qint(n)),
    }
}

/// The highest weight of the irreducible summand labelled by a
/// bipartition.
pub fn summand_highest_weight(bp: &Bipartition) -> HighestWeight {
    let (l1, l2) = (bp.lambda.0 as i64, bp.lambda.1 as i64);
    let (m1, m2) = (bp.mu.0 as i64, bp.mu.1 as i64);
    let kappa = l1 + m1 - l2 - m2;
    let n = l1 - m1;
    let zeta = &qint(l2 - m2) - &(&Scalar::q_pow(-kappa) * &qint(n));
    HighestWeight::new(l1 + m1, l2 + m2, Scalar::q_pow(n), zeta)
}

/// One certified summand of a tensor power.
#[derive(Clone, Debug)]
pub struct Summand {
    pub bp: Bipartition,
    pub dim_l: u64,
    pub dim_specht: u64,
    pub weight: TensorWeight,
    pub jm_spectrum: Vec<Scalar>,
    pub maximal: bool,
}

impl Summand {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "lambda": [self.bp.lambda.0, self.bp.lambda.1],
            "mu": [self.bp.mu.0, self.bp.mu.1],
            "dimL": self.dim_l,
            "dimSpecht": self.dim_specht,
            "weight": self.weight.to_json(),
            "jm_spectrum": self.jm_spectrum.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            "maximal": self.maximal,
        })
    }
}

/// Decomposes `V^(x)d`: enumerates the two-row bipartitions of `d` and
/// certifies each representative vector (maximality, joint weight,
/// Jucys-Murphy spectrum). The dimension products sum to `4^d`.
pub fn decompose(d: u32) -> Vec<Summand> {
    let shapes = Bipartition::enumerate(d);
    let out = par::map_collect(shapes, |bp| {
        let v = omega(&bp);
        let weight = weight_of(&v).expect("representative vectors are weight vectors");
        let jm_spectrum: Vec<Scalar> = (1..=d as usize)
            .map(|i| {
                let image = jucys_murphy(i, &v).expect("index in range");
                v.eigenvalue_of(&image)
                    .expect("representative vectors are Jucys-Murphy eigenvectors")
            })
            .collect();
        Summand {
            bp,
            dim_l: ((bp.lambda.0 - bp.lambda.1 + 1) * (bp.mu.0 - bp.mu.1 + 1)) as u64,
            dim_specht: specht_dim(&bp),
            weight,
            jm_spectrum,
            maximal: is_maximal(&v),
        }
    });
    let total: u64 = out.iter().map(|s| s.dim_l * s.dim_specht).sum();
    debug_assert_eq!(total, 4u64.pow(d));
    out
}

/// A report on the Jucys-Murphy spectrum of one representative vector.
#[derive(Clone, Debug)]
pub struct JmReport {
    pub bp: Bipartition,
    pub spectrum: Vec<Scalar>,
    pub matches_contents: bool,
    /// Whether the spectrum differs from every other shape of the same
    /// size.
    pub separates: bool,
}

/// Verifies that the spectrum follows the contents of the canonical
/// filling and separates the shape from all others of the same size.
pub fn jm_spectrum_check(bp: &Bipartition) -> JmReport {
    let v = omega(bp);
    let spectrum: Vec<Scalar> = (1..=bp.size() as usize)
        .map(|i| {
            let image = jucys_murphy(i, &v).expect("index in range");
            v.eigenvalue_of(&image).expect("eigenvector")
        })
        .collect();
    let matches_contents = spectrum == bp.jm_prediction();
    let separates = Bipartition::enumerate(bp.size())
        .into_iter()
        .filter(|other| other != bp)
        .all(|other| other.jm_prediction() != spectrum);
    JmReport { bp: *bp, spectrum, matches_contents, separates }
}

/// The explicit Hecke element carrying `eta^+_m (x) eta^-_(-m-1)` to
/// `eta^-_m (x) eta^+_(-m-1)` inside the fourth tensor power.
pub fn h_m_element(m: i64) -> HeckeWord {
    let q = |e: i64| Scalar::q_pow(e);
    // Common denominator (q^4 + q^2) q^2m + q^(4m+6) + 1.
    let den = &(&(&q(4) + &q(2)) * &q(2 * m)) + &(&q(4 * m + 6) + &Scalar::one());
    let a = &(&(&(&q(6) - &q(4)) - &(&q(2) - &Scalar::one())) * &q(4 * m)) / &den;
    let pair = &q(4 * m) + &q(2 * m);
    let b = &(&(&q(3) - &q(1)) * &pair) / &den;
    let c = -&(&(&(&q(4) - &q(2)) * &pair) / &den);
    let e = &(&(&q(5) - &q(3)) * &pair) / &den;
    let f = &(&q(2) + &q(2 * m + 2)) / &(&q(2 * m + 4) + &Scalar::one());
    HeckeWord::one()
        .scale(&a)
        .add(&HeckeWord::from_word(&[2]).scale(&b))
        .add(&HeckeWord::from_word(&[1, 2]).scale(&c))
        .add(&HeckeWord::from_word(&[3, 2]).scale(&c))
        .add(&HeckeWord::from_word(&[1, 3, 2]).scale(&e))
        .add(&HeckeWord::from_word(&[2, 1, 3, 2]).scale(&f))
}

/// A vector in `L (x) V` for a finite dimensional irreducible `L`, stored
/// on the product basis of module coordinates and single factors.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleTensorVector {
    dim: usize,
    terms: BTreeMap<(usize, u8), Scalar>,
}

impl ModuleTensorVector {
    pub fn zero(dim: usize) -> Self {
        ModuleTensorVector { dim, terms: BTreeMap::new() }
    }

    pub fn basis(dim: usize, i: usize, j: u8) -> Self {
        let mut v = ModuleTensorVector::zero(dim);
        v.add_term(i, j, Scalar::one());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, u8), &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: usize, j: u8) -> Scalar {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, i: usize, j: u8, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(Scalar::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn add(&self, other: &ModuleTensorVector) -> ModuleTensorVector {
        let mut out = self.clone();
        for (&(i, j), c) in other.iter() {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &ModuleTensorVector) -> ModuleTensorVector {
        let mut out = self.clone();
        for (&(i, j), c) in other.iter() {
            out.add_term(i, j, -c);
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> ModuleTensorVector {
        let mut out = ModuleTensorVector::zero(self.dim);
        for (&(i, j), c) in self.iter() {
            out.add_term(i, j, c * s);
        }
        out
    }

    /// Tensors a module vector (as coordinates) with a single factor.
    pub fn from_pair(dim: usize, coords: &[(usize, Scalar)], factor: &TensorVector) -> Self {
        assert_eq!(factor.d(), 1);
        let mut out = ModuleTensorVector::zero(dim);
        for &(i, ref c) in coords {
            for (w, b) in factor.iter() {
                out.add_term(i, w[0], c * b);
            }
        }
        out
    }

    pub fn eigenvalue_of(&self, image: &ModuleTensorVector) -> Option<Scalar> {
        let (&(i, j), c) = self.terms.iter().next()?;
        let lambda = &image.coeff(i, j) / c;
        (image == &self.scale(&lambda)).then_some(lambda)
    }
}

/// Applies a module matrix to the left half of every term.
fn module_apply(m: &Matrix, v: &ModuleTensorVector) -> ModuleTensorVector {
    let mut out = ModuleTensorVector::zero(v.dim);
    for (&(i, j), c) in v.iter() {
        for r in 0..m.rows() {
            let entry = m.get(r, i);
            if !entry.is_zero() {
                out.add_term(r, j, c * entry);
            }
        }
    }
    out
}

/// Acts with one coideal generator on `L (x) V` via the comultiplication,
/// with the module matrices on the left factor.
pub fn module_gen_act(
    module: &IrreducibleModule,
    g: Generator,
    v: &ModuleTensorVector,
) -> ModuleTensorVector {
    let tail = |op: FactorOp, u: &ModuleTensorVector| {
        let mut out = ModuleTensorVector::zero(u.dim);
        for (&(i, j), c) in u.iter() {
            for (t, s) in factor_apply(op, j) {
                out.add_term(i, t, c * &s);
            }
        }
        out
    };
    let khat = |sign: i64, u: &ModuleTensorVector| {
        let (a, b) = if sign > 0 {
            (Generator::Dd, Generator::D1Inv)
        } else {
            (Generator::DdInv, Generator::D1)
        };
        module_apply(module.matrix(a), &module_apply(module.matrix(b), u))
    };
    match g {
        Generator::Dd | Generator::DdInv | Generator::D1 | Generator::D1Inv => {
            let op = match g {
                Generator::Dd => FactorOp::Dd,
                Generator::DdInv => FactorOp::DdInv,
                Generator::D1 => FactorOp::D1,
                _ => FactorOp::D1Inv,
            };
            tail(op, &module_apply(module.matrix(g), v))
        }
        Generator::B0 => tail(FactorOp::K0Inv, &module_apply(module.matrix(g), v))
            .add(&tail(FactorOp::B0, v)),
        Generator::B1 => {
            let corrected = khat(1, v).sub(v);
            tail(FactorOp::K1Inv, &module_apply(module.matrix(g), v))
                .add(&tail(FactorOp::B1, v))
                .add(&tail(FactorOp::EmK, &corrected))
        }
        Generator::Bminus1 => {
            let corrected = khat(-1, v).sub(v);
            tail(FactorOp::Km1Inv, &module_apply(module.matrix(g), v))
                .add(&tail(FactorOp::Bm1, v))
                .add(&tail(FactorOp::EpK, &corrected))
        }
    }
}

/// Acts with an algebra element on `L (x) V`, rightmost generator first.
pub fn module_coideal_act(
    module: &IrreducibleModule,
    el: &Element,
    v: &ModuleTensorVector,
) -> ModuleTensorVector {
    let mut out = ModuleTensorVector::zero(v.dim);
    for (w, c) in el.iter() {
        let mut acted = v.clone();
        for &g in w.iter().rev() {
            acted = module_gen_act(module, g, &acted);
        }
        out = out.add(&acted.scale(c));
    }
    out
}

/// One candidate maximal vector in `L (x) V`, with its target summand.
#[derive(Clone, Debug)]
pub struct CgCandidate {
    pub name: &'static str,
    /// The summand the vector generates, or `None` when the target shape
    /// degenerates and the vector must vanish.
    pub target: Option<Bipartition>,
    pub vector: ModuleTensorVector,
    pub is_zero: bool,
    pub maximal: bool,
    pub z_weight: Option<Scalar>,
}

impl CgCandidate {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "name": self.name,
            "target": self.target.as_ref().map(|bp| bp.to_json()),
            "zero": self.is_zero,
            "maximal": self.maximal,
            "z_weight": self.z_weight.as_ref().map(|s| s.to_string()),
        })
    }
}

/// The outcome of tensoring an irreducible with the natural module.
pub struct CgDecomposition {
    pub module: IrreducibleModule,
    pub candidates: Vec<CgCandidate>,
}

impl CgDecomposition {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "candidates": self.candidates.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
        })
    }
}

/// The four candidate maximal vectors of `L(lambda, mu) (x) V`, one per
/// way of adding a box to the label, each certified by direct action.
pub fn clebsch_gordan(bp: &Bipartition) -> Result<CgDecomposition, VermaError> {
    let hw = summand_highest_weight(bp);
    let module = fd_quotient(&hw)?.ok_or(VermaError::NotDominant)?;
    let dim = module.dim;
    let (l1, l2) = (bp.lambda.0 as i64, bp.lambda.1 as i64);
    let (m1, m2) = (bp.mu.0 as i64, bp.mu.1 as i64);
    let (kappa, n, i) = (l1 + m1 - l2 - m2, l1 - m1, l1 - l2);
    let alpha = |j: i64| &Scalar::q_pow(j) + &Scalar::q_pow(-j);

    let hwv = vec![(module.index_of(0, 0), Scalar::one())];
    let fp = if module.a_max >= 1 {
        vec![(module.index_of(1, 0), Scalar::one())]
    } else {
        vec![]
    };
    let fm = if module.b_max >= 1 {
        vec![(module.index_of(0, 1), Scalar::one())]
    } else {
        vec![]
    };

    let w_plus = ModuleTensorVector::from_pair(dim, &fp, &x_pm(Sign::Plus, n - 1)).sub(
        &ModuleTensorVector::from_pair(dim, &hwv, &y_pm(Sign::Plus, n - kappa - 2))
            .scale(&(&(&Scalar::q_pow(1 - n) * &qint(i)) * &alpha(n + kappa - i))),
    );
    let w_minus = ModuleTensorVector::from_pair(dim, &fm, &x_pm(Sign::Minus, -n - 1)).sub(
        &ModuleTensorVector::from_pair(dim, &hwv, &y_pm(Sign::Minus, -n - kappa - 2))
            .scale(&(&(&Scalar::q_pow(n + 1) * &qint(kappa - i)) * &alpha(n - i))),
    );
    let xi_plus = w_minus
        .scale(&(&Scalar::q_pow(2 * i) - &Scalar::one()))
        .sub(&w_plus.scale(&(&Scalar::q_pow(2 * i) + &Scalar::q_pow(2 * n))));
    let xi_minus = w_minus
        .scale(&(&Scalar::q_pow(2 * i - 2 * n) + &Scalar::q_pow(2 * kappa)))
        .add(&w_plus.scale(&(&Scalar::q_pow(2 * i) - &Scalar::q_pow(2 * kappa))));
    let top_plus = ModuleTensorVector::from_pair(dim, &hwv, &x_pm(Sign::Plus, n));
    let top_minus = ModuleTensorVector::from_pair(dim, &hwv, &x_pm(Sign::Minus, -n));

    let certify = |name: &'static str,
                   target: Result<Bipartition, TensorError>,
                   v: ModuleTensorVector| {
        let maximal = !v.is_zero()
            && module_coideal_act(&module, &Element::gen(Generator::B1), &v).is_zero()
            && module_coideal_act(&module, &alias_expand(Alias::X), &v).is_zero();
        let z_weight =
            v.eigenvalue_of(&module_coideal_act(&module, &alias_expand(Alias::Z), &v));
        CgCandidate {
            name,
            target: target.ok(),
            is_zero: v.is_zero(),
            maximal,
            z_weight,
            vector: v,
        }
    };

    let candidates = vec![
        certify(
            "xi+",
            Bipartition::new((bp.lambda.0, bp.lambda.1 + 1), bp.mu),
            xi_plus,
        ),
        certify(
            "xi-",
            Bipartition::new(bp.lambda, (bp.mu.0, bp.mu.1 + 1)),
            xi_minus,
        ),
        certify(
            "v(x)x+",
            Bipartition::new((bp.lambda.0 + 1, bp.lambda.1), bp.mu),
            top_plus,
        ),
        certify(
            "v(x)x-",
            Bipartition::new(bp.lambda, (bp.mu.0 + 1, bp.mu.1)),
            top_minus,
        ),
    ];
    Ok(CgDecomposition { module, candidates })
}
