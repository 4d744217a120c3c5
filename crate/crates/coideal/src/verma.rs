//! Highest weight modules with basis `B-1^f Y^y v`: the character action
//! through PBW normal forms, the weight-adapted raising and lowering
//! operators, closed-form weight tables, morphism classification, finite
//! dimensional quotients with explicit matrices, resolution data, and
//! bounded probes for the exceptional parameter locus.

use crate::element::{alias_expand, Alias, Element, Generator};
use crate::matrix::{poly_deriv, poly_gcd, Matrix, Span};
use crate::par;
use crate::pbw::{element_act, midx, PBWElement};
use qfield::{qbracket, qint, Scalar};
use std::collections::BTreeMap;
use std::fmt;

/// Errors for operations whose preconditions involve the highest weight.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VermaError {
    /// The parameter mu lies on the exceptional locus `mu^2 = -q^l`.
    NotGood,
    /// The weight fails the dominance condition for a finite dimensional
    /// quotient.
    NotDominant,
    /// The input vector is not a B0-eigenvector of the stated eigenvalue.
    NotB0Eigenvector,
}

impl fmt::Display for VermaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VermaError::NotGood => write!(f, "mu lies on the exceptional locus mu^2 = -q^l"),
            VermaError::NotDominant => write!(f, "highest weight is not dominant"),
            VermaError::NotB0Eigenvector => {
                write!(f, "vector is not a B0-eigenvector of the stated weight")
            }
        }
    }
}

impl std::error::Error for VermaError {}

/// A highest weight `(q^kd, q^k1, [mu; 0], zeta)`. The B0-value is stored
/// through the parameter `mu`, the Z-value directly.
#[derive(Clone, Debug, PartialEq)]
pub struct HighestWeight {
    pub kd: i64,
    pub k1: i64,
    pub mu: Scalar,
    pub zeta: Scalar,
}

impl HighestWeight {
    pub fn new(kd: i64, k1: i64, mu: Scalar, zeta: Scalar) -> Self {
        assert!(!mu.is_zero(), "mu must be invertible");
        HighestWeight { kd, k1, mu, zeta }
    }

    pub fn kappa(&self) -> i64 {
        self.kd - self.k1
    }

    /// The B0-eigenvalue `[mu; 0]` of the highest weight vector.
    pub fn beta(&self) -> Scalar {
        qbracket(&self.mu, 0)
    }

    /// The W-eigenvalue of the highest weight vector,
    /// `q^-2 (zeta - (q^kappa - q^-kappa) beta)`.
    pub fn omega(&self) -> Scalar {
        let kappa = self.kappa();
        let inner = &self.zeta - &(&(&Scalar::q_pow(kappa) - &Scalar::q_pow(-kappa)) * &self.beta());
        &Scalar::q_pow(-2) * &inner
    }

    /// Whether mu avoids the exceptional locus `mu = ± q^l iota`,
    /// equivalently `mu^2 != -q^l` for every integer l.
    pub fn is_good(&self) -> bool {
        let s = &self.mu * &self.mu;
        let (num, den) = (s.num(), s.den());
        if !num.is_monomial() || !den.is_monomial() {
            return true;
        }
        let (&(_, nm), nc) = num.iter().next().unwrap();
        let (&(_, dm), dc) = den.iter().next().unwrap();
        if nm != dm {
            return true;
        }
        nc.clone() / dc.clone() != -qfield::GaussianRational::one()
    }

    /// The dominance index: the smallest `0 <= i <= kappa` with
    /// `zeta = [mu; kappa - 2i] - q^-kappa [mu; 0]`, if any.
    pub fn dominance_index(&self) -> Option<i64> {
        let kappa = self.kappa();
        (0..=kappa.max(-1)).find(|&i| {
            self.zeta
                == &qbracket(&self.mu, kappa - 2 * i)
                    - &(&Scalar::q_pow(-kappa) * &self.beta())
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "kd": self.kd,
            "k1": self.k1,
            "mu": self.mu.to_string(),
            "beta": self.beta().to_string(),
            "zeta": self.zeta.to_string(),
            "kappa": self.kappa(),
            "omega": self.omega().to_string(),
            "good": self.is_good(),
        })
    }
}

/// A vector in a highest weight module, as a finite combination of the
/// basis vectors `B-1^f Y^y v`.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct VermaVector {
    terms: BTreeMap<(u32, u32), Scalar>,
}

impl VermaVector {
    pub fn zero() -> Self {
        VermaVector::default()
    }

    /// The highest weight vector itself.
    pub fn highest_weight() -> Self {
        VermaVector::basis(0, 0)
    }

    /// The basis vector `B-1^f Y^y v`.
    pub fn basis(f: u32, y: u32) -> Self {
        let mut v = VermaVector::zero();
        v.add_term(f, y, Scalar::one());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(u32, u32), &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, f: u32, y: u32) -> Scalar {
        self.terms.get(&(f, y)).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, f: u32, y: u32, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((f, y)).or_insert_with(Scalar::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&(f, y));
        }
    }

    pub fn add(&self, other: &VermaVector) -> VermaVector {
        let mut out = self.clone();
        for (&(f, y), c) in other.iter() {
            out.add_term(f, y, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &VermaVector) -> VermaVector {
        let mut out = self.clone();
        for (&(f, y), c) in other.iter() {
            out.add_term(f, y, -c);
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> VermaVector {
        let mut out = VermaVector::zero();
        for (&(f, y), c) in self.iter() {
            out.add_term(f, y, c * s);
        }
        out
    }

    /// If `image` is a scalar multiple of this vector, returns the scalar.
    pub fn eigenvalue_of(&self, image: &VermaVector) -> Option<Scalar> {
        let (&(f, y), c) = self.terms.iter().next()?;
        let lambda = &image.coeff(f, y) / c;
        (image == &self.scale(&lambda)).then_some(lambda)
    }
}

impl fmt::Display for VermaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(ef, ey), c) in self.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            if ef > 0 {
                write!(f, "*B-1{}", if ef > 1 { format!("^{ef}") } else { String::new() })?;
            }
            if ey > 0 {
                write!(f, "*Y{}", if ey > 1 { format!("^{ey}") } else { String::new() })?;
            }
            write!(f, "*v")?;
        }
        Ok(())
    }
}

/// Evaluates a PBW expansion against the highest weight character: indices
/// with a raising component kill the vector, the Cartan block contributes
/// `q^{kd kd' + k1 k1'} beta^b zeta^z`, and the lowering block names a
/// basis vector.
fn truncate(hw: &HighestWeight, p: &PBWElement) -> VermaVector {
    let beta = hw.beta();
    let mut out = VermaVector::zero();
    for (idx, c) in p.iter() {
        if idx.e > 0 || idx.x > 0 {
            continue;
        }
        let mut s = c * &Scalar::q_pow(idx.kd * hw.kd + idx.k1 * hw.k1);
        if idx.b > 0 {
            s = &s * &beta.pow_i(idx.b as i64);
        }
        if idx.z > 0 {
            s = &s * &hw.zeta.pow_i(idx.z as i64);
        }
        out.add_term(idx.f, idx.y, s);
    }
    out
}

/// Acts with an algebra element on a vector: each basis vector is read as
/// a PBW monomial, the product is normal-formed by the core engine, and
/// the result is truncated by the character.
pub fn verma_act(hw: &HighestWeight, el: &Element, v: &VermaVector) -> VermaVector {
    let mut p = PBWElement::zero();
    for (&(f, y), c) in v.iter() {
        p.add_term(midx(f, y, 0, 0, 0, 0, 0, 0), c.clone());
    }
    truncate(hw, &element_act(el, &p))
}

/// Which half of the raising/lowering pair to use.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

/// Raising (`E`) or lowering (`F`) operator family.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MagicalDir {
    E,
    F,
}

/// The weight-adapted operator `E_±(eta) = B1 ± eta^{±1} X` or
/// `F_±(eta) = B-1 ∓ eta^{∓1} Y`.
pub fn magical_element(sign: Sign, dir: MagicalDir, eta: &Scalar) -> Element {
    match (dir, sign) {
        (MagicalDir::E, Sign::Plus) => {
            Element::gen(Generator::B1).add(&alias_expand(Alias::X).scale(eta))
        }
        (MagicalDir::E, Sign::Minus) => {
            Element::gen(Generator::B1).sub(&alias_expand(Alias::X).scale(&eta.inv()))
        }
        (MagicalDir::F, Sign::Plus) => {
            Element::gen(Generator::Bminus1).sub(&alias_expand(Alias::Y).scale(&eta.inv()))
        }
        (MagicalDir::F, Sign::Minus) => {
            Element::gen(Generator::Bminus1).add(&alias_expand(Alias::Y).scale(eta))
        }
    }
}

/// Applies a weight-adapted operator after verifying that the input really
/// is a B0-eigenvector of eigenvalue `[eta; 0]`.
pub fn magical_apply(
    hw: &HighestWeight,
    sign: Sign,
    dir: MagicalDir,
    eta: &Scalar,
    v: &VermaVector,
) -> Result<VermaVector, VermaError> {
    let b0v = verma_act(hw, &Element::gen(Generator::B0), v);
    if b0v != v.scale(&qbracket(eta, 0)) {
        return Err(VermaError::NotB0Eigenvector);
    }
    Ok(verma_act(hw, &magical_element(sign, dir, eta), v))
}

/// The weight vector `F_+^a F_-^b v`, built by iterating the lowering
/// operators with the weight parameter tracking the current B0-weight
/// (`F_-` raises it by one step, `F_+` lowers it).
pub fn f_basis_vector(hw: &HighestWeight, a: u32, b: u32) -> VermaVector {
    let mut v = VermaVector::highest_weight();
    let mut eta = hw.mu.clone();
    for _ in 0..b {
        v = verma_act(hw, &magical_element(Sign::Minus, MagicalDir::F, &eta), &v);
        eta = &eta * &Scalar::q();
    }
    for _ in 0..a {
        v = verma_act(hw, &magical_element(Sign::Plus, MagicalDir::F, &eta), &v);
        eta = &eta * &Scalar::q_pow(-1);
    }
    v
}

/// A simultaneous eigenvalue tuple for the commuting operators.
#[derive(Clone, Debug, PartialEq)]
pub struct Weight {
    pub dd: Scalar,
    pub d1: Scalar,
    pub b0: Scalar,
    pub z: Scalar,
    pub w: Option<Scalar>,
}

impl Weight {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "dd": self.dd.to_string(),
            "d1": self.d1.to_string(),
            "b0": self.b0.to_string(),
            "z": self.z.to_string(),
            "w": self.w.as_ref().map(|s| s.to_string()),
        })
    }
}

/// The closed-form weight of `F_+^a F_-^b v`.
pub fn weight_of(hw: &HighestWeight, a: u32, b: u32) -> Weight {
    let (a, b) = (a as i64, b as i64);
    let kappa = hw.kappa();
    let mu = &hw.mu;
    let two = qint(2);
    let z_inner = &(&(&(&mu.inv() * &Scalar::q_pow(a - kappa - 1)) * &two) * &qint(a))
        - &(&(&(mu * &Scalar::q_pow(b - kappa - 1)) * &two) * &qint(b));
    let w_inner = &(&(&(mu * &Scalar::q_pow(kappa - a - 1)) * &two) * &qint(a))
        - &(&(&(&mu.inv() * &Scalar::q_pow(kappa - b - 1)) * &two) * &qint(b));
    Weight {
        dd: Scalar::q_pow(hw.kd - a - b),
        d1: Scalar::q_pow(hw.k1 + a + b),
        b0: qbracket(mu, b - a),
        z: &Scalar::q_pow(a + b) * &(&z_inner + &hw.zeta),
        w: Some(&Scalar::q_pow(-a - b) * &(&w_inner + &hw.omega())),
    }
}

/// Weight table of the grid `F_+^a F_-^b v` for `a <= a_max`, `b <= b_max`.
pub fn weight_table(
    hw: &HighestWeight,
    a_max: u32,
    b_max: u32,
) -> Result<Vec<((u32, u32), Weight)>, VermaError> {
    if !hw.is_good() {
        return Err(VermaError::NotGood);
    }
    let grid: Vec<(u32, u32)> = (0..=a_max)
        .flat_map(|a| (0..=b_max).map(move |b| (a, b)))
        .collect();
    Ok(par::map_collect(grid, |(a, b)| {
        ((a, b), weight_of(hw, a, b))
    }))
}

/// The scalars `(c+, c-)` with `E_+ F_+^a F_-^b v = c+ [a] F_+^{a-1} F_-^b v`
/// and `E_- F_+^a F_-^b v = c- [b] F_+^a F_-^{b-1} v`.
pub fn epm_scalar(hw: &HighestWeight, a: i64, b: i64) -> (Scalar, Scalar) {
    let kappa = hw.kappa();
    let mu = &hw.mu;
    let mu2 = mu * mu;
    let zeta = &hw.zeta;
    let omega = hw.omega();
    let qinv = Scalar::q_pow(-1);
    let gamma = |c: i64| &qint(2) * &qint(kappa - c + 1);
    let m_term = |c: i64, sign: i64| {
        let e = sign * (1 + kappa - 2 * c);
        &qint(c - 1) * &(&(&mu2 * &Scalar::q_pow(e)) + &(&mu2.inv() * &Scalar::q_pow(-e)))
    };
    let cp = &(&qinv * &(&gamma(a) - &m_term(a, 1)))
        - &(&(&(&Scalar::q_pow(a - 1) * &mu.inv()) * zeta)
            + &(&(mu * &Scalar::q_pow(1 - a)) * &omega));
    let cm = &(&qinv * &(&gamma(b) - &m_term(b, -1)))
        + &(&(&(&Scalar::q_pow(1 - b) * &mu.inv()) * &omega)
            + &(&(mu * &Scalar::q_pow(b - 1)) * zeta));
    (cp, cm)
}

/// Which of the four morphism patterns connects two highest weights.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HomCase {
    Case1(i64),
    Case2(i64),
    Case3(i64),
    Case4,
    NoHom,
}

impl fmt::Display for HomCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomCase::Case1(i) => write!(f, "case 1 (i = {i})"),
            HomCase::Case2(i) => write!(f, "case 2 (i = {i})"),
            HomCase::Case3(i) => write!(f, "case 3 (i = {i})"),
            HomCase::Case4 => write!(f, "case 4 (equality)"),
            HomCase::NoHom => write!(f, "none"),
        }
    }
}

fn zeta_first_kind(mu: &Scalar, kappa: i64, i: i64) -> Scalar {
    &(&(mu * &Scalar::q_pow(-i)) * &qint(kappa - i))
        - &(&(&mu.inv() * &Scalar::q_pow(i - kappa)) * &qint(i))
}

fn zeta_second_kind(mu: &Scalar, kappa: i64, i: i64) -> Scalar {
    &(&(mu * &Scalar::q_pow(i - kappa)) * &qint(i))
        - &(&(&mu.inv() * &Scalar::q_pow(-i)) * &qint(kappa - i))
}

/// The source highest weight of a case-1 inclusion into `dst` at index i.
pub fn case1_source(dst: &HighestWeight, i: i64) -> HighestWeight {
    let (mu, kappa) = (&dst.mu, dst.kappa());
    let zeta = &(&(mu * &Scalar::q()) * &qint(kappa - i))
        + &(&(&mu.inv() * &Scalar::q_pow(2 * i + 1 - kappa)) * &qint(i + 2));
    HighestWeight::new(dst.kd - i - 1, dst.k1 + i + 1, mu * &Scalar::q_pow(-(i + 1)), zeta)
}

/// The source highest weight of a case-2 inclusion into `dst` at index i.
pub fn case2_source(dst: &HighestWeight, i: i64) -> HighestWeight {
    let (mu, kappa) = (&dst.mu, dst.kappa());
    let zeta = &(-&(&(mu * &Scalar::q_pow(2 * i + 1 - kappa)) * &qint(i + 2)))
        - &(&(&mu.inv() * &Scalar::q()) * &qint(kappa - i));
    HighestWeight::new(dst.kd - i - 1, dst.k1 + i + 1, mu * &Scalar::q_pow(i + 1), zeta)
}

/// The source highest weight of a case-3 inclusion into `dst` at index i.
/// Its parameters are the weight of the doubly lowered maximal vector
/// `F_+^{i+1} F_-^{kappa-i+1} v`, which sits at filtration level kappa+2.
pub fn case3_source(dst: &HighestWeight, i: i64) -> HighestWeight {
    let (mu, kappa) = (&dst.mu, dst.kappa());
    let wt = weight_of(dst, (i + 1) as u32, (kappa - i + 1) as u32);
    HighestWeight::new(
        dst.k1 - 2,
        dst.kd + 2,
        mu * &Scalar::q_pow(kappa - 2 * i),
        wt.z,
    )
}

/// Classifies nonzero morphisms from the Verma module of `src` into the
/// good Verma module of `dst`.
pub fn hom_exists(src: &HighestWeight, dst: &HighestWeight) -> Result<HomCase, VermaError> {
    if !dst.is_good() {
        return Err(VermaError::NotGood);
    }
    let same = |a: &HighestWeight, b: &HighestWeight| {
        a.kd == b.kd && a.k1 == b.k1 && a.beta() == b.beta() && a.zeta == b.zeta
    };
    if same(src, dst) {
        return Ok(HomCase::Case4);
    }
    let (mu, kappa) = (&dst.mu, dst.kappa());

    // Cases 1 and 2 pin the index through the Dd-shift.
    let i = dst.kd - src.kd - 1;
    if i >= 0 && src.k1 == dst.k1 + i + 1 {
        if dst.zeta == zeta_first_kind(mu, kappa, i) && same(src, &case1_source(dst, i)) {
            return Ok(HomCase::Case1(i));
        }
        if dst.zeta == zeta_second_kind(mu, kappa, i) && same(src, &case2_source(dst, i)) {
            return Ok(HomCase::Case2(i));
        }
    }

    // Case 3 fixes the D-shifts and scans the index.
    if src.kd == dst.k1 - 2 && src.k1 == dst.kd + 2 {
        for i in 0..=kappa.max(-1) {
            if dst.zeta == zeta_first_kind(mu, kappa, i) && same(src, &case3_source(dst, i)) {
                return Ok(HomCase::Case3(i));
            }
        }
    }
    Ok(HomCase::NoHom)
}

/// A finite dimensional irreducible quotient with its explicit matrices in
/// the weight basis `F_+^a F_-^b v`, `0 <= a <= i`, `0 <= b <= kappa - i`.
#[derive(Clone, Debug)]
pub struct IrreducibleModule {
    pub hw: HighestWeight,
    pub i: i64,
    pub dim: usize,
    pub a_max: u32,
    pub b_max: u32,
    mats: Vec<(Generator, Matrix)>,
}

impl IrreducibleModule {
    /// The coordinate of the basis vector `F_+^a F_-^b v`.
    pub fn index_of(&self, a: u32, b: u32) -> usize {
        (a * (self.b_max + 1) + b) as usize
    }

    pub fn matrix(&self, g: Generator) -> &Matrix {
        &self
            .mats
            .iter()
            .find(|(h, _)| *h == g)
            .expect("all generators have matrices")
            .1
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mats: serde_json::Map<String, serde_json::Value> = self
            .mats
            .iter()
            .map(|(g, m)| {
                let entries: Vec<String> = (0..m.rows())
                    .flat_map(|r| (0..m.cols()).map(move |c| m.get(r, c).to_string()))
                    .collect();
                (g.name().to_string(), serde_json::json!(entries))
            })
            .collect();
        serde_json::json!({
            "hw": self.hw.to_json(),
            "i": self.i,
            "dim": self.dim,
            "a_max": self.a_max,
            "b_max": self.b_max,
            "matrices": mats,
        })
    }
}

/// The finite dimensional irreducible quotient, when the weight is
/// dominant; `None` off the dominance locus (including `kappa < 0`).
pub fn fd_quotient(hw: &HighestWeight) -> Result<Option<IrreducibleModule>, VermaError> {
    if !hw.is_good() {
        return Err(VermaError::NotGood);
    }
    let kappa = hw.kappa();
    let Some(i) = hw.dominance_index() else {
        return Ok(None);
    };
    let (a_max, b_max) = (i as u32, (kappa - i) as u32);
    let dim = ((a_max + 1) * (b_max + 1)) as usize;
    let idx = |a: u32, b: u32| (a * (b_max + 1) + b) as usize;

    let mut bm = Matrix::zeros(dim, dim);
    let mut b1 = Matrix::zeros(dim, dim);
    let mut b0 = Matrix::zeros(dim, dim);
    let mut dd = Matrix::zeros(dim, dim);
    let mut dd_inv = Matrix::zeros(dim, dim);
    let mut d1 = Matrix::zeros(dim, dim);
    let mut d1_inv = Matrix::zeros(dim, dim);
    for a in 0..=a_max {
        for b in 0..=b_max {
            let col = idx(a, b);
            let eta = &hw.mu * &Scalar::q_pow(b as i64 - a as i64);
            let denom = (&eta + &eta.inv()).inv();
            // B-1 distributes over the two lowering directions; the
            // submodule boundary drops out-of-grid targets.
            if a < a_max {
                bm.set(idx(a + 1, b), col, &eta * &denom);
            }
            if b < b_max {
                bm.set(idx(a, b + 1), col, &eta.inv() * &denom);
            }
            // B1 through the raising scalars.
            let (cp, cm) = epm_scalar(hw, a as i64, b as i64);
            if a > 0 {
                b1.set(
                    idx(a - 1, b),
                    col,
                    &(&eta.inv() * &denom) * &(&cp * &qint(a as i64)),
                );
            }
            if b > 0 {
                b1.set(
                    idx(a, b - 1),
                    col,
                    &(&eta * &denom) * &(&cm * &qint(b as i64)),
                );
            }
            b0.set(col, col, qbracket(&hw.mu, b as i64 - a as i64));
            let e = hw.kd - a as i64 - b as i64;
            dd.set(col, col, Scalar::q_pow(e));
            dd_inv.set(col, col, Scalar::q_pow(-e));
            let e = hw.k1 + a as i64 + b as i64;
            d1.set(col, col, Scalar::q_pow(e));
            d1_inv.set(col, col, Scalar::q_pow(-e));
        }
    }
    Ok(Some(IrreducibleModule {
        hw: hw.clone(),
        i,
        dim,
        a_max,
        b_max,
        mats: vec![
            (Generator::Bminus1, bm),
            (Generator::B0, b0),
            (Generator::B1, b1),
            (Generator::Dd, dd),
            (Generator::DdInv, dd_inv),
            (Generator::D1, d1),
            (Generator::D1Inv, d1_inv),
        ],
    }))
}

/// The two-step resolution of a dominant irreducible quotient: one module
/// mapping in from the left, two in the middle, and the images of the
/// three highest weight vectors inside the target Verma module.
#[derive(Clone, Debug)]
pub struct BggResolution {
    pub i: i64,
    pub target: HighestWeight,
    pub middle: [HighestWeight; 2],
    pub left: HighestWeight,
    /// Images of the highest weight vectors of `middle[0]`, `middle[1]`,
    /// and `left`: `F_+^{i+1} v`, `F_-^{kappa-i+1} v`, and
    /// `F_+^{i+1} F_-^{kappa-i+1} v`.
    pub images: [VermaVector; 3],
}

pub fn bgg_resolution(hw: &HighestWeight) -> Result<BggResolution, VermaError> {
    if !hw.is_good() {
        return Err(VermaError::NotGood);
    }
    let Some(i) = hw.dominance_index() else {
        return Err(VermaError::NotDominant);
    };
    let kappa = hw.kappa();
    Ok(BggResolution {
        i,
        target: hw.clone(),
        middle: [case1_source(hw, i), case2_source(hw, kappa - i)],
        left: case3_source(hw, i),
        images: [
            f_basis_vector(hw, (i + 1) as u32, 0),
            f_basis_vector(hw, 0, (kappa - i + 1) as u32),
            f_basis_vector(hw, (i + 1) as u32, (kappa - i + 1) as u32),
        ],
    })
}

/// Basis of a graded level: the vectors `B-1^{d-t} Y^t v` for `t = 0..=d`.
fn level_pairs(d: u32) -> Vec<(u32, u32)> {
    (0..=d).map(|t| (d - t, t)).collect()
}

fn level_coords(v: &VermaVector, d: u32) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); (d + 1) as usize];
    for (&(f, y), c) in v.iter() {
        assert_eq!(f + y, d, "vector is not concentrated in level {d}");
        out[y as usize] = c.clone();
    }
    out
}

fn coords_to_vector(coords: &[Scalar], d: u32) -> VermaVector {
    let mut out = VermaVector::zero();
    for (t, c) in coords.iter().enumerate() {
        out.add_term(d - t as u32, t as u32, c.clone());
    }
    out
}

/// Matrix of an element mapping level `d_src` to level `d_tgt`.
fn level_matrix(hw: &HighestWeight, el: &Element, d_src: u32, d_tgt: u32) -> Matrix {
    let pairs = level_pairs(d_src);
    let mut m = Matrix::zeros((d_tgt + 1) as usize, pairs.len());
    for (col, &(f, y)) in pairs.iter().enumerate() {
        let image = verma_act(hw, el, &VermaVector::basis(f, y));
        for (t, c) in level_coords(&image, d_tgt).into_iter().enumerate() {
            m.set(t, col, c);
        }
    }
    m
}

/// The maximal vectors (killed by B1 and X) in the level-`d` graded piece.
pub fn maximal_vectors_at_level(hw: &HighestWeight, d: u32) -> Vec<VermaVector> {
    if d == 0 {
        return vec![VermaVector::highest_weight()];
    }
    let up_b1 = level_matrix(hw, &Element::gen(Generator::B1), d, d - 1);
    let up_x = level_matrix(hw, &alias_expand(Alias::X), d, d - 1);
    let mut stacked = Matrix::zeros(2 * d as usize, (d + 1) as usize);
    for r in 0..d as usize {
        for c in 0..=(d as usize) {
            stacked.set(r, c, up_b1.get(r, c).clone());
            stacked.set(r + d as usize, c, up_x.get(r, c).clone());
        }
    }
    stacked
        .nullspace()
        .into_iter()
        .map(|v| coords_to_vector(&v, d))
        .collect()
}

/// Outcome of a bounded quotient probe.
#[derive(Clone, Debug, PartialEq)]
pub enum ProbeOutcome {
    /// Multiset of string lengths `[m]` of the quotient's sl2-character.
    Character(Vec<i64>),
    /// The search depth was exhausted before the quotient closed off.
    Inconclusive(String),
}

/// One probe candidate. Probe results are experimental: they come from a
/// bounded level-by-level search, not from a closed-form criterion.
#[derive(Clone, Debug)]
pub struct ProbeResult {
    pub j: i64,
    pub zeta: Scalar,
    pub outcome: ProbeOutcome,
}

impl ProbeResult {
    /// Tag carried by every probe report.
    pub const TAG: &'static str = "experimental";

    pub fn to_json(&self) -> serde_json::Value {
        let outcome = match &self.outcome {
            ProbeOutcome::Character(c) => serde_json::json!({ "character": c }),
            ProbeOutcome::Inconclusive(msg) => serde_json::json!({ "inconclusive": msg }),
        };
        serde_json::json!({
            "j": self.j,
            "zeta": self.zeta.to_string(),
            "status": Self::TAG,
            "outcome": outcome,
        })
    }
}

impl fmt::Display for ProbeResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "j = {} (zeta = {}, {}): ", self.j, self.zeta, Self::TAG)?;
        match &self.outcome {
            ProbeOutcome::Character(chars) => {
                let strings: Vec<String> = chars.iter().map(|m| format!("[{m}]")).collect();
                write!(f, "character {}", strings.join(" + "))
            }
            ProbeOutcome::Inconclusive(msg) => write!(f, "inconclusive: {msg}"),
        }
    }
}

/// Decomposes graded dimensions (level `d` has weight `kappa - 2d`) into a
/// multiset of sl2-strings, if possible.
fn sl2_character(kappa: i64, dims: &[i64]) -> Option<Vec<i64>> {
    let mut l: Vec<i64> = dims.to_vec();
    l.resize(l.len().max((kappa + 1) as usize), 0);
    let mut chars = Vec::new();
    let mut d = 0usize;
    while d < l.len() {
        let m = l[d];
        if m < 0 {
            return None;
        }
        if m > 0 {
            let top = kappa - 2 * d as i64;
            if top < 0 {
                return None;
            }
            let hi = (kappa - d as i64) as usize;
            if hi >= l.len() {
                l.resize(hi + 1, 0);
            }
            for t in d..=hi {
                l[t] -= m;
            }
            l[d] += m; // the subtraction above also hit l[d]; re-add and zero it
            l[d] = 0;
            for _ in 0..m {
                chars.push(top + 1);
            }
        }
        d += 1;
    }
    if l.iter().any(|&x| x != 0) {
        return None;
    }
    Some(chars)
}

fn probe_quotient(hw: &HighestWeight, kappa: i64, depth: u32) -> ProbeOutcome {
    let elems: Vec<Element> = vec![
        Element::gen(Generator::B1),
        alias_expand(Alias::X),
        Element::gen(Generator::B0),
        alias_expand(Alias::Z),
    ];
    let d_range = 0..=depth;
    // Raising maps from level d and level-preserving maps at d.
    let up: Vec<Vec<Matrix>> = d_range
        .clone()
        .map(|d| {
            if d == 0 {
                Vec::new()
            } else {
                vec![
                    level_matrix(hw, &elems[0], d, d - 1),
                    level_matrix(hw, &elems[1], d, d - 1),
                ]
            }
        })
        .collect();
    let same: Vec<Vec<Matrix>> = d_range
        .clone()
        .map(|d| {
            vec![
                level_matrix(hw, &elems[2], d, d),
                level_matrix(hw, &elems[3], d, d),
            ]
        })
        .collect();

    // Maximal proper submodule, level by level. A level-d vector belongs to it
    // exactly when every word in the raising and level-preserving generators
    // kills its level-0 component, so K_0 = 0 and K_d is the largest B0- and
    // Z-invariant subspace of level d that B1 and X both map into K_{d-1}.
    // Merely closing maximal vectors under the action would fall short: when
    // B0 is not semisimple the radical has composition factors contributing no
    // maximal vector of their own.
    let mut spans: Vec<Span> = (0..=depth).map(|d| Span::new((d + 1) as usize)).collect();
    for d in 1..=(depth as usize) {
        let cols = d + 1;
        let mut stacked = Matrix::zeros(2 * d, cols);
        for j in 0..cols {
            for (mi, m) in up[d].iter().enumerate() {
                let col: Vec<Scalar> = (0..d).map(|i| m.get(i, j).clone()).collect();
                for (i, s) in spans[d - 1].residual(&col).into_iter().enumerate() {
                    stacked.set(mi * d + i, j, s);
                }
            }
        }
        let mut basis = stacked.nullspace();
        loop {
            if basis.is_empty() {
                break;
            }
            let mut sp = Span::new(cols);
            for b in &basis {
                sp.insert(b.clone());
            }
            let k = basis.len();
            let mut test = Matrix::zeros(2 * cols, k);
            for (j, b) in basis.iter().enumerate() {
                for (mi, m) in same[d].iter().enumerate() {
                    for (i, s) in sp.residual(&m.mul_vec(b)).into_iter().enumerate() {
                        test.set(mi * cols + i, j, s);
                    }
                }
            }
            let coords = test.nullspace();
            if coords.len() == k {
                spans[d] = sp;
                break;
            }
            basis = coords
                .into_iter()
                .map(|c| {
                    let mut v = vec![Scalar::zero(); cols];
                    for (cj, b) in c.iter().zip(basis.iter()) {
                        if cj.is_zero() {
                            continue;
                        }
                        for (vi, bi) in v.iter_mut().zip(b.iter()) {
                            *vi = &*vi + &(bi * cj);
                        }
                    }
                    v
                })
                .collect();
        }
    }

    let Some(d_star) = (0..=(depth as usize)).find(|&d| spans[d].is_full()) else {
        return ProbeOutcome::Inconclusive(format!(
            "the submodule generated by maximal vectors did not exhaust any level up to depth {depth}"
        ));
    };
    if !(d_star..=(depth as usize)).all(|d| spans[d].is_full()) {
        return ProbeOutcome::Inconclusive(
            "graded dimensions did not stabilize within the search depth".to_string(),
        );
    }
    let dims: Vec<i64> = (0..d_star)
        .map(|d| (d + 1 - spans[d].dim()) as i64)
        .collect();
    match sl2_character(kappa, &dims) {
        Some(chars) => ProbeOutcome::Character(chars),
        None => ProbeOutcome::Inconclusive(
            "graded dimensions are not a nonnegative sum of sl2-strings".to_string(),
        ),
    }
}

/// Probes candidate Z-values on the exceptional locus `mu = iota q^n` for
/// finite dimensional quotients, with the search depth taken from the
/// `QSP_MAX_DEPTH` environment variable when set.
pub fn exceptional_probe(kappa: i64, n: i64, j_max: i64) -> Vec<ProbeResult> {
    let depth = std::env::var("QSP_MAX_DEPTH")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or((kappa.max(0) + 5) as u32);
    exceptional_probe_with_depth(kappa, n, j_max, depth)
}

/// As [`exceptional_probe`] with an explicit depth bound.
pub fn exceptional_probe_with_depth(
    kappa: i64,
    n: i64,
    j_max: i64,
    depth: u32,
) -> Vec<ProbeResult> {
    assert!(kappa >= 0, "kappa must be nonnegative");
    let iota = Scalar::i();
    let js: Vec<i64> = (0..=j_max).collect();
    par::map_collect(js, |j| {
        let zeta = &iota
            * &(&(&Scalar::q_pow(n - j) * &qint(kappa - j))
                + &(&Scalar::q_pow(j - kappa - n) * &qint(j)));
        let hw = HighestWeight::new(kappa, 0, &iota * &Scalar::q_pow(n), zeta.clone());
        ProbeResult {
            j,
            zeta,
            outcome: probe_quotient(&hw, kappa, depth),
        }
    })
}

/// Diagonalizability report for B0 on the span of the basis vectors up to
/// a filtration level.
#[derive(Clone, Debug)]
pub struct JordanReport {
    pub dim: usize,
    /// Monic minimal polynomial, constant term first.
    pub min_poly: Vec<Scalar>,
    /// `gcd(m, m')`: the product of repeated factors, trivial when the
    /// action is diagonalizable.
    pub repeated: Vec<Scalar>,
    pub diagonalizable: bool,
}

pub fn b0_jordan_check(hw: &HighestWeight, level: u32) -> JordanReport {
    // B0 preserves the grading, so the span decomposes into level blocks
    // and the minimal polynomial is the lcm of the blockwise ones. This
    // keeps the linear algebra at the block sizes.
    let b0 = Element::gen(Generator::B0);
    let mut min_poly = vec![Scalar::one()];
    let mut dim = 0usize;
    for d in 0..=level {
        let block = level_matrix(hw, &b0, d, d);
        dim += block.rows();
        min_poly = crate::matrix::poly_lcm(&min_poly, &block.min_poly());
    }
    let repeated = poly_gcd(&min_poly, &poly_deriv(&min_poly));
    let diagonalizable = repeated.len() == 1;
    JordanReport {
        dim,
        min_poly,
        repeated,
        diagonalizable,
    }
}

/// The label of an integral irreducible quotient as two dominant pairs in
/// doubled half-integer coordinates `(2 lambda_1, 2 lambda_2)`.
pub fn rational_label(kd: i64, k1: i64, n: i64, i: i64) -> ((i64, i64), (i64, i64)) {
    let kappa = kd - k1;
    assert!((0..=kappa).contains(&i), "index out of the dominance range");
    ((kd + n, kd + n - 2 * i), (kd - n, kd - n - 2 * (kappa - i)))
}

/// Inverse of [`rational_label`]: recovers `(kd, k1, n, i)` from a pair of
/// dominant doubled pairs with matching parity.
pub fn rational_label_inverse(label: ((i64, i64), (i64, i64))) -> (i64, i64, i64, i64) {
    let ((a, b), (c, d)) = label;
    assert!(a >= b && c >= d, "pairs must be dominant");
    assert!(
        (a - b) % 2 == 0 && (c - d) % 2 == 0,
        "differences within a pair must be even in doubled coordinates"
    );
    assert!((a + c) % 2 == 0 && (b + d) % 2 == 0, "parity mismatch");
    let kd = (a + c) / 2;
    let k1 = (b + d) / 2;
    let n = (a - c) / 2;
    let i = (a - b) / 2;
    (kd, k1, n, i)
}

/// The highest weight of the integral irreducible with the given label:
/// `mu = q^n` and the dominant Z-value at index i.
pub fn rational_highest_weight(kd: i64, k1: i64, n: i64, i: i64) -> HighestWeight {
    let kappa = kd - k1;
    let mu = Scalar::q_pow(n);
    let zeta = &qbracket(&mu, kappa - 2 * i) - &(&Scalar::q_pow(-kappa) * &qbracket(&mu, 0));
    HighestWeight::new(kd, k1, mu, zeta)
}
