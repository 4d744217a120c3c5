//! Dense matrices and small-scale linear algebra over the exact scalar
//! field: products, null spaces, linear solves, incremental spans, minimal
//! polynomials, and the univariate polynomial helpers used to test them
//! for square factors.

use qfield::Scalar;

/// A dense row-major matrix of exact scalars.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut m = Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).clone();
                    out.set(i, j, &cur + &(a * b));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc = &acc + &(a * &v[j]);
                    }
                }
                acc
            })
            .collect()
    }

    /// A basis of the right null space, as vectors of length `cols`.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let mut rows: Vec<Vec<Scalar>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut pivots: Vec<usize> = Vec::new();
        let mut rank = 0usize;
        for col in 0..self.cols {
            let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, p);
            let inv = rows[rank][col].inv();
            for v in rows[rank].iter_mut() {
                *v = &*v * &inv;
            }
            for r in 0..rows.len() {
                if r != rank && !rows[r][col].is_zero() {
                    let factor = rows[r][col].clone();
                    for j in 0..self.cols {
                        let t = &rows[rank][j] * &factor;
                        rows[r][j] = &rows[r][j] - &t;
                    }
                }
            }
            pivots.push(col);
            rank += 1;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -&rows[r][free];
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `self * x = rhs` for square invertible systems.
    pub fn solve(&self, rhs: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(self.rows, rhs.len());
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a: Vec<Vec<Scalar>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut b: Vec<Scalar> = rhs.to_vec();
        for col in 0..n {
            let p = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, p);
            b.swap(col, p);
            let inv = a[col][col].inv();
            for v in a[col].iter_mut() {
                *v = &*v * &inv;
            }
            b[col] = &b[col] * &inv;
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let factor = a[r][col].clone();
                    for j in 0..n {
                        let t = &a[col][j] * &factor;
                        a[r][j] = &a[r][j] - &t;
                    }
                    let t = &b[col] * &factor;
                    b[r] = &b[r] - &t;
                }
            }
        }
        Some(b)
    }

    /// The monic minimal polynomial, as coefficients with the constant term
    /// first. Computed by finding the first linear dependence among the
    /// flattened powers `I, M, M^2, ...`.
    pub fn min_poly(&self) -> Vec<Scalar> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        // Reduced span of flattened powers together with the combination
        // that produced each reduced row.
        let mut reduced: Vec<(usize, Vec<Scalar>, Vec<Scalar>)> = Vec::new();
        let mut power = Matrix::identity(n);
        for k in 0.. {
            let mut v: Vec<Scalar> = power.data.clone();
            let mut combo = vec![Scalar::zero(); k + 1];
            combo[k] = Scalar::one();
            for (pivot, row, row_combo) in &reduced {
                if v[*pivot].is_zero() {
                    continue;
                }
                let factor = v[*pivot].clone();
                for (vj, rj) in v.iter_mut().zip(row.iter()) {
                    let t = rj * &factor;
                    *vj = &*vj - &t;
                }
                for (cj, rj) in combo.iter_mut().zip(row_combo.iter()) {
                    let t = rj * &factor;
                    *cj = &*cj - &t;
                }
            }
            match v.iter().position(|s| !s.is_zero()) {
                None => return combo,
                Some(pivot) => {
                    let inv = v[pivot].inv();
                    for vj in v.iter_mut() {
                        *vj = &*vj * &inv;
                    }
                    for cj in combo.iter_mut() {
                        *cj = &*cj * &inv;
                    }
                    combo.resize(n + 1, Scalar::zero());
                    reduced.push((pivot, v, combo));
                }
            }
            power = power.mul(self);
        }
        unreachable!()
    }
}

/// An incrementally built subspace, kept in row-reduced form.
#[derive(Clone, Debug)]
pub struct Span {
    ambient: usize,
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl Span {
    pub fn new(ambient: usize) -> Self {
        Span {
            ambient,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn basis(&self) -> Vec<Vec<Scalar>> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }

    fn reduce(&self, v: &mut [Scalar]) {
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let factor = v[*pivot].clone();
            for (vj, rj) in v.iter_mut().zip(row.iter()) {
                let t = rj * &factor;
                *vj = &*vj - &t;
            }
        }
    }

    /// Canonical representative of `v` modulo the span; zero iff `v` lies in it.
    /// Reduction is linear in `v`.
    pub fn residual(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Scalar::is_zero)
    }

    /// Adds a vector; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut w = v;
        self.reduce(&mut w);
        let Some(pivot) = w.iter().position(|s| !s.is_zero()) else {
            return false;
        };
        let inv = w[pivot].inv();
        for wj in w.iter_mut() {
            *wj = &*wj * &inv;
        }
        // Keep earlier rows reduced against the new pivot.
        for (_, row) in self.rows.iter_mut() {
            if row[pivot].is_zero() {
                continue;
            }
            let factor = row[pivot].clone();
            for (rj, wj) in row.iter_mut().zip(w.iter()) {
                let t = wj * &factor;
                *rj = &*rj - &t;
            }
        }
        self.rows.push((pivot, w));
        true
    }
}

fn poly_trim(p: &mut Vec<Scalar>) {
    while p.len() > 1 && p.last().is_some_and(Scalar::is_zero) {
        p.pop();
    }
}

/// Formal derivative; coefficients are ordered with the constant term first.
pub fn poly_deriv(p: &[Scalar]) -> Vec<Scalar> {
    if p.len() <= 1 {
        return vec![Scalar::zero()];
    }
    let mut out: Vec<Scalar> = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| &Scalar::from_int(k as i64) * c)
        .collect();
    poly_trim(&mut out);
    out
}

/// Product of two polynomials, constant term first.
pub fn poly_mul(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let t = x * y;
            out[i + j] = &out[i + j] + &t;
        }
    }
    poly_trim(&mut out);
    out
}

/// Exact quotient; panics when the division leaves a remainder.
pub fn poly_div_exact(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let mut bb = b.to_vec();
    poly_trim(&mut bb);
    let db = bb.len() - 1;
    let lead_inv = bb[db].inv();
    if r.len() - 1 < db {
        assert!(
            r.iter().all(Scalar::is_zero),
            "division left a nonzero remainder"
        );
        return vec![Scalar::zero()];
    }
    let mut quot = vec![Scalar::zero(); r.len() - db];
    for dr in (db..r.len()).rev() {
        if r[dr].is_zero() {
            continue;
        }
        let factor = &r[dr] * &lead_inv;
        for k in 0..db {
            let t = &bb[k] * &factor;
            r[dr - db + k] = &r[dr - db + k] - &t;
        }
        r[dr] = Scalar::zero();
        quot[dr - db] = factor;
    }
    assert!(
        r.iter().all(Scalar::is_zero),
        "division left a nonzero remainder"
    );
    quot
}

/// Monic least common multiple, constant term first.
pub fn poly_lcm(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let g = poly_gcd(a, b);
    let mut out = poly_mul(a, &poly_div_exact(b, &g));
    let lead_inv = out.last().unwrap().inv();
    for c in out.iter_mut() {
        *c = &*c * &lead_inv;
    }
    out
}

/// Multiplies the whole polynomial through by coefficient denominators
/// until every coefficient is a plain Laurent polynomial. Scalar
/// arithmetic on denominator-free values skips the expensive fraction
/// reduction paths.
fn poly_clear_dens(p: &mut [Scalar]) {
    loop {
        let Some(d) = p
            .iter()
            .map(|c| c.den())
            .find(|d| !d.is_one())
            .cloned()
        else {
            return;
        };
        let d = Scalar::from_poly(d);
        for c in p.iter_mut() {
            *c = &*c * &d;
        }
    }
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`, computed with
/// no coefficient divisions.
fn poly_pseudo_rem(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let db = b.len() - 1;
    let lc = &b[db];
    let mut budget = (a.len() - 1 - db) as i64 + 1;
    let mut r = a.to_vec();
    while r.len() - 1 >= db && !(r.len() == 1 && r[0].is_zero()) {
        let dr = r.len() - 1;
        let top = r[dr].clone();
        for c in r.iter_mut() {
            *c = &*c * lc;
        }
        budget -= 1;
        for k in 0..db {
            let t = &b[k] * &top;
            r[dr - db + k] = &r[dr - db + k] - &t;
        }
        r[dr] = Scalar::zero();
        poly_trim(&mut r);
    }
    // Early coefficient cancellations skip multiplications; restore the
    // full power so the subresultant divisors stay exact.
    if budget > 0 {
        let s = lc.pow_i(budget);
        for c in r.iter_mut() {
            *c = &*c * &s;
        }
    }
    r
}

/// Monic greatest common divisor, constant term first. Uses the
/// subresultant polynomial remainder sequence to keep the coefficients
/// from swelling across Euclid steps.
pub fn poly_gcd(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    poly_trim(&mut x);
    poly_trim(&mut y);
    poly_clear_dens(&mut x);
    poly_clear_dens(&mut y);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    let mut g = Scalar::one();
    let mut h = Scalar::one();
    while !(y.len() == 1 && y[0].is_zero()) {
        let delta = (x.len() - y.len()) as i64;
        let mut r = poly_pseudo_rem(&x, &y);
        if !(r.len() == 1 && r[0].is_zero()) {
            let divisor_inv = (&g * &h.pow_i(delta)).inv();
            for c in r.iter_mut() {
                *c = &*c * &divisor_inv;
            }
        }
        x = y;
        y = r;
        g = x.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            &g.pow_i(delta) * &h.pow_i(1 - delta)
        };
    }
    let lead_inv = x.last().unwrap().inv();
    for c in x.iter_mut() {
        *c = &*c * &lead_inv;
    }
    x
}
