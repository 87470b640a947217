//! Exact dense linear algebra over the rationals.
//!
//! Everything here is exact: kernels, solutions and minimal polynomials are
//! computed by fraction-free reasoning on `BigRational` entries, so results can
//! be checked with `==` rather than with tolerances.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always in lowest terms.
pub type Rational = BigRational;

/// Column vector of rationals.
pub type RatVector = Vec<Rational>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Formats as `"p"` for integers and `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn zero_vector(n: usize) -> RatVector {
    vec![Rational::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> RatVector {
    let mut v = zero_vector(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_scaled(acc: &mut [Rational], s: &Rational, v: &[Rational]) {
    if s.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += s * x;
        }
    }
}

pub fn scale_vector(s: &Rational, v: &[Rational]) -> RatVector {
    v.iter().map(|x| s * x).collect()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .sum()
}

/// Scales `v` to a primitive integer vector (coprime entries) whose first
/// nonzero entry is positive. The zero vector is returned unchanged.
pub fn primitive_integral(v: &[Rational]) -> RatVector {
    let mut den = BigInt::one();
    for x in v {
        den = den.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| x.numer() * (&den / x.denom()))
        .collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return v.to_vec();
    }
    let lead_negative = ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    if lead_negative {
        g = -g;
    }
    ints.into_iter()
        .map(|x| Rational::from_integer(x / &g))
        .collect()
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_rational).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_data(rows: usize, cols: usize, data: Vec<Rational>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must equal rows * cols");
        RatMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: &[RatVector]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().cloned());
        }
        RatMatrix { rows: rows.len(), cols, data }
    }

    /// Builds an `n x k` matrix whose columns are the given vectors.
    pub fn from_columns(n: usize, cols: &[RatVector]) -> Self {
        let mut m = Self::zeros(n, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), n);
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        Self::from_data(rows, cols, entries.iter().map(|&x| rat(x)).collect())
    }

    pub fn diagonal(d: &[Rational]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> RatVector {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &Rational) -> Self {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn mul_vec(&self, v: &[Rational]) -> RatVector {
        assert_eq!(v.len(), self.cols, "dimension mismatch in matrix-vector product");
        (0..self.rows).map(|r| dot(self.row(r), v)).collect()
    }

    /// `self += s * other`
    pub fn add_scaled(&mut self, s: &Rational, other: &RatMatrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        add_scaled(&mut self.data, s, &other.data);
    }

    /// Trace of `self * other` without forming the product.
    pub fn trace_product(&self, other: &RatMatrix) -> Rational {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.rows, other.cols);
        let mut t = Rational::zero();
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                let b = &other[(k, i)];
                if !b.is_zero() {
                    t += a * b;
                }
            }
        }
        t
    }

    /// Restriction of the block with the given rows and columns.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                m[(i, j)] = self[(r, c)].clone();
            }
        }
        m
    }

    pub fn vstack(blocks: &[&RatMatrix]) -> Self {
        let cols = blocks.first().map_or(0, |b| b.cols);
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            data.extend(b.data.iter().cloned());
            rows += b.rows;
        }
        RatMatrix { rows, cols, data }
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut a = self.clone();
        let pivots = a.rref_in_place();
        (a, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut pr = 0;
        for c in 0..cols {
            if pr >= rows {
                break;
            }
            let Some(found) = (pr..rows).find(|&r| !self[(r, c)].is_zero()) else {
                continue;
            };
            if found != pr {
                for j in 0..cols {
                    self.data.swap(found * cols + j, pr * cols + j);
                }
            }
            let inv = self[(pr, c)].recip();
            for j in c..cols {
                let x = &self.data[pr * cols + j];
                if !x.is_zero() {
                    self.data[pr * cols + j] = x * &inv;
                }
            }
            let pivot_row: Vec<(usize, Rational)> = (c..cols)
                .filter_map(|j| {
                    let x = &self.data[pr * cols + j];
                    (!x.is_zero()).then(|| (j, x.clone()))
                })
                .collect();
            for r in 0..rows {
                if r == pr {
                    continue;
                }
                let f = self.data[r * cols + c].clone();
                if f.is_zero() {
                    continue;
                }
                for (j, x) in &pivot_row {
                    let e = &mut self.data[r * cols + j];
                    *e -= &f * x;
                }
            }
            pivots.push(c);
            pr += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<RatMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, n + r)] = Rational::one();
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        let rows: Vec<usize> = (0..n).collect();
        Some(aug.submatrix(&rows, &cols))
    }

    /// Basis of the right null space `{v : self * v = 0}`.
    pub fn kernel_basis(&self) -> Vec<RatVector> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = zero_vector(self.cols);
            v[free] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                let x = &r[(i, free)];
                if !x.is_zero() {
                    v[p] = -x;
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Some `x` with `self * x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Option<RatVector> {
        assert_eq!(b.len(), self.rows, "right-hand side length must equal row count");
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, self.cols)] = b[r].clone();
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = zero_vector(self.cols);
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = aug[(i, self.cols)].clone();
        }
        Some(x)
    }

    /// Solves `self * X = B` column by column.
    pub fn solve_columns(&self, b: &RatMatrix) -> Option<RatMatrix> {
        let cols: Option<Vec<RatVector>> = (0..b.cols()).map(|c| self.solve(&b.column(c))).collect();
        Some(RatMatrix::from_columns(self.cols, &cols?))
    }

    /// `(A^T A)^{-1} A^T` for a matrix of full column rank.
    pub fn left_inverse(&self) -> Option<RatMatrix> {
        let t = self.transpose();
        Some(&(&t * self).inverse()? * &t)
    }

    pub fn pow(&self, k: u32) -> RatMatrix {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Monic polynomial of least degree annihilating `self`.
    ///
    /// Computed as the lcm over standard basis vectors of the local minimal
    /// polynomials found from Krylov sequences.
    pub fn minimal_polynomial(&self) -> RatPoly {
        assert!(self.is_square(), "minimal polynomial needs a square matrix");
        let n = self.rows;
        let mut acc = RatPoly::one();
        // Vectors already known to be killed by `acc` need no further work.
        for j in 0..n {
            let e = unit_vector(n, j);
            if is_zero_vector(&acc.eval_on_vector(self, &e)) {
                continue;
            }
            let local = self.local_minimal_polynomial(&e);
            acc = acc.lcm(&local);
        }
        acc
    }

    /// Monic generator of the annihilator of `v` under `self`.
    pub fn local_minimal_polynomial(&self, v: &[Rational]) -> RatPoly {
        let n = self.rows;
        // Echelon rows: (reduced vector, pivot position, combination of powers).
        let mut echelon: Vec<(RatVector, usize, RatVector)> = Vec::new();
        let mut power = v.to_vec();
        for k in 0..=n {
            let mut w = power.clone();
            let mut comb = zero_vector(k + 1);
            comb[k] = Rational::one();
            for (r, p, c) in &echelon {
                if w[*p].is_zero() {
                    continue;
                }
                let f = &w[*p] / &r[*p];
                let neg = -&f;
                add_scaled(&mut w, &neg, r);
                add_scaled(&mut comb[..c.len()], &neg, c);
            }
            if is_zero_vector(&w) {
                return RatPoly::new(comb);
            }
            let p = w.iter().position(|x| !x.is_zero()).unwrap_or(0);
            echelon.push((w, p, comb));
            power = self.mul_vec(&power);
        }
        unreachable!("Krylov sequence must become dependent within n+1 steps")
    }

    /// Rational eigenvalues with their eigenspaces, in increasing eigenvalue order.
    pub fn rational_eigenspaces(&self) -> Vec<(Rational, Vec<RatVector>)> {
        let p = self.minimal_polynomial();
        let n = self.rows;
        let mut out = Vec::new();
        for lambda in p.rational_roots() {
            let mut shifted = self.clone();
            for i in 0..n {
                shifted[(i, i)] -= &lambda;
            }
            out.push((lambda, shifted.kernel_basis()));
        }
        out
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;
    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = RatMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                let row = rhs.row(k);
                for (j, b) in row.iter().enumerate() {
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &RatMatrix {
    type Output = RatMatrix;
    fn add(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &RatMatrix {
    type Output = RatMatrix;
    fn sub(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &RatMatrix {
    type Output = RatMatrix;
    fn neg(self) -> RatMatrix {
        self.scale(&rat(-1))
    }
}

/// A basis of `span(vectors)` in reduced echelon form.
pub fn span_basis(vectors: &[RatVector]) -> Vec<RatVector> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let (r, pivots) = RatMatrix::from_rows(vectors).rref();
    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
}

pub fn span_dimension(vectors: &[RatVector]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    RatMatrix::from_rows(vectors).rank()
}

/// True when `v` lies in the span of `basis`.
pub fn in_span(basis: &[RatVector], v: &[Rational]) -> bool {
    if is_zero_vector(v) {
        return true;
    }
    if basis.is_empty() {
        return false;
    }
    let m = RatMatrix::from_columns(v.len(), basis);
    m.solve(v).is_some()
}

/// Intersection of two subspaces given by spanning sets.
pub fn intersect_subspaces(a: &[RatVector], b: &[RatVector], dim: usize) -> Vec<RatVector> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    // Solve sum x_i a_i - sum y_j b_j = 0.
    let mut cols: Vec<RatVector> = a.to_vec();
    cols.extend(b.iter().map(|v| v.iter().map(|x| -x).collect()));
    let m = RatMatrix::from_columns(dim, &cols);
    let kernel = m.kernel_basis();
    let vecs: Vec<RatVector> = kernel
        .iter()
        .map(|k| {
            let mut v = zero_vector(dim);
            for (i, ai) in a.iter().enumerate() {
                add_scaled(&mut v, &k[i], ai);
            }
            v
        })
        .collect();
    span_basis(&vecs)
}

/// Univariate polynomial with rational coefficients, ascending degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let coef = format_rational(&abs);
            match (k, abs.is_one()) {
                (0, _) => write!(f, "{coef}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{coef}*x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{coef}*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly { coeffs: vec![Rational::one()] }
    }

    /// `x - a`
    pub fn linear_root(a: &Rational) -> Self {
        RatPoly { coeffs: vec![-a, Rational::one()] }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => {
                let inv = l.recip();
                Self::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `p(m)` as a matrix.
    pub fn eval_matrix(&self, m: &RatMatrix) -> RatMatrix {
        assert!(m.is_square());
        let n = m.rows();
        let mut acc = RatMatrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &acc * m;
            for i in 0..n {
                acc[(i, i)] += c;
            }
        }
        acc
    }

    /// `p(m) v` by Horner's rule on vectors.
    pub fn eval_on_vector(&self, m: &RatMatrix, v: &[Rational]) -> RatVector {
        let mut acc = zero_vector(v.len());
        for c in self.coeffs.iter().rev() {
            acc = m.mul_vec(&acc);
            add_scaled(&mut acc, c, v);
        }
        acc
    }

    /// Euclidean division: `(q, r)` with `self = q * d + r`, `deg r < deg d`.
    pub fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead_inv = d.coeffs[dd].recip();
        let mut r = self.coeffs.clone();
        let mut q = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd).max(1)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let f = &r[r.len() - 1] * &lead_inv;
            if !f.is_zero() {
                for (i, c) in d.coeffs.iter().enumerate() {
                    r[k + i] -= &f * c;
                }
                q[k] = f;
            }
            r.pop();
        }
        (RatPoly::new(q), RatPoly::new(r))
    }

    /// Monic gcd (zero when both inputs are zero).
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn lcm(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let g = self.gcd(other);
        let (q, _) = (self * other).div_rem(&g);
        q.monic()
    }

    /// True iff `gcd(p, p')` is constant. The zero polynomial is rejected.
    pub fn is_squarefree(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.gcd(&self.derivative()).degree() == Some(0))
    }

    /// Distinct rational roots in increasing order.
    pub fn rational_roots(&self) -> Vec<Rational> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        // Work with the squarefree part scaled to a primitive integer polynomial.
        let sqf = {
            let g = self.gcd(&self.derivative());
            self.div_rem(&g).0
        };
        let mut ints = primitive_integral(sqf.coeffs());
        let mut roots = Vec::new();
        if ints[0].is_zero() {
            roots.push(Rational::zero());
            while ints.first().is_some_and(Zero::is_zero) {
                ints.remove(0);
            }
        }
        if ints.len() > 1 {
            let a0 = ints[0].numer().abs();
            let an = ints[ints.len() - 1].numer().abs();
            let p = RatPoly::new(ints);
            for num in divisors(&a0) {
                for den in divisors(&an) {
                    if num.gcd(&den) != BigInt::one() {
                        continue;
                    }
                    for cand in [Rational::new(num.clone(), den.clone()), -Rational::new(num.clone(), den.clone())] {
                        if p.eval(&cand).is_zero() {
                            roots.push(cand);
                        }
                    }
                }
            }
        }
        roots.sort();
        roots.dedup();
        roots
    }
}

/// Positive divisors by trial division.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut m = n.abs();
    let mut p = BigInt::from(2u32);
    while &p * &p <= m {
        let mut e = 0;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            primes.push((p.clone(), e));
        }
        p += 1u32;
    }
    if m > BigInt::one() {
        primes.push((m, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        RatPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        RatPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) - rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

/// Small integer view of a rational, when it has one.
pub fn to_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: usize, cols: usize, e: &[i64]) -> RatMatrix {
        RatMatrix::from_i64(rows, cols, e)
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(RatMatrix::identity(2).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_row_of_ones() {
        let k = m(1, 2, &[1, 1]).kernel_basis();
        assert_eq!(k, vec![vec![rat(-1), rat(1)]]);
    }

    #[test]
    fn solve_identity_and_inconsistent() {
        let b = vec![rat(3), ratio(-1, 2)];
        assert_eq!(RatMatrix::identity(2).solve(&b), Some(b.clone()));
        assert_eq!(m(2, 2, &[1, 1, 1, 1]).solve(&[rat(1), rat(0)]), None);
    }

    #[test]
    fn minimal_polynomials_of_small_matrices() {
        assert_eq!(RatMatrix::zeros(3, 3).minimal_polynomial(), RatPoly::from_i64(&[0, 1]));
        let jordan = m(2, 2, &[0, 1, 0, 0]);
        assert_eq!(jordan.minimal_polynomial(), RatPoly::from_i64(&[0, 0, 1]));
        let d = m(3, 3, &[1, 0, 0, 0, 1, 0, 0, 0, 2]);
        // (x-1)(x-2) = x^2 - 3x + 2
        assert_eq!(d.minimal_polynomial(), RatPoly::from_i64(&[2, -3, 1]));
    }

    #[test]
    fn squarefree_examples() {
        assert!(!RatPoly::from_i64(&[0, 0, 1]).is_squarefree().unwrap());
        assert!(RatPoly::from_i64(&[0, -1, 1]).is_squarefree().unwrap());
        // (x^2+1)^2 = x^4 + 2x^2 + 1
        assert!(!RatPoly::from_i64(&[1, 0, 2, 0, 1]).is_squarefree().unwrap());
        assert!(matches!(RatPoly::zero().is_squarefree(), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn eigenspaces_examples() {
        let d = m(3, 3, &[0, 0, 0, 0, 0, 0, 0, 0, 3]);
        let es = d.rational_eigenspaces();
        assert_eq!(es.len(), 2);
        assert_eq!((es[0].0.clone(), es[0].1.len()), (rat(0), 2));
        assert_eq!((es[1].0.clone(), es[1].1.len()), (rat(3), 1));

        let rotation = m(2, 2, &[0, -1, 1, 0]);
        assert!(rotation.rational_eigenspaces().is_empty());

        let jordan = m(2, 2, &[0, 1, 0, 0]);
        let es = jordan.rational_eigenspaces();
        assert_eq!(es.len(), 1);
        assert_eq!(es[0].1.len(), 1);
    }

    #[test]
    fn rational_roots_with_denominators() {
        // (2x - 1)(3x + 2) = 6x^2 + x - 2
        let p = RatPoly::from_i64(&[-2, 1, 6]);
        assert_eq!(p.rational_roots(), vec![ratio(-2, 3), ratio(1, 2)]);
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(3, 3, &[2, 1, 0, 0, 1, 3, 1, 0, 1]);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, RatMatrix::identity(3));
        assert!(m(2, 2, &[1, 2, 2, 4]).inverse().is_none());
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("-6/4").unwrap(), ratio(-3, 2));
        assert_eq!(format_rational(&ratio(-3, 2)), "-3/2");
        assert_eq!(format_rational(&rat(7)), "7");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn primitive_integral_scaling() {
        let v = vec![ratio(-1, 2), rat(0), ratio(3, 4)];
        assert_eq!(primitive_integral(&v), vec![rat(2), rat(0), rat(-3)]);
    }
}
