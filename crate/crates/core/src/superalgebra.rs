//! Finite-dimensional Lie superalgebras given by rational structure constants.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{add_scaled, is_zero_vector, rat, zero_vector, RatMatrix, RatVector, Rational};
use crate::reps::SuperModule;

/// Z/2 degree of a homogeneous vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(odd: bool) -> Self {
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn is_even(self) -> bool {
        self == Parity::Even
    }

    /// Parity of a product of homogeneous elements.
    pub fn add(self, other: Parity) -> Parity {
        Parity::from_bit(self.is_odd() != other.is_odd())
    }

    /// The Koszul sign `(-1)^{|a||b|}`.
    pub fn koszul(self, other: Parity) -> i64 {
        if self.is_odd() && other.is_odd() {
            -1
        } else {
            1
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Sparse structure-constant row: `[e_i, e_j] = sum c * e_k`.
pub type SparseVec = Vec<(usize, Rational)>;

/// A Lie superalgebra over the rationals.
///
/// `[e_i, e_j] = sum_k c[i][j][k] e_k`. The optional faithful representation is
/// what element semisimplicity is measured in; the optional Cartan is a list
/// of even basis indices spanning a split Cartan subalgebra of the even part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieSuperalgebra {
    name: String,
    labels: Vec<String>,
    parity: Vec<Parity>,
    table: Vec<SparseVec>,
    faithful_rep: Option<SuperModule>,
    cartan: Option<Vec<usize>>,
}

/// An element supported on odd basis indices only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddElement(RatVector);

impl OddElement {
    pub fn new(g: &LieSuperalgebra, coords: RatVector) -> Result<Self> {
        g.check_len(&coords)?;
        if !g.is_odd_element(&coords) {
            return Err(Error::NotOdd);
        }
        Ok(OddElement(coords))
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> RatVector {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.0)
    }
}

/// One failed axiom instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    /// `c[i][j][k] != 0` although `|k| != |i| + |j|`.
    Parity { i: usize, j: usize, k: usize },
    /// `[e_i, e_j] != -(-1)^{|i||j|} [e_j, e_i]`.
    Antisymmetry { i: usize, j: usize },
    /// Super Jacobi identity fails on `(e_i, e_j, e_k)`.
    Jacobi { i: usize, j: usize, k: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<AxiomViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn describe(&self, g: &LieSuperalgebra) -> Vec<String> {
        let l = |i: usize| g.labels[i].as_str();
        self.violations
            .iter()
            .map(|v| match *v {
                AxiomViolation::Parity { i, j, k } => {
                    format!("parity: [{}, {}] has a component on {}", l(i), l(j), l(k))
                }
                AxiomViolation::Antisymmetry { i, j } => {
                    format!("antisymmetry: [{}, {}] vs [{}, {}]", l(i), l(j), l(j), l(i))
                }
                AxiomViolation::Jacobi { i, j, k } => {
                    format!("jacobi: ({}, {}, {})", l(i), l(j), l(k))
                }
            })
            .collect()
    }
}

impl LieSuperalgebra {
    /// Assembles an algebra from `(i, j, k, c)` entries meaning `c[i][j][k] += c`.
    /// No axioms are checked here; see [`LieSuperalgebra::validate`].
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        parity: Vec<Parity>,
        entries: impl IntoIterator<Item = (usize, usize, usize, Rational)>,
    ) -> Result<Self> {
        let dim = parity.len();
        if labels.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, got: labels.len() });
        }
        let mut dense: Vec<Vec<Rational>> = Vec::new();
        let mut touched = vec![false; dim * dim];
        dense.resize_with(dim * dim, Vec::new);
        for (i, j, k, c) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::Invalid(format!("structure constant index ({i}, {j}, {k}) out of range")));
            }
            let slot = &mut dense[i * dim + j];
            if !touched[i * dim + j] {
                *slot = zero_vector(dim);
                touched[i * dim + j] = true;
            }
            slot[k] += c;
        }
        let table = dense
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect()
            })
            .collect();
        Ok(LieSuperalgebra {
            name: name.into(),
            labels,
            parity,
            table,
            faithful_rep: None,
            cartan: None,
        })
    }

    /// The zero-dimensional algebra.
    pub fn zero() -> Self {
        LieSuperalgebra::new("0", Vec::new(), Vec::new(), [])
            .expect("empty algebra")
            .with_faithful_rep(SuperModule::new(Vec::new(), Vec::new()))
    }

    pub fn with_faithful_rep(mut self, rep: SuperModule) -> Self {
        self.faithful_rep = Some(rep);
        self
    }

    pub fn with_cartan(mut self, cartan: Vec<usize>) -> Self {
        self.cartan = Some(cartan);
        self
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parity
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parity[i]
    }

    pub fn even_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.parity[i].is_even()).collect()
    }

    pub fn odd_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.parity[i].is_odd()).collect()
    }

    pub fn odd_dim(&self) -> usize {
        self.parity.iter().filter(|p| p.is_odd()).count()
    }

    pub fn faithful_rep(&self) -> Option<&SuperModule> {
        self.faithful_rep.as_ref()
    }

    pub fn cartan(&self) -> Option<&[usize]> {
        self.cartan.as_deref()
    }

    /// `[e_i, e_j]` as sparse coordinates.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.table[i * self.dim() + j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.bracket_basis(i, j)
            .iter()
            .find(|(kk, _)| *kk == k)
            .map_or_else(Rational::zero, |(_, c)| c.clone())
    }

    /// All nonzero structure constants in `(i, j, k)` order.
    pub fn structure_entries(&self) -> Vec<(usize, usize, usize, Rational)> {
        let d = self.dim();
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for (k, c) in self.bracket_basis(i, j) {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    /// Overwrites one structure constant. Only meant for building corrupted
    /// inputs in tests and the verification driver.
    pub fn set_structure_constant(&mut self, i: usize, j: usize, k: usize, c: Rational) {
        let d = self.dim();
        let row = &mut self.table[i * d + j];
        row.retain(|(kk, _)| *kk != k);
        if !c.is_zero() {
            row.push((k, c));
            row.sort_by_key(|(kk, _)| *kk);
        }
    }

    pub(crate) fn check_len(&self, x: &[Rational]) -> Result<()> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: x.len() });
        }
        Ok(())
    }

    pub fn is_odd_element(&self, x: &[Rational]) -> bool {
        x.iter().zip(&self.parity).all(|(c, p)| p.is_odd() || c.is_zero())
    }

    pub fn is_even_element(&self, x: &[Rational]) -> bool {
        x.iter().zip(&self.parity).all(|(c, p)| p.is_even() || c.is_zero())
    }

    /// `[e_i, y]`
    pub fn bracket_with_basis(&self, i: usize, y: &[Rational]) -> RatVector {
        let mut out = zero_vector(self.dim());
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            for (k, c) in self.bracket_basis(i, j) {
                out[*k] += yj * c;
            }
        }
        out
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<RatVector> {
        self.check_len(x)?;
        self.check_len(y)?;
        let mut out = zero_vector(self.dim());
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            add_scaled(&mut out, xi, &self.bracket_with_basis(i, y));
        }
        Ok(out)
    }

    /// Matrix of `ad(x)` in the basis; column `j` holds `[x, e_j]`.
    pub fn ad_matrix(&self, x: &[Rational]) -> RatMatrix {
        let d = self.dim();
        let mut m = RatMatrix::zeros(d, d);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..d {
                for (k, c) in self.bracket_basis(i, j) {
                    m[(*k, j)] += xi * c;
                }
            }
        }
        m
    }

    /// `u^2 = [u, u] / 2` for purely odd `u`.
    pub fn odd_square(&self, u: &[Rational]) -> Result<RatVector> {
        self.check_len(u)?;
        if !self.is_odd_element(u) {
            return Err(Error::NotOdd);
        }
        let half = Rational::new(1.into(), 2.into());
        Ok(self.bracket(u, u)?.iter().map(|x| x * &half).collect())
    }

    /// Image of `x` in the designated faithful representation.
    pub fn rep_matrix(&self, x: &[Rational]) -> Result<RatMatrix> {
        self.check_len(x)?;
        let rep = self
            .faithful_rep
            .as_ref()
            .ok_or_else(|| Error::MissingFaithfulRep(self.name.clone()))?;
        Ok(rep.act(x))
    }

    /// Whether the even element `x` acts diagonalizably (over an algebraic
    /// closure) in the faithful representation.
    pub fn is_semisimple_element(&self, x: &[Rational]) -> Result<bool> {
        self.check_len(x)?;
        if !self.is_even_element(x) {
            return Err(Error::NotEven);
        }
        let m = self.rep_matrix(x)?;
        if m.rows() == 0 {
            return Ok(true);
        }
        m.minimal_polynomial().is_squarefree()
    }

    /// Membership of `u` in the cone of odd elements with semisimple square.
    pub fn in_g1ss(&self, u: &[Rational]) -> Result<bool> {
        let h = self.odd_square(u)?;
        self.is_semisimple_element(&h)
    }

    /// Checks parity homogeneity, super-antisymmetry and the super Jacobi
    /// identity on every basis instance.
    pub fn validate(&self) -> ValidationReport {
        let d = self.dim();
        let mut violations = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let expected = self.parity[i].add(self.parity[j]);
                for (k, _) in self.bracket_basis(i, j) {
                    if self.parity[*k] != expected {
                        violations.push(AxiomViolation::Parity { i, j, k: *k });
                    }
                }
            }
        }
        for i in 0..d {
            for j in i..d {
                let s = rat(-self.parity[i].koszul(self.parity[j]));
                let mut lhs = zero_vector(d);
                for (k, c) in self.bracket_basis(i, j) {
                    lhs[*k] += c;
                }
                for (k, c) in self.bracket_basis(j, i) {
                    lhs[*k] -= &s * c;
                }
                if !is_zero_vector(&lhs) {
                    violations.push(AxiomViolation::Antisymmetry { i, j });
                }
            }
        }
        for i in 0..d {
            for j in i..d {
                for k in j..d {
                    if !self.jacobiator(i, j, k).iter().all(Zero::is_zero) {
                        violations.push(AxiomViolation::Jacobi { i, j, k });
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    /// `(-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]]`
    fn jacobiator(&self, i: usize, j: usize, k: usize) -> RatVector {
        let d = self.dim();
        let p = &self.parity;
        let mut out = zero_vector(d);
        let mut term = |a: usize, b: usize, c: usize, sign: i64| {
            let mut inner = zero_vector(d);
            for (m, x) in self.bracket_basis(b, c) {
                inner[*m] += x;
            }
            let outer = self.bracket_with_basis(a, &inner);
            add_scaled(&mut out, &rat(sign), &outer);
        };
        term(i, j, k, p[i].koszul(p[k]));
        term(j, k, i, p[j].koszul(p[i]));
        term(k, i, j, p[k].koszul(p[j]));
        out
    }

    /// Basis of the center `{x : [x, e_i] = 0 for all i}`.
    pub fn center(&self) -> Vec<RatVector> {
        let d = self.dim();
        if d == 0 {
            return Vec::new();
        }
        // Row (j, k): sum_i x_i c[i][j][k] = 0.
        let mut m = RatMatrix::zeros(d * d, d);
        for i in 0..d {
            for j in 0..d {
                for (k, c) in self.bracket_basis(i, j) {
                    m[(j * d + k, i)] = c.clone();
                }
            }
        }
        m.kernel_basis()
    }

    /// Coordinates of `x` restricted to the even part, as a full-length vector.
    pub fn even_component(&self, x: &[Rational]) -> RatVector {
        x.iter()
            .zip(&self.parity)
            .map(|(c, p)| if p.is_even() { c.clone() } else { Rational::zero() })
            .collect()
    }

    pub fn odd_component(&self, x: &[Rational]) -> RatVector {
        x.iter()
            .zip(&self.parity)
            .map(|(c, p)| if p.is_odd() { c.clone() } else { Rational::zero() })
            .collect()
    }

    /// Coordinates in the canonical basis formatted with labels, e.g. `E12 + E21`.
    pub fn format_element(&self, x: &[Rational]) -> String {
        crate::format::linear_combination(x.iter().enumerate().map(|(i, c)| (c, self.labels[i].as_str())))
    }

    pub fn basis_vector(&self, i: usize) -> RatVector {
        let mut v = zero_vector(self.dim());
        v[i] = Rational::one();
        v
    }
}
