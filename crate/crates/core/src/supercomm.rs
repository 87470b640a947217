//! Finite-dimensional supercommutative algebras with an odd derivation, and
//! the construction of `f` with `u(f) = 1` for a non-vanishing `u` whose
//! square acts semisimply.

use num_traits::{One, Zero};

use crate::enveloping::{CoinvariantSpace, Side};
use crate::error::{Error, Result};
use crate::linalg::{add_scaled, is_zero_vector, rat, unit_vector, zero_vector, RatMatrix, RatVector, Rational};
use crate::superalgebra::{LieSuperalgebra, Parity};

/// A finite-dimensional superalgebra given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupercommAlgebra {
    name: String,
    labels: Vec<String>,
    parity: Vec<Parity>,
    /// `left[i]` is the matrix of `x -> e_i x`.
    left: Vec<RatMatrix>,
    unit: RatVector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraViolation {
    Parity { i: usize, j: usize },
    Supercommutativity { i: usize, j: usize },
    Associativity { i: usize, j: usize, k: usize },
    Unit { i: usize },
    /// The derivation does not reverse parity on basis vector `j`.
    DerivationParity { j: usize },
    Leibniz { i: usize, j: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraReport {
    pub violations: Vec<AlgebraViolation>,
}

impl AlgebraReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl SupercommAlgebra {
    /// `entries` are `(i, j, k, c)` meaning `e_i e_j` has `c` on `e_k`.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        parity: Vec<Parity>,
        entries: impl IntoIterator<Item = (usize, usize, usize, Rational)>,
        unit: RatVector,
    ) -> Result<Self> {
        let d = parity.len();
        if labels.len() != d || unit.len() != d {
            return Err(Error::DimensionMismatch { expected: d, got: labels.len().min(unit.len()) });
        }
        let mut left = vec![RatMatrix::zeros(d, d); d];
        for (i, j, k, c) in entries {
            if i >= d || j >= d || k >= d {
                return Err(Error::Invalid(format!("multiplication index ({i}, {j}, {k}) out of range")));
            }
            let slot = &mut left[i][(k, j)];
            *slot += c;
        }
        Ok(SupercommAlgebra { name: name.into(), labels, parity, left, unit })
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

    pub fn parities(&self) -> &[Parity] {
        &self.parity
    }

    pub fn unit(&self) -> &RatVector {
        &self.unit
    }

    pub fn basis_vector(&self, i: usize) -> RatVector {
        unit_vector(self.dim(), i)
    }

    /// Entries `(i, j, k, c)` of the multiplication table.
    pub fn table_entries(&self) -> Vec<(usize, usize, usize, Rational)> {
        let d = self.dim();
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let c = &self.left[i][(k, j)];
                    if !c.is_zero() {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `x`.
    pub fn left_mult(&self, x: &[Rational]) -> RatMatrix {
        let d = self.dim();
        let mut m = RatMatrix::zeros(d, d);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m.add_scaled(c, &self.left[i]);
            }
        }
        m
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> RatVector {
        self.left_mult(x).mul_vec(y)
    }

    pub fn is_even_element(&self, x: &[Rational]) -> bool {
        x.iter().zip(&self.parity).all(|(c, p)| p.is_even() || c.is_zero())
    }

    pub fn is_odd_element(&self, x: &[Rational]) -> bool {
        x.iter().zip(&self.parity).all(|(c, p)| p.is_odd() || c.is_zero())
    }

    pub fn format_element(&self, x: &[Rational]) -> String {
        crate::format::linear_combination(x.iter().enumerate().map(|(i, c)| (c, self.labels[i].as_str())))
    }

    /// Parity, supercommutativity, associativity and unit checks on all basis tuples.
    pub fn validate(&self) -> AlgebraReport {
        let d = self.dim();
        let mut violations = Vec::new();
        let products: Vec<Vec<RatVector>> =
            (0..d).map(|i| (0..d).map(|j| self.left[i].column(j)).collect()).collect();
        for i in 0..d {
            for j in 0..d {
                let expected = self.parity[i].add(self.parity[j]);
                let p = &products[i][j];
                if p.iter().zip(&self.parity).any(|(c, q)| !c.is_zero() && *q != expected) {
                    violations.push(AlgebraViolation::Parity { i, j });
                }
                let s = rat(self.parity[i].koszul(self.parity[j]));
                let swapped: RatVector = products[j][i].iter().map(|c| c * &s).collect();
                if j > i && *p != swapped {
                    violations.push(AlgebraViolation::Supercommutativity { i, j });
                }
            }
        }
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let lhs = self.mul(&products[i][j], &self.basis_vector(k));
                    let rhs = self.left[i].mul_vec(&products[j][k]);
                    if lhs != rhs {
                        violations.push(AlgebraViolation::Associativity { i, j, k });
                    }
                }
            }
        }
        for i in 0..d {
            let e = self.basis_vector(i);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                violations.push(AlgebraViolation::Unit { i });
            }
        }
        AlgebraReport { violations }
    }

    /// Super-Leibniz `u(ab) = u(a) b + (-1)^{|a|} a u(b)` and parity reversal.
    pub fn validate_derivation(&self, u: &OddDerivation) -> AlgebraReport {
        let d = self.dim();
        let mut violations = Vec::new();
        if u.matrix.rows() != d || u.matrix.cols() != d {
            violations.push(AlgebraViolation::DerivationParity { j: 0 });
            return AlgebraReport { violations };
        }
        for j in 0..d {
            let col = u.matrix.column(j);
            if col.iter().zip(&self.parity).any(|(c, q)| !c.is_zero() && *q == self.parity[j]) {
                violations.push(AlgebraViolation::DerivationParity { j });
            }
        }
        for i in 0..d {
            for j in 0..d {
                let (a, b) = (self.basis_vector(i), self.basis_vector(j));
                let lhs = u.apply(&self.mul(&a, &b));
                let mut rhs = self.mul(&u.apply(&a), &b);
                let s = rat(if self.parity[i].is_odd() { -1 } else { 1 });
                add_scaled(&mut rhs, &s, &self.mul(&a, &u.apply(&b)));
                if lhs != rhs {
                    violations.push(AlgebraViolation::Leibniz { i, j });
                }
            }
        }
        AlgebraReport { violations }
    }
}

/// A parity-reversing derivation, as a matrix on the algebra's basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddDerivation {
    pub matrix: RatMatrix,
}

impl OddDerivation {
    pub fn new(matrix: RatMatrix) -> Self {
        OddDerivation { matrix }
    }

    pub fn apply(&self, x: &[Rational]) -> RatVector {
        self.matrix.mul_vec(x)
    }

    /// `u^2 = [u, u] / 2`, an even derivation.
    pub fn square(&self) -> RatMatrix {
        &self.matrix * &self.matrix
    }
}

/// Whether the ideal generated by `u(A)` is all of `A`, i.e. the span of
/// `A u(A)` contains the unit.
pub fn is_nonvanishing(a: &SupercommAlgebra, u: &OddDerivation) -> bool {
    unit_decomposition(a, u, false).is_some()
}

/// Coefficients `c` with `sum c_ij e_i u(e_j) = 1`, optionally restricted to
/// even `e_i` and odd `e_j`.
fn unit_decomposition(a: &SupercommAlgebra, u: &OddDerivation, even_odd: bool) -> Option<Vec<(usize, usize, Rational)>> {
    let d = a.dim();
    let mut pairs = Vec::new();
    let mut cols = Vec::new();
    for i in 0..d {
        for j in 0..d {
            if even_odd && !(a.parity[i].is_even() && a.parity[j].is_odd()) {
                continue;
            }
            let v = a.mul(&a.basis_vector(i), &u.apply(&a.basis_vector(j)));
            if !is_zero_vector(&v) {
                pairs.push((i, j));
                cols.push(v);
            }
        }
    }
    if cols.is_empty() {
        return None;
    }
    let sol = RatMatrix::from_columns(d, &cols).solve(&a.unit)?;
    Some(pairs.into_iter().zip(sol).filter(|(_, c)| !c.is_zero()).map(|((i, j), c)| (i, j, c)).collect())
}

/// Inverse of `1 + n` for nilpotent `n` by the finite geometric series.
fn invert_unipotent(a: &SupercommAlgebra, x: &[Rational]) -> Result<RatVector> {
    let mut n = x.to_vec();
    add_scaled(&mut n, &rat(-1), &a.unit);
    let mut term = a.unit.clone();
    let mut inv = a.unit.clone();
    let minus_n: RatVector = n.iter().map(|c| -c).collect();
    for _ in 0..a.dim() {
        term = a.mul(&term, &minus_n);
        if is_zero_vector(&term) {
            return Ok(inv);
        }
        add_scaled(&mut inv, &Rational::one(), &term);
    }
    Err(Error::Invalid("element is not unipotent".into()))
}

/// Whether `x^k = 0` for some `k <= dim A`.
pub fn is_nilpotent(a: &SupercommAlgebra, x: &[Rational]) -> bool {
    let mut p = x.to_vec();
    for _ in 0..a.dim() {
        if is_zero_vector(&p) {
            return true;
        }
        p = a.mul(&p, x);
    }
    is_zero_vector(&p)
}

/// Intermediate data of the construction, kept for inspection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingWitness {
    /// Odd `p` with `u(p) = 1 + eta`.
    pub p: RatVector,
    /// Nilpotent part of `u(p)`.
    pub eta: RatVector,
    /// Component of `p` in the kernel of `h = u^2`.
    pub p0: RatVector,
    /// `u(p0)`, a unit killed by `u`.
    pub alpha: RatVector,
    /// `f = p0 / alpha`, satisfying `u(f) = 1`.
    pub f: RatVector,
}

/// Constructs odd `f` with `u(f) = 1`.
///
/// 1. Write `1 = sum c_ij g_i u(x_j)` with `g_i` even and `x_j` odd (after
///    absorbing a unipotent factor), and set `p = sum c_ij g_i x_j`, so that
///    `u(p) = 1 + eta` with `eta` in the square of the odd part.
/// 2. Project `p` to the kernel of `h = u^2`; `h` commutes with `u`, so
///    `alpha = u(p0) = 1 + eta0` with `u(alpha) = h(p0) = 0`.
/// 3. Return `f = p0 alpha^{-1}`.
pub fn splitting_witness(a: &SupercommAlgebra, u: &OddDerivation) -> Result<SplittingWitness> {
    let d = a.dim();
    let all = unit_decomposition(a, u, false).ok_or(Error::Vanishing)?;
    let h = u.square();
    let eig = h.rational_eigenspaces();
    let found: usize = eig.iter().map(|(_, v)| v.len()).sum();
    if found != d {
        return Err(Error::NonSemisimpleSquare);
    }
    // q = sum over (even, odd) pairs; the remaining terms lie in the square of the odd part.
    let mut q = zero_vector(d);
    let mut even_odd = Vec::new();
    for (i, j, c) in &all {
        if a.parity[*i].is_even() && a.parity[*j].is_odd() {
            let v = a.mul(&a.basis_vector(*i), &u.apply(&a.basis_vector(*j)));
            add_scaled(&mut q, c, &v);
            even_odd.push((*i, *j, c.clone()));
        }
    }
    let w = invert_unipotent(a, &q)?;
    let mut p = zero_vector(d);
    for (i, j, c) in &even_odd {
        let g = a.mul(&w, &a.basis_vector(*i));
        add_scaled(&mut p, c, &a.mul(&g, &a.basis_vector(*j)));
    }
    let mut eta = u.apply(&p);
    add_scaled(&mut eta, &rat(-1), &a.unit);
    // Kernel component of p along the eigenspace decomposition of h.
    let mut columns = Vec::new();
    let mut zero_cols = Vec::new();
    for (lambda, vecs) in &eig {
        for v in vecs {
            if lambda.is_zero() {
                zero_cols.push(columns.len());
            }
            columns.push(v.clone());
        }
    }
    let coords = RatMatrix::from_columns(d, &columns)
        .solve(&p)
        .expect("eigenvectors of a diagonalizable operator form a basis");
    let mut p0 = zero_vector(d);
    for &k in &zero_cols {
        add_scaled(&mut p0, &coords[k], &columns[k]);
    }
    let alpha = u.apply(&p0);
    let alpha_inv = invert_unipotent(a, &alpha)?;
    let f = a.mul(&p0, &alpha_inv);
    Ok(SplittingWitness { p, eta, p0, alpha, f })
}

/// Whether the unit lies in the image of `u`, so that `k 1` cannot split off
/// as a `u`-stable summand.
pub fn verify_no_splitting(a: &SupercommAlgebra, u: &OddDerivation) -> bool {
    u.matrix.solve(&a.unit).is_some()
}

/// `Lambda(xi)` with `u = d/dxi`.
pub fn exterior_one() -> (SupercommAlgebra, OddDerivation) {
    let a = SupercommAlgebra::new(
        "Lambda(xi)",
        vec!["1".into(), "xi".into()],
        vec![Parity::Even, Parity::Odd],
        [(0, 0, 0, rat(1)), (0, 1, 1, rat(1)), (1, 0, 1, rat(1))],
        unit_vector(2, 0),
    )
    .expect("well-formed table");
    let mut m = RatMatrix::zeros(2, 2);
    m[(0, 1)] = rat(1);
    (a, OddDerivation::new(m))
}

/// `A ⊗ Lambda(xi)` for `A = k[x]/(x^2 - c)`, basis `1, x, xi, x xi`.
fn quadratic_times_exterior(name: &str, c: i64) -> SupercommAlgebra {
    // Index = 2 * (xi exponent) + (x exponent).
    let mut entries = Vec::new();
    for i in 0..4usize {
        for j in 0..4usize {
            let (xi_i, x_i) = (i / 2, i % 2);
            let (xi_j, x_j) = (j / 2, j % 2);
            if xi_i + xi_j > 1 {
                continue;
            }
            let (x_pow, coeff) = if x_i + x_j == 2 { (0, rat(c)) } else { (x_i + x_j, rat(1)) };
            if !coeff.is_zero() {
                entries.push((i, j, 2 * (xi_i + xi_j) + x_pow, coeff));
            }
        }
    }
    SupercommAlgebra::new(
        name,
        vec!["1".into(), "x".into(), "xi".into(), "x*xi".into()],
        vec![Parity::Even, Parity::Even, Parity::Odd, Parity::Odd],
        entries,
        unit_vector(4, 0),
    )
    .expect("well-formed table")
}

/// `k[x]/(x^2 - 1) ⊗ Lambda(xi)` with `u = x d/dxi`.
pub fn quadratic_unit_example() -> (SupercommAlgebra, OddDerivation) {
    let a = quadratic_times_exterior("k[x]/(x^2-1) x Lambda(xi)", 1);
    let mut m = RatMatrix::zeros(4, 4);
    m[(1, 2)] = rat(1); // u(xi) = x
    m[(0, 3)] = rat(1); // u(x xi) = x^2 = 1
    (a, OddDerivation::new(m))
}

/// `Lambda(xi) ⊗ k[x]/(x^2)` with `u(xi) = x`: the ideal generated by the
/// image of `u` is proper.
pub fn vanishing_example() -> (SupercommAlgebra, OddDerivation) {
    let a = quadratic_times_exterior("Lambda(xi) x k[x]/(x^2)", 0);
    let mut m = RatMatrix::zeros(4, 4);
    m[(1, 2)] = rat(1);
    (a, OddDerivation::new(m))
}

/// `Lambda(g1*)`, realized as the dual of the left coinvariant coalgebra
/// `U/(U g0)`, with the odd derivation induced by `u in g1`.
///
/// The basis `phi_S` is dual to the subset basis `x_S`. The product is dual
/// to the coproduct `x_S -> sum_T (shuffle sign) x_T ⊗ x_{S\T}`, and `z`
/// acts by `(z phi)(w) = -(-1)^{|z||phi|} phi(z w)`.
pub fn coinvariant_dual(g: &LieSuperalgebra, u: &[Rational]) -> Result<(SupercommAlgebra, OddDerivation)> {
    if u.len() != g.dim() {
        return Err(Error::DimensionMismatch { expected: g.dim(), got: u.len() });
    }
    if !g.is_odd_element(u) {
        return Err(Error::NotOdd);
    }
    let space = CoinvariantSpace::new(g, Side::Left);
    let n = space.dim();
    let parity: Vec<Parity> = (0..n).map(|m| space.subset_parity(m)).collect();
    let labels: Vec<String> = (0..n)
        .map(|m| if m == 0 { "1".to_string() } else { format!("phi[{}]", space.subset_label(m)) })
        .collect();
    let mut entries = Vec::new();
    for t in 0..n {
        for r in 0..n {
            if t & r != 0 {
                continue;
            }
            // (phi_T phi_R)(x_{T+R}) = (-1)^{|T||R|} times the shuffle sign of (T, R).
            let crossings: u32 = (0..usize::BITS)
                .filter(|b| r >> b & 1 == 1)
                .map(|b| (t >> (b + 1)).count_ones())
                .sum();
            let koszul = t.count_ones() * r.count_ones();
            let sign = if (crossings + koszul).is_multiple_of(2) { 1 } else { -1 };
            entries.push((t, r, t | r, rat(sign)));
        }
    }
    let algebra = SupercommAlgebra::new(format!("Lambda(g1*) for {}", g.name()), labels, parity.clone(), entries, unit_vector(n, 0))?;
    let mut rho = RatMatrix::zeros(n, n);
    for (i, c) in u.iter().enumerate() {
        if !c.is_zero() {
            rho.add_scaled(c, &space.action_matrix(i));
        }
    }
    let mut m = RatMatrix::zeros(n, n);
    for t in 0..n {
        for s in 0..n {
            let sign = if parity[s].is_odd() { rat(1) } else { rat(-1) };
            m[(t, s)] = &rho[(s, t)] * sign;
        }
    }
    Ok((algebra, OddDerivation::new(m)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn catalog_algebras_are_valid() {
        for (a, u) in [exterior_one(), quadratic_unit_example(), vanishing_example()] {
            assert!(a.validate().is_valid(), "{}", a.name());
            assert!(a.validate_derivation(&u).is_valid(), "{}", a.name());
        }
    }

    #[test]
    fn exterior_witness() {
        let (a, u) = exterior_one();
        let w = splitting_witness(&a, &u).unwrap();
        assert_eq!(w.f, vec![rat(0), rat(1)]);
        assert!(verify_no_splitting(&a, &u));
        let zero = OddDerivation::new(RatMatrix::zeros(2, 2));
        assert!(!verify_no_splitting(&a, &zero));
        assert!(!is_nonvanishing(&a, &zero));
    }

    #[test]
    fn quadratic_witness() {
        let (a, u) = quadratic_unit_example();
        let w = splitting_witness(&a, &u).unwrap();
        assert_eq!(u.apply(&w.f), *a.unit());
        assert_eq!(w.f, vec![rat(0), rat(0), rat(0), rat(1)]);
    }

    #[test]
    fn vanishing_is_rejected() {
        let (a, u) = vanishing_example();
        assert!(!is_nonvanishing(&a, &u));
        assert_eq!(splitting_witness(&a, &u), Err(Error::Vanishing));
    }

    #[test]
    fn coinvariant_duals_are_valid() {
        let g = families::build_gl(1, 1);
        let u = {
            let mut v = g.basis_vector(g.index_of("E12").unwrap());
            v[g.index_of("E21").unwrap()] = rat(1);
            v
        };
        let (a, d) = coinvariant_dual(&g, &u).unwrap();
        assert!(a.validate().is_valid());
        assert!(a.validate_derivation(&d).is_valid());
    }

    #[test]
    fn corrupted_leibniz_reported() {
        let (a, mut u) = quadratic_unit_example();
        u.matrix[(0, 3)] = rat(2);
        let report = a.validate_derivation(&u);
        assert!(report.violations.iter().any(|v| matches!(v, AlgebraViolation::Leibniz { .. })));
    }
}
