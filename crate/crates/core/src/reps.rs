//! Finite-dimensional super modules, the trace-form semisimplicity test, and
//! the Duflo–Serganova functor `V -> (V^h)_u`.

use num_traits::{One, Zero};

use crate::enveloping::{CoinvariantSpace, Side};
use crate::error::{Error, Result};
use crate::linalg::{
    add_scaled, in_span, is_zero_vector, rat, span_basis, span_dimension, zero_vector, RatMatrix, RatVector,
    Rational,
};
use crate::superalgebra::{LieSuperalgebra, Parity};

/// A parity-graded vector space with one action matrix per basis element of
/// the acting Lie superalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperModule {
    parity: Vec<Parity>,
    action: Vec<RatMatrix>,
}

/// One failed instance of the super-representation axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleViolation {
    /// Wrong number of action matrices or wrong matrix shape.
    Shape(String),
    /// `rho(e_i)` does not have the parity of `e_i`.
    Parity { i: usize },
    /// `rho([e_i, e_j]) != rho(e_i) rho(e_j) - (-1)^{|i||j|} rho(e_j) rho(e_i)`.
    Bracket { i: usize, j: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ModuleReport {
    pub violations: Vec<ModuleViolation>,
}

impl ModuleReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl SuperModule {
    pub fn new(parity: Vec<Parity>, action: Vec<RatMatrix>) -> Self {
        SuperModule { parity, action }
    }

    /// The one-dimensional even module on which everything acts by zero.
    pub fn trivial(g: &LieSuperalgebra) -> Self {
        SuperModule::new(vec![Parity::Even], vec![RatMatrix::zeros(1, 1); g.dim()])
    }

    /// The adjoint module.
    pub fn adjoint(g: &LieSuperalgebra) -> Self {
        let action = (0..g.dim()).map(|i| g.ad_matrix(&g.basis_vector(i))).collect();
        SuperModule::new(g.parities().to_vec(), action)
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parity
    }

    pub fn even_dim(&self) -> usize {
        self.parity.iter().filter(|p| p.is_even()).count()
    }

    pub fn odd_dim(&self) -> usize {
        self.dim() - self.even_dim()
    }

    pub fn action(&self, i: usize) -> &RatMatrix {
        &self.action[i]
    }

    pub fn actions(&self) -> &[RatMatrix] {
        &self.action
    }

    pub fn set_action(&mut self, i: usize, m: RatMatrix) {
        self.action[i] = m;
    }

    /// `rho(x)` for a coordinate vector `x` in the algebra's basis.
    pub fn act(&self, x: &[Rational]) -> RatMatrix {
        let n = self.dim();
        let mut m = RatMatrix::zeros(n, n);
        for (a, c) in self.action.iter().zip(x) {
            if !c.is_zero() {
                m.add_scaled(c, a);
            }
        }
        m
    }

    /// Checks parity homogeneity and the representation law on all basis pairs.
    pub fn validate(&self, g: &LieSuperalgebra) -> ModuleReport {
        let mut violations = Vec::new();
        let n = self.dim();
        if self.action.len() != g.dim() {
            violations.push(ModuleViolation::Shape(format!(
                "{} action matrices for an algebra of dimension {}",
                self.action.len(),
                g.dim()
            )));
            return ModuleReport { violations };
        }
        if let Some(bad) = self.action.iter().position(|m| m.rows() != n || m.cols() != n) {
            violations.push(ModuleViolation::Shape(format!("action matrix {bad} is not {n}x{n}")));
            return ModuleReport { violations };
        }
        for (i, m) in self.action.iter().enumerate() {
            let shift = g.parity(i);
            let homogeneous = (0..n).all(|r| {
                (0..n).all(|c| m[(r, c)].is_zero() || self.parity[r] == self.parity[c].add(shift))
            });
            if !homogeneous {
                violations.push(ModuleViolation::Parity { i });
            }
        }
        for i in 0..g.dim() {
            for j in i..g.dim() {
                let lhs = self.act(&bracket_coords(g, i, j));
                let ab = &self.action[i] * &self.action[j];
                let ba = &self.action[j] * &self.action[i];
                let s = rat(g.parity(i).koszul(g.parity(j)));
                let mut rhs = ab;
                rhs.add_scaled(&-s, &ba);
                if lhs != rhs {
                    violations.push(ModuleViolation::Bracket { i, j });
                }
            }
        }
        ModuleReport { violations }
    }

    /// `M (x) N` with `x.(m (x) n) = xm (x) n + (-1)^{|x||m|} m (x) xn`.
    pub fn tensor(&self, other: &SuperModule) -> SuperModule {
        assert_eq!(self.action.len(), other.action.len(), "modules over different algebras");
        let (dm, dn) = (self.dim(), other.dim());
        let parity: Vec<Parity> = (0..dm)
            .flat_map(|p| (0..dn).map(move |q| (p, q)))
            .map(|(p, q)| self.parity[p].add(other.parity[q]))
            .collect();
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| {
                let odd = acts_oddly(a, &self.parity) || acts_oddly(b, &other.parity);
                let mut m = RatMatrix::zeros(dm * dn, dm * dn);
                for p2 in 0..dm {
                    for p in 0..dm {
                        let x = &a[(p2, p)];
                        if x.is_zero() {
                            continue;
                        }
                        for q in 0..dn {
                            m[(p2 * dn + q, p * dn + q)] += x;
                        }
                    }
                }
                for p in 0..dm {
                    let sign = if odd && self.parity[p].is_odd() { rat(-1) } else { rat(1) };
                    for q2 in 0..dn {
                        for q in 0..dn {
                            let y = &b[(q2, q)];
                            if !y.is_zero() {
                                m[(p * dn + q2, p * dn + q)] += &sign * y;
                            }
                        }
                    }
                }
                m
            })
            .collect();
        SuperModule::new(parity, action)
    }

    /// Dual module: `(x.f)(m) = -(-1)^{|x||f|} f(x.m)`.
    pub fn dual(&self) -> SuperModule {
        let n = self.dim();
        let action = self
            .action
            .iter()
            .map(|a| {
                let odd = acts_oddly(a, &self.parity);
                let mut m = RatMatrix::zeros(n, n);
                for p in 0..n {
                    let sign = if odd && self.parity[p].is_odd() { rat(1) } else { rat(-1) };
                    for q in 0..n {
                        let x = &a[(p, q)];
                        if !x.is_zero() {
                            m[(q, p)] = &sign * x;
                        }
                    }
                }
                m
            })
            .collect();
        SuperModule::new(self.parity.clone(), action)
    }

    pub fn direct_sum(&self, other: &SuperModule) -> SuperModule {
        assert_eq!(self.action.len(), other.action.len(), "modules over different algebras");
        let (dm, dn) = (self.dim(), other.dim());
        let mut parity = self.parity.clone();
        parity.extend_from_slice(&other.parity);
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| {
                let mut m = RatMatrix::zeros(dm + dn, dm + dn);
                for r in 0..dm {
                    for c in 0..dm {
                        m[(r, c)] = a[(r, c)].clone();
                    }
                }
                for r in 0..dn {
                    for c in 0..dn {
                        m[(dm + r, dm + c)] = b[(r, c)].clone();
                    }
                }
                m
            })
            .collect();
        SuperModule::new(parity, action)
    }

    /// Conjugates every action matrix by an invertible parity-preserving `p`:
    /// the result acts by `p^-1 rho(x) p`.
    pub fn change_basis(&self, p: &RatMatrix) -> Option<SuperModule> {
        let inv = p.inverse()?;
        let action = self.action.iter().map(|a| &(&inv * a) * p).collect();
        Some(SuperModule::new(self.parity.clone(), action))
    }

    /// `str(rho(x))`, the supertrace.
    pub fn supertrace(&self, x: &[Rational]) -> Rational {
        let m = self.act(x);
        (0..self.dim())
            .map(|i| if self.parity[i].is_odd() { -m[(i, i)].clone() } else { m[(i, i)].clone() })
            .sum()
    }

    /// Whether every Cartan element acts diagonalizably with integer
    /// eigenvalues, i.e. the module integrates to the even torus.
    pub fn weights_integral(&self, cartan: &[RatVector]) -> bool {
        cartan.iter().all(|t| {
            let m = self.act(t);
            if m.rows() == 0 {
                return true;
            }
            let p = m.minimal_polynomial();
            let roots = p.rational_roots();
            p.is_squarefree().unwrap_or(false)
                && roots.len() == p.degree().unwrap_or(0)
                && roots.iter().all(|r| r.is_integer())
        })
    }
}

fn acts_oddly(m: &RatMatrix, parity: &[Parity]) -> bool {
    (0..m.rows()).any(|r| (0..m.cols()).any(|c| !m[(r, c)].is_zero() && parity[r] != parity[c]))
}

fn bracket_coords(g: &LieSuperalgebra, i: usize, j: usize) -> RatVector {
    let mut v = zero_vector(g.dim());
    for (k, c) in g.bracket_basis(i, j) {
        v[*k] += c;
    }
    v
}

/// Basis of the associative algebra generated by the identity and `generators`,
/// obtained by closing under left multiplication to a fixed point.
pub fn generated_algebra(n: usize, generators: &[RatMatrix]) -> Vec<RatMatrix> {
    let gens: Vec<&RatMatrix> = generators.iter().filter(|m| !m.is_zero()).collect();
    let mut echelon = Echelon::new(n * n);
    let mut basis: Vec<RatMatrix> = Vec::new();
    let id = RatMatrix::identity(n);
    if n == 0 {
        return basis;
    }
    echelon.insert(id.entries().to_vec());
    basis.push(id);
    let mut next = 0;
    while next < basis.len() {
        let b = basis[next].clone();
        next += 1;
        for g in &gens {
            let prod = *g * &b;
            if echelon.insert(prod.entries().to_vec()) {
                basis.push(prod);
            }
        }
    }
    basis
}

/// Incrementally maintained reduced echelon basis.
struct Echelon {
    rows: Vec<(RatVector, usize)>,
}

impl Echelon {
    fn new(_len: usize) -> Self {
        Echelon { rows: Vec::new() }
    }

    /// Adds `v` if it is independent of the stored rows; reports whether it was.
    fn insert(&mut self, mut v: RatVector) -> bool {
        for (r, p) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = -v[*p].clone();
            add_scaled(&mut v, &f, r);
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for (r, _) in self.rows.iter_mut() {
            if !r[p].is_zero() {
                let f = -r[p].clone();
                add_scaled(r, &f, &v);
            }
        }
        self.rows.push((v, p));
        true
    }
}

/// Dimension of `{a in A : tr(ab) = 0 for all b in A}` for the algebra `A`
/// generated by the given matrices. In characteristic zero this is the
/// Jacobson radical of `A`.
pub fn radical_dimension(n: usize, generators: &[RatMatrix]) -> usize {
    let basis = generated_algebra(n, generators);
    let k = basis.len();
    if k == 0 {
        return 0;
    }
    let mut gram = RatMatrix::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            let t = basis[i].trace_product(&basis[j]);
            gram[(i, j)] = t.clone();
            gram[(j, i)] = t;
        }
    }
    k - gram.rank()
}

/// Semisimplicity of the action given by `generators` on `k^n`.
pub fn is_semisimple_action(n: usize, generators: &[RatMatrix]) -> bool {
    radical_dimension(n, generators) == 0
}

/// Whether `M` is a semisimple `g`-module (radical of the acting algebra is zero).
pub fn is_module_semisimple(g: &LieSuperalgebra, m: &SuperModule) -> Result<bool> {
    if m.actions().len() != g.dim() {
        return Err(Error::ModuleMismatch(format!(
            "{} action matrices for an algebra of dimension {}",
            m.actions().len(),
            g.dim()
        )));
    }
    Ok(is_semisimple_action(m.dim(), m.actions()))
}

/// The induced module `Ind_{g0}^{g} k = U(g)/U(g)g0` in its subset basis.
pub fn induced_trivial(g: &LieSuperalgebra) -> SuperModule {
    CoinvariantSpace::new(g, Side::Left).as_module()
}

/// Graded dimensions and representatives of `DS_u(M)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DSResult {
    pub even_dim: usize,
    pub odd_dim: usize,
    /// Dimension of `M^h`, the kernel of `h = u^2`.
    pub invariant_dim: usize,
    /// Representatives of the homology classes: even ones first.
    pub homology_basis: Vec<RatVector>,
}

impl DSResult {
    pub fn dims(&self) -> (usize, usize) {
        (self.even_dim, self.odd_dim)
    }
}

/// `DS_u(M) = ker(u|M^h) / im(u|M^h)` where `M^h` is the kernel of `h = u^2`.
pub fn ds_functor(g: &LieSuperalgebra, u: &[Rational], m: &SuperModule) -> Result<DSResult> {
    if m.actions().len() != g.dim() {
        return Err(Error::ModuleMismatch("action count differs from algebra dimension".into()));
    }
    if !g.in_g1ss(u)? {
        return Err(Error::NotInG1ss);
    }
    let h = g.odd_square(u)?;
    let rho_h = m.act(&h);
    let rho_u = m.act(u);
    let n = m.dim();

    let graded_kernel = |parity: Parity| -> Vec<RatVector> {
        let idx: Vec<usize> = (0..n).filter(|&i| m.parities()[i] == parity).collect();
        rho_h
            .submatrix(&idx, &idx)
            .kernel_basis()
            .into_iter()
            .map(|k| {
                let mut v = zero_vector(n);
                for (c, &i) in k.into_iter().zip(&idx) {
                    v[i] = c;
                }
                v
            })
            .collect()
    };
    let fixed_even = graded_kernel(Parity::Even);
    let fixed_odd = graded_kernel(Parity::Odd);

    for v in fixed_even.iter().chain(&fixed_odd) {
        let uv = rho_u.mul_vec(v);
        if !is_zero_vector(&rho_u.mul_vec(&uv)) {
            return Err(Error::Invalid("u does not square to zero on the h-invariants".into()));
        }
    }

    // Cycles in one degree modulo boundaries coming from the other.
    let homology = |cycles_from: &[RatVector], boundaries_from: &[RatVector]| -> Vec<RatVector> {
        let cycles = subspace_kernel(&rho_u, cycles_from, n);
        let boundaries: Vec<RatVector> = boundaries_from.iter().map(|v| rho_u.mul_vec(v)).collect();
        let mut acc = span_basis(&boundaries);
        let mut reps = Vec::new();
        for z in cycles {
            if !in_span(&acc, &z) {
                acc.push(z.clone());
                reps.push(z);
            }
        }
        reps
    };
    let even = homology(&fixed_even, &fixed_odd);
    let odd = homology(&fixed_odd, &fixed_even);
    Ok(DSResult {
        even_dim: even.len(),
        odd_dim: odd.len(),
        invariant_dim: fixed_even.len() + fixed_odd.len(),
        homology_basis: even.into_iter().chain(odd).collect(),
    })
}

/// Vectors `v` in `span(basis)` with `a v = 0`.
fn subspace_kernel(a: &RatMatrix, basis: &[RatVector], n: usize) -> Vec<RatVector> {
    if basis.is_empty() {
        return Vec::new();
    }
    let images: Vec<RatVector> = basis.iter().map(|v| a.mul_vec(v)).collect();
    let coeffs = RatMatrix::from_columns(n, &images).kernel_basis();
    coeffs
        .into_iter()
        .map(|c| {
            let mut v = zero_vector(n);
            for (ci, bi) in c.iter().zip(basis) {
                add_scaled(&mut v, ci, bi);
            }
            v
        })
        .collect()
}

/// Outcome of comparing `DS(M (x) N)` with `DS(M) (x) DS(N)` on graded dimensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorCheckReport {
    pub ds_left: (usize, usize),
    pub ds_right: (usize, usize),
    pub ds_tensor: (usize, usize),
    pub expected: (usize, usize),
}

impl TensorCheckReport {
    pub fn holds(&self) -> bool {
        self.ds_tensor == self.expected
    }
}

/// Graded dimension of a tensor product: `(e e' + o o', e o' + o e')`.
pub fn tensor_dims((e1, o1): (usize, usize), (e2, o2): (usize, usize)) -> (usize, usize) {
    (e1 * e2 + o1 * o2, e1 * o2 + o1 * e2)
}

pub fn ds_tensor_check(
    g: &LieSuperalgebra,
    u: &[Rational],
    m: &SuperModule,
    n: &SuperModule,
) -> Result<TensorCheckReport> {
    let ds_left = ds_functor(g, u, m)?.dims();
    let ds_right = ds_functor(g, u, n)?.dims();
    let ds_tensor = ds_functor(g, u, &m.tensor(n))?.dims();
    Ok(TensorCheckReport { ds_left, ds_right, ds_tensor, expected: tensor_dims(ds_left, ds_right) })
}

/// Cyclic submodule generated by `v`.
pub fn generated_submodule(m: &SuperModule, v: &[Rational]) -> Vec<RatVector> {
    let mut basis = span_basis(&[v.to_vec()]);
    let mut frontier = basis.clone();
    while let Some(w) = frontier.pop() {
        for a in m.actions() {
            let aw = a.mul_vec(&w);
            if !in_span(&basis, &aw) {
                basis.push(aw.clone());
                frontier.push(aw);
            }
        }
    }
    span_basis(&basis)
}

/// Whether the submodule spanned by `sub` has a module complement: searches
/// for an idempotent module endomorphism with image `sub`.
pub fn has_complement(m: &SuperModule, sub: &[RatVector]) -> bool {
    let n = m.dim();
    let k = sub.len();
    if k == 0 || k == n {
        return true;
    }
    // Unknown P = S Q with S the n x k basis matrix of `sub` and Q a k x n
    // matrix; P commutes with the action and Q S = I_k.
    let s = RatMatrix::from_columns(n, sub);
    let unknowns = k * n;
    let idx = |r: usize, c: usize| r * n + c;
    let mut rows: Vec<RatVector> = Vec::new();
    let mut rhs: Vec<Rational> = Vec::new();
    // Q S = I.
    for r in 0..k {
        for c in 0..k {
            let mut row = zero_vector(unknowns);
            for t in 0..n {
                row[idx(r, t)] += &s[(t, c)];
            }
            rows.push(row);
            rhs.push(if r == c { Rational::one() } else { Rational::zero() });
        }
    }
    // S Q A = A S Q, i.e. Q A = B Q where A S = S B (sub is stable).
    for a in m.actions() {
        let as_ = a * &s;
        let b = match RatMatrix::from_columns(n, sub).solve_columns(&as_) {
            Some(b) => b,
            None => return false,
        };
        for r in 0..k {
            for c in 0..n {
                let mut row = zero_vector(unknowns);
                for t in 0..n {
                    row[idx(r, t)] += &a[(t, c)];
                }
                for t in 0..k {
                    row[idx(t, c)] -= &b[(r, t)];
                }
                rows.push(row);
                rhs.push(Rational::zero());
            }
        }
    }
    RatMatrix::from_rows(&rows).solve(&rhs).is_some()
}

/// Dimension bookkeeping used by reports.
pub fn graded_dims(m: &SuperModule) -> (usize, usize) {
    (m.even_dim(), m.odd_dim())
}

pub fn subspace_dim(vs: &[RatVector]) -> usize {
    span_dimension(vs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::linalg::ratio;

    #[test]
    fn defining_and_adjoint_modules_are_valid() {
        let g = families::build_gl(1, 1);
        assert!(g.faithful_rep().unwrap().validate(&g).is_valid());
        let osp = families::build_osp1(1);
        assert!(SuperModule::adjoint(&osp).validate(&osp).is_valid());
    }

    #[test]
    fn corrupted_matrix_reports_pair() {
        let g = families::build_gl(1, 1);
        let mut m = g.faithful_rep().unwrap().clone();
        let e12 = g.index_of("E12").unwrap();
        let mut bad = m.action(e12).clone();
        bad[(0, 1)] = rat(2);
        m.set_action(e12, bad);
        let report = m.validate(&g);
        assert!(!report.is_valid());
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, ModuleViolation::Bracket { i, j } if *i == e12 || *j == e12)));
    }

    #[test]
    fn monoidal_operations_preserve_validity() {
        for g in [families::build_gl(1, 1), families::build_osp1(1), families::build_sl(2, 1)] {
            let v = g.faithful_rep().unwrap().clone();
            let t = SuperModule::trivial(&g);
            assert!(v.dual().validate(&g).is_valid(), "dual of {}", g.name());
            assert!(v.tensor(&v).validate(&g).is_valid(), "tensor of {}", g.name());
            assert!(v.tensor(&v.dual()).validate(&g).is_valid());
            assert!(v.direct_sum(&t).validate(&g).is_valid());
            assert_eq!(v.tensor(&v).dim(), v.dim() * v.dim());
            assert_eq!(v.tensor(&t).actions(), v.actions());
        }
    }

    #[test]
    fn double_dual_has_same_character() {
        let g = families::build_sl(2, 1);
        let v = g.faithful_rep().unwrap().clone();
        let dd = v.dual().dual();
        let x: Vec<Rational> = (0..g.dim())
            .map(|i| if g.parity(i).is_even() { ratio(i as i64 + 1, 3) } else { rat(0) })
            .collect();
        assert_eq!(v.act(&x).trace(), dd.act(&x).trace());
    }

    #[test]
    fn semisimplicity_by_radical() {
        let g = families::build_osp1(1);
        assert!(is_module_semisimple(&g, &SuperModule::trivial(&g)).unwrap());
        assert!(is_module_semisimple(&g, &SuperModule::adjoint(&g)).unwrap());
        let gl = families::build_gl(1, 1);
        assert!(!is_module_semisimple(&gl, &induced_trivial(&gl)).unwrap());
    }

    #[test]
    fn ds_on_gl11() {
        let g = families::build_gl(1, 1);
        let u = g.basis_vector(g.index_of("E12").unwrap());
        let u: Vec<Rational> = u
            .iter()
            .zip(g.basis_vector(g.index_of("E21").unwrap()))
            .map(|(a, b)| a + b)
            .collect();
        let v = g.faithful_rep().unwrap();
        assert_eq!(ds_functor(&g, &u, v).unwrap().dims(), (0, 0));
        assert_eq!(ds_functor(&g, &u, &induced_trivial(&g)).unwrap().dims(), (0, 0));
        let zero = zero_vector(g.dim());
        assert_eq!(ds_functor(&g, &zero, v).unwrap().dims(), (1, 1));
    }

    #[test]
    fn ds_rejects_outside_cone() {
        let g = families::build_osp1(1);
        let a = g.basis_vector(g.index_of("a1").unwrap());
        assert_eq!(ds_functor(&g, &a, &SuperModule::trivial(&g)), Err(Error::NotInG1ss));
    }
}
