//! Batch driver for the acceptance suite, plus the seeded generators and
//! independent oracles it relies on.

use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::enveloping::{
    double_factorial_odd, ghost_criterion, verify_djokovic, EnvelopingElement, GhostVerdict, Pbw, PbwOrder, Strategy,
};
use crate::families::{self, build_gl, build_osp1, build_product, build_sl, build_toy_odd_semisimple, build_torus};
use crate::linalg::{format_rational, rat, unit_vector, zero_vector, RatMatrix, RatVector};
use crate::reps::{
    ds_functor, ds_tensor_check, generated_submodule, has_complement, induced_trivial, is_module_semisimple,
    SuperModule,
};
use crate::roots::{classify_simple, find_cartan, g1ss_structural_scan, ClassificationOutcome, ScanVerdict};
use crate::superalgebra::{LieSuperalgebra, Parity};
use crate::supercomm::{self, is_nonvanishing, splitting_witness, SupercommAlgebra, OddDerivation};
use crate::Error;

/// Tags accepted by [`VerifyOptions::filter`], indexed by criterion number minus one.
pub const CRITERIA: [(&str, &str); 8] = [
    ("construction", "construction soundness of the built-in families"),
    ("classify", "osp(1|2n) recognition and cone witnesses"),
    ("ghost", "ghost-element semisimplicity criterion"),
    ("djokovic", "explicit invariant of U(osp(1|2n))"),
    ("crossval", "ghost verdict agrees with the radical test"),
    ("ds", "DS functor dimensions and tensor multiplicativity"),
    ("splitting", "constructing f with u(f) = 1"),
    ("properties", "randomized property suites"),
];

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub criterion: usize,
    pub tag: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub millis: f64,
}

impl CheckResult {
    pub fn line(&self) -> String {
        format!(
            "[{}] {}.{} {}: {} ({:.1} ms)",
            if self.passed { "PASS" } else { "FAIL" },
            self.criterion,
            self.tag,
            self.name,
            self.detail,
            self.millis
        )
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Criterion tag or number; `None` runs everything.
    pub filter: Option<String>,
    /// Adds a gl(1|1) with one corrupted structure constant to the
    /// construction checks, which must then fail.
    pub corrupt: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { seed: crate::roots::DEFAULT_SEED, filter: None, corrupt: false }
    }
}

impl VerifyOptions {
    pub fn selects(&self, criterion: usize) -> bool {
        match &self.filter {
            None => true,
            Some(f) => {
                let f = f.trim();
                f == criterion.to_string() || CRITERIA[criterion - 1].0.eq_ignore_ascii_case(f)
            }
        }
    }
}

/// Per-criterion rollup of [`CheckResult`]s.
#[derive(Clone, Debug, Serialize)]
pub struct CriterionSummary {
    pub criterion: usize,
    pub tag: &'static str,
    pub passed: bool,
    pub checks: usize,
    pub failures: usize,
    pub millis: f64,
}

pub fn summarize(results: &[CheckResult]) -> Vec<CriterionSummary> {
    let mut out: Vec<CriterionSummary> = Vec::new();
    for r in results {
        match out.last_mut() {
            Some(s) if s.criterion == r.criterion => {
                s.checks += 1;
                s.failures += usize::from(!r.passed);
                s.passed &= r.passed;
                s.millis += r.millis;
            }
            _ => out.push(CriterionSummary {
                criterion: r.criterion,
                tag: r.tag,
                passed: r.passed,
                checks: 1,
                failures: usize::from(!r.passed),
                millis: r.millis,
            }),
        }
    }
    out
}

/// Runs the selected criteria concurrently; results come back ordered by
/// criterion and then by check.
pub fn run_all(opts: &VerifyOptions) -> Vec<CheckResult> {
    let selected: Vec<usize> = (1..=CRITERIA.len()).filter(|&k| opts.selects(k)).collect();
    let mut per: Vec<(usize, Vec<CheckResult>)> = std::thread::scope(|s| {
        let handles: Vec<_> = selected.iter().map(|&k| (k, s.spawn(move || run_criterion(k, opts)))).collect();
        handles
            .into_iter()
            .map(|(k, h)| {
                let res = h.join().unwrap_or_else(|_| {
                    vec![CheckResult {
                        criterion: k,
                        tag: CRITERIA[k - 1].0,
                        name: "driver".into(),
                        passed: false,
                        detail: "check panicked".into(),
                        millis: 0.0,
                    }]
                });
                (k, res)
            })
            .collect()
    });
    per.sort_by_key(|(k, _)| *k);
    per.into_iter().flat_map(|(_, r)| r).collect()
}

pub fn run_criterion(k: usize, opts: &VerifyOptions) -> Vec<CheckResult> {
    let mut rec = Recorder { criterion: k, results: Vec::new() };
    match k {
        1 => construction(&mut rec, opts),
        2 => classification(&mut rec, opts),
        3 => ghost(&mut rec),
        4 => djokovic(&mut rec),
        5 => cross_validation(&mut rec),
        6 => ds(&mut rec, opts),
        7 => splitting(&mut rec),
        8 => properties(&mut rec, opts),
        _ => rec.record(format!("criterion {k}"), || (false, "no such criterion".into())),
    }
    rec.results
}

struct Recorder {
    criterion: usize,
    results: Vec<CheckResult>,
}

impl Recorder {
    fn record(&mut self, name: impl Into<String>, check: impl FnOnce() -> (bool, String)) {
        let start = Instant::now();
        let (passed, detail) = check();
        self.results.push(CheckResult {
            criterion: self.criterion,
            tag: CRITERIA[self.criterion - 1].0,
            name: name.into(),
            passed,
            detail,
            millis: millis(start.elapsed()),
        });
    }
}

fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1000.0
}

fn fail(e: Error) -> (bool, String) {
    (false, format!("error: {e}"))
}

/// gl(1|1) with the coefficient of `E11` in `[E12, E21]` changed to 2 (and
/// its mirror entry kept consistent), which breaks the Jacobi identity.
pub fn corrupted_gl11() -> LieSuperalgebra {
    let mut g = build_gl(1, 1);
    let (e12, e21, e11) = (g.index_of("E12").unwrap(), g.index_of("E21").unwrap(), g.index_of("E11").unwrap());
    g.set_structure_constant(e12, e21, e11, rat(2));
    g.set_structure_constant(e21, e12, e11, rat(2));
    g.with_name("gl(1|1) corrupted")
}

fn construction(rec: &mut Recorder, opts: &VerifyOptions) {
    let mut algebras = vec![build_gl(1, 1), build_gl(2, 1), build_sl(2, 1)];
    algebras.extend((1..=3).map(build_osp1));
    algebras.push(build_product(&[build_osp1(1), build_osp1(2)]));
    algebras.push(build_product(&[build_torus(1), build_osp1(1), build_gl(1, 1)]));
    if opts.corrupt {
        algebras.push(corrupted_gl11());
    }
    for g in algebras {
        rec.record(format!("validate {}", g.name()), || {
            let report = g.validate();
            if !report.is_valid() {
                let first = report.describe(&g).into_iter().next().unwrap_or_default();
                return (false, format!("{} violation(s), first: {first}", report.violations.len()));
            }
            match g.faithful_rep() {
                Some(rep) if !rep.validate(&g).is_valid() => (false, "faithful representation fails the axioms".into()),
                Some(_) => (true, format!("dim {}|{}, axioms and representation hold", g.dim() - g.odd_dim(), g.odd_dim())),
                None => (false, "no faithful representation".into()),
            }
        });
    }
}

fn witness_detail(g: &LieSuperalgebra, u: &[crate::linalg::Rational]) -> (bool, String) {
    let ok = g.is_odd_element(u) && !u.iter().all(Zero::is_zero) && g.in_g1ss(u).unwrap_or(false);
    (ok, format!("witness u = {}", g.format_element(u)))
}

fn classification(rec: &mut Recorder, opts: &VerifyOptions) {
    for n in 1..=3 {
        rec.record(format!("classify osp(1|{})", 2 * n), || {
            let g = build_osp1(n);
            let cartan = match find_cartan(&g, opts.seed) {
                Ok(c) => c,
                Err(e) => return fail(e),
            };
            match classify_simple(&g, &cartan) {
                Ok(ClassificationOutcome::Osp(iso)) if iso.n == n && iso.verify(&g) => {
                    (true, format!("Osp({n}) with a verified bracket-preserving basis map"))
                }
                Ok(other) => (false, format!("unexpected outcome {other}")),
                Err(e) => fail(e),
            }
        });
    }
    rec.record("classify sl(2|1)", || {
        let g = build_sl(2, 1);
        let cartan = match find_cartan(&g, opts.seed) {
            Ok(c) => c,
            Err(e) => return fail(e),
        };
        match classify_simple(&g, &cartan) {
            Ok(ClassificationOutcome::Witness { u, .. }) => witness_detail(&g, &u),
            Ok(other) => (false, format!("unexpected outcome {other}")),
            Err(e) => fail(e),
        }
    });
    rec.record("scan gl(1|1)", || {
        let g = build_gl(1, 1);
        match g1ss_structural_scan(&g, opts.seed) {
            Ok(report) => match report.witness() {
                Some(u) => witness_detail(&g, u),
                None => (false, format!("no witness: {:?}", report.verdict)),
            },
            Err(e) => fail(e),
        }
    });
    rec.record("scan product osp(1|2) x osp(1|2)", || {
        let g = build_product(&[build_osp1(1), build_osp1(1)]);
        match g1ss_structural_scan(&g, opts.seed) {
            Ok(r) => {
                let osp = r.factors.iter().filter(|f| matches!(f.outcome, Some(ClassificationOutcome::Osp(_)))).count();
                (r.verdict == ScanVerdict::ZeroCone && osp == 2, format!("{osp} Osp(1) factors, {:?}", r.verdict))
            }
            Err(e) => fail(e),
        }
    });
}

fn ghost(rec: &mut Recorder) {
    for n in 1..=3 {
        rec.record(format!("ghost osp(1|{})", 2 * n), || {
            let g = build_osp1(n);
            let r = ghost_criterion(&g);
            let eps = r.ghost.as_ref().map(|gh| gh.epsilon.clone()).unwrap_or_default();
            let ok = r.invariant_dim == 1
                && r.right_invariant_dim == 1
                && eps == double_factorial_odd(n)
                && r.verdict == GhostVerdict::Semisimple;
            (ok, format!("invariant dim {}, eps = {}, {}", r.invariant_dim, format_rational(&eps), r.verdict))
        });
    }
    for g in [build_gl(1, 1), build_toy_odd_semisimple(), build_sl(2, 1)] {
        rec.record(format!("ghost {}", g.name()), || {
            let r = ghost_criterion(&g);
            let eps = r.ghost.as_ref().map(|gh| format_rational(&gh.epsilon)).unwrap_or_else(|| "none".into());
            (r.verdict != GhostVerdict::Semisimple, format!("invariant dim {}, eps = {eps}, {}", r.invariant_dim, r.verdict))
        });
    }
}

fn djokovic(rec: &mut Recorder) {
    for n in 1..=3 {
        rec.record(format!("djokovic n = {n}"), || match verify_djokovic(n) {
            Ok(r) => (
                r.passed(),
                format!(
                    "invariant on both sides: {}/{}, eps = {} (expected {})",
                    r.left_invariant,
                    r.right_invariant,
                    format_rational(&r.epsilon),
                    format_rational(&r.expected_epsilon)
                ),
            ),
            Err(e) => fail(e),
        });
    }
}

fn cross_validation(rec: &mut Recorder) {
    let catalog: Vec<(LieSuperalgebra, bool)> = vec![
        (build_osp1(1), true),
        (build_osp1(2), true),
        (build_osp1(3), true),
        (build_torus(2), true),
        (build_gl(2, 0), true),
        (build_gl(1, 1), false),
        (build_sl(2, 1), false),
        (build_toy_odd_semisimple(), false),
        (families::build_toy_odd_nilpotent(), false),
    ];
    for (g, expected) in catalog {
        rec.record(format!("crossval {}", g.name()), || {
            let ghost = ghost_criterion(&g).verdict == GhostVerdict::Semisimple;
            match is_module_semisimple(&g, &induced_trivial(&g)) {
                Ok(radical) => (
                    ghost == radical && radical == expected,
                    format!("ghost semisimple = {ghost}, induced module semisimple = {radical}"),
                ),
                Err(e) => fail(e),
            }
        });
    }
}

/// Parity-preserving unitriangular change of basis with small entries.
fn random_even_basis_change(rng: &mut ChaCha8Rng, parity: &[Parity]) -> RatMatrix {
    let n = parity.len();
    let mut p = RatMatrix::identity(n);
    for r in 0..n {
        for c in 0..r {
            if parity[r] == parity[c] {
                p[(r, c)] = rat(rng.gen_range(-2..=2));
            }
        }
    }
    // Conjugating by a permutation within each parity class keeps the
    // result from being lower triangular.
    let mut perm: Vec<usize> = (0..n).collect();
    for r in (1..n).rev() {
        let c = rng.gen_range(0..=r);
        if parity[r] == parity[c] {
            perm.swap(r, c);
        }
    }
    let mut q = RatMatrix::zeros(n, n);
    for (r, &c) in perm.iter().enumerate() {
        q[(r, c)] = rat(1);
    }
    &q * &p
}

fn parity_shift(m: &SuperModule) -> SuperModule {
    let flipped = m.parities().iter().map(|p| p.add(Parity::Odd)).collect();
    SuperModule::new(flipped, m.actions().to_vec())
}

/// A one-dimensional even gl(1|1)-module on which `E11` acts by `a` and `E22` by `-a`.
fn gl11_character(g: &LieSuperalgebra, a: i64) -> SuperModule {
    let mut m = SuperModule::trivial(g);
    m.set_action(g.index_of("E11").unwrap(), RatMatrix::from_i64(1, 1, &[a]));
    m.set_action(g.index_of("E22").unwrap(), RatMatrix::from_i64(1, 1, &[-a]));
    m
}

/// A random valid gl(1|1)-module of dimension at most 8, assembled from
/// characters, the defining module, its dual, the adjoint and the induced
/// module, then conjugated by a random even change of basis.
pub fn random_gl11_module(g: &LieSuperalgebra, rng: &mut ChaCha8Rng) -> SuperModule {
    let defining = g.faithful_rep().expect("gl(1|1) has its defining module").clone();
    let pick = |rng: &mut ChaCha8Rng| -> SuperModule {
        let base = match rng.gen_range(0..6) {
            0 => gl11_character(g, rng.gen_range(-2..=2)),
            1 => defining.clone(),
            2 => defining.dual(),
            3 => SuperModule::adjoint(g),
            4 => induced_trivial(g),
            _ => defining.tensor(&gl11_character(g, rng.gen_range(-2..=2))),
        };
        if rng.gen_bool(0.5) {
            parity_shift(&base)
        } else {
            base
        }
    };
    let first = pick(rng);
    let m = if first.dim() <= 4 && rng.gen_bool(0.5) {
        let second = pick(rng);
        first.direct_sum(&second)
    } else {
        first
    };
    let p = random_even_basis_change(rng, m.parities());
    m.change_basis(&p).expect("unitriangular times permutation is invertible")
}

/// A random module over `toy_odd_semisimple` of dimension `p|q` with
/// `1 <= p, q <= 2`: any odd `U` works, with `h` acting by `U^2`.
pub fn random_toy_module(g: &LieSuperalgebra, rng: &mut ChaCha8Rng) -> SuperModule {
    let (p, q) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
    let parity: Vec<Parity> = (0..p + q).map(|i| Parity::from_bit(i >= p)).collect();
    let mut u = RatMatrix::zeros(p + q, p + q);
    for r in 0..p + q {
        for c in 0..p + q {
            if parity[r] != parity[c] {
                u[(r, c)] = rat(rng.gen_range(-2..=2));
            }
        }
    }
    let h = &u * &u;
    let mut action = vec![RatMatrix::zeros(p + q, p + q); g.dim()];
    action[g.index_of("h").unwrap()] = h;
    action[g.index_of("u").unwrap()] = u;
    SuperModule::new(parity, action)
}

fn ds(rec: &mut Recorder, opts: &VerifyOptions) {
    let g = build_gl(1, 1);
    let mut u = zero_vector(g.dim());
    u[g.index_of("E12").unwrap()] = rat(1);
    u[g.index_of("E21").unwrap()] = rat(1);
    for (name, m) in [("defining", g.faithful_rep().unwrap().clone()), ("induced", induced_trivial(&g))] {
        rec.record(format!("DS gl(1|1) {name}, u = E12+E21"), || match ds_functor(&g, &u, &m) {
            Ok(r) => (r.dims() == (0, 0), format!("DS = {}|{}", r.even_dim, r.odd_dim)),
            Err(e) => fail(e),
        });
    }
    let toy = build_toy_odd_semisimple();
    let samples: Vec<(&LieSuperalgebra, SuperModule)> = vec![
        (&g, induced_trivial(&g)),
        (&g, SuperModule::adjoint(&g)),
        (&toy, toy.faithful_rep().unwrap().clone()),
        (&toy, induced_trivial(&toy)),
    ];
    for (alg, m) in &samples {
        rec.record(format!("DS_0 {} on a {}-dim module", alg.name(), m.dim()), || {
            match ds_functor(alg, &zero_vector(alg.dim()), m) {
                Ok(r) => (r.dims() == (m.even_dim(), m.odd_dim()), format!("DS = {}|{}", r.even_dim, r.odd_dim)),
                Err(e) => fail(e),
            }
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let toy_u = toy.basis_vector(toy.index_of("u").unwrap());
    for k in 0..20 {
        let (alg, uu, m, n) = if k % 2 == 0 {
            (&g, &u, random_gl11_module(&g, &mut rng), random_gl11_module(&g, &mut rng))
        } else {
            (&toy, &toy_u, random_toy_module(&toy, &mut rng), random_toy_module(&toy, &mut rng))
        };
        rec.record(format!("tensor pair {} over {}", k + 1, alg.name()), || {
            if !m.validate(alg).is_valid() || !n.validate(alg).is_valid() {
                return (false, "generated module is invalid".into());
            }
            match ds_tensor_check(alg, uu, &m, &n) {
                Ok(r) => (
                    r.holds(),
                    format!(
                        "dims {}|{} x {}|{}: DS {:?} x {:?} -> {:?}",
                        m.even_dim(),
                        m.odd_dim(),
                        n.even_dim(),
                        n.odd_dim(),
                        r.ds_left,
                        r.ds_right,
                        r.ds_tensor
                    ),
                ),
                Err(e) => fail(e),
            }
        });
    }
}

/// The supercommutative algebras with odd derivation on which the splitting
/// construction must succeed.
pub fn splitting_catalog() -> Vec<(String, SupercommAlgebra, OddDerivation)> {
    let mut out = Vec::new();
    let (a, u) = supercomm::exterior_one();
    out.push(("exterior algebra on one generator".to_string(), a, u));
    let (a, u) = supercomm::quadratic_unit_example();
    out.push(("quadratic unit".to_string(), a, u));
    let g = build_sl(2, 1);
    let mut x = zero_vector(g.dim());
    x[g.index_of("E13").unwrap()] = rat(1);
    x[g.index_of("E31").unwrap()] = rat(1);
    let (a, u) = supercomm::coinvariant_dual(&g, &x).expect("E13+E31 is odd");
    out.push(("coinvariant dual of sl(2|1), u = E13+E31".to_string(), a, u));
    out
}

fn splitting(rec: &mut Recorder) {
    for (name, a, u) in splitting_catalog() {
        rec.record(name, || {
            if !a.validate().is_valid() || !a.validate_derivation(&u).is_valid() {
                return (false, "catalog entry fails the axioms".into());
            }
            if !is_nonvanishing(&a, &u) {
                return (false, "1 is not in the ideal generated by im(u)".into());
            }
            match splitting_witness(&a, &u) {
                Ok(w) => {
                    let ok = &u.apply(&w.f) == a.unit() && a.is_odd_element(&w.f);
                    (ok, format!("f = {}, u(f) = {}", a.format_element(&w.f), a.format_element(&u.apply(&w.f))))
                }
                Err(e) => fail(e),
            }
        });
    }
    rec.record("vanishing derivation", || {
        let (a, u) = supercomm::vanishing_example();
        match splitting_witness(&a, &u) {
            Err(Error::Vanishing) => (true, "rejected as vanishing".into()),
            Err(e) => (false, format!("wrong error: {e}")),
            Ok(_) => (false, "unexpectedly produced f".into()),
        }
    });
}

/// A random word of length `0..=max_len` over the basis of `g`.
pub fn random_word(g: &LieSuperalgebra, rng: &mut ChaCha8Rng, max_len: usize) -> Vec<usize> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| rng.gen_range(0..g.dim())).collect()
}

/// A random enveloping element: a small scalar plus up to three random words.
pub fn random_enveloping_element(engine: &Pbw<'_>, rng: &mut ChaCha8Rng) -> EnvelopingElement {
    let g = engine.algebra();
    let mut x = EnvelopingElement::scalar(engine.order(), rat(rng.gen_range(-3..=3)));
    for _ in 0..rng.gen_range(0..=3) {
        let w = random_word(g, rng, 3);
        x = x.add(&engine.normal_form(&w).scale(&rat(rng.gen_range(-3..=3))));
    }
    x
}

/// A conjugate `P J P^{-1}` of a random Jordan-type matrix of size 2 to 4,
/// together with whether it is diagonalizable over the algebraic closure.
/// Irreducible 2x2 blocks (`x^2 + 1`, `x^2 - 2`) count as diagonalizable.
pub fn jordan_test_matrix(rng: &mut ChaCha8Rng) -> (RatMatrix, bool) {
    let size = rng.gen_range(2..=4);
    let mut j = RatMatrix::zeros(size, size);
    let mut semisimple = true;
    let mut at = 0;
    while at < size {
        let left = size - at;
        let kind = rng.gen_range(0..3);
        if kind == 1 && left >= 2 {
            let len = rng.gen_range(2..=left);
            let lambda = rat(rng.gen_range(-3..=3));
            for i in 0..len {
                j[(at + i, at + i)] = lambda.clone();
                if i + 1 < len {
                    j[(at + i, at + i + 1)] = rat(1);
                }
            }
            semisimple = false;
            at += len;
        } else if kind == 2 && left >= 2 {
            let c = if rng.gen_bool(0.5) { -1 } else { 2 };
            j[(at, at + 1)] = rat(c);
            j[(at + 1, at)] = rat(1);
            at += 2;
        } else {
            j[(at, at)] = rat(rng.gen_range(-3..=3));
            at += 1;
        }
    }
    let mut p = RatMatrix::identity(size);
    for r in 0..size {
        for c in 0..size {
            if r != c {
                p[(r, c)] = rat(rng.gen_range(-1..=1));
            }
        }
    }
    while !p.is_invertible() {
        let (r, c) = (rng.gen_range(0..size), rng.gen_range(0..size));
        p[(r, c)] += rat(1);
    }
    let inv = p.inverse().expect("checked invertible");
    (&(&p * &j) * &inv, semisimple)
}

/// Coordinates in gl(k|0) of the matrix `m`.
pub fn gl_coordinates(g: &LieSuperalgebra, m: &RatMatrix) -> RatVector {
    let k = m.rows();
    let mut x = zero_vector(g.dim());
    for a in 0..k {
        for b in 0..k {
            let label = if k > 9 { format!("E{}_{}", a + 1, b + 1) } else { format!("E{}{}", a + 1, b + 1) };
            x[g.index_of(&label).expect("gl basis label")] = m[(a, b)].clone();
        }
    }
    x
}

/// Semisimplicity by brute force: every cyclic submodule generated from a
/// probe set (basis vectors, sums and differences of pairs, triple sums,
/// invariants, kernels and images of each action matrix) has a complement.
pub fn exhaustive_semisimple_oracle(m: &SuperModule) -> bool {
    let n = m.dim();
    let mut probes: Vec<RatVector> = (0..n).map(|i| unit_vector(n, i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let mut s = unit_vector(n, i);
            s[j] = rat(1);
            probes.push(s.clone());
            s[j] = rat(-1);
            probes.push(s);
            for k in j + 1..n {
                let mut t = unit_vector(n, i);
                t[j] = rat(1);
                t[k] = rat(1);
                probes.push(t);
            }
        }
    }
    let nonzero: Vec<&RatMatrix> = m.actions().iter().filter(|a| !a.is_zero()).collect();
    if !nonzero.is_empty() {
        probes.extend(RatMatrix::vstack(&nonzero).kernel_basis());
    }
    for a in &nonzero {
        probes.extend(a.kernel_basis());
        probes.extend((0..n).map(|c| a.column(c)).filter(|v| v.iter().any(|x| !x.is_zero())));
    }
    probes
        .iter()
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .all(|v| has_complement(m, &generated_submodule(m, v)))
}

/// Every module of dimension at most 4 built from the catalog algebras:
/// trivial, defining, dual, adjoint, induced, and small sums and tensors.
pub fn small_catalog_modules() -> Vec<(String, LieSuperalgebra, SuperModule)> {
    let algebras = vec![
        build_osp1(1),
        build_osp1(2),
        build_gl(1, 1),
        build_gl(2, 1),
        build_sl(2, 1),
        families::build_toy_odd_nilpotent(),
        build_toy_odd_semisimple(),
        build_torus(2),
        build_gl(2, 0),
    ];
    let mut out = Vec::new();
    for g in algebras {
        let mut candidates: Vec<(&str, SuperModule)> = vec![("trivial", SuperModule::trivial(&g))];
        if let Some(rep) = g.faithful_rep() {
            candidates.push(("defining", rep.clone()));
            candidates.push(("dual", rep.dual()));
            candidates.push(("trivial+defining", SuperModule::trivial(&g).direct_sum(rep)));
            candidates.push(("defining^2", rep.tensor(rep)));
        }
        candidates.push(("adjoint", SuperModule::adjoint(&g)));
        candidates.push(("induced", induced_trivial(&g)));
        for (label, m) in candidates {
            if m.dim() <= 4 {
                out.push((format!("{} {label}", g.name()), g.clone(), m));
            }
        }
    }
    out
}

fn properties(rec: &mut Recorder, opts: &VerifyOptions) {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x9e37);
    let algebras = [build_osp1(1), build_gl(1, 1)];

    rec.record("PBW confluence on 1000 random words", || {
        let mut failures = 0;
        for k in 0..1000 {
            let g = &algebras[k % 2];
            let order = if k % 4 < 2 { PbwOrder::OddFirst } else { PbwOrder::EvenFirst };
            let engine = Pbw::new(g, order);
            let w = random_word(g, &mut rng, 6);
            if engine.normal_form_with(&w, Strategy::Leftmost) != engine.normal_form_with(&w, Strategy::Rightmost) {
                failures += 1;
            }
        }
        (failures == 0, format!("{failures} failures"))
    });

    rec.record("counit multiplicativity on 1000 random pairs", || {
        let mut failures = 0;
        for k in 0..1000 {
            let engine = Pbw::new(&algebras[k % 2], PbwOrder::OddFirst);
            let x = random_enveloping_element(&engine, &mut rng);
            let y = random_enveloping_element(&engine, &mut rng);
            if engine.multiply(&x, &y).counit() != x.counit() * y.counit() {
                failures += 1;
            }
        }
        (failures == 0, format!("{failures} failures"))
    });

    rec.record("semisimple-element test on 50 Jordan-type matrices", || {
        let mut failures = 0;
        let gls: Vec<LieSuperalgebra> = (0..=4).map(|k| if k >= 2 { build_gl(k, 0) } else { build_gl(1, 0) }).collect();
        let mut diagonalizable = 0;
        for _ in 0..50 {
            let (m, truth) = jordan_test_matrix(&mut rng);
            let g = &gls[m.rows()];
            diagonalizable += usize::from(truth);
            if g.is_semisimple_element(&gl_coordinates(g, &m)).ok() != Some(truth) {
                failures += 1;
            }
        }
        (failures == 0, format!("{failures} failures ({diagonalizable} diagonalizable)"))
    });

    rec.record("radical test vs exhaustive submodule oracle", || {
        let modules = small_catalog_modules();
        let mut failures = Vec::new();
        let mut non_semisimple = 0;
        for (name, g, m) in &modules {
            let oracle = exhaustive_semisimple_oracle(m);
            non_semisimple += usize::from(!oracle);
            if is_module_semisimple(g, m).ok() != Some(oracle) {
                failures.push(name.clone());
            }
        }
        (
            failures.is_empty(),
            format!("{} modules, {non_semisimple} not semisimple, mismatches: {failures:?}", modules.len()),
        )
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filter_selects_by_tag_or_number() {
        let opts = VerifyOptions { filter: Some("ghost".into()), ..Default::default() };
        assert_eq!((1..=8).filter(|&k| opts.selects(k)).collect::<Vec<_>>(), vec![3]);
        let opts = VerifyOptions { filter: Some("7".into()), ..Default::default() };
        assert!(opts.selects(7) && !opts.selects(3));
    }

    #[test]
    fn corruption_is_reported() {
        let opts = VerifyOptions { corrupt: true, filter: Some("construction".into()), ..Default::default() };
        let results = run_all(&opts);
        let bad: Vec<_> = results.iter().filter(|r| !r.passed).collect();
        assert_eq!(bad.len(), 1);
        assert!(bad[0].name.contains("corrupted"));
        assert!(bad[0].detail.contains("jacobi"), "{}", bad[0].detail);
    }

    #[test]
    fn random_modules_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = build_gl(1, 1);
        let toy = build_toy_odd_semisimple();
        for _ in 0..10 {
            assert!(random_gl11_module(&g, &mut rng).validate(&g).is_valid());
            assert!(random_toy_module(&toy, &mut rng).validate(&toy).is_valid());
        }
    }
}
