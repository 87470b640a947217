use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use superkit::enveloping::{ghost_criterion, verify_djokovic, CoinvariantSpace, Side};
use superkit::families::FamilySpec;
use superkit::format::linear_combination;
use superkit::io::{format_vector, parse_algebra, parse_element, parse_module, parse_supercomm};
use superkit::linalg::{format_rational, RatVector};
use superkit::reps::{ds_functor, ds_tensor_check, induced_trivial, is_module_semisimple, SuperModule};
use superkit::roots::{g1ss_structural_scan, ClassificationOutcome, ScanVerdict, DEFAULT_SEED};
use superkit::structure::{is_quasireductive, is_reductive_even_part};
use superkit::superalgebra::LieSuperalgebra;
use superkit::supercomm::{
    self, is_nonvanishing, splitting_witness, OddDerivation, SupercommAlgebra,
};
use superkit::verify::{run_all, summarize, VerifyOptions, CRITERIA};
use superkit::Error;

const EXIT_VIOLATION: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_WITNESS: u8 = 3;
const EXIT_INCONCLUSIVE: u8 = 4;
const EXIT_NOT_IN_CONE: u8 = 5;

#[derive(Parser)]
#[command(name = "superkit", version, about = "Exact computations with finite-dimensional Lie superalgebras")]
struct Cli {
    /// Seed for every randomized procedure.
    #[arg(long, global = true, env = "SUPERKIT_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Accept algebra and module files that fail the axioms, with a warning.
    #[arg(long, global = true)]
    lax: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
#[group(required = true, multiple = false)]
struct AlgebraSource {
    /// Algebra file in the line-oriented text format.
    #[arg(long, value_name = "FILE")]
    algebra: Option<PathBuf>,
    /// Built-in family, e.g. gl:1:1, sl:2:1, osp1:2, torus:2, toy_odd_semisimple, product:osp1:1,osp1:1.
    #[arg(long, value_name = "SPEC")]
    family: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Validate the axioms and report quasireductivity and the center.
    Check {
        #[command(flatten)]
        source: AlgebraSource,
        /// Print the algebra in the text format after the report.
        #[arg(long)]
        emit: bool,
    },
    /// Classify the factors and search for an odd element with semisimple square.
    Classify {
        #[command(flatten)]
        source: AlgebraSource,
    },
    /// Compute the invariant of the coinvariant module and its counit.
    Ghost {
        #[arg(long, value_name = "SPEC", conflicts_with = "algebra", required_unless_present_any = ["algebra", "djokovic"])]
        family: Option<String>,
        #[arg(long, value_name = "FILE")]
        algebra: Option<PathBuf>,
        /// Check the explicit invariant of U(osp(1|2n)) instead.
        #[arg(long, value_name = "N", conflicts_with_all = ["family", "algebra"])]
        djokovic: Option<usize>,
    },
    /// Graded dimensions of the DS functor.
    Ds {
        #[command(flatten)]
        source: AlgebraSource,
        /// Odd element: positional coordinates or label=value pairs.
        #[arg(long, value_name = "COORDS", allow_hyphen_values = true)]
        u: String,
        /// Module file, or builtin:{trivial,defining,adjoint,induced}.
        #[arg(long, value_name = "MODULE", required_unless_present = "tensor")]
        module: Option<String>,
        /// Check DS(M (x) N) against DS(M) (x) DS(N).
        #[arg(long, num_args = 2, value_names = ["M", "N"])]
        tensor: Option<Vec<String>>,
    },
    /// Construct odd f with u(f) = 1.
    WitnessSplitting {
        /// Supercommutative algebra file with a derivation.
        #[arg(long, value_name = "FILE", conflicts_with = "catalog", required_unless_present = "catalog")]
        file: Option<PathBuf>,
        #[arg(long, value_enum)]
        catalog: Option<CatalogEntry>,
        /// With --catalog coinvariant-dual: the algebra.
        #[arg(long, value_name = "SPEC")]
        family: Option<String>,
        /// With --catalog coinvariant-dual: the odd element.
        #[arg(long, value_name = "COORDS", allow_hyphen_values = true)]
        u: Option<String>,
    },
    /// Validate a module and test it for semisimplicity.
    Modcheck {
        #[command(flatten)]
        source: AlgebraSource,
        /// Module file, or builtin:{trivial,defining,adjoint,induced}.
        #[arg(long, value_name = "MODULE")]
        module: String,
    },
    /// Run the acceptance suite.
    VerifyAll {
        /// Criterion tag or number: construction, classify, ghost, djokovic, crossval, ds, splitting, properties.
        #[arg(long)]
        filter: Option<String>,
        /// Inject a corrupted structure constant into the construction checks.
        #[arg(long, hide = true)]
        corrupt: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CatalogEntry {
    Exterior,
    Quadratic,
    Vanishing,
    CoinvariantDual,
}

/// A failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::DimensionMismatch { .. } => EXIT_PARSE,
            Error::NotInG1ss => EXIT_NOT_IN_CONE,
            _ => EXIT_VIOLATION,
        };
        Failure::new(code, e.to_string())
    }
}

type CmdResult = Result<u8, Failure>;

struct Ctx {
    seed: u64,
    json: bool,
    lax: bool,
}

impl Ctx {
    fn emit(&self, text: &str, value: Value) {
        if self.json {
            println!("{}", serde_json::to_string_pretty(&value).expect("JSON values serialize"));
        } else {
            print!("{text}");
        }
    }

    fn warn(&self, msg: &str) {
        eprintln!("warning: {msg}");
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::new(EXIT_PARSE, format!("cannot read {}: {e}", path.display())))
}

fn load_family(spec: &str) -> Result<LieSuperalgebra, Failure> {
    Ok(spec.parse::<FamilySpec>()?.build())
}

fn load_algebra(ctx: &Ctx, source: &AlgebraSource, strict: bool) -> Result<LieSuperalgebra, Failure> {
    if let Some(spec) = &source.family {
        return load_family(spec);
    }
    let path = source.algebra.as_ref().expect("clap enforces one source");
    let g = parse_algebra(&read(path)?)?;
    if strict {
        let report = g.validate();
        if !report.is_valid() {
            let first = report.describe(&g).into_iter().next().unwrap_or_default();
            if !ctx.lax {
                return Err(Failure::new(EXIT_VIOLATION, format!("{} fails the axioms: {first}", path.display())));
            }
            ctx.warn(&format!("{} fails the axioms: {first}", path.display()));
        }
    }
    Ok(g)
}

fn load_module(ctx: &Ctx, g: &LieSuperalgebra, source: &str) -> Result<SuperModule, Failure> {
    let m = match source.strip_prefix("builtin:") {
        Some("trivial") => SuperModule::trivial(g),
        Some("adjoint") => SuperModule::adjoint(g),
        Some("induced") => induced_trivial(g),
        Some("defining") => g
            .faithful_rep()
            .cloned()
            .ok_or_else(|| Failure::new(EXIT_VIOLATION, format!("{} has no defining module", g.name())))?,
        Some(other) => return Err(Failure::new(EXIT_PARSE, format!("unknown builtin module '{other}'"))),
        None => parse_module(&read(Path::new(source))?, g)?,
    };
    let report = m.validate(g);
    if !report.is_valid() {
        let msg = format!("module {source} fails the axioms: {:?}", report.violations[0]);
        if !ctx.lax {
            return Err(Failure::new(EXIT_VIOLATION, msg));
        }
        ctx.warn(&msg);
    }
    Ok(m)
}

fn render(g: &LieSuperalgebra, x: &[superkit::linalg::Rational]) -> String {
    linear_combination(x.iter().zip(g.labels().iter().map(String::as_str)))
}

fn check(ctx: &Ctx, source: &AlgebraSource, emit: bool) -> CmdResult {
    let g = load_algebra(ctx, source, false)?;
    let report = g.validate();
    let problems = report.describe(&g);
    let rep_ok = g.faithful_rep().map(|r| r.validate(&g).is_valid());
    let valid = report.is_valid() && rep_ok != Some(false);
    let (reductive, quasi) = if valid {
        (is_reductive_even_part(&g).ok(), is_quasireductive(&g).ok())
    } else {
        (None, None)
    };
    let center: Vec<String> = if valid { g.center().iter().map(|z| render(&g, z)).collect() } else { Vec::new() };
    let show = |b: Option<bool>| b.map_or("unknown".to_string(), |b| b.to_string());
    let mut text = format!(
        "algebra: {}\ndimension: {}|{}\naxioms: {}\n",
        g.name(),
        g.dim() - g.odd_dim(),
        g.odd_dim(),
        if report.is_valid() { "ok".to_string() } else { format!("{} violation(s)", problems.len()) }
    );
    for p in problems.iter().take(10) {
        text.push_str(&format!("  {p}\n"));
    }
    if rep_ok == Some(false) {
        text.push_str("faithful representation: fails the axioms\n");
    }
    text.push_str(&format!("reductive even part: {}\nquasireductive: {}\n", show(reductive), show(quasi)));
    text.push_str(&format!("center: {}\n", if center.is_empty() { "0".to_string() } else { center.join(", ") }));
    if emit {
        text.push_str(&superkit::io::write_algebra(&g));
    }
    ctx.emit(
        &text,
        json!({
            "algebra": g.name(),
            "even_dim": g.dim() - g.odd_dim(),
            "odd_dim": g.odd_dim(),
            "valid": valid,
            "violations": problems,
            "faithful_rep_valid": rep_ok,
            "reductive_even_part": reductive,
            "quasireductive": quasi,
            "center": center,
        }),
    );
    Ok(if valid { 0 } else { EXIT_VIOLATION })
}

fn classify(ctx: &Ctx, source: &AlgebraSource) -> CmdResult {
    let g = load_algebra(ctx, source, true)?;
    let report = match g1ss_structural_scan(&g, ctx.seed) {
        Ok(r) => r,
        Err(e) => {
            ctx.emit(&format!("Inconclusive: {e}\n"), json!({ "algebra": g.name(), "verdict": "Inconclusive", "reason": e.to_string() }));
            return Ok(EXIT_INCONCLUSIVE);
        }
    };
    let mut text = format!("algebra: {}\n", g.name());
    if report.decomposed {
        text.push_str(&format!("center dimension: {}\n", report.center_dim));
    } else {
        text.push_str("not a product of its center and simple ideals\n");
    }
    let mut factors = Vec::new();
    for (k, f) in report.factors.iter().enumerate() {
        let outcome = f.outcome.as_ref().map_or("even (no odd part)".to_string(), |o| o.to_string());
        text.push_str(&format!("factor {} (dim {}): {outcome}\n", k + 1, f.basis.len()));
        factors.push(json!({
            "dim": f.basis.len(),
            "outcome": outcome,
            "osp_n": match &f.outcome { Some(ClassificationOutcome::Osp(iso)) => Some(iso.n), _ => None },
        }));
    }
    if let Some(note) = &report.note {
        text.push_str(&format!("note: {note}\n"));
    }
    let (verdict, witness, code) = match &report.verdict {
        ScanVerdict::ZeroCone => ("ZeroCone", None, 0),
        ScanVerdict::Witness(u) => ("Witness", Some(u.clone()), EXIT_WITNESS),
        ScanVerdict::Inconclusive(_) => ("Inconclusive", None, EXIT_INCONCLUSIVE),
    };
    match (&report.verdict, &witness) {
        (ScanVerdict::ZeroCone, _) => text.push_str("verdict: every odd factor is osp(1|2n); the cone is {0}\n"),
        (_, Some(u)) => text.push_str(&format!("verdict: witness u = {}\nwitness coordinates: {}\n", render(&g, u), format_vector(u))),
        (ScanVerdict::Inconclusive(why), _) => text.push_str(&format!("verdict: inconclusive ({why})\n")),
        _ => {}
    }
    ctx.emit(
        &text,
        json!({
            "algebra": g.name(),
            "decomposed": report.decomposed,
            "center_dim": report.center_dim,
            "factors": factors,
            "verdict": verdict,
            "witness": witness.as_ref().map(|u| u.iter().map(format_rational).collect::<Vec<_>>()),
            "note": report.note,
        }),
    );
    Ok(code)
}

fn ghost(ctx: &Ctx, family: Option<&str>, algebra: Option<&Path>, djokovic: Option<usize>) -> CmdResult {
    if let Some(n) = djokovic {
        let r = verify_djokovic(n)?;
        let g = superkit::families::build_osp1(n);
        let left = CoinvariantSpace::new(&g, Side::Left);
        let labels: Vec<String> = (0..left.dim()).map(|m| if m == 0 { String::new() } else { left.subset_label(m) }).collect();
        let image = linear_combination(r.left_image.coords.iter().zip(labels.iter().map(String::as_str)));
        let text = format!(
            "osp(1|{}): v = {}\nimage in U/(U g0): {image}\ninvariant in U/(U g0): {}\nantipode image invariant in U/(g0 U): {}\neps(v) = {} (expected {})\n",
            2 * n,
            r.element.render(&g),
            r.left_invariant,
            r.right_invariant,
            format_rational(&r.epsilon),
            format_rational(&r.expected_epsilon),
        );
        ctx.emit(
            &text,
            json!({
                "n": n,
                "left_invariant": r.left_invariant,
                "right_invariant": r.right_invariant,
                "epsilon": format_rational(&r.epsilon),
                "expected_epsilon": format_rational(&r.expected_epsilon),
                "passed": r.passed(),
            }),
        );
        return Ok(if r.passed() { 0 } else { EXIT_VIOLATION });
    }
    let source = AlgebraSource { family: family.map(str::to_string), algebra: algebra.map(Path::to_path_buf) };
    let g = load_algebra(ctx, &source, true)?;
    let r = ghost_criterion(&g);
    let left = CoinvariantSpace::new(&g, Side::Left);
    let labels: Vec<String> = (0..left.dim()).map(|m| if m == 0 { String::new() } else { left.subset_label(m) }).collect();
    let v = r.ghost.as_ref().map(|gh| linear_combination(gh.v.coords.iter().zip(labels.iter().map(String::as_str))));
    let eps = r.ghost.as_ref().map(|gh| format_rational(&gh.epsilon));
    let text = format!(
        "algebra: {}\ncoinvariant dimension: {}\ninvariant dimension: {}\nv = {}\neps(v) = {}\nverdict: {}\n",
        g.name(),
        left.dim(),
        r.invariant_dim,
        v.clone().unwrap_or_else(|| "none".into()),
        eps.clone().unwrap_or_else(|| "none".into()),
        r.verdict
    );
    ctx.emit(
        &text,
        json!({
            "algebra": g.name(),
            "coinvariant_dim": left.dim(),
            "invariant_dim": r.invariant_dim,
            "right_invariant_dim": r.right_invariant_dim,
            "v": r.ghost.as_ref().map(|gh| gh.v.coords.iter().map(format_rational).collect::<Vec<_>>()),
            "epsilon": eps,
            "verdict": r.verdict.to_string(),
        }),
    );
    Ok(0)
}

fn ds(ctx: &Ctx, source: &AlgebraSource, u: &str, module: Option<&str>, tensor: Option<&[String]>) -> CmdResult {
    let g = load_algebra(ctx, source, true)?;
    let u = parse_element(u, &g)?;
    if !g.is_odd_element(&u) {
        return Err(Failure::new(EXIT_NOT_IN_CONE, "u is not purely odd"));
    }
    if !g.in_g1ss(&u)? {
        return Err(Failure::new(EXIT_NOT_IN_CONE, format!("u = {} does not have a semisimple square", render(&g, &u))));
    }
    let mut text = format!("algebra: {}\nu = {}\n", g.name(), render(&g, &u));
    let mut out = json!({ "algebra": g.name(), "u": u.iter().map(format_rational).collect::<Vec<_>>() });
    if let Some(src) = module {
        let m = load_module(ctx, &g, src)?;
        let r = ds_functor(&g, &u, &m)?;
        text.push_str(&format!(
            "module dims: {}|{}\nh-invariant dim: {}\nDS = {}|{}\n",
            m.even_dim(),
            m.odd_dim(),
            r.invariant_dim,
            r.even_dim,
            r.odd_dim
        ));
        out["module_dims"] = json!([m.even_dim(), m.odd_dim()]);
        out["ds"] = json!([r.even_dim, r.odd_dim]);
    }
    let mut code = 0;
    if let Some([a, b]) = tensor {
        let (m, n) = (load_module(ctx, &g, a)?, load_module(ctx, &g, b)?);
        let r = ds_tensor_check(&g, &u, &m, &n)?;
        text.push_str(&format!(
            "DS(M) = {}|{}, DS(N) = {}|{}\nDS(M (x) N) = {}|{}, expected {}|{}: {}\n",
            r.ds_left.0,
            r.ds_left.1,
            r.ds_right.0,
            r.ds_right.1,
            r.ds_tensor.0,
            r.ds_tensor.1,
            r.expected.0,
            r.expected.1,
            if r.holds() { "holds" } else { "FAILS" }
        ));
        out["tensor"] = json!({
            "ds_left": [r.ds_left.0, r.ds_left.1],
            "ds_right": [r.ds_right.0, r.ds_right.1],
            "ds_tensor": [r.ds_tensor.0, r.ds_tensor.1],
            "expected": [r.expected.0, r.expected.1],
            "holds": r.holds(),
        });
        if !r.holds() {
            code = EXIT_VIOLATION;
        }
    }
    ctx.emit(&text, out);
    Ok(code)
}

fn witness_splitting(
    ctx: &Ctx,
    file: Option<&Path>,
    catalog: Option<CatalogEntry>,
    family: Option<&str>,
    u: Option<&str>,
) -> CmdResult {
    let (a, d): (SupercommAlgebra, OddDerivation) = match (file, catalog) {
        (Some(path), _) => {
            let (a, d) = parse_supercomm(&read(path)?)?;
            let d = d.ok_or_else(|| Failure::new(EXIT_PARSE, "file has no 'derivation' lines"))?;
            (a, d)
        }
        (None, Some(CatalogEntry::Exterior)) => supercomm::exterior_one(),
        (None, Some(CatalogEntry::Quadratic)) => supercomm::quadratic_unit_example(),
        (None, Some(CatalogEntry::Vanishing)) => supercomm::vanishing_example(),
        (None, Some(CatalogEntry::CoinvariantDual)) => {
            let spec = family.ok_or_else(|| Failure::new(EXIT_PARSE, "coinvariant-dual needs --family"))?;
            let g = load_family(spec)?;
            let x: RatVector = match u {
                Some(s) => parse_element(s, &g)?,
                None => return Err(Failure::new(EXIT_PARSE, "coinvariant-dual needs --u")),
            };
            supercomm::coinvariant_dual(&g, &x)?
        }
        (None, None) => unreachable!("clap requires a source"),
    };
    let report = a.validate();
    let dreport = a.validate_derivation(&d);
    if !report.is_valid() || !dreport.is_valid() {
        let first = report.violations.iter().chain(&dreport.violations).next();
        let msg = format!("{} fails the axioms: {first:?}", a.name());
        if !ctx.lax {
            return Err(Failure::new(EXIT_VIOLATION, msg));
        }
        ctx.warn(&msg);
    }
    let nonvanishing = is_nonvanishing(&a, &d);
    match splitting_witness(&a, &d) {
        Ok(w) => {
            let check = d.apply(&w.f);
            let text = format!(
                "algebra: {} (dim {})\nnon-vanishing: {nonvanishing}\np = {}\neta = {}\np0 = {}\nalpha = {}\nf = {}\nu(f) = {}\n",
                a.name(),
                a.dim(),
                a.format_element(&w.p),
                a.format_element(&w.eta),
                a.format_element(&w.p0),
                a.format_element(&w.alpha),
                a.format_element(&w.f),
                a.format_element(&check)
            );
            ctx.emit(
                &text,
                json!({
                    "algebra": a.name(),
                    "nonvanishing": nonvanishing,
                    "f": w.f.iter().map(format_rational).collect::<Vec<_>>(),
                    "u_of_f_is_unit": &check == a.unit(),
                }),
            );
            Ok(if &check == a.unit() { 0 } else { EXIT_VIOLATION })
        }
        Err(e) => Err(Failure::new(EXIT_VIOLATION, format!("{}: {e}", a.name()))),
    }
}

fn modcheck(ctx: &Ctx, source: &AlgebraSource, module: &str) -> CmdResult {
    let g = load_algebra(ctx, source, true)?;
    let lax = Ctx { lax: true, ..*ctx };
    let m = load_module(&lax, &g, module)?;
    let report = m.validate(&g);
    let semisimple = if report.is_valid() { Some(is_module_semisimple(&g, &m)?) } else { None };
    let mut text = format!("algebra: {}\nmodule dims: {}|{}\n", g.name(), m.even_dim(), m.odd_dim());
    if report.is_valid() {
        text.push_str("axioms: ok\n");
    } else {
        text.push_str(&format!("axioms: {} violation(s)\n", report.violations.len()));
        for v in report.violations.iter().take(10) {
            text.push_str(&format!("  {v:?}\n"));
        }
    }
    if let Some(s) = semisimple {
        text.push_str(&format!("semisimple: {s}\n"));
    }
    ctx.emit(
        &text,
        json!({
            "algebra": g.name(),
            "dims": [m.even_dim(), m.odd_dim()],
            "valid": report.is_valid(),
            "violations": report.violations.iter().map(|v| format!("{v:?}")).collect::<Vec<_>>(),
            "semisimple": semisimple,
        }),
    );
    Ok(if report.is_valid() { 0 } else { EXIT_VIOLATION })
}

fn verify_all(ctx: &Ctx, filter: Option<String>, corrupt: bool) -> CmdResult {
    if let Some(f) = &filter {
        let known = CRITERIA.iter().any(|(tag, _)| tag.eq_ignore_ascii_case(f))
            || f.parse::<usize>().is_ok_and(|k| (1..=CRITERIA.len()).contains(&k));
        if !known {
            return Err(Failure::new(EXIT_PARSE, format!("unknown filter '{f}'")));
        }
    }
    let opts = VerifyOptions { seed: ctx.seed, filter, corrupt };
    let results = run_all(&opts);
    let summary = summarize(&results);
    let mut text = String::new();
    for r in &results {
        text.push_str(&r.line());
        text.push('\n');
    }
    text.push('\n');
    for s in &summary {
        text.push_str(&format!(
            "criterion {} {}: {} ({} checks, {} failed, {:.0} ms)\n",
            s.criterion,
            s.tag,
            if s.passed { "PASS" } else { "FAIL" },
            s.checks,
            s.failures,
            s.millis
        ));
    }
    let first_failure = results.iter().find(|r| !r.passed);
    if let Some(f) = first_failure {
        text.push_str(&format!("first failure: criterion {} ({}): {}: {}\n", f.criterion, f.tag, f.name, f.detail));
    }
    ctx.emit(&text, json!({ "seed": ctx.seed, "criteria": summary, "checks": results }));
    match first_failure {
        Some(f) => {
            eprintln!("verify-all failed at criterion {} ({}): {}", f.criterion, f.tag, f.detail);
            Ok(EXIT_VIOLATION)
        }
        None => Ok(0),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx { seed: cli.seed, json: cli.json, lax: cli.lax };
    let result = match cli.command {
        Command::Check { source, emit } => check(&ctx, &source, emit),
        Command::Classify { source } => classify(&ctx, &source),
        Command::Ghost { family, algebra, djokovic } => ghost(&ctx, family.as_deref(), algebra.as_deref(), djokovic),
        Command::Ds { source, u, module, tensor } => ds(&ctx, &source, &u, module.as_deref(), tensor.as_deref()),
        Command::WitnessSplitting { file, catalog, family, u } => {
            witness_splitting(&ctx, file.as_deref(), catalog, family.as_deref(), u.as_deref())
        }
        Command::Modcheck { source, module } => modcheck(&ctx, &source, &module),
        Command::VerifyAll { filter, corrupt } => verify_all(&ctx, filter, corrupt),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            if ctx.json {
                println!("{}", json!({ "error": f.message, "exit_code": f.code }));
            }
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

