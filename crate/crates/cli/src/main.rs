//! `hyperval`: validate, classify and compare hyperfields, and run the
//! valuation checks and worked examples of `hyperval-core`.
//!
//! Exit codes: 0 when every requested check passes, 1 on an axiom failure
//! (the report carries witnesses), 2 on unparseable input, 3 on internal
//! errors.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value as Json};

use hyperval_core::hcore::classify::{list_hyperideals, non_quotient_certificate, quotient_search, superiorly_canonical_report};
use hyperval_core::hcore::enumerate::DEFAULT_ORDER_CAP;
use hyperval_core::hcore::table::bits;
use hyperval_core::hcore::{
    build_finite_field, build_k, build_s, build_w, classify, enumerate_hyperfields, find_isomorphism, is_field,
    quotient_hyperfield, subgroup_generators, validate, FiniteHyperfield, GroupDescriptor, SubgroupSpec,
};
use hyperval_core::ltfield::{Composite, LtContext, UnitClassField};
use hyperval_core::report::REPORT_VERSION;
use hyperval_core::scenarios::{run_scenario, ScenarioParams};
use hyperval_core::tropical::tropical_axiom_suite;
use hyperval_core::valn::coarsen::coarsening_report;
use hyperval_core::valn::{
    check_coarsening_theorem, check_krasner, check_superiorly_canonical, residue_hyperfield, Domain, Ultrametric,
    Valuation,
};
use hyperval_core::{ConvexSubgroup, Error, Hyperfield, ValidationReport};

const DEFAULT_BOUND: i64 = 3;
const DEFAULT_COEFF_BOUND: i64 = 4;

#[derive(Parser)]
#[command(name = "hyperval", version, about = "Krasner hyperfields and their valuations")]
struct Cli {
    /// Render reports as JSON (default) or as a plain-text table.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Check the hyperfield axioms of a table, or of T(Z^n) on a window.
    Axioms {
        /// `builtin:K|S|W|F<q>`, `tropical:<n>`, `tropical-strict:<n>` or a table file.
        input: String,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        window_bound: i64,
    },
    /// Field, characteristic and superior-canonicity predicates of a table.
    Classify { input: String },
    /// Build the factor hyperfield (F_q)_T.
    Quotient {
        #[arg(long)]
        field: u64,
        /// Coefficients of the modulus, constant term first.
        #[arg(long, value_delimiter = ',')]
        modulus: Option<Vec<u64>>,
        /// `squares`, `all`, `trivial`, `index:<k>` or `gens:<a,b,..>`.
        #[arg(long, default_value = "squares")]
        subgroup: String,
        /// Write the table here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Search for an isomorphism between two tables.
    Iso { left: String, right: String },
    /// All hyperfields of the given order up to isomorphism.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
        cap: usize,
        /// `all` or a product of cyclic groups such as `C2xC2`.
        #[arg(long, default_value = "all")]
        group: String,
    },
    /// All hyperideals of a table; a hyperfield has exactly {0} and itself.
    Hyperideals { input: String },
    /// KVH1, KVH2, superior canonicity and the ultrametric of a valued backend.
    Krasner(Backend),
    /// The residue hyperfield O_v / M_v.
    Residue {
        #[command(flatten)]
        backend: Backend,
        /// A table with its trivial valuation, instead of an infinite backend.
        #[arg(long, conflicts_with_all = ["q", "p", "unit_class"])]
        table: Option<String>,
    },
    /// Coarsen the valuation of a backend and check the coarsening theorem.
    Coarsen {
        #[command(flatten)]
        backend: Backend,
        /// Coarsen by the convex subgroup {0}^k x Z^(n-k); default ig(rho).
        #[arg(long)]
        suffix: Option<usize>,
    },
    /// Run a worked example end to end.
    Scenario {
        name: String,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        gamma: Option<usize>,
        #[arg(long)]
        bound: Option<i64>,
        #[arg(long)]
        coeff_bound: Option<i64>,
    },
}

/// An infinite valued backend: `K_γ(F_q)` by default, the composite
/// valuation on `Q(X)` with `--p`, or `Q(X)` modulo `X`-adic units.
#[derive(Args)]
struct Backend {
    #[arg(long, default_value_t = 3)]
    q: u64,
    #[arg(long, default_value_t = 1)]
    gamma: usize,
    #[arg(long, value_delimiter = ',')]
    modulus: Option<Vec<u64>>,
    /// Use the composite valuation v_p ∘ v_X on Q(X).
    #[arg(long, conflicts_with = "unit_class")]
    p: Option<u64>,
    /// Use Q(X) modulo the units of the X-adic valuation ring.
    #[arg(long)]
    unit_class: bool,
    #[arg(long, default_value_t = DEFAULT_BOUND)]
    window_bound: i64,
    /// Rational numerator and denominator bound for the composite backend.
    #[arg(long, default_value_t = DEFAULT_COEFF_BOUND)]
    coeff_bound: i64,
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::RankMismatch { .. } | Error::DivisionByZero | Error::InconsistentRing(_) => {
                Failure::Internal(e.to_string())
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

/// What a command produced: a pass/fail verdict and a JSON result.
struct Outcome {
    passed: bool,
    result: Json,
    text: String,
}

impl Outcome {
    fn report(report: &ValidationReport) -> Self {
        Outcome { passed: report.passed(), result: to_json(report), text: report.to_string() }
    }
}

fn to_json<T: Serialize>(x: &T) -> Json {
    serde_json::to_value(x).expect("reports serialize")
}

fn load_table(input: &str) -> Result<FiniteHyperfield, Failure> {
    if let Some(name) = input.strip_prefix("builtin:") {
        return Ok(match name {
            "K" => build_k(),
            "S" => build_s(),
            "W" => build_w(),
            _ => {
                let q = name
                    .strip_prefix('F')
                    .and_then(|q| q.parse().ok())
                    .ok_or_else(|| Failure::Input(format!("unknown builtin `{name}`; expected K, S, W or F<q>")))?;
                build_finite_field(q, None)?
            }
        });
    }
    let text = fs::read_to_string(Path::new(input)).map_err(|e| Failure::Input(format!("{input}: {e}")))?;
    Ok(FiniteHyperfield::from_json(&text)?)
}

fn axioms(input: &str, bound: i64) -> Result<Outcome, Failure> {
    for (prefix, strict) in [("tropical:", false), ("tropical-strict:", true)] {
        if let Some(rank) = input.strip_prefix(prefix) {
            let rank = rank.parse().map_err(|_| Failure::Input(format!("bad rank in `{input}`")))?;
            return Ok(Outcome::report(&tropical_axiom_suite(rank, strict, bound)));
        }
    }
    Ok(Outcome::report(&validate(&load_table(input)?)))
}

fn classify_cmd(input: &str) -> Result<Outcome, Failure> {
    let f = load_table(input)?;
    let class = classify(&f);
    let sch = superiorly_canonical_report(&f);
    let certificate = non_quotient_certificate(&f);
    let witness = quotient_search(&f, 32);
    let text = format!(
        "{}\nfield: {}\nchar 2: {}\ncchar 1: {}\nstringent: {}\n{sch}",
        f.name(),
        class.is_field,
        class.char2,
        class.cchar1,
        class.stringent
    );
    let result = json!({
        "subject": f.name(),
        "classification": class,
        "superiorly_canonical": sch,
        "non_quotient_certificate": certificate,
        "quotient_witness": witness,
    });
    Ok(Outcome { passed: true, result, text })
}

fn quotient(field: u64, modulus: Option<&[u64]>, subgroup: &str, output: Option<&Path>) -> Result<Option<String>, Failure> {
    let k = build_finite_field(field, modulus)?;
    let spec: SubgroupSpec = subgroup.parse()?;
    let gens = subgroup_generators(&k, &spec)?;
    let kt = quotient_hyperfield(&k, &gens)?;
    let text = kt.to_json();
    match output {
        Some(path) => {
            fs::write(path, text + "\n").map_err(|e| Failure::Internal(format!("{}: {e}", path.display())))?;
            Ok(None)
        }
        None => Ok(Some(text)),
    }
}

fn iso(left: &str, right: &str) -> Result<Outcome, Failure> {
    let (f, g) = (load_table(left)?, load_table(right)?);
    let m = find_isomorphism(&f, &g);
    let map: Option<Vec<[String; 2]>> = m.as_ref().map(|m| {
        m.map.iter().enumerate().map(|(x, &y)| [f.name_of(x).to_string(), g.name_of(y).to_string()]).collect()
    });
    let text = match &map {
        Some(pairs) => {
            let shown: Vec<String> = pairs.iter().map(|[a, b]| format!("{a} -> {b}")).collect();
            format!("{} ≅ {}\n  {}\n", f.name(), g.name(), shown.join(", "))
        }
        None => format!("{} and {} are not isomorphic\n", f.name(), g.name()),
    };
    let result = json!({ "left": f.name(), "right": g.name(), "isomorphic": m.is_some(), "map": map });
    Ok(Outcome { passed: m.is_some(), result, text })
}

fn enumerate(order: usize, cap: usize, group: &str) -> Result<Outcome, Failure> {
    let group: GroupDescriptor = group.parse()?;
    let found = enumerate_hyperfields(order, &group, cap)?;
    let mut text = format!("{} hyperfields of order {order}\n", found.len());
    let entries: Vec<Json> = found
        .iter()
        .map(|f| {
            text.push_str(&f.to_string());
            json!({ "table": to_json(f), "classification": classify(f) })
        })
        .collect();
    let result = json!({ "order": order, "count": found.len(), "hyperfields": entries });
    Ok(Outcome { passed: true, result, text })
}

fn hyperideals(input: &str) -> Result<Outcome, Failure> {
    let f = load_table(input)?;
    let ideals = list_hyperideals(&f).ok_or_else(|| Failure::Input(format!("{} is too large to search", f.name())))?;
    let named: Vec<Vec<&str>> = ideals.iter().map(|&m| bits(m).map(|x| f.name_of(x)).collect()).collect();
    let trivial_only = ideals == [1, f.full_mask()];
    let text = named.iter().map(|i| format!("{{{}}}\n", i.join(", "))).collect();
    let result = json!({ "subject": f.name(), "hyperideals": named, "only_trivial": trivial_only });
    Ok(Outcome { passed: trivial_only, result, text })
}

/// Runs `k` on the backend selected by `b` with its canonical valuation,
/// norm and window.
fn with_backend<R>(b: &Backend, k: impl BackendFn<R>) -> Result<R, Failure> {
    if let Some(p) = b.p {
        let f = Composite::new(p)?;
        let dom = Domain::bounded(f.enumerate_window(b.window_bound, b.coeff_bound)?, b.window_bound, Some(b.coeff_bound));
        let rho = f.norm();
        return k.run(&f, &rho, &dom);
    }
    if b.unit_class {
        let f = UnitClassField;
        let dom = Domain::bounded(f.enumerate_window(b.window_bound), b.window_bound, None);
        let rho = hyperval_core::Cut::at_most(&hyperval_core::GroupElem::scalar(0));
        return k.run(&f, &rho, &dom);
    }
    let f = LtContext::new(b.q, b.modulus.as_deref(), b.gamma)?;
    let dom = Domain::bounded(f.enumerate_window(b.window_bound)?, b.window_bound, None);
    let rho = f.norm();
    k.run(&f, &rho, &dom)
}

trait BackendFn<R> {
    fn run<F: Hyperfield>(self, f: &F, rho: &hyperval_core::Cut, dom: &Domain<F::Elem>) -> Result<R, Failure>;
}

struct KrasnerCmd;

impl BackendFn<Outcome> for KrasnerCmd {
    fn run<F: Hyperfield>(self, f: &F, rho: &hyperval_core::Cut, dom: &Domain<F::Elem>) -> Result<Outcome, Failure> {
        let v = Valuation::canonical(f);
        let mut report = check_krasner(f, &v, rho, dom);
        report.extend(check_superiorly_canonical(f, dom));
        if let Ok(d) = Ultrametric::new(f, v, rho.clone(), dom) {
            report.extend(d.check());
        }
        Ok(Outcome::report(&report))
    }
}

struct ResidueCmd;

fn residue_outcome(k: FiniteHyperfield) -> Outcome {
    let field = is_field(&k);
    let text = format!("{k}field: {field}\n");
    Outcome { passed: true, result: json!({ "residue": to_json(&k), "is_field": field }), text }
}

impl BackendFn<Outcome> for ResidueCmd {
    fn run<F: Hyperfield>(self, f: &F, _: &hyperval_core::Cut, dom: &Domain<F::Elem>) -> Result<Outcome, Failure> {
        Ok(residue_outcome(residue_hyperfield(f, &Valuation::canonical(f), dom)?))
    }
}

struct CoarsenCmd(Option<usize>);

impl BackendFn<Outcome> for CoarsenCmd {
    fn run<F: Hyperfield>(self, f: &F, rho: &hyperval_core::Cut, dom: &Domain<F::Elem>) -> Result<Outcome, Failure> {
        let v = Valuation::canonical(f);
        let rank = v.rank();
        let delta = match self.0 {
            Some(k) => ConvexSubgroup::new(rank, k)?,
            None => rho.invariance_group(rank),
        };
        let report = coarsening_report(f, &v, delta, dom);
        let verdict = check_coarsening_theorem(f, &v, rho, dom);
        let text = format!("{report}coarsening theorem: {}\n", verdict.holds);
        let result = json!({ "delta": delta, "report": report, "coarsening_theorem": verdict });
        Ok(Outcome { passed: report.passed() && verdict.holds, result, text })
    }
}

fn run(cli: &Cli) -> Result<Option<Outcome>, Failure> {
    let outcome = match &cli.command {
        Command::Axioms { input, window_bound } => axioms(input, *window_bound)?,
        Command::Classify { input } => classify_cmd(input)?,
        Command::Quotient { field, modulus, subgroup, output } => {
            if let Some(text) = quotient(*field, modulus.as_deref(), subgroup, output.as_deref())? {
                emit(&(text + "\n"));
            }
            return Ok(None);
        }
        Command::Iso { left, right } => iso(left, right)?,
        Command::Enumerate { order, cap, group } => enumerate(*order, *cap, group)?,
        Command::Hyperideals { input } => hyperideals(input)?,
        Command::Krasner(b) => with_backend(b, KrasnerCmd)?,
        Command::Residue { backend, table } => match table {
            Some(t) => {
                let f = load_table(t)?;
                residue_outcome(residue_hyperfield(&f, &Valuation::trivial(), &Domain::of_table(&f))?)
            }
            None => with_backend(backend, ResidueCmd)?,
        },
        Command::Coarsen { backend, suffix } => with_backend(backend, CoarsenCmd(*suffix))?,
        Command::Scenario { name, p, q, gamma, bound, coeff_bound } => {
            let params = ScenarioParams { p: *p, q: *q, gamma: *gamma, bound: *bound, coeff_bound: *coeff_bound };
            let report = run_scenario(name, &params)?;
            let text = report
                .claims
                .iter()
                .map(|c| format!("  {:<4} {}  ({})\n", if c.holds { "pass" } else { "FAIL" }, c.claim, c.detail))
                .collect::<String>();
            let text = format!("scenario {}\n{text}", report.scenario);
            Outcome { passed: report.passed(), result: to_json(&report), text }
        }
    };
    Ok(Some(outcome))
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Axioms { .. } => "axioms",
        Command::Classify { .. } => "classify",
        Command::Quotient { .. } => "quotient",
        Command::Iso { .. } => "iso",
        Command::Enumerate { .. } => "enumerate",
        Command::Hyperideals { .. } => "hyperideals",
        Command::Krasner(_) => "krasner",
        Command::Residue { .. } => "residue",
        Command::Coarsen { .. } => "coarsen",
        Command::Scenario { .. } => "scenario",
    }
}

/// Writes to stdout; a closed pipe is not an error.
fn emit(text: &str) {
    let mut out = io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(out)) => {
            match cli.format {
                Format::Json => {
                    let envelope = json!({
                        "tool": "hyperval",
                        "version": env!("CARGO_PKG_VERSION"),
                        "report_version": REPORT_VERSION,
                        "command": command_name(&cli.command),
                        "passed": out.passed,
                        "result": out.result,
                    });
                    emit(&(serde_json::to_string_pretty(&envelope).expect("json") + "\n"));
                }
                Format::Table => emit(&out.text),
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}
