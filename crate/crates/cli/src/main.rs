use clap::{Args, Parser, Subcommand, ValueEnum};
use coxeter_dual::absolute::{
    enumerate_nc, leq_t, standard_coxeter_elements, StandardCoxeterElement,
};
use coxeter_dual::garside::{
    braid_equal, check_dual_lemmas, check_simple_duals, dual_atoms, mikado_lift, nf,
    simple_dual, verify_main_theorem,
};
use coxeter_dual::hecke::check_positivity;
use coxeter_dual::report::Report;
use coxeter_dual::sortable::{
    check_explicit_sc, check_key_lemma, sc, sortable_elements, svg, PolygonModel,
};
use coxeter_dual::{build_system, perm, CoxeterSystem, CoxeterType, Element, Error, Family};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "coxdual", version, about = "Simple dual braids as Mikado braids in finite Coxeter groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print x_c as a Mikado word with its normal form.
    Simple {
        #[command(flatten)]
        common: Common,
        /// Cycle notation in types A/B/D, an S-word, or reflections separated by `|`.
        #[arg(long)]
        x: String,
    },
    /// Run verification checks over one or all standard Coxeter elements.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Comma-separated subset of main, key_lemma, dual_lemmas, atoms, mikado, positivity, sc.
        #[arg(long, default_value = "main")]
        checks: String,
        /// Omit timings so that repeated runs give identical output.
        #[arg(long)]
        no_timing: bool,
    },
    /// Draw the polygon model of x as SVG.
    Draw {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "e")]
        x: String,
    },
    /// List the noncrossing partitions or the c-sortable elements.
    List {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "nc")]
        what: ListKind,
    },
}

#[derive(Args)]
struct Common {
    /// Coxeter type, e.g. A3, B4, D5, I2(7), H3, F4, E6.
    #[arg(long = "type")]
    ctype: String,
    /// Standard Coxeter element as comma-separated simple names, e.g. s1,s2,s3, or in cycle
    /// notation for types A/B/D.
    #[arg(long)]
    coxeter: Option<String>,
    /// Write the output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Allow types whose exhaustive checks are beyond desk scale (E7, E8).
    #[arg(long)]
    force: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Svg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ListKind {
    Nc,
    Sortable,
}

const CHECKS: [&str; 7] = ["main", "key_lemma", "dual_lemmas", "atoms", "mikado", "positivity", "sc"];

/// A failure with its exit code: 1 violation, 2 usage, 3 unsupported.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn unsupported(message: impl Into<String>) -> Failure {
    Failure {
        code: 3,
        message: message.into(),
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnsupportedType(_) | Error::WrongType { .. } | Error::CapExceeded(_) => {
                unsupported(e.to_string())
            }
            Error::Parse(_) | Error::NotBelowCoxeter | Error::NotCoxeterWord(_) => usage(e.to_string()),
            _ => Failure {
                code: 1,
                message: e.to_string(),
            },
        }
    }
}

type CliResult<T> = Result<T, Failure>;

struct Context {
    sys: CoxeterSystem,
    coxeter: Option<StandardCoxeterElement>,
}

impl Context {
    fn new(common: &Common) -> CliResult<Self> {
        let ctype: CoxeterType = common.ctype.parse()?;
        if ctype.family == Family::E && ctype.rank >= 7 && !common.force {
            return Err(unsupported(format!(
                "UnsupportedAtDeskScale: {ctype} is refused without --force"
            )));
        }
        let sys = build_system(ctype)?;
        let coxeter = match &common.coxeter {
            Some(text) if text.contains('(') || text.contains('[') => {
                let w = parse_element(&sys, text)?;
                Some(StandardCoxeterElement::from_element(&sys, &w)?)
            }
            Some(text) => Some(StandardCoxeterElement::parse(&sys, text)?),
            None => None,
        };
        Ok(Self { sys, coxeter })
    }

    /// The given Coxeter element, or the product of the simples in index order.
    fn single(&self) -> CliResult<StandardCoxeterElement> {
        match &self.coxeter {
            Some(c) => Ok(c.clone()),
            None => Ok(StandardCoxeterElement::new(&self.sys, (0..self.sys.rank()).collect())?),
        }
    }

    fn all(&self) -> Vec<StandardCoxeterElement> {
        match &self.coxeter {
            Some(c) => vec![c.clone()],
            None => standard_coxeter_elements(&self.sys),
        }
    }

    fn labels(&self, w: &Element) -> Vec<i32> {
        self.sys.word_labels(w)
    }
}

fn is_classical(sys: &CoxeterSystem) -> bool {
    matches!(sys.ctype().family, Family::A | Family::B | Family::D)
}

/// Cycle notation (types A/B/D), a word in the simples, or `|`-separated reflections.
fn parse_element(sys: &CoxeterSystem, text: &str) -> CliResult<Element> {
    let text = text.trim();
    if text.contains('(') || text.contains('[') {
        if !is_classical(sys) {
            return Err(usage("cycle notation needs type A, B or D"));
        }
        let images = perm::parse_cycles(sys, text)?;
        return Ok(perm::from_perm(sys, &images)?);
    }
    if text.contains('|') {
        let mut w = sys.identity().clone();
        for part in text.split('|') {
            let t = sys.word_element(&sys.parse_word(part)?);
            if sys.reflection_index(&t).is_none() {
                return Err(usage(format!("{:?} is not a reflection", part.trim())));
            }
            w = w.compose(&t);
        }
        return Ok(w);
    }
    Ok(sys.word_element(&sys.parse_word(text)?))
}

fn describe(sys: &CoxeterSystem, w: &Element) -> String {
    if is_classical(sys) {
        if let Ok(images) = perm::to_perm(sys, w) {
            return perm::format_cycles(sys, &images);
        }
    }
    sys.format_word(&sys.reduced_word(w))
}

fn emit(out: &Option<PathBuf>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize") + "\n"
}

fn cmd_simple(common: &Common, x_spec: &str) -> CliResult<()> {
    let ctx = Context::new(common)?;
    let sys = &ctx.sys;
    let c = ctx.single()?;
    let x = parse_element(sys, x_spec)?;
    if !leq_t(sys, &x, &c.element) {
        return Err(Error::NotBelowCoxeter.into());
    }
    let y = x.inverse().compose(&c.element);
    let sy = sc(sys, &c, &y)?;
    let word = mikado_lift(sys, &x, &sy);
    let form = nf(sys, &word);
    let atoms = dual_atoms(sys, &c)?;
    let agrees = braid_equal(sys, &word, &simple_dual(sys, &atoms, &x)?);
    if !agrees {
        return Err(Failure {
            code: 1,
            message: "Mikado word and product of atoms differ".into(),
        });
    }
    let text = match common.format.unwrap_or(Format::Text) {
        Format::Json => pretty(&json!({
            "type": sys.ctype().to_string(),
            "coxeter": c.word.iter().map(|&s| sys.label(s)).collect::<Vec<_>>(),
            "x": ctx.labels(&x),
            "length": x.length(),
            "y": ctx.labels(&y),
            "sc_y": ctx.labels(&sy),
            "word": word.format(sys),
            "letters": word.to_json(sys).letters,
            "normal_form": form.to_json(sys),
        })),
        Format::Text => format!(
            "x = {}\nl(x) = {}\nS_c(y) = {}\nx_c = {}\nnormal form = {}\n",
            describe(sys, &x),
            x.length(),
            describe(sys, &sy),
            word.format(sys),
            form.format(sys)
        ),
        Format::Svg => return Err(usage("simple has no SVG output")),
    };
    emit(&common.out, &text)
}

fn run_check(sys: &CoxeterSystem, c: &StandardCoxeterElement, check: &str) -> CliResult<Report> {
    Ok(match check {
        "main" => verify_main_theorem(sys, c)?,
        "key_lemma" => check_key_lemma(sys, c)?,
        "dual_lemmas" => check_dual_lemmas(sys, c)?,
        "mikado" => check_simple_duals(sys, c, coxeter_dual::absolute::HURWITZ_CAP)?,
        "positivity" => check_positivity(sys, c)?,
        "sc" => check_explicit_sc(sys, c)?,
        "atoms" => {
            let mut report = Report::new(
                "atoms",
                sys.ctype().to_string(),
                c.word.iter().map(|&s| sys.label(s)).collect(),
            );
            match dual_atoms(sys, c) {
                Ok(table) => report.checked = table.atoms.len(),
                Err(e @ (Error::AtomMismatch(_) | Error::Normalization(_))) => {
                    report.push(Vec::new(), e.to_string())
                }
                Err(e) => return Err(e.into()),
            }
            report
        }
        other => return Err(usage(format!("unknown check {other:?}"))),
    })
}

fn cmd_verify(common: &Common, checks: &str, no_timing: bool) -> CliResult<bool> {
    let checks: Vec<&str> = checks
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    if checks.is_empty() {
        return Err(usage("--checks is empty"));
    }
    if let Some(bad) = checks.iter().find(|c| !CHECKS.contains(c)) {
        return Err(usage(format!("unknown check {bad:?}; expected one of {}", CHECKS.join(", "))));
    }
    let ctx = Context::new(common)?;
    let sys = &ctx.sys;
    let mut entries = Vec::new();
    let mut lines = String::new();
    let mut total = 0;
    for c in ctx.all() {
        for &check in &checks {
            let start = Instant::now();
            let report = run_check(sys, &c, check)?;
            let ms = start.elapsed().as_millis();
            total += report.violations.len();
            let timing = if no_timing { String::new() } else { format!(" ({ms} ms)") };
            lines.push_str(&format!(
                "{} c={} {}: {} NC, {} checked, {} violations{}\n",
                report.ctype,
                sys.format_word(&c.word).replace(' ', ","),
                report.check,
                report.nc_count,
                report.checked,
                report.violations.len(),
                timing
            ));
            for v in report.violations.iter().take(5) {
                lines.push_str(&format!("  x={:?}: {}\n", v.x, v.detail));
            }
            let mut entry = serde_json::to_value(&report).expect("reports serialize");
            if !no_timing {
                entry["elapsed_ms"] = json!(ms);
            }
            entries.push(entry);
        }
    }
    let text = match common.format.unwrap_or(Format::Text) {
        Format::Json => pretty(&json!({
            "type": sys.ctype().to_string(),
            "checks": checks,
            "violations": total,
            "reports": entries,
        })),
        Format::Text => {
            lines.push_str(&format!("total violations: {total}\n"));
            lines
        }
        Format::Svg => return Err(usage("verify has no SVG output")),
    };
    emit(&common.out, &text)?;
    Ok(total == 0)
}

fn cmd_draw(common: &Common, x_spec: &str) -> CliResult<()> {
    let ctx = Context::new(common)?;
    let sys = &ctx.sys;
    if !is_classical(sys) {
        return Err(Error::WrongType {
            expected: "A, B or D",
            got: sys.ctype().to_string(),
        }
        .into());
    }
    let c = ctx.single()?;
    let x = parse_element(sys, x_spec)?;
    let model = PolygonModel::new(sys, &c, &x)?;
    let text = match common.format.unwrap_or(Format::Svg) {
        Format::Svg => svg::render(&model),
        Format::Json => pretty(&json!({
            "type": sys.ctype().to_string(),
            "x": describe(sys, &x),
            "left": model.left,
            "right": model.right,
            "middle": model.middle,
            "polygons": model.polygons,
            "line": model.line_notation()?,
        })),
        Format::Text => format!(
            "x = {}\npolygons = {:?}\nline = {:?}\n",
            describe(sys, &x),
            model.polygons,
            model.line_notation()?
        ),
    };
    emit(&common.out, &text)
}

fn cmd_list(common: &Common, what: ListKind) -> CliResult<()> {
    let ctx = Context::new(common)?;
    let sys = &ctx.sys;
    let c = ctx.single()?;
    let items: Vec<Element> = match what {
        ListKind::Nc => enumerate_nc(sys, &c).into_iter().map(|x| x.element).collect(),
        ListKind::Sortable => sortable_elements(sys, &c),
    };
    let text = match common.format.unwrap_or(Format::Text) {
        Format::Json => pretty(&json!(items.iter().map(|w| ctx.labels(w)).collect::<Vec<_>>())),
        Format::Text => items.iter().map(|w| describe(sys, w) + "\n").collect(),
        Format::Svg => return Err(usage("list has no SVG output")),
    };
    emit(&common.out, &text)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Simple { common, x } => cmd_simple(common, x).map(|_| true),
        Command::Verify {
            common,
            checks,
            no_timing,
        } => cmd_verify(common, checks, *no_timing),
        Command::Draw { common, x } => cmd_draw(common, x).map(|_| true),
        Command::List { common, what } => cmd_list(common, *what).map(|_| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("coxdual: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
