//! Command-line front end.
//!
//! Exit codes: 0 success, 1 domain failure, 2 usage or parse failure.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bicrossed::BicrossedData;
use crate::brace::SkewBrace;
use crate::error::{Error, Result};
use crate::families::{enumerate_quadruples, family1_data, family2_data, Family1Params, Family2Params};
use crate::harness::{
    corpus, greedy_generators, verify_bicrossed, verify_entry, verify_lemma_product, verify_lemma_suite,
    verify_prop_gen, verify_section3, verify_theorem, Theorem, TheoremReport, LEMMA_SCAN_CAP,
};
use crate::io::{BraceFile, CheckRecord, CheckStatus, FamilyParams, Provenance, ReportFile};
use crate::matrix::{search_gl2_order, MatrixModM};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "braceforge", version, about = "Finite skew braces: construction, validation, verification")]
pub struct Cli {
    /// Emit JSON instead of human-readable tables.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate both groups and the brace relation of a brace file.
    Validate { file: PathBuf },
    /// Predicates, derived series and ideal facts of a brace file.
    Analyze { file: PathBuf },
    /// Build a first-family brace on Z/p^m × Z/p^n.
    Family1(Family1Args),
    /// Build a second-family brace on (Z/2)^m × (Z/p)^n.
    Family2(Family2Args),
    /// List (m, n, k, ℓ) in [1, max]⁴ meeting the family constraints.
    EnumQuadruples(EnumArgs),
    /// Run a verification suite on a brace file or the builtin corpus.
    Verify(VerifyArgs),
    /// Search GL_m(Z/2) for elements of order p.
    #[command(name = "search-P")]
    SearchP(SearchArgs),
}

#[derive(Debug, Args)]
pub struct Family1Args {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub m: u32,
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub l: u32,
    /// Output path; the brace file goes to stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Family2Args {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub m: usize,
    /// Binary rows of P separated by ';', e.g. "01;11".
    #[arg(long = "P")]
    pub matrix: String,
    #[arg(long)]
    pub n: usize,
    /// Signs of the diagonal of E, e.g. "+-".
    #[arg(long, allow_hyphen_values = true)]
    pub eps: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EnumArgs {
    #[arg(long)]
    pub max: u32,
    /// Only k ≤ m−1 and ℓ ≤ n−1 (the default).
    #[arg(long, conflicts_with = "all")]
    pub nontrivial: bool,
    /// Also include quadruples with k = m or ℓ = n.
    #[arg(long)]
    pub all: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Lemmas,
    Theorems,
    Corpus,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    /// Brace file; the builtin corpus is used when omitted.
    pub file: Option<PathBuf>,
    /// Largest corpus brace to build.
    #[arg(long, default_value_t = 1000)]
    pub max_order: usize,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub p: u64,
    #[arg(long, default_value_t = 16)]
    pub budget: usize,
}

/// A failure carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) => EXIT_USAGE,
            _ => EXIT_DOMAIN,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Parses `args` (program name first) and runs the command, writing to
/// `out` and `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let echo: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let mut ctx = Ctx {
        json: cli.json,
        echo,
        out,
        err,
    };
    match ctx.dispatch(cli.command) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(ctx.err, "error: {}", f.message);
            f.code
        }
    }
}

struct Ctx<'w> {
    json: bool,
    echo: Vec<String>,
    out: &'w mut dyn Write,
    err: &'w mut dyn Write,
}

fn io_failure(e: std::io::Error, path: &Path) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: format!("{}: {e}", path.display()),
    }
}

fn read_file(path: &Path) -> std::result::Result<BraceFile, Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_failure(e, path))?;
    Ok(BraceFile::from_json(&text)?)
}

fn parse_eps(s: &str) -> Result<Vec<i8>> {
    s.chars()
        .map(|c| match c {
            '+' => Ok(1),
            '-' => Ok(-1),
            other => Err(Error::Parse(format!("eps must consist of '+' and '-', found {other:?}"))),
        })
        .collect()
}

/// Rebuilds the certified data behind a family brace file.
pub fn family_data(params: &FamilyParams) -> Result<BicrossedData> {
    match params {
        &FamilyParams::Family1 { p, m, n, k, l } => family1_data(&Family1Params::new(p, m, n, k, l)?),
        FamilyParams::Family2 { p, m, n, matrix, eps } => {
            let mat = MatrixModM::parse_binary_rows(matrix)?;
            if mat.rows() != *m {
                return Err(Error::Parameter(format!("P has {} rows but m = {m}", mat.rows())));
            }
            family2_data(&Family2Params::new(*p, mat, *n, eps.clone())?)
        }
    }
}

impl Ctx<'_> {
    fn dispatch(&mut self, cmd: Command) -> CmdResult {
        match cmd {
            Command::Validate { file } => self.validate(&file),
            Command::Analyze { file } => self.analyze(&file),
            Command::Family1(a) => {
                let params = Family1Params::new(a.p, a.m, a.n, a.k, a.l)?;
                let data = family1_data(&params)?;
                self.emit_family((&params).into(), &data, a.out.as_deref())
            }
            Command::Family2(a) => {
                let mat = MatrixModM::parse_binary_rows(&a.matrix)?;
                if mat.rows() != a.m {
                    return Err(Error::Parameter(format!("P has {} rows but --m is {}", mat.rows(), a.m)).into());
                }
                let params = Family2Params::new(a.p, mat, a.n, parse_eps(&a.eps)?)?;
                let data = family2_data(&params)?;
                self.emit_family((&params).into(), &data, a.out.as_deref())
            }
            Command::EnumQuadruples(a) => self.enum_quadruples(&a),
            Command::Verify(a) => self.verify(&a),
            Command::SearchP(a) => self.search(&a),
        }
    }

    fn print_json<T: Serialize>(&mut self, value: &T) -> CmdResult {
        let text = serde_json::to_string_pretty(value).map_err(|e| Failure {
            code: EXIT_DOMAIN,
            message: e.to_string(),
        })?;
        self.line(&text);
        Ok(EXIT_OK)
    }

    fn line(&mut self, s: &str) {
        let _ = writeln!(self.out, "{s}");
    }

    fn validate(&mut self, path: &Path) -> CmdResult {
        let file = read_file(path)?;
        let started = Instant::now();
        let outcome = file.to_brace();
        let witness = match &outcome {
            Ok(_) => None,
            Err(Error::BraceAxiom { a, b, c }) => Some(vec![*a, *b, *c]),
            Err(Error::InvalidGroup(v)) => Some(v.witness()),
            Err(_) => Some(Vec::new()),
        };
        let code = if outcome.is_ok() { EXIT_OK } else { EXIT_DOMAIN };
        if self.json {
            let report = ReportFile::new(
                self.echo.clone(),
                vec![CheckRecord::fact("brace-valid", witness)],
                started.elapsed().as_millis() as u64,
            );
            self.print_json(&report)?;
        } else {
            match &outcome {
                Ok(br) => self.line(&format!("valid skew brace of order {}", br.order())),
                Err(e) => self.line(&format!("invalid: {e}")),
            }
        }
        Ok(code)
    }

    fn analyze(&mut self, path: &Path) -> CmdResult {
        let file = read_file(path)?;
        let br = file.to_brace()?;
        let report = br.analyze(&file.subsets());
        if self.json {
            return self.print_json(&report);
        }
        self.line(&format!("{} (order {})", report.label, report.order));
        for (name, v) in [
            ("trivial", report.is_trivial),
            ("almost trivial", report.is_almost_trivial),
            ("two-sided", report.is_two_sided),
            ("meta-trivial", report.is_meta_trivial),
            ("left nilpotent (index ≤ 3)", report.is_left_nilpotent3),
            ("right nilpotent (index ≤ 3)", report.is_right_nilpotent3),
        ] {
            self.line(&format!("  {name:<28} {v}"));
        }
        self.line(&format!(
            "  |A′| = {}  |A³| = {}  |A⁽³⁾| = {}",
            report.derived_size, report.left3_size, report.right3_size
        ));
        for f in &report.ideal_facts {
            let s = f.status;
            self.line(&format!(
                "  {} (size {}): sub-brace {} ideal {} left {} right {} left^op {} right^op {}",
                f.name, f.size, s.sub_skew_brace, s.ideal, s.left_ideal, s.right_ideal, s.left_ideal_op, s.right_ideal_op
            ));
        }
        Ok(EXIT_OK)
    }

    fn emit_family(&mut self, params: FamilyParams, data: &BicrossedData, out: Option<&Path>) -> CmdResult {
        let br = data.build()?;
        let file = BraceFile::from_brace(&br, Some(Provenance::bicrossed(params, data)));
        let summary = format!(
            "order {}; meta-trivial {}; phi trivial {}; psi trivial {}",
            br.order(),
            br.is_meta_trivial(),
            data.phi_is_trivial(),
            data.psi_is_trivial()
        );
        match out {
            Some(path) => {
                fs::write(path, file.to_json()).map_err(|e| io_failure(e, path))?;
                if self.json {
                    #[derive(Serialize)]
                    struct Summary<'a> {
                        path: String,
                        order: usize,
                        is_meta_trivial: bool,
                        label: &'a str,
                    }
                    self.print_json(&Summary {
                        path: path.display().to_string(),
                        order: br.order(),
                        is_meta_trivial: br.is_meta_trivial(),
                        label: br.label(),
                    })?;
                } else {
                    self.line(&format!("wrote {}", path.display()));
                    self.line(&summary);
                }
            }
            None => {
                let _ = write!(self.out, "{}", file.to_json());
                let _ = writeln!(self.err, "{summary}");
            }
        }
        Ok(EXIT_OK)
    }

    fn enum_quadruples(&mut self, a: &EnumArgs) -> CmdResult {
        let quads = enumerate_quadruples(a.max, !a.all);
        if self.json {
            #[derive(Serialize)]
            struct Listing {
                count: usize,
                quadruples: Vec<(u32, u32, u32, u32)>,
            }
            return self.print_json(&Listing {
                count: quads.len(),
                quadruples: quads,
            });
        }
        self.line(&quads.len().to_string());
        for (m, n, k, l) in quads {
            self.line(&format!("{m} {n} {k} {l}"));
        }
        Ok(EXIT_OK)
    }

    fn verify(&mut self, a: &VerifyArgs) -> CmdResult {
        let started = Instant::now();
        let mut checks = Vec::new();
        match &a.file {
            Some(path) => {
                let file = read_file(path)?;
                let br = file.to_brace()?;
                let scope = br.label().to_string();
                let reports = match a.suite {
                    Suite::Lemmas => verify_lemma_suite(&br)?,
                    Suite::Theorems | Suite::Corpus => theorem_reports(&br, &file)?,
                };
                checks.extend(reports.iter().map(|r| CheckRecord::from_report(&scope, r)));
            }
            None => {
                for entry in corpus(a.max_order)? {
                    let reports = match a.suite {
                        Suite::Lemmas if entry.brace.order() <= LEMMA_SCAN_CAP => verify_lemma_suite(&entry.brace)?,
                        Suite::Lemmas => continue,
                        Suite::Theorems => {
                            let (b, c) = (&entry.b_set, &entry.c_set);
                            let mut reps = Vec::new();
                            for which in Theorem::ALL {
                                reps.push(verify_theorem(&entry.brace, which, b, c)?);
                            }
                            reps
                        }
                        Suite::Corpus => verify_entry(&entry, LEMMA_SCAN_CAP)?,
                    };
                    checks.extend(reports.iter().map(|r| CheckRecord::from_report(&entry.name, r)));
                }
            }
        }
        let report = ReportFile::new(self.echo.clone(), checks, started.elapsed().as_millis() as u64);
        let alerts = report.red_alerts().count();
        if self.json {
            self.print_json(&report)?;
        } else {
            for c in &report.checks {
                let status = match c.status {
                    CheckStatus::Pass => "pass",
                    CheckStatus::Fail => "FAIL",
                    CheckStatus::NotApplicable => "n/a",
                    CheckStatus::RedAlert => "RED-ALERT",
                };
                let mut line = format!("{status:<9} {}", c.id);
                if c.status == CheckStatus::NotApplicable {
                    line.push_str(&format!(
                        " [conclusion {}; fails: {}]",
                        if c.conclusion_holds { "holds" } else { "false" },
                        c.failed_hypotheses.join(", ")
                    ));
                }
                if let (Some(w), false) = (&c.witness, c.status == CheckStatus::Pass) {
                    line.push_str(&format!(" witness {w:?}"));
                }
                self.line(&line);
            }
            self.line(&format!(
                "{} checks, {} red alerts, {} ms",
                report.checks.len(),
                alerts,
                report.elapsed_ms
            ));
        }
        Ok(if alerts == 0 { EXIT_OK } else { EXIT_DOMAIN })
    }

    fn search(&mut self, a: &SearchArgs) -> CmdResult {
        let hits = search_gl2_order(a.m, a.p, a.budget)?;
        if hits.is_empty() {
            return Err(Error::NoSolution(format!("no element of order {} found within budget", a.p)).into());
        }
        if self.json {
            #[derive(Serialize)]
            struct Hit {
                rows: String,
                order: u64,
                v: Option<u64>,
            }
            let out: Vec<Hit> = hits
                .iter()
                .map(|h| Hit {
                    rows: h.matrix.row_strings().join(";"),
                    order: h.order,
                    v: h.hypothesis_v,
                })
                .collect();
            return self.print_json(&out);
        }
        for h in &hits {
            let v = h.hypothesis_v.map_or_else(|| "none".to_string(), |v| v.to_string());
            self.line(&format!("{}  order {}  v {}", h.matrix.row_strings().join(";"), h.order, v));
        }
        Ok(EXIT_OK)
    }
}

/// Theorem-level suites on a brace file with distinguished subsets.
fn theorem_reports(br: &SkewBrace, file: &BraceFile) -> Result<Vec<TheoremReport>> {
    let subsets = file.subsets();
    let [(_, b), (_, c)] = subsets.as_slice() else {
        return Err(Error::Domain(
            "theorem suites need exactly two distinguished subsets in the file provenance".into(),
        ));
    };
    let dot = br.dot();
    let mut reports = Vec::new();
    for which in Theorem::ALL {
        reports.push(verify_theorem(br, which, b, c)?);
    }
    reports.extend(verify_lemma_product(br, b, c)?);
    reports.extend(verify_section3(br, b, c)?);
    reports.extend(verify_prop_gen(br, b, c, &greedy_generators(dot, b), &greedy_generators(dot, c))?);
    if let Some(prov) = &file.provenance {
        let data = family_data(&prov.params)?;
        if data.b_factor() == *b && data.c_factor() == *c {
            reports.extend(verify_bicrossed(&data, br));
        }
    }
    Ok(reports)
}
