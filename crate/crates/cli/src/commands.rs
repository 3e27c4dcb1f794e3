use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Read;

use biquat::format::format_real;
use biquat::oracle::{lattice_search, sample_roots, term_table, LatticeSpec};
use biquat::{
    classify_root, convert_view, make_nontrivial_root_with_tolerance, Biquaternion, ComplexView, Error, PureUnit,
    RootClassification, View,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::examples::verify_examples;
use crate::split::{split_parts, Split};
use crate::wire::{format_biquaternion, format_numbers, parse_biquaternion, parse_numbers, round_to_digits, to_json};

/// Display threshold below which table coefficients print as zero.
const TABLE_ZERO: f64 = 1e-12;

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    /// Not a root (classify) or no hits (lattice).
    Negative = 1,
    Usage = 2,
    /// A root matched none of the three families.
    TheoremViolation = 3,
}

#[derive(Debug, Parser)]
#[command(
    name = "biquat",
    version,
    about = "Biquaternion roots of -1: construct, classify, verify"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Absolute tolerance for root tests and perpendicularity.
    #[arg(long, global = true, default_value_t = 1e-9, value_parser = real)]
    pub tol: f64,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Significant digits for printed numbers (1-17).
    #[arg(long, global = true, default_value_t = 17, value_parser = clap::value_parser!(u8).range(1..=17))]
    pub digits: u8,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print q^2.
    Square(Input),
    /// Classify q as a root of -1 (one biquaternion per stdin line when no argument is given).
    Classify(Input),
    /// Build cosh(t) mu + sinh(t) nu I from mu, nu (normalized) and t.
    #[command(name = "make-root")]
    MakeRoot {
        #[arg(num_args = 7, value_parser = real, value_names = ["MU_X", "MU_Y", "MU_Z", "NU_X", "NU_Y", "NU_Z", "T"])]
        values: Vec<f64>,
    },
    /// Print seeded random nontrivial roots.
    Sample {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long = "t-max", default_value_t = 5.0, value_parser = real)]
        t_max: f64,
    },
    /// Re-print q in the other view.
    Convert {
        #[arg(long, value_enum, default_value_t = ViewArg::Complex)]
        to: ViewArg,
        /// Coefficient order of the input.
        #[arg(long, value_enum, default_value_t = ViewArg::Parts)]
        from: ViewArg,
        #[command(flatten)]
        input: Input,
    },
    /// Pairwise product table of summands (one per argument or stdin line).
    Table {
        /// Cut a single input into summands.
        #[arg(long, value_enum, default_value_t = Split::None)]
        split: Split,
        parts: Vec<String>,
    },
    /// Check the three worked examples at 1e-12.
    #[command(name = "verify-examples")]
    VerifyExamples,
    /// Scan (a, b, c, d) on a lattice for q = (a + b mu) + (c + d nu) I.
    Lattice {
        #[arg(long, default_value = "1 0 0")]
        mu: String,
        #[arg(long, default_value = "0 1 0")]
        nu: String,
        #[arg(long, default_value_t = 2.0, value_parser = real)]
        bound: f64,
        #[arg(long, default_value_t = 0.25, value_parser = real)]
        step: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ViewArg {
    Parts,
    Complex,
}

/// A biquaternion given as arguments (joined with spaces), or stdin lines when absent.
#[derive(Debug, Args)]
pub struct Input {
    values: Vec<String>,
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn new(stdout: String, status: ExitStatus) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            code: status as i32,
        }
    }

    fn failure(message: impl Into<String>, status: ExitStatus) -> Self {
        let mut stderr = message.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Self {
            stdout: String::new(),
            stderr,
            code: status as i32,
        }
    }
}

struct Failure(String, ExitStatus);

fn usage(msg: impl std::fmt::Display) -> Failure {
    Failure(format!("error: {msg}"), ExitStatus::Usage)
}

fn from_core(err: Error) -> Failure {
    match err {
        Error::TheoremViolation(msg) => Failure(format!("theorem-violation: {msg}"), ExitStatus::TheoremViolation),
        other => usage(other),
    }
}

/// Parses `args` (including the program name) and runs the command, reading
/// `stdin` only when a command needs it.
pub fn run<I, T>(args: I, stdin: impl Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args.into_iter().map(|a| shield_negative(a.into()))) {
        Ok(cli) => execute(&cli, stdin),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome::failure(text, ExitStatus::Usage)
            } else {
                Outcome::new(text, ExitStatus::Success)
            }
        }
    }
}

/// Clap only recognises simple negative numbers as values, so `-1.5e-3` or
/// `"-1 0 0 ..."` would be taken for flags. A leading space keeps any all-numeric
/// token a value; every numeric parser here trims.
fn shield_negative(arg: OsString) -> OsString {
    match arg.to_str() {
        Some(s) if s.starts_with('-') && s.split_whitespace().all(|f| f.parse::<f64>().is_ok()) => {
            format!(" {s}").into()
        }
        _ => arg,
    }
}

fn real(s: &str) -> Result<f64, String> {
    s.trim().parse().map_err(|e| format!("{e}"))
}

pub fn execute(cli: &Cli, stdin: impl Read) -> Outcome {
    let ctx = Context {
        tol: cli.global.tol,
        json: cli.global.json,
        digits: cli.global.digits as usize,
    };
    if !(ctx.tol > 0.0 && ctx.tol.is_finite()) {
        return Outcome::failure(
            format!("error: --tol must be positive, got {}", ctx.tol),
            ExitStatus::Usage,
        );
    }
    let result = match &cli.command {
        Command::Square(input) => read_inputs(input, stdin).and_then(|qs| ctx.square(&qs)),
        Command::Classify(input) => read_inputs(input, stdin).and_then(|qs| ctx.classify(&qs)),
        Command::MakeRoot { values } => ctx.make_root(values),
        Command::Sample { seed, count, t_max } => ctx.sample(*seed, *count, *t_max),
        Command::Convert { to, from, input } => ctx.convert(input, *from, *to, stdin),
        Command::Table { split, parts } => ctx.table(parts, *split, stdin),
        Command::VerifyExamples => Ok(ctx.verify_examples()),
        Command::Lattice { mu, nu, bound, step } => ctx.lattice(mu, nu, *bound, *step),
    };
    match result {
        Ok(outcome) => outcome,
        Err(Failure(msg, status)) => Outcome::failure(msg, status),
    }
}

fn stdin_lines(mut stdin: impl Read) -> Result<Vec<String>, Failure> {
    let mut text = String::new();
    stdin
        .read_to_string(&mut text)
        .map_err(|e| usage(format!("reading stdin: {e}")))?;
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(String::from)
        .collect())
}

/// Raw biquaternion texts: the joined arguments, or each stdin line.
fn input_texts(input: &Input, stdin: impl Read) -> Result<Vec<String>, Failure> {
    if input.values.is_empty() {
        let lines = stdin_lines(stdin)?;
        if lines.is_empty() {
            return Err(usage("no input: pass a biquaternion as arguments or on stdin"));
        }
        Ok(lines)
    } else {
        Ok(vec![input.values.join(" ")])
    }
}

fn parse_all(texts: &[String]) -> Result<Vec<Biquaternion>, Failure> {
    texts
        .iter()
        .enumerate()
        .map(|(n, t)| parse_biquaternion(t).map_err(|e| usage(format!("input {}: {e}", n + 1))))
        .collect()
}

fn read_inputs(input: &Input, stdin: impl Read) -> Result<Vec<Biquaternion>, Failure> {
    parse_all(&input_texts(input, stdin)?)
}

fn parse_direction(text: &str, name: &str) -> Result<PureUnit, Failure> {
    let [x, y, z] = parse_numbers::<3>(text).map_err(|e| usage(format!("--{name}: {e}")))?;
    PureUnit::normalize(x, y, z).ok_or_else(|| usage(format!("--{name}: zero vector has no direction")))
}

struct Context {
    tol: f64,
    json: bool,
    digits: usize,
}

impl Context {
    fn num(&self, x: f64) -> String {
        format_real(x, self.digits)
    }

    fn jnum(&self, x: f64) -> Value {
        json!(round_to_digits(x, self.digits))
    }

    fn triple(&self, u: &PureUnit) -> String {
        format!("({})", u.to_array().map(|c| self.num(c)).join(","))
    }

    fn jtriple(&self, u: &PureUnit) -> Value {
        json!(u.to_array().map(|c| round_to_digits(c, self.digits)))
    }

    /// Emits one value per input: text lines, or a JSON value (array when batched).
    fn emit(&self, texts: Vec<String>, values: Vec<Value>, batched: bool, status: ExitStatus) -> Outcome {
        let stdout = if self.json {
            let v = if batched || values.len() != 1 {
                Value::Array(values)
            } else {
                values.into_iter().next().unwrap()
            };
            format!("{v}\n")
        } else {
            texts.into_iter().map(|l| l + "\n").collect()
        };
        Outcome::new(stdout, status)
    }

    fn square(&self, qs: &[Biquaternion]) -> Result<Outcome, Failure> {
        let squares: Vec<Biquaternion> = qs.iter().map(Biquaternion::square).collect();
        let texts = squares.iter().map(|s| format_biquaternion(s, self.digits)).collect();
        let values = squares.iter().map(|s| to_json(s, self.digits)).collect();
        Ok(self.emit(texts, values, qs.len() > 1, ExitStatus::Success))
    }

    fn classification_text(&self, class: &RootClassification, residual: f64) -> (String, Value) {
        let res = self.num(residual);
        match class {
            RootClassification::Nontrivial { mu, nu, t } => (
                format!(
                    "nontrivial mu={} nu={} t={} residual={res}",
                    self.triple(mu),
                    self.triple(nu),
                    self.num(*t)
                ),
                json!({
                    "family": "nontrivial", "mu": self.jtriple(mu), "nu": self.jtriple(nu),
                    "t": self.jnum(*t), "residual": self.jnum(residual),
                }),
            ),
            RootClassification::UnitPure { mu } => (
                format!("unit-pure mu={} residual={res}", self.triple(mu)),
                json!({ "family": "unit-pure", "mu": self.jtriple(mu), "residual": self.jnum(residual) }),
            ),
            RootClassification::ImaginaryUnit { sign } => (
                format!("imaginary-unit sign={sign:+} residual={res}"),
                json!({ "family": "imaginary-unit", "sign": sign, "residual": self.jnum(residual) }),
            ),
            RootClassification::NotRoot { .. } => (
                format!("not-a-root residual={res}"),
                json!({ "family": "not-a-root", "residual": self.jnum(residual) }),
            ),
        }
    }

    fn classify(&self, qs: &[Biquaternion]) -> Result<Outcome, Failure> {
        let mut texts = Vec::new();
        let mut values = Vec::new();
        let mut status = ExitStatus::Success;
        for q in qs {
            let class = classify_root(q, self.tol).map_err(from_core)?;
            let residual = q.square_plus_one().coefficient_norm();
            if !class.is_root() {
                status = ExitStatus::Negative;
            }
            let (text, value) = self.classification_text(&class, residual);
            texts.push(text);
            values.push(value);
        }
        Ok(self.emit(texts, values, qs.len() > 1, status))
    }

    fn make_root(&self, values: &[f64]) -> Result<Outcome, Failure> {
        let [mx, my, mz, nx, ny, nz, t] = values else {
            return Err(usage(format!("expected 7 numbers, got {}", values.len())));
        };
        if values.iter().any(|v| !v.is_finite()) {
            return Err(usage("make-root arguments must be finite"));
        }
        let mu = PureUnit::normalize(*mx, *my, *mz).ok_or_else(|| usage("mu is the zero vector"))?;
        let nu = PureUnit::normalize(*nx, *ny, *nz).ok_or_else(|| usage("nu is the zero vector"))?;
        let q = make_nontrivial_root_with_tolerance(mu, nu, *t, self.tol).map_err(from_core)?;
        Ok(self.emit(
            vec![format_biquaternion(&q, self.digits)],
            vec![to_json(&q, self.digits)],
            false,
            ExitStatus::Success,
        ))
    }

    fn sample(&self, seed: u64, count: usize, t_max: f64) -> Result<Outcome, Failure> {
        let roots = sample_roots(seed, count, t_max).map_err(from_core)?;
        let texts = roots
            .iter()
            .map(|s| format_biquaternion(&s.root, self.digits))
            .collect();
        let values = roots
            .iter()
            .map(|s| {
                let mut v = to_json(&s.root, self.digits);
                v["mu"] = self.jtriple(&s.mu);
                v["nu"] = self.jtriple(&s.nu);
                v["t"] = self.jnum(s.t);
                v
            })
            .collect();
        Ok(self.emit(texts, values, true, ExitStatus::Success))
    }

    fn convert(&self, input: &Input, from: ViewArg, to: ViewArg, stdin: impl Read) -> Result<Outcome, Failure> {
        let texts = input_texts(input, stdin)?;
        let qs: Vec<Biquaternion> = match from {
            ViewArg::Parts => parse_all(&texts)?,
            ViewArg::Complex => texts
                .iter()
                .enumerate()
                .map(|(n, t)| {
                    parse_numbers::<8>(t)
                        .map(|c| ComplexView::from_interleaved(c).into())
                        .map_err(|e| usage(format!("input {}: {e}", n + 1)))
                })
                .collect::<Result<_, _>>()?,
        };
        let target = match to {
            ViewArg::Parts => View::Parts,
            ViewArg::Complex => View::Complex,
        };
        let mut lines = Vec::new();
        let mut values = Vec::new();
        for q in &qs {
            match convert_view(*q, target) {
                biquat::Presentation::Complex(v) => {
                    let comps = v.components();
                    let labels = ["w", "x", "y", "z"];
                    let text = labels
                        .iter()
                        .zip(comps)
                        .map(|(l, c)| {
                            format!(
                                "{l}={}{}{}I",
                                self.num(c.re),
                                if c.im < 0.0 { "-" } else { "+" },
                                self.num(c.im.abs())
                            )
                        })
                        .collect::<Vec<_>>()
                        .join(" ");
                    let mut obj = serde_json::Map::new();
                    for (l, c) in labels.iter().zip(comps) {
                        obj.insert(
                            l.to_string(),
                            json!([round_to_digits(c.re, self.digits), round_to_digits(c.im, self.digits)]),
                        );
                    }
                    lines.push(text);
                    values.push(Value::Object(obj));
                }
                biquat::Presentation::Parts(q) => {
                    lines.push(format!(
                        "qr=({}) qi=({})",
                        format_numbers(&q.qr.to_array(), self.digits).replace(' ', ","),
                        format_numbers(&q.qi.to_array(), self.digits).replace(' ', ",")
                    ));
                    values.push(to_json(&q, self.digits));
                }
            }
        }
        Ok(self.emit(lines, values, qs.len() > 1, ExitStatus::Success))
    }

    fn table(&self, parts: &[String], split: Split, stdin: impl Read) -> Result<Outcome, Failure> {
        let texts = match (parts.is_empty(), split) {
            (true, _) => stdin_lines(stdin)?,
            (false, Split::None) => parts.to_vec(),
            (false, _) => vec![parts.join(" ")],
        };
        if texts.is_empty() {
            return Err(usage("no summands given"));
        }
        let mut summands = parse_all(&texts)?;
        if split != Split::None {
            if summands.len() != 1 {
                return Err(usage("--split needs exactly one biquaternion"));
            }
            summands = split_parts(&summands[0], split);
            if summands.is_empty() {
                return Err(usage("nothing to tabulate: input is zero"));
            }
        }
        let table = term_table(&summands);
        let stdout = if self.json {
            let cells = table.symbolic_entries(self.digits, TABLE_ZERO);
            let entries: Vec<Vec<Value>> = table
                .rows()
                .zip(&cells)
                .map(|(row, labels)| {
                    row.iter()
                        .zip(labels)
                        .map(|(q, l)| {
                            let mut v = to_json(q, self.digits);
                            v["symbolic"] = json!(l);
                            v
                        })
                        .collect()
                })
                .collect();
            let v = json!({
                "parts": summands.iter().map(|p| to_json(p, self.digits)).collect::<Vec<_>>(),
                "entries": entries,
                "total": to_json(&table.total(), self.digits),
            });
            format!("{v}\n")
        } else {
            table.render(self.digits, TABLE_ZERO)
        };
        Ok(Outcome::new(stdout, ExitStatus::Success))
    }

    fn verify_examples(&self) -> Outcome {
        let reports = verify_examples();
        let all = reports.iter().all(|r| r.passed);
        let stdout = if self.json {
            let v: Vec<Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "example": r.number, "label": r.label, "passed": r.passed,
                        "deviation": r.deviation, "notes": r.notes,
                    })
                })
                .collect();
            format!("{}\n", Value::Array(v))
        } else {
            let mut out = String::new();
            for r in &reports {
                let verdict = if r.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(
                    out,
                    "{verdict} example {}: {} (max deviation {:e})",
                    r.number, r.label, r.deviation
                );
                for note in &r.notes {
                    let _ = writeln!(out, "    {note}");
                }
            }
            out
        };
        Outcome::new(stdout, if all { ExitStatus::Success } else { ExitStatus::Negative })
    }

    fn lattice(&self, mu: &str, nu: &str, bound: f64, step: f64) -> Result<Outcome, Failure> {
        let spec = LatticeSpec {
            bound,
            step,
            mu: parse_direction(mu, "mu")?,
            nu: parse_direction(nu, "nu")?,
        };
        let report = lattice_search(&spec, self.tol).map_err(from_core)?;
        let (nontrivial, unit_pure, imaginary) = report.family_counts();
        let violations = report.violations().count();

        let status = if violations > 0 {
            ExitStatus::TheoremViolation
        } else if report.hits.is_empty() {
            ExitStatus::Negative
        } else {
            ExitStatus::Success
        };

        let family = |h: &biquat::oracle::LatticeHit| match &h.classification {
            Ok(c) => c.family_name().to_string(),
            Err(_) => "theorem-violation".to_string(),
        };
        let stdout = if self.json {
            let hits: Vec<Value> = report
                .hits
                .iter()
                .map(|h| {
                    json!({
                        "a": h.a, "b": h.b, "c": h.c, "d": h.d,
                        "residual": self.jnum(h.residual), "family": family(h),
                    })
                })
                .collect();
            let v = json!({
                "scanned": report.scanned, "tolerance": report.tolerance, "hits": hits,
                "nontrivial": nontrivial, "unit_pure": unit_pure, "imaginary_unit": imaginary,
                "violations": violations,
            });
            format!("{v}\n")
        } else {
            let mut out = format!(
                "scanned={} hits={} tolerance={} nontrivial={nontrivial} unit-pure={unit_pure} imaginary-unit={imaginary} violations={violations}\n",
                report.scanned,
                report.hits.len(),
                self.num(report.tolerance),
            );
            for h in &report.hits {
                let _ = writeln!(
                    out,
                    "a={} b={} c={} d={} residual={} family={}",
                    self.num(h.a),
                    self.num(h.b),
                    self.num(h.c),
                    self.num(h.d),
                    self.num(h.residual),
                    family(h)
                );
            }
            out
        };
        Ok(Outcome::new(stdout, status))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_violations_map_to_exit_three() {
        let Failure(msg, status) = from_core(Error::TheoremViolation("x".into()));
        assert_eq!(status, ExitStatus::TheoremViolation);
        assert_eq!(status as i32, 3);
        assert!(msg.starts_with("theorem-violation"));
        let Failure(_, status) = from_core(Error::WrongVariant);
        assert_eq!(status as i32, 2);
    }
}
