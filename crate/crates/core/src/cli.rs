//! The `hermite-verify` command line.
//!
//! Exit status: 0 on success, 1 when a verification sweep records at least
//! one mismatch, 2 on usage or input errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::classical::{euler_number, genocchi_number, Family, FamilyTable};
use crate::error::Error;
use crate::expansion::{expand, HermiteExpansion, Variant};
use crate::polynomial::Polynomial;
use crate::rational::Rational;
use crate::verify::{verify_theorem, Theorem, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "hermite-verify",
    version,
    about = "Exact Hermite expansions of Euler, Genocchi and Bernstein polynomials"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantChoice {
    Verbatim,
    Corrected,
    Both,
}

#[derive(Debug, clap::Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one polynomial of a family.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Bernstein index, 0 <= k <= n.
        #[arg(long, visible_alias = "l")]
        k: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Expand a polynomial in the Hermite basis.
    Expand {
        /// Comma-separated coefficients, lowest order first; each an integer or a/b.
        #[arg(
            long,
            allow_hyphen_values = true,
            conflicts_with = "input",
            required_unless_present = "input"
        )]
        coeffs: Option<String>,
        /// File holding either a coefficient list or {"coeffs": [...]}.
        #[arg(long, value_name = "PATH")]
        input: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check a closed-form expansion against projection for all n <= max-n.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        theorem: u8,
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long, value_enum, default_value = "verbatim")]
        variant: VariantChoice,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Tabulate a family for 0 <= n <= max-n (numbers for euler and genocchi).
    Table {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long = "max-n")]
        max_n: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Usage(format!("csv output: {e}"))
    }
}

struct Rendered {
    body: String,
    status: i32,
}

/// Parses `args` (program name first) and runs the command, writing the
/// artifact to `stdout` (or `--out`) and diagnostics to `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                return EXIT_USAGE;
            }
            let _ = write!(stdout, "{text}");
            return EXIT_OK;
        }
    };
    let (result, output) = match &cli.command {
        Command::Gen {
            family,
            n,
            k,
            output,
        } => (run_gen(*family, *n, *k, output.format), output),
        Command::Expand {
            coeffs,
            input,
            output,
        } => (
            run_expand(coeffs.as_deref(), input.as_ref(), output.format),
            output,
        ),
        Command::Verify {
            theorem,
            max_n,
            variant,
            output,
        } => (
            run_verify(*theorem, *max_n, *variant, output.format),
            output,
        ),
        Command::Table {
            family,
            max_n,
            output,
        } => (run_table(*family, *max_n, output.format), output),
    };
    match result {
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Ok(rendered) => {
            let written = match &output.out {
                Some(path) => fs::write(path, &rendered.body)
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => stdout
                    .write_all(rendered.body.as_bytes())
                    .map_err(|e| format!("cannot write output: {e}")),
            };
            match written {
                Ok(()) => rendered.status,
                Err(msg) => {
                    let _ = writeln!(stderr, "error: {msg}");
                    EXIT_USAGE
                }
            }
        }
    }
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn csv_table<R: AsRef<[String]>>(
    header: &[&str],
    rows: impl IntoIterator<Item = R>,
) -> Result<String, Failure> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row.as_ref())?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is ASCII"))
}

fn ok(body: String) -> Result<Rendered, Failure> {
    Ok(Rendered {
        body,
        status: EXIT_OK,
    })
}

fn polynomial_output(p: &Polynomial, format: Format) -> Result<Rendered, Failure> {
    match format {
        Format::Json => ok(json(p)),
        Format::Csv => ok(csv_table(
            &["power", "value"],
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| vec![i.to_string(), c.to_string()]),
        )?),
    }
}

fn expansion_output(e: &HermiteExpansion, format: Format) -> Result<Rendered, Failure> {
    match format {
        Format::Json => ok(json(e)),
        Format::Csv => ok(csv_table(
            &["k", "value"],
            e.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| vec![k.to_string(), c.to_string()]),
        )?),
    }
}

fn run_gen(
    family: Family,
    n: usize,
    k: Option<usize>,
    format: Format,
) -> Result<Rendered, Failure> {
    let table = FamilyTable::shared(family);
    let poly = match (family, k) {
        (Family::Bernstein, Some(k)) => table.get_pair(k, n)?,
        (Family::Bernstein, None) => {
            return Err(Failure::Usage("bernstein requires --k".into()));
        }
        (_, Some(_)) => {
            return Err(Failure::Usage(format!(
                "--k does not apply to family {family}"
            )));
        }
        (_, None) => table.get(n)?,
    };
    polynomial_output(&poly, format)
}

/// Parses a comma-separated coefficient list; whitespace is ignored.
pub fn parse_coeff_list(list: &str) -> Result<Polynomial, Error> {
    let list = list.trim();
    if list.is_empty() {
        return Ok(Polynomial::zero());
    }
    let coeffs = list
        .split(',')
        .map(|tok| tok.parse::<Rational>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Polynomial::new(coeffs))
}

fn read_input(path: &PathBuf) -> Result<Polynomial, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    if text.trim_start().starts_with('{') {
        return serde_json::from_str(&text)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())));
    }
    Ok(parse_coeff_list(&text)?)
}

fn run_expand(
    coeffs: Option<&str>,
    input: Option<&PathBuf>,
    format: Format,
) -> Result<Rendered, Failure> {
    let poly = match (coeffs, input) {
        (Some(list), _) => parse_coeff_list(list)?,
        (None, Some(path)) => read_input(path)?,
        (None, None) => return Err(Failure::Usage("expand needs --coeffs or --input".into())),
    };
    expansion_output(&expand(&poly), format)
}

fn run_verify(
    theorem: u8,
    max_n: usize,
    variant: VariantChoice,
    format: Format,
) -> Result<Rendered, Failure> {
    let theorem = Theorem::from_number(theorem)
        .ok_or_else(|| Failure::Usage(format!("unknown theorem {theorem}")))?;
    let variants: &[Variant] = match variant {
        VariantChoice::Verbatim => &[Variant::Verbatim],
        VariantChoice::Corrected => &[Variant::Corrected],
        VariantChoice::Both => &[Variant::Verbatim, Variant::Corrected],
    };
    if theorem != Theorem::EulerSum && variant != VariantChoice::Verbatim {
        return Err(Failure::Usage(format!(
            "--variant applies only to theorem 3 (theorem {theorem} is verbatim only)"
        )));
    }
    let reports = variants
        .iter()
        .map(|&v| verify_theorem(theorem, v, max_n))
        .collect::<Result<Vec<_>, _>>()?;
    let body = match format {
        Format::Json if reports.len() == 1 => json(&reports[0]),
        Format::Json => json(&reports),
        Format::Csv => report_csv(&reports)?,
    };
    let status = if reports.iter().all(VerificationReport::all_matched) {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    };
    Ok(Rendered { body, status })
}

fn report_csv(reports: &[VerificationReport]) -> Result<String, Failure> {
    let rows = reports.iter().flat_map(|r| {
        r.cases.iter().map(move |c| {
            vec![
                r.theorem.to_string(),
                r.variant.name().to_string(),
                c.n.to_string(),
                c.l.map(|l| l.to_string()).unwrap_or_default(),
                c.k.to_string(),
                c.closed.to_string(),
                c.oracle.to_string(),
                c.matched.to_string(),
            ]
        })
    });
    csv_table(
        &[
            "theorem", "variant", "n", "l", "k", "closed", "oracle", "match",
        ],
        rows,
    )
}

#[derive(Serialize)]
struct NumberRow {
    n: usize,
    value: Rational,
}

#[derive(Serialize)]
struct PolyRow {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    coeffs: Vec<Rational>,
}

#[derive(Serialize)]
struct Table<R> {
    family: Family,
    rows: Vec<R>,
}

fn run_table(family: Family, max_n: usize, format: Format) -> Result<Rendered, Failure> {
    match family {
        Family::Euler | Family::Genocchi => {
            let number = if family == Family::Euler {
                euler_number
            } else {
                genocchi_number
            };
            let rows: Vec<NumberRow> = (0..=max_n)
                .map(|n| NumberRow {
                    n,
                    value: number(n),
                })
                .collect();
            match format {
                Format::Json => ok(json(&Table { family, rows })),
                Format::Csv => ok(csv_table(
                    &["n", "value"],
                    rows.iter()
                        .map(|r| vec![r.n.to_string(), r.value.to_string()]),
                )?),
            }
        }
        Family::Hermite | Family::Bernstein => {
            let table = FamilyTable::shared(family);
            let mut rows = Vec::new();
            for n in 0..=max_n {
                if family == Family::Hermite {
                    rows.push(PolyRow {
                        n,
                        k: None,
                        coeffs: table.get(n)?.into_coeffs(),
                    });
                } else {
                    for k in 0..=n {
                        rows.push(PolyRow {
                            n,
                            k: Some(k),
                            coeffs: table.get_pair(k, n)?.into_coeffs(),
                        });
                    }
                }
            }
            match format {
                Format::Json => ok(json(&Table { family, rows })),
                Format::Csv => {
                    let bernstein = family == Family::Bernstein;
                    let header: &[&str] = if bernstein {
                        &["n", "k", "power", "value"]
                    } else {
                        &["n", "power", "value"]
                    };
                    let lines = rows.iter().flat_map(|r| {
                        r.coeffs.iter().enumerate().map(move |(i, c)| {
                            let mut line = vec![r.n.to_string()];
                            if let Some(k) = r.k {
                                line.push(k.to_string());
                            }
                            line.push(i.to_string());
                            line.push(c.to_string());
                            line
                        })
                    });
                    ok(csv_table(header, lines)?)
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["hermite-verify"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn parse_coeff_list_grammar() {
        let p = parse_coeff_list(" 1, -1/2 ,0 ").unwrap();
        assert_eq!(
            p,
            Polynomial::new(vec![Rational::one(), Rational::new(-1, 2)])
        );
        assert!(parse_coeff_list("").unwrap().is_zero());
        let err = parse_coeff_list("1,oops").unwrap_err();
        assert!(err.to_string().contains("oops"));
    }

    #[test]
    fn k_with_single_index_family_is_usage_error() {
        let (code, _, err) = call(&["gen", "--family", "hermite", "--n", "2", "--k", "1"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("--k"));
    }

    #[test]
    fn variant_rejected_for_theorem1() {
        let (code, _, err) = call(&[
            "verify",
            "--theorem",
            "1",
            "--max-n",
            "2",
            "--variant",
            "both",
        ]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("theorem 3"));
    }

    #[test]
    fn bad_theorem_number() {
        let (code, _, _) = call(&["verify", "--theorem", "4", "--max-n", "2"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn help_goes_to_stdout() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("verify"));
    }
}
