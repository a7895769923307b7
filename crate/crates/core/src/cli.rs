//! Command-line front end.
//!
//! [`run`] takes the argument list and two sinks and returns the process exit
//! status, so the binary is a thin wrapper and the whole CLI can be driven
//! in-process.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::{Signed, ToPrimitive};

use crate::enumeration::{enumerate, GasketKey};
use crate::error::Error;
use crate::frames::{
    comparison_report, format_matrices, frame_of, frame_transition, integral_frames_predicate,
    transition_matrices, transition_matrix, Frame, PAIR_LABELS,
};
use crate::numerics::{format_decimal, Int, Rat};
use crate::render::{render_svg, LabelMode, RenderOptions};
use crate::symbols::{generate, root_configs};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "apollon",
    version,
    about = "Integral Apollonian gaskets in exact arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List every gasket with root bend up to --max-bend.
    Enumerate(EnumerateArgs),
    /// Expand a gasket into circles up to a bend bound.
    Generate(GenerateArgs),
    /// Principal frame, integrality predicate and a reflection walk.
    Frames(FramesArgs),
    /// Write a packing as SVG.
    Render(RenderArgs),
    /// Transition matrices and their comparison against the reference set.
    Matrices,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    #[default]
    Table,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[arg(long)]
    max_bend: u64,
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
    /// Only primitive gaskets (the default).
    #[arg(long, conflicts_with = "all")]
    irreducible_only: bool,
    /// Also list integer multiples of primitive gaskets.
    #[arg(long)]
    all: bool,
}

#[derive(Debug, Args)]
struct GenerateArgs {
    #[arg(long, value_parser = parse_key)]
    key: [Int; 4],
    /// Defaults to the largest principal bend.
    #[arg(long)]
    max_bend: Option<Int>,
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct FramesArgs {
    #[arg(long, value_parser = parse_key)]
    key: [Int; 4],
    #[arg(long, default_value_t = 4)]
    depth: usize,
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct RenderArgs {
    #[arg(long, value_parser = parse_key)]
    key: [Int; 4],
    #[arg(long)]
    max_bend: Int,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, default_value = "none")]
    labels: LabelMode,
    #[arg(long)]
    draw_frame: bool,
    #[arg(long, default_value_t = 800)]
    width: u32,
    /// Smallest rendered radius in pixels, as a decimal or p/q.
    #[arg(long, value_parser = parse_rat, default_value = "1/2")]
    min_radius: Rat,
}

fn parse_key(s: &str) -> Result<[Int; 4], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(format!("expected B,MU,K,N, got {s:?}"));
    }
    let mut out: [Int; 4] = Default::default();
    for (slot, part) in out.iter_mut().zip(&parts) {
        *slot = part
            .parse()
            .map_err(|_| format!("not an integer: {part:?}"))?;
    }
    Ok(out)
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    let bad = || format!("not a number: {s:?}");
    if s.contains('/') {
        return s.parse().map_err(|_| bad());
    }
    let (whole, frac) = s.split_once('.').unwrap_or((s, ""));
    if frac.chars().any(|c| !c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: Int = format!("{whole}{frac}").parse().map_err(|_| bad())?;
    let denom = num_traits::pow(Int::from(10), frac.len());
    Ok(Rat::new(digits, denom))
}

/// One output cell.
#[derive(Debug, Clone)]
enum Field {
    Int(Int),
    Text(String),
    Bool(bool),
    Empty,
}

impl Field {
    fn plain(&self) -> String {
        match self {
            Field::Int(v) => v.to_string(),
            Field::Text(s) => s.clone(),
            Field::Bool(b) => b.to_string(),
            Field::Empty => String::new(),
        }
    }

    fn json(&self) -> serde_json::Value {
        use serde_json::Value;
        match self {
            Field::Int(v) => v
                .to_i64()
                .map(Value::from)
                .unwrap_or_else(|| Value::from(v.to_string())),
            Field::Text(s) => Value::from(s.as_str()),
            Field::Bool(b) => Value::from(*b),
            Field::Empty => Value::Null,
        }
    }

    fn right_aligned(&self) -> bool {
        matches!(self, Field::Int(_))
    }
}

fn text(v: impl ToString) -> Field {
    Field::Text(v.to_string())
}

fn emit(
    out: &mut dyn Write,
    format: OutputFormat,
    headers: &[&str],
    rows: &[Vec<Field>],
) -> std::io::Result<()> {
    match format {
        OutputFormat::Csv => {
            writeln!(out, "{}", headers.join(","))?;
            for row in rows {
                let cells: Vec<String> = row.iter().map(Field::plain).collect();
                writeln!(out, "{}", cells.join(","))?;
            }
        }
        OutputFormat::Json => {
            for row in rows {
                let obj: serde_json::Map<String, serde_json::Value> = headers
                    .iter()
                    .zip(row)
                    .map(|(h, f)| (h.to_string(), f.json()))
                    .collect();
                writeln!(out, "{}", serde_json::Value::Object(obj))?;
            }
        }
        OutputFormat::Table => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|f| {
                            if matches!(f, Field::Empty) {
                                "-".into()
                            } else {
                                f.plain()
                            }
                        })
                        .collect()
                })
                .collect();
            let widths: Vec<usize> = (0..headers.len())
                .map(|c| {
                    cells
                        .iter()
                        .map(|r| r[c].chars().count())
                        .chain([headers[c].chars().count()])
                        .max()
                        .unwrap()
                })
                .collect();
            let header: Vec<String> = headers
                .iter()
                .zip(&widths)
                .map(|(h, w)| format!("{h:>w$}"))
                .collect();
            writeln!(out, "{}", header.join("  ").trim_end())?;
            for (row, fields) in cells.iter().zip(rows) {
                let line: Vec<String> = row
                    .iter()
                    .zip(fields)
                    .zip(&widths)
                    .map(|((s, f), w)| {
                        if f.right_aligned() {
                            format!("{s:>w$}")
                        } else {
                            format!("{s:<w$}")
                        }
                    })
                    .collect();
                writeln!(out, "{}", line.join("  ").trim_end())?;
            }
        }
    }
    Ok(())
}

enum Failure {
    Domain(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

/// Parses `args` (program name first) and runs the command. Returns the exit
/// status: 0 ok, 2 argument or domain error, 3 strip generation, 4 I/O.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{rendered}");
                EXIT_OK
            };
        }
    };
    let result = match cli.command {
        Command::Enumerate(a) => cmd_enumerate(&a, out),
        Command::Generate(a) => cmd_generate(&a, out),
        Command::Frames(a) => cmd_frames(&a, out),
        Command::Render(a) => cmd_render(&a, out),
        Command::Matrices => cmd_matrices(out),
    };
    match result.and_then(|()| out.flush().map_err(Failure::from)) {
        Ok(()) => EXIT_OK,
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            if e == Error::StripUnsupported {
                EXIT_UNSUPPORTED
            } else {
                EXIT_USAGE
            }
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_IO
        }
    }
}

fn make_key(parts: &[Int; 4]) -> Result<GasketKey, Error> {
    let [b, mu, k, n] = parts.clone();
    GasketKey::new(b, mu, k, n)
}

fn cmd_enumerate(a: &EnumerateArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let records = enumerate(a.max_bend, !a.all);
    let mut headers = vec![
        "B", "mu", "k", "n", "b0", "b1", "b2", "b3", "b4", "shift", "symmetry",
    ];
    if a.all {
        headers.push("scale");
    }
    let rows: Vec<Vec<Field>> = records
        .iter()
        .map(|r| {
            let key = &r.key;
            let mut row: Vec<Field> = [key.b(), key.mu(), key.k(), key.n()]
                .into_iter()
                .map(|v| Field::Int(v.clone()))
                .collect();
            row.extend(r.quintet.bends().iter().map(|v| Field::Int(v.clone())));
            row.push(text(&r.shift));
            row.push(text(r.symmetry));
            if a.all {
                row.push(Field::Int(Int::from(r.scale)));
            }
            row
        })
        .collect();
    emit(out, a.format, &headers, &rows)?;
    Ok(())
}

fn cmd_generate(a: &GenerateArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let key = make_key(&a.key)?;
    if key.is_strip() {
        return Err(Error::StripUnsupported.into());
    }
    let max_bend = a
        .max_bend
        .clone()
        .unwrap_or_else(|| key.quintet().bends()[4].clone());
    let packing = generate(&key, &max_bend)?;
    let rows: Vec<Vec<Field>> = packing
        .circles()
        .iter()
        .map(|c| {
            let (cx, cy) = c.center();
            vec![
                Field::Int(c.bend().clone()),
                text(c.x_dot()),
                text(c.y_dot()),
                text(format_decimal(&cx, 12)),
                text(format_decimal(&cy, 12)),
            ]
        })
        .collect();
    emit(
        out,
        a.format,
        &["bend", "x_dot", "y_dot", "cx_decimal", "cy_decimal"],
        &rows,
    )?;
    Ok(())
}

fn frame_rows(
    step: usize,
    replaced: Option<usize>,
    frame: &Frame,
    flags: [Field; 2],
    predicate: bool,
) -> Vec<Vec<Field>> {
    frame
        .entries()
        .iter()
        .zip(PAIR_LABELS)
        .map(|(t, label)| {
            vec![
                Field::Int(Int::from(step)),
                replaced
                    .map(|s| text(format!("C{}", s + 1)))
                    .unwrap_or(Field::Empty),
                text(label),
                text(&t.delta),
                text(&t.gamma),
                Field::Int(t.h.clone()),
                Field::Bool(t.is_integral()),
                flags[0].clone(),
                flags[1].clone(),
                Field::Bool(predicate),
            ]
        })
        .collect()
}

/// Walk order: slot `step % 4` is replaced at each step, so no reflection is
/// immediately undone.
fn cmd_frames(a: &FramesArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let key = make_key(&a.key)?;
    if key.is_strip() {
        return Err(Error::StripUnsupported.into());
    }
    let predicate = integral_frames_predicate(&key);
    let (mut config, _) = root_configs(&key)?;
    let mut frame = frame_of(&config)?;
    let mut rows = frame_rows(0, None, &frame, [Field::Empty, Field::Empty], predicate);
    for step in 1..=a.depth {
        let slot = (step - 1) % 4;
        config = config.reflect(slot);
        let direct = frame_of(&config)?;
        let recurrence_ok = frame_transition(&frame, slot) == direct;
        let matrix_ok = transition_matrix(slot).apply(&frame) == direct;
        rows.extend(frame_rows(
            step,
            Some(slot),
            &direct,
            [Field::Bool(recurrence_ok), Field::Bool(matrix_ok)],
            predicate,
        ));
        frame = direct;
    }
    if a.format == OutputFormat::Table {
        writeln!(out, "key {key}: k | 2B^2 is {predicate}")?;
    }
    emit(
        out,
        a.format,
        &[
            "step",
            "replaced",
            "pair",
            "delta",
            "gamma",
            "h",
            "integral",
            "recurrence_ok",
            "matrix_ok",
            "predicate",
        ],
        &rows,
    )?;
    Ok(())
}

fn cmd_render(a: &RenderArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let key = make_key(&a.key)?;
    if key.is_strip() {
        return Err(Error::StripUnsupported.into());
    }
    let opts = RenderOptions {
        width_px: a.width,
        label_mode: a.labels,
        draw_frame: a.draw_frame,
        min_radius_px: a.min_radius.clone(),
    };
    opts.validate()?;
    if a.max_bend.is_negative() {
        return Err(Error::InvalidOptions("max-bend must be nonnegative".into()).into());
    }
    let packing = generate(&key, &a.max_bend)?;
    let svg = render_svg(&packing, &opts)?;
    std::fs::write(&a.out, svg).map_err(|e| Failure::Io(format!("{}: {e}", a.out.display())))?;
    writeln!(out, "{}", packing.len())?;
    Ok(())
}

/// Text of the `matrices` command; also kept as a reference file.
pub fn matrices_text() -> String {
    let derived = transition_matrices();
    let mut s = String::from("# Delta/Gamma transition matrices, replacing C1, C2, C3\n");
    s.push_str(&format_matrices(&derived.each_ref().map(|m| m.delta)));
    s.push_str("\n# H transition matrices, replacing C1, C2, C3\n");
    s.push_str(&format_matrices(&derived.each_ref().map(|m| m.h)));
    s.push('\n');
    s.push_str(&comparison_report());
    s
}

fn cmd_matrices(out: &mut dyn Write) -> Result<(), Failure> {
    out.write_all(matrices_text().as_bytes())?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("apollon").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn key_parsing() {
        assert_eq!(parse_key("6,2,5,8").unwrap(), [6, 2, 5, 8].map(Int::from));
        assert!(parse_key("6,2,5").is_err());
        assert!(parse_key("6,x,5,8").is_err());
    }

    #[test]
    fn rat_parsing() {
        assert_eq!(parse_rat("1/2").unwrap(), crate::numerics::rat(1, 2));
        assert_eq!(parse_rat("0.25").unwrap(), crate::numerics::rat(1, 4));
        assert_eq!(parse_rat("3").unwrap(), crate::numerics::rat(3, 1));
        assert!(parse_rat("0.x").is_err());
    }

    #[test]
    fn enumerate_csv() {
        let (code, out, _) = call(&["enumerate", "--max-bend", "6", "--format", "csv"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "B,mu,k,n,b0,b1,b2,b3,b4,shift,symmetry");
        // strip plus 1, 1, 2, 2, 2, 3 keys for B = 1..6
        assert_eq!(lines.len(), 13);
        assert_eq!(lines[12], "6,2,5,8,-6,11,14,15,23,4/5,skew");
    }

    #[test]
    fn enumerate_strip_only() {
        let (code, out, _) = call(&["enumerate", "--max-bend", "0", "--format", "csv"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().nth(1), Some("0,0,0,1,0,0,1,1,1,0,strip"));
        assert_eq!(out.lines().count(), 2);
    }

    #[test]
    fn enumerate_all_adds_scale() {
        let (_, out, _) = call(&["enumerate", "--max-bend", "2", "--all", "--format", "csv"]);
        assert!(out.starts_with("B,mu,k,n,b0,b1,b2,b3,b4,shift,symmetry,scale\n"));
        assert!(out.contains("2,0,2,2,-2,4,4,6,6,0,window,2"));
    }

    #[test]
    fn json_records() {
        let (_, out, _) = call(&["enumerate", "--max-bend", "1", "--format", "json"]);
        let last: serde_json::Value = serde_json::from_str(out.lines().last().unwrap()).unwrap();
        assert_eq!(last["B"], 1);
        assert_eq!(last["b4"], 3);
        assert_eq!(last["shift"], "0");
        assert_eq!(last["symmetry"], "window");
    }

    #[test]
    fn generate_window() {
        let (code, out, _) = call(&[
            "generate",
            "--key",
            "1,0,1,1",
            "--max-bend",
            "3",
            "--format",
            "csv",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 6);
        assert!(out.contains("\n-1,0,0,0,0\n"));
    }

    #[test]
    fn generate_default_bound_is_b4() {
        let (code, out, _) = call(&["generate", "--key", "6,2,5,8", "--format", "csv"]);
        assert_eq!(code, 0);
        let bends: Vec<&str> = out
            .lines()
            .skip(1)
            .map(|l| l.split(',').next().unwrap())
            .collect();
        assert_eq!(bends, ["-6", "11", "14", "15", "23"]);
    }

    #[test]
    fn generate_errors() {
        let (code, _, err) = call(&["generate", "--key", "1,0,1,2"]);
        assert_eq!(code, 2);
        assert!(err.contains('≠'), "{err}");
        assert_eq!(call(&["generate", "--key", "0,0,0,1"]).0, 3);
        assert_eq!(
            call(&["generate", "--key", "6,2,5,8", "--max-bend", "20"]).0,
            2
        );
        assert_eq!(call(&["generate"]).0, 2);
    }

    #[test]
    fn frames_output() {
        let (code, out, _) = call(&[
            "frames", "--key", "2,0,1,4", "--depth", "0", "--format", "csv",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 7);
        assert!(
            out.lines().skip(1).all(|l| l.ends_with(",true,,,true")),
            "{out}"
        );

        let (_, out, _) = call(&[
            "frames", "--key", "6,2,5,8", "--depth", "5", "--format", "csv",
        ]);
        assert_eq!(out.lines().count(), 1 + 6 * 6);
        assert!(out.lines().skip(1).all(|l| l.ends_with(",false")));
        assert!(
            out.lines().skip(7).all(|l| l.contains(",true,true,false")),
            "{out}"
        );
    }

    #[test]
    fn frames_table_mentions_predicate() {
        let (_, out, _) = call(&["frames", "--key", "2,0,1,4", "--depth", "1"]);
        assert!(out.starts_with("key 2,0,1,4: k | 2B^2 is true\n"));
    }

    #[test]
    fn matrices_lists_report() {
        let (code, out, _) = call(&["matrices"]);
        assert_eq!(code, 0);
        assert!(out.contains("Reference matrix A"));
    }

    #[test]
    fn help_is_success() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("enumerate"));
    }
}
