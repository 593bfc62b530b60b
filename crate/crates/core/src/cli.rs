//! Command-line surface. Exit codes: 0 success, 1 identity or theorem failure,
//! 2 usage or input error, 3 conjecture counterexample.

use std::ffi::OsString;
use std::io::Write;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::error::Error;
use crate::expr::eval_str;
use crate::identities::{Registry, Status, DEFAULT_ORDER};
use crate::inequalities::{ClaimKind, CoreTables, ScanReport, ScanStatus, Scanner, DEFAULT_DEPTH};
use crate::partitions::{Oracle, DEFAULT_ORACLE_BOUND};

pub const ORDER_ENV: &str = "HEPTACORE_ORDER";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_COUNTEREXAMPLE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "heptacore",
    version,
    about = "Exact q-series tools for 7-core partitions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the coefficients of an expression.
    Coeffs {
        expr: String,
        #[arg(long, env = ORDER_ENV, default_value_t = 20)]
        order: usize,
        #[arg(long, default_value_t = 0)]
        from: usize,
        #[arg(long)]
        to: Option<usize>,
    },
    /// Verify identities from the registry.
    #[command(group(ArgGroup::new("target").required(true).args(["id", "all", "list"])))]
    Verify {
        id: Option<String>,
        #[arg(long)]
        all: bool,
        /// Print the registered ids and their text forms.
        #[arg(long)]
        list: bool,
        #[arg(long, env = ORDER_ENV, default_value_t = DEFAULT_ORDER)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Scan inequalities, positivity statements and conjectures.
    #[command(group(ArgGroup::new("target").required(true).args(["claim", "conjectures", "theorems", "all", "list"])))]
    Scan {
        claim: Option<String>,
        #[arg(long)]
        conjectures: bool,
        #[arg(long)]
        theorems: bool,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        list: bool,
        #[arg(long, env = ORDER_ENV, default_value_t = DEFAULT_DEPTH)]
        order: usize,
    },
    /// Tabulate 7-core counts from their generating functions.
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        #[arg(long)]
        max: usize,
        #[arg(long)]
        csv: bool,
    },
    /// Compare the series tables with brute-force enumeration.
    Oracle {
        #[arg(long)]
        max: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Table,
    Jsonlike,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableKind {
    A7,
    A7j,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{}", e.render());
                return EXIT_OK;
            }
            let rendered = e.render().to_string();
            let line = rendered.lines().next().unwrap_or("error: invalid usage");
            let _ = writeln!(err, "{line}");
            return EXIT_USAGE;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                CliError::Usage(_) => EXIT_USAGE,
                CliError::Io(_) => EXIT_FAILURE,
            }
        }
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(std::io::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(s) => f.write_str(s),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Coeffs {
            expr,
            order,
            from,
            to,
        } => coeffs(&expr, order, from, to, out),
        Command::Verify {
            id,
            list,
            order,
            format,
            ..
        } => {
            if list {
                list_identities(out)
            } else {
                verify(id.as_deref(), order, format, out)
            }
        }
        Command::Scan {
            claim,
            conjectures,
            theorems,
            list,
            order,
            ..
        } => {
            if list {
                list_claims(out)
            } else {
                let kind = match (conjectures, theorems) {
                    (true, false) => Some(ClaimKind::Conjecture),
                    (false, true) => Some(ClaimKind::Theorem),
                    _ => None,
                };
                scan(claim.as_deref(), kind, order, out)
            }
        }
        Command::Table { kind, max, csv } => table(kind, max, csv, out),
        Command::Oracle { max } => oracle(max, out),
    }
}

fn coeffs(
    expr: &str,
    order: usize,
    from: usize,
    to: Option<usize>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let to = to.unwrap_or(order);
    if to > order {
        return Err(CliError::Usage(format!(
            "--to {to} exceeds --order {order}"
        )));
    }
    let series = eval_str(expr, order)?;
    for n in from..=to {
        writeln!(out, "{n} {}", series.coeff(n))?;
    }
    Ok(EXIT_OK)
}

fn list_identities(out: &mut dyn Write) -> Result<i32, CliError> {
    for r in Registry::standard().records() {
        writeln!(out, "{}\t{}", r.id, r.reference)?;
        for (label, side) in [("lhs", &r.lhs), ("rhs", &r.rhs)] {
            let text = side.text.as_deref().unwrap_or("(programmatic)");
            writeln!(out, "    {label}: {text}")?;
        }
    }
    Ok(EXIT_OK)
}

fn verify(
    id: Option<&str>,
    order: usize,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let registry = Registry::standard();
    let reports = match id {
        Some(id) => vec![registry.verify(id, order)?],
        None => registry.verify_all(order)?,
    };
    match format {
        Format::Jsonlike => {
            for r in &reports {
                let line = serde_json::to_string(&r.to_record()).expect("report records serialize");
                writeln!(out, "{line}")?;
            }
        }
        Format::Table => {
            writeln!(
                out,
                "{:<20} {:<6} {:>6} {:>8}  detail",
                "id", "status", "order", "ms"
            )?;
            for r in &reports {
                let (status, detail) = match &r.status {
                    Status::Pass => ("pass", String::new()),
                    Status::Fail { exponent, lhs, rhs } => {
                        ("FAIL", format!("q^{exponent}: lhs {lhs}, rhs {rhs}"))
                    }
                };
                writeln!(
                    out,
                    "{:<20} {:<6} {:>6} {:>8}  {detail}",
                    r.id, status, r.order, r.millis
                )?;
            }
            let passed = reports.iter().filter(|r| r.passed()).count();
            writeln!(out, "{passed}/{} identities pass", reports.len())?;
        }
    }
    Ok(if reports.iter().all(|r| r.passed()) {
        EXIT_OK
    } else {
        EXIT_FAILURE
    })
}

fn list_claims(out: &mut dyn Write) -> Result<i32, CliError> {
    for c in crate::inequalities::standard_claims() {
        writeln!(out, "{:<20} {:<10} {}", c.id, c.kind, c.statement)?;
    }
    Ok(EXIT_OK)
}

fn scan(
    claim: Option<&str>,
    kind: Option<ClaimKind>,
    order: usize,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let scanner = Scanner::new(order)?;
    let reports = match (claim, kind) {
        (Some(id), _) => vec![scanner.scan(id)?],
        (None, Some(kind)) => scanner.scan_kind(kind)?,
        (None, None) => scanner.scan_all()?,
    };
    writeln!(
        out,
        "{:<20} {:<10} {:<9} {:>12} {:>8}",
        "claim", "kind", "status", "range", "checked"
    )?;
    for r in &reports {
        let range = r
            .range
            .map_or("-".to_string(), |(a, b)| format!("{a}..={b}"));
        let status = if r.holds() { "holds" } else { "VIOLATED" };
        writeln!(
            out,
            "{:<20} {:<10} {:<9} {:>12} {:>8}",
            r.claim, r.kind, status, range, r.checked
        )?;
    }
    for r in reports.iter().filter(|r| !r.holds()) {
        write_witness(r, out)?;
    }
    Ok(scan_exit_code(&reports))
}

/// A violated theorem outranks a conjecture counterexample.
fn scan_exit_code(reports: &[ScanReport]) -> i32 {
    let failed = |kind| reports.iter().any(|r| !r.holds() && r.kind == kind);
    if failed(ClaimKind::Theorem) {
        EXIT_FAILURE
    } else if failed(ClaimKind::Conjecture) {
        EXIT_COUNTEREXAMPLE
    } else {
        EXIT_OK
    }
}

fn write_witness(r: &ScanReport, out: &mut dyn Write) -> std::io::Result<()> {
    let ScanStatus::Violation(i) = &r.status else {
        return Ok(());
    };
    let label = match r.kind {
        ClaimKind::Theorem => "theorem violated",
        ClaimKind::Conjecture => "counterexample",
    };
    match r.first_negative() {
        Some(n) => writeln!(
            out,
            "{label}: {} ({}) has coefficient {} at q^{n}",
            r.claim, r.statement, i.lhs
        ),
        None => writeln!(
            out,
            "{label}: {} ({}) at n = {}: lhs = {}, rhs = {}",
            r.claim, r.statement, i.n, i.lhs, i.rhs
        ),
    }
}

fn table(kind: TableKind, max: usize, csv: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let tables = CoreTables::new(max)?;
    let row = |n: usize| -> Vec<BigInt> {
        let mut cells = vec![BigInt::from(n), tables.a7(n).clone()];
        if matches!(kind, TableKind::A7j) {
            cells.extend((-1..=2).map(|j| tables.a7j(j, n).clone()));
        }
        cells
    };
    let header: &[&str] = match kind {
        TableKind::A7 => &["n", "a7"],
        TableKind::A7j => &["n", "a7", "a7_m1", "a7_0", "a7_1", "a7_2"],
    };
    if csv {
        writeln!(out, "{}", header.join(","))?;
        for n in 0..=max {
            let cells: Vec<String> = row(n).iter().map(ToString::to_string).collect();
            writeln!(out, "{}", cells.join(","))?;
        }
    } else {
        let line: Vec<String> = header.iter().map(|h| format!("{h:>10}")).collect();
        writeln!(out, "{}", line.join(" "))?;
        for n in 0..=max {
            let cells: Vec<String> = row(n).iter().map(|c| format!("{c:>10}")).collect();
            writeln!(out, "{}", cells.join(" "))?;
        }
    }
    Ok(EXIT_OK)
}

fn oracle(max: usize, out: &mut dyn Write) -> Result<i32, CliError> {
    if max > DEFAULT_ORACLE_BOUND {
        return Err(CliError::Usage(format!(
            "--max {max} exceeds the brute-force oracle bound {DEFAULT_ORACLE_BOUND}"
        )));
    }
    let tables = CoreTables::new(max)?;
    let oracle = Oracle::default();
    let mut identical = 0;
    for n in 1..=max {
        let by_rank = oracle.cores_by_rank(n, 7).map_err(Error::from)?;
        let brute: Vec<BigInt> = std::iter::once(by_rank.values().sum::<u64>())
            .chain((-1..=2).map(|j| by_rank.get(&j).copied().unwrap_or(0)))
            .map(BigInt::from)
            .collect();
        let series: Vec<BigInt> = std::iter::once(tables.a7(n).clone())
            .chain((-1..=2).map(|j| tables.a7j(j, n).clone()))
            .collect();
        if brute == series && by_rank.keys().all(|j| (-1..=2).contains(j)) {
            identical += 1;
        } else {
            writeln!(out, "row {n} differs: oracle {brute:?}, series {series:?}")?;
        }
    }
    writeln!(out, "{identical}/{max} rows identical")?;
    Ok(if identical == max {
        EXIT_OK
    } else {
        EXIT_FAILURE
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("heptacore").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn coeffs_prints_pairs() {
        let (code, out, _) = run_args(&["coeffs", "E(q^7)^7/E(q)", "--order", "6"]);
        assert_eq!(code, 0);
        assert_eq!(out, "0 1\n1 1\n2 2\n3 3\n4 5\n5 7\n6 11\n");
    }

    #[test]
    fn usage_errors_are_one_line() {
        let (code, _, err) = run_args(&["verify"]);
        assert_eq!(code, 2);
        assert_eq!(err.lines().count(), 1);
        let (code, _, err) = run_args(&["coeffs", "E(q^7"]);
        assert_eq!(code, 2);
        assert!(err.contains("offset 6"), "{err}");
    }

    fn report(kind: ClaimKind, status: ScanStatus) -> ScanReport {
        ScanReport {
            claim: "c".into(),
            kind,
            statement: "s".into(),
            range: Some((0, 10)),
            checked: 3,
            first_instance: None,
            status,
            millis: 0,
        }
    }

    #[test]
    fn counterexamples_exit_three_with_witness() {
        use crate::inequalities::Instance;
        let bad = ScanStatus::Violation(Instance {
            n: 4,
            lhs: (-2).into(),
            rhs: 0.into(),
        });
        let conj = report(ClaimKind::Conjecture, bad.clone());
        let thm = report(ClaimKind::Theorem, bad);
        let fine = report(ClaimKind::Theorem, ScanStatus::Holds);
        assert_eq!(scan_exit_code(std::slice::from_ref(&fine)), EXIT_OK);
        assert_eq!(scan_exit_code(&[fine, conj.clone()]), EXIT_COUNTEREXAMPLE);
        assert_eq!(scan_exit_code(&[conj.clone(), thm]), EXIT_FAILURE);

        let mut out = Vec::new();
        write_witness(&conj, &mut out).unwrap();
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "counterexample: c (s) has coefficient -2 at q^4\n"
        );
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("verify"));
    }
}
