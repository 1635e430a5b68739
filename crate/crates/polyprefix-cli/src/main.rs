//! `polyprefix` — verify, solve, enumerate, and search for prefix
//! polymorphisms from the command line.
//!
//! Exit codes: 0 for success (including "no solution", which is a correct
//! answer), 1 when a verification is false or a search reports violations,
//! 2 for usage and domain errors.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use polyprefix::classes::{self, FermatOutcome, SolutionClass};
use polyprefix::intarith::ipow;
use polyprefix::polymorphism::{self, PrefixPolymorphism, VerifyReport};
use polyprefix::radix::{digit_count, to_digits};
use polyprefix::search::{self, SearchBounds};
use polyprefix::Nat;

#[derive(Parser)]
#[command(
    name = "polyprefix",
    version,
    about = "Prefix polymorphisms: quadruples (x, n, B, k) with x^n = B^k*n + x \
             where x has exactly k digits in base B"
)]
struct Cli {
    /// Output format for records and reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether (x, n, B, k) satisfies the defining equation and digit
    /// count; k defaults to the digit count of x in base B.
    Verify {
        #[arg(value_parser = parse_nat)]
        x: Nat,
        #[arg(value_parser = parse_nat)]
        n: Nat,
        #[arg(value_parser = parse_nat)]
        base: Nat,
        #[arg(value_parser = parse_nat)]
        k: Option<Nat>,
    },
    /// Find the solution with the given base and exponent, if any.
    Solve {
        /// Radix B (at least 2).
        #[arg(long, value_parser = parse_nat)]
        base: Nat,
        /// Exponent n (at least 2).
        #[arg(long = "exp", value_parser = parse_nat)]
        exp: Nat,
    },
    /// Stream solutions from one of the parametrized families.
    Enumerate {
        /// Which family to enumerate.
        #[arg(long = "class", value_enum)]
        family: Class,
        /// How many solutions (triangular and pell families).
        #[arg(long)]
        count: Option<u64>,
        /// Largest x = t to scan (fermat and prime-family rectangles).
        #[arg(long)]
        t_max: Option<u64>,
        /// Largest exponent to scan (fermat and prime-family rectangles).
        #[arg(long)]
        n_max: Option<u64>,
    },
    /// Exhaustively find all solutions with x <= x-max, n <= n-max,
    /// k <= k-max, then re-check the structural facts on what was found.
    Search {
        #[arg(long, value_parser = parse_nat)]
        x_max: Nat,
        #[arg(long, value_parser = parse_nat)]
        n_max: Nat,
        #[arg(long, value_parser = parse_nat, default_value = "6")]
        k_max: Nat,
        /// Number of threads to partition the x range across.
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Class {
    Triangular,
    Pell,
    Fermat,
    PrimeFamily,
}

fn parse_nat(s: &str) -> Result<Nat, String> {
    s.parse()
        .map_err(|_| format!("not a decimal non-negative integer: {s}"))
}

/// One solution as it appears in JSON and CSV output. Numerals are decimal
/// strings so that values like (2^341 - 2)/341 survive untruncated; only k,
/// which is always 1 or 2, is a plain integer.
#[derive(Serialize)]
struct OutputRecord {
    x: String,
    n: String,
    #[serde(rename = "B")]
    base: String,
    k: u64,
    class: String,
    rendered: String,
}

fn record(q: &PrefixPolymorphism, class: SolutionClass) -> OutputRecord {
    OutputRecord {
        x: q.x().to_string(),
        n: q.n().to_string(),
        base: q.base().to_string(),
        k: q
            .k()
            .to_string()
            .parse()
            .expect("digit counts of solutions are 1 or 2"),
        class: class.to_string(),
        rendered: render_equation(q),
    }
}

/// The solution as written numerals, e.g. `13_6^2 = 213_6`: x and x^n in
/// base B, the exponent in decimal.
fn render_equation(q: &PrefixPolymorphism) -> String {
    let lhs = to_digits(q.x(), q.base()).expect("x >= 2, B >= 2");
    let rhs = to_digits(&ipow(q.x(), q.n()), q.base()).expect("B >= 2");
    format!("{lhs}^{} = {rhs}", q.n())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Verify { x, n, base, k } => cmd_verify(&x, &n, &base, k, cli.format),
        Command::Solve { base, exp } => cmd_solve(&base, &exp, cli.format),
        Command::Enumerate {
            family,
            count,
            t_max,
            n_max,
        } => cmd_enumerate(family, count, t_max, n_max, cli.format),
        Command::Search {
            x_max,
            n_max,
            k_max,
            workers,
        } => cmd_search(x_max, n_max, k_max, workers, cli.format),
    }
}

fn cmd_verify(
    x: &Nat,
    n: &Nat,
    base: &Nat,
    k: Option<Nat>,
    format: Format,
) -> Result<ExitCode, String> {
    let zero = Nat::from(0u32);
    for (name, value) in [("x", x), ("n", n), ("B", base)] {
        if *value == zero {
            return Err(format!("{name} must be a positive integer"));
        }
    }
    if k.as_ref() == Some(&zero) {
        return Err("k must be a positive integer".to_string());
    }
    let k = match k {
        Some(k) => k,
        // Prefer the k the equation itself determines, so near-misses like
        // (2, 3, 2, 1) — equation true, digit count false — surface as such;
        // fall back to the digit count when the equation fixes no k.
        None => match equation_k(x, n, base) {
            Some(k) => k,
            None => digit_count(x, base).map_err(|e| e.to_string())?,
        },
    };

    let report = polymorphism::verify(x, n, base, &k);
    let rendered = if *base >= Nat::from(2u32) {
        let lhs = to_digits(x, base).map_err(|e| e.to_string())?;
        let rhs = to_digits(&ipow(x, n), base).map_err(|e| e.to_string())?;
        Some(format!("{lhs}^{n} = {rhs}"))
    } else {
        None
    };
    print_verify_report(x, n, base, &k, &report, rendered.as_deref(), format)?;
    Ok(ExitCode::from(if report.verdict() { 0 } else { 1 }))
}

/// The unique k >= 1 with x^n - x = B^k * n, if one exists.
fn equation_k(x: &Nat, n: &Nat, base: &Nat) -> Option<Nat> {
    let zero = Nat::from(0u32);
    let one = Nat::from(1u32);
    if *base < Nat::from(2u32) {
        return None;
    }
    let c = ipow(x, n) - x;
    if &c % n != zero {
        return None;
    }
    let mut rest = c / n;
    if rest == zero {
        return None;
    }
    let mut k = 0u64;
    while &rest % base == zero {
        rest /= base;
        k += 1;
    }
    (rest == one && k >= 1).then(|| Nat::from(k))
}

fn print_verify_report(
    x: &Nat,
    n: &Nat,
    base: &Nat,
    k: &Nat,
    report: &VerifyReport,
    rendered: Option<&str>,
    format: Format,
) -> Result<(), String> {
    #[derive(Serialize)]
    struct VerifyOutput {
        x: String,
        n: String,
        #[serde(rename = "B")]
        base: String,
        k: String,
        equation_holds: bool,
        digit_count_holds: bool,
        domain_ok: bool,
        computed_k: Option<String>,
        verdict: bool,
        rendered: Option<String>,
    }
    let output = VerifyOutput {
        x: x.to_string(),
        n: n.to_string(),
        base: base.to_string(),
        k: k.to_string(),
        equation_holds: report.equation_holds(),
        digit_count_holds: report.digit_count_holds(),
        domain_ok: report.domain_ok(),
        computed_k: report.computed_k().map(|v| v.to_string()),
        verdict: report.verdict(),
        rendered: rendered.map(str::to_string),
    };
    match format {
        Format::Text => {
            println!("quadruple: ({x}, {n}, {base}, {k})");
            println!("equation_holds: {}", output.equation_holds);
            println!("digit_count_holds: {}", output.digit_count_holds);
            println!("domain_ok: {}", output.domain_ok);
            match &output.computed_k {
                Some(v) => println!("computed_k: {v}"),
                None => println!("computed_k: undefined"),
            }
            println!("verdict: {}", output.verdict);
            if let Some(r) = &output.rendered {
                println!("rendered: {r}");
            }
        }
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&output).map_err(|e| e.to_string())?
            );
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(std::io::stdout());
            writer.serialize(&output).map_err(|e| e.to_string())?;
            writer.flush().map_err(|e| e.to_string())?;
        }
    }
    Ok(())
}

fn cmd_solve(base: &Nat, exp: &Nat, format: Format) -> Result<ExitCode, String> {
    let found = polymorphism::solve(base, exp).map_err(|e| e.to_string())?;
    let records = match &found {
        Some(q) => {
            let class = classes::classify(q).map_err(|e| e.to_string())?;
            vec![record(q, class)]
        }
        None => Vec::new(),
    };
    match format {
        Format::Text => match &found {
            Some(q) => println!("{}", text_line(q, &records[0])),
            None => println!("no solution"),
        },
        Format::Json => print_json(&records)?,
        Format::Csv => print_csv(&records)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_enumerate(
    family: Class,
    count: Option<u64>,
    t_max: Option<u64>,
    n_max: Option<u64>,
    format: Format,
) -> Result<ExitCode, String> {
    let solutions = match family {
        Class::Triangular | Class::Pell => {
            if t_max.is_some() || n_max.is_some() {
                return Err(
                    "this family is indexed by --count, not a --t-max/--n-max rectangle"
                        .to_string(),
                );
            }
            let count = count.ok_or("--count is required for this family")?;
            if count == 0 {
                return Err("--count must be at least 1".to_string());
            }
            match family {
                Class::Triangular => (0..count)
                    .map(|i| classes::triangular(&Nat::from(4 + i)))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| e.to_string())?,
                _ => classes::pell_solutions(count as usize).map_err(|e| e.to_string())?,
            }
        }
        Class::Fermat | Class::PrimeFamily => {
            if count.is_some() {
                return Err(
                    "this family scans a rectangle; use --t-max and --n-max, not --count"
                        .to_string(),
                );
            }
            let t_max = t_max.ok_or("--t-max is required for this family")?;
            let n_max = n_max.ok_or("--n-max is required for this family")?;
            let mut found = Vec::new();
            for n in 3..=n_max {
                let n = Nat::from(n);
                if matches!(family, Class::PrimeFamily) && !classes::is_odd_prime(&n) {
                    continue;
                }
                for t in 2..=t_max {
                    let t = Nat::from(t);
                    let outcome = match family {
                        Class::Fermat => {
                            classes::fermat_solution(&t, &n).map_err(|e| e.to_string())?
                        }
                        _ => match classes::prime_family(&t, &n).map_err(|e| e.to_string())? {
                            Some(q) => FermatOutcome::Solution(q),
                            None => FermatOutcome::ExcludedCase,
                        },
                    };
                    if let FermatOutcome::Solution(q) = outcome {
                        found.push(q);
                    }
                }
            }
            found
        }
    };

    let records: Vec<(PrefixPolymorphism, OutputRecord)> = solutions
        .into_iter()
        .map(|q| {
            let class = classes::classify(&q).map_err(|e| e.to_string())?;
            let r = record(&q, class);
            Ok((q, r))
        })
        .collect::<Result<_, String>>()?;
    match format {
        Format::Text => {
            for (q, r) in &records {
                println!("{}", text_line(q, r));
            }
        }
        Format::Json => print_json(&records.iter().map(|(_, r)| r).collect::<Vec<_>>())?,
        Format::Csv => print_csv(&records.iter().map(|(_, r)| r).collect::<Vec<_>>())?,
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_search(
    x_max: Nat,
    n_max: Nat,
    k_max: Nat,
    workers: usize,
    format: Format,
) -> Result<ExitCode, String> {
    if workers == 0 {
        return Err("--workers must be at least 1".to_string());
    }
    let bounds = SearchBounds::with_k_max(x_max, n_max, k_max).map_err(|e| e.to_string())?;
    let result = search::brute_force_with_workers(&bounds, workers);

    let records: Vec<OutputRecord> = result
        .solutions()
        .iter()
        .map(|(q, class)| record(q, *class))
        .collect();

    // Records go to stdout in the chosen format; in machine formats the
    // validation summary moves to stderr so stdout stays parseable.
    match format {
        Format::Text => {
            for ((q, _), r) in result.solutions().iter().zip(&records) {
                println!("{}", text_line(q, r));
            }
            for v in result.violations() {
                println!("violation: {v}");
            }
            println!("solutions: {}", result.solutions().len());
            println!("violations: {}", result.violations().len());
        }
        Format::Json | Format::Csv => {
            if matches!(format, Format::Json) {
                print_json(&records)?;
            } else {
                print_csv(&records)?;
            }
            for v in result.violations() {
                eprintln!("violation: {v}");
            }
            eprintln!("solutions: {}", result.solutions().len());
            eprintln!("violations: {}", result.violations().len());
        }
    }
    Ok(ExitCode::from(if result.violations().is_empty() {
        0
    } else {
        1
    }))
}

fn text_line(q: &PrefixPolymorphism, r: &OutputRecord) -> String {
    format!("{q}  {}  {}", r.class, r.rendered)
}

fn print_json<T: Serialize>(records: &[T]) -> Result<(), String> {
    println!(
        "{}",
        serde_json::to_string_pretty(&records).map_err(|e| e.to_string())?
    );
    Ok(())
}

fn print_csv<T: Serialize>(records: &[T]) -> Result<(), String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for r in records {
        writer.serialize(r).map_err(|e| e.to_string())?;
    }
    let bytes = writer.into_inner().map_err(|e| e.to_string())?;
    if records.is_empty() {
        // serialize() never ran, so emit the header alone.
        println!("x,n,B,k,class,rendered");
    } else {
        std::io::stdout()
            .write_all(&bytes)
            .map_err(|e| e.to_string())?;
    }
    Ok(())
}
