//! Command-line surface for the library.
//!
//! Exit codes: 0 success, 1 usage or domain errors, 2 verification
//! failures, 3 resource or network errors.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::bijection;
use crate::counting;
use crate::error::{Error, Result};
use crate::expectation;
use crate::letters::{parse_one_line, LetterAlphabet};
use crate::mahonian::{self, ConjectureKind};
use crate::oeis;
use crate::oracle;
use crate::perm::{CycleOrder, Letter, Permutation};
use crate::render::{self, OutputFormat, RationalStyle};

#[derive(Parser, Debug)]
#[command(
    name = "kcycles",
    version,
    about = "Exact counts and expected letter values of permutations with a prescribed number of k-cycles"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count permutations of S_n by their number of k-cycles.
    Count(CountArgs),
    /// Expected value of a letter of a permutation with m k-cycles.
    Expect(ExpectArgs),
    /// Expected-first-letter table over n = 1..=n-max.
    Table(TableArgs),
    /// Apply the k-cycle-preserving insertion map or its inverse.
    Biject(BijectArgs),
    /// Run the brute-force verification suite.
    Verify(VerifyArgs),
    /// Compare the conjectured Mahonian first-letter formulas with
    /// brute force.
    Conjecture(ConjectureArgs),
    /// Align expectation-table denominators with an OEIS b-file.
    Oeis(OeisArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Plain,
    Markdown,
    Csv,
    Json,
}

impl From<FormatArg> for OutputFormat {
    fn from(arg: FormatArg) -> Self {
        match arg {
            FormatArg::Plain => OutputFormat::Plain,
            FormatArg::Markdown => OutputFormat::Markdown,
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum StyleArg {
    /// Lowest terms, integers bare: "13/5", "2".
    Reduced,
    /// Always show the denominator: "13/5", "2/1".
    Figure1,
}

impl From<StyleArg> for RationalStyle {
    fn from(arg: StyleArg) -> Self {
        match arg {
            StyleArg::Reduced => RationalStyle::Reduced,
            StyleArg::Figure1 => RationalStyle::Figure1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AlphabetArg {
    /// One character per letter: 1..9 then A..Z.
    Base36,
    /// Whitespace- or comma-separated decimal letters.
    Decimal,
}

impl From<AlphabetArg> for LetterAlphabet {
    fn from(arg: AlphabetArg) -> Self {
        match arg {
            AlphabetArg::Base36 => LetterAlphabet::Base36,
            AlphabetArg::Decimal => LetterAlphabet::Decimal,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    /// First letters ascend left-to-right (default).
    Asc,
    /// Mirrored rendering.
    Desc,
}

#[derive(Args, Debug)]
struct CountArgs {
    /// Cycle length.
    #[arg(long)]
    k: u64,
    /// Permutation size.
    #[arg(long)]
    n: u64,
    /// A single m; omit to print the whole row m = 0..=n/k.
    #[arg(long)]
    m: Option<u64>,
    #[arg(long, value_enum, default_value = "plain")]
    format: FormatArg,
}

#[derive(Args, Debug)]
struct ExpectArgs {
    #[arg(long)]
    k: u64,
    #[arg(long)]
    n: u64,
    #[arg(long)]
    m: u64,
    /// Letter position; defaults to the first letter.
    #[arg(long)]
    i: Option<u64>,
    #[arg(long, value_enum, default_value = "reduced")]
    style: StyleArg,
    #[arg(long, value_enum, default_value = "plain")]
    format: FormatArg,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long)]
    k: u64,
    #[arg(long = "n-max")]
    n_max: u64,
    #[arg(long, value_enum, default_value = "plain")]
    format: FormatArg,
    #[arg(long, value_enum, default_value = "reduced")]
    style: StyleArg,
}

#[derive(Args, Debug)]
struct BijectArgs {
    #[command(subcommand)]
    direction: BijectDirection,
}

#[derive(Subcommand, Debug)]
enum BijectDirection {
    /// Insert a letter: S_{n-1} x [n] -> S_n.
    Insert(BijectInsertArgs),
    /// Remove a letter: S_n -> S_{n-1} x [n].
    Extract(BijectExtractArgs),
}

#[derive(Args, Debug)]
struct BijectInsertArgs {
    #[arg(long)]
    k: u64,
    /// Permutation in cycle notation, e.g. "(21)(43)".
    #[arg(long)]
    perm: String,
    /// The letter to insert.
    #[arg(long)]
    x: String,
    #[arg(long, value_enum, default_value = "base36")]
    alphabet: AlphabetArg,
    /// Apply the core map directly, without relabeling; the input may
    /// then live on any letter set and x must be a fresh letter.
    #[arg(long = "no-relabel")]
    no_relabel: bool,
    /// Print the sequence of rewrite rules.
    #[arg(long)]
    trace: bool,
    #[arg(long = "cycle-order", value_enum, default_value = "asc")]
    cycle_order: OrderArg,
}

#[derive(Args, Debug)]
struct BijectExtractArgs {
    #[arg(long)]
    k: u64,
    #[arg(long)]
    perm: String,
    #[arg(long, value_enum, default_value = "base36")]
    alphabet: AlphabetArg,
    #[arg(long = "no-relabel")]
    no_relabel: bool,
    #[arg(long)]
    trace: bool,
    #[arg(long = "cycle-order", value_enum, default_value = "asc")]
    cycle_order: OrderArg,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Cap every S_n enumeration at this n.
    #[arg(long = "max-n")]
    max_n: Option<u32>,
    #[arg(long, value_enum, default_value = "plain")]
    format: FormatArg,
}

#[derive(Args, Debug)]
struct ConjectureArgs {
    /// Which conjecture family to check.
    #[arg(value_enum)]
    which: WhichConjecture,
    #[arg(long = "n-max", default_value_t = 8)]
    n_max: u64,
    /// Largest statistic value for the inversion grid.
    #[arg(long = "j-max", default_value_t = 10)]
    j_max: u64,
    #[arg(long, value_enum, default_value = "plain")]
    format: FormatArg,
    #[arg(long, value_enum, default_value = "reduced")]
    style: StyleArg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum WhichConjecture {
    Inv,
    Maj,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MatchMode {
    Denominators,
}

#[derive(Args, Debug)]
struct OeisArgs {
    /// Sequence id, e.g. A000354.
    id: String,
    /// What to align against the b-file terms.
    #[arg(long = "match", value_enum)]
    match_mode: Option<MatchMode>,
    #[arg(long, default_value_t = 2)]
    k: u64,
    #[arg(long = "n-max", default_value_t = 12)]
    n_max: u64,
    /// Never touch the network; fail if the cache is cold.
    #[arg(long)]
    offline: bool,
    /// Cache directory (default: $KCYCLES_OEIS_CACHE, then data/oeis).
    #[arg(long = "cache-dir")]
    cache_dir: Option<PathBuf>,
}

/// What a command produced; `run` prints it and exits with `code`.
#[derive(Debug, Default)]
pub struct CmdOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl CmdOutput {
    fn ok(stdout: String) -> Self {
        CmdOutput {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }
}

/// Parse `argv` and execute, returning the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(error) => {
            let code = if error.use_stderr() { 1 } else { 0 };
            let _ = error.print();
            return code;
        }
    };
    match execute(cli) {
        Ok(output) => {
            print!("{}", output.stdout);
            eprint!("{}", output.stderr);
            output.code
        }
        Err(error) => {
            eprintln!("error: {error}");
            match error {
                Error::Budget(_) | Error::Oeis(_) => 3,
                _ => 1,
            }
        }
    }
}

/// Testable variant of [`run`]: parse explicit arguments.
pub fn execute_args<I, T>(args: I) -> Result<CmdOutput>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args)
        .map_err(|e| Error::MalformedInput(format!("argument parsing failed: {e}")))?;
    execute(cli)
}

fn execute(cli: Cli) -> Result<CmdOutput> {
    match cli.command {
        Command::Count(args) => cmd_count(args),
        Command::Expect(args) => cmd_expect(args),
        Command::Table(args) => cmd_table(args),
        Command::Biject(args) => match args.direction {
            BijectDirection::Insert(insert) => cmd_biject_insert(insert),
            BijectDirection::Extract(extract) => cmd_biject_extract(extract),
        },
        Command::Verify(args) => cmd_verify(args),
        Command::Conjecture(args) => cmd_conjecture(args),
        Command::Oeis(args) => cmd_oeis(args),
    }
}

fn cmd_count(args: CountArgs) -> Result<CmdOutput> {
    if args.k < 1 {
        return Err(Error::Domain("k must be at least 1".into()));
    }
    let ms: Vec<u64> = match args.m {
        Some(m) => vec![m],
        None => (0..=args.n / args.k).collect(),
    };
    let counts: Vec<(u64, BigInt)> = ms
        .iter()
        .map(|&m| {
            let closed = counting::count_kcycle_perms(args.n, m, args.k);
            // Cross-check the recurrence on every invocation.
            if m >= 1 {
                let recursive = counting::count_kcycle_perms_recursive(args.n, m, args.k);
                assert_eq!(
                    closed, recursive,
                    "internal invariant violation: recurrence disagrees at n={} m={m} k={}",
                    args.n, args.k
                );
            }
            (m, closed)
        })
        .collect();
    Ok(CmdOutput::ok(render::render_count_row(
        args.k,
        args.n,
        &counts,
        args.format.into(),
    )))
}

fn cmd_expect(args: ExpectArgs) -> Result<CmdOutput> {
    let value = match args.i {
        None | Some(1) => {
            let value = expectation::expected_first_letter(args.n, args.m, args.k)?;
            if args.n % args.k == 0 {
                let cross = expectation::expected_first_letter_derangement_form(
                    args.n / args.k,
                    args.m,
                    args.k,
                )?;
                assert_eq!(
                    value, cross,
                    "internal invariant violation: expectation formulas disagree"
                );
            }
            value
        }
        Some(i) => {
            if args.n % args.k == 0 {
                expectation::expected_letter_at(args.n / args.k, args.m, args.k, i)?
            } else if args.n <= oracle::DEFAULT_SN_BUDGET as u64 {
                // No closed form applies off multiples of k; desk-scale
                // sizes are served by enumeration.
                oracle::brute_expected_letter(args.n as u32, args.m, args.k, i)?
            } else {
                return Err(Error::Unsupported(format!(
                    "the i-th letter formula needs k | n; n = {} is too large to enumerate",
                    args.n
                )));
            }
        }
    };
    let style: RationalStyle = args.style.into();
    let stdout = match OutputFormat::from(args.format) {
        OutputFormat::Json => format!("{}\n", render::rational_json(&value)),
        _ => format!("{}\n", render::format_rational(&value, style)),
    };
    Ok(CmdOutput::ok(stdout))
}

fn cmd_table(args: TableArgs) -> Result<CmdOutput> {
    let table = expectation::expectation_table(args.k, args.n_max)?;
    Ok(CmdOutput::ok(render::render_expectation_table(
        &table,
        args.format.into(),
        args.style.into(),
    )))
}

/// Permutation argument: cycle notation when it starts with '(',
/// otherwise a one-line word ("2143" or "2 1 4 3").
fn parse_perm_arg(text: &str, alphabet: LetterAlphabet) -> Result<Permutation> {
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed.starts_with('(') {
        Permutation::parse_cycles(trimmed, alphabet)
    } else {
        Permutation::from_one_line(&parse_one_line(trimmed)?)
    }
}

fn parse_single_letter(text: &str, alphabet: LetterAlphabet) -> Result<Letter> {
    let letters = alphabet.parse_cycle_body(text)?;
    match letters.as_slice() {
        [letter] => Ok(*letter),
        _ => Err(Error::MalformedInput(format!(
            "expected exactly one letter, got '{text}'"
        ))),
    }
}

fn order_of(arg: OrderArg) -> CycleOrder {
    match arg {
        OrderArg::Asc => CycleOrder::Ascending,
        OrderArg::Desc => CycleOrder::Descending,
    }
}

fn trace_lines(trace: &bijection::InsertionTrace, alphabet: LetterAlphabet) -> Result<String> {
    let letters = |list: &[Letter]| -> Result<String> {
        let parts: Result<Vec<String>> = list.iter().map(|&l| alphabet.render(l)).collect();
        Ok(parts?.join(","))
    };
    let mut out = String::new();
    for (index, step) in trace.steps.iter().enumerate() {
        let before = match &step.cycle_before {
            Some(cycle) => format!("({})", alphabet.render_cycle(cycle)?),
            None => "-".into(),
        };
        let after = match &step.cycle_after {
            Some(cycle) => format!("({})", alphabet.render_cycle(cycle)?),
            None => "-".into(),
        };
        out.push_str(&format!(
            "{:>2}. {:6} {before} -> {after}",
            index + 1,
            step.rule.label()
        ));
        if !step.letters_in.is_empty() {
            out.push_str(&format!("  in: {}", letters(&step.letters_in)?));
        }
        if !step.letters_out.is_empty() {
            out.push_str(&format!("  out: {}", letters(&step.letters_out)?));
        }
        out.push('\n');
    }
    Ok(out)
}

fn preservation_warning(trace: &bijection::InsertionTrace, k: u64) -> String {
    if trace.preservation_guaranteed {
        String::new()
    } else {
        format!("warning: preservation not guaranteed ({k} divides n)\n")
    }
}

fn cmd_biject_insert(args: BijectInsertArgs) -> Result<CmdOutput> {
    let alphabet: LetterAlphabet = args.alphabet.into();
    let perm = parse_perm_arg(&args.perm, alphabet)?;
    let x = parse_single_letter(&args.x, alphabet)?;
    let (result, trace) = if args.no_relabel {
        bijection::phi_core_traced(&perm.canonicalize(), x, args.k)?
    } else {
        bijection::insert_traced(&perm, x, args.k)?
    };
    let mut stdout = format!(
        "{}\n",
        result.format_cycles_ordered(alphabet, order_of(args.cycle_order))?
    );
    if args.trace {
        stdout.push_str(&trace_lines(&trace, alphabet)?);
    }
    Ok(CmdOutput {
        stdout,
        stderr: preservation_warning(&trace, args.k),
        code: 0,
    })
}

fn cmd_biject_extract(args: BijectExtractArgs) -> Result<CmdOutput> {
    let alphabet: LetterAlphabet = args.alphabet.into();
    let perm = parse_perm_arg(&args.perm, alphabet)?;
    let (result, letter, trace) = if args.no_relabel {
        bijection::psi_core_traced(&perm.canonicalize(), args.k)?
    } else {
        bijection::extract_traced(&perm, args.k)?
    };
    let mut stdout = format!(
        "{}\n{}\n",
        result.format_cycles_ordered(alphabet, order_of(args.cycle_order))?,
        alphabet.render(letter)?
    );
    if args.trace {
        stdout.push_str(&trace_lines(&trace, alphabet)?);
    }
    Ok(CmdOutput {
        stdout,
        stderr: preservation_warning(&trace, args.k),
        code: 0,
    })
}

fn cmd_verify(args: VerifyArgs) -> Result<CmdOutput> {
    let budget = match args.max_n {
        Some(max_n) => oracle::VerifyBudget::capped(max_n),
        None => oracle::VerifyBudget::default(),
    };
    let report = oracle::verify_all(&budget);
    let stdout = match OutputFormat::from(args.format) {
        OutputFormat::Json => format!("{:#}\n", report.to_json()),
        _ => report.render_text(),
    };
    Ok(CmdOutput {
        stdout,
        stderr: String::new(),
        code: if report.all_passed() { 0 } else { 2 },
    })
}

fn cmd_conjecture(args: ConjectureArgs) -> Result<CmdOutput> {
    let which = match args.which {
        WhichConjecture::Inv => ConjectureKind::Inv,
        WhichConjecture::Maj => ConjectureKind::Maj,
    };
    let reports = mahonian::check_conjectures(which, args.n_max, args.j_max)?;
    let mut stdout = render::render_conjecture_reports(
        &reports,
        args.format.into(),
        args.style.into(),
    );
    if OutputFormat::from(args.format) != OutputFormat::Json {
        let total: usize = reports.iter().map(|r| r.cells.len()).sum();
        let mismatched: usize = reports.iter().map(|r| r.mismatches().count()).sum();
        stdout.push_str(&format!(
            "overall: {total} populated cells, {mismatched} mismatched\n"
        ));
    }
    // Mismatches are findings, not failures.
    Ok(CmdOutput::ok(stdout))
}

fn cmd_oeis(args: OeisArgs) -> Result<CmdOutput> {
    let client = oeis::OeisClient::from_env(args.cache_dir.clone(), args.offline);
    let sequence = client.fetch(&args.id)?;
    let source = match sequence.source {
        oeis::CacheSource::CachedFile => "cached file",
        oeis::CacheSource::Remote => "downloaded",
    };
    let mut stdout = format!(
        "{}: {} terms ({source})\n",
        sequence.id,
        sequence.terms.len()
    );
    match args.match_mode {
        None => {
            let preview: Vec<String> = sequence
                .terms
                .iter()
                .take(8)
                .map(|(i, v)| format!("a({i})={v}"))
                .collect();
            stdout.push_str(&format!("{}\n", preview.join(", ")));
        }
        Some(MatchMode::Denominators) => {
            if args.k < 2 {
                return Err(Error::Domain("denominator matching needs k >= 2".into()));
            }
            let values = oeis::expectation_denominators(args.k, args.n_max)?;
            if values.is_empty() {
                return Err(Error::Domain(format!(
                    "no rows n <= {} are multiples of k = {}",
                    args.n_max, args.k
                )));
            }
            let rendered: Vec<String> = values.iter().map(|v| v.to_string()).collect();
            stdout.push_str(&format!(
                "denominators (k={}, rows n = {}, 2{}, ..., {} <= {}): {}\n",
                args.k,
                args.k,
                args.k,
                args.k * (args.n_max / args.k),
                args.n_max,
                rendered.join(" ")
            ));
            let alignment = oeis::align_prefix(&values, &sequence.terms);
            if alignment.matched == 0 {
                stdout.push_str("no alignment with the b-file terms\n");
            } else {
                stdout.push_str(&format!(
                    "matched prefix: {} of {} terms at b-file offset {}\n",
                    alignment.matched, alignment.total, alignment.offset
                ));
            }
        }
    }
    Ok(CmdOutput::ok(stdout))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_cli(args: &[&str]) -> Result<CmdOutput> {
        execute_args(std::iter::once("kcycles").chain(args.iter().copied()))
    }

    #[test]
    fn count_row_matches_s4() {
        let output = run_cli(&["count", "--k", "2", "--n", "4"]).unwrap();
        assert_eq!(output.stdout, "15 6 3\n");
        let single = run_cli(&["count", "--k", "2", "--n", "4", "--m", "5"]).unwrap();
        assert_eq!(single.stdout, "0\n");
        let cross = run_cli(&["count", "--k", "3", "--n", "9", "--m", "3"]).unwrap();
        assert_eq!(cross.stdout, "2240\n");
    }

    #[test]
    fn expect_command_prints_exact_rationals() {
        let output = run_cli(&["expect", "--k", "2", "--n", "4", "--m", "0"]).unwrap();
        assert_eq!(output.stdout, "13/5\n");
        let output = run_cli(&["expect", "--k", "2", "--n", "12", "--m", "0"]).unwrap();
        assert_eq!(output.stdout, "181669/27949\n");
        let output = run_cli(&["expect", "--k", "2", "--n", "7", "--m", "2"]).unwrap();
        assert_eq!(output.stdout, "4\n");
        let styled = run_cli(&[
            "expect", "--k", "2", "--n", "7", "--m", "2", "--style", "figure1",
        ])
        .unwrap();
        assert_eq!(styled.stdout, "4/1\n");
    }

    #[test]
    fn expect_with_position() {
        let output = run_cli(&["expect", "--k", "2", "--n", "4", "--m", "0", "--i", "4"]).unwrap();
        assert_eq!(output.stdout, "12/5\n");
        // k does not divide n: served by enumeration at desk scale.
        let output = run_cli(&["expect", "--k", "2", "--n", "5", "--m", "0", "--i", "2"]).unwrap();
        assert_eq!(output.stdout, "3\n");
        let error = run_cli(&["expect", "--k", "2", "--n", "15", "--m", "0", "--i", "2"]);
        assert!(matches!(error, Err(Error::Unsupported(_))));
    }

    #[test]
    fn expect_empty_population_errors() {
        assert!(matches!(
            run_cli(&["expect", "--k", "2", "--n", "5", "--m", "3"]),
            Err(Error::EmptyPopulation(_))
        ));
    }

    #[test]
    fn table_single_cell() {
        let output = run_cli(&["table", "--k", "2", "--n-max", "1", "--style", "figure1"]).unwrap();
        let lines: Vec<&str> = output.stdout.lines().collect();
        assert_eq!(lines[0].split_whitespace().collect::<Vec<_>>(), ["n", "0"]);
        assert_eq!(lines[1].split_whitespace().collect::<Vec<_>>(), ["1", "1/1"]);
    }

    #[test]
    fn biject_insert_trivial() {
        let output = run_cli(&["biject", "insert", "--k", "2", "--perm", "(1)", "--x", "2"]).unwrap();
        assert_eq!(output.stdout, "(1)(2)\n");
        assert!(output.stderr.contains("preservation not guaranteed"));
    }

    #[test]
    fn biject_worked_example_round_trip() {
        let input = "(D76)(E)(F32)(G91C)(K54)(LJ8)(MB)(NAH)";
        let output = run_cli(&[
            "biject", "insert", "--k", "3", "--alphabet", "base36", "--perm", input, "--x", "I",
            "--no-relabel",
        ])
        .unwrap();
        assert_eq!(output.stdout, "(D76)(E3)(F29)(G1)(KC5)(L4J)(M8BA)(NHI)\n");
        assert!(output.stderr.is_empty());

        let back = run_cli(&[
            "biject",
            "extract",
            "--k",
            "3",
            "--alphabet",
            "base36",
            "--perm",
            "(D76)(E3)(F29)(G1)(KC5)(L4J)(M8BA)(NHI)",
            "--no-relabel",
            "--trace",
        ])
        .unwrap();
        let mut lines = back.stdout.lines();
        assert_eq!(lines.next(), Some(input));
        assert_eq!(lines.next(), Some("I"));
        let trace: Vec<&str> = lines.collect();
        assert_eq!(trace.len(), 7);
        assert!(trace[0].contains("psi_c"));
    }

    #[test]
    fn verify_small_budget_passes() {
        let output = run_cli(&["verify", "--max-n", "3"]).unwrap();
        assert_eq!(output.code, 0);
        assert!(output.stdout.contains("0 failed"));
        let json = run_cli(&["verify", "--max-n", "3", "--format", "json"]).unwrap();
        let value: serde_json::Value = serde_json::from_str(&json.stdout).unwrap();
        assert_eq!(value["all_passed"], serde_json::json!(true));
    }

    #[test]
    fn conjecture_commands_summarize() {
        let output = run_cli(&["conjecture", "inv", "--n-max", "5"]).unwrap();
        assert_eq!(output.code, 0);
        assert!(output.stdout.contains("0 mismatched"));
        let output = run_cli(&["conjecture", "maj", "--n-max", "5"]).unwrap();
        assert_eq!(output.code, 0);
        assert!(output.stdout.contains("conjecture maj-4"));
    }

    #[test]
    fn oeis_offline_with_vendored_cache() {
        let cache = concat!(env!("CARGO_MANIFEST_DIR"), "/data/oeis");
        let output = run_cli(&[
            "oeis",
            "A000354",
            "--match",
            "denominators",
            "--k",
            "2",
            "--n-max",
            "12",
            "--offline",
            "--cache-dir",
            cache,
        ])
        .unwrap();
        assert!(output.stdout.contains("matched prefix: 6 of 6 terms at b-file offset 1"));

        let plain = run_cli(&["oeis", "A000354", "--offline", "--cache-dir", cache]).unwrap();
        assert!(plain.stdout.contains("a(6)=27949"));
    }

    #[test]
    fn oeis_mismatch_for_k3() {
        let cache = concat!(env!("CARGO_MANIFEST_DIR"), "/data/oeis");
        let output = run_cli(&[
            "oeis",
            "A000354",
            "--match",
            "denominators",
            "--k",
            "3",
            "--n-max",
            "12",
            "--offline",
            "--cache-dir",
            cache,
        ])
        .unwrap();
        assert!(output.stdout.contains("no alignment"));
    }

    #[test]
    fn oeis_offline_cold_cache_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        let result = run_cli(&[
            "oeis",
            "A000354",
            "--offline",
            "--cache-dir",
            dir.path().to_str().unwrap(),
        ]);
        match result {
            Err(Error::Oeis(message)) => assert!(message.contains("b000354.txt")),
            other => panic!("expected an offline cache error, got {other:?}"),
        }
    }

    #[test]
    fn usage_errors_are_malformed_input() {
        assert!(matches!(
            run_cli(&["count", "--k", "x", "--n", "4"]),
            Err(Error::MalformedInput(_))
        ));
        assert!(matches!(
            run_cli(&["nonsense"]),
            Err(Error::MalformedInput(_))
        ));
    }
}
