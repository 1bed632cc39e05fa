//! Command-line front end: build and verify suffix arrays over files,
//! benchmark the construction phases, dump internal structures, and
//! generate reproducible test corpora.

mod formats;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use saca_core::corpus;
use saca_core::lyndon::{compute_pss, derive_nss};
use saca_core::oracles;
use saca_core::phase1::{initial_grouping, run_phase1};
use saca_core::{
    suffix_array_with_stats, verify_suffix_array, BuildConfig, Error as CoreError,
    SentinelPolicy, SuffixArray, Symbols, Text, DEFAULT_QUEUE_CAPACITY,
};

use formats::{read_sa, sa_checksum, write_sa, ReadError, SaFormat, RAW32_MAX_LEN};

#[derive(Parser)]
#[command(name = "saca", version, about = "Suffix array construction toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Policy {
    /// Append a NUL terminator; input must be NUL-free.
    #[default]
    Strict,
    /// Shift bytes up by one so arbitrary binary input is accepted.
    Remap,
}

impl From<Policy> for SentinelPolicy {
    fn from(p: Policy) -> Self {
        match p {
            Policy::Strict => SentinelPolicy::Strict,
            Policy::Remap => SentinelPolicy::Remap,
        }
    }
}

#[derive(Args)]
struct CommonOpts {
    /// Sentinel handling for the input bytes.
    #[arg(long, value_enum, default_value_t)]
    sentinel_policy: Policy,
    /// Capacity of the insertion queue (tuning only; the output is
    /// independent of it).
    #[arg(long, default_value_t = DEFAULT_QUEUE_CAPACITY as u64, value_parser = clap::value_parser!(u64).range(1..))]
    queue_capacity: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Build the suffix array of a file.
    Build {
        input: PathBuf,
        /// Output file for the suffix array.
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: SaFormat,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Check that a suffix array file matches a text file.
    Verify {
        input: PathBuf,
        sa: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: SaFormat,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Time the construction phases on a file.
    Bench {
        input: PathBuf,
        /// Number of repetitions; the report shows the means.
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
        iterations: u64,
        /// Emit the report as a JSON object.
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Print internal structures as whitespace-separated rows.
    Inspect {
        input: PathBuf,
        /// Which structure to dump.
        #[arg(long, value_enum)]
        dump: DumpKind,
        /// Also print the brute-force reference and a diff flag.
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Write a deterministic test corpus.
    Gen {
        output: PathBuf,
        #[arg(long, value_enum)]
        kind: GenKind,
        /// Output size in bytes.
        #[arg(long)]
        size: usize,
        /// Alphabet size for the random generators.
        #[arg(long, default_value_t = 26, value_parser = clap::value_parser!(u8).range(1..))]
        sigma: u8,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Block length for the periodic generator.
        #[arg(long, default_value_t = 256, value_parser = clap::value_parser!(u64).range(1..))]
        period: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DumpKind {
    Pss,
    Nss,
    Lyndon,
    Grouping,
    Sa,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenKind {
    Fibonacci,
    Random,
    Periodic,
}

/// A failed command: message plus process exit code (1 = domain or
/// verification failure, 2 = I/O or format trouble).
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn domain(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    fn io(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        Failure::domain(e.to_string())
    }
}

impl From<ReadError> for Failure {
    fn from(e: ReadError) -> Self {
        match e {
            ReadError::Io(e) => Failure::io(e.to_string()),
            ReadError::Malformed(m) => Failure::io(m),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("saca: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Build {
            input,
            output,
            format,
            common,
        } => cmd_build(&input, &output, format, &common),
        Command::Verify {
            input,
            sa,
            format,
            common,
        } => cmd_verify(&input, &sa, format, &common),
        Command::Bench {
            input,
            iterations,
            json,
            common,
        } => cmd_bench(&input, iterations as usize, json, &common),
        Command::Inspect {
            input,
            dump,
            oracle,
            common,
        } => cmd_inspect(&input, dump, oracle, &common),
        Command::Gen {
            output,
            kind,
            size,
            sigma,
            seed,
            period,
        } => cmd_gen(&output, kind, size, sigma, seed, period as usize),
    }
}

fn read_input(path: &Path, common: &CommonOpts) -> Result<(Vec<u8>, Text), Failure> {
    let raw = std::fs::read(path).map_err(|e| Failure::io(format!("{}: {e}", path.display())))?;
    let text = Text::new(&raw, common.sentinel_policy.into())?;
    Ok((raw, text))
}

fn build_sa(text: &Text, common: &CommonOpts) -> Result<SuffixArray, Failure> {
    let config = BuildConfig {
        queue_capacity: common.queue_capacity as usize,
        forced_width: None,
    };
    Ok(suffix_array_with_stats(text, &config)?.0)
}

fn cmd_build(
    input: &Path,
    output: &Path,
    format: SaFormat,
    common: &CommonOpts,
) -> Result<(), Failure> {
    let (raw, text) = read_input(input, common)?;
    if format == SaFormat::Raw32 && raw.len() > RAW32_MAX_LEN {
        return Err(Failure::domain(format!(
            "raw32 output cannot address {} input bytes",
            raw.len()
        )));
    }
    let sa = build_sa(&text, common)?;
    write_sa(output, &sa, format).map_err(|e| Failure::io(format!("{}: {e}", output.display())))
}

fn cmd_verify(
    input: &Path,
    sa_path: &Path,
    format: SaFormat,
    common: &CommonOpts,
) -> Result<(), Failure> {
    let (raw, text) = read_input(input, common)?;
    let entries = read_sa(sa_path, raw.len(), format)?;
    // external files omit the terminator entry; it always ranks first
    let mut full = Vec::with_capacity(raw.len() + 1);
    full.push(raw.len() as u64);
    full.extend_from_slice(&entries);
    if verify_suffix_array(&text, &SuffixArray::W64(full)) {
        println!("ok: {} entries", entries.len());
        Ok(())
    } else {
        Err(Failure::domain(format!(
            "{} is not the suffix array of {}",
            sa_path.display(),
            input.display()
        )))
    }
}

fn cmd_bench(
    input: &Path,
    iterations: usize,
    json: bool,
    common: &CommonOpts,
) -> Result<(), Failure> {
    let (_, text) = read_input(input, common)?;
    let config = BuildConfig {
        queue_capacity: common.queue_capacity as usize,
        forced_width: None,
    };
    let n = text.len();
    let mut init = 0f64;
    let mut phase1 = 0f64;
    let mut phase2 = 0f64;
    let mut aux_per_char = 0f64;
    let mut groups = 0usize;
    let mut checksum = 0u64;
    for round in 0..iterations {
        let (sa, stats) = suffix_array_with_stats(&text, &config)?;
        init += stats.init_time.as_secs_f64();
        phase1 += stats.phase1_time.as_secs_f64();
        phase2 += stats.phase2_time.as_secs_f64();
        aux_per_char += stats.peak_aux_bytes as f64 / n as f64;
        groups = stats.group_count;
        let sum = sa_checksum(&sa);
        if round == 0 {
            checksum = sum;
        } else {
            assert_eq!(checksum, sum, "construction must be deterministic");
        }
    }
    let k = iterations as f64;
    let (init, phase1, phase2) = (init / k, phase1 / k, phase2 / k);
    let aux_per_char = aux_per_char / k;
    if json {
        let report = serde_json::json!({
            "init_s": init,
            "phase1_s": phase1,
            "phase2_s": phase2,
            "total_s": init + phase1 + phase2,
            "aux_bytes_per_char": aux_per_char,
            "n": n,
            "groups": groups,
            "sa_checksum": format!("{checksum:016x}"),
        });
        println!("{report}");
    } else {
        println!("n                  {n}");
        println!("groups             {groups}");
        println!("iterations         {iterations}");
        println!("init               {init:.6} s");
        println!("phase1             {phase1:.6} s");
        println!("phase2             {phase2:.6} s");
        println!("total              {:.6} s", init + phase1 + phase2);
        println!("aux bytes / char   {aux_per_char:.3}");
        println!("sa checksum        {checksum:016x}");
    }
    Ok(())
}

fn cmd_inspect(
    input: &Path,
    dump: DumpKind,
    oracle: bool,
    common: &CommonOpts,
) -> Result<(), Failure> {
    let (_, text) = read_input(input, common)?;
    if oracle && text.len() > oracles::ORACLE_MAX_LEN {
        return Err(Failure::io(format!(
            "oracle mode is capped at {} symbols",
            oracles::ORACLE_MAX_LEN
        )));
    }
    let mine = render_dump(&text, dump, common)?;
    print!("{mine}");
    if oracle {
        let reference = render_oracle_dump(&text, dump);
        println!("oracle:");
        print!("{reference}");
        println!(
            "diff: {}",
            if mine == reference { "none" } else { "MISMATCH" }
        );
    }
    Ok(())
}

fn render_dump(text: &Text, dump: DumpKind, common: &CommonOpts) -> Result<String, Failure> {
    let row = |values: Vec<String>| values.join(" ") + "\n";
    Ok(match dump {
        DumpKind::Pss => row(compute_pss(text).iter().map(i64::to_string).collect()),
        DumpKind::Nss => row(derive_nss(&compute_pss(text))
            .iter()
            .map(usize::to_string)
            .collect()),
        DumpKind::Lyndon => {
            let nss = derive_nss(&compute_pss(text));
            row(nss
                .iter()
                .enumerate()
                .map(|(i, &j)| (j - i).to_string())
                .collect())
        }
        DumpKind::Grouping => grouping_members(text)
            .iter()
            .map(|g| {
                g.iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
                    + "\n"
            })
            .collect(),
        DumpKind::Sa => {
            let sa = build_sa(text, common)?;
            row(sa.iter().map(|v| v.to_string()).collect())
        }
    })
}

fn render_oracle_dump(text: &Text, dump: DumpKind) -> String {
    let row = |values: Vec<String>| values.join(" ") + "\n";
    let (pss, nss) = oracles::oracle_pss_nss(text);
    match dump {
        DumpKind::Pss => row(pss.iter().map(i64::to_string).collect()),
        DumpKind::Nss => row(nss.iter().map(usize::to_string).collect()),
        DumpKind::Lyndon => row(nss
            .iter()
            .enumerate()
            .map(|(i, &j)| (j - i).to_string())
            .collect()),
        DumpKind::Grouping => oracles::canonical_lyndon_grouping(text)
            .groups
            .iter()
            .map(|g| {
                g.members
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
                    + "\n"
            })
            .collect(),
        DumpKind::Sa => row(oracles::brute_force_sa(text)
            .iter()
            .map(usize::to_string)
            .collect()),
    }
}

fn grouping_members(text: &Text) -> Vec<Vec<usize>> {
    match text.symbols() {
        Symbols::Bytes(s) => {
            let pss = saca_core::lyndon::MarkedPss::<u64>::build(s.as_slice());
            run_phase1(initial_grouping(s.as_slice()), &pss).members()
        }
        Symbols::Wide(s) => {
            let pss = saca_core::lyndon::MarkedPss::<u64>::build(s.as_slice());
            run_phase1(initial_grouping(s.as_slice()), &pss).members()
        }
    }
}

fn cmd_gen(
    output: &Path,
    kind: GenKind,
    size: usize,
    sigma: u8,
    seed: u64,
    period: usize,
) -> Result<(), Failure> {
    let data = match kind {
        GenKind::Fibonacci => corpus::fibonacci_word(size),
        GenKind::Random => corpus::random_text(size, sigma, seed),
        GenKind::Periodic => corpus::periodic_text(size, sigma, seed, period),
    };
    std::fs::write(output, data).map_err(|e| Failure::io(format!("{}: {e}", output.display())))
}
