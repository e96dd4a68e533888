use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use vstab::families::{self, label_map};
use vstab::generator::enumerate_with_jobs;
use vstab::{
    analyze, parse_graph6, to_dot, to_graph6, verify, Claim, Error, FamilyParams, Filter, GenSpec,
    Graph, Scope,
};

#[derive(Parser)]
#[command(
    name = "vstab",
    version,
    about = "Chromatic vertex stability of small graphs"
)]
struct Cli {
    /// Worker threads; 0 uses every available core.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the full stability report of one graph.
    Params {
        /// graph6 string, a file holding one, or `-` for stdin.
        input: String,
    },
    /// Build a member of one of the constructed families.
    Family {
        #[arg(value_enum)]
        family: FamilyKind,
        #[arg(long)]
        n: Option<usize>,
        /// Chord subset as a hex bitmask; bit i-1 selects chord i.
        #[arg(long, value_parser = parse_hex)]
        chords: Option<u64>,
        /// Bipartite host as graph6 (for `bip`).
        #[arg(long)]
        host: Option<String>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::G6)]
        format: Format,
        /// Write here, with the label map in `<path>.labels.json`.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Enumerate graphs of one order and keep those matching the filter.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long)]
        chi: Option<usize>,
        #[arg(long)]
        vs: Option<usize>,
        #[arg(long)]
        ivs: Option<usize>,
        /// Keep graphs with ivs > vs and χ ≥ Δ/2 + 1 instead.
        #[arg(long, conflicts_with_all = ["chi", "vs", "ivs"])]
        gap: bool,
        #[arg(long)]
        connected: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Catalog path; metadata goes to `<path>.meta.json`.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run a named verifier and print its report.
    Verify {
        claim: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Leave wall time out of the report.
        #[arg(long)]
        no_timing: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    G9,
    G10,
    Gn,
    Hne,
    Bip,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    G6,
    Dot,
}

fn parse_hex(s: &str) -> Result<u64, String> {
    let t = s.trim_start_matches("0x").trim_start_matches("0X");
    u64::from_str_radix(t, 16).map_err(|e| format!("bad hex bitmask {s:?}: {e}"))
}

enum Failure {
    Usage(String),
    Verdict,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verdict) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_graph(input: &str) -> Result<Graph, Failure> {
    let text = if input == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(e.to_string()))?;
        s
    } else if Path::new(input).is_file() {
        fs::read_to_string(input).map_err(|e| Failure::Usage(format!("{input}: {e}")))?
    } else {
        input.to_string()
    };
    Ok(parse_graph6(text.trim())?)
}

fn need<T>(v: Option<T>, flag: &str, family: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("{family} needs --{flag}")))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.cmd {
        Cmd::Params { input } => {
            let g = read_graph(&input)?;
            let r = analyze(&g)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&r).expect("report serializes")
            );
        }
        Cmd::Family {
            family,
            n,
            chords,
            host,
            a,
            b,
            format,
            output,
        } => {
            let params = match family {
                FamilyKind::G9 => FamilyParams::G9,
                FamilyKind::G10 => FamilyParams::G10,
                FamilyKind::Gn => FamilyParams::GN {
                    n: need(n, "n", "gn")?,
                },
                FamilyKind::Hne => {
                    let n = need(n, "n", "hne")?;
                    let all = (1u64 << families::chord_count(n.max(13))) - 1;
                    FamilyParams::HNE {
                        n,
                        chords: chords.unwrap_or(all),
                    }
                }
                FamilyKind::Bip => FamilyParams::Bip {
                    host: read_graph(&need(host, "host", "bip")?)?,
                    a: need(a, "a", "bip")?,
                    b: need(b, "b", "bip")?,
                },
            };
            let g = params.build()?;
            let labels =
                serde_json::to_string_pretty(&label_map(&g)).expect("label map serializes");
            let text = match format {
                Format::G6 => to_graph6(&g) + "\n",
                Format::Dot => to_dot(&g, "G"),
                Format::Json => {
                    serde_json::to_string_pretty(&analyze(&g)?).expect("report serializes") + "\n"
                }
            };
            emit(output.as_deref(), &text)?;
            if let Some(p) = output {
                let mut side = p.into_os_string();
                side.push(".labels.json");
                emit(Some(Path::new(&side)), &(labels + "\n"))?;
            }
        }
        Cmd::Search {
            n,
            max_degree,
            chi,
            vs,
            ivs,
            gap,
            connected,
            format,
            output,
        } => {
            let filter = if gap {
                Some(Filter::StabilityGap)
            } else {
                match (chi, vs, ivs) {
                    (None, None, None) => None,
                    (Some(chi), Some(vs), Some(ivs)) => Some(Filter::Class {
                        max_degree,
                        chi,
                        vs,
                        ivs,
                    }),
                    _ => return Err(Failure::Usage("--chi, --vs and --ivs go together".into())),
                }
            };
            let cat = enumerate_with_jobs(
                GenSpec {
                    n,
                    max_degree,
                    connected_only: connected,
                    filter,
                },
                cli.jobs,
            )?;
            eprintln!(
                "{}",
                serde_json::to_string(&cat.funnel).expect("funnel serializes")
            );
            match (output, format) {
                (Some(p), _) => cat.write(&p)?,
                (None, Format::G6) => cat.keys().for_each(|k| println!("{k}")),
                (None, Format::Dot) => {
                    for (i, k) in cat.keys().enumerate() {
                        print!("{}", to_dot(&k.graph(), &format!("G{i}")));
                    }
                }
                (None, Format::Json) => print!("{}", cat.to_text()),
            }
        }
        Cmd::Verify {
            claim,
            n,
            seed,
            output,
            no_timing,
        } => {
            let claim: Claim = claim.parse()?;
            let mut report = verify(
                claim,
                Scope {
                    n,
                    seed,
                    jobs: cli.jobs,
                },
            )?;
            if no_timing {
                report = report.without_timing();
            }
            emit(output.as_deref(), &(report.to_json() + "\n"))?;
            if !report.passed() {
                return Err(Failure::Verdict);
            }
        }
    }
    Ok(())
}
