mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use ballot_core::boxperm::{self, BoxWord, CyclicBoxPerm};
use ballot_core::clusters::{self, ClusterPerm, Ocp, SeriesKind};
use ballot_core::dyck::{psi_map, psi_map_inv};
use ballot_core::patterns::{avoid_count, wilf_map, wilf_map_inv, Pattern, WilfMap};
use ballot_core::perm::{count_class, par_fold_class, Class};
use ballot_core::verify::{verify_suite, Check, Suite};
use ballot_core::walks::{self, Method, WalkKind};
use ballot_core::{CycleSystem, Permutation};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;

use output::{emit, open, Format, Row};

#[derive(Parser)]
#[command(name = "ballot", version, about = "Ballot permutations, odd order permutations and related counts")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format (default: json, or oeis for `seq`).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Cmd {
    /// Count a class of permutations or cluster objects of size n.
    Count {
        #[arg(long, value_enum)]
        class: ClassArg,
        #[arg(long)]
        n: usize,
        /// Start height for hb_ballot.
        #[arg(long)]
        h: Option<usize>,
        /// End height for hb_ballot.
        #[arg(long)]
        b: Option<usize>,
        /// Only count members avoiding this pattern, e.g. 213.
        #[arg(long)]
        pattern: Option<Pattern>,
        /// Split the count by a statistic.
        #[arg(long, value_enum)]
        by: Option<By>,
    },
    /// Apply a bijection to one input.
    Map {
        #[arg(long, value_enum)]
        bijection: Bijection,
        #[arg(long)]
        input: String,
    },
    /// Count Gessel or Gouyou-Beauchamps walks.
    Walk {
        #[arg(long)]
        kind: WalkKind,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_point, default_value = "0,0")]
        start: (i64, i64),
        #[arg(long, value_parser = parse_point, required_unless_present = "sum_end_axis")]
        end: Option<(i64, i64)>,
        #[arg(long, default_value = "step_dp")]
        method: Method,
        /// Sum over every end point on the walk's axis.
        #[arg(long)]
        sum_end_axis: bool,
    },
    /// Count pattern avoiders of each length 1..=n.
    Avoid {
        #[arg(long, value_enum, default_value = "ballot")]
        class: ClassArg,
        #[arg(long)]
        pattern: Pattern,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        h: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
    },
    /// Run a verification suite; exits with status 1 if any check fails.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long = "max-n", default_value_t = 8)]
        max_n: usize,
    },
    /// Print a named sequence.
    Seq {
        /// ballot, odd_order, dyck, wlpp, gessel, gb_axis or ballot123 .. ballot312.
        #[arg(long)]
        id: String,
        #[arg(long = "max-n")]
        max_n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    All,
    Ballot,
    #[value(name = "odd_order", alias = "odd-order")]
    OddOrder,
    Dyck,
    #[value(name = "hb_ballot", alias = "hb-ballot")]
    HbBallot,
    Wlpp,
    Ocp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum By {
    Order,
    Horizontal,
    Des,
    Asc,
    Exc,
    #[value(name = "exc_tilde", alias = "exc-tilde")]
    ExcTilde,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Bijection {
    #[value(name = "Psi")]
    Psi,
    #[value(name = "Psi_inv")]
    PsiInv,
    #[value(name = "Phi")]
    Phi,
    #[value(name = "Phi_inv")]
    PhiInv,
    #[value(name = "box_psi")]
    BoxPsi,
    #[value(name = "box_psi_inv")]
    BoxPsiInv,
    #[value(name = "box_phi")]
    BoxPhi,
    #[value(name = "box_phi_inv")]
    BoxPhiInv,
    #[value(name = "varphi")]
    Varphi,
    #[value(name = "varphi_inv")]
    VarphiInv,
    #[value(name = "eta")]
    Eta,
    #[value(name = "eta_inv")]
    EtaInv,
}

enum Failure {
    Usage(String),
    Domain(String),
    ChecksFailed,
}

impl From<ballot_core::Error> for Failure {
    fn from(e: ballot_core::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        match e.kind() {
            std::io::ErrorKind::InvalidInput => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn parse_point(s: &str) -> Result<(i64, i64), String> {
    let (x, y) = s.split_once(',').ok_or_else(|| format!("expected x,y, got {s:?}"))?;
    let p = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("{t:?}: {e}"));
    Ok((p(x)?, p(y)?))
}

fn perm_class(class: ClassArg, h: Option<usize>, b: Option<usize>) -> Result<Class, Failure> {
    Ok(match class {
        ClassArg::All => Class::All,
        ClassArg::Ballot => Class::Ballot,
        ClassArg::OddOrder => Class::OddOrder,
        ClassArg::Dyck => Class::Dyck,
        ClassArg::HbBallot => match (h, b) {
            (Some(h), Some(b)) => Class::HbBallot { h, b },
            _ => return Err(Failure::Usage("hb_ballot needs --h and --b".into())),
        },
        ClassArg::Wlpp | ClassArg::Ocp => {
            return Err(Failure::Usage(format!("{class:?} is not a permutation class")));
        }
    })
}

fn class_name(class: ClassArg) -> String {
    class.to_possible_value().unwrap().get_name().to_string()
}

#[derive(Serialize)]
struct CountRow {
    class: String,
    n: usize,
    k: Option<usize>,
    count: String,
}

impl Row for CountRow {
    fn value(&self) -> Option<String> {
        Some(self.count.clone())
    }
}

fn count(class: ClassArg, n: usize, h: Option<usize>, b: Option<usize>, pattern: Option<Pattern>, by: Option<By>) -> Result<Vec<CountRow>, Failure> {
    let name = class_name(class);
    let row = |k: Option<usize>, c: BigUint| CountRow { class: name.clone(), n, k, count: c.to_string() };
    if matches!(class, ClassArg::Wlpp | ClassArg::Ocp) {
        if pattern.is_some() {
            return Err(Failure::Usage("--pattern applies to permutation classes only".into()));
        }
        return match by {
            None | Some(By::Order) => {
                let s = clusters::series_coefficients(SeriesKind::OcpEgf, n);
                let counts = s.counts_by_order(n);
                Ok(if by.is_none() {
                    vec![row(None, counts.into_iter().sum())]
                } else {
                    counts.into_iter().enumerate().filter(|(k, _)| *k > 0 || n == 0).map(|(k, c)| row(Some(k), c)).collect()
                })
            }
            Some(By::Horizontal) if class == ClassArg::Wlpp => {
                (0..n as u64).map(|k| Ok(row(Some(k as usize), clusters::count_wlpp_horizontal(n as u64, k)?))).collect()
            }
            Some(other) => Err(Failure::Usage(format!("--by {other:?} does not apply to {name}"))),
        };
    }
    let c = perm_class(class, h, b)?;
    let stat: fn(&Permutation) -> usize = match by {
        None => return Ok(vec![row(None, count_class(c, n, pattern.as_ref()).into())]),
        Some(By::Des) => Permutation::des,
        Some(By::Asc) => Permutation::asc,
        Some(By::Exc) => Permutation::exc,
        Some(By::ExcTilde) => Permutation::exc_tilde,
        Some(other) => return Err(Failure::Usage(format!("--by {other:?} applies to wlpp and ocp only"))),
    };
    let poly = par_fold_class(
        c,
        n,
        pattern.as_ref(),
        || vec![0u64; n.max(1)],
        |acc, w| acc[stat(&Permutation::new(w.to_vec()).unwrap())] += 1,
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    );
    Ok(poly.into_iter().enumerate().map(|(k, c)| row(Some(k), c.into())).collect())
}

#[derive(Serialize)]
struct MapRow {
    bijection: String,
    input: String,
    output: String,
}

impl Row for MapRow {
    fn value(&self) -> Option<String> {
        Some(self.output.clone())
    }
}

fn map(bijection: Bijection, input: &str) -> Result<String, Failure> {
    use Bijection::*;
    let perm = || input.parse::<Permutation>();
    let out = match bijection {
        Psi => psi_map(&perm()?)?.to_string(),
        PsiInv => psi_map_inv(&input.parse::<CycleSystem>()?)?.to_string(),
        Phi => clusters::phi_map(&input.parse::<ClusterPerm>()?)?.to_string(),
        PhiInv => clusters::phi_map_inv(&input.parse::<Ocp>()?)?.to_string(),
        BoxPsi => boxperm::psi(&input.parse::<BoxWord>()?).to_string(),
        BoxPsiInv => boxperm::psi_inv(&input.parse::<CyclicBoxPerm>()?)?.to_string(),
        BoxPhi => boxperm::phi(&input.parse::<BoxWord>()?)?.to_string(),
        BoxPhiInv => boxperm::phi_inv(&input.parse::<BoxWord>()?)?.to_string(),
        Varphi => wilf_map(WilfMap::Varphi, &perm()?)?.to_string(),
        VarphiInv => wilf_map_inv(WilfMap::Varphi, &perm()?)?.to_string(),
        Eta => wilf_map(WilfMap::Eta, &perm()?)?.to_string(),
        EtaInv => wilf_map_inv(WilfMap::Eta, &perm()?)?.to_string(),
    };
    Ok(out)
}

#[derive(Serialize)]
struct WalkRow {
    kind: String,
    n: usize,
    start: String,
    end: String,
    method: String,
    count: String,
}

impl Row for WalkRow {
    fn value(&self) -> Option<String> {
        Some(self.count.clone())
    }
}

#[derive(Serialize)]
struct AvoidRow {
    class: String,
    pattern: String,
    n: usize,
    count: u64,
}

impl Row for AvoidRow {
    fn value(&self) -> Option<String> {
        Some(self.count.to_string())
    }
}

#[derive(Serialize)]
struct SeqRow {
    id: String,
    n: usize,
    value: String,
}

impl Row for SeqRow {
    fn value(&self) -> Option<String> {
        Some(self.value.clone())
    }
}

impl Row for Check {
    fn value(&self) -> Option<String> {
        None
    }
}

fn seq(id: &str, max_n: usize) -> Result<Vec<SeqRow>, Failure> {
    let ballot_patterns = ["ballot123", "ballot132", "ballot213", "ballot231", "ballot312", "ballot321"];
    let values: Vec<(usize, BigUint)> = match id {
        "ballot" | "odd_order" => {
            let s = clusters::series_coefficients(SeriesKind::BEgf, max_n);
            (0..=max_n).map(|n| (n, s.count(n, 0))).collect()
        }
        "wlpp" => {
            let s = clusters::series_coefficients(SeriesKind::OcpEgf, max_n);
            (0..=max_n).map(|n| (n, s.counts_by_order(n).into_iter().sum())).collect()
        }
        "dyck" => (0..=max_n).map(|n| (n, count_class(Class::Dyck, n, None).into())).collect(),
        "gessel" => (0..=max_n).map(|n| (n, walks::gessel_closed_form(n).to_integer().to_biguint().unwrap())).collect(),
        "gb_axis" => (0..=max_n)
            .map(|n| Ok((n, walks::count_walks_to_axis(WalkKind::Gb, n, (0, 0), Method::StepDp)?)))
            .collect::<Result<_, Failure>>()?,
        _ if ballot_patterns.contains(&id) => {
            let p: Pattern = id["ballot".len()..].parse()?;
            (1..=max_n).map(|n| (n, avoid_count(Class::Ballot, n, &p).into())).collect()
        }
        _ => return Err(Failure::Usage(format!("unknown sequence id {id:?}"))),
    };
    Ok(values.into_iter().map(|(n, v)| SeqRow { id: id.to_string(), n, value: v.to_string() }).collect())
}

fn run(cli: Cli) -> Outcome {
    let format = cli.format.unwrap_or(match cli.cmd {
        Cmd::Seq { .. } => Format::Oeis,
        _ => Format::Json,
    });
    if matches!(cli.cmd, Cmd::Verify { .. }) && format == Format::Oeis {
        return Err(Failure::Usage("verify output has no oeis form".into()));
    }
    let mut w = open(cli.out.as_deref())?;
    match cli.cmd {
        Cmd::Count { class, n, h, b, pattern, by } => emit(&count(class, n, h, b, pattern, by)?, format, &mut w)?,
        Cmd::Map { bijection, input } => {
            let output = map(bijection, &input)?;
            let bijection = bijection.to_possible_value().unwrap().get_name().to_string();
            emit(&[MapRow { bijection, input, output }], format, &mut w)?
        }
        Cmd::Walk { kind, n, start, end, method, sum_end_axis } => {
            let (end, count) = match end {
                Some(e) if !sum_end_axis => (format!("{},{}", e.0, e.1), walks::count_walks(kind, n, start, e, method)?),
                _ => ("axis".to_string(), walks::count_walks_to_axis(kind, n, start, method)?),
            };
            let row = WalkRow {
                kind: kind.to_string(),
                n,
                start: format!("{},{}", start.0, start.1),
                end,
                method: method.to_string(),
                count: count.to_string(),
            };
            emit(&[row], format, &mut w)?
        }
        Cmd::Avoid { class, pattern, n, h, b } => {
            let c = perm_class(class, h, b)?;
            let rows: Vec<AvoidRow> = (1..=n)
                .map(|m| AvoidRow { class: class_name(class), pattern: pattern.to_string(), n: m, count: avoid_count(c, m, &pattern) })
                .collect();
            emit(&rows, format, &mut w)?
        }
        Cmd::Verify { suite, max_n } => {
            let report = verify_suite(suite, max_n, cli.seed)?;
            emit(&report.checks, format, &mut w)?;
            let failed = report.failures().count();
            eprintln!(
                "suite {}: {} checks, {} failed ({:.1} s)",
                report.suite,
                report.checks.len(),
                failed,
                report.elapsed.as_secs_f64()
            );
            if failed > 0 {
                return Err(Failure::ChecksFailed);
            }
        }
        Cmd::Seq { id, max_n } => emit(&seq(&id, max_n)?, format, &mut w)?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::ChecksFailed) => ExitCode::from(1),
    }
}
