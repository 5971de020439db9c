use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use catalan_families::bijection::{
    forest_to_labeled, pair_to_partition, partition_to_labeled_forest, partition_to_pair,
    LabeledTreePair,
};
use catalan_families::closed_form::{find_square_core, member_omega, member_square, mu_tilde};
use catalan_families::counting::{ballot, catalan, generalized_catalan};
use catalan_families::family::FamilyDescriptor;
use catalan_families::partition::{BoundedPartition, Cap, Partition, SquarePartition};
use catalan_families::render::{
    labeled_forest_to_dot, labeled_pair_from_dot, labeled_pair_to_dot, to_json, young_ascii,
    ForestJson, PairJson, PartitionJson,
};
use catalan_families::tree::{cut, Forest, PlaneTree, TreePair};
use catalan_families::verify::{run_verify, Fault, VerifyConfig};
use catalan_families::Error;

#[derive(Parser)]
#[command(name = "catfam", version, about = "Catalan and ballot partition families")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List a family in canonical order with its predicted size.
    Enumerate(EnumerateArgs),
    /// Test membership and print the witness.
    Check(CheckArgs),
    /// Convert between partitions, tree pairs and forests.
    Convert(ConvertArgs),
    /// Exact Catalan, ballot and generalized Catalan numbers.
    Count(CountArgs),
    /// Run every cross-validation suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    YoungAscii,
    Dot,
}

#[derive(Args)]
#[command(group(ArgGroup::new("family").required(true).args(["square", "omega"])))]
struct EnumerateArgs {
    /// Square core, e.g. `3,1,1`.
    #[arg(long, value_name = "PARTS")]
    square: Option<String>,
    #[arg(long, value_name = "M")]
    omega: Option<usize>,
    /// Number of parts of every member.
    #[arg(long, value_name = "ELL")]
    parts: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["square", "omega"])))]
struct CheckArgs {
    #[arg(long, value_name = "PARTS")]
    mu: String,
    #[arg(long)]
    square: bool,
    /// Core to test membership against (square mode).
    #[arg(long, value_name = "PARTS", requires = "square")]
    core: Option<String>,
    #[arg(long, value_name = "M")]
    omega: Option<usize>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("direction").required(true).args(["to_trees", "to_forest", "to_partition"])))]
struct ConvertArgs {
    #[arg(long)]
    to_trees: bool,
    #[arg(long)]
    to_forest: bool,
    #[arg(long)]
    to_partition: bool,
    /// A file, or the structure itself.
    #[arg(long, value_name = "FILE|TEXT")]
    input: String,
    /// Number of forest slots; defaults to bound - parts + 1 for JSON input.
    #[arg(long, value_name = "M")]
    m: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Convert the result back and require the original.
    #[arg(long)]
    roundtrip: bool,
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("which").required(true).args(["catalan", "ballot", "gen_catalan"])))]
struct CountArgs {
    #[arg(long, value_name = "N")]
    catalan: Option<u64>,
    #[arg(long, num_args = 2, value_names = ["ELL", "M"])]
    ballot: Option<Vec<u64>>,
    #[arg(long, num_args = 3, value_names = ["K", "GAMMA", "N"])]
    gen_catalan: Option<Vec<u64>>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    RisingFlip,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_name = "N")]
    max_parts: usize,
    /// Enables the forest and compression suites.
    #[arg(long, value_name = "M")]
    max_m: Option<usize>,
    /// Also write the full report, with timings, as JSON.
    #[arg(long, value_name = "PATH")]
    report: Option<PathBuf>,
    /// Run suites one after another.
    #[arg(long)]
    serial: bool,
    #[arg(long, value_enum, hide = true)]
    inject_fault: Option<FaultArg>,
}

enum Failure {
    Error(Error),
    Property(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

type CmdResult = Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Error(Error::Parse(msg.into()))
}

fn emit(output: &Option<PathBuf>, text: &str) -> CmdResult {
    match output {
        Some(path) => fs::write(path, text).map_err(Error::from)?,
        None => io::stdout().write_all(text.as_bytes()).map_err(Error::from)?,
    }
    Ok(())
}

fn read_input(input: &str) -> Result<String, Error> {
    let path = Path::new(input);
    if path.is_file() {
        Ok(fs::read_to_string(path)?)
    } else {
        Ok(input.to_string())
    }
}

fn parse_csv(s: &str) -> Result<Partition, Error> {
    s.trim().parse()
}

fn cmd_enumerate(args: &EnumerateArgs, cap: Cap) -> CmdResult {
    let desc = match (&args.square, args.omega) {
        (Some(core), None) => FamilyDescriptor::square(core.parse::<SquarePartition>()?, args.parts)?,
        (None, Some(m)) => FamilyDescriptor::omega(m, args.parts)?,
        _ => unreachable!("clap enforces exactly one family"),
    };
    let family = desc.generate(cap)?;
    let predicted = desc.predicted_count();
    let count = family.len();
    let matches = predicted == count.into();
    let trailer = if matches {
        format!("{count} = {}\n", desc.predicted_symbol())
    } else {
        format!("{count} != {} = {predicted} MISMATCH\n", desc.predicted_symbol())
    };
    let text = match args.format {
        Format::Text => {
            let mut s: String = family.iter().map(|mu| mu.partition().to_csv() + "\n").collect();
            s.push_str(&trailer);
            s
        }
        Format::YoungAscii => {
            let mut s = String::new();
            for mu in family.iter() {
                s.push_str(&mu.partition().to_csv());
                s.push('\n');
                s.push_str(&young_ascii(&mu));
                s.push('\n');
            }
            s.push_str(&trailer);
            s
        }
        Format::Json => {
            let parts: Vec<PartitionJson> = family.iter().map(|mu| PartitionJson::from(&mu)).collect();
            let doc = serde_json::json!({
                "family": desc.to_string(),
                "partitions": parts,
                "count": count,
                "predicted": predicted.to_string(),
                "formula": desc.predicted_symbol(),
                "matches": matches,
            });
            to_json(&doc) + "\n"
        }
        Format::Dot => return Err(usage("dot output applies to trees, pairs and forests")),
    };
    emit(&args.output, &text)?;
    if matches {
        Ok(())
    } else {
        Err(Failure::Property(trailer.trim_end().to_string()))
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_check(args: &CheckArgs) -> CmdResult {
    let mu = parse_csv(&args.mu)?;
    let ell = mu.len();
    let mut out = String::new();
    if args.square {
        let mu = BoundedPartition::from_partition(mu, ell)?;
        let w = find_square_core(&mu)?;
        out.push_str(&format!("{w}\n"));
        let tc = w.core.tau();
        out.push_str(&format!(
            "tau(core)={tc} self-dual={} family=P^{ell}{}\n",
            yes(tc == w.core),
            w.core.orbit_representative()
        ));
        if let Some(core) = &args.core {
            let lambda: SquarePartition = core.parse()?;
            let member = member_square(&mu, &lambda)?;
            out.push_str(&format!("member of P^{ell}{lambda}: {}\n", yes(member)));
        }
    } else {
        let m = args.omega.expect("clap enforces a mode");
        if m == 0 {
            return Err(usage("--omega needs m >= 1"));
        }
        let mu = BoundedPartition::from_partition(mu, ell + m - 1)?;
        let t = mu_tilde(&mu, m)?;
        out.push_str("i\tmu\tmu~\tclass\n");
        for i in 1..=ell {
            let class = match t.at(i).cmp(&i) {
                std::cmp::Ordering::Greater => "L",
                std::cmp::Ordering::Equal => "M",
                std::cmp::Ordering::Less => "H",
            };
            out.push_str(&format!("{i}\t{}\t{}\t{class}\n", mu.at(i), t.at(i)));
        }
        out.push_str(&format!(
            "rising={} falling={}\nmember of P^{ell}(Omega_{m}): {}\n",
            yes(t.rising_condition()),
            yes(t.falling_condition()),
            yes(member_omega(&mu, m)?)
        ));
    }
    emit(&None, &out)
}

/// What `--to-partition` can read.
enum Structure {
    Labeled(LabeledTreePair),
    Pair(TreePair),
    Forest(Forest),
}

fn parse_structure(src: &str) -> Result<Structure, Error> {
    let src = src.trim();
    if src.starts_with('{') {
        let value: serde_json::Value =
            serde_json::from_str(src).map_err(|e| Error::Parse(e.to_string()))?;
        if value.get("slots").is_some() {
            let fj: ForestJson = serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
            return Ok(Structure::Forest(fj.shape()?));
        }
        let pj: PairJson = serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
        return Ok(match pj.to_labeled()? {
            Some(l) => Structure::Labeled(l),
            None => Structure::Pair(pj.shape()),
        });
    }
    if src.starts_with("digraph") {
        return Ok(Structure::Labeled(labeled_pair_from_dot(src)?));
    }
    if src.contains('|') {
        if src.contains(|c: char| c.is_ascii_digit()) {
            return Ok(Structure::Labeled(src.parse()?));
        }
        return Ok(Structure::Pair(src.parse()?));
    }
    if src.contains(';') || src.contains('_') {
        return Ok(Structure::Forest(src.parse()?));
    }
    let tree: PlaneTree = src.parse()?;
    Ok(Structure::Pair(cut(&tree)?))
}

/// Partition input for the forward directions, with the bound from JSON if
/// present.
fn parse_partition_input(src: &str) -> Result<(Partition, Option<usize>), Error> {
    let src = src.trim();
    if src.starts_with('{') {
        let pj: PartitionJson = serde_json::from_str(src).map_err(|e| Error::Parse(e.to_string()))?;
        let bound = pj.bound;
        return Ok((Partition::new(pj.parts)?, Some(bound)));
    }
    Ok((parse_csv(src)?, None))
}

fn render_partition(mu: &BoundedPartition, format: Format) -> Result<String, Failure> {
    Ok(match format {
        Format::Text => mu.partition().to_csv() + "\n",
        Format::Json => to_json(&PartitionJson::from(mu)) + "\n",
        Format::YoungAscii => young_ascii(mu),
        Format::Dot => return Err(usage("dot output applies to trees, pairs and forests")),
    })
}

fn roundtrip_failed(what: String) -> Failure {
    Failure::Property(format!("roundtrip mismatch: {what}"))
}

fn cmd_convert(args: &ConvertArgs) -> CmdResult {
    let src = read_input(&args.input)?;
    let text = if args.to_trees {
        let (p, bound) = parse_partition_input(&src)?;
        let ell = p.len();
        if bound.is_some_and(|b| b != ell) {
            return Err(usage(format!("tree pairs need bound = parts = {ell}")));
        }
        let mu = BoundedPartition::from_partition(p, ell)?;
        let pair = partition_to_pair(&mu)?;
        let (text, reparsed) = match args.format {
            Format::Text => {
                let t = format!("{pair}\n{}\n", pair.shape());
                (t, pair.to_string().parse::<LabeledTreePair>()?)
            }
            Format::Dot => {
                let t = labeled_pair_to_dot(&pair);
                let back = labeled_pair_from_dot(&t)?;
                (t, back)
            }
            Format::Json => {
                let t = to_json(&PairJson::from(&pair)) + "\n";
                let pj: PairJson = serde_json::from_str(&t).map_err(|e| Error::Parse(e.to_string()))?;
                (t, pj.to_labeled()?.expect("labels were written"))
            }
            Format::YoungAscii => return Err(usage("young-ascii output applies to partitions")),
        };
        if args.roundtrip {
            let back = reparsed.to_partition()?;
            if reparsed != pair || back != mu {
                return Err(roundtrip_failed(format!("{mu} -> {pair} -> {back}")));
            }
            eprintln!("roundtrip ok");
        }
        text
    } else if args.to_forest {
        let (p, bound) = parse_partition_input(&src)?;
        let ell = p.len();
        let m = match (args.m, bound) {
            (Some(m), _) => m,
            (None, Some(b)) if b >= ell => b + 1 - ell,
            _ => return Err(usage("--to-forest needs --m for CSV input")),
        };
        if m == 0 || bound.is_some_and(|b| b != ell + m - 1) {
            return Err(usage(format!("forest with m={m} needs bound {}", ell + m.max(1) - 1)));
        }
        let mu = BoundedPartition::from_partition(p, ell + m - 1)?;
        let lf = partition_to_labeled_forest(&mu, m)?;
        let text = match args.format {
            Format::Text => format!("{lf}\n{}\n", lf.shape()),
            Format::Dot => labeled_forest_to_dot(&lf),
            Format::Json => to_json(&ForestJson::from(&lf)) + "\n",
            Format::YoungAscii => return Err(usage("young-ascii output applies to partitions")),
        };
        if args.roundtrip {
            let (back, relabeled) = forest_to_labeled(&lf.shape())?;
            if back != mu || relabeled != lf {
                return Err(roundtrip_failed(format!("{mu} -> {} -> {back}", lf.shape())));
            }
            eprintln!("roundtrip ok");
        }
        text
    } else {
        let (mu, back_ok) = match parse_structure(&src)? {
            Structure::Labeled(pair) => {
                pair.validate()?;
                let mu = pair.to_partition()?;
                let ok = partition_to_pair(&mu)? == pair;
                (mu, ok)
            }
            Structure::Pair(pair) => {
                let mu = pair_to_partition(&pair, pair.edges() + 1)?;
                let ok = partition_to_pair(&mu)?.shape() == pair;
                (mu, ok)
            }
            Structure::Forest(forest) => {
                let (mu, lf) = forest_to_labeled(&forest)?;
                let ok = partition_to_labeled_forest(&mu, forest.m())? == lf && lf.shape() == forest;
                (mu, ok)
            }
        };
        if args.roundtrip {
            if !back_ok {
                return Err(roundtrip_failed(format!("{} -> {mu}", src.trim())));
            }
            eprintln!("roundtrip ok");
        }
        render_partition(&mu, args.format)?
    };
    emit(&args.output, &text)
}

fn cmd_count(args: &CountArgs) -> CmdResult {
    let value = if let Some(n) = args.catalan {
        catalan(n)
    } else if let Some(v) = &args.ballot {
        ballot(v[0], v[1])
    } else if let Some(v) = &args.gen_catalan {
        if v[1] == 0 && v[2] > 0 {
            return Err(usage("gamma must be positive"));
        }
        generalized_catalan(v[0], v[1], v[2])
    } else {
        unreachable!("clap enforces one count")
    };
    emit(&None, &format!("{value}\n"))
}

fn cmd_verify(args: &VerifyArgs, cap: Cap) -> CmdResult {
    let mut cfg = VerifyConfig::new(args.max_parts, args.max_m);
    cfg.cap = cap;
    cfg.parallel = !args.serial;
    cfg.fault = args.inject_fault.map(|f| match f {
        FaultArg::RisingFlip => Fault::FlipRising,
    });
    let report = run_verify(&cfg)?;
    emit(&None, &report.summary())?;
    if let Some(path) = &args.report {
        fs::write(path, report.to_json() + "\n").map_err(Error::from)?;
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Property("verification failed".into()))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cap = Cap::from_env();
    let result = match &cli.command {
        Command::Enumerate(a) => cmd_enumerate(a, cap),
        Command::Check(a) => cmd_check(a),
        Command::Convert(a) => cmd_convert(a),
        Command::Count(a) => cmd_count(a),
        Command::Verify(a) => cmd_verify(a, cap),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Property(msg)) => {
            eprintln!("catfam: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Error(e)) => {
            eprintln!("catfam: {e}");
            ExitCode::from(match e {
                Error::CapExceeded { .. } => 3,
                _ => 2,
            })
        }
    }
}
