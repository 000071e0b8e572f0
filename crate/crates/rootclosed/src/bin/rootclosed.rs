//! Command-line front end: classify closed subsets, verify reference
//! counts, count finite topologies, and query stabilizers.

use rootclosed::enumerate::{classify_all, ClassKind};
use rootclosed::export::{to_export_records, write_counts_csv, write_jsonl};
use rootclosed::golden::{run_verify, VerifyLevel};
use rootclosed::root_system::{Family, RootSystem, RootSystemType};
use rootclosed::setspec;
use rootclosed::topology;
use rootclosed::weyl::WeylAction;
use std::process::ExitCode;
use std::sync::Arc;

const USAGE: &str = "\
rootclosed <command> [options]

commands:
  classify --type A..G --rank N [--kinds special,mixed,symmetric]
           [--format jsonl|csv] [--out PATH] [--jobs N] [--seed N]
      classify closed subsets up to Weyl conjugacy; writes records plus a
      counts summary line
  verify [--level fast|full|extended] [--jobs N] [--seed N]
      re-derive the reference class counts (fast: rank 3, full: +rank 4,
      extended: +rank 5) plus the rank-3 brute-force oracle
  topo --n N [--t0]
      labeled and per-class topology counts on N points (N <= 6)
  stabilizer --type A..G --rank N --set \"a1+a2,-a3\"
      order and generators of the stabilizer of a closed set

exit codes: 0 ok, 1 verification mismatch, 2 usage, 3 i/o error

The environment variable ROOTCLOSED_ELEMENT_CAP overrides the group
element-iteration cap (default 1000000). --seed only affects sampled
invariance checks inside `verify`, never classification output.";

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {}\n\n{}", msg, USAGE);
    ExitCode::from(2)
}

struct Args {
    positional: Vec<String>,
    options: Vec<(String, String)>,
    flags: Vec<String>,
}

fn parse_args(argv: &[String]) -> Result<Args, String> {
    let mut args = Args {
        positional: Vec::new(),
        options: Vec::new(),
        flags: Vec::new(),
    };
    let value_options = [
        "--type", "--rank", "--kinds", "--format", "--out", "--jobs", "--seed", "--level", "--n",
        "--set",
    ];
    let mut it = argv.iter();
    while let Some(arg) = it.next() {
        if value_options.contains(&arg.as_str()) {
            let value = it.next().ok_or_else(|| format!("{} needs a value", arg))?;
            args.options.push((arg.clone(), value.clone()));
        } else if arg == "--t0" {
            args.flags.push(arg.clone());
        } else if arg.starts_with("--") {
            return Err(format!("unknown option {}", arg));
        } else {
            args.positional.push(arg.clone());
        }
    }
    Ok(args)
}

impl Args {
    fn opt(&self, name: &str) -> Option<&str> {
        self.options
            .iter()
            .rev()
            .find(|(k, _)| k == name)
            .map(|(_, v)| v.as_str())
    }

    fn flag(&self, name: &str) -> bool {
        self.flags.iter().any(|f| f == name)
    }
}

fn parse_type(args: &Args) -> Result<RootSystemType, String> {
    let family = args
        .opt("--type")
        .ok_or("missing --type")?
        .chars()
        .next()
        .and_then(Family::from_letter)
        .ok_or("--type must be one of A..G")?;
    let rank: usize = args
        .opt("--rank")
        .ok_or("missing --rank")?
        .parse()
        .map_err(|_| "--rank must be a positive integer")?;
    RootSystemType::new(family, rank).map_err(|e| e.to_string())
}

fn parse_jobs(args: &Args) -> Result<usize, String> {
    match args.opt("--jobs") {
        None => Ok(1),
        Some(v) => v
            .parse::<usize>()
            .ok()
            .filter(|&j| j >= 1)
            .ok_or_else(|| "--jobs must be a positive integer".to_string()),
    }
}

fn parse_seed(args: &Args) -> Result<u64, String> {
    match args.opt("--seed") {
        None => Ok(0),
        Some(v) => v
            .parse()
            .map_err(|_| "--seed must be an integer".to_string()),
    }
}

fn cmd_classify(args: &Args) -> ExitCode {
    let rtype = match parse_type(args) {
        Ok(t) => t,
        Err(e) => return usage_error(&e),
    };
    let jobs = match parse_jobs(args) {
        Ok(j) => j,
        Err(e) => return usage_error(&e),
    };
    if let Err(e) = parse_seed(args) {
        return usage_error(&e);
    }
    let kinds: Vec<ClassKind> = match args.opt("--kinds") {
        None => vec![ClassKind::Special, ClassKind::Mixed, ClassKind::Symmetric],
        Some(spec) => {
            let mut kinds = Vec::new();
            for part in spec.split(',') {
                match part.trim() {
                    "special" => kinds.push(ClassKind::Special),
                    "mixed" => kinds.push(ClassKind::Mixed),
                    "symmetric" => kinds.push(ClassKind::Symmetric),
                    other => return usage_error(&format!("unknown kind '{}'", other)),
                }
            }
            kinds
        }
    };
    let format = args.opt("--format").unwrap_or("jsonl");
    if format != "jsonl" && format != "csv" {
        return usage_error("--format must be jsonl or csv");
    }

    let rs = Arc::new(RootSystem::build(rtype));
    let wa = WeylAction::new(rs.clone());
    let result = match classify_all(&wa, jobs) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {}", e);
            return ExitCode::from(2);
        }
    };

    let selected = |kind: ClassKind| kinds.contains(&kind);
    let shown = rootclosed::enumerate::Counts {
        special: if selected(ClassKind::Special) {
            result.counts.special
        } else {
            0
        },
        mixed: if selected(ClassKind::Mixed) {
            result.counts.mixed
        } else {
            0
        },
        symmetric: if selected(ClassKind::Symmetric) {
            result.counts.symmetric
        } else {
            0
        },
        total: 0,
    };
    let shown = rootclosed::enumerate::Counts {
        total: shown.special + shown.mixed + shown.symmetric,
        ..shown
    };

    let payload = if format == "csv" {
        write_counts_csv(&rtype.to_string(), &shown)
    } else {
        write_jsonl(&to_export_records(&rs, &result, &kinds))
    };
    match args.opt("--out") {
        Some(path) => {
            if let Err(e) = std::fs::write(path, payload) {
                eprintln!("error: cannot write {}: {}", path, e);
                return ExitCode::from(3);
            }
        }
        None => print!("{}", payload),
    }
    println!(
        "special={} mixed={} symmetric={} total={} elapsed_ms={}",
        shown.special,
        shown.mixed,
        shown.symmetric,
        shown.total,
        result.elapsed.as_millis()
    );
    ExitCode::SUCCESS
}

fn cmd_verify(args: &Args) -> ExitCode {
    let level = match VerifyLevel::parse(args.opt("--level").unwrap_or("fast")) {
        Some(l) => l,
        None => return usage_error("--level must be fast, full or extended"),
    };
    let jobs = match parse_jobs(args) {
        Ok(j) => j,
        Err(e) => return usage_error(&e),
    };
    let seed = match parse_seed(args) {
        Ok(s) => s,
        Err(e) => return usage_error(&e),
    };
    let report = run_verify(level, jobs, seed);
    print!("{}", report);
    println!(
        "verify: {} in {} ms",
        if report.all_ok {
            "all checks passed"
        } else {
            "MISMATCH"
        },
        report.elapsed.as_millis()
    );
    if report.all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_topo(args: &Args) -> ExitCode {
    let n: usize = match args.opt("--n").and_then(|v| v.parse().ok()) {
        Some(n) => n,
        None => return usage_error("topo needs --n N"),
    };
    let t0 = args.flag("--t0");
    let labeled = match topology::count_labeled(n, t0, 6) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {}", e);
            return ExitCode::from(2);
        }
    };
    let classes = match topology::count_classes(n, t0, 6) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {}", e);
            return ExitCode::from(2);
        }
    };
    println!("labeled={} classes={}", labeled, classes);
    ExitCode::SUCCESS
}

fn cmd_stabilizer(args: &Args) -> ExitCode {
    let rtype = match parse_type(args) {
        Ok(t) => t,
        Err(e) => return usage_error(&e),
    };
    let Some(spec) = args.opt("--set") else {
        return usage_error("stabilizer needs --set \"...\"");
    };
    let rs = Arc::new(RootSystem::build(rtype));
    let wa = WeylAction::new(rs.clone());
    let set = match setspec::parse_set(&rs, spec) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {}", e);
            return ExitCode::from(2);
        }
    };
    if let Some(v) = rootclosed::closed::closure_violation(&rs, set) {
        eprintln!(
            "error: set is not closed: {} + {} = {} is missing",
            setspec::format_root(&rs, v.i),
            setspec::format_root(&rs, v.j),
            setspec::format_root(&rs, v.sum)
        );
        return ExitCode::from(2);
    }
    let stab = wa.stabilizer_of_closed_set(set);
    println!("set: {}", setspec::format_set(&rs, set));
    println!("stabilizer order: {}", stab.order());
    for g in stab.gens() {
        let word = wa
            .word(g)
            .map(|w| {
                if w.is_empty() {
                    "1".to_string()
                } else {
                    w.iter()
                        .map(|j| format!("s{}", j + 1))
                        .collect::<Vec<_>>()
                        .join(" ")
                }
            })
            .unwrap_or_else(|| "<not a Weyl word>".to_string());
        println!("generator: {}  images: {:?}", word, g.images());
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let Some(command) = argv.first() else {
        return usage_error("missing command");
    };
    let args = match parse_args(&argv[1..]) {
        Ok(a) => a,
        Err(e) => return usage_error(&e),
    };
    if !args.positional.is_empty() {
        return usage_error(&format!("unexpected argument '{}'", args.positional[0]));
    }
    match command.as_str() {
        "classify" => cmd_classify(&args),
        "verify" => cmd_verify(&args),
        "topo" => cmd_topo(&args),
        "stabilizer" => cmd_stabilizer(&args),
        "help" | "--help" | "-h" => {
            println!("{}", USAGE);
            ExitCode::SUCCESS
        }
        other => usage_error(&format!("unknown command '{}'", other)),
    }
}
