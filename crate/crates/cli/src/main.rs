use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use schurpos::config::{OutputFormat, RunConfig, DEFAULT_CHECKPOINT_EVERY, DEFAULT_MAX_TOTAL_SIZE};
use schurpos::jacobi_trudi::{
    exploded_jt, h_gamma_rows, minor_to_schur, plucker_terms, MinorSelection,
};
use schurpos::lr::{enumerate_lr_fillings, lr_coefficient};
use schurpos::poset::{
    build_dealings, build_pn, canonical_dealing_map, find_isomorphism, is_weak_subposet,
    maximum_element, Poset,
};
use schurpos::schur::{multiply, multiply_skew, schur_product};
use schurpos::tilde::{skew_tilde, tilde_m, tilde_pair, SkewPair};
use schurpos::verify::{
    verify_fflp, verify_h_criterion, verify_mtilde, verify_skew, verify_skew_lemmas,
    verify_specialcase, verify_stembridge, verify_support_containment, SweepReport,
};
use schurpos::{Error, Partition, SchurVector, SkewShape};

#[derive(Parser)]
#[command(
    name = "schurpos",
    version,
    about = "Schur-positivity of products of Schur functions",
    after_help = "Environment:\n  SCHURPOS_MEMO_CAP  maximum number of Schur terms kept in the product memo"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Littlewood-Richardson coefficient c^{outer}_{inner, content}.
    Lrcoef {
        #[arg(long)]
        outer: Partition,
        #[arg(long, default_value = "")]
        inner: Partition,
        #[arg(long)]
        content: Partition,
        /// Print every LR filling with its reading word.
        #[arg(long)]
        list_fillings: bool,
        #[arg(long)]
        json: bool,
    },
    /// Schur expansion of s_a s_b. Skew shapes are written outer/inner.
    Product {
        #[arg(long)]
        a: SkewShape,
        #[arg(long)]
        b: SkewShape,
        #[arg(long)]
        json: bool,
    },
    /// Deal the parts of a pair or tuple of partitions.
    Tilde(TildeArgs),
    /// Exhaustive verification sweeps.
    Verify(VerifyArgs),
    /// Posets of pairs ordered by Schur-positivity of product differences.
    Poset {
        #[command(subcommand)]
        command: PosetCommand,
    },
    /// Determinant of the Jacobi-Trudi matrix with h_n replaced by s_{(n^k)}.
    ExplodedJt {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        k: usize,
        /// Matrix size; defaults to the length of mu.
        #[arg(long)]
        p: Option<usize>,
        /// Exit with status 1 unless the result is Schur-positive.
        #[arg(long)]
        check_positive: bool,
        #[arg(long)]
        json: bool,
    },
    /// Terms of the Plücker relation [1..p][p+1..2p] exchanging the rows in c.
    PluckerDemo {
        #[arg(long)]
        p: usize,
        /// 1-based rows of the first minor to exchange, comma separated.
        #[arg(long, value_delimiter = ',')]
        c: Vec<usize>,
        /// Evaluate the relation on the matrix H_gamma.
        #[arg(long)]
        gamma: Option<Partition>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct TildeArgs {
    #[arg(long, requires = "nu", conflicts_with = "parts")]
    mu: Option<String>,
    #[arg(long)]
    nu: Option<String>,
    /// Treat mu and nu as skew shapes outer/inner.
    #[arg(long)]
    skew: bool,
    /// Partitions separated by ';', dealt round-robin.
    #[arg(long)]
    parts: Option<String>,
    /// Expected number of partitions in --parts.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyKind {
    Fflp,
    Skew,
    Mtilde,
    Stembridge,
    Support,
    Specialcase,
    SkewLemmas,
    HCriterion,
}

#[derive(Args)]
struct VerifyArgs {
    kind: VerifyKind,
    #[arg(long)]
    bound: usize,
    /// Restrict skew sweeps to minimal pairs.
    #[arg(long)]
    minimal: bool,
    /// Tuple size for mtilde.
    #[arg(long, default_value_t = 3)]
    m: usize,
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_MAX_TOTAL_SIZE)]
    max_total_size: usize,
    /// Resume from and record progress in this file.
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_CHECKPOINT_EVERY)]
    checkpoint_every: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CompareMode {
    Iso,
    WeakSubposet,
}

#[derive(Subcommand)]
enum PosetCommand {
    /// All pairs with |mu| + |nu| = n.
    Pn {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: PosetOutput,
    },
    /// All dealings of the parts of gamma.
    Dealings {
        #[arg(long)]
        gamma: Partition,
        /// Exit with status 1 unless the dealt pair is the maximum.
        #[arg(long)]
        check_max: bool,
        #[command(flatten)]
        out: PosetOutput,
    },
    /// Compare P(gamma1) with P(gamma2).
    Compare {
        #[arg(long)]
        gamma1: Partition,
        #[arg(long)]
        gamma2: Partition,
        #[arg(long, value_enum, default_value = "iso")]
        mode: CompareMode,
    },
}

#[derive(Args)]
struct PosetOutput {
    /// Write the Hasse diagram in DOT to this file ('-' for stdout).
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Write elements and relations as JSON to this file ('-' for stdout).
    #[arg(long)]
    json: Option<PathBuf>,
}

enum Failure {
    /// The checked statement is false.
    Refuted,
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn print_json(v: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(v).expect("JSON value serializes")
    );
}

fn refuted_unless(ok: bool) -> CmdResult {
    if ok {
        Ok(())
    } else {
        Err(Failure::Refuted)
    }
}

fn cmd_lrcoef(
    outer: Partition,
    inner: Partition,
    content: Partition,
    list: bool,
    json: bool,
) -> CmdResult {
    let shape = SkewShape::new(outer.clone(), inner.clone())?;
    let fillings = enumerate_lr_fillings(&shape, &content)?;
    let c = lr_coefficient(&outer, &inner, &content);
    let words: Vec<String> = fillings
        .iter()
        .map(|f| f.reading_word().iter().map(|x| x.to_string()).collect())
        .collect();
    if json {
        let mut v = json!({
            "outer": outer, "inner": inner, "content": content, "coefficient": c,
        });
        if list {
            v["fillings"] = json!(fillings
                .iter()
                .zip(&words)
                .map(|(f, w)| json!({"rows": f.rows, "reading_word": w}))
                .collect::<Vec<_>>());
        }
        print_json(&v);
    } else {
        println!("c^{{{outer}}}_{{{inner}; {content}}} = {c}");
        if list {
            for (f, w) in fillings.iter().zip(&words) {
                let rows: Vec<String> = f
                    .rows
                    .iter()
                    .map(|r| r.iter().map(|x| x.to_string()).collect())
                    .collect();
                println!("  {w}  rows (bottom up): {}", rows.join(" / "));
            }
        }
    }
    Ok(())
}

fn cmd_product(a: SkewShape, b: SkewShape, json: bool) -> CmdResult {
    let prod = if a.inner().is_empty() && b.inner().is_empty() {
        schur_product(a.outer(), b.outer())
    } else {
        multiply_skew(&a, &b)
    };
    if json {
        print_json(&json!({"a": a.to_string(), "b": b.to_string(), "product": prod}));
    } else {
        println!("{prod}");
    }
    Ok(())
}

fn parse_partition(s: &str) -> Result<Partition, Failure> {
    Ok(s.parse::<Partition>()?)
}

fn parse_skew(s: &str) -> Result<SkewShape, Failure> {
    Ok(s.parse::<SkewShape>()?)
}

fn cmd_tilde(args: TildeArgs) -> CmdResult {
    if let Some(parts) = &args.parts {
        let mus = parts
            .split(';')
            .map(parse_partition)
            .collect::<Result<Vec<_>, _>>()?;
        let m = args.m.unwrap_or(mus.len());
        let dealt = tilde_m(&mus, m)?;
        let before = mus.iter().try_fold(SchurVector::one(), |acc, p| {
            multiply(&acc, &SchurVector::schur(p.clone()))
        })?;
        let after = dealt.iter().try_fold(SchurVector::one(), |acc, p| {
            multiply(&acc, &SchurVector::schur(p.clone()))
        })?;
        let diff = after.checked_sub(&before)?;
        if args.json {
            print_json(&json!({"input": mus, "dealt": dealt, "difference": diff}));
        } else {
            let shown: Vec<String> = dealt.iter().map(|p| format!("({p})")).collect();
            println!("{}", shown.join(" "));
            println!("difference: {diff}");
        }
        return Ok(());
    }
    let (Some(mu), Some(nu)) = (&args.mu, &args.nu) else {
        return Err(Failure::Usage("give --mu and --nu, or --parts".into()));
    };
    if args.skew {
        let p = SkewPair::new(parse_skew(mu)?, parse_skew(nu)?);
        let q = skew_tilde(&p);
        let diff =
            multiply_skew(&q.first, &q.second).checked_sub(&multiply_skew(&p.first, &p.second))?;
        if args.json {
            print_json(&json!({
                "input": [p.first.to_string(), p.second.to_string()],
                "dealt": [q.first.to_string(), q.second.to_string()],
                "difference": diff,
            }));
        } else {
            println!("{q}");
            println!("difference: {diff}");
        }
    } else {
        let (mu, nu) = (parse_partition(mu)?, parse_partition(nu)?);
        let (l, r) = tilde_pair(&mu, &nu);
        let diff = schur_product(&l, &r).checked_sub(&schur_product(&mu, &nu))?;
        if args.json {
            print_json(&json!({"input": [mu, nu], "dealt": [l, r], "difference": diff}));
        } else {
            println!("({l}) ({r})");
            println!("difference: {diff}");
        }
    }
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> CmdResult {
    let cfg = RunConfig {
        max_total_size: args.max_total_size,
        worker_count: args
            .workers
            .unwrap_or_else(|| RunConfig::default().worker_count),
        output_format: if args.json {
            OutputFormat::Json
        } else {
            OutputFormat::Text
        },
        seed: args.seed,
        checkpoint: args.checkpoint,
        checkpoint_every: args.checkpoint_every,
    };
    cfg.validate()?;
    let report: SweepReport = match args.kind {
        VerifyKind::Fflp => verify_fflp(args.bound, &cfg)?,
        VerifyKind::Skew => verify_skew(args.bound, args.minimal, &cfg)?,
        VerifyKind::Mtilde => verify_mtilde(args.bound, args.m, &cfg)?,
        VerifyKind::Stembridge => verify_stembridge(args.bound, &cfg)?,
        VerifyKind::Support => verify_support_containment(args.bound, &cfg)?,
        VerifyKind::Specialcase => verify_specialcase(args.bound, &cfg)?,
        VerifyKind::SkewLemmas => verify_skew_lemmas(args.bound, &cfg)?,
        VerifyKind::HCriterion => verify_h_criterion(args.bound, &cfg)?,
    };
    match cfg.output_format {
        OutputFormat::Json => {
            print_json(&serde_json::to_value(&report).expect("report serializes"))
        }
        _ => println!("{report}"),
    }
    refuted_unless(report.passed())
}

fn write_output(path: &PathBuf, body: &str) -> CmdResult {
    if path.as_os_str() == "-" {
        print!("{body}");
        if !body.ends_with('\n') {
            println!();
        }
        Ok(())
    } else {
        std::fs::write(path, body).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
    }
}

fn emit_poset(p: &Poset, out: &PosetOutput) -> CmdResult {
    if let Some(path) = &out.dot {
        write_output(path, &p.export_dot())?;
    }
    if let Some(path) = &out.json {
        write_output(path, &p.export_json())?;
    }
    Ok(())
}

fn describe(p: &Poset) -> String {
    format!(
        "{} elements, {} relations, {} covers",
        p.len(),
        p.relations().len(),
        p.covers().len()
    )
}

fn to_stdout(out: &PosetOutput) -> bool {
    [&out.dot, &out.json]
        .iter()
        .any(|o| o.as_ref().is_some_and(|p| p.as_os_str() == "-"))
}

fn cmd_poset(cmd: PosetCommand) -> CmdResult {
    match cmd {
        PosetCommand::Pn { n, out } => {
            let p = build_pn(n)?;
            if !to_stdout(&out) {
                println!("P_{n}: {}", describe(&p));
            }
            emit_poset(&p, &out)
        }
        PosetCommand::Dealings {
            gamma,
            check_max,
            out,
        } => {
            let p = build_dealings(&gamma)?;
            let max = maximum_element(&p).cloned();
            if !to_stdout(&out) {
                println!("P({gamma}): {}", describe(&p));
                match &max {
                    Some(m) => println!("maximum: {m}"),
                    None => println!("no maximum"),
                }
            }
            emit_poset(&p, &out)?;
            if check_max {
                let (l, r) = tilde_pair(&gamma, &Partition::empty());
                let expected = schurpos::poset::PairElement::new(l, r);
                return refuted_unless(max.as_ref() == Some(&expected));
            }
            Ok(())
        }
        PosetCommand::Compare {
            gamma1,
            gamma2,
            mode,
        } => {
            let p = build_dealings(&gamma1)?;
            let q = build_dealings(&gamma2)?;
            let holds = match mode {
                CompareMode::Iso => find_isomorphism(&p, &q).is_some(),
                CompareMode::WeakSubposet => {
                    let map = canonical_dealing_map(&gamma1, &gamma2, &p, &q)?;
                    is_weak_subposet(&p, &q, &map)?
                }
            };
            let what = match mode {
                CompareMode::Iso => "isomorphic to",
                CompareMode::WeakSubposet => "a weak subposet of",
            };
            println!(
                "P({gamma1}) is {}{what} P({gamma2})",
                if holds { "" } else { "not " }
            );
            refuted_unless(holds)
        }
    }
}

fn cmd_exploded(mu: Partition, k: usize, p: Option<usize>, check: bool, json: bool) -> CmdResult {
    let p = p.unwrap_or(mu.len().max(1));
    let det = exploded_jt(&mu, k, p)?;
    let positive = det.is_schur_positive();
    if json {
        print_json(&json!({
            "mu": mu, "k": k, "p": p, "determinant": det,
            "schur_positive": positive, "negative_terms": det.negative_terms(),
        }));
    } else {
        println!("{det}");
        println!("schur-positive: {positive}");
    }
    if check {
        refuted_unless(positive)
    } else {
        Ok(())
    }
}

fn cmd_plucker(p: usize, c: Vec<usize>, gamma: Option<Partition>, json: bool) -> CmdResult {
    let terms = plucker_terms(p, &c)?;
    let a = MinorSelection::new((1..=p).collect());
    let b = MinorSelection::new((p + 1..=2 * p).collect());
    let shown: Vec<String> = terms.iter().map(|(l, r)| format!("{l}{r}")).collect();
    let mut evaluated = None;
    if let Some(g) = &gamma {
        let specs = h_gamma_rows(g, p)?;
        let lhs = multiply(&minor_to_schur(&a, &specs), &minor_to_schur(&b, &specs))?;
        let mut rhs = SchurVector::zero();
        for (l, r) in &terms {
            rhs = rhs.checked_add(&multiply(
                &minor_to_schur(l, &specs),
                &minor_to_schur(r, &specs),
            )?)?;
        }
        evaluated = Some((lhs, rhs));
    }
    if json {
        let mut v = json!({"lhs": format!("{a}{b}"), "terms": shown});
        if let Some((lhs, rhs)) = &evaluated {
            v["gamma"] = json!(gamma);
            v["lhs_value"] = json!(lhs);
            v["rhs_value"] = json!(rhs);
            v["holds"] = json!(lhs == rhs);
        }
        print_json(&v);
    } else {
        println!("{a}{b} = {}", shown.join(" + "));
        if let Some((lhs, rhs)) = &evaluated {
            println!("lhs: {lhs}");
            println!("rhs: {rhs}");
        }
    }
    match evaluated {
        Some((lhs, rhs)) => refuted_unless(lhs == rhs),
        None => Ok(()),
    }
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Lrcoef {
            outer,
            inner,
            content,
            list_fillings,
            json,
        } => cmd_lrcoef(outer, inner, content, list_fillings, json),
        Command::Product { a, b, json } => cmd_product(a, b, json),
        Command::Tilde(args) => cmd_tilde(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Poset { command } => cmd_poset(command),
        Command::ExplodedJt {
            mu,
            k,
            p,
            check_positive,
            json,
        } => cmd_exploded(mu, k, p, check_positive, json),
        Command::PluckerDemo { p, c, gamma, json } => cmd_plucker(p, c, gamma, json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Refuted) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
