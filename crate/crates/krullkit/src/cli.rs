//! The `krullkit` command line. [`run`] is the whole program minus process
//! plumbing, so tests drive it in-process.
//!
//! Exit codes: 0 success, 2 a check failed (counterexample on stdout),
//! 64 usage error, 65 malformed input data, 66 input beyond an exhaustive
//! bound.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use krullkit_core::cardinal::{self, AxiomMode, CardValue, RingKind};
use krullkit_core::chains::{self, DedMode, SubsetChain};
use krullkit_core::lexgroup::{self, LexGroup};
use krullkit_core::order::{FinitePoset, SymbolicChain};
use krullkit_core::spectra::{self, Multiplicity};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::formats::{self, ChainFile, DenseOrderFile, PosetFile, TableFile};
use crate::notation::{self, ParseError};

pub const DEFAULT_SEED: u64 = 1729;
pub const SEED_ENV: &str = "KRULLKIT_SEED";
pub const DEFAULT_TRIALS: usize = 10_000;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_TOO_LARGE: i32 = 66;

#[derive(Debug, Parser)]
#[command(name = "krullkit", version, about = "Order theory and cardinal Krull dimension toolkit")]
struct Cli {
    /// Seed for randomized checks; overrides KRULLKIT_SEED.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Trials per randomized check.
    #[arg(long, global = true)]
    trials: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Lexicographic groups, ranks and tree groups.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Chains of subsets and their dense-order counterparts.
    #[command(subcommand)]
    Chain(ChainCmd),
    /// The graph E_P, the completion of P and the spectrum of L_K(E_P).
    #[command(subcommand)]
    Spec(SpecCmd),
    /// Cardinal arithmetic and ring realizability.
    #[command(subcommand)]
    Card(CardCmd),
    /// Symbolic countable chains.
    #[command(subcommand)]
    Order(OrderCmd),
}

#[derive(Debug, Subcommand)]
enum GroupCmd {
    /// Order type of the nontrivial isolated subgroups.
    Rank {
        group: String,
        #[arg(long)]
        json: bool,
    },
    /// Tree group of depth N with its leaf subgroups.
    Tree {
        depth: usize,
        /// List every leaf with its subgroup.
        #[arg(long)]
        leaves: bool,
    },
    /// Prime spectrum of a valuation ring with this value group.
    Spectrum { group: String },
    /// Rank of a lexicographic sum against the reversed concatenation.
    CheckConcat {
        #[arg(required = true)]
        groups: Vec<String>,
    },
}

#[derive(Debug, Subcommand)]
enum ChainCmd {
    /// The induced strict order on the ground set.
    Corder { file: String },
    /// A maximal separated subset, checked.
    Separate {
        file: String,
        /// Comma-separated ground labels giving the greedy order.
        #[arg(long)]
        hint: Option<String>,
    },
    /// Cuts of S' x Q with betweenness witnesses.
    ToDense {
        file: String,
        /// Comma-separated rationals used as seg positions.
        #[arg(long, allow_hyphen_values = true)]
        probes: Option<String>,
    },
    /// The chain of initial dense parts of a finite linear order.
    ToChain { file: String },
    /// Longest chain of subsets of an N-element set.
    Ded {
        n: usize,
        #[arg(long, value_enum, default_value_t = DedModeArg::Exhaustive)]
        mode: DedModeArg,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DedModeArg {
    Exhaustive,
    Witness,
}

#[derive(Debug, Subcommand)]
enum SpecCmd {
    /// The graph E_P.
    Ep {
        poset: String,
        /// Edges per strict pair: a positive integer or `omega`.
        #[arg(long, default_value = "omega")]
        mult: String,
        #[arg(long)]
        dot: bool,
    },
    /// The completion of P.
    At {
        target: String,
        /// Required for infinite chains: compute on finitely described
        /// subsets only.
        #[arg(long)]
        fragment: bool,
        #[arg(long, allow_hyphen_values = true)]
        probes: Option<String>,
    },
    /// The completion read as the prime spectrum of L_K(E_P).
    Spectrum {
        target: String,
        #[arg(long)]
        fragment: bool,
        #[arg(long, allow_hyphen_values = true)]
        probes: Option<String>,
    },
    /// Disjoint union of chains: comma-separated lengths, or a cardinal for
    /// all well-orders below it.
    Berry { family: String },
    /// Size and dimensions of L_K(E_P) for a chain P.
    LpaDims {
        chain: String,
        #[arg(long, default_value = "aleph(0)")]
        field: String,
        #[command(flatten)]
        mode: ModeArgs,
    },
}

#[derive(Debug, Args)]
struct ModeArgs {
    #[arg(long, value_enum, default_value_t = AxiomsArg::Table)]
    axioms: AxiomsArg,
    /// Continuum table as JSON; implies `--axioms table`.
    #[arg(long)]
    table: Option<String>,
    #[arg(long, value_enum)]
    preset: Option<PresetArg>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AxiomsArg {
    Gch,
    Table,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PresetArg {
    Cohen,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Any,
    Valuation,
}

#[derive(Debug, Subcommand)]
enum CardCmd {
    /// Is there a ring of size K with strong dimension L?
    Exists {
        k: String,
        l: String,
        #[arg(long, value_enum, default_value_t = KindArg::Any)]
        kind: KindArg,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Bounds on ded(K).
    Ded {
        k: String,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Cofinality.
    Cf { k: String },
    /// The value of 2^K.
    Exp2 {
        k: String,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Regularity, PSL and strong limit.
    Predicates {
        k: String,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Size and dimensions of a described ring.
    Catalog {
        descriptor: String,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// The strong limit sup of K, 2^K, 2^2^K, ...
    Tower {
        base: String,
        #[arg(long, default_value_t = 4)]
        steps: usize,
    },
    /// Primes <X_i | i in cut> of a polynomial ring over Q-indexed variables.
    WitnessPoly {
        #[arg(required = true, allow_hyphen_values = true)]
        cuts: Vec<String>,
    },
}

#[derive(Debug, Subcommand)]
enum OrderCmd {
    Reverse {
        chain: String,
    },
    Concat {
        #[arg(required = true)]
        chains: Vec<String>,
    },
    Normalize {
        chain: String,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Data(String),
    TooLarge(String),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Usage(e.to_string())
    }
}

struct Ctx {
    seed: u64,
    trials: usize,
    out: String,
    code: i32,
}

impl Ctx {
    fn line(&mut self, s: impl AsRef<str>) {
        self.out.push_str(s.as_ref());
        self.out.push('\n');
    }

    fn json(&mut self, v: &Value) {
        let s = serde_json::to_string_pretty(v).expect("values serialize");
        self.line(s);
    }

    fn fail_check(&mut self) {
        self.code = EXIT_CHECK;
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, env_seed: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text },
            };
        }
    };
    let seed = match (cli.seed, env_seed) {
        (Some(s), _) => s,
        (None, Some(e)) => match e.trim().parse() {
            Ok(s) => s,
            Err(_) => {
                return Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: format!("error: {SEED_ENV} is not an integer\n"),
                }
            }
        },
        (None, None) => DEFAULT_SEED,
    };
    let mut ctx = Ctx { seed, trials: cli.trials.unwrap_or(DEFAULT_TRIALS), out: String::new(), code: EXIT_OK };
    let res = match cli.command {
        Command::Group(c) => run_group(&mut ctx, c),
        Command::Chain(c) => run_chain(&mut ctx, c),
        Command::Spec(c) => run_spec(&mut ctx, c),
        Command::Card(c) => run_card(&mut ctx, c),
        Command::Order(c) => run_order(&mut ctx, c),
    };
    match res {
        Ok(()) => Outcome { code: ctx.code, stdout: ctx.out, stderr: String::new() },
        Err(f) => {
            let (code, msg) = match f {
                Failure::Usage(m) => (EXIT_USAGE, m),
                Failure::Data(m) => (EXIT_DATA, m),
                Failure::TooLarge(m) => (EXIT_TOO_LARGE, m),
            };
            Outcome { code, stdout: ctx.out, stderr: format!("error: {msg}\n") }
        }
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).map_err(|e| Failure::Usage(e.to_string()))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &str) -> Result<T, Failure> {
    let text = read_input(path)?;
    serde_json::from_str(&text).map_err(|e| Failure::Data(format!("{path}: {e}")))
}

fn load_chain(path: &str) -> Result<SubsetChain, Failure> {
    let f: ChainFile = read_json(path)?;
    SubsetChain::from_labels(f.ground, &f.links).map_err(|e| Failure::Data(e.to_string()))
}

fn group_name(g: &LexGroup) -> String {
    let base = match g.convention() {
        lexgroup::Significance::LeastIndex => "zlex",
        lexgroup::Significance::GreatestIndex => "zrevlex",
    };
    format!("{base}({})", g.rank_len())
}

fn run_group(ctx: &mut Ctx, cmd: GroupCmd) -> Result<(), Failure> {
    match cmd {
        GroupCmd::Rank { group, json } => {
            let g = notation::parse_group(&group)?;
            let rank = g.rank();
            let ty = SymbolicChain::Fin(rank.len() as u64);
            if json {
                ctx.json(&json!({
                    "group": group_name(&g),
                    "rank": ty.to_string(),
                    "subgroups": rank.iter().map(|h| g.format_segment(h)).collect::<Vec<_>>(),
                }));
            } else {
                ctx.line(ty.to_string());
            }
        }
        GroupCmd::Tree { depth, leaves } => {
            let tg = lexgroup::tree_group(depth).map_err(|e| Failure::Usage(e.to_string()))?;
            let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
            let distinct = tg.distinct_subgroups().len();
            let monotone = tg.is_monotone();
            ctx.line(format!("depth: {depth}"));
            ctx.line(format!("index size: {}", tg.tree.carrier.len()));
            ctx.line(format!("leaves: {}", tg.leaves.len()));
            let mut failures = Vec::new();
            let mut leaf_lines = Vec::new();
            for (leaf, h) in &tg.leaves {
                let rep = tg
                    .group
                    .is_isolated_sample(h, ctx.trials, lexgroup::SAMPLE_BOUND, &mut rng)
                    .map_err(|e| Failure::Data(e.to_string()))?;
                leaf_lines.push(format!("leaf {leaf}: {}", tg.group.format_segment(h)));
                if let Some((hh, x)) = &rep.counterexample {
                    failures.push(format!(
                        "leaf {leaf}: h = {} x = {} with |x| <= |h| but x outside",
                        tg.group.format_element(hh),
                        tg.group.format_element(x)
                    ));
                }
            }
            if leaves {
                for l in leaf_lines {
                    ctx.line(l);
                }
            }
            ctx.line(format!("distinct segments: {distinct}"));
            ctx.line(format!("monotone: {monotone}"));
            ctx.line(format!("isolation: {} trials per leaf, {} counterexamples", ctx.trials, failures.len()));
            for f in &failures {
                ctx.line(format!("counterexample {f}"));
            }
            let expected = 1usize << (depth - 1);
            if !failures.is_empty() || !monotone || distinct != expected {
                ctx.fail_check();
            }
        }
        GroupCmd::Spectrum { group } => {
            let g = notation::parse_group(&group)?;
            let spec = g.valuation_spectrum();
            let last = spec.len() - 1;
            for (i, p) in spec.iter().enumerate() {
                let role = match i {
                    0 => " (zero ideal)",
                    _ if i == last => " (maximal ideal)",
                    _ => "",
                };
                ctx.line(format!("{}{role} <-> {}", p.name, g.format_segment(&p.subgroup)));
            }
            ctx.line(format!("primes: {}", spec.len()));
            ctx.line(format!("krull dimension: {last}"));
        }
        GroupCmd::CheckConcat { groups } => {
            let gs = groups.iter().map(|s| notation::parse_group(s)).collect::<Result<Vec<_>, _>>()?;
            let report = lexgroup::check_concatenation_theorem(&gs).map_err(|e| Failure::Usage(e.to_string()))?;
            ctx.line(format!("sum: {}", gs.iter().map(group_name).collect::<Vec<_>>().join(" + ")));
            ctx.line(format!("rank(sum): fin({})", report.lhs.len()));
            ctx.line(format!("reversed concatenation of ranks: fin({})", report.rhs.len()));
            ctx.line(format!(
                "natural map: {}",
                if report.natural_map.is_some() { "isomorphism" } else { "not an isomorphism" }
            ));
            ctx.line(format!("holds: {}", report.holds()));
            if !report.holds() {
                ctx.fail_check();
            }
        }
    }
    Ok(())
}

fn run_chain(ctx: &mut Ctx, cmd: ChainCmd) -> Result<(), Failure> {
    match cmd {
        ChainCmd::Corder { file } => {
            let c = load_chain(&file)?;
            let v = formats::corder_json(&c);
            ctx.json(&v);
        }
        ChainCmd::Separate { file, hint } => {
            let c = load_chain(&file)?;
            let sep = match hint {
                None => chains::max_separated_default(&c),
                Some(h) => {
                    let order = h
                        .split(',')
                        .map(|l| {
                            let l = l.trim();
                            c.ground()
                                .iter()
                                .position(|g| g == l)
                                .ok_or_else(|| Failure::Usage(format!("unknown label {l:?}")))
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    chains::max_separated(&c, &order).map_err(|e| Failure::Usage(e.to_string()))?
                }
            };
            let check = chains::verify_separated(&c, &sep);
            ctx.json(&formats::separated_json(&c, &sep, &check));
            if !check.all() {
                ctx.fail_check();
            }
        }
        ChainCmd::ToDense { file, probes } => {
            let c = load_chain(&file)?;
            let probes = match probes {
                Some(p) => notation::parse_rational_list(&p)?,
                None => chains::default_probes(),
            };
            let col = chains::chain_to_dense(&c, &probes).map_err(|e| Failure::Data(e.to_string()))?;
            let rt = chains::round_trip_length(&col);
            ctx.json(&formats::dense_json(&col, rt));
            if rt != c.len() {
                ctx.fail_check();
            }
        }
        ChainCmd::ToChain { file } => {
            let f: DenseOrderFile = read_json(&file)?;
            let b = formats::lin_order_from_file(&f).map_err(Failure::Data)?;
            if let Some(x) = f.dense.iter().find(|x| !b.contains(x)) {
                return Err(Failure::Data(format!("dense element {x:?} not in the order")));
            }
            let r = chains::dense_to_chain(&b, &f.dense, |s| s.clone());
            let mut v = formats::chain_json(&r.chain);
            v["collapsed"] = json!(r.collapsed.iter().map(|&i| &b.elements()[i]).collect::<Vec<_>>());
            ctx.json(&v);
        }
        ChainCmd::Ded { n, mode } => {
            let mode = match mode {
                DedModeArg::Exhaustive => DedMode::Exhaustive,
                DedModeArg::Witness => DedMode::WitnessOnly,
            };
            let r = chains::ded_finite(n, mode).map_err(|e| Failure::TooLarge(e.to_string()))?;
            ctx.json(&formats::ded_json(&r));
        }
    }
    Ok(())
}

enum Target {
    Finite(FinitePoset<String>),
    Symbolic(SymbolicChain),
}

fn parse_target(s: &str) -> Result<Target, Failure> {
    let count = |t: &str| t.parse::<usize>().map_err(|_| Failure::Usage(format!("bad size in {s:?}")));
    if let Some(n) = s.strip_prefix("chain:") {
        return Ok(Target::Finite(FinitePoset::chain(count(n)?)));
    }
    if let Some(n) = s.strip_prefix("antichain:") {
        return Ok(Target::Finite(FinitePoset::antichain(count(n)?)));
    }
    if s.ends_with(".json") || s == "-" {
        let f: PosetFile = read_json(s)?;
        return formats::poset_from_file(f).map(Target::Finite).map_err(Failure::Data);
    }
    match notation::parse_chain(s)? {
        SymbolicChain::Fin(n) => Ok(Target::Finite(FinitePoset::chain(n as usize))),
        c => Ok(Target::Symbolic(c)),
    }
}

fn fragment_positions(c: &SymbolicChain, probes: Option<String>) -> Result<Vec<krullkit_core::Rational>, Failure> {
    let carrier = spectra::Carrier::from_chain(c).map_err(|e| Failure::Usage(e.to_string()))?;
    match probes {
        Some(p) => Ok(notation::parse_rational_list(&p)?),
        None => Ok(carrier.default_positions()),
    }
}

fn fd_label(e: &spectra::FdElem) -> String {
    match e {
        spectra::FdElem::Orig(q) => q.to_string(),
        spectra::FdElem::Cut(s) => format!("x{}", s.inf_key()),
    }
}

fn require_fragment(c: &SymbolicChain, fragment: bool) -> Result<(), Failure> {
    if fragment {
        Ok(())
    } else {
        Err(Failure::Usage(format!("{c} is infinite; pass --fragment to compute on finitely described subsets")))
    }
}

fn spectra_failure(e: spectra::SpectraError) -> Failure {
    match e {
        spectra::SpectraError::TooLarge { .. } => Failure::TooLarge(e.to_string()),
        spectra::SpectraError::UnsupportedCarrier(_) => Failure::Usage(e.to_string()),
        _ => Failure::Data(e.to_string()),
    }
}

fn run_spec(ctx: &mut Ctx, cmd: SpecCmd) -> Result<(), Failure> {
    match cmd {
        SpecCmd::Ep { poset, mult, dot } => {
            let Target::Finite(p) = parse_target(&poset)? else {
                return Err(Failure::Usage("E_P needs a finite poset".into()));
            };
            let m = if mult == "omega" {
                Multiplicity::CountablyInfinite
            } else {
                let k = mult.parse::<u64>().map_err(|_| Failure::Usage(format!("bad multiplicity {mult:?}")))?;
                Multiplicity::finite(k).map_err(|e| Failure::Usage(e.to_string()))?
            };
            let g = spectra::build_ep(&p, m);
            if dot {
                ctx.out.push_str(&spectra::export_dot(&g));
            } else {
                let v = formats::graph_json(&g, spectra::count_paths(&g));
                ctx.json(&v);
            }
        }
        SpecCmd::At { target, fragment, probes } => match parse_target(&target)? {
            Target::Finite(p) => {
                let at = spectra::at_finite(&p).map_err(spectra_failure)?;
                ctx.json(&formats::at_json(&at, None, None));
            }
            Target::Symbolic(c) => {
                require_fragment(&c, fragment)?;
                let pos = fragment_positions(&c, probes)?;
                let fd = spectra::at_fd(&c, &pos).map_err(spectra_failure)?;
                let card = match fd.carrier {
                    spectra::Carrier::Rats => "2^aleph(0)",
                    _ => "aleph(0)",
                };
                let mut v = formats::at_json(&fd.at, Some(card), fd.incompleteness());
                let inj = spectra::dense_cor_injection(&fd).map_err(spectra_failure)?;
                v["injection"] = json!({
                    "images": inj.iter().map(|e| json!({"cut": fd_label(&fd.elements[e.cut]), "image": e.image.to_string()})).collect::<Vec<_>>(),
                    "injective": spectra::is_injective(&inj),
                });
                ctx.json(&v);
            }
        },
        SpecCmd::Spectrum { target, fragment, probes } => {
            let spec = match parse_target(&target)? {
                Target::Finite(p) => spectra::spectrum_finite(&p).map_err(spectra_failure)?,
                Target::Symbolic(c) => {
                    require_fragment(&c, fragment)?;
                    let pos = fragment_positions(&c, probes)?;
                    spectra::spectrum_fd(&c, &pos).map_err(spectra_failure)?
                }
            };
            let mut v = formats::at_json(&spec.at, spec.cardinality, None);
            v["primes"] = json!(spec.primes);
            v["krull_dimension"] = json!(spectra::longest_chain(&spec.at).saturating_sub(1));
            if let Some(l) = spec.linear {
                v["chain_input_linear_spectrum"] = json!(l);
                if !l {
                    ctx.fail_check();
                }
            }
            ctx.json(&v);
        }
        SpecCmd::Berry { family } => {
            if let Ok(k) = notation::parse_cardinal(&family) {
                if k.is_infinite() {
                    let e = cardinal::berry_symbolic(&k).map_err(|e| Failure::Usage(e.to_string()))?;
                    ctx.json(&formats::catalog_json(&format!("berry({k})"), &AxiomMode::table_empty(), &e));
                    return Ok(());
                }
            }
            let lengths = family
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| Failure::Usage(format!("bad length list {family:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            let r = spectra::berry_family(&lengths).map_err(spectra_failure)?;
            ctx.json(&json!({
                "lengths": lengths,
                "elements": r.poset.len(),
                "completion_equals_poset": r.at_is_p,
                "cuts": r.at.cuts.len(),
                "max_chain": r.max_chain,
                "attained": true,
            }));
            if !r.at_is_p {
                ctx.fail_check();
            }
        }
        SpecCmd::LpaDims { chain, field, mode } => {
            let c = notation::parse_chain(&chain)?;
            let f = notation::parse_cardinal(&field)?;
            let mode = load_mode(&mode)?;
            let desc = cardinal::RingDescriptor::LpaFromChain { chain: c.clone(), field: f.clone() };
            let e = cardinal::catalog(&desc, &mode).map_err(card_failure)?;
            ctx.json(&formats::catalog_json(&format!("lpa({c}, {f})"), &mode, &e));
        }
    }
    Ok(())
}

fn load_mode(m: &ModeArgs) -> Result<AxiomMode, Failure> {
    let mode = match (m.axioms, &m.table, m.preset) {
        (AxiomsArg::Gch, None, None) => AxiomMode::Gch,
        (AxiomsArg::Gch, _, _) => return Err(Failure::Usage("--table and --preset need --axioms table".into())),
        (AxiomsArg::Table, Some(_), Some(_)) => return Err(Failure::Usage("give either --table or --preset".into())),
        (AxiomsArg::Table, Some(path), None) => {
            let f: TableFile = read_json(path)?;
            f.into_mode().map_err(|e| Failure::Data(e.to_string()))?
        }
        (AxiomsArg::Table, None, Some(PresetArg::Cohen)) => AxiomMode::cohen(),
        (AxiomsArg::Table, None, None) => AxiomMode::table_empty(),
    };
    mode.validate().map_err(|e| Failure::Data(e.to_string()))?;
    Ok(mode)
}

fn card_failure(e: cardinal::CardError) -> Failure {
    match e {
        cardinal::CardError::InconsistentTable(_) => Failure::Data(e.to_string()),
        _ => Failure::Usage(e.to_string()),
    }
}

fn value_text(v: &CardValue) -> String {
    match v {
        CardValue::Exact(c) => c.to_string(),
        CardValue::Pow2 { .. } => format!("{v} in {}", v.bounds_text()),
    }
}

fn run_card(ctx: &mut Ctx, cmd: CardCmd) -> Result<(), Failure> {
    match cmd {
        CardCmd::Exists { k, l, kind, mode } => {
            let k = notation::parse_cardinal(&k)?;
            let l = notation::parse_term(&l)?;
            let mode = load_mode(&mode)?;
            let kind = match kind {
                KindArg::Any => RingKind::Any,
                KindArg::Valuation => RingKind::Valuation,
            };
            let v = cardinal::exists_ring(&k, &l, &mode, kind).map_err(card_failure)?;
            let mut out = formats::verdict_json(&v);
            out["kappa"] = json!(k.to_string());
            out["lambda"] = json!(l.to_string());
            out["axioms"] = json!(mode.name());
            ctx.json(&out);
        }
        CardCmd::Ded { k, mode } => {
            let kc = notation::parse_cardinal(&k)?;
            let mode = load_mode(&mode)?;
            let d = cardinal::ded_bounds(&kc, &mode).map_err(card_failure)?;
            let mut v = formats::ded_bounds_json(&kc.to_string(), &d);
            v["axioms"] = json!(mode.name());
            ctx.json(&v);
        }
        CardCmd::Cf { k } => {
            let k = notation::parse_cardinal(&k)?;
            let cf = cardinal::cofinality(&k).map_err(card_failure)?;
            ctx.line(cf.to_string());
        }
        CardCmd::Exp2 { k, mode } => {
            let k = notation::parse_cardinal(&k)?;
            let mode = load_mode(&mode)?;
            let v = cardinal::card_exp2(&k, &mode).map_err(card_failure)?;
            ctx.line(value_text(&v));
        }
        CardCmd::Predicates { k, mode } => {
            let kc = notation::parse_cardinal(&k)?;
            let mode = load_mode(&mode)?;
            let p = cardinal::predicates(&kc, &mode).map_err(card_failure)?;
            let mut v = formats::predicates_json(&kc.to_string(), &p);
            v["axioms"] = json!(mode.name());
            ctx.json(&v);
        }
        CardCmd::Catalog { descriptor, mode } => {
            let d = notation::parse_descriptor(&descriptor)?;
            let mode = load_mode(&mode)?;
            let e = cardinal::catalog(&d, &mode).map_err(card_failure)?;
            ctx.json(&formats::catalog_json(descriptor.trim(), &mode, &e));
        }
        CardCmd::Tower { base, steps } => {
            let b = notation::parse_cardinal(&base)?;
            let t = cardinal::strong_limit_tower(&b, steps).map_err(card_failure)?;
            for s in &t.steps {
                ctx.line(s);
            }
            ctx.line(format!("k = sup k_n = {}", t.name));
            ctx.line(format!("strong limit: {}", t.strong_limit.as_str()));
            ctx.line(format!("psl: {}", t.psl.as_str()));
            ctx.line(format!("cofinality: {}", t.cofinality));
        }
        CardCmd::WitnessPoly { cuts } => {
            let cs = cuts.iter().map(|c| notation::parse_qcut(c)).collect::<Result<Vec<_>, _>>()?;
            let primes = cardinal::witness_chain_poly(&cs);
            let mut text = String::new();
            for p in &primes {
                let _ = write!(text, "P_{} = {}", p.cut, p.label);
                if let Some(w) = p.witness_to_next {
                    let _ = write!(text, "  (X_{w} enters next)");
                }
                text.push('\n');
            }
            ctx.out.push_str(&text);
        }
    }
    Ok(())
}

fn run_order(ctx: &mut Ctx, cmd: OrderCmd) -> Result<(), Failure> {
    match cmd {
        OrderCmd::Reverse { chain } => {
            let c = notation::parse_chain(&chain)?;
            ctx.line(c.reverse().to_string());
        }
        OrderCmd::Concat { chains } => {
            let parts = chains.iter().map(|c| notation::parse_chain(c)).collect::<Result<Vec<_>, _>>()?;
            let c = SymbolicChain::concat(parts).map_err(|e| Failure::Usage(e.to_string()))?;
            ctx.line(c.to_string());
        }
        OrderCmd::Normalize { chain } => {
            let c = notation::parse_chain(&chain)?;
            ctx.line(c.normalize().to_string());
        }
    }
    Ok(())
}
