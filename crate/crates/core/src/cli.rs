//! The `kj` command line.
//!
//! Exit status: 0 on success, 1 for domain, parse and invariant errors (one
//! line on stderr), 2 for usage errors. Counts are decimal strings in JSON.

use std::ffi::OsString;
use std::fs;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bcd::{
    a_to_b_map, a_to_c_map, bcd_count, b_to_a_map, c_to_a_map, highest_root_juggling, schmidt_bincer_count,
    schmidt_bincer_type_a_sum,
};
use crate::bijection::{gamma, throws_of_roots, verify_correspondence};
use crate::closedforms::{
    catalan_product_check, closed_form_check, ehrhart_fit, find_row, gf_coefficients, lidskii_count, m_matrix,
    n_matrix, perm_det_count, ClosedForm, LidskiiVariant,
};
use crate::juggling::{JugglingProblem, JugglingSequence, JugglingState, Throw, ThrowSet};
use crate::kostant::{count_partitions, enumerate_partitions, RootPartition, RootSet};
use crate::poset::build_poset;
use crate::roots::{weight_from_simple, LieType, PositiveRoot, RootSystem, Weight};
use crate::selftest::{run_all, run_criterion, CRITERIA};
use crate::{parse_ints, Count, Error, Result};

#[derive(Debug, Parser)]
#[command(name = "kj", version, about = "Kostant partition functions and magic juggling sequences")]
pub struct Cli {
    /// Emit JSON (counts as decimal strings, keys sorted).
    #[arg(long, global = true)]
    pub json: bool,
    /// Print only the essential result.
    #[arg(long, short, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Positive roots, simple roots and the highest root of a root system.
    Roots(SystemArgs),
    /// Kostant's partition function, optionally restricted to a root subset.
    Kostant(KostantArgs),
    /// Magic multiplex juggling sequences.
    Js {
        #[command(subcommand)]
        action: JsAction,
    },
    /// Root partitions versus juggling sequences.
    Bijection {
        #[command(subcommand)]
        action: BijectionAction,
    },
    /// Types B, C and D.
    Bcd {
        #[command(subcommand)]
        action: BcdAction,
    },
    /// The juggling poset.
    Poset {
        #[command(subcommand)]
        action: PosetAction,
    },
    /// Highest-root count of a restricted type-A system as perm M = det N.
    Permdet(PermdetArgs),
    /// Type-A partition function through the Lidskii-type sums.
    Lidskii(LidskiiArgs),
    /// Coefficients of a periodic-sequence generating function.
    Gf(GfArgs),
    /// Exact evaluation of a closed form, checked against direct counts.
    Closedform(ClosedformArgs),
    /// Juggling count equal to a product of Catalan numbers.
    Catalan(CatalanArgs),
    /// Interpolate t -> K(t mu) and confirm it on held-out points.
    Ehrhart(EhrhartArgs),
    /// Run the acceptance suite.
    Selftest(SelftestArgs),
}

#[derive(Debug, Args)]
pub struct SystemArgs {
    /// Lie type: A, B, C or D.
    #[arg(long = "type", value_name = "TYPE")]
    pub lie_type: LieType,
    #[arg(long)]
    pub rank: usize,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct WeightArgs {
    /// Weight in simple-root coordinates, e.g. 1,2,1.
    #[arg(long, allow_hyphen_values = true, value_name = "C1,C2,...")]
    pub weight_alpha: Option<String>,
    /// Weight in epsilon coordinates, e.g. 1,0,-1.
    #[arg(long, allow_hyphen_values = true, value_name = "M1,M2,...")]
    pub weight_eps: Option<String>,
}

#[derive(Debug, Args)]
pub struct KostantArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    #[command(flatten)]
    pub weight: WeightArgs,
    /// Root subset file: one root per line (i-j, i+j, i, 2*i).
    #[arg(long, value_name = "FILE")]
    pub roots: Option<String>,
    /// List the partitions as well.
    #[arg(long)]
    pub enumerate: bool,
}

#[derive(Debug, Args)]
pub struct JsArgs {
    #[arg(long, allow_hyphen_values = true, value_name = "STATE")]
    pub initial: String,
    #[arg(long, allow_hyphen_values = true, value_name = "STATE")]
    pub terminal: String,
    #[arg(long)]
    pub length: usize,
    /// Hand capacity.
    #[arg(long)]
    pub capacity: Option<u32>,
    /// `heights=h1,h2,...` or explicit throws `i:j,...`.
    #[arg(long, conflicts_with = "throws_file")]
    pub throws: Option<String>,
    /// File of allowed throws, one `time:height` per line.
    #[arg(long, value_name = "FILE")]
    pub throws_file: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum JsAction {
    Count(JsArgs),
    Enum(JsArgs),
}

#[derive(Debug, Subcommand)]
pub enum BijectionAction {
    /// Compare partitions of a type-A weight with juggling sequences.
    Roundtrip {
        #[arg(long, allow_hyphen_values = true, value_name = "M1,M2,...")]
        weight_eps: String,
        #[arg(long, value_name = "FILE")]
        roots: Option<String>,
        #[arg(long)]
        capacity: Option<u32>,
    },
    /// Turn a type-A root partition into a juggling sequence.
    ToJuggling {
        /// Partition file: roots separated by newlines or commas, `root^k` for multiplicity.
        #[arg(long, value_name = "FILE")]
        partition: String,
        #[arg(long, allow_hyphen_values = true, value_name = "STATE")]
        initial: String,
        #[arg(long)]
        length: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BcdMethod {
    Oracle,
    /// Type-A juggling identity (highest root only).
    Juggling,
    /// Two-conveyor juggling sequences.
    Conveyor,
    SchmidtBincer,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MapKind {
    B2a,
    C2a,
}

#[derive(Debug, Subcommand)]
pub enum BcdAction {
    Count {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "highest_root", value_name = "M1,M2,...")]
        weight_eps: Option<String>,
        #[arg(long)]
        highest_root: bool,
        #[arg(long, value_enum, default_value = "all")]
        method: BcdMethod,
    },
    /// Map a highest-root partition of B_r or C_r into type A.
    Map {
        #[arg(long, value_enum)]
        which: MapKind,
        #[arg(long)]
        rank: usize,
        #[arg(long, value_name = "FILE")]
        partition: String,
        /// Apply the inverse map (type-A partition in).
        #[arg(long)]
        inverse: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PosetOrder {
    /// Fewest throws at the bottom.
    Tesler,
    /// Covers as merges, most throws at the bottom.
    Merge,
}

#[derive(Debug, Subcommand)]
pub enum PosetAction {
    Charpoly {
        #[arg(long, allow_hyphen_values = true, value_name = "STATE")]
        initial: String,
        #[arg(long, allow_hyphen_values = true, value_name = "STATE")]
        terminal: String,
        #[arg(long)]
        length: usize,
        #[arg(long)]
        capacity: Option<u32>,
        #[arg(long, value_enum, default_value = "tesler")]
        order: PosetOrder,
        /// Print the cover graph in dot format instead.
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Debug, Args)]
pub struct PermdetArgs {
    #[arg(long)]
    pub rank: usize,
    /// Root subset file; all of the positive roots when omitted.
    #[arg(long, value_name = "FILE")]
    pub roots: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Binomial,
    Multiset,
    Both,
}

#[derive(Debug, Args)]
pub struct LidskiiArgs {
    #[arg(long, allow_hyphen_values = true, value_name = "M1,M2,...")]
    pub weight_eps: String,
    #[arg(long, value_enum, default_value = "both")]
    pub variant: VariantArg,
}

#[derive(Debug, Args)]
pub struct GfArgs {
    /// Row as `state|capacity`, e.g. "2,1|3".
    #[arg(long)]
    pub row: String,
    #[arg(long, default_value_t = 10)]
    pub upto: usize,
}

#[derive(Debug, Args)]
pub struct ClosedformArgs {
    /// c45, c46, c47 or c48.
    #[arg(long)]
    pub which: String,
    #[arg(long)]
    pub r: usize,
}

#[derive(Debug, Args)]
pub struct CatalanArgs {
    #[arg(long)]
    pub r: usize,
}

#[derive(Debug, Args)]
pub struct EhrhartArgs {
    #[arg(long, allow_hyphen_values = true, value_name = "M1,M2,...")]
    pub weight_eps: String,
    #[arg(long, default_value_t = 2)]
    pub extra: usize,
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    /// Run a single criterion.
    #[arg(long, value_name = "ID")]
    pub only: Option<usize>,
}

/// What a command produced: text for humans, a JSON value, and whether it
/// counts as success.
pub struct Output {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

impl Output {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Output { text: text.into(), json, ok: true }
    }
}

fn c(x: &Count) -> Value {
    Value::String(x.to_string())
}

fn read_file(path: &str) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))
}

/// Non-comment tokens of a file, split on newlines and commas.
fn tokens(text: &str) -> Vec<String> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(|l| l.split(','))
        .map(|t| t.trim().trim_matches(['{', '}']).trim().to_string())
        .filter(|t| !t.is_empty())
        .collect()
}

fn read_roots(path: &str) -> Result<Vec<PositiveRoot>> {
    tokens(&read_file(path)?).iter().map(|t| t.parse()).collect()
}

fn read_partition(path: &str) -> Result<RootPartition> {
    let mut roots = Vec::new();
    for t in tokens(&read_file(path)?) {
        let (r, k) = match t.split_once('^') {
            Some((r, k)) => {
                let k: usize = k.trim().parse().map_err(|_| Error::Parse(format!("bad multiplicity in `{t}`")))?;
                (r.to_string(), k)
            }
            None => (t.clone(), 1),
        };
        let root: PositiveRoot = r.parse()?;
        roots.extend(std::iter::repeat_n(root, k));
    }
    Ok(RootPartition::from_roots(roots))
}

fn state(s: &str) -> Result<JugglingState> {
    Ok(JugglingState::new(parse_ints(s)?))
}

fn weight(sys: &RootSystem, w: &WeightArgs) -> Result<Weight> {
    match (&w.weight_alpha, &w.weight_eps) {
        (Some(a), None) => weight_from_simple(sys, &parse_ints(a)?),
        (None, Some(e)) => {
            let v = parse_ints(e)?;
            if v.len() != sys.ambient() {
                return Err(Error::Domain(format!(
                    "weight `{e}` has {} coordinates, {}{} needs {}",
                    v.len(),
                    sys.lie_type(),
                    sys.rank(),
                    sys.ambient()
                )));
            }
            Ok(Weight(v))
        }
        _ => Err(Error::Domain("give exactly one of --weight-alpha and --weight-eps".into())),
    }
}

fn root_set(sys: RootSystem, file: Option<&String>) -> Result<RootSet> {
    match file {
        Some(path) => RootSet::new(sys, read_roots(path)?),
        None => Ok(RootSet::full(sys)),
    }
}

fn partition_json(p: &RootPartition) -> Value {
    Value::Array(p.entries().iter().map(|(r, m)| json!([r.to_string(), m])).collect())
}

fn sequence_json(s: &JugglingSequence) -> Value {
    Value::Array(s.states().iter().map(|x| json!(x.entries())).collect())
}

fn throw_set(args: &JsArgs) -> Result<ThrowSet> {
    if let Some(path) = &args.throws_file {
        let throws = tokens(&read_file(path)?).iter().map(|t| t.parse()).collect::<Result<Vec<Throw>>>()?;
        return Ok(ThrowSet::explicit(throws));
    }
    match &args.throws {
        None => Ok(ThrowSet::All),
        Some(spec) => {
            if let Some(h) = spec.trim().strip_prefix("heights=") {
                let hs = parse_ints(h)?;
                if let Some(bad) = hs.iter().find(|&&x| x < 1) {
                    return Err(Error::Parse(format!("throw height `{bad}` must be positive")));
                }
                Ok(ThrowSet::heights(hs.into_iter().map(|x| x as usize)))
            } else {
                let throws = spec.split(',').map(|t| t.parse()).collect::<Result<Vec<Throw>>>()?;
                Ok(ThrowSet::explicit(throws))
            }
        }
    }
}

fn js_problem(args: &JsArgs) -> Result<JugglingProblem> {
    Ok(JugglingProblem::new(state(&args.initial)?, state(&args.terminal)?, args.length)
        .with_capacity(args.capacity)
        .with_throws(throw_set(args)?))
}

fn lines<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join("\n")
}

fn cmd_roots(a: &SystemArgs, quiet: bool) -> Result<Output> {
    let sys = RootSystem::new(a.lie_type, a.rank)?;
    let roots = sys.positive_roots();
    let simple: Vec<Vec<i64>> = (1..=a.rank).map(|k| sys.simple_root(k).map(|w| w.0)).collect::<Result<_>>()?;
    let h = sys.highest_root();
    let mut text = String::new();
    if !quiet {
        text.push_str(&format!("{}{}: {} positive roots, highest root {h}\n", a.lie_type, a.rank, roots.len()));
    }
    text.push_str(&lines(&roots));
    let json = json!({
        "type": a.lie_type.to_string(),
        "rank": a.rank,
        "positive_roots": roots.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "simple_roots": simple,
        "highest_root": h.0,
    });
    Ok(Output::new(text, json))
}

fn cmd_kostant(a: &KostantArgs) -> Result<Output> {
    let sys = RootSystem::new(a.system.lie_type, a.system.rank)?;
    let mu = weight(&sys, &a.weight)?;
    let set = root_set(sys, a.roots.as_ref())?;
    let count = count_partitions(&mu, &set)?;
    let mut text = count.to_string();
    let mut json = json!({ "count": c(&count) });
    if a.enumerate {
        let parts = enumerate_partitions(&mu, &set)?;
        for p in &parts {
            text.push('\n');
            text.push_str(&p.to_string());
        }
        json["partitions"] = Value::Array(parts.iter().map(partition_json).collect());
    }
    Ok(Output::new(text, json))
}

fn cmd_js(action: &JsAction) -> Result<Output> {
    match action {
        JsAction::Count(a) => {
            let n = js_problem(a)?.count();
            Ok(Output::new(n.to_string(), json!({ "count": c(&n) })))
        }
        JsAction::Enum(a) => {
            let seqs = js_problem(a)?.enumerate();
            let text = format!("{}\n{}", seqs.len(), lines(&seqs));
            let json = json!({
                "count": seqs.len().to_string(),
                "sequences": seqs.iter().map(sequence_json).collect::<Vec<_>>(),
            });
            Ok(Output::new(text.trim_end(), json))
        }
    }
}

fn cmd_bijection(action: &BijectionAction) -> Result<Output> {
    match action {
        BijectionAction::Roundtrip { weight_eps, roots, capacity } => {
            let mu = Weight(parse_ints(weight_eps)?);
            if mu.ambient() < 2 {
                return Err(Error::Domain(format!("weight `{weight_eps}` needs at least two coordinates")));
            }
            let sys = RootSystem::new(LieType::A, mu.ambient() - 1)?;
            let set = root_set(sys, roots.as_ref())?;
            throws_of_roots(&set)?;
            let rep = verify_correspondence(&mu, Some(&set), *capacity)?;
            let verdict = if rep.passed() { "ok" } else { "MISMATCH" };
            let mut text = format!(
                "partitions {}\nsequences {}\njuggling JS({}, {}, {})\nroundtrip {verdict}",
                rep.partitions, rep.sequences, rep.initial, rep.terminal, rep.length
            );
            if let Some(m) = &rep.first_mismatch {
                text.push_str(&format!("\nfirst mismatch: {m}"));
            }
            let json = json!({
                "partitions": c(&rep.partitions),
                "sequences": c(&rep.sequences),
                "initial": rep.initial.entries(),
                "terminal": rep.terminal.entries(),
                "length": rep.length,
                "roundtrip": rep.roundtrip,
                "injective": rep.injective,
                "surjective": rep.image_is_all,
                "passed": rep.passed(),
            });
            Ok(Output { text, json, ok: rep.passed() })
        }
        BijectionAction::ToJuggling { partition, initial, length } => {
            let p = read_partition(partition)?;
            let s = gamma(&p, &state(initial)?, *length)?;
            Ok(Output::new(lines(s.states()), json!({ "states": sequence_json(&s) })))
        }
    }
}

fn cmd_bcd(action: &BcdAction) -> Result<Output> {
    match action {
        BcdAction::Count { system, weight_eps, highest_root, method } => {
            let ty = system.lie_type;
            if ty == LieType::A {
                return Err(Error::Domain("bcd needs type B, C or D".into()));
            }
            let sys = RootSystem::new(ty, system.rank)?;
            let is_highest = *highest_root || weight_eps.is_none();
            let mu = match weight_eps {
                Some(w) => weight(&sys, &WeightArgs { weight_alpha: None, weight_eps: Some(w.clone()) })?,
                None => sys.highest_root(),
            };
            let mut rows: Vec<(&str, Count)> = Vec::new();
            let want = |m: BcdMethod| *method == m || *method == BcdMethod::All;
            if want(BcdMethod::Oracle) {
                rows.push(("oracle", count_partitions(&mu, &RootSet::full(sys))?));
            }
            if want(BcdMethod::Juggling) {
                if is_highest || mu == sys.highest_root() {
                    rows.push(("juggling", highest_root_juggling(ty, system.rank)?));
                } else if *method == BcdMethod::Juggling {
                    return Err(Error::Domain(
                        "the type-A juggling identity covers the highest root only; use --method conveyor".into(),
                    ));
                }
            }
            if want(BcdMethod::Conveyor) {
                rows.push(("conveyor", bcd_count(ty, &mu)?));
            }
            if want(BcdMethod::SchmidtBincer) {
                rows.push(("schmidt-bincer", schmidt_bincer_count(ty, system.rank, &mu)?));
            }
            let agree = rows.windows(2).all(|w| w[0].1 == w[1].1);
            let mut json = serde_json::Map::new();
            for (k, v) in &rows {
                json.insert(k.to_string(), c(v));
            }
            let text = if rows.len() == 1 {
                rows[0].1.to_string()
            } else {
                let mut t = lines(rows.iter().map(|(k, v)| format!("{k} {v}")));
                let literal = schmidt_bincer_type_a_sum(ty, system.rank, &mu)?;
                t.push_str(&format!("\ntype-A-configuration reading (diagnostic) {literal}"));
                json.insert("schmidt-bincer-type-a-reading".into(), c(&literal));
                t
            };
            json.insert("agree".into(), Value::Bool(agree));
            Ok(Output { text, json: Value::Object(json), ok: agree })
        }
        BcdAction::Map { which, rank, partition, inverse } => {
            let p = read_partition(partition)?;
            let q = match (which, inverse) {
                (MapKind::B2a, false) => b_to_a_map(*rank, &p)?,
                (MapKind::B2a, true) => a_to_b_map(*rank, &p)?,
                (MapKind::C2a, false) => c_to_a_map(*rank, &p)?,
                (MapKind::C2a, true) => a_to_c_map(*rank, &p)?,
            };
            Ok(Output::new(q.to_string(), json!({ "partition": partition_json(&q) })))
        }
    }
}

fn cmd_poset(action: &PosetAction) -> Result<Output> {
    let PosetAction::Charpoly { initial, terminal, length, capacity, order, dot } = action;
    let p = build_poset(&state(initial)?, &state(terminal)?, *length, *capacity)?;
    let p = match order {
        PosetOrder::Tesler => p.dual(),
        PosetOrder::Merge => p,
    };
    if *dot {
        let d = p.to_dot();
        return Ok(Output::new(d.trim_end(), json!({ "dot": d })));
    }
    let chi = p.characteristic_polynomial()?;
    let json = json!({
        "elements": p.len(),
        "covers": p.covers().len(),
        "rank": p.max_rank(),
        "charpoly": chi.to_string(),
        "coefficients": chi.0,
    });
    Ok(Output::new(chi.to_string(), json))
}

fn cmd_permdet(a: &PermdetArgs, quiet: bool) -> Result<Output> {
    let sys = RootSystem::new(LieType::A, a.rank)?;
    let set = root_set(sys, a.roots.as_ref())?;
    let n = perm_det_count(a.rank, &set)?;
    let m = m_matrix(a.rank, &set)?;
    let nn = n_matrix(a.rank, &set)?;
    let text = if quiet { n.to_string() } else { format!("M =\n{m}N =\n{nn}perm M = det N = {n}") };
    let json = json!({ "count": c(&n), "m": m.rows(), "n": nn.rows() });
    Ok(Output::new(text, json))
}

fn cmd_lidskii(a: &LidskiiArgs) -> Result<Output> {
    let mu = Weight(parse_ints(&a.weight_eps)?);
    let variants: &[(LidskiiVariant, &str)] = match a.variant {
        VariantArg::Binomial => &[(LidskiiVariant::Binomial, "binomial")],
        VariantArg::Multiset => &[(LidskiiVariant::Multiset, "multiset")],
        VariantArg::Both => &[(LidskiiVariant::Binomial, "binomial"), (LidskiiVariant::Multiset, "multiset")],
    };
    let mut json = serde_json::Map::new();
    let mut rows = Vec::new();
    for (v, name) in variants {
        let n = lidskii_count(&mu, *v)?;
        json.insert(name.to_string(), c(&n));
        rows.push((name, n));
    }
    let agree = rows.windows(2).all(|w| w[0].1 == w[1].1);
    let text = if rows.len() == 1 { rows[0].1.to_string() } else { lines(rows.iter().map(|(k, v)| format!("{k} {v}"))) };
    Ok(Output { text, json: Value::Object(json), ok: agree })
}

fn cmd_gf(a: &GfArgs) -> Result<Output> {
    let row = find_row(&a.row)?;
    let coeffs = gf_coefficients(&row, a.upto)?;
    let text = coeffs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
    let json = json!({
        "row": row.id(),
        "numerator": row.numerator,
        "denominator": row.denominator,
        "coefficients": coeffs.iter().map(c).collect::<Vec<_>>(),
    });
    Ok(Output::new(text, json))
}

fn cmd_closedform(a: &ClosedformArgs) -> Result<Output> {
    let which: ClosedForm = a.which.parse()?;
    let n = closed_form_check(which, a.r)?;
    Ok(Output::new(n.to_string(), json!({ "which": which.name(), "r": a.r, "value": c(&n) })))
}

fn cmd_catalan(a: &CatalanArgs) -> Result<Output> {
    let n = catalan_product_check(a.r)?;
    Ok(Output::new(n.to_string(), json!({ "r": a.r, "value": c(&n) })))
}

fn cmd_ehrhart(a: &EhrhartArgs, quiet: bool) -> Result<Output> {
    let mu = Weight(parse_ints(&a.weight_eps)?);
    let fit = ehrhart_fit(&mu, a.extra)?;
    let pairs = |v: &[(u64, Count)]| v.iter().map(|(t, n)| json!([t, c(n)])).collect::<Vec<_>>();
    let mut text = fit.polynomial.to_string();
    if !quiet {
        let held: Vec<String> = fit.checked.iter().map(|(t, n)| format!("t={t}: {n}")).collect();
        text.push_str(&format!("\nconfirmed {}", if held.is_empty() { "nothing".into() } else { held.join(", ") }));
    }
    let json = json!({
        "polynomial": fit.polynomial.to_string(),
        "coefficients": fit.polynomial.coefficients().iter().map(|q| q.to_string()).collect::<Vec<_>>(),
        "samples": pairs(&fit.samples),
        "checked": pairs(&fit.checked),
    });
    Ok(Output::new(text, json))
}

fn cmd_selftest(a: &SelftestArgs, quiet: bool) -> Result<Output> {
    let results = match a.only {
        Some(id) if (1..=CRITERIA).contains(&id) => vec![run_criterion(id)],
        Some(id) => return Err(Error::Domain(format!("criteria are numbered 1..={CRITERIA}, got {id}"))),
        None => run_all(),
    };
    let passed = results.iter().filter(|r| r.passed).count();
    let mut text: Vec<String> = results.iter().filter(|r| !quiet || !r.passed).map(|r| r.line()).collect();
    text.push(format!("{passed}/{} criteria pass", results.len()));
    let json = Value::Array(
        results
            .iter()
            .map(|r| json!({ "id": r.id, "name": r.name, "passed": r.passed, "detail": r.detail }))
            .collect(),
    );
    Ok(Output { text: text.join("\n"), json, ok: passed == results.len() })
}

pub fn execute(cli: &Cli) -> Result<Output> {
    let q = cli.quiet;
    match &cli.command {
        Command::Roots(a) => cmd_roots(a, q),
        Command::Kostant(a) => cmd_kostant(a),
        Command::Js { action } => cmd_js(action),
        Command::Bijection { action } => cmd_bijection(action),
        Command::Bcd { action } => cmd_bcd(action),
        Command::Poset { action } => cmd_poset(action),
        Command::Permdet(a) => cmd_permdet(a, q),
        Command::Lidskii(a) => cmd_lidskii(a),
        Command::Gf(a) => cmd_gf(a),
        Command::Closedform(a) => cmd_closedform(a),
        Command::Catalan(a) => cmd_catalan(a),
        Command::Ehrhart(a) => cmd_ehrhart(a, q),
        Command::Selftest(a) => cmd_selftest(a, q),
    }
}

/// Parses `args` (program name first), runs, prints, and returns the exit
/// status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let body = if cli.json { out.json.to_string() } else { out.text };
            let _ = writeln!(stdout, "{body}");
            if out.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("kj: {e}");
            1
        }
    }
}
