use clap::{Args, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use walkers_core::combinatorics::{f_np_bruteforce, f_np_via_shapes, lis_length, rsk_inverse, Permutation};
use walkers_core::edge::{fit_chi, kernel_diagonal, rho1_curve_csv, sample_max_displacement, KernelSample};
use walkers_core::integrals::Quadrature;
use walkers_core::walks::{
    apply_reduction, collect_walks, diagram_to_tableau_pair, diagram_to_walk, enumerate_walks,
    permutation_to_walk, stochastic_step, tableau_pair_to_diagram, walk_to_diagram, word_reduction,
    ModelParams, StepWord, WalkHistory,
};
use walkers_core::Error;

use crate::report::{csv_line, Report};
use crate::{CliError, Context};

type CmdResult = Result<Report, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn to_json<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("report types serialise")
}

fn compact<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report types serialise")
}

/// Resolves `--n` / `--word` into a step word; the canonical `L^n R^n` if
/// only `--n` is given.
fn resolve_word(n: Option<usize>, word: Option<&str>) -> Result<StepWord, CliError> {
    match (n, word) {
        (_, Some(w)) => {
            let word: StepWord = w.parse()?;
            if let Some(n) = n {
                if n != word.half_len() {
                    return Err(usage(format!("--n {n} but the word has {} letters", word.len())));
                }
            }
            Ok(word)
        }
        (Some(n), None) => Ok(StepWord::canonical(n)),
        (None, None) => Err(usage("give --n or --word")),
    }
}

#[derive(Debug, Args)]
pub struct CountArgs {
    /// Half the number of ticks
    #[arg(long)]
    n: Option<usize>,
    /// Number of walkers
    #[arg(long)]
    p: usize,
    /// Step word such as LRLR (default L^n R^n)
    #[arg(long)]
    word: Option<String>,
}

pub fn count(ctx: &Context, a: CountArgs) -> CmdResult {
    let word = resolve_word(a.n, a.word.as_deref())?;
    let n = word.half_len();
    let walks = enumerate_walks(a.p, &word, &ctx.limits)?;
    let shapes = f_np_via_shapes(n, a.p);
    let brute = match f_np_bruteforce(n, a.p, &ctx.limits) {
        Ok(b) => Some(b),
        Err(Error::ResourceLimit { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let agree = walks == shapes && brute.as_ref().is_none_or(|b| *b == walks);
    let json = json!({
        "n": n,
        "p": a.p,
        "word": word.to_string(),
        "walks": walks.to_string(),
        "shapes": shapes.to_string(),
        "bruteforce": brute.as_ref().map(|b| b.to_string()),
        "agree": agree,
    });
    let mut csv = csv_line(["n", "p", "word", "walks", "shapes", "bruteforce", "agree"].map(String::from));
    csv += &csv_line([
        n.to_string(),
        a.p.to_string(),
        word.to_string(),
        walks.to_string(),
        shapes.to_string(),
        brute.map(|b| b.to_string()).unwrap_or_default(),
        agree.to_string(),
    ]);
    Ok(Report::new(json, csv).fail_unless(agree, "the counting methods disagree"))
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: usize,
    /// Quadrature nodes per dimension (default: smallest exact grid)
    #[arg(long)]
    grid_m: Option<usize>,
}

pub fn verify(ctx: &Context, a: VerifyArgs) -> CmdResult {
    let q = Quadrature { grid_m: a.grid_m, limits: ctx.limits };
    let r = q.verify_identity_ad(a.n, a.p)?;
    let mut csv = csv_line(["n", "p", "z_value", "binom", "f_value", "residual", "m", "holds"].map(String::from));
    csv += &csv_line([
        r.n.to_string(),
        r.p.to_string(),
        r.z_value.to_string(),
        r.binom.to_string(),
        r.f_value.to_string(),
        format!("{:e}", r.residual),
        r.m.to_string(),
        r.holds.to_string(),
    ]);
    let holds = r.holds;
    Ok(Report::new(to_json(&r), csv).fail_unless(holds, "the identity does not hold"))
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum IntegralKind {
    /// Permutations with longest increasing subsequence at most p
    F,
    /// Walks between arbitrary start and end sites
    Z,
    /// Closed walks from sites 1..p, symmetrised form
    Zsym,
}

#[derive(Debug, Args)]
pub struct IntegralArgs {
    #[arg(long, value_enum, default_value_t = IntegralKind::F)]
    kind: IntegralKind,
    #[arg(long)]
    n: usize,
    /// Number of walkers (for z, implied by --start)
    #[arg(long)]
    p: Option<usize>,
    /// Start sites, comma separated (z only; default 1..p)
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    start: Vec<i64>,
    /// End sites, comma separated (z only; default equal to the start)
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    end: Vec<i64>,
    #[arg(long)]
    grid_m: Option<usize>,
}

pub fn integral(ctx: &Context, a: IntegralArgs) -> CmdResult {
    let q = Quadrature { grid_m: a.grid_m, limits: ctx.limits };
    let need_p = || a.p.ok_or_else(|| usage("--p is required for this kind"));
    let (kind, r) = match a.kind {
        IntegralKind::F => ("f", q.f_np(a.n, need_p()?)?),
        IntegralKind::Zsym => ("zsym", q.z_equal_sites(a.n, need_p()?)?),
        IntegralKind::Z => {
            let start = if a.start.is_empty() {
                (1..=need_p()? as i64).collect()
            } else {
                a.start.clone()
            };
            if a.p.is_some_and(|p| p != start.len()) {
                return Err(usage("--p does not match the number of start sites"));
            }
            let end = if a.end.is_empty() { start.clone() } else { a.end.clone() };
            ("z", q.z(a.n, &start, &end)?)
        }
    };
    let mut json = to_json(&r);
    json["kind"] = json!(kind);
    let mut csv = csv_line(["kind", "n", "p", "value", "residual", "m"].map(String::from));
    csv += &csv_line([
        kind.to_string(),
        r.n.to_string(),
        r.p.to_string(),
        r.value.to_string(),
        format!("{:e}", r.residual),
        r.m.to_string(),
    ]);
    Ok(Report::new(json, csv))
}

#[derive(Debug, Args)]
pub struct EdgeArgs {
    /// System sizes, comma separated
    #[arg(long, value_delimiter = ',', default_values_t = [100usize, 1000, 10000])]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 2000)]
    trials: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Include the displacement histogram of every size
    #[arg(long)]
    histogram: bool,
}

pub fn edge(_ctx: &Context, a: EdgeArgs) -> CmdResult {
    if a.sizes.is_empty() || a.sizes.contains(&0) {
        return Err(usage("--sizes must be positive integers"));
    }
    let stats = a
        .sizes
        .iter()
        .map(|&n| sample_max_displacement(n, a.trials, a.seed))
        .collect::<Result<Vec<_>, _>>()?;
    let fit = fit_chi(&stats);

    let mut rows = Vec::new();
    let mut csv = csv_line(["n", "trials", "mean", "std", "mean_over_sqrt_n"].map(String::from));
    for s in &stats {
        let mut row = json!({
            "n": s.n,
            "trials": s.trials,
            "mean": s.mean,
            "std": s.std,
            "mean_over_sqrt_n": s.mean_over_sqrt_n(),
        });
        if a.histogram {
            row["histogram"] = histogram_rows(&s.histogram_csv());
        }
        rows.push(row);
        csv += &csv_line([
            s.n.to_string(),
            s.trials.to_string(),
            s.mean.to_string(),
            s.std.to_string(),
            s.mean_over_sqrt_n().to_string(),
        ]);
    }
    let fit_json = match &fit {
        Ok(f) => {
            csv += &format!("# chi_hat={},intercept={},r_squared={}\n", f.chi_hat, f.intercept, f.r_squared);
            to_json(f)
        }
        Err(e) => {
            csv += &format!("# no fit: {e}\n");
            Value::Null
        }
    };
    if a.histogram {
        for s in &stats {
            csv += &format!("# histogram n={}\n{}", s.n, s.histogram_csv());
        }
    }
    let json = json!({ "seed": a.seed, "sizes": rows, "fit": fit_json });
    Ok(Report::new(json, csv))
}

fn histogram_rows(csv: &str) -> Value {
    csv.lines()
        .skip(1)
        .map(|line| {
            let (d, c) = line.split_once(',').expect("two columns");
            json!([d.parse::<u64>().unwrap(), c.parse::<u64>().unwrap()])
        })
        .collect()
}

#[derive(Debug, Args)]
pub struct KernelArgs {
    /// Evaluation points, comma separated (1 to 8 of them)
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    points: Vec<f64>,
    /// Also tabulate the one-point density: FROM,TO,INTERVALS
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, num_args = 1)]
    curve: Vec<f64>,
}

pub fn kernel(_ctx: &Context, a: KernelArgs) -> CmdResult {
    let rho = walkers_core::edge::rho_k(&a.points)?;
    let sample = KernelSample::new(&a.points)?;
    let mut json = json!({
        "points": sample.points,
        "matrix": sample.matrix,
        "rho_k": rho,
    });
    let mut csv = String::new();
    for row in &sample.matrix {
        csv += &row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        csv.push('\n');
    }
    csv += &format!("# rho_k={rho}\n");
    if !a.curve.is_empty() {
        let [from, to, intervals] = a.curve[..] else {
            return Err(usage("--curve takes FROM,TO,INTERVALS"));
        };
        if intervals < 1.0 || intervals.fract() != 0.0 {
            return Err(usage("curve INTERVALS must be a positive integer"));
        }
        let table = rho1_curve_csv(from, to, intervals as usize)?;
        let curve: Vec<Value> = table
            .lines()
            .skip(1)
            .map(|line| {
                let x: f64 = line.split_once(',').expect("two columns").0.parse().unwrap();
                json!([x, kernel_diagonal(x).expect("checked by the table")])
            })
            .collect();
        json["curve"] = Value::Array(curve);
        csv += &table;
    }
    Ok(Report::new(json, csv))
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long, default_value_t = 3)]
    p: usize,
    #[arg(long, default_value_t = 20)]
    steps: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Probability that a chosen walker first tries to step left
    #[arg(long, default_value_t = 0.5)]
    w_left: f64,
}

pub fn simulate(_ctx: &Context, a: SimulateArgs) -> CmdResult {
    if a.p == 0 {
        return Err(usage("--p must be at least 1"));
    }
    let params = ModelParams::new(a.w_left, 1.0 - a.w_left)?;
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let mut positions: Vec<i64> = (1..=a.p as i64).collect();
    let initial = positions.clone();
    let mut lowest = positions.clone();
    let mut moves = Vec::with_capacity(a.steps);
    let mut csv = csv_line(["t", "walker", "step", "positions"].map(String::from));
    for t in 1..=a.steps {
        let (k, step) = stochastic_step(&mut positions, &params, &mut rng)?;
        lowest[k] = lowest[k].min(positions[k]);
        moves.push(json!([k + 1, step.as_char().to_string()]));
        let pos: Vec<String> = positions.iter().map(|x| x.to_string()).collect();
        csv += &csv_line([t.to_string(), (k + 1).to_string(), step.as_char().to_string(), pos.join(" ")]);
    }
    let displacements: Vec<i64> = initial.iter().zip(&lowest).map(|(i, l)| i - l).collect();
    let json = json!({
        "p": a.p,
        "steps": a.steps,
        "seed": a.seed,
        "w_left": a.w_left,
        "initial": initial,
        "moves": moves,
        "final": positions,
        "max_left_displacements": displacements,
    });
    Ok(Report::new(json, csv))
}

#[derive(Debug, Args)]
pub struct BijectionArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: usize,
    /// Step word (default L^n R^n); other words are first reduced to L^n R^n
    #[arg(long)]
    word: Option<String>,
    /// Map a single permutation (one-line notation, comma separated) instead
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["n", "word"])]
    permutation: Vec<u32>,
}

struct Entry {
    json: Value,
    csv: Vec<String>,
    ok: bool,
}

fn describe(history: &WalkHistory, word: &StepWord, p: usize) -> Result<Entry, CliError> {
    let diagram = walk_to_diagram(history)?;
    let mut ok = diagram_to_walk(&diagram)? == *history;
    let (canonical, _) = apply_reduction(&diagram, word)?;
    let pair = diagram_to_tableau_pair(&canonical)?;
    let perm = rsk_inverse(&pair)?;
    ok &= tableau_pair_to_diagram(&pair, p)? == canonical;
    ok &= permutation_to_walk(&perm, p)? == diagram_to_walk(&canonical)?;
    let reduction = if word.is_canonical() { Vec::new() } else { word_reduction(word) };
    let lis = lis_length(&perm);
    let json = json!({
        "walk": to_json(history),
        "diagram": to_json(&diagram),
        "reduction": reduction,
        "canonical_diagram": to_json(&canonical),
        "pair": to_json(&pair),
        "permutation": to_json(&perm),
        "lis": lis,
        "round_trip": ok,
    });
    let moves: Vec<String> = history
        .moves()
        .iter()
        .map(|m| format!("{}{}", m.walker + 1, m.step.as_char()))
        .collect();
    let csv = vec![
        word.to_string(),
        moves.join(" "),
        compact(&perm),
        compact(pair.p_tableau()),
        compact(pair.q_tableau()),
        lis.to_string(),
        ok.to_string(),
    ];
    Ok(Entry { json, csv, ok })
}

pub fn bijection(ctx: &Context, a: BijectionArgs) -> CmdResult {
    let (word, walks) = if a.permutation.is_empty() {
        let word = resolve_word(a.n, a.word.as_deref())?;
        let walks = collect_walks(a.p, &word, &ctx.limits)?;
        (word, walks)
    } else {
        let perm = Permutation::new(a.permutation.clone())?;
        let walk = permutation_to_walk(&perm, a.p)?;
        (StepWord::canonical(perm.len()), vec![walk])
    };
    let mut entries = Vec::new();
    let mut csv = csv_line(
        ["index", "word", "moves", "permutation", "p_tableau", "q_tableau", "lis", "round_trip"].map(String::from),
    );
    let mut all_ok = true;
    for (i, h) in walks.iter().enumerate() {
        let e = describe(h, &word, a.p)?;
        all_ok &= e.ok;
        csv += &csv_line(std::iter::once((i + 1).to_string()).chain(e.csv));
        entries.push(e.json);
    }
    let json = json!({
        "p": a.p,
        "word": word.to_string(),
        "count": entries.len(),
        "walks": entries,
    });
    Ok(Report::new(json, csv).fail_unless(all_ok, "a round trip failed"))
}
