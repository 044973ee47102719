//! Command-line front end.
//!
//! Exit codes: 0 success, 1 negative boolean verdict, 2 input error,
//! 3 theorem precondition violated. All numeric I/O is exact; reports are
//! byte-identical across repeated runs on identical inputs.

use std::fs;
use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use wallcross::arith::{rat_display, Rat};
use wallcross::classify::{
    classify_extended_flip, classify_symmetric_flop, classify_two_vertex, local_model_dims,
    DiagramClass,
};
use wallcross::error::{Error, Result};
use wallcross::formats::{
    parse_dim_vector, parse_rational, ChargeFile, ExtendedSpecFile, QuiverFile, TableFile,
    WallsFile,
};
use wallcross::oracle;
use wallcross::presets;
use wallcross::quiver::Quiver;
use wallcross::report::{codes, RunReport, Warning};
use wallcross::series::{
    self, dtpt_transform, mac_mahon, palindrome_check, pt_product_formula, telescope_check,
    TruncatedSeries,
};
use wallcross::simples::has_simple;
use wallcross::stability::{
    coincident_wall_pairs, enumerate_walls, flop_charges, wall_report, CentralCharge,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Debug, Parser)]
#[command(name = "wallcross", version, about = "Exact wall-and-chamber computations for quiver moduli")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Enumeration budget for exhaustive oracles.
    #[arg(long, global = true, default_value_t = oracle::DEFAULT_BUDGET)]
    budget: u128,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Enumerate the walls of a primitive dimension vector.
    Walls(WallsArgs),
    /// Decide existence of a simple representation.
    Simples(SimplesArgs),
    /// Classify a wall-crossing diagram.
    Classify(ClassifyArgs),
    /// Truncated series identities.
    Series(SeriesArgs),
    /// Canned geometric scenarios.
    Preset(PresetArgs),
    /// Exhaustive finite-field enumeration.
    Oracle(OracleArgs),
}

#[derive(Debug, Args)]
struct WallsArgs {
    /// Quiver file (JSON record with vertices and edges).
    #[arg(long)]
    quiver: String,
    /// Dimension vector, comma-separated in canonical vertex order.
    #[arg(long, allow_hyphen_values = true)]
    m: String,
    /// Optional charge file; adds per-wall on-wall and side flags.
    #[arg(long)]
    charge: Option<String>,
}

#[derive(Debug, Args)]
struct SimplesArgs {
    #[arg(long)]
    quiver: String,
    #[arg(long)]
    m: String,
}

#[derive(Debug, Args)]
struct ClassifyArgs {
    /// Symmetric-quiver flop classification (needs --quiver and --m).
    #[arg(long, conflicts_with_all = ["flip", "two_vertex", "irreducible"])]
    flop: bool,
    /// Extended-quiver flip/MFS classification (needs --spec and --m).
    #[arg(long, conflicts_with_all = ["two_vertex", "irreducible"])]
    flip: bool,
    /// Two-vertex local model: framing dimensions a b.
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    two_vertex: Option<Vec<u32>>,
    /// Irreducible-class wall: pair number n and obstruction dimension h1.
    #[arg(long, num_args = 2, value_names = ["N", "H1"], allow_hyphen_values = true, conflicts_with = "two_vertex")]
    irreducible: Option<Vec<i64>>,
    #[arg(long)]
    quiver: Option<String>,
    /// Extended-quiver spec file (base, a, b, c).
    #[arg(long)]
    spec: Option<String>,
    #[arg(long)]
    m: Option<String>,
    /// Loop count for the two-vertex model dimensions.
    #[arg(long, default_value_t = 0)]
    c: u32,
    /// Auxiliary integer weights for flop charge construction, one per
    /// vertex, comma-separated; must pair to zero with m.
    #[arg(long, allow_hyphen_values = true)]
    rho: Option<String>,
}

#[derive(Debug, Args)]
struct SeriesArgs {
    #[command(subcommand)]
    action: SeriesAction,
}

#[derive(Debug, Subcommand)]
enum SeriesAction {
    /// Closed product expansion of the pair series from N and L tables.
    PtFormula(PtFormulaArgs),
    /// Multiply a series by the factors of the given walls.
    WallCross(WallCrossArgs),
    /// Compare the telescoped wall product with the closed expansion.
    Telescope(TelescopeArgs),
    /// DT/PT transform: multiply by the MacMahon factor.
    Dtpt(DtptArgs),
    /// MacMahon coefficients.
    Macmahon(MacmahonArgs),
}

#[derive(Debug, Args)]
struct PtFormulaArgs {
    #[arg(long)]
    n_table: String,
    #[arg(long)]
    l_table: String,
    /// q-window `lo,hi`.
    #[arg(long, allow_hyphen_values = true)]
    window: String,
    #[arg(long)]
    tcap: u32,
}

#[derive(Debug, Args)]
struct WallCrossArgs {
    /// Series table (rows are taken literally, no implicit unit).
    #[arg(long)]
    series: String,
    #[arg(long)]
    walls: String,
    #[arg(long, allow_hyphen_values = true)]
    window: String,
    #[arg(long)]
    tcap: u32,
}

#[derive(Debug, Args)]
struct TelescopeArgs {
    #[arg(long)]
    n_table: String,
    /// Small-t table L (unit constant term implicit).
    #[arg(long)]
    l_table: String,
    #[arg(long)]
    walls: String,
    #[arg(long, allow_hyphen_values = true)]
    window: String,
    #[arg(long)]
    tcap: u32,
}

#[derive(Debug, Args)]
struct DtptArgs {
    /// MacMahon exponent (the relevant Euler characteristic).
    #[arg(long, allow_hyphen_values = true)]
    e: i64,
    /// Pair-series table; rows taken literally.
    #[arg(long)]
    p_table: String,
    #[arg(long, allow_hyphen_values = true)]
    window: String,
    #[arg(long)]
    tcap: u32,
}

#[derive(Debug, Args)]
struct MacmahonArgs {
    #[arg(long, allow_hyphen_values = true)]
    e: i64,
    #[arg(long)]
    qmax: u32,
}

#[derive(Debug, Args)]
struct PresetArgs {
    #[command(subcommand)]
    name: PresetName,
}

#[derive(Debug, Subcommand)]
enum PresetName {
    /// Two-vertex local model.
    ToricFlip {
        #[arg(long, default_value_t = 3)]
        a: u32,
        #[arg(long, default_value_t = 2)]
        b: u32,
        #[arg(long, default_value_t = 5)]
        c: u32,
    },
    /// Framed one-vertex model over Grassmannians.
    GrassmannianFlip {
        #[arg(long, default_value_t = 4)]
        a1: u32,
        #[arg(long, default_value_t = 2)]
        b1: u32,
        #[arg(long, default_value_t = 0)]
        c: u32,
        #[arg(long, default_value_t = 1)]
        m: u32,
    },
    /// Wall lines on an elliptic fibration plus the fiber collection flop.
    EllipticFiber {
        #[arg(long, default_value = "1")]
        d1: String,
        #[arg(long, default_value = "1")]
        d2: String,
        #[arg(long, default_value_t = 1)]
        r: u32,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long, default_value_t = 10)]
        nmax: u32,
    },
    /// Symmetric-product wall over a curve.
    AbelJacobi {
        #[arg(long)]
        g: u32,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long)]
        h1: u32,
    },
    /// Rank-one object against a point sheaf.
    DtptPoint {
        #[arg(long, default_value_t = 1)]
        a: u32,
        #[arg(long, default_value_t = 0)]
        b: u32,
        #[arg(long, default_value_t = 0)]
        c: u32,
        #[arg(long, default_value_t = 3)]
        loops: u32,
        #[arg(long, default_value_t = 1)]
        m: u32,
    },
    /// Two meeting rational curves, pair class (sum, 2).
    #[command(name = "non-irreducible-1")]
    NonIrreducible1 {
        #[arg(long, default_value = "2")]
        d1: String,
        #[arg(long, default_value = "1")]
        d2: String,
    },
    /// One rational curve, pair class (2[C], 4).
    #[command(name = "non-irreducible-2")]
    NonIrreducible2 {
        #[arg(long, default_value = "1")]
        d: String,
    },
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[command(subcommand)]
    action: OracleAction,
}

#[derive(Debug, Subcommand)]
enum OracleAction {
    /// Search for an absolutely simple representation.
    Simple {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        m: String,
        #[arg(long, default_value_t = 2)]
        p: u32,
    },
    /// Count representations passing the framed generation conditions.
    Star {
        /// Extended-quiver spec file.
        #[arg(long)]
        spec: String,
        /// Base dimension vector (the framing vertex gets dimension 1).
        #[arg(long)]
        m: String,
        #[arg(long, default_value_t = 2)]
        p: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((report, negative)) => {
            match cli.format {
                Format::Text => print!("{}", report.to_text()),
                Format::Structured => print!("{}", report.to_structured()),
            }
            if negative {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

fn read_file(path: &str) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::input(format!("cannot read `{path}`: {e}")))
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::input(format!("invalid {what}: {e}")))
}

fn parse_window(text: &str) -> Result<(i64, i64)> {
    let (lo, hi) = text
        .split_once(',')
        .ok_or_else(|| Error::input("window must be `lo,hi`"))?;
    let lo = lo
        .trim()
        .parse()
        .map_err(|_| Error::input(format!("invalid window bound `{lo}`")))?;
    let hi = hi
        .trim()
        .parse()
        .map_err(|_| Error::input(format!("invalid window bound `{hi}`")))?;
    Ok((lo, hi))
}

/// Builds a series from table rows taken literally.
fn series_from_table(
    table: &TableFile,
    window: (i64, i64),
    t_cap: u32,
) -> Result<TruncatedSeries> {
    let mut s = TruncatedSeries::zero(table.num_classes(), window, t_cap)?;
    for row in &table.entries {
        if row.weight.len() != table.num_classes() {
            return Err(Error::input("table row weight length mismatch"));
        }
        s.add_term(row.weight.clone(), row.n, row.value.to_rat()?);
    }
    Ok(s)
}

fn series_dump(series: &TruncatedSeries) -> serde_json::Value {
    let rows: Vec<serde_json::Value> = series
        .terms_sorted()
        .into_iter()
        .map(|(w, n, v)| json!({"weight": w, "n": n, "value": rat_display(&v)}))
        .collect();
    json!({
        "window": [series.window().0, series.window().1],
        "t_cap": series.t_cap(),
        "terms": rows,
    })
}

fn run(cli: &Cli) -> Result<(RunReport, bool)> {
    match &cli.command {
        Command::Walls(args) => cmd_walls(args),
        Command::Simples(args) => cmd_simples(args),
        Command::Classify(args) => cmd_classify(args),
        Command::Series(args) => cmd_series(args),
        Command::Preset(args) => cmd_preset(args),
        Command::Oracle(args) => cmd_oracle(args, cli.budget),
    }
}

fn load_quiver(path: &str) -> Result<(Quiver, String)> {
    let text = read_file(path)?;
    let file: QuiverFile = parse_json(&text, "quiver file")?;
    Ok((file.to_quiver()?, text))
}

fn cmd_walls(args: &WallsArgs) -> Result<(RunReport, bool)> {
    let (quiver, quiver_text) = load_quiver(&args.quiver)?;
    let m = parse_dim_vector(&args.m, &quiver)?;
    let charge: Option<(CentralCharge, String)> = match &args.charge {
        Some(path) => {
            let text = read_file(path)?;
            let file: ChargeFile = parse_json(&text, "charge file")?;
            Some((file.to_charge(&quiver)?, text))
        }
        None => None,
    };
    let rows = wall_report(&m, charge.as_ref().map(|(c, _)| c))?;
    let walls = enumerate_walls(&m)?;
    let coincidences = coincident_wall_pairs(&walls);

    let results = json!({
        "vertices": quiver.vertices(),
        "m": m.entries(),
        "count": rows.len(),
        "walls": rows,
        "coincident_pairs": coincidences,
    });
    let mut inputs: Vec<&[u8]> = vec![quiver_text.as_bytes(), args.m.as_bytes()];
    if let Some((_, text)) = &charge {
        inputs.push(text.as_bytes());
    }
    let mut report = RunReport::new(format!("walls --m {}", args.m), &inputs, results);
    if !coincidences.is_empty() {
        report.warn(Warning::new(
            codes::WALL_COINCIDENCE,
            format!("{} wall pairs define the same hypersurface", coincidences.len()),
        ));
    }
    Ok((report, false))
}

fn cmd_simples(args: &SimplesArgs) -> Result<(RunReport, bool)> {
    let (quiver, quiver_text) = load_quiver(&args.quiver)?;
    let m = parse_dim_vector(&args.m, &quiver)?;
    let verdict = has_simple(&quiver, &m)?;
    let negative = !verdict.exists;
    let results = serde_json::to_value(&verdict).expect("verdict serializes");
    let report = RunReport::new(
        format!("simples --m {}", args.m),
        &[quiver_text.as_bytes(), args.m.as_bytes()],
        results,
    );
    Ok((report, negative))
}

fn classification_results(class: &DiagramClass) -> serde_json::Value {
    serde_json::to_value(class).expect("classification serializes")
}

fn cmd_classify(args: &ClassifyArgs) -> Result<(RunReport, bool)> {
    if let Some(ab) = &args.two_vertex {
        let (a, b) = (ab[0], ab[1]);
        let class = classify_two_vertex(a, b);
        let dims = local_model_dims(a, b, args.c);
        let mut results = classification_results(&class);
        results["dims"] = json!([dims.0, dims.1]);
        let mut report = RunReport::new(
            format!("classify --two-vertex {a} {b} --c {}", args.c),
            &[format!("{a},{b},{}", args.c).as_bytes()],
            results,
        );
        if dims.0 < 0 || dims.1 < 0 {
            report.warn(Warning::new(
                codes::DEGENERATE_MODEL,
                "a side has negative expected dimension; the formula is virtual",
            ));
        }
        return Ok((report, false));
    }
    if let Some(nh) = &args.irreducible {
        let (n, h1) = (nh[0], nh[1]);
        let h1 = u32::try_from(h1).map_err(|_| Error::input("h1 must be nonnegative"))?;
        let class = presets::classify_irreducible_wall(n, h1);
        let report = RunReport::new(
            format!("classify --irreducible {n} {h1}"),
            &[format!("{n},{h1}").as_bytes()],
            classification_results(&class),
        );
        return Ok((report, false));
    }
    if args.flop {
        let path = args
            .quiver
            .as_ref()
            .ok_or_else(|| Error::input("--flop needs --quiver"))?;
        let (quiver, quiver_text) = load_quiver(path)?;
        let m_text = args.m.as_ref().ok_or_else(|| Error::input("--flop needs --m"))?;
        let m = parse_dim_vector(m_text, &quiver)?;
        let class = classify_symmetric_flop(&quiver, &m)?;
        let mut results = classification_results(&class);
        if let Some(rho_text) = &args.rho {
            let rho: Vec<i64> = rho_text
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::input(format!("invalid rho entry `{p}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            let (plus, minus) = flop_charges(&quiver, &m, &rho)?;
            results["charges"] = json!({
                "plus": wallcross::stability::charge_display(&plus),
                "minus": wallcross::stability::charge_display(&minus),
            });
        }
        let report = RunReport::new(
            format!("classify --flop --m {m_text}"),
            &[quiver_text.as_bytes(), m_text.as_bytes()],
            results,
        );
        return Ok((report, false));
    }
    if args.flip {
        let path = args
            .spec
            .as_ref()
            .ok_or_else(|| Error::input("--flip needs --spec"))?;
        let text = read_file(path)?;
        let file: ExtendedSpecFile = parse_json(&text, "extended spec file")?;
        let spec = file.to_spec()?;
        let m_text = args.m.as_ref().ok_or_else(|| Error::input("--flip needs --m"))?;
        let m = parse_dim_vector(m_text, &spec.base)?;
        let class = classify_extended_flip(&spec, &m)?;
        let report = RunReport::new(
            format!("classify --flip --m {m_text}"),
            &[text.as_bytes(), m_text.as_bytes()],
            classification_results(&class),
        );
        return Ok((report, false));
    }
    Err(Error::input(
        "choose one of --flop, --flip, --two-vertex A B, --irreducible N H1",
    ))
}

fn cmd_series(args: &SeriesArgs) -> Result<(RunReport, bool)> {
    match &args.action {
        SeriesAction::Macmahon(a) => {
            let m = mac_mahon(a.e, a.qmax);
            let coefficients: Vec<String> = (0..=a.qmax as i64)
                .map(|n| rat_display(&m.coeff(&vec![], n)))
                .collect();
            let report = RunReport::new(
                format!("series macmahon --e {} --qmax {}", a.e, a.qmax),
                &[format!("{},{}", a.e, a.qmax).as_bytes()],
                json!({"e": a.e, "qmax": a.qmax, "coefficients": coefficients}),
            );
            Ok((report, false))
        }
        SeriesAction::Dtpt(a) => {
            let window = parse_window(&a.window)?;
            let text = read_file(&a.p_table)?;
            let table: TableFile = parse_json(&text, "series table")?;
            let p = series_from_table(&table, window, a.tcap)?;
            let out = dtpt_transform(&p, a.e)?;
            let report = RunReport::new(
                format!("series dtpt --e {} --window {} --tcap {}", a.e, a.window, a.tcap),
                &[text.as_bytes(), a.window.as_bytes()],
                series_dump(&out),
            );
            Ok((report, false))
        }
        SeriesAction::PtFormula(a) => {
            let window = parse_window(&a.window)?;
            let n_text = read_file(&a.n_table)?;
            let l_text = read_file(&a.l_table)?;
            let n_file: TableFile = parse_json(&n_text, "N table")?;
            let l_file: TableFile = parse_json(&l_text, "L table")?;
            if n_file.num_classes() != l_file.num_classes() {
                return Err(Error::input("N and L tables declare different class sets"));
            }
            let out = pt_product_formula(
                &n_file.to_table()?,
                &l_file.to_table()?,
                n_file.num_classes(),
                window,
                a.tcap,
            )?;
            let report = RunReport::new(
                format!("series pt-formula --window {} --tcap {}", a.window, a.tcap),
                &[n_text.as_bytes(), l_text.as_bytes()],
                series_dump(&out),
            );
            Ok((report, false))
        }
        SeriesAction::WallCross(a) => {
            let window = parse_window(&a.window)?;
            let s_text = read_file(&a.series)?;
            let w_text = read_file(&a.walls)?;
            let table: TableFile = parse_json(&s_text, "series table")?;
            let walls_file: WallsFile = parse_json(&w_text, "walls file")?;
            let mut s = series_from_table(&table, window, a.tcap)?;
            for wd in walls_file.to_walls()? {
                s = series::apply_wall_crossing(&s, &wd)?;
            }
            let report = RunReport::new(
                format!("series wall-cross --window {} --tcap {}", a.window, a.tcap),
                &[s_text.as_bytes(), w_text.as_bytes()],
                series_dump(&s),
            );
            Ok((report, false))
        }
        SeriesAction::Telescope(a) => {
            let window = parse_window(&a.window)?;
            let n_text = read_file(&a.n_table)?;
            let l_text = read_file(&a.l_table)?;
            let w_text = read_file(&a.walls)?;
            let n_file: TableFile = parse_json(&n_text, "N table")?;
            let l_file: TableFile = parse_json(&l_text, "L table")?;
            let walls_file: WallsFile = parse_json(&w_text, "walls file")?;
            if n_file.num_classes() != l_file.num_classes() {
                return Err(Error::input("N and L tables declare different class sets"));
            }
            let l_table = l_file.to_table()?;
            if !palindrome_check(&l_table) {
                return Err(Error::precondition("L table must be symmetric under n -> -n"));
            }
            let outcome = telescope_check(
                &n_file.to_table()?,
                &l_table,
                &walls_file.to_walls()?,
                n_file.num_classes(),
                window,
                a.tcap,
            )?;
            let negative = !outcome.matches;
            let report = RunReport::new(
                format!("series telescope --window {} --tcap {}", a.window, a.tcap),
                &[n_text.as_bytes(), l_text.as_bytes(), w_text.as_bytes()],
                serde_json::to_value(&outcome).expect("outcome serializes"),
            );
            Ok((report, negative))
        }
    }
}

fn window_from_nmax(nmax: u32) -> RangeInclusive<i64> {
    -(nmax as i64)..=nmax as i64
}

fn cmd_preset(args: &PresetArgs) -> Result<(RunReport, bool)> {
    match &args.name {
        PresetName::ToricFlip { a, b, c } => {
            let out = presets::preset_toric_flip(*a, *b, *c);
            let mut report = RunReport::new(
                format!("preset toric-flip --a {a} --b {b} --c {c}"),
                &[format!("{a},{b},{c}").as_bytes()],
                serde_json::to_value(&out).expect("report serializes"),
            );
            if out.degenerate {
                report.warn(Warning::new(
                    codes::DEGENERATE_MODEL,
                    "a side has negative expected dimension; the formula is virtual",
                ));
            }
            Ok((report, false))
        }
        PresetName::GrassmannianFlip { a1, b1, c, m } => {
            let out = presets::preset_grassmannian_flip(*a1, *b1, *c, *m)?;
            let report = RunReport::new(
                format!("preset grassmannian-flip --a1 {a1} --b1 {b1} --c {c} --m {m}"),
                &[format!("{a1},{b1},{c},{m}").as_bytes()],
                serde_json::to_value(&out).expect("report serializes"),
            );
            Ok((report, false))
        }
        PresetName::EllipticFiber { d1, d2, r, k, nmax } => {
            let d1: Rat = parse_rational(d1)?;
            let d2: Rat = parse_rational(d2)?;
            let out = presets::preset_elliptic_fiber(&d1, &d2, *r, *k, window_from_nmax(*nmax))?;
            let report = RunReport::new(
                format!(
                    "preset elliptic-fiber --d1 {} --d2 {} --r {r} --k {k} --nmax {nmax}",
                    rat_display(&d1),
                    rat_display(&d2)
                ),
                &[format!("{},{},{r},{k},{nmax}", rat_display(&d1), rat_display(&d2)).as_bytes()],
                serde_json::to_value(&out).expect("report serializes"),
            );
            Ok((report, false))
        }
        PresetName::AbelJacobi { g, n, h1 } => {
            let out = presets::abel_jacobi_model(*g, *n, *h1)?;
            let mut report = RunReport::new(
                format!("preset abel-jacobi --g {g} --n {n} --h1 {h1}"),
                &[format!("{g},{n},{h1}").as_bytes()],
                serde_json::to_value(&out).expect("report serializes"),
            );
            if out.dims.0 < 0 || out.dims.1 < 0 {
                report.warn(Warning::new(
                    codes::DEGENERATE_MODEL,
                    "a symmetric-product side is empty (negative dimension)",
                ));
            }
            Ok((report, false))
        }
        PresetName::DtptPoint { a, b, c, loops, m } => {
            let out = presets::preset_dtpt_point(*a, *b, *c, *loops, *m)?;
            let report = RunReport::new(
                format!("preset dtpt-point --a {a} --b {b} --c {c} --loops {loops} --m {m}"),
                &[format!("{a},{b},{c},{loops},{m}").as_bytes()],
                serde_json::to_value(&out).expect("report serializes"),
            );
            Ok((report, false))
        }
        PresetName::NonIrreducible1 { d1, d2 } => {
            let d1 = parse_rational(d1)?;
            let d2 = parse_rational(d2)?;
            let out = presets::preset_non_irreducible_1(&d1, &d2)?;
            ladder_report("non-irreducible-1", &d1, Some(&d2), out)
        }
        PresetName::NonIrreducible2 { d } => {
            let d = parse_rational(d)?;
            let out = presets::preset_non_irreducible_2(&d)?;
            ladder_report("non-irreducible-2", &d, None, out)
        }
    }
}

fn ladder_report(
    name: &str,
    d1: &Rat,
    d2: Option<&Rat>,
    out: presets::LadderReport,
) -> Result<(RunReport, bool)> {
    let mut command = format!("preset {name} --d1 {}", rat_display(d1));
    if let Some(d2) = d2 {
        command.push_str(&format!(" --d2 {}", rat_display(d2)));
    }
    let digest_input = command.clone();
    let mut report = RunReport::new(
        command,
        &[digest_input.as_bytes()],
        serde_json::to_value(&out).expect("report serializes"),
    );
    report.warn(Warning::new(
        codes::WINDOW_HEURISTIC,
        "ladder walls are candidates from the declared classes; the window has no effective bound",
    ));
    if out.annotations.iter().any(|a| a.contains("conjectural")) {
        report.warn(Warning::new(
            codes::CONJECTURAL_ANNOTATION,
            "scheme-structure annotations are conjectural and not asserted",
        ));
    }
    Ok((report, false))
}

fn cmd_oracle(args: &OracleArgs, budget: u128) -> Result<(RunReport, bool)> {
    match &args.action {
        OracleAction::Simple { quiver, m, p } => {
            let (q, quiver_text) = load_quiver(quiver)?;
            let mv = parse_dim_vector(m, &q)?;
            let sweep = oracle::sweep(&q, &mv, *p, budget, |rep| oracle::is_simple_abs(&q, rep))?;
            let negative = sweep.witnesses == 0;
            let report = RunReport::new(
                format!("oracle simple --m {m} --p {p}"),
                &[quiver_text.as_bytes(), m.as_bytes(), &p.to_le_bytes()],
                serde_json::to_value(&sweep).expect("sweep serializes"),
            );
            Ok((report, negative))
        }
        OracleAction::Star { spec, m, p } => {
            let text = read_file(spec)?;
            let file: ExtendedSpecFile = parse_json(&text, "extended spec file")?;
            let espec = file.to_spec()?;
            let mv = parse_dim_vector(m, &espec.base)?;
            let qstar = wallcross::classify::build_extended(&espec)?;
            let mstar = wallcross::classify::extend_dim(&qstar, &espec, &mv)?;
            let framing = qstar
                .vertex_index(wallcross::classify::FRAMING_VERTEX)
                .ok_or_else(|| Error::input("framing vertex missing"))?;
            let mut plus = 0u64;
            let mut minus = 0u64;
            let mut total = 0u64;
            for rep in oracle::enumerate_reps(&qstar, &mstar, *p, budget)? {
                total += 1;
                if oracle::is_star_plus_stable(&qstar, &rep, framing)? {
                    plus += 1;
                }
                if oracle::is_star_minus_stable(&qstar, &rep, framing)? {
                    minus += 1;
                }
            }
            let report = RunReport::new(
                format!("oracle star --m {m} --p {p}"),
                &[text.as_bytes(), m.as_bytes(), &p.to_le_bytes()],
                json!({"enumerated": total, "plus_stable": plus, "minus_stable": minus}),
            );
            Ok((report, false))
        }
    }
}
