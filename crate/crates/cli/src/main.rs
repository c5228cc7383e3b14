use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use jslope_core::bracket::{
    bracket_with_stats, colored_jones_range, kauffman_lambda, Engine, EngineConfig, KAUFFMAN_MAX_CROSSINGS,
};
use jslope_core::corpus;
use jslope_core::diagram::{build_diagram, counts, twist_reduced_warnings, LinkDiagram};
use jslope_core::graphmodel::{
    add_full_twists, multi_twist_profile, near_alternating_check, WeightedPlanarGraph, DEFAULT_PATH_CAP,
};
use jslope_core::slope::{
    find_m_k, predict_from_graph, slope_report, stable_coeffs, verify, volume_bounds, volume_inputs, Theorem,
    VolumeVariant,
};

#[derive(Parser)]
#[command(name = "jslope", version, about = "Colored Jones degrees, slopes and coefficients of links from weighted planar graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Bracket engine.
    #[arg(long, global = true, default_value = "auto")]
    engine: Engine,
    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Declare the diagram twist-reduced.
    #[arg(long, global = true)]
    twist_reduced: bool,
    /// Add m full twists to every positive edge of a graph input.
    #[arg(long, global = true, value_name = "m")]
    add_full_twists: Option<u32>,
    /// Component orientations, e.g. `0:+,1:-`; `-` reverses the component.
    #[arg(long, global = true)]
    orient: Option<String>,
    /// Include wall-clock times in the output.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Diagram of a weighted planar graph, as PD code.
    Graph2link { input: PathBuf },
    /// Near-alternating and multi-region checks on a graph.
    Classify { input: PathBuf },
    /// Kauffman bracket of a diagram or graph.
    Bracket { input: PathBuf },
    /// Colored Jones polynomial.
    Cjones {
        input: PathBuf,
        #[arg(short = 'n')]
        n: Option<u32>,
        #[arg(long, value_name = "a..b")]
        n_range: Option<String>,
    },
    /// Kauffman polynomial Lambda(a, z).
    Lambda {
        input: PathBuf,
        #[arg(long, default_value_t = KAUFFMAN_MAX_CROSSINGS)]
        max_crossings: usize,
    },
    /// Predicted and fitted Jones slopes.
    Slopes {
        input: PathBuf,
        #[arg(long, value_name = "a..b", default_value = "2..5")]
        n_range: String,
    },
    /// First two and last two coefficients of the reduced colored Jones polynomial.
    Coeffs {
        input: PathBuf,
        #[arg(long, value_name = "a..b", default_value = "2..3")]
        n_range: String,
    },
    /// Volume bounds from twist number and stable coefficients.
    Volume { input: PathBuf },
    /// Twist regions and the number of full twists needed for the multi-region predicate.
    Twist { input: PathBuf },
    /// Compare predictions with computed invariants.
    Verify {
        input: PathBuf,
        #[arg(long, default_value = "degree")]
        theorem: String,
        #[arg(long, value_name = "a..b", default_value = "2..3")]
        n_range: String,
    },
    /// Regenerate the test corpus.
    Corpus {
        #[arg(long, default_value_t = corpus::CORPUS_SEED)]
        seed: u64,
    },
}

enum Input {
    Graph(WeightedPlanarGraph),
    Diagram(LinkDiagram),
}

fn parse_n_range(s: &str) -> anyhow::Result<Vec<u32>> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| anyhow!("n-range {s:?} is not of the form a..b"))?;
    let (a, b): (u32, u32) = (a.trim().parse()?, b.trim().parse()?);
    if a < 2 || b < a {
        bail!("n-range {s:?} must satisfy 2 <= a <= b");
    }
    Ok((a..=b).collect())
}

fn parse_orient(s: &str, comps: usize) -> anyhow::Result<Vec<usize>> {
    let mut flip = Vec::new();
    for item in s.split(',').filter(|x| !x.trim().is_empty()) {
        let (i, sign) = item
            .trim()
            .split_once(':')
            .ok_or_else(|| anyhow!("orientation {item:?} is not of the form index:+ or index:-"))?;
        let i: usize = i.parse()?;
        if i >= comps {
            bail!("component {i} out of range, diagram has {comps}");
        }
        match sign {
            "+" => {}
            "-" => flip.push(i),
            _ => bail!("orientation sign must be + or -, got {sign:?}"),
        }
    }
    Ok(flip)
}

fn read_input(path: &Path, common: &Common) -> anyhow::Result<Input> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let input = if text.trim_start().starts_with('{') {
        let v: Value = serde_json::from_str(&text)?;
        if v.get("vertices").is_some() {
            let mut g = WeightedPlanarGraph::from_json_str(&text)?;
            if let Some(m) = common.add_full_twists {
                g = add_full_twists(&g, m);
            }
            Input::Graph(g)
        } else {
            Input::Diagram(LinkDiagram::from_json_str(&text)?)
        }
    } else {
        Input::Diagram(LinkDiagram::parse_pd(&text)?)
    };
    if common.add_full_twists.is_some() && matches!(input, Input::Diagram(_)) {
        bail!("--add-full-twists needs a graph input");
    }
    Ok(input)
}

fn require_graph(input: Input) -> anyhow::Result<WeightedPlanarGraph> {
    match input {
        Input::Graph(g) => Ok(g),
        Input::Diagram(_) => bail!("this subcommand needs a weighted planar graph (JSON with vertices and edges)"),
    }
}

fn diagram_of(input: &Input, common: &Common) -> anyhow::Result<LinkDiagram> {
    let mut d = match input {
        Input::Graph(g) => build_diagram(g)?,
        Input::Diagram(d) => d.clone(),
    };
    if let Some(o) = &common.orient {
        let flip = parse_orient(o, d.num_components())?;
        d = d.reoriented(&flip)?;
    }
    if common.twist_reduced {
        d = d.with_twist_reduced(true);
    }
    Ok(d)
}

fn config(common: &Common) -> anyhow::Result<EngineConfig> {
    let cfg = EngineConfig {
        engine: common.engine,
        threads: common.threads,
        ..EngineConfig::default()
    };
    cfg.validate()?;
    Ok(cfg)
}

/// For a single negative twist region of weight r, an adequate diagram of the same link has
/// c + r crossings and so z-degree at most c + r - 1 (c + r - 2 unless it is alternating).
fn adequacy_obstruction(g: &WeightedPlanarGraph, d: &LinkDiagram, z_degree: Option<i32>) -> anyhow::Result<Value> {
    let neg = g.negative_edges();
    if neg.len() != 1 {
        return Ok(json!({ "applies": false, "reason": "needs exactly one negative edge" }));
    }
    let r = g.edge(neg[0]).expect("edge listed by negative_edges").weight;
    let c = d.num_crossings() as i64;
    let near_alternating = near_alternating_check(g)?.near_alternating;
    let bound = c + r - 1;
    Ok(json!({
        "applies": near_alternating,
        "r": r,
        "expected_z_degree": c - 2,
        "adequate_crossings": c + r,
        "adequate_z_degree_max": bound,
        "obstructed": near_alternating && z_degree.is_some_and(|z| i64::from(z) > bound),
    }))
}

fn ms(t: Instant) -> u64 {
    t.elapsed().as_millis() as u64
}

/// Result JSON and whether the command succeeded.
fn run(cli: &Cli) -> anyhow::Result<(Value, bool)> {
    let c = &cli.common;
    let start = Instant::now();
    let mut out = match &cli.cmd {
        Cmd::Graph2link { input } => {
            let g = require_graph(read_input(input, c)?)?;
            let d = diagram_of(&Input::Graph(g), c)?;
            let k = counts(&d);
            json!({
                "pd": d.to_pd(),
                "crossings": k.c,
                "components": d.num_components(),
                "writhe": k.writhe,
                "c_plus": k.c_plus,
                "c_minus": k.c_minus,
                "twist_regions": k.tw,
            })
        }
        Cmd::Classify { input } => {
            let g = require_graph(read_input(input, c)?)?;
            let report = near_alternating_check(&g)?;
            let multi = match multi_twist_profile(&g, DEFAULT_PATH_CAP) {
                Ok(p) => serde_json::to_value(p)?,
                Err(e) => json!({ "error": e.kind(), "message": e.to_string() }),
            };
            json!({ "near_alternating": report, "multi_region": multi })
        }
        Cmd::Bracket { input } => {
            let d = diagram_of(&read_input(input, c)?, c)?;
            let (p, stats) = bracket_with_stats(&d, &config(c)?)?;
            json!({
                "invariant": "bracket",
                "engine": stats.engine,
                "poly": p,
                "poly_text": p.to_string(),
                "states_evaluated": stats.states_evaluated,
                "max_width": stats.max_width,
                "coefficient_type": stats.coefficient_type,
            })
        }
        Cmd::Cjones { input, n, n_range } => {
            let d = diagram_of(&read_input(input, c)?, c)?;
            let ns = match (n, n_range) {
                (Some(_), Some(_)) => bail!("give either -n or --n-range"),
                (Some(n), None) if *n >= 2 => vec![*n],
                (Some(n), None) => bail!("n = {n} must be at least 2"),
                (None, Some(r)) => parse_n_range(r)?,
                (None, None) => vec![2],
            };
            let mut rows = Vec::new();
            for (n, j) in ns.iter().zip(colored_jones_range(&d, &ns, &config(c)?)) {
                let j = j?;
                let states: u64 = j.cables.iter().map(|s| s.bracket.states_evaluated).sum();
                rows.push(json!({
                    "invariant": "cjones",
                    "n": n,
                    "engine": j.cables.first().map(|s| s.bracket.engine.clone()),
                    "poly": j.poly,
                    "poly_text": j.poly.to_string(),
                    "reduced": j.reduced,
                    "reduced_text": j.reduced.to_string(),
                    "states_evaluated": states,
                    "cables": j.cables,
                }));
            }
            if rows.len() == 1 {
                rows.pop().unwrap()
            } else {
                Value::Array(rows)
            }
        }
        Cmd::Lambda { input, max_crossings } => {
            let input = read_input(input, c)?;
            let d = diagram_of(&input, c)?;
            let l = kauffman_lambda(&d, *max_crossings)?;
            let mut out = json!({
                "invariant": "lambda",
                "poly": l,
                "poly_text": l.to_string(),
                "z_degree": l.max_second(),
                "crossings": d.num_crossings(),
            });
            if let Input::Graph(g) = &input {
                out["obstruction"] = adequacy_obstruction(g, &d, l.max_second())?;
            }
            out
        }
        Cmd::Slopes { input, n_range } => {
            let g = require_graph(read_input(input, c)?)?;
            let ns = parse_n_range(n_range)?;
            let (d, pred, hyp) = predict_from_graph(&g)?;
            let mut mins = Vec::new();
            let mut maxs = Vec::new();
            for (n, j) in ns.iter().zip(colored_jones_range(&d, &ns, &config(c)?)) {
                let j = j?;
                mins.push((*n, j.poly.min_deg().unwrap_or(0) as i64));
                maxs.push((*n, j.poly.max_deg().unwrap_or(0) as i64));
            }
            let fit = if ns.len() >= 4 {
                serde_json::to_value(slope_report(&mins, &maxs)?)?
            } else {
                json!({ "skipped": "a checked quadratic fit needs at least 4 colours" })
            };
            json!({
                "prediction": pred,
                "hypotheses": hyp,
                "observed_min_degree": mins,
                "observed_max_degree": maxs,
                "fit": fit,
            })
        }
        Cmd::Coeffs { input, n_range } => {
            let g = require_graph(read_input(input, c)?)?;
            serde_json::to_value(stable_coeffs(&g, &parse_n_range(n_range)?, &config(c)?)?)?
        }
        Cmd::Volume { input } => {
            let g = require_graph(read_input(input, c)?)?;
            let (inputs, mut hyp) = volume_inputs(&g)?;
            if c.twist_reduced {
                hyp.twist_reduced = true;
            }
            let reports: Vec<_> = VolumeVariant::ALL
                .iter()
                .map(|&v| volume_bounds(&inputs, &hyp, v))
                .collect();
            json!({ "v3": "1.0149", "reports": reports })
        }
        Cmd::Twist { input } => {
            let g = require_graph(read_input(input, c)?)?;
            let d = diagram_of(&Input::Graph(g.clone()), c)?;
            let k = counts(&d);
            json!({
                "tw": k.tw,
                "regions": k.regions,
                "twist_reduced_warnings": twist_reduced_warnings(&d),
                "full_twists": find_m_k(&g)?,
            })
        }
        Cmd::Verify { input, theorem, n_range } => {
            let g = require_graph(read_input(input, c)?)?;
            let theorem: Theorem = theorem.parse()?;
            let rep = verify(&g, theorem, &parse_n_range(n_range)?, &config(c)?)?;
            let ok = rep.all_pass;
            let mut v = serde_json::to_value(rep)?;
            if c.timing {
                v["runtime_ms"] = json!(ms(start));
            }
            return Ok((v, ok));
        }
        Cmd::Corpus { seed } => {
            let corpus = corpus::generate(*seed)?;
            serde_json::to_value(corpus)?
        }
    };
    if c.timing {
        if let Value::Object(m) = &mut out {
            m.insert("runtime_ms".into(), json!(ms(start)));
        }
    }
    Ok((out, true))
}

fn error_kind(e: &anyhow::Error) -> &'static str {
    if let Some(core) = e.downcast_ref::<jslope_core::Error>() {
        core.kind()
    } else if e.downcast_ref::<std::io::Error>().is_some() {
        "io"
    } else if e.downcast_ref::<serde_json::Error>().is_some() {
        "json"
    } else {
        "argument"
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.common.threads > 0 {
        // only fails if a pool already exists, which cannot happen this early
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.common.threads)
            .build_global();
    }
    match run(&cli) {
        Ok((value, ok)) => {
            let text = serde_json::to_string_pretty(&value).expect("JSON values serialize") + "\n";
            let written = match &cli.common.out {
                Some(p) => std::fs::write(p, &text).map_err(anyhow::Error::from),
                None => std::io::stdout().write_all(text.as_bytes()).map_err(anyhow::Error::from),
            };
            if let Err(e) = written {
                report_error(&e);
                return ExitCode::from(2);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            report_error(&e);
            ExitCode::from(2)
        }
    }
}

fn report_error(e: &anyhow::Error) {
    let v = json!({ "error": error_kind(e), "message": format!("{e:#}") });
    eprintln!("{v}");
}
