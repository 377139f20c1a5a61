//! Command dispatch and reporting for the `polyrank` binary.
//!
//! Every command writes one deterministic document to standard output:
//! JSON for everything except `profile`, which writes CSV. Exit status is 0
//! on success, 1 on invalid input and 2 when a vertex budget runs out.

use std::path::{Path as FsPath, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use thiserror::Error;

use polyrank_core::complexes::presets::{orientable_presets, preset, Preset, PRESETS};
use polyrank_core::complexes::{
    classify_orientable, classify_signed, is_rank74, link_of, parse_presentation, presentations_isomorphic,
    ComplexError, Presentation, SearchMode,
};
use polyrank_core::cover::{develop_ball, parse_word, rings, CoverError, Developer, DEFAULT_VERTEX_BUDGET};
use polyrank_core::flats::{
    label_strips, margin_steps, meso_check_at_phase, mesoscopic_profile, model, product_endpoints, FlatsError,
};
use polyrank_core::homology::{abelianize_text, generator_names, h1_of_complex, HomologyError};
use polyrank_core::linkgraph::{automorphism_group_order, named, random_walk_spectrum, GraphError, LinkGraph};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
/// Environment variable overriding the vertex budget.
pub const BUDGET_ENV: &str = "POLYRANK_BUDGET";
/// Preset used when a command needs a complex and none is given.
pub const DEFAULT_PRESET: &str = "V0_1";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("vertex budget of {0} exceeded")]
    Budget(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 1,
            CliError::Budget(_) => 2,
        }
    }
}

impl From<CoverError> for CliError {
    fn from(e: CoverError) -> Self {
        match e {
            CoverError::Budget(n) => CliError::Budget(n),
            e => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<FlatsError> for CliError {
    fn from(e: FlatsError) -> Self {
        match e {
            FlatsError::Cover(c) => c.into(),
            e => CliError::Invalid(e.to_string()),
        }
    }
}

macro_rules! invalid_from {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Invalid(e.to_string())
            }
        }
    )*};
}
invalid_from!(ComplexError, GraphError, HomologyError, std::io::Error);

#[derive(Debug, Parser, Serialize)]
#[command(name = "polyrank", version, about = "Rank-7/4 triangle complexes: links, homology, covers and flats")]
pub struct Cli {
    /// Vertex budget for cover development (overrides POLYRANK_BUDGET).
    #[arg(long, global = true)]
    pub budget: Option<usize>,
    /// Worker threads. Output does not depend on this.
    #[arg(long, global = true)]
    #[serde(skip)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

/// Where the complex comes from.
#[derive(Debug, Args, Serialize, Clone, Default)]
pub struct Source {
    /// Built-in preset name (V0, V0_1, ..., Vbar).
    #[arg(long, conflicts_with = "presentation")]
    pub preset: Option<String>,
    /// JSON file `{"faces": [[1,2,6], ...]}`.
    #[arg(long)]
    pub presentation: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Full,
    SixCases,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Enumerate the orientable classes (or signed ones with --signed).
    Classify {
        #[arg(long)]
        signed: bool,
        #[arg(long, value_enum, default_value = "full")]
        mode: Mode,
        /// Node budget of the signed search.
        #[arg(long, default_value_t = 2_000_000)]
        nodes: u64,
    },
    /// Girth, ampleness, spectrum and automorphisms of a link graph.
    Link {
        /// Adjacency-list file; otherwise the link of --preset/--presentation,
        /// otherwise L(7,4).
        #[arg(long)]
        graph: Option<PathBuf>,
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        spectrum: bool,
        #[arg(long)]
        girth: bool,
        #[arg(long)]
        aut: bool,
    },
    /// Random-walk spectrum of a link graph.
    Spectrum {
        #[arg(long)]
        graph: Option<PathBuf>,
        #[command(flatten)]
        source: Source,
    },
    /// First homology of a complex.
    Homology {
        #[command(flatten)]
        source: Source,
    },
    /// Abelianization of a finite presentation.
    Abelianize {
        /// Number of generators, named a, b, c, ... in order.
        #[arg(long)]
        gens: Option<usize>,
        #[arg(long = "rel")]
        rels: Vec<String>,
    },
    /// Develop a ball of the universal cover.
    Ball {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        radius: usize,
        /// Add the radius and sphere sizes.
        #[arg(long)]
        stats: bool,
    },
    /// Decide whether a word is trivial in the fundamental group.
    Trace {
        #[command(flatten)]
        source: Source,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Rings of the link read through antipodal germs.
    Rings {
        #[command(flatten)]
        source: Source,
    },
    /// Flat strips on a periodic geodesic.
    Strips {
        #[command(flatten)]
        source: Source,
        /// Boundary word, read periodically.
        #[arg(long, allow_hyphen_values = true)]
        boundary: String,
        #[arg(long, default_value_t = 1)]
        height: usize,
        /// Largest period searched.
        #[arg(long, default_value_t = 12)]
        period: usize,
    },
    /// Finite-scale mesoscopic profile at the base vertex, as CSV.
    Profile {
        #[command(flatten)]
        source: Source,
        /// Radius of the developed ball around the center; the least
        /// sufficient radius when omitted.
        #[arg(long)]
        center_radius: Option<usize>,
        /// Largest Euclidean disk radius.
        #[arg(long)]
        max_r: f64,
        /// Euclidean extension margin.
        #[arg(long, default_value_t = 1.0)]
        margin: f64,
    },
    /// Lower-bound construction of flat disks at distance k.
    MesoCheck {
        /// A single k or an inclusive range `a..b`.
        #[arg(long, default_value = "8..14")]
        k: String,
        /// Phase of the base geodesic within its period.
        #[arg(long, default_value_t = 0)]
        phase: usize,
    },
    /// Count distinct endpoints of products of words.
    Probe {
        #[command(flatten)]
        source: Source,
        #[arg(long = "word", allow_hyphen_values = true, required = true)]
        words: Vec<String>,
        /// Largest number of factors.
        #[arg(long, default_value_t = 4)]
        length: usize,
    },
    /// Reproduction bundle of the published tables.
    Report {
        #[arg(long, default_value = "8..14")]
        k: String,
    },
}

/// A finished command: the text for standard output.
pub struct Output {
    pub text: String,
    /// Diagnostics for standard error.
    pub warnings: Vec<String>,
}

/// Effective vertex budget: flag, then environment, then the default.
pub fn effective_budget(flag: Option<usize>) -> Result<usize, CliError> {
    let b = match flag {
        Some(b) => b,
        None => match std::env::var(BUDGET_ENV) {
            Ok(s) => s
                .trim()
                .parse()
                .map_err(|_| CliError::Invalid(format!("{BUDGET_ENV}={s} is not a positive integer")))?,
            Err(_) => DEFAULT_VERTEX_BUDGET,
        },
    };
    if b == 0 {
        return Err(CliError::Invalid("budget must be positive".into()));
    }
    Ok(b)
}

/// SHA-256 of the canonical JSON of the parsed command and effective budget.
pub fn config_hash(cli: &Cli, budget: usize) -> String {
    let config = json!({ "command": &cli.command, "budget": budget });
    hex::encode(Sha256::digest(config.to_string().as_bytes()))
}

fn named_preset(name: &str) -> Result<&'static Preset, CliError> {
    preset(name).ok_or_else(|| {
        let names: Vec<&str> = PRESETS.iter().map(|p| p.name).collect();
        CliError::Invalid(format!("unknown preset {name}; expected one of {}", names.join(", ")))
    })
}

fn read(path: &FsPath) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))
}

impl Source {
    fn given(&self) -> bool {
        self.preset.is_some() || self.presentation.is_some()
    }

    fn load(&self) -> Result<Presentation, CliError> {
        if let Some(path) = &self.presentation {
            return Ok(parse_presentation(&read(path)?)?);
        }
        Ok(named_preset(self.preset.as_deref().unwrap_or(DEFAULT_PRESET))?.presentation())
    }
}

fn load_graph(graph: &Option<PathBuf>, source: &Source) -> Result<LinkGraph, CliError> {
    if let Some(path) = graph {
        return Ok(LinkGraph::parse_adjacency_text(&read(path)?)?);
    }
    if source.given() {
        return Ok(link_of(&source.load()?)?);
    }
    Ok(named::l74())
}

/// Parses `k` or `a..b` (inclusive).
pub fn parse_range(text: &str) -> Result<Vec<u32>, CliError> {
    let bad = || CliError::Invalid(format!("bad range {text}; expected k or a..b"));
    let (a, b) = match text.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let k = text.trim().parse().map_err(|_| bad())?;
            (k, k)
        }
    };
    if a > b {
        return Err(bad());
    }
    Ok((a..=b).collect())
}

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn published_name(p: &Presentation) -> Option<&'static str> {
    PRESETS.iter().find(|q| presentations_isomorphic(&q.presentation(), p)).map(|q| q.name)
}

fn class_rows(classes: &[polyrank_core::complexes::ComplexClass]) -> Vec<Value> {
    classes
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let faces: Vec<[i8; 3]> = c.canonical.faces().to_vec();
            json!({
                "index": i,
                "canonical_faces": faces,
                "type_tag": c.type_tag,
                "orientable": c.orientable,
                "h1": h1_of_complex(&c.canonical),
                "h1_text": h1_of_complex(&c.canonical).to_string(),
                "link_ok": is_rank74(&c.canonical),
                "euler_characteristic": c.canonical.euler_characteristic(),
                "mirror_class": c.mirror_class,
                "published": published_name(&c.canonical),
            })
        })
        .collect()
}

fn link_report(g: &LinkGraph, spectrum: bool, girth: bool, aut: bool) -> Result<Value, CliError> {
    let all = !(spectrum || girth || aut);
    let mut out = serde_json::Map::new();
    if all || girth {
        out.insert("girth".into(), json!(g.girth()));
        out.insert("ample".into(), json!(g.is_ample()));
    }
    if all || spectrum {
        let s = random_walk_spectrum(g)?;
        out.insert("eigenvalues".into(), json!(s.eigenvalues));
        out.insert("lambda1".into(), json!(s.lambda1));
    }
    if all || aut {
        out.insert("aut_order".into(), json!(automorphism_group_order(g)?.order));
    }
    Ok(Value::Object(out))
}

fn ring_rows(p: &Presentation) -> Result<Vec<Value>, CliError> {
    Ok(rings(p)?
        .iter()
        .map(|r| json!({ "letters": r.letters, "length": r.len() }))
        .collect())
}

fn meso_rows(ks: &[u32], phase: usize, budget: usize) -> Result<Vec<Value>, CliError> {
    ks.iter()
        .map(|&k| Ok(json!(meso_check_at_phase(k, phase, budget)?)))
        .collect()
}

fn abelianize(gens: Option<usize>, rels: &[String]) -> Result<Value, CliError> {
    let rels: Vec<&str> = rels.iter().map(String::as_str).collect();
    let names: Vec<char> = match gens {
        Some(n) if n > 26 => return Err(CliError::Invalid(format!("at most 26 generators, got {n}"))),
        Some(n) => ('a'..='z').take(n).collect(),
        None => generator_names(&rels),
    };
    Ok(json!(abelianize_text(&names, &rels)?))
}

fn report(ks: &[u32], budget: usize) -> Result<Value, CliError> {
    let classes = classify_orientable(SearchMode::Full);
    let mut histogram = std::collections::BTreeMap::new();
    for c in &classes {
        *histogram.entry(c.type_tag).or_insert(0usize) += 1;
    }
    let histogram: Vec<Value> = histogram.into_iter().map(|(t, n)| json!([t, n])).collect();
    let presets: Vec<Value> = PRESETS
        .iter()
        .map(|q| {
            let p = q.presentation();
            let h1 = h1_of_complex(&p);
            let pi1 = abelianize_text(&generator_names(q.relators), q.relators)?;
            Ok(json!({
                "name": q.name,
                "type_tag": p.type_tag(),
                "orientable": p.is_orientable(),
                "euler_characteristic": p.euler_characteristic(),
                "h1": h1.to_string(),
                "h1_published": q.h1_text(),
                "h1_matches": h1.to_string() == q.h1_text(),
                "pi1_abelianized": pi1.to_string(),
                "pi1_matches": pi1 == h1,
            }))
        })
        .collect::<Result<_, CliError>>()?;
    let mut spectra = vec![json!({ "graph": "L(7,4)", "report": link_report(&named::l74(), true, true, false)? })];
    for q in PRESETS.iter() {
        let g = link_of(&q.presentation())?;
        spectra.push(json!({ "graph": format!("link({})", q.name), "report": link_report(&g, true, true, false)? }));
    }
    let ring_table: Vec<Value> = PRESETS
        .iter()
        .map(|q| Ok(json!({ "name": q.name, "rings": ring_rows(&q.presentation())? })))
        .collect::<Result<_, CliError>>()?;
    Ok(json!({
        "classes": class_rows(&classes),
        "class_count": classes.len(),
        "type_histogram": histogram,
        "orientable_presets": orientable_presets().count(),
        "presets": presets,
        "spectra": spectra,
        "rings": ring_table,
        "meso": meso_rows(ks, 0, budget)?,
    }))
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let budget = effective_budget(cli.budget)?;
    let mut warnings = Vec::new();
    let text = match &cli.command {
        Command::Classify { signed, mode, nodes } => {
            if *signed {
                let r = classify_signed(*nodes);
                if !r.complete {
                    warnings.push(format!("signed search stopped after {} nodes", r.nodes));
                }
                pretty(&class_rows(&r.classes))
            } else {
                let mode = match mode {
                    Mode::Full => SearchMode::Full,
                    Mode::SixCases => SearchMode::SixCases,
                };
                pretty(&class_rows(&classify_orientable(mode)))
            }
        }
        Command::Link { graph, source, spectrum, girth, aut } => {
            pretty(&link_report(&load_graph(graph, source)?, *spectrum, *girth, *aut)?)
        }
        Command::Spectrum { graph, source } => pretty(&random_walk_spectrum(&load_graph(graph, source)?)?),
        Command::Homology { source } => pretty(&h1_of_complex(&source.load()?)),
        Command::Abelianize { gens, rels } => pretty(&abelianize(*gens, rels)?),
        Command::Ball { source, radius, stats } => {
            let s = develop_ball(&source.load()?, *radius, budget)?.stats();
            if *stats {
                pretty(&s)
            } else {
                pretty(&json!({ "vertices": s.vertices, "edges": s.edges, "triangles": s.triangles }))
            }
        }
        Command::Trace { source, word } => {
            let w = parse_word(word)?;
            let mut d = Developer::new(&source.load()?, budget)?;
            let trivial = d.is_trivial(&w)?;
            pretty(&json!({ "word": w, "trivial": trivial }))
        }
        Command::Rings { source } => pretty(&ring_rows(&source.load()?)?),
        Command::Strips { source, boundary, height, period } => {
            let strips = label_strips(&source.load()?, &parse_word(boundary)?, *height, *period)?;
            let rows: Vec<Value> = strips
                .iter()
                .map(|s| json!({ "period": s.period, "height": s.height, "bottom": s.bottom(), "top": s.top(), "rows": s.rows }))
                .collect();
            pretty(&json!({ "count": strips.len(), "strips": rows }))
        }
        Command::Profile { source, center_radius, max_r, margin } => {
            if !max_r.is_finite() || *max_r < 0.0 {
                return Err(CliError::Invalid(format!("--max-r {max_r} must be nonnegative")));
            }
            if !margin.is_finite() || *margin < 0.0 {
                return Err(CliError::Invalid(format!("--margin {margin} must be nonnegative")));
            }
            let radii: Vec<u32> = (1..).take_while(|&m| model::grid_radius(m) <= max_r + 1e-12).collect();
            let top = radii.last().copied().unwrap_or(0);
            let need = model::grid_radius(top + margin_steps(*margin)).ceil() as usize + 1;
            let p = source.load()?;
            let b = develop_ball(&p, center_radius.unwrap_or(need), budget)?;
            mesoscopic_profile(&b, &p, b.base(), &radii, *margin)?.to_csv()
        }
        Command::MesoCheck { k, phase } => pretty(&meso_rows(&parse_range(k)?, *phase, budget)?),
        Command::Probe { source, words, length } => {
            let words = words.iter().map(|w| parse_word(w)).collect::<Result<Vec<_>, _>>()?;
            if words.iter().any(Vec::is_empty) {
                return Err(CliError::Invalid("probe words must be nonempty".into()));
            }
            let mut d = Developer::new(&source.load()?, budget)?;
            let (distinct, total) = product_endpoints(&mut d, &words, *length)?;
            pretty(&json!({ "distinct": distinct, "total": total, "free": distinct == total }))
        }
        Command::Report { k } => pretty(&json!({
            "tool": "polyrank",
            "version": VERSION,
            "config_hash": config_hash(cli, budget),
            "tables": report(&parse_range(k)?, budget)?,
        })),
    };
    Ok(Output { text, warnings })
}
