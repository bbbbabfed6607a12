//! Argument parsing, dispatch and rendering for the `dlat` binary.
//!
//! Every subcommand is a thin adapter over `dlat_core`. Exit codes: 0 success
//! or pass, 1 mathematical failure, 2 usage error, 3 resource or budget error.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use dlat_core::closure::generated_closure;
use dlat_core::geometry::{decompose_point, generate_patch, product_tile_vertices, TilingConfig};
use dlat_core::semidirect::{phi_backward, phi_forward};
use dlat_core::twisted::Transport;
use dlat_core::units::{deformed_multiply, enumerate_residue_classes, ResidueDistinctVector};
use dlat_core::words::{
    eval_word, parse_word, relation_preset, standard_generators, verify_derived_identities,
    verify_relations, PresetKind, HOLDS_ONLY_NOTE,
};
use dlat_core::{ActionSpec, CycleStructure, IntVector, Permutation, SemiElement};
use serde_json::{json, Value};

use crate::document::{ElementDocument, ReportDocument, SemiDocument};
use crate::mesh::{render_mesh, MeshError, MeshFormat};
use crate::parallel::check_tiling_parallel;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Default element budget for `closure`.
pub const DEFAULT_CLOSURE_BUDGET: usize = 200_000;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] dlat_core::Error),
    #[error(transparent)]
    Mesh(#[from] MeshError),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use dlat_core::Error as E;
        let core = |e: &E| match e {
            E::Budget(_) | E::Overflow => EXIT_BUDGET,
            E::NotInvertible { .. } => EXIT_FAIL,
            _ => EXIT_USAGE,
        };
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Core(e) => core(e),
            CliError::Mesh(MeshError::Core(e)) => core(e),
            CliError::Mesh(MeshError::Io(_)) | CliError::Io(_) => EXIT_BUDGET,
            CliError::Mesh(_) => EXIT_USAGE,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Off,
}

#[derive(Debug, Parser)]
#[command(name = "dlat", version, about = "Exact arithmetic for the twisted lattice addition")]
struct Cli {
    /// Output format; `off` only applies to `tessellate`.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Report wall-clock time (makes output non-deterministic).
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Twisted product lhs * rhs
    Mul {
        #[arg(long)]
        n: usize,
        /// Action permutation in one-line form (default: v -> v-1 cyclically).
        #[arg(long, value_parser = parse_perm)]
        tau: Option<Permutation>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_vector)]
        lhs: IntVector,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_vector)]
        rhs: IntVector,
    },
    /// Two-sided inverse under the twisted product
    Inv {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_perm)]
        tau: Option<Permutation>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_vector)]
        vec: IntVector,
    },
    /// Invertibility through the transport permutation
    IsUnit {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_perm)]
        tau: Option<Permutation>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_vector)]
        vec: IntVector,
    },
    /// Transported product of two residue-distinct vectors
    DeformedMul {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_vector)]
        lhs: IntVector,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_vector)]
        rhs: IntVector,
    },
    /// Residue-distinct vector to (z, s)
    Iso {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_vector)]
        vec: IntVector,
    },
    /// (z, s) to residue-distinct vector
    IsoBack {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_vector)]
        z: IntVector,
        #[arg(long, value_parser = parse_perm)]
        perm: Permutation,
    },
    /// Evaluate a relation preset
    VerifyRelations {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_preset)]
        preset: PresetKind,
    },
    /// Evaluate the derived identities
    VerifyIdentities {
        #[arg(long)]
        n: usize,
    },
    /// Breadth-first closure of generator words
    Closure {
        #[arg(long)]
        n: usize,
        /// Comma-separated words, e.g. `a,b` or `s,t`.
        #[arg(long, default_value = "a,b")]
        generators: String,
        #[arg(long, default_value_t = DEFAULT_CLOSURE_BUDGET)]
        budget: usize,
    },
    /// Residue-class representatives in [0, n)^n
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Split a residue-distinct point into tile translation and base vertex
    Decompose {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_vector)]
        vec: IntVector,
    },
    /// Prism patch as a mesh
    Tessellate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        radius: u32,
    },
    /// Sampled tiling check
    CheckTiling {
        #[arg(long)]
        n: usize,
        /// `lo,hi` for the box [lo, hi]^n (default 0,2n).
        #[arg(long = "box", allow_hyphen_values = true, value_parser = parse_box)]
        bounds: Option<(i64, i64)>,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Cycle structure and product tile of an action
    Cycles {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_parser = parse_perm)]
        tau: Permutation,
    },
}

fn parse_vector(text: &str) -> Result<IntVector, String> {
    if let Some(path) = text.strip_prefix('@') {
        return ElementDocument::read(path.as_ref());
    }
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|e| format!("bad integer {part:?}: {e}"))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(IntVector::new)
}

fn parse_perm(text: &str) -> Result<Permutation, String> {
    let images = text
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|e| format!("bad point {part:?}: {e}"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Permutation::from_images(images).map_err(|e| e.to_string())
}

fn parse_preset(text: &str) -> Result<PresetKind, String> {
    text.parse().map_err(|e: dlat_core::Error| e.to_string())
}

fn parse_box(text: &str) -> Result<(i64, i64), String> {
    let v = parse_vector(text)?;
    match v.as_slice() {
        [lo, hi] => Ok((*lo, *hi)),
        _ => Err(format!("expected lo,hi, got {text:?}")),
    }
}

/// Exit code and the text destined for stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Result of one subcommand before rendering.
struct Response {
    command: &'static str,
    inputs: Value,
    results: Value,
    pass: bool,
    text: String,
    /// Replaces the rendered report (mesh export).
    body: Option<String>,
}

impl Response {
    fn new(command: &'static str, inputs: Value, results: Value, text: String) -> Self {
        Response {
            command,
            inputs,
            results,
            pass: true,
            text,
            body: None,
        }
    }

    fn pass(mut self, pass: bool) -> Self {
        self.pass = pass;
        self
    }
}

/// Parses `argv` (including the program name) and runs the subcommand.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli) {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn execute(cli: &Cli) -> Result<(i32, String), CliError> {
    let is_tessellate = matches!(cli.command, Command::Tessellate { .. });
    if cli.format == Format::Off && !is_tessellate {
        return Err(CliError::Usage("--format off only applies to tessellate".into()));
    }
    let started = Instant::now();
    let response = dispatch(&cli.command, cli.format)?;
    let elapsed = cli.timing.then(|| started.elapsed().as_millis() as u64);
    let code = if response.pass { EXIT_PASS } else { EXIT_FAIL };

    let mut output = match (&response.body, cli.format) {
        (Some(body), _) => body.clone(),
        (None, Format::Json) => {
            let mut text = ReportDocument {
                command: response.command.into(),
                inputs: response.inputs,
                results: response.results,
                pass: response.pass,
                timing_ms: elapsed,
            }
            .to_json();
            text.push('\n');
            text
        }
        (None, _) => {
            let mut text = response.text;
            if let Some(ms) = elapsed {
                writeln!(text, "time: {ms} ms").unwrap();
            }
            text
        }
    };
    if let Some(path) = &cli.out {
        std::fs::write(path, &output)?;
        output = format!("wrote {}\n", path.display());
    }
    Ok((code, output))
}

fn action(n: usize, tau: &Option<Permutation>) -> Result<ActionSpec, CliError> {
    match tau {
        Some(t) if t.len() != n => Err(CliError::Usage(format!(
            "--tau acts on {} points but --n is {n}",
            t.len()
        ))),
        Some(t) => Ok(ActionSpec::new(t.clone())),
        None => Ok(ActionSpec::cyclic(n)?),
    }
}

fn check_n(n: usize, flag: &str, v: &IntVector) -> Result<(), CliError> {
    if v.len() == n {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "{flag} has {} entries but --n is {n}",
            v.len()
        )))
    }
}

fn element(v: &IntVector) -> Value {
    json!(ElementDocument::new(v))
}

fn semi(g: &SemiElement) -> Value {
    json!(SemiDocument::new(g))
}

fn tau_json(tau: &Option<Permutation>) -> Value {
    tau.as_ref().map_or(Value::Null, |t| json!(t.images()))
}

fn dispatch(command: &Command, format: Format) -> Result<Response, CliError> {
    Ok(match command {
        Command::Mul { n, tau, lhs, rhs } => {
            check_n(*n, "--lhs", lhs)?;
            check_n(*n, "--rhs", rhs)?;
            let product = action(*n, tau)?.star_multiply(lhs, rhs)?;
            Response::new(
                "mul",
                json!({ "n": n, "tau": tau_json(tau), "lhs": lhs.as_slice(), "rhs": rhs.as_slice() }),
                json!({ "element": element(&product) }),
                format!("{product}\n"),
            )
        }
        Command::Inv { n, tau, vec } => {
            check_n(*n, "--vec", vec)?;
            let inputs = json!({ "n": n, "tau": tau_json(tau), "vec": vec.as_slice() });
            match action(*n, tau)?.invert(vec) {
                Ok(inverse) => Response::new(
                    "inv",
                    inputs,
                    json!({ "element": element(&inverse) }),
                    format!("{inverse}\n"),
                ),
                Err(dlat_core::Error::NotInvertible { first, second, image }) => Response::new(
                    "inv",
                    inputs,
                    json!({ "invertible": false, "collision": { "first": first, "second": second, "image": image } }),
                    format!("not invertible: points {first} and {second} both move to {image}\n"),
                )
                .pass(false),
                Err(e) => return Err(e.into()),
            }
        }
        Command::IsUnit { n, tau, vec } => {
            check_n(*n, "--vec", vec)?;
            let inputs = json!({ "n": n, "tau": tau_json(tau), "vec": vec.as_slice() });
            match action(*n, tau)?.transport_permutation(vec)? {
                Transport::Bijective(pi) => Response::new(
                    "is-unit",
                    inputs,
                    json!({ "unit": true, "transport": pi.images() }),
                    format!("true\ntransport: {pi}\n"),
                ),
                Transport::NotBijective { first, second, image } => Response::new(
                    "is-unit",
                    inputs,
                    json!({ "unit": false, "collision": { "first": first, "second": second, "image": image } }),
                    format!("false\ncollision: points {first} and {second} both move to {image}\n"),
                ),
            }
        }
        Command::DeformedMul { n, lhs, rhs } => {
            check_n(*n, "--lhs", lhs)?;
            check_n(*n, "--rhs", rhs)?;
            let x = ResidueDistinctVector::new(lhs.clone())?;
            let y = ResidueDistinctVector::new(rhs.clone())?;
            let product = deformed_multiply(&x, &y)?.into_vector();
            Response::new(
                "deformed-mul",
                json!({ "n": n, "lhs": lhs.as_slice(), "rhs": rhs.as_slice() }),
                json!({ "element": element(&product) }),
                format!("{product}\n"),
            )
        }
        Command::Iso { n, vec } => {
            check_n(*n, "--vec", vec)?;
            let g = phi_forward(&ResidueDistinctVector::new(vec.clone())?)?;
            Response::new(
                "iso",
                json!({ "n": n, "vec": vec.as_slice() }),
                json!({ "element": semi(&g) }),
                format!("z = {}\ns = {}\n", g.z, g.s),
            )
        }
        Command::IsoBack { n, z, perm } => {
            if let Some(n) = n {
                check_n(*n, "--z", z)?;
            }
            let g = SemiElement::new(z.clone(), perm.clone())?;
            let x = phi_backward(&g)?.into_vector();
            Response::new(
                "iso-back",
                json!({ "n": g.n(), "z": z.as_slice(), "perm": perm.images() }),
                json!({ "element": element(&x) }),
                format!("{x}\n"),
            )
        }
        Command::VerifyRelations { n, preset } => {
            let report = verify_relations(&relation_preset(*n, *preset)?)?;
            let mut text = String::new();
            for e in &report.entries {
                let status = if e.holds { "ok  " } else { "FAIL" };
                let param = e.parameter.map_or(String::new(), |p| format!(" [{p}]"));
                write!(text, "{status} {}{param}: {}", e.family, e.word).unwrap();
                if !e.holds {
                    write!(text, " = {}", e.value).unwrap();
                }
                text.push('\n');
            }
            let holding = report.entries.iter().filter(|e| e.holds).count();
            writeln!(
                text,
                "{} relations hold out of {} ({}, n = {n})\nnote: {HOLDS_ONLY_NOTE}",
                holding,
                report.entries.len(),
                preset.name()
            )
            .unwrap();
            let entries: Vec<Value> = report
                .entries
                .iter()
                .map(|e| {
                    json!({
                        "family": e.family,
                        "parameter": e.parameter,
                        "word": e.word,
                        "holds": e.holds,
                        "value": semi(&e.value),
                    })
                })
                .collect();
            Response::new(
                "verify-relations",
                json!({ "n": n, "preset": preset.name() }),
                json!({
                    "relations": entries,
                    "holds": report.entries.iter().map(|e| e.holds).collect::<Vec<_>>(),
                    "note": HOLDS_ONLY_NOTE,
                }),
                text,
            )
            .pass(report.pass)
        }
        Command::VerifyIdentities { n } => {
            let report = verify_derived_identities(*n)?;
            let mut text = String::new();
            for id in 1..=7u8 {
                let entries: Vec<_> = report.by_identity(id).collect();
                if entries.is_empty() {
                    continue;
                }
                let ok = entries.iter().filter(|e| e.holds).count();
                writeln!(text, "({id}) {ok}/{} instances hold", entries.len()).unwrap();
                for e in entries.iter().filter(|e| !e.holds) {
                    writeln!(text, "  FAIL {}: {} != {}", e.label, e.lhs_value, e.rhs_value).unwrap();
                }
            }
            writeln!(text, "{}", if report.pass { "all identities hold" } else { "some identities FAIL" })
                .unwrap();
            let entries: Vec<Value> = report
                .entries
                .iter()
                .map(|e| {
                    json!({
                        "identity": e.identity,
                        "label": e.label,
                        "lhs": e.lhs,
                        "rhs": e.rhs,
                        "holds": e.holds,
                        "lhs_value": semi(&e.lhs_value),
                        "rhs_value": semi(&e.rhs_value),
                    })
                })
                .collect();
            Response::new(
                "verify-identities",
                json!({ "n": n }),
                json!({ "identities": entries }),
                text,
            )
            .pass(report.pass)
        }
        Command::Closure { n, generators, budget } => {
            let words = generators
                .split(',')
                .map(|w| parse_word(w.trim()))
                .collect::<Result<Vec<_>, _>>()?;
            let images = words
                .iter()
                .map(|w| eval_word(w, *n))
                .collect::<Result<Vec<_>, _>>()?;
            let summary = generated_closure(&images, *budget)?;
            let gens = standard_generators(*n)?;
            let reached = json!({
                "sigma": summary.contains(&gens.sigma),
                "tau": summary.contains(&gens.tau),
                "gamma": summary.contains(&gens.gamma),
                "a": summary.contains(&gens.a),
                "b": summary.contains(&gens.b),
            });
            let results = json!({
                "visited": summary.visited.len(),
                "exhausted": summary.exhausted,
                "budget_hit": summary.budget_hit,
                "permutations": summary.permutations.len(),
                "all_permutations": summary.reaches_all_permutations(),
                "reached": reached,
                "translation_rank": summary.translation_rank(),
                "full_lattice": summary.translations_span_everything(),
            });
            let mut text = String::new();
            writeln!(text, "visited: {}", summary.visited.len()).unwrap();
            writeln!(
                text,
                "stopped: {}",
                if summary.exhausted { "group exhausted" } else { "element budget" }
            )
            .unwrap();
            writeln!(
                text,
                "permutation parts: {} (all: {})",
                summary.permutations.len(),
                summary.reaches_all_permutations()
            )
            .unwrap();
            for name in ["sigma", "tau", "gamma", "a", "b"] {
                writeln!(text, "reached {name}: {}", reached[name]).unwrap();
            }
            writeln!(
                text,
                "translation rank: {} (all of Z^{n}: {})",
                summary.translation_rank(),
                summary.translations_span_everything()
            )
            .unwrap();
            Response::new(
                "closure",
                json!({ "n": n, "generators": generators, "budget": budget }),
                results,
                text,
            )
        }
        Command::Enumerate { n } => {
            let classes = enumerate_residue_classes(*n)?;
            let text: String = classes.iter().map(|v| format!("{v}\n")).collect();
            Response::new(
                "enumerate",
                json!({ "n": n }),
                json!({
                    "count": classes.len(),
                    "vectors": classes.iter().map(|v| v.as_slice()).collect::<Vec<_>>(),
                }),
                text,
            )
        }
        Command::Decompose { n, vec } => {
            if let Some(n) = n {
                check_n(*n, "--vec", vec)?;
            }
            let inputs = json!({ "n": vec.len(), "vec": vec.as_slice() });
            match decompose_point(vec)? {
                Some(d) => Response::new(
                    "decompose",
                    inputs,
                    json!({ "vertex": true, "t": d.t.as_slice(), "u": d.u.images() }),
                    format!("t = {}\nu = {}\n", d.t, d.u),
                ),
                None => Response::new(
                    "decompose",
                    inputs,
                    json!({ "vertex": false }),
                    "not a vertex: residues repeat\n".into(),
                ),
            }
        }
        Command::Tessellate { n, radius } => {
            let tiles = generate_patch(*n, *radius)?;
            let mut response = Response::new(
                "tessellate",
                json!({ "n": n, "radius": radius }),
                json!({ "tiles": tiles.len() }),
                format!(
                    "{} tiles, {} vertices each (n = {n}, radius {radius})\n",
                    tiles.len(),
                    tiles.first().map_or(0, |t| t.vertices.len())
                ),
            );
            response.body = match format {
                Format::Off => Some(render_mesh(*n, &tiles, MeshFormat::Off)?),
                Format::Json => Some(render_mesh(*n, &tiles, MeshFormat::Json)?),
                Format::Text => None,
            };
            response
        }
        Command::CheckTiling { n, bounds, samples, seed, workers } => {
            let (lo, hi) = bounds.unwrap_or((0, 2 * *n as i64));
            let report = check_tiling_parallel(TilingConfig::new(*n, lo, hi, *samples, *seed), *workers)?;
            let c = &report.counts;
            let v = &report.vertex_set;
            let witnesses: Vec<Value> = c
                .overlap_witnesses
                .iter()
                .map(|(p, tiles)| {
                    json!({
                        "point": p.to_rationals().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                        "tiles": tiles.iter().map(|t| t.as_slice()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let results = json!({
                "tiles": report.tiles,
                "samples": c.samples,
                "covered": c.covered,
                "covered_fraction": report.covered_fraction(),
                "interior_single": c.interior_single,
                "single_fraction": report.single_fraction(),
                "boundary": c.boundary,
                "overlaps": c.overlaps,
                "resamples": c.resamples,
                "overlap_witnesses": witnesses,
                "vertex_set": {
                    "equal": v.equal(),
                    "residue_distinct": v.residue_distinct,
                    "patch_vertices": v.patch_vertices,
                    "only_in_patch": v.only_in_patch.iter().map(|p| p.as_slice()).collect::<Vec<_>>(),
                    "only_residue_distinct": v.only_residue_distinct.iter().map(|p| p.as_slice()).collect::<Vec<_>>(),
                },
            });
            let mut text = String::new();
            writeln!(text, "box: [{lo}, {hi}]^{n}, {} candidate tiles", report.tiles).unwrap();
            writeln!(text, "samples: {} (seed {seed}, denominator {})", c.samples, report.config.denominator).unwrap();
            writeln!(text, "covered: {:.2}% ({})", 100.0 * report.covered_fraction(), c.covered).unwrap();
            writeln!(
                text,
                "interior multiplicity 1: {:.2}% ({})",
                100.0 * report.single_fraction(),
                c.interior_single
            )
            .unwrap();
            writeln!(text, "boundary samples: {}", c.boundary).unwrap();
            writeln!(text, "overlaps: {}", c.overlaps).unwrap();
            writeln!(
                text,
                "vertex set: {} ({} residue-distinct points, {} patch vertices)",
                if v.equal() { "equal" } else { "DIFFERENT" },
                v.residue_distinct,
                v.patch_vertices
            )
            .unwrap();
            writeln!(text, "result: {}", if report.pass() { "PASS" } else { "FAIL" }).unwrap();
            Response::new(
                "check-tiling",
                json!({ "n": n, "box": [lo, hi], "samples": samples, "seed": seed, "workers": workers }),
                results,
                text,
            )
            .pass(report.pass())
        }
        Command::Cycles { n, tau } => {
            if let Some(n) = n {
                if tau.len() != *n {
                    return Err(CliError::Usage(format!("--tau acts on {} points but --n is {n}", tau.len())));
                }
            }
            let cs = CycleStructure::of(tau);
            let tile = product_tile_vertices(tau)?;
            let cycles_text: String = cs
                .cycles()
                .iter()
                .map(|c| format!("({})", c.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" ")))
                .collect();
            let factors: Vec<String> = tile
                .permutohedron_dims
                .iter()
                .map(|d| format!("P{d}"))
                .chain(std::iter::once(format!("I^{}", tile.intervals)))
                .collect();
            Response::new(
                "cycles",
                json!({ "tau": tau.images() }),
                json!({
                    "cycles": cs.cycles(),
                    "lengths": cs.lengths(),
                    "permutohedron_dims": tile.permutohedron_dims,
                    "intervals": tile.intervals,
                    "vertices": tile.vertices.iter().map(|v| v.as_slice()).collect::<Vec<_>>(),
                }),
                format!(
                    "cycles: {cycles_text}\nlengths: {}\nproduct tile: {} ({} vertices)\n",
                    cs.lengths().iter().map(|l| l.to_string()).collect::<Vec<_>>().join(","),
                    factors.join(" x "),
                    tile.vertices.len()
                ),
            )
        }
    })
}
