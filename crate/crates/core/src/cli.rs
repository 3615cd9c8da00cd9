//! Command-line front end. `run` does all the work and returns the text for
//! both streams plus the exit code, so the binary is a thin wrapper.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::chordal::{chordal_order, clique_number_chordal};
use crate::error::Error;
use crate::exact::{color_distance_set, ColoringReport};
use crate::facefill::{face_fill_gadget, verify_distance_preservation};
use crate::generators::{GenSpec, Model};
use crate::graph::{exact_distance_graph, max_degree, Graph};
use crate::lemmas::{run_suites, Suite};
use crate::oracle::{brute_chromatic_number, DEFAULT_CHROMATIC_LIMIT};
use crate::{bounds, edgelist};

pub const THREADS_ENV: &str = "EXACTCHROMA_THREADS";

pub const EXIT_PASS: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "exactchroma", version, about = "Colorings of exact distance graphs of chordal graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelName {
    Ktree,
    Interval,
    Dary,
    Path,
    Cycle,
    Star,
    Strip,
    Complete,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a graph in edge-list format.
    Gen {
        #[arg(long, value_enum)]
        model: ModelName,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        delta: Option<usize>,
        #[arg(long)]
        radius: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the edge list here and print a JSON report instead.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Color the exact distance-p graph, or the union over a distance set.
    Color {
        #[arg(long)]
        p: u32,
        /// Comma-separated distance set inside 1..=p; defaults to {p}.
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<u32>>,
        file: PathBuf,
    },
    /// Exact chromatic number of the exact distance-p graph.
    Chi {
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = DEFAULT_CHROMATIC_LIMIT)]
        max_n: usize,
        file: PathBuf,
    },
    /// Run structural checks: shadow, desce, path, adj, aic or all.
    Props {
        #[arg(long, default_value = "all")]
        suite: String,
        file: PathBuf,
    },
    /// Build the face-fill gadget for an outer cycle of length k.
    Facefill {
        #[arg(long)]
        k: usize,
        /// Verify that outer distances match the cycle.
        #[arg(long)]
        check: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Error,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Pass => EXIT_PASS,
            Outcome::Fail => EXIT_VIOLATION,
            Outcome::Error => EXIT_USAGE,
        }
    }
}

/// Machine-readable result of one command. Timing is reported on stderr so
/// that this stays byte-identical across runs.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_digest: Option<String>,
    pub outcome: Outcome,
    pub result: Value,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

struct Input {
    graph: Graph,
    digest: String,
}

fn read_graph(path: &Path) -> Result<Input, String> {
    let bytes = std::fs::read(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let digest = hex::encode(Sha256::digest(&bytes));
    let text = String::from_utf8(bytes).map_err(|e| format!("{}: {e}", path.display()))?;
    let graph = edgelist::parse(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(Input { graph, digest })
}

fn error_value(e: &Error) -> Value {
    match e {
        Error::NotChordal(cycle) => json!({ "error": e.to_string(), "cycle": cycle }),
        _ => json!({ "error": e.to_string() }),
    }
}

struct Done {
    digest: Option<String>,
    outcome: Outcome,
    result: Value,
    human: String,
    /// Raw text for stdout in place of the JSON report.
    raw: Option<String>,
}

impl Done {
    fn error(digest: Option<String>, e: &Error) -> Self {
        Done {
            digest,
            outcome: Outcome::Error,
            result: error_value(e),
            human: format!("error: {e}"),
            raw: None,
        }
    }
}

fn need(value: Option<usize>, flag: &str, model: &str) -> Result<usize, Error> {
    value.ok_or_else(|| Error::InvalidParameter(format!("model {model} needs --{flag}")))
}

fn gen_spec(
    model: ModelName,
    n: Option<usize>,
    k: Option<usize>,
    delta: Option<usize>,
    radius: Option<usize>,
    seed: u64,
) -> Result<GenSpec, Error> {
    let m = match model {
        ModelName::Ktree => Model::Ktree {
            n: need(n, "n", "ktree")?,
            k: need(k, "k", "ktree")?,
        },
        ModelName::Interval => Model::Interval { n: need(n, "n", "interval")? },
        ModelName::Dary => Model::Dary {
            delta: need(delta, "delta", "dary")?,
            radius: need(radius, "radius", "dary")?,
        },
        ModelName::Path => Model::Path { n: need(n, "n", "path")? },
        ModelName::Cycle => Model::Cycle { n: need(n, "n", "cycle")? },
        ModelName::Star => Model::Star { n: need(n, "n", "star")? },
        ModelName::Strip => Model::TriangleStrip { n: need(n, "n", "strip")? },
        ModelName::Complete => Model::Complete { n: need(n, "n", "complete")? },
    };
    Ok(GenSpec::new(m, seed))
}

fn cmd_gen(spec: Result<GenSpec, Error>, out: Option<&Path>) -> Done {
    let g = match spec.and_then(|s| s.generate()) {
        Ok(g) => g,
        Err(e) => return Done::error(None, &e),
    };
    let text = edgelist::write(&g);
    let human = format!("generated {} vertices, {} edges", g.n(), g.m());
    match out {
        None => Done {
            digest: None,
            outcome: Outcome::Pass,
            result: Value::Null,
            human,
            raw: Some(text),
        },
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                return Done {
                    digest: None,
                    outcome: Outcome::Error,
                    result: json!({ "error": format!("{}: {e}", path.display()) }),
                    human: format!("error: cannot write {}: {e}", path.display()),
                    raw: None,
                };
            }
            let digest = hex::encode(Sha256::digest(text.as_bytes()));
            Done {
                digest: None,
                outcome: Outcome::Pass,
                result: json!({ "n": g.n(), "m": g.m(), "out": path.display().to_string(), "sha256": digest }),
                human,
                raw: None,
            }
        }
    }
}

fn cmd_color(input: Input, p: u32, set: Option<Vec<u32>>) -> Done {
    let s = set.unwrap_or_else(|| vec![p]);
    match color_distance_set(&input.graph, &s, p) {
        Err(e) => Done::error(Some(input.digest), &e),
        Ok((coloring, report)) => {
            let ok = report.within_bound();
            let human = format!(
                "{} colors, bound {}, proper {}",
                report.colors_used, report.bound, report.proper
            );
            Done {
                digest: Some(input.digest),
                outcome: if ok { Outcome::Pass } else { Outcome::Fail },
                result: serde_json::to_value(ColoringReport::new(&coloring, &report))
                    .expect("report serializes"),
                human,
                raw: None,
            }
        }
    }
}

fn chordal_bound(g: &Graph, p: u32) -> Result<Option<u64>, Error> {
    let Ok(order) = chordal_order(g) else {
        return Ok(None);
    };
    let t = clique_number_chordal(g, &order)?.max(2) as u64;
    let delta = max_degree(g).max(1) as u64;
    bounds::bound_main1(t, p.into(), delta).map(Some)
}

fn cmd_chi(input: Input, p: u32, max_n: usize) -> Done {
    let digest = Some(input.digest);
    let g = &input.graph;
    let computed = (|| {
        let h = exact_distance_graph(g, p)?;
        let chi = brute_chromatic_number(&h, max_n)?;
        Ok::<_, Error>((chi, chordal_bound(g, p)?))
    })();
    match computed {
        Err(e) => Done::error(digest, &e),
        Ok((chi, bound)) => {
            let ok = bound.is_none_or(|b| chi as u64 <= b);
            Done {
                digest,
                outcome: if ok { Outcome::Pass } else { Outcome::Fail },
                result: json!({ "n": g.n(), "p": p, "chi": chi, "bound": bound, "ok": ok }),
                human: match bound {
                    Some(b) => format!("chi = {chi}, bound = {b}"),
                    None => format!("chi = {chi} (input not chordal, no bound)"),
                },
                raw: None,
            }
        }
    }
}

fn cmd_props(input: Input, suite: &str) -> Done {
    let digest = Some(input.digest);
    let Some(suites) = Suite::parse(suite) else {
        return Done::error(
            digest,
            &Error::InvalidParameter(format!("unknown suite {suite:?}")),
        );
    };
    let results = run_suites(&input.graph, &suites);
    let pass = results.iter().all(|r| r.pass);
    let human = results
        .iter()
        .map(|r| format!("{}: {}", r.suite.name(), if r.pass { "pass" } else { "FAIL" }))
        .collect::<Vec<_>>()
        .join("\n");
    Done {
        digest,
        outcome: if pass { Outcome::Pass } else { Outcome::Fail },
        result: json!({ "suites": results }),
        human,
        raw: None,
    }
}

fn cmd_facefill(k: usize, check: bool) -> Done {
    let g = match face_fill_gadget(k) {
        Ok(g) => g,
        Err(e) => return Done::error(None, &e),
    };
    let preserved = check.then(|| verify_distance_preservation(&g));
    let mut result = json!({
        "k": k,
        "n": g.graph.n(),
        "m": g.graph.m(),
        "outer": g.outer,
        "inner": g.inner(),
    });
    if let Some(ok) = preserved {
        result["distances_preserved"] = json!(ok);
    }
    Done {
        digest: None,
        outcome: if preserved == Some(false) { Outcome::Fail } else { Outcome::Pass },
        human: format!(
            "gadget k={k}: {} vertices, {} edges{}",
            g.graph.n(),
            g.graph.m(),
            match preserved {
                Some(true) => ", outer distances preserved",
                Some(false) => ", outer distances CHANGED",
                None => "",
            }
        ),
        result,
        raw: None,
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .map_err(|_| format!("{THREADS_ENV} must be a positive integer, got {raw:?}"))?;
    // A pool that already exists (library use, repeated calls) is kept.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { stdout: String::new(), stderr: text, code }
            } else {
                Output { stdout: text, stderr: String::new(), code }
            };
        }
    };
    if let Err(msg) = configure_threads() {
        return Output {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: EXIT_USAGE,
        };
    }
    let command: Vec<String> = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let start = Instant::now();
    let with_input = |file: &Path, f: &dyn Fn(Input) -> Done| match read_graph(file) {
        Ok(input) => f(input),
        Err(msg) => Done {
            digest: None,
            outcome: Outcome::Error,
            result: json!({ "error": msg }),
            human: format!("error: {msg}"),
            raw: None,
        },
    };
    let done = match cli.command {
        Command::Gen { model, n, k, delta, radius, seed, out } => {
            cmd_gen(gen_spec(model, n, k, delta, radius, seed), out.as_deref())
        }
        Command::Color { p, set, file } => with_input(&file, &|i| cmd_color(i, p, set.clone())),
        Command::Chi { p, max_n, file } => with_input(&file, &|i| cmd_chi(i, p, max_n)),
        Command::Props { suite, file } => with_input(&file, &|i| cmd_props(i, &suite)),
        Command::Facefill { k, check } => cmd_facefill(k, check),
    };
    let elapsed = start.elapsed();
    let stdout = match done.raw {
        Some(raw) => raw,
        None => {
            let report = RunReport {
                command,
                input_digest: done.digest,
                outcome: done.outcome,
                result: done.result,
            };
            let mut s = serde_json::to_string(&report).expect("report serializes");
            s.push('\n');
            s
        }
    };
    Output {
        stdout,
        stderr: format!("{}\nelapsed: {:.3} ms\n", done.human, elapsed.as_secs_f64() * 1e3),
        code: done.outcome.exit_code(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn write_graph(g: &Graph) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(edgelist::write(g).as_bytes()).unwrap();
        f
    }

    fn json_of(out: &Output) -> Value {
        serde_json::from_str(&out.stdout).unwrap()
    }

    fn call(args: &[&str]) -> Output {
        run(std::iter::once("exactchroma").chain(args.iter().copied()))
    }

    #[test]
    fn gen_dary_to_stdout() {
        let out = call(&["gen", "--model", "dary", "--delta", "3", "--radius", "2"]);
        assert_eq!(out.code, 0);
        assert_eq!(edgelist::parse(&out.stdout).unwrap().n(), 10);
    }

    #[test]
    fn gen_ktree_to_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("k.el");
        let p = path.to_str().unwrap();
        let out = call(&["gen", "--model", "ktree", "--n", "30", "--k", "3", "--seed", "7", "--out", p]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert_eq!(json_of(&out)["outcome"], "pass");
        let g = edgelist::parse(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert!(crate::chordal::is_chordal(&g));
    }

    #[test]
    fn gen_missing_parameter() {
        let out = call(&["gen", "--model", "cycle"]);
        assert_eq!(out.code, 2);
    }

    #[test]
    fn color_strip() {
        let f = write_graph(&crate::generators::triangle_strip(10).unwrap());
        let out = call(&["color", "--p", "3", f.path().to_str().unwrap()]);
        assert_eq!(out.code, 0);
        let v = json_of(&out);
        assert_eq!(v["result"]["proper"], true);
        assert_eq!(v["result"]["bound"], 12);
        assert!(v["result"]["colors_used"].as_u64().unwrap() <= 12);
        assert_eq!(v["input_digest"].as_str().unwrap().len(), 64);
        let keys: Vec<&String> = v["result"].as_object().unwrap().keys().collect();
        assert_eq!(
            keys,
            ["n", "p", "S", "t", "delta", "bound", "colors_used", "proper", "colors"]
        );
    }

    #[test]
    fn color_with_set_uses_main2_bound() {
        let g = crate::generators::random_ktree(20, 3, 1).unwrap();
        let f = write_graph(&g);
        let out = call(&["color", "--p", "5", "--set", "3,5", f.path().to_str().unwrap()]);
        assert_eq!(out.code, 0);
        let v = json_of(&out);
        assert_eq!(v["result"]["t"], 4);
        assert_eq!(v["result"]["bound"], 6 * 6 * 6);
    }

    #[test]
    fn color_rejects_cycle() {
        let f = write_graph(&crate::generators::cycle(4).unwrap());
        let out = call(&["color", "--p", "2", f.path().to_str().unwrap()]);
        assert_eq!(out.code, 2);
        let v = json_of(&out);
        assert_eq!(v["outcome"], "error");
        assert_eq!(v["result"]["cycle"].as_array().unwrap().len(), 4);
    }

    #[test]
    fn color_rejects_bad_set() {
        let f = write_graph(&crate::generators::path(4).unwrap());
        let out = call(&["color", "--p", "2", "--set", "3", f.path().to_str().unwrap()]);
        assert_eq!(out.code, 2);
    }

    #[test]
    fn chi_star() {
        let f = write_graph(&crate::generators::star(7).unwrap());
        let out = call(&["chi", "--p", "2", f.path().to_str().unwrap()]);
        assert_eq!(out.code, 0);
        let v = json_of(&out);
        assert_eq!(v["result"]["chi"], 6);
        assert_eq!(v["result"]["bound"], 18);
        assert_eq!(v["result"]["ok"], true);
    }

    #[test]
    fn chi_too_large() {
        let f = write_graph(&crate::generators::path(20).unwrap());
        let out = call(&["chi", "--p", "2", f.path().to_str().unwrap()]);
        assert_eq!(out.code, 2);
    }

    #[test]
    fn props_pass_and_fail() {
        let f = write_graph(&crate::generators::random_ktree(15, 2, 3).unwrap());
        let out = call(&["props", "--suite", "shadow", f.path().to_str().unwrap()]);
        assert_eq!(out.code, 0);
        let f = write_graph(&crate::generators::cycle(4).unwrap());
        let out = call(&["props", "--suite", "shadow", f.path().to_str().unwrap()]);
        assert_eq!(out.code, 1);
        let v = json_of(&out);
        let w = &v["result"]["suites"][0]["witness"];
        assert_eq!(w["vertices"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn facefill_check() {
        let out = call(&["facefill", "--k", "7", "--check"]);
        assert_eq!(out.code, 0);
        let v = json_of(&out);
        assert_eq!(v["result"]["n"], 13);
        assert_eq!(v["result"]["distances_preserved"], true);
        assert_eq!(call(&["facefill", "--k", "3"]).code, 2);
    }

    #[test]
    fn missing_file_and_bad_flags() {
        assert_eq!(call(&["color", "--p", "2", "/nonexistent/x.el"]).code, 2);
        assert_eq!(call(&["color"]).code, 2);
        assert_eq!(call(&["--help"]).code, 0);
    }
}
