//! The acceptance criteria, one function each. Every criterion prints a
//! single PASS/FAIL line; the test fails if any criterion fails.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use exactchroma::bounds::{binomial, bound_main2};
use exactchroma::chordal::{chordal_order, clique_number_chordal};
use exactchroma::edgelist;
use exactchroma::facefill::{face_fill_gadget, verify_distance_preservation};
use exactchroma::generators::{
    complete, complete_dary_tree, path, random_interval_graph, random_ktree, star,
    triangle_strip,
};
use exactchroma::graph::{max_degree, union_graphs};
use exactchroma::lemmas::{run_suite, run_suites, Suite};
use exactchroma::oracle::{all_graphs, brute_chromatic_number, brute_is_chordal};
use exactchroma::{combined_coloring, exact_color, exact_distance_graph, is_chordal, verify_proper, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

/// 200 seeded k-trees, k cycling through 1..=4, n in k+1..=60.
fn ktree_corpus() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6b74);
    (0..200u64)
        .map(|i| {
            let k = 1 + (i % 4) as usize;
            let n = rng.random_range(k + 1..=60);
            random_ktree(n, k, i).unwrap()
        })
        .collect()
}

/// Chordal graphs on at most 12 vertices from every generator family.
fn small_corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for k in 1..=4 {
        for n in [k + 1, 6, 9, 12] {
            if n <= k {
                continue;
            }
            for seed in 0..3 {
                out.push((format!("ktree(n={n},k={k},seed={seed})"), random_ktree(n, k, seed).unwrap()));
            }
        }
    }
    for n in [4, 8, 12] {
        for seed in 0..4 {
            out.push((format!("interval(n={n},seed={seed})"), random_interval_graph(n, seed).unwrap()));
        }
    }
    for n in [3, 7, 12] {
        out.push((format!("strip({n})"), triangle_strip(n).unwrap()));
    }
    for n in [1, 2, 5, 12] {
        out.push((format!("path({n})"), path(n).unwrap()));
    }
    for n in [3, 7, 12] {
        out.push((format!("star({n})"), star(n).unwrap()));
    }
    out.push(("dary(2,2)".into(), complete_dary_tree(2, 2).unwrap()));
    out.push(("dary(3,2)".into(), complete_dary_tree(3, 2).unwrap()));
    out.push(("complete(5)".into(), complete(5)));
    out
}

fn bound_main1_for(g: &Graph, p: u32) -> u64 {
    let order = chordal_order(g).unwrap();
    let t = (clique_number_chordal(g, &order).unwrap() as u64).max(2);
    let pairs = binomial(t, 2).unwrap();
    if p % 2 == 1 {
        pairs * (u64::from(p) + 1)
    } else {
        pairs * (max_degree(g).max(1) as u64) * (u64::from(p) + 1)
    }
}

fn main1_criterion(ps: &[u32]) -> Outcome {
    let corpus = ktree_corpus();
    let mut worst = 0f64;
    for (i, g) in corpus.iter().enumerate() {
        for &p in ps {
            let (coloring, _) = exact_color(g, p).map_err(|e| format!("graph {i}, p={p}: {e}"))?;
            let h = exact_distance_graph(g, p).unwrap();
            if !verify_proper(&h, &coloring).unwrap().is_ok() {
                return Err(format!("graph {i}, p={p}: coloring not proper"));
            }
            let bound = bound_main1_for(g, p);
            let used = coloring.colors_used() as u64;
            if used > bound {
                return Err(format!("graph {i}, p={p}: {used} colors > bound {bound}"));
            }
            worst = worst.max(used as f64 / bound as f64);
        }
    }
    Ok(format!(
        "{} graphs x p in {ps:?}; max colors/bound = {worst:.3}",
        corpus.len()
    ))
}

fn criterion_1() -> Outcome {
    main1_criterion(&[3, 5, 7])
}

fn criterion_2() -> Outcome {
    main1_criterion(&[2, 4, 6])
}

fn criterion_3() -> Outcome {
    let corpus = small_corpus();
    let mut checks = 0;
    for (name, g) in &corpus {
        for p in 1..=5 {
            let h = exact_distance_graph(g, p).unwrap();
            let chi = brute_chromatic_number(&h, 12).map_err(|e| format!("{name}: {e}"))?;
            let (coloring, report) = exact_color(g, p).map_err(|e| format!("{name}: {e}"))?;
            let used = coloring.colors_used();
            if !report.proper || chi > used || used as u64 > report.bound {
                return Err(format!(
                    "{name}, p={p}: chi={chi}, colors_used={used}, bound={}, proper={}",
                    report.bound, report.proper
                ));
            }
            checks += 1;
        }
    }
    Ok(format!("{checks} (graph, p) pairs: chi <= colors_used <= bound"))
}

fn distance_sets() -> Vec<Vec<u32>> {
    (1u32..1 << 7)
        .filter(|m| m.count_ones() <= 3)
        .map(|m| (1..=7).filter(|d| m & (1 << (d - 1)) != 0).collect())
        .collect()
}

fn criterion_4() -> Outcome {
    let corpus = small_corpus();
    let sets = distance_sets();
    let mut checks = 0;
    for (name, g) in &corpus {
        let order = chordal_order(g).unwrap();
        let t = (clique_number_chordal(g, &order).unwrap() as u64).max(2);
        let delta = (max_degree(g) as u64).max(1);
        let graphs: Vec<Graph> = (1..=7).map(|d| exact_distance_graph(g, d).unwrap()).collect();
        for s in &sets {
            let p = *s.last().unwrap();
            let c = combined_coloring(g, s, p).map_err(|e| format!("{name}, S={s:?}: {e}"))?;
            let union = union_graphs(
                &s.iter().map(|&d| graphs[d as usize - 1].clone()).collect::<Vec<_>>(),
            )
            .unwrap();
            if !verify_proper(&union, &c).unwrap().is_ok() {
                return Err(format!("{name}, S={s:?}: not proper on the union"));
            }
            let bound = bound_main2(t, p, s, delta).unwrap();
            if c.colors_used() as u64 > bound {
                return Err(format!(
                    "{name}, S={s:?}: {} colors > bound {bound}",
                    c.colors_used()
                ));
            }
            checks += 1;
        }
    }
    Ok(format!("{} graphs x {} sets = {checks} checks", corpus.len(), sets.len()))
}

fn criterion_5() -> Outcome {
    let graphs: Vec<(String, Graph)> = small_corpus()
        .into_iter()
        .chain(
            ktree_corpus()
                .into_iter()
                .enumerate()
                .map(|(i, g)| (format!("ktree corpus #{i}"), g)),
        )
        .collect();
    let mut checks = 0u64;
    for (name, g) in &graphs {
        for r in run_suites(g, &Suite::ALL) {
            if !r.pass {
                return Err(format!("{name}: suite {} failed: {:?}", r.suite.name(), r.witness));
            }
            checks += r.checks;
        }
    }
    let c4 = run_suite(&exactchroma::generators::cycle(4).unwrap(), Suite::Shadow);
    match (&c4.pass, &c4.witness) {
        (false, Some(w)) if w.vertices.len() == 2 => Ok(format!(
            "{} chordal graphs, {checks} checks; C4 shadow witness {:?}",
            graphs.len(),
            w.vertices
        )),
        _ => Err(format!("C4 did not fail the shadow suite with a witness: {c4:?}")),
    }
}

fn criterion_6() -> Outcome {
    let mut exhaustive = 0;
    for n in 1..=6 {
        for g in all_graphs(n) {
            if is_chordal(&g) != brute_is_chordal(&g).unwrap() {
                return Err(format!("disagreement on {:?}", g.edges().collect::<Vec<_>>()));
            }
            exhaustive += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x63686f);
    for _ in 0..1000 {
        let n = rng.random_range(1..=10);
        let density: f64 = rng.random_range(0.1..0.9);
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.random_bool(density))
            .collect();
        let g = Graph::from_edge_list(n, edges).unwrap();
        if is_chordal(&g) != brute_is_chordal(&g).unwrap() {
            return Err(format!("disagreement on {:?}", g.edges().collect::<Vec<_>>()));
        }
    }
    Ok(format!("{exhaustive} exhaustive graphs (n <= 6) + 1000 random (n <= 10) agree"))
}

fn criterion_7() -> Outcome {
    for k in 4..=32 {
        let g = face_fill_gadget(k).map_err(|e| e.to_string())?;
        if !verify_distance_preservation(&g) {
            return Err(format!("k={k}: outer distances changed"));
        }
    }
    let g = face_fill_gadget(7).unwrap();
    let outer = g.graph.induced_subgraph(&g.outer).0;
    let inner = g.graph.induced_subgraph(&g.inner()).0;
    let is_cycle = |h: &Graph, len: usize| {
        h.n() == len && h.m() == len && h.vertices().all(|v| h.degree(v) == 2)
            && exactchroma::graph::connected_components(h).len() == 1
    };
    if g.graph.n() != 13 || !is_cycle(&outer, 7) || !is_cycle(&inner, 6) {
        return Err(format!("k=7 gadget has {} vertices, {} edges", g.graph.n(), g.graph.m()));
    }
    Ok(format!(
        "k = 4..32 preserve distances; k=7 gadget: {} vertices, {} edges, outer C7, inner C6",
        g.graph.n(),
        g.graph.m()
    ))
}

fn run_bin(args: &[&str], dir: &Path) -> (Vec<u8>, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_exactchroma"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs");
    (out.stdout, out.status.code().unwrap_or(-1))
}

fn criterion_8() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let write = |name: &str, g: &Graph| std::fs::write(dir.path().join(name), edgelist::write(g));
    write("ktree.el", &random_ktree(30, 3, 7).unwrap()).unwrap();
    write("strip.el", &triangle_strip(12).unwrap()).unwrap();
    write("star7.el", &star(7).unwrap()).unwrap();
    write("c4.el", &exactchroma::generators::cycle(4).unwrap()).unwrap();
    let commands: &[&[&str]] = &[
        &["gen", "--model", "ktree", "--n", "30", "--k", "3", "--seed", "7"],
        &["gen", "--model", "interval", "--n", "25", "--seed", "3", "--out", "gen.el"],
        &["gen", "--model", "dary", "--delta", "3", "--radius", "2"],
        &["color", "--p", "3", "strip.el"],
        &["color", "--p", "4", "ktree.el"],
        &["color", "--p", "5", "--set", "3,5", "ktree.el"],
        &["color", "--p", "6", "--set", "1,2,6", "ktree.el"],
        &["color", "--p", "2", "c4.el"],
        &["chi", "--p", "2", "star7.el"],
        &["props", "--suite", "all", "ktree.el"],
        &["props", "--suite", "shadow", "c4.el"],
        &["facefill", "--k", "7", "--check"],
    ];
    for args in commands {
        let (first, code1) = run_bin(args, dir.path());
        let (second, code2) = run_bin(args, dir.path());
        if first != second || code1 != code2 {
            return Err(format!("{args:?}: outputs differ between runs"));
        }
        if first.is_empty() {
            return Err(format!("{args:?}: no output"));
        }
        if args[0] != "gen" || args.contains(&"--out") {
            serde_json::from_slice::<serde_json::Value>(&first)
                .map_err(|e| format!("{args:?}: invalid JSON: {e}"))?;
        }
    }
    Ok(format!("{} commands byte-identical across repeated runs", commands.len()))
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 8] = [
        ("1 odd-p bound soundness", criterion_1, Duration::from_secs(10)),
        ("2 even-p bound soundness", criterion_2, Duration::from_secs(10)),
        ("3 chi <= colors_used <= bound", criterion_3, Duration::from_secs(60)),
        ("4 distance-set unions", criterion_4, Duration::from_secs(120)),
        ("5 structural lemma suites", criterion_5, Duration::from_secs(30)),
        ("6 chordality cross-check", criterion_6, Duration::from_secs(60)),
        ("7 face fill gadget", criterion_7, Duration::from_secs(1)),
        ("8 deterministic CLI output", criterion_8, Duration::from_secs(60)),
    ];
    let mut failed = Vec::new();
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= budget => (true, d),
            Ok(d) => (false, format!("{d}; took {elapsed:.2?}, budget {budget:?}")),
            Err(d) => (false, d),
        };
        println!(
            "criterion {name}: {} ({elapsed:.2?}) {detail}",
            if ok { "PASS" } else { "FAIL" }
        );
        if !ok {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
