//! Acceptance criteria 1 to 7. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gallai_product::base::{gallai_base_decomposition, verify_base};
use gallai_product::catalog::{bicyclic_graphs, connected_graphs, generate, trees, unicyclic_graphs, GenKind};
use gallai_product::oracle::{
    min_path_decomposition, random_subdivision, subdivision_invariance_check, DEFAULT_ORACLE_BUDGET,
};
use gallai_product::product::cycle_product;
use gallai_product::structured::{
    bicyclic_decompose, decompose, proof_branch, unicyclic_decompose, verify_product, PROOF_BRANCHES,
};
use gallai_product::sweep::{grid_instances, run_sweep, Grid, SweepReport};
use gallai_product::Graph;

struct Outcome {
    pass: bool,
    detail: String,
    info: Vec<String>,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into(), info: Vec::new() }
}

fn p(g: &Graph) -> usize {
    min_path_decomposition(g, DEFAULT_ORACLE_BUDGET).expect("oracle within budget").value
}

fn sweep_summary(r: &SweepReport) -> String {
    let mut s = format!("{} instances, {} failed, max ratio {:.3}", r.instances, r.failed, r.max_ratio);
    if let Some(f) = r.failures.first() {
        s.push_str(&format!("; first failure {:?} x {:?}: {:?}", f.g.edges(), f.h.edges(), f.error));
    }
    s
}

fn base_catalog() -> Outcome {
    let mut sizes = Vec::new();
    let mut failures = Vec::new();
    for n in 1..=7 {
        let graphs = connected_graphs(n, None);
        sizes.push(graphs.len());
        if n < 2 {
            continue;
        }
        for h in &graphs {
            match gallai_base_decomposition(h) {
                Ok(d) => {
                    let r = verify_base(h, &d);
                    if !r.passed {
                        failures.push(format!("{:?}: {:?}", h.edges(), r.failures));
                    }
                }
                Err(e) => failures.push(format!("{:?}: {e}", h.edges())),
            }
        }
    }
    let total: usize = sizes.iter().sum();
    let detail = format!(
        "catalog sizes n=1..7 {sizes:?} (total {total}), {} checked, {} failures{}",
        total - sizes[0],
        failures.len(),
        failures.first().map(|f| format!("; first {f}")).unwrap_or_default()
    );
    outcome(failures.is_empty() && total == 996, detail)
}

fn complete_graphs() -> Outcome {
    let k4 = Graph::complete(4);
    let d4 = gallai_base_decomposition(&k4).expect("K4");
    let k5 = Graph::complete(5);
    let d5 = gallai_base_decomposition(&k5).expect("K5");
    let k4_ok = d4.path_count() == 2 && verify_base(&k4, &d4).passed;
    let k5_ok = d5.path_count() == 5
        && d5.odd_odd.is_empty()
        && d5.open_trails.is_empty()
        && d5.closed_trails.len() == 1
        && d5.closed_trails[0].r() == 5
        && verify_base(&k5, &d5).passed;
    let detail = format!(
        "K4 {} paths; K5 {} paths in {} closed and {} open groups",
        d4.path_count(),
        d5.path_count(),
        d5.closed_trails.len(),
        d5.open_trails.len() + d5.odd_odd.len()
    );
    outcome(k4_ok && k5_ok, detail)
}

fn paths_and_cycles() -> Outcome {
    let r = run_sweep(&grid_instances(Grid::PathsCycles, 0).expect("grid"));
    outcome(r.ok() && r.instances > 0 && r.max_ratio <= 1.0, sweep_summary(&r))
}

fn special_families() -> Outcome {
    let instances = grid_instances(Grid::Families, 0).expect("grid");
    let mut failures = Vec::new();
    let mut parts = 0;
    for inst in &instances {
        let (g, h) = (&inst.g, &inst.h);
        let half = g.n() * h.n() / 2;
        match decompose(g, h) {
            Ok(d) => {
                let r = verify_product(g, h, &d);
                parts += d.parts.len();
                if !r.passed {
                    failures.push(format!("{:?} x {:?}: {:?}", g.edges(), h.edges(), r.failures));
                } else if d.len() > half {
                    failures.push(format!("{:?} x {:?}: {} paths above {half}", g.edges(), h.edges(), d.len()));
                } else if let Some(part) = d.parts.iter().find(|p| !p.meets_claim()) {
                    failures.push(format!("{:?} x {:?}: {part:?}", g.edges(), h.edges()));
                }
            }
            Err(e) => failures.push(format!("{:?} x {:?}: {e}", g.edges(), h.edges())),
        }
    }
    let detail = format!(
        "{} instances, {parts} component claims, {} failures{}",
        instances.len(),
        failures.len(),
        failures.first().map(|f| format!("; first {f}")).unwrap_or_default()
    );
    outcome(failures.is_empty() && !instances.is_empty(), detail)
}

fn theorem_route(g: &Graph, h: &Graph) -> Option<&'static str> {
    let d = if g.m() == g.n() { unicyclic_decompose(g, h) } else { bicyclic_decompose(g, h) };
    d.ok().filter(|d| verify_product(g, h, d).passed).and_then(|d| proof_branch(&d.source))
}

fn theorems() -> Outcome {
    let r = run_sweep(&grid_instances(Grid::Theorems, 0).expect("grid"));
    let dead = r.dead_branches.clone();
    let detail = format!(
        "{}; {} of {} proof branches exercised{}",
        sweep_summary(&r),
        PROOF_BRANCHES.len() - dead.len(),
        PROOF_BRANCHES.len(),
        if dead.is_empty() { String::new() } else { format!("; never reached: {}", dead.join(", ")) }
    );
    let mut out = outcome(r.ok() && r.max_ratio <= 1.0 && dead.is_empty(), detail);

    // the same constructions on larger orders, outside the grid
    let mut extended: BTreeMap<&str, usize> = BTreeMap::new();
    let mut smallest: BTreeMap<&str, usize> = BTreeMap::new();
    let larger = unicyclic_graphs(9).into_iter().chain((8..=9).flat_map(bicyclic_graphs));
    let h = Graph::path(2);
    for g in larger {
        if let Some(b) = theorem_route(&g, &h) {
            *extended.entry(b).or_default() += 1;
            smallest.entry(b).or_insert(g.n());
        }
    }
    for b in &dead {
        let first = smallest.get(b.as_str()).map(|n| format!("first reached at order {n}"));
        out.info.push(format!(
            "{b}: {} instances on unicyclic order 9 and bicyclic orders 8 and 9 with H = P2 ({})",
            extended.get(b.as_str()).copied().unwrap_or(0),
            first.unwrap_or_else(|| "not reached".into())
        ));
    }
    out
}

fn oracle() -> Outcome {
    let mut failures = Vec::new();
    let mut tree_count = 0;
    for n in 1..=10 {
        for t in trees(n) {
            tree_count += 1;
            let odd = t.parity_profile().n_odd;
            if p(&t) != odd / 2 {
                failures.push(format!("tree {:?}: p = {}, n_o/2 = {}", t.edges(), p(&t), odd / 2));
            }
        }
    }
    let (c3, p2) = (Graph::cycle(3), Graph::path(2));
    let prism = p(&c3.cartesian_product(&p2));
    let built = cycle_product(3, &p2, None).expect("cycle product");
    if prism != 3 || built.len() != 3 || !verify_product(&c3, &p2, &built).passed {
        failures.push(format!("prism: p = {prism}, construction {} paths", built.len()));
    }
    for n in 2..=8 {
        if p(&Graph::path(n)) != 1 {
            failures.push(format!("p(P{n}) != 1"));
        }
        if n >= 3 && p(&Graph::cycle(n)) != 2 {
            failures.push(format!("p(C{n}) != 2"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let (mut trials, mut kept) = (0, 0);
    let mut info = Vec::new();
    while trials < 100 {
        let n = rng.gen_range(3..=8);
        let g = generate(GenKind::Connected, n, rng.gen()).expect("generator");
        if g.m() > 10 {
            continue;
        }
        trials += 1;
        let (k, seed) = (rng.gen_range(1..=4), rng.gen());
        match subdivision_invariance_check(&g, k, seed, DEFAULT_ORACLE_BUDGET) {
            Ok(true) => kept += 1,
            Ok(false) => {
                let sub = random_subdivision(&g, k, &mut ChaCha8Rng::seed_from_u64(seed));
                info.push(format!(
                    "p = {} on {} vertices {:?}, but p = {} after {k} subdivision(s): {:?}",
                    p(&g),
                    g.n(),
                    g.edges(),
                    p(&sub),
                    sub.edges()
                ));
                failures.push(format!("subdivision changed p on {:?}", g.edges()));
            }
            Err(e) => failures.push(format!("subdivision on {:?}: {e}", g.edges())),
        }
    }
    let detail = format!(
        "{tree_count} trees, prism p = {prism} attained by {} paths, paths and cycles to order 8, p kept in {kept} of {trials} subdivision trials, {} failures{}",
        built.len(),
        failures.len(),
        failures.first().map(|f| format!("; first {f}")).unwrap_or_default()
    );
    Outcome { pass: failures.is_empty(), detail, info }
}

fn fuzz() -> Outcome {
    let r = run_sweep(&grid_instances(Grid::Fuzz, 0).expect("grid"));
    outcome(r.ok() && r.max_ratio <= 1.0, sweep_summary(&r))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 7] = [
        ("base decompositions of every connected H on 2 to 7 vertices", base_catalog),
        ("K4 and K5 base decompositions", complete_graphs),
        ("paths and cycles against every connected H on 2 to 5 vertices", paths_and_cycles),
        ("special families and tadpoles against every connected H on at most 4 vertices", special_families),
        ("unicyclic and bicyclic catalogs with branch coverage", theorems),
        ("oracle cross-checks", oracle),
        ("1000 seeded random instances", fuzz),
    ];
    let results: Vec<(Outcome, f64)> = std::thread::scope(|s| {
        let handles: Vec<_> = criteria
            .iter()
            .map(|&(_, f)| {
                s.spawn(move || {
                    let t = Instant::now();
                    let o = f();
                    (o, t.elapsed().as_secs_f64())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("criterion panicked")).collect()
    });
    let mut all = true;
    for (i, ((name, _), (o, secs))) in criteria.iter().zip(&results).enumerate() {
        all &= o.pass;
        println!("criterion {}: {} {name} [{secs:.1}s] {}", i + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail);
        for line in &o.info {
            println!("    info: {line}");
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
