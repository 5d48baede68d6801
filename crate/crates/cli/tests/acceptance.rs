//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Set `SCL_ACCEPTANCE_EXTENDED=1` to add the n = 7 exhaustive runs.

use std::process::{Command, ExitCode};
use std::time::Instant;

use scl_core::bounds::{polyn_bound, GraphFacts};
use scl_core::cliques::{clique_counts, is_complete_multipartite_plus_isolated};
use scl_core::graph::{emit_graph6, random_graph, turan_graph, Graph};
use scl_core::scan::oracle::{brute_force_cliques, brute_force_walks};
use scl_core::scan::{
    enumerate_labeled, item_seed, scan, CheckKind, CorpusSource, CorpusSpec, Filter, Grid, ScanConfig, ScanResult,
};
use scl_core::spectral::{spectrum, walk_counts, walk_ratio_limit_check};
use scl_core::stability::{find_stability_witness, stability_premise, verify_witness, SearchMode};
use scl_core::Alpha;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn extended() -> bool {
    std::env::var("SCL_ACCEPTANCE_EXTENDED").is_ok_and(|v| v != "0" && !v.is_empty())
}

fn max_exhaustive_n() -> usize {
    if extended() {
        7
    } else {
        6
    }
}

fn exhaustive(n: usize) -> CorpusSpec {
    CorpusSpec::new(CorpusSource::Exhaustive { n, allow_n8: false })
}

fn run_scan(spec: &CorpusSpec, config: &ScanConfig) -> Result<ScanResult, String> {
    scan(spec, config).map_err(|e| e.to_string())
}

fn describe(records: &[scl_core::scan::Record]) -> String {
    records
        .iter()
        .take(8)
        .map(|r| format!("{} {} [{}] slack {:e}", r.check, r.graph6, r.params, r.slack))
        .collect::<Vec<_>>()
        .join("; ")
}

fn exhaustive_theorems() -> Outcome {
    let mut config = ScanConfig::new(CheckKind::THEOREMS.to_vec());
    config.grid = Grid { r: None, s: None, l: Some(vec![2, 3]), ..Grid::default() };
    let mut summary = Vec::new();
    for n in 6..=max_exhaustive_n() {
        let start = Instant::now();
        let res = run_scan(&exhaustive(n), &config)?;
        if res.graphs_checked != 1 << (n * (n - 1) / 2) {
            return Err(format!("n={n}: checked {} graphs", res.graphs_checked));
        }
        if !res.violations.is_empty() || !res.errors.is_empty() {
            return Err(format!(
                "n={n}: {} violations, {} errors: {}",
                res.violations.len(),
                res.errors.len(),
                describe(&res.violations)
            ));
        }
        summary.push(format!(
            "n={n}: {} graphs, {} evaluations, 0 violations in {:.1}s",
            res.graphs_checked,
            res.evaluations,
            start.elapsed().as_secs_f64()
        ));
    }
    Ok(summary.join(", "))
}

fn polyn_characterization() -> Outcome {
    let mut total = 0usize;
    let mut equal = 0usize;
    let mut mismatched = Vec::new();
    for n in 1..=6 {
        for g in enumerate_labeled(n).map_err(|e| e.to_string())? {
            let report = polyn_bound(&GraphFacts::new(&g)).map_err(|e| e.to_string())?;
            let recognized = is_complete_multipartite_plus_isolated(&g).is_some();
            total += 1;
            equal += report.equality as usize;
            if report.equality != recognized {
                mismatched.push(emit_graph6(&g));
            }
        }
    }
    if mismatched.is_empty() {
        Ok(format!("{total} graphs, {equal} equality cases, symmetric difference 0"))
    } else {
        Err(format!("symmetric difference {}: {:?}", mismatched.len(), &mismatched[..mismatched.len().min(8)]))
    }
}

fn turan_spectrum() -> Outcome {
    let mut worst = 0f64;
    for r in 2..=4 {
        for q in 1..=5 {
            let g = turan_graph(r, q * r).map_err(|e| e.to_string())?;
            let mut expected = vec![((r - 1) * q) as f64];
            expected.extend(std::iter::repeat_n(0.0, r * (q - 1)));
            expected.extend(std::iter::repeat_n(-(q as f64), r - 1));
            let sp = spectrum(&g).map_err(|e| e.to_string())?;
            let mut got = sp.eigenvalues().to_vec();
            got.sort_by(|a, b| b.total_cmp(a));
            for (x, y) in got.iter().zip(&expected) {
                let err = (x - y).abs();
                worst = worst.max(err);
                if err > 1e-9 {
                    return Err(format!("T_{r}({}): eigenvalue {x} expected {y}", q * r));
                }
            }
        }
    }
    Ok(format!("15 Turán graphs, max eigenvalue error {worst:.1e}"))
}

fn conjecture_scan() -> Outcome {
    let mut failures = Vec::new();
    let mut notes = Vec::new();
    for (r, k) in [(2, 3), (3, 4)] {
        let mut config = ScanConfig::new(vec![CheckKind::Conjecture]);
        config.grid.r = Some(vec![r]);
        let mut checked = 0;
        for n in 1..=7 {
            let res = run_scan(&exhaustive(n).with_filter(Filter::KFree(k)), &config)?;
            checked += res.graphs_checked;
            if !res.errors.is_empty() {
                failures.push(format!("r={r} n={n}: {} errors", res.errors.len()));
            }
            if !res.discoveries.is_empty() {
                failures.push(format!(
                    "r={r} n={n}: {} counterexample(s): {}",
                    res.discoveries.len(),
                    describe(&res.discoveries)
                ));
            }
        }
        notes.push(format!("r={r}: {checked} K_{k}-free graphs"));
    }
    for r in 2..=3 {
        for n in (r..=20).step_by(r) {
            let g = turan_graph(r, n).map_err(|e| e.to_string())?;
            let f = GraphFacts::new(&g);
            let report = scl_core::bounds::conjecture_check(&f, r).map_err(|e| e.to_string())?;
            if report.slack.abs() > 1e-9 {
                failures.push(format!("T_{r}({n}): slack {:e} (lhs {}, rhs {})", report.slack, report.lhs, report.rhs));
            }
        }
    }
    if failures.is_empty() {
        Ok(notes.join(", ") + ", all Turán graphs tight")
    } else {
        Err(failures.join("; "))
    }
}

fn seeded(count: u64) -> impl Iterator<Item = Graph> {
    (0..count).map(|i| {
        let seed = item_seed(0xacce, i);
        let n = 1 + (seed % 10) as usize;
        let p = [0.15, 0.3, 0.5, 0.7, 0.85][(seed >> 16) as usize % 5];
        random_graph(n, p, seed).unwrap()
    })
}

fn oracle_equivalence() -> Outcome {
    for g in seeded(200) {
        let fast = clique_counts(&g);
        let slow = brute_force_cliques(&g).map_err(|e| e.to_string())?;
        if fast != slow {
            return Err(format!("clique counts differ on {g}"));
        }
        let fast = walk_counts(&g, 8).map_err(|e| e.to_string())?;
        let slow = brute_force_walks(&g, 8).map_err(|e| e.to_string())?;
        if fast != slow {
            return Err(format!("walk counts differ on {g}"));
        }
    }
    Ok("200 graphs, cliques and walks up to length 8 identical".into())
}

fn trace_identities() -> Outcome {
    let mut worst = [0f64; 3];
    let mut total = 0usize;
    for n in 1..=max_exhaustive_n() {
        for g in enumerate_labeled(n).map_err(|e| e.to_string())? {
            let sp = spectrum(&g).map_err(|e| e.to_string())?;
            let nf = n as f64;
            let k3 = clique_counts(&g).k(3) as f64;
            let errs = [
                sp.moment(1).abs() / nf,
                (sp.moment(2) - 2.0 * g.m() as f64).abs() / (nf * nf),
                (sp.moment(3) - 6.0 * k3).abs() / (nf * nf * nf),
            ];
            for i in 0..3 {
                worst[i] = worst[i].max(errs[i]);
            }
            if errs[0] > 1e-8 || errs[1] > 1e-8 || errs[2] > 1e-7 {
                return Err(format!("{g}: normalized errors {errs:?}"));
            }
            total += 1;
        }
    }
    Ok(format!("{total} graphs, worst normalized errors {:.1e} {:.1e} {:.1e}", worst[0], worst[1], worst[2]))
}

fn walk_ratio_limit() -> Outcome {
    let mut checked = 0usize;
    let mut longest = 0usize;
    for n in 1..=6 {
        for g in enumerate_labeled(n).map_err(|e| e.to_string())? {
            if !g.is_connected() || g.is_bipartite() {
                continue;
            }
            for q in 0..=2 {
                let conv = walk_ratio_limit_check(&g, q, 1e-6, 5000).map_err(|e| e.to_string())?;
                if !conv.converged {
                    return Err(format!("{g}, q={q}: best error {:e} at l={}", conv.error, conv.length));
                }
                longest = longest.max(conv.length);
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (graph, q) pairs converged, longest l = {longest}"))
}

fn theorem3_grid() -> Outcome {
    let config = ScanConfig::new(vec![CheckKind::Theorem3]);
    let mut totals = [0u64; 5];
    for n in 1..=6 {
        let res = run_scan(&exhaustive(n), &config)?;
        if !res.violations.is_empty() || !res.errors.is_empty() {
            return Err(format!("n={n}: {} failures: {}", res.violations.len(), describe(&res.violations)));
        }
        let holds = res.evaluations - res.out_of_domain - res.vacuous;
        for (t, v) in
            totals.iter_mut().zip([res.evaluations, holds, res.vacuous, res.out_of_domain, res.gated_failures])
        {
            *t += v;
        }
    }
    Ok(format!(
        "{} evaluations: {} implications verified, {} vacuous, {} outside r < ω ({} premise-true failures there)",
        totals[0], totals[1], totals[2], totals[3], totals[4]
    ))
}

fn stability_sanity() -> Outcome {
    let mut witnessed = Vec::new();
    for r in 2..=3 {
        let alpha = Alpha::stability_max(r);
        for n in (6..=12).filter(|n| n % r == 0) {
            let g = turan_graph(r, n).map_err(|e| e.to_string())?;
            if !stability_premise(&g, r, &alpha).map_err(|e| e.to_string())? {
                return Err(format!("T_{r}({n}): premise false"));
            }
            let w = find_stability_witness(&g, r, &alpha, SearchMode::Exhaustive)
                .map_err(|e| e.to_string())?
                .ok_or_else(|| format!("T_{r}({n}): no witness"))?;
            if !verify_witness(&g, r, &alpha, &w).map_err(|e| e.to_string())? {
                return Err(format!("T_{r}({n}): witness rejected"));
            }
            witnessed.push(format!("T_{r}({n})"));
        }
    }

    let mut config = ScanConfig::new(vec![CheckKind::Stability]);
    config.stability_mode = SearchMode::Exhaustive;
    let mut corpora = Vec::new();
    for n in 1..=max_exhaustive_n() {
        corpora.push(exhaustive(n));
    }
    let mut extra = Vec::new();
    for n in 2..=12 {
        for r in 2..=4.min(n) {
            let t = turan_graph(r, n).map_err(|e| e.to_string())?;
            let edges: Vec<_> = t.edges().collect();
            extra.push(t.clone());
            for drop in edges.iter().take(3) {
                let rest = edges.iter().filter(|e| *e != drop).copied();
                extra.push(Graph::from_edges(n, rest).map_err(|e| e.to_string())?);
            }
        }
    }
    corpora.push(CorpusSpec::new(CorpusSource::Graphs(extra)));
    for n in 8..=12 {
        corpora.push(CorpusSpec::new(CorpusSource::Random { n, p: 0.7, count: 200, seed: n as u64 }));
    }
    let (mut premise_true, mut graphs) = (0u64, 0u64);
    for spec in &corpora {
        let res = run_scan(spec, &config)?;
        if !res.violations.is_empty() || !res.errors.is_empty() {
            return Err(format!("exhaustive miss or error: {} {:?}", describe(&res.violations), res.errors.first()));
        }
        graphs += res.graphs_checked;
        premise_true += res.evaluations - res.out_of_domain;
    }
    Ok(format!(
        "witnessed {}; corpus of {graphs} graphs, {premise_true} premise-true evaluations, no exhaustive miss",
        witnessed.join(" ")
    ))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let art = dir.path().join("artifacts");
    let runs: [&[&str]; 2] = [
        &["scan", "--exhaustive-n", "5", "--check", "theorems,theorem3,conjecture"],
        &[
            "scan",
            "--random-n",
            "9",
            "--p",
            "0.5",
            "--count",
            "300",
            "--seed",
            "7",
            "--check",
            "all",
            "--mode",
            "heuristic",
        ],
    ];
    let mut sizes = Vec::new();
    for args in runs {
        let mut outputs = Vec::new();
        for jobs in ["1", "8"] {
            let out = Command::new(env!("CARGO_BIN_EXE_scl"))
                .args(args)
                .args(["--jobs", jobs, "--artifact-dir"])
                .arg(&art)
                .output()
                .map_err(|e| e.to_string())?;
            if out.stdout.is_empty() {
                return Err(format!("{args:?}: empty stdout, exit {:?}", out.status.code()));
            }
            outputs.push(out.stdout);
        }
        if outputs[0] != outputs[1] {
            return Err(format!("{args:?}: stdout differs between --jobs 1 and --jobs 8"));
        }
        sizes.push(outputs[0].len().to_string());
    }
    Ok(format!("2 scans byte-identical across --jobs 1/8 ({} bytes)", sizes.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 exhaustive theorem suite", exhaustive_theorems),
        ("2 polyn equality characterization", polyn_characterization),
        ("3 Turán spectrum", turan_spectrum),
        ("4 conjecture scan", conjecture_scan),
        ("5 oracle equivalence", oracle_equivalence),
        ("6 trace identities", trace_identities),
        ("7 walk-ratio limit", walk_ratio_limit),
        ("8 theorem3 grid", theorem3_grid),
        ("9 stability sanity", stability_sanity),
        ("10 determinism", determinism),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    if !extended() {
        println!("note: n = 7 exhaustive runs skipped; set SCL_ACCEPTANCE_EXTENDED=1 to include them");
    }
    for (name, run) in criteria {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {name} ({secs:.1}s): {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name} ({secs:.1}s): {detail}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criterion(s) failed");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
