//! Acceptance criteria 1-7. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::path::Path;
use std::time::{Duration, Instant};

use edgereg::io::read_graph;
use edgereg::json::CertificateJson;
use edgereg::{cmd_construct, cmd_verify, ConstructOptions, EXIT_OK};
use edgereg_core::edge_ideal::{
    hilbert_series, induced_matching_number, invariant_report, is_gap_free, matching_number,
};
use edgereg_core::graph::cycle;
use edgereg_core::oracle::{hilbert_by_monomial_count, im_bruteforce, verify_lemma_suite};
use edgereg_core::suspension::{edge_s_suspension, s_suspension};
use edgereg_core::{FieldSpec, Graph, HilbertSeries, IntegerPolynomial, VertexSet};
use num_bigint::BigInt;
use tempfile::TempDir;

const Q: FieldSpec = FieldSpec::Rationals;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Duration, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn series(coeffs: &[i64], d: usize) -> HilbertSeries {
    HilbertSeries::new(IntegerPolynomial::from_i64s(coeffs), d)
}

fn pentagon_values() -> Outcome {
    let c5 = cycle(5).map_err(|e| e.to_string())?;
    let r = invariant_report(&c5, Q).map_err(|e| e.to_string())?;
    let got = (r.im, r.m, r.reg, r.dim, r.series());
    let want = (1, 2, 2, 2, series(&[1, 3, 1], 2));
    ensure(got == want, || format!("got {got:?}, want {want:?}"))?;
    Ok(format!("{r}"))
}

fn pentagon_suspensions() -> Outcome {
    let c5 = cycle(5).map_err(|e| e.to_string())?;
    let left = s_suspension(&c5, VertexSet::EMPTY).map_err(|e| e.to_string())?;
    let right = edge_s_suspension(&c5, (1, 2), VertexSet::EMPTY).map_err(|e| e.to_string())?;
    let r = invariant_report(&left, Q).map_err(|e| e.to_string())?;
    ensure(r.series() == series(&[1, 4], 2), || {
        format!("H(C5^∅) = {}", r.series())
    })?;
    ensure(r.reg == 2 && r.im == 1, || format!("C5^∅ has {r}"))?;
    let (ml, mr) = (matching_number(&left), matching_number(&right));
    ensure(ml == 3 && mr == 3, || {
        format!("matching numbers {ml}, {mr}")
    })?;
    Ok(format!("H = {}, m = {ml} and {mr}", r.series()))
}

fn octagon_chain() -> Outcome {
    let fail = |e: edgereg_core::Error| e.to_string();
    let g0 = cycle(8).map_err(fail)?;
    let g1 = s_suspension(&g0, VertexSet::EMPTY).map_err(fail)?;
    let g2 = edge_s_suspension(&g1, (1, 9), VertexSet::EMPTY).map_err(fail)?;
    let g3 = edge_s_suspension(&g2, (3, 9), VertexSet::EMPTY).map_err(fail)?;
    let want: [&[i64]; 4] = [
        &[1, 4, 2, -4, -1],
        &[1, 5, -1, -1, -2],
        &[1, 6, -2, -2, -1],
        &[1, 7, -3, -3],
    ];
    let mut degrees = Vec::new();
    for (g, w) in [&g0, &g1, &g2, &g3].into_iter().zip(want) {
        let r = invariant_report(g, Q).map_err(fail)?;
        ensure(r.h == IntegerPolynomial::from_i64s(w) && r.dim == 4, || {
            format!("n={}: h = {}, want {w:?}", g.n(), r.h)
        })?;
        ensure(r.im == 2 && r.reg == 3, || format!("n={}: {r}", g.n()))?;
        degrees.push(r.s);
    }
    ensure(degrees == [4, 4, 4, 3], || {
        format!("deg h sequence {degrees:?}")
    })?;
    Ok(format!("deg h {degrees:?}"))
}

const GRID: [(usize, usize); 6] = [(1, 1), (1, 2), (2, 2), (2, 3), (3, 3), (3, 4)];

fn construct_to(dir: &Path, (a, r, s): (usize, usize, usize), tag: &str) -> Result<(), String> {
    let opts = ConstructOptions {
        out: Some(dir.join(format!("g_{a}_{r}_{s}{tag}.json"))),
        cert: Some(dir.join(format!("c_{a}_{r}_{s}{tag}.json"))),
        seed: 1,
        ..ConstructOptions::default()
    };
    let mut sink = Vec::new();
    match cmd_construct(a, r, s, &opts, &mut sink) {
        Ok(EXIT_OK) => Ok(()),
        Ok(code) => Err(format!("({a},{r},{s}) exited {code}")),
        Err(e) => Err(format!("({a},{r},{s}): {e:#}")),
    }
}

fn constructor_grid(dir: &Path) -> Outcome {
    let mut slowest = Duration::ZERO;
    let start = Instant::now();
    let mut largest = 0;
    for (a, r) in GRID {
        for s in 1..=4 {
            let t = Instant::now();
            construct_to(dir, (a, r, s), "")?;
            let g = read_graph(&dir.join(format!("g_{a}_{r}_{s}.json")))
                .map_err(|e| format!("{e:#}"))?;
            let rep = invariant_report(&g, Q).map_err(|e| e.to_string())?;
            ensure(
                (rep.im, rep.reg, rep.s) == (a, r, s) && rep.connected,
                || format!("({a},{r},{s}) gave {rep:?}"),
            )?;
            if a == 1 {
                ensure(is_gap_free(&g) == Ok(true), || {
                    format!("({a},{r},{s}) not gap-free")
                })?;
            }
            let text = std::fs::read_to_string(dir.join(format!("c_{a}_{r}_{s}.json")))
                .map_err(|e| e.to_string())?;
            let cert: CertificateJson = serde_json::from_str(&text).map_err(|e| e.to_string())?;
            ensure(cert.replay().ok() == Some(g.clone()), || {
                format!("({a},{r},{s}) certificate replay")
            })?;
            let elapsed = t.elapsed();
            ensure(elapsed < Duration::from_secs(600), || {
                format!("({a},{r},{s}) took {elapsed:?}")
            })?;
            slowest = slowest.max(elapsed);
            largest = largest.max(g.n());
        }
    }
    ensure(start.elapsed() < Duration::from_secs(7200), || {
        "grid over 2 h".into()
    })?;
    Ok(format!(
        "24 triples, largest n = {largest}, slowest {slowest:?}"
    ))
}

fn property_suite() -> Outcome {
    let mut out = Vec::new();
    let code = cmd_verify(200, 1, 8, Q, false, &mut out).map_err(|e| format!("{e:#}"))?;
    let text = String::from_utf8_lossy(&out).into_owned();
    ensure(code == EXIT_OK, || text.clone())?;
    Ok(text.lines().last().unwrap_or_default().to_string())
}

/// Suite graphs are compared with the oracles inside the suite; here the
/// relevant counters are read back and the constructor outputs are checked
/// too.
fn oracle_equivalence(dir: &Path) -> Outcome {
    let report = verify_lemma_suite(1, 200, 8, Q).map_err(|e| e.to_string())?;
    let names = ["im-oracle", "hilbert-oracle", "homology-backends"];
    let bad: Vec<_> = report
        .failures
        .iter()
        .filter(|f| {
            names
                .iter()
                .any(|n| f.descriptor.contains(&format!("[{n}]")))
        })
        .collect();
    ensure(bad.is_empty(), || format!("{bad:?}"))?;
    for n in names {
        ensure(report.checks.get(n).copied().unwrap_or(0) > 0, || {
            format!("{n} never ran")
        })?;
    }
    let mut outputs = 0;
    for (a, r) in GRID {
        for s in 1..=4 {
            let g: Graph = read_graph(&dir.join(format!("g_{a}_{r}_{s}.json")))
                .map_err(|e| format!("{e:#}"))?;
            if let Ok(im) = im_bruteforce(&g) {
                ensure(im == induced_matching_number(&g), || {
                    format!("im of ({a},{r},{s})")
                })?;
                outputs += 1;
            }
            if let Ok(counts) = hilbert_by_monomial_count(&g, 6) {
                let counts: Vec<BigInt> = counts.into_iter().map(BigInt::from).collect();
                ensure(hilbert_series(&g).expansion(6) == counts, || {
                    format!("series of ({a},{r},{s})")
                })?;
            }
        }
    }
    Ok(format!(
        "im {} / series {} / homology {} comparisons, {outputs} constructor outputs",
        report.checks["im-oracle"],
        report.checks["hilbert-oracle"],
        report.checks["homology-backends"]
    ))
}

fn determinism(dir: &Path) -> Outcome {
    let triples = [(1, 2, 4), (2, 3, 1), (3, 4, 1), (3, 4, 2)];
    for t in triples {
        construct_to(dir, t, "_x")?;
        construct_to(dir, t, "_y")?;
        let (a, r, s) = t;
        for prefix in ["g", "c"] {
            let x = std::fs::read(dir.join(format!("{prefix}_{a}_{r}_{s}_x.json")))
                .map_err(|e| e.to_string())?;
            let y = std::fs::read(dir.join(format!("{prefix}_{a}_{r}_{s}_y.json")))
                .map_err(|e| e.to_string())?;
            ensure(x == y, || format!("{prefix} files differ for {t:?}"))?;
        }
    }
    Ok(format!("{} triples byte-identical", triples.len()))
}

fn main() {
    let dir = TempDir::new().expect("temporary directory");
    let d = dir.path();
    let criteria: Vec<Criterion<'_>> = vec![
        (
            "pentagon golden values",
            Duration::from_secs(1),
            Box::new(pentagon_values),
        ),
        (
            "pentagon suspensions",
            Duration::from_secs(1),
            Box::new(pentagon_suspensions),
        ),
        (
            "octagon chain",
            Duration::from_secs(60),
            Box::new(octagon_chain),
        ),
        (
            "constructor grid",
            Duration::from_secs(7200),
            Box::new(|| constructor_grid(d)),
        ),
        (
            "property suite",
            Duration::from_secs(900),
            Box::new(property_suite),
        ),
        (
            "oracle equivalence",
            Duration::from_secs(900),
            Box::new(|| oracle_equivalence(d)),
        ),
        (
            "determinism",
            Duration::from_secs(600),
            Box::new(|| determinism(d)),
        ),
    ];
    let mut failed = 0;
    for (i, (name, budget, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = check();
        let elapsed = t.elapsed();
        let outcome = outcome.and_then(|msg| {
            if elapsed <= *budget {
                Ok(msg)
            } else {
                Err(format!("took {elapsed:?}, budget {budget:?}"))
            }
        });
        match outcome {
            Ok(msg) => println!("criterion {} {name}: PASS ({elapsed:.2?}) {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({elapsed:.2?}) {msg}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
