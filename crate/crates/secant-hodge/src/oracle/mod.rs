//! Verification engines: the exact Koszul weight-spectral-sequence oracle,
//! E-polynomial scissor checks, decomposition identities and duality
//! checkers, assembled into a deterministic suite of independent cells.

pub mod checks;
pub mod matrix;
pub mod wss;

pub use checks::{
    decomposition_check_lines, duality_lefschetz_check, scissor_check_curves,
    scissor_check_lines, semismall_check,
};
pub use wss::{build_wss_complex, wss_cohomology, BasedComplex, BasedTerm, Summand};

use crate::curves::{
    ih_higher_table, ihl_numbers, sing_cohomology_higher, SecantCurveContext,
};
use crate::diamond::{
    abelian_surface_diamond, curve_diamond, elliptic_times_p2_diamond, k3_diamond,
    projective_space_diamond, HodgeDiamond,
};
use crate::hodge::HodgeStructure;
use crate::lines::{ih_secant_table, sing_cohomology_secant, singularity_invariants, SecantLinesContext};
use crate::par::par_map;

/// Diamonds exercised by the line-secant identities.
pub fn named_test_diamonds() -> Vec<(String, HodgeDiamond)> {
    let mut out = vec![
        ("P1".to_string(), projective_space_diamond(1)),
        ("P2".to_string(), projective_space_diamond(2)),
        ("K3".to_string(), k3_diamond()),
        ("abelian-surface".to_string(), abelian_surface_diamond()),
        ("ExP2".to_string(), elliptic_times_p2_diamond()),
    ];
    for g in 1..=3u64 {
        out.push((format!("curve-g{g}"), curve_diamond(g)));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub g_max: u64,
    pub k_max: u32,
    /// 1 runs the identity checks; 2 adds the Koszul spectral-sequence
    /// equivalence over its full weight range.
    pub depth: u32,
    /// Test-harness hook: adds one deliberately perturbed identity.
    pub inject_fault: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            g_max: 2,
            k_max: 4,
            depth: 2,
            inject_fault: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
enum Cell {
    ScissorLines(String, HodgeDiamond),
    DecompositionLines(String, HodgeDiamond),
    DualityLines(String, HodgeDiamond),
    WeightWindowLines(String, HodgeDiamond),
    HrhBound(String, HodgeDiamond),
    ScissorCurves(u64, u32),
    Semismall(u64, u32),
    DualityCurve(u64, u32),
    IhlBinomial(u64, u32),
    CrossModule(u64),
    Koszul(u64, u32, i64),
    InjectedFault,
}

fn evaluate(cell: &Cell) -> CheckResult {
    match cell {
        Cell::ScissorLines(name, d) => {
            let (ok, residual) = scissor_check_lines(d);
            CheckResult {
                name: format!("scissor-lines[{name}]"),
                passed: ok,
                detail: if ok { String::new() } else { format!("residual {residual}") },
            }
        }
        Cell::DecompositionLines(name, d) => CheckResult {
            name: format!("decomposition-lines[{name}]"),
            passed: decomposition_check_lines(d),
            detail: String::new(),
        },
        Cell::DualityLines(name, d) => {
            let ctx = SecantLinesContext::new(d.clone());
            let (ok, failures) =
                duality_lefschetz_check(&ih_secant_table(&ctx), ctx.dim_sigma());
            CheckResult {
                name: format!("duality-lefschetz-lines[{name}]"),
                passed: ok,
                detail: failures.join("; "),
            }
        }
        Cell::WeightWindowLines(name, d) => {
            let ctx = SecantLinesContext::new(d.clone());
            let t = sing_cohomology_secant(&ctx);
            let mut bad = Vec::new();
            for (j, h) in t.iter() {
                for w in h.weights() {
                    if !(w == j || (j > 0 && w == j - 1)) {
                        bad.push(format!("degree {j} weight {w}"));
                    }
                }
            }
            let top = 2 * ctx.dim_sigma();
            if t.entry(0) != HodgeStructure::point() {
                bad.push("degree 0 is not a single Tate class".to_string());
            }
            if t.entry(top) != HodgeStructure::tate(ctx.dim_sigma()) {
                bad.push("top degree is not a single Tate class".to_string());
            }
            CheckResult {
                name: format!("weight-window[{name}]"),
                passed: bad.is_empty(),
                detail: bad.join("; "),
            }
        }
        Cell::HrhBound(name, d) => {
            let report = singularity_invariants(&SecantLinesContext::new(d.clone()));
            let ok = report.hrh <= report.c && report.hrh == report.c.min(report.w);
            CheckResult {
                name: format!("hrh-min-c-w[{name}]"),
                passed: ok,
                detail: if ok {
                    String::new()
                } else {
                    format!("c = {}, hrh = {}, w = {}", report.c, report.hrh, report.w)
                },
            }
        }
        Cell::ScissorCurves(g, k) => {
            let (ok, residual) = scissor_check_curves(*g, *k);
            CheckResult {
                name: format!("scissor-curves[g{g},k{k}]"),
                passed: ok,
                detail: if ok { String::new() } else { format!("residual {residual}") },
            }
        }
        Cell::Semismall(g, k) => CheckResult {
            name: format!("semismall[g{g},k{k}]"),
            passed: semismall_check(*g, *k),
            detail: String::new(),
        },
        Cell::DualityCurve(g, k) => {
            let ctx = SecantCurveContext::new(*g, *k).expect("k >= 2");
            let (ok, failures) =
                duality_lefschetz_check(&ih_higher_table(&ctx), ctx.dim_sigma());
            CheckResult {
                name: format!("duality-lefschetz-curves[g{g},k{k}]"),
                passed: ok,
                detail: failures.join("; "),
            }
        }
        Cell::IhlBinomial(g, k) => {
            let ctx = SecantCurveContext::new(*g, *k).expect("k >= 2");
            let h1 = HodgeStructure::curve_h1(*g);
            let mut bad = Vec::new();
            for a in 1..*k {
                let table = ihl_numbers(&ctx, a).expect("valid stratum");
                for r in (*k as i64 + a as i64 - 1)..=ctx.dim_sigma() {
                    let wedge = h1.wedge_power((ctx.dim_sigma() - r) as u32);
                    for ((p, q), m) in wedge.iter() {
                        if table.get(r, -p, -q) != m {
                            bad.push(format!("a={a} r={r} ({p},{q})"));
                        }
                    }
                    let total: u64 = table
                        .entries
                        .iter()
                        .filter(|((rr, _, _), _)| *rr == r)
                        .map(|(_, m)| *m)
                        .sum();
                    if total != wedge.dim() {
                        bad.push(format!("a={a} r={r} row sum"));
                    }
                }
            }
            CheckResult {
                name: format!("ihl-binomial[g{g},k{k}]"),
                passed: bad.is_empty(),
                detail: bad.join("; "),
            }
        }
        Cell::CrossModule(g) => {
            let curves = SecantCurveContext::new(*g, 2).expect("k = 2");
            let lines = SecantLinesContext::new(curve_diamond(*g));
            let mixed_ok = {
                let a = sing_cohomology_higher(&curves);
                let b = sing_cohomology_secant(&lines);
                (0..=6).all(|j| a.entry(j) == b.entry(j))
            };
            let ih_ok = {
                let a = ih_higher_table(&curves);
                let b = ih_secant_table(&lines);
                (0..=6).all(|j| a.entry(j) == b.entry(j))
            };
            CheckResult {
                name: format!("cross-module-k2[g{g}]"),
                passed: mixed_ok && ih_ok,
                detail: match (mixed_ok, ih_ok) {
                    (true, true) => String::new(),
                    (false, _) => "mixed tables differ".to_string(),
                    (_, false) => "IH tables differ".to_string(),
                },
            }
        }
        Cell::Koszul(g, k, w) => {
            let complex = build_wss_complex(*g, *k, *w);
            let mut bad = Vec::new();
            if !complex.composition_is_zero() {
                bad.push("d o d != 0".to_string());
            }
            if !complex.tags_preserved() {
                bad.push("differential mixes tags".to_string());
            }
            let ctx = SecantCurveContext::new(*g, *k).expect("k >= 2");
            let closed = sing_cohomology_higher(&ctx);
            for (l, piece) in wss_cohomology(*g, *k, *w) {
                let expected = closed.entry(w + l as i64).weight_piece(*w);
                if piece != expected {
                    bad.push(format!(
                        "position {l}: spectral sequence {piece}, closed form {expected}"
                    ));
                }
            }
            CheckResult {
                name: format!("koszul-wss[g{g},k{k},w{w}]"),
                passed: bad.is_empty(),
                detail: bad.join("; "),
            }
        }
        Cell::InjectedFault => {
            // deliberately corrupted table; this cell must fail
            let ctx = SecantLinesContext::new(projective_space_diamond(2));
            let mut table = ih_secant_table(&ctx);
            table.add_class(4, 2, 2, 1);
            let (ok, failures) = duality_lefschetz_check(&table, ctx.dim_sigma());
            CheckResult {
                name: "injected-fault".to_string(),
                passed: ok,
                detail: failures.join("; "),
            }
        }
    }
}

/// Run the oracle suite over the configured ranges. Independent cells are
/// evaluated in parallel when the `parallel` feature is enabled; results are
/// reported in a deterministic order either way.
pub fn run_verify(config: &VerifyConfig) -> Vec<CheckResult> {
    run_cells(&build_cells(config))
}

/// The sequential path, always available; used by the benchmark suite for
/// comparison against the data-parallel one.
pub fn run_verify_sequential(config: &VerifyConfig) -> Vec<CheckResult> {
    build_cells(config).iter().map(evaluate).collect()
}

fn run_cells(cells: &[Cell]) -> Vec<CheckResult> {
    par_map(cells, evaluate)
}

fn build_cells(config: &VerifyConfig) -> Vec<Cell> {
    let mut cells = Vec::new();
    for (name, d) in named_test_diamonds() {
        cells.push(Cell::ScissorLines(name.clone(), d.clone()));
        cells.push(Cell::DecompositionLines(name.clone(), d.clone()));
        cells.push(Cell::DualityLines(name.clone(), d.clone()));
        cells.push(Cell::WeightWindowLines(name.clone(), d.clone()));
        cells.push(Cell::HrhBound(name, d));
    }
    for g in 0..=config.g_max {
        cells.push(Cell::CrossModule(g));
        for k in 2..=config.k_max {
            cells.push(Cell::ScissorCurves(g, k));
            cells.push(Cell::Semismall(g, k));
            cells.push(Cell::DualityCurve(g, k));
            if g > 0 {
                cells.push(Cell::IhlBinomial(g, k));
            }
        }
    }
    if config.depth >= 2 {
        for g in 1..=config.g_max.min(2) {
            for k in 2..=config.k_max.min(4) {
                for w in 0..=2 * (2 * k as i64 - 1) {
                    cells.push(Cell::Koszul(g, k, w));
                }
            }
        }
    }
    if config.inject_fault {
        cells.push(Cell::InjectedFault);
    }
    cells
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let config = VerifyConfig {
            g_max: 1,
            k_max: 3,
            depth: 2,
            inject_fault: false,
        };
        let results = run_verify(&config);
        for r in &results {
            assert!(r.passed, "{}: {}", r.name, r.detail);
        }
        // deterministic ordering regardless of evaluation strategy
        let seq = run_verify_sequential(&config);
        let names: Vec<_> = results.iter().map(|r| r.name.clone()).collect();
        let seq_names: Vec<_> = seq.iter().map(|r| r.name.clone()).collect();
        assert_eq!(names, seq_names);
    }

    #[test]
    fn injected_fault_fails() {
        let config = VerifyConfig {
            g_max: 0,
            k_max: 2,
            depth: 1,
            inject_fault: true,
        };
        let results = run_verify(&config);
        let fault = results.iter().find(|r| r.name == "injected-fault").unwrap();
        assert!(!fault.passed);
        assert!(results.iter().filter(|r| !r.passed).count() == 1);
    }
}
