//! JSON and text renderings of library results.
//!
//! JSON objects use sorted keys and round every float to 12 significant
//! digits, so identical inputs give byte-identical output.

use gsbound_core::bounds::{BipartitionResult, MisResult};
use gsbound_core::optimize::FLAG_GENERAL_NON_AUTHORITATIVE;
use gsbound_core::{BoundsReport, CoeffVector, Graph, OptimumResult, VertexSet};
use serde_json::{json, Value};
use std::fmt::Write as _;

/// Rounds to 12 significant digits.
pub fn sig12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

fn num(x: f64) -> Value {
    json!(sig12(x))
}

fn one_based(s: VertexSet) -> Vec<usize> {
    s.iter().map(|v| v + 1).collect()
}

pub fn graph_json(g: &Graph) -> Value {
    let edges: Vec<[usize; 2]> = g.edges().map(|(a, b)| [a + 1, b + 1]).collect();
    json!({ "n": g.n(), "edges": edges })
}

/// `{graph, lower, upper: {mis, symmetric, general}, exact, conjecture_flags}`.
pub fn bounds_json(g: &Graph, r: &BoundsReport) -> Value {
    let (p, phi) = r
        .symmetric
        .symmetric_params()
        .expect("report carries a symmetric optimum");
    let general = match &r.general {
        Some(gen) => json!({ "F": num(gen.fidelity), "E": num(gen.entanglement_bound) }),
        None => Value::Null,
    };
    json!({
        "graph": graph_json(g),
        "lower": { "ebits": r.lower.ebits, "side": one_based(r.lower.side) },
        "upper": {
            "mis": r.mis_upper,
            "symmetric": {
                "F": num(r.symmetric.fidelity),
                "E": num(r.symmetric.entanglement_bound),
                "p": num(p),
                "phi": num(phi),
            },
            "general": general,
        },
        "exact": r.entanglement_exact,
        "conjecture_flags": r.conjecture_flags,
    })
}

pub fn bounds_text(g: &Graph, r: &BoundsReport) -> String {
    let mut out = String::new();
    let (p, phi) = r.symmetric.symmetric_params().expect("symmetric optimum");
    let _ = writeln!(out, "graph: n={} edges={}", g.n(), g.edge_count());
    let _ = writeln!(
        out,
        "lower bound (cut rank{}): {} ebits, side {}",
        if r.lower_exhaustive { ", all cuts" } else { ", sampled cuts" },
        r.lower.ebits,
        r.lower.side
    );
    let _ = writeln!(
        out,
        "upper bound (independent set): {} (|A|={}, A={})",
        r.mis_upper, r.mis.size, r.mis.witness
    );
    let _ = writeln!(
        out,
        "upper bound (symmetric ansatz): {:.6} (F={:.6}, p={:.6}, phi={:.6})",
        r.symmetric.entanglement_bound, r.symmetric.fidelity, p, phi
    );
    if let Some(gen) = &r.general {
        let _ = writeln!(
            out,
            "upper bound (general search): {:.6} (F={:.6})",
            gen.entanglement_bound, gen.fidelity
        );
    }
    let _ = writeln!(out, "best upper bound: {:.6}", r.best_upper);
    match r.entanglement_exact {
        Some(e) => {
            let _ = writeln!(out, "entanglement: {e} (exact)");
        }
        None => {
            let _ = writeln!(
                out,
                "entanglement: in [{}, {:.6}]",
                r.lower.ebits, r.best_upper
            );
        }
    }
    for flag in &r.conjecture_flags {
        let _ = writeln!(out, "flag: {flag}");
    }
    out
}

pub fn mis_json(r: &MisResult, n: usize) -> Value {
    json!({ "size": r.size, "witness": one_based(r.witness), "upper": n - r.size })
}

pub fn mis_text(r: &MisResult, n: usize) -> String {
    format!(
        "size {}\nwitness {}\nupper {}\n",
        r.size,
        join(one_based(r.witness)),
        n - r.size
    )
}

pub fn rank_json(r: &BipartitionResult) -> Value {
    json!({ "ebits": r.ebits, "side": one_based(r.side) })
}

pub fn coeffs_json(c: &CoeffVector) -> Value {
    json!({ "coefficients": c.as_slice() })
}

/// Flags attached to a standalone optimizer result.
pub fn optimum_flags(r: &OptimumResult) -> Vec<&'static str> {
    if r.certified_optimal {
        Vec::new()
    } else {
        vec![FLAG_GENERAL_NON_AUTHORITATIVE]
    }
}

pub fn symmetric_json(r: &OptimumResult) -> Value {
    let (p, phi) = r.symmetric_params().expect("symmetric optimum");
    json!({
        "F": num(r.fidelity),
        "E": num(r.entanglement_bound),
        "p": num(p),
        "phi": num(phi),
        "iterations": r.iterations,
        "converged": r.converged,
        "certified": r.certified_optimal,
    })
}

pub fn symmetric_text(r: &OptimumResult) -> String {
    let (p, phi) = r.symmetric_params().expect("symmetric optimum");
    format!(
        "F {:.12}\nE {:.6}\np {:.6}\nphi {:.6}\ncertified {}\n",
        r.fidelity, r.entanglement_bound, p, phi, r.certified_optimal
    )
}

pub fn product_json(r: &OptimumResult, n: usize) -> Value {
    let s = r.product_state(n);
    json!({
        "F": num(r.fidelity),
        "E": num(r.entanglement_bound),
        "p": s.p().iter().map(|&x| num(x)).collect::<Vec<_>>(),
        "phi": s.phi().iter().map(|&x| num(x)).collect::<Vec<_>>(),
        "iterations": r.iterations,
        "converged": r.converged,
        "certified": r.certified_optimal,
        "conjecture_flags": optimum_flags(r),
    })
}

pub fn product_text(r: &OptimumResult, n: usize) -> String {
    let s = r.product_state(n);
    let fmt = |xs: &[f64]| {
        xs.iter()
            .map(|x| format!("{x:.6}"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut out = format!(
        "F {:.12}\nE {:.6}\np {}\nphi {}\ncertified {}\n",
        r.fidelity,
        r.entanglement_bound,
        fmt(s.p()),
        fmt(s.phi()),
        r.certified_optimal
    );
    for flag in optimum_flags(r) {
        let _ = writeln!(out, "flag: {flag}");
    }
    out
}

fn join(xs: Vec<usize>) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}
