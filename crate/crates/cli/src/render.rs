use std::fmt::Write;

use muinv::mu_involutions::{CoverEdge, Hasse};
use muinv::schubert_mu::TransitionSets;
use muinv::verify::SuiteReport;
use muinv::{MuInvolution, MultiPolynomial};
use serde_json::json;

pub fn atoms_text(pi: &MuInvolution) -> String {
    let join = |ws: Vec<muinv::Permutation>| ws.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" ");
    let len = pi.ell_mu();
    format!(
        "{pi}  mu={}  cycles={}  ell_mu={} ({} within, {} between)\ninverse atoms: {}\natoms: {}",
        pi.mu(),
        pi.cycle_string(),
        len.total,
        len.within,
        len.between,
        join(pi.inverse_atoms()),
        join(pi.atoms()),
    )
}

pub fn polynomial(pi: &MuInvolution, kind: &str, p: &MultiPolynomial, as_json: bool) -> String {
    if as_json {
        serde_json::to_string_pretty(&json!({
            "pi": pi.to_string(),
            "kind": kind,
            "nvars": p.nvars(),
            "polynomial": p.to_string(),
        }))
        .unwrap()
    } else {
        p.to_string()
    }
}

fn labels(pairs: &[(usize, usize)]) -> String {
    pairs.iter().map(|(a, b)| format!("t{a},{b}")).collect::<Vec<_>>().join(" ")
}

fn edge_label(e: &CoverEdge) -> String {
    let mut parts: Vec<String> = e.letters.iter().map(|i| format!("s{i}")).collect();
    parts.extend(e.transpositions.iter().map(|(a, b)| format!("t{a}{b}")));
    parts.join(",")
}

fn edges(h: &Hasse, weak_only: bool) -> impl Iterator<Item = &CoverEdge> {
    h.edges.iter().filter(move |e| !weak_only || e.is_weak())
}

pub fn poset_text(h: &Hasse, weak_only: bool) -> String {
    let mut out = String::new();
    writeln!(out, "mu={}  elements={}", h.mu, h.nodes.len()).unwrap();
    for node in &h.nodes {
        writeln!(out, "{node}  ell_mu={}", node.ell_mu().total).unwrap();
    }
    for e in edges(h, weak_only) {
        let kind = if e.is_weak() { "weak" } else { "strong" };
        writeln!(out, "{} -> {}  {kind}  {}", e.lower, e.upper, edge_label(e)).unwrap();
    }
    out.trim_end().to_string()
}

pub fn poset_json(h: &Hasse, weak_only: bool) -> String {
    let edges: Vec<_> = edges(h, weak_only)
        .map(|e| {
            json!({
                "lower": e.lower.to_string(),
                "upper": e.upper.to_string(),
                "weak": e.is_weak(),
                "letters": e.letters,
                "transpositions": e.transpositions,
            })
        })
        .collect();
    let nodes: Vec<_> = h.nodes.iter().map(|p| json!({ "pi": p.to_string(), "ell_mu": p.ell_mu().total })).collect();
    serde_json::to_string_pretty(&json!({ "mu": h.mu.parts(), "nodes": nodes, "edges": edges })).unwrap()
}

/// Nodes in one-line order, edges by endpoints; bottom drawn lowest.
pub fn poset_dot(h: &Hasse, weak_only: bool) -> String {
    let mut out = String::new();
    writeln!(out, "digraph poset {{").unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=plaintext];").unwrap();
    for node in &h.nodes {
        writeln!(out, "  \"{node}\";").unwrap();
    }
    for e in edges(h, weak_only) {
        let colour = if e.is_weak() { "black" } else { "red" };
        writeln!(
            out,
            "  \"{}\" -> \"{}\" [label=\"{}\", color={colour}, fontcolor={colour}, arrowhead=none];",
            e.lower,
            e.upper,
            edge_label(e)
        )
        .unwrap();
    }
    out.push('}');
    out
}

pub fn transition_text(sets: &TransitionSets, holds: bool) -> String {
    let (i, j) = sets.cycle;
    let factor = if i == j { format!("x{i}") } else { format!("(x{i} + x{j})") };
    let mut rhs: Vec<String> = sets.phi.keys().map(|s| format!("+ S[{s}]")).collect();
    rhs.extend(sets.psi.keys().map(|s| format!("- S[{s}]")));
    let rhs = if rhs.is_empty() { "0".to_string() } else { rhs.join(" ") };
    let mut out = format!("{factor}*S[{}] = {rhs}\n", sets.tau);
    for (name, set) in [("phi", &sets.phi), ("psi", &sets.psi)] {
        for (sigma, pairs) in set {
            writeln!(out, "{name}: {sigma}  via {}", labels(pairs)).unwrap();
        }
    }
    write!(out, "identity: {}", if holds { "holds" } else { "FAILS" }).unwrap();
    out
}

pub fn transition_json(
    sets: &TransitionSets,
    lhs: &MultiPolynomial,
    rhs: &MultiPolynomial,
    multiplicity_free: bool,
) -> serde_json::Value {
    let (i, j) = sets.cycle;
    let terms = |set: &std::collections::BTreeMap<MuInvolution, Vec<(usize, usize)>>| {
        set.iter().map(|(s, pairs)| json!({ "sigma": s.to_string(), "via": pairs })).collect::<Vec<_>>()
    };
    json!({
        "instance": format!("{} ({i},{j})", sets.tau),
        "delta": sets.delta,
        "lhs": lhs.to_string(),
        "rhs": rhs.to_string(),
        "equal": lhs == rhs,
        "multiplicity_free": multiplicity_free,
        "phi": terms(&sets.phi),
        "psi": terms(&sets.psi),
    })
}

pub fn verify_text(reports: &[SuiteReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let status = if r.passed { "PASS" } else { "FAIL" };
        writeln!(out, "{status} {} max_n={} checked={} failures={}", r.suite, r.max_n, r.checked, r.failures).unwrap();
        for ex in &r.examples {
            writeln!(out, "  {ex}").unwrap();
        }
    }
    out.trim_end().to_string()
}
