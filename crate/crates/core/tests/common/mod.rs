#![allow(dead_code)]

use std::collections::BTreeMap;

use muinv::mu_involutions::Hasse;

type TLabels = &'static [(usize, usize)];

/// Hasse diagram of μ = (3,1): black edges as `(upper, lower, letters, t-labels)`.
pub const REF_BLACK: [(&str, &str, &[usize], TLabels); 24] = [
    ("432|1", "324|1", &[3], &[(2, 4)]),
    ("432|1", "431|2", &[1], &[]),
    ("432|1", "243|1", &[2], &[(2, 4)]),
    ("324|1", "314|2", &[1], &[]),
    ("324|1", "234|1", &[2], &[]),
    ("431|2", "421|3", &[2], &[]),
    ("243|1", "234|1", &[3], &[]),
    ("243|1", "143|2", &[1], &[]),
    ("314|2", "214|3", &[2], &[]),
    ("314|2", "431|2", &[3], &[(1, 4)]),
    ("234|1", "134|2", &[1], &[]),
    ("421|3", "321|4", &[3], &[]),
    ("421|3", "142|3", &[1], &[(1, 4)]),
    ("143|2", "134|2", &[3], &[]),
    ("143|2", "142|3", &[2], &[]),
    ("214|3", "213|4", &[3], &[]),
    ("214|3", "124|3", &[1], &[]),
    ("134|2", "124|3", &[2], &[]),
    ("321|4", "213|4", &[2], &[(1, 3)]),
    ("321|4", "132|4", &[1], &[(1, 3)]),
    ("142|3", "132|4", &[3], &[]),
    ("213|4", "123|4", &[1], &[]),
    ("124|3", "123|4", &[3], &[]),
    ("132|4", "123|4", &[2], &[]),
];

/// Red edges: strong covers that are not weak, with their t-labels.
pub const REF_RED: [(&str, &str, TLabels); 9] = [
    ("431|2", "143|2", &[(1, 3), (1, 4)]),
    ("243|1", "421|3", &[(1, 3)]),
    ("314|2", "321|4", &[(2, 4)]),
    ("234|1", "321|4", &[(1, 4)]),
    ("421|3", "214|3", &[(1, 4), (2, 4)]),
    ("214|3", "234|1", &[(1, 3)]),
    ("134|2", "314|2", &[(1, 3)]),
    ("134|2", "132|4", &[(2, 4)]),
    ("142|3", "124|3", &[(2, 4)]),
];

type EdgeKey = (String, String);
type Labels = (Vec<usize>, Vec<(usize, usize)>);

/// Reference edges keyed by unordered endpoint pair.
pub fn reference_edges() -> BTreeMap<EdgeKey, Labels> {
    let key = |a: &str, b: &str| if a < b { (a.to_string(), b.to_string()) } else { (b.to_string(), a.to_string()) };
    let mut out = BTreeMap::new();
    for (a, b, letters, ts) in REF_BLACK {
        out.insert(key(a, b), (letters.to_vec(), ts.to_vec()));
    }
    for (a, b, ts) in REF_RED {
        out.insert(key(a, b), (Vec::new(), ts.to_vec()));
    }
    out
}

pub fn computed_edges(h: &Hasse) -> BTreeMap<EdgeKey, Labels> {
    h.edges
        .iter()
        .map(|e| {
            let (a, b) = (e.lower.to_string(), e.upper.to_string());
            let k = if a < b { (a, b) } else { (b, a) };
            (k, (e.letters.clone(), e.transpositions.clone()))
        })
        .collect()
}

/// Empty when the computed diagram for `(3,1)` matches the reference edges, otherwise
/// a description of the first mismatch.
pub fn reference_mismatch(h: &Hasse) -> Option<String> {
    if h.nodes.len() != 16 {
        return Some(format!("{} nodes", h.nodes.len()));
    }
    let top: Vec<String> = h.maximal().iter().map(|p| p.to_string()).collect();
    let bottom: Vec<String> = h.minimal().iter().map(|p| p.to_string()).collect();
    if top != ["432|1"] || bottom != ["123|4"] {
        return Some(format!("top {top:?}, bottom {bottom:?}"));
    }
    let want = reference_edges();
    let got = computed_edges(h);
    if want != got {
        let missing: Vec<_> = want.iter().filter(|(k, v)| got.get(*k) != Some(v)).collect();
        let extra: Vec<_> = got.iter().filter(|(k, v)| want.get(*k) != Some(v)).collect();
        return Some(format!("missing {missing:?}, extra {extra:?}"));
    }
    let red: Vec<_> = h.strong_only_edges().collect();
    if red.len() != REF_RED.len() || h.weak_edges().count() != REF_BLACK.len() {
        return Some("edge colours differ".into());
    }
    None
}
