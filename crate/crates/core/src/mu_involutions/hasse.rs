use serde::Serialize;

use crate::composition::Composition;

use super::{mu_covers_up, t_mu, MuInvolution};

/// A cover `lower ⋖^μ upper`. `letters` are the `i` with
/// `lower ∘_μ s_i = upper`; `transpositions` the non-adjacent `(a, b)` with
/// `t^μ_{ab}(lower) = upper`. Weak edges are those with a letter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverEdge {
    pub lower: MuInvolution,
    pub upper: MuInvolution,
    pub letters: Vec<usize>,
    pub transpositions: Vec<(usize, usize)>,
}

impl CoverEdge {
    pub fn is_weak(&self) -> bool {
        !self.letters.is_empty()
    }
}

/// Hasse diagram of `(𝓘_μ, ≤^μ)` with its weak edges marked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hasse {
    pub mu: Composition,
    pub nodes: Vec<MuInvolution>,
    pub edges: Vec<CoverEdge>,
}

impl Hasse {
    /// Nodes sorted by one-line notation, edges by `(lower, upper)`.
    pub fn build(mu: &Composition) -> Hasse {
        let n = mu.n();
        let mut nodes = MuInvolution::all(mu);
        nodes.sort_by_key(|p| p.perm().oneline());
        let mut edges = Vec::new();
        for lower in &nodes {
            for upper in mu_covers_up(lower) {
                let letters = (1..n).filter(|&i| lower.act(i) == upper).collect();
                let transpositions = (1..=n)
                    .flat_map(|a| (a + 2..=n).map(move |b| (a, b)))
                    .filter(|&(a, b)| t_mu(a, b, lower) == upper)
                    .collect();
                edges.push(CoverEdge { lower: lower.clone(), upper, letters, transpositions });
            }
        }
        edges.sort_by_key(|e| (e.lower.perm().oneline(), e.upper.perm().oneline()));
        Hasse { mu: mu.clone(), nodes, edges }
    }

    pub fn weak_edges(&self) -> impl Iterator<Item = &CoverEdge> {
        self.edges.iter().filter(|e| e.is_weak())
    }

    pub fn strong_only_edges(&self) -> impl Iterator<Item = &CoverEdge> {
        self.edges.iter().filter(|e| !e.is_weak())
    }

    /// Elements with no upper cover.
    pub fn maximal(&self) -> Vec<&MuInvolution> {
        self.nodes.iter().filter(|p| !self.edges.iter().any(|e| &e.lower == *p)).collect()
    }

    /// Elements with no lower cover.
    pub fn minimal(&self) -> Vec<&MuInvolution> {
        self.nodes.iter().filter(|p| !self.edges.iter().any(|e| &e.upper == *p)).collect()
    }
}
