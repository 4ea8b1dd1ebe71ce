use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::involutions::{Cycle, CycleSet};
use crate::permutations::Permutation;

use super::{mu_hecke_fold, MuInvolution};

fn same_mu(pi: &MuInvolution, tau: &MuInvolution) -> Result<()> {
    if pi.mu() == tau.mu() {
        Ok(())
    } else {
        Err(Error::CompositionMismatch(pi.mu().to_string(), tau.mu().to_string()))
    }
}

/// `π ≤^μ τ`: every atom of `τ` lies above some atom of `π` in Bruhat order.
pub fn mu_bruhat_leq(pi: &MuInvolution, tau: &MuInvolution) -> Result<bool> {
    same_mu(pi, tau)?;
    let lower = pi.atoms();
    Ok(tau.atoms().iter().all(|w| lower.iter().any(|v| v.bruhat_leq(w).unwrap())))
}

/// `π ⋖^μ τ`.
pub fn is_mu_cover(pi: &MuInvolution, tau: &MuInvolution) -> Result<bool> {
    same_mu(pi, tau)?;
    Ok(tau.ell_mu().total == pi.ell_mu().total + 1 && mu_bruhat_leq(pi, tau)?)
}

/// Weak covers `(i, π ∘_μ s_i)` with `π ∘_μ s_i ≠ π`.
pub fn weak_mu_covers(pi: &MuInvolution) -> Vec<(usize, MuInvolution)> {
    (1..pi.n()).map(|i| (i, pi.act(i))).filter(|(_, tau)| tau != pi).collect()
}

/// Every target `σ` reached as `v·t_{ij}` from an atom `v` of `π` with
/// `v ⋖ v·t_{ij}` and `v·t_{ij}` a μ-atom of `σ`. Well-definedness of
/// `t^μ_{ij}` says this has at most one element.
pub fn t_mu_targets(i: usize, j: usize, pi: &MuInvolution) -> Vec<MuInvolution> {
    let mut out = BTreeSet::new();
    if i >= j || j > pi.n() {
        return Vec::new();
    }
    for v in pi.atoms() {
        let u = v.swap_positions(i, j);
        if u.length() != v.length() + 1 {
            continue;
        }
        let sigma = mu_hecke_fold(pi.mu(), &u.reduced_word()).unwrap();
        if sigma.ell_mu().total == u.length() {
            out.insert(sigma);
        }
    }
    out.into_iter().collect()
}

/// `t^μ_{ij}(π)` for values `i < j`; `π` itself when no atom witnesses a cover.
pub fn t_mu(i: usize, j: usize, pi: &MuInvolution) -> MuInvolution {
    t_mu_targets(i, j, pi).into_iter().next().unwrap_or_else(|| pi.clone())
}

/// Upper covers of `π` in `≤^μ`, via the `t^μ` operators.
pub fn mu_covers_up(pi: &MuInvolution) -> Vec<MuInvolution> {
    let n = pi.n();
    let mut out = BTreeSet::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let tau = t_mu(i, j, pi);
            if tau != *pi {
                out.insert(tau);
            }
        }
    }
    out.into_iter().collect()
}

/// `𝓐_μ(τ) = {w·t_{ij} : w ∈ 𝓐_μ(π), t^μ_{ij}(π) = τ, w ⋖ w·t_{ij}}` for a cover `π ⋖^μ τ`.
pub fn mu_atom_transposition(pi: &MuInvolution, tau: &MuInvolution) -> Result<Vec<Permutation>> {
    if !is_mu_cover(pi, tau)? {
        return Err(Error::NotACover(pi.to_string(), tau.to_string()));
    }
    let n = pi.n();
    let labels: Vec<(usize, usize)> =
        (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).filter(|&(i, j)| t_mu(i, j, pi) == *tau).collect();
    let mut out = BTreeSet::new();
    for w in pi.atoms() {
        for &(i, j) in &labels {
            let u = w.swap_positions(i, j);
            if u.length() == w.length() + 1 {
                out.insert(u);
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Same-block rules that take priority over the generic exchange, for
/// `a < b < c < d` in one block.
fn v_same_block(i: usize, j: usize, ci: Cycle, cj: Cycle) -> Option<Vec<Cycle>> {
    let a = i;
    match (ci, cj) {
        // v_ad: (b,a),(d,c) -> (d,a),(b,b),(c,c)
        ((b, a0), (d, c)) if a0 == a && d == j && a < b && b < c && c < d => Some(vec![(d, a), (b, b), (c, c)]),
        // v_ad: (c,a),(d,b) -> (d,a),(c,b)
        ((c, a0), (d, b)) if a0 == a && d == j && a < b && b < c && c < d => Some(vec![(d, a), (c, b)]),
        // v_ac: (b,a),(c,c) -> (c,a),(b,b)
        ((b, a0), (c, c0)) if a0 == a && c == j && c0 == c && a < b && b < c => Some(vec![(c, a), (b, b)]),
        // v_ac: (a,a),(c,b) -> (c,a),(b,b)
        ((a0, a1), (c, b)) if a0 == a && a1 == a && c == j && a < b && b < c => Some(vec![(c, a), (b, b)]),
        // two fixed points a < c join into (c,a)
        ((a0, a1), (c, c0)) if a0 == a && a1 == a && c == j && c0 == c => Some(vec![(c, a)]),
        _ => None,
    }
}

/// `v_{ij}(π)`: exchange `i` and `j` in `Cyc_μ(π)`, split any pair left
/// increasing into two fixed points, with the same-block overrides above.
pub fn v_op(i: usize, j: usize, pi: &MuInvolution) -> MuInvolution {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    if i == j {
        return pi.clone();
    }
    let mut blocks: Vec<Vec<Cycle>> = pi.block_cycles().iter().map(|c| c.cycles().to_vec()).collect();
    let (bi, bj) = (pi.block_of_value(i), pi.block_of_value(j));
    if bi == bj {
        let set = CycleSet::new(blocks[bi].clone()).unwrap();
        let (ci, cj) = (set.cycle_of(i).unwrap(), set.cycle_of(j).unwrap());
        if ci != cj {
            if let Some(added) = v_same_block(i, j, ci, cj) {
                blocks[bi].retain(|c| *c != ci && *c != cj);
                blocks[bi].extend(added);
                return rebuild(blocks);
            }
        }
    }
    let swap = |v: usize| {
        if v == i {
            j
        } else if v == j {
            i
        } else {
            v
        }
    };
    let blocks = blocks
        .into_iter()
        .map(|cycles| {
            cycles
                .into_iter()
                .flat_map(|(b, a)| {
                    let (b, a) = (swap(b), swap(a));
                    if b < a {
                        vec![(b, b), (a, a)]
                    } else {
                        vec![(b, a)]
                    }
                })
                .collect()
        })
        .collect();
    rebuild(blocks)
}

fn rebuild(blocks: Vec<Vec<Cycle>>) -> MuInvolution {
    let sets: Vec<CycleSet> = blocks.into_iter().map(|c| CycleSet::new(c).unwrap().sorted()).collect();
    MuInvolution::from_block_cycles(&sets).unwrap()
}
