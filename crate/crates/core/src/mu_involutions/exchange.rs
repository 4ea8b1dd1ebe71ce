use serde::Serialize;

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::permutations::Word;

use super::{mu_hecke_fold, MuInvolution};

/// Whether `(𝐚, m)` is nearly μ-reduced (`m` is 1-based), together with the
/// μ-involution reached by the word with position `m` deleted.
pub fn nearly_mu_reduced(word: &Word, m: usize, mu: &Composition) -> Result<(bool, MuInvolution)> {
    if m == 0 || m > word.len() {
        return Err(Error::Precondition(format!("position {m} outside word of length {}", word.len())));
    }
    let shorter = word.without(&[m]);
    let tau = mu_hecke_fold(mu, &shorter)?;
    let full = mu_hecke_fold(mu, word)?;
    let shorter_reduced = tau.ell_mu().total == shorter.len();
    let full_reduced = full.ell_mu().total == word.len();
    Ok((shorter_reduced && !full_reduced, tau))
}

/// Result of the exchange: the partner position, and when `𝐚` is an
/// ordinary reduced word, the transpositions with `v·t_{ij} = w` and
/// `w·t_{i′j′} = v′`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MuExchange {
    pub k: usize,
    pub tau: MuInvolution,
    pub pair: Option<((usize, usize), (usize, usize))>,
}

/// For `(𝐚, m)` nearly μ-reduced for `τ`, the unique `k ≠ m` with `(𝐚, k)`
/// nearly μ-reduced for `τ`.
pub fn mu_exchange(word: &Word, m: usize, mu: &Composition) -> Result<MuExchange> {
    let (ok, tau) = nearly_mu_reduced(word, m, mu)?;
    if !ok {
        return Err(Error::Precondition(format!("({word}, {m}) is not nearly μ-reduced")));
    }
    let mut partners = Vec::new();
    for k in (1..=word.len()).filter(|&k| k != m) {
        let (ok_k, tau_k) = nearly_mu_reduced(word, k, mu)?;
        if ok_k && tau_k == tau {
            partners.push(k);
        }
    }
    let k = match partners.as_slice() {
        [k] => *k,
        _ => {
            return Err(Error::Precondition(format!(
                "expected one exchange partner for ({word}, {m}), found {}",
                partners.len()
            )))
        }
    };
    let n = mu.n();
    let pair = if word.is_reduced() {
        let w = word.product(n)?;
        let v = word.without(&[m]).product(n)?;
        let v2 = word.without(&[k]).product(n)?;
        Some((differing_pair(&v, &w), differing_pair(&w, &v2)))
    } else {
        None
    };
    Ok(MuExchange { k, tau, pair })
}

/// The positions `i < j` with `b = a·t_{ij}`.
fn differing_pair(a: &crate::Permutation, b: &crate::Permutation) -> (usize, usize) {
    let diff: Vec<usize> = (1..=a.n()).filter(|&p| a.get(p) != b.get(p)).collect();
    assert_eq!(diff.len(), 2, "{a} and {b} do not differ by a transposition");
    (diff[0], diff[1])
}
