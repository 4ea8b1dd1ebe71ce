use std::collections::BTreeSet;

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::involutions::Involution;
use crate::permutations::{BlockWord, Permutation};

use super::MuInvolution;

/// `τ ≤_𝓐 π`: `ν` refines `μ` and `𝓐_ν(τ) ⊆ 𝓐_μ(π)`. The atom sets are
/// either nested or disjoint, so one atom decides.
pub fn leq_a(tau: &MuInvolution, pi: &MuInvolution) -> Result<bool> {
    if !tau.mu().refines(pi.mu()) {
        return Err(Error::NotARefinement(tau.mu().to_string(), pi.mu().to_string()));
    }
    let witness = &tau.inverse_atoms()[0];
    Ok(pi.is_inverse_atom(witness))
}

/// The `ν`-involution having `u` as an inverse atom, reading each block
/// segment of `u` as an inverse block atom.
fn involution_of_inverse_atom(u: &Permutation, nu: &Composition) -> MuInvolution {
    let line = u.oneline();
    let blocks: Vec<BlockWord> = nu
        .block_ranges()
        .into_iter()
        .map(|r| {
            let segment = BlockWord(line[r].to_vec());
            let atom = segment.standardize().inverse();
            let y = Involution::identity(atom.n()).iprod(&atom);
            BlockWord::destandardize(y.perm(), &segment.alphabet())
        })
        .collect();
    MuInvolution::from_blocks(&blocks).unwrap()
}

/// `{τ ∈ 𝓘_ν : τ ≤_𝓐 π}` for a refinement `ν` of `μ`, sorted.
pub fn refine_to(pi: &MuInvolution, nu: &Composition) -> Result<Vec<MuInvolution>> {
    if !nu.refines(pi.mu()) {
        return Err(Error::NotARefinement(nu.to_string(), pi.mu().to_string()));
    }
    let out: BTreeSet<MuInvolution> = pi.inverse_atoms().iter().map(|u| involution_of_inverse_atom(u, nu)).collect();
    Ok(out.into_iter().collect())
}

/// Covers of `π` from below across one-step refinements `ν` of `μ`.
pub fn mu_nu_covers(pi: &MuInvolution) -> Vec<MuInvolution> {
    pi.mu().one_step_refinements().iter().flat_map(|nu| refine_to(pi, nu).unwrap()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::involutions::block_inverse_atoms;

    fn mi(s: &str) -> MuInvolution {
        s.parse().unwrap()
    }

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn refinement_example() {
        let pi = mi("75421|63");
        let inv: Vec<String> = pi.inverse_atoms().iter().map(|w| w.to_string()).collect();
        let mut expect = vec!["4527163", "5247163", "5271463", "4571263", "5712463", "4715263", "7145263", "7152463"];
        expect.sort();
        assert_eq!(inv, expect);
        let nu = comp("2,3,1,1");
        let mut b: Vec<MuInvolution> =
            ["45|721|6|3", "52|741|6|3", "57|124|6|3", "47|152|6|3", "71|542|6|3"].iter().map(|s| mi(s)).collect();
        b.sort();
        assert_eq!(refine_to(&pi, &nu).unwrap(), b);
        for tau in &b {
            assert!(leq_a(tau, &pi).unwrap());
        }
        assert!(leq_a(&pi, &pi).unwrap());
        assert!(leq_a(&mi("1234567"), &pi).is_err());
        assert!(!leq_a(&mi("12|345|6|7"), &pi).unwrap());
    }

    #[test]
    fn leq_a_single_atom_test_matches_containment() {
        for n in 1..=5 {
            for mu in Composition::all(n) {
                for nu in Composition::all(n).into_iter().filter(|nu| nu.refines(&mu)) {
                    let fine = MuInvolution::all(&nu);
                    for pi in MuInvolution::all(&mu) {
                        let atoms = pi.inverse_atoms();
                        for tau in &fine {
                            let contained = tau.inverse_atoms().iter().all(|u| atoms.binary_search(u).is_ok());
                            assert_eq!(leq_a(tau, &pi).unwrap(), contained, "{tau} vs {pi}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn no_refinements_of_ones() {
        assert!(mu_nu_covers(&mi("2|1|3")).is_empty());
    }

    #[test]
    fn covers_of_example() {
        let pi = mi("75421|63");
        let covers = mu_nu_covers(&pi);
        assert!(!covers.is_empty());
        for tau in &covers {
            assert_eq!(tau.mu().len(), 3);
            assert_eq!(tau.ell_mu().total, pi.ell_mu().total);
            assert!(leq_a(tau, &pi).unwrap());
        }
    }

    #[test]
    fn split_into_blocks() {
        for n in 1..=6 {
            for y in Involution::all(n) {
                for q in y.inverse_atoms() {
                    let word = BlockWord(q.oneline());
                    for k in 0..=n {
                        for part in [&word.letters()[..k], &word.letters()[k..]] {
                            let piece = BlockWord(part.to_vec());
                            let z = Involution::identity(part.len()).iprod(&piece.standardize().inverse());
                            let block = BlockWord::destandardize(z.perm(), &piece.alphabet());
                            assert!(block_inverse_atoms(&block).unwrap().contains(&piece), "{q} at {k}");
                        }
                    }
                }
            }
        }
    }
}
