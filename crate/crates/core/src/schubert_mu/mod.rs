//! μ-involution Schubert and Grothendieck polynomials, refinement
//! expansions, transition equations and ℤ-span membership.

mod lattice;
mod transition;

pub use lattice::{span_membership, IntLattice};
pub use transition::{
    admissible_pairs, cotransition_chain_check, transition_multiplicity_free, transition_sets, verify_transition,
    ChainReport, ChainStep, TransitionReport, TransitionSets,
};

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::composition::Composition;
use crate::error::Result;
use crate::mu_involutions::{refine_to, MuInvolution};
use crate::permutations::Permutation;
use crate::polynomials::{grothendieck, schubert_sum, MultiPolynomial};

/// `𝔖^μ_τ = Σ_{w ∈ 𝓐_μ(τ)} 𝔖_w`, in `n` variables.
pub fn mu_schubert(tau: &MuInvolution) -> MultiPolynomial {
    schubert_sum(tau.atoms().iter(), tau.n().max(1))
}

/// `{τ ∈ 𝓘_ν : τ ≤_𝓐 π}`; their `ν`-polynomials sum to `𝔖^μ_π`.
pub fn refinement_expand(pi: &MuInvolution, nu: &Composition) -> Result<Vec<MuInvolution>> {
    refine_to(pi, nu)
}

type HeckeTable = HashMap<MuInvolution, Vec<Permutation>>;

fn hecke_table(mu: &Composition) -> Arc<HeckeTable> {
    static CACHE: OnceLock<Mutex<HashMap<Composition, Arc<HeckeTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(mu) {
        return t.clone();
    }
    let e = MuInvolution::identity(mu);
    let mut table: HeckeTable = HashMap::new();
    for w in Permutation::all(mu.n()) {
        table.entry(e.act_perm(&w)).or_default().push(w);
    }
    let table = Arc::new(table);
    cache.lock().unwrap().entry(mu.clone()).or_insert(table).clone()
}

/// `𝓑_μ(π) = {w ∈ S_n : e ∘_μ w = π}`, sorted.
pub fn hecke_atoms(pi: &MuInvolution) -> Vec<Permutation> {
    hecke_table(pi.mu()).get(pi).cloned().unwrap_or_default()
}

/// `𝔊^μ_π = Σ_{w ∈ 𝓑_μ(π)} 𝔊_w`, in `n` variables.
pub fn mu_grothendieck(pi: &MuInvolution) -> MultiPolynomial {
    let n = pi.n().max(1);
    hecke_atoms(pi).iter().fold(MultiPolynomial::zero(n), |acc, w| &acc + &grothendieck(w).pad(n))
}

/// `|𝓡_μ(π)|`.
pub fn count_reduced_mu_words(pi: &MuInvolution) -> u128 {
    pi.count_reduced_words()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::involutions::Involution;
    use crate::mu_involutions::FoldTable;
    use crate::polynomials::schubert;

    fn mi(s: &str) -> MuInvolution {
        s.parse().unwrap()
    }

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn identity_values() {
        let e = MuInvolution::identity(&comp("2,1"));
        assert_eq!(mu_schubert(&e), MultiPolynomial::one(3));
        assert!(hecke_atoms(&e).contains(&Permutation::identity(3)));
        assert_eq!(mu_grothendieck(&e).lowest_component(), MultiPolynomial::one(3));
        assert_eq!(count_reduced_mu_words(&e), 1);
    }

    #[test]
    fn endpoints() {
        for n in 1..=4 {
            for pi in MuInvolution::all(&Composition::ones(n)) {
                let inverse = pi.perm().inverse();
                assert_eq!(mu_schubert(&pi), schubert(&inverse));
                assert_eq!(hecke_atoms(&pi), vec![inverse.clone()]);
                assert_eq!(mu_grothendieck(&pi), grothendieck(&inverse));
            }
            for pi in MuInvolution::all(&Composition::whole(n)) {
                let y = Involution::new(pi.perm().clone()).unwrap();
                assert_eq!(mu_schubert(&pi), y.schubert());
            }
        }
    }

    #[test]
    fn refinement_identity_example() {
        let pi = mi("75421|63");
        let nu = comp("2,3,1,1");
        let parts = refinement_expand(&pi, &nu).unwrap();
        assert_eq!(parts.len(), 5);
        let sum = parts.iter().map(mu_schubert).sum::<MultiPolynomial>();
        assert_eq!(sum, mu_schubert(&pi));
        assert_eq!(refinement_expand(&pi, pi.mu()).unwrap(), vec![pi.clone()]);
        assert!(refinement_expand(&pi, &comp("7")).is_err());
    }

    #[test]
    fn refinement_exhaustive() {
        for n in 1..=5 {
            for mu in Composition::all(n) {
                for nu in Composition::all(n).into_iter().filter(|nu| nu.refines(&mu)) {
                    for pi in MuInvolution::all(&mu) {
                        let parts = refinement_expand(&pi, &nu).unwrap();
                        let mut union: Vec<Permutation> = parts.iter().flat_map(|t| t.atoms()).collect();
                        union.sort();
                        let before = union.len();
                        union.dedup();
                        assert_eq!(before, union.len(), "overlap for {pi} into {nu}");
                        assert_eq!(union, pi.atoms(), "{pi} into {nu}");
                        let sum = parts.iter().map(mu_schubert).sum::<MultiPolynomial>();
                        assert_eq!(sum, mu_schubert(&pi), "{pi} into {nu}");
                    }
                }
            }
        }
    }

    #[test]
    fn hecke_atoms_minimal_slice() {
        for n in 1..=4 {
            for mu in Composition::all(n) {
                for pi in MuInvolution::all(&mu) {
                    let b = hecke_atoms(&pi);
                    let min = b.iter().map(Permutation::length).min().unwrap();
                    let slice: Vec<Permutation> = b.iter().filter(|w| w.length() == min).cloned().collect();
                    assert_eq!(slice, pi.atoms(), "{pi}");
                    assert!(b.len() >= slice.len());
                }
            }
        }
    }

    #[test]
    fn grothendieck_lowest_component() {
        for n in 1..=4 {
            for mu in Composition::all(n) {
                for pi in MuInvolution::all(&mu) {
                    assert_eq!(mu_grothendieck(&pi).lowest_component(), mu_schubert(&pi), "{pi}");
                }
            }
        }
    }

    #[test]
    fn word_counts() {
        for mu in Composition::all(4) {
            let table = FoldTable::get(&mu);
            for pi in MuInvolution::all(&mu) {
                let by_atoms: u128 = pi.atoms().iter().map(Permutation::count_reduced_words).sum();
                assert_eq!(count_reduced_mu_words(&pi), by_atoms);
                assert_eq!(count_reduced_mu_words(&pi), table.count_reduced_words(&pi));
            }
        }
    }
}
