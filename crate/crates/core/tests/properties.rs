use muinv::mu_involutions::{mu_hecke_fold, FoldTable};
use muinv::schubert_mu::{admissible_pairs, mu_schubert, refinement_expand, span_membership, verify_transition};
use muinv::{Composition, MuInvolution, MultiPolynomial, Permutation, Word};
use proptest::prelude::*;
use proptest::sample::select;

fn composition(max_n: usize) -> impl Strategy<Value = Composition> {
    (1..=max_n).prop_flat_map(|n| select(Composition::all(n)))
}

fn mu_involution(max_n: usize) -> impl Strategy<Value = MuInvolution> {
    composition(max_n).prop_flat_map(|mu| select(MuInvolution::all(&mu)))
}

fn mu_and_word(max_n: usize, max_len: usize) -> impl Strategy<Value = (Composition, Vec<usize>)> {
    (2..=max_n).prop_flat_map(|n| select(Composition::all(n))).prop_flat_map(move |mu| {
        let n = mu.n();
        (Just(mu), prop::collection::vec(1..n, 0..=max_len))
    })
}

fn fold(mu: &Composition, letters: &[usize]) -> MuInvolution {
    mu_hecke_fold(mu, &Word::new(letters.to_vec())).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn render_parse_roundtrip(pi in mu_involution(7)) {
        let back: MuInvolution = pi.to_string().parse().unwrap();
        prop_assert_eq!(back.mu(), pi.mu());
        prop_assert_eq!(back, pi);
    }

    #[test]
    fn fold_respects_commutation((mu, word) in mu_and_word(6, 10), k in any::<prop::sample::Index>()) {
        prop_assume!(word.len() >= 2);
        let k = k.index(word.len() - 1);
        prop_assume!(word[k].abs_diff(word[k + 1]) > 1);
        let mut moved = word.clone();
        moved.swap(k, k + 1);
        prop_assert_eq!(fold(&mu, &word), fold(&mu, &moved));
    }

    #[test]
    fn fold_respects_braids((mu, word) in mu_and_word(6, 8), k in any::<prop::sample::Index>(), up in any::<bool>()) {
        prop_assume!(!word.is_empty());
        let k = k.index(word.len());
        let i = word[k];
        let j = if up { i + 1 } else { i.wrapping_sub(1) };
        prop_assume!(j >= 1 && j < mu.n());
        let mut left = word.clone();
        left.splice(k..k, [i, j, i]);
        let mut right = word.clone();
        right.splice(k..k, [j, i, j]);
        prop_assert_eq!(fold(&mu, &left), fold(&mu, &right));
    }

    #[test]
    fn fold_is_idempotent_on_letters((mu, word) in mu_and_word(6, 8), k in any::<prop::sample::Index>()) {
        prop_assume!(!word.is_empty());
        let k = k.index(word.len());
        let mut doubled = word.clone();
        doubled.insert(k, word[k]);
        prop_assert_eq!(fold(&mu, &word), fold(&mu, &doubled));
    }

    #[test]
    fn fold_of_atom_words(pi in mu_involution(6)) {
        let ell = pi.ell_mu().total;
        for w in pi.atoms() {
            prop_assert_eq!(w.length(), ell);
            let word = w.reduced_word();
            prop_assert_eq!(mu_hecke_fold(pi.mu(), &word).unwrap(), pi.clone());
        }
    }

    #[test]
    fn word_count_matches_bfs(pi in mu_involution(5)) {
        let table = FoldTable::get(pi.mu());
        prop_assert_eq!(table.count_reduced_words(&pi), pi.count_reduced_words());
        prop_assert_eq!(table.ell(&pi), Some(pi.ell_mu().total));
    }

    #[test]
    fn hecke_product_length_additive(a in select(Permutation::all(5).collect::<Vec<_>>()), b in select(Permutation::all(5).collect::<Vec<_>>())) {
        let d = a.demazure(&b);
        prop_assert!(d.length() >= a.length().max(b.length()));
        prop_assert!(d.length() <= a.length() + b.length());
        if d.length() == a.length() + b.length() {
            prop_assert_eq!(d, a.compose(&b).unwrap());
        }
    }

    #[test]
    fn divided_differences_step_down(w in select(Permutation::all(5).collect::<Vec<_>>()), i in 1usize..5) {
        let s = muinv::polynomials::schubert(&w).pad(5);
        let d = s.divided_difference(i);
        if w.has_right_descent(i) {
            prop_assert_eq!(d, muinv::polynomials::schubert(&w.swap_positions(i, i + 1)).pad(5));
        } else {
            prop_assert!(d.is_zero());
        }
    }

    #[test]
    fn refinement_sums(pi in mu_involution(6), seed in any::<prop::sample::Index>()) {
        let finer: Vec<Composition> = Composition::all(pi.n()).into_iter().filter(|nu| nu.refines(pi.mu())).collect();
        let nu = &finer[seed.index(finer.len())];
        let parts = refinement_expand(&pi, nu).unwrap();
        let total = parts.iter().fold(MultiPolynomial::zero(pi.n()), |acc, t| &acc + &mu_schubert(t));
        prop_assert_eq!(total, mu_schubert(&pi));
        let count: usize = parts.iter().map(|t| t.atoms().len()).sum();
        prop_assert_eq!(count, pi.atoms().len());
    }

    #[test]
    fn transitions_hold_at_six(pi in (6usize..=6).prop_flat_map(|n| select(Composition::all(n))).prop_flat_map(|mu| select(MuInvolution::all(&mu))), k in any::<prop::sample::Index>()) {
        let pairs = admissible_pairs(&pi);
        let (i, j) = pairs[k.index(pairs.len())];
        let r = verify_transition(&pi, i, j).unwrap();
        prop_assert!(r.passed(), "{:?}", r);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn integer_combinations_lie_in_span(mu in composition(4), coeffs in prop::collection::vec(-3i64..=3, 24)) {
        let all = MuInvolution::all(&mu);
        let deg = all.iter().map(|p| p.ell_mu().total).max().unwrap();
        let f = all
            .iter()
            .filter(|p| p.ell_mu().total == deg)
            .zip(coeffs.iter())
            .fold(MultiPolynomial::zero(mu.n()), |acc, (p, &c)| &acc + &mu_schubert(p).try_scale(c).unwrap());
        prop_assert!(span_membership(&f, &mu).unwrap());
    }
}
