//! μ-involutions: permutations whose blocks, cut out by a composition μ,
//! standardize to involutions.

mod exchange;
mod hasse;
mod order;
mod refine;

pub use exchange::{mu_exchange, nearly_mu_reduced, MuExchange};
pub use hasse::{CoverEdge, Hasse};
pub use order::{
    is_mu_cover, mu_atom_transposition, mu_bruhat_leq, mu_covers_up, t_mu, t_mu_targets, v_op, weak_mu_covers,
};
pub use refine::{leq_a, mu_nu_covers, refine_to};

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::involutions::{block_inverse_atoms, CycleSet, Involution};
use crate::permutations::{parse_values, render_values, BlockWord, Permutation, Word};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MuInvolution {
    perm: Permutation,
    mu: Composition,
}

/// How a single `∘_μ s_i` step acted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Step {
    Absorbed,
    Within,
    Between,
}

/// `ℓ_μ` split into steps acting within and between blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MuLength {
    pub total: usize,
    pub within: usize,
    pub between: usize,
}

impl MuInvolution {
    pub fn new(perm: Permutation, mu: Composition) -> Result<Self> {
        if perm.n() != mu.n() {
            return Err(Error::SizeMismatch { left: perm.n(), right: mu.n() });
        }
        let pi = MuInvolution { perm, mu };
        for (index, block) in pi.blocks().iter().enumerate() {
            if !block.standardize().is_involution() {
                return Err(Error::NotABlockInvolution { index, block: block.to_string() });
            }
        }
        Ok(pi)
    }

    pub fn identity(mu: &Composition) -> Self {
        MuInvolution { perm: Permutation::identity(mu.n()), mu: mu.clone() }
    }

    pub fn longest(mu: &Composition) -> Self {
        MuInvolution { perm: Permutation::longest(mu.n()), mu: mu.clone() }
    }

    /// Concatenates block words; each must standardize to an involution.
    pub fn from_blocks(blocks: &[BlockWord]) -> Result<Self> {
        let parts: Vec<usize> = blocks.iter().map(BlockWord::len).collect();
        let oneline: Vec<usize> = blocks.iter().flat_map(|b| b.letters().iter().copied()).collect();
        MuInvolution::new(Permutation::new(oneline)?, Composition::new(parts)?)
    }

    /// Rebuilds from the per-block cycle sets of `O(π)`.
    pub fn from_block_cycles(blocks: &[CycleSet]) -> Result<Self> {
        let words = blocks
            .iter()
            .map(|cycles| {
                let alphabet = cycles.values();
                let mut word = vec![0; alphabet.len()];
                let rank = |v: usize| alphabet.binary_search(&v).unwrap();
                for &(b, a) in cycles.cycles() {
                    word[rank(a)] = b;
                    word[rank(b)] = a;
                }
                BlockWord::new(word)
            })
            .collect::<Result<Vec<_>>>()?;
        MuInvolution::from_blocks(&words)
    }

    /// Every μ-involution, in lexicographic order of one-line notation.
    pub fn all(mu: &Composition) -> Vec<MuInvolution> {
        let n = mu.n();
        let mut out = Vec::new();
        let shapes: Vec<Vec<Involution>> = mu.parts().iter().map(|&p| Involution::all(p)).collect();
        fn rec(
            b: usize,
            remaining: &[usize],
            mu: &Composition,
            shapes: &[Vec<Involution>],
            acc: &mut Vec<usize>,
            out: &mut Vec<MuInvolution>,
        ) {
            if b == shapes.len() {
                out.push(MuInvolution { perm: Permutation::new(acc.clone()).unwrap(), mu: mu.clone() });
                return;
            }
            let size = mu.parts()[b];
            for chosen in remaining.iter().copied().combinations(size) {
                let rest: Vec<usize> = remaining.iter().copied().filter(|v| !chosen.contains(v)).collect();
                for y in &shapes[b] {
                    let word = BlockWord::destandardize(y.perm(), &chosen);
                    let len = acc.len();
                    acc.extend_from_slice(word.letters());
                    rec(b + 1, &rest, mu, shapes, acc, out);
                    acc.truncate(len);
                }
            }
        }
        let values: Vec<usize> = (1..=n).collect();
        rec(0, &values, mu, &shapes, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn mu(&self) -> &Composition {
        &self.mu
    }

    pub fn n(&self) -> usize {
        self.perm.n()
    }

    pub fn blocks(&self) -> Vec<BlockWord> {
        let line = self.perm.oneline();
        self.mu.block_ranges().into_iter().map(|r| BlockWord(line[r].to_vec())).collect()
    }

    /// Zero-based index of the block holding the value `v`.
    pub fn block_of_value(&self, v: usize) -> usize {
        self.mu.block_of_position(self.perm.position_of(v))
    }

    /// Block cycles, one set per block, each in increasing order of smaller entry.
    pub fn block_cycles(&self) -> Vec<CycleSet> {
        self.blocks()
            .iter()
            .map(|b| {
                let alphabet = b.alphabet();
                let std = Involution::new(b.standardize()).expect("validated block");
                let cycles = std.cycles().cycles().iter().map(|&(j, i)| (alphabet[j - 1], alphabet[i - 1])).collect();
                CycleSet::new(cycles).unwrap().sorted()
            })
            .collect()
    }

    /// `Cyc_μ(π)` in μ-cycle order.
    pub fn cyc_mu(&self) -> CycleSet {
        CycleSet::new(self.block_cycles().iter().flat_map(|c| c.cycles().to_vec()).collect()).unwrap()
    }

    /// `y_π`, the involution with `Cyc(y_π) = Cyc_μ(π)`.
    pub fn y(&self) -> Involution {
        Involution::from_cycles(self.n(), &self.cyc_mu()).unwrap()
    }

    /// `O(π)` as `(6,1)(5,5)|(3,3)|(7,2)(4,4)`.
    pub fn cycle_string(&self) -> String {
        self.block_cycles().iter().map(|c| c.to_string()).join("|")
    }

    /// Number of two-cycles in `Cyc_μ(π)`.
    pub fn kappa(&self) -> usize {
        self.cyc_mu().cycles().iter().filter(|(b, a)| b != a).count()
    }

    /// `π ∘_μ s_i` with the kind of step taken.
    pub fn act_step(&self, i: usize) -> (MuInvolution, Step) {
        let n = self.n();
        assert!(i >= 1 && i < n, "letter {i} out of range for n = {n}");
        let (bi, bj) = (self.block_of_value(i), self.block_of_value(i + 1));
        if bi != bj {
            if self.perm.position_of(i) < self.perm.position_of(i + 1) {
                let perm = self.perm.swap_values(i, i + 1);
                (MuInvolution { perm, mu: self.mu.clone() }, Step::Between)
            } else {
                (self.clone(), Step::Absorbed)
            }
        } else {
            let mut blocks = self.blocks();
            let block = &blocks[bi];
            let r = block.relative_value(i).unwrap();
            let y = Involution::new(block.standardize()).unwrap();
            let z = y.iprod_simple(r);
            if z == y {
                return (self.clone(), Step::Absorbed);
            }
            blocks[bi] = BlockWord::destandardize(z.perm(), &block.alphabet());
            let oneline: Vec<usize> = blocks.iter().flat_map(|b| b.letters().iter().copied()).collect();
            let perm = Permutation::new(oneline).unwrap();
            (MuInvolution { perm, mu: self.mu.clone() }, Step::Within)
        }
    }

    /// `π ∘_μ s_i`.
    pub fn act(&self, i: usize) -> MuInvolution {
        self.act_step(i).0
    }

    /// `π ∘_μ w`, folding a reduced word of `w`.
    pub fn act_perm(&self, w: &Permutation) -> MuInvolution {
        w.reduced_word().letters().iter().fold(self.clone(), |pi, &i| pi.act(i))
    }

    /// `(ℓ_μ, ℓ^I_μ, ℓ^B_μ)`. Within-block steps total `Σ ℓ̂(std B_i)`;
    /// between-block steps are the inversions across blocks, shared by all atoms.
    pub fn ell_mu(&self) -> MuLength {
        let within: usize = self.blocks().iter().map(|b| Involution::new(b.standardize()).unwrap().ellhat()).sum();
        let n = self.n();
        let block: Vec<usize> = (1..=n).map(|p| self.mu.block_of_position(p)).collect();
        let between = (1..=n)
            .flat_map(|p| (p + 1..=n).map(move |q| (p, q)))
            .filter(|&(p, q)| block[p - 1] != block[q - 1] && self.perm.get(p) > self.perm.get(q))
            .count();
        MuLength { total: within + between, within, between }
    }

    /// `𝓐^{-1}_μ(π)`: concatenations of inverse block atoms, sorted.
    pub fn inverse_atoms(&self) -> Vec<Permutation> {
        let per_block: Vec<Vec<BlockWord>> =
            self.blocks().iter().map(|b| block_inverse_atoms(b).expect("validated block")).collect();
        let mut out: Vec<Permutation> = per_block
            .iter()
            .multi_cartesian_product()
            .map(|choice| Permutation::new(choice.iter().flat_map(|q| q.letters().iter().copied()).collect()).unwrap())
            .collect();
        if per_block.is_empty() {
            out.push(Permutation::identity(0));
        }
        out.sort();
        out
    }

    /// `𝓐_μ(π)`, sorted.
    pub fn atoms(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = self.inverse_atoms().iter().map(Permutation::inverse).collect();
        out.sort();
        out
    }

    /// Membership of `u` in `𝓐^{-1}_μ(π)` without enumerating atoms.
    pub fn is_inverse_atom(&self, u: &Permutation) -> bool {
        if u.n() != self.n() {
            return false;
        }
        let line = u.oneline();
        self.blocks().iter().zip(self.mu.block_ranges()).all(|(block, range)| {
            let segment = BlockWord(line[range].to_vec());
            if segment.alphabet() != block.alphabet() {
                return false;
            }
            let y = Involution::new(block.standardize()).unwrap();
            let atom = segment.standardize().inverse();
            atom.length() == y.ellhat() && y.is_atom(&atom)
        })
    }

    pub fn is_atom(&self, w: &Permutation) -> bool {
        self.is_inverse_atom(&w.inverse())
    }

    /// `𝓡_μ(π) = ⊔_{w ∈ 𝓐_μ(π)} 𝓡(w)`, sorted.
    pub fn reduced_words(&self) -> Vec<Word> {
        let mut out: Vec<Word> = self.atoms().iter().flat_map(|w| w.reduced_words()).collect();
        out.sort();
        out
    }

    /// `|𝓡_μ(π)|`.
    pub fn count_reduced_words(&self) -> u128 {
        self.atoms().iter().map(Permutation::count_reduced_words).sum()
    }

    /// `τ′`: appends `n+1` as a singleton block.
    pub fn padded(&self) -> MuInvolution {
        MuInvolution { perm: self.perm.pad(self.n() + 1), mu: self.mu.padded() }
    }

    /// The same permutation read with another composition.
    pub fn with_mu(&self, mu: &Composition) -> Result<MuInvolution> {
        MuInvolution::new(self.perm.clone(), mu.clone())
    }
}

/// `e ∘_μ s_{a_1} ∘_μ ⋯ ∘_μ s_{a_p}`.
pub fn mu_hecke_fold(mu: &Composition, word: &Word) -> Result<MuInvolution> {
    let n = mu.n();
    word.letters().iter().try_fold(MuInvolution::identity(mu), |pi, &i| {
        if i == 0 || i >= n {
            Err(Error::LetterOutOfRange { letter: i, n })
        } else {
            Ok(pi.act(i))
        }
    })
}

impl fmt::Display for MuInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        let s = self.blocks().iter().map(|b| render_values(b.letters().iter().copied(), n)).join("|");
        f.write_str(&s)
    }
}

impl fmt::Debug for MuInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MuInvolution({self})")
    }
}

impl FromStr for MuInvolution {
    type Err = Error;

    /// Blocks separated by `|`; digits, or comma-separated values when `n ≥ 10`.
    fn from_str(s: &str) -> Result<Self> {
        let blocks = s
            .trim()
            .split('|')
            .map(|b| {
                let values = parse_values(b)?;
                if values.is_empty() {
                    return Err(Error::Parse(format!("empty block in {s:?}")));
                }
                BlockWord::new(values)
            })
            .collect::<Result<Vec<_>>>()?;
        MuInvolution::from_blocks(&blocks)
    }
}

impl Serialize for MuInvolution {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Breadth-first closure of `e` under `∘_μ s_i`, recording distances and
/// the predecessor edges that realize them. Serves as the definitional
/// oracle for `ℓ_μ`, reduced μ-words and atoms.
pub struct FoldTable {
    mu: Composition,
    dist: HashMap<MuInvolution, usize>,
    preds: HashMap<MuInvolution, Vec<(MuInvolution, usize)>>,
}

impl FoldTable {
    fn build(mu: &Composition) -> FoldTable {
        let e = MuInvolution::identity(mu);
        let mut dist = HashMap::from([(e.clone(), 0)]);
        let mut preds: HashMap<MuInvolution, Vec<(MuInvolution, usize)>> = HashMap::new();
        let mut queue = VecDeque::from([e]);
        while let Some(pi) = queue.pop_front() {
            let d = dist[&pi];
            for i in 1..mu.n() {
                let next = pi.act(i);
                if next == pi {
                    continue;
                }
                match dist.get(&next) {
                    None => {
                        dist.insert(next.clone(), d + 1);
                        preds.entry(next.clone()).or_default().push((pi.clone(), i));
                        queue.push_back(next);
                    }
                    Some(&dn) if dn == d + 1 => {
                        preds.entry(next).or_default().push((pi.clone(), i));
                    }
                    Some(_) => {}
                }
            }
        }
        FoldTable { mu: mu.clone(), dist, preds }
    }

    /// Shared table for `mu`, built on first use.
    pub fn get(mu: &Composition) -> Arc<FoldTable> {
        static CACHE: OnceLock<Mutex<HashMap<Composition, Arc<FoldTable>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(t) = cache.lock().unwrap().get(mu) {
            return t.clone();
        }
        let table = Arc::new(FoldTable::build(mu));
        cache.lock().unwrap().entry(mu.clone()).or_insert(table).clone()
    }

    pub fn mu(&self) -> &Composition {
        &self.mu
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    pub fn elements(&self) -> Vec<MuInvolution> {
        let mut v: Vec<MuInvolution> = self.dist.keys().cloned().collect();
        v.sort();
        v
    }

    /// BFS distance from `e`.
    pub fn ell(&self, pi: &MuInvolution) -> Option<usize> {
        self.dist.get(pi).copied()
    }

    /// Number of shortest words reaching `pi`.
    pub fn count_reduced_words(&self, pi: &MuInvolution) -> u128 {
        fn rec(t: &FoldTable, pi: &MuInvolution, memo: &mut HashMap<MuInvolution, u128>) -> u128 {
            if t.dist.get(pi) == Some(&0) {
                return 1;
            }
            if let Some(&c) = memo.get(pi) {
                return c;
            }
            let c = t.preds.get(pi).map_or(0, |ps| ps.iter().map(|(p, _)| rec(t, p, memo)).sum());
            memo.insert(pi.clone(), c);
            c
        }
        rec(self, pi, &mut HashMap::new())
    }

    /// All shortest words reaching `pi`, sorted.
    pub fn reduced_words(&self, pi: &MuInvolution) -> Vec<Word> {
        fn rec(t: &FoldTable, pi: &MuInvolution) -> Vec<Vec<usize>> {
            if t.dist.get(pi) == Some(&0) {
                return vec![vec![]];
            }
            t.preds
                .get(pi)
                .into_iter()
                .flatten()
                .flat_map(|(p, i)| {
                    rec(t, p).into_iter().map(move |mut w| {
                        w.push(*i);
                        w
                    })
                })
                .collect()
        }
        let mut out: Vec<Word> = rec(self, pi).into_iter().map(Word::new).collect();
        out.sort();
        out
    }

    /// `{w : ℓ(w) = ℓ_μ(π), e ∘_μ w = π}` by scanning `S_n`, grouped by target.
    pub fn atoms_by_scan(&self) -> HashMap<MuInvolution, Vec<Permutation>> {
        let e = MuInvolution::identity(&self.mu);
        let mut out: HashMap<MuInvolution, Vec<Permutation>> = HashMap::new();
        for w in Permutation::all(self.mu.n()) {
            let pi = e.act_perm(&w);
            if self.dist[&pi] == w.length() {
                out.entry(pi).or_default().push(w);
            }
        }
        for v in out.values_mut() {
            v.sort();
        }
        out
    }
}
