//! Exhaustive and sampled oracle sweeps, run in parallel.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use itertools::Itertools;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rayon::prelude::*;
use serde::Serialize;

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::involutions::{inv_schubert, Involution};
use crate::mu_involutions::{mu_bruhat_leq, mu_exchange, nearly_mu_reduced, FoldTable, MuInvolution};
use crate::permutations::{Permutation, Word};
use crate::polynomials::schubert;
use crate::schubert_mu::{admissible_pairs, mu_grothendieck, mu_schubert, refinement_expand, verify_transition};

const MAX_REPORTED: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Atoms,
    Transition,
    Exchange,
    Refinement,
    Endpoints,
    Grothendieck,
    Roundtrip,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Atoms,
        Suite::Transition,
        Suite::Exchange,
        Suite::Refinement,
        Suite::Endpoints,
        Suite::Grothendieck,
        Suite::Roundtrip,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Atoms => "atoms",
            Suite::Transition => "transition",
            Suite::Exchange => "exchange",
            Suite::Refinement => "refinement",
            Suite::Endpoints => "endpoints",
            Suite::Grothendieck => "grothendieck",
            Suite::Roundtrip => "roundtrip",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepOptions {
    pub max_n: usize,
    /// Random instances drawn at `max_n + 1` (transition suite only).
    pub samples: usize,
    pub seed: u64,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { max_n: 4, samples: 0, seed: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub max_n: usize,
    pub checked: u64,
    pub failures: u64,
    pub examples: Vec<String>,
    pub passed: bool,
}

struct Tally {
    checked: AtomicU64,
    failures: AtomicU64,
    examples: Mutex<Vec<String>>,
}

impl Tally {
    fn new() -> Self {
        Tally { checked: AtomicU64::new(0), failures: AtomicU64::new(0), examples: Mutex::new(Vec::new()) }
    }

    fn check(&self, ok: bool, what: impl FnOnce() -> String) {
        self.checked.fetch_add(1, Ordering::Relaxed);
        if !ok {
            self.failures.fetch_add(1, Ordering::Relaxed);
            let mut ex = self.examples.lock().unwrap();
            if ex.len() < MAX_REPORTED {
                ex.push(what());
            }
        }
    }

    fn report(self, suite: Suite, max_n: usize) -> SuiteReport {
        let failures = self.failures.into_inner();
        let mut examples = self.examples.into_inner().unwrap();
        examples.sort();
        SuiteReport { suite, max_n, checked: self.checked.into_inner(), failures, examples, passed: failures == 0 }
    }
}

fn compositions(max_n: usize) -> Vec<Composition> {
    (1..=max_n).flat_map(Composition::all).collect()
}

fn instances(max_n: usize) -> Vec<MuInvolution> {
    compositions(max_n).iter().flat_map(MuInvolution::all).collect()
}

pub fn run_suite(suite: Suite, opts: &SweepOptions) -> SuiteReport {
    let tally = Tally::new();
    let n = opts.max_n;
    match suite {
        Suite::Atoms => atoms(n, &tally),
        Suite::Transition => transition(opts, &tally),
        Suite::Exchange => exchange(n, &tally),
        Suite::Refinement => refinement(n, &tally),
        Suite::Endpoints => endpoints(n, &tally),
        Suite::Grothendieck => grothendieck(n, &tally),
        Suite::Roundtrip => roundtrip(n, &tally),
    }
    tally.report(suite, n)
}

/// Atoms from the block pattern description against a scan of `S_n`
/// through the BFS table of the μ-action.
fn atoms(max_n: usize, tally: &Tally) {
    compositions(max_n).par_iter().for_each(|mu| {
        let table = FoldTable::get(mu);
        let scanned = table.atoms_by_scan();
        let all = MuInvolution::all(mu);
        tally.check(all.len() == table.len(), || format!("{mu}: {} elements vs {} reached", all.len(), table.len()));
        for pi in all {
            let atoms = pi.atoms();
            let ok = scanned.get(&pi) == Some(&atoms) && table.ell(&pi) == Some(pi.ell_mu().total);
            tally.check(ok, || format!("{pi}"));
        }
    });
}

fn transition(opts: &SweepOptions, tally: &Tally) {
    let check = |tau: &MuInvolution, i: usize, j: usize| match verify_transition(tau, i, j) {
        Ok(r) => tally.check(r.passed(), || r.instance.clone()),
        Err(e) => tally.check(false, || format!("{tau} ({i},{j}): {e}")),
    };
    instances(opts.max_n).par_iter().for_each(|tau| {
        for (i, j) in admissible_pairs(tau) {
            check(tau, i, j);
        }
    });
    if opts.samples == 0 {
        return;
    }
    let pool: Vec<MuInvolution> = Composition::all(opts.max_n + 1).iter().flat_map(MuInvolution::all).collect();
    let mut rng = StdRng::seed_from_u64(opts.seed);
    let picks: Vec<(MuInvolution, (usize, usize))> = (0..opts.samples)
        .map(|_| {
            let tau = pool.choose(&mut rng).unwrap().clone();
            let pair = *admissible_pairs(&tau).choose(&mut rng).unwrap();
            (tau, pair)
        })
        .collect();
    picks.par_iter().for_each(|(tau, (i, j))| check(tau, *i, *j));
}

/// Every nearly μ-reduced `(𝐚, m)` with `|𝐚| ≤ 7` has exactly one partner,
/// and for reduced `𝐚` the exchanged pair sits in `{j, y(j)} × {i, y(i)}`.
fn exchange(max_n: usize, tally: &Tally) {
    compositions(max_n).par_iter().filter(|mu| mu.n() >= 2).for_each(|mu| {
        let n = mu.n();
        for len in 1..=7usize {
            for letters in (0..len).map(|_| 1..n).multi_cartesian_product() {
                let word = Word::new(letters);
                for m in 1..=len {
                    let Ok((true, tau)) = nearly_mu_reduced(&word, m, mu) else { continue };
                    let ok = match mu_exchange(&word, m, mu) {
                        Ok(ex) => {
                            ex.k != m
                                && ex.pair.is_none_or(|((i, j), (i2, j2))| {
                                    let y = tau.y();
                                    tau.block_of_value(i) == tau.block_of_value(j)
                                        && (i2 == j || i2 == y.get(j))
                                        && (j2 == i || j2 == y.get(i))
                                })
                        }
                        Err(_) => false,
                    };
                    tally.check(ok, || format!("{mu} {word} m={m}"));
                }
            }
        }
    });
}

fn refinement(max_n: usize, tally: &Tally) {
    compositions(max_n).par_iter().for_each(|mu| {
        let finer: Vec<Composition> = Composition::all(mu.n()).into_iter().filter(|nu| nu.refines(mu)).collect();
        for pi in MuInvolution::all(mu) {
            let atoms = pi.atoms();
            let poly = mu_schubert(&pi);
            for nu in &finer {
                let ok = refinement_expand(&pi, nu).is_ok_and(|parts| {
                    let mut union: Vec<Permutation> = parts.iter().flat_map(MuInvolution::atoms).collect();
                    let total = union.len();
                    union.sort();
                    union.dedup();
                    let sum =
                        parts.iter().fold(crate::MultiPolynomial::zero(poly.nvars()), |acc, t| &acc + &mu_schubert(t));
                    total == union.len() && union == atoms && sum == poly
                });
                tally.check(ok, || format!("{pi} into {nu}"));
            }
        }
    });
}

/// `μ = (1^n)` against permutations and `μ = (n)` against involutions:
/// atoms, polynomials, lengths and order relations.
fn endpoints(max_n: usize, tally: &Tally) {
    (1..=max_n).into_par_iter().for_each(|n| {
        let ones = MuInvolution::all(&Composition::ones(n));
        for pi in &ones {
            let inv = pi.perm().inverse();
            let ok = pi.atoms() == vec![inv.clone()]
                && mu_schubert(pi) == schubert(&inv)
                && pi.ell_mu().total == pi.perm().length();
            tally.check(ok, || format!("{pi} over (1^{n})"));
        }
        for (a, b) in ones.iter().cartesian_product(&ones) {
            let ok = mu_bruhat_leq(a, b).unwrap() == a.perm().bruhat_leq(b.perm()).unwrap();
            tally.check(ok, || format!("{a} <= {b} over (1^{n})"));
        }
        let whole: Vec<(MuInvolution, Involution)> = MuInvolution::all(&Composition::whole(n))
            .into_iter()
            .map(|pi| {
                let y = Involution::new(pi.perm().clone()).unwrap();
                (pi, y)
            })
            .collect();
        for (pi, y) in &whole {
            let ok = pi.atoms() == *y.atoms() && mu_schubert(pi) == inv_schubert(y) && pi.ell_mu().total == y.ellhat();
            tally.check(ok, || format!("{pi} over ({n})"));
        }
        for ((a, y), (b, z)) in whole.iter().cartesian_product(&whole) {
            let ok = mu_bruhat_leq(a, b).unwrap() == y.perm().bruhat_leq(z.perm()).unwrap();
            tally.check(ok, || format!("{a} <= {b} over ({n})"));
        }
    });
}

fn grothendieck(max_n: usize, tally: &Tally) {
    instances(max_n).par_iter().for_each(|pi| {
        tally.check(mu_grothendieck(pi).lowest_component() == mu_schubert(pi), || format!("{pi}"));
    });
}

fn roundtrip(max_n: usize, tally: &Tally) {
    instances(max_n).par_iter().for_each(|pi| {
        let back: Result<MuInvolution> = pi.to_string().parse();
        let ok = back.as_ref().is_ok_and(|b| b == pi && b.mu() == pi.mu());
        tally.check(ok, || format!("{pi}"));
    });
}
