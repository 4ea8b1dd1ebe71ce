//! Involutions: cycles, the 0-Hecke conjugation action, atoms, the covering
//! operators `t^I_{ij}`, the atom graph and exchange, and involution
//! Schubert polynomials with their transition equations.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::permutations::{BlockWord, Permutation};
use crate::polynomials::{schubert_sum, MultiPolynomial};

/// A cycle `(b, a)` with `b ≥ a`; fixed points are `(a, a)`.
pub type Cycle = (usize, usize);

/// Ordered list of cycles with pairwise distinct values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct CycleSet(Vec<Cycle>);

impl CycleSet {
    pub fn new(cycles: Vec<Cycle>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &(b, a) in &cycles {
            if b < a || a == 0 {
                return Err(Error::Parse(format!("cycle ({b},{a}) is not (big,small)")));
            }
            if !seen.insert(a) || (b != a && !seen.insert(b)) {
                return Err(Error::Parse(format!("repeated value in {cycles:?}")));
            }
        }
        Ok(CycleSet(cycles))
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.0.iter().flat_map(|&(b, a)| if a == b { vec![a] } else { vec![b, a] }).collect();
        v.sort_unstable();
        v
    }

    /// Sorts by smaller entry, the within-block part of the μ-cycle order.
    pub fn sorted(mut self) -> Self {
        self.0.sort_by_key(|&(_, a)| a);
        self
    }

    pub fn contains(&self, c: Cycle) -> bool {
        self.0.contains(&c)
    }

    /// The cycle containing the value `v`.
    pub fn cycle_of(&self, v: usize) -> Option<Cycle> {
        self.0.iter().copied().find(|&(b, a)| a == v || b == v)
    }
}

impl fmt::Display for CycleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (b, a) in &self.0 {
            write!(f, "({b},{a})")?;
        }
        Ok(())
    }
}

impl FromStr for CycleSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(CycleSet::default());
        }
        let body = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("cycles must look like (b,a)(d,c): {s:?}")))?;
        let cycles = body
            .split(")(")
            .map(|pair| {
                let (b, a) = pair.split_once(',').ok_or_else(|| Error::Parse(format!("bad cycle {pair:?}")))?;
                let parse =
                    |t: &str| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad cycle value {t:?}")));
                Ok((parse(b)?, parse(a)?))
            })
            .collect::<Result<Vec<_>>>()?;
        CycleSet::new(cycles)
    }
}

impl Serialize for CycleSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `j < l < i < k` or `l < j < k < i` for cycles `(i, j)` and `(k, l)`.
pub fn cycles_cross((i, j): Cycle, (k, l): Cycle) -> bool {
    (j < l && l < i && i < k) || (l < j && j < k && k < i)
}

/// `j < l ≤ k < i` or `l < j ≤ i < k` for cycles `(i, j)` and `(k, l)`.
pub fn cycles_nest((i, j): Cycle, (k, l): Cycle) -> bool {
    (j < l && l <= k && k < i) || (l < j && j <= i && i < k)
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Involution(Permutation);

impl Involution {
    pub fn new(perm: Permutation) -> Result<Self> {
        if perm.is_involution() {
            Ok(Involution(perm))
        } else {
            Err(Error::NotAnInvolution(perm.to_string()))
        }
    }

    pub fn identity(n: usize) -> Self {
        Involution(Permutation::identity(n))
    }

    pub fn longest(n: usize) -> Self {
        Involution(Permutation::longest(n))
    }

    /// Builds the involution of `[n]` whose cycles are `cycles`; values not
    /// mentioned become fixed points.
    pub fn from_cycles(n: usize, cycles: &CycleSet) -> Result<Self> {
        let mut oneline: Vec<usize> = (1..=n).collect();
        for &(b, a) in cycles.cycles() {
            if b > n {
                return Err(Error::ValueOutOfRange { value: b, n });
            }
            oneline[a - 1] = b;
            oneline[b - 1] = a;
        }
        Ok(Involution(Permutation::new(oneline)?))
    }

    /// All involutions of `[n]`, in lexicographic order.
    pub fn all(n: usize) -> Vec<Involution> {
        fn rec(oneline: &mut Vec<usize>, out: &mut Vec<Involution>) {
            match oneline.iter().position(|&v| v == 0) {
                None => out.push(Involution(Permutation::new(oneline.clone()).unwrap())),
                Some(a) => {
                    oneline[a] = a + 1;
                    rec(oneline, out);
                    for b in a + 1..oneline.len() {
                        if oneline[b] == 0 {
                            oneline[a] = b + 1;
                            oneline[b] = a + 1;
                            rec(oneline, out);
                            oneline[b] = 0;
                        }
                    }
                    oneline[a] = 0;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut vec![0; n], &mut out);
        out.sort();
        out
    }

    pub fn perm(&self) -> &Permutation {
        &self.0
    }

    pub fn into_perm(self) -> Permutation {
        self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn get(&self, i: usize) -> usize {
        self.0.get(i)
    }

    /// `Cyc(y)` ordered by smaller entry.
    pub fn cycles(&self) -> CycleSet {
        CycleSet((1..=self.n()).filter(|&a| self.get(a) >= a).map(|a| (self.get(a), a)).collect())
    }

    /// Number of two-cycles.
    pub fn kappa(&self) -> usize {
        (1..=self.n()).filter(|&a| self.get(a) > a).count()
    }

    /// `ℓ̂(y) = (ℓ(y) + n − |Cyc(y)|)/2`.
    pub fn ellhat(&self) -> usize {
        let cyc = self.n() - self.kappa();
        (self.0.length() + self.n() - cyc) / 2
    }

    /// `y ⨟ s_i = s_i ∘ y ∘ s_i`.
    pub fn iprod_simple(&self, i: usize) -> Involution {
        Involution(self.0.hecke_mul_left(i).hecke_mul(i))
    }

    /// `y ⨟ w = w^{-1} ∘ y ∘ w`, applied letter by letter.
    pub fn iprod(&self, w: &Permutation) -> Involution {
        w.reduced_word().letters().iter().fold(self.clone(), |y, &i| y.iprod_simple(i))
    }

    /// Embeds into `𝓘_m` with new fixed points.
    pub fn pad(&self, m: usize) -> Involution {
        Involution(self.0.pad(m))
    }

    /// Membership in `𝓐(y)` by the three pattern conditions on `w`.
    pub fn is_atom(&self, w: &Permutation) -> bool {
        if w.n() != self.n() {
            return false;
        }
        let cycles = self.cycles();
        for &(b, a) in cycles.cycles() {
            let (wa, wb) = (w.get(a), w.get(b));
            if wa < wb {
                return false;
            }
            if (a + 1..b).any(|k| wa > w.get(k) && w.get(k) > wb) {
                return false;
            }
        }
        for &(b, a) in cycles.cycles() {
            for &(d, c) in cycles.cycles() {
                if a < c && b < d && !(w.get(c) >= w.get(d) && w.get(d) > w.get(a) && w.get(a) >= w.get(b)) {
                    return false;
                }
            }
        }
        true
    }

    /// `𝓐(y)`, sorted.
    pub fn atoms(&self) -> Arc<Vec<Permutation>> {
        static CACHE: OnceLock<Mutex<HashMap<Involution, Arc<Vec<Permutation>>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(a) = cache.lock().unwrap().get(self) {
            return a.clone();
        }
        let target = self.ellhat();
        let atoms: Vec<Permutation> =
            Permutation::all(self.n()).filter(|w| w.length() == target && self.is_atom(w)).collect();
        let atoms = Arc::new(atoms);
        cache.lock().unwrap().insert(self.clone(), atoms.clone());
        atoms
    }

    /// `𝓐^{-1}(y)`, sorted.
    pub fn inverse_atoms(&self) -> Vec<Permutation> {
        let mut inv: Vec<Permutation> = self.atoms().iter().map(Permutation::inverse).collect();
        inv.sort();
        inv
    }

    /// `𝔖^𝓘_y = Σ_{w ∈ 𝓐(y)} 𝔖_w`.
    pub fn schubert(&self) -> MultiPolynomial {
        schubert_sum(self.atoms().iter(), self.n())
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Involution({})", self.0)
    }
}

impl FromStr for Involution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Involution::new(s.parse()?)
    }
}

impl Serialize for Involution {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `Cyc(y)` ordered by smaller entry.
pub fn cyc(y: &Involution) -> CycleSet {
    y.cycles()
}

/// Block atoms of a block involution: words on the alphabet of `block` whose
/// standardization is an atom of `std(block)`.
pub fn block_atoms(block: &BlockWord) -> Result<Vec<BlockWord>> {
    let y = Involution::new(block.standardize())
        .map_err(|_| Error::NotABlockInvolution { index: 0, block: block.to_string() })?;
    let alphabet = block.alphabet();
    Ok(y.atoms().iter().map(|w| BlockWord::destandardize(w, &alphabet)).collect())
}

/// Inverse block atoms, sorted.
pub fn block_inverse_atoms(block: &BlockWord) -> Result<Vec<BlockWord>> {
    let y = Involution::new(block.standardize())
        .map_err(|_| Error::NotABlockInvolution { index: 0, block: block.to_string() })?;
    let alphabet = block.alphabet();
    let mut out: Vec<BlockWord> = y.inverse_atoms().iter().map(|w| BlockWord::destandardize(w, &alphabet)).collect();
    out.sort();
    Ok(out)
}

/// Edges `[⋯c,a,b⋯] ~ [⋯b,c,a⋯]` (`a < b < c`) between inverse atoms.
pub fn atom_graph(y: &Involution) -> Vec<(Permutation, Permutation)> {
    let inv = y.inverse_atoms();
    let set: BTreeSet<&Permutation> = inv.iter().collect();
    let mut edges = BTreeSet::new();
    for u in &inv {
        let word = u.oneline();
        for p in 0..word.len().saturating_sub(2) {
            let (c, a, b) = (word[p], word[p + 1], word[p + 2]);
            if a < b && b < c {
                let mut moved = word.clone();
                moved[p..p + 3].copy_from_slice(&[b, c, a]);
                let v = Permutation::new(moved).unwrap();
                if set.contains(&v) {
                    let (x, z) = if *u < v { (u.clone(), v) } else { (v, u.clone()) };
                    edges.insert((x, z));
                }
            }
        }
    }
    edges.into_iter().collect()
}

/// Connectivity of an undirected graph given by its vertex and edge lists.
pub fn is_connected<T: Ord>(vertices: &[T], edges: &[(T, T)]) -> bool {
    if vertices.is_empty() {
        return true;
    }
    let index = |v: &T| vertices.iter().position(|x| x == v).unwrap();
    let mut parent: Vec<usize> = (0..vertices.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    for (u, v) in edges {
        let (ru, rv) = (find(&mut parent, index(u)), find(&mut parent, index(v)));
        parent[ru] = rv;
    }
    let root = find(&mut parent, 0);
    (0..vertices.len()).all(|x| find(&mut parent, x) == root)
}

/// Shape of the two cycles touched by a covering operator, with `(b,a)` the
/// cycle whose smaller entry comes first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Shape {
    TwoFixed,
    ArcThenFixed,
    FixedThenArc,
    Disjoint,
    Crossing,
    Other,
}

/// The operator `t^I_{ij}` (`i < j` as values), transcribed as a case table
/// over the configuration of the cycles containing `i` and `j`. Inputs that
/// match no case return `y` unchanged.
pub fn t_involution(i: usize, j: usize, y: &Involution) -> Involution {
    match t_involution_cycles(i, j, &y.cycles()) {
        Some((removed, added)) => {
            let mut cycles: Vec<Cycle> = y.cycles().cycles().iter().copied().filter(|c| !removed.contains(c)).collect();
            cycles.extend(added);
            Involution::from_cycles(y.n(), &CycleSet(cycles)).unwrap()
        }
        None => y.clone(),
    }
}

/// Cycle-level form of [`t_involution`]: the cycles removed and added, or
/// `None` when the operator acts trivially.
pub(crate) fn t_involution_cycles(i: usize, j: usize, cycles: &CycleSet) -> Option<(Vec<Cycle>, Vec<Cycle>)> {
    if i >= j {
        return None;
    }
    let ci = cycles.cycle_of(i)?;
    let cj = cycles.cycle_of(j)?;
    if ci == cj {
        return None;
    }
    let ((b, a), (d, c)) = if ci.1 < cj.1 { (ci, cj) } else { (cj, ci) };
    let shape = match (a == b, c == d) {
        (true, true) => Shape::TwoFixed,
        (false, true) if b < c => Shape::ArcThenFixed,
        (true, false) => Shape::FixedThenArc,
        (false, false) if b < c => Shape::Disjoint,
        (false, false) if c < b && b < d => Shape::Crossing,
        _ => Shape::Other,
    };
    let label = (i, j);
    let added: Vec<Cycle> = match shape {
        Shape::TwoFixed if label == (a, c) => vec![(c, a)],
        Shape::ArcThenFixed if label == (b, c) || label == (a, c) => vec![(c, a), (b, b)],
        Shape::FixedThenArc if label == (a, d) || label == (a, c) => vec![(d, a), (c, c)],
        Shape::Disjoint if label == (b, c) => vec![(c, a), (d, b)],
        Shape::Disjoint if label == (a, c) || label == (b, d) || label == (a, d) => {
            vec![(d, a), (b, b), (c, c)]
        }
        Shape::Crossing if label == (a, c) || label == (a, d) || label == (b, d) => vec![(d, a), (b, c)],
        _ => return None,
    };
    Some((vec![(b, a), (d, c)], added))
}

/// `y ⋖ z` in Bruhat order restricted to involutions.
pub fn is_involution_cover(y: &Involution, z: &Involution) -> bool {
    y.n() == z.n() && z.ellhat() == y.ellhat() + 1 && y.perm().bruhat_leq(z.perm()).unwrap()
}

/// Upper covers of `y` reached by the `t^I` operators.
pub fn involution_covers_up(y: &Involution) -> Vec<Involution> {
    let n = y.n();
    let target = y.ellhat() + 1;
    let mut out: Vec<Involution> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .map(|(i, j)| t_involution(i, j, y))
        .filter(|z| z.ellhat() == target)
        .collect();
    out.sort();
    out.dedup();
    out
}

/// `𝓐(z) = {v·t_{ij} : v ∈ 𝓐(y), t^I_{ij}(y) = z, v ⋖ v·t_{ij}}` for a cover `y ⋖ z`.
pub fn atoms_transposition(y: &Involution, z: &Involution) -> Result<Vec<Permutation>> {
    if !is_involution_cover(y, z) {
        return Err(Error::NotACover(y.to_string(), z.to_string()));
    }
    let n = y.n();
    let labels: Vec<(usize, usize)> =
        (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).filter(|&(i, j)| t_involution(i, j, y) == *z).collect();
    let mut out = BTreeSet::new();
    for v in y.atoms().iter() {
        let l = v.length();
        for &(i, j) in &labels {
            let u = v.swap_positions(i, j);
            if u.length() == l + 1 {
                out.insert(u);
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// For `v ∈ 𝓐(y)`, `v ⋖ w` and `w` not an atom of any involution, the unique
/// other atom `u ≠ v` of `y` covered by `w`.
pub fn atom_exchange(y: &Involution, v: &Permutation, w: &Permutation) -> Result<Permutation> {
    if !y.is_atom(v) || v.length() != y.ellhat() {
        return Err(Error::Precondition(format!("{v} is not an atom of {y}")));
    }
    if w.length() != v.length() + 1 || !v.bruhat_leq(w)? {
        return Err(Error::Precondition(format!("{v} is not covered by {w}")));
    }
    if is_some_atom(w) {
        return Err(Error::Precondition(format!("{w} is an atom")));
    }
    let others: Vec<Permutation> = w.bruhat_covers_down().into_iter().filter(|u| u != v && y.is_atom(u)).collect();
    match others.as_slice() {
        [u] => Ok(u.clone()),
        _ => Err(Error::Precondition(format!("expected exactly one exchange partner, found {}", others.len()))),
    }
}

/// True when `w ∈ 𝓐(z)` for `z = w^{-1} ∘ w`.
pub fn is_some_atom(w: &Permutation) -> bool {
    let z = Involution::identity(w.n()).iprod(w);
    w.length() == z.ellhat()
}

/// `𝔖^𝓘_y`.
pub fn inv_schubert(y: &Involution) -> MultiPolynomial {
    y.schubert()
}

/// Transition sets for a cycle `(p, q) ∈ Cyc(y)`, `p ≥ q`, computed in `𝓘_{n+1}`:
/// `Φ⁺` collects covers `t^I_{pj}(y)` with `j > p` and `Φ⁻` covers
/// `t^I_{iq}(y)` with `i < q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvolutionTransition {
    pub cycle: Cycle,
    pub phi_plus: Vec<Involution>,
    pub phi_minus: Vec<Involution>,
}

pub fn inv_transition(y: &Involution, p: usize, q: usize) -> Result<InvolutionTransition> {
    if !y.cycles().contains((p, q)) {
        return Err(Error::NotACycle(p, q));
    }
    let padded = y.pad(y.n() + 1);
    let m = padded.n();
    let target = padded.ellhat() + 1;
    let mut phi_plus: Vec<Involution> =
        (p + 1..=m).map(|j| t_involution(p, j, &padded)).filter(|z| z.ellhat() == target).collect();
    let mut phi_minus: Vec<Involution> =
        (1..q).map(|i| t_involution(i, q, &padded)).filter(|z| z.ellhat() == target).collect();
    phi_plus.sort();
    phi_plus.dedup();
    phi_minus.sort();
    phi_minus.dedup();
    Ok(InvolutionTransition { cycle: (p, q), phi_plus, phi_minus })
}

/// Checks `2^{−δ(p,q)}(x_p + x_q)𝔖^𝓘_y = Σ_{Φ⁺} 𝔖^𝓘 − Σ_{Φ⁻} 𝔖^𝓘` in `n+1` variables.
pub fn verify_inv_transition(y: &Involution, p: usize, q: usize) -> Result<bool> {
    let t = inv_transition(y, p, q)?;
    let m = y.n() + 1;
    let base = y.schubert().pad(m);
    let factor =
        if p == q { MultiPolynomial::var(m, p) } else { &MultiPolynomial::var(m, p) + &MultiPolynomial::var(m, q) };
    let lhs = &factor * &base;
    let plus: MultiPolynomial = t.phi_plus.iter().map(|z| z.schubert()).fold(MultiPolynomial::zero(m), |a, b| &a + &b);
    let minus: MultiPolynomial =
        t.phi_minus.iter().map(|z| z.schubert()).fold(MultiPolynomial::zero(m), |a, b| &a + &b);
    Ok(lhs == &plus - &minus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomials::schubert;

    fn inv(s: &str) -> Involution {
        s.parse().unwrap()
    }

    fn perms(list: &[&str]) -> Vec<Permutation> {
        let mut v: Vec<Permutation> = list.iter().map(|s| s.parse().unwrap()).collect();
        v.sort();
        v
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(inv("5472163").cycles().to_string(), "(5,1)(4,2)(7,3)(6,6)");
        assert_eq!(inv("123").cycles().to_string(), "(1,1)(2,2)(3,3)");
        assert_eq!(inv("21").cycles().to_string(), "(2,1)");
        let c: CycleSet = "(5,1)(4,2)(7,3)(6,6)".parse().unwrap();
        assert_eq!(Involution::from_cycles(7, &c).unwrap(), inv("5472163"));
        assert!("(1,5)".parse::<CycleSet>().is_err());
        assert!("(5,1)(5,2)".parse::<CycleSet>().is_err());
    }

    #[test]
    fn nest_and_cross() {
        assert!(cycles_nest((5, 1), (4, 2)));
        assert!(cycles_nest((4, 2), (5, 1)));
        assert!(cycles_nest((7, 3), (6, 6)));
        assert!(cycles_cross((3, 1), (4, 2)));
        assert!(cycles_cross((4, 2), (3, 1)));
        assert!(!cycles_cross((5, 1), (4, 2)));
        assert!(!cycles_nest((2, 1), (4, 3)));
    }

    #[test]
    fn iprod_examples() {
        let e2 = Involution::identity(2);
        assert_eq!(e2.iprod_simple(1), inv("21"));
        assert_eq!(inv("21").iprod_simple(1), inv("21"));
        // e ⨟ s_2 in S_3 is s_2; then ⨟ s_1 conjugates to 321
        let e3 = Involution::identity(3);
        assert_eq!(e3.iprod_simple(2), inv("132"));
        assert_eq!(e3.iprod_simple(2).iprod_simple(1), inv("321"));
        assert_eq!(e3.iprod_simple(1).iprod_simple(2), inv("321"));
    }

    #[test]
    fn ellhat_examples() {
        assert_eq!(Involution::identity(4).ellhat(), 0);
        assert_eq!(inv("21").ellhat(), 1);
        assert_eq!(Involution::longest(3).ellhat(), 2);
    }

    #[test]
    fn atoms_example() {
        let y = inv("5472163");
        assert_eq!(y.inverse_atoms(), perms(&["4251673", "4512673", "5142673", "4251736", "4512736", "5142736"]));
        assert_eq!(*Involution::identity(4).atoms(), vec![Permutation::identity(4)]);
    }

    #[test]
    fn block_atom_examples() {
        let b: BlockWord = "742".parse().unwrap();
        let inv_atoms: Vec<String> = block_inverse_atoms(&b).unwrap().iter().map(|q| q.to_string()).collect();
        assert_eq!(inv_atoms, vec!["472", "724"]);
        let b: BlockWord = "651".parse().unwrap();
        let inv_atoms: Vec<String> = block_inverse_atoms(&b).unwrap().iter().map(|q| q.to_string()).collect();
        assert_eq!(inv_atoms, vec!["561", "615"]);
        let single: BlockWord = "3".parse().unwrap();
        assert_eq!(block_atoms(&single).unwrap(), vec![single.clone()]);
        assert!(block_atoms(&"231".parse().unwrap()).is_err());
    }

    #[test]
    fn atom_graph_example() {
        let y = inv("5472163");
        let edges = atom_graph(&y);
        assert_eq!(edges.len(), 7);
        assert!(is_connected(&y.inverse_atoms(), &edges));
        let single = inv("21");
        assert!(atom_graph(&single).is_empty());
        assert!(is_connected(&single.inverse_atoms(), &[]));
    }

    #[test]
    fn t_involution_first_row() {
        let e = Involution::identity(3);
        assert_eq!(involution_covers_up(&e), vec![inv("132"), inv("213")]);
        assert_eq!(t_involution(1, 3, &e), inv("321"));
        assert_eq!(inv("321").ellhat(), 2);
        // y = 213 reaches 321 via (b,c) and (a,c) of the arc-then-fixed row
        let y = inv("213");
        assert_eq!(t_involution(2, 3, &y), inv("321"));
        assert_eq!(t_involution(1, 3, &y), inv("321"));
        assert_eq!(t_involution(1, 2, &y), y);
    }

    #[test]
    fn schubert_examples() {
        assert_eq!(inv_schubert(&Involution::identity(3)), MultiPolynomial::one(3));
        assert_eq!(*inv("21").atoms(), vec![inv("21").into_perm()]);
        assert_eq!(inv_schubert(&inv("21")), MultiPolynomial::var(2, 1));
        let y = inv("321");
        assert_eq!(inv_schubert(&y), &schubert(&"231".parse().unwrap()) + &schubert(&"312".parse().unwrap()));
    }

    #[test]
    fn transition_fixed_point() {
        let e = Involution::identity(3);
        let t = inv_transition(&e, 2, 2).unwrap();
        assert_eq!(t.phi_plus, vec![inv("1324")]);
        assert_eq!(t.phi_minus, vec![inv("2134")]);
        assert!(verify_inv_transition(&e, 2, 2).unwrap());
        assert!(inv_transition(&e, 2, 1).is_err());
    }

    fn atoms_by_action(n: usize) -> HashMap<Involution, Vec<Permutation>> {
        let e = Involution::identity(n);
        let mut out: HashMap<Involution, Vec<Permutation>> = HashMap::new();
        for w in Permutation::all(n) {
            let y = e.iprod(&w);
            if y.ellhat() == w.length() {
                out.entry(y).or_default().push(w);
            }
        }
        out
    }

    #[test]
    fn atoms_agree_with_action() {
        for n in 1..=6 {
            let oracle = atoms_by_action(n);
            for y in Involution::all(n) {
                let mut expect = oracle.get(&y).cloned().unwrap_or_default();
                expect.sort();
                assert_eq!(*y.atoms(), expect, "{y}");
            }
        }
    }

    #[test]
    fn covers_match_bruhat() {
        for n in 1..=6 {
            let all = Involution::all(n);
            for y in &all {
                let mut expect: Vec<Involution> = all.iter().filter(|z| is_involution_cover(y, z)).cloned().collect();
                expect.sort();
                assert_eq!(involution_covers_up(y), expect, "{y}");
            }
        }
    }

    #[test]
    fn atoms_transposition_exhaustive() {
        for n in 2..=6 {
            for y in Involution::all(n) {
                for z in involution_covers_up(&y) {
                    assert_eq!(atoms_transposition(&y, &z).unwrap(), *z.atoms(), "{y} -> {z}");
                }
            }
        }
    }

    #[test]
    fn transition_exhaustive() {
        for n in 1..=5 {
            for y in Involution::all(n) {
                for (p, q) in y.cycles().cycles().to_vec() {
                    assert!(verify_inv_transition(&y, p, q).unwrap(), "{y} ({p},{q})");
                }
            }
        }
    }

    #[test]
    fn atom_graphs_connected() {
        for n in 1..=6 {
            for y in Involution::all(n) {
                assert!(is_connected(&y.inverse_atoms(), &atom_graph(&y)), "{y}");
            }
        }
    }

    #[test]
    fn exchange_exhaustive() {
        for n in 2..=5 {
            for y in Involution::all(n) {
                for v in y.atoms().iter() {
                    for w in v.bruhat_covers_up() {
                        if !is_some_atom(&w) {
                            let u = atom_exchange(&y, v, &w).unwrap();
                            assert!(u != *v && y.is_atom(&u));
                        }
                    }
                }
            }
        }
    }
}
