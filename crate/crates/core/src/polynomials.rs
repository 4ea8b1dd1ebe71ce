//! Sparse multivariate integer polynomials, divided differences, Schubert and
//! Grothendieck polynomials, and Monk/transition expansions.
//!
//! Coefficients are checked `i64`; overflow is reported as an error by the
//! `try_*` methods and panics through the operator impls. It never wraps.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::permutations::Permutation;

pub type Exponent = Vec<u16>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPolynomial {
    nvars: usize,
    terms: BTreeMap<Exponent, i64>,
}

impl MultiPolynomial {
    pub fn zero(nvars: usize) -> Self {
        MultiPolynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    pub fn constant(nvars: usize, c: i64) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    /// The variable `x_i` (1-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= nvars, "x{i} outside {nvars} variables");
        let mut e = vec![0; nvars];
        e[i - 1] = 1;
        Self::monomial(nvars, e, 1)
    }

    pub fn monomial(nvars: usize, exponent: Exponent, coeff: i64) -> Self {
        assert_eq!(exponent.len(), nvars);
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exponent, coeff);
        }
        MultiPolynomial { nvars, terms }
    }

    /// `x_1^{n-1} x_2^{n-2} ⋯ x_{n-1}`.
    pub fn staircase(nvars: usize) -> Self {
        Self::monomial(nvars, (0..nvars).map(|k| (nvars - 1 - k) as u16).collect(), 1)
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponent, i64)>) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::SizeMismatch { left: nvars, right: e.len() });
            }
            p.add_term(e, c)?;
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, i64)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn coefficient(&self, exponent: &[u16]) -> i64 {
        self.terms.get(exponent).copied().unwrap_or(0)
    }

    fn add_term(&mut self, e: Exponent, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().checked_add(c).ok_or(Error::Overflow("addition"))?;
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
        Ok(())
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::SizeMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c)?;
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.try_scale(-1)?)
    }

    pub fn try_scale(&self, k: i64) -> Result<Self> {
        let mut out = Self::zero(self.nvars);
        if k == 0 {
            return Ok(out);
        }
        for (e, &c) in &self.terms {
            let v = c.checked_mul(k).ok_or(Error::Overflow("scaling"))?;
            out.terms.insert(e.clone(), v);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut acc: HashMap<Exponent, i64> = HashMap::new();
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &other.terms {
                let e: Exponent = ea
                    .iter()
                    .zip(eb)
                    .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow("exponent")))
                    .collect::<Result<_>>()?;
                let c = ca.checked_mul(cb).ok_or(Error::Overflow("multiplication"))?;
                let slot = acc.entry(e).or_insert(0);
                *slot = slot.checked_add(c).ok_or(Error::Overflow("multiplication"))?;
            }
        }
        Ok(MultiPolynomial { nvars: self.nvars, terms: acc.into_iter().filter(|(_, c)| *c != 0).collect() })
    }

    /// Exact division by an integer; fails unless every coefficient divides.
    pub fn try_div_exact(&self, k: i64) -> Result<Self> {
        if k == 0 || self.terms.values().any(|c| c % k != 0) {
            return Err(Error::Precondition(format!("not divisible by {k}")));
        }
        Ok(MultiPolynomial { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), c / k)).collect() })
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| total(e)).max()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| total(e)).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree() == self.min_degree()
    }

    pub fn homogeneous_component(&self, d: usize) -> Self {
        MultiPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(e, _)| total(e) == d).map(|(e, &c)| (e.clone(), c)).collect(),
        }
    }

    /// The homogeneous component of least degree.
    pub fn lowest_component(&self) -> Self {
        match self.min_degree() {
            Some(d) => self.homogeneous_component(d),
            None => self.clone(),
        }
    }

    /// Degrees of all nonzero homogeneous components, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self.terms.keys().map(|e| total(e)).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// Re-embeds into `m ≥ nvars` variables.
    pub fn pad(&self, m: usize) -> Self {
        assert!(m >= self.nvars, "cannot shrink {} variables to {m}", self.nvars);
        if m == self.nvars {
            return self.clone();
        }
        MultiPolynomial {
            nvars: m,
            terms: self
                .terms
                .iter()
                .map(|(e, &c)| {
                    let mut e = e.clone();
                    e.resize(m, 0);
                    (e, c)
                })
                .collect(),
        }
    }

    /// `s_i(f)`: exchange `x_i` and `x_{i+1}`.
    pub fn swap_vars(&self, i: usize) -> Self {
        MultiPolynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, &c)| {
                    let mut e = e.clone();
                    e.swap(i - 1, i);
                    (e, c)
                })
                .collect(),
        }
    }

    pub fn is_symmetric_in(&self, i: usize) -> bool {
        self.swap_vars(i) == *self
    }

    /// `∂_i f = (f − s_i f)/(x_i − x_{i+1})`, computed term by term:
    /// `x_i^p x_{i+1}^q` with `p > q` maps to
    /// `x_i^q x_{i+1}^q · Σ_{k<p−q} x_i^{p−q−1−k} x_{i+1}^k`, and
    /// `p < q` gives the negated mirror image.
    pub fn divided_difference(&self, i: usize) -> Self {
        assert!(i >= 1 && i < self.nvars, "∂_{i} needs i < {}", self.nvars);
        let mut out = Self::zero(self.nvars);
        for (e, &c) in &self.terms {
            let (p, q) = (e[i - 1], e[i]);
            let (hi, lo, sign) = match p.cmp(&q) {
                Ordering::Equal => continue,
                Ordering::Greater => (p, q, 1),
                Ordering::Less => (q, p, -1),
            };
            let gap = hi - lo;
            for k in 0..gap {
                let mut f = e.clone();
                f[i - 1] = lo + gap - 1 - k;
                f[i] = lo + k;
                out.add_term(f, sign * c).expect("divided difference coefficient overflow");
            }
        }
        out
    }

    /// `π_i f = ∂_i((1 − x_{i+1})·f)`.
    pub fn isobaric_divided_difference(&self, i: usize) -> Self {
        let mut shifted = Self::zero(self.nvars);
        for (e, &c) in &self.terms {
            let mut f = e.clone();
            f[i] += 1;
            shifted.terms.insert(f, c);
        }
        (self - &shifted).divided_difference(i)
    }

    /// Parses the canonical rendering, e.g. `x1^2*x2 - 3*x3 + 1`.
    pub fn parse(text: &str, nvars: usize) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = Self::zero(nvars);
        let mut pieces = Vec::new();
        let mut start = 0;
        for (k, ch) in s.char_indices() {
            if (ch == '+' || ch == '-') && k > 0 && !s[..k].ends_with('^') {
                pieces.push(&s[start..k]);
                start = k;
            }
        }
        pieces.push(&s[start..]);
        for piece in pieces {
            let (sign, body) = match piece.as_bytes().first() {
                Some(b'-') => (-1i64, &piece[1..]),
                Some(b'+') => (1, &piece[1..]),
                _ => (1, piece),
            };
            if body.is_empty() {
                return Err(Error::Parse(format!("dangling sign in {text:?}")));
            }
            let mut coeff = sign;
            let mut e = vec![0u16; nvars];
            for factor in body.split('*') {
                if let Some(rest) = factor.strip_prefix('x') {
                    let (idx, pow) = match rest.split_once('^') {
                        Some((a, b)) => (a, b),
                        None => (rest, "1"),
                    };
                    let idx: usize = idx.parse().map_err(|_| Error::Parse(format!("bad variable {factor:?}")))?;
                    let pow: u16 = pow.parse().map_err(|_| Error::Parse(format!("bad exponent {factor:?}")))?;
                    if idx == 0 || idx > nvars {
                        return Err(Error::Parse(format!("x{idx} outside {nvars} variables")));
                    }
                    e[idx - 1] = e[idx - 1].checked_add(pow).ok_or(Error::Overflow("exponent"))?;
                } else {
                    let k: i64 = factor.parse().map_err(|_| Error::Parse(format!("bad factor {factor:?}")))?;
                    coeff = coeff.checked_mul(k).ok_or(Error::Overflow("parse"))?;
                }
            }
            out.add_term(e, coeff)?;
        }
        Ok(out)
    }

    /// Terms in descending graded lexicographic order.
    pub fn sorted_terms(&self) -> Vec<(&Exponent, i64)> {
        let mut ts: Vec<_> = self.terms().collect();
        ts.sort_by(|a, b| grlex(b.0, a.0));
        ts
    }
}

fn total(e: &[u16]) -> usize {
    e.iter().map(|&x| x as usize).sum()
}

/// Graded lexicographic comparison of exponent vectors.
pub fn grlex(a: &[u16], b: &[u16]) -> Ordering {
    total(a).cmp(&total(b)).then_with(|| a.cmp(b))
}

impl fmt::Display for MultiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let mut factors: Vec<String> = Vec::new();
            let abs = c.unsigned_abs();
            let is_const = e.iter().all(|&x| x == 0);
            if abs != 1 || is_const {
                factors.push(abs.to_string());
            }
            for (v, &x) in e.iter().enumerate() {
                match x {
                    0 => {}
                    1 => factors.push(format!("x{}", v + 1)),
                    _ => factors.push(format!("x{}^{x}", v + 1)),
                }
            }
            let body = factors.join("*");
            match (k, c < 0) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPolynomial[{}]({self})", self.nvars)
    }
}

impl Add for &MultiPolynomial {
    type Output = MultiPolynomial;
    fn add(self, rhs: Self) -> MultiPolynomial {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &MultiPolynomial {
    type Output = MultiPolynomial;
    fn sub(self, rhs: Self) -> MultiPolynomial {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &MultiPolynomial {
    type Output = MultiPolynomial;
    fn mul(self, rhs: Self) -> MultiPolynomial {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &MultiPolynomial {
    type Output = MultiPolynomial;
    fn neg(self) -> MultiPolynomial {
        self.try_scale(-1).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl std::iter::Sum for MultiPolynomial {
    fn sum<I: Iterator<Item = MultiPolynomial>>(mut iter: I) -> Self {
        let first = iter.next().expect("sum of no polynomials has no variable count");
        iter.fold(first, |acc, p| &acc + &p)
    }
}

type PolyCache = Mutex<HashMap<Permutation, Arc<MultiPolynomial>>>;

fn schubert_cache() -> &'static PolyCache {
    static CACHE: OnceLock<PolyCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn grothendieck_cache() -> &'static PolyCache {
    static CACHE: OnceLock<PolyCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Descends from `w_0` through `op`, memoizing on the permutation with its
/// trailing fixed points removed (both families are stable under `S_n ↪ S_{n+1}`).
fn descend(
    w: &Permutation,
    cache: &PolyCache,
    op: fn(&MultiPolynomial, usize) -> MultiPolynomial,
) -> Arc<MultiPolynomial> {
    let key = w.trimmed();
    if let Some(p) = cache.lock().unwrap().get(&key) {
        return p.clone();
    }
    let m = key.n();
    let p = if m == 0 {
        MultiPolynomial::one(1)
    } else if key == Permutation::longest(m) {
        MultiPolynomial::staircase(m)
    } else {
        let i = (1..m).find(|&i| !key.has_right_descent(i)).unwrap();
        let up = key.swap_positions(i, i + 1);
        let parent = descend(&up, cache, op);
        op(&parent.pad(m.max(parent.nvars())), i)
    };
    let p = Arc::new(p);
    cache.lock().unwrap().insert(key, p.clone());
    p
}

/// `𝔖_w` in `n = w.n()` variables (at least one).
pub fn schubert(w: &Permutation) -> MultiPolynomial {
    let p = descend(w, schubert_cache(), MultiPolynomial::divided_difference);
    let n = w.n().max(p.nvars());
    p.pad(n)
}

/// `𝔊_w` with the `β = −1` convention, in `w.n()` variables.
pub fn grothendieck(w: &Permutation) -> MultiPolynomial {
    let p = descend(w, grothendieck_cache(), MultiPolynomial::isobaric_divided_difference);
    let n = w.n().max(p.nvars());
    p.pad(n)
}

/// Schubert polynomial computed by the Lascoux–Schützenberger transition
/// recursion instead of divided differences. Used as a cross-check.
pub fn schubert_via_transition(w: &Permutation) -> MultiPolynomial {
    fn rec(w: &Permutation, memo: &mut HashMap<Permutation, MultiPolynomial>) -> MultiPolynomial {
        let n = w.n();
        if let Some(p) = memo.get(w) {
            return p.clone();
        }
        let p = match (1..n).rev().find(|&i| w.has_right_descent(i)) {
            None => MultiPolynomial::one(n),
            Some(r) => {
                let s = (r + 1..=n).filter(|&j| w.get(j) < w.get(r)).max().unwrap();
                let v = w.swap_positions(r, s);
                let (up, down) = transition_expand_within(&v, r);
                debug_assert!(up.contains(w));
                let mut acc = &MultiPolynomial::var(n, r) * &rec(&v, memo);
                for u in &down {
                    acc = &acc + &rec(u, memo);
                }
                for u in up.iter().filter(|u| *u != w) {
                    acc = &acc - &rec(u, memo);
                }
                acc
            }
        };
        memo.insert(w.clone(), p.clone());
        p
    }
    rec(w, &mut HashMap::new())
}

fn transition_expand_within(v: &Permutation, r: usize) -> (Vec<Permutation>, Vec<Permutation>) {
    let n = v.n();
    let l = v.length();
    let up = (r + 1..=n).map(|s| v.swap_positions(r, s)).filter(|u| u.length() == l + 1).collect();
    let down = (1..r).map(|h| v.swap_positions(h, r)).filter(|u| u.length() == l + 1).collect();
    (up, down)
}

/// Monk's rule: the set `{w·t_{kl} : k ≤ r < l, w ⋖ w·t_{kl}}`, computed in
/// `S_{n+1}` so that covers reaching the new last position exist.
pub fn monk_expand(w: &Permutation, r: usize) -> Result<Vec<Permutation>> {
    let n = w.n();
    if r == 0 || r > n {
        return Err(Error::ValueOutOfRange { value: r, n });
    }
    let w = w.pad(n + 1);
    let l = w.length();
    let mut out: Vec<Permutation> = (1..=r)
        .flat_map(|k| (r + 1..=n + 1).map(move |m| (k, m)))
        .map(|(k, m)| w.swap_positions(k, m))
        .filter(|u| u.length() == l + 1)
        .collect();
    out.sort();
    Ok(out)
}

/// Transition: `x_r·𝔖_v = Σ_up 𝔖 − Σ_down 𝔖` with `up = {v·t_{rs} : s > r}`
/// and `down = {v·t_{hr} : h < r}` restricted to covers, in `S_{n+1}`.
pub fn transition_expand(v: &Permutation, r: usize) -> Result<(Vec<Permutation>, Vec<Permutation>)> {
    let n = v.n();
    if r == 0 || r > n {
        return Err(Error::ValueOutOfRange { value: r, n });
    }
    let (mut up, mut down) = transition_expand_within(&v.pad(n + 1), r);
    up.sort();
    down.sort();
    Ok((up, down))
}

/// Sum of Schubert polynomials over `perms`, in `nvars` variables.
pub fn schubert_sum<'a>(perms: impl IntoIterator<Item = &'a Permutation>, nvars: usize) -> MultiPolynomial {
    perms.into_iter().fold(MultiPolynomial::zero(nvars), |acc, w| &acc + &schubert(w).pad(nvars))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn poly(s: &str, n: usize) -> MultiPolynomial {
        MultiPolynomial::parse(s, n).unwrap()
    }

    #[test]
    fn ring_basics() {
        let f = poly("x1^2*x2 - 3*x3 + 2", 3);
        assert_eq!(&f + &MultiPolynomial::zero(3), f);
        assert_eq!(&f * &MultiPolynomial::one(3), f);
        let a = poly("x1 + x2", 3);
        let b = poly("x1 - x2", 3);
        assert_eq!(&a * &b, poly("x1^2 - x2^2", 3));
        assert!((&f - &f).is_zero());
        assert!(a.try_add(&MultiPolynomial::zero(2)).is_err());
    }

    #[test]
    fn overflow_is_reported() {
        let big = MultiPolynomial::constant(1, i64::MAX);
        assert_eq!(big.try_add(&MultiPolynomial::one(1)), Err(Error::Overflow("addition")));
        assert_eq!(big.try_mul(&MultiPolynomial::constant(1, 2)), Err(Error::Overflow("multiplication")));
        assert!(big.try_scale(3).is_err());
    }

    #[test]
    fn rendering_round_trip() {
        let f = poly("-x2 + 3*x1^2*x3 + 1 - x1*x2", 3);
        assert_eq!(f.to_string(), "3*x1^2*x3 - x1*x2 - x2 + 1");
        assert_eq!(MultiPolynomial::parse(&f.to_string(), 3).unwrap(), f);
        assert_eq!(MultiPolynomial::zero(2).to_string(), "0");
        assert_eq!(MultiPolynomial::parse("0", 2).unwrap(), MultiPolynomial::zero(2));
        assert!(MultiPolynomial::parse("x4", 3).is_err());
        assert!(MultiPolynomial::parse("x1 +", 3).is_err());
    }

    #[test]
    fn divided_difference_examples() {
        assert_eq!(poly("x1^2*x2", 3).divided_difference(2), poly("x1^2", 3));
        assert!(poly("x1*x2 + x1 + x2", 3).divided_difference(1).is_zero());
        assert_eq!(MultiPolynomial::var(3, 2).divided_difference(2), MultiPolynomial::one(3));
        let f = poly("x1^3*x2 + 5*x2^2*x3 - x1", 3);
        let d = f.divided_difference(1);
        assert!(d.is_symmetric_in(1));
        // (x1 − x2)·∂_1 f = f − s_1 f
        assert_eq!(&poly("x1 - x2", 3) * &d, &f - &f.swap_vars(1));
    }

    #[test]
    fn isobaric_examples() {
        for i in 1..3 {
            assert_eq!(MultiPolynomial::one(3).isobaric_divided_difference(i), MultiPolynomial::one(3));
        }
        // ∂_1((1 − x2)·x1) = ∂_1(x1) − ∂_1(x1·x2) = 1 − 0
        assert_eq!(MultiPolynomial::var(2, 1).isobaric_divided_difference(1), MultiPolynomial::one(2));
        assert_eq!(poly("x1^2", 3).isobaric_divided_difference(1), poly("x1 + x2 - x1*x2", 3));
    }

    #[test]
    fn schubert_examples() {
        assert_eq!(schubert(&p("312")), poly("x1^2", 3));
        assert_eq!(schubert(&p("123")), MultiPolynomial::one(3));
        assert_eq!(schubert(&p("321")), poly("x1^2*x2", 3));
        assert_eq!(schubert(&p("132")), poly("x1 + x2", 3));
        assert_eq!(schubert(&p("1432")), poly("x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x2^2*x3", 4));
    }

    #[test]
    fn grothendieck_examples() {
        assert_eq!(grothendieck(&p("123")), MultiPolynomial::one(3));
        assert_eq!(grothendieck(&p("321")), MultiPolynomial::staircase(3));
        assert_eq!(grothendieck(&p("312")).lowest_component(), poly("x1^2", 3));
        assert_eq!(grothendieck(&p("132")), poly("x1 + x2 - x1*x2", 3));
    }

    #[test]
    fn schubert_structure_s5() {
        for w in Permutation::all(5) {
            let s = schubert(&w);
            assert!(s.is_homogeneous());
            assert_eq!(s.degree(), Some(w.length()));
            assert!(s.terms().all(|(_, c)| c > 0));
            assert_eq!(s, schubert_via_transition(&w));
            assert_eq!(grothendieck(&w).lowest_component(), s);
            assert_eq!(schubert(&w.pad(6)), s.pad(6));
        }
    }

    #[test]
    fn monk_rule_s4() {
        assert_eq!(monk_expand(&p("12"), 1).unwrap(), vec![p("213")]);
        for w in Permutation::all(4) {
            for r in 1..=4 {
                let covers = monk_expand(&w, r).unwrap();
                let lhs = &(1..=r).map(|k| MultiPolynomial::var(5, k)).sum::<MultiPolynomial>() * &schubert(&w).pad(5);
                assert_eq!(lhs, schubert_sum(&covers, 5), "w={w} r={r}");
            }
        }
        // w_0 has no covers in S_4 itself; only padding supplies them
        let w0 = Permutation::longest(4);
        assert!(monk_expand(&w0, 2).unwrap().iter().all(|u| u.get(5) != 5));
    }

    #[test]
    fn transition_s4() {
        let (up, down) = transition_expand(&p("123"), 1).unwrap();
        assert_eq!(up, vec![p("2134")]);
        assert!(down.is_empty());
        // x2 = 𝔖_{s2} − 𝔖_{s1}
        let (up, down) = transition_expand(&p("123"), 2).unwrap();
        assert_eq!(up, vec![p("1324")]);
        assert_eq!(down, vec![p("2134")]);
        for v in Permutation::all(4) {
            for r in 1..=4 {
                let (up, down) = transition_expand(&v, r).unwrap();
                let lhs = &MultiPolynomial::var(5, r) * &schubert(&v).pad(5);
                assert_eq!(lhs, &schubert_sum(&up, 5) - &schubert_sum(&down, 5), "v={v} r={r}");
            }
        }
        let (up, down) = transition_expand(&p("312"), 1).unwrap();
        assert_eq!(up, vec![p("4123")]);
        assert!(down.is_empty());
        assert_eq!(schubert(&p("4123")), poly("x1^3", 4));
    }
}
