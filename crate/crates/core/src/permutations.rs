//! Symmetric-group toolkit: one-line permutations, reduced words, Bruhat and
//! weak orders, the 0-Hecke monoid, parabolic decomposition and
//! standardization.
//!
//! Values and positions are 1-based throughout. Products are composition of
//! functions, `(u·v)(i) = u(v(i))`, so `w·t_{ij}` swaps the entries in
//! positions `i, j` while `t_{ij}·w` swaps the values `i, j`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::composition::Composition;
use crate::error::{Error, Result};

/// A bijection of `[n]` stored in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    oneline: Vec<u8>,
}

impl Permutation {
    pub fn new(oneline: Vec<usize>) -> Result<Self> {
        let n = oneline.len();
        if n > u8::MAX as usize {
            return Err(Error::NotAPermutation(format!("size {n} too large")));
        }
        let mut seen = vec![false; n + 1];
        for &v in &oneline {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotAPermutation(format!("{oneline:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { oneline: oneline.into_iter().map(|v| v as u8).collect() })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { oneline: (1..=n as u8).collect() }
    }

    /// The longest element `w_0 = n⋯21`.
    pub fn longest(n: usize) -> Self {
        Permutation { oneline: (1..=n as u8).rev().collect() }
    }

    /// The simple transposition `s_i` in `S_n`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        Self::transposition(n, i, i + 1)
    }

    /// The transposition `t_{ij}` in `S_n`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        for v in [i, j] {
            if v == 0 || v > n {
                return Err(Error::ValueOutOfRange { value: v, n });
            }
        }
        let mut w = Self::identity(n);
        w.oneline.swap(i - 1, j - 1);
        Ok(w)
    }

    /// Every permutation of `[n]` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n as u8).permutations(n).map(|oneline| Permutation { oneline })
    }

    pub fn n(&self) -> usize {
        self.oneline.len()
    }

    /// `w(i)` for a 1-based position `i`.
    #[inline]
    pub fn get(&self, i: usize) -> usize {
        self.oneline[i - 1] as usize
    }

    pub fn oneline(&self) -> Vec<usize> {
        self.oneline.iter().map(|&v| v as usize).collect()
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.oneline
    }

    pub fn is_identity(&self) -> bool {
        self.oneline.iter().enumerate().all(|(k, &v)| v as usize == k + 1)
    }

    /// `(self·other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch { left: self.n(), right: other.n() });
        }
        Ok(Permutation { oneline: other.oneline.iter().map(|&v| self.oneline[v as usize - 1]).collect() })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (k, &v) in self.oneline.iter().enumerate() {
            inv[v as usize - 1] = (k + 1) as u8;
        }
        Permutation { oneline: inv }
    }

    /// Position of the value `v`, i.e. `w^{-1}(v)`.
    pub fn position_of(&self, v: usize) -> usize {
        self.oneline.iter().position(|&x| x as usize == v).unwrap() + 1
    }

    /// Inversion count, which is the Coxeter length.
    pub fn length(&self) -> usize {
        let w = &self.oneline;
        let mut inv = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    pub fn is_involution(&self) -> bool {
        self.oneline.iter().enumerate().all(|(k, &v)| self.oneline[v as usize - 1] as usize == k + 1)
    }

    /// `w(i) > w(i+1)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.oneline[i - 1] > self.oneline[i]
    }

    /// `i+1` appears before `i` in the one-line notation.
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.position_of(i + 1) < self.position_of(i)
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.has_right_descent(i)).collect()
    }

    /// `w·t_{ij}`: swap the entries in positions `i` and `j`.
    pub fn swap_positions(&self, i: usize, j: usize) -> Permutation {
        let mut w = self.clone();
        w.oneline.swap(i - 1, j - 1);
        w
    }

    /// `t_{ij}·w`: swap the values `i` and `j`.
    pub fn swap_values(&self, i: usize, j: usize) -> Permutation {
        let mut w = self.clone();
        for v in w.oneline.iter_mut() {
            if *v as usize == i {
                *v = j as u8;
            } else if *v as usize == j {
                *v = i as u8;
            }
        }
        w
    }

    /// `w ∘ s_i` in the 0-Hecke monoid.
    pub fn hecke_mul(&self, i: usize) -> Permutation {
        if self.has_right_descent(i) {
            self.clone()
        } else {
            self.swap_positions(i, i + 1)
        }
    }

    /// `s_i ∘ w` in the 0-Hecke monoid.
    pub fn hecke_mul_left(&self, i: usize) -> Permutation {
        if self.has_left_descent(i) {
            self.clone()
        } else {
            self.swap_values(i, i + 1)
        }
    }

    /// The Demazure product `self ∘ other`.
    pub fn demazure(&self, other: &Permutation) -> Permutation {
        other.reduced_word().letters().iter().fold(self.clone(), |acc, &i| acc.hecke_mul(i))
    }

    /// One reduced word, built by repeatedly stripping the first right descent.
    pub fn reduced_word(&self) -> Word {
        let mut w = self.clone();
        let mut rev = Vec::with_capacity(self.length());
        while let Some(i) = (1..w.n()).find(|&i| w.has_right_descent(i)) {
            rev.push(i);
            w.oneline.swap(i - 1, i);
        }
        rev.reverse();
        Word(rev)
    }

    /// Every reduced word, in lexicographic order.
    pub fn reduced_words(&self) -> Vec<Word> {
        fn rec(w: &Permutation, memo: &mut HashMap<Permutation, Vec<Vec<usize>>>) -> Vec<Vec<usize>> {
            if let Some(ws) = memo.get(w) {
                return ws.clone();
            }
            let mut out = Vec::new();
            if w.is_identity() {
                out.push(Vec::new());
            }
            for i in w.right_descents() {
                for mut prefix in rec(&w.swap_positions(i, i + 1), memo) {
                    prefix.push(i);
                    out.push(prefix);
                }
            }
            memo.insert(w.clone(), out.clone());
            out
        }
        let mut words = rec(self, &mut HashMap::new());
        words.sort();
        words.into_iter().map(Word).collect()
    }

    /// `|𝓡(w)|` without materializing the words.
    pub fn count_reduced_words(&self) -> u128 {
        fn rec(w: &Permutation, memo: &mut HashMap<Permutation, u128>) -> u128 {
            if w.is_identity() {
                return 1;
            }
            if let Some(&c) = memo.get(w) {
                return c;
            }
            let c = w.right_descents().into_iter().map(|i| rec(&w.swap_positions(i, i + 1), memo)).sum();
            memo.insert(w.clone(), c);
            c
        }
        rec(self, &mut HashMap::new())
    }

    /// Strong Bruhat order via the rank-matrix criterion.
    pub fn bruhat_leq(&self, other: &Permutation) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch { left: self.n(), right: other.n() });
        }
        let n = self.n();
        // counts[j] = #{a ≤ i : w(a) ≥ j}, updated row by row.
        let mut cv = vec![0i32; n + 2];
        let mut cw = vec![0i32; n + 2];
        for i in 0..n {
            let (a, b) = (self.oneline[i] as usize, other.oneline[i] as usize);
            cv[1..=a].iter_mut().for_each(|c| *c += 1);
            cw[1..=b].iter_mut().for_each(|c| *c += 1);
            if (1..=n).any(|j| cv[j] > cw[j]) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Upper covers `w·t_{ij}` with `ℓ(w·t_{ij}) = ℓ(w)+1`.
    pub fn bruhat_covers_up(&self) -> Vec<Permutation> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                let (a, b) = (self.get(i), self.get(j));
                if a < b && (i + 1..j).all(|k| !(a < self.get(k) && self.get(k) < b)) {
                    out.push(self.swap_positions(i, j));
                }
            }
        }
        out.sort();
        out
    }

    /// Lower covers in strong Bruhat order.
    pub fn bruhat_covers_down(&self) -> Vec<Permutation> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                let (a, b) = (self.get(i), self.get(j));
                if a > b && (i + 1..j).all(|k| !(b < self.get(k) && self.get(k) < a)) {
                    out.push(self.swap_positions(i, j));
                }
            }
        }
        out.sort();
        out
    }

    /// Upper covers `w·s_i` in right weak order.
    pub fn weak_covers_up(&self) -> Vec<Permutation> {
        (1..self.n()).filter(|&i| !self.has_right_descent(i)).map(|i| self.swap_positions(i, i + 1)).collect()
    }

    /// Writes `w = u·v` with `u ∈ S_μ` and `v` the minimal-length
    /// representative of the coset `S_μ·w`.
    pub fn parabolic_decompose(&self, mu: &Composition) -> Result<(Permutation, Permutation)> {
        if mu.n() != self.n() {
            return Err(Error::SizeMismatch { left: self.n(), right: mu.n() });
        }
        // S_μ acts on values block by block; v lists each value block in
        // increasing order across the positions it occupies.
        let n = self.n();
        let mut v = vec![0u8; n];
        for range in mu.block_ranges() {
            let lo = range.start + 1;
            let hi = range.end;
            let mut next = lo as u8;
            for (pos, &val) in self.oneline.iter().enumerate() {
                if (lo..=hi).contains(&(val as usize)) {
                    v[pos] = next;
                    next += 1;
                }
            }
        }
        let v = Permutation { oneline: v };
        let u = self.compose(&v.inverse())?;
        Ok((u, v))
    }

    /// True when `w` lies in the parabolic subgroup `S_μ`.
    pub fn in_parabolic(&self, mu: &Composition) -> bool {
        mu.block_ranges().into_iter().all(|r| r.clone().all(|p| r.contains(&(self.oneline[p] as usize - 1))))
    }

    /// `[w]_A`: the values `w(a)` for `a ∈ A` in increasing `a` order.
    pub fn restrict(&self, positions: &[usize]) -> Result<BlockWord> {
        let mut ps = positions.to_vec();
        ps.sort_unstable();
        ps.dedup();
        for &p in &ps {
            if p == 0 || p > self.n() {
                return Err(Error::ValueOutOfRange { value: p, n: self.n() });
            }
        }
        Ok(BlockWord(ps.into_iter().map(|p| self.get(p)).collect()))
    }

    /// Embeds into `S_m`, `m ≥ n`, by appending fixed points.
    pub fn pad(&self, m: usize) -> Permutation {
        let mut oneline = self.oneline.clone();
        oneline.extend((self.n() + 1..=m).map(|v| v as u8));
        Permutation { oneline }
    }

    /// Drops trailing fixed points.
    pub fn trimmed(&self) -> Permutation {
        let mut m = self.n();
        while m > 0 && self.oneline[m - 1] as usize == m {
            m -= 1;
        }
        Permutation { oneline: self.oneline[..m].to_vec() }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_values(self.oneline.iter().map(|&v| v as usize), self.n()))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(parse_values(s)?)
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Digit string when every value is a single digit, comma-separated
/// otherwise. `n` is the ambient size deciding the style.
pub(crate) fn render_values(values: impl Iterator<Item = usize>, n: usize) -> String {
    if n <= 9 {
        values.map(|v| char::from(b'0' + v as u8)).collect()
    } else {
        values.map(|v| v.to_string()).join(",")
    }
}

pub(crate) fn parse_values(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.contains(',') {
        s.split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad value {t:?} in {s:?}"))))
            .collect()
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad digit {c:?} in {s:?}")))
            })
            .collect()
    }
}

/// A sequence of simple-reflection indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn min_n(&self) -> usize {
        self.0.iter().copied().max().map_or(1, |m| m + 1)
    }

    fn check(&self, n: usize) -> Result<()> {
        match self.0.iter().find(|&&a| a == 0 || a >= n) {
            Some(&letter) => Err(Error::LetterOutOfRange { letter, n }),
            None => Ok(()),
        }
    }

    /// Ordinary product `s_{a_1}⋯s_{a_p}` in `S_n`.
    pub fn product(&self, n: usize) -> Result<Permutation> {
        self.check(n)?;
        let mut w = Permutation::identity(n);
        for &a in &self.0 {
            w.oneline.swap(a - 1, a);
        }
        Ok(w)
    }

    /// Demazure product `s_{a_1}∘⋯∘s_{a_p}` in `S_n`.
    pub fn hecke_product(&self, n: usize) -> Result<Permutation> {
        self.check(n)?;
        Ok(self.0.iter().fold(Permutation::identity(n), |w, &a| w.hecke_mul(a)))
    }

    pub fn is_reduced(&self) -> bool {
        let n = self.min_n();
        let mut w = Permutation::identity(n);
        for &a in &self.0 {
            if w.has_right_descent(a) {
                return false;
            }
            w.oneline.swap(a - 1, a);
        }
        true
    }

    /// Word with the 1-based positions in `skip` removed.
    pub fn without(&self, skip: &[usize]) -> Word {
        Word(self.0.iter().enumerate().filter(|(k, _)| !skip.contains(&(k + 1))).map(|(_, &a)| a).collect())
    }

    /// 1-based positions `k < m` whose deletion leaves the product unchanged.
    pub fn deletion_witness(&self) -> Result<(usize, usize)> {
        let n = self.min_n();
        let mut w = Permutation::identity(n);
        let mut m = None;
        for (idx, &a) in self.0.iter().enumerate() {
            if w.has_right_descent(a) {
                m = Some(idx + 1);
                break;
            }
            w.oneline.swap(a - 1, a);
        }
        let m = m.ok_or(Error::WordIsReduced)?;
        let target = self.product(n)?;
        (1..m)
            .find(|&k| self.without(&[k, m]).product(n).ok().as_ref() == Some(&target))
            .map(|k| (k, m))
            .ok_or_else(|| Error::Precondition("deletion property failed".into()))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// An injective word over a finite alphabet of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockWord(pub(crate) Vec<usize>);

impl BlockWord {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        let mut sorted = letters.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) || sorted.first() == Some(&0) {
            return Err(Error::Parse(format!("block word letters not distinct positive: {letters:?}")));
        }
        Ok(BlockWord(letters))
    }

    /// The word whose standardization is `std_form`, written on `alphabet`.
    pub fn destandardize(std_form: &Permutation, alphabet: &[usize]) -> BlockWord {
        let mut sorted = alphabet.to_vec();
        sorted.sort_unstable();
        BlockWord(std_form.raw().iter().map(|&v| sorted[v as usize - 1]).collect())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Letters in increasing order.
    pub fn alphabet(&self) -> Vec<usize> {
        let mut a = self.0.clone();
        a.sort_unstable();
        a
    }

    pub fn contains(&self, a: usize) -> bool {
        self.0.contains(&a)
    }

    /// The permutation with the same relative order.
    pub fn standardize(&self) -> Permutation {
        let alphabet = self.alphabet();
        Permutation { oneline: self.0.iter().map(|v| (alphabet.binary_search(v).unwrap() + 1) as u8).collect() }
    }

    /// `r_Q(a)`: rank of `a` within the alphabet.
    pub fn relative_value(&self, a: usize) -> Option<usize> {
        self.alphabet().binary_search(&a).ok().map(|k| k + 1)
    }
}

impl fmt::Display for BlockWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let max = self.0.iter().copied().max().unwrap_or(0);
        f.write_str(&render_values(self.0.iter().copied(), max))
    }
}

impl fmt::Debug for BlockWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BlockWord({self})")
    }
}

impl FromStr for BlockWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BlockWord::new(parse_values(s)?)
    }
}
