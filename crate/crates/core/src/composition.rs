//! Compositions of `n` and their refinement order.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An ordered sequence of positive parts. Block boundaries are kept as
/// partial sums so that refinement is plain set containment.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidComposition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!("{parts:?} has a zero part")));
        }
        Ok(Composition { parts })
    }

    /// The one-block composition `(n)`.
    pub fn whole(n: usize) -> Self {
        Composition { parts: vec![n] }
    }

    /// The all-ones composition `(1^n)`.
    pub fn ones(n: usize) -> Self {
        Composition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `{μ_1, μ_1+μ_2, …, n}`.
    pub fn partial_sums(&self) -> Vec<usize> {
        self.parts
            .iter()
            .scan(0, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }

    /// Zero-based position ranges of the blocks.
    pub fn block_ranges(&self) -> Vec<Range<usize>> {
        let mut start = 0;
        self.parts
            .iter()
            .map(|&p| {
                let r = start..start + p;
                start += p;
                r
            })
            .collect()
    }

    /// Block index (zero-based) of the 1-based position `pos`.
    pub fn block_of_position(&self, pos: usize) -> usize {
        let mut end = 0;
        for (b, &p) in self.parts.iter().enumerate() {
            end += p;
            if pos <= end {
                return b;
            }
        }
        panic!("position {pos} beyond composition of {}", self.n());
    }

    /// True when `self` refines `coarser`, i.e. the partial sums of `coarser`
    /// are among those of `self`.
    pub fn refines(&self, coarser: &Composition) -> bool {
        if self.n() != coarser.n() {
            return false;
        }
        let mine = self.partial_sums();
        coarser.partial_sums().iter().all(|s| mine.contains(s))
    }

    /// `μ′ = (μ_1, …, μ_k, 1)`.
    pub fn padded(&self) -> Composition {
        let mut parts = self.parts.clone();
        parts.push(1);
        Composition { parts }
    }

    /// Compositions obtained by splitting exactly one part in two.
    pub fn one_step_refinements(&self) -> Vec<Composition> {
        let mut out = Vec::new();
        for (b, &p) in self.parts.iter().enumerate() {
            for left in 1..p {
                let mut parts = self.parts[..b].to_vec();
                parts.push(left);
                parts.push(p - left);
                parts.extend_from_slice(&self.parts[b + 1..]);
                out.push(Composition { parts });
            }
        }
        out
    }

    /// All compositions of `n`, in lexicographic order of parts.
    pub fn all(n: usize) -> Vec<Composition> {
        fn rec(rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if rem == 0 {
                out.push(Composition { parts: cur.clone() });
                return;
            }
            for p in 1..=rem {
                cur.push(p);
                rec(rem - p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Accepts `3,1`, `(3,1)` or `3 1`.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = trimmed
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad composition part {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn refinement_examples() {
        let fine = c(&[3, 2, 3]);
        assert!(fine.refines(&c(&[5, 3])));
        assert!(fine.refines(&c(&[3, 5])));
        assert!(fine.refines(&c(&[8])));
        assert!(fine.refines(&fine));
        assert!(!c(&[2, 2]).refines(&c(&[3, 1])));
    }

    #[test]
    fn counts() {
        for n in 1..8 {
            assert_eq!(Composition::all(n).len(), 1 << (n - 1));
        }
        assert_eq!(c(&[3, 1]).one_step_refinements().len(), 2);
        assert!(Composition::ones(4).one_step_refinements().is_empty());
    }

    #[test]
    fn parse_forms() {
        assert_eq!("3,1".parse::<Composition>().unwrap(), c(&[3, 1]));
        assert_eq!("(1,4,2,1)".parse::<Composition>().unwrap(), c(&[1, 4, 2, 1]));
        assert!("3,0".parse::<Composition>().is_err());
        assert!("".parse::<Composition>().is_err());
    }

    #[test]
    fn block_positions() {
        let mu = c(&[3, 1, 3]);
        assert_eq!(mu.block_of_position(1), 0);
        assert_eq!(mu.block_of_position(4), 1);
        assert_eq!(mu.block_of_position(7), 2);
        assert_eq!(mu.block_ranges(), vec![0..3, 3..4, 4..7]);
        assert_eq!(mu.padded(), c(&[3, 1, 3, 1]));
    }
}
