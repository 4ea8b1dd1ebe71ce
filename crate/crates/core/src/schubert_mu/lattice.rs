use std::collections::{BTreeMap, HashMap};

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::mu_involutions::MuInvolution;
use crate::polynomials::MultiPolynomial;

use super::mu_schubert;

/// Exponent vector stored reversed, so the map order compares the last
/// variable first. In this order `𝔖_w` leads with `x^{code(w)}`.
type Monomial = Vec<u16>;
type Vector = BTreeMap<Monomial, i128>;

fn leading(v: &Vector) -> Option<(&Monomial, i128)> {
    v.iter().next_back().map(|(m, &c)| (m, c))
}

/// `x + k·y`, dropping zeros.
fn axpy(x: &mut Vector, k: i128, y: &Vector) -> Result<()> {
    for (m, &c) in y {
        let prod = k.checked_mul(c).ok_or(Error::Overflow("lattice reduction"))?;
        let entry = x.entry(m.clone()).or_insert(0);
        *entry = entry.checked_add(prod).ok_or(Error::Overflow("lattice reduction"))?;
        if *entry == 0 {
            x.remove(m);
        }
    }
    Ok(())
}

fn combine(a: i128, x: &Vector, b: i128, y: &Vector) -> Result<Vector> {
    let mut out = Vector::new();
    axpy(&mut out, a, x)?;
    axpy(&mut out, b, y)?;
    Ok(out)
}

/// `(g, s, t)` with `g = gcd(a, b) = s·a + t·b`, `g > 0`.
fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1, mut s0, mut s1, mut t0, mut t1) = (a, b, 1, 0, 0, 1);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// A sublattice of `ℤ^{monomials}` kept in echelon form: each basis vector
/// has a distinct leading monomial, so reduction by leading terms decides
/// membership exactly.
#[derive(Clone, Debug, Default)]
pub struct IntLattice {
    basis: HashMap<Monomial, Vector>,
}

impl IntLattice {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    fn vector(p: &MultiPolynomial) -> Vector {
        p.terms().map(|(e, c)| (e.iter().rev().copied().collect(), i128::from(c))).collect()
    }

    /// Adds the integer span of `p`.
    pub fn insert(&mut self, p: &MultiPolynomial) -> Result<()> {
        let mut v = Self::vector(p);
        while let Some((m, c)) = leading(&v) {
            let m = m.clone();
            let Some(b) = self.basis.get(&m) else {
                self.basis.insert(m, v);
                return Ok(());
            };
            let d = b[&m];
            if c % d == 0 {
                let b = b.clone();
                axpy(&mut v, -(c / d), &b)?;
                continue;
            }
            // Unimodular row operation: the new basis row carries gcd(d, c),
            // the other row loses its leading term.
            let (g, s, t) = ext_gcd(d, c);
            let b = self.basis.remove(&m).unwrap();
            let new_b = combine(s, &b, t, &v)?;
            let rest = combine(c / g, &b, -(d / g), &v)?;
            self.basis.insert(m, new_b);
            v = rest;
        }
        Ok(())
    }

    pub fn contains(&self, p: &MultiPolynomial) -> Result<bool> {
        let mut v = Self::vector(p);
        while let Some((m, c)) = leading(&v) {
            let Some(b) = self.basis.get(m) else { return Ok(false) };
            let d = b[m];
            if c % d != 0 {
                return Ok(false);
            }
            axpy(&mut v, -(c / d), b)?;
        }
        Ok(true)
    }
}

/// Whether `f` lies in the ℤ-span of `{𝔖^μ_σ : σ ∈ 𝓘_μ}`. Each
/// homogeneous component is tested against the polynomials of that degree.
pub fn span_membership(f: &MultiPolynomial, mu: &Composition) -> Result<bool> {
    let degrees = f.degrees();
    if degrees.is_empty() {
        return Ok(true);
    }
    let m = f.nvars().max(mu.n());
    let mut by_degree: BTreeMap<usize, IntLattice> = degrees.iter().map(|&d| (d, IntLattice::new())).collect();
    for sigma in MuInvolution::all(mu) {
        if let Some(lattice) = by_degree.get_mut(&sigma.ell_mu().total) {
            lattice.insert(&mu_schubert(&sigma).pad(m))?;
        }
    }
    let f = f.pad(m);
    for (d, lattice) in &by_degree {
        if !lattice.contains(&f.homogeneous_component(*d))? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str, n: usize) -> MultiPolynomial {
        MultiPolynomial::parse(s, n).unwrap()
    }

    #[test]
    fn gcd_identity() {
        for (a, b) in [(12, 18), (-4, 6), (7, -3), (5, 0), (0, 5)] {
            let (g, s, t) = ext_gcd(a, b);
            assert!(g > 0);
            assert_eq!(s * a + t * b, g);
        }
    }

    #[test]
    fn lattice_membership() {
        let mut l = IntLattice::new();
        l.insert(&poly("2*x1", 2)).unwrap();
        l.insert(&poly("3*x1 + x2", 2)).unwrap();
        assert_eq!(l.rank(), 2);
        assert!(l.contains(&poly("x1 + x2", 2)).unwrap());
        assert!(l.contains(&poly("0", 2)).unwrap());
        let mut l = IntLattice::new();
        l.insert(&poly("2*x1 + 2*x2", 2)).unwrap();
        assert!(!l.contains(&poly("x1 + x2", 2)).unwrap());
        assert!(l.contains(&poly("4*x1 + 4*x2", 2)).unwrap());
        assert!(!l.contains(&poly("x1", 2)).unwrap());
    }

    #[test]
    fn lattice_gcd_merge() {
        let mut l = IntLattice::new();
        l.insert(&poly("4*x1^2 + x2", 2)).unwrap();
        l.insert(&poly("6*x1^2", 2)).unwrap();
        assert!(l.contains(&poly("2*x1^2 + 5*x2", 2)).unwrap());
        assert!(!l.contains(&poly("2*x1^2", 2)).unwrap());
        assert!(l.contains(&poly("6*x2", 2)).unwrap());
        assert!(!l.contains(&poly("x2", 2)).unwrap());
    }

    #[test]
    fn small_spans() {
        let mu: Composition = "2,1".parse().unwrap();
        for sigma in MuInvolution::all(&mu) {
            assert!(span_membership(&mu_schubert(&sigma), &mu).unwrap());
        }
        assert!(span_membership(&MultiPolynomial::zero(3), &mu).unwrap());
        let sigma: MuInvolution = "21|3".parse().unwrap();
        assert!(span_membership(&mu_schubert(&sigma).pad(5), &mu).unwrap());
        assert!(!span_membership(&poly("x4", 5), &mu).unwrap());
    }
}
