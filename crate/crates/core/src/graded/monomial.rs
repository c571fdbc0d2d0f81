use std::fmt;

use serde::{Deserialize, Serialize};

/// A named algebra generator of positive degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub degree: usize,
}

impl Generator {
    pub fn new(name: impl Into<String>, degree: usize) -> Self {
        Generator {
            name: name.into(),
            degree,
        }
    }

    pub fn is_odd(&self) -> bool {
        self.degree % 2 == 1
    }
}

/// Exponent vector over an ordered generator list. Odd generators carry exponent 0 or 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(num_generators: usize) -> Self {
        Monomial(vec![0; num_generators])
    }

    pub fn generator(num_generators: usize, index: usize) -> Self {
        let mut e = vec![0; num_generators];
        e[index] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn num_generators(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self, gens: &[Generator]) -> usize {
        self.0
            .iter()
            .zip(gens)
            .map(|(&e, g)| e as usize * g.degree)
            .sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Graded-commutative product. Returns `None` when an odd generator would be squared,
    /// otherwise the Koszul sign (`true` for negative) and the product monomial.
    ///
    /// Both factors are written in declaration order; moving each odd generator of `other`
    /// left past the odd generators of `self` with a larger index costs one sign each.
    pub fn mul(&self, other: &Monomial, gens: &[Generator]) -> Option<(bool, Monomial)> {
        let mut negative = false;
        let mut odd_in_self_after = 0usize;
        for i in (0..self.0.len()).rev() {
            if gens[i].is_odd() {
                if self.0[i] > 0 && other.0[i] > 0 {
                    return None;
                }
                if other.0[i] > 0 && odd_in_self_after % 2 == 1 {
                    negative = !negative;
                }
                if self.0[i] > 0 {
                    odd_in_self_after += 1;
                }
            }
        }
        let exps = self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect();
        Some((negative, Monomial(exps)))
    }

    /// Ordering used everywhere a basis is chosen: higher degree first, then
    /// lexicographically larger exponent vectors first.
    pub fn grlex_cmp(&self, other: &Monomial, gens: &[Generator]) -> std::cmp::Ordering {
        other
            .degree(gens)
            .cmp(&self.degree(gens))
            .then_with(|| other.0.cmp(&self.0))
    }

    pub fn display<'a>(&'a self, gens: &'a [Generator]) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, gens }
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    gens: &'a [Generator],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (e, g) in self.mono.0.iter().zip(self.gens) {
            if *e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{}", g.name)?;
            } else {
                write!(f, "{}^{}", g.name, e)?;
            }
        }
        Ok(())
    }
}

/// All monomials of exact degree `degree`, odd generators with exponent at most one,
/// in descending lexicographic order of exponent vectors.
pub fn enumerate_monomials(gens: &[Generator], degree: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; gens.len()];
    fill(gens, 0, degree, &mut current, &mut out);
    out
}

fn fill(
    gens: &[Generator],
    index: usize,
    remaining: usize,
    current: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
) {
    if index == gens.len() {
        if remaining == 0 {
            out.push(Monomial(current.clone()));
        }
        return;
    }
    let d = gens[index].degree;
    let mut max = remaining / d;
    if gens[index].is_odd() {
        max = max.min(1);
    }
    for e in (0..=max).rev() {
        current[index] = e as u32;
        fill(gens, index + 1, remaining - e * d, current, out);
    }
    current[index] = 0;
}
