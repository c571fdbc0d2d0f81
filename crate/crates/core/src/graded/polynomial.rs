use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};

use super::monomial::{Generator, Monomial};
use crate::exactla::Q;

/// Element of the free graded-commutative algebra on an ordered generator list.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Q>,
}

/// Degree information of a polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Homogeneous(usize),
    Inhomogeneous,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn constant(num_generators: usize, c: Q) -> Self {
        Self::term(Monomial::one(num_generators), c)
    }

    pub fn generator(num_generators: usize, index: usize) -> Self {
        Self::term(Monomial::generator(num_generators, index), Q::one())
    }

    pub fn term(m: Monomial, c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-Q::one())
    }

    pub fn scale(&self, c: &Q) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial, gens: &[Generator]) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some((negative, m)) = m1.mul(m2, gens) {
                    let c = c1 * c2;
                    out.add_term(m, if negative { -c } else { c });
                }
            }
        }
        out
    }

    pub fn pow(&self, exponent: u32, gens: &[Generator]) -> Polynomial {
        let mut out = Polynomial::constant(gens.len(), Q::one());
        for _ in 0..exponent {
            out = out.mul(self, gens);
        }
        out
    }

    pub fn homogeneity(&self, gens: &[Generator]) -> Homogeneity {
        let mut degrees = self.terms.keys().map(|m| m.degree(gens));
        match degrees.next() {
            None => Homogeneity::Zero,
            Some(d) => {
                if degrees.all(|e| e == d) {
                    Homogeneity::Homogeneous(d)
                } else {
                    Homogeneity::Inhomogeneous
                }
            }
        }
    }

    /// Renders with generator names, terms in graded-lex descending order.
    pub fn display<'a>(&'a self, gens: &'a [Generator]) -> PolynomialDisplay<'a> {
        PolynomialDisplay { poly: self, gens }
    }
}

pub struct PolynomialDisplay<'a> {
    poly: &'a Polynomial,
    gens: &'a [Generator],
}

impl fmt::Display for PolynomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&Monomial, &Q)> = self.poly.terms().collect();
        terms.sort_by(|a, b| a.0.grlex_cmp(b.0, self.gens));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            match (k == 0, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", m.display(self.gens))?;
            } else {
                write!(f, "{abs}*{}", m.display(self.gens))?;
            }
        }
        Ok(())
    }
}
