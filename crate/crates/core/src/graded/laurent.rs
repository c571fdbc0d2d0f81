use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Finitely supported Laurent polynomial in `t` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(exponent: i64, coeff: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exponent, coeff);
        p
    }

    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        let mut p = Self::zero();
        for &(e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// `sum_d dims[d] t^d`
    pub fn from_dims(dims: &[usize]) -> Self {
        let mut p = Self::zero();
        for (d, &n) in dims.iter().enumerate() {
            p.add_term(d as i64, n as i64);
        }
        p
    }

    fn add_term(&mut self, e: i64, c: i64) {
        if c == 0 {
            return;
        }
        let x = self.coeffs.entry(e).or_insert(0);
        *x += c;
        if *x == 0 {
            self.coeffs.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, exponent: i64) -> i64 {
        self.coeffs.get(&exponent).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    /// `p(1/t)`
    pub fn invert(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    /// `t^k p(t)`
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e + k, c)).collect(),
        }
    }

    /// Coefficients of degrees `0..len` as dimensions, if all are nonnegative and supported there.
    pub fn to_dims(&self, len: usize) -> Option<Vec<usize>> {
        if self
            .coeffs
            .iter()
            .any(|(&e, &c)| c < 0 || e < 0 || e >= len as i64)
        {
            return None;
        }
        Some(
            (0..len as i64)
                .map(|e| self.coefficient(e) as usize)
                .collect(),
        )
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            let abs = c.abs();
            match (k == 0, c < 0) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            match (e, abs) {
                (0, a) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, a) => write!(f, "{a}t")?,
                (e, 1) => write!(f, "t^{e}")?,
                (e, a) => write!(f, "{a}t^{e}")?,
            }
        }
        Ok(())
    }
}
