//! Exact Poincaré polynomial identities relating `C_-`, `C_0` and `M_-`.

use serde::Serialize;

use crate::graded::LaurentPoly;

/// Outcome of checking `lhs = rhs` as Laurent polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityVerdict {
    pub name: String,
    pub holds: bool,
    #[serde(serialize_with = "as_string")]
    pub lhs: LaurentPoly,
    #[serde(serialize_with = "as_string")]
    pub rhs: LaurentPoly,
    #[serde(serialize_with = "as_string")]
    pub difference: LaurentPoly,
}

fn as_string<S: serde::Serializer>(p: &LaurentPoly, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

impl IdentityVerdict {
    pub fn check(name: impl Into<String>, lhs: LaurentPoly, rhs: LaurentPoly) -> Self {
        let difference = &lhs - &rhs;
        IdentityVerdict {
            name: name.into(),
            holds: difference.is_zero(),
            lhs,
            rhs,
            difference,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiVerdict {
    pub c0: IdentityVerdict,
    pub c_minus: IdentityVerdict,
}

impl BettiVerdict {
    pub fn holds(&self) -> bool {
        self.c0.holds && self.c_minus.holds
    }
}

fn one_minus_t2() -> LaurentPoly {
    LaurentPoly::from_terms(&[(0, 1), (2, -1)])
}

/// `(1 - t^2) P_C0 = P_M-(t) - t^n P_M-(1/t)` and
/// `(1 - t^2) P_C- = P_M-(t) - t^(n+2) P_M-(1/t)`.
pub fn betti_identities(
    p_m_minus: &LaurentPoly,
    n: i64,
    p_c0: &LaurentPoly,
    p_c_minus: &LaurentPoly,
) -> BettiVerdict {
    let dual = p_m_minus.invert();
    BettiVerdict {
        c0: IdentityVerdict::check(
            "(1-t^2) P_C0 = P_M-(t) - t^n P_M-(1/t)",
            &one_minus_t2() * p_c0,
            p_m_minus - &dual.shift(n),
        ),
        c_minus: IdentityVerdict::check(
            "(1-t^2) P_C- = P_M-(t) - t^(n+2) P_M-(1/t)",
            &one_minus_t2() * p_c_minus,
            p_m_minus - &dual.shift(n + 2),
        ),
    }
}

/// `P_C- = t^2 P_C0 + P_M-`
pub fn ses_dimension_check(
    p_c0: &LaurentPoly,
    p_c_minus: &LaurentPoly,
    p_m_minus: &LaurentPoly,
) -> IdentityVerdict {
    IdentityVerdict::check(
        "P_C- = t^2 P_C0 + P_M-",
        p_c_minus.clone(),
        &p_c0.shift(2) + p_m_minus,
    )
}

/// Exact quotient `p / (1 - t^2)` when it exists.
pub fn divide_by_one_minus_t2(p: &LaurentPoly) -> Option<LaurentPoly> {
    let Some((low, _)) = p.terms().next() else {
        return Some(LaurentPoly::zero());
    };
    let high = p.terms().last().map(|(e, _)| e).unwrap_or(low);
    // q_k = p_k + q_{k-2}, running from the lowest exponent up to high - 2
    let mut q = LaurentPoly::zero();
    let mut e = low;
    while e <= high - 2 {
        let c = p.coefficient(e) + q.coefficient(e - 2);
        q = &q + &LaurentPoly::monomial(e, c);
        e += 1;
    }
    (&(&one_minus_t2() * &q) == p).then_some(q)
}
