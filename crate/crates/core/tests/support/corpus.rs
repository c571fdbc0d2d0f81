//! Test corpus: each algebra twice, as a library presentation and as oracle data built
//! from exponent vectors.

use symcut::graded::Presentation;

use super::oracle::{OAlg, OPoly};

pub struct Entry {
    pub name: String,
    pub presentation: Presentation,
    pub oracle: OAlg,
}

fn entry(
    name: &str,
    gens: &[(&str, usize)],
    rels: &[&str],
    oracle_rels: Vec<OPoly>,
    top: usize,
) -> Entry {
    let degs: Vec<usize> = gens.iter().map(|g| g.1).collect();
    Entry {
        name: name.to_string(),
        presentation: Presentation::parse(gens, rels, top).unwrap(),
        oracle: OAlg::new(&degs, oracle_rels, top),
    }
}

fn mono(c: i64, e: &[u32]) -> OPoly {
    OPoly::from_terms(&[(c, e)])
}

/// `Q[a]/(a^k)` for `k <= 6` and `Q[a,b]/(a^k, b^l)` for `k <= l <= 6`, truncated at
/// their socle degree (at least 2, since generators may not sit above the top).
pub fn truncated() -> Vec<Entry> {
    let mut out = Vec::new();
    for k in 1..=6u32 {
        let top = 2 * (k as usize - 1).max(1);
        let rel = format!("a^{k}");
        out.push(entry(
            &format!("Q[a]/(a^{k})"),
            &[("a", 2)],
            &[&rel],
            vec![mono(1, &[k])],
            top,
        ));
    }
    for k in 1..=6u32 {
        for l in k..=6u32 {
            let top = 2 * ((k + l - 2) as usize).max(1);
            let (ra, rb) = (format!("a^{k}"), format!("b^{l}"));
            out.push(entry(
                &format!("Q[a,b]/(a^{k}, b^{l})"),
                &[("a", 2), ("b", 2)],
                &[&ra, &rb],
                vec![mono(1, &[k, 0]), mono(1, &[0, l])],
                top,
            ));
        }
    }
    out
}

pub fn flag_minus() -> Entry {
    entry(
        "flag C_-",
        &[("a", 2), ("b", 2)],
        &["a^2", "b^3"],
        vec![mono(1, &[2, 0]), mono(1, &[0, 3])],
        6,
    )
}

pub fn flag_m() -> Entry {
    entry(
        "flag M",
        &[("u", 2), ("v", 2)],
        &["u*v - u^2 - v^2", "u^3", "v^3", "u^2*v - u*v^2", "u^2*v^2"],
        vec![
            OPoly::from_terms(&[(1, &[1, 1]), (-1, &[2, 0]), (-1, &[0, 2])]),
            mono(1, &[3, 0]),
            mono(1, &[0, 3]),
            OPoly::from_terms(&[(1, &[2, 1]), (-1, &[1, 2])]),
            mono(1, &[2, 2]),
        ],
        6,
    )
}

pub fn flag_m_minus() -> Entry {
    entry(
        "flag M_-",
        &[("abar", 2)],
        &["abar^2"],
        vec![mono(1, &[2])],
        6,
    )
}

pub fn flag_c_claim() -> Entry {
    entry(
        "flag H*(C) claim",
        &[("x", 2), ("y", 2), ("z", 2)],
        &[
            "x*y - x^2 - y^2",
            "y*z",
            "x^2*y - x*y^2",
            "x^3",
            "y^3",
            "z^3",
        ],
        vec![
            OPoly::from_terms(&[(1, &[1, 1, 0]), (-1, &[2, 0, 0]), (-1, &[0, 2, 0])]),
            mono(1, &[0, 1, 1]),
            OPoly::from_terms(&[(1, &[2, 1, 0]), (-1, &[1, 2, 0])]),
            mono(1, &[3, 0, 0]),
            mono(1, &[0, 3, 0]),
            mono(1, &[0, 0, 3]),
        ],
        6,
    )
}

pub fn bott_samelson() -> Entry {
    entry(
        "Bott-Samelson",
        &[("a", 2), ("b", 2), ("c", 2)],
        &["a^2", "b*(b + a)", "c*(c - a + b)"],
        vec![
            mono(1, &[2, 0, 0]),
            OPoly::from_terms(&[(1, &[0, 2, 0]), (1, &[1, 1, 0])]),
            OPoly::from_terms(&[(1, &[0, 0, 2]), (-1, &[1, 0, 1]), (1, &[0, 1, 1])]),
        ],
        6,
    )
}

pub fn blowup_minus() -> Entry {
    entry("blowup C_-", &[("a", 2)], &["a^3"], vec![mono(1, &[3])], 4)
}

pub fn blowup_m() -> Entry {
    entry("blowup M", &[("u", 2)], &["u^3"], vec![mono(1, &[3])], 4)
}

pub fn point(top: usize) -> Entry {
    entry("point", &[], &[], vec![], top)
}

pub fn blowup_claim() -> Entry {
    entry(
        "blowup H*(C_+) claim",
        &[("x", 2), ("y", 2)],
        &["x*y", "x^2 + y^2"],
        vec![
            mono(1, &[1, 1]),
            OPoly::from_terms(&[(1, &[2, 0]), (1, &[0, 2])]),
        ],
        4,
    )
}

/// Every presented algebra in the corpus.
pub fn all() -> Vec<Entry> {
    let mut out = truncated();
    out.extend([
        flag_minus(),
        flag_m(),
        flag_m_minus(),
        flag_c_claim(),
        bott_samelson(),
        blowup_minus(),
        blowup_m(),
        point(4),
        blowup_claim(),
    ]);
    out
}

pub fn flag_cut_oracle() -> super::oracle::CutOracle {
    super::oracle::cut_dims(
        &flag_minus().oracle,
        &flag_m().oracle,
        &flag_m_minus().oracle,
        &[mono(1, &[1]), OPoly::zero()],
        &[mono(1, &[1]), OPoly::zero()],
        &[
            (mono(1, &[0, 2]), mono(1, &[0, 2])),
            (mono(1, &[1, 2]), mono(1, &[1, 2])),
        ],
        Some(&mono(1, &[0, 1])),
    )
}

pub fn blowup_cut_oracle() -> super::oracle::CutOracle {
    super::oracle::cut_dims(
        &blowup_minus().oracle,
        &blowup_m().oracle,
        &point(4).oracle,
        &[OPoly::zero()],
        &[OPoly::zero()],
        &[(mono(1, &[2]), mono(1, &[2]))],
        Some(&mono(1, &[1])),
    )
}
