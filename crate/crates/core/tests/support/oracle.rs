//! Brute-force reference computations that share no code with the library.
//!
//! Everything lives in free-algebra coordinates: a degree-`d` vector is a coefficient list
//! over all monomials of degree `d`. Ideals are grown by multiplying with generators until
//! stable, ranks come from fraction-free Bareiss elimination over the integers, and kernels
//! from a separate rational elimination. Only even-degree generators are supported, so the
//! free algebra is an ordinary polynomial ring.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num::{BigInt, BigRational, One, Zero};

pub type Exps = Vec<u32>;

/// Polynomial with integer coefficients, keyed by exponent vectors.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OPoly(pub BTreeMap<Exps, BigInt>);

impl OPoly {
    pub fn from_terms(terms: &[(i64, &[u32])]) -> Self {
        let mut p = OPoly::default();
        for (c, e) in terms {
            p.add_term(e.to_vec(), BigInt::from(*c));
        }
        p
    }

    pub fn zero() -> Self {
        OPoly::default()
    }

    fn add_term(&mut self, e: Exps, c: BigInt) {
        let entry = self.0.entry(e.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.0.remove(&e);
        }
    }

    pub fn mul(&self, other: &OPoly) -> OPoly {
        let mut out = OPoly::default();
        for (a, x) in &self.0 {
            for (b, y) in &other.0 {
                let e: Exps = a.iter().zip(b).map(|(i, j)| i + j).collect();
                out.add_term(e, x * y);
            }
        }
        out
    }

    pub fn degree(&self, degs: &[usize]) -> Option<usize> {
        self.0.keys().next().map(|e| weight(e, degs))
    }
}

fn weight(e: &[u32], degs: &[usize]) -> usize {
    e.iter().zip(degs).map(|(&k, &d)| k as usize * d).sum()
}

/// All exponent vectors of weighted degree `d`.
pub fn monomials(degs: &[usize], d: usize) -> Vec<Exps> {
    fn go(degs: &[usize], left: usize, prefix: &mut Exps, out: &mut Vec<Exps>) {
        if prefix.len() == degs.len() {
            if left == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        let g = degs[prefix.len()];
        for k in 0..=left / g {
            prefix.push(k as u32);
            go(degs, left - k * g, prefix, out);
            prefix.pop();
        }
    }
    assert!(
        degs.iter().all(|&g| g > 0 && g % 2 == 0),
        "oracle handles even generators only"
    );
    let mut out = Vec::new();
    go(degs, d, &mut Vec::new(), &mut out);
    out
}

fn to_vector(p: &OPoly, basis: &[Exps]) -> Vec<BigRational> {
    basis
        .iter()
        .map(|e| BigRational::from_integer(p.0.get(e).cloned().unwrap_or_default()))
        .collect()
}

/// Rank by Bareiss elimination on an integer matrix (rows are vectors).
pub fn bareiss_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    if m.is_empty() {
        return 0;
    }
    let cols = m[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            for k in c + 1..cols {
                let v = &m[rank][c] * &m[r][k] - &m[r][c] * &m[rank][k];
                m[r][k] = v / &prev;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

fn integer_rows(rows: &[Vec<BigRational>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| {
            let lcm = r.iter().fold(BigInt::one(), |acc, q| {
                num::integer::lcm(acc, q.denom().clone())
            });
            r.iter()
                .map(|q| (q * BigRational::from_integer(lcm.clone())).to_integer())
                .collect()
        })
        .collect()
}

pub fn rank(rows: &[Vec<BigRational>]) -> usize {
    bareiss_rank(&integer_rows(rows))
}

/// Basis of `{x : x M = 0}` for the matrix whose rows are `rows` (left kernel), via
/// elimination on the transpose.
pub fn left_kernel(rows: &[Vec<BigRational>], width: usize) -> Vec<Vec<BigRational>> {
    let n = rows.len();
    // columns of M become equations in the n unknowns
    let mut eq: Vec<Vec<BigRational>> = (0..width)
        .map(|c| rows.iter().map(|r| r[c].clone()).collect())
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for c in (0..n).rev() {
        let Some(p) = (r..eq.len()).find(|&i| !eq[i][c].is_zero()) else {
            continue;
        };
        eq.swap(r, p);
        let inv = BigRational::one() / eq[r][c].clone();
        for x in eq[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..eq.len() {
            if i != r && !eq[i][c].is_zero() {
                let f = eq[i][c].clone();
                let pivot = eq[r].clone();
                for (x, pv) in eq[i].iter_mut().zip(&pivot) {
                    *x -= pv * &f;
                }
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    (0..n)
        .filter(|c| !pivot_cols.contains(c))
        .map(|free| {
            let mut x = vec![BigRational::zero(); n];
            x[free] = BigRational::one();
            for &(row, c) in &pivots {
                x[c] = -eq[row][free].clone();
            }
            x
        })
        .collect()
}

/// Truncated algebra `Q[gens]/(rels)` in degrees `0..=top`.
#[derive(Clone, Debug)]
pub struct OAlg {
    pub degs: Vec<usize>,
    pub rels: Vec<OPoly>,
    pub top: usize,
}

impl OAlg {
    pub fn new(degs: &[usize], rels: Vec<OPoly>, top: usize) -> Self {
        OAlg {
            degs: degs.to_vec(),
            rels,
            top,
        }
    }

    pub fn basis(&self, d: usize) -> Vec<Exps> {
        monomials(&self.degs, d)
    }

    /// Spanning polynomials of the ideal in each degree, grown generator by generator.
    pub fn ideal(&self) -> Vec<Vec<OPoly>> {
        let mut pieces: Vec<Vec<OPoly>> = vec![Vec::new(); self.top + 1];
        for d in 0..=self.top {
            let mut span: Vec<OPoly> = self
                .rels
                .iter()
                .filter(|r| r.degree(&self.degs) == Some(d))
                .cloned()
                .collect();
            for (k, &g) in self.degs.iter().enumerate() {
                if g <= d {
                    let mut e = vec![0; self.degs.len()];
                    e[k] = 1;
                    let x = OPoly(BTreeMap::from([(e, BigInt::one())]));
                    span.extend(pieces[d - g].iter().map(|p| p.mul(&x)));
                }
            }
            pieces[d] = self.reduce_span(span, d);
        }
        pieces
    }

    /// A linearly independent subfamily spanning the same space.
    fn reduce_span(&self, span: Vec<OPoly>, d: usize) -> Vec<OPoly> {
        let basis = self.basis(d);
        let mut kept: Vec<OPoly> = Vec::new();
        let mut rows: Vec<Vec<BigRational>> = Vec::new();
        for p in span {
            let v = to_vector(&p, &basis);
            rows.push(v);
            if rank(&rows) > kept.len() {
                kept.push(p);
            } else {
                rows.pop();
            }
        }
        kept
    }

    pub fn ideal_dims(&self) -> Vec<usize> {
        self.ideal().iter().map(Vec::len).collect()
    }

    pub fn dims(&self) -> Vec<usize> {
        let ideal = self.ideal_dims();
        (0..=self.top)
            .map(|d| self.basis(d).len() - ideal[d])
            .collect()
    }
}

/// `p(y_1, ..., y_k)` with `y_j = images[j]`.
pub fn substitute(p: &OPoly, images: &[OPoly], target_vars: usize) -> OPoly {
    let mut out = OPoly::default();
    for (e, c) in &p.0 {
        let mut term = OPoly(BTreeMap::from([(vec![0; target_vars], c.clone())]));
        for (j, &k) in e.iter().enumerate() {
            for _ in 0..k {
                term = term.mul(&images[j]);
            }
        }
        for (e2, c2) in term.0 {
            out.add_term(e2, c2);
        }
    }
    out
}

/// Dimensions of the cut rings, computed from scratch in free coordinates.
pub struct CutOracle {
    pub c: Vec<usize>,
    pub delta: Vec<usize>,
    pub c_plus: Vec<usize>,
    pub c0: Option<Vec<usize>>,
}

/// `cminus`, `m`, `common` with `p`, `i` given as generator images; `delta` pairs and
/// `pd` as free polynomials.
pub fn cut_dims(
    cminus: &OAlg,
    m: &OAlg,
    common: &OAlg,
    p: &[OPoly],
    i: &[OPoly],
    delta: &[(OPoly, OPoly)],
    pd: Option<&OPoly>,
) -> CutOracle {
    let n = cminus.top;
    let (ic, im, it) = (cminus.ideal(), m.ideal(), common.ideal());
    let nt = common.degs.len();
    // lifts of the equalizer in each degree, as pairs of free polynomials
    let mut lifts: Vec<Vec<(OPoly, OPoly)>> = Vec::new();
    let mut c_dims = Vec::new();
    for d in 0..=n {
        let (bc, bm, bt) = (cminus.basis(d), m.basis(d), common.basis(d));
        let mut rows = Vec::new();
        let mut pairs = Vec::new();
        for e in &bc {
            let x = OPoly(BTreeMap::from([(e.clone(), BigInt::one())]));
            rows.push(to_vector(&substitute(&x, p, nt), &bt));
            pairs.push((x, OPoly::zero()));
        }
        for e in &bm {
            let y = OPoly(BTreeMap::from([(e.clone(), BigInt::one())]));
            let img = substitute(&y, i, nt);
            rows.push(to_vector(&img, &bt).into_iter().map(|q| -q).collect());
            pairs.push((OPoly::zero(), y));
        }
        let width = bt.len();
        // append the common ideal as extra unknowns so the kernel is taken modulo it
        let t_rows: Vec<Vec<BigRational>> = it[d].iter().map(|r| to_vector(r, &bt)).collect();
        let all: Vec<Vec<BigRational>> =
            rows.iter().cloned().chain(t_rows.iter().cloned()).collect();
        let kernel = if width == 0 {
            (0..all.len())
                .map(|k| {
                    let mut x = vec![BigRational::zero(); all.len()];
                    x[k] = BigRational::one();
                    x
                })
                .collect()
        } else {
            left_kernel(&all, width)
        };
        let lift: Vec<(OPoly, OPoly)> = kernel
            .iter()
            .map(|x| {
                let ints = integer_rows(&[x[..pairs.len()].to_vec()]).remove(0);
                let poly = |coeffs: &[BigInt], basis: &[Exps]| {
                    let mut p = OPoly::default();
                    for (c, e) in coeffs.iter().zip(basis) {
                        p.add_term(e.clone(), c.clone());
                    }
                    p
                };
                (poly(&ints[..bc.len()], &bc), poly(&ints[bc.len()..], &bm))
            })
            .collect();
        let kernel_rank = rank(
            &lift
                .iter()
                .map(|(f, g)| pair_vector(f, g, &bc, &bm))
                .collect::<Vec<_>>(),
        );
        let ideal_part = ic[d].len() + im[d].len();
        // kernel contains I_- ⊕ I_M; its image in the quotient has the complementary size
        c_dims.push(kernel_rank - ideal_part);
        lifts.push(lift);
    }

    let mut delta_dims = Vec::new();
    for d in 0..=n {
        let (bc, bm) = (cminus.basis(d), m.basis(d));
        let mut rows: Vec<Vec<BigRational>> = Vec::new();
        for r in &ic[d] {
            rows.push(pair_vector(r, &OPoly::zero(), &bc, &bm));
        }
        for r in &im[d] {
            rows.push(pair_vector(&OPoly::zero(), r, &bc, &bm));
        }
        let base = rank(&rows);
        for (dc, dm) in delta {
            let Some(k) = dc.degree(&cminus.degs).or_else(|| dm.degree(&m.degs)) else {
                continue;
            };
            if k > d {
                continue;
            }
            for (f, g) in &lifts[d - k] {
                rows.push(pair_vector(&f.mul(dc), &g.mul(dm), &bc, &bm));
            }
        }
        delta_dims.push(rank(&rows) - base);
    }
    let c_plus = c_dims.iter().zip(&delta_dims).map(|(a, b)| a - b).collect();

    let c0 = pd.map(|e| {
        (0..=n)
            .map(|d| {
                if d + 2 > n {
                    return 0;
                }
                // rank of multiplication by e from C_-^d to C_-^{d+2}
                let (b0, b2) = (cminus.basis(d), cminus.basis(d + 2));
                let quotient_rows: Vec<Vec<BigRational>> =
                    ic[d + 2].iter().map(|r| to_vector(r, &b2)).collect();
                let mut rows = quotient_rows.clone();
                for x in &b0 {
                    let mono = OPoly(BTreeMap::from([(x.clone(), BigInt::one())]));
                    rows.push(to_vector(&mono.mul(e), &b2));
                }
                rank(&rows) - rank(&quotient_rows)
            })
            .collect()
    });

    CutOracle {
        c: c_dims,
        delta: delta_dims,
        c_plus,
        c0,
    }
}

fn pair_vector(f: &OPoly, g: &OPoly, bc: &[Exps], bm: &[Exps]) -> Vec<BigRational> {
    let mut v = to_vector(f, bc);
    v.extend(to_vector(g, bm));
    v
}
