use std::collections::HashMap;

use num::One;

use super::algebra::{Element, GradedAlgebra};
use super::monomial::{enumerate_monomials, Generator, Monomial};
use super::polynomial::{Homogeneity, Polynomial};
use super::presentation::Presentation;
use super::GradedError;
use crate::exactla::{axpy, unit_vector, zero_vector, QVector, Subspace, Q};

/// Monomials of one degree together with the span of relation multiples in that degree.
struct DegreePiece {
    index: HashMap<Monomial, usize>,
    relations: Subspace,
    // monomials that survive as basis elements (non-pivot columns)
    basis: Vec<Monomial>,
    basis_columns: Vec<usize>,
}

impl DegreePiece {
    fn coordinates(&self, m: &Monomial) -> QVector {
        let n = self.index.len();
        let e = unit_vector(n, self.index[m]);
        let reduced = self.relations.reduce(&e).expect("same ambient");
        self.basis_columns
            .iter()
            .map(|&c| reduced[c].clone())
            .collect()
    }
}

/// Realizes a presentation degree by degree: monomials of degree `d` modulo the span of all
/// `monomial * relation` products of degree `d`. The basis in each degree is the set of
/// monomials that are not pivots of the reduced relation matrix, columns ordered graded-lex
/// descending.
pub fn realize(p: &Presentation) -> Result<GradedAlgebra, GradedError> {
    let gens = p.generators();
    let top = p.top_degree();
    let monomials: Vec<Vec<Monomial>> = (0..=top).map(|d| enumerate_monomials(gens, d)).collect();
    let relations: Vec<(&Polynomial, usize)> = p.effective_relations().collect();

    let mut pieces = Vec::with_capacity(top + 1);
    for d in 0..=top {
        let index: HashMap<Monomial, usize> = monomials[d]
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let n = index.len();
        let mut rows = Vec::new();
        for &(r, e) in relations.iter().filter(|(_, e)| *e <= d) {
            for m in &monomials[d - e] {
                let prod = Polynomial::term(m.clone(), Q::one()).mul(r, gens);
                let mut row = zero_vector(n);
                for (mono, c) in prod.terms() {
                    row[index[mono]] = c.clone();
                }
                rows.push(row);
            }
        }
        let span = Subspace::span(n, &rows)?;
        let mut is_pivot = vec![false; n];
        for &c in span.pivots() {
            is_pivot[c] = true;
        }
        let basis_columns: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        let basis = basis_columns
            .iter()
            .map(|&c| monomials[d][c].clone())
            .collect();
        pieces.push(DegreePiece {
            index,
            relations: span,
            basis,
            basis_columns,
        });
    }

    let labels = pieces
        .iter()
        .map(|pc| {
            pc.basis
                .iter()
                .map(|m| m.display(gens).to_string())
                .collect()
        })
        .collect();
    let unit = pieces[0].coordinates(&Monomial::one(gens.len()));
    let algebra =
        GradedAlgebra::from_products::<GradedError, _>(top, labels, unit, |d1, i, d2, j| {
            let a = &pieces[d1].basis[i];
            let b = &pieces[d2].basis[j];
            let target = &pieces[d1 + d2];
            Ok(match a.mul(b, gens) {
                None => zero_vector(target.basis.len()),
                Some((negative, m)) => {
                    let v = target.coordinates(&m);
                    if negative {
                        v.into_iter().map(|x| -x).collect()
                    } else {
                        v
                    }
                }
            })
        })?;
    let named = gens
        .iter()
        .enumerate()
        .map(|(k, g)| {
            let m = Monomial::generator(gens.len(), k);
            (
                g.clone(),
                Element::new(g.degree, pieces[g.degree].coordinates(&m)),
            )
        })
        .collect();
    algebra.with_generators(named)
}

/// Evaluates `poly` (over `gens`) in `algebra` by sending generator `k` to `images[k]`.
/// A zero polynomial evaluates to zero in `degree`; a nonzero one must have that degree.
pub fn evaluate(
    algebra: &GradedAlgebra,
    gens: &[Generator],
    images: &[Element],
    poly: &Polynomial,
    degree: usize,
) -> Result<Element, GradedError> {
    assert_eq!(gens.len(), images.len());
    for (g, img) in gens.iter().zip(images) {
        if img.degree() != g.degree {
            return Err(GradedError::DegreeMismatch {
                context: format!("image of `{}`", g.name),
                expected: g.degree,
                found: img.degree(),
            });
        }
        algebra.check_element(img)?;
    }
    if degree > algebra.top_degree() {
        return Err(GradedError::DegreeOverflow {
            left: degree,
            right: 0,
            top: algebra.top_degree(),
        });
    }
    match poly.homogeneity(gens) {
        Homogeneity::Zero => return Ok(algebra.zero(degree)),
        Homogeneity::Inhomogeneous => {
            return Err(GradedError::Inhomogeneous {
                context: format!("`{}`", poly.display(gens)),
            })
        }
        Homogeneity::Homogeneous(d) if d != degree => {
            return Err(GradedError::DegreeMismatch {
                context: format!("`{}`", poly.display(gens)),
                expected: degree,
                found: d,
            })
        }
        Homogeneity::Homogeneous(_) => {}
    }
    let mut acc = zero_vector(algebra.dim(degree));
    for (m, c) in poly.terms() {
        let mut value = algebra.unit();
        for (k, &e) in m.exponents().iter().enumerate() {
            for _ in 0..e {
                value = algebra.multiply(&value, &images[k])?;
            }
        }
        axpy(&mut acc, c, value.coords());
    }
    Ok(Element::new(degree, acc))
}
