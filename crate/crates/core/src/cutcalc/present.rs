//! Generators-and-relations descriptions of realized algebras.

use std::collections::{BTreeMap, HashMap};

use num::One;
use serde::Serialize;

use super::CutError;
use crate::exactla::{
    kernel_basis, quotient_basis, rank, zero_vector, QMatrix, QVector, Subspace, Q,
};
use crate::graded::{
    enumerate_monomials, evaluate, realize, Element, Generator, GradedAlgebra, GradedError,
    Monomial, Polynomial, Presentation,
};

/// Linear relations of one degree among monomials in chosen generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSpace {
    pub generators: Vec<Generator>,
    pub degree: usize,
    pub monomials: Vec<Monomial>,
    pub space: Subspace,
}

impl RelationSpace {
    fn vector(&self, p: &Polynomial) -> Option<QVector> {
        let index: HashMap<&Monomial, usize> = self
            .monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let mut v = zero_vector(self.monomials.len());
        for (m, c) in p.terms() {
            v[*index.get(m)?] = c.clone();
        }
        Some(v)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.vector(p)
            .map(|v| self.space.contains(&v).expect("same width"))
            .unwrap_or(false)
    }

    /// Whether the given polynomials span exactly this relation space.
    pub fn is_spanned_by(&self, polys: &[Polynomial]) -> bool {
        let Some(vectors) = polys
            .iter()
            .map(|p| self.vector(p))
            .collect::<Option<Vec<_>>>()
        else {
            return false;
        };
        Subspace::span(self.monomials.len(), &vectors).expect("same width") == self.space
    }

    pub fn basis_polynomials(&self) -> Vec<Polynomial> {
        self.space
            .basis()
            .iter()
            .map(|v| to_polynomial(v, &self.monomials))
            .collect()
    }
}

fn to_polynomial(v: &[Q], monomials: &[Monomial]) -> Polynomial {
    v.iter()
        .zip(monomials)
        .fold(Polynomial::zero(), |acc, (c, m)| {
            acc.add(&Polynomial::term(m.clone(), c.clone()))
        })
}

fn split(gens: &[(Generator, Element)]) -> (Vec<Generator>, Vec<Element>) {
    gens.iter().cloned().unzip()
}

fn evaluation_matrix(
    a: &GradedAlgebra,
    gens: &[Generator],
    images: &[Element],
    monomials: &[Monomial],
    degree: usize,
) -> Result<QMatrix, CutError> {
    let columns = monomials
        .iter()
        .map(|m| {
            let p = Polynomial::term(m.clone(), Q::one());
            Ok(evaluate(a, gens, images, &p, degree)?.into_coords())
        })
        .collect::<Result<Vec<_>, CutError>>()?;
    Ok(QMatrix::from_columns(a.dim(degree), &columns)?)
}

/// Kernel of the evaluation of degree-`degree` monomials in `gens` into `a`.
pub fn relation_space(
    a: &GradedAlgebra,
    gens: &[(Generator, Element)],
    degree: usize,
) -> Result<RelationSpace, CutError> {
    let (names, images) = split(gens);
    let monomials = enumerate_monomials(&names, degree);
    let e = evaluation_matrix(a, &names, &images, &monomials, degree)?;
    Ok(RelationSpace {
        generators: names,
        degree,
        monomials,
        space: kernel_basis(&e),
    })
}

/// Per degree, representatives of a basis of the indecomposables `A^d / (A+ · A+)^d`.
pub fn minimal_generators(a: &GradedAlgebra) -> Result<Vec<Vec<Element>>, CutError> {
    if !a.is_connected() {
        return Err(CutError::Disconnected { dim0: a.dim(0) });
    }
    let top = a.top_degree();
    let mut out = vec![Vec::new()];
    for d in 1..=top {
        let mut products = Vec::new();
        for d1 in 1..d {
            for x in a.basis(d1) {
                for y in a.basis(d - d1) {
                    products.push(a.multiply(&x, &y)?.into_coords());
                }
            }
        }
        let decomposables = Subspace::span(a.dim(d), &products)?;
        let reps = quotient_basis(&Subspace::full(a.dim(d)), &decomposables)?;
        out.push(reps.into_iter().map(|v| Element::new(d, v)).collect());
    }
    Ok(out)
}

/// Presentation of `a` in the given generators, truncated at the top degree of `a`.
///
/// In each degree the relations are the kernel of the monomial evaluation map, reduced
/// modulo multiples of relations found in lower degrees. Fails if the generators do not
/// span every degree.
pub fn presentation_from_generators(
    a: &GradedAlgebra,
    gens: &[(Generator, Element)],
) -> Result<Presentation, CutError> {
    if !a.is_connected() {
        return Err(CutError::Disconnected { dim0: a.dim(0) });
    }
    let (names, images) = split(gens);
    let mut relations: Vec<(Polynomial, usize)> = Vec::new();
    for d in 1..=a.top_degree() {
        let monomials = enumerate_monomials(&names, d);
        let e = evaluation_matrix(a, &names, &images, &monomials, d)?;
        if rank(&e) < a.dim(d) {
            return Err(GradedError::NotGenerated { degree: d }.into());
        }
        let kernel = kernel_basis(&e);
        let index: HashMap<&Monomial, usize> =
            monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut multiples = Vec::new();
        for (r, rd) in &relations {
            for m in enumerate_monomials(&names, d - rd) {
                let prod = Polynomial::term(m, Q::one()).mul(r, &names);
                let mut v = zero_vector(monomials.len());
                for (mono, c) in prod.terms() {
                    v[index[mono]] = c.clone();
                }
                multiples.push(v);
            }
        }
        let known = Subspace::span(monomials.len(), &multiples)?;
        for v in quotient_basis(&kernel, &known)? {
            relations.push((to_polynomial(&v, &monomials), d));
        }
    }
    Ok(Presentation::new(
        names,
        relations.into_iter().map(|(r, _)| r).collect(),
        a.top_degree(),
    )?)
}

/// A presentation together with the elements its generators stand for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtractedPresentation {
    pub presentation: Presentation,
    pub images: Vec<Element>,
}

/// Presentation on the minimal generators of `a`, named `g1, g2, ...` in degree order.
pub fn extract_presentation(a: &GradedAlgebra) -> Result<ExtractedPresentation, CutError> {
    let gens: Vec<(Generator, Element)> = minimal_generators(a)?
        .into_iter()
        .flatten()
        .enumerate()
        .map(|(k, e)| (Generator::new(format!("g{}", k + 1), e.degree()), e))
        .collect();
    let presentation = presentation_from_generators(a, &gens)?;
    Ok(ExtractedPresentation {
        presentation,
        images: gens.into_iter().map(|(_, e)| e).collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub image: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoVerdict {
    pub relations: Vec<RelationCheck>,
    pub surjective: Vec<bool>,
    pub presentation_dims: Vec<usize>,
    pub algebra_dims: Vec<usize>,
    pub is_isomorphism: bool,
}

/// Certifies that generator images induce an isomorphism `realize(p) -> a`: relations map to
/// zero, the induced map is onto in every degree, and dimensions agree in every degree.
pub fn verify_presentation_iso(
    p: &Presentation,
    a: &GradedAlgebra,
    images: &BTreeMap<String, Element>,
) -> Result<IsoVerdict, CutError> {
    let ordered = p
        .generators()
        .iter()
        .map(|g| {
            let e = images
                .get(&g.name)
                .ok_or_else(|| GradedError::MissingImage {
                    generator: g.name.clone(),
                })?;
            if e.degree() != g.degree {
                return Err(GradedError::DegreeMismatch {
                    context: format!("image of `{}`", g.name),
                    expected: g.degree,
                    found: e.degree(),
                });
            }
            a.check_element(e)?;
            Ok(e.clone())
        })
        .collect::<Result<Vec<_>, GradedError>>()?;
    let p = p.with_top_degree(a.top_degree())?;
    let gens = p.generators();

    let relations = p
        .effective_relations()
        .map(|(r, d)| {
            let image = evaluate(a, gens, &ordered, r, d)?;
            Ok(RelationCheck {
                relation: p.display_relation(r),
                image: a.format_element(&image),
                holds: image.is_zero(),
            })
        })
        .collect::<Result<Vec<_>, CutError>>()?;

    let mut surjective = Vec::with_capacity(a.top_degree() + 1);
    for d in 0..=a.top_degree() {
        let monomials = enumerate_monomials(gens, d);
        let e = evaluation_matrix(a, gens, &ordered, &monomials, d)?;
        surjective.push(rank(&e) == a.dim(d));
    }
    let presentation_dims = realize(&p)?.dims();
    let algebra_dims = a.dims();
    let is_isomorphism = relations.iter().all(|r| r.holds)
        && surjective.iter().all(|&s| s)
        && presentation_dims == algebra_dims;
    Ok(IsoVerdict {
        relations,
        surjective,
        presentation_dims,
        algebra_dims,
        is_isomorphism,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_polynomial;

    fn alg(gens: &[(&str, usize)], rels: &[&str], top: usize) -> GradedAlgebra {
        realize(&Presentation::parse(gens, rels, top).unwrap()).unwrap()
    }

    fn named(a: &GradedAlgebra) -> BTreeMap<String, Element> {
        a.generators()
            .iter()
            .map(|(g, e)| (g.name.clone(), e.clone()))
            .collect()
    }

    #[test]
    fn minimal_generators_examples() {
        let a = alg(&[("a", 2)], &["a^3"], 4);
        let gens = minimal_generators(&a).unwrap();
        assert_eq!(
            gens.iter().map(Vec::len).collect::<Vec<_>>(),
            vec![0, 0, 1, 0, 0]
        );
        let point = alg(&[], &[], 0);
        assert_eq!(
            minimal_generators(&point).unwrap(),
            vec![Vec::<Element>::new()]
        );
        let two = crate::graded::direct_sum(&point, &point).unwrap();
        assert!(matches!(
            minimal_generators(&two),
            Err(CutError::Disconnected { dim0: 2 })
        ));
    }

    #[test]
    fn truncated_ring_round_trip() {
        let a = alg(&[("a", 2)], &["a^3"], 4);
        let ex = extract_presentation(&a).unwrap();
        let p = &ex.presentation;
        assert_eq!(p.generators(), &[Generator::new("g1", 2)]);
        assert_eq!(p.relations().len(), 0, "a^3 sits above the top degree");
        assert_eq!(realize(p).unwrap().dims(), a.dims());

        let a = alg(&[("a", 2)], &["a^3"], 6);
        let ex = extract_presentation(&a).unwrap();
        let shown: Vec<String> = ex
            .presentation
            .relations()
            .iter()
            .map(|r| ex.presentation.display_relation(r))
            .collect();
        assert_eq!(shown, ["g1^3"]);
    }

    #[test]
    fn identity_images_certify() {
        let p = Presentation::parse(&[("a", 2), ("b", 2)], &["a^2", "b*(b+a)"], 4).unwrap();
        let a = realize(&p).unwrap();
        let v = verify_presentation_iso(&p, &a, &named(&a)).unwrap();
        assert!(v.is_isomorphism);
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let p = Presentation::parse(&[("a", 2)], &[], 4).unwrap();
        let a = realize(&p).unwrap();
        let mut images = BTreeMap::new();
        images.insert("a".to_string(), a.unit());
        assert!(verify_presentation_iso(&p, &a, &images).is_err());
    }

    #[test]
    fn relation_space_membership() {
        let a = alg(&[("u", 2), ("v", 2)], &["u*v - u^2 - v^2", "u^3", "v^3"], 6);
        let gens: Vec<(Generator, Element)> = a.generators().to_vec();
        let rs = relation_space(&a, &gens, 4).unwrap();
        let names = a.generator_list();
        let r = parse_polynomial("u*v - u^2 - v^2", &names).unwrap();
        assert!(rs.contains(&r));
        assert!(rs.is_spanned_by(&[r.scale(&Q::from_integer(3.into()))]));
        assert!(!rs.contains(&parse_polynomial("u*v", &names).unwrap()));
    }
}
