use std::collections::BTreeMap;
use std::sync::Arc;

use super::algebra::{Element, GradedAlgebra};
use super::monomial::enumerate_monomials;
use super::polynomial::Polynomial;
use super::presentation::Presentation;
use super::realize::{evaluate, realize};
use super::GradedError;
use crate::exactla::{kernel_basis, rank, solve, unit_vector, QMatrix};
use num::One;

/// Degree-preserving unital algebra map, one matrix per degree (target dim x source dim).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedHom {
    source: Arc<GradedAlgebra>,
    target: Arc<GradedAlgebra>,
    matrices: Vec<QMatrix>,
}

impl GradedHom {
    /// Wraps per-degree matrices after checking shapes, the unit and all basis products.
    pub fn from_matrices(
        source: Arc<GradedAlgebra>,
        target: Arc<GradedAlgebra>,
        matrices: Vec<QMatrix>,
    ) -> Result<Self, GradedError> {
        if source.top_degree() != target.top_degree() {
            return Err(GradedError::TopDegreeMismatch {
                left: source.top_degree(),
                right: target.top_degree(),
            });
        }
        assert_eq!(matrices.len(), source.top_degree() + 1);
        for (d, m) in matrices.iter().enumerate() {
            if m.rows() != target.dim(d) || m.cols() != source.dim(d) {
                return Err(GradedError::BadElement {
                    degree: d,
                    expected: target.dim(d) * source.dim(d),
                    found: m.rows() * m.cols(),
                });
            }
        }
        let h = GradedHom {
            source,
            target,
            matrices,
        };
        h.check_multiplicative()?;
        Ok(h)
    }

    pub fn identity(algebra: Arc<GradedAlgebra>) -> Self {
        let matrices = (0..=algebra.top_degree())
            .map(|d| QMatrix::identity(algebra.dim(d)))
            .collect();
        GradedHom {
            source: algebra.clone(),
            target: algebra,
            matrices,
        }
    }

    pub fn source(&self) -> &Arc<GradedAlgebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GradedAlgebra> {
        &self.target
    }

    pub fn matrix(&self, degree: usize) -> &QMatrix {
        &self.matrices[degree]
    }

    pub fn matrices(&self) -> &[QMatrix] {
        &self.matrices
    }

    pub fn apply(&self, x: &Element) -> Result<Element, GradedError> {
        self.source.check_element(x)?;
        let v = self.matrices[x.degree()].mul_vec(x.coords())?;
        Ok(Element::new(x.degree(), v))
    }

    /// Checks `h(1) = 1` and `h(xy) = h(x)h(y)` on every basis pair within the top degree.
    pub fn check_multiplicative(&self) -> Result<(), GradedError> {
        if self.apply(&self.source.unit())? != self.target.unit() {
            return Err(GradedError::NotMultiplicative {
                what: "the unit".into(),
            });
        }
        let top = self.source.top_degree();
        for d1 in 0..=top {
            for d2 in 0..=(top - d1) {
                for x in self.source.basis(d1) {
                    let hx = self.apply(&x)?;
                    for y in self.source.basis(d2) {
                        let left = self.apply(&self.source.multiply(&x, &y)?)?;
                        let right = self.target.multiply(&hx, &self.apply(&y)?)?;
                        if left != right {
                            return Err(GradedError::NotMultiplicative {
                                what: format!(
                                    "the product of {} and {}",
                                    self.source.format_element(&x),
                                    self.source.format_element(&y)
                                ),
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Per degree, whether the map has full row rank.
pub fn is_surjective_degreewise(h: &GradedHom) -> Vec<bool> {
    h.matrices().iter().map(|m| rank(m) == m.rows()).collect()
}

/// The map determined by sending the attached generators of `source` to `images`.
///
/// Works degreewise on free monomials in the generators: their values in the source must
/// span each graded piece, and every linear relation among those values must also hold
/// among the images.
pub fn hom_from_generator_images(
    source: Arc<GradedAlgebra>,
    target: Arc<GradedAlgebra>,
    images: &[Element],
) -> Result<GradedHom, GradedError> {
    if source.top_degree() != target.top_degree() {
        return Err(GradedError::TopDegreeMismatch {
            left: source.top_degree(),
            right: target.top_degree(),
        });
    }
    let gens = source.generator_list();
    assert_eq!(gens.len(), images.len(), "one image per generator");
    let mut matrices = Vec::new();
    for d in 0..=source.top_degree() {
        let monos = enumerate_monomials(&gens, d);
        let mut src_cols = Vec::with_capacity(monos.len());
        let mut tgt_cols = Vec::with_capacity(monos.len());
        for m in &monos {
            let p = Polynomial::term(m.clone(), crate::exactla::Q::one());
            src_cols.push(source.evaluate(&p, d)?.into_coords());
            tgt_cols.push(evaluate(&target, &gens, images, &p, d)?.into_coords());
        }
        let e_src = QMatrix::from_columns(source.dim(d), &src_cols)?;
        let e_tgt = QMatrix::from_columns(target.dim(d), &tgt_cols)?;
        if rank(&e_src) != source.dim(d) {
            return Err(GradedError::NotGenerated { degree: d });
        }
        for w in kernel_basis(&e_src).basis() {
            let image = e_tgt.mul_vec(w)?;
            if !crate::exactla::is_zero_vector(&image) {
                let mut relation = Polynomial::zero();
                for (m, c) in monos.iter().zip(w) {
                    relation = relation.add(&Polynomial::term(m.clone(), c.clone()));
                }
                return Err(GradedError::RelationNotPreserved {
                    relation: relation.display(&gens).to_string(),
                    image: target.format_element(&Element::new(d, image)),
                });
            }
        }
        let mut columns = Vec::with_capacity(source.dim(d));
        for k in 0..source.dim(d) {
            let w = solve(&e_src, &unit_vector(source.dim(d), k))?
                .expect("evaluation map is surjective");
            columns.push(e_tgt.mul_vec(&w)?);
        }
        matrices.push(QMatrix::from_columns(target.dim(d), &columns)?);
    }
    GradedHom::from_matrices(source, target, matrices)
}

/// Realizes `src` and extends the generator images multiplicatively, after checking that
/// every relation of `src` maps to zero.
pub fn build_hom(
    src: &Presentation,
    target: Arc<GradedAlgebra>,
    images: &BTreeMap<String, Element>,
) -> Result<GradedHom, GradedError> {
    for name in images.keys() {
        if src.generator_index(name).is_none() {
            return Err(GradedError::UnknownGenerator { name: name.clone() });
        }
    }
    let ordered = src
        .generators()
        .iter()
        .map(|g| {
            images
                .get(&g.name)
                .cloned()
                .ok_or_else(|| GradedError::MissingImage {
                    generator: g.name.clone(),
                })
        })
        .collect::<Result<Vec<_>, _>>()?;
    if src.top_degree() != target.top_degree() {
        return Err(GradedError::TopDegreeMismatch {
            left: src.top_degree(),
            right: target.top_degree(),
        });
    }
    for (r, d) in src.effective_relations() {
        let image = evaluate(&target, src.generators(), &ordered, r, d)?;
        if !image.is_zero() {
            return Err(GradedError::RelationNotPreserved {
                relation: src.display_relation(r),
                image: target.format_element(&image),
            });
        }
    }
    let source = Arc::new(realize(src)?);
    hom_from_generator_images(source, target, &ordered)
}
