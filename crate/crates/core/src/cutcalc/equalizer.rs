use std::sync::Arc;

use super::CutError;
use num::One;

use crate::exactla::{kernel_basis, QMatrix, Subspace, Q};
use crate::graded::{direct_sum, Element, Generator, GradedAlgebra, GradedHom};

/// A subalgebra given by per-degree subspaces of an ambient algebra, realized in the
/// subspaces' echelon bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubalgebraWithEmbedding {
    pub algebra: GradedAlgebra,
    pub ambient: Arc<GradedAlgebra>,
    spaces: Vec<Subspace>,
}

impl SubalgebraWithEmbedding {
    /// Attaches named generators to the subalgebra.
    pub fn with_generators(
        mut self,
        generators: Vec<(Generator, Element)>,
    ) -> Result<Self, CutError> {
        self.algebra = self.algebra.with_generators(generators)?;
        Ok(self)
    }

    pub fn space(&self, degree: usize) -> &Subspace {
        &self.spaces[degree]
    }

    /// Ambient dim x subalgebra dim; columns are the basis vectors.
    pub fn embedding_matrix(&self, degree: usize) -> QMatrix {
        let s = &self.spaces[degree];
        QMatrix::from_columns(s.ambient_dim(), s.basis()).expect("basis vectors share a width")
    }

    pub fn embed(&self, x: &Element) -> Result<Element, CutError> {
        self.algebra.check_element(x)?;
        Ok(Element::new(
            x.degree(),
            self.spaces[x.degree()].combine(x.coords())?,
        ))
    }

    /// The subalgebra element mapping to `v`, if `v` lies in the subalgebra.
    pub fn preimage(&self, v: &Element) -> Result<Option<Element>, CutError> {
        self.ambient.check_element(v)?;
        Ok(self.spaces[v.degree()]
            .coordinates(v.coords())?
            .map(|c| Element::new(v.degree(), c)))
    }

    /// Checks injectivity and that embedding intertwines products on all basis pairs.
    pub fn check_embedding(&self) -> Result<(), String> {
        let top = self.algebra.top_degree();
        for d in 0..=top {
            if self.spaces[d].dim() != self.algebra.dim(d) {
                return Err(format!("embedding is not injective in degree {d}"));
            }
        }
        for d1 in 0..=top {
            for d2 in 0..=(top - d1) {
                for x in self.algebra.basis(d1) {
                    for y in self.algebra.basis(d2) {
                        let lhs = self
                            .embed(&self.algebra.multiply(&x, &y).map_err(|e| e.to_string())?)
                            .map_err(|e| e.to_string())?;
                        let ex = self.embed(&x).map_err(|e| e.to_string())?;
                        let ey = self.embed(&y).map_err(|e| e.to_string())?;
                        let rhs = self.ambient.multiply(&ex, &ey).map_err(|e| e.to_string())?;
                        if lhs != rhs {
                            return Err(format!("products differ in degree {}", d1 + d2));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Realizes the subalgebra spanned degreewise by `spaces`; fails if the spaces miss the unit
/// or are not closed under products.
pub fn subalgebra_from_subspaces(
    ambient: Arc<GradedAlgebra>,
    spaces: Vec<Subspace>,
) -> Result<SubalgebraWithEmbedding, CutError> {
    let top = ambient.top_degree();
    assert_eq!(spaces.len(), top + 1);
    let unit = spaces[0]
        .coordinates(ambient.unit().coords())?
        .ok_or(CutError::NotASubalgebra { degree: 0 })?;
    let labels = spaces
        .iter()
        .enumerate()
        .map(|(d, s)| {
            s.basis()
                .iter()
                .map(|b| ambient.format_element(&Element::new(d, b.clone())))
                .collect()
        })
        .collect();
    let algebra =
        GradedAlgebra::from_products::<CutError, _>(top, labels, unit, |d1, i, d2, j| {
            let x = Element::new(d1, spaces[d1].basis()[i].clone());
            let y = Element::new(d2, spaces[d2].basis()[j].clone());
            let xy = ambient.multiply(&x, &y)?;
            spaces[d1 + d2]
                .coordinates(xy.coords())?
                .ok_or(CutError::NotASubalgebra { degree: d1 + d2 })
        })?;
    Ok(SubalgebraWithEmbedding {
        algebra,
        ambient,
        spaces,
    })
}

/// `ker(f - g)` inside `a ⊕ b` for maps `f: a -> t`, `g: b -> t`.
pub fn equalizer_subring(
    a: &GradedAlgebra,
    b: &GradedAlgebra,
    f: &GradedHom,
    g: &GradedHom,
) -> Result<SubalgebraWithEmbedding, CutError> {
    if f.source().as_ref() != a || g.source().as_ref() != b {
        return Err(CutError::MapMismatch {
            what: "map sources do not match the summands".into(),
        });
    }
    if f.target() != g.target() {
        return Err(CutError::MapMismatch {
            what: "maps have different targets".into(),
        });
    }
    let ambient = Arc::new(direct_sum(a, b)?);
    let spaces = (0..=a.top_degree())
        .map(|d| {
            let diff = f.matrix(d).hstack(&g.matrix(d).scaled(&-Q::one()))?;
            Ok(kernel_basis(&diff))
        })
        .collect::<Result<Vec<_>, CutError>>()?;
    subalgebra_from_subspaces(ambient, spaces)
}
