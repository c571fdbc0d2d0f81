use super::ideal::Ideal;
use super::CutError;
use crate::exactla::{QMatrix, QuotientSpace, Subspace};
use crate::graded::{Element, GradedAlgebra};

/// `S / I` together with the data to move elements between `S` and the quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientAlgebra {
    pub algebra: GradedAlgebra,
    spaces: Vec<QuotientSpace>,
}

impl QuotientAlgebra {
    /// Class of a parent element.
    pub fn project(&self, x: &Element) -> Result<Element, CutError> {
        Ok(Element::new(
            x.degree(),
            self.spaces[x.degree()].coordinates(x.coords())?,
        ))
    }

    /// The canonical representative of a quotient element.
    pub fn lift(&self, x: &Element) -> Result<Element, CutError> {
        self.algebra.check_element(x)?;
        let reps = self.spaces[x.degree()].representatives();
        let n = self.spaces[x.degree()].sub().ambient_dim();
        let rep_space = Subspace::span(n, reps)?;
        Ok(Element::new(x.degree(), rep_space.combine(x.coords())?))
    }

    /// Matrix of the projection in `degree` (quotient dim x parent dim).
    pub fn projection_matrix(&self, degree: usize) -> Result<QMatrix, CutError> {
        let qs = &self.spaces[degree];
        let n = qs.sub().ambient_dim();
        let columns = (0..n)
            .map(|i| qs.coordinates(&crate::exactla::unit_vector(n, i)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(QMatrix::from_columns(qs.dim(), &columns)?)
    }

    /// Multiplying representatives shifted by ideal elements gives the same class.
    pub fn check_representative_independence(
        &self,
        parent: &GradedAlgebra,
        ideal: &Ideal,
    ) -> Result<(), String> {
        let top = parent.top_degree();
        let err = |e: CutError| e.to_string();
        for d1 in 0..=top {
            for d2 in 0..=(top - d1) {
                for x in self.algebra.basis(d1) {
                    let rx = self.lift(&x).map_err(err)?;
                    for y in self.algebra.basis(d2) {
                        let ry = self.lift(&y).map_err(err)?;
                        let base = self
                            .project(&parent.multiply(&rx, &ry).map_err(|e| e.to_string())?)
                            .map_err(err)?;
                        for w in ideal.space(d1).basis() {
                            let shifted = rx
                                .add(&Element::new(d1, w.clone()))
                                .map_err(|e| e.to_string())?;
                            let p = parent.multiply(&shifted, &ry).map_err(|e| e.to_string())?;
                            if self.project(&p).map_err(err)? != base {
                                return Err(format!(
                                    "left factor shift changes product in degree {}",
                                    d1 + d2
                                ));
                            }
                        }
                        for w in ideal.space(d2).basis() {
                            let shifted = ry
                                .add(&Element::new(d2, w.clone()))
                                .map_err(|e| e.to_string())?;
                            let p = parent.multiply(&rx, &shifted).map_err(|e| e.to_string())?;
                            if self.project(&p).map_err(err)? != base {
                                return Err(format!(
                                    "right factor shift changes product in degree {}",
                                    d1 + d2
                                ));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Quotient of `parent` by an ideal. Bases are the canonical quotient representatives;
/// named generators of the parent carry over as their classes.
pub fn quotient_algebra(
    parent: &GradedAlgebra,
    ideal: &Ideal,
) -> Result<QuotientAlgebra, CutError> {
    if let Some(degree) = ideal.closure_violation(parent)? {
        return Err(CutError::NotAnIdeal { degree });
    }
    let top = parent.top_degree();
    let spaces = (0..=top)
        .map(|d| QuotientSpace::new(&Subspace::full(parent.dim(d)), ideal.space(d)))
        .collect::<Result<Vec<_>, _>>()?;
    let labels = spaces
        .iter()
        .enumerate()
        .map(|(d, qs)| {
            qs.representatives()
                .iter()
                .map(|r| parent.format_element(&Element::new(d, r.clone())))
                .collect()
        })
        .collect();
    let unit = spaces[0].coordinates(parent.unit().coords())?;
    let algebra =
        GradedAlgebra::from_products::<CutError, _>(top, labels, unit, |d1, i, d2, j| {
            let x = Element::new(d1, spaces[d1].representatives()[i].clone());
            let y = Element::new(d2, spaces[d2].representatives()[j].clone());
            Ok(spaces[d1 + d2].coordinates(parent.multiply(&x, &y)?.coords())?)
        })?;
    let generators = parent
        .generators()
        .iter()
        .map(|(g, e)| {
            Ok((
                g.clone(),
                Element::new(e.degree(), spaces[e.degree()].coordinates(e.coords())?),
            ))
        })
        .collect::<Result<Vec<_>, CutError>>()?;
    let algebra = algebra.with_generators(generators)?;
    Ok(QuotientAlgebra { algebra, spaces })
}
