use super::CutError;
use crate::exactla::{kernel_basis, Subspace};
use crate::graded::{Element, GradedAlgebra};

/// Per-degree subspaces of a parent algebra, closed under multiplication by the parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    spaces: Vec<Subspace>,
}

impl Ideal {
    /// Checks closure against `parent` before accepting the subspaces.
    pub fn from_spaces(parent: &GradedAlgebra, spaces: Vec<Subspace>) -> Result<Self, CutError> {
        assert_eq!(spaces.len(), parent.top_degree() + 1);
        for (d, s) in spaces.iter().enumerate() {
            if s.ambient_dim() != parent.dim(d) {
                return Err(CutError::NotAnIdeal { degree: d });
            }
        }
        let ideal = Ideal { spaces };
        if let Some(degree) = ideal.closure_violation(parent)? {
            return Err(CutError::NotAnIdeal { degree });
        }
        Ok(ideal)
    }

    pub fn zero(parent: &GradedAlgebra) -> Self {
        Ideal {
            spaces: (0..=parent.top_degree())
                .map(|d| Subspace::zero(parent.dim(d)))
                .collect(),
        }
    }

    pub fn space(&self, degree: usize) -> &Subspace {
        &self.spaces[degree]
    }

    pub fn spaces(&self) -> &[Subspace] {
        &self.spaces
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(Subspace::dim).collect()
    }

    pub fn contains(&self, x: &Element) -> Result<bool, CutError> {
        Ok(self.spaces[x.degree()].contains(x.coords())?)
    }

    /// First product degree where `parent basis * ideal basis` leaves the ideal.
    pub fn closure_violation(&self, parent: &GradedAlgebra) -> Result<Option<usize>, CutError> {
        let top = parent.top_degree();
        for d1 in 0..=top {
            for d2 in 0..=(top - d1) {
                for b in parent.basis(d1) {
                    for w in self.spaces[d2].basis() {
                        let w = Element::new(d2, w.clone());
                        let left = parent.multiply(&b, &w)?;
                        let right = parent.multiply(&w, &b)?;
                        let target = &self.spaces[d1 + d2];
                        if !target.contains(left.coords())? || !target.contains(right.coords())? {
                            return Ok(Some(d1 + d2));
                        }
                    }
                }
            }
        }
        Ok(None)
    }
}

/// The smallest ideal containing `gens`: in degree `d`, the span of `b * g` over generators
/// `g` and parent basis elements `b` of degree `d - deg g`.
pub fn ideal_span(parent: &GradedAlgebra, gens: &[Element]) -> Result<Ideal, CutError> {
    for g in gens {
        parent.check_element(g)?;
    }
    let top = parent.top_degree();
    let mut spaces = Vec::with_capacity(top + 1);
    for d in 0..=top {
        let mut vectors = Vec::new();
        for g in gens.iter().filter(|g| g.degree() <= d) {
            for b in parent.basis(d - g.degree()) {
                vectors.push(parent.multiply(&b, g)?.into_coords());
            }
        }
        spaces.push(Subspace::span(parent.dim(d), &vectors)?);
    }
    Ideal::from_spaces(parent, spaces)
}

/// Elements whose product with `e` vanishes. Degrees `d` with `d + deg e` above the top
/// degree multiply into the zero space and belong entirely to the annihilator.
pub fn annihilator(parent: &GradedAlgebra, e: &Element) -> Result<Ideal, CutError> {
    parent.check_element(e)?;
    let top = parent.top_degree();
    let spaces = (0..=top)
        .map(|d| {
            if d + e.degree() > top {
                Ok(Subspace::full(parent.dim(d)))
            } else {
                Ok(kernel_basis(&parent.left_multiplication(e, d)?))
            }
        })
        .collect::<Result<Vec<_>, CutError>>()?;
    Ideal::from_spaces(parent, spaces)
}
