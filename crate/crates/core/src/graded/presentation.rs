use std::collections::HashSet;

use super::monomial::Generator;
use super::polynomial::{Homogeneity, Polynomial};
use super::GradedError;

/// Generators, homogeneous relations and a top degree above which everything is zero.
///
/// Relations of degree above the top degree hold automatically in the truncation; they are
/// kept so a presentation can be transcribed verbatim, and ignored by [`super::realize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<Generator>,
    relations: Vec<Polynomial>,
    top_degree: usize,
}

impl Presentation {
    pub fn new(
        generators: Vec<Generator>,
        relations: Vec<Polynomial>,
        top_degree: usize,
    ) -> Result<Self, GradedError> {
        let mut seen = HashSet::new();
        for g in &generators {
            if !seen.insert(g.name.as_str()) {
                return Err(GradedError::DuplicateGenerator {
                    name: g.name.clone(),
                });
            }
            if g.degree == 0 {
                return Err(GradedError::ZeroDegreeGenerator {
                    name: g.name.clone(),
                });
            }
            if g.degree > top_degree {
                return Err(GradedError::GeneratorAboveTop {
                    name: g.name.clone(),
                    degree: g.degree,
                    top: top_degree,
                });
            }
        }
        for r in &relations {
            assert!(
                r.terms()
                    .all(|(m, _)| m.num_generators() == generators.len()),
                "relation built over a different generator list"
            );
            if r.homogeneity(&generators) == Homogeneity::Inhomogeneous {
                return Err(GradedError::InhomogeneousRelation {
                    relation: r.display(&generators).to_string(),
                });
            }
        }
        Ok(Presentation {
            generators,
            relations,
            top_degree,
        })
    }

    /// Convenience constructor from names, degrees and relation strings such as `"u*v - u^2"`.
    pub fn parse(
        generators: &[(&str, usize)],
        relations: &[&str],
        top_degree: usize,
    ) -> Result<Self, GradedError> {
        let gens: Vec<Generator> = generators
            .iter()
            .map(|&(n, d)| Generator::new(n, d))
            .collect();
        let rels = relations
            .iter()
            .map(|text| crate::dsl::parse_polynomial(text, &gens))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(gens, rels, top_degree)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn top_degree(&self) -> usize {
        self.top_degree
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    /// Nonzero relations of degree at most the top degree, with their degrees.
    pub fn effective_relations(&self) -> impl Iterator<Item = (&Polynomial, usize)> {
        self.relations
            .iter()
            .filter_map(|r| match r.homogeneity(&self.generators) {
                Homogeneity::Homogeneous(d) if d <= self.top_degree => Some((r, d)),
                _ => None,
            })
    }

    pub fn with_top_degree(&self, top_degree: usize) -> Result<Self, GradedError> {
        Self::new(self.generators.clone(), self.relations.clone(), top_degree)
    }

    pub fn display_relation(&self, r: &Polynomial) -> String {
        r.display(&self.generators).to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            Presentation::parse(&[("u", 2)], &["u*u - u"], 4),
            Err(GradedError::InhomogeneousRelation { .. })
        ));
        assert!(matches!(
            Presentation::parse(&[("u", 2)], &["w^2"], 4),
            Err(GradedError::UnknownGenerator { .. })
        ));
        assert!(matches!(
            Presentation::parse(&[("u", 2), ("u", 2)], &[], 4),
            Err(GradedError::DuplicateGenerator { .. })
        ));
        assert!(matches!(
            Presentation::parse(&[("u", 0)], &[], 4),
            Err(GradedError::ZeroDegreeGenerator { .. })
        ));
    }

    #[test]
    fn relations_above_top_are_ignored() {
        let p = Presentation::parse(&[("u", 2), ("v", 2)], &["u^3", "u^2*v^2"], 6).unwrap();
        assert_eq!(p.relations().len(), 2);
        assert_eq!(p.effective_relations().count(), 1);
    }
}
