use num::{One, Zero};

use super::laurent::LaurentPoly;
use super::monomial::Generator;
use super::polynomial::Polynomial;
use super::GradedError;
use crate::exactla::{axpy, is_zero_vector, unit_vector, zero_vector, QMatrix, QVector, Q};

/// Homogeneous element: a degree and coordinates in that degree's basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    degree: usize,
    coords: QVector,
}

impl Element {
    pub fn new(degree: usize, coords: QVector) -> Self {
        Element { degree, coords }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    pub fn into_coords(self) -> QVector {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.coords)
    }

    pub fn add(&self, other: &Element) -> Result<Element, GradedError> {
        self.check_same_shape(other)?;
        Ok(Element {
            degree: self.degree,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Element) -> Result<Element, GradedError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        self.scale(&-Q::one())
    }

    pub fn scale(&self, c: &Q) -> Element {
        Element {
            degree: self.degree,
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    fn check_same_shape(&self, other: &Element) -> Result<(), GradedError> {
        if self.degree != other.degree {
            return Err(GradedError::DegreeMismatch {
                context: "sum of elements".into(),
                expected: self.degree,
                found: other.degree,
            });
        }
        if self.coords.len() != other.coords.len() {
            return Err(GradedError::BadElement {
                degree: self.degree,
                expected: self.coords.len(),
                found: other.coords.len(),
            });
        }
        Ok(())
    }
}

/// A graded algebra that is finite-dimensional and truncated at `top_degree`, given by a
/// labeled basis in every degree and the products of all basis pairs whose degrees sum to at
/// most the top degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebra {
    top: usize,
    labels: Vec<Vec<String>>,
    // table[d1][d2][i * dim(d2) + j] = b_{d1,i} * b_{d2,j}, defined when d1 + d2 <= top
    table: Vec<Vec<Vec<QVector>>>,
    unit: QVector,
    generators: Vec<(Generator, Element)>,
}

impl GradedAlgebra {
    /// Builds an algebra from basis labels, the unit and a product oracle on basis pairs.
    pub fn from_products<E, F>(
        top: usize,
        labels: Vec<Vec<String>>,
        unit: QVector,
        mut product: F,
    ) -> Result<Self, E>
    where
        E: From<GradedError>,
        F: FnMut(usize, usize, usize, usize) -> Result<QVector, E>,
    {
        assert_eq!(labels.len(), top + 1, "one label list per degree 0..=top");
        if unit.len() != labels[0].len() {
            return Err(GradedError::BadElement {
                degree: 0,
                expected: labels[0].len(),
                found: unit.len(),
            }
            .into());
        }
        let mut table = Vec::with_capacity(top + 1);
        for d1 in 0..=top {
            let mut row = Vec::with_capacity(top + 1 - d1);
            for d2 in 0..=(top - d1) {
                let target = labels[d1 + d2].len();
                let mut block = Vec::with_capacity(labels[d1].len() * labels[d2].len());
                for i in 0..labels[d1].len() {
                    for j in 0..labels[d2].len() {
                        let v = product(d1, i, d2, j)?;
                        if v.len() != target {
                            return Err(GradedError::BadElement {
                                degree: d1 + d2,
                                expected: target,
                                found: v.len(),
                            }
                            .into());
                        }
                        block.push(v);
                    }
                }
                row.push(block);
            }
            table.push(row);
        }
        Ok(GradedAlgebra {
            top,
            labels,
            table,
            unit,
            generators: Vec::new(),
        })
    }

    /// Attaches named algebra generators, used for evaluating polynomials.
    pub fn with_generators(
        mut self,
        generators: Vec<(Generator, Element)>,
    ) -> Result<Self, GradedError> {
        for (g, e) in &generators {
            self.check_element(e)?;
            if e.degree() != g.degree {
                return Err(GradedError::DegreeMismatch {
                    context: format!("generator `{}`", g.name),
                    expected: g.degree,
                    found: e.degree(),
                });
            }
        }
        self.generators = generators;
        Ok(self)
    }

    pub fn top_degree(&self) -> usize {
        self.top
    }

    pub fn dim(&self, degree: usize) -> usize {
        self.labels.get(degree).map_or(0, Vec::len)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.labels.iter().map(Vec::len).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.labels.iter().map(Vec::len).sum()
    }

    pub fn labels(&self, degree: usize) -> &[String] {
        &self.labels[degree]
    }

    pub fn generators(&self) -> &[(Generator, Element)] {
        &self.generators
    }

    pub fn generator_list(&self) -> Vec<Generator> {
        self.generators.iter().map(|(g, _)| g.clone()).collect()
    }

    pub fn generator(&self, name: &str) -> Option<&Element> {
        self.generators
            .iter()
            .find(|(g, _)| g.name == name)
            .map(|(_, e)| e)
    }

    pub fn is_connected(&self) -> bool {
        self.dim(0) == 1
    }

    pub fn unit(&self) -> Element {
        Element::new(0, self.unit.clone())
    }

    pub fn zero(&self, degree: usize) -> Element {
        Element::new(degree, zero_vector(self.dim(degree)))
    }

    pub fn basis_element(&self, degree: usize, index: usize) -> Element {
        Element::new(degree, unit_vector(self.dim(degree), index))
    }

    pub fn basis(&self, degree: usize) -> Vec<Element> {
        (0..self.dim(degree))
            .map(|i| self.basis_element(degree, i))
            .collect()
    }

    pub fn element(&self, degree: usize, coords: QVector) -> Result<Element, GradedError> {
        let e = Element::new(degree, coords);
        self.check_element(&e)?;
        Ok(e)
    }

    pub fn check_element(&self, e: &Element) -> Result<(), GradedError> {
        if e.degree() > self.top {
            return Err(GradedError::DegreeOverflow {
                left: e.degree(),
                right: 0,
                top: self.top,
            });
        }
        if e.coords().len() != self.dim(e.degree()) {
            return Err(GradedError::BadElement {
                degree: e.degree(),
                expected: self.dim(e.degree()),
                found: e.coords().len(),
            });
        }
        Ok(())
    }

    /// Product of the basis elements `b_{d1,i}` and `b_{d2,j}`; requires `d1 + d2 <= top`.
    pub fn basis_product(&self, d1: usize, i: usize, d2: usize, j: usize) -> &QVector {
        &self.table[d1][d2][i * self.dim(d2) + j]
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element, GradedError> {
        self.check_element(x)?;
        self.check_element(y)?;
        let (d1, d2) = (x.degree(), y.degree());
        if d1 + d2 > self.top {
            return Err(GradedError::DegreeOverflow {
                left: d1,
                right: d2,
                top: self.top,
            });
        }
        let mut out = zero_vector(self.dim(d1 + d2));
        for (i, a) in x.coords().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.coords().iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                axpy(&mut out, &(a * b), self.basis_product(d1, i, d2, j));
            }
        }
        Ok(Element::new(d1 + d2, out))
    }

    /// Matrix of `y -> x * y` from degree `degree` to degree `deg x + degree`.
    pub fn left_multiplication(&self, x: &Element, degree: usize) -> Result<QMatrix, GradedError> {
        let columns = self
            .basis(degree)
            .iter()
            .map(|b| self.multiply(x, b).map(Element::into_coords))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(QMatrix::from_columns(
            self.dim(x.degree() + degree),
            &columns,
        )?)
    }

    /// Evaluates a polynomial in the attached generators; zero evaluates in `degree`.
    pub fn evaluate(&self, poly: &Polynomial, degree: usize) -> Result<Element, GradedError> {
        let images: Vec<Element> = self.generators.iter().map(|(_, e)| e.clone()).collect();
        super::realize::evaluate(self, &self.generator_list(), &images, poly, degree)
    }

    pub fn poincare(&self) -> LaurentPoly {
        LaurentPoly::from_dims(&self.dims())
    }

    /// Renders an element as a combination of basis labels.
    pub fn format_element(&self, e: &Element) -> String {
        format_combination(e.coords(), &self.labels[e.degree()])
    }

    /// `Ok(())` or the first basis triple violating `(xy)z = x(yz)`.
    pub fn check_associativity(&self) -> Result<(), String> {
        for d1 in 0..=self.top {
            for d2 in 0..=(self.top - d1) {
                for d3 in 0..=(self.top - d1 - d2) {
                    for x in self.basis(d1) {
                        for y in self.basis(d2) {
                            let xy = self.multiply(&x, &y).map_err(|e| e.to_string())?;
                            for z in self.basis(d3) {
                                let left = self.multiply(&xy, &z).map_err(|e| e.to_string())?;
                                let yz = self.multiply(&y, &z).map_err(|e| e.to_string())?;
                                let right = self.multiply(&x, &yz).map_err(|e| e.to_string())?;
                                if left != right {
                                    return Err(format!(
                                        "({})({})({}) is not associative",
                                        self.format_element(&x),
                                        self.format_element(&y),
                                        self.format_element(&z)
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `Ok(())` or the first basis pair violating `xy = (-1)^{|x||y|} yx`.
    pub fn check_graded_commutativity(&self) -> Result<(), String> {
        for d1 in 0..=self.top {
            for d2 in 0..=(self.top - d1) {
                for (i, x) in self.basis(d1).iter().enumerate() {
                    for (j, y) in self.basis(d2).iter().enumerate() {
                        let xy = self.basis_product(d1, i, d2, j);
                        let yx = self.basis_product(d2, j, d1, i);
                        let ok = if (d1 * d2) % 2 == 1 {
                            xy.iter().zip(yx).all(|(a, b)| *a == -b.clone())
                        } else {
                            xy == yx
                        };
                        if !ok {
                            return Err(format!(
                                "{} and {} do not graded-commute",
                                self.format_element(x),
                                self.format_element(y)
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `Ok(())` when the stored unit is a two-sided identity on every basis element.
    pub fn check_unit(&self) -> Result<(), String> {
        let one = self.unit();
        for d in 0..=self.top {
            for b in self.basis(d) {
                let l = self.multiply(&one, &b).map_err(|e| e.to_string())?;
                let r = self.multiply(&b, &one).map_err(|e| e.to_string())?;
                if l != b || r != b {
                    return Err(format!("unit fails on {}", self.format_element(&b)));
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn format_combination(coords: &[Q], labels: &[String]) -> String {
    let mut support = coords.iter().zip(labels).filter(|(c, _)| !c.is_zero());
    if let (Some((c, label)), None) = (support.next(), support.next()) {
        if c.is_one() {
            return label.clone();
        }
    }
    let mut out = String::new();
    for (c, label) in coords.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let negative = c < &Q::zero();
        let abs = if negative { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let label = if label.contains(' ') {
            format!("[{label}]")
        } else {
            label.clone()
        };
        if abs.is_one() {
            out.push_str(&label);
        } else {
            out.push_str(&format!("{abs}*{label}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Componentwise product algebra `a ⊕ b`; basis of `a` first, then `b`.
pub fn direct_sum(a: &GradedAlgebra, b: &GradedAlgebra) -> Result<GradedAlgebra, GradedError> {
    if a.top_degree() != b.top_degree() {
        return Err(GradedError::TopDegreeMismatch {
            left: a.top_degree(),
            right: b.top_degree(),
        });
    }
    let top = a.top_degree();
    let labels = (0..=top)
        .map(|d| {
            a.labels(d)
                .iter()
                .map(|l| format!("({l},0)"))
                .chain(b.labels(d).iter().map(|l| format!("(0,{l})")))
                .collect()
        })
        .collect();
    let mut unit = a.unit().into_coords();
    unit.extend(b.unit().into_coords());
    GradedAlgebra::from_products::<GradedError, _>(top, labels, unit, |d1, i, d2, j| {
        let (na1, na2, na) = (a.dim(d1), a.dim(d2), a.dim(d1 + d2));
        let mut v = zero_vector(na + b.dim(d1 + d2));
        match (i < na1, j < na2) {
            (true, true) => v[..na].clone_from_slice(a.basis_product(d1, i, d2, j)),
            (false, false) => v[na..].clone_from_slice(b.basis_product(d1, i - na1, d2, j - na2)),
            _ => {}
        }
        Ok(v)
    })
}

/// The element `(x, y)` of `a ⊕ b`.
pub fn direct_sum_pair(
    a: &GradedAlgebra,
    b: &GradedAlgebra,
    x: &Element,
    y: &Element,
) -> Result<Element, GradedError> {
    a.check_element(x)?;
    b.check_element(y)?;
    if x.degree() != y.degree() {
        return Err(GradedError::DegreeMismatch {
            context: "pair components".into(),
            expected: x.degree(),
            found: y.degree(),
        });
    }
    let mut coords = x.coords().to_vec();
    coords.extend(y.coords().iter().cloned());
    Ok(Element::new(x.degree(), coords))
}
