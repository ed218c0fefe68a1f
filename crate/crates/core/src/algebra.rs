//! Evolution algebras given by the squares of a natural basis.

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::linalg::{self, is_zero_vector, rref, Subspace, Vector};
use crate::scalar::Field;
use crate::vertex_set::VertexSet;
use crate::MAX_DIM;

/// A finite-dimensional evolution algebra with natural basis `e_1..e_n`.
///
/// `squares[i]` holds the coordinates of `e_i^2`, i.e. column `i` of the
/// structure matrix. Products of distinct basis elements vanish, so the
/// squares determine the whole multiplication.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvolutionAlgebra<F: Field> {
    field: F,
    squares: Vec<Vector<F>>,
    labels: Vec<String>,
}

pub fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

impl<F: Field> EvolutionAlgebra<F> {
    pub fn new(field: F, squares: Vec<Vector<F>>) -> Result<Self> {
        let n = squares.len();
        Self::with_labels(field, squares, default_labels(n))
    }

    pub fn with_labels(field: F, squares: Vec<Vector<F>>, labels: Vec<String>) -> Result<Self> {
        let n = squares.len();
        if n == 0 || n > MAX_DIM {
            return Err(Error::InvalidDimension(n));
        }
        if let Some(bad) = squares.iter().find(|s| s.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        if labels.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: labels.len(),
            });
        }
        Ok(EvolutionAlgebra { field, squares, labels })
    }

    /// Builds an algebra from integer coordinates, mostly for tests.
    pub fn from_integers(field: F, squares: &[&[i64]]) -> Result<Self> {
        let sq = squares
            .iter()
            .map(|col| col.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Self::new(field, sq)
    }

    pub fn dim(&self) -> usize {
        self.squares.len()
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn squares(&self) -> &[Vector<F>] {
        &self.squares
    }

    /// Coordinates of `e_i^2`.
    pub fn square(&self, i: usize) -> &[F::Elem] {
        &self.squares[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// Index of the basis element with the given label.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Row-major structure matrix: entry `(j, i)` is the `j`-th coordinate of `e_i^2`.
    pub fn structure_matrix(&self) -> Vec<Vector<F>> {
        let n = self.dim();
        (0..n)
            .map(|j| (0..n).map(|i| self.squares[i][j].clone()).collect())
            .collect()
    }

    /// Support of `e_i^2` as a vertex set.
    pub fn square_support(&self, i: usize) -> VertexSet {
        linalg::support(&self.field, &self.squares[i]).into_iter().collect()
    }

    /// `xy = sum_i x_i y_i e_i^2`.
    pub fn product(&self, x: &[F::Elem], y: &[F::Elem]) -> Result<Vector<F>> {
        let n = self.dim();
        for v in [x, y] {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
        }
        let f = &self.field;
        let mut out = linalg::zero_vector(f, n);
        for i in 0..n {
            let c = f.mul(&x[i], &y[i]);
            if f.is_zero(&c) {
                continue;
            }
            for (o, s) in out.iter_mut().zip(&self.squares[i]) {
                *o = f.add(o, &f.mul(&c, s));
            }
        }
        Ok(out)
    }

    /// `A^2`, the span of the squares.
    pub fn a_squared(&self) -> Subspace<F> {
        rref(&self.field, self.dim(), &self.squares).expect("squares have length n")
    }

    pub fn is_perfect(&self) -> bool {
        self.a_squared().is_full()
    }

    pub fn determinant(&self) -> F::Elem {
        linalg::determinant(&self.field, &self.structure_matrix())
    }

    pub fn is_degenerate(&self) -> bool {
        !self.annihilator_vertices().is_empty()
    }

    /// `{i : e_i^2 = 0}`, the sinks of the associated graph.
    pub fn annihilator_vertices(&self) -> VertexSet {
        self.squares
            .iter()
            .enumerate()
            .filter(|(_, s)| is_zero_vector(&self.field, s))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn associated_graph(&self) -> Digraph {
        Digraph::of_algebra(self)
    }

    /// `A / I_H` on the basis `{e_j + I_H : j not in H}`.
    ///
    /// Returns `None` when `H` is the whole basis, since the quotient is then
    /// the zero algebra, which has no natural basis to speak of.
    pub fn quotient_algebra(&self, h: VertexSet) -> Result<Option<Self>> {
        self.check_set(h)?;
        if !self.associated_graph().is_hereditary(h) {
            return Err(Error::NotHereditary(h));
        }
        let keep: Vec<usize> = h.complement(self.dim()).iter().collect();
        if keep.is_empty() {
            return Ok(None);
        }
        let squares = keep
            .iter()
            .map(|&j| keep.iter().map(|&k| self.squares[j][k].clone()).collect())
            .collect();
        let labels = keep.iter().map(|&j| self.labels[j].clone()).collect();
        Self::with_labels(self.field.clone(), squares, labels).map(Some)
    }

    pub(crate) fn check_set(&self, h: VertexSet) -> Result<()> {
        if h.bound() > self.dim() {
            return Err(Error::VertexOutOfRange {
                vertex: h.bound() - 1,
                n: self.dim(),
            });
        }
        Ok(())
    }

    pub fn unit(&self, i: usize) -> Vector<F> {
        linalg::unit_vector(&self.field, self.dim(), i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::scalar::{PrimeField, Rationals};

    fn q(v: &[i64]) -> Vector<Rationals> {
        v.iter().map(|&x| Rationals.from_i64(x)).collect()
    }

    #[test]
    fn distinct_basis_elements_annihilate() {
        let a = catalog::six_dim_degenerate(Rationals);
        for i in 0..6 {
            for j in 0..6 {
                let p = a.product(&a.unit(i), &a.unit(j)).unwrap();
                if i == j {
                    assert_eq!(p, a.square(i));
                } else {
                    assert!(is_zero_vector(&Rationals, &p));
                }
            }
        }
    }

    #[test]
    fn products_from_the_tables() {
        let a = catalog::six_dim_degenerate(Rationals);
        assert_eq!(a.product(&a.unit(2), &a.unit(2)).unwrap(), q(&[0, 0, 0, 1, 1, 0]));

        // e1^2 = e1+e2, e2^2 = -e1-e2; (e1+e2)e1 = e1^2.
        let b = EvolutionAlgebra::from_integers(Rationals, &[&[1, 1], &[-1, -1]]).unwrap();
        assert_eq!(b.product(&q(&[1, 1]), &q(&[1, 0])).unwrap(), q(&[1, 1]));
        assert!(b.product(&q(&[1]), &q(&[1, 0])).is_err());
    }

    #[test]
    fn square_span() {
        let a = catalog::six_dim_degenerate(Rationals);
        let a2 = a.a_squared();
        assert_eq!(a2.dim(), 3);
        assert_eq!(
            a2.basis(),
            &[q(&[0, 1, 0, 0, 0, 0]), q(&[0, 0, 0, 1, 1, 0]), q(&[0, 0, 0, 0, 0, 1])]
        );

        let z = EvolutionAlgebra::from_integers(Rationals, &[&[0, 0], &[0, 0]]).unwrap();
        assert!(z.a_squared().is_zero());

        let r = catalog::three_dim_perfect(Rationals);
        assert!(r.a_squared().is_full());
    }

    #[test]
    fn perfect_and_degenerate() {
        let r = catalog::three_dim_perfect(Rationals);
        assert!(r.is_perfect());
        assert!(!r.is_degenerate());
        assert_ne!(r.determinant(), Rationals.zero());

        let a = catalog::six_dim_degenerate(Rationals);
        assert!(!a.is_perfect());
        assert!(a.is_degenerate());
        assert_eq!(a.annihilator_vertices(), [3, 5].into_iter().collect());
        assert_eq!(a.determinant(), Rationals.zero());

        let one = EvolutionAlgebra::from_integers(Rationals, &[&[1]]).unwrap();
        assert!(one.is_perfect());
        assert!(!one.is_degenerate());
    }

    #[test]
    fn quotients() {
        let r = catalog::three_dim_perfect(Rationals);
        let quot = r.quotient_algebra([1, 2].into_iter().collect()).unwrap().unwrap();
        assert_eq!(quot.dim(), 1);
        assert_eq!(quot.square(0), &q(&[1])[..]);
        assert_eq!(quot.labels(), &["e1".to_string()]);

        assert_eq!(r.quotient_algebra(VertexSet::EMPTY).unwrap().unwrap(), r);

        let a = catalog::six_dim_degenerate(Rationals);
        let quot = a.quotient_algebra(VertexSet::singleton(1)).unwrap().unwrap();
        assert_eq!(quot.labels(), &["e1", "e3", "e4", "e5", "e6"]);
        assert_eq!(
            quot.squares(),
            &[
                q(&[0, 0, 0, 0, 0]),
                q(&[0, 0, 1, 1, 0]),
                q(&[0, 0, 0, 0, 0]),
                q(&[0, 0, 0, 0, 1]),
                q(&[0, 0, 0, 0, 0])
            ]
        );

        assert!(matches!(
            a.quotient_algebra(VertexSet::singleton(0)),
            Err(Error::NotHereditary(_))
        ));
        assert_eq!(a.quotient_algebra(VertexSet::full(6)).unwrap(), None);
        assert!(a.quotient_algebra(VertexSet::singleton(6)).is_err());
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            EvolutionAlgebra::<Rationals>::new(Rationals, vec![]),
            Err(Error::InvalidDimension(0))
        );
        assert!(EvolutionAlgebra::from_integers(Rationals, &[&[1, 0], &[1]]).is_err());
        let f2 = PrimeField::new(2).unwrap();
        // 3 = 1 over F2
        let a = EvolutionAlgebra::from_integers(f2, &[&[3]]).unwrap();
        assert_eq!(a.square(0), &[1]);
    }
}
