//! Canonical-form linear algebra over an exact field.
//!
//! A [`Subspace`] is stored by its reduced row echelon basis, which is unique,
//! so subspace equality is structural equality.

use crate::error::{Error, Result};
use crate::scalar::Field;

pub type Vector<F> = Vec<<F as Field>::Elem>;

pub fn zero_vector<F: Field>(field: &F, n: usize) -> Vector<F> {
    vec![field.zero(); n]
}

pub fn unit_vector<F: Field>(field: &F, n: usize, i: usize) -> Vector<F> {
    let mut v = zero_vector(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero_vector<F: Field>(field: &F, v: &[F::Elem]) -> bool {
    v.iter().all(|x| field.is_zero(x))
}

/// Indices of the nonzero coordinates of `v`.
pub fn support<F: Field>(field: &F, v: &[F::Elem]) -> Vec<usize> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !field.is_zero(x))
        .map(|(i, _)| i)
        .collect()
}

/// `dst += c * src`.
fn axpy<F: Field>(field: &F, dst: &mut [F::Elem], c: &F::Elem, src: &[F::Elem]) {
    for (d, s) in dst.iter_mut().zip(src) {
        if !field.is_zero(s) {
            *d = field.add(d, &field.mul(c, s));
        }
    }
}

fn scale<F: Field>(field: &F, v: &mut [F::Elem], c: &F::Elem) {
    for x in v.iter_mut() {
        *x = field.mul(x, c);
    }
}

/// In-place Gauss-Jordan elimination. Returns the pivot column of each
/// nonzero row; zero rows are dropped.
fn gauss_jordan<F: Field>(field: &F, rows: &mut Vec<Vec<F::Elem>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| !field.is_zero(&rows[i][col])) else {
            continue;
        };
        rows.swap(r, found);
        let inv = field.inv(&rows[r][col]).expect("pivot is nonzero");
        scale(field, &mut rows[r], &inv);
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !field.is_zero(&row[col]) {
                let c = field.neg(&row[col]);
                axpy(field, row, &c, &pivot_row);
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// A linear subspace of `K^n` in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<F: Field> {
    field: F,
    ambient: usize,
    rows: Vec<Vector<F>>,
    pivots: Vec<usize>,
}

/// Span of `vectors` in `K^ambient`.
pub fn rref<F: Field>(field: &F, ambient: usize, vectors: &[Vector<F>]) -> Result<Subspace<F>> {
    for v in vectors {
        if v.len() != ambient {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                found: v.len(),
            });
        }
    }
    let mut rows = vectors.to_vec();
    let pivots = gauss_jordan(field, &mut rows, ambient);
    Ok(Subspace {
        field: field.clone(),
        ambient,
        rows,
        pivots,
    })
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: &F, ambient: usize) -> Self {
        Subspace {
            field: field.clone(),
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &F, ambient: usize) -> Self {
        Self::spanned_by_units(field, ambient, 0..ambient)
    }

    /// `span{e_i : i in indices}`; the indices need not be sorted.
    pub fn spanned_by_units(field: &F, ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut idx: Vec<usize> = indices.into_iter().collect();
        idx.sort_unstable();
        idx.dedup();
        let rows = idx.iter().map(|&i| unit_vector(field, ambient, i)).collect();
        Subspace {
            field: field.clone(),
            ambient,
            rows,
            pivots: idx,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    /// The RREF basis rows.
    pub fn basis(&self) -> &[Vector<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Union of the supports of all elements, i.e. of the basis rows.
    pub fn column_support(&self) -> Vec<usize> {
        let cols: Vec<usize> = (0..self.ambient)
            .filter(|&c| self.rows.iter().any(|r| !self.field.is_zero(&r[c])))
            .collect();
        cols
    }

    fn check_len(&self, v: &[F::Elem]) -> Result<()> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: v.len(),
            });
        }
        Ok(())
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    /// Remainder of `v` after elimination against the basis.
    fn residual(&self, v: &[F::Elem]) -> Vector<F> {
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !self.field.is_zero(&r[p]) {
                let c = self.field.neg(&r[p]);
                axpy(&self.field, &mut r, &c, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &[F::Elem]) -> Result<bool> {
        self.check_len(v)?;
        Ok(is_zero_vector(&self.field, &self.residual(v)))
    }

    /// Whether `e_i` lies in the subspace.
    pub fn contains_unit(&self, i: usize) -> bool {
        // In RREF, e_i is in the span iff i is a pivot whose row is exactly e_i.
        match self.pivots.iter().position(|&p| p == i) {
            Some(k) => self.rows[k]
                .iter()
                .enumerate()
                .all(|(c, x)| c == i || self.field.is_zero(x)),
            None => false,
        }
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool> {
        self.check_compatible(other)?;
        if self.dim() > other.dim() {
            return Ok(false);
        }
        Ok(self
            .rows
            .iter()
            .all(|r| is_zero_vector(&self.field, &other.residual(r))))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut vectors = self.rows.clone();
        vectors.extend(other.rows.iter().cloned());
        rref(&self.field, self.ambient, &vectors)
    }

    /// `self + span(vectors)`.
    pub fn extend(&self, vectors: &[Vector<F>]) -> Result<Self> {
        let mut all = self.rows.clone();
        all.extend(vectors.iter().cloned());
        rref(&self.field, self.ambient, &all)
    }

    /// Intersection via the nullspace of `[S | -T]`.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let f = &self.field;
        let k = self.dim();
        let m = other.dim();
        // Rows of the linear system: one equation per ambient coordinate.
        let system: Vec<Vector<F>> = (0..self.ambient)
            .map(|c| {
                self.rows
                    .iter()
                    .map(|r| r[c].clone())
                    .chain(other.rows.iter().map(|r| f.neg(&r[c])))
                    .collect()
            })
            .collect();
        let kernel = nullspace(f, &system, k + m);
        let vectors: Vec<Vector<F>> = kernel
            .iter()
            .map(|coeffs| {
                let mut v = zero_vector(f, self.ambient);
                for (a, row) in coeffs[..k].iter().zip(&self.rows) {
                    axpy(f, &mut v, a, row);
                }
                v
            })
            .collect();
        rref(f, self.ambient, &vectors)
    }

    /// Coordinates of every vector in the subspace, as used by the CLI.
    pub fn format_basis(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|x| self.field.format(x)).collect())
            .collect()
    }
}

/// Basis of `{x in K^ncols : M x = 0}` for `M` given by rows.
pub fn nullspace<F: Field>(field: &F, rows: &[Vector<F>], ncols: usize) -> Vec<Vector<F>> {
    let mut m = rows.to_vec();
    let pivots = gauss_jordan(field, &mut m, ncols);
    let free = (0..ncols).filter(|c| !pivots.contains(c));
    free.map(|fc| {
        let mut x = zero_vector(field, ncols);
        x[fc] = field.one();
        for (row, &p) in m.iter().zip(&pivots) {
            x[p] = field.neg(&row[fc]);
        }
        x
    })
    .collect()
}

/// Rank of the matrix with the given rows.
pub fn rank<F: Field>(field: &F, rows: &[Vector<F>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    gauss_jordan(field, &mut m, ncols).len()
}

/// Determinant by Gaussian elimination with row swaps.
pub fn determinant<F: Field>(field: &F, matrix: &[Vector<F>]) -> F::Elem {
    let n = matrix.len();
    let mut m = matrix.to_vec();
    let mut det = field.one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !field.is_zero(&m[r][col])) else {
            return field.zero();
        };
        if p != col {
            m.swap(p, col);
            det = field.neg(&det);
        }
        det = field.mul(&det, &m[col][col]);
        let inv = field.inv(&m[col][col]).expect("nonzero pivot");
        let pivot_row = m[col].clone();
        for row in m.iter_mut().skip(col + 1) {
            if !field.is_zero(&row[col]) {
                let c = field.neg(&field.mul(&row[col], &inv));
                axpy(field, row, &c, &pivot_row);
            }
        }
    }
    det
}
