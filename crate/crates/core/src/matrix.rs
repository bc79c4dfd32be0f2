//! Dense exact matrices over a [`Scalar`] field, with the Gaussian
//! elimination kernels (inverse, determinant, solve, nullspace) the rest of
//! the crate relies on. Sizes here are tiny (generator spaces and graded
//! pieces up to the degree bound), so a straightforward fraction-arithmetic
//! implementation is the right tool.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, field: &FieldSpec) -> Matrix {
        Matrix {
            rows,
            cols,
            field: field.clone(),
            data: vec![Scalar::zero(field); rows * cols],
        }
    }

    pub fn identity(n: usize, field: &FieldSpec) -> Matrix {
        let mut m = Matrix::new(n, n, field);
        for i in 0..n {
            m.set(i, i, Scalar::one(field));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>, field: &FieldSpec) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Matrix::new(r, c, field);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return Err(Error::DimensionMismatch(r, c, i, row.len()));
            }
            for (j, v) in row.into_iter().enumerate() {
                if v.field() != *field {
                    return Err(Error::FieldMismatch(v.field(), field.clone()));
                }
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.rows, &self.field)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::new(self.cols, self.rows, &self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.clone(), other.field.clone()));
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(self.rows, self.cols, other.rows, other.cols));
        }
        let mut out = Matrix::new(self.rows, other.cols, &self.field);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).add(&a.mul(b)?)?;
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Result<Matrix> {
        let mut out = self.clone();
        for v in &mut out.data {
            *v = v.mul(c)?;
        }
        Ok(out)
    }

    pub fn pow(&self, e: i64) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(self.rows, self.cols, self.cols, self.rows));
        }
        if e < 0 {
            return self.inverse()?.pow(-e);
        }
        let mut acc = Matrix::identity(self.rows, &self.field);
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Row-reduces in place; returns pivot columns.
    fn rref(&mut self) -> Result<Vec<usize>> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            for j in 0..self.cols {
                self.data.swap(row * self.cols + j, pr * self.cols + j);
            }
            let inv = self.get(row, col).inv()?;
            for j in 0..self.cols {
                let v = self.get(row, j).mul(&inv)?;
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r != row && !self.get(r, col).is_zero() {
                    let factor = self.get(r, col).clone();
                    for j in 0..self.cols {
                        let v = self.get(r, j).sub(&factor.mul(self.get(row, j))?)?;
                        self.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        Ok(pivots)
    }

    pub fn rank(&self) -> Result<usize> {
        let mut m = self.clone();
        Ok(m.rref()?.len())
    }

    pub fn det(&self) -> Result<Scalar> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(self.rows, self.cols, self.cols, self.rows));
        }
        let mut m = self.clone();
        let mut det = Scalar::one(&self.field);
        for col in 0..m.cols {
            let Some(pr) = (col..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                return Ok(Scalar::zero(&self.field));
            };
            if pr != col {
                for j in 0..m.cols {
                    m.data.swap(col * m.cols + j, pr * m.cols + j);
                }
                det = det.neg();
            }
            det = det.mul(m.get(col, col))?;
            let inv = m.get(col, col).inv()?;
            for r in col + 1..m.rows {
                if !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).mul(&inv)?;
                    for j in col..m.cols {
                        let v = m.get(r, j).sub(&factor.mul(m.get(col, j))?)?;
                        m.set(r, j, v);
                    }
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(self.rows, self.cols, self.cols, self.rows));
        }
        let n = self.rows;
        let mut aug = Matrix::new(n, 2 * n, &self.field);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Scalar::one(&self.field));
        }
        let pivots = aug.rref()?;
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(Error::SingularMatrix);
        }
        let mut out = Matrix::new(n, n, &self.field);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Ok(out)
    }

    /// Basis of the right nullspace { v : M v = 0 }, one column vector per
    /// free column of the reduced form, in column order.
    pub fn nullspace(&self) -> Result<Vec<Vec<Scalar>>> {
        let mut m = self.clone();
        let pivots = m.rref()?;
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut vec = vec![Scalar::zero(&self.field); self.cols];
            vec[free] = Scalar::one(&self.field);
            for (col, pr) in pivot_of_col.iter().enumerate() {
                if let Some(r) = pr {
                    vec[col] = m.get(*r, free).neg();
                }
            }
            basis.push(vec);
        }
        Ok(basis)
    }

    /// Solves M x = b; Ok(None) when inconsistent. With multiple solutions,
    /// free variables are set to zero.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(self.rows, self.cols, b.len(), 1));
        }
        let mut aug = Matrix::new(self.rows, self.cols + 1, &self.field);
        for (i, rhs) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, rhs.clone());
        }
        let pivots = aug.rref()?;
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Scalar::zero(&self.field); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.get(r, self.cols).clone();
        }
        Ok(Some(x))
    }

    pub fn embed(&self, target: &FieldSpec) -> Result<Matrix> {
        let mut out = Matrix::new(self.rows, self.cols, target);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).embed(target)?);
            }
        }
        Ok(out)
    }

    /// Canonical text rendering: rows of scalar strings.
    pub fn render(&self) -> String {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let cells: Vec<String> = (0..self.cols).map(|j| self.get(i, j).render()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qmat(rows: Vec<Vec<i64>>) -> Matrix {
        let field = FieldSpec::Rationals;
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(|v| Scalar::from_integer(v, &field)).collect())
                .collect(),
            &field,
        )
        .unwrap()
    }

    #[test]
    fn inverse_round_trip() {
        let m = qmat(vec![vec![2, 1], vec![7, 4]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
    }

    #[test]
    fn singular_matrix_rejected() {
        let m = qmat(vec![vec![1, 2], vec![2, 4]]);
        assert!(matches!(m.inverse(), Err(Error::SingularMatrix)));
        assert!(m.det().unwrap().is_zero());
    }

    #[test]
    fn det_matches_cofactor_expansion() {
        let m = qmat(vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]);
        assert_eq!(m.det().unwrap(), Scalar::from_integer(-3, &FieldSpec::Rationals));
    }

    #[test]
    fn nullspace_vectors_annihilate() {
        let m = qmat(vec![vec![1, 2, 3], vec![2, 4, 6]]);
        let ns = m.nullspace().unwrap();
        assert_eq!(ns.len(), 2);
        for v in ns {
            for i in 0..m.rows() {
                let mut acc = Scalar::zero(&FieldSpec::Rationals);
                for (j, vj) in v.iter().enumerate() {
                    acc = acc.add(&m.get(i, j).mul(vj).unwrap()).unwrap();
                }
                assert!(acc.is_zero());
            }
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = qmat(vec![vec![1, 1], vec![1, -1]]);
        let b = vec![
            Scalar::from_integer(3, &FieldSpec::Rationals),
            Scalar::from_integer(1, &FieldSpec::Rationals),
        ];
        let x = m.solve(&b).unwrap().unwrap();
        assert_eq!(x[0], Scalar::from_integer(2, &FieldSpec::Rationals));
        assert_eq!(x[1], Scalar::from_integer(1, &FieldSpec::Rationals));

        let sing = qmat(vec![vec![1, 2], vec![2, 4]]);
        let bad = vec![
            Scalar::from_integer(1, &FieldSpec::Rationals),
            Scalar::from_integer(3, &FieldSpec::Rationals),
        ];
        assert!(sing.solve(&bad).unwrap().is_none());
    }

    #[test]
    fn power_with_negative_exponent() {
        let m = qmat(vec![vec![2, 0], vec![0, 3]]);
        let p = m.pow(-2).unwrap();
        assert_eq!(
            *p.get(0, 0),
            Scalar::from_ratio(1, 4, &FieldSpec::Rationals).unwrap()
        );
        assert_eq!(
            *p.get(1, 1),
            Scalar::from_ratio(1, 9, &FieldSpec::Rationals).unwrap()
        );
    }
}
