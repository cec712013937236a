//! Dense matrices over `Q(zeta_n)` with exact row reduction.
//!
//! Rational matrices are the conductor-1 case. All rank, kernel and solve
//! results are exact; there is no pivot tolerance.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::CycloNumber;
use crate::{Error, Result};

pub type Vector = Vec<CycloNumber>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    conductor: u32,
    data: Vec<CycloNumber>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, conductor: u32) -> Self {
        Self { rows, cols, conductor, data: vec![CycloNumber::zero(conductor); rows * cols] }
    }

    pub fn identity(n: usize, conductor: u32) -> Self {
        let mut m = Self::zeros(n, n, conductor);
        for i in 0..n {
            m.set(i, i, CycloNumber::one(conductor));
        }
        m
    }

    pub fn from_rows(conductor: u32, rows: Vec<Vec<CycloNumber>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(n_rows * n_cols);
        for row in rows {
            if row.len() != n_cols {
                return Err(Error::DimensionMismatch("ragged matrix rows".into()));
            }
            for x in row {
                if x.conductor() != conductor {
                    return Err(Error::ConductorMismatch(conductor, x.conductor()));
                }
                data.push(x);
            }
        }
        Ok(Self { rows: n_rows, cols: n_cols, conductor, data })
    }

    pub fn from_int_rows<R: AsRef<[i64]>>(conductor: u32, rows: &[R]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| CycloNumber::from_int(conductor, x)).collect())
            .collect();
        Self::from_rows(conductor, rows).expect("rectangular integer rows")
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(conductor: u32, rows: usize, columns: &[Vector]) -> Self {
        let mut m = Self::zeros(rows, columns.len(), conductor);
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &CycloNumber {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: CycloNumber) {
        debug_assert_eq!(x.conductor(), self.conductor);
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[CycloNumber] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn entries(&self) -> &[CycloNumber] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycloNumber::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, self.conductor);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn trace(&self) -> CycloNumber {
        (0..self.rows.min(self.cols))
            .fold(CycloNumber::zero(self.conductor), |acc, i| &acc + self.get(i, i))
    }

    pub fn scale(&self, k: &CycloNumber) -> Self {
        Self { data: self.data.iter().map(|x| x * k).collect(), ..self.clone() }
    }

    pub fn apply(&self, v: &[CycloNumber]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(CycloNumber::zero(self.conductor), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    pub fn pow(&self, k: u32) -> Self {
        assert!(self.is_square());
        let mut result = Self::identity(self.rows, self.conductor);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        result
    }

    pub fn promote(&self, to: u32) -> Result<Self> {
        let data = self.data.iter().map(|x| x.promote(to)).collect::<Result<_>>()?;
        Ok(Self { rows: self.rows, cols: self.cols, conductor: to, data })
    }

    pub fn hstack(&self, other: &Matrix) -> Self {
        assert_eq!(self.rows, other.rows);
        let mut m = Self::zeros(self.rows, self.cols + other.cols, self.conductor);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                m.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }

    pub fn vstack(&self, other: &Matrix) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Self { rows: self.rows + other.rows, cols: self.cols, conductor: self.conductor, data }
    }

    /// Block diagonal sum.
    pub fn direct_sum(&self, other: &Matrix) -> Self {
        let mut m = Self::zeros(self.rows + other.rows, self.cols + other.cols, self.conductor);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }

    /// Reduced row echelon form and the pivot column of each nonzero row.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inverse().expect("pivot is nonzero");
            for j in c..m.cols {
                let x = m.get(r, j) * &inv;
                m.set(r, j, x);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    if m.get(r, j).is_zero() {
                        continue;
                    }
                    let x = m.get(i, j) - &(&factor * m.get(r, j));
                    m.set(i, j, x);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space, one basis vector per column.
    pub fn kernel(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(self.cols, free.len(), self.conductor);
        for (k, &f) in free.iter().enumerate() {
            basis.set(f, k, CycloNumber::one(self.conductor));
            for (row, &p) in pivots.iter().enumerate() {
                basis.set(p, k, -r.get(row, f));
            }
        }
        basis
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let (r, pivots) = self.hstack(&Matrix::identity(n, self.conductor)).rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::DivisionByZero);
        }
        let mut inv = Matrix::zeros(n, n, self.conductor);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Ok(inv)
    }

    /// Coordinates `x` with `self * x = v`, when a solution exists and the
    /// columns of `self` are independent.
    pub fn solve(&self, v: &[CycloNumber]) -> Option<Vector> {
        let rhs = Matrix::from_columns(self.conductor, self.rows, &[v.to_vec()]);
        let (r, pivots) = self.hstack(&rhs).rref();
        if pivots.contains(&self.cols) || pivots.len() < self.cols {
            return None;
        }
        Some((0..self.cols).map(|i| r.get(i, self.cols).clone()).collect())
    }

    /// Columns of `self` followed by standard basis vectors, chosen greedily,
    /// forming a basis of the whole space. `self` must have independent columns.
    pub fn extend_to_basis(&self) -> Matrix {
        let mut basis = self.clone();
        let mut rank = basis.rank();
        for i in 0..self.rows {
            if rank == self.rows {
                break;
            }
            let mut e = vec![CycloNumber::zero(self.conductor); self.rows];
            e[i] = CycloNumber::one(self.conductor);
            let candidate = basis.hstack(&Matrix::from_columns(self.conductor, self.rows, &[e]));
            let r = candidate.rank();
            if r > rank {
                basis = candidate;
                rank = r;
            }
        }
        basis
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rational = self.conductor <= 2;
        serde_json::Value::Array(
            (0..self.rows)
                .map(|i| {
                    serde_json::Value::Array(self.row(i).iter().map(|x| scalar_to_json(x, rational)).collect())
                })
                .collect(),
        )
    }

    pub fn from_json(value: &serde_json::Value, conductor: u32) -> Result<Matrix> {
        let rows = value
            .as_array()
            .ok_or_else(|| Error::Parse("matrix must be an array of rows".into()))?;
        let rows = rows
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| Error::Parse("matrix row must be an array".into()))?
                    .iter()
                    .map(|x| CycloNumber::from_json_in(x, conductor))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(conductor, rows)
    }
}

/// Rational scalars as `"p/q"`, others in the cyclotomic object form.
pub fn scalar_to_json(x: &CycloNumber, rational_field: bool) -> serde_json::Value {
    match (rational_field, x.to_rational()) {
        (true, Some(r)) => serde_json::Value::String(crate::arith::rational::format_rational(&r)),
        _ => x.to_json(),
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimensions");
        let mut out = Matrix::zeros(self.rows, rhs.cols, self.conductor);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let x = out.get(i, j) + &(a * b);
                    out.set(i, j, x);
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum dimensions");
        Matrix { data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(), ..self.clone() }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference dimensions");
        Matrix { data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(), ..self.clone() }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix { data: self.data.iter().map(|x| -x).collect(), ..self.clone() }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over Q(z{}) [", self.rows, self.cols, self.conductor)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
