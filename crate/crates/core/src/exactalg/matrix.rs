//! Dense matrices over scalars, polynomials, or rational functions,
//! with fraction-free (Bareiss) elimination for ranks and determinants.

use super::{AlgError, MPoly, MRatFn, Scalar};
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self, AlgError> {
        let r = rows.len();
        let c = rows.first().map(|row| row.len()).unwrap_or(0);
        if rows.iter().any(|row| row.len() != c) {
            return Err(AlgError::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[E] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Submatrix on the given column subset (all rows).
    pub fn select_cols(&self, cols: &[usize]) -> Matrix<E> {
        let data = (0..self.rows)
            .flat_map(|r| cols.iter().map(move |&c| self.get(r, c).clone()))
            .collect();
        Matrix {
            rows: self.rows,
            cols: cols.len(),
            data,
        }
    }
}

/// Domain with the exact division Bareiss elimination relies on.
pub trait Dom: Clone + PartialEq {
    fn dzero() -> Self;
    fn done() -> Self;
    fn is_dzero(&self) -> bool;
    fn dmul(&self, o: &Self) -> Self;
    fn dsub(&self, o: &Self) -> Self;
    /// Exact quotient; panics when the division is not exact.
    fn ddiv(&self, o: &Self) -> Self;
}

macro_rules! impl_dom_for_field {
    ($t:ty) => {
        impl Dom for $t {
            fn dzero() -> Self {
                <$t as Zero>::zero()
            }
            fn done() -> Self {
                <$t as One>::one()
            }
            fn is_dzero(&self) -> bool {
                Zero::is_zero(self)
            }
            fn dmul(&self, o: &Self) -> Self {
                self.clone() * o.clone()
            }
            fn dsub(&self, o: &Self) -> Self {
                self.clone() - o.clone()
            }
            fn ddiv(&self, o: &Self) -> Self {
                self.clone() / o.clone()
            }
        }
    };
}

impl_dom_for_field!(num::BigRational);
impl_dom_for_field!(f64);

impl<T: Scalar> Dom for MPoly<T> {
    fn dzero() -> Self {
        MPoly::zero(&[])
    }
    fn done() -> Self {
        MPoly::one(&[])
    }
    fn is_dzero(&self) -> bool {
        self.is_zero()
    }
    fn dmul(&self, o: &Self) -> Self {
        let (a, b) = MPoly::align(self, o);
        a.mul(&b)
    }
    fn dsub(&self, o: &Self) -> Self {
        let (a, b) = MPoly::align(self, o);
        a.sub(&b)
    }
    fn ddiv(&self, o: &Self) -> Self {
        let (a, b) = MPoly::align(self, o);
        a.div_exact(&b).expect("Bareiss division is exact")
    }
}

/// Bareiss fraction-free elimination; returns (rank, determinant of the
/// leading square block when the matrix is square, sign-corrected).
fn bareiss<E: Dom>(grid: &mut Vec<Vec<E>>) -> (usize, E) {
    let rows = grid.len();
    let cols = grid.first().map(|r| r.len()).unwrap_or(0);
    let mut prev = E::done();
    let mut rank = 0;
    let mut sign_flip = false;
    let mut col = 0;
    while rank < rows && col < cols {
        // pivot search in this column
        let pivot = (rank..rows).find(|&r| !grid[r][col].is_dzero());
        let pivot = match pivot {
            None => {
                col += 1;
                continue;
            }
            Some(p) => p,
        };
        if pivot != rank {
            grid.swap(pivot, rank);
            sign_flip = !sign_flip;
        }
        let pv = grid[rank][col].clone();
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let t = grid[r][c]
                    .dmul(&pv)
                    .dsub(&grid[r][col].dmul(&grid[rank][c]));
                grid[r][c] = t.ddiv(&prev);
            }
            grid[r][col] = E::dzero();
        }
        prev = pv;
        rank += 1;
        col += 1;
    }
    let det = if rank == rows && rows == cols {
        let d = grid[rows - 1][cols - 1].clone();
        if sign_flip {
            E::dzero().dsub(&d)
        } else {
            d
        }
    } else {
        E::dzero()
    };
    (rank, det)
}

impl<T: Scalar + Dom> Matrix<T> {
    pub fn rank(&self) -> usize {
        let mut grid = self.to_rows();
        bareiss(&mut grid).0
    }

    pub fn det(&self) -> Result<T, AlgError> {
        if self.rows != self.cols {
            return Err(AlgError::DimensionMismatch("det of non-square matrix".into()));
        }
        let mut grid = self.to_rows();
        Ok(bareiss(&mut grid).1)
    }

    /// Reduced row echelon form over the field: the nonzero rows and
    /// their pivot columns.
    pub fn rref(&self) -> (Vec<Vec<T>>, Vec<usize>) {
        let mut grid = self.to_rows();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivot_cols = Vec::new();
        let mut rank = 0;
        for col in 0..cols {
            if rank >= rows {
                break;
            }
            let pivot = match (rank..rows).find(|&r| !grid[r][col].is_zero()) {
                None => continue,
                Some(p) => p,
            };
            grid.swap(pivot, rank);
            let pv = grid[rank][col].clone();
            for c in 0..cols {
                grid[rank][c] = grid[rank][c].clone() / pv.clone();
            }
            for r in 0..rows {
                if r == rank || grid[r][col].is_zero() {
                    continue;
                }
                let f = grid[r][col].clone();
                for c in 0..cols {
                    grid[r][c] = grid[r][c].clone() - f.clone() * grid[rank][c].clone();
                }
            }
            pivot_cols.push(col);
            rank += 1;
        }
        grid.truncate(rank);
        (grid, pivot_cols)
    }

    /// Basis of the right nullspace, via Gauss-Jordan over the field.
    pub fn nullspace(&self) -> Vec<Vec<T>> {
        let mut grid = self.to_rows();
        let rows = self.rows;
        let cols = self.cols;
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut rank = 0;
        for col in 0..cols {
            if rank >= rows {
                break;
            }
            let pivot = (rank..rows).find(|&r| !grid[r][col].is_zero());
            let pivot = match pivot {
                None => continue,
                Some(p) => p,
            };
            grid.swap(pivot, rank);
            let pv = grid[rank][col].clone();
            for c in 0..cols {
                grid[rank][c] = grid[rank][c].clone() / pv.clone();
            }
            for r in 0..rows {
                if r == rank || grid[r][col].is_zero() {
                    continue;
                }
                let f = grid[r][col].clone();
                for c in 0..cols {
                    grid[r][c] = grid[r][c].clone() - f.clone() * grid[rank][c].clone();
                }
            }
            pivots.push((rank, col));
            rank += 1;
        }
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let mut basis = Vec::new();
        for free in 0..cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![T::zero(); cols];
            v[free] = T::one();
            for &(r, c) in &pivots {
                v[c] = -grid[r][free].clone();
            }
            basis.push(v);
        }
        basis
    }
}

/// Rank of a polynomial matrix by fraction-free elimination.
pub fn poly_rank<T: Scalar>(m: &Matrix<MPoly<T>>) -> usize {
    let mut grid = m.to_rows();
    bareiss(&mut grid).0
}

/// Determinant of a square polynomial matrix by fraction-free elimination.
pub fn poly_det<T: Scalar>(m: &Matrix<MPoly<T>>) -> Result<MPoly<T>, AlgError> {
    if m.rows != m.cols {
        return Err(AlgError::DimensionMismatch("det of non-square matrix".into()));
    }
    if m.rows == 0 {
        return Ok(MPoly::one(&[]));
    }
    let mut grid = m.to_rows();
    Ok(bareiss(&mut grid).1)
}

/// Clear denominators row by row (rank is invariant under row scaling).
fn cleared<T: Scalar>(m: &Matrix<MRatFn<T>>) -> (Vec<Vec<MPoly<T>>>, Vec<MPoly<T>>) {
    // common variable list for every entry
    let mut vs: Vec<String> = Vec::new();
    for e in &m.data {
        for v in e.num().vars() {
            if !vs.contains(v) {
                vs.push(v.clone());
            }
        }
    }
    let mut rows = Vec::with_capacity(m.rows);
    let mut factors = Vec::with_capacity(m.rows);
    for r in 0..m.rows {
        let mut lcm = MPoly::one(&vs);
        for c in 0..m.cols {
            let den = m.get(r, c).den().with_vars(&vs).unwrap();
            let g = super::gcd::poly_gcd(&lcm, &den);
            lcm = lcm.mul(&den.div_exact(&g).expect("gcd divides"));
        }
        let row: Vec<MPoly<T>> = (0..m.cols)
            .map(|c| {
                let e = m.get(r, c);
                let num = e.num().with_vars(&vs).unwrap();
                let den = e.den().with_vars(&vs).unwrap();
                num.mul(&lcm.div_exact(&den).expect("den divides row lcm"))
            })
            .collect();
        rows.push(row);
        factors.push(lcm);
    }
    (rows, factors)
}

/// Rank over the rational-function field, by fraction-free elimination
/// after clearing denominators.
pub fn ratfn_rank<T: Scalar>(m: &Matrix<MRatFn<T>>) -> usize {
    let (mut grid, _) = cleared(m);
    bareiss(&mut grid).0
}

/// Determinant over the rational-function field.
pub fn ratfn_det<T: Scalar>(m: &Matrix<MRatFn<T>>) -> Result<MRatFn<T>, AlgError> {
    if m.rows != m.cols {
        return Err(AlgError::DimensionMismatch("det of non-square matrix".into()));
    }
    if m.rows == 0 {
        return Ok(MRatFn::one(&[]));
    }
    let (mut grid, factors) = cleared(m);
    let (_, det) = bareiss(&mut grid);
    let mut den = MPoly::one(&[]);
    for f in factors {
        let (d, f) = MPoly::align(&den, &f);
        den = d.mul(&f);
    }
    let (num, den) = MPoly::align(&det, &den);
    MRatFn::new(num, den)
}
