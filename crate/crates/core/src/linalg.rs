//! Dense matrices over the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn format_q(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn parse_q(s: &str) -> Result<Q> {
    let bad = || Error::Parse {
        token: s.to_string(),
        reason: "expected a rational p/q".into(),
    };
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Q::new(n, d))
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            write!(f, "[{}]", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Q;
    fn index(&self, (r, c): (usize, usize)) -> &Q {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Q {
        &mut self.data[r * self.cols + c]
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::Domain("ragged matrix rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, cols: &[Vec<Q>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (c, v) in cols.iter().enumerate() {
            for (r, x) in v.iter().enumerate() {
                m[(r, c)] = x.clone();
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

    pub fn row(&self, r: usize) -> Vec<Q> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn column(&self, c: usize) -> Vec<Q> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Q>> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "shape mismatch in product");
        let mut out = Self::zeros(self.rows, o.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let x = &self[(r, k)];
                if x.is_zero() {
                    continue;
                }
                for c in 0..o.cols {
                    let y = &o[(k, c)];
                    if !y.is_zero() {
                        out[(r, c)] += x * y;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Q) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn trace(&self) -> Q {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    m.data.swap(p * m.cols + c, row * m.cols + c);
                }
            }
            let inv = m[(row, col)].recip();
            for c in col..m.cols {
                m[(row, c)] = &m[(row, c)] * &inv;
            }
            for r in 0..m.rows {
                if r == row || m[(r, col)].is_zero() {
                    continue;
                }
                let f = m[(r, col)].clone();
                for c in col..m.cols {
                    let v = &m[(row, c)] * &f;
                    if !v.is_zero() {
                        m[(r, c)] -= v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Basis of `{x : self * x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Q::zero(); self.cols];
                v[f] = Q::one();
                for (k, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(k, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Reduced column echelon basis of the column space, as a matrix.
    pub fn column_echelon(&self) -> Matrix {
        let (r, pivots) = self.transpose().rref();
        let rows: Vec<Vec<Q>> = (0..pivots.len()).map(|k| r.row(k)).collect();
        Matrix::from_columns(self.rows, &rows)
    }

    /// Coordinates of `y` with respect to a reduced column echelon basis,
    /// or `None` if `y` is outside the span.
    pub fn echelon_coordinates(&self, y: &[Q]) -> Option<Vec<Q>> {
        let pivots: Vec<usize> = (0..self.cols)
            .map(|c| (0..self.rows).find(|&r| !self[(r, c)].is_zero()).unwrap())
            .collect();
        let x: Vec<Q> = pivots.iter().map(|&p| y[p].clone()).collect();
        let back = self.mul_vec(&x);
        (back.as_slice() == y).then_some(x)
    }

    pub fn mul_vec(&self, x: &[Q]) -> Vec<Q> {
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .filter(|&c| !x[c].is_zero())
                    .map(|c| &self[(r, c)] * &x[c])
                    .sum()
            })
            .collect()
    }

    pub fn max_abs_entry(&self) -> Q {
        self.data.iter().map(|x| x.abs()).max().unwrap_or_else(Q::zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn rref_and_rank() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let (r, p) = a.rref();
        assert_eq!(p, vec![0, 1]);
        assert_eq!(r, m(&[&[1, 0, 1], &[0, 1, 1], &[0, 0, 0]]));
    }

    #[test]
    fn nullspace_example() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let ns = a.nullspace();
        assert_eq!(ns, vec![vec![q(-1), q(-1), q(1)]]);
        assert!(a.mul_vec(&ns[0]).iter().all(Zero::is_zero));
    }

    #[test]
    fn column_echelon_coordinates() {
        let a = m(&[&[1, 1], &[1, 2], &[1, 3]]);
        let e = a.column_echelon();
        assert_eq!(e, m(&[&[1, 0], &[0, 1], &[-1, 2]]));
        assert_eq!(e.echelon_coordinates(&[q(2), q(3), q(4)]), Some(vec![q(2), q(3)]));
        assert_eq!(e.echelon_coordinates(&[q(1), q(0), q(0)]), None);
    }

    #[test]
    fn rational_strings() {
        let x = Q::new(BigInt::from(-3), BigInt::from(6));
        assert_eq!(format_q(&x), "-1/2");
        assert_eq!(parse_q("-1/2").unwrap(), x);
        assert_eq!(parse_q("4").unwrap(), q(4));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("a").is_err());
    }

    fn arb_matrix() -> impl Strategy<Value = Matrix> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            prop::collection::vec(-3i64..4, r * c).prop_map(move |v| {
                Matrix::from_rows(v.chunks(c).map(|row| row.iter().map(|&x| q(x)).collect()).collect())
                    .unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(a in arb_matrix()) {
            let ns = a.nullspace();
            prop_assert_eq!(a.rank() + ns.len(), a.cols());
            for v in &ns {
                prop_assert!(a.mul_vec(v).iter().all(Zero::is_zero));
            }
            prop_assert_eq!(a.rank(), a.transpose().rank());
        }

        #[test]
        fn echelon_spans_columns(a in arb_matrix()) {
            let e = a.column_echelon();
            prop_assert_eq!(e.cols(), a.rank());
            for c in 0..a.cols() {
                prop_assert!(e.echelon_coordinates(&a.column(c)).is_some());
            }
        }
    }
}
