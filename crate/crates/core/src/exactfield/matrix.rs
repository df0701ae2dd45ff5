use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::FieldError;

/// Dense row-major matrix of rational functions over one field ℚ(√d).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixRF {
    rows: usize,
    cols: usize,
    d: u32,
    entries: Vec<RatFunc>,
}

impl MatrixRF {
    pub fn zeros(rows: usize, cols: usize, d: u32) -> Self {
        MatrixRF { rows, cols, d, entries: vec![RatFunc::zero(d); rows * cols] }
    }

    pub fn identity(n: usize, d: u32) -> Self {
        let mut m = Self::zeros(n, n, d);
        for i in 0..n {
            m.set(i, i, RatFunc::one(d));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<RatFunc>>, d: u32) -> Result<Self, FieldError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(FieldError::DimensionMismatch(format!(
                    "ragged rows: expected {ncols} columns, found {}",
                    row.len()
                )));
            }
            for e in row {
                if e.d() != d {
                    return Err(FieldError::MismatchedSurd { left: d, right: e.d() });
                }
                entries.push(e);
            }
        }
        Ok(MatrixRF { rows: nrows, cols: ncols, d, entries })
    }

    pub fn from_poly_rows(rows: Vec<Vec<Poly>>, d: u32) -> Result<Self, FieldError> {
        Self::from_rows(rows.into_iter().map(|r| r.into_iter().map(RatFunc::from_poly).collect()).collect(), d)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFunc {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: RatFunc) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[RatFunc] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, self.d);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, FieldError> {
        if self.cols != other.rows {
            return Err(FieldError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols, self.d);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = RatFunc::zero(self.d);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.checked_add(&a.checked_mul(b)?)?;
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    fn zip_with(
        &self,
        other: &Self,
        f: impl Fn(&RatFunc, &RatFunc) -> Result<RatFunc, FieldError>,
    ) -> Result<Self, FieldError> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(FieldError::DimensionMismatch(format!(
                "{}x{} against {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect::<Result<_, _>>()?;
        Ok(MatrixRF { rows: self.rows, cols: self.cols, d: self.d, entries })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, FieldError> {
        self.zip_with(other, RatFunc::checked_add)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.zip_with(other, RatFunc::checked_sub)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RatFunc::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Entries at the given row and column indices.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len(), self.d);
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.set(a, b, self.get(i, j).clone());
            }
        }
        m
    }

    /// Writes `block` at the given row and column indices.
    pub fn place(&mut self, rows: &[usize], cols: &[usize], block: &Self) {
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                self.set(i, j, block.get(a, b).clone());
            }
        }
    }

    /// Gauss-Jordan inverse over the rational-function field.
    pub fn inverse(&self) -> Result<Self, FieldError> {
        if !self.is_square() {
            return Err(FieldError::DimensionMismatch(format!("cannot invert {}x{}", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n, self.d);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero()).ok_or(FieldError::Singular)?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = a.get(col, col).inv()?;
            for j in 0..n {
                a.set(col, j, a.get(col, j).checked_mul(&p)?);
                inv.set(col, j, inv.get(col, j).checked_mul(&p)?);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).clone();
                for j in 0..n {
                    let av = a.get(r, j).checked_sub(&factor.checked_mul(a.get(col, j))?)?;
                    a.set(r, j, av);
                    let iv = inv.get(r, j).checked_sub(&factor.checked_mul(inv.get(col, j))?)?;
                    inv.set(r, j, iv);
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, r1: usize, r2: usize) {
        for j in 0..self.cols {
            self.entries.swap(r1 * self.cols + j, r2 * self.cols + j);
        }
    }

    /// All entries as polynomials, or the first offending position.
    pub fn to_polys(&self) -> Result<Vec<Vec<Poly>>, (usize, usize)> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).is_polynomial().ok_or((i, j))).collect())
            .collect()
    }

    /// Simultaneous row/column permutation `out[i][j] = self[perm[i]][perm[j]]`.
    pub fn permute_symmetric(&self, perm: &[usize]) -> Self {
        self.submatrix(perm, perm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::parse_poly;

    fn rf(s: &str) -> RatFunc {
        RatFunc::from_poly(parse_poly(s, 2).unwrap())
    }

    #[test]
    fn inverse_of_two_by_two() {
        let m = MatrixRF::from_rows(vec![vec![rf("q"), rf("1")], vec![rf("1"), rf("q")]], 2).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.checked_mul(&inv).unwrap(), MatrixRF::identity(2, 2));
    }

    #[test]
    fn singular_matrix() {
        let m = MatrixRF::from_rows(vec![vec![rf("q"), rf("q^2")], vec![rf("1"), rf("q")]], 2).unwrap();
        assert_eq!(m.inverse(), Err(FieldError::Singular));
    }

    #[test]
    fn product_dimension_mismatch() {
        let a = MatrixRF::zeros(2, 3, 2);
        assert!(matches!(a.checked_mul(&a), Err(FieldError::DimensionMismatch(_))));
    }

    #[test]
    fn symmetric_detection() {
        let m = MatrixRF::from_rows(vec![vec![rf("1"), rf("q")], vec![rf("q"), rf("2")]], 2).unwrap();
        assert!(m.is_symmetric());
        assert!(m.transpose().checked_sub(&m).unwrap().is_zero());
    }
}
