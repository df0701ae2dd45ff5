use std::fmt;

/// Small square integer matrix, row-major. Columns are images of basis vectors.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    n: usize,
    e: Vec<i64>,
}

impl IntMatrix {
    pub fn identity(n: usize) -> Self {
        let mut e = vec![0; n * n];
        for i in 0..n {
            e[i * n + i] = 1;
        }
        IntMatrix { n, e }
    }

    /// Panics on ragged or non-square input; all callers pass literal data
    /// that has already been shape-checked.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "square matrix expected");
        IntMatrix { n, e: rows.concat() }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.e[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.e.chunks(self.n).map(<[i64]>::to_vec).collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let mut e = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.e[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    e[i * n + j] += a * other.e[k * n + j];
                }
            }
        }
        IntMatrix { n, e }
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut e = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                e[j * n + i] = self.e[i * n + j];
            }
        }
        IntMatrix { n, e }
    }

    pub fn scale(&self, c: i64) -> Self {
        IntMatrix { n: self.n, e: self.e.iter().map(|x| x * c).collect() }
    }

    /// Entrywise exact division, or `None` if some entry is not divisible.
    pub fn div_exact(&self, c: i64) -> Option<Self> {
        let e = self.e.iter().map(|x| (x % c == 0).then(|| x / c)).collect::<Option<_>>()?;
        Some(IntMatrix { n: self.n, e })
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum()).collect()
    }

    /// Laplace expansion; the matrices here have dimension at most 4.
    pub fn det(&self) -> i64 {
        fn rec(m: &[i64], n: usize) -> i64 {
            if n == 1 {
                return m[0];
            }
            let mut total = 0;
            for c in 0..n {
                if m[c] == 0 {
                    continue;
                }
                let minor: Vec<i64> =
                    (1..n).flat_map(|r| (0..n).filter(move |&k| k != c).map(move |k| m[r * n + k])).collect();
                let sign = if c % 2 == 0 { 1 } else { -1 };
                total += sign * m[c] * rec(&minor, n - 1);
            }
            total
        }
        rec(&self.e, self.n)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}
