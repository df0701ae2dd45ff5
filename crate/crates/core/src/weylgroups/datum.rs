use num_rational::Ratio;

use super::imat::IntMatrix;
use super::WeylError;

/// Cartan data plus the lattice action `M` of the exceptional isogeny, with `M² = δ·I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    kind: String,
    cartan: IntMatrix,
    twist_matrix: IntMatrix,
    twist_scale: i64,
}

fn standard_cartan(kind: &str) -> Option<Vec<Vec<i64>>> {
    // index order: short roots of B₂/G₂ first; F₄ in Bourbaki order (a₁, a₂ long)
    match kind {
        "B2" => Some(vec![vec![2, -1], vec![-2, 2]]),
        "G2" => Some(vec![vec![2, -1], vec![-3, 2]]),
        "F4" => Some(vec![vec![2, -1, 0, 0], vec![-1, 2, -2, 0], vec![0, -1, 2, -1], vec![0, 0, -1, 2]]),
        _ => None,
    }
}

impl RootDatum {
    pub fn new(
        kind: &str,
        cartan: Vec<Vec<i64>>,
        twist_matrix: Vec<Vec<i64>>,
        twist_scale: i64,
    ) -> Result<Self, WeylError> {
        let n = cartan.len();
        let square = |m: &[Vec<i64>]| m.len() == n && m.iter().all(|r| r.len() == n);
        if n == 0 || !square(&cartan) || !square(&twist_matrix) {
            return Err(WeylError::InvalidDatum("cartan and twist matrices must be square of equal rank".into()));
        }
        match standard_cartan(kind) {
            Some(expected) if expected != cartan => {
                return Err(WeylError::InvalidDatum(format!("cartan matrix is not of type {kind}")));
            }
            None => return Err(WeylError::InvalidDatum(format!("unsupported type {kind:?}"))),
            _ => {}
        }
        if !matches!(twist_scale, 1..=3) {
            return Err(WeylError::InvalidDatum(format!("twist scale {twist_scale} not in 1..=3")));
        }
        let datum = RootDatum {
            kind: kind.to_string(),
            cartan: IntMatrix::from_rows(&cartan),
            twist_matrix: IntMatrix::from_rows(&twist_matrix),
            twist_scale,
        };
        if datum.twist_matrix.mul(&datum.twist_matrix) != IntMatrix::identity(n).scale(twist_scale) {
            return Err(WeylError::InvalidDatum("twist matrix does not square to the scale".into()));
        }
        let gens = datum.simple_reflections();
        for s in &gens {
            match datum.conjugate_by_twist(s) {
                Some(t) if gens.contains(&t) => {}
                _ => return Err(WeylError::InvalidDatum("twist does not permute the simple reflections".into())),
            }
        }
        Ok(datum)
    }

    pub fn b2() -> Self {
        Self::new("B2", standard_cartan("B2").unwrap(), vec![vec![0, 2], vec![1, 0]], 2).expect("valid B2 datum")
    }

    pub fn g2() -> Self {
        Self::new("G2", standard_cartan("G2").unwrap(), vec![vec![0, 3], vec![1, 0]], 3).expect("valid G2 datum")
    }

    /// a₃ ↦ a₂, a₄ ↦ a₁, a₁ ↦ 2a₄, a₂ ↦ 2a₃.
    pub fn f4() -> Self {
        let m = vec![vec![0, 0, 0, 1], vec![0, 0, 1, 0], vec![0, 2, 0, 0], vec![2, 0, 0, 0]];
        Self::new("F4", standard_cartan("F4").unwrap(), m, 2).expect("valid F4 datum")
    }

    pub fn kind(&self) -> &str {
        &self.kind
    }

    pub fn rank(&self) -> usize {
        self.cartan.dim()
    }

    pub fn cartan(&self) -> &IntMatrix {
        &self.cartan
    }

    pub fn twist_matrix(&self) -> &IntMatrix {
        &self.twist_matrix
    }

    pub fn twist_scale(&self) -> i64 {
        self.twist_scale
    }

    /// Surd of the coefficient field, `√δ`.
    pub fn surd(&self) -> u32 {
        self.twist_scale as u32
    }

    /// `s_i(a_j) = a_j − C[j][i]·a_i`.
    pub fn simple_reflections(&self) -> Vec<IntMatrix> {
        let n = self.rank();
        (0..n)
            .map(|i| {
                let rows: Vec<Vec<i64>> = (0..n)
                    .map(|k| (0..n).map(|j| i64::from(k == j) - if k == i { self.cartan.get(j, i) } else { 0 }).collect())
                    .collect();
                IntMatrix::from_rows(&rows)
            })
            .collect()
    }

    /// `M·w·M⁻¹ = M·w·M / δ`, or `None` if not integral.
    pub fn conjugate_by_twist(&self, w: &IntMatrix) -> Option<IntMatrix> {
        self.twist_matrix.mul(w).mul(&self.twist_matrix).div_exact(self.twist_scale)
    }

    /// Gram matrix `(a_i, a_j)` of a W-invariant form, scaled to integers.
    pub fn invariant_form(&self) -> IntMatrix {
        let n = self.rank();
        // (a_j,a_j) = (a_i,a_i)·C[j][i]/C[i][j] along edges of the connected diagram
        let mut len: Vec<Option<Ratio<i64>>> = vec![None; n];
        len[0] = Some(Ratio::from_integer(1));
        let mut changed = true;
        while changed {
            changed = false;
            for i in 0..n {
                for j in 0..n {
                    let (cji, cij) = (self.cartan.get(j, i), self.cartan.get(i, j));
                    if i != j && cij != 0 && len[j].is_none() {
                        if let Some(li) = len[i] {
                            len[j] = Some(li * Ratio::new(cji, cij));
                            changed = true;
                        }
                    }
                }
            }
        }
        let len: Vec<Ratio<i64>> = len.into_iter().map(|l| l.expect("connected diagram")).collect();
        let denom_lcm = len.iter().fold(1i64, |acc, l| num_integer::lcm(acc, *l.denom()));
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let v = Ratio::from_integer(self.cartan.get(j, i)) * len[i] / 2 * denom_lcm * 2;
                        v.to_integer()
                    })
                    .collect()
            })
            .collect();
        IntMatrix::from_rows(&rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_twist() {
        let bad = RootDatum::new("B2", vec![vec![2, -1], vec![-2, 2]], vec![vec![0, 1], vec![1, 0]], 2);
        assert!(matches!(bad, Err(WeylError::InvalidDatum(_))));
    }

    #[test]
    fn rejects_wrong_cartan() {
        let bad = RootDatum::new("B2", vec![vec![2, -1], vec![-1, 2]], vec![vec![0, 2], vec![1, 0]], 2);
        assert!(matches!(bad, Err(WeylError::InvalidDatum(_))));
    }

    #[test]
    fn builtin_data_validate() {
        for d in [RootDatum::b2(), RootDatum::g2(), RootDatum::f4()] {
            let m = d.twist_matrix();
            assert_eq!(m.mul(m), IntMatrix::identity(d.rank()).scale(d.twist_scale()));
        }
    }

    #[test]
    fn invariant_form_is_symmetric() {
        for d in [RootDatum::b2(), RootDatum::g2(), RootDatum::f4()] {
            let b = d.invariant_form();
            assert_eq!(b.transpose(), b);
        }
        assert_eq!(RootDatum::b2().invariant_form().rows(), vec![vec![2, -2], vec![-2, 4]]);
    }
}
