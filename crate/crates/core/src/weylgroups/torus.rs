use crate::exactfield::{Poly, QuadRational};

use super::datum::RootDatum;
use super::imat::IntMatrix;
use super::{FClass, WeylError};

/// `±det((q/√δ)·M·w − I)`, sign chosen so the leading coefficient is positive.
pub fn torus_order(datum: &RootDatum, w: &IntMatrix) -> Poly {
    let d = datum.surd();
    let inv_root = QuadRational::sqrt_d(d).inv().expect("nonzero surd");
    let mw = datum.twist_matrix().mul(w);
    let n = datum.rank();
    let entries: Vec<Poly> = (0..n * n)
        .map(|k| {
            let (i, j) = (k / n, k % n);
            let c = inv_root.checked_mul(&QuadRational::from_integer(mw.get(i, j), d)).expect("same field");
            let linear = Poly::monomial(c, 1);
            if i == j {
                linear.checked_sub(&Poly::one(d)).expect("same field")
            } else {
                linear
            }
        })
        .collect();
    let det = poly_det(&entries, n, d);
    match det.leading().map(QuadRational::signum) {
        Some(s) if s < 0 => -det,
        _ => det,
    }
}

fn poly_det(m: &[Poly], n: usize, d: u32) -> Poly {
    if n == 1 {
        return m[0].clone();
    }
    let mut total = Poly::zero(d);
    for c in 0..n {
        if m[c].is_zero() {
            continue;
        }
        let minor: Vec<Poly> =
            (1..n).flat_map(|r| (0..n).filter(move |&k| k != c).map(move |k| m[r * n + k].clone())).collect();
        let term = &m[c] * &poly_det(&minor, n - 1, d);
        total = if c % 2 == 0 { &total + &term } else { &total - &term };
    }
    total
}

/// Assigns each F-class the unique column whose listed torus order equals its own.
///
/// Returns `assignment[class] = column` and records it in `column_index`.
pub fn match_fclasses_to_columns(classes: &mut [FClass], column_orders: &[Poly]) -> Result<Vec<usize>, WeylError> {
    if classes.len() != column_orders.len() {
        return Err(WeylError::Matching(format!(
            "{} F-classes against {} columns",
            classes.len(),
            column_orders.len()
        )));
    }
    for (i, a) in column_orders.iter().enumerate() {
        if column_orders[..i].contains(a) {
            return Err(WeylError::Matching(format!("duplicate column torus order {a}")));
        }
    }
    let mut taken = vec![false; column_orders.len()];
    let mut assignment = Vec::with_capacity(classes.len());
    for class in classes.iter_mut() {
        let col = column_orders
            .iter()
            .position(|t| t == &class.torus_order)
            .ok_or_else(|| WeylError::Matching(format!("no column has torus order {}", class.torus_order)))?;
        if taken[col] {
            return Err(WeylError::Matching(format!("two F-classes share torus order {}", class.torus_order)));
        }
        taken[col] = true;
        class.column_index = Some(col);
        assignment.push(col);
    }
    Ok(assignment)
}
