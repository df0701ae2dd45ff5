//! Case data: Springer pairs, component groups with their F-action, extension
//! choices, the coset character table of `W⋊⟨F⟩` and the split-class layout.
//! Builds the table of Y-functions on split unipotent classes.

mod component;
mod cyclo;

pub use component::{
    component_f_classes, extension_values, Character, ComponentFClass, ComponentGroup, ComponentKind, FAction,
    Selector,
};
pub use cyclo::Cyclo;

use thiserror::Error;

use crate::exactfield::{FieldError, MatrixRF, Poly, QuadRational, RatFunc};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DataError {
    #[error("{0}")]
    Invalid(String),
    #[error("character {character:?} of {group} is not F-stable")]
    NotFStable { group: String, character: String },
    #[error("layout and extension choices disagree: {0}")]
    LayoutMismatch(String),
    #[error("column {column}: class size {value} is not an integer")]
    NonIntegralSize { column: String, value: String },
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// One F-stable pair `(u, φ)` of the generalized Springer correspondence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpringerPair {
    pub class_label: String,
    pub character_label: String,
    pub weyl_char_label: String,
    pub d_u: u32,
    pub order_index: usize,
    pub block_id: usize,
}

/// Checks ordering, block and dimension invariants of an ordered pair list.
pub fn validate_springer(pairs: &[SpringerPair]) -> Result<(), DataError> {
    if pairs.is_empty() {
        return Err(DataError::Invalid("springer_table is empty".into()));
    }
    for (i, w) in pairs.windows(2).enumerate() {
        let (a, b) = (&w[0], &w[1]);
        if b.order_index <= a.order_index {
            return Err(DataError::Invalid(format!(
                "springer_table[{}]: order_index {} does not increase",
                i + 1,
                b.order_index
            )));
        }
        if b.d_u > a.d_u {
            return Err(DataError::Invalid(format!("springer_table[{}]: d_u increases along the order", i + 1)));
        }
    }
    for (i, a) in pairs.iter().enumerate() {
        for b in &pairs[..i] {
            if (a.class_label == b.class_label) != (a.block_id == b.block_id) {
                return Err(DataError::Invalid(format!(
                    "springer_table[{i}]: block_id {} contradicts class_label {:?}",
                    a.block_id, a.class_label
                )));
            }
        }
        if i > 0 && pairs[i - 1].block_id != a.block_id && pairs[..i - 1].iter().any(|b| b.block_id == a.block_id) {
            return Err(DataError::Invalid(format!("springer_table[{i}]: block {} is not contiguous", a.block_id)));
        }
    }
    Ok(())
}

/// Index ranges of consecutive pairs sharing a block.
pub fn blocks_of(pairs: &[SpringerPair]) -> Vec<Vec<usize>> {
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for (i, p) in pairs.iter().enumerate() {
        match blocks.last_mut() {
            Some(b) if pairs[b[0]].block_id == p.block_id => b.push(i),
            _ => blocks.push(vec![i]),
        }
    }
    blocks
}

/// The chosen extension of `φ` for one pair, with its values per F-class.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtensionChoice {
    pub class_label: String,
    pub character_label: String,
    pub selector: Selector,
    pub values: Vec<QuadRational>,
}

/// Columns of the target table and which F-class of which `A(u)` each one is.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnipotentLayout {
    pub split_class_labels: Vec<String>,
    /// `assignment[column] = (class label, index into component_f_classes)`
    pub assignment: Vec<(String, usize)>,
}

impl UnipotentLayout {
    pub fn columns(&self) -> usize {
        self.split_class_labels.len()
    }

    pub fn columns_of(&self, class_label: &str) -> Vec<usize> {
        (0..self.columns()).filter(|&c| self.assignment[c].0 == class_label).collect()
    }

    pub fn relabeled(&self, labels: Vec<String>) -> Result<Self, DataError> {
        if labels.len() != self.columns() {
            return Err(DataError::LayoutMismatch(format!(
                "{} new labels for {} columns",
                labels.len(),
                self.columns()
            )));
        }
        Ok(UnipotentLayout { split_class_labels: labels, assignment: self.assignment.clone() })
    }
}

/// Values `ρ̃(w_iF)` of the chosen extensions, one row per pair.
#[derive(Debug, Clone, PartialEq)]
pub struct CosetCharTable {
    pub d: u32,
    pub column_labels: Vec<String>,
    pub column_torus_orders: Vec<Poly>,
    pub row_labels: Vec<String>,
    pub values: Vec<Vec<QuadRational>>,
}

/// Rows = pairs in order, columns = split classes; `φ̃(aF)` on the pair's own class, 0 elsewhere.
pub fn build_y_table(
    pairs: &[SpringerPair],
    layout: &UnipotentLayout,
    choices: &[ExtensionChoice],
    d: u32,
) -> Result<MatrixRF, DataError> {
    let mut y = MatrixRF::zeros(pairs.len(), layout.columns(), d);
    for (i, p) in pairs.iter().enumerate() {
        let choice = choices
            .iter()
            .find(|c| c.class_label == p.class_label && c.character_label == p.character_label)
            .ok_or_else(|| {
                DataError::LayoutMismatch(format!("no extension choice for ({}, {})", p.class_label, p.character_label))
            })?;
        let cols = layout.columns_of(&p.class_label);
        if cols.len() != choice.values.len() {
            return Err(DataError::LayoutMismatch(format!(
                "class {} has {} columns but {} extension values",
                p.class_label,
                cols.len(),
                choice.values.len()
            )));
        }
        for c in cols {
            let k = layout.assignment[c].1;
            let v = choice.values.get(k).ok_or_else(|| {
                DataError::LayoutMismatch(format!("column {c} names F-class {k} of {}", p.class_label))
            })?;
            y.set(i, c, RatFunc::from_quad(v.clone()));
        }
    }
    Ok(y)
}

/// Gram matrix `(1/|W|)·Σ_i size_i·ρ̃(w_i)·ρ̃′(w_i)` and its deviations from the identity.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthogonalityReport {
    pub gram: Vec<Vec<QuadRational>>,
    pub defects: Vec<(usize, usize, QuadRational)>,
}

impl OrthogonalityReport {
    pub fn passes(&self) -> bool {
        self.defects.is_empty()
    }
}

/// All values are real, so no conjugation is needed.
pub fn coset_orthogonality_check(table: &CosetCharTable, sizes: &[usize], weyl_order: usize) -> OrthogonalityReport {
    let d = table.d;
    let n = table.values.len();
    let inv_order = QuadRational::from_fraction(1, weyl_order as i64, d);
    let mut gram = vec![vec![QuadRational::zero(d); n]; n];
    let mut defects = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut acc = QuadRational::zero(d);
            for (c, &s) in sizes.iter().enumerate() {
                let term = &(&table.values[i][c] * &table.values[j][c]) * &QuadRational::from_integer(s as i64, d);
                acc = &acc + &term;
            }
            let value = &acc * &inv_order;
            let expected = if i == j { QuadRational::one(d) } else { QuadRational::zero(d) };
            if value != expected {
                defects.push((i, j, value.clone()));
            }
            gram[i][j] = value;
        }
    }
    OrthogonalityReport { gram, defects }
}

/// `size_i = |W| / Σ_ρ ρ̃(w_i)²`, valid when the rows are all extensions of F-stable irreducibles.
pub fn derive_sizes_from_columns(table: &CosetCharTable, weyl_order: usize) -> Result<Vec<usize>, DataError> {
    let d = table.d;
    (0..table.column_labels.len())
        .map(|c| {
            let sum = table.values.iter().fold(QuadRational::zero(d), |acc, row| &acc + &(&row[c] * &row[c]));
            let size = QuadRational::from_integer(weyl_order as i64, d).checked_div(&sum)?;
            size.to_integer().and_then(|n| usize::try_from(n).ok()).ok_or_else(|| DataError::NonIntegralSize {
                column: table.column_labels[c].clone(),
                value: size.to_string(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::parse_poly;

    fn b2_table() -> CosetCharTable {
        let d = 2;
        let q = |s: &str| parse_poly(s, d).unwrap().coeff(0);
        CosetCharTable {
            d,
            column_labels: vec!["F0".into(), "waF0".into(), "wawbwaF0".into()],
            column_torus_orders: ["q^2-1", "q^2-sqrt2*q+1", "q^2+sqrt2*q+1"]
                .iter()
                .map(|s| parse_poly(s, d).unwrap())
                .collect(),
            row_labels: vec!["eps".into(), "chi".into(), "1".into()],
            values: vec![
                vec![q("1"), q("-1"), q("-1")],
                vec![q("0"), q("-sqrt2"), q("sqrt2")],
                vec![q("1"), q("1"), q("1")],
            ],
        }
    }

    #[test]
    fn b2_orthogonality() {
        let report = coset_orthogonality_check(&b2_table(), &[4, 2, 2], 8);
        assert!(report.passes(), "{:?}", report.defects);
    }

    #[test]
    fn b2_sizes_from_columns() {
        assert_eq!(derive_sizes_from_columns(&b2_table(), 8).unwrap(), vec![4, 2, 2]);
    }

    #[test]
    fn corrupted_table_is_detected() {
        let mut t = b2_table();
        t.values[1][1] = QuadRational::from_integer(-1, 2);
        assert!(!coset_orthogonality_check(&t, &[4, 2, 2], 8).passes());
        assert!(matches!(derive_sizes_from_columns(&t, 8), Err(DataError::NonIntegralSize { .. })));
    }

    fn pair(class: &str, block: usize, order: usize, d_u: u32) -> SpringerPair {
        SpringerPair {
            class_label: class.into(),
            character_label: "1".into(),
            weyl_char_label: "x".into(),
            d_u,
            order_index: order,
            block_id: block,
        }
    }

    #[test]
    fn block_contradiction_rejected() {
        let bad = vec![pair("u1", 0, 0, 4), pair("u4", 0, 1, 1)];
        assert!(validate_springer(&bad).is_err());
        let good = vec![pair("u1", 0, 0, 4), pair("u4", 1, 1, 1)];
        assert!(validate_springer(&good).is_ok());
    }
}
