use std::path::Path;

use super::schema::CaseFile;
use super::CaseError;
use crate::cosetdata::{
    component_f_classes, extension_values, validate_springer, ComponentGroup, CosetCharTable, ExtensionChoice,
    SpringerPair, UnipotentLayout,
};
use crate::exactfield::{FieldError, MatrixRF, Poly, PolyRepr, QuadRational};
use crate::weylgroups::{f_classes, generate_weyl, match_fclasses_to_columns, RootDatum, WeylGroup};

/// The twisted Weyl group with its F-classes matched to table columns.
#[derive(Debug, Clone)]
pub struct TwistedWeyl {
    pub datum: RootDatum,
    pub group: WeylGroup,
    /// Indexed by table column.
    pub columns: Vec<ColumnClass>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ColumnClass {
    pub label: String,
    pub size: usize,
    pub torus_order: Poly,
    /// Generator word of the representative, as simple-reflection indices.
    pub word: Vec<usize>,
}

impl TwistedWeyl {
    pub fn build(datum: RootDatum, table: &CosetCharTable) -> Result<Self, CaseError> {
        let group = generate_weyl(&datum)?;
        let mut classes = f_classes(&datum, &group)?;
        match_fclasses_to_columns(&mut classes, &table.column_torus_orders)?;
        let mut columns: Vec<Option<ColumnClass>> = vec![None; table.column_labels.len()];
        for c in &classes {
            let col = c.column_index.expect("matched above");
            columns[col] = Some(ColumnClass {
                label: table.column_labels[col].clone(),
                size: c.size(),
                torus_order: c.torus_order.clone(),
                word: group.word(c.representative).to_vec(),
            });
        }
        let columns = columns.into_iter().map(|c| c.expect("bijective matching")).collect();
        Ok(TwistedWeyl { datum, group, columns })
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.columns.iter().map(|c| c.size).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TargetStatus {
    Verified,
    Conjectural,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Target {
    pub status: TargetStatus,
    pub row_labels: Vec<String>,
    pub matrix: MatrixRF,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Defect {
    pub matrix: String,
    pub row: usize,
    pub col: usize,
    pub printed: String,
    pub note: String,
}

/// Matrices stated alongside the tables; cells that are `None` are not compared.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Expected {
    pub omega: Option<MatrixRF>,
    pub p: Option<Vec<Vec<Option<Poly>>>>,
    pub lambda: Option<MatrixRF>,
    pub defects: Vec<Defect>,
}

/// Everything one run needs, validated.
#[derive(Debug, Clone)]
pub struct CaseBundle {
    pub name: String,
    pub source: String,
    pub d: u32,
    pub group_order: Poly,
    pub weyl: TwistedWeyl,
    pub springer: Vec<SpringerPair>,
    pub components: Vec<(String, ComponentGroup)>,
    pub coset_chars: CosetCharTable,
    pub layout: UnipotentLayout,
    pub choices: Vec<ExtensionChoice>,
    pub target: Target,
    pub expected: Expected,
}

fn invalid(field: &str, msg: impl Into<String>) -> CaseError {
    CaseError::Invalid { field: field.to_string(), message: msg.into() }
}

fn poly(field: &str, repr: &PolyRepr, d: u32) -> Result<Poly, CaseError> {
    Poly::from_repr(repr, d).map_err(|e| invalid(field, e.to_string()))
}

fn poly_matrix(field: &str, rows: &[Vec<PolyRepr>], d: u32) -> Result<MatrixRF, CaseError> {
    let polys = rows
        .iter()
        .enumerate()
        .map(|(i, r)| r.iter().enumerate().map(|(j, p)| poly(&format!("{field}[{i}][{j}]"), p, d)).collect())
        .collect::<Result<Vec<Vec<Poly>>, _>>()?;
    MatrixRF::from_poly_rows(polys, d).map_err(|e| invalid(field, e.to_string()))
}

fn check_shape(field: &str, m: &MatrixRF, rows: usize, cols: usize) -> Result<(), CaseError> {
    if (m.rows(), m.cols()) != (rows, cols) {
        return Err(invalid(field, format!("expected {rows}x{cols}, found {}x{}", m.rows(), m.cols())));
    }
    Ok(())
}

/// Reads and validates a case file.
pub fn load_case(path: &Path) -> Result<CaseBundle, CaseError> {
    let text = std::fs::read_to_string(path).map_err(|e| CaseError::Io { path: path.display().to_string(), message: e.to_string() })?;
    parse_case(&text)
}

pub fn parse_case(text: &str) -> Result<CaseBundle, CaseError> {
    let file: CaseFile = serde_json::from_str(text)
        .map_err(|e| CaseError::Parse { line: e.line(), column: e.column(), message: e.to_string() })?;
    CaseBundle::from_file(file)
}

impl CaseBundle {
    pub fn from_file(file: CaseFile) -> Result<Self, CaseError> {
        let d = file.surd;
        if !crate::exactfield::SUPPORTED_SURDS.contains(&d) {
            return Err(invalid("surd", FieldError::UnsupportedSurd(d).to_string()));
        }
        let group_order = poly("group_order", &file.group_order, d)?;

        let rd = &file.root_datum;
        if rd.twist_scale as u32 != d {
            return Err(invalid("root_datum.twist_scale", format!("{} does not match surd {d}", rd.twist_scale)));
        }
        let datum = RootDatum::new(&rd.kind, rd.cartan.clone(), rd.twist_matrix.clone(), rd.twist_scale)
            .map_err(|e| invalid("root_datum", e.to_string()))?;

        let springer: Vec<SpringerPair> = file
            .springer_table
            .iter()
            .map(|r| SpringerPair {
                class_label: r.class_label.clone(),
                character_label: r.character_label.clone(),
                weyl_char_label: r.weyl_char_label.clone(),
                d_u: r.d_u,
                order_index: r.order_index,
                block_id: r.block_id,
            })
            .collect();
        validate_springer(&springer).map_err(|e| invalid("springer_table", e.to_string()))?;
        let n = springer.len();

        let mut class_labels: Vec<String> = Vec::new();
        for p in &springer {
            if !class_labels.contains(&p.class_label) {
                class_labels.push(p.class_label.clone());
            }
        }

        let mut components = Vec::new();
        for (i, r) in file.component_groups.iter().enumerate() {
            let field = format!("component_groups[{i}]");
            if !class_labels.contains(&r.class_label) {
                return Err(invalid(&field, format!("class {:?} has no Springer pair", r.class_label)));
            }
            if components.iter().any(|(c, _)| c == &r.class_label) {
                return Err(invalid(&field, format!("class {:?} listed twice", r.class_label)));
            }
            let kind = r.kind.parse().map_err(|e: crate::cosetdata::DataError| invalid(&field, e.to_string()))?;
            let action = r.f_action.parse().map_err(|e: crate::cosetdata::DataError| invalid(&field, e.to_string()))?;
            let g = ComponentGroup::new(kind, action).map_err(|e| invalid(&field, e.to_string()))?;
            components.push((r.class_label.clone(), g));
        }
        for c in &class_labels {
            if !components.iter().any(|(l, _)| l == c) {
                return Err(invalid("component_groups", format!("no component group for class {c:?}")));
            }
        }

        let ct = &file.coset_char_table;
        if ct.rows.len() != n {
            return Err(invalid("coset_char_table.rows", format!("{} rows for {n} pairs", ct.rows.len())));
        }
        let column_torus_orders = ct
            .columns
            .iter()
            .enumerate()
            .map(|(j, c)| poly(&format!("coset_char_table.columns[{j}].torus_order"), &c.torus_order, d))
            .collect::<Result<Vec<_>, _>>()?;
        let mut values = Vec::with_capacity(n);
        for (i, row) in ct.rows.iter().enumerate() {
            let field = format!("coset_char_table.rows[{i}]");
            if row.label != springer[i].weyl_char_label {
                return Err(invalid(&field, format!("label {:?} but pair {i} has {:?}", row.label, springer[i].weyl_char_label)));
            }
            if row.values.len() != ct.columns.len() {
                return Err(invalid(&field, format!("{} values for {} columns", row.values.len(), ct.columns.len())));
            }
            let vals = row
                .values
                .iter()
                .map(|v| QuadRational::from_pair(v, d).map_err(|e| invalid(&field, e.to_string())))
                .collect::<Result<Vec<_>, _>>()?;
            values.push(vals);
        }
        let coset_chars = CosetCharTable {
            d,
            column_labels: ct.columns.iter().map(|c| c.label.clone()).collect(),
            column_torus_orders,
            row_labels: ct.rows.iter().map(|r| r.label.clone()).collect(),
            values,
        };

        let weyl = TwistedWeyl::build(datum, &coset_chars)?;

        let lf = &file.layout;
        let mut assignment = Vec::new();
        let mut flat_labels = Vec::new();
        for (b, block) in lf.blocks.iter().enumerate() {
            let field = format!("layout.blocks[{b}]");
            let (_, g) = components
                .iter()
                .find(|(l, _)| l == &block.class_label)
                .ok_or_else(|| invalid(&field, format!("unknown class {:?}", block.class_label)))?;
            let count = component_f_classes(g).len();
            if block.columns.len() != count {
                return Err(invalid(
                    &field,
                    format!("{} columns but {} has {count} F-classes", block.columns.len(), g.kind()),
                ));
            }
            for (k, label) in block.columns.iter().enumerate() {
                assignment.push((block.class_label.clone(), k));
                flat_labels.push(label.clone());
            }
        }
        if flat_labels != lf.split_class_labels {
            return Err(invalid("layout.split_class_labels", "do not match the concatenated block columns"));
        }
        for c in &class_labels {
            if !lf.blocks.iter().any(|b| &b.class_label == c) {
                return Err(invalid("layout.blocks", format!("no block for class {c:?}")));
            }
        }
        let layout = UnipotentLayout { split_class_labels: lf.split_class_labels.clone(), assignment };

        let mut choices = Vec::new();
        for p in &springer {
            let matching: Vec<_> = file
                .extension_choices
                .iter()
                .filter(|c| c.class_label == p.class_label && c.character_label == p.character_label)
                .collect();
            let [record] = matching[..] else {
                return Err(invalid(
                    "extension_choices",
                    format!("expected one choice for ({}, {}), found {}", p.class_label, p.character_label, matching.len()),
                ));
            };
            let selector = record.selector.parse().map_err(|e: crate::cosetdata::DataError| invalid("extension_choices", e.to_string()))?;
            let (_, g) = components.iter().find(|(l, _)| l == &p.class_label).expect("checked above");
            let values = extension_values(g, &p.character_label, selector, d)
                .map_err(|e| invalid("extension_choices", format!("({}, {}): {e}", p.class_label, p.character_label)))?;
            choices.push(ExtensionChoice {
                class_label: p.class_label.clone(),
                character_label: p.character_label.clone(),
                selector,
                values,
            });
        }
        if file.extension_choices.len() != n {
            return Err(invalid("extension_choices", format!("{} choices for {n} pairs", file.extension_choices.len())));
        }

        let tf = &file.target_table;
        let status = match tf.status.as_str() {
            "verified" => TargetStatus::Verified,
            "conjectural" => TargetStatus::Conjectural,
            other => return Err(invalid("target_table.status", format!("unknown status {other:?}"))),
        };
        let target_matrix = poly_matrix("target_table.rows", &tf.rows, d)?;
        check_shape("target_table.rows", &target_matrix, n, layout.columns())?;
        if tf.row_labels.len() != n {
            return Err(invalid("target_table.row_labels", format!("{} labels for {n} rows", tf.row_labels.len())));
        }
        let target = Target { status, row_labels: tf.row_labels.clone(), matrix: target_matrix };

        let ef = &file.expected;
        let omega = ef.omega.as_ref().map(|m| poly_matrix("expected.omega", m, d)).transpose()?;
        if let Some(m) = &omega {
            check_shape("expected.omega", m, n, n)?;
        }
        let lambda = ef.lambda.as_ref().map(|m| poly_matrix("expected.lambda", m, d)).transpose()?;
        if let Some(m) = &lambda {
            check_shape("expected.lambda", m, n, n)?;
        }
        let p = match &ef.p {
            None => None,
            Some(rows) => {
                if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                    return Err(invalid("expected.p", format!("expected {n}x{n}")));
                }
                let cells = rows
                    .iter()
                    .enumerate()
                    .map(|(i, r)| {
                        r.iter()
                            .enumerate()
                            .map(|(j, c)| c.as_ref().map(|p| poly(&format!("expected.p[{i}][{j}]"), p, d)).transpose())
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Some(cells)
            }
        };
        let defects = ef
            .defects
            .iter()
            .map(|r| Defect { matrix: r.matrix.clone(), row: r.row, col: r.col, printed: r.printed.clone(), note: r.note.clone() })
            .collect();
        let expected = Expected { omega, p, lambda, defects };

        Ok(CaseBundle {
            name: file.name,
            source: file.source,
            d,
            group_order,
            weyl,
            springer,
            components,
            coset_chars,
            layout,
            choices,
            target,
            expected,
        })
    }

    pub fn pair_count(&self) -> usize {
        self.springer.len()
    }

    pub fn d_values(&self) -> Vec<u32> {
        self.springer.iter().map(|p| p.d_u).collect()
    }

    pub fn block_ids(&self) -> Vec<usize> {
        self.springer.iter().map(|p| p.block_id).collect()
    }

    pub fn component(&self, class_label: &str) -> Option<&ComponentGroup> {
        self.components.iter().find(|(l, _)| l == class_label).map(|(_, g)| g)
    }
}
