//! On-disk JSON layout of a case. Polynomials are lists of
//! `["num/den", "num/den"]` coefficient pairs, lowest degree first.

use serde::{Deserialize, Serialize};

use crate::exactfield::PolyRepr;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaseFile {
    pub name: String,
    pub source: String,
    pub surd: u32,
    pub group_order: PolyRepr,
    pub root_datum: RootDatumFile,
    pub springer_table: Vec<SpringerRecord>,
    pub component_groups: Vec<ComponentRecord>,
    pub coset_char_table: CosetTableFile,
    pub extension_choices: Vec<ChoiceRecord>,
    pub layout: LayoutFile,
    pub target_table: TargetFile,
    #[serde(default)]
    pub expected: ExpectedFile,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootDatumFile {
    #[serde(rename = "type")]
    pub kind: String,
    pub cartan: Vec<Vec<i64>>,
    pub twist_matrix: Vec<Vec<i64>>,
    pub twist_scale: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpringerRecord {
    pub class_label: String,
    pub character_label: String,
    pub weyl_char_label: String,
    pub d_u: u32,
    pub order_index: usize,
    pub block_id: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentRecord {
    pub class_label: String,
    pub kind: String,
    pub f_action: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CosetTableFile {
    pub columns: Vec<ColumnRecord>,
    pub rows: Vec<RowRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColumnRecord {
    pub label: String,
    pub torus_order: PolyRepr,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RowRecord {
    pub label: String,
    pub values: Vec<[String; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChoiceRecord {
    pub class_label: String,
    pub character_label: String,
    pub selector: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LayoutFile {
    pub split_class_labels: Vec<String>,
    pub blocks: Vec<BlockRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockRecord {
    pub class_label: String,
    pub columns: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TargetFile {
    /// `"verified"` or `"conjectural"`.
    pub status: String,
    pub row_labels: Vec<String>,
    pub rows: Vec<Vec<PolyRepr>>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectedFile {
    #[serde(default)]
    pub omega: Option<Vec<Vec<PolyRepr>>>,
    /// `null` cells are printed defectively and are not compared.
    #[serde(default)]
    pub p: Option<Vec<Vec<Option<PolyRepr>>>>,
    #[serde(default)]
    pub lambda: Option<Vec<Vec<PolyRepr>>>,
    #[serde(default)]
    pub defects: Vec<DefectRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DefectRecord {
    pub matrix: String,
    pub row: usize,
    pub col: usize,
    pub printed: String,
    pub note: String,
}
