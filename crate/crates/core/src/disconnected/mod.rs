//! Finite shadows of the coset construction `(H×H)⋊⟨τ⟩`, the Sp₄(2) model of
//! the Suzuki twist, and the disconnected runs that reuse the connected data
//! under relabeled columns.

mod coset;
mod sp42;

pub use coset::{coset_model, model_suite, verify_coset_conjugacy, ClassReport, CosetModel, ModelName};
pub use sp42::{sp4_2_model, Sp42Model, Sp42Report};

use std::path::Path;

use thiserror::Error;

use crate::lusztigcore::{load_case, run_case, CaseBundle, CaseError, LusztigResult, TargetStatus};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DisconnectedError {
    #[error("no disconnected variant of case {0:?}")]
    Unsupported(String),
    #[error(transparent)]
    Case(#[from] CaseError),
    #[error("no outer involution of Sp4(2) with a fixed subgroup of order 20")]
    NoSuzukiInvolution,
}

pub const DISCONNECTED_CASES: [&str; 2] = ["b2-disconnected", "f4-disconnected"];

/// Column labels on the coset `G^F·τ` in place of the connected ones.
pub fn disconnected_labels(base: &CaseBundle) -> Result<Vec<String>, DisconnectedError> {
    match base.name.as_str() {
        // u1, u4, ρ, ρ⁻¹ in that order
        "b2" => Ok(["(1,σ)", "(x_{a+b},σ)", "(x_a,σ)", "(x_ax_{a+b},σ)"].iter().map(|s| s.to_string()).collect()),
        "f4" => Ok(base.layout.split_class_labels.iter().map(|u| format!("N({u})")).collect()),
        other => Err(DisconnectedError::Unsupported(other.to_string())),
    }
}

/// The connected layout with relabeled columns; assignments are unchanged.
pub fn disconnected_layout(base: &CaseBundle) -> Result<crate::cosetdata::UnipotentLayout, DisconnectedError> {
    let labels = disconnected_labels(base)?;
    base.layout
        .relabeled(labels)
        .map_err(|e| DisconnectedError::Case(CaseError::Invalid { field: "layout".into(), message: e.to_string() }))
}

/// Same Springer table, torus data and extension choices, relabeled columns.
/// The F₄ variant is marked conjectural.
pub fn disconnected_bundle(base: &CaseBundle) -> Result<CaseBundle, DisconnectedError> {
    let layout = disconnected_layout(base)?;
    let mut bundle = base.clone();
    bundle.name = format!("{}-disconnected", base.name);
    bundle.layout = layout;
    if base.name == "f4" {
        bundle.target.status = TargetStatus::Conjectural;
    }
    Ok(bundle)
}

/// Loads the connected case from `data_dir` and runs its disconnected variant.
pub fn run_disconnected(case_name: &str, data_dir: &Path) -> Result<LusztigResult, DisconnectedError> {
    let base = case_name
        .strip_suffix("-disconnected")
        .filter(|b| *b == "b2" || *b == "f4")
        .ok_or_else(|| DisconnectedError::Unsupported(case_name.to_string()))?;
    let connected = load_case(&data_dir.join(format!("{base}.json")))?;
    Ok(run_case(&disconnected_bundle(&connected)?)?)
}
