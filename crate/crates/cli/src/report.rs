//! Deterministic renderings of a run: text, JSON, CSV and LaTeX.

use std::io::{self, Write};

use charsheaf::disconnected::{ClassReport, Sp42Report};
use charsheaf::exactfield::PolyRepr;
use charsheaf::lusztigcore::{LusztigResult, Verdict};
use charsheaf::{MatrixRF, RatFunc};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Latex,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Text => "txt",
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Latex => "tex",
        }
    }
}

pub fn status_word(result: &LusztigResult) -> &'static str {
    if result.conjectural {
        "CONJECTURAL"
    } else if result.passes() {
        "PASS"
    } else {
        "FAIL"
    }
}

fn is_diagonal(m: &MatrixRF) -> bool {
    (0..m.rows()).all(|i| (0..m.cols()).all(|j| i == j || m.get(i, j).is_zero()))
}

fn render_diag(m: &MatrixRF) -> String {
    let entries: Vec<String> = (0..m.rows()).map(|i| m.get(i, i).to_string()).collect();
    format!("diag({})", entries.join(", "))
}

fn write_matrix(out: &mut dyn Write, name: &str, m: &MatrixRF) -> io::Result<()> {
    writeln!(out, "{name} =")?;
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
        writeln!(out, "  [{}]", row.join(", "))?;
    }
    Ok(())
}

fn write_verdict(out: &mut dyn Write, name: &str, v: &Verdict) -> io::Result<()> {
    let skipped = if v.skipped.is_empty() { String::new() } else { format!(", {} skipped", v.skipped.len()) };
    let word = if v.passes() { "match" } else { "MISMATCH" };
    writeln!(out, "{name}: {word} {}/{} cells{skipped}", v.matched(), v.compared)?;
    for m in &v.mismatches {
        writeln!(out, "  {} / {}: expected {}, computed {}", m.row_label, m.col_label, m.expected, m.computed)?;
    }
    Ok(())
}

fn write_text(result: &LusztigResult, out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "case {}: {}", result.case, status_word(result))?;
    writeln!(out, "F-classes (column, size, torus order, word):")?;
    for c in &result.columns {
        let word: Vec<String> = c.word.iter().map(|k| format!("s{}", k + 1)).collect();
        let word = if word.is_empty() { "1".to_string() } else { word.join(" ") };
        writeln!(out, "  {}  {}  {}  {}", c.label, c.size, c.torus_order, word)?;
    }
    writeln!(out, "pairs: {}", result.pair_labels.join(", "))?;
    write_matrix(out, "Omega", &result.omega)?;
    write_matrix(out, "P", &result.p)?;
    if is_diagonal(&result.lambda) {
        writeln!(out, "Lambda = {}", render_diag(&result.lambda))?;
    } else {
        write_matrix(out, "Lambda", &result.lambda)?;
    }
    let x_title = if result.conjectural { "X (CONJECTURAL)" } else { "X" };
    writeln!(out, "{x_title}: columns {}", result.column_labels.join(", "))?;
    for (i, label) in result.row_labels.iter().enumerate() {
        let row: Vec<String> = result.x.row(i).iter().map(ToString::to_string).collect();
        writeln!(out, "  {label}: {}", row.join(", "))?;
    }
    if result.conjectural {
        writeln!(out, "target: not compared (conjectural)")?;
    } else {
        write_verdict(out, "target", &result.verdict)?;
    }
    for (name, check) in [("Omega", &result.omega_check), ("P", &result.p_check), ("Lambda", &result.lambda_check)] {
        if let Some(v) = check {
            write_verdict(out, &format!("stated {name}"), v)?;
        }
    }
    for d in &result.defects {
        writeln!(
            out,
            "  defect {}[{}][{}] printed {:?}: {}; computed {}",
            d.matrix,
            d.row,
            d.col,
            d.printed,
            d.note,
            result.p.get(d.row, d.col)
        )?;
    }
    writeln!(out, "residual tP.Lambda.P - Omega = 0: {}", result.residual_zero)?;
    writeln!(out, "Omega free of sqrt{}: {}", result.d, result.omega_surd_free)?;
    writeln!(out, "coset orthogonality: {}", if result.orthogonality.passes() { "pass" } else { "FAIL" })?;
    let failures = result.failures();
    if !failures.is_empty() && !result.conjectural {
        writeln!(out, "failed checks: {}", failures.join(", "))?;
    }
    Ok(())
}

#[derive(Serialize)]
#[serde(untagged)]
enum CellJson {
    Poly(PolyRepr),
    Fraction { numerator: PolyRepr, denominator: PolyRepr },
}

fn cell_json(r: &RatFunc) -> CellJson {
    match r.is_polynomial() {
        Some(p) => CellJson::Poly(p.to_repr()),
        None => CellJson::Fraction { numerator: r.numer().to_repr(), denominator: r.denom().to_repr() },
    }
}

fn matrix_json(m: &MatrixRF) -> Vec<Vec<CellJson>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(cell_json).collect()).collect()
}

#[derive(Serialize)]
struct ColumnJson {
    label: String,
    size: usize,
    torus_order: PolyRepr,
    word: Vec<usize>,
}

#[derive(Serialize)]
struct MismatchJson {
    row: String,
    col: String,
    expected: String,
    computed: String,
}

#[derive(Serialize)]
struct VerdictJson {
    passes: bool,
    compared: usize,
    matched: usize,
    skipped: Vec<(usize, usize)>,
    mismatches: Vec<MismatchJson>,
}

fn verdict_json(v: &Verdict) -> VerdictJson {
    VerdictJson {
        passes: v.passes(),
        compared: v.compared,
        matched: v.matched(),
        skipped: v.skipped.clone(),
        mismatches: v
            .mismatches
            .iter()
            .map(|m| MismatchJson {
                row: m.row_label.clone(),
                col: m.col_label.clone(),
                expected: m.expected.clone(),
                computed: m.computed.clone(),
            })
            .collect(),
    }
}

#[derive(Serialize)]
struct ResultJson {
    case: String,
    status: &'static str,
    surd: u32,
    pairs: Vec<String>,
    row_labels: Vec<String>,
    column_labels: Vec<String>,
    f_classes: Vec<ColumnJson>,
    omega: Vec<Vec<CellJson>>,
    p: Vec<Vec<CellJson>>,
    lambda: Vec<Vec<CellJson>>,
    y: Vec<Vec<CellJson>>,
    x: Vec<Vec<CellJson>>,
    target: Option<VerdictJson>,
    stated_omega: Option<VerdictJson>,
    stated_p: Option<VerdictJson>,
    stated_lambda: Option<VerdictJson>,
    residual_zero: bool,
    omega_surd_free: bool,
    coset_orthogonality: bool,
    failures: Vec<String>,
}

fn write_json(result: &LusztigResult, out: &mut dyn Write) -> io::Result<()> {
    let doc = ResultJson {
        case: result.case.clone(),
        status: status_word(result),
        surd: result.d,
        pairs: result.pair_labels.clone(),
        row_labels: result.row_labels.clone(),
        column_labels: result.column_labels.clone(),
        f_classes: result
            .columns
            .iter()
            .map(|c| ColumnJson {
                label: c.label.clone(),
                size: c.size,
                torus_order: c.torus_order.to_repr(),
                word: c.word.clone(),
            })
            .collect(),
        omega: matrix_json(&result.omega),
        p: matrix_json(&result.p),
        lambda: matrix_json(&result.lambda),
        y: matrix_json(&result.y),
        x: matrix_json(&result.x),
        target: (!result.conjectural).then(|| verdict_json(&result.verdict)),
        stated_omega: result.omega_check.as_ref().map(verdict_json),
        stated_p: result.p_check.as_ref().map(verdict_json),
        stated_lambda: result.lambda_check.as_ref().map(verdict_json),
        residual_zero: result.residual_zero,
        omega_surd_free: result.omega_surd_free,
        coset_orthogonality: result.orthogonality.passes(),
        failures: if result.conjectural { Vec::new() } else { result.failures() },
    };
    serde_json::to_writer_pretty(&mut *out, &doc).map_err(io::Error::other)?;
    writeln!(out)
}

/// Long format: one record per matrix cell.
fn write_csv(result: &LusztigResult, out: &mut dyn Write) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["matrix", "row", "col", "value"])?;
    let pairs = &result.pair_labels;
    let square: [(&str, &MatrixRF); 3] = [("Omega", &result.omega), ("P", &result.p), ("Lambda", &result.lambda)];
    for (name, m) in square {
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                w.write_record([name, &pairs[i], &pairs[j], &m.get(i, j).to_string()])?;
            }
        }
    }
    let x_name = if result.conjectural { "X (conjectural)" } else { "X" };
    for (i, row) in result.row_labels.iter().enumerate() {
        for (j, col) in result.column_labels.iter().enumerate() {
            w.write_record([x_name, row, col, &result.x.get(i, j).to_string()])?;
        }
    }
    w.flush()
}

/// `q^10` → `q^{10}`, `sqrt2` → `\\sqrt{2}`, `*` dropped.
pub fn latex_of(r: &RatFunc) -> String {
    let text = r.to_string().replace("sqrt2", "\\sqrt{2}").replace("sqrt3", "\\sqrt{3}").replace('*', "");
    let mut out = String::new();
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        out.push(c);
        if c == '^' {
            let mut digits = String::new();
            while let Some(d) = chars.next_if(char::is_ascii_digit) {
                digits.push(d);
            }
            if digits.len() > 1 {
                out.push_str(&format!("{{{digits}}}"));
            } else {
                out.push_str(&digits);
            }
        }
    }
    out
}

fn latex_matrix(out: &mut dyn Write, name: &str, m: &MatrixRF) -> io::Result<()> {
    writeln!(out, "% {name}")?;
    writeln!(out, "{name}=\\begin{{bmatrix}}")?;
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(latex_of).collect();
        let end = if i + 1 < m.rows() { "\\\\" } else { "" };
        writeln!(out, "{}{end}", row.join("&"))?;
    }
    writeln!(out, "\\end{{bmatrix}}")
}

fn write_latex(result: &LusztigResult, out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "% case {}: {}", result.case, status_word(result))?;
    latex_matrix(out, "\\Omega", &result.omega)?;
    latex_matrix(out, "P", &result.p)?;
    latex_matrix(out, "\\Lambda", &result.lambda)?;
    writeln!(out, "% X")?;
    writeln!(out, "\\begin{{array}}{{c|{}}}", "c".repeat(result.column_labels.len()))?;
    writeln!(out, " &{}\\\\\\hline", result.column_labels.join("&"))?;
    for (i, label) in result.row_labels.iter().enumerate() {
        let row: Vec<String> = result.x.row(i).iter().map(latex_of).collect();
        writeln!(out, "{label}&{}\\\\", row.join("&"))?;
    }
    writeln!(out, "\\end{{array}}")
}

pub fn emit(result: &LusztigResult, format: Format, sink: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Text => write_text(result, sink),
        Format::Json => write_json(result, sink),
        Format::Csv => write_csv(result, sink),
        Format::Latex => write_latex(result, sink),
    }
}

#[derive(Serialize)]
struct ModelsJson<'a> {
    models: &'a [ClassReport],
    sp4_2: Option<&'a Sp42Report>,
}

/// The model-suite report; CSV and LaTeX fall back to one line per model.
pub fn emit_models(
    reports: &[ClassReport],
    sp42: Option<&Sp42Report>,
    format: Format,
    out: &mut dyn Write,
) -> io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &ModelsJson { models: reports, sp4_2: sp42 }).map_err(io::Error::other)?;
            writeln!(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["model", "automorphism", "coset_classes", "base_classes", "passes"])?;
            for r in reports {
                w.write_record([
                    r.model.clone(),
                    r.automorphism.clone(),
                    r.coset_class_count.to_string(),
                    r.base_class_count.to_string(),
                    r.passes().to_string(),
                ])?;
            }
            w.flush()
        }
        Format::Text | Format::Latex => {
            for r in reports {
                writeln!(
                    out,
                    "{} {}: {} (|H|={}, coset classes {} = classes of H {}, centralizers {:?}, orders {:?})",
                    r.model,
                    r.automorphism,
                    if r.passes() { "PASS" } else { "FAIL" },
                    r.base_order,
                    r.coset_class_count,
                    r.base_class_count,
                    r.centralizer_pairs,
                    r.order_pairs
                )?;
            }
            if let Some(s) = sp42 {
                writeln!(
                    out,
                    "sp4(2): {} (|G|={}, automorphisms {}, fixed subgroup {} with {} classes of orders {:?}, \
                     extension {} with {} outer-coset classes)",
                    if s.passes() { "PASS" } else { "FAIL" },
                    s.group_order,
                    s.automorphisms_found,
                    s.fixed_subgroup_order,
                    s.fixed_class_count,
                    s.fixed_class_orders,
                    s.extension_order,
                    s.outer_coset_class_count
                )?;
            }
            Ok(())
        }
    }
}
