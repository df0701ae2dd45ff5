//! Driver behind the `charsheaf` binary: report emission and the verify command.

pub mod report;
pub mod verify;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use charsheaf::lusztigcore::LusztigResult;

use report::{emit, Format};

/// Writes `<case>.<ext>` for each format into `dir`.
pub fn write_reports(result: &LusztigResult, formats: &[Format], dir: &Path) -> io::Result<()> {
    std::fs::create_dir_all(dir)?;
    for &f in formats {
        let mut w = BufWriter::new(File::create(dir.join(format!("{}.{}", result.case, f.extension())))?);
        emit(result, f, &mut w)?;
        w.flush()?;
    }
    Ok(())
}
