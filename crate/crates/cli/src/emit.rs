//! `dirac emit`.

use std::fs;
use std::path::Path;

use dirac_core::algebra::DIM;
use dirac_core::exactnum::{lf_from_b, DyadicRational, LinearForm};
use dirac_core::fastmult::{StageKind, VerifiedPipeline};
use dirac_core::linalg::Mat;
use dirac_core::slpgen::{emit_text, flatten};

use crate::CliError;

pub fn slp(p: &VerifiedPipeline, out: &Path) -> Result<String, CliError> {
    let prog = flatten(p, true);
    fs::write(out, emit_text(&prog)).map_err(|e| CliError::io(out, e))?;
    Ok(format!("wrote {} ({})", out.display(), prog.histogram()))
}

/// Linear-form grid without inner spaces, so entries stay whitespace-separated.
fn symbolic_grid(m: &Mat<LinearForm>) -> String {
    let mut s = format!("{} {}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|e| e.to_string().replace(' ', "")).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

/// One file per stage, `NN_name.txt`, in execution order. The diagonal
/// stage is written with its entries as linear forms in `b`.
pub fn matrices(p: &VerifiedPipeline, dir: &Path) -> Result<String, CliError> {
    fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let b: Vec<LinearForm> = (0..DIM).map(|i| lf_from_b(i).expect("in range")).collect();
    let mut names = Vec::new();
    for (i, s) in p.stages().iter().enumerate() {
        let text = match &s.kind {
            StageKind::BlockDiag(d) => symbolic_grid(&d.to_matrix(&d.precompute(&b))),
            _ => s.const_matrix::<DyadicRational>().expect("constant stage").to_string(),
        };
        let name = format!("{:02}_{}.txt", i + 1, s.name);
        let path = dir.join(&name);
        fs::write(&path, text).map_err(|e| CliError::io(&path, e))?;
        names.push(format!("{name} {}x{}", s.out_dim(), s.in_dim()));
    }
    Ok(format!("wrote {} stage matrices to {}\n{}", names.len(), dir.display(), names.join("\n")))
}
