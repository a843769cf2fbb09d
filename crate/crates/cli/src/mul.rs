//! `dirac mul`.

use std::path::Path;

use dirac_core::algebra::{mul_schoolbook, DiracNumber, MultTable};
use dirac_core::exactnum::DyadicRational;
use dirac_core::fastmult::VerifiedPipeline;

use crate::numfile::{format_numbers, read_numbers};
use crate::{CliError, Method, Mode};

/// Float-mode agreement bound, relative to `max(1, |reference|)`.
pub const FLOAT_TOLERANCE: f64 = 1e-12;

/// Computes with `method` and cross-checks against the other one.
pub fn run(a: &Path, b: &Path, method: Method, mode: Mode, p: &VerifiedPipeline) -> Result<String, CliError> {
    let t = MultTable::from_generators();
    match mode {
        Mode::Exact => {
            let (a, b) = (read_numbers::<DyadicRational>(a)?, read_numbers::<DyadicRational>(b)?);
            let (fast, school) = (p.run(&a, &b), mul_schoolbook(&a, &b, &t));
            if fast != school {
                return Err(CliError::Check("fast and schoolbook products differ".into()));
            }
            Ok(format_numbers(if method == Method::Fast { &fast } else { &school }))
        }
        Mode::Float => {
            let (a, b) = (read_numbers::<f64>(a)?, read_numbers::<f64>(b)?);
            let (fast, school): (DiracNumber<f64>, _) = (p.run(&a, &b), mul_schoolbook(&a, &b, &t));
            for k in 0..16 {
                let r = school[k];
                if (fast[k] - r).abs() / r.abs().max(1.0) > FLOAT_TOLERANCE {
                    return Err(CliError::Check(format!(
                        "coefficient {k}: fast {} vs schoolbook {r} exceeds tolerance {FLOAT_TOLERANCE:e}",
                        fast[k]
                    )));
                }
            }
            Ok(format_numbers(if method == Method::Fast { &fast } else { &school }))
        }
    }
}
