//! Files of 16 whitespace-separated coefficients.

use std::fmt::Display;
use std::path::Path;
use std::str::FromStr;

use dirac_core::algebra::{DiracNumber, DIM};
use dirac_core::exactnum::Ring;

use crate::CliError;

pub fn parse_numbers<S: Ring + FromStr>(text: &str, origin: &str) -> Result<DiracNumber<S>, CliError>
where
    S::Err: Display,
{
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.len() != DIM {
        return Err(CliError::Usage(format!("{origin}: expected {DIM} numbers, found {}", tokens.len())));
    }
    let mut vals = Vec::with_capacity(DIM);
    for (i, t) in tokens.iter().enumerate() {
        let v = t
            .parse::<S>()
            .map_err(|e| CliError::Usage(format!("{origin}: token {} ({t:?}): {e}", i + 1)))?;
        vals.push(v);
    }
    Ok(DiracNumber::new(vals.try_into().unwrap_or_else(|_| unreachable!())))
}

pub fn read_numbers<S: Ring + FromStr>(path: &Path) -> Result<DiracNumber<S>, CliError>
where
    S::Err: Display,
{
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_numbers(&text, &path.display().to_string())
}

pub fn format_numbers<S: Display>(x: &DiracNumber<S>) -> String {
    x.coeffs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}
