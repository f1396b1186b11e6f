//! Rendering and graph export behind the `divprime` binary.

pub mod export;
pub mod render;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

/// Output encoding for reports and sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
}

/// Graph serialization style for `export`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ExportStyle {
    Dot,
    AdjacencyJson,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveIntError(String);

impl fmt::Display for PositiveIntError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "expected a positive integer, got {:?}", self.0)
    }
}

impl std::error::Error for PositiveIntError {}

/// Parses a decimal integer `>= 1` of any size.
pub fn parse_positive(s: &str) -> Result<BigUint, PositiveIntError> {
    match BigUint::from_str(s.trim()) {
        Ok(n) if n != BigUint::default() => Ok(n),
        _ => Err(PositiveIntError(s.to_owned())),
    }
}

pub fn parse_positive_u64(s: &str) -> Result<u64, PositiveIntError> {
    match s.trim().parse::<u64>() {
        Ok(n) if n >= 1 => Ok(n),
        _ => Err(PositiveIntError(s.to_owned())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_parsing() {
        assert_eq!(parse_positive("12").unwrap(), BigUint::from(12u32));
        assert!(parse_positive("0").is_err());
        assert!(parse_positive("-3").is_err());
        assert!(parse_positive("twelve").is_err());
        assert_eq!(
            parse_positive("340282366920938463463374607431768211457").unwrap(),
            (BigUint::from(1u32) << 128u32) + 1u32
        );
        assert!(parse_positive_u64("0").is_err());
        assert_eq!(parse_positive_u64("7").unwrap(), 7);
    }
}
