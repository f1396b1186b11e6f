//! The index report shared by the closed-form and oracle paths.

use std::fmt;

use num_bigint::BigUint;

use crate::rational::ExactRational;

/// Which path produced a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Source {
    ClosedForm,
    Oracle,
}

impl Source {
    pub fn as_str(self) -> &'static str {
        match self {
            Source::ClosedForm => "closed_form",
            Source::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Every value the two paths are compared on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IndexName {
    EdgeCount,
    DegreeSum,
    Wiener,
    Harary,
    HyperWiener,
    Zagreb1,
    Zagreb2,
    Gutman,
    Schultz,
    EccentricConnectivity,
}

impl IndexName {
    pub const ALL: [IndexName; 10] = [
        IndexName::EdgeCount,
        IndexName::DegreeSum,
        IndexName::Wiener,
        IndexName::Harary,
        IndexName::HyperWiener,
        IndexName::Zagreb1,
        IndexName::Zagreb2,
        IndexName::Gutman,
        IndexName::Schultz,
        IndexName::EccentricConnectivity,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IndexName::EdgeCount => "edge_count",
            IndexName::DegreeSum => "degree_sum",
            IndexName::Wiener => "wiener",
            IndexName::Harary => "harary",
            IndexName::HyperWiener => "hyper_wiener",
            IndexName::Zagreb1 => "zagreb1",
            IndexName::Zagreb2 => "zagreb2",
            IndexName::Gutman => "gutman",
            IndexName::Schultz => "schultz",
            IndexName::EccentricConnectivity => "eccentric_connectivity",
        }
    }
}

impl fmt::Display for IndexName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An integer index or the rational Harary index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum IndexValue {
    Integer(BigUint),
    Rational(ExactRational),
}

impl fmt::Display for IndexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexValue::Integer(v) => write!(f, "{v}"),
            IndexValue::Rational(r) => write!(f, "{r}"),
        }
    }
}

/// The eight indices of a divisor prime graph plus its structural counts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexReport {
    pub n: BigUint,
    pub divisor_count: BigUint,
    pub edge_count: BigUint,
    pub degree_sum: BigUint,
    pub wiener: BigUint,
    pub harary: ExactRational,
    pub hyper_wiener: BigUint,
    pub zagreb1: BigUint,
    pub zagreb2: BigUint,
    pub gutman: BigUint,
    pub schultz: BigUint,
    pub eccentric_connectivity: BigUint,
    /// Only the oracle measures the diameter.
    pub diameter: Option<u32>,
    pub source: Source,
}

impl IndexReport {
    pub fn value(&self, index: IndexName) -> IndexValue {
        let int = |v: &BigUint| IndexValue::Integer(v.clone());
        match index {
            IndexName::EdgeCount => int(&self.edge_count),
            IndexName::DegreeSum => int(&self.degree_sum),
            IndexName::Wiener => int(&self.wiener),
            IndexName::Harary => IndexValue::Rational(self.harary.clone()),
            IndexName::HyperWiener => int(&self.hyper_wiener),
            IndexName::Zagreb1 => int(&self.zagreb1),
            IndexName::Zagreb2 => int(&self.zagreb2),
            IndexName::Gutman => int(&self.gutman),
            IndexName::Schultz => int(&self.schultz),
            IndexName::EccentricConnectivity => int(&self.eccentric_connectivity),
        }
    }
}
