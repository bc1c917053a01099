//! Photon-statistics quantifiers: single-photon-source quality and
//! anticlassicality.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::fock::FockState;
use crate::special::NeumaierSum;

/// Below this the numerator or denominator of the source quality counts as zero.
pub const MU_THRESHOLD: f64 = 1e-14;

/// Single-photon-source quality `P₁ / (1 − P₀ − P₁)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SourceQuality {
    Finite(f64),
    /// All weight in the zero- and one-photon sectors with `P₁ > 0`.
    Infinite,
    /// Vacuum: numerator and denominator both vanish.
    Undefined,
}

impl SourceQuality {
    pub fn as_f64(&self) -> f64 {
        match self {
            SourceQuality::Finite(v) => *v,
            SourceQuality::Infinite => f64::INFINITY,
            SourceQuality::Undefined => f64::NAN,
        }
    }
}

impl fmt::Display for SourceQuality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SourceQuality::Finite(v) => write!(f, "{v:.16e}"),
            SourceQuality::Infinite => f.write_str("INFINITE"),
            SourceQuality::Undefined => f.write_str("UNDEFINED"),
        }
    }
}

impl Serialize for SourceQuality {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            SourceQuality::Finite(v) => serializer.serialize_f64(*v),
            SourceQuality::Infinite => serializer.serialize_str("INFINITE"),
            SourceQuality::Undefined => serializer.serialize_str("UNDEFINED"),
        }
    }
}

pub fn sps_quality_mu(s: &FockState) -> SourceQuality {
    let pnd = s.photon_number_distribution();
    let p1 = pnd.get(1).copied().unwrap_or(0.0);
    // multiphoton weight summed directly rather than as 1 − P₀ − P₁
    let multi: f64 = pnd.iter().skip(2).copied().collect::<NeumaierSum>().value();
    match (p1 > MU_THRESHOLD, multi > MU_THRESHOLD) {
        (_, true) => SourceQuality::Finite(p1 / multi),
        (true, false) => SourceQuality::Infinite,
        (false, false) => SourceQuality::Undefined,
    }
}

/// Largest photon-number probability, over `m ≥ 1` or, with
/// `include_vacuum`, over `m ≥ 0`.
pub fn anticlassicality(s: &FockState, include_vacuum: bool) -> f64 {
    let skip = if include_vacuum { 0 } else { 1 };
    s.photon_number_distribution()
        .into_iter()
        .skip(skip)
        .fold(0.0, f64::max)
}
