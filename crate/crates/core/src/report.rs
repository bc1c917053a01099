use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::measures::SourceQuality;
use crate::wigner::WlnEstimate;

/// Parameter value as it appears in reports.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ParamValue {
    Int(i64),
    Real(f64),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::Real(v) => write!(f, "{v:.16e}"),
        }
    }
}

impl Serialize for ParamValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            ParamValue::Int(v) => serializer.serialize_i64(*v),
            ParamValue::Real(v) => serializer.serialize_f64(*v),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum MeasureValue {
    Scalar(f64),
    Quality(SourceQuality),
    Wln(WlnEstimate),
}

impl MeasureValue {
    /// Headline number; `inf` / `NaN` for an ideal or undefined source quality.
    pub fn as_f64(&self) -> f64 {
        match self {
            MeasureValue::Scalar(v) => *v,
            MeasureValue::Quality(q) => q.as_f64(),
            MeasureValue::Wln(w) => w.value,
        }
    }

    pub fn is_converged(&self) -> bool {
        match self {
            MeasureValue::Wln(w) => w.converged,
            _ => true,
        }
    }
}

/// Measures evaluated on one state together with the parameters that
/// produced it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MeasureReport {
    pub family: String,
    pub params: BTreeMap<String, ParamValue>,
    pub measures: BTreeMap<String, MeasureValue>,
}

impl MeasureReport {
    pub fn is_converged(&self) -> bool {
        self.measures.values().all(MeasureValue::is_converged)
    }
}
