//! Photon-added hypergeometric states in a truncated Fock basis and the
//! quantities used to grade their nonclassicality: single-photon-source
//! quality, anticlassicality, concurrence potential and Wigner logarithmic
//! negativity.

pub mod entanglement;
pub mod error;
pub mod fock;
pub mod measures;
pub mod quadrature;
pub mod registry;
pub mod report;
pub mod special;
pub mod states;
pub mod wigner;

pub use error::{Error, Result};
pub use fock::FockState;
pub use measures::SourceQuality;
pub use registry::{FamilyParams, Registry};
pub use report::{MeasureReport, MeasureValue, ParamValue};
pub use states::HypergeometricParams;
pub use wigner::{QuadratureSpec, WignerGrid};
