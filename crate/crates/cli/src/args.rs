use clap::{Args, ValueEnum};
use pahs_core::registry::DEFAULT_L_COEFFICIENT;
use pahs_core::wigner::QuadratureSpec;
use pahs_core::FamilyParams;

#[derive(Debug, Clone, Args)]
pub struct StateArgs {
    /// State family: pahs, hypergeometric, binomial, coherent or fock.
    pub family: String,

    /// Population parameter L; when absent L = c * max(M/eta, M/(1-eta)).
    #[arg(long = "L")]
    pub l: Option<f64>,

    /// Multiple of the smallest valid L used when --L is absent.
    #[arg(long = "c", default_value_t = DEFAULT_L_COEFFICIENT)]
    pub c: f64,

    #[arg(long = "M")]
    pub m: Option<usize>,

    #[arg(long)]
    pub eta: Option<f64>,

    /// Number of added photons.
    #[arg(long, default_value_t = 0)]
    pub k: usize,

    /// Real coherent amplitude.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<f64>,

    /// Fock level.
    #[arg(long)]
    pub n: Option<usize>,

    /// Truncation dimension (fock, coherent).
    #[arg(long)]
    pub dim: Option<usize>,
}

impl StateArgs {
    pub fn params(&self) -> FamilyParams {
        FamilyParams {
            l: self.l,
            l_coefficient: self.c,
            m: self.m,
            eta: self.eta,
            k: self.k,
            alpha: self.alpha,
            n: self.n,
            dim: self.dim,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct QuadratureArgs {
    /// Quadrature nodes per axis for the Wigner log negativity.
    #[arg(long, default_value_t = QuadratureSpec::default().nodes)]
    pub nodes: usize,

    /// Phase-space radius; derived from the state when absent.
    #[arg(long)]
    pub radius: Option<f64>,

    /// Largest accepted change of the log negativity under node doubling.
    #[arg(long, default_value_t = QuadratureSpec::default().tolerance)]
    pub wln_tolerance: f64,
}

impl QuadratureArgs {
    pub fn spec(&self) -> QuadratureSpec {
        QuadratureSpec {
            radius: self.radius,
            nodes: self.nodes,
            tolerance: self.wln_tolerance,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}
