use core::fmt;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// The scheduler evaluated to `sigma(t) = 0` (or `alpha(t) = 0` for the
    /// noise-prediction conversions) even after endpoint clamping.
    DegenerateScheduler { t: f64 },
    /// Every unnormalized posterior weight underflowed to zero; the query
    /// point is absurdly far from the prior's support.
    NumericalUnderflow,
    /// An ODE state became non-finite during integration.
    NonFiniteState { t: f64 },
    /// Vector or operator dimensions do not match.
    DimensionMismatch { expected: usize, got: usize },
    /// A cost evaluated to NaN or infinity.
    NonFiniteCost,
    /// The chi^d regularizer is undefined at the origin.
    ZeroNorm,
    /// Doubling the quadrature grid kept changing the covariance integral by
    /// more than the configured tolerance.
    QuadratureUnresolved { change: f64, tol: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DegenerateScheduler { t } => {
                write!(f, "scheduler is degenerate at t = {t}")
            }
            Error::NumericalUnderflow => {
                write!(f, "all posterior weights underflowed to zero")
            }
            Error::NonFiniteState { t } => {
                write!(f, "ODE state became non-finite at t = {t}")
            }
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::NonFiniteCost => write!(f, "cost evaluated to a non-finite value"),
            Error::ZeroNorm => write!(f, "chi^d regularizer undefined at the origin"),
            Error::QuadratureUnresolved { change, tol } => {
                write!(
                    f,
                    "quadrature refinement did not converge (change {change:e} > tol {tol:e})"
                )
            }
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
