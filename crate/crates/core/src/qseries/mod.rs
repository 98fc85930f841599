//! Exact truncated q-series and the modular objects built from them.

mod modular;
mod series;

use thiserror::Error;

pub use modular::{
    eisenstein_e4, euler_product, j_coefficients, j_series, partition_series, primary_dim_series,
    primary_dims, sigma3,
};
pub use series::QSeries;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QSeriesError {
    #[error("series is not invertible (no nonzero coefficient below the truncation order)")]
    NotInvertible,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("coefficient of q^{exponent} is not an integer: {value}")]
    NonIntegral { exponent: i64, value: String },
}
