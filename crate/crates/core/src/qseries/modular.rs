//! Named q-expansions: the Euler product, `E4`, the partition generating
//! function, the normalized `J` function and the generating series of
//! primary-vector dimensions in the Moonshine module.
//!
//! Every `order` argument below is the truncation order of the returned
//! series: coefficients of `q^n` are exact for all `n < order`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{QSeries, QSeriesError};

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<(), QSeriesError> {
    if cond {
        Ok(())
    } else {
        Err(QSeriesError::InvalidArgument(msg()))
    }
}

fn ensure_integral(s: QSeries) -> Result<QSeries, QSeriesError> {
    s.integer_coeffs()?;
    Ok(s)
}

/// `prod_{j>=1} (1 - q^j)`, i.e. `q^{-1/24} eta(q)`, summed over generalized
/// pentagonal numbers `k(3k -+ 1)/2` with sign `(-1)^k`.
pub fn euler_product(order: i64) -> Result<QSeries, QSeriesError> {
    require(order >= 1, || format!("euler_product needs order >= 1, got {order}"))?;
    let mut coeffs = vec![BigRational::zero(); order as usize];
    coeffs[0] = BigRational::one();
    let mut k: i64 = 1;
    loop {
        let lower = k * (3 * k - 1) / 2;
        if lower >= order {
            break;
        }
        let sign = if k % 2 == 0 { BigRational::one() } else { -BigRational::one() };
        coeffs[lower as usize] = sign.clone();
        let upper = k * (3 * k + 1) / 2;
        if upper < order {
            coeffs[upper as usize] = sign;
        }
        k += 1;
    }
    QSeries::from_coeffs(0, coeffs, order)
}

/// Sum of the cubes of the positive divisors of `k`.
pub fn sigma3(k: i64) -> Result<BigInt, QSeriesError> {
    require(k >= 1, || format!("sigma3 needs k >= 1, got {k}"))?;
    let mut total = BigInt::zero();
    let mut d: i64 = 1;
    while d * d <= k {
        if k % d == 0 {
            total += BigInt::from(d).pow(3);
            let e = k / d;
            if e != d {
                total += BigInt::from(e).pow(3);
            }
        }
        d += 1;
    }
    Ok(total)
}

/// Weight-4 Eisenstein series `1 + 240 sum sigma3(k) q^k`.
pub fn eisenstein_e4(order: i64) -> Result<QSeries, QSeriesError> {
    require(order >= 1, || format!("eisenstein_e4 needs order >= 1, got {order}"))?;
    let mut coeffs = Vec::with_capacity(order as usize);
    coeffs.push(BigRational::one());
    for k in 1..order {
        coeffs.push(BigRational::from_integer(sigma3(k)? * 240));
    }
    QSeries::from_coeffs(0, coeffs, order)
}

/// `sum p(n) q^n = prod (1 - q^j)^{-1}`.
pub fn partition_series(order: i64) -> Result<QSeries, QSeriesError> {
    ensure_integral(euler_product(order)?.invert()?)
}

/// `J(q) = E4^3 / (q prod (1-q^k)^24) - 744`, valuation -1, exact below `q^order`.
pub fn j_series(order: i64) -> Result<QSeries, QSeriesError> {
    require(order >= 0, || format!("j_series needs order >= 0, got {order}"))?;
    // q^{-1} consumes one degree of precision.
    let precision = order + 1;
    let e4_cubed = eisenstein_e4(precision)?.pow(3)?;
    let inv_delta = euler_product(precision)?.pow(-24)?;
    let j = (&e4_cubed * &inv_delta).shift(-1);
    let constant = QSeries::monomial(BigRational::from_integer(744.into()), 0, order);
    ensure_integral(&j - &constant)
}

/// Generating series whose coefficient of `q^{w-1}` is the dimension of the
/// weight-`w` primary subspace of the Moonshine module:
///
/// `q^{-1} E4^3 (sum p(n) q^n)^23 - 744 prod (1 - q^j) + 1`.
///
/// The result has valuation -1 and is exact below `q^order`, so it covers
/// weights `0..=order`.
pub fn primary_dim_series(order: i64) -> Result<QSeries, QSeriesError> {
    require(order >= 0, || format!("primary_dim_series needs order >= 0, got {order}"))?;
    let precision = order + 1;
    let e4_cubed = eisenstein_e4(precision)?.pow(3)?;
    let partitions_23 = partition_series(precision)?.pow(23)?;
    let main = (&e4_cubed * &partitions_23).shift(-1);
    let euler = euler_product(order.max(1))?.truncate(order);
    let correction = euler.scale(&BigRational::from_integer(744.into()));
    let one = QSeries::one(order.max(1)).truncate(order);
    ensure_integral(&(&main - &correction) + &one)
}

/// Dimensions of the primary subspaces for weights `0..=max_weight`.
pub fn primary_dims(max_weight: i64) -> Result<Vec<BigInt>, QSeriesError> {
    require(max_weight >= 0, || format!("max_weight must be >= 0, got {max_weight}"))?;
    let series = primary_dim_series(max_weight)?;
    (0..=max_weight)
        .map(|w| {
            series.integer_coeff(w - 1).ok_or_else(|| QSeriesError::NonIntegral {
                exponent: w - 1,
                value: format!("{:?}", series.coeff(w - 1)),
            })
        })
        .collect()
}

/// `c(-1), c(0), ..., c(max_n)` of `J`, indexed from 0.
pub fn j_coefficients(max_n: i64) -> Result<Vec<BigInt>, QSeriesError> {
    require(max_n >= -1, || format!("max_n must be >= -1, got {max_n}"))?;
    j_series(max_n + 1)?.integer_coeffs()
}
