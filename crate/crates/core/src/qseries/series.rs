//! Truncated formal Laurent series in `q` with exact rational coefficients.
//!
//! A [`QSeries`] stores the coefficients of `q^valuation, ..., q^(order-1)`
//! and is exact modulo `q^order`. Every arithmetic operation computes the
//! precision it can actually guarantee from the precision of its operands,
//! so no result ever carries coefficients past what is known.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::QSeriesError;

/// Truncated Laurent series `sum_{n >= valuation} a_n q^n + O(q^order)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSeries {
    valuation: i64,
    order: i64,
    /// `coeffs[i]` is the coefficient of `q^(valuation + i)`; length is `order - valuation`.
    coeffs: Vec<BigRational>,
}

impl QSeries {
    /// Builds a series from the coefficients of `q^valuation, q^(valuation+1), ...`.
    ///
    /// Missing coefficients below `order` are zero; coefficients at or past
    /// `order` are outside the stated precision and dropped.
    pub fn from_coeffs(valuation: i64, coeffs: Vec<BigRational>, order: i64) -> Result<Self, QSeriesError> {
        if order < valuation {
            return Err(QSeriesError::InvalidArgument(format!(
                "order {order} is below valuation {valuation}"
            )));
        }
        let len = (order - valuation) as usize;
        let mut coeffs = coeffs;
        coeffs.resize(len, BigRational::zero());
        Ok(Self { valuation, order, coeffs })
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_integers(valuation: i64, coeffs: &[i64], order: i64) -> Result<Self, QSeriesError> {
        let coeffs = coeffs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect();
        Self::from_coeffs(valuation, coeffs, order)
    }

    /// The zero series known modulo `q^order`.
    pub fn zero(order: i64) -> Self {
        Self { valuation: order, order, coeffs: Vec::new() }
    }

    /// The constant series `1 + O(q^order)`; `order` must be positive.
    pub fn one(order: i64) -> Self {
        Self::monomial(BigRational::one(), 0, order)
    }

    /// `c q^exponent + O(q^order)`. Returns the zero series when `exponent >= order`.
    pub fn monomial(c: BigRational, exponent: i64, order: i64) -> Self {
        if exponent >= order {
            return Self::zero(order);
        }
        let mut coeffs = vec![BigRational::zero(); (order - exponent) as usize];
        coeffs[0] = c;
        Self { valuation: exponent, order, coeffs }
    }

    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    /// Exponent at which the series stops being known.
    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `q^n`, or `None` when `n` lies at or beyond the truncation order.
    pub fn coeff(&self, n: i64) -> Option<BigRational> {
        if n >= self.order {
            None
        } else if n < self.valuation {
            Some(BigRational::zero())
        } else {
            Some(self.coeffs[(n - self.valuation) as usize].clone())
        }
    }

    /// Coefficient of `q^n` as an integer; `None` past the order or if it is not integral.
    pub fn integer_coeff(&self, n: i64) -> Option<BigInt> {
        self.coeff(n).filter(|c| c.is_integer()).map(|c| c.to_integer())
    }

    /// Iterates `(exponent, coefficient)` over every stored position.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.coeffs.iter().enumerate().map(move |(i, c)| (self.valuation + i as i64, c))
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// All coefficients as integers, failing on the first non-integral one.
    pub fn integer_coeffs(&self) -> Result<Vec<BigInt>, QSeriesError> {
        self.terms()
            .map(|(n, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(QSeriesError::NonIntegral { exponent: n, value: c.to_string() })
                }
            })
            .collect()
    }

    /// Index of the first nonzero coefficient, if any.
    pub fn leading_exponent(&self) -> Option<i64> {
        self.terms().find(|(_, c)| !c.is_zero()).map(|(n, _)| n)
    }

    /// Lowers the truncation order. Orders above the current one are ignored.
    pub fn truncate(&self, order: i64) -> Self {
        if order >= self.order {
            return self.clone();
        }
        if order <= self.valuation {
            return Self::zero(order);
        }
        let coeffs = self.coeffs[..(order - self.valuation) as usize].to_vec();
        Self { valuation: self.valuation, order, coeffs }
    }

    /// Multiplies by `q^k` exactly: both valuation and order move by `k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { valuation: self.valuation + k, order: self.order + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            valuation: self.valuation,
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    fn combine(&self, other: &Self, f: impl Fn(BigRational, BigRational) -> BigRational) -> Self {
        let order = self.order.min(other.order);
        let valuation = self.valuation.min(other.valuation).min(order);
        let coeffs = (valuation..order)
            .map(|n| f(self.coeff(n).unwrap_or_default(), other.coeff(n).unwrap_or_default()))
            .collect();
        Self { valuation, order, coeffs }
    }

    fn multiply(&self, other: &Self) -> Self {
        let valuation = self.valuation + other.valuation;
        let order = (self.valuation + other.order).min(other.valuation + self.order);
        let len = (order - valuation) as usize;
        if self.is_integral() && other.is_integral() {
            let a: Vec<BigInt> = self.coeffs.iter().take(len).map(|c| c.to_integer()).collect();
            let b: Vec<BigInt> = other.coeffs.iter().take(len).map(|c| c.to_integer()).collect();
            let mut out = vec![BigInt::zero(); len];
            for (i, ai) in a.iter().enumerate() {
                if ai.is_zero() {
                    continue;
                }
                for (k, bk) in b.iter().take(len - i).enumerate() {
                    out[i + k] += ai * bk;
                }
            }
            let coeffs = out.into_iter().map(BigRational::from_integer).collect();
            return Self { valuation, order, coeffs };
        }
        let mut coeffs = vec![BigRational::zero(); len];
        for (i, ai) in self.coeffs.iter().take(len).enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (k, bk) in other.coeffs.iter().take(len - i).enumerate() {
                coeffs[i + k] += ai * bk;
            }
        }
        Self { valuation, order, coeffs }
    }

    /// Multiplicative inverse, known to the same relative precision as `self`.
    pub fn invert(&self) -> Result<Self, QSeriesError> {
        let lead = self.leading_exponent().ok_or(QSeriesError::NotInvertible)?;
        let offset = (lead - self.valuation) as usize;
        let a = &self.coeffs[offset..];
        let precision = a.len();
        let inv_lead = a[0].recip();
        let mut b: Vec<BigRational> = Vec::with_capacity(precision);
        b.push(inv_lead.clone());
        for n in 1..precision {
            let mut acc = BigRational::zero();
            for i in 1..=n {
                if !a[i].is_zero() {
                    acc += &a[i] * &b[n - i];
                }
            }
            b.push(-(acc * &inv_lead));
        }
        Ok(Self { valuation: -lead, order: -lead + precision as i64, coeffs: b })
    }

    /// Integer power; negative exponents go through [`QSeries::invert`].
    pub fn pow(&self, exponent: i64) -> Result<Self, QSeriesError> {
        if exponent < 0 {
            return self.invert()?.pow(-exponent);
        }
        if exponent == 0 {
            let precision = self.order - self.leading_exponent().unwrap_or(self.valuation);
            return Ok(Self::one(precision.max(1)));
        }
        let mut base = self.clone();
        let mut e = exponent as u64;
        let mut acc: Option<Self> = None;
        loop {
            if e & 1 == 1 {
                acc = Some(match acc {
                    Some(r) => r.multiply(&base),
                    None => base.clone(),
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.multiply(&base);
        }
        Ok(acc.expect("exponent is positive"))
    }
}

impl Default for QSeries {
    fn default() -> Self {
        Self::zero(0)
    }
}

impl<'a> Add<&'a QSeries> for &'a QSeries {
    type Output = QSeries;
    fn add(self, rhs: &'a QSeries) -> QSeries {
        self.combine(rhs, |a, b| a + b)
    }
}

impl<'a> Sub<&'a QSeries> for &'a QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &'a QSeries) -> QSeries {
        self.combine(rhs, |a, b| a - b)
    }
}

impl<'a> Mul<&'a QSeries> for &'a QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &'a QSeries) -> QSeries {
        self.multiply(rhs)
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries {
            valuation: self.valuation,
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<QSeries> for QSeries {
            type Output = QSeries;
            fn $f(self, rhs: QSeries) -> QSeries {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        -&self
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.terms().filter(|(_, c)| !c.is_zero()) {
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (n, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{n}")?,
                (_, false) => write!(f, "{mag}*q^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order)
    }
}
