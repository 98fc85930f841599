//! Formal vectors of the Moonshine module.
//!
//! No basis of `V^natural` is ever built. A vector is a named symbol with a
//! weight, a primary flag and known values of the invariant form; the only
//! modes `u_i v` the engine evaluates are the ones fixed by weight counting
//! (`V_0 = R 1`, `V_1 = 0`, no negative weights), the vacuum axioms, and
//! `u_{2j+1} v = (-1)^j (u, v) 1` for primary `u, v` of weight `j + 1`.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Gl2Error;

/// Label reserved for the vacuum vector.
pub const VACUUM_LABEL: &str = "1";

/// A basis symbol of `V^natural`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NaturalSymbol {
    label: String,
    weight: u32,
    primary: bool,
    /// Known form values `(self, other)` keyed by the other label.
    pairings: BTreeMap<String, BigRational>,
}

impl NaturalSymbol {
    /// A symbol of weight at least 2.
    ///
    /// Weight 0 is spanned by the vacuum ([`NaturalSymbol::vacuum`]) and weight 1 is zero.
    pub fn new(label: impl Into<String>, weight: u32, primary: bool) -> Result<Self, Gl2Error> {
        let label = label.into();
        if label == VACUUM_LABEL {
            return Err(Gl2Error::InvalidSymbol(format!("label {VACUUM_LABEL:?} is reserved for the vacuum")));
        }
        if weight < 2 {
            return Err(Gl2Error::InvalidSymbol(format!(
                "{label} has weight {weight}; V_0 is the vacuum line and V_1 is zero"
            )));
        }
        Ok(Self { label, weight, primary, pairings: BTreeMap::new() })
    }

    /// The vacuum `1`: weight 0, primary, `(1, 1) = -1`.
    pub fn vacuum() -> Self {
        let mut pairings = BTreeMap::new();
        pairings.insert(VACUUM_LABEL.to_string(), -BigRational::one());
        Self { label: VACUUM_LABEL.to_string(), weight: 0, primary: true, pairings }
    }

    /// Records `(self, other) = value`.
    pub fn with_pairing(mut self, other: &str, value: BigRational) -> Self {
        self.pairings.insert(other.to_string(), value);
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn is_primary(&self) -> bool {
        self.primary
    }

    pub fn is_vacuum(&self) -> bool {
        self.weight == 0
    }

    pub fn pairings(&self) -> &BTreeMap<String, BigRational> {
        &self.pairings
    }
}

/// Value of the invariant form on two symbols, if known from either side.
pub fn symbol_pairing(u: &NaturalSymbol, v: &NaturalSymbol) -> Option<BigRational> {
    if u.weight != v.weight {
        return Some(BigRational::zero());
    }
    u.pairings.get(&v.label).or_else(|| v.pairings.get(&u.label)).cloned()
}

impl fmt::Display for NaturalSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)
    }
}

/// A scalar multiple of a [`NaturalSymbol`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FormalNaturalVector {
    pub symbol: NaturalSymbol,
    pub scale: BigRational,
}

impl FormalNaturalVector {
    pub fn new(symbol: NaturalSymbol, scale: BigRational) -> Self {
        Self { symbol, scale }
    }

    pub fn vacuum() -> Self {
        NaturalSymbol::vacuum().into()
    }

    pub fn label(&self) -> &str {
        self.symbol.label()
    }

    pub fn weight(&self) -> u32 {
        self.symbol.weight()
    }

    pub fn is_primary(&self) -> bool {
        self.symbol.is_primary()
    }

    pub fn scaled(&self, c: &BigRational) -> Self {
        Self { symbol: self.symbol.clone(), scale: &self.scale * c }
    }
}

impl From<NaturalSymbol> for FormalNaturalVector {
    fn from(symbol: NaturalSymbol) -> Self {
        Self { symbol, scale: BigRational::one() }
    }
}

impl fmt::Display for FormalNaturalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.scale.is_one() {
            write!(f, "{}", self.symbol)
        } else {
            write!(f, "({}){}", self.scale, self.symbol)
        }
    }
}

/// `(u, v)` for scaled vectors.
pub fn natural_pairing(u: &FormalNaturalVector, v: &FormalNaturalVector) -> Result<BigRational, Gl2Error> {
    let base = symbol_pairing(&u.symbol, &v.symbol).ok_or_else(|| Gl2Error::MissingPairing {
        u: u.label().to_string(),
        v: v.label().to_string(),
    })?;
    Ok(base * &u.scale * &v.scale)
}

fn sign_pow(j: i64) -> BigRational {
    if j.rem_euclid(2) == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

/// `u_i v`, as a multiple of a single symbol, or `None` for zero.
pub fn natural_mode(
    u: &NaturalSymbol,
    i: i64,
    v: &NaturalSymbol,
) -> Result<Option<(NaturalSymbol, BigRational)>, Gl2Error> {
    if u.is_vacuum() {
        // Y(1, x) = id
        return Ok((i == -1).then(|| (v.clone(), BigRational::one())));
    }
    if v.is_vacuum() {
        // Y(u, x) 1 = exp(x L(-1)) u
        return match i {
            i if i >= 0 => Ok(None),
            -1 => Ok(Some((u.clone(), BigRational::one()))),
            _ => Err(Gl2Error::OutsideSpan(format!("{u}_{i} 1 is a multiple of L(-1)^{} {u}", -i - 1))),
        };
    }
    let target = u.weight as i64 + v.weight as i64 - i - 1;
    match target {
        t if t < 0 || t == 1 => Ok(None),
        0 => {
            if !(u.primary && v.primary) {
                return Err(Gl2Error::OutsideSpan(format!(
                    "{u}_{i} {v} needs primary arguments to be evaluated"
                )));
            }
            let pairing = symbol_pairing(u, v).ok_or_else(|| Gl2Error::MissingPairing {
                u: u.label.clone(),
                v: v.label.clone(),
            })?;
            if pairing.is_zero() {
                return Ok(None);
            }
            let sign = sign_pow(u.weight as i64 - 1);
            Ok(Some((NaturalSymbol::vacuum(), sign * pairing)))
        }
        t => Err(Gl2Error::OutsideSpan(format!("{u}_{i} {v} lies in V_{t}"))),
    }
}

/// `u_{2j+1} v` as a multiple of the vacuum, for vectors of weight `j + 1`.
pub fn contraction(j: i64, u: &FormalNaturalVector, v: &FormalNaturalVector) -> Result<BigRational, Gl2Error> {
    let value = natural_mode(&u.symbol, 2 * j + 1, &v.symbol)?;
    Ok(match value {
        Some((sym, c)) if sym.is_vacuum() => c * &u.scale * &v.scale,
        Some((sym, _)) => {
            return Err(Gl2Error::OutsideSpan(format!("{u}_{} {v} = {sym} is not a vacuum multiple", 2 * j + 1)))
        }
        None => BigRational::zero(),
    })
}

/// `v = (-1)^j u / (u, u)`, the partner with `u_{2j+1} v = 1`.
///
/// The returned vector carries `u`'s symbol with the self-pairing recorded.
pub fn normalize_partner(j: i64, u: &FormalNaturalVector, uu: &BigRational) -> Result<FormalNaturalVector, Gl2Error> {
    if !uu.is_positive() {
        return Err(Gl2Error::NonPositiveNorm(uu.to_string()));
    }
    let symbol_norm = uu / (&u.scale * &u.scale);
    let label = u.label().to_string();
    if let Some(existing) = u.symbol.pairings.get(&label) {
        if *existing != symbol_norm {
            return Err(Gl2Error::PairingMismatch {
                expected: existing.to_string(),
                found: symbol_norm.to_string(),
            });
        }
    }
    let symbol = u.symbol.clone().with_pairing(&label, symbol_norm);
    let scale = &u.scale * sign_pow(j) / uu;
    Ok(FormalNaturalVector { symbol, scale })
}
