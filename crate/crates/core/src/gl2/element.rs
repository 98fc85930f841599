//! Normal forms for the slice of the Monster Lie algebra spanned by
//! `e_{j,u}`, `f_{j,v}` and the Cartan subalgebra.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::natural::{FormalNaturalVector, NaturalSymbol};
use crate::lattice::{LatticeVector, T1, T2};

/// A vector of `h = II_{1,1} (x) R` in lattice coordinates.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CartanVector {
    pub m: BigRational,
    pub n: BigRational,
}

impl CartanVector {
    pub fn new(m: BigRational, n: BigRational) -> Self {
        Self { m, n }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero() && self.n.is_zero()
    }

    /// `<self, lambda>` for an integral `lambda`.
    pub fn pairing(&self, lambda: LatticeVector) -> BigRational {
        let m = BigRational::from_integer(lambda.m.into());
        let n = BigRational::from_integer(lambda.n.into());
        -(&self.m * n + &self.n * m)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self { m: &self.m * c, n: &self.n * c }
    }
}

impl From<LatticeVector> for CartanVector {
    fn from(v: LatticeVector) -> Self {
        Self { m: BigRational::from_integer(v.m.into()), n: BigRational::from_integer(v.n.into()) }
    }
}

impl Add<&CartanVector> for &CartanVector {
    type Output = CartanVector;
    fn add(self, rhs: &CartanVector) -> CartanVector {
        CartanVector { m: &self.m + &rhs.m, n: &self.n + &rhs.n }
    }
}

impl fmt::Display for CartanVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.m, self.n)
    }
}

/// Index set of root vectors: `(j, symbol)`.
pub type RootKey = (i64, NaturalSymbol);

/// A normal form `sum a e_{j,u} + sum b f_{j,v} + h`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MElement {
    e_part: BTreeMap<RootKey, BigRational>,
    f_part: BTreeMap<RootKey, BigRational>,
    cartan: CartanVector,
}

fn add_into(map: &mut BTreeMap<RootKey, BigRational>, key: RootKey, c: BigRational) {
    if c.is_zero() {
        return;
    }
    let slot = map.entry(key.clone()).or_insert_with(BigRational::zero);
    *slot += c;
    if slot.is_zero() {
        map.remove(&key);
    }
}

impl MElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `e_{j,u}`; the scale of `u` becomes the coefficient.
    pub fn e(j: i64, u: &FormalNaturalVector) -> Self {
        let mut out = Self::zero();
        add_into(&mut out.e_part, (j, u.symbol.clone()), u.scale.clone());
        out
    }

    /// `f_{j,v}`.
    pub fn f(j: i64, v: &FormalNaturalVector) -> Self {
        let mut out = Self::zero();
        add_into(&mut out.f_part, (j, v.symbol.clone()), v.scale.clone());
        out
    }

    /// `e_{-1}`.
    pub fn e_real() -> Self {
        Self::e(-1, &FormalNaturalVector::vacuum())
    }

    /// `f_{-1}`.
    pub fn f_real() -> Self {
        Self::f(-1, &FormalNaturalVector::vacuum())
    }

    pub fn cartan(h: CartanVector) -> Self {
        Self { cartan: h, ..Self::zero() }
    }

    pub fn h1() -> Self {
        Self::cartan(T1.into())
    }

    pub fn h2() -> Self {
        Self::cartan(T2.into())
    }

    pub fn is_zero(&self) -> bool {
        self.e_part.is_empty() && self.f_part.is_empty() && self.cartan.is_zero()
    }

    pub fn e_part(&self) -> &BTreeMap<RootKey, BigRational> {
        &self.e_part
    }

    pub fn f_part(&self) -> &BTreeMap<RootKey, BigRational> {
        &self.f_part
    }

    pub fn cartan_part(&self) -> &CartanVector {
        &self.cartan
    }

    pub(crate) fn add_e(&mut self, key: RootKey, c: BigRational) {
        add_into(&mut self.e_part, key, c);
    }

    pub(crate) fn add_f(&mut self, key: RootKey, c: BigRational) {
        add_into(&mut self.f_part, key, c);
    }

    pub(crate) fn add_cartan(&mut self, h: &CartanVector) {
        self.cartan = &self.cartan + h;
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::cartan(self.cartan.scale(c));
        for (k, v) in &self.e_part {
            add_into(&mut out.e_part, k.clone(), v * c);
        }
        for (k, v) in &self.f_part {
            add_into(&mut out.f_part, k.clone(), v * c);
        }
        out
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&BigRational::from_integer(c.into()))
    }

    /// The root of a homogeneous element: `(1, j)` for `e_j`, `(-1, -j)`
    /// for `f_j`, zero for Cartan elements. `None` for mixed or zero elements.
    pub fn root(&self) -> Option<LatticeVector> {
        let mut roots = self
            .e_part
            .keys()
            .map(|(j, _)| LatticeVector::simple_root(*j))
            .chain(self.f_part.keys().map(|(j, _)| -LatticeVector::simple_root(*j)));
        if !self.cartan.is_zero() {
            return if self.e_part.is_empty() && self.f_part.is_empty() { Some(LatticeVector::zero()) } else { None };
        }
        let first = roots.next()?;
        roots.all(|r| r == first).then_some(first)
    }
}

impl Add<&MElement> for &MElement {
    type Output = MElement;
    fn add(self, rhs: &MElement) -> MElement {
        let mut out = self.clone();
        for (k, v) in &rhs.e_part {
            out.add_e(k.clone(), v.clone());
        }
        for (k, v) in &rhs.f_part {
            out.add_f(k.clone(), v.clone());
        }
        out.add_cartan(&rhs.cartan);
        out
    }
}

impl Neg for &MElement {
    type Output = MElement;
    fn neg(self) -> MElement {
        self.scale(&-BigRational::one())
    }
}

impl Sub<&MElement> for &MElement {
    type Output = MElement;
    fn sub(self, rhs: &MElement) -> MElement {
        self + &(-rhs)
    }
}

impl fmt::Display for MElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for ((j, u), c) in &self.e_part {
            parts.push(format!("({c}) e[{j},{u}]"));
        }
        for ((j, v), c) in &self.f_part {
            parts.push(format!("({c}) f[{j},{v}]"));
        }
        if !self.cartan.is_zero() {
            parts.push(format!("h{}", self.cartan));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
