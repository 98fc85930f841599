use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Element `(m, n)` of `II_{1,1} = Z + Z` with Gram matrix `[[0, -1], [-1, 0]]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeVector {
    pub m: i64,
    pub n: i64,
}

/// `(1, 1)`, the vector called `alpha` in the conformal vector.
pub const ALPHA: LatticeVector = LatticeVector { m: 1, n: 1 };
/// `(1, -1)`, the real simple root.
pub const BETA: LatticeVector = LatticeVector { m: 1, n: -1 };
/// `(0, -1)`, Cartan direction of `h_1`.
pub const T1: LatticeVector = LatticeVector { m: 0, n: -1 };
/// `(-1, 0)`, Cartan direction of `h_2`.
pub const T2: LatticeVector = LatticeVector { m: -1, n: 0 };

impl LatticeVector {
    pub const fn new(m: i64, n: i64) -> Self {
        Self { m, n }
    }

    pub const fn zero() -> Self {
        Self { m: 0, n: 0 }
    }

    /// Simple root `(1, j)` attached to the index `j`.
    pub const fn simple_root(j: i64) -> Self {
        Self { m: 1, n: j }
    }

    pub fn is_zero(&self) -> bool {
        self.m == 0 && self.n == 0
    }

    pub fn pairing(&self, other: &Self) -> i64 {
        -(self.m * other.n + self.n * other.m)
    }

    pub fn norm(&self) -> i64 {
        self.pairing(self)
    }

    /// Reflection in the real root `(1, -1)`: swaps the coordinates.
    pub fn weyl_reflect(&self) -> Self {
        Self { m: self.n, n: self.m }
    }
}

pub fn pairing(u: LatticeVector, v: LatticeVector) -> i64 {
    u.pairing(&v)
}

pub fn weyl_reflect(v: LatticeVector) -> LatticeVector {
    v.weyl_reflect()
}

impl Add for LatticeVector {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.m + rhs.m, self.n + rhs.n)
    }
}

impl Sub for LatticeVector {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.m - rhs.m, self.n - rhs.n)
    }
}

impl Neg for LatticeVector {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.m, -self.n)
    }
}

impl Mul<LatticeVector> for i64 {
    type Output = LatticeVector;
    fn mul(self, rhs: LatticeVector) -> LatticeVector {
        LatticeVector::new(self * rhs.m, self * rhs.n)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

/// An element of the central extension `{+1, -1}`, where `-1` is `kappa`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Self {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self != rhs)
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

/// The 2-cocycle `eps(lambda, mu) = (-1)^{m_lambda n_mu}`.
///
/// It is bilinear and `eps(l, m) eps(m, l) = (-1)^{<l, m>}`.
pub fn cocycle(lambda: LatticeVector, mu: LatticeVector) -> Sign {
    Sign::from_parity((lambda.m * mu.n).rem_euclid(2) == 1)
}

/// Element of the central extension `L^` of `II_{1,1}` by `<kappa>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HatLatticeElement {
    pub lambda: LatticeVector,
    pub sign: Sign,
}

impl HatLatticeElement {
    pub const fn new(lambda: LatticeVector, sign: Sign) -> Self {
        Self { lambda, sign }
    }

    /// The lift `(lambda, +1)`.
    pub const fn lift(lambda: LatticeVector) -> Self {
        Self { lambda, sign: Sign::Plus }
    }

    pub const fn identity() -> Self {
        Self::lift(LatticeVector::zero())
    }

    /// `kappa * self`.
    pub fn kappa(self) -> Self {
        Self { lambda: self.lambda, sign: -self.sign }
    }

    pub fn inverse(self) -> Self {
        Self {
            lambda: -self.lambda,
            sign: self.sign * cocycle(self.lambda, -self.lambda),
        }
    }
}

pub fn hat_multiply(a: HatLatticeElement, b: HatLatticeElement) -> HatLatticeElement {
    HatLatticeElement {
        lambda: a.lambda + b.lambda,
        sign: a.sign * b.sign * cocycle(a.lambda, b.lambda),
    }
}

impl Mul for HatLatticeElement {
    type Output = HatLatticeElement;
    fn mul(self, rhs: HatLatticeElement) -> HatLatticeElement {
        hat_multiply(self, rhs)
    }
}

impl fmt::Display for HatLatticeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Plus => write!(f, "{}", self.lambda),
            Sign::Minus => write!(f, "k{}", self.lambda),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairing_examples() {
        assert_eq!(pairing(BETA, BETA), 2);
        assert_eq!(pairing(ALPHA, ALPHA), -2);
        assert_eq!(pairing(LatticeVector::new(1, 3), LatticeVector::new(-1, -3)), 6);
        assert_eq!(pairing(T1, LatticeVector::simple_root(2)), 1);
        assert_eq!(pairing(T2, LatticeVector::simple_root(2)), 2);
    }

    #[test]
    fn weyl_examples() {
        assert_eq!(weyl_reflect(BETA), LatticeVector::new(-1, 1));
        assert_eq!(weyl_reflect(LatticeVector::zero()), LatticeVector::zero());
    }

    #[test]
    fn inverse_is_two_sided() {
        let a = HatLatticeElement::new(LatticeVector::new(3, -5), Sign::Minus);
        assert_eq!(a * a.inverse(), HatLatticeElement::identity());
        assert_eq!(a.inverse() * a, HatLatticeElement::identity());
    }

    #[test]
    fn product_with_plain_negative_lift() {
        let l = LatticeVector::new(1, 3);
        let p = HatLatticeElement::lift(l) * HatLatticeElement::lift(-l);
        assert_eq!(p, HatLatticeElement::new(LatticeVector::zero(), cocycle(l, -l)));
        assert_eq!(p.sign, Sign::Minus);
    }

    #[test]
    fn coordinate_lifts_anticommute() {
        let a = HatLatticeElement::lift(LatticeVector::new(1, 0));
        let b = HatLatticeElement::lift(LatticeVector::new(0, 1));
        assert_eq!((a * b).lambda, (b * a).lambda);
        assert_eq!((a * b).sign, -(b * a).sign);
    }

    #[test]
    fn kappa_is_central_sign() {
        let a = HatLatticeElement::lift(LatticeVector::new(2, 1));
        let b = HatLatticeElement::lift(LatticeVector::new(1, 1));
        assert_eq!(a.kappa() * b, (a * b).kappa());
        assert_eq!(a * b.kappa(), (a * b).kappa());
    }
}
