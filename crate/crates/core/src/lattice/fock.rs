//! Fock states of `V_{1,1} = S(h^-) (x) R{L}` and the Heisenberg action.
//!
//! Creation operators are expanded in the coordinate basis `e1 = (1,0)`,
//! `e2 = (0,1)` of `h = L (x) R`, so a monomial is a sorted multiset of
//! `(axis, depth)` pairs and every state has exactly one representation.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::vector::{HatLatticeElement, LatticeVector};

/// Coordinate direction in `h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axis {
    E1,
    E2,
}

impl Axis {
    pub const ALL: [Axis; 2] = [Axis::E1, Axis::E2];

    pub fn vector(self) -> LatticeVector {
        match self {
            Axis::E1 => LatticeVector::new(1, 0),
            Axis::E2 => LatticeVector::new(0, 1),
        }
    }

    /// Component of `v` along this axis.
    pub fn component(self, v: LatticeVector) -> i64 {
        match self {
            Axis::E1 => v.m,
            Axis::E2 => v.n,
        }
    }

    pub fn pairing(self, v: LatticeVector) -> i64 {
        self.vector().pairing(&v)
    }
}

/// Creation operator `axis(-depth)`, `depth >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mode {
    pub axis: Axis,
    pub depth: u32,
}

/// Basis vector `axis_1(-d_1) ... axis_k(-d_k) iota(charge, +1)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FockBasis {
    /// Sorted multiset of creation modes.
    pub modes: Vec<Mode>,
    pub charge: LatticeVector,
}

impl FockBasis {
    pub fn iota(charge: LatticeVector) -> Self {
        Self { modes: Vec::new(), charge }
    }

    /// Sum of the creation depths.
    pub fn degree(&self) -> i64 {
        self.modes.iter().map(|m| m.depth as i64).sum()
    }

    /// `L(0)`-eigenvalue `<c,c>/2 + n_1 + ... + n_k`.
    pub fn weight(&self) -> i64 {
        self.charge.norm() / 2 + self.degree()
    }

    fn with_mode(&self, mode: Mode) -> Self {
        let mut modes = self.modes.clone();
        let at = modes.partition_point(|m| *m <= mode);
        modes.insert(at, mode);
        Self { modes, charge: self.charge }
    }

    fn without_index(&self, idx: usize) -> Self {
        let mut modes = self.modes.clone();
        modes.remove(idx);
        Self { modes, charge: self.charge }
    }
}

/// Finite linear combination of [`FockBasis`] vectors with exact rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FockState {
    terms: BTreeMap<FockBasis, BigRational>,
}

impl FockState {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `iota(1)`, the vacuum.
    pub fn vacuum() -> Self {
        Self::basis(FockBasis::iota(LatticeVector::zero()))
    }

    pub fn basis(b: FockBasis) -> Self {
        Self::from_term(b, BigRational::one())
    }

    pub fn from_term(b: FockBasis, c: BigRational) -> Self {
        let mut s = Self::zero();
        s.add_term(b, c);
        s
    }

    /// `iota(a)`; a `kappa` sign becomes a negated coefficient.
    pub fn iota(a: HatLatticeElement) -> Self {
        let c = BigRational::from_integer(BigInt::from(a.sign.value()));
        Self::from_term(FockBasis::iota(a.lambda), c)
    }

    /// `lambda(-1) iota(1)`.
    pub fn cartan(lambda: LatticeVector) -> Self {
        heisenberg_apply(lambda, -1, &Self::vacuum())
    }

    pub fn add_term(&mut self, b: FockBasis, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FockBasis, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, b: &FockBasis) -> BigRational {
        self.terms.get(b).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(b, v)| (b.clone(), v * c)).collect() }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&BigRational::from_integer(c.into()))
    }

    /// Largest creation degree over all terms (0 for the zero state).
    pub fn max_degree(&self) -> i64 {
        self.terms.keys().map(FockBasis::degree).max().unwrap_or(0)
    }

    /// Applies `f` to every basis term and sums the results with the term coefficients.
    pub fn map_terms(&self, mut f: impl FnMut(&FockBasis) -> FockState) -> FockState {
        let mut out = FockState::zero();
        for (b, c) in &self.terms {
            out += &f(b).scale(c);
        }
        out
    }

    /// Replaces the lattice charge of every term.
    pub(crate) fn with_charge(&self, charge: LatticeVector) -> FockState {
        let mut out = FockState::zero();
        for (b, c) in &self.terms {
            out.add_term(FockBasis { modes: b.modes.clone(), charge }, c.clone());
        }
        out
    }
}

impl std::ops::AddAssign<&FockState> for FockState {
    fn add_assign(&mut self, rhs: &FockState) {
        for (b, c) in &rhs.terms {
            self.add_term(b.clone(), c.clone());
        }
    }
}

impl Add<&FockState> for &FockState {
    type Output = FockState;
    fn add(self, rhs: &FockState) -> FockState {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for FockState {
    type Output = FockState;
    fn add(mut self, rhs: FockState) -> FockState {
        self += &rhs;
        self
    }
}

impl Neg for &FockState {
    type Output = FockState;
    fn neg(self) -> FockState {
        self.scale_int(-1)
    }
}

impl Sub<&FockState> for &FockState {
    type Output = FockState;
    fn sub(self, rhs: &FockState) -> FockState {
        self + &(-rhs)
    }
}

impl Sub for FockState {
    type Output = FockState;
    fn sub(self, rhs: FockState) -> FockState {
        &self - &rhs
    }
}

impl fmt::Display for FockBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.modes {
            let name = match m.axis {
                Axis::E1 => "e1",
                Axis::E2 => "e2",
            };
            write!(f, "{name}(-{})", m.depth)?;
        }
        write!(f, "i{}", self.charge)
    }
}

impl fmt::Display for FockState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}){b}")?;
        }
        Ok(())
    }
}

/// `axis(n)` on a single basis vector.
fn axis_on_basis(axis: Axis, n: i64, b: &FockBasis) -> FockState {
    match n {
        n if n < 0 => FockState::basis(b.with_mode(Mode { axis, depth: (-n) as u32 })),
        0 => {
            let p = axis.pairing(b.charge);
            FockState::from_term(b.clone(), BigRational::from_integer(p.into()))
        }
        n => {
            // axis(n) mu(-n) = mu(-n) axis(n) + n <axis, mu>
            let mut out = FockState::zero();
            for (idx, mode) in b.modes.iter().enumerate() {
                if mode.depth as i64 != n {
                    continue;
                }
                let p = axis.vector().pairing(&mode.axis.vector());
                if p != 0 {
                    out.add_term(b.without_index(idx), BigRational::from_integer((n * p).into()));
                }
            }
            out
        }
    }
}

pub(crate) fn axis_apply(axis: Axis, n: i64, s: &FockState) -> FockState {
    s.map_terms(|b| axis_on_basis(axis, n, b))
}

/// `h(n)` for `h = x e1 + y e2` with rational coordinates.
pub(crate) fn rational_mode_apply(x: &BigRational, y: &BigRational, n: i64, s: &FockState) -> FockState {
    let mut out = axis_apply(Axis::E1, n, s).scale(x);
    out += &axis_apply(Axis::E2, n, s).scale(y);
    out
}

/// Heisenberg mode `lambda(n)` acting on `s`.
///
/// Negative `n` creates, positive `n` contracts against creation operators
/// through `[lambda(m), mu(n)] = <lambda, mu> m delta_{m+n,0}`, and `n = 0`
/// multiplies by `<lambda, charge>`.
pub fn heisenberg_apply(lambda: LatticeVector, n: i64, s: &FockState) -> FockState {
    let mut out = FockState::zero();
    for axis in Axis::ALL {
        let k = axis.component(lambda);
        if k != 0 {
            out += &axis_apply(axis, n, s).scale_int(k);
        }
    }
    out
}

/// `p_0, ..., p_r` of the operator sequence `x_1, x_2, ...`, applied to `s`,
/// via `k p_k = sum_{n=1}^k x_n p_{k-n}`.
pub(crate) fn schur_sequence(
    r: usize,
    s: &FockState,
    mut op: impl FnMut(i64, &FockState) -> FockState,
) -> Vec<FockState> {
    let mut seq: Vec<FockState> = Vec::with_capacity(r + 1);
    seq.push(s.clone());
    for k in 1..=r {
        let mut acc = FockState::zero();
        for n in 1..=k {
            acc += &op(n as i64, &seq[k - n]);
        }
        seq.push(acc.scale(&BigRational::new(BigInt::one(), BigInt::from(k))));
    }
    seq
}

/// `p_r(lambda(-1), lambda(-2), ...)` applied to `s`.
pub fn schur_apply(lambda: LatticeVector, r: usize, s: &FockState) -> FockState {
    schur_sequence(r, s, |n, st| heisenberg_apply(lambda, -n, st)).pop().expect("nonempty")
}

/// `L(0)`-eigenvalue of `s`, or `None` when `s` is zero or mixes weights.
pub fn weight_of(s: &FockState) -> Option<i64> {
    let mut weights = s.terms().map(|(b, _)| b.weight());
    let first = weights.next()?;
    weights.all(|w| w == first).then_some(first)
}
