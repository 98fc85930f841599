//! Virasoro action on `V_{1,1}` from the commutation rule
//! `[L(n), h(-k)] = k h(n-k)` and the action on `iota(a)`.

use num_rational::BigRational;

use super::fock::{axis_apply, heisenberg_apply, Axis, FockBasis, FockState};
use super::vector::LatticeVector;

/// Central charge of `V_{1,1}` (the rank of `II_{1,1}`).
pub const CENTRAL_CHARGE: i64 = 2;

/// Dual coordinate basis: `<e_i, dual(e_j)> = delta_ij`.
fn dual(axis: Axis) -> LatticeVector {
    match axis {
        Axis::E1 => LatticeVector::new(0, -1),
        Axis::E2 => LatticeVector::new(-1, 0),
    }
}

/// `L(n) iota(a)`.
fn on_iota(n: i64, charge: LatticeVector) -> FockState {
    let base = FockState::basis(FockBasis::iota(charge));
    if n >= 1 {
        return FockState::zero();
    }
    if n == 0 {
        return base.scale(&BigRational::new(charge.norm().into(), 2.into()));
    }
    // a(n) iota(a) plus the pure-creation part of (1/2) sum_k :h_i(k) h^i(n-k):
    let mut out = heisenberg_apply(charge, n, &base);
    let half = BigRational::new(1.into(), 2.into());
    for k in (n + 1)..=-1 {
        for axis in Axis::ALL {
            let inner = heisenberg_apply(dual(axis), n - k, &base);
            out += &axis_apply(axis, k, &inner).scale(&half);
        }
    }
    out
}

fn on_basis(n: i64, modes: &[super::fock::Mode], charge: LatticeVector) -> FockState {
    let Some((first, rest)) = modes.split_first() else {
        return on_iota(n, charge);
    };
    let tail = FockBasis { modes: rest.to_vec(), charge };
    let k = first.depth as i64;
    // L(n) h(-k) X = h(-k) L(n) X + k h(n-k) X
    let mut out = axis_apply(first.axis, -k, &on_basis(n, rest, charge));
    out += &axis_apply(first.axis, n - k, &FockState::basis(tail)).scale_int(k);
    out
}

/// `L(n) s`.
pub fn virasoro_apply(n: i64, s: &FockState) -> FockState {
    s.map_terms(|b| on_basis(n, &b.modes, b.charge))
}

/// The conformal vector `(1/2) sum_i h_i(-1) h^i(-1) iota(1) = -e1(-1) e2(-1) iota(1)`.
pub fn conformal_vector() -> FockState {
    let v = FockState::vacuum();
    -&heisenberg_apply(LatticeVector::new(1, 0), -1, &heisenberg_apply(LatticeVector::new(0, 1), -1, &v))
}

/// Whether `L(j) s = 0` for `1 <= j <= depth`.
///
/// `L(j)` lowers the weight by `j` and a term of charge `a` has weight at
/// least `<a,a>/2`, so checks beyond the creation degree plus `|weight|` are
/// redundant and skipped.
pub fn is_primary(s: &FockState, depth: u32) -> bool {
    let bound = s.terms().map(|(b, _)| b.degree() + b.weight().abs()).max().unwrap_or(0).max(1);
    let limit = (depth as i64).min(bound);
    (1..=limit).all(|j| virasoro_apply(j, s).is_zero())
}
