//! Coefficients of lattice vertex operators on Fock states.

use num_rational::BigRational;

use super::fock::{axis_apply, heisenberg_apply, schur_sequence, FockBasis, FockState};
use super::vector::{HatLatticeElement, LatticeVector};
use super::LatticeError;

/// Coefficient of `x^power` in `Y(iota(a), x) b`.
///
/// Uses `Y(iota(a), x) = E^-(-a, x) E^+(-a, x) a x^a`: on a term
/// `m iota(b)` the lattice part contributes `x^{<a,b>} iota(ab)`, the
/// annihilation exponential `exp(-sum a(n) x^{-n} / n)` lowers the power by
/// `r` through `p_r(-a(1), -a(2), ...)`, and the creation exponential raises
/// it by `s` through `p_s(a(-1), a(-2), ...)`. For `b = iota(b)` this is
/// `sum_s p_s(a(-1), ...) iota(ab) x^{s + <a,b>}`.
pub fn vertex_iota_coeff(a: HatLatticeElement, b_state: &FockState, power: i64) -> FockState {
    let abar = a.lambda;
    b_state.map_terms(|term| {
        let offset = abar.pairing(&term.charge);
        let product = a * HatLatticeElement::lift(term.charge);
        let sign = BigRational::from_integer(product.sign.value().into());
        let degree = term.degree();
        let lowest = offset - degree;
        if power < lowest {
            return FockState::zero();
        }
        let annihilated = schur_sequence(degree as usize, &FockState::basis(term.clone()), |n, st| {
            heisenberg_apply(-abar, n, st)
        });
        let mut out = FockState::zero();
        for (r, part) in annihilated.iter().enumerate() {
            if part.is_zero() {
                continue;
            }
            let s = power - offset + r as i64;
            if s < 0 {
                continue;
            }
            let shifted = part.with_charge(product.lambda);
            let created = schur_sequence(s as usize, &shifted, |n, st| heisenberg_apply(abar, -n, st));
            out += &created[s as usize];
        }
        out.scale(&sign)
    })
}

enum FieldShape {
    /// `iota(lambda)` with the given coefficient.
    Lattice(LatticeVector),
    /// `axis(-1) iota(1)`, whose vertex operator is the Heisenberg field `axis(x)`.
    Heisenberg(super::fock::Axis),
}

fn field_shape(b: &FockBasis) -> Result<FieldShape, LatticeError> {
    match b.modes.as_slice() {
        [] => Ok(FieldShape::Lattice(b.charge)),
        [m] if m.depth == 1 && b.charge.is_zero() => Ok(FieldShape::Heisenberg(m.axis)),
        _ => Err(LatticeError::UnsupportedState(b.to_string())),
    }
}

/// Coefficient of `x^power` in `Y(a_state, x) b_state` for `a_state` a
/// combination of lattice vectors `iota(lambda)` and Heisenberg vectors
/// `h(-1) iota(1)`.
pub fn vertex_coeff(a_state: &FockState, b_state: &FockState, power: i64) -> Result<FockState, LatticeError> {
    let mut out = FockState::zero();
    for (term, c) in a_state.terms() {
        let piece = match field_shape(term)? {
            FieldShape::Lattice(lambda) => vertex_iota_coeff(HatLatticeElement::lift(lambda), b_state, power),
            // h(x) = sum h(n) x^{-n-1}
            FieldShape::Heisenberg(axis) => axis_apply(axis, -power - 1, b_state),
        };
        out += &piece.scale(c);
    }
    Ok(out)
}

/// Smallest power of `x` that can appear in `Y(a_state, x) b_state`.
///
/// Returns `None` when either state is zero.
pub fn lowest_power(a_state: &FockState, b_state: &FockState) -> Result<Option<i64>, LatticeError> {
    let mut lowest: Option<i64> = None;
    for (term, _) in a_state.terms() {
        let shape = field_shape(term)?;
        for (b, _) in b_state.terms() {
            let p = match shape {
                FieldShape::Lattice(lambda) => lambda.pairing(&b.charge) - b.degree(),
                FieldShape::Heisenberg(_) => -1 - b.degree(),
            };
            lowest = Some(lowest.map_or(p, |l| l.min(p)));
        }
    }
    Ok(lowest)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::vector::{cocycle, Sign, BETA};

    fn iota(l: LatticeVector) -> FockState {
        FockState::iota(HatLatticeElement::lift(l))
    }

    #[test]
    fn beta_against_inverse_gives_cartan() {
        let a = HatLatticeElement::lift(BETA);
        let b = FockState::iota(a.inverse());
        // <beta, -beta> = -2, so x^{-1} carries p_1 = beta(-1)
        let c = vertex_iota_coeff(a, &b, -1);
        assert_eq!(c, FockState::cartan(BETA));
        assert_eq!(vertex_iota_coeff(a, &b, -2), FockState::vacuum());
        assert!(vertex_iota_coeff(a, &b, -3).is_zero());
    }

    #[test]
    fn plain_lift_carries_cocycle_sign() {
        let a = HatLatticeElement::lift(BETA);
        let c = vertex_iota_coeff(a, &iota(-BETA), -1);
        let sign = cocycle(BETA, -BETA);
        assert_eq!(sign, Sign::Minus);
        assert_eq!(c, FockState::cartan(BETA).scale_int(sign.value()));
    }

    #[test]
    fn real_root_against_imaginary_partner_vanishes() {
        let a = HatLatticeElement::lift(BETA);
        for j in 1..=5 {
            let b = iota(LatticeVector::new(-1, -j));
            assert!(vertex_iota_coeff(a, &b, -1).is_zero(), "j = {j}");
        }
    }

    #[test]
    fn below_leading_power_is_zero() {
        let a = HatLatticeElement::lift(LatticeVector::new(2, 1));
        let b = iota(LatticeVector::new(1, 1));
        let lead = LatticeVector::new(2, 1).pairing(&LatticeVector::new(1, 1));
        assert!(vertex_iota_coeff(a, &b, lead - 1).is_zero());
        assert!(!vertex_iota_coeff(a, &b, lead).is_zero());
    }

    #[test]
    fn heisenberg_field_coefficients() {
        let h = FockState::cartan(LatticeVector::new(1, 0));
        let c = iota(LatticeVector::new(0, 3));
        // x^{-1} coefficient is the zero mode
        let zero_mode = vertex_coeff(&h, &c, -1).unwrap();
        assert_eq!(zero_mode, c.scale_int(-3));
        assert_eq!(lowest_power(&h, &c).unwrap(), Some(-1));
    }

    #[test]
    fn unsupported_field_is_an_error() {
        let s = heisenberg_apply(BETA, -2, &FockState::vacuum());
        assert!(matches!(
            vertex_coeff(&s, &FockState::vacuum(), 0),
            Err(LatticeError::UnsupportedState(_))
        ));
    }
}
