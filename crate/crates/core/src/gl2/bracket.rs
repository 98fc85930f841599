//! The zero-mode bracket `[a + R, b + R] = a_0 b + R` on normal forms.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::One;

use super::element::{CartanVector, MElement};
use super::natural::{natural_mode, NaturalSymbol};
use super::Gl2Error;
use crate::lattice::{
    cocycle, lowest_power, rational_mode_apply, vertex_coeff, FockState, HatLatticeElement, LatticeVector, Sign,
};

/// Which basis element a representative stands for; `None` for the Cartan part.
type BasisKey = Option<(bool, i64, NaturalSymbol)>;

/// A tensor `coefficient * u (x) state` representing a basis element.
struct Representative {
    key: BasisKey,
    coefficient: BigRational,
    natural: NaturalSymbol,
    lattice: FockState,
}

/// Bracket engine for a fixed choice of sections `c_j` of the central extension.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Gl2Engine {
    flipped: BTreeMap<i64, Sign>,
}

fn sign_rational(s: Sign) -> BigRational {
    BigRational::from_integer(s.value().into())
}

impl Gl2Engine {
    /// Sections `c_j = ((1, j), +)` for every `j`.
    pub fn new() -> Self {
        Self::default()
    }

    /// The same engine with `c_j` replaced by `kappa c_j`.
    pub fn with_flipped_section(mut self, j: i64) -> Self {
        let s = self.section_sign(j);
        self.flipped.insert(j, -s);
        self
    }

    fn section_sign(&self, j: i64) -> Sign {
        self.flipped.get(&j).copied().unwrap_or(Sign::Plus)
    }

    /// The lift `c_j` of the simple root `(1, j)`.
    pub fn section(&self, j: i64) -> HatLatticeElement {
        HatLatticeElement::new(LatticeVector::simple_root(j), self.section_sign(j))
    }

    fn representatives(&self, x: &MElement) -> Vec<Representative> {
        let mut out = Vec::new();
        for ((j, u), c) in x.e_part() {
            out.push(Representative {
                key: Some((true, *j, u.clone())),
                coefficient: c.clone(),
                natural: u.clone(),
                lattice: FockState::iota(self.section(*j)),
            });
        }
        for ((j, v), c) in x.f_part() {
            out.push(Representative {
                key: Some((false, *j, v.clone())),
                coefficient: c.clone(),
                natural: v.clone(),
                lattice: FockState::iota(self.section(*j).inverse()),
            });
        }
        let h = x.cartan_part();
        if !h.is_zero() {
            out.push(Representative {
                key: None,
                coefficient: BigRational::one(),
                natural: NaturalSymbol::vacuum(),
                lattice: rational_mode_apply(&h.m, &h.n, -1, &FockState::vacuum()),
            });
        }
        out
    }

    /// The tensor `u (x) state` for an element, one entry per basis term.
    pub fn representative(&self, x: &MElement) -> Vec<(BigRational, NaturalSymbol, FockState)> {
        self.representatives(x).into_iter().map(|r| (r.coefficient, r.natural, r.lattice)).collect()
    }

    /// Rewrites `c * u (x) state` in normal form.
    fn normal_form(&self, c: &BigRational, u: &NaturalSymbol, state: &FockState, out: &mut MElement) -> Result<(), Gl2Error> {
        for (basis, coeff) in state.terms() {
            let coeff = coeff * c;
            let outside = || Gl2Error::OutsideSpan(format!("{u} (x) {basis}"));
            match basis.modes.as_slice() {
                [mode] if mode.depth == 1 && basis.charge.is_zero() && u.is_vacuum() => {
                    out.add_cartan(&CartanVector::from(mode.axis.vector()).scale(&coeff));
                }
                [] => {
                    let lambda = basis.charge;
                    let j = lambda.m * lambda.n;
                    if lambda.m.abs() != 1 || j + 1 != u.weight() as i64 || !(j == -1 || j >= 1) {
                        return Err(outside());
                    }
                    let section = sign_rational(self.section_sign(j));
                    if lambda.m == 1 {
                        // iota((1,j),+) = s_j iota(c_j)
                        out.add_e((j, u.clone()), coeff * section);
                    } else {
                        // iota((-1,-j),+) = s_j eps(c, -c) iota(c_j^{-1})
                        let root = LatticeVector::simple_root(j);
                        let eps = sign_rational(cocycle(root, -root));
                        out.add_f((j, u.clone()), coeff * section * eps);
                    }
                }
                _ => return Err(outside()),
            }
        }
        Ok(())
    }

    /// `[x, y]`, expanded bilinearly over basis elements.
    pub fn bracket(&self, x: &MElement, y: &MElement) -> Result<MElement, Gl2Error> {
        let mut out = MElement::zero();
        for a in self.representatives(x) {
            for b in self.representatives(y) {
                if a.key.is_some() && a.key == b.key {
                    continue;
                }
                let Some(lower) = lowest_power(&a.lattice, &b.lattice)? else {
                    continue;
                };
                let upper = if a.natural.is_vacuum() || b.natural.is_vacuum() {
                    -1
                } else {
                    a.natural.weight() as i64 + b.natural.weight() as i64 - 1
                };
                let c = &a.coefficient * &b.coefficient;
                // coefficient of x^{-1} in Y(u (x) s, x)(v (x) t) is sum_i u_i v (x) [x^i] Y(s, x) t
                for i in lower..=upper {
                    let lattice = vertex_coeff(&a.lattice, &b.lattice, i)?;
                    if lattice.is_zero() {
                        continue;
                    }
                    let Some((w, k)) = natural_mode(&a.natural, i, &b.natural)? else {
                        continue;
                    };
                    self.normal_form(&(&c * k), &w, &lattice, &mut out)?;
                }
            }
        }
        Ok(out)
    }
}

/// `[x, y]` with the default sections.
pub fn bracket(x: &MElement, y: &MElement) -> Result<MElement, Gl2Error> {
    Gl2Engine::new().bracket(x, y)
}
