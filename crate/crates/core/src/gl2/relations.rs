//! The subalgebras `gl2(j, u, v)` and their defining relations.

use std::fmt;

use num_rational::BigRational;
use num_traits::One;

use super::bracket::Gl2Engine;
use super::element::MElement;
use super::natural::{contraction, FormalNaturalVector};
use super::Gl2Error;
use crate::lattice::{is_primary, virasoro_apply, weight_of, FockState, LatticeVector};

fn check_index(j: i64) -> Result<(), Gl2Error> {
    if j == -1 || j >= 1 {
        Ok(())
    } else {
        Err(Gl2Error::InvalidIndex(j))
    }
}

/// Entry `A(i, j) = -(i + j) = <(1, i), (1, j)>` of the Cartan matrix.
pub fn cartan_entry(i: i64, j: i64) -> Result<i64, Gl2Error> {
    check_index(i)?;
    check_index(j)?;
    Ok(-(i + j))
}

/// Generators `e_{j,u}`, `f_{j,v}`, `h1`, `h2` of `gl2(j, u, v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gl2Generators {
    pub j: i64,
    pub u: FormalNaturalVector,
    pub v: FormalNaturalVector,
    pub e: MElement,
    pub f: MElement,
    pub h1: MElement,
    pub h2: MElement,
}

impl Gl2Generators {
    /// `h = h1 - h2`, the coroot of the real simple root.
    pub fn h(&self) -> MElement {
        &self.h1 - &self.h2
    }

    /// `z = -(h1 + h2)`.
    pub fn z(&self) -> MElement {
        -&(&self.h1 + &self.h2)
    }
}

/// Builds `gl2(j, u, v)` after checking that `u, v` are primary of weight
/// `j + 1` with `u_{2j+1} v = 1`.
pub fn make_gl2(j: i64, u: &FormalNaturalVector, v: &FormalNaturalVector) -> Result<Gl2Generators, Gl2Error> {
    check_index(j)?;
    for w in [u, v] {
        if !w.is_primary() {
            return Err(Gl2Error::NotPrimary(w.label().to_string()));
        }
        if w.weight() as i64 != j + 1 {
            return Err(Gl2Error::WeightMismatch { label: w.label().to_string(), expected: j + 1, found: w.weight() });
        }
    }
    let value = contraction(j, u, v)?;
    if !value.is_one() {
        return Err(Gl2Error::PairingMismatch { expected: "1".to_string(), found: value.to_string() });
    }
    Ok(Gl2Generators {
        j,
        u: u.clone(),
        v: v.clone(),
        e: MElement::e(j, u),
        f: MElement::f(j, v),
        h1: MElement::h1(),
        h2: MElement::h2(),
    })
}

/// Which family a checked relation belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelationGroup {
    /// The six relations of `gl2(j, u, v)`.
    Gl2,
    /// `[e, f] = h`, `[h, e] = 2e`, `[h, f] = -2f` for the real simple root.
    RealSl2,
    /// Cartan action on `e_{-1}`, `f_{-1}` and `[e_{-1}, f_{-1}] = h1 - h2`.
    RealRoot,
    /// `[e_{-1}, f_j] = 0` and `[e_j, f_{-1}] = 0`.
    Cross,
}

impl fmt::Display for RelationGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            RelationGroup::Gl2 => "gl2",
            RelationGroup::RealSl2 => "sl2(-1)",
            RelationGroup::RealRoot => "real-root",
            RelationGroup::Cross => "cross",
        };
        f.write_str(name)
    }
}

/// One evaluated relation `[x, y] = expected`.
#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub group: RelationGroup,
    pub name: String,
    pub expected: MElement,
    pub actual: Result<MElement, Gl2Error>,
}

impl RelationCheck {
    pub fn passed(&self) -> bool {
        matches!(&self.actual, Ok(x) if *x == self.expected)
    }
}

#[derive(Clone, Debug)]
pub struct Gl2Report {
    pub j: i64,
    pub checks: Vec<RelationCheck>,
}

impl Gl2Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(RelationCheck::passed)
    }

    /// `(passed, total)` within a group.
    pub fn tally(&self, group: RelationGroup) -> (usize, usize) {
        let in_group: Vec<_> = self.checks.iter().filter(|c| c.group == group).collect();
        (in_group.iter().filter(|c| c.passed()).count(), in_group.len())
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

/// Evaluates the relations among `e_{j,u}`, `f_{j,v}`, `h1`, `h2`, `e_{-1}`, `f_{-1}`.
pub fn verify_relations(j: i64, u: &FormalNaturalVector, v: &FormalNaturalVector) -> Result<Gl2Report, Gl2Error> {
    verify_relations_with(&Gl2Engine::new(), j, u, v)
}

/// [`verify_relations`] with an explicit choice of sections.
pub fn verify_relations_with(
    engine: &Gl2Engine,
    j: i64,
    u: &FormalNaturalVector,
    v: &FormalNaturalVector,
) -> Result<Gl2Report, Gl2Error> {
    let g = make_gl2(j, u, v)?;
    let (e, f, h1, h2) = (&g.e, &g.f, &g.h1, &g.h2);
    let er = MElement::e_real();
    let fr = MElement::f_real();
    let h = g.h();
    let zero = MElement::zero();

    let mut checks = Vec::new();
    let mut check = |group, name: &str, x: &MElement, y: &MElement, expected: MElement| {
        checks.push(RelationCheck { group, name: name.to_string(), expected, actual: engine.bracket(x, y) });
    };

    check(RelationGroup::Gl2, "[h1,e]=e", h1, e, e.clone());
    check(RelationGroup::Gl2, "[h2,e]=je", h2, e, e.scale_int(j));
    check(RelationGroup::Gl2, "[h1,f]=-f", h1, f, f.scale_int(-1));
    check(RelationGroup::Gl2, "[h2,f]=-jf", h2, f, f.scale_int(-j));
    check(RelationGroup::Gl2, "[e,f]=-(j*h1+h2)", e, f, -&(&h1.scale_int(j) + h2));
    check(RelationGroup::Gl2, "[h1,h2]=0", h1, h2, zero.clone());

    check(RelationGroup::RealSl2, "[e-1,f-1]=h", &er, &fr, h.clone());
    check(RelationGroup::RealSl2, "[h,e-1]=2e-1", &h, &er, er.scale_int(2));
    check(RelationGroup::RealSl2, "[h,f-1]=-2f-1", &h, &fr, fr.scale_int(-2));

    check(RelationGroup::RealRoot, "[h1,e-1]=e-1", h1, &er, er.clone());
    check(RelationGroup::RealRoot, "[h2,e-1]=-e-1", h2, &er, er.scale_int(-1));
    check(RelationGroup::RealRoot, "[h1,f-1]=-f-1", h1, &fr, fr.scale_int(-1));
    check(RelationGroup::RealRoot, "[h2,f-1]=f-1", h2, &fr, fr.clone());
    check(RelationGroup::RealRoot, "[e-1,f-1]=h1-h2", &er, &fr, h1 - h2);

    if j >= 1 {
        check(RelationGroup::Cross, "[e-1,f]=0", &er, f, zero.clone());
        check(RelationGroup::Cross, "[e,f-1]=0", e, &fr, zero);
    }
    Ok(Gl2Report { j, checks })
}

/// Whether `u (x) iota(c_j)` is a primary vector of weight 1.
///
/// Uses `L(n)(x (x) y) = L(n)x (x) y + x (x) L(n)y`: with `u` primary only
/// the lattice factor needs checking.
pub fn primality_of_representatives(j: i64, u: &FormalNaturalVector) -> bool {
    if check_index(j).is_err() || !u.is_primary() || u.weight() as i64 != j + 1 {
        return false;
    }
    let lattice = FockState::iota(Gl2Engine::new().section(j));
    let Some(lattice_weight) = weight_of(&lattice) else {
        return false;
    };
    let total = u.weight() as i64 + lattice_weight;
    let l0 = virasoro_apply(0, &lattice);
    total == 1 && l0 == lattice.scale(&BigRational::from_integer(lattice_weight.into())) && is_primary(&lattice, 8)
}

/// The root carried by `e_{j,u}`.
pub fn simple_root(j: i64) -> LatticeVector {
    LatticeVector::simple_root(j)
}
