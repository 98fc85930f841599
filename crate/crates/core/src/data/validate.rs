use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{Dataset, SEED_INDICES};
use crate::qseries::j_coefficients;

/// One failed invariant; every variant names the offending class where there is one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NoClasses,
    DuplicateClass { class: String },
    NegativeClassSize { class: String, size: BigInt },
    UnknownPower2 { class: String, target: String },
    MissingSeed { class: String, index: i64 },
    LeadingSeedNotOne { class: String, value: BigInt },
    IdentityClassSize { class: String, size: BigInt },
    IdentityPower2 { class: String, power2: String },
    IdentitySeedMismatch { class: String, index: i64, expected: BigInt, found: BigInt },
    OrderMismatch { declared: BigInt, sum: BigInt },
    TrivialCharacterNotOne { class: String, value: BigInt },
    CharacterUnknownClass { index: u32, class: String },
    CharacterMissingClass { index: u32, class: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoClasses => write!(f, "no classes"),
            Violation::DuplicateClass { class } => write!(f, "class {class}: listed more than once"),
            Violation::NegativeClassSize { class, size } => write!(f, "class {class}: negative size {size}"),
            Violation::UnknownPower2 { class, target } => write!(f, "class {class}: power2 {target:?} is not a class"),
            Violation::MissingSeed { class, index } => write!(f, "class {class}: missing seed C(g,{index})"),
            Violation::LeadingSeedNotOne { class, value } => write!(f, "class {class}: C(g,-1) = {value}, expected 1"),
            Violation::IdentityClassSize { class, size } => {
                write!(f, "class {class}: identity class has size {size}, expected 1")
            }
            Violation::IdentityPower2 { class, power2 } => {
                write!(f, "class {class}: identity class squares to {power2}")
            }
            Violation::IdentitySeedMismatch { class, index, expected, found } => {
                write!(f, "class {class}: C(1,{index}) = {found}, but J has {expected}")
            }
            Violation::OrderMismatch { declared, sum } => {
                write!(f, "group_order {declared} differs from the sum of class sizes {sum}")
            }
            Violation::TrivialCharacterNotOne { class, value } => {
                write!(f, "class {class}: trivial character value {value}, expected 1")
            }
            Violation::CharacterUnknownClass { index, class } => {
                write!(f, "class {class}: character {index} refers to an unknown class")
            }
            Violation::CharacterMissingClass { index, class } => {
                write!(f, "class {class}: character {index} has no value")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every dataset invariant and lists the violations.
pub fn validate_dataset(d: &Dataset) -> ValidationReport {
    let mut out = Vec::new();
    let Some(identity) = d.identity() else {
        return ValidationReport { violations: vec![Violation::NoClasses] };
    };

    let mut seen = BTreeSet::new();
    for c in &d.classes {
        if !seen.insert(c.name.as_str()) {
            out.push(Violation::DuplicateClass { class: c.name.clone() });
        }
        if c.class_size.is_negative() {
            out.push(Violation::NegativeClassSize { class: c.name.clone(), size: c.class_size.clone() });
        }
        // g -> g^2 -> g^4 must resolve, since the recursions read C(g^2, .)
        let mut current = c;
        for _ in 0..2 {
            match d.class(&current.power2) {
                Some(next) => current = next,
                None => {
                    out.push(Violation::UnknownPower2 { class: current.name.clone(), target: current.power2.clone() });
                    break;
                }
            }
        }
        for j in SEED_INDICES {
            if c.seed(j).is_none() {
                out.push(Violation::MissingSeed { class: c.name.clone(), index: j });
            }
        }
        if let Some(lead) = c.seed(-1) {
            if !lead.is_one() {
                out.push(Violation::LeadingSeedNotOne { class: c.name.clone(), value: lead.clone() });
            }
        }
    }
    out.dedup();

    if !identity.class_size.is_one() {
        out.push(Violation::IdentityClassSize { class: identity.name.clone(), size: identity.class_size.clone() });
    }
    if identity.power2 != identity.name {
        out.push(Violation::IdentityPower2 { class: identity.name.clone(), power2: identity.power2.clone() });
    }
    let c = j_coefficients(5).expect("J coefficients up to q^5");
    // C(g, -1) is covered for every class above
    for j in SEED_INDICES.into_iter().filter(|&j| j != -1) {
        let expected = &c[(j + 1) as usize];
        if let Some(found) = identity.seed(j) {
            if found != expected {
                out.push(Violation::IdentitySeedMismatch {
                    class: identity.name.clone(),
                    index: j,
                    expected: expected.clone(),
                    found: found.clone(),
                });
            }
        }
    }

    let sum = d.sum_of_class_sizes();
    if sum != d.group_order {
        out.push(Violation::OrderMismatch { declared: d.group_order.clone(), sum });
    }

    if let Some(table) = &d.characters {
        for (&k, row) in table {
            for class in row.keys() {
                if d.class(class).is_none() {
                    out.push(Violation::CharacterUnknownClass { index: k, class: class.clone() });
                }
            }
            for c in &d.classes {
                match row.get(&c.name) {
                    None => out.push(Violation::CharacterMissingClass { index: k, class: c.name.clone() }),
                    Some(v) if k == 1 && !v.is_one() => {
                        out.push(Violation::TrivialCharacterNotOne { class: c.name.clone(), value: v.clone() })
                    }
                    Some(_) => {}
                }
            }
        }
    }
    ValidationReport { violations: out }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::ClassRecord;
    use std::collections::BTreeMap;

    fn toy() -> Dataset {
        Dataset::trivial_group()
    }

    fn zero_class(name: &str, power2: &str, size: i64) -> ClassRecord {
        let mut seeds: BTreeMap<i64, BigInt> = SEED_INDICES.iter().map(|&j| (j, BigInt::from(0))).collect();
        seeds.insert(-1, BigInt::from(1));
        ClassRecord { name: name.into(), class_size: size.into(), power2: power2.into(), seeds }
    }

    #[test]
    fn toy_is_valid() {
        assert_eq!(validate_dataset(&toy()), ValidationReport::default());
    }

    #[test]
    fn injected_leading_coefficient() {
        let mut d = toy();
        d.classes[0].seeds.insert(-1, BigInt::from(2));
        let r = validate_dataset(&d);
        assert_eq!(r.violations.len(), 1);
        assert!(matches!(&r.violations[0], Violation::LeadingSeedNotOne { class, .. } if class == "1A"));
    }

    #[test]
    fn order_must_be_sum_of_sizes() {
        let mut d = toy();
        d.classes.push(zero_class("2A", "1A", 3));
        d.group_order = BigInt::from(5);
        let r = validate_dataset(&d);
        assert_eq!(r.violations, vec![Violation::OrderMismatch { declared: 5.into(), sum: 4.into() }]);
    }

    #[test]
    fn unknown_power2_is_named() {
        let mut d = toy();
        d.classes.push(zero_class("4A", "2B", 1));
        d.group_order = BigInt::from(2);
        let r = validate_dataset(&d);
        assert!(r.violations.contains(&Violation::UnknownPower2 { class: "4A".into(), target: "2B".into() }));
    }

    #[test]
    fn fourth_power_walk() {
        // 8A -> 4A -> 2Z, with 2Z missing: the failure is reported at 4A
        let mut d = toy();
        d.classes.push(zero_class("8A", "4A", 1));
        d.classes.push(zero_class("4A", "2Z", 1));
        d.group_order = BigInt::from(3);
        let r = validate_dataset(&d);
        assert_eq!(r.violations, vec![Violation::UnknownPower2 { class: "4A".into(), target: "2Z".into() }]);
    }

    #[test]
    fn missing_seed_and_identity_mismatch() {
        let mut d = toy();
        d.classes[0].seeds.remove(&3);
        d.classes[0].seeds.insert(2, BigInt::from(7));
        let r = validate_dataset(&d);
        assert!(r.violations.contains(&Violation::MissingSeed { class: "1A".into(), index: 3 }));
        assert!(r
            .violations
            .iter()
            .any(|v| matches!(v, Violation::IdentitySeedMismatch { index: 2, .. })));
    }

    #[test]
    fn trivial_character_must_be_one() {
        let mut d = toy();
        let mut row = BTreeMap::new();
        row.insert("1A".to_string(), BigInt::from(2));
        d.characters = Some(BTreeMap::from([(1, row)]));
        let r = validate_dataset(&d);
        assert_eq!(r.violations, vec![Violation::TrivialCharacterNotOne { class: "1A".into(), value: 2.into() }]);
    }

    #[test]
    fn identity_must_square_to_itself() {
        let mut d = toy();
        d.classes[0].power2 = "2A".into();
        d.classes.push(zero_class("2A", "1A", 0));
        let r = validate_dataset(&d);
        assert!(r.violations.contains(&Violation::IdentityPower2 { class: "1A".into(), power2: "2A".into() }));
    }
}
