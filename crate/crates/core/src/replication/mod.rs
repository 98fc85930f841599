//! McKay–Thompson coefficients by replication, multiplicities of
//! irreducibles by character orthogonality, and the comparison of the
//! trivial multiplicity with the dimension of the primary space.

mod recursion;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::data::{validate_dataset, Dataset, Violation, SEED_INDICES};
use crate::qseries::{primary_dims, QSeriesError};

pub use recursion::replicate_step;

/// Smallest order the recursions can extend to: `C(g, 5)` is a seed.
pub const MIN_ORDER: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplicationError {
    #[error("order {0} is below the seed range; need at least {MIN_ORDER}")]
    OrderTooSmall(usize),
    #[error("class {class}: power2 {target:?} is not a class")]
    UnknownPower2 { class: String, target: String },
    #[error("class {class}: missing seed C(g,{index})")]
    MissingSeed { class: String, index: i64 },
    #[error("class {class}: halving an odd value {value} while computing C(g,{index})")]
    OddHalving { class: String, index: usize, value: String },
    #[error("index {index} is outside the computed range -1..={order}")]
    IndexOutOfRange { index: i64, order: usize },
    #[error("character {k} has no value on class {class}")]
    MissingCharacter { k: u32, class: String },
    #[error("multiplicity of character {k} at index {index} is {numerator}/{denominator}, not an integer")]
    NonIntegralMultiplicity { k: u32, index: i64, numerator: String, denominator: String },
    #[error("multiplicity of character {k} at index {index} is negative: {value}")]
    NegativeMultiplicity { k: u32, index: i64, value: String },
    #[error("group order must be positive, got {0}")]
    NonPositiveOrder(String),
    #[error("invalid dataset: {0}")]
    InvalidDataset(String),
    #[error(transparent)]
    Series(#[from] QSeriesError),
}

/// `C(g, j)` for every class and `0 <= j <= order`, with `C(g, 0) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientTable {
    names: Vec<String>,
    rows: Vec<Vec<BigInt>>,
    order: usize,
}

impl CoefficientTable {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn class_names(&self) -> &[String] {
        &self.names
    }

    fn index_of(&self, class: &str) -> Option<usize> {
        self.names.iter().position(|n| n == class)
    }

    /// `C(g, j)` for `0 <= j <= order`.
    pub fn get(&self, class: &str, j: usize) -> Option<&BigInt> {
        self.rows.get(self.index_of(class)?)?.get(j)
    }

    /// `C(g, 1), ..., C(g, order)`.
    pub fn row(&self, class: &str) -> Option<&[BigInt]> {
        Some(&self.rows[self.index_of(class)?][1..])
    }
}

struct Prepared {
    names: Vec<String>,
    power2: Vec<usize>,
    rows: Vec<Vec<BigInt>>,
}

fn prepare(d: &Dataset, order: usize) -> Result<Prepared, ReplicationError> {
    if order < MIN_ORDER {
        return Err(ReplicationError::OrderTooSmall(order));
    }
    let mut power2 = Vec::with_capacity(d.classes.len());
    let mut rows = Vec::with_capacity(d.classes.len());
    for c in &d.classes {
        let target = d
            .index_of(&c.power2)
            .ok_or_else(|| ReplicationError::UnknownPower2 { class: c.name.clone(), target: c.power2.clone() })?;
        power2.push(target);
        let mut row = vec![BigInt::zero(); order + 1];
        for j in SEED_INDICES.into_iter().filter(|&j| j >= 1) {
            let seed = c
                .seed(j)
                .ok_or_else(|| ReplicationError::MissingSeed { class: c.name.clone(), index: j })?;
            row[j as usize] = seed.clone();
        }
        rows.push(row);
    }
    Ok(Prepared { names: d.classes.iter().map(|c| c.name.clone()).collect(), power2, rows })
}

fn extend(d: &Dataset, order: usize, parallel: bool) -> Result<CoefficientTable, ReplicationError> {
    let Prepared { names, power2, mut rows } = prepare(d, order)?;
    for n in 4..=order {
        if n == 5 {
            continue;
        }
        let step = |g: usize| replicate_step(&rows[g], &rows[power2[g]], n).map_err(|value| {
            ReplicationError::OddHalving { class: names[g].clone(), index: n, value: value.to_string() }
        });
        let values: Vec<BigInt> = if parallel {
            (0..rows.len()).into_par_iter().map(step).collect::<Result<_, _>>()?
        } else {
            (0..rows.len()).map(step).collect::<Result<_, _>>()?
        };
        for (row, v) in rows.iter_mut().zip(values) {
            row[n] = v;
        }
    }
    Ok(CoefficientTable { names, rows, order })
}

/// Extends the seeds `C(g, 1), C(g, 2), C(g, 3), C(g, 5)` of every class
/// to `C(g, j)` for `j <= order`.
///
/// Indices are filled in increasing order across all classes, since
/// `C(g, n)` reads `C(g^2, i)` for `i < n`.
pub fn replicate_extend(d: &Dataset, order: usize) -> Result<CoefficientTable, ReplicationError> {
    extend(d, order, false)
}

/// [`replicate_extend`] with the classes at each index computed in parallel.
pub fn replicate_extend_parallel(d: &Dataset, order: usize) -> Result<CoefficientTable, ReplicationError> {
    extend(d, order, true)
}

/// `mult_k(j + 1) = (1/|G|) sum_g chi_k(g) C(g, j)`, summed over classes
/// weighted by their sizes.
pub fn multiplicity(d: &Dataset, t: &CoefficientTable, k: u32, j: i64) -> Result<BigInt, ReplicationError> {
    if j < -1 || j > t.order as i64 {
        return Err(ReplicationError::IndexOutOfRange { index: j, order: t.order });
    }
    if !d.group_order.is_positive() {
        return Err(ReplicationError::NonPositiveOrder(d.group_order.to_string()));
    }
    let mut total = BigInt::zero();
    for c in &d.classes {
        let chi = d
            .character(k, &c.name)
            .ok_or_else(|| ReplicationError::MissingCharacter { k, class: c.name.clone() })?;
        let trace = if j == -1 {
            c.seed(-1).cloned().ok_or_else(|| ReplicationError::MissingSeed { class: c.name.clone(), index: -1 })?
        } else {
            t.get(&c.name, j as usize)
                .cloned()
                .ok_or_else(|| ReplicationError::InvalidDataset(format!("class {} is not in the table", c.name)))?
        };
        total += &c.class_size * chi * trace;
    }
    let (q, r) = total.div_rem(&d.group_order);
    if !r.is_zero() {
        return Err(ReplicationError::NonIntegralMultiplicity {
            k,
            index: j,
            numerator: total.to_string(),
            denominator: d.group_order.to_string(),
        });
    }
    if q.is_negative() {
        return Err(ReplicationError::NegativeMultiplicity { k, index: j, value: q.to_string() });
    }
    Ok(q)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NontrivialityRow {
    pub j: i64,
    /// `dim P_{j+1}`.
    pub primary_dim: BigInt,
    /// Multiplicity of the trivial module in `V_{j+1}`.
    pub trivial_mult: BigInt,
    pub nontrivial: bool,
}

/// Compares `dim P_{j+1}` with the trivial multiplicity for `1 <= j <= max_j`.
///
/// The dataset must pass validation; a failed comparison is a row with
/// `nontrivial == false`, not an error.
pub fn nontriviality_report(
    d: &Dataset,
    t: &CoefficientTable,
    max_j: usize,
) -> Result<Vec<NontrivialityRow>, ReplicationError> {
    let report = validate_dataset(d);
    if !report.is_valid() {
        let text: Vec<String> = report.violations.iter().map(Violation::to_string).collect();
        return Err(ReplicationError::InvalidDataset(text.join("; ")));
    }
    if max_j > t.order {
        return Err(ReplicationError::IndexOutOfRange { index: max_j as i64, order: t.order });
    }
    let dims = primary_dims(max_j as i64 + 1)?;
    (1..=max_j)
        .map(|j| {
            let trivial_mult = multiplicity(d, t, 1, j as i64)?;
            let primary_dim = dims[j + 1].clone();
            let nontrivial = primary_dim > trivial_mult;
            Ok(NontrivialityRow { j: j as i64, primary_dim, trivial_mult, nontrivial })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::ClassRecord;
    use crate::qseries::j_coefficients;
    use std::collections::BTreeMap;

    fn zero_class(name: &str) -> ClassRecord {
        let mut seeds: BTreeMap<i64, BigInt> = SEED_INDICES.iter().map(|&j| (j, BigInt::zero())).collect();
        seeds.insert(-1, BigInt::from(1));
        ClassRecord { name: name.into(), class_size: 1.into(), power2: name.into(), seeds }
    }

    #[test]
    fn identity_row_is_j() {
        let t = replicate_extend(&Dataset::trivial_group(), 30).unwrap();
        let c = j_coefficients(30).unwrap();
        for j in 1..=30 {
            assert_eq!(t.get("1A", j).unwrap(), &c[j + 1], "j = {j}");
        }
    }

    #[test]
    fn zero_seeds_stay_zero() {
        let d = Dataset { classes: vec![zero_class("0A")], group_order: 1.into(), characters: None };
        let t = replicate_extend(&d, 40).unwrap();
        assert!(t.row("0A").unwrap().iter().all(Zero::is_zero));
    }

    #[test]
    fn order_below_seeds_rejected() {
        assert_eq!(replicate_extend(&Dataset::trivial_group(), 4), Err(ReplicationError::OrderTooSmall(4)));
    }

    #[test]
    fn odd_halving_names_class_and_index() {
        let mut c = zero_class("3Z");
        c.seeds.insert(1, BigInt::from(1));
        c.power2 = "0A".into();
        let d = Dataset { classes: vec![zero_class("0A"), c], group_order: 2.into(), characters: None };
        // C(g,4) = C(g,3) + (1 - 0)/2
        match replicate_extend(&d, 10) {
            Err(ReplicationError::OddHalving { class, index, .. }) => {
                assert_eq!(class, "3Z");
                assert_eq!(index, 4);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn parallel_matches_sequential() {
        let d = Dataset::trivial_group();
        assert_eq!(replicate_extend(&d, 60).unwrap(), replicate_extend_parallel(&d, 60).unwrap());
    }

    #[test]
    fn trivial_group_multiplicity_is_trace() {
        let d = Dataset::trivial_group();
        let t = replicate_extend(&d, 12).unwrap();
        for j in 1..=12usize {
            assert_eq!(&multiplicity(&d, &t, 1, j as i64).unwrap(), t.get("1A", j).unwrap());
        }
        assert_eq!(multiplicity(&d, &t, 1, -1).unwrap(), BigInt::from(1));
        assert!(matches!(multiplicity(&d, &t, 2, 1), Err(ReplicationError::MissingCharacter { .. })));
        assert!(matches!(multiplicity(&d, &t, 1, 13), Err(ReplicationError::IndexOutOfRange { .. })));
    }

    #[test]
    fn non_integral_multiplicity_is_an_error() {
        let mut d = Dataset::trivial_group();
        let mut other = zero_class("2A");
        other.class_size = 2.into();
        d.classes.push(other);
        d.group_order = 3.into();
        let t = replicate_extend(&d, 6).unwrap();
        // 196884 = 3 * 65628, but 3 does not divide 21493760
        assert_eq!(multiplicity(&d, &t, 1, 1).unwrap(), BigInt::from(65628));
        match multiplicity(&d, &t, 1, 2) {
            Err(ReplicationError::NonIntegralMultiplicity { index, .. }) => assert_eq!(index, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn report_on_trivial_group() {
        let d = Dataset::trivial_group();
        let t = replicate_extend(&d, 10).unwrap();
        let rows = nontriviality_report(&d, &t, 10).unwrap();
        assert_eq!(rows.len(), 10);
        // with the trivial group every vector is invariant, so dim P < dim V
        assert_eq!(rows[0].trivial_mult, BigInt::from(196884));
        assert_eq!(rows[0].primary_dim, BigInt::from(196883));
        assert!(rows.iter().all(|r| !r.nontrivial));
    }
}
