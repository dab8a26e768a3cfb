use std::fmt;

use rayon::prelude::*;

use super::{CayleyData, Graph};
use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement, ResidueSet};

/// The Cayley graph on `(F_q, +)` with `x ~ y` iff `x - y` is in `connection`.
///
/// Fails with [`Error::AsymmetricConnectionSet`] unless `connection = -connection`.
pub fn build_cayley(field: &Field, connection: &ResidueSet, label: impl Into<String>) -> Result<Graph> {
    if connection.q() != field.q() {
        return Err(Error::Precondition(format!(
            "connection set is over a field of order {}, not {}",
            connection.q(),
            field.q()
        )));
    }
    if let Some((x, nx)) = connection.asymmetry(field) {
        return Err(Error::AsymmetricConnectionSet {
            member: field.format(x),
            negation: field.format(nx),
        });
    }
    let q = field.q() as usize;
    let shifts: Vec<FieldElement> = connection.iter().collect();
    let rows: Vec<Bitset> = (0..q)
        .into_par_iter()
        .map(|u| {
            let x = FieldElement::from_index(u as u32);
            Bitset::from_indices(q, shifts.iter().map(|&s| field.add(x, s).index() as usize))
        })
        .collect();
    let degree = shifts.len();
    assert!(
        rows.iter().all(|r| r.count() == degree),
        "Cayley graph must be |S|-regular"
    );
    Ok(Graph::from_rows(
        rows,
        label.into(),
        Some(CayleyData {
            field: field.clone(),
            connection: connection.clone(),
        }),
    ))
}

/// The graph families built as Cayley graphs over `F_q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Nonzero squares; `q ≡ 1 (mod 4)`.
    Paley,
    /// Nonzero cubes; `p` odd, `q ≡ 1 (mod 3)`.
    CubicPaley,
    /// Nonzero fourth powers; `p` odd, `q ≡ 1 (mod 8)`.
    QuadruplePaley,
    /// The subgroup of order `(q-1)/k`.
    GeneralizedPaley { k: u64 },
    /// Nonzero `m`-th powers for odd `m ≥ 3`, `p` odd.
    MPaley { m: u64 },
    /// `{g^j : j ≡ 0, 1 (mod 4)}`.
    PStar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub field: Field,
}

fn violation(msg: impl Into<String>) -> Error {
    Error::CongruenceViolation(msg.into())
}

impl FamilySpec {
    pub fn new(family: Family, field: Field) -> Self {
        FamilySpec { family, field }
    }

    /// Checks the family's admissibility conditions for this field.
    pub fn validate(&self) -> Result<()> {
        let q = self.field.q() as u64;
        let p = self.field.p();
        let need_odd_p = || {
            if p == 2 {
                Err(violation(format!("p = 2 but this family needs an odd prime (q = {q})")))
            } else {
                Ok(())
            }
        };
        let need_mod = |r: u64| {
            if q % r != 1 {
                Err(violation(format!("{q} ≢ 1 (mod {r})")))
            } else {
                Ok(())
            }
        };
        match self.family {
            Family::Paley | Family::PStar => need_mod(4),
            Family::CubicPaley => need_odd_p().and_then(|_| need_mod(3)),
            Family::QuadruplePaley => need_odd_p().and_then(|_| need_mod(8)),
            Family::GeneralizedPaley { k } => {
                if k < 2 {
                    return Err(violation(format!("k = {k} but k must be at least 2")));
                }
                if (q - 1) % k != 0 {
                    return Err(violation(format!("k = {k} does not divide q-1 = {}", q - 1)));
                }
                if q % 2 == 1 && ((q - 1) / k) % 2 != 0 {
                    return Err(violation(format!(
                        "(q-1)/k = {} is odd but q = {q} is odd",
                        (q - 1) / k
                    )));
                }
                Ok(())
            }
            Family::MPaley { m } => {
                need_odd_p()?;
                if m % 2 == 0 {
                    return Err(violation(format!("m = {m} is even")));
                }
                if m < 3 {
                    return Err(violation(format!("m = {m} but m must be at least 3")));
                }
                Ok(())
            }
        }
    }

    /// The connection set the family prescribes (without validation).
    pub fn connection(&self) -> Result<ResidueSet> {
        let f = &self.field;
        match self.family {
            Family::Paley => ResidueSet::powers(f, 2),
            Family::CubicPaley => ResidueSet::powers(f, 3),
            Family::QuadruplePaley => ResidueSet::powers(f, 4),
            Family::GeneralizedPaley { k } => {
                ResidueSet::subgroup_of_order(f, (f.q() as u64 - 1) / k)
            }
            Family::MPaley { m } => ResidueSet::powers(f, m),
            Family::PStar => Ok(ResidueSet::pstar(f)),
        }
    }

    pub fn label(&self) -> String {
        let q = self.field.q() as u64;
        match self.family {
            Family::Paley => format!("Paley({q})"),
            Family::CubicPaley => format!("CubicPaley({q})"),
            Family::QuadruplePaley => format!("QuadruplePaley({q})"),
            Family::GeneralizedPaley { k } => format!("GPaley({q},{})", (q - 1) / k),
            Family::MPaley { m } => format!("{m}-Paley({q})"),
            Family::PStar => format!("PStar({q})"),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Validates the family conditions, then builds the Cayley graph.
pub fn build_family(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let connection = spec.connection()?;
    build_cayley(&spec.field, &connection, spec.label())
}
