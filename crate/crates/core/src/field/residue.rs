use super::{Field, FieldElement};
use crate::arith;
use crate::bitset::Bitset;
use crate::error::{Error, Result};

/// How a [`ResidueSet`] was defined.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResidueKind {
    /// `{x^m : x ≠ 0}`, with `d = gcd(m, q-1)`.
    Power { m: u64, d: u64 },
    /// The unique subgroup of the given order.
    Subgroup { order: u64 },
    /// `{g^j : j ≡ 0, 1 (mod 4)}` for the primitive element `g`.
    PStar,
    /// Any other subset of the nonzero elements.
    Custom,
}

/// A subset of `F_q^*`, stored as a bitset over element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueSet {
    q: u32,
    members: Bitset,
    kind: ResidueKind,
}

impl ResidueSet {
    /// The `m`-th powers of the nonzero elements.
    pub fn powers(field: &Field, m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::Precondition("exponent m must be at least 1".into()));
        }
        let q = field.q();
        let mut members = Bitset::new(q as usize);
        for x in field.nonzero_elements() {
            members.insert(field.pow(x, m).index() as usize);
        }
        Ok(ResidueSet {
            q,
            members,
            kind: ResidueKind::Power {
                m,
                d: arith::gcd(m, q as u64 - 1),
            },
        })
    }

    /// `{g^{jk}}` with `k = (q-1)/s`: the subgroup of order `s`.
    pub fn subgroup_of_order(field: &Field, s: u64) -> Result<Self> {
        let order = field.q() as u64 - 1;
        if s == 0 || order % s != 0 {
            return Err(Error::NotADivisor { s, order });
        }
        let step = order / s;
        let g = field.primitive_element();
        let h = field.pow(g, step);
        let mut members = Bitset::new(field.q() as usize);
        let mut x = FieldElement::ONE;
        for _ in 0..s {
            members.insert(x.index() as usize);
            x = field.mul(x, h);
        }
        Ok(ResidueSet {
            q: field.q(),
            members,
            kind: ResidueKind::Subgroup { order: s },
        })
    }

    /// `M = {g^j : j ≡ 0, 1 (mod 4)}`.
    pub fn pstar(field: &Field) -> Self {
        let g = field.primitive_element();
        let mut members = Bitset::new(field.q() as usize);
        let mut x = FieldElement::ONE;
        for j in 0..field.q() as u64 - 1 {
            if j % 4 <= 1 {
                members.insert(x.index() as usize);
            }
            x = field.mul(x, g);
        }
        ResidueSet {
            q: field.q(),
            members,
            kind: ResidueKind::PStar,
        }
    }

    /// An arbitrary set of nonzero element indices.
    pub fn from_members(field: &Field, members: impl IntoIterator<Item = u32>) -> Result<Self> {
        let q = field.q();
        let mut bits = Bitset::new(q as usize);
        for i in members {
            if i == 0 || i >= q {
                return Err(Error::Precondition(format!(
                    "connection members must be nonzero elements below {q}, got {i}"
                )));
            }
            bits.insert(i as usize);
        }
        Ok(ResidueSet {
            q,
            members: bits,
            kind: ResidueKind::Custom,
        })
    }

    pub fn kind(&self) -> ResidueKind {
        self.kind
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// `gcd(m, q-1)` for power sets.
    pub fn d(&self) -> Option<u64> {
        match self.kind {
            ResidueKind::Power { d, .. } => Some(d),
            _ => None,
        }
    }

    pub fn contains(&self, x: FieldElement) -> bool {
        self.members.contains(x.index() as usize)
    }

    pub fn len(&self) -> usize {
        self.members.count()
    }

    pub fn is_empty(&self) -> bool {
        !self.members.any()
    }

    pub fn bits(&self) -> &Bitset {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = FieldElement> + '_ {
        self.members.iter().map(|i| FieldElement(i as u32))
    }

    pub fn indices(&self) -> Vec<u32> {
        self.members.iter().map(|i| i as u32).collect()
    }

    /// The first member whose negation is missing, paired with that negation.
    pub fn asymmetry(&self, field: &Field) -> Option<(FieldElement, FieldElement)> {
        self.iter()
            .map(|x| (x, field.neg(x)))
            .find(|&(_, nx)| !self.contains(nx))
    }

    pub fn is_symmetric(&self, field: &Field) -> bool {
        self.asymmetry(field).is_none()
    }

    /// Nonzero elements outside the set.
    pub fn complement(&self, field: &Field) -> ResidueSet {
        let mut members = self.members.complement();
        members.remove(0);
        ResidueSet {
            q: field.q(),
            members,
            kind: ResidueKind::Custom,
        }
    }
}

/// Free-function form of [`ResidueSet::powers`].
pub fn residue_subgroup(field: &Field, m: u64) -> Result<ResidueSet> {
    ResidueSet::powers(field, m)
}
