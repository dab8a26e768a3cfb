//! Finite fields `GF(p^n)` realised as `Z_p[x]/(f(x))`.
//!
//! Elements are addressed by a dense index `Σ c_i p^i` over the basis
//! `{1, a, ..., a^{n-1}}`, where `a` is the class of `x`. Index 0 is zero and
//! index 1 is one in every field.

mod poly;
mod residue;
mod tables;
mod text;

pub use poly::{find_irreducible, poly_is_irreducible, PrimePoly};
pub use residue::{residue_subgroup, ResidueKind, ResidueSet};
pub use tables::PowerTable;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};

/// Largest field order this crate will construct.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// An element of some [`Field`], stored as its dense index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Wraps a raw index without range checking; prefer [`Field::element`].
    pub fn from_index(index: u32) -> Self {
        FieldElement(index)
    }
}

impl From<FieldElement> for usize {
    fn from(x: FieldElement) -> usize {
        x.0 as usize
    }
}

/// The concrete field `GF(p^n)` with a fixed monic irreducible modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Field {
    p: u32,
    n: u32,
    q: u32,
    modulus: PrimePoly,
    // p^i for i in 0..n
    place: Vec<u32>,
}

/// JSON form of a field: `{"p":…, "n":…, "modulus":[f0,…,fn], "q":…}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescription {
    pub p: u32,
    pub n: u32,
    pub modulus: Vec<u32>,
    pub q: u32,
}

impl Field {
    /// Builds `GF(p^n)`. Without a modulus the canonical one from
    /// [`find_irreducible`] is used; a supplied modulus must be monic, of degree
    /// `n`, and irreducible.
    pub fn new(p: u32, n: u32, modulus: Option<PrimePoly>) -> Result<Self> {
        if !arith::is_prime(p as u64) {
            return Err(Error::NonPrime(p as u64));
        }
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = (p as u64)
            .checked_pow(n)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or(Error::FieldTooLarge {
                q: (p as u64).saturating_pow(n),
                cap: MAX_FIELD_ORDER,
            })?;
        let modulus = match modulus {
            None => find_irreducible(p, n as usize)?,
            Some(f) => {
                let f = if f.p() == p {
                    f
                } else {
                    PrimePoly::new(p, f.coeffs().iter().map(|&c| c as u64))
                };
                if f.degree() != Some(n as usize) {
                    return Err(Error::BadModulus(format!(
                        "{f} has degree {}, expected {n}",
                        f.degree().map_or("-inf".into(), |d| d.to_string())
                    )));
                }
                if !f.is_monic() {
                    return Err(Error::BadModulus(format!("{f} is not monic")));
                }
                if !f.is_irreducible()? {
                    return Err(Error::BadModulus(format!(
                        "{f} is reducible over Z_{p}, so the quotient ring is not a field"
                    )));
                }
                f
            }
        };
        let place = (0..n).map(|i| p.pow(i)).collect();
        Ok(Field {
            p,
            n,
            q: q as u32,
            modulus,
            place,
        })
    }

    /// Builds the field of order `q`, inferring `p` and `n`.
    pub fn with_order(q: u64) -> Result<Self> {
        let (p, n) = arith::prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if q > MAX_FIELD_ORDER {
            return Err(Error::FieldTooLarge {
                q,
                cap: MAX_FIELD_ORDER,
            });
        }
        Field::new(p as u32, n, None)
    }

    pub fn from_description(desc: &FieldDescription) -> Result<Self> {
        let modulus = PrimePoly::new(desc.p.max(2), desc.modulus.iter().map(|&c| c as u64));
        let field = Field::new(desc.p, desc.n, Some(modulus))?;
        if field.q != desc.q {
            return Err(Error::Precondition(format!(
                "q = {} does not equal {}^{}",
                desc.q, desc.p, desc.n
            )));
        }
        Ok(field)
    }

    pub fn description(&self) -> FieldDescription {
        FieldDescription {
            p: self.p,
            n: self.n,
            modulus: self.modulus.coeffs().to_vec(),
            q: self.q,
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &PrimePoly {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    /// The basis element `a` (class of `x`); equals `0` in a prime field.
    pub fn basis_root(&self) -> FieldElement {
        if self.n == 1 {
            FieldElement::ZERO
        } else {
            FieldElement(self.p)
        }
    }

    /// The element with the given index, if it is in range.
    pub fn element(&self, index: u32) -> Option<FieldElement> {
        (index < self.q).then_some(FieldElement(index))
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> {
        (1..self.q).map(FieldElement)
    }

    pub fn coeffs(&self, x: FieldElement) -> Vec<u32> {
        let mut rest = x.0;
        (0..self.n)
            .map(|_| {
                let c = rest % self.p;
                rest /= self.p;
                c
            })
            .collect()
    }

    /// Inverse of [`Field::coeffs`]; coefficients are reduced mod `p` and missing
    /// high coefficients are zero. Panics if more than `n` are given.
    pub fn from_coeffs(&self, coeffs: &[u32]) -> FieldElement {
        assert!(coeffs.len() <= self.n as usize, "too many coordinates");
        FieldElement(
            coeffs
                .iter()
                .zip(&self.place)
                .map(|(&c, &w)| (c % self.p) * w)
                .sum(),
        )
    }

    /// `k · 1`, i.e. the image of the integer `k` in the prime subfield.
    pub fn from_int(&self, k: u64) -> FieldElement {
        FieldElement((k % self.p as u64) as u32)
    }

    fn digitwise(&self, x: FieldElement, y: FieldElement, op: impl Fn(u32, u32) -> u32) -> FieldElement {
        let (mut a, mut b) = (x.0, y.0);
        let mut out = 0;
        for &w in &self.place {
            out += op(a % self.p, b % self.p) * w;
            a /= self.p;
            b /= self.p;
        }
        FieldElement(out)
    }

    pub fn add(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        let p = self.p;
        if self.n == 1 {
            return FieldElement((x.0 + y.0) % p);
        }
        self.digitwise(x, y, |a, b| (a + b) % p)
    }

    pub fn sub(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        let p = self.p;
        if self.n == 1 {
            return FieldElement((x.0 + p - y.0) % p);
        }
        self.digitwise(x, y, |a, b| (a + p - b) % p)
    }

    pub fn neg(&self, x: FieldElement) -> FieldElement {
        self.sub(FieldElement::ZERO, x)
    }

    /// Polynomial product reduced modulo the field modulus and `p`.
    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        let p = self.p as u64;
        if self.n == 1 {
            return FieldElement(((x.0 as u64 * y.0 as u64) % p) as u32);
        }
        if x.is_zero() || y.is_zero() {
            return FieldElement::ZERO;
        }
        // q <= 2^20, so n <= 20 and everything fits on the stack.
        let n = self.n as usize;
        let digits = |mut v: u32| {
            let mut d = [0u64; 20];
            for slot in d.iter_mut().take(n) {
                *slot = (v % self.p) as u64;
                v /= self.p;
            }
            d
        };
        let (a, b) = (digits(x.0), digits(y.0));
        let mut prod = [0u64; 40];
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
            }
        }
        // x^n = -(f_0 + ... + f_{n-1} x^{n-1})
        let f = self.modulus.coeffs();
        for k in (n..2 * n - 1).rev() {
            let lead = prod[k];
            if lead == 0 {
                continue;
            }
            prod[k] = 0;
            for (i, &fi) in f[..n].iter().enumerate() {
                let t = k - n + i;
                prod[t] = (prod[t] + (p - lead) * fi as u64) % p;
            }
        }
        let mut out = 0u64;
        for (c, &w) in prod[..n].iter().zip(&self.place) {
            out += c * w as u64;
        }
        FieldElement(out as u32)
    }

    /// Square-and-multiply. The exponent is reduced mod `q-1` for a nonzero base,
    /// and `pow(0, 0) = 1`.
    pub fn pow(&self, x: FieldElement, e: u64) -> FieldElement {
        if x.is_zero() {
            return if e == 0 { FieldElement::ONE } else { FieldElement::ZERO };
        }
        let mut e = e % (self.q as u64 - 1);
        let mut base = x;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, x: FieldElement) -> Result<FieldElement> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(x, self.q as u64 - 2))
    }

    /// Multiplicative order of a nonzero element.
    pub fn order_of(&self, x: FieldElement) -> Option<u64> {
        if x.is_zero() {
            return None;
        }
        let group = self.q as u64 - 1;
        let mut order = group;
        for (prime, _) in arith::factorize(group) {
            while order % prime == 0 && self.pow(x, order / prime) == FieldElement::ONE {
                order /= prime;
            }
        }
        Some(order)
    }

    /// The smallest-index generator of the multiplicative group.
    pub fn primitive_element(&self) -> FieldElement {
        let group = self.q as u64 - 1;
        let primes: Vec<u64> = arith::factorize(group).into_iter().map(|(p, _)| p).collect();
        self.nonzero_elements()
            .find(|&g| primes.iter().all(|&r| self.pow(g, group / r) != FieldElement::ONE))
            .expect("the multiplicative group of a finite field is cyclic")
    }

    pub fn power_table(&self) -> PowerTable {
        PowerTable::new(self)
    }

    /// `x^m = c` solutions, by enumeration over the whole field.
    pub fn roots_of_power(&self, m: u64, c: FieldElement) -> Vec<FieldElement> {
        self.elements().filter(|&x| self.pow(x, m) == c).collect()
    }

    pub fn format(&self, x: FieldElement) -> String {
        if self.n == 1 {
            return x.0.to_string();
        }
        text::render(&self.coeffs(x), 'a')
    }

    /// Parses an element in the `2a+1` / `a^2+2a+2` grammar (plain integers for
    /// prime fields).
    pub fn parse_element(&self, text: &str) -> Result<FieldElement> {
        let terms = text::parse_terms(text, 'a', self.p)?;
        let mut coeffs = vec![0u32; self.n as usize];
        let mut seen = vec![false; self.n as usize];
        for t in terms {
            if t.exp >= self.n as usize {
                return Err(Error::parse(
                    t.position,
                    format!("power a^{} is not below the degree {}", t.exp, self.n),
                ));
            }
            if std::mem::replace(&mut seen[t.exp], true) {
                return Err(Error::parse(t.position, format!("repeated power a^{}", t.exp)));
            }
            coeffs[t.exp] = t.coef;
        }
        Ok(self.from_coeffs(&coeffs))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 1 {
            write!(f, "GF({})", self.p)
        } else {
            write!(f, "GF({}^{}) mod {}", self.p, self.n, self.modulus)
        }
    }
}
