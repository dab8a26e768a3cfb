use std::fmt;

use serde::{Deserialize, Serialize};

use super::text;
use crate::arith;
use crate::error::{Error, Result};

/// Polynomial over `Z_p`, coefficients ascending (`coeffs[i]` multiplies `x^i`).
///
/// Trailing zeros are stripped, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimePoly {
    p: u32,
    coeffs: Vec<u32>,
}

impl PrimePoly {
    /// Reduces every coefficient modulo `p` and strips trailing zeros.
    pub fn new(p: u32, coeffs: impl IntoIterator<Item = u64>) -> Self {
        assert!(p >= 2, "modulus must be at least 2");
        let mut coeffs: Vec<u32> = coeffs.into_iter().map(|c| (c % p as u64) as u32).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PrimePoly { p, coeffs }
    }

    /// The monic polynomial `x^n + f_{n-1} x^{n-1} + ... + f_0` whose low coefficients
    /// are the base-`p` digits of `rank` (least significant digit first).
    pub fn monic_from_rank(p: u32, n: usize, mut rank: u64) -> Self {
        let mut coeffs = Vec::with_capacity(n + 1);
        for _ in 0..n {
            coeffs.push(rank % p as u64);
            rank /= p as u64;
        }
        coeffs.push(1);
        PrimePoly::new(p, coeffs)
    }

    pub fn parse(text: &str, p: u32) -> Result<Self> {
        let terms = text::parse_terms(text, 'x', p)?;
        let degree = terms.iter().map(|t| t.exp).max().unwrap_or(0);
        if degree > 64 {
            return Err(Error::parse(0, "degree too large"));
        }
        let mut coeffs = vec![0u64; degree + 1];
        for t in terms {
            coeffs[t.exp] = (coeffs[t.exp] + t.coef as u64) % p as u64;
        }
        Ok(PrimePoly::new(p, coeffs))
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    /// Remainder of `self` modulo a monic `divisor`.
    pub fn rem_monic(&self, divisor: &PrimePoly) -> PrimePoly {
        debug_assert!(divisor.is_monic());
        let p = self.p as u64;
        let dn = divisor.coeffs.len() - 1;
        let mut r: Vec<u64> = self.coeffs.iter().map(|&c| c as u64).collect();
        while r.len() > dn {
            let lead = r.pop().unwrap();
            if lead == 0 {
                continue;
            }
            let shift = r.len() - dn;
            for (i, &d) in divisor.coeffs[..dn].iter().enumerate() {
                r[shift + i] = (r[shift + i] + (p - lead) * d as u64) % p;
            }
        }
        PrimePoly::new(self.p, r)
    }

    /// Full irreducibility test: trial division by every monic polynomial of
    /// degree `1..=deg/2`. Degree-1 polynomials are always irreducible.
    pub fn is_irreducible(&self) -> Result<bool> {
        let degree = match self.degree() {
            None | Some(0) => return Err(Error::InvalidCandidate),
            Some(d) => d,
        };
        let p = self.p as u64;
        for d in 1..=degree / 2 {
            let count = p.pow(d as u32);
            for rank in 0..count {
                let g = PrimePoly::monic_from_rank(self.p, d, rank);
                if self.rem_monic(&g).is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Evaluates at `x` in `Z_p`.
    pub fn eval(&self, x: u32) -> u32 {
        let p = self.p as u64;
        self.coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| (acc * x as u64 + c as u64) % p) as u32
    }
}

impl fmt::Display for PrimePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::render(&self.coeffs, 'x'))
    }
}

/// Free-function form of [`PrimePoly::is_irreducible`].
pub fn poly_is_irreducible(f: &PrimePoly) -> Result<bool> {
    f.is_irreducible()
}

/// The monic irreducible of degree `n` over `Z_p` whose low coefficient tuple
/// `(f_0, ..., f_{n-1})`, read as a base-`p` number, is smallest.
pub fn find_irreducible(p: u32, n: usize) -> Result<PrimePoly> {
    if !arith::is_prime(p as u64) {
        return Err(Error::NonPrime(p as u64));
    }
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let total = (p as u64)
        .checked_pow(n as u32)
        .ok_or(Error::FieldTooLarge {
            q: u64::MAX,
            cap: super::MAX_FIELD_ORDER,
        })?;
    for rank in 0..total {
        let f = PrimePoly::monic_from_rank(p, n, rank);
        if f.is_irreducible()? {
            return Ok(f);
        }
    }
    unreachable!("every degree has an irreducible polynomial over Z_p")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(text: &str, p: u32) -> PrimePoly {
        PrimePoly::parse(text, p).unwrap()
    }

    #[test]
    fn irreducibility_examples() {
        assert!(poly("x^2+1", 3).is_irreducible().unwrap());
        assert!(poly("x", 2).is_irreducible().unwrap());
        assert!(!poly("x^2+2", 3).is_irreducible().unwrap());
        // Root-free over Z_2 but equal to (x^2+x+1)^2.
        let f = poly("x^4+x^2+1", 2);
        assert_eq!(f.eval(0), 1);
        assert_eq!(f.eval(1), 1);
        assert!(!f.is_irreducible().unwrap());
        assert!(poly("x^2+x+1", 2).is_irreducible().unwrap());
    }

    #[test]
    fn constant_candidates_rejected() {
        assert_eq!(poly("1", 5).is_irreducible(), Err(Error::InvalidCandidate));
        assert_eq!(
            PrimePoly::new(5, []).is_irreducible(),
            Err(Error::InvalidCandidate)
        );
    }

    #[test]
    fn canonical_moduli() {
        assert_eq!(find_irreducible(2, 4).unwrap().to_string(), "x^4+x+1");
        assert_eq!(find_irreducible(3, 2).unwrap().to_string(), "x^2+1");
        assert_eq!(find_irreducible(5, 2).unwrap().to_string(), "x^2+2");
        assert_eq!(find_irreducible(13, 1).unwrap().to_string(), "x");
        assert_eq!(find_irreducible(4, 1), Err(Error::NonPrime(4)));
    }

    #[test]
    fn remainder_and_normalisation() {
        let f = PrimePoly::new(3, [4, 0, 3, 0]);
        assert_eq!(f.coeffs(), &[1]);
        let g = poly("x^2+1", 3);
        // x^3 = -x mod (x^2+1)
        assert_eq!(poly("x^3", 3).rem_monic(&g), poly("2x", 3));
        assert_eq!(poly("x^4+x^2+1", 2).rem_monic(&poly("x^2+x+1", 2)), PrimePoly::new(2, []));
    }

    /// Count of monic irreducibles of degree n over Z_p: (1/n) sum_{d|n} mu(d) p^{n/d}.
    #[test]
    fn irreducible_counts_match_necklace_formula() {
        fn mobius(n: u64) -> i64 {
            let f = crate::arith::factorize(n);
            if f.iter().any(|&(_, e)| e > 1) {
                0
            } else if f.len() % 2 == 0 {
                1
            } else {
                -1
            }
        }
        for (p, n) in [(2u32, 4usize), (2, 6), (3, 3), (5, 2), (7, 2), (3, 4)] {
            let expected: i64 = (1..=n as u64)
                .filter(|d| n as u64 % d == 0)
                .map(|d| mobius(d) * (p as i64).pow((n as u64 / d) as u32))
                .sum::<i64>()
                / n as i64;
            let count = (0..(p as u64).pow(n as u32))
                .filter(|&r| PrimePoly::monic_from_rank(p, n, r).is_irreducible().unwrap())
                .count();
            assert_eq!(count as i64, expected, "p={p} n={n}");
        }
    }
}
