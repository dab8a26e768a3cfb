#![allow(dead_code)]

use paleylab::field::{Field, FieldElement};
use paleylab::graph::{build_family, Family, FamilySpec, Graph};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn family(family: Family, q: u64) -> Graph {
    build_family(&FamilySpec::new(family, Field::with_order(q).unwrap())).unwrap()
}

pub fn paley(q: u64) -> Graph {
    family(Family::Paley, q)
}

pub fn mpaley(q: u64, m: u64) -> Graph {
    family(Family::MPaley { m }, q)
}

/// Runs the CLI in-process and returns (exit code, stdout, stderr).
pub fn run_cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("paleylab").chain(args.iter().copied());
    let code = paleylab::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

/// Plain double-loop n-e.c. search on `adjacent` only; returns the first
/// failing `(S, T)` in the same order as the library.
pub fn naive_ec(g: &Graph, n: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    let q = g.order();
    let mut s: Vec<usize> = (0..n).collect();
    loop {
        for mask in 0u32..(1 << n) {
            let t: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| s[i]).collect();
            let mut found = false;
            for x in 0..q {
                if s.contains(&x) {
                    continue;
                }
                let mut ok = true;
                for &y in &s {
                    if g.adjacent(x, y) != t.contains(&y) {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    found = true;
                    break;
                }
            }
            if !found {
                return Some((s.clone(), t));
            }
        }
        // next combination
        let mut i = n;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if s[i] < q - n + i {
                break;
            }
        }
        s[i] += 1;
        for j in i + 1..n {
            s[j] = s[j - 1] + 1;
        }
    }
}

/// Checks the field axioms on `(x, y, z)`; returns a description of the first failure.
pub fn axioms_hold(f: &Field, x: FieldElement, y: FieldElement, z: FieldElement) -> Result<(), String> {
    let fail = |what: &str| Err(format!("{what} fails in {f} at ({}, {}, {})", f.format(x), f.format(y), f.format(z)));
    if f.add(f.add(x, y), z) != f.add(x, f.add(y, z)) {
        return fail("additive associativity");
    }
    if f.mul(f.mul(x, y), z) != f.mul(x, f.mul(y, z)) {
        return fail("multiplicative associativity");
    }
    if f.add(x, y) != f.add(y, x) || f.mul(x, y) != f.mul(y, x) {
        return fail("commutativity");
    }
    if f.mul(x, f.add(y, z)) != f.add(f.mul(x, y), f.mul(x, z)) {
        return fail("distributivity");
    }
    if f.add(x, f.zero()) != x || f.mul(x, f.one()) != x || f.add(x, f.neg(x)) != f.zero() {
        return fail("identities");
    }
    if !x.is_zero() && f.mul(x, f.inv(x).unwrap()) != f.one() {
        return fail("inverse");
    }
    if f.mul(x, y).is_zero() != (x.is_zero() || y.is_zero()) {
        return fail("no zero divisors");
    }
    let p = f.p() as u64;
    let pow = |b, e| pow_by_squaring(f, b, e);
    if pow(f.add(x, y), p) != f.add(pow(x, p), pow(y, p)) || pow(f.mul(x, y), p) != f.mul(pow(x, p), pow(y, p)) {
        return fail("Frobenius");
    }
    if pow(x, f.q() as u64) != x {
        return fail("x^q = x");
    }
    Ok(())
}

/// Square-and-multiply with no exponent reduction, independent of `Field::pow`.
pub fn pow_by_squaring(f: &Field, x: FieldElement, mut e: u64) -> FieldElement {
    let (mut base, mut acc) = (x, f.one());
    while e > 0 {
        if e & 1 == 1 {
            acc = f.mul(acc, base);
        }
        base = f.mul(base, base);
        e >>= 1;
    }
    acc
}

/// Characteristic p: p*1 = 0 and k*1 != 0 for 0 < k < p.
pub fn characteristic_ok(f: &Field) -> bool {
    let mut acc = f.zero();
    for k in 1..=f.p() {
        acc = f.add(acc, f.one());
        if acc.is_zero() != (k == f.p()) {
            return false;
        }
    }
    true
}

/// Exhaustive over all triples.
pub fn axioms_exhaustive(f: &Field) -> Result<(), String> {
    if !characteristic_ok(f) {
        return Err(format!("characteristic of {f} is not {}", f.p()));
    }
    for x in f.elements() {
        for y in f.elements() {
            for z in f.elements() {
                axioms_hold(f, x, y, z)?;
            }
        }
    }
    Ok(())
}

pub fn axioms_sampled(f: &Field, samples: usize, seed: u64) -> Result<(), String> {
    if !characteristic_ok(f) {
        return Err(format!("characteristic of {f} is not {}", f.p()));
    }
    let mut rng = StdRng::seed_from_u64(seed ^ f.q() as u64);
    let mut pick = || FieldElement::from_index(rng.gen_range(0..f.q()));
    for _ in 0..samples {
        let (x, y, z) = (pick(), pick(), pick());
        axioms_hold(f, x, y, z)?;
    }
    Ok(())
}
