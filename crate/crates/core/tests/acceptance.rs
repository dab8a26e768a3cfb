//! Acceptance criteria. Runs as a plain binary (`harness = false`) so that each
//! criterion prints exactly one pass/fail line; exits non-zero if any fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use common::{axioms_exhaustive, axioms_sampled, family, mpaley, naive_ec, paley, run_cli};
use paleylab::arith::{gcd, is_prime, prime_powers_in};
use paleylab::field::{residue_subgroup, Field, PowerTable, PrimePoly};
use paleylab::graph::{Family, Graph};
use paleylab::properties::{
    affine_transitivity, components, is_connected, is_regular, iso_to_complete, iso_to_cycle, n_ec_check,
    self_complementary_by_multiplier, srg_check, WitnessKind,
};
use rayon::prelude::*;

const GF16_LIMIT: Duration = Duration::from_millis(1);
const SRG_LIMIT: Duration = Duration::from_secs(5);
const MPALEY_LIMIT: Duration = Duration::from_secs(10);
const EC_LIMIT: Duration = Duration::from_secs(30);
const AXIOM_SAMPLES: usize = 100_000;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

fn power_rows(out: &str) -> Vec<String> {
    out.lines().skip_while(|l| *l != "powers:").skip(1).map(str::to_string).collect()
}

fn strip(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

fn gf16_table() -> Outcome {
    let expected = [
        "a^1 = a",
        "a^2 = a^2",
        "a^3 = a^3",
        "a^4 = a + 1",
        "a^5 = a^2 + a",
        "a^6 = a^3 + a^2",
        "a^7 = a^3 + a + 1",
        "a^8 = a^2 + 1",
        "a^9 = a^3 + a",
        "a^10 = a^2 + a + 1",
        "a^11 = a^3 + a^2 + a",
        "a^12 = a^3 + a^2 + a + 1",
        "a^13 = a^3 + a^2 + 1",
        "a^14 = a^3 + 1",
        "a^15 = 1",
    ];
    let start = Instant::now();
    let (code, out, err) = run_cli(&["field", "2", "4", "--tables"]);
    let elapsed = start.elapsed();
    ensure(code == 0, || format!("exit {code}: {err}"))?;
    let got: Vec<String> = power_rows(&out).iter().map(|r| strip(r)).collect();
    let want: Vec<String> = expected.iter().map(|r| strip(r)).collect();
    ensure(got == want, || format!("table mismatch: {got:?}"))?;
    ensure(out.contains("x^4+x+1"), || "modulus is not x^4+x+1".into())?;
    within(elapsed, GF16_LIMIT)?;
    Ok(format!("15 rows, {elapsed:?}"))
}

fn gf9_table() -> Outcome {
    let expected = ["a", "2a + 1", "2a + 2", "2", "2a", "a + 2", "a + 1", "1"];
    let (code, out, err) = run_cli(&["field", "3", "2", "--poly", "x^2+x+2", "--tables"]);
    ensure(code == 0, || format!("exit {code}: {err}"))?;
    let got: Vec<String> = power_rows(&out).iter().map(|r| strip(r)).collect();
    let want: Vec<String> = expected.iter().enumerate().map(|(i, e)| strip(&format!("a^{} = {e}", i + 1))).collect();
    ensure(got == want, || format!("table mismatch: {got:?}"))?;
    Ok("8 rows, modulus x^2+x+2".into())
}

fn gf25_elements() -> Outcome {
    let listing = "0, 1, 2, 3, 4, a, 2a, 3a, 4a, a + 1, a + 2, a + 3, a + 4, \
                   2a + 1, 2a + 2, 2a + 3, 2a + 4, 3a + 1, 3a + 2, 3a + 3, 3a + 4, \
                   4a + 1, 4a + 2, 4a + 3, 4a + 4";
    let f = Field::with_order(25).map_err(|e| e.to_string())?;
    ensure(f.modulus().to_string() == "x^2+2", || format!("modulus {}", f.modulus()))?;
    let want: BTreeSet<String> = listing.split(',').map(strip).collect();
    let got: BTreeSet<String> = f.elements().map(|x| f.format(x)).collect();
    ensure(want.len() == 25 && got == want, || format!("element set differs: {got:?}"))?;
    Ok("modulus x^2+2, 25 elements".into())
}

fn edge_set(g: &Graph) -> BTreeSet<(usize, usize)> {
    g.edges().collect()
}

fn named_edges(f: &Field, pairs: &[(&str, &str)]) -> Result<BTreeSet<(usize, usize)>, String> {
    pairs
        .iter()
        .map(|(x, y)| {
            let u = f.parse_element(x).map_err(|e| e.to_string())?.index() as usize;
            let v = f.parse_element(y).map_err(|e| e.to_string())?.index() as usize;
            Ok((u.min(v), u.max(v)))
        })
        .collect()
}

fn paley_goldens() -> Outcome {
    let f5 = Field::with_order(5).unwrap();
    let p5 = named_edges(&f5, &[("0", "1"), ("1", "2"), ("2", "3"), ("3", "4"), ("4", "0")])?;

    // The listing for q = 9 is written over a root of x^2+1.
    let f9 = Field::new(3, 2, Some(PrimePoly::parse("x^2+1", 3).unwrap())).unwrap();
    let p9 = named_edges(
        &f9,
        &[
            ("0", "1"), ("0", "2"), ("0", "a"), ("0", "2a"),
            ("1", "2"), ("1", "1+a"), ("1", "1+2a"), ("2", "2+a"), ("2", "2+2a"),
            ("a", "1+a"), ("a", "2+a"), ("a", "2a"),
            ("2a", "1+2a"), ("2a", "2+2a"), ("1+a", "2+a"), ("1+a", "1+2a"),
            ("1+2a", "2+2a"), ("2+a", "2+2a"),
        ],
    )?;

    let p13: BTreeSet<(usize, usize)> = (0..13)
        .flat_map(|x| [1, 3, 4, 9, 10, 12].map(|s| (x, (x + s) % 13)))
        .map(|(u, v)| (u.min(v), u.max(v)))
        .collect();

    for (q, want, size) in [(5, p5, 5), (9, p9, 18), (13, p13, 39)] {
        let got = edge_set(&paley(q));
        ensure(want.len() == size, || format!("listing for q={q} has {} edges", want.len()))?;
        ensure(got == want, || format!("Paley({q}) edge set differs"))?;
    }
    Ok("5, 18, 39 edges".into())
}

fn paley_orders() -> Vec<u64> {
    prime_powers_in(5, 121).filter(|(q, _, _)| q % 4 == 1).map(|(q, _, _)| q).collect()
}

fn srg_sweep() -> Outcome {
    let start = Instant::now();
    let orders = paley_orders();
    for &q in &orders {
        let s = srg_check(&paley(q)).map_err(|w| format!("Paley({q}) not srg: {w:?}"))?;
        let n = q as usize;
        let want = (n, (n - 1) / 2, (n - 5) / 4, (n - 1) / 4);
        ensure((s.n, s.k, s.lambda, s.mu) == want, || format!("Paley({q}) gave {s:?}"))?;
        ensure(s.satisfies_identity(), || format!("identity fails at q={q}"))?;
    }
    let elapsed = start.elapsed();
    within(elapsed, SRG_LIMIT)?;
    Ok(format!("{} orders, {elapsed:?}", orders.len()))
}

fn selfcomp_sweep() -> Outcome {
    let orders = paley_orders();
    for &q in &orders {
        let g = paley(q);
        let c = g.cayley().unwrap();
        ensure(self_complementary_by_multiplier(&g, &c.field, &c.connection).is_some(), || {
            format!("no multiplier for Paley({q})")
        })?;
    }
    Ok(format!("{} orders", orders.len()))
}

fn symmetric(g: &Graph) -> Result<(), String> {
    let c = g.cayley().unwrap();
    let r = affine_transitivity(g, &c.field, &c.connection).map_err(|w| format!("{}: {w:?}", g.label()))?;
    ensure(r.vertex_transitive && r.edge_transitive, || format!("{}: {r:?}", g.label()))
}

fn symmetry_sweep() -> Outcome {
    let mut count = 0;
    for q in paley_orders() {
        symmetric(&paley(q))?;
        count += 1;
    }
    for (q, _, _) in prime_powers_in(3, 27).filter(|(_, p, _)| *p != 2) {
        for m in (3..=13).step_by(2) {
            symmetric(&mpaley(q, m))?;
            count += 1;
        }
    }
    Ok(format!("{count} graphs"))
}

fn mpaley_sweep() -> Outcome {
    let start = Instant::now();
    let cases: Vec<(u64, u64)> = prime_powers_in(3, 125)
        .filter(|(_, p, _)| *p != 2)
        .flat_map(|(q, _, _)| (3..=25).step_by(2).map(move |m| (q, m)))
        .collect();
    cases.par_iter().try_for_each(|&(q, m)| -> Result<(), String> {
        let g = mpaley(q, m);
        let d = gcd(m, q - 1);
        let tag = || format!("{m}-P_{q}");
        ensure(iso_to_complete(&g) == (d == 1), || format!("{}: completeness", tag()))?;
        ensure(is_regular(&g) == Ok(((q - 1) / d) as usize), || format!("{}: degree", tag()))?;
        if is_prime(q) {
            ensure(is_connected(&g).is_ok(), || format!("{}: disconnected", tag()))?;
        }
        let e = g.edge_count() as u64;
        let half = q * (q - 1) / 4;
        ensure(if d == 1 { 4 * e > 4 * half } else { 4 * e != q * (q - 1) }, || {
            format!("{}: edge count {e}", tag())
        })?;
        let c = g.cayley().unwrap();
        ensure(self_complementary_by_multiplier(&g, &c.field, &c.connection).is_none(), || {
            format!("{}: has a complementing multiplier", tag())
        })
    })?;
    let elapsed = start.elapsed();
    within(elapsed, MPALEY_LIMIT)?;
    Ok(format!("{} graphs, {elapsed:?}", cases.len()))
}

fn triangles_27() -> Outcome {
    let g = mpaley(27, 13);
    let comps = components(&g);
    ensure(comps.len() == 9, || format!("{} components", comps.len()))?;
    for comp in &comps {
        let inside = comp.iter().all(|&u| comp.iter().all(|&v| u == v || g.adjacent(u, v)));
        ensure(comp.len() == 3 && inside, || format!("component {comp:?} is not a triangle"))?;
    }
    Ok("9 triangles".into())
}

fn ec_boundary() -> Outcome {
    let start = Instant::now();
    for q in [29, 37] {
        ensure(n_ec_check(&paley(q), 3).map_err(|e| e.to_string())?.holds(), || format!("Paley({q}) not 3-e.c."))?;
    }
    let frozen = [(13, vec![0, 1, 2], vec![1]), (17, vec![0, 1, 2], vec![0, 1, 2])];
    for (q, s_want, t_want) in frozen {
        let g = paley(q);
        let v = n_ec_check(&g, 3).map_err(|e| e.to_string())?;
        let w = v.witness().ok_or_else(|| format!("Paley({q}) unexpectedly 3-e.c."))?;
        let WitnessKind::EcFailure { s, t } = &w.kind else {
            return Err(format!("Paley({q}) witness {w:?}"));
        };
        ensure(*s == s_want && *t == t_want && w.replay(&g), || format!("Paley({q}) witness S={s:?} T={t:?}"))?;
    }
    let elapsed = start.elapsed();
    within(elapsed, EC_LIMIT)?;
    Ok(format!("29, 37 hold; 13, 17 fail at frozen witnesses; {elapsed:?}"))
}

fn gpaley_11() -> Outcome {
    let g = family(Family::GeneralizedPaley { k: 5 }, 11);
    let conn = g.cayley().unwrap().connection.len();
    ensure(conn == 2, || format!("connection set has {conn} elements"))?;
    ensure(iso_to_cycle(&g), || "not a cycle".into())?;
    Ok("C_11".into())
}

fn field_axioms() -> Outcome {
    let small: Vec<u64> = prime_powers_in(2, 81).map(|(q, _, _)| q).collect();
    let large: Vec<u64> = prime_powers_in(82, 4096).map(|(q, _, _)| q).collect();
    small.par_iter().try_for_each(|&q| axioms_exhaustive(&Field::with_order(q).unwrap()))?;
    large
        .par_iter()
        .try_for_each(|&q| axioms_sampled(&Field::with_order(q).unwrap(), AXIOM_SAMPLES, 0x5eed))?;
    Ok(format!("{} fields exhaustive, {} sampled", small.len(), large.len()))
}

fn solution_counts() -> Outcome {
    let orders: Vec<u64> = prime_powers_in(2, 125).map(|(q, _, _)| q).collect();
    orders.par_iter().try_for_each(|&q| -> Result<(), String> {
        let f = Field::with_order(q).unwrap();
        for m in (1..=25).step_by(2) {
            let want = gcd(m, q - 1) as usize;
            let mut preimages = vec![0usize; q as usize];
            for x in f.nonzero_elements() {
                preimages[f.pow(x, m).index() as usize] += 1;
            }
            let image = residue_subgroup(&f, m).map_err(|e| e.to_string())?;
            for c in f.nonzero_elements() {
                let got = preimages[c.index() as usize];
                let expect = if image.contains(c) { want } else { 0 };
                ensure(got == expect, || format!("q={q} m={m} c={}: {got} preimages", f.format(c)))?;
            }
        }
        Ok(())
    })?;
    Ok(format!("{} fields", orders.len()))
}

fn oracle_equivalence() -> Outcome {
    let orders: Vec<u64> = prime_powers_in(2, 256).map(|(q, _, _)| q).collect();
    orders.par_iter().filter(|&&q| q > 2).try_for_each(|&q| -> Result<(), String> {
        let f = Field::with_order(q).unwrap();
        let t = PowerTable::new(&f);
        for x in f.nonzero_elements() {
            for y in f.nonzero_elements() {
                ensure(t.mul(x, y) == f.mul(x, y), || format!("q={q}: table and direct products differ"))?;
            }
        }
        Ok(())
    })?;

    let mut graphs = Vec::new();
    for (q, p, _) in prime_powers_in(3, 17) {
        if q % 4 == 1 {
            graphs.push(paley(q));
        }
        if p != 2 {
            for m in (3..=9).step_by(2) {
                graphs.push(mpaley(q, m));
            }
        }
    }
    for g in &graphs {
        for n in 1..=3.min(g.order() - 1) {
            let lib = n_ec_check(g, n).map_err(|e| e.to_string())?;
            let lib = lib.witness().map(|w| match &w.kind {
                WitnessKind::EcFailure { s, t } => (s.clone(), t.clone()),
                _ => (vec![], vec![]),
            });
            ensure(lib == naive_ec(g, n), || format!("{} n={n}: checkers disagree", g.label()))?;
        }
    }
    Ok(format!("{} fields, {} graphs", orders.len() - 1, graphs.len()))
}

fn main() {
    let criteria: [Criterion; 14] = [
        ("GF(16) power table", gf16_table),
        ("GF(9) power table", gf9_table),
        ("GF(25) modulus and elements", gf25_elements),
        ("Paley(5), Paley(9), Paley(13) edge sets", paley_goldens),
        ("srg sweep", srg_sweep),
        ("self-complementarity sweep", selfcomp_sweep),
        ("symmetry sweep", symmetry_sweep),
        ("m-Paley sweep", mpaley_sweep),
        ("13-P_27 components", triangles_27),
        ("3-e.c. boundary", ec_boundary),
        ("GPaley(11) is a cycle", gpaley_11),
        ("field axioms and Frobenius", field_axioms),
        ("solution counts", solution_counts),
        ("oracle equivalence", oracle_equivalence),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  [{secs:>7.3}s] {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  [{secs:>7.3}s] {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
