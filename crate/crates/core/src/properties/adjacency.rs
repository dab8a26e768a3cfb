//! Exhaustive adjacency-property searches: n-existential closure and `P(m,n,k)`.
//!
//! Subsets are enumerated in lexicographic order. The search is split across
//! worker threads by the first subset element and the earliest failure wins, so
//! witnesses do not depend on the thread count.

use std::ops::ControlFlow;

use rayon::prelude::*;

use super::{Witness, WitnessKind};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default largest `n` for [`n_ec_check`].
pub const EC_N_CAP: usize = 4;
/// Largest `m + n` for [`pmnk_check`].
pub const PMNK_CAP: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
    pub ec_n_cap: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            jobs: None,
            ec_n_cap: EC_N_CAP,
        }
    }
}

/// Outcome of an exhaustive property search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(Witness),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }
}

/// Calls `f` on each `k`-subset of `universe[from..]` in lexicographic order.
fn each_combination<B>(
    universe: &[usize],
    k: usize,
    prefix: &mut Vec<usize>,
    from: usize,
    f: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    if k == 0 {
        return f(prefix);
    }
    if universe.len() < k {
        return ControlFlow::Continue(());
    }
    for i in from..=universe.len() - k {
        prefix.push(universe[i]);
        let r = each_combination(universe, k - 1, prefix, i + 1, f);
        prefix.pop();
        r?;
    }
    ControlFlow::Continue(())
}

/// Runs `search(first)` for every candidate first element and returns the
/// result for the smallest `first` that produced one.
fn first_failure<F>(firsts: Vec<usize>, jobs: Option<usize>, search: F) -> Option<Witness>
where
    F: Fn(usize) -> Option<Witness> + Sync + Send,
{
    let run = || firsts.into_par_iter().find_map_first(&search);
    match jobs {
        None => run(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("thread pool")
            .install(run),
    }
}

/// `true` when some vertex outside `s` is joined to every vertex of `s` whose
/// bit is set in `mask` and to no other vertex of `s`.
fn has_ec_vertex(g: &Graph, s: &[usize], mask: usize, scratch: &mut [u64]) -> bool {
    scratch.iter_mut().for_each(|w| *w = !0);
    for (i, &v) in s.iter().enumerate() {
        let row = g.neighbors(v).words();
        if mask >> i & 1 == 1 {
            scratch.iter_mut().zip(row).for_each(|(w, r)| *w &= r);
        } else {
            scratch.iter_mut().zip(row).for_each(|(w, r)| *w &= !r);
        }
    }
    for &v in s {
        scratch[v / 64] &= !(1 << (v % 64));
    }
    let n = g.order();
    if n % 64 != 0 {
        if let Some(last) = scratch.last_mut() {
            *last &= (1u64 << (n % 64)) - 1;
        }
    }
    scratch.iter().any(|&w| w != 0)
}

pub fn n_ec_check(g: &Graph, n: usize) -> Result<Verdict> {
    n_ec_check_with(g, n, &SearchOptions::default())
}

/// Exhaustive n-existential-closure check over all `n`-subsets `S` and all
/// `T ⊆ S`. `T` is enumerated as a bitmask over the sorted `S` (bit `i` ↔
/// `S[i]`), ascending; the witness is the first failing `(S, T)`.
pub fn n_ec_check_with(g: &Graph, n: usize, opts: &SearchOptions) -> Result<Verdict> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    if n > opts.ec_n_cap {
        return Err(Error::CapExceeded {
            what: "n",
            value: n as u64,
            cap: opts.ec_n_cap as u64,
        });
    }
    let order = g.order();
    if order <= n {
        return Err(Error::Precondition(format!(
            "graph has {order} vertices, need more than n = {n}"
        )));
    }
    let universe: Vec<usize> = (0..order).collect();
    let words = order.div_ceil(64);
    let witness = first_failure((0..=order - n).collect(), opts.jobs, |first| {
        let mut scratch = vec![0u64; words];
        let mut prefix = vec![first];
        let found = each_combination(&universe, n - 1, &mut prefix, first + 1, &mut |s| {
            match (0..1usize << n).find(|&mask| !has_ec_vertex(g, s, mask, &mut scratch)) {
                None => ControlFlow::Continue(()),
                Some(mask) => ControlFlow::Break((s.to_vec(), mask)),
            }
        });
        match found {
            ControlFlow::Continue(()) => None,
            ControlFlow::Break((s, mask)) => {
                let t: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| s[i]).collect();
                Some(Witness::new(WitnessKind::EcFailure { s: s.clone(), t }, s))
            }
        }
    });
    Ok(witness.map_or(Verdict::Holds, Verdict::Fails))
}

pub fn pmnk_check(g: &Graph, m: usize, n: usize, k: usize) -> Result<Verdict> {
    pmnk_check_with(g, m, n, k, &SearchOptions::default())
}

/// Exhaustive `P(m, n, k)` check: every disjoint `(A, B)` with `|A| = m`,
/// `|B| = n` needs at least `k` vertices outside `A ∪ B` joined to all of `A`
/// and none of `B`. Pairs are ordered by `A` then `B`, each lexicographically.
pub fn pmnk_check_with(g: &Graph, m: usize, n: usize, k: usize, opts: &SearchOptions) -> Result<Verdict> {
    if m == 0 && n == 0 {
        return Err(Error::Precondition("m and n cannot both be 0".into()));
    }
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    if m + n > PMNK_CAP {
        return Err(Error::CapExceeded {
            what: "m + n",
            value: (m + n) as u64,
            cap: PMNK_CAP as u64,
        });
    }
    let order = g.order();
    if order < m + n {
        return Ok(Verdict::Holds);
    }
    let words = order.div_ceil(64);
    let universe: Vec<usize> = (0..order).collect();

    let count = |a: &[usize], b: &[usize], scratch: &mut [u64]| -> usize {
        scratch.iter_mut().for_each(|w| *w = !0);
        for &v in a {
            scratch.iter_mut().zip(g.neighbors(v).words()).for_each(|(w, r)| *w &= r);
        }
        for &v in b {
            scratch.iter_mut().zip(g.neighbors(v).words()).for_each(|(w, r)| *w &= !r);
        }
        for &v in a.iter().chain(b) {
            scratch[v / 64] &= !(1 << (v % 64));
        }
        if order % 64 != 0 {
            *scratch.last_mut().unwrap() &= (1u64 << (order % 64)) - 1;
        }
        scratch.iter().map(|w| w.count_ones() as usize).sum()
    };

    let check_b = |a: &[usize], b_first: Option<usize>, scratch: &mut Vec<u64>| {
        let rest: Vec<usize> = universe.iter().copied().filter(|v| !a.contains(v)).collect();
        let mut inner = |b: &[usize]| {
            let found = count(a, b, scratch);
            if found < k {
                ControlFlow::Break(Witness::new(
                    WitnessKind::PmnkFailure {
                        a: a.to_vec(),
                        b: b.to_vec(),
                        found,
                        required: k,
                    },
                    a.iter().chain(b).copied().collect(),
                ))
            } else {
                ControlFlow::Continue(())
            }
        };
        match b_first {
            None => each_combination(&rest, n, &mut Vec::new(), 0, &mut inner),
            Some(first) => {
                let pos = rest.iter().position(|&v| v == first).unwrap();
                each_combination(&rest, n - 1, &mut vec![first], pos + 1, &mut inner)
            }
        }
    };

    let witness = if m > 0 {
        first_failure((0..=order - m).collect(), opts.jobs, |first| {
            let mut scratch = vec![0u64; words];
            let mut prefix = vec![first];
            match each_combination(&universe, m - 1, &mut prefix, first + 1, &mut |a| {
                check_b(a, None, &mut scratch)
            }) {
                ControlFlow::Break(w) => Some(w),
                ControlFlow::Continue(()) => None,
            }
        })
    } else {
        first_failure((0..=order - n).collect(), opts.jobs, |first| {
            let mut scratch = vec![0u64; words];
            match check_b(&[], Some(first), &mut scratch) {
                ControlFlow::Break(w) => Some(w),
                ControlFlow::Continue(()) => None,
            }
        })
    };
    Ok(witness.map_or(Verdict::Holds, Verdict::Fails))
}
