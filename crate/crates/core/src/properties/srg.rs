use serde::Serialize;

use super::{is_regular, Witness, WitnessKind};
use crate::graph::Graph;

/// Parameters `(n, k, λ, μ)` of a strongly regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SrgParams {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgParams {
    /// `μ(n-k-1) = k(k-λ-1)`, the count of paths of length two from a vertex
    /// to its non-neighbours taken two ways.
    pub fn satisfies_identity(&self) -> bool {
        let lhs = self.mu as i64 * (self.n as i64 - self.k as i64 - 1);
        let rhs = self.k as i64 * (self.k as i64 - self.lambda as i64 - 1);
        lhs == rhs
    }
}

/// Strong-regularity parameters, or a witness that `λ` or `μ` is not constant.
///
/// Complete and edgeless graphs have no `μ` (resp. `λ`) and are reported as
/// [`WitnessKind::DegenerateSrg`].
pub fn srg_check(g: &Graph) -> Result<SrgParams, Witness> {
    let k = is_regular(g)?;
    let n = g.order();
    // (first pair seen, its common-neighbour count) for adjacent / non-adjacent
    let mut lambda: Option<((usize, usize), usize)> = None;
    let mut mu: Option<((usize, usize), usize)> = None;
    for u in 0..n {
        for v in u + 1..n {
            let common = g.neighbors(u).intersection_count(g.neighbors(v));
            let slot = if g.adjacent(u, v) { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(((u, v), common)),
                Some(((a, b), c)) if c != common => {
                    return Err(Witness::new(WitnessKind::SrgViolation, vec![a, b, u, v]));
                }
                Some(_) => {}
            }
        }
    }
    let (Some((_, lambda)), Some((_, mu))) = (lambda, mu) else {
        return Err(Witness::new(WitnessKind::DegenerateSrg, vec![]));
    };
    let params = SrgParams { n, k, lambda, mu };
    assert!(
        params.satisfies_identity(),
        "strongly regular parameters {params:?} violate mu(n-k-1) = k(k-lambda-1)"
    );
    Ok(params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::graph::{build_family, Family, FamilySpec};

    fn paley(q: u64) -> Graph {
        build_family(&FamilySpec::new(Family::Paley, Field::with_order(q).unwrap())).unwrap()
    }

    #[test]
    fn paley_parameters() {
        let p = srg_check(&paley(13)).unwrap();
        assert_eq!((p.n, p.k, p.lambda, p.mu), (13, 6, 2, 3));
        let p = srg_check(&paley(9)).unwrap();
        assert_eq!((p.n, p.k, p.lambda, p.mu), (9, 4, 1, 2));
    }

    #[test]
    fn c6_is_regular_but_not_srg() {
        let c6 = Graph::cycle(6);
        let w = srg_check(&c6).unwrap_err();
        assert_eq!(w.kind, WitnessKind::SrgViolation);
        assert!(w.replay(&c6));
    }

    #[test]
    fn degenerate_graphs() {
        for g in [Graph::complete(5), Graph::empty(4)] {
            let w = srg_check(&g).unwrap_err();
            assert_eq!(w.kind, WitnessKind::DegenerateSrg);
            assert!(w.replay(&g));
        }
        let w = srg_check(&Graph::path(3)).unwrap_err();
        assert_eq!(w.kind, WitnessKind::NonRegularPair);
    }

    #[test]
    fn petersen_like_identity() {
        // C5 is srg(5, 2, 0, 1)
        let p = srg_check(&Graph::cycle(5)).unwrap();
        assert_eq!((p.k, p.lambda, p.mu), (2, 0, 1));
        assert!(p.satisfies_identity());
        assert!(!SrgParams { n: 5, k: 2, lambda: 1, mu: 1 }.satisfies_identity());
    }
}
