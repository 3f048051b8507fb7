//! Distance and eccentricity matrices, ε-degrees, the ε-Wiener index, and
//! the structural predicates (diametrical, ε-regular) the bounds quantify
//! over.
//!
//! The eccentricity matrix keeps the entry d(u,v) of the distance matrix
//! exactly when d(u,v) = min(e(u), e(v)) and zeroes it otherwise.

use serde::Serialize;

use crate::graph::{Graph, Metric};
use crate::matrix::IntMatrix;

pub fn distance_matrix(metric: &Metric) -> IntMatrix {
    let n = metric.n();
    let mut m = IntMatrix::zeros(n);
    for u in 0..n {
        for v in 0..n {
            m.set(u, v, metric.dist[u][v] as u64);
        }
    }
    m
}

pub fn eccentricity_matrix(metric: &Metric) -> IntMatrix {
    let n = metric.n();
    let mut m = IntMatrix::zeros(n);
    for u in 0..n {
        for v in 0..n {
            let d = metric.dist[u][v];
            if u != v && d == metric.ecc[u].min(metric.ecc[v]) {
                m.set(u, v, d as u64);
            }
        }
    }
    m
}

/// Row sums, Wiener indices and the counts feeding the diameter-2 bound.
#[derive(Debug, Clone, Serialize)]
pub struct EpsilonProfile {
    /// ε-degree of each vertex: row sum of ε(G).
    pub degrees: Vec<u64>,
    /// W_ε(G): half the entry total of ε(G).
    pub wiener: u64,
    /// Classic Wiener index W(G) from the distance matrix.
    pub classic_wiener: u64,
    pub is_regular: bool,
    /// Edge count of G.
    pub m: usize,
    /// Number of vertices of full degree n-1.
    pub k: usize,
}

pub fn epsilon_profile(g: &Graph, metric: &Metric, eps: &IntMatrix) -> EpsilonProfile {
    let n = g.n();
    let degrees: Vec<u64> = (0..n).map(|i| eps.row_sum(i)).collect();
    let total = eps.total();
    assert!(total % 2 == 0, "entry total of a symmetric matrix must be even");
    let dist_total: u64 = metric.dist.iter().flatten().map(|&d| d as u64).sum();
    let is_regular = degrees.windows(2).all(|w| w[0] == w[1]);
    let k = (0..n).filter(|&u| g.degree(u) == n - 1).count();
    EpsilonProfile {
        degrees,
        wiener: total / 2,
        classic_wiener: dist_total / 2,
        is_regular,
        m: g.m(),
        k,
    }
}

/// True iff every vertex attains the diameter and has exactly one eccentric
/// vertex.
pub fn is_diametrical(metric: &Metric) -> bool {
    let n = metric.n();
    (0..n).all(|u| {
        metric.ecc[u] == metric.diam
            && (0..n).filter(|&v| metric.dist[u][v] == metric.ecc[u]).count() == 1
    })
}

pub fn is_epsilon_regular(profile: &EpsilonProfile) -> bool {
    profile.is_regular
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{make_family, FamilySpec};

    fn eps_of(spec: FamilySpec) -> (Graph, Metric, IntMatrix) {
        let g = make_family(&spec).unwrap();
        let metric = g.metric().unwrap();
        let eps = eccentricity_matrix(&metric);
        (g, metric, eps)
    }

    #[test]
    fn distance_matrix_star() {
        let (_, m, _) = eps_of(FamilySpec::Star(5));
        let d = distance_matrix(&m);
        assert_eq!(d.row(0), &[0, 1, 1, 1, 1]);
        assert_eq!(d.get(1, 2), 2);
    }

    #[test]
    fn distance_matrix_complete_is_j_minus_i() {
        let (_, m, _) = eps_of(FamilySpec::Complete(4));
        let d = distance_matrix(&m);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(d.get(i, j), u64::from(i != j));
            }
        }
    }

    #[test]
    fn eccentricity_matrix_p4() {
        let (_, _, eps) = eps_of(FamilySpec::Path(4));
        let expect = IntMatrix::from_rows(&[
            vec![0, 0, 2, 3],
            vec![0, 0, 0, 2],
            vec![2, 0, 0, 0],
            vec![3, 2, 0, 0],
        ]);
        assert_eq!(eps, expect);
    }

    #[test]
    fn star_eps_equals_distance() {
        let (_, m, eps) = eps_of(FamilySpec::Star(6));
        assert_eq!(eps, distance_matrix(&m));
    }

    #[test]
    fn bipartite_block_form() {
        let (_, _, eps) = eps_of(FamilySpec::CompleteBipartite(2, 3));
        // [2(J_2 - I_2), 0; 0, 2(J_3 - I_3)]
        let expect = IntMatrix::from_rows(&[
            vec![0, 2, 0, 0, 0],
            vec![2, 0, 0, 0, 0],
            vec![0, 0, 0, 2, 2],
            vec![0, 0, 2, 0, 2],
            vec![0, 0, 2, 2, 0],
        ]);
        assert_eq!(eps, expect);
    }

    #[test]
    fn profile_star5() {
        let (g, m, eps) = eps_of(FamilySpec::Star(5));
        let p = epsilon_profile(&g, &m, &eps);
        assert_eq!(p.degrees, vec![4, 7, 7, 7, 7]);
        assert_eq!(p.wiener, 16);
        assert!(!p.is_regular);
        assert_eq!((p.m, p.k), (4, 1));
    }

    #[test]
    fn profile_k33() {
        let (g, m, eps) = eps_of(FamilySpec::CompleteBipartite(3, 3));
        let p = epsilon_profile(&g, &m, &eps);
        assert!(p.degrees.iter().all(|&d| d == 4));
        assert_eq!(p.wiener, 12);
        assert!(p.is_regular);
    }

    #[test]
    fn profile_c4() {
        let (g, m, eps) = eps_of(FamilySpec::Cycle(4));
        let p = epsilon_profile(&g, &m, &eps);
        assert_eq!(p.degrees, vec![2, 2, 2, 2]);
        assert_eq!(p.wiener, 4);
        assert!(p.is_regular);
    }

    #[test]
    fn diametrical_predicate() {
        let (_, m, _) = eps_of(FamilySpec::Cycle(6));
        assert!(is_diametrical(&m));
        let (_, m, _) = eps_of(FamilySpec::Star(5));
        assert!(!is_diametrical(&m));
        let (_, m, _) = eps_of(FamilySpec::Crown(3));
        assert!(is_diametrical(&m));
    }

    #[test]
    fn epsilon_regular_predicate() {
        for (spec, expect) in [
            (FamilySpec::CompleteBipartite(4, 4), true),
            (FamilySpec::Star(5), false),
            (FamilySpec::Cycle(5), true),
        ] {
            let (g, m, eps) = eps_of(spec);
            let p = epsilon_profile(&g, &m, &eps);
            assert_eq!(is_epsilon_regular(&p), expect);
        }
    }

    #[test]
    fn every_row_has_an_eccentric_entry() {
        for spec in [
            FamilySpec::Path(7),
            FamilySpec::Cycle(5),
            FamilySpec::Complete(3),
            FamilySpec::Crown(4),
        ] {
            let (_, _, eps) = eps_of(spec);
            for i in 0..eps.n() {
                assert!(eps.row_sum(i) > 0);
            }
        }
    }
}
