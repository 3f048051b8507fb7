//! One named check per claim: each runs over a declared graph universe and
//! emits a structured [`CheckReport`] with counterexample capture.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::ecc::{
    distance_matrix, eccentricity_matrix, epsilon_profile, is_diametrical, EpsilonProfile,
};
use crate::error::Result;
use crate::generators::{
    all_connected_graphs, all_connected_graphs_capped, all_trees, canonical_form, make_family,
    FamilySpec,
};
use crate::graph::{Graph, Metric};
use crate::graph6::to_graph6;
use crate::matrix::IntMatrix;
use crate::spectra::{
    char_poly_exact, eigenvalues_sym, max_quotient_bound, CharPoly, Spectrum,
};


#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub graph6: String,
    pub value: f64,
    pub note: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub universe: String,
    pub tested: usize,
    pub passed: bool,
    pub counterexamples: Vec<Counterexample>,
    pub witnesses: Vec<Witness>,
    pub wall_ms: u128,
}

impl CheckReport {
    fn finish(
        check: &str,
        universe: &str,
        tested: usize,
        counterexamples: Vec<Counterexample>,
        witnesses: Vec<Witness>,
        start: Instant,
    ) -> CheckReport {
        CheckReport {
            check: check.to_string(),
            universe: universe.to_string(),
            tested,
            passed: counterexamples.is_empty(),
            counterexamples,
            witnesses,
            wall_ms: start.elapsed().as_millis(),
        }
    }
}

/// Everything the checks need about one graph, computed once.
pub struct Evidence {
    pub graph: Graph,
    pub metric: Metric,
    pub eps: IntMatrix,
    pub profile: EpsilonProfile,
    pub spectrum: Spectrum,
}

impl Evidence {
    pub fn gather(graph: Graph) -> Result<Evidence> {
        let metric = graph.metric()?;
        let eps = eccentricity_matrix(&metric);
        let profile = epsilon_profile(&graph, &metric, &eps);
        let spectrum = eigenvalues_sym(&eps)?;
        Ok(Evidence {
            graph,
            metric,
            eps,
            profile,
            spectrum,
        })
    }

    fn g6(&self) -> String {
        to_graph6(&self.graph)
    }
}

fn gather_all(graphs: Vec<Graph>) -> Result<Vec<Evidence>> {
    graphs.into_par_iter().map(Evidence::gather).collect()
}

/// Claimed integer eigenvalue: numeric closeness plus an exact root check
/// on the characteristic polynomial.
fn equals_integer_exactly(value: f64, target: i64, poly: &CharPoly) -> bool {
    (value - target as f64).abs() <= crate::config::get().tol_eq && poly.eval(&BigInt::from(target)).is_zero()
}

/// Exact star determinant (-1)^(n-1) (n-1) 2^(n-2).
pub fn star_eps_determinant(n: usize) -> BigInt {
    let mag = BigInt::from(n as u64 - 1) << (n - 2);
    if n % 2 == 0 {
        -mag
    } else {
        mag
    }
}

/// Tree eccentricity matrices are invertible exactly for stars, with P4
/// the lone exception.
pub fn check_star_invertibility(n_min: usize, n_max: usize) -> Result<CheckReport> {
    let start = Instant::now();
    let mut counterexamples = Vec::new();
    let mut witnesses = Vec::new();
    let mut tested = 0;
    for n in n_min.max(2)..=n_max {
        let star_cert = canonical_form(&make_family(&FamilySpec::Star(n))?);
        let trees = all_trees(n)?;
        let dets: Vec<(String, bool, BigInt)> = trees
            .into_par_iter()
            .map(|t| {
                let is_star = canonical_form(&t) == star_cert;
                let eps = eccentricity_matrix(&t.metric().unwrap());
                (to_graph6(&t), is_star, crate::spectra::determinant_exact(&eps))
            })
            .collect();
        for (g6, is_star, det) in dets {
            tested += 1;
            let expect_invertible = is_star || n == 4;
            if (det != BigInt::zero()) != expect_invertible {
                counterexamples.push(Counterexample {
                    graph6: g6.clone(),
                    expected: if expect_invertible { "det != 0" } else { "det = 0" }.into(),
                    actual: format!("det = {det}"),
                });
            }
            if is_star {
                let formula = star_eps_determinant(n);
                if det != formula {
                    counterexamples.push(Counterexample {
                        graph6: g6.clone(),
                        expected: format!("star det = {formula}"),
                        actual: format!("det = {det}"),
                    });
                } else {
                    witnesses.push(Witness {
                        graph6: g6,
                        value: 0.0,
                        note: format!("star on {n} vertices, det = {det}"),
                    });
                }
            }
        }
    }
    Ok(CheckReport::finish(
        "star-invertibility",
        &format!("all trees on {n_min}..={n_max} vertices"),
        tested,
        counterexamples,
        witnesses,
        start,
    ))
}

/// Among diameter-2 graphs on n vertices the star is the unique maximizer
/// of the ε-spectral radius, at (n-2)+sqrt(n²-3n+3).
pub fn check_diam2_max(n: usize) -> Result<CheckReport> {
    let start = Instant::now();
    let star_cert = canonical_form(&make_family(&FamilySpec::Star(n))?);
    let all = gather_all(all_connected_graphs(n)?)?;
    let universe: Vec<&Evidence> = all.iter().filter(|e| e.metric.diam == 2).collect();
    let mut counterexamples = Vec::new();
    let mut witnesses = Vec::new();
    let expected_max = (n as f64 - 2.0) + ((n * n - 3 * n + 3) as f64).sqrt();
    let mut best: Option<(&Evidence, f64)> = None;
    for ev in &universe {
        let rho = ev.spectrum.radius;
        let rho_d = eigenvalues_sym(&distance_matrix(&ev.metric))?.radius;
        if rho > rho_d + crate::config::get().tol_eq {
            counterexamples.push(Counterexample {
                graph6: ev.g6(),
                expected: format!("rho(eps) <= rho(D) = {rho_d}"),
                actual: format!("rho(eps) = {rho}"),
            });
        }
        match best {
            Some((_, r)) if r >= rho => {}
            _ => best = Some((ev, rho)),
        }
        // any non-star within tolerance of the maximum breaks uniqueness
        if (rho - expected_max).abs() <= crate::config::get().tol_eq && canonical_form(&ev.graph) != star_cert {
            counterexamples.push(Counterexample {
                graph6: ev.g6(),
                expected: "star is the unique maximizer".into(),
                actual: format!("non-star attains rho = {rho}"),
            });
        }
    }
    if let Some((ev, rho)) = best {
        if (rho - expected_max).abs() > crate::config::get().tol_eq || canonical_form(&ev.graph) != star_cert {
            counterexamples.push(Counterexample {
                graph6: ev.g6(),
                expected: format!("max rho = {expected_max} at the star"),
                actual: format!("max rho = {rho}"),
            });
        } else {
            witnesses.push(Witness {
                graph6: ev.g6(),
                value: rho,
                note: "unique maximizer".into(),
            });
        }
    }
    Ok(CheckReport::finish(
        "diam2-max",
        &format!("connected graphs on {n} vertices with diameter 2"),
        universe.len(),
        counterexamples,
        witnesses,
        start,
    ))
}

/// rho(ε) >= diam, equality exactly for diametrical graphs, whose spectrum
/// is {d, -d} each with multiplicity n/2.
pub fn check_radius_lower_bound(universe: &[Evidence], label: &str) -> CheckReport {
    let start = Instant::now();
    let mut counterexamples = Vec::new();
    let mut witnesses = Vec::new();
    let mut tested = 0;
    for ev in universe {
        if ev.metric.diam < 2 {
            continue;
        }
        tested += 1;
        let d = ev.metric.diam as f64;
        let rho = ev.spectrum.radius;
        if rho < d - crate::config::get().tol_eq {
            counterexamples.push(Counterexample {
                graph6: ev.g6(),
                expected: format!("rho >= d = {d}"),
                actual: format!("rho = {rho}"),
            });
            continue;
        }
        let near = (rho - d).abs() <= crate::config::get().tol_eq;
        let diametrical = is_diametrical(&ev.metric);
        if near != diametrical {
            counterexamples.push(Counterexample {
                graph6: ev.g6(),
                expected: format!("rho = d iff diametrical (diametrical = {diametrical})"),
                actual: format!("rho = {rho}, d = {d}"),
            });
            continue;
        }
        if near {
            let poly = char_poly_exact(&ev.eps).expect("integer matrix");
            if !equals_integer_exactly(rho, ev.metric.diam as i64, &poly) {
                counterexamples.push(Counterexample {
                    graph6: ev.g6(),
                    expected: format!("char poly has exact root {d}"),
                    actual: format!("p({d}) != 0"),
                });
                continue;
            }
            let n = ev.graph.n();
            let spectrum_ok = n % 2 == 0
                && ev.spectrum.values[..n / 2].iter().all(|v| (v - d).abs() <= crate::config::get().tol_eq)
                && ev.spectrum.values[n / 2..].iter().all(|v| (v + d).abs() <= crate::config::get().tol_eq);
            if spectrum_ok {
                witnesses.push(Witness {
                    graph6: ev.g6(),
                    value: rho,
                    note: format!("diametrical, spectrum {{{}^{m}, {}^{m}}}", d, -d, m = n / 2),
                });
            } else {
                counterexamples.push(Counterexample {
                    graph6: ev.g6(),
                    expected: format!("spectrum {{d^(n/2), (-d)^(n/2)}} with d = {d}"),
                    actual: format!("{:?}", ev.spectrum.groups),
                });
            }
        }
    }
    CheckReport::finish("radius-lower-bound", label, tested, counterexamples, witnesses, start)
}

/// Among connected bipartite graphs on 2n vertices the crown has minimum
/// ε-spectral radius, equal to 3.
pub fn check_bipartite_min(half_n: usize, allow_n8: bool) -> Result<CheckReport> {
    let start = Instant::now();
    let crown = make_family(&FamilySpec::Crown(half_n))?;
    let crown_cert = canonical_form(&crown);
    let all = gather_all(
        all_connected_graphs_capped(2 * half_n, allow_n8)?
            .into_iter()
            .filter(Graph::is_bipartite)
            .collect(),
    )?;
    let mut counterexamples = Vec::new();
    let mut witnesses = Vec::new();
    let mut min: Option<(&Evidence, f64)> = None;
    for ev in &all {
        let rho = ev.spectrum.radius;
        match min {
            Some((_, r)) if r <= rho => {}
            _ => min = Some((ev, rho)),
        }
    }
    if let Some((ev, rho)) = min {
        if (rho - 3.0).abs() > crate::config::get().tol_eq {
            counterexamples.push(Counterexample {
                graph6: ev.g6(),
                expected: "min rho = 3".into(),
                actual: format!("min rho = {rho}"),
            });
        }
        let crown_attains = all.iter().any(|e| {
            (e.spectrum.radius - rho).abs() <= crate::config::get().tol_eq && canonical_form(&e.graph) == crown_cert
        });
        if !crown_attains {
            counterexamples.push(Counterexample {
                graph6: to_graph6(&crown),
                expected: "crown attains the minimum".into(),
                actual: format!("crown rho differs from min {rho}"),
            });
        } else {
            witnesses.push(Witness {
                graph6: to_graph6(&crown),
                value: rho,
                note: format!("crown W_{{{half_n},{half_n}}} attains the minimum"),
            });
        }
    }
    // closed forms for the two diameter-2 bipartite graphs
    let knn = Evidence::gather(make_family(&FamilySpec::CompleteBipartite(half_n, half_n))?)?;
    let expect_knn = 2.0 * (half_n as f64 - 1.0);
    if (knn.spectrum.radius - expect_knn).abs() > crate::config::get().tol_eq {
        counterexamples.push(Counterexample {
            graph6: knn.g6(),
            expected: format!("rho(K_{{n,n}}) = {expect_knn}"),
            actual: format!("{}", knn.spectrum.radius),
        });
    }
    let star = Evidence::gather(make_family(&FamilySpec::Star(2 * half_n))?)?;
    let expect_star =
        2.0 * (half_n as f64 - 1.0) + ((4 * half_n * half_n - 6 * half_n + 3) as f64).sqrt();
    if (star.spectrum.radius - expect_star).abs() > crate::config::get().tol_eq {
        counterexamples.push(Counterexample {
            graph6: star.g6(),
            expected: format!("rho(K_{{1,2n-1}}) = {expect_star}"),
            actual: format!("{}", star.spectrum.radius),
        });
    }
    Ok(CheckReport::finish(
        "bipartite-min",
        &format!("connected bipartite graphs on {} vertices", 2 * half_n),
        all.len(),
        counterexamples,
        witnesses,
        start,
    ))
}

/// rho(ε) >= 2 W_ε / n, equality exactly for ε-regular graphs.
pub fn check_wiener_bound(universe: &[Evidence], label: &str) -> CheckReport {
    let start = Instant::now();
    let mut counterexamples = Vec::new();
    let mut witnesses = Vec::new();
    for ev in universe {
        let n = ev.graph.n() as f64;
        let bound = 2.0 * ev.profile.wiener as f64 / n;
        let rho = ev.spectrum.radius;
        if rho < bound - crate::config::get().tol_eq {
            counterexamples.push(Counterexample {
                graph6: ev.g6(),
                expected: format!("rho >= 2W_eps/n = {bound}"),
                actual: format!("rho = {rho}"),
            });
            continue;
        }
        let near = (rho - bound).abs() <= crate::config::get().tol_eq;
        if near != ev.profile.is_regular {
            counterexamples.push(Counterexample {
                graph6: ev.g6(),
                expected: format!(
                    "equality iff eps-regular (regular = {})",
                    ev.profile.is_regular
                ),
                actual: format!("rho = {rho}, bound = {bound}"),
            });
        } else if near {
            witnesses.push(Witness {
                graph6: ev.g6(),
                value: rho,
                note: "eps-regular, bound tight".into(),
            });
        }
    }
    CheckReport::finish("wiener-bound", label, universe.len(), counterexamples, witnesses, start)
}

/// Diameter-2 corollary: rho >= [2(n²-n-2m)+k(2n-k-1)]/n, and that
/// numerator equals 2 W_ε exactly.
pub fn check_eq1_bound(universe: &[Evidence], label: &str) -> CheckReport {
    let start = Instant::now();
    let mut counterexamples = Vec::new();
    let mut tested = 0;
    for ev in universe {
        if ev.metric.diam != 2 {
            continue;
        }
        tested += 1;
        let n = ev.graph.n() as i64;
        let m = ev.profile.m as i64;
        let k = ev.profile.k as i64;
        let numerator = 2 * (n * n - n - 2 * m) + k * (2 * n - k - 1);
        if numerator != 2 * ev.profile.wiener as i64 {
            counterexamples.push(Counterexample {
                graph6: ev.g6(),
                expected: format!("2(n^2-n-2m)+k(2n-k-1) = 2W_eps = {}", 2 * ev.profile.wiener),
                actual: format!("{numerator}"),
            });
            continue;
        }
        let bound = numerator as f64 / n as f64;
        if ev.spectrum.radius < bound - crate::config::get().tol_eq {
            counterexamples.push(Counterexample {
                graph6: ev.g6(),
                expected: format!("rho >= {bound}"),
                actual: format!("rho = {}", ev.spectrum.radius),
            });
        }
    }
    CheckReport::finish("eq1-bound", label, tested, counterexamples, Vec::new(), start)
}

/// rho(ε) >= max_i μ₁(i) from the ε-degree quotient matrix.
pub fn check_quotient_bound(universe: &[Evidence], label: &str) -> CheckReport {
    let start = Instant::now();
    let mut counterexamples = Vec::new();
    let mut witnesses = Vec::new();
    let mut tested = 0;
    for ev in universe {
        if ev.graph.n() < 2 {
            continue;
        }
        tested += 1;
        let mu = max_quotient_bound(&ev.profile);
        let rho = ev.spectrum.radius;
        if rho < mu - crate::config::get().tol_eq {
            counterexamples.push(Counterexample {
                graph6: ev.g6(),
                expected: format!("rho >= max mu1 = {mu}"),
                actual: format!("rho = {rho}"),
            });
        } else if (rho - mu).abs() <= crate::config::get().tol_tight {
            witnesses.push(Witness {
                graph6: ev.g6(),
                value: rho,
                note: "quotient bound tight".into(),
            });
        }
    }
    CheckReport::finish("quotient-bound", label, tested, counterexamples, witnesses, start)
}

fn spectrum_matches(actual: &[f64], mut expected: Vec<f64>, tol: f64) -> bool {
    expected.sort_by(|a, b| b.partial_cmp(a).unwrap());
    actual.len() == expected.len()
        && actual
            .iter()
            .zip(&expected)
            .all(|(a, e)| (a - e).abs() <= tol)
}

/// ε-energy of K_{p,q} is 4(p+q-2); of K_{n1..nk} with all parts >= 2 it
/// is 4(n-k), with the closed-form spectra.
pub fn check_partite_energy(p_max: usize, multipartite_specs: &[Vec<usize>]) -> Result<CheckReport> {
    let start = Instant::now();
    let mut counterexamples = Vec::new();
    let mut tested = 0;
    for p in 2..=p_max {
        for q in p..=p_max {
            tested += 1;
            let ev = Evidence::gather(make_family(&FamilySpec::CompleteBipartite(p, q))?)?;
            let expect_energy = 4.0 * (p + q - 2) as f64;
            let mut expected = vec![2.0 * (p as f64 - 1.0), 2.0 * (q as f64 - 1.0)];
            expected.extend(std::iter::repeat(-2.0).take(p + q - 2));
            if (ev.spectrum.energy - expect_energy).abs() > crate::config::get().tol_energy
                || !spectrum_matches(&ev.spectrum.values, expected, crate::config::get().tol_energy)
            {
                counterexamples.push(Counterexample {
                    graph6: ev.g6(),
                    expected: format!("K_{{{p},{q}}} energy {expect_energy}, spectrum per closed form"),
                    actual: format!("energy {}, {:?}", ev.spectrum.energy, ev.spectrum.groups),
                });
            }
        }
    }
    for parts in multipartite_specs {
        tested += 1;
        let ev = Evidence::gather(make_family(&FamilySpec::CompleteMultipartite(parts.clone()))?)?;
        let n: usize = parts.iter().sum();
        let k = parts.len();
        let expect_energy = 4.0 * (n - k) as f64;
        let mut expected: Vec<f64> = parts.iter().map(|&p| 2.0 * (p as f64 - 1.0)).collect();
        expected.extend(std::iter::repeat(-2.0).take(n - k));
        if (ev.spectrum.energy - expect_energy).abs() > crate::config::get().tol_energy
            || !spectrum_matches(&ev.spectrum.values, expected, crate::config::get().tol_energy)
        {
            counterexamples.push(Counterexample {
                graph6: ev.g6(),
                expected: format!("K_{parts:?} energy {expect_energy}"),
                actual: format!("energy {}", ev.spectrum.energy),
            });
        }
    }
    Ok(CheckReport::finish(
        "partite-energy",
        &format!(
            "K_{{p,q}} for 2 <= p <= q <= {p_max} plus {} multipartite specs",
            multipartite_specs.len()
        ),
        tested,
        counterexamples,
        Vec::new(),
        start,
    ))
}

#[derive(Debug, Clone, Serialize)]
pub struct EquienergeticPair {
    pub graph6_a: String,
    pub graph6_b: String,
    pub energy: f64,
    pub spectrum_a: Vec<f64>,
    pub spectrum_b: Vec<f64>,
    /// Exact characteristic polynomials differ.
    pub non_cospectral: bool,
}

/// All non-cospectral ε-equienergetic pairs among connected graphs on n
/// vertices (energy bucket tolerance 1e-7, cospectrality decided exactly).
pub fn equienergetic_pairs(n: usize) -> Result<Vec<EquienergeticPair>> {
    let mut evidence = gather_all(all_connected_graphs(n)?)?;
    // deterministic bucket order: by energy, then canonical form
    evidence.sort_by(|a, b| {
        a.spectrum
            .energy
            .partial_cmp(&b.spectrum.energy)
            .unwrap()
            .then_with(|| canonical_form(&a.graph).cmp(&canonical_form(&b.graph)))
    });
    let polys: Vec<CharPoly> = evidence
        .par_iter()
        .map(|e| char_poly_exact(&e.eps).expect("integer matrix"))
        .collect();
    let mut pairs = Vec::new();
    let mut bucket_start = 0;
    for i in 1..=evidence.len() {
        let new_bucket = i == evidence.len()
            || (evidence[i].spectrum.energy - evidence[i - 1].spectrum.energy).abs() > crate::config::get().tol_bucket;
        if !new_bucket {
            continue;
        }
        for a in bucket_start..i {
            for b in a + 1..i {
                let non_cospectral = polys[a] != polys[b];
                if non_cospectral {
                    pairs.push(EquienergeticPair {
                        graph6_a: to_graph6(&evidence[a].graph),
                        graph6_b: to_graph6(&evidence[b].graph),
                        energy: evidence[a].spectrum.energy,
                        spectrum_a: evidence[a].spectrum.values.clone(),
                        spectrum_b: evidence[b].spectrum.values.clone(),
                        non_cospectral,
                    });
                }
            }
        }
        bucket_start = i;
    }
    Ok(pairs)
}

/// Search for non-cospectral ε-equienergetic pairs; the pass verdict
/// matches the known landscape (none at n = 3, 4; some for n >= 5).
pub fn search_equienergetic(n: usize) -> Result<CheckReport> {
    let start = Instant::now();
    let universe_size = all_connected_graphs(n)?.len();
    let pairs = equienergetic_pairs(n)?;
    let expect_empty = n <= 4;
    let mut counterexamples = Vec::new();
    if expect_empty && !pairs.is_empty() {
        for p in &pairs {
            counterexamples.push(Counterexample {
                graph6: format!("{} / {}", p.graph6_a, p.graph6_b),
                expected: format!("no equienergetic pairs at n = {n}"),
                actual: format!("pair with energy {}", p.energy),
            });
        }
    } else if !expect_empty && pairs.is_empty() {
        counterexamples.push(Counterexample {
            graph6: String::new(),
            expected: format!("at least one non-cospectral equienergetic pair at n = {n}"),
            actual: "none found".into(),
        });
    }
    let witnesses = pairs
        .iter()
        .map(|p| Witness {
            graph6: format!("{} / {}", p.graph6_a, p.graph6_b),
            value: p.energy,
            note: "non-cospectral equienergetic pair".into(),
        })
        .collect();
    Ok(CheckReport::finish(
        "equienergetic",
        &format!("connected graphs on {n} vertices ({universe_size} graphs)"),
        universe_size,
        counterexamples,
        witnesses,
        start,
    ))
}

/// ε(G) is entrywise dominated by D(G), so rho(ε) <= rho(D).
pub fn check_domination(universe: &[Evidence], label: &str) -> CheckReport {
    let start = Instant::now();
    let mut counterexamples = Vec::new();
    for ev in universe {
        let d = distance_matrix(&ev.metric);
        assert!(ev.eps.dominated_by(&d));
        let rho_d = eigenvalues_sym(&d).expect("symmetric").radius;
        if ev.spectrum.radius > rho_d + crate::config::get().tol_eq {
            counterexamples.push(Counterexample {
                graph6: ev.g6(),
                expected: format!("rho(eps) <= rho(D) = {rho_d}"),
                actual: format!("rho(eps) = {}", ev.spectrum.radius),
            });
        }
    }
    CheckReport::finish("domination", label, universe.len(), counterexamples, Vec::new(), start)
}

/// Evidence for every connected graph on n_min..=n_max vertices.
pub fn exhaustive_universe(n_min: usize, n_max: usize) -> Result<Vec<Evidence>> {
    let mut out = Vec::new();
    for n in n_min..=n_max {
        out.extend(gather_all(all_connected_graphs(n)?)?);
    }
    Ok(out)
}

/// Runs the whole suite at its default scales.
pub fn run_all(seed: u64) -> Result<Vec<CheckReport>> {
    use rand::SeedableRng;
    let mut reports = Vec::new();
    reports.push(check_star_invertibility(2, 10)?);
    reports.push(check_diam2_max(5)?);
    reports.push(check_diam2_max(6)?);
    let universe = exhaustive_universe(1, 7)?;
    reports.push(check_radius_lower_bound(&universe, "connected graphs, n <= 7"));
    reports.push(check_bipartite_min(3, false)?);
    reports.push(check_wiener_bound(&universe, "connected graphs, n <= 7"));
    reports.push(check_eq1_bound(&universe, "diameter-2 graphs, n <= 7"));
    reports.push(check_quotient_bound(&universe, "connected graphs, n <= 7"));
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let specs = random_multipartite_specs(&mut rng, 50, 60);
    reports.push(check_partite_energy(20, &specs)?);
    for n in 3..=6 {
        reports.push(search_equienergetic(n)?);
    }
    reports.push(check_domination(&universe, "connected graphs, n <= 7"));
    Ok(reports)
}

/// Random complete-multipartite part vectors with every part >= 2 and
/// total order <= max_n.
pub fn random_multipartite_specs<R: rand::Rng>(
    rng: &mut R,
    count: usize,
    max_n: usize,
) -> Vec<Vec<usize>> {
    (0..count)
        .map(|_| {
            let k = rng.gen_range(2..=6);
            let mut parts: Vec<usize> = (0..k).map(|_| rng.gen_range(2..=8)).collect();
            while parts.iter().sum::<usize>() > max_n {
                parts.pop();
            }
            while parts.len() < 2 {
                parts.push(2);
            }
            parts
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_determinant_formula() {
        assert_eq!(star_eps_determinant(5), BigInt::from(32));
        assert_eq!(star_eps_determinant(6), BigInt::from(-80));
        assert_eq!(star_eps_determinant(4), BigInt::from(-12));
        assert_eq!(star_eps_determinant(2), BigInt::from(-1));
    }

    #[test]
    fn star_invertibility_small() {
        let report = check_star_invertibility(2, 6).unwrap();
        assert!(report.passed, "{:?}", report.counterexamples);
        assert_eq!(report.tested, 1 + 1 + 2 + 3 + 6);
    }

    #[test]
    fn diam2_max_n5() {
        let report = check_diam2_max(5).unwrap();
        assert!(report.passed, "{:?}", report.counterexamples);
        assert!((report.witnesses[0].value - (3.0 + 13f64.sqrt())).abs() < 1e-9);
    }

    #[test]
    fn radius_lower_bound_named_graphs() {
        let universe: Vec<Evidence> = [
            FamilySpec::Cycle(6),
            FamilySpec::Star(5),
            FamilySpec::Path(4),
            FamilySpec::Crown(4),
        ]
        .into_iter()
        .map(|s| Evidence::gather(make_family(&s).unwrap()).unwrap())
        .collect();
        let report = check_radius_lower_bound(&universe, "named graphs");
        assert!(report.passed, "{:?}", report.counterexamples);
        // C6 and the crown are diametrical witnesses
        assert_eq!(report.witnesses.len(), 2);
    }

    #[test]
    fn bipartite_min_six_vertices() {
        let report = check_bipartite_min(3, false).unwrap();
        assert!(report.passed, "{:?}", report.counterexamples);
    }

    #[test]
    fn wiener_bound_named_graphs() {
        let universe: Vec<Evidence> = [
            FamilySpec::Cycle(6),
            FamilySpec::Star(5),
            FamilySpec::CompleteBipartite(3, 3),
        ]
        .into_iter()
        .map(|s| Evidence::gather(make_family(&s).unwrap()).unwrap())
        .collect();
        let report = check_wiener_bound(&universe, "named graphs");
        assert!(report.passed, "{:?}", report.counterexamples);
    }

    #[test]
    fn eq1_bound_examples() {
        let universe: Vec<Evidence> = [
            FamilySpec::Star(5),
            FamilySpec::Complete(5),
            FamilySpec::Cycle(5),
        ]
        .into_iter()
        .map(|s| Evidence::gather(make_family(&s).unwrap()).unwrap())
        .collect();
        let report = check_eq1_bound(&universe, "named graphs");
        assert!(report.passed, "{:?}", report.counterexamples);
        // C5: each vertex has k = 0, bound 2(25-5-10)/5 = 4 = rho
        assert!((universe[2].spectrum.radius - 4.0).abs() < 1e-9);
    }

    #[test]
    fn partite_energy_small() {
        let report = check_partite_energy(5, &[vec![2, 2, 2], vec![3, 4]]).unwrap();
        assert!(report.passed, "{:?}", report.counterexamples);
    }

    #[test]
    fn equienergetic_landscape_n4() {
        let report = search_equienergetic(4).unwrap();
        assert!(report.passed, "{:?}", report.counterexamples);
        assert!(report.witnesses.is_empty());
    }

    #[test]
    fn equienergetic_n5_finds_the_known_pair() {
        let pairs = equienergetic_pairs(5).unwrap();
        let target = 4.0 + 4.0 * 2f64.sqrt();
        assert!(
            pairs.iter().any(|p| (p.energy - target).abs() < 1e-7),
            "expected a pair at energy {target}: {pairs:?}"
        );
    }
}
