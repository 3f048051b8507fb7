//! Acceptance suite: one test per headline claim, each printing a single
//! pass/fail line. Shared exhaustive evidence is built once per process.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use eccmat::generators::{all_connected_graphs, all_trees, canonical_form};
use eccmat::matrix::IntMatrix;
use eccmat::spectra::{
    char_poly_exact, determinant_exact, eigenvalues_sym, interlacing_check, max_quotient_bound,
};
use eccmat::verify::{
    self, check_bipartite_min, check_diam2_max, check_domination, check_eq1_bound,
    check_partite_energy, check_quotient_bound, check_radius_lower_bound,
    check_star_invertibility, check_wiener_bound, equienergetic_pairs, search_equienergetic,
    CheckReport, Evidence,
};
use eccmat::{make_family, FamilySpec};

static UNIVERSE: OnceLock<Vec<Evidence>> = OnceLock::new();

/// Every connected graph on 1..=7 vertices, with metric/ε/spectrum attached.
fn universe() -> &'static [Evidence] {
    UNIVERSE.get_or_init(|| verify::exhaustive_universe(1, 7).unwrap())
}

fn verdict(number: usize, name: &str, pass: bool) {
    println!(
        "acceptance {number:2} {name}: {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "acceptance criterion {number} ({name}) failed");
}

fn report_ok(r: &CheckReport) -> bool {
    if !r.passed {
        eprintln!("check {} failed: {:?}", r.check, r.counterexamples);
    }
    r.passed
}

fn within_budget(start: Instant, budget: Duration) -> bool {
    let elapsed = start.elapsed();
    if elapsed > budget {
        eprintln!("over budget: {elapsed:?} > {budget:?}");
    }
    elapsed <= budget
}

fn sorted_matches(actual: &[f64], mut expected: Vec<f64>, tol: f64) -> bool {
    expected.sort_by(|a, b| b.partial_cmp(a).unwrap());
    actual.len() == expected.len()
        && actual.iter().zip(&expected).all(|(a, e)| (a - e).abs() <= tol)
}

#[test]
fn criterion_01_star_invertibility() {
    let start = Instant::now();
    let counts = [3usize, 6, 11, 23, 47, 106];
    let counts_ok = (5..=10).all(|n| all_trees(n).unwrap().len() == counts[n - 5]);
    let report = check_star_invertibility(5, 10).unwrap();
    let pass = counts_ok
        && report_ok(&report)
        && report.tested == counts.iter().sum::<usize>()
        && within_budget(start, Duration::from_secs(60));
    verdict(1, "star-invertibility n=5..10", pass);
}

#[test]
fn criterion_02_p4_exception() {
    let ev = Evidence::gather(make_family(&FamilySpec::Path(4)).unwrap()).unwrap();
    let poly = char_poly_exact(&ev.eps).unwrap();
    let coeffs: Vec<BigInt> = [16, 0, -17, 0, 1].into_iter().map(BigInt::from).collect();
    let pass = determinant_exact(&ev.eps) == BigInt::from(16)
        && poly.coeffs == coeffs
        && sorted_matches(&ev.spectrum.values, vec![4.0, 1.0, -1.0, -4.0], 1e-9)
        && (ev.spectrum.energy - 10.0).abs() <= 1e-9;
    verdict(2, "path-4 determinant/spectrum/energy", pass);
}

#[test]
fn criterion_03_diam2_maximum() {
    let start = Instant::now();
    let mut pass = all_connected_graphs(5).unwrap().len() == 21
        && all_connected_graphs(6).unwrap().len() == 112;
    for (n, expect) in [(5, 3.0 + 13f64.sqrt()), (6, 4.0 + 21f64.sqrt())] {
        let report = check_diam2_max(n).unwrap();
        pass &= report_ok(&report)
            && report
                .witnesses
                .iter()
                .any(|w| (w.value - expect).abs() <= 1e-9);
    }
    pass &= within_budget(start, Duration::from_secs(30));
    verdict(3, "diameter-2 maximum is the star", pass);
}

#[test]
fn criterion_04_radius_vs_diameter() {
    let start = Instant::now();
    let graphs = verify::exhaustive_universe(3, 7).unwrap();
    let report = check_radius_lower_bound(&graphs, "connected graphs, 3 <= n <= 7");
    let pass = graphs.len() == 994
        && report_ok(&report)
        && within_budget(start, Duration::from_secs(300));
    verdict(4, "rho >= diameter, equality iff diametrical", pass);
}

#[test]
fn criterion_05_bipartite_minimum() {
    let report = check_bipartite_min(3, false).unwrap();
    let k33 = Evidence::gather(make_family(&FamilySpec::CompleteBipartite(3, 3)).unwrap()).unwrap();
    let star6 = Evidence::gather(make_family(&FamilySpec::Star(6)).unwrap()).unwrap();
    let pass = report_ok(&report)
        && (k33.spectrum.radius - 4.0).abs() <= 1e-9
        && (star6.spectrum.radius - (4.0 + 21f64.sqrt())).abs() <= 1e-9;
    verdict(5, "bipartite minimum on 6 vertices", pass);
}

#[test]
fn criterion_06_wiener_bound() {
    let wiener = check_wiener_bound(universe(), "connected graphs, n <= 7");
    let eq1 = check_eq1_bound(universe(), "diameter-2 graphs, n <= 7");
    verdict(6, "wiener bound and diameter-2 form", report_ok(&wiener) && report_ok(&eq1));
}

#[test]
fn criterion_07_quotient_bound() {
    let report = check_quotient_bound(universe(), "connected graphs, n <= 7");
    let star5 = Evidence::gather(make_family(&FamilySpec::Star(5)).unwrap()).unwrap();
    let c6 = Evidence::gather(make_family(&FamilySpec::Cycle(6)).unwrap()).unwrap();
    let mut pass = report_ok(&report);
    for (ev, expect) in [(&star5, 3.0 + 13f64.sqrt()), (&c6, 3.0)] {
        let mu = max_quotient_bound(&ev.profile);
        pass &= (ev.spectrum.radius - mu).abs() <= 1e-9 && (mu - expect).abs() <= 1e-9;
    }
    // the star's {center} / {leaves} partition is equitable for ε, so the
    // 2x2 quotient eigenvalues 3 ± sqrt(13) must appear in the spectrum
    for q in [3.0 + 13f64.sqrt(), 3.0 - 13f64.sqrt()] {
        pass &= star5.spectrum.values.iter().any(|v| (v - q).abs() <= 1e-9);
    }
    verdict(7, "quotient bound, tight at star:5 and cycle:6", pass);
}

#[test]
fn criterion_08_partite_energies() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let specs = verify::random_multipartite_specs(&mut rng, 50, 60);
    let report = check_partite_energy(20, &specs).unwrap();
    let pass = report_ok(&report) && within_budget(start, Duration::from_secs(60));
    verdict(8, "bipartite and multipartite energies", pass);
}

#[test]
fn criterion_09_equienergetic_search() {
    let mut pass = true;
    for n in [3, 4] {
        let report = search_equienergetic(n).unwrap();
        pass &= report_ok(&report) && report.witnesses.is_empty();
    }
    let target = 4.0 + 4.0 * 2f64.sqrt();
    let sqrt2 = 2f64.sqrt();
    let spec_a = vec![2.0 * (1.0 + sqrt2), 2.0 * (1.0 - sqrt2), -4.0, 0.0, 0.0];
    let spec_b = vec![2.0 * sqrt2, 2.0, -2.0, -2.0 * sqrt2, 0.0];
    let pairs5 = equienergetic_pairs(5).unwrap();
    pass &= pairs5.iter().any(|p| {
        p.non_cospectral
            && (p.energy - target).abs() <= 1e-7
            && (sorted_matches(&p.spectrum_a, spec_a.clone(), 1e-7)
                && sorted_matches(&p.spectrum_b, spec_b.clone(), 1e-7)
                || sorted_matches(&p.spectrum_a, spec_b.clone(), 1e-7)
                    && sorted_matches(&p.spectrum_b, spec_a.clone(), 1e-7))
    });
    let k24 = canonical_form(&make_family(&FamilySpec::CompleteBipartite(2, 4)).unwrap());
    let k33 = canonical_form(&make_family(&FamilySpec::CompleteBipartite(3, 3)).unwrap());
    let pairs6 = equienergetic_pairs(6).unwrap();
    pass &= pairs6.iter().any(|p| {
        let a = canonical_form(&eccmat::parse_graph6(&p.graph6_a).unwrap());
        let b = canonical_form(&eccmat::parse_graph6(&p.graph6_b).unwrap());
        (p.energy - 16.0).abs() <= 1e-7 && (a == k24 && b == k33 || a == k33 && b == k24)
    });
    verdict(9, "equienergetic landscape n=3..6", pass);
}

#[test]
fn criterion_10_cross_stack_consistency() {
    let mut pass = true;
    for ev in universe() {
        let n = ev.graph.n();
        let poly = char_poly_exact(&ev.eps).unwrap();
        pass &= determinant_exact(&ev.eps) == poly.determinant();
        let trace: f64 = ev.spectrum.values.iter().sum();
        pass &= trace.abs() <= 1e-8;
        let frob = ev.eps.frobenius_sq() as f64;
        let sq: f64 = ev.spectrum.values.iter().map(|v| v * v).sum();
        pass &= (sq - frob).abs() <= 1e-6 * frob.max(1.0);
        let norm = poly.one_norm();
        for &lam in &ev.spectrum.values {
            pass &= poly.eval_f64(lam).abs() <= 1e-6 * norm * lam.abs().max(1.0).powi(n as i32);
        }
    }
    pass &= report_ok(&check_domination(universe(), "connected graphs, n <= 7"));
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1000 {
        let n = rng.gen_range(2..=8);
        let mut m = IntMatrix::zeros(n);
        for i in 0..n {
            for j in 0..=i {
                let v = rng.gen_range(0..6);
                m.set(i, j, v);
                m.set(j, i, v);
            }
        }
        let k = rng.gen_range(1..n);
        let mut idx: Vec<usize> = (0..n).collect();
        for i in 0..k {
            let j = rng.gen_range(i..n);
            idx.swap(i, j);
        }
        let mut subset = idx[..k].to_vec();
        subset.sort_unstable();
        pass &= interlacing_check(&m, &subset).unwrap();
    }
    // sanity that the numeric layers agree end to end on one nontrivial case
    let c6 = make_family(&FamilySpec::Cycle(6)).unwrap();
    let eps = eccmat::eccentricity_matrix(&c6.metric().unwrap());
    pass &= (eigenvalues_sym(&eps).unwrap().radius - 3.0).abs() <= 1e-9;
    verdict(10, "cross-stack consistency", pass);
}
