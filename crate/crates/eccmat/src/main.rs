//! Command-line front door: compute invariants for one graph, generate
//! families and enumeration corpora, run named theorem checks, and search
//! for equienergetic pairs.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use eccmat::config::{self, Config};
use eccmat::ecc::{
    distance_matrix, eccentricity_matrix, epsilon_profile, is_diametrical,
};
use eccmat::error::Error;
use eccmat::generators::{
    all_connected_graphs_capped, all_trees, make_family, FamilySpec,
};
use eccmat::graph::{parse_edge_list, Graph};
use eccmat::graph6::{parse_graph6, to_graph6};
use eccmat::spectra::{char_poly_exact, eigenvalues_sym, max_quotient_bound};
use eccmat::verify::{self, CheckReport, Evidence};

#[derive(Parser)]
#[command(
    name = "eccmat",
    about = "Eccentricity-matrix spectra, bounds, and theorem verification",
    long_about = None,
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Write JSON/CSV output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,

    /// Worker threads (default: available cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Equality tolerance override (default 1e-9, env ECCMAT_TOL_EQ).
    #[arg(long, global = true)]
    tol_eq: Option<f64>,

    /// Energy tolerance override (default 1e-8, env ECCMAT_TOL_ENERGY).
    #[arg(long, global = true)]
    tol_energy: Option<f64>,

    /// Energy bucket tolerance override (default 1e-7, env ECCMAT_TOL_BUCKET).
    #[arg(long, global = true)]
    tol_bucket: Option<f64>,

    /// RNG seed for randomized universes.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Args)]
#[group(multiple = false)]
struct InputArgs {
    /// Edge-list file (optional "n" header, "u v" lines, '#' comments).
    #[arg(long)]
    file: Option<std::path::PathBuf>,

    /// Inline graph6 string.
    #[arg(long)]
    graph6: Option<String>,

    /// Family spec, e.g. star:5, path:4, cycle:6, complete:5,
    /// complete_bipartite:2,3, multipartite:2,2,2, crown:3, random:30,0.2,7.
    #[arg(long)]
    family: Option<String>,
}

impl InputArgs {
    /// Resolves to one or more graphs; with no flag, reads graph6 lines
    /// from stdin.
    fn graphs(&self) -> eccmat::Result<Vec<Graph>> {
        if let Some(path) = &self.file {
            return Ok(vec![parse_edge_list(&std::fs::read_to_string(path)?)?]);
        }
        if let Some(s) = &self.graph6 {
            return Ok(vec![parse_graph6(s)?]);
        }
        if let Some(spec) = &self.family {
            return Ok(vec![make_family(&spec.parse::<FamilySpec>()?)?]);
        }
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        text.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(parse_graph6)
            .collect()
    }
}

#[derive(Subcommand)]
enum Command {
    /// Eccentricity matrix, ε-degrees, Wiener indices, and predicates.
    Compute {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Eigenvalues, spectral radius, ε-energy, exact char poly and det.
    Spectrum {
        #[command(flatten)]
        input: InputArgs,
    },
    /// All lower bounds on the ε-spectral radius, next to the actual ρ.
    Bounds {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Emit graph6 lines for a family or an enumeration corpus.
    Generate {
        /// Family spec (see `compute --help`).
        #[arg(long, conflicts_with_all = ["trees", "graphs"])]
        family: Option<String>,
        /// All non-isomorphic trees on N vertices.
        #[arg(long, value_name = "N")]
        trees: Option<usize>,
        /// All non-isomorphic connected graphs on N vertices.
        #[arg(long, value_name = "N")]
        graphs: Option<usize>,
        /// Lift the n = 7 enumeration cap to 8 (minutes of work).
        #[arg(long)]
        allow_8: bool,
    },
    /// Run named theorem checks; exit code 0 iff all pass.
    Verify {
        /// Check ids: star-invertibility, diam2-max, radius-lower-bound,
        /// bipartite-min, wiener-bound, eq1-bound, quotient-bound,
        /// partite-energy, equienergetic, domination.
        checks: Vec<String>,
        /// Run the full suite at default scales.
        #[arg(long)]
        all: bool,
        /// Order or order range, e.g. 5 or 5..10 (check-specific).
        #[arg(long)]
        n: Option<String>,
        /// Exhaustive universe cap for bound checks (default 7).
        #[arg(long, default_value_t = 7)]
        exhaustive: usize,
        /// Lift the n = 7 enumeration cap to 8.
        #[arg(long)]
        allow_8: bool,
    },
    /// Search for non-cospectral ε-equienergetic pairs on n vertices.
    Search {
        #[arg(long, default_value_t = 5)]
        n: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let defaults = config::DEFAULT;
    config::set(Config {
        tol_eq: cli.tol_eq.unwrap_or(defaults.tol_eq),
        tol_energy: cli.tol_energy.unwrap_or(defaults.tol_energy),
        tol_bucket: cli.tol_bucket.unwrap_or(defaults.tol_bucket),
        tol_tight: defaults.tol_tight,
    });
    if let Some(jobs) = cli.jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    match run(&cli) {
        Ok(code) => code,
        Err(Error::Disconnected) => {
            eprintln!("error: eccentricity undefined: graph disconnected");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> eccmat::Result<ExitCode> {
    match &cli.command {
        Command::Compute { input } => {
            let reports: Vec<ComputeReport> = input
                .graphs()?
                .into_iter()
                .map(ComputeReport::build)
                .collect::<eccmat::Result<_>>()?;
            emit(cli, &reports, |r| r.render_table())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Spectrum { input } => {
            let reports: Vec<SpectrumReport> = input
                .graphs()?
                .into_iter()
                .map(SpectrumReport::build)
                .collect::<eccmat::Result<_>>()?;
            emit(cli, &reports, |r| r.render_table())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Bounds { input } => {
            let reports: Vec<BoundsReport> = input
                .graphs()?
                .into_iter()
                .map(BoundsReport::build)
                .collect::<eccmat::Result<_>>()?;
            emit(cli, &reports, |r| r.render_table())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Generate {
            family,
            trees,
            graphs,
            allow_8,
        } => {
            let list: Vec<Graph> = if let Some(spec) = family {
                vec![make_family(&spec.parse::<FamilySpec>()?)?]
            } else if let Some(n) = trees {
                all_trees(*n)?
            } else if let Some(n) = graphs {
                all_connected_graphs_capped(*n, *allow_8)?
            } else {
                return Err(Error::FamilySpec(
                    "generate needs --family, --trees or --graphs".into(),
                ));
            };
            let mut out = String::new();
            for g in &list {
                out.push_str(&to_graph6(g));
                out.push('\n');
            }
            write_output(cli, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            checks,
            all,
            n,
            exhaustive,
            allow_8,
        } => {
            let reports = if *all {
                verify::run_all(cli.seed)?
            } else {
                run_checks(checks, n.as_deref(), *exhaustive, *allow_8, cli.seed)?
            };
            emit(cli, &reports, render_check_table)?;
            let ok = reports.iter().all(|r| r.passed);
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Search { n } => {
            let pairs = verify::equienergetic_pairs(*n)?;
            emit(cli, &pairs, |p| {
                format!(
                    "{}  ~  {}   energy {:.9}\n  spectra {:?} vs {:?}\n",
                    p.graph6_a,
                    p.graph6_b,
                    p.energy,
                    round_vec(&p.spectrum_a),
                    round_vec(&p.spectrum_b),
                )
            })?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_range(text: Option<&str>, default: (usize, usize)) -> eccmat::Result<(usize, usize)> {
    let Some(text) = text else {
        return Ok(default);
    };
    let bad = || Error::FamilySpec(format!("bad order range {text:?}"));
    if let Some((a, b)) = text.split_once("..") {
        let lo = a.parse().map_err(|_| bad())?;
        let hi = b.trim_start_matches('=').parse().map_err(|_| bad())?;
        Ok((lo, hi))
    } else {
        let n = text.parse().map_err(|_| bad())?;
        Ok((n, n))
    }
}

fn run_checks(
    checks: &[String],
    n: Option<&str>,
    exhaustive: usize,
    allow_8: bool,
    seed: u64,
) -> eccmat::Result<Vec<CheckReport>> {
    use rand::SeedableRng;
    if checks.is_empty() {
        return Err(Error::UnknownCheck("(none given; try --all)".into()));
    }
    let mut universe: Option<Vec<Evidence>> = None;
    let mut reports = Vec::new();
    for id in checks {
        let report = match id.as_str() {
            "star-invertibility" => {
                let (lo, hi) = parse_range(n, (2, 10))?;
                verify::check_star_invertibility(lo, hi)?
            }
            "diam2-max" => {
                let (lo, hi) = parse_range(n, (5, 6))?;
                let mut last = None;
                for order in lo..=hi {
                    last = Some(verify::check_diam2_max(order)?);
                    if order < hi {
                        reports.push(last.clone().unwrap());
                    }
                }
                last.unwrap()
            }
            "bipartite-min" => {
                let (half, _) = parse_range(n, (3, 3))?;
                verify::check_bipartite_min(half, allow_8)?
            }
            "partite-energy" => {
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
                let specs = verify::random_multipartite_specs(&mut rng, 50, 60);
                verify::check_partite_energy(20, &specs)?
            }
            "equienergetic" => {
                let (lo, hi) = parse_range(n, (5, 5))?;
                let mut last = None;
                for order in lo..=hi {
                    last = Some(verify::search_equienergetic(order)?);
                    if order < hi {
                        reports.push(last.clone().unwrap());
                    }
                }
                last.unwrap()
            }
            "radius-lower-bound" | "wiener-bound" | "eq1-bound" | "quotient-bound"
            | "domination" => {
                if universe.is_none() {
                    universe = Some(verify::exhaustive_universe(1, exhaustive)?);
                }
                let u = universe.as_ref().unwrap();
                let label = format!("connected graphs, n <= {exhaustive}");
                match id.as_str() {
                    "radius-lower-bound" => verify::check_radius_lower_bound(u, &label),
                    "wiener-bound" => verify::check_wiener_bound(u, &label),
                    "eq1-bound" => verify::check_eq1_bound(u, &label),
                    "quotient-bound" => verify::check_quotient_bound(u, &label),
                    _ => verify::check_domination(u, &label),
                }
            }
            other => return Err(Error::UnknownCheck(other.to_string())),
        };
        reports.push(report);
    }
    Ok(reports)
}

// ---------- per-graph reports ----------

#[derive(Serialize)]
struct ComputeReport {
    graph6: String,
    n: usize,
    m: usize,
    diameter: usize,
    radius: usize,
    eccentricities: Vec<usize>,
    epsilon_matrix: Vec<Vec<u64>>,
    distance_matrix: Vec<Vec<u64>>,
    epsilon_degrees: Vec<u64>,
    epsilon_wiener: u64,
    classic_wiener: u64,
    diametrical: bool,
    epsilon_regular: bool,
}

fn matrix_rows(m: &eccmat::IntMatrix) -> Vec<Vec<u64>> {
    (0..m.n()).map(|i| m.row(i).to_vec()).collect()
}

impl ComputeReport {
    fn build(g: Graph) -> eccmat::Result<Self> {
        let metric = g.metric()?;
        let eps = eccentricity_matrix(&metric);
        let profile = epsilon_profile(&g, &metric, &eps);
        Ok(ComputeReport {
            graph6: to_graph6(&g),
            n: g.n(),
            m: g.m(),
            diameter: metric.diam,
            radius: metric.rad,
            eccentricities: metric.ecc.clone(),
            epsilon_matrix: matrix_rows(&eps),
            distance_matrix: matrix_rows(&distance_matrix(&metric)),
            epsilon_degrees: profile.degrees.clone(),
            epsilon_wiener: profile.wiener,
            classic_wiener: profile.classic_wiener,
            diametrical: is_diametrical(&metric),
            epsilon_regular: profile.is_regular,
        })
    }

    fn render_table(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!(
            "graph {}  (n = {}, m = {})\n",
            self.graph6, self.n, self.m
        ));
        s.push_str(&format!(
            "diameter {}   radius {}   diametrical {}   eps-regular {}\n",
            self.diameter, self.radius, self.diametrical, self.epsilon_regular
        ));
        s.push_str(&format!(
            "W_eps = {}   W = {}\n",
            self.epsilon_wiener, self.classic_wiener
        ));
        s.push_str(&format!("eps-degrees: {:?}\n", self.epsilon_degrees));
        s.push_str("eccentricity matrix:\n");
        for row in &self.epsilon_matrix {
            s.push_str("  ");
            for x in row {
                s.push_str(&format!("{x:>3}"));
            }
            s.push('\n');
        }
        s
    }
}

#[derive(Serialize)]
struct SpectrumReport {
    graph6: String,
    eigenvalues: Vec<f64>,
    multiplicities: Vec<(f64, usize)>,
    spectral_radius: f64,
    energy: f64,
    char_poly: Vec<String>,
    char_poly_display: String,
    determinant: String,
}

impl SpectrumReport {
    fn build(g: Graph) -> eccmat::Result<Self> {
        let ev = Evidence::gather(g)?;
        let poly = char_poly_exact(&ev.eps)?;
        Ok(SpectrumReport {
            graph6: to_graph6(&ev.graph),
            eigenvalues: round_vec(&ev.spectrum.values),
            multiplicities: ev
                .spectrum
                .groups
                .iter()
                .map(|&(v, m)| (round12(v), m))
                .collect(),
            spectral_radius: round12(ev.spectrum.radius),
            energy: round12(ev.spectrum.energy),
            char_poly: poly.coeff_strings(),
            char_poly_display: poly.to_string(),
            determinant: poly.determinant().to_string(),
        })
    }

    fn render_table(&self) -> String {
        let groups: Vec<String> = self
            .multiplicities
            .iter()
            .map(|(v, m)| format!("{v}^{m}"))
            .collect();
        format!(
            "graph {}\nspectrum {{{}}}\nrho = {}   energy = {}\nchar poly = {}\ndet = {}\n",
            self.graph6,
            groups.join(", "),
            self.spectral_radius,
            self.energy,
            self.char_poly_display,
            self.determinant
        )
    }
}

#[derive(Serialize)]
struct BoundsReport {
    graph6: String,
    diameter: usize,
    spectral_radius: f64,
    distance_radius: f64,
    wiener_bound: f64,
    eq1_bound: Option<f64>,
    quotient_bound: f64,
    diametrical: bool,
    epsilon_regular: bool,
}

impl BoundsReport {
    fn build(g: Graph) -> eccmat::Result<Self> {
        let ev = Evidence::gather(g)?;
        let n = ev.graph.n();
        let eq1 = (ev.metric.diam == 2).then(|| {
            let (n, m, k) = (n as f64, ev.profile.m as f64, ev.profile.k as f64);
            (2.0 * (n * n - n - 2.0 * m) + k * (2.0 * n - k - 1.0)) / n
        });
        Ok(BoundsReport {
            graph6: to_graph6(&ev.graph),
            diameter: ev.metric.diam,
            spectral_radius: round12(ev.spectrum.radius),
            distance_radius: round12(eigenvalues_sym(&distance_matrix(&ev.metric))?.radius),
            wiener_bound: round12(2.0 * ev.profile.wiener as f64 / n as f64),
            eq1_bound: eq1.map(round12),
            quotient_bound: round12(if n >= 2 {
                max_quotient_bound(&ev.profile)
            } else {
                0.0
            }),
            diametrical: is_diametrical(&ev.metric),
            epsilon_regular: ev.profile.is_regular,
        })
    }

    fn render_table(&self) -> String {
        let mut s = format!(
            "graph {}   rho(eps) = {}\n  d = {} {}   2W_eps/n = {}   max mu1 = {}   rho(D) = {}\n",
            self.graph6,
            self.spectral_radius,
            self.diameter,
            if self.diametrical { "(diametrical)" } else { "" },
            self.wiener_bound,
            self.quotient_bound,
            self.distance_radius,
        );
        if let Some(eq1) = self.eq1_bound {
            s.push_str(&format!("  eq1 bound (diam 2) = {eq1}\n"));
        }
        s
    }
}

fn round12(x: f64) -> f64 {
    // 12 significant digits for display and serialization
    if x == 0.0 {
        return 0.0;
    }
    let mag = x.abs().log10().floor() as i32;
    let factor = 10f64.powi(11 - mag);
    (x * factor).round() / factor
}

fn round_vec(xs: &[f64]) -> Vec<f64> {
    xs.iter().copied().map(round12).collect()
}

// ---------- rendering ----------

fn render_check_table(r: &CheckReport) -> String {
    let mut s = format!(
        "{}  {:<20} tested {:>6}  {:>6} ms  [{}]\n",
        if r.passed { "PASS" } else { "FAIL" },
        r.check,
        r.tested,
        r.wall_ms,
        r.universe
    );
    for w in &r.witnesses {
        s.push_str(&format!("       witness {}  value {:.9}  {}\n", w.graph6, w.value, w.note));
    }
    for c in &r.counterexamples {
        s.push_str(&format!(
            "       COUNTEREXAMPLE {}  expected {}  got {}\n",
            c.graph6, c.expected, c.actual
        ));
    }
    s
}

fn emit<T: Serialize>(cli: &Cli, items: &[T], table: impl Fn(&T) -> String) -> eccmat::Result<()> {
    let text = match cli.format {
        Format::Table => items.iter().map(|i| table(i)).collect::<Vec<_>>().join("\n"),
        Format::Json => serde_json::to_string_pretty(&items).expect("serializable") + "\n",
        Format::Csv => to_csv(items),
    };
    write_output(cli, &text)
}

/// Flat CSV: one row per item, nested values JSON-encoded in their cell.
fn to_csv<T: Serialize>(items: &[T]) -> String {
    let values: Vec<serde_json::Value> = items
        .iter()
        .map(|i| serde_json::to_value(i).expect("serializable"))
        .collect();
    let Some(serde_json::Value::Object(first)) = values.first() else {
        return String::new();
    };
    let headers: Vec<String> = first.keys().cloned().collect();
    let mut out = headers.join(",") + "\n";
    for v in &values {
        let row: Vec<String> = headers
            .iter()
            .map(|h| {
                let cell = v.get(h).unwrap_or(&json!(null));
                let raw = match cell {
                    serde_json::Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                if raw.contains(',') || raw.contains('"') {
                    format!("\"{}\"", raw.replace('"', "\"\""))
                } else {
                    raw
                }
            })
            .collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

fn write_output(cli: &Cli, text: &str) -> eccmat::Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}
