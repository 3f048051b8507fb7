//! Central defaults for tolerances and enumeration caps. Every value can
//! be overridden by an `ECCMAT_`-prefixed environment variable or, from
//! the CLI, by a flag calling [`set`] before any computation starts.

use std::sync::OnceLock;

#[derive(Debug, Clone, Copy)]
pub struct Config {
    /// Equality / bound-violation tolerance for eigenvalue comparisons.
    pub tol_eq: f64,
    /// Tolerance for energy closed-form checks.
    pub tol_energy: f64,
    /// Bucket width when grouping graphs by ε-energy.
    pub tol_bucket: f64,
    /// Looser tolerance used only to flag tight-bound witnesses.
    pub tol_tight: f64,
}

pub const DEFAULT: Config = Config {
    tol_eq: 1e-9,
    tol_energy: 1e-8,
    tol_bucket: 1e-7,
    tol_tight: 1e-6,
};

static CONFIG: OnceLock<Config> = OnceLock::new();

fn from_env() -> Config {
    let read = |name: &str, default: f64| -> f64 {
        std::env::var(name)
            .ok()
            .and_then(|v| v.parse().ok())
            .filter(|&x| x > 0.0)
            .unwrap_or(default)
    };
    Config {
        tol_eq: read("ECCMAT_TOL_EQ", DEFAULT.tol_eq),
        tol_energy: read("ECCMAT_TOL_ENERGY", DEFAULT.tol_energy),
        tol_bucket: read("ECCMAT_TOL_BUCKET", DEFAULT.tol_bucket),
        tol_tight: read("ECCMAT_TOL_TIGHT", DEFAULT.tol_tight),
    }
}

pub fn get() -> Config {
    *CONFIG.get_or_init(from_env)
}

/// Installs an explicit config; returns false if one was already fixed.
pub fn set(config: Config) -> bool {
    CONFIG.set(config).is_ok()
}
