//! C ABI over the eccmat library. All handles are opaque; every function
//! returns an [`EccStatus`] code and writes results through out-pointers.
//! Strings returned by this library must be released with
//! [`eccmat_string_free`].

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use eccmat::ecc::{distance_matrix, eccentricity_matrix, epsilon_profile, is_diametrical};
use eccmat::generators::FamilySpec;
use eccmat::graph::Graph;
use eccmat::spectra::{char_poly_exact, eigenvalues_sym};
use eccmat::{CharPoly, EpsilonProfile, IntMatrix, Metric, Spectrum};

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EccStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    Disconnected = 4,
    NumericError = 5,
    OutOfRange = 6,
}

fn status_of(err: &eccmat::Error) -> EccStatus {
    use eccmat::Error::*;
    match err {
        Parse { .. } | Graph6(_) | SelfLoop(_) => EccStatus::ParseError,
        Disconnected => EccStatus::Disconnected,
        NoConvergence(_) | Invariant(_) => EccStatus::NumericError,
        VertexRange { .. } | OrderMismatch(..) | EnumerationCap { .. } => EccStatus::OutOfRange,
        _ => EccStatus::InvalidArgument,
    }
}

/// Opaque graph handle.
pub struct EccGraph {
    inner: Graph,
}

/// Opaque analysis handle: metric, eccentricity matrix, profile, spectrum
/// and exact characteristic polynomial of one connected graph.
pub struct EccAnalysis {
    metric: Metric,
    eps: IntMatrix,
    dist: IntMatrix,
    profile: EpsilonProfile,
    spectrum: Spectrum,
    poly: CharPoly,
}

unsafe fn cstr_arg<'a>(s: *const c_char) -> Option<&'a str> {
    if s.is_null() {
        return None;
    }
    CStr::from_ptr(s).to_str().ok()
}

fn export_string(s: String, out: *mut *mut c_char) -> EccStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            EccStatus::Ok
        }
        Err(_) => EccStatus::NumericError,
    }
}

/// Parses a graph6 string into a new graph handle.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn eccmat_graph_parse_g6(
    text: *const c_char,
    out: *mut *mut EccGraph,
) -> EccStatus {
    if out.is_null() {
        return EccStatus::NullPointer;
    }
    *out = ptr::null_mut();
    let Some(text) = cstr_arg(text) else {
        return EccStatus::NullPointer;
    };
    match eccmat::parse_graph6(text) {
        Ok(g) => {
            *out = Box::into_raw(Box::new(EccGraph { inner: g }));
            EccStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Builds a named family from a spec string such as "star:5" or
/// "complete_bipartite:2,3".
///
/// # Safety
/// `spec` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn eccmat_graph_from_family(
    spec: *const c_char,
    out: *mut *mut EccGraph,
) -> EccStatus {
    if out.is_null() {
        return EccStatus::NullPointer;
    }
    *out = ptr::null_mut();
    let Some(spec) = cstr_arg(spec) else {
        return EccStatus::NullPointer;
    };
    let result = spec
        .parse::<FamilySpec>()
        .and_then(|s| eccmat::make_family(&s));
    match result {
        Ok(g) => {
            *out = Box::into_raw(Box::new(EccGraph { inner: g }));
            EccStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Parses an edge-list document (optional "n" header, "u v" lines).
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn eccmat_graph_parse_edge_list(
    text: *const c_char,
    out: *mut *mut EccGraph,
) -> EccStatus {
    if out.is_null() {
        return EccStatus::NullPointer;
    }
    *out = ptr::null_mut();
    let Some(text) = cstr_arg(text) else {
        return EccStatus::NullPointer;
    };
    match eccmat::parse_edge_list(text) {
        Ok(g) => {
            *out = Box::into_raw(Box::new(EccGraph { inner: g }));
            EccStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// # Safety
/// `graph` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn eccmat_graph_free(graph: *mut EccGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// # Safety
/// `graph` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn eccmat_graph_order(graph: *const EccGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.inner.n())
}

/// # Safety
/// `graph` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn eccmat_graph_edge_count(graph: *const EccGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.inner.m())
}

/// # Safety
/// `graph` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn eccmat_graph_is_connected(graph: *const EccGraph) -> i32 {
    graph.as_ref().map_or(0, |g| i32::from(g.inner.is_connected()))
}

/// Writes the graph6 encoding; free the result with [`eccmat_string_free`].
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn eccmat_graph_to_g6(
    graph: *const EccGraph,
    out: *mut *mut c_char,
) -> EccStatus {
    let (Some(g), false) = (graph.as_ref(), out.is_null()) else {
        return EccStatus::NullPointer;
    };
    export_string(eccmat::to_graph6(&g.inner), out)
}

/// Runs the full analysis (metric, eccentricity matrix, spectrum, exact
/// characteristic polynomial) of a connected graph.
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn eccmat_analyze(
    graph: *const EccGraph,
    out: *mut *mut EccAnalysis,
) -> EccStatus {
    let (Some(g), false) = (graph.as_ref(), out.is_null()) else {
        return EccStatus::NullPointer;
    };
    *out = ptr::null_mut();
    let metric = match g.inner.metric() {
        Ok(m) => m,
        Err(e) => return status_of(&e),
    };
    let eps = eccentricity_matrix(&metric);
    let dist = distance_matrix(&metric);
    let profile = epsilon_profile(&g.inner, &metric, &eps);
    let spectrum = match eigenvalues_sym(&eps) {
        Ok(s) => s,
        Err(e) => return status_of(&e),
    };
    let poly = match char_poly_exact(&eps) {
        Ok(p) => p,
        Err(e) => return status_of(&e),
    };
    *out = Box::into_raw(Box::new(EccAnalysis {
        metric,
        eps,
        dist,
        profile,
        spectrum,
        poly,
    }));
    EccStatus::Ok
}

/// # Safety
/// `analysis` must come from [`eccmat_analyze`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn eccmat_analysis_free(analysis: *mut EccAnalysis) {
    if !analysis.is_null() {
        drop(Box::from_raw(analysis));
    }
}

/// # Safety
/// `analysis` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn eccmat_diameter(analysis: *const EccAnalysis) -> usize {
    analysis.as_ref().map_or(0, |a| a.metric.diam)
}

/// # Safety
/// `analysis` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn eccmat_radius(analysis: *const EccAnalysis) -> usize {
    analysis.as_ref().map_or(0, |a| a.metric.rad)
}

/// # Safety
/// `analysis` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn eccmat_spectral_radius(analysis: *const EccAnalysis) -> f64 {
    analysis.as_ref().map_or(f64::NAN, |a| a.spectrum.radius)
}

/// # Safety
/// `analysis` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn eccmat_energy(analysis: *const EccAnalysis) -> f64 {
    analysis.as_ref().map_or(f64::NAN, |a| a.spectrum.energy)
}

/// # Safety
/// `analysis` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn eccmat_epsilon_wiener(analysis: *const EccAnalysis) -> u64 {
    analysis.as_ref().map_or(0, |a| a.profile.wiener)
}

/// # Safety
/// `analysis` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn eccmat_is_diametrical(analysis: *const EccAnalysis) -> i32 {
    analysis
        .as_ref()
        .map_or(0, |a| i32::from(is_diametrical(&a.metric)))
}

/// # Safety
/// `analysis` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn eccmat_is_epsilon_regular(analysis: *const EccAnalysis) -> i32 {
    analysis.as_ref().map_or(0, |a| i32::from(a.profile.is_regular))
}

/// Entry (i, j) of the eccentricity matrix, or u64::MAX when out of range.
///
/// # Safety
/// `analysis` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn eccmat_eps_entry(
    analysis: *const EccAnalysis,
    i: usize,
    j: usize,
) -> u64 {
    match analysis.as_ref() {
        Some(a) if i < a.eps.n() && j < a.eps.n() => a.eps.get(i, j),
        _ => u64::MAX,
    }
}

/// Entry (i, j) of the distance matrix, or u64::MAX when out of range.
///
/// # Safety
/// `analysis` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn eccmat_dist_entry(
    analysis: *const EccAnalysis,
    i: usize,
    j: usize,
) -> u64 {
    match analysis.as_ref() {
        Some(a) if i < a.dist.n() && j < a.dist.n() => a.dist.get(i, j),
        _ => u64::MAX,
    }
}

/// Eigenvalues sorted descending; index out of range yields NaN.
///
/// # Safety
/// `analysis` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn eccmat_eigenvalue(analysis: *const EccAnalysis, i: usize) -> f64 {
    analysis
        .as_ref()
        .and_then(|a| a.spectrum.values.get(i).copied())
        .unwrap_or(f64::NAN)
}

/// Exact determinant as a decimal string; free with [`eccmat_string_free`].
///
/// # Safety
/// `analysis` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn eccmat_determinant_string(
    analysis: *const EccAnalysis,
    out: *mut *mut c_char,
) -> EccStatus {
    let (Some(a), false) = (analysis.as_ref(), out.is_null()) else {
        return EccStatus::NullPointer;
    };
    export_string(a.poly.determinant().to_string(), out)
}

/// Exact characteristic polynomial coefficient of λ^k as a decimal string.
///
/// # Safety
/// `analysis` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn eccmat_char_poly_coeff_string(
    analysis: *const EccAnalysis,
    k: usize,
    out: *mut *mut c_char,
) -> EccStatus {
    let (Some(a), false) = (analysis.as_ref(), out.is_null()) else {
        return EccStatus::NullPointer;
    };
    match a.poly.coeffs.get(k) {
        Some(c) => export_string(c.to_string(), out),
        None => EccStatus::OutOfRange,
    }
}

/// # Safety
/// `s` must have been returned by this library and not freed before.
#[no_mangle]
pub unsafe extern "C" fn eccmat_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;

    unsafe fn analyze(spec: &str) -> (*mut EccGraph, *mut EccAnalysis) {
        let spec = CString::new(spec).unwrap();
        let mut g: *mut EccGraph = ptr::null_mut();
        assert_eq!(eccmat_graph_from_family(spec.as_ptr(), &mut g), EccStatus::Ok);
        let mut a: *mut EccAnalysis = ptr::null_mut();
        assert_eq!(eccmat_analyze(g, &mut a), EccStatus::Ok);
        (g, a)
    }

    #[test]
    fn star5_through_the_c_abi() {
        unsafe {
            let (g, a) = analyze("star:5");
            assert_eq!(eccmat_graph_order(g), 5);
            assert_eq!(eccmat_graph_edge_count(g), 4);
            assert_eq!(eccmat_diameter(a), 2);
            assert!((eccmat_spectral_radius(a) - (3.0 + 13f64.sqrt())).abs() < 1e-9);
            assert_eq!(eccmat_epsilon_wiener(a), 16);
            assert_eq!(eccmat_is_diametrical(a), 0);
            let mut s: *mut c_char = ptr::null_mut();
            assert_eq!(eccmat_determinant_string(a, &mut s), EccStatus::Ok);
            assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "32");
            eccmat_string_free(s);
            eccmat_analysis_free(a);
            eccmat_graph_free(g);
        }
    }

    #[test]
    fn graph6_round_trip_through_the_c_abi() {
        unsafe {
            let text = CString::new("D?{").unwrap();
            let mut g: *mut EccGraph = ptr::null_mut();
            assert_eq!(eccmat_graph_parse_g6(text.as_ptr(), &mut g), EccStatus::Ok);
            let mut s: *mut c_char = ptr::null_mut();
            assert_eq!(eccmat_graph_to_g6(g, &mut s), EccStatus::Ok);
            assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "D?{");
            eccmat_string_free(s);
            eccmat_graph_free(g);
        }
    }

    #[test]
    fn disconnected_graph_reports_status() {
        unsafe {
            let text = CString::new("2\n# no edges\n").unwrap();
            let mut g: *mut EccGraph = ptr::null_mut();
            assert_eq!(
                eccmat_graph_parse_edge_list(text.as_ptr(), &mut g),
                EccStatus::Ok
            );
            assert_eq!(eccmat_graph_is_connected(g), 0);
            let mut a: *mut EccAnalysis = ptr::null_mut();
            assert_eq!(eccmat_analyze(g, &mut a), EccStatus::Disconnected);
            assert!(a.is_null());
            eccmat_graph_free(g);
        }
    }

    #[test]
    fn bad_input_statuses() {
        unsafe {
            let mut g: *mut EccGraph = ptr::null_mut();
            let junk = CString::new("\x01\x02").unwrap();
            assert_eq!(
                eccmat_graph_parse_g6(junk.as_ptr(), &mut g),
                EccStatus::ParseError
            );
            let spec = CString::new("frob:9").unwrap();
            assert_eq!(
                eccmat_graph_from_family(spec.as_ptr(), &mut g),
                EccStatus::InvalidArgument
            );
            assert_eq!(
                eccmat_graph_parse_g6(ptr::null(), &mut g),
                EccStatus::NullPointer
            );
        }
    }
}
