//! Exact and floating-point spectral computations on symmetric integer
//! matrices.
//!
//! Float eigenvalues come from cyclic Jacobi rotations. Singularity and
//! cospectrality verdicts never rest on floats: the characteristic
//! polynomial is computed exactly over arbitrary-precision integers
//! (Faddeev-LeVerrier) and the determinant independently by Bareiss
//! fraction-free elimination.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::ecc::EpsilonProfile;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

const MAX_SWEEPS: usize = 100;

/// Real spectrum of a symmetric matrix, sorted descending.
#[derive(Debug, Clone, Serialize)]
pub struct Spectrum {
    pub values: Vec<f64>,
    /// (representative eigenvalue, multiplicity) after tolerance clustering.
    pub groups: Vec<(f64, usize)>,
    pub radius: f64,
    pub energy: f64,
}

impl Spectrum {
    fn from_values(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let mut groups: Vec<(f64, usize)> = Vec::new();
        for &v in &values {
            match groups.last_mut() {
                Some((rep, mult)) if (v - *rep).abs() <= 1e-8 * rep.abs().max(1.0) => *mult += 1,
                _ => groups.push((v, 1)),
            }
        }
        let radius = values.first().copied().unwrap_or(0.0);
        let energy = values.iter().map(|v| v.abs()).sum();
        Spectrum {
            values,
            groups,
            radius,
            energy,
        }
    }
}

pub fn spectral_radius(s: &Spectrum) -> f64 {
    s.radius
}

pub fn energy(s: &Spectrum) -> f64 {
    s.energy
}

/// All eigenvalues of a symmetric integer matrix via cyclic-by-row Jacobi
/// rotations.
pub fn eigenvalues_sym(m: &IntMatrix) -> Result<Spectrum> {
    if let Some((i, j)) = first_asymmetry(m) {
        return Err(Error::NotSymmetric(i, j));
    }
    let a = m.to_f64();
    let values = jacobi(a, m.n())?;
    Ok(Spectrum::from_values(values))
}

fn first_asymmetry(m: &IntMatrix) -> Option<(usize, usize)> {
    for i in 0..m.n() {
        for j in 0..i {
            if m.get(i, j) != m.get(j, i) {
                return Some((i, j));
            }
        }
    }
    None
}

fn off_diag_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            s += 2.0 * a[p * n + q] * a[p * n + q];
        }
    }
    s.sqrt()
}

fn jacobi(mut a: Vec<f64>, n: usize) -> Result<Vec<f64>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let fro = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let target = 1e-13 * (1.0 + fro);
    for _ in 0..MAX_SWEEPS {
        if off_diag_norm(&a, n) <= target {
            return Ok((0..n).map(|i| a[i * n + i]).collect());
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (theta * theta + 1.0).sqrt())
                } else {
                    -1.0 / (-theta + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    if off_diag_norm(&a, n) <= target {
        Ok((0..n).map(|i| a[i * n + i]).collect())
    } else {
        Err(Error::NoConvergence(MAX_SWEEPS))
    }
}

/// Exact characteristic polynomial det(λI - M) = λ^n + c_{n-1} λ^{n-1} + ... + c_0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    /// coeffs[k] is the coefficient of λ^k; coeffs[n] = 1.
    pub coeffs: Vec<BigInt>,
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// det(M) = (-1)^n * c_0.
    pub fn determinant(&self) -> BigInt {
        let c0 = self.coeffs[0].clone();
        if self.degree() % 2 == 0 {
            c0
        } else {
            -c0
        }
    }

    /// Exact evaluation at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluation at a float point (for residual checks).
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + bigint_to_f64(c);
        }
        acc
    }

    pub fn one_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| bigint_to_f64(c).abs()).sum()
    }

    /// Decimal-string coefficients c_0..c_n (big integers exceed native ranges).
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

fn bigint_to_f64(x: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::INFINITY)
}

impl std::fmt::Display for CharPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let n = self.degree();
        let mut first = true;
        for k in (0..=n).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = k == 0 || mag != BigInt::from(1);
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "λ")?,
                _ => write!(f, "λ^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Faddeev-LeVerrier recurrence over arbitrary-precision integers. Every
/// division in the recurrence is exact for integer matrices; a nonzero
/// remainder signals an arithmetic bug.
pub fn char_poly_exact(m: &IntMatrix) -> Result<CharPoly> {
    let n = m.n();
    let a: Vec<BigInt> = (0..n * n)
        .map(|idx| BigInt::from(m.get(idx / n, idx % n)))
        .collect();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::from(1);
    if n == 0 {
        return Ok(CharPoly { coeffs });
    }
    let mut work = a.clone(); // M_1 = A
    let trace = |mat: &[BigInt]| -> BigInt { (0..n).map(|i| mat[i * n + i].clone()).sum() };
    coeffs[n - 1] = -trace(&work);
    for step in 2..=n {
        // M_k = A * (M_{k-1} + c_{n-k+1} I)
        let shift = coeffs[n - step + 1].clone();
        let mut shifted = work;
        for i in 0..n {
            shifted[i * n + i] += &shift;
        }
        let mut next = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let aik = &a[i * n + k];
                if aik.is_zero() {
                    continue;
                }
                for j in 0..n {
                    next[i * n + j] += aik * &shifted[k * n + j];
                }
            }
        }
        let t = trace(&next);
        let step_big = BigInt::from(step);
        let (q, r) = num_integer::div_rem(t, step_big);
        if !r.is_zero() {
            return Err(Error::Invariant(format!(
                "Faddeev-LeVerrier division at step {step} left remainder {r}"
            )));
        }
        coeffs[n - step] = -q;
        work = next;
    }
    Ok(CharPoly { coeffs })
}

/// Exact determinant by Bareiss fraction-free elimination.
pub fn determinant_exact(m: &IntMatrix) -> BigInt {
    let n = m.n();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut a: Vec<BigInt> = (0..n * n)
        .map(|idx| BigInt::from(m.get(idx / n, idx % n)))
        .collect();
    let mut sign = 1i32;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            match (k + 1..n).find(|&r| !a[r * n + k].is_zero()) {
                Some(r) => {
                    for j in 0..n {
                        a.swap(k * n + j, r * n + j);
                    }
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                let (q, r) = num_integer::div_rem(num, prev.clone());
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                a[i * n + j] = q;
            }
            a[i * n + k] = BigInt::zero();
        }
        prev = a[k * n + k].clone();
    }
    let det = a[(n - 1) * n + (n - 1)].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Exact cospectrality via characteristic polynomials.
pub fn is_cospectral(a: &IntMatrix, b: &IntMatrix) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::OrderMismatch(a.n(), b.n()));
    }
    Ok(char_poly_exact(a)? == char_poly_exact(b)?)
}

/// μ₁ of the 2x2 quotient matrix obtained by splitting off vertex `i`:
/// [(W_ε − ε(i)) + sqrt((W_ε − ε(i))² + (n−1)·ε(i)²)] / (n−1).
pub fn quotient_bound(profile: &EpsilonProfile, i: usize, n: usize) -> f64 {
    assert!(n >= 2);
    let w = profile.wiener as f64;
    let eps_i = profile.degrees[i] as f64;
    let rest = w - eps_i;
    (rest + (rest * rest + (n as f64 - 1.0) * eps_i * eps_i).sqrt()) / (n as f64 - 1.0)
}

/// max over all vertices of [`quotient_bound`].
pub fn max_quotient_bound(profile: &EpsilonProfile) -> f64 {
    let n = profile.degrees.len();
    (0..n)
        .map(|i| quotient_bound(profile, i, n))
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Checks Cauchy interlacing of the principal submatrix on `subset`
/// against the full matrix, with tolerance 1e-9.
pub fn interlacing_check(m: &IntMatrix, subset: &[usize]) -> Result<bool> {
    let n = m.n();
    let k = subset.len();
    let mut seen = vec![false; n];
    for &i in subset {
        if i >= n {
            return Err(Error::VertexRange { vertex: i, n });
        }
        if seen[i] {
            return Err(Error::Invariant(format!("duplicate subset index {i}")));
        }
        seen[i] = true;
    }
    let mut full = eigenvalues_sym(m)?.values;
    let mut sub = eigenvalues_sym(&m.principal_submatrix(subset))?.values;
    full.reverse(); // ascending
    sub.reverse();
    let tol = 1e-9;
    for i in 0..k {
        if sub[i] < full[i] - tol || sub[i] > full[i + n - k] + tol {
            return Ok(false);
        }
    }
    Ok(true)
}
