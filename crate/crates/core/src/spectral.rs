//! Exact spectral fingerprints of adjacency matrices.
//!
//! The characteristic polynomial is computed modulo a run of 62-bit primes by
//! Hessenberg reduction, then lifted to the integers by Chinese remaindering.
//! Enough primes are used to cover a Hadamard-style bound on every
//! coefficient, so the result is exact.

use std::fmt;

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectralError {
    #[error("{0}")]
    Parameter(String),
    #[error("symmetric eigensolver did not converge within {iterations} iterations")]
    NoConvergence { iterations: usize },
}

/// Monic integer characteristic polynomial `det(xI - A)`;
/// `coeffs()[i]` is the coefficient of `x^i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Result<Self, SpectralError> {
        match coeffs.last() {
            Some(c) if c.is_one() => Ok(CharPoly { coeffs }),
            _ => Err(SpectralError::Parameter(
                "characteristic polynomial must be monic".into(),
            )),
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Exact polynomial product; the polynomial of a disjoint union.
    pub fn multiply(&self, other: &CharPoly) -> CharPoly {
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        CharPoly { coeffs: out }
    }

    /// Comma-separated decimal coefficients, constant term first.
    pub fn to_line(&self) -> String {
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn parse_line(line: &str) -> Result<Self, SpectralError> {
        let coeffs = line
            .trim_end_matches('\n')
            .split(',')
            .map(|tok| {
                tok.parse::<BigInt>()
                    .map_err(|_| SpectralError::Parameter(format!("bad coefficient {tok:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        CharPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_coeff = !magnitude.is_one() || power == 0;
            match (show_coeff, power) {
                (true, 0) => write!(f, "{magnitude}")?,
                (true, 1) => write!(f, "{magnitude}x")?,
                (true, _) => write!(f, "{magnitude}x^{power}")?,
                (false, 1) => f.write_str("x")?,
                (false, _) => write!(f, "x^{power}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Exact traces `tr(A^k)`; `counts()[k - 1]` holds the value for `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WalkCounts {
    counts: Vec<BigInt>,
}

impl WalkCounts {
    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    /// `tr(A^k)` for `1 <= k <= k_max`.
    pub fn get(&self, k: usize) -> Option<&BigInt> {
        k.checked_sub(1).and_then(|i| self.counts.get(i))
    }

    pub fn k_max(&self) -> usize {
        self.counts.len()
    }
}

pub fn char_poly(g: &Graph) -> CharPoly {
    let n = g.node_count();
    if n == 0 {
        return CharPoly {
            coeffs: vec![BigInt::one()],
        };
    }
    let needed_bits = coefficient_bound_bits(n, g.max_degree());
    let mut residues: Vec<Vec<u64>> = Vec::new();
    let mut moduli = Vec::new();
    let mut bits = 0u64;
    for p in primes_below_2_62() {
        residues.push(char_poly_mod(g, p));
        moduli.push(p);
        bits += 61;
        if bits > needed_bits {
            break;
        }
    }
    CharPoly {
        coeffs: (0..=n)
            .map(|i| {
                let column: Vec<u64> = residues.iter().map(|r| r[i]).collect();
                crt_symmetric(&column, &moduli)
            })
            .collect(),
    }
}

/// Bits needed so that the prime product exceeds twice every coefficient.
///
/// The coefficient of `x^(n-k)` is a signed sum of the `C(n, k)` principal
/// `k x k` minors, each at most `max_degree^(k/2)` by Hadamard's inequality,
/// so every coefficient is below `2^n * max_degree^(n/2)`.
fn coefficient_bound_bits(n: usize, max_degree: usize) -> u64 {
    let log_degree = if max_degree <= 1 {
        0
    } else {
        u64::from(usize::BITS - (max_degree - 1).leading_zeros())
    };
    let n = n as u64;
    n + (n * log_degree).div_ceil(2) + 2
}

fn primes_below_2_62() -> impl Iterator<Item = u64> {
    ((1u64 << 61)..(1u64 << 62))
        .rev()
        .step_by(2)
        .filter(|&c| is_prime_u64(c))
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for 64-bit inputs.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Characteristic polynomial of the adjacency matrix over `Z/pZ`,
/// coefficients constant term first.
fn char_poly_mod(g: &Graph, p: u64) -> Vec<u64> {
    let n = g.node_count();
    let mut h = vec![vec![0u64; n]; n];
    for &(u, v) in g.edges() {
        h[u][v] = 1;
        h[v][u] = 1;
    }
    // Similarity reduction to upper Hessenberg form.
    for col in 0..n.saturating_sub(2) {
        let Some(pivot) = (col + 1..n).find(|&r| h[r][col] != 0) else {
            continue;
        };
        if pivot != col + 1 {
            h.swap(pivot, col + 1);
            for row in h.iter_mut() {
                row.swap(pivot, col + 1);
            }
        }
        let inv = inv_mod(h[col + 1][col], p);
        for r in col + 2..n {
            if h[r][col] == 0 {
                continue;
            }
            let factor = mul_mod(h[r][col], inv, p);
            // row_r -= factor * row_{col+1}
            let (upper, lower) = h.split_at_mut(r);
            let pivot_row = &upper[col + 1];
            for (x, &y) in lower[0].iter_mut().zip(pivot_row.iter()).skip(col) {
                *x = (*x + p - mul_mod(factor, y, p)) % p;
            }
            // col_{col+1} += factor * col_r
            for row in h.iter_mut() {
                let add = mul_mod(factor, row[r], p);
                row[col + 1] = (row[col + 1] + add) % p;
            }
        }
    }
    // polys[m] is the characteristic polynomial of the leading m x m block.
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        let diag = h[m - 1][m - 1];
        let prev = &polys[m - 1];
        let mut next = vec![0u64; m + 1];
        for (i, &c) in prev.iter().enumerate() {
            next[i + 1] = (next[i + 1] + c) % p;
            next[i] = (next[i] + p - mul_mod(diag, c, p)) % p;
        }
        let mut sub_product = 1u64;
        for i in (1..m).rev() {
            sub_product = mul_mod(sub_product, h[i][i - 1], p);
            if sub_product == 0 {
                break;
            }
            let coef = mul_mod(h[i - 1][m - 1], sub_product, p);
            if coef == 0 {
                continue;
            }
            for (j, &c) in polys[i - 1].iter().enumerate() {
                next[j] = (next[j] + p - mul_mod(coef, c, p)) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().expect("n >= 1")
}

/// Garner reconstruction into the symmetric range `(-M/2, M/2]`.
fn crt_symmetric(residues: &[u64], moduli: &[u64]) -> BigInt {
    let mut value = BigInt::zero();
    let mut modulus = BigInt::one();
    for (&r, &p) in residues.iter().zip(moduli) {
        let p_big = BigInt::from(p);
        let current = (&value % &p_big).to_u64().expect("value reduced mod p");
        let m_mod_p = (&modulus % &p_big).to_u64().expect("modulus reduced mod p");
        let delta = mul_mod((r + p - current) % p, inv_mod(m_mod_p, p), p);
        value += &modulus * BigInt::from(delta);
        modulus *= p_big;
    }
    if &value * 2 > modulus {
        value -= modulus;
    }
    value
}

/// Exact comparison of characteristic polynomials.
pub fn cospectral(g1: &Graph, g2: &Graph) -> bool {
    g1.node_count() == g2.node_count() && char_poly(g1) == char_poly(g2)
}

/// `tr(A^k)` for `k = 1..=k_max` by repeated multiplication with the
/// adjacency lists.
pub fn closed_walk_counts(g: &Graph, k_max: usize) -> WalkCounts {
    let n = g.node_count();
    // power[i][j] = [A^k]_{ij}
    let mut power: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigInt::from(u8::from(g.has_edge(i, j))))
                .collect()
        })
        .collect();
    let mut counts = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        if k > 1 {
            power = power
                .iter()
                .map(|row| {
                    (0..n)
                        .map(|j| g.neighbors(j).iter().map(|&l| &row[l]).sum())
                        .collect()
                })
                .collect();
        }
        counts.push((0..n).map(|i| &power[i][i]).sum());
    }
    WalkCounts { counts }
}

/// Power sums of the roots of `p` via Newton's identities.
pub fn power_sums_from_charpoly(p: &CharPoly, k_max: usize) -> WalkCounts {
    let n = p.degree();
    // Writing p = x^n + a_1 x^(n-1) + ... + a_n, a_i = coeffs[n - i].
    let a = |i: usize| &p.coeffs[n - i];
    let mut sums: Vec<BigInt> = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        let mut s = if k <= n {
            -BigInt::from(k) * a(k)
        } else {
            BigInt::zero()
        };
        for i in 1..k.min(n + 1) {
            s -= a(i) * &sums[k - i - 1];
        }
        sums.push(s);
    }
    WalkCounts { counts: sums }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumSource {
    Path,
    Cycle,
}

/// Closed-form eigenvalues of `P_n` or `C_n`, in `f64`.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedFormSpectrum {
    pub source: SpectrumSource,
    pub n: usize,
    pub values: Vec<f64>,
}

/// `2 cos(pi j / (n + 1))` for `j = 1..=n`.
pub fn path_spectrum(n: usize) -> Result<ClosedFormSpectrum, SpectralError> {
    if n < 1 {
        return Err(SpectralError::Parameter("path needs n >= 1".into()));
    }
    let values = (1..=n)
        .map(|j| 2.0 * (std::f64::consts::PI * j as f64 / (n + 1) as f64).cos())
        .collect();
    Ok(ClosedFormSpectrum {
        source: SpectrumSource::Path,
        n,
        values,
    })
}

/// `2 cos(2 pi j / n)` for `j = 0..n`.
pub fn cycle_spectrum(n: usize) -> Result<ClosedFormSpectrum, SpectralError> {
    if n < 3 {
        return Err(SpectralError::Parameter("cycle needs n >= 3".into()));
    }
    let values = (0..n)
        .map(|j| 2.0 * (2.0 * std::f64::consts::PI * j as f64 / n as f64).cos())
        .collect();
    Ok(ClosedFormSpectrum {
        source: SpectrumSource::Cycle,
        n,
        values,
    })
}

pub const FLOAT_SPECTRUM_TOLERANCE: f64 = 1e-9;
const EIGEN_MAX_ITERATIONS: usize = 10_000;

/// Floating eigenvalues, descending. For display only; cospectrality is
/// never decided from these.
pub fn float_spectrum(g: &Graph) -> Result<Vec<f64>, SpectralError> {
    let n = g.node_count();
    if n == 0 {
        return Ok(Vec::new());
    }
    let a = DMatrix::from_fn(n, n, |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 });
    let eigen = SymmetricEigen::try_new(a, f64::EPSILON, EIGEN_MAX_ITERATIONS).ok_or(
        SpectralError::NoConvergence {
            iterations: EIGEN_MAX_ITERATIONS,
        },
    )?;
    let mut values: Vec<f64> = eigen.eigenvalues.iter().copied().collect();
    values.sort_by(|a, b| b.total_cmp(a));
    Ok(values)
}
