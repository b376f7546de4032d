//! Monte Carlo search for pairs `C <= D` with `f(C) <= f(D)` violated.
//!
//! Floating point only. Nothing here feeds back into exact certificates;
//! a counterexample is an alarm to be explained, not a proof.

use nalgebra::{DMatrix, SymmetricEigen};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ratpoly::{to_f64, RatPoly};
use crate::realroots::Interval;

pub const DEFAULT_TOL: f64 = 1e-8;

/// Distance kept between sampled spectra and the interval ends.
pub const SPECTRAL_MARGIN: f64 = 1e-6;

/// Symmetric `C`, `D` with `D - C` PSD and both spectra inside `[lo, hi]`.
#[derive(Clone, Debug, PartialEq)]
pub struct OrderedPair {
    pub c: DMatrix<f64>,
    pub d: DMatrix<f64>,
    pub lo: f64,
    pub hi: f64,
}

fn random_orthogonal<R: Rng>(n: usize, rng: &mut R) -> DMatrix<f64> {
    let g = DMatrix::from_fn(n, n, |_, _| -> f64 { StandardNormal.sample(rng) });
    g.qr().q()
}

fn extreme_eigs(m: &DMatrix<f64>) -> (f64, f64) {
    let e = SymmetricEigen::new(m.clone()).eigenvalues;
    let lo = e.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = e.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    (lo, hi)
}

fn symmetrize(m: DMatrix<f64>) -> DMatrix<f64> {
    (&m + m.transpose()) * 0.5
}

/// `C = Q diag(l) Q^T` with spectrum in a random lower part of the
/// interval, then `D = C + P` for a random PSD `P` of random rank, scaled
/// to stay below the upper end.
pub fn sample_ordered_pair<R: Rng>(n: usize, lo: f64, hi: f64, rng: &mut R) -> Result<OrderedPair> {
    let (a, b) = (lo + SPECTRAL_MARGIN, hi - SPECTRAL_MARGIN);
    if n == 0 || a >= b || !a.is_finite() || !b.is_finite() {
        return Err(Error::InvalidArgument(format!("cannot sample {n}x{n} pairs in [{lo}, {hi}]")));
    }
    let spread = (b - a) * rng.random_range(0.0..1.0);
    let eig: Vec<f64> = (0..n).map(|_| a + spread * rng.random_range(0.0..=1.0)).collect();
    let q = random_orthogonal(n, rng);
    let c = symmetrize(&q * DMatrix::from_diagonal(&nalgebra::DVector::from_vec(eig)) * q.transpose());
    let (_, cmax) = extreme_eigs(&c);
    let headroom = b - cmax;
    let rank = rng.random_range(1..=n);
    let g = DMatrix::from_fn(n, rank, |_, _| -> f64 { StandardNormal.sample(rng) });
    let p = symmetrize(&g * g.transpose());
    let (_, pmax) = extreme_eigs(&p);
    // log-uniform fraction of the available room
    let mut scale = headroom.max(0.0) * 10f64.powf(rng.random_range(-3.0..=0.0)) / pmax.max(f64::MIN_POSITIVE);
    for _ in 0..64 {
        let d = symmetrize(&c + &p * scale);
        let (dmin, dmax) = extreme_eigs(&d);
        if dmin >= a - 1e-12 && dmax <= b + 1e-12 {
            return Ok(OrderedPair { c, d, lo, hi });
        }
        scale *= 0.5;
    }
    Ok(OrderedPair { d: c.clone(), c, lo, hi })
}

/// `f(X)` by Horner's rule in matrix arithmetic, symmetrized.
pub fn matfun_poly(f: &RatPoly, x: &DMatrix<f64>) -> DMatrix<f64> {
    let n = x.nrows();
    let id = DMatrix::<f64>::identity(n, n);
    let acc = f
        .coeffs()
        .iter()
        .rev()
        .fold(DMatrix::<f64>::zeros(n, n), |acc, c| acc * x + &id * to_f64(c));
    symmetrize(acc)
}

/// `f(X) = Q f(Lambda) Q^T` through the eigendecomposition.
pub fn matfun_eig(f: &RatPoly, x: &DMatrix<f64>) -> DMatrix<f64> {
    let coeffs: Vec<f64> = f.coeffs().iter().map(to_f64).collect();
    let eval = |t: f64| coeffs.iter().rev().fold(0.0, |acc, c| acc * t + c);
    let e = SymmetricEigen::new(x.clone());
    let fl = DMatrix::from_diagonal(&e.eigenvalues.map(eval));
    symmetrize(&e.eigenvectors * fl * e.eigenvectors.transpose())
}

/// `lambda_min(f(D) - f(C))`.
pub fn pair_violation(f: &RatPoly, c: &DMatrix<f64>, d: &DMatrix<f64>) -> f64 {
    extreme_eigs(&(matfun_poly(f, d) - matfun_poly(f, c))).0
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub trial: u64,
    pub c: Vec<Vec<f64>>,
    pub d: Vec<Vec<f64>>,
    pub lambda_min: f64,
}

impl Counterexample {
    pub fn matrices(&self) -> (DMatrix<f64>, DMatrix<f64>) {
        let to = |rows: &Vec<Vec<f64>>| DMatrix::from_fn(rows.len(), rows.len(), |i, j| rows[i][j]);
        (to(&self.c), to(&self.d))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FalsificationReport {
    pub n: usize,
    pub lo: f64,
    pub hi: f64,
    pub trials: u64,
    pub seed: u64,
    pub tol: f64,
    pub counterexample: Option<Counterexample>,
}

fn rows(m: &DMatrix<f64>) -> Vec<Vec<f64>> {
    (0..m.nrows()).map(|i| m.row(i).iter().cloned().collect()).collect()
}

/// Trial `k` draws from stream `k` of the seeded generator, so the first
/// counterexample found is independent of scheduling.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

pub fn falsify_monotone(
    f: &RatPoly,
    n: usize,
    interval: &Interval,
    trials: u64,
    seed: u64,
    tol: f64,
) -> Result<FalsificationReport> {
    if trials == 0 {
        return Err(Error::InvalidArgument("at least one trial".into()));
    }
    let (lo, hi) = (to_f64(&interval.lo), to_f64(&interval.hi));
    sample_ordered_pair(n, lo, hi, &mut trial_rng(seed, 0))?;
    let counterexample = (0..trials).into_par_iter().find_map_first(|trial| {
        let pair = sample_ordered_pair(n, lo, hi, &mut trial_rng(seed, trial)).ok()?;
        let v = pair_violation(f, &pair.c, &pair.d);
        (v < -tol).then(|| Counterexample { trial, c: rows(&pair.c), d: rows(&pair.d), lambda_min: v })
    });
    Ok(FalsificationReport { n, lo, hi, trials, seed, tol, counterexample })
}
