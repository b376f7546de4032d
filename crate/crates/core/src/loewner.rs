//! Loewner matrices `M_n(f;t) = (f^{(i+j-1)}(t) / (i+j-1)!)` and the
//! certificates built on them.
//!
//! Membership in `P_n([0, alpha))` is certified by: `M_n(f;0)` positive
//! semidefinite (exact characteristic-polynomial test), every leading
//! principal minor strictly positive on `(0, alpha)`, `f^{(2n-3)} > 0` and
//! `f^{(2n-1)} >= 0` on `[0, alpha)`. Exclusion is witnessed by a principal
//! minor that is negative on some `(0, eps)`.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{bareiss_det, bareiss_leading_minors, principal_subsets, RatMatrix};
use crate::ratpoly::{factorial, int, Rat, RatPoly};
use crate::realroots::{
    default_tolerance, sign_on_interval, smallest_positive_root, Interval, SignReport, SignVerdict,
};

/// `M_n(f;t)` as a matrix of polynomials in `t`.
///
/// Only the `2n - 1` distinct anti-diagonal entries are stored:
/// `hankel[k] = f^{(k+1)}(t) / (k+1)!`, and entry `(i, j)` (0-based) is
/// `hankel[i + j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoewnerMatrix {
    n: usize,
    hankel: Vec<RatPoly>,
}

impl LoewnerMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Entry `(i, j)`, 0-based.
    pub fn entry(&self, i: usize, j: usize) -> &RatPoly {
        &self.hankel[i + j]
    }

    pub fn anti_diagonals(&self) -> &[RatPoly] {
        &self.hankel
    }

    pub fn grid(&self) -> Vec<Vec<RatPoly>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.entry(i, j).clone()).collect()).collect()
    }

    pub fn eval(&self, t0: &Rat) -> RatMatrix {
        let values: Vec<Rat> = self.hankel.iter().map(|p| p.eval(t0)).collect();
        RatMatrix::from_fn(self.n, self.n, |i, j| values[i + j].clone())
    }

    pub fn leading_minor_polys(&self) -> Vec<RatPoly> {
        bareiss_leading_minors(&self.grid())
    }

    /// Determinant of the principal submatrix on `idx` (0-based).
    pub fn principal_minor_poly(&self, idx: &[usize]) -> RatPoly {
        let m: Vec<Vec<RatPoly>> =
            idx.iter().map(|&i| idx.iter().map(|&j| self.entry(i, j).clone()).collect()).collect();
        bareiss_det(m)
    }
}

pub fn build_loewner(f: &RatPoly, n: usize) -> LoewnerMatrix {
    let hankel = (1..2 * n)
        .map(|k| f.nth_derivative(k).scale(&Rat::from_integer(factorial(k)).recip()))
        .collect();
    LoewnerMatrix { n, hankel }
}

pub fn leading_minor_polys(m: &LoewnerMatrix) -> Vec<RatPoly> {
    m.leading_minor_polys()
}

pub fn eval_loewner(m: &LoewnerMatrix, t0: &Rat) -> RatMatrix {
    m.eval(t0)
}

/// A principal minor with its value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorWitness {
    /// 0-based row/column indices.
    pub indices: Vec<usize>,
    #[serde(with = "crate::serde_rat")]
    pub value: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsdVerdict {
    pub psd: bool,
    /// Negative principal minor, present when `psd` is false.
    pub witness: Option<MinorWitness>,
}

/// Largest order for which a failing PSD test enumerates principal minors.
const WITNESS_SEARCH_MAX: usize = 12;

/// Exact PSD test: a symmetric `A` is PSD iff `det(tI + A)` has no negative
/// coefficient, i.e. the characteristic polynomial alternates in sign.
pub fn is_psd_exact(a: &RatMatrix) -> Result<PsdVerdict> {
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = a.rows();
    let shifted = a.char_poly()?.compose_affine(&int(-1), &Rat::zero());
    let shifted = if n % 2 == 1 { -shifted } else { shifted };
    let psd = shifted.coeffs().iter().all(|c| !c.is_negative());
    if psd {
        return Ok(PsdVerdict { psd, witness: None });
    }
    let witness = (n <= WITNESS_SEARCH_MAX)
        .then(|| {
            principal_subsets(n).into_iter().find_map(|idx| {
                let value = a.principal(&idx).det().expect("square");
                value.is_negative().then_some(MinorWitness { indices: idx, value })
            })
        })
        .flatten();
    Ok(PsdVerdict { psd, witness })
}

/// How a membership certificate was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertificateRoute {
    /// `a t + b` with `a >= 0`: monotone of every order on every interval.
    Affine,
    /// Order 1: `f' >= 0`.
    Derivative,
    /// Loewner-matrix sufficient condition.
    Loewner,
}

/// Machine-checkable record of `f in P_n([0, alpha))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PnCertificate {
    pub f: RatPoly,
    pub n: usize,
    pub route: CertificateRoute,
    /// Right endpoint of `[0, alpha)`; `None` means unbounded.
    #[serde(with = "crate::serde_rat::option")]
    pub alpha: Option<Rat>,
    /// Leading principal minors of `M_n(f;t)` (Loewner route).
    pub minor_polys: Vec<RatPoly>,
    /// Sign of each minor on `(0, alpha)`.
    pub minor_evidence: Vec<SignReport>,
    /// `f^{(2n-3)}` on `[0, alpha)` then `f^{(2n-1)}` on `[0, alpha)`;
    /// for the derivative route just `f'`.
    pub side_conditions: Vec<SignReport>,
    pub psd_at_zero: bool,
}

impl PnCertificate {
    /// Recomputes every claim from `f`, `n` and `alpha` alone.
    pub fn verify(&self) -> Result<bool> {
        let f = &self.f;
        match self.route {
            CertificateRoute::Affine => Ok(f.degree().unwrap_or(0) <= 1 && !f.coeff(1).is_negative()),
            CertificateRoute::Derivative => {
                if self.n != 1 {
                    return Ok(false);
                }
                let df = f.derivative();
                let rep = sign_on_interval(&df, &self.closed_open_range(&[&df])?)?;
                Ok(rep.is_nonnegative() && rep == self.side_conditions[0])
            }
            CertificateRoute::Loewner => {
                if let Some(a) = &self.alpha {
                    if !a.is_positive() {
                        return Ok(false);
                    }
                }
                let m = build_loewner(f, self.n);
                if !is_psd_exact(&m.eval(&Rat::zero()))?.psd {
                    return Ok(false);
                }
                let minors = m.leading_minor_polys();
                if minors != self.minor_polys || minors.iter().any(RatPoly::is_zero) {
                    return Ok(false);
                }
                let refs: Vec<&RatPoly> = minors.iter().collect();
                let open = self.open_range(&refs)?;
                for (d, claimed) in minors.iter().zip(&self.minor_evidence) {
                    let rep = sign_on_interval(d, &open)?;
                    if !rep.is_strictly_positive() || rep != *claimed {
                        return Ok(false);
                    }
                }
                let (s1, s2) = side_polys(f, self.n);
                let rep1 = sign_on_interval(&s1, &self.closed_open_range(&[&s1])?)?;
                let rep2 = nonneg_report(&s2, &self.closed_open_range(&[&s2])?)?;
                Ok(rep1.is_strictly_positive()
                    && rep2.is_nonnegative()
                    && self.side_conditions == vec![rep1, rep2])
            }
        }
    }

    fn open_range(&self, polys: &[&RatPoly]) -> Result<Interval> {
        Ok(Interval::open(Rat::zero(), self.finite_end(polys)?))
    }

    fn closed_open_range(&self, polys: &[&RatPoly]) -> Result<Interval> {
        Ok(Interval::closed_open(Rat::zero(), self.finite_end(polys)?))
    }

    /// `alpha`, or a point beyond every positive root when unbounded.
    fn finite_end(&self, polys: &[&RatPoly]) -> Result<Rat> {
        match &self.alpha {
            Some(a) => Ok(a.clone()),
            None => beyond_roots(polys),
        }
    }
}

fn beyond_roots(polys: &[&RatPoly]) -> Result<Rat> {
    let mut b = int(1);
    for p in polys.iter().filter(|p| !p.is_zero()) {
        let r = p.root_bound()?;
        if r > b {
            b = r;
        }
    }
    Ok(b + int(1))
}

/// `f^{(2n-3)}` and `f^{(2n-1)}`.
fn side_polys(f: &RatPoly, n: usize) -> (RatPoly, RatPoly) {
    (f.nth_derivative(2 * n - 3), f.nth_derivative(2 * n - 1))
}

fn nonneg_report(p: &RatPoly, iv: &Interval) -> Result<SignReport> {
    if p.is_zero() {
        return Ok(SignReport { verdict: SignVerdict::Nonnegative, witness: None });
    }
    sign_on_interval(p, iv)
}

fn min_opt(a: Option<Rat>, b: Option<Rat>) -> Option<Rat> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if x < y { x } else { y }),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Certified lower bound for the first positive root, if any.
fn first_root_cap(p: &RatPoly, tol: &Rat) -> Result<Option<Rat>> {
    if p.is_zero() {
        return Ok(None);
    }
    Ok(smallest_positive_root(p, tol)?.map(|e| e.lower().clone()))
}

/// Certificate of `f in P_n([0, alpha))` with default enclosure tolerance.
pub fn certify_pn(f: &RatPoly, n: usize, alpha_hint: Option<&Rat>) -> Result<Option<PnCertificate>> {
    certify_pn_with_tolerance(f, n, alpha_hint, &default_tolerance())
}

/// Finds the largest certifiable `alpha` (up to `tol`, capped by
/// `alpha_hint`). Returns `None` when no `alpha > 0` can be certified.
pub fn certify_pn_with_tolerance(
    f: &RatPoly,
    n: usize,
    alpha_hint: Option<&Rat>,
    tol: &Rat,
) -> Result<Option<PnCertificate>> {
    if n == 0 {
        return Err(Error::InvalidArgument("order n must be at least 1".into()));
    }
    let hint = alpha_hint.cloned();
    if let Some(h) = &hint {
        if !h.is_positive() {
            return Err(Error::InvalidArgument("alpha hint must be positive".into()));
        }
    }
    if f.degree().unwrap_or(0) <= 1 {
        if f.coeff(1).is_negative() {
            return Ok(None);
        }
        return Ok(Some(PnCertificate {
            f: f.clone(),
            n,
            route: CertificateRoute::Affine,
            alpha: hint,
            minor_polys: Vec::new(),
            minor_evidence: Vec::new(),
            side_conditions: Vec::new(),
            psd_at_zero: true,
        }));
    }
    if n == 1 {
        return certify_derivative(f, hint, tol);
    }
    certify_loewner(f, n, hint, tol)
}

fn certify_derivative(f: &RatPoly, hint: Option<Rat>, tol: &Rat) -> Result<Option<PnCertificate>> {
    let df = f.derivative();
    if df.eval(&Rat::zero()).is_negative() {
        return Ok(None);
    }
    let alpha = min_opt(first_root_cap(&df, tol)?, hint);
    if alpha.as_ref().is_some_and(|a| !a.is_positive()) {
        return Ok(None);
    }
    let end = match &alpha {
        Some(a) => a.clone(),
        None => beyond_roots(&[&df])?,
    };
    let rep = sign_on_interval(&df, &Interval::closed_open(Rat::zero(), end))?;
    if !rep.is_nonnegative() {
        return Ok(None);
    }
    Ok(Some(PnCertificate {
        f: f.clone(),
        n: 1,
        route: CertificateRoute::Derivative,
        alpha,
        minor_polys: Vec::new(),
        minor_evidence: Vec::new(),
        side_conditions: vec![rep],
        psd_at_zero: true,
    }))
}

fn certify_loewner(f: &RatPoly, n: usize, hint: Option<Rat>, tol: &Rat) -> Result<Option<PnCertificate>> {
    let m = build_loewner(f, n);
    if !is_psd_exact(&m.eval(&Rat::zero()))?.psd {
        return Ok(None);
    }
    let minors = m.leading_minor_polys();
    if minors.iter().any(RatPoly::is_zero) {
        return Ok(None);
    }
    let (s1, s2) = side_polys(f, n);
    if !s1.eval(&Rat::zero()).is_positive() || s2.eval(&Rat::zero()).is_negative() {
        return Ok(None);
    }
    let mut alpha = hint;
    for p in minors.iter().chain([&s1, &s2]) {
        alpha = min_opt(alpha, first_root_cap(p, tol)?);
    }
    if alpha.as_ref().is_some_and(|a| !a.is_positive()) {
        return Ok(None);
    }
    let mut all: Vec<&RatPoly> = minors.iter().collect();
    all.extend([&s1, &s2]);
    let end = match &alpha {
        Some(a) => a.clone(),
        None => beyond_roots(&all)?,
    };
    let open = Interval::open(Rat::zero(), end.clone());
    let mut minor_evidence = Vec::with_capacity(n);
    for d in &minors {
        let rep = sign_on_interval(d, &open)?;
        if !rep.is_strictly_positive() {
            return Ok(None);
        }
        minor_evidence.push(rep);
    }
    let half_open = Interval::closed_open(Rat::zero(), end);
    let rep1 = sign_on_interval(&s1, &half_open)?;
    let rep2 = nonneg_report(&s2, &half_open)?;
    if !rep1.is_strictly_positive() || !rep2.is_nonnegative() {
        return Ok(None);
    }
    Ok(Some(PnCertificate {
        f: f.clone(),
        n,
        route: CertificateRoute::Loewner,
        alpha,
        minor_polys: minors,
        minor_evidence,
        side_conditions: vec![rep1, rep2],
        psd_at_zero: true,
    }))
}

/// A principal minor of `M_n(f;t)` negative at `t0` and on `(0, t0]`
/// (or at `t0 = 0`), so `M_n(f;t)` fails to be PSD arbitrarily close to 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PnFalsification {
    pub n: usize,
    #[serde(with = "crate::serde_rat")]
    pub t0: Rat,
    /// 0-based principal indices.
    pub indices: Vec<usize>,
    pub minor: RatPoly,
    /// Exponent of the lowest-order nonzero term of `minor`.
    pub lowest_order: usize,
    #[serde(with = "crate::serde_rat")]
    pub lowest_coeff: Rat,
    #[serde(with = "crate::serde_rat")]
    pub value: Rat,
}

impl PnFalsification {
    pub fn verify(&self, f: &RatPoly) -> bool {
        let m = build_loewner(f, self.n);
        let minor = m.principal_minor_poly(&self.indices);
        minor == self.minor
            && minor.eval(&self.t0) == self.value
            && self.value.is_negative()
            && minor.lowest_term().is_some_and(|(j, c)| j == self.lowest_order && *c == self.lowest_coeff)
    }
}

/// Searches principal minors of `M_n(f;t)` for one negative at `t = 0`,
/// then (leading ones first) for one whose lowest-order coefficient is
/// negative.
pub fn falsify_pn_near_zero(f: &RatPoly, n: usize) -> Result<Option<PnFalsification>> {
    if n == 0 {
        return Err(Error::InvalidArgument("order n must be at least 1".into()));
    }
    let m = build_loewner(f, n);
    let at_zero = m.eval(&Rat::zero());
    let leading: Vec<Vec<usize>> = (1..=n).map(|k| (0..k).collect()).collect();
    let others: Vec<Vec<usize>> = principal_subsets(n).into_iter().filter(|s| !leading.contains(s)).collect();
    let order: Vec<&Vec<usize>> = leading.iter().chain(&others).collect();
    // a minor already negative at t = 0 is the strongest witness
    let negative_at_zero = order.iter().find(|idx| at_zero.principal(idx).det().expect("square").is_negative());
    let candidates = negative_at_zero.into_iter().chain(order.iter()).map(|idx| (*idx).clone());
    for idx in candidates {
        let minor = m.principal_minor_poly(&idx);
        let Some((order, coeff)) = minor.lowest_term() else {
            continue;
        };
        if !coeff.is_negative() {
            continue;
        }
        let (order, coeff) = (order, coeff.clone());
        let t0 = if order == 0 {
            Rat::zero()
        } else {
            let mut t = match smallest_positive_root(&minor, &crate::ratpoly::rat(1, 1024))? {
                Some(enc) => enc.upper().clone() / int(2),
                None => int(1),
            };
            while !minor.eval(&t).is_negative() {
                t /= int(2);
            }
            t
        };
        let value = minor.eval(&t0);
        return Ok(Some(PnFalsification { n, t0, indices: idx, minor, lowest_order: order, lowest_coeff: coeff, value }));
    }
    Ok(None)
}

/// `t + lambda t^2 + lambda^2 t^3 + lambda^3 t^4 + c t^5`.
pub fn quintic_family_poly(lambda: &Rat, c: &Rat) -> RatPoly {
    let l2 = lambda * lambda;
    let l3 = &l2 * lambda;
    RatPoly::new(vec![Rat::zero(), int(1), lambda.clone(), l2, l3, c.clone()])
}

/// `det M_3(p;t)` for the quintic family.
pub fn quintic_family_det_m3(lambda: &Rat, c: &Rat) -> RatPoly {
    build_loewner(&quintic_family_poly(lambda, c), 3)
        .leading_minor_polys()
        .pop()
        .expect("order 3")
}
