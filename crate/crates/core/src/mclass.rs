//! Partial-fraction certificates showing `f` is not in `M_n(I)`.
//!
//! For nodes `0 < lambda_1 < ... < lambda_{2n} < a` and a polynomial `p`
//! with `p(0) = 0`, `p >= 0` on `(0, inf)` and `deg p <= 2n - 1`, the
//! residues `a_k = p(-lambda_k) / (lambda_k pi'(-lambda_k))` of
//! `p(t) / (t pi(t))`, `pi(x) = prod_j (x + lambda_j)`, satisfy
//! `sum_k a_k lambda_k / (t + lambda_k) = p(t) / pi(t) >= 0` for `t > 0`
//! and `sum_k a_k = 0`. A negative `sum_k a_k f(lambda_k)` then violates the
//! defining implication of `M_n(I)`.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ratpoly::{int, rat, standard_gap_poly, Rat, RatPoly};
use crate::realroots::sign_on_positive_axis;

fn validate_nodes(lambdas: &[Rat]) -> Result<()> {
    if lambdas.is_empty() {
        return Err(Error::InvalidNodes("no nodes".into()));
    }
    if let Some(l) = lambdas.iter().find(|l| !l.is_positive()) {
        return Err(Error::InvalidNodes(format!("node {l} is not positive")));
    }
    for (i, x) in lambdas.iter().enumerate() {
        if lambdas[..i].contains(x) {
            return Err(Error::InvalidNodes(format!("node {x} repeated")));
        }
    }
    Ok(())
}

/// `prod_{j != k} (t + lambda_j)`.
fn cofactor_poly(lambdas: &[Rat], k: usize) -> RatPoly {
    lambdas
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != k)
        .fold(RatPoly::one(), |acc, (_, l)| acc * RatPoly::new(vec![l.clone(), Rat::one()]))
}

/// `sum_k a_k lambda_k prod_{j != k} (t + lambda_j)`, which must equal `p`.
pub fn reconstruct(lambdas: &[Rat], a_coeffs: &[Rat]) -> RatPoly {
    lambdas
        .iter()
        .zip(a_coeffs)
        .enumerate()
        .fold(RatPoly::zero(), |acc, (k, (l, a))| acc + cofactor_poly(lambdas, k).scale(&(a * l)))
}

/// Exact residues `a_k`, checked against the reconstruction identity.
pub fn partial_fraction_coeffs(p: &RatPoly, lambdas: &[Rat]) -> Result<Vec<Rat>> {
    validate_nodes(lambdas)?;
    let bound = lambdas.len() - 1;
    if let Some(d) = p.degree() {
        if d > bound {
            return Err(Error::DegreeBound { degree: d, bound });
        }
    }
    let coeffs: Vec<Rat> = lambdas
        .iter()
        .enumerate()
        .map(|(k, lk)| {
            let dpi: Rat = lambdas
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, lj)| lj - lk)
                .product();
            p.eval(&-lk) / (lk * dpi)
        })
        .collect();
    if reconstruct(lambdas, &coeffs) != *p {
        return Err(Error::Inconsistent("partial-fraction reconstruction failed".into()));
    }
    Ok(coeffs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PremiseFlags {
    pub sum_zero: bool,
    pub p_nonneg_on_positives: bool,
    pub p_vanishes_at_zero: bool,
    pub degree_bound: bool,
    pub reconstruction_ok: bool,
}

impl PremiseFlags {
    pub fn all_ok(&self) -> bool {
        self.sum_zero && self.p_nonneg_on_positives && self.p_vanishes_at_zero && self.degree_bound && self.reconstruction_ok
    }
}

/// Since `pi > 0` on `t > 0`, `p >= 0` there gives the positivity premise.
pub fn premise_check(p: &RatPoly, lambdas: &[Rat], a_coeffs: &[Rat]) -> Result<PremiseFlags> {
    let sum: Rat = a_coeffs.iter().sum();
    let nonneg = p.is_zero() || sign_on_positive_axis(p)?.is_nonnegative();
    Ok(PremiseFlags {
        sum_zero: sum.is_zero(),
        p_nonneg_on_positives: nonneg,
        p_vanishes_at_zero: p.coeff(0).is_zero(),
        degree_bound: p.degree().is_none_or(|d| d < lambdas.len()),
        reconstruction_ok: a_coeffs.len() == lambdas.len() && reconstruct(lambdas, a_coeffs) == *p,
    })
}

/// Self-contained witness that `f` is not in `M_n([0, a])`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MClassCertificate {
    pub n: usize,
    #[serde(with = "crate::serde_rat")]
    pub a: Rat,
    pub f: RatPoly,
    pub p: RatPoly,
    #[serde(with = "crate::serde_rat::vec")]
    pub lambdas: Vec<Rat>,
    #[serde(with = "crate::serde_rat::vec")]
    pub a_coeffs: Vec<Rat>,
    pub premise: PremiseFlags,
    /// `sum_k a_k f(lambda_k)`, negative.
    #[serde(with = "crate::serde_rat")]
    pub sum_value: Rat,
}

impl MClassCertificate {
    pub fn verify(&self) -> Result<bool> {
        if self.lambdas.len() != 2 * self.n
            || !self.lambdas.windows(2).all(|w| w[0] < w[1])
            || !self.lambdas.iter().all(|l| l.is_positive() && *l < self.a)
        {
            return Ok(false);
        }
        let coeffs = partial_fraction_coeffs(&self.p, &self.lambdas)?;
        let premise = premise_check(&self.p, &self.lambdas, &coeffs)?;
        let sum = sum_value(&self.f, &self.lambdas, &coeffs);
        Ok(coeffs == self.a_coeffs
            && premise == self.premise
            && premise.all_ok()
            && sum == self.sum_value
            && sum.is_negative())
    }
}

pub fn sum_value(f: &RatPoly, lambdas: &[Rat], a_coeffs: &[Rat]) -> Rat {
    lambdas.iter().zip(a_coeffs).map(|(l, a)| a * f.eval(l)).sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum MClassOutcome {
    Certificate(Box<MClassCertificate>),
    PremiseFailed {
        flags: PremiseFlags,
        #[serde(with = "crate::serde_rat::vec")]
        a_coeffs: Vec<Rat>,
    },
    /// Premise holds but the sum is not negative.
    NotNegative {
        #[serde(with = "crate::serde_rat")]
        sum_value: Rat,
    },
}

impl MClassOutcome {
    pub fn certificate(&self) -> Option<&MClassCertificate> {
        match self {
            MClassOutcome::Certificate(c) => Some(c),
            _ => None,
        }
    }
}

pub fn mclass_falsify(f: &RatPoly, n: usize, a: &Rat, p: &RatPoly, lambdas: &[Rat]) -> Result<MClassOutcome> {
    if lambdas.len() != 2 * n {
        return Err(Error::InvalidNodes(format!("expected {} nodes, got {}", 2 * n, lambdas.len())));
    }
    if let Some(l) = lambdas.iter().find(|l| !l.is_positive() || *l >= a) {
        return Err(Error::InvalidNodes(format!("node {l} outside (0, {a})")));
    }
    let mut sorted = lambdas.to_vec();
    sorted.sort();
    let coeffs = partial_fraction_coeffs(p, &sorted)?;
    let premise = premise_check(p, &sorted, &coeffs)?;
    if !premise.all_ok() {
        return Ok(MClassOutcome::PremiseFailed { flags: premise, a_coeffs: coeffs });
    }
    let value = sum_value(f, &sorted, &coeffs);
    if !value.is_negative() {
        return Ok(MClassOutcome::NotNegative { sum_value: value });
    }
    Ok(MClassOutcome::Certificate(Box::new(MClassCertificate {
        n,
        a: a.clone(),
        f: f.clone(),
        p: p.clone(),
        lambdas: sorted,
        a_coeffs: coeffs,
        premise,
        sum_value: value,
    })))
}

/// Checks `sum a_k (lambda_k t - 1)/(t + lambda_k) = (t + 1/t) sum a_k
/// lambda_k/(t + lambda_k)` after multiplying both sides by `t pi(t)`.
pub fn mobius_premise_identity(lambdas: &[Rat], a_coeffs: &[Rat]) -> Result<bool> {
    validate_nodes(lambdas)?;
    if lambdas.len() != a_coeffs.len() {
        return Err(Error::ShapeMismatch("one coefficient per node".into()));
    }
    let sum: Rat = a_coeffs.iter().sum();
    if !sum.is_zero() {
        return Err(Error::InvalidArgument(format!("coefficients sum to {sum}, not 0")));
    }
    let t = RatPoly::x();
    let mut lhs = RatPoly::zero();
    let mut rhs = RatPoly::zero();
    for (k, (l, a)) in lambdas.iter().zip(a_coeffs).enumerate() {
        let pk = cofactor_poly(lambdas, k);
        lhs = lhs + &t * &RatPoly::new(vec![-a.clone(), a * l]) * &pk;
        rhs = rhs + pk.scale(&(a * l));
    }
    let rhs = RatPoly::new(vec![int(1), int(0), int(1)]) * rhs;
    Ok(lhs == rhs)
}

/// `p = t q1^2 + q2^2` for the shapes used by certificates: `p` itself a
/// square, or `t` times a square.
pub fn sos_decomposition_check(p: &RatPoly) -> Option<(RatPoly, RatPoly)> {
    if p.is_zero() {
        return Some((RatPoly::zero(), RatPoly::zero()));
    }
    if let Some(q2) = p.sqrt_exact() {
        return Some((RatPoly::zero(), q2));
    }
    if p.coeff(0).is_zero() {
        let (q, r) = p.div_rem(&RatPoly::x()).ok()?;
        if r.is_zero() {
            if let Some(q1) = q.sqrt_exact() {
                return Some((q1, RatPoly::zero()));
            }
        }
    }
    None
}

/// Node and polynomial choices reproducing the standard counterexamples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Preset {
    pub name: String,
    pub n: usize,
    pub f: RatPoly,
    pub p: RatPoly,
    #[serde(with = "crate::serde_rat")]
    pub a: Rat,
    #[serde(with = "crate::serde_rat::vec")]
    pub lambdas: Vec<Rat>,
}

pub const PRESET_NAMES: [&str; 4] = ["paper-n2", "paper-n3", "paper-n4", "paper-n5"];

/// `(n, p exponent, node denominator, interval endpoint)`; each endpoint is
/// below the certified `alpha` of `g_n`.
const PRESET_TABLE: [(usize, usize, i64, (i64, i64)); 4] =
    [(2, 2, 8, (7, 10)), (3, 4, 30, (401, 2000)), (4, 6, 200, (79, 1000)), (5, 6, 1250, (4, 125))];

pub fn preset(name: &str) -> Option<Preset> {
    let i = PRESET_NAMES.iter().position(|&p| p == name)?;
    let (n, m, d, (an, ad)) = PRESET_TABLE[i];
    Some(Preset {
        name: name.to_string(),
        n,
        f: standard_gap_poly(n),
        p: RatPoly::monomial(Rat::one(), m),
        a: rat(an, ad),
        lambdas: (1..=2 * n as i64).map(|k| rat(k, d)).collect(),
    })
}

pub fn run_preset(p: &Preset) -> Result<MClassOutcome> {
    mclass_falsify(&p.f, p.n, &p.a, &p.p, &p.lambdas)
}

/// Grid search over nodes `k/d` (`k = 1..2n`, `2n/d < a`) and `p = x^{2m}`
/// (`2m <= 2n - 1`) for a certificate; `None` when the grid has none.
pub fn search_certificate(f: &RatPoly, n: usize, a: &Rat, denominators: &[i64]) -> Result<Option<MClassCertificate>> {
    for &d in denominators {
        let lambdas: Vec<Rat> = (1..=2 * n as i64).map(|k| rat(k, d)).collect();
        if lambdas.last().is_some_and(|l| l >= a) {
            continue;
        }
        for m in 1..n {
            let p = RatPoly::monomial(Rat::one(), 2 * m);
            if let MClassOutcome::Certificate(c) = mclass_falsify(f, n, a, &p, &lambdas)? {
                return Ok(Some(*c));
            }
        }
    }
    Ok(None)
}
