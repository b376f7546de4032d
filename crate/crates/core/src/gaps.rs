//! Locating a polynomial in the chain `P_1 ⊇ P_2 ⊇ ...` on `[0, alpha)`.
//!
//! Each order is settled independently by, in turn: the degree gate, a
//! Loewner certificate, a principal minor negative near 0, and the Hankel
//! extension obstruction one order down. An exclusion at order `n` is then
//! propagated to every higher order.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::loewner::{certify_pn, falsify_pn_near_zero, PnCertificate, PnFalsification};
use crate::moments::moment_flags;
use crate::ratpoly::{Rat, RatPoly};
use num_traits::{One, Signed};

pub const DEFAULT_NMAX: usize = 6;

/// Hard ceiling on the classifier order; exact minors beyond it are slow.
pub const MAX_ORDER: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DegreeGate {
    /// `1 < deg < 2n - 1`: no such polynomial is `n`-monotone.
    Forbidden,
    /// `deg` is `2n - 1` or `2n`: membership in `P_n` puts `f` in the gap.
    GapIfMember,
    Unconstrained,
}

pub fn degree_gate(deg: usize, n: usize) -> DegreeGate {
    if deg > 1 && deg + 1 < 2 * n {
        DegreeGate::Forbidden
    } else if deg > 1 && (deg + 1 == 2 * n || deg == 2 * n) {
        DegreeGate::GapIfMember
    } else {
        DegreeGate::Unconstrained
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum UnboundedGate {
    AffineAdmissible,
    Rejected,
}

/// On `[0, inf)` only `a t + b` with `a >= 0` is monotone of every order,
/// and no polynomial of higher degree is even 2-monotone.
pub fn unbounded_gate(f: &RatPoly) -> UnboundedGate {
    if f.degree().unwrap_or(0) <= 1 && !f.coeff(1).is_negative() {
        UnboundedGate::AffineAdmissible
    } else {
        UnboundedGate::Rejected
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Status {
    Member {
        #[serde(with = "crate::serde_rat::option")]
        alpha: Option<Rat>,
        certificate: Box<PnCertificate>,
    },
    ExcludedByDegree,
    ExcludedByMinor {
        witness: Box<PnFalsification>,
    },
    /// `M_{n-1}(f;0)` has Hankel rank below its rank.
    ExcludedByRankObstruction,
    /// Excluded at the lower order `order`, hence here too.
    ExcludedByChain {
        order: usize,
    },
    Unknown,
}

impl Status {
    pub fn is_member(&self) -> bool {
        matches!(self, Status::Member { .. })
    }

    pub fn is_excluded(&self) -> bool {
        matches!(
            self,
            Status::ExcludedByDegree
                | Status::ExcludedByMinor { .. }
                | Status::ExcludedByRankObstruction
                | Status::ExcludedByChain { .. }
        )
    }

    pub fn label(&self) -> &'static str {
        match self {
            Status::Member { .. } => "member",
            Status::ExcludedByDegree => "excluded (degree)",
            Status::ExcludedByMinor { .. } => "excluded (negative minor)",
            Status::ExcludedByRankObstruction => "excluded (Hankel rank)",
            Status::ExcludedByChain { .. } => "excluded (lower order)",
            Status::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderRecord {
    pub n: usize,
    pub gate: DegreeGate,
    pub status: Status,
}

/// `f in P_n([0, alpha)) \ P_{n+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gap {
    pub n: usize,
    #[serde(with = "crate::serde_rat::option")]
    pub alpha: Option<Rat>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapVerdict {
    pub f: RatPoly,
    pub per_n: Vec<OrderRecord>,
    pub gap: Option<Gap>,
}

impl GapVerdict {
    pub fn status(&self, n: usize) -> Option<&Status> {
        self.per_n.iter().find(|r| r.n == n).map(|r| &r.status)
    }
}

/// Status of `f` at order `n` on `[0, alpha)`, without chain propagation.
pub fn status_at(f: &RatPoly, n: usize, alpha_hint: Option<&Rat>) -> Result<Status> {
    let deg = f.degree().unwrap_or(0);
    if degree_gate(deg, n) == DegreeGate::Forbidden {
        return Ok(Status::ExcludedByDegree);
    }
    if let Some(cert) = certify_pn(f, n, alpha_hint)? {
        return Ok(Status::Member { alpha: cert.alpha.clone(), certificate: Box::new(cert) });
    }
    if let Some(w) = falsify_pn_near_zero(f, n)? {
        return Ok(Status::ExcludedByMinor { witness: Box::new(w) });
    }
    if n >= 2 && moment_flags(f, n - 1)?.extension_obstruction {
        return Ok(Status::ExcludedByRankObstruction);
    }
    Ok(Status::Unknown)
}

pub fn classify(f: &RatPoly, n_max: usize) -> Result<GapVerdict> {
    classify_with_hint(f, n_max, None)
}

/// Classification with `alpha` capped by `alpha_hint`.
pub fn classify_with_hint(f: &RatPoly, n_max: usize, alpha_hint: Option<&Rat>) -> Result<GapVerdict> {
    if n_max == 0 || n_max > MAX_ORDER {
        return Err(Error::InvalidArgument(format!("n_max must be in 1..={MAX_ORDER}, got {n_max}")));
    }
    let deg = f.degree().unwrap_or(0);
    let raw: Vec<Status> = (1..=n_max)
        .into_par_iter()
        .map(|n| status_at(f, n, alpha_hint))
        .collect::<Result<_>>()?;
    let mut per_n = Vec::with_capacity(n_max);
    let mut excluded_at: Option<usize> = None;
    for (i, status) in raw.into_iter().enumerate() {
        let n = i + 1;
        let status = match excluded_at {
            Some(order) if !status.is_excluded() => Status::ExcludedByChain { order },
            _ => status,
        };
        if status.is_excluded() && excluded_at.is_none() {
            excluded_at = Some(n);
        }
        per_n.push(OrderRecord { n, gate: degree_gate(deg, n), status });
    }
    let gap = per_n.windows(2).find_map(|w| match (&w[0].status, &w[1].status) {
        (Status::Member { alpha, .. }, next) if next.is_excluded() => Some(Gap { n: w[0].n, alpha: alpha.clone() }),
        _ => None,
    });
    Ok(GapVerdict { f: f.clone(), per_n, gap })
}

/// Classification of `f` on `[u, v)`: shift to `[0, v - u)` and cap alpha.
pub fn classify_on_interval(f: &RatPoly, u: &Rat, v: Option<&Rat>, n_max: usize) -> Result<GapVerdict> {
    let shifted = f.compose_affine(&Rat::one(), u);
    let width = match v {
        Some(v) if v <= u => return Err(Error::InvalidArgument("empty interval".into())),
        Some(v) => Some(v - u),
        None => None,
    };
    classify_with_hint(&shifted, n_max, width.as_ref())
}
