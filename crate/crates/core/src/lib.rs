//! Exact certification and falsification of matrix monotonicity for real
//! polynomials on bounded intervals `[0, alpha)`.
//!
//! All decisions are made in exact rational arithmetic: Loewner matrices are
//! built from Taylor coefficients, their minors are polynomials in `t`, and
//! signs on intervals come from Sturm sequences. Floating point appears only
//! in the Monte Carlo sampler and in the numeric half of the eigenvalue
//! bound check.
//!
//! ```
//! use monogap::{classify, standard_gap_poly};
//!
//! let g2 = standard_gap_poly(2);
//! let verdict = classify(&g2, 3).unwrap();
//! assert_eq!(verdict.gap.unwrap().n, 2);
//! ```

pub mod cli;
pub mod error;
pub mod gaps;
pub mod hadamard;
pub mod loewner;
pub mod matrix;
pub mod mclass;
pub mod moments;
pub mod ratpoly;
pub mod realroots;
pub mod sampler;
pub mod serde_rat;

pub use error::{Error, Result};
pub use gaps::{classify, classify_on_interval, status_at, Gap, GapVerdict, Status};
pub use loewner::{build_loewner, certify_pn, falsify_pn_near_zero, is_psd_exact, LoewnerMatrix, PnCertificate, PnFalsification};
pub use matrix::RatMatrix;
pub use mclass::{mclass_falsify, MClassCertificate, MClassOutcome};
pub use moments::{construct_atomic_measure, hankel_rank, moment_flags, AtomicMeasure, HankelSeq, MomentReport};
pub use ratpoly::{parse_rat, standard_gap_poly, Rat, RatPoly};
pub use realroots::{real_roots, sign_on_interval, Interval, RootEnclosure, SignReport, SignVerdict};
pub use sampler::{falsify_monotone, FalsificationReport};
