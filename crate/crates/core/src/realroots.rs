//! Certified real-root counting, isolation and sign determination.
//!
//! Everything is exact: Sturm chains are built on the squarefree part of the
//! input, so counts are counts of distinct roots. Multiplicities come from a
//! separate squarefree decomposition.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ratpoly::{int, rat, sign, Rat, RatPoly};

/// Default enclosure width, `2^-40`.
pub fn default_tolerance() -> Rat {
    Rat::new(1.into(), num_bigint::BigInt::from(1u64 << 40))
}

/// A rational interval with explicit endpoint membership.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    #[serde(with = "crate::serde_rat")]
    pub lo: Rat,
    #[serde(with = "crate::serde_rat")]
    pub hi: Rat,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Interval {
    pub fn new(lo: Rat, hi: Rat, lo_closed: bool, hi_closed: bool) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidArgument(format!("empty interval: {lo} > {hi}")));
        }
        if lo == hi && !(lo_closed && hi_closed) {
            return Err(Error::InvalidArgument("degenerate interval must be closed".into()));
        }
        Ok(Interval { lo, hi, lo_closed, hi_closed })
    }

    /// `[lo, hi]`; panics when `lo > hi`.
    pub fn closed(lo: Rat, hi: Rat) -> Self {
        Self::new(lo, hi, true, true).expect("valid interval")
    }

    /// `(lo, hi)`; panics when `lo >= hi`.
    pub fn open(lo: Rat, hi: Rat) -> Self {
        Self::new(lo, hi, false, false).expect("valid interval")
    }

    /// `[lo, hi)`.
    pub fn closed_open(lo: Rat, hi: Rat) -> Self {
        Self::new(lo, hi, true, false).expect("valid interval")
    }

    /// `(lo, hi]`.
    pub fn open_closed(lo: Rat, hi: Rat) -> Self {
        Self::new(lo, hi, false, true).expect("valid interval")
    }

    pub fn contains(&self, x: &Rat) -> bool {
        let above = if self.lo_closed { *x >= self.lo } else { *x > self.lo };
        let below = if self.hi_closed { *x <= self.hi } else { *x < self.hi };
        above && below
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / int(2)
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}{}, {}{}",
            if self.lo_closed { '[' } else { '(' },
            self.lo,
            self.hi,
            if self.hi_closed { ']' } else { ')' }
        )
    }
}

/// One distinct real root, either known exactly or bracketed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootEnclosure {
    /// Contains exactly one distinct root of the polynomial.
    pub bracket: Interval,
    #[serde(with = "crate::serde_rat::option")]
    pub exact: Option<Rat>,
    pub multiplicity_hint: usize,
}

impl RootEnclosure {
    /// Exact value, or the lower bracket end (never above the root).
    pub fn lower(&self) -> &Rat {
        self.exact.as_ref().unwrap_or(&self.bracket.lo)
    }

    pub fn upper(&self) -> &Rat {
        self.exact.as_ref().unwrap_or(&self.bracket.hi)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SignVerdict {
    StrictlyPositive,
    Nonnegative,
    StrictlyNegative,
    Nonpositive,
    Mixed,
}

/// Sign of a polynomial over an interval.
///
/// `witness`, when present, is a point of the interval where the polynomial
/// is strictly negative (for `Mixed`, `StrictlyNegative`, `Nonpositive`) or
/// strictly positive (for `StrictlyPositive`, `Nonnegative`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignReport {
    pub verdict: SignVerdict,
    #[serde(with = "crate::serde_rat::option")]
    pub witness: Option<Rat>,
}

impl SignReport {
    pub fn is_strictly_positive(&self) -> bool {
        self.verdict == SignVerdict::StrictlyPositive
    }

    pub fn is_nonnegative(&self) -> bool {
        matches!(self.verdict, SignVerdict::StrictlyPositive | SignVerdict::Nonnegative)
    }
}

/// Sturm sequence of `f` itself: `f, f', -rem(f, f'), ...`.
pub fn sturm_chain(f: &RatPoly) -> Result<Vec<RatPoly>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut chain = vec![f.sign_normalized()];
    let mut next = f.derivative().sign_normalized();
    while !next.is_zero() {
        let prev = chain.last().expect("nonempty");
        let (_, r) = prev.div_rem(&next)?;
        chain.push(next);
        next = (-r).sign_normalized();
    }
    Ok(chain)
}

/// Sign changes of the chain at `x`, zeros skipped.
pub fn sign_variations(chain: &[RatPoly], x: &Rat) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for p in chain {
        let s = p.sign_at(x);
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Squarefree part with its Sturm chain, reused across many queries.
#[derive(Clone, Debug)]
pub struct SturmCounter {
    squarefree: RatPoly,
    chain: Vec<RatPoly>,
}

impl SturmCounter {
    pub fn new(f: &RatPoly) -> Result<Self> {
        let squarefree = f.squarefree_part()?;
        let chain = sturm_chain(&squarefree)?;
        Ok(SturmCounter { squarefree, chain })
    }

    pub fn squarefree(&self) -> &RatPoly {
        &self.squarefree
    }

    pub fn is_root(&self, x: &Rat) -> bool {
        self.squarefree.eval(x).is_zero()
    }

    /// Distinct roots in the open interval `(a, b)`, `a < b`.
    pub fn count_open(&self, a: &Rat, b: &Rat) -> usize {
        if a >= b {
            return 0;
        }
        // For a squarefree chain V(a) - V(b) counts roots in (a, b].
        let half_open = sign_variations(&self.chain, a) - sign_variations(&self.chain, b);
        half_open - usize::from(self.is_root(b))
    }

    pub fn count(&self, interval: &Interval) -> usize {
        if interval.is_degenerate() {
            return usize::from(self.is_root(&interval.lo));
        }
        let mut n = self.count_open(&interval.lo, &interval.hi);
        if interval.lo_closed && self.is_root(&interval.lo) {
            n += 1;
        }
        if interval.hi_closed && self.is_root(&interval.hi) {
            n += 1;
        }
        n
    }

    /// Isolates every root in the open interval `(a, b)` into open brackets
    /// `(l, h)` with `a < l < root < h < b`, non-root endpoints and exactly
    /// one root each; returned in increasing order. Roots hit exactly by a
    /// bisection point are recorded in `exact` as well.
    pub fn isolate_open(&self, a: &Rat, b: &Rat) -> Vec<RootEnclosure> {
        let mut out = Vec::new();
        let mut stack = vec![(a.clone(), b.clone())];
        while let Some((lo, hi)) = stack.pop() {
            let n = self.count_open(&lo, &hi);
            if n == 0 {
                continue;
            }
            if n == 1 && lo != *a && hi != *b && !self.is_root(&lo) && !self.is_root(&hi) {
                out.push(RootEnclosure {
                    bracket: Interval::open(lo, hi),
                    exact: None,
                    multiplicity_hint: 1,
                });
                continue;
            }
            let mid = (&lo + &hi) / int(2);
            if self.is_root(&mid) {
                out.push(self.bracket_exact_root(mid.clone(), a, b));
            }
            // Processed in increasing order: push the upper half first.
            stack.push((mid.clone(), hi));
            stack.push((lo, mid));
        }
        out.sort_by(|x, y| x.bracket.lo.cmp(&y.bracket.lo));
        out
    }

    fn bracket_exact_root(&self, r: Rat, a: &Rat, b: &Rat) -> RootEnclosure {
        let mut delta = (&r - a).min(b - &r) / int(2);
        loop {
            let l = &r - &delta;
            let h = &r + &delta;
            if !self.is_root(&l) && !self.is_root(&h) && self.count_open(&l, &h) == 1 {
                return RootEnclosure {
                    bracket: Interval::open(l, h),
                    exact: Some(r),
                    multiplicity_hint: 1,
                };
            }
            delta /= int(2);
        }
    }

    /// Shrinks an open isolating bracket by bisection until its width is at
    /// most `tol`, detecting an exact hit on the way.
    pub fn refine(&self, enc: &mut RootEnclosure, tol: &Rat) {
        if enc.exact.is_some() {
            return;
        }
        // Counting bisection until both endpoints are non-roots; from then on
        // the squarefree part changes sign across the bracket.
        while self.is_root(&enc.bracket.lo) || self.is_root(&enc.bracket.hi) {
            let mid = enc.bracket.midpoint();
            if self.is_root(&mid) {
                enc.exact = Some(mid);
                return;
            }
            if self.count_open(&enc.bracket.lo, &mid) == 1 {
                enc.bracket.hi = mid;
            } else {
                enc.bracket.lo = mid;
            }
        }
        let lo_sign = self.squarefree.sign_at(&enc.bracket.lo);
        while enc.bracket.width() > *tol {
            let mid = enc.bracket.midpoint();
            let s = self.squarefree.sign_at(&mid);
            if s == 0 {
                enc.exact = Some(mid);
                return;
            }
            if s == lo_sign {
                enc.bracket.lo = mid;
            } else {
                enc.bracket.hi = mid;
            }
        }
    }

    /// Tests whether the bracketed root is rational. A rational root of the
    /// primitive integer polynomial `sum a_i t^i` has the form `k / a_n` for
    /// an integer `k`, so after narrowing the bracket below `1 / |a_n|` at
    /// most one candidate remains.
    pub fn detect_rational(&self, enc: &mut RootEnclosure) {
        if enc.exact.is_some() {
            return;
        }
        let ints = self.squarefree.primitive_integer_coeffs();
        let lead = Rat::from_integer(ints.last().expect("nonzero").abs());
        self.refine(enc, &lead.recip());
        if enc.exact.is_some() {
            return;
        }
        let lo_k = (&enc.bracket.lo * &lead).ceil();
        let hi_k = (&enc.bracket.hi * &lead).floor();
        let mut k = lo_k;
        while k <= hi_k {
            let cand = &k / &lead;
            if enc.bracket.contains(&cand) && self.is_root(&cand) {
                enc.exact = Some(cand);
                return;
            }
            k += Rat::one();
        }
    }
}

/// Distinct real roots of `f` in `interval`.
pub fn count_real_roots(f: &RatPoly, interval: &Interval) -> Result<usize> {
    Ok(SturmCounter::new(f)?.count(interval))
}

/// Multiplicity of the root enclosed by `enc` as a root of `f`.
fn multiplicity_of(f: &RatPoly, enc: &RootEnclosure) -> Result<usize> {
    for (i, part) in f.squarefree_decomposition()?.iter().enumerate() {
        if part.degree().unwrap_or(0) == 0 {
            continue;
        }
        let hit = match &enc.exact {
            Some(r) => part.eval(r).is_zero(),
            None => SturmCounter::new(part)?.count(&enc.bracket) > 0,
        };
        if hit {
            return Ok(i + 1);
        }
    }
    Err(Error::Inconsistent("enclosed root not found in squarefree decomposition".into()))
}

/// Least root of `f` in `(0, inf)`, bracketed to width at most `tol`, with
/// rational roots returned exactly.
pub fn smallest_positive_root(f: &RatPoly, tol: &Rat) -> Result<Option<RootEnclosure>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let counter = SturmCounter::new(f)?;
    let bound = counter.squarefree().root_bound()?;
    let zero = Rat::zero();
    if counter.count_open(&zero, &bound) == 0 {
        return Ok(None);
    }
    let (mut lo, mut hi) = (zero, bound);
    let mut enc = loop {
        if counter.count_open(&lo, &hi) == 1 {
            break RootEnclosure { bracket: Interval::open(lo, hi), exact: None, multiplicity_hint: 1 };
        }
        let mid = (&lo + &hi) / int(2);
        if counter.is_root(&mid) && counter.count_open(&lo, &mid) == 0 {
            let b = &mid * int(2);
            break counter.bracket_exact_root(mid, &lo, &b);
        }
        if counter.count_open(&lo, &mid) >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    };
    counter.refine(&mut enc, tol);
    counter.detect_rational(&mut enc);
    counter.refine(&mut enc, tol);
    enc.multiplicity_hint = multiplicity_of(f, &enc)?;
    Ok(Some(enc))
}

/// All distinct real roots of `f`, isolated and refined to width `tol`.
pub fn real_roots(f: &RatPoly, tol: &Rat) -> Result<Vec<RootEnclosure>> {
    let counter = SturmCounter::new(f)?;
    let bound = counter.squarefree().root_bound()?;
    let mut roots = counter.isolate_open(&-&bound, &bound);
    for enc in &mut roots {
        counter.refine(enc, tol);
        counter.detect_rational(enc);
        enc.multiplicity_hint = multiplicity_of(f, enc)?;
    }
    Ok(roots)
}

/// Exact sign determination of `f` over `interval`.
pub fn sign_on_interval(f: &RatPoly, interval: &Interval) -> Result<SignReport> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if interval.is_degenerate() {
        let s = f.sign_at(&interval.lo);
        let verdict = match s {
            1 => SignVerdict::StrictlyPositive,
            -1 => SignVerdict::StrictlyNegative,
            _ => SignVerdict::Nonnegative,
        };
        return Ok(SignReport { verdict, witness: (s != 0).then(|| interval.lo.clone()) });
    }
    let counter = SturmCounter::new(f)?;
    let roots = counter.isolate_open(&interval.lo, &interval.hi);
    // Each piece between consecutive roots contains a sample: the first
    // bracket's lower end, then every bracket's upper end.
    let samples: Vec<Rat> = match roots.first() {
        None => vec![interval.midpoint()],
        Some(first) => std::iter::once(first.bracket.lo.clone())
            .chain(roots.iter().map(|r| r.bracket.hi.clone()))
            .collect(),
    };
    let signs: Vec<i8> = samples.iter().map(|x| f.sign_at(x)).collect();
    debug_assert!(signs.iter().all(|&s| s != 0));
    let touches_zero = !roots.is_empty()
        || (interval.lo_closed && counter.is_root(&interval.lo))
        || (interval.hi_closed && counter.is_root(&interval.hi));
    let pos = signs.iter().position(|&s| s > 0);
    let neg = signs.iter().position(|&s| s < 0);
    let report = match (pos, neg) {
        (Some(i), None) => SignReport {
            verdict: if touches_zero { SignVerdict::Nonnegative } else { SignVerdict::StrictlyPositive },
            witness: Some(samples[i].clone()),
        },
        (None, Some(i)) => SignReport {
            verdict: if touches_zero { SignVerdict::Nonpositive } else { SignVerdict::StrictlyNegative },
            witness: Some(samples[i].clone()),
        },
        (Some(_), Some(i)) => SignReport { verdict: SignVerdict::Mixed, witness: Some(samples[i].clone()) },
        (None, None) => unreachable!("samples avoid roots"),
    };
    Ok(report)
}

/// Sign of `f` on `(0, inf)`, decided on `(0, B)` with `B` past every root.
pub fn sign_on_positive_axis(f: &RatPoly) -> Result<SignReport> {
    let bound = f.root_bound()?;
    sign_on_interval(f, &Interval::open(Rat::zero(), bound + rat(1, 1)))
}

/// Sign of a rational, as a verdict.
pub fn sign_of(x: &Rat) -> SignVerdict {
    match sign(x) {
        1 => SignVerdict::StrictlyPositive,
        -1 => SignVerdict::StrictlyNegative,
        _ => SignVerdict::Nonnegative,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> RatPoly {
        s.parse().unwrap()
    }

    #[test]
    fn sturm_examples() {
        let f = p("-1,0,1");
        let chain = sturm_chain(&f).unwrap();
        assert_eq!(chain.len(), 3);
        assert_eq!(sign_variations(&chain, &int(-2)) - sign_variations(&chain, &int(2)), 2);
        assert_eq!(count_real_roots(&p("1,0,1"), &Interval::closed(int(-100), int(100))).unwrap(), 0);
        assert_eq!(count_real_roots(&p("0,4,-6"), &Interval::open(int(-1), int(1))).unwrap(), 2);
        assert!(sturm_chain(&RatPoly::zero()).is_err());
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_real_roots(&p("0,4,-6"), &Interval::open(int(0), int(1))).unwrap(), 1);
        assert_eq!(
            count_real_roots(&p("1/3,0,-2/3"), &Interval::closed(int(0), rat(1, 2))).unwrap(),
            0
        );
        assert_eq!(count_real_roots(&p("0,1"), &Interval::closed(int(0), int(1))).unwrap(), 1);
        assert_eq!(count_real_roots(&p("0,1"), &Interval::open_closed(int(0), int(1))).unwrap(), 0);
        // multiple roots counted once
        let f = p("-1,1").pow(3) * p("2,1");
        assert_eq!(count_real_roots(&f, &Interval::closed(int(-5), int(5))).unwrap(), 2);
        assert!(count_real_roots(&RatPoly::zero(), &Interval::closed(int(0), int(1))).is_err());
    }

    #[test]
    fn smallest_root_examples() {
        let tol = default_tolerance();
        let r = smallest_positive_root(&p("0,4,-6"), &tol).unwrap().unwrap();
        assert_eq!(r.exact, Some(rat(2, 3)));
        let tol6 = rat(1, 1_000_000);
        let r = smallest_positive_root(&p("1/3,0,-2/3"), &tol6).unwrap().unwrap();
        assert!(r.exact.is_none());
        assert!(r.bracket.width() <= tol6);
        let half = rat(1, 2);
        assert!(&r.bracket.lo * &r.bracket.lo < half && &r.bracket.hi * &r.bracket.hi > half);
        assert!(smallest_positive_root(&p("1,0,1"), &tol).unwrap().is_none());
        // root at zero is not positive
        assert!(smallest_positive_root(&p("0,0,1"), &tol).unwrap().is_none());
    }

    #[test]
    fn multiplicity_reported() {
        let f = p("-3,1").pow(2) * p("1,0,1");
        let r = smallest_positive_root(&f, &default_tolerance()).unwrap().unwrap();
        assert_eq!(r.exact, Some(int(3)));
        assert_eq!(r.multiplicity_hint, 2);
    }

    #[test]
    fn sign_examples() {
        let d3 = p("4/135,0,-11/15,0,0,0,-7/5");
        let rep = sign_on_interval(&d3, &Interval::closed(int(0), rat(1, 5))).unwrap();
        assert_eq!(rep.verdict, SignVerdict::StrictlyPositive);
        let rep = sign_on_interval(&p("0,4,-6"), &Interval::open(int(0), rat(2, 3))).unwrap();
        assert_eq!(rep.verdict, SignVerdict::StrictlyPositive);
        let rep = sign_on_interval(&p("0,4,-6"), &Interval::closed(int(0), rat(2, 3))).unwrap();
        assert_eq!(rep.verdict, SignVerdict::Nonnegative);
        let neg = p("0,0,-1");
        let rep = sign_on_interval(&neg, &Interval::open_closed(int(0), int(1))).unwrap();
        assert_eq!(rep.verdict, SignVerdict::StrictlyNegative);
        let rep = sign_on_interval(&neg, &Interval::closed(int(0), int(1))).unwrap();
        assert_eq!(rep.verdict, SignVerdict::Nonpositive);
        let rep = sign_on_interval(&p("0,4,-6"), &Interval::closed(int(0), int(1))).unwrap();
        assert_eq!(rep.verdict, SignVerdict::Mixed);
        let w = rep.witness.unwrap();
        assert!(p("0,4,-6").eval(&w) < Rat::zero());
        // double root inside: no sign change
        let sq = p("-1/2,1").pow(2);
        let rep = sign_on_interval(&sq, &Interval::open(int(0), int(1))).unwrap();
        assert_eq!(rep.verdict, SignVerdict::Nonnegative);
    }

    #[test]
    fn all_real_roots() {
        let f = p("-1,0,1") * p("-2,0,1") * p("0,1");
        let roots = real_roots(&f, &default_tolerance()).unwrap();
        assert_eq!(roots.len(), 5);
        assert_eq!(roots[2].exact, Some(int(0)));
        assert_eq!(roots[1].exact, Some(int(-1)));
        assert!(roots[0].exact.is_none());
        assert!(roots.windows(2).all(|w| w[0].upper() < w[1].lower()));
    }

    fn small_rat() -> impl Strategy<Value = Rat> {
        (-8i64..=8, 1i64..=3).prop_map(|(n, d)| rat(n, d))
    }

    /// Polynomial built from known factors: rational linear factors (with
    /// repetition) times a positive-definite quadratic. Returns the
    /// polynomial and its distinct real roots.
    fn factored_poly() -> impl Strategy<Value = (RatPoly, Vec<Rat>)> {
        (prop::collection::vec((small_rat(), 1usize..=2), 0..5), prop::bool::ANY, 1i64..=5).prop_map(
            |(factors, with_quad, k)| {
                let mut f = RatPoly::constant(int(k));
                let mut roots: Vec<Rat> = Vec::new();
                for (r, m) in factors {
                    f = f * p("0,1").compose_affine(&int(1), &-&r).pow(m as u32);
                    if !roots.contains(&r) {
                        roots.push(r);
                    }
                }
                if with_quad {
                    f = f * p("3,1,1");
                }
                roots.sort();
                (f, roots)
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn sturm_count_matches_known_roots((f, roots) in factored_poly(), a in small_rat(), w in 1i64..=8) {
            let b = &a + int(w);
            let iv = Interval::closed(a.clone(), b.clone());
            let expect = roots.iter().filter(|r| iv.contains(r)).count();
            prop_assert_eq!(count_real_roots(&f, &iv).unwrap(), expect);
            let open = Interval::open(a, b);
            let expect_open = roots.iter().filter(|r| open.contains(r)).count();
            prop_assert_eq!(count_real_roots(&f, &open).unwrap(), expect_open);
        }

        #[test]
        fn grid_sign_changes_imply_roots(cs in prop::collection::vec(-6i64..=6, 2..=9)) {
            let f = RatPoly::from_ints(&cs);
            prop_assume!(f.degree().unwrap_or(0) >= 1);
            let counter = SturmCounter::new(&f).unwrap();
            let grid: Vec<Rat> = (-40..=40).map(|k| rat(k, 8)).collect();
            for w in grid.windows(2) {
                let (s0, s1) = (f.sign_at(&w[0]), f.sign_at(&w[1]));
                if s0 * s1 < 0 {
                    prop_assert!(counter.count_open(&w[0], &w[1]) >= 1);
                }
            }
        }

        #[test]
        fn smallest_root_bracket_straddles((f, roots) in factored_poly()) {
            let tol = rat(1, 1 << 20);
            let got = smallest_positive_root(&f, &tol).unwrap();
            let expect = roots.iter().find(|r| r.is_positive()).cloned();
            match (got, expect) {
                (None, None) => {}
                (Some(enc), Some(r)) => prop_assert_eq!(enc.exact, Some(r)),
                (g, e) => prop_assert!(false, "mismatch {:?} vs {:?}", g, e),
            }
        }

        #[test]
        fn positive_verdict_holds_at_random_points(cs in prop::collection::vec(-6i64..=6, 1..=7), a in small_rat(), w in 1i64..=4) {
            let f = RatPoly::from_ints(&cs);
            prop_assume!(!f.is_zero());
            let b = &a + int(w);
            let rep = sign_on_interval(&f, &Interval::closed(a.clone(), b.clone())).unwrap();
            for k in 0..=100 {
                let x = &a + (&b - &a) * rat(k, 100);
                let v = f.eval(&x);
                match rep.verdict {
                    SignVerdict::StrictlyPositive => prop_assert!(v.is_positive()),
                    SignVerdict::Nonnegative => prop_assert!(!v.is_negative()),
                    SignVerdict::StrictlyNegative => prop_assert!(v.is_negative()),
                    SignVerdict::Nonpositive => prop_assert!(!v.is_positive()),
                    SignVerdict::Mixed => {}
                }
            }
            if let (SignVerdict::Mixed, Some(w)) = (rep.verdict, &rep.witness) {
                prop_assert!(f.eval(w).is_negative());
            }
        }
    }
}
