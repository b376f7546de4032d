//! Hankel matrices at `t = 0`, Hankel rank, and atomic measures solving
//! truncated moment problems.
//!
//! The moments read from `f(t) = c + b_0 t + b_1 t^2 + ...` are `b_k`, and
//! `M_n(f;0)` is the Hankel matrix `(b_{i+j})`. A positive definite Hankel
//! matrix is represented by an `n`-atom measure built from the monic
//! orthogonal polynomial (Gauss quadrature); irrational atoms carry exact
//! rational enclosures and so do their weights.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::loewner::is_psd_exact;
use crate::matrix::RatMatrix;
use crate::ratpoly::{int, rat, to_f64, Rat, RatPoly};
use crate::realroots::{real_roots, Interval, RootEnclosure, SturmCounter};

/// Moment sequence `gamma_0, ..., gamma_{2k}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "HankelSeqRepr", into = "HankelSeqRepr")]
pub struct HankelSeq {
    gamma: Vec<Rat>,
}

#[derive(Serialize, Deserialize)]
struct HankelSeqRepr {
    #[serde(with = "crate::serde_rat::vec")]
    gamma: Vec<Rat>,
}

impl TryFrom<HankelSeqRepr> for HankelSeq {
    type Error = Error;
    fn try_from(r: HankelSeqRepr) -> Result<Self> {
        HankelSeq::new(r.gamma)
    }
}

impl From<HankelSeq> for HankelSeqRepr {
    fn from(h: HankelSeq) -> Self {
        HankelSeqRepr { gamma: h.gamma }
    }
}

impl HankelSeq {
    pub fn new(gamma: Vec<Rat>) -> Result<Self> {
        if gamma.len().is_multiple_of(2) {
            return Err(Error::InvalidArgument(format!(
                "a Hankel sequence needs odd length, got {}",
                gamma.len()
            )));
        }
        Ok(HankelSeq { gamma })
    }

    pub fn gamma(&self) -> &[Rat] {
        &self.gamma
    }

    /// The matrix is `(k+1) x (k+1)`.
    pub fn k(&self) -> usize {
        (self.gamma.len() - 1) / 2
    }

    pub fn matrix(&self) -> RatMatrix {
        hankel_matrix(&self.gamma)
    }
}

/// `(g_{i+j})` for an odd-length sequence.
pub fn hankel_matrix(g: &[Rat]) -> RatMatrix {
    let n = g.len().div_ceil(2);
    RatMatrix::from_fn(n, n, |i, j| g[i + j].clone())
}

/// `b_0, ..., b_{2n-2}` with `b_k` the coefficient of `t^{k+1}`.
pub fn moments_at_zero(f: &RatPoly, n: usize) -> Vec<Rat> {
    (0..2 * n - 1).map(|k| f.coeff(k + 1)).collect()
}

/// `M_n(f;0) = (b_{i+j})`.
pub fn hankel_at_zero(f: &RatPoly, n: usize) -> RatMatrix {
    hankel_matrix(&moments_at_zero(f, n))
}

/// Smallest `i >= 1` such that column `v_i` of the Hankel matrix lies in the
/// span of `v_0, ..., v_{i-1}`; `k + 1` when the columns are independent.
///
/// On PSD input this equals the smallest `l` whose `(l+1) x (l+1)` leading
/// block is singular.
pub fn hankel_rank(g: &HankelSeq) -> usize {
    let h = g.matrix();
    let k = g.k();
    let rows: Vec<usize> = (0..=k).collect();
    let mut prev = h.select(&rows, &[0]).rank();
    for i in 1..=k {
        let cols: Vec<usize> = (0..=i).collect();
        let r = h.select(&rows, &cols).rank();
        if r == prev {
            return i;
        }
        prev = r;
    }
    k + 1
}

pub fn matrix_rank_exact(a: &RatMatrix) -> usize {
    a.rank()
}

/// A support point, exact or isolated by a bracket.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Atom {
    Exact(#[serde(with = "crate::serde_rat")] Rat),
    Enclosed(RootEnclosure),
}

impl Atom {
    fn bounds(&self) -> (Rat, Rat) {
        match self {
            Atom::Exact(x) => (x.clone(), x.clone()),
            Atom::Enclosed(e) => (e.bracket.lo.clone(), e.bracket.hi.clone()),
        }
    }

    pub fn exact(&self) -> Option<&Rat> {
        match self {
            Atom::Exact(x) => Some(x),
            Atom::Enclosed(_) => None,
        }
    }

    pub fn approx(&self) -> f64 {
        let (lo, hi) = self.bounds();
        to_f64(&((lo + hi) / int(2)))
    }
}

/// A positive weight, exact or enclosed in a closed interval.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Weight {
    Exact(#[serde(with = "crate::serde_rat")] Rat),
    Enclosed(Interval),
}

impl Weight {
    fn bounds(&self) -> (Rat, Rat) {
        match self {
            Weight::Exact(x) => (x.clone(), x.clone()),
            Weight::Enclosed(iv) => (iv.lo.clone(), iv.hi.clone()),
        }
    }

    pub fn exact(&self) -> Option<&Rat> {
        match self {
            Weight::Exact(x) => Some(x),
            Weight::Enclosed(_) => None,
        }
    }

    pub fn is_certainly_positive(&self) -> bool {
        self.bounds().0.is_positive()
    }

    pub fn approx(&self) -> f64 {
        let (lo, hi) = self.bounds();
        to_f64(&((lo + hi) / int(2)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomicMeasure {
    pub atoms: Vec<Atom>,
    pub weights: Vec<Weight>,
}

impl AtomicMeasure {
    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn is_exact(&self) -> bool {
        self.atoms.iter().all(|a| a.exact().is_some()) && self.weights.iter().all(|w| w.exact().is_some())
    }

    /// Closed interval containing `sum_i w_i x_i^k`.
    pub fn moment_enclosure(&self, k: usize) -> (Rat, Rat) {
        let mut acc = (Rat::zero(), Rat::zero());
        for (a, w) in self.atoms.iter().zip(&self.weights) {
            let term = iv_mul(&w.bounds(), &iv_pow(&a.bounds(), k));
            acc = (acc.0 + term.0, acc.1 + term.1);
        }
        acc
    }

    /// Whether every `b_k` lies in its moment enclosure (equality when exact).
    pub fn reproduces(&self, b: &[Rat]) -> bool {
        b.iter().enumerate().all(|(k, bk)| {
            let (lo, hi) = self.moment_enclosure(k);
            lo <= *bk && *bk <= hi
        })
    }

    /// Largest moment-enclosure width over `k < count`.
    pub fn max_moment_width(&self, count: usize) -> Rat {
        (0..count)
            .map(|k| {
                let (lo, hi) = self.moment_enclosure(k);
                hi - lo
            })
            .max()
            .unwrap_or_else(Rat::zero)
    }
}

type Iv = (Rat, Rat);

fn iv_mul(a: &Iv, b: &Iv) -> Iv {
    let c = [&a.0 * &b.0, &a.0 * &b.1, &a.1 * &b.0, &a.1 * &b.1];
    let lo = c.iter().min().expect("nonempty").clone();
    let hi = c.iter().max().expect("nonempty").clone();
    (lo, hi)
}

fn iv_add(a: &Iv, b: &Iv) -> Iv {
    (&a.0 + &b.0, &a.1 + &b.1)
}

fn iv_pow(a: &Iv, k: usize) -> Iv {
    (0..k).fold((Rat::one(), Rat::one()), |acc, _| iv_mul(&acc, a))
}

fn iv_div(a: &Iv, b: &Iv) -> Option<Iv> {
    if !b.0.is_positive() && !b.1.is_negative() {
        return None;
    }
    Some(iv_mul(a, &(b.1.recip(), b.0.recip())))
}

/// Interval Horner evaluation.
fn iv_eval(p: &RatPoly, x: &Iv) -> Iv {
    p.coeffs().iter().rev().fold((Rat::zero(), Rat::zero()), |acc, c| {
        iv_add(&iv_mul(&acc, x), &(c.clone(), c.clone()))
    })
}

/// Widens outward to the grid `grid * Z`, keeping denominators small.
fn round_out(a: &Iv, grid: &Rat) -> Iv {
    ((&a.0 / grid).floor() * grid, (&a.1 / grid).ceil() * grid)
}

/// Target width for moment enclosures of irrational measures.
pub fn moment_tolerance() -> Rat {
    rat(1, 10_000_000_000)
}

/// `n`-atom measure for `b_0..b_{2n-2}` with the free moment `b_{2n-1} := 0`.
pub fn construct_atomic_measure(b: &[Rat]) -> Result<AtomicMeasure> {
    construct_atomic_measure_with_next(b, &Rat::zero())
}

/// As [`construct_atomic_measure`], with an explicit value for `b_{2n-1}`.
pub fn construct_atomic_measure_with_next(b: &[Rat], next: &Rat) -> Result<AtomicMeasure> {
    if b.len().is_multiple_of(2) {
        return Err(Error::InvalidArgument("moment list must have odd length 2n-1".into()));
    }
    let n = b.len().div_ceil(2);
    let h = hankel_matrix(b);
    let minors = h.leading_minors();
    if minors.iter().any(Zero::is_zero) {
        return Err(Error::SingularHankel);
    }
    if minors.iter().any(Signed::is_negative) {
        return Err(Error::NotPositiveDefinite);
    }
    let mut ext = b.to_vec();
    ext.push(next.clone());
    // sum_j c_j b_{i+j} = -b_{i+n} for the monic orthogonal polynomial
    let rhs: Vec<Rat> = (0..n).map(|i| -&ext[i + n]).collect();
    let mut c = h.solve(&rhs)?;
    c.push(Rat::one());
    let p = RatPoly::new(c);
    let q = second_kind(&p, b);
    let dp = p.derivative();

    let counter = SturmCounter::new(&p)?;
    let mut tol = rat(1, 1 << 48);
    let roots = real_roots(&p, &tol)?;
    if roots.len() != n {
        return Err(Error::Inconsistent(format!("orthogonal polynomial has {} real roots, expected {n}", roots.len())));
    }
    let mut roots = roots;
    let target = moment_tolerance();
    loop {
        let measure = quadrature(&roots, &q, &dp, &(&tol * &tol));
        if let Some(m) = measure {
            if m.max_moment_width(2 * n - 1) < target {
                if !m.weights.iter().all(Weight::is_certainly_positive) {
                    return Err(Error::Inconsistent("non-positive quadrature weight".into()));
                }
                return Ok(m);
            }
        }
        tol /= int(1 << 16);
        for enc in &mut roots {
            counter.refine(enc, &tol);
        }
    }
}

/// `Q(y) = sum_k p_k sum_{j<k} b_j y^{k-1-j}`, so that the weight at a root
/// `x` of `p` is `Q(x) / p'(x)`.
fn second_kind(p: &RatPoly, b: &[Rat]) -> RatPoly {
    let deg = p.degree().unwrap_or(0);
    let mut q = vec![Rat::zero(); deg.max(1)];
    for k in 1..=deg {
        for j in 0..k {
            q[k - 1 - j] += p.coeff(k) * &b[j];
        }
    }
    RatPoly::new(q)
}

fn quadrature(roots: &[RootEnclosure], q: &RatPoly, dp: &RatPoly, grid: &Rat) -> Option<AtomicMeasure> {
    let mut atoms = Vec::with_capacity(roots.len());
    let mut weights = Vec::with_capacity(roots.len());
    for enc in roots {
        match &enc.exact {
            Some(x) => {
                atoms.push(Atom::Exact(x.clone()));
                weights.push(Weight::Exact(q.eval(x) / dp.eval(x)));
            }
            None => {
                let x = (enc.bracket.lo.clone(), enc.bracket.hi.clone());
                let w = round_out(&iv_div(&iv_eval(q, &x), &iv_eval(dp, &x))?, grid);
                atoms.push(Atom::Enclosed(enc.clone()));
                weights.push(Weight::Enclosed(Interval::closed(w.0, w.1)));
            }
        }
    }
    Some(AtomicMeasure { atoms, weights })
}

/// Hankel matrix `(sum_i w_i x_i^{j+k})_{j,k<n}` of an exact measure.
pub fn hankel_from_measure(atoms: &[Rat], weights: &[Rat], n: usize) -> RatMatrix {
    let moment = |k: usize| -> Rat {
        atoms.iter().zip(weights).map(|(x, w)| w * num_traits::pow(x.clone(), k)).sum()
    };
    let g: Vec<Rat> = (0..2 * n - 1).map(moment).collect();
    hankel_matrix(&g)
}

/// Coefficients of `prod_i (y - x_i)`, zero-padded to length `n`: a kernel
/// vector of the Hankel matrix of any measure on fewer than `n` atoms.
pub fn annihilating_vector(atoms: &[Rat], n: usize) -> Vec<Rat> {
    let p = atoms
        .iter()
        .fold(RatPoly::one(), |acc, x| acc * RatPoly::new(vec![-x, Rat::one()]));
    (0..n).map(|j| p.coeff(j)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MomentReport {
    pub n: usize,
    #[serde(with = "crate::serde_rat::vec")]
    pub b: Vec<Rat>,
    pub pd: bool,
    pub psd: bool,
    pub hankel_rank: usize,
    pub matrix_rank: usize,
    /// Hankel rank below matrix rank: no PSD Hankel extension exists, so
    /// `f` is not in `P_{n+1}([0, alpha))` for any `alpha > 0`.
    pub extension_obstruction: bool,
    /// The order excluded by the obstruction.
    pub excluded_order: Option<usize>,
    /// `deg f < 2n - 1`: moments were zero-padded.
    pub degree_deficient: bool,
    pub measure: Option<AtomicMeasure>,
    /// Number of leading moments `b_0, b_1, ...` the measure reproduces.
    pub matched_moments: usize,
}

pub fn moment_flags(f: &RatPoly, n: usize) -> Result<MomentReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("order n must be at least 1".into()));
    }
    let b = moments_at_zero(f, n);
    let h = hankel_matrix(&b);
    let psd = is_psd_exact(&h)?.psd;
    let minors = h.leading_minors();
    let pd = minors.iter().all(Signed::is_positive);
    let hr = hankel_rank(&HankelSeq::new(b.clone())?);
    let mr = h.rank();
    let obstruction = hr < mr;
    let (measure, matched) = if pd {
        (Some(construct_atomic_measure(&b)?), 2 * n - 1)
    } else if psd && hr >= 1 && hr < n && minors[..hr].iter().all(Signed::is_positive) {
        // singular PSD: an r-atom measure on b_0..b_{2r-1}
        let r = hr;
        let m = construct_atomic_measure_with_next(&b[..2 * r - 1], &b[2 * r - 1])?;
        (Some(m), 2 * r)
    } else {
        (None, 0)
    };
    Ok(MomentReport {
        n,
        b,
        pd,
        psd,
        hankel_rank: hr,
        matrix_rank: mr,
        extension_obstruction: obstruction,
        excluded_order: obstruction.then_some(n + 1),
        degree_deficient: f.degree().unwrap_or(0) < 2 * n - 1,
        measure,
        matched_moments: matched,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loewner::quintic_family_poly;
    use crate::ratpoly::standard_gap_poly;
    use proptest::prelude::*;

    fn rats(v: &[(i64, i64)]) -> Vec<Rat> {
        v.iter().map(|&(a, b)| rat(a, b)).collect()
    }

    fn seq(v: &[(i64, i64)]) -> HankelSeq {
        HankelSeq::new(rats(v)).unwrap()
    }

    #[test]
    fn hankel_at_zero_examples() {
        let h = hankel_at_zero(&standard_gap_poly(2), 2);
        assert_eq!(h, RatMatrix::from_rows(vec![vec![int(1), int(0)], vec![int(0), rat(1, 3)]]).unwrap());
        let p: RatPoly = "0,1/2,1,1/2,1,1/2".parse().unwrap();
        assert_eq!(hankel_at_zero(&p, 3), hankel_matrix(&rats(&[(1, 2), (1, 1), (1, 2), (1, 1), (1, 2)])));
        let h = hankel_at_zero(&RatPoly::x(), 3);
        assert_eq!(*h.get(0, 0), int(1));
        assert_eq!(h.rank(), 1);
    }

    #[test]
    fn hankel_rank_examples() {
        assert_eq!(hankel_rank(&seq(&[(1, 2), (1, 1), (1, 2), (1, 1), (1, 2)])), 2);
        assert_eq!(hankel_rank(&seq(&[(1, 1), (2, 1), (4, 1), (8, 1), (16, 1)])), 1);
        assert_eq!(hankel_rank(&seq(&[(1, 1), (0, 1), (1, 3), (0, 1), (1, 5)])), 3);
        assert!(HankelSeq::new(rats(&[(1, 1), (2, 1)])).is_err());
    }

    #[test]
    fn matrix_rank_examples() {
        assert_eq!(matrix_rank_exact(&hankel_matrix(&rats(&[(1, 2), (1, 1), (1, 2), (1, 1), (1, 2)]))), 2);
        assert_eq!(matrix_rank_exact(&RatMatrix::identity(3)), 3);
        assert_eq!(matrix_rank_exact(&RatMatrix::zeros(3, 3)), 0);
    }

    #[test]
    fn measure_two_symmetric_atoms() {
        let m = construct_atomic_measure(&rats(&[(2, 1), (0, 1), (2, 1)])).unwrap();
        assert_eq!(m.atoms, vec![Atom::Exact(int(-1)), Atom::Exact(int(1))]);
        assert_eq!(m.weights, vec![Weight::Exact(int(1)), Weight::Exact(int(1))]);
        assert!(m.is_exact());
    }

    #[test]
    fn measure_irrational_atoms() {
        let b = rats(&[(1, 1), (0, 1), (1, 3)]);
        let m = construct_atomic_measure(&b).unwrap();
        assert_eq!(m.len(), 2);
        assert!(m.atoms.iter().all(|a| a.exact().is_none()));
        assert!((m.atoms[1].approx() - 1.0 / 3f64.sqrt()).abs() < 1e-9);
        for w in &m.weights {
            let (lo, hi) = w.bounds();
            assert!(lo <= rat(1, 2) && rat(1, 2) <= hi);
        }
        assert!(m.reproduces(&b));
        assert!(m.max_moment_width(3) < rat(1, 1_000_000_000));
    }

    #[test]
    fn singular_sequence_rejected_then_reduced() {
        let b = rats(&[(1, 1), (1, 1), (1, 1)]);
        assert_eq!(construct_atomic_measure(&b), Err(Error::SingularHankel));
        let m = construct_atomic_measure_with_next(&b[..1], &b[1]).unwrap();
        assert_eq!(m.atoms, vec![Atom::Exact(int(1))]);
        assert_eq!(m.weights, vec![Weight::Exact(int(1))]);
        let r = moment_flags(&"0,1,1,1".parse().unwrap(), 2).unwrap();
        assert!(r.psd && !r.pd);
        assert_eq!(r.hankel_rank, 1);
        assert_eq!(r.measure.unwrap().atoms, vec![Atom::Exact(int(1))]);
    }

    #[test]
    fn moment_flags_examples() {
        let r = moment_flags(&standard_gap_poly(3), 3).unwrap();
        assert!(r.pd && r.psd && !r.extension_obstruction && !r.degree_deficient);
        let m = r.measure.unwrap();
        assert_eq!(m.len(), 3);
        assert!(m.reproduces(&r.b));

        // c = lambda^4 makes every moment a power of lambda: rank 1, no obstruction
        let r = moment_flags(&quintic_family_poly(&int(1), &int(1)), 3).unwrap();
        assert!(r.psd && !r.extension_obstruction);
        assert_eq!((r.matrix_rank, r.hankel_rank), (1, 1));

        let r = moment_flags(&quintic_family_poly(&int(1), &int(2)), 3).unwrap();
        assert!(r.psd && !r.pd);
        assert_eq!((r.matrix_rank, r.hankel_rank), (2, 1));
        assert!(r.extension_obstruction);
        assert_eq!(r.excluded_order, Some(4));

        let r = moment_flags(&"0,1/2,1,1/2,1,1/2".parse().unwrap(), 3).unwrap();
        assert!(!r.pd);
        assert_eq!((r.matrix_rank, r.hankel_rank), (2, 2));
        assert!(!r.extension_obstruction);
        // the matrix has eigenvalues 3/4 +- sqrt(33)/4 and 0
        assert!(!r.psd);

        assert!(moment_flags(&"0,0,1".parse().unwrap(), 2).unwrap().degree_deficient);
    }

    fn pd_moments() -> impl Strategy<Value = Vec<Rat>> {
        // moments of a random exact measure with n distinct atoms
        (1usize..=4)
            .prop_flat_map(|n| {
                (
                    prop::collection::btree_set(-12i64..=12, n),
                    prop::collection::vec(1i64..=9, n),
                    Just(n),
                )
            })
            .prop_map(|(atoms, weights, n)| {
                let atoms: Vec<Rat> = atoms.into_iter().map(|a| rat(a, 4)).collect();
                let weights: Vec<Rat> = weights.into_iter().map(|w| rat(w, 3)).collect();
                let h = hankel_from_measure(&atoms, &weights, n);
                let mut b: Vec<Rat> = (0..n).map(|i| h.get(0, i).clone()).collect();
                b.extend((1..n).map(|i| h.get(i, n - 1).clone()));
                b
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn measure_roundtrip(b in pd_moments()) {
            let n = b.len().div_ceil(2);
            let m = construct_atomic_measure(&b).unwrap();
            prop_assert_eq!(m.len(), n);
            prop_assert!(m.reproduces(&b));
            prop_assert!(m.weights.iter().all(Weight::is_certainly_positive));
            if m.is_exact() {
                prop_assert_eq!(m.max_moment_width(2 * n - 1), Rat::zero());
            } else {
                prop_assert!(m.max_moment_width(2 * n - 1) < rat(1, 1_000_000_000));
            }
        }

        #[test]
        fn fewer_atoms_give_singular_hankel(
            atoms in prop::collection::btree_set(-9i64..=9, 1..4),
            extra in 1usize..3,
        ) {
            let atoms: Vec<Rat> = atoms.into_iter().map(int).collect();
            let weights = vec![int(1); atoms.len()];
            let n = atoms.len() + extra;
            let h = hankel_from_measure(&atoms, &weights, n);
            let c = annihilating_vector(&atoms, n);
            for i in 0..n {
                let row: Rat = (0..n).map(|j| h.get(i, j) * &c[j]).sum();
                prop_assert!(row.is_zero());
            }
            prop_assert!(h.det().unwrap().is_zero());
        }

        #[test]
        fn quadratic_form_is_integral(
            atoms in prop::collection::btree_set(-9i64..=9, 1..4),
            c in prop::collection::vec(-5i64..=5, 3),
        ) {
            let atoms: Vec<Rat> = atoms.into_iter().map(|a| rat(a, 2)).collect();
            let weights: Vec<Rat> = (1..=atoms.len() as i64).map(int).collect();
            let c: Vec<Rat> = c.into_iter().map(int).collect();
            let h = hankel_from_measure(&atoms, &weights, 3);
            let poly = RatPoly::new(c.clone());
            let integral: Rat = atoms.iter().zip(&weights).map(|(x, w)| { let v = poly.eval(x); w * &v * &v }).sum();
            prop_assert_eq!(h.quadratic_form(&c), integral);
        }

        #[test]
        fn hankel_rank_at_most_matrix_rank(b in pd_moments(), drop in 0usize..3) {
            // PSD sequence from a measure with possibly fewer than n atoms
            let n = b.len().div_ceil(2);
            let atoms: Vec<Rat> = (0..n.saturating_sub(drop).max(1)).map(|i| int(i as i64)).collect();
            let weights = vec![int(1); atoms.len()];
            let h = hankel_from_measure(&atoms, &weights, n);
            let mut g: Vec<Rat> = (0..n).map(|i| h.get(0, i).clone()).collect();
            g.extend((1..n).map(|i| h.get(i, n - 1).clone()));
            let s = HankelSeq::new(g).unwrap();
            prop_assert!(hankel_rank(&s) <= s.matrix().rank().max(1));
        }
    }
}
