//! Hadamard products, the rank-one scaling `D = (alpha^{i+j-1})`, and the
//! affine transport of Loewner matrices between intervals.

use nalgebra::SymmetricEigen;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::loewner::{build_loewner, is_psd_exact};
use crate::matrix::RatMatrix;
use crate::ratpoly::{to_f64, Rat, RatPoly};
use crate::realroots::SturmCounter;

pub fn hadamard(a: &RatMatrix, b: &RatMatrix) -> Result<RatMatrix> {
    a.hadamard(b)
}

/// `D = (alpha^{i+j-1})_{i,j=1..n}`: rank one, PSD iff `alpha > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalingMatrix {
    #[serde(with = "crate::serde_rat")]
    pub alpha: Rat,
    pub n: usize,
}

impl ScalingMatrix {
    pub fn new(alpha: Rat, n: usize) -> Result<Self> {
        if alpha.is_zero() {
            return Err(Error::InvalidArgument("scaling alpha must be nonzero".into()));
        }
        Ok(ScalingMatrix { alpha, n })
    }

    pub fn matrix(&self) -> RatMatrix {
        let powers: Vec<Rat> = (0..2 * self.n).map(|k| num_traits::pow(self.alpha.clone(), k)).collect();
        RatMatrix::from_fn(self.n, self.n, |i, j| powers[i + j + 1].clone())
    }
}

pub fn scaling_matrix(alpha: &Rat, n: usize) -> Result<RatMatrix> {
    Ok(ScalingMatrix::new(alpha.clone(), n)?.matrix())
}

/// `rank(A ∘ B) <= rank(A) rank(B)`.
pub fn rank_inequality_check(a: &RatMatrix, b: &RatMatrix) -> Result<bool> {
    if !a.is_square() || a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(Error::ShapeMismatch("rank inequality needs square matrices of one order".into()));
    }
    Ok(a.hadamard(b)?.rank() <= a.rank() * b.rank())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EigBoundsReport {
    /// Approximations of `min a_ii lambda_min(B)` and `max a_ii lambda_max(B)`.
    pub lower: f64,
    pub upper: f64,
    pub eigenvalues: Vec<f64>,
    pub float_ok: bool,
    /// Exact verdict from root isolation (orders up to 4).
    pub exact_ok: Option<bool>,
}

impl EigBoundsReport {
    pub fn holds(&self) -> bool {
        self.exact_ok.unwrap_or(self.float_ok)
    }
}

/// Largest order checked exactly.
pub const EXACT_EIG_ORDER: usize = 4;

pub fn eig_bounds_check(a: &RatMatrix, b: &RatMatrix, tol: f64) -> Result<bool> {
    Ok(eig_bounds_report(a, b, tol)?.holds())
}

/// Every eigenvalue of `A ∘ B` lies in
/// `[min a_ii lambda_min(B), max a_ii lambda_max(B)]` for PSD `A`, `B`.
pub fn eig_bounds_report(a: &RatMatrix, b: &RatMatrix, tol: f64) -> Result<EigBoundsReport> {
    if !is_psd_exact(a)?.psd || !is_psd_exact(b)?.psd {
        return Err(Error::NotPositiveSemidefinite);
    }
    let c = a.hadamard(b)?;
    let diag = a.diagonal();
    let dmin = diag.iter().min().cloned().unwrap_or_else(Rat::zero);
    let dmax = diag.iter().max().cloned().unwrap_or_else(Rat::zero);

    let eb = SymmetricEigen::new(b.to_f64()).eigenvalues;
    let ec = SymmetricEigen::new(c.to_f64()).eigenvalues;
    let bmin = eb.iter().cloned().fold(f64::INFINITY, f64::min);
    let bmax = eb.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let lower = to_f64(&dmin) * bmin;
    let upper = to_f64(&dmax) * bmax;
    let float_ok = ec.iter().all(|&l| l >= lower - tol && l <= upper + tol);

    let exact_ok = if a.rows() <= EXACT_EIG_ORDER && a.rows() > 0 {
        let pc = c.char_poly()?;
        let pb = b.char_poly()?;
        Some(roots_above_scaled_min(&pc, &pb, &dmin)? && roots_below_scaled_max(&pc, &pb, &dmax)?)
    } else {
        None
    };
    let mut eigenvalues: Vec<f64> = ec.iter().cloned().collect();
    eigenvalues.sort_by(f64::total_cmp);
    Ok(EigBoundsReport { lower, upper, eigenvalues, float_ok, exact_ok })
}

/// `q(t) = p(t / m)` up to a positive factor: its roots are `m` times those
/// of `p`.
fn scale_roots(p: &RatPoly, m: &Rat) -> RatPoly {
    p.compose_affine(&m.recip(), &Rat::zero())
}

/// Distinct real roots of `g * q` in increasing order, each tagged with
/// whether it is a root of `g` and of `q`.
fn merged_roots(g: &RatPoly, q: &RatPoly) -> Result<Vec<(bool, bool)>> {
    let h = g * q;
    let counter = SturmCounter::new(&h)?;
    let cg = SturmCounter::new(g)?;
    let cq = SturmCounter::new(q)?;
    let bound = counter.squarefree().root_bound()?;
    let roots = counter.isolate_open(&-&bound, &bound);
    Ok(roots
        .iter()
        .map(|enc| match &enc.exact {
            Some(x) => (cg.is_root(x), cq.is_root(x)),
            None => (cg.count(&enc.bracket) > 0, cq.count(&enc.bracket) > 0),
        })
        .collect())
}

/// No root of `pc` below `m * (least root of pb)`.
fn roots_above_scaled_min(pc: &RatPoly, pb: &RatPoly, m: &Rat) -> Result<bool> {
    if m.is_zero() {
        let c = SturmCounter::new(pc)?;
        let bound = c.squarefree().root_bound()?;
        return Ok(c.count_open(&-bound, &Rat::zero()) == 0);
    }
    let tags = merged_roots(pc, &scale_roots(pb, m))?;
    let first_q = tags.iter().position(|&(_, in_q)| in_q).expect("char poly of symmetric B has real roots");
    Ok(!tags[..first_q].iter().any(|&(in_g, _)| in_g))
}

/// No root of `pc` above `m * (greatest root of pb)`.
fn roots_below_scaled_max(pc: &RatPoly, pb: &RatPoly, m: &Rat) -> Result<bool> {
    if m.is_zero() {
        let c = SturmCounter::new(pc)?;
        let bound = c.squarefree().root_bound()?;
        return Ok(c.count_open(&Rat::zero(), &bound) == 0);
    }
    let tags = merged_roots(pc, &scale_roots(pb, m))?;
    let last_q = tags.iter().rposition(|&(_, in_q)| in_q).expect("char poly of symmetric B has real roots");
    Ok(!tags[last_q + 1..].iter().any(|&(in_g, _)| in_g))
}

/// `A(k)` invertible iff `(A ∘ D)(k)` invertible, for PSD `A` and the
/// scaling matrix `D` of `alpha`. Returns the truth of the biconditional.
pub fn invertibility_transport(a: &RatMatrix, alpha: &Rat, k: usize) -> Result<bool> {
    if !is_psd_exact(a)?.psd {
        return Err(Error::NotPositiveSemidefinite);
    }
    if k == 0 || k > a.rows() {
        return Err(Error::InvalidArgument(format!("block size {k} outside 1..={}", a.rows())));
    }
    let d = scaling_matrix(alpha, a.rows())?;
    let scaled = a.hadamard(&d)?;
    let lhs = a.leading(k).det()?;
    let rhs = scaled.leading(k).det()?;
    Ok(lhs.is_zero() == rhs.is_zero())
}

/// With `g(t) = s t + c`: `M_n(f∘g; t0) = M_n(f; g(t0)) ∘ (s^{i+j-1})`.
pub fn affine_transport_loewner(f: &RatPoly, n: usize, s: &Rat, c: &Rat, t0: &Rat) -> Result<bool> {
    if s.is_zero() {
        return Err(Error::InvalidArgument("slope must be nonzero".into()));
    }
    let lhs = build_loewner(&f.compose_affine(s, c), n).eval(t0);
    let anchor = s * t0 + c;
    let rhs = build_loewner(f, n).eval(&anchor).hadamard(&scaling_matrix(s, n)?)?;
    Ok(lhs == rhs)
}

/// `det (A ∘ D)(k) = alpha^{k^2} det A(k)`.
pub fn scaled_leading_minor(a: &RatMatrix, alpha: &Rat, k: usize) -> Result<Rat> {
    Ok(a.leading(k).det()? * num_traits::pow(alpha.clone(), k * k))
}

/// `G^T G`, PSD for any `G`.
pub fn gram(g: &RatMatrix) -> Result<RatMatrix> {
    g.transpose().mul(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::{int, rat, standard_gap_poly};
    use proptest::prelude::*;

    fn ones(n: usize) -> RatMatrix {
        RatMatrix::from_fn(n, n, |_, _| int(1))
    }

    #[test]
    fn hadamard_examples() {
        let a = RatMatrix::from_ints(&[&[1, 2], &[3, 4]]);
        assert_eq!(hadamard(&a, &ones(2)).unwrap(), a);
        assert_eq!(hadamard(&RatMatrix::identity(3), &RatMatrix::identity(3)).unwrap(), RatMatrix::identity(3));
        let d = RatMatrix::from_ints(&[&[2, 0], &[0, 2]]);
        assert_eq!(hadamard(&a, &d).unwrap(), RatMatrix::from_ints(&[&[2, 0], &[0, 8]]));
        assert!(hadamard(&a, &RatMatrix::identity(3)).is_err());
    }

    #[test]
    fn scaling_matrix_structure() {
        let d = scaling_matrix(&int(2), 3).unwrap();
        assert_eq!(*d.get(0, 0), int(2));
        assert_eq!(*d.get(2, 2), int(32));
        assert_eq!(d.rank(), 1);
        assert!(is_psd_exact(&d).unwrap().psd);
        assert!(!is_psd_exact(&scaling_matrix(&int(-2), 3).unwrap()).unwrap().psd);
        assert!(scaling_matrix(&int(0), 2).is_err());
    }

    #[test]
    fn rank_inequality_examples() {
        let u = RatMatrix::from_ints(&[&[1, 2], &[2, 4]]);
        let v = RatMatrix::from_ints(&[&[3, -1], &[-3, 1]]);
        assert!(rank_inequality_check(&u, &v).unwrap());
        assert!(hadamard(&u, &v).unwrap().rank() <= 1);
        assert!(rank_inequality_check(&RatMatrix::identity(4), &RatMatrix::identity(4)).unwrap());
        let a = RatMatrix::from_ints(&[&[1, 2, 0], &[0, 1, 5], &[7, 0, 1]]);
        assert_eq!(hadamard(&a, &ones(3)).unwrap().rank(), a.rank());
    }

    #[test]
    fn eig_bounds_examples() {
        let b = RatMatrix::from_ints(&[&[2, 1], &[1, 2]]);
        let r = eig_bounds_report(&RatMatrix::identity(2), &b, 1e-9).unwrap();
        assert_eq!(r.exact_ok, Some(true));
        assert!((r.lower - 1.0).abs() < 1e-12 && (r.upper - 3.0).abs() < 1e-12);

        let r = eig_bounds_report(&b, &b, 1e-9).unwrap();
        assert!(r.holds());
        assert!((r.eigenvalues[0] - 3.0).abs() < 1e-12 && (r.eigenvalues[1] - 5.0).abs() < 1e-12);
        assert!((r.lower - 2.0).abs() < 1e-12 && (r.upper - 6.0).abs() < 1e-12);

        let u = RatMatrix::from_ints(&[&[1, 2], &[2, 4]]);
        let v = RatMatrix::from_ints(&[&[9, 3], &[3, 1]]);
        let r = eig_bounds_report(&u, &v, 1e-9).unwrap();
        assert!(r.holds());
        assert!(r.eigenvalues[0].abs() < 1e-9);

        let neg = RatMatrix::from_ints(&[&[1, 2], &[2, 1]]);
        assert_eq!(eig_bounds_check(&neg, &b, 1e-9), Err(Error::NotPositiveSemidefinite));
    }

    #[test]
    fn eig_bounds_exact_detects_violation() {
        // spectrum {1, 3}: twice the least root is above 1, half the greatest below 3
        let b = RatMatrix::from_ints(&[&[2, 1], &[1, 2]]);
        let pc = b.char_poly().unwrap();
        assert!(!roots_above_scaled_min(&pc, &pc, &rat(2, 1)).unwrap());
        assert!(roots_above_scaled_min(&pc, &pc, &rat(1, 1)).unwrap());
        assert!(!roots_below_scaled_max(&pc, &pc, &rat(1, 2)).unwrap());
    }

    #[test]
    fn invertibility_examples() {
        for k in 1..=3 {
            assert!(invertibility_transport(&RatMatrix::identity(3), &rat(5, 2), k).unwrap());
        }
        let a = RatMatrix::from_ints(&[&[1, 1, 0], &[1, 1, 0], &[0, 0, 2]]);
        assert!(invertibility_transport(&a, &int(3), 2).unwrap());
        assert!(a.leading(2).det().unwrap().is_zero());
        assert!(invertibility_transport(&a, &int(-2), 2).unwrap());
        assert!(invertibility_transport(&RatMatrix::from_ints(&[&[1, 2], &[2, 1]]), &int(2), 1).is_err());
    }

    #[test]
    fn transport_examples() {
        let g2 = standard_gap_poly(2);
        assert!(affine_transport_loewner(&g2, 2, &int(1), &int(0), &rat(1, 3)).unwrap());
        assert!(affine_transport_loewner(&g2, 2, &int(2), &int(0), &int(0)).unwrap());
        let f: RatPoly = "0,1,-1,1".parse().unwrap();
        assert!(affine_transport_loewner(&f, 2, &rat(1, 2), &rat(1, 3), &int(0)).unwrap());
        assert!(affine_transport_loewner(&f, 2, &int(0), &int(0), &int(0)).is_err());
    }

    fn int_matrix(n: usize) -> impl Strategy<Value = RatMatrix> {
        prop::collection::vec(-3i64..=3, n * n).prop_map(move |v| RatMatrix::from_fn(n, n, |i, j| int(v[i * n + j])))
    }

    fn gram_psd() -> impl Strategy<Value = RatMatrix> {
        (1usize..=4, 1usize..=4).prop_flat_map(|(n, m)| {
            prop::collection::vec(-3i64..=3, n * m)
                .prop_map(move |v| gram(&RatMatrix::from_fn(m, n, |i, j| int(v[i * n + j]))).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rank_inequality_random((a, b) in (1usize..=5).prop_flat_map(|n| (int_matrix(n), int_matrix(n)))) {
            prop_assert!(rank_inequality_check(&a, &b).unwrap());
        }

        #[test]
        fn invertibility_random(a in gram_psd(), num in -5i64..=5, den in 1i64..=4) {
            prop_assume!(num != 0);
            let alpha = rat(num, den);
            let d = scaling_matrix(&alpha, a.rows()).unwrap();
            let ad = a.hadamard(&d).unwrap();
            for k in 1..=a.rows() {
                prop_assert!(invertibility_transport(&a, &alpha, k).unwrap());
                prop_assert_eq!(ad.leading(k).det().unwrap(), scaled_leading_minor(&a, &alpha, k).unwrap());
            }
        }

        #[test]
        fn eig_bounds_random(a in gram_psd(), seed in prop::collection::vec(-3i64..=3, 16)) {
            let n = a.rows();
            let g = RatMatrix::from_fn(n, n, |i, j| int(seed[i * 4 + j]));
            let b = gram(&g).unwrap();
            prop_assert!(eig_bounds_check(&a, &b, 1e-9).unwrap());
        }

        #[test]
        fn transport_random(
            cs in prop::collection::vec(-5i64..=5, 1..8),
            n in 1usize..=5,
            (sn, sd) in (-4i64..=4, 1i64..=3),
            c in -6i64..=6,
            t0 in -6i64..=6,
        ) {
            prop_assume!(sn != 0);
            let f = RatPoly::new(cs.into_iter().map(int).collect());
            let s = rat(sn, sd);
            let (c, t0) = (rat(c, 3), rat(t0, 5));
            prop_assert!(affine_transport_loewner(&f, n, &s, &c, &t0).unwrap());
            // ranks agree, as the scaling is invertible
            let lhs = build_loewner(&f.compose_affine(&s, &c), n).eval(&t0);
            let rhs = build_loewner(&f, n).eval(&(&s * &t0 + &c));
            prop_assert_eq!(lhs.rank(), rhs.rank());
        }
    }
}
