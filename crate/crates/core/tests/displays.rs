//! Recomputed leading minors of `M_n(g_n; x)` against their printed closed forms.

mod common;

use common::published_displays;
use monogap::loewner::build_loewner;
use monogap::ratpoly::standard_gap_poly;
use monogap::RatPoly;

fn recomputed(n: usize, k: usize) -> RatPoly {
    build_loewner(&standard_gap_poly(n), n).leading_minor_polys()[k - 1].clone()
}

#[test]
fn every_printed_minor_matches() {
    for d in published_displays() {
        assert_eq!(recomputed(d.n, d.k), d.poly, "{}", d.label);
    }
}

#[test]
fn minors_are_even_polynomials() {
    // g_n is odd, so the Loewner entries alternate parity and every minor is even
    for n in 2..=5 {
        for m in build_loewner(&standard_gap_poly(n), n).leading_minor_polys() {
            assert!(m.coeffs().iter().skip(1).step_by(2).all(num_traits::Zero::is_zero), "{m}");
        }
    }
}

#[test]
fn quintic_example_determinant() {
    let p: RatPoly = "0,1/2,1,1/2,1,1/2".parse().unwrap();
    let det = build_loewner(&p, 3).leading_minor_polys().pop().unwrap();
    let expect: RatPoly = "0,9/2,63/8,-15,-105/2,-105/2,-175/8".parse().unwrap();
    assert_eq!(det, expect);
}
