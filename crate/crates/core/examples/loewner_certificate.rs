//! Build a Loewner matrix, certify membership, and refute a non-member.

use monogap::loewner::{build_loewner, certify_pn, falsify_pn_near_zero};
use monogap::RatPoly;

fn main() -> monogap::Result<()> {
    let f: RatPoly = "0,1,-1,1".parse()?;
    let m = build_loewner(&f, 2);
    for (k, minor) in m.leading_minor_polys().iter().enumerate() {
        println!("leading {0}x{0} minor of M_2(f;t): {minor}", k + 1);
    }
    let cert = certify_pn(&f, 2, None)?.expect("t - t^2 + t^3 is 2-monotone near 0");
    println!("certified on [0, {}) via {:?}; re-verified: {}", cert.alpha.as_ref().unwrap(), cert.route, cert.verify()?);

    let square: RatPoly = "0,0,1".parse()?;
    let w = falsify_pn_near_zero(&square, 2)?.expect("t^2 is not 2-monotone");
    println!("t^2: principal minor {:?} = {} at t0 = {}; re-verified: {}", w.indices, w.minor, w.t0, w.verify(&square));
    Ok(())
}
