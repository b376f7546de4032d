//! Hankel ranks, extension obstructions and atomic measures from moments.

use monogap::moments::{construct_atomic_measure, moment_flags, Atom};
use monogap::ratpoly::{parse_rat, to_f64};
use monogap::RatPoly;

fn main() -> monogap::Result<()> {
    for (label, text) in [("g_3", "0,1,0,1/3,0,1/5"), ("quintic, lambda = 1, c = 2", "0,1,1,1,1,2"), ("t/2 + t^2 + ...", "0,1/2,1,1/2,1,1/2")] {
        let f: RatPoly = text.parse()?;
        let r = moment_flags(&f, 3)?;
        println!(
            "{label}: pd {} psd {} rank {} Hankel rank {} obstruction {}",
            r.pd, r.psd, r.matrix_rank, r.hankel_rank, r.extension_obstruction
        );
    }
    let b: Vec<_> = ["1", "0", "1/3"].iter().map(|s| parse_rat(s)).collect::<Result<_, _>>()?;
    let mu = construct_atomic_measure(&b)?;
    for (x, w) in mu.atoms.iter().zip(&mu.weights) {
        let kind = if matches!(x, Atom::Exact(_)) { "exact" } else { "enclosed" };
        println!("atom {:+.12} ({kind}), weight {:.12}", x.approx(), w.approx());
    }
    println!("moments enclosed: {}, widest {:.1e}", mu.reproduces(&b), to_f64(&mu.max_moment_width(b.len())));
    Ok(())
}
