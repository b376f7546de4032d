//! Random search for violations of matrix monotonicity.

use monogap::ratpoly::{int, rat, standard_gap_poly};
use monogap::realroots::Interval;
use monogap::sampler::{falsify_monotone, DEFAULT_TOL};

fn main() -> monogap::Result<()> {
    let g2 = standard_gap_poly(2);
    let inside = falsify_monotone(&g2, 2, &Interval::closed(int(0), rat(7, 10)), 10_000, 1, DEFAULT_TOL)?;
    println!("g_2 on [0, 7/10]: {}", inside.counterexample.map_or("no violation".into(), |c| format!("{c:?}")));
    let outside = falsify_monotone(&g2, 2, &Interval::closed(int(0), int(3)), 100_000, 1, DEFAULT_TOL)?;
    match outside.counterexample {
        Some(c) => println!("g_2 on [0, 3]: trial {}, lambda_min {:e}\n  C = {:?}\n  D = {:?}", c.trial, c.lambda_min, c.c, c.d),
        None => println!("g_2 on [0, 3]: nothing found"),
    }
    Ok(())
}
