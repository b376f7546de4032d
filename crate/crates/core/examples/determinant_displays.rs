//! Leading minors of M_n(g_n; x) and their exact signs on [0, b].

use monogap::loewner::build_loewner;
use monogap::ratpoly::{rat, standard_gap_poly};
use monogap::realroots::{sign_on_interval, Interval};
use monogap::Rat;
use num_traits::Zero;

fn main() -> monogap::Result<()> {
    for (n, b) in [(2, rat(1, 2)), (3, rat(1, 5)), (4, rat(1, 25)), (5, rat(4, 125))] {
        println!("g_{n} on [0, {b}]");
        for (k, m) in build_loewner(&standard_gap_poly(n), n).leading_minor_polys().iter().enumerate() {
            let s = sign_on_interval(m, &Interval::closed(Rat::zero(), b.clone()))?;
            println!("  {0}x{0}: {1:?}\n      {m}", k + 1, s.verdict);
        }
    }
    Ok(())
}
