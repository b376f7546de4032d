//! Exact partial-fraction counterexamples for the bundled presets.

use monogap::mclass::{preset, run_preset, PRESET_NAMES};
use monogap::ratpoly::to_f64;
use monogap::MClassOutcome;

fn main() -> monogap::Result<()> {
    for name in PRESET_NAMES {
        let p = preset(name).expect("bundled preset");
        match run_preset(&p)? {
            MClassOutcome::Certificate(c) => println!(
                "{name}: n = {}, p = {}, a = {}, sum = {} (~{:.3e}), verified: {}",
                c.n,
                c.p,
                c.a,
                c.sum_value,
                to_f64(&c.sum_value),
                c.verify()?
            ),
            other => println!("{name}: {other:?}"),
        }
    }
    Ok(())
}
