//! Classify g_2..g_5 and report where each one falls into a gap.

use monogap::ratpoly::{standard_gap_poly, to_f64};
use monogap::{classify, Status};

fn main() -> monogap::Result<()> {
    for n in 2..=5 {
        let g = standard_gap_poly(n);
        let v = classify(&g, n + 1)?;
        println!("g_{n}(t) = {g}");
        for rec in &v.per_n {
            let alpha = match &rec.status {
                Status::Member { alpha: Some(a), .. } => format!(" on [0, {:.6})", to_f64(a)),
                _ => String::new(),
            };
            println!("  n = {}: {}{alpha}", rec.n, rec.status.label());
        }
        if let Some(gap) = v.gap {
            println!("  gap at order {}\n", gap.n);
        }
    }
    Ok(())
}
