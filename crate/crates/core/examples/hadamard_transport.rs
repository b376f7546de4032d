//! Hadamard products, eigenvalue bounds and affine transport of Loewner matrices.

use monogap::hadamard::{affine_transport_loewner, eig_bounds_report, hadamard, invertibility_transport, scaling_matrix};
use monogap::ratpoly::{int, rat, standard_gap_poly};
use monogap::RatMatrix;

fn main() -> monogap::Result<()> {
    let a = RatMatrix::from_ints(&[&[2, 1], &[1, 2]]);
    println!("A o A =\n{}", hadamard(&a, &a)?);
    let r = eig_bounds_report(&a, &a, 1e-12)?;
    println!("eigenvalues {:?} within [{}, {}]: {}", r.eigenvalues, r.lower, r.upper, r.holds());

    let d = scaling_matrix(&int(-2), 3)?;
    println!("scaling matrix for alpha = -2:\n{d}");
    let corner = RatMatrix::from_ints(&[&[1, 1, 0], &[1, 1, 0], &[0, 0, 1]]);
    println!("invertibility transported for k = 1..3: {:?}", (1..=3).map(|k| invertibility_transport(&corner, &int(3), k)).collect::<Result<Vec<_>, _>>()?);

    let holds = affine_transport_loewner(&standard_gap_poly(2), 2, &rat(1, 2), &rat(1, 3), &rat(1, 5))?;
    println!("M_2(g_2 o g; t0) = M_2(g_2; g(t0)) o S: {holds}");
    Ok(())
}
