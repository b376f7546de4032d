#![allow(dead_code)]

use monogap::ratpoly::{int, parse_rat, rat};
use monogap::{Rat, RatMatrix, RatPoly};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Sparse polynomial from `(coefficient, exponent)` pairs.
pub fn terms(pairs: &[(&str, usize)]) -> RatPoly {
    let deg = pairs.iter().map(|p| p.1).max().unwrap_or(0);
    let mut c = vec![Rat::from_integer(0.into()); deg + 1];
    for (v, e) in pairs {
        c[*e] += parse_rat(v).unwrap();
    }
    RatPoly::new(c)
}

/// A published closed form for a leading principal minor of `M_n(g_n; x)`.
pub struct Display {
    pub label: &'static str,
    pub n: usize,
    /// Size of the leading block.
    pub k: usize,
    pub poly: RatPoly,
}

/// Closed forms as printed, transcribed term by term.
pub fn published_displays() -> Vec<Display> {
    let d = |label, n, k, t: &[(&str, usize)]| Display { label, n, k, poly: terms(t) };
    vec![
        d("g2 full determinant", 2, 2, &[("1/3", 0), ("-2/3", 2)]),
        d("g3 leading 2x2", 3, 2, &[("1/3", 0), ("4/3", 2), ("-5/3", 4), ("-2", 6)]),
        d("g3 full determinant", 3, 3, &[("4/135", 0), ("-11/15", 2), ("-7/5", 6)]),
        d("g4 leading 1x1", 4, 1, &[("1", 0), ("1", 2), ("1", 4), ("1", 6)]),
        d("g4 leading 2x2", 4, 2, &[("1/3", 0), ("4/3", 2), ("10/3", 4), ("-8/3", 6), ("-5", 8), ("-4", 10)]),
        d(
            "g4 leading 3x3",
            4,
            3,
            &[("4/135", 0), ("4/15", 2), ("-10/3", 4), ("-118/15", 6), ("2", 8), ("-54/5", 10), ("-12", 12)],
        ),
        d(
            "g4 full determinant",
            4,
            4,
            &[
                ("16/23625", 0),
                ("-848/7875", 2),
                ("1472/7875", 4),
                ("-4712/875", 6),
                ("-188/175", 8),
                ("72/35", 10),
                ("72/7", 12),
            ],
        ),
        d("g5 leading 1x1", 5, 1, &[("1", 0), ("1", 2), ("1", 4), ("1", 6), ("1", 8)]),
        d(
            "g5 leading 2x2",
            5,
            2,
            &[
                ("1/3", 0),
                ("4/3", 2),
                ("10/3", 4),
                ("20/3", 6),
                ("-10/3", 8),
                ("-26/3", 10),
                ("-29/3", 12),
                ("-20/3", 14),
            ],
        ),
        d(
            "g5 leading 3x3",
            5,
            3,
            &[
                ("4/135", 0),
                ("4/15", 2),
                ("4/3", 4),
                ("-82/9", 6),
                ("-97/3", 8),
                ("-656/15", 10),
                ("613/45", 12),
                ("-42", 14),
                ("-242/3", 16),
                ("-1540/27", 18),
            ],
        ),
        d(
            "g5 leading 4x4",
            5,
            4,
            &[
                ("16/23625", 0),
                ("256/23625", 2),
                ("-18824/23625", 4),
                ("-7136/2625", 6),
                ("5588/875", 8),
                ("-137576/1575", 10),
                ("-254962/1575", 12),
                ("44/3", 14),
                ("-2728/945", 16),
                ("6776/27", 18),
                ("6776/27", 20),
            ],
        ),
        d(
            "g5 full determinant",
            5,
            5,
            &[
                ("1024/260465625", 0),
                ("-34256/10418625", 2),
                ("216592/10418625", 4),
                ("-1213916/694575", 6),
                ("1424236/694575", 8),
                ("-284372/138915", 10),
                ("20251814/138915", 12),
                ("1617407/27783", 14),
                ("-644930/11907", 16),
                ("173030/1701", 18),
                ("69212/243", 20),
            ],
        ),
    ]
}

/// Nonzero rational `p/q` with `|p| <= num`, `1 <= q <= den`.
pub fn nonzero_rat<R: Rng>(r: &mut R, num: i64, den: i64) -> Rat {
    loop {
        let p = r.random_range(-num..=num);
        if p != 0 {
            return rat(p, r.random_range(1..=den));
        }
    }
}

pub fn small_rat<R: Rng>(r: &mut R, num: i64, den: i64) -> Rat {
    rat(r.random_range(-num..=num), r.random_range(1..=den))
}

pub fn random_matrix<R: Rng>(r: &mut R, rows: usize, cols: usize, bound: i64) -> RatMatrix {
    RatMatrix::from_fn(rows, cols, |_, _| int(r.random_range(-bound..=bound)))
}

/// Symmetric PSD `G^T G` of rank at most `rank`.
pub fn random_psd<R: Rng>(r: &mut R, n: usize, rank: usize) -> RatMatrix {
    let g = random_matrix(r, rank, n, 3);
    g.transpose().mul(&g).unwrap()
}

/// `f` of exact degree `deg` with small rational coefficients.
pub fn random_poly<R: Rng>(r: &mut R, deg: usize) -> RatPoly {
    let mut c: Vec<Rat> = (0..deg).map(|_| small_rat(r, 5, 4)).collect();
    c.push(nonzero_rat(r, 5, 4));
    RatPoly::new(c)
}
