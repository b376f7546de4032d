//! Exact rationals and dense univariate polynomials over them.
//!
//! Coefficients are stored low-to-high with trailing zeros trimmed, so two
//! polynomials are equal iff their coefficient vectors are equal. The empty
//! vector is the zero polynomial.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational scalar, always in lowest terms with a
/// positive denominator.
pub type Rat = BigRational;

/// `num / den` as a [`Rat`]. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"p/q"`, an integer, or a finite decimal such as `"0.032"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(Rat::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        if !whole_digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits = format!("{whole_digits}{frac}");
        let mut num = BigInt::from_str(if digits.is_empty() { "0" } else { &digits }).map_err(|_| bad())?;
        if negative {
            num = -num;
        }
        let den = num_traits::pow(BigInt::from(10), frac.len());
        return Ok(Rat::new(num, den));
    }
    BigInt::from_str(s).map(Rat::from_integer).map_err(|_| bad())
}

/// Nearest double; `NaN` if out of range.
pub fn to_f64(x: &Rat) -> f64 {
    num_traits::ToPrimitive::to_f64(x).unwrap_or(f64::NAN)
}

/// Sign of a rational as -1, 0 or 1.
pub fn sign(x: &Rat) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Dense univariate polynomial with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// The identity polynomial `t`.
    pub fn x() -> Self {
        Self::monomial(Rat::one(), 1)
    }

    /// `c * t^k`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rat> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^j`; zero past the degree.
    pub fn coeff(&self, j: usize) -> Rat {
        self.coeffs.get(j).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Index and value of the lowest-order nonzero coefficient.
    pub fn lowest_term(&self) -> Option<(usize, &Rat)> {
        self.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero())
    }

    /// Horner evaluation.
    pub fn eval(&self, t: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn sign_at(&self, t: &Rat) -> i8 {
        sign(&self.eval(t))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c * BigInt::from(j))
                .collect(),
        )
    }

    /// `k`-th derivative; `k = 0` returns a copy.
    pub fn nth_derivative(&self, k: usize) -> Self {
        if k > self.coeffs.len() {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(k)
                .map(|(j, c)| c * falling_factorial(j, k))
                .collect(),
        )
    }

    /// `f^{(j)}(t0) / j!`, i.e. the `j`-th Taylor coefficient at `t0`.
    pub fn taylor_coeff(&self, j: usize, t0: &Rat) -> Rat {
        let mut acc = Rat::zero();
        let mut power = Rat::one();
        for i in j..self.coeffs.len() {
            acc += &self.coeffs[i] * binomial(i, j) * &power;
            power *= t0;
        }
        acc
    }

    /// Returns `g` with `g(t) = f(s*t + c)`.
    pub fn compose_affine(&self, s: &Rat, c: &Rat) -> Self {
        let inner = RatPoly::new(vec![c.clone(), s.clone()]);
        let mut acc = RatPoly::zero();
        for a in self.coeffs.iter().rev() {
            acc = &(&acc * &inner) + &RatPoly::constant(a.clone());
        }
        acc
    }

    pub fn scale(&self, k: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = RatPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division. Errors on a zero divisor.
    pub fn div_rem(&self, divisor: &RatPoly) -> Result<(RatPoly, RatPoly)> {
        let d_deg = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let lead = divisor.coeffs[d_deg].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d_deg {
            return Ok((RatPoly::zero(), self.clone()));
        }
        let mut quot = vec![Rat::zero(); rem.len() - d_deg];
        for i in (0..quot.len()).rev() {
            let q = &rem[i + d_deg] / &lead;
            if !q.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &q * dc;
                }
            }
            quot[i] = q;
        }
        rem.truncate(d_deg);
        Ok((RatPoly::new(quot), RatPoly::new(rem)))
    }

    /// Quotient of a division known to be exact.
    pub fn exact_div(&self, divisor: &RatPoly) -> Result<RatPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Inconsistent("polynomial division was not exact".into()));
        }
        Ok(q)
    }

    /// Scaled to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> RatPoly {
        match self.leading_coeff() {
            Some(lc) => self.scale(&lc.recip()),
            None => RatPoly::zero(),
        }
    }

    /// Scaled by a positive constant so the leading coefficient is +1 or -1.
    /// Sign patterns are unchanged, which is all Sturm chains need.
    pub fn sign_normalized(&self) -> RatPoly {
        match self.leading_coeff() {
            Some(lc) => self.scale(&lc.abs().recip()),
            None => RatPoly::zero(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// `f / gcd(f, f')`, monic. Errors on the zero polynomial.
    pub fn squarefree_part(&self) -> Result<RatPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        Ok(self.exact_div(&g)?.monic())
    }

    /// Yun's algorithm: returns `[s_1, s_2, ...]` with `f = c * prod s_i^i`,
    /// every `s_i` monic, squarefree and pairwise coprime.
    pub fn squarefree_decomposition(&self) -> Result<Vec<RatPoly>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = self.monic();
        let df = f.derivative();
        let mut a = f.gcd(&df);
        let mut b = f.exact_div(&a)?;
        let mut c = df.exact_div(&a)?;
        let mut d = &c - &b.derivative();
        let mut out = Vec::new();
        while b.degree().unwrap_or(0) > 0 {
            a = b.gcd(&d);
            out.push(a.clone());
            b = b.exact_div(&a)?;
            c = d.exact_div(&a)?;
            d = &c - &b.derivative();
        }
        Ok(out)
    }

    /// Coefficients scaled to coprime integers with the same signs.
    pub fn primitive_integer_coeffs(&self) -> Vec<BigInt> {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rat::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if g.is_zero() {
            return ints;
        }
        ints.into_iter().map(|c| c / &g).collect()
    }

    /// A power of two strictly exceeding the modulus of every complex root
    /// (rounded-up Cauchy bound `1 + max |a_i / a_n|`), so bisection from
    /// `[-B, B]` only visits dyadic points. Errors on the zero polynomial.
    pub fn root_bound(&self) -> Result<Rat> {
        let lc = self.leading_coeff().ok_or(Error::ZeroPolynomial)?.abs();
        let max = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs() / &lc)
            .fold(Rat::zero(), |m, v| if v > m { v } else { m });
        let cauchy = max + Rat::one();
        let mut b = Rat::one();
        while b < cauchy {
            b *= int(2);
        }
        Ok(b)
    }

    /// Exact square root over Q when `self` is the square of a rational
    /// polynomial with positive leading coefficient.
    pub fn sqrt_exact(&self) -> Option<RatPoly> {
        let deg = match self.degree() {
            None => return Some(RatPoly::zero()),
            Some(d) => d,
        };
        if deg % 2 == 1 {
            return None;
        }
        let half = deg / 2;
        let lead_root = rat_sqrt(&self.coeffs[deg])?;
        // Solve for the coefficients of q top-down from q^2 = self.
        let mut q = vec![Rat::zero(); half + 1];
        q[half] = lead_root;
        let two_lead = &q[half] * int(2);
        for k in (0..half).rev() {
            // coefficient of t^{half + k} in q^2
            let idx = half + k;
            let mut partial = Rat::zero();
            for i in (k + 1)..=half {
                let j = idx - i;
                if j > k && j <= half {
                    partial += &q[i] * &q[j];
                }
            }
            q[k] = (&self.coeffs[idx] - partial) / &two_lead;
        }
        let q = RatPoly::new(q);
        (&q * &q == *self).then_some(q)
    }

    /// Canonical text form: comma-separated rationals, low to high.
    pub fn to_text(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    }
}

fn rat_sqrt(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| Rat::new(n, d))
}

/// `j * (j-1) * ... * (j-k+1)`.
pub(crate) fn falling_factorial(j: usize, k: usize) -> BigInt {
    ((j + 1 - k)..=j).fold(BigInt::one(), |acc, v| acc * BigInt::from(v))
}

pub(crate) fn factorial(k: usize) -> BigInt {
    falling_factorial(k, k)
}

pub(crate) fn binomial(n: usize, k: usize) -> BigInt {
    falling_factorial(n, k) / factorial(k)
}

/// `t + t^3/3 + ... + t^{2n-1}/(2n-1)`.
pub fn standard_gap_poly(n: usize) -> RatPoly {
    let mut coeffs = vec![Rat::zero(); 2 * n];
    for j in 1..=n {
        coeffs[2 * j - 1] = rat(1, (2 * j - 1) as i64);
    }
    RatPoly::new(coeffs)
}

impl FromStr for RatPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        s.split(',').map(parse_rat).collect::<Result<Vec<_>>>().map(RatPoly::new)
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match (j, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{j}")?,
                (_, false) => write!(f, "{mag}*t^{j}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for RatPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_text())
    }
}

impl<'de> Deserialize<'de> for RatPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|j| self.coeff(j) + rhs.coeff(j)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|j| self.coeff(j) - rhs.coeff(j)).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatPoly {
            type Output = RatPoly;
            fn $m(self, rhs: RatPoly) -> RatPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatPoly> for RatPoly {
            type Output = RatPoly;
            fn $m(self, rhs: &RatPoly) -> RatPoly {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        -&self
    }
}
