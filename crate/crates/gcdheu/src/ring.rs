//! Coefficient rings: arbitrary-precision integers and Gaussian integers.
//!
//! A single scalar type [`GaussInt`] serves both rings; plain integers are
//! the degenerate case `im = 0`. Which ring a computation lives in is
//! recorded by [`RingTag`] on the enclosing polynomial. All operations are
//! exact; there is no floating point anywhere in this module.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::Error;

/// Coefficient ring selector. Fixed per computation; mixed-ring operations
/// are rejected by the polynomial layer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingTag {
    Integers,
    GaussianIntegers,
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingTag::Integers => write!(f, "z"),
            RingTag::GaussianIntegers => write!(f, "zi"),
        }
    }
}

/// Gaussian integer `re + im*i` with arbitrary-precision components.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: BigInt, im: BigInt) -> Self {
        GaussInt { re, im }
    }

    /// Real (rational-integer) value.
    pub fn from_int(re: BigInt) -> Self {
        GaussInt { re, im: BigInt::zero() }
    }

    pub fn from_i64(re: i64, im: i64) -> Self {
        GaussInt { re: BigInt::from(re), im: BigInt::from(im) }
    }

    pub fn zero() -> Self {
        GaussInt::from_i64(0, 0)
    }

    pub fn one() -> Self {
        GaussInt::from_i64(1, 0)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussInt::from_i64(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    /// True when the value is one of the four units 1, -1, i, -i.
    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// True when the imaginary part is zero.
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussInt { re: self.re.clone(), im: -&self.im }
    }

    pub fn neg(&self) -> Self {
        GaussInt { re: -&self.re, im: -&self.im }
    }

    /// Euclidean norm `re^2 + im^2`.
    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn add(&self, other: &Self) -> Self {
        GaussInt { re: &self.re + &other.re, im: &self.im + &other.im }
    }

    pub fn sub(&self, other: &Self) -> Self {
        GaussInt { re: &self.re - &other.re, im: &self.im - &other.im }
    }

    pub fn mul(&self, other: &Self) -> Self {
        // shortcut for the dominant real-by-real case
        if self.im.is_zero() && other.im.is_zero() {
            return GaussInt::from_int(&self.re * &other.re);
        }
        GaussInt {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }

    /// Multiply by the unit that puts the value in canonical position:
    /// `re > 0` and `im >= 0`, or zero. Idempotent.
    pub fn normalize_unit(&self) -> Self {
        self.mul(&self.unit_factor())
    }

    /// The unit u in {1, -1, i, -i} with `u * self` canonical.
    pub fn unit_factor(&self) -> Self {
        if self.is_zero() {
            return GaussInt::one();
        }
        let re_pos = self.re.is_positive();
        let im_pos = self.im.is_positive();
        let im_neg = self.im.is_negative();
        if re_pos && !im_neg {
            GaussInt::one()
        } else if !re_pos && im_pos {
            // rotate by -i: (re, im) -> (im, -re)
            GaussInt::from_i64(0, -1)
        } else if self.re.is_negative() && !im_pos {
            GaussInt::from_i64(-1, 0)
        } else {
            // re >= 0, im < 0; rotate by i: (re, im) -> (-im, re)
            GaussInt::i()
        }
    }
}

/// Symmetric remainder of `a` modulo `z`: the unique `r` with
/// `a = r (mod z)` and `r` in the half-open interval `(-z/2, z/2]`.
pub fn smod(a: &BigInt, z: &BigInt) -> Result<BigInt, Error> {
    if z < &BigInt::from(3) {
        return Err(Error::InvalidModulus(z.clone()));
    }
    let mut r = a.mod_floor(z);
    if &r * 2 > *z {
        r -= z;
    }
    Ok(r)
}

/// Componentwise symmetric remainder of a Gaussian integer.
pub fn gsmod(a: &GaussInt, z: &BigInt) -> Result<GaussInt, Error> {
    Ok(GaussInt {
        re: smod(&a.re, z)?,
        im: smod(&a.im, z)?,
    })
}

/// Nearest-integer rounding of `x / n` for `n > 0`, ties toward minus
/// infinity: `ceil((2x - n) / 2n)`.
fn round_half_down(x: &BigInt, n: &BigInt) -> BigInt {
    (x * 2 - n).div_ceil(&(n * 2))
}

/// Euclidean division step: quotient with both components rounded to the
/// nearest integer, guaranteeing `norm(rem) <= norm(b) / 2`.
fn div_nearest(a: &GaussInt, b: &GaussInt) -> GaussInt {
    let t = a.mul(&b.conj());
    let n = b.norm();
    GaussInt {
        re: round_half_down(&t.re, &n),
        im: round_half_down(&t.im, &n),
    }
}

/// Greatest common divisor under the Euclidean norm, unit-normalized.
/// `gint_gcd(0, 0) = 0`. For real inputs this is the ordinary `|gcd|`.
pub fn gint_gcd(a: &GaussInt, b: &GaussInt) -> GaussInt {
    if a.is_real() && b.is_real() {
        return GaussInt::from_int(a.re.gcd(&b.re));
    }
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let q = div_nearest(&x, &y);
        let r = x.sub(&q.mul(&y));
        x = y;
        y = r;
    }
    x.normalize_unit()
}

/// Height of a scalar: `|a|` for integers, the Euclidean absolute value
/// rounded up (`ceil(sqrt(re^2 + im^2))`) for Gaussian integers.
pub fn coeff_height(a: &GaussInt) -> BigInt {
    if a.im.is_zero() {
        return a.re.abs();
    }
    if a.re.is_zero() {
        return a.im.abs();
    }
    let n = a.norm();
    let s = n.sqrt();
    if &s * &s < n {
        s + 1
    } else {
        s
    }
}

/// Exact ring division: `Some(q)` with `a = q * b` when `b` divides `a`,
/// `None` when it does not.
pub fn exact_div(a: &GaussInt, b: &GaussInt) -> Result<Option<GaussInt>, Error> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(exact_div_nz(a, b))
}

/// Exact division with the `b != 0` check already done by the caller.
pub(crate) fn exact_div_nz(a: &GaussInt, b: &GaussInt) -> Option<GaussInt> {
    if a.is_zero() {
        return Some(GaussInt::zero());
    }
    if a.is_real() && b.is_real() {
        let (q, r) = a.re.div_rem(&b.re);
        return r.is_zero().then(|| GaussInt::from_int(q));
    }
    let t = a.mul(&b.conj());
    let n = b.norm();
    let (qre, rre) = t.re.div_rem(&n);
    if !rre.is_zero() {
        return None;
    }
    let (qim, rim) = t.im.div_rem(&n);
    if !rim.is_zero() {
        return None;
    }
    Some(GaussInt { re: qre, im: qim })
}
