//! High-precision complex arithmetic on top of MPFR floats.
//!
//! `rug::Float` carries its precision per value; everything here is created at
//! an explicit bit precision passed by the caller. Only the operations the
//! evaluators actually need are implemented (no full complex log, no complex
//! trig): powers of positive reals, exponentials, division, and the cyclotomic
//! phases `exp(2πi q)` for rational `q`.

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Float, Rational};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

pub use num_complex::Complex64;

/// Complex number with MPFR real and imaginary parts of equal precision.
#[derive(Clone, PartialEq)]
pub struct Cplx {
    pub re: Float,
    pub im: Float,
}

pub fn float(prec: u32, x: f64) -> Float {
    Float::with_val(prec, x)
}

pub fn float_rat(prec: u32, q: &Rational) -> Float {
    Float::with_val(prec, q)
}

pub fn pi(prec: u32) -> Float {
    Float::with_val(prec, Constant::Pi)
}

pub fn euler_gamma(prec: u32) -> Float {
    Float::with_val(prec, Constant::Euler)
}

pub fn ln2(prec: u32) -> Float {
    Float::with_val(prec, Constant::Log2)
}

impl Cplx {
    pub fn new(re: Float, im: Float) -> Self {
        Cplx { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        Cplx::new(float(prec, 0.0), float(prec, 0.0))
    }

    pub fn one(prec: u32) -> Self {
        Cplx::new(float(prec, 1.0), float(prec, 0.0))
    }

    pub fn from_f64(prec: u32, re: f64, im: f64) -> Self {
        Cplx::new(float(prec, re), float(prec, im))
    }

    pub fn from_real(re: Float) -> Self {
        let prec = re.prec();
        let im = float(prec, 0.0);
        Cplx::new(re, im)
    }

    pub fn from_rational(prec: u32, q: &Rational) -> Self {
        Cplx::new(float_rat(prec, q), float(prec, 0.0))
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Cplx::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm_sqr(&self) -> Float {
        let mut t = Float::with_val(self.prec(), &self.re * &self.re);
        t += Float::with_val(self.prec(), &self.im * &self.im);
        t
    }

    pub fn abs(&self) -> Float {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, f: &Float) -> Self {
        Cplx::new(
            Float::with_val(self.prec(), &self.re * f),
            Float::with_val(self.prec(), &self.im * f),
        )
    }

    pub fn scale_rat(&self, q: &Rational) -> Self {
        self.scale(&float_rat(self.prec(), q))
    }

    pub fn div(&self, rhs: &Cplx) -> Self {
        let d = rhs.norm_sqr();
        let num = self * &rhs.conj();
        Cplx::new(
            Float::with_val(self.prec(), &num.re / &d),
            Float::with_val(self.prec(), &num.im / &d),
        )
    }

    pub fn recip(&self) -> Self {
        Cplx::one(self.prec()).div(self)
    }

    /// e^z via e^x (cos y + i sin y).
    pub fn exp(&self) -> Self {
        let ex = self.re.clone().exp();
        let (sin, cos) = self.im.clone().sin_cos(Float::new(self.prec()));
        Cplx::new(
            Float::with_val(self.prec(), &cos * &ex),
            Float::with_val(self.prec(), &sin * &ex),
        )
    }

    pub fn powi(&self, n: u32) -> Self {
        let mut acc = Cplx::one(self.prec());
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// b^(-z) for a positive real base, via exp(-z ln b).
    pub fn pow_neg_of(base: &Float, z: &Cplx) -> Self {
        let lnb = base.clone().ln();
        let w = Cplx::new(
            Float::with_val(z.prec(), -(z.re.clone()) * &lnb),
            Float::with_val(z.prec(), -(z.im.clone()) * &lnb),
        );
        w.exp()
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn abs_f64(&self) -> f64 {
        self.abs().to_f64()
    }
}

/// exp(2πi q) with the rational argument reduced mod 1 exactly.
pub fn exp_2pi_i(prec: u32, q: &Rational) -> Cplx {
    let mut frac = q.clone();
    let floor = frac.clone().floor();
    frac -= floor;
    let theta = pi(prec) * 2 * float_rat(prec, &frac);
    let (sin, cos) = theta.sin_cos(Float::new(prec));
    Cplx::new(cos, sin)
}

/// (2πi)^k.
pub fn two_pi_i_pow(prec: u32, k: u32) -> Cplx {
    let two_pi = pi(prec) * 2;
    let mag = two_pi.pow(k);
    // i^k cycles 1, i, -1, -i
    match k % 4 {
        0 => Cplx::new(mag, float(prec, 0.0)),
        1 => Cplx::new(float(prec, 0.0), mag),
        2 => Cplx::new(-mag, float(prec, 0.0)),
        _ => Cplx::new(float(prec, 0.0), -mag),
    }
}

impl Add for &Cplx {
    type Output = Cplx;
    fn add(self, rhs: &Cplx) -> Cplx {
        Cplx::new(
            Float::with_val(self.prec(), &self.re + &rhs.re),
            Float::with_val(self.prec(), &self.im + &rhs.im),
        )
    }
}

impl Sub for &Cplx {
    type Output = Cplx;
    fn sub(self, rhs: &Cplx) -> Cplx {
        Cplx::new(
            Float::with_val(self.prec(), &self.re - &rhs.re),
            Float::with_val(self.prec(), &self.im - &rhs.im),
        )
    }
}

impl Mul for &Cplx {
    type Output = Cplx;
    fn mul(self, rhs: &Cplx) -> Cplx {
        let prec = self.prec().max(rhs.prec());
        let mut re = Float::with_val(prec, &self.re * &rhs.re);
        re -= Float::with_val(prec, &self.im * &rhs.im);
        let mut im = Float::with_val(prec, &self.re * &rhs.im);
        im += Float::with_val(prec, &self.im * &rhs.re);
        Cplx::new(re, im)
    }
}

impl Neg for &Cplx {
    type Output = Cplx;
    fn neg(self) -> Cplx {
        Cplx::new(-self.re.clone(), -self.im.clone())
    }
}

impl AddAssign<&Cplx> for Cplx {
    fn add_assign(&mut self, rhs: &Cplx) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl fmt::Debug for Cplx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} + {:?}i", self.re.to_f64(), self.im.to_f64())
    }
}

impl fmt::Display for Cplx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re.to_f64())
        } else {
            let sign = if self.im.is_sign_negative() { "" } else { "+" };
            write!(f, "{}{}{}i", self.re.to_f64(), sign, self.im.to_f64())
        }
    }
}
