//! Signed Euler-Zagier double zeta values
//! zeta_EZ(s1, s2; sig1, sig2) = sum_{1 <= m < n} sig1^m sig2^n m^{-s1} n^{-s2}.
//!
//! The inner sum over m is accumulated incrementally while the outer sum
//! runs to a fixed cutoff; the outer tail is completed analytically from the
//! asymptotics of the inner partial sums (Euler-Maclaurin for sig1 = +1,
//! the alternating-tail expansion for sig1 = -1).

use crate::num::{euler_gamma, float, Cplx};
use crate::precision::{PrecisionConfig, SeriesError, SeriesResult};
use crate::series::scalar::{em_tail, eta, riemann_zeta, two_pow_of};
use crate::bernoulli::bernoulli_number;
use crate::num::float_rat;
use rug::ops::Pow;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_i64(v: i64) -> Result<Self, SeriesError> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(SeriesError::Unsupported(format!("sign must be +-1, got {v}"))),
        }
    }

    fn at(self, n: u64) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => {
                if n % 2 == 0 {
                    1.0
                } else {
                    -1.0
                }
            }
        }
    }
}

const OUTER_CUTOFF: u64 = 4096; // even, comfortably above the EM term count
const EM_TERMS: usize = 7;

/// Tail helper: sum_{n > n0} sign^n n^{-u} (ln n)^{log_power}.
fn signed_tail(u: &Cplx, log_power: u32, n0: u64, sign: Sign, prec: u32) -> (Cplx, f64) {
    match sign {
        Sign::Plus => em_tail(u, log_power, n0, EM_TERMS, prec),
        Sign::Minus => {
            // sum over even n > n0 minus odd: 2^{1-u} folding onto half range
            let half = n0 / 2; // n0 even
            let two1mu = two_pow_of(&(&Cplx::one(prec) - u)); // 2^{1-u}
            if log_power == 0 {
                let (zh, eh) = em_tail(u, 0, half, EM_TERMS, prec);
                let (zf, ef) = em_tail(u, 0, n0, EM_TERMS, prec);
                let val = &(&two1mu * &zh) - &zf;
                (val, eh * two1mu.abs_f64() + ef)
            } else {
                // ln(2k) = ln 2 + ln k
                let l2 = crate::num::ln2(prec);
                let (zh, eh) = em_tail(u, 0, half, EM_TERMS, prec);
                let (zhl, ehl) = em_tail(u, 1, half, EM_TERMS, prec);
                let (zfl, efl) = em_tail(u, 1, n0, EM_TERMS, prec);
                let folded = &zh.scale(&l2) + &zhl;
                let val = &(&two1mu * &folded) - &zfl;
                (val, (eh + ehl) * two1mu.abs_f64() + efl)
            }
        }
    }
}

/// Absolute-convergence region: Re s2 > 1 and Re(s1 + s2) > 2.
pub fn ez_convergent(s1: &Cplx, s2: &Cplx) -> bool {
    let a = s1.re.to_f64();
    let b = s2.re.to_f64();
    b > 1.0 && a + b > 2.0
}

pub fn euler_zagier2(
    s1: &Cplx,
    s2: &Cplx,
    sig1: Sign,
    sig2: Sign,
    cfg: &PrecisionConfig,
) -> Result<SeriesResult, SeriesError> {
    let prec = cfg.working_prec;
    if !ez_convergent(s1, s2) {
        return Err(SeriesError::OutsideConvergence(format!(
            "zeta_EZ needs Re s2 > 1 and Re(s1+s2) > 2, got ({}, {})",
            s1.re.to_f64(),
            s2.re.to_f64()
        )));
    }
    let n0 = OUTER_CUTOFF;
    let pow_neg = |n: u64, s: &Cplx| -> Cplx {
        let base = float(prec, n as f64);
        if s.im.is_zero() {
            Cplx::from_real(base.pow(-s.re.clone()))
        } else {
            Cplx::pow_neg_of(&base, s)
        }
    };
    // exact partial over 2 <= n <= n0
    let mut inner = Cplx::zero(prec);
    let mut total = Cplx::zero(prec);
    for n in 2..=n0 {
        let m = n - 1;
        let t = pow_neg(m, s1).scale(&float(prec, sig1.at(m)));
        inner += &t;
        let o = pow_neg(n, s2).scale(&float(prec, sig2.at(n)));
        total += &(&o * &inner);
    }
    // outer tail: A(n) = sum_{m<n} sig1^m m^{-s1}
    let mut err = 0.0f64;
    let s12 = s1 + s2;
    match sig1 {
        Sign::Plus => {
            let s1_is_one = s1.re == 1u32 && s1.im.is_zero();
            if !s1_is_one {
                // A(n) = zeta(s1) - R(n), R(n) ~ n^{1-s1}/(s1-1) + n^{-s1}/2 + EM corrections
                let z1 = riemann_zeta(s1, cfg)?;
                err += z1.abs_error_estimate * 2.0;
                let (z2t, e) = signed_tail(s2, 0, n0, sig2, prec);
                err += e * z1.value.abs_f64();
                total += &(&z1.value * &z2t);
                // - sum_{n>n0} sig2^n n^{-s2} R(n)
                let sm1 = s1 - &Cplx::one(prec);
                let (t1, e1) = signed_tail(&(&s12 - &Cplx::one(prec)), 0, n0, sig2, prec);
                let c1 = t1.div(&sm1);
                err += e1 / sm1.abs_f64().max(1e-300);
                total = &total - &c1;
                let (t2, e2) = signed_tail(&s12, 0, n0, sig2, prec);
                total = &total - &t2.scale(&float(prec, 0.5));
                err += e2 * 0.5;
                // EM correction terms of R(n): B_{2k}/(2k)! (s1)_{2k-1} n^{-s1-2k+1}
                let mut a = s1.clone();
                let mut fact2 = float(prec, 2.0); // (2k)! at k=1
                for k in 1..=EM_TERMS as u32 {
                    if k > 1 {
                        let f1 = float(prec, (2 * k - 1) as f64);
                        let f2 = float(prec, (2 * k) as f64);
                        fact2 *= f1;
                        fact2 *= f2;
                        // extend (s1)_{2k-1} by two factors
                        let j0 = 2 * (k - 1) - 1;
                        let m1 = s1 + &Cplx::from_real(float(prec, j0 as f64));
                        let m2 = s1 + &Cplx::from_real(float(prec, (j0 + 1) as f64));
                        a = &(&a * &m1) * &m2;
                    }
                    let b2k = float_rat(prec, &bernoulli_number(2 * k));
                    let coeff = a.scale(&(b2k / fact2.clone()));
                    let u = &(&s12 - &Cplx::one(prec)) + &Cplx::from_real(float(prec, 2.0 * k as f64));
                    let (zt, ze) = signed_tail(&u, 0, n0, sig2, prec);
                    total = &total - &(&coeff * &zt);
                    err += ze * coeff.abs_f64();
                }
            } else {
                // A(n) = H_{n-1} = ln n + gamma - 1/(2n) - sum B_{2k}/(2k) n^{-2k}
                let (zl, el) = signed_tail(s2, 1, n0, sig2, prec);
                total += &zl;
                err += el;
                let (z0, e0) = signed_tail(s2, 0, n0, sig2, prec);
                total += &z0.scale(&euler_gamma(prec));
                err += e0;
                let (z1t, e1) = signed_tail(&(s2 + &Cplx::one(prec)), 0, n0, sig2, prec);
                total = &total - &z1t.scale(&float(prec, 0.5));
                err += e1;
                for k in 1..=EM_TERMS as u32 {
                    let coeff = float_rat(prec, &bernoulli_number(2 * k)) / float(prec, (2 * k) as f64);
                    let u = s2 + &Cplx::from_real(float(prec, 2.0 * k as f64));
                    let (zt, ze) = signed_tail(&u, 0, n0, sig2, prec);
                    total = &total - &zt.scale(&coeff);
                    err += ze * coeff.to_f64().abs();
                }
            }
        }
        Sign::Minus => {
            // A(n) -> -eta(s1); fluctuation (-1)^n [n^{-s1}/2 + (s1/4) n^{-s1-1} + O(n^{-s1-3})]
            let et = eta(s1, cfg)?;
            let (z2t, e) = signed_tail(s2, 0, n0, sig2, prec);
            total = &total - &(&et * &z2t);
            err += e * et.abs_f64();
            // combined sign: sig2^n (-1)^n
            let alt_sign = match sig2 {
                Sign::Plus => Sign::Minus,
                Sign::Minus => Sign::Plus,
            };
            let (t0, e0) = signed_tail(&s12, 0, n0, alt_sign, prec);
            total = &total - &t0.scale(&float(prec, 0.5));
            err += e0;
            let (t1, e1) = signed_tail(&(&s12 + &Cplx::one(prec)), 0, n0, alt_sign, prec);
            let q = s1.scale(&float(prec, 0.25));
            total = &total - &(&q * &t1);
            err += e1 * q.abs_f64();
            // remainder bound ~ |s1(s1+1)(s1+2)| sum n^{-sig1-sig2-3}
            let mag = s1.abs_f64();
            let decay = s12.re.to_f64() + 3.0;
            err += 8.0 * mag * (mag + 1.0) * (mag + 2.0) * (n0 as f64).powf(1.0 - decay)
                / (decay - 1.0);
        }
    }
    Ok(SeriesResult {
        value: total,
        abs_error_estimate: err + 1e-35,
        cutoff_used: n0,
        accelerated: true,
        terms_summed: n0,
        ladder: Vec::new(),
    })
}
