//! Scalar series at working precision: Riemann zeta via Euler-Maclaurin
//! (valid through the continuation region needed here, including s = 0 and
//! negative integers), the alternating variant, and polylogarithms.

use crate::bernoulli::bernoulli_number;
use crate::num::{float, float_rat, ln2, Cplx};
use crate::precision::{PrecisionConfig, SeriesError, SeriesResult};
use rug::ops::Pow;
use rug::Float;

/// n^{-s} at precision `prec`; fast path for real s.
fn pow_neg(n: u64, s: &Cplx, prec: u32) -> Cplx {
    let base = float(prec, n as f64);
    if s.im.is_zero() {
        Cplx::from_real(base.pow(-s.re.clone()))
    } else {
        Cplx::pow_neg_of(&base, s)
    }
}

/// f(x) = x^{-s} (a + b ln x) and its derivatives stay in the same family;
/// one derivative step maps (a, b) at exponent s+j to (b - (s+j) a, -(s+j) b).
fn derivative_step(s_plus_j: &Cplx, a: &Cplx, b: &Cplx) -> (Cplx, Cplx) {
    let na = &(b - &(s_plus_j * a));
    let nb = &-&(s_plus_j * b);
    (na.clone(), nb.clone())
}

/// Euler-Maclaurin tail sum_{n > n0} n^{-s} (ln n)^{log_power} for
/// log_power in {0, 1}. Returns (value, error bound).
///
/// The expansion is asymptotic in n0; callers keep n0 comfortably above the
/// number of correction terms.
pub fn em_tail(s: &Cplx, log_power: u32, n0: u64, terms: usize, prec: u32) -> (Cplx, f64) {
    assert!(log_power <= 1);
    let nf = float(prec, n0 as f64);
    let lnn = nf.clone().ln();
    let s_minus_1 = s - &Cplx::one(prec);
    // N^{1-s} = N * N^{-s}
    let npow_s = pow_neg(n0, s, prec); // N^{-s}
    let n_pow_1ms = Cplx::new(
        Float::with_val(prec, &npow_s.re * &nf),
        Float::with_val(prec, &npow_s.im * &nf),
    );
    // integral term
    let integral = if log_power == 0 {
        n_pow_1ms.div(&s_minus_1)
    } else {
        // N^{1-s} ln N/(s-1) + N^{1-s}/(s-1)^2
        let t1 = n_pow_1ms.scale(&lnn).div(&s_minus_1);
        let t2 = n_pow_1ms.div(&(&s_minus_1 * &s_minus_1));
        &t1 + &t2
    };
    // f(N)/2
    let (mut a, mut b) = if log_power == 0 {
        (Cplx::one(prec), Cplx::zero(prec))
    } else {
        (Cplx::zero(prec), Cplx::one(prec))
    };
    let f_at = |a: &Cplx, b: &Cplx, xpow: &Cplx| -> Cplx {
        let inner = &(a + &b.scale(&lnn));
        xpow * inner
    };
    let mut value = &integral - &f_at(&a, &b, &npow_s).scale(&float(prec, 0.5));
    // correction terms: - sum_k B_{2k}/(2k)! f^{(2k-1)}(N)
    let mut deriv_order = 0u32;
    let mut xpow = npow_s.clone(); // N^{-s-deriv_order}
    let inv_n = float(prec, 1.0) / nf.clone();
    let mut fact = float(prec, 1.0);
    let mut last_mag = f64::INFINITY;
    let mut bound = f64::INFINITY;
    for k in 1..=terms as u32 {
        // advance derivative to order 2k-1
        while deriv_order < 2 * k - 1 {
            let spj = s + &Cplx::from_real(float(prec, deriv_order as f64));
            let (na, nb) = derivative_step(&spj, &a, &b);
            a = na;
            b = nb;
            xpow = xpow.scale(&inv_n);
            deriv_order += 1;
        }
        // (2k)! incrementally
        fact *= float(prec, (2 * k - 1) as f64);
        fact *= float(prec, (2 * k) as f64);
        let b2k = float_rat(prec, &bernoulli_number(2 * k));
        let coeff = b2k / fact.clone();
        let term = f_at(&a, &b, &xpow).scale(&coeff);
        let mag = term.abs_f64();
        // stop early once the asymptotic series turns
        if mag > last_mag {
            bound = last_mag.max(mag);
            break;
        }
        value = &value - &term;
        last_mag = mag;
        bound = mag * 4.0;
    }
    (value, bound)
}

/// Riemann zeta by Euler-Maclaurin, complex s, s != 1.
///
/// Valid wherever Re s > 1 - 2K for K correction terms; the term count grows
/// as needed, so s = 0 and small negative integers work (and at integers the
/// correction series terminates, giving the exact rational values).
pub fn riemann_zeta(s: &Cplx, cfg: &PrecisionConfig) -> Result<SeriesResult, SeriesError> {
    let prec = cfg.working_prec;
    if s.re == 1u32 && s.im.is_zero() {
        return Err(SeriesError::PoleAtOne);
    }
    let target = cfg.scalar_target();
    let sigma = s.re.to_f64();
    let imag = s.im.to_f64().abs();
    let terms = (8.0f64).max((1.5 - sigma) / 2.0 + 4.0).ceil() as usize;
    let mut m = 24u64.max((imag * 1.6) as u64).max(2 * terms as u64 + 8);
    let mut best: Option<SeriesResult> = None;
    for _ in 0..18 {
        let mut partial = Cplx::zero(prec);
        for n in 1..=m {
            partial += &pow_neg(n, s, prec);
        }
        let (tail, bound) = em_tail(s, 0, m, terms, prec);
        let value = &partial + &tail;
        let res = SeriesResult::exactish(value, bound, m);
        if bound <= target {
            return Ok(res);
        }
        best = Some(res);
        m *= 2;
        if m > 4_000_000 {
            break;
        }
    }
    let best = best.expect("at least one pass");
    Err(SeriesError::AccuracyNotReached {
        target,
        achieved: best.abs_error_estimate,
        best: Box::new(best),
    })
}

/// phi(s) = sum (-1)^m m^{-s} = (2^{1-s} - 1) zeta(s). Rejected at s = 1
/// even though the limit exists; callers wanting -log 2 use polylog(1, .).
pub fn phi(s: &Cplx, cfg: &PrecisionConfig) -> Result<SeriesResult, SeriesError> {
    let prec = cfg.working_prec;
    let z = riemann_zeta(s, cfg)?;
    let one = Cplx::one(prec);
    let factor = &two_pow_of(&(&one - s)) - &one;
    let value = &factor * &z.value;
    let err = z.abs_error_estimate * factor.abs_f64() + 1e-38;
    Ok(SeriesResult {
        value,
        abs_error_estimate: err,
        ..z
    })
}

/// eta(s) = -phi(s) = (1 - 2^{1-s}) zeta(s).
pub(crate) fn eta(s: &Cplx, cfg: &PrecisionConfig) -> Result<Cplx, SeriesError> {
    let p = phi(s, cfg)?;
    Ok(-&p.value)
}

/// 2^w for complex w.
pub(crate) fn two_pow_of(w: &Cplx) -> Cplx {
    let prec = w.prec();
    let l2 = ln2(prec);
    Cplx::new(
        Float::with_val(prec, &w.re * &l2),
        Float::with_val(prec, &w.im * &l2),
    )
    .exp()
}

/// Principal log of w with Re w > 0 (all this crate needs).
fn ln_right_half(w: &Cplx) -> Cplx {
    let prec = w.prec();
    let mag = w.abs().ln();
    let arg = w.im.clone().atan2(&w.re);
    Cplx::new(mag, arg)
}

/// Li_n(z) for n >= 1, |z| <= 1, excluding the divergent (1, 1).
pub fn polylog(n: u32, z: &Cplx, cfg: &PrecisionConfig) -> Result<SeriesResult, SeriesError> {
    let prec = cfg.working_prec;
    if n == 0 {
        return Err(SeriesError::Unsupported("polylog order must be >= 1".into()));
    }
    let zabs = z.abs_f64();
    if zabs > 1.0 + 1e-15 {
        return Err(SeriesError::Unsupported(format!(
            "polylog requires |z| <= 1, got |z| = {zabs}"
        )));
    }
    let one = Cplx::one(prec);
    let is_one = (z - &one).abs_f64() < 1e-30;
    if n == 1 {
        if is_one {
            return Err(SeriesError::Divergent("Li_1(1) diverges".into()));
        }
        let on_circle = (zabs - 1.0).abs() < 1e-15;
        let is_minus_one = (z + &one).abs_f64() < 1e-30;
        if on_circle && !is_minus_one {
            return Err(SeriesError::Unsupported(
                "Li_1 on the unit circle is only supported at z = -1".into(),
            ));
        }
        // -ln(1 - z); 1 - z stays in the right half plane here
        let value = -&ln_right_half(&(&one - z));
        return Ok(SeriesResult::exactish(value, 1e-38, 1));
    }
    // boundary points reduce to zeta
    if is_one {
        let s = Cplx::from_f64(prec, n as f64, 0.0);
        return riemann_zeta(&s, cfg);
    }
    if (z + &one).abs_f64() < 1e-30 {
        let s = Cplx::from_f64(prec, n as f64, 0.0);
        let p = phi(&s, cfg)?;
        return Ok(p);
    }
    let target = cfg.scalar_target();
    // choose M from the tail bound
    let m = if zabs < 1.0 {
        let mut m = 32u64;
        while zabs.powi(m as i32 + 1) / ((1.0 - zabs) * ((m + 1) as f64).powi(n as i32)) > target {
            m *= 2;
            if m > 1 << 26 {
                break;
            }
        }
        m
    } else {
        // p-series bound M^{1-n}/(n-1)
        let need = (target * (n as f64 - 1.0)).powf(-1.0 / (n as f64 - 1.0));
        (need.ceil() as u64).max(32).min(cfg.max_cutoff.max(1 << 22))
    };
    let mut value = Cplx::zero(prec);
    let mut zp = one.clone();
    for k in 1..=m {
        zp = &zp * z;
        let kk = float(prec, k as f64).pow(-(n as i32));
        value += &zp.scale(&kk);
    }
    let bound = if zabs < 1.0 {
        zabs.powi(m as i32 + 1) / ((1.0 - zabs) * ((m + 1) as f64).powi(n as i32))
    } else {
        (m as f64).powi(1 - n as i32) / (n as f64 - 1.0)
    };
    let res = SeriesResult::exactish(value, bound, m);
    if bound <= target {
        Ok(res)
    } else {
        Err(SeriesError::AccuracyNotReached {
            target,
            achieved: bound,
            best: Box::new(res),
        })
    }
}
