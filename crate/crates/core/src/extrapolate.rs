//! Tail extrapolation for lattice partial sums.
//!
//! Partial sums S(N) of the lattice sums handled here behave like
//! S + (a + b ln N) N^-p + (c + d ln N) N^-(p-1-...) for a known leading
//! exponent p (the smallest per-variable exponent weight minus one). Two
//! extrapolants are computed from a geometric ladder: an iterated Aitken
//! table (no model assumptions beyond S + c N^-q per stage) and a linear
//! solve in the log-aware basis {1, N^-p, N^-p ln N, N^-(p+1), N^-(p+1) ln N}.
//! The reported error estimate is the disagreement between independent
//! fits, floored at the rounding scale of the partials.

use crate::num::Complex64;

#[derive(Clone, Copy, Debug)]
pub struct Extrapolated {
    pub value: Complex64,
    pub abs_error_estimate: f64,
    pub accelerated: bool,
}

fn cnorm(z: Complex64) -> f64 {
    z.norm()
}

/// One Aitken pass over a sequence assumed to behave like S + c rho^k.
fn aitken_pass(seq: &[Complex64]) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(seq.len().saturating_sub(2));
    for w in seq.windows(3) {
        let d1 = w[1] - w[0];
        let d2 = w[2] - w[1];
        let den = d1 - d2;
        if cnorm(den) <= 1e-300 {
            out.push(w[2]);
        } else {
            out.push(w[2] + d2 * d2 / den);
        }
    }
    out
}

fn aitken_iterated(partials: &[Complex64]) -> (Complex64, f64) {
    let mut cur = partials.to_vec();
    let mut last_two: (Complex64, Complex64) = (
        cur[cur.len().saturating_sub(2).min(cur.len() - 1)],
        cur[cur.len() - 1],
    );
    while cur.len() >= 3 {
        cur = aitken_pass(&cur);
        let n = cur.len();
        last_two = if n >= 2 {
            (cur[n - 2], cur[n - 1])
        } else {
            (last_two.1, cur[n - 1])
        };
    }
    let err = cnorm(last_two.1 - last_two.0);
    (last_two.1, err)
}

/// Solve a small linear system by Gaussian elimination with partial pivoting.
/// Returns None when the matrix is numerically singular.
fn solve(mut a: Vec<Vec<f64>>, mut b: Vec<Complex64>) -> Option<Vec<Complex64>> {
    let n = b.len();
    for col in 0..n {
        let mut piv = col;
        for row in col + 1..n {
            if a[row][col].abs() > a[piv][col].abs() {
                piv = row;
            }
        }
        if a[piv][col].abs() < 1e-280 {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            for k in col..n {
                a[row][k] -= f * a[col][k];
            }
            let t = b[col];
            b[row] -= t * f;
        }
    }
    for col in (0..n).rev() {
        let mut acc = b[col];
        for k in col + 1..n {
            acc -= a[col][k] * b[k];
        }
        b[col] = acc / a[col][col];
    }
    Some(b)
}

/// Fit S(N) = S + sum_j c_j f_j(N) over the log-aware basis with known
/// leading exponent `p`, using the last `points.len()` ladder points.
fn log_basis_fit(points: &[(u64, Complex64)], p: f64) -> Option<Complex64> {
    let k = points.len();
    if k < 2 {
        return None;
    }
    let nbasis = k.min(5);
    // basis columns: 1, N^-q, N^-q lnN, N^-(q+1), N^-(q+1) lnN, ...
    let nref = points[k - 1].0 as f64;
    let mut cols: Vec<Box<dyn Fn(f64) -> f64>> = vec![Box::new(|_| 1.0)];
    let mut q = p;
    while cols.len() < nbasis {
        let qq = q;
        cols.push(Box::new(move |n: f64| n.powf(-qq)));
        if cols.len() < nbasis {
            cols.push(Box::new(move |n: f64| n.powf(-qq) * n.ln()));
        }
        q += 1.0;
    }
    // column scaling keeps the normal equations well conditioned
    let scale: Vec<f64> = cols.iter().map(|f| f(nref).abs().max(1e-290)).collect();
    let rows: Vec<Vec<f64>> = points
        .iter()
        .map(|&(n, _)| {
            cols.iter()
                .zip(&scale)
                .map(|(f, s)| f(n as f64) / s)
                .collect()
        })
        .collect();
    // normal equations A^T A x = A^T b (rows >= nbasis)
    let mut ata = vec![vec![0.0; nbasis]; nbasis];
    let mut atb = vec![Complex64::new(0.0, 0.0); nbasis];
    for (row, &(_, v)) in rows.iter().zip(points.iter()) {
        for i in 0..nbasis {
            for j in 0..nbasis {
                ata[i][j] += row[i] * row[j];
            }
            atb[i] += v * row[i];
        }
    }
    let x = solve(ata, atb)?;
    Some(x[0] / scale[0])
}

/// Extrapolate a ladder of partial sums.
///
/// `known_p`: leading tail exponent when it can be derived from the exponent
/// weights; `None` falls back to the Aitken table alone. `rounding_floor` is
/// the absolute rounding scale of the computed partials.
pub fn extrapolate(
    points: &[(u64, Complex64)],
    known_p: Option<f64>,
    rounding_floor: f64,
) -> Extrapolated {
    assert!(!points.is_empty());
    let last = points[points.len() - 1].1;
    if points.len() == 1 {
        return Extrapolated {
            value: last,
            abs_error_estimate: f64::INFINITY,
            accelerated: false,
        };
    }
    let raw_step = cnorm(last - points[points.len() - 2].1);
    // Already at the rounding floor: extrapolation would fit noise.
    if raw_step <= rounding_floor * 4.0 {
        return Extrapolated {
            value: last,
            abs_error_estimate: (raw_step + rounding_floor).max(f64::MIN_POSITIVE),
            accelerated: false,
        };
    }
    if points.len() == 2 {
        return Extrapolated {
            value: last,
            abs_error_estimate: raw_step * 4.0,
            accelerated: false,
        };
    }

    let partials: Vec<Complex64> = points.iter().map(|&(_, v)| v).collect();
    let (a_val, a_err) = aitken_iterated(&partials);

    let mut candidates: Vec<(Complex64, f64)> = vec![(a_val, a_err.max(rounding_floor))];
    if let Some(p) = known_p {
        if p > 0.0 {
            let full = log_basis_fit(points, p);
            let shorter = if points.len() > 2 {
                log_basis_fit(&points[..points.len() - 1], p)
            } else {
                None
            };
            if let Some(v) = full {
                let self_err = match shorter {
                    Some(w) => cnorm(v - w),
                    None => raw_step,
                };
                candidates.push((v, self_err.max(rounding_floor)));
            }
        }
    }
    // pick the candidate with the smallest self-estimate; inflate by the
    // spread between candidates so disagreement is never hidden
    let (best, mut err) = candidates
        .iter()
        .cloned()
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .unwrap();
    for (v, _) in &candidates {
        err = err.max(cnorm(*v - best) * 0.5);
    }
    // never claim better than the rounding floor, nor better than a
    // sanity fraction of the last raw step
    err = err.max(rounding_floor).max(raw_step * 1e-9);
    Extrapolated {
        value: best,
        abs_error_estimate: err,
        accelerated: true,
    }
}
