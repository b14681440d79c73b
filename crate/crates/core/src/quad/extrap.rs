//! Sequence acceleration for partial sums: Wynn's epsilon algorithm for
//! alternating sequences and Levin's u-transform, which also handles
//! logarithmic convergence.

/// Extrapolated limit of `partials` with an error estimate.
///
/// The estimate is taken from the deepest even column with at least three
/// entries, picking the column whose last elements agree best.
pub fn wynn_epsilon(partials: &[f64]) -> (f64, f64) {
    let n = partials.len();
    match n {
        0 => return (0.0, f64::INFINITY),
        1 => return (partials[0], f64::INFINITY),
        2 => return (partials[1], (partials[1] - partials[0]).abs()),
        _ => {}
    }
    let last = partials[n - 1];
    let mut best = last;
    let mut best_err = (partials[n - 1] - partials[n - 2]).abs() + (partials[n - 1] - partials[n - 3]).abs();
    let mut prev = vec![0.0; n + 1];
    let mut cur = partials.to_vec();
    let mut col = 0;
    while cur.len() >= 2 {
        let mut next = Vec::with_capacity(cur.len() - 1);
        for i in 0..cur.len() - 1 {
            let d = cur[i + 1] - cur[i];
            if d == 0.0 || !d.is_finite() {
                break;
            }
            next.push(prev[i + 1] + 1.0 / d);
        }
        if next.len() < cur.len() - 1 {
            // an exact repeat: the column has converged to cur's tail
            if col % 2 == 0 {
                let m = cur.len();
                let v = cur[m - 1];
                let e = (cur[m - 1] - cur[m - 2]).abs();
                if e < best_err {
                    best = v;
                    best_err = e;
                }
            }
            break;
        }
        col += 1;
        if col % 2 == 0 && next.len() >= 3 {
            let m = next.len();
            let v = next[m - 1];
            if v.is_finite() {
                let e = (v - next[m - 2]).abs() + (v - next[m - 3]).abs();
                if e < best_err {
                    best = v;
                    best_err = e;
                }
            }
        }
        prev = cur;
        cur = next;
    }
    let floor = 8.0 * n as f64 * f64::EPSILON * best.abs();
    (best, best_err.max(floor))
}

/// Highest order of the Levin transform tried.
const LEVIN_MAX_ORDER: usize = 16;

/// Levin u-transform of a series with the given partial sums and terms.
///
/// `first` is the index of `terms[0]` in the full series, which sets the
/// (n + 1) remainder weights, and `noise` is the absolute uncertainty of each
/// partial sum. Every order up to the data length is tried on the most recent
/// terms; the order whose change from one order lower, plus its amplified
/// noise, is smallest wins.
pub fn levin_u(partials: &[f64], terms: &[f64], first: usize, noise: f64) -> (f64, f64) {
    let n = partials.len().min(terms.len());
    if n < 3 {
        return (partials.last().copied().unwrap_or(0.0), f64::INFINITY);
    }
    // (value, noise amplification) of the order-k transform ending at the last term
    let at = |order: usize| -> Option<(f64, f64)> {
        let start = n - 1 - order;
        let mut num = 0.0;
        let mut den = 0.0;
        let mut wsum = 0.0;
        let mut binom = 1.0;
        let last = (first + start + order + 1) as f64;
        for j in 0..=order {
            let i = start + j;
            let idx = (first + i + 1) as f64;
            let omega = idx * terms[i];
            if omega == 0.0 || !omega.is_finite() {
                return None;
            }
            let w = binom * (idx / last).powi(order as i32 - 1) / omega;
            let w = if j % 2 == 0 { w } else { -w };
            num += w * partials[i];
            den += w;
            wsum += w.abs();
            binom = binom * (order - j) as f64 / (j + 1) as f64;
        }
        let v = num / den;
        (v.is_finite() && den != 0.0).then(|| (v, wsum / den.abs()))
    };
    let mut best = (partials[n - 1], f64::INFINITY);
    let mut prev = at(1);
    for order in 2..=(n - 1).min(LEVIN_MAX_ORDER) {
        let cur = at(order);
        if let (Some((v, amp)), Some((p, _))) = (cur, prev) {
            let floor = amp * (noise + 4.0 * f64::EPSILON * v.abs());
            let err = (v - p).abs() + floor;
            if err < best.1 {
                best = (v, err);
            }
        }
        prev = cur;
    }
    best
}
