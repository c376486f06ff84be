//! Synthetic observations that the cumulative convention reproduces exactly.
#![allow(dead_code)]

use fracgrow_core::EtaMode;

/// Each next length `x` solves `ln(x/h) = r + η(x) − r^β`, where `η(x)` is the
/// rate that will be estimated back from `(h, x)`. Bisection on the larger
/// root; when none exists above `h` the series stays flat (η = 0).
pub fn self_consistent_series(
    m: f64,
    r: f64,
    beta: f64,
    months: u32,
    mode: EtaMode,
) -> Vec<(u32, f64)> {
    let decay = r.powf(beta);
    let mut pts = vec![(1, m)];
    let mut h = m;
    for month in 2..=months {
        let g = |x: f64| {
            let eta = match mode {
                EtaMode::Absolute => x - h,
                EtaMode::Specific => (x - h) / h,
            };
            (x / h).ln() - (r + eta - decay)
        };
        let next = bisect_above(h, g).unwrap_or(h);
        pts.push((month, next));
        h = next;
    }
    pts
}

fn bisect_above(lo: f64, g: impl Fn(f64) -> f64) -> Option<f64> {
    let start = lo * (1.0 + 1e-12);
    if g(start) <= 0.0 {
        return None;
    }
    let (mut a, mut b) = (start, lo.max(1.0) * 2.0);
    while g(b) > 0.0 {
        b *= 2.0;
        if b > 1e12 {
            return None;
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if g(mid) > 0.0 {
            a = mid;
        } else {
            b = mid;
        }
    }
    Some(0.5 * (a + b))
}

pub fn observation_csv(points: &[(u32, f64)]) -> String {
    let mut s = String::from("month,length\n");
    for (m, h) in points {
        s.push_str(&format!("{m},{h:?}\n"));
    }
    s
}
