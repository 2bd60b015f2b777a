//! Independent numerical oracles. Nothing here calls the closed forms under test.
#![allow(dead_code)]

/// Bisection for a sign change of `g` on `[a, b]`, run until the bracket
/// stops shrinking.
pub fn bisect(g: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let mut ga = g(a);
    assert!(ga * g(b) <= 0.0, "no sign change on [{a}, {b}]");
    loop {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            return m;
        }
        let gm = g(m);
        if gm == 0.0 {
            return m;
        }
        if (gm < 0.0) == (ga < 0.0) {
            a = m;
            ga = gm;
        } else {
            b = m;
        }
    }
}

/// Golden-section search for the maximum of a unimodal function on `[a, b]`.
///
/// `better(c, d)` must return true when the function is larger at `c` than
/// at `d`. Passing a comparator instead of a function lets callers compare
/// through a cancellation-free difference, which is what takes the search
/// below the usual `sqrt(eps)` floor.
pub fn golden_section_max(better: impl Fn(f64, f64) -> bool, mut a: f64, mut b: f64) -> f64 {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    for _ in 0..400 {
        if better(c, d) {
            b = d;
        } else {
            a = c;
        }
        if b - a <= 1e-15 * b.abs() {
            break;
        }
        c = b - inv_phi * (b - a);
        d = a + inv_phi * (b - a);
    }
    0.5 * (a + b)
}

/// `V(c) - V(d)` for `V(x) = -z/x - x f`, written as `(c - d)(z/(c d) - f)`.
pub fn coulomb_stark_difference(z: f64, f: f64, c: f64, d: f64) -> f64 {
    (c - d) * (z / (c * d) - f)
}

pub fn rel_err(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}
