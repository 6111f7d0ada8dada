//! Componentwise helpers for fixed-dimension coordinate vectors.

pub fn add<const D: usize>(a: [f64; D], b: [f64; D]) -> [f64; D] {
    let mut out = [0.0; D];
    for k in 0..D {
        out[k] = a[k] + b[k];
    }
    out
}

pub fn sub<const D: usize>(a: [f64; D], b: [f64; D]) -> [f64; D] {
    let mut out = [0.0; D];
    for k in 0..D {
        out[k] = a[k] - b[k];
    }
    out
}

pub fn scale<const D: usize>(s: f64, a: [f64; D]) -> [f64; D] {
    let mut out = [0.0; D];
    for k in 0..D {
        out[k] = s * a[k];
    }
    out
}

pub fn dot<const D: usize>(a: [f64; D], b: [f64; D]) -> f64 {
    let mut acc = 0.0;
    for k in 0..D {
        acc += a[k] * b[k];
    }
    acc
}

pub fn norm<const D: usize>(a: [f64; D]) -> f64 {
    dot(a, a).sqrt()
}

/// `y += s * x`, componentwise.
pub fn axpy<const D: usize>(y: &mut [f64; D], s: f64, x: [f64; D]) {
    for k in 0..D {
        y[k] += s * x[k];
    }
}

/// Largest absolute component over a slice of vectors.
pub fn max_abs<const D: usize>(vs: &[[f64; D]]) -> f64 {
    vs.iter()
        .flat_map(|v| v.iter())
        .fold(0.0_f64, |m, &x| m.max(x.abs()))
}
