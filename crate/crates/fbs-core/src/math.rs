//! Thin float helpers. Inherent `f64` math methods live in `std`, so the
//! crate routes through `libm` to stay `no_std`-clean.

pub(crate) fn abs(x: f64) -> f64 {
    libm::fabs(x)
}

pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

pub(crate) fn ln(x: f64) -> f64 {
    libm::log(x)
}

pub(crate) fn log2(x: f64) -> f64 {
    libm::log2(x)
}

pub(crate) fn exp(x: f64) -> f64 {
    libm::exp(x)
}

pub(crate) fn exp2(x: f64) -> f64 {
    libm::exp2(x)
}

/// L1 distance between two equal-length vectors.
pub(crate) fn l1_distance(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| abs(x - y)).sum()
}

/// Sum of a vector; used for normalization checks.
pub(crate) fn sum(v: &[f64]) -> f64 {
    v.iter().sum()
}
