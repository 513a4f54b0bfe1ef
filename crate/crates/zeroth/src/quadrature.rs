//! Composite Simpson integration.
//!
//! The work integrals in this crate all have closed forms; the quadrature
//! exists as the independent second route that every quasi-static segment is
//! checked against.

/// Integrates `f` over `[a, b]` with a composite Simpson rule on `panels`
/// subintervals (`panels` is bumped to the next even count, minimum 2).
///
/// `b < a` is allowed and yields the signed integral.
pub fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, panels: usize) -> f64 {
    if a == b {
        return 0.0;
    }
    let mut n = panels.max(2);
    if n % 2 == 1 {
        n += 1;
    }
    let h = (b - a) / n as f64;
    let mut acc = f(a) + f(b);
    for i in 1..n {
        let weight = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += weight * f(a + h * i as f64);
    }
    acc * h / 3.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn integrates_cubic_exactly() {
        // Simpson is exact for cubics up to rounding.
        let value = simpson(|x| x * x * x, 0.0, 2.0, 2);
        assert_relative_eq!(value, 4.0, max_relative = 1e-14);
    }

    #[test]
    fn matches_logarithmic_closed_form() {
        // ∫ c/V dV over a volume doubling = c ln 2.
        let c = 2494.2;
        let value = simpson(|v| c / v, 1.0, 2.0, 10_000);
        assert_relative_eq!(value, c * 2f64.ln(), max_relative = 1e-12);
    }

    #[test]
    fn reversed_bounds_flip_the_sign() {
        let forward = simpson(|v| 1.0 / v, 1.0, 3.0, 100);
        let backward = simpson(|v| 1.0 / v, 3.0, 1.0, 100);
        assert_relative_eq!(forward, -backward, max_relative = 1e-14);
    }

    #[test]
    fn empty_interval_is_zero() {
        assert_eq!(simpson(|x| x, 1.5, 1.5, 1000), 0.0);
    }
}
