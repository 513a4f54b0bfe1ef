//! Numeric discipline shared across the crate.
//!
//! All state comparisons go through one canonical float encoding and all
//! law-level checks share one tolerance budget, so that every threshold in
//! the crate is named here rather than scattered as magic numbers.

/// Significant decimal digits kept by [`canonical`].
pub const SIGNIFICANT_DIGITS: i32 = 12;

/// Relative residual bound for law-level checks (first/second law, Carnot,
/// lemma identities, temperature assignment). Chosen to dominate the
/// accumulated rounding of the integrators (≤ 1e-12 per step, ≤ 1e4 steps)
/// while staying far below any physical effect at desk scale.
pub const LAW_TOL: f64 = 1e-9;

/// Relative bound for per-step invariants (isotherm and adiabat constants).
pub const STEP_TOL: f64 = 1e-12;

/// Default number of composite-Simpson panels for work integrals.
pub const DEFAULT_PANELS: usize = 10_000;

/// Rounds to [`SIGNIFICANT_DIGITS`] significant decimal digits.
///
/// This is the canonical encoding used for state equality: two states are
/// "the same" exactly when their canonical encodings are equal.
pub fn canonical(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0; // normalize -0.0
    }
    if !x.is_finite() {
        return x;
    }
    let magnitude = x.abs().log10().floor() as i32;
    let scale = 10f64.powi(SIGNIFICANT_DIGITS - 1 - magnitude);
    if !scale.is_finite() || scale == 0.0 {
        return x;
    }
    (x * scale).round() / scale
}

/// Canonical equality of two floats.
pub fn canonical_eq(a: f64, b: f64) -> bool {
    canonical(a) == canonical(b)
}

/// Relative difference of `value` against `reference`, with a unit floor so
/// the measure stays meaningful near zero.
pub fn rel_diff(value: f64, reference: f64) -> f64 {
    (value - reference).abs() / reference.abs().max(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_rounds_to_twelve_digits() {
        assert_eq!(canonical(1.000_000_000_000_4), 1.0);
        assert_eq!(canonical(123_456.789_012_344), canonical(123_456.789_012_345_1));
        assert_ne!(canonical(1.000_000_001), 1.0);
    }

    #[test]
    fn canonical_normalizes_zero_sign() {
        assert_eq!(canonical(-0.0).to_bits(), 0.0f64.to_bits());
    }

    #[test]
    fn canonical_eq_absorbs_ulp_noise() {
        let x = 0.1 + 0.2;
        assert!(canonical_eq(x, 0.3));
        assert!(canonical_eq(0.1 + 0.2 - 0.2, 0.1));
    }

    #[test]
    fn rel_diff_floors_at_unity() {
        assert_eq!(rel_diff(1e-12, 0.0), 1e-12);
        assert!((rel_diff(2.0, 1000.0) - 0.998).abs() < 1e-12);
    }
}
