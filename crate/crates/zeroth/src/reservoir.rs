//! Heat-reservoir models.
//!
//! A reservoir is a system whose state is its internal energy: the state
//! map is a bijection (postulate i), no work process extracts work from it
//! (postulate ii), and two copies of the same kind can be replaced by a
//! single one supplying the summed heat (postulate iii).
//!
//! Two models satisfy the postulates — an exact ideal reservoir and a
//! finite water-tank approximation with an energy window — plus one
//! deliberately broken variant that permits work extraction, used to test
//! that the verification suite actually catches second-law violations.

use crate::error::{Error, Result};
use crate::numeric::canonical_eq;
use crate::system::{LeafId, SystemId};

/// Hidden empirical scale of a reservoir kind.
///
/// Two reservoirs are of the same kind exactly when their parameters are
/// equal. The parameter fixes which isotherm the reservoir imposes on a
/// contacted gas, but it is never read by the temperature-derivation
/// pipeline: absolute temperature must be recovered from heat-flow ratios
/// alone. [`KindParam::hidden_scale`] exists only as the oracle backdoor
/// for acceptance checks and the `--reveal-hidden` report flag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KindParam {
    theta: f64,
}

impl KindParam {
    pub fn new(theta: f64) -> Result<Self> {
        if !(theta > 0.0) || !theta.is_finite() {
            return Err(Error::InvalidReservoir(format!("kind parameter {theta} must be > 0")));
        }
        Ok(KindParam { theta })
    }

    /// Test-only backdoor: the hidden scale this kind imposes. Do not use
    /// in anything that feeds the temperature derivation.
    #[doc(hidden)]
    pub fn hidden_scale(&self) -> f64 {
        self.theta
    }

    pub(crate) fn theta(&self) -> f64 {
        self.theta
    }
}

/// Allowed energy band of a finite tank.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Window {
    pub min: f64,
    pub max: f64,
}

impl Window {
    fn contains(&self, energy: f64) -> bool {
        (self.min..=self.max).contains(&energy)
    }
}

/// Default half-width of a finite tank's energy window, proportional to
/// the square root of its heat capacity (window grows like √N for a tank
/// of N moles, so the approximation tightens as the tank grows).
pub fn default_window_half_width(capacity: f64) -> f64 {
    100.0 * capacity.sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ReservoirModel {
    /// Exact reservoir: unbounded window, imposed isotherm never drifts.
    Ideal,
    /// Water-tank approximation with constant heat capacity `C` (J/K):
    /// the imposed isotherm drifts as `θ_eff(E) = θ + (E - E₀)/C` and the
    /// energy must stay inside `window`.
    FiniteTank { capacity: f64, window: Window },
    /// An ideal reservoir that illegally accepts negative invested work.
    /// It violates postulate (ii) on purpose; the verification suite must
    /// fail on models built from it.
    Broken,
}

impl ReservoirModel {
    pub fn is_broken(&self) -> bool {
        matches!(self, ReservoirModel::Broken)
    }
}

/// One heat reservoir instance: identity, kind, model, and its state —
/// which is nothing but the internal energy.
#[derive(Debug, Clone, PartialEq)]
pub struct Reservoir {
    id: LeafId,
    kind: KindParam,
    model: ReservoirModel,
    /// Reference energy at which `θ_eff` equals the kind parameter.
    energy_ref: f64,
    /// Current internal energy (the state).
    energy: f64,
}

impl Reservoir {
    pub fn ideal(kind: KindParam) -> Self {
        Reservoir { id: LeafId::fresh(), kind, model: ReservoirModel::Ideal, energy_ref: 0.0, energy: 0.0 }
    }

    /// Finite tank with heat capacity `capacity` (J/K) and an energy window
    /// of `half_width` (default [`default_window_half_width`]) around the
    /// reference energy.
    pub fn finite_tank(kind: KindParam, capacity: f64, half_width: Option<f64>) -> Result<Self> {
        if !(capacity > 0.0) || !capacity.is_finite() {
            return Err(Error::InvalidReservoir(format!("heat capacity {capacity} must be > 0")));
        }
        let half = half_width.unwrap_or_else(|| default_window_half_width(capacity));
        if !(half > 0.0) {
            return Err(Error::InvalidReservoir(format!("window half-width {half} must be > 0")));
        }
        Ok(Reservoir {
            id: LeafId::fresh(),
            kind,
            model: ReservoirModel::FiniteTank { capacity, window: Window { min: -half, max: half } },
            energy_ref: 0.0,
            energy: 0.0,
        })
    }

    pub fn broken(kind: KindParam) -> Self {
        Reservoir { id: LeafId::fresh(), kind, model: ReservoirModel::Broken, energy_ref: 0.0, energy: 0.0 }
    }

    /// A fresh instance of the same kind, model, and state. This is "another
    /// copy of the same reservoir": equal in behaviour, distinct in identity.
    pub fn copy_of(&self) -> Self {
        Reservoir { id: LeafId::fresh(), ..self.clone() }
    }

    pub fn id(&self) -> LeafId {
        self.id
    }

    pub fn system_id(&self) -> SystemId {
        SystemId::leaf(self.id)
    }

    pub fn kind(&self) -> &KindParam {
        &self.kind
    }

    pub fn model(&self) -> &ReservoirModel {
        &self.model
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    pub(crate) fn energy_ref(&self) -> f64 {
        self.energy_ref
    }

    pub fn same_kind(&self, other: &Reservoir) -> bool {
        self.kind == other.kind
    }

    /// The isotherm parameter this reservoir currently imposes on a
    /// contacted gas. Crate-private: the public surface exposes behaviour,
    /// not the hidden scale.
    pub(crate) fn theta_eff(&self) -> f64 {
        theta_eff_at(&self.kind, &self.model, self.energy_ref, self.energy)
    }

    /// Exchanges heat `q` (positive into the reservoir): `E' = E + q`.
    pub fn exchange_heat(&self, q: f64) -> Result<Self> {
        let energy = self.energy + q;
        check_window(&self.model, energy)?;
        Ok(Reservoir { energy, ..self.clone() })
    }

    /// Invests work `w ≥ 0` into the reservoir: `E' = E + w`.
    ///
    /// Negative work is a second-kind perpetual motion attempt and is
    /// rejected — this is postulate (ii) — except on the broken model.
    pub fn invest_work(&self, w: f64) -> Result<Self> {
        if w < 0.0 && !self.model.is_broken() {
            return Err(Error::PerpetualMotion(w));
        }
        if !w.is_finite() {
            return Err(Error::InvalidReservoir(format!("work {w} must be finite")));
        }
        let energy = self.energy + w;
        check_window(&self.model, energy)?;
        Ok(Reservoir { energy, ..self.clone() })
    }

    /// True when the reservoir is back at the state it was created in,
    /// under canonical float equality.
    pub fn is_at_reference(&self) -> bool {
        canonical_eq(self.energy, self.energy_ref)
    }
}

pub(crate) fn theta_eff_at(kind: &KindParam, model: &ReservoirModel, energy_ref: f64, energy: f64) -> f64 {
    match model {
        ReservoirModel::Ideal | ReservoirModel::Broken => kind.theta(),
        ReservoirModel::FiniteTank { capacity, .. } => kind.theta() + (energy - energy_ref) / capacity,
    }
}

pub(crate) fn check_window(model: &ReservoirModel, energy: f64) -> Result<()> {
    if let ReservoirModel::FiniteTank { window, .. } = model {
        if !window.contains(energy) {
            return Err(Error::WindowOverflow { energy, min: window.min, max: window.max });
        }
    }
    Ok(())
}

/// Replaces two copies of the same reservoir by a single fresh one that
/// supplies the summed heat flows.
///
/// `q_a` and `q_b` are the heats the two copies supplied (positive out of
/// the reservoir). The returned reservoir is a fresh instance of the same
/// kind, in the state it reaches after supplying `q_a + q_b`; the original
/// copies are left at their initial states and count as cyclic. Every
/// other system's ledger is unaffected by the replacement.
pub fn merge_copies(a: &Reservoir, b: &Reservoir, q_a: f64, q_b: f64) -> Result<(Reservoir, f64)> {
    if !a.same_kind(b) || a.model != b.model {
        return Err(Error::KindMismatch);
    }
    let q_total = q_a + q_b;
    let fresh = a.copy_of();
    let fresh = Reservoir { energy: fresh.energy_ref, ..fresh }.exchange_heat(-q_total)?;
    Ok((fresh, q_total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn kind(theta: f64) -> KindParam {
        KindParam::new(theta).unwrap()
    }

    #[test]
    fn kind_requires_positive_scale() {
        assert!(KindParam::new(0.0).is_err());
        assert!(KindParam::new(-3.0).is_err());
        assert!(KindParam::new(f64::NAN).is_err());
    }

    #[test]
    fn exchange_heat_shifts_energy_and_nothing_else() {
        let r = Reservoir::ideal(kind(300.0));
        let heated = r.exchange_heat(100.0).unwrap();
        assert_eq!(heated.energy(), 100.0);
        assert_eq!(heated.id(), r.id());
        assert!(heated.same_kind(&r));
        // q = 0 is the identity.
        assert_eq!(r.exchange_heat(0.0).unwrap(), r);
    }

    #[test]
    fn ideal_heat_exchange_is_invertible() {
        let r = Reservoir::ideal(kind(300.0));
        let out = r.exchange_heat(100.0).unwrap().exchange_heat(-100.0).unwrap();
        assert!(canonical_eq(out.energy(), r.energy()));
        assert_eq!(out.theta_eff(), r.theta_eff());
    }

    #[test]
    fn finite_tank_isotherm_drifts_by_q_over_c() {
        let r = Reservoir::finite_tank(kind(300.0), 1e6, None).unwrap();
        let heated = r.exchange_heat(1e3).unwrap();
        assert_relative_eq!(heated.theta_eff() - r.theta_eff(), 1e-3, max_relative = 1e-12);
    }

    #[test]
    fn finite_tank_window_overflow_is_rejected() {
        let r = Reservoir::finite_tank(kind(300.0), 100.0, Some(50.0)).unwrap();
        assert!(matches!(r.exchange_heat(51.0), Err(Error::WindowOverflow { .. })));
        assert!(r.exchange_heat(49.0).is_ok());
    }

    #[test]
    fn invest_work_accepts_nonnegative_and_rejects_extraction() {
        let r = Reservoir::ideal(kind(300.0));
        let up = r.invest_work(50.0).unwrap();
        assert_eq!(up.energy(), 50.0);
        assert_eq!(r.invest_work(0.0).unwrap(), r);
        assert_eq!(r.invest_work(-1.0), Err(Error::PerpetualMotion(-1.0)));
    }

    #[test]
    fn broken_model_permits_extraction() {
        let r = Reservoir::broken(kind(300.0));
        let drained = r.invest_work(-25.0).unwrap();
        assert_eq!(drained.energy(), -25.0);
    }

    #[test]
    fn merge_copies_sums_the_supplied_heats() {
        let a = Reservoir::ideal(kind(300.0));
        let b = a.copy_of();
        let (fresh, q_total) = merge_copies(&a, &b, 30.0, -10.0).unwrap();
        assert_eq!(q_total, 20.0);
        assert_eq!(fresh.energy(), -20.0);
        assert!(fresh.same_kind(&a));
        assert_ne!(fresh.id(), a.id());
        assert_ne!(fresh.id(), b.id());

        let (zero, q) = merge_copies(&a, &b, 0.0, 0.0).unwrap();
        assert_eq!(q, 0.0);
        assert!(zero.is_at_reference());
    }

    #[test]
    fn merge_copies_rejects_kind_mismatch() {
        let a = Reservoir::ideal(kind(300.0));
        let b = Reservoir::ideal(kind(301.0));
        assert_eq!(merge_copies(&a, &b, 1.0, 1.0), Err(Error::KindMismatch));
    }

    #[test]
    fn copies_share_kind_but_not_identity() {
        let a = Reservoir::finite_tank(kind(450.0), 1e4, None).unwrap();
        let b = a.copy_of();
        assert!(a.same_kind(&b));
        assert_eq!(a.model(), b.model());
        assert_ne!(a.id(), b.id());
    }
}
