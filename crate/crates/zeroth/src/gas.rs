//! Ideal-gas model: states, the constitutive energy, and the quasi-static
//! step primitives with their work integrals.
//!
//! Every volume-changing step computes its work twice — once in closed form
//! and once by composite Simpson quadrature — and both values are retained
//! so the two routes can be checked against each other.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::canonical_eq;
use crate::quadrature::simpson;
use crate::system::{LeafId, SystemId};

/// Molar gas constant in J/(mol·K). Used only inside the gas model.
pub const GAS_CONSTANT: f64 = 8.314_462_618;

/// Constitutive constants of one ideal-gas container.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GasSpec {
    moles: f64,
    c_v: f64,
    gamma: f64,
}

impl GasSpec {
    /// Builds a spec from the amount of substance and the molar heat
    /// capacity at constant volume; the heat-capacity ratio follows as
    /// `gamma = 1 + R/c_v`.
    pub fn new(moles: f64, c_v: f64) -> Result<Self> {
        if !(moles > 0.0) || !moles.is_finite() {
            return Err(Error::InvalidGasSpec(format!("moles must be > 0 (got {moles})")));
        }
        if !(c_v > 0.0) || !c_v.is_finite() {
            return Err(Error::InvalidGasSpec(format!("c_v must be > 0 (got {c_v})")));
        }
        Ok(GasSpec { moles, c_v, gamma: 1.0 + GAS_CONSTANT / c_v })
    }

    /// Monatomic gas: `c_v = 3/2 R`, hence `gamma = 5/3`.
    pub fn monatomic(moles: f64) -> Result<Self> {
        GasSpec::new(moles, 1.5 * GAS_CONSTANT)
    }

    pub fn moles(&self) -> f64 {
        self.moles
    }

    pub fn c_v(&self) -> f64 {
        self.c_v
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// Heat capacity of the whole container, `n·c_v`, in J/K.
    pub fn heat_capacity(&self) -> f64 {
        self.moles * self.c_v
    }

    /// Temperature of a state under `pV = nRT`.
    pub fn temperature(&self, state: &GasState) -> f64 {
        state.pressure * state.volume / (self.moles * GAS_CONSTANT)
    }

    /// Pressure on the isotherm of temperature `theta` at `volume`.
    pub fn isotherm_pressure(&self, theta: f64, volume: f64) -> f64 {
        self.moles * GAS_CONSTANT * theta / volume
    }

    /// State on the isotherm of temperature `theta` at `volume`.
    pub fn state_on_isotherm(&self, theta: f64, volume: f64) -> Result<GasState> {
        GasState::new(self.isotherm_pressure(theta, volume), volume)
    }
}

/// Point in the gas state space: pressure in Pa, volume in m³, both
/// strictly positive (a truly ideal gas has no volume floor).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GasState {
    pressure: f64,
    volume: f64,
}

impl GasState {
    pub fn new(pressure: f64, volume: f64) -> Result<Self> {
        if !(pressure > 0.0 && volume > 0.0) || !pressure.is_finite() || !volume.is_finite() {
            return Err(Error::InvalidGasState { pressure, volume });
        }
        Ok(GasState { pressure, volume })
    }

    pub fn pressure(&self) -> f64 {
        self.pressure
    }

    pub fn volume(&self) -> f64 {
        self.volume
    }

    /// Equality under the canonical float encoding.
    pub fn canonical_eq(&self, other: &GasState) -> bool {
        canonical_eq(self.pressure, other.pressure) && canonical_eq(self.volume, other.volume)
    }
}

/// One gas container: a leaf system with its constitutive constants.
#[derive(Debug, Clone, PartialEq)]
pub struct GasSystem {
    id: LeafId,
    spec: GasSpec,
}

impl GasSystem {
    /// Creates a fresh gas instance. Two calls yield distinct systems even
    /// for equal specs.
    pub fn new(spec: GasSpec) -> Self {
        GasSystem { id: LeafId::fresh(), spec }
    }

    pub fn id(&self) -> LeafId {
        self.id
    }

    pub fn spec(&self) -> &GasSpec {
        &self.spec
    }

    pub fn system_id(&self) -> SystemId {
        SystemId::leaf(self.id)
    }
}

/// Internal energy `U = c_v·n·T = c_v·p·V / R`, strictly monotone in `p·V`.
pub fn internal_energy(spec: &GasSpec, state: &GasState) -> f64 {
    spec.c_v * state.pressure * state.volume / GAS_CONSTANT
}

/// Result of a volume-changing quasi-static step.
#[derive(Debug, Clone, Copy)]
pub struct StepOutcome {
    pub state_out: GasState,
    /// Work invested into the gas (closed form), J.
    pub work: f64,
    /// Heat absorbed by the gas, J.
    pub heat: f64,
    /// The same work integral evaluated by composite Simpson quadrature.
    pub work_quadrature: f64,
}

/// Isothermal volume change along the current isotherm of the gas:
/// `p_out·V_out = p_in·V_in`.
///
/// Legal only while the gas is in contact with a reservoir that pins the
/// isotherm; the process builder enforces that context. Work is
/// `-∫ p dV`, heat is `ΔU - W = -W` since the energy is unchanged on an
/// isotherm.
pub fn isothermal_step(
    spec: &GasSpec,
    state_in: &GasState,
    volume_out: f64,
    panels: usize,
) -> Result<StepOutcome> {
    polytropic_step(spec, state_in, volume_out, 0.0, panels)
}

/// Quasi-static volume change while coupled to a finite heat bath, along
/// the polytrope `T·V^k = const` with `k = nR / (n·c_v + C)` for bath heat
/// capacity `C`.
///
/// `k = 0` recovers the exact isotherm (infinite bath); `k = gamma - 1`
/// would be the adiabat (zero bath), so `k` must stay below it.
pub fn polytropic_step(
    spec: &GasSpec,
    state_in: &GasState,
    volume_out: f64,
    k: f64,
    panels: usize,
) -> Result<StepOutcome> {
    if !(volume_out > 0.0) || !volume_out.is_finite() {
        return Err(Error::NonPositiveVolume(volume_out));
    }
    if !(0.0..spec.gamma - 1.0).contains(&k) {
        return Err(Error::InvalidReservoir(format!(
            "polytropic exponent {k} outside [0, gamma-1)"
        )));
    }
    let (p_in, v_in) = (state_in.pressure, state_in.volume);
    if volume_out == v_in {
        return Ok(StepOutcome { state_out: *state_in, work: 0.0, heat: 0.0, work_quadrature: 0.0 });
    }
    let exponent = 1.0 + k;
    let p_out = p_in * (v_in / volume_out).powf(exponent);
    let state_out = GasState::new(p_out, volume_out)?;
    let work = if k == 0.0 {
        -p_in * v_in * (volume_out / v_in).ln()
    } else {
        (p_in * v_in / k) * ((v_in / volume_out).powf(k) - 1.0)
    };
    let work_quadrature = -simpson(
        |v| p_in * (v_in / v).powf(exponent),
        v_in,
        volume_out,
        panels,
    );
    let heat = internal_energy(spec, &state_out) - internal_energy(spec, state_in) - work;
    Ok(StepOutcome { state_out, work, heat, work_quadrature })
}

/// Adiabatic volume change of the isolated gas: `p_out·V_out^γ = p_in·V_in^γ`.
///
/// A work process, so `W = ΔU` exactly; the quadrature route `-∫ p dV`
/// along the adiabat is retained for the cross-check.
pub fn adiabatic_step(
    spec: &GasSpec,
    state_in: &GasState,
    volume_out: f64,
    panels: usize,
) -> Result<StepOutcome> {
    if !(volume_out > 0.0) || !volume_out.is_finite() {
        return Err(Error::NonPositiveVolume(volume_out));
    }
    let (p_in, v_in) = (state_in.pressure, state_in.volume);
    if volume_out == v_in {
        return Ok(StepOutcome { state_out: *state_in, work: 0.0, heat: 0.0, work_quadrature: 0.0 });
    }
    let gamma = spec.gamma;
    let p_out = p_in * (v_in / volume_out).powf(gamma);
    let state_out = GasState::new(p_out, volume_out)?;
    let work = internal_energy(spec, &state_out) - internal_energy(spec, state_in);
    let work_quadrature = -simpson(
        |v| p_in * (v_in / v).powf(gamma),
        v_in,
        volume_out,
        panels,
    );
    Ok(StepOutcome { state_out, work, heat: 0.0, work_quadrature })
}

/// Dissipative work input at constant volume (shaking or friction):
/// `U_out = U_in + W_in`, so `p_out = p_in + W_in·R/(c_v·V)`.
///
/// Friction only adds energy; a non-positive `W_in` is rejected.
pub fn friction_step(spec: &GasSpec, state_in: &GasState, work_in: f64) -> Result<GasState> {
    if !(work_in > 0.0) || !work_in.is_finite() {
        return Err(Error::FrictionExtraction(work_in));
    }
    let p_out = state_in.pressure + work_in * GAS_CONSTANT / (spec.c_v * state_in.volume);
    GasState::new(p_out, state_in.volume)
}

/// Instantaneous relaxation onto the isotherm of temperature `theta` at
/// fixed volume; the energy difference is exchanged as heat.
pub fn thermal_contact(spec: &GasSpec, state_in: &GasState, theta: f64) -> Result<GasState> {
    if !(theta > 0.0) || !theta.is_finite() {
        return Err(Error::InvalidReservoir(format!("isotherm temperature {theta} must be > 0")));
    }
    GasState::new(spec.isotherm_pressure(theta, state_in.volume), state_in.volume)
}
