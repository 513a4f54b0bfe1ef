//! States of systems.
//!
//! Leaf states are either gas points `(p, V)` or reservoir energies; the
//! state of a composite is the ordered list of its leaves' states, aligned
//! with the composite's canonical leaf order.

use crate::gas::GasState;
use crate::numeric::canonical_eq;

#[derive(Debug, Clone, PartialEq)]
pub enum State {
    Gas(GasState),
    /// A reservoir's state is its internal energy in J.
    Reservoir(f64),
    /// States of a composite's leaves, in the composite's canonical order.
    Composite(Vec<State>),
}

impl State {
    /// Equality under the canonical float encoding, the notion used for
    /// cyclicity and process composition.
    pub fn canonical_eq(&self, other: &State) -> bool {
        match (self, other) {
            (State::Gas(a), State::Gas(b)) => a.canonical_eq(b),
            (State::Reservoir(a), State::Reservoir(b)) => canonical_eq(*a, *b),
            (State::Composite(a), State::Composite(b)) => {
                a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.canonical_eq(y))
            }
            _ => false,
        }
    }

    pub fn as_gas(&self) -> Option<&GasState> {
        match self {
            State::Gas(g) => Some(g),
            _ => None,
        }
    }

    pub fn as_reservoir_energy(&self) -> Option<f64> {
        match self {
            State::Reservoir(e) => Some(*e),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_eq_tolerates_rounding_noise() {
        let a = State::Reservoir(0.1 + 0.2);
        let b = State::Reservoir(0.3);
        assert!(a.canonical_eq(&b));
        assert!(!a.canonical_eq(&State::Reservoir(0.300001)));
    }

    #[test]
    fn different_variants_never_compare_equal() {
        let g = State::Gas(GasState::new(1.0, 1.0).unwrap());
        assert!(!g.canonical_eq(&State::Reservoir(1.0)));
    }

    #[test]
    fn composite_states_compare_leafwise() {
        let a = State::Composite(vec![State::Reservoir(1.0), State::Reservoir(2.0)]);
        let b = State::Composite(vec![State::Reservoir(1.0), State::Reservoir(2.0 + 1e-15)]);
        assert!(a.canonical_eq(&b));
        let short = State::Composite(vec![State::Reservoir(1.0)]);
        assert!(!a.canonical_eq(&short));
    }
}
