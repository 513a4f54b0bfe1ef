//! System identities and composition.
//!
//! A system is either a single leaf (one gas container, one reservoir) or a
//! composite of several distinct leaves. Composites are kept in canonical
//! form (sorted leaf ids), which makes composition associative and
//! commutative by construction: two composites compare equal exactly when
//! their flattened leaf multisets are equal.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::Error;

static NEXT_LEAF: AtomicU64 = AtomicU64::new(0);

/// Opaque identity of one leaf system instance.
///
/// Two leaves are the same system only if their ids are equal; two
/// reservoirs of the same kind are still distinct instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeafId(u64);

impl LeafId {
    pub(crate) fn fresh() -> Self {
        LeafId(NEXT_LEAF.fetch_add(1, Ordering::Relaxed))
    }
}

impl fmt::Display for LeafId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "leaf#{}", self.0)
    }
}

/// Coarse classification of a system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SystemKind {
    Gas,
    Reservoir,
    Composite,
}

/// A system identity: one leaf, or a composite of at least two distinct
/// leaves, stored flattened and sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SystemId {
    leaves: Vec<LeafId>,
}

impl SystemId {
    /// The system consisting of a single leaf.
    pub fn leaf(id: LeafId) -> Self {
        SystemId { leaves: vec![id] }
    }

    /// Flattened leaves in canonical (sorted) order.
    pub fn leaves(&self) -> &[LeafId] {
        &self.leaves
    }

    pub fn is_composite(&self) -> bool {
        self.leaves.len() >= 2
    }

    pub fn contains(&self, id: LeafId) -> bool {
        self.leaves.binary_search(&id).is_ok()
    }

    /// True when `other`'s leaves are a subset of this system's leaves.
    pub fn contains_all(&self, other: &SystemId) -> bool {
        other.leaves.iter().all(|l| self.contains(*l))
    }
}

impl From<LeafId> for SystemId {
    fn from(id: LeafId) -> Self {
        SystemId::leaf(id)
    }
}

/// Composes two systems into one.
///
/// Flattening is canonical, so `compose(a, b) == compose(b, a)` and
/// re-parenthesization does not change the result. The same leaf instance
/// may not appear on both sides.
pub fn compose(a: &SystemId, b: &SystemId) -> Result<SystemId, Error> {
    let mut leaves = Vec::with_capacity(a.leaves.len() + b.leaves.len());
    let (mut i, mut j) = (0, 0);
    while i < a.leaves.len() && j < b.leaves.len() {
        match a.leaves[i].cmp(&b.leaves[j]) {
            std::cmp::Ordering::Less => {
                leaves.push(a.leaves[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                leaves.push(b.leaves[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => return Err(Error::DistinctInstances),
        }
    }
    leaves.extend_from_slice(&a.leaves[i..]);
    leaves.extend_from_slice(&b.leaves[j..]);
    Ok(SystemId { leaves })
}

/// Composes a whole slice of systems; errors on any shared leaf instance.
pub fn compose_all(systems: &[SystemId]) -> Result<SystemId, Error> {
    let mut iter = systems.iter();
    let first = iter.next().ok_or(Error::EmptyComposition)?;
    let mut acc = first.clone();
    for s in iter {
        acc = compose(&acc, s)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fresh() -> SystemId {
        SystemId::leaf(LeafId::fresh())
    }

    #[test]
    fn compose_is_commutative() {
        let (a, b) = (fresh(), fresh());
        assert_eq!(compose(&a, &b).unwrap(), compose(&b, &a).unwrap());
    }

    #[test]
    fn compose_is_associative() {
        let (a, b, c) = (fresh(), fresh(), fresh());
        let left = compose(&compose(&a, &b).unwrap(), &c).unwrap();
        let right = compose(&a, &compose(&b, &c).unwrap()).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn compose_rejects_shared_instance() {
        let a = fresh();
        assert_eq!(compose(&a, &a), Err(Error::DistinctInstances));
        let b = fresh();
        let ab = compose(&a, &b).unwrap();
        assert_eq!(compose(&ab, &a), Err(Error::DistinctInstances));
    }

    #[test]
    fn composite_has_at_least_two_leaves() {
        let (a, b) = (fresh(), fresh());
        let ab = compose(&a, &b).unwrap();
        assert!(ab.is_composite());
        assert_eq!(ab.leaves().len(), 2);
        assert!(!a.is_composite());
    }
}
