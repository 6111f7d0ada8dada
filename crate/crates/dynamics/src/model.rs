//! System description: which pairs interact, how the potential is split
//! into fast and slow parts, and optional per-particle external fields.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::DynamicsError;
use crate::potential::{ExternalField, PairPotential};

/// Label assigning an interaction to the fast part `V1` or slow part `V2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Split {
    Fast,
    Slow,
}

/// Selector for force-type evaluations: the full potential or one part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Subset {
    Full,
    Fast,
    Slow,
}

impl Subset {
    pub fn includes(self, split: Split) -> bool {
        matches!(
            (self, split),
            (Subset::Full, _) | (Subset::Fast, Split::Fast) | (Subset::Slow, Split::Slow)
        )
    }

    /// External fields count toward the slow part.
    pub fn includes_external(self) -> bool {
        matches!(self, Subset::Full | Subset::Slow)
    }
}

impl std::fmt::Display for Subset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Subset::Full => write!(f, "FULL"),
            Subset::Fast => write!(f, "FAST"),
            Subset::Slow => write!(f, "SLOW"),
        }
    }
}

/// One active pair: its potential law and its split label.
#[derive(Clone)]
pub struct PairInteraction {
    pub potential: Arc<dyn PairPotential>,
    pub split: Split,
}

/// Interaction structure over `n` particles.
///
/// Pairs are stored under normalized `(i, j)` keys with `i < j`, so the
/// assignment is symmetric by construction and iteration order is fixed,
/// which keeps all summations deterministic.
#[derive(Clone)]
pub struct SystemModel<const D: usize> {
    n: usize,
    pairs: BTreeMap<(usize, usize), PairInteraction>,
    externals: Vec<Option<Arc<dyn ExternalField<D>>>>,
}

impl<const D: usize> SystemModel<D> {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            pairs: BTreeMap::new(),
            externals: vec![None; n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Activate (or replace) the pair `(i, j)` with a potential and split
    /// label. Self-pairs and out-of-range indices are rejected.
    pub fn set_pair(
        &mut self,
        i: usize,
        j: usize,
        potential: Arc<dyn PairPotential>,
        split: Split,
    ) -> Result<(), DynamicsError> {
        if i == j {
            return Err(DynamicsError::InvalidPair {
                i,
                j,
                reason: "self-pair",
            });
        }
        if i >= self.n || j >= self.n {
            return Err(DynamicsError::InvalidPair {
                i,
                j,
                reason: "particle index out of range",
            });
        }
        let key = (i.min(j), i.max(j));
        self.pairs.insert(key, PairInteraction { potential, split });
        Ok(())
    }

    pub fn pair(&self, i: usize, j: usize) -> Option<&PairInteraction> {
        self.pairs.get(&(i.min(j), i.max(j)))
    }

    /// Active pairs in ascending `(i, j)` order.
    pub fn pairs(&self) -> impl Iterator<Item = ((usize, usize), &PairInteraction)> {
        self.pairs.iter().map(|(&k, v)| (k, v))
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    /// Relabel every active pair with the given split.
    pub fn relabel_all_pairs(&mut self, split: Split) {
        for interaction in self.pairs.values_mut() {
            interaction.split = split;
        }
    }

    pub fn set_external(
        &mut self,
        i: usize,
        field: Arc<dyn ExternalField<D>>,
    ) -> Result<(), DynamicsError> {
        if i >= self.n {
            return Err(DynamicsError::ParticleOutOfRange { index: i, n: self.n });
        }
        self.externals[i] = Some(field);
        Ok(())
    }

    pub fn set_external_all(&mut self, field: Arc<dyn ExternalField<D>>) {
        for slot in &mut self.externals {
            *slot = Some(field.clone());
        }
    }

    pub fn external(&self, i: usize) -> Option<&Arc<dyn ExternalField<D>>> {
        self.externals.get(i).and_then(|e| e.as_ref())
    }

    pub fn has_external(&self) -> bool {
        self.externals.iter().any(|e| e.is_some())
    }
}
