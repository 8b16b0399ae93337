//! Restriction functions `R: P → finite label sets`.
//!
//! Sets are kept sorted. Pruning to consistency is a closure operator, so the
//! result does not depend on the order in which elements are visited.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::Poset;

/// Labels are arbitrary integers; nothing assumes they start at 1.
pub type Label = i32;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionFunction {
    sets: Vec<Vec<Label>>,
    #[serde(default)]
    consistent: bool,
}

impl RestrictionFunction {
    /// Raw label sets, not yet pruned.
    pub fn from_sets(mut sets: Vec<Vec<Label>>) -> Self {
        for s in &mut sets {
            s.sort_unstable();
            s.dedup();
        }
        RestrictionFunction {
            sets,
            consistent: false,
        }
    }

    /// `R_α^β`: `R(p) = {α(p), …, β(p)}` pruned to consistency.
    pub fn from_bounds(poset: &Poset, alpha: &[Label], beta: &[Label]) -> Result<Self> {
        if alpha.len() != poset.len() || beta.len() != poset.len() {
            return Err(Error::InvalidRestriction(format!(
                "bounds have lengths {}/{} but poset has {} elements",
                alpha.len(),
                beta.len(),
                poset.len()
            )));
        }
        if let Some(p) = (0..poset.len()).find(|&p| alpha[p] > beta[p]) {
            return Err(Error::InvalidRestriction(format!(
                "lower bound {} exceeds upper bound {} at element {p}",
                alpha[p], beta[p]
            )));
        }
        let sets = alpha
            .iter()
            .zip(beta)
            .map(|(&lo, &hi)| (lo..=hi).collect())
            .collect();
        Self::from_sets(sets).make_consistent(poset)
    }

    /// `R^q`: global bounds `1..=q`.
    pub fn from_global_bound(poset: &Poset, q: Label) -> Result<Self> {
        let n = poset.len();
        if q < 1 {
            return Err(Error::InvalidRestriction(format!("global bound {q} < 1")));
        }
        Self::from_bounds(poset, &vec![1; n], &vec![q; n])
    }

    /// `R^β`: lower bound 1 and per-element upper flags.
    pub fn from_flags(poset: &Poset, beta: &[Label]) -> Result<Self> {
        Self::from_bounds(poset, &vec![1; poset.len()], beta)
    }

    /// The flag `β(i, j) = b + 2i − 1` on `[a] × [b]`.
    pub fn type_a_flag(poset: &Poset) -> Result<Self> {
        let dims = poset
            .chain_dims()
            .filter(|d| d.len() == 2)
            .ok_or_else(|| Error::NotProductOfChains(poset.name().to_string()))?;
        let b = dims[1];
        let coords = poset.coords().expect("chain_dims implies coords");
        let beta: Vec<Label> = coords.iter().map(|c| (b + 2 * c[0] - 1) as Label).collect();
        Self::from_flags(poset, &beta)
    }

    /// Fixpoint pruning: drop `k` from `R(p)` when an upper cover has no
    /// label above `k` or a lower cover has no label below `k`.
    pub fn make_consistent(mut self, poset: &Poset) -> Result<Self> {
        if self.sets.len() != poset.len() {
            return Err(Error::InvalidRestriction(format!(
                "{} label sets for {} elements",
                self.sets.len(),
                poset.len()
            )));
        }
        let order = poset.linear_extension();
        loop {
            let mut changed = false;
            for &p in &order {
                let ceiling = poset
                    .upper_covers(p)
                    .iter()
                    .filter_map(|&u| self.sets[u].last().copied())
                    .min();
                let floor = poset
                    .lower_covers(p)
                    .iter()
                    .filter_map(|&d| self.sets[d].first().copied())
                    .max();
                let set = &mut self.sets[p];
                let before = set.len();
                set.retain(|&k| ceiling.is_none_or(|c| k < c) && floor.is_none_or(|f| k > f));
                if set.is_empty() {
                    return Err(Error::InconsistentRestriction { element: p });
                }
                changed |= set.len() != before;
            }
            if !changed {
                break;
            }
        }
        self.consistent = true;
        Ok(self)
    }

    pub fn is_consistent(&self) -> bool {
        self.consistent
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[Vec<Label>] {
        &self.sets
    }

    pub fn set(&self, p: usize) -> &[Label] {
        &self.sets[p]
    }

    pub fn contains(&self, p: usize, k: Label) -> bool {
        self.sets[p].binary_search(&k).is_ok()
    }

    pub fn min_label(&self, p: usize) -> Label {
        self.sets[p][0]
    }

    pub fn max_label(&self, p: usize) -> Label {
        *self.sets[p].last().expect("label sets are nonempty")
    }

    /// `R(p)_{>k}`: the smallest label of `R(p)` larger than `k`.
    pub fn successor(&self, p: usize, k: Label) -> Option<Label> {
        let set = &self.sets[p];
        set.get(set.partition_point(|&x| x <= k)).copied()
    }

    /// `R(p)_{<k}`: the largest label of `R(p)` smaller than `k`.
    pub fn predecessor(&self, p: usize, k: Label) -> Option<Label> {
        let set = &self.sets[p];
        set.partition_point(|&x| x < k)
            .checked_sub(1)
            .map(|i| set[i])
    }

    /// `R(p)*`: `R(p)` with its largest element removed.
    pub fn truncate_max(&self, p: usize) -> &[Label] {
        let set = &self.sets[p];
        &set[..set.len().saturating_sub(1)]
    }

    /// Smallest and largest label over all elements.
    pub fn label_range(&self) -> (Label, Label) {
        let lo = self.sets.iter().map(|s| s[0]).min().unwrap_or(0);
        let hi = self
            .sets
            .iter()
            .filter_map(|s| s.last().copied())
            .max()
            .unwrap_or(0);
        (lo, hi)
    }

    /// Whether every set is a run of consecutive integers.
    pub fn is_interval(&self) -> bool {
        self.sets
            .iter()
            .all(|s| s.windows(2).all(|w| w[1] == w[0] + 1))
    }
}
