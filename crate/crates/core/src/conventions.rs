//! Composition-order and orientation conventions.
//!
//! The defaults are the conventions under which promotion, toggle-promotion
//! and hyperplane promotion are intertwined by `Φ`. The alternatives exist so
//! the verification suite can show that a flipped convention is detected.

use serde::{Deserialize, Serialize};

/// Direction in which an indexed family of involutions is applied.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Sweep {
    /// Smallest index first, i.e. `⋯ ∘ t₂ ∘ t₁ ∘ t₀` read right to left.
    #[default]
    Ascending,
    Descending,
}

impl Sweep {
    pub fn reversed(self) -> Self {
        match self {
            Sweep::Ascending => Sweep::Descending,
            Sweep::Descending => Sweep::Ascending,
        }
    }
}

/// Orientation of the layer-to-ideal map inside `Φ`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdealOrientation {
    /// `O_i = {(p, k) : k ≥ f(p, i)}`.
    #[default]
    LabelsAtOrAbove,
    /// `O_i = {(p, k) : k < f(p, i)}`; not an order ideal, kept for mutation checks.
    LabelsBelow,
}

/// Evaluation order of the hyperplane product `⋯T^{−1} T^0 T^1⋯`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LayerOrder {
    /// Rightmost factor acts first: hyperplane index descending.
    #[default]
    RightmostFirst,
    /// Leftmost factor acts first: hyperplane index ascending.
    LeftmostFirst,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(default, rename_all = "kebab-case", deny_unknown_fields)]
pub struct Conventions {
    pub promotion: Sweep,
    pub toggle_promotion: Sweep,
    pub hyperplane: LayerOrder,
    pub orientation: IdealOrientation,
}
