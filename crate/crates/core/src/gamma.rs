//! The poset `Γ(P, R)` of pairs `(p, k)` with `k ∈ R(p)*`, the bijection
//! `Φ` from P-strict labelings to `Γ`-partitions, and toggle-promotion.
//!
//! Within a fiber a larger `k` sits lower, so the set
//! `{(p, k) : k ≥ f(p, i)}` is an order ideal for every layer `i`.

use serde::{Deserialize, Serialize};

use crate::conventions::{IdealOrientation, Sweep};
use crate::error::{Error, Result};
use crate::poset::{chain, triangle, OrderIdeal, Poset};
use crate::pstrict::{LabelingSpace, PStrictLabeling};
use crate::qpartition::{LatticeProjection, PartitionSpace, QPartition, ToggleSchedule};
use crate::restriction::{Label, RestrictionFunction};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GammaPoset {
    poset: Poset,
    /// `(p, k)` per element, sorted.
    labels: Vec<(usize, Label)>,
}

impl GammaPoset {
    pub fn new(base: &Poset, r: &RestrictionFunction) -> Result<Self> {
        if !r.is_consistent() || r.len() != base.len() {
            return Err(Error::InvalidRestriction(
                "Γ needs a consistent restriction function on the same poset".into(),
            ));
        }
        let labels: Vec<(usize, Label)> = (0..base.len())
            .flat_map(|p| r.truncate_max(p).iter().map(move |&k| (p, k)))
            .collect();
        let find = |p: usize, k: Label| labels.binary_search(&(p, k)).ok();
        let mut covers = Vec::new();
        for (x, &(p, k)) in labels.iter().enumerate() {
            if let Some(y) = r.successor(p, k).and_then(|next| find(p, next)) {
                covers.push((y, x));
            }
        }
        for &(p1, p2) in base.covers() {
            let set2 = r.set(p2);
            for &k2 in r.truncate_max(p2) {
                let Some(k1) = r.predecessor(p1, k2) else {
                    continue;
                };
                let shadowed = set2
                    .iter()
                    .any(|&k| k > k2 && r.predecessor(p1, k) == Some(k1));
                if shadowed {
                    continue;
                }
                // `find` fails exactly when k1 = max R(p1)
                if let Some(lo) = find(p1, k1) {
                    covers.push((lo, find(p2, k2).expect("k2 ∈ R(p2)*")));
                }
            }
        }
        let poset = Poset::from_parts(
            format!("Gamma({})", base.name()),
            labels.len(),
            covers,
            None,
        );
        Ok(GammaPoset { poset, labels })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[(usize, Label)] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> (usize, Label) {
        self.labels[x]
    }

    pub fn index_of(&self, p: usize, k: Label) -> Option<usize> {
        self.labels.binary_search(&(p, k)).ok()
    }

    /// Every cover changes `k` by exactly one.
    pub fn is_column_adjacent(&self) -> bool {
        self.poset
            .covers()
            .iter()
            .all(|&(a, b)| (self.labels[a].1 - self.labels[b].1).abs() == 1)
    }

    /// Toggle layers `τ_k` keyed by `k`.
    pub fn toggle_promotion_schedule(&self, sweep: Sweep) -> ToggleSchedule {
        let keys: Vec<i64> = self.labels.iter().map(|&(_, k)| i64::from(k)).collect();
        ToggleSchedule::by_key(&keys, sweep)
    }

    /// `π((i, j), k) = (i, j, i + j − k + c − 1)` for `Γ([a] × [b], R)`.
    pub fn three_chains_projection(&self, base: &Poset, c: i64) -> Result<LatticeProjection> {
        if base.chain_dims().is_none_or(|d| d.len() != 2) {
            return Err(Error::NotProductOfChains(base.name().into()));
        }
        let image = self
            .labels
            .iter()
            .map(|&(p, k)| {
                let xy = base.coord(p).expect("product of chains has coordinates");
                vec![xy[0], xy[1], xy[0] + xy[1] - i64::from(k) + c - 1]
            })
            .collect();
        LatticeProjection::new(&self.poset, image)
    }
}

/// `P × [q − n − 1]` for a graded `P` of rank `n`.
pub fn graded_target(base: &Poset, q: Label) -> Result<Poset> {
    let m = graded_height(base, q)?;
    Ok(base.product(&chain(m)))
}

fn graded_height(base: &Poset, q: Label) -> Result<usize> {
    let n = base.graded_ranks()?.top_rank as Label;
    if q < n + 2 {
        return Err(Error::InvalidRestriction(format!(
            "q = {q} leaves P × [q − n − 1] empty for rank n = {n}"
        )));
    }
    Ok((q - n - 1) as usize)
}

/// `(p, k) ↦ (p, q − n + rank(p) − k)` from `Γ(P, R^q)` into
/// `P × [q − n − 1]`, as indices `p·m + (i − 1)`.
pub fn graded_isomorphism(gamma: &GammaPoset, base: &Poset, q: Label) -> Result<Vec<usize>> {
    let m = graded_height(base, q)?;
    let ranks = base.graded_ranks()?;
    let n = ranks.top_rank as Label;
    gamma
        .labels()
        .iter()
        .map(|&(p, k)| {
            let i = q - n + ranks.rank_of[p] as Label - k;
            if !(1..=m as Label).contains(&i) {
                return Err(Error::InvalidRestriction(format!(
                    "({p}, {k}) maps outside P × [{m}]"
                )));
            }
            Ok(p * m + (i - 1) as usize)
        })
        .collect()
}

/// `((i, j), k) ↦ ((i, i + j − k + a − 1), j)` from `Γ([a] × [b], R^β)` with
/// the type-A flag into `⧍_a × [b]`.
pub fn flagged_isomorphism(gamma: &GammaPoset, base: &Poset) -> Result<(Poset, Vec<usize>)> {
    let dims = base
        .chain_dims()
        .filter(|d| d.len() == 2)
        .ok_or_else(|| Error::NotProductOfChains(base.name().into()))?;
    let (a, b) = (dims[0], dims[1]);
    let target = triangle(a as usize).product(&chain(b as usize));
    let map = gamma
        .labels()
        .iter()
        .map(|&(p, k)| {
            let c = base.coord(p).expect("coordinates");
            let (i, j) = (c[0], c[1]);
            target
                .element_at(&[i, i + j - i64::from(k) + a - 1, j])
                .ok_or_else(|| Error::InvalidRestriction(format!("(({i}, {j}), {k}) has no image")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((target, map))
}

/// TogPro on `P × [q − n − 1]`: `τ_k` toggles `(p, i)` with
/// `i = q − n + rank(p) − k`.
pub fn graded_toggle_promotion_schedule(
    base: &Poset,
    q: Label,
    sweep: Sweep,
) -> Result<ToggleSchedule> {
    let m = graded_height(base, q)?;
    let ranks = base.graded_ranks()?;
    let n = ranks.top_rank as i64;
    let keys: Vec<i64> = (0..base.len() * m)
        .map(|x| {
            let (p, i) = (x / m, (x % m + 1) as i64);
            i64::from(q) - n + ranks.rank_of[p] as i64 - i
        })
        .collect();
    Ok(ToggleSchedule::by_key(&keys, sweep))
}

/// `Row^{-1}(P × {1}) ∘ ⋯ ∘ Row^{-1}(P × {m})` on `P × [m]`: slices from
/// the top, each toggled bottom-up.
pub fn slice_schedule(base: &Poset, m: usize) -> ToggleSchedule {
    let order = base.linear_extension();
    let layers = (0..m)
        .rev()
        .flat_map(|j| order.iter().map(move |&p| vec![p * m + j]))
        .collect();
    ToggleSchedule::new(layers)
}

/// `Diff` on `P × [q − n − 1]` read through the hyperplanes `H_k`.
pub fn graded_diff(
    space: &PartitionSpace,
    base: &Poset,
    q: Label,
) -> Result<impl Fn(&QPartition) -> Vec<u8>> {
    let m = graded_height(base, q)? as i64;
    let ranks = base.graded_ranks()?;
    let n = ranks.top_rank as i64;
    let ell = space.ell() as u16;
    let rank_of: Vec<i64> = ranks.rank_of.iter().map(|&r| r as i64).collect();
    let q = i64::from(q);
    Ok(move |sigma: &QPartition| {
        let at = |p: usize, i: i64| -> u16 {
            if i > m {
                ell
            } else if i < 1 {
                0
            } else {
                sigma.value(p * m as usize + (i - 1) as usize)
            }
        };
        (1..=q)
            .map(|k| {
                let differs = rank_of.iter().enumerate().any(|(p, &r)| {
                    let i = q - n + r - k;
                    at(p, i) != at(p, i + 1)
                });
                u8::from(differs)
            })
            .collect()
    })
}

/// `Φ: L_{P×[ℓ]}(R) → A^ℓ(Γ(P, R))` together with the spaces on both sides.
#[derive(Clone, Debug)]
pub struct LabelingBijection {
    labelings: LabelingSpace,
    gamma: GammaPoset,
    partitions: PartitionSpace,
    orientation: IdealOrientation,
}

impl LabelingBijection {
    pub fn new(labelings: LabelingSpace) -> Result<Self> {
        let gamma = GammaPoset::new(labelings.poset(), labelings.restriction())?;
        let partitions = PartitionSpace::new(gamma.poset().clone(), labelings.ell())?;
        Ok(LabelingBijection {
            labelings,
            gamma,
            partitions,
            orientation: IdealOrientation::default(),
        })
    }

    pub fn with_orientation(mut self, orientation: IdealOrientation) -> Self {
        self.orientation = orientation;
        self
    }

    pub fn labelings(&self) -> &LabelingSpace {
        &self.labelings
    }

    pub fn gamma(&self) -> &GammaPoset {
        &self.gamma
    }

    pub fn partitions(&self) -> &PartitionSpace {
        &self.partitions
    }

    fn count_above(&self, f: &PStrictLabeling, p: usize, k: Label) -> usize {
        self.labelings
            .fiber(f, p)
            .iter()
            .filter(|&&v| v > k)
            .count()
    }

    /// `σ(p, k) = #{i : f(p, i) > k}`.
    pub fn phi(&self, f: &PStrictLabeling) -> QPartition {
        let ell = self.labelings.ell();
        let values = self
            .gamma
            .labels()
            .iter()
            .map(|&(p, k)| {
                let above = self.count_above(f, p, k);
                let v = match self.orientation {
                    IdealOrientation::LabelsAtOrAbove => above,
                    IdealOrientation::LabelsBelow => ell - above,
                };
                v as u16
            })
            .collect();
        QPartition::from_values(values)
    }

    /// The multichain `O_1 ⊇ ⋯ ⊇ O_ℓ` with `O_i = {(p, k) : k ≥ f(p, i)}`;
    /// entry `i − 1` holds `O_i`.
    pub fn phi_multichain(&self, f: &PStrictLabeling) -> Result<Vec<OrderIdeal>> {
        (0..self.labelings.ell())
            .map(|i| {
                let members = self
                    .gamma
                    .labels()
                    .iter()
                    .map(|&(p, k)| {
                        let v = self.labelings.label(f, p, i);
                        match self.orientation {
                            IdealOrientation::LabelsAtOrAbove => k >= v,
                            IdealOrientation::LabelsBelow => k < v,
                        }
                    })
                    .collect();
                OrderIdeal::from_members(self.gamma.poset(), members)
            })
            .collect()
    }

    /// `Φ` through the multichain: `σ(x) = #{i : x ∉ O_i}`.
    pub fn phi_via_multichain(&self, f: &PStrictLabeling) -> Result<QPartition> {
        let chain = self.phi_multichain(f)?;
        let values = (0..self.gamma.len())
            .map(|x| chain.iter().filter(|o| !o.contains(x)).count() as u16)
            .collect();
        Ok(QPartition::from_values(values))
    }

    /// `f(p, i) = min{k ∈ R(p) : σ(p, k) ≤ ℓ − i}` with `σ(p, max R(p)) = 0`.
    pub fn phi_inverse(&self, sigma: &QPartition) -> Result<PStrictLabeling> {
        self.partitions.check(sigma)?;
        let ell = self.labelings.ell();
        let r = self.labelings.restriction();
        let n = self.labelings.poset().len();
        let mut labels = Vec::with_capacity(n * ell);
        for p in 0..n {
            for i in 1..=ell {
                let k = r
                    .set(p)
                    .iter()
                    .copied()
                    .find(|&k| {
                        let s = self
                            .gamma
                            .index_of(p, k)
                            .map_or(0, |x| usize::from(sigma.value(x)));
                        s <= ell - i
                    })
                    .expect("σ(p, max R(p)) = 0 always qualifies");
                labels.push(k);
            }
        }
        let f = PStrictLabeling::from_labels(labels);
        self.labelings.check(&f)?;
        Ok(f)
    }

    /// `τ_k`: toggles every `(p, k)`.
    pub fn tau(&self, sigma: &QPartition, k: Label) -> QPartition {
        let mut s = sigma.clone();
        for (x, &(_, kk)) in self.gamma.labels().iter().enumerate() {
            if kk == k {
                self.partitions.toggle_in_place(&mut s, x);
            }
        }
        s
    }

    pub fn toggle_promotion(&self, sigma: &QPartition) -> QPartition {
        self.toggle_promotion_with(sigma, Sweep::Ascending)
    }

    pub fn toggle_promotion_with(&self, sigma: &QPartition, sweep: Sweep) -> QPartition {
        self.partitions
            .apply_schedule(sigma, &self.gamma.toggle_promotion_schedule(sweep))
    }

    /// `Diff(σ) = (a_1, …, a_q)`, with `a_k = 0` iff `σ(p, k − 1) = σ(p, k)`
    /// for every `p`, reading `σ(p, j) = ℓ` below `min R(p)` and `0` from
    /// `max R(p)` on.
    pub fn diff(&self, sigma: &QPartition, q: Label) -> Vec<u8> {
        let r = self.labelings.restriction();
        let ell = self.labelings.ell() as u16;
        let extended = |p: usize, j: Label| -> u16 {
            if j < r.min_label(p) {
                return ell;
            }
            if j >= r.max_label(p) {
                return 0;
            }
            let set = r.set(p);
            let k = set[set.partition_point(|&x| x <= j) - 1];
            sigma.value(self.gamma.index_of(p, k).expect("k ∈ R(p)*"))
        };
        (1..=q)
            .map(|k| {
                let n = self.labelings.poset().len();
                u8::from((0..n).any(|p| extended(p, k - 1) != extended(p, k)))
            })
            .collect()
    }
}
