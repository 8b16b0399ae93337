//! `Q`-partitions `A^ℓ(Q)`, piecewise-linear toggles, rowmotion and
//! hyperplane promotion.
//!
//! The virtual bottom and top are never stored; they enter only through
//! `Δ` (0 when `x` is minimal) and `∇` (`ℓ` when `x` is maximal).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::conventions::{LayerOrder, Sweep};
use crate::error::{Error, Result};
use crate::poset::Poset;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QPartition {
    values: Vec<u16>,
}

impl QPartition {
    pub fn from_values(values: Vec<u16>) -> Self {
        QPartition { values }
    }

    pub fn values(&self) -> &[u16] {
        &self.values
    }

    pub fn value(&self, x: usize) -> u16 {
        self.values[x]
    }

    pub fn into_values(self) -> Vec<u16> {
        self.values
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionDoc {
    pub values: Vec<u16>,
    pub ell: usize,
    #[serde(default)]
    pub poset_ref: String,
}

/// A sequence of toggle layers applied first to last. Elements inside one
/// layer share no cover, so their toggles commute.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToggleSchedule {
    layers: Vec<Vec<usize>>,
}

impl ToggleSchedule {
    pub fn new(layers: Vec<Vec<usize>>) -> Self {
        ToggleSchedule { layers }
    }

    /// Groups elements by `key` and orders the groups by key.
    pub fn by_key(keys: &[i64], sweep: Sweep) -> Self {
        let mut groups: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for (x, &k) in keys.iter().enumerate() {
            groups.entry(k).or_default().push(x);
        }
        let mut layers: Vec<Vec<usize>> = groups.into_values().collect();
        if sweep == Sweep::Descending {
            layers.reverse();
        }
        ToggleSchedule { layers }
    }

    pub fn layers(&self) -> &[Vec<usize>] {
        &self.layers
    }

    pub fn reversed(&self) -> Self {
        ToggleSchedule {
            layers: self.layers.iter().rev().cloned().collect(),
        }
    }

    /// Fails if some layer contains both ends of a cover.
    pub fn check_commuting(&self, poset: &Poset) -> Result<()> {
        let mut layer_of = vec![usize::MAX; poset.len()];
        for (i, layer) in self.layers.iter().enumerate() {
            for &x in layer {
                layer_of[x] = i;
            }
        }
        match poset
            .covers()
            .iter()
            .find(|&&(a, b)| layer_of[a] != usize::MAX && layer_of[a] == layer_of[b])
        {
            Some(&(a, b)) => Err(Error::InvalidProjection(format!(
                "cover ({a}, {b}) lies inside one toggle layer"
            ))),
            None => Ok(()),
        }
    }
}

/// An order- and rank-preserving map `π: Q → Z^d`: every cover steps by a
/// positive unit vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeProjection {
    image: Vec<Vec<i64>>,
}

impl LatticeProjection {
    pub fn new(poset: &Poset, image: Vec<Vec<i64>>) -> Result<Self> {
        if image.len() != poset.len() {
            return Err(Error::InvalidProjection(format!(
                "{} images for {} elements",
                image.len(),
                poset.len()
            )));
        }
        let dim = image.first().map_or(0, Vec::len);
        if image.iter().any(|v| v.len() != dim) {
            return Err(Error::InvalidProjection(
                "images have mixed dimensions".into(),
            ));
        }
        for &(a, b) in poset.covers() {
            let steps: Vec<i64> = image[b].iter().zip(&image[a]).map(|(y, x)| y - x).collect();
            let unit = steps.iter().filter(|&&d| d == 1).count() == 1
                && steps.iter().all(|&d| d == 0 || d == 1);
            if !unit {
                return Err(Error::InvalidProjection(format!(
                    "cover ({a}, {b}) maps to step {steps:?}, not a unit vector"
                )));
            }
        }
        Ok(LatticeProjection { image })
    }

    /// The coordinate embedding of a poset that carries coordinates.
    pub fn identity(poset: &Poset) -> Result<Self> {
        let coords = poset.coords().ok_or_else(|| {
            Error::InvalidProjection(format!("{} has no coordinates", poset.name()))
        })?;
        Self::new(poset, coords.to_vec())
    }

    pub fn dimension(&self) -> usize {
        self.image.first().map_or(0, Vec::len)
    }

    pub fn image(&self, x: usize) -> &[i64] {
        &self.image[x]
    }

    /// `⟨π(x), v⟩` for every element.
    pub fn heights(&self, v: &[i64]) -> Result<Vec<i64>> {
        if v.len() != self.dimension() || v.iter().any(|&e| e != 1 && e != -1) {
            return Err(Error::InvalidProjection(format!(
                "direction {v:?} is not a ±1 vector of length {}",
                self.dimension()
            )));
        }
        Ok(self
            .image
            .iter()
            .map(|p| p.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Hyperplane layers `T^i = ∏ {τ_x : ⟨π(x), v⟩ = i}` in evaluation
    /// order. Only hyperplanes meeting the image appear.
    pub fn hyperplane_schedule(&self, v: &[i64], order: LayerOrder) -> Result<ToggleSchedule> {
        let heights = self.heights(v)?;
        let sweep = match order {
            LayerOrder::RightmostFirst => Sweep::Descending,
            LayerOrder::LeftmostFirst => Sweep::Ascending,
        };
        Ok(ToggleSchedule::by_key(&heights, sweep))
    }
}

/// The set `A^ℓ(Q)` with its toggle operations.
#[derive(Clone, Debug)]
pub struct PartitionSpace {
    poset: Poset,
    ell: u16,
    order: Vec<usize>,
}

impl PartitionSpace {
    pub fn new(poset: Poset, ell: usize) -> Result<Self> {
        let ell = u16::try_from(ell)
            .map_err(|_| Error::InvalidPartition(format!("ℓ = {ell} exceeds {}", u16::MAX)))?;
        Ok(PartitionSpace {
            order: poset.linear_extension(),
            poset,
            ell,
        })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn ell(&self) -> usize {
        usize::from(self.ell)
    }

    pub fn check(&self, sigma: &QPartition) -> Result<()> {
        if sigma.values.len() != self.poset.len() {
            return Err(Error::InvalidPartition(format!(
                "expected {} values, found {}",
                self.poset.len(),
                sigma.values.len()
            )));
        }
        if let Some(x) = sigma.values.iter().position(|&v| v > self.ell) {
            return Err(Error::InvalidPartition(format!(
                "value {} at {x} exceeds ℓ = {}",
                sigma.values[x], self.ell
            )));
        }
        if let Some(&(a, b)) = self
            .poset
            .covers()
            .iter()
            .find(|&&(a, b)| sigma.values[a] > sigma.values[b])
        {
            return Err(Error::InvalidPartition(format!(
                "not order-preserving on cover ({a}, {b})"
            )));
        }
        Ok(())
    }

    pub fn is_valid(&self, sigma: &QPartition) -> bool {
        self.check(sigma).is_ok()
    }

    pub fn constant(&self, value: u16) -> QPartition {
        QPartition {
            values: vec![value.min(self.ell); self.poset.len()],
        }
    }

    pub fn for_each(&self, cap: usize, mut visit: impl FnMut(&QPartition)) -> Result<usize> {
        let mut sigma = self.constant(0);
        let mut count = 0;
        self.fill(0, &mut sigma, &mut count, cap, &mut visit)?;
        Ok(count)
    }

    pub fn enumerate(&self, cap: usize) -> Result<Vec<QPartition>> {
        let mut out = Vec::new();
        self.for_each(cap, |s| out.push(s.clone()))?;
        Ok(out)
    }

    fn fill(
        &self,
        step: usize,
        sigma: &mut QPartition,
        count: &mut usize,
        cap: usize,
        visit: &mut dyn FnMut(&QPartition),
    ) -> Result<()> {
        if step == self.order.len() {
            if *count >= cap {
                return Err(Error::CapExceeded {
                    what: format!("A^{}({})", self.ell, self.poset.name()),
                    cap,
                });
            }
            *count += 1;
            visit(sigma);
            return Ok(());
        }
        let x = self.order[step];
        let floor = self.below(sigma, x);
        for v in floor..=self.ell {
            sigma.values[x] = v;
            self.fill(step + 1, sigma, count, cap, visit)?;
        }
        Ok(())
    }

    /// `∇_σ(x)`: minimum over upper covers, `ℓ` at the top.
    pub fn above(&self, sigma: &QPartition, x: usize) -> u16 {
        self.poset
            .upper_covers(x)
            .iter()
            .map(|&u| sigma.values[u])
            .min()
            .unwrap_or(self.ell)
    }

    /// `Δ_σ(x)`: maximum over lower covers, 0 at the bottom.
    pub fn below(&self, sigma: &QPartition, x: usize) -> u16 {
        self.poset
            .lower_covers(x)
            .iter()
            .map(|&d| sigma.values[d])
            .max()
            .unwrap_or(0)
    }

    pub fn toggle_in_place(&self, sigma: &mut QPartition, x: usize) {
        // exact on valid input; saturation only guards malformed partitions
        let v = u32::from(self.above(sigma, x)) + u32::from(self.below(sigma, x));
        sigma.values[x] = v
            .saturating_sub(u32::from(sigma.values[x]))
            .min(u32::from(u16::MAX)) as u16;
    }

    pub fn toggle(&self, sigma: &QPartition, x: usize) -> QPartition {
        let mut s = sigma.clone();
        self.toggle_in_place(&mut s, x);
        s
    }

    /// Toggles in the given sequence, first element first.
    pub fn toggle_sequence(&self, sigma: &QPartition, xs: &[usize]) -> QPartition {
        let mut s = sigma.clone();
        for &x in xs {
            self.toggle_in_place(&mut s, x);
        }
        s
    }

    /// `Row`: toggles from the top of a linear extension downward.
    pub fn rowmotion(&self, sigma: &QPartition) -> QPartition {
        let mut s = sigma.clone();
        for &x in self.order.iter().rev() {
            self.toggle_in_place(&mut s, x);
        }
        s
    }

    /// `Row` computed along a caller-supplied linear extension.
    pub fn rowmotion_along(&self, sigma: &QPartition, extension: &[usize]) -> QPartition {
        let mut s = sigma.clone();
        for &x in extension.iter().rev() {
            self.toggle_in_place(&mut s, x);
        }
        s
    }

    pub fn rowmotion_inverse(&self, sigma: &QPartition) -> QPartition {
        self.toggle_sequence(sigma, &self.order)
    }

    pub fn apply_schedule(&self, sigma: &QPartition, schedule: &ToggleSchedule) -> QPartition {
        let mut s = sigma.clone();
        for layer in schedule.layers() {
            for &x in layer {
                self.toggle_in_place(&mut s, x);
            }
        }
        s
    }

    /// `χ_S(σ) = Σ_{x ∈ S} σ(x)`.
    pub fn chi(&self, sigma: &QPartition, subset: &[usize]) -> i64 {
        subset.iter().map(|&x| i64::from(sigma.values[x])).sum()
    }

    /// `{σ'(x) : σ' = g^i(σ), 0 ≤ i < count}` for `g` given by `schedule`,
    /// sorted.
    pub fn dist(
        &self,
        sigma: &QPartition,
        x: usize,
        schedule: &ToggleSchedule,
        count: usize,
    ) -> Vec<u16> {
        let mut s = sigma.clone();
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            out.push(s.values[x]);
            s = self.apply_schedule(&s, schedule);
        }
        out.sort_unstable();
        out
    }

    pub fn to_doc(&self, sigma: &QPartition) -> PartitionDoc {
        PartitionDoc {
            values: sigma.values.clone(),
            ell: self.ell(),
            poset_ref: self.poset.name().to_string(),
        }
    }

    pub fn from_doc(&self, doc: &PartitionDoc) -> Result<QPartition> {
        if doc.ell != self.ell() {
            return Err(Error::InvalidPartition(format!(
                "document has ℓ = {} but the space has ℓ = {}",
                doc.ell, self.ell
            )));
        }
        let s = QPartition::from_values(doc.values.clone());
        self.check(&s)?;
        Ok(s)
    }
}

/// `χ_S` on partitions, with `S` a multiset of elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionStatistic {
    pub elements: Vec<usize>,
}

impl PartitionStatistic {
    pub fn evaluate(&self, space: &PartitionSpace, sigma: &QPartition) -> i64 {
        space.chi(sigma, &self.elements)
    }

    /// Parses `+`-separated terms: `chi:all`, `chi:x;y;…`, `antipodal:x`.
    /// An element is an index or dotted coordinates such as `1.2.1`.
    pub fn parse(spec: &str, poset: &Poset) -> Result<Self> {
        let err = |reason: &str| Error::StatisticSpec {
            spec: spec.to_string(),
            reason: reason.to_string(),
        };
        let element = |s: &str| -> Result<usize> {
            let s = s.trim();
            let x = if s.contains('.') {
                let coord: Vec<i64> = s
                    .split('.')
                    .map(|c| c.parse().map_err(|_| err("bad coordinate")))
                    .collect::<Result<_>>()?;
                poset
                    .element_at(&coord)
                    .ok_or_else(|| err("no element at these coordinates"))?
            } else {
                s.parse().map_err(|_| err("bad element index"))?
            };
            if x >= poset.len() {
                return Err(err("element out of range"));
            }
            Ok(x)
        };
        let mut elements = Vec::new();
        for term in spec.split('+') {
            let (head, rest) = term
                .trim()
                .split_once(':')
                .ok_or_else(|| err("missing `:`"))?;
            match head {
                "chi" if rest == "all" => elements.extend(0..poset.len()),
                "chi" => {
                    for x in rest.split(';') {
                        elements.push(element(x)?);
                    }
                }
                "antipodal" => {
                    let x = element(rest)?;
                    elements.push(x);
                    elements.push(poset.antipode(x)?);
                }
                _ => return Err(err("unknown statistic")),
            }
        }
        Ok(PartitionStatistic { elements })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{build_poset, chain, vee};

    fn space(spec: &str, ell: usize) -> PartitionSpace {
        PartitionSpace::new(build_poset(spec).unwrap(), ell).unwrap()
    }

    fn orbit_sizes(all: &[QPartition], g: impl Fn(&QPartition) -> QPartition) -> Vec<usize> {
        let mut seen = std::collections::HashSet::new();
        let mut sizes = Vec::new();
        for t in all {
            if !seen.insert(t.clone()) {
                continue;
            }
            let mut u = g(t);
            let mut n = 1;
            while &u != t {
                seen.insert(u.clone());
                u = g(&u);
                n += 1;
            }
            sizes.push(n);
        }
        sizes.sort_unstable();
        sizes
    }

    #[test]
    fn counts() {
        for ell in 0..5 {
            assert_eq!(space("chain:1", ell).enumerate(100).unwrap().len(), ell + 1);
        }
        assert_eq!(space("prod:2x2x2", 2).enumerate(1000).unwrap().len(), 168);
        for spec in ["V", "prod:2x3", "triangle:3", "staircase:3", "propeller:1"] {
            let p = build_poset(spec).unwrap();
            let ideals = p.order_ideals(10_000).unwrap().len();
            let s = PartitionSpace::new(p, 1).unwrap();
            assert_eq!(s.enumerate(10_000).unwrap().len(), ideals, "{spec}");
        }
        assert!(space("prod:2x2x2", 2).enumerate(100).is_err());
    }

    #[test]
    fn toggle_examples() {
        let s = PartitionSpace::new(chain(2), 3).unwrap();
        let sigma = QPartition::from_values(vec![0, 2]);
        assert_eq!(s.toggle(&sigma, 0).values(), &[2, 2]);
        for t in s.enumerate(100).unwrap() {
            for x in 0..2 {
                assert_eq!(s.toggle(&s.toggle(&t, x), x), t);
            }
        }
    }

    #[test]
    fn rowmotion_on_two_chain() {
        let s = PartitionSpace::new(chain(2), 1).unwrap();
        let mut sigma = s.constant(0);
        let mut seen = vec![sigma.values().to_vec()];
        for _ in 0..3 {
            sigma = s.rowmotion(&sigma);
            seen.push(sigma.values().to_vec());
        }
        assert_eq!(seen, vec![vec![0, 0], vec![1, 1], vec![0, 1], vec![0, 0]]);
    }

    #[test]
    fn rowmotion_inverse_and_validity() {
        let s = PartitionSpace::new(vee().product(&chain(2)), 2).unwrap();
        let all = s.enumerate(10_000).unwrap();
        for sigma in &all {
            let r = s.rowmotion(sigma);
            assert!(s.is_valid(&r));
            assert_eq!(&s.rowmotion_inverse(&r), sigma);
        }
        assert!(orbit_sizes(&all, |t| s.rowmotion(t))
            .iter()
            .all(|n| 8 % n == 0));
    }

    #[test]
    fn commuting_toggles() {
        let s = space("prod:2x2", 2);
        let all = s.enumerate(1000).unwrap();
        let p = s.poset();
        for x in 0..p.len() {
            for y in 0..p.len() {
                let related = p.upper_covers(x).contains(&y) || p.lower_covers(x).contains(&y);
                if x == y || related {
                    continue;
                }
                for t in &all {
                    assert_eq!(s.toggle_sequence(t, &[x, y]), s.toggle_sequence(t, &[y, x]));
                }
            }
        }
    }

    #[test]
    fn projection_validation() {
        let p = build_poset("prod:2x2").unwrap();
        assert!(LatticeProjection::identity(&p).is_ok());
        let bad = vec![vec![0, 0], vec![0, 2], vec![1, 0], vec![1, 1]];
        assert!(LatticeProjection::new(&p, bad).is_err());
        assert!(LatticeProjection::identity(&vee()).is_err());
        let pi = LatticeProjection::identity(&p).unwrap();
        assert!(pi.heights(&[1, 0]).is_err());
        assert!(pi.heights(&[1]).is_err());
    }

    #[test]
    fn hyperplane_layers_commute_and_cover_everything() {
        let p = build_poset("prod:2x3").unwrap();
        let pi = LatticeProjection::identity(&p).unwrap();
        for v in [[1, 1], [1, -1], [-1, 1], [-1, -1]] {
            let sched = pi
                .hyperplane_schedule(&v, LayerOrder::RightmostFirst)
                .unwrap();
            sched.check_commuting(&p).unwrap();
            let total: usize = sched.layers().iter().map(Vec::len).sum();
            assert_eq!(total, p.len());
        }
        let bad = ToggleSchedule::new(vec![vec![0, 1]]);
        assert!(bad.check_commuting(&p).is_err());
    }

    #[test]
    fn all_minus_direction_is_conjugate_to_rowmotion() {
        let s = space("prod:2x3", 2);
        let pi = LatticeProjection::identity(s.poset()).unwrap();
        let sched = pi
            .hyperplane_schedule(&[-1, -1], LayerOrder::RightmostFirst)
            .unwrap();
        let all = s.enumerate(10_000).unwrap();
        let a = orbit_sizes(&all, |t| s.rowmotion(t));
        let b = orbit_sizes(&all, |t| s.apply_schedule(t, &sched));
        assert_eq!(a, b);
    }

    #[test]
    fn dist_and_chi() {
        let s = space("prod:2x2", 2);
        let sigma = s.constant(0);
        let sched = ToggleSchedule::new(vec![vec![0]]);
        // toggling the minimum of the zero partition gives 0 + 0 - 0
        assert_eq!(s.dist(&sigma, 0, &sched, 3), vec![0, 0, 0]);
        let sigma = s.constant(2);
        assert_eq!(s.chi(&sigma, &[0, 3]), 4);
        assert_eq!(s.dist(&sigma, 0, &sched, 4).len(), 4);
    }

    #[test]
    fn doc_round_trip() {
        let s = space("V", 3);
        let sigma = QPartition::from_values(vec![1, 2, 3]);
        let doc = s.to_doc(&sigma);
        assert_eq!(doc.poset_ref, "V");
        assert_eq!(s.from_doc(&doc).unwrap(), sigma);
        let bad = PartitionDoc {
            values: vec![3, 2, 3],
            ..doc
        };
        assert!(s.from_doc(&bad).is_err());
    }

    #[test]
    fn statistic_specs() {
        let p = crate::poset::product_of_chains(&[2, 2]);
        let space = PartitionSpace::new(p.clone(), 2).unwrap();
        let s = QPartition::from_values(vec![2, 1, 1, 0]);
        let all = PartitionStatistic::parse("chi:all", &p).unwrap();
        assert_eq!(all.evaluate(&space, &s), 4);
        let anti = PartitionStatistic::parse("antipodal:1.1", &p).unwrap();
        assert_eq!(anti.elements, vec![0, 3]);
        assert_eq!(
            PartitionStatistic::parse("chi:1;2+chi:3", &p)
                .unwrap()
                .evaluate(&space, &s),
            2
        );
        for bad in ["chi:9", "chi:3.3", "foo:1", "chi"] {
            assert!(PartitionStatistic::parse(bad, &p).is_err(), "{bad}");
        }
    }
}
