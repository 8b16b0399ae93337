//! P-strict labelings of `P × [ℓ]`, Bender–Knuth involutions and promotion.
//!
//! A labeling stores its labels row-major by `(p, i)`, with the layer index
//! `i` running over `0..ℓ`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::conventions::Sweep;
use crate::error::{Error, Result};
use crate::poset::{chain, Poset};
use crate::restriction::{Label, RestrictionFunction};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PStrictLabeling {
    labels: Vec<Label>,
}

impl PStrictLabeling {
    pub fn from_labels(labels: Vec<Label>) -> Self {
        PStrictLabeling { labels }
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn into_labels(self) -> Vec<Label> {
        self.labels
    }
}

/// JSON form of a labeling: row-major `(p, i)` labels plus context.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingDoc {
    pub labels: Vec<Label>,
    pub ell: usize,
    #[serde(default)]
    pub restriction_ref: String,
}

/// The set `L_{P×[ℓ]}(R)` together with the operations acting on it.
#[derive(Clone, Debug)]
pub struct LabelingSpace {
    poset: Poset,
    ell: usize,
    restriction: RestrictionFunction,
    order: Vec<usize>,
    involution_labels: Vec<Label>,
}

impl LabelingSpace {
    pub fn new(poset: Poset, ell: usize, restriction: RestrictionFunction) -> Result<Self> {
        if ell == 0 {
            return Err(Error::InvalidLabeling("ℓ must be at least 1".into()));
        }
        if restriction.len() != poset.len() {
            return Err(Error::InvalidRestriction(format!(
                "{} label sets for {} elements",
                restriction.len(),
                poset.len()
            )));
        }
        if !restriction.is_consistent() {
            return Err(Error::InvalidRestriction(
                "restriction function has not been pruned to consistency".into(),
            ));
        }
        let involution_labels: BTreeSet<Label> = (0..poset.len())
            .flat_map(|p| restriction.truncate_max(p).iter().copied())
            .collect();
        Ok(LabelingSpace {
            order: poset.linear_extension(),
            poset,
            ell,
            restriction,
            involution_labels: involution_labels.into_iter().collect(),
        })
    }

    /// `L_{P×[ℓ]}(R^q)`.
    pub fn with_global_bound(poset: Poset, ell: usize, q: Label) -> Result<Self> {
        let r = RestrictionFunction::from_global_bound(&poset, q)?;
        Self::new(poset, ell, r)
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn restriction(&self) -> &RestrictionFunction {
        &self.restriction
    }

    /// Labels `k` for which `ρ_k` can act nontrivially, ascending.
    pub fn involution_labels(&self) -> &[Label] {
        &self.involution_labels
    }

    pub fn cell(&self, p: usize, i: usize) -> usize {
        p * self.ell + i
    }

    pub fn label(&self, f: &PStrictLabeling, p: usize, i: usize) -> Label {
        f.labels[p * self.ell + i]
    }

    pub fn fiber<'a>(&self, f: &'a PStrictLabeling, p: usize) -> &'a [Label] {
        &f.labels[p * self.ell..(p + 1) * self.ell]
    }

    /// Checks the three defining conditions, naming the first violation.
    pub fn check(&self, f: &PStrictLabeling) -> Result<()> {
        let n = self.poset.len();
        if f.labels.len() != n * self.ell {
            return Err(Error::InvalidLabeling(format!(
                "expected {} labels, found {}",
                n * self.ell,
                f.labels.len()
            )));
        }
        for p in 0..n {
            for i in 0..self.ell {
                let v = self.label(f, p, i);
                if !self.restriction.contains(p, v) {
                    return Err(Error::InvalidLabeling(format!(
                        "label {v} at ({p}, {i}) is not in R({p})"
                    )));
                }
                if i > 0 && self.label(f, p, i - 1) > v {
                    return Err(Error::InvalidLabeling(format!(
                        "fiber {p} decreases at layer {i}"
                    )));
                }
            }
        }
        for &(lo, hi) in self.poset.covers() {
            for i in 0..self.ell {
                if self.label(f, lo, i) >= self.label(f, hi, i) {
                    return Err(Error::InvalidLabeling(format!(
                        "layer {i} is not strictly increasing on cover ({lo}, {hi})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self, f: &PStrictLabeling) -> bool {
        self.check(f).is_ok()
    }

    /// Every fiber at its smallest allowed label.
    pub fn minimal(&self) -> PStrictLabeling {
        let labels = (0..self.poset.len())
            .flat_map(|p| std::iter::repeat_n(self.restriction.min_label(p), self.ell))
            .collect();
        PStrictLabeling { labels }
    }

    /// Every fiber at its largest allowed label.
    pub fn maximal(&self) -> PStrictLabeling {
        let labels = (0..self.poset.len())
            .flat_map(|p| std::iter::repeat_n(self.restriction.max_label(p), self.ell))
            .collect();
        PStrictLabeling { labels }
    }

    /// Streams every labeling exactly once in a deterministic order.
    /// Fails once more than `cap` labelings have been produced.
    pub fn for_each(&self, cap: usize, mut visit: impl FnMut(&PStrictLabeling)) -> Result<usize> {
        let mut f = PStrictLabeling {
            labels: vec![0; self.poset.len() * self.ell],
        };
        let mut count = 0;
        self.fill(0, &mut f, &mut count, cap, &mut visit)?;
        Ok(count)
    }

    pub fn enumerate(&self, cap: usize) -> Result<Vec<PStrictLabeling>> {
        let mut out = Vec::new();
        self.for_each(cap, |f| out.push(f.clone()))?;
        Ok(out)
    }

    fn fill(
        &self,
        step: usize,
        f: &mut PStrictLabeling,
        count: &mut usize,
        cap: usize,
        visit: &mut dyn FnMut(&PStrictLabeling),
    ) -> Result<()> {
        let n = self.poset.len();
        if step == n * self.ell {
            if *count >= cap {
                return Err(Error::CapExceeded {
                    what: format!("labelings of {} x [{}]", self.poset.name(), self.ell),
                    cap,
                });
            }
            *count += 1;
            visit(f);
            return Ok(());
        }
        let (i, p) = (step / n, self.order[step % n]);
        let mut floor = Label::MIN;
        if i > 0 {
            floor = f.labels[self.cell(p, i - 1)];
        }
        for &d in self.poset.lower_covers(p) {
            floor = floor.max(f.labels[self.cell(d, i)] + 1);
        }
        let set = self.restriction.set(p);
        for &k in &set[set.partition_point(|&x| x < floor)..] {
            f.labels[self.cell(p, i)] = k;
            self.fill(step + 1, f, count, cap, visit)?;
        }
        Ok(())
    }

    /// Label `f(p, i) = k` is free for `ρ_k`: raising it to `R(p)_{>k}`
    /// keeps layer `i` strict.
    fn raisable_to(&self, f: &PStrictLabeling, p: usize, i: usize, next: Label) -> bool {
        self.poset
            .upper_covers(p)
            .iter()
            .all(|&u| self.label(f, u, i) > next)
    }

    /// Label `f(p, i) = R(p)_{>k}` is free for `ρ_k`: lowering it to `k`
    /// keeps layer `i` strict.
    fn lowerable_to(&self, f: &PStrictLabeling, p: usize, i: usize, k: Label) -> bool {
        self.poset
            .lower_covers(p)
            .iter()
            .all(|&d| self.label(f, d, i) < k)
    }

    /// The `k`-th Bender–Knuth involution `ρ_k`.
    pub fn bender_knuth(&self, f: &PStrictLabeling, k: Label) -> PStrictLabeling {
        let mut g = f.clone();
        for p in 0..self.poset.len() {
            if !self.restriction.contains(p, k) {
                continue;
            }
            let Some(next) = self.restriction.successor(p, k) else {
                continue;
            };
            let fiber = self.fiber(f, p);
            // free k's form a suffix of the k-block and free next's a prefix of
            // the next-block, so the free region is one contiguous run
            let mut start = None;
            let (mut low, mut high) = (0usize, 0usize);
            for (i, &v) in fiber.iter().enumerate() {
                let free = (v == k && self.raisable_to(f, p, i, next))
                    || (v == next && self.lowerable_to(f, p, i, k));
                if free {
                    start.get_or_insert(i);
                    if v == k {
                        low += 1;
                    } else {
                        high += 1;
                    }
                }
            }
            let Some(start) = start else {
                continue;
            };
            let base = self.cell(p, start);
            for (j, slot) in g.labels[base..base + low + high].iter_mut().enumerate() {
                *slot = if j < high { k } else { next };
            }
        }
        debug_assert!(self.is_valid(&g), "ρ_{k} produced an invalid labeling");
        g
    }

    /// `Pro = ⋯ ∘ ρ₃ ∘ ρ₂ ∘ ρ₁`.
    pub fn promotion(&self, f: &PStrictLabeling) -> PStrictLabeling {
        self.promotion_with(f, Sweep::Ascending)
    }

    pub fn promotion_with(&self, f: &PStrictLabeling, sweep: Sweep) -> PStrictLabeling {
        let mut g = f.clone();
        let mut apply = |k: Label| g = self.bender_knuth(&g, k);
        match sweep {
            Sweep::Ascending => self.involution_labels.iter().copied().for_each(&mut apply),
            Sweep::Descending => self
                .involution_labels
                .iter()
                .rev()
                .copied()
                .for_each(&mut apply),
        }
        g
    }

    /// `Pro^{-1}`: the involutions in the opposite order.
    pub fn promotion_inverse(&self, f: &PStrictLabeling) -> PStrictLabeling {
        self.promotion_with(f, Sweep::Descending)
    }

    /// Length of the promotion orbit through `f`.
    pub fn orbit_length(&self, f: &PStrictLabeling) -> usize {
        let mut g = self.promotion(f);
        let mut len = 1;
        while &g != f {
            g = self.promotion(&g);
            len += 1;
        }
        len
    }

    /// `Dist(f, (p, i))`: labels seen at one cell over `count` promotions
    /// (default: the orbit length), sorted.
    pub fn dist(
        &self,
        f: &PStrictLabeling,
        p: usize,
        i: usize,
        count: Option<usize>,
    ) -> Vec<Label> {
        let count = count.unwrap_or_else(|| self.orbit_length(f));
        let mut g = f.clone();
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            out.push(self.label(&g, p, i));
            g = self.promotion(&g);
        }
        out.sort_unstable();
        out
    }

    /// Binary content `Con(f) = (a_1, …, a_q)` with `a_v = 1` iff the label
    /// value `v` occurs somewhere in `f`.
    pub fn content(&self, f: &PStrictLabeling, q: Label) -> Vec<u8> {
        let mut word = vec![0u8; q.max(0) as usize];
        for &v in &f.labels {
            if (1..=q).contains(&v) {
                word[(v - 1) as usize] = 1;
            }
        }
        word
    }

    /// Cell `(p, i)` of the antipode in `[a] × [b] × [ℓ]`.
    pub fn antipodal_cell(&self, p: usize, i: usize) -> Result<(usize, usize)> {
        Ok((self.poset.antipode(p)?, self.ell - 1 - i))
    }

    pub fn to_doc(&self, f: &PStrictLabeling, restriction_ref: &str) -> LabelingDoc {
        LabelingDoc {
            labels: f.labels.clone(),
            ell: self.ell,
            restriction_ref: restriction_ref.to_string(),
        }
    }

    pub fn from_doc(&self, doc: &LabelingDoc) -> Result<PStrictLabeling> {
        if doc.ell != self.ell {
            return Err(Error::InvalidLabeling(format!(
                "document has ℓ = {} but the space has ℓ = {}",
                doc.ell, self.ell
            )));
        }
        let f = PStrictLabeling::from_labels(doc.labels.clone());
        self.check(&f)?;
        Ok(f)
    }
}

/// `SSYT_k(a × b)` realized as `L_{[a]×[b]}(R^k)`: element `x−1` of the
/// chain is row `x`, layer `j−1` is column `j`.
pub fn ssyt_space(rows: usize, cols: usize, max_entry: Label) -> Result<LabelingSpace> {
    let p = chain(rows).with_name(format!("rows:{rows}"));
    LabelingSpace::with_global_bound(p, cols, max_entry)
}

/// Integer-valued statistics on labelings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LabelingStatistic {
    /// `χ_S`: sum of labels over the listed `(p, i)` cells.
    Chi(Vec<(usize, usize)>),
    /// `#B`: number of labels in fiber `p` exceeding `threshold`.
    BoxCount {
        fiber: usize,
        threshold: Label,
    },
    /// `ξ(f, (x₁, x₂), b) = Σ_{k=1}^{b} k · #{j : f(x₁, x₂, j) = x₁ + x₂ + k − 1}`,
    /// with `base = x₁ + x₂`.
    Xi {
        fiber: usize,
        base: Label,
        depth: Label,
    },
    Sum(Vec<LabelingStatistic>),
}

impl LabelingStatistic {
    pub fn evaluate(&self, space: &LabelingSpace, f: &PStrictLabeling) -> i64 {
        match self {
            Self::Chi(cells) => cells
                .iter()
                .map(|&(p, i)| i64::from(space.label(f, p, i)))
                .sum(),
            Self::BoxCount { fiber, threshold } => space
                .fiber(f, *fiber)
                .iter()
                .filter(|&&v| v > *threshold)
                .count() as i64,
            Self::Xi { fiber, base, depth } => space
                .fiber(f, *fiber)
                .iter()
                .map(|&v| {
                    let k = v - base + 1;
                    if (1..=*depth).contains(&k) {
                        i64::from(k)
                    } else {
                        0
                    }
                })
                .sum(),
            Self::Sum(terms) => terms.iter().map(|t| t.evaluate(space, f)).sum(),
        }
    }

    /// `χ` over a cell and its antipode.
    pub fn antipodal_pair(space: &LabelingSpace, p: usize, i: usize) -> Result<Self> {
        let (q, j) = space.antipodal_cell(p, i)?;
        Ok(Self::Chi(vec![(p, i), (q, j)]))
    }

    /// `ξ` for the element `p = (x₁, x₂)` of a two-factor product.
    pub fn xi(space: &LabelingSpace, p: usize, depth: Label) -> Result<Self> {
        let c = space
            .poset()
            .coord(p)
            .filter(|c| c.len() == 2)
            .ok_or_else(|| Error::NotProductOfChains(space.poset().name().into()))?;
        Ok(Self::Xi {
            fiber: p,
            base: (c[0] + c[1]) as Label,
            depth,
        })
    }

    /// Parses `+`-separated terms:
    /// `chi:all`, `chi:p@i;p@i;…` (layer `i` is 1-based), `antipodal:p@i`,
    /// `bc:p:d`, `xi:p:b`.
    pub fn parse(spec: &str, space: &LabelingSpace) -> Result<Self> {
        let err = |reason: &str| Error::StatisticSpec {
            spec: spec.to_string(),
            reason: reason.to_string(),
        };
        let n = space.poset().len();
        let ell = space.ell();
        let cell = |s: &str| -> Result<(usize, usize)> {
            let (p, i) = s
                .split_once('@')
                .ok_or_else(|| err("cells are written p@i"))?;
            let p: usize = p.trim().parse().map_err(|_| err("bad element index"))?;
            let i: usize = i.trim().parse().map_err(|_| err("bad layer index"))?;
            if p >= n || i == 0 || i > ell {
                return Err(err("cell out of range"));
            }
            Ok((p, i - 1))
        };
        let mut terms = Vec::new();
        for term in spec.split('+') {
            let (head, rest) = term
                .trim()
                .split_once(':')
                .ok_or_else(|| err("missing `:`"))?;
            let stat = match head {
                "chi" if rest == "all" => {
                    Self::Chi((0..n).flat_map(|p| (0..ell).map(move |i| (p, i))).collect())
                }
                "chi" => Self::Chi(rest.split(';').map(cell).collect::<Result<_>>()?),
                "antipodal" => {
                    let (p, i) = cell(rest)?;
                    Self::antipodal_pair(space, p, i)?
                }
                "bc" | "xi" => {
                    let (p, v) = rest
                        .split_once(':')
                        .ok_or_else(|| err("expected p:value"))?;
                    let p: usize = p.parse().map_err(|_| err("bad element index"))?;
                    let v: Label = v.parse().map_err(|_| err("bad integer"))?;
                    if p >= n {
                        return Err(err("element out of range"));
                    }
                    if head == "bc" {
                        Self::BoxCount {
                            fiber: p,
                            threshold: v,
                        }
                    } else {
                        Self::xi(space, p, v)?
                    }
                }
                _ => return Err(err("unknown statistic")),
            };
            terms.push(stat);
        }
        Ok(if terms.len() == 1 {
            terms.pop().expect("one term")
        } else {
            Self::Sum(terms)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{build_poset, vee};

    fn single(q: Label, ell: usize) -> LabelingSpace {
        LabelingSpace::with_global_bound(chain(1), ell, q).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        for q in 1..6 {
            assert_eq!(single(q, 1).enumerate(1000).unwrap().len(), q as usize);
        }
        for ell in 1..5 {
            assert_eq!(single(2, ell).enumerate(1000).unwrap().len(), ell + 1);
        }
        let sq = LabelingSpace::with_global_bound(build_poset("prod:2x2").unwrap(), 2, 4).unwrap();
        assert_eq!(sq.enumerate(1000).unwrap().len(), 20);
    }

    #[test]
    fn enumeration_is_valid_and_distinct() {
        let s = LabelingSpace::with_global_bound(vee(), 2, 5).unwrap();
        let all = s.enumerate(10_000).unwrap();
        assert!(all.iter().all(|f| s.is_valid(f)));
        let distinct: BTreeSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), all.len());
        assert!(s.enumerate(3).is_err());
    }

    #[test]
    fn lone_label_cycles() {
        let s = single(3, 1);
        let f = PStrictLabeling::from_labels(vec![1]);
        assert_eq!(s.bender_knuth(&f, 1).labels(), &[2]);
        let seq: Vec<Label> = std::iter::successors(Some(f.clone()), |g| Some(s.promotion(g)))
            .take(4)
            .map(|g| g.labels()[0])
            .collect();
        assert_eq!(seq, vec![1, 3, 2, 1]);
        assert_eq!(s.dist(&f, 0, 0, Some(3)), vec![1, 2, 3]);
        assert_eq!(s.orbit_length(&f), 3);
    }

    #[test]
    fn unconstrained_fiber_swaps_counts() {
        let s = single(3, 3);
        let f = PStrictLabeling::from_labels(vec![1, 1, 2]);
        assert_eq!(s.bender_knuth(&f, 1).labels(), &[1, 2, 2]);
        assert_eq!(s.bender_knuth(&f, 2).labels(), &[1, 1, 3]);
    }

    #[test]
    fn involution_and_inverse() {
        let s = LabelingSpace::with_global_bound(build_poset("prod:2x2").unwrap(), 2, 5).unwrap();
        for f in s.enumerate(10_000).unwrap() {
            for &k in s.involution_labels() {
                let g = s.bender_knuth(&f, k);
                assert!(s.is_valid(&g));
                assert_eq!(s.bender_knuth(&g, k), f);
            }
            assert_eq!(s.promotion_inverse(&s.promotion(&f)), f);
        }
    }

    #[test]
    fn content_examples() {
        let s = LabelingSpace::with_global_bound(chain(2), 2, 3).unwrap();
        let f = s.minimal();
        assert_eq!(f.labels(), &[1, 1, 2, 2]);
        let all = LabelingStatistic::parse("chi:all", &s).unwrap();
        assert_eq!(all.evaluate(&s, &f), 6);
        assert_eq!(s.content(&f, 3), vec![1, 1, 0]);
    }

    #[test]
    fn content_shifts_under_promotion() {
        for spec in ["chain:2", "V", "prod:2x2"] {
            let p = build_poset(spec).unwrap();
            let n = p.rank_profile().top_rank as Label;
            for q in n + 1..n + 4 {
                let s = LabelingSpace::with_global_bound(p.clone(), 2, q).unwrap();
                for f in s.enumerate(100_000).unwrap() {
                    let mut c = s.content(&f, q);
                    c.rotate_left(1);
                    assert_eq!(s.content(&s.promotion(&f), q), c, "{spec} q={q}");
                }
            }
        }
    }

    #[test]
    fn max_labels_on_square_products() {
        for (a, b, ell) in [(2usize, 2usize, 2usize), (2, 3, 2), (3, 3, 1)] {
            let p = build_poset(&format!("prod:{a}x{b}")).unwrap();
            let s = LabelingSpace::with_global_bound(p, ell, (a + b) as Label).unwrap();
            for f in s.enumerate(100_000).unwrap() {
                for x in 0..s.poset().len() {
                    let c = s.poset().coord(x).unwrap();
                    let base = (c[0] + c[1]) as Label;
                    for i in 0..ell {
                        let v = s.label(&f, x, i);
                        assert!(v == base - 1 || v == base);
                    }
                }
            }
        }
    }

    #[test]
    fn statistic_parsing() {
        let s = ssyt_space(2, 2, 4).unwrap();
        let f = s.minimal();
        assert_eq!(
            LabelingStatistic::parse("bc:1:1", &s)
                .unwrap()
                .evaluate(&s, &f),
            2
        );
        assert_eq!(
            LabelingStatistic::parse("chi:0@1;1@2", &s)
                .unwrap()
                .evaluate(&s, &f),
            3
        );
        let sum = LabelingStatistic::parse("bc:0:0+bc:1:4", &s).unwrap();
        assert_eq!(sum.evaluate(&s, &f), 2);
        for bad in ["", "chi:5@1", "chi:0@0", "bc:0", "zz:1", "xi:0:1"] {
            assert!(LabelingStatistic::parse(bad, &s).is_err(), "{bad}");
        }
    }

    #[test]
    fn xi_counts_weighted_labels() {
        let p = build_poset("prod:2x2").unwrap();
        let s = LabelingSpace::with_global_bound(p, 2, 5).unwrap();
        let x = s.poset().element_at(&[1, 1]).unwrap();
        let xi = LabelingStatistic::xi(&s, x, 2).unwrap();
        // fiber (1,1) holds labels 1,1 in the minimal labeling: base 2, k = 0
        assert_eq!(xi.evaluate(&s, &s.minimal()), 0);
        // maximal labeling puts 3 = base + 1 there, weight k = 2
        assert_eq!(xi.evaluate(&s, &s.maximal()), 4);
    }

    #[test]
    fn doc_round_trip() {
        let s = LabelingSpace::with_global_bound(vee(), 2, 4).unwrap();
        let f = s.maximal();
        let doc = s.to_doc(&f, "q:4");
        assert_eq!(s.from_doc(&doc).unwrap(), f);
        let bad = LabelingDoc {
            labels: vec![1; 6],
            ..doc
        };
        assert!(s.from_doc(&bad).is_err());
    }
}
