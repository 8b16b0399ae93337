//! Finite posets stored as dense `0..n` indices with explicit cover lists.
//!
//! Every poset family used by the dynamics (chains, products of chains, the
//! three-element `V`, triangles, shifted staircases and iterated order-ideal
//! lattices) is produced by [`build_poset`] from a short spec string.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default element-count cap for order-ideal enumeration and `J^k` towers.
pub const DEFAULT_IDEAL_CAP: usize = 1_000_000;

/// A finite poset given by its cover relation.
///
/// Values are immutable after construction. The transitive closure is
/// computed lazily on first comparison query.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "PosetDoc", into = "PosetDoc")]
pub struct Poset {
    name: String,
    covers: Vec<(usize, usize)>,
    coords: Option<Vec<Vec<i64>>>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
    closure: OnceLock<Vec<Vec<u64>>>,
}

/// Serialized form of a [`Poset`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PosetDoc {
    pub name: String,
    pub element_count: usize,
    pub covers: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coords: Option<Vec<Vec<i64>>>,
}

impl TryFrom<PosetDoc> for Poset {
    type Error = Error;

    fn try_from(doc: PosetDoc) -> Result<Self> {
        Poset::new(doc.name, doc.element_count, doc.covers, doc.coords)
    }
}

impl From<Poset> for PosetDoc {
    fn from(p: Poset) -> Self {
        PosetDoc {
            element_count: p.len(),
            name: p.name,
            covers: p.covers,
            coords: p.coords,
        }
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poset")
            .field("name", &self.name)
            .field("element_count", &self.len())
            .field("covers", &self.covers)
            .finish()
    }
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.len() == other.len() && self.covers == other.covers && self.coords == other.coords
    }
}

impl Eq for Poset {}

/// Rank data of a poset. Minimal elements have rank 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankProfile {
    pub is_graded: bool,
    /// Length of the longest chain from a minimal element up to each element.
    pub rank_of: Vec<usize>,
    pub top_rank: usize,
}

/// A downward-closed subset of a poset.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderIdeal {
    members: Vec<bool>,
}

impl OrderIdeal {
    pub fn contains(&self, x: usize) -> bool {
        self.members[x]
    }

    pub fn size(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn members(&self) -> &[bool] {
        &self.members
    }

    pub fn elements(&self) -> Vec<usize> {
        (0..self.members.len())
            .filter(|&x| self.members[x])
            .collect()
    }

    /// Builds an ideal from a membership vector, checking downward closure.
    pub fn from_members(poset: &Poset, members: Vec<bool>) -> Result<Self> {
        if members.len() != poset.len() {
            return Err(Error::InvalidPoset(format!(
                "ideal membership has length {} but poset has {} elements",
                members.len(),
                poset.len()
            )));
        }
        for &(lo, hi) in poset.covers() {
            if members[hi] && !members[lo] {
                return Err(Error::InvalidPoset(format!(
                    "subset contains {hi} but not {lo} below it"
                )));
            }
        }
        Ok(OrderIdeal { members })
    }

    pub fn is_subset_of(&self, other: &OrderIdeal) -> bool {
        self.members
            .iter()
            .zip(&other.members)
            .all(|(&a, &b)| !a || b)
    }
}

impl Poset {
    /// Builds a poset from covers, validating that the relation is acyclic,
    /// transitively reduced and (when coordinates are given) consistent with
    /// the componentwise order on coordinates.
    pub fn new(
        name: impl Into<String>,
        element_count: usize,
        covers: Vec<(usize, usize)>,
        coords: Option<Vec<Vec<i64>>>,
    ) -> Result<Self> {
        let name = name.into();
        if element_count == 0 {
            return Err(Error::InvalidPoset(format!("`{name}` has no elements")));
        }
        for &(lo, hi) in &covers {
            if lo >= element_count || hi >= element_count {
                return Err(Error::InvalidPoset(format!(
                    "cover ({lo}, {hi}) references an element outside 0..{element_count}"
                )));
            }
            if lo == hi {
                return Err(Error::InvalidPoset(format!("self-cover on element {lo}")));
            }
        }
        if let Some(c) = &coords {
            if c.len() != element_count {
                return Err(Error::InvalidPoset(format!(
                    "{} coordinate tuples for {element_count} elements",
                    c.len()
                )));
            }
        }
        let poset = Self::from_parts(name, element_count, covers, coords);
        if poset.covers.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidPoset("duplicate cover pair".into()));
        }
        if topological_order(&poset.upper, &poset.lower).is_none() {
            return Err(Error::InvalidPoset(format!(
                "cover relation of `{}` contains a cycle",
                poset.name
            )));
        }
        if let Some((lo, hi)) = poset.redundant_cover() {
            return Err(Error::InvalidPoset(format!(
                "cover ({lo}, {hi}) is implied by other covers"
            )));
        }
        if !poset.coords_consistent() {
            return Err(Error::InvalidPoset(
                "coordinates disagree with the cover-generated order".into(),
            ));
        }
        Ok(poset)
    }

    /// Internal constructor for builders whose output is correct by construction.
    pub(crate) fn from_parts(
        name: String,
        element_count: usize,
        mut covers: Vec<(usize, usize)>,
        coords: Option<Vec<Vec<i64>>>,
    ) -> Self {
        covers.sort_unstable();
        let mut upper = vec![Vec::new(); element_count];
        let mut lower = vec![Vec::new(); element_count];
        for &(lo, hi) in &covers {
            upper[lo].push(hi);
            lower[hi].push(lo);
        }
        Poset {
            name,
            covers,
            coords,
            upper,
            lower,
            closure: OnceLock::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn len(&self) -> usize {
        self.upper.len()
    }

    pub fn is_empty(&self) -> bool {
        self.upper.is_empty()
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn coords(&self) -> Option<&[Vec<i64>]> {
        self.coords.as_deref()
    }

    pub fn coord(&self, x: usize) -> Option<&[i64]> {
        self.coords.as_ref().map(|c| c[x].as_slice())
    }

    /// Elements covering `x`.
    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper[x]
    }

    /// Elements covered by `x`.
    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower[x]
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.lower[x].is_empty())
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.upper[x].is_empty())
            .collect()
    }

    fn closure(&self) -> &Vec<Vec<u64>> {
        self.closure.get_or_init(|| {
            let n = self.len();
            let words = n.div_ceil(64);
            let mut up = vec![vec![0u64; words]; n];
            for &x in self.linear_extension().iter().rev() {
                up[x][x / 64] |= 1 << (x % 64);
                for &y in &self.upper[x] {
                    let (head, tail) = if x < y {
                        let (a, b) = up.split_at_mut(y);
                        (&mut a[x], &b[0])
                    } else {
                        let (a, b) = up.split_at_mut(x);
                        (&mut b[0], &a[y])
                    };
                    for (h, t) in head.iter_mut().zip(tail) {
                        *h |= *t;
                    }
                }
            }
            up
        })
    }

    /// `x ≤ y` in the poset.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.closure()[x][y / 64] >> (y % 64) & 1 == 1
    }

    /// `x < y` in the poset.
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    fn redundant_cover(&self) -> Option<(usize, usize)> {
        for &(lo, hi) in &self.covers {
            if self.upper[lo].iter().any(|&z| z != hi && self.leq(z, hi)) {
                return Some((lo, hi));
            }
        }
        None
    }

    fn coords_consistent(&self) -> bool {
        let Some(coords) = &self.coords else {
            return true;
        };
        let dim = coords[0].len();
        if coords.iter().any(|c| c.len() != dim) {
            return false;
        }
        let below = |a: &[i64], b: &[i64]| a.iter().zip(b).all(|(x, y)| x <= y);
        if self
            .covers
            .iter()
            .any(|&(lo, hi)| !below(&coords[lo], &coords[hi]) || coords[lo] == coords[hi])
        {
            return false;
        }
        // the full pairwise check is quadratic; only run it at desk scale
        if self.len() <= 512 {
            for x in 0..self.len() {
                for y in 0..self.len() {
                    if x != y && below(&coords[x], &coords[y]) != self.leq(x, y) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Deterministic linear extension: among available minimal elements the
    /// smallest index is taken first.
    pub fn linear_extension(&self) -> Vec<usize> {
        topological_order(&self.upper, &self.lower)
            .expect("poset invariant: cover relation is acyclic")
    }

    pub fn rank_profile(&self) -> RankProfile {
        let mut rank_of = vec![0usize; self.len()];
        for &x in &self.linear_extension() {
            for &y in &self.upper[x] {
                rank_of[y] = rank_of[y].max(rank_of[x] + 1);
            }
        }
        let top_rank = rank_of.iter().copied().max().unwrap_or(0);
        let covers_step = self
            .covers
            .iter()
            .all(|&(lo, hi)| rank_of[hi] == rank_of[lo] + 1);
        let maxima_on_top = self
            .maximal_elements()
            .iter()
            .all(|&x| rank_of[x] == top_rank);
        RankProfile {
            is_graded: covers_step && maxima_on_top,
            rank_of,
            top_rank,
        }
    }

    /// Rank data for a poset that must be graded.
    pub fn graded_ranks(&self) -> Result<RankProfile> {
        let profile = self.rank_profile();
        if profile.is_graded {
            Ok(profile)
        } else {
            Err(Error::NotGraded(self.name.clone()))
        }
    }

    /// The dual poset (all covers reversed). Coordinates are dropped.
    pub fn dual(&self) -> Poset {
        let covers = self.covers.iter().map(|&(a, b)| (b, a)).collect();
        Poset::from_parts(format!("dual({})", self.name), self.len(), covers, None)
    }

    /// Cartesian product `self × other`; element `(x, y)` has index
    /// `x * other.len() + y`.
    pub fn product(&self, other: &Poset) -> Poset {
        let m = other.len();
        let mut covers =
            Vec::with_capacity(self.len() * other.covers.len() + self.covers.len() * m);
        for x in 0..self.len() {
            for &(y1, y2) in &other.covers {
                covers.push((x * m + y1, x * m + y2));
            }
        }
        for &(x1, x2) in &self.covers {
            for y in 0..m {
                covers.push((x1 * m + y, x2 * m + y));
            }
        }
        let coords = match (&self.coords, &other.coords) {
            (Some(a), Some(b)) => Some(
                a.iter()
                    .flat_map(|ca| b.iter().map(move |cb| [ca.as_slice(), cb].concat()))
                    .collect(),
            ),
            _ => None,
        };
        Poset::from_parts(
            format!("{} x {}", self.name, other.name),
            self.len() * m,
            covers,
            coords,
        )
    }

    /// All order ideals, sorted by size and then by membership vector.
    pub fn order_ideals(&self, cap: usize) -> Result<Vec<OrderIdeal>> {
        let order = self.linear_extension();
        let mut members = vec![false; self.len()];
        let mut out = Vec::new();
        self.ideal_dfs(&order, 0, &mut members, &mut out, cap)?;
        out.sort_by(|a, b| {
            a.size()
                .cmp(&b.size())
                .then_with(|| b.members.cmp(&a.members))
        });
        Ok(out)
    }

    fn ideal_dfs(
        &self,
        order: &[usize],
        depth: usize,
        members: &mut Vec<bool>,
        out: &mut Vec<OrderIdeal>,
        cap: usize,
    ) -> Result<()> {
        if depth == order.len() {
            if out.len() >= cap {
                return Err(Error::CapExceeded {
                    what: format!("J({})", self.name),
                    cap,
                });
            }
            out.push(OrderIdeal {
                members: members.clone(),
            });
            return Ok(());
        }
        let x = order[depth];
        self.ideal_dfs(order, depth + 1, members, out, cap)?;
        if self.lower[x].iter().all(|&y| members[y]) {
            members[x] = true;
            self.ideal_dfs(order, depth + 1, members, out, cap)?;
            members[x] = false;
        }
        Ok(())
    }

    /// The distributive lattice `J(P)` ordered by containment, together with
    /// the ideals in element order.
    pub fn ideal_lattice(&self, cap: usize) -> Result<(Vec<OrderIdeal>, Poset)> {
        let ideals = self.order_ideals(cap)?;
        let index: HashMap<&[bool], usize> = ideals
            .iter()
            .enumerate()
            .map(|(i, ideal)| (ideal.members.as_slice(), i))
            .collect();
        let mut covers = Vec::new();
        let mut grown = vec![false; self.len()];
        for (i, ideal) in ideals.iter().enumerate() {
            for x in 0..self.len() {
                if ideal.members[x] || !self.lower[x].iter().all(|&y| ideal.members[y]) {
                    continue;
                }
                grown.copy_from_slice(&ideal.members);
                grown[x] = true;
                covers.push((i, index[grown.as_slice()]));
            }
        }
        let lattice = Poset::from_parts(format!("J({})", self.name), ideals.len(), covers, None);
        Ok((ideals, lattice))
    }

    /// Chain lengths `(a_1, …, a_k)` when the coordinates form the full box
    /// `[a_1] × ⋯ × [a_k]`.
    pub fn chain_dims(&self) -> Option<Vec<i64>> {
        let coords = self.coords.as_ref()?;
        let dim = coords[0].len();
        let mut dims = vec![0i64; dim];
        for c in coords {
            for (d, &v) in dims.iter_mut().zip(c) {
                if v < 1 {
                    return None;
                }
                *d = (*d).max(v);
            }
        }
        let volume: i64 = dims.iter().product();
        (volume == coords.len() as i64).then_some(dims)
    }

    /// Index of the element with the given coordinates.
    pub fn element_at(&self, coord: &[i64]) -> Option<usize> {
        self.coords
            .as_ref()?
            .iter()
            .position(|c| c.as_slice() == coord)
    }

    /// Antipode in a product of chains: `(a_1+1−i_1, …, a_k+1−i_k)`.
    pub fn antipode(&self, x: usize) -> Result<usize> {
        let dims = self
            .chain_dims()
            .ok_or_else(|| Error::NotProductOfChains(self.name.clone()))?;
        let c = &self.coords.as_ref().expect("chain_dims implies coords")[x];
        let target: Vec<i64> = dims.iter().zip(c).map(|(a, i)| a + 1 - i).collect();
        self.element_at(&target)
            .ok_or_else(|| Error::NotProductOfChains(self.name.clone()))
    }

    /// Whether `map` (indexed by elements of `self`) is a bijection onto
    /// `other` carrying covers exactly onto covers.
    pub fn is_cover_isomorphism(&self, other: &Poset, map: &[usize]) -> bool {
        if map.len() != self.len() || self.len() != other.len() {
            return false;
        }
        let mut hit = vec![false; other.len()];
        for &y in map {
            if y >= other.len() || std::mem::replace(&mut hit[y], true) {
                return false;
            }
        }
        if self.covers.len() != other.covers.len() {
            return false;
        }
        self.covers
            .iter()
            .all(|&(lo, hi)| other.upper[map[lo]].contains(&map[hi]))
    }

    /// Backtracking isomorphism search over rank-respecting bijections.
    /// Returns a map from elements of `self` to elements of `other`.
    pub fn find_isomorphism(&self, other: &Poset) -> Option<Vec<usize>> {
        if self.len() != other.len() || self.covers.len() != other.covers.len() {
            return None;
        }
        let ra = self.rank_profile().rank_of;
        let rb = other.rank_profile().rank_of;
        let sig = |p: &Poset, r: &[usize], x: usize| (r[x], p.upper[x].len(), p.lower[x].len());
        let order = self.linear_extension();
        let mut map = vec![usize::MAX; self.len()];
        let mut used = vec![false; other.len()];

        fn go(
            a: &Poset,
            b: &Poset,
            order: &[usize],
            depth: usize,
            map: &mut Vec<usize>,
            used: &mut Vec<bool>,
            compatible: &dyn Fn(usize, usize) -> bool,
        ) -> bool {
            let Some(&x) = order.get(depth) else {
                return true;
            };
            for y in 0..b.len() {
                if used[y] || !compatible(x, y) {
                    continue;
                }
                // lower covers of x are already mapped (linear extension order)
                if !a.lower[x].iter().all(|&z| b.lower[y].contains(&map[z])) {
                    continue;
                }
                map[x] = y;
                used[y] = true;
                if go(a, b, order, depth + 1, map, used, compatible) {
                    return true;
                }
                used[y] = false;
                map[x] = usize::MAX;
            }
            false
        }

        let compatible = |x: usize, y: usize| sig(self, &ra, x) == sig(other, &rb, y);
        go(self, other, &order, 0, &mut map, &mut used, &compatible).then_some(map)
    }
}

fn topological_order(upper: &[Vec<usize>], lower: &[Vec<usize>]) -> Option<Vec<usize>> {
    let mut indegree: Vec<usize> = lower.iter().map(Vec::len).collect();
    let mut ready: BinaryHeap<Reverse<usize>> = (0..upper.len())
        .filter(|&x| indegree[x] == 0)
        .map(Reverse)
        .collect();
    let mut out = Vec::with_capacity(upper.len());
    while let Some(Reverse(x)) = ready.pop() {
        out.push(x);
        for &y in &upper[x] {
            indegree[y] -= 1;
            if indegree[y] == 0 {
                ready.push(Reverse(y));
            }
        }
    }
    (out.len() == upper.len()).then_some(out)
}

/// The chain `[n]` with coordinates `1..=n`.
pub fn chain(n: usize) -> Poset {
    let covers = (1..n).map(|i| (i - 1, i)).collect();
    let coords = (1..=n as i64).map(|i| vec![i]).collect();
    Poset::from_parts(format!("chain:{n}"), n, covers, Some(coords))
}

/// The three-element poset with `a ⋖ b` and `a ⋖ c` (indices 0, 1, 2).
pub fn vee() -> Poset {
    Poset::from_parts("V".into(), 3, vec![(0, 1), (0, 2)], None)
}

/// Subposet of `Z^2` under the componentwise order, with unit-step covers.
/// Both families built with this are closed under the needed unit steps, so
/// unit steps are exactly the covers.
fn grid_subposet(name: String, points: Vec<(i64, i64)>) -> Poset {
    let index: HashMap<(i64, i64), usize> =
        points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut covers = Vec::new();
    for (i, &(x, y)) in points.iter().enumerate() {
        for next in [(x + 1, y), (x, y + 1)] {
            if let Some(&j) = index.get(&next) {
                covers.push((i, j));
            }
        }
    }
    let coords = points.iter().map(|&(x, y)| vec![x, y]).collect();
    Poset::from_parts(name, points.len(), covers, Some(coords))
}

/// The triangle `{(i, j) : 1 ≤ i ≤ n, n−i+1 ≤ j ≤ n}` inside `[n] × [n]`.
pub fn triangle(n: usize) -> Poset {
    let n = n as i64;
    let points = (1..=n)
        .flat_map(|i| (n - i + 1..=n).map(move |j| (i, j)))
        .collect();
    grid_subposet(format!("triangle:{n}"), points)
}

/// The shifted staircase `{(x, y) : x ≤ y ∈ [k]}`.
pub fn staircase(k: usize) -> Poset {
    let k = k as i64;
    let points = (1..=k).flat_map(|x| (x..=k).map(move |y| (x, y))).collect();
    grid_subposet(format!("staircase:{k}"), points)
}

/// Product of chains `[a_1] × ⋯ × [a_k]` with 1-based coordinates.
pub fn product_of_chains(dims: &[usize]) -> Poset {
    let mut iter = dims.iter();
    let first = chain(*iter.next().expect("at least one factor"));
    let p = iter.fold(first, |acc, &d| acc.product(&chain(d)));
    let name = format!(
        "prod:{}",
        dims.iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join("x")
    );
    p.with_name(name)
}

/// `J^k(P)`: the order-ideal functor applied `k` times, with an element cap
/// checked at every level.
pub fn ideal_tower(base: &Poset, k: usize, cap: usize) -> Result<Poset> {
    let mut current = base.clone();
    for _ in 0..k {
        current = current.ideal_lattice(cap)?.1;
    }
    Ok(current)
}

fn spec_err(spec: &str, reason: impl Into<String>) -> Error {
    Error::PosetSpec {
        spec: spec.to_string(),
        reason: reason.into(),
    }
}

fn parse_size(spec: &str, s: &str) -> Result<usize> {
    let n: usize = s
        .trim()
        .parse()
        .map_err(|_| spec_err(spec, format!("`{s}` is not a size")))?;
    if n == 0 {
        return Err(spec_err(spec, "size parameters must be at least 1"));
    }
    Ok(n)
}

/// Builds a poset from the spec mini-language:
/// `chain:n`, `prod:a1xa2x…`, `V`, `triangle:n`, `staircase:k`,
/// `J^k:<spec>`, `propeller:k`, `cayley-moufang`, `freudenthal`, and
/// products `A*B*…` of any of these.
pub fn build_poset(spec: &str) -> Result<Poset> {
    build_poset_capped(spec, DEFAULT_IDEAL_CAP)
}

pub fn build_poset_capped(spec: &str, cap: usize) -> Result<Poset> {
    let spec = spec.trim();
    if spec.contains('*') {
        let mut factors = spec.split('*').map(|f| build_poset_capped(f, cap));
        let first = factors.next().expect("split yields at least one piece")?;
        let poset = factors.try_fold(first, |acc, f| f.map(|f| acc.product(&f)))?;
        return Ok(poset.with_name(spec));
    }
    let poset = match spec {
        "V" => vee(),
        "cayley-moufang" => ideal_tower(&product_of_chains(&[3, 2]), 2, cap)?,
        "freudenthal" => ideal_tower(&product_of_chains(&[3, 2]), 3, cap)?,
        _ => {
            let (head, rest) = spec
                .split_once(':')
                .ok_or_else(|| spec_err(spec, "expected `<family>:<parameters>`"))?;
            match head {
                "chain" => chain(parse_size(spec, rest)?),
                "triangle" => triangle(parse_size(spec, rest)?),
                "staircase" => staircase(parse_size(spec, rest)?),
                "propeller" => {
                    ideal_tower(&product_of_chains(&[2, 2]), parse_size(spec, rest)?, cap)?
                }
                "prod" => {
                    let dims = rest
                        .split('x')
                        .map(|s| parse_size(spec, s))
                        .collect::<Result<Vec<_>>>()?;
                    product_of_chains(&dims)
                }
                _ => {
                    let k = match head {
                        "J" => 1,
                        _ => match head.strip_prefix("J^") {
                            Some(k) => parse_size(spec, k)?,
                            None => return Err(spec_err(spec, format!("unknown family `{head}`"))),
                        },
                    };
                    let base = build_poset_capped(rest, cap)
                        .map_err(|e| spec_err(spec, format!("invalid J-tower base: {e}")))?;
                    ideal_tower(&base, k, cap)?
                }
            }
        }
    };
    Ok(poset.with_name(spec))
}

/// The five families of minuscule posets, described explicitly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MinusculeFamily {
    Rectangle { rows: usize, cols: usize },
    Staircase { k: usize },
    Propeller { k: usize },
    CayleyMoufang,
    Freudenthal,
}

impl MinusculeFamily {
    /// Recognizes the spec strings accepted by [`build_poset`] that name a
    /// minuscule poset (`chain:n` counts as the rectangle `[n] × [1]`).
    pub fn from_spec(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        let not = || Error::NotMinuscule(spec.to_string());
        match spec {
            "cayley-moufang" | "J^2:prod:3x2" | "J^2:prod:2x3" => return Ok(Self::CayleyMoufang),
            "freudenthal" | "J^3:prod:3x2" | "J^3:prod:2x3" => return Ok(Self::Freudenthal),
            _ => {}
        }
        let (head, rest) = spec.split_once(':').ok_or_else(not)?;
        let size = |s: &str| s.parse::<usize>().ok().filter(|&n| n > 0).ok_or_else(not);
        match head {
            "chain" => Ok(Self::Rectangle {
                rows: size(rest)?,
                cols: 1,
            }),
            "prod" => {
                let dims = rest.split('x').map(size).collect::<Result<Vec<_>>>()?;
                match dims.as_slice() {
                    [r] => Ok(Self::Rectangle { rows: *r, cols: 1 }),
                    [r, c] => Ok(Self::Rectangle { rows: *r, cols: *c }),
                    _ => Err(not()),
                }
            }
            "staircase" => Ok(Self::Staircase { k: size(rest)? }),
            "propeller" => Ok(Self::Propeller { k: size(rest)? }),
            _ => match head.strip_prefix("J^") {
                Some(k) if rest == "prod:2x2" => Ok(Self::Propeller { k: size(k)? }),
                _ => Err(not()),
            },
        }
    }

    /// Coxeter number of the associated Lie algebra.
    pub fn coxeter_number(&self) -> usize {
        match *self {
            Self::Rectangle { rows, cols } => rows + cols,
            Self::Staircase { k } => 2 * k,
            Self::Propeller { k } => 2 * (k + 2),
            Self::CayleyMoufang => 12,
            Self::Freudenthal => 18,
        }
    }

    pub fn build(&self) -> Result<Poset> {
        match *self {
            Self::Rectangle { rows, cols } => Ok(product_of_chains(&[rows, cols])),
            Self::Staircase { k } => Ok(staircase(k)),
            Self::Propeller { k } => build_poset(&format!("propeller:{k}")),
            Self::CayleyMoufang => build_poset("cayley-moufang"),
            Self::Freudenthal => build_poset("freudenthal"),
        }
    }
}

/// Coxeter number `h` for a minuscule poset spec.
pub fn coxeter_number(spec: &str) -> Result<usize> {
    MinusculeFamily::from_spec(spec).map(|f| f.coxeter_number())
}
