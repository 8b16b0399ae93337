//! Orbit wiring for the concrete families and the complement laws relating
//! value distributions at antipodal positions.

use std::fmt::Debug;

use rayon::prelude::*;
use serde::Serialize;

use crate::conventions::LayerOrder;
use crate::dynamics::{Certificate, OrbitDecomposition, State};
use crate::error::Result;
use crate::poset::product_of_chains;
use crate::pstrict::{ssyt_space, LabelingSpace, PStrictLabeling};
use crate::qpartition::{LatticeProjection, PartitionSpace, QPartition, ToggleSchedule};
use crate::restriction::Label;

pub fn promotion_orbits(
    space: &LabelingSpace,
    cap: usize,
) -> Result<OrbitDecomposition<PStrictLabeling>> {
    let set = format!("L({} x [{}], R)", space.poset().name(), space.ell());
    OrbitDecomposition::compute(&set, "pro", space.enumerate(cap)?, |f| space.promotion(f))
}

pub fn rowmotion_orbits(
    space: &PartitionSpace,
    cap: usize,
) -> Result<OrbitDecomposition<QPartition>> {
    let set = format!("A^{}({})", space.ell(), space.poset().name());
    OrbitDecomposition::compute(&set, "row", space.enumerate(cap)?, |s| space.rowmotion(s))
}

pub fn schedule_orbits(
    space: &PartitionSpace,
    schedule: &ToggleSchedule,
    action: &str,
    cap: usize,
) -> Result<OrbitDecomposition<QPartition>> {
    let set = format!("A^{}({})", space.ell(), space.poset().name());
    OrbitDecomposition::compute(&set, action, space.enumerate(cap)?, |s| {
        space.apply_schedule(s, schedule)
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawCheck {
    pub law: String,
    /// Number of (element, position pair) instances compared.
    pub instances: usize,
    pub verified: bool,
    pub counterexample: Option<Certificate>,
}

impl LawCheck {
    pub fn merge(law: &str, checks: impl IntoIterator<Item = LawCheck>) -> LawCheck {
        let mut out = LawCheck {
            law: law.to_string(),
            instances: 0,
            verified: true,
            counterexample: None,
        };
        for c in checks {
            out.instances += c.instances;
            if !c.verified && out.verified {
                out.verified = false;
                out.counterexample = c.counterexample;
            }
        }
        out
    }
}

/// For every element `x` and every pair `(p, p')`, compares the multiset of
/// `value(g^i x, p')` over `0 ≤ i < count` with the complement image of the
/// multiset at `p`.
pub fn complement_law<T: State, C: Copy + Debug + Send + Sync>(
    law: &str,
    dec: &OrbitDecomposition<T>,
    count: usize,
    pairs: &[(C, C)],
    value: impl Fn(&T, C) -> i64 + Sync,
    complement: impl Fn(i64) -> i64 + Sync,
) -> LawCheck {
    let orbits: Vec<Vec<&T>> = dec.orbits().collect();
    let failures: Vec<(usize, Certificate)> = orbits
        .par_iter()
        .enumerate()
        .filter_map(|(oi, orbit)| {
            let len = orbit.len();
            // a window covering whole orbits gives the same multiset from every start
            let starts = if count.is_multiple_of(len) { 1 } else { len };
            for &(p, q) in pairs {
                let at_p: Vec<i64> = orbit.iter().map(|x| value(x, p)).collect();
                let at_q: Vec<i64> = orbit.iter().map(|x| value(x, q)).collect();
                for s in 0..starts {
                    let window = |v: &[i64]| -> Vec<i64> {
                        let mut w: Vec<i64> = (0..count).map(|i| v[(s + i) % len]).collect();
                        w.sort_unstable();
                        w
                    };
                    let lhs = window(&at_q);
                    let mut rhs: Vec<i64> = window(&at_p).into_iter().map(&complement).collect();
                    rhs.sort_unstable();
                    if lhs != rhs {
                        let detail = format!("at {q:?}: {lhs:?}; complement of {p:?}: {rhs:?}");
                        let trace: Vec<&T> = (0..len).map(|i| orbit[(s + i) % len]).collect();
                        return Some((oi, Certificate::new(law, detail, orbit[s], &trace)));
                    }
                }
            }
            None
        })
        .collect();
    let first = failures.into_iter().min_by_key(|(oi, _)| *oi);
    LawCheck {
        law: law.to_string(),
        instances: dec.len() * pairs.len(),
        verified: first.is_none(),
        counterexample: first.map(|(_, c)| c),
    }
}

/// `Dist(T, B*) = {k + 1 − m : m ∈ Dist(T, B)}` on `SSYT_k(a × b)`.
pub fn ssyt_dist_law(a: usize, b: usize, k: Label, cap: usize) -> Result<LawCheck> {
    let space = ssyt_space(a, b, k)?;
    let dec = promotion_orbits(&space, cap)?;
    let mut pairs = Vec::new();
    for x in 0..a {
        for j in 0..b {
            pairs.push(((x, j), (a - 1 - x, b - 1 - j)));
        }
    }
    Ok(complement_law(
        &format!("ssytdist SSYT_{k}({a}x{b})"),
        &dec,
        k as usize,
        &pairs,
        |t, (x, j)| i64::from(space.label(t, x, j)),
        |m| i64::from(k) + 1 - m,
    ))
}

/// `BCDist(T, a+1−x, k−d) = {b − m : m ∈ BCDist(T, x, d)}` for every row
/// and every threshold `0 ≤ d ≤ k`.
pub fn ssyt_box_count_law(a: usize, b: usize, k: Label, cap: usize) -> Result<LawCheck> {
    let space = ssyt_space(a, b, k)?;
    let dec = promotion_orbits(&space, cap)?;
    let mut pairs = Vec::new();
    for x in 0..a {
        for d in 0..=k {
            pairs.push(((x, d), (a - 1 - x, k - d)));
        }
    }
    let b = b as i64;
    Ok(complement_law(
        &format!("ssytbcdist SSYT_{k}({a}x{b})"),
        &dec,
        k as usize,
        &pairs,
        |t, (x, d)| space.fiber(t, x).iter().filter(|&&v| v > d).count() as i64,
        |m| b - m,
    ))
}

/// Antipodal complement law for `Pro_{id, v}` on `A^ℓ([a] × [c])`, for all
/// four directions, with windows of length `a + c`.
pub fn partition_dist_law(
    a: usize,
    c: usize,
    ell: usize,
    order: LayerOrder,
    cap: usize,
) -> Result<LawCheck> {
    let space = PartitionSpace::new(product_of_chains(&[a, c]), ell)?;
    let pi = LatticeProjection::identity(space.poset())?;
    let pairs: Vec<(usize, usize)> = (0..space.poset().len())
        .map(|x| Ok((x, space.poset().antipode(x)?)))
        .collect::<Result<_>>()?;
    let ell = ell as i64;
    let mut checks = Vec::new();
    for v in [[1, 1], [1, -1], [-1, 1], [-1, -1]] {
        let schedule = pi.hyperplane_schedule(&v, order)?;
        let name = format!("hpro v={v:?}");
        let dec = schedule_orbits(&space, &schedule, &name, cap)?;
        checks.push(complement_law(
            &format!("ppartdist A^{ell}([{a}]x[{c}]) v={v:?}"),
            &dec,
            a + c,
            &pairs,
            |s, x| i64::from(s.value(x)),
            |m| ell - m,
        ));
    }
    Ok(LawCheck::merge(
        &format!("ppartdist A^{ell}([{a}]x[{c}])"),
        checks,
    ))
}

/// `Dist(f, p*) = {a + b + 1 − m : m ∈ Dist(f, p)}` on
/// `L_{([a]×[b])×[ℓ]}(R^{a+b})`, for all antipodal cells of `[a]×[b]×[ℓ]`.
pub fn pstrict_dist_law(a: usize, b: usize, ell: usize, cap: usize) -> Result<LawCheck> {
    let space =
        LabelingSpace::with_global_bound(product_of_chains(&[a, b]), ell, (a + b) as Label)?;
    let dec = promotion_orbits(&space, cap)?;
    let mut pairs = Vec::new();
    for p in 0..space.poset().len() {
        for i in 0..ell {
            pairs.push(((p, i), space.antipodal_cell(p, i)?));
        }
    }
    let c = (a + b + 1) as i64;
    Ok(complement_law(
        &format!("pstrictdist L([{a}]x[{b}] x [{ell}], R^{})", a + b),
        &dec,
        a + b,
        &pairs,
        |f, (p, i)| i64::from(space.label(f, p, i)),
        |m| c - m,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ssyt_laws_small() {
        assert!(ssyt_dist_law(2, 2, 4, 10_000).unwrap().verified);
        assert!(ssyt_box_count_law(2, 2, 4, 10_000).unwrap().verified);
    }

    #[test]
    fn pstrict_law_small() {
        let c = pstrict_dist_law(2, 2, 2, 10_000).unwrap();
        assert!(c.verified, "{c:?}");
        assert!(c.instances > 0);
    }

    #[test]
    fn partition_law_small() {
        let c = partition_dist_law(2, 2, 1, LayerOrder::RightmostFirst, 10_000).unwrap();
        assert!(c.verified, "{c:?}");
    }

    #[test]
    fn wrong_complement_is_caught() {
        let space = ssyt_space(2, 2, 4).unwrap();
        let dec = promotion_orbits(&space, 10_000).unwrap();
        let check = complement_law(
            "bogus",
            &dec,
            4,
            &[((0usize, 0usize), (1usize, 1usize))],
            |t, (x, j)| i64::from(space.label(t, x, j)),
            |m| 4 - m,
        );
        assert!(!check.verified);
        assert!(check.counterexample.is_some());
    }
}
