//! Orbit decompositions of bijections on finite sets, and the checks built
//! on them: orders, homomesy, resonance and equivariance.
//!
//! Images are computed in parallel; the decomposition itself is serial over
//! the sorted element list, so every report is independent of the worker
//! count.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Debug;
use std::hash::Hash;

use num_integer::Integer;
use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Anything the engine can act on.
pub trait State: Clone + Eq + Hash + Ord + Send + Sync + Debug + Serialize {}

impl<T: Clone + Eq + Hash + Ord + Send + Sync + Debug + Serialize> State for T {}

/// A replayable witness: the offending element and its orbit trace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub claim: String,
    pub detail: String,
    pub element: serde_json::Value,
    pub trace: Vec<serde_json::Value>,
}

impl Certificate {
    pub fn new<T: Serialize>(
        claim: &str,
        detail: impl Into<String>,
        element: &T,
        trace: &[&T],
    ) -> Self {
        let json = |x: &T| serde_json::to_value(x).unwrap_or(serde_json::Value::Null);
        Certificate {
            claim: claim.to_string(),
            detail: detail.into(),
            element: json(element),
            trace: trace.iter().map(|x| json(x)).collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct OrbitDecomposition<T> {
    set: String,
    action: String,
    elements: Vec<T>,
    image: Vec<usize>,
    /// Each orbit in action order, starting at its smallest element.
    orbits: Vec<Vec<usize>>,
}

impl<T: State> OrbitDecomposition<T> {
    /// Decomposes `elements` into orbits of `act`. Fails if `act` leaves
    /// the set or is not injective on it.
    pub fn compute(
        set: &str,
        action: &str,
        mut elements: Vec<T>,
        act: impl Fn(&T) -> T + Sync,
    ) -> Result<Self> {
        elements.par_sort_unstable();
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::NotBijective {
                set: set.to_string(),
                reason: format!("element {:?} is listed twice", w[0]),
            });
        }
        let index: HashMap<&T, usize> = elements.iter().enumerate().map(|(i, x)| (x, i)).collect();
        let image: Vec<usize> = elements
            .par_iter()
            .map(|x| {
                let y = act(x);
                index.get(&y).copied().ok_or_else(|| Error::NotBijective {
                    set: set.to_string(),
                    reason: format!("{action} sends {x:?} to {y:?}, outside the set"),
                })
            })
            .collect::<Result<_>>()?;
        let mut hit = vec![false; elements.len()];
        for (i, &j) in image.iter().enumerate() {
            if std::mem::replace(&mut hit[j], true) {
                let first = image.iter().position(|&t| t == j).expect("already hit");
                return Err(Error::NotBijective {
                    set: set.to_string(),
                    reason: format!(
                        "{action} sends both {:?} and {:?} to {:?}",
                        elements[first], elements[i], elements[j]
                    ),
                });
            }
        }
        let mut visited = vec![false; elements.len()];
        let mut orbits = Vec::new();
        for start in 0..elements.len() {
            if visited[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut x = start;
            while !visited[x] {
                visited[x] = true;
                orbit.push(x);
                x = image[x];
            }
            orbits.push(orbit);
        }
        Ok(OrbitDecomposition {
            set: set.to_string(),
            action: action.to_string(),
            elements,
            image,
            orbits,
        })
    }

    pub fn set(&self) -> &str {
        &self.set
    }

    pub fn action(&self) -> &str {
        &self.action
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }

    /// Orbits as element lists in action order.
    pub fn orbits(&self) -> impl Iterator<Item = Vec<&T>> + '_ {
        self.orbits
            .iter()
            .map(|o| o.iter().map(|&i| &self.elements[i]).collect())
    }

    pub fn representatives(&self) -> Vec<&T> {
        self.orbits.iter().map(|o| &self.elements[o[0]]).collect()
    }

    /// Image of the element at sorted position `i`.
    pub fn image_index(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.orbits.iter().map(Vec::len).collect();
        s.sort_unstable();
        s
    }

    /// Orbit size to number of orbits of that size.
    pub fn size_counts(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for o in &self.orbits {
            *m.entry(o.len()).or_insert(0) += 1;
        }
        m
    }

    /// The order of the action: lcm of orbit sizes.
    pub fn order(&self) -> u64 {
        self.orbits
            .iter()
            .fold(1u64, |acc, o| acc.lcm(&(o.len() as u64)))
    }

    /// First orbit whose size does not divide `n`, as a certificate.
    pub fn size_not_dividing(&self, n: usize, claim: &str) -> Option<Certificate> {
        self.orbits.iter().find(|o| !n.is_multiple_of(o.len())).map(|o| {
            let trace: Vec<&T> = o.iter().map(|&i| &self.elements[i]).collect();
            Certificate::new(
                claim,
                format!("orbit of size {} does not divide {n}", o.len()),
                trace[0],
                &trace,
            )
        })
    }

    pub fn summary(&self) -> OrbitSummary {
        OrbitSummary {
            set: self.set.clone(),
            action: self.action.clone(),
            elements: self.len(),
            orbit_count: self.orbit_count(),
            orbit_sizes: self.size_counts(),
            order: self.order(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitSummary {
    pub set: String,
    pub action: String,
    pub elements: usize,
    pub orbit_count: usize,
    pub orbit_sizes: BTreeMap<usize, usize>,
    pub order: u64,
}

fn ratio_text(r: &Ratio<i64>) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn serialize_ratio<S: Serializer>(
    r: &Option<Ratio<i64>>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&ratio_text(r)),
        None => s.serialize_none(),
    }
}

fn serialize_averages<S: Serializer>(
    v: &[Ratio<i64>],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let mut counts: BTreeMap<Ratio<i64>, usize> = BTreeMap::new();
    for r in v {
        *counts.entry(*r).or_insert(0) += 1;
    }
    s.collect_map(counts.iter().map(|(r, n)| (ratio_text(r), n)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomomesyReport {
    pub statistic: String,
    /// Per-orbit averages in orbit order; serialized as value to orbit count.
    #[serde(serialize_with = "serialize_averages")]
    pub averages: Vec<Ratio<i64>>,
    pub is_homomesic: bool,
    #[serde(serialize_with = "serialize_ratio")]
    pub constant: Option<Ratio<i64>>,
    pub certificate: Option<Certificate>,
}

impl HomomesyReport {
    pub fn is_c_mesic(&self, c: Ratio<i64>) -> bool {
        self.constant == Some(c)
    }
}

/// Exact per-orbit averages of an integer statistic.
pub fn homomesy<T: State>(
    dec: &OrbitDecomposition<T>,
    statistic: &str,
    stat: impl Fn(&T) -> i64 + Sync,
) -> HomomesyReport {
    let values: Vec<i64> = dec.elements.par_iter().map(&stat).collect();
    let averages: Vec<Ratio<i64>> = dec
        .orbits
        .iter()
        .map(|o| Ratio::new(o.iter().map(|&i| values[i]).sum(), o.len() as i64))
        .collect();
    let first = averages.first().copied();
    let odd = averages.iter().position(|a| Some(*a) != first);
    let certificate = odd.map(|j| {
        let trace: Vec<&T> = dec.orbits[j].iter().map(|&i| &dec.elements[i]).collect();
        Certificate::new(
            statistic,
            format!(
                "orbit average {} differs from {}",
                ratio_text(&averages[j]),
                ratio_text(&averages[0])
            ),
            trace[0],
            &trace,
        )
    });
    HomomesyReport {
        statistic: statistic.to_string(),
        is_homomesic: odd.is_none(),
        constant: if odd.is_none() { first } else { None },
        averages,
        certificate,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResonanceReport {
    pub projection: String,
    pub frequency: usize,
    pub verified: bool,
    /// Every projected word is fixed by rotation, so the cyclic action is
    /// trivial on the image.
    pub degenerate: bool,
    pub counterexample: Option<Certificate>,
}

/// Checks `proj(g·x) = rotate_left(proj(x))` with words of length `omega`.
pub fn resonance<T: State>(
    dec: &OrbitDecomposition<T>,
    projection: &str,
    omega: usize,
    proj: impl Fn(&T) -> Vec<u8> + Sync,
) -> ResonanceReport {
    let words: Vec<Vec<u8>> = dec.elements.par_iter().map(&proj).collect();
    let bad = (0..words.len()).into_par_iter().find_first(|&i| {
        let w = &words[i];
        if w.len() != omega {
            return true;
        }
        let mut r = w.clone();
        r.rotate_left(1.min(omega));
        words[dec.image[i]] != r
    });
    let degenerate = words.iter().all(|w| {
        let mut r = w.clone();
        r.rotate_left(1.min(w.len()));
        &r == w
    });
    let counterexample = bad.map(|i| {
        let x = &dec.elements[i];
        let y = &dec.elements[dec.image[i]];
        Certificate::new(
            projection,
            format!("{:?} maps to {:?}", words[i], words[dec.image[i]]),
            x,
            &[x, y],
        )
    });
    ResonanceReport {
        projection: projection.to_string(),
        frequency: omega,
        verified: bad.is_none() && !degenerate,
        degenerate,
        counterexample,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivarianceReport {
    pub name: String,
    pub checked: usize,
    pub verified: bool,
    pub counterexample: Option<Certificate>,
}

/// Checks that `map` is a bijection from `domain` onto `codomain` and that
/// `map ∘ a = b ∘ map` on every element.
pub fn equivariance<A: State, B: State>(
    name: &str,
    domain: &[A],
    codomain: &[B],
    map: impl Fn(&A) -> B + Sync,
    act_a: impl Fn(&A) -> A + Sync,
    act_b: impl Fn(&B) -> B + Sync,
) -> EquivarianceReport {
    let images: Vec<B> = domain.par_iter().map(&map).collect();
    let target: HashSet<&B> = codomain.iter().collect();
    let mut seen: HashSet<&B> = HashSet::with_capacity(images.len());
    let not_bijective = domain.len() != codomain.len()
        || images
            .iter()
            .any(|y| !target.contains(y) || !seen.insert(y));
    if not_bijective {
        let detail = format!(
            "map is not a bijection ({} elements onto {})",
            domain.len(),
            codomain.len()
        );
        return EquivarianceReport {
            name: name.to_string(),
            checked: 0,
            verified: false,
            counterexample: domain
                .first()
                .map(|x| Certificate::new(name, detail, x, &[x])),
        };
    }
    let bad = (0..domain.len()).into_par_iter().find_first(|&i| {
        let x = &domain[i];
        map(&act_a(x)) != act_b(&images[i])
    });
    EquivarianceReport {
        name: name.to_string(),
        checked: domain.len(),
        verified: bad.is_none(),
        counterexample: bad.map(|i| {
            let x = &domain[i];
            let ax = act_a(x);
            Certificate::new(
                name,
                format!(
                    "map(a(x)) = {:?} but b(map(x)) = {:?}",
                    map(&ax),
                    act_b(&images[i])
                ),
                x,
                &[x, &ax],
            )
        }),
    }
}

/// First element on which two actions disagree.
pub fn first_disagreement<T: State>(
    elements: &[T],
    a: impl Fn(&T) -> T + Sync,
    b: impl Fn(&T) -> T + Sync,
) -> Option<T> {
    elements.par_iter().find_first(|x| a(x) != b(x)).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rotate(n: u32) -> impl Fn(&u32) -> u32 + Sync {
        move |x| (x + 1) % n
    }

    #[test]
    fn cycle_and_identity() {
        let d = OrbitDecomposition::compute("Z/6", "+1", (0..6).collect(), rotate(6)).unwrap();
        assert_eq!(d.sizes(), vec![6]);
        assert_eq!(d.order(), 6);
        assert_eq!(d.representatives(), vec![&0]);
        let id = OrbitDecomposition::compute("Z/6", "id", (0..6u32).collect(), |x| *x).unwrap();
        assert_eq!(id.sizes(), vec![1; 6]);
        assert_eq!(id.order(), 1);
    }

    #[test]
    fn mixed_orbits() {
        // x ↦ x + 2 mod 6 on evens, fixed odds
        let act = |x: &u32| if (*x).is_multiple_of(2) { (x + 2) % 6 } else { *x };
        let d = OrbitDecomposition::compute("Z/6", "mix", (0..6).rev().collect(), act).unwrap();
        assert_eq!(d.size_counts(), BTreeMap::from([(1, 3), (3, 1)]));
        assert_eq!(d.order(), 3);
        assert!(d.size_not_dividing(3, "c").is_none());
        assert!(d.size_not_dividing(2, "c").is_some());
        let orbit: Vec<u32> = d.orbits().next().unwrap().into_iter().copied().collect();
        assert_eq!(orbit, vec![0, 2, 4]);
    }

    #[test]
    fn escapes_and_collisions_fail() {
        assert!(OrbitDecomposition::compute("s", "a", vec![0u32, 1], |x| x + 1).is_err());
        assert!(OrbitDecomposition::compute("s", "a", vec![0u32, 1], |_| 0).is_err());
        assert!(OrbitDecomposition::compute("s", "a", vec![0u32, 0], |x| *x).is_err());
    }

    #[test]
    fn homomesy_exact() {
        let d = OrbitDecomposition::compute("Z/4", "+1", (0..4).collect(), rotate(4)).unwrap();
        let r = homomesy(&d, "x", |x| i64::from(*x));
        assert!(r.is_c_mesic(Ratio::new(3, 2)));
        let act = |x: &u32| if (*x).is_multiple_of(2) { (x + 2) % 4 } else { *x };
        let d = OrbitDecomposition::compute("Z/4", "mix", (0..4).collect(), act).unwrap();
        let r = homomesy(&d, "x", |x| i64::from(*x));
        assert!(!r.is_homomesic);
        assert!(r.certificate.is_some());
        assert!(homomesy(&d, "zero", |_| 0).is_c_mesic(Ratio::from_integer(0)));
        let json = serde_json::to_value(homomesy(&d, "x", |x| i64::from(*x))).unwrap();
        assert_eq!(json["averages"]["1"], 2);
        assert_eq!(json["averages"]["3"], 1);
    }

    #[test]
    fn resonance_rotation() {
        let d = OrbitDecomposition::compute("Z/3", "+1", (0..3).collect(), rotate(3)).unwrap();
        let word = |x: &u32| {
            let mut v = vec![0u8; 3];
            v[(3 - *x as usize) % 3] = 1;
            v
        };
        let r = resonance(&d, "hot", 3, word);
        assert!(r.verified, "{r:?}");
        let r = resonance(&d, "const", 3, |_| vec![1, 1, 1]);
        assert!(r.degenerate && !r.verified);
        let r = resonance(&d, "bad", 3, |x| {
            if *x == 0 {
                vec![1, 0, 0]
            } else {
                vec![0, 1, 0]
            }
        });
        assert!(!r.verified && r.counterexample.is_some());
    }

    #[test]
    fn equivariance_checks() {
        let dom: Vec<u32> = (0..5).collect();
        let cod: Vec<u32> = (10..15).collect();
        let ok = equivariance(
            "shift",
            &dom,
            &cod,
            |x| x + 10,
            |x| (x + 1) % 5,
            |y| (y - 9) % 5 + 10,
        );
        assert!(ok.verified);
        let bad = equivariance("shift", &dom, &cod, |x| x + 10, |x| (x + 1) % 5, |y| *y);
        assert!(!bad.verified);
        let not_bij = equivariance("c", &dom, &cod, |_| 10, |x| *x, |y| *y);
        assert!(!not_bij.verified && not_bij.checked == 0);
        assert_eq!(first_disagreement(&dom, |x| *x, |x| x % 3), Some(3));
    }
}
