//! Independent re-implementations checked against the library: a literal
//! Bender–Knuth involution, jeu-de-taquin promotion on tableaux, brute-force
//! enumeration and brute-force restriction pruning.

use std::collections::BTreeSet;

use orbitkit_core::poset::{build_poset, Poset};
use orbitkit_core::pstrict::{ssyt_space, LabelingSpace, PStrictLabeling};
use orbitkit_core::restriction::{Label, RestrictionFunction};
use proptest::prelude::*;

fn spaces() -> Vec<LabelingSpace> {
    let mut out = Vec::new();
    for (spec, ell, q) in [
        ("chain:1", 3, 4),
        ("chain:2", 2, 5),
        ("chain:3", 2, 6),
        ("V", 2, 5),
        ("prod:2x2", 2, 5),
        ("triangle:2", 2, 5),
        ("staircase:2", 1, 6),
    ] {
        let p = build_poset(spec).unwrap();
        out.push(LabelingSpace::with_global_bound(p, ell, q).unwrap());
    }
    let p = build_poset("prod:2x3").unwrap();
    out.push(
        LabelingSpace::new(p.clone(), 2, RestrictionFunction::type_a_flag(&p).unwrap()).unwrap(),
    );
    let p = build_poset("prod:2x2").unwrap();
    let r = RestrictionFunction::from_bounds(&p, &[1, 2, 1, 3], &[4, 5, 5, 6]).unwrap();
    out.push(LabelingSpace::new(p, 2, r).unwrap());
    // gapped label sets
    let p = build_poset("V").unwrap();
    let r = RestrictionFunction::from_sets(vec![vec![1, 3, 4], vec![2, 5, 7], vec![3, 5, 6, 8]])
        .make_consistent(&p)
        .unwrap();
    out.push(LabelingSpace::new(p, 2, r).unwrap());
    out
}

fn strict_at(space: &LabelingSpace, labels: &[Label], p: usize, i: usize) -> bool {
    let ell = space.ell();
    let v = labels[p * ell + i];
    let poset = space.poset();
    poset
        .upper_covers(p)
        .iter()
        .all(|&u| labels[u * ell + i] > v)
        && poset
            .lower_covers(p)
            .iter()
            .all(|&d| labels[d * ell + i] < v)
}

/// A label is free when swapping it for its partner keeps the layer strict.
fn literal_bender_knuth(space: &LabelingSpace, f: &PStrictLabeling, k: Label) -> Vec<Label> {
    let ell = space.ell();
    let src = f.labels();
    let mut out = src.to_vec();
    for p in 0..space.poset().len() {
        let set = space.restriction().set(p);
        let Some(pos) = set.iter().position(|&x| x == k) else {
            continue;
        };
        let Some(&next) = set.get(pos + 1) else {
            continue;
        };
        let mut free = Vec::new();
        for i in 0..ell {
            let v = src[p * ell + i];
            let partner = if v == k {
                next
            } else if v == next {
                k
            } else {
                continue;
            };
            let mut trial = src.to_vec();
            trial[p * ell + i] = partner;
            if strict_at(space, &trial, p, i) {
                free.push(i);
            }
        }
        let low = free.iter().filter(|&&i| src[p * ell + i] == k).count();
        let high = free.len() - low;
        for (j, &i) in free.iter().enumerate() {
            out[p * ell + i] = if j < high { k } else { next };
        }
    }
    out
}

#[test]
fn bender_knuth_matches_literal_definition() {
    for space in spaces() {
        let all = space.enumerate(1_000_000).unwrap();
        assert!(!all.is_empty());
        for f in &all {
            for &k in space.involution_labels() {
                let lib = space.bender_knuth(f, k);
                assert_eq!(
                    lib.labels(),
                    literal_bender_knuth(&space, f, k).as_slice(),
                    "{} k={k} f={:?}",
                    space.poset().name(),
                    f.labels()
                );
            }
        }
    }
}

fn brute_force_labelings(space: &LabelingSpace) -> BTreeSet<Vec<Label>> {
    let n = space.poset().len();
    let ell = space.ell();
    let mut out = BTreeSet::new();
    let mut cur = vec![0; n * ell];
    fn rec(
        space: &LabelingSpace,
        cell: usize,
        cur: &mut Vec<Label>,
        out: &mut BTreeSet<Vec<Label>>,
    ) {
        if cell == cur.len() {
            let ell = space.ell();
            let n = space.poset().len();
            let weak = (0..n).all(|p| (1..ell).all(|i| cur[p * ell + i - 1] <= cur[p * ell + i]));
            let strict = space
                .poset()
                .covers()
                .iter()
                .all(|&(x, y)| (0..ell).all(|i| cur[x * ell + i] < cur[y * ell + i]));
            if weak && strict {
                out.insert(cur.clone());
            }
            return;
        }
        let p = cell / space.ell();
        for &v in space.restriction().set(p) {
            cur[cell] = v;
            rec(space, cell + 1, cur, out);
        }
    }
    rec(space, 0, &mut cur, &mut out);
    out
}

#[test]
fn enumeration_matches_brute_force() {
    for space in spaces()
        .into_iter()
        .filter(|s| s.poset().len() * s.ell() <= 8)
    {
        let lib: BTreeSet<Vec<Label>> = space
            .enumerate(1_000_000)
            .unwrap()
            .into_iter()
            .map(PStrictLabeling::into_labels)
            .collect();
        assert_eq!(
            lib,
            brute_force_labelings(&space),
            "{}",
            space.poset().name()
        );
    }
}

type Tableau = Vec<Vec<Label>>;

fn to_tableau(space: &LabelingSpace, f: &PStrictLabeling, rows: usize) -> Tableau {
    (0..rows).map(|x| space.fiber(f, x).to_vec()).collect()
}

/// Remove the 1s, slide the holes out, decrement, refill with `k`.
fn jdt_promotion(t: &Tableau, k: Label) -> Tableau {
    let rows = t.len();
    let cols = t[0].len();
    let mut cells: Vec<Vec<Option<Label>>> = t
        .iter()
        .map(|r| r.iter().map(|&v| (v != 1).then_some(v)).collect())
        .collect();
    let holes: Vec<usize> = (0..cols).filter(|&c| cells[0][c].is_none()).collect();
    for &c0 in holes.iter().rev() {
        let (mut r, mut c) = (0, c0);
        loop {
            let right = (c + 1 < cols).then(|| cells[r][c + 1]).flatten();
            let below = (r + 1 < rows).then(|| cells[r + 1][c]).flatten();
            let (nr, nc) = match (right, below) {
                (None, None) => break,
                (Some(_), None) => (r, c + 1),
                (None, Some(_)) => (r + 1, c),
                (Some(a), Some(b)) => {
                    if b <= a {
                        (r + 1, c)
                    } else {
                        (r, c + 1)
                    }
                }
            };
            cells[r][c] = cells[nr][nc].take();
            r = nr;
            c = nc;
        }
    }
    cells
        .into_iter()
        .map(|row| row.into_iter().map(|v| v.map_or(k, |x| x - 1)).collect())
        .collect()
}

#[test]
fn tableau_promotion_matches_jeu_de_taquin() {
    for (a, b, k) in [
        (1, 3, 3),
        (2, 2, 4),
        (2, 3, 5),
        (3, 2, 5),
        (3, 3, 5),
        (2, 2, 6),
    ] {
        let space = ssyt_space(a, b, k).unwrap();
        for f in space.enumerate(1_000_000).unwrap() {
            let t = to_tableau(&space, &f, a);
            let lib = to_tableau(&space, &space.promotion(&f), a);
            assert_eq!(lib, jdt_promotion(&t, k), "SSYT_{k}({a}x{b}) from {t:?}");
        }
    }
}

/// Labels of `R(p)` attained by some strictly increasing map `P → R`.
fn brute_force_pruned(poset: &Poset, sets: &[Vec<Label>]) -> Option<Vec<Vec<Label>>> {
    let n = poset.len();
    let mut used = vec![BTreeSet::new(); n];
    let mut cur = vec![0; n];
    fn rec(
        poset: &Poset,
        sets: &[Vec<Label>],
        x: usize,
        cur: &mut Vec<Label>,
        used: &mut [BTreeSet<Label>],
    ) {
        if x == cur.len() {
            if poset.covers().iter().all(|&(a, b)| cur[a] < cur[b]) {
                for (p, &v) in cur.iter().enumerate() {
                    used[p].insert(v);
                }
            }
            return;
        }
        for &v in &sets[x] {
            cur[x] = v;
            rec(poset, sets, x + 1, cur, used);
        }
    }
    rec(poset, sets, 0, &mut cur, &mut used);
    if used.iter().any(BTreeSet::is_empty) {
        return None;
    }
    Some(used.into_iter().map(|s| s.into_iter().collect()).collect())
}

proptest! {
    #[test]
    fn pruning_matches_brute_force(
        spec in prop::sample::select(vec!["chain:3", "V", "prod:2x2", "triangle:2"]),
        masks in prop::collection::vec(1u8..=255, 4),
    ) {
        let poset = build_poset(spec).unwrap();
        let sets: Vec<Vec<Label>> = (0..poset.len())
            .map(|p| (1..=8).filter(|k| masks[p] >> (k - 1) & 1 == 1).collect())
            .collect();
        let lib = RestrictionFunction::from_sets(sets.clone()).make_consistent(&poset);
        match brute_force_pruned(&poset, &sets) {
            None => prop_assert!(lib.is_err()),
            Some(expected) => prop_assert_eq!(lib.unwrap().sets().to_vec(), expected),
        }
    }
}
