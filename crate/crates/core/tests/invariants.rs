use orbitkit_core::gamma::LabelingBijection;
use orbitkit_core::poset::{build_poset, Poset};
use orbitkit_core::pstrict::LabelingSpace;
use orbitkit_core::qpartition::{PartitionSpace, QPartition};
use proptest::prelude::*;

const SPECS: [&str; 6] = [
    "chain:3",
    "V",
    "prod:2x2",
    "prod:2x3",
    "triangle:2",
    "V*chain:2",
];

/// A linear extension chosen by random priorities among available minima.
fn random_extension(poset: &Poset, priorities: &[u32]) -> Vec<usize> {
    let n = poset.len();
    let mut indeg: Vec<usize> = (0..n).map(|x| poset.lower_covers(x).len()).collect();
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let x = (0..n)
            .filter(|&x| indeg[x] == 0 && !out.contains(&x))
            .max_by_key(|&x| (priorities[x % priorities.len()], x))
            .unwrap();
        out.push(x);
        for &u in poset.upper_covers(x) {
            indeg[u] -= 1;
        }
    }
    out
}

fn pick(all: &[QPartition], i: usize) -> &QPartition {
    &all[i % all.len()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rowmotion_ignores_linear_extension(
        spec in prop::sample::select(SPECS.to_vec()),
        ell in 1usize..=2,
        idx in any::<usize>(),
        priorities in prop::collection::vec(any::<u32>(), 1..16),
    ) {
        let space = PartitionSpace::new(build_poset(spec).unwrap(), ell).unwrap();
        let all = space.enumerate(1_000_000).unwrap();
        let sigma = pick(&all, idx);
        let ext = random_extension(space.poset(), &priorities);
        prop_assert_eq!(space.rowmotion_along(sigma, &ext), space.rowmotion(sigma));
        prop_assert_eq!(&space.rowmotion_inverse(&space.rowmotion(sigma)), sigma);
    }

    #[test]
    fn toggles_are_involutions(
        spec in prop::sample::select(SPECS.to_vec()),
        ell in 1usize..=3,
        idx in any::<usize>(),
        x in any::<usize>(),
    ) {
        let space = PartitionSpace::new(build_poset(spec).unwrap(), ell).unwrap();
        let all = space.enumerate(1_000_000).unwrap();
        let sigma = pick(&all, idx);
        let x = x % space.poset().len();
        let once = space.toggle(sigma, x);
        prop_assert!(space.is_valid(&once));
        prop_assert_eq!(&space.toggle(&once, x), sigma);
    }

    #[test]
    fn phi_round_trips_and_intertwines(
        spec in prop::sample::select(SPECS[..5].to_vec()),
        ell in 1usize..=3,
        extra in 2i32..=4,
        idx in any::<usize>(),
    ) {
        let poset = build_poset(spec).unwrap();
        let q = poset.graded_ranks().unwrap().top_rank as i32 + extra;
        let b = LabelingBijection::new(LabelingSpace::with_global_bound(poset, ell, q).unwrap()).unwrap();
        let all = b.labelings().enumerate(1_000_000).unwrap();
        let f = &all[idx % all.len()];
        let sigma = b.phi(f);
        prop_assert!(b.partitions().is_valid(&sigma));
        prop_assert_eq!(&b.phi_inverse(&sigma).unwrap(), f);
        prop_assert_eq!(b.phi(&b.labelings().promotion(f)), b.toggle_promotion(&sigma));
        prop_assert_eq!(&b.labelings().promotion_inverse(&b.labelings().promotion(f)), f);
        prop_assert_eq!(b.diff(&sigma, q), b.labelings().content(f, q));
    }
}
