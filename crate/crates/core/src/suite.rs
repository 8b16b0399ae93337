//! The verification battery: one function per checked claim, each returning
//! a [`CriterionResult`] with witnesses for anything that failed.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Ratio;
use serde::Serialize;

use crate::conventions::{Conventions, IdealOrientation, LayerOrder};
use crate::dynamics::{equivariance, homomesy, resonance, Certificate, OrbitDecomposition};
use crate::error::{Error, Result};
use crate::gamma::{
    flagged_isomorphism, graded_diff, graded_isomorphism, graded_target,
    graded_toggle_promotion_schedule, slice_schedule, GammaPoset, LabelingBijection,
};
use crate::laws::{
    partition_dist_law, pstrict_dist_law, rowmotion_orbits, schedule_orbits, ssyt_box_count_law,
    ssyt_dist_law, LawCheck,
};
use crate::poset::{build_poset, product_of_chains, triangle, MinusculeFamily, Poset};
use crate::pstrict::{ssyt_space, LabelingSpace, LabelingStatistic};
use crate::qpartition::PartitionSpace;
use crate::restriction::{Label, RestrictionFunction};

pub const SUITE_CAP: usize = 20_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scale {
    Small,
    Full,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub title: String,
    pub passed: bool,
    /// Number of individual instances that were checked.
    pub checks: usize,
    pub detail: Vec<String>,
    pub certificates: Vec<Certificate>,
}

impl CriterionResult {
    fn new(id: u8, title: &str) -> Self {
        CriterionResult {
            id,
            title: title.to_string(),
            passed: true,
            checks: 0,
            detail: Vec::new(),
            certificates: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, what: impl Into<String>, cert: Option<Certificate>) {
        self.checks += 1;
        if !ok {
            self.passed = false;
            self.detail.push(format!("failed: {}", what.into()));
            self.certificates.extend(cert);
        }
    }

    fn note(&mut self, line: impl Into<String>) {
        self.detail.push(line.into());
    }

    fn law(&mut self, check: LawCheck) {
        let ok = check.verified;
        self.record(ok, check.law, check.counterexample);
    }

    fn error(mut self, e: Error) -> Self {
        self.passed = false;
        self.detail.push(format!("error: {e}"));
        self
    }

    /// One summary line.
    pub fn line(&self) -> String {
        format!(
            "[{}] criterion {:>2}: {} ({} checks)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.checks
        )
    }
}

pub const TITLES: [&str; 15] = [
    "Φ intertwines promotion and toggle-promotion",
    "Φ intertwines each ρ_k with τ_k",
    "promotion order a+b on L_{([a]x[b])x[ℓ]}(R^{a+b})",
    "golden rowmotion orbit structures",
    "homomesies on tableaux and P-strict labelings",
    "antipodal distribution laws",
    "binary content and Diff resonance",
    "Γ isomorphisms",
    "toggle-promotion slice decomposition",
    "hyperplane promotion intertwined with promotion",
    "multifold symmetry via orbit multisets",
    "minuscule orders",
    "V-poset order sweeps",
    "antipodal 2-mesy on A^2([a]x[2]x[2])",
    "convention mutations are detected",
];

pub fn run_criterion(id: u8, scale: Scale, conv: &Conventions) -> CriterionResult {
    let title = TITLES
        .get(usize::from(id).wrapping_sub(1))
        .copied()
        .unwrap_or("unknown");
    let mut r = CriterionResult::new(id, title);
    let outcome = match id {
        1 => promotion_equivariance(&mut r, conv),
        2 => involution_equivariance(&mut r, conv),
        3 => rectangle_order(&mut r, conv),
        4 => golden_orbits(&mut r),
        5 => homomesies(&mut r, conv),
        6 => distributions(&mut r, conv),
        7 => resonances(&mut r, conv),
        8 => isomorphisms(&mut r),
        9 => slices(&mut r, conv),
        10 => hyperplane(&mut r, conv),
        11 => multifold(&mut r, conv),
        12 => minuscule(&mut r, conv),
        13 => vee_sweeps(&mut r, conv),
        14 => antipodal_sweep(&mut r, scale),
        15 => mutations(&mut r),
        _ => Err(Error::Unsupported(format!("no criterion {id}"))),
    };
    match outcome {
        Ok(()) => r,
        Err(e) => r.error(e),
    }
}

pub fn run_all(scale: Scale, conv: &Conventions) -> Vec<CriterionResult> {
    (1..=15).map(|id| run_criterion(id, scale, conv)).collect()
}

/// `(spec, ℓ, q)` for `P ∈ {chain:2, chain:3, prod:2x2, V, triangle:2}`,
/// `ℓ ∈ 1..=3`, `q ∈ n+2..=n+4`.
pub fn standard_grid() -> Result<Vec<(Poset, usize, Label)>> {
    let mut out = Vec::new();
    for spec in ["chain:2", "chain:3", "prod:2x2", "V", "triangle:2"] {
        let p = build_poset(spec)?;
        let n = p.graded_ranks()?.top_rank as Label;
        for ell in 1..=3 {
            for q in n + 2..=n + 4 {
                out.push((p.clone(), ell, q));
            }
        }
    }
    Ok(out)
}

fn bijection(p: &Poset, ell: usize, q: Label, conv: &Conventions) -> Result<LabelingBijection> {
    let space = LabelingSpace::with_global_bound(p.clone(), ell, q)?;
    Ok(LabelingBijection::new(space)?.with_orientation(conv.orientation))
}

fn tag(p: &Poset, ell: usize, q: Label) -> String {
    format!("{} ell={ell} q={q}", p.name())
}

fn promotion_equivariance(r: &mut CriterionResult, conv: &Conventions) -> Result<()> {
    for (p, ell, q) in standard_grid()? {
        let b = bijection(&p, ell, q, conv)?;
        let dom = b.labelings().enumerate(SUITE_CAP)?;
        let cod = b.partitions().enumerate(SUITE_CAP)?;
        let rep = equivariance(
            &tag(&p, ell, q),
            &dom,
            &cod,
            |f| b.phi(f),
            |f| b.labelings().promotion_with(f, conv.promotion),
            |s| b.toggle_promotion_with(s, conv.toggle_promotion),
        );
        r.record(rep.verified, rep.name, rep.counterexample);
    }
    Ok(())
}

fn involution_equivariance(r: &mut CriterionResult, conv: &Conventions) -> Result<()> {
    for (p, ell, q) in standard_grid()? {
        let b = bijection(&p, ell, q, conv)?;
        let dom = b.labelings().enumerate(SUITE_CAP)?;
        let cod = b.partitions().enumerate(SUITE_CAP)?;
        for &k in b.labelings().involution_labels() {
            let rep = equivariance(
                &format!("{} k={k}", tag(&p, ell, q)),
                &dom,
                &cod,
                |f| b.phi(f),
                |f| b.labelings().bender_knuth(f, k),
                |s| b.tau(s, k),
            );
            r.record(rep.verified, rep.name, rep.counterexample);
        }
    }
    Ok(())
}

fn rectangle_order(r: &mut CriterionResult, conv: &Conventions) -> Result<()> {
    for (a, b, ell) in [(2, 2, 2), (2, 3, 2), (3, 3, 2), (2, 2, 3)] {
        let q = (a + b) as Label;
        let space = LabelingSpace::with_global_bound(product_of_chains(&[a, b]), ell, q)?;
        let dec = OrbitDecomposition::compute("L", "pro", space.enumerate(SUITE_CAP)?, |f| {
            space.promotion_with(f, conv.promotion)
        })?;
        let order = dec.order();
        r.record(
            order == (a + b) as u64,
            format!("({a},{b},{ell}) has order {order}"),
            None,
        );
        r.note(format!(
            "({a},{b},{ell}): {} labelings, order {order}",
            dec.len()
        ));
    }
    Ok(())
}

fn golden_orbits(r: &mut CriterionResult) -> Result<()> {
    let cube = PartitionSpace::new(build_poset("prod:2x2x2")?, 2)?;
    let dec = rowmotion_orbits(&cube, SUITE_CAP)?;
    let counts = dec.size_counts();
    r.record(
        counts == BTreeMap::from([(5, 30), (9, 2)]),
        format!("A^2([2]x[2]x[2]) orbit sizes {counts:?}"),
        None,
    );
    r.note(format!("A^2([2]x[2]x[2]): {counts:?}"));
    let prop = PartitionSpace::new(build_poset("propeller:2*chain:2")?, 2)?;
    let dec = rowmotion_orbits(&prop, SUITE_CAP)?;
    let counts = dec.size_counts();
    let distinct: BTreeSet<usize> = counts.keys().copied().collect();
    r.record(
        distinct == BTreeSet::from([6, 9, 17, 44]),
        format!("A^2(J^2([2]x[2]) x [2]) orbit sizes {counts:?}"),
        None,
    );
    r.note(format!("A^2(J^2([2]x[2]) x [2]): {counts:?}"));
    Ok(())
}

/// All nonempty unions of 180°-rotation orbits of boxes in `a × b`.
pub fn rotation_symmetric_sets(a: usize, b: usize) -> Vec<Vec<(usize, usize)>> {
    let mut classes: Vec<Vec<(usize, usize)>> = Vec::new();
    for x in 0..a {
        for j in 0..b {
            let star = (a - 1 - x, b - 1 - j);
            if (x, j) <= star {
                let mut c = vec![(x, j)];
                if star != (x, j) {
                    c.push(star);
                }
                classes.push(c);
            }
        }
    }
    (1u32..1 << classes.len())
        .map(|mask| {
            classes
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .flat_map(|(_, c)| c.iter().copied())
                .collect()
        })
        .collect()
}

fn homomesies(r: &mut CriterionResult, conv: &Conventions) -> Result<()> {
    for (a, b, k) in [(2usize, 2usize, 4), (2, 2, 5), (2, 3, 5)] {
        let space = ssyt_space(a, b, k)?;
        let dec = OrbitDecomposition::compute("SSYT", "pro", space.enumerate(SUITE_CAP)?, |f| {
            space.promotion_with(f, conv.promotion)
        })?;
        for cells in rotation_symmetric_sets(a, b) {
            let stat = LabelingStatistic::Chi(cells.clone());
            let name = format!("SSYT_{k}({a}x{b}) chi{cells:?}");
            let rep = homomesy(&dec, &name, |t| stat.evaluate(&space, t));
            r.record(rep.is_homomesic, name, rep.certificate);
        }
        for x in 0..a {
            for d in 0..=k {
                let stat = LabelingStatistic::Sum(vec![
                    LabelingStatistic::BoxCount {
                        fiber: x,
                        threshold: d,
                    },
                    LabelingStatistic::BoxCount {
                        fiber: a - 1 - x,
                        threshold: k - d,
                    },
                ]);
                let name = format!("SSYT_{k}({a}x{b}) #B(x={},d={d})", x + 1);
                let rep = homomesy(&dec, &name, |t| stat.evaluate(&space, t));
                r.record(
                    rep.is_c_mesic(Ratio::from_integer(b as i64)),
                    name,
                    rep.certificate,
                );
            }
        }
    }
    for (a, b, ell) in [(2usize, 2usize, 2usize), (2, 3, 2)] {
        let space =
            LabelingSpace::with_global_bound(product_of_chains(&[a, b]), ell, (a + b) as Label)?;
        let dec = OrbitDecomposition::compute("L", "pro", space.enumerate(SUITE_CAP)?, |f| {
            space.promotion_with(f, conv.promotion)
        })?;
        for p in 0..space.poset().len() {
            for i in 0..ell {
                let (pp, ii) = space.antipodal_cell(p, i)?;
                if (pp, ii) <= (p, i) {
                    continue;
                }
                let stat = LabelingStatistic::Chi(vec![(p, i), (pp, ii)]);
                let name = format!("L([{a}]x[{b}] x [{ell}]) antipodal chi at ({p},{i})");
                let rep = homomesy(&dec, &name, |f| stat.evaluate(&space, f));
                r.record(
                    rep.is_c_mesic(Ratio::from_integer((a + b + 1) as i64)),
                    name,
                    rep.certificate,
                );
            }
        }
    }
    Ok(())
}

fn distributions(r: &mut CriterionResult, conv: &Conventions) -> Result<()> {
    for (a, b, k) in [(2, 2, 4), (2, 2, 5), (2, 3, 5)] {
        r.law(ssyt_dist_law(a, b, k, SUITE_CAP)?);
        r.law(ssyt_box_count_law(a, b, k, SUITE_CAP)?);
    }
    for (a, c, ell) in [(2, 2, 2), (2, 3, 2)] {
        r.law(partition_dist_law(a, c, ell, conv.hyperplane, SUITE_CAP)?);
    }
    for (a, b, ell) in [(2, 2, 2), (2, 3, 2)] {
        r.law(pstrict_dist_law(a, b, ell, SUITE_CAP)?);
    }
    Ok(())
}

fn resonances(r: &mut CriterionResult, conv: &Conventions) -> Result<()> {
    let mut degenerate = 0;
    let mut row_failures = 0;
    let mut obstructed = 0;
    for (p, ell, q) in standard_grid()? {
        let b = bijection(&p, ell, q, conv)?;
        let lab = b.labelings();
        let dec = OrbitDecomposition::compute("L", "pro", lab.enumerate(SUITE_CAP)?, |f| {
            lab.promotion_with(f, conv.promotion)
        })?;
        let rep = resonance(&dec, "Con", q as usize, |f| lab.content(f, q));
        degenerate += usize::from(rep.degenerate);
        r.record(
            rep.counterexample.is_none(),
            format!("Con under pro, {}", tag(&p, ell, q)),
            rep.counterexample,
        );
        let parts = b.partitions();
        let togpro = schedule_orbits(
            parts,
            &b.gamma().toggle_promotion_schedule(conv.toggle_promotion),
            "togpro",
            SUITE_CAP,
        )?;
        let rep = resonance(&togpro, "Diff", q as usize, |s| b.diff(s, q));
        r.record(
            rep.counterexample.is_none(),
            format!("Diff under togpro, {}", tag(&p, ell, q)),
            rep.counterexample,
        );
        // the graded form on P × [q−n−1] must agree with the Γ form
        let target = PartitionSpace::new(graded_target(&p, q)?, ell)?;
        let gdiff = graded_diff(&target, &p, q)?;
        let iso = graded_isomorphism(b.gamma(), &p, q)?;
        let agree = parts.enumerate(SUITE_CAP)?.iter().all(|s| {
            let mut moved = vec![0u16; s.values().len()];
            for (x, &y) in iso.iter().enumerate() {
                moved[y] = s.value(x);
            }
            gdiff(&crate::qpartition::QPartition::from_values(moved)) == b.diff(s, q)
        });
        r.record(
            agree,
            format!("graded Diff agrees, {}", tag(&p, ell, q)),
            None,
        );
        let row = rowmotion_orbits(parts, SUITE_CAP)?;
        let rep = resonance(&row, "Diff", q as usize, |s| b.diff(s, q));
        if rep.counterexample.is_some() {
            row_failures += 1;
        }
        // any rotation action on Diff words needs the word period to divide the orbit length
        obstructed += usize::from(row.orbits().any(|orbit| {
            orbit
                .iter()
                .any(|s| orbit.len() % word_period(&b.diff(s, q)) != 0)
        }));
        r.record(
            rep.counterexample.is_none(),
            format!("Diff under row, {}", tag(&p, ell, q)),
            rep.counterexample,
        );
    }
    r.note(format!(
        "{degenerate} instances have rotation-invariant content words only"
    ));
    r.note(format!(
        "{row_failures} instances break Diff resonance under row"
    ));
    r.note(format!(
        "{obstructed} of these have a row orbit whose length is not a multiple of some Diff word period"
    ));
    Ok(())
}

/// Least `s ≥ 1` with `w` invariant under rotation by `s`.
pub fn word_period(w: &[u8]) -> usize {
    (1..=w.len())
        .find(|&s| (0..w.len()).all(|i| w[i] == w[(i + s) % w.len()]))
        .unwrap_or(1)
}

fn isomorphisms(r: &mut CriterionResult) -> Result<()> {
    let mut seen = BTreeSet::new();
    for (p, _, q) in standard_grid()? {
        if !seen.insert((p.name().to_string(), q)) {
            continue;
        }
        let rf = RestrictionFunction::from_global_bound(&p, q)?;
        let g = GammaPoset::new(&p, &rf)?;
        let map = graded_isomorphism(&g, &p, q)?;
        let target = graded_target(&p, q)?;
        r.record(
            g.poset().is_cover_isomorphism(&target, &map),
            format!("Γ({}, R^{q}) ≅ P x [q-n-1]", p.name()),
            None,
        );
        r.record(
            g.is_column_adjacent(),
            format!("Γ({}, R^{q}) column-adjacent", p.name()),
            None,
        );
    }
    for (a, b) in [(2, 2), (2, 3), (3, 4)] {
        let p = product_of_chains(&[a, b]);
        let g = GammaPoset::new(&p, &RestrictionFunction::type_a_flag(&p)?)?;
        let (target, map) = flagged_isomorphism(&g, &p)?;
        r.record(
            g.poset().is_cover_isomorphism(&target, &map),
            format!("Γ([{a}]x[{b}], R^β) ≅ triangle_{a} x [{b}]"),
            None,
        );
    }
    Ok(())
}

fn slices(r: &mut CriterionResult, conv: &Conventions) -> Result<()> {
    let mut seen = BTreeSet::new();
    for (p, ell, q) in standard_grid()? {
        if !seen.insert((p.name().to_string(), ell, q)) {
            continue;
        }
        let n = p.graded_ranks()?.top_rank as Label;
        let m = (q - n - 1) as usize;
        let space = PartitionSpace::new(graded_target(&p, q)?, ell)?;
        let togpro = graded_toggle_promotion_schedule(&p, q, conv.toggle_promotion)?;
        let sliced = slice_schedule(&p, m);
        let all = space.enumerate(SUITE_CAP)?;
        let bad = crate::dynamics::first_disagreement(
            &all,
            |s| space.apply_schedule(s, &togpro),
            |s| space.apply_schedule(s, &sliced),
        );
        let cert = bad
            .as_ref()
            .map(|s| Certificate::new("slice decomposition", "schedules disagree", s, &[s]));
        r.record(bad.is_none(), format!("slices, {}", tag(&p, ell, q)), cert);
        // the graded schedule is Γ toggle-promotion transported by the isomorphism
        let b = bijection(&p, ell, q, &Conventions::default())?;
        let iso = graded_isomorphism(b.gamma(), &p, q)?;
        let transported = b.partitions().enumerate(SUITE_CAP)?.iter().all(|s| {
            let moved = |t: &crate::qpartition::QPartition| {
                let mut v = vec![0u16; t.values().len()];
                for (x, &y) in iso.iter().enumerate() {
                    v[y] = t.value(x);
                }
                crate::qpartition::QPartition::from_values(v)
            };
            moved(&b.toggle_promotion_with(s, conv.toggle_promotion))
                == space.apply_schedule(&moved(s), &togpro)
        });
        r.record(
            transported,
            format!("graded togpro transport, {}", tag(&p, ell, q)),
            None,
        );
    }
    Ok(())
}

fn hyperplane(r: &mut CriterionResult, conv: &Conventions) -> Result<()> {
    for (a, b, c, ell) in [(2usize, 2usize, 2usize, 1usize), (2, 2, 2, 2)] {
        let p = product_of_chains(&[a, b]);
        let q = (a + b + c - 1) as Label;
        let bij = bijection(&p, ell, q, conv)?;
        let pi = bij.gamma().three_chains_projection(&p, c as i64)?;
        let sched = pi.hyperplane_schedule(&[-1, -1, 1], conv.hyperplane)?;
        sched.check_commuting(bij.gamma().poset())?;
        let dom = bij.labelings().enumerate(SUITE_CAP)?;
        let cod = bij.partitions().enumerate(SUITE_CAP)?;
        let rep = equivariance(
            &format!("hyperplane ({a},{b},{c},{ell})"),
            &dom,
            &cod,
            |f| bij.phi(f),
            |f| bij.labelings().promotion_with(f, conv.promotion),
            |s| bij.partitions().apply_schedule(s, &sched),
        );
        r.record(rep.verified, rep.name, rep.counterexample);
    }
    r.note(format!("layer order: {:?}", conv.hyperplane));
    Ok(())
}

fn pro_sizes(space: &LabelingSpace, conv: &Conventions) -> Result<Vec<usize>> {
    let dec = OrbitDecomposition::compute("L", "pro", space.enumerate(SUITE_CAP)?, |f| {
        space.promotion_with(f, conv.promotion)
    })?;
    Ok(dec.sizes())
}

fn multifold(r: &mut CriterionResult, conv: &Conventions) -> Result<()> {
    for (a, b, c, ell) in [(2usize, 2usize, 2usize, 2usize), (1, 2, 3, 2)] {
        let q = (a + b + c - 1) as Label;
        let row = rowmotion_orbits(
            &PartitionSpace::new(product_of_chains(&[a, b, c]), ell)?,
            SUITE_CAP,
        )?
        .sizes();
        for (x, y) in [(a, b), (a, c), (b, c)] {
            let space = LabelingSpace::with_global_bound(product_of_chains(&[x, y]), ell, q)?;
            let sizes = pro_sizes(&space, conv)?;
            r.record(
                sizes == row,
                format!("L([{x}]x[{y}] x [{ell}], R^{q}) vs A^{ell}([{a}]x[{b}]x[{c}])"),
                None,
            );
        }
    }
    let (a, b, ell) = (2usize, 3usize, 2usize);
    let p = product_of_chains(&[a, b]);
    let flagged = LabelingSpace::new(p.clone(), ell, RestrictionFunction::type_a_flag(&p)?)?;
    let tri = LabelingSpace::with_global_bound(triangle(a), ell, (a + b) as Label)?;
    let lhs = pro_sizes(&flagged, conv)?;
    let rhs = pro_sizes(&tri, conv)?;
    let row = rowmotion_orbits(
        &PartitionSpace::new(triangle(a).product(&crate::poset::chain(b)), ell)?,
        SUITE_CAP,
    )?
    .sizes();
    r.record(
        lhs == rhs,
        "flagged ([2]x[3]) vs triangle_2 labelings",
        None,
    );
    r.record(
        lhs == row,
        "flagged ([2]x[3]) vs A^2(triangle_2 x [3])",
        None,
    );
    Ok(())
}

fn minuscule(r: &mut CriterionResult, conv: &Conventions) -> Result<()> {
    for spec in ["prod:2x3", "staircase:2", "propeller:1"] {
        let family = MinusculeFamily::from_spec(spec)?;
        let h = family.coxeter_number() as u64;
        let p = family.build()?;
        let row = rowmotion_orbits(&PartitionSpace::new(p.clone(), 2)?, SUITE_CAP)?.order();
        r.record(
            row == h,
            format!("row on A^2({spec}) has order {row}, h = {h}"),
            None,
        );
        let n = p.graded_ranks()?.top_rank as Label;
        let space = LabelingSpace::with_global_bound(p, 2, n + 2)?;
        let dec = OrbitDecomposition::compute("L", "pro", space.enumerate(SUITE_CAP)?, |f| {
            space.promotion_with(f, conv.promotion)
        })?;
        let pro = dec.order();
        r.record(
            pro == h,
            format!(
                "pro on L({spec} x [2], R^{}) has order {pro}, h = {h}",
                n + 2
            ),
            None,
        );
    }
    Ok(())
}

fn vee_sweeps(r: &mut CriterionResult, conv: &Conventions) -> Result<()> {
    let v = build_poset("V")?;
    for ell in 1..=3 {
        for m in 1..=3usize {
            let space = PartitionSpace::new(v.product(&crate::poset::chain(m)), ell)?;
            let dec = rowmotion_orbits(&space, SUITE_CAP)?;
            let bound = 2 * (m + 2);
            let cert = dec.size_not_dividing(bound, &format!("A^{ell}(V x [{m}]) divides {bound}"));
            r.record(
                cert.is_none(),
                format!("A^{ell}(V x [{m}]) order {}", dec.order()),
                cert,
            );
        }
    }
    for ell in 1..=3 {
        for q in 2..=6 {
            let space = LabelingSpace::with_global_bound(v.clone(), ell, q)?;
            let dec = OrbitDecomposition::compute("L", "pro", space.enumerate(SUITE_CAP)?, |f| {
                space.promotion_with(f, conv.promotion)
            })?;
            let bound = 2 * q as usize;
            let cert =
                dec.size_not_dividing(bound, &format!("L(V x [{ell}], R^{q}) divides {bound}"));
            r.record(
                cert.is_none(),
                format!("L(V x [{ell}], R^{q}) order {}", dec.order()),
                cert,
            );
        }
    }
    Ok(())
}

fn antipodal_sweep(r: &mut CriterionResult, scale: Scale) -> Result<()> {
    let top = match scale {
        Scale::Small => 3,
        Scale::Full => 6,
    };
    for a in 1..=top {
        let space = PartitionSpace::new(product_of_chains(&[a, 2, 2]), 2)?;
        let dec = rowmotion_orbits(&space, SUITE_CAP)?;
        let mut all = true;
        for x in 0..space.poset().len() {
            let y = space.poset().antipode(x)?;
            if y < x {
                continue;
            }
            let name = format!("A^2([{a}]x[2]x[2]) chi{{{x},{y}}}");
            let rep = homomesy(&dec, &name, |s| space.chi(s, &[x, y]));
            let ok = rep.is_c_mesic(Ratio::from_integer(2));
            all &= ok;
            r.record(ok, name, rep.certificate);
        }
        r.note(format!(
            "a = {a}: {} partitions, {} orbits, {}",
            dec.len(),
            dec.orbit_count(),
            if all { "2-mesic" } else { "not 2-mesic" }
        ));
    }
    Ok(())
}

/// The four single-convention flips.
pub fn convention_mutations() -> Vec<(&'static str, Conventions)> {
    let base = Conventions::default();
    vec![
        (
            "flipped ideal orientation",
            Conventions {
                orientation: IdealOrientation::LabelsBelow,
                ..base
            },
        ),
        (
            "reversed promotion sweep",
            Conventions {
                promotion: base.promotion.reversed(),
                ..base
            },
        ),
        (
            "reversed toggle-promotion sweep",
            Conventions {
                toggle_promotion: base.toggle_promotion.reversed(),
                ..base
            },
        ),
        (
            "reversed hyperplane layer order",
            Conventions {
                hyperplane: LayerOrder::LeftmostFirst,
                ..base
            },
        ),
    ]
}

fn mutations(r: &mut CriterionResult) -> Result<()> {
    for (name, conv) in convention_mutations() {
        let failed: Vec<u8> = [1u8, 2, 10]
            .into_iter()
            .filter(|&id| !run_criterion(id, Scale::Small, &conv).passed)
            .collect();
        r.record(!failed.is_empty(), format!("{name} went undetected"), None);
        r.note(format!("{name}: fails criteria {failed:?}"));
    }
    Ok(())
}
