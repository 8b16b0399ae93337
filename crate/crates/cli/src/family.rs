//! Turns a resolved config into an enumerated set with an action, statistics
//! and (where one exists) a cyclic projection.

use std::sync::Arc;

use anyhow::{bail, Context, Result};
use orbitkit_core::gamma::LabelingBijection;
use orbitkit_core::poset::build_poset_capped;
use orbitkit_core::pstrict::LabelingStatistic;
use orbitkit_core::qpartition::{LatticeProjection, PartitionStatistic, ToggleSchedule};
use orbitkit_core::{
    Label, LabelingSpace, PStrictLabeling, PartitionSpace, Poset, QPartition, RestrictionFunction,
};

use crate::config::{parse_vector, ActionName, RunConfig};

pub type Act<T> = Box<dyn Fn(&T) -> T + Send + Sync>;
pub type Stat<T> = Box<dyn Fn(&T) -> i64 + Send + Sync>;
pub type Projection<T> = Box<dyn Fn(&T) -> Vec<u8> + Send + Sync>;

pub struct Dynamics<T> {
    pub set: String,
    pub action: String,
    pub elements: Vec<T>,
    pub act: Act<T>,
    pub stats: Vec<(String, Stat<T>)>,
    /// Name, frequency and map.
    pub projection: Option<(String, usize, Projection<T>)>,
}

pub enum Family {
    Labelings(Dynamics<PStrictLabeling>),
    Partitions(Dynamics<QPartition>),
}

pub fn parse_restriction(spec: &str, poset: &Poset) -> Result<RestrictionFunction> {
    let (kind, rest) = spec
        .split_once(':')
        .with_context(|| format!("restriction `{spec}` needs a `kind:` prefix"))?;
    let labels = |s: &str| -> Result<Vec<Label>> {
        parse_vector(s)?
            .into_iter()
            .map(|x| Label::try_from(x).context("label out of range"))
            .collect()
    };
    let r = match kind {
        "q" => RestrictionFunction::from_global_bound(
            poset,
            rest.trim().parse().context("bad bound")?,
        )?,
        "flags" if rest == "typea" => RestrictionFunction::type_a_flag(poset)?,
        "flags" => RestrictionFunction::from_flags(poset, &labels(rest)?)?,
        "bounds" => {
            let (lo, hi) = rest
                .split_once('/')
                .context("bounds are written a1,a2,…/b1,b2,…")?;
            RestrictionFunction::from_bounds(poset, &labels(lo)?, &labels(hi)?)?
        }
        "sets" => {
            let sets = rest.split('|').map(labels).collect::<Result<Vec<_>>>()?;
            RestrictionFunction::from_sets(sets).make_consistent(poset)?
        }
        _ => bail!("unknown restriction kind `{kind}`"),
    };
    Ok(r)
}

pub struct Setup {
    pub poset: Poset,
    pub restriction: Option<RestrictionFunction>,
}

pub fn setup(cfg: &RunConfig) -> Result<Setup> {
    let poset = build_poset_capped(cfg.poset_spec()?, cfg.cap)?;
    let restriction = cfg
        .restriction
        .as_deref()
        .map(|s| parse_restriction(s, &poset))
        .transpose()?;
    Ok(Setup { poset, restriction })
}

pub fn bijection(cfg: &RunConfig, setup: &Setup) -> Result<LabelingBijection> {
    let r = setup
        .restriction
        .clone()
        .context("this command needs --restriction")?;
    let space = LabelingSpace::new(setup.poset.clone(), cfg.ell, r)?;
    Ok(LabelingBijection::new(space)?.with_orientation(cfg.conventions.orientation))
}

fn labeling_set_name(cfg: &RunConfig, space: &LabelingSpace) -> String {
    format!(
        "L({} x [{}], {})",
        space.poset().name(),
        space.ell(),
        cfg.restriction.as_deref().unwrap_or("-")
    )
}

/// The toggle schedule of hyperplane promotion on `target`.
pub fn hyperplane_schedule(
    cfg: &RunConfig,
    setup: &Setup,
    bij: Option<&LabelingBijection>,
    target: &Poset,
) -> Result<ToggleSchedule> {
    let v = cfg.v.as_ref().context("hpro needs --v")?;
    let pi = cfg.pi.as_deref().unwrap_or("id");
    let projection = if pi == "id" {
        LatticeProjection::identity(target)?
    } else if let Some(abc) = pi.strip_prefix("threechains:") {
        let abc = parse_vector(abc)?;
        let [a, b, c] = abc[..] else {
            bail!("threechains takes a,b,c");
        };
        let bij = bij.context("threechains acts on Γ partitions; give --restriction")?;
        if setup.poset.chain_dims().as_deref() != Some(&[a, b][..]) {
            bail!("threechains:{a},{b},{c} needs --poset prod:{a}x{b}");
        }
        let q = a + b + c - 1;
        if bij.labelings().restriction()
            != &RestrictionFunction::from_global_bound(&setup.poset, q as Label)?
        {
            bail!("threechains:{a},{b},{c} needs --restriction q:{q}");
        }
        bij.gamma().three_chains_projection(&setup.poset, c)?
    } else if let Some(path) = pi.strip_prefix("table:") {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
        let image: Vec<Vec<i64>> =
            serde_json::from_str(&text).with_context(|| format!("parsing {path}"))?;
        LatticeProjection::new(target, image)?
    } else {
        bail!("unknown projection `{pi}`");
    };
    Ok(projection.hyperplane_schedule(v, cfg.conventions.hyperplane)?)
}

pub fn build(cfg: &RunConfig) -> Result<Family> {
    let setup = setup(cfg)?;
    let action = cfg.action.unwrap_or(if setup.restriction.is_some() {
        ActionName::Pro
    } else {
        ActionName::Row
    });
    let conv = cfg.conventions;
    if action == ActionName::Pro {
        let r = setup
            .restriction
            .clone()
            .context("pro needs --restriction")?;
        let space = Arc::new(LabelingSpace::new(setup.poset.clone(), cfg.ell, r)?);
        let elements = space.enumerate(cfg.cap)?;
        let stats = cfg
            .stats
            .iter()
            .map(|spec| {
                let stat = LabelingStatistic::parse(spec, &space)?;
                let space = Arc::clone(&space);
                let f: Stat<PStrictLabeling> = Box::new(move |f| stat.evaluate(&space, f));
                Ok((spec.clone(), f))
            })
            .collect::<Result<_>>()?;
        let q = space.restriction().label_range().1;
        let s = Arc::clone(&space);
        let projection: Projection<PStrictLabeling> = Box::new(move |f| s.content(f, q));
        let s = Arc::clone(&space);
        return Ok(Family::Labelings(Dynamics {
            set: labeling_set_name(cfg, &space),
            action: action.as_str().into(),
            elements,
            act: Box::new(move |f| s.promotion_with(f, conv.promotion)),
            stats,
            projection: Some(("con".into(), q as usize, projection)),
        }));
    }
    let bij = match setup.restriction {
        Some(_) => Some(Arc::new(bijection(cfg, &setup)?)),
        None => None,
    };
    let space = Arc::new(match &bij {
        Some(b) => b.partitions().clone(),
        None => PartitionSpace::new(setup.poset.clone(), cfg.ell)?,
    });
    let act: Act<QPartition> = match action {
        ActionName::Row => {
            let s = Arc::clone(&space);
            Box::new(move |x| s.rowmotion(x))
        }
        ActionName::Togpro => {
            let b = Arc::clone(
                bij.as_ref()
                    .context("togpro acts on Γ partitions; give --restriction")?,
            );
            Box::new(move |x| b.toggle_promotion_with(x, conv.toggle_promotion))
        }
        ActionName::Hpro => {
            let schedule = hyperplane_schedule(cfg, &setup, bij.as_deref(), space.poset())?;
            let s = Arc::clone(&space);
            Box::new(move |x| s.apply_schedule(x, &schedule))
        }
        ActionName::Pro => unreachable!("handled above"),
    };
    let stats = cfg
        .stats
        .iter()
        .map(|spec| {
            let stat = PartitionStatistic::parse(spec, space.poset())?;
            let s = Arc::clone(&space);
            let f: Stat<QPartition> = Box::new(move |x| stat.evaluate(&s, x));
            Ok((spec.clone(), f))
        })
        .collect::<Result<_>>()?;
    let projection = bij.as_ref().map(|b| {
        let q = b.labelings().restriction().label_range().1;
        let b = Arc::clone(b);
        let f: Projection<QPartition> = Box::new(move |x| b.diff(x, q));
        ("diff".to_string(), q as usize, f)
    });
    Ok(Family::Partitions(Dynamics {
        set: format!("A^{}({})", cfg.ell, space.poset().name()),
        action: action.as_str().into(),
        elements: space.enumerate(cfg.cap)?,
        act,
        stats,
        projection,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use orbitkit_core::poset::build_poset;

    #[test]
    fn restriction_specs() {
        let p = build_poset("prod:2x2").unwrap();
        assert_eq!(parse_restriction("q:4", &p).unwrap().set(0), &[1, 2]);
        let flagged = parse_restriction("flags:typea", &p).unwrap();
        assert_eq!(flagged, RestrictionFunction::type_a_flag(&p).unwrap());
        let b = parse_restriction("bounds:1,1,1,1/4,4,4,4", &p).unwrap();
        assert_eq!(b, RestrictionFunction::from_global_bound(&p, 4).unwrap());
        assert!(parse_restriction("sets:1|2|2|3", &p).is_ok());
        for bad in [
            "q",
            "q:x",
            "flags:1,2",
            "bounds:1,1,1,1",
            "wat:3",
            "sets:1|1|1|1",
        ] {
            assert!(parse_restriction(bad, &p).is_err(), "{bad}");
        }
    }
}
