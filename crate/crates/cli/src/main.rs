mod config;
mod family;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_rational::Ratio;
use orbitkit_core::conventions::{IdealOrientation, LayerOrder};
use orbitkit_core::dynamics::{
    equivariance, homomesy, resonance, Certificate, OrbitDecomposition, State,
};
use orbitkit_core::laws::{
    partition_dist_law, pstrict_dist_law, ssyt_box_count_law, ssyt_dist_law,
};
use orbitkit_core::pstrict::LabelingDoc;
use orbitkit_core::qpartition::PartitionDoc;
use orbitkit_core::suite::{run_criterion, Scale};
use orbitkit_core::{Conventions, Label, QPartition};

use config::{parse_vector, CommonArgs, RunConfig};
use family::{Dynamics, Family};
use report::Report;

#[derive(Parser, Debug)]
#[command(
    name = "orbitkit",
    version,
    about = "Orbits of promotion and rowmotion on labelings and partitions"
)]
struct Cli {
    #[command(flatten)]
    common: CommonArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count the elements of the set.
    Enumerate {
        /// Also write every element as JSON to this file.
        #[arg(long)]
        list: Option<PathBuf>,
    },
    /// Orbit decomposition of the action.
    Orbits,
    /// Order of the action, optionally checked against a claim.
    Order {
        #[arg(long)]
        expect: Option<u64>,
        /// Claim that every orbit size divides this number.
        #[arg(long)]
        divides: Option<usize>,
    },
    /// Orbit averages of each `--stat`.
    Homomesy {
        /// Claimed common average, e.g. `2` or `7/2`.
        #[arg(long)]
        expect: Option<String>,
    },
    /// Antipodal complement laws on products of two chains.
    Distribution {
        #[arg(long, value_enum)]
        law: Law,
        /// `AxB`.
        #[arg(long)]
        dims: String,
        /// Largest entry for the tableau laws.
        #[arg(long)]
        bound: Option<Label>,
    },
    /// Whether the action rotates the binary content (labelings) or Diff (partitions).
    Resonance {
        #[arg(long)]
        frequency: Option<usize>,
    },
    /// Whether Φ carries promotion to the given partition action.
    Equivariance {
        #[arg(long, value_enum, default_value = "togpro")]
        against: Against,
    },
    /// Apply Φ or its inverse to a JSON document (or an array of them).
    Bijection {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "forward")]
        direction: Direction,
    },
    /// Run the acceptance battery.
    Suite {
        #[arg(value_enum, default_value = "small")]
        scale: ScaleArg,
        /// Flip one convention to show that the battery notices.
        #[arg(long, value_enum)]
        mutate: Option<Mutation>,
        /// Run only these criteria.
        #[arg(long)]
        criterion: Vec<u8>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Law {
    /// Entry distributions on tableaux.
    Ssyt,
    /// Box-count distributions on tableaux.
    BoxCount,
    /// Hyperplane promotion on partitions, all four directions.
    Partition,
    /// Label distributions on P-strict labelings.
    Pstrict,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Against {
    Togpro,
    Row,
    Hpro,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Direction {
    Forward,
    Inverse,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ScaleArg {
    Small,
    Full,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mutation {
    Orientation,
    ProSweep,
    TogproSweep,
    HyperplaneOrder,
}

fn apply_mutation(c: Conventions, m: Mutation) -> Conventions {
    match m {
        Mutation::Orientation => Conventions {
            orientation: IdealOrientation::LabelsBelow,
            ..c
        },
        Mutation::ProSweep => Conventions {
            promotion: c.promotion.reversed(),
            ..c
        },
        Mutation::TogproSweep => Conventions {
            toggle_promotion: c.toggle_promotion.reversed(),
            ..c
        },
        Mutation::HyperplaneOrder => Conventions {
            hyperplane: match c.hyperplane {
                LayerOrder::RightmostFirst => LayerOrder::LeftmostFirst,
                LayerOrder::LeftmostFirst => LayerOrder::RightmostFirst,
            },
            ..c
        },
    }
}

fn decompose<T: State>(d: Dynamics<T>) -> Result<(OrbitDecomposition<T>, Dynamics<T>)> {
    let Dynamics {
        set,
        action,
        elements,
        act,
        stats,
        projection,
    } = d;
    let dec = OrbitDecomposition::compute(&set, &action, elements, &act)?;
    Ok((
        dec,
        Dynamics {
            set,
            action,
            elements: Vec::new(),
            act,
            stats,
            projection,
        },
    ))
}

fn fill_orbits<T: State>(report: &mut Report, dec: &OrbitDecomposition<T>) {
    let s = dec.summary();
    report.set = Some(s.set);
    report.action = Some(s.action);
    report.elements = Some(s.elements);
    report.orbit_count = Some(s.orbit_count);
    report.orbit_sizes = Some(s.orbit_sizes);
    report.order = Some(s.order);
}

fn orbit_command<T: State>(
    d: Dynamics<T>,
    report: &mut Report,
    expect_order: Option<u64>,
    divides: Option<usize>,
) -> Result<()> {
    let (dec, _) = decompose(d)?;
    fill_orbits(report, &dec);
    if let Some(n) = expect_order {
        if dec.order() != n {
            report.verified = false;
            let rep = dec.representatives();
            let trace: Vec<&T> = rep.to_vec();
            report.certificates.push(Certificate::new(
                &format!("order {n}"),
                format!("order is {}", dec.order()),
                rep[0],
                &trace,
            ));
        }
    }
    if let Some(n) = divides {
        if let Some(c) = dec.size_not_dividing(n, &format!("orbit sizes divide {n}")) {
            report.verified = false;
            report.certificates.push(c);
        }
    }
    Ok(())
}

fn homomesy_command<T: State>(
    d: Dynamics<T>,
    report: &mut Report,
    expect: Option<Ratio<i64>>,
) -> Result<()> {
    if d.stats.is_empty() {
        bail!("homomesy needs at least one --stat");
    }
    let (dec, d) = decompose(d)?;
    fill_orbits(report, &dec);
    for (name, stat) in &d.stats {
        let h = homomesy(&dec, name, stat);
        if let (Some(c), Some(avg)) = (expect, h.constant) {
            if avg != c {
                report.verified = false;
                let first = dec.representatives()[0];
                report.certificates.push(Certificate::new(
                    name,
                    format!("common average is {avg}, not {c}"),
                    first,
                    &[first],
                ));
            }
        }
        report.homomesies.push(h);
    }
    Ok(())
}

fn resonance_command<T: State>(
    d: Dynamics<T>,
    report: &mut Report,
    frequency: Option<usize>,
) -> Result<()> {
    let (dec, d) = decompose(d)?;
    fill_orbits(report, &dec);
    let (name, omega, proj) = d
        .projection
        .context("no cyclic projection for this set; partitions need --restriction")?;
    report
        .resonance
        .push(resonance(&dec, &name, frequency.unwrap_or(omega), proj));
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    let cfg = RunConfig::resolve(cli.common)?;
    if let Some(n) = cfg.workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("starting worker pool")?;
    }
    let name = match &cli.command {
        Command::Enumerate { .. } => "enumerate",
        Command::Orbits => "orbits",
        Command::Order { .. } => "order",
        Command::Homomesy { .. } => "homomesy",
        Command::Distribution { .. } => "distribution",
        Command::Resonance { .. } => "resonance",
        Command::Equivariance { .. } => "equivariance",
        Command::Bijection { .. } => "bijection",
        Command::Suite { .. } => "suite",
    };
    let mut report = Report::new(name, cfg.conventions);
    match cli.command {
        Command::Enumerate { list } => {
            let fam = family::build(&cfg)?;
            let (set, action, text) = match &fam {
                Family::Labelings(d) => (
                    &d.set,
                    &d.action,
                    list.as_ref()
                        .map(|_| serde_json::to_string(&d.elements))
                        .transpose()?,
                ),
                Family::Partitions(d) => (
                    &d.set,
                    &d.action,
                    list.as_ref()
                        .map(|_| serde_json::to_string(&d.elements))
                        .transpose()?,
                ),
            };
            report.set = Some(set.clone());
            report.action = Some(action.clone());
            report.elements = Some(match &fam {
                Family::Labelings(d) => d.elements.len(),
                Family::Partitions(d) => d.elements.len(),
            });
            if let (Some(path), Some(text)) = (list, text) {
                std::fs::write(&path, text + "\n")
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            eprintln!("{}: {} elements", set, report.elements.unwrap_or(0));
        }
        Command::Orbits | Command::Order { .. } => {
            let (expect, divides) = match cli.command {
                Command::Order { expect, divides } => (expect, divides),
                _ => (None, None),
            };
            match family::build(&cfg)? {
                Family::Labelings(d) => orbit_command(d, &mut report, expect, divides)?,
                Family::Partitions(d) => orbit_command(d, &mut report, expect, divides)?,
            }
            eprintln!(
                "{} under {}: {} orbits, order {}",
                report.set.as_deref().unwrap_or("?"),
                report.action.as_deref().unwrap_or("?"),
                report.orbit_count.unwrap_or(0),
                report.order.unwrap_or(0)
            );
        }
        Command::Homomesy { expect } => {
            let expect = expect
                .as_deref()
                .map(|s| {
                    s.trim()
                        .parse::<Ratio<i64>>()
                        .with_context(|| format!("bad ratio `{s}`"))
                })
                .transpose()?;
            match family::build(&cfg)? {
                Family::Labelings(d) => homomesy_command(d, &mut report, expect)?,
                Family::Partitions(d) => homomesy_command(d, &mut report, expect)?,
            }
            for h in &report.homomesies {
                eprintln!(
                    "{}: {}",
                    h.statistic,
                    if h.is_homomesic {
                        "homomesic"
                    } else {
                        "not homomesic"
                    }
                );
            }
        }
        Command::Resonance { frequency } => {
            match family::build(&cfg)? {
                Family::Labelings(d) => resonance_command(d, &mut report, frequency)?,
                Family::Partitions(d) => resonance_command(d, &mut report, frequency)?,
            }
            for r in &report.resonance {
                eprintln!(
                    "{} at frequency {}: verified {}",
                    r.projection, r.frequency, r.verified
                );
            }
        }
        Command::Distribution { law, dims, bound } => {
            let d = parse_vector(&dims.replace('x', ","))?;
            let [a, b] = d[..] else {
                bail!("--dims takes AxB");
            };
            let (a, b) = (usize::try_from(a)?, usize::try_from(b)?);
            let check = match law {
                Law::Ssyt | Law::BoxCount => {
                    let k = bound.context("tableau laws need --bound")?;
                    if matches!(law, Law::Ssyt) {
                        ssyt_dist_law(a, b, k, cfg.cap)?
                    } else {
                        ssyt_box_count_law(a, b, k, cfg.cap)?
                    }
                }
                Law::Partition => {
                    partition_dist_law(a, b, cfg.ell, cfg.conventions.hyperplane, cfg.cap)?
                }
                Law::Pstrict => pstrict_dist_law(a, b, cfg.ell, cfg.cap)?,
            };
            eprintln!("{}: verified {}", check.law, check.verified);
            report.distribution.push(check);
        }
        Command::Equivariance { against } => {
            let setup = family::setup(&cfg)?;
            let bij = family::bijection(&cfg, &setup)?;
            let dom = bij.labelings().enumerate(cfg.cap)?;
            let cod = bij.partitions().enumerate(cfg.cap)?;
            let conv = cfg.conventions;
            let pro = |f: &_| bij.labelings().promotion_with(f, conv.promotion);
            let phi = |f: &_| bij.phi(f);
            let name = format!("phi: pro -> {against:?}").to_lowercase();
            let rep = match against {
                Against::Togpro => equivariance(&name, &dom, &cod, phi, pro, |s: &QPartition| {
                    bij.toggle_promotion_with(s, conv.toggle_promotion)
                }),
                Against::Row => equivariance(&name, &dom, &cod, phi, pro, |s: &QPartition| {
                    bij.partitions().rowmotion(s)
                }),
                Against::Hpro => {
                    let schedule =
                        family::hyperplane_schedule(&cfg, &setup, Some(&bij), bij.gamma().poset())?;
                    equivariance(&name, &dom, &cod, phi, pro, |s: &QPartition| {
                        bij.partitions().apply_schedule(s, &schedule)
                    })
                }
            };
            report.set = Some(format!("L({} x [{}])", setup.poset.name(), cfg.ell));
            report.action = Some("pro".into());
            report.elements = Some(dom.len());
            eprintln!(
                "{}: verified {} over {} elements",
                rep.name, rep.verified, rep.checked
            );
            report.equivariance.push(rep);
        }
        Command::Bijection { input, direction } => {
            let setup = family::setup(&cfg)?;
            let bij = family::bijection(&cfg, &setup)?;
            let text = std::fs::read_to_string(&input)
                .with_context(|| format!("reading {}", input.display()))?;
            let value: serde_json::Value =
                serde_json::from_str(&text).context("input is not JSON")?;
            let single = !value.is_array();
            let docs: Vec<serde_json::Value> = match value {
                serde_json::Value::Array(v) => v,
                v => vec![v],
            };
            let gamma_ref = bij.gamma().poset().name().to_string();
            let restriction_ref = cfg.restriction.clone().unwrap_or_default();
            let out = docs
                .into_iter()
                .map(|doc| -> Result<serde_json::Value> {
                    Ok(match direction {
                        Direction::Forward => {
                            let doc: LabelingDoc = serde_json::from_value(doc)
                                .context("expected a labeling document")?;
                            let f = bij.labelings().from_doc(&doc)?;
                            let mut p = bij.partitions().to_doc(&bij.phi(&f));
                            p.poset_ref = gamma_ref.clone();
                            serde_json::to_value(p)?
                        }
                        Direction::Inverse => {
                            let doc: PartitionDoc = serde_json::from_value(doc)
                                .context("expected a partition document")?;
                            let s = bij.partitions().from_doc(&doc)?;
                            serde_json::to_value(
                                bij.labelings()
                                    .to_doc(&bij.phi_inverse(&s)?, &restriction_ref),
                            )?
                        }
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let text = if single {
                serde_json::to_string_pretty(&out[0])?
            } else {
                serde_json::to_string_pretty(&out)?
            };
            match &cfg.output {
                Some(p) => std::fs::write(p, text + "\n")
                    .with_context(|| format!("writing {}", p.display()))?,
                None => println!("{text}"),
            }
            return Ok(true);
        }
        Command::Suite {
            scale,
            mutate,
            criterion,
        } => {
            let scale = match scale {
                ScaleArg::Small => Scale::Small,
                ScaleArg::Full => Scale::Full,
            };
            let conv = mutate.map_or(cfg.conventions, |m| apply_mutation(cfg.conventions, m));
            report.conventions = conv;
            let ids: Vec<u8> = if criterion.is_empty() {
                (1..=15).collect()
            } else {
                criterion
            };
            for id in ids {
                let r = run_criterion(id, scale, &conv);
                eprintln!("{}", r.line());
                for line in &r.detail {
                    eprintln!("    {line}");
                }
                report.criteria.push(r);
            }
        }
    }
    let report = report.finish();
    report.write_json(cfg.output.as_deref())?;
    if let Some(path) = &cfg.csv {
        report.write_csv(path)?;
    }
    Ok(report.verified)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
