use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use orbitkit_core::Conventions;
use serde::Deserialize;

pub const DEFAULT_CAP: usize = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ActionName {
    /// Promotion on P-strict labelings.
    Pro,
    /// Rowmotion on Q-partitions.
    Row,
    /// Toggle-promotion on partitions of the Γ poset.
    Togpro,
    /// Hyperplane promotion along `--pi` and `--v`.
    Hpro,
}

impl ActionName {
    pub fn as_str(self) -> &'static str {
        match self {
            ActionName::Pro => "pro",
            ActionName::Row => "row",
            ActionName::Togpro => "togpro",
            ActionName::Hpro => "hpro",
        }
    }
}

/// Flags shared by every subcommand. Each may also come from `--config`.
#[derive(Args, Clone, Debug, Default)]
pub struct CommonArgs {
    /// Poset spec, e.g. `prod:2x3`, `V`, `triangle:2`, `propeller:2*chain:2`.
    #[arg(long, global = true)]
    pub poset: Option<String>,
    #[arg(long, global = true)]
    pub ell: Option<usize>,
    /// `q:N`, `flags:typea`, `flags:b1,b2,…`, `bounds:a1,…/b1,…` or `sets:1,2|2,4|…`.
    #[arg(long, global = true)]
    pub restriction: Option<String>,
    #[arg(long, global = true, value_enum)]
    pub action: Option<ActionName>,
    /// Projection for hpro: `id`, `threechains:a,b,c` or `table:<file>`.
    #[arg(long, global = true)]
    pub pi: Option<String>,
    /// Direction for hpro, e.g. `-1,-1,1`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub v: Option<String>,
    /// Statistic spec; repeatable.
    #[arg(long = "stat", global = true)]
    pub stats: Vec<String>,
    /// Largest state space to enumerate.
    #[arg(long, global = true)]
    pub cap: Option<usize>,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Also write a CSV summary.
    #[arg(long, global = true)]
    pub csv: Option<PathBuf>,
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// TOML file with the same keys as the flags; flags win.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
struct FileConfig {
    poset: Option<String>,
    ell: Option<usize>,
    restriction: Option<String>,
    action: Option<ActionName>,
    pi: Option<String>,
    v: Option<String>,
    #[serde(default)]
    stat: Vec<String>,
    cap: Option<usize>,
    output: Option<PathBuf>,
    csv: Option<PathBuf>,
    workers: Option<usize>,
    #[serde(default)]
    conventions: Conventions,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub poset: Option<String>,
    pub ell: usize,
    pub restriction: Option<String>,
    pub action: Option<ActionName>,
    pub pi: Option<String>,
    pub v: Option<Vec<i64>>,
    pub stats: Vec<String>,
    pub cap: usize,
    pub output: Option<PathBuf>,
    pub csv: Option<PathBuf>,
    pub workers: Option<usize>,
    pub conventions: Conventions,
}

fn read_file(path: &Path) -> Result<FileConfig> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading config {}", path.display()))?;
    toml::from_str(&text).with_context(|| format!("parsing config {}", path.display()))
}

pub fn parse_vector(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .with_context(|| format!("bad integer `{t}` in `{s}`"))
        })
        .collect()
}

impl RunConfig {
    pub fn resolve(args: CommonArgs) -> Result<Self> {
        let file = match &args.config {
            Some(path) => read_file(path)?,
            None => FileConfig::default(),
        };
        let cap = args.cap.or(file.cap).unwrap_or(DEFAULT_CAP);
        if cap == 0 {
            bail!("--cap must be positive");
        }
        let ell = args.ell.or(file.ell).unwrap_or(1);
        if ell == 0 {
            bail!("--ell must be positive");
        }
        if args.workers.or(file.workers) == Some(0) {
            bail!("--workers must be positive");
        }
        let v = args.v.or(file.v).map(|s| parse_vector(&s)).transpose()?;
        Ok(RunConfig {
            poset: args.poset.or(file.poset),
            ell,
            restriction: args.restriction.or(file.restriction),
            action: args.action.or(file.action),
            pi: args.pi.or(file.pi),
            v,
            stats: if args.stats.is_empty() {
                file.stat
            } else {
                args.stats
            },
            cap,
            output: args.output.or(file.output),
            csv: args.csv.or(file.csv),
            workers: args.workers.or(file.workers),
            conventions: file.conventions,
        })
    }

    pub fn poset_spec(&self) -> Result<&str> {
        self.poset.as_deref().context("--poset is required")
    }
}
