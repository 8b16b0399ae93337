use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use orbitkit_core::dynamics::{EquivarianceReport, HomomesyReport, ResonanceReport};
use orbitkit_core::laws::LawCheck;
use orbitkit_core::suite::CriterionResult;
use orbitkit_core::{Certificate, Conventions};
use serde::Serialize;

/// The JSON document every subcommand writes. Keys are always present so
/// downstream tools can rely on the shape.
#[derive(Debug, Default, Serialize)]
pub struct Report {
    pub command: String,
    pub set: Option<String>,
    pub action: Option<String>,
    pub elements: Option<usize>,
    pub orbit_count: Option<usize>,
    pub orbit_sizes: Option<BTreeMap<usize, usize>>,
    pub order: Option<u64>,
    pub homomesies: Vec<HomomesyReport>,
    pub resonance: Vec<ResonanceReport>,
    pub equivariance: Vec<EquivarianceReport>,
    pub distribution: Vec<LawCheck>,
    pub criteria: Vec<CriterionResult>,
    pub certificates: Vec<Certificate>,
    pub conventions: Conventions,
    pub verified: bool,
}

impl Report {
    pub fn new(command: &str, conventions: Conventions) -> Self {
        Report {
            command: command.to_string(),
            conventions,
            verified: true,
            ..Report::default()
        }
    }

    /// Moves every witness into `certificates` and recomputes `verified`.
    pub fn finish(mut self) -> Self {
        let mut certs = Vec::new();
        let mut ok = true;
        for h in &self.homomesies {
            ok &= h.is_homomesic;
            certs.extend(h.certificate.clone());
        }
        for r in &self.resonance {
            ok &= r.verified;
            certs.extend(r.counterexample.clone());
        }
        for e in &self.equivariance {
            ok &= e.verified;
            certs.extend(e.counterexample.clone());
        }
        for d in &self.distribution {
            ok &= d.verified;
            certs.extend(d.counterexample.clone());
        }
        for c in &self.criteria {
            ok &= c.passed;
            certs.extend(c.certificates.iter().cloned());
        }
        self.verified &= ok;
        self.certificates.extend(certs);
        self
    }

    pub fn write_json(&self, path: Option<&Path>) -> Result<()> {
        let text = serde_json::to_string_pretty(self)?;
        match path {
            Some(p) => {
                std::fs::write(p, text + "\n").with_context(|| format!("writing {}", p.display()))
            }
            None => {
                let mut out = std::io::stdout().lock();
                writeln!(out, "{text}")?;
                Ok(())
            }
        }
    }

    /// A flat table for the parts this command produced.
    pub fn write_csv(&self, path: &Path) -> Result<()> {
        let mut w =
            csv::Writer::from_path(path).with_context(|| format!("writing {}", path.display()))?;
        if !self.criteria.is_empty() {
            w.write_record(["id", "title", "passed", "checks"])?;
            for c in &self.criteria {
                w.write_record([
                    c.id.to_string(),
                    c.title.clone(),
                    c.passed.to_string(),
                    c.checks.to_string(),
                ])?;
            }
        } else if !self.homomesies.is_empty() {
            w.write_record(["statistic", "average", "orbits"])?;
            for h in &self.homomesies {
                let averages = serde_json::to_value(h)?;
                if let Some(map) = averages["averages"].as_object() {
                    for (avg, n) in map {
                        w.write_record([h.statistic.clone(), avg.clone(), n.to_string()])?;
                    }
                }
            }
        } else if !self.resonance.is_empty() {
            w.write_record(["projection", "frequency", "verified", "degenerate"])?;
            for r in &self.resonance {
                w.write_record([
                    r.projection.clone(),
                    r.frequency.to_string(),
                    r.verified.to_string(),
                    r.degenerate.to_string(),
                ])?;
            }
        } else if !self.equivariance.is_empty() {
            w.write_record(["name", "checked", "verified"])?;
            for e in &self.equivariance {
                w.write_record([
                    e.name.clone(),
                    e.checked.to_string(),
                    e.verified.to_string(),
                ])?;
            }
        } else if !self.distribution.is_empty() {
            w.write_record(["law", "instances", "verified"])?;
            for d in &self.distribution {
                w.write_record([
                    d.law.clone(),
                    d.instances.to_string(),
                    d.verified.to_string(),
                ])?;
            }
        } else if let Some(sizes) = &self.orbit_sizes {
            w.write_record(["size", "count"])?;
            for (s, n) in sizes {
                w.write_record([s.to_string(), n.to_string()])?;
            }
        } else {
            w.write_record(["set", "elements", "order"])?;
            w.write_record([
                self.set.clone().unwrap_or_default(),
                self.elements.map(|n| n.to_string()).unwrap_or_default(),
                self.order.map(|n| n.to_string()).unwrap_or_default(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}
