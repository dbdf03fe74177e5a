//! Run configuration: JSON file overlaid by command-line flags.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context as _, Result};
use clap::ValueEnum;
use mrv_core::verify::{check_names, check_rings, CheckBox};
use mrv_core::Context;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Md,
    #[default]
    Text,
}

/// Every field is optional so a file can set any subset.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub p_max: Option<i64>,
    pub q_max: Option<i64>,
    pub m_max: Option<i64>,
    pub rings: Option<Vec<String>>,
    pub checks: Option<Vec<String>>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    pub jobs: Option<usize>,
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
        serde_json::from_str(&text).with_context(|| format!("parsing config {}", path.display()))
    }

    /// Fields set in `flags` win.
    pub fn overridden_by(self, flags: RunConfig) -> RunConfig {
        RunConfig {
            p_max: flags.p_max.or(self.p_max),
            q_max: flags.q_max.or(self.q_max),
            m_max: flags.m_max.or(self.m_max),
            rings: flags.rings.or(self.rings),
            checks: flags.checks.or(self.checks),
            format: flags.format.or(self.format),
            out: flags.out.or(self.out),
            jobs: flags.jobs.or(self.jobs),
        }
    }

    pub fn bounds(&self) -> CheckBox {
        let d = CheckBox::DEFAULT;
        CheckBox::new(self.p_max.unwrap_or(d.p_max), self.q_max.unwrap_or(d.q_max), self.m_max.unwrap_or(d.m_max))
    }

    /// Selected checks in registry order; `rings`, when set, keeps only
    /// checks that read one of them.
    pub fn checks(&self) -> Vec<String> {
        let mut names: Vec<String> = match &self.checks {
            Some(c) => c.clone(),
            None => check_names().map(String::from).collect(),
        };
        if let Some(rings) = &self.rings {
            names.retain(|c| check_rings(c).iter().any(|r| rings.iter().any(|x| x == r)));
        }
        names
    }

    /// Rejects bad bounds and unknown names before anything is computed.
    pub fn validate(&self, ctx: &Context) -> Result<()> {
        let b = self.bounds();
        if b.p_max < 0 || b.q_max < 0 || b.m_max < 0 {
            bail!("bounds must be non-negative, got p_max={} q_max={} m_max={}", b.p_max, b.q_max, b.m_max);
        }
        if self.jobs == Some(0) {
            bail!("--jobs must be at least 1");
        }
        for r in self.rings.iter().flatten() {
            ctx.ring(r)?;
        }
        let known: Vec<&str> = check_names().collect();
        for c in self.checks.iter().flatten() {
            if !known.contains(&c.as_str()) {
                bail!("unknown check `{c}` (known: {})", known.join(", "));
            }
        }
        if self.checks().is_empty() {
            bail!("no checks selected");
        }
        Ok(())
    }
}
