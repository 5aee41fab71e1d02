use std::path::{Path, PathBuf};

use protosim::ProtocolConfig;
use ratemodel::{LinkParams, NodeParams};
use serde::Deserialize;

use crate::CliError;

/// Node preset name or fully inline parameters.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum NodeSpec {
    Preset(String),
    Inline(NodeParams),
}

/// Optional fiber-channel overrides.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkOverrides {
    pub gamma: Option<f64>,
    pub c_m_per_s: Option<f64>,
    pub l0_km: Option<f64>,
}

/// Run configuration loaded from --config JSON.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub node: Option<NodeSpec>,
    pub link: Option<LinkOverrides>,
    pub sim: Option<ProtocolConfig>,
    pub output: Option<PathBuf>,
    pub seed: Option<u64>,
    pub format: Option<String>,
}

impl RunConfig {
    pub fn load(path: Option<&Path>) -> Result<Self, CliError> {
        let Some(path) = path else {
            return Ok(Self::default());
        };
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::Config(format!("invalid config {}: {e}", path.display())))
    }

    /// Node parameters from the config, or the preset chosen on the command
    /// line, or CURRENT.
    pub fn node(&self, flag_preset: Option<&str>) -> Result<NodeParams, CliError> {
        if let Some(spec) = &self.node {
            return match spec {
                NodeSpec::Inline(node) => Ok(node.clone()),
                NodeSpec::Preset(name) => preset(name),
            };
        }
        preset(flag_preset.unwrap_or("current"))
    }

    /// Link for length `l_km` with any configured overrides applied.
    pub fn link(&self, l_km: f64) -> LinkParams {
        let mut link = LinkParams::new(l_km);
        if let Some(o) = &self.link {
            if let Some(g) = o.gamma {
                link.gamma = g;
            }
            if let Some(c) = o.c_m_per_s {
                link.c_m_per_s = c;
            }
            if let Some(l0) = o.l0_km {
                link.l0_km = l0;
            }
        }
        link
    }
}

pub fn preset(name: &str) -> Result<NodeParams, CliError> {
    match name {
        "current" => Ok(NodeParams::current()),
        "enhanced" => Ok(NodeParams::enhanced()),
        other => Err(CliError::Config(format!(
            "unknown node preset '{other}' (expected 'current' or 'enhanced')"
        ))),
    }
}
