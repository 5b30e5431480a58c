//! Run configuration: JSON config file merged under command-line flags
//! (flags win). Unknown keys in the file are rejected.

use std::fs;
use std::path::{Path, PathBuf};

use frwt::io::{GridSpec, ScaleSpec};
use frwt::{FrwtError, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub theta: Option<f64>,
    pub wavelet: Option<String>,
    pub wavelet_file: Option<PathBuf>,
    pub input: Option<PathBuf>,
    pub out: Option<PathBuf>,
    pub scales: Option<ScaleSpec>,
    pub translations: Option<GridSpec>,
    pub normalized: Option<bool>,
    pub path: Option<String>,
    pub reference: Option<PathBuf>,
    pub synthesis_wavelet: Option<String>,
    pub synthesis_wavelet_file: Option<PathBuf>,
    pub only: Option<String>,
    pub perturb: Option<f64>,
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        serde_json::from_str(&text)
            .map_err(|e| FrwtError::MalformedCsv(format!("config {}: {e}", path.display())))
    }

    /// Overlays `self` (command-line values) on top of `base` (config file).
    pub fn over(self, base: RunConfig) -> RunConfig {
        RunConfig {
            theta: self.theta.or(base.theta),
            wavelet: self.wavelet.or(base.wavelet),
            wavelet_file: self.wavelet_file.or(base.wavelet_file),
            input: self.input.or(base.input),
            out: self.out.or(base.out),
            scales: self.scales.or(base.scales),
            translations: self.translations.or(base.translations),
            normalized: self.normalized.or(base.normalized),
            path: self.path.or(base.path),
            reference: self.reference.or(base.reference),
            synthesis_wavelet: self.synthesis_wavelet.or(base.synthesis_wavelet),
            synthesis_wavelet_file: self.synthesis_wavelet_file.or(base.synthesis_wavelet_file),
            only: self.only.or(base.only),
            perturb: self.perturb.or(base.perturb),
        }
    }
}

/// `min,max,count[,signed|unsigned]` (negative branch included by default).
pub fn parse_scales(s: &str) -> std::result::Result<ScaleSpec, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 && parts.len() != 4 {
        return Err("expected min,max,count[,signed|unsigned]".into());
    }
    let min: f64 = parts[0].trim().parse().map_err(|_| "bad min")?;
    let max: f64 = parts[1].trim().parse().map_err(|_| "bad max")?;
    let per_sign: usize = parts[2].trim().parse().map_err(|_| "bad count")?;
    let signed = match parts.get(3).map(|p| p.trim()) {
        None | Some("signed") => true,
        Some("unsigned") => false,
        Some(other) => return Err(format!("bad sign flag `{other}`")),
    };
    Ok(ScaleSpec {
        min,
        max,
        per_sign,
        signed,
    })
}

/// `min,max,count`.
pub fn parse_translations(s: &str) -> std::result::Result<GridSpec, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err("expected min,max,count".into());
    }
    Ok(GridSpec {
        min: parts[0].trim().parse().map_err(|_| "bad min")?,
        max: parts[1].trim().parse().map_err(|_| "bad max")?,
        count: parts[2].trim().parse().map_err(|_| "bad count")?,
    })
}
