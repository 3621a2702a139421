//! key=value configuration files. Precedence: built-in defaults, then the
//! file, then command-line flags.

use std::path::Path;
use zetalap::{Error, Result};

#[derive(Debug, Default)]
pub struct FileConfig {
    pub seed: Option<u64>,
    pub step: Option<f64>,
    pub workers: Option<usize>,
    pub grid: Option<usize>,
    pub format: Option<String>,
    pub ns: Option<Vec<u32>>,
}

impl FileConfig {
    pub fn load(path: Option<&Path>) -> Result<Self> {
        let Some(path) = path else {
            return Ok(FileConfig::default());
        };
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        let mut cfg = FileConfig::default();
        for (lineno, line) in text.lines().enumerate() {
            let body = line.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let Some((key, value)) = body.split_once('=') else {
                return Err(Error::Usage(format!(
                    "{}:{}: expected key=value",
                    path.display(),
                    lineno + 1
                )));
            };
            let (key, value) = (key.trim(), value.trim());
            let parse_err = |what: &str| {
                Error::Usage(format!(
                    "{}:{}: bad {what} value: {value}",
                    path.display(),
                    lineno + 1
                ))
            };
            match key {
                "seed" => cfg.seed = Some(value.parse().map_err(|_| parse_err("seed"))?),
                "step" => cfg.step = Some(value.parse().map_err(|_| parse_err("step"))?),
                "workers" => cfg.workers = Some(value.parse().map_err(|_| parse_err("workers"))?),
                "grid" => cfg.grid = Some(value.parse().map_err(|_| parse_err("grid"))?),
                "format" => cfg.format = Some(value.to_string()),
                "ns" => {
                    let ns: std::result::Result<Vec<u32>, _> =
                        value.split(',').map(|p| p.trim().parse()).collect();
                    cfg.ns = Some(ns.map_err(|_| parse_err("ns"))?);
                }
                other => {
                    return Err(Error::Usage(format!(
                        "{}:{}: unknown configuration key: {other}",
                        path.display(),
                        lineno + 1
                    )))
                }
            }
        }
        Ok(cfg)
    }
}
