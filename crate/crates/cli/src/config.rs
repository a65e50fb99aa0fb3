//! Optional `key = value` configuration file. Keys are the long flag names
//! (`prefix-len`, `alphabet`, ...); command-line flags take precedence.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};

const KNOWN_KEYS: &[&str] = &[
    "len",
    "alphabet",
    "kind",
    "pattern",
    "max-len",
    "prefix-len",
    "search-depth",
    "format",
    "out",
    "word-gen",
    "expect-none",
];

#[derive(Debug, Default, Clone)]
pub struct Config {
    values: BTreeMap<String, String>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (number, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| anyhow!("config line {}: expected key = value", number + 1))?;
            let key = key.trim().trim_start_matches("--").to_string();
            if !KNOWN_KEYS.contains(&key.as_str()) {
                bail!("config line {}: unknown key {key:?}", number + 1);
            }
            values.insert(key, value.trim().to_string());
        }
        Ok(Config { values })
    }

    /// The flag value if given, else the configured value, else `None`.
    pub fn resolve<T: FromStr>(&self, flag: Option<T>, key: &str) -> Result<Option<T>>
    where
        T::Err: std::fmt::Display,
    {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.values.get(key) {
            None => Ok(None),
            Some(raw) => raw
                .parse()
                .map(Some)
                .map_err(|e| anyhow!("config key {key}: {e}")),
        }
    }

    pub fn resolve_or<T: FromStr>(&self, flag: Option<T>, key: &str, default: T) -> Result<T>
    where
        T::Err: std::fmt::Display,
    {
        Ok(self.resolve(flag, key)?.unwrap_or(default))
    }
}
