//! Run manifests: every result-writing command records what ran, with which
//! parameters and inputs, and what it produced, so runs can be replayed and
//! verified bit for bit.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde_json::json;
use sha2::{Digest, Sha256};

pub const MANIFEST_SCHEMA_VERSION: u32 = 1;

pub fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    let mut out = String::with_capacity(64);
    for b in digest {
        out.push_str(&format!("{b:02x}"));
    }
    out
}

pub fn file_digest(path: &Path) -> Result<String> {
    let bytes = fs::read(path).with_context(|| format!("cannot digest {}", path.display()))?;
    Ok(sha256_hex(&bytes))
}

/// Record of one result-writing invocation.
pub struct RunManifest {
    command: String,
    argv: Vec<String>,
    parameters: BTreeMap<String, String>,
    seed: Option<u64>,
    input_digests: BTreeMap<String, String>,
    output_digests: BTreeMap<String, String>,
    started: String,
    finished: Option<String>,
}

impl RunManifest {
    /// Starts a manifest for `command`; `argv` is the full program argument
    /// vector (without the binary name).
    pub fn start(command: &str, argv: Vec<String>) -> Self {
        RunManifest {
            command: command.to_string(),
            argv,
            parameters: BTreeMap::new(),
            seed: None,
            input_digests: BTreeMap::new(),
            output_digests: BTreeMap::new(),
            started: chrono::Utc::now().to_rfc3339(),
            finished: None,
        }
    }

    pub fn parameter(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn seed(&mut self, seed: u64) -> &mut Self {
        self.seed = Some(seed);
        self
    }

    pub fn input(&mut self, path: &Path) -> Result<&mut Self> {
        self.input_digests
            .insert(path.display().to_string(), file_digest(path)?);
        Ok(self)
    }

    pub fn output(&mut self, path: &Path) -> Result<&mut Self> {
        self.output_digests
            .insert(path.display().to_string(), file_digest(path)?);
        Ok(self)
    }

    /// Finishes the run and writes `<primary_output>.manifest.json`.
    pub fn write_next_to(mut self, primary_output: &Path) -> Result<PathBuf> {
        self.finished = Some(chrono::Utc::now().to_rfc3339());
        let path = manifest_path(primary_output);
        let value = json!({
            "schema_version": MANIFEST_SCHEMA_VERSION,
            "artifact_version": env!("CARGO_PKG_VERSION"),
            "command": self.command,
            "argv": self.argv,
            "parameters": self.parameters,
            "seed": self.seed,
            "input_digests": self.input_digests,
            "output_digests": self.output_digests,
            "started": self.started,
            "finished": self.finished,
        });
        fs::write(&path, format!("{:#}\n", value))
            .with_context(|| format!("cannot write manifest {}", path.display()))?;
        Ok(path)
    }
}

pub fn manifest_path(primary_output: &Path) -> PathBuf {
    let mut name = primary_output
        .file_name()
        .unwrap_or_default()
        .to_os_string();
    name.push(".manifest.json");
    primary_output.with_file_name(name)
}

/// A parsed manifest, for replay.
pub struct LoadedManifest {
    pub argv: Vec<String>,
    pub input_digests: BTreeMap<String, String>,
    pub output_digests: BTreeMap<String, String>,
}

pub fn load_manifest(path: &Path) -> Result<LoadedManifest> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read manifest {}", path.display()))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).with_context(|| "manifest is not valid JSON")?;
    let argv = value["argv"]
        .as_array()
        .map(|a| {
            a.iter()
                .filter_map(|v| v.as_str().map(String::from))
                .collect::<Vec<_>>()
        })
        .unwrap_or_default();
    if argv.is_empty() {
        bail!("manifest has no argv to replay");
    }
    let digests = |key: &str| -> BTreeMap<String, String> {
        value[key]
            .as_object()
            .map(|m| {
                m.iter()
                    .filter_map(|(k, v)| v.as_str().map(|s| (k.clone(), s.to_string())))
                    .collect()
            })
            .unwrap_or_default()
    };
    Ok(LoadedManifest {
        argv,
        input_digests: digests("input_digests"),
        output_digests: digests("output_digests"),
    })
}
