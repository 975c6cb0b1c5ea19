//! Atomic artifact writes and the digest manifest of the build directory.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::Context;
use sha2::{Digest, Sha256};

use crate::CliError;

pub const MANIFEST: &str = "digests.json";

pub fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

fn temp_sibling(path: &Path) -> PathBuf {
    let name = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
    path.with_file_name(format!(".{name}.tmp-{}", std::process::id()))
}

/// Writes through a temporary sibling and renames it into place.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    let tmp = temp_sibling(path);
    fs::write(&tmp, bytes).with_context(|| format!("writing {}", tmp.display()))?;
    fs::rename(&tmp, path).with_context(|| format!("renaming into {}", path.display()))?;
    Ok(())
}

/// Fills a fresh directory with `fill`, then swaps it in for `dir`.
pub fn replace_dir_atomic<F>(dir: &Path, fill: F) -> Result<(), CliError>
where
    F: FnOnce(&Path) -> Result<(), CliError>,
{
    let tmp = temp_sibling(dir);
    if tmp.exists() {
        fs::remove_dir_all(&tmp).with_context(|| format!("clearing {}", tmp.display()))?;
    }
    fs::create_dir_all(&tmp).with_context(|| format!("creating {}", tmp.display()))?;
    fill(&tmp)?;
    if dir.exists() {
        fs::remove_dir_all(dir).with_context(|| format!("removing {}", dir.display()))?;
    }
    fs::rename(&tmp, dir).with_context(|| format!("renaming into {}", dir.display()))?;
    Ok(())
}

/// Fails with the stage that produces `path` when it does not exist.
pub fn require(stage: &'static str, path: &Path) -> Result<(), CliError> {
    if path.exists() {
        Ok(())
    } else {
        Err(CliError::Missing {
            stage,
            path: path.to_path_buf(),
        })
    }
}

pub fn read_text(stage: &'static str, path: &Path) -> Result<String, CliError> {
    require(stage, path)?;
    Ok(fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?)
}

/// Digests of every regular file under `dir`, keyed by `/`-separated
/// relative path.
pub fn digest_tree(dir: &Path) -> Result<BTreeMap<String, String>, CliError> {
    fn walk(root: &Path, dir: &Path, out: &mut BTreeMap<String, String>) -> anyhow::Result<()> {
        for entry in fs::read_dir(dir).with_context(|| format!("listing {}", dir.display()))? {
            let path = entry?.path();
            if path.is_dir() {
                walk(root, &path, out)?;
            } else {
                let rel = path.strip_prefix(root)?;
                let key = rel.components().map(|c| c.as_os_str().to_string_lossy()).collect::<Vec<_>>().join("/");
                let bytes = fs::read(&path).with_context(|| format!("reading {}", path.display()))?;
                out.insert(key, sha256_hex(&bytes));
            }
        }
        Ok(())
    }
    let mut out = BTreeMap::new();
    walk(dir, dir, &mut out)?;
    Ok(out)
}

/// One digest standing for a whole set of file digests.
pub fn combined_digest(digests: &BTreeMap<String, String>) -> String {
    let mut text = String::new();
    for (k, v) in digests {
        text.push_str(k);
        text.push('\t');
        text.push_str(v);
        text.push('\n');
    }
    sha256_hex(text.as_bytes())
}

/// The digest manifest kept at the root of the build directory. Keys are
/// `<area>/<relative path>` with area one of `build`, `models`, `reports`.
pub struct Manifest {
    path: PathBuf,
    pub entries: BTreeMap<String, String>,
}

impl Manifest {
    pub fn open(build: &Path) -> Result<Self, CliError> {
        let path = build.join(MANIFEST);
        let entries = if path.exists() {
            let text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
            serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?
        } else {
            BTreeMap::new()
        };
        Ok(Manifest { path, entries })
    }

    /// Replaces every entry under `prefix` with `digests`.
    pub fn replace(&mut self, prefix: &str, digests: &BTreeMap<String, String>) {
        let prefix = format!("{prefix}/");
        self.entries.retain(|k, _| !k.starts_with(&prefix));
        for (k, v) in digests {
            self.entries.insert(format!("{prefix}{k}"), v.clone());
        }
    }

    pub fn record(&mut self, key: String, bytes: &[u8]) {
        self.entries.insert(key, sha256_hex(bytes));
    }

    pub fn save(&self) -> Result<(), CliError> {
        let text = serde_json::to_string_pretty(&self.entries).context("encoding manifest")?;
        write_atomic(&self.path, text.as_bytes())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sha256_known_vector() {
        assert_eq!(sha256_hex(b"abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    }

    #[test]
    fn atomic_writes_leave_no_temp_files() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("a/b.txt");
        write_atomic(&p, b"one").unwrap();
        write_atomic(&p, b"two").unwrap();
        assert_eq!(fs::read_to_string(&p).unwrap(), "two");
        replace_dir_atomic(&dir.path().join("store"), |d| write_atomic(&d.join("x"), b"x")).unwrap();
        let digests = digest_tree(dir.path()).unwrap();
        assert_eq!(digests.keys().collect::<Vec<_>>(), ["a/b.txt", "store/x"]);
    }

    #[test]
    fn missing_artifact_names_the_stage() {
        let err = require("train-strategies", Path::new("/nonexistent/lm.json")).unwrap_err();
        assert_eq!(err.exit_code(), 3);
        assert!(err.to_string().contains("train-strategies"));
    }
}
