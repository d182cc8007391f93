//! On-disk cache for the `f4` basis.
//!
//! Layout: a header line with format and version, a shape line, a sha256
//! line covering the body, then one operator per line as 729 space-separated
//! rationals in row-major order. Any mismatch makes `load` report a miss so
//! the caller recomputes.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::sync::atomic::{AtomicBool, Ordering};

use sha2::{Digest, Sha256};

use super::derivation::{is_derivation, F4_DIM};
use crate::error::{Error, Result};
use crate::exact::{Matrix, Scalar};
use crate::jordan::DIM;

pub const ENV_VAR: &str = "CAYLEY_F4_CACHE";
const HEADER: &str = "cayley-f4-basis v1";

static ENABLED: AtomicBool = AtomicBool::new(true);

/// Turns the disk cache off for the rest of the process.
pub fn set_enabled(on: bool) {
    ENABLED.store(on, Ordering::SeqCst);
}

pub fn enabled() -> bool {
    ENABLED.load(Ordering::SeqCst)
}

pub fn path() -> PathBuf {
    match std::env::var_os(ENV_VAR) {
        Some(p) if !p.is_empty() => PathBuf::from(p),
        _ => std::env::temp_dir().join("cayley-f4-v1.txt"),
    }
}

fn digest(body: &str) -> String {
    let hash = Sha256::digest(body.as_bytes());
    hash.iter().fold(String::with_capacity(64), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

pub fn encode(ops: &[Matrix]) -> String {
    let mut body = String::new();
    for op in ops {
        let line: Vec<String> = op.entries().iter().map(Scalar::to_string).collect();
        body.push_str(&line.join(" "));
        body.push('\n');
    }
    format!("{HEADER}\ndim {} n {DIM}\nsha256 {}\n{body}", ops.len(), digest(&body))
}

/// Parses and verifies a cache file's contents; `None` on any inconsistency.
pub fn decode(text: &str) -> Option<Vec<Matrix>> {
    let mut parts = text.splitn(4, '\n');
    if parts.next()? != HEADER {
        return None;
    }
    if parts.next()? != format!("dim {F4_DIM} n {DIM}") {
        return None;
    }
    let sum = parts.next()?.strip_prefix("sha256 ")?;
    let body = parts.next()?;
    if digest(body) != sum {
        return None;
    }
    let mut ops = Vec::with_capacity(F4_DIM);
    for line in body.lines() {
        let v: Vec<Scalar> = line.split(' ').map(str::parse).collect::<std::result::Result<_, _>>().ok()?;
        if v.len() != DIM * DIM {
            return None;
        }
        ops.push(Matrix::from_vector(DIM, DIM, v));
    }
    if ops.len() != F4_DIM || !ops.iter().all(is_derivation) {
        return None;
    }
    Some(ops)
}

pub fn load() -> Result<Option<Vec<Matrix>>> {
    let p = path();
    match fs::read_to_string(&p) {
        Ok(text) => Ok(decode(&text)),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
        Err(e) => Err(Error::Cache(format!("reading {}: {e}", p.display()))),
    }
}

/// Writes atomically via a temporary sibling file.
pub fn store(ops: &[Matrix]) -> Result<()> {
    let p = path();
    if let Some(dir) = p.parent() {
        fs::create_dir_all(dir).map_err(|e| Error::Cache(format!("creating {}: {e}", dir.display())))?;
    }
    let tmp = p.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, encode(ops)).map_err(|e| Error::Cache(format!("writing {}: {e}", tmp.display())))?;
    fs::rename(&tmp, &p).map_err(|e| Error::Cache(format!("renaming to {}: {e}", p.display())))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corrupt_text_is_a_miss() {
        assert!(decode("").is_none());
        assert!(decode("cayley-f4-basis v1\ndim 52 n 27\nsha256 00\n1 2 3\n").is_none());
        let ops = vec![Matrix::zeros(DIM, DIM)];
        let text = encode(&ops);
        // well-formed but wrong dimension
        assert!(decode(&text).is_none());
    }
}
