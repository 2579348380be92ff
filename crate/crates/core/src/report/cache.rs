//! Flat cache files for S_p and the genus-2 catalog.
//!
//! A cache file is one header line, `ssp5-cache v1 p=<p> kind=<Sp|SSp2>`,
//! followed by the payload lines of the cached value. Files are written to
//! a temporary file in the same directory and renamed into place.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::elliptic::{enumerate_supersingular_j, expected_supersingular_count, SupersingularSet};
use crate::error::{Error, Result};
use crate::field::FieldTowerCtx;
use crate::ssp2::{enumerate_ssp2, Ssp2Catalog};

const MAGIC: &str = "ssp5-cache";
const VERSION: &str = "v1";

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CacheKind {
    Sp,
    SSp2,
}

impl fmt::Display for CacheKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CacheKind::Sp => "Sp",
            CacheKind::SSp2 => "SSp2",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CacheFile {
    pub p: u64,
    pub kind: CacheKind,
    pub payload: Vec<String>,
}

impl CacheFile {
    pub fn file_name(p: u64, kind: CacheKind) -> String {
        format!("{kind}_{p}.cache")
    }

    pub fn header(&self) -> String {
        format!("{MAGIC} {VERSION} p={} kind={}", self.p, self.kind)
    }

    pub fn render(&self) -> String {
        let mut s = self.header();
        s.push('\n');
        for line in &self.payload {
            s.push_str(line);
            s.push('\n');
        }
        s
    }

    /// Parses a file body, checking the header against the expected p and kind.
    pub fn parse(text: &str, p: u64, kind: CacheKind) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Cache("empty cache file".into()))?;
        let expected = CacheFile {
            p,
            kind,
            payload: Vec::new(),
        }
        .header();
        if header != expected {
            return Err(Error::Cache(format!(
                "header {header:?}, expected {expected:?}"
            )));
        }
        let payload = lines.filter(|l| !l.is_empty()).map(str::to_owned).collect();
        Ok(CacheFile { p, kind, payload })
    }

    pub fn write_atomic(&self, dir: &Path) -> Result<PathBuf> {
        fs::create_dir_all(dir)?;
        let path = dir.join(Self::file_name(self.p, self.kind));
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        tmp.write_all(self.render().as_bytes())?;
        tmp.as_file().sync_all()?;
        tmp.persist(&path).map_err(|e| Error::Io(e.error))?;
        Ok(path)
    }

    /// `Ok(None)` when the file does not exist.
    pub fn read(dir: &Path, p: u64, kind: CacheKind) -> Result<Option<Self>> {
        let path = dir.join(Self::file_name(p, kind));
        match fs::read_to_string(&path) {
            Ok(text) => Self::parse(&text, p, kind)
                .map(Some)
                .map_err(|e| Error::Cache(format!("{}: {e}", path.display()))),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(e.into()),
        }
    }
}

/// Whether a value came from disk.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CacheStatus {
    Hit,
    Miss,
    Disabled,
}

/// S_p from `dir` if present, otherwise computed and stored there.
pub fn load_or_compute_sp(
    k: &FieldTowerCtx,
    dir: Option<&Path>,
) -> Result<(SupersingularSet, CacheStatus)> {
    let Some(dir) = dir else {
        return Ok((enumerate_supersingular_j(k), CacheStatus::Disabled));
    };
    if let Some(file) = CacheFile::read(dir, k.p(), CacheKind::Sp)? {
        let s = SupersingularSet::from_payload_lines(k, file.payload.iter().map(String::as_str))?;
        if s.len() != expected_supersingular_count(k.p()) {
            return Err(Error::Cache(format!(
                "cached S_{} has {} elements",
                k.p(),
                s.len()
            )));
        }
        return Ok((s, CacheStatus::Hit));
    }
    let s = enumerate_supersingular_j(k);
    CacheFile {
        p: k.p(),
        kind: CacheKind::Sp,
        payload: s.payload_lines(k),
    }
    .write_atomic(dir)?;
    Ok((s, CacheStatus::Miss))
}

/// The genus-2 catalog from `dir` if present, otherwise computed and stored.
pub fn load_or_compute_ssp2(
    k: &FieldTowerCtx,
    s: &SupersingularSet,
    dir: Option<&Path>,
) -> Result<(Ssp2Catalog, CacheStatus)> {
    let compute = || -> Result<Ssp2Catalog> {
        let g = enumerate_ssp2(k, s)?;
        g.check_closure(k)?;
        Ok(g.catalog(k))
    };
    let Some(dir) = dir else {
        return Ok((compute()?, CacheStatus::Disabled));
    };
    if let Some(file) = CacheFile::read(dir, k.p(), CacheKind::SSp2)? {
        let c = Ssp2Catalog::from_payload_lines(k, file.payload.iter().map(String::as_str))?;
        return Ok((c, CacheStatus::Hit));
    }
    let c = compute()?;
    CacheFile {
        p: k.p(),
        kind: CacheKind::SSp2,
        payload: c.payload_lines(k),
    }
    .write_atomic(dir)?;
    Ok((c, CacheStatus::Miss))
}
