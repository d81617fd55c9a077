//! Persistence for the memo table: versioned JSON-lines, one record per
//! entry, with a header carrying the format version and the rank.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{KlError, Result};
use crate::kl::KlEngine;
use crate::laurent::QPoly;
use crate::weyl::ExtAffElem;

pub const FORMAT: &str = "kltab";
pub const VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct Header {
    format: String,
    version: u32,
    n: usize,
}

#[derive(Serialize, Deserialize)]
struct Record {
    n: usize,
    y: Vec<i64>,
    w: Vec<i64>,
    p: Vec<i64>,
}

/// Write the whole table, sorted for reproducibility. Returns the number of
/// entries written.
pub fn save_table(engine: &KlEngine, path: &Path) -> Result<usize> {
    let file = File::create(path)?;
    let mut out = BufWriter::new(file);
    let header = Header {
        format: FORMAT.to_string(),
        version: VERSION,
        n: engine.rank(),
    };
    writeln!(out, "{}", serde_json::to_string(&header).unwrap())?;
    let snapshot = engine.table_snapshot();
    let count = snapshot.len();
    for (y, w, p) in snapshot {
        let rec = Record {
            n: engine.rank(),
            y: y.window().to_vec(),
            w: w.window().to_vec(),
            p: p.coeffs().to_vec(),
        };
        writeln!(out, "{}", serde_json::to_string(&rec).unwrap())?;
    }
    out.flush()?;
    Ok(count)
}

/// Load a table written by [`save_table`], validating the header version
/// and rank against the engine. Returns the number of entries loaded.
pub fn load_table(engine: &KlEngine, path: &Path) -> Result<usize> {
    let file = File::open(path)?;
    let mut lines = BufReader::new(file).lines();
    let header_line = lines
        .next()
        .ok_or_else(|| KlError::CacheFormat("empty cache file".into()))??;
    let header: Header = serde_json::from_str(&header_line)
        .map_err(|e| KlError::CacheFormat(format!("bad header: {}", e)))?;
    if header.format != FORMAT {
        return Err(KlError::CacheFormat(format!("unknown format `{}`", header.format)));
    }
    if header.version != VERSION {
        return Err(KlError::CacheFormat(format!(
            "version mismatch: file {} vs supported {}",
            header.version, VERSION
        )));
    }
    if header.n != engine.rank() {
        return Err(KlError::CacheFormat(format!(
            "rank mismatch: cache has n={} but session has n={}",
            header.n,
            engine.rank()
        )));
    }
    let mut count = 0;
    for line in lines {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let rec: Record = serde_json::from_str(&line)
            .map_err(|e| KlError::CacheFormat(format!("bad record: {}", e)))?;
        if rec.n != engine.rank() {
            return Err(KlError::CacheFormat(format!(
                "rank mismatch in record: {} vs {}",
                rec.n,
                engine.rank()
            )));
        }
        let y = ExtAffElem::normalized(rec.y);
        let w = ExtAffElem::normalized(rec.w);
        engine.table_insert_loaded(&y, &w, QPoly::from_coeffs(rec.p));
        count += 1;
    }
    Ok(count)
}

/// Read only the header and the entry count of a cache file.
pub fn inspect(path: &Path) -> Result<(usize, usize)> {
    let file = File::open(path)?;
    let mut lines = BufReader::new(file).lines();
    let header_line = lines
        .next()
        .ok_or_else(|| KlError::CacheFormat("empty cache file".into()))??;
    let header: Header = serde_json::from_str(&header_line)
        .map_err(|e| KlError::CacheFormat(format!("bad header: {}", e)))?;
    if header.format != FORMAT || header.version != VERSION {
        return Err(KlError::CacheFormat("unsupported cache format".into()));
    }
    let count = lines.filter(|l| l.as_ref().map(|s| !s.trim().is_empty()).unwrap_or(false)).count();
    Ok((header.n, count))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_rank_validation() {
        let eng = KlEngine::new(2).unwrap();
        let datum = eng.datum().clone();
        let w = datum.parse_word("1 2 0 1 2").unwrap();
        let y = datum.parse_word("1").unwrap();
        let _ = eng.kl_poly(&y, &w).unwrap();
        let before = eng.stats().entries;
        assert!(before > 0);

        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("table.kltab");
        let written = save_table(&eng, &path).unwrap();
        assert_eq!(written, before);

        let fresh = KlEngine::new(2).unwrap();
        let loaded = load_table(&fresh, &path).unwrap();
        assert_eq!(loaded, before);
        assert_eq!(fresh.stats().entries, before);
        assert_eq!(inspect(&path).unwrap(), (2, before));

        let other = KlEngine::new(3).unwrap();
        let err = load_table(&other, &path).unwrap_err();
        assert!(matches!(err, KlError::CacheFormat(_)), "got {:?}", err);
    }
}
