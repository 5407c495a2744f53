//! The matroid file format: ingestion and persistence.
//!
//! Three shapes are accepted, discriminated by `"type"`:
//! `{"type":"linear","q":4,"rank":3,"columns":[[1,0,0],...]}` with entries
//! given as field-element integer codes,
//! `{"type":"rank3","n":9,"long_lines":[[0,1,2],...]}`, and
//! `{"type":"uniform","r":2,"n":6}`.
//! The loader validates every payload invariant and rejects malformed input
//! with a positioned message.

use crate::bitset::Subset;
use crate::error::{Error, Result};
use crate::gf::FieldTable;
use crate::matroid::Matroid;
use serde::{Deserialize, Serialize};
use std::path::Path;

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
enum MatroidFile {
    Linear { q: u64, rank: usize, columns: Vec<Vec<u64>> },
    Rank3 { n: usize, long_lines: Vec<Vec<usize>> },
    Uniform { r: usize, n: usize },
}

/// Parse a matroid from JSON text.
pub fn matroid_from_json(text: &str) -> Result<Matroid> {
    let file: MatroidFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    match file {
        MatroidFile::Linear { q, rank, columns } => {
            let field = FieldTable::build(q)?;
            let mut cols = Vec::with_capacity(columns.len());
            for (i, col) in columns.iter().enumerate() {
                if col.len() != rank {
                    return Err(Error::Parse(format!(
                        "columns[{i}]: has {} entries, expected rank = {rank}",
                        col.len()
                    )));
                }
                let mut out = Vec::with_capacity(rank);
                for (j, &x) in col.iter().enumerate() {
                    if x >= q {
                        return Err(Error::Parse(format!(
                            "columns[{i}][{j}]: {x} is not an element code of GF({q})"
                        )));
                    }
                    out.push(x as u8);
                }
                cols.push(out);
            }
            Matroid::linear(field, rank, cols)
        }
        MatroidFile::Rank3 { n, long_lines } => {
            let mut lines = Vec::with_capacity(long_lines.len());
            for (i, line) in long_lines.iter().enumerate() {
                let mut s = Subset::EMPTY;
                for &e in line {
                    if e >= n {
                        return Err(Error::Parse(format!(
                            "long_lines[{i}]: element {e} is outside 0..{n}"
                        )));
                    }
                    if s.contains(e) {
                        return Err(Error::Parse(format!(
                            "long_lines[{i}]: element {e} repeated"
                        )));
                    }
                    s.insert(e);
                }
                lines.push(s);
            }
            Matroid::rank3_from_lines(n, lines)
        }
        MatroidFile::Uniform { r, n } => Matroid::uniform(r, n),
    }
}

/// Serialize a base matroid (linear, rank3, uniform) to JSON. Views are not
/// part of the file format.
pub fn matroid_to_json(m: &Matroid) -> Result<String> {
    let file = if let Some(lin) = m.as_linear() {
        MatroidFile::Linear {
            q: lin.field().q() as u64,
            rank: lin.dim(),
            columns: lin.columns().iter().map(|c| c.iter().map(|&x| x as u64).collect()).collect(),
        }
    } else if let Some(r3) = m.as_rank3() {
        MatroidFile::Rank3 {
            n: m.n_elements(),
            long_lines: r3.long_lines().iter().map(|l| l.to_vec()).collect(),
        }
    } else if let Some((r, n)) = m.as_uniform() {
        MatroidFile::Uniform { r, n }
    } else {
        return Err(Error::Unsupported(format!(
            "{} views cannot be serialized; persist the base matroid instead",
            m.kind_name()
        )));
    };
    serde_json::to_string_pretty(&file).map_err(|e| Error::Internal(e.to_string()))
}

pub fn load_matroid(path: &Path) -> Result<Matroid> {
    let text = std::fs::read_to_string(path)?;
    matroid_from_json(&text)
}

pub fn save_matroid(m: &Matroid, path: &Path) -> Result<()> {
    std::fs::write(path, matroid_to_json(m)? + "\n")?;
    Ok(())
}
