//! The family file format: a TOML document with keys `ring`, `rank`,
//! `depth`, `blocks` and an optional `meta` table. Block entries are
//! strings: rationals `p/q` or polynomials in the declared variable.

use crate::expr::{parse_poly, parse_rational, parse_ring, poly_to_entry};
use period_core::family::DifTower;
use period_core::linalg::matrix::Matrix;
use period_core::rings::{RingDescriptor, RingElement};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Deserialize, Serialize)]
pub struct FamilyMeta {
    pub name: Option<String>,
    pub expected_datum: Option<String>,
}

#[derive(Debug, Deserialize)]
struct FamilyFileRaw {
    ring: String,
    rank: usize,
    depth: usize,
    blocks: Vec<Vec<Vec<String>>>,
    meta: Option<FamilyMeta>,
}

#[derive(Debug, Clone)]
pub struct FileError(pub String);

impl std::fmt::Display for FileError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for FileError {}

fn entry_to_element(
    ring: &RingDescriptor,
    text: &str,
    block: usize,
    row: usize,
    col: usize,
) -> Result<RingElement, FileError> {
    let here = |m: String| {
        FileError(format!(
            "block {}, row {}, col {}: {}",
            block, row, col, m
        ))
    };
    match ring {
        RingDescriptor::Rationals => {
            let r = parse_rational(text).map_err(|e| here(e.to_string()))?;
            Ok(RingElement::from_rational(ring, r))
        }
        _ => {
            let var = ring.var().unwrap();
            let p = parse_poly(text, var).map_err(|e| here(e.to_string()))?;
            RingElement::new(ring.clone(), p).map_err(|e| here(e.to_string()))
        }
    }
}

/// Parse a family file into a tower and its metadata.
pub fn parse_family_file(text: &str) -> Result<(DifTower, Option<FamilyMeta>), FileError> {
    let raw: FamilyFileRaw =
        toml::from_str(text).map_err(|e| FileError(format!("family file: {}", e)))?;
    let ring = parse_ring(&raw.ring).map_err(|e| FileError(format!("ring literal: {}", e)))?;
    if raw.blocks.len() != raw.depth {
        return Err(FileError(format!(
            "depth is {} but {} blocks are given",
            raw.depth,
            raw.blocks.len()
        )));
    }
    if raw.depth == 0 {
        return Err(FileError("depth must be at least 1".to_string()));
    }
    let mut blocks = Vec::with_capacity(raw.depth);
    for (bi, rows) in raw.blocks.iter().enumerate() {
        if rows.len() != raw.rank {
            return Err(FileError(format!(
                "block {}: has {} rows, expected {}",
                bi,
                rows.len(),
                raw.rank
            )));
        }
        let mut data = Vec::with_capacity(raw.rank * raw.rank);
        for (ri, row) in rows.iter().enumerate() {
            if row.len() != raw.rank {
                return Err(FileError(format!(
                    "block {}: row {} has {} entries, expected {}",
                    bi,
                    ri,
                    row.len(),
                    raw.rank
                )));
            }
            for (ci, cell) in row.iter().enumerate() {
                data.push(entry_to_element(&ring, cell, bi, ri, ci)?);
            }
        }
        let m = Matrix::new(ring.clone(), raw.rank, raw.rank, data)
            .map_err(|e| FileError(format!("block {}: {}", bi, e)))?;
        blocks.push(m);
    }
    let tower = DifTower::new(ring, raw.rank, blocks)
        .map_err(|e| FileError(e.to_string()))?;
    Ok((tower, raw.meta))
}

/// Canonical serialization; `parse(serialize(t))` returns `t` and
/// serializing again is a fixed point.
pub fn serialize_family(tower: &DifTower, meta: Option<&FamilyMeta>) -> String {
    let var = tower.ring().var().unwrap_or("x");
    let mut out = String::new();
    out.push_str(&format!("ring = \"{}\"\n", tower.ring()));
    out.push_str(&format!("rank = {}\n", tower.rank()));
    out.push_str(&format!("depth = {}\n", tower.depth()));
    out.push_str("blocks = [\n");
    for b in tower.blocks() {
        out.push_str("  [\n");
        for r in 0..b.rows() {
            let cells: Vec<String> = (0..b.cols())
                .map(|c| format!("\"{}\"", poly_to_entry(b.get(r, c).value(), var)))
                .collect();
            out.push_str(&format!("    [{}],\n", cells.join(", ")));
        }
        out.push_str("  ],\n");
    }
    out.push_str("]\n");
    if let Some(m) = meta {
        out.push_str("\n[meta]\n");
        if let Some(name) = &m.name {
            out.push_str(&format!("name = \"{}\"\n", name));
        }
        if let Some(d) = &m.expected_datum {
            out.push_str(&format!("expected_datum = \"{}\"\n", d));
        }
    }
    out
}
