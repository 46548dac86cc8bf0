//! Embedded reference data: the recognition table rows and constants for the
//! non-alternating simple groups that appear as candidates.
//!
//! The data lives in `data/reference.toml` (format documented at the top of
//! that file). Loading only checks syntax; every checkable property of the
//! data is verified by [`crate::verifier`], so a corrupted datum shows up as
//! a failed check rather than a load error.

use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::arith::{alt_order, Factorization};
use crate::error::{Error, Result};
use crate::spectrum::{spectrum, GroupFamilyPoint, OrderSet};

pub const REFERENCE_TOML: &str = include_str!("../data/reference.toml");

/// Degrees covered by the recognition table.
pub const TABLE_DEGREES: [u32; 16] = [7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 23, 24];

/// Range of alternating groups resolvable by name.
pub const ALTERNATING_NAME_RANGE: std::ops::RangeInclusive<u32> = 5..=24;

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
pub struct Table1Row {
    pub n: u32,
    pub order: Factorization,
    pub m1: u64,
    pub rho: Vec<u64>,
    pub candidates: Vec<String>,
}

/// A non-alternating simple group as transcribed in the data file.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
pub struct ExceptionalGroup {
    pub name: String,
    pub order: Factorization,
    pub spectrum: Vec<u64>,
    pub out_order: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedGroup {
    pub name: String,
    pub order: Factorization,
    pub spectrum: OrderSet,
    pub out_order: u64,
}

impl NamedGroup {
    pub fn m1(&self) -> u64 {
        self.spectrum.max().unwrap_or(1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
pub struct ReferenceData {
    #[serde(rename = "group")]
    pub groups: Vec<ExceptionalGroup>,
    #[serde(rename = "row")]
    pub rows: Vec<Table1Row>,
}

impl ReferenceData {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Data(e.to_string()))
    }

    pub fn embedded() -> Self {
        Self::parse(REFERENCE_TOML).expect("embedded reference data parses")
    }

    pub fn row(&self, n: u32) -> Option<&Table1Row> {
        self.rows.iter().find(|r| r.n == n)
    }

    pub fn exceptional(&self, name: &str) -> Option<&ExceptionalGroup> {
        self.groups.iter().find(|g| g.name == name)
    }

    /// Resolves `A5`..`A24` by computation and the exceptional names from
    /// the data.
    pub fn named_group(&self, name: &str) -> Result<NamedGroup> {
        if let Some(k) = alternating_degree(name) {
            if !ALTERNATING_NAME_RANGE.contains(&k) {
                return Err(Error::UnknownGroup(name.to_string()));
            }
            return Ok(NamedGroup {
                name: name.to_string(),
                order: alt_order(k)?,
                spectrum: spectrum(GroupFamilyPoint::alternating(k))?,
                out_order: alternating_out_order(k),
            });
        }
        let g = self
            .exceptional(name)
            .ok_or_else(|| Error::UnknownGroup(name.to_string()))?;
        Ok(NamedGroup {
            name: g.name.clone(),
            order: g.order.clone(),
            spectrum: g.spectrum.iter().copied().collect(),
            out_order: g.out_order,
        })
    }
}

/// Table rows as embedded.
pub fn table1() -> Vec<Table1Row> {
    ReferenceData::embedded().rows
}

/// Named group from the embedded data.
pub fn named_group(name: &str) -> Result<NamedGroup> {
    ReferenceData::embedded().named_group(name)
}

/// SHA-256 of the embedded data file, hex encoded.
pub fn reference_checksum() -> String {
    hex::encode(Sha256::digest(REFERENCE_TOML.as_bytes()))
}

/// `"A11"` -> `Some(11)`.
pub fn alternating_degree(name: &str) -> Option<u32> {
    let digits = name.strip_prefix('A')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

/// `|Out(A_k)|` for `k >= 5`: 2, except 4 for `A6`.
pub fn alternating_out_order(k: u32) -> u64 {
    if k == 6 {
        4
    } else {
        2
    }
}
