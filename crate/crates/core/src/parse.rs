//! Parsers for user-supplied text: type labels such as `G2`, and
//! comma-separated index or weight lists.

use crate::error::{Error, Result};
use crate::rootsys::{cartan_matrix, CartanMatrix, NodeSet, TypeLabel, WeightVector};

/// Largest accepted weight coordinate. Only the zero pattern of a weight
/// matters, so small bounds lose nothing and keep orbit arithmetic in range.
pub const MAX_WEIGHT_COORD: u64 = 1 << 20;

/// Parses `A3`, `g2`, `D10`, ... into a validated Cartan matrix.
pub fn parse_type(text: &str) -> Result<CartanMatrix> {
    let text = text.trim();
    let mut chars = text.chars();
    let letter = chars
        .next()
        .ok_or_else(|| Error::Parse("empty type label".into()))?;
    let label: TypeLabel = letter.to_string().parse()?;
    let digits = chars.as_str();
    if digits.is_empty() || digits.len() > 3 || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("expected a rank after {letter:?}, got {digits:?}")));
    }
    let rank: usize = digits
        .parse()
        .map_err(|_| Error::Parse(format!("bad rank {digits:?}")))?;
    cartan_matrix(label, rank)
}

/// Parses `1, 0,2` into nonnegative integers. The empty string is the empty
/// list.
pub fn parse_index_list(text: &str) -> Result<Vec<u64>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|tok| {
            let tok = tok.trim();
            if tok.is_empty() || tok.len() > 20 || !tok.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Parse(format!("expected a nonnegative integer, got {tok:?}")));
            }
            tok.parse::<u64>()
                .map_err(|_| Error::Parse(format!("integer out of range: {tok:?}")))
        })
        .collect()
}

/// A dominant weight with exactly `rank` coordinates.
pub fn parse_weight(text: &str, rank: usize) -> Result<WeightVector> {
    let coords = parse_index_list(text)?;
    if coords.len() != rank {
        return Err(Error::InvalidWeight(format!(
            "expected {rank} coordinates, got {}",
            coords.len()
        )));
    }
    if let Some(&c) = coords.iter().find(|&&c| c > MAX_WEIGHT_COORD) {
        return Err(Error::InvalidWeight(format!(
            "coordinate {c} exceeds {MAX_WEIGHT_COORD}"
        )));
    }
    Ok(WeightVector(coords.into_iter().map(|c| c as i64).collect()))
}

/// A set of 1-based simple-root indices in `1..=rank`.
pub fn parse_j0(text: &str, rank: usize) -> Result<NodeSet> {
    let mut set = NodeSet::empty();
    for i in parse_index_list(text)? {
        if i == 0 || i as usize > rank {
            return Err(Error::InvalidWeight(format!(
                "simple root index {i} outside 1..={rank}"
            )));
        }
        set = set.with(i as usize - 1);
    }
    Ok(set)
}
