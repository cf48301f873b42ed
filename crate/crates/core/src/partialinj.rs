//! Partial injective maps on a finite vertex set `0..n`.
//!
//! Every element of a Renner monoid is stored as a [`PartialInjection`] on the
//! vertices of its weight polytope; units are total bijections, idempotents
//! are partial identities, `0` is the empty map.

use std::fmt;
use std::ops::Mul;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Index of a vertex. Vertex sets are capped well below `u16::MAX`.
pub type Vertex = u16;

const UNDEFINED: Vertex = Vertex::MAX;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = UNDEFINED as usize;

/// Subset of `0..universe`.
///
/// Stored as a dense bitmask: a single inline word when the universe has at
/// most 64 vertices, a heap-allocated word vector above that.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    universe: u16,
    words: SmallVec<[u64; 1]>,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        assert!(universe <= MAX_VERTICES, "vertex universe too large");
        let n_words = universe.div_ceil(64).max(1);
        VertexSet {
            universe: universe as u16,
            words: SmallVec::from_elem(0, n_words),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for i in 0..universe {
            s.insert(i);
        }
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(universe: usize, items: I) -> Self {
        let mut s = Self::empty(universe);
        for i in items {
            s.insert(i);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe as usize
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.universe(), "vertex {i} out of range");
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.universe() && self.words[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(other.words.iter())
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + bit)
            })
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A partial injective map on `0..degree`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialInjection {
    map: Box<[Vertex]>,
}

impl PartialInjection {
    /// The identity map `1`.
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= MAX_VERTICES, "degree too large");
        PartialInjection {
            map: (0..degree as Vertex).collect(),
        }
    }

    /// The empty map `0`.
    pub fn zero(degree: usize) -> Self {
        assert!(degree <= MAX_VERTICES, "degree too large");
        PartialInjection {
            map: vec![UNDEFINED; degree].into_boxed_slice(),
        }
    }

    /// The partial identity `e_K`.
    pub fn partial_identity(face: &VertexSet) -> Self {
        let mut p = Self::zero(face.universe());
        for i in face.iter() {
            p.map[i] = i as Vertex;
        }
        p
    }

    /// A total bijection given by its image list.
    pub fn from_permutation(images: &[Vertex]) -> Result<Self> {
        let pairs: Vec<(usize, usize)> = images
            .iter()
            .enumerate()
            .map(|(i, &j)| (i, j as usize))
            .collect();
        Self::from_pairs(images.len(), &pairs)
    }

    /// Builds a map from `(source, target)` pairs, rejecting anything that is
    /// not a partial injection on `0..degree`.
    pub fn from_pairs(degree: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if degree > MAX_VERTICES {
            return Err(Error::InvalidPartialInjection(format!(
                "degree {degree} exceeds {MAX_VERTICES}"
            )));
        }
        let mut map = vec![UNDEFINED; degree];
        let mut hit = vec![false; degree];
        for &(s, t) in pairs {
            if s >= degree || t >= degree {
                return Err(Error::InvalidPartialInjection(format!(
                    "pair ({s}, {t}) out of range for degree {degree}"
                )));
            }
            if map[s] != UNDEFINED {
                return Err(Error::InvalidPartialInjection(format!(
                    "source {s} mapped twice"
                )));
            }
            if hit[t] {
                return Err(Error::InvalidPartialInjection(format!(
                    "target {t} hit twice"
                )));
            }
            map[s] = t as Vertex;
            hit[t] = true;
        }
        Ok(PartialInjection {
            map: map.into_boxed_slice(),
        })
    }

    /// Decodes the JSON pair-list form `[[source, target], ...]`.
    pub fn from_json(text: &str, degree: usize) -> Result<Self> {
        let pairs: Vec<(usize, usize)> =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_pairs(degree, &pairs)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("pair lists always serialize")
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    pub fn get(&self, i: usize) -> Option<usize> {
        match self.map.get(i) {
            Some(&j) if j != UNDEFINED => Some(j as usize),
            _ => None,
        }
    }

    pub fn domain(&self) -> VertexSet {
        VertexSet::from_iter(self.degree(), self.pairs().map(|(s, _)| s))
    }

    pub fn range(&self) -> VertexSet {
        VertexSet::from_iter(self.degree(), self.pairs().map(|(_, t)| t))
    }

    pub fn rank(&self) -> usize {
        self.map.iter().filter(|&&j| j != UNDEFINED).count()
    }

    /// `(source, target)` pairs in increasing source order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.map
            .iter()
            .enumerate()
            .filter(|(_, &j)| j != UNDEFINED)
            .map(|(i, &j)| (i, j as usize))
    }

    pub fn is_zero(&self) -> bool {
        self.map.iter().all(|&j| j == UNDEFINED)
    }

    pub fn is_unit(&self) -> bool {
        self.map.iter().all(|&j| j != UNDEFINED)
    }

    /// `self ∘ sigma`: apply `sigma` first.
    pub fn compose(&self, sigma: &PartialInjection) -> PartialInjection {
        debug_assert_eq!(self.degree(), sigma.degree());
        PartialInjection {
            map: sigma
                .map
                .iter()
                .map(|&j| {
                    if j == UNDEFINED {
                        UNDEFINED
                    } else {
                        self.map[j as usize]
                    }
                })
                .collect(),
        }
    }

    pub fn inverse(&self) -> PartialInjection {
        let mut map = vec![UNDEFINED; self.degree()];
        for (i, j) in self.pairs() {
            map[j] = i as Vertex;
        }
        PartialInjection {
            map: map.into_boxed_slice(),
        }
    }

    /// Natural partial order: `self ≤ tau` iff `self` is a restriction of `tau`.
    pub fn natural_leq(&self, tau: &PartialInjection) -> bool {
        self.pairs().all(|(i, j)| tau.get(i) == Some(j))
    }

    pub fn restrict(&self, set: &VertexSet) -> PartialInjection {
        PartialInjection {
            map: self
                .map
                .iter()
                .enumerate()
                .map(|(i, &j)| if set.contains(i) { j } else { UNDEFINED })
                .collect(),
        }
    }

    pub fn is_idempotent(&self) -> bool {
        self.pairs().all(|(i, j)| i == j)
    }

    /// Image of `set ∩ domain` under the map.
    pub fn image(&self, set: &VertexSet) -> VertexSet {
        VertexSet::from_iter(self.degree(), set.iter().filter_map(|i| self.get(i)))
    }
}

impl Mul for &PartialInjection {
    type Output = PartialInjection;

    fn mul(self, rhs: &PartialInjection) -> PartialInjection {
        self.compose(rhs)
    }
}

impl Serialize for PartialInjection {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.rank()))?;
        for (i, j) in self.pairs() {
            seq.serialize_element(&[i, j])?;
        }
        seq.end()
    }
}

impl fmt::Debug for PartialInjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (i, j)) in self.pairs().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}->{j}")?;
        }
        write!(f, "}}")
    }
}
