//! Cartan data and finite Weyl groups realized as permutations of a weight
//! orbit.
//!
//! Simple roots are indexed `0..rank` internally; user-facing labels
//! (`s1`, `e[1,2]`, the CLI) are 1-based.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partialinj::{PartialInjection, Vertex, VertexSet, MAX_VERTICES};

/// Order of W(F4); the largest group the default caps admit.
pub const DEFAULT_GROUP_CAP: usize = 1152;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TypeLabel {
    A,
    B,
    C,
    D,
    F,
    G,
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            TypeLabel::A => 'A',
            TypeLabel::B => 'B',
            TypeLabel::C => 'C',
            TypeLabel::D => 'D',
            TypeLabel::F => 'F',
            TypeLabel::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for TypeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(TypeLabel::A),
            "B" | "b" => Ok(TypeLabel::B),
            "C" | "c" => Ok(TypeLabel::C),
            "D" | "d" => Ok(TypeLabel::D),
            "F" | "f" => Ok(TypeLabel::F),
            "G" | "g" => Ok(TypeLabel::G),
            _ => Err(Error::Parse(format!("unknown type label {s:?}"))),
        }
    }
}

/// A subset of the simple roots, as a bitmask over `0..rank`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeSet(u32);

impl NodeSet {
    pub const MAX_RANK: usize = 32;

    pub fn empty() -> Self {
        NodeSet(0)
    }

    pub fn full(rank: usize) -> Self {
        assert!(rank <= Self::MAX_RANK);
        if rank == 32 {
            NodeSet(u32::MAX)
        } else {
            NodeSet((1u32 << rank) - 1)
        }
    }

    pub fn from_bits(bits: u32) -> Self {
        NodeSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < Self::MAX_RANK && self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        assert!(i < Self::MAX_RANK);
        NodeSet(self.0 | 1 << i)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: NodeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: NodeSet) -> NodeSet {
        NodeSet(self.0 | other.0)
    }

    pub fn intersection(self, other: NodeSet) -> NodeSet {
        NodeSet(self.0 & other.0)
    }

    pub fn difference(self, other: NodeSet) -> NodeSet {
        NodeSet(self.0 & !other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..Self::MAX_RANK).filter(move |&i| self.contains(i))
    }

    /// 1-based indices, the way they are written in labels.
    pub fn one_based(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }
}

impl FromIterator<usize> for NodeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(NodeSet::empty(), NodeSet::with)
    }
}

impl fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.one_based()).finish()
    }
}

/// Cartan matrix of an irreducible finite root system.
///
/// Row `i` holds the simple root `α_i` in fundamental-weight coordinates, so
/// `reflect` subtracts `v_i` times row `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    label: TypeLabel,
    rank: usize,
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn label(&self) -> TypeLabel {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    /// Simple root `α_i` in fundamental-weight coordinates.
    pub fn simple_root(&self, i: usize) -> &[i64] {
        &self.entries[i]
    }

    /// Dynkin adjacency; equivalently `s_i` and `s_j` do not commute.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.entries[i][j] != 0
    }

    pub fn all_nodes(&self) -> NodeSet {
        NodeSet::full(self.rank)
    }

    /// Textbook order of the Weyl group of this type.
    pub fn weyl_group_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.label {
            TypeLabel::A => fact(n + 1),
            TypeLabel::B | TypeLabel::C => (1u128 << n) * fact(n),
            TypeLabel::D => (1u128 << (n - 1)) * fact(n),
            TypeLabel::F => 1152,
            TypeLabel::G => 12,
        }
    }
}

impl fmt::Display for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.label, self.rank)
    }
}

/// Standard Cartan matrix for `(label, rank)`.
pub fn cartan_matrix(label: TypeLabel, rank: usize) -> Result<CartanMatrix> {
    let valid = match label {
        TypeLabel::A => rank >= 1,
        TypeLabel::B | TypeLabel::C => rank >= 2,
        TypeLabel::D => rank >= 3,
        TypeLabel::F => rank == 4,
        TypeLabel::G => rank == 2,
    } && rank <= NodeSet::MAX_RANK;
    if !valid {
        return Err(Error::InvalidType {
            label: label.to_string(),
            rank,
        });
    }
    let mut m = vec![vec![0i64; rank]; rank];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, ij: i64, ji: i64| {
        m[i][j] = ij;
        m[j][i] = ji;
    };
    match label {
        TypeLabel::A => {
            for i in 0..rank - 1 {
                link(i, i + 1, -1, -1);
            }
        }
        TypeLabel::B => {
            for i in 0..rank - 2 {
                link(i, i + 1, -1, -1);
            }
            link(rank - 2, rank - 1, -1, -2);
        }
        TypeLabel::C => {
            for i in 0..rank - 2 {
                link(i, i + 1, -1, -1);
            }
            link(rank - 2, rank - 1, -2, -1);
        }
        TypeLabel::D => {
            for i in 0..rank - 2 {
                link(i, i + 1, -1, -1);
            }
            link(rank - 3, rank - 1, -1, -1);
        }
        TypeLabel::F => {
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
        }
        TypeLabel::G => link(0, 1, -1, -3),
    }
    Ok(CartanMatrix {
        label,
        rank,
        entries: m,
    })
}

/// Integral weight in fundamental-weight coordinates; `coords[i] = ⟨v, α_i⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Simple roots orthogonal to the weight.
    pub fn zero_pattern(&self) -> NodeSet {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == 0)
            .map(|(i, _)| i)
            .collect()
    }
}

/// Simple reflection `s_i(v) = v - v_i α_i`.
pub fn reflect(cartan: &CartanMatrix, i: usize, v: &WeightVector) -> WeightVector {
    assert!(i < cartan.rank(), "reflection index out of range");
    assert_eq!(v.0.len(), cartan.rank(), "weight has wrong length");
    let vi = v.0[i];
    WeightVector(
        v.0.iter()
            .zip(cartan.simple_root(i))
            .map(|(&x, &a)| x - vi * a)
            .collect(),
    )
}

/// W-orbit of `seed` in breadth-first order (generators tried in index order).
pub fn weight_orbit(cartan: &CartanMatrix, seed: &WeightVector, cap: usize) -> Result<Vec<WeightVector>> {
    if seed.0.len() != cartan.rank() {
        return Err(Error::InvalidWeight(format!(
            "expected {} coordinates, got {}",
            cartan.rank(),
            seed.0.len()
        )));
    }
    let cap = cap.min(MAX_VERTICES);
    let mut orbit = vec![seed.clone()];
    let mut seen: HashMap<WeightVector, usize> = HashMap::from([(seed.clone(), 0)]);
    let mut next = 0;
    while next < orbit.len() {
        for i in 0..cartan.rank() {
            let r = reflect(cartan, i, &orbit[next]);
            if !seen.contains_key(&r) {
                if orbit.len() == cap {
                    return Err(Error::SizeCapExceeded {
                        what: "weight orbit",
                        cap,
                    });
                }
                seen.insert(r.clone(), orbit.len());
                orbit.push(r);
            }
        }
        next += 1;
    }
    Ok(orbit)
}

/// An element of W acting on the vertex orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    pub perm: PartialInjection,
    pub length: usize,
    /// Lex-least reduced word, 0-based generator indices.
    pub word: Vec<u8>,
}

/// Finite Weyl group realized as permutations of a weight orbit.
///
/// Elements are numbered in breadth-first order from the identity, which is
/// the order of (length, lex-least reduced word). Element `0` is the
/// identity and elements `1..=rank` are the simple reflections.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    cartan: CartanMatrix,
    vertex_orbit: Vec<WeightVector>,
    elements: Vec<WeylElement>,
    index: HashMap<PartialInjection, usize>,
    generators: Vec<usize>,
    right_mul: Vec<Vec<u32>>,
    inverse: Vec<u32>,
}

/// Generates W as the closure of the simple reflections acting on `W·seed`.
pub fn generate_weyl(cartan: &CartanMatrix, seed: &WeightVector, cap: usize) -> Result<WeylGroup> {
    let orbit = weight_orbit(cartan, seed, cap)?;
    let n = orbit.len();
    let pos: HashMap<&WeightVector, usize> = orbit.iter().enumerate().map(|(k, v)| (v, k)).collect();
    let gen_perms: Vec<PartialInjection> = (0..cartan.rank())
        .map(|i| {
            let images: Vec<Vertex> = orbit
                .iter()
                .map(|v| pos[&reflect(cartan, i, v)] as Vertex)
                .collect();
            PartialInjection::from_permutation(&images).expect("reflections permute the orbit")
        })
        .collect();

    let identity = WeylElement {
        perm: PartialInjection::identity(n),
        length: 0,
        word: Vec::new(),
    };
    let mut index = HashMap::from([(identity.perm.clone(), 0usize)]);
    let mut elements = vec![identity];
    let mut right_mul: Vec<Vec<u32>> = Vec::new();
    let mut next = 0;
    while next < elements.len() {
        let mut row = Vec::with_capacity(cartan.rank());
        for (i, s) in gen_perms.iter().enumerate() {
            let p = elements[next].perm.compose(s);
            let id = match index.get(&p) {
                Some(&id) => id,
                None => {
                    if elements.len() == cap {
                        return Err(Error::SizeCapExceeded {
                            what: "Weyl group order",
                            cap,
                        });
                    }
                    let mut word = elements[next].word.clone();
                    word.push(i as u8);
                    let id = elements.len();
                    index.insert(p.clone(), id);
                    elements.push(WeylElement {
                        perm: p,
                        length: elements[next].length + 1,
                        word,
                    });
                    id
                }
            };
            row.push(id as u32);
        }
        right_mul.push(row);
        next += 1;
    }

    let generators = gen_perms.iter().map(|p| index[p]).collect();
    let inverse = elements.iter().map(|e| index[&e.perm.inverse()] as u32).collect();
    Ok(WeylGroup {
        cartan: cartan.clone(),
        vertex_orbit: orbit,
        elements,
        index,
        generators,
        right_mul,
        inverse,
    })
}

impl WeylGroup {
    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn vertex_orbit(&self) -> &[WeightVector] {
        &self.vertex_orbit
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_orbit.len()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, id: usize) -> &WeylElement {
        &self.elements[id]
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Element id of the simple reflection `s_i`.
    pub fn generator(&self, i: usize) -> usize {
        self.generators[i]
    }

    pub fn length(&self, id: usize) -> usize {
        self.elements[id].length
    }

    pub fn perm(&self, id: usize) -> &PartialInjection {
        &self.elements[id].perm
    }

    pub fn id_of(&self, perm: &PartialInjection) -> Option<usize> {
        self.index.get(perm).copied()
    }

    /// `w · s_i`.
    pub fn mul_gen(&self, w: usize, i: usize) -> usize {
        self.right_mul[w][i] as usize
    }

    /// `a · b` (apply `b` first).
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.elements[b]
            .word
            .iter()
            .fold(a, |acc, &i| self.mul_gen(acc, i as usize))
    }

    pub fn inverse(&self, w: usize) -> usize {
        self.inverse[w] as usize
    }

    /// `x · w · x⁻¹`.
    pub fn conjugate(&self, x: usize, w: usize) -> usize {
        self.mul(self.mul(x, w), self.inverse(x))
    }

    /// True when the action on the orbit realizes the full Weyl group.
    pub fn is_faithful(&self) -> bool {
        self.order() as u128 == self.cartan.weyl_group_order()
    }

    /// `w(face)` for a vertex set.
    pub fn act_on_set(&self, w: usize, set: &VertexSet) -> VertexSet {
        self.elements[w].perm.image(set)
    }

    /// Word label such as `s1s2s1`; the identity is `1`.
    pub fn word_label(&self, id: usize) -> String {
        let word = &self.elements[id].word;
        if word.is_empty() {
            return "1".to_string();
        }
        word.iter().map(|&i| format!("s{}", i + 1)).collect()
    }
}

/// Parabolic subgroup `W_J` of a [`WeylGroup`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    pub nodes: NodeSet,
    /// Element ids in increasing order.
    pub members: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, id: usize) -> bool {
        self.members.binary_search(&id).is_ok()
    }

    pub fn trivial() -> Self {
        Subgroup {
            nodes: NodeSet::empty(),
            members: vec![0],
        }
    }
}

/// `W_J`, the subgroup generated by `{s_j | j ∈ J}`.
pub fn parabolic(group: &WeylGroup, nodes: NodeSet) -> Subgroup {
    let mut seen = vec![false; group.order()];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    let mut members = vec![0usize];
    while let Some(w) = queue.pop_front() {
        for j in nodes.iter().filter(|&j| j < group.rank()) {
            let x = group.mul_gen(w, j);
            if !seen[x] {
                seen[x] = true;
                members.push(x);
                queue.push_back(x);
            }
        }
    }
    members.sort_unstable();
    Subgroup { nodes, members }
}

/// Minimal-length representatives of the left cosets `w W_J`, in element order.
pub fn min_coset_reps(group: &WeylGroup, nodes: NodeSet) -> Vec<usize> {
    (0..group.order())
        .filter(|&w| {
            nodes
                .iter()
                .all(|j| group.length(group.mul_gen(w, j)) > group.length(w))
        })
        .collect()
}

/// Conjugacy classes of a parabolic subgroup, each sorted, ordered by their
/// least (shortest, lex-least word) member.
pub fn group_conjugacy_classes(group: &WeylGroup, sub: &Subgroup) -> Vec<Vec<usize>> {
    let mut class_of: HashMap<usize, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &w in &sub.members {
        if class_of.contains_key(&w) {
            continue;
        }
        let cid = classes.len();
        let mut class = vec![w];
        class_of.insert(w, cid);
        let mut k = 0;
        while k < class.len() {
            let x = class[k];
            for j in sub.nodes.iter() {
                let s = group.generator(j);
                let y = group.mul(group.mul(s, x), s);
                if let std::collections::hash_map::Entry::Vacant(v) = class_of.entry(y) {
                    v.insert(cid);
                    class.push(y);
                }
            }
            k += 1;
        }
        class.sort_unstable();
        classes.push(class);
    }
    classes
}
