//! Cross-section lattice of a J-irreducible monoid, built from the zero
//! pattern `J_0` of its dominant weight.

use crate::error::{Error, Result};
use crate::partialinj::{PartialInjection, VertexSet};
use crate::rootsys::{parabolic, CartanMatrix, NodeSet, Subgroup, WeightVector, WeylGroup};

/// Dominant weight `μ` together with `J_0 = {i | μ_i = 0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominantWeightSpec {
    mu: WeightVector,
    j0: NodeSet,
}

impl DominantWeightSpec {
    pub fn new(mu: WeightVector, rank: usize) -> Result<Self> {
        if mu.0.len() != rank {
            return Err(Error::InvalidWeight(format!(
                "expected {rank} coordinates, got {}",
                mu.0.len()
            )));
        }
        if !mu.is_dominant() {
            return Err(Error::InvalidWeight("coordinates must be nonnegative".into()));
        }
        if mu.is_zero() {
            return Err(Error::InvalidWeight("weight must be nonzero".into()));
        }
        let j0 = mu.zero_pattern();
        Ok(DominantWeightSpec { mu, j0 })
    }

    /// The 0/1 weight with the given zero pattern.
    pub fn from_j0(j0: NodeSet, rank: usize) -> Result<Self> {
        if !j0.is_subset(NodeSet::full(rank)) {
            return Err(Error::InvalidWeight(format!(
                "J_0 {j0:?} is not a subset of 1..={rank}"
            )));
        }
        let mu = WeightVector((0..rank).map(|i| i64::from(!j0.contains(i))).collect());
        Self::new(mu, rank)
    }

    pub fn mu(&self) -> &WeightVector {
        &self.mu
    }

    pub fn j0(&self) -> NodeSet {
        self.j0
    }
}

/// An idempotent of `Λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossIdempotent {
    pub lambda_star: NodeSet,
    pub lambda_sub: NodeSet,
    pub is_zero: bool,
    /// `K_e`: the vertices of the face fixed by `e`; empty for `0`.
    pub face: VertexSet,
}

impl CrossIdempotent {
    pub fn lambda(&self) -> NodeSet {
        self.lambda_star.union(self.lambda_sub)
    }

    pub fn partial_identity(&self) -> PartialInjection {
        PartialInjection::partial_identity(&self.face)
    }

    /// `0`, `1`, or `e[i,j,..]` listing `λ*(e)` 1-based.
    pub fn label(&self, rank: usize) -> String {
        if self.is_zero {
            "0".into()
        } else if self.lambda_star == NodeSet::full(rank) {
            "1".into()
        } else {
            let ids: Vec<String> = self.lambda_star.one_based().iter().map(|i| i.to_string()).collect();
            format!("e[{}]", ids.join(","))
        }
    }
}

/// `Λ`, listed as `0` followed by the nonzero idempotents ordered by
/// `(|λ*|, λ*)`; the last entry is `1`.
#[derive(Debug, Clone)]
pub struct CrossSectionLattice {
    rank: usize,
    spec: DominantWeightSpec,
    idempotents: Vec<CrossIdempotent>,
}

impl CrossSectionLattice {
    pub fn len(&self) -> usize {
        self.idempotents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.idempotents.is_empty()
    }

    pub fn idempotents(&self) -> &[CrossIdempotent] {
        &self.idempotents
    }

    pub fn get(&self, k: usize) -> &CrossIdempotent {
        &self.idempotents[k]
    }

    pub fn spec(&self) -> &DominantWeightSpec {
        &self.spec
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.idempotents.len() - 1
    }

    pub fn label(&self, k: usize) -> String {
        self.idempotents[k].label(self.rank)
    }

    /// Lattice order: `0` is below everything, otherwise `λ*`-inclusion.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        let (x, y) = (&self.idempotents[a], &self.idempotents[b]);
        x.is_zero || (!y.is_zero && x.lambda_star.is_subset(y.lambda_star))
    }

    /// Minimal elements of `Λ \ {0}`.
    pub fn minimal_nonzero(&self) -> Vec<usize> {
        (1..self.len())
            .filter(|&a| (1..self.len()).all(|b| b == a || !self.leq(b, a)))
            .collect()
    }
}

/// Connected components of the Dynkin subgraph induced on `x`, ordered by
/// least node.
pub fn connected_components(x: NodeSet, cartan: &CartanMatrix) -> Vec<NodeSet> {
    let mut rest = x;
    let mut out = Vec::new();
    while let Some(start) = rest.iter().next() {
        let mut comp = NodeSet::empty().with(start);
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in rest.iter() {
                if !comp.contains(j) && cartan.adjacent(i, j) {
                    comp = comp.with(j);
                    stack.push(j);
                }
            }
        }
        rest = rest.difference(comp);
        out.push(comp);
    }
    out
}

/// `X` is admissible when none of its components lies entirely inside `J_0`.
pub fn is_admissible(x: NodeSet, j0: NodeSet, cartan: &CartanMatrix) -> bool {
    connected_components(x, cartan)
        .into_iter()
        .all(|c| !c.is_subset(j0))
}

/// `λ_*(e)`: nodes of `J_0 \ λ*(e)` whose reflections commute with every
/// reflection in `λ*(e)`.
pub fn lambda_sub_star(lambda_star: NodeSet, j0: NodeSet, cartan: &CartanMatrix) -> NodeSet {
    j0.difference(lambda_star)
        .iter()
        .filter(|&a| lambda_star.iter().all(|b| cartan.entry(a, b) == 0))
        .collect()
}

/// Orbit of vertex 0 (the dominant weight) under `W_X`.
fn parabolic_vertex_orbit(group: &WeylGroup, x: NodeSet) -> VertexSet {
    let n = group.vertex_count();
    let mut face = VertexSet::empty(n);
    face.insert(0);
    let mut stack = vec![0usize];
    while let Some(v) = stack.pop() {
        for j in x.iter() {
            let u = group.perm(group.generator(j)).get(v).expect("units are total");
            if !face.contains(u) {
                face.insert(u);
                stack.push(u);
            }
        }
    }
    face
}

/// Builds `Λ` for the J-irreducible monoid with dominant weight `spec.mu()`.
///
/// `group` must have been generated from the same weight, so that vertex 0
/// is `μ`.
pub fn cross_section_lattice(spec: &DominantWeightSpec, group: &WeylGroup) -> Result<CrossSectionLattice> {
    let cartan = group.cartan();
    let rank = cartan.rank();
    if group.vertex_orbit().first() != Some(spec.mu()) {
        return Err(Error::Invariant(
            "Weyl group was not generated from the lattice's dominant weight".into(),
        ));
    }
    let mut admissible: Vec<NodeSet> = (0..1u64 << rank)
        .map(|b| NodeSet::from_bits(b as u32))
        .filter(|&x| is_admissible(x, spec.j0(), cartan))
        .collect();
    admissible.sort_by_key(|x| (x.len(), x.one_based()));

    let mut idempotents = vec![CrossIdempotent {
        lambda_star: NodeSet::empty(),
        lambda_sub: NodeSet::empty(),
        is_zero: true,
        face: VertexSet::empty(group.vertex_count()),
    }];
    for x in admissible {
        let lambda_sub = lambda_sub_star(x, spec.j0(), cartan);
        let face = parabolic_vertex_orbit(group, x);
        if parabolic_vertex_orbit(group, x.union(lambda_sub)) != face {
            return Err(Error::Invariant(format!(
                "W_λ(e)·μ differs from W_λ*(e)·μ for λ* = {x:?}"
            )));
        }
        idempotents.push(CrossIdempotent {
            lambda_star: x,
            lambda_sub,
            is_zero: false,
            face,
        });
    }

    let lattice = CrossSectionLattice {
        rank,
        spec: spec.clone(),
        idempotents,
    };
    verify_order(&lattice)?;
    Ok(lattice)
}

/// λ*-inclusion must agree with `e ≤ f ⇔ fe = e = ef` on partial identities.
fn verify_order(lattice: &CrossSectionLattice) -> Result<()> {
    let ids: Vec<PartialInjection> = lattice
        .idempotents
        .iter()
        .map(CrossIdempotent::partial_identity)
        .collect();
    for a in 0..lattice.len() {
        for b in 0..lattice.len() {
            let by_product = ids[b].compose(&ids[a]) == ids[a] && ids[a].compose(&ids[b]) == ids[a];
            if by_product != lattice.leq(a, b) {
                return Err(Error::Invariant(format!(
                    "lattice order disagrees with idempotent products at ({}, {})",
                    lattice.label(a),
                    lattice.label(b)
                )));
            }
        }
    }
    if lattice.minimal_nonzero().len() != 1 {
        return Err(Error::Invariant("Λ \\ {0} has no unique minimal element".into()));
    }
    Ok(())
}

/// `W(e) = W_{λ(e)}`; `W` for `e = 0`.
pub fn centralizer(group: &WeylGroup, e: &CrossIdempotent) -> Subgroup {
    if e.is_zero {
        parabolic(group, group.cartan().all_nodes())
    } else {
        parabolic(group, e.lambda())
    }
}

/// `W_*(e) = W_{λ_*(e)}`; `W` for `e = 0`.
pub fn stabilizer(group: &WeylGroup, e: &CrossIdempotent) -> Subgroup {
    if e.is_zero {
        parabolic(group, group.cartan().all_nodes())
    } else {
        parabolic(group, e.lambda_sub)
    }
}

/// `W^*(e) = W_{λ*(e)}`; trivial for `e = 0`.
pub fn star_group(group: &WeylGroup, e: &CrossIdempotent) -> Subgroup {
    if e.is_zero {
        Subgroup::trivial()
    } else {
        parabolic(group, e.lambda_star)
    }
}
