//! Renner monoids of J-irreducible monoids, realized inside the rook monoid
//! on the vertices of the weight polytope `conv(W·μ)`.
//!
//! Faces of the polytope are stored as vertex sets. The faces that occur are
//! exactly the W-translates of the faces `K_e`, `e ∈ Λ`; each one is indexed
//! by its stratum and the shortest unit carrying `K_e` onto it.

use std::collections::HashMap;

use crate::crosslat::{cross_section_lattice, star_group, CrossSectionLattice, DominantWeightSpec};
use crate::error::{Error, Result};
use crate::partialinj::{PartialInjection, VertexSet};
use crate::rootsys::{generate_weyl, CartanMatrix, WeightVector, WeylGroup, DEFAULT_GROUP_CAP};

pub use crate::rootsys::weight_orbit;

/// Index of an element of a [`RennerMonoid`].
pub type ElementId = usize;

/// Default bound on the number of monoid elements generated.
pub const DEFAULT_MONOID_CAP: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonoidCaps {
    pub max_group_order: usize,
    pub max_monoid_order: usize,
}

impl Default for MonoidCaps {
    fn default() -> Self {
        MonoidCaps {
            max_group_order: DEFAULT_GROUP_CAP,
            max_monoid_order: DEFAULT_MONOID_CAP,
        }
    }
}

/// Stratum of a face and the shortest unit moving `K_e` onto it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FaceInfo {
    pub stratum: usize,
    pub transporter: usize,
}

/// `σ = e_J w e_I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub range_face: VertexSet,
    /// Group element id of the canonical unit.
    pub unit: usize,
    pub domain_face: VertexSet,
}

impl NormalForm {
    pub fn reconstruct(&self, group: &WeylGroup) -> PartialInjection {
        let ej = PartialInjection::partial_identity(&self.range_face);
        let ei = PartialInjection::partial_identity(&self.domain_face);
        ej.compose(&group.perm(self.unit).compose(&ei))
    }
}

/// `μ_K = w e_L`, mapping the base face `L = K_e` onto `K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceTransporter {
    pub target_face: VertexSet,
    pub base_face: VertexSet,
    pub unit: usize,
    pub map: PartialInjection,
}

/// A finite Renner monoid as a submonoid of partial injections.
#[derive(Debug, Clone)]
pub struct RennerMonoid {
    group: WeylGroup,
    lattice: CrossSectionLattice,
    elements: Vec<PartialInjection>,
    index: HashMap<PartialInjection, ElementId>,
    generators: Vec<ElementId>,
    units: Vec<ElementId>,
    unit_of: HashMap<ElementId, usize>,
    faces: HashMap<VertexSet, FaceInfo>,
    face_orbits: Vec<Vec<VertexSet>>,
    stratum: Vec<usize>,
    star_units: Vec<HashMap<PartialInjection, usize>>,
}

/// The Weyl group acting on `W·μ` together with the cross-section lattice,
/// without closing up the monoid.
pub fn build_lattice(
    cartan: &CartanMatrix,
    mu: &WeightVector,
    max_group_order: usize,
) -> Result<(WeylGroup, CrossSectionLattice)> {
    let spec = DominantWeightSpec::new(mu.clone(), cartan.rank())?;
    let group = generate_weyl(cartan, spec.mu(), max_group_order)?;
    if !group.is_faithful() {
        return Err(Error::Faithfulness {
            got: group.order(),
            expected: cartan.weyl_group_order() as usize,
        });
    }
    let lattice = cross_section_lattice(&spec, &group)?;
    Ok((group, lattice))
}

/// Builds the Renner monoid of the J-irreducible monoid with highest weight
/// `mu` as the closure of `{s_i} ∪ {e_{K_e}} ∪ {0}`.
pub fn build_renner(cartan: &CartanMatrix, mu: &WeightVector, caps: MonoidCaps) -> Result<RennerMonoid> {
    let (group, lattice) = build_lattice(cartan, mu, caps.max_group_order)?;
    let n = group.vertex_count();

    let (faces, face_orbits) = index_faces(&group, &lattice)?;

    let mut gens: Vec<PartialInjection> = (0..group.rank())
        .map(|i| group.perm(group.generator(i)).clone())
        .collect();
    gens.extend(
        lattice.idempotents()[1..]
            .iter()
            .map(|e| e.partial_identity()),
    );
    gens.push(PartialInjection::zero(n));

    let identity = PartialInjection::identity(n);
    let mut elements = vec![identity.clone()];
    let mut index = HashMap::from([(identity, 0usize)]);
    let mut next = 0;
    while next < elements.len() {
        for g in &gens {
            let y = elements[next].compose(g);
            if !index.contains_key(&y) {
                if elements.len() == caps.max_monoid_order {
                    return Err(Error::SizeCapExceeded {
                        what: "Renner monoid order",
                        cap: caps.max_monoid_order,
                    });
                }
                index.insert(y.clone(), elements.len());
                elements.push(y);
            }
        }
        next += 1;
    }

    let generators = gens.iter().map(|g| index[g]).collect();
    let units: Vec<ElementId> = group
        .elements()
        .iter()
        .map(|w| index.get(&w.perm).copied())
        .collect::<Option<_>>()
        .ok_or_else(|| Error::Invariant("a Weyl group element is missing from the closure".into()))?;
    let unit_count = elements.iter().filter(|e| e.is_unit()).count();
    if unit_count != group.order() {
        return Err(Error::Invariant(format!(
            "closure has {unit_count} units, expected {}",
            group.order()
        )));
    }
    let unit_of = units.iter().enumerate().map(|(g, &id)| (id, g)).collect();

    let mut stratum = Vec::with_capacity(elements.len());
    for sigma in &elements {
        let dom = faces.get(&sigma.domain());
        let ran = faces.get(&sigma.range());
        match (dom, ran) {
            (Some(d), Some(r)) if d.stratum == r.stratum => stratum.push(d.stratum),
            _ => {
                return Err(Error::Invariant(format!(
                    "element {sigma:?} has a domain or range outside the face orbits"
                )))
            }
        }
    }

    let star_units = lattice
        .idempotents()
        .iter()
        .map(|e| {
            let el = e.partial_identity();
            star_group(&group, e)
                .members
                .iter()
                .map(|&x| (group.perm(x).compose(&el), x))
                .collect()
        })
        .collect();

    let monoid = RennerMonoid {
        group,
        lattice,
        elements,
        index,
        generators,
        units,
        unit_of,
        faces,
        face_orbits,
        stratum,
        star_units,
    };
    monoid.check_strata_sizes()?;
    Ok(monoid)
}

type FaceIndex = HashMap<VertexSet, FaceInfo>;

/// Maps every face in the W-orbit of some `K_e` to its stratum and shortest
/// transporter, checking that orbits of distinct `e` are disjoint and that
/// the shortest transporter is unique.
fn index_faces(
    group: &WeylGroup,
    lattice: &CrossSectionLattice,
) -> Result<(FaceIndex, Vec<Vec<VertexSet>>)> {
    let mut faces: HashMap<VertexSet, FaceInfo> = HashMap::new();
    let mut orbits = Vec::with_capacity(lattice.len());
    faces.insert(
        lattice.get(0).face.clone(),
        FaceInfo {
            stratum: 0,
            transporter: group.identity(),
        },
    );
    orbits.push(vec![lattice.get(0).face.clone()]);
    for (k, e) in lattice.idempotents().iter().enumerate().skip(1) {
        let mut orbit = Vec::new();
        for w in 0..group.order() {
            let f = group.act_on_set(w, &e.face);
            match faces.get(&f) {
                None => {
                    faces.insert(f.clone(), FaceInfo { stratum: k, transporter: w });
                    orbit.push(f);
                }
                Some(info) if info.stratum != k => {
                    return Err(Error::Invariant(format!(
                        "faces of {} and {} share an orbit",
                        lattice.label(info.stratum),
                        lattice.label(k)
                    )));
                }
                Some(info) => {
                    if group.length(w) == group.length(info.transporter) {
                        return Err(Error::Invariant(
                            "shortest face transporter is not unique".into(),
                        ));
                    }
                }
            }
        }
        orbits.push(orbit);
    }
    Ok((faces, orbits))
}

/// `I°(σ) = ⋂_k I(σ^k)`, by iterating `D ↦ {i ∈ D | σ(i) ∈ D}` to a fixpoint.
pub fn stable_domain(sigma: &PartialInjection) -> VertexSet {
    let mut d = sigma.domain();
    loop {
        let next = VertexSet::from_iter(
            sigma.degree(),
            d.iter().filter(|&i| sigma.get(i).is_some_and(|j| d.contains(j))),
        );
        if next == d {
            return d;
        }
        d = next;
    }
}

/// `σ°`, the restriction of `σ` to `I°(σ)`.
pub fn invertible_part(sigma: &PartialInjection) -> PartialInjection {
    sigma.restrict(&stable_domain(sigma))
}

impl RennerMonoid {
    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn lattice(&self) -> &CrossSectionLattice {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[PartialInjection] {
        &self.elements
    }

    pub fn element(&self, id: ElementId) -> &PartialInjection {
        &self.elements[id]
    }

    pub fn id_of(&self, sigma: &PartialInjection) -> Option<ElementId> {
        self.index.get(sigma).copied()
    }

    /// Element ids of the generating set `{s_i} ∪ {e_{K_e}} ∪ {0}`.
    pub fn generators(&self) -> &[ElementId] {
        &self.generators
    }

    pub fn identity(&self) -> ElementId {
        0
    }

    pub fn zero(&self) -> ElementId {
        self.index[&PartialInjection::zero(self.group.vertex_count())]
    }

    /// Element id of the Weyl group element `w`.
    pub fn unit(&self, w: usize) -> ElementId {
        self.units[w]
    }

    pub fn units(&self) -> &[ElementId] {
        &self.units
    }

    /// Weyl group id of a unit element.
    pub fn as_unit(&self, id: ElementId) -> Option<usize> {
        self.unit_of.get(&id).copied()
    }

    /// Index in `Λ` of the stratum `WeW` containing the element.
    pub fn stratum(&self, id: ElementId) -> usize {
        self.stratum[id]
    }

    pub fn stratum_members(&self, e: usize) -> Vec<ElementId> {
        (0..self.len()).filter(|&id| self.stratum[id] == e).collect()
    }

    pub fn face_info(&self, face: &VertexSet) -> Option<FaceInfo> {
        self.faces.get(face).copied()
    }

    /// The W-orbit of `K_e`, in order of first appearance.
    pub fn face_orbit(&self, e: usize) -> &[VertexSet] {
        &self.face_orbits[e]
    }

    fn lookup(&self, sigma: &PartialInjection) -> ElementId {
        self.index[sigma]
    }

    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.lookup(&self.elements[a].compose(&self.elements[b]))
    }

    pub fn inverse(&self, a: ElementId) -> ElementId {
        self.lookup(&self.elements[a].inverse())
    }

    /// `w σ w⁻¹` for a Weyl group element `w`.
    pub fn conjugate_by_unit(&self, w: usize, id: ElementId) -> ElementId {
        let wp = self.group.perm(w);
        let winv = self.group.perm(self.group.inverse(w));
        self.lookup(&wp.compose(&self.elements[id]).compose(winv))
    }

    /// `u e_{K_e}` for a Weyl group element `u`.
    pub fn unit_times_idempotent(&self, u: usize, e: usize) -> ElementId {
        let ep = self.lattice.get(e).partial_identity();
        self.lookup(&self.group.perm(u).compose(&ep))
    }

    /// Normal form `σ = e_J w e_I` with `w` the first unit (shortest, then
    /// lex-least word) restricting to `σ` on `I`.
    pub fn normal_form(&self, id: ElementId) -> Result<NormalForm> {
        let sigma = &self.elements[id];
        if sigma.is_zero() {
            return Err(Error::ZeroElement);
        }
        let domain = sigma.domain();
        let unit = (0..self.group.order())
            .find(|&w| &self.group.perm(w).restrict(&domain) == sigma)
            .ok_or_else(|| Error::Invariant("element is not factorizable".into()))?;
        Ok(NormalForm {
            range_face: sigma.range(),
            unit,
            domain_face: domain,
        })
    }

    /// Id of `σ°`.
    pub fn invertible_part(&self, id: ElementId) -> ElementId {
        self.lookup(&invertible_part(&self.elements[id]))
    }

    /// The `e ∈ Λ` with `σ° ∈ WeW`; `0` for nilpotent elements.
    pub fn subrank(&self, id: ElementId) -> usize {
        let stable = stable_domain(&self.elements[id]);
        self.faces
            .get(&stable)
            .map(|info| info.stratum)
            .expect("invertible parts of monoid elements have face domains")
    }

    /// `μ_K` for `L = K_e` and a face `K` in the W-orbit of `L`.
    pub fn face_transporter(&self, base: &VertexSet, target: &VertexSet) -> Result<FaceTransporter> {
        let e = self
            .lattice
            .idempotents()
            .iter()
            .position(|e| &e.face == base)
            .ok_or(Error::NotInOrbit)?;
        let info = self.faces.get(target).ok_or(Error::NotInOrbit)?;
        if info.stratum != e {
            return Err(Error::NotInOrbit);
        }
        let map = self
            .group
            .perm(info.transporter)
            .compose(&PartialInjection::partial_identity(base));
        Ok(FaceTransporter {
            target_face: target.clone(),
            base_face: base.clone(),
            unit: info.transporter,
            map,
        })
    }

    /// `p(σ) = μ_J⁻ σ μ_I`, a bijection of `K_e` lying in `e W^*(e)`.
    pub fn project(&self, id: ElementId) -> Result<PartialInjection> {
        let sigma = &self.elements[id];
        if sigma.is_zero() {
            return Err(Error::ZeroElement);
        }
        let base = &self.lattice.get(self.stratum[id]).face;
        let mu_i = self.face_transporter(base, &sigma.domain())?.map;
        let mu_j = self.face_transporter(base, &sigma.range())?.map;
        Ok(mu_j.inverse().compose(&sigma.compose(&mu_i)))
    }

    /// The `x ∈ W^*(e)` with `x e_{K_e} = p`, if `p` has that form.
    pub fn star_unit(&self, e: usize, p: &PartialInjection) -> Option<usize> {
        self.star_units[e].get(p).copied()
    }

    /// `x ∈ W^*(e)` with `p(σ) = x e_{K_e}`.
    pub fn project_to_star_group(&self, id: ElementId) -> Result<usize> {
        let p = self.project(id)?;
        self.star_unit(self.stratum[id], &p)
            .ok_or_else(|| Error::Invariant("projection left W^*(e)".into()))
    }

    /// Short label: `0`, a unit word, `e[..]`, or a word followed by `e[..]`
    /// for elements `u e_{K_e}`; other elements are written `e_J·w·e_I`.
    pub fn label(&self, id: ElementId) -> String {
        let sigma = &self.elements[id];
        if sigma.is_zero() {
            return "0".into();
        }
        let e = self.stratum[id];
        let nf = self.normal_form(id).expect("nonzero");
        let word = self.group.word_label(nf.unit);
        if e == self.lattice.top() {
            return word;
        }
        let el = self.lattice.label(e);
        if nf.domain_face == self.lattice.get(e).face {
            if nf.unit == self.group.identity() {
                el
            } else {
                format!("{word}{el}")
            }
        } else {
            format!("e{:?}·{word}·e{:?}", nf.range_face, nf.domain_face)
        }
    }

    fn check_strata_sizes(&self) -> Result<()> {
        let mut counts = vec![0usize; self.lattice.len()];
        for &s in &self.stratum {
            counts[s] += 1;
        }
        for (k, e) in self.lattice.idempotents().iter().enumerate() {
            let orbit = self.face_orbits[k].len();
            let expected = orbit * orbit * star_group(&self.group, e).order();
            if counts[k] != expected {
                return Err(Error::Invariant(format!(
                    "stratum {} has {} elements, expected {expected}",
                    self.lattice.label(k),
                    counts[k]
                )));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{cartan_matrix, TypeLabel};

    fn monoid(label: TypeLabel, rank: usize, mu: &[i64]) -> RennerMonoid {
        let c = cartan_matrix(label, rank).unwrap();
        build_renner(&c, &WeightVector(mu.to_vec()), MonoidCaps::default()).unwrap()
    }

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn orbit_sizes() {
        let a2 = cartan_matrix(TypeLabel::A, 2).unwrap();
        let b2 = cartan_matrix(TypeLabel::B, 2).unwrap();
        assert_eq!(weight_orbit(&a2, &WeightVector(vec![1, 0]), 100).unwrap().len(), 3);
        assert_eq!(weight_orbit(&a2, &WeightVector(vec![1, 1]), 100).unwrap().len(), 6);
        assert_eq!(weight_orbit(&b2, &WeightVector(vec![1, 0]), 100).unwrap().len(), 4);
    }

    #[test]
    fn first_basic_a2_is_rook_monoid_r3() {
        let r = monoid(TypeLabel::A, 2, &[1, 0]);
        let rook: usize = (0..=3).map(|k| binom(3, k).pow(2) * (1..=k).product::<usize>()).sum();
        assert_eq!(rook, 34);
        assert_eq!(r.len(), 34);
    }

    #[test]
    fn zero_and_one_present() {
        let r = monoid(TypeLabel::B, 2, &[1, 1]);
        let z = r.zero();
        assert!(r.element(z).is_zero());
        assert!(r.element(r.identity()).is_unit());
        for id in 0..r.len() {
            assert_eq!(r.mul(z, id), z);
            assert_eq!(r.mul(id, z), z);
        }
    }

    #[test]
    fn canonical_a2_bottom_stratum_has_w_squared_elements() {
        let r = monoid(TypeLabel::A, 2, &[1, 1]);
        assert_eq!(r.stratum_members(1).len(), 36);
    }

    #[test]
    fn normal_form_examples() {
        let r = monoid(TypeLabel::A, 2, &[1, 0]);
        let g = r.group();
        let n = g.vertex_count();
        for w in 0..g.order() {
            let nf = r.normal_form(r.unit(w)).unwrap();
            assert_eq!(nf.unit, w);
            assert_eq!(nf.domain_face, VertexSet::full(n));
            assert_eq!(nf.range_face, VertexSet::full(n));
        }
        let k = r.lattice().get(1).face.clone();
        let ek = r.id_of(&PartialInjection::partial_identity(&k)).unwrap();
        let nf = r.normal_form(ek).unwrap();
        assert_eq!((nf.unit, &nf.domain_face, &nf.range_face), (0, &k, &k));

        let s1 = g.generator(0);
        let sigma = r.unit_times_idempotent(s1, 1);
        let nf = r.normal_form(sigma).unwrap();
        assert_eq!(nf.unit, s1);
        assert_eq!(nf.domain_face, k);
        assert_eq!(nf.range_face, g.act_on_set(s1, &k));
        assert_eq!(r.normal_form(r.zero()), Err(Error::ZeroElement));
    }

    #[test]
    fn invertible_part_examples() {
        // rook monoid R_6 element 1->5->6->1, 2->4 written 0-based
        let sigma = PartialInjection::from_pairs(6, &[(0, 4), (4, 5), (5, 0), (1, 3)]).unwrap();
        assert_eq!(stable_domain(&sigma), VertexSet::from_iter(6, [0, 4, 5]));
        assert_eq!(
            invertible_part(&sigma),
            PartialInjection::from_pairs(6, &[(0, 4), (4, 5), (5, 0)]).unwrap()
        );
        let e = PartialInjection::partial_identity(&VertexSet::from_iter(6, [1, 2]));
        assert_eq!(invertible_part(&e), e);
        let r = monoid(TypeLabel::A, 2, &[1, 0]);
        for &u in r.units() {
            assert_eq!(r.invertible_part(u), u);
        }
    }

    #[test]
    fn subrank_examples() {
        let r = monoid(TypeLabel::A, 2, &[1, 0]);
        for &u in r.units() {
            assert_eq!(r.subrank(u), r.lattice().top());
        }
        assert_eq!(r.subrank(r.zero()), 0);
        // s2 e_1 has invertible part conjugate to e_0
        let s2e1 = r.unit_times_idempotent(r.group().generator(1), 2);
        assert_eq!(r.subrank(s2e1), 1);
        // a nilpotent element: s1 e_0 maps the fixed vertex away
        let s1e0 = r.unit_times_idempotent(r.group().generator(0), 1);
        assert_eq!(r.subrank(s1e0), 0);
    }

    #[test]
    fn transporter_examples() {
        let r = monoid(TypeLabel::G, 2, &[1, 1]);
        let g = r.group();
        for e in 1..r.lattice().len() {
            let base = r.lattice().get(e).face.clone();
            let t = r.face_transporter(&base, &base).unwrap();
            assert_eq!(t.unit, g.identity());
            for k in r.face_orbit(e) {
                let t = r.face_transporter(&base, k).unwrap();
                let movers: Vec<usize> = (0..g.order()).filter(|&w| &g.act_on_set(w, &base) == k).collect();
                let min_len = movers.iter().map(|&w| g.length(w)).min().unwrap();
                assert_eq!(g.length(t.unit), min_len);
                assert_eq!(movers.iter().filter(|&&w| g.length(w) == min_len).count(), 1);
                assert_eq!(
                    t.map.compose(&t.map.inverse()),
                    PartialInjection::partial_identity(k)
                );
            }
        }
        let e0 = r.lattice().get(1).face.clone();
        let e1 = r.lattice().get(2).face.clone();
        assert_eq!(r.face_transporter(&e0, &e1), Err(Error::NotInOrbit));
    }

    #[test]
    fn projection_examples() {
        let r = monoid(TypeLabel::B, 2, &[1, 1]);
        for &u in r.units() {
            assert_eq!(&r.project(u).unwrap(), r.element(u));
        }
        for e in 1..r.lattice().len() {
            let el = r.lattice().get(e).partial_identity();
            for &x in &star_group(r.group(), r.lattice().get(e)).members {
                let sigma = r.group().perm(x).compose(&el);
                let id = r.id_of(&sigma).unwrap();
                assert_eq!(r.project(id).unwrap(), sigma);
                assert_eq!(r.project_to_star_group(id).unwrap(), x);
            }
        }
        assert_eq!(r.project(r.zero()), Err(Error::ZeroElement));
    }

    #[test]
    fn caps_are_enforced() {
        let c = cartan_matrix(TypeLabel::A, 2).unwrap();
        let caps = MonoidCaps { max_group_order: 1152, max_monoid_order: 20 };
        assert!(matches!(
            build_renner(&c, &WeightVector(vec![1, 1]), caps),
            Err(Error::SizeCapExceeded { .. })
        ));
        let caps = MonoidCaps { max_group_order: 4, max_monoid_order: 1000 };
        assert!(matches!(
            build_renner(&c, &WeightVector(vec![1, 1]), caps),
            Err(Error::SizeCapExceeded { .. })
        ));
    }

    #[test]
    fn labels() {
        let r = monoid(TypeLabel::A, 2, &[1, 1]);
        assert_eq!(r.label(r.zero()), "0");
        assert_eq!(r.label(r.identity()), "1");
        let s1 = r.group().generator(0);
        assert_eq!(r.label(r.unit(s1)), "s1");
        assert_eq!(r.label(r.unit_times_idempotent(0, 2)), "e[1]");
        assert_eq!(r.label(r.unit_times_idempotent(s1, 1)), "s1e[]");
    }
}
