//! Conjugacy in Renner monoids.
//!
//! `~`-classes come from the W(e)-orbits on `W/W_*(e)`; Munn classes from
//! subranks and projections into `W^*(e)`. Semigroup conjugacy, action
//! conjugacy and the direct `~`-orbits are computed by brute force and serve
//! as oracles for the first two.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::crosslat::{centralizer, stabilizer, star_group, CrossSectionLattice};
use crate::error::{Error, Result};
use crate::partialinj::PartialInjection;
use crate::partitions::partition_counts;
use crate::renner::{ElementId, RennerMonoid};
use crate::rootsys::{group_conjugacy_classes, min_coset_reps, WeylGroup};
use crate::unionfind::UnionFind;

/// Largest monoid the `O(|R|²)` oracles will accept by default.
pub const DEFAULT_ORACLE_CAP: usize = 5000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ConjKind {
    Sim,
    Munn,
    Semigroup,
    Action,
}

impl fmt::Display for ConjKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ConjKind::Sim => "sim",
            ConjKind::Munn => "munn",
            ConjKind::Semigroup => "semigroup",
            ConjKind::Action => "action",
        };
        f.write_str(s)
    }
}

impl FromStr for ConjKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sim" => Ok(ConjKind::Sim),
            "munn" => Ok(ConjKind::Munn),
            "semigroup" => Ok(ConjKind::Semigroup),
            "action" => Ok(ConjKind::Action),
            _ => Err(Error::Parse(format!("unknown conjugacy kind {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjClass {
    /// Sorted element ids.
    pub members: Vec<ElementId>,
    pub representative: ElementId,
    /// Index in `Λ`: the stratum for `~`-classes, the common subrank otherwise.
    pub stratum: usize,
}

/// A partition of the monoid into conjugacy classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjClassification {
    pub kind: ConjKind,
    pub classes: Vec<ConjClass>,
}

impl ConjClassification {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Class index of every element.
    pub fn class_of(&self, monoid_len: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; monoid_len];
        for (c, class) in self.classes.iter().enumerate() {
            for &m in &class.members {
                out[m] = c;
            }
        }
        out
    }

    /// The partition as sorted member lists, ordered by least member.
    pub fn partition(&self) -> Vec<Vec<ElementId>> {
        let mut p: Vec<Vec<ElementId>> = self.classes.iter().map(|c| c.members.clone()).collect();
        p.sort();
        p
    }

    pub fn same_partition(&self, other: &ConjClassification) -> bool {
        self.partition() == other.partition()
    }

    /// Number of classes attached to each element of `Λ`.
    pub fn per_stratum_counts(&self, lattice_len: usize) -> Vec<usize> {
        let mut counts = vec![0; lattice_len];
        for c in &self.classes {
            counts[c.stratum] += 1;
        }
        counts
    }
}

/// The W(e)-action on `W/W_*(e)` for one `e ∈ Λ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub e: usize,
    pub centralizer_order: usize,
    pub stabilizer_order: usize,
    pub coset_count: usize,
    pub orbit_count: usize,
    /// One minimal coset representative (group id) per orbit, the least
    /// in (length, word) order.
    pub orbit_reps: Vec<usize>,
    pub orbit_sizes: Vec<usize>,
}

/// Orbits of `W(e)` acting by conjugation on the left cosets of `W_*(e)`.
pub fn orbit_report(group: &WeylGroup, lattice: &CrossSectionLattice, e: usize) -> OrbitReport {
    let idem = lattice.get(e);
    let w_e = centralizer(group, idem);
    let w_sub = stabilizer(group, idem);
    let reps = if idem.is_zero {
        vec![group.identity()]
    } else {
        min_coset_reps(group, idem.lambda_sub)
    };

    let mut coset_of = vec![usize::MAX; group.order()];
    for (c, &u) in reps.iter().enumerate() {
        for &v in &w_sub.members {
            coset_of[group.mul(u, v)] = c;
        }
    }
    debug_assert!(coset_of.iter().all(|&c| c != usize::MAX));

    let mut uf = UnionFind::new(reps.len());
    for (c, &u) in reps.iter().enumerate() {
        for j in w_e.nodes.iter() {
            let s = group.generator(j);
            uf.union(c, coset_of[group.conjugate(s, u)]);
        }
    }
    let orbits = uf.classes();
    OrbitReport {
        e,
        centralizer_order: w_e.order(),
        stabilizer_order: w_sub.order(),
        coset_count: reps.len(),
        orbit_count: orbits.len(),
        orbit_reps: orbits.iter().map(|o| reps[o[0]]).collect(),
        orbit_sizes: orbits.iter().map(Vec::len).collect(),
    }
}

pub fn orbit_reports(monoid: &RennerMonoid) -> Vec<OrbitReport> {
    (0..monoid.lattice().len())
        .map(|e| orbit_report(monoid.group(), monoid.lattice(), e))
        .collect()
}

/// `Σ_{e∈Λ} n_e`.
pub fn count_sim_classes(monoid: &RennerMonoid) -> usize {
    orbit_reports(monoid).iter().map(|r| r.orbit_count).sum()
}

/// `~`-classes from the W(e)-orbits: each orbit of `u W_*(e)` gives the
/// class of `u e`, recovered by conjugating over W.
pub fn sim_conjugacy_classes(monoid: &RennerMonoid) -> ConjClassification {
    let group = monoid.group();
    let mut classes = Vec::new();
    for report in orbit_reports(monoid) {
        if report.e == 0 {
            classes.push(ConjClass {
                members: vec![monoid.zero()],
                representative: monoid.zero(),
                stratum: 0,
            });
            continue;
        }
        for &u in &report.orbit_reps {
            let rep = monoid.unit_times_idempotent(u, report.e);
            let mut members: Vec<ElementId> = (0..group.order())
                .map(|w| monoid.conjugate_by_unit(w, rep))
                .collect();
            members.sort_unstable();
            members.dedup();
            classes.push(ConjClass {
                members,
                representative: rep,
                stratum: report.e,
            });
        }
    }
    ConjClassification {
        kind: ConjKind::Sim,
        classes,
    }
}

/// Direct orbits of `σ ↦ wσw⁻¹` over all of W.
pub fn sim_classes_bruteforce(monoid: &RennerMonoid) -> ConjClassification {
    let mut uf = UnionFind::new(monoid.len());
    for id in 0..monoid.len() {
        for w in 0..monoid.group().order() {
            uf.union(id, monoid.conjugate_by_unit(w, id));
        }
    }
    finish(monoid, ConjKind::Sim, uf.classes())
}

/// Munn classes: `σ ≈ τ` iff they share a subrank `e` and `p(σ°)`, `p(τ°)`
/// are conjugate in `W^*(e)`.
pub fn munn_classes(monoid: &RennerMonoid) -> ConjClassification {
    let group = monoid.group();
    let lattice = monoid.lattice();
    let star_classes: Vec<Vec<Vec<usize>>> = lattice
        .idempotents()
        .iter()
        .map(|e| group_conjugacy_classes(group, &star_group(group, e)))
        .collect();
    let class_id: Vec<std::collections::HashMap<usize, usize>> = star_classes
        .iter()
        .map(|cs| {
            cs.iter()
                .enumerate()
                .flat_map(|(c, xs)| xs.iter().map(move |&x| (x, c)))
                .collect()
        })
        .collect();

    let mut buckets: BTreeMap<(usize, usize), Vec<ElementId>> = BTreeMap::new();
    for id in 0..monoid.len() {
        let inv = monoid.invertible_part(id);
        let e = monoid.stratum(inv);
        let key = if e == 0 {
            (0, 0)
        } else {
            let x = monoid
                .project_to_star_group(inv)
                .expect("invertible parts project into W^*(e)");
            (e, class_id[e][&x])
        };
        buckets.entry(key).or_default().push(id);
    }

    let classes = buckets
        .into_iter()
        .map(|((e, c), members)| {
            let representative = if e == 0 {
                monoid.zero()
            } else {
                monoid.unit_times_idempotent(star_classes[e][c][0], e)
            };
            ConjClass {
                members,
                representative,
                stratum: e,
            }
        })
        .collect();
    ConjClassification {
        kind: ConjKind::Munn,
        classes,
    }
}

fn check_oracle_cap(monoid: &RennerMonoid, cap: usize) -> Result<()> {
    if monoid.len() > cap {
        return Err(Error::SizeCapExceeded {
            what: "monoid order for pairwise oracles",
            cap,
        });
    }
    Ok(())
}

/// Transitive closure of `xy ≡ yx` over all pairs.
pub fn semigroup_conjugacy_classes(monoid: &RennerMonoid, cap: usize) -> Result<ConjClassification> {
    check_oracle_cap(monoid, cap)?;
    let mut uf = UnionFind::new(monoid.len());
    for x in 0..monoid.len() {
        for y in x + 1..monoid.len() {
            uf.union(monoid.mul(x, y), monoid.mul(y, x));
        }
    }
    Ok(finish(monoid, ConjKind::Semigroup, uf.classes()))
}

/// Identity of the group H-class reached by the powers of `x`: the first
/// power whose domain equals its range.
pub fn group_idempotent(x: &PartialInjection) -> PartialInjection {
    let mut power = x.clone();
    loop {
        let dom = power.domain();
        if dom == power.range() {
            return PartialInjection::partial_identity(&dom);
        }
        power = power.compose(x);
    }
}

/// Transitive closure of `x ↦ σxσ⁻¹`, defined when `σ⁻¹σ ≥ e_x`.
pub fn action_conjugacy_classes(monoid: &RennerMonoid, cap: usize) -> Result<ConjClassification> {
    check_oracle_cap(monoid, cap)?;
    let group_ids: Vec<PartialInjection> = monoid.elements().iter().map(group_idempotent).collect();
    let mut uf = UnionFind::new(monoid.len());
    for s in 0..monoid.len() {
        let sigma = monoid.element(s);
        let sigma_inv = sigma.inverse();
        let domain_id = sigma_inv.compose(sigma);
        for (x, gx) in group_ids.iter().enumerate() {
            if gx.natural_leq(&domain_id) {
                let y = sigma.compose(monoid.element(x)).compose(&sigma_inv);
                uf.union(x, monoid.id_of(&y).expect("monoid is closed"));
            }
        }
    }
    Ok(finish(monoid, ConjKind::Action, uf.classes()))
}

/// Picks representatives for a bare partition: among members `σ` with
/// domain `K_e` (`e` the stratum of `σ`), and for the non-`~` kinds also
/// range `K_e`, the one whose normal-form unit comes first.
fn finish(monoid: &RennerMonoid, kind: ConjKind, groups: Vec<Vec<usize>>) -> ConjClassification {
    let mut classes: Vec<(usize, ConjClass)> = groups
        .into_iter()
        .map(|members| {
            let (unit, representative) = if members.contains(&monoid.zero()) {
                (0, monoid.zero())
            } else {
                members
                    .iter()
                    .filter(|&&m| {
                        let sigma = monoid.element(m);
                        let base = &monoid.lattice().get(monoid.stratum(m)).face;
                        &sigma.domain() == base && (kind == ConjKind::Sim || &sigma.range() == base)
                    })
                    .map(|&m| (monoid.normal_form(m).expect("nonzero").unit, m))
                    .min()
                    .expect("every class meets the base face of its stratum")
            };
            let stratum = monoid.stratum(representative);
            (
                unit,
                ConjClass {
                    members,
                    representative,
                    stratum,
                },
            )
        })
        .collect();
    classes.sort_by_key(|(unit, c)| (c.stratum, *unit));
    ConjClassification {
        kind,
        classes: classes.into_iter().map(|(_, c)| c).collect(),
    }
}

/// `Σ_{e∈Λ} #classes(W^*(e))`; needs only W and `Λ`.
pub fn irreducible_rep_count_from_lattice(group: &WeylGroup, lattice: &CrossSectionLattice) -> usize {
    lattice
        .idempotents()
        .iter()
        .map(|e| {
            if e.is_zero {
                1
            } else {
                group_conjugacy_classes(group, &star_group(group, e)).len()
            }
        })
        .sum()
}

/// Number of inequivalent irreducible representations over an algebraically
/// closed field of characteristic zero.
pub fn irreducible_rep_count(monoid: &RennerMonoid) -> usize {
    irreducible_rep_count_from_lattice(monoid.group(), monoid.lattice())
}

/// Munn classes of the rook monoid `R_m`: `Σ_{r=0}^m p(r)`.
pub fn munn_count_rook(m: usize) -> Result<u128> {
    partition_counts(m)?
        .into_iter()
        .try_fold(0u128, |acc, p| acc.checked_add(p))
        .ok_or(Error::Overflow)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::renner::{build_renner, MonoidCaps};
    use crate::rootsys::{cartan_matrix, TypeLabel, WeightVector};

    fn monoid(label: TypeLabel, rank: usize, mu: &[i64]) -> RennerMonoid {
        let c = cartan_matrix(label, rank).unwrap();
        build_renner(&c, &WeightVector(mu.to_vec()), MonoidCaps::default()).unwrap()
    }

    #[test]
    fn canonical_sim_counts() {
        for (l, n) in [(TypeLabel::A, 18), (TypeLabel::B, 26), (TypeLabel::G, 35)] {
            let r = monoid(l, 2, &[1, 1]);
            assert_eq!(sim_conjugacy_classes(&r).len(), n);
            assert_eq!(count_sim_classes(&r), n);
        }
    }

    #[test]
    fn first_basic_sim_counts() {
        for (l, n) in [(TypeLabel::A, 10), (TypeLabel::B, 15), (TypeLabel::G, 19)] {
            let r = monoid(l, 2, &[1, 0]);
            assert_eq!(sim_conjugacy_classes(&r).len(), n);
        }
    }

    #[test]
    fn g2_orbit_breakdown() {
        let r = monoid(TypeLabel::G, 2, &[1, 1]);
        let n: Vec<usize> = orbit_reports(&r).iter().map(|o| o.orbit_count).collect();
        assert_eq!(n, vec![1, 12, 8, 8, 6]);
        for o in orbit_reports(&r) {
            assert_eq!(o.orbit_sizes.iter().sum::<usize>(), o.coset_count);
        }
    }

    #[test]
    fn degenerate_lattice_counts() {
        // first basic A1: Λ = {0, e[], 1}; the top stratum contributes #classes(W)
        let r = monoid(TypeLabel::A, 1, &[1]);
        assert_eq!(r.lattice().len(), 3);
        let reports = orbit_reports(&r);
        assert_eq!(reports.last().unwrap().orbit_count, 2);
    }

    #[test]
    fn munn_counts() {
        assert_eq!(munn_classes(&monoid(TypeLabel::A, 2, &[1, 0])).len(), 7);
        assert_eq!(munn_classes(&monoid(TypeLabel::B, 2, &[1, 0])).len(), 9);
        assert_eq!(munn_classes(&monoid(TypeLabel::A, 2, &[1, 1])).len(), 9);
    }

    #[test]
    fn rep_counts() {
        assert_eq!(irreducible_rep_count(&monoid(TypeLabel::A, 2, &[1, 0])), 7);
        assert_eq!(irreducible_rep_count(&monoid(TypeLabel::A, 1, &[1])), 4);
        assert_eq!(irreducible_rep_count(&monoid(TypeLabel::B, 2, &[1, 1])), 11);
    }

    #[test]
    fn rook_counts() {
        assert_eq!(munn_count_rook(0).unwrap(), 1);
        assert_eq!(munn_count_rook(2).unwrap(), 4);
        assert_eq!(munn_count_rook(3).unwrap(), 7);
        assert!(munn_count_rook(5000).is_err());
    }

    #[test]
    fn oracles_match_theorem_routes_on_first_basic_a2() {
        let r = monoid(TypeLabel::A, 2, &[1, 0]);
        let munn = munn_classes(&r);
        let sg = semigroup_conjugacy_classes(&r, DEFAULT_ORACLE_CAP).unwrap();
        let act = action_conjugacy_classes(&r, DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!(sg.len(), 7);
        assert!(munn.same_partition(&sg));
        assert!(munn.same_partition(&act));
        assert_eq!(
            munn.classes.iter().map(|c| c.representative).collect::<Vec<_>>(),
            sg.classes.iter().map(|c| c.representative).collect::<Vec<_>>()
        );
        let sim = sim_conjugacy_classes(&r);
        let brute = sim_classes_bruteforce(&r);
        assert_eq!(sim, brute);
    }

    #[test]
    fn oracle_cap() {
        let r = monoid(TypeLabel::A, 2, &[1, 0]);
        assert!(matches!(
            semigroup_conjugacy_classes(&r, 10),
            Err(Error::SizeCapExceeded { .. })
        ));
        assert!(action_conjugacy_classes(&r, 10).is_err());
    }

    #[test]
    fn kind_parsing() {
        for k in [ConjKind::Sim, ConjKind::Munn, ConjKind::Semigroup, ConjKind::Action] {
            assert_eq!(k.to_string().parse::<ConjKind>().unwrap(), k);
        }
        assert!("character".parse::<ConjKind>().is_err());
    }
}
