mod common;

use std::collections::BTreeSet;
use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::sample::Index;

use renner_core::conj::{munn_classes, ConjClassification};
use renner_core::crosslat::star_group;
use renner_core::partialinj::{PartialInjection, VertexSet};
use renner_core::renner::{stable_domain, RennerMonoid};
use renner_core::rootsys::{
    cartan_matrix, generate_weyl, group_conjugacy_classes, min_coset_reps, parabolic, reflect, NodeSet,
    TypeLabel, WeightVector, WeylGroup, DEFAULT_GROUP_CAP,
};

struct Fixture {
    monoids: Vec<(String, RennerMonoid)>,
    munn: Vec<ConjClassification>,
}

fn fixture() -> &'static Fixture {
    static F: OnceLock<Fixture> = OnceLock::new();
    F.get_or_init(|| {
        let mut monoids = common::rank_two_monoids();
        monoids.push(("A3 (1,0,0)".into(), common::monoid(TypeLabel::A, 3, &[1, 0, 0])));
        monoids.push(("B3 (0,1,0)".into(), common::monoid(TypeLabel::B, 3, &[0, 1, 0])));
        let munn = monoids.iter().map(|(_, r)| munn_classes(r)).collect();
        Fixture { monoids, munn }
    })
}

fn any_type() -> impl Strategy<Value = (TypeLabel, usize)> {
    prop_oneof![
        (1usize..=4).prop_map(|n| (TypeLabel::A, n)),
        (2usize..=4).prop_map(|n| (TypeLabel::B, n)),
        (2usize..=4).prop_map(|n| (TypeLabel::C, n)),
        Just((TypeLabel::D, 4)),
        Just((TypeLabel::F, 4)),
        Just((TypeLabel::G, 2)),
    ]
}

fn regular_group(label: TypeLabel, rank: usize) -> WeylGroup {
    let cartan = cartan_matrix(label, rank).unwrap();
    generate_weyl(&cartan, &WeightVector(vec![1; rank]), DEFAULT_GROUP_CAP).unwrap()
}

fn partial_injection(max_degree: usize) -> impl Strategy<Value = PartialInjection> {
    (1..=max_degree).prop_flat_map(|n| {
        (Just(n), Just((0..n).collect::<Vec<usize>>()).prop_shuffle(), proptest::collection::vec(any::<bool>(), n))
            .prop_map(|(n, image, keep)| {
                let pairs: Vec<(usize, usize)> = (0..n).filter(|&i| keep[i]).map(|i| (i, image[i])).collect();
                PartialInjection::from_pairs(n, &pairs).unwrap()
            })
    })
}

fn triple(max_degree: usize) -> impl Strategy<Value = (PartialInjection, PartialInjection, PartialInjection)> {
    (1..=max_degree).prop_flat_map(|n| (partial_injection_of(n), partial_injection_of(n), partial_injection_of(n)))
}

fn partial_injection_of(n: usize) -> impl Strategy<Value = PartialInjection> {
    (Just((0..n).collect::<Vec<usize>>()).prop_shuffle(), proptest::collection::vec(any::<bool>(), n)).prop_map(
        move |(image, keep)| {
            let pairs: Vec<(usize, usize)> = (0..n).filter(|&i| keep[i]).map(|i| (i, image[i])).collect();
            PartialInjection::from_pairs(n, &pairs).unwrap()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn partial_injection_algebra((x, y, z) in triple(9)) {
        prop_assert_eq!(x.compose(&y).compose(&z), x.compose(&y.compose(&z)));
        let xi = x.inverse();
        prop_assert_eq!(x.compose(&xi).compose(&x), x.clone());
        prop_assert_eq!(xi.compose(&x).compose(&xi), xi.clone());
        prop_assert_eq!(x.compose(&y).inverse(), y.inverse().compose(&xi));
        let (e, f) = (xi.compose(&x), y.compose(&y.inverse()));
        prop_assert!(e.is_idempotent() && f.is_idempotent());
        prop_assert_eq!(e.compose(&f), f.compose(&e));
        // σ ≤ τ iff σ = τ e_{dom σ}
        let below = y.compose(&PartialInjection::partial_identity(&x.domain())) == x;
        prop_assert_eq!(x.natural_leq(&y), below);
        prop_assert!(x.restrict(&f.domain()).natural_leq(&x));
    }

    #[test]
    fn json_round_trip(x in partial_injection(12)) {
        prop_assert_eq!(PartialInjection::from_json(&x.to_json(), x.degree()).unwrap(), x);
    }

    #[test]
    fn stable_domain_is_intersection_of_power_domains(x in partial_injection(9)) {
        let mut power = x.clone();
        let mut meet = x.domain();
        for _ in 0..x.degree() {
            power = power.compose(&x);
            meet = meet.intersection(&power.domain());
        }
        prop_assert_eq!(stable_domain(&x), meet);
    }

    #[test]
    fn reflections_are_involutions((label, rank) in any_type(), coords in proptest::collection::vec(-5i64..=5, 4), i in any::<Index>()) {
        let cartan = cartan_matrix(label, rank).unwrap();
        let v = WeightVector(coords[..rank].to_vec());
        let i = i.index(rank);
        let s = reflect(&cartan, i, &v);
        prop_assert_eq!(s.coords()[i], -v.coords()[i]);
        prop_assert_eq!(reflect(&cartan, i, &s), v);
    }

    #[test]
    fn length_changes_by_one((label, rank) in any_type(), w in any::<Index>(), i in any::<Index>()) {
        let g = regular_group(label, rank);
        prop_assert_eq!(g.order() as u128, g.cartan().weyl_group_order());
        let w = w.index(g.order());
        let i = i.index(rank);
        let ws = g.mul_gen(w, i);
        prop_assert_eq!(g.length(ws).abs_diff(g.length(w)), 1);
        prop_assert_eq!(g.mul(g.inverse(w), w), g.identity());
        prop_assert_eq!(g.length(g.inverse(w)), g.length(w));
    }

    #[test]
    fn parabolic_cosets_tile_the_group((label, rank) in any_type(), bits in any::<u32>()) {
        let g = regular_group(label, rank);
        let nodes = NodeSet::from_bits(bits & NodeSet::full(rank).bits());
        let sub = parabolic(&g, nodes);
        let reps = min_coset_reps(&g, nodes);
        prop_assert_eq!(reps.len() * sub.order(), g.order());
        let mut hit = vec![false; g.order()];
        for &u in &reps {
            for &v in &sub.members {
                let w = g.mul(u, v);
                prop_assert!(!hit[w]);
                hit[w] = true;
                prop_assert_eq!(g.length(w), g.length(u) + g.length(v));
            }
        }
        let classes = group_conjugacy_classes(&g, &sub);
        prop_assert_eq!(classes.iter().map(Vec::len).sum::<usize>(), sub.order());
        for class in &classes {
            for &x in class {
                for &v in &sub.members {
                    prop_assert!(class.binary_search(&g.conjugate(v, x)).is_ok());
                }
            }
        }
    }

    #[test]
    fn units_move_idempotents_to_idempotents(m in any::<Index>(), w in any::<Index>(), x in any::<Index>()) {
        let (_, r) = &fixture().monoids[m.index(fixture().monoids.len())];
        let g = r.group();
        let w = w.index(g.order());
        let e = r.element(r.mul(r.inverse(x.index(r.len())), x.index(r.len()))).clone();
        prop_assert!(e.is_idempotent());
        let conj = g.perm(w).compose(&e).compose(g.perm(g.inverse(w)));
        let moved = g.act_on_set(w, &e.domain());
        prop_assert_eq!(&conj, &PartialInjection::partial_identity(&moved));
        prop_assert!(r.id_of(&conj).is_some());
        prop_assert_eq!(r.stratum(r.id_of(&conj).unwrap()), r.stratum(r.id_of(&e).unwrap()));
    }

    #[test]
    fn invertible_parts_and_projections(m in any::<Index>(), x in any::<Index>()) {
        let fx = fixture();
        let k = m.index(fx.monoids.len());
        let (_, r) = &fx.monoids[k];
        let g = r.group();
        let x = x.index(r.len());
        let core = r.invertible_part(x);
        let e = r.subrank(x);
        prop_assert_eq!(r.stratum(core), e);
        let class_of = fx.munn[k].class_of(r.len());
        prop_assert_eq!(class_of[x], class_of[core]);
        if e != 0 {
            // p(σ°) = w⁻¹ σ° w with w the transporter of the domain of σ°
            let domain = r.element(core).domain();
            let t = r.face_transporter(&r.lattice().get(e).face, &domain).unwrap();
            let conj = r.conjugate_by_unit(g.inverse(t.unit), core);
            prop_assert_eq!(r.project(core).unwrap(), r.element(conj).clone());
            prop_assert!(star_group(g, r.lattice().get(e)).contains(r.project_to_star_group(core).unwrap()));
        }
    }
}

#[test]
fn lattice_order_matches_products() {
    for (name, r) in &fixture().monoids {
        let lattice = r.lattice();
        for a in 0..lattice.len() {
            for b in 0..lattice.len() {
                let (ea, eb) = (lattice.get(a).partial_identity(), lattice.get(b).partial_identity());
                assert_eq!(lattice.leq(a, b), ea.compose(&eb) == ea, "{name}: {a} <= {b}");
            }
        }
        assert_eq!(lattice.minimal_nonzero().len(), 1, "{name}");
    }
}

#[test]
fn munn_classes_meet_one_star_class() {
    let fx = fixture();
    for ((name, r), munn) in fx.monoids.iter().zip(&fx.munn) {
        let g = r.group();
        for k in 1..r.lattice().len() {
            let idem = r.lattice().get(k);
            let star = star_group(g, idem);
            let star_classes = group_conjugacy_classes(g, &star);
            let classes: Vec<_> = munn.classes.iter().filter(|c| c.stratum == k).collect();
            assert_eq!(classes.len(), star_classes.len(), "{name} {}", r.lattice().label(k));
            for class in classes {
                let members: BTreeSet<usize> = class.members.iter().copied().collect();
                let hits: Vec<usize> = star_classes
                    .iter()
                    .enumerate()
                    .filter(|(_, sc)| sc.iter().any(|&x| members.contains(&r.unit_times_idempotent(x, k))))
                    .map(|(i, _)| i)
                    .collect();
                assert_eq!(hits.len(), 1, "{name}: Munn class meets {} classes of W^*(e)", hits.len());
                for &x in &star_classes[hits[0]] {
                    assert!(members.contains(&r.unit_times_idempotent(x, k)));
                }
            }
        }
    }
}

#[test]
fn stable_domain_is_a_face_for_every_element() {
    for (name, r) in &fixture().monoids {
        for x in 0..r.len() {
            let stable: VertexSet = stable_domain(r.element(x));
            assert!(stable.is_empty() || r.face_info(&stable).is_some(), "{name}: {x}");
        }
    }
}
