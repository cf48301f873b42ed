#![allow(dead_code)]

use renner_core::renner::{build_renner, MonoidCaps, RennerMonoid};
use renner_core::rootsys::{cartan_matrix, TypeLabel, WeightVector};

pub fn monoid(label: TypeLabel, rank: usize, mu: &[i64]) -> RennerMonoid {
    let cartan = cartan_matrix(label, rank).unwrap();
    build_renner(&cartan, &WeightVector(mu.to_vec()), MonoidCaps::default()).unwrap()
}

/// Canonical (weight 1,1) and first basic (weight 1,0) monoids of rank two.
pub fn rank_two_monoids() -> Vec<(String, RennerMonoid)> {
    let mut out = Vec::new();
    for mu in [[1, 1], [1, 0]] {
        for label in [TypeLabel::A, TypeLabel::B, TypeLabel::G] {
            out.push((format!("{label}2 ({},{})", mu[0], mu[1]), monoid(label, 2, &mu)));
        }
    }
    out
}
