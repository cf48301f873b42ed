//! JSON and CSV documents for monoids and classifications.
//!
//! Output is deterministic: fields serialize in declaration order and every
//! list follows element, lattice or class order.

use serde::{Deserialize, Serialize};

use crate::conj::{orbit_reports, ConjClassification, ConjKind};
use crate::crosslat::{centralizer, stabilizer, CrossSectionLattice};
use crate::error::{Error, Result};
use crate::partialinj::PartialInjection;
use crate::renner::RennerMonoid;
use crate::rootsys::WeylGroup;

fn write_csv<I, R>(header: &[&str], rows: I) -> String
where
    I: IntoIterator<Item = R>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeRow {
    pub e: String,
    pub lambda_star: Vec<usize>,
    pub lambda_sub: Vec<usize>,
    pub centralizer_order: usize,
    pub stabilizer_order: usize,
}

/// `Λ` with `λ*`, `λ_*`, `|W(e)|` and `|W_*(e)|` per idempotent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeDocument {
    #[serde(rename = "type")]
    pub type_label: String,
    pub weight: Vec<i64>,
    pub group_order: usize,
    pub vertex_count: usize,
    pub idempotents: Vec<LatticeRow>,
}

impl LatticeDocument {
    pub fn new(group: &WeylGroup, lattice: &CrossSectionLattice) -> Self {
        LatticeDocument {
            type_label: group.cartan().to_string(),
            weight: lattice.spec().mu().coords().to_vec(),
            group_order: group.order(),
            vertex_count: group.vertex_count(),
            idempotents: lattice
                .idempotents()
                .iter()
                .enumerate()
                .map(|(k, e)| LatticeRow {
                    e: lattice.label(k),
                    lambda_star: e.lambda_star.one_based(),
                    lambda_sub: e.lambda_sub.one_based(),
                    centralizer_order: centralizer(group, e).order(),
                    stabilizer_order: stabilizer(group, e).order(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("lattice documents always serialize")
    }

    pub fn to_csv(&self) -> String {
        let join = |v: &[usize]| v.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ");
        write_csv(
            &["e", "lambda_star", "lambda_sub", "centralizer_order", "stabilizer_order"],
            self.idempotents.iter().map(|r| {
                [
                    r.e.clone(),
                    join(&r.lambda_star),
                    join(&r.lambda_sub),
                    r.centralizer_order.to_string(),
                    r.stabilizer_order.to_string(),
                ]
            }),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StratumEntry {
    pub e: String,
    pub lambda_star: Vec<usize>,
    pub lambda_sub: Vec<usize>,
    pub elements: Vec<usize>,
}

/// `{vertices, generators, elements, strata}` for a built monoid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonoidDocument {
    #[serde(rename = "type")]
    pub type_label: String,
    pub weight: Vec<i64>,
    pub vertices: Vec<Vec<i64>>,
    pub generators: Vec<PartialInjection>,
    pub elements: Vec<PartialInjection>,
    pub strata: Vec<StratumEntry>,
}

impl MonoidDocument {
    pub fn from_monoid(monoid: &RennerMonoid) -> Self {
        let group = monoid.group();
        let lattice = monoid.lattice();
        let strata = lattice
            .idempotents()
            .iter()
            .enumerate()
            .map(|(k, e)| StratumEntry {
                e: lattice.label(k),
                lambda_star: e.lambda_star.one_based(),
                lambda_sub: e.lambda_sub.one_based(),
                elements: monoid.stratum_members(k),
            })
            .collect();
        MonoidDocument {
            type_label: group.cartan().to_string(),
            weight: lattice.spec().mu().coords().to_vec(),
            vertices: group.vertex_orbit().iter().map(|v| v.coords().to_vec()).collect(),
            generators: monoid
                .generators()
                .iter()
                .map(|&g| monoid.element(g).clone())
                .collect(),
            elements: monoid.elements().to_vec(),
            strata,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("monoid documents always serialize")
    }

    /// Decodes and validates a document produced by [`MonoidDocument::to_json`].
    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct RawStratum {
            e: String,
            lambda_star: Vec<usize>,
            lambda_sub: Vec<usize>,
            elements: Vec<usize>,
        }
        #[derive(Deserialize)]
        struct Raw {
            #[serde(rename = "type")]
            type_label: String,
            weight: Vec<i64>,
            vertices: Vec<Vec<i64>>,
            generators: Vec<Vec<(usize, usize)>>,
            elements: Vec<Vec<(usize, usize)>>,
            strata: Vec<RawStratum>,
        }
        let raw: Raw = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let rank = raw.weight.len();
        let n = raw.vertices.len();
        if raw.vertices.iter().any(|v| v.len() != rank) {
            return Err(Error::Parse("vertex coordinates do not match the weight length".into()));
        }
        let decode = |pairs: &Vec<(usize, usize)>| PartialInjection::from_pairs(n, pairs);
        let generators = raw.generators.iter().map(decode).collect::<Result<Vec<_>>>()?;
        let elements = raw.elements.iter().map(decode).collect::<Result<Vec<_>>>()?;
        let mut seen = vec![false; elements.len()];
        for s in &raw.strata {
            for &i in &s.elements {
                match seen.get_mut(i) {
                    Some(flag) if !*flag => *flag = true,
                    Some(_) => return Err(Error::Parse(format!("element {i} listed in two strata"))),
                    None => return Err(Error::Parse(format!("element index {i} out of range"))),
                }
            }
        }
        if seen.iter().any(|f| !f) {
            return Err(Error::Parse("strata do not cover every element".into()));
        }
        Ok(MonoidDocument {
            type_label: raw.type_label,
            weight: raw.weight,
            vertices: raw.vertices,
            generators,
            elements,
            strata: raw
                .strata
                .into_iter()
                .map(|s| StratumEntry {
                    e: s.e,
                    lambda_star: s.lambda_star,
                    lambda_sub: s.lambda_sub,
                    elements: s.elements,
                })
                .collect(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassEntry {
    pub stratum: String,
    pub size: usize,
    pub representative: String,
    pub representative_map: PartialInjection,
}

/// `{kind, class_count, classes: [{stratum, size, representative}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationDocument {
    pub kind: ConjKind,
    pub class_count: usize,
    pub classes: Vec<ClassEntry>,
}

impl ClassificationDocument {
    pub fn new(monoid: &RennerMonoid, classification: &ConjClassification) -> Self {
        ClassificationDocument {
            kind: classification.kind,
            class_count: classification.len(),
            classes: classification
                .classes
                .iter()
                .map(|c| ClassEntry {
                    stratum: monoid.lattice().label(c.stratum),
                    size: c.members.len(),
                    representative: monoid.label(c.representative),
                    representative_map: monoid.element(c.representative).clone(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("classification documents always serialize")
    }

    pub fn to_csv(&self) -> String {
        write_csv(
            &["stratum", "size", "representative"],
            self.classes
                .iter()
                .map(|c| [c.stratum.clone(), c.size.to_string(), c.representative.clone()]),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SummaryRow {
    pub e: String,
    pub lambda_star: Vec<usize>,
    pub centralizer_order: usize,
    pub stabilizer_order: usize,
    pub coset_count: usize,
    pub n_e: usize,
    pub orbit_reps: Vec<String>,
}

/// Per-stratum orbit counts and their total.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountsDocument {
    pub strata: Vec<SummaryRow>,
    pub total: usize,
}

impl CountsDocument {
    pub fn new(monoid: &RennerMonoid) -> Self {
        let lattice = monoid.lattice();
        let strata: Vec<SummaryRow> = orbit_reports(monoid)
            .into_iter()
            .map(|r| SummaryRow {
                e: lattice.label(r.e),
                lambda_star: lattice.get(r.e).lambda_star.one_based(),
                centralizer_order: r.centralizer_order,
                stabilizer_order: r.stabilizer_order,
                coset_count: r.coset_count,
                n_e: r.orbit_count,
                orbit_reps: r
                    .orbit_reps
                    .iter()
                    .map(|&u| monoid.label(monoid.unit_times_idempotent(u, r.e)))
                    .collect(),
            })
            .collect();
        let total = strata.iter().map(|s| s.n_e).sum();
        CountsDocument { strata, total }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("count documents always serialize")
    }

    /// `e, |W(e)|, |W_*(e)|, coset_count, n_e` per stratum.
    pub fn to_csv(&self) -> String {
        write_csv(
            &["e", "centralizer_order", "stabilizer_order", "coset_count", "n_e"],
            self.strata.iter().map(|s| {
                [
                    s.e.clone(),
                    s.centralizer_order.to_string(),
                    s.stabilizer_order.to_string(),
                    s.coset_count.to_string(),
                    s.n_e.to_string(),
                ]
            }),
        )
    }
}
