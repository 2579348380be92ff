//! Breadth-first walk of the superspecial Richelot graph.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::richelot::{all_splittings, richelot_codomain, Codomain};
use super::rosenhain::{rosenhain_superspecial, RosenhainTriple};
use super::seed::{find_seed_ssp2, SeedRecord};
use crate::curve::{reduced_automorphisms, CanonicalKey};
use crate::elliptic::{JInvariant, SupersingularSet};
use crate::error::{Error, Result};
use crate::field::FieldTowerCtx;

/// A vertex of the graph: a Jacobian, or a product of two elliptic curves.
pub type Ssp2Node = Codomain;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum NodeRef {
    Jacobian(usize),
    Product(usize),
}

/// One Richelot isogeny, out of Jacobian `from` along splitting `splitting`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Ssp2Edge {
    pub from: usize,
    pub splitting: u8,
    pub to: NodeRef,
}

#[derive(Clone, Debug)]
pub struct Ssp2Graph {
    pub p: u64,
    /// Jacobian nodes sorted by canonical key.
    pub jacobians: Vec<(CanonicalKey, RosenhainTriple)>,
    /// Product nodes, each pair sorted, the list sorted.
    pub products: Vec<(JInvariant, JInvariant)>,
    /// Sorted by (from, splitting).
    pub edges: Vec<Ssp2Edge>,
    pub seeds: Vec<SeedRecord>,
}

fn expand(k: &FieldTowerCtx, t: &RosenhainTriple) -> Result<Vec<Codomain>> {
    all_splittings(&t.branch_set())
        .iter()
        .map(|s| richelot_codomain(k, s))
        .collect()
}

/// Walks from the seeds until no new Jacobian appears. Products are
/// recorded but not expanded.
pub fn enumerate_ssp2(k: &FieldTowerCtx, s: &SupersingularSet) -> Result<Ssp2Graph> {
    let seeds = find_seed_ssp2(k, s)?;
    let mut seen: BTreeMap<CanonicalKey, RosenhainTriple> = seeds.nodes.iter().cloned().collect();
    let mut frontier = seeds.nodes.clone();
    let mut out_edges: Vec<(CanonicalKey, Vec<Codomain>)> = Vec::new();
    while !frontier.is_empty() {
        let expanded: Vec<Result<Vec<Codomain>>> =
            frontier.par_iter().map(|(_, t)| expand(k, t)).collect();
        let mut next = Vec::new();
        for ((key, _), cods) in frontier.iter().zip(expanded) {
            let cods = cods?;
            for c in &cods {
                if let Codomain::Jacobian { key, triple } = c {
                    if !seen.contains_key(key) {
                        seen.insert(key.clone(), *triple);
                        next.push((key.clone(), *triple));
                    }
                }
            }
            out_edges.push((key.clone(), cods));
        }
        next.sort();
        frontier = next;
    }
    let jacobians: Vec<(CanonicalKey, RosenhainTriple)> = seen.into_iter().collect();
    let new_nodes: Vec<&(CanonicalKey, RosenhainTriple)> = jacobians
        .iter()
        .filter(|(key, _)| seeds.nodes.binary_search_by(|(k2, _)| k2.cmp(key)).is_err())
        .collect();
    if let Some((key, _)) = new_nodes
        .par_iter()
        .find_any(|(_, t)| !rosenhain_superspecial(k, t))
    {
        return Err(Error::Integrity(format!(
            "Richelot neighbour {key} is not superspecial"
        )));
    }
    let products: Vec<(JInvariant, JInvariant)> = out_edges
        .iter()
        .flat_map(|(_, cods)| cods.iter())
        .filter_map(|c| match c {
            Codomain::Product { j1, j2 } => Some((*j1, *j2)),
            Codomain::Jacobian { .. } => None,
        })
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    for &(j1, j2) in &products {
        if !s.contains(j1.0) || !s.contains(j2.0) {
            return Err(Error::Integrity(
                "product neighbour has a non-supersingular factor".into(),
            ));
        }
    }
    let jac_index = |key: &CanonicalKey| {
        jacobians
            .binary_search_by(|(k2, _)| k2.cmp(key))
            .expect("every endpoint is a node")
    };
    let mut edges = Vec::with_capacity(out_edges.len() * 15);
    for (key, cods) in &out_edges {
        let from = jac_index(key);
        for (i, c) in cods.iter().enumerate() {
            let to = match c {
                Codomain::Jacobian { key, .. } => NodeRef::Jacobian(jac_index(key)),
                Codomain::Product { j1, j2 } => NodeRef::Product(
                    products
                        .binary_search(&(*j1, *j2))
                        .expect("collected above"),
                ),
            };
            edges.push(Ssp2Edge {
                from,
                splitting: i as u8,
                to,
            });
        }
    }
    edges.sort();
    log::info!(
        "p = {}: {} superspecial Jacobians, {} product neighbours, {} edges",
        k.p(),
        jacobians.len(),
        products.len(),
        edges.len()
    );
    Ok(Ssp2Graph {
        p: k.p(),
        jacobians,
        products,
        edges,
        seeds: seeds.provenance,
    })
}

impl Ssp2Graph {
    pub fn keys(&self) -> BTreeSet<CanonicalKey> {
        self.jacobians.iter().map(|(key, _)| key.clone()).collect()
    }

    /// Re-expands every Jacobian and checks that all 15 codomains are nodes.
    pub fn check_closure(&self, k: &FieldTowerCtx) -> Result<()> {
        self.jacobians.par_iter().try_for_each(|(_, t)| {
            for c in expand(k, t)? {
                let present = match &c {
                    Codomain::Jacobian { key, .. } => self
                        .jacobians
                        .binary_search_by(|(k2, _)| k2.cmp(key))
                        .is_ok(),
                    Codomain::Product { j1, j2 } => {
                        self.products.binary_search(&(*j1, *j2)).is_ok()
                    }
                };
                if !present {
                    return Err(Error::Integrity(format!(
                        "codomain {c:?} missing from the graph"
                    )));
                }
            }
            Ok(())
        })
    }

    pub fn catalog(&self, k: &FieldTowerCtx) -> Ssp2Catalog {
        let entries = self
            .jacobians
            .par_iter()
            .map(|(key, t)| CatalogEntry {
                key: key.clone(),
                triple: *t,
                aut_order: reduced_automorphisms(k, &t.branch_set()).len(),
            })
            .collect();
        Ssp2Catalog {
            p: self.p,
            entries,
            seeds: self.seeds.clone(),
        }
    }
}

/// A Jacobian node as stored on disk.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CatalogEntry {
    pub key: CanonicalKey,
    pub triple: RosenhainTriple,
    /// Order of the reduced automorphism group.
    pub aut_order: usize,
}

/// The Jacobian nodes of the graph, the part later stages consume.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ssp2Catalog {
    pub p: u64,
    pub entries: Vec<CatalogEntry>,
    /// Empty when loaded from a cache that predates provenance lines.
    pub seeds: Vec<SeedRecord>,
}

#[derive(Serialize, Deserialize)]
struct SeedLine {
    seed: SeedRecord,
}

impl Ssp2Catalog {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `hexkey λ;μ;ν autorder` per node, preceded by `#` provenance lines.
    pub fn payload_lines(&self, k: &FieldTowerCtx) -> Vec<String> {
        let mut out: Vec<String> = self
            .seeds
            .iter()
            .map(|r| {
                format!(
                    "# {}",
                    serde_json::to_string(&SeedLine { seed: r.clone() }).expect("plain data")
                )
            })
            .collect();
        out.extend(
            self.entries
                .iter()
                .map(|e| format!("{} {} {}", e.key, e.triple.encode(k), e.aut_order)),
        );
        out
    }

    pub fn from_payload_lines<'a>(
        k: &FieldTowerCtx,
        lines: impl IntoIterator<Item = &'a str>,
    ) -> Result<Self> {
        let mut entries = Vec::new();
        let mut seeds = Vec::new();
        for line in lines {
            if let Some(rest) = line.strip_prefix('#') {
                if let Ok(s) = serde_json::from_str::<SeedLine>(rest.trim()) {
                    seeds.push(s.seed);
                }
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            let [key, triple, aut] = parts.as_slice() else {
                return Err(Error::Cache(format!("malformed SSp2 line {line:?}")));
            };
            let key = CanonicalKey::from_hex(key)?;
            let triple = RosenhainTriple::parse(k, triple)?;
            let aut_order = aut
                .parse()
                .map_err(|_| Error::Cache(format!("bad automorphism order in {line:?}")))?;
            if RosenhainTriple::from_canonical_key(&key)? != triple {
                return Err(Error::Cache(format!(
                    "triple does not match key in {line:?}"
                )));
            }
            entries.push(CatalogEntry {
                key,
                triple,
                aut_order,
            });
        }
        if entries.windows(2).any(|w| w[0].key >= w[1].key) {
            return Err(Error::Cache(
                "SSp2 payload is not strictly sorted by key".into(),
            ));
        }
        Ok(Ssp2Catalog {
            p: k.p(),
            entries,
            seeds,
        })
    }
}
