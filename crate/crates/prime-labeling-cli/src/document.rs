//! The on-disk graph document: a versioned, canonical JSON format for a
//! graph, optionally with the family it came from, its role map, and a
//! labeling.
//!
//! Canonical means deterministic: fields serialize in a fixed order, edges
//! are sorted ascending by `(u, v)`, and roles sort by name then index
//! tuple, so serializing the same instance twice yields identical bytes and
//! `parse(serialize(d)) == d`.

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use prime_labeling::{FamilyInstance, FamilyParams, Graph, Labeling};

/// Version tag written into every document.
pub const FORMAT_VERSION: u32 = 1;

/// Family name and positional parameters, as given on the command line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyTag {
    /// One of `cps`, `chain`, `fib`, `prism`, `book`.
    pub name: String,
    /// Positional parameters in command-line order.
    pub params: Vec<u64>,
}

/// One role-to-vertex binding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoleEntry {
    /// Role name, e.g. `c`, `p`, `o`, `v`, `d`.
    pub role: String,
    /// 1-based index tuple of the role.
    pub indices: Vec<u32>,
    /// Vertex id carrying the role.
    pub vertex: u32,
}

/// A graph (plus optional provenance, roles, and labeling) as stored on
/// disk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    /// Format version; always [`FORMAT_VERSION`] for documents this build
    /// writes.
    pub format: u32,
    /// Family the graph was built from, when known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyTag>,
    /// Number of vertices; ids are `0..vertex_count`.
    pub vertex_count: u32,
    /// Edges with `u < v`, sorted ascending.
    pub edges: Vec<(u32, u32)>,
    /// Role map of the family instance, when known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roles: Option<Vec<RoleEntry>>,
    /// Vertex labels indexed by vertex id.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<u64>>,
}

/// Family tag for a parameter set, mirroring the command-line spelling.
pub fn family_tag(params: &FamilyParams) -> FamilyTag {
    let (name, params) = match *params {
        FamilyParams::CyclePendantStar { n, m } => ("cps", vec![n as u64, m as u64]),
        FamilyParams::CycleChain { n, m } => ("chain", vec![n as u64, m as u64]),
        FamilyParams::FibonacciChain { m } => ("fib", vec![m as u64]),
        FamilyParams::Prism { n } => ("prism", vec![n as u64]),
        FamilyParams::Book { n, m } => ("book", vec![n as u64, m as u64]),
    };
    FamilyTag {
        name: name.to_string(),
        params,
    }
}

fn param_u32(params: &[u64], position: usize, what: &str) -> Result<u32> {
    let &value = params
        .get(position)
        .with_context(|| format!("missing parameter {what}"))?;
    u32::try_from(value).with_context(|| format!("parameter {what} = {value} is out of range"))
}

fn expect_param_count(name: &str, params: &[u64], expected: usize) -> Result<()> {
    if params.len() != expected {
        bail!(
            "family `{name}` takes {expected} parameter(s), got {}",
            params.len()
        );
    }
    Ok(())
}

/// Parses a family name and positional parameters into [`FamilyParams`].
///
/// Accepted spellings: `cps <n> <m>`, `chain <n> <m>`, `fib <m>`,
/// `prism <n>`, `book <n> <m>`.
pub fn parse_family(name: &str, params: &[u64]) -> Result<FamilyParams> {
    match name {
        "cps" => {
            expect_param_count(name, params, 2)?;
            Ok(FamilyParams::CyclePendantStar {
                n: param_u32(params, 0, "n")?,
                m: param_u32(params, 1, "m")?,
            })
        }
        "chain" => {
            expect_param_count(name, params, 2)?;
            Ok(FamilyParams::CycleChain {
                n: param_u32(params, 0, "n")?,
                m: param_u32(params, 1, "m")?,
            })
        }
        "fib" => {
            expect_param_count(name, params, 1)?;
            Ok(FamilyParams::FibonacciChain {
                m: param_u32(params, 0, "m")?,
            })
        }
        "prism" => {
            expect_param_count(name, params, 1)?;
            Ok(FamilyParams::Prism {
                n: param_u32(params, 0, "n")?,
            })
        }
        "book" => {
            expect_param_count(name, params, 2)?;
            Ok(FamilyParams::Book {
                n: param_u32(params, 0, "n")?,
                m: param_u32(params, 1, "m")?,
            })
        }
        other => bail!("unknown family `{other}` (expected cps, chain, fib, prism, or book)"),
    }
}

impl GraphDocument {
    /// Document for a family instance, with roles and provenance, and the
    /// labeling when one is supplied.
    pub fn from_instance(inst: &FamilyInstance, labeling: Option<&Labeling>) -> Self {
        let roles = inst
            .roles()
            .map(|(role, vertex)| RoleEntry {
                role: role.name.clone(),
                indices: role.indices.clone(),
                vertex,
            })
            .collect();
        GraphDocument {
            format: FORMAT_VERSION,
            family: Some(family_tag(inst.params())),
            vertex_count: inst.graph().vertex_count(),
            edges: inst.graph().edges().to_vec(),
            roles: Some(roles),
            labels: labeling.map(|l| l.as_slice().to_vec()),
        }
    }

    /// Document for a bare graph with no family provenance.
    pub fn from_graph(graph: &Graph, labeling: Option<&Labeling>) -> Self {
        GraphDocument {
            format: FORMAT_VERSION,
            family: None,
            vertex_count: graph.vertex_count(),
            edges: graph.edges().to_vec(),
            roles: None,
            labels: labeling.map(|l| l.as_slice().to_vec()),
        }
    }

    /// Canonical serialized form: pretty JSON with fixed key order and a
    /// trailing newline.
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("document serialization");
        text.push('\n');
        text
    }

    /// Parses and validates a document.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GraphDocument =
            serde_json::from_str(text).context("malformed graph document")?;
        if doc.format != FORMAT_VERSION {
            bail!(
                "unsupported document format version {} (this build reads version {})",
                doc.format,
                FORMAT_VERSION
            );
        }
        if doc.edges.iter().any(|&(u, v)| u >= v) {
            bail!("document edges must be written with u < v");
        }
        if !doc.edges.windows(2).all(|w| w[0] < w[1]) {
            bail!("document edge list is not sorted ascending by (u, v)");
        }
        if let Some(labels) = &doc.labels {
            if labels.len() != doc.vertex_count as usize {
                bail!(
                    "document has {} labels for {} vertices",
                    labels.len(),
                    doc.vertex_count
                );
            }
        }
        Ok(doc)
    }

    /// Reconstructs the graph, re-validating the edge list.
    pub fn graph(&self) -> Result<Graph> {
        Graph::new(self.vertex_count, &self.edges)
            .map_err(|e| anyhow::anyhow!("document does not describe a valid graph: {e}"))
    }

    /// The embedded labeling, if any.
    pub fn labeling(&self) -> Option<Labeling> {
        self.labels.as_ref().map(|l| Labeling::new(l.clone()))
    }
}
