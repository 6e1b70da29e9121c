//! Serializable output documents. Each one round-trips through JSON.

use serde::{Deserialize, Serialize};

use subcanonical::atlas::{AtlasRow, StoredRow};
use subcanonical::limit_series::{CrudeLimitViolation, ExpectedDimensions};
use subcanonical::{ClosureViolation, Component, Parity, PointProfile, VanishingSequence};

/// Sequences are rendered as comma lists in CSV and markdown.
pub fn join(values: &[u32]) -> String {
    values
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn opt<T: ToString>(value: &Option<T>) -> String {
    value.as_ref().map_or_else(String::new, T::to_string)
}

/// A flat table for the CSV and markdown renderers.
pub struct Tabular {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Tabular {
    /// Two-column `field,value` layout for single documents.
    fn fields(pairs: Vec<(&'static str, String)>) -> Self {
        Self {
            headers: vec!["field", "value"],
            rows: pairs
                .into_iter()
                .map(|(k, v)| vec![k.to_string(), v])
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileDocument {
    pub genus: u32,
    pub vanishing: Vec<u32>,
    pub ramification: Vec<u32>,
    pub gaps: Vec<u32>,
    pub weight: u32,
    pub theta_h0: Option<u32>,
    pub parity: Option<Parity>,
    pub subcanonical: bool,
    pub component: Option<Component>,
}

impl From<&PointProfile> for ProfileDocument {
    fn from(p: &PointProfile) -> Self {
        Self {
            genus: p.genus,
            vanishing: p.vanishing.values().to_vec(),
            ramification: p.ramification.values().to_vec(),
            gaps: p.gaps.gaps().to_vec(),
            weight: p.weight,
            theta_h0: p.theta_h0,
            parity: p.parity,
            subcanonical: p.subcanonical,
            component: p.component,
        }
    }
}

impl ProfileDocument {
    fn pairs(&self) -> Vec<(&'static str, String)> {
        vec![
            ("genus", self.genus.to_string()),
            ("vanishing", join(&self.vanishing)),
            ("ramification", join(&self.ramification)),
            ("gaps", join(&self.gaps)),
            ("weight", self.weight.to_string()),
            ("theta_h0", opt(&self.theta_h0)),
            ("parity", opt(&self.parity)),
            ("subcanonical", self.subcanonical.to_string()),
            ("component", opt(&self.component)),
        ]
    }

    pub fn tabular(&self) -> Tabular {
        Tabular::fields(self.pairs())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationDocument {
    pub x: u32,
    pub y: u32,
    pub sum: u32,
}

impl From<ClosureViolation> for ViolationDocument {
    fn from(v: ClosureViolation) -> Self {
        Self {
            x: v.x,
            y: v.y,
            sum: v.sum,
        }
    }
}

/// Profile plus the semigroup verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDocument {
    #[serde(flatten)]
    pub profile: ProfileDocument,
    pub semigroup_closed: bool,
    pub violation: Option<ViolationDocument>,
    pub symmetric: Option<bool>,
    pub generators: Option<Vec<u32>>,
}

impl CheckDocument {
    pub fn tabular(&self) -> Tabular {
        let mut pairs = self.profile.pairs();
        pairs.push(("semigroup_closed", self.semigroup_closed.to_string()));
        pairs.push((
            "violation",
            self.violation
                .map_or_else(String::new, |v| format!("{}+{}={}", v.x, v.y, v.sum)),
        ));
        pairs.push(("symmetric", opt(&self.symmetric)));
        pairs.push((
            "generators",
            self.generators.as_deref().map_or_else(String::new, join),
        ));
        Tabular::fields(pairs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRowDocument {
    pub genus: u32,
    pub vanishing: Vec<u32>,
    pub ramification: Vec<u32>,
    pub parity: Parity,
    pub weight: u32,
    pub codim: Option<u32>,
    pub realization: String,
    pub provenance: String,
}

impl From<&StoredRow> for TableRowDocument {
    fn from(r: &StoredRow) -> Self {
        Self {
            genus: r.genus,
            vanishing: r.vanishing.values().to_vec(),
            ramification: r.vanishing.ramification().values().to_vec(),
            parity: r.parity,
            weight: r.weight,
            codim: r.codim,
            realization: r.realization.clone(),
            provenance: r.provenance.clone(),
        }
    }
}

pub fn table_tabular(rows: &[TableRowDocument]) -> Tabular {
    Tabular {
        headers: vec![
            "genus",
            "vanishing",
            "ramification",
            "parity",
            "weight",
            "codim",
            "realization",
            "provenance",
        ],
        rows: rows
            .iter()
            .map(|r| {
                vec![
                    r.genus.to_string(),
                    join(&r.vanishing),
                    join(&r.ramification),
                    r.parity.to_string(),
                    r.weight.to_string(),
                    opt(&r.codim),
                    r.realization.clone(),
                    r.provenance.clone(),
                ]
            })
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasRowDocument {
    pub genus: u32,
    pub vanishing: Vec<u32>,
    pub ramification: Vec<u32>,
    pub parity: Parity,
    pub weight: u32,
    pub component: Component,
    pub codim_claim: Option<u32>,
    pub in_table: bool,
    pub realization_note: String,
}

impl AtlasRowDocument {
    pub fn new(row: &AtlasRow, component: Component) -> Self {
        Self {
            genus: row.genus,
            vanishing: row.vanishing.values().to_vec(),
            ramification: row.ramification.values().to_vec(),
            parity: row.parity,
            weight: row.weight,
            component,
            codim_claim: row.codim_claim,
            in_table: row.in_table,
            realization_note: row.realization_note.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationDocument {
    pub genus: u32,
    pub count: usize,
    pub rows: Vec<AtlasRowDocument>,
    /// Present only when compared against the stored table.
    pub extras: Option<Vec<Vec<u32>>>,
    pub missing: Option<Vec<Vec<u32>>>,
}

impl EnumerationDocument {
    pub fn tabular(&self) -> Tabular {
        Tabular {
            headers: vec![
                "genus",
                "vanishing",
                "ramification",
                "parity",
                "weight",
                "component",
                "codim_claim",
                "in_table",
                "realization",
            ],
            rows: self
                .rows
                .iter()
                .map(|r| {
                    vec![
                        r.genus.to_string(),
                        join(&r.vanishing),
                        join(&r.ramification),
                        r.parity.to_string(),
                        r.weight.to_string(),
                        r.component.to_string(),
                        opt(&r.codim_claim),
                        r.in_table.to_string(),
                        r.realization_note.clone(),
                    ]
                })
                .collect(),
        }
    }
}

pub fn sequences(v: &[VanishingSequence]) -> Vec<Vec<u32>> {
    v.iter().map(|s| s.values().to_vec()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrudeLimitDocument {
    pub passes: bool,
    pub violations: Vec<CrudeLimitViolation>,
    pub excused_index: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimitDocument {
    pub genus: u32,
    pub torsion_order: u32,
    pub alpha_q: Vec<u32>,
    pub c_aspect_at_q: Vec<u32>,
    pub beta: Vec<u32>,
    pub gamma: Vec<u32>,
    pub exceptional_index: Option<usize>,
    pub eh_star: bool,
    pub crude_limit: CrudeLimitDocument,
    pub theta_parity: Parity,
    /// Adjusted Brill–Noether number of the canonical series with
    /// ramification `(0, ..., 0, g-1)` at `p`.
    pub rho: i64,
    pub expected_dimensions: ExpectedDimensions,
}

impl LimitDocument {
    pub fn tabular(&self) -> Tabular {
        let violations: Vec<String> = self
            .crude_limit
            .violations
            .iter()
            .map(ToString::to_string)
            .collect();
        Tabular::fields(vec![
            ("genus", self.genus.to_string()),
            ("torsion_order", self.torsion_order.to_string()),
            ("alpha_q", join(&self.alpha_q)),
            ("c_aspect_at_q", join(&self.c_aspect_at_q)),
            ("beta", join(&self.beta)),
            ("gamma", join(&self.gamma)),
            ("exceptional_index", opt(&self.exceptional_index)),
            ("eh_star", self.eh_star.to_string()),
            ("crude_limit_passes", self.crude_limit.passes.to_string()),
            ("crude_limit_violations", violations.join("; ")),
            ("excused_index", opt(&self.crude_limit.excused_index)),
            ("theta_parity", self.theta_parity.to_string()),
            ("rho", self.rho.to_string()),
            (
                "dim_g_lower",
                self.expected_dimensions.dim_g_lower.to_string(),
            ),
            ("dim_d", self.expected_dimensions.dim_d.to_string()),
            ("dim_b", self.expected_dimensions.dim_b.to_string()),
        ])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhoDocument {
    pub genus: u32,
    pub rank: u32,
    pub degree: u32,
    pub alpha: Vec<u32>,
    pub rho: i64,
}

impl RhoDocument {
    pub fn tabular(&self) -> Tabular {
        Tabular::fields(vec![
            ("genus", self.genus.to_string()),
            ("rank", self.rank.to_string()),
            ("degree", self.degree.to_string()),
            ("alpha", join(&self.alpha)),
            ("rho", self.rho.to_string()),
        ])
    }
}
