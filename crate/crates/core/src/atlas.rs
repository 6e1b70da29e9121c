//! Enumeration of candidate gap sequences for subcanonical points.
//!
//! A subcanonical point of genus `g` has `2g-1` as a gap, so its non-gaps
//! form a symmetric numerical semigroup: for each pair `{x, 2g-1-x}` exactly
//! one is a gap. The enumerator decides membership of `2..=g-1` depth-first,
//! fixes each mirror `2g-1-x` at the same time, and prunes as soon as a sum
//! of two decided members lands on a decided gap.

use std::collections::HashSet;
use std::fmt;
use std::path::Path;

use rayon::prelude::*;
use serde::Deserialize;

use crate::covers::NamedConstruction;
use crate::error::{Error, Result};
use crate::sequences::{Component, GapSet, Parity, RamificationSequence, VanishingSequence};

pub const MIN_ENUMERATION_GENUS: u32 = 2;
pub const MAX_ENUMERATION_GENUS: u32 = 25;
pub const MAX_TABLE_GENUS: u32 = 6;

/// Decisions made sequentially before the search fans out across threads.
const SPLIT_DEPTH: usize = 6;

const BUILTIN_TABLE: &str = include_str!("../data/low_genus_table.tsv");

#[derive(Clone, Copy, PartialEq, Eq)]
enum Slot {
    Open,
    Member,
    Gap,
}

#[derive(Clone)]
struct PartialSemigroup {
    genus: usize,
    slots: Vec<Slot>,
}

impl PartialSemigroup {
    fn new(genus: usize) -> Self {
        let top = 2 * genus - 1;
        let mut s = Self {
            genus,
            slots: vec![Slot::Open; top + 1],
        };
        s.slots[0] = Slot::Member;
        s.slots[top] = Slot::Gap;
        s
    }

    fn top(&self) -> usize {
        2 * self.genus - 1
    }

    /// Sets `x` and its mirror; false if that breaks additive closure among
    /// the decided elements.
    fn decide(&mut self, x: usize, member: bool) -> bool {
        let mirror = self.top() - x;
        let (a, b) = if member {
            (Slot::Member, Slot::Gap)
        } else {
            (Slot::Gap, Slot::Member)
        };
        self.slots[x] = a;
        self.slots[mirror] = b;
        self.consistent_at(x) && self.consistent_at(mirror)
    }

    fn undo(&mut self, x: usize) {
        let mirror = self.top() - x;
        self.slots[x] = Slot::Open;
        self.slots[mirror] = Slot::Open;
    }

    fn consistent_at(&self, n: usize) -> bool {
        let top = self.top();
        match self.slots[n] {
            Slot::Member if n > 0 => (1..=top - n)
                .all(|y| !(self.slots[y] == Slot::Member && self.slots[n + y] == Slot::Gap)),
            Slot::Gap => (1..=n / 2)
                .all(|a| !(self.slots[a] == Slot::Member && self.slots[n - a] == Slot::Member)),
            _ => true,
        }
    }

    fn gaps(&self) -> Vec<u32> {
        (1..=self.top())
            .filter(|&n| self.slots[n] == Slot::Gap)
            .map(|n| n as u32)
            .collect()
    }
}

/// Depth-first search over the free decisions `x = from..=g-1`.
fn search(state: &mut PartialSemigroup, x: usize, out: &mut Vec<Vec<u32>>) {
    if x >= state.genus {
        out.push(state.gaps());
        return;
    }
    for member in [true, false] {
        if state.decide(x, member) {
            search(state, x + 1, out);
        }
        state.undo(x);
    }
}

/// Partial states after deciding `2..stop`, in search order.
fn prefixes(state: &mut PartialSemigroup, x: usize, stop: usize, out: &mut Vec<PartialSemigroup>) {
    if x >= stop {
        out.push(state.clone());
        return;
    }
    for member in [true, false] {
        if state.decide(x, member) {
            prefixes(state, x + 1, stop, out);
        }
        state.undo(x);
    }
}

fn root(genus: u32) -> Option<PartialSemigroup> {
    let mut state = PartialSemigroup::new(genus as usize);
    // 1 is always a gap
    if genus >= 2 && !state.decide(1, false) {
        return None;
    }
    Some(state)
}

fn check_enumeration_genus(genus: u32) -> Result<()> {
    if !(MIN_ENUMERATION_GENUS..=MAX_ENUMERATION_GENUS).contains(&genus) {
        return Err(Error::precondition(format!(
            "enumeration genus must be in {MIN_ENUMERATION_GENUS}..={MAX_ENUMERATION_GENUS}, got {genus}"
        )));
    }
    Ok(())
}

fn into_sorted_sequences(gap_lists: Vec<Vec<u32>>) -> Result<Vec<VanishingSequence>> {
    let mut out = gap_lists
        .into_iter()
        .map(|gaps| {
            GapSet::new(gaps)
                .map(|s| s.vanishing())
                .map_err(|e| Error::invariant(format!("enumerator produced a bad gap set: {e}")))
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// Vanishing sequences whose gap sets are symmetric numerical semigroups of
/// genus `g`, i.e. every gap sequence a subcanonical point could have,
/// sorted lexicographically.
pub fn enumerate_candidates(genus: u32) -> Result<Vec<VanishingSequence>> {
    check_enumeration_genus(genus)?;
    let Some(mut state) = root(genus) else {
        return Ok(Vec::new());
    };
    let stop = (2 + SPLIT_DEPTH).min(genus as usize);
    let mut starts = Vec::new();
    prefixes(&mut state, 2, stop, &mut starts);
    let found: Vec<Vec<u32>> = starts
        .into_par_iter()
        .flat_map_iter(|mut s| {
            let mut out = Vec::new();
            search(&mut s, stop, &mut out);
            out
        })
        .collect();
    into_sorted_sequences(found)
}

/// Single-threaded variant of [`enumerate_candidates`].
pub fn enumerate_candidates_sequential(genus: u32) -> Result<Vec<VanishingSequence>> {
    check_enumeration_genus(genus)?;
    let Some(mut state) = root(genus) else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    search(&mut state, 2, &mut out);
    into_sorted_sequences(out)
}

/// One row of the stored low-genus table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StoredRow {
    pub genus: u32,
    pub vanishing: VanishingSequence,
    pub parity: Parity,
    pub weight: u32,
    pub codim: Option<u32>,
    pub realization: String,
    pub provenance: String,
}

#[derive(Deserialize)]
struct RawRow {
    genus: u32,
    vanishing: String,
    parity: String,
    weight: u32,
    codim: String,
    realization: String,
    provenance: String,
}

/// Known ramification sequences of subcanonical points in low genus, with
/// their parity, weight and stratum codimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StoredTable {
    rows: Vec<StoredRow>,
}

pub fn parse_int_list(text: &str) -> std::result::Result<Vec<u32>, String> {
    let text = text.trim();
    if text.is_empty() || text == "none" {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<u32>()
                .map_err(|e| format!("{part:?} is not a nonnegative integer ({e})"))
        })
        .collect()
}

impl StoredTable {
    /// The table shipped with the crate.
    pub fn builtin() -> Self {
        Self::parse(BUILTIN_TABLE).expect("built-in table is well formed")
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::TableParse {
            record: 0,
            reason: format!("cannot read {}: {e}", path.display()),
        })?;
        Self::parse(&text)
    }

    /// Tab-separated, `#` comments, header row naming the columns
    /// `genus vanishing parity weight codim realization provenance`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .delimiter(b'\t')
            .comment(Some(b'#'))
            .trim(csv::Trim::All)
            .from_reader(text.as_bytes());
        let mut rows = Vec::new();
        for (i, record) in reader.deserialize::<RawRow>().enumerate() {
            let record_no = i + 1;
            let bad = |reason: String| Error::TableParse {
                record: record_no,
                reason,
            };
            let raw = record.map_err(|e| bad(e.to_string()))?;
            let values = parse_int_list(&raw.vanishing).map_err(bad)?;
            let vanishing = VanishingSequence::new(raw.genus, values)
                .map_err(|e| bad(format!("vanishing sequence: {e}")))?;
            let parity = raw.parity.parse::<Parity>().map_err(bad)?;
            let codim = match raw.codim.as_str() {
                "" | "-" => None,
                s => Some(
                    s.parse::<u32>()
                        .map_err(|e| bad(format!("codim {s:?}: {e}")))?,
                ),
            };
            rows.push(StoredRow {
                genus: raw.genus,
                vanishing,
                parity,
                weight: raw.weight,
                codim,
                realization: raw.realization,
                provenance: raw.provenance,
            });
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[StoredRow] {
        &self.rows
    }

    pub fn rows_for(&self, genus: u32) -> impl Iterator<Item = &StoredRow> {
        self.rows.iter().filter(move |r| r.genus == genus)
    }

    pub fn find(&self, vanishing: &VanishingSequence) -> Option<&StoredRow> {
        self.rows.iter().find(|r| &r.vanishing == vanishing)
    }
}

impl Default for StoredTable {
    fn default() -> Self {
        Self::builtin()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtlasRow {
    pub genus: u32,
    pub vanishing: VanishingSequence,
    pub ramification: RamificationSequence,
    pub parity: Parity,
    pub weight: u32,
    /// Stored codimension of the stratum; never computed.
    pub codim_claim: Option<u32>,
    pub in_table: bool,
    pub realization_note: String,
}

impl AtlasRow {
    fn build(
        vanishing: VanishingSequence,
        stored: Option<&StoredRow>,
        note: String,
    ) -> Result<Self> {
        let ramification = vanishing.ramification();
        Ok(Self {
            genus: vanishing.genus(),
            parity: vanishing.parity()?,
            weight: ramification.weight(),
            codim_claim: stored.and_then(|r| r.codim),
            in_table: stored.is_some(),
            realization_note: note,
            ramification,
            vanishing,
        })
    }
}

/// Cover constructions valid at `g`, with the sequence each produces.
pub fn cover_realizations(genus: u32) -> Result<Vec<(NamedConstruction, VanishingSequence)>> {
    NamedConstruction::ALL
        .into_iter()
        .filter(|c| c.applies_to(genus))
        .map(|c| c.build(genus).map(|r| (c, r.vanishing)))
        .collect()
}

fn realization_note(
    vanishing: &VanishingSequence,
    stored: Option<&StoredRow>,
    covers: &[(NamedConstruction, VanishingSequence)],
) -> String {
    if let Some(row) = stored {
        return row.realization.clone();
    }
    let names: Vec<String> = covers
        .iter()
        .filter(|(_, v)| v == vanishing)
        .map(|(c, _)| format!("{c} cover"))
        .collect();
    names.join("; ")
}

/// Recomputes a stored row's derived columns.
fn check_stored_row(row: &StoredRow) -> Result<()> {
    let parity = row.vanishing.parity().map_err(|_| {
        Error::DataIntegrity(format!(
            "genus {} row ({}) is not subcanonical",
            row.genus, row.vanishing
        ))
    })?;
    if parity != row.parity {
        return Err(Error::DataIntegrity(format!(
            "genus {} row ({}): stored parity {} but recomputed {}",
            row.genus, row.vanishing, row.parity, parity
        )));
    }
    let weight = row.vanishing.ramification().weight();
    if weight != row.weight {
        return Err(Error::DataIntegrity(format!(
            "genus {} row ({}): stored weight {} but recomputed {}",
            row.genus, row.vanishing, row.weight, weight
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationReport {
    pub genus: u32,
    /// Every enumerated candidate, sorted by vanishing sequence.
    pub rows: Vec<AtlasRow>,
    /// Candidates that the table does not list.
    pub extras: Vec<AtlasRow>,
    /// Table rows the enumeration did not produce.
    pub missing: Vec<StoredRow>,
}

/// Joins the enumeration at genus `g <= 6` against the stored table.
pub fn verify_known_table(genus: u32, table: &StoredTable) -> Result<EnumerationReport> {
    if !(MIN_ENUMERATION_GENUS..=MAX_TABLE_GENUS).contains(&genus) {
        return Err(Error::precondition(format!(
            "the stored table covers genus {MIN_ENUMERATION_GENUS}..={MAX_TABLE_GENUS}, got {genus}"
        )));
    }
    for row in table.rows_for(genus) {
        check_stored_row(row)?;
    }
    atlas_rows(genus, table).map(|rows| {
        let found: HashSet<&VanishingSequence> = rows.iter().map(|r| &r.vanishing).collect();
        let missing = table
            .rows_for(genus)
            .filter(|r| !found.contains(&r.vanishing))
            .cloned()
            .collect();
        let extras = rows.iter().filter(|r| !r.in_table).cloned().collect();
        EnumerationReport {
            genus,
            rows,
            extras,
            missing,
        }
    })
}

/// Every candidate at genus `g` with parity, weight, table data and any
/// construction realizing it.
pub fn atlas_rows(genus: u32, table: &StoredTable) -> Result<Vec<AtlasRow>> {
    let covers = cover_realizations(genus)?;
    enumerate_candidates(genus)?
        .into_iter()
        .map(|v| {
            let stored = table.find(&v);
            let note = realization_note(&v, stored, &covers);
            AtlasRow::build(v, stored, note)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumSummary {
    pub vanishing: VanishingSequence,
    pub ramification: RamificationSequence,
    pub weight: u32,
    /// A stratum has codimension at most the weight of its sequence.
    pub codim_upper_bound: u32,
    pub component: Component,
    /// Dimension of the ambient component of the subcanonical locus (`2g-1`).
    pub component_dim: Option<u32>,
    /// Its codimension in the moduli of pointed curves (`g-1`).
    pub component_codim: Option<u32>,
    pub table_codim: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratificationReport {
    pub genus: u32,
    /// `3g-2`.
    pub moduli_dim: u32,
    pub strata: Vec<StratumSummary>,
}

pub fn stratification_report(genus: u32, table: &StoredTable) -> Result<StratificationReport> {
    let strata = enumerate_candidates(genus)?
        .into_iter()
        .map(|v| {
            let ramification = v.ramification();
            let weight = ramification.weight();
            let component = v.classify_component()?;
            let classified = component != Component::Unclassified;
            Ok(StratumSummary {
                weight,
                codim_upper_bound: weight,
                component,
                component_dim: classified.then_some(2 * genus - 1),
                component_codim: classified.then_some((3 * genus - 2) - (2 * genus - 1)),
                table_codim: table.find(&v).and_then(|r| r.codim),
                ramification,
                vanishing: v,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(StratificationReport {
        genus,
        moduli_dim: 3 * genus - 2,
        strata,
    })
}

impl fmt::Display for StoredRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "g={} a=({}) {} w={}",
            self.genus, self.vanishing, self.parity, self.weight
        )
    }
}
