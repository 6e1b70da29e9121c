//! Vanishing, ramification and gap encodings of a point's canonical-series data.
//!
//! A point on a genus-`g` curve has vanishing sequence `a_0 < ... < a_{g-1}`
//! (orders of vanishing of holomorphic differentials), ramification sequence
//! `alpha_k = a_k - k` and Weierstrass gap set `{a_k + 1}`. The three are
//! interchangeable; every type carries its genus and validates on
//! construction, so the conversions below are total.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, ValidationError};

/// Genera above this are rejected so that `2g` arithmetic never overflows.
pub const MAX_GENUS: u32 = 1 << 20;

fn check_genus(genus: u32) -> Result<(), ValidationError> {
    if genus > MAX_GENUS {
        return Err(ValidationError::GenusTooLarge(genus));
    }
    Ok(())
}

fn check_len(genus: u32, found: usize) -> Result<(), ValidationError> {
    if found != genus as usize {
        return Err(ValidationError::WrongLength {
            expected: genus as usize,
            found,
        });
    }
    Ok(())
}

fn fmt_list(f: &mut fmt::Formatter<'_>, values: &[u32]) -> fmt::Result {
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// Orders of vanishing of the holomorphic differentials at a point.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VanishingSequence {
    genus: u32,
    values: Vec<u32>,
}

impl VanishingSequence {
    /// Genus 0 is accepted with an empty sequence; it stands for a point on P¹.
    pub fn new(genus: u32, values: Vec<u32>) -> Result<Self, ValidationError> {
        check_genus(genus)?;
        check_len(genus, values.len())?;
        if let Some(&first) = values.first() {
            if first != 0 {
                return Err(ValidationError::FirstNotZero { found: first });
            }
        }
        for (i, w) in values.windows(2).enumerate() {
            if w[1] <= w[0] {
                return Err(ValidationError::NotStrictlyIncreasing { index: i + 1 });
            }
        }
        if let Some(&last) = values.last() {
            let bound = 2 * genus - 2;
            if last > bound {
                return Err(ValidationError::AboveBound { value: last, bound });
            }
        }
        Ok(Self { genus, values })
    }

    /// The vanishing sequence `0, 1, ..., g-1` of a general point.
    pub fn generic(genus: u32) -> Result<Self, ValidationError> {
        Self::new(genus, (0..genus).collect())
    }

    /// `0, 2, ..., 2g-2`, the maximal sequence (hyperelliptic Weierstrass point).
    pub fn hyperelliptic(genus: u32) -> Result<Self, ValidationError> {
        Self::new(genus, (0..genus).map(|k| 2 * k).collect())
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn contains(&self, order: u32) -> bool {
        self.values.binary_search(&order).is_ok()
    }

    pub fn ramification(&self) -> RamificationSequence {
        RamificationSequence {
            genus: self.genus,
            values: self
                .values
                .iter()
                .enumerate()
                .map(|(k, &a)| a - k as u32)
                .collect(),
        }
    }

    pub fn gaps(&self) -> GapSet {
        GapSet {
            genus: self.genus,
            gaps: self.values.iter().map(|a| a + 1).collect(),
        }
    }

    /// A point is subcanonical iff some differential vanishes to order `2g-2`
    /// there, i.e. iff `2g-1` is a gap.
    pub fn is_subcanonical(&self) -> bool {
        self.genus >= 1 && self.values.last() == Some(&(2 * self.genus - 2))
    }

    /// `h⁰((g-1)p)`: the number of vanishing orders that are at least `g-1`.
    pub fn theta_h0(&self) -> Result<u32> {
        self.require_subcanonical()?;
        let threshold = self.genus - 1;
        Ok(self.values.iter().filter(|&&a| a >= threshold).count() as u32)
    }

    pub fn parity(&self) -> Result<Parity> {
        self.theta_h0().map(Parity::of)
    }

    pub fn classify_component(&self) -> Result<Component> {
        let parity = self.parity()?;
        if self.genus < 4 {
            return Ok(Component::Unclassified);
        }
        if self
            .values
            .iter()
            .enumerate()
            .all(|(k, &a)| a == 2 * k as u32)
        {
            return Ok(Component::Hyperelliptic);
        }
        Ok(match parity {
            Parity::Odd => Component::Odd,
            Parity::Even => Component::Even,
        })
    }

    fn require_subcanonical(&self) -> Result<()> {
        if !self.is_subcanonical() {
            return Err(Error::precondition(format!(
                "vanishing sequence ({self}) is not subcanonical: last entry must be {}",
                (2 * self.genus).saturating_sub(2)
            )));
        }
        Ok(())
    }
}

impl fmt::Display for VanishingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_list(f, &self.values)
    }
}

/// `alpha_k = a_k - k`; nondecreasing, bounded by `g-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RamificationSequence {
    genus: u32,
    values: Vec<u32>,
}

impl RamificationSequence {
    pub fn new(genus: u32, values: Vec<u32>) -> Result<Self, ValidationError> {
        check_genus(genus)?;
        check_len(genus, values.len())?;
        if let Some(&first) = values.first() {
            if first != 0 {
                return Err(ValidationError::FirstNotZero { found: first });
            }
        }
        for (i, w) in values.windows(2).enumerate() {
            if w[1] < w[0] {
                return Err(ValidationError::NotNondecreasing { index: i + 1 });
            }
        }
        if let Some(&last) = values.last() {
            let bound = genus - 1;
            if last > bound {
                return Err(ValidationError::AboveBound { value: last, bound });
            }
        }
        Ok(Self { genus, values })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn vanishing(&self) -> VanishingSequence {
        VanishingSequence {
            genus: self.genus,
            values: self
                .values
                .iter()
                .enumerate()
                .map(|(k, &alpha)| alpha + k as u32)
                .collect(),
        }
    }

    /// Weierstrass weight `w(alpha) = sum of alpha_k`.
    pub fn weight(&self) -> u32 {
        self.values.iter().sum()
    }

    pub fn is_subcanonical(&self) -> bool {
        self.genus >= 1 && self.values.last() == Some(&(self.genus - 1))
    }
}

impl fmt::Display for RamificationSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_list(f, &self.values)
    }
}

/// Weierstrass gaps at a point, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GapSet {
    genus: u32,
    gaps: Vec<u32>,
}

impl GapSet {
    /// Genus is the number of gaps. Duplicates are rejected rather than merged.
    pub fn new(gaps: impl IntoIterator<Item = u32>) -> Result<Self, ValidationError> {
        let mut seen = BTreeSet::new();
        for gap in gaps {
            if gap == 0 {
                return Err(ValidationError::ZeroGap);
            }
            if !seen.insert(gap) {
                return Err(ValidationError::DuplicateGap(gap));
            }
        }
        let genus = u32::try_from(seen.len()).unwrap_or(u32::MAX);
        check_genus(genus)?;
        if genus > 0 && !seen.contains(&1) {
            return Err(ValidationError::MissingGapOne);
        }
        if let Some(&max) = seen.last() {
            let bound = 2 * genus - 1;
            if max > bound {
                return Err(ValidationError::AboveBound { value: max, bound });
            }
        }
        Ok(Self {
            genus,
            gaps: seen.into_iter().collect(),
        })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    pub fn contains(&self, n: u32) -> bool {
        self.gaps.binary_search(&n).is_ok()
    }

    pub fn vanishing(&self) -> VanishingSequence {
        VanishingSequence {
            genus: self.genus,
            values: self.gaps.iter().map(|s| s - 1).collect(),
        }
    }
}

impl fmt::Display for GapSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_list(f, &self.gaps)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of(n: u32) -> Self {
        if n % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Parity {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim() {
            "odd" => Ok(Parity::Odd),
            "even" => Ok(Parity::Even),
            other => Err(format!("unknown parity {other:?}")),
        }
    }
}

/// Component of the locus of subcanonical points (three components for `g >= 4`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Component {
    Hyperelliptic,
    Odd,
    Even,
    Unclassified,
}

impl Component {
    pub fn as_str(self) -> &'static str {
        match self {
            Component::Hyperelliptic => "hyperelliptic",
            Component::Odd => "odd",
            Component::Even => "even",
            Component::Unclassified => "unclassified",
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// All discrete invariants of a point, derived from its vanishing sequence.
///
/// Theta data only exists for subcanonical points; for other points
/// `theta_h0`, `parity` and `component` are `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointProfile {
    pub genus: u32,
    pub vanishing: VanishingSequence,
    pub ramification: RamificationSequence,
    pub gaps: GapSet,
    pub weight: u32,
    pub theta_h0: Option<u32>,
    pub parity: Option<Parity>,
    pub subcanonical: bool,
    pub component: Option<Component>,
}

impl PointProfile {
    pub fn new(vanishing: VanishingSequence) -> Self {
        let ramification = vanishing.ramification();
        let gaps = vanishing.gaps();
        let subcanonical = vanishing.is_subcanonical();
        let (theta_h0, parity, component) = if subcanonical {
            (
                vanishing.theta_h0().ok(),
                vanishing.parity().ok(),
                vanishing.classify_component().ok(),
            )
        } else {
            (None, None, None)
        };
        Self {
            genus: vanishing.genus(),
            weight: ramification.weight(),
            vanishing,
            ramification,
            gaps,
            theta_h0,
            parity,
            subcanonical,
            component,
        }
    }
}

impl From<VanishingSequence> for PointProfile {
    fn from(v: VanishingSequence) -> Self {
        PointProfile::new(v)
    }
}
