//! Limit canonical series on a curve `X = C ∪ E` of compact type.
//!
//! `C` has genus `g-1`, `E` is elliptic, and they meet at a node `q`. A limit
//! `g^{g-1}_{2g-2}` on `X` has a `C`-aspect fixed by `K_C(2q)` and an
//! `E`-aspect whose ramification at `q` (β) and at a marked point `p` (γ)
//! is what this module computes and checks.
//!
//! The Picard group of `E` enters only through the order of the class
//! `p - q`; a relation `b·q + c·p ~ (2g-2)q` on `E` therefore reduces to
//! a degree count plus divisibility of `c` by that order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, ValidationError};
use crate::sequences::{Parity, RamificationSequence};

/// Order of `O_E(p - q)` in `Pic⁰(E)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TorsionClass {
    order: u32,
}

impl TorsionClass {
    pub fn new(order: u32) -> Result<Self> {
        if order == 0 {
            return Err(Error::precondition("torsion order must be positive"));
        }
        Ok(Self { order })
    }

    /// Order `2g-2`, the odd construction.
    pub fn full(genus: u32) -> Result<Self> {
        Self::new((2 * genus).saturating_sub(2))
    }

    /// Order `g-1`, the even construction.
    pub fn half(genus: u32) -> Result<Self> {
        Self::new(genus.saturating_sub(1))
    }

    pub fn order(self) -> u32 {
        self.order
    }

    /// Whether `n·(p - q) ~ 0`.
    pub fn kills(self, n: u32) -> bool {
        n.is_multiple_of(self.order)
    }
}

/// Ramification of one aspect at one point: nondecreasing, starts at or
/// above 0, bounded by `d - r`. Unlike [`RamificationSequence`] its length
/// is `r + 1`, not the genus of the component it lives on.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AspectSequence(Vec<u32>);

impl AspectSequence {
    pub fn new(values: Vec<u32>, bound: u32) -> Result<Self, ValidationError> {
        for (i, w) in values.windows(2).enumerate() {
            if w[1] < w[0] {
                return Err(ValidationError::NotNondecreasing { index: i + 1 });
            }
        }
        if let Some(&value) = values.iter().find(|&&v| v > bound) {
            return Err(ValidationError::AboveBound { value, bound });
        }
        Ok(Self(values))
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Associated vanishing orders `b_j = β_j + j`.
    pub fn vanishing_orders(&self) -> Vec<u32> {
        self.0
            .iter()
            .enumerate()
            .map(|(j, &b)| b + j as u32)
            .collect()
    }
}

impl fmt::Display for AspectSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Both ramification sequences of the `E`-aspect of a `g^r_d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AspectRamification {
    pub rank: u32,
    pub degree: u32,
    pub at_q: AspectSequence,
    pub at_p: AspectSequence,
}

/// A nodal curve `C ∪_q E` with `q` subcanonical on `C` and a marked
/// point `p ∈ E`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitSeriesProblem {
    genus: u32,
    alpha_q: RamificationSequence,
    torsion: TorsionClass,
}

impl LimitSeriesProblem {
    pub fn new(genus: u32, alpha_q: RamificationSequence, torsion: TorsionClass) -> Result<Self> {
        if genus < 3 {
            return Err(Error::precondition(format!(
                "total genus must be at least 3, got {genus}"
            )));
        }
        if alpha_q.genus() != genus - 1 {
            return Err(Error::precondition(format!(
                "ramification at the node must have genus g-1 = {}, got {}",
                genus - 1,
                alpha_q.genus()
            )));
        }
        if !alpha_q.is_subcanonical() {
            return Err(Error::precondition(format!(
                "q must be subcanonical on C: last entry of ({alpha_q}) must be g-2 = {}",
                genus - 2
            )));
        }
        Ok(Self {
            genus,
            alpha_q,
            torsion,
        })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn alpha_q(&self) -> &RamificationSequence {
        &self.alpha_q
    }

    pub fn torsion(&self) -> TorsionClass {
        self.torsion
    }

    /// The `E`-aspect ramification produced by the constructive half of the
    /// compatibility conditions on the two aspects.
    pub fn aspect(&self) -> Result<AspectRamification> {
        Ok(AspectRamification {
            rank: self.genus - 1,
            degree: 2 * self.genus - 2,
            at_q: beta_at_node(self),
            at_p: gamma_at_marked_point(self)?.gamma,
        })
    }
}

/// Ramification of the `C`-aspect `K_C(2q)` at `q`:
/// `0, α_0 + 1, ..., α_{g-2} + 1` from the genus-`(g-1)` sequence `α`.
pub fn c_aspect_ramification(alpha: &RamificationSequence) -> AspectSequence {
    let values = std::iter::once(0)
        .chain(alpha.values().iter().map(|a| a + 1))
        .collect();
    AspectSequence(values)
}

/// `β_0 = 0`, `β_j = g-2-α_{g-2-j}` for `1 <= j <= g-2`, `β_{g-1} = g-1`:
/// complementary to the `C`-aspect so that the refined limit condition holds.
pub fn beta_at_node(problem: &LimitSeriesProblem) -> AspectSequence {
    let g = problem.genus as usize;
    let alpha = problem.alpha_q.values();
    let mut beta = Vec::with_capacity(g);
    beta.push(0);
    for j in 1..=g - 2 {
        beta.push((g - 2) as u32 - alpha[g - 2 - j]);
    }
    beta.push((g - 1) as u32);
    AspectSequence(beta)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaConstruction {
    pub gamma: AspectSequence,
    /// Index `i` into `α` where `γ_{i+1} = α_i + 1` instead of `α_i`.
    pub exceptional_index: Option<usize>,
}

/// Ramification at `p` of the unique refined limit with
/// `γ >= (0, α_0, ..., α_{g-3}, g-1)`.
///
/// `γ_{i+1} = α_i`, except when `p - q` has order `g-1`, `α_i = g-3-i` and
/// either `i = g-3` or `α_{i+1} > α_i`; then `γ_{i+1} = α_i + 1`. At most one
/// `i` qualifies since `α` is nondecreasing while `g-3-i` strictly decreases.
pub fn gamma_at_marked_point(problem: &LimitSeriesProblem) -> Result<GammaConstruction> {
    let g = problem.genus;
    let order = problem.torsion.order();
    let full = 2 * g - 2;
    let half = g - 1;
    if order != full && order != half {
        return Err(Error::precondition(format!(
            "torsion order must be 2g-2 = {full} or g-1 = {half}, got {order}"
        )));
    }
    let alpha = problem.alpha_q.values();
    let last = (g - 3) as usize;

    let mut exceptional = None;
    if order == half {
        let candidates: Vec<usize> = (0..=last)
            .filter(|&i| alpha[i] as usize + i == last && (i == last || alpha[i + 1] > alpha[i]))
            .collect();
        if candidates.len() > 1 {
            return Err(Error::invariant(format!(
                "several exceptional indices {candidates:?} for α = ({})",
                problem.alpha_q
            )));
        }
        exceptional = candidates.first().copied();
    }

    let mut gamma = Vec::with_capacity(g as usize);
    gamma.push(0);
    for (i, &a) in alpha[..=last].iter().enumerate() {
        gamma.push(if exceptional == Some(i) { a + 1 } else { a });
    }
    gamma.push(g - 1);
    let gamma = AspectSequence::new(gamma, g - 1).map_err(|e| {
        Error::invariant(format!("constructed γ is not a ramification sequence: {e}"))
    })?;
    Ok(GammaConstruction {
        gamma,
        exceptional_index: exceptional,
    })
}

/// A necessary condition for a crude limit with a subcanonical point on `E`
/// that fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum CrudeLimitViolation {
    /// `p - q` is not `(2g-2)`-torsion.
    TorsionOrder {
        order: u32,
        required_divisor_of: u32,
    },
    /// `q` is not subcanonical on `C`.
    NodeNotSubcanonical,
    /// `γ_0 != 0`.
    GammaStart { found: u32 },
    /// `α_{i-1} < γ_i` where the inequality is required.
    Inequality {
        index: usize,
        alpha: u32,
        gamma: u32,
    },
}

impl fmt::Display for CrudeLimitViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CrudeLimitViolation::TorsionOrder {
                order,
                required_divisor_of,
            } => write!(
                f,
                "torsion order {order} does not divide {required_divisor_of}"
            ),
            CrudeLimitViolation::NodeNotSubcanonical => {
                f.write_str("node is not a subcanonical point of C")
            }
            CrudeLimitViolation::GammaStart { found } => {
                write!(f, "ramification at p must start at 0, found {found}")
            }
            CrudeLimitViolation::Inequality {
                index,
                alpha,
                gamma,
            } => write!(f, "α_{} = {alpha} < γ_{index} = {gamma}", index - 1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CrudeLimitVerdict {
    pub violations: Vec<CrudeLimitViolation>,
    /// For torsion order `g-1`: the index `i` whose failed inequality is
    /// allowed because `c_i = g-1` and `α_{i-1} = γ_i - 1`.
    pub excused_index: Option<usize>,
}

impl CrudeLimitVerdict {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every necessary condition a crude limit `g^{g-1}_{2g-2}` on
/// `C ∪ E` satisfies when `E` carries a point `p` with `γ_{g-1} = g-1`.
pub fn check_crude_limit(
    genus: u32,
    gamma_p: &AspectSequence,
    torsion: TorsionClass,
    alpha_q: &RamificationSequence,
) -> Result<CrudeLimitVerdict> {
    if genus < 3 {
        return Err(Error::precondition(format!(
            "total genus must be at least 3, got {genus}"
        )));
    }
    let g = genus as usize;
    if gamma_p.len() != g {
        return Err(ValidationError::WrongLength {
            expected: g,
            found: gamma_p.len(),
        }
        .into());
    }
    if gamma_p.values()[g - 1] != genus - 1 {
        return Err(Error::precondition(format!(
            "last entry of γ must be g-1 = {}, got {}",
            genus - 1,
            gamma_p.values()[g - 1]
        )));
    }
    if alpha_q.genus() != genus - 1 {
        return Err(ValidationError::WrongLength {
            expected: g - 1,
            found: alpha_q.values().len(),
        }
        .into());
    }

    let mut verdict = CrudeLimitVerdict::default();
    let full = 2 * genus - 2;
    let order = torsion.order();
    if !torsion.kills(full) {
        verdict.violations.push(CrudeLimitViolation::TorsionOrder {
            order,
            required_divisor_of: full,
        });
    }
    if !alpha_q.is_subcanonical() {
        verdict
            .violations
            .push(CrudeLimitViolation::NodeNotSubcanonical);
    }
    let gamma = gamma_p.values();
    if gamma[0] != 0 {
        verdict
            .violations
            .push(CrudeLimitViolation::GammaStart { found: gamma[0] });
    }

    if order == full || order == genus - 1 {
        let alpha = alpha_q.values();
        for i in 1..=g - 2 {
            if alpha[i - 1] >= gamma[i] {
                continue;
            }
            let excusable = order == genus - 1
                && verdict.excused_index.is_none()
                && gamma[i] + i as u32 == genus - 1
                && alpha[i - 1] + 1 == gamma[i];
            if excusable {
                verdict.excused_index = Some(i);
            } else {
                verdict.violations.push(CrudeLimitViolation::Inequality {
                    index: i,
                    alpha: alpha[i - 1],
                    gamma: gamma[i],
                });
            }
        }
    }
    Ok(verdict)
}

/// `g - 1 >= β_{g-1-j} + γ_j >= g - 2` for all `j`.
pub fn eh_star(beta: &AspectSequence, gamma: &AspectSequence, genus: u32) -> Result<bool> {
    let g = genus as usize;
    for s in [beta, gamma] {
        if s.len() != g {
            return Err(ValidationError::WrongLength {
                expected: g,
                found: s.len(),
            }
            .into());
        }
    }
    if genus < 2 {
        return Ok(true);
    }
    let (b, c) = (beta.values(), gamma.values());
    Ok((0..g).all(|j| {
        let sum = b[g - 1 - j] + c[j];
        sum + 2 >= genus && sum < genus
    }))
}

/// Whether `b·q + c·p ~ (2g-2)q` on `E`.
pub fn divisor_relation_holds(b: u32, c: u32, genus: u32, torsion: TorsionClass) -> bool {
    u64::from(b) + u64::from(c) == 2 * u64::from(genus) - 2 && torsion.kills(c)
}

/// Adjusted Brill–Noether number `(r+1)(d-r) - r·g - Σα`.
pub fn rho_adjusted(genus: u32, rank: u32, degree: u32, alpha: &[u32]) -> Result<i64> {
    if alpha.len() != rank as usize + 1 {
        return Err(ValidationError::WrongLength {
            expected: rank as usize + 1,
            found: alpha.len(),
        }
        .into());
    }
    let (g, r, d) = (i64::from(genus), i64::from(rank), i64::from(degree));
    let imposed: i64 = alpha.iter().map(|&a| i64::from(a)).sum();
    Ok((r + 1) * (d - r) - r * g - imposed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedDimensions {
    /// Lower bound for every component of the relative limit-series scheme.
    pub dim_g_lower: i64,
    /// Locus of nodal curves with `q` subcanonical on `C` and `p - q` torsion.
    pub dim_d: i64,
    /// Miniversal deformation space of the pointed nodal curve.
    pub dim_b: i64,
}

/// Dimension counts behind the smoothing argument for the odd construction.
pub fn expected_dimensions(genus: u32) -> Result<ExpectedDimensions> {
    if genus < 3 {
        return Err(Error::precondition(format!(
            "dimension counts need g >= 3, got {genus}"
        )));
    }
    let g = i64::from(genus);
    let dim_b = 3 * g - 2;
    let mut imposed = vec![0; genus as usize];
    imposed[genus as usize - 1] = genus - 1;
    let rho = rho_adjusted(genus, genus - 1, 2 * genus - 2, &imposed)?;
    // pointed genus-(g-1) curves with q subcanonical, plus an elliptic curve
    // with a marked torsion point
    let subcanonical_locus = (3 * (g - 1) - 2) - ((g - 1) - 1);
    Ok(ExpectedDimensions {
        dim_g_lower: dim_b + rho,
        dim_d: subcanonical_locus + 1,
        dim_b,
    })
}

/// Parity of a theta characteristic on a compact-type curve: the sum of the
/// parities on its components.
pub fn combine_theta_parity(parities: &[Parity]) -> Result<Parity> {
    if parities.is_empty() {
        return Err(Error::precondition("need at least one parity"));
    }
    let odd = parities.iter().filter(|&&p| p == Parity::Odd).count();
    Ok(Parity::of(odd as u32))
}

/// Parity of the degree-0 theta characteristic `O_E((g-1)(p-q))` on `E`:
/// odd (it has a section) exactly when the class is trivial.
pub fn elliptic_theta_parity(genus: u32, torsion: TorsionClass) -> Parity {
    if torsion.kills(genus.saturating_sub(1)) {
        Parity::Odd
    } else {
        Parity::Even
    }
}

/// Parity of the theta characteristic `O((g-1)p)` on nearby smooth curves,
/// from `O_C((g-2)q)` on `C` and `O_E((g-1)(p-q))` on `E`.
pub fn limit_theta_parity(problem: &LimitSeriesProblem) -> Result<Parity> {
    let on_c = problem.alpha_q.vanishing().parity()?;
    let on_e = elliptic_theta_parity(problem.genus, problem.torsion);
    combine_theta_parity(&[on_c, on_e])
}
