//! Subcanonical points arising as totally ramified points of cyclic covers.
//!
//! Let `π: C → B` be a `d`-sheeted cyclic cover of a genus-`h` curve, totally
//! ramified at `p` over `q`. The pushforward of `K_C(-np)` splits into `d`
//! line bundles on `B`, and each residue class of `n` mod `d` is governed by
//! exactly one summand. That turns the vanishing sequence at `p` into a rule
//! on the vanishing sequence of `K_B` at `q`:
//!
//! * double covers (`d = 2`, any `q`, `g >= 3h`):
//!   `2m+1` is a vanishing order iff `m` is one at `q`, and
//!   `2m` is one iff `0 <= m <= g-1` and `g-2-m` is not one at `q`;
//! * `d`-cyclic covers with `q` subcanonical on `B` and `deg L = ℓ`:
//!   `dm+i` is a vanishing order iff `m <= (d-1-i)ℓ - 2` or
//!   `m - (d-1-i)ℓ` is one at `q`.
//!
//! The existence of the branch divisor needs a base-point-free linear system
//! on `B` (guaranteed once there are at least `2h+1` branch points); that is
//! a geometric condition and is not checked here. The bounds `g >= 3h` and
//! `ℓ >= (2h+1)/d` are.

use std::fmt;

use crate::error::{Error, Result};
use crate::sequences::{PointProfile, VanishingSequence, MAX_GENUS};

/// Genus of a `d`-sheeted cover of a genus-`h` curve branched over `deg_d`
/// points with total ramification: `2g-2 = d(2h-2) + (d-1) deg D`.
pub fn rh_genus(sheets: u32, base_genus: u32, branch_degree: u32) -> Result<u32> {
    if sheets < 2 {
        return Err(Error::precondition(format!(
            "a cover needs at least 2 sheets, got {sheets}"
        )));
    }
    if !branch_degree.is_multiple_of(sheets) {
        return Err(Error::precondition(format!(
            "branch degree {branch_degree} is not divisible by the number of sheets {sheets}"
        )));
    }
    let d = i64::from(sheets);
    let rhs = d * (2 * i64::from(base_genus) - 2) + (d - 1) * i64::from(branch_degree);
    if rhs % 2 != 0 {
        return Err(Error::precondition(format!(
            "2g-2 = {rhs} is odd; no integral genus"
        )));
    }
    let genus = rhs / 2 + 1;
    u32::try_from(genus)
        .map_err(|_| Error::precondition(format!("the formula gives negative genus {genus}")))
}

/// Data of a cyclic cover with a totally ramified marked point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverSpec {
    sheets: u32,
    ell: u32,
    base_vanishing: VanishingSequence,
}

impl CoverSpec {
    pub fn new(sheets: u32, ell: u32, base_vanishing: VanishingSequence) -> Result<Self> {
        if sheets < 2 {
            return Err(Error::precondition(format!(
                "a cover needs at least 2 sheets, got {sheets}"
            )));
        }
        if ell == 0 {
            return Err(Error::precondition("deg L must be positive"));
        }
        Ok(Self {
            sheets,
            ell,
            base_vanishing,
        })
    }

    pub fn sheets(&self) -> u32 {
        self.sheets
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn base_genus(&self) -> u32 {
        self.base_vanishing.genus()
    }

    pub fn base_vanishing(&self) -> &VanishingSequence {
        &self.base_vanishing
    }

    /// Degree of the branch divisor, `d·ℓ`.
    pub fn branch_degree(&self) -> u32 {
        self.sheets * self.ell
    }

    /// `g = d(d-1)/2 · ℓ + d(h-1) + 1`; may be below 2 (or negative) for
    /// degenerate data, which is why this is signed.
    /// Saturates at the `i64` range for absurd inputs.
    pub fn total_genus(&self) -> i64 {
        let d = i128::from(self.sheets);
        let h = i128::from(self.base_genus());
        let g = d * (d - 1) / 2 * i128::from(self.ell) + d * (h - 1) + 1;
        g.clamp(i128::from(i64::MIN), i128::from(i64::MAX)) as i64
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverResult {
    pub total_genus: u32,
    pub vanishing: VanishingSequence,
    pub profile: PointProfile,
}

impl CoverResult {
    fn from_orders(genus: u32, orders: Vec<u32>) -> Result<Self> {
        let vanishing = VanishingSequence::new(genus, orders.clone()).map_err(|e| {
            Error::invariant(format!(
                "cover rule produced an invalid genus-{genus} vanishing sequence {orders:?}: {e}"
            ))
        })?;
        if !vanishing.is_subcanonical() {
            return Err(Error::invariant(format!(
                "cover rule produced a non-subcanonical sequence ({vanishing})"
            )));
        }
        Ok(Self {
            total_genus: genus,
            profile: PointProfile::new(vanishing.clone()),
            vanishing,
        })
    }
}

/// Vanishing sequence at a ramification point of a genus-`g` double cover of
/// a curve whose branch point `q` has vanishing sequence `base`.
pub fn double_cover_vanishing(genus: u32, base: &VanishingSequence) -> Result<CoverResult> {
    let h = base.genus();
    if genus < 2 {
        return Err(Error::precondition(format!(
            "cover genus must be at least 2, got {genus}"
        )));
    }
    if genus > MAX_GENUS {
        return Err(Error::precondition(format!(
            "cover genus {genus} exceeds the supported maximum {MAX_GENUS}"
        )));
    }
    if u64::from(genus) < 3 * u64::from(h) {
        return Err(Error::precondition(format!(
            "double cover rule needs g >= 3h, got g = {genus}, h = {h}"
        )));
    }
    let g = i64::from(genus);
    let in_base = |m: i64| m >= 0 && base.contains(m as u32);
    let orders: Vec<u32> = (0..=2 * genus - 2)
        .filter(|&n| {
            let m = i64::from(n / 2);
            if n % 2 == 1 {
                in_base(m)
            } else {
                m < g && !in_base(g - 2 - m)
            }
        })
        .collect();
    CoverResult::from_orders(genus, orders)
}

/// Vanishing sequence at a totally ramified point of a `d`-cyclic cover over
/// a point `q` with `K_B = O((2h-2)q)`.
pub fn cyclic_cover_vanishing(spec: &CoverSpec) -> Result<CoverResult> {
    let d = spec.sheets();
    let ell = i64::from(spec.ell());
    let h = spec.base_genus();
    let base = spec.base_vanishing();

    if u64::from(d) * u64::from(spec.ell()) < 2 * u64::from(h) + 1 {
        return Err(Error::precondition(format!(
            "need ℓ >= (2h+1)/d, got ℓ = {ell}, h = {h}, d = {d}"
        )));
    }
    if h >= 2 && !base.is_subcanonical() {
        return Err(Error::precondition(format!(
            "base point must be subcanonical on its genus-{h} curve, got ({base})"
        )));
    }
    let genus = spec.total_genus();
    if genus < 2 {
        return Err(Error::precondition(format!(
            "cover genus must be at least 2, got {genus}"
        )));
    }
    if genus > i64::from(MAX_GENUS) {
        return Err(Error::precondition(format!(
            "cover genus {genus} exceeds the supported maximum {MAX_GENUS}"
        )));
    }
    let genus = genus as u32;

    // For each residue i the admissible m are an initial run 0..=shift-2
    // plus the base orders shifted by `shift`; m is scanned up to 2g-2.
    let top = 2 * genus - 2;
    let mut orders: Vec<u64> = Vec::new();
    for i in 0..d {
        let shift = i64::from(d - 1 - i) * ell;
        let free_end = (shift - 2).min(i64::from(top));
        let shifted = base
            .values()
            .iter()
            .map(|&v| i64::from(v) + shift)
            .filter(|&m| m <= i64::from(top));
        for m in (0..=free_end).chain(shifted) {
            orders.push(u64::from(d) * m as u64 + u64::from(i));
            if orders.len() > genus as usize {
                return Err(Error::invariant(format!(
                    "cyclic cover rule produced more than g = {genus} orders"
                )));
            }
        }
    }
    orders.sort_unstable();
    if let Some(&beyond) = orders.iter().find(|&&n| n > u64::from(top)) {
        return Err(Error::invariant(format!(
            "cyclic cover rule produced order {beyond} above 2g-2 = {top}"
        )));
    }
    let orders = orders.into_iter().map(|n| n as u32).collect();
    CoverResult::from_orders(genus, orders)
}

/// Base point of a genus-3 curve, by vanishing sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Genus3Point {
    /// `0,1,2`
    General,
    /// `0,1,3`
    Flex,
    /// `0,1,4`
    Hyperflex,
    /// `0,2,4`
    Hyperelliptic,
}

impl Genus3Point {
    pub const ALL: [Genus3Point; 4] = [
        Genus3Point::General,
        Genus3Point::Flex,
        Genus3Point::Hyperflex,
        Genus3Point::Hyperelliptic,
    ];

    fn vanishing(self) -> VanishingSequence {
        let values = match self {
            Genus3Point::General => vec![0, 1, 2],
            Genus3Point::Flex => vec![0, 1, 3],
            Genus3Point::Hyperflex => vec![0, 1, 4],
            Genus3Point::Hyperelliptic => vec![0, 2, 4],
        };
        VanishingSequence::new(3, values).expect("valid genus-3 sequence")
    }
}

/// The standard families of cover constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedConstruction {
    /// Double cover of P¹.
    Hyperelliptic,
    /// Double cover of an elliptic curve.
    Bielliptic,
    /// Double cover of a genus-2 curve branched at a general point.
    Genus2BaseGeneral,
    /// Double cover of a genus-2 curve branched at a Weierstrass point.
    Genus2BaseWeierstrass,
    /// Double cover of a genus-3 curve branched at the given kind of point.
    Genus3Base(Genus3Point),
    /// Double cover of a curve of genus `⌊g/3⌋` branched at a general point.
    MaxBaseGeneral,
    /// Triple cyclic cover of P¹, `g = 3k+1`.
    TrigonalRational,
    /// Triple cyclic cover of an elliptic curve, `g = 3k+1`.
    TrigonalElliptic,
}

impl NamedConstruction {
    pub const ALL: [NamedConstruction; 11] = [
        NamedConstruction::Hyperelliptic,
        NamedConstruction::Bielliptic,
        NamedConstruction::Genus2BaseGeneral,
        NamedConstruction::Genus2BaseWeierstrass,
        NamedConstruction::Genus3Base(Genus3Point::General),
        NamedConstruction::Genus3Base(Genus3Point::Flex),
        NamedConstruction::Genus3Base(Genus3Point::Hyperflex),
        NamedConstruction::Genus3Base(Genus3Point::Hyperelliptic),
        NamedConstruction::MaxBaseGeneral,
        NamedConstruction::TrigonalRational,
        NamedConstruction::TrigonalElliptic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedConstruction::Hyperelliptic => "hyperelliptic",
            NamedConstruction::Bielliptic => "bielliptic",
            NamedConstruction::Genus2BaseGeneral => "genus2-base-general",
            NamedConstruction::Genus2BaseWeierstrass => "genus2-base-weierstrass",
            NamedConstruction::Genus3Base(Genus3Point::General) => "genus3-base-general",
            NamedConstruction::Genus3Base(Genus3Point::Flex) => "genus3-base-flex",
            NamedConstruction::Genus3Base(Genus3Point::Hyperflex) => "genus3-base-hyperflex",
            NamedConstruction::Genus3Base(Genus3Point::Hyperelliptic) => {
                "genus3-base-hyperelliptic"
            }
            NamedConstruction::MaxBaseGeneral => "max-base-general",
            NamedConstruction::TrigonalRational => "trigonal-rational",
            NamedConstruction::TrigonalElliptic => "trigonal-elliptic",
        }
    }

    /// Smallest genus for which the construction is stated.
    pub fn min_genus(self) -> u32 {
        match self {
            NamedConstruction::Hyperelliptic => 2,
            NamedConstruction::Bielliptic => 3,
            NamedConstruction::Genus2BaseGeneral
            | NamedConstruction::Genus2BaseWeierstrass
            | NamedConstruction::MaxBaseGeneral => 6,
            NamedConstruction::Genus3Base(_) => 9,
            NamedConstruction::TrigonalRational | NamedConstruction::TrigonalElliptic => 7,
        }
    }

    pub fn applies_to(self, genus: u32) -> bool {
        genus >= self.min_genus()
            && match self {
                NamedConstruction::TrigonalRational | NamedConstruction::TrigonalElliptic => {
                    genus % 3 == 1
                }
                _ => true,
            }
    }

    pub fn build(self, genus: u32) -> Result<CoverResult> {
        named_construction(self, genus)
    }
}

impl fmt::Display for NamedConstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for NamedConstruction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let normalized = s.trim().replace('_', "-");
        NamedConstruction::ALL
            .into_iter()
            .find(|c| c.name() == normalized)
            .ok_or_else(|| Error::precondition(format!("unknown construction {s:?}")))
    }
}

/// Builds one of the standard constructions at genus `g` by feeding the
/// corresponding base data to the double or cyclic cover rule.
pub fn named_construction(name: NamedConstruction, genus: u32) -> Result<CoverResult> {
    if !name.applies_to(genus) {
        return Err(Error::precondition(match name {
            NamedConstruction::TrigonalRational | NamedConstruction::TrigonalElliptic => {
                format!("{name} needs g = 3k+1 >= {}, got {genus}", name.min_genus())
            }
            _ => format!("{name} needs g >= {}, got {genus}", name.min_genus()),
        }));
    }
    let generic = |h: u32| VanishingSequence::generic(h).map_err(Error::from);
    match name {
        NamedConstruction::Hyperelliptic => double_cover_vanishing(genus, &generic(0)?),
        NamedConstruction::Bielliptic => double_cover_vanishing(genus, &generic(1)?),
        NamedConstruction::Genus2BaseGeneral => double_cover_vanishing(genus, &generic(2)?),
        NamedConstruction::Genus2BaseWeierstrass => {
            double_cover_vanishing(genus, &VanishingSequence::hyperelliptic(2)?)
        }
        NamedConstruction::Genus3Base(point) => double_cover_vanishing(genus, &point.vanishing()),
        NamedConstruction::MaxBaseGeneral => double_cover_vanishing(genus, &generic(genus / 3)?),
        NamedConstruction::TrigonalRational => {
            cyclic_cover_vanishing(&CoverSpec::new(3, genus.div_ceil(3), generic(0)?)?)
        }
        NamedConstruction::TrigonalElliptic => {
            cyclic_cover_vanishing(&CoverSpec::new(3, (genus - 1) / 3, generic(1)?)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn van(values: &[u32]) -> VanishingSequence {
        VanishingSequence::new(values.len() as u32, values.to_vec()).unwrap()
    }

    #[test]
    fn riemann_hurwitz_examples() {
        assert_eq!(rh_genus(2, 0, 14).unwrap(), 6);
        assert_eq!(rh_genus(2, 1, 10).unwrap(), 6);
        assert_eq!(rh_genus(3, 1, 6).unwrap(), 7);
        assert!(rh_genus(3, 1, 7).is_err());
        assert!(rh_genus(1, 1, 6).is_err());
        assert!(rh_genus(2, 0, 0).is_err());
    }

    #[test]
    fn double_cover_examples() {
        let hyp = double_cover_vanishing(6, &van(&[])).unwrap();
        assert_eq!(hyp.vanishing.values(), &[0, 2, 4, 6, 8, 10]);
        assert_eq!(hyp.profile.ramification.values(), &[0, 1, 2, 3, 4, 5]);

        let biell = double_cover_vanishing(6, &van(&[0])).unwrap();
        assert_eq!(biell.vanishing.values(), &[0, 1, 2, 4, 6, 10]);
        assert_eq!(biell.profile.ramification.values(), &[0, 0, 0, 1, 2, 5]);

        let g7 = double_cover_vanishing(7, &van(&[0, 2])).unwrap();
        assert_eq!(g7.vanishing.values(), &[0, 1, 2, 4, 5, 8, 12]);
        assert_eq!(g7.profile.ramification.values(), &[0, 0, 0, 1, 1, 3, 6]);
    }

    #[test]
    fn double_cover_requires_g_at_least_3h() {
        assert!(matches!(
            double_cover_vanishing(5, &van(&[0, 1])),
            Err(Error::Precondition(_))
        ));
        assert!(double_cover_vanishing(6, &van(&[0, 1])).is_ok());
    }

    #[test]
    fn cyclic_cover_examples() {
        let r = cyclic_cover_vanishing(&CoverSpec::new(3, 3, van(&[])).unwrap()).unwrap();
        assert_eq!(r.total_genus, 7);
        assert_eq!(r.vanishing.values(), &[0, 1, 3, 4, 6, 9, 12]);
        assert_eq!(r.profile.ramification.values(), &[0, 0, 1, 1, 2, 4, 6]);

        let r = cyclic_cover_vanishing(&CoverSpec::new(3, 2, van(&[0])).unwrap()).unwrap();
        assert_eq!(r.total_genus, 7);
        assert_eq!(r.vanishing.values(), &[0, 1, 2, 3, 6, 7, 12]);
        assert_eq!(r.profile.ramification.values(), &[0, 0, 0, 0, 2, 2, 6]);

        for g in 3..20 {
            let cyclic =
                cyclic_cover_vanishing(&CoverSpec::new(2, g - 1, van(&[0])).unwrap()).unwrap();
            assert_eq!(cyclic, double_cover_vanishing(g, &van(&[0])).unwrap());
        }
    }

    #[test]
    fn cyclic_cover_preconditions() {
        // ℓ = 1 < (2·2+1)/3
        let spec = CoverSpec::new(3, 1, van(&[0, 2])).unwrap();
        assert!(matches!(
            cyclic_cover_vanishing(&spec),
            Err(Error::Precondition(_))
        ));
        // base point not subcanonical
        let spec = CoverSpec::new(3, 2, van(&[0, 1])).unwrap();
        assert!(matches!(
            cyclic_cover_vanishing(&spec),
            Err(Error::Precondition(_))
        ));
        // g = 0
        let spec = CoverSpec::new(2, 1, van(&[])).unwrap();
        assert_eq!(spec.total_genus(), 0);
        assert!(matches!(
            cyclic_cover_vanishing(&spec),
            Err(Error::Precondition(_))
        ));
        assert!(CoverSpec::new(1, 3, van(&[])).is_err());
        assert!(CoverSpec::new(3, 0, van(&[])).is_err());
    }

    #[test]
    fn named_examples() {
        let r = named_construction(NamedConstruction::Genus2BaseGeneral, 8).unwrap();
        assert_eq!(r.profile.ramification.values(), &[0, 0, 0, 0, 0, 1, 2, 7]);

        let r = named_construction(NamedConstruction::Bielliptic, 3).unwrap();
        assert_eq!(r.profile.ramification.values(), &[0, 0, 2]);

        // Generic genus-3 base point, g = 9.
        let r = named_construction(NamedConstruction::MaxBaseGeneral, 9).unwrap();
        assert_eq!(
            r,
            double_cover_vanishing(9, &VanishingSequence::generic(3).unwrap()).unwrap()
        );
        assert_eq!(
            r.profile.ramification.values(),
            &[0, 0, 0, 0, 0, 0, 0, 1, 8]
        );

        assert!(named_construction(NamedConstruction::Genus2BaseGeneral, 5).is_err());
        assert!(named_construction(NamedConstruction::TrigonalRational, 8).is_err());
        assert!(named_construction(NamedConstruction::Hyperelliptic, 1).is_err());
    }

    #[test]
    fn construction_names_round_trip() {
        for c in NamedConstruction::ALL {
            assert_eq!(c.name().parse::<NamedConstruction>().unwrap(), c);
        }
        assert_eq!(
            "genus2_base_general".parse::<NamedConstruction>().unwrap(),
            NamedConstruction::Genus2BaseGeneral
        );
    }
}
