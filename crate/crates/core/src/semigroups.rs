//! Numerical semigroups of Weierstrass non-gaps.
//!
//! The non-gaps at a point are closed under addition, which gives a necessary
//! condition for a gap set to occur. Membership is kept as a dense table on
//! `0..=2g+1`; everything above `2g-1` is a member.

use std::fmt;

use crate::sequences::{GapSet, RamificationSequence};

/// Two members whose sum is a gap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClosureViolation {
    pub x: u32,
    pub y: u32,
    pub sum: u32,
}

impl fmt::Display for ClosureViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {} = {} is a gap although {} and {} are non-gaps",
            self.x, self.y, self.sum, self.x, self.y
        )
    }
}

impl std::error::Error for ClosureViolation {}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    genus: u32,
    members: Vec<bool>,
}

impl NumericalSemigroup {
    /// The semigroup whose gap set is `gaps`, or the lexicographically
    /// smallest pair `(x, y)`, `x <= y`, of non-gaps summing to a gap.
    pub fn from_gaps(gaps: &GapSet) -> Result<Self, ClosureViolation> {
        let genus = gaps.genus();
        let bound = 2 * genus as usize + 1;
        let mut members = vec![true; bound + 1];
        for &s in gaps.gaps() {
            members[s as usize] = false;
        }
        for x in 1..=bound / 2 {
            if !members[x] {
                continue;
            }
            for y in x..=bound - x {
                if members[y] && !members[x + y] {
                    return Err(ClosureViolation {
                        x: x as u32,
                        y: y as u32,
                        sum: (x + y) as u32,
                    });
                }
            }
        }
        Ok(Self { genus, members })
    }

    /// The semigroup `N` with no gaps.
    pub fn trivial() -> Self {
        Self {
            genus: 0,
            members: vec![true; 2],
        }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// Upper end of the dense membership table.
    pub fn bound(&self) -> u32 {
        2 * self.genus + 1
    }

    pub fn contains(&self, n: u32) -> bool {
        self.members.get(n as usize).copied().unwrap_or(true)
    }

    pub fn gaps(&self) -> Vec<u32> {
        (1..=self.bound()).filter(|&n| !self.contains(n)).collect()
    }

    pub fn gap_set(&self) -> GapSet {
        GapSet::new(self.gaps()).expect("semigroup gaps satisfy the gap-set invariants")
    }

    /// Largest gap, or -1 when there is none.
    pub fn frobenius(&self) -> i64 {
        self.gaps().last().map_or(-1, |&s| i64::from(s))
    }

    /// `x` is a member iff `2g-1-x` is not, for every `0 <= x <= 2g-1`.
    pub fn is_symmetric(&self) -> bool {
        let top = 2 * i64::from(self.genus) - 1;
        (0..=top).all(|x| {
            let x = x as u32;
            let mirror = (top as u32) - x;
            self.contains(x) != self.contains(mirror)
        })
    }

    /// Minimal generating set: members not expressible as a sum of two
    /// smaller positive members. Only members up to `2g + multiplicity` can
    /// be minimal generators.
    pub fn minimal_generators(&self) -> Vec<u32> {
        let multiplicity = (1..).find(|&n| self.contains(n)).unwrap_or(1);
        let top = 2 * self.genus + multiplicity;
        let mut generators = Vec::new();
        for n in 1..=top {
            if !self.contains(n) {
                continue;
            }
            let decomposable = (1..=n / 2).any(|a| self.contains(a) && self.contains(n - a));
            if !decomposable {
                generators.push(n);
            }
        }
        generators
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, n) in self.minimal_generators().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{n}")?;
        }
        f.write_str(">")
    }
}

/// Runs the semigroup test on the gap set of a ramification sequence.
pub fn check_ramification_admissible(
    ramification: &RamificationSequence,
) -> Result<NumericalSemigroup, ClosureViolation> {
    NumericalSemigroup::from_gaps(&ramification.vanishing().gaps())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn semigroup(gaps: &[u32]) -> Result<NumericalSemigroup, ClosureViolation> {
        NumericalSemigroup::from_gaps(&GapSet::new(gaps.iter().copied()).unwrap())
    }

    #[test]
    fn from_gaps_examples() {
        let s = semigroup(&[1, 3, 5, 7]).unwrap();
        assert_eq!(s.minimal_generators(), vec![2, 9]);
        assert_eq!(s.gaps(), vec![1, 3, 5, 7]);
        assert_eq!(
            semigroup(&[1, 2, 5, 7]),
            Err(ClosureViolation { x: 3, y: 4, sum: 7 })
        );
        let trivial = semigroup(&[]).unwrap();
        assert_eq!(trivial, NumericalSemigroup::trivial());
        assert!(trivial.contains(1));
    }

    #[test]
    fn symmetry_examples() {
        let s = semigroup(&[1, 2, 4, 5, 8, 11]).unwrap();
        assert!(s.is_symmetric());
        assert_eq!(s.minimal_generators(), vec![3, 7]);
        assert!(!semigroup(&[1, 2, 3, 4, 5]).unwrap().is_symmetric());
        assert!(semigroup(&[1]).unwrap().is_symmetric());
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(semigroup(&[1, 3, 5, 7]).unwrap().frobenius(), 7);
        assert_eq!(semigroup(&[1, 2, 3, 7]).unwrap().frobenius(), 7);
        assert_eq!(NumericalSemigroup::trivial().frobenius(), -1);
    }

    #[test]
    fn ramification_admissibility_examples() {
        let ok = RamificationSequence::new(5, vec![0, 0, 0, 1, 4]).unwrap();
        assert!(check_ramification_admissible(&ok).is_ok());

        let bad = RamificationSequence::new(5, vec![0, 0, 0, 1, 3]).unwrap();
        assert_eq!(bad.vanishing().gaps().gaps(), &[1, 2, 3, 5, 8]);
        assert_eq!(
            check_ramification_admissible(&bad),
            Err(ClosureViolation { x: 4, y: 4, sum: 8 })
        );

        let trigonal = RamificationSequence::new(6, vec![0, 0, 1, 1, 3, 5]).unwrap();
        let s = check_ramification_admissible(&trigonal).unwrap();
        assert_eq!(s.gaps(), vec![1, 2, 4, 5, 8, 11]);
        assert_eq!(s.minimal_generators(), vec![3, 7]);
    }

    #[test]
    fn members_above_bound_are_implicit() {
        let s = semigroup(&[1, 2, 3]).unwrap();
        assert_eq!(s.bound(), 7);
        assert!(s.contains(7) && s.contains(1000));
        assert_eq!(s.minimal_generators(), vec![4, 5, 6, 7]);
    }
}
