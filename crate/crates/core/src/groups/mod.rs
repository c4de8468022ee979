//! Concrete finite groups: Cayley tables, conjugacy classes, integer
//! character tables and Frobenius–Schur indicators.

mod cayley;
mod indicators;
mod tables;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use cayley::{build_group, ConjugacyClass, FiniteGroupData, MAX_BUILD_ORDER};
pub use indicators::{all_tables_coincide, cyclic_fs_indicator, fs_indicator, CyclicCharacter};
pub use tables::{character_table, CharacterTable};

/// Catalogue identifier for a finite group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupId {
    Trivial,
    /// Cyclic group of order `m`.
    Cyclic(u64),
    Klein4,
    /// Dihedral group of order `2n`.
    Dihedral(u32),
    Sym4,
    /// Direct product with a central `Z2`.
    DirectWithZ2(Box<GroupId>),
}

impl GroupId {
    pub fn z2_times(inner: GroupId) -> Self {
        GroupId::DirectWithZ2(Box::new(inner))
    }

    /// Checks catalogue membership without building anything.
    pub fn validate(&self) -> Result<()> {
        let ok = match self {
            GroupId::Cyclic(m) => *m >= 1,
            GroupId::Dihedral(n) => matches!(n, 3 | 4 | 6),
            GroupId::DirectWithZ2(inner) => {
                !matches!(**inner, GroupId::DirectWithZ2(_)) && inner.validate().is_ok()
            }
            GroupId::Trivial | GroupId::Klein4 | GroupId::Sym4 => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::NotInCatalogue(format!("{self:?}")))
        }
    }

    pub fn order(&self) -> u64 {
        match self {
            GroupId::Trivial => 1,
            GroupId::Cyclic(m) => *m,
            GroupId::Klein4 => 4,
            GroupId::Dihedral(n) => 2 * u64::from(*n),
            GroupId::Sym4 => 24,
            GroupId::DirectWithZ2(inner) => 2 * inner.order(),
        }
    }

    /// Number of conjugacy classes, which is the rank of the complex
    /// representation ring.
    pub fn class_count(&self) -> usize {
        match self {
            GroupId::Trivial => 1,
            GroupId::Cyclic(m) => *m as usize,
            GroupId::Klein4 => 4,
            GroupId::Dihedral(3) => 3,
            GroupId::Dihedral(4) => 5,
            GroupId::Dihedral(n) => (*n as usize) / 2 + 3,
            GroupId::Sym4 => 5,
            GroupId::DirectWithZ2(inner) => 2 * inner.class_count(),
        }
    }

    /// Cyclic order if the group is cyclic (`Trivial` counts as order 1).
    pub fn cyclic_order(&self) -> Option<u64> {
        match self {
            GroupId::Trivial => Some(1),
            GroupId::Cyclic(m) => Some(*m),
            _ => None,
        }
    }

    /// Abelian members have one-dimensional irreducibles only.
    pub fn is_abelian(&self) -> bool {
        match self {
            GroupId::Trivial | GroupId::Cyclic(_) | GroupId::Klein4 => true,
            GroupId::Dihedral(_) | GroupId::Sym4 => false,
            GroupId::DirectWithZ2(inner) => inner.is_abelian(),
        }
    }

    /// Equal ids up to the `Z1 = 1`, `Z2 x 1 = Z2` and `Z2 x Z2 = Klein4`
    /// identifications.
    pub fn canonical(&self) -> GroupId {
        match self {
            GroupId::Cyclic(1) => GroupId::Trivial,
            GroupId::DirectWithZ2(inner) => match inner.canonical() {
                GroupId::Trivial => GroupId::Cyclic(2),
                GroupId::Cyclic(2) => GroupId::Klein4,
                other => GroupId::z2_times(other),
            },
            other => other.clone(),
        }
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupId::Trivial => f.write_str("1"),
            GroupId::Cyclic(m) => write!(f, "Z{m}"),
            GroupId::Klein4 => f.write_str("Z2xZ2"),
            GroupId::Dihedral(n) => write!(f, "D{n}"),
            GroupId::Sym4 => f.write_str("S4"),
            GroupId::DirectWithZ2(inner) => write!(f, "Z2x{inner}"),
        }
    }
}

/// Parses the input-file group names: `1`, `Z<m>` (or `Zm(<m>)`), `Z2xZ2`,
/// `D3`, `D4`, `D6`, `S4`, and any of these behind a `Z2x` prefix.
impl FromStr for GroupId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let unknown = || Error::UnknownGroupName(s.to_string());
        let id = match s {
            "1" => GroupId::Trivial,
            "Z2xZ2" => GroupId::Klein4,
            "S4" => GroupId::Sym4,
            _ => {
                if let Some(rest) = s.strip_prefix("Z2x") {
                    let inner: GroupId = rest.parse().map_err(|_| unknown())?;
                    GroupId::z2_times(inner).canonical()
                } else if let Some(n) = s.strip_prefix('D') {
                    GroupId::Dihedral(n.parse().map_err(|_| unknown())?)
                } else if let Some(m) = s.strip_prefix("Zm(").and_then(|r| r.strip_suffix(')')) {
                    GroupId::Cyclic(m.parse().map_err(|_| unknown())?).canonical()
                } else if let Some(m) = s.strip_prefix('Z') {
                    GroupId::Cyclic(m.parse().map_err(|_| unknown())?).canonical()
                } else {
                    return Err(unknown());
                }
            }
        };
        id.validate()?;
        Ok(id)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for name in ["1", "Z2", "Z3", "Z4", "Z6", "Z2xZ2", "D3", "D4", "D6", "S4", "Z2xS4", "Z2xD6"] {
            let id: GroupId = name.parse().unwrap();
            assert_eq!(id.to_string(), name);
        }
    }

    #[test]
    fn alternative_spellings() {
        assert_eq!("Zm(7)".parse::<GroupId>().unwrap(), GroupId::Cyclic(7));
        assert_eq!("Z1".parse::<GroupId>().unwrap(), GroupId::Trivial);
        assert_eq!("Z2x1".parse::<GroupId>().unwrap(), GroupId::Cyclic(2));
        assert_eq!(
            "Z2xZ2xZ2".parse::<GroupId>().unwrap(),
            GroupId::z2_times(GroupId::Klein4)
        );
    }

    #[test]
    fn rejects_outside_catalogue() {
        assert!("D5".parse::<GroupId>().is_err());
        assert!("Z0".parse::<GroupId>().is_err());
        assert!("A5".parse::<GroupId>().is_err());
        assert!("Z2xZ2xS4".parse::<GroupId>().is_err());
        assert!(GroupId::z2_times(GroupId::z2_times(GroupId::Sym4))
            .validate()
            .is_err());
    }

    #[test]
    fn orders() {
        assert_eq!(GroupId::Dihedral(6).order(), 12);
        assert_eq!(GroupId::z2_times(GroupId::Sym4).order(), 48);
    }
}
