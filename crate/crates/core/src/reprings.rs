//! Representation rings as free modules on their irreducibles, and the
//! induction and degree maps between them.
//!
//! Characters of `Z_m` are indexed by residues `j` (the character
//! `k ↦ ζ^{jk}`); restriction to `Z_d` reduces the index mod `d`, so
//! induction from `Z_d` sends `j` to every `k ≡ j (mod d)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactlinalg::IntMatrix;
use crate::groups::{all_tables_coincide, build_group, character_table, GroupId, MAX_BUILD_ORDER};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    Complex,
    Real,
    Quaternionic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepRing {
    pub group: GroupId,
    pub flavor: Flavor,
    pub rank: usize,
}

impl RepRing {
    pub fn new(group: GroupId, flavor: Flavor) -> Result<Self> {
        group.validate()?;
        let group = group.canonical();
        let rank = match flavor {
            Flavor::Complex => group.class_count(),
            Flavor::Real | Flavor::Quaternionic => real_rank(&group)?,
        };
        Ok(RepRing {
            group,
            flavor,
            rank,
        })
    }

    pub fn complex(group: GroupId) -> Result<Self> {
        Self::new(group, Flavor::Complex)
    }

    /// Degrees of the basis irreducibles (complex flavor only).
    pub fn degrees(&self) -> Result<Vec<i64>> {
        if self.flavor != Flavor::Complex {
            return Err(Error::ShapeMismatch(format!(
                "degrees are only tabulated for complex representations of {}",
                self.group
            )));
        }
        complex_degrees(&self.group)
    }
}

impl fmt::Display for RepRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.flavor {
            Flavor::Complex => "C",
            Flavor::Real => "R",
            Flavor::Quaternionic => "H",
        };
        write!(f, "R_{tag}({})", self.group)
    }
}

/// Real and quaternionic irreducibles are both counted by classes up to
/// inversion.
fn real_rank(group: &GroupId) -> Result<usize> {
    let cyclic_real = |m: u64| (m / 2 + 1) as usize;
    match group {
        GroupId::Trivial => Ok(1),
        GroupId::Cyclic(m) => Ok(cyclic_real(*m)),
        GroupId::DirectWithZ2(inner) if group.order() > MAX_BUILD_ORDER => match **inner {
            GroupId::Cyclic(m) => Ok(2 * cyclic_real(m)),
            _ => Err(Error::NotInCatalogue(group.to_string())),
        },
        _ => Ok(build_group(group)?.real_class_count()),
    }
}

fn complex_degrees(group: &GroupId) -> Result<Vec<i64>> {
    if group.is_abelian() {
        return Ok(vec![1; group.class_count()]);
    }
    Ok(character_table(group)?.degrees)
}

/// A map of complex representation rings, as a (target rank × source rank)
/// matrix on the irreducible bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InductionMap {
    pub source: RepRing,
    pub target: RepRing,
    pub matrix: IntMatrix,
}

impl InductionMap {
    /// `self ∘ first`.
    pub fn compose(&self, first: &InductionMap) -> Result<InductionMap> {
        if first.target != self.source {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose {} -> {} after {} -> {}",
                self.source, self.target, first.source, first.target
            )));
        }
        Ok(InductionMap {
            source: first.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.product(&first.matrix)?,
        })
    }

    /// Checks nonnegativity and that each column has induced dimension
    /// `[target : source] · deg`.
    pub fn check_dimensions(&self) -> Result<()> {
        let src = self.source.degrees()?;
        let tgt = self.target.degrees()?;
        let index = (self.target.group.order() / self.source.group.order()) as i64;
        if self.matrix.shape() != (tgt.len(), src.len()) {
            return Err(Error::ShapeMismatch(format!(
                "induction matrix is {:?}, expected {}x{}",
                self.matrix.shape(),
                tgt.len(),
                src.len()
            )));
        }
        for (j, d) in src.iter().enumerate() {
            let mut dim = 0i64;
            for (k, e) in tgt.iter().enumerate() {
                let a = i64::try_from(self.matrix.get(k, j))
                    .map_err(|_| Error::ShapeMismatch("induction entry overflows".into()))?;
                if a < 0 {
                    return Err(Error::ShapeMismatch(format!("negative entry at ({k},{j})")));
                }
                dim += a * e;
            }
            if dim != index * d {
                return Err(Error::ShapeMismatch(format!(
                    "column {j} induces dimension {dim}, expected {}",
                    index * d
                )));
            }
        }
        Ok(())
    }
}

/// Trivial group into `Z_m`: the regular representation.
pub fn induction_from_trivial(m: u64) -> Result<InductionMap> {
    cyclic_induction(1, m)
}

/// Trivial group into any catalogue group: the column of degrees.
pub fn induction_from_trivial_to(group: &GroupId) -> Result<InductionMap> {
    let target = RepRing::complex(group.clone())?;
    let degrees = complex_degrees(&target.group)?;
    let rows: Vec<Vec<i64>> = degrees.iter().map(|&d| vec![d]).collect();
    Ok(InductionMap {
        source: RepRing::complex(GroupId::Trivial)?,
        matrix: IntMatrix::from_rows(1, &rows)?,
        target,
    })
}

/// `Z_d ≤ Z_m`: character `j` goes to the sum of characters `k ≡ j (mod d)`.
pub fn cyclic_induction(d: u64, m: u64) -> Result<InductionMap> {
    if d == 0 || m == 0 || !m.is_multiple_of(d) {
        return Err(Error::NotDivisor { d, m });
    }
    let (rows, cols) = (m as usize, d as usize);
    let mut matrix = IntMatrix::zeros(rows, cols);
    for k in 0..rows {
        matrix.set(k, k % cols, 1.into());
    }
    Ok(InductionMap {
        source: RepRing::complex(GroupId::Cyclic(d))?,
        target: RepRing::complex(GroupId::Cyclic(m))?,
        matrix,
    })
}

/// The four natural transformations between real, complex and
/// quaternionic representation rings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DegreeMap {
    /// Complexification `R_R → R_C`.
    Nu,
    /// Realification `R_C → R_R`.
    Rho,
    /// Quaternionification `R_C → R_H`.
    Sigma,
    /// Forgetful map `R_H → R_C`.
    Eta,
}

/// Matrix of a degree map on the common basis, defined only when every
/// indicator is 1: there `ν` and `σ` are the identity and `ρ`, `η` double.
pub fn degree_map(kind: DegreeMap, group: &GroupId) -> Result<IntMatrix> {
    if !all_tables_coincide(group) {
        return Err(Error::HypothesisFails(group.clone()));
    }
    let n = group.class_count();
    Ok(match kind {
        DegreeMap::Nu | DegreeMap::Sigma => IntMatrix::identity(n),
        DegreeMap::Rho | DegreeMap::Eta => IntMatrix::scalar(n, 2),
    })
}
