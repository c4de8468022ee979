//! Bredon chain complexes with complex representation-ring coefficients.
//!
//! A [`GammaCwDatum`] lists orbit representatives of cells with their
//! stabilisers. Chain group `C_n` is the sum of `R_C(stabiliser)` over the
//! `n`-cells, and each boundary term contributes a signed induction block.

mod format;
mod graph;
mod models;
mod sl3;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactlinalg::{FinAbGroup, IntChainComplex, IntMatrix};
use crate::groups::GroupId;
use crate::par::Execution;
use crate::reprings::{cyclic_induction, induction_from_trivial_to};

pub use format::{parse_datum, render_datum};
pub use graph::{GraphEdge, GraphOfGroupsDatum};
pub use models::{
    fuchsian_cocompact_datum, fuchsian_noncocompact_datum, lifted_fuchsian_datum, lifted_graph,
    noncocompact_graph,
};
pub use sl3::{sl3_datum, SL3_CELL_COUNTS, SL3_CHAIN_RANKS};

/// How a boundary term maps the source stabiliser's representation ring
/// into the target's.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum InductionSpec {
    /// Equal stabilisers.
    Identity,
    /// Trivial group into the named group.
    FromTrivial(GroupId),
    /// `Z_d ≤ Z_m`.
    Cyclic { d: u64, m: u64 },
}

impl InductionSpec {
    /// Block of the induction `R_C(source) -> R_C(target)`.
    pub fn matrix(&self, source: &GroupId, target: &GroupId) -> Result<IntMatrix> {
        let (src, tgt) = (source.canonical(), target.canonical());
        let mismatch = || Error::InductionMismatch {
            spec: self.to_string(),
            source_group: src.clone(),
            target_group: tgt.clone(),
        };
        match self {
            InductionSpec::Identity => {
                if src != tgt {
                    return Err(mismatch());
                }
                Ok(IntMatrix::identity(src.class_count()))
            }
            InductionSpec::FromTrivial(g) => {
                if src != GroupId::Trivial || g.canonical() != tgt {
                    return Err(mismatch());
                }
                Ok(induction_from_trivial_to(&tgt)?.matrix)
            }
            InductionSpec::Cyclic { d, m } => {
                if src != GroupId::Cyclic(*d).canonical() || tgt != GroupId::Cyclic(*m).canonical()
                {
                    return Err(mismatch());
                }
                Ok(cyclic_induction(*d, *m)?.matrix)
            }
        }
    }
}

impl fmt::Display for InductionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InductionSpec::Identity => f.write_str("id"),
            InductionSpec::FromTrivial(g) => write!(f, "triv->{g}"),
            InductionSpec::Cyclic { d, m } => write!(f, "Z{d}->Z{m}"),
        }
    }
}

impl FromStr for InductionSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "id" {
            return Ok(InductionSpec::Identity);
        }
        let bad = || Error::parse(0, format!("unknown induction spec `{s}`"));
        let (from, to) = s.split_once("->").ok_or_else(bad)?;
        let to: GroupId = to.parse()?;
        if from.trim() == "triv" {
            return Ok(InductionSpec::FromTrivial(to));
        }
        let from: GroupId = from.parse()?;
        match (from.cyclic_order(), to.cyclic_order()) {
            (Some(d), Some(m)) => Ok(InductionSpec::Cyclic { d, m }),
            _ => Err(bad()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryTerm {
    /// Always `+1` or `-1`.
    pub coefficient: i64,
    pub target: String,
    pub spec: InductionSpec,
}

impl BoundaryTerm {
    pub fn new(coefficient: i64, target: impl Into<String>, spec: InductionSpec) -> Self {
        BoundaryTerm {
            coefficient,
            target: target.into(),
            spec,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub label: String,
    pub stabiliser: GroupId,
    /// Empty for 0-cells, for cells with zero boundary, and in raw mode.
    pub boundary: Vec<BoundaryTerm>,
}

impl Cell {
    pub fn new(label: impl Into<String>, stabiliser: GroupId) -> Self {
        Cell {
            label: label.into(),
            stabiliser,
            boundary: Vec::new(),
        }
    }

    pub fn with_boundary(mut self, terms: Vec<BoundaryTerm>) -> Self {
        self.boundary = terms;
        self
    }
}

/// Orbit representatives of cells by dimension, with either cellular
/// boundary terms or explicit boundary matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaCwDatum {
    pub name: String,
    /// The boundaries are only known up to change of basis.
    pub snf_equivalent: bool,
    pub cells: Vec<Vec<Cell>>,
    /// `raw_boundaries[n - 1]` is the matrix of `C_n -> C_{n-1}`.
    pub raw_boundaries: Option<Vec<IntMatrix>>,
}

impl GammaCwDatum {
    pub fn new(name: impl Into<String>, cells: Vec<Vec<Cell>>) -> Self {
        GammaCwDatum {
            name: name.into(),
            snf_equivalent: false,
            cells,
            raw_boundaries: None,
        }
    }

    pub fn dimension(&self) -> Option<usize> {
        self.cells.len().checked_sub(1)
    }

    /// Chain ranks: the number of complex irreducibles summed over cells.
    pub fn chain_ranks(&self) -> Vec<usize> {
        self.cells
            .iter()
            .map(|dim| dim.iter().map(|c| c.stabiliser.class_count()).sum())
            .collect()
    }

    fn check_labels(&self) -> Result<()> {
        for (dim, cells) in self.cells.iter().enumerate() {
            let mut seen = HashMap::new();
            for c in cells {
                c.stabiliser.validate()?;
                if seen.insert(c.label.as_str(), ()).is_some() {
                    return Err(Error::DuplicateLabel {
                        label: c.label.clone(),
                        dim,
                    });
                }
            }
        }
        Ok(())
    }

    /// Assembles the Bredon chain complex, checking `∂∘∂ = 0`.
    pub fn expand(&self) -> Result<IntChainComplex> {
        self.check_labels()?;
        let ranks = self.chain_ranks();
        let boundaries = match &self.raw_boundaries {
            Some(raw) => self.raw_matrices(raw, &ranks)?,
            None => self.cellular_matrices(&ranks)?,
        };
        IntChainComplex::new(0, ranks, boundaries)
    }

    fn raw_matrices(&self, raw: &[IntMatrix], ranks: &[usize]) -> Result<Vec<IntMatrix>> {
        if self.cells.iter().flatten().any(|c| !c.boundary.is_empty()) {
            return Err(Error::ShapeMismatch(
                "datum has both boundary terms and raw matrices".into(),
            ));
        }
        let needed = ranks.len().saturating_sub(1);
        if raw.len() > needed {
            return Err(Error::ShapeMismatch(format!(
                "{} raw boundary matrices for a datum of dimension {needed}",
                raw.len()
            )));
        }
        Ok((0..needed)
            .map(|k| {
                raw.get(k)
                    .cloned()
                    .unwrap_or_else(|| IntMatrix::zeros(ranks[k], ranks[k + 1]))
            })
            .collect())
    }

    fn cellular_matrices(&self, ranks: &[usize]) -> Result<Vec<IntMatrix>> {
        if let Some(c) = self.cells.first().and_then(|v| v.iter().find(|c| !c.boundary.is_empty())) {
            return Err(Error::UnresolvedLabel {
                label: c.boundary[0].target.clone(),
                dim: 0,
            });
        }
        let offsets: Vec<Vec<usize>> = self
            .cells
            .iter()
            .map(|dim| {
                dim.iter()
                    .scan(0, |acc, c| {
                        let at = *acc;
                        *acc += c.stabiliser.class_count();
                        Some(at)
                    })
                    .collect()
            })
            .collect();
        let mut out = Vec::new();
        for n in 1..self.cells.len() {
            let lower: HashMap<&str, usize> = self.cells[n - 1]
                .iter()
                .enumerate()
                .map(|(i, c)| (c.label.as_str(), i))
                .collect();
            let mut m = IntMatrix::zeros(ranks[n - 1], ranks[n]);
            for (i, cell) in self.cells[n].iter().enumerate() {
                for term in &cell.boundary {
                    let &t = lower.get(term.target.as_str()).ok_or_else(|| {
                        Error::UnresolvedLabel {
                            label: term.target.clone(),
                            dim: n - 1,
                        }
                    })?;
                    if term.coefficient.abs() != 1 {
                        return Err(Error::ShapeMismatch(format!(
                            "boundary coefficient {} on `{}` is not +-1",
                            term.coefficient, cell.label
                        )));
                    }
                    let target = &self.cells[n - 1][t];
                    let block = term
                        .spec
                        .matrix(&cell.stabiliser, &target.stabiliser)?
                        .scaled(&term.coefficient.into());
                    m.add_block(offsets[n - 1][t], offsets[n][i], &block)?;
                }
            }
            out.push(m);
        }
        Ok(out)
    }
}

/// Bredon homology in degrees `0..=dim`.
pub fn bredon_homology(datum: &GammaCwDatum) -> Result<Vec<FinAbGroup>> {
    bredon_homology_with(datum, Execution::default())
}

pub fn bredon_homology_with(datum: &GammaCwDatum, exec: Execution) -> Result<Vec<FinAbGroup>> {
    Ok(datum.expand()?.all_homology(exec))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn free_point() -> GammaCwDatum {
        GammaCwDatum::new("point", vec![vec![Cell::new("z", GroupId::Trivial)]])
    }

    #[test]
    fn single_free_vertex() {
        let c = free_point().expand().unwrap();
        assert_eq!(c.ranks(), &[1]);
        assert_eq!(bredon_homology(&free_point()).unwrap(), vec![FinAbGroup::free(1)]);
    }

    #[test]
    fn spec_round_trip() {
        for s in ["id", "triv->S4", "Z2->Z6", "triv->Z2xD4"] {
            assert_eq!(s.parse::<InductionSpec>().unwrap().to_string(), s);
        }
        assert!("Z2->S4".parse::<InductionSpec>().is_err());
        assert!("D3".parse::<InductionSpec>().is_err());
    }

    #[test]
    fn mismatched_spec() {
        let spec = InductionSpec::Cyclic { d: 2, m: 6 };
        assert!(spec.matrix(&GroupId::Cyclic(2), &GroupId::Cyclic(6)).is_ok());
        assert!(spec.matrix(&GroupId::Cyclic(3), &GroupId::Cyclic(6)).is_err());
        assert!(InductionSpec::Identity
            .matrix(&GroupId::Trivial, &GroupId::Cyclic(2))
            .is_err());
    }

    #[test]
    fn edge_into_dihedral_vertex() {
        // a free edge with both ends on one D3 vertex: the two inductions cancel
        let d = GammaCwDatum::new(
            "loop",
            vec![
                vec![Cell::new("v", GroupId::Dihedral(3))],
                vec![Cell::new("e", GroupId::Trivial).with_boundary(vec![
                    BoundaryTerm::new(1, "v", InductionSpec::FromTrivial(GroupId::Dihedral(3))),
                    BoundaryTerm::new(-1, "v", InductionSpec::FromTrivial(GroupId::Dihedral(3))),
                ])],
            ],
        );
        let h = bredon_homology(&d).unwrap();
        assert_eq!(h, vec![FinAbGroup::free(3), FinAbGroup::free(1)]);
    }

    #[test]
    fn unresolved_and_duplicate_labels() {
        let mut d = free_point();
        d.cells.push(vec![Cell::new("e", GroupId::Trivial)
            .with_boundary(vec![BoundaryTerm::new(1, "nowhere", InductionSpec::Identity)])]);
        assert_eq!(
            d.expand().unwrap_err(),
            Error::UnresolvedLabel {
                label: "nowhere".into(),
                dim: 0
            }
        );
        let mut d = free_point();
        d.cells[0].push(Cell::new("z", GroupId::Cyclic(2)));
        assert!(matches!(d.expand(), Err(Error::DuplicateLabel { .. })));
    }

    #[test]
    fn nonzero_square_is_rejected() {
        let d = GammaCwDatum::new(
            "bad",
            vec![
                vec![Cell::new("v", GroupId::Trivial)],
                vec![Cell::new("e", GroupId::Trivial)
                    .with_boundary(vec![BoundaryTerm::new(1, "v", InductionSpec::Identity)])],
                vec![Cell::new("f", GroupId::Trivial)
                    .with_boundary(vec![BoundaryTerm::new(1, "e", InductionSpec::Identity)])],
            ],
        );
        assert_eq!(
            d.expand().unwrap_err(),
            Error::BoundarySquareNonzero { degree: 2 }
        );
    }
}
