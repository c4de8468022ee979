use crate::error::{Error, Result};
use crate::par::{self, Execution};

use super::abelian::FinAbGroup;
use super::matrix::IntMatrix;
use super::snf::invariant_factors;

/// Bounded chain complex of free Z-modules.
///
/// `boundaries[n]` is the matrix of `C_{b+n+1} -> C_{b+n}` where `b` is the
/// bottom degree, with rows indexing the target basis and columns the source
/// basis. `∂∘∂ = 0` is checked on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntChainComplex {
    bottom_degree: i64,
    ranks: Vec<usize>,
    boundaries: Vec<IntMatrix>,
}

impl IntChainComplex {
    pub fn new(bottom_degree: i64, ranks: Vec<usize>, boundaries: Vec<IntMatrix>) -> Result<Self> {
        let expected = ranks.len().saturating_sub(1);
        if boundaries.len() != expected {
            return Err(Error::ShapeMismatch(format!(
                "{} chain groups need {expected} boundary maps, got {}",
                ranks.len(),
                boundaries.len()
            )));
        }
        for (n, b) in boundaries.iter().enumerate() {
            if b.shape() != (ranks[n], ranks[n + 1]) {
                return Err(Error::ShapeMismatch(format!(
                    "boundary out of degree {} is {}x{}, expected {}x{}",
                    bottom_degree + n as i64 + 1,
                    b.rows(),
                    b.cols(),
                    ranks[n],
                    ranks[n + 1]
                )));
            }
        }
        for n in 1..boundaries.len() {
            if !boundaries[n - 1].product(&boundaries[n])?.is_zero() {
                return Err(Error::BoundarySquareNonzero {
                    degree: bottom_degree + n as i64 + 1,
                });
            }
        }
        Ok(IntChainComplex {
            bottom_degree,
            ranks,
            boundaries,
        })
    }

    /// The complex with no chain groups at all.
    pub fn empty() -> Self {
        IntChainComplex {
            bottom_degree: 0,
            ranks: Vec::new(),
            boundaries: Vec::new(),
        }
    }

    pub fn bottom_degree(&self) -> i64 {
        self.bottom_degree
    }

    /// Highest degree carrying a chain group, or `bottom_degree - 1` when empty.
    pub fn top_degree(&self) -> i64 {
        self.bottom_degree + self.ranks.len() as i64 - 1
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn boundaries(&self) -> &[IntMatrix] {
        &self.boundaries
    }

    pub fn rank(&self, degree: i64) -> usize {
        self.index(degree).map_or(0, |i| self.ranks[i])
    }

    /// Matrix of `∂_degree : C_degree -> C_{degree-1}`, if both ends exist.
    pub fn boundary(&self, degree: i64) -> Option<&IntMatrix> {
        let i = self.index(degree)?;
        i.checked_sub(1).map(|k| &self.boundaries[k])
    }

    fn index(&self, degree: i64) -> Option<usize> {
        let i = degree - self.bottom_degree;
        (i >= 0 && (i as usize) < self.ranks.len()).then_some(i as usize)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(i, &r)| sign(self.bottom_degree + i as i64) * r as i64)
            .sum()
    }

    /// `ker ∂_n / im ∂_{n+1}`; zero outside the support.
    pub fn homology(&self, degree: i64) -> FinAbGroup {
        let Some(i) = self.index(degree) else {
            return FinAbGroup::zero();
        };
        let outgoing = self
            .boundary(degree)
            .map_or(0, |m| invariant_factors(m).len());
        let incoming = self
            .boundary(degree + 1)
            .map(invariant_factors)
            .unwrap_or_default();
        homology_from_factors(self.ranks[i], outgoing, &incoming)
    }

    /// Homology in every degree of the support, bottom first.
    ///
    /// Each boundary is reduced once; with [`Execution::Parallel`] the
    /// reductions run concurrently.
    pub fn all_homology(&self, exec: Execution) -> Vec<FinAbGroup> {
        let factors: Vec<Vec<num_bigint::BigInt>> =
            par::map(exec, &self.boundaries, invariant_factors);
        (0..self.ranks.len())
            .map(|i| {
                let outgoing = i.checked_sub(1).map_or(0, |k| factors[k].len());
                let incoming: &[num_bigint::BigInt] =
                    factors.get(i).map(Vec::as_slice).unwrap_or(&[]);
                homology_from_factors(self.ranks[i], outgoing, incoming)
            })
            .collect()
    }
}

fn homology_from_factors(
    chain_rank: usize,
    outgoing_rank: usize,
    incoming: &[num_bigint::BigInt],
) -> FinAbGroup {
    let free = chain_rank - outgoing_rank - incoming.len();
    FinAbGroup::from_factors(free, incoming)
}

fn sign(n: i64) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

pub fn homology(c: &IntChainComplex, degree: i64) -> FinAbGroup {
    c.homology(degree)
}
