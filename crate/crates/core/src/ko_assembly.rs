//! Assembling K- and KO-homology from Bredon homology when the
//! Atiyah–Hirzebruch spectral sequence has no room for differentials.

use std::collections::BTreeSet;
use std::fmt;

use crate::bredon::GammaCwDatum;
use crate::error::{Error, Result};
use crate::exactlinalg::FinAbGroup;
use crate::groups::{all_tables_coincide, GroupId};
use crate::par::Execution;

/// One Bott period of a graded group, with the degrees whose value is only
/// known up to an extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedGroup {
    groups: Vec<FinAbGroup>,
    extension_ambiguous: BTreeSet<usize>,
}

impl GradedGroup {
    /// Period is the number of groups and must be 2 or 8.
    pub fn new(groups: Vec<FinAbGroup>) -> Result<Self> {
        if groups.len() != 2 && groups.len() != 8 {
            return Err(Error::ShapeMismatch(format!(
                "graded group needs period 2 or 8, got {}",
                groups.len()
            )));
        }
        Ok(GradedGroup {
            groups,
            extension_ambiguous: BTreeSet::new(),
        })
    }

    pub fn with_ambiguity(mut self, degrees: impl IntoIterator<Item = usize>) -> Self {
        let period = self.period();
        self.extension_ambiguous
            .extend(degrees.into_iter().map(|d| d % period));
        self
    }

    pub fn period(&self) -> usize {
        self.groups.len()
    }

    pub fn groups(&self) -> &[FinAbGroup] {
        &self.groups
    }

    pub fn get(&self, degree: i64) -> &FinAbGroup {
        &self.groups[degree.rem_euclid(self.period() as i64) as usize]
    }

    pub fn is_ambiguous(&self, degree: i64) -> bool {
        let d = degree.rem_euclid(self.period() as i64) as usize;
        self.extension_ambiguous.contains(&d)
    }

    pub fn ambiguous_degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.extension_ambiguous.iter().copied()
    }
}

impl fmt::Display for GradedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.groups.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(", "))
    }
}

/// A coefficient group of K- or KO-theory of a point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PointCoefficient {
    Z,
    Z2,
    Zero,
}

impl PointCoefficient {
    pub fn group(self) -> FinAbGroup {
        match self {
            PointCoefficient::Z => FinAbGroup::free(1),
            PointCoefficient::Z2 => FinAbGroup::cyclic(2),
            PointCoefficient::Zero => FinAbGroup::zero(),
        }
    }

    /// `H ⊗ C ⊕ Tor(H', C)`.
    fn evaluate(self, h: &FinAbGroup, previous: &FinAbGroup) -> FinAbGroup {
        match self {
            PointCoefficient::Z => h.clone(),
            PointCoefficient::Z2 => h.tensor_z2().direct_sum(&previous.tor_z2()),
            PointCoefficient::Zero => FinAbGroup::zero(),
        }
    }
}

use PointCoefficient::{Zero as O, Z, Z2};

/// `KO_q(pt)` for `q = 0..7`.
pub const KO_COEFFICIENTS: [PointCoefficient; 8] = [Z, Z2, Z2, O, Z, O, O, O];

/// `K_q(pt)` for `q = 0, 1`.
pub const K_COEFFICIENTS: [PointCoefficient; 2] = [Z, O];

pub fn ko_point(q: i64) -> FinAbGroup {
    KO_COEFFICIENTS[q.rem_euclid(8) as usize].group()
}

pub fn ku_point(q: i64) -> FinAbGroup {
    K_COEFFICIENTS[q.rem_euclid(2) as usize].group()
}

/// `E²_{p,q}` over one period of rows, for `p = 0..=max_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct E2Page {
    columns: Vec<Vec<FinAbGroup>>,
}

impl E2Page {
    /// Columns indexed by `p`, each holding a full period of rows.
    pub fn from_columns(columns: Vec<Vec<FinAbGroup>>) -> Result<Self> {
        let period = columns.first().map_or(8, Vec::len);
        if columns.iter().any(|c| c.len() != period) || (period != 2 && period != 8) {
            return Err(Error::ShapeMismatch("page columns must share period 2 or 8".into()));
        }
        Ok(E2Page { columns })
    }

    pub fn period(&self) -> usize {
        self.columns.first().map_or(8, Vec::len)
    }

    pub fn max_p(&self) -> usize {
        self.columns.len().saturating_sub(1)
    }

    pub fn entry(&self, p: i64, q: i64) -> FinAbGroup {
        if p < 0 {
            return FinAbGroup::zero();
        }
        let period = self.period() as i64;
        self.columns
            .get(p as usize)
            .map(|c| c[q.rem_euclid(period) as usize].clone())
            .unwrap_or_default()
    }

    pub fn columns(&self) -> &[Vec<FinAbGroup>] {
        &self.columns
    }
}

/// `K0 = H0 ⊕ H2`, `K1 = H1`; refused when anything lives in degree 3 or
/// above, where a differential could be nonzero.
pub fn collapse_complex(h: &[FinAbGroup]) -> Result<(FinAbGroup, FinAbGroup)> {
    if let Some(d) = (3..h.len()).find(|&d| !h[d].is_zero()) {
        return Err(Error::CollapseNotJustified { degree: d });
    }
    let at = |d: usize| h.get(d).cloned().unwrap_or_default();
    Ok((at(0).direct_sum(&at(2)), at(1)))
}

pub fn collapse_graded(h: &[FinAbGroup]) -> Result<GradedGroup> {
    let (k0, k1) = collapse_complex(h)?;
    GradedGroup::new(vec![k0, k1])
}

/// The KO page built from complex Bredon homology, valid when every
/// stabiliser has real, complex and quaternionic tables equal.
pub fn ko_e2_page(h: &[FinAbGroup]) -> E2Page {
    let zero = FinAbGroup::zero();
    let mut columns: Vec<Vec<FinAbGroup>> = (0..=h.len())
        .map(|p| {
            let hp = h.get(p).unwrap_or(&zero);
            let prev = p.checked_sub(1).and_then(|k| h.get(k)).unwrap_or(&zero);
            KO_COEFFICIENTS
                .iter()
                .map(|c| c.evaluate(hp, prev))
                .collect()
        })
        .collect();
    while columns.len() > 1 && columns.last().is_some_and(|c| c.iter().all(FinAbGroup::is_zero)) {
        columns.pop();
    }
    E2Page { columns }
}

/// Reads KO off a page concentrated in column 0.
pub fn ko_column_collapse(page: &E2Page) -> Result<GradedGroup> {
    if let Some(p) = (1..page.columns.len())
        .find(|&p| page.columns[p].iter().any(|g| !g.is_zero()))
    {
        return Err(Error::MultiColumnPage { column: p });
    }
    let period = page.period();
    GradedGroup::new((0..period as i64).map(|q| page.entry(0, q)).collect())
}

/// Bredon homology of `X` as a `Γ × Z2` space with `Z2` acting trivially:
/// each group is tensored with `R_C(Z2) = Z²`.
pub fn kunneth_times_z2(h: &[FinAbGroup]) -> Result<Vec<FinAbGroup>> {
    h.iter()
        .enumerate()
        .map(|(d, g)| {
            if g.is_free() {
                Ok(FinAbGroup::free(2 * g.free_rank()))
            } else {
                Err(Error::TorsionInKunneth(g.to_string(), d))
            }
        })
        .collect()
}

fn check_stabilisers(datum: &GammaCwDatum, wrap: impl Fn(&GroupId) -> GroupId) -> Result<()> {
    for cell in datum.cells.iter().flatten() {
        let g = wrap(&cell.stabiliser);
        if !all_tables_coincide(&g) {
            return Err(Error::HypothesisFails(g));
        }
    }
    Ok(())
}

/// KO-homology of a datum whose page has a single column.
pub fn ko_homology(datum: &GammaCwDatum, exec: Execution) -> Result<GradedGroup> {
    check_stabilisers(datum, GroupId::clone)?;
    let h = datum.expand()?.all_homology(exec);
    ko_column_collapse(&ko_e2_page(&h))
}

/// KO-homology for the product of the datum's group with a central `Z2`.
pub fn ko_homology_times_z2(datum: &GammaCwDatum, exec: Execution) -> Result<GradedGroup> {
    check_stabilisers(datum, |g| GroupId::z2_times(g.clone()).canonical())?;
    let h = datum.expand()?.all_homology(exec);
    ko_column_collapse(&ko_e2_page(&kunneth_times_z2(&h)?))
}
