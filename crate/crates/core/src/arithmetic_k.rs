//! K-theory of `PSL2(Z[1/p])` and `SL2(Z[1/p])` through the amalgam
//! `PSL2(Z) *_{Γ0(p)} PSL2(Z)`, and the reduced C*-algebra groups for
//! `p ≡ 11 (mod 12)`.
//!
//! With `H1(PSL2(Z)) = 0` the Mayer–Vietoris sequence splits into
//! `H2(Γ) ≅ H1(Γ0(p))` and a four-term sequence
//! `0 → H1(Γ) → H0(Γ0(p)) → H0(PSL2(Z))² → H0(Γ) → 0`
//! whose outer term `H0(Γ)` is the colimit over the finite subgroups.
//! Everything is free, so ranks decide the groups.

use crate::error::{Error, Result};
use crate::exactlinalg::FinAbGroup;
use crate::fuchsian::{fuchsian_bredon, hecke_bredon, hecke_signature, modular_signature, HeckeCase};
use crate::ko_assembly::{collapse_complex, ko_point, ku_point, GradedGroup};

/// Conjugacy classes of finite-order elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ClassCount {
    pub identity: u64,
    pub order2: u64,
    pub order3: u64,
    pub total: u64,
}

/// Conjugacy classes of maximal finite subgroups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MaximalSubgroupList {
    pub z2_classes: u64,
    pub z3_classes: u64,
}

impl ClassCount {
    /// A `Z3` holds two nontrivial elements, assumed to lie in distinct
    /// element classes.
    pub fn maximal_subgroups(&self) -> MaximalSubgroupList {
        MaximalSubgroupList {
            z2_classes: self.order2,
            z3_classes: self.order3 / 2,
        }
    }
}

/// Each factor `PSL2(Z)` has one class of order 2 and two of order 3. The
/// copies fuse across the amalgam exactly when `Γ0(p)` has torsion of
/// that order.
pub fn class_count_psl(p: u64) -> Result<ClassCount> {
    let periods = hecke_signature(p)?.periods;
    let order2 = if periods.contains(&2) { 1 } else { 2 };
    let order3 = if periods.contains(&3) { 2 } else { 4 };
    Ok(ClassCount {
        identity: 1,
        order2,
        order3,
        total: 1 + order2 + order3,
    })
}

fn require_free(g: FinAbGroup, what: &str) -> Result<usize> {
    if g.is_free() {
        Ok(g.free_rank())
    } else {
        Err(Error::UnexpectedTorsion(format!("{what}: {g}")))
    }
}

/// `(H0, H1, H2)` of `PSL2(Z[1/p])` with `R_C` coefficients.
pub fn psl_zp_bredon(p: u64) -> Result<Vec<FinAbGroup>> {
    let (h0_hecke, h1_hecke) = hecke_bredon(p)?;
    let modular = fuchsian_bredon(&modular_signature());
    let factor_h0 = require_free(modular[0].clone(), "H0(PSL2(Z))")?;
    if !modular[1].is_zero() {
        return Err(Error::UnexpectedTorsion("H1(PSL2(Z)) is nonzero".into()));
    }
    let h2 = require_free(h1_hecke, "H1(Γ0(p))")?;
    let h0_amalgam = require_free(h0_hecke, "H0(Γ0(p))")?;
    let h0 = class_count_psl(p)?.total as usize;
    // alternating sum of the four-term sequence vanishes
    let h1 = (h0_amalgam + h0)
        .checked_sub(2 * factor_h0)
        .ok_or_else(|| {
            Error::NegativeRank(format!(
                "H1 for p = {p}: {h0_amalgam} - {} + {h0}",
                2 * factor_h0
            ))
        })?;
    Ok(vec![
        FinAbGroup::free(h0),
        FinAbGroup::free(h1),
        FinAbGroup::free(h2),
    ])
}

/// `(K0, K1)` of `PSL2(Z[1/p])`.
pub fn psl_zp_k(p: u64) -> Result<(FinAbGroup, FinAbGroup)> {
    collapse_complex(&psl_zp_bredon(p)?)
}

/// `(K0, K1)` of `SL2(Z[1/p])`: two copies of the projective answer.
pub fn sl_zp_k(p: u64) -> Result<(FinAbGroup, FinAbGroup)> {
    let (k0, k1) = psl_zp_k(p)?;
    Ok((k0.power(2), k1.power(2)))
}

fn p11_case(p: u64) -> Result<(MaximalSubgroupList, usize)> {
    let case = HeckeCase::new(p)?;
    if p % 12 != 11 {
        return Err(Error::WrongResidue(p));
    }
    let maximal = class_count_psl(p)?.maximal_subgroups();
    Ok((maximal, case.betti() as usize))
}

/// Reduced real group C*-algebra of `Z2` is `R`, of `Z3` is `C`.
fn reduced_ko_z2(n: i64) -> FinAbGroup {
    ko_point(n)
}

fn reduced_ko_z3(n: i64) -> FinAbGroup {
    ku_point(n)
}

/// `K_*(C*_r(Γ))` for `p ≡ 11`: reduced K of the maximal finite subgroups
/// plus `K_*` of the wedge of `b1(Γ0(p))` two-spheres.
pub fn cstar_k_p11(p: u64) -> Result<(FinAbGroup, FinAbGroup)> {
    let (maximal, b) = p11_case(p)?;
    // reduced K0 of C*(Z_m) has rank m - 1; reduced K1 vanishes
    let finite = maximal.z2_classes as usize + 2 * maximal.z3_classes as usize;
    Ok((FinAbGroup::free(finite + 1 + b), FinAbGroup::zero()))
}

/// `KO_*(C*_r(Γ; R))` for `p ≡ 11`, with the extension problems in degrees
/// 1, 3 and 4 left flagged.
pub fn cstar_ko_p11(p: u64) -> Result<GradedGroup> {
    let (maximal, b) = p11_case(p)?;
    let groups = (0..8)
        .map(|n| {
            reduced_ko_z2(n)
                .power(maximal.z2_classes as usize)
                .direct_sum(&reduced_ko_z3(n).power(maximal.z3_classes as usize))
                .direct_sum(&ko_point(n))
                .direct_sum(&ko_point(n - 2).power(b))
        })
        .collect();
    Ok(GradedGroup::new(groups)?.with_ambiguity([1, 3, 4]))
}
