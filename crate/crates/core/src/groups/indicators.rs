use crate::error::{Error, Result};

use super::cayley::{build_group, FiniteGroupData, MAX_BUILD_ORDER};
use super::tables::group_with_table;
use super::GroupId;

/// The character `k ↦ ζ^{jk}` of `Z_m`, named by its residue `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CyclicCharacter {
    pub modulus: u64,
    pub index: u64,
}

impl CyclicCharacter {
    /// Reduces `index` mod `modulus`. Panics on modulus 0.
    pub fn new(modulus: u64, index: u64) -> Self {
        assert!(modulus >= 1, "cyclic character needs a positive modulus");
        CyclicCharacter {
            modulus,
            index: index % modulus,
        }
    }
}

/// `(1/|G|) Σ_g χ(g²)`, summed class by class through the square map.
pub fn fs_indicator(g: &FiniteGroupData, chi: &[i64]) -> Result<i64> {
    let classes = g.classes();
    if chi.len() != classes.len() {
        return Err(Error::CorruptTable {
            group: g.id().clone(),
            reason: format!("character has {} values for {} classes", chi.len(), classes.len()),
        });
    }
    let total: i64 = classes
        .iter()
        .enumerate()
        .map(|(c, class)| class.size() as i64 * chi[g.square_class(c)])
        .sum();
    let order = g.order() as i64;
    if total % order != 0 || !(-1..=1).contains(&(total / order)) {
        return Err(Error::CorruptTable {
            group: g.id().clone(),
            reason: format!("indicator sum {total} is not in {{-order, 0, order}}"),
        });
    }
    Ok(total / order)
}

/// `(1/m) Σ_k ζ^{2jk}` is 1 when `ζ^{2j} = 1` and 0 otherwise.
pub fn cyclic_fs_indicator(chi: CyclicCharacter) -> i64 {
    i64::from((2 * u128::from(chi.index)) % u128::from(chi.modulus) == 0)
}

/// Whether every irreducible complex character has indicator 1, so that the
/// real, complex and quaternionic tables agree.
///
/// Groups with an integer table are checked character by character; the
/// remaining cyclic members use the involution count
/// `Σ ν(χ) χ(1) = #{g : g² = 1}` against `Σ χ(1) = |G|`.
pub fn all_tables_coincide(id: &GroupId) -> bool {
    if id.validate().is_err() {
        return false;
    }
    if id.order() > MAX_BUILD_ORDER {
        return closed_form(id);
    }
    match group_with_table(id) {
        Ok((g, table)) => table
            .chars
            .iter()
            .all(|chi| fs_indicator(&g, chi) == Ok(1)),
        Err(_) => match build_group(id) {
            Ok(g) if id.is_abelian() => g.square_roots_of_identity() == g.order(),
            _ => false,
        },
    }
}

fn closed_form(id: &GroupId) -> bool {
    let cyclic_ok = |m: u64| (0..m).all(|j| cyclic_fs_indicator(CyclicCharacter::new(m, j)) == 1);
    match id {
        GroupId::Cyclic(m) => cyclic_ok(*m),
        GroupId::DirectWithZ2(inner) => match **inner {
            GroupId::Cyclic(m) => cyclic_ok(m),
            _ => false,
        },
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::character_table;

    #[test]
    fn trivial_characters_are_real() {
        for id in [GroupId::Trivial, GroupId::Dihedral(6), GroupId::Sym4] {
            let g = build_group(&id).unwrap();
            let ones = vec![1; g.classes().len()];
            assert_eq!(fs_indicator(&g, &ones).unwrap(), 1);
        }
    }

    #[test]
    fn dihedral_examples() {
        let d3 = build_group(&GroupId::Dihedral(3)).unwrap();
        let t3 = character_table(&GroupId::Dihedral(3)).unwrap();
        assert_eq!(fs_indicator(&d3, &t3.chars[1]).unwrap(), 1);
        let d4 = build_group(&GroupId::Dihedral(4)).unwrap();
        let t4 = character_table(&GroupId::Dihedral(4)).unwrap();
        assert_eq!(fs_indicator(&d4, &t4.chars[4]).unwrap(), 1);
    }

    #[test]
    fn non_integral_sum_is_an_error() {
        let d3 = build_group(&GroupId::Dihedral(3)).unwrap();
        assert!(fs_indicator(&d3, &[1, 0, 0]).is_err());
        assert!(fs_indicator(&d3, &[1, 1]).is_err());
    }

    #[test]
    fn cyclic_examples() {
        assert_eq!(cyclic_fs_indicator(CyclicCharacter::new(3, 0)), 1);
        assert_eq!(cyclic_fs_indicator(CyclicCharacter::new(3, 1)), 0);
        assert_eq!(cyclic_fs_indicator(CyclicCharacter::new(4, 2)), 1);
    }

    #[test]
    fn hypothesis() {
        assert!(all_tables_coincide(&GroupId::Sym4));
        assert!(all_tables_coincide(&GroupId::z2_times(GroupId::Sym4)));
        assert!(!all_tables_coincide(&GroupId::Cyclic(3)));
        assert!(!all_tables_coincide(&GroupId::Cyclic(1000)));
        assert!(!all_tables_coincide(&GroupId::z2_times(GroupId::Cyclic(4))));
    }
}
