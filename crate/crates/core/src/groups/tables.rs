use crate::error::{Error, Result};

use super::cayley::{build_group, FiniteGroupData};
use super::GroupId;

/// Integer character table; columns follow the group's class order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub group: GroupId,
    pub chars: Vec<Vec<i64>>,
    pub degrees: Vec<i64>,
}

impl CharacterTable {
    fn from_rows(group: GroupId, chars: Vec<Vec<i64>>) -> Self {
        let degrees = chars.iter().map(|row| row[0]).collect();
        CharacterTable {
            group,
            chars,
            degrees,
        }
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    /// Checks squareness, both orthogonality relations and `Σ d² = |G|`
    /// against the class data of `g`.
    pub fn validate(&self, g: &FiniteGroupData) -> Result<()> {
        let corrupt = |reason: String| Error::CorruptTable {
            group: self.group.clone(),
            reason,
        };
        let k = g.classes().len();
        let order = g.order() as i64;
        if self.chars.len() != k || self.chars.iter().any(|r| r.len() != k) {
            return Err(corrupt(format!("table is not {k}x{k}")));
        }
        let sizes: Vec<i64> = g.classes().iter().map(|c| c.size() as i64).collect();
        // values are real, so conj(chi(g)) = chi(g)
        for i in 0..k {
            for j in 0..k {
                let ip: i64 = (0..k)
                    .map(|c| sizes[c] * self.chars[i][c] * self.chars[j][c])
                    .sum();
                let expected = if i == j { order } else { 0 };
                if ip != expected {
                    return Err(corrupt(format!("rows {i},{j} have inner product {ip}/{order}")));
                }
            }
        }
        for (a, size) in sizes.iter().enumerate() {
            for b in 0..k {
                let s: i64 = self.chars.iter().map(|chi| chi[a] * chi[b]).sum();
                let expected = if a == b { order / size } else { 0 };
                if s != expected {
                    return Err(corrupt(format!("columns {a},{b} are not orthogonal")));
                }
            }
        }
        let degree_sum: i64 = self.degrees.iter().map(|d| d * d).sum();
        if degree_sum != order {
            return Err(corrupt(format!("degree squares sum to {degree_sum}")));
        }
        Ok(())
    }
}

/// Character table of a catalogue group whose characters are all integer
/// valued. Cyclic groups of order at least 3 are refused.
pub fn character_table(id: &GroupId) -> Result<CharacterTable> {
    Ok(group_with_table(id)?.1)
}

pub(crate) fn group_with_table(id: &GroupId) -> Result<(FiniteGroupData, CharacterTable)> {
    let data = build_group(id)?;
    let table = raw_table(id, &data)?;
    table.validate(&data)?;
    Ok((data, table))
}

fn raw_table(id: &GroupId, data: &FiniteGroupData) -> Result<CharacterTable> {
    let rows: Vec<Vec<i64>> = match id {
        GroupId::Trivial | GroupId::Cyclic(1) => vec![vec![1]],
        GroupId::Cyclic(2) => vec![vec![1, 1], vec![1, -1]],
        GroupId::Cyclic(_) => return Err(Error::UnsupportedCharacterTable(id.clone())),
        // e, a, b, ab
        GroupId::Klein4 => vec![
            vec![1, 1, 1, 1],
            vec![1, 1, -1, -1],
            vec![1, -1, 1, -1],
            vec![1, -1, -1, 1],
        ],
        // e, reflections, rotations
        GroupId::Dihedral(3) => vec![vec![1, 1, 1], vec![1, -1, 1], vec![2, 0, -1]],
        // e, r^2, {s, r^2 s}, {rs, r^3 s}, {r, r^3}
        GroupId::Dihedral(4) => vec![
            vec![1, 1, 1, 1, 1],
            vec![1, 1, -1, -1, 1],
            vec![1, 1, 1, -1, -1],
            vec![1, 1, -1, 1, -1],
            vec![2, -2, 0, 0, 0],
        ],
        // e, r^3, even reflections, odd reflections, {r^2, r^4}, {r, r^5}
        GroupId::Dihedral(6) => vec![
            vec![1, 1, 1, 1, 1, 1],
            vec![1, 1, -1, -1, 1, 1],
            vec![1, -1, 1, -1, 1, -1],
            vec![1, -1, -1, 1, 1, -1],
            vec![2, -2, 0, 0, -1, 1],
            vec![2, 2, 0, 0, -1, -1],
        ],
        // e, (12)(34), (12), (123), (1234)
        GroupId::Sym4 => vec![
            vec![1, 1, 1, 1, 1],
            vec![1, 1, -1, 1, -1],
            vec![2, 2, 0, -1, 0],
            vec![3, -1, 1, 0, -1],
            vec![3, -1, -1, 0, 1],
        ],
        GroupId::Dihedral(_) => return Err(Error::NotInCatalogue(id.to_string())),
        GroupId::DirectWithZ2(inner) => return product_with_z2(id, inner, data),
    };
    Ok(CharacterTable::from_rows(id.clone(), rows))
}

/// Tensor construction: the irreducibles of `Z2 x H` are `chi ⊗ eps` with
/// `eps` the two characters of `Z2`.
fn product_with_z2(
    id: &GroupId,
    inner: &GroupId,
    data: &FiniteGroupData,
) -> Result<CharacterTable> {
    let (inner_data, inner_table) = group_with_table(inner)?;
    let k = inner_data.order();
    let rows = inner_table
        .chars
        .iter()
        .flat_map(|chi| [(chi, 1i64), (chi, -1i64)])
        .map(|(chi, eps)| {
            data.classes()
                .iter()
                .map(|c| {
                    let (h, z) = (c.representative % k, c.representative / k);
                    let sign = if z == 1 { eps } else { 1 };
                    chi[inner_data.class_of(h)] * sign
                })
                .collect()
        })
        .collect();
    Ok(CharacterTable::from_rows(id.clone(), rows))
}
