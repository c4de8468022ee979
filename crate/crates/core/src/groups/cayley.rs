use crate::error::{Error, Result};

use super::GroupId;

/// Largest order for which a Cayley table is materialised.
pub const MAX_BUILD_ORDER: u64 = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub members: Vec<usize>,
    pub element_order: usize,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// A finite group given by its multiplication table, with element 0 the
/// identity.
///
/// Classes are ordered identity first, then by increasing element order,
/// then by class size, then by smallest member index.
#[derive(Clone, Debug)]
pub struct FiniteGroupData {
    id: GroupId,
    order: usize,
    mult: Vec<u32>,
    inverse: Vec<usize>,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
    square_class: Vec<usize>,
    inverse_class: Vec<usize>,
}

impl FiniteGroupData {
    pub fn id(&self) -> &GroupId {
        &self.id
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b] as usize
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    /// Class containing the square of class `c`'s members.
    pub fn square_class(&self, c: usize) -> usize {
        self.square_class[c]
    }

    /// Class containing the inverses of class `c`'s members.
    pub fn inverse_class(&self, c: usize) -> usize {
        self.inverse_class[c]
    }

    /// Number of solutions of `g^2 = 1`, identity included.
    pub fn square_roots_of_identity(&self) -> usize {
        (0..self.order).filter(|&g| self.mul(g, g) == 0).count()
    }

    /// Whether every element is conjugate to its inverse.
    pub fn is_ambivalent(&self) -> bool {
        (0..self.classes.len()).all(|c| self.inverse_class[c] == c)
    }

    /// Classes up to `C ~ C^{-1}`; equals the number of irreducible real
    /// (and of quaternionic) representations.
    pub fn real_class_count(&self) -> usize {
        (0..self.classes.len())
            .filter(|&c| self.inverse_class[c] >= c)
            .count()
    }
}

/// Builds the Cayley table for a catalogue id and derives its class data.
pub fn build_group(id: &GroupId) -> Result<FiniteGroupData> {
    id.validate()?;
    if id.order() > MAX_BUILD_ORDER {
        return Err(Error::NotInCatalogue(format!(
            "{id} (order {} exceeds the table limit {MAX_BUILD_ORDER})",
            id.order()
        )));
    }
    let mult = multiplication_table(id);
    from_table(id.clone(), mult)
}

fn multiplication_table(id: &GroupId) -> Vec<u32> {
    let n = id.order() as usize;
    let mut table = vec![0u32; n * n];
    match id {
        GroupId::Trivial => {}
        GroupId::Cyclic(m) => {
            let m = *m as usize;
            for a in 0..m {
                for b in 0..m {
                    table[a * m + b] = ((a + b) % m) as u32;
                }
            }
        }
        GroupId::Klein4 => {
            for a in 0..4 {
                for b in 0..4 {
                    table[a * 4 + b] = (a ^ b) as u32;
                }
            }
        }
        GroupId::Dihedral(k) => {
            // index r + k*s encodes rot^r ref^s; ref rot = rot^-1 ref
            let k = *k as usize;
            for a in 0..n {
                let (r1, s1) = (a % k, a / k);
                for b in 0..n {
                    let (r2, s2) = (b % k, b / k);
                    let r = if s1 == 0 { r1 + r2 } else { r1 + k - r2 };
                    let r = r % k;
                    table[a * n + b] = (r + k * (s1 ^ s2)) as u32;
                }
            }
        }
        GroupId::Sym4 => {
            let perms = permutations_of_four();
            let index = |p: &[usize; 4]| perms.iter().position(|q| q == p).expect("closed");
            for (a, pa) in perms.iter().enumerate() {
                for (b, pb) in perms.iter().enumerate() {
                    let composed = [pa[pb[0]], pa[pb[1]], pa[pb[2]], pa[pb[3]]];
                    table[a * 24 + b] = index(&composed) as u32;
                }
            }
        }
        GroupId::DirectWithZ2(inner) => {
            let inner_table = multiplication_table(inner);
            let k = inner.order() as usize;
            for a in 0..n {
                for b in 0..n {
                    let x = inner_table[(a % k) * k + b % k] as usize;
                    table[a * n + b] = (x + k * ((a / k) ^ (b / k))) as u32;
                }
            }
        }
    }
    table
}

/// Lexicographic order, so the identity comes first.
fn permutations_of_four() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let mut seen = [false; 4];
                    if p.iter().all(|&x| !std::mem::replace(&mut seen[x], true)) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

fn from_table(id: GroupId, mult: Vec<u32>) -> Result<FiniteGroupData> {
    let n = id.order() as usize;
    let corrupt = |reason: String| Error::CorruptTable {
        group: id.clone(),
        reason,
    };
    let mul = |a: usize, b: usize| mult[a * n + b] as usize;

    for x in 0..n {
        if mul(0, x) != x || mul(x, 0) != x {
            return Err(corrupt(format!("element 0 is not an identity for {x}")));
        }
    }
    let mut inverse = vec![0; n];
    for (x, inv) in inverse.iter_mut().enumerate() {
        *inv = (0..n)
            .find(|&y| mul(x, y) == 0 && mul(y, x) == 0)
            .ok_or_else(|| corrupt(format!("element {x} has no inverse")))?;
    }
    for a in 0..n {
        for b in 0..n {
            let ab = mul(a, b);
            for c in 0..n {
                if mul(ab, c) != mul(a, mul(b, c)) {
                    return Err(corrupt(format!("associativity fails at ({a},{b},{c})")));
                }
            }
        }
    }

    let element_order = |g: usize| {
        let mut k = 1;
        let mut x = g;
        while x != 0 {
            x = mul(x, g);
            k += 1;
        }
        k
    };

    let mut seen = vec![false; n];
    let mut classes = Vec::new();
    for g in 0..n {
        if seen[g] {
            continue;
        }
        let mut members: Vec<usize> = (0..n).map(|h| mul(mul(h, g), inverse[h])).collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            seen[m] = true;
        }
        classes.push(ConjugacyClass {
            representative: members[0],
            element_order: element_order(members[0]),
            members,
        });
    }
    classes.sort_by_key(|c| (c.element_order, c.size(), c.representative));

    let mut class_of = vec![0; n];
    for (ci, c) in classes.iter().enumerate() {
        for &m in &c.members {
            class_of[m] = ci;
        }
    }
    let square_class = classes
        .iter()
        .map(|c| class_of[mul(c.representative, c.representative)])
        .collect();
    let inverse_class = classes
        .iter()
        .map(|c| class_of[inverse[c.representative]])
        .collect();

    Ok(FiniteGroupData {
        id,
        order: n,
        mult,
        inverse,
        classes,
        class_of,
        square_class,
        inverse_class,
    })
}
