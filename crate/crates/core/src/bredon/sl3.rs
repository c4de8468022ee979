//! The Bredon complex of the proper model for `SL3(Z)`.
//!
//! Only the Smith forms of the three differentials are available, so the
//! shipped matrices are a representative of their equivalence class: the
//! block forms realised on compatible bases (the face killed by `∂3` is the
//! one outside the `I10` block of `∂2`), then each chain group is given a
//! deterministic unimodular change of basis so that the reduction does real
//! work.

use num_bigint::BigInt;

use crate::exactlinalg::IntMatrix;
use crate::groups::GroupId;

use super::{Cell, GammaCwDatum};

/// Orbits of cells in dimensions 0 to 3.
pub const SL3_CELL_COUNTS: [usize; 4] = [5, 8, 5, 1];

/// `rank R_C` summed over each dimension's stabilisers.
pub const SL3_CHAIN_RANKS: [usize; 4] = [26, 28, 11, 1];

fn cells() -> Vec<Vec<Cell>> {
    use GroupId::*;
    let dim = |prefix: &str, groups: Vec<GroupId>| {
        groups
            .into_iter()
            .enumerate()
            .map(|(i, g)| Cell::new(format!("{prefix}{}", i + 1), g))
            .collect()
    };
    vec![
        dim("v", vec![Sym4, Dihedral(6), Sym4, Dihedral(4), Sym4]),
        dim(
            "e",
            vec![
                Klein4,
                Dihedral(3),
                Dihedral(3),
                Cyclic(2),
                Cyclic(2),
                Klein4,
                Dihedral(4),
                Dihedral(4),
            ],
        ),
        dim("t", vec![Cyclic(2), Trivial, Klein4, Cyclic(2), Cyclic(2)]),
        dim("T", vec![Trivial]),
    ]
}

fn block_forms() -> [IntMatrix; 3] {
    let [c0, c1, c2, c3] = SL3_CHAIN_RANKS;
    let mut d1 = IntMatrix::zeros(c0, c1);
    for i in 0..18 {
        d1.set(i, i, 1.into());
    }
    let mut d2 = IntMatrix::zeros(c1, c2);
    for i in 0..10 {
        d2.set(18 + i, i, 1.into());
    }
    let mut d3 = IntMatrix::zeros(c2, c3);
    d3.set(10, 0, 1.into());
    [d1, d2, d3]
}

/// A unimodular `U` and its inverse, built from `2n` elementary row
/// operations chosen by a fixed xorshift stream.
pub(crate) fn scramble(n: usize, seed: u64) -> (IntMatrix, IntMatrix) {
    let mut u = IntMatrix::identity(n);
    let mut inv = IntMatrix::identity(n);
    if n < 2 {
        return (u, inv);
    }
    let mut state = seed | 1;
    let mut next = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    for _ in 0..2 * n {
        let i = (next() % n as u64) as usize;
        let j = (next() % n as u64) as usize;
        if i == j {
            continue;
        }
        let c = BigInt::from(if next() % 2 == 0 { 1 } else { -1 });
        // u <- (I + c e_ij) u ; inv <- inv (I - c e_ij)
        for k in 0..n {
            let v = u.get(j, k) * &c;
            u.add_at(i, k, &v);
            let w = -(inv.get(k, i) * &c);
            inv.add_at(k, j, &w);
        }
    }
    (u, inv)
}

/// The shipped `SL3(Z)` datum, flagged as known only up to SNF equivalence.
pub fn sl3_datum() -> GammaCwDatum {
    let bases: Vec<(IntMatrix, IntMatrix)> = SL3_CHAIN_RANKS
        .iter()
        .enumerate()
        .map(|(n, &r)| scramble(r, 0x5d3_0000 + n as u64))
        .collect();
    let raw = block_forms()
        .iter()
        .enumerate()
        .map(|(k, d)| {
            // ∂'_n = U_{n-1} ∂_n U_n^{-1} with n = k + 1
            let left = &bases[k].0;
            let right_inv = &bases[k + 1].1;
            left.product(d)
                .and_then(|m| m.product(right_inv))
                .expect("shapes are fixed")
        })
        .collect();
    GammaCwDatum {
        name: "sl3".into(),
        snf_equivalent: true,
        cells: cells(),
        raw_boundaries: Some(raw),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bredon::bredon_homology;
    use crate::exactlinalg::FinAbGroup;

    #[test]
    fn ranks_come_from_stabilisers() {
        let d = sl3_datum();
        let counts: Vec<usize> = d.cells.iter().map(Vec::len).collect();
        assert_eq!(counts, SL3_CELL_COUNTS);
        assert_eq!(d.chain_ranks(), SL3_CHAIN_RANKS);
    }

    #[test]
    fn homology_is_concentrated_in_degree_zero() {
        let h = bredon_homology(&sl3_datum()).unwrap();
        let z = FinAbGroup::zero();
        assert_eq!(h, vec![FinAbGroup::free(8), z.clone(), z.clone(), z]);
    }

    #[test]
    fn scramble_is_unimodular_and_nontrivial() {
        for (n, seed) in [(26, 1), (11, 7), (5, 3)] {
            let (u, inv) = scramble(n, seed);
            assert_eq!(u.product(&inv).unwrap(), IntMatrix::identity(n));
            assert_ne!(u, IntMatrix::identity(n));
        }
        let raw = sl3_datum().raw_boundaries.unwrap();
        assert!(raw.iter().all(|m| m.max_abs_entry() > 1.into()));
    }
}
