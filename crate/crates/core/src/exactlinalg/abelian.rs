use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A finitely generated abelian group `Z^r + Z/d1 + ... + Z/dk` in invariant
/// factor form: every `di >= 2` and `di | d(i+1)`.
///
/// The form is canonical, so structural equality is group isomorphism.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinAbGroup {
    free_rank: usize,
    torsion: Vec<BigUint>,
}

impl FinAbGroup {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FinAbGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// `Z/n`; `n = 0` gives `Z` and `n = 1` the zero group.
    pub fn cyclic(n: u64) -> Self {
        Self::new(0, [BigUint::from(n)])
    }

    /// `(Z/n)^k`.
    pub fn elementary(n: u64, k: usize) -> Self {
        Self::new(0, std::iter::repeat_n(BigUint::from(n), k))
    }

    /// Normalises an arbitrary list of cyclic orders. Orders of 0 count as
    /// free summands and orders of 1 vanish.
    pub fn new(free_rank: usize, cyclic_orders: impl IntoIterator<Item = BigUint>) -> Self {
        let mut free_rank = free_rank;
        let mut orders: Vec<BigUint> = Vec::new();
        for d in cyclic_orders {
            if d.is_zero() {
                free_rank += 1;
            } else if !d.is_one() {
                orders.push(d);
            }
        }
        FinAbGroup {
            free_rank,
            torsion: invariant_factor_chain(orders),
        }
    }

    /// Builds a group from machine-sized torsion orders.
    pub fn with_torsion(free_rank: usize, orders: &[u64]) -> Self {
        Self::new(free_rank, orders.iter().map(|&d| BigUint::from(d)))
    }

    /// Cokernel data of a boundary: `free_rank` free summands plus one
    /// `Z/d` for every invariant factor `d`.
    pub(crate) fn from_factors(free_rank: usize, factors: &[BigInt]) -> Self {
        Self::new(
            free_rank,
            factors
                .iter()
                .map(|d| d.magnitude().clone())
                .filter(|d| !d.is_one()),
        )
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigUint] {
        &self.torsion
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Number of `Z/2` summands in `G/2G`, i.e. the dimension of `G ⊗ Z/2`.
    pub fn mod_two_rank(&self) -> usize {
        self.free_rank + self.even_torsion_count()
    }

    fn even_torsion_count(&self) -> usize {
        self.torsion.iter().filter(|d| d.is_even()).count()
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<BigUint> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }

    pub fn direct_sum(&self, other: &FinAbGroup) -> FinAbGroup {
        Self::new(
            self.free_rank + other.free_rank,
            self.torsion.iter().chain(other.torsion.iter()).cloned(),
        )
    }

    /// Direct sum of `k` copies of `self`.
    pub fn power(&self, k: usize) -> FinAbGroup {
        Self::new(
            self.free_rank * k,
            (0..k).flat_map(|_| self.torsion.iter().cloned()),
        )
    }

    /// `G ⊗ Z/2`: each free summand and each even-order cyclic summand
    /// contributes one `Z/2`.
    pub fn tensor_z2(&self) -> FinAbGroup {
        Self::elementary(2, self.mod_two_rank())
    }

    /// `Tor(G, Z/2)`: one `Z/2` per even-order cyclic summand.
    pub fn tor_z2(&self) -> FinAbGroup {
        Self::elementary(2, self.even_torsion_count())
    }
}

/// Replaces pairs by (gcd, lcm) until the list is a divisor chain. Avoids
/// factoring, so it is exact for orders of any size.
fn invariant_factor_chain(mut orders: Vec<BigUint>) -> Vec<BigUint> {
    orders.sort();
    let n = orders.len();
    for i in 0..n {
        for j in i + 1..n {
            let g = orders[i].gcd(&orders[j]);
            if g != orders[i] {
                let l = orders[i].lcm(&orders[j]);
                orders[i] = g;
                orders[j] = l;
            }
        }
    }
    orders.retain(|d| !d.is_one());
    orders
}

pub fn direct_sum(a: &FinAbGroup, b: &FinAbGroup) -> FinAbGroup {
    a.direct_sum(b)
}

pub fn tensor_z2(g: &FinAbGroup) -> FinAbGroup {
    g.tensor_z2()
}

pub fn tor_z2(g: &FinAbGroup) -> FinAbGroup {
    g.tor_z2()
}

/// Canonical rendering: `0`, or `Z^r` / `Z` followed by `Z/d` terms, joined
/// with ` + `.
impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms = Vec::with_capacity(self.torsion.len() + 1);
        match self.free_rank {
            0 => {}
            1 => terms.push("Z".to_string()),
            r => terms.push(format!("Z^{r}")),
        }
        terms.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        f.write_str(&terms.join(" + "))
    }
}

impl FromStr for FinAbGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut free = 0usize;
        let mut orders = Vec::new();
        for term in s.split('+').map(str::trim) {
            let bad = || Error::parse(1, format!("bad group term `{term}`"));
            if term == "Z" {
                free += 1;
            } else if let Some(r) = term.strip_prefix("Z^") {
                free += r.parse::<usize>().map_err(|_| bad())?;
            } else if let Some(d) = term.strip_prefix("Z/") {
                orders.push(d.parse::<BigUint>().map_err(|_| bad())?);
            } else {
                return Err(bad());
            }
        }
        Ok(Self::new(free, orders))
    }
}

impl FinAbGroup {
    /// Torsion orders as machine integers, when they fit.
    pub fn torsion_u64(&self) -> Option<Vec<u64>> {
        self.torsion.iter().map(ToPrimitive::to_u64).collect()
    }
}
