//! Fuchsian signatures, their equivariant K-homology, and the signatures of
//! the Hecke congruence subgroups `Γ0(p)`.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactlinalg::FinAbGroup;

/// `[g, s; m1, ..., mr]`: genus, punctures and cone orders.
///
/// Period order is kept for display, but equality treats the periods as a
/// multiset.
#[derive(Clone, Debug, Eq)]
pub struct Signature {
    pub genus: u64,
    pub punctures: u64,
    pub periods: Vec<u64>,
}

impl Signature {
    pub fn new(genus: u64, punctures: u64, periods: Vec<u64>) -> Result<Self> {
        if let Some(m) = periods.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidSignature(format!("period {m} is below 2")));
        }
        Ok(Signature {
            genus,
            punctures,
            periods,
        })
    }

    pub fn is_cocompact(&self) -> bool {
        self.punctures == 0
    }

    pub fn period_count(&self) -> usize {
        self.periods.len()
    }

    fn sorted_periods(&self) -> Vec<u64> {
        let mut p = self.periods.clone();
        p.sort_unstable();
        p
    }

    /// `Σ (m_j - 1)`.
    fn excess(&self) -> u64 {
        self.periods.iter().map(|m| m - 1).sum()
    }
}

impl PartialEq for Signature {
    fn eq(&self, other: &Self) -> bool {
        self.genus == other.genus
            && self.punctures == other.punctures
            && self.sorted_periods() == other.sorted_periods()
    }
}

impl Hash for Signature {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.genus.hash(state);
        self.punctures.hash(state);
        self.sorted_periods().hash(state);
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let periods: Vec<String> = self.periods.iter().map(u64::to_string).collect();
        write!(f, "[{},{};{}]", self.genus, self.punctures, periods.join(","))
    }
}

impl FromStr for Signature {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::InvalidSignature(format!("`{s}`: {why}"));
        let body = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| bad("expected [g,s;m1,...]"))?;
        let (head, tail) = body.split_once(';').ok_or_else(|| bad("missing `;`"))?;
        let (g, p) = head.split_once(',').ok_or_else(|| bad("expected `g,s` before `;`"))?;
        let num = |t: &str| t.trim().parse::<u64>().map_err(|_| bad(&format!("`{}` is not a count", t.trim())));
        let periods = if tail.trim().is_empty() {
            Vec::new()
        } else {
            tail.split(',').map(num).collect::<Result<Vec<_>>>()?
        };
        Signature::new(num(g)?, num(p)?, periods)
    }
}

/// Closed-form Bredon homology with complex representation-ring
/// coefficients: `(H0, H1, H2)` for cocompact signatures and `(H0, H1)`
/// otherwise.
pub fn fuchsian_bredon(sig: &Signature) -> Vec<FinAbGroup> {
    let h0 = FinAbGroup::free((1 + sig.excess()) as usize);
    if sig.is_cocompact() {
        vec![h0, FinAbGroup::free(2 * sig.genus as usize), FinAbGroup::free(1)]
    } else {
        let h1 = 2 * sig.genus + sig.punctures - 1;
        vec![h0, FinAbGroup::free(h1 as usize)]
    }
}

/// `(K0, K1)`, the two groups of one Bott period.
pub fn equivariant_k(sig: &Signature) -> (FinAbGroup, FinAbGroup) {
    let r = sig.period_count() as u64;
    let sum: u64 = sig.periods.iter().sum();
    if sig.is_cocompact() {
        (
            FinAbGroup::free((2 + sum - r) as usize),
            FinAbGroup::free(2 * sig.genus as usize),
        )
    } else {
        (
            FinAbGroup::free((1 + sum - r) as usize),
            FinAbGroup::free((2 * sig.genus + sig.punctures - 1) as usize),
        )
    }
}

/// Residue class of a prime mod 12, with 2 and 3 on their own.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HeckeResidue {
    P2,
    P3,
    R1,
    R5,
    R7,
    R11,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HeckeCase {
    pub p: u64,
    pub residue: HeckeResidue,
}

impl HeckeCase {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let residue = match (p, p % 12) {
            (2, _) => HeckeResidue::P2,
            (3, _) => HeckeResidue::P3,
            (_, 1) => HeckeResidue::R1,
            (_, 5) => HeckeResidue::R5,
            (_, 7) => HeckeResidue::R7,
            _ => HeckeResidue::R11,
        };
        Ok(HeckeCase { p, residue })
    }

    /// First Betti number `N(p)` of `Γ0(p)`.
    pub fn betti(&self) -> u64 {
        let p = self.p;
        match self.residue {
            HeckeResidue::P2 | HeckeResidue::P3 => 1,
            HeckeResidue::R1 => (p - 7) / 6,
            HeckeResidue::R5 => (p + 1) / 6,
            HeckeResidue::R7 => (p - 1) / 6,
            HeckeResidue::R11 => (p + 7) / 6,
        }
    }

    pub fn periods(&self) -> Vec<u64> {
        match self.residue {
            HeckeResidue::P2 => vec![2],
            HeckeResidue::P3 => vec![3],
            HeckeResidue::R1 => vec![2, 2, 3, 3],
            HeckeResidue::R5 => vec![2, 2],
            HeckeResidue::R7 => vec![3, 3],
            HeckeResidue::R11 => vec![],
        }
    }
}

/// Signature `[0, N(p)+1; ...]` of `Γ0(p)`.
pub fn hecke_signature(p: u64) -> Result<Signature> {
    let case = HeckeCase::new(p)?;
    Signature::new(0, case.betti() + 1, case.periods())
}

/// `(H0, H1)` of `Γ0(p)` from the closed form.
pub fn hecke_bredon(p: u64) -> Result<(FinAbGroup, FinAbGroup)> {
    let mut h = fuchsian_bredon(&hecke_signature(p)?).into_iter();
    let h0 = h.next().unwrap_or_default();
    let h1 = h.next().unwrap_or_default();
    Ok((h0, h1))
}

/// Signature of `PSL2(Z)`.
pub fn modular_signature() -> Signature {
    Signature {
        genus: 0,
        punctures: 1,
        periods: vec![2, 3],
    }
}

/// Deterministic Miller–Rabin; the first twelve prime bases suffice below
/// `2^64`.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let mul = |a: u64, b: u64| ((u128::from(a) * u128::from(b)) % u128::from(n)) as u64;
    let pow = |mut base: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, base);
            }
            base = mul(base, base);
            e >>= 1;
        }
        acc
    };
    'witness: for &a in &BASES {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(s: &str) -> Signature {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(sig("[0,1;2,3]").to_string(), "[0,1;2,3]");
        assert_eq!(sig(" [ 2 , 0 ; ] ").to_string(), "[2,0;]");
        assert_eq!(sig("[0,2;3,2]"), sig("[0,2;2,3]"));
        assert_ne!(sig("[0,2;2,2]"), sig("[0,2;2]"));
        for bad in ["0,1;2", "[0,1,2]", "[0;2]", "[0,1;1]", "[a,1;]", "[0,1;2,]"] {
            assert!(bad.parse::<Signature>().is_err(), "{bad}");
        }
    }

    #[test]
    fn k_groups() {
        assert_eq!(equivariant_k(&sig("[0,1;2,3]")), (FinAbGroup::free(4), FinAbGroup::zero()));
        assert_eq!(equivariant_k(&sig("[0,0;2,3,7]")), (FinAbGroup::free(11), FinAbGroup::zero()));
        assert_eq!(equivariant_k(&sig("[1,0;]")), (FinAbGroup::free(2), FinAbGroup::free(2)));
    }

    #[test]
    fn hecke_signatures() {
        assert_eq!(hecke_signature(13).unwrap(), sig("[0,2;2,2,3,3]"));
        assert_eq!(hecke_signature(11).unwrap(), sig("[0,4;]"));
        assert_eq!(hecke_signature(5).unwrap(), sig("[0,2;2,2]"));
        assert_eq!(hecke_signature(2).unwrap(), sig("[0,2;2]"));
        assert_eq!(hecke_signature(3).unwrap(), sig("[0,2;3]"));
        assert_eq!(hecke_signature(9).unwrap_err(), Error::NotPrime(9));
    }

    #[test]
    fn hecke_homology() {
        let f = FinAbGroup::free;
        assert_eq!(hecke_bredon(2).unwrap(), (f(2), f(1)));
        assert_eq!(hecke_bredon(19).unwrap(), (f(5), f(3)));
        assert_eq!(hecke_bredon(23).unwrap(), (f(1), f(5)));
    }

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(3_215_031_751));
        assert!(!is_prime(u64::MAX));
    }
}
