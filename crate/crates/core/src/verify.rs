//! Regression of every tabulated result against the library, plus the
//! closed-form versus chain-level sweeps.
//!
//! Expected values here are transcribed per residue class, independently of
//! the formulas the library evaluates.

use std::fmt;
use std::ops::RangeInclusive;

use crate::arithmetic_k::{class_count_psl, cstar_k_p11, cstar_ko_p11, psl_zp_bredon, psl_zp_k, sl_zp_k};
use crate::bredon::{
    bredon_homology_with, fuchsian_cocompact_datum, fuchsian_noncocompact_datum,
    lifted_fuchsian_datum, sl3_datum, GammaCwDatum,
};
use crate::error::Result;
use crate::exactlinalg::FinAbGroup;
use crate::fuchsian::{equivariant_k, fuchsian_bredon, hecke_bredon, hecke_signature, is_prime, modular_signature, Signature};
use crate::groups::{all_tables_coincide, GroupId};
use crate::ko_assembly::{collapse_complex, ko_homology, ko_homology_times_z2};
use crate::par::{self, Execution};

/// Primes named in the tables, one or more per residue class.
pub const TABLE_PRIMES: [u64; 12] = [2, 3, 5, 7, 13, 17, 19, 23, 29, 37, 47, 59];

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub primes: RangeInclusive<u64>,
    /// Replaces the shipped `SL3(Z)` complex.
    pub sl3: Option<GammaCwDatum>,
    pub exec: Execution,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            primes: 2..=200,
            sl3: None,
            exec: Execution::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub anchor: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{status} {:<22} {}", c.anchor, c.detail)?;
        }
        let failed = self.failed().count();
        write!(f, "{} checks, {failed} failed", self.checks.len())
    }
}

type Outcome = Result<std::result::Result<String, String>>;

fn check(anchor: &'static str, run: impl FnOnce() -> Outcome) -> Check {
    let (passed, detail) = match run() {
        Ok(Ok(d)) => (true, d),
        Ok(Err(d)) => (false, d),
        Err(e) => (false, format!("error: {e}")),
    };
    Check {
        anchor,
        passed,
        detail,
    }
}

fn expect<T: PartialEq + fmt::Debug>(what: &str, got: T, want: T) -> std::result::Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn f(r: usize) -> FinAbGroup {
    FinAbGroup::free(r)
}

fn two(k: usize) -> FinAbGroup {
    FinAbGroup::elementary(2, k)
}

fn ko_shape(r: usize) -> Vec<FinAbGroup> {
    let z = FinAbGroup::zero();
    vec![f(r), two(r), two(r), z.clone(), f(r), z.clone(), z.clone(), z]
}

fn table_primes_in(primes: &RangeInclusive<u64>) -> Vec<u64> {
    primes.clone().filter(|&p| is_prime(p)).collect()
}

/// Table rows as (H0, H1) of `Γ0(p)`.
fn expected_hecke(p: u64) -> (usize, usize) {
    let p_ = p as usize;
    match (p, p % 12) {
        (2, _) | (3, _) => (p_, 1),
        (_, 1) => (7, (p_ - 7) / 6),
        (_, 5) => (3, (p_ + 1) / 6),
        (_, 7) => (5, (p_ - 1) / 6),
        _ => (1, (p_ + 7) / 6),
    }
}

/// (order 2, order 3, total) classes of `PSL2(Z[1/p])`.
fn expected_classes(p: u64) -> (u64, u64, u64) {
    match (p, p % 12) {
        (2, _) => (1, 4, 6),
        (3, _) => (2, 2, 5),
        (_, 1) => (1, 2, 4),
        (_, 5) => (1, 4, 6),
        (_, 7) => (2, 2, 5),
        _ => (2, 4, 7),
    }
}

/// Ranks of `H0, H1, H2` of `PSL2(Z[1/p])`.
fn expected_psl_bredon(p: u64) -> [usize; 3] {
    let p_ = p as usize;
    match (p, p % 12) {
        (2, _) => [6, 0, 1],
        (3, _) => [5, 0, 1],
        (_, 1) => [4, 3, (p_ - 7) / 6],
        (_, 5) => [6, 1, (p_ + 1) / 6],
        (_, 7) => [5, 2, (p_ - 1) / 6],
        _ => [7, 0, (p_ + 7) / 6],
    }
}

/// Ranks of `K0, K1` of `PSL2(Z[1/p])`.
fn expected_psl_k(p: u64) -> [usize; 2] {
    let p_ = p as usize;
    match (p, p % 12) {
        (2, _) => [7, 0],
        (3, _) => [6, 0],
        (_, 1) => [4 + (p_ - 7) / 6, 3],
        (_, 5) => [6 + (p_ + 1) / 6, 1],
        (_, 7) => [5 + (p_ - 1) / 6, 2],
        _ => [7 + (p_ + 7) / 6, 0],
    }
}

fn free_ranks(h: &[FinAbGroup]) -> std::result::Result<Vec<usize>, String> {
    h.iter()
        .map(|g| {
            if g.is_free() {
                Ok(g.free_rank())
            } else {
                Err(format!("unexpected torsion {g}"))
            }
        })
        .collect()
}

/// Signatures exercising every branch of the Fuchsian constructions.
fn sample_signatures() -> Vec<Signature> {
    [
        "[0,0;2,3,7]", "[2,0;]", "[0,0;2,3]", "[1,0;]", "[3,0;2,2,5,9]", "[0,1;2,3]",
        "[0,2;2]", "[1,1;]", "[2,3;4,6,8]", "[0,4;]", "[1,2;3,3,3]",
    ]
    .iter()
    .map(|s| s.parse().expect("sample signatures are valid"))
    .collect()
}

fn chain_homology(sig: &Signature, exec: Execution) -> Result<Vec<FinAbGroup>> {
    let d = if sig.is_cocompact() {
        fuchsian_cocompact_datum(sig)?
    } else {
        fuchsian_noncocompact_datum(sig)?
    };
    bredon_homology_with(&d, exec)
}

pub fn verify_all(config: &VerifyConfig) -> Report {
    let exec = config.exec;
    let sweep = table_primes_in(&config.primes);
    let sl3 = config.sl3.clone().unwrap_or_else(sl3_datum);
    let mut checks = Vec::new();

    checks.push(check("sl3.bredon", || {
        let h = bredon_homology_with(&sl3, exec)?;
        let z = FinAbGroup::zero();
        Ok(expect("H_*", h, vec![f(8), z.clone(), z.clone(), z])
            .map(|_| "H = (Z^8, 0, 0, 0) by Smith normal form".into()))
    }));
    checks.push(check("sl3.ko", || {
        let ko = ko_homology(&sl3, exec)?;
        Ok(expect("KO_0..7", ko.groups().to_vec(), ko_shape(8)).map(|_| ko.to_string()))
    }));
    checks.push(check("gl3.ko", || {
        let ko = ko_homology_times_z2(&sl3, exec)?;
        Ok(expect("KO_0..7", ko.groups().to_vec(), ko_shape(16)).map(|_| ko.to_string()))
    }));

    checks.push(check("hypothesis.stabilisers", || {
        let base = [
            GroupId::Trivial,
            GroupId::Cyclic(2),
            GroupId::Klein4,
            GroupId::Dihedral(3),
            GroupId::Dihedral(4),
            GroupId::Dihedral(6),
            GroupId::Sym4,
        ];
        let mut bad = Vec::new();
        for g in base.iter().cloned().chain(base.iter().cloned().map(|g| GroupId::z2_times(g).canonical())) {
            if !all_tables_coincide(&g) {
                bad.push(g.to_string());
            }
        }
        if all_tables_coincide(&GroupId::Cyclic(3)) {
            bad.push("Z3 (should fail)".into());
        }
        Ok(if bad.is_empty() {
            Ok("indicators all 1 on 14 stabiliser types, not on Z3".into())
        } else {
            Err(format!("wrong verdict for {}", bad.join(", ")))
        })
    }));

    checks.push(check("fuchsian.closed-form", || {
        let sigs = sample_signatures();
        let results = par::map(exec, &sigs, |s| -> Result<std::result::Result<(), String>> {
            let chain = chain_homology(s, exec)?;
            let closed = fuchsian_bredon(s);
            if chain != closed {
                return Ok(Err(format!("{s}: chain {chain:?} vs closed {closed:?}")));
            }
            let (k0, k1) = collapse_complex(&chain)?;
            Ok(expect(&format!("K of {s}"), (k0, k1), equivariant_k(s)))
        });
        for r in results {
            if let Err(e) = r? {
                return Ok(Err(e));
            }
        }
        Ok(Ok(format!("{} signatures agree", sigs.len())))
    }));

    checks.push(check("hecke.table", || {
        for &p in &TABLE_PRIMES {
            let (h0, h1) = hecke_bredon(p)?;
            let (e0, e1) = expected_hecke(p);
            if let Err(e) = expect(&format!("Γ0({p})"), (h0, h1), (f(e0), f(e1))) {
                return Ok(Err(e));
            }
        }
        let modular = fuchsian_bredon(&modular_signature());
        Ok(expect("PSL2(Z)", modular, vec![f(4), FinAbGroup::zero()])
            .map(|_| "all rows including PSL2(Z)".into()))
    }));

    checks.push(check("hecke.chain-sweep", || {
        let results = par::map(exec, &sweep, |&p| -> Result<std::result::Result<(), String>> {
            let sig = hecke_signature(p)?;
            let chain = bredon_homology_with(&fuchsian_noncocompact_datum(&sig)?, Execution::Sequential)?;
            let (h0, h1) = hecke_bredon(p)?;
            Ok(expect(&format!("p = {p}"), chain, vec![h0, h1]))
        });
        for r in results {
            if let Err(e) = r? {
                return Ok(Err(e));
            }
        }
        Ok(Ok(format!("{} primes in {:?}", sweep.len(), config.primes)))
    }));

    checks.push(check("psl2zp.class-counts", || {
        for p in [2, 3, 13, 17, 19, 23] {
            let c = class_count_psl(p)?;
            if let Err(e) = expect(&format!("p = {p}"), (c.order2, c.order3, c.total), expected_classes(p)) {
                return Ok(Err(e));
            }
        }
        Ok(Ok("six columns".into()))
    }));

    checks.push(check("psl2zp.bredon", || {
        for &p in &TABLE_PRIMES {
            let got = free_ranks(&psl_zp_bredon(p)?);
            if let Err(e) = expect(&format!("p = {p}"), got, Ok(expected_psl_bredon(p).to_vec())) {
                return Ok(Err(e));
            }
        }
        Ok(Ok(format!("{} primes", TABLE_PRIMES.len())))
    }));

    checks.push(check("psl2zp.k", || {
        for &p in &TABLE_PRIMES {
            let (k0, k1) = psl_zp_k(p)?;
            let got = free_ranks(&[k0, k1]);
            if let Err(e) = expect(&format!("p = {p}"), got, Ok(expected_psl_k(p).to_vec())) {
                return Ok(Err(e));
            }
        }
        Ok(Ok(format!("{} primes", TABLE_PRIMES.len())))
    }));

    checks.push(check("mv.rank-sum", || {
        for &p in &sweep {
            let h = psl_zp_bredon(p)?;
            let (amalgam, _) = hecke_bredon(p)?;
            let sum = h[1].free_rank() as i64 - amalgam.free_rank() as i64 + 8 - h[0].free_rank() as i64;
            if sum != 0 {
                return Ok(Err(format!("p = {p}: alternating rank sum {sum}")));
            }
        }
        Ok(Ok(format!("{} primes", sweep.len())))
    }));

    checks.push(check("sl2zp.doubling", || {
        for &p in &TABLE_PRIMES {
            let (k0, k1) = psl_zp_k(p)?;
            if let Err(e) = expect(&format!("p = {p}"), sl_zp_k(p)?, (k0.power(2), k1.power(2))) {
                return Ok(Err(e));
            }
        }
        for p in [2, 3, 11, 13] {
            let sig = hecke_signature(p)?;
            let lifted = bredon_homology_with(&lifted_fuchsian_datum(&sig)?, exec)?;
            let base = bredon_homology_with(&fuchsian_noncocompact_datum(&sig)?, exec)?;
            let doubled: Vec<FinAbGroup> = base.iter().map(|g| g.power(2)).collect();
            if let Err(e) = expect(&format!("lift at p = {p}"), lifted, doubled) {
                return Ok(Err(e));
            }
        }
        Ok(Ok("K doubles; lifted complexes double at p = 2, 3, 11, 13".into()))
    }));

    checks.push(check("cstar.k", || {
        for p in [11, 23, 47, 59] {
            let b = (p as usize + 7) / 6;
            let k = cstar_k_p11(p)?;
            if let Err(e) = expect(&format!("p = {p}"), k.clone(), (f(7 + b), FinAbGroup::zero())) {
                return Ok(Err(e));
            }
            if let Err(e) = expect(&format!("p = {p} vs Bredon"), k, psl_zp_k(p)?) {
                return Ok(Err(e));
            }
        }
        Ok(Ok("p = 11, 23, 47, 59".into()))
    }));

    checks.push(check("cstar.ko", || {
        for p in [11, 23, 47, 59] {
            let b = (p as usize + 7) / 6;
            let z = FinAbGroup::zero();
            let want = vec![
                f(5),
                two(3),
                f(2 + b).direct_sum(&two(3)),
                two(b),
                f(5).direct_sum(&two(b)),
                z.clone(),
                f(2 + b),
                z,
            ];
            let ko = cstar_ko_p11(p)?;
            if let Err(e) = expect(&format!("p = {p}"), ko.groups().to_vec(), want) {
                return Ok(Err(e));
            }
            let flags: Vec<usize> = ko.ambiguous_degrees().collect();
            if let Err(e) = expect(&format!("p = {p} extension flags"), flags, vec![1, 3, 4]) {
                return Ok(Err(e));
            }
        }
        Ok(Ok("p = 11, 23, 47, 59; extensions open in degrees 1, 3, 4".into()))
    }));

    Report { checks }
}
