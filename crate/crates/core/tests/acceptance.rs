//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::process::ExitCode;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use bredon_core::arithmetic_k::{
    class_count_psl, cstar_k_p11, cstar_ko_p11, psl_zp_bredon, psl_zp_k, sl_zp_k,
};
use bredon_core::bredon::{
    bredon_homology, fuchsian_cocompact_datum, fuchsian_noncocompact_datum, lifted_fuchsian_datum,
    sl3_datum, GammaCwDatum,
};
use bredon_core::exactlinalg::smith_normal_form;
use bredon_core::fuchsian::{fuchsian_bredon, hecke_bredon, hecke_signature, modular_signature, Signature};
use bredon_core::groups::{all_tables_coincide, build_group, character_table, FiniteGroupData};
use bredon_core::ko_assembly::{
    collapse_complex, ko_column_collapse, ko_e2_page, ko_homology, ko_homology_times_z2,
    kunneth_times_z2, E2Page,
};
use bredon_core::{Error, Execution, FinAbGroup, GradedGroup, GroupId, IntMatrix};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn z(r: usize) -> FinAbGroup {
    FinAbGroup::free(r)
}

fn z2(k: usize) -> FinAbGroup {
    FinAbGroup::elementary(2, k)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    ensure(got == want, || format!("{what}: got {got:?}, want {want:?}"))
}

fn primes_up_to(n: u64) -> Vec<u64> {
    let mut sieve = vec![true; n as usize + 1];
    let mut out = Vec::new();
    for i in 2..=n as usize {
        if sieve[i] {
            out.push(i as u64);
            (i * i..=n as usize).step_by(i).for_each(|k| sieve[k] = false);
        }
    }
    out
}

fn ko_groups(ko: &GradedGroup) -> Vec<FinAbGroup> {
    ko.groups().to_vec()
}

fn chain_homology(d: &GammaCwDatum) -> Result<Vec<FinAbGroup>, String> {
    bredon_homology(d).map_err(|e| e.to_string())
}

fn criterion_1() -> Outcome {
    let d = sl3_datum();
    let raw = d.raw_boundaries.as_ref().ok_or("shipped complex has no matrices")?;
    // the shipped matrices must need reducing, not already sit in diagonal form
    let off_diagonal = raw
        .iter()
        .any(|m| (0..m.rows()).any(|i| (0..m.cols()).any(|j| i != j && !m.get(i, j).is_zero())));
    ensure(off_diagonal, || "shipped boundaries are already diagonal".into())?;
    eq("chain ranks", d.chain_ranks(), vec![26, 28, 11, 1])?;
    let h = chain_homology(&d)?;
    eq("Bredon homology", h, vec![z(8), z(0), z(0), z(0)])?;
    let ko = ko_homology(&d, Execution::Parallel).map_err(|e| e.to_string())?;
    eq(
        "KO",
        ko_groups(&ko),
        vec![z(8), z2(8), z2(8), z(0), z(8), z(0), z(0), z(0)],
    )?;
    Ok("H = (Z^8, 0, 0, 0); KO = Z^8, Z2^8, Z2^8, 0, Z^8, 0, 0, 0".into())
}

fn criterion_2() -> Outcome {
    let h = chain_homology(&sl3_datum())?;
    let doubled = kunneth_times_z2(&h).map_err(|e| e.to_string())?;
    eq("Kunneth", doubled.clone(), vec![z(16), z(0), z(0), z(0)])?;
    let ko = ko_homology_times_z2(&sl3_datum(), Execution::Sequential).map_err(|e| e.to_string())?;
    eq(
        "KO",
        ko_groups(&ko),
        vec![z(16), z2(16), z2(16), z(0), z(16), z(0), z(0), z(0)],
    )?;
    eq("page from Kunneth", ko_groups(&ko_column_collapse(&ko_e2_page(&doubled)).unwrap()), ko_groups(&ko))?;
    Ok("KO = Z^16, Z2^16, Z2^16, 0, Z^16, 0, 0, 0".into())
}

/// `ν(χ) = |G|⁻¹ Σ χ(g²)`, straight from the multiplication table.
fn indicator(g: &FiniteGroupData, chi: &[i64]) -> i64 {
    let sum: i64 = (0..g.order()).map(|x| chi[g.class_of(g.mul(x, x))]).sum();
    assert_eq!(sum % g.order() as i64, 0);
    sum / g.order() as i64
}

fn real_by_cayley(id: &GroupId) -> bool {
    let g = build_group(id).unwrap();
    match character_table(id) {
        Ok(t) => t.chars.iter().all(|chi| indicator(&g, chi) == 1),
        // abelian without a table: every character real iff g² = 1 throughout
        Err(_) => (0..g.order()).all(|x| g.mul(x, x) == 0),
    }
}

fn criterion_3() -> Outcome {
    let named = [
        GroupId::Trivial,
        GroupId::Cyclic(2),
        GroupId::Klein4,
        GroupId::Dihedral(3),
        GroupId::Dihedral(4),
        GroupId::Dihedral(6),
        GroupId::Sym4,
    ];
    let mut catalogue: Vec<GroupId> = named.to_vec();
    catalogue.extend((1..=64).map(GroupId::Cyclic));
    let products: Vec<GroupId> = catalogue.iter().map(|g| GroupId::z2_times(g.clone())).collect();
    catalogue.extend(products);

    let mut checked = 0;
    for id in &catalogue {
        let canonical = id.canonical();
        let inner = match &canonical {
            GroupId::DirectWithZ2(inner) => (**inner).clone(),
            other => other.clone(),
        };
        let expected = named.contains(&inner);
        eq(&format!("tables coincide for {id}"), all_tables_coincide(id), expected)?;
        eq(&format!("Cayley recomputation for {id}"), real_by_cayley(id), expected)?;
        checked += 1;
    }
    ensure(!all_tables_coincide(&GroupId::Cyclic(3)), || "Z3 accepted".into())?;
    Ok(format!("{checked} catalogue groups; true exactly on the named seven and their Z2 products"))
}

/// Expected Bredon ranks of the Hecke subgroups, by residue.
fn hecke_table(p: u64) -> (usize, usize) {
    let p_ = p as usize;
    match (p, p % 12) {
        (2, _) => (2, 1),
        (3, _) => (3, 1),
        (_, 1) => (7, (p_ - 7) / 6),
        (_, 5) => (3, (p_ + 1) / 6),
        (_, 7) => (5, (p_ - 1) / 6),
        (_, 11) => (1, (p_ + 7) / 6),
        _ => unreachable!(),
    }
}

fn hecke_chain(p: u64) -> Result<Vec<FinAbGroup>, String> {
    let sig = hecke_signature(p).map_err(|e| e.to_string())?;
    chain_homology(&fuchsian_noncocompact_datum(&sig).map_err(|e| e.to_string())?)
}

fn criterion_4() -> Outcome {
    let primes = primes_up_to(200);
    for &p in &primes {
        let (h0, h1) = hecke_table(p);
        let closed = hecke_bredon(p).map_err(|e| e.to_string())?;
        eq(&format!("closed form at p = {p}"), closed.clone(), (z(h0), z(h1)))?;
        eq(&format!("chain at p = {p}"), hecke_chain(p)?, vec![closed.0, closed.1])?;
    }
    let modular = chain_homology(&fuchsian_noncocompact_datum(&modular_signature()).unwrap())?;
    eq("PSL2(Z)", modular, vec![z(4), z(0)])?;
    eq("PSL2(Z) closed form", fuchsian_bredon(&modular_signature()), vec![z(4), z(0)])?;
    Ok(format!("{} primes up to 200 plus PSL2(Z)", primes.len()))
}

/// Expected class counts: (identity, order 2, order 3, total).
fn class_table(p: u64) -> (u64, u64, u64, u64) {
    match (p, p % 12) {
        (2, _) => (1, 1, 4, 6),
        (3, _) => (1, 2, 2, 5),
        (_, 1) => (1, 1, 2, 4),
        (_, 5) => (1, 1, 4, 6),
        (_, 7) => (1, 2, 2, 5),
        (_, 11) => (1, 2, 4, 7),
        _ => unreachable!(),
    }
}

fn criterion_5() -> Outcome {
    let mut residues = std::collections::BTreeSet::new();
    for p in primes_up_to(200) {
        let c = class_count_psl(p).map_err(|e| e.to_string())?;
        eq(&format!("p = {p}"), (c.identity, c.order2, c.order3, c.total), class_table(p))?;
        residues.insert(if p <= 3 { p } else { 100 + p % 12 });
    }
    eq("columns covered", residues.len(), 6)?;
    Ok("all six columns, every prime up to 200".into())
}

const TABLE_PRIMES: [u64; 10] = [2, 3, 13, 17, 19, 23, 29, 37, 47, 59];

/// Expected Bredon ranks `(n0, n1, n2)` and K ranks `(k0, k1)`.
fn psl_tables(p: u64) -> ([usize; 3], [usize; 2]) {
    let p_ = p as usize;
    let bredon = match (p, p % 12) {
        (2, _) => [6, 0, 1],
        (3, _) => [5, 0, 1],
        (_, 1) => [4, 3, (p_ - 7) / 6],
        (_, 5) => [6, 1, (p_ + 1) / 6],
        (_, 7) => [5, 2, (p_ - 1) / 6],
        (_, 11) => [7, 0, (p_ + 7) / 6],
        _ => unreachable!(),
    };
    let k = match (p, p % 12) {
        (2, _) => [7, 0],
        (3, _) => [6, 0],
        (_, 1) => [4 + (p_ - 7) / 6, 3],
        (_, 5) => [6 + (p_ + 1) / 6, 1],
        (_, 7) => [5 + (p_ - 1) / 6, 2],
        (_, 11) => [7 + (p_ + 7) / 6, 0],
        _ => unreachable!(),
    };
    (bredon, k)
}

fn criterion_6() -> Outcome {
    for p in TABLE_PRIMES {
        let (b, k) = psl_tables(p);
        let h = psl_zp_bredon(p).map_err(|e| e.to_string())?;
        eq(&format!("Bredon at p = {p}"), h, b.iter().map(|&r| z(r)).collect())?;
        eq(&format!("K at p = {p}"), psl_zp_k(p).map_err(|e| e.to_string())?, (z(k[0]), z(k[1])))?;
    }
    eq("p = 13", psl_zp_k(13).unwrap(), (z(5), z(3)))?;
    eq("p = 23", psl_zp_k(23).unwrap(), (z(12), z(0)))?;
    Ok(format!("primes {TABLE_PRIMES:?}"))
}

fn criterion_7() -> Outcome {
    for p in TABLE_PRIMES {
        let (k0, k1) = psl_zp_k(p).map_err(|e| e.to_string())?;
        eq(
            &format!("SL2 at p = {p}"),
            sl_zp_k(p).map_err(|e| e.to_string())?,
            (z(2 * k0.free_rank()), z(2 * k1.free_rank())),
        )?;
    }
    for p in [2, 3, 11, 13] {
        let sig = hecke_signature(p).map_err(|e| e.to_string())?;
        let lifted = chain_homology(&lifted_fuchsian_datum(&sig).map_err(|e| e.to_string())?)?;
        let projective = hecke_chain(p)?;
        eq(
            &format!("lifted Γ0({p})"),
            lifted,
            projective.iter().map(|h| z(2 * h.free_rank())).collect(),
        )?;
    }
    Ok("K doubles on the table primes; lifted chains double for p = 2, 3, 11, 13".into())
}

fn criterion_8() -> Outcome {
    for p in [11u64, 23, 47, 59] {
        let b = ((p + 7) / 6) as usize;
        eq(&format!("K at p = {p}"), cstar_k_p11(p).map_err(|e| e.to_string())?, (z(7 + b), z(0)))?;
        let ko = cstar_ko_p11(p).map_err(|e| e.to_string())?;
        let want = vec![
            z(5),
            z2(3),
            z(2 + b).direct_sum(&z2(3)),
            z2(b),
            z(5).direct_sum(&z2(b)),
            z(0),
            z(2 + b),
            z(0),
        ];
        eq(&format!("KO at p = {p}"), ko_groups(&ko), want)?;
        eq(
            &format!("extension flags at p = {p}"),
            ko.ambiguous_degrees().collect::<Vec<_>>(),
            vec![1, 3, 4],
        )?;
    }
    Ok("p = 11, 23, 47, 59".into())
}

fn random_snf(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (r, c) = (rng.gen_range(1..=7), rng.gen_range(1..=7));
    let bound = *[3i64, 10, 60].get(rng.gen_range(0..3)).unwrap();
    let entries = (0..r * c).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect();
    let m = IntMatrix::new(r, c, entries).unwrap();
    let s = smith_normal_form(&m);
    let lhs = s.left.product(&m).unwrap().product(&s.right).unwrap();
    eq("U·A·V", lhs, IntMatrix::padded_diagonal(r, c, &s.d))?;
    ensure(s.left.determinant().unwrap().abs().is_one(), || "left not unimodular".into())?;
    ensure(s.right.determinant().unwrap().abs().is_one(), || "right not unimodular".into())?;
    ensure(s.d.iter().all(|x| x.is_positive()), || format!("nonpositive factor in {:?}", s.d))?;
    ensure(s.d.windows(2).all(|w| w[1].is_multiple_of(&w[0])), || format!("divisibility fails: {:?}", s.d))
}

fn euler_holds(d: &GammaCwDatum) -> Result<(), String> {
    let c = d.expand().map_err(|e| e.to_string())?;
    let h = chain_homology(d)?;
    let from_h: i64 = h
        .iter()
        .enumerate()
        .map(|(n, g)| if n % 2 == 0 { g.free_rank() as i64 } else { -(g.free_rank() as i64) })
        .sum();
    eq(&format!("Euler characteristic of {}", d.name), from_h, c.euler_characteristic())
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xb7ed0);
    const SNF_CASES: usize = 1500;
    for i in 0..SNF_CASES {
        random_snf(&mut rng).map_err(|e| format!("matrix {i}: {e}"))?;
    }

    let mut groups = vec![
        GroupId::Trivial,
        GroupId::Klein4,
        GroupId::Dihedral(3),
        GroupId::Dihedral(4),
        GroupId::Dihedral(6),
        GroupId::Sym4,
    ];
    groups.extend((2..=64).map(GroupId::Cyclic));
    let products: Vec<_> = groups.iter().map(|g| GroupId::z2_times(g.clone())).collect();
    groups.extend(products);
    for id in &groups {
        let g = build_group(id).map_err(|e| e.to_string())?;
        let involutions = (0..g.order()).filter(|&x| g.mul(x, x) == 0).count() as i64;
        let weighted: i64 = match character_table(id) {
            Ok(t) => t.chars.iter().map(|chi| indicator(&g, chi) * chi[0]).sum(),
            // one-dimensional characters of an abelian group: ν(χ) = 1 iff χ² = 1
            Err(_) => involutions_dual(&g),
        };
        eq(&format!("involution count for {id}"), weighted, involutions)?;
    }

    let mut complexes = vec![sl3_datum()];
    for p in primes_up_to(60) {
        let sig = hecke_signature(p).unwrap();
        complexes.push(fuchsian_noncocompact_datum(&sig).unwrap());
        complexes.push(lifted_fuchsian_datum(&sig).unwrap());
    }
    complexes.push(fuchsian_noncocompact_datum(&modular_signature()).unwrap());
    for text in ["[0,0;2,3,7]", "[2,0;]", "[1,0;2,2]", "[0,0;3,3,4]"] {
        let sig: Signature = text.parse().unwrap();
        complexes.push(fuchsian_cocompact_datum(&sig).unwrap());
    }
    for d in &complexes {
        euler_holds(d)?;
    }

    let primes = primes_up_to(200);
    let factor = fuchsian_bredon(&modular_signature())[0].free_rank() as i64;
    for &p in &primes {
        let hecke = hecke_chain(p)?;
        let h = psl_zp_bredon(p).map_err(|e| e.to_string())?;
        let r = |g: &FinAbGroup| g.free_rank() as i64;
        // 0 → H1(Γ) → H0(Γ0(p)) → H0(PSL2(Z))² → H0(Γ) → 0
        let alternating = r(&h[1]) - r(&hecke[0]) + 2 * factor - r(&h[0]);
        eq(&format!("Mayer-Vietoris rank sum at p = {p}"), alternating, 0)?;
        eq(&format!("H2 at p = {p}"), h[2].clone(), hecke[1].clone())?;
    }
    Ok(format!(
        "{SNF_CASES} random SNFs, {} groups, {} complexes, {} primes",
        groups.len(),
        complexes.len(),
        primes.len()
    ))
}

/// Characters of order dividing 2 of an abelian group factor through
/// `G/G²`, so there are `|G| / |G²|` of them.
fn involutions_dual(g: &FiniteGroupData) -> i64 {
    let squares: std::collections::BTreeSet<usize> = (0..g.order()).map(|x| g.mul(x, x)).collect();
    (g.order() / squares.len()) as i64
}

fn criterion_10() -> Outcome {
    let h3 = [z(1), z(0), z(0), z(1)];
    ensure(
        matches!(collapse_complex(&h3), Err(Error::CollapseNotJustified { degree: 3 })),
        || "collapse accepted H3 ≠ 0".into(),
    )?;
    let two_columns = E2Page::from_columns(vec![
        ko_groups(&ko_column_collapse(&ko_e2_page(&[z(1)])).unwrap()),
        vec![z(1), z(0), z(0), z(0), z(1), z(0), z(0), z(0)],
    ])
    .unwrap();
    ensure(
        matches!(ko_column_collapse(&two_columns), Err(Error::MultiColumnPage { column: 1 })),
        || "two-column page accepted".into(),
    )?;
    ensure(
        matches!(kunneth_times_z2(&[z(1), z2(1)]), Err(Error::TorsionInKunneth(_, 1))),
        || "Kunneth accepted torsion".into(),
    )?;
    for p in primes_up_to(200).into_iter().filter(|p| p % 12 != 11) {
        ensure(cstar_k_p11(p).is_err() && cstar_ko_p11(p).is_err(), || {
            format!("cstar accepted p = {p}")
        })?;
    }
    ensure(cstar_k_p11(35).is_err(), || "cstar accepted 35".into())?;
    Ok("all four rejections fire".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("SL3(Z) Bredon homology and KO", criterion_1),
        ("GL3(Z) KO by Kunneth", criterion_2),
        ("real/complex/quaternionic coincidence", criterion_3),
        ("Hecke subgroups, closed form vs chains", criterion_4),
        ("finite-order class counts", criterion_5),
        ("PSL2(Z[1/p]) Bredon homology and K", criterion_6),
        ("SL2(Z[1/p]) doubling", criterion_7),
        ("reduced C*-algebra K and KO", criterion_8),
        ("property suites", criterion_9),
        ("negative controls", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} criteria, {failed} failed", criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
