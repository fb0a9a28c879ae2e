//! End-to-end acceptance gate: one test per criterion, each printing a
//! pass/fail line. Every numeric constant here was cross-checked against an
//! independent implementation before being frozen.

use std::time::Instant;

use swr::algebra::{Int, IntMatrix, IntPoly};
use swr::census::{self, ClaimParams, EnumFilter};
use swr::digraph::Digraph;
use swr::engine::{self, PeriodicFamily};
use swr::families::FamilySpec;
use swr::spectral::{self, DiagClass};

fn report(criterion: &str, pass: bool) {
    println!("{}: {criterion}", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "{criterion}");
}

/// Criterion 1: the six-vertex 2-regular census with spectrum
/// {2, 0^3, (-1)^2} contains exactly one strongly regular digraph and
/// three mates.
#[test]
fn criterion_1_six_vertex_census() {
    let start = Instant::now();
    let mut filter = EnumFilter::new(6, 2);
    filter.require_strongly_connected = true;
    filter.charpoly = Some(IntPoly::from_i64(&[0, 0, 0, -2, -3, 0, 1]));
    let records = census::enumerate(&filter, 10).unwrap();
    let mut ok = records.len() == 4;
    let srd: Vec<_> = records.iter().filter(|r| r.srd.is_some()).collect();
    ok &= srd.len() == 1;
    if let Some(p) = &srd[0].srd {
        ok &= (p.n, p.k) == (6, 2)
            && (&p.t, &p.lambda, &p.mu) == (&Int::from(1), &Int::from(0), &Int::from(1));
    }
    let mates: Vec<_> = records.iter().filter(|r| r.srd.is_none()).collect();
    ok &= mates.len() == 3;
    let mate_hoffman = IntPoly::from_i64(&[0, 0, 1, 1]);
    for m in &mates {
        ok &= m.profile.hoffman.as_ref().map(|h| &h.monic) == Some(&mate_hoffman);
        ok &= m.profile.diag_class == DiagClass::DTheta(Int::from(0));
    }
    ok &= mates.iter().filter(|m| m.walk_regular).count() == 1;
    // exactly one pair of mutual reverses among the mates
    let keys: Vec<u128> = mates
        .iter()
        .map(|m| census::canonical_key(&m.digraph).unwrap())
        .collect();
    let mut rev_hits = 0;
    for m in &mates {
        let rk = census::canonical_key(&m.digraph.reverse()).unwrap();
        let own = census::canonical_key(&m.digraph).unwrap();
        if rk != own && keys.contains(&rk) {
            rev_hits += 1;
        }
    }
    ok &= rev_hits == 2; // one pair, counted from both sides
    let elapsed = start.elapsed();
    ok &= elapsed.as_secs() < 60;
    println!("  census in {elapsed:?}");
    report("criterion 1: six-vertex spectrum census", ok);
}

/// Criterion 2: the nine-vertex unique-3-walk digraph.
#[test]
fn criterion_2_unique_walk_digraph() {
    let g = FamilySpec::LamVanLintOdd { m: 3, k: 2 }.build().unwrap();
    let a = g.adjacency_matrix();
    let expected = IntMatrix::ones(9).sub(&IntMatrix::identity(9)).unwrap();
    let mut ok = a.pow(3).unwrap() == expected;
    let es = engine::exponent_set(&g, 31).unwrap();
    let want: Vec<usize> = (2..=31).filter(|l| l % 3 <= 1).collect();
    ok &= es.values() == want;
    ok &= es.periodic == Some(PeriodicFamily::MuEqualsLambda { m: 3 });
    report("criterion 2: A^3 = J - I digraph, exponents 0,1 mod 3", ok);
}

/// Criterion 3: complement blowup of the first mate: certificate
/// (l=3, 75, 72, 74), class D_{-1}, eta relation, exponent set {3}.
#[test]
fn criterion_3_complement_blowup_of_mate() {
    let g = FamilySpec::ComplementBlowup { base: Box::new(FamilySpec::SixVertexMate(1)), q: 3 }
        .build()
        .unwrap();
    let p = spectral::profile(&g).unwrap();
    let mut ok = p.hoffman.as_ref().map(|h| h.monic.clone())
        == Some(IntPoly::from_i64(&[-2, -3, 0, 1]));
    ok &= p.diag_class == DiagClass::DTheta(Int::from(-1));
    let cert = engine::check_direct(&g, 3).unwrap().unwrap();
    ok &= (&cert.lambda, &cert.mu, &cert.nu)
        == (&Int::from(75), &Int::from(72), &Int::from(74));
    // mu = (k^3 + e k + f) / n with k = 11, e = -3, f = -2, n = 18
    ok &= Int::from(72) == Int::from((11i64.pow(3) - 33 - 2) / 18);
    let idr = engine::verify_parameter_identities(&cert, &p).unwrap();
    ok &= idr
        .checked
        .iter()
        .any(|(name, detail)| name == "double-root parameter formulas" && detail == "theta = -1");
    ok &= idr
        .checked
        .iter()
        .any(|(name, detail)| name == "nondiagonalizable eta relation" && detail == "eta = 2");
    ok &= engine::exponent_set(&g, 50).unwrap().values() == vec![3];
    report("criterion 3: 18-vertex blowup certificate and identities", ok);
}

/// Criterion 4: cycles, coclique extensions, and chord digraphs.
#[test]
fn criterion_4_mu0_families() {
    let mut failures: Vec<String> = vec![];
    for g in 3..=8usize {
        let c = FamilySpec::DirectedCycle { g }.build().unwrap();
        let es = engine::exponent_set(&c, 2 * g + 2).unwrap();
        // The 3-cycle is degenerate: its only non-edges are at distance 2, so
        // A^l is constant on each class for every l (A^2 = J - I - A).
        let want: Vec<usize> = if g == 3 {
            (2..=2 * g + 2).collect()
        } else {
            (2..=2 * g + 2).filter(|l| l % g <= 1).collect()
        };
        if es.values() != want {
            failures.push(format!("cycle g={g}: {:?} != {want:?}", es.values()));
        }
    }
    for sizes in [vec![2, 1, 1], vec![2, 2], vec![3, 1], vec![2, 1, 1, 1]] {
        let m = sizes.len();
        let c = FamilySpec::CocliqueExtension { sizes: sizes.clone() }.build().unwrap();
        let es = engine::exponent_set(&c, 3 * m + 1).unwrap();
        // Balanced two-part extensions are complete bipartite graphs with
        // equal sides; A^2 = c(J - I - A) + cI there, so every l qualifies.
        let balanced_bipartite = m == 2 && sizes[0] == sizes[1];
        let want: Vec<usize> = if balanced_bipartite {
            (2..=3 * m + 1).collect()
        } else {
            (2..=3 * m + 1).filter(|l| l % m == 1).collect()
        };
        if es.values() != want {
            failures.push(format!("coclique {sizes:?}: {:?} != {want:?}", es.values()));
        }
    }
    for l in 3..=6usize {
        for chords in 1..=2usize {
            let g = FamilySpec::ExceptionalChord { l, chords }.build().unwrap();
            let cert = engine::check_direct(&g, l).unwrap().unwrap();
            if (&cert.lambda, &cert.mu, &cert.nu)
                != (&Int::from(chords as i64), &Int::from(0), &Int::from(1))
            {
                failures.push(format!("chord l={l} c={chords}: cert {cert:?}"));
            }
            let mut mp = vec![0i64; l + 1];
            mp[0] = -1;
            mp[1] = -(chords as i64);
            mp[l] = 1;
            let got = g.adjacency_matrix().min_poly().unwrap();
            if got != IntPoly::from_i64(&mp) {
                failures.push(format!("chord l={l} c={chords}: minpoly {got:?}"));
            }
            let vals = engine::exponent_set(&g, 3 * l + 1).unwrap().values();
            if vals != vec![l] {
                failures.push(format!("chord l={l} c={chords}: exponents {vals:?}"));
            }
        }
    }
    for f in &failures {
        println!("  {f}");
    }
    report("criterion 4: cycle, coclique, and chord exponent sets", failures.is_empty());
}

/// Criterion 5: the direct and the divisibility method agree on verdict and
/// parameters over the whole census at n <= 6.
#[test]
fn criterion_5_oracle_equivalence() {
    let mut compared = 0u64;
    let mut discrepancies = 0u64;
    for n in 3..=6usize {
        for k in 1..n {
            let classes = census::enumerate_classes(n, k, false, false).unwrap();
            for g in classes {
                let p = spectral::profile(&g).unwrap();
                for l in 2..=12usize {
                    let direct = engine::check_direct(&g, l).unwrap();
                    if p.hoffman.is_none() {
                        continue;
                    }
                    compared += 1;
                    let div = engine::check_divisibility(&p, l).unwrap();
                    match (direct, div) {
                        (Some(c), Some(w)) => {
                            let wc = w.certificate();
                            if (c.lambda, c.mu, c.nu) != (wc.lambda, wc.mu, wc.nu) {
                                discrepancies += 1;
                            }
                        }
                        (None, None) => {}
                        _ => discrepancies += 1,
                    }
                }
            }
        }
    }
    println!("  {compared} (digraph, l) pairs compared, {discrepancies} discrepancies");
    report(
        "criterion 5: direct vs divisibility, zero discrepancies",
        compared > 500 && discrepancies == 0,
    );
}

/// Criterion 6: all registered theorem suites pass.
#[test]
fn criterion_6_theorem_suites() {
    let start = Instant::now();
    let mut ok = true;
    for (name, params) in [
        ("even-ell-srd", ClaimParams::default()),
        ("girth-congruence", ClaimParams::default()),
        (
            "mu0-classification",
            ClaimParams { n_max: Some(7), lmax: Some(8) },
        ),
        ("nondiagonalizable-exponents", ClaimParams::default()),
    ] {
        let r = census::verify_claim(name, params).unwrap();
        if !r.pass {
            println!("  {name} violations: {:?}", r.violations);
        }
        ok &= r.pass;
    }
    let elapsed = start.elapsed();
    println!("  suites in {elapsed:?}");
    ok &= elapsed.as_secs() < 600;
    report("criterion 6: theorem suites with zero violations", ok);
}

/// Criterion 7: every SWR witness has a Hoffman polynomial with at most
/// three real roots, at most two when an even l is certified.
#[test]
fn criterion_7_real_root_bound() {
    let mut ok = true;
    let mut witnesses = 0u64;
    let mut check = |g: &Digraph| {
        let p = spectral::profile(g).unwrap();
        if p.hoffman.is_none() {
            return;
        }
        let es = engine::exponent_set_with_profile(g, &p, 12).unwrap();
        let values = es.values();
        if values.is_empty() {
            return;
        }
        witnesses += 1;
        let (_, with_mult) = spectral::hoffman_real_root_report(&p).unwrap();
        ok &= with_mult <= 3;
        if values.iter().any(|l| l % 2 == 0) {
            ok &= with_mult <= 2;
        }
    };
    for n in 3..=6usize {
        for k in 1..n {
            for g in census::enumerate_classes(n, k, true, false).unwrap() {
                check(&g);
            }
        }
    }
    for spec in [
        FamilySpec::LamVanLintOdd { m: 3, k: 2 },
        FamilySpec::LamVanLintEven { m: 2, k: 3 },
        FamilySpec::SixVertexSrd,
        FamilySpec::PaleyTournament { n: 7 },
        FamilySpec::ComplementBlowup { base: Box::new(FamilySpec::SixVertexMate(1)), q: 3 },
        FamilySpec::LineDigraph { base: Box::new(FamilySpec::LamVanLintOdd { m: 3, k: 2 }) },
    ] {
        check(&spec.build().unwrap());
    }
    println!("  {witnesses} SWR witnesses checked");
    report("criterion 7: Hoffman real-root bounds", ok && witnesses > 20);
}

/// Criterion 8: complement blowup of the seven-vertex tournament.
#[test]
fn criterion_8_tournament_blowup() {
    let g = FamilySpec::ComplementBlowup {
        base: Box::new(FamilySpec::PaleyTournament { n: 7 }),
        q: 3,
    }
    .build()
    .unwrap();
    let mut ok = g.n() == 21;
    let charpoly = spectral::profile(&g).unwrap().charpoly;
    // eigenvalues 11, 1/2 +- (3/2) sqrt(-7), -1: the charpoly factors as
    // (x - 11) (x^2 - x + 16)^a (x + 1)^b exactly
    let mut rest = charpoly.to_rat();
    let linear = IntPoly::from_i64(&[-11, 1]).to_rat();
    let (q, r) = rest.divrem(&linear).unwrap();
    ok &= r.is_zero();
    rest = q;
    let mut quad_mult = 0usize;
    let quad = IntPoly::from_i64(&[16, -1, 1]).to_rat();
    loop {
        let (q, r) = rest.divrem(&quad).unwrap();
        if !r.is_zero() {
            break;
        }
        rest = q;
        quad_mult += 1;
    }
    let mut lin_mult = 0usize;
    let xp1 = IntPoly::from_i64(&[1, 1]).to_rat();
    while rest.degree().unwrap_or(0) > 0 {
        let (q, r) = rest.divrem(&xp1).unwrap();
        if !r.is_zero() {
            break;
        }
        rest = q;
        lin_mult += 1;
    }
    ok &= rest.degree().unwrap_or(0) == 0; // fully factored down to a unit
    ok &= quad_mult >= 1 && lin_mult >= 1 && 1 + 2 * quad_mult + lin_mult == 21;
    ok &= engine::check_direct(&g, 3).unwrap().is_some();
    report("criterion 8: tournament blowup spectrum and 3-walk-regularity", ok);
}
