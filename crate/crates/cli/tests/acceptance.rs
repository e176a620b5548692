//! End-to-end acceptance run. Prints one line per criterion and exits
//! nonzero if any of criteria 1-10 fails. Criterion 11 is exploratory: its
//! outcome is reported but does not affect the exit status.

use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use tpcalc::run;
use tpcalc_core::classes::{expand_in_ab, mod2_reduce};
use tpcalc_core::fixtures::{
    hbar_substitute, monomial_positive_check, schur_positive_check, Basis, FixtureStore, Theory,
};
use tpcalc_core::interpolation::tp_interpolate;
use tpcalc_core::parse::{parse_labelled, parse_poly};
use tpcalc_core::residue::{kts_calibrate, localization_tp_a2, ts_residue_preset, Preset};
use tpcalc_core::scalar::{int, rat};
use tpcalc_core::symmetric::{
    groth_flat, groth_normalize, gtp, schur_contract, schur_expand, GrothExpansion, Partition, SchurExpansion,
};
use tpcalc_core::thom_series::{flat, index_sum_check, specialize_d, specialize_known, specialize_r};
use tpcalc_core::{Mono, QPoly, Rat, TruncSeries, VarId};

type Outcome = Result<String, String>;

fn poly(text: &str) -> QPoly {
    parse_poly(text).unwrap_or_else(|e| panic!("{text}: {e}"))
}

fn schur(text: &str) -> SchurExpansion {
    let mut e = SchurExpansion::new();
    for (l, c) in parse_labelled(text, b's').unwrap() {
        e.add(Partition::from_entries(&l).unwrap(), c);
    }
    e
}

fn groth(text: &str) -> GrothExpansion {
    let terms = parse_labelled(text, b'g').unwrap();
    groth_normalize(terms.iter().map(|(l, c)| (l.as_slice(), c.clone()))).unwrap()
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn within(what: &str, t: Instant, limit: Duration) -> Result<(), String> {
    let e = t.elapsed();
    if e <= limit {
        Ok(())
    } else {
        Err(format!("{what} took {e:?}, limit {limit:?}"))
    }
}

fn cli(args: &[&str]) -> tpcalc::Outcome {
    run(std::iter::once("tpcalc").chain(args.iter().copied()), None)
}

fn c1_interpolation_a4() -> Outcome {
    let t = Instant::now();
    let out = cli(&["tp", "--sing", "A4", "--l", "0"]);
    expect("exit", out.code, 0)?;
    let p = poly(out.stdout.trim());
    let want = [("c1^4", 1), ("c1^2c2", 6), ("c1c3", 9), ("c2^2", 2), ("c4", 6)];
    for (m, c) in want {
        let mono = poly(m).first_term().unwrap().0.clone();
        expect(m, p.coeff(&mono), int(c))?;
    }
    expect("term count", p.len(), 5)?;
    let dropped = cli(&["interpolate", "--sing", "A4", "--protos", "A1,A2,A3,A4"]);
    expect("exit without I22", dropped.code, 1)?;
    if !dropped.stderr.contains("underdetermined") {
        return Err(format!("expected Underdetermined, got {:?}", dropped.stderr));
    }
    within("A4 interpolation", t, Duration::from_secs(1))?;
    Ok(format!("{} ; without I22: {}", out.stdout.trim(), dropped.stderr.trim()))
}

// Cramer's rule on an n x n system, n <= 3.
fn cramer(a: &[Vec<i64>], b: &[i64]) -> Vec<Rat> {
    fn det(m: &[Vec<Rat>]) -> Rat {
        match m.len() {
            1 => m[0][0].clone(),
            n => (0..n)
                .map(|j| {
                    let minor: Vec<Vec<Rat>> = m[1..]
                        .iter()
                        .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, x)| x.clone()).collect())
                        .collect();
                    let s = if j % 2 == 0 { int(1) } else { int(-1) };
                    s * m[0][j].clone() * det(&minor)
                })
                .fold(int(0), |acc, x| acc + x),
        }
    }
    let m: Vec<Vec<Rat>> = a.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
    let d = det(&m);
    (0..m.len())
        .map(|j| {
            let mj: Vec<Vec<Rat>> = m
                .iter()
                .zip(b)
                .map(|(r, &bi)| r.iter().enumerate().map(|(k, x)| if k == j { int(bi) } else { x.clone() }).collect())
                .collect();
            det(&mj) / d.clone()
        })
        .collect()
}

fn c2_interpolation_cross_checks() -> Outcome {
    let t = Instant::now();
    // Unknowns in the order c1^2, c2 and c1^3, c1c2, c3.
    let a2 = cramer(&[vec![1, -1], vec![4, -2]], &[0, 2]);
    let a3 = cramer(&[vec![1, -1, 1], vec![4, -2, 1], vec![9, -3, 1]], &[0, 0, 2]);
    let from_solution = |monos: &[&str], x: &[Rat]| {
        QPoly::from_terms(monos.iter().zip(x).map(|(m, c)| (poly(m).first_term().unwrap().0.clone(), c.clone())))
    };
    let want2 = from_solution(&["c1^2", "c2"], &a2);
    let want3 = from_solution(&["c1^3", "c1c2", "c3"], &a3);
    expect("A2 oracle", want2.clone(), poly("c1^2+c2"))?;
    expect("A3 oracle", want3.clone(), poly("c1^3+3c1c2+2c3"))?;
    let got2 = tp_interpolate("A2", 0, Some(&["A1", "A2"])).map_err(|e| e.to_string())?;
    let got3 = tp_interpolate("A3", 0, Some(&["A1", "A2", "A3"])).map_err(|e| e.to_string())?;
    expect("A2", got2.clone(), want2)?;
    expect("A3", got3.clone(), want3)?;
    within("interpolation", t, Duration::from_secs(1))?;
    Ok(format!("A2 -> {got2}, A3 -> {got3}"))
}

fn c3_residue_a3() -> Outcome {
    let t = Instant::now();
    let ts = ts_residue_preset(Preset::A3, -3).map_err(|e| e.to_string())?;
    let keys: [([i32; 3], i64); 8] = [
        ([0, 0, 0], 1),
        ([1, 0, -1], 3),
        ([2, -1, -1], 2),
        ([1, 1, -2], 1),
        ([2, 0, -2], 7),
        ([3, -1, -2], 10),
        ([5, -2, -3], 60),
        ([4, -1, -3], 26),
    ];
    for (k, c) in keys {
        expect(&format!("d{k:?}"), ts.coeff(&k), int(c))?;
    }
    let l0 = specialize_d(&ts, 0).map_err(|e| e.to_string())?;
    expect("l=0", l0, poly("c1^3+3c2c1+2c3"))?;
    let l1 = specialize_d(&ts, 1).map_err(|e| e.to_string())?;
    expect("l=1", l1, poly("c2^3+3c3c2c1+2c4c1^2+c3^2+7c4c2+10c5c1+12c6"))?;
    // the displayed part of the l=2 row
    let l2 = specialize_d(&ts, 2).map_err(|e| e.to_string())?;
    let shown = poly("c3^3+3c4c3c2+2c5c2^2+c4^2c1+7c5c3c1+10c6c2c1+12c7c1^2+60c8c1+26c7c2");
    for (m, c) in shown.terms() {
        expect(&format!("l=2 {m}"), l2.coeff(m), c.clone())?;
    }
    within("A3 residue", t, Duration::from_secs(10))?;
    Ok("8 coefficients, l=0 and l=1 specializations".into())
}

fn c4_residue_a4() -> Outcome {
    let t = Instant::now();
    let ts = ts_residue_preset(Preset::A4, -1).map_err(|e| e.to_string())?;
    let by_residue = specialize_d(&ts, 0).map_err(|e| e.to_string())?;
    let by_interpolation = tp_interpolate("A4", 0, None).map_err(|e| e.to_string())?;
    expect("residue vs interpolation", &by_residue, &by_interpolation)?;
    expect("value", &by_residue, &poly("c1^4+6c1^2c2+9c1c3+2c2^2+6c4"))?;
    within("A4 residue", t, Duration::from_secs(60))?;
    Ok(by_residue.to_string())
}

fn c5_localization() -> Outcome {
    let t = Instant::now();
    let tp = |ell: u32| if ell == 0 { poly("c1^2+c2") } else { poly("c2^2+c1c3+2c4") };
    for (m, n) in [(1, 1), (2, 2), (2, 3), (3, 4)] {
        let loc = localization_tp_a2(m, n).map_err(|e| format!("({m},{n}): {e}"))?;
        let want = expand_in_ab(&tp(n - m), m, n).map_err(|e| e.to_string())?;
        expect(&format!("({m},{n})"), loc, want)?;
    }
    within("localization", t, Duration::from_secs(10))?;
    Ok("(1,1) (2,2) (2,3) (3,4)".into())
}

fn c6_conversions() -> Outcome {
    let t = Instant::now();
    let store = FixtureStore::embedded();
    let err = |e: tpcalc_core::symmetric::SymError| e.to_string();
    // (a)
    let rows = [
        (0, "c1^2+c2", "s11+2s2"),
        (1, "c2^2+c1c3+2c4", "s22+2s31+4s4"),
        (2, "", "s33+2s42+4s51+8s6"),
    ];
    let a2 = store.get("Ts.A2").unwrap().to_rseries().unwrap();
    for (ell, chern, s) in rows {
        let s = schur(s);
        let from_series = schur_contract(&specialize_r(&a2, ell).map_err(|e| e.to_string())?);
        if !chern.is_empty() {
            expect(&format!("A2 l={ell} chern"), from_series.clone(), poly(chern))?;
        }
        expect(&format!("A2 l={ell} chern->schur"), schur_expand(&from_series, None).map_err(err)?, s.clone())?;
        expect(&format!("A2 l={ell} schur->chern"), schur_contract(&s), from_series)?;
    }
    // (b)
    let tables = [
        (
            "c1^5+10c1^3c2+25c1^2c3+10c1c2^2+38c1c4+12c2c3+24c5",
            "s11111+14s2111+35s221+71s311+92s32+154s41+120s5",
        ),
        (
            "2c1^2c2^2+3c2^3-2c1^3c3+2c1c2c3-3c3^2-5c1^2c4+9c2c4",
            "2s2211+5s222+12s321+4s33+16s42+6s51+6s6",
        ),
    ];
    for (m, s) in tables {
        let e = schur_expand(&poly(m), None).map_err(err)?;
        expect("7 coefficients", e.len(), 7)?;
        expect(m, e, schur(s))?;
    }
    // (c)
    let mono = store.get("SSMTp.A1.l0.chern").unwrap().to_chern_poly().map_err(|e| e.to_string())?;
    let sch = store.get("SSMTp.A1.l0.schur").unwrap().to_schur().map_err(|e| e.to_string())?;
    let known_mono = poly("c1+(-2c1^2-c2)+(3c1^3+c3+3c1c2)+(-4c1^4-6c1^2c2-7c1c3+3c2^2-c4)");
    let known_schur = schur("s1-2s11-3s2+3s111+9s21+7s3-4s1111-18s211-11s22-28s31-15s4");
    expect("SSM monomial fixture", &mono, &known_mono)?;
    expect("SSM Schur fixture", &sch, &known_schur)?;
    let contracted = schur_contract(&sch);
    for d in 1..=4 {
        expect(&format!("SSM degree {d}"), contracted.homogeneous_part(d), mono.homogeneous_part(d))?;
    }
    within("conversions", t, Duration::from_secs(5))?;
    Ok("A2 l=0,1,2; A5 and I24 tables; SSM A1 through degree 4".into())
}

fn c7_stabilization() -> Outcome {
    let store = FixtureStore::embedded();
    let chern = |id: &str| store.get(id).unwrap().to_chern_poly().map_err(|e| e.to_string());
    let err = |e: tpcalc_core::thom_series::SeriesError| e.to_string();
    expect("A3", flat(&chern("Tp.A3.l1")?, 3).map_err(err)?, chern("Tp.A3.l0")?)?;
    let a2_l2 = schur_contract(&store.get("Tp.A2.l2.schur").unwrap().to_schur().map_err(|e| e.to_string())?);
    expect("A2 l=1", flat(&chern("Tp.A2.l1")?, 2).map_err(err)?, chern("Tp.A2.l0")?)?;
    expect("A2 l=2", flat(&a2_l2, 2).map_err(err)?, chern("Tp.A2.l1")?)?;
    let k1 = groth("g22+2g31+4g4-2g32-5g41-4g5+g42+4g51+g6-g61");
    let k0 = groth("g11+2g2-2g21-g3+g31");
    expect("K-theory", groth_flat(&k1).map_err(|e| e.to_string())?, k0)?;
    Ok("A3 l=1->0, A2 l=1->0 and l=2->1, K-theory l=1->0".into())
}

fn c8_mod2() -> Outcome {
    let e = |x: tpcalc_core::classes::ClassError| x.to_string();
    let sigma3 = mod2_reduce(&gtp(3, 0)).map_err(e)?;
    expect("Sigma3", sigma3.clone(), mod2_reduce(&poly("w3^3+w4^2w1+w5w2^2+w1w3w5")).map_err(e)?)?;
    let cusp = mod2_reduce(&expand_in_ab(&poly("c1^2+c2"), 2, 2).map_err(e)?).map_err(e)?;
    expect("cusp", cusp.clone(), mod2_reduce(&poly("a2+a1b1+b1^2+b2")).map_err(e)?)?;
    Ok(format!("{sigma3} ; {cusp}"))
}

fn c9_hbar_zero() -> Outcome {
    let store = FixtureStore::embedded();
    let at0 = hbar_substitute(store.get("MSTp.A2.l0").unwrap(), &int(0)).map_err(|e| e.to_string())?;
    let k0 = groth("g11+2g2-2g21-g3+g31");
    let labels = ["11", "2", "111", "21", "3", "1111", "211", "31"];
    for l in labels {
        let p = Partition::from_entries(&l.bytes().map(|b| (b - b'0') as i32).collect::<Vec<_>>()).unwrap();
        expect(&format!("g{l}"), at0.coeff(&p), k0.coeff(&p))?;
    }
    Ok(format!("{} label comparisons", labels.len()))
}

fn rand_poly() -> impl Strategy<Value = QPoly> {
    let vars = [VarId::c(1), VarId::c(2), VarId::c(3), VarId::a(1), VarId::b(1), VarId::b(2)];
    let mono = proptest::collection::vec((0usize..6, 1u32..=3), 0..=3)
        .prop_map(move |v| Mono::from_pairs(v.into_iter().map(|(i, e)| (vars[i], e))));
    proptest::collection::vec((mono, -9i64..=9, 1i64..=3), 0..=5)
        .prop_map(|t| QPoly::from_terms(t.into_iter().map(|(m, n, d)| (m, rat(n, d)))))
}

fn fail<T: std::fmt::Debug>(what: &str, e: proptest::test_runner::TestError<T>) -> String {
    format!("{what}: {e}")
}

fn c10_properties() -> Outcome {
    let config = Config {
        cases: 128,
        failure_persistence: None,
        ..Config::default()
    };

    TestRunner::new(config.clone())
        .run(&(rand_poly(), rand_poly(), rand_poly()), |(p, q, r)| {
            prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            Ok(())
        })
        .map_err(|e| fail("ring laws", e))?;

    TestRunner::new(config.clone())
        .run(&(rand_poly(), 0u32..6), |(p, cutoff)| {
            let body = &QPoly::one() + &QPoly::from_terms(p.terms().filter(|(m, _)| m.degree() > 0).map(|(m, c)| (m.clone(), c.clone())));
            let s = TruncSeries::new(body, cutoff);
            prop_assert_eq!(s.mul(&s.invert().unwrap()), TruncSeries::one(cutoff));
            Ok(())
        })
        .map_err(|e| fail("series inverse", e))?;

    let partition = proptest::collection::vec(1u32..=8, 0..=8).prop_filter_map("size <= 8", |mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        (v.iter().sum::<u32>() <= 8).then(|| Partition::new(v).unwrap())
    });
    TestRunner::new(config.clone())
        .run(&proptest::collection::vec((partition, -5i64..=5), 0..=5), |terms| {
            let e = SchurExpansion::from_terms(terms.into_iter().map(|(p, c)| (p, int(c))));
            prop_assert_eq!(schur_expand(&schur_contract(&e), None).unwrap(), e);
            Ok(())
        })
        .map_err(|e| fail("schur round trip", e))?;

    let store = FixtureStore::embedded();
    TestRunner::new(config.clone())
        .run(&(0u32..16), |ell| {
            for r in store.records().filter(|r| r.basis == Basis::DSeries) {
                let ts = r.to_dseries().unwrap();
                let sigma = index_sum_check(&ts).unwrap() as i64;
                let w = ts.width() as i64;
                let p = specialize_known(&ts, ell);
                prop_assert!(p.is_homogeneous());
                prop_assert_eq!(p.max_degree().unwrap(), w * (ell as i64 + 1) + sigma);
                prop_assert!(p.terms().all(|(m, _)| m.width() as i64 <= w));
            }
            let a2 = store.get("Ts.A2").unwrap().to_rseries().unwrap();
            prop_assert!(a2.terms().all(|(z, _)| z.width() == 2 && z.sum() == 0));
            Ok(())
        })
        .map_err(|e| fail("series invariants", e))?;

    let contact: Vec<QPoly> = store
        .records()
        .filter(|r| r.theory == Theory::H && !r.is_truncated() && !r.singularity.starts_with("Sigma"))
        .filter_map(|r| match r.basis {
            Basis::ChernMonomial => r.to_chern_poly().ok(),
            Basis::Schur => r.to_schur().ok().map(|e| schur_contract(&e)),
            _ => None,
        })
        .collect();
    TestRunner::new(config.clone())
        .run(&(0..contact.len()), |i| {
            prop_assert!(schur_positive_check(&contact[i], None));
            Ok(())
        })
        .map_err(|e| fail("Schur positivity", e))?;

    let morin: Vec<QPoly> = store
        .records()
        .filter(|r| r.theory == Theory::H && r.basis == Basis::ChernMonomial && r.singularity.starts_with('A'))
        .map(|r| r.to_chern_poly().unwrap())
        .collect();
    let i24 = store.get("Tp.I24.l0").unwrap().to_chern_poly().unwrap();
    TestRunner::new(config)
        .run(&(0..morin.len()), |i| {
            prop_assert!(monomial_positive_check(&morin[i]));
            prop_assert!(!monomial_positive_check(&i24));
            Ok(())
        })
        .map_err(|e| fail("monomial positivity", e))?;

    Ok(format!(
        "6 suites x 128 cases; {} contact fixtures, {} Morin fixtures",
        contact.len(),
        morin.len()
    ))
}

fn c11_kts_calibration() -> (bool, String) {
    let cal = kts_calibrate(12);
    (cal.matched.is_some(), cal.to_string().replace('\n', "; "))
}

fn main() {
    let gating: [(&str, fn() -> Outcome); 10] = [
        ("interpolation A4", c1_interpolation_a4),
        ("interpolation A2, A3", c2_interpolation_cross_checks),
        ("residue A3", c3_residue_a3),
        ("residue A4 vs interpolation", c4_residue_a4),
        ("localization", c5_localization),
        ("basis conversions", c6_conversions),
        ("stabilization", c7_stabilization),
        ("mod 2 reduction", c8_mod2),
        ("hbar = 0", c9_hbar_zero),
        ("property suites", c10_properties),
    ];
    let mut failures = 0;
    for (i, (name, f)) in gating.iter().enumerate() {
        let t = Instant::now();
        let r = f();
        let ms = t.elapsed().as_millis();
        match r {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({ms} ms): {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name} ({ms} ms): {detail}", i + 1);
            }
        }
    }
    let (matched, detail) = c11_kts_calibration();
    let status = if matched { "PASS" } else { "exploratory-failed" };
    println!("criterion 11 {status}  K-theory generating function: {detail}");
    if failures > 0 {
        println!("{failures} gating criteria failed");
        std::process::exit(1);
    }
    println!("criteria 1-10 passed");
}
