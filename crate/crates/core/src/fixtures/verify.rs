use std::fmt;

use super::checks::{monomial_positive_check, schur_positive_check, ssm_sign_check};
use super::codim::{codim_contact, descriptor, descriptor_table};
use super::hbar::{hbar_substitute, hbar_to_s_report};
use super::record::{Basis, FixtureStore};
use super::FixtureError;
use crate::classes::{expand_in_ab, mod2_reduce};
use crate::interpolation::tp_interpolate;
use crate::residue::{kts_calibrate, localization_tp_a2, ts_residue_preset, Preset};
use crate::scalar::Rat;
use crate::symmetric::{groth_flat, gtp, schur_contract, schur_expand, SchurExpansion};
use crate::thom_series::{flat, index_sum_check, specialize_d, specialize_known, specialize_r};
use crate::QPoly;

type Outcome = Result<(), String>;

/// A registered check: which fixtures it reads and whether it gates
/// `verify`.
pub struct Check {
    pub id: &'static str,
    pub uses: &'static [&'static str],
    pub gating: bool,
    run: fn(&FixtureStore) -> Result<Outcome, FixtureError>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub id: String,
    pub gating: bool,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match (self.passed, self.gating) {
            (true, _) => "pass",
            (false, true) => "FAIL",
            (false, false) => "fail (non-gating)",
        };
        write!(f, "{status:<18} {}", self.id)?;
        if !self.detail.is_empty() {
            write!(f, "  {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<CheckReport>,
}

impl VerifyReport {
    pub fn gating_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed || !c.gating)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed && c.gating).count();
        write!(f, "{} checks, {} gating failures", self.checks.len(), failed)
    }
}

fn same<T: PartialEq + fmt::Display>(what: &str, got: T, want: T) -> Outcome {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

fn same_schur(what: &str, got: &SchurExpansion, want: &SchurExpansion) -> Outcome {
    if got.terms().eq(want.terms()) {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

fn chern(s: &FixtureStore, id: &str) -> Result<QPoly, FixtureError> {
    s.get(id)?.to_chern_poly()
}

fn schur(s: &FixtureStore, id: &str) -> Result<SchurExpansion, FixtureError> {
    s.get(id)?.to_schur()
}

fn round_trip(s: &FixtureStore, chern_id: &str, schur_id: &str) -> Result<Outcome, FixtureError> {
    let p = chern(s, chern_id)?;
    let e = schur(s, schur_id)?;
    let expanded = schur_expand(&p, None)?;
    Ok(same_schur("schur_expand", &expanded, &e).and_then(|_| same("schur_contract", schur_contract(&e), p)))
}

fn all<I: IntoIterator<Item = Outcome>>(outcomes: I) -> Outcome {
    let errs: Vec<String> = outcomes.into_iter().filter_map(Result::err).collect();
    if errs.is_empty() {
        Ok(())
    } else {
        Err(errs.join("; "))
    }
}

macro_rules! check {
    ($id:expr, [$($u:expr),*], $gating:expr, $f:expr) => {
        Check { id: $id, uses: &[$($u),*], gating: $gating, run: $f }
    };
}

/// Every registered check, sorted by id.
pub fn registry() -> Vec<Check> {
    let mut v = vec![
        check!("KTp.A2.l1.flat", ["KTp.A2.l0", "KTp.A2.l1"], true, |s| {
            let l1 = s.get("KTp.A2.l1")?.to_groth()?;
            let l0 = s.get("KTp.A2.l0")?.to_groth()?;
            Ok(same("groth_flat", groth_flat(&l1)?, l0))
        }),
        check!("KTs.A2.cohomology", ["KTs.A2", "Ts.A2"], true, |s| {
            let k = s.get("KTs.A2")?.to_rseries()?;
            let h = s.get("Ts.A2")?.to_rseries()?;
            Ok(all(h.terms().map(|(z, c)| {
                same(&format!("r{:?}", z.entries()), k.coeff(z.entries()), c.clone())
            })))
        }),
        check!("KTs.A2.gf", ["KTs.A2"], false, |_| {
            let cal = kts_calibrate(12);
            let text = cal.to_string().replace('\n', "; ");
            Ok(if cal.matched.is_some() { Ok(()) } else { Err(text) })
        }),
        check!("MSTp.A2.l0.hbar0", ["MSTp.A2.l0", "KTp.A2.l0"], true, |s| {
            let ms = s.get("MSTp.A2.l0")?;
            let at0 = hbar_substitute(ms, &Rat::default())?;
            let k = s.get("KTp.A2.l0")?.to_groth()?;
            Ok(all(ms.to_hbar_terms()?.iter().map(|(p, _)| {
                same(&format!("g{p}"), at0.coeff(p), k.coeff(p))
            })))
        }),
        check!("MSTp.A2.l0.pole", ["MSTp.A2.l0"], true, |s| {
            let r = hbar_substitute(s.get("MSTp.A2.l0")?, &Rat::from_integer((-1).into()));
            Ok(match r {
                Err(FixtureError::PoleAtValue(_)) => Ok(()),
                other => Err(format!("expected a pole at hbar=-1, got {other:?}")),
            })
        }),
        check!("MSTp.A2.l0.s", ["MSTp.A2.l0", "MSTp.A2.l0.s"], false, |s| {
            let rows = hbar_to_s_report(s.get("MSTp.A2.l0")?, s.get("MSTp.A2.l0.s")?)?;
            let bad: Vec<String> = rows
                .iter()
                .filter(|r| r.stored.is_some() && !r.agrees())
                .map(|r| format!("g{}: ({})/({}) vs {}", r.label, r.num, r.den, r.stored.as_ref().unwrap()))
                .collect();
            Ok(if bad.is_empty() { Ok(()) } else { Err(bad.join("; ")) })
        }),
        check!("RealZ2.A2.ab", ["RealZ2.A2.ab", "Tp.A2.l0"], true, |s| {
            let p = expand_in_ab(&chern(s, "Tp.A2.l0")?, 2, 2)?;
            Ok(same("mod 2", mod2_reduce(&p)?, s.get("RealZ2.A2.ab")?.to_f2_poly()?))
        }),
        check!("RealZ2.Sigma3.l0", ["RealZ2.Sigma3.l0", "Tp.Sigma3.l0"], true, |s| {
            let g = gtp(3, 0);
            let w = s.get("RealZ2.Sigma3.l0")?.to_f2_poly()?;
            let m = mod2_reduce(&g)?;
            Ok(all([same("gtp(3,0)", g, chern(s, "Tp.Sigma3.l0")?), same("mod 2", m, w)]))
        }),
        check!("SSMTp.A1.l0", ["SSMTp.A1.l0.chern", "SSMTp.A1.l0.schur"], true, |s| {
            round_trip(s, "SSMTp.A1.l0.chern", "SSMTp.A1.l0.schur")
        }),
        check!("SSMTp.A1.l0.signs", ["SSMTp.A1.l0.schur"], true, |s| {
            Ok(if ssm_sign_check(s.get("SSMTp.A1.l0.schur")?)? {
                Ok(())
            } else {
                Err("signs do not alternate by degree".into())
            })
        }),
        check!("Tp.A1.l0", ["Tp.A1.l0", "Ts.A1"], true, |s| {
            let ts = s.get("Ts.A1")?.to_dseries()?;
            let mut out = vec![same("l=0", specialize_d(&ts, 0)?, chern(s, "Tp.A1.l0")?)];
            for l in 0..6 {
                out.push(same(&format!("l={l}"), specialize_d(&ts, l)?, QPoly::chern(l as i32 + 1)));
            }
            Ok(all(out))
        }),
        check!("Tp.A2.l0", ["Tp.A2.l0", "Tp.A2.l0.schur"], true, |s| round_trip(s, "Tp.A2.l0", "Tp.A2.l0.schur")),
        check!("Tp.A2.l1", ["Tp.A2.l1", "Tp.A2.l1.schur"], true, |s| round_trip(s, "Tp.A2.l1", "Tp.A2.l1.schur")),
        check!("Tp.A2.l2", ["Tp.A2.l2.schur"], true, |s| {
            let e = schur(s, "Tp.A2.l2.schur")?;
            Ok(same_schur("round trip", &schur_expand(&schur_contract(&e), None)?, &e))
        }),
        check!("Tp.A2.l1.flat", ["Tp.A2.l0", "Tp.A2.l1"], true, |s| {
            Ok(same("flat", flat(&chern(s, "Tp.A2.l1")?, 2)?, chern(s, "Tp.A2.l0")?))
        }),
        check!("Tp.A2.l2.flat", ["Tp.A2.l1", "Tp.A2.l2.schur"], true, |s| {
            let l2 = schur_contract(&schur(s, "Tp.A2.l2.schur")?);
            Ok(same("flat", flat(&l2, 2)?, chern(s, "Tp.A2.l1")?))
        }),
        check!("Tp.A2.localization", ["Tp.A2.l0", "Tp.A2.l1"], true, |s| {
            let mut out = Vec::new();
            for (m, n) in [(1, 1), (2, 2), (2, 3), (3, 4)] {
                let tp = chern(s, &format!("Tp.A2.l{}", n - m))?;
                out.push(same(&format!("m={m} n={n}"), localization_tp_a2(m, n)?, expand_in_ab(&tp, m, n)?));
            }
            Ok(all(out))
        }),
        check!("Tp.A3.l1.flat", ["Tp.A3.l0", "Tp.A3.l1"], true, |s| {
            Ok(same("flat", flat(&chern(s, "Tp.A3.l1")?, 3)?, chern(s, "Tp.A3.l0")?))
        }),
        check!("Tp.A3.series", ["Tp.A3.l0", "Tp.A3.l1", "Tp.A3.l2", "Ts.A3"], true, |s| {
            let ts = s.get("Ts.A3")?.to_dseries()?;
            let mut out = vec![
                same("l=0", specialize_d(&ts, 0)?, chern(s, "Tp.A3.l0")?),
                same("l=1", specialize_d(&ts, 1)?, chern(s, "Tp.A3.l1")?),
            ];
            let known = specialize_known(&ts, 2);
            for (m, c) in chern(s, "Tp.A3.l2")?.terms() {
                out.push(same(&format!("l=2 {m}"), known.coeff(m), c.clone()));
            }
            Ok(all(out))
        }),
        check!("Tp.A4.l0.interpolation", ["Tp.A4.l0"], true, |s| {
            Ok(same("interpolation", tp_interpolate("A4", 0, None)?, chern(s, "Tp.A4.l0")?))
        }),
        check!("Tp.A4.l0.residue", ["Tp.A4.l0"], true, |s| {
            let ts = ts_residue_preset(Preset::A4, -1)?;
            Ok(same("residue", specialize_d(&ts, 0)?, chern(s, "Tp.A4.l0")?))
        }),
        check!("Tp.A5.l0", ["Tp.A5.l0", "Tp.A5.l0.schur"], true, |s| round_trip(s, "Tp.A5.l0", "Tp.A5.l0.schur")),
        check!("Tp.I24.l0", ["Tp.I24.l0", "Tp.I24.l0.schur"], true, |s| round_trip(s, "Tp.I24.l0", "Tp.I24.l0.schur")),
        check!("Ts.A2", ["Ts.A2", "Tp.A2.l0.schur", "Tp.A2.l1.schur", "Tp.A2.l2.schur"], true, |s| {
            let ts = s.get("Ts.A2")?.to_rseries()?;
            let mut out = Vec::new();
            for l in 0..3 {
                let want = schur(s, &format!("Tp.A2.l{l}.schur"))?;
                out.push(same_schur(&format!("l={l}"), &specialize_r(&ts, l)?, &want));
            }
            Ok(all(out))
        }),
        check!("Ts.A3.residue", ["Ts.A3"], true, |s| {
            let stored = s.get("Ts.A3")?.to_dseries()?;
            let computed = ts_residue_preset(Preset::A3, -3)?;
            Ok(all(stored.terms().map(|(k, c)| {
                same(&format!("d{k:?}"), computed.coeff(k), c.clone())
            })))
        }),
        check!("Ts.invariants", ["Ts.A1", "Ts.A3"], true, |s| {
            let mut out = Vec::new();
            for r in s.records().filter(|r| r.basis == Basis::DSeries) {
                let ts = r.to_dseries()?;
                out.push(match index_sum_check(&ts) {
                    Ok(_) => Ok(()),
                    Err(e) => Err(format!("{}: {e}", r.id)),
                });
            }
            Ok(all(out))
        }),
        check!(
            "positivity.schur",
            ["Tp.A1.l0", "Tp.A2.l0", "Tp.A2.l1", "Tp.A2.l2.schur", "Tp.A3.l0", "Tp.A3.l1", "Tp.A4.l0", "Tp.A5.l0", "Tp.I22.l1", "Tp.I24.l0"],
            true,
            |s| {
                let mut polys: Vec<(String, QPoly)> = Vec::new();
                for id in ["Tp.A1.l0", "Tp.A2.l0", "Tp.A2.l1", "Tp.A3.l0", "Tp.A3.l1", "Tp.A4.l0", "Tp.A5.l0", "Tp.I22.l1", "Tp.I24.l0"] {
                    polys.push((id.to_string(), chern(s, id)?));
                }
                polys.push(("Tp.A2.l2".into(), schur_contract(&schur(s, "Tp.A2.l2.schur")?)));
                for r in 1..=3 {
                    for l in 0..=2 {
                        polys.push((format!("gtp({r},{l})"), gtp(r, l)));
                    }
                }
                Ok(all(polys.iter().map(|(id, p)| {
                    if schur_positive_check(p, None) { Ok(()) } else { Err(format!("{id} not Schur positive")) }
                })))
            }
        ),
        check!(
            "positivity.monomial",
            ["Tp.A1.l0", "Tp.A2.l0", "Tp.A2.l1", "Tp.A3.l0", "Tp.A3.l1", "Tp.A3.l2", "Tp.A4.l0", "Tp.A5.l0", "Tp.I24.l0"],
            true,
            |s| {
                let mut out = Vec::new();
                for id in ["Tp.A1.l0", "Tp.A2.l0", "Tp.A2.l1", "Tp.A3.l0", "Tp.A3.l1", "Tp.A3.l2", "Tp.A4.l0", "Tp.A5.l0"] {
                    out.push(if monomial_positive_check(&chern(s, id)?) { Ok(()) } else { Err(format!("{id} has a negative monomial")) });
                }
                out.push(if monomial_positive_check(&chern(s, "Tp.I24.l0")?) {
                    Err("Tp.I24.l0 unexpectedly monomial positive".into())
                } else {
                    Ok(())
                });
                Ok(all(out))
            }
        ),
        check!("codim.contact", [], true, |_| {
            let table: Vec<String> = descriptor_table().iter().map(|d| d.formula()).collect();
            let want = ["0l+0", "1l+1", "2l+2", "2l+4", "3l+3", "3l+4", "3l+5", "3l+9"];
            let a6 = descriptor("A6").expect("A6");
            let x2y3 = descriptor("(x^2,y^3)").expect("(x^2,y^3)");
            Ok(all([
                same("table", table.join(" "), want.join(" ")),
                same("A6", a6.formula(), "6l+6".into()),
                same("(x^2,y^3)", x2y3.formula(), "5l+7".into()),
                same("A6 at l=1", codim_contact(&a6, 1)?, 12),
            ]))
        }),
    ];
    v.sort_by_key(|c| c.id);
    v
}

fn run_check(store: &FixtureStore, c: &Check) -> CheckReport {
    let (passed, detail) = match (c.run)(store) {
        Ok(Ok(())) => (true, String::new()),
        Ok(Err(d)) => (false, d),
        Err(e) => (false, format!("error: {e}")),
    };
    CheckReport {
        id: c.id.to_string(),
        gating: c.gating,
        passed,
        detail,
    }
}

fn run_checks(store: &FixtureStore, checks: &[&Check]) -> Vec<CheckReport> {
    let mut reports: Vec<CheckReport> = std::thread::scope(|scope| {
        let handles: Vec<_> = checks
            .iter()
            .map(|c| scope.spawn(move || run_check(store, c)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("check thread")).collect()
    });
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    reports
}

/// Run the checks registered under `id`, or reading the fixture `id`.
pub fn verify_fixture(store: &FixtureStore, id: &str) -> Result<Vec<CheckReport>, FixtureError> {
    let reg = registry();
    let chosen: Vec<&Check> = reg.iter().filter(|c| c.id == id || c.uses.contains(&id)).collect();
    if chosen.is_empty() && !store.contains(id) {
        return Err(FixtureError::UnknownFixture(id.to_string()));
    }
    Ok(run_checks(store, &chosen))
}

/// Run every registered check.
pub fn verify_all(store: &FixtureStore) -> VerifyReport {
    let reg = registry();
    let all: Vec<&Check> = reg.iter().collect();
    VerifyReport {
        checks: run_checks(store, &all),
    }
}
