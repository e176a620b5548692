use tpcalc_core::classes::expand_in_ab;
use tpcalc_core::parse::parse_poly;
use tpcalc_core::residue::{
    kts_calibrate, kts_gf_laurent, laurent_expand, localization_tp_a2, ts_residue_preset, KRegion, Preset,
    ResidueError, ResidueIntegrand, ResidueTerm, Window,
};
use tpcalc_core::scalar::{int, rat};
use tpcalc_core::thom_series::{index_sum_check, specialize_d};
use tpcalc_core::{LinForm, QPoly, VarId};

fn poly(s: &str) -> QPoly {
    parse_poly(s).unwrap()
}

#[test]
fn localization_three_four() {
    // A2 at l = 1, pushed through source dimension 3 and target dimension 4
    let got = localization_tp_a2(3, 4).unwrap();
    assert_eq!(got, expand_in_ab(&poly("c2^2+c1c3+2c4"), 3, 4).unwrap());
    assert!(got.is_homogeneous());
    assert_eq!(got.max_degree(), Some(4));
}

#[test]
fn localization_rejects_bad_dimensions() {
    assert_eq!(localization_tp_a2(0, 1), Err(ResidueError::BadDimensions(0, 1)));
    assert_eq!(localization_tp_a2(3, 2), Err(ResidueError::BadDimensions(3, 2)));
}

#[test]
fn a3_series_specializations() {
    let ts = ts_residue_preset(Preset::A3, -2).unwrap();
    assert_eq!(index_sum_check(&ts), Ok(0));
    assert_eq!(specialize_d(&ts, 1).unwrap(), poly("c2^3+3c3c2c1+2c4c1^2+c3^2+7c4c2+10c5c1+12c6"));
    // the window does not reach l = 2
    assert!(specialize_d(&ts, 2).is_err());
}

#[test]
fn a3_residue_agrees_with_stored_series() {
    let store = tpcalc_core::fixtures::FixtureStore::embedded();
    let stored = store.get("Ts.A3").unwrap().to_dseries().unwrap();
    let computed = ts_residue_preset(Preset::A3, -3).unwrap();
    for (k, c) in stored.terms() {
        assert_eq!(&computed.coeff(k), c, "key {k:?}");
    }
}

#[test]
fn single_pole_geometric_series() {
    // 1/(2z1 - z2) with z1 dominant: (1/(2z1)) * sum (z2/(2z1))^k
    let f = LinForm::new([(VarId::z(1), int(2)), (VarId::z(2), int(-1))]).unwrap();
    let ri = ResidueIntegrand {
        nvars: 2,
        terms: vec![ResidueTerm {
            numerator: QPoly::one(),
            denominators: vec![f],
        }],
        include_vandermonde: false,
    };
    let exp = laurent_expand(&ri, &[0, 1], Window { floor: -3 }).unwrap();
    assert_eq!(exp.get(&vec![-1, 0]), Some(&rat(1, 2)));
    assert_eq!(exp.get(&vec![-2, 1]), Some(&rat(1, 4)));
    assert_eq!(exp.get(&vec![-3, 2]), Some(&rat(1, 8)));
    assert!(exp.keys().all(|k| k[0] + k[1] == -1));
}

#[test]
fn k_theory_regimes_invert_their_denominator() {
    // x2 regime: the printed numerator over x2 - 2x1 + x1^2 starts 1/x2
    let e = kts_gf_laurent(KRegion::X2, 4);
    assert_eq!(e.get(&(0, -1)), Some(&int(1)));
    assert_eq!(e.get(&(1, -2)), Some(&int(2)));
    let cal = kts_calibrate(12);
    assert!(cal.matched.is_none());
    assert_eq!(cal.diagnostic_hits, 12);
    assert_eq!(cal.trials.len(), 24);
}
