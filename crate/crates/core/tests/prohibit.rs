mod common;

use common::random_scheme;
use plumbsig::curve::{hand_formula, Curve, HandFamily};
use plumbsig::primes::odd_primes;
use plumbsig::prohibit::{family, genus_bound, mt_check, rohlin_mishachev, FamilyName, Verdict};
use plumbsig::scheme::parse_scheme;

/// First `(p, b)` with `p <= 31` violating the bound, by direct evaluation.
fn brute_force(curve: &Curve, m: u64) -> Option<(u64, u64)> {
    let bound = genus_bound(m);
    for p in odd_primes().take_while(|&p| p <= 31) {
        for b in 1..=(p - 1) / 2 {
            let v = curve.sig_eta(p, b).unwrap();
            if v.sig.abs() + v.eta > bound {
                return Some((p, b));
            }
        }
    }
    None
}

#[test]
fn scan_agrees_with_brute_force() {
    let mut both = [0usize; 2];
    for seed in 0..5u64 {
        let s = random_scheme(seed, 5, None);
        let curve = Curve::new(&s).unwrap();
        let degrees = (1..=9u64).filter(|m| (m % 2 == 1) == s.is_odd());
        for m in degrees {
            let report = mt_check(&s, m).unwrap();
            let brute = brute_force(&curve, m);
            assert_eq!(report.witness.map(|w| (w.p, w.b)), brute, "{s} in degree {m}");
            assert_eq!(report.verdict == Verdict::Prohibited, brute.is_some());
            both[usize::from(brute.is_some())] += 1;
        }
    }
    // the sample exercises both outcomes
    assert!(both[0] > 0 && both[1] > 0, "{both:?}");
}

#[test]
fn witness_violates_the_bound() {
    for seed in 10..30u64 {
        let s = random_scheme(seed, 6, None);
        let m = if s.is_odd() { 5 } else { 4 };
        let r = mt_check(&s, m).unwrap();
        if let Some(w) = r.witness {
            assert!(w.sig.abs() + w.eta > w.bound);
            assert_eq!(w.bound, genus_bound(m));
            let direct = Curve::new(&s).unwrap().sig_eta(w.p, w.b).unwrap();
            assert_eq!((direct.sig, direct.eta), (w.sig, w.eta));
        }
        // the scan log is ordered by (p, b)
        assert!(r.scan.windows(2).all(|e| (e[0].p, e[0].b) <= (e[1].p, e[1].b)));
    }
}

#[test]
fn families_up_to_thirteen_are_prohibited_at_three() {
    let valid = |name: FamilyName, k: u64| match name {
        FamilyName::OddNest => k >= 4 && k % 3 == 1,
        FamilyName::DoubleNest => k >= 5 && k % 3 != 1,
    };
    for name in [FamilyName::OddNest, FamilyName::DoubleNest] {
        for k in 1..=13u64 {
            let got = family(name, k);
            if !valid(name, k) {
                assert!(got.is_err(), "{name} k = {k}");
                continue;
            }
            let s = got.unwrap();
            let m = 2 * k + 1;
            // M-scheme: the ovals and the one-sided component number g + 1
            assert_eq!(s.oval_count() as i64, genus_bound(m));
            assert!(rohlin_mishachev(&s, m).unwrap(), "{name} k = {k}");
            let r = mt_check(&s, m).unwrap();
            assert_eq!(r.verdict, Verdict::Prohibited);
            let w = r.witness.unwrap();
            assert_eq!((w.p, w.b), (3, 1), "{name} k = {k}");
        }
    }
}

#[test]
fn family_witness_matches_hand_formulas() {
    let s = family(FamilyName::OddNest, 4).unwrap();
    let w = mt_check(&s, 9).unwrap().witness.unwrap();
    assert_eq!((w.sig, w.eta), hand_formula(HandFamily::A, 12, 15).unwrap());
    let s = family(FamilyName::DoubleNest, 5).unwrap();
    let w = mt_check(&s, 11).unwrap().witness.unwrap();
    assert_eq!((w.sig, w.eta), hand_formula(HandFamily::C, 24, 19).unwrap());
    assert_eq!(w.sig.abs() + w.eta, 53);
    assert_eq!(w.bound, 45);
}

#[test]
fn rohlin_mishachev_fails_for_example_scheme() {
    let s = parse_scheme("J 1-<2-> 2+").unwrap();
    let r = mt_check(&s, 7).unwrap();
    assert!(!r.rm_pass);
    // the scan still runs
    assert!(!r.scan.is_empty());
}

#[test]
fn report_json_round_trips() {
    let s = parse_scheme("J 1-<12- 15+>").unwrap();
    let r = mt_check(&s, 9).unwrap();
    let v: serde_json::Value = serde_json::to_value(&r).unwrap();
    for key in ["scheme", "m", "rm_pass", "verdict", "witness", "scan"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["witness"]["bound"], 28);
    let back: plumbsig::prohibit::ProhibitionReport = serde_json::from_value(v).unwrap();
    assert_eq!(back, r);
}
