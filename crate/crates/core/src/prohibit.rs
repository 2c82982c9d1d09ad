//! Degree-level restrictions on complex schemes of dividing curves: the
//! Rohlin–Mishachev formula and the bound `|sig_{b/p}| + eta_p <= (m-1)(m-2)/2`
//! checked over every odd prime `p` and every `b`.
//!
//! The bound check is a finite scan. Away from the finitely many candidate
//! points of the profile, `sig_{b/p}` is the value on the surrounding interval
//! and `eta_p` is the generic nullity; every `b/p` with `p` dividing an entry
//! of `c⁺` is itself a listed point and is evaluated directly.

use serde::{Deserialize, Serialize};

use crate::curve::{format_frac, sample_in, Curve};
use crate::scheme::parse_scheme;
use crate::{ComplexScheme, Error, Result};

/// `(m-1)(m-2)/2`.
pub fn genus_bound(m: u64) -> i64 {
    let m = m as i64;
    (m - 1) * (m - 2) / 2
}

/// Type parity agrees with the degree and `-Δ` is `m² - 1` (odd `m`) or `m²`
/// (even `m`).
pub fn rohlin_mishachev(s: &ComplexScheme, m: u64) -> Result<bool> {
    let delta = Curve::new(s)?.char_data().delta;
    Ok(rohlin_mishachev_delta(s.is_odd(), delta, m))
}

fn rohlin_mishachev_delta(odd_type: bool, delta: i64, m: u64) -> bool {
    let m = m as i64;
    let odd_degree = m % 2 == 1;
    odd_type == odd_degree && -delta == if odd_degree { m * m - 1 } else { m * m }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    NotProhibited,
    Prohibited,
    /// An odd-type scheme in even degree or vice versa.
    ParityMismatch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub p: u64,
    pub b: u64,
    pub sig: i64,
    pub eta: i64,
    pub bound: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanEntry {
    /// `"(lo, hi)"` for an interval, `"b/p"` for a point.
    pub at: String,
    /// The smallest `b/p` represented by this entry.
    pub p: u64,
    pub b: u64,
    pub sig: i64,
    pub eta: i64,
    pub lhs: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProhibitionReport {
    pub scheme: String,
    pub m: u64,
    pub rm_pass: bool,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub scan: Vec<ScanEntry>,
}

/// Runs both restrictions for degree `m`. The witness, if any, is the
/// violating `b/p` with the smallest `p`, then the smallest `b`.
pub fn mt_check(s: &ComplexScheme, m: u64) -> Result<ProhibitionReport> {
    if m == 0 {
        return Err(Error::BadParameters("degree must be at least 1".into()));
    }
    let curve = Curve::new(s)?;
    let rm_pass = rohlin_mishachev_delta(s.is_odd(), curve.char_data().delta, m);
    let prof = curve.profile()?;
    let bound = genus_bound(m);

    let mut scan = Vec::new();
    for iv in &prof.intervals {
        let (p, b) = sample_in(iv.lo, iv.hi, 3);
        scan.push(ScanEntry {
            at: format!("({}, {})", format_frac(&iv.lo), format_frac(&iv.hi)),
            p,
            b,
            sig: iv.sig,
            eta: iv.eta,
            lhs: iv.sig.abs() + iv.eta,
        });
    }
    for pt in &prof.points {
        if let Some(eta) = pt.eta {
            scan.push(ScanEntry {
                at: format_frac(&pt.x),
                p: *pt.x.denom() as u64,
                b: *pt.x.numer() as u64,
                sig: pt.sig,
                eta,
                lhs: pt.sig.abs() + eta,
            });
        }
    }
    scan.sort_by_key(|e| (e.p, e.b));

    let witness =
        scan.iter().find(|e| e.lhs > bound).map(|e| Witness { p: e.p, b: e.b, sig: e.sig, eta: e.eta, bound });
    let verdict = if s.is_odd() != (m % 2 == 1) {
        Verdict::ParityMismatch
    } else if witness.is_some() {
        Verdict::Prohibited
    } else {
        Verdict::NotProhibited
    };
    Ok(ProhibitionReport { scheme: s.to_string(), m, rm_pass, verdict, witness, scan })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyName {
    /// `J 1-<a- b+>`, `k ≡ 1 (mod 3)`, `k >= 4`.
    OddNest,
    /// `J 1+<1+<a- b+>>`, `k ≢ 1 (mod 3)`, `k >= 5`.
    DoubleNest,
}

impl std::str::FromStr for FamilyName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "odd_nest" => Ok(FamilyName::OddNest),
            "double_nest" => Ok(FamilyName::DoubleNest),
            _ => Err(Error::BadParameters(format!("unknown family {s:?}"))),
        }
    }
}

impl std::fmt::Display for FamilyName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FamilyName::OddNest => "odd_nest",
            FamilyName::DoubleNest => "double_nest",
        })
    }
}

/// The degree-`2k+1` M-scheme of the family at parameter `k`.
pub fn family(name: FamilyName, k: u64) -> Result<ComplexScheme> {
    let k = k as i64;
    let bad = |why: &str| Err(Error::BadParameters(format!("{name} at k = {k}: {why}")));
    let (alpha, beta, template): (i64, i64, fn(i64, i64) -> String) = match name {
        FamilyName::OddNest => {
            if k < 4 {
                return bad("need k >= 4");
            }
            if k % 3 != 1 {
                return bad("need k ≡ 1 (mod 3)");
            }
            (5 * k * k - k - 4, 7 * k * k - 5 * k - 2, |a, b| format!("J 1-<{a}- {b}+>"))
        }
        FamilyName::DoubleNest => {
            if k < 5 {
                return bad("need k >= 5");
            }
            if k % 3 == 1 {
                return bad("need k ≢ 1 (mod 3); the oval counts are not integers");
            }
            (7 * k * k - 5 * k - 6, 5 * k * k - k - 6, |a, b| format!("J 1+<1+<{a}- {b}+>>"))
        }
    };
    if alpha % 6 != 0 || beta % 6 != 0 {
        return bad("oval counts are not integers");
    }
    parse_scheme(&template(alpha / 6, beta / 6))
}
