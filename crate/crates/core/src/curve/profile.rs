use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::Curve;
use crate::primes::{is_odd_prime, next_odd_prime, odd_primes};
use crate::{Error, Result};

pub type Frac = Ratio<i64>;

/// `n/d`, always with an explicit denominator (`0/1`, not `0`).
pub fn format_frac(x: &Frac) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn parse_frac(s: &str) -> Option<Frac> {
    let (n, d) = s.trim().split_once('/')?;
    let (n, d): (i64, i64) = (n.trim().parse().ok()?, d.trim().parse().ok()?);
    (d != 0).then(|| Frac::new(n, d))
}

mod frac_serde {
    use super::{format_frac, parse_frac, Frac};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Frac, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_frac(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Frac, D::Error> {
        let s = String::deserialize(d)?;
        parse_frac(&s).ok_or_else(|| D::Error::custom(format!("bad fraction {s:?}")))
    }

    pub mod vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(xs: &[Frac], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(xs.len()))?;
            for x in xs {
                seq.serialize_element(&format_frac(x))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Frac>, D::Error> {
            Vec::<String>::deserialize(d)?
                .iter()
                .map(|s| parse_frac(s).ok_or_else(|| D::Error::custom(format!("bad fraction {s:?}"))))
                .collect()
        }
    }
}

/// An open interval of constancy; `(sample_p, sample_b)` is the point `b/p`
/// the value was computed at.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileInterval {
    #[serde(with = "frac_serde")]
    pub lo: Frac,
    #[serde(with = "frac_serde")]
    pub hi: Frac,
    pub sig: i64,
    pub eta: i64,
    pub sample_p: u64,
    pub sample_b: u64,
}

/// A listed point. `eta` is present iff the denominator is an odd prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfilePoint {
    #[serde(with = "frac_serde")]
    pub x: Frac,
    pub sig: i64,
    pub eta: Option<i64>,
}

/// `sig_x(C)` as a step function on `(0, 1/2)`: intervals alternate with
/// listed points, starting and ending with an interval.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureProfile {
    /// Every candidate jump `k/|c⁺_v|`, before merging.
    #[serde(with = "frac_serde::vec")]
    pub breakpoints: Vec<Frac>,
    pub intervals: Vec<ProfileInterval>,
    pub points: Vec<ProfilePoint>,
    pub nul: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProfileLine<'a> {
    Interval(&'a ProfileInterval),
    Point(&'a ProfilePoint),
}

impl std::fmt::Display for ProfileLine<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ProfileLine::Interval(i) => {
                write!(f, "({}, {}) --> ({}, {})", format_frac(&i.lo), format_frac(&i.hi), i.sig, i.eta)
            }
            ProfileLine::Point(p) => match p.eta {
                Some(eta) => write!(f, "{} --> ({}, {})", format_frac(&p.x), p.sig, eta),
                None => write!(f, "{} --> ({})", format_frac(&p.x), p.sig),
            },
        }
    }
}

impl SignatureProfile {
    pub fn lines(&self) -> Vec<ProfileLine<'_>> {
        let mut out = Vec::with_capacity(self.intervals.len() + self.points.len());
        for (i, iv) in self.intervals.iter().enumerate() {
            out.push(ProfileLine::Interval(iv));
            if let Some(p) = self.points.get(i) {
                out.push(ProfileLine::Point(p));
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for line in self.lines() {
            writeln!(s, "{line}").unwrap();
        }
        s
    }

    /// `(sig_x, eta)` at `x` in `(0, 1/2)`; `eta` is the generic nullity
    /// inside intervals and absent at composite-denominator points.
    pub fn value_at(&self, x: Frac) -> Option<(i64, Option<i64>)> {
        if x <= Frac::from(0) || x >= Frac::new(1, 2) {
            return None;
        }
        if let Ok(i) = self.points.binary_search_by(|p| p.x.cmp(&x)) {
            let p = &self.points[i];
            return Some((p.sig, p.eta));
        }
        self.intervals.iter().find(|iv| iv.lo < x && x < iv.hi).map(|iv| (iv.sig, Some(iv.eta)))
    }
}

/// Smallest odd prime `p >= from` with some `b/p` strictly inside `(lo, hi)`,
/// and the smallest such `b`.
pub(crate) fn sample_in(lo: Frac, hi: Frac, from: u64) -> (u64, u64) {
    odd_primes()
        .skip_while(|&p| p < from)
        .find_map(|p| {
            let b = (*lo.numer() as i128 * p as i128).div_euclid(*lo.denom() as i128) + 1;
            (b * (*hi.denom() as i128) < (*hi.numer() as i128) * p as i128).then_some((p, b as u64))
        })
        .expect("open intervals contain b/p for large p")
}

impl Curve {
    /// Candidate jump points `k/|c⁺_v|` in `(0, 1/2)`, reduced and sorted.
    pub fn breakpoints(&self) -> Vec<Frac> {
        let mut set = BTreeSet::new();
        for &c in &self.c_plus {
            let d = c.abs();
            for k in 1..d {
                if 2 * k < d {
                    set.insert(Frac::new(k, d));
                }
            }
        }
        set.into_iter().collect()
    }

    pub fn profile(&self) -> Result<SignatureProfile> {
        let breakpoints = self.breakpoints();
        let mut ends = Vec::with_capacity(breakpoints.len() + 2);
        ends.push(Frac::from(0));
        ends.extend(breakpoints.iter().copied());
        ends.push(Frac::new(1, 2));

        let first = next_odd_prime(self.max_c);
        let intervals = ends
            .par_windows(2)
            .map(|w| {
                let (p, b) = sample_in(w[0], w[1], first);
                let v = self.sig_eta(p, b)?;
                Ok(ProfileInterval { lo: w[0], hi: w[1], sig: v.sig, eta: v.eta, sample_p: p, sample_b: b })
            })
            .collect::<Result<Vec<_>>>()?;

        let points = breakpoints
            .par_iter()
            .enumerate()
            .map(|(i, &x)| {
                let (k, q) = (*x.numer() as u64, *x.denom() as u64);
                if is_odd_prime(q) {
                    let v = self.sig_eta(q, k)?;
                    Ok(ProfilePoint { x, sig: v.sig, eta: Some(v.eta) })
                } else {
                    let sum = intervals[i].sig + intervals[i + 1].sig;
                    if sum % 2 != 0 {
                        return Err(Error::Inconsistent(format!(
                            "one-sided limits at {} have odd sum {sum}",
                            format_frac(&x)
                        )));
                    }
                    Ok(ProfilePoint { x, sig: sum / 2, eta: None })
                }
            })
            .collect::<Result<Vec<_>>>()?;

        let (intervals, points) = merge_flat_points(intervals, points);
        Ok(SignatureProfile { breakpoints, intervals, points, nul: self.nul() })
    }
}

/// Drops composite-denominator points where nothing jumps, joining the
/// neighbouring intervals. Prime-denominator points always stay.
fn merge_flat_points(
    intervals: Vec<ProfileInterval>,
    points: Vec<ProfilePoint>,
) -> (Vec<ProfileInterval>, Vec<ProfilePoint>) {
    let mut iv = intervals.into_iter();
    let mut cur = iv.next().expect("at least one interval");
    let (mut out_iv, mut out_pt) = (Vec::new(), Vec::new());
    for (pt, next) in points.into_iter().zip(iv) {
        if pt.eta.is_none() && cur.sig == next.sig && cur.eta == next.eta {
            cur.hi = next.hi;
        } else {
            out_iv.push(std::mem::replace(&mut cur, next));
            out_pt.push(pt);
        }
    }
    out_iv.push(cur);
    (out_iv, out_pt)
}
