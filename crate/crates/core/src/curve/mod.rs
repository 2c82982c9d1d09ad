//! Curve-level invariants `sig_{b/p}(C)` and `eta_p(C)`, their closed-form
//! cross-checks, the step-function profile over `(0, 1/2)`, and the even-type
//! quantities evaluated at `1/4`.

mod checks;
mod profile;

pub use checks::{even_bounds_check, even_sig, structure_check, EvenBoundsReport, EvenCase, StructureReport};
pub(crate) use profile::sample_in;
pub use profile::{format_frac, parse_frac, Frac, ProfileInterval, ProfileLine, ProfilePoint, SignatureProfile};

use serde::{Deserialize, Serialize};

use crate::cg::{frak_z_inertia, r_p, zero_structure, InvariantPair, Modulus, ZeroStructure};
use crate::exact::{char_data, CharData, Inertia};
use crate::graph::{build_gamma, build_gamma_plus, PlumbingTree};
use crate::primes::is_odd_prime;
use crate::scheme::{stats, SchemeStats};
use crate::{ComplexScheme, Error, Result};

/// Everything about a scheme that does not depend on `(p, b)`.
#[derive(Debug, Clone)]
pub struct Curve {
    scheme: ComplexScheme,
    stats: SchemeStats,
    gamma: PlumbingTree,
    gamma_plus: PlumbingTree,
    data: CharData,
    c_plus: Vec<i64>,
    max_c: u64,
    generic: (ZeroStructure, Inertia),
}

impl Curve {
    pub fn new(scheme: &ComplexScheme) -> Result<Self> {
        let gamma = build_gamma(scheme);
        let gamma_plus = build_gamma_plus(&gamma);
        let data = char_data(&gamma)?;
        let c_plus = extend_to_arrowheads(&gamma_plus, &data.c);
        let max_c = c_plus.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0);
        let zs = zero_structure(&gamma, &gamma_plus, &c_plus, Modulus::Infinity);
        let inertia = frak_z_inertia(&gamma_plus, &zs);
        Ok(Self {
            scheme: scheme.clone(),
            stats: stats(scheme),
            gamma,
            gamma_plus,
            data,
            c_plus,
            max_c,
            generic: (zs, inertia),
        })
    }

    pub fn scheme(&self) -> &ComplexScheme {
        &self.scheme
    }

    pub fn stats(&self) -> &SchemeStats {
        &self.stats
    }

    pub fn gamma(&self) -> &PlumbingTree {
        &self.gamma
    }

    pub fn gamma_plus(&self) -> &PlumbingTree {
        &self.gamma_plus
    }

    pub fn char_data(&self) -> &CharData {
        &self.data
    }

    /// `c` on Γ extended by `±2` at the arrowheads of Γ⁺.
    pub fn c_plus(&self) -> &[i64] {
        &self.c_plus
    }

    pub fn max_abs_c_plus(&self) -> u64 {
        self.max_c
    }

    /// Zero structure of `c⁺` modulo `p`. For `p` above every `|c⁺_v|` this is
    /// the structure at infinity.
    pub fn zero_structure(&self, m: Modulus) -> ZeroStructure {
        match m {
            Modulus::Prime(p) if p > self.max_c => ZeroStructure { modulus: m, ..self.generic.0.clone() },
            Modulus::Infinity => self.generic.0.clone(),
            _ => zero_structure(&self.gamma, &self.gamma_plus, &self.c_plus, m),
        }
    }

    /// The generic nullity `nul(C)`.
    pub fn nul(&self) -> i64 {
        let (zs, inertia) = &self.generic;
        eta_from(zs, inertia)
    }

    pub fn sig_eta(&self, p: u64, b: u64) -> Result<InvariantPair> {
        if !is_odd_prime(p) {
            return Err(Error::BadParameters(format!("{p} is not an odd prime")));
        }
        if b == 0 || 2 * b > p - 1 {
            return Err(Error::BadParameters(format!("need 1 <= b <= (p-1)/2, got b = {b}, p = {p}")));
        }
        let (owned, inertia);
        let zs = if p > self.max_c {
            inertia = self.generic.1;
            &self.generic.0
        } else {
            owned = zero_structure(&self.gamma, &self.gamma_plus, &self.c_plus, Modulus::Prime(p));
            inertia = frak_z_inertia(&self.gamma_plus, &owned);
            &owned
        };

        let (pi, bi) = (p as i64, b as i64);
        let pos: Vec<i128> = self.c_plus.iter().map(|&x| r_p(bi * x, p) as i128).collect();
        let neg: Vec<i128> = self.c_plus.iter().map(|&x| r_p(-bi * x, p) as i128).collect();
        let q = self.gamma_plus.bilinear(&pos, &neg);
        let num = 2 * (q + (bi * (pi - 2 * bi)) as i128 * self.data.delta as i128);
        let p2 = (pi as i128) * (pi as i128);
        if num % p2 != 0 {
            return Err(Error::NonIntegralInvariant(format!("{num}/{p2}")));
        }
        let sig = (num / p2) as i64 + inertia.signature() - zs.e as i64 - 2;
        Ok(InvariantPair { sig, eta: eta_from(zs, &inertia) })
    }
}

fn eta_from(zs: &ZeroStructure, inertia: &Inertia) -> i64 {
    zs.frak_e as i64 + inertia.nullity() as i64 + zs.frak_z.len() as i64 - 2 * zs.z() as i64
}

fn extend_to_arrowheads(gamma_plus: &PlumbingTree, c: &[i64]) -> Vec<i64> {
    let mut out = c.to_vec();
    out.resize(gamma_plus.len(), 0);
    for a in gamma_plus.arrows() {
        if let Some(h) = a.head {
            out[h] = 2 * a.sign;
        }
    }
    out
}

/// `(sig_{b/p}(C), eta_p(C))` for an odd prime `p` and `1 <= b <= (p-1)/2`.
pub fn sig_eta(s: &ComplexScheme, p: u64, b: u64) -> Result<InvariantPair> {
    Curve::new(s)?.sig_eta(p, b)
}

pub fn profile(s: &ComplexScheme) -> Result<SignatureProfile> {
    Curve::new(s)?.profile()
}

/// `Δ` from the oval and pair counts alone.
pub fn closed_form_delta(s: &ComplexScheme) -> i64 {
    let st = stats(s);
    let l = st.l as i64;
    let pairs = st.pi_minus as i64 - st.pi_plus as i64;
    let lambda = st.lambda_minus as i64 - st.lambda_plus as i64;
    if s.is_odd() {
        -4 * (l + 2 * pairs + lambda)
    } else {
        -4 * (l + 2 * pairs)
    }
}

/// `c` on the vertices of Γ, in vertex order, from counts alone.
pub fn closed_form_c(s: &ComplexScheme) -> Vec<i64> {
    let st = stats(s);
    let lambda = st.lambda_minus as i64 - st.lambda_plus as i64;
    let odd = s.is_odd();
    let flip = |parity: u8, x: i64| if parity == 0 { x } else { -x };

    let mut c =
        if odd { vec![-2 - 4 * lambda, 2 * lambda, 1 + 2 * lambda] } else { vec![-4 * lambda, 2 * lambda, 2 * lambda] };
    for r in &st.regions {
        let local = r.lambda_minus as i64 - r.lambda_plus as i64;
        c.push(flip(r.parity, if odd { 1 + 2 * local } else { 2 * local }));
    }
    for o in &st.ovals {
        let arrow = flip(o.parity, -o.epsilon);
        let pairs = o.pi_minus as i64 - o.pi_plus as i64;
        let base = if odd { -2 * o.epsilon + 4 + 4 * pairs } else { 4 + 4 * pairs };
        c.push(arrow * base);
    }
    c
}

/// The three two-parameter families with hand-derived `sig_{1/3}`, `eta_3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HandFamily {
    /// `J 1-<a- b+>`
    A,
    /// `J 1+<a- b+>`
    B,
    /// `J 1+<1+<a- b+>>`
    C,
}

impl HandFamily {
    pub const ALL: [HandFamily; 3] = [HandFamily::A, HandFamily::B, HandFamily::C];

    pub fn scheme(self, alpha: u64, beta: u64) -> Result<ComplexScheme> {
        let inner = inner_group(alpha, beta);
        let text = match self {
            HandFamily::A => format!("J 1-<{inner}>"),
            HandFamily::B => format!("J 1+<{inner}>"),
            HandFamily::C => format!("J 1+<1+<{inner}>>"),
        };
        crate::scheme::parse_scheme(&text)
    }
}

fn inner_group(alpha: u64, beta: u64) -> String {
    let mut parts = Vec::new();
    if alpha > 0 {
        parts.push(format!("{alpha}-"));
    }
    if beta > 0 {
        parts.push(format!("{beta}+"));
    }
    parts.join(" ")
}

/// `(sig_{1/3}, eta_3)` by the case formulas for the hand families.
pub fn hand_formula(family: HandFamily, alpha: i64, beta: i64) -> Result<(i64, i64)> {
    if alpha < 0 || beta < 0 || alpha + beta == 0 {
        return Err(Error::BadParameters(format!("need alpha, beta >= 0 not both zero, got ({alpha}, {beta})")));
    }
    let (a, b) = (alpha, beta);
    // 0: a ≡ b, 1: a ≡ b + 1, 2: a ≡ b - 1 (mod 3)
    let case = (a - b).rem_euclid(3);
    let third = |x: i64| {
        debug_assert_eq!(x % 3, 0);
        8 * x / 3
    };
    Ok(match family {
        HandFamily::A => {
            let sig = match case {
                0 => third(b - a) - 2,
                1 => third(b - a + 1) - 4,
                _ => third(b - a - 1),
            };
            (sig, a + b - 1)
        }
        HandFamily::B => {
            let sig = match case {
                0 => third(b - a) + b - 3 * a + 1,
                1 => third(b - a + 1) + b - 3 * a - 2,
                _ => third(b - a - 1) + b - 3 * a + 3,
            };
            (sig, if case == 2 { 1 } else { 0 })
        }
        HandFamily::C => {
            let sig = match case {
                0 => third(a - b) - 2,
                1 => third(a - b - 1) + 1,
                _ => third(a - b + 1) - 5,
            };
            (sig, if case == 0 { a + b } else { a + b - 1 })
        }
    })
}
