use serde::{Deserialize, Serialize};

use super::{Curve, Frac};
use crate::cg::Modulus;
use crate::graph::Role;
use crate::primes::is_odd_prime;
use crate::{ComplexScheme, Error, Result};

/// `sig_{1/4}` of an even-type scheme. Fails if the profile jumps at `1/4`.
pub fn even_sig(s: &ComplexScheme) -> Result<i64> {
    require_even(s)?;
    let prof = Curve::new(s)?.profile()?;
    even_sig_of(&prof)
}

fn even_sig_of(prof: &super::SignatureProfile) -> Result<i64> {
    let quarter = Frac::new(1, 4);
    if prof.points.iter().any(|p| p.x == quarter) {
        return Err(Error::Inconsistent("profile of an even scheme jumps at 1/4".into()));
    }
    let (sig, _) = prof.value_at(quarter).expect("1/4 lies in (0, 1/2)");
    Ok(sig)
}

fn require_even(s: &ComplexScheme) -> Result<()> {
    if s.is_odd() {
        return Err(Error::NotEvenType);
    }
    if s.oval_count() == 0 {
        return Err(Error::EmptyScheme);
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EvenCase {
    EvenL,
    OddLOneOuter,
    OddLManyOuter,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenBoundsReport {
    pub case: EvenCase,
    pub l: usize,
    pub n: usize,
    pub n_plus: usize,
    pub n_zero: usize,
    pub n_minus: usize,
    pub pi_plus: usize,
    pub pi_minus: usize,
    pub outer_ovals: usize,
    pub sig: i64,
    pub nul: i64,
    pub lhs: i64,
    pub rhs: i64,
    pub bound_holds: bool,
    pub parity_holds: bool,
}

impl EvenBoundsReport {
    pub fn pass(&self) -> bool {
        self.bound_holds && self.parity_holds
    }
}

/// Evaluates the even-type inequality that applies to `s` and the parity
/// congruence `sig + nul ≡ l - 1 (mod 2)`.
pub fn even_bounds_check(s: &ComplexScheme) -> Result<EvenBoundsReport> {
    require_even(s)?;
    let curve = Curve::new(s)?;
    let prof = curve.profile()?;
    let sig = even_sig_of(&prof)?;
    let nul = prof.nul;
    let st = curve.stats();
    let l = st.l as i64;
    let core =
        sig + st.n as i64 + st.n_zero as i64 + 2 * st.n_minus as i64 - 2 * (st.pi_plus as i64 - st.pi_minus as i64);
    let reduced = l - st.n_plus as i64 - st.n_minus as i64;

    let (case, lhs, rhs) = if l % 2 == 0 {
        (EvenCase::EvenL, core.abs() + nul, reduced - 1)
    } else if st.outer_ovals == 1 {
        (EvenCase::OddLOneOuter, core.abs() + nul, reduced + 1)
    } else {
        (EvenCase::OddLManyOuter, (core + 1).abs() + nul, reduced)
    };

    Ok(EvenBoundsReport {
        case,
        l: st.l,
        n: st.n,
        n_plus: st.n_plus,
        n_zero: st.n_zero,
        n_minus: st.n_minus,
        pi_plus: st.pi_plus,
        pi_minus: st.pi_minus,
        outer_ovals: st.outer_ovals,
        sig,
        nul,
        lhs,
        rhs,
        bound_holds: lhs <= rhs,
        parity_holds: (sig + nul - (l - 1)).rem_euclid(2) == 0,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub p: u64,
    /// Vertices of 𝔷 by role label.
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
    pub conforms: bool,
    pub violations: Vec<String>,
}

/// Checks the shape of 𝔷 modulo `p` against what the type of `s` predicts.
///
/// Odd type: no edges, every vertex is a region or `u3`. Even type: if
/// `Λ⁻ ≢ Λ⁺` there are no edges and only non-outer regions; otherwise 𝔷
/// holds `u1, u2, u3` joined by `u1–u2`, `u1–u3`, contains `R1` (joined to
/// `u1`) iff every outer oval has `Π⁺_o - Π⁻_o ≡ 1`, and nothing else but
/// isolated non-outer regions.
pub fn structure_check(s: &ComplexScheme, p: u64) -> Result<StructureReport> {
    if !is_odd_prime(p) {
        return Err(Error::BadParameters(format!("{p} is not an odd prime")));
    }
    let curve = Curve::new(s)?;
    let zs = curve.zero_structure(Modulus::Prime(p));
    let roles: Vec<Role> = curve.gamma().vertices().iter().map(|v| v.role).collect();
    let in_z = |r: Role| zs.frak_z.iter().any(|&v| roles[v] == r);
    let has_edge = |a: Role, b: Role| {
        zs.frak_z_edges.iter().any(|&(x, y)| (roles[x] == a && roles[y] == b) || (roles[x] == b && roles[y] == a))
    };
    let mut violations = Vec::new();

    if s.is_odd() {
        if !zs.frak_z_edges.is_empty() {
            violations.push(format!("{} edge(s) in odd type", zs.frak_z_edges.len()));
        }
        for &v in &zs.frak_z {
            if !matches!(roles[v], Role::Region(_) | Role::U3) {
                violations.push(format!("unexpected vertex {}", roles[v].label()));
            }
        }
    } else {
        let st = curve.stats();
        let pm = p as i64;
        let balanced = (st.lambda_minus as i64 - st.lambda_plus as i64).rem_euclid(pm) == 0;
        if !balanced {
            if !zs.frak_z_edges.is_empty() {
                violations.push(format!("{} edge(s) with Λ⁻ ≢ Λ⁺", zs.frak_z_edges.len()));
            }
            for &v in &zs.frak_z {
                if !matches!(roles[v], Role::Region(r) if r > 0) {
                    violations.push(format!("unexpected vertex {}", roles[v].label()));
                }
            }
        } else {
            for r in [Role::U1, Role::U2, Role::U3] {
                if !in_z(r) {
                    violations.push(format!("missing {}", r.label()));
                }
            }
            for r in [Role::U2, Role::U3] {
                if !has_edge(Role::U1, r) {
                    violations.push(format!("missing edge u1-{}", r.label()));
                }
            }
            let outer_ok = st
                .ovals
                .iter()
                .filter(|o| o.depth == 0)
                .all(|o| (o.pi_plus as i64 - o.pi_minus as i64 - 1).rem_euclid(pm) == 0);
            let r1 = in_z(Role::Region(0));
            if r1 != outer_ok {
                violations.push(format!("R0 in 𝔷 is {r1}, expected {outer_ok}"));
            }
            if r1 && !has_edge(Role::U1, Role::Region(0)) {
                violations.push("missing edge u1-R0".into());
            }
            let allowed = |a: Role, b: Role| {
                let pair = |x: Role, y: Role| (a == x && b == y) || (a == y && b == x);
                pair(Role::U1, Role::U2) || pair(Role::U1, Role::U3) || pair(Role::U1, Role::Region(0))
            };
            for &(x, y) in &zs.frak_z_edges {
                if !allowed(roles[x], roles[y]) {
                    violations.push(format!("unexpected edge {}-{}", roles[x].label(), roles[y].label()));
                }
            }
            for &v in &zs.frak_z {
                let ok = matches!(roles[v], Role::U1 | Role::U2 | Role::U3 | Role::Region(_));
                if !ok {
                    violations.push(format!("unexpected vertex {}", roles[v].label()));
                }
            }
        }
    }

    Ok(StructureReport {
        p,
        vertices: zs.frak_z.iter().map(|&v| roles[v].label()).collect(),
        edges: zs.frak_z_edges.iter().map(|&(a, b)| (roles[a].label(), roles[b].label())).collect(),
        conforms: violations.is_empty(),
        violations,
    })
}
