//! Casson–Gordon invariants of graph manifolds and signatures of graph links,
//! for arbitrary weighted trees.
//!
//! Both formulas are driven by the same combinatorics of a vector `c` on the
//! vertices of a tree, read modulo a prime `p` (or over the integers, which we
//! call `p = ∞`):
//!
//! * `Z`: the vertices where `c` vanishes;
//! * `𝔷`: those vertices of `Z` with no neighbour outside `Z`, with the tree
//!   edges among them;
//! * `e`: edges with both ends non-zero; `𝔈`: the remaining edges.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::{forest_inertia, link_data, Inertia, LinkData, Rational};
use crate::graph::{build_gamma_plus, PlumbingTree};
use crate::primes::is_odd_prime;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Modulus {
    Prime(u64),
    Infinity,
}

impl Modulus {
    pub fn is_zero(self, x: i64) -> bool {
        match self {
            Modulus::Prime(p) => x.rem_euclid(p as i64) == 0,
            Modulus::Infinity => x == 0,
        }
    }
}

/// Representative of `x mod p` in `[0, p - 1]`.
pub fn r_p(x: i64, p: u64) -> i64 {
    x.rem_euclid(p as i64)
}

/// `r_p` of a rational whose denominator is prime to `p`: `α/β ↦ r_p(α β*)`
/// with `β β* ≡ 1 (mod p)`.
pub fn r_p_rational(x: &Rational, p: u64) -> Result<i64> {
    let pb = BigInt::from(p);
    let num = x.numer().mod_floor(&pb);
    let den = x.denom().mod_floor(&pb);
    if den.is_zero() {
        return Err(Error::UndefinedResidue { p, denominator: x.denom().to_string() });
    }
    let den = den.to_i64().expect("residue fits");
    let inv = mod_inverse(den, p as i64);
    let num = num.to_i64().expect("residue fits");
    Ok(((num as i128 * inv as i128).rem_euclid(p as i128)) as i64)
}

fn mod_inverse(a: i64, p: i64) -> i64 {
    let g = a.extended_gcd(&p);
    debug_assert_eq!(g.gcd, 1);
    g.x.rem_euclid(p)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroStructure {
    pub modulus: Modulus,
    /// Vertices of Γ where the vector vanishes.
    pub zero_vertices: Vec<usize>,
    /// Vertex set of 𝔷.
    pub frak_z: Vec<usize>,
    /// Edges of Γ among the vertices of 𝔷.
    pub frak_z_edges: Vec<(usize, usize)>,
    /// Edges of Γ⁺ with both ends non-zero.
    pub e: usize,
    /// Edges of Γ⁺ with at least one zero end.
    pub frak_e: usize,
}

impl ZeroStructure {
    pub fn z(&self) -> usize {
        self.zero_vertices.len()
    }
}

/// Zero structure of `c_plus` (indexed by the vertices of `gamma_plus`), whose
/// restriction to the first `gamma.len()` vertices lives on `gamma`. Pass the
/// same tree twice to work on a single tree.
pub fn zero_structure(
    gamma: &PlumbingTree,
    gamma_plus: &PlumbingTree,
    c_plus: &[i64],
    modulus: Modulus,
) -> ZeroStructure {
    assert_eq!(c_plus.len(), gamma_plus.len(), "vector indexed by v(Γ⁺) expected");
    assert!(gamma.len() <= gamma_plus.len());
    let zero: Vec<bool> = c_plus.iter().map(|&x| modulus.is_zero(x)).collect();
    let n = gamma.len();

    let zero_vertices: Vec<usize> = (0..n).filter(|&v| zero[v]).collect();
    let frak_z: Vec<usize> =
        zero_vertices.iter().copied().filter(|&v| gamma_plus.neighbors(v).iter().all(|&w| zero[w])).collect();
    let mut in_frak = vec![false; n];
    for &v in &frak_z {
        in_frak[v] = true;
    }
    let frak_z_edges = gamma.edges().iter().copied().filter(|&(a, b)| in_frak[a] && in_frak[b]).collect();
    let e = gamma_plus.edges().iter().filter(|&&(a, b)| !zero[a] && !zero[b]).count();
    let frak_e = gamma_plus.edges().len() - e;

    ZeroStructure { modulus, zero_vertices, frak_z, frak_z_edges, e, frak_e }
}

/// Inertia of the plumbing matrix of 𝔷.
pub fn frak_z_inertia(tree: &PlumbingTree, zs: &ZeroStructure) -> Inertia {
    let pos = |v: usize| zs.frak_z.binary_search(&v).expect("vertex of 𝔷");
    let weights: Vec<i64> = zs.frak_z.iter().map(|&v| tree.vertices()[v].weight).collect();
    let edges: Vec<(usize, usize)> = zs.frak_z_edges.iter().map(|&(a, b)| (pos(a), pos(b))).collect();
    forest_inertia(&weights, &edges)
}

/// Inertia of the plumbing matrix of a tree.
pub fn tree_inertia(tree: &PlumbingTree) -> Inertia {
    forest_inertia(&tree.weights(), tree.edges())
}

/// Per-vertex test of `(c A_Γ)_v ≡ 0 (mod p)`.
pub fn is_characteristic(gamma: &PlumbingTree, c: &[i64], p: u64) -> Vec<bool> {
    gamma.row_product(c).into_iter().map(|x| x.rem_euclid(p as i128) == 0).collect()
}

/// Signature and nullity of a link or cover; both integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvariantPair {
    pub sig: i64,
    pub eta: i64,
}

/// Casson–Gordon signature and nullity of a graph manifold; the signature is
/// rational in general.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CgInvariants {
    pub sigma: Rational,
    pub eta: i64,
}

fn check_odd_prime(p: u64) -> Result<()> {
    if is_odd_prime(p) {
        Ok(())
    } else {
        Err(Error::NonOddPrime(p))
    }
}

/// σ and η of the `Z_p` cover of the graph manifold `M_Γ` given by the
/// `p`-characteristic vector `c`.
pub fn cg_sigma_eta(gamma: &PlumbingTree, c: &[i64], p: u64) -> Result<CgInvariants> {
    check_odd_prime(p)?;
    if c.len() != gamma.len() {
        return Err(Error::DimensionMismatch(format!("vector of length {} on {} vertices", c.len(), gamma.len())));
    }
    if c.iter().all(|&x| r_p(x, p) == 0) {
        return Err(Error::ZeroVector(p));
    }
    if let Some(vertex) = is_characteristic(gamma, c, p).iter().position(|ok| !ok) {
        return Err(Error::NotCharacteristic { p, vertex });
    }
    let pos: Vec<i128> = c.iter().map(|&x| r_p(x, p) as i128).collect();
    let neg: Vec<i128> = c.iter().map(|&x| r_p(-x, p) as i128).collect();
    let q = gamma.bilinear(&pos, &neg);

    let zs = zero_structure(gamma, gamma, c, Modulus::Prime(p));
    let frak = frak_z_inertia(gamma, &zs);
    let sign_gamma = tree_inertia(gamma).signature();

    let p2 = BigInt::from(p) * BigInt::from(p);
    let sigma = Rational::new(BigInt::from(2) * BigInt::from(q), p2)
        + Rational::from_integer((frak.signature() - zs.e as i64 - sign_gamma).into());
    let eta = frak.nullity() as i64 + zs.frak_z.len() as i64 - 2 * zs.z() as i64 + gamma.len() as i64 - zs.e as i64 - 1;
    Ok(CgInvariants { sigma, eta })
}

/// A graph link: a plumbing tree decorated with signed arrows, with the data
/// that does not depend on `(a, p)` precomputed.
#[derive(Debug, Clone)]
pub struct GraphLink {
    gamma: PlumbingTree,
    gamma_plus: PlumbingTree,
    link: LinkData,
    sign_gamma: i64,
}

impl GraphLink {
    pub fn new(gamma: &PlumbingTree) -> Result<Self> {
        if gamma.arrows().iter().all(|a| a.head.is_some()) {
            return Err(Error::EmptyLink);
        }
        let sign_inertia = tree_inertia(gamma);
        if sign_inertia.nullity() > 0 {
            return Err(Error::SingularMatrix);
        }
        let link = link_data(gamma)?;
        Ok(Self {
            gamma: gamma.clone(),
            gamma_plus: build_gamma_plus(gamma),
            link,
            sign_gamma: sign_inertia.signature(),
        })
    }

    pub fn link_data(&self) -> &LinkData {
        &self.link
    }

    pub fn gamma_plus(&self) -> &PlumbingTree {
        &self.gamma_plus
    }

    /// `u⁺ mod p`: residues of `u` on Γ, `±1` at the arrowheads.
    pub fn residues(&self, p: u64) -> Result<Vec<i64>> {
        let mut h = self.link.u.iter().map(|x| r_p_rational(x, p)).collect::<Result<Vec<_>>>()?;
        h.resize(self.gamma_plus.len(), 0);
        for a in self.gamma_plus.arrows() {
            if let Some(head) = a.head {
                h[head] = r_p(a.sign, p);
            }
        }
        Ok(h)
    }

    /// Exact `σ_{a/p}` (rational as computed) and `η_p`.
    pub fn sigma_eta_exact(&self, a: u64, p: u64) -> Result<(Rational, i64)> {
        check_odd_prime(p)?;
        if a == 0 || a >= p {
            return Err(Error::BadParameters(format!("need 0 < a < p, got a = {a}, p = {p}")));
        }
        let h = self.residues(p)?;
        let a = a as i64;
        let pos: Vec<i128> = h.iter().map(|&x| r_p(a * x, p) as i128).collect();
        let neg: Vec<i128> = h.iter().map(|&x| r_p(-a * x, p) as i128).collect();
        let q = self.gamma_plus.bilinear(&pos, &neg);

        let zs = zero_structure(&self.gamma, &self.gamma_plus, &h, Modulus::Prime(p));
        let frak = frak_z_inertia(&self.gamma_plus, &zs);

        let p_int = p as i64;
        let p2 = BigInt::from(p) * BigInt::from(p);
        let inner =
            Rational::from_integer(q.into()) + &self.link.delta * Rational::from_integer((a * (p_int - a)).into());
        let sigma = inner * Rational::new(2.into(), p2)
            + Rational::from_integer((frak.signature() - self.sign_gamma - zs.e as i64).into());
        let eta = frak.nullity() as i64 + zs.frak_z.len() as i64 - 2 * zs.z() as i64 + self.gamma_plus.len() as i64
            - zs.e as i64
            - 1;
        Ok((sigma, eta))
    }

    pub fn sigma_eta(&self, a: u64, p: u64) -> Result<InvariantPair> {
        let (sigma, eta) = self.sigma_eta_exact(a, p)?;
        match crate::exact::to_integer(&sigma) {
            Some(sig) => Ok(InvariantPair { sig, eta }),
            None => Err(Error::NonIntegralInvariant(sigma.to_string())),
        }
    }
}

/// Signature `σ_{a/p}` and nullity `η_p` of the graph link described by the
/// decorated tree `gamma`.
pub fn graphlink_sigma_eta(gamma: &PlumbingTree, a: u64, p: u64) -> Result<InvariantPair> {
    check_odd_prime(p)?;
    GraphLink::new(gamma)?.sigma_eta(a, p)
}
