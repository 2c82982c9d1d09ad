#![allow(dead_code)]

use plumbsig::{ComplexScheme, Oval, SchemeKind, Sign};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random scheme with at most `max_l` ovals. Ovals are added one at a time
/// inside a uniformly chosen earlier oval or at top level.
pub fn random_scheme(seed: u64, max_l: usize, kind: Option<SchemeKind>) -> ComplexScheme {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let kind = kind.unwrap_or(if rng.gen() { SchemeKind::Odd } else { SchemeKind::Even });
    let min_l = if kind == SchemeKind::Even { 1 } else { 0 };
    let l = rng.gen_range(min_l..=max_l.max(min_l));
    let mut parent = Vec::with_capacity(l);
    let mut sign = Vec::with_capacity(l);
    for i in 0..l {
        let slot = rng.gen_range(0..=i);
        parent.push(if slot == i { None } else { Some(slot) });
        sign.push(if rng.gen() { Sign::Plus } else { Sign::Minus });
    }
    fn build(i: usize, parent: &[Option<usize>], sign: &[Sign]) -> Oval {
        let children = (0..parent.len()).filter(|&j| parent[j] == Some(i)).map(|j| build(j, parent, sign)).collect();
        Oval::new(sign[i], children)
    }
    let top = (0..l).filter(|&i| parent[i].is_none()).map(|i| build(i, &parent, &sign)).collect();
    ComplexScheme::new(kind, top).expect("non-empty when even")
}

/// `det(xI - M)` for a symmetric integer matrix, coefficients from degree 0
/// up, by the Faddeev–LeVerrier recursion.
pub fn char_poly(m: &[Vec<i64>]) -> Vec<i128> {
    let n = m.len();
    let mm: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mul = |a: &Vec<Vec<i128>>, b: &Vec<Vec<i128>>| -> Vec<Vec<i128>> {
        (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
    };
    let mut coeffs = vec![0i128; n + 1];
    coeffs[n] = 1;
    let mut mk = vec![vec![0i128; n]; n];
    for k in 1..=n {
        let mut next = mul(&mm, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += coeffs[n - k + 1];
        }
        mk = next;
        let am = mul(&mm, &mk);
        let tr: i128 = (0..n).map(|i| am[i][i]).sum();
        assert_eq!(tr % k as i128, 0);
        coeffs[n - k] = -tr / k as i128;
    }
    coeffs
}

fn sign_changes(c: &[i128]) -> usize {
    let nz: Vec<i128> = c.iter().copied().filter(|&x| x != 0).collect();
    nz.windows(2).filter(|w| (w[0] > 0) != (w[1] > 0)).count()
}

/// `(n_plus, n_zero, n_minus)` of a symmetric integer matrix. All roots of
/// the characteristic polynomial are real, so Descartes' rule is exact.
pub fn descartes_inertia(m: &[Vec<i64>]) -> (usize, usize, usize) {
    let c = char_poly(m);
    let zero = c.iter().take_while(|&&x| x == 0).count();
    let reflected: Vec<i128> = c.iter().enumerate().map(|(i, &x)| if i % 2 == 1 { -x } else { x }).collect();
    (sign_changes(&c), zero, sign_changes(&reflected))
}

pub const SMALL_PRIMES: [u64; 5] = [3, 5, 7, 11, 13];
