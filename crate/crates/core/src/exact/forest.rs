use num_traits::{One, Signed, Zero};

use super::{Inertia, Rational};

/// Inertia of a symmetric matrix whose off-diagonal support is a forest with
/// all off-diagonal entries equal to 1 (a plumbing matrix of a forest).
///
/// Linear-time leaf elimination: each vertex absorbs `-1/d` from its
/// non-zero children; a zero child instead pairs with its parent into a
/// hyperbolic block, which also cuts the parent off from its own parent.
pub fn forest_inertia(weights: &[i64], edges: &[(usize, usize)]) -> Inertia {
    let n = weights.len();
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }

    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let start = order.len();
        order.push(root);
        let mut i = start;
        while i < order.len() {
            let v = order[i];
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    order.push(w);
                }
            }
            i += 1;
        }
    }

    let mut d: Vec<Rational> = weights.iter().map(|&w| Rational::from_integer(w.into())).collect();
    let mut linked = vec![true; n];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &v in &order {
        if parent[v] != usize::MAX {
            children[parent[v]].push(v);
        }
    }
    for &v in order.iter().rev() {
        let live: Vec<usize> = children[v].iter().copied().filter(|&c| linked[c]).collect();
        match live.iter().find(|&&c| d[c].is_zero()) {
            Some(&c) => {
                d[c] = Rational::one();
                d[v] = -Rational::one();
                linked[v] = false;
            }
            None => {
                for c in live {
                    let inv = d[c].recip();
                    d[v] -= inv;
                }
            }
        }
    }

    let n_plus = d.iter().filter(|x| x.is_positive()).count();
    let n_minus = d.iter().filter(|x| x.is_negative()).count();
    Inertia { n_plus, n_zero: n - n_plus - n_minus, n_minus }
}
