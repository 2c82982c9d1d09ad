use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{inverse, solve, RatMatrix, Rational};
use crate::graph::{plumbing_matrix, PlumbingTree};
use crate::{Error, Result};

/// `Δ = 2 s A⁻¹ sᵗ` and `c = -2 s A⁻¹` for the arrow vector `s`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharData {
    pub delta: i64,
    pub c: Vec<i64>,
    pub s: Vec<i64>,
}

/// Rational data of a graph link: `u = -s A⁻¹` and `δ = s A⁻¹ sᵗ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkData {
    pub u: Vec<Rational>,
    pub delta: Rational,
    pub s: Vec<i64>,
}

pub fn link_data(g: &PlumbingTree) -> Result<LinkData> {
    let s = g.arrow_vector();
    if s.iter().all(|&x| x == 0) {
        return Ok(LinkData { u: vec![Rational::zero(); g.len()], delta: Rational::zero(), s });
    }
    let a = RatMatrix::from_plumbing(&plumbing_matrix(g));
    let st: Vec<Rational> = s.iter().map(|&x| Rational::from_integer(x.into())).collect();
    // A is symmetric, so s A⁻¹ is the transpose of A⁻¹ sᵗ.
    let x = solve(&a, &st)?;
    let delta = x.iter().zip(&st).map(|(xi, si)| xi * si).sum();
    let u = x.into_iter().map(|v| -v).collect();
    Ok(LinkData { u, delta, s })
}

pub fn char_data(g: &PlumbingTree) -> Result<CharData> {
    let LinkData { u, delta, s } = link_data(g)?;
    let two = Rational::from_integer(2.into());
    let c = u
        .iter()
        .enumerate()
        .map(|(v, x)| to_integer(&(x * &two)).ok_or_else(|| Error::NonIntegralCharData(format!("c[{v}]"))))
        .collect::<Result<Vec<_>>>()?;
    let delta = to_integer(&(delta * two)).ok_or_else(|| Error::NonIntegralCharData("delta".into()))?;
    Ok(CharData { delta, c, s })
}

pub fn to_integer(r: &Rational) -> Option<i64> {
    if r.denom().is_one() {
        r.numer().to_i64()
    } else {
        None
    }
}

/// `-A⁻¹`: entry `(i, j)` is the linking number of fibers over spheres `i`
/// and `j` in the boundary of the plumbing.
pub fn linking_matrix(g: &PlumbingTree) -> Result<RatMatrix> {
    let a = RatMatrix::from_plumbing(&plumbing_matrix(g));
    Ok(inverse(&a)?.neg())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_gamma;
    use crate::scheme::parse_scheme;

    #[test]
    fn example_char_data() {
        let g = build_gamma(&parse_scheme("J 1-<2-> 2+").unwrap());
        let cd = char_data(&g).unwrap();
        assert_eq!(cd.delta, -40);
        assert_eq!(cd.c, vec![-6, 2, 3, 1, -3, 5, 5, 1, 1, 14, -10, -10, -2, -2]);
    }

    #[test]
    fn line_char_data() {
        let g = build_gamma(&parse_scheme("J").unwrap());
        let cd = char_data(&g).unwrap();
        assert_eq!(cd.delta, 0);
        assert_eq!(cd.c, vec![-2, 0, 1, 1]);
        assert_eq!(cd.s, vec![0, 1, 0, 0]);
    }

    #[test]
    fn no_arrows() {
        let g = PlumbingTree::new(&[1, 2, 2], &[(0, 1), (0, 2)], &[]).unwrap();
        let cd = char_data(&g).unwrap();
        assert_eq!(cd.delta, 0);
        assert_eq!(cd.c, vec![0, 0, 0]);
    }

    #[test]
    fn non_integral() {
        let g = PlumbingTree::new(&[5], &[], &[(0, 1)]).unwrap();
        assert_eq!(char_data(&g), Err(Error::NonIntegralCharData("c[0]".into())));
        let ld = link_data(&g).unwrap();
        assert_eq!(ld.delta, Rational::new(1.into(), 5.into()));
    }

    #[test]
    fn singular_tree() {
        let g = PlumbingTree::new(&[0, 0, 0], &[(0, 1), (1, 2)], &[(0, 1)]).unwrap();
        assert_eq!(char_data(&g), Err(Error::SingularMatrix));
    }

    #[test]
    fn linking_examples() {
        let g = PlumbingTree::new(&[5], &[], &[]).unwrap();
        assert_eq!(linking_matrix(&g).unwrap().to_rows(), vec![vec![Rational::new((-1).into(), 5.into())]]);
        let g = PlumbingTree::new(&[0, 0], &[(0, 1)], &[]).unwrap();
        let minus_one = Rational::from_integer((-1).into());
        assert_eq!(
            linking_matrix(&g).unwrap().to_rows(),
            vec![vec![Rational::zero(), minus_one.clone()], vec![minus_one, Rational::zero()]]
        );
    }
}
