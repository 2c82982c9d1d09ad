//! Exact rational linear algebra over plumbing matrices.

mod chardata;
mod forest;
mod matrix;
mod rational;

pub use chardata::{char_data, link_data, linking_matrix, to_integer, CharData, LinkData};
pub use forest::forest_inertia;
pub use matrix::{inertia, inverse, solve, Inertia, RatMatrix};
pub use rational::{format_rational, parse_rational, rational_serde, Rational};
