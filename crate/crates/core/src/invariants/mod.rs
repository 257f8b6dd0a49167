//! Kauffman bracket and Kauffman L-polynomial.

mod bracket;
mod family;
mod lpoly;

pub use bracket::{
    bracket, bracket_by_negative_expansion, bracket_recursive, bracket_states, bracket_with_limit,
    normalized_from_bracket, normalized_polynomial, unlink_polynomial, StateTerm, MAX_BRACKET_CROSSINGS,
};
pub use family::{l_family, KnownFamily};
pub use lpoly::{l_polynomial, l_polynomial_of_diagram, l_polynomial_with_limit, mirror_substitute, MAX_L_CROSSINGS};
