//! The free algebra `Q<u_ij>` and the Hopf structure of `A_o(n)` on it.

mod alphabet;
mod hopf;
mod polynomial;
mod syntax;
mod tensor;
mod word;

pub use alphabet::{Alphabet, Generator};
pub use hopf::Hopf;
pub use polynomial::{Polynomial, Rational};
pub use syntax::{format_rational, parse_rational, Lexer, ParseError, PolyParser, Token, TokenKind};
pub use tensor::TensorPolynomial;
pub use word::{compare_words, MonomialOrder, Word};
