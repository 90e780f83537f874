//! Exact arithmetic in `Q(z)(a)`, where `z` is a primitive twelfth root of
//! unity and `a` is transcendental.

mod cyclo;
mod parse;
mod poly;
mod rational;
mod scalar;

pub use cyclo::{root_of_unity, CycNumber};
pub use parse::parse_scalar;
pub use poly::Poly;
pub use rational::Rat;
pub use scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("zero inverse")]
    ZeroInverse,
    #[error("unsupported root of unity order {0}")]
    UnsupportedOrder(u32),
    #[error("pole: denominator vanishes at a = {0}")]
    Pole(String),
    #[error("scalar parse error: {0}")]
    Parse(String),
}
