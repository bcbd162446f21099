//! Character values of the symmetric group on cycles, as integer-valued
//! polynomials in `n`.
//!
//! For a fixed partition `λ ⊢ k` and an `r`-cycle `σ_r`, the value
//! `χ^{(n−k,λ)}(σ_r)` is a polynomial of degree `k` in `n`. In the shifted
//! binomial basis `{C(n−r, m)}` its coefficients are signed sums of skew
//! tableau counts `f^{λ∖ν}` over the `r`-primary partitions `ν`:
//!
//! ```
//! use charpoly::{stability::char_poly, Partition};
//!
//! let lambda: Partition = "3,3".parse().unwrap();
//! let exp = char_poly(&lambda, 3);
//! let b: Vec<i64> = exp.b().iter().map(|x| x.try_into().unwrap()).collect();
//! assert_eq!(b, [5, 5, 2, 1, 1, 1, 0]);
//! ```
//!
//! Everything is exact. Independent evaluators live in [`characters`]
//! (Murnaghan–Nakayama, Frobenius, and the vertical-strip expansion) and the
//! [`verify`] module runs all of them against each other.

pub mod binom_poly;
pub mod characters;
pub mod partitions;
pub mod render;
pub mod stability;
pub mod tableaux;
pub mod verify;

pub use binom_poly::BinomPoly;
pub use characters::CycleType;
pub use partitions::{make_partition, Cell, Partition, PartitionError, SkewHook};
pub use stability::{CharPolyExpansion, Family, SignedPartition};
pub use tableaux::SkewShape;
