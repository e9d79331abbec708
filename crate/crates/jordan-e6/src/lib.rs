//! Exceptional Jordan algebras 𝔍(3, K) over composition rings and their
//! complexifications, the groups realized by linear maps on them, and a
//! verification harness with exact (ℚ(√3)) and floating-point backends.

pub mod algebra;
pub mod algorithms;
pub mod error;
pub mod field;
pub mod harness;
pub mod jordan;
pub mod matgroups;
pub mod operators;

// The guide's chapters run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/rings.md")]
    mod rings {}
    #[doc = include_str!("../../../book/src/jordan.md")]
    mod jordan {}
    #[doc = include_str!("../../../book/src/groups.md")]
    mod groups {}
    #[doc = include_str!("../../../book/src/operators.md")]
    mod operators {}
    #[doc = include_str!("../../../book/src/algorithms.md")]
    mod algorithms {}
    #[doc = include_str!("../../../book/src/harness.md")]
    mod harness {}
}
