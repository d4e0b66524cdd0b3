//! Root combinatorics of flag domains in Grassmannians, with an exact
//! matrix-level verification layer.
//!
//! The library computes, for a flag domain of `SU(p,p′)` or `Sp(2n,ℝ)` in a
//! (isotropic) Grassmannian, the partition of the ambient root system into
//! the compact roots Λ(𝔨), the isotropy roots Λ(𝔮₀), the cycle coordinates
//! Λ(𝔲⁻), and the complements Γ and Φ. On top of the partition it evaluates
//! the attractiveness sets `At(α)` and the invariant `d_ma`, the minimal
//! attractiveness over Φ, which bounds the pseudoconcavity degree of the
//! domain from below.
//!
//! Everything is exact: roots are integer vectors, the [`oracle`] realizes
//! the root vectors as integer matrices inside 𝔰𝔩(n,ℂ) or 𝔰𝔭(2n,ℂ), and all
//! ranks are computed over the rationals by fraction-free elimination. The
//! oracle is an independent route to the same quantities (isotropy membership
//! by matrix action, codimension of the linearized boundary variety as a
//! matrix rank) and exists so that the closed-form combinatorics can be
//! cross-checked rather than trusted.
//!
//! The crate is `no_std` (alloc only); IO, serialization and the command-line
//! front end live in the companion `flag-concavity-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod concavity;
pub mod domains;
pub mod linalg;
pub mod oracle;
pub mod roots;

pub use concavity::{
    attractiveness, closed_form_bound, d_ma, report, Attractiveness, ConcavityReport,
};
pub use domains::{BasePoint, DomainSpec, RootPartition, Violation};
pub use linalg::{Matrix, Rat};
pub use oracle::{build_basis, Functional, RootSpaceBasis};
pub use roots::{Family, Root, RootSystem};
