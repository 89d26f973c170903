//! Exact computation and structural classification of generalised shuffle
//! groups.
//!
//! A deck of `kn` cards in `k` piles of `n` defines the standard shuffle σ
//! (pick up the top card of each pile, left to right, repeatedly) and, for
//! each pile permutation τ, the rigid pile rearrangement ρ_τ. The generalised
//! shuffle group is `Sh(P, n) = ⟨σ, ρ_τ | τ ∈ P⟩ ≤ Sym(kn)` for a pile group
//! `P ≤ Sym(k)`. This crate constructs these groups exactly, answers order
//! and membership queries through a verified Schreier–Sims stabiliser chain,
//! and classifies the resulting structures (wreath products in product
//! action, affine groups, hyperoctahedral kernels, alternating/symmetric
//! giants, and a handful of exceptional groups).
//!
//! Modules:
//! - [`perm`]: dense permutations of `[d]` with the right-action convention.
//! - [`bsgs`]: stabiliser chains, orbits, blocks, primitivity, giant tests.
//! - [`digits`]: the shared most-significant-first base-ℓ digit bijection.
//! - [`build`]: σ, ρ_τ, the named pile-group families, parity predicates.
//! - [`classify`]: structure identification and predicted structures.
//! - [`cascade`]: the cascading groups `G_t = Sh(V_t, 2^(e-t)n)` and their
//!   exact interrelation laws.

pub mod bsgs;
pub mod build;
pub mod cascade;
pub mod classify;
pub mod digits;
pub mod perm;
