//! Exact-arithmetic models of Spin(8) triality and trigonal-curve moduli counts.
//!
//! Everything in this crate is computed over the rationals or over the
//! quadratic extension generated by a primitive cube root of unity; there is
//! no floating point anywhere. The main pieces:
//!
//! * [`exact`] — arbitrary-precision rationals and the field Q(ω), ω² + ω + 1 = 0;
//! * [`linalg`] — dense exact linear algebra (RREF, rank, kernels, canonical
//!   subspaces, intersections) generic over the scalar field;
//! * [`groups`] — the symmetric groups S3 and S4 as concrete permutations;
//! * [`clifford`] — the 2×2-block model of the three 8-dimensional Spin(8)
//!   representations, their Clifford multiplications, the split octonion
//!   algebra and the order-3 outer symmetry acting on all of it;
//! * [`spinor`] — half-spinor spaces as even/odd exterior algebras and their
//!   canonical pairing;
//! * [`isotropic`] — the calculus of isotropic subspaces on the three
//!   6-dimensional quadrics (the A/B families and their identities);
//! * [`liealg`] — the D4 root system and the outer action on so(8);
//! * [`reps`] — character tables of S3 and S4 and an exact character
//!   decomposition solver;
//! * [`lefschetz`] — the holomorphic fixed-point trace evaluator and all
//!   genus/dimension bookkeeping for trigonal Galois covers;
//! * [`schottky`] — the rank-4 permutation lattice of line-bundle classes and
//!   the eight-vector coincidence behind the non-abelian Schottky map;
//! * [`verify`] — a registry of runnable self-checks shared by the CLI;
//! * [`concordance`] — the generated cross-reference of checks to the source
//!   text.

pub mod clifford;
pub mod concordance;
pub mod exact;
pub mod groups;
pub mod isotropic;
pub mod lefschetz;
pub mod liealg;
pub mod linalg;
pub mod reps;
pub mod sample;
pub mod schottky;
pub mod spinor;
pub mod verify;

pub use exact::{Eis, Rat};
