//! # gbentlab
//!
//! An exact computational toolkit for generalized Boolean functions
//! `f: V_n -> Z_{2^k}`.
//!
//! Everything that decides a property is integer arithmetic: spectra live in
//! the cyclotomic ring `Z[zeta_{2^k}]` ([`cyclo::CycloInt`]), so gbent /
//! semibent / (g-)hyperbent verdicts are exact equalities, never float
//! comparisons. The main pieces:
//!
//! * [`field`]: `F_{2^n}` arithmetic with verified moduli and generators,
//!   traces, coset decompositions, decimation exponents;
//! * [`cyclo`]: exact arithmetic in `Z[zeta_{2^k}]`;
//! * [`gbf`]: dense generalized Boolean functions and their digit /
//!   component / base-`2^t` decompositions;
//! * [`spectral`]: the generalized Walsh-Hadamard transform, twice: a
//!   direct reference path and a fast component-combination path, plus
//!   decimated spectra and the base-`2^t` recombination;
//! * [`props`]: property deciders with witnesses and certificates (duals,
//!   rho lists, sign patterns);
//! * [`construct`]: the partial-spread and coset-constant g-hyperbent
//!   families and their ingredient samplers;
//! * [`decomp`]: mechanical verifiers for the decomposition statements,
//!   run as falsification harnesses;
//! * [`search`]: exhaustive / seeded-random property sweeps;
//! * [`cli`]: the `gbentlab` binary's subcommands.
//!
//! Start with the examples: each one exercises a single capability end to
//! end (`cargo run --example spectrum_basics`, `gbent_duals`,
//! `hyperbent_decimations`, ...).

#![forbid(unsafe_code)]

pub mod cli;
pub mod construct;
pub mod cyclo;
pub mod decomp;
pub mod field;
pub mod gbf;
pub(crate) mod par;
pub mod props;
pub mod rng;
pub mod search;
pub mod spectral;

pub use cyclo::CycloInt;
pub use field::FieldCtx;
pub use gbf::{Domain, Gbf};
pub use props::PropertyReport;
pub use spectral::Spectrum;
