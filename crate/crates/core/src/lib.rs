//! Construction, validation, and analysis of semirings.
//!
//! Finite semirings are handled by exhaustive decision procedures over
//! operation tables; finitely presented infinite ones (matrix semirings
//! over the naturals, group semirings over the non-negative rationals)
//! are handled by witness verification and exact linear algebra. Every
//! verdict is exact (arithmetic is arbitrary precision throughout) and
//! comes with a witness that can be re-checked independently.
//!
//! The heavy carrier loops are data-parallel via rayon (the default
//! `parallel` feature); disabling the feature compiles the same call
//! sites into sequential loops, with identical results.

pub mod analysis;
pub mod arith;
pub mod constructions;
pub mod group_semiring;
pub mod groups;
pub mod linalg;
pub mod par;
pub mod registry;
pub mod report;
pub mod rng;
pub mod search;
pub mod tables;
pub mod textfmt;

pub use report::{PropertyKey, PropertyReport, Report, Subject, Witness};
pub use tables::{FiniteMagma, FiniteSemiring, OpTable};
