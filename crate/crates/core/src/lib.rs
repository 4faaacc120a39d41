//! Finite tight frames and what can be built from them.
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! * [`numlin`]: a small dense complex matrix kernel with a cyclic Jacobi
//!   eigensolver for Hermitian matrices.
//! * [`frames`]: frame operators, Parseval checks, normalization, Naimark
//!   embedding, complementary frames and the stochastic profile of a
//!   normalized Parseval frame.
//! * [`groupframes`]: tight frames generated as orbits of finite groups
//!   (cyclic, tetrahedral, icosahedral) and the named frames built from them.
//! * [`lattice`]: integer models of the honeycomb lattice and the diamond
//!   structure.
//! * [`cutproject`]: cut-and-project point sets obtained from a Parseval
//!   frame and their diffraction intensities.
//! * [`quantize`]: frame quantization of functions on finite sets, with the
//!   DFT, Weyl, cluster and simplex frame families.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod error;
pub use error::Error;

pub mod cutproject;
pub mod frames;
pub mod groupframes;
pub mod lattice;
pub mod numlin;
pub mod quantize;

pub use num_complex::Complex64;

/// Result alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
