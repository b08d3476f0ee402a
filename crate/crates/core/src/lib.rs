//! Amplitude encoding by recursive Schmidt decomposition.
//!
//! A real vector of `2^q` values is compiled into a `q`-qubit circuit whose
//! output state carries those values as amplitudes. The amplitude vector is
//! reshaped into a matrix, split with a singular value decomposition, and the
//! circuit is assembled in four stages:
//!
//! 1. prepare the Schmidt coefficients on the leading register (recursively),
//! 2. copy the basis label onto the trailing register with a CNOT fan,
//! 3. rotate the leading register into the left Schmidt basis,
//! 4. rotate the trailing register into the right Schmidt basis.
//!
//! The crate is split into:
//!
//! - [`numerics`]: dense real matrices and a one-sided Jacobi SVD,
//! - [`circuit`]: the gate IR, SWAP lowering, gate counting and OpenQASM 2.0 output,
//! - [`simulator`]: a statevector simulator used to verify every compiled circuit,
//! - [`synth`]: orthogonal-matrix synthesis (permutation, Kronecker and Givens paths),
//! - [`encoder`]: the Schmidt encoder and a multiplexed-rotation baseline.
//!
//! Qubit indexing is big-endian everywhere: qubit 0 is the most significant
//! bit of an amplitude index.

pub mod circuit;
pub mod encoder;
mod error;
pub mod numerics;
pub mod simulator;
pub mod synth;

pub use circuit::{Circuit, Gate, GateCounts};
pub use encoder::{
    compare, encode_naive, encode_schmidt, encode_schmidt_with, normalize, schmidt_split,
    DataVector, EncodeMode, EncodeReport, EncoderConfig, SchmidtSplit,
};
pub use error::{Error, Result};
pub use numerics::{matmul, rank_with_tolerance, svd, RealMatrix, SvdResult};
pub use simulator::{fidelity, run, zero_state, StateVector};
pub use synth::{synthesize_orthogonal, SynthMode, SynthPath, SynthesisOutcome};

/// Default relative tolerance for deciding that a singular value is zero.
pub const DEFAULT_RANK_TOL: f64 = 1e-12;
