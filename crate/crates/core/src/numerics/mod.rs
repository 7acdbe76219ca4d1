//! Dense matrix kernels, a reverse-mode autodiff tape, optimizers, and a
//! deterministic seeded PRNG. Everything downstream trains through this.

pub mod matrix;
pub mod optim;
pub mod rng;
pub mod sparse;
pub mod tape;

pub use matrix::{Matrix, NumericsError};
pub use optim::{adam_step, sgd_momentum_step, AdamState, MomentumState, Optimizer, OptimizerSpec};
pub use rng::{derive_seed, glorot_init, SeededRng};
pub use sparse::SparseMatrix;
pub use tape::{Gradients, Tape, Var};
