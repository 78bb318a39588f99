//! Exact computations with finite-dimensional algebras: radicals, idempotents,
//! modules, decompositions, resolutions, approximations, rejective chains and
//! quasi-hereditary structure.

pub mod error;
pub mod algebra;
pub mod catalog;
pub mod decomp;
pub mod homology;
pub mod io;
pub mod strat;
pub mod subcat;
pub mod exactla;
pub mod module;

pub use error::{Error, Result};
pub use algebra::{Alg, Algebra, QuiverSpec};
pub use module::{Module, Morphism};
pub use exactla::{Field, FieldSpec, Matrix, PrimeField, Rationals, Span};

/// Matrices over GF(p).
pub type FpMatrix = Matrix<PrimeField>;
/// Matrices over the rationals.
pub type QMatrix = Matrix<Rationals>;

/// Caps and seed shared by every computation.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Config {
    pub seed: u64,
    pub cap_res: usize,
    pub cap_resdim: usize,
    pub cap_paths: usize,
    pub qh_bound: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { seed: 0, cap_res: 64, cap_resdim: 32, cap_paths: 10_000, qh_bound: 8 }
    }
}

impl Config {
    pub fn rng(&self) -> rand_chacha::ChaCha8Rng {
        use rand::SeedableRng;
        rand_chacha::ChaCha8Rng::seed_from_u64(self.seed)
    }
}
