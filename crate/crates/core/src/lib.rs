//! Preprojective algebras of Dynkin type, the ideals `I_w` attached to Weyl
//! group elements and the support τ-tilting theory they realise.
//!
//! Everything module-theoretic is generic over an exact [`Field`]; use the
//! rational aliases for exact characteristic zero and the prime-field
//! aliases for speed.

pub mod algebra;
pub mod export;
pub mod gfan;
pub mod homological;
pub mod ideal;
pub mod linalg;
pub mod module;
pub mod quiver;
pub mod scalar;
pub mod tilt;
pub mod verify;
pub mod weyl;

pub use algebra::{Algebra, AlgebraError};
pub use ideal::PreprojSystem;
pub use module::ModuleRep;
pub use quiver::{parse_quiver, DynkinQuiver, DynkinType, QuiverError};
pub use scalar::{Field, Fp, Rational};
pub use weyl::{parse_word, WeylElement, WeylGroup};

pub type RationalAlgebra = Algebra<Rational>;
pub type PrimeAlgebra = Algebra<Fp>;
pub type RationalSystem = PreprojSystem<Rational>;
pub type PrimeSystem = PreprojSystem<Fp>;
pub type RationalModule = ModuleRep<Rational>;
pub type PrimeModule = ModuleRep<Fp>;
