//! Finite commutative rings, ideal expansions and δ-n-ideals.
//!
//! Every ring here is finite (at most [`MAX_FINITE_SIZE`] elements) except
//! the integers `ZZ`, which are handled through closed forms. Ideals are
//! enumerated exhaustively, so every predicate is decided, not sampled.
//!
//! ```
//! use deltan::{is_delta_n_ideal, DeltaNMethod, Expansion, Ideal, Ring};
//!
//! let r = Ring::modular(6)?;
//! let zero = Ideal::zero(&r);
//! assert!(!is_delta_n_ideal(&zero, &Expansion::delta1(&r), DeltaNMethod::Definition)?);
//!
//! let d = Expansion::delta_plus(&Ideal::integer(3))?;
//! assert!(is_delta_n_ideal(&Ideal::integer(5), &d, DeltaNMethod::ColonCriterion)?);
//! # Ok::<(), deltan::Error>(())
//! ```

pub mod cli;
pub mod constructions;
pub mod dsl;
pub(crate) mod elemset;
pub mod error;
pub mod expansion;
pub mod ideal;
pub mod predicates;
pub mod ring;
pub mod verifier;

pub use constructions::{
    idealization, is_delta_gamma_homomorphism, localize, quotient_ring, Homomorphism, Idealization, Localization,
    Module, MultiplicativeSet, ProductRing, QuotientRing, Submodule,
};
pub use dsl::{parse_element, parse_expansion, parse_ring, ParseError};
pub use error::{Error, Result};
pub use expansion::{Expansion, ExpansionProfile, Flag, Recipe};
pub use ideal::{enumerate_ideals, special_sets, ElementSet, Ideal, IdealClass, SpecialSets};
pub use predicates::{
    delta_n_spectrum, delta_n_witness, delta_nilpotents, is_delta_n_ideal, is_delta_primary, is_n_ideal,
    is_quasi_n_ideal, DeltaNMethod, Spectrum,
};
pub use ring::{ElemExpr, Element, ModuleSpec, Ring, RingClass, RingSpec, MAX_FINITE_SIZE};
