//! Computations with the classical Garside structure on braid groups:
//! normal forms, conjugacy machinery, curve actions in Dynnikov coordinates,
//! and coned-off (electrified) Cayley graph experiments.

pub mod allength;
pub mod ball;
pub mod census;
pub mod conjugacy;
pub mod curves;
pub mod electric;
pub mod error;
pub mod normal;
pub mod randmodel;
pub mod simple;
pub mod word;

pub use census::{rigid_census, CensusParams, CensusReport};
pub use conjugacy::{
    are_conjugate, cycling, cyclic_sliding, decycling, is_rigid, rigid_conjugates,
    ConjugacyAnswer, ConjugacyOrbit,
};
pub use curves::{act_braid, all_round_curves, random_curve, round_curve, Curve};
pub use error::{BraidError, CurveError, ResourceError};
pub use normal::{gcd, invert, multiply, normal_form, NormalForm};
pub use simple::{
    all_simples, compose_simples, is_left_weighted, left_gcd_simple, proper_simples, AtomSet,
    SimpleElement,
};
pub use word::{BraidWord, MAX_STRANDS};
