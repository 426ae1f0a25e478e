//! The pure lambda calculus in two notations side by side: the classic
//! single-variable abstraction `\x. M` and the tuple form `\(x0, .., xn). M`
//! that binds an enumeration of distinct variables at once.
//!
//! Reduction is leftmost-outermost. Terms with both kinds of binder may be
//! mixed freely; [`curry`] and [`uncurry`] translate between the two.

mod alpha;
mod curry;
mod error;
mod reduce;
mod subst;
mod term;

pub use alpha::{alpha_eq, canonical};
pub use curry::{curry, uncurry};
pub use error::LambdaError;
pub use reduce::{beta_step, normalize, Normalization};
pub use subst::{substitute, substitute_all};
pub use term::LamTerm;

pub use lamech_core::{FreshNameSupply, VarOrder};
