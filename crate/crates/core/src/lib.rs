//! Partial actions of finite monoids on finite sets and finite topological
//! spaces: axiom checks, restriction of global actions, universal
//! globalization, and executable checks of the surrounding categorical
//! constructions (pullbacks, coequalizers, colimits, reflections).

pub mod diagram;
pub mod error;
pub mod finset;
pub mod fintop;
pub mod globalize;
pub mod monoid;
pub mod paction;
pub mod testkit;
mod text;

pub use error::{Error, Result};
