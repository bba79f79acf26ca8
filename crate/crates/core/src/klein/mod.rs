//! Klein's resolvent problem: essential dimension of functions unramified on
//! the algebraic torus, lower bounds for the universal algebraic function,
//! and local monodromy around flags of root-space subspaces.

mod flag;
mod radical;

pub use flag::{flag_rank, flag_stabilizer, pairing_flag, quadruple_flag, LinearFlag, FLAG_DIM_CAP};
pub use radical::{
    essential_dimension, radical_kernel, tower_feasible, universal_disc_lower_bound, universal_lower_bound, Radical,
    RadicalSystem, UniversalBound, UniversalDiscBound,
};
