pub mod engine;
pub mod identities;

pub use engine::{quad_semi_infinite, Decay, QuadResult};
pub use identities::*;
