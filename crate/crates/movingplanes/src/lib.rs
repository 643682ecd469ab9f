//! Geometric algebra of moving planes.
//!
//! This crate implements the plane algebra spanned by `{1, e1, e2, e12}`,
//! the hyperbolic number plane, active and passive Lorentz boosts,
//! relativistic velocity composition, the (1,2) spacetime algebra with its
//! duality between oriented planes and timelike directions, and a 2x2
//! spectral-basis matrix representation used as an independent correctness
//! oracle.
//!
//! Start with the runnable examples (`cargo run --example rotations`, etc.)
//! or the `movingplanes` CLI.

pub mod error;
pub mod format;
pub mod g12;
pub mod g2;
pub mod hyperbolic;
pub mod kinematics;
pub mod matrix_rep;
pub mod transforms;
pub mod verify;

pub mod cli;

pub use error::{Error, Result};
pub use g12::{CausalClass, G12, MinkowskiVector};
pub use g2::{G2, Vector2, ZeroScalarClass};
pub use hyperbolic::{Branch, Hyperbolic, HyperbolicPolar};
pub use kinematics::{CompositionResult, PassiveBoost, Velocity};
pub use matrix_rep::{Mat2, Mat2Complexified};
pub use transforms::{OrientedFrame, RelativeBasis, UnitVector2};
