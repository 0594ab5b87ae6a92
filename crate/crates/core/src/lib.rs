//! Representation-theoretic invariants of finite groups acting on lattice
//! polytopes: equivariant Ehrhart series, the equivariant h*-polynomial,
//! equivariant Hodge-Deligne polynomials of non-degenerate hypersurfaces,
//! Hodge diamonds of their quotients and predicted mirror diamonds.

pub mod ehrhart;
pub mod error;
pub mod group;
pub mod hodge;
pub mod invariant;
pub mod io;
pub mod linalg;
pub mod mirror;
pub mod polytope;

pub use error::{Error, ErrorKind, Result};
pub use group::{generate_group, ClassFunction, FiniteGroup, GroupElement, Subgroup};
pub use invariant::{FaceAction, InvariantPolytope};
pub use polytope::{build_polytope, LatticePoint, LatticePolytope, Region};
pub use hodge::{EquivariantHDPolynomial, HodgeContext, HodgeDiamond, QuotientDiamond};
pub use io::InputDocument;
pub use mirror::{mirror_pair, predicted_mirror_diamond, scenario, MirrorPair, PredictedDiamond};
