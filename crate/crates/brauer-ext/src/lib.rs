//! Ext groups between simple modules of Brauer tree algebras.
//!
//! A block of a group algebra with cyclic defect group is Morita equivalent
//! to the algebra of a Brauer tree: a finite tree with cyclically ordered
//! edges around each vertex and at most one exceptional vertex of
//! multiplicity m. The dimensions dim Ext^n(S_i, S_j) between the simple
//! modules of such a block depend only on the tree, are 0 or 1 in every
//! case handled here, and are periodic in n with period dividing 2e.
//!
//! Two independent engines compute them:
//!
//! * `syzygy`: an exact oracle. It realizes the basic algebra as a quiver
//!   with relations over F_p, iterates the Heller translate Omega by
//!   computing kernels of minimal projective covers with exact prime-field
//!   linear algebra, and reads Ext dimensions off the heads of the
//!   translates. No formula enters; this is the ground truth.
//! * `formula` and `tables`: closed-form hit-windows for star and line
//!   trees and hardcoded residue tables for the blocks of the Suzuki and
//!   Ree groups in cross characteristic.
//!
//! `verify` cross-checks the engines against each other; `groups` maps a
//! concrete group, prime pair (q, r) to its tree presets.

pub mod algebra;
pub mod formula;
pub mod fp;
pub mod groups;
pub mod hom;
pub mod pim;
pub mod syzygy;
pub mod tables;
pub mod tree;
pub mod verify;
