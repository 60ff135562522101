//! Projective indecomposable modules of a Brauer tree algebra, described
//! combinatorially. P_i is biserial: simple top S_i, simple socle S_i, and
//! rad/soc splits into two uniserial arms, one per endpoint of edge i. The
//! arm at endpoint w walks the cyclic order around w starting after i and
//! has length deg(w) * mult(w) - 1 (so a plain leaf contributes nothing).

use crate::tree::BrauerTree;
use thiserror::Error;

/// Composition series data of P_i, arms listed top to bottom. The top and
/// socle are both S_i and are left implicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PimSpec {
    pub edge: usize,
    /// Arm at the smaller-id endpoint of the edge.
    pub arm_u: Vec<usize>,
    /// Arm at the larger-id endpoint.
    pub arm_v: Vec<usize>,
}

impl PimSpec {
    pub fn dim(&self) -> u64 {
        2 + self.arm_u.len() as u64 + self.arm_v.len() as u64
    }
}

#[derive(Debug, Error)]
pub enum PimError {
    #[error("P_{edge} has dimension {dim}, above the materialization budget {budget}")]
    TooLarge { edge: usize, dim: u64, budget: u64 },
}

/// Arm of edge `i` at vertex `w`: successive cyclic successors, one full
/// lap per multiplicity, stopping one short of returning to `i`.
pub fn arm(tree: &BrauerTree, w: usize, i: usize) -> Vec<usize> {
    let vertex = tree.vertex(w);
    let steps = vertex.degree() as u64 * tree.multiplicity(w) - 1;
    let mut out = Vec::with_capacity(steps as usize);
    let mut cur = i;
    for _ in 0..steps {
        cur = vertex.successor(cur);
        out.push(cur);
    }
    out
}

/// Dimension of P_i without materializing the arms.
pub fn pim_dim(tree: &BrauerTree, i: usize) -> u64 {
    let (u, v) = tree.endpoints(i);
    let at = |w: usize| tree.vertex(w).degree() as u64 * tree.multiplicity(w);
    at(u) + at(v)
}

/// Materialize the two arms of P_i. Refuses absurdly large multiplicities
/// so callers can surface a resource error instead of thrashing.
pub fn pim(tree: &BrauerTree, i: usize, budget: u64) -> Result<PimSpec, PimError> {
    let dim = pim_dim(tree, i);
    if dim > budget {
        return Err(PimError::TooLarge { edge: i, dim, budget });
    }
    let (u, v) = tree.endpoints(i);
    Ok(PimSpec { edge: i, arm_u: arm(tree, u, i), arm_v: arm(tree, v, i) })
}

/// Cartan number C_ij = multiplicity of S_j as a composition factor of P_i.
/// Each endpoint w shared with edge j contributes mult(w); the top and socle
/// account for the rest of the diagonal.
pub fn cartan_entry(tree: &BrauerTree, i: usize, j: usize) -> u64 {
    let (u, v) = tree.endpoints(i);
    if i == j {
        return tree.multiplicity(u) + tree.multiplicity(v);
    }
    let (ju, jv) = tree.endpoints(j);
    [u, v]
        .iter()
        .filter(|&&w| w == ju || w == jv)
        .map(|&w| tree.multiplicity(w))
        .sum()
}
