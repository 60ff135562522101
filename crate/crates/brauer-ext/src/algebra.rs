//! The basic algebra of a Brauer tree as a quiver with relations, and
//! finite-dimensional representations of it over F_p.
//!
//! Quiver: one vertex per edge of the tree. Each tree vertex w of degree k
//! with multiplicity m contributes a cycle of arrows f_1 -> f_2 -> ... ->
//! f_k -> f_1 through its incident edges (a loop when k = 1 < m). A plain
//! leaf contributes nothing, except that the one-edge multiplicity-free
//! tree keeps a single loop x with x^2 = 0 so that P_1 = [S_1 | S_1].
//!
//! Relations: compositions mixing arrows of two different tree vertices
//! vanish; the two full cycles based at an edge agree; and a full cycle
//! followed by one more arrow vanishes.

use crate::fp::Mat;
use crate::pim;
use crate::tree::BrauerTree;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arrow {
    /// Tree vertex whose cycle this arrow belongs to.
    pub vertex: usize,
    /// Source edge label.
    pub from: usize,
    /// Target edge label.
    pub to: usize,
}

#[derive(Debug, Clone)]
pub struct QuiverAlgebra {
    tree: BrauerTree,
    p: u32,
    arrows: Vec<Arrow>,
    by_source: BTreeMap<(usize, usize), usize>,
}

impl QuiverAlgebra {
    pub fn tree(&self) -> &BrauerTree {
        &self.tree
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn edge_count(&self) -> usize {
        self.tree.edge_count()
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    /// Whether the cycle at tree vertex w is nontrivial (has arrows).
    pub fn has_arrows_at(&self, w: usize) -> bool {
        self.by_source.keys().any(|&(v, _)| v == w)
    }

    /// Number of arrow steps in the full cycle based anywhere at w.
    pub fn cycle_len(&self, w: usize) -> u64 {
        self.tree.vertex(w).degree() as u64 * self.tree.multiplicity(w)
    }

    /// The arrow at vertex w whose source is edge s.
    pub fn arrow_at(&self, w: usize, s: usize) -> Option<usize> {
        self.by_source.get(&(w, s)).copied()
    }
}

pub fn build_algebra(tree: &BrauerTree, p: u32) -> QuiverAlgebra {
    let mut arrows = Vec::new();
    for v in tree.vertices() {
        let k = v.degree();
        let m = tree.multiplicity(v.id());
        if k >= 2 {
            for pos in 0..k {
                arrows.push(Arrow {
                    vertex: v.id(),
                    from: v.order()[pos],
                    to: v.order()[(pos + 1) % k],
                });
            }
        } else if m > 1 {
            arrows.push(Arrow { vertex: v.id(), from: v.order()[0], to: v.order()[0] });
        }
    }
    if tree.edge_count() == 1 && tree.exceptional().is_none() {
        // k[x]/x^2: keep one loop so the projective has its radical
        arrows.push(Arrow { vertex: 0, from: 1, to: 1 });
    }
    let by_source = arrows
        .iter()
        .enumerate()
        .map(|(idx, a)| ((a.vertex, a.from), idx))
        .collect();
    QuiverAlgebra { tree: tree.clone(), p, arrows, by_source }
}

/// A representation: one F_p vector space per edge and one matrix per
/// arrow, mapping the source component into the target component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleRep {
    pub dims: Vec<usize>,
    pub maps: Vec<Mat>,
}

impl ModuleRep {
    pub fn zero(alg: &QuiverAlgebra) -> Self {
        let dims = vec![0; alg.edge_count()];
        let maps = alg
            .arrows()
            .iter()
            .map(|_| Mat::zeros(alg.p(), 0, 0))
            .collect();
        ModuleRep { dims, maps }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn dim_of(&self, edge: usize) -> usize {
        self.dims[edge - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }
}

/// The simple module S_i: one-dimensional at edge i, all arrows act as zero.
pub fn simple_module(alg: &QuiverAlgebra, i: usize) -> ModuleRep {
    assert!(i >= 1 && i <= alg.edge_count(), "edge label out of range");
    let mut dims = vec![0; alg.edge_count()];
    dims[i - 1] = 1;
    let maps = alg
        .arrows()
        .iter()
        .map(|a| Mat::zeros(alg.p(), dims[a.to - 1], dims[a.from - 1]))
        .collect();
    ModuleRep { dims, maps }
}

/// Internal layout of P_i while building the representation: basis elements
/// listed top, then the two arms top-to-bottom, then the socle.
struct PimBasis {
    /// (edge label, index within that edge's component) per basis element.
    slots: Vec<(usize, usize)>,
    dims: Vec<usize>,
    /// Chains of basis-element indices; consecutive entries are joined by
    /// the arrow of the named tree vertex.
    chains: Vec<(usize, Vec<usize>)>,
}

fn pim_basis(alg: &QuiverAlgebra, i: usize) -> PimBasis {
    let tree = alg.tree();
    let (u, v) = tree.endpoints(i);
    let shape = pim::pim(tree, i, u64::MAX).expect("unbounded budget");
    let e = tree.edge_count();

    let mut dims = vec![0usize; e];
    let mut slots = Vec::with_capacity(shape.dim() as usize);
    let mut take = |edge: usize, dims: &mut Vec<usize>| {
        let idx = dims[edge - 1];
        dims[edge - 1] += 1;
        slots.push((edge, idx));
        slots.len() - 1
    };

    let top = take(i, &mut dims);
    let arm_u: Vec<usize> = shape.arm_u.iter().map(|&x| take(x, &mut dims)).collect();
    let arm_v: Vec<usize> = shape.arm_v.iter().map(|&x| take(x, &mut dims)).collect();
    let socle = take(i, &mut dims);

    let mut chains = Vec::new();
    let mut push_chain = |w: usize, arm: Vec<usize>| {
        if alg.has_arrows_at(w) {
            let mut chain = Vec::with_capacity(arm.len() + 2);
            chain.push(top);
            chain.extend(arm);
            chain.push(socle);
            chains.push((w, chain));
        }
    };
    push_chain(u, arm_u);
    push_chain(v, arm_v);
    assert!(!chains.is_empty(), "projective must reach its socle");

    PimBasis { slots, dims, chains }
}

/// The projective indecomposable P_i as a representation.
pub fn projective_module(alg: &QuiverAlgebra, i: usize) -> ModuleRep {
    let basis = pim_basis(alg, i);
    let mut maps: Vec<Mat> = alg
        .arrows()
        .iter()
        .map(|a| Mat::zeros(alg.p(), basis.dims[a.to - 1], basis.dims[a.from - 1]))
        .collect();
    for (w, chain) in &basis.chains {
        for pair in chain.windows(2) {
            let (x, y) = (pair[0], pair[1]);
            let (sx, ix) = basis.slots[x];
            let (sy, iy) = basis.slots[y];
            let a = alg.arrow_at(*w, sx).expect("chain step follows an arrow");
            debug_assert_eq!(alg.arrows()[a].to, sy);
            maps[a].set(iy, ix, 1);
        }
    }
    ModuleRep { dims: basis.dims, maps }
}

/// Compose the matrices of a path of arrows, applied left to right.
fn path_matrix(alg: &QuiverAlgebra, rep: &ModuleRep, path: &[usize]) -> Mat {
    assert!(!path.is_empty());
    let first = &alg.arrows()[path[0]];
    let mut acc = rep.maps[path[0]].clone();
    let mut cur_to = first.to;
    for &a in &path[1..] {
        let arrow = &alg.arrows()[a];
        assert_eq!(arrow.from, cur_to, "path is not composable");
        acc = rep.maps[a].mul(&acc);
        cur_to = arrow.to;
    }
    acc
}

/// The full cycle at tree vertex w based at edge i, as a list of arrows.
fn full_cycle(alg: &QuiverAlgebra, w: usize, i: usize) -> Vec<usize> {
    let len = alg.cycle_len(w);
    let mut path = Vec::with_capacity(len as usize);
    let mut cur = i;
    for _ in 0..len {
        let a = alg.arrow_at(w, cur).expect("cycle exists");
        path.push(a);
        cur = alg.arrows()[a].to;
    }
    assert_eq!(cur, i, "cycle returns to its base");
    path
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RelationViolation {
    MixedComposition { first: Arrow, second: Arrow },
    CycleMismatch { edge: usize },
    CycleOverflow { edge: usize, vertex: usize },
}

/// Check that a representation satisfies all relations of the algebra.
/// The oracle's constructions are asserted against this in tests.
pub fn check_relations(alg: &QuiverAlgebra, rep: &ModuleRep) -> Result<(), RelationViolation> {
    assert_eq!(rep.dims.len(), alg.edge_count());
    assert_eq!(rep.maps.len(), alg.arrows().len());

    for (ia, a) in alg.arrows().iter().enumerate() {
        for (ib, b) in alg.arrows().iter().enumerate() {
            if a.vertex != b.vertex && a.to == b.from {
                if !rep.maps[ib].mul(&rep.maps[ia]).is_zero() {
                    return Err(RelationViolation::MixedComposition { first: *a, second: *b });
                }
            }
        }
    }

    for i in 1..=alg.edge_count() {
        let (u, v) = alg.tree().endpoints(i);
        let cycles: Vec<Mat> = [u, v]
            .iter()
            .filter(|&&w| alg.has_arrows_at(w))
            .map(|&w| path_matrix(alg, rep, &full_cycle(alg, w, i)))
            .collect();
        if cycles.len() == 2 && cycles[0] != cycles[1] {
            return Err(RelationViolation::CycleMismatch { edge: i });
        }
        for (w, cycle) in [u, v]
            .iter()
            .filter(|&&w| alg.has_arrows_at(w))
            .map(|&w| (w, full_cycle(alg, w, i)))
        {
            let one_more = alg.arrow_at(w, i).expect("cycle exists");
            let overflow = rep.maps[one_more].mul(&path_matrix(alg, rep, &cycle));
            if !overflow.is_zero() {
                return Err(RelationViolation::CycleOverflow { edge: i, vertex: w });
            }
        }
    }
    Ok(())
}
