//! Heller translates. Omega(M) is the kernel of the minimal projective
//! cover PC(M) ->> M; iterating it from a simple module S_i and reading
//! off heads gives dim Ext^n(S_i, S_j) for every j at once, because
//! Ext^n(S_i, S_j) = Hom(Omega^n S_i, S_j) = [head of Omega^n S_i : S_j].

use crate::algebra::{projective_module, ModuleRep, QuiverAlgebra};
use crate::fp::Mat;
use crate::pim;
use crate::tree::BrauerTree;
use thiserror::Error;

/// Default cap on the total dimension of any projective cover the oracle
/// is willing to materialize.
pub const DEFAULT_MAX_DIM: u64 = 100_000;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("projective cover needs dimension {needed}, above the budget {budget}")]
    CoverTooLarge { needed: u64, budget: u64 },
}

/// Multiplicity of each simple in the head M / rad M, indexed by edge - 1.
/// rad M is the sum of the images of all arrows.
pub fn head_multiplicities(alg: &QuiverAlgebra, m: &ModuleRep) -> Vec<usize> {
    (1..=alg.edge_count()).map(|j| m.dims[j - 1] - radical_generators(alg, m, j).rank()).collect()
}

/// All arrow images landing in component j, stacked as the columns of one
/// matrix. Its column space is (rad M)_j.
fn radical_generators(alg: &QuiverAlgebra, m: &ModuleRep, j: usize) -> Mat {
    let incoming: Vec<&Mat> = alg
        .arrows()
        .iter()
        .zip(&m.maps)
        .filter(|(a, _)| a.to == j)
        .map(|(_, mat)| mat)
        .collect();
    if incoming.is_empty() {
        return Mat::zeros(alg.p(), m.dims[j - 1], 0);
    }
    Mat::hstack(&incoming)
}

/// Deterministic lift of a basis of (M / rad M)_j: standard basis vectors
/// at the coordinates not covered by pivots of the radical's row-reduced
/// generators, in ascending coordinate order.
fn head_lifts(alg: &QuiverAlgebra, m: &ModuleRep, j: usize) -> Vec<Mat> {
    let d = m.dims[j - 1];
    let mut gen_t = radical_generators(alg, m, j).transpose();
    let pivots = gen_t.rref();
    let mut is_pivot = vec![false; d];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..d)
        .filter(|&r| !is_pivot[r])
        .map(|r| {
            let mut v = Mat::zeros(alg.p(), d, 1);
            v.set(r, 0, 1);
            v
        })
        .collect()
}

/// One summand of a projective cover: which projective, and the image of
/// its top in M.
struct CoverEntry {
    edge: usize,
    lift: Mat,
}

fn cover_entries(alg: &QuiverAlgebra, m: &ModuleRep) -> Vec<CoverEntry> {
    (1..=alg.edge_count())
        .flat_map(|j| head_lifts(alg, m, j).into_iter().map(move |lift| (j, lift)))
        .map(|(edge, lift)| CoverEntry { edge, lift })
        .collect()
}

/// The Heller translate Omega(M): kernel of the minimal projective cover.
/// M must satisfy the algebra relations (all oracle-produced modules do).
pub fn omega(alg: &QuiverAlgebra, m: &ModuleRep, max_dim: u64) -> Result<ModuleRep, OracleError> {
    let entries = cover_entries(alg, m);
    if m.is_zero() || entries.is_empty() {
        return Ok(ModuleRep::zero(alg));
    }
    let needed: u64 = entries.iter().map(|c| pim::pim_dim(alg.tree(), c.edge)).sum();
    if needed > max_dim {
        return Err(OracleError::CoverTooLarge { needed, budget: max_dim });
    }

    // Assemble P = direct sum of P_{c.edge} and the cover map phi: P -> M,
    // one column per P-basis vector, by pushing the top's lift down the arms.
    let e = alg.edge_count();
    let summands: Vec<ModuleRep> = entries.iter().map(|c| projective_module(alg, c.edge)).collect();

    let mut p_dims = vec![0usize; e];
    // offsets[s][j]: where summand s's component j starts inside P's component j
    let offsets: Vec<Vec<usize>> = summands
        .iter()
        .map(|pr| {
            let start = p_dims.clone();
            for j in 0..e {
                p_dims[j] += pr.dims[j];
            }
            start
        })
        .collect();

    let mut p_maps: Vec<Mat> = alg
        .arrows()
        .iter()
        .map(|a| Mat::zeros(alg.p(), p_dims[a.to - 1], p_dims[a.from - 1]))
        .collect();
    for (s, pr) in summands.iter().enumerate() {
        for (ai, arrow) in alg.arrows().iter().enumerate() {
            let block = &pr.maps[ai];
            let (ro, co) = (offsets[s][arrow.to - 1], offsets[s][arrow.from - 1]);
            for r in 0..block.rows() {
                for c in 0..block.cols() {
                    let v = block.get(r, c);
                    if v != 0 {
                        p_maps[ai].set(ro + r, co + c, v);
                    }
                }
            }
        }
    }

    // phi per component
    let mut phi: Vec<Mat> = (0..e).map(|j| Mat::zeros(alg.p(), m.dims[j], p_dims[j])).collect();
    for (s, pr) in summands.iter().enumerate() {
        let values = evaluate_on_lift(alg, m, pr, entries[s].edge, &entries[s].lift);
        for (j, vals) in values.iter().enumerate() {
            for (local, col) in vals.iter().enumerate() {
                for r in 0..m.dims[j] {
                    phi[j].set(r, offsets[s][j] + local, col.get(r, 0));
                }
            }
        }
    }
    for (j, phij) in phi.iter().enumerate() {
        assert_eq!(phij.rank(), m.dims[j], "projective cover must be surjective");
    }

    // kernel basis per component, then induced arrow maps
    let kernels: Vec<Mat> = phi.iter().map(Mat::nullspace).collect();
    let k_dims: Vec<usize> = kernels.iter().map(Mat::cols).collect();
    let k_maps: Vec<Mat> = alg
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, arrow)| {
            let (s, t) = (arrow.from - 1, arrow.to - 1);
            if k_dims[s] == 0 || k_dims[t] == 0 {
                return Mat::zeros(alg.p(), k_dims[t], k_dims[s]);
            }
            let pushed = p_maps[ai].mul(&kernels[s]);
            kernels[t]
                .solve(&pushed)
                .expect("kernel of a module map is arrow-stable")
        })
        .collect();

    let total_kernel: usize = k_dims.iter().sum();
    assert_eq!(
        total_kernel + m.total_dim(),
        p_dims.iter().sum::<usize>(),
        "dim Omega M = dim PC(M) - dim M"
    );
    Ok(ModuleRep { dims: k_dims, maps: k_maps })
}

/// Evaluate every basis element of P_edge on a lift vector of its top:
/// replay the projective's arrow steps on M starting from the lift. The
/// top of P_edge is local index 0 of component `edge` by construction.
fn evaluate_on_lift(
    alg: &QuiverAlgebra,
    m: &ModuleRep,
    pr: &ModuleRep,
    edge: usize,
    lift: &Mat,
) -> Vec<Vec<Mat>> {
    let e = alg.edge_count();
    let mut values: Vec<Vec<Mat>> =
        (0..e).map(|j| vec![Mat::zeros(alg.p(), m.dims[j], 1); pr.dims[j]]).collect();
    let mut known: Vec<Vec<bool>> = (0..e).map(|j| vec![false; pr.dims[j]]).collect();
    values[edge - 1][0] = lift.clone();
    known[edge - 1][0] = true;

    // propagate along arrows until stable (arms are short chains)
    let mut changed = true;
    while changed {
        changed = false;
        for (ai, arrow) in alg.arrows().iter().enumerate() {
            let (s, t) = (arrow.from - 1, arrow.to - 1);
            for c in 0..pr.dims[s] {
                if !known[s][c] {
                    continue;
                }
                for r in 0..pr.dims[t] {
                    if pr.maps[ai].get(r, c) != 0 && !known[t][r] {
                        values[t][r] = m.maps[ai].mul(&values[s][c]);
                        known[t][r] = true;
                        changed = true;
                    }
                }
            }
        }
    }
    assert!(
        known.iter().all(|k| k.iter().all(|&x| x)),
        "every projective basis vector is reached from the top"
    );
    values
}

/// Row n = head multiplicities of Omega^n S_i, for n = 0..=n_max.
/// Row 0 is the delta vector at i; row n gives dim Ext^n(S_i, S_j).
pub fn ext_dims_oracle(
    tree: &BrauerTree,
    p: u32,
    i: usize,
    n_max: usize,
    max_dim: u64,
) -> Result<Vec<Vec<usize>>, OracleError> {
    let alg = crate::algebra::build_algebra(tree, p);
    let mut rows = Vec::with_capacity(n_max + 1);
    let mut m = crate::algebra::simple_module(&alg, i);
    rows.push(head_multiplicities(&alg, &m));
    for _ in 1..=n_max {
        m = omega(&alg, &m, max_dim)?;
        rows.push(head_multiplicities(&alg, &m));
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_algebra, check_relations, simple_module};
    use crate::tree::TreePreset;

    fn oracle_hits(preset: TreePreset, i: usize, n_max: usize) -> Vec<Vec<usize>> {
        let tree = preset.instantiate().unwrap();
        ext_dims_oracle(&tree, 2, i, n_max, DEFAULT_MAX_DIM).unwrap()
    }

    /// Rows where S_j appears in the head, per j, from an oracle table.
    fn hit_sets(rows: &[Vec<usize>]) -> Vec<Vec<usize>> {
        let e = rows[0].len();
        (0..e)
            .map(|j| {
                rows.iter()
                    .enumerate()
                    .filter(|(_, row)| row[j] > 0)
                    .map(|(n, _)| n)
                    .collect()
            })
            .collect()
    }

    #[test]
    fn head_of_simple_is_delta() {
        let tree = TreePreset::ReeQp1Principal { m: 2 }.instantiate().unwrap();
        let alg = build_algebra(&tree, 2);
        for i in 1..=6 {
            let head = head_multiplicities(&alg, &simple_module(&alg, i));
            let mut expect = vec![0; 6];
            expect[i - 1] = 1;
            assert_eq!(head, expect);
        }
    }

    #[test]
    fn head_of_projective_is_its_top() {
        let tree = TreePreset::SzQmsp1 { m: 3 }.instantiate().unwrap();
        let alg = build_algebra(&tree, 5);
        for i in 1..=4 {
            let head = head_multiplicities(&alg, &projective_module(&alg, i));
            let mut expect = vec![0; 4];
            expect[i - 1] = 1;
            assert_eq!(head, expect);
        }
    }

    #[test]
    fn single_edge_ext_is_all_ones() {
        for m in [1, 2, 5] {
            let rows = oracle_hits(TreePreset::SingleEdge { m }, 1, 20);
            for (n, row) in rows.iter().enumerate() {
                assert_eq!(row, &vec![1], "m={m} n={n}");
            }
        }
    }

    #[test]
    fn plain_two_edge_line_heads() {
        // Omega walks S_1 -> S_2 -> S_2 -> S_1 -> S_1 -> ... (period 4)
        let rows = oracle_hits(TreePreset::Psu3Line { e: 2, m: 1, position: crate::tree::LinePosition::Plain }, 1, 8);
        let hits = hit_sets(&rows);
        assert_eq!(hits[0], vec![0, 3, 4, 7, 8]);
        assert_eq!(hits[1], vec![1, 2, 5, 6]);
    }

    #[test]
    fn central_two_edge_line_heads() {
        for m in [2, 3] {
            let rows = oracle_hits(TreePreset::SzQm1 { m }, 1, 15);
            let hits = hit_sets(&rows);
            let diag: Vec<usize> = (0..=15).filter(|n| matches!(n % 4, 0 | 3)).collect();
            let off: Vec<usize> = (0..=15).filter(|n| matches!(n % 4, 1 | 2)).collect();
            assert_eq!(hits[0], diag, "m={m}");
            assert_eq!(hits[1], off, "m={m}");
        }
    }

    #[test]
    fn plain_three_edge_line_table() {
        let e3 = TreePreset::Psu3Line { e: 3, m: 1, position: crate::tree::LinePosition::Plain };
        let by_start: Vec<_> = (1..=3).map(|i| hit_sets(&oracle_hits(e3, i, 5))).collect();
        // start S_1
        assert_eq!(by_start[0][0], vec![0, 5]);
        assert_eq!(by_start[0][1], vec![1, 4]);
        assert_eq!(by_start[0][2], vec![2, 3]);
        // start S_2: the middle edge has Omega-period 3
        assert_eq!(by_start[1][0], vec![1, 4]);
        assert_eq!(by_start[1][1], vec![0, 2, 3, 5]);
        assert_eq!(by_start[1][2], vec![1, 4]);
        // start S_3 mirrors start S_1
        assert_eq!(by_start[2][0], vec![2, 3]);
        assert_eq!(by_start[2][1], vec![1, 4]);
        assert_eq!(by_start[2][2], vec![0, 5]);
    }

    #[test]
    fn inner_line_e3_a2_m2_table() {
        let preset = TreePreset::LineInner { e: 3, m: 2, a: 2 };
        let by_start: Vec<_> = (1..=3).map(|i| hit_sets(&oracle_hits(preset, i, 5))).collect();
        assert_eq!(by_start[0], vec![vec![0, 5], vec![1, 4], vec![2, 3]]);
        assert_eq!(by_start[1], vec![vec![1, 4], vec![0, 2, 3, 5], vec![1, 4]]);
        assert_eq!(by_start[2], vec![vec![2, 3], vec![1, 4], vec![0, 5]]);
    }

    #[test]
    fn inner_line_e4_a3_m2_special_row() {
        let preset = TreePreset::LineInner { e: 4, m: 2, a: 3 };
        let hits = hit_sets(&oracle_hits(preset, 3, 7));
        assert_eq!(hits[0], vec![2, 5]);
        assert_eq!(hits[1], vec![1, 3, 4, 6]);
        assert_eq!(hits[2], vec![0, 2, 3, 4, 5, 7]);
        assert_eq!(hits[3], vec![1, 6]);
    }

    #[test]
    fn omega_iterates_satisfy_relations() {
        let tree = TreePreset::ReeQmsp1 { m: 2, reversed: false }.instantiate().unwrap();
        let alg = build_algebra(&tree, 3);
        let mut m = simple_module(&alg, 2);
        for _ in 0..6 {
            m = omega(&alg, &m, DEFAULT_MAX_DIM).unwrap();
            check_relations(&alg, &m).unwrap();
        }
    }

    #[test]
    fn omega_periodicity_on_suzuki_block() {
        // Omega^{2e} S_i recovers S_i on the nose for this block (e = 4)
        let tree = TreePreset::SzQmsp1 { m: 2 }.instantiate().unwrap();
        let alg = build_algebra(&tree, 2);
        for i in 1..=4 {
            let mut m = simple_module(&alg, i);
            for _ in 0..8 {
                m = omega(&alg, &m, DEFAULT_MAX_DIM).unwrap();
            }
            assert_eq!(m.dims, simple_module(&alg, i).dims, "i={i}");
        }
    }

    #[test]
    fn budget_violation_is_an_error() {
        let tree = TreePreset::SingleEdge { m: 1_000 }.instantiate().unwrap();
        let r = ext_dims_oracle(&tree, 2, 1, 2, 100);
        assert!(r.is_err());
    }
}
