//! End-to-end acceptance checks: each test is one criterion, comparing the
//! syzygy oracle, the closed-form formulas, and the hardcoded group tables
//! at the sizes they are meant to be used, with runtime bounds where the
//! computation is nontrivial. Run with `--nocapture` to see the one-line
//! summaries printed at the end of each criterion.

use brauer_ext::formula;
use brauer_ext::groups::{classify, GroupFamily};
use brauer_ext::hom::IsoResult;
use brauer_ext::pim::{cartan_entry, pim_dim};
use brauer_ext::syzygy::{ext_dims_oracle, DEFAULT_MAX_DIM};
use brauer_ext::tables::{ext_group_table, table, CaseId};
use brauer_ext::tree::{BrauerTree, TreePreset};
use brauer_ext::verify::{
    case_preset, omega_probe, star_variant_mismatches, verify_orientations,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};

/// Oracle table for start simple i: rows over n, columns over j.
fn oracle_rows(tree: &BrauerTree, p: u32, i: usize, n_max: usize) -> Vec<Vec<usize>> {
    ext_dims_oracle(tree, p, i, n_max, DEFAULT_MAX_DIM).expect("within budget")
}

/// Assert the oracle equals a closed form on all (i, j, n), n <= n_max.
fn assert_matches_oracle(
    tree: &BrauerTree,
    n_max: usize,
    f: impl Fn(usize, usize, u64) -> u64,
    ctx: &str,
) {
    let e = tree.edge_count();
    for i in 1..=e {
        let rows = oracle_rows(tree, 2, i, n_max);
        for (n, row) in rows.iter().enumerate() {
            for j in 1..=e {
                assert_eq!(
                    row[j - 1] as u64,
                    f(i, j, n as u64),
                    "{ctx}: oracle vs closed form at i={i} j={j} n={n}"
                );
            }
        }
    }
}

fn assert_case_table_matches(case: CaseId, m: u64, n_max: usize) {
    let tree = case_preset(case, m).instantiate().expect("valid preset");
    assert_matches_oracle(
        &tree,
        n_max,
        |i, j, n| ext_group_table(case, m, i, j, n),
        &format!("{} m={m}", table(case).label),
    );
}

#[test]
fn suzuki_four_simple_table_reproduction() {
    let t0 = Instant::now();
    // m = 6 arises from real group data: q = 32, s = 8, r = 5 divides
    // q - s + 1 = 25, so m = (25 - 1)/4 = 6
    let c = classify(GroupFamily::Suzuki, 32, 5).expect("valid Suzuki data");
    assert_eq!(c.blocks[0].preset, TreePreset::SzQmsp1 { m: 6 });
    for m in [2, 3, 6] {
        assert_case_table_matches(CaseId::SzQmsp1, m, 31);
    }
    let dt = t0.elapsed();
    assert!(dt < Duration::from_secs(5), "took {dt:?}");
    println!("PASS: Suzuki four-simple table reproduced for m in {{2, 3, 6}}, n <= 31 ({dt:?})");
}

#[test]
fn ree_fork_table_and_syzygy_traces() {
    let t0 = Instant::now();
    for m in [2, 4] {
        assert_case_table_matches(CaseId::ReeQp1Principal, m, 47);
        let tree = TreePreset::ReeQp1Principal { m }.instantiate().unwrap();
        for (start, steps, target) in [(1, 2, 4), (1, 12, 1), (2, 12, 2)] {
            let got = omega_probe(&tree, 2, start, steps, target, 7, DEFAULT_MAX_DIM).unwrap();
            assert_eq!(
                got,
                IsoResult::Isomorphic,
                "Omega^{steps} S_{start} = S_{target} at m={m}"
            );
        }
    }
    let dt = t0.elapsed();
    assert!(dt < Duration::from_secs(10), "took {dt:?}");
    println!(
        "PASS: six-simple fork table reproduced for m in {{2, 4}}, n <= 47, \
         with Omega^2 S1 = S4, Omega^12 S1 = S1, Omega^12 S2 = S2 ({dt:?})"
    );
}

#[test]
fn ree_star_tables_and_orientation_report() {
    let t0 = Instant::now();
    for m in [2, 3] {
        // 6-star with exceptional leaf: includes the all-degrees diagonal
        assert_case_table_matches(CaseId::ReeQpsp1, m, 23);
        // long star: the source data leaves the embedding undetermined, so
        // both orientations run and the matching one is reported
        let run = verify_orientations(m, 2, 23, DEFAULT_MAX_DIM).unwrap();
        let matching = run.matching();
        assert!(
            !matching.is_empty(),
            "no orientation reproduces the long-star table at m={m}"
        );
        println!(
            "long-star orientation matching the table at m={m}: {} \
             (other orientation differs at {} entries)",
            matching.join(", "),
            run.forward.mismatches.len() + run.reversed.mismatches.len()
        );
    }
    let dt = t0.elapsed();
    assert!(dt < Duration::from_secs(10), "took {dt:?}");
    println!("PASS: both six-simple star tables reproduced for m in {{2, 3}} ({dt:?})");
}

#[test]
fn two_simple_central_blocks_mod_four() {
    for m in [1, 3] {
        for case in [CaseId::SzQm1, CaseId::ReeQm1] {
            let tree = case_preset(case, m).instantiate().unwrap();
            for i in 1..=2 {
                let rows = oracle_rows(&tree, 2, i, 15);
                for (n, row) in rows.iter().enumerate() {
                    for j in 1..=2 {
                        let want = if i == j {
                            u64::from(n % 4 == 0 || n % 4 == 3)
                        } else {
                            u64::from(n % 4 == 1 || n % 4 == 2)
                        };
                        assert_eq!(row[j - 1] as u64, want, "m={m} i={i} j={j} n={n}");
                    }
                }
            }
        }
    }
    println!(
        "PASS: two-simple central blocks have diagonal 0,3 and off-diagonal 1,2 \
         mod 4 for m in {{1, 3}}, n <= 15"
    );
}

#[test]
fn line_formulas_match_oracle() {
    let t0 = Instant::now();
    let mut shapes = 0;
    for e in 2..=5usize {
        let n_max = 4 * e - 1;
        // m = 1: every line preset normalizes to the plain line
        let plain = TreePreset::LineCentral { e, m: 1 }.instantiate().unwrap();
        assert_matches_oracle(
            &plain,
            n_max,
            |i, j, n| formula::ext_line_plain(e, i, j, n),
            &format!("plain line e={e}"),
        );
        shapes += 1;
        for m in [2, 3] {
            let outer = TreePreset::LineOuter { e, m }.instantiate().unwrap();
            assert_matches_oracle(
                &outer,
                n_max,
                |i, j, n| formula::ext_line_outer(e, i, j, n),
                &format!("outer line e={e} m={m}"),
            );
            shapes += 1;
            for a in 1..e {
                let inner = TreePreset::LineInner { e, m, a }.instantiate().unwrap();
                assert_matches_oracle(
                    &inner,
                    n_max,
                    |i, j, n| formula::ext_line_inner(e, a, i, j, n),
                    &format!("inner line e={e} m={m} a={a}"),
                );
                shapes += 1;
            }
        }
    }
    let dt = t0.elapsed();
    assert!(dt < Duration::from_secs(60), "took {dt:?}");
    println!(
        "PASS: line formulas match the oracle on {shapes} shapes \
         (e in 2..=5, m in 1..=3, every inner position), 0 <= n < 4e ({dt:?})"
    );
}

#[test]
fn star_walk_formulas_match_oracle_with_variant_report() {
    let t0 = Instant::now();
    for e in 2..=6usize {
        let n_max = 4 * e - 1;
        let plain = TreePreset::StarCentral { e, m: 1 }.instantiate().unwrap();
        assert_matches_oracle(
            &plain,
            n_max,
            |i, j, n| formula::ext_star_central_walk(e, i, j, n),
            &format!("plain star e={e}"),
        );
        for m in [2, 3] {
            let central = TreePreset::StarCentral { e, m }.instantiate().unwrap();
            assert_matches_oracle(
                &central,
                n_max,
                |i, j, n| formula::ext_star_central_walk(e, i, j, n),
                &format!("central star e={e} m={m}"),
            );
            let outer = TreePreset::StarOuter { e, m }.instantiate().unwrap();
            assert_matches_oracle(
                &outer,
                n_max,
                |i, j, n| formula::ext_star_outer_walk(e, i, j, n),
                &format!("outer star e={e} m={m}"),
            );
        }
    }
    // comparison report for the index-difference variants: generated over
    // the same range; every e >= 3 disagreement names the stated rule that
    // moved away from the oracle-backed walk value
    let report = star_variant_mismatches(2, 6);
    let high = report.iter().filter(|vm| vm.e >= 3).count();
    assert!(high > 0, "the stated variants should disagree somewhere for e >= 3");
    for vm in report.iter().filter(|vm| vm.e >= 3).take(3) {
        println!(
            "variant report sample: {} stated rule gives {} at e={} (i,j)=({},{}) \
             n={} where the walk (= oracle) gives {}",
            vm.shape, vm.stated, vm.e, vm.i, vm.j, vm.residue, vm.walk
        );
    }
    let dt = t0.elapsed();
    println!(
        "PASS: star walk formulas match the oracle (e in 2..=6, m in 1..=3); \
         variant report lists {} disagreements, {high} with e >= 3, each \
         attributed to its stated rule ({dt:?})",
        report.len()
    );
}

/// Seeded random Brauer tree: random shape, shuffled labels and cyclic
/// orders, optional exceptional vertex.
fn random_tree(rng: &mut ChaCha8Rng, e_max: usize, m_max: u64) -> BrauerTree {
    let e = rng.gen_range(1..=e_max);
    let mut labels: Vec<usize> = (1..=e).collect();
    labels.shuffle(rng);
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); e + 1];
    for v in 1..=e {
        let parent = rng.gen_range(0..v);
        incident[v].push(labels[v - 1]);
        incident[parent].push(labels[v - 1]);
    }
    for order in &mut incident {
        order.shuffle(rng);
    }
    let exceptional = rng
        .gen_bool(0.5)
        .then(|| (rng.gen_range(0..=e), rng.gen_range(2..=m_max)));
    let parts = incident
        .into_iter()
        .enumerate()
        .map(|(id, order)| {
            let m = match exceptional {
                Some((v, m)) if v == id => m,
                _ => 1,
            };
            (id, order, m)
        })
        .collect();
    BrauerTree::new(e, parts).expect("generated trees are valid")
}

#[test]
fn property_suite() {
    let t0 = Instant::now();

    // Ext^0 = delta and 2e-periodicity on every group preset and a sample
    // of random trees
    let mut periodic_trees = Vec::new();
    for case in CaseId::ALL {
        for m in [1, 2, 3] {
            periodic_trees.push(case_preset(case, m).instantiate().unwrap());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..12 {
        periodic_trees.push(random_tree(&mut rng, 6, 3));
    }
    for tree in &periodic_trees {
        let e = tree.edge_count();
        for i in 1..=e {
            let rows = oracle_rows(tree, 3, i, 4 * e - 1);
            for j in 1..=e {
                assert_eq!(rows[0][j - 1], usize::from(i == j), "Ext^0 = delta");
            }
            for n in 0..2 * e {
                assert_eq!(rows[n], rows[n + 2 * e], "period divides 2e at n={n}");
            }
        }
    }

    // characteristic independence on the group presets
    for case in CaseId::ALL {
        for m in [1, 2, 3] {
            let tree = case_preset(case, m).instantiate().unwrap();
            let e = tree.edge_count();
            for i in 1..=e {
                let base = oracle_rows(&tree, 2, i, 2 * e);
                for p in [3, 5] {
                    assert_eq!(
                        base,
                        oracle_rows(&tree, p, i, 2 * e),
                        "{:?} m={m} i={i} differs between characteristics",
                        case
                    );
                }
            }
        }
    }

    // Cartan symmetry and projective dimensions on 1,000 random trees
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..1000 {
        let tree = random_tree(&mut rng, 8, 4);
        let e = tree.edge_count();
        for i in 1..=e {
            let (u, v) = tree.endpoints(i);
            let want = tree.vertex(u).degree() as u64 * tree.multiplicity(u)
                + tree.vertex(v).degree() as u64 * tree.multiplicity(v);
            assert_eq!(pim_dim(&tree, i), want, "dim P_{i}");
            let row_sum: u64 = (1..=e).map(|j| cartan_entry(&tree, i, j)).sum();
            assert_eq!(row_sum, want, "Cartan row sum = dim P_{i}");
            for j in 1..=e {
                assert_eq!(
                    cartan_entry(&tree, i, j),
                    cartan_entry(&tree, j, i),
                    "Cartan symmetry at ({i}, {j})"
                );
            }
        }
    }
    let dt = t0.elapsed();
    println!(
        "PASS: Ext^0 = delta and 2e-periodicity on {} trees; oracle output \
         identical over F_2/F_3/F_5 on all group presets with m <= 3; Cartan \
         symmetry and dim P_i on 1000 random trees ({dt:?})",
        periodic_trees.len()
    );
}

#[test]
fn lonely_block_is_all_ones() {
    for m in [1, 2, 5] {
        let tree = TreePreset::SingleEdge { m }.instantiate().unwrap();
        let rows = oracle_rows(&tree, 2, 1, 20);
        for (n, row) in rows.iter().enumerate() {
            assert_eq!(row, &vec![1], "single edge m={m} n={n}");
            assert_eq!(formula::ext_lonely(n as u64), 1);
        }
    }
    println!("PASS: one-edge blocks give dim Ext^n = 1 for all n <= 20, m in {{1, 2, 5}}");
}
