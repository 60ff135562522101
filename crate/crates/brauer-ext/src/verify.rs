//! Cross-checks between the Ext engines: the syzygy oracle, the closed-form
//! shape formulas, and the hardcoded group tables.
//!
//! `detect_closed_form` classifies a tree as a line or a star and produces
//! the relabeling onto the canonical coordinates used by `formula`. The
//! `verify_*` functions run two engines over a grid of (i, j, n) and
//! collect every disagreement. Known printed quirks (table rows that need
//! m >= 2 at the exceptional-adjacent diagonal) are catalogued in
//! `expected_divergence` so they inform instead of failing a run.

use crate::formula;
use crate::hom::{is_isomorphic, IsoResult};
use crate::syzygy::{ext_dims_oracle, omega, OracleError};
use crate::tables::{ext_group_table, table, CaseId};
use crate::tree::{BrauerTree, TreePreset};
use thiserror::Error;

/// Tree shape with a closed-form Ext formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedForm {
    /// One edge: dim Ext^n = 1 for all n.
    Lonely,
    /// e edges around one vertex, exceptional at the center or absent.
    StarCentral { e: usize },
    /// e edges around one vertex, exceptional at a leaf (canonical edge 1).
    StarOuter { e: usize },
    /// Path, no exceptional vertex.
    LinePlain { e: usize },
    /// Path, exceptional vertex at the end next to canonical edge 1.
    LineOuter { e: usize },
    /// Path, exceptional vertex between canonical edges a and a+1.
    LineInner { e: usize, a: usize },
}

impl ClosedForm {
    pub fn name(&self) -> &'static str {
        match self {
            ClosedForm::Lonely => "lonely",
            ClosedForm::StarCentral { .. } => "star-central",
            ClosedForm::StarOuter { .. } => "star-outer",
            ClosedForm::LinePlain { .. } => "line-plain",
            ClosedForm::LineOuter { .. } => "line-outer",
            ClosedForm::LineInner { .. } => "line-inner",
        }
    }

    pub fn edge_count(&self) -> usize {
        match *self {
            ClosedForm::Lonely => 1,
            ClosedForm::StarCentral { e }
            | ClosedForm::StarOuter { e }
            | ClosedForm::LinePlain { e }
            | ClosedForm::LineOuter { e }
            | ClosedForm::LineInner { e, .. } => e,
        }
    }
}

/// A closed-form engine for one tree: the detected shape plus the map from
/// the tree's edge labels onto the canonical labels of `formula`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedEngine {
    pub form: ClosedForm,
    /// to_canonical[edge] = canonical label (entry 0 unused).
    pub to_canonical: Vec<usize>,
}

impl ClosedEngine {
    pub fn period(&self) -> u64 {
        2 * self.form.edge_count() as u64
    }

    /// dim Ext^ell(S_i, S_j) in the tree's own labels.
    pub fn ext(&self, i: usize, j: usize, ell: u64) -> u64 {
        let (ci, cj) = (self.to_canonical[i], self.to_canonical[j]);
        match self.form {
            ClosedForm::Lonely => formula::ext_lonely(ell),
            ClosedForm::StarCentral { e } => formula::ext_star_central_walk(e, ci, cj, ell),
            ClosedForm::StarOuter { e } => formula::ext_star_outer_walk(e, ci, cj, ell),
            ClosedForm::LinePlain { e } => formula::ext_line_plain(e, ci, cj, ell),
            ClosedForm::LineOuter { e } => formula::ext_line_outer(e, ci, cj, ell),
            ClosedForm::LineInner { e, a } => formula::ext_line_inner(e, a, ci, cj, ell),
        }
    }
}

fn other_end(tree: &BrauerTree, edge: usize, v: usize) -> usize {
    let (a, b) = tree.endpoints(edge);
    a + b - v
}

/// Edge sequence of a path tree walked from the end vertex `start`.
fn walk_line(tree: &BrauerTree, start: usize) -> Vec<usize> {
    let e = tree.edge_count();
    let mut seq = Vec::with_capacity(e);
    let (mut v, mut prev) = (start, 0);
    while seq.len() < e {
        let next = *tree
            .vertex(v)
            .order()
            .iter()
            .find(|&&x| x != prev)
            .expect("path continues");
        seq.push(next);
        v = other_end(tree, next, v);
        prev = next;
    }
    seq
}

/// Classify a tree as one of the closed-form shapes, or None when its Ext
/// dimensions are only available through the oracle (or a group table).
pub fn detect_closed_form(tree: &BrauerTree) -> Option<ClosedEngine> {
    let e = tree.edge_count();
    if e == 1 {
        return Some(ClosedEngine { form: ClosedForm::Lonely, to_canonical: vec![0, 1] });
    }
    let max_deg = tree.vertices().iter().map(|v| v.degree()).max().expect("validated tree");
    if max_deg <= 2 {
        return Some(detect_line(tree));
    }
    if max_deg == e {
        return Some(detect_star(tree));
    }
    None
}

fn detect_line(tree: &BrauerTree) -> ClosedEngine {
    let e = tree.edge_count();
    let mut ends = tree.vertices().iter().filter(|v| v.degree() == 1).map(|v| v.id());
    let s0 = ends.next().expect("a path has two ends");
    let s1 = ends.next().expect("a path has two ends");
    let (s0, s1) = (s0.min(s1), s0.max(s1));
    let perm_from = |start: usize| {
        let mut perm = vec![0; e + 1];
        for (k, edge) in walk_line(tree, start).into_iter().enumerate() {
            perm[edge] = k + 1;
        }
        perm
    };
    match tree.exceptional() {
        None => ClosedEngine { form: ClosedForm::LinePlain { e }, to_canonical: perm_from(s0) },
        Some((w, _)) if tree.vertex(w).degree() == 1 => {
            ClosedEngine { form: ClosedForm::LineOuter { e }, to_canonical: perm_from(w) }
        }
        Some((w, _)) => {
            // edges between s0 and the exceptional vertex
            let mut a0 = 0;
            let (mut v, mut prev) = (s0, 0);
            while v != w {
                let next = *tree
                    .vertex(v)
                    .order()
                    .iter()
                    .find(|&&x| x != prev)
                    .expect("path reaches w");
                v = other_end(tree, next, v);
                prev = next;
                a0 += 1;
            }
            // canonical orientation puts the exceptional vertex at 2a >= e
            let (start, a) = if 2 * a0 >= e { (s0, a0) } else { (s1, e - a0) };
            ClosedEngine { form: ClosedForm::LineInner { e, a }, to_canonical: perm_from(start) }
        }
    }
}

fn detect_star(tree: &BrauerTree) -> ClosedEngine {
    let e = tree.edge_count();
    let center = tree
        .vertices()
        .iter()
        .find(|v| v.degree() == e)
        .expect("caller found a vertex of full degree")
        .id();
    let (form, t1) = match tree.exceptional() {
        Some((w, _)) if w != center => (ClosedForm::StarOuter { e }, tree.vertex(w).order()[0]),
        _ => (ClosedForm::StarCentral { e }, tree.vertex(center).order()[0]),
    };
    let mut perm = vec![0; e + 1];
    let mut cur = t1;
    for k in 1..=e {
        perm[cur] = k;
        cur = tree.vertex(center).successor(cur);
    }
    ClosedEngine { form, to_canonical: perm }
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(
        "tree has no closed form (neither a line nor a star); only the oracle \
         and, for group presets, the tables apply"
    )]
    NoClosedForm,
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// One disagreement between two engines at (i, j, n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub i: usize,
    pub j: usize,
    pub n: u64,
    pub oracle: u64,
    pub other: u64,
    /// Set when this is a catalogued printed quirk, not an engine bug.
    pub expected: Option<&'static str>,
}

/// Outcome of comparing the oracle against a second engine over a grid.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub label: String,
    /// The engine compared against the oracle.
    pub engine: &'static str,
    /// Number of (i, j, n) triples compared.
    pub triples: u64,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn unexpected(&self) -> impl Iterator<Item = &Mismatch> {
        self.mismatches.iter().filter(|m| m.expected.is_none())
    }

    /// Passes when every disagreement is a catalogued expected one.
    pub fn passed(&self) -> bool {
        self.mismatches.iter().all(|m| m.expected.is_some())
    }
}

fn compare_oracle_with(
    tree: &BrauerTree,
    p: u32,
    n_max: u64,
    max_dim: u64,
    label: String,
    engine: &'static str,
    closed: impl Fn(usize, usize, u64) -> u64,
    expected: impl Fn(usize, usize) -> Option<&'static str>,
) -> Result<VerifyReport, OracleError> {
    let e = tree.edge_count();
    let mut mismatches = Vec::new();
    let mut triples = 0;
    for i in 1..=e {
        let rows = ext_dims_oracle(tree, p, i, n_max as usize, max_dim)?;
        for (n, row) in rows.iter().enumerate() {
            for j in 1..=e {
                triples += 1;
                let o = row[j - 1] as u64;
                let c = closed(i, j, n as u64);
                if o != c {
                    mismatches.push(Mismatch {
                        i,
                        j,
                        n: n as u64,
                        oracle: o,
                        other: c,
                        expected: expected(i, j),
                    });
                }
            }
        }
    }
    Ok(VerifyReport { label, engine, triples, mismatches })
}

/// Oracle vs the detected closed-form formula, all pairs, degrees 0..=n_max.
pub fn verify_closed(
    tree: &BrauerTree,
    p: u32,
    n_max: u64,
    max_dim: u64,
) -> Result<VerifyReport, VerifyError> {
    let engine = detect_closed_form(tree).ok_or(VerifyError::NoClosedForm)?;
    let label = format!("{} e={}", engine.form.name(), tree.edge_count());
    Ok(compare_oracle_with(
        tree,
        p,
        n_max,
        max_dim,
        label,
        "closed-form",
        |i, j, n| engine.ext(i, j, n),
        |_, _| None,
    )?)
}

/// The tree preset belonging to a group table case.
pub fn case_preset(case: CaseId, m: u64) -> TreePreset {
    match case {
        CaseId::SzQm1 => TreePreset::SzQm1 { m },
        CaseId::SzQmsp1 => TreePreset::SzQmsp1 { m },
        CaseId::SzQpsp1 => TreePreset::SzQpsp1 { m },
        CaseId::ReeQm1 => TreePreset::ReeQm1 { m },
        CaseId::ReeQp1Principal => TreePreset::ReeQp1Principal { m },
        CaseId::ReeQp1Aux => TreePreset::ReeQp1Aux { m },
        CaseId::ReeQpsp1 => TreePreset::ReeQpsp1 { m },
        CaseId::ReeQmsp1 => TreePreset::ReeQmsp1 { m, reversed: false },
    }
}

/// Catalogued divergences between the hardcoded tables and the oracle.
/// They all sit at m = 1, where the exceptional vertex disappears and the
/// full-diagonal rows of the printed tables lose residues.
pub fn expected_divergence(case: CaseId, m: u64, i: usize, j: usize) -> Option<&'static str> {
    if m != 1 {
        return None;
    }
    match (case, i, j) {
        (CaseId::SzQpsp1, 3, 3) => Some(
            "printed m = 1 residues {3, 4} contradict Ext^0(V, V) != 0; \
             the syzygy walk gives {0, 7}",
        ),
        (CaseId::ReeQpsp1, 1, 1) => Some(
            "the full diagonal at the exceptional-adjacent edge needs m >= 2; \
             at m = 1 the walk gives {0, 11}",
        ),
        (CaseId::ReeQp1Aux, 2, 2) => Some(
            "the full diagonal at the exceptional-adjacent edge needs m >= 2; \
             at m = 1 the block is a plain line",
        ),
        (CaseId::ReeQp1Principal, 2, 2) => Some(
            "the exceptional-adjacent diagonal loses the residues {5, 6} at \
             m = 1; the syzygy walk gives {0, 2, 4, 7, 9, 11}",
        ),
        _ => None,
    }
}

/// Oracle vs the hardcoded group table for one case and multiplicity.
pub fn verify_table(
    case: CaseId,
    m: u64,
    p: u32,
    n_max: u64,
    max_dim: u64,
) -> Result<VerifyReport, OracleError> {
    let tree = case_preset(case, m).instantiate().expect("group presets are valid");
    verify_table_on(case, m, &tree, p, n_max, max_dim, "")
}

/// Oracle vs the hardcoded table for `case`, on a caller-supplied tree
/// (e.g. a reversed-orientation instantiation); `suffix` tags the label.
pub fn verify_table_on(
    case: CaseId,
    m: u64,
    tree: &BrauerTree,
    p: u32,
    n_max: u64,
    max_dim: u64,
    suffix: &str,
) -> Result<VerifyReport, OracleError> {
    let label = format!("{} m={m}{suffix}", table(case).label);
    compare_oracle_with(
        tree,
        p,
        n_max,
        max_dim,
        label,
        "group-table",
        |i, j, n| ext_group_table(case, m, i, j, n),
        |i, j| expected_divergence(case, m, i, j),
    )
}

/// Both planar orientations of the ReeQmsp1 tree against its table. The
/// published tree data leaves the embedding of the exceptional vertex
/// undetermined, so the two mirror orientations are tried side by side;
/// `matching` names the ones that reproduce the table.
#[derive(Debug, Clone)]
pub struct OrientationRun {
    pub m: u64,
    pub forward: VerifyReport,
    pub reversed: VerifyReport,
}

impl OrientationRun {
    pub fn matching(&self) -> Vec<&'static str> {
        let mut v = Vec::new();
        if self.forward.passed() {
            v.push("forward");
        }
        if self.reversed.passed() {
            v.push("reversed");
        }
        v
    }
}

pub fn verify_orientations(
    m: u64,
    p: u32,
    n_max: u64,
    max_dim: u64,
) -> Result<OrientationRun, OracleError> {
    let fwd = TreePreset::ReeQmsp1 { m, reversed: false }.instantiate().expect("valid preset");
    let rev = TreePreset::ReeQmsp1 { m, reversed: true }.instantiate().expect("valid preset");
    Ok(OrientationRun {
        m,
        forward: verify_table_on(CaseId::ReeQmsp1, m, &fwd, p, n_max, max_dim, " forward")?,
        reversed: verify_table_on(CaseId::ReeQmsp1, m, &rev, p, n_max, max_dim, " reversed")?,
    })
}

/// One disagreement between the walk and the stated star formula variants.
/// The walk variant is the oracle-backed one; `stated` records the value
/// the index-difference variant yields instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariantMismatch {
    pub shape: &'static str,
    pub e: usize,
    pub i: usize,
    pub j: usize,
    pub residue: u64,
    pub walk: u64,
    pub stated: u64,
}

/// Compare the two star formula variants over full periods for each
/// e in [e_lo, e_hi], listing every disagreement.
pub fn star_variant_mismatches(e_lo: usize, e_hi: usize) -> Vec<VariantMismatch> {
    let mut out = Vec::new();
    for e in e_lo..=e_hi {
        let period = 2 * e as u64;
        for i in 1..=e {
            for j in 1..=e {
                for l in 0..period {
                    let w = formula::ext_star_central_walk(e, i, j, l);
                    let s = formula::ext_star_central_stated(e, i, j, l);
                    if w != s {
                        out.push(VariantMismatch {
                            shape: "star-central",
                            e,
                            i,
                            j,
                            residue: l,
                            walk: w,
                            stated: s,
                        });
                    }
                    let w = formula::ext_star_outer_walk(e, i, j, l);
                    let s = formula::ext_star_outer_stated(e, i, j, l);
                    if w != s {
                        out.push(VariantMismatch {
                            shape: "star-outer",
                            e,
                            i,
                            j,
                            residue: l,
                            walk: w,
                            stated: s,
                        });
                    }
                }
            }
        }
    }
    out
}

/// Compute Omega^steps S_start over F_p and test isomorphism with S_target.
pub fn omega_probe(
    tree: &BrauerTree,
    p: u32,
    start: usize,
    steps: usize,
    target: usize,
    seed: u64,
    max_dim: u64,
) -> Result<IsoResult, OracleError> {
    let alg = crate::algebra::build_algebra(tree, p);
    let mut m = crate::algebra::simple_module(&alg, start);
    for _ in 0..steps {
        m = omega(&alg, &m, max_dim)?;
    }
    let target = crate::algebra::simple_module(&alg, target);
    Ok(is_isomorphic(&alg, &m, &target, seed))
}

/// Syzygy-walk isomorphisms that pin down the harder table rows:
/// (case, start simple, steps, target simple). They hold for every m >= 2.
pub const TRACE_PROBES: &[(CaseId, usize, usize, usize)] = &[
    (CaseId::SzQmsp1, 1, 3, 2),
    (CaseId::SzQmsp1, 1, 5, 4),
    (CaseId::SzQmsp1, 1, 8, 1),
    (CaseId::ReeQp1Principal, 1, 2, 4),
    (CaseId::ReeQp1Principal, 1, 12, 1),
    (CaseId::ReeQp1Principal, 2, 12, 2),
    (CaseId::ReeQmsp1, 1, 3, 3),
    (CaseId::ReeQmsp1, 1, 5, 4),
    (CaseId::ReeQmsp1, 1, 12, 1),
    (CaseId::ReeQmsp1, 2, 12, 2),
];

#[derive(Debug, Clone)]
pub struct TraceCheck {
    pub case: CaseId,
    pub m: u64,
    pub start: usize,
    pub steps: usize,
    pub target: usize,
    pub result: IsoResult,
}

pub fn run_trace_probes(
    p: u32,
    m: u64,
    seed: u64,
    max_dim: u64,
) -> Result<Vec<TraceCheck>, OracleError> {
    TRACE_PROBES
        .iter()
        .map(|&(case, start, steps, target)| {
            let tree = case_preset(case, m).instantiate().expect("valid preset");
            let result = omega_probe(&tree, p, start, steps, target, seed, max_dim)?;
            Ok(TraceCheck { case, m, start, steps, target, result })
        })
        .collect()
}

/// The full table-verification sweep: every case at every multiplicity in
/// `ms`, both orientations of the undetermined embedding, and the
/// isomorphism probes (the latter two for m >= 2 only, where the tables
/// and traces are unconditional).
#[derive(Debug, Clone)]
pub struct TablesSuite {
    pub runs: Vec<VerifyReport>,
    pub orientations: Vec<OrientationRun>,
    pub traces: Vec<TraceCheck>,
}

pub fn verify_tables_suite(
    p: u32,
    ms: &[u64],
    n_max: u64,
    seed: u64,
    max_dim: u64,
) -> Result<TablesSuite, OracleError> {
    let mut runs = Vec::new();
    for &m in ms {
        for case in CaseId::ALL {
            runs.push(verify_table(case, m, p, n_max, max_dim)?);
        }
    }
    let mut orientations = Vec::new();
    let mut traces = Vec::new();
    for &m in ms {
        if m >= 2 {
            orientations.push(verify_orientations(m, p, n_max, max_dim)?);
            traces.extend(run_trace_probes(p, m, seed, max_dim)?);
        }
    }
    Ok(TablesSuite { runs, orientations, traces })
}
