//! From a group and a pair (q, r) to Brauer tree presets.
//!
//! For the Suzuki groups Sz(q), q = 2^(2a+1), and the Ree groups Ree(q),
//! q = 3^(2a+1), an odd cross-characteristic prime r with cyclic Sylow
//! r-subgroups divides exactly one factor of the group order, and that
//! factor determines the shapes of all blocks with cyclic defect: the
//! blocks with more than one simple get the trees in `TreePreset`, and the
//! remaining non-projective simples sit alone in one-edge blocks. The
//! multiplicity is m = (r_part - 1) / e where r_part is the r-part of the
//! factor and e the number of edges.
//!
//! PSU3(q) is parameterized by shape instead: with cyclic Sylow
//! r-subgroups its Brauer trees are lines or the three-pointed star, but
//! which one occurs is not classified here.

use crate::tables::CaseId;
use crate::tree::{LinePosition, TreePreset};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupFamily {
    Suzuki,
    Ree,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleInfo {
    pub label: &'static str,
    /// Dimension of the simple module, where known (Suzuki cases only).
    pub dim: Option<u64>,
}

/// One block with more than one simple module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockInfo {
    pub name: &'static str,
    pub preset: TreePreset,
    pub case: CaseId,
    pub m: u64,
    pub simples: Vec<SimpleInfo>,
}

/// The non-projective simples lying alone in blocks of full defect.
/// Their one-edge trees have multiplicity r_part - 1, and
/// dim Ext^n(S, S) = 1 for every n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LonelyInfo {
    pub count: u64,
    pub dim: u64,
    pub multiplicity: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupBlocks {
    pub family: GroupFamily,
    pub q: u64,
    pub r: u64,
    /// r-part of the factor of |G| that r divides.
    pub r_part: u64,
    /// Human-readable name of that factor.
    pub factor: &'static str,
    pub blocks: Vec<BlockInfo>,
    /// Lonely block data where the character theory pins it down
    /// (Suzuki only; the Ree count is not tracked here).
    pub lonely: Option<LonelyInfo>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("q = {q} is not a valid order for this family (need an odd power of {base}{extra})")]
    BadQ { q: u64, base: u64, extra: &'static str },
    #[error("q = {q} is too large for exact dimension bookkeeping (max 2^31)")]
    QTooLarge { q: u64 },
    #[error("r = {r} must be an odd prime not dividing q")]
    BadR { r: u64 },
    #[error("r = {r} must exceed 3 for the Ree groups (Sylow 2-subgroups are not cyclic)")]
    RTooSmallForRee { r: u64 },
    #[error("r = {r} does not divide the order of the group away from the defining characteristic")]
    RNotInOrder { r: u64 },
    #[error("Sz(2) only has cyclic blocks for r = 5, got r = {r}")]
    SzTwoOnlyFive { r: u64 },
    #[error("e = {e} does not divide r_part - 1 = {rp_minus_1}; (q, r) is not valid group data")]
    NotDivisible { e: u64, rp_minus_1: u64 },
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// q = base^(2a+1) for some a >= 0? Returns s with s^2 = base * q.
fn split_odd_power(q: u64, base: u64) -> Option<u64> {
    let mut pow = base;
    let mut s = base; // base^(a+1) for pow = base^(2a+1)
    loop {
        if pow == q {
            return Some(s);
        }
        // next odd power: multiply by base^2
        pow = pow.checked_mul(base * base)?;
        s = s.checked_mul(base)?;
        if pow > q {
            return None;
        }
    }
}

fn r_part_of(mut n: u64, r: u64) -> u64 {
    let mut part = 1;
    while n % r == 0 {
        part *= r;
        n /= r;
    }
    part
}

fn exact_m(rp: u64, e: u64) -> Result<u64, ClassifyError> {
    if (rp - 1) % e != 0 {
        return Err(ClassifyError::NotDivisible { e, rp_minus_1: rp - 1 });
    }
    Ok((rp - 1) / e)
}

/// Identify every cyclic-defect block shape for the pair (q, r).
pub fn classify(family: GroupFamily, q: u64, r: u64) -> Result<GroupBlocks, ClassifyError> {
    if q > 1 << 31 {
        return Err(ClassifyError::QTooLarge { q });
    }
    let base = match family {
        GroupFamily::Suzuki => 2,
        GroupFamily::Ree => 3,
    };
    let s = split_odd_power(q, base).ok_or(ClassifyError::BadQ {
        q,
        base,
        extra: if base == 2 { " at least 2" } else { " at least 3" },
    })?;
    if !is_prime(r) || r == 2 || q % r == 0 {
        return Err(ClassifyError::BadR { r });
    }
    if family == GroupFamily::Ree && r == 3 {
        return Err(ClassifyError::RTooSmallForRee { r });
    }

    match family {
        GroupFamily::Suzuki => classify_suzuki(q, r, s),
        GroupFamily::Ree => classify_ree(q, r, s),
    }
}

fn classify_suzuki(q: u64, r: u64, s: u64) -> Result<GroupBlocks, ClassifyError> {
    // |Sz(q)| = q^2 (q-1) (q-s+1) (q+s+1), pairwise coprime odd parts
    let (qm1, qms, qps) = (q - 1, q - s + 1, q + s + 1);
    if q == 2 && qps % r != 0 {
        return Err(ClassifyError::SzTwoOnlyFive { r });
    }
    let half_s_qm1 = s / 2 * (q - 1);

    if qm1 % r == 0 {
        let rp = r_part_of(qm1, r);
        let m = exact_m(rp, 2)?;
        return Ok(GroupBlocks {
            family: GroupFamily::Suzuki,
            q,
            r,
            r_part: rp,
            factor: "q-1",
            blocks: vec![BlockInfo {
                name: "principal",
                preset: TreePreset::SzQm1 { m },
                case: CaseId::SzQm1,
                m,
                simples: vec![
                    SimpleInfo { label: "k", dim: Some(1) },
                    SimpleInfo { label: "V", dim: Some(q * q) },
                ],
            }],
            lonely: Some(LonelyInfo {
                count: (q - 2) / 2 - m,
                dim: q * q + 1,
                multiplicity: rp - 1,
            }),
        });
    }
    if qms % r == 0 {
        let rp = r_part_of(qms, r);
        let m = exact_m(rp, 4)?;
        return Ok(GroupBlocks {
            family: GroupFamily::Suzuki,
            q,
            r,
            r_part: rp,
            factor: "q-s+1",
            blocks: vec![BlockInfo {
                name: "principal",
                preset: TreePreset::SzQmsp1 { m },
                case: CaseId::SzQmsp1,
                m,
                simples: vec![
                    SimpleInfo { label: "k", dim: Some(1) },
                    SimpleInfo { label: "U", dim: Some(half_s_qm1) },
                    SimpleInfo { label: "V", dim: Some(q * q - 1) },
                    SimpleInfo { label: "W", dim: Some(half_s_qm1) },
                ],
            }],
            lonely: Some(LonelyInfo {
                count: (q - s) / 4 - m,
                dim: (q - 1) * (q + s + 1),
                multiplicity: rp - 1,
            }),
        });
    }
    if qps % r == 0 {
        let rp = r_part_of(qps, r);
        let m = exact_m(rp, 4)?;
        return Ok(GroupBlocks {
            family: GroupFamily::Suzuki,
            q,
            r,
            r_part: rp,
            factor: "q+s+1",
            blocks: vec![BlockInfo {
                name: "principal",
                preset: TreePreset::SzQpsp1 { m },
                case: CaseId::SzQpsp1,
                m,
                simples: vec![
                    SimpleInfo { label: "k", dim: Some(1) },
                    SimpleInfo { label: "U", dim: Some(half_s_qm1) },
                    SimpleInfo { label: "V", dim: Some((q - 1) * (q - s + 1)) },
                    SimpleInfo { label: "W", dim: Some(half_s_qm1) },
                ],
            }],
            lonely: Some(LonelyInfo {
                count: (q + s) / 4 - m,
                dim: (q - 1) * (q - s + 1),
                multiplicity: rp - 1,
            }),
        });
    }
    Err(ClassifyError::RNotInOrder { r })
}

fn classify_ree(q: u64, r: u64, s: u64) -> Result<GroupBlocks, ClassifyError> {
    // |Ree(q)| = q^3 (q-1) (q+1) (q+s+1) (q-s+1)
    let (qm1, qp1, qps, qms) = (q - 1, q + 1, q + s + 1, q - s + 1);
    let unnamed = |label| SimpleInfo { label, dim: None };

    if qm1 % r == 0 {
        let rp = r_part_of(qm1, r);
        let m = exact_m(rp, 2)?;
        let block = |name| BlockInfo {
            name,
            preset: TreePreset::ReeQm1 { m },
            case: CaseId::ReeQm1,
            m,
            simples: vec![unnamed("S1"), unnamed("S2")],
        };
        return Ok(GroupBlocks {
            family: GroupFamily::Ree,
            q,
            r,
            r_part: rp,
            factor: "q-1",
            blocks: vec![block("principal"), block("second")],
            lonely: None,
        });
    }
    if qp1 % r == 0 {
        let rp = r_part_of(qp1, r);
        let m = exact_m(rp, 6)?;
        let m_aux = exact_m(rp, 2)?;
        return Ok(GroupBlocks {
            family: GroupFamily::Ree,
            q,
            r,
            r_part: rp,
            factor: "q+1",
            blocks: vec![
                BlockInfo {
                    name: "principal",
                    preset: TreePreset::ReeQp1Principal { m },
                    case: CaseId::ReeQp1Principal,
                    m,
                    simples: (1..=6)
                        .map(|i| unnamed(["S1", "S2", "S3", "S4", "S5", "S6"][i - 1]))
                        .collect(),
                },
                BlockInfo {
                    name: "aux",
                    preset: TreePreset::ReeQp1Aux { m: m_aux },
                    case: CaseId::ReeQp1Aux,
                    m: m_aux,
                    simples: vec![unnamed("T1"), unnamed("T2")],
                },
            ],
            lonely: None,
        });
    }
    if qps % r == 0 {
        let rp = r_part_of(qps, r);
        let m = exact_m(rp, 6)?;
        return Ok(GroupBlocks {
            family: GroupFamily::Ree,
            q,
            r,
            r_part: rp,
            factor: "q+s+1",
            blocks: vec![BlockInfo {
                name: "principal",
                preset: TreePreset::ReeQpsp1 { m },
                case: CaseId::ReeQpsp1,
                m,
                simples: (1..=6)
                    .map(|i| unnamed(["S1", "S2", "S3", "S4", "S5", "S6"][i - 1]))
                    .collect(),
            }],
            lonely: None,
        });
    }
    if qms % r == 0 {
        let rp = r_part_of(qms, r);
        let m = exact_m(rp, 6)?;
        return Ok(GroupBlocks {
            family: GroupFamily::Ree,
            q,
            r,
            r_part: rp,
            factor: "q-s+1",
            blocks: vec![BlockInfo {
                name: "principal",
                preset: TreePreset::ReeQmsp1 { m, reversed: false },
                case: CaseId::ReeQmsp1,
                m,
                simples: (1..=6)
                    .map(|i| unnamed(["S1", "S2", "S3", "S4", "S5", "S6"][i - 1]))
                    .collect(),
            }],
            lonely: None,
        });
    }
    Err(ClassifyError::RNotInOrder { r })
}

/// PSU3(q) block shapes with cyclic Sylow r-subgroups: lines, or the star
/// with three points. The (q, r) to shape map is not classified here; the
/// caller supplies the shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Psu3Shape {
    Star { m: u64 },
    Line { e: usize, m: u64, position: LinePosition },
}

pub fn psu3_config(shape: Psu3Shape) -> TreePreset {
    match shape {
        Psu3Shape::Star { m } => TreePreset::Psu3Star3 { m },
        Psu3Shape::Line { e, m, position } => TreePreset::Psu3Line { e, m, position },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suzuki_q8_cases() {
        // |Sz(8)| = 64 * 7 * 5 * 13, s = 4
        let c = classify(GroupFamily::Suzuki, 8, 7).unwrap();
        assert_eq!(c.factor, "q-1");
        assert_eq!(c.r_part, 7);
        assert_eq!(c.blocks[0].m, 3);
        assert_eq!(c.lonely, Some(LonelyInfo { count: 0, dim: 65, multiplicity: 6 }));

        let c = classify(GroupFamily::Suzuki, 8, 5).unwrap();
        assert_eq!(c.factor, "q-s+1");
        assert_eq!(c.blocks[0].m, 1);
        // Lambda family has (q-s)/4 = 1 member, m = 1 of them exceptional
        assert_eq!(c.lonely.unwrap().count, 0);

        let c = classify(GroupFamily::Suzuki, 8, 13).unwrap();
        assert_eq!(c.factor, "q+s+1");
        assert_eq!(c.blocks[0].m, 3);
        assert_eq!(c.lonely.unwrap().count, 0);
    }

    #[test]
    fn suzuki_q32_m6() {
        // q = 32, s = 8: q - s + 1 = 25 = 5^2, m = (25-1)/4 = 6
        let c = classify(GroupFamily::Suzuki, 32, 5).unwrap();
        assert_eq!(c.factor, "q-s+1");
        assert_eq!(c.r_part, 25);
        assert_eq!(c.blocks[0].m, 6);
        assert_eq!(c.blocks[0].preset, TreePreset::SzQmsp1 { m: 6 });
        // Lambda family: (32-8)/4 = 6 members, all 6 exceptional
        assert_eq!(c.lonely.unwrap().count, 0);
    }

    #[test]
    fn suzuki_q128_lonely_blocks_exist() {
        // q = 128, s = 16: q - s + 1 = 113 prime, m = 28; family (q-s)/4 = 28
        let c = classify(GroupFamily::Suzuki, 128, 113).unwrap();
        assert_eq!(c.blocks[0].m, 28);
        assert_eq!(c.lonely.unwrap().count, 0);
        // q - 1 = 127 prime: m = 63, Omega family (q-2)/2 = 63
        let c = classify(GroupFamily::Suzuki, 128, 127).unwrap();
        assert_eq!(c.blocks[0].m, 63);
        assert_eq!(c.lonely.unwrap().count, 0);
        // q + s + 1 = 145 = 5 * 29: r = 5 gives m = 1, Theta family 36
        let c = classify(GroupFamily::Suzuki, 128, 5).unwrap();
        assert_eq!(c.r_part, 5);
        assert_eq!(c.blocks[0].m, 1);
        assert_eq!(c.lonely.unwrap().count, 35);
    }

    #[test]
    fn sz2_admits_only_r5() {
        let c = classify(GroupFamily::Suzuki, 2, 5).unwrap();
        assert_eq!(c.factor, "q+s+1");
        assert_eq!(c.blocks[0].m, 1);
        assert!(classify(GroupFamily::Suzuki, 2, 3).is_err());
    }

    #[test]
    fn ree_q27_cases() {
        // q = 27, s = 9: factors 26, 28, 37, 19
        let c = classify(GroupFamily::Ree, 27, 13).unwrap();
        assert_eq!(c.factor, "q-1");
        assert_eq!(c.blocks.len(), 2);
        assert_eq!(c.blocks[0].m, 6);

        let c = classify(GroupFamily::Ree, 27, 7).unwrap();
        assert_eq!(c.factor, "q+1");
        assert_eq!(c.blocks.len(), 2);
        assert_eq!(c.blocks[0].m, 1);
        assert_eq!(c.blocks[1].m, 3);
        assert_eq!(c.blocks[1].case, CaseId::ReeQp1Aux);

        let c = classify(GroupFamily::Ree, 27, 37).unwrap();
        assert_eq!(c.factor, "q+s+1");
        assert_eq!(c.blocks[0].m, 6);

        let c = classify(GroupFamily::Ree, 27, 19).unwrap();
        assert_eq!(c.factor, "q-s+1");
        assert_eq!(c.blocks[0].m, 3);
        assert_eq!(c.blocks[0].preset, TreePreset::ReeQmsp1 { m: 3, reversed: false });
    }

    #[test]
    fn invalid_inputs_are_rejected() {
        assert!(classify(GroupFamily::Suzuki, 16, 5).is_err(), "even power of 2");
        assert!(classify(GroupFamily::Suzuki, 8, 9).is_err(), "not prime");
        assert!(classify(GroupFamily::Suzuki, 8, 2).is_err(), "defining characteristic");
        assert!(classify(GroupFamily::Ree, 27, 3).is_err(), "r = 3 for Ree");
        assert!(classify(GroupFamily::Ree, 9, 5).is_err(), "even power of 3");
        assert!(classify(GroupFamily::Suzuki, 8, 11).is_err(), "r not in |G|");
    }

    #[test]
    fn ree_q3_is_psl28_like() {
        // q = 3, s = 3: q+s+1 = 7, q-s+1 = 1, q+1 = 4, q-1 = 2
        let c = classify(GroupFamily::Ree, 3, 7).unwrap();
        assert_eq!(c.factor, "q+s+1");
        assert_eq!(c.blocks[0].m, 1);
        assert!(classify(GroupFamily::Ree, 3, 5).is_err());
    }
}
