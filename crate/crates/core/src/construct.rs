//! Constructive labelings for `D(n, l)`, one per degree regime.
//!
//! All three constructions label leaf `x_i` with `i` and the hub with 1, so
//! the leaf edges take weights `2..=n-l+1`. They differ on the path:
//!
//! * Case 1 (`Δ > ceil(n/2)`): `p_1 = n-l+1`, `p_2 = 4`, then pairs
//!   `(p_3, p_4), (p_5, p_6), ...` labeled `n-l, n-l-1, ...`.
//! * Case 2 (`Δ = ceil(n/2)`): `p_1 = p_2 = n-l+1`, then the same descending
//!   pairs as Case 1.
//! * Case 3 (`Δ < ceil(n/2)`): pairs `(p_1, p_2), (p_3, p_4), ...` labeled
//!   `n-l+1, n-l+2, ...`.
//!
//! A pair cut short by the end of the path is a single vertex with the pair's
//! value.
//!
//! When `n = 2l` and `l >= 5` the Case 1 labeling gives `p_1 p_2` and
//! `p_3 p_4` the same weight `l + 5`. The repair variant lowers `p_2` to 3;
//! it is only used when asked for and always re-verified.

use core::fmt;

use crate::graph::{check_dandelion, dandelion, VertexId};
use crate::labeling::{verify, Labeling, VerifyReport};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseKind {
    /// Maximum degree exceeds the edge term of the lower bound.
    Case1,
    /// Maximum degree equals the edge term.
    Case2,
    /// Maximum degree is below the edge term.
    Case3,
}

impl CaseKind {
    pub fn name(self) -> &'static str {
        match self {
            CaseKind::Case1 => "Case1",
            CaseKind::Case2 => "Case2",
            CaseKind::Case3 => "Case3",
        }
    }
}

impl fmt::Display for CaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionResult {
    pub n: u32,
    pub l: u32,
    pub labeling: Labeling,
    pub claimed_k: u32,
    pub case: CaseKind,
    /// Set when the Case 1 repair was emitted instead of the verbatim labeling.
    pub repaired: bool,
    pub report: VerifyReport,
}

/// Compares the hub degree `n-l+1` with `ceil(n/2)`.
pub fn classify(n: u32, l: u32) -> Result<CaseKind> {
    check_dandelion(n, l)?;
    let degree = n - l + 1;
    let edge_term = n.div_ceil(2);
    Ok(match degree.cmp(&edge_term) {
        core::cmp::Ordering::Greater => CaseKind::Case1,
        core::cmp::Ordering::Equal => CaseKind::Case2,
        core::cmp::Ordering::Less => CaseKind::Case3,
    })
}

fn expect_case(n: u32, l: u32, expected: CaseKind) -> Result<()> {
    let actual = classify(n, l)?;
    if actual != expected {
        return Err(Error::WrongCase { expected, actual });
    }
    Ok(())
}

/// Leaves `x_i = i` and hub `p_0 = 1`.
fn star_part(n: u32, l: u32, k: u32) -> Labeling {
    let mut lab = Labeling::new(k);
    for i in 1..=n - l {
        lab.set(VertexId::Leaf(i), i);
    }
    lab.set(VertexId::HUB, 1);
    lab
}

/// Labels `p_3, p_4, ...` in pairs counting down from `n-l`.
fn descending_tail(lab: &mut Labeling, n: u32, l: u32) {
    for j in 3..l {
        let pair = (j - 1) / 2;
        lab.set(VertexId::PathNode(j), n - l + 1 - pair);
    }
}

fn case1_labeling(n: u32, l: u32, p2: u32) -> Labeling {
    let k = n - l + 1;
    let mut lab = star_part(n, l, k);
    lab.set(VertexId::PathNode(1), k);
    if l > 2 {
        lab.set(VertexId::PathNode(2), p2);
    }
    descending_tail(&mut lab, n, l);
    lab
}

fn finish(
    n: u32,
    l: u32,
    labeling: Labeling,
    case: CaseKind,
    repaired: bool,
) -> Result<ConstructionResult> {
    let report = verify(&dandelion(n, l)?, &labeling)?;
    Ok(ConstructionResult {
        n,
        l,
        claimed_k: labeling.k(),
        labeling,
        case,
        repaired,
        report,
    })
}

/// Case 1 labeling with `k = n-l+1`. With `allow_repair`, an invalid
/// verbatim labeling is replaced by the `p_2 = 3` variant.
pub fn construct_case1(n: u32, l: u32, allow_repair: bool) -> Result<ConstructionResult> {
    expect_case(n, l, CaseKind::Case1)?;
    let verbatim = finish(n, l, case1_labeling(n, l, 4), CaseKind::Case1, false)?;
    if verbatim.report.valid || !allow_repair || l < 3 {
        return Ok(verbatim);
    }
    finish(n, l, case1_labeling(n, l, 3), CaseKind::Case1, true)
}

/// Case 2 labeling with `k = n-l+1`.
pub fn construct_case2(n: u32, l: u32) -> Result<ConstructionResult> {
    expect_case(n, l, CaseKind::Case2)?;
    let k = n - l + 1;
    let mut lab = star_part(n, l, k);
    for j in 1..l.min(3) {
        lab.set(VertexId::PathNode(j), k);
    }
    descending_tail(&mut lab, n, l);
    finish(n, l, lab, CaseKind::Case2, false)
}

/// Case 3 labeling with `k = n-l+ceil(l/2)`. The largest label actually used
/// is `n-l+ceil((l-1)/2)`.
pub fn construct_case3(n: u32, l: u32) -> Result<ConstructionResult> {
    expect_case(n, l, CaseKind::Case3)?;
    let k = n - l + l.div_ceil(2);
    let mut lab = star_part(n, l, k);
    for j in 1..l {
        lab.set(VertexId::PathNode(j), n - l + j.div_ceil(2));
    }
    finish(n, l, lab, CaseKind::Case3, false)
}

/// Dispatches on [`classify`].
pub fn construct(n: u32, l: u32, allow_repair: bool) -> Result<ConstructionResult> {
    match classify(n, l)? {
        CaseKind::Case1 => construct_case1(n, l, allow_repair),
        CaseKind::Case2 => construct_case2(n, l),
        CaseKind::Case3 => construct_case3(n, l),
    }
}
