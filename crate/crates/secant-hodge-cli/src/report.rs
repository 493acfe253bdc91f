//! JSON-facing report records. Hodge structures serialize as sorted arrays
//! of `[p, q, mult]`, mixed tables as `{degree, classes}`, and extended
//! integers as plain numbers with `"inf"` / `"-inf"` for the two infinities.

use serde::{Deserialize, Serialize};

use secant_hodge::curves::{IcWeightGraded, VanishingReport};
use secant_hodge::hodge::HodgeStructure;
use secant_hodge::lines::{
    GenerationLevels, HLNumbers, InvariantReport, LocalCohomology, QFactorialityRecord,
};
use secant_hodge::table::CohomologyTable;
use secant_hodge::ExtInt;

/// Extended integer on the wire: a number, or the strings `inf` / `-inf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ExtIntRepr {
    Finite(i64),
    Infinite(Infinity),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Infinity {
    #[serde(rename = "inf")]
    Pos,
    #[serde(rename = "-inf")]
    Neg,
}

impl From<ExtInt> for ExtIntRepr {
    fn from(v: ExtInt) -> Self {
        match v {
            ExtInt::Int(n) => ExtIntRepr::Finite(n),
            ExtInt::PosInf => ExtIntRepr::Infinite(Infinity::Pos),
            ExtInt::NegInf => ExtIntRepr::Infinite(Infinity::Neg),
        }
    }
}

pub type Classes = Vec<(i64, i64, u64)>;

pub fn classes(h: &HodgeStructure) -> Classes {
    h.iter().map(|((p, q), m)| (p, q, m)).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableEntry {
    pub degree: i64,
    pub classes: Classes,
}

pub fn table_entries(t: &CohomologyTable) -> Vec<TableEntry> {
    t.iter()
        .map(|(degree, h)| TableEntry {
            degree,
            classes: classes(h),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LinesContextRepr {
    pub dim: usize,
    pub betti: Vec<u64>,
    pub ambient_dim: Option<usize>,
    pub codim: Option<i64>,
    pub h11_rational: Option<u64>,
    pub qprime: Option<usize>,
    pub u2: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvariantsRepr {
    pub lcdef: i64,
    pub c: ExtIntRepr,
    pub hrh: ExtIntRepr,
    pub w: ExtIntRepr,
    pub sigma: Option<ExtIntRepr>,
    pub sigma_an_bound: Option<ExtIntRepr>,
    pub branch_notes: Vec<String>,
}

impl From<&InvariantReport> for InvariantsRepr {
    fn from(r: &InvariantReport) -> Self {
        Self {
            lcdef: r.lcdef,
            c: r.c.into(),
            hrh: r.hrh.into(),
            w: r.w.into(),
            sigma: r.sigma_defect.map(Into::into),
            sigma_an_bound: r.sigma_an_bound.map(Into::into),
            branch_notes: r.branch_notes.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LocalCohomologyRepr {
    pub j: i64,
    pub module_weight: Option<i64>,
    pub fiber: Option<Classes>,
    pub weight_top: Option<i64>,
    pub top_fiber: Option<Classes>,
    pub weight_ic: Option<i64>,
    pub above_lcdef: bool,
}

impl From<&LocalCohomology> for LocalCohomologyRepr {
    fn from(lc: &LocalCohomology) -> Self {
        match lc {
            LocalCohomology::Higher {
                j,
                module_weight,
                fiber,
                above_lcdef,
            } => Self {
                j: *j,
                module_weight: Some(*module_weight),
                fiber: Some(classes(fiber)),
                weight_top: None,
                top_fiber: None,
                weight_ic: None,
                above_lcdef: *above_lcdef,
            },
            LocalCohomology::Top {
                weight_top,
                top_fiber,
                weight_ic,
            } => Self {
                j: 0,
                module_weight: None,
                fiber: None,
                weight_top: Some(*weight_top),
                top_fiber: Some(classes(top_fiber)),
                weight_ic: Some(*weight_ic),
                above_lcdef: false,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HlRepr {
    pub rationally_smooth: bool,
    /// Entries `[r, s, u, v, mult]`.
    pub lambda: Vec<(i64, i64, i64, i64, u64)>,
    /// Entries `[r, u, v, mult]`.
    pub intersection: Vec<(i64, i64, i64, u64)>,
}

impl From<&HLNumbers> for HlRepr {
    fn from(hl: &HLNumbers) -> Self {
        Self {
            rationally_smooth: hl.rationally_smooth,
            lambda: hl
                .lambda
                .entries
                .iter()
                .map(|(&(r, s, u, v), &m)| (r, s, u, v, m))
                .collect(),
            intersection: hl
                .intersection
                .entries
                .iter()
                .map(|(&(r, u, v), &m)| (r, u, v, m))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GenerationLevelsRepr {
    pub higher: Vec<(i64, ExtIntRepr)>,
    pub top_weight_slice: ExtIntRepr,
    pub h_q_bound: i64,
    pub ic_bound: Option<i64>,
    pub ic_exact: Option<ExtIntRepr>,
    pub h_q_exact: Option<ExtIntRepr>,
}

impl From<&GenerationLevels> for GenerationLevelsRepr {
    fn from(gl: &GenerationLevels) -> Self {
        Self {
            higher: gl.higher.iter().map(|&(j, v)| (j, v.into())).collect(),
            top_weight_slice: gl.top_weight_slice.into(),
            h_q_bound: gl.h_q_bound,
            ic_bound: gl.ic_bound,
            ic_exact: gl.ic_exact.map(Into::into),
            h_q_exact: gl.h_q_exact.map(Into::into),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QFactorialityRepr {
    pub sigma: ExtIntRepr,
    pub q_factorial: bool,
    pub factorial: bool,
    pub sigma_an_bound: Option<ExtIntRepr>,
    pub sigma_an_attained: Option<bool>,
    pub notes: Vec<String>,
}

impl From<&QFactorialityRecord> for QFactorialityRepr {
    fn from(r: &QFactorialityRecord) -> Self {
        Self {
            sigma: r.sigma.into(),
            q_factorial: r.q_factorial,
            factorial: r.factorial,
            sigma_an_bound: r.sigma_an_bound.map(Into::into),
            sigma_an_attained: r.sigma_an_attained,
            notes: r.notes.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RhmPieceRepr {
    pub shift: i64,
    pub classes: Classes,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LinesReport {
    pub context: LinesContextRepr,
    pub invariants: InvariantsRepr,
    pub local_cohomology: Vec<LocalCohomologyRepr>,
    pub rhm_defect: Vec<RhmPieceRepr>,
    pub hodge_lyubeznik: HlRepr,
    pub generation_levels: GenerationLevelsRepr,
    pub intersection_cohomology: Vec<TableEntry>,
    pub cohomology: Vec<TableEntry>,
    pub q_factoriality: QFactorialityRepr,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IcSliceRepr {
    pub level: u32,
    pub coefficient: Classes,
    pub support_order: u32,
    pub dual_twist: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IcWeightGradedRepr {
    pub lcdef: i64,
    pub perverse: bool,
    pub slices: Vec<IcSliceRepr>,
}

impl From<&IcWeightGraded> for IcWeightGradedRepr {
    fn from(g: &IcWeightGraded) -> Self {
        Self {
            lcdef: g.lcdef,
            perverse: g.perverse,
            slices: g
                .slices
                .iter()
                .map(|s| IcSliceRepr {
                    level: s.level,
                    coefficient: classes(&s.coefficient),
                    support_order: s.support_order,
                    dual_twist: s.dual_twist,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StratumTableRepr {
    pub stratum: u32,
    /// Entries `[r, p, q, mult]`.
    pub entries: Vec<(i64, i64, i64, u64)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VanishingRepr {
    pub gl_bound: i64,
    pub codim: Option<i64>,
    pub vanishing_from: Option<i64>,
}

impl VanishingRepr {
    pub fn new(bound: i64, report: Option<&VanishingReport>) -> Self {
        Self {
            gl_bound: bound,
            codim: report.map(|r| r.codim),
            vanishing_from: report.map(|r| r.vanishing_from),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveQFactorialityRepr {
    pub rational_homology_manifold: bool,
    pub q_factorial: bool,
    pub sigma: ExtIntRepr,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveContextRepr {
    pub genus: u64,
    pub order: u32,
    pub ambient_dim: Option<usize>,
    pub codim: Option<i64>,
    pub dim_sigma: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveReport {
    pub context: CurveContextRepr,
    pub constant_sheaf: IcWeightGradedRepr,
    pub intersection_cohomology: Vec<TableEntry>,
    pub cohomology: Vec<TableEntry>,
    pub intersection_hodge_lyubeznik: Vec<StratumTableRepr>,
    pub generation_level: VanishingRepr,
    pub q_factoriality: CurveQFactorialityRepr,
}
