//! Invariants of the higher secant varieties `sigma_k` of a genus-`g` curve
//! under a `(2k-1)`-very-ample embedding. `dim sigma_k = 2k - 1` and
//! `q_k = N - (2k - 1)` when the ambient dimension is known.

use thiserror::Error;

use crate::hodge::{binomial, schur_hook, HodgeStructure, HookPartition};
use crate::lines::IHLTable;
use crate::table::CohomologyTable;

#[derive(Clone, Copy, Debug)]
pub struct SecantCurveContext {
    pub genus: u64,
    pub order: u32,
    pub ambient_dim: Option<usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CurvesError {
    #[error("secant order must be at least 2, got {0}")]
    OrderTooSmall(u32),
    #[error("ambient dimension {n} too small: sigma_{k} needs N >= {min}")]
    AmbientTooSmall { n: usize, k: u32, min: usize },
    #[error("cohomology degree {p} outside 0..={max}")]
    DegreeOutOfRange { p: i64, max: i64 },
    #[error("stratum index {a} outside 1..={max}")]
    StratumOutOfRange { a: u32, max: u32 },
    #[error("intersection Hodge-Lyubeznik numbers require positive genus")]
    GenusZero,
    #[error("ambient dimension N is required for this computation")]
    AmbientRequired,
}

impl SecantCurveContext {
    pub fn new(genus: u64, order: u32) -> Result<Self, CurvesError> {
        if order < 2 {
            return Err(CurvesError::OrderTooSmall(order));
        }
        Ok(Self {
            genus,
            order,
            ambient_dim: None,
        })
    }

    pub fn with_ambient(mut self, n_amb: usize) -> Result<Self, CurvesError> {
        let min = 2 * self.order as usize;
        if n_amb < min {
            return Err(CurvesError::AmbientTooSmall {
                n: n_amb,
                k: self.order,
                min,
            });
        }
        self.ambient_dim = Some(n_amb);
        Ok(self)
    }

    pub fn dim_sigma(&self) -> i64 {
        2 * self.order as i64 - 1
    }

    pub fn codim(&self) -> Option<i64> {
        self.ambient_dim.map(|n| n as i64 - self.dim_sigma())
    }
}

/// One weight-graded piece of the (shifted) constant sheaf on `sigma_k`: the
/// weight-`(2k-1-l)` slice is `Sym^l H^1(C)` spread over the intersection
/// complex of `sigma_(k-l)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IcSlice {
    pub level: u32,
    pub coefficient: HodgeStructure,
    pub support_order: u32,
    /// Twist of the dual local-cohomology slice, `-(q_k + l)`, when the
    /// ambient dimension is known.
    pub dual_twist: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IcWeightGraded {
    pub slices: Vec<IcSlice>,
    pub lcdef: i64,
    pub perverse: bool,
}

pub fn ic_weight_graded(ctx: &SecantCurveContext) -> IcWeightGraded {
    let h1 = HodgeStructure::curve_h1(ctx.genus);
    let q = ctx.codim();
    let slices = (0..ctx.order)
        .map(|l| IcSlice {
            level: l,
            coefficient: h1.sym_power(l),
            support_order: ctx.order - l,
            dual_twist: q.map(|q| -(q + l as i64)),
        })
        .collect();
    IcWeightGraded {
        slices,
        lcdef: 0,
        perverse: true,
    }
}

/// `IH^p(sigma_k)`: for `p` up to the middle degree it is the direct sum of
/// `Wedge^(p-2i) H^1(C)(-i)` over `max(p-k, 0) <= 2i <= p`; above the middle
/// it is filled in by the hard Lefschetz isomorphism.
pub fn ih_higher_secant(ctx: &SecantCurveContext, p: i64) -> Result<HodgeStructure, CurvesError> {
    let d = ctx.dim_sigma();
    if p < 0 || p > 2 * d {
        return Err(CurvesError::DegreeOutOfRange { p, max: 2 * d });
    }
    Ok(ih_summands(ctx.genus, ctx.order, p)
        .into_iter()
        .fold(HodgeStructure::zero(), |acc, (m, t)| {
            acc.direct_sum(
                &HodgeStructure::curve_h1(ctx.genus)
                    .wedge_power(m)
                    .tate_twist(-t),
            )
        }))
}

/// The `(wedge exponent, Tate index)` summands of `IH^p(sigma_k)`, exposed
/// for the spectral-sequence oracle. Above the middle degree the Tate index
/// records the hard Lefschetz shift.
pub fn ih_summands(g: u64, k: u32, p: i64) -> Vec<(u32, i64)> {
    let d = 2 * k as i64 - 1;
    if p < 0 || p > 2 * d {
        return Vec::new();
    }
    let (degree, shift) = if p <= d { (p, 0) } else { (2 * d - p, p - d) };
    let mut out = Vec::new();
    let mut i = 0;
    while 2 * i <= degree {
        let m = degree - 2 * i;
        if 2 * i >= (degree - k as i64).max(0) && m <= 2 * g as i64 {
            out.push((m as u32, i + shift));
        }
        i += 1;
    }
    out
}

pub fn ih_higher_table(ctx: &SecantCurveContext) -> CohomologyTable {
    let mut t = CohomologyTable::new(format!(
        "IH(sigma_{}), g = {}",
        ctx.order, ctx.genus
    ));
    for p in 0..=2 * ctx.dim_sigma() {
        t.add(p, ih_higher_secant(ctx, p).expect("degree in range"));
    }
    t
}

/// Mixed singular cohomology of `sigma_k`, evaluating the closed-form branch
/// table: pure Tate classes on the even diagonal, `Sym^k H^1` at
/// `(w, j) = (k, 2k-1)`, column hooks on the diagonal band
/// `w in [3k-2, 4k-3]`, and the off-diagonal hooks
/// `S_(j-w+1, 1^(2w+4k-3j-3))(2k-j-1)` for `j > w`. Hook-range endpoints
/// involve halves and are tested without rounding.
pub fn sing_cohomology_higher(ctx: &SecantCurveContext) -> CohomologyTable {
    let g = ctx.genus;
    let k = ctx.order as i64;
    let mut t = CohomologyTable::new(format!("H(sigma_{}), g = {g}", ctx.order));
    for j in 0..=4 * k - 2 {
        for w in 0..=j {
            let piece = weight_piece(g, k, j, w);
            t.add(j, piece);
        }
    }
    t
}

fn weight_piece(g: u64, k: i64, j: i64, w: i64) -> HodgeStructure {
    let twist = 2 * k - j - 1;
    if w <= k {
        if j == w && w % 2 == 0 {
            HodgeStructure::tate(w / 2)
        } else if w == k && j == 2 * k - 1 {
            HodgeStructure::curve_h1(g).sym_power(k as u32)
        } else {
            HodgeStructure::zero()
        }
    } else if j == w {
        let mut out = HodgeStructure::zero();
        if w % 2 == 0 {
            out = out.direct_sum(&HodgeStructure::tate(w / 2));
        }
        if (3 * k - 2..=4 * k - 3).contains(&w) {
            let column = HookPartition::column((4 * k - w - 2) as u32);
            out = out.direct_sum(&schur_hook(column, g).tate_twist(twist));
        }
        out
    } else {
        // j > w: membership 2w >= 3j - 4k + 3 is exact (no rounding)
        if 2 * w >= 3 * j - 4 * k + 3 && w <= 2 * j - 3 * k + 2 {
            let arm = (j - w + 1) as u32;
            let leg = (2 * w + 4 * k - 3 * j - 3) as u32;
            schur_hook(HookPartition::new(arm, leg), g).tate_twist(twist)
        } else {
            HodgeStructure::zero()
        }
    }
}

/// Intersection Hodge-Lyubeznik numbers at a point of the stratum
/// `U_a = sigma_a \ sigma_(a-1)`: the costalk in degree `r` is
/// `Wedge^(2k-1-r) H^1(C)`, supported on `r in [k+a-1, 2k-1]`.
pub fn ihl_numbers(ctx: &SecantCurveContext, stratum: u32) -> Result<IHLTable, CurvesError> {
    if ctx.genus == 0 {
        return Err(CurvesError::GenusZero);
    }
    let max = ctx.order - 1;
    if stratum < 1 || stratum > max {
        return Err(CurvesError::StratumOutOfRange { a: stratum, max });
    }
    let g = ctx.genus;
    let d = ctx.dim_sigma();
    let mut table = IHLTable::default();
    for r in (ctx.order as i64 + stratum as i64 - 1)..=d {
        let wedge = d - r;
        for p in -wedge..=0 {
            let q = -wedge - p;
            let m = binomial(g, (-p) as u64) * binomial(g, (-q) as u64);
            table.add(r, p, q, m);
        }
    }
    Ok(table)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingReport {
    pub gl_bound: i64,
    pub codim: i64,
    /// `R^(q_k - 1 + i) f_* Omega^(N-i)(log E) = 0` for all `i >= vanishing_from`.
    pub vanishing_from: i64,
}

/// Generation-level bound `k - 1` for the Hodge filtration on the local
/// cohomology of `sigma_k`.
pub fn gl_bound(ctx: &SecantCurveContext) -> i64 {
    ctx.order as i64 - 1
}

pub fn vanishing_report(ctx: &SecantCurveContext) -> Result<VanishingReport, CurvesError> {
    let q = ctx.codim().ok_or(CurvesError::AmbientRequired)?;
    Ok(VanishingReport {
        gl_bound: gl_bound(ctx),
        codim: q,
        vanishing_from: ctx.order as i64,
    })
}

/// Support of the weight-graded singular cohomology for each secant order up
/// to `k_max`: triples `(k, j, w)` sorted lexicographically, with the total
/// dimension of the `(j, w)` piece.
pub fn support_plot(g: u64, k_max: u32) -> Vec<(u32, i64, i64, u64)> {
    let mut out = Vec::new();
    for k in 2..=k_max {
        let ctx = SecantCurveContext::new(g, k).expect("k >= 2");
        let t = sing_cohomology_higher(&ctx);
        for (j, h) in t.iter() {
            for w in h.weights() {
                out.push((k, j, w, h.weight_piece(w).dim()));
            }
        }
    }
    out
}
