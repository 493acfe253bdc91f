//! Invariants of the secant variety of lines `Sigma = Sigma(Y, L)` of a
//! smooth projective variety under a 3-very-ample embedding, as closed-form
//! functions of the Hodge diamond of `Y`.
//!
//! Throughout, `n = dim Y`, `dim Sigma = 2n + 1`, and when the ambient
//! dimension `N` is known the codimension is `q = N - 2n - 1`. Positivity
//! hypotheses (`Q'_p`, `U_2`) cannot be read off a diamond; they are input
//! flags recorded in the branch notes.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::diamond::HodgeDiamond;
use crate::ext_int::ExtInt;
use crate::hodge::HodgeStructure;
use crate::table::CohomologyTable;
use crate::varieties::{blowup_primitive, from_diamond};

#[derive(Clone, Debug)]
pub struct SecantLinesContext {
    pub diamond: HodgeDiamond,
    pub ambient_dim: Option<usize>,
    pub h11_rational: Option<u64>,
    /// Largest `p <= n-1` for which the `Q'_p` vanishing is assumed, if any.
    pub qprime: Option<usize>,
    pub u2: bool,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinesError {
    #[error("ambient dimension {n} too small: secant variety needs N >= {min}")]
    AmbientTooSmall { n: usize, min: usize },
    #[error("Q'_p flag index {p} out of range 0..={max}")]
    QprimeOutOfRange { p: usize, max: usize },
    #[error("ambient dimension N is required for this computation")]
    AmbientRequired,
    #[error("local cohomology degree {j} outside 0..={max}")]
    DegreeOutOfRange { j: i64, max: i64 },
    #[error("cohomology degree {j} outside 0..={max}")]
    IhDegreeOutOfRange { j: i64, max: i64 },
    #[error("h11_rational input is required to evaluate the Q-factoriality defect")]
    MissingH11Rational,
}

impl SecantLinesContext {
    pub fn new(diamond: HodgeDiamond) -> Self {
        Self {
            diamond,
            ambient_dim: None,
            h11_rational: None,
            qprime: None,
            u2: false,
        }
    }

    pub fn with_ambient(mut self, n_amb: usize) -> Result<Self, LinesError> {
        let min = 2 * self.diamond.dim() + 2;
        if n_amb < min {
            return Err(LinesError::AmbientTooSmall { n: n_amb, min });
        }
        self.ambient_dim = Some(n_amb);
        Ok(self)
    }

    pub fn with_h11_rational(mut self, h11: u64) -> Self {
        self.h11_rational = Some(h11);
        self
    }

    pub fn with_qprime(mut self, p: usize) -> Result<Self, LinesError> {
        let max = self.diamond.dim().saturating_sub(1);
        if p > max {
            return Err(LinesError::QprimeOutOfRange { p, max });
        }
        self.qprime = Some(p);
        Ok(self)
    }

    pub fn with_u2(mut self) -> Self {
        self.u2 = true;
        self
    }

    pub fn n(&self) -> usize {
        self.diamond.dim()
    }

    pub fn dim_sigma(&self) -> i64 {
        2 * self.n() as i64 + 1
    }

    /// Codimension `q = N - dim Sigma` when the ambient dimension is known.
    pub fn codim(&self) -> Option<i64> {
        self.ambient_dim.map(|n_amb| n_amb as i64 - self.dim_sigma())
    }
}

/// Local cohomological defect of `Sigma`.
pub fn lcdef_sigma(ctx: &SecantLinesContext) -> i64 {
    let n = ctx.n() as i64;
    if n == 1 {
        0
    } else if ctx.diamond.h0i(1) != 0 {
        n - 1
    } else {
        n - 2
    }
}

/// One weight-graded slice of a local cohomology module, reported as the
/// fiberwise Hodge structure of a trivial-monodromy local system on `Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocalCohomology {
    /// `H^(q+j)` for `j > 0`: pure of module weight `N + q + j + 1`.
    Higher {
        j: i64,
        module_weight: i64,
        fiber: HodgeStructure,
        above_lcdef: bool,
    },
    /// The two weight slices of `H^q`: the top slice is again a local system
    /// on `Y`; the lower slice is the intersection complex of `Sigma`, whose
    /// global sections are computed by [`ih_secant`].
    Top {
        weight_top: i64,
        top_fiber: HodgeStructure,
        weight_ic: i64,
    },
}

/// Weight-graded description of `H^(q+j)_Sigma(O)` for `0 <= j <= n-1`.
/// Requires the ambient dimension for the Tate bookkeeping.
pub fn local_cohomology_weights(
    ctx: &SecantLinesContext,
    j: i64,
) -> Result<LocalCohomology, LinesError> {
    let n = ctx.n() as i64;
    let q = ctx.codim().ok_or(LinesError::AmbientRequired)?;
    let n_amb = ctx.ambient_dim.unwrap() as i64;
    if j < 0 || j > n - 1 {
        return Err(LinesError::DegreeOutOfRange { j, max: n - 1 });
    }
    if j == 0 {
        let top = blowup_primitive(&ctx.diamond, n).tate_twist(-q - 1);
        Ok(LocalCohomology::Top {
            weight_top: n_amb + q + 1,
            top_fiber: top,
            weight_ic: n_amb + q,
        })
    } else {
        let fiber = blowup_primitive(&ctx.diamond, n - j).tate_twist(-q - j - 1);
        Ok(LocalCohomology::Higher {
            j,
            module_weight: n_amb + q + j + 1,
            fiber,
            above_lcdef: j > lcdef_sigma(ctx),
        })
    }
}

/// Shifted summands of the defect object measuring the failure of `Sigma` to
/// be a rational homology manifold: the shift-`l` piece is the primitive
/// degree-`(n-l)` cohomology of the blown-up fiber. Empty exactly when all
/// pieces vanish, i.e. for `Y = P^1`.
pub fn rhm_defect_object(ctx: &SecantLinesContext) -> Vec<(i64, HodgeStructure)> {
    let n = ctx.n() as i64;
    let pieces: Vec<(i64, HodgeStructure)> = (0..n)
        .map(|l| (l, blowup_primitive(&ctx.diamond, n - l)))
        .collect();
    if pieces.iter().all(|(_, h)| h.is_zero()) {
        Vec::new()
    } else {
        pieces
    }
}

/// Scalar singularity invariants plus the branch of each formula that fired.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub lcdef: i64,
    pub c: ExtInt,
    pub hrh: ExtInt,
    pub w: ExtInt,
    /// Q-factoriality defect; `None` when it needs the `h11_rational` input
    /// and that input is absent.
    pub sigma_defect: Option<ExtInt>,
    pub sigma_an_bound: Option<ExtInt>,
    pub branch_notes: Vec<String>,
}

pub fn singularity_invariants(ctx: &SecantLinesContext) -> InvariantReport {
    let d = &ctx.diamond;
    let n = ctx.n();
    let mut notes = Vec::new();

    let c = if n == 1 || (n == 2 && d.h0i(1) == 0) {
        notes.push("c: dim 1, or dim 2 with h^{0,1} = 0".to_string());
        ExtInt::PosInf
    } else if n >= 3 && (1..n).all(|i| d.h0i(i) == 0) {
        notes.push("c: dim >= 3 with h^{0,i} = 0 for 0 < i < dim".to_string());
        ExtInt::Int(0)
    } else {
        notes.push("c: some intermediate h^{0,i} nonzero".to_string());
        ExtInt::Int(-1)
    };

    let hrh = if d.is_projective_line() {
        notes.push("HRH: Y = P^1, rational homology manifold".to_string());
        ExtInt::PosInf
    } else if n >= 2 && (1..=n).all(|i| d.h0i(i) == 0) {
        notes.push("HRH: dim >= 2 with h^{0,i} = 0 for all i > 0".to_string());
        ExtInt::Int(0)
    } else {
        notes.push("HRH: some h^{0,i} nonzero".to_string());
        ExtInt::Int(-1)
    };

    // The highest Hodge index of P_n carrying a class is n - mu by
    // conjugation symmetry, and w is (n - 1) minus that index, i.e. mu - 1.
    // This is the branch consistent with HRH = min(c, w).
    let w = if !d.primitive(n as i64).is_zero() {
        let mu = d.mu_prim(n as i64).finite().expect("nonzero piece has finite mu");
        notes.push(format!("w: P_{n} nonzero, mu = {mu}"));
        ExtInt::Int(mu - 1)
    } else if n != 2 {
        notes.push(format!("w: P_{n} = 0 and dim != 2"));
        ExtInt::PosInf
    } else {
        notes.push("w: dim 2 with P_2 = 0".to_string());
        ExtInt::Int(0)
    };

    let sigma = match q_factoriality(ctx) {
        Ok(rec) => Some(rec.sigma),
        Err(_) => {
            notes.push("sigma: needs h11_rational input".to_string());
            None
        }
    };
    let sigma_an = q_factoriality(ctx).ok().and_then(|rec| rec.sigma_an_bound);

    InvariantReport {
        lcdef: lcdef_sigma(ctx),
        c,
        hrh,
        w,
        sigma_defect: sigma,
        sigma_an_bound: sigma_an,
        branch_notes: notes,
    }
}

/// Hodge-Lyubeznik style table: multiplicities keyed by `(r, s, u, v)` for
/// the plain numbers and by `(r, u, v)` (with `s` fixed implicit) for the
/// intersection numbers.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HLTable {
    pub entries: BTreeMap<(i64, i64, i64, i64), u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IHLTable {
    pub entries: BTreeMap<(i64, i64, i64), u64>,
}

impl HLTable {
    fn add(&mut self, r: i64, s: i64, u: i64, v: i64, m: u64) {
        if m > 0 {
            *self.entries.entry((r, s, u, v)).or_insert(0) += m;
        }
    }

    pub fn get(&self, r: i64, s: i64, u: i64, v: i64) -> u64 {
        self.entries.get(&(r, s, u, v)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl IHLTable {
    pub fn add(&mut self, r: i64, u: i64, v: i64, m: u64) {
        if m > 0 {
            *self.entries.entry((r, u, v)).or_insert(0) += m;
        }
    }

    pub fn get(&self, r: i64, u: i64, v: i64) -> u64 {
        self.entries.get(&(r, u, v)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Dimensions summed over `(u, v)` per costalk degree `r`.
    pub fn row_sums(&self) -> BTreeMap<i64, u64> {
        let mut out = BTreeMap::new();
        for (&(r, _, _), &m) in &self.entries {
            *out.entry(r).or_insert(0) += m;
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HLNumbers {
    pub lambda: HLTable,
    pub intersection: IHLTable,
    /// Set when `Y = P^1`, where both tables are empty.
    pub rationally_smooth: bool,
}

/// Hodge-Lyubeznik and intersection Hodge-Lyubeznik numbers at a point of
/// the singular locus `Y`. An entry `h^{p',q'}` of the primitive blow-up
/// cohomology in degree `deg` lands at `(u, v) = (-q', -p')`.
pub fn hl_numbers(ctx: &SecantLinesContext) -> HLNumbers {
    let d = &ctx.diamond;
    let n = d.dim() as i64;
    let dim_sigma = ctx.dim_sigma();
    let mut lambda = HLTable::default();
    let mut ihl = IHLTable::default();

    if d.is_projective_line() {
        return HLNumbers {
            lambda,
            intersection: ihl,
            rationally_smooth: true,
        };
    }

    if n == 1 {
        let g = d.h0i(1);
        ihl.add(2, -1, 0, g);
        ihl.add(2, 0, -1, g);
        ihl.add(3, 0, 0, 1);
        lambda.add(3, 3, 0, 0, 1);
    } else {
        // costalks of the higher local cohomology modules, degrees 1..n-1
        for s in (n + 2)..dim_sigma {
            let deg = s - n - 1;
            for ((p, q), m) in blowup_primitive(d, deg).iter() {
                lambda.add(dim_sigma, s, -q, -p, m);
            }
        }
        // the s = dim Sigma column agrees with the intersection numbers in
        // costalk degrees n+2 .. 2n
        for r in (n + 2)..=2 * n {
            let deg = dim_sigma - r;
            for ((p, q), m) in blowup_primitive(d, deg).iter() {
                lambda.add(r, dim_sigma, -q, -p, m);
            }
        }
        for r in (n + 1)..=2 * n {
            let deg = dim_sigma - r;
            for ((p, q), m) in blowup_primitive(d, deg).iter() {
                ihl.add(r, -q, -p, m);
            }
        }
    }

    HLNumbers {
        lambda,
        intersection: ihl,
        rationally_smooth: false,
    }
}

/// Generation levels of the Hodge filtration on the local cohomology
/// modules; `-inf` encodes the zero module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerationLevels {
    /// `(j, gl(H^(q+j)))` for `0 < j <= lcdef`.
    pub higher: Vec<(i64, ExtInt)>,
    /// Generation level of the top weight slice of `H^q`.
    pub top_weight_slice: ExtInt,
    /// Unconditional bound `gl(H^q) <= n`.
    pub h_q_bound: i64,
    /// With the `Q'_p` flag: `gl(IC(-q)) <= n - p - 1`.
    pub ic_bound: Option<i64>,
    /// With the `Q'_(n-1)` flag: `gl(IC(-q)) = 0`.
    pub ic_exact: Option<ExtInt>,
    /// With the `Q'_(n-1)` flag: exact value of `gl(H^q)`.
    pub h_q_exact: Option<ExtInt>,
}

pub fn generation_levels(ctx: &SecantLinesContext) -> GenerationLevels {
    let d = &ctx.diamond;
    let n = d.dim() as i64;

    let higher = (1..=lcdef_sigma(ctx))
        .map(|j| {
            let gl = if j == n - 2 {
                if d.h0i(2) != 0 {
                    ExtInt::Int(2)
                } else {
                    ExtInt::Int(1)
                }
            } else {
                (n - j) - d.mu_prim(n - j)
            };
            (j, gl)
        })
        .collect();

    let top = top_slice_gl(d);

    let (ic_bound, ic_exact, h_q_exact) = match ctx.qprime {
        Some(p) => {
            let bound = n - p as i64 - 1;
            if p as i64 == n - 1 {
                let exact = if n >= 3 {
                    ExtInt::Int(0).max(n - d.mu_prim(n))
                } else {
                    // in low dimension the top slice value dominates; P^1
                    // has the zero-generated structure sheaf contribution
                    match top {
                        ExtInt::NegInf => ExtInt::Int(0),
                        v => v,
                    }
                };
                (Some(bound), Some(ExtInt::Int(0)), Some(exact))
            } else {
                (Some(bound), None, None)
            }
        }
        None => (None, None, None),
    };

    GenerationLevels {
        higher,
        top_weight_slice: top,
        h_q_bound: n,
        ic_bound,
        ic_exact,
        h_q_exact,
    }
}

fn top_slice_gl(d: &HodgeDiamond) -> ExtInt {
    let n = d.dim() as i64;
    if n >= 3 {
        n - d.mu_prim(n)
    } else if n == 2 {
        if d.h0i(2) != 0 {
            ExtInt::Int(2)
        } else {
            ExtInt::Int(1)
        }
    } else if d.h0i(1) != 0 {
        ExtInt::Int(1)
    } else {
        ExtInt::NegInf
    }
}

/// Pure weight-`j` intersection cohomology of `Sigma` for
/// `0 <= j <= 2 dim Sigma`; degrees above the middle are filled in by
/// Poincare duality.
pub fn ih_secant(ctx: &SecantLinesContext, j: i64) -> Result<HodgeStructure, LinesError> {
    let n = ctx.n() as i64;
    let d = ctx.dim_sigma();
    if j < 0 || j > 2 * d {
        return Err(LinesError::IhDegreeOutOfRange { j, max: 2 * d });
    }
    if j > d {
        return Ok(ih_secant(ctx, 2 * d - j)?.tate_twist(-(j - d)));
    }
    let y = &ctx.diamond;
    let h = |m: i64| y.cohomology(m);
    let mut out = HodgeStructure::zero();
    // the Tate ladder runs to l = n for surfaces and above (the Hilbert
    // square contributes its exceptional classes twice through the bundle);
    // for a curve there is no exceptional ladder at all. The l = n term is
    // what the hypercohomology of the resolution forces: without it the
    // decomposition identity against H(P) fails already for Y = P^2.
    let ladder_top = if n >= 2 { n } else { 0 };
    for l in 1..=ladder_top {
        out = out.direct_sum(&h(j - 2 * l).tate_twist(-l));
    }
    let lo = j.div_euclid(2) + if j % 2 == 0 { 1 } else { 2 };
    for l in lo..=j.min(n) {
        out = out.direct_sum(&y.primitive(l).tensor(&h(j - l)));
    }
    let quarter = match j.rem_euclid(4) {
        1 | 3 => {
            let k = (j - 1) / 2;
            h(k).tensor(&h(k + 1))
        }
        0 => {
            let k = j / 4;
            h(2 * k - 1)
                .wedge2()
                .tate_twist(-1)
                .direct_sum(&h(2 * k).sym2())
        }
        _ => {
            let k = j / 2;
            h(k - 1)
                .sym2()
                .tate_twist(-1)
                .direct_sum(&h(k).wedge2())
        }
    };
    Ok(out.direct_sum(&quarter))
}

/// Full intersection cohomology table of `Sigma`.
pub fn ih_secant_table(ctx: &SecantLinesContext) -> CohomologyTable {
    let mut t = CohomologyTable::new(format!("IH(Sigma), dim Y = {}", ctx.n()));
    for j in 0..=2 * ctx.dim_sigma() {
        t.add(j, ih_secant(ctx, j).expect("degree in range"));
    }
    t
}

/// Mixed singular cohomology of `Sigma`: for `j > 0` only weights `j-1` and
/// `j` occur. Summands of weight `w` from the lower-weight family are placed
/// in degree `w + 1`; the weight-`w` family sits in degree `w`.
pub fn sing_cohomology_secant(ctx: &SecantLinesContext) -> CohomologyTable {
    let y = &ctx.diamond;
    let n = y.dim() as i64;
    let prim = y.primitive_decomposition();
    let p = |l: i64| -> &HodgeStructure { &prim[l as usize] };
    let mut t = CohomologyTable::new(format!("H(Sigma), dim Y = {}", ctx.n()));

    let mut add_lower = |h: HodgeStructure, w: i64| t.add(w + 1, h);
    // Gr^W_(j-1) H^j: diagonal squares and cross tensors of primitive pieces
    for l in (1..=n).step_by(2) {
        for a in 0..=(n - l) {
            add_lower(p(l).sym2().tate_twist(-a), 2 * l + 2 * a);
        }
    }
    for l in (2..=n).step_by(2) {
        for a in 0..=(n - l) {
            add_lower(p(l).wedge2().tate_twist(-a), 2 * l + 2 * a);
        }
    }
    for l1 in 1..n {
        for l2 in (l1 + 1)..=n {
            for a in 0..=(n - l2) {
                add_lower(p(l1).tensor(p(l2)).tate_twist(-a), l1 + l2 + 2 * a);
            }
        }
    }

    let mut add_weight = |h: HodgeStructure, w: i64| t.add(w, h);
    // Gr^W_j H^j: the resolution ladder, the Tate diagonal, and the
    // high-twist primitive families
    for k in 1..n {
        for m in 0..=2 * n {
            let h = y.cohomology(m).tate_twist(-k - 1);
            add_weight(h, m + 2 * (k + 1));
        }
    }
    for a in 0..=(2 * n + 1) {
        add_weight(HodgeStructure::tate(a), 2 * a);
    }
    for l1 in 0..=n {
        for l2 in (l1 + 1)..=n {
            for a in 0..=(n - l2) {
                let twist = l1 - n - a - 1;
                add_weight(
                    p(l1).tensor(p(l2)).tate_twist(twist),
                    l1 + l2 - 2 * twist,
                );
            }
        }
    }
    for l in (2..=n).step_by(2) {
        for a in (n - l + 1)..=(2 * (n - l) + 1) {
            add_weight(p(l).sym2().tate_twist(-a), 2 * l + 2 * a);
        }
    }
    for l in (1..=n).step_by(2) {
        for a in (n - l + 1)..=(2 * (n - l) + 1) {
            add_weight(p(l).wedge2().tate_twist(-a), 2 * l + 2 * a);
        }
    }
    t
}

/// Q-factoriality data of a normal `Sigma`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QFactorialityRecord {
    pub sigma: ExtInt,
    pub q_factorial: bool,
    pub factorial: bool,
    /// With the `U_2` flag and `h^{0,1} = 0`: the local analytic defect is
    /// bounded by `h^2(Y)`, attained when `h^{0,2} = 0`.
    pub sigma_an_bound: Option<ExtInt>,
    pub sigma_an_attained: Option<bool>,
    pub notes: Vec<String>,
}

pub fn q_factoriality(ctx: &SecantLinesContext) -> Result<QFactorialityRecord, LinesError> {
    let d = &ctx.diamond;
    let n = d.dim();
    let mut notes = Vec::new();

    let sigma = if d.h0i(1) != 0 {
        notes.push("sigma: h^{0,1} nonzero, defect infinite".to_string());
        ExtInt::PosInf
    } else if n >= 2 {
        let h11 = ctx.h11_rational.ok_or(LinesError::MissingH11Rational)?;
        notes.push(format!("sigma: h^{{1,1}}_Q input = {h11}"));
        ExtInt::Int(h11 as i64)
    } else {
        notes.push("sigma: Y = P^1".to_string());
        ExtInt::Int(0)
    };

    let q_factorial = d.is_projective_line();
    if q_factorial {
        notes.push("Q-factorial: (Y, L) is a rational normal curve of degree >= 4".to_string());
    }

    let (bound, attained) = if ctx.u2 && n >= 2 && d.h0i(1) == 0 {
        let b = 2 * d.h0i(2) + d.hodge_number(1, 1);
        notes.push(format!("sigma_an: U_2 flag set, bound h^2(Y) = {b}"));
        (Some(ExtInt::Int(b as i64)), Some(d.h0i(2) == 0))
    } else if ctx.u2 && n >= 2 {
        notes.push("sigma_an: infinite since h^{0,1} nonzero".to_string());
        (Some(ExtInt::PosInf), None)
    } else {
        (None, None)
    };

    Ok(QFactorialityRecord {
        sigma,
        q_factorial,
        factorial: false,
        sigma_an_bound: bound,
        sigma_an_attained: attained,
        notes,
    })
}

/// Convenience: the full cohomology table of `Y` itself.
pub fn ambient_cohomology(ctx: &SecantLinesContext) -> CohomologyTable {
    from_diamond(&ctx.diamond)
}
