//! Cohomology tables of the auxiliary spaces entering the secant diagrams:
//! curves, projective spaces, symmetric products, Hilbert squares, blow-ups,
//! projective bundles and the incidence spaces over them.
//!
//! All builders take and return pure tables so that composite spaces
//! (products, bundles over nontrivial bases) compose freely.

use crate::diamond::HodgeDiamond;
use crate::hodge::HodgeStructure;
use crate::table::{macdonald_sym_curve, CohomologyTable};

pub use crate::table::curve_table as curve;

/// The pure table of `P^n`.
pub fn projective_space(n: usize) -> CohomologyTable {
    let mut t = CohomologyTable::new(format!("P^{n}"));
    for i in 0..=n as i64 {
        t.add(2 * i, HodgeStructure::tate(i));
    }
    t
}

/// Place `h^{p,q}` at degree `p + q`.
pub fn from_diamond(d: &HodgeDiamond) -> CohomologyTable {
    let mut t = CohomologyTable::new(format!("Y(dim={})", d.dim()));
    for j in 0..=2 * d.dim() as i64 {
        t.add(j, d.cohomology(j));
    }
    t
}

fn half_dim(y: &CohomologyTable) -> i64 {
    y.top_degree() / 2
}

/// Blow-up of a point on an `n`-dimensional `Y`: one class `Q(-k/2)` is added
/// in each even degree `k` in `[2, 2n-2]`. For a curve the range is empty.
pub fn blowup_point(y: &CohomologyTable) -> CohomologyTable {
    let n = half_dim(y);
    let mut t = y.clone();
    t.label = format!("Bl_pt({})", y.label);
    let mut k = 2;
    while k <= 2 * n - 2 {
        t.add(k, HodgeStructure::tate(k / 2));
        k += 2;
    }
    t
}

/// Primitive cohomology of the blow-up of `Y` at a point, in degree `l`:
/// `P_l(Y)` for `l != 2`, and `P_2(Y)` plus one `(1,1)` class when `l = 2`
/// and `dim Y >= 2`.
pub fn blowup_primitive(d: &HodgeDiamond, l: i64) -> HodgeStructure {
    let mut out = d.primitive(l);
    if l == 2 && d.dim() >= 2 {
        out.add_class(1, 1, 1);
    }
    out
}

/// Super symmetric square of the full cohomology, graded by weight.
pub fn sym2_variety(y: &CohomologyTable) -> CohomologyTable {
    let mut t = y.super_sym_power(2);
    t.label = format!("Sym^2({})", y.label);
    t
}

/// `H^j(Hilb^2 Y) = H^j(Sym^2 Y) + sum_(i=1)^(n-1) H^(j-2i)(Y)(-i)`.
pub fn hilb2(y: &CohomologyTable) -> CohomologyTable {
    let n = half_dim(y);
    let mut t = sym2_variety(y);
    t.label = format!("Hilb^2({})", y.label);
    for i in 1..n {
        t = t.direct_sum(&y.shift_twist(2 * i, -i));
    }
    t
}

/// The blow-up of `Y x Y` along the diagonal: the Kunneth square plus the
/// exceptional sum over `i` in `[1, n-1]` (codimension of the diagonal is
/// `n`, so for a curve the range is empty and the table is `H(C x C)`).
pub fn phi(y: &CohomologyTable) -> CohomologyTable {
    let n = half_dim(y);
    let mut t = y.tensor(y);
    t.label = format!("Phi({})", y.label);
    for i in 1..n {
        t = t.direct_sum(&y.shift_twist(2 * i, -i));
    }
    t
}

/// The resolution of the secant variety of lines: a `P^1`-bundle over the
/// Hilbert square.
pub fn total_space_p(y: &CohomologyTable) -> CohomologyTable {
    let mut t = proj_bundle(&hilb2(y), 2);
    t.label = format!("P({})", y.label);
    t
}

/// `H^j(P(E)) = sum_(i=0)^(r-1) H^(j-2i)(base)(-i)` for a rank-`r` bundle `E`.
pub fn proj_bundle(base: &CohomologyTable, r: u32) -> CohomologyTable {
    assert!(r >= 1);
    let mut t = CohomologyTable::new(format!("P^{}-bundle({})", r - 1, base.label));
    for i in 0..r as i64 {
        t = t.direct_sum(&base.shift_twist(2 * i, -i));
    }
    t.label = format!("P^{}-bundle({})", r - 1, base.label);
    t
}

/// The resolution `B^k` of the `k`-th secant variety of a genus-`g` curve:
/// a `P^(k-1)`-bundle over `C^(k)`.
pub fn bk_space(g: u64, k: u32) -> CohomologyTable {
    let mut t = proj_bundle(&macdonald_sym_curve(g, k), k);
    t.label = format!("B^{k}(g={g})");
    t
}
