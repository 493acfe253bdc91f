//! Independent verification identities: E-polynomial scissor relations from
//! the discriminant squares, the semismall decomposition of the curve
//! resolutions, the decomposition identity for the line resolution, and
//! Poincare-duality / hard-Lefschetz table checkers.

use crate::curves::{ih_summands, sing_cohomology_higher, SecantCurveContext};
use crate::diamond::HodgeDiamond;
use crate::hodge::HodgeStructure;
use crate::lines::{ih_secant_table, sing_cohomology_secant, SecantLinesContext};
use crate::table::{curve_table, macdonald_sym_curve, CohomologyTable, EPolynomial};
use crate::varieties::{bk_space, blowup_point, from_diamond, phi, total_space_p};

/// `E(Sigma) = E(Y) + E(P) - E(Phi)`: the two sides computed independently
/// (closed-form table vs. builders). Returns the difference polynomial.
pub fn scissor_check_lines(diamond: &HodgeDiamond) -> (bool, EPolynomial) {
    let ctx = SecantLinesContext::new(diamond.clone());
    let lhs = sing_cohomology_secant(&ctx).e_polynomial();
    let y = from_diamond(diamond);
    let rhs = y
        .e_polynomial()
        .add(&total_space_p(&y).e_polynomial())
        .sub(&phi(&y).e_polynomial());
    let residual = lhs.sub(&rhs);
    (residual.is_zero(), residual)
}

fn sigma_e_polynomial(g: u64, order: u32) -> EPolynomial {
    if order <= 1 {
        return curve_table(g).e_polynomial();
    }
    let ctx = SecantCurveContext::new(g, order).expect("order >= 2");
    sing_cohomology_higher(&ctx).e_polynomial()
}

/// Both E-polynomial recursions for the curve stratifications:
/// the open-stratum telescope and the blow-down identity
/// `E(sigma_k) = E(B^k) - E(Z^k_(k-1)) + E(sigma_(k-1))` with
/// `E(Z^k_(k-1)) = sum_i E(C^(k-i)) E(U_i)`.
pub fn scissor_check_curves(g: u64, k: u32) -> (bool, EPolynomial) {
    let stratum = |i: u32| -> EPolynomial {
        let closed = sigma_e_polynomial(g, i);
        if i == 1 {
            closed
        } else {
            closed.sub(&sigma_e_polynomial(g, i - 1))
        }
    };

    let mut telescope = EPolynomial::zero();
    for i in 1..=k {
        telescope = telescope.add(&stratum(i));
    }
    let residual_telescope = sigma_e_polynomial(g, k).sub(&telescope);

    let mut z = EPolynomial::zero();
    for i in 1..k {
        z = z.add(&macdonald_sym_curve(g, k - i).e_polynomial().mul(&stratum(i)));
    }
    let rhs = bk_space(g, k)
        .e_polynomial()
        .sub(&z)
        .add(&sigma_e_polynomial(g, k - 1));
    let residual_blowdown = sigma_e_polynomial(g, k).sub(&rhs);

    let residual = residual_telescope.add(&residual_blowdown);
    (
        residual_telescope.is_zero() && residual_blowdown.is_zero(),
        residual,
    )
}

fn ih_table_curve(g: u64, order: u32) -> CohomologyTable {
    let d = 2 * order as i64 - 1;
    let mut t = CohomologyTable::new(format!("IH(sigma_{order}), g={g}"));
    let h1 = HodgeStructure::curve_h1(g);
    for p in 0..=2 * d {
        for (m, tw) in ih_summands(g, order, p) {
            t.add(p, h1.wedge_power(m).tate_twist(-tw));
        }
    }
    t
}

/// Semismall identity for the resolution of `sigma_k`:
/// `H^j(B^k) = sum over l <= k of IH^(j - 2(k-l))(sigma_l)(l - k)`.
pub fn semismall_check(g: u64, k: u32) -> bool {
    let lhs = bk_space(g, k);
    let mut rhs = CohomologyTable::new("decomposition");
    for l in 1..=k {
        rhs = rhs.direct_sum(&ih_table_curve(g, l).shift_twist(
            2 * (k - l) as i64,
            (l as i64) - (k as i64),
        ));
    }
    table_eq(&lhs, &rhs)
}

/// Decomposition identity for the resolution of the secant variety of lines:
/// `H^j(P)` equals `IH^j(Sigma)` plus the two trivial-monodromy local-system
/// sums, with `H^a` of the fiber system `V^m` expanded as
/// `H^m(Bl_y Y) (x) H^(a+n)(Y)`.
pub fn decomposition_check_lines(diamond: &HodgeDiamond) -> bool {
    let n = diamond.dim() as i64;
    let ctx = SecantLinesContext::new(diamond.clone());
    let y = from_diamond(diamond);
    let bl = blowup_point(&y);
    let lhs = total_space_p(&y);
    let mut rhs = ih_secant_table(&ctx);
    for l in 0..=(n - 1) {
        for j in 0..=lhs.top_degree() {
            rhs.add(j, bl.entry(n + 1 + l).tensor(&y.entry(j - n - 1 - l)));
        }
    }
    for l in 0..=(n - 2) {
        for j in 0..=lhs.top_degree() {
            rhs.add(
                j,
                bl.entry(l).tensor(&y.entry(j - 2 - l)).tate_twist(-1),
            );
        }
    }
    table_eq(&lhs, &rhs)
}

fn table_eq(a: &CohomologyTable, b: &CohomologyTable) -> bool {
    let top = a.top_degree().max(b.top_degree());
    (0..=top).all(|j| a.entry(j) == b.entry(j))
}

/// Poincare duality and hard Lefschetz for a pure table of dimension `d`:
/// the degree `d + j` entry must be the `(-j)`-twist of the degree `d - j`
/// entry, and entrywise multiplicities must grow toward the middle after one
/// Tate twist. Failures are reported as `(j, p, q)` strings.
pub fn duality_lefschetz_check(table: &CohomologyTable, d: i64) -> (bool, Vec<String>) {
    let mut failures = Vec::new();
    if !table.is_pure() {
        failures.push("table is not pure".to_string());
    }
    for j in 0..=d {
        let expected = table.entry(d - j).tate_twist(-j);
        let actual = table.entry(d + j);
        if actual != expected {
            let offending = expected
                .iter()
                .chain(actual.iter())
                .map(|((p, q), _)| (p, q))
                .find(|&(p, q)| actual.multiplicity(p, q) != expected.multiplicity(p, q));
            match offending {
                Some((p, q)) => failures.push(format!("PD fails at degree {}, class ({p},{q})", d + j)),
                None => failures.push(format!("PD fails at degree {}", d + j)),
            }
        }
    }
    for j in 0..=(d - 2) {
        let lifted = table.entry(j).tate_twist(-1);
        for ((p, q), m) in lifted.iter() {
            if table.entry(j + 2).multiplicity(p, q) < m {
                failures.push(format!("HL fails from degree {j}, class ({p},{q})"));
            }
        }
    }
    (failures.is_empty(), failures)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diamond::{
        abelian_surface_diamond, curve_diamond, elliptic_times_p2_diamond, k3_diamond,
        projective_space_diamond,
    };

    #[test]
    fn scissor_lines_examples() {
        for d in [
            projective_space_diamond(1),
            projective_space_diamond(2),
            k3_diamond(),
            abelian_surface_diamond(),
            curve_diamond(2),
            elliptic_times_p2_diamond(),
        ] {
            let (ok, residual) = scissor_check_lines(&d);
            assert!(ok, "residual {residual} for {d:?}");
        }
    }

    #[test]
    fn scissor_curves_examples() {
        let (ok, residual) = scissor_check_curves(2, 4);
        assert!(ok, "residual {residual}");
        let (ok, _) = scissor_check_curves(0, 3);
        assert!(ok);
    }

    #[test]
    fn semismall_examples() {
        assert!(semismall_check(1, 3));
        assert!(semismall_check(0, 4));
        assert!(semismall_check(2, 2));
    }

    #[test]
    fn decomposition_lines_examples() {
        assert!(decomposition_check_lines(&projective_space_diamond(2)));
        assert!(decomposition_check_lines(&curve_diamond(2)));
        assert!(decomposition_check_lines(&k3_diamond()));
    }

    #[test]
    fn duality_checker_positive_and_negative() {
        let ctx = SecantLinesContext::new(projective_space_diamond(2));
        let table = ih_secant_table(&ctx);
        let (ok, failures) = duality_lefschetz_check(&table, 5);
        assert!(ok, "{failures:?}");

        // negative control: drop one class
        let mut corrupted = CohomologyTable::new("corrupted");
        for (j, h) in table.iter() {
            if j == 8 {
                let mut smaller = HodgeStructure::zero();
                for ((p, q), m) in h.iter() {
                    smaller.add_class(p, q, m - 1);
                }
                corrupted.add(j, smaller);
            } else {
                corrupted.add(j, h.clone());
            }
        }
        let (ok, failures) = duality_lefschetz_check(&corrupted, 5);
        assert!(!ok);
        assert!(failures.iter().any(|f| f.contains("degree 8")), "{failures:?}");

        // a point is self-dual
        let (ok, _) = duality_lefschetz_check(&CohomologyTable::point("pt"), 0);
        assert!(ok);
    }
}
