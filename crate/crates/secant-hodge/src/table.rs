//! Cohomology tables (degree-indexed Hodge structures), super symmetric
//! powers, the symmetric-product formula for curves and E-polynomials.

use std::collections::BTreeMap;
use std::fmt;

use crate::hodge::{binomial, multiset, HodgeStructure};

/// Map from cohomological degree to a [`HodgeStructure`], with a free-form
/// provenance label. Mixed in general; "pure" means every degree-`j` entry is
/// pure of weight `j`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CohomologyTable {
    entries: BTreeMap<i64, HodgeStructure>,
    pub label: String,
}

impl CohomologyTable {
    pub fn new(label: impl Into<String>) -> Self {
        Self {
            entries: BTreeMap::new(),
            label: label.into(),
        }
    }

    /// The table of a point.
    pub fn point(label: impl Into<String>) -> Self {
        let mut t = Self::new(label);
        t.add(0, HodgeStructure::point());
        t
    }

    pub fn add(&mut self, degree: i64, structure: HodgeStructure) {
        if structure.is_zero() {
            return;
        }
        let slot = self.entries.entry(degree).or_default();
        *slot = slot.direct_sum(&structure);
    }

    pub fn add_class(&mut self, degree: i64, p: i64, q: i64, mult: u64) {
        self.add(degree, HodgeStructure::from_entries([((p, q), mult)]));
    }

    pub fn entry(&self, degree: i64) -> HodgeStructure {
        self.entries.get(&degree).cloned().unwrap_or_default()
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.entries.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &HodgeStructure)> + '_ {
        self.entries.iter().map(|(&j, h)| (j, h))
    }

    pub fn top_degree(&self) -> i64 {
        self.entries.keys().next_back().copied().unwrap_or(0)
    }

    pub fn dim_in_degree(&self, degree: i64) -> u64 {
        self.entry(degree).dim()
    }

    pub fn total_dim(&self) -> u64 {
        self.entries.values().map(HodgeStructure::dim).sum()
    }

    pub fn betti(&self) -> Vec<u64> {
        (0..=self.top_degree()).map(|j| self.dim_in_degree(j)).collect()
    }

    /// Every degree-`j` entry pure of weight `j`.
    pub fn is_pure(&self) -> bool {
        self.entries.iter().all(|(&j, h)| h.is_pure_of_weight(j))
    }

    /// Alternating sum of Euler characteristics.
    pub fn euler_characteristic(&self) -> i64 {
        self.entries
            .iter()
            .map(|(&j, h)| if j % 2 == 0 { h.dim() as i64 } else { -(h.dim() as i64) })
            .sum()
    }

    /// Shift all degrees by `by` and twist each entry by `twist`.
    pub fn shift_twist(&self, by: i64, twist: i64) -> CohomologyTable {
        let mut out = Self::new(self.label.clone());
        for (j, h) in self.iter() {
            out.add(j + by, h.tate_twist(twist));
        }
        out
    }

    pub fn direct_sum(&self, other: &CohomologyTable) -> CohomologyTable {
        let mut out = self.clone();
        for (j, h) in other.iter() {
            out.add(j, h.clone());
        }
        out
    }

    /// Degreewise Kunneth tensor product.
    pub fn tensor(&self, other: &CohomologyTable) -> CohomologyTable {
        let mut out = Self::new(format!("{} x {}", self.label, other.label));
        for (j1, h1) in self.iter() {
            for (j2, h2) in other.iter() {
                out.add(j1 + j2, h1.tensor(h2));
            }
        }
        out
    }

    /// `Sym^k` of the full graded object in the category of super vector
    /// spaces: symmetric on even-degree classes, exterior on odd-degree
    /// classes, distributed over degrees by total weight. Requires a pure
    /// table; `k = 0` is the point, `k = 1` the identity.
    pub fn super_sym_power(&self, k: u32) -> CohomologyTable {
        assert!(self.is_pure(), "super symmetric power requires a pure table");
        let classes: Vec<(i64, i64, i64, u64)> = self
            .iter()
            .flat_map(|(j, h)| h.iter().map(move |((p, q), m)| (j, p, q, m)))
            .collect();
        let mut out = Self::new(format!("SuperSym^{k}({})", self.label));
        super_distribute(&classes, 0, k, (0, 0, 0), 1, &mut out);
        out
    }

    pub fn e_polynomial(&self) -> EPolynomial {
        let mut e = EPolynomial::zero();
        for (j, h) in self.iter() {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            for ((p, q), m) in h.iter() {
                e.add_term(p, q, sign * m as i64);
            }
        }
        e
    }
}

fn super_distribute(
    classes: &[(i64, i64, i64, u64)],
    idx: usize,
    remaining: u32,
    acc: (i64, i64, i64),
    count: u64,
    out: &mut CohomologyTable,
) {
    if count == 0 {
        return;
    }
    if remaining == 0 {
        out.add_class(acc.0, acc.1, acc.2, count);
        return;
    }
    if idx == classes.len() {
        return;
    }
    let (deg, p, q, m) = classes[idx];
    let even = deg % 2 == 0;
    for j in 0..=remaining as u64 {
        let ways = if even { multiset(m, j) } else { binomial(m, j) };
        if ways == 0 {
            continue;
        }
        super_distribute(
            classes,
            idx + 1,
            remaining - j as u32,
            (acc.0 + deg * j as i64, acc.1 + p * j as i64, acc.2 + q * j as i64),
            count * ways,
            out,
        );
    }
}

impl fmt::Display for CohomologyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}:", self.label)?;
        for (j, h) in self.iter() {
            writeln!(f, "  H^{j} = {h}")?;
        }
        Ok(())
    }
}

/// The pure table of a genus-`g` curve.
pub fn curve_table(g: u64) -> CohomologyTable {
    let mut t = CohomologyTable::new(format!("curve(g={g})"));
    t.add(0, HodgeStructure::point());
    t.add(1, HodgeStructure::curve_h1(g));
    t.add(2, HodgeStructure::tate(1));
    t
}

/// `H^j(C^(k)) = sum over max(0, j-k) <= i <= floor(j/2) of Wedge^(j-2i) H^1(C) (-i)`.
pub fn macdonald_sym_curve(g: u64, k: u32) -> CohomologyTable {
    let h1 = HodgeStructure::curve_h1(g);
    let mut t = CohomologyTable::new(format!("Sym^{k}(curve g={g})"));
    let k = k as i64;
    for j in 0..=2 * k {
        let lo = 0.max(j - k);
        for i in lo..=j / 2 {
            let wedge = h1.wedge_power((j - 2 * i) as u32);
            t.add(j, wedge.tate_twist(-i));
        }
    }
    t
}

/// Weight-graded pieces of the super exterior power `Wedge^m H^*(C)`:
/// weight `m-1` is `Sym^(m-1) H^1`, weight `m` is `Sym^(m-2) H^1 (-1)` plus
/// `Sym^m H^1`, and weight `m+1` is `Sym^(m-1) H^1 (-1)`; the degree-2 factor
/// contributes the `(1,1)` twist.
pub fn super_wedge_curve(g: u64, m: u32) -> Vec<(i64, HodgeStructure)> {
    assert!(m >= 1);
    let h1 = HodgeStructure::curve_h1(g);
    let m_i = m as i64;
    let sym = |n: i64| -> HodgeStructure {
        if n < 0 {
            HodgeStructure::zero()
        } else {
            h1.sym_power(n as u32)
        }
    };
    let mut slices: Vec<(i64, HodgeStructure)> = Vec::new();
    let w_lo = sym(m_i - 1);
    let w_mid = sym(m_i - 2).tate_twist(-1).direct_sum(&sym(m_i));
    let w_hi = sym(m_i - 1).tate_twist(-1);
    for (w, h) in [(m_i - 1, w_lo), (m_i, w_mid), (m_i + 1, w_hi)] {
        if !h.is_zero() {
            slices.push((w, h));
        }
    }
    slices
}

/// Signed, finitely supported two-variable polynomial
/// `E(u, v) = sum_j (-1)^j sum_(p,q) dim Gr u^p v^q`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EPolynomial {
    coefficients: BTreeMap<(i64, i64), i64>,
}

impl EPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut e = Self::zero();
        e.add_term(0, 0, 1);
        e
    }

    pub fn add_term(&mut self, p: i64, q: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.coefficients.entry((p, q)).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.coefficients.remove(&(p, q));
        }
    }

    pub fn coefficient(&self, p: i64, q: i64) -> i64 {
        self.coefficients.get(&(p, q)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((i64, i64), i64)> + '_ {
        self.coefficients.iter().map(|(&pq, &c)| (pq, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn add(&self, other: &EPolynomial) -> EPolynomial {
        let mut out = self.clone();
        for ((p, q), c) in other.iter() {
            out.add_term(p, q, c);
        }
        out
    }

    pub fn sub(&self, other: &EPolynomial) -> EPolynomial {
        let mut out = self.clone();
        for ((p, q), c) in other.iter() {
            out.add_term(p, q, -c);
        }
        out
    }

    pub fn mul(&self, other: &EPolynomial) -> EPolynomial {
        let mut out = EPolynomial::zero();
        for ((p1, q1), c1) in self.iter() {
            for ((p2, q2), c2) in other.iter() {
                out.add_term(p1 + p2, q1 + q2, c1 * c2);
            }
        }
        out
    }
}

impl From<&HodgeStructure> for EPolynomial {
    fn from(h: &HodgeStructure) -> Self {
        let mut e = EPolynomial::zero();
        for ((p, q), m) in h.iter() {
            e.add_term(p, q, m as i64);
        }
        e
    }
}

impl fmt::Display for EPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((p, q), c) in self.iter() {
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if c < 0 { " - " } else { " + " })?;
            }
            let a = c.unsigned_abs();
            let mono = match (p, q) {
                (0, 0) => String::new(),
                (p, 0) => format!("u^{p}"),
                (0, q) => format!("v^{q}"),
                (p, q) => format!("u^{p}v^{q}"),
            };
            match (a, mono.is_empty()) {
                (1, true) => write!(f, "1")?,
                (1, false) => write!(f, "{mono}")?,
                (a, true) => write!(f, "{a}")?,
                (a, false) => write!(f, "{a}{mono}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn super_sym_identity_and_point() {
        let c = curve_table(2);
        assert_eq!(c.super_sym_power(1).entries, c.entries);
        let pt = c.super_sym_power(0);
        assert_eq!(pt.total_dim(), 1);
        assert_eq!(pt.entry(0), HodgeStructure::point());
    }

    #[test]
    fn super_sym_square_elliptic() {
        // Sym^2 of a genus-1 curve: S_2-invariants of H(C x C)
        let t = curve_table(1).super_sym_power(2);
        assert_eq!(t.betti(), vec![1, 2, 2, 2, 1]);
        assert_eq!(t.entry(2), HodgeStructure::from_entries([((1, 1), 2)]));
        assert!(t.is_pure());
    }

    #[test]
    fn super_sym_cube_of_p1_is_p3() {
        let t = curve_table(0).super_sym_power(3);
        for i in 0..=3 {
            assert_eq!(t.entry(2 * i), HodgeStructure::tate(i));
            assert_eq!(t.entry(2 * i + 1), HodgeStructure::zero());
        }
    }

    /// Oracle: raw monomial enumeration with parity rules (odd classes are
    /// exterior, even classes symmetric).
    fn super_sym_brute(t: &CohomologyTable, k: u32) -> CohomologyTable {
        let mut basis: Vec<(i64, i64, i64)> = Vec::new();
        for (j, h) in t.iter() {
            for ((p, q), m) in h.iter() {
                for _ in 0..m {
                    basis.push((j, p, q));
                }
            }
        }
        let mut out = CohomologyTable::new("brute");
        fn rec(
            basis: &[(i64, i64, i64)],
            start: usize,
            remaining: u32,
            acc: (i64, i64, i64),
            out: &mut CohomologyTable,
        ) {
            if remaining == 0 {
                out.add_class(acc.0, acc.1, acc.2, 1);
                return;
            }
            for i in start..basis.len() {
                let (j, p, q) = basis[i];
                // an odd generator may appear at most once
                let next = if j % 2 == 0 { i } else { i + 1 };
                rec(basis, next, remaining - 1, (acc.0 + j, acc.1 + p, acc.2 + q), out);
            }
        }
        rec(&basis, 0, k, (0, 0, 0), &mut out);
        out
    }

    #[test]
    fn super_sym_against_monomial_enumeration() {
        for g in 0..=2u64 {
            for k in 0..=4u32 {
                let t = curve_table(g);
                assert_eq!(t.super_sym_power(k).entries, super_sym_brute(&t, k).entries);
            }
        }
    }

    #[test]
    fn macdonald_matches_super_sym() {
        for g in 0..=4u64 {
            for k in 1..=6u32 {
                let direct = macdonald_sym_curve(g, k);
                let invariants = curve_table(g).super_sym_power(k);
                assert_eq!(direct.entries, invariants.entries, "g={g} k={k}");
            }
        }
    }

    #[test]
    fn macdonald_small_cases() {
        assert_eq!(macdonald_sym_curve(3, 1).entries, curve_table(3).entries);
        // g=2, k=3, j=3: Wedge^3 H^1 + H^1(-1), dimension C(4,3) + 4 = 8
        assert_eq!(macdonald_sym_curve(2, 3).dim_in_degree(3), 8);
    }

    /// Oracle: raw super exterior power (even classes exterior, odd symmetric).
    fn super_wedge_brute(g: u64, m: u32) -> HodgeStructure {
        let t = curve_table(g);
        let mut basis: Vec<(i64, i64, i64)> = Vec::new();
        for (j, h) in t.iter() {
            for ((p, q), mult) in h.iter() {
                for _ in 0..mult {
                    basis.push((j, p, q));
                }
            }
        }
        let mut out = HodgeStructure::zero();
        fn rec(
            basis: &[(i64, i64, i64)],
            start: usize,
            remaining: u32,
            acc: (i64, i64),
            out: &mut HodgeStructure,
        ) {
            if remaining == 0 {
                out.add_class(acc.0, acc.1, 1);
                return;
            }
            for i in start..basis.len() {
                let (j, p, q) = basis[i];
                // in the exterior power the parity rule flips
                let next = if j % 2 == 0 { i + 1 } else { i };
                rec(basis, next, remaining - 1, (acc.0 + p, acc.1 + q), out);
            }
        }
        rec(&basis, 0, m, (0, 0), &mut out);
        out
    }

    #[test]
    fn super_wedge_slices() {
        // g=1, m=2: weights 1/2/3 of dimensions 2/4/2
        let slices = super_wedge_curve(1, 2);
        let dims: Vec<(i64, u64)> = slices.iter().map(|(w, h)| (*w, h.dim())).collect();
        assert_eq!(dims, vec![(1, 2), (2, 4), (3, 2)]);
        // g=0, m=2: only the weight-2 slice, H^0 wedge H^2
        let slices = super_wedge_curve(0, 2);
        assert_eq!(slices.len(), 1);
        assert_eq!(slices[0], (2, HodgeStructure::tate(1)));
        // m=1 is the curve itself, graded by weight
        let slices = super_wedge_curve(2, 1);
        let dims: Vec<(i64, u64)> = slices.iter().map(|(w, h)| (*w, h.dim())).collect();
        assert_eq!(dims, vec![(0, 1), (1, 4), (2, 1)]);
    }

    #[test]
    fn super_wedge_against_brute_force() {
        for g in 0..=2u64 {
            for m in 1..=5u32 {
                let mut total = HodgeStructure::zero();
                for (w, h) in super_wedge_curve(g, m) {
                    assert!(h.is_pure_of_weight(w));
                    total = total.direct_sum(&h);
                }
                assert_eq!(total, super_wedge_brute(g, m), "g={g} m={m}");
            }
        }
    }

    #[test]
    fn e_polynomial_examples() {
        // P^1: 1 + uv
        let mut p1 = EPolynomial::one();
        p1.add_term(1, 1, 1);
        assert_eq!(curve_table(0).e_polynomial(), p1);
        // genus g: 1 - g u - g v + uv
        for g in 1..4 {
            let e = curve_table(g as u64).e_polynomial();
            assert_eq!(e.coefficient(1, 0), -g);
            assert_eq!(e.coefficient(0, 1), -g);
            assert_eq!(e.coefficient(0, 0), 1);
            assert_eq!(e.coefficient(1, 1), 1);
        }
        // Sym^2 of a genus-1 curve: 1 - u - v + 2uv - u^2 v - u v^2 + u^2 v^2
        let e = curve_table(1).super_sym_power(2).e_polynomial();
        let mut expect = EPolynomial::zero();
        for (p, q, c) in [
            (0, 0, 1),
            (1, 0, -1),
            (0, 1, -1),
            (1, 1, 2),
            (2, 1, -1),
            (1, 2, -1),
            (2, 2, 1),
        ] {
            expect.add_term(p, q, c);
        }
        assert_eq!(e, expect);
        assert_eq!(
            e.to_string(),
            "1 - v^1 - u^1 + 2u^1v^1 - u^1v^2 - u^2v^1 + u^2v^2"
        );
    }

    #[test]
    fn e_polynomial_ring_ops() {
        let a = curve_table(1).e_polynomial();
        let b = curve_table(2).e_polynomial();
        assert_eq!(a.sub(&a), EPolynomial::zero());
        assert_eq!(a.mul(&EPolynomial::one()), a);
        assert_eq!(a.mul(&b), b.mul(&a));
        assert_eq!(curve_table(1).tensor(&curve_table(2)).e_polynomial(), a.mul(&b));
    }
}
