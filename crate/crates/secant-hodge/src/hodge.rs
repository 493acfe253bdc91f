//! Exact bigraded dimension algebra for (mixed) Hodge structures.
//!
//! A [`HodgeStructure`] is a finitely supported multiplicity table over
//! bidegrees `(p, q)`: entry `(p, q) -> m` records `dim Gr_F^p Gr^W_{p+q} = m`.
//! No morphisms, polarizations or lattices are modeled; every operation is a
//! statement about graded dimensions.
//!
//! Sign convention for Tate twists: `Q(-1)` sits at bidegree `(1, 1)`, so
//! `tate_twist(h, a)` moves an entry at `(p, q)` to `(p - a, q - a)` and
//! weights increase under negative twists.

use std::collections::BTreeMap;
use std::fmt;

/// Finitely supported bigraded multiplicity table. Zero entries are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HodgeStructure {
    classes: BTreeMap<(i64, i64), u64>,
}

impl HodgeStructure {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit structure `Q` at bidegree `(0, 0)`.
    pub fn point() -> Self {
        Self::from_entries([((0, 0), 1)])
    }

    /// The Tate structure `Q(-a)` at bidegree `(a, a)`.
    pub fn tate(a: i64) -> Self {
        Self::from_entries([((a, a), 1)])
    }

    /// `H^1` of a genus-`g` curve: `g` classes at `(1, 0)` and `g` at `(0, 1)`.
    pub fn curve_h1(g: u64) -> Self {
        if g == 0 {
            return Self::zero();
        }
        Self::from_entries([((1, 0), g), ((0, 1), g)])
    }

    pub fn from_entries<I: IntoIterator<Item = ((i64, i64), u64)>>(entries: I) -> Self {
        let mut h = Self::zero();
        for ((p, q), m) in entries {
            h.add_class(p, q, m);
        }
        h
    }

    pub fn add_class(&mut self, p: i64, q: i64, mult: u64) {
        if mult == 0 {
            return;
        }
        *self.classes.entry((p, q)).or_insert(0) += mult;
    }

    pub fn multiplicity(&self, p: i64, q: i64) -> u64 {
        self.classes.get(&(p, q)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((i64, i64), u64)> + '_ {
        self.classes.iter().map(|(&pq, &m)| (pq, m))
    }

    pub fn is_zero(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn dim(&self) -> u64 {
        self.classes.values().sum()
    }

    /// `true` when every stored class satisfies `p + q = w`.
    pub fn is_pure_of_weight(&self, w: i64) -> bool {
        self.classes.keys().all(|&(p, q)| p + q == w)
    }

    /// The sub-table of classes of weight `w`.
    pub fn weight_piece(&self, w: i64) -> HodgeStructure {
        Self::from_entries(self.iter().filter(|&((p, q), _)| p + q == w))
    }

    /// Sorted list of weights carrying a nonzero class.
    pub fn weights(&self) -> Vec<i64> {
        let mut ws: Vec<i64> = self.classes.keys().map(|&(p, q)| p + q).collect();
        ws.sort_unstable();
        ws.dedup();
        ws
    }

    /// Minimal `p` with a nonzero entry, if any.
    pub fn min_p(&self) -> Option<i64> {
        self.classes.keys().map(|&(p, _)| p).min()
    }

    /// Entry at `(p, q)` moves to `(p - a, q - a)`; `tate_twist(h, -1)` is `h(-1)`.
    pub fn tate_twist(&self, a: i64) -> HodgeStructure {
        Self::from_entries(self.iter().map(|((p, q), m)| ((p - a, q - a), m)))
    }

    pub fn direct_sum(&self, other: &HodgeStructure) -> HodgeStructure {
        let mut out = self.clone();
        for ((p, q), m) in other.iter() {
            out.add_class(p, q, m);
        }
        out
    }

    pub fn tensor(&self, other: &HodgeStructure) -> HodgeStructure {
        let mut out = Self::zero();
        for ((p1, q1), m1) in self.iter() {
            for ((p2, q2), m2) in other.iter() {
                out.add_class(p1 + p2, q1 + q2, m1 * m2);
            }
        }
        out
    }

    pub fn dual(&self) -> HodgeStructure {
        Self::from_entries(self.iter().map(|((p, q), m)| ((-p, -q), m)))
    }

    /// Ordinary (non-super) symmetric square.
    pub fn sym2(&self) -> HodgeStructure {
        self.square(true)
    }

    /// Ordinary (non-super) exterior square.
    pub fn wedge2(&self) -> HodgeStructure {
        self.square(false)
    }

    fn square(&self, symmetric: bool) -> HodgeStructure {
        let entries: Vec<_> = self.iter().collect();
        let mut out = Self::zero();
        for (i, &((p1, q1), m1)) in entries.iter().enumerate() {
            let diag = if symmetric {
                m1 * (m1 + 1) / 2
            } else {
                m1 * (m1 - 1) / 2
            };
            out.add_class(2 * p1, 2 * q1, diag);
            for &((p2, q2), m2) in &entries[i + 1..] {
                out.add_class(p1 + p2, q1 + q2, m1 * m2);
            }
        }
        out
    }

    /// Ordinary `Sym^n`, distributing over the bidegree classes: a pile of
    /// multiplicity `m` at one bidegree contributes `C(m + j - 1, j)` copies
    /// of its `j`-fold sum.
    pub fn sym_power(&self, n: u32) -> HodgeStructure {
        self.graded_power(n, true)
    }

    /// Ordinary `Wedge^n`; a pile of multiplicity `m` contributes `C(m, j)`.
    pub fn wedge_power(&self, n: u32) -> HodgeStructure {
        self.graded_power(n, false)
    }

    fn graded_power(&self, n: u32, symmetric: bool) -> HodgeStructure {
        let classes: Vec<_> = self.iter().collect();
        let mut out = Self::zero();
        distribute(&classes, 0, n, (0, 0), 1, symmetric, &mut out);
        out
    }
}

fn distribute(
    classes: &[((i64, i64), u64)],
    idx: usize,
    remaining: u32,
    acc: (i64, i64),
    count: u64,
    symmetric: bool,
    out: &mut HodgeStructure,
) {
    if count == 0 {
        return;
    }
    if remaining == 0 {
        out.add_class(acc.0, acc.1, count);
        return;
    }
    if idx == classes.len() {
        return;
    }
    let ((p, q), m) = classes[idx];
    let max_here = if symmetric { remaining as u64 } else { remaining.min(m as u32) as u64 };
    for j in 0..=max_here {
        let ways = if symmetric { multiset(m, j) } else { binomial(m, j) };
        distribute(
            classes,
            idx + 1,
            remaining - j as u32,
            (acc.0 + p * j as i64, acc.1 + q * j as i64),
            count * ways,
            symmetric,
            out,
        );
    }
}

/// `C(n, k)` as `u64`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Number of multisets of size `k` from `n` symbols, `C(n + k - 1, k)`.
pub fn multiset(n: u64, k: u64) -> u64 {
    if k == 0 {
        return 1;
    }
    if n == 0 {
        return 0;
    }
    binomial(n + k - 1, k)
}

impl fmt::Display for HodgeStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((p, q), m) in self.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m == 1 {
                write!(f, "({p},{q})")?;
            } else {
                write!(f, "{m}*({p},{q})")?;
            }
        }
        Ok(())
    }
}

/// A hook shape `(a, 1^b)`: arm length `a >= 1` and leg length `b >= 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HookPartition {
    pub arm: u32,
    pub leg: u32,
}

impl HookPartition {
    pub fn new(arm: u32, leg: u32) -> Self {
        assert!(arm >= 1, "hook arm must be at least 1");
        Self { arm, leg }
    }

    /// `Sym^n` as the hook `(n)`.
    pub fn row(n: u32) -> Self {
        Self::new(n, 0)
    }

    /// `Wedge^n` as the hook `(1, 1^{n-1})`; requires `n >= 1`.
    pub fn column(n: u32) -> Self {
        Self::new(1, n - 1)
    }

    pub fn size(&self) -> u32 {
        self.arm + self.leg
    }

    /// Closed-form dimension of the hook Schur functor of an `N`-dimensional
    /// space: `C(N + a - 1, a + b) * C(a + b - 1, b)`.
    pub fn dim_formula(&self, space_dim: u64) -> u64 {
        let (a, b) = (self.arm as u64, self.leg as u64);
        binomial(space_dim + a - 1, a + b) * binomial(a + b - 1, b)
    }
}

/// Bigraded table of the hook Schur functor `S_(a,1^b)` applied to `H^1` of a
/// genus-`g` curve, computed by enumerating semistandard tableaux.
///
/// The alphabet is `{1..2g}` with `1..g` marking the `(1,0)` part and
/// `g+1..2g` the `(0,1)` part; a tableau with `p` low and `q` high entries
/// contributes one class at `(p, q)`. A hook tableau is a choice of corner
/// value `r`, a weakly increasing row tail in `[r, 2g]` and a strictly
/// increasing column tail in `(r, 2g]`; the row and column tails are
/// enumerated independently per corner and combined by low-count histograms.
pub fn schur_hook(hook: HookPartition, g: u64) -> HodgeStructure {
    let n = 2 * g;
    let (a, b) = (hook.arm as u64, hook.leg as u64);
    if n == 0 || b + 1 > n {
        return HodgeStructure::zero();
    }
    let mut out = HodgeStructure::zero();
    for corner in 1..=n {
        let row_hist = low_histogram_multisets(corner, n, g, a - 1);
        let col_hist = low_histogram_subsets(corner + 1, n, g, b);
        let corner_low = u64::from(corner <= g);
        for (lo_row, ways_row) in row_hist.iter().enumerate() {
            if *ways_row == 0 {
                continue;
            }
            for (lo_col, ways_col) in col_hist.iter().enumerate() {
                if *ways_col == 0 {
                    continue;
                }
                let p = corner_low + lo_row as u64 + lo_col as u64;
                let q = (1 - corner_low) + (a - 1 - lo_row as u64) + (b - lo_col as u64);
                out.add_class(p as i64, q as i64, ways_row * ways_col);
            }
        }
    }
    out
}

/// Histogram over "number of entries <= g" of all weakly increasing
/// `len`-tuples with values in `[lo, hi]`, enumerated by odometer.
fn low_histogram_multisets(lo: u64, hi: u64, g: u64, len: u64) -> Vec<u64> {
    let mut hist = vec![0u64; len as usize + 1];
    if len == 0 {
        hist[0] = 1;
        return hist;
    }
    if lo > hi {
        return hist;
    }
    let len = len as usize;
    let mut tuple = vec![lo; len];
    let mut lows = if lo <= g { len as u64 } else { 0 };
    loop {
        hist[lows as usize] += 1;
        // advance the odometer: bump the last slot that can still grow,
        // then reset everything after it to the bumped value
        let mut i = len;
        loop {
            if i == 0 {
                return hist;
            }
            i -= 1;
            if tuple[i] < hi {
                break;
            }
        }
        for &value in &tuple[i..] {
            if value <= g {
                lows -= 1;
            }
        }
        let v = tuple[i] + 1;
        for slot in &mut tuple[i..] {
            *slot = v;
            if v <= g {
                lows += 1;
            }
        }
    }
}

/// Same histogram for strictly increasing `len`-tuples in `[lo, hi]`.
fn low_histogram_subsets(lo: u64, hi: u64, g: u64, len: u64) -> Vec<u64> {
    let mut hist = vec![0u64; len as usize + 1];
    if len == 0 {
        hist[0] = 1;
        return hist;
    }
    if lo > hi || hi - lo + 1 < len {
        return hist;
    }
    let len = len as usize;
    let mut tuple: Vec<u64> = (0..len as u64).map(|i| lo + i).collect();
    loop {
        let lows = tuple.iter().filter(|&&v| v <= g).count();
        hist[lows] += 1;
        let mut i = len;
        loop {
            if i == 0 {
                return hist;
            }
            i -= 1;
            if tuple[i] < hi - (len - 1 - i) as u64 {
                break;
            }
        }
        tuple[i] += 1;
        for j in i + 1..len {
            tuple[j] = tuple[j - 1] + 1;
        }
    }
}
