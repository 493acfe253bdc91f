//! Validated Hodge diamonds of smooth projective varieties and their
//! Lefschetz-primitive decompositions.

use thiserror::Error;

use crate::ext_int::ExtInt;
use crate::hodge::HodgeStructure;

/// Hodge numbers `h[p][q]` of a connected smooth projective variety of
/// dimension `n`, validated on construction. Every downstream formula
/// silently assumes these symmetries, so validation is strict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeDiamond {
    dim: usize,
    h: Vec<Vec<u64>>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiamondError {
    #[error("hodge matrix must be ({0}+1)x({0}+1) for dimension {0}")]
    BadShape(usize),
    #[error("connectedness requires h[0][0] = 1, found {0}")]
    Connectedness(u64),
    #[error("conjugation symmetry violated: h[{p}][{q}] = {lhs} but h[{q}][{p}] = {rhs}")]
    ConjugationSymmetry { p: usize, q: usize, lhs: u64, rhs: u64 },
    #[error("Serre symmetry violated: h[{p}][{q}] = {lhs} but h[n-{p}][n-{q}] = {rhs}")]
    SerreSymmetry { p: usize, q: usize, lhs: u64, rhs: u64 },
    #[error("Lefschetz monotonicity violated: h[{p}][{q}] = {lhs} > h[{}][{}] = {rhs}", p + 1, q + 1)]
    LefschetzMonotonicity { p: usize, q: usize, lhs: u64, rhs: u64 },
}

impl HodgeDiamond {
    pub fn new(dim: usize, h: Vec<Vec<u64>>) -> Result<Self, DiamondError> {
        let n = dim;
        if h.len() != n + 1 || h.iter().any(|row| row.len() != n + 1) {
            return Err(DiamondError::BadShape(n));
        }
        if h[0][0] != 1 {
            return Err(DiamondError::Connectedness(h[0][0]));
        }
        for p in 0..=n {
            for q in 0..=n {
                if h[p][q] != h[q][p] {
                    return Err(DiamondError::ConjugationSymmetry {
                        p,
                        q,
                        lhs: h[p][q],
                        rhs: h[q][p],
                    });
                }
                if h[p][q] != h[n - p][n - q] {
                    return Err(DiamondError::SerreSymmetry {
                        p,
                        q,
                        lhs: h[p][q],
                        rhs: h[n - p][n - q],
                    });
                }
                if p + q < n && h[p][q] > h[p + 1][q + 1] {
                    return Err(DiamondError::LefschetzMonotonicity {
                        p,
                        q,
                        lhs: h[p][q],
                        rhs: h[p + 1][q + 1],
                    });
                }
            }
        }
        Ok(Self { dim, h })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.h
    }

    /// `h^{p,q}`, zero outside the matrix.
    pub fn hodge_number(&self, p: i64, q: i64) -> u64 {
        if p < 0 || q < 0 || p > self.dim as i64 || q > self.dim as i64 {
            return 0;
        }
        self.h[p as usize][q as usize]
    }

    /// `h^{0,i} = dim H^i(O_Y)`.
    pub fn h0i(&self, i: usize) -> u64 {
        self.hodge_number(0, i as i64)
    }

    pub fn betti(&self, j: i64) -> u64 {
        (0..=self.dim as i64)
            .map(|p| self.hodge_number(p, j - p))
            .sum()
    }

    /// `H^j(Y)` as a pure weight-`j` structure.
    pub fn cohomology(&self, j: i64) -> HodgeStructure {
        let mut h = HodgeStructure::zero();
        for p in 0..=self.dim as i64 {
            h.add_class(p, j - p, self.hodge_number(p, j - p));
        }
        h
    }

    /// Primitive piece `P_l` with entries `h[p][q] - h[p-1][q-1]` on the
    /// weight-`l` antidiagonal; zero for `l > dim` or `l < 0`.
    pub fn primitive(&self, l: i64) -> HodgeStructure {
        let n = self.dim as i64;
        if l < 0 || l > n {
            return HodgeStructure::zero();
        }
        let mut out = HodgeStructure::zero();
        for p in 0..=l {
            let q = l - p;
            let below = self.hodge_number(p - 1, q - 1);
            let here = self.hodge_number(p, q);
            // monotonicity invariant makes the difference non-negative
            out.add_class(p, q, here - below);
        }
        out
    }

    /// All primitive pieces `P_0 .. P_n`.
    pub fn primitive_decomposition(&self) -> Vec<HodgeStructure> {
        (0..=self.dim as i64).map(|l| self.primitive(l)).collect()
    }

    /// Minimal `p` with `P_l` nonzero at `(p, l-p)`; `+inf` when `P_l = 0`.
    pub fn mu_prim(&self, l: i64) -> ExtInt {
        match self.primitive(l).min_p() {
            Some(p) => ExtInt::Int(p),
            None => ExtInt::PosInf,
        }
    }

    pub fn is_projective_line(&self) -> bool {
        self.dim == 1 && self.h0i(1) == 0
    }
}

/// Diamond of `P^n`.
pub fn projective_space_diamond(n: usize) -> HodgeDiamond {
    let mut h = vec![vec![0u64; n + 1]; n + 1];
    for (i, row) in h.iter_mut().enumerate() {
        row[i] = 1;
    }
    HodgeDiamond::new(n, h).expect("projective space diamond is valid")
}

/// Diamond of a genus-`g` curve.
pub fn curve_diamond(g: u64) -> HodgeDiamond {
    HodgeDiamond::new(1, vec![vec![1, g], vec![g, 1]]).expect("curve diamond is valid")
}

/// K3-type surface: `h^{2,0} = 1`, `h^{1,1} = 20`.
pub fn k3_diamond() -> HodgeDiamond {
    HodgeDiamond::new(
        2,
        vec![vec![1, 0, 1], vec![0, 20, 0], vec![1, 0, 1]],
    )
    .expect("K3 diamond is valid")
}

/// Abelian-surface-type diamond: `h^{1,0} = 2`, `h^{2,0} = 1`, `h^{1,1} = 4`.
pub fn abelian_surface_diamond() -> HodgeDiamond {
    HodgeDiamond::new(
        2,
        vec![vec![1, 2, 1], vec![2, 4, 2], vec![1, 2, 1]],
    )
    .expect("abelian surface diamond is valid")
}

/// Three-fold with `h^{0,1} = 1`: the product of an elliptic curve and `P^2`.
pub fn elliptic_times_p2_diamond() -> HodgeDiamond {
    HodgeDiamond::new(
        3,
        vec![
            vec![1, 1, 0, 0],
            vec![1, 2, 1, 0],
            vec![0, 1, 2, 1],
            vec![0, 0, 1, 1],
        ],
    )
    .expect("E x P^2 diamond is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hodge::HodgeStructure;

    #[test]
    fn validation_errors_name_the_symmetry() {
        let bad = HodgeDiamond::new(1, vec![vec![1, 0], vec![1, 1]]);
        assert!(matches!(bad, Err(DiamondError::ConjugationSymmetry { .. })));
        let bad = HodgeDiamond::new(1, vec![vec![2, 1], vec![1, 2]]);
        assert!(matches!(bad, Err(DiamondError::Connectedness(2))));
        let bad = HodgeDiamond::new(2, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 2]]);
        assert!(matches!(bad, Err(DiamondError::SerreSymmetry { .. })));
        // h^{0,0} = 1 > h^{1,1} = 0 breaks monotonicity
        let bad = HodgeDiamond::new(2, vec![vec![1, 0, 1], vec![0, 0, 0], vec![1, 0, 1]]);
        assert!(matches!(bad, Err(DiamondError::LefschetzMonotonicity { .. })));
        let bad = HodgeDiamond::new(2, vec![vec![1, 0], vec![0, 1]]);
        assert!(matches!(bad, Err(DiamondError::BadShape(2))));
    }

    #[test]
    fn primitive_decomposition_examples() {
        let p2 = projective_space_diamond(2);
        assert_eq!(p2.primitive(0), HodgeStructure::point());
        assert!(p2.primitive(1).is_zero());
        assert!(p2.primitive(2).is_zero());

        let k3 = k3_diamond();
        assert_eq!(
            k3.primitive(2),
            HodgeStructure::from_entries([((2, 0), 1), ((1, 1), 19), ((0, 2), 1)])
        );

        for g in 0..4 {
            assert_eq!(curve_diamond(g).primitive(1), HodgeStructure::curve_h1(g));
        }
    }

    #[test]
    fn mu_prim_examples() {
        assert_eq!(projective_space_diamond(2).mu_prim(2), ExtInt::PosInf);
        assert_eq!(k3_diamond().mu_prim(2), ExtInt::Int(0));
        assert_eq!(curve_diamond(2).mu_prim(1), ExtInt::Int(0));
    }

    #[test]
    fn lefschetz_roundtrip() {
        // reassembling h^{p,q} = sum_a P_(p+q-2a) at (p-a, q-a) recovers the diamond
        for d in [
            projective_space_diamond(1),
            projective_space_diamond(2),
            projective_space_diamond(3),
            curve_diamond(3),
            k3_diamond(),
            abelian_surface_diamond(),
            elliptic_times_p2_diamond(),
        ] {
            let parts = d.primitive_decomposition();
            let n = d.dim() as i64;
            for j in 0..=2 * n {
                let mut rebuilt = HodgeStructure::zero();
                for (l, part) in parts.iter().enumerate() {
                    let a = (j - l as i64) / 2;
                    if (j - l as i64) >= 0 && (j - l as i64) % 2 == 0 && a <= n - l as i64 {
                        rebuilt = rebuilt.direct_sum(&part.tate_twist(-a));
                    }
                }
                assert_eq!(rebuilt, d.cohomology(j), "degree {j} of {d:?}");
            }
        }
    }

    #[test]
    fn betti_and_h0i() {
        let k3 = k3_diamond();
        assert_eq!(k3.betti(2), 22);
        assert_eq!(k3.h0i(2), 1);
        assert_eq!(k3.h0i(1), 0);
        assert!(curve_diamond(0).is_projective_line());
        assert!(!curve_diamond(1).is_projective_line());
        let exp2 = elliptic_times_p2_diamond();
        assert_eq!(exp2.h0i(1), 1);
        assert_eq!(exp2.betti(2), 2);
        assert_eq!(exp2.betti(3), 2);
    }
}
