//! Exact computation of Hodge-theoretic invariants of secant varieties.
//!
//! Given the Hodge diamond of a smooth projective variety `Y` embedded by a
//! sufficiently positive line bundle, the [`lines`] module evaluates closed
//! formulas for the invariants of its secant variety of lines: the local
//! cohomological defect and weight-graded local cohomology, the singularity
//! invariants `c`, `HRH` and `w`, (intersection) Hodge-Lyubeznik numbers,
//! generation levels of Hodge filtrations, intersection and singular
//! cohomology with their weight gradings, and the Q-factoriality defect.
//! The [`curves`] module does the same for the higher secant varieties of a
//! smooth projective curve of arbitrary genus.
//!
//! Everything is exact: dimensions are integers, Hodge structures are
//! finitely supported bigraded multiplicity tables, and the [`oracle`]
//! module re-derives the closed-form answers from independent machinery
//! (an explicit Koszul weight-spectral-sequence over exact integers,
//! E-polynomial scissor relations, and decomposition-theorem identities).

pub mod curves;
pub mod diamond;
pub mod ext_int;
pub mod hodge;
pub mod lines;
pub mod oracle;
pub(crate) mod par;
pub mod table;
pub mod varieties;

pub use diamond::{HodgeDiamond, DiamondError};
pub use ext_int::ExtInt;
pub use hodge::{HodgeStructure, HookPartition};
pub use table::{CohomologyTable, EPolynomial};

#[cfg(test)]
mod proptests {
    use proptest::prelude::*;

    use crate::hodge::HodgeStructure;
    use crate::table::{CohomologyTable, EPolynomial};

    fn arb_structure() -> impl Strategy<Value = HodgeStructure> {
        proptest::collection::vec(((-3i64..4, -3i64..4), 1u64..4), 0..6)
            .prop_map(HodgeStructure::from_entries)
    }

    proptest! {
        #[test]
        fn dual_is_an_involution(h in arb_structure()) {
            prop_assert_eq!(h.dual().dual(), h);
        }

        #[test]
        fn tate_twist_roundtrip(h in arb_structure(), a in -5i64..6) {
            prop_assert_eq!(h.tate_twist(a).tate_twist(-a), h.clone());
            prop_assert_eq!(h.tate_twist(a).dim(), h.dim());
        }

        #[test]
        fn e_polynomial_additive_and_multiplicative(
            a in arb_structure(),
            b in arb_structure(),
            ja in 0i64..3,
            jb in 0i64..3,
        ) {
            // additivity over direct sums in a fixed degree
            let ea = EPolynomial::from(&a);
            let eb = EPolynomial::from(&b);
            prop_assert_eq!(EPolynomial::from(&a.direct_sum(&b)), ea.add(&eb));
            // multiplicativity over a Kunneth tensor of one-degree tables
            let mut ta = CohomologyTable::new("a");
            ta.add(2 * ja, a.clone());
            let mut tb = CohomologyTable::new("b");
            tb.add(2 * jb, b.clone());
            prop_assert_eq!(
                ta.tensor(&tb).e_polynomial(),
                ta.e_polynomial().mul(&tb.e_polynomial())
            );
        }

        #[test]
        fn tensor_dimension_multiplies(a in arb_structure(), b in arb_structure()) {
            prop_assert_eq!(a.tensor(&b).dim(), a.dim() * b.dim());
        }
    }
}
