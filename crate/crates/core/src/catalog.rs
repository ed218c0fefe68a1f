//! Small algebras whose ideal structure is known by hand. They double as
//! regression fixtures and as illustrations of where each structural
//! statement stops holding.

use crate::algebra::EvolutionAlgebra;
use crate::scalar::Field;

fn build<F: Field>(field: F, squares: &[&[i64]]) -> EvolutionAlgebra<F> {
    EvolutionAlgebra::from_integers(field, squares).expect("catalog entries are well formed")
}

/// `e1^2 = e2, e2^2 = e2, e3^2 = e4 + e5, e4^2 = 0, e5^2 = e6, e6^2 = 0`.
///
/// Degenerate, `A^2 = <e2, e4+e5, e6>` has codimension 3, and there are two
/// maximal hereditary sets, both giving maximal ideals that contain `A^2`.
pub fn six_dim_degenerate<F: Field>(field: F) -> EvolutionAlgebra<F> {
    build(
        field,
        &[
            &[0, 1, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 1, 1, 0],
            &[0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1],
            &[0, 0, 0, 0, 0, 0],
        ],
    )
}

/// `e1^2 = e1 + e2 + e3, e2^2 = e2, e3^2 = e2 + e3`.
///
/// Perfect, with the single proper nontrivial hereditary set `{e2, e3}` and
/// hence the unique maximal ideal `K e2 + K e3`.
pub fn three_dim_perfect<F: Field>(field: F) -> EvolutionAlgebra<F> {
    build(field, &[&[1, 1, 1], &[0, 1, 0], &[0, 1, 1]])
}

/// `e1^2 = e1 + e2, e2^2 = -e1 - e2`.
///
/// `I = <e1 + e2>` is a maximal ideal with `H_I = B` but `I != I_{H_I} = A`.
pub fn plane_antisymmetric<F: Field>(field: F) -> EvolutionAlgebra<F> {
    build(field, &[&[1, 1], &[-1, -1]])
}

/// `e1^2 = e2, e2^2 = e2`: `{e2}` is hereditary but not saturated.
pub fn plane_chain_to_loop<F: Field>(field: F) -> EvolutionAlgebra<F> {
    build(field, &[&[0, 1], &[0, 1]])
}

/// `e1^2 = e1 + e2, e2^2 = e1 + e2`: no maximal hereditary set except the
/// empty one, yet `<e1 + e2>` is a maximal ideal.
pub fn plane_symmetric<F: Field>(field: F) -> EvolutionAlgebra<F> {
    build(field, &[&[1, 1], &[1, 1]])
}

/// `e1^2 = e2^2 = e1 + e2, e3^2 = e3`: for `I = <e1 + e2>`,
/// `H_I = {e1, e2}` is hereditary and saturated while `I` contains no basis vector.
pub fn three_dim_split<F: Field>(field: F) -> EvolutionAlgebra<F> {
    build(field, &[&[1, 1, 0], &[1, 1, 0], &[0, 0, 1]])
}

/// `e1^2 = e1 + e2, e2^2 = e2, e3^2 = e4^2 = e1 + e3 + e4`.
///
/// `{e1, e2}` is maximal hereditary but `I_H` sits strictly inside the ideal
/// `<e1, e2, e3 + e4>`.
pub fn four_dim_non_maximal<F: Field>(field: F) -> EvolutionAlgebra<F> {
    build(field, &[&[1, 1, 0, 0], &[0, 1, 0, 0], &[1, 0, 1, 1], &[1, 0, 1, 1]])
}

/// `e1^2 = e2^2 = e3^2 = e3, e4^2 = 0`.
///
/// Degenerate; `H = {e1, e2, e3}` is hereditary and saturated but `I_H`
/// fails absorption, witnessed by `x = e1 + e4`.
pub fn four_dim_degenerate<F: Field>(field: F) -> EvolutionAlgebra<F> {
    build(field, &[&[0, 0, 1, 0], &[0, 0, 1, 0], &[0, 0, 1, 0], &[0, 0, 0, 0]])
}

/// `e1^2 = e2^2 = e3^2 = e4^2 = e3`: the codimension-1 maximal ideal
/// `<e1, e2, e3>` contains `A^2` and fails absorption (witness `e4`).
pub fn four_dim_codim_one<F: Field>(field: F) -> EvolutionAlgebra<F> {
    build(field, &[&[0, 0, 1, 0], &[0, 0, 1, 0], &[0, 0, 1, 0], &[0, 0, 1, 0]])
}

/// `e1^2 = e2^2 = e1 + e2, e3^2 = e1 + e2 + e3`: the ideals `<e1 + e2>` and
/// `<e1, e2>` have the same hereditary set.
pub fn three_dim_non_injective<F: Field>(field: F) -> EvolutionAlgebra<F> {
    build(field, &[&[1, 1, 0], &[1, 1, 0], &[1, 1, 1]])
}

/// `e1^2 = e2, e2^2 = e1`: simple, its graph a 2-cycle.
pub fn two_cycle<F: Field>(field: F) -> EvolutionAlgebra<F> {
    build(field, &[&[0, 1], &[1, 0]])
}
