//! Representation theory of G2: the seven-dimensional representation, the
//! Gaudin `G` matrix, Casimir operators and tensor product decompositions.

mod characters;
mod matrices;

pub use characters::{
    character, dominant_conjugate, dominant_multiplicities, hom_dim, invariant_dim, precedes, tensor_decompose,
    tensor_decompose_many, weight_multiplicity, weyl_dim, Decomposition,
};
pub use matrices::{
    build_g, casimir_on_pair, casimir_spectrum, check_g_relations, check_serre_relations, chevalley, eigenspace_dim,
    f_matrix, g_table_closed_form, g_table_from_definition, lie_algebra_basis, predicted_pair_eigenvalue, trace_form,
    unit, Chevalley, GTable, Mat7, STANDARD_WEIGHTS,
};
