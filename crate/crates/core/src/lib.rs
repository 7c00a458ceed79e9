//! Multiplicities of Schubert varieties in Grassmannians at torus-fixed
//! points, computed three ways (LGV determinant, nonintersecting-path
//! enumeration, maximal reflection sets), together with the EN-turn
//! generating function that gives the conjectural Hilbert series of the
//! tangent cone and the light-and-shadow map between reflection multisets and
//! path families.

pub mod cli;
pub mod error;
pub mod grassmannian;
pub mod hilbert;
pub mod paths;
pub mod reflections;
pub mod shadow;
pub mod verify;

pub use error::{Error, Result};
pub use grassmannian::{
    bruhat_leq, connection_permutation, kappa_vector, CosetRep, FullPermutation, GrassmannianShape, GridPoint, Instance,
};
pub use hilbert::{
    hilbert_function, hilbert_function_oracle, hilbert_series, multiplicity_from_series, pole_order, series_expansion,
    HilbertSeries, IntPolynomial,
};
pub use paths::{
    count_families, count_ne_paths, enumerate_families, lgv_multiplicity, turn_polynomial, LatticePath, PathFamily,
    Step,
};
pub use reflections::{
    apply_chain, chain_condition, enumerate_s1s2_sets, enumerate_s1s2_sets_within, longest_chain_in_region,
    s1_check_naive, s2_check, ReflectionChain, Region,
};
pub use shadow::{family_point_multiset, light_and_shadow, light_and_shadow_trace, shadow_border, ReflectionMultiset};
