//! Homological invariants of cyclic Nakayama algebras.
//!
//! A connected cyclic Nakayama algebra is determined by its Kupisch series, the
//! composition lengths `c_1, …, c_n` of its indecomposable projectives. Every
//! indecomposable module is uniserial and is described by its top vertex and its
//! length, so all of the homological algebra here is exact combinatorics on such
//! pairs: syzygies, projective dimensions, the finitistic and global dimensions,
//! the Igusa–Todorov φ-dimension and the delooping level.
//!
//! On top of that sits the syzygy filtered algebra `ε(Λ)` ([`filtration`]) and a
//! verification harness ([`harness`]) that sweeps every algebra of bounded size
//! and checks the equalities `findim Λ = del Λ = findim Λᵒᵖ = del Λᵒᵖ` together
//! with the structural facts they rest on.

pub mod algebra;
mod dim;
pub mod error;
pub mod filtration;
pub mod harness;
pub mod invariants;
pub mod rank;
pub mod report;
pub mod uniserial;

pub use algebra::{
    canonicalize, enumerate_kupisch, injective_lengths, is_selfinjective, kupisch_from_relations,
    opposite, relations_from_kupisch, validate_kupisch, Algebra, EnumerationSpec, Relation,
    RelationSystem,
};
pub use dim::Dim;
pub use error::{AlgebraError, EpsilonError, FiltrationError, ModuleError, ParseError};
pub use filtration::{
    b_filtration, delta_blocks, epsilon, epsilon_tower, findim_one_test, invariants_via_tower,
    nabla_blocks, s_prime_set, socle_set, DeltaBlock, Epsilon, Filtration, Terminal, TowerReport,
};
pub use harness::{run_checks, sweep, CheckId, CheckOutcome, CheckReport, SweepReport};
pub use invariants::{
    del_algebra, del_module, dimension_report, gldim_findim, phi_dim, phi_of_set, DimensionReport,
    ImageSets, StableK0,
};
pub use rank::integer_rank;
pub use report::InvariantsReport;
pub use uniserial::{
    indecomposables, is_injective, is_periodic, make_module, pdim, syzygy, syzygy_orbit, OrbitInfo,
    Syzygy, UniserialModule,
};
