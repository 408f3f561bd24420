//! Injective rays on loop sites, their endomorphism algebras as matrices of
//! truncated power series, the dual path coalgebra, and transport along
//! automorphisms of the base.

mod coalgebra;
mod rays;
mod series;
mod transport;

pub use coalgebra::{
    coalgebra_dual_check, comodule_coaction, path_coalgebra, Coaction, DualCheck, Path,
    PathCoalgebra, Tensor2, Tensor3,
};
pub use rays::{
    inj_matrix_algebra, ray_compose, ray_hom, InjectiveRay, RayHom, SeriesMatrix,
    SeriesMatrixAlgebra,
};
pub use series::TruncatedSeries;
pub use transport::{
    check_invariance, commutes_with_composition, transport, BaseBijection, InvarianceReport,
    Transport,
};
