//! Exact-arithmetic kernels for verifying fiberwise numerical claims about
//! moduli of plane quartic curves: graded ideals of length-3 schemes in the
//! projective plane, symmetrized bundle maps into quartics, flat limits over
//! the non-curvilinear locus, tangent and normal spaces, symmetric-power
//! decompositions, wall geometry in the stability half-plane, and the
//! recursion counting rational plane curves.
//!
//! Every computation is over the exact rationals (or rational functions of
//! one parameter); there is no floating point anywhere.

pub mod curve;
pub mod ideal;
pub mod kronecker;
pub mod linalg;
pub mod pipeline;
pub mod poly;
pub mod report;
pub mod scheme;
pub mod sl3;
pub mod walls;

pub use ideal::{GradedIdeal, GroebnerBasis, HilbertData};
pub use linalg::{Matrix, RationalFunction, Subspace, UniPoly};
pub use poly::{parse, Monomial, MonomialOrder, Polynomial, Rational, VarSet};
pub use scheme::{LocalKind, PointScheme, ProjPoint, Stratum};
