//! Flat limit of a family of subspaces at `t = 0`, computed inside the
//! Grassmannian of the ambient space.
//!
//! Given vectors with rational-function entries that are independent over
//! the function field, the limit is found by the classic lattice walk:
//! scale each vector by a power of `t` so that its value at `t = 0` is finite
//! and nonzero, evaluate, and while the evaluated vectors are dependent,
//! replace one of them by the dependency combination (which vanishes at 0
//! and is renormalized on the next pass). The walk strictly enlarges the
//! generated lattice inside its saturation, so it terminates; the output has
//! the generic dimension of the family.

use super::ratfunc::RationalFunction;
use super::{Matrix, Subspace};
use crate::poly::Rational;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LimitError {
    #[error("family is generically dependent: {0}")]
    GenericallyDependent(String),
    #[error("limit iteration failed to stabilize")]
    DidNotStabilize,
}

/// Left-kernel basis vector of the row list, if any.
fn row_dependency<F: super::Field>(rows: &[Vec<F>], ambient: usize) -> Option<Vec<F>> {
    // dependencies among rows = kernel of the transpose
    let mut cols = Vec::with_capacity(ambient);
    for j in 0..ambient {
        cols.push(rows.iter().map(|r| r[j].clone()).collect::<Vec<F>>());
    }
    let kernel = Matrix::from_rows(cols).kernel();
    kernel.basis().first().cloned()
}

/// Reduces a spanning set to a basis over the function field: the nonzero
/// rows of its reduced row-echelon form.
pub fn generic_row_basis(
    ambient: usize,
    rows: &[Vec<RationalFunction>],
) -> Vec<Vec<RationalFunction>> {
    if rows.is_empty() {
        return Vec::new();
    }
    for row in rows {
        assert_eq!(row.len(), ambient, "vector length mismatch");
    }
    let r = Matrix::from_rows(rows.to_vec()).rref();
    (0..r.rank).map(|i| r.matrix.row(i).to_vec()).collect()
}

/// The limit at `t = 0` of the span of `rows` over the function field.
pub fn subspace_limit(
    ambient: usize,
    rows: &[Vec<RationalFunction>],
) -> Result<Subspace<Rational>, LimitError> {
    let k = rows.len();
    if k == 0 {
        return Ok(Subspace::trivial(ambient));
    }
    for row in rows {
        assert_eq!(row.len(), ambient, "vector length mismatch");
    }
    if let Some(dep) = row_dependency(rows, ambient) {
        let pretty = dep
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        return Err(LimitError::GenericallyDependent(format!("[{pretty}]")));
    }

    let mut work: Vec<Vec<RationalFunction>> = rows.to_vec();
    for _ in 0..10_000 {
        // normalize: minimal valuation zero in every row
        for row in work.iter_mut() {
            let v = row
                .iter()
                .filter_map(RationalFunction::valuation0)
                .min()
                .expect("rows stay nonzero");
            if v != 0 {
                for entry in row.iter_mut() {
                    *entry = entry.mul_t_pow(-v);
                }
            }
        }
        let evaluated: Vec<Vec<Rational>> = work
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| e.eval0().expect("normalized entry"))
                    .collect()
            })
            .collect();
        match row_dependency(&evaluated, ambient) {
            None => return Ok(Subspace::from_rows(ambient, evaluated)),
            Some(dep) => {
                let j = dep
                    .iter()
                    .rposition(|c| !c.is_zero())
                    .expect("nonzero dependency");
                let mut combo = vec![RationalFunction::zero(); ambient];
                for (i, c) in dep.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let scalar = RationalFunction::constant(c.clone());
                    for (slot, entry) in combo.iter_mut().zip(&work[i]) {
                        *slot = slot.clone() + scalar.clone() * entry.clone();
                    }
                }
                work[j] = combo;
            }
        }
    }
    Err(LimitError::DidNotStabilize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;
    use num_traits::One;

    fn c(n: i64) -> RationalFunction {
        RationalFunction::constant(rat(n))
    }

    fn tf() -> RationalFunction {
        RationalFunction::t()
    }

    #[test]
    fn constant_family_is_identity() {
        let rows = vec![
            vec![c(1), c(2), c(0)],
            vec![c(0), c(0), c(3)],
        ];
        let lim = subspace_limit(3, &rows).unwrap();
        let expect = Subspace::from_rows(
            3,
            vec![vec![rat(1), rat(2), rat(0)], vec![rat(0), rat(0), rat(3)]],
        );
        assert_eq!(lim, expect);
    }

    #[test]
    fn dependent_family_is_rejected() {
        let rows = vec![vec![c(1)], vec![tf()]];
        let err = subspace_limit(1, &rows).unwrap_err();
        assert!(matches!(err, LimitError::GenericallyDependent(_)));
    }

    #[test]
    fn dimension_is_generic_dimension() {
        // span{(1, t), (t, t)} -> at 0 both evaluate dependish; limit is 2-dim
        let rows = vec![vec![c(1), tf()], vec![tf(), tf()]];
        let lim = subspace_limit(2, &rows).unwrap();
        assert_eq!(lim.dim(), 2);
        assert_eq!(lim, Subspace::full(2));
    }

    #[test]
    fn nontrivial_renormalization() {
        // rows (1, t) and (1, -t): difference is (0, 2t); limit picks up (0,1)
        let rows = vec![
            vec![c(1), tf()],
            vec![c(1), RationalFunction::zero() - tf()],
        ];
        let lim = subspace_limit(2, &rows).unwrap();
        assert_eq!(lim, Subspace::full(2));
    }

    #[test]
    fn negative_valuations_normalize() {
        let one_over_t = RationalFunction::one() / tf();
        let rows = vec![vec![one_over_t, c(1)]];
        let lim = subspace_limit(2, &rows).unwrap();
        // (1/t, 1) ~ (1, t) -> (1, 0)
        let expect = Subspace::from_rows(2, vec![vec![rat(1), rat(0)]]);
        assert_eq!(lim, expect);
    }
}
