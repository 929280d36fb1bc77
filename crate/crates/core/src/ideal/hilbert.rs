//! Hilbert functions by direct graded-piece dimension counts, with the
//! Hilbert polynomial recovered by exact interpolation on a verified
//! stabilization window.

use super::GradedIdeal;
use crate::linalg::UniPoly;
use crate::poly::{forms_dim, rat, Rational};
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HilbertError {
    #[error("Hilbert function did not stabilize within degree {0}")]
    NoStabilization(u32),
}

/// Table of `dim (R/I)_d`, the interpolated Hilbert polynomial in `m`, and
/// the degree from which the table agrees with the polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct HilbertData {
    pub table: Vec<(u32, usize)>,
    pub polynomial: UniPoly,
    pub stabilization: u32,
}

impl HilbertData {
    /// The constant value when the Hilbert polynomial has degree zero; this
    /// is the colength for ideals of zero-dimensional subschemes.
    pub fn constant_value(&self) -> Option<Rational> {
        match self.polynomial.degree() {
            None => Some(Rational::zero()),
            Some(0) => Some(self.polynomial.coeff(0)),
            _ => None,
        }
    }
}

fn quotient_dims(ideal: &GradedIdeal, max_degree: u32) -> Vec<(u32, usize)> {
    (0..=max_degree)
        .map(|d| {
            let total = forms_dim(ideal.vars().len(), d);
            (d, total - ideal.graded_piece_dim(d))
        })
        .collect()
}

/// Exact Lagrange interpolation through three points.
fn interpolate3(points: &[(u32, usize)]) -> UniPoly {
    assert_eq!(points.len(), 3);
    let mut acc = UniPoly::zero();
    for (i, &(xi, yi)) in points.iter().enumerate() {
        let mut term = UniPoly::constant(rat(yi as i64));
        for (j, &(xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = rat(xi as i64) - rat(xj as i64);
            // (m - xj) / (xi - xj)
            let lin = UniPoly::from_coeffs(vec![-rat(xj as i64) / denom.clone(), rat(1) / denom]);
            term = term.mul(&lin);
        }
        acc = acc.add(&term);
    }
    acc
}

fn try_window(ideal: &GradedIdeal, max_degree: u32) -> Option<HilbertData> {
    let table = quotient_dims(ideal, max_degree);
    let n = table.len();
    if n < 6 {
        return None;
    }
    let polynomial = interpolate3(&table[n - 3..]);
    // the interpolant must reproduce the last six values
    for &(d, v) in &table[n - 6..] {
        if polynomial.eval(&rat(d as i64)) != rat(v as i64) {
            return None;
        }
    }
    let stabilization = table
        .iter()
        .rev()
        .take_while(|&&(d, v)| polynomial.eval(&rat(d as i64)) == rat(v as i64))
        .last()
        .map(|&(d, _)| d)
        .expect("at least the window matches");
    Some(HilbertData {
        table,
        polynomial,
        stabilization,
    })
}

pub fn hilbert(ideal: &GradedIdeal) -> Result<HilbertData, HilbertError> {
    let window = ideal.max_generator_degree() + 6;
    if let Some(data) = try_window(ideal, window) {
        return Ok(data);
    }
    // the window is doubled once before giving up
    try_window(ideal, 2 * window).ok_or(HilbertError::NoStabilization(2 * window))
}
