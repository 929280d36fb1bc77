//! Fiberwise data of the Kronecker modules space at a length-3 scheme: the
//! net of conics, the kernel of the multiplication into cubics, and the
//! Hilbert-Burch matrix of linear forms when the kernel has rank 2.

use crate::ideal::{poly_to_vec, vec_to_poly, GradedIdeal};
use crate::linalg::{Matrix, Subspace};
use crate::poly::{forms_dim, monomials_of_degree, Monomial, Polynomial, Rational, VarSet};
use crate::scheme::{PointScheme, SchemeError, Stratum};
use num_traits::One;
use serde::Serialize;
use std::collections::BTreeMap;

/// The fiber data at a length-3 scheme.
///
/// `conic_net` is the 3-dimensional degree-2 piece of the vanishing ideal;
/// `kernel_e` lives in the 9-dimensional space net ⊗ (linear forms), with
/// coordinates net-basis-major; `hb_matrix` is present exactly when the
/// kernel has dimension 2, its rows being the kernel basis read as triples
/// of linear forms.
#[derive(Clone, Debug)]
pub struct KroneckerFiber {
    pub stratum: Stratum,
    pub conic_net: Subspace,
    pub net_basis: Vec<Polynomial>,
    pub kernel_e: Subspace,
    pub hb_matrix: Option<[[Polynomial; 3]; 2]>,
}

/// Builds the fiber at a length-3 scheme. The conic net always has
/// dimension 3; the kernel has dimension 2 off the collinear stratum and 3
/// on it.
pub fn kronecker_fiber(z: &PointScheme) -> Result<KroneckerFiber, SchemeError> {
    let stratum = z.classify_stratum()?;
    let ideal = z.vanishing_ideal()?;
    let vars = ideal.vars().clone();
    let conic_net = ideal.graded_piece(2);
    assert_eq!(conic_net.dim(), 3, "length-3 net of conics");
    let net_basis: Vec<Polynomial> = conic_net
        .basis()
        .iter()
        .map(|v| vec_to_poly(v, &vars, 2))
        .collect();

    let kernel_e = multiplication_kernel(&net_basis);
    assert!(
        kernel_e.dim() == 2 || kernel_e.dim() == 3,
        "kernel rank must be 2 or 3"
    );

    let hb_matrix = (kernel_e.dim() == 2).then(|| {
        let mut rows: Vec<(Vec<Rational>, [Polynomial; 3])> = kernel_e
            .basis()
            .iter()
            .map(|v| (v.clone(), kernel_vector_to_linear_triple(v, &vars)))
            .collect();
        rows.sort_by(|a, b| a.0.cmp(&b.0));
        [rows[0].1.clone(), rows[1].1.clone()]
    });

    Ok(KroneckerFiber {
        stratum,
        conic_net,
        net_basis,
        kernel_e,
        hb_matrix,
    })
}

/// Kernel of net ⊗ (linear forms) -> cubics, `(l1, l2, l3) -> sum(li * qi)`.
fn multiplication_kernel(net_basis: &[Polynomial]) -> Subspace {
    let lin = monomials_of_degree(3, 1);
    let cubics = monomials_of_degree(3, 3);
    let index: BTreeMap<&Monomial, usize> =
        cubics.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut cols = Vec::new();
    for q in net_basis {
        for m in &lin {
            let prod = q.mul_term(m, &Rational::one());
            cols.push(poly_to_vec(&prod, &index, cubics.len()));
        }
    }
    Matrix::from_rows(cols).transpose().kernel()
}

fn kernel_vector_to_linear_triple(v: &[Rational], vars: &VarSet) -> [Polynomial; 3] {
    let lin = monomials_of_degree(3, 1);
    let mut out = [
        Polynomial::zero(vars),
        Polynomial::zero(vars),
        Polynomial::zero(vars),
    ];
    for (slot, item) in out.iter_mut().enumerate() {
        for (k, m) in lin.iter().enumerate() {
            *item = item.add(&Polynomial::term(vars, m.clone(), v[slot * 3 + k].clone()));
        }
    }
    out
}

/// The three signed 2x2 minors of the Hilbert-Burch matrix; for non-collinear
/// schemes they generate the vanishing ideal.
pub fn hb_minors(hb: &[[Polynomial; 3]; 2]) -> [Polynomial; 3] {
    let det = |c1: usize, c2: usize| hb[0][c1].mul(&hb[1][c2]).sub(&hb[0][c2].mul(&hb[1][c1]));
    [det(1, 2), det(2, 0), det(0, 1)]
}

/// Degreewise dimension bookkeeping of the two-term fiber complex.
#[derive(Clone, Debug, Serialize)]
pub struct ExactnessReport {
    pub degree: u32,
    pub stratum: Stratum,
    /// dim coker of the multiplication by the kernel rows into degree `d`,
    /// present off the collinear stratum.
    pub coker_dim: Option<usize>,
    /// `h^0(I_Z(d))` from the vanishing ideal.
    pub ideal_piece_dim: usize,
    /// Section counts `(h^0(O_l(d-3)), h^0(O(d-1)))` on the collinear
    /// stratum.
    pub additivity: Option<(usize, usize)>,
    pub pass: bool,
}

/// Checks in degree `d >= 2` that the fiber complex computes the expected
/// section counts: off the collinear stratum the cokernel of the
/// Hilbert-Burch multiplication has the dimension of the degree-`d` piece of
/// the ideal; on it, section counts of the line and the plane add up to it.
pub fn verify_complex_exactness(
    fiber: &KroneckerFiber,
    z: &PointScheme,
    d: u32,
) -> Result<ExactnessReport, SchemeError> {
    assert!(d >= 2, "degree must be at least 2");
    let ideal = z.vanishing_ideal()?;
    let ideal_piece_dim = ideal.graded_piece(d).dim();
    match &fiber.hb_matrix {
        Some(hb) => {
            // E ⊗ F_{d-3} -> F ⊗ F_{d-2}, row (m, r) -> (l1 m, l2 m, l3 m)
            let fd2 = monomials_of_degree(3, d - 2);
            let target_dim = 3 * fd2.len();
            let index: BTreeMap<&Monomial, usize> =
                fd2.iter().enumerate().map(|(i, m)| (m, i)).collect();
            let mut rows = Vec::new();
            if d >= 3 {
                for m in monomials_of_degree(3, d - 3) {
                    for row in hb {
                        let mut vec = Vec::with_capacity(target_dim);
                        for entry in row {
                            let prod = entry.mul_term(&m, &Rational::one());
                            vec.extend(poly_to_vec(&prod, &index, fd2.len()));
                        }
                        rows.push(vec);
                    }
                }
            }
            let rank = if rows.is_empty() {
                0
            } else {
                Matrix::from_rows(rows).rank()
            };
            let coker_dim = target_dim - rank;
            Ok(ExactnessReport {
                degree: d,
                stratum: fiber.stratum,
                coker_dim: Some(coker_dim),
                ideal_piece_dim,
                additivity: None,
                pass: coker_dim == ideal_piece_dim,
            })
        }
        None => {
            let line = line_in_ideal(&ideal).expect("collinear scheme has a line");
            let h0_line = if d >= 3 {
                let line_ideal = GradedIdeal::new(ideal.vars(), vec![line]).expect("linear form");
                forms_dim(3, d - 3) - line_ideal.graded_piece(d - 3).dim()
            } else {
                0
            };
            let h0_plane = forms_dim(3, d - 1);
            let total = forms_dim(3, d) - 3;
            Ok(ExactnessReport {
                degree: d,
                stratum: fiber.stratum,
                coker_dim: None,
                ideal_piece_dim,
                additivity: Some((h0_line, h0_plane)),
                pass: h0_line + h0_plane == total && ideal_piece_dim == total,
            })
        }
    }
}

/// The linear form in the degree-1 piece, if any.
pub fn line_in_ideal(ideal: &GradedIdeal) -> Option<Polynomial> {
    let piece = ideal.graded_piece(1);
    piece
        .basis()
        .first()
        .map(|v| vec_to_poly(v, ideal.vars(), 1))
}

/// The JSON fragment embedded in reports.
#[derive(Serialize)]
pub struct FiberJson {
    pub stratum: Stratum,
    #[serde(rename = "dimE")]
    pub dim_e: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hb: Option<Vec<[String; 3]>>,
}

impl KroneckerFiber {
    pub fn to_json(&self) -> FiberJson {
        FiberJson {
            stratum: self.stratum,
            dim_e: self.kernel_e.dim(),
            hb: self.hb_matrix.as_ref().map(|hb| {
                hb.iter()
                    .map(|row| {
                        [
                            row[0].to_string(),
                            row[1].to_string(),
                            row[2].to_string(),
                        ]
                    })
                    .collect()
            }),
        }
    }
}
