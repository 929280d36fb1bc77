//! Length-n subschemes of the projective plane supported at rational points:
//! vanishing ideals, length, stratum classification, and tangent spaces to
//! the Hilbert scheme of points.

pub mod sample;

use crate::ideal::{poly_to_vec, GradedIdeal, IdealError};
use crate::linalg::{Matrix, Subspace, UniPoly};
use crate::poly::{
    forms_dim, monomials_of_degree, rat, Monomial, Polynomial, Rational, VarSet,
};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SchemeError {
    #[error("homogeneous coordinates must not all vanish")]
    ZeroPoint,
    #[error("coincident supports must be listed as one component: {0}")]
    CoincidentSupports(String),
    #[error("curvilinear components must have length 3, got {0}")]
    UnsupportedCurvilinearLength(u32),
    #[error("curvilinear tangent must be independent of the support point")]
    DegenerateTangent,
    #[error("curvilinear conic parameter must be nonzero")]
    ZeroConicParameter,
    #[error("generator `{0}` does not vanish at asserted support point")]
    SupportMismatch(String),
    #[error("scheme length is {0}, expected 3")]
    LengthNot3(String),
    #[error("scheme is not zero-dimensional")]
    NotZeroDimensional,
    #[error("presentation hypothesis fails: {0}")]
    Presentation(String),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// A rational point of the projective plane, canonicalized so that the first
/// nonzero coordinate is 1; equality is equality of canonical coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProjPoint([Rational; 3]);

impl ProjPoint {
    pub fn new(coords: [Rational; 3]) -> Result<Self, SchemeError> {
        let scale = coords.iter().find(|c| !c.is_zero()).cloned();
        let Some(scale) = scale else {
            return Err(SchemeError::ZeroPoint);
        };
        let inv = Rational::one() / scale;
        Ok(ProjPoint(coords.map(|c| c * inv.clone())))
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self, SchemeError> {
        ProjPoint::new([rat(a), rat(b), rat(c)])
    }

    pub fn coords(&self) -> &[Rational; 3] {
        &self.0
    }

    pub fn to_string_triple(&self) -> String {
        format!("[{}:{}:{}]", self.0[0], self.0[1], self.0[2])
    }
}

/// The local structure carried by a support point.
#[derive(Clone, PartialEq, Debug)]
pub enum LocalKind {
    /// A reduced point.
    Reduced,
    /// A length-3 curvilinear scheme: the second-order jet of the smooth
    /// conic through the point with the given tangent direction and a
    /// nonzero conic parameter.
    Curvilinear {
        tangent: [Rational; 3],
        length: u32,
        param: Rational,
    },
    /// The fat point cut out by the `mult`-th power of the maximal ideal.
    Fat { mult: u32 },
}

impl LocalKind {
    pub fn curvilinear3(tangent: [Rational; 3]) -> Self {
        LocalKind::Curvilinear {
            tangent,
            length: 3,
            param: Rational::one(),
        }
    }

    fn length(&self) -> u32 {
        match self {
            LocalKind::Reduced => 1,
            LocalKind::Curvilinear { length, .. } => *length,
            LocalKind::Fat { mult } => mult * (mult + 1) / 2,
        }
    }
}

/// A zero-dimensional subscheme, either structured (points with local data)
/// or a raw saturated ideal with an asserted support hint.
#[derive(Clone, Debug)]
pub enum PointScheme {
    Structured(Vec<(ProjPoint, LocalKind)>),
    Raw {
        ideal: GradedIdeal,
        support: Vec<ProjPoint>,
    },
}

/// Stratum of the length-3 locus: collinear (D3), non-curvilinear fat point
/// (D5), or everything else.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Stratum {
    #[serde(rename = "GENERIC")]
    Generic,
    D3,
    D5,
}

impl std::fmt::Display for Stratum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Stratum::Generic => write!(f, "GENERIC"),
            Stratum::D3 => write!(f, "D3"),
            Stratum::D5 => write!(f, "D5"),
        }
    }
}

impl PointScheme {
    pub fn triangle(points: [ProjPoint; 3]) -> Self {
        PointScheme::Structured(points.into_iter().map(|p| (p, LocalKind::Reduced)).collect())
    }

    pub fn fat_point(p: ProjPoint) -> Self {
        PointScheme::Structured(vec![(p, LocalKind::Fat { mult: 2 })])
    }

    pub fn length(&self) -> Result<u64, SchemeError> {
        match self {
            PointScheme::Structured(components) => Ok(components
                .iter()
                .map(|(_, k)| k.length() as u64)
                .sum()),
            PointScheme::Raw { ideal, .. } => {
                let h = ideal
                    .hilbert()
                    .map_err(|_| SchemeError::NotZeroDimensional)?;
                let c = h.constant_value().ok_or(SchemeError::NotZeroDimensional)?;
                if !c.is_integer() {
                    return Err(SchemeError::NotZeroDimensional);
                }
                u64::try_from(c.to_integer()).map_err(|_| SchemeError::NotZeroDimensional)
            }
        }
    }

    /// The saturated vanishing ideal.
    ///
    /// Each component imposes linear conditions on the forms of every degree
    /// (values, jets, or partial derivatives at the support), so the graded
    /// piece `I_d` is a joint condition kernel. Generators are accumulated
    /// degree by degree up to the length of the scheme, which bounds its
    /// regularity; beyond that degree multiplication by linear forms is
    /// surjective onto each piece.
    pub fn vanishing_ideal(&self) -> Result<GradedIdeal, SchemeError> {
        let vars = VarSet::xyz();
        match self {
            PointScheme::Raw { ideal, support } => {
                for g in ideal.generators() {
                    for p in support {
                        if !g.evaluate(p.coords()).is_zero() {
                            return Err(SchemeError::SupportMismatch(g.to_string()));
                        }
                    }
                }
                Ok(ideal.clone())
            }
            PointScheme::Structured(components) => {
                for (i, (p, _)) in components.iter().enumerate() {
                    for (q, _) in &components[i + 1..] {
                        if p == q {
                            return Err(SchemeError::CoincidentSupports(p.to_string_triple()));
                        }
                    }
                }
                let n: u32 = components.iter().map(|(_, k)| k.length()).sum();
                let mut gens: Vec<Polynomial> = Vec::new();
                for d in 1..=n {
                    let piece = conditions_kernel(components, d)?;
                    let interim = GradedIdeal::new(&vars, gens.clone())?;
                    let mut span = interim.graded_piece(d);
                    for v in piece.basis() {
                        if !span.contains_vector(v) {
                            gens.push(crate::ideal::vec_to_poly(v, &vars, d));
                            span = span.sum(&Subspace::from_rows(
                                span.ambient_dim(),
                                vec![v.clone()],
                            ));
                        }
                    }
                }
                Ok(GradedIdeal::new(&vars, gens)?)
            }
        }
    }

    /// Classification of the length-3 strata: collinearity is a linear form
    /// in the ideal; the non-curvilinear stratum is a single support point at
    /// which every generator is singular.
    pub fn classify_stratum(&self) -> Result<Stratum, SchemeError> {
        let len = self.length()?;
        if len != 3 {
            return Err(SchemeError::LengthNot3(len.to_string()));
        }
        let ideal = self.vanishing_ideal()?;
        if ideal.graded_piece(1).dim() >= 1 {
            return Ok(Stratum::D3);
        }
        let single_support: Option<ProjPoint> = match self {
            PointScheme::Structured(components) if components.len() == 1 => {
                Some(components[0].0.clone())
            }
            PointScheme::Raw { support, .. } if support.len() == 1 => Some(support[0].clone()),
            _ => None,
        };
        if let Some(q) = single_support {
            let singular_everywhere = ideal
                .generators()
                .iter()
                .all(|g| (0..3).all(|i| g.derivative(i).evaluate(q.coords()).is_zero()));
            if singular_everywhere {
                return Ok(Stratum::D5);
            }
        }
        Ok(Stratum::Generic)
    }
}

/// Condition rows cutting out the degree-`d` piece of the vanishing ideal.
fn conditions_kernel(
    components: &[(ProjPoint, LocalKind)],
    d: u32,
) -> Result<Subspace, SchemeError> {
    let basis = monomials_of_degree(3, d);
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (p, kind) in components {
        match kind {
            LocalKind::Reduced => {
                rows.push(
                    basis
                        .iter()
                        .map(|m| monomial_eval(m, p.coords()))
                        .collect(),
                );
            }
            LocalKind::Fat { mult } => {
                // multiplicity >= mult: all partials of order < mult vanish
                // (every order is needed: in degrees below mult - 1 the top
                // order is identically zero and says nothing)
                for order in 0..*mult {
                    for alpha in monomials_of_degree(3, order) {
                        rows.push(
                            basis
                                .iter()
                                .map(|m| partial_eval(m, &alpha, p.coords()))
                                .collect(),
                        );
                    }
                }
            }
            LocalKind::Curvilinear {
                tangent,
                length,
                param,
            } => {
                if *length != 3 {
                    return Err(SchemeError::UnsupportedCurvilinearLength(*length));
                }
                if param.is_zero() {
                    return Err(SchemeError::ZeroConicParameter);
                }
                let w = completion_vector(p.coords(), tangent)?;
                // P(s) = p + s*u + a*s^2*w, truncated at s^3
                let coords: Vec<UniPoly> = (0..3)
                    .map(|i| {
                        UniPoly::from_coeffs(vec![
                            p.coords()[i].clone(),
                            tangent[i].clone(),
                            param * &w[i],
                        ])
                    })
                    .collect();
                let evals: Vec<UniPoly> = basis
                    .iter()
                    .map(|m| {
                        let mut acc = UniPoly::one();
                        for (i, &e) in m.exps().iter().enumerate() {
                            for _ in 0..e {
                                acc = acc.mul_trunc(&coords[i], 3);
                            }
                        }
                        acc
                    })
                    .collect();
                for k in 0..3 {
                    rows.push(evals.iter().map(|u| u.coeff(k)).collect());
                }
            }
        }
    }
    Ok(Matrix::from_rows(rows).kernel())
}

fn monomial_eval(m: &Monomial, point: &[Rational; 3]) -> Rational {
    let mut acc = Rational::one();
    for (i, &e) in m.exps().iter().enumerate() {
        for _ in 0..e {
            acc = acc * point[i].clone();
        }
    }
    acc
}

/// Evaluates `∂^alpha m` at the point.
fn partial_eval(m: &Monomial, alpha: &Monomial, point: &[Rational; 3]) -> Rational {
    let vars = VarSet::xyz();
    let mut p = Polynomial::term(&vars, m.clone(), Rational::one());
    for (i, &e) in alpha.exps().iter().enumerate() {
        for _ in 0..e {
            p = p.derivative(i);
        }
    }
    p.evaluate(point)
}

/// A deterministic third vector completing `p, u` to a basis.
fn completion_vector(
    p: &[Rational; 3],
    u: &[Rational; 3],
) -> Result<[Rational; 3], SchemeError> {
    for i in 0..3 {
        let mut e = [Rational::zero(), Rational::zero(), Rational::zero()];
        e[i] = Rational::one();
        let m = Matrix::from_rows(vec![p.to_vec(), u.to_vec(), e.to_vec()]);
        if m.rank() == 3 {
            return Ok(e);
        }
    }
    Err(SchemeError::DegenerateTangent)
}

/// Dimension of `Hom(I, R/I)` in degree zero for an ideal with three
/// generators of equal degree `d` and a two-dimensional space of linear
/// syzygies — the tangent space to the Hilbert scheme at a point with this
/// presentation.
pub fn tangent_space_dim(ideal: &GradedIdeal) -> Result<usize, SchemeError> {
    let gens = ideal.generators();
    if gens.len() != 3 {
        return Err(SchemeError::Presentation(format!(
            "expected 3 generators, got {}",
            gens.len()
        )));
    }
    let d = gens[0]
        .homogeneous_degree()
        .ok_or_else(|| SchemeError::Presentation("zero generator".into()))?;
    if gens.iter().any(|g| g.homogeneous_degree() != Some(d)) {
        return Err(SchemeError::Presentation(
            "generators of unequal degree".into(),
        ));
    }
    let vars = ideal.vars().clone();
    let lin = monomials_of_degree(3, 1);
    let target_basis = monomials_of_degree(3, d + 1);
    let target_index: BTreeMap<&Monomial, usize> = target_basis
        .iter()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    // syzygies: triples of linear forms (l1, l2, l3) with sum(li * gi) = 0
    let mut cols: Vec<Vec<Rational>> = Vec::new();
    for g in gens {
        for m in &lin {
            let prod = g.mul_term(m, &Rational::one());
            cols.push(poly_to_vec(&prod, &target_index, target_basis.len()));
        }
    }
    let syzygies = Matrix::from_rows(cols).transpose().kernel();
    if syzygies.dim() != 2 {
        return Err(SchemeError::Presentation(format!(
            "linear syzygy space has dimension {}, expected 2",
            syzygies.dim()
        )));
    }
    // presentation matrix: 2 rows of linear-form triples, sorted by the
    // coefficient vectors
    let mut keyed: Vec<(Vec<Rational>, Vec<Polynomial>)> = syzygies
        .basis()
        .iter()
        .map(|v| {
            let triple = (0..3)
                .map(|j| {
                    let mut p = Polynomial::zero(&vars);
                    for (k, m) in lin.iter().enumerate() {
                        p = p.add(&Polynomial::term(&vars, m.clone(), v[j * 3 + k].clone()));
                    }
                    p
                })
                .collect();
            (v.clone(), triple)
        })
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    let rows: Vec<Vec<Polynomial>> = keyed.into_iter().map(|(_, t)| t).collect();

    // Hom(R(-d)^3, R/I)_0 -> Hom(R(-d-1)^2, R/I)_0
    let i_d = ideal.graded_piece(d);
    let i_d1 = ideal.graded_piece(d + 1);
    let comp_d = i_d.non_pivot_columns();
    let basis_d = monomials_of_degree(3, d);
    let _ = forms_dim(3, d + 1);
    let mut matrix_cols: Vec<Vec<Rational>> = Vec::new();
    for j in 0..3 {
        for &col in &comp_d {
            let m = &basis_d[col];
            let phi = Polynomial::term(&vars, m.clone(), Rational::one());
            let mut image = Vec::new();
            for row in &rows {
                let prod = row[j].mul(&phi);
                let vec = poly_to_vec(&prod, &target_index, target_basis.len());
                image.extend(i_d1.quotient_coords(&vec));
            }
            matrix_cols.push(image);
        }
    }
    let map = Matrix::from_rows(matrix_cols).transpose();
    let domain = map.ncols();
    Ok(domain - map.rank())
}

// ---------------------------------------------------------------------------
// JSON wire format

/// `{"points": [{"coords": ["0","0","1"], "kind": "fat", "mult": 2}, ...]}`
/// or `{"ideal": {...}, "support": [["0","0","1"], ...]}`.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
pub enum PointSchemeJson {
    Structured {
        points: Vec<PointJson>,
    },
    Raw {
        ideal: crate::ideal::IdealJson,
        #[serde(default)]
        support: Vec<[String; 3]>,
    },
}

#[derive(Serialize, Deserialize)]
pub struct PointJson {
    pub coords: [String; 3],
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mult: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tangent: Option<[String; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub length: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub param: Option<String>,
}

fn parse_rational(s: &str) -> Result<Rational, SchemeError> {
    s.parse()
        .map_err(|_| SchemeError::SupportMismatch(format!("bad rational `{s}`")))
}

fn parse_triple(c: &[String; 3]) -> Result<[Rational; 3], SchemeError> {
    Ok([
        parse_rational(&c[0])?,
        parse_rational(&c[1])?,
        parse_rational(&c[2])?,
    ])
}

impl PointScheme {
    pub fn from_json(json: &PointSchemeJson) -> Result<Self, SchemeError> {
        match json {
            PointSchemeJson::Structured { points } => {
                let mut components = Vec::new();
                for p in points {
                    let point = ProjPoint::new(parse_triple(&p.coords)?)?;
                    let kind = match p.kind.as_str() {
                        "reduced" => LocalKind::Reduced,
                        "fat" => LocalKind::Fat {
                            mult: p.mult.unwrap_or(2),
                        },
                        "curvilinear" => {
                            let tangent =
                                p.tangent.as_ref().ok_or(SchemeError::DegenerateTangent)?;
                            LocalKind::Curvilinear {
                                tangent: parse_triple(tangent)?,
                                length: p.length.unwrap_or(3),
                                param: p
                                    .param
                                    .as_deref()
                                    .map(parse_rational)
                                    .transpose()?
                                    .unwrap_or_else(Rational::one),
                            }
                        }
                        other => {
                            return Err(SchemeError::SupportMismatch(format!(
                                "unknown kind `{other}`"
                            )))
                        }
                    };
                    components.push((point, kind));
                }
                Ok(PointScheme::Structured(components))
            }
            PointSchemeJson::Raw { ideal, support } => {
                let ideal = GradedIdeal::from_json(ideal)?;
                let support = support
                    .iter()
                    .map(|c| ProjPoint::new(parse_triple(c)?))
                    .collect::<Result<Vec<_>, SchemeError>>()?;
                Ok(PointScheme::Raw { ideal, support })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ratio;

    fn pt(a: i64, b: i64, c: i64) -> ProjPoint {
        ProjPoint::from_ints(a, b, c).unwrap()
    }

    fn coordinate_triangle() -> PointScheme {
        PointScheme::triangle([pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)])
    }

    #[test]
    fn canonical_representative() {
        assert_eq!(pt(2, 4, 6), pt(1, 2, 3));
        assert_eq!(pt(0, 3, 6).coords()[1], rat(1));
        assert!(ProjPoint::from_ints(0, 0, 0).is_err());
    }

    #[test]
    fn triangle_ideal_is_the_monomial_one() {
        let ideal = coordinate_triangle().vanishing_ideal().unwrap();
        let expect = GradedIdeal::from_strs(&VarSet::xyz(), &["x*y", "x*z", "y*z"]).unwrap();
        assert!(ideal.equals(&expect));
        // oracle route: pairwise intersection of the three linear primes
        let p1 = GradedIdeal::from_strs(&VarSet::xyz(), &["y", "z"]).unwrap();
        let p2 = GradedIdeal::from_strs(&VarSet::xyz(), &["x", "z"]).unwrap();
        let p3 = GradedIdeal::from_strs(&VarSet::xyz(), &["x", "y"]).unwrap();
        assert!(ideal.equals(&p1.intersect(&p2).intersect(&p3)));
    }

    #[test]
    fn fat_point_ideal() {
        let ideal = PointScheme::fat_point(pt(0, 0, 1))
            .vanishing_ideal()
            .unwrap();
        let expect = GradedIdeal::from_strs(&VarSet::xyz(), &["x^2", "x*y", "y^2"]).unwrap();
        assert!(ideal.equals(&expect));
    }

    #[test]
    fn collinear_triple_conics_factor_through_the_line() {
        let z = PointScheme::triangle([pt(0, 1, 0), pt(0, 0, 1), pt(0, 1, 1)]);
        let ideal = z.vanishing_ideal().unwrap();
        let piece = ideal.graded_piece(2);
        assert_eq!(piece.dim(), 3);
        // the degree-2 piece is x * (linear forms)
        let x_times = GradedIdeal::from_strs(&VarSet::xyz(), &["x"]).unwrap();
        assert_eq!(piece, x_times.graded_piece(2));
    }

    #[test]
    fn vanishing_ideals_are_saturated() {
        for scheme in [
            coordinate_triangle(),
            PointScheme::fat_point(pt(1, -2, 3)),
            PointScheme::triangle([pt(1, 1, 1), pt(1, -1, 2), pt(3, 0, 1)]),
        ] {
            let ideal = scheme.vanishing_ideal().unwrap();
            assert!(ideal.saturate().equals(&ideal));
        }
    }

    #[test]
    fn hilbert_constant_is_the_length() {
        let z = PointScheme::triangle([pt(1, 2, 1), pt(0, 1, 3), pt(2, -1, 1)]);
        let h = z.vanishing_ideal().unwrap().hilbert().unwrap();
        assert_eq!(h.constant_value(), Some(rat(3)));
        let fat = PointScheme::Structured(vec![(pt(1, 1, 1), LocalKind::Fat { mult: 3 })]);
        let h = fat.vanishing_ideal().unwrap().hilbert().unwrap();
        assert_eq!(h.constant_value(), Some(rat(6)));
    }

    #[test]
    fn curvilinear_jet_scheme() {
        // tangent along x at [0:0:1]: the jet of the conic y*z = x^2
        let z = PointScheme::Structured(vec![(
            pt(0, 0, 1),
            LocalKind::curvilinear3([rat(1), rat(0), rat(0)]),
        )]);
        let ideal = z.vanishing_ideal().unwrap();
        let expect =
            GradedIdeal::from_strs(&VarSet::xyz(), &["x*y", "y^2", "y*z - x^2"]).unwrap();
        assert!(ideal.equals(&expect));
        assert_eq!(z.length().unwrap(), 3);
        assert_eq!(z.classify_stratum().unwrap(), Stratum::Generic);
        let h = ideal.hilbert().unwrap();
        assert_eq!(h.constant_value(), Some(rat(3)));
    }

    #[test]
    fn classification_of_the_three_strata() {
        assert_eq!(
            coordinate_triangle().classify_stratum().unwrap(),
            Stratum::Generic
        );
        assert_eq!(
            PointScheme::fat_point(pt(2, 1, -1))
                .classify_stratum()
                .unwrap(),
            Stratum::D5
        );
        let collinear = PointScheme::triangle([pt(0, 1, 0), pt(0, 0, 1), pt(0, 1, 1)]);
        assert_eq!(collinear.classify_stratum().unwrap(), Stratum::D3);
        let too_long = PointScheme::Structured(vec![(pt(1, 0, 0), LocalKind::Fat { mult: 3 })]);
        assert!(matches!(
            too_long.classify_stratum(),
            Err(SchemeError::LengthNot3(_))
        ));
    }

    #[test]
    fn coincident_supports_are_rejected() {
        let bad = PointScheme::Structured(vec![
            (pt(1, 0, 0), LocalKind::Reduced),
            (pt(2, 0, 0), LocalKind::Reduced),
        ]);
        assert!(matches!(
            bad.vanishing_ideal(),
            Err(SchemeError::CoincidentSupports(_))
        ));
    }

    #[test]
    fn tangent_space_is_six_dimensional() {
        let fat = PointScheme::fat_point(pt(0, 0, 1))
            .vanishing_ideal()
            .unwrap();
        assert_eq!(tangent_space_dim(&fat).unwrap(), 6);
        let triangle = coordinate_triangle().vanishing_ideal().unwrap();
        assert_eq!(tangent_space_dim(&triangle).unwrap(), 6);
        // a generic triangle, off the coordinate axes
        let z = PointScheme::triangle([pt(1, 1, 1), pt(1, -1, 2), pt(3, 0, 1)]);
        assert_eq!(
            tangent_space_dim(&z.vanishing_ideal().unwrap()).unwrap(),
            6
        );
    }

    #[test]
    fn tangent_space_rejects_bad_presentations() {
        let collinear = PointScheme::triangle([pt(0, 1, 0), pt(0, 0, 1), pt(0, 1, 1)])
            .vanishing_ideal()
            .unwrap();
        assert!(tangent_space_dim(&collinear).is_err());
    }

    #[test]
    fn raw_scheme_with_support_hint() {
        let ideal = GradedIdeal::from_strs(&VarSet::xyz(), &["x^2", "x*y", "y^2"]).unwrap();
        let raw = PointScheme::Raw {
            ideal,
            support: vec![pt(0, 0, 1)],
        };
        assert_eq!(raw.length().unwrap(), 3);
        assert_eq!(raw.classify_stratum().unwrap(), Stratum::D5);
        // a wrong support hint is caught
        let bad = PointScheme::Raw {
            ideal: GradedIdeal::from_strs(&VarSet::xyz(), &["x^2", "x*y", "y^2"]).unwrap(),
            support: vec![pt(1, 0, 0)],
        };
        assert!(matches!(
            bad.vanishing_ideal(),
            Err(SchemeError::SupportMismatch(_))
        ));
    }

    #[test]
    fn json_roundtrip() {
        let text = r#"{"points": [{"coords": ["0","0","1"], "kind": "fat", "mult": 2}]}"#;
        let json: PointSchemeJson = serde_json::from_str(text).unwrap();
        let scheme = PointScheme::from_json(&json).unwrap();
        assert_eq!(scheme.classify_stratum().unwrap(), Stratum::D5);
        let raw = r#"{"ideal": {"vars": ["x","y","z"], "gens": ["x*y","x*z","y*z"]}, "support": [["1","0","0"],["0","1","0"],["0","0","1"]]}"#;
        let json: PointSchemeJson = serde_json::from_str(raw).unwrap();
        let scheme = PointScheme::from_json(&json).unwrap();
        assert_eq!(scheme.classify_stratum().unwrap(), Stratum::Generic);
    }

    #[test]
    fn curvilinear_with_scaled_param() {
        let z = PointScheme::Structured(vec![(
            pt(0, 0, 1),
            LocalKind::Curvilinear {
                tangent: [rat(1), rat(0), rat(0)],
                length: 3,
                param: ratio(2, 3),
            },
        )]);
        let ideal = z.vanishing_ideal().unwrap();
        let expect =
            GradedIdeal::from_strs(&VarSet::xyz(), &["x*y", "y^2", "3*y*z - 2*x^2"]).unwrap();
        assert!(ideal.equals(&expect));
    }
}
