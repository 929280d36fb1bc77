//! Plane-curve singularity analysis (multiplicity, tangent cone, ordinary
//! triple points), canonical rational-quartic generation, the degree-genus
//! node count, and the recursion for counting rational plane curves.

use crate::linalg::{Matrix, UniPoly};
use crate::poly::{
    monomials_of_degree, Monomial, Polynomial, Rational, VarSet,
};
use crate::scheme::ProjPoint;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CurveError {
    #[error("defining polynomial must be nonzero")]
    ZeroCurve,
    #[error("defining polynomial must be homogeneous")]
    NotHomogeneous,
    #[error("tangent data must not vanish")]
    ZeroTangentData,
}

/// A plane curve cut out by a nonzero homogeneous polynomial in x, y, z.
#[derive(Clone, Debug)]
pub struct PlaneCurve {
    pub poly: Polynomial,
    pub degree: u32,
}

impl PlaneCurve {
    pub fn new(poly: Polynomial) -> Result<Self, CurveError> {
        if poly.is_zero() {
            return Err(CurveError::ZeroCurve);
        }
        let degree = poly
            .homogeneous_degree()
            .ok_or(CurveError::NotHomogeneous)?;
        Ok(PlaneCurve { poly, degree })
    }
}

/// Local classification at a point, keyed by multiplicity and the number of
/// distinct tangent lines:
/// (1) smooth; (2, 2) node; (2, 1) non-reduced double point, reported
/// without resolving the exact type; (3, 3) ordinary triple point D4;
/// (3, <3) non-reduced triple; (>=4) higher.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum SingClass {
    #[serde(rename = "not-on-curve")]
    NotOnCurve,
    #[serde(rename = "smooth")]
    Smooth,
    #[serde(rename = "A1-node")]
    A1Node,
    #[serde(rename = "non-reduced-double")]
    NonReducedDouble,
    #[serde(rename = "D4-ordinary-triple")]
    D4OrdinaryTriple,
    #[serde(rename = "triple-non-reduced")]
    TripleNonReduced,
    #[serde(rename = "higher")]
    Higher,
}

/// Multiplicity, tangent cone and classification of a curve at a point.
#[derive(Clone, Debug, Serialize)]
pub struct LocalSingularityReport {
    pub point: [String; 3],
    pub multiplicity: u32,
    /// The lowest graded piece in moved coordinates, monic in grevlex;
    /// a binary form in x, y.
    pub tangent_cone: String,
    pub distinct_tangents: u32,
    pub class: SingClass,
}

/// A deterministic rational change of coordinates carrying [0:0:1] to `q`:
/// the last column is `q`, the other two are standard vectors.
pub fn move_point_matrix(q: &ProjPoint) -> Matrix<Rational> {
    let coords = q.coords();
    let pivot = coords
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero point");
    let mut cols: Vec<[Rational; 3]> = Vec::new();
    for i in 0..3 {
        if i == pivot {
            continue;
        }
        let mut e = [Rational::zero(), Rational::zero(), Rational::zero()];
        e[i] = Rational::one();
        cols.push(e);
    }
    cols.push(coords.clone());
    let mut m = Matrix::zeros(3, 3);
    for (j, col) in cols.iter().enumerate() {
        for i in 0..3 {
            m.set(i, j, col[i].clone());
        }
    }
    m
}

/// Substitutes the columns of `m` into `f`: `x_i -> sum_j m[i][j] x_j`.
pub fn substitute_matrix(f: &Polynomial, m: &Matrix<Rational>) -> Polynomial {
    let vars = f.vars().clone();
    let images: Vec<Polynomial> = (0..3)
        .map(|i| {
            let mut acc = Polynomial::zero(&vars);
            for j in 0..3 {
                let v = Polynomial::variable(&vars, vars.name(j));
                acc = acc.add(&v.scale(m.get(i, j)));
            }
            acc
        })
        .collect();
    f.substitute_all(&images)
}

/// Decomposes `f = sum_k z^(d-k) g_k(x, y)` after moving `q` to [0:0:1];
/// the multiplicity is the least `k` with `g_k != 0` and the tangent cone is
/// that `g_k`.
pub fn multiplicity_and_cone(c: &PlaneCurve, q: &ProjPoint) -> (u32, Polynomial) {
    let m = move_point_matrix(q);
    let moved = substitute_matrix(&c.poly, &m);
    let vars = moved.vars().clone();
    let zi = vars.index_of("z").expect("plane coordinates");
    let d = c.degree;
    for k in 0..=d {
        // terms with z-exponent exactly d - k form z^(d-k) * g_k
        let gk = Polynomial::from_terms(
            &vars,
            moved
                .terms()
                .filter(|(mon, _)| mon.exp(zi) == d - k)
                .map(|(mon, coeff)| {
                    let mut exps = mon.exps().to_vec();
                    exps[zi] = 0;
                    (Monomial::new(exps), coeff.clone())
                }),
        );
        if !gk.is_zero() {
            return (k, gk);
        }
    }
    unreachable!("nonzero curve has a nonzero graded piece")
}

/// Number of distinct projective roots of a nonzero binary form in x, y:
/// the squarefree-part degree of the dehomogenization plus one if y divides
/// the form (the root at infinity counts once).
pub fn distinct_tangents(g: &Polynomial) -> u32 {
    assert!(!g.is_zero(), "zero binary form");
    let vars = g.vars().clone();
    let xi = vars.index_of("x").expect("x");
    let yi = vars.index_of("y").expect("y");
    let deg = g.homogeneous_degree().expect("binary form");
    let y_order = g
        .terms()
        .map(|(m, _)| m.exp(yi))
        .min()
        .expect("nonzero form");
    // dehomogenize: p(x) = g(x, 1)
    let mut coeffs = vec![Rational::zero(); deg as usize + 1];
    for (m, c) in g.terms() {
        coeffs[m.exp(xi) as usize] += c.clone();
    }
    let p = UniPoly::from_coeffs(coeffs);
    let squarefree_deg = match p.degree() {
        None | Some(0) => 0,
        Some(d) => {
            let gcd = p.gcd(&p.derivative());
            d - gcd.degree().unwrap_or(0)
        }
    };
    squarefree_deg as u32 + u32::from(y_order >= 1)
}

fn classify(multiplicity: u32, tangents: u32) -> SingClass {
    match (multiplicity, tangents) {
        (0, _) => SingClass::NotOnCurve,
        (1, _) => SingClass::Smooth,
        (2, 2) => SingClass::A1Node,
        (2, _) => SingClass::NonReducedDouble,
        (3, 3) => SingClass::D4OrdinaryTriple,
        (3, _) => SingClass::TripleNonReduced,
        _ => SingClass::Higher,
    }
}

/// Full local report at a point.
pub fn local_report(c: &PlaneCurve, q: &ProjPoint) -> LocalSingularityReport {
    let (multiplicity, cone) = multiplicity_and_cone(c, q);
    let (tangents, cone_str) = if multiplicity == 0 {
        (0, "1".to_string())
    } else {
        (
            distinct_tangents(&cone),
            cone.monic(crate::poly::MonomialOrder::Grevlex).to_string(),
        )
    };
    LocalSingularityReport {
        point: [
            q.coords()[0].to_string(),
            q.coords()[1].to_string(),
            q.coords()[2].to_string(),
        ],
        multiplicity,
        tangent_cone: cone_str,
        distinct_tangents: tangents,
        class: classify(multiplicity, tangents),
    }
}

/// `(d-1)(d-2)/2`, the genus of a smooth plane curve of degree `d` and the
/// node count of a rational one.
pub fn genus_defect(d: u32) -> u32 {
    let d = d as i64;
    ((d - 1) * (d - 2) / 2) as u32
}

pub fn expected_nodes(d: u32) -> u32 {
    genus_defect(d)
}

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n || n < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Summation order for the recursion; all orders must agree exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumOrder {
    Forward,
    Reversed,
    Symmetrized,
}

/// Counts of degree-d rational plane curves through 3d-1 general points,
/// from the recursion
/// `N_d = sum_{d1+d2=d} N_{d1} N_{d2} d1² d2 (d2 C(3d-4, 3d1-2) - d1 C(3d-4, 3d1-1))`
/// with `N_1 = 1`.
pub fn kontsevich(dmax: u32) -> Vec<BigInt> {
    kontsevich_with_order(dmax, SumOrder::Forward)
}

pub fn kontsevich_with_order(dmax: u32, order: SumOrder) -> Vec<BigInt> {
    assert!(dmax >= 1);
    let mut n: Vec<BigInt> = vec![BigInt::one()]; // N_1
    for d in 2..=dmax as i64 {
        let summand = |d1: i64| -> BigInt {
            let d2 = d - d1;
            let nd1 = &n[(d1 - 1) as usize];
            let nd2 = &n[(d2 - 1) as usize];
            nd1 * nd2
                * BigInt::from(d1 * d1 * d2)
                * (BigInt::from(d2) * binomial(3 * d - 4, 3 * d1 - 2)
                    - BigInt::from(d1) * binomial(3 * d - 4, 3 * d1 - 1))
        };
        let total: BigInt = match order {
            SumOrder::Forward => (1..d).map(summand).sum(),
            SumOrder::Reversed => (1..d).rev().map(summand).sum(),
            SumOrder::Symmetrized => {
                // sum of S(d1, d2) + S(d2, d1) halves to the forward sum
                let doubled: BigInt = (1..d).map(|d1| summand(d1) + summand(d - d1)).sum();
                doubled / BigInt::from(2)
            }
        };
        n.push(total);
    }
    n
}

/// The canonical quartic
/// `u0 x⁴ + u1 x³y + u2 x²y² + u3 xy³ + u4 y⁴ + k(t0 zx³ + t1 zx²y + t2 zxy² + t3 zy³)`.
/// Its multiplicity at [0:0:1] is at least 3, and exactly 3 iff `k (t) != 0`.
pub fn canonical_quartic(
    tdata: &[Rational; 4],
    u: &[Rational; 5],
    k: &Rational,
) -> Result<PlaneCurve, CurveError> {
    if tdata.iter().all(Zero::is_zero) {
        return Err(CurveError::ZeroTangentData);
    }
    let vars = VarSet::xyz();
    let quartic_monos: Vec<Monomial> = (0..=4)
        .map(|i| Monomial::new(vec![4 - i, i, 0]))
        .collect();
    let z_monos: Vec<Monomial> = (0..=3).map(|i| Monomial::new(vec![3 - i, i, 1])).collect();
    let mut f = Polynomial::zero(&vars);
    for (m, c) in quartic_monos.iter().zip(u) {
        f = f.add(&Polynomial::term(&vars, m.clone(), c.clone()));
    }
    for (m, c) in z_monos.iter().zip(tdata) {
        f = f.add(&Polynomial::term(&vars, m.clone(), k * c));
    }
    PlaneCurve::new(f)
}

/// All quartic monomials, grevlex-descending; fixes coordinates for reports.
pub fn quartic_monomials() -> Vec<Monomial> {
    monomials_of_degree(3, 4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse, rat, ratio};

    fn curve(s: &str) -> PlaneCurve {
        PlaneCurve::new(parse(s, &VarSet::xyz()).unwrap()).unwrap()
    }

    fn pt(a: i64, b: i64, c: i64) -> ProjPoint {
        ProjPoint::from_ints(a, b, c).unwrap()
    }

    #[test]
    fn smooth_point_of_a_line() {
        let c = curve("x");
        let r = local_report(&c, &pt(0, 1, 0));
        assert_eq!(r.multiplicity, 1);
        assert_eq!(r.class, SingClass::Smooth);
    }

    #[test]
    fn singular_iff_linear_jet_vanishes() {
        // f = g3 + z g2 with no z² g1 term: multiplicity >= 2 at [0:0:1]
        let c = curve("x^3 + y^3 + z*x*y");
        let r = local_report(&c, &pt(0, 0, 1));
        assert!(r.multiplicity >= 2);
        assert_eq!(r.class, SingClass::A1Node);
        // with a z² g1 term the curve is smooth there
        let c = curve("x^3 + y^3 + z*x*y + z^2*x");
        let r = local_report(&c, &pt(0, 0, 1));
        assert_eq!(r.multiplicity, 1);
    }

    #[test]
    fn rose_quartic_has_an_ordinary_triple_point() {
        // (x² + y²)² = z(3x²y - y³), homogenized
        let c = curve("x^4 + 2*x^2*y^2 + y^4 - 3*x^2*y*z + y^3*z");
        let r = local_report(&c, &pt(0, 0, 1));
        assert_eq!(r.multiplicity, 3);
        assert_eq!(r.distinct_tangents, 3);
        assert_eq!(r.class, SingClass::D4OrdinaryTriple);
        // tangent cone proportional to 3x²y - y³
        let cone = parse(&r.tangent_cone, &VarSet::xyz()).unwrap();
        let reference = parse("3*x^2*y - y^3", &VarSet::xyz()).unwrap();
        assert_eq!(cone.scale(&rat(3)), reference);
    }

    #[test]
    fn tangent_counts() {
        let vars = VarSet::xyz();
        assert_eq!(distinct_tangents(&parse("x*y", &vars).unwrap()), 2);
        assert_eq!(distinct_tangents(&parse("x^2", &vars).unwrap()), 1);
        assert_eq!(distinct_tangents(&parse("3*x^2*y - y^3", &vars).unwrap()), 3);
        assert_eq!(distinct_tangents(&parse("y^2", &vars).unwrap()), 1);
        // x² + y² has two conjugate roots, counted over the closure
        assert_eq!(distinct_tangents(&parse("x^2 + y^2", &vars).unwrap()), 2);
    }

    #[test]
    fn genus_defect_values() {
        assert_eq!(genus_defect(4), 3);
        assert_eq!(genus_defect(3), 1);
        assert_eq!(genus_defect(1), 0);
        assert_eq!(expected_nodes(4), 3);
    }

    #[test]
    fn curve_counts() {
        let n = kontsevich(5);
        assert_eq!(n[0], BigInt::from(1));
        assert_eq!(n[1], BigInt::from(1));
        assert_eq!(n[2], BigInt::from(12));
        assert_eq!(n[3], BigInt::from(620));
        // N5 is pinned by the recursion itself and cross-checked by
        // reordering the summation
        assert_eq!(n[4], BigInt::from(87304u64));
        for order in [SumOrder::Reversed, SumOrder::Symmetrized] {
            assert_eq!(kontsevich_with_order(5, order), n);
        }
    }

    #[test]
    fn canonical_quartic_multiplicities() {
        let zero5 = [rat(0), rat(0), rat(0), rat(0), rat(0)];
        let t1000 = [rat(1), rat(0), rat(0), rat(0)];
        // u = 0, k = 1: z x³, multiplicity 3
        let c = canonical_quartic(&t1000, &zero5, &rat(1)).unwrap();
        assert_eq!(c.poly, parse("z*x^3", &VarSet::xyz()).unwrap());
        assert_eq!(local_report(&c, &pt(0, 0, 1)).multiplicity, 3);
        // k = 0, generic u: multiplicity 4
        let u = [rat(1), rat(2), ratio(1, 2), rat(0), rat(3)];
        let c = canonical_quartic(&t1000, &u, &rat(0)).unwrap();
        assert_eq!(local_report(&c, &pt(0, 0, 1)).multiplicity, 4);
        // generic everything: multiplicity exactly 3, three tangents
        let t = [rat(1), rat(1), rat(-1), rat(2)];
        let c = canonical_quartic(&t, &u, &rat(1)).unwrap();
        let r = local_report(&c, &pt(0, 0, 1));
        assert_eq!(r.multiplicity, 3);
        assert_eq!(r.class, SingClass::D4OrdinaryTriple);
        // zero tangent data is rejected
        let zt = [rat(0), rat(0), rat(0), rat(0)];
        assert!(canonical_quartic(&zt, &u, &rat(1)).is_err());
    }

    #[test]
    fn multiplicity_is_invariant_under_moving_the_point() {
        // the same triple point moved to [1:1:1]
        let c = curve("x^4 + 2*x^2*y^2 + y^4 - 3*x^2*y*z + y^3*z");
        let m = Matrix::from_rows(vec![
            vec![rat(1), rat(0), rat(1)],
            vec![rat(0), rat(1), rat(1)],
            vec![rat(0), rat(0), rat(1)],
        ]);
        // f(Mx) vanishes at M⁻¹ q with the same multiplicity
        let moved = PlaneCurve::new(substitute_matrix(&c.poly, &m)).unwrap();
        let q = pt(-1, -1, 1); // M⁻¹ [0:0:1]
        let r = local_report(&moved, &q);
        assert_eq!(r.multiplicity, 3);
        assert_eq!(r.distinct_tangents, 3);
    }

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(0, 0), BigInt::one());
    }
}
