//! Graded ideals of the coordinate ring of the projective plane: graded
//! pieces, Gröbner bases, membership, saturation, Hilbert functions.

mod groebner;
mod hilbert;

pub use groebner::{buchberger, normal_form, GroebnerBasis};
pub use hilbert::{HilbertData, HilbertError};

use crate::linalg::Subspace;
use crate::poly::{
    monomials_of_degree, parse, Monomial, MonomialOrder, ParseError, Polynomial, Rational, VarSet,
};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IdealError {
    #[error("generator `{0}` is not homogeneous")]
    NonHomogeneous(String),
    #[error("ambient rings differ")]
    RingMismatch,
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A homogeneous ideal given by a list of homogeneous generators. The
/// generating set is kept exactly as constructed; no automatic
/// minimalization happens anywhere.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedIdeal {
    vars: VarSet,
    gens: Vec<Polynomial>,
}

impl GradedIdeal {
    /// Builds an ideal from homogeneous generators; zero generators are
    /// dropped, everything else must be homogeneous.
    pub fn new(vars: &VarSet, gens: Vec<Polynomial>) -> Result<Self, IdealError> {
        let mut kept = Vec::new();
        for g in gens {
            if g.vars() != vars {
                return Err(IdealError::RingMismatch);
            }
            if g.is_zero() {
                continue;
            }
            if g.homogeneous_degree().is_none() {
                return Err(IdealError::NonHomogeneous(g.to_string()));
            }
            kept.push(g);
        }
        Ok(GradedIdeal {
            vars: vars.clone(),
            gens: kept,
        })
    }

    pub fn zero(vars: &VarSet) -> Self {
        GradedIdeal {
            vars: vars.clone(),
            gens: Vec::new(),
        }
    }

    pub fn from_strs(vars: &VarSet, gens: &[&str]) -> Result<Self, IdealError> {
        let parsed = gens
            .iter()
            .map(|s| parse(s, vars))
            .collect::<Result<Vec<_>, _>>()?;
        GradedIdeal::new(vars, parsed)
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.gens
            .iter()
            .filter_map(Polynomial::homogeneous_degree)
            .max()
            .unwrap_or(0)
    }

    /// The degree-`d` piece as a subspace of the space of degree-`d` forms,
    /// in grevlex-descending monomial coordinates: the span of `g * m` over
    /// generators `g` and monomials `m` of degree `d - deg g`.
    pub fn graded_piece(&self, d: u32) -> Subspace {
        let basis = monomials_of_degree(self.vars.len(), d);
        let index: BTreeMap<&Monomial, usize> =
            basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows = Vec::new();
        for g in &self.gens {
            let gd = g.homogeneous_degree().expect("homogeneous generator");
            if gd > d {
                continue;
            }
            for m in monomials_of_degree(self.vars.len(), d - gd) {
                let prod = g.mul_term(&m, &num_traits::One::one());
                rows.push(poly_to_vec(&prod, &index, basis.len()));
            }
        }
        Subspace::from_rows(basis.len(), rows)
    }

    /// Dimension of the degree-`d` piece, through fraction-free integer
    /// elimination; agrees with `graded_piece(d).dim()` and is much faster
    /// on the Hilbert windows.
    pub fn graded_piece_dim(&self, d: u32) -> usize {
        let basis = monomials_of_degree(self.vars.len(), d);
        let index: BTreeMap<&Monomial, usize> =
            basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows = Vec::new();
        for g in &self.gens {
            let gd = g.homogeneous_degree().expect("homogeneous generator");
            if gd > d {
                continue;
            }
            for m in monomials_of_degree(self.vars.len(), d - gd) {
                let prod = g.mul_term(&m, &num_traits::One::one());
                rows.push(crate::linalg::clear_denominators(&poly_to_vec(
                    &prod,
                    &index,
                    basis.len(),
                )));
            }
        }
        crate::linalg::integer_rank(rows)
    }

    /// Product ideal: all pairwise products of generators.
    pub fn product(&self, other: &GradedIdeal) -> GradedIdeal {
        assert_eq!(self.vars, other.vars, "ambient rings differ");
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        GradedIdeal {
            vars: self.vars.clone(),
            gens,
        }
    }

    /// `k`-th power; pairwise products, no minimalization.
    pub fn power(&self, k: u32) -> GradedIdeal {
        assert!(k >= 1, "power must be positive");
        let mut out = self.clone();
        for _ in 1..k {
            out = out.product(self);
        }
        out
    }

    /// Sum of ideals: union of the generator lists.
    pub fn sum(&self, other: &GradedIdeal) -> GradedIdeal {
        assert_eq!(self.vars, other.vars, "ambient rings differ");
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        GradedIdeal {
            vars: self.vars.clone(),
            gens,
        }
    }

    /// Reduced Gröbner basis for the given order.
    pub fn groebner(&self, order: MonomialOrder) -> GroebnerBasis {
        GroebnerBasis::new(&self.gens, order)
    }

    /// Normal form against the reduced grevlex basis.
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        self.groebner(MonomialOrder::Grevlex).normal_form(p)
    }

    /// Ideal membership via Gröbner normal form.
    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Equality as ideals: identical reduced grevlex bases.
    pub fn equals(&self, other: &GradedIdeal) -> bool {
        self.vars == other.vars
            && self.groebner(MonomialOrder::Grevlex).polys()
                == other.groebner(MonomialOrder::Grevlex).polys()
    }

    /// The colon ideal `I : v^∞` by the localization trick: adjoin an
    /// auxiliary variable `w`, add `w*v - 1`, eliminate `w`.
    pub fn saturate_wrt(&self, var: usize) -> GradedIdeal {
        let (ext, _) = self.vars.with_aux_front("w");
        let mut gens: Vec<Polynomial> = self
            .gens
            .iter()
            .map(|g| g.extend_front(1, &ext))
            .collect();
        let w = Polynomial::variable(&ext, ext.name(0));
        let v = Polynomial::variable(&ext, ext.name(var + 1));
        let one = Polynomial::one(&ext);
        gens.push(w.mul(&v).sub(&one));
        self.eliminate_first(&ext, gens)
    }

    /// Intersection with another homogeneous ideal via the auxiliary
    /// parameter trick: eliminate `u` from `u*I + (1-u)*J`.
    pub fn intersect(&self, other: &GradedIdeal) -> GradedIdeal {
        assert_eq!(self.vars, other.vars, "ambient rings differ");
        let (ext, _) = self.vars.with_aux_front("u");
        let u = Polynomial::variable(&ext, ext.name(0));
        let one_minus_u = Polynomial::one(&ext).sub(&u);
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(u.mul(&g.extend_front(1, &ext)));
        }
        for g in &other.gens {
            gens.push(one_minus_u.mul(&g.extend_front(1, &ext)));
        }
        self.eliminate_first(&ext, gens)
    }

    /// Computes a Gröbner basis under a block order eliminating the first
    /// (auxiliary) variable, keeps the aux-free elements, and splits them
    /// into homogeneous components (legal because the eliminated ideal is
    /// homogeneous whenever the inputs came from homogeneous ideals).
    fn eliminate_first(&self, _ext: &VarSet, gens: Vec<Polynomial>) -> GradedIdeal {
        let gb = buchberger(&gens, MonomialOrder::EliminationBlock(1));
        let mut kept = Vec::new();
        for g in gb {
            if let Some(p) = g.drop_var(0) {
                for comp in p.homogeneous_components() {
                    kept.push(comp);
                }
            }
        }
        let reduced = buchberger(&kept, MonomialOrder::Grevlex);
        GradedIdeal {
            vars: self.vars.clone(),
            gens: reduced,
        }
    }

    /// Saturation with respect to the irrelevant ideal: the intersection of
    /// `I : v^∞` over all variables `v`, intersected pairwise.
    pub fn saturate(&self) -> GradedIdeal {
        let mut acc: Option<GradedIdeal> = None;
        for v in 0..self.vars.len() {
            let s = self.saturate_wrt(v);
            acc = Some(match acc {
                None => s,
                Some(prev) => prev.intersect(&s),
            });
        }
        let result = acc.expect("at least one variable");
        // canonical generator list
        GradedIdeal {
            vars: self.vars.clone(),
            gens: buchberger(&result.gens, MonomialOrder::Grevlex),
        }
    }

    pub fn hilbert(&self) -> Result<HilbertData, HilbertError> {
        hilbert::hilbert(self)
    }
}

/// Coefficient vector of a homogeneous polynomial in the coordinates of the
/// grevlex-descending monomial basis.
pub fn poly_to_vec(
    p: &Polynomial,
    index: &BTreeMap<&Monomial, usize>,
    len: usize,
) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); len];
    for (m, c) in p.terms() {
        let i = *index.get(m).expect("monomial of the expected degree");
        v[i] = c.clone();
    }
    v
}

/// Inverse of [`poly_to_vec`] for a fixed degree.
pub fn vec_to_poly(v: &[Rational], vars: &VarSet, d: u32) -> Polynomial {
    let basis = monomials_of_degree(vars.len(), d);
    assert_eq!(v.len(), basis.len());
    Polynomial::from_terms(
        vars,
        basis.into_iter().zip(v.iter().cloned()),
    )
}

/// Wire format for ideals: `{"vars": [...], "gens": ["x^2", ...]}` using the
/// polynomial expression grammar.
#[derive(Serialize, Deserialize)]
pub struct IdealJson {
    pub vars: Vec<String>,
    pub gens: Vec<String>,
}

impl GradedIdeal {
    pub fn to_json(&self) -> IdealJson {
        IdealJson {
            vars: self.vars.names().to_vec(),
            gens: self.gens.iter().map(|g| g.to_string()).collect(),
        }
    }

    pub fn from_json(json: &IdealJson) -> Result<Self, IdealError> {
        let vars = VarSet::new(json.vars.iter().cloned());
        let gens = json
            .gens
            .iter()
            .map(|s| parse(s, &vars))
            .collect::<Result<Vec<_>, _>>()?;
        GradedIdeal::new(&vars, gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn ideal(gens: &[&str]) -> GradedIdeal {
        GradedIdeal::from_strs(&VarSet::xyz(), gens).unwrap()
    }

    #[test]
    fn graded_piece_of_linear_prime() {
        let i = ideal(&["x", "y"]);
        assert_eq!(i.graded_piece(1).dim(), 2);
        assert_eq!(i.graded_piece(0).dim(), 0);
    }

    #[test]
    fn quartics_singular_at_a_point_form_p11() {
        // I_q^2 at q = [0:0:1]: degree-4 piece has dimension 12
        let i = ideal(&["x^2", "x*y", "y^2"]);
        assert_eq!(i.graded_piece(4).dim(), 12);
        // independent oracle: monomials x^a y^b z^c with a + b >= 2
        let count = monomials_of_degree(3, 4)
            .iter()
            .filter(|m| m.exp(0) + m.exp(1) >= 2)
            .count();
        assert_eq!(count, 12);
    }

    #[test]
    fn fat_fourth_power_piece_is_sym4_of_the_pencil() {
        let i = ideal(&["x", "y"]).power(4);
        assert_eq!(i.graded_piece(4).dim(), 5);
        let count = monomials_of_degree(3, 4)
            .iter()
            .filter(|m| m.exp(0) + m.exp(1) >= 4)
            .count();
        assert_eq!(count, 5);
    }

    #[test]
    fn square_of_linear_prime() {
        let sq = ideal(&["x", "y"]).power(2);
        let expect = ideal(&["x^2", "x*y", "y^2"]);
        assert!(sq.equals(&expect));
        assert_eq!(sq.generators().len(), 4); // pairwise products, kept as given
    }

    #[test]
    fn triangle_square_has_six_generators() {
        let sq = ideal(&["x*y", "x*z", "y*z"]).power(2);
        assert_eq!(sq.generators().len(), 9);
        assert_eq!(sq.graded_piece(4).dim(), 6);
    }

    #[test]
    fn containment_of_graded_pieces_follows_generators() {
        let i = ideal(&["x*y", "x*z", "y*z"]);
        let sq = i.power(2);
        for d in 2..=8 {
            assert!(sq.graded_piece(d).is_subspace_of(&i.graded_piece(d)));
        }
    }

    #[test]
    fn json_roundtrip() {
        let i = ideal(&["x^2", "x*y", "y^2 - x*z"]);
        let j = i.to_json();
        let back = GradedIdeal::from_json(&j).unwrap();
        assert_eq!(back, i);
        let text = serde_json::to_string(&j).unwrap();
        assert!(text.contains("\"vars\""));
    }

    #[test]
    fn integer_rank_agrees_with_rational_rank() {
        let corpus = [
            ideal(&["x*y", "x*z", "y*z"]).power(2),
            ideal(&["x^2", "x*y", "y^2 - x*z"]),
            GradedIdeal::zero(&VarSet::xyz()),
        ];
        for i in &corpus {
            for d in 0..=8 {
                assert_eq!(i.graded_piece_dim(d), i.graded_piece(d).dim(), "degree {d}");
            }
        }
    }

    #[test]
    fn vec_poly_roundtrip() {
        let p = crate::poly::parse("x^2 - 2*y*z", &VarSet::xyz()).unwrap();
        let basis = monomials_of_degree(3, 2);
        let index: BTreeMap<&Monomial, usize> =
            basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let v = poly_to_vec(&p, &index, basis.len());
        assert_eq!(v[0], rat(1));
        assert_eq!(vec_to_poly(&v, &VarSet::xyz(), 2), p);
    }
}
