//! Exact multivariate polynomial arithmetic over the rationals.
//!
//! Polynomials are sparse maps from exponent vectors to rational coefficients
//! and are canonical by construction: zero coefficients are never stored, so
//! equality is structural. All coefficients are arbitrary-precision rationals;
//! no floating point appears anywhere in this crate.

mod parse;

pub use parse::{parse, ParseError};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Exact rational scalar used for every coefficient in the crate.
pub type Rational = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The fraction `n/d` in lowest terms. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    assert!(d != 0, "zero denominator");
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// An ordered list of variable names shared by the polynomials of one ring.
///
/// The declaration order is the variable order (first variable largest);
/// it travels with every polynomial instead of living in global state.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VarSet(Arc<Vec<String>>);

impl VarSet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        assert!(!names.is_empty(), "empty variable set");
        VarSet(Arc::new(names))
    }

    /// The default coordinate ring of the projective plane: x > y > z.
    pub fn xyz() -> Self {
        VarSet::new(["x", "y", "z"])
    }

    /// Plane coordinates plus a deformation parameter t (smallest variable).
    pub fn xyzt() -> Self {
        VarSet::new(["x", "y", "z", "t"])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// A new set with a fresh auxiliary variable prepended (largest). The
    /// chosen name avoids clashes with existing names.
    pub fn with_aux_front(&self, stem: &str) -> (VarSet, String) {
        let mut candidate = stem.to_string();
        let mut i = 0usize;
        while self.index_of(&candidate).is_some() {
            i += 1;
            candidate = format!("{stem}{i}");
        }
        let mut names = vec![candidate.clone()];
        names.extend(self.0.iter().cloned());
        (VarSet(Arc::new(names)), candidate)
    }

    /// The set with variable `i` removed.
    pub fn without(&self, i: usize) -> VarSet {
        let mut names = self.0.as_ref().clone();
        names.remove(i);
        VarSet(Arc::new(names))
    }
}

/// Exponent vector of a monomial; its length always matches the ambient
/// `VarSet`. The derived `Ord` is only the storage order of term maps, not a
/// monomial order — semantic comparisons go through [`MonomialOrder`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn constant(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial(
                self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
            ))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }
}

/// Graded reverse lexicographic comparison on bare exponent slices.
fn grevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            // smaller exponent in the last differing variable wins
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

/// A monomial order: a well-order refining divisibility.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic, the default everywhere.
    Grevlex,
    /// Pure lexicographic.
    Lex,
    /// Block order eliminating the first `k` variables: compares the degree
    /// in the first block, then grevlex inside each block.
    EliminationBlock(usize),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.0.len(), b.0.len());
        match self {
            MonomialOrder::Grevlex => grevlex_cmp(&a.0, &b.0),
            MonomialOrder::Lex => {
                for (x, y) in a.0.iter().zip(&b.0) {
                    match x.cmp(y) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::EliminationBlock(k) => {
                let k = *k;
                let da: u32 = a.0[..k].iter().sum();
                let db: u32 = b.0[..k].iter().sum();
                match da.cmp(&db) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                match grevlex_cmp(&a.0[..k], &b.0[..k]) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                grevlex_cmp(&a.0[k..], &b.0[k..])
            }
        }
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    vars: VarSet,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(vars: &VarSet) -> Self {
        Polynomial {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &VarSet, c: Rational) -> Self {
        let mut p = Polynomial::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::constant(vars.len()), c);
        }
        p
    }

    pub fn one(vars: &VarSet) -> Self {
        Polynomial::constant(vars, Rational::one())
    }

    /// The variable with the given name. Panics if the name is unknown.
    pub fn variable(vars: &VarSet, name: &str) -> Self {
        let i = vars
            .index_of(name)
            .unwrap_or_else(|| panic!("unknown variable {name}"));
        Polynomial::term(vars, Monomial::var(vars.len(), i), Rational::one())
    }

    pub fn term(vars: &VarSet, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.0.len(), vars.len(), "monomial arity mismatch");
        let mut p = Polynomial::zero(vars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(vars: &VarSet, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Polynomial::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        assert_eq!(m.0.len(), self.vars.len(), "monomial arity mismatch");
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    fn assert_same_vars(&self, other: &Polynomial) {
        assert_eq!(
            self.vars, other.vars,
            "incompatible variable sets: {:?} vs {:?}",
            self.vars.names(),
            other.vars.names()
        );
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_vars(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_vars(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_vars(other);
        let mut out = Polynomial::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        let mut out = Polynomial::zero(&self.vars);
        for (m1, c1) in &self.terms {
            out.add_term(m1.mul(m), c1 * c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::one(&self.vars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// `Some(d)` iff the polynomial is nonzero and all terms have degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(Monomial::degree);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// The sum of the terms of total degree exactly `d`.
    pub fn homogeneous_component(&self, d: u32) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Splits into nonzero homogeneous components, ascending by degree.
    pub fn homogeneous_components(&self) -> Vec<Polynomial> {
        let mut degs: Vec<u32> = self.terms.keys().map(Monomial::degree).collect();
        degs.sort_unstable();
        degs.dedup();
        degs.into_iter()
            .map(|d| self.homogeneous_component(d))
            .collect()
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e > 0 {
                let mut exps = m.0.clone();
                exps[i] -= 1;
                out.add_term(Monomial(exps), c * rat(e as i64));
            }
        }
        out
    }

    /// Substitutes the rational `value` for variable `i`; the variable stays
    /// in the ring with exponent zero.
    pub fn substitute(&self, i: usize, value: &Rational) -> Polynomial {
        let mut out = Polynomial::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            let mut exps = m.0.clone();
            exps[i] = 0;
            let mut coeff = c.clone();
            for _ in 0..e {
                coeff = &coeff * value;
            }
            out.add_term(Monomial(exps), coeff);
        }
        out
    }

    /// Evaluates at a point given by one rational per variable.
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    v = &v * &point[i];
                }
            }
            acc += v;
        }
        acc
    }

    /// Simultaneous substitution `x_i -> images[i]`; all images must live in
    /// one common ring, which becomes the ring of the result.
    pub fn substitute_all(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.vars.len());
        let target = images
            .first()
            .map(|p| p.vars.clone())
            .expect("at least one image");
        let mut out = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut v = Polynomial::constant(&target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    v = v.mul(&images[i]);
                }
            }
            out = out.add(&v);
        }
        out
    }

    /// Re-embeds into a ring with `k` fresh variables prepended.
    pub fn extend_front(&self, k: usize, target: &VarSet) -> Polynomial {
        assert_eq!(target.len(), self.vars.len() + k);
        Polynomial {
            vars: target.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut exps = vec![0u32; k];
                    exps.extend_from_slice(&m.0);
                    (Monomial(exps), c.clone())
                })
                .collect(),
        }
    }

    /// Drops variable `i`; returns `None` if it occurs with positive exponent.
    pub fn drop_var(&self, i: usize) -> Option<Polynomial> {
        if self.terms.keys().any(|m| m.0[i] > 0) {
            return None;
        }
        let vars = self.vars.without(i);
        Some(Polynomial {
            vars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut exps = m.0.clone();
                    exps.remove(i);
                    (Monomial(exps), c.clone())
                })
                .collect(),
        })
    }

    /// Leading term under `order`, or `None` for zero.
    pub fn leading(&self, order: MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    /// Terms sorted descending under `order`.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        v
    }

    /// Divides by the leading coefficient under `order`. Panics on zero.
    pub fn monic(&self, order: MonomialOrder) -> Polynomial {
        let (_, lc) = self.leading(order).expect("monic of zero polynomial");
        let inv = Rational::one() / lc.clone();
        self.scale(&inv)
    }
}

impl fmt::Display for Polynomial {
    /// Canonical printing: grevlex-descending terms with explicit `*` and `^`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms = self.sorted_terms(MonomialOrder::Grevlex);
        for (i, (m, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let factors: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(j, &e)| {
                    if e == 1 {
                        self.vars.name(j).to_string()
                    } else {
                        format!("{}^{}", self.vars.name(j), e)
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// All monomials of total degree `d` in `nvars` variables, grevlex-descending.
/// This enumeration fixes the coordinate convention for every graded piece.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    fn rec(out: &mut Vec<Monomial>, exps: &mut Vec<u32>, i: usize, rem: u32) {
        if i + 1 == exps.len() {
            exps[i] = rem;
            out.push(Monomial::new(exps.clone()));
            return;
        }
        for e in (0..=rem).rev() {
            exps[i] = e;
            rec(out, exps, i + 1, rem - e);
        }
        exps[i] = 0;
    }
    rec(&mut out, &mut exps, 0, d);
    out.sort_by(|a, b| MonomialOrder::Grevlex.cmp(b, a));
    out
}

/// Dimension of the space of degree-`d` forms in `nvars` variables.
pub fn forms_dim(nvars: usize, d: u32) -> usize {
    // C(d + nvars - 1, nvars - 1) computed exactly in small integers
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for k in 1..nvars as u128 {
        num *= d as u128 + k;
        den *= k;
    }
    (num / den) as usize
}
