//! Univariate polynomials and rational functions in one parameter `t` over
//! the exact rationals. These are the scalars of the deformation computations:
//! fractions are reduced eagerly and denominators kept monic, so equality is
//! structural and valuations at `t = 0` are read off reduced forms only.

use crate::poly::Rational;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Dense univariate polynomial, ascending coefficients, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::from_coeffs(vec![c])
    }

    pub fn one() -> Self {
        UniPoly::constant(Rational::one())
    }

    /// The parameter itself.
    pub fn t() -> Self {
        UniPoly::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn t_pow(k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = Rational::one();
        UniPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Order of vanishing at `t = 0`; `None` for the zero polynomial.
    pub fn ord0(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// Product truncated to degree `< len` (for jet computations).
    pub fn mul_trunc(&self, other: &UniPoly, len: usize) -> UniPoly {
        let mut coeffs = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|k| k * c).collect(),
        }
    }

    /// Long division: `self = q * div + r` with `deg r < deg div`.
    pub fn divrem(&self, div: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let dlead = div.coeffs.last().unwrap().clone();
        let dd = div.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![
            Rational::zero();
            self.coeffs.len().saturating_sub(div.coeffs.len()) + 1
        ];
        while rem.len() >= div.coeffs.len() && !rem.is_empty() {
            let k = rem.len() - 1;
            let factor = rem[k].clone() / dlead.clone();
            if !factor.is_zero() {
                quot[k - dd] = factor.clone();
                for (j, c) in div.coeffs.iter().enumerate() {
                    rem[k - dd + j] -= &factor * c;
                }
            }
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
            if rem.len() < div.coeffs.len() {
                break;
            }
        }
        (UniPoly::from_coeffs(quot), UniPoly::from_coeffs(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    pub fn monic(&self) -> UniPoly {
        let lead = self.coeffs.last().expect("monic of zero").clone();
        self.scale(&(Rational::one() / lead))
    }

    /// Derivative, used by squarefree computations.
    pub fn derivative(&self) -> UniPoly {
        UniPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(i.into()))
                .collect(),
        )
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "t")?,
                1 => write!(f, "{c}*t")?,
                _ if c.is_one() => write!(f, "t^{i}")?,
                _ => write!(f, "{c}*t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Reduced fraction of univariate polynomials with monic denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunction {
    num: UniPoly,
    den: UniPoly,
}

impl RationalFunction {
    pub fn new(num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RationalFunction {
                num,
                den: UniPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, _) = num.divrem(&g);
        let (den, _) = den.divrem(&g);
        let lead = den.coeffs.last().unwrap().clone();
        let inv = Rational::one() / lead;
        RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RationalFunction {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        RationalFunction::from_poly(UniPoly::constant(c))
    }

    pub fn t() -> Self {
        RationalFunction::from_poly(UniPoly::t())
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.den
    }

    /// Valuation at `t = 0`: order of vanishing of the numerator minus that
    /// of the denominator. `None` for the zero function.
    pub fn valuation0(&self) -> Option<i64> {
        let n = self.num.ord0()? as i64;
        let d = self.den.ord0().expect("nonzero denominator") as i64;
        Some(n - d)
    }

    /// Value at `t = 0` when the valuation is nonnegative.
    pub fn eval0(&self) -> Option<Rational> {
        match self.valuation0() {
            None => Some(Rational::zero()),
            Some(v) if v >= 0 => {
                // reduced fraction: denominator cannot vanish at 0 unless the
                // valuation is negative
                let d0 = self.den.coeff(0);
                assert!(!d0.is_zero(), "unreduced fraction");
                Some(self.num.coeff(0) / d0)
            }
            _ => None,
        }
    }

    /// Multiplies by `t^k` (negative `k` divides).
    pub fn mul_t_pow(&self, k: i64) -> RationalFunction {
        if k >= 0 {
            RationalFunction::new(self.num.mul(&UniPoly::t_pow(k as usize)), self.den.clone())
        } else {
            RationalFunction::new(
                self.num.clone(),
                self.den.mul(&UniPoly::t_pow((-k) as usize)),
            )
        }
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction::from_poly(UniPoly::zero())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        RationalFunction::from_poly(UniPoly::one())
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: Self) -> Self {
        RationalFunction::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: Self) -> Self {
        RationalFunction::new(
            self.num.mul(&rhs.den).sub(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: Self) -> Self {
        RationalFunction::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl Div for RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.is_zero(), "division by zero");
        RationalFunction::new(self.num.mul(&rhs.den), self.den.mul(&rhs.num))
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den,
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == UniPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
