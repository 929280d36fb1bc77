//! Explicit verification of `Sym²(Sym²V) ≅ Sym⁴V ⊕ Sym²(∧²V)` for a
//! 3-dimensional `V`, through the multiplication matrix and the wedge-square
//! embedding.
//!
//! Basis conventions (all deterministic): the 6 degree-2 monomials are taken
//! grevlex-descending (x², xy, y², xz, yz, z²); the 21 basis elements of the
//! formal symmetric square are the unordered pairs {m_i, m_j} with i ≤ j in
//! lexicographic pair order; ∧²V has the basis x∧y, x∧z, y∧z.

use crate::linalg::{Matrix, Subspace};
use crate::poly::{monomials_of_degree, Monomial, Polynomial, Rational, VarSet};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Index pairs (i <= j) over the 6 conic monomials, in lexicographic order.
pub fn pair_basis() -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(21);
    for i in 0..6 {
        for j in i..6 {
            out.push((i, j));
        }
    }
    out
}

fn pair_index() -> BTreeMap<(usize, usize), usize> {
    pair_basis()
        .into_iter()
        .enumerate()
        .map(|(k, p)| (p, k))
        .collect()
}

/// Coordinates in the 21-dimensional formal symmetric square of the product
/// of two conics, expanded bilinearly.
pub fn expand_pair(a: &Polynomial, b: &Polynomial) -> Vec<Rational> {
    let conics = monomials_of_degree(3, 2);
    let index = pair_index();
    let av: Vec<Rational> = conics.iter().map(|m| a.coefficient(m)).collect();
    let bv: Vec<Rational> = conics.iter().map(|m| b.coefficient(m)).collect();
    let mut out = vec![Rational::zero(); 21];
    for i in 0..6 {
        for j in 0..6 {
            let c = &av[i] * &bv[j];
            if c.is_zero() {
                continue;
            }
            let key = if i <= j { (i, j) } else { (j, i) };
            out[index[&key]] += c;
        }
    }
    out
}

/// The multiplication matrix `Sym²(Sym²V) -> Sym⁴V` (15 x 21): the pair
/// {m_i, m_j} goes to the quartic monomial m_i * m_j.
pub fn mult_map() -> Matrix<Rational> {
    let vars = VarSet::xyz();
    let conics = monomials_of_degree(3, 2);
    let quartics = monomials_of_degree(3, 4);
    let qindex: BTreeMap<&Monomial, usize> =
        quartics.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut m = Matrix::zeros(15, 21);
    for (col, (i, j)) in pair_basis().into_iter().enumerate() {
        let prod = conics[i].mul(&conics[j]);
        m.set(qindex[&prod], col, Rational::one());
    }
    let _ = vars;
    m
}

/// The embedding `Sym²(∧²V) -> Sym²(Sym²V)` (21 x 6) given on decomposables
/// by `(u∧v)·(w∧z) -> (u·w)·(v·z) - (u·z)·(v·w)`.
pub fn wedge_embedding() -> Matrix<Rational> {
    // ∧²V basis as ordered index pairs over (x, y, z)
    let wedges: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];
    let conics = monomials_of_degree(3, 2);
    let cindex: BTreeMap<&Monomial, usize> =
        conics.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let pindex = pair_index();
    let var_product = |a: usize, b: usize| -> usize {
        let mut exps = vec![0u32; 3];
        exps[a] += 1;
        exps[b] += 1;
        cindex[&Monomial::new(exps)]
    };
    let mut m: Matrix<Rational> = Matrix::zeros(21, 6);
    let mut col = 0;
    for a in 0..3 {
        for b in a..3 {
            let (u, v) = wedges[a];
            let (w, z) = wedges[b];
            // (u·w)·(v·z) - (u·z)·(v·w)
            let plus = {
                let (p, q) = (var_product(u, w), var_product(v, z));
                pindex[&if p <= q { (p, q) } else { (q, p) }]
            };
            let minus = {
                let (p, q) = (var_product(u, z), var_product(v, w));
                pindex[&if p <= q { (p, q) } else { (q, p) }]
            };
            let cur = m.get(plus, col).clone() + Rational::one();
            m.set(plus, col, cur);
            let cur = m.get(minus, col).clone() - Rational::one();
            m.set(minus, col, cur);
            col += 1;
        }
    }
    m
}

/// Labels the Sym²(∧²V) basis through the cyclic identification
/// x∧y -> z*, y∧z -> x*, z∧x -> y* (so x∧z carries a sign).
pub fn dual_labels() -> Vec<String> {
    let name = |w: usize| -> (&'static str, i32) {
        match w {
            0 => ("z*", 1),  // x∧y
            1 => ("y*", -1), // x∧z = -(z∧x)
            2 => ("x*", 1),  // y∧z
            _ => unreachable!(),
        }
    };
    let mut out = Vec::new();
    for a in 0..3 {
        for b in a..3 {
            let (na, sa) = name(a);
            let (nb, sb) = name(b);
            let sign = if sa * sb < 0 { "-" } else { "" };
            out.push(format!("{sign}{na}·{nb}"));
        }
    }
    out
}

/// Image of the embedding and kernel of the multiplication as canonical
/// subspaces of the 21-dimensional space.
pub fn decomposition_subspaces() -> (Subspace, Subspace) {
    let kernel = mult_map().kernel();
    let image = wedge_embedding().column_space();
    (image, kernel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse, rat};

    #[test]
    fn dimensions_21_15_6() {
        assert_eq!(pair_basis().len(), 21);
        let m = mult_map();
        assert_eq!((m.nrows(), m.ncols()), (15, 21));
        assert_eq!(m.rank(), 15);
        assert_eq!(m.kernel().dim(), 6);
        let w = wedge_embedding();
        assert_eq!((w.nrows(), w.ncols()), (21, 6));
        assert_eq!(w.rank(), 6);
    }

    #[test]
    fn composition_vanishes_and_image_is_kernel() {
        let comp = mult_map().matmul(&wedge_embedding());
        assert_eq!(comp, Matrix::zeros(15, 6));
        let (image, kernel) = decomposition_subspaces();
        assert_eq!(image, kernel);
    }

    #[test]
    fn the_worked_identity() {
        // (x∧y)·(x∧y) = x²·y² - (xy)·(xy)
        let w = wedge_embedding();
        let col: Vec<Rational> = (0..21).map(|i| w.get(i, 0).clone()).collect();
        let index = pair_index();
        // conic order: x²=0, xy=1, y²=2, xz=3, yz=4, z²=5
        let mut expect = vec![rat(0); 21];
        expect[index[&(0, 2)]] = rat(1);
        expect[index[&(1, 1)]] = rat(-1);
        assert_eq!(col, expect);
    }

    #[test]
    fn squares_agree_under_multiplication_but_not_formally() {
        let vars = VarSet::xyz();
        let x2 = parse("x^2", &vars).unwrap();
        let y2 = parse("y^2", &vars).unwrap();
        let xy = parse("x*y", &vars).unwrap();
        let a = expand_pair(&x2, &y2);
        let b = expand_pair(&xy, &xy);
        assert_ne!(a, b, "formal pairs differ");
        let m = mult_map();
        assert_eq!(m.apply(&a), m.apply(&b), "images under multiplication agree");
    }

    #[test]
    fn expand_pair_matches_polynomial_product() {
        let vars = VarSet::xyz();
        let a = parse("x^2 - 2*y*z", &vars).unwrap();
        let b = parse("x*y + 3*z^2", &vars).unwrap();
        let coords = expand_pair(&a, &b);
        let image = mult_map().apply(&coords);
        let quartics = monomials_of_degree(3, 4);
        let direct = a.mul(&b);
        let expect: Vec<Rational> = quartics.iter().map(|m| direct.coefficient(m)).collect();
        assert_eq!(image, expect);
    }

    #[test]
    fn labels_follow_the_cyclic_identification() {
        let labels = dual_labels();
        assert_eq!(labels.len(), 6);
        assert_eq!(labels[0], "z*·z*");
        assert_eq!(labels[1], "-z*·y*");
    }
}
