//! Buchberger's algorithm with the coprimality criterion, full normal-form
//! reduction, and inter-reduction to the unique reduced basis.

use crate::poly::{Monomial, MonomialOrder, Polynomial};

/// A reduced Gröbner basis together with the order it was computed for.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    polys: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn new(gens: &[Polynomial], order: MonomialOrder) -> Self {
        GroebnerBasis {
            order,
            polys: buchberger(gens, order),
        }
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        normal_form(p, &self.polys, self.order)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }
}

/// Fully reduces `p` modulo `basis`: every term divisible by some leading
/// monomial gets cancelled, largest terms first.
pub fn normal_form(p: &Polynomial, basis: &[Polynomial], order: MonomialOrder) -> Polynomial {
    let leads: Vec<(Monomial, &Polynomial)> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| (g.leading(order).unwrap().0.clone(), g))
        .collect();
    let mut rem = p.clone();
    'outer: loop {
        if rem.is_zero() {
            return rem;
        }
        for (m, c) in rem.sorted_terms(order) {
            for (lm, g) in &leads {
                if let Some(q) = m.checked_div(lm) {
                    let lc = g.leading(order).unwrap().1.clone();
                    let factor = c.clone() / lc;
                    rem = rem.sub(&g.mul_term(&q, &factor));
                    continue 'outer;
                }
            }
        }
        return rem;
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`, canonical for the
/// order: monic elements, mutually reduced, sorted by descending leading
/// monomial.
pub fn buchberger(gens: &[Polynomial], order: MonomialOrder) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic(order))
        .collect();
    if basis.is_empty() {
        return basis;
    }

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push((i, j));
        }
    }

    while !pairs.is_empty() {
        // normal selection: smallest lcm degree first, ties by index
        let best = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, &(i, j))| {
                let li = basis[i].leading(order).unwrap().0;
                let lj = basis[j].leading(order).unwrap().0;
                (li.lcm(lj).degree(), i, j)
            })
            .map(|(idx, _)| idx)
            .unwrap();
        let (i, j) = pairs.swap_remove(best);
        let li = basis[i].leading(order).unwrap().0.clone();
        let lj = basis[j].leading(order).unwrap().0.clone();
        let lcm = li.lcm(&lj);
        // coprimality criterion
        if lcm == li.mul(&lj) {
            continue;
        }
        let mi = lcm.checked_div(&li).unwrap();
        let mj = lcm.checked_div(&lj).unwrap();
        let one = num_traits::One::one();
        let s = basis[i]
            .mul_term(&mi, &one)
            .sub(&basis[j].mul_term(&mj, &one));
        let r = normal_form(&s, &basis, order);
        if !r.is_zero() {
            let r = r.monic(order);
            for k in 0..basis.len() {
                pairs.push((k, basis.len()));
            }
            basis.push(r);
        }
    }

    reduce_basis(basis, order)
}

/// Minimalizes and auto-reduces a Gröbner basis.
fn reduce_basis(mut basis: Vec<Polynomial>, order: MonomialOrder) -> Vec<Polynomial> {
    // drop elements whose leading monomial is divisible by another's
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let li = basis[i].leading(order).unwrap().0.clone();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let lj = basis[j].leading(order).unwrap().0;
            if lj.divides(&li) && (lj != &li || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<Polynomial> = basis
        .drain(..)
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();
    // tail-reduce each element against the others
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, g)| (j != i).then(|| g.clone()))
            .collect();
        let r = normal_form(&minimal[i], &others, order);
        if !r.is_zero() {
            reduced.push(r.monic(order));
        }
    }
    reduced.sort_by(|a, b| {
        let la = a.leading(order).unwrap().0;
        let lb = b.leading(order).unwrap().0;
        order.cmp(lb, la)
    });
    reduced
}
