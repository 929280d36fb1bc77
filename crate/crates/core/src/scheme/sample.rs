//! Deterministic sampling of rational configurations: points with small
//! integer coordinates in [-9, 9], degenerate configurations rejected. The
//! generator is a splitmix64 stream, so identical seeds reproduce identical
//! samples on every platform.

use super::{PointScheme, ProjPoint};
use crate::linalg::Matrix;
use crate::poly::{rat, Polynomial, Rational};

/// Small deterministic PRNG (splitmix64).
#[derive(Clone, Debug)]
pub struct SampleRng {
    state: u64,
}

impl SampleRng {
    pub fn new(seed: u64) -> Self {
        SampleRng { state: seed }
    }

    /// Stable per-sample sub-seed derived from a suite seed and an index.
    pub fn for_sample(seed: u64, index: u64) -> Self {
        let mut rng = SampleRng::new(seed ^ index.wrapping_mul(0x9e3779b97f4a7c15));
        rng.next_u64();
        rng
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform-ish integer in `lo..=hi`.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo + 1) as u64;
        lo + ((self.next_u64() >> 16) % span) as i64
    }

    fn coordinate(&mut self) -> i64 {
        self.int_in(-9, 9)
    }

    /// A random rational point with coordinates in [-9, 9].
    pub fn point(&mut self) -> ProjPoint {
        loop {
            let (a, b, c) = (self.coordinate(), self.coordinate(), self.coordinate());
            if let Ok(p) = ProjPoint::from_ints(a, b, c) {
                return p;
            }
        }
    }

    /// Three distinct non-collinear points.
    pub fn triangle(&mut self) -> PointScheme {
        loop {
            let (p, q, r) = (self.point(), self.point(), self.point());
            if p == q || p == r || q == r {
                continue;
            }
            let m = Matrix::from_rows(vec![
                p.coords().to_vec(),
                q.coords().to_vec(),
                r.coords().to_vec(),
            ]);
            if m.rank() == 3 {
                return PointScheme::triangle([p, q, r]);
            }
        }
    }

    /// Three distinct collinear points: p, q, and p + c*q.
    pub fn collinear_triple(&mut self) -> PointScheme {
        loop {
            let (p, q) = (self.point(), self.point());
            if p == q {
                continue;
            }
            let c = rat(self.int_in(1, 9));
            let third: Vec<Rational> = p
                .coords()
                .iter()
                .zip(q.coords())
                .map(|(a, b)| a + &c * b)
                .collect();
            let Ok(r) = ProjPoint::new([third[0].clone(), third[1].clone(), third[2].clone()])
            else {
                continue;
            };
            if r == p || r == q {
                continue;
            }
            return PointScheme::triangle([p, q, r]);
        }
    }

    /// A fat point at a random support.
    pub fn fat_point(&mut self) -> PointScheme {
        PointScheme::fat_point(self.point())
    }

    /// A random invertible 3x3 matrix with small integer entries.
    pub fn invertible_matrix(&mut self) -> Matrix<Rational> {
        loop {
            let rows: Vec<Vec<Rational>> = (0..3)
                .map(|_| (0..3).map(|_| rat(self.coordinate())).collect())
                .collect();
            let m = Matrix::from_rows(rows);
            if m.inverse().is_some() {
                return m;
            }
        }
    }
}

/// Substitutes `x_i -> sum_j m[i][j] x_j` into a polynomial on the plane.
pub fn linear_change(p: &Polynomial, m: &Matrix<Rational>) -> Polynomial {
    let vars = p.vars().clone();
    assert_eq!(vars.len(), 3);
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
    p.substitute_all(&images)
}

/// The image of a point under the inverse substitution, so that transformed
/// polynomials vanish on transformed points.
pub fn transform_point(p: &ProjPoint, m_inv: &Matrix<Rational>) -> ProjPoint {
    let v = m_inv.apply(&p.coords().to_vec());
    ProjPoint::new([v[0].clone(), v[1].clone(), v[2].clone()]).expect("invertible image")
}
