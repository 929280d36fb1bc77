//! Chern-character arithmetic on the plane, the potential and slope of the
//! stability half-plane, and exact wall circles for a fixed character.

use crate::poly::{rat, ratio, Rational};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum WallError {
    #[error("proportional characters define no wall locus")]
    Proportional,
    #[error("ch2 must be a half-integer, got {0}")]
    NotHalfInteger(Rational),
}

/// `(r, c1, ch2)` with `ch2` a half-integer, stored internally as `2*ch2`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChernCharacter {
    pub r: i64,
    pub c1: i64,
    ch2_twice: i64,
}

impl ChernCharacter {
    pub fn new(r: i64, c1: i64, ch2: Rational) -> Result<Self, WallError> {
        let twice = ch2.clone() * rat(2);
        if !twice.is_integer() {
            return Err(WallError::NotHalfInteger(ch2));
        }
        let ch2_twice = i64::try_from(twice.to_integer()).expect("bounded character");
        Ok(ChernCharacter { r, c1, ch2_twice })
    }

    pub fn from_ints(r: i64, c1: i64, ch2_twice: i64) -> Self {
        ChernCharacter { r, c1, ch2_twice }
    }

    pub fn ch2(&self) -> Rational {
        ratio(self.ch2_twice, 2)
    }

    pub fn ch2_twice(&self) -> i64 {
        self.ch2_twice
    }

    pub fn is_zero(&self) -> bool {
        self.r == 0 && self.c1 == 0 && self.ch2_twice == 0
    }
}

impl std::fmt::Display for ChernCharacter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.r, self.c1, self.ch2())
    }
}

/// The central potential at `(s, t)`, `t > 0`:
/// `-(ch2 - s c1 + r(s² - t²)/2) + i t(c1 - r s)`, returned as (re, im).
pub fn potential(v: &ChernCharacter, s: &Rational, t: &Rational) -> (Rational, Rational) {
    assert!(t.is_positive(), "t must be positive");
    let r = rat(v.r);
    let c1 = rat(v.c1);
    let re = -(v.ch2() - s * &c1 + &r * (s * s - t * t) / rat(2));
    let im = t * &(c1 - r * s);
    (re, im)
}

#[derive(Clone, PartialEq, Debug)]
pub enum Slope {
    Finite(Rational),
    Infinite,
}

/// `(ch2 - s c1 + r(s² - t²)/2) / (t (c1 - r s))`, infinite when the
/// imaginary part vanishes.
pub fn slope(v: &ChernCharacter, s: &Rational, t: &Rational) -> Slope {
    let (re, im) = potential(v, s, t);
    if im.is_zero() {
        Slope::Infinite
    } else {
        Slope::Finite(-re / im)
    }
}

/// The locus where two characters have equal slope, after dividing a common
/// factor of `t` out of `Re Z_v Im Z_w - Re Z_w Im Z_v = 0`.
#[derive(Clone, PartialEq, Debug)]
pub enum WallLocus {
    /// `(s - center)² + t² = radius2`; empty when `radius2 <= 0`.
    Circle { center: Rational, radius2: Rational },
    /// A vertical line `s = const` (equal ranks).
    Line { s: Rational },
    /// Slopes never agree.
    NoWall,
}

/// Expands the slope-equality condition symbolically. With
/// `A = c1(v) r(w) - c1(w) r(v)`, `B = r(v) ch2(w) - r(w) ch2(v)`,
/// `C = ch2(v) c1(w) - ch2(w) c1(v)` the condition reads
/// `A(s² + t²)/2 + B s + C = 0`.
pub fn wall(v: &ChernCharacter, w: &ChernCharacter) -> Result<WallLocus, WallError> {
    let big = |x: i64| BigInt::from(x);
    let a = big(v.c1) * big(w.r) - big(w.c1) * big(v.r);
    // use 2*ch2 to stay integral: B2 = 2B, C2 = 2C
    let b2 = big(v.r) * big(w.ch2_twice) - big(w.r) * big(v.ch2_twice);
    let c2 = big(v.ch2_twice) * big(w.c1) - big(w.ch2_twice) * big(v.c1);
    if a.is_zero() && b2.is_zero() && c2.is_zero() {
        return Err(WallError::Proportional);
    }
    if a.is_zero() {
        if b2.is_zero() {
            return Ok(WallLocus::NoWall);
        }
        return Ok(WallLocus::Line {
            s: -Rational::new(c2, b2.clone()),
        });
    }
    // s² + t² + (2B/A)s + 2C/A = 0, so the center is -B/A = -b2/(2A) and
    // radius² = center² - 2C/A = center² - c2/A
    let center = -Rational::new(b2, a.clone() * BigInt::from(2));
    let radius2 = center.clone() * center.clone() - Rational::new(c2, a);
    Ok(WallLocus::Circle { center, radius2 })
}

/// Exact rational square root, if one exists.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| Rational::new(n, d))
}

/// One deduplicated circle with its realizing characters.
#[derive(Clone, Debug, Serialize)]
pub struct WallGroup {
    pub center: String,
    pub radius2: String,
    /// Exact radius when `radius2` is a perfect rational square.
    pub radius: Option<String>,
    pub witnesses: Vec<(i64, i64, String)>,
}

/// Enumerates integer/half-integer characters within the bounds
/// `|r| <= bounds.0`, `|c1| <= bounds.1`, `|2 ch2| <= bounds.2`, computes
/// every wall against `v`, and groups the nonempty circles by
/// `(center, radius²)`, sorted by radius.
pub fn wall_scan(v: &ChernCharacter, bounds: (i64, i64, i64)) -> Vec<WallGroup> {
    let mut groups: Vec<(Rational, Rational, Vec<ChernCharacter>)> = Vec::new();
    let (rb, cb, db) = bounds;
    for r in -rb..=rb {
        for c1 in -cb..=cb {
            for e in -db..=db {
                let w = ChernCharacter::from_ints(r, c1, e);
                if w.is_zero() {
                    continue;
                }
                let Ok(WallLocus::Circle { center, radius2 }) = wall(v, &w) else {
                    continue;
                };
                if !radius2.is_positive() {
                    continue;
                }
                match groups
                    .iter_mut()
                    .find(|(c, r2, _)| *c == center && *r2 == radius2)
                {
                    Some((_, _, ws)) => ws.push(w),
                    None => groups.push((center, radius2, vec![w])),
                }
            }
        }
    }
    groups.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    groups
        .into_iter()
        .map(|(center, radius2, ws)| WallGroup {
            center: center.to_string(),
            radius: rational_sqrt(&radius2).map(|r| r.to_string()),
            radius2: radius2.to_string(),
            witnesses: ws
                .into_iter()
                .map(|w| (w.r, w.c1, w.ch2().to_string()))
                .collect(),
        })
        .collect()
}

/// Rational points on a circle with rational radius, one per parameter `u`
/// in `(0, 1)`: `s = center + rho (1-u²)/(1+u²)`, `t = rho · 2u/(1+u²)`.
pub fn circle_points(center: &Rational, rho: &Rational, params: &[Rational]) -> Vec<(Rational, Rational)> {
    params
        .iter()
        .map(|u| {
            let u2 = u * u;
            let den = rat(1) + u2.clone();
            let s = center + rho * &((rat(1) - u2.clone()) / den.clone());
            let t = rho * &(rat(2) * u / den);
            (s, t)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ch(r: i64, c1: i64, ch2_num: i64, ch2_den: i64) -> ChernCharacter {
        ChernCharacter::new(r, c1, ratio(ch2_num, ch2_den)).unwrap()
    }

    fn v0() -> ChernCharacter {
        ch(0, 4, -5, 1)
    }

    #[test]
    fn potential_values() {
        let (re, im) = potential(&ch(1, 0, 0, 1), &rat(0), &rat(1));
        assert_eq!((re, im), (ratio(1, 2), rat(0)));
        let (re, im) = potential(&v0(), &rat(0), &rat(1));
        assert_eq!((re, im), (rat(5), rat(4)));
        let (re, im) = potential(&ch(0, 0, 1, 1), &rat(3), &rat(2));
        assert_eq!((re, im), (rat(-1), rat(0)));
    }

    #[test]
    fn slope_values() {
        // mu = (-5 - 4s) / (4t)
        match slope(&v0(), &rat(1), &rat(2)) {
            Slope::Finite(m) => assert_eq!(m, ratio(-9, 8)),
            Slope::Infinite => panic!("finite expected"),
        }
        assert_eq!(slope(&ch(1, 1, 1, 2), &rat(1), &rat(1)), Slope::Infinite);
        // homogeneity: scaling by a positive integer leaves the slope alone
        let w = ch(2, 6, -3, 1);
        let w3 = ch(6, 18, -9, 1);
        assert_eq!(slope(&w, &ratio(1, 3), &rat(2)), slope(&w3, &ratio(1, 3), &rat(2)));
    }

    #[test]
    fn wall_against_the_structure_sheaf() {
        // t² + s² + (5/2)s = 0: center -5/4, radius 5/4
        match wall(&v0(), &ch(1, 0, 0, 1)).unwrap() {
            WallLocus::Circle { center, radius2 } => {
                assert_eq!(center, ratio(-5, 4));
                assert_eq!(radius2, ratio(25, 16));
                assert_eq!(rational_sqrt(&radius2), Some(ratio(5, 4)));
            }
            other => panic!("expected circle, got {other:?}"),
        }
    }

    #[test]
    fn the_big_wall_has_radius_seven_quarters() {
        // t² + s² + (5/2)s - 3/2 = 0: center -5/4, radius 7/4
        match wall(&v0(), &ch(1, 1, -1, 2)).unwrap() {
            WallLocus::Circle { center, radius2 } => {
                assert_eq!(center, ratio(-5, 4));
                assert_eq!(radius2, ratio(49, 16));
                assert_eq!(rational_sqrt(&radius2), Some(ratio(7, 4)));
            }
            other => panic!("expected circle, got {other:?}"),
        }
    }

    #[test]
    fn no_wall_for_parallel_torsion_classes() {
        assert_eq!(wall(&v0(), &ch(0, 1, 1, 2)).unwrap(), WallLocus::NoWall);
        assert!(matches!(
            wall(&v0(), &ch(0, 8, -10, 1)),
            Err(WallError::Proportional)
        ));
    }

    #[test]
    fn scan_finds_the_candidates() {
        let groups = wall_scan(&v0(), (1, 5, 10));
        assert!(!groups.is_empty());
        for g in &groups {
            assert_eq!(g.center, "-5/4", "common center");
        }
        let radii: Vec<&str> = groups
            .iter()
            .filter_map(|g| g.radius.as_deref())
            .collect();
        assert!(radii.contains(&"5/4"));
        assert!(radii.contains(&"7/4"));
        assert!(radii.contains(&"9/4"));
        let big = groups
            .iter()
            .find(|g| g.radius.as_deref() == Some("7/4"))
            .unwrap();
        assert!(big
            .witnesses
            .iter()
            .any(|w| *w == (1, 1, "-1/2".to_string())));
    }

    #[test]
    fn empty_circles_are_excluded_from_the_scan() {
        let groups = wall_scan(&v0(), (1, 5, 10));
        for g in &groups {
            let r2: Rational = g.radius2.parse().unwrap();
            assert!(r2.is_positive(), "radius² must be positive, got {r2}");
        }
        // a witness with negative radius²: (1, 0, -5/2) gives 25/16 - 5 < 0
        match wall(&v0(), &ch(1, 0, -5, 2)).unwrap() {
            WallLocus::Circle { radius2, .. } => assert!(radius2.is_negative()),
            other => panic!("expected empty circle, got {other:?}"),
        }
    }

    #[test]
    fn slopes_agree_on_the_wall() {
        let w = ch(1, 1, -1, 2);
        let center = ratio(-5, 4);
        let rho = ratio(7, 4);
        for (s, t) in circle_points(&center, &rho, &[ratio(1, 2), ratio(1, 3), ratio(2, 3)]) {
            assert!(t.is_positive());
            assert_eq!(slope(&v0(), &s, &t), slope(&w, &s, &t), "at ({s}, {t})");
        }
    }

    #[test]
    fn wall_is_symmetric() {
        let a = ch(1, 2, 1, 2);
        let b = ch(2, -1, 3, 2);
        assert_eq!(wall(&a, &b).unwrap(), wall(&b, &a).unwrap());
    }

    #[test]
    fn half_integers_are_enforced() {
        assert!(ChernCharacter::new(1, 1, ratio(1, 3)).is_err());
    }
}
