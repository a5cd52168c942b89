//! Numerical walls in the `(beta, alpha)` half plane.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::chern::TruncatedClass;
use crate::error::{Error, Result};
use crate::rational::{fmt_q, qi, serialize_q, Q};
use crate::surd::QuadraticSurd;
use crate::tilt::TiltPoint;

/// Solution set of `nu(w) = nu(u)` in the open half plane `alpha > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WallDescriptor {
    Vertical {
        #[serde(serialize_with = "serialize_q")]
        beta: Q,
    },
    /// `alpha^2 + (beta - center)^2 = radius_sq`.
    Semicircle {
        #[serde(serialize_with = "serialize_q")]
        center: Q,
        #[serde(serialize_with = "serialize_q")]
        radius_sq: Q,
    },
    Coincident,
    Empty,
}

impl WallDescriptor {
    pub fn semicircle(center: Q, radius_sq: Q) -> Self {
        if radius_sq.is_positive() {
            Self::Semicircle { center, radius_sq }
        } else {
            Self::Empty
        }
    }

    pub fn as_semicircle(&self) -> Option<(&Q, &Q)> {
        match self {
            Self::Semicircle { center, radius_sq } => Some((center, radius_sq)),
            _ => None,
        }
    }

    /// Whether `p` lies on the wall.
    pub fn contains_point(&self, p: &TiltPoint) -> bool {
        match self {
            Self::Vertical { beta } => beta == p.beta(),
            Self::Semicircle { center, radius_sq } => {
                let d = p.beta() - center;
                p.alpha_sq() + &d * &d == *radius_sq
            }
            Self::Coincident => true,
            Self::Empty => false,
        }
    }

    /// Endpoints on the `beta` axis, left first.
    pub fn endpoints(&self) -> Option<(QuadraticSurd, QuadraticSurd)> {
        let (center, radius_sq) = self.as_semicircle()?;
        let rho = QuadraticSurd::sqrt(radius_sq);
        Some((rho.neg().add_rational(center), rho.add_rational(center)))
    }

    /// Highest point of a semicircle.
    pub fn top(&self) -> Option<TiltPoint> {
        let (center, radius_sq) = self.as_semicircle()?;
        TiltPoint::new(center.clone(), radius_sq.clone()).ok()
    }

    pub fn describe(&self) -> String {
        match self {
            Self::Vertical { beta } => format!("vertical beta = {}", fmt_q(beta)),
            Self::Semicircle { center, radius_sq } => format!(
                "semicircle alpha^2 + (beta - ({}))^2 = {}",
                fmt_q(center),
                fmt_q(radius_sq)
            ),
            Self::Coincident => "coincident".into(),
            Self::Empty => "empty".into(),
        }
    }
}

pub fn wall_between(w: &TruncatedClass, u: &TruncatedClass) -> Result<WallDescriptor> {
    if w.is_zero() || u.is_zero() {
        return Err(Error::ZeroClass);
    }
    let [r1, c1, s1] = w.as_vec();
    let [r2, c2, s2] = u.as_vec();
    let rc = &r1 * &c2 - &r2 * &c1;
    let rs = &r1 * &s2 - &r2 * &s1;
    let cs = &c1 * &s2 - &s1 * &c2;
    if !rc.is_zero() {
        let center = &rs / &rc;
        let radius_sq = &center * &center - qi(2) * &cs / &rc;
        return Ok(WallDescriptor::semicircle(center, radius_sq));
    }
    // the equation degenerates to -rs * beta + cs = 0
    if !rs.is_zero() {
        Ok(WallDescriptor::Vertical { beta: cs / rs })
    } else if cs.is_zero() {
        Ok(WallDescriptor::Coincident)
    } else {
        Ok(WallDescriptor::Empty)
    }
}

/// `beta = c / r`, the only vertical wall for `w`.
pub fn straight_wall(w: &TruncatedClass) -> Option<Q> {
    (!w.r().is_zero()).then(|| w.c_q() / w.r_q())
}

/// Roots of `ch_2^beta(w) = 0` in increasing order.
pub fn accumulation_points(w: &TruncatedClass) -> Result<(QuadraticSurd, QuadraticSurd)> {
    let [r, c, s] = w.as_vec();
    if r.is_zero() {
        if c.is_zero() {
            return Err(Error::DegenerateClass(format!(
                "ch_2^beta of {w} does not depend on beta"
            )));
        }
        let root = QuadraticSurd::rational(s / c);
        return Ok((root.clone(), root));
    }
    let disc = &c * &c - qi(2) * &r * &s;
    if disc.is_negative() {
        return Err(Error::DegenerateClass(format!(
            "ch_2^beta of {w} has no real roots"
        )));
    }
    let root = QuadraticSurd::sqrt(&disc).scale(&r.recip());
    let center = &c / &r;
    let (a, b) = (root.neg().add_rational(&center), root.add_rational(&center));
    Ok(if a <= b { (a, b) } else { (b, a) })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "alpha_sq", rename_all = "snake_case")]
pub enum VerticalIntersection {
    None,
    #[serde(serialize_with = "serialize_q")]
    Point(Q),
    WholeLine,
}

pub fn intersect_vertical(wall: &WallDescriptor, beta0: &Q) -> VerticalIntersection {
    match wall {
        WallDescriptor::Semicircle { center, radius_sq } => {
            let d = beta0 - center;
            let a2 = radius_sq - &d * &d;
            if a2.is_positive() {
                VerticalIntersection::Point(a2)
            } else {
                VerticalIntersection::None
            }
        }
        WallDescriptor::Vertical { beta } if beta == beta0 => VerticalIntersection::WholeLine,
        WallDescriptor::Coincident => VerticalIntersection::WholeLine,
        _ => VerticalIntersection::None,
    }
}

/// Position of the second wall relative to the first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NestRelation {
    Inside,
    Outside,
    Equal,
    Crossing,
    Disjoint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Nesting {
    pub relation: NestRelation,
    /// The two circles touch in exactly one point.
    pub tangent: bool,
}

pub fn is_nested(w1: &WallDescriptor, w2: &WallDescriptor) -> Result<Nesting> {
    if let (WallDescriptor::Vertical { beta: a }, WallDescriptor::Vertical { beta: b }) = (w1, w2) {
        if a == b {
            return Ok(Nesting {
                relation: NestRelation::Equal,
                tangent: false,
            });
        }
    }
    let (Some((c1, p1)), Some((c2, p2))) = (w1.as_semicircle(), w2.as_semicircle()) else {
        return Err(Error::IncomparableWalls(format!(
            "{} vs {}",
            w1.describe(),
            w2.describe()
        )));
    };
    if c1 == c2 && p1 == p2 {
        return Ok(Nesting {
            relation: NestRelation::Equal,
            tangent: false,
        });
    }
    let delta = c1 - c2;
    let delta_sq = &delta * &delta;
    let gap = &delta_sq - p1 - p2;
    let lhs = &gap * &gap;
    let rhs = qi(4) * p1 * p2;
    let relation = match lhs.cmp(&rhs) {
        Ordering::Less => NestRelation::Crossing,
        _ if gap.is_positive() => NestRelation::Disjoint,
        _ if p2 < p1 => NestRelation::Inside,
        _ => NestRelation::Outside,
    };
    Ok(Nesting {
        relation,
        tangent: lhs == rhs,
    })
}

/// Radius squared of the wall for `w` centered at `center`: every semicircular
/// wall for `w` satisfies `rho^2 = center^2 - 2 center c/r + 2s/r`.
pub fn radius_sq_at_center(w: &TruncatedClass, center: &Q) -> Option<Q> {
    if w.r().is_zero() {
        return None;
    }
    let (r, c, s) = (w.r_q(), w.c_q(), w.s().clone());
    Some(center * center - qi(2) * center * c / &r + qi(2) * s / r)
}
