//! Tilt slopes `mu_beta`, `nu_{alpha,beta}` and the discriminant.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::chern::{Polarization, TruncatedClass};
use crate::error::{Error, Result};
use crate::rational::{fmt_q, qi, Q};

/// A point of the upper half plane, stored as `(beta, alpha^2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct TiltPoint {
    #[serde(serialize_with = "crate::rational::serialize_q")]
    beta: Q,
    #[serde(serialize_with = "crate::rational::serialize_q")]
    alpha_sq: Q,
}

impl TiltPoint {
    pub fn new(beta: Q, alpha_sq: Q) -> Result<Self> {
        if !alpha_sq.is_positive() {
            return Err(Error::NonPositiveAlpha(fmt_q(&alpha_sq)));
        }
        Ok(Self { beta, alpha_sq })
    }

    pub fn beta(&self) -> &Q {
        &self.beta
    }

    pub fn alpha_sq(&self) -> &Q {
        &self.alpha_sq
    }
}

impl fmt::Display for TiltPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(beta={}, alpha^2={})",
            fmt_q(&self.beta),
            fmt_q(&self.alpha_sq)
        )
    }
}

/// A slope, possibly `+inf`. Every finite value is below `+inf`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SlopeValue {
    Finite(Q),
    PlusInfinity,
}

impl SlopeValue {
    pub fn finite(&self) -> Option<&Q> {
        match self {
            Self::Finite(v) => Some(v),
            Self::PlusInfinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Self::PlusInfinity)
    }

    fn from_parts(numerator: Q, denominator: &Q) -> Self {
        if denominator.is_zero() {
            Self::PlusInfinity
        } else {
            Self::Finite(numerator / denominator)
        }
    }
}

impl fmt::Display for SlopeValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Finite(v) => f.write_str(&fmt_q(v)),
            Self::PlusInfinity => f.write_str("inf"),
        }
    }
}

impl Serialize for SlopeValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `ch_1^beta = c - beta r`.
pub fn ch1_beta(beta: &Q, w: &TruncatedClass) -> Q {
    w.c_q() - beta * w.r_q()
}

/// `ch_2^beta = s - beta c + beta^2 r / 2`.
pub fn ch2_beta(beta: &Q, w: &TruncatedClass) -> Q {
    w.s() - beta * w.c_q() + beta * beta * w.r_q() / qi(2)
}

pub fn mu(beta: &Q, w: &TruncatedClass) -> SlopeValue {
    SlopeValue::from_parts(ch1_beta(beta, w), &w.r_q())
}

/// `Delta = d^2 (c^2 - 2rs)`.
pub fn discriminant(w: &TruncatedClass, pol: &Polarization) -> Q {
    let d = pol.degree_q();
    &d * &d * w.reduced_discriminant()
}

/// Numerator and denominator of `nu`: `(ch_2^beta - alpha^2 r / 2, ch_1^beta)`.
pub fn nu_parts(p: &TiltPoint, w: &TruncatedClass) -> (Q, Q) {
    let numerator = ch2_beta(&p.beta, w) - &p.alpha_sq * w.r_q() / qi(2);
    (numerator, ch1_beta(&p.beta, w))
}

pub fn nu(p: &TiltPoint, w: &TruncatedClass) -> SlopeValue {
    let (n, d) = nu_parts(p, w);
    SlopeValue::from_parts(n, &d)
}

/// `nu(p, a) = nu(p, b)` tested as `N_a D_b = N_b D_a`.
pub fn same_nu(p: &TiltPoint, a: &TruncatedClass, b: &TruncatedClass) -> bool {
    let (na, da) = nu_parts(p, a);
    let (nb, db) = nu_parts(p, b);
    na * db == nb * da
}

/// Numerical shadow of membership in `Coh^beta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HeartMembership {
    SheafPart,
    ShiftPart,
    Boundary,
    No,
}

pub fn in_heart_numerically(beta: &Q, w: &TruncatedClass) -> HeartMembership {
    let x = ch1_beta(beta, w);
    if x.is_zero() {
        HeartMembership::Boundary
    } else if x.is_negative() {
        HeartMembership::No
    } else if w.r().is_negative() {
        HeartMembership::ShiftPart
    } else {
        HeartMembership::SheafPart
    }
}

/// Ordering of `nu(w)` against `nu(u)` valid for every `alpha^2 > threshold`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LargeVolumeComparison {
    #[serde(serialize_with = "serialize_ordering")]
    pub ordering: Ordering,
    #[serde(serialize_with = "crate::rational::serialize_q")]
    pub threshold: Q,
}

fn serialize_ordering<S: serde::Serializer>(
    o: &Ordering,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(ordering_name(*o))
}

pub fn ordering_name(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "less",
        Ordering::Equal => "equal",
        Ordering::Greater => "greater",
    }
}

/// `nu` as an affine function of `alpha^2`: `(slope, constant)`, or `None` for `+inf`.
fn affine_nu(beta: &Q, w: &TruncatedClass) -> Option<(Q, Q)> {
    let x = ch1_beta(beta, w);
    if x.is_zero() {
        return None;
    }
    let slope = -w.r_q() / (qi(2) * &x);
    Some((slope, ch2_beta(beta, w) / x))
}

pub fn compare_large_volume(
    beta: &Q,
    w: &TruncatedClass,
    u: &TruncatedClass,
) -> LargeVolumeComparison {
    let zero = Q::zero();
    let (ordering, threshold) = match (affine_nu(beta, w), affine_nu(beta, u)) {
        (None, None) => (Ordering::Equal, zero),
        (None, Some(_)) => (Ordering::Greater, zero),
        (Some(_), None) => (Ordering::Less, zero),
        (Some((sw, kw)), Some((su, ku))) if sw == su => (kw.cmp(&ku), zero),
        (Some((sw, kw)), Some((su, ku))) => {
            let crossing = (&ku - &kw) / (&sw - &su);
            (sw.cmp(&su), crossing.max(zero))
        }
    };
    LargeVolumeComparison {
        ordering,
        threshold,
    }
}
