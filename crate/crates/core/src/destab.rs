//! Certified enumeration of candidate destabilizing classes.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::chern::TruncatedClass;
use crate::error::{Error, Result};
use crate::rational::{
    ceil, floor, fmt_q, from_int, qi, serialize_int, serialize_q, sqrt_upper, Q,
};
use crate::surd::QuadraticSurd;
use crate::tilt::{ch1_beta, ch2_beta, nu, nu_parts, same_nu, TiltPoint};
use crate::walls::{
    accumulation_points, is_nested, straight_wall, wall_between, NestRelation, WallDescriptor,
};

/// `E = sub + quot` with `nu(sub) = nu(E)` at some point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DestabCandidate {
    pub sub: TruncatedClass,
    pub quot: TruncatedClass,
    pub wall: WallDescriptor,
    /// One of the two pieces has vanishing discriminant.
    pub zero_discriminant: bool,
}

impl DestabCandidate {
    fn new(e: &TruncatedClass, sub: TruncatedClass) -> Result<Self> {
        let quot = e - &sub;
        let wall = wall_between(e, &sub)?;
        let zero_discriminant =
            sub.reduced_discriminant().is_zero() || quot.reduced_discriminant().is_zero();
        Ok(Self {
            sub,
            quot,
            wall,
            zero_discriminant,
        })
    }
}

/// The search box: `|r| <= r_bound` and `0 < ch_1^beta < ch1_bound`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoxCertificate {
    #[serde(serialize_with = "serialize_int")]
    pub r_bound: BigInt,
    #[serde(serialize_with = "serialize_q")]
    pub ch1_bound: Q,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Enumeration {
    /// The queried class, replaced by its negative when `ch_1^beta < 0`.
    pub class: TruncatedClass,
    pub point: TiltPoint,
    pub certificate: BoxCertificate,
    pub candidates: Vec<DestabCandidate>,
}

/// The inequality system at `p` with `ch_1^beta(e) = x_e > 0`.
fn admissible(p: &TiltPoint, e: &TruncatedClass, x_e: &Q, bound: &Q, u: &TruncatedClass) -> bool {
    let x = ch1_beta(p.beta(), u);
    if !x.is_positive() || &x >= x_e || !same_nu(p, u, e) {
        return false;
    }
    let v = e - u;
    if !u.is_realizable() || !v.is_realizable() {
        return false;
    }
    let du = u.reduced_discriminant();
    let dv = v.reduced_discriminant();
    !du.is_negative() && !dv.is_negative() && &du < bound && &dv < bound
}

fn checked_class(e: &TruncatedClass) -> Result<Q> {
    if e.is_zero() {
        return Err(Error::ZeroClass);
    }
    let delta = e.reduced_discriminant();
    if !delta.is_positive() {
        return Err(Error::UnboundedRegion(format!(
            "discriminant of {e} is {}, not positive",
            fmt_q(&delta)
        )));
    }
    Ok(delta)
}

/// `e` or `-e`, whichever has `ch_1^beta >= 0`.
fn in_heart(beta: &Q, e: &TruncatedClass) -> (TruncatedClass, Q) {
    let x = ch1_beta(beta, e);
    if x.is_negative() {
        (-e, -x)
    } else {
        (e.clone(), x)
    }
}

fn to_i64(n: &BigInt, what: &str) -> Result<i64> {
    n.to_i64()
        .ok_or_else(|| Error::Unsupported(format!("{what} {n} is too large to scan")))
}

/// Integers strictly between `lo` and `lo + width`.
fn open_range(lo: &Q, width: &Q) -> Vec<BigInt> {
    let (mut c, last): (BigInt, BigInt) = (floor(lo) + 1, ceil(&(lo + width)) - 1);
    let mut out = Vec::new();
    while c <= last {
        out.push(c.clone());
        c += 1;
    }
    out
}

fn sort_candidates(v: &mut [DestabCandidate]) {
    v.sort_by(|a, b| a.sub.cmp(&b.sub));
}

/// Every lattice class `u` with `nu(p,u) = nu(p,E)` satisfying
/// `0 < ch_1^beta(u) < ch_1^beta(E)`, `0 <= Delta(u), Delta(E-u) < Delta(E)`.
pub fn enumerate_at(p: &TiltPoint, e: &TruncatedClass) -> Result<Enumeration> {
    let delta = checked_class(e)?;
    enumerate_with_bound(p, e, &delta)
}

/// [`enumerate_at`] with `Delta(E)` replaced by `bound` in the upper inequalities.
pub(crate) fn enumerate_with_bound(
    p: &TiltPoint,
    e: &TruncatedClass,
    bound: &Q,
) -> Result<Enumeration> {
    let beta = p.beta();
    let a2 = p.alpha_sq();
    let (e, x_e) = in_heart(beta, e);
    if x_e.is_zero() {
        return Ok(Enumeration {
            class: e,
            point: p.clone(),
            certificate: BoxCertificate {
                r_bound: BigInt::zero(),
                ch1_bound: x_e,
            },
            candidates: Vec::new(),
        });
    }
    let (n_e, _) = nu_parts(p, &e);
    let nu_e = &n_e / &x_e;
    // Delta(u) = x^2 - 2 nu x r - alpha^2 r^2 >= 0 with 0 < x < x_e
    let root = sqrt_upper(&(a2 + &nu_e * &nu_e));
    let r_bound = floor(&(&x_e * (nu_e.abs() + root) / a2));
    let rb = to_i64(&r_bound, "rank bound")?;
    let half = qi(1) / qi(2);
    let s_slope = beta + &nu_e;
    let s_rank = (beta * beta + a2) * &half;
    let mut candidates = (-rb..=rb)
        .into_par_iter()
        .map(|r| -> Result<Vec<DestabCandidate>> {
            let rq = qi(r);
            let mut found = Vec::new();
            for c in open_range(&(beta * &rq), &x_e) {
                let x = from_int(&c) - beta * &rq;
                let s = &s_slope * &x + &s_rank * &rq;
                let Ok(u) = TruncatedClass::new(r.into(), c, s) else {
                    continue;
                };
                if admissible(p, &e, &x_e, bound, &u) {
                    found.push(DestabCandidate::new(&e, u)?);
                }
            }
            Ok(found)
        })
        .collect::<Result<Vec<_>>>()?
        .concat();
    sort_candidates(&mut candidates);
    Ok(Enumeration {
        class: e,
        point: p.clone(),
        certificate: BoxCertificate {
            r_bound,
            ch1_bound: x_e,
        },
        candidates,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossingCandidate {
    #[serde(flatten)]
    pub candidate: DestabCandidate,
    /// Height where the wall meets the line.
    #[serde(serialize_with = "serialize_q")]
    pub alpha_sq: Q,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineScan {
    pub class: TruncatedClass,
    #[serde(serialize_with = "serialize_q")]
    pub beta0: Q,
    #[serde(serialize_with = "serialize_int")]
    pub r_bound: BigInt,
    pub candidates: Vec<CrossingCandidate>,
}

/// Closed hull of `{y : lo < 2 k y <= hi}` for `k != 0`.
fn y_interval(k: &Q, lo: &Q, hi: &Q) -> (Q, Q) {
    let a = lo / (qi(2) * k);
    let b = hi / (qi(2) * k);
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// All `u` whose wall with `E` meets the line `beta = beta0` at a point where
/// the inequality system of [`enumerate_at`] holds.
pub fn walls_crossing_vertical(e: &TruncatedClass, beta0: &Q) -> Result<LineScan> {
    let delta = checked_class(e)?;
    let (e, x) = in_heart(beta0, e);
    let empty = |e: TruncatedClass| LineScan {
        class: e,
        beta0: beta0.clone(),
        r_bound: BigInt::zero(),
        candidates: Vec::new(),
    };
    if x.is_zero() {
        return Ok(empty(e));
    }
    let y = ch2_beta(beta0, &e);
    let big_r = e.r_q();
    // |2 r y_u| < M and |2 (R - r) y_{E-u}| < M
    let m = std::cmp::max(&x * &x, delta.clone());
    // y_u is a nonzero multiple of 1/(2 q^2) for beta0 = p/q
    let den = from_int(beta0.denom());
    let mut r_bound = floor(&(&m * &den * &den));
    if !y.is_zero() {
        r_bound = r_bound.min(floor(&(big_r.abs() + &m / y.abs())));
    }
    let rb = to_i64(&r_bound, "rank bound")?;
    let mut candidates = (-rb..=rb)
        .into_par_iter()
        .map(|r| -> Result<Vec<CrossingCandidate>> {
            let rq = qi(r);
            let rest = &big_r - &rq;
            if rq.is_zero() && rest.is_zero() {
                return Ok(Vec::new());
            }
            let mut found = Vec::new();
            for c in open_range(&(beta0 * &rq), &x) {
                let cq = from_int(&c);
                let xu = &cq - beta0 * &rq;
                let mut lo: Option<Q> = None;
                let mut hi: Option<Q> = None;
                let mut clip = |(a, b): (Q, Q)| {
                    lo = Some(lo.take().map_or(a.clone(), |l| l.max(a)));
                    hi = Some(hi.take().map_or(b.clone(), |h| h.min(b)));
                };
                if !rq.is_zero() {
                    clip(y_interval(&rq, &(&xu * &xu - &delta), &(&xu * &xu)));
                }
                if !rest.is_zero() {
                    let xv = &x - &xu;
                    let (a, b) = y_interval(&rest, &(&xv * &xv - &delta), &(&xv * &xv));
                    clip((&y - b, &y - a));
                }
                let (Some(lo), Some(hi)) = (lo, hi) else {
                    continue;
                };
                // s = y_u + beta0 c - beta0^2 r / 2
                let offset = beta0 * &cq - beta0 * beta0 * &rq / qi(2);
                let first = ceil(&(qi(2) * (&lo + &offset)));
                let last = floor(&(qi(2) * (&hi + &offset)));
                let mut twice_s = first;
                while twice_s <= last {
                    let u = TruncatedClass::from_twice_s(r.into(), c.clone(), twice_s.clone());
                    twice_s += 1;
                    let yu = ch2_beta(beta0, &u);
                    let slope = &rq * &x - &big_r * &xu;
                    if slope.is_zero() {
                        continue;
                    }
                    let a2 = qi(2) * (&yu * &x - &y * &xu) / slope;
                    if !a2.is_positive() {
                        continue;
                    }
                    let p = TiltPoint::new(beta0.clone(), a2.clone())?;
                    if admissible(&p, &e, &x, &delta, &u) {
                        found.push(CrossingCandidate {
                            candidate: DestabCandidate::new(&e, u)?,
                            alpha_sq: a2,
                        });
                    }
                }
            }
            Ok(found)
        })
        .collect::<Result<Vec<_>>>()?
        .concat();
    candidates.sort_by(|a, b| a.candidate.sub.cmp(&b.candidate.sub));
    Ok(LineScan {
        class: e,
        beta0: beta0.clone(),
        r_bound,
        candidates,
    })
}

/// Which side of the straight wall to search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Negative,
    Positive,
}

impl FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "negative" | "beta_negative" | "left" => Ok(Self::Negative),
            "positive" | "beta_positive" | "right" => Ok(Self::Positive),
            other => Err(Error::parse(0, format!("unknown side `{other}`"))),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Negative => "negative",
            Self::Positive => "positive",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LargestWall {
    pub class: TruncatedClass,
    pub side: Side,
    pub wall: WallDescriptor,
    /// Lattice classes realizing the wall at its top point.
    pub witnesses: Vec<DestabCandidate>,
    /// Vertical lines that were scanned, in order.
    #[serde(serialize_with = "serialize_q_list")]
    pub probes: Vec<Q>,
}

fn serialize_q_list<S: serde::Serializer>(v: &[Q], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(fmt_q))
}

pub const DEFAULT_PROBE_DEPTH: u32 = 12;

pub fn largest_wall(e: &TruncatedClass, side: Side) -> Result<LargestWall> {
    largest_wall_with_depth(e, side, DEFAULT_PROBE_DEPTH)
}

/// Outermost wall among a scan, by height on the scanned line.
fn tallest(scan: &LineScan) -> Option<&CrossingCandidate> {
    scan.candidates
        .iter()
        .max_by(|a, b| a.alpha_sq.cmp(&b.alpha_sq))
}

/// Replace `best` by `other` when `other` strictly contains it.
fn outer(best: WallDescriptor, other: &WallDescriptor) -> Result<WallDescriptor> {
    match is_nested(&best, other)?.relation {
        NestRelation::Outside => Ok(other.clone()),
        NestRelation::Crossing => Err(Error::IncomparableWalls(format!(
            "{} crosses {}",
            best.describe(),
            other.describe()
        ))),
        _ => Ok(best),
    }
}

pub fn largest_wall_with_depth(
    e: &TruncatedClass,
    side: Side,
    max_depth: u32,
) -> Result<LargestWall> {
    if e.is_zero() {
        return Err(Error::ZeroClass);
    }
    if !e.reduced_discriminant().is_positive() {
        return Err(Error::NoWall(format!(
            "discriminant of {e} is not positive"
        )));
    }
    let straight = straight_wall(e);
    let (low, high) = accumulation_points(e)?;
    let target = match side {
        Side::Negative => low,
        Side::Positive => high,
    };
    let on_side = |q: &Q| match (&straight, side) {
        (None, _) => true,
        (Some(b), Side::Negative) => q < b,
        (Some(b), Side::Positive) => q > b,
    };
    let mut probes = Vec::new();
    let mut best: Option<WallDescriptor> = None;
    let scan_line = |q: Q, probes: &mut Vec<Q>| -> Result<Option<WallDescriptor>> {
        probes.push(q.clone());
        let scan = walls_crossing_vertical(e, &q)?;
        Ok(tallest(&scan).map(|c| c.candidate.wall.clone()))
    };
    let levels: Vec<Vec<Q>> = match target.as_rational() {
        Some(b) => vec![vec![b.clone()]],
        None => (0..=max_depth)
            .map(|k| {
                let mut qs = vec![target.floor_dyadic(k), target.ceil_dyadic(k)];
                qs.retain(|q| on_side(q));
                qs
            })
            .collect(),
    };
    let mut found_at = None;
    for (level, qs) in levels.iter().enumerate() {
        for q in qs {
            if probes.contains(q) {
                continue;
            }
            if let Some(w) = scan_line(q.clone(), &mut probes)? {
                best = Some(match best {
                    None => w,
                    Some(b) => outer(b, &w)?,
                });
            }
        }
        if best.is_some() {
            found_at = Some(level);
            break;
        }
    }
    let (Some(mut wall), Some(level)) = (best, found_at) else {
        return Err(Error::NoWall(format!(
            "no wall for {e} on the {side} side within {} probes",
            probes.len()
        )));
    };
    // one more refinement
    if let Some(qs) = levels.get(level + 1) {
        for q in qs {
            if !probes.contains(q) {
                if let Some(w) = scan_line(q.clone(), &mut probes)? {
                    wall = outer(wall, &w)?;
                }
            }
        }
    }
    // every wall through the top of the current one must sit inside it
    while let Some((center, _)) = wall.as_semicircle() {
        let center = center.clone();
        if probes.contains(&center) || !on_side(&center) {
            break;
        }
        probes.push(center.clone());
        let scan = walls_crossing_vertical(e, &center)?;
        let mut next = wall.clone();
        for c in &scan.candidates {
            next = outer(next, &c.candidate.wall)?;
        }
        if next == wall {
            break;
        }
        wall = next;
    }
    let top = wall
        .top()
        .ok_or_else(|| Error::NoWall(format!("largest wall {} has no top", wall.describe())))?;
    let enumeration = enumerate_at(&top, e)?;
    let witnesses = enumeration
        .candidates
        .into_iter()
        .filter(|c| c.wall == wall)
        .collect();
    Ok(LargestWall {
        class: enumeration.class,
        side,
        wall,
        witnesses,
        probes,
    })
}

/// Compare `nu(p, a)` with `nu(p, b)` for `p` on `wall`.
pub fn slope_inequality_on_wall(
    wall: &WallDescriptor,
    p: &TiltPoint,
    a: &TruncatedClass,
    b: &TruncatedClass,
) -> Result<Ordering> {
    if !wall.contains_point(p) {
        return Err(Error::PointNotOnWall(format!(
            "{p} is not on {}",
            wall.describe()
        )));
    }
    Ok(nu(p, a).cmp(&nu(p, b)))
}

/// Accumulation point of `e` on the given side.
pub fn side_accumulation_point(e: &TruncatedClass, side: Side) -> Result<QuadraticSurd> {
    let (low, high) = accumulation_points(e)?;
    Ok(match side {
        Side::Negative => low,
        Side::Positive => high,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn t(r: i64, c: i64, sn: i64, sd: i64) -> TruncatedClass {
        TruncatedClass::from_ints(r, c, sn, sd)
    }

    fn v2() -> TruncatedClass {
        t(3, 0, -1, 1)
    }

    fn w0_top() -> TiltPoint {
        TiltPoint::new(q(-5, 6), q(1, 36)).unwrap()
    }

    pub(crate) fn twelve() -> Vec<TruncatedClass> {
        let mut v = vec![
            t(-1, 1, -1, 2),
            t(-2, 2, -1, 1),
            t(-3, 3, -3, 2),
            t(-4, 4, -2, 1),
            t(-5, 5, -5, 2),
            t(-6, 6, -3, 1),
            t(4, -1, -1, 2),
            t(5, -2, 0, 1),
            t(6, -3, 1, 2),
            t(7, -4, 1, 1),
            t(8, -5, 3, 2),
            t(9, -6, 2, 1),
        ];
        v.sort();
        v
    }

    #[test]
    fn twelve_classes_at_w0_top() {
        let en = enumerate_at(&w0_top(), &v2()).unwrap();
        let subs: Vec<_> = en.candidates.iter().map(|c| c.sub.clone()).collect();
        assert_eq!(subs, twelve());
        assert!(en.certificate.r_bound >= BigInt::from(15));
        for c in &en.candidates {
            assert_eq!(&(&c.sub + &c.quot), &v2());
            assert!(subs.contains(&c.quot));
            assert_eq!(c.wall, WallDescriptor::semicircle(q(-5, 6), q(1, 36)));
        }
    }

    #[test]
    fn nothing_on_line_beta_minus_one() {
        for a2 in [q(1, 100), q(1, 36), qi(1), qi(7)] {
            let p = TiltPoint::new(qi(-1), a2).unwrap();
            assert!(enumerate_at(&p, &v2()).unwrap().candidates.is_empty());
        }
        assert!(walls_crossing_vertical(&v2(), &qi(-1))
            .unwrap()
            .candidates
            .is_empty());
        assert!(walls_crossing_vertical(&t(3, -1, -1, 2), &qi(-1))
            .unwrap()
            .candidates
            .is_empty());
    }

    #[test]
    fn rejects_flat_classes() {
        assert!(matches!(
            enumerate_at(&w0_top(), &t(1, 0, 0, 1)),
            Err(Error::UnboundedRegion(_))
        ));
        assert!(matches!(
            largest_wall(&t(1, 0, 0, 1), Side::Negative),
            Err(Error::NoWall(_))
        ));
    }

    #[test]
    fn largest_wall_for_v2() {
        let lw = largest_wall(&v2(), Side::Negative).unwrap();
        assert_eq!(lw.wall, WallDescriptor::semicircle(q(-5, 6), q(1, 36)));
        let subs: Vec<_> = lw.witnesses.iter().map(|c| c.sub.clone()).collect();
        assert_eq!(subs, twelve());
    }

    #[test]
    fn slope_on_wall() {
        let w0 = WallDescriptor::semicircle(q(-5, 6), q(1, 36));
        let f_l = t(3, -1, -1, 2);
        assert_eq!(
            slope_inequality_on_wall(&w0, &w0_top(), &f_l, &v2()).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            slope_inequality_on_wall(&w0, &w0_top(), &f_l, &f_l).unwrap(),
            Ordering::Equal
        );
        let off = TiltPoint::new(q(-5, 6), q(1, 37)).unwrap();
        assert!(matches!(
            slope_inequality_on_wall(&w0, &off, &f_l, &v2()),
            Err(Error::PointNotOnWall(_))
        ));
    }

    mod monotone {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(32))]

            #[test]
            fn larger_bound_keeps_candidates(
                r in 1i64..4, c in -3i64..4, s in -5i64..6,
                bn in -6i64..6, a in 1i64..8, extra in 1i64..6,
            ) {
                let e = t(r, c, 2 * s + (c * c).rem_euclid(2), 2);
                let delta = e.reduced_discriminant();
                prop_assume!(delta.is_positive());
                let p = TiltPoint::new(q(bn, 3), q(a, 18)).unwrap();
                let small = enumerate_with_bound(&p, &e, &delta);
                let big = enumerate_with_bound(&p, &e, &(&delta + qi(extra)));
                if let (Ok(small), Ok(big)) = (small, big) {
                    for cand in &small.candidates {
                        prop_assert!(big.candidates.contains(cand));
                    }
                }
            }
        }
    }
}
