//! Chern characters in the `H^k` basis and the truncated lattice.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{self, fmt_q, from_int, is_integral, parse_q_list, qi, Q};
use crate::series;

/// Dimension of the ambient variety and the degree `d = H^dimension`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Polarization {
    dimension: usize,
    degree: u32,
}

impl Polarization {
    pub fn new(dimension: usize, degree: u32) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::InvalidPolarization("dimension must be >= 1".into()));
        }
        if degree == 0 {
            return Err(Error::InvalidPolarization("degree must be >= 1".into()));
        }
        Ok(Self { dimension, degree })
    }

    /// The smooth cubic fourfold: dimension 4, `H^4 = 3`.
    pub fn cubic_fourfold() -> Self {
        Self {
            dimension: 4,
            degree: 3,
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn degree_q(&self) -> Q {
        qi(self.degree as i64)
    }

    /// `H^i . (a H^k)` as a number; defined only when `i + k = dimension`.
    pub fn intersect(&self, h_power: usize, class_degree: usize, coefficient: &Q) -> Result<Q> {
        if h_power + class_degree != self.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                found: h_power + class_degree,
            });
        }
        Ok(coefficient * self.degree_q())
    }

    pub(crate) fn len(&self) -> usize {
        self.dimension + 1
    }
}

impl Default for Polarization {
    fn default() -> Self {
        Self::cubic_fourfold()
    }
}

/// `ch = sum_k a_k H^k`, `k = 0..=dimension`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChernCharacter {
    coeffs: Vec<Q>,
}

impl ChernCharacter {
    pub fn new(coeffs: Vec<Q>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        Ok(Self { coeffs })
    }

    /// Convenience constructor from `(numerator, denominator)` pairs.
    pub fn from_fractions(parts: &[(i64, i64)]) -> Self {
        Self {
            coeffs: parts.iter().map(|&(n, d)| rational::q(n, d)).collect(),
        }
    }

    pub fn zero(pol: &Polarization) -> Self {
        Self {
            coeffs: vec![Q::zero(); pol.len()],
        }
    }

    /// Character of the structure sheaf.
    pub fn unit(pol: &Polarization) -> Self {
        Self {
            coeffs: series::one(pol.len()),
        }
    }

    /// `ch(O(kH)) = exp(kH)`.
    pub fn line_bundle(pol: &Polarization, k: i64) -> Self {
        Self {
            coeffs: series::exp(&qi(k), pol.len()),
        }
    }

    pub fn dimension(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Q {
        &self.coeffs[k]
    }

    pub fn rank(&self) -> &Q {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `ch^beta = exp(-beta H) . ch`.
    pub fn twist(&self, beta: &Q) -> Self {
        let len = self.coeffs.len();
        Self {
            coeffs: series::mul(&series::exp(&-beta, len), &self.coeffs, len),
        }
    }

    /// Character of `E (x) O(kH)`.
    pub fn tensor_line_bundle(&self, k: i64) -> Self {
        self.twist(&qi(-k))
    }

    /// `a_k -> (-1)^k a_k`.
    pub fn dual(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, a)| if k % 2 == 0 { a.clone() } else { -a })
                .collect(),
        }
    }

    /// Cup product in `Q[H]/(H^{n+1})`.
    pub fn product(&self, other: &Self) -> Self {
        let len = self.coeffs.len();
        Self {
            coeffs: series::mul(&self.coeffs, &other.coeffs, len),
        }
    }

    pub fn scale(&self, k: &Q) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * k).collect(),
        }
    }

    /// `(ch_0, ch_1, ch_2)` as an element of the lattice generated by
    /// `(1,0,0)`, `(0,H,0)` and `(0,0,H^2/2)`.
    pub fn truncate(&self) -> Result<TruncatedClass> {
        let get = |k: usize| self.coeffs.get(k).cloned().unwrap_or_else(Q::zero);
        let (a0, a1, a2) = (get(0), get(1), get(2));
        let twice = &a2 * qi(2);
        if !is_integral(&a0) || !is_integral(&a1) || !is_integral(&twice) {
            return Err(Error::NotInLattice(self.to_string()));
        }
        Ok(TruncatedClass {
            r: a0.to_integer(),
            c: a1.to_integer(),
            s: a2,
        })
    }

    /// Coefficients with the last two degrees rewritten in terms of the line
    /// class `l = H^{n-1}/d` and the point class `pt = H^n/d`.
    pub fn to_line_point(&self, pol: &Polarization) -> Vec<Q> {
        let n = self.dimension();
        let d = pol.degree_q();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, a)| {
                if n >= 2 && k + 1 >= n {
                    a * &d
                } else {
                    a.clone()
                }
            })
            .collect()
    }

    pub fn from_line_point(coeffs: Vec<Q>, pol: &Polarization) -> Result<Self> {
        let n = coeffs.len().saturating_sub(1);
        let d = pol.degree_q();
        Self::new(
            coeffs
                .into_iter()
                .enumerate()
                .map(|(k, a)| if n >= 2 && k + 1 >= n { a / &d } else { a })
                .collect(),
        )
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(parse_q_list(text)?)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Q, &Q) -> Q) -> Self {
        assert_eq!(
            self.coeffs.len(),
            other.coeffs.len(),
            "characters of different dimensions"
        );
        Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }
}

impl fmt::Display for ChernCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(fmt_q).collect();
        f.write_str(&parts.join(","))
    }
}

impl Serialize for ChernCharacter {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(fmt_q))
    }
}

impl Add for &ChernCharacter {
    type Output = ChernCharacter;
    fn add(self, rhs: Self) -> ChernCharacter {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &ChernCharacter {
    type Output = ChernCharacter;
    fn sub(self, rhs: Self) -> ChernCharacter {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &ChernCharacter {
    type Output = ChernCharacter;
    fn neg(self) -> ChernCharacter {
        self.scale(&-Q::one())
    }
}

impl Mul<&ChernCharacter> for i64 {
    type Output = ChernCharacter;
    fn mul(self, rhs: &ChernCharacter) -> ChernCharacter {
        rhs.scale(&qi(self))
    }
}

/// `(r, cH, sH^2)` with `r, c` integral and `2s` integral.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TruncatedClass {
    #[serde(serialize_with = "rational::serialize_int")]
    r: BigInt,
    #[serde(serialize_with = "rational::serialize_int")]
    c: BigInt,
    #[serde(serialize_with = "rational::serialize_q")]
    s: Q,
}

impl TruncatedClass {
    pub fn new(r: BigInt, c: BigInt, s: Q) -> Result<Self> {
        if !is_integral(&(&s * qi(2))) {
            return Err(Error::NotInLattice(format!("{r},{c},{}", fmt_q(&s))));
        }
        Ok(Self { r, c, s })
    }

    /// `(r, c, s_numer/s_denom)`; panics if `2s` is not integral.
    pub fn from_ints(r: i64, c: i64, s_numer: i64, s_denom: i64) -> Self {
        Self::new(r.into(), c.into(), rational::q(s_numer, s_denom))
            .expect("class outside the lattice")
    }

    /// Build from `(r, c, 2s)`.
    pub(crate) fn from_twice_s(r: BigInt, c: BigInt, twice_s: BigInt) -> Self {
        Self {
            r,
            c,
            s: Q::new(twice_s, BigInt::from(2)),
        }
    }

    pub fn r(&self) -> &BigInt {
        &self.r
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn s(&self) -> &Q {
        &self.s
    }

    pub fn r_q(&self) -> Q {
        from_int(&self.r)
    }

    pub fn c_q(&self) -> Q {
        from_int(&self.c)
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero() && self.c.is_zero() && self.s.is_zero()
    }

    /// Extend by zeros to a full character of the given dimension.
    pub fn to_character(&self, pol: &Polarization) -> ChernCharacter {
        let mut coeffs = vec![Q::zero(); pol.len()];
        let parts = [self.r_q(), self.c_q(), self.s.clone()];
        for (slot, value) in coeffs.iter_mut().zip(parts) {
            *slot = value;
        }
        ChernCharacter { coeffs }
    }

    pub fn scale(&self, k: i64) -> Self {
        let k = BigInt::from(k);
        Self {
            r: &self.r * &k,
            c: &self.c * &k,
            s: &self.s * from_int(&k),
        }
    }

    /// Whether `other` is a rational multiple of `self` (both nonzero).
    pub fn is_proportional(&self, other: &Self) -> bool {
        let (a, b) = (self.as_vec(), other.as_vec());
        (0..3).all(|i| (i + 1..3).all(|j| &a[i] * &b[j] == &a[j] * &b[i]))
    }

    pub(crate) fn as_vec(&self) -> [Q; 3] {
        [self.r_q(), self.c_q(), self.s.clone()]
    }

    pub fn parse(text: &str) -> Result<Self> {
        let parts = parse_q_list(text)?;
        if parts.len() != 3 {
            return Err(Error::parse(
                0,
                format!("expected r,c,s with 3 entries, got {}", parts.len()),
            ));
        }
        let ch = ChernCharacter::new(parts)?;
        ch.truncate().map_err(|_| {
            Error::parse(
                0,
                format!("`{text}` is not in the lattice (r, c integral, 2s integral)"),
            )
        })
    }

    pub fn is_positive_rank(&self) -> bool {
        self.r.is_positive()
    }

    /// Truncation of `ch . e^{kH}`.
    pub fn tensor_line_bundle(&self, k: i64) -> Self {
        let k = BigInt::from(k);
        let kq = from_int(&k);
        Self {
            r: self.r.clone(),
            c: &self.c + &k * &self.r,
            s: &self.s + &kq * self.c_q() + &kq * &kq * self.r_q() / qi(2),
        }
    }

    /// `s - c^2/2` is integral, as for `ch_2 = c_1^2/2 - c_2` with `c_2 = kH^2`.
    pub fn is_realizable(&self) -> bool {
        let c = self.c_q();
        is_integral(&(&self.s - &c * &c / qi(2)))
    }

    /// `c^2 - 2rs`, the discriminant without the `d^2` factor.
    pub fn reduced_discriminant(&self) -> Q {
        let c = self.c_q();
        &c * &c - qi(2) * self.r_q() * &self.s
    }
}

impl fmt::Display for TruncatedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.r, self.c, fmt_q(&self.s))
    }
}

impl Add for &TruncatedClass {
    type Output = TruncatedClass;
    fn add(self, rhs: Self) -> TruncatedClass {
        TruncatedClass {
            r: &self.r + &rhs.r,
            c: &self.c + &rhs.c,
            s: &self.s + &rhs.s,
        }
    }
}

impl Sub for &TruncatedClass {
    type Output = TruncatedClass;
    fn sub(self, rhs: Self) -> TruncatedClass {
        TruncatedClass {
            r: &self.r - &rhs.r,
            c: &self.c - &rhs.c,
            s: &self.s - &rhs.s,
        }
    }
}

impl Neg for &TruncatedClass {
    type Output = TruncatedClass;
    fn neg(self) -> TruncatedClass {
        TruncatedClass {
            r: -&self.r,
            c: -&self.c,
            s: -&self.s,
        }
    }
}

/// Either a full character or a truncated class, depending on the entry count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedClass {
    Truncated(TruncatedClass),
    Full(ChernCharacter),
}

/// Three entries parse as a lattice class, `dimension + 1` entries as a character.
pub fn parse_class(text: &str, pol: &Polarization) -> Result<ParsedClass> {
    let parts = parse_q_list(text)?;
    match parts.len() {
        3 => TruncatedClass::parse(text).map(ParsedClass::Truncated),
        n if n == pol.len() => ChernCharacter::new(parts).map(ParsedClass::Full),
        n => Err(Error::parse(
            0,
            format!("expected 3 or {} entries, got {n}", pol.len()),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn ch(parts: &[(i64, i64)]) -> ChernCharacter {
        ChernCharacter::from_fractions(parts)
    }

    #[test]
    fn twist_of_unit_is_exponential() {
        let pol = Polarization::default();
        let beta = q(2, 7);
        let t = ChernCharacter::unit(&pol).twist(&beta);
        let b = beta.clone();
        let expected = vec![
            qi(1),
            -b.clone(),
            &b * &b / qi(2),
            -(&b * &b * &b) / qi(6),
            &b * &b * &b * &b / qi(24),
        ];
        assert_eq!(t.coeffs(), expected.as_slice());
    }

    #[test]
    fn twist_of_f_c_at_minus_one() {
        let f_c = ch(&[(3, 1), (0, 1), (-1, 1), (0, 1), (1, 4)]);
        let t = f_c.twist(&qi(-1));
        assert_eq!(t.coeff(1), &qi(3));
        assert_eq!(t.coeff(2), &q(1, 2));
    }

    #[test]
    fn tensor_examples() {
        let pol = Polarization::default();
        let i_cs = ch(&[(0, 1), (0, 1), (1, 1), (-2, 1), (7, 4)]);
        assert_eq!(
            i_cs.tensor_line_bundle(2),
            ch(&[(0, 1), (0, 1), (1, 1), (0, 1), (-1, 4)])
        );
        assert_eq!(
            ChernCharacter::unit(&pol).tensor_line_bundle(-1),
            ch(&[(1, 1), (-1, 1), (1, 2), (-1, 6), (1, 24)])
        );
        assert_eq!(
            ChernCharacter::line_bundle(&pol, -1),
            ChernCharacter::unit(&pol).tensor_line_bundle(-1)
        );
        assert_eq!(i_cs.tensor_line_bundle(0), i_cs);
    }

    #[test]
    fn dual_examples() {
        assert_eq!(
            ch(&[(1, 1), (-1, 1), (1, 2), (-1, 6), (1, 24)]).dual(),
            ch(&[(1, 1), (1, 1), (1, 2), (1, 6), (1, 24)])
        );
        let v1 = ch(&[(0, 1), (0, 1), (1, 1), (0, 1), (-1, 4)]);
        assert_eq!(v1.dual(), v1);
        let f_l = ch(&[(3, 1), (-1, 1), (-1, 2), (1, 6), (1, 8)]);
        assert_eq!(f_l.dual(), ch(&[(3, 1), (1, 1), (-1, 2), (-1, 6), (1, 8)]));
    }

    #[test]
    fn truncate_examples() {
        let f_c = ch(&[(3, 1), (0, 1), (-1, 1), (0, 1), (1, 4)]);
        assert_eq!(
            f_c.truncate().unwrap(),
            TruncatedClass::from_ints(3, 0, -1, 1)
        );
        let o_minus = ch(&[(1, 1), (-1, 1), (1, 2), (-1, 6), (1, 24)]);
        assert_eq!(
            o_minus.truncate().unwrap(),
            TruncatedClass::from_ints(1, -1, 1, 2)
        );
        assert!(matches!(
            ch(&[(1, 1), (1, 2), (0, 1), (0, 1), (0, 1)]).truncate(),
            Err(Error::NotInLattice(_))
        ));
    }

    #[test]
    fn line_point_round_trip() {
        let pol = Polarization::default();
        let i_s = ch(&[(1, 1), (0, 1), (-1, 1), (1, 1), (-7, 12)]);
        let lp = i_s.to_line_point(&pol);
        assert_eq!(lp, vec![qi(1), qi(0), qi(-1), qi(3), q(-7, 4)]);
        assert_eq!(ChernCharacter::from_line_point(lp, &pol).unwrap(), i_s);
    }

    #[test]
    fn parse_examples() {
        let pol = Polarization::default();
        assert_eq!(
            parse_class("3,0,-1", &pol).unwrap(),
            ParsedClass::Truncated(TruncatedClass::from_ints(3, 0, -1, 1))
        );
        assert_eq!(
            parse_class("6,-3,-1/2,1/2,1/8", &pol).unwrap(),
            ParsedClass::Full(ch(&[(6, 1), (-3, 1), (-1, 2), (1, 2), (1, 8)]))
        );
        assert!(matches!(
            parse_class("3,0,0.5", &pol),
            Err(Error::Parse { .. })
        ));
        let text = "6,-3,-1/2,1/2,1/8";
        assert_eq!(ChernCharacter::parse(text).unwrap().to_string(), text);
    }

    #[test]
    fn polarization_intersections() {
        let pol = Polarization::default();
        assert_eq!(pol.intersect(3, 1, &qi(2)).unwrap(), qi(6));
        assert!(pol.intersect(2, 1, &qi(2)).is_err());
        assert!(Polarization::new(0, 3).is_err());
    }
}
