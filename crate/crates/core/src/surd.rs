//! Exact numbers `a + b sqrt(D)` with rational `a, b` and squarefree `D >= 0`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::rational::{ceil, floor, fmt_q, from_int, Q};

#[derive(Debug, Clone)]
pub struct QuadraticSurd {
    a: Q,
    b: Q,
    radicand: BigInt,
}

/// Split `n = m^2 k` with `k` squarefree (trial division), returning `(m, k)`.
fn square_part(n: &BigInt) -> (BigInt, BigInt) {
    let mut m = BigInt::one();
    let mut k = BigInt::one();
    let mut rest = n.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        m *= p.pow(e / 2);
        if e % 2 == 1 {
            k *= &p;
        }
        p += 1;
    }
    (m, k * rest)
}

/// Sign of `a + b sqrt(m)` for `m >= 0`.
fn sign2(a: &Q, b: &Q, m: &Q) -> Ordering {
    let sa = a.cmp(&Q::zero());
    let sb = if m.is_zero() {
        Ordering::Equal
    } else {
        b.cmp(&Q::zero())
    };
    if sb == Ordering::Equal || sa == sb {
        return if sa == Ordering::Equal { sb } else { sa };
    }
    if sa == Ordering::Equal {
        return sb;
    }
    match (a * a).cmp(&(b * b * m)) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => Ordering::Equal,
    }
}

/// Sign of `a + b sqrt(m) + c sqrt(n)`.
fn sign3(a: &Q, b: &Q, m: &Q, c: &Q, n: &Q) -> Ordering {
    let su = sign2(a, b, m);
    let sv = if n.is_zero() {
        Ordering::Equal
    } else {
        c.cmp(&Q::zero())
    };
    if sv == Ordering::Equal || su == sv {
        return if su == Ordering::Equal { sv } else { su };
    }
    if su == Ordering::Equal {
        return sv;
    }
    // compare (a + b sqrt m)^2 with c^2 n
    let two = Q::from_integer(2.into());
    let rational = a * a + b * b * m - c * c * n;
    match sign2(&rational, &(two * a * b), m) {
        Ordering::Greater => su,
        Ordering::Less => sv,
        Ordering::Equal => Ordering::Equal,
    }
}

impl QuadraticSurd {
    /// `a + b sqrt(radicand)`, normalized so the radicand is squarefree.
    pub fn new(a: Q, b: Q, radicand: BigInt) -> Self {
        assert!(!radicand.is_negative(), "negative radicand");
        if b.is_zero() || radicand.is_zero() {
            return Self::rational(a);
        }
        let (m, k) = square_part(&radicand);
        let b = b * from_int(&m);
        if k.is_one() {
            return Self::rational(a + b);
        }
        Self { a, b, radicand: k }
    }

    pub fn rational(a: Q) -> Self {
        Self {
            a,
            b: Q::zero(),
            radicand: BigInt::zero(),
        }
    }

    /// `sqrt(x)` for rational `x >= 0`.
    pub fn sqrt(x: &Q) -> Self {
        assert!(!x.is_negative(), "square root of a negative number");
        // sqrt(p/q) = sqrt(pq)/q
        let (p, q) = (x.numer(), x.denom());
        Self::new(Q::zero(), Q::new(BigInt::one(), q.clone()), p * q)
    }

    pub fn a(&self) -> &Q {
        &self.a
    }

    pub fn b(&self) -> &Q {
        &self.b
    }

    pub fn radicand(&self) -> &BigInt {
        &self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Q> {
        self.is_rational().then_some(&self.a)
    }

    pub fn add_rational(&self, x: &Q) -> Self {
        Self {
            a: &self.a + x,
            ..self.clone()
        }
    }

    pub fn scale(&self, k: &Q) -> Self {
        if k.is_zero() {
            return Self::rational(Q::zero());
        }
        Self {
            a: &self.a * k,
            b: &self.b * k,
            radicand: self.radicand.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Q::one())
    }

    /// Sign of `self - x` for rational `x`.
    pub fn cmp_rational(&self, x: &Q) -> Ordering {
        sign2(&(&self.a - x), &self.b, &from_int(&self.radicand))
    }

    /// Largest integer `<= self`.
    pub fn floor(&self) -> BigInt {
        if self.is_rational() {
            return floor(&self.a);
        }
        // sqrt(D) lies in [isqrt(D), isqrt(D) + 1]
        let root = self.radicand.sqrt();
        let lo_hi = [
            &self.a + &self.b * from_int(&root),
            &self.a + &self.b * from_int(&(&root + 1)),
        ];
        let (lo, hi) = if lo_hi[0] <= lo_hi[1] {
            (floor(&lo_hi[0]), ceil(&lo_hi[1]))
        } else {
            (floor(&lo_hi[1]), ceil(&lo_hi[0]))
        };
        // invariant: lo <= self < hi + 1
        let (mut lo, mut hi) = (lo, hi);
        while &hi - &lo > BigInt::one() {
            let mid = (&lo + &hi).div_floor(&BigInt::from(2));
            if self.cmp_rational(&from_int(&mid)) == Ordering::Less {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        if self.cmp_rational(&from_int(&hi)) == Ordering::Less {
            lo
        } else {
            hi
        }
    }

    /// Largest multiple of `2^-k` that is `<= self`.
    pub fn floor_dyadic(&self, k: u32) -> Q {
        let scale = from_int(&(BigInt::one() << k));
        from_int(&self.scale(&scale).floor()) / scale
    }

    /// Smallest multiple of `2^-k` that is `>= self`.
    pub fn ceil_dyadic(&self, k: u32) -> Q {
        -self.neg().floor_dyadic(k)
    }

    pub fn to_f64(&self) -> f64 {
        let a = crate::rational::to_f64(&self.a);
        let b = crate::rational::to_f64(&self.b);
        a + b * self.radicand.to_f64().unwrap_or(f64::NAN).sqrt()
    }
}

impl PartialEq for QuadraticSurd {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for QuadraticSurd {}

impl PartialOrd for QuadraticSurd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadraticSurd {
    fn cmp(&self, other: &Self) -> Ordering {
        sign3(
            &(&self.a - &other.a),
            &self.b,
            &from_int(&self.radicand),
            &-&other.b,
            &from_int(&other.radicand),
        )
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return f.write_str(&fmt_q(&self.a));
        }
        let root = format!("sqrt({})", self.radicand);
        let b_abs = self.b.abs();
        let term = if b_abs.is_one() {
            root
        } else if b_abs.numer().is_one() {
            format!("{root}/{}", b_abs.denom())
        } else {
            format!("{}*{root}", fmt_q(&b_abs))
        };
        match (self.a.is_zero(), self.b.is_negative()) {
            (true, false) => write!(f, "{term}"),
            (true, true) => write!(f, "-{term}"),
            (false, false) => write!(f, "{} + {term}", fmt_q(&self.a)),
            (false, true) => write!(f, "{} - {term}", fmt_q(&self.a)),
        }
    }
}

impl Serialize for QuadraticSurd {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("QuadraticSurd", 5)?;
        st.serialize_field("exact", &self.to_string())?;
        st.serialize_field("a", &fmt_q(&self.a))?;
        st.serialize_field("b", &fmt_q(&self.b))?;
        st.serialize_field("radicand", &self.radicand.to_string())?;
        st.serialize_field("approx", &self.to_f64())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};
    use proptest::prelude::*;

    fn surd(a: Q, b: Q, d: i64) -> QuadraticSurd {
        QuadraticSurd::new(a, b, BigInt::from(d))
    }

    #[test]
    fn normalizes_radicand() {
        let x = surd(qi(0), q(1, 3), 24);
        assert_eq!(x.radicand(), &BigInt::from(6));
        assert_eq!(x.b(), &q(2, 3));
        assert!(surd(qi(1), qi(1), 9).is_rational());
        assert_eq!(surd(qi(1), qi(1), 9), QuadraticSurd::rational(qi(4)));
    }

    #[test]
    fn sqrt_of_fraction() {
        let x = QuadraticSurd::sqrt(&q(2, 3));
        assert_eq!(x, surd(qi(0), q(1, 3), 6));
        assert_eq!(x.to_string(), "sqrt(6)/3");
        assert_eq!(x.neg().to_string(), "-sqrt(6)/3");
    }

    #[test]
    fn ordering_across_radicands() {
        let a = surd(qi(0), qi(1), 2);
        let b = surd(qi(0), qi(1), 3);
        assert!(a < b);
        assert!(surd(qi(1), qi(1), 2) < surd(qi(0), qi(1), 6));
        assert!(surd(qi(1), qi(1), 3) > surd(qi(0), qi(1), 7));
        assert!(surd(qi(-1), qi(1), 2) > QuadraticSurd::rational(q(41, 100)));
        assert!(surd(qi(-1), qi(1), 2) < QuadraticSurd::rational(q(42, 100)));
    }

    #[test]
    fn floors() {
        let beta = surd(qi(0), q(-1, 3), 6);
        assert_eq!(beta.floor(), BigInt::from(-1));
        assert_eq!(beta.floor_dyadic(2), q(-1, 1));
        assert_eq!(beta.ceil_dyadic(2), q(-3, 4));
        assert_eq!(beta.floor_dyadic(3), q(-7, 8));
        assert_eq!(beta.ceil_dyadic(3), q(-3, 4));
    }

    proptest! {
        #[test]
        fn order_matches_floats(a in -50i64..50, b in -50i64..50, d in 0i64..60, x in -50i64..50, y in -50i64..50, e in 0i64..60) {
            let s = surd(q(a, 7), q(b, 5), d);
            let t = surd(q(x, 7), q(y, 5), e);
            let (fs, ft) = (s.to_f64(), t.to_f64());
            if (fs - ft).abs() > 1e-9 {
                prop_assert_eq!(s.cmp(&t), fs.partial_cmp(&ft).unwrap());
            }
            prop_assert_eq!(s.cmp(&t), t.cmp(&s).reverse());
        }

        #[test]
        fn floor_brackets(a in -500i64..500, b in -50i64..50, d in 0i64..200) {
            let s = surd(q(a, 9), q(b, 4), d);
            let f = from_int(&s.floor());
            prop_assert!(s.cmp_rational(&f) != Ordering::Less);
            prop_assert!(s.cmp_rational(&(f + qi(1))) == Ordering::Less);
        }
    }
}
