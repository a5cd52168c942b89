//! Hirzebruch-Riemann-Roch on a smooth hypersurface.

use std::fmt;
use std::ops::{Add, Sub};

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::chern::{ChernCharacter, Polarization};
use crate::error::{Error, Result};
use crate::rational::{factorial, fmt_q, qi, Q};
use crate::series;

/// `td = sum_k t_k H^k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ToddClass {
    #[serde(serialize_with = "serialize_coeffs")]
    coeffs: Vec<Q>,
}

fn serialize_coeffs<S: serde::Serializer>(c: &[Q], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(c.iter().map(fmt_q))
}

/// Total Chern class of the tangent bundle of a degree `d` hypersurface in
/// `P^{n+1}`: `(1+H)^{n+2} / (1+dH)`, as coefficients of `H^k`.
pub fn tangent_chern_classes(pol: &Polarization) -> Vec<Q> {
    let len = pol.dimension() + 1;
    let ambient = series::pow(&[Q::one(), Q::one()], pol.dimension() as u32 + 2, len);
    let normal = [Q::one(), pol.degree_q()];
    series::mul(&ambient, &series::inverse(&normal, len), len)
}

impl ToddClass {
    pub fn new(coeffs: Vec<Q>) -> Self {
        Self { coeffs }
    }

    /// Todd class of the hypersurface, from its Chern classes through the
    /// universal Todd polynomials. Supports dimension up to 4.
    pub fn of_hypersurface(pol: &Polarization) -> Result<Self> {
        let n = pol.dimension();
        if n > 4 {
            return Err(Error::Unsupported(format!(
                "Todd polynomials are implemented up to dimension 4, got {n}"
            )));
        }
        let mut c = tangent_chern_classes(pol);
        c.resize(5, Q::zero());
        let (c1, c2, c3, c4) = (&c[1], &c[2], &c[3], &c[4]);
        let td = [
            Q::one(),
            c1 / qi(2),
            (c1 * c1 + c2) / qi(12),
            c1 * c2 / qi(24),
            (-(c1 * c1 * c1 * c1) + qi(4) * c1 * c1 * c2 + qi(3) * c2 * c2 + c1 * c3 - c4)
                / qi(720),
        ];
        Ok(Self {
            coeffs: td[..=n].to_vec(),
        })
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }
}

/// `td(Y)` for the cubic fourfold.
pub fn todd_cubic_fourfold() -> ToddClass {
    ToddClass::of_hypersurface(&Polarization::cubic_fourfold()).expect("dimension 4 is supported")
}

/// Polynomial in `n` with rational coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertPolynomial {
    coeffs: Vec<Q>,
}

impl HilbertPolynomial {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Q::zero());
        }
        Self { coeffs }
    }

    pub fn from_fractions(parts: &[(i64, i64)]) -> Self {
        Self::new(
            parts
                .iter()
                .map(|&(a, b)| crate::rational::q(a, b))
                .collect(),
        )
    }

    /// `binomial(n + shift, k)` as a polynomial in `n`.
    pub fn binomial(shift: i64, k: usize) -> Self {
        let mut poly = vec![Q::one()];
        for i in 0..k {
            // multiply by (n + shift - i)
            let root = qi(shift - i as i64);
            let mut next = vec![Q::zero(); poly.len() + 1];
            for (j, a) in poly.iter().enumerate() {
                next[j] += a * &root;
                next[j + 1] += a;
            }
            poly = next;
        }
        let f = factorial(k);
        Self::new(poly.into_iter().map(|a| a / &f).collect())
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    /// Coefficient of `n^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Q {
        self.coeffs.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.iter().all(Zero::is_zero) {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn eval(&self, n: &Q) -> Q {
        self.coeffs
            .iter()
            .rev()
            .fold(Q::zero(), |acc, a| acc * n + a)
    }

    pub fn scale(&self, k: &Q) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * k).collect())
    }

    fn zip(&self, other: &Self, f: impl Fn(Q, Q) -> Q) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|k| f(self.coeff(k), other.coeff(k))).collect())
    }
}

impl Add for &HilbertPolynomial {
    type Output = HilbertPolynomial;
    fn add(self, rhs: Self) -> HilbertPolynomial {
        self.zip(rhs, |a, b| a + b)
    }
}

impl Sub for &HilbertPolynomial {
    type Output = HilbertPolynomial;
    fn sub(self, rhs: Self) -> HilbertPolynomial {
        self.zip(rhs, |a, b| a - b)
    }
}

impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, a) in self.coeffs.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let body = match k {
                0 => fmt_q(&a.abs()),
                _ if a.abs().is_one() => String::new(),
                _ => format!("{}*", fmt_q(&a.abs())),
            };
            let var = match k {
                0 => String::new(),
                1 => "n".to_string(),
                _ => format!("n^{k}"),
            };
            let sign = if a.is_negative() { "-" } else { "+" };
            terms.push((sign, format!("{body}{var}")));
        }
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (sign, term)) in terms.iter().enumerate() {
            match (i, *sign) {
                (0, "-") => write!(f, "-{term}")?,
                (0, _) => write!(f, "{term}")?,
                (_, s) => write!(f, " {s} {term}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for HilbertPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(fmt_q))
    }
}

/// Riemann-Roch calculus for a fixed polarization and Todd class.
#[derive(Debug, Clone)]
pub struct RiemannRoch {
    pol: Polarization,
    todd: ToddClass,
}

impl RiemannRoch {
    pub fn new(pol: Polarization) -> Result<Self> {
        let todd = ToddClass::of_hypersurface(&pol)?;
        Ok(Self { pol, todd })
    }

    pub fn cubic_fourfold() -> Self {
        Self {
            pol: Polarization::cubic_fourfold(),
            todd: todd_cubic_fourfold(),
        }
    }

    /// Use an explicit Todd class, e.g. to test that a wrong one is caught.
    pub fn with_todd(pol: Polarization, todd: ToddClass) -> Result<Self> {
        if todd.coeffs.len() != pol.dimension() + 1 {
            return Err(Error::DimensionMismatch {
                expected: pol.dimension() + 1,
                found: todd.coeffs.len(),
            });
        }
        Ok(Self { pol, todd })
    }

    pub fn polarization(&self) -> &Polarization {
        &self.pol
    }

    pub fn todd(&self) -> &ToddClass {
        &self.todd
    }

    fn check_dim(&self, ch: &ChernCharacter) -> Result<()> {
        if ch.dimension() != self.pol.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.pol.dimension() + 1,
                found: ch.dimension() + 1,
            });
        }
        Ok(())
    }

    /// `chi = int ch . td = d * sum_k a_k t_{n-k}`.
    pub fn euler_characteristic(&self, ch: &ChernCharacter) -> Result<Q> {
        self.check_dim(ch)?;
        let n = self.pol.dimension();
        let top: Q = ch
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, a)| a * &self.todd.coeffs[n - k])
            .sum();
        Ok(top * self.pol.degree_q())
    }

    /// `chi(a, b) = int ch(a)^dual . ch(b) . td`.
    pub fn euler_pairing(&self, a: &ChernCharacter, b: &ChernCharacter) -> Result<Q> {
        self.check_dim(a)?;
        self.check_dim(b)?;
        self.euler_characteristic(&a.dual().product(b))
    }

    /// `P(n) = chi(E (x) O(nH))` as an exact polynomial.
    pub fn hilbert_polynomial(&self, ch: &ChernCharacter) -> Result<HilbertPolynomial> {
        self.check_dim(ch)?;
        let n = self.pol.dimension();
        let d = self.pol.degree_q();
        // coefficient of n^m: d/m! * sum_j a_j t_{n-j-m}
        let coeffs = (0..=n)
            .map(|m| {
                let inner: Q = (0..=n - m)
                    .map(|j| ch.coeff(j) * &self.todd.coeffs[n - j - m])
                    .sum();
                inner * &d / factorial(m)
            })
            .collect();
        Ok(HilbertPolynomial::new(coeffs))
    }

    /// `P / rank` for positive rank, `P` itself for torsion classes.
    pub fn reduced_hilbert_polynomial(&self, ch: &ChernCharacter) -> Result<HilbertPolynomial> {
        if ch.is_zero() {
            return Err(Error::ZeroClass);
        }
        let p = self.hilbert_polynomial(ch)?;
        if ch.rank().is_positive() {
            Ok(p.scale(&ch.rank().recip()))
        } else {
            Ok(p)
        }
    }

    /// Inverse of [`Self::hilbert_polynomial`]: the map is triangular with
    /// nonzero diagonal `d/m!`, so every polynomial of degree `<= n` comes
    /// from exactly one rational character.
    pub fn character_from_hilbert(&self, poly: &HilbertPolynomial) -> Result<ChernCharacter> {
        let n = self.pol.dimension();
        if poly.coeffs().len() > n + 1 {
            return Err(Error::DimensionMismatch {
                expected: n + 1,
                found: poly.coeffs().len(),
            });
        }
        let d = self.pol.degree_q();
        let mut a = vec![Q::zero(); n + 1];
        // n^m coefficient involves a_0..a_{n-m}; solve for a_{n-m} from the top.
        for m in (0..=n).rev() {
            let j = n - m;
            let target = poly.coeff(m) * factorial(m) / &d;
            let known: Q = (0..j).map(|i| &a[i] * &self.todd.coeffs[n - i - m]).sum();
            a[j] = (target - known) / &self.todd.coeffs[0];
        }
        ChernCharacter::new(a)
    }
}

impl Default for RiemannRoch {
    fn default() -> Self {
        Self::cubic_fourfold()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn rr() -> RiemannRoch {
        RiemannRoch::cubic_fourfold()
    }

    fn ch(parts: &[(i64, i64)]) -> ChernCharacter {
        ChernCharacter::from_fractions(parts)
    }

    #[test]
    fn chern_classes_of_cubic_fourfold() {
        let c = tangent_chern_classes(&Polarization::cubic_fourfold());
        assert_eq!(c, vec![qi(1), qi(3), qi(6), qi(2), qi(9)]);
    }

    #[test]
    fn todd_class_values() {
        let td = todd_cubic_fourfold();
        assert_eq!(td.coeffs(), &[qi(1), q(3, 2), q(5, 4), q(3, 4), q(1, 3)]);
    }

    #[test]
    fn euler_characteristics() {
        let rr = rr();
        let pol = Polarization::default();
        assert_eq!(
            rr.euler_characteristic(&ChernCharacter::unit(&pol))
                .unwrap(),
            qi(1)
        );
        let o_c = ch(&[(0, 1), (0, 1), (0, 1), (1, 1), (-7, 6)]);
        assert_eq!(rr.euler_characteristic(&o_c).unwrap(), qi(1));
        let f_c = ch(&[(3, 1), (0, 1), (-1, 1), (0, 1), (1, 4)]);
        assert_eq!(rr.euler_characteristic(&f_c).unwrap(), qi(0));
    }

    #[test]
    fn euler_pairings() {
        let rr = rr();
        let pol = Polarization::default();
        let o = ChernCharacter::unit(&pol);
        assert_eq!(
            rr.euler_pairing(&o, &ChernCharacter::line_bundle(&pol, 1))
                .unwrap(),
            qi(6)
        );
        let f_c = ch(&[(3, 1), (0, 1), (-1, 1), (0, 1), (1, 4)]);
        for i in 0..3 {
            let oi = ChernCharacter::line_bundle(&pol, i);
            assert_eq!(rr.euler_pairing(&oi, &f_c).unwrap(), qi(0), "i = {i}");
        }
        let lambda1 = ch(&[(3, 1), (-1, 1), (-1, 2), (1, 6), (1, 8)]);
        assert_eq!(rr.euler_pairing(&lambda1, &lambda1).unwrap(), qi(-2));
    }

    #[test]
    fn hilbert_polynomials() {
        let rr = rr();
        let o_s = ch(&[(0, 1), (0, 1), (1, 1), (-1, 1), (7, 12)]);
        assert_eq!(
            rr.hilbert_polynomial(&o_s).unwrap(),
            HilbertPolynomial::from_fractions(&[(1, 1), (3, 2), (3, 2)])
        );
        let o_c = ch(&[(0, 1), (0, 1), (0, 1), (1, 1), (-7, 6)]);
        assert_eq!(
            rr.hilbert_polynomial(&o_c).unwrap(),
            HilbertPolynomial::from_fractions(&[(1, 1), (3, 1)])
        );
        let i_cs = ch(&[(0, 1), (0, 1), (1, 1), (-2, 1), (7, 4)]);
        assert_eq!(
            rr.hilbert_polynomial(&i_cs).unwrap(),
            HilbertPolynomial::from_fractions(&[(0, 1), (-3, 2), (3, 2)])
        );
    }

    #[test]
    fn reduced_hilbert_polynomials() {
        let rr = rr();
        let f_c = ch(&[(3, 1), (0, 1), (-1, 1), (0, 1), (1, 4)]);
        assert_eq!(
            rr.reduced_hilbert_polynomial(&f_c).unwrap(),
            HilbertPolynomial::from_fractions(&[(0, 1), (3, 4), (11, 8), (3, 4), (1, 8)])
        );
        let m_c = ch(&[(6, 1), (-3, 1), (-1, 2), (1, 2), (1, 8)]);
        assert_eq!(
            rr.reduced_hilbert_polynomial(&m_c).unwrap(),
            HilbertPolynomial::from_fractions(&[(0, 1), (1, 4), (5, 8), (1, 2), (1, 8)])
        );
        let k_c = ch(&[(3, 1), (0, 1), (-2, 1), (1, 1), (0, 1)]);
        assert_eq!(
            rr.reduced_hilbert_polynomial(&k_c).unwrap(),
            HilbertPolynomial::from_fractions(&[(0, 1), (1, 4), (7, 8), (3, 4), (1, 8)])
        );
        assert_eq!(
            rr.reduced_hilbert_polynomial(&ChernCharacter::zero(&Polarization::default())),
            Err(Error::ZeroClass)
        );
    }

    #[test]
    fn inverse_recovers_character() {
        let rr = rr();
        let m_c = ch(&[(6, 1), (-3, 1), (-1, 2), (1, 2), (1, 8)]);
        let p = rr.hilbert_polynomial(&m_c).unwrap();
        assert_eq!(rr.character_from_hilbert(&p).unwrap(), m_c);
    }

    #[test]
    fn display_polynomial() {
        let p = HilbertPolynomial::from_fractions(&[(0, 1), (3, 4), (11, 8), (3, 4), (1, 8)]);
        assert_eq!(p.to_string(), "1/8*n^4 + 3/4*n^3 + 11/8*n^2 + 3/4*n");
        let p = HilbertPolynomial::from_fractions(&[(1, 1), (-1, 1)]);
        assert_eq!(p.to_string(), "-n + 1");
    }

    #[test]
    fn binomial_polynomial() {
        let p = HilbertPolynomial::binomial(5, 5);
        assert_eq!(p.eval(&qi(0)), qi(1));
        assert_eq!(p.eval(&qi(1)), qi(6));
        assert_eq!(p.eval(&qi(-5)), qi(0));
    }
}
