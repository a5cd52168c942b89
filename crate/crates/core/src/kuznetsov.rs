//! Classes in K-theory, mutations past exceptional line bundles and the
//! rank two Mukai lattice of the residual category.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::chern::ChernCharacter;
use crate::error::{Error, Result};
use crate::rational::{fmt_q, is_integral, qi, Q};
use crate::riemannroch::RiemannRoch;

/// A named object twisted by `O(twist H)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub name: String,
    pub twist: i64,
}

impl Generator {
    pub fn new(name: impl Into<String>, twist: i64) -> Self {
        let name = name.into();
        let name = match name.as_str() {
            "O_Y" => "O".to_string(),
            "O_pt" => "O_p".to_string(),
            _ => name,
        };
        Self { name, twist }
    }

    pub fn line_bundle(twist: i64) -> Self {
        Self::new("O", twist)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twist == 0 {
            f.write_str(&self.name)
        } else {
            write!(f, "{}({})", self.name, self.twist)
        }
    }
}

/// Looks up characters of generators.
pub trait ClassResolver {
    fn character(&self, generator: &Generator) -> Result<ChernCharacter>;
    fn is_exceptional(&self, generator: &Generator) -> bool;
}

/// Integer combination of generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct KExpression {
    terms: BTreeMap<Generator, i64>,
}

impl KExpression {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn generator(g: Generator) -> Self {
        Self::from_terms([(g, 1)])
    }

    pub fn named(name: &str, twist: i64) -> Self {
        Self::generator(Generator::new(name, twist))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Generator, i64)>) -> Self {
        let mut out = Self::zero();
        for (g, k) in terms {
            out.add_term(g, k);
        }
        out
    }

    fn add_term(&mut self, g: Generator, k: i64) {
        let entry = self.terms.entry(g.clone()).or_insert(0);
        *entry += k;
        if *entry == 0 {
            self.terms.remove(&g);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Generator, i64)> {
        self.terms.iter().map(|(g, k)| (g, *k))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The generator and sign when this is `+-[g]`.
    pub fn as_single(&self) -> Option<(&Generator, i64)> {
        match self.terms.iter().next() {
            Some((g, &k)) if self.terms.len() == 1 && k.abs() == 1 => Some((g, k)),
            _ => None,
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(g, c)| (g.clone(), c * k)))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, k) in &other.terms {
            out.add_term(g.clone(), *k);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    /// Tensor every generator by `O(kH)`.
    pub fn twist(&self, k: i64) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(g, c)| (Generator::new(g.name.clone(), g.twist + k), *c)),
        )
    }

    pub fn resolve(
        &self,
        resolver: &dyn ClassResolver,
        rr: &RiemannRoch,
    ) -> Result<ChernCharacter> {
        let mut total = ChernCharacter::zero(rr.polarization());
        for (g, k) in &self.terms {
            let ch = resolver.character(g)?;
            total = &total + &ch.scale(&qi(*k));
        }
        Ok(total)
    }

    /// Parse `"O_L(1) - O(1) + 4*O"`. Twists may also be written `(H)`, `(-2H)`.
    pub fn parse(text: &str) -> Result<Self> {
        Parser { text, pos: 0 }.expression()
    }
}

impl fmt::Display for KExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (g, k)) in self.terms.iter().enumerate() {
            let (sign, abs) = (if *k < 0 { "-" } else { "+" }, k.abs());
            match (i, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                (_, s) => write!(f, " {s} ")?,
            }
            if abs == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{abs}*{g}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for KExpression {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Option<i64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.text[start..self.pos].parse().ok())?
    }

    fn expression(&mut self) -> Result<KExpression> {
        let mut out = KExpression::zero();
        self.skip_ws();
        if self.pos == self.text.len() {
            return Err(Error::parse(0, "empty expression"));
        }
        let mut first = true;
        loop {
            self.skip_ws();
            if self.pos == self.text.len() {
                break;
            }
            let sign = if self.eat('+') {
                1
            } else if self.eat('-') {
                -1
            } else if first {
                1
            } else {
                return Err(Error::parse(self.pos, "expected `+` or `-`"));
            };
            first = false;
            let (g, k) = self.term()?;
            out.add_term(g, sign * k);
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(Generator, i64)> {
        self.skip_ws();
        let coeff = match self.integer() {
            Some(k) => {
                self.eat('*');
                k
            }
            None => 1,
        };
        self.skip_ws();
        let start = self.pos;
        if !self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            return Err(Error::parse(self.pos, "expected an object name"));
        }
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '/' | '\''))
        {
            self.pos += 1;
        }
        let name = &self.text[start..self.pos];
        let twist = if self.peek() == Some('(') {
            self.pos += 1;
            self.twist()?
        } else {
            0
        };
        Ok((Generator::new(name, twist), coeff))
    }

    fn twist(&mut self) -> Result<i64> {
        self.skip_ws();
        let sign = if self.eat('-') {
            -1
        } else {
            self.eat('+');
            1
        };
        self.skip_ws();
        let at = self.pos;
        let n = self.integer();
        let has_h = self.eat('H');
        let value = match (n, has_h) {
            (Some(n), _) => n,
            (None, true) => 1,
            (None, false) => {
                return Err(Error::parse(at, "expected a twist like `1`, `-2` or `H`"))
            }
        };
        if !self.eat(')') {
            return Err(Error::parse(self.pos, "expected `)`"));
        }
        Ok(sign * value)
    }
}

fn exceptional<'a>(
    resolver: &dyn ClassResolver,
    f: &'a KExpression,
) -> Result<(&'a Generator, i64)> {
    match f.as_single() {
        Some((g, sign)) if resolver.is_exceptional(g) => Ok((g, sign)),
        _ => Err(Error::NotExceptional(f.to_string())),
    }
}

fn integral_pairing(value: Q, a: &KExpression, b: &KExpression) -> Result<i64> {
    if !is_integral(&value) {
        return Err(Error::NotIntegral(format!(
            "chi({a}, {b}) = {}",
            fmt_q(&value)
        )));
    }
    value
        .to_integer()
        .to_i64()
        .ok_or_else(|| Error::NotIntegral(format!("chi({a}, {b}) is too large")))
}

/// `L_F(G) = [G] - chi(F, G) [F]`.
pub fn mutate_left(
    resolver: &dyn ClassResolver,
    rr: &RiemannRoch,
    f: &KExpression,
    g: &KExpression,
) -> Result<KExpression> {
    exceptional(resolver, f)?;
    let chi = rr.euler_pairing(&f.resolve(resolver, rr)?, &g.resolve(resolver, rr)?)?;
    let chi = integral_pairing(chi, f, g)?;
    Ok(g.sub(&f.scale(chi)))
}

/// `R_F(G) = [G] - chi(G, F) [F]`.
pub fn mutate_right(
    resolver: &dyn ClassResolver,
    rr: &RiemannRoch,
    f: &KExpression,
    g: &KExpression,
) -> Result<KExpression> {
    exceptional(resolver, f)?;
    let chi = rr.euler_pairing(&g.resolve(resolver, rr)?, &f.resolve(resolver, rr)?)?;
    let chi = integral_pairing(chi, g, f)?;
    Ok(g.sub(&f.scale(chi)))
}

/// `L_O L_O(1) L_O(2)`, the projection onto `<O, O(1), O(2)>^perp`.
pub fn project_to_kuznetsov(
    resolver: &dyn ClassResolver,
    rr: &RiemannRoch,
    g: &KExpression,
) -> Result<KExpression> {
    let mut out = g.clone();
    for i in (0..3).rev() {
        out = mutate_left(
            resolver,
            rr,
            &KExpression::generator(Generator::line_bundle(i)),
            &out,
        )?;
    }
    Ok(out)
}

/// `x1 lambda_1 + x2 lambda_2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct MukaiVector {
    pub x1: i64,
    pub x2: i64,
}

impl MukaiVector {
    pub fn new(x1: i64, x2: i64) -> Self {
        Self { x1, x2 }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(',').collect();
        if parts.len() != 2 {
            return Err(Error::parse(0, format!("expected x1,x2, got `{text}`")));
        }
        let mut offset = 0;
        let mut xs = [0i64; 2];
        for (slot, part) in xs.iter_mut().zip(&parts) {
            let lead = part.len() - part.trim_start().len();
            *slot = part.trim().parse().map_err(|_| {
                Error::parse(
                    offset + lead,
                    format!("`{}` is not an integer", part.trim()),
                )
            })?;
            offset += part.len() + 1;
        }
        Ok(Self::new(xs[0], xs[1]))
    }
}

impl fmt::Display for MukaiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*lambda1 + {}*lambda2", self.x1, self.x2)
    }
}

pub const MUKAI_GRAM: [[i64; 2]; 2] = [[2, -1], [-1, 2]];

/// `a^T [[2,-1],[-1,2]] b`.
pub fn mukai_pairing(a: &MukaiVector, b: &MukaiVector) -> i64 {
    let (a, b) = ([a.x1, a.x2], [b.x1, b.x2]);
    (0..2)
        .flat_map(|i| (0..2).map(move |j| a[i] * MUKAI_GRAM[i][j] * b[j]))
        .sum()
}

/// The lattice spanned by the projections of `O_L(1)` and `O_L(2)`.
#[derive(Debug, Clone)]
pub struct MukaiLattice {
    rr: RiemannRoch,
    lambda: [KExpression; 2],
    characters: [ChernCharacter; 2],
}

impl MukaiLattice {
    pub fn new(resolver: &dyn ClassResolver, rr: &RiemannRoch) -> Result<Self> {
        let l1 = project_to_kuznetsov(resolver, rr, &KExpression::named("O_L", 1))?;
        let l2 = project_to_kuznetsov(resolver, rr, &KExpression::named("O_L", 2))?;
        let characters = [l1.resolve(resolver, rr)?, l2.resolve(resolver, rr)?];
        Ok(Self {
            rr: rr.clone(),
            lambda: [l1, l2],
            characters,
        })
    }

    pub fn lambda(&self) -> &[KExpression; 2] {
        &self.lambda
    }

    pub fn lambda_characters(&self) -> &[ChernCharacter; 2] {
        &self.characters
    }

    /// `-chi(a, b)`.
    pub fn pairing(&self, a: &ChernCharacter, b: &ChernCharacter) -> Result<Q> {
        Ok(-self.rr.euler_pairing(a, b)?)
    }

    /// Gram matrix of `(lambda_1, lambda_2)` computed from the characters.
    pub fn gram(&self) -> Result<[[Q; 2]; 2]> {
        let [a, b] = &self.characters;
        Ok([
            [self.pairing(a, a)?, self.pairing(a, b)?],
            [self.pairing(b, a)?, self.pairing(b, b)?],
        ])
    }

    /// Coordinates of a character in the basis `(lambda_1, lambda_2)`.
    pub fn vector_of(&self, ch: &ChernCharacter) -> Result<MukaiVector> {
        let pol = self.rr.polarization();
        for i in 0..3 {
            let chi = self
                .rr
                .euler_pairing(&ChernCharacter::line_bundle(pol, i), ch)?;
            if !chi.is_zero() {
                return Err(Error::NotInComponent(format!(
                    "chi(O({i}), {ch}) = {}",
                    fmt_q(&chi)
                )));
            }
        }
        let g = self.gram()?;
        let rhs = [
            self.pairing(&self.characters[0], ch)?,
            self.pairing(&self.characters[1], ch)?,
        ];
        let det = &g[0][0] * &g[1][1] - &g[0][1] * &g[1][0];
        if det.is_zero() {
            return Err(Error::NotInComponent("degenerate Mukai lattice".into()));
        }
        // g is symmetric: solve g x = rhs
        let x1 = (&rhs[0] * &g[1][1] - &g[0][1] * &rhs[1]) / &det;
        let x2 = (&g[0][0] * &rhs[1] - &g[1][0] * &rhs[0]) / &det;
        let combo = &self.characters[0].scale(&x1) + &self.characters[1].scale(&x2);
        if &combo != ch {
            return Err(Error::NotInComponent(format!(
                "{ch} is orthogonal to O, O(1), O(2) but not in the span of lambda1, lambda2"
            )));
        }
        let to_int = |x: &Q| -> Result<i64> {
            if !is_integral(x) {
                return Err(Error::NotIntegral(format!(
                    "coordinates ({}, {})",
                    fmt_q(&x1),
                    fmt_q(&x2)
                )));
            }
            x.to_integer()
                .to_i64()
                .ok_or_else(|| Error::NotIntegral(format!("coordinate {} too large", fmt_q(x))))
        };
        Ok(MukaiVector::new(to_int(&x1)?, to_int(&x2)?))
    }

    pub fn mukai_vector(
        &self,
        resolver: &dyn ClassResolver,
        g: &KExpression,
    ) -> Result<MukaiVector> {
        self.vector_of(&g.resolve(resolver, &self.rr)?)
    }

    pub fn character_of(&self, v: &MukaiVector) -> ChernCharacter {
        &self.characters[0].scale(&qi(v.x1)) + &self.characters[1].scale(&qi(v.x2))
    }
}

/// Whether a character pairs to zero with `O, O(1), O(2)`.
pub fn in_kuznetsov_component(rr: &RiemannRoch, ch: &ChernCharacter) -> Result<bool> {
    let pol = rr.polarization();
    for i in 0..3 {
        if !rr
            .euler_pairing(&ChernCharacter::line_bundle(pol, i), ch)?
            .is_zero()
        {
            return Ok(false);
        }
    }
    Ok(true)
}
