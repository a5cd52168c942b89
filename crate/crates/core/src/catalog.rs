//! Named objects on the cubic fourfold and their Chern characters, each
//! computed from a construction and cross-checked against alternative ones.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::chern::ChernCharacter;
use crate::error::{Error, Result};
use crate::kuznetsov::{
    mutate_left, mutate_right, project_to_kuznetsov, ClassResolver, Generator, KExpression,
    MukaiLattice,
};
use crate::rational::{qi, Q};
use crate::riemannroch::{HilbertPolynomial, RiemannRoch};
use crate::series;

/// How a character is obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recipe {
    LineBundle,
    /// Skyscraper sheaf of a point.
    PointPushforward,
    /// `i_* O_C` for a curve of the given degree and arithmetic genus, by
    /// Grothendieck-Riemann-Roch.
    CurvePushforward {
        degree: i64,
        genus: i64,
    },
    /// Structure sheaf of a complete intersection of hypersurfaces of these degrees.
    Koszul(Vec<i64>),
    /// Sheaf on a linear `P^m` given by `sum coeff * O(twist)`, read through its
    /// Hilbert polynomial.
    AmbientResolution {
        dimension: usize,
        terms: Vec<(i64, i64)>,
    },
    Expr(KExpression),
    LeftMutation {
        by: KExpression,
        target: Box<Recipe>,
    },
    RightMutation {
        by: KExpression,
        target: Box<Recipe>,
    },
    Twist(i64, Box<Recipe>),
    Shift(i64, Box<Recipe>),
    Project(Box<Recipe>),
}

impl Recipe {
    pub fn expr(text: &str) -> Self {
        Self::Expr(KExpression::parse(text).expect("valid built-in expression"))
    }

    fn left(by: &str, target: Recipe) -> Self {
        Self::LeftMutation {
            by: KExpression::parse(by).expect("valid built-in expression"),
            target: Box::new(target),
        }
    }

    fn right(by: &str, target: Recipe) -> Self {
        Self::RightMutation {
            by: KExpression::parse(by).expect("valid built-in expression"),
            target: Box::new(target),
        }
    }

    fn shift(n: i64, inner: Recipe) -> Self {
        Self::Shift(n, Box::new(inner))
    }

    fn twist(k: i64, inner: Recipe) -> Self {
        Self::Twist(k, Box::new(inner))
    }

    fn project(inner: Recipe) -> Self {
        Self::Project(Box::new(inner))
    }

    /// The K-theory class, for recipes built from other entries.
    pub fn expression(
        &self,
        resolver: &dyn ClassResolver,
        rr: &RiemannRoch,
    ) -> Result<KExpression> {
        match self {
            Self::Expr(e) => Ok(e.clone()),
            Self::LeftMutation { by, target } => {
                mutate_left(resolver, rr, by, &target.expression(resolver, rr)?)
            }
            Self::RightMutation { by, target } => {
                mutate_right(resolver, rr, by, &target.expression(resolver, rr)?)
            }
            Self::Twist(k, inner) => Ok(inner.expression(resolver, rr)?.twist(*k)),
            Self::Shift(n, inner) => Ok(inner.expression(resolver, rr)?.scale(shift_sign(*n))),
            Self::Project(inner) => {
                project_to_kuznetsov(resolver, rr, &inner.expression(resolver, rr)?)
            }
            _ => Err(Error::Unsupported(format!(
                "`{self}` is not a combination of named objects"
            ))),
        }
    }

    pub fn character(
        &self,
        resolver: &dyn ClassResolver,
        rr: &RiemannRoch,
    ) -> Result<ChernCharacter> {
        let pol = rr.polarization();
        let n = pol.dimension();
        match self {
            Self::LineBundle => Ok(ChernCharacter::unit(pol)),
            Self::PointPushforward => {
                let mut c = vec![Q::from_integer(0.into()); n + 1];
                c[n] = qi(1) / pol.degree_q();
                ChernCharacter::new(c)
            }
            Self::CurvePushforward { degree, genus } => curve_pushforward(rr, *degree, *genus),
            Self::Koszul(degrees) => {
                let mut c = series::one(n + 1);
                for &a in degrees {
                    // 1 - exp(-aH)
                    let mut factor: Vec<Q> = series::exp(&qi(-a), n + 1)
                        .into_iter()
                        .map(|x| -x)
                        .collect();
                    factor[0] += qi(1);
                    c = series::mul(&c, &factor, n + 1);
                }
                ChernCharacter::new(c)
            }
            Self::AmbientResolution { dimension, terms } => {
                let mut p = HilbertPolynomial::new(vec![]);
                for &(coeff, twist) in terms {
                    let b = HilbertPolynomial::binomial(twist + *dimension as i64, *dimension);
                    p = &p + &b.scale(&qi(coeff));
                }
                rr.character_from_hilbert(&p)
            }
            Self::Twist(k, inner) => Ok(inner.character(resolver, rr)?.tensor_line_bundle(*k)),
            Self::Shift(s, inner) => Ok(inner.character(resolver, rr)?.scale(&qi(shift_sign(*s)))),
            _ => self.expression(resolver, rr)?.resolve(resolver, rr),
        }
    }
}

fn shift_sign(n: i64) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `ch(i_* O_C) = i_*(td(C) / i^* td(Y))` for a curve of degree `e` and genus `g`:
/// `e/d H^{n-1} + (1 - g - e t_1)/d H^n`.
pub fn curve_pushforward(rr: &RiemannRoch, degree: i64, genus: i64) -> Result<ChernCharacter> {
    let pol = rr.polarization();
    let n = pol.dimension();
    if n < 2 {
        return Err(Error::Unsupported(
            "curves need dimension at least 2".into(),
        ));
    }
    let d = pol.degree_q();
    let t1 = rr.todd().coeffs()[1].clone();
    let mut c = vec![qi(0); n + 1];
    c[n - 1] = qi(degree) / &d;
    c[n] = (qi(1 - genus) - qi(degree) * t1) / d;
    ChernCharacter::new(c)
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::LineBundle => f.write_str("line bundle"),
            Self::PointPushforward => f.write_str("skyscraper of a point"),
            Self::CurvePushforward { degree, genus } => {
                write!(
                    f,
                    "pushforward from a curve of degree {degree}, genus {genus}"
                )
            }
            Self::Koszul(degrees) => {
                let ds: Vec<String> = degrees.iter().map(ToString::to_string).collect();
                write!(f, "Koszul complex of degrees ({})", ds.join(","))
            }
            Self::AmbientResolution { dimension, terms } => {
                let ts: Vec<String> = terms.iter().map(|(k, t)| format!("{k}*O({t})")).collect();
                write!(f, "resolution on P^{dimension}: {}", ts.join(" + "))
            }
            Self::Expr(e) => write!(f, "{e}"),
            Self::LeftMutation { by, target } => write!(f, "L_{{{by}}}({target})"),
            Self::RightMutation { by, target } => write!(f, "R_{{{by}}}({target})"),
            Self::Twist(k, inner) => write!(f, "({inner}) (x) O({k})"),
            Self::Shift(n, inner) => write!(f, "({inner})[{n}]"),
            Self::Project(inner) => write!(f, "pr({inner})"),
        }
    }
}

impl Serialize for Recipe {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub description: String,
    pub character: ChernCharacter,
    pub construction: Recipe,
    pub alternatives: Vec<Recipe>,
    pub exceptional: bool,
}

/// How to build one entry.
#[derive(Debug, Clone)]
pub struct EntrySpec {
    pub name: &'static str,
    pub description: &'static str,
    pub exceptional: bool,
    pub construction: Recipe,
    pub alternatives: Vec<Recipe>,
}

fn spec(
    name: &'static str,
    description: &'static str,
    construction: Recipe,
    alternatives: Vec<Recipe>,
) -> EntrySpec {
    EntrySpec {
        name,
        description,
        exceptional: false,
        construction,
        alternatives,
    }
}

/// Built-in entries, each using only entries listed before it.
pub fn standard_specs() -> Vec<EntrySpec> {
    let p3 = |terms: &[(i64, i64)]| Recipe::AmbientResolution {
        dimension: 3,
        terms: terms.to_vec(),
    };
    vec![
        EntrySpec {
            exceptional: true,
            ..spec("O", "structure sheaf O_Y", Recipe::LineBundle, vec![])
        },
        spec(
            "O_p",
            "skyscraper sheaf of a point",
            Recipe::PointPushforward,
            vec![Recipe::AmbientResolution {
                dimension: 0,
                terms: vec![(1, 0)],
            }],
        ),
        spec(
            "O_L",
            "structure sheaf of a line",
            Recipe::CurvePushforward {
                degree: 1,
                genus: 0,
            },
            vec![Recipe::AmbientResolution {
                dimension: 1,
                terms: vec![(1, 0)],
            }],
        ),
        spec(
            "O_C",
            "structure sheaf of a twisted cubic",
            Recipe::CurvePushforward {
                degree: 3,
                genus: 0,
            },
            vec![p3(&[(1, 0), (-3, -2), (2, -3)])],
        ),
        spec(
            "O_S",
            "structure sheaf of a cubic surface cut by a linear P^3",
            Recipe::Koszul(vec![1, 1]),
            vec![p3(&[(1, 0), (-1, -3)])],
        ),
        spec(
            "I_S/Y",
            "ideal sheaf of the cubic surface",
            Recipe::expr("O - O_S"),
            vec![Recipe::expr("2*O(-1) - O(-2)")],
        ),
        spec(
            "I_C/Y",
            "ideal sheaf of the twisted cubic",
            Recipe::expr("O - O_C"),
            vec![],
        ),
        spec(
            "I_L/Y",
            "ideal sheaf of a line",
            Recipe::expr("O - O_L"),
            vec![],
        ),
        spec(
            "I_C/S",
            "ideal sheaf of the twisted cubic inside the surface",
            Recipe::expr("O_S - O_C"),
            vec![p3(&[(3, -2), (-3, -3)])],
        ),
        spec(
            "I_p/S",
            "ideal sheaf of a point inside the surface",
            Recipe::expr("O_S - O_p"),
            vec![],
        ),
        spec(
            "F_C",
            "kernel of the evaluation map O^3 -> I_C/S(2)",
            Recipe::expr("3*O - I_C/S(2)"),
            vec![Recipe::shift(
                -1,
                Recipe::left("O", Recipe::expr("I_C/S(2)")),
            )],
        ),
        spec(
            "E_p",
            "kernel of the evaluation map O^3 -> I_p/S(1)",
            Recipe::expr("3*O - I_p/S(1)"),
            vec![Recipe::shift(
                -1,
                Recipe::left("O", Recipe::expr("I_p/S(1)")),
            )],
        ),
        spec(
            "G_C",
            "cokernel of I_C/S(3) -> O_S(1)^3",
            Recipe::expr("3*O_S(1) - I_C/S(3)"),
            vec![Recipe::expr("3*O_S - I_C/S")],
        ),
        spec(
            "K_C",
            "kernel of O^3 -> G_C",
            Recipe::expr("3*O - G_C"),
            vec![
                Recipe::expr("2*I_S/Y + I_C/Y"),
                Recipe::expr("3*I_S/Y + I_C/S"),
            ],
        ),
        spec(
            "M_C",
            "extension of K_C by O(-1)^3",
            Recipe::expr("3*O(-1) + K_C"),
            vec![
                Recipe::expr("9*O - F_C(1)"),
                Recipe::shift(
                    -2,
                    Recipe::left(
                        "O",
                        Recipe::twist(1, Recipe::left("O", Recipe::expr("I_C/S(2)"))),
                    ),
                ),
            ],
        ),
        spec(
            "F_L",
            "kernel of the evaluation map O^4 -> I_L/Y(1)",
            Recipe::expr("4*O - I_L/Y(1)"),
            vec![Recipe::project(Recipe::expr("O_L(1)"))],
        ),
        spec(
            "P_L",
            "extension of I_L/Y by O(-1)[1]",
            Recipe::expr("I_L/Y - O(-1)"),
            vec![Recipe::shift(
                1,
                Recipe::right("O(-1)", Recipe::expr("F_L(-1)")),
            )],
        ),
        spec(
            "F_C'",
            "projection of F_C to the residual category",
            Recipe::project(Recipe::expr("F_C")),
            vec![Recipe::right("O(-1)", Recipe::expr("F_C"))],
        ),
    ]
}

#[derive(Debug, Clone)]
pub struct Catalog {
    rr: RiemannRoch,
    entries: Vec<CatalogEntry>,
    index: HashMap<String, usize>,
}

impl ClassResolver for Catalog {
    fn character(&self, g: &Generator) -> Result<ChernCharacter> {
        Ok(self.get(&g.name)?.character.tensor_line_bundle(g.twist))
    }

    fn is_exceptional(&self, g: &Generator) -> bool {
        self.get(&g.name).is_ok_and(|e| e.exceptional)
    }
}

impl Catalog {
    pub fn standard() -> Result<Self> {
        Self::build(RiemannRoch::cubic_fourfold(), standard_specs())
    }

    pub fn with_riemann_roch(rr: RiemannRoch) -> Result<Self> {
        Self::build(rr, standard_specs())
    }

    /// Evaluate every construction in order; alternatives must agree.
    pub fn build(rr: RiemannRoch, specs: Vec<EntrySpec>) -> Result<Self> {
        let mut cat = Self {
            rr,
            entries: Vec::new(),
            index: HashMap::new(),
        };
        for s in specs {
            let character = s.construction.character(&cat, &cat.rr)?;
            for alt in &s.alternatives {
                let other = alt.character(&cat, &cat.rr)?;
                if other != character {
                    return Err(Error::InconsistentConstruction {
                        name: s.name.to_string(),
                        first: format!("{} from {}", character, s.construction),
                        second: format!("{other} from {alt}"),
                    });
                }
            }
            cat.index.insert(s.name.to_string(), cat.entries.len());
            cat.entries.push(CatalogEntry {
                name: s.name.to_string(),
                description: s.description.to_string(),
                character,
                construction: s.construction,
                alternatives: s.alternatives,
                exceptional: s.exceptional,
            });
        }
        Ok(cat)
    }

    pub fn riemann_roch(&self) -> &RiemannRoch {
        &self.rr
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Result<&CatalogEntry> {
        let key = Generator::new(name, 0).name;
        self.index
            .get(&key)
            .map(|&i| &self.entries[i])
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// Character of `name(twist)`.
    pub fn character(&self, name: &str, twist: i64) -> Result<ChernCharacter> {
        ClassResolver::character(self, &Generator::new(name, twist))
    }

    pub fn resolve(&self, expr: &KExpression) -> Result<ChernCharacter> {
        expr.resolve(self, &self.rr)
    }

    pub fn resolve_str(&self, text: &str) -> Result<ChernCharacter> {
        self.resolve(&KExpression::parse(text)?)
    }

    pub fn project(&self, expr: &KExpression) -> Result<KExpression> {
        project_to_kuznetsov(self, &self.rr, expr)
    }

    pub fn lattice(&self) -> Result<MukaiLattice> {
        MukaiLattice::new(self, &self.rr)
    }
}
