//! Named verification checks behind a common trait, looked up by id and run
//! as one deterministic report.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::Catalog;
use crate::chern::{ChernCharacter, Polarization, TruncatedClass};
use crate::destab::{enumerate_at, largest_wall, walls_crossing_vertical, Side};
use crate::error::{Error, Result};
use crate::kuznetsov::{mukai_pairing, KExpression, MukaiLattice, MukaiVector};
use crate::rational::{q, qi, Q};
use crate::riemannroch::{HilbertPolynomial, RiemannRoch};
use crate::surd::QuadraticSurd;
use crate::tilt::{nu, TiltPoint};
use crate::walls::{
    accumulation_points, is_nested, straight_wall, wall_between, NestRelation, WallDescriptor,
};

/// Shared inputs. A catalog that fails to build shows up as failing checks.
pub struct Context {
    pub rr: RiemannRoch,
    pub catalog: Result<Catalog>,
    pub lattice: Result<MukaiLattice>,
}

impl Context {
    pub fn new(rr: RiemannRoch) -> Self {
        let catalog = Catalog::with_riemann_roch(rr.clone());
        let lattice = match &catalog {
            Ok(c) => c.lattice(),
            Err(e) => Err(e.clone()),
        };
        Self {
            rr,
            catalog,
            lattice,
        }
    }

    pub fn standard() -> Self {
        Self::new(RiemannRoch::cubic_fourfold())
    }

    fn catalog(&self) -> Result<&Catalog> {
        self.catalog.as_ref().map_err(Clone::clone)
    }

    fn lattice(&self) -> Result<&MukaiLattice> {
        self.lattice.as_ref().map_err(Clone::clone)
    }

    fn ch(&self, name: &str, twist: i64) -> Result<ChernCharacter> {
        self.catalog()?.character(name, twist)
    }

    fn mukai(&self, name: &str) -> Result<MukaiVector> {
        let cat = self.catalog()?;
        self.lattice()?
            .mukai_vector(cat, &KExpression::named(name, 0))
    }
}

/// Both sides of a comparison, rendered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub lhs: String,
    pub rhs: String,
    pub passed: bool,
}

impl Outcome {
    pub fn compare<T: PartialEq + fmt::Display>(lhs: &T, rhs: &T) -> Self {
        Self {
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            passed: lhs == rhs,
        }
    }

    fn compare_all<T: PartialEq + fmt::Display>(pairs: &[(T, T)]) -> Self {
        let join = |side: fn(&(T, T)) -> &T| {
            pairs
                .iter()
                .map(|p| side(p).to_string())
                .collect::<Vec<_>>()
                .join("; ")
        };
        Self {
            lhs: join(|p| &p.0),
            rhs: join(|p| &p.1),
            passed: pairs.iter().all(|(a, b)| a == b),
        }
    }
}

pub trait Check: Send + Sync {
    fn id(&self) -> &str;
    fn description(&self) -> &str;
    /// Where the expected value comes from.
    fn reference(&self) -> &str;
    fn run(&self, ctx: &Context) -> Result<Outcome>;
}

type CheckFn = fn(&Context) -> Result<Outcome>;

struct FnCheck {
    id: &'static str,
    description: &'static str,
    reference: &'static str,
    run: CheckFn,
}

impl Check for FnCheck {
    fn id(&self) -> &str {
        self.id
    }
    fn description(&self) -> &str {
        self.description
    }
    fn reference(&self) -> &str {
        self.reference
    }
    fn run(&self, ctx: &Context) -> Result<Outcome> {
        (self.run)(ctx)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Pass => "PASS",
            Self::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub description: String,
    pub reference: String,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {}: {}", c.status, c.id, c.description)?;
            writeln!(f, "    lhs: {}", c.lhs)?;
            writeln!(f, "    rhs: {}", c.rhs)?;
        }
        write!(
            f,
            "{} checks, {} passed, {} failed",
            self.summary.total, self.summary.passed, self.summary.failed
        )
    }
}

pub struct Registry {
    checks: Vec<Box<dyn Check>>,
}

impl Default for Registry {
    fn default() -> Self {
        Self::standard()
    }
}

impl Registry {
    pub fn empty() -> Self {
        Self { checks: Vec::new() }
    }

    pub fn standard() -> Self {
        let mut r = Self::empty();
        for &(id, description, reference, run) in STANDARD {
            r.register(Box::new(FnCheck {
                id,
                description,
                reference,
                run,
            }));
        }
        r
    }

    /// Later registrations under an existing id replace the earlier one.
    pub fn register(&mut self, check: Box<dyn Check>) {
        match self.checks.iter().position(|c| c.id() == check.id()) {
            Some(i) => self.checks[i] = check,
            None => self.checks.push(check),
        }
    }

    pub fn ids(&self) -> Vec<&str> {
        self.checks.iter().map(|c| c.id()).collect()
    }

    pub fn get(&self, id: &str) -> Result<&dyn Check> {
        self.checks
            .iter()
            .find(|c| c.id() == id)
            .map(AsRef::as_ref)
            .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
    }

    pub fn run_one(&self, id: &str, ctx: &Context) -> Result<CheckResult> {
        Ok(evaluate(self.get(id)?, ctx))
    }

    /// Checks run in parallel; the report keeps registration order.
    pub fn run_all(&self, ctx: &Context) -> VerificationReport {
        let checks: Vec<CheckResult> = self
            .checks
            .par_iter()
            .map(|c| evaluate(c.as_ref(), ctx))
            .collect();
        report(checks)
    }

    pub fn run_selected(&self, ids: &[&str], ctx: &Context) -> Result<VerificationReport> {
        let chosen: Vec<&dyn Check> = ids.iter().map(|id| self.get(id)).collect::<Result<_>>()?;
        Ok(report(
            chosen.par_iter().map(|c| evaluate(*c, ctx)).collect(),
        ))
    }
}

fn report(checks: Vec<CheckResult>) -> VerificationReport {
    let passed = checks.iter().filter(|c| c.status == Status::Pass).count();
    let total = checks.len();
    VerificationReport {
        checks,
        summary: Summary {
            total,
            passed,
            failed: total - passed,
        },
    }
}

fn evaluate(check: &dyn Check, ctx: &Context) -> CheckResult {
    let (status, lhs, rhs) = match check.run(ctx) {
        Ok(o) => (
            if o.passed { Status::Pass } else { Status::Fail },
            o.lhs,
            o.rhs,
        ),
        Err(e) => (Status::Fail, format!("error: {e}"), String::from("-")),
    };
    CheckResult {
        id: check.id().to_string(),
        description: check.description().to_string(),
        reference: check.reference().to_string(),
        status,
        lhs,
        rhs,
    }
}

/// Run every standard check against the standard cubic fourfold.
pub fn run_verify_all() -> VerificationReport {
    Registry::standard().run_all(&Context::standard())
}

// ---- expected data ----

fn ch(parts: &[(i64, i64)]) -> ChernCharacter {
    ChernCharacter::from_fractions(parts)
}

fn class(r: i64, c: i64, sn: i64, sd: i64) -> TruncatedClass {
    TruncatedClass::from_ints(r, c, sn, sd)
}

pub fn v1() -> ChernCharacter {
    ch(&[(0, 1), (0, 1), (1, 1), (0, 1), (-1, 4)])
}

pub fn v2() -> ChernCharacter {
    ch(&[(3, 1), (0, 1), (-1, 1), (0, 1), (1, 4)])
}

pub fn v3() -> ChernCharacter {
    ch(&[(6, 1), (-3, 1), (-1, 2), (1, 2), (1, 8)])
}

/// Truncation of `v2`, the class whose walls are studied.
pub fn v2_prime() -> TruncatedClass {
    class(3, 0, -1, 1)
}

pub fn f_l_class() -> TruncatedClass {
    class(3, -1, -1, 2)
}

pub fn w0() -> WallDescriptor {
    WallDescriptor::semicircle(q(-5, 6), q(1, 36))
}

pub fn w0_top() -> TiltPoint {
    TiltPoint::new(q(-5, 6), q(1, 36)).expect("positive alpha")
}

/// The destabilizing classes at the top of the first wall, sorted.
pub fn twelve_classes() -> Vec<TruncatedClass> {
    let mut v = vec![
        class(-1, 1, -1, 2),
        class(-2, 2, -1, 1),
        class(-3, 3, -3, 2),
        class(-4, 4, -2, 1),
        class(-5, 5, -5, 2),
        class(-6, 6, -3, 1),
        class(4, -1, -1, 2),
        class(5, -2, 0, 1),
        class(6, -3, 1, 2),
        class(7, -4, 1, 1),
        class(8, -5, 3, 2),
        class(9, -6, 2, 1),
    ];
    v.sort();
    v
}

/// `C(n, k)` as a polynomial in `n`.
fn binom(n: i64, k: i64) -> Q {
    let mut acc = qi(1);
    for i in 0..k {
        acc = acc * qi(n - i) / qi(i + 1);
    }
    acc
}

fn poly(parts: &[(i64, i64)]) -> HilbertPolynomial {
    HilbertPolynomial::from_fractions(parts)
}

fn surd_pair(a: &QuadraticSurd, b: &QuadraticSurd) -> String {
    format!("{{{a}, {b}}}")
}

fn classes(v: &[TruncatedClass]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

// ---- checks ----

fn chi_structure_sheaf(ctx: &Context) -> Result<Outcome> {
    let pol = ctx.rr.polarization();
    Ok(Outcome::compare(
        &ctx.rr.euler_characteristic(&ChernCharacter::unit(pol))?,
        &qi(1),
    ))
}

fn chi_line_bundles(ctx: &Context) -> Result<Outcome> {
    let pol = ctx.rr.polarization();
    let mut pairs = Vec::new();
    for n in -5..=10 {
        let got = ctx
            .rr
            .euler_characteristic(&ChernCharacter::line_bundle(pol, n))?;
        pairs.push((got, binom(n + 5, 5) - binom(n + 2, 5)));
    }
    Ok(Outcome::compare_all(&pairs))
}

fn v1_plus_v2(ctx: &Context) -> Result<Outcome> {
    let _ = ctx.catalog()?;
    let lhs = &v1() + &v2();
    Ok(Outcome::compare(
        &lhs,
        &(3 * &ChernCharacter::unit(ctx.rr.polarization())),
    ))
}

fn f_c_is_v2(ctx: &Context) -> Result<Outcome> {
    Ok(Outcome::compare(&ctx.ch("F_C", 0)?, &v2()))
}

fn i_c_s_twist_is_v1(ctx: &Context) -> Result<Outcome> {
    Ok(Outcome::compare(&ctx.ch("I_C/S", 2)?, &v1()))
}

fn chern_table(ctx: &Context) -> Result<Outcome> {
    let pol = ctx.rr.polarization();
    Ok(Outcome::compare_all(&[
        (
            ctx.ch("I_S/Y", 0)?,
            ch(&[(1, 1), (0, 1), (-1, 1), (1, 1), (-7, 12)]),
        ),
        (
            ctx.ch("K_C", 0)?,
            ch(&[(3, 1), (0, 1), (-2, 1), (1, 1), (0, 1)]),
        ),
        (
            3 * &ChernCharacter::line_bundle(pol, -1),
            ch(&[(3, 1), (-3, 1), (3, 2), (-1, 2), (1, 8)]),
        ),
    ]))
}

fn k_c_two_ways(ctx: &Context) -> Result<Outcome> {
    let cat = ctx.catalog()?;
    Ok(Outcome::compare_all(&[
        (ctx.ch("K_C", 0)?, cat.resolve_str("2*I_S/Y + I_C/Y")?),
        (ctx.ch("K_C", 0)?, cat.resolve_str("3*I_S/Y + I_C/S")?),
    ]))
}

fn m_c_extension(ctx: &Context) -> Result<Outcome> {
    let cat = ctx.catalog()?;
    Ok(Outcome::compare_all(&[
        (ctx.ch("M_C", 0)?, cat.resolve_str("3*O(-1) + K_C")?),
        (ctx.ch("M_C", 0)?, v3()),
    ]))
}

fn i_c_s_two_ways(ctx: &Context) -> Result<Outcome> {
    let cat = ctx.catalog()?;
    let resolution = crate::catalog::Recipe::AmbientResolution {
        dimension: 3,
        terms: vec![(3, -2), (-3, -3)],
    }
    .character(cat, &ctx.rr)?;
    Ok(Outcome::compare(
        &cat.resolve_str("O_S - O_C")?,
        &resolution,
    ))
}

fn f_l_two_ways(ctx: &Context) -> Result<Outcome> {
    let cat = ctx.catalog()?;
    let projected = cat.resolve(&cat.project(&KExpression::named("O_L", 1))?)?;
    Ok(Outcome::compare_all(&[
        (cat.resolve_str("4*O - I_L/Y(1)")?, projected),
        (
            ctx.ch("F_L", 0)?,
            ch(&[(3, 1), (-1, 1), (-1, 2), (1, 6), (1, 8)]),
        ),
    ]))
}

fn reduced(ctx: &Context, name: &str) -> Result<HilbertPolynomial> {
    ctx.rr.reduced_hilbert_polynomial(&ctx.ch(name, 0)?)
}

fn reduced_f_c(ctx: &Context) -> Result<Outcome> {
    Ok(Outcome::compare(
        &reduced(ctx, "F_C")?,
        &poly(&[(0, 1), (3, 4), (11, 8), (3, 4), (1, 8)]),
    ))
}

fn reduced_m_c(ctx: &Context) -> Result<Outcome> {
    Ok(Outcome::compare(
        &reduced(ctx, "M_C")?,
        &poly(&[(0, 1), (1, 4), (5, 8), (1, 2), (1, 8)]),
    ))
}

fn reduced_k_c(ctx: &Context) -> Result<Outcome> {
    Ok(Outcome::compare(
        &reduced(ctx, "K_C")?,
        &poly(&[(0, 1), (1, 4), (7, 8), (3, 4), (1, 8)]),
    ))
}

fn e_p_same_reduced(ctx: &Context) -> Result<Outcome> {
    Ok(Outcome::compare(
        &reduced(ctx, "E_p")?,
        &reduced(ctx, "F_C")?,
    ))
}

fn hilbert_of(ctx: &Context, name: &str) -> Result<HilbertPolynomial> {
    ctx.rr.hilbert_polynomial(&ctx.ch(name, 0)?)
}

fn hilbert_o_c(ctx: &Context) -> Result<Outcome> {
    Ok(Outcome::compare(
        &hilbert_of(ctx, "O_C")?,
        &poly(&[(1, 1), (3, 1)]),
    ))
}

fn hilbert_o_s(ctx: &Context) -> Result<Outcome> {
    Ok(Outcome::compare(
        &hilbert_of(ctx, "O_S")?,
        &poly(&[(1, 1), (3, 2), (3, 2)]),
    ))
}

fn hilbert_i_c_s(ctx: &Context) -> Result<Outcome> {
    Ok(Outcome::compare(
        &hilbert_of(ctx, "I_C/S")?,
        &poly(&[(0, 1), (-3, 2), (3, 2)]),
    ))
}

fn hilbert_o_l(ctx: &Context) -> Result<Outcome> {
    let mut pairs = Vec::new();
    for k in -2..=2 {
        pairs.push((
            ctx.rr.hilbert_polynomial(&ctx.ch("O_L", k)?)?,
            poly(&[(k + 1, 1), (1, 1)]),
        ));
    }
    Ok(Outcome::compare_all(&pairs))
}

fn f_c_orthogonal(ctx: &Context) -> Result<Outcome> {
    let pol = ctx.rr.polarization();
    let f = ctx.ch("F_C", 0)?;
    let mut pairs = Vec::new();
    for i in 0..3 {
        pairs.push((
            ctx.rr
                .euler_pairing(&ChernCharacter::line_bundle(pol, i), &f)?,
            qi(0),
        ));
    }
    pairs.push((ctx.rr.euler_characteristic(&f)?, qi(0)));
    Ok(Outcome::compare_all(&pairs))
}

fn catalog_in_lattice(ctx: &Context) -> Result<Outcome> {
    let cat = ctx.catalog()?;
    let bad: Vec<String> = cat
        .entries()
        .iter()
        .filter(|e| !e.character.truncate().is_ok_and(|t| t.is_realizable()))
        .map(|e| e.name.clone())
        .collect();
    Ok(Outcome {
        lhs: format!(
            "{} entries, outside the lattice: [{}]",
            cat.entries().len(),
            bad.join(", ")
        ),
        rhs: String::from("none outside"),
        passed: bad.is_empty(),
    })
}

fn gram(ctx: &Context) -> Result<Outcome> {
    let g = ctx.lattice()?.gram()?;
    let expected = crate::kuznetsov::MUKAI_GRAM.map(|row| row.map(qi));
    let show =
        |m: &[[Q; 2]; 2]| format!("[[{}, {}], [{}, {}]]", m[0][0], m[0][1], m[1][0], m[1][1]);
    Ok(Outcome {
        lhs: show(&g),
        rhs: show(&expected),
        passed: g == expected,
    })
}

fn mukai_f_l(ctx: &Context) -> Result<Outcome> {
    Ok(Outcome::compare(
        &ctx.mukai("F_L")?,
        &MukaiVector::new(1, 0),
    ))
}

fn mukai_p_l(ctx: &Context) -> Result<Outcome> {
    Ok(Outcome::compare(
        &ctx.mukai("P_L")?,
        &MukaiVector::new(1, 1),
    ))
}

fn mukai_f_c_prime(ctx: &Context) -> Result<Outcome> {
    Ok(Outcome::compare(
        &ctx.mukai("F_C'")?,
        &MukaiVector::new(2, 1),
    ))
}

fn v0_square(ctx: &Context) -> Result<Outcome> {
    let lat = ctx.lattice()?;
    let c = ctx.ch("F_C'", 0)?;
    Ok(Outcome::compare_all(&[
        (lat.pairing(&c, &c)?, qi(6)),
        (
            qi(mukai_pairing(&ctx.mukai("F_C'")?, &ctx.mukai("F_C'")?)),
            qi(6),
        ),
    ]))
}

fn mukai_pair_arithmetic(ctx: &Context) -> Result<Outcome> {
    let a = ctx.mukai("F_L")?;
    let b = ctx.mukai("P_L")?;
    Ok(Outcome::compare_all(&[
        (mukai_pairing(&a, &a), 2),
        (mukai_pairing(&b, &b), 2),
        (mukai_pairing(&a, &b), 1),
    ]))
}

fn straight_walls(_: &Context) -> Result<Outcome> {
    let show = |w: Option<Q>| w.map_or_else(|| "none".to_string(), |b| b.to_string());
    Ok(Outcome::compare_all(&[
        (show(straight_wall(&v2_prime())), "0".to_string()),
        (show(straight_wall(&f_l_class())), "-1/3".to_string()),
    ]))
}

fn vertical_wall(_: &Context) -> Result<Outcome> {
    let w = wall_between(&v2_prime(), &class(1, 0, 0, 1))?;
    Ok(Outcome::compare(
        &w.describe(),
        &WallDescriptor::Vertical { beta: qi(0) }.describe(),
    ))
}

fn accumulation_v2(_: &Context) -> Result<Outcome> {
    let (lo, hi) = accumulation_points(&v2_prime())?;
    let third = q(1, 3);
    let expected_hi = QuadraticSurd::new(qi(0), third.clone(), 6.into());
    let expected_lo = expected_hi.neg();
    Ok(Outcome {
        lhs: surd_pair(&lo, &hi),
        rhs: surd_pair(&expected_lo, &expected_hi),
        passed: lo == expected_lo && hi == expected_hi,
    })
}

fn accumulation_f_l(_: &Context) -> Result<Outcome> {
    let (lo, hi) = accumulation_points(&f_l_class())?;
    let (elo, ehi) = (
        QuadraticSurd::rational(qi(-1)),
        QuadraticSurd::rational(q(1, 3)),
    );
    Ok(Outcome {
        lhs: surd_pair(&lo, &hi),
        rhs: surd_pair(&elo, &ehi),
        passed: lo == elo && hi == ehi,
    })
}

fn enumerate_twelve(_: &Context) -> Result<Outcome> {
    let en = enumerate_at(&w0_top(), &v2_prime())?;
    let subs: Vec<TruncatedClass> = en.candidates.iter().map(|c| c.sub.clone()).collect();
    Ok(Outcome {
        lhs: classes(&subs),
        rhs: classes(&twelve_classes()),
        passed: subs == twelve_classes(),
    })
}

fn enumeration_complement_closed(_: &Context) -> Result<Outcome> {
    let en = enumerate_at(&w0_top(), &v2_prime())?;
    let subs: Vec<&TruncatedClass> = en.candidates.iter().map(|c| &c.sub).collect();
    let missing: Vec<String> = en
        .candidates
        .iter()
        .filter(|c| !subs.contains(&&c.quot))
        .map(|c| c.quot.to_string())
        .collect();
    Ok(Outcome {
        lhs: format!("complements missing: [{}]", missing.join(", ")),
        rhs: "complements missing: []".to_string(),
        passed: missing.is_empty(),
    })
}

fn line_scan_empty(e: TruncatedClass) -> Result<Outcome> {
    let scan = walls_crossing_vertical(&e, &qi(-1))?;
    let found: Vec<TruncatedClass> = scan
        .candidates
        .iter()
        .map(|c| c.candidate.sub.clone())
        .collect();
    Ok(Outcome {
        lhs: format!("[{}]", classes(&found)),
        rhs: "[]".to_string(),
        passed: found.is_empty(),
    })
}

fn v2_line_empty(_: &Context) -> Result<Outcome> {
    line_scan_empty(v2_prime())
}

fn f_l_line_empty(_: &Context) -> Result<Outcome> {
    line_scan_empty(f_l_class())
}

fn largest_negative(_: &Context) -> Result<Outcome> {
    let lw = largest_wall(&v2_prime(), Side::Negative)?;
    Ok(Outcome::compare(&lw.wall.describe(), &w0().describe()))
}

fn w0_witnesses(_: &Context) -> Result<Outcome> {
    let mut pairs = Vec::new();
    for u in twelve_classes() {
        pairs.push((wall_between(&v2_prime(), &u)?.describe(), w0().describe()));
    }
    Ok(Outcome::compare_all(&pairs))
}

fn w0_region_nested(_: &Context) -> Result<Outcome> {
    let scan = walls_crossing_vertical(&v2_prime(), &q(-5, 6))?;
    let walls: Vec<&WallDescriptor> = scan.candidates.iter().map(|c| &c.candidate.wall).collect();
    let mut crossings = 0;
    for (i, a) in walls.iter().enumerate() {
        for b in &walls[i + 1..] {
            if is_nested(a, b)?.relation == NestRelation::Crossing {
                crossings += 1;
            }
        }
    }
    Ok(Outcome {
        lhs: format!("{} walls, {crossings} crossing pairs", walls.len()),
        rhs: format!("{} walls, 0 crossing pairs", walls.len()),
        passed: crossings == 0 && !walls.is_empty(),
    })
}

fn nu_comparison(_: &Context) -> Result<Outcome> {
    let p = w0_top();
    let a = nu(&p, &f_l_class());
    let b = nu(&p, &v2_prime());
    Ok(Outcome {
        lhs: format!("nu(F_L) = {a}"),
        rhs: format!("nu(v2') = {b}"),
        passed: a < b,
    })
}

fn polarization_default(ctx: &Context) -> Result<Outcome> {
    let p = ctx.rr.polarization();
    let d = Polarization::default();
    Ok(Outcome::compare(
        &format!("n={} d={}", p.dimension(), p.degree()),
        &format!("n={} d={}", d.dimension(), d.degree()),
    ))
}

type Entry = (&'static str, &'static str, &'static str, CheckFn);

const STANDARD: &[Entry] = &[
    (
        "polarization",
        "working on a cubic fourfold",
        "setup",
        polarization_default,
    ),
    ("chi_O_Y", "chi(O_Y) = 1", "Todd class", chi_structure_sheaf),
    (
        "chi_line_bundles",
        "chi(O(n)) = C(n+5,5) - C(n+2,5) for -5 <= n <= 10",
        "hypersurface sequence",
        chi_line_bundles,
    ),
    (
        "v1_plus_v2",
        "v1 + v2 = 3 ch(O_Y)",
        "main classes",
        v1_plus_v2,
    ),
    (
        "F_C_is_v2",
        "ch(F_C) = v2",
        "kernel of evaluation",
        f_c_is_v2,
    ),
    (
        "I_C_S_twist_is_v1",
        "ch(I_C/S(2)) = v1",
        "main classes",
        i_c_s_twist_is_v1,
    ),
    (
        "chern_table",
        "ch(I_S/Y), ch(K_C), ch(O(-1)^3)",
        "Chern character table",
        chern_table,
    ),
    (
        "K_C_two_ways",
        "both sequences for K_C give the same class",
        "K_C sequences",
        k_c_two_ways,
    ),
    (
        "M_C_extension",
        "ch(M_C) = 3 ch(O(-1)) + ch(K_C) = v3",
        "M_C extension",
        m_c_extension,
    ),
    (
        "I_C_S_two_ways",
        "resolution in P^3 agrees with O_S - O_C",
        "I_C/S resolution",
        i_c_s_two_ways,
    ),
    (
        "F_L_two_ways",
        "kernel and projection of O_L(1) agree",
        "F_L definition",
        f_l_two_ways,
    ),
    (
        "reduced_F_C",
        "reduced Hilbert polynomial of F_C",
        "F_C polynomial",
        reduced_f_c,
    ),
    (
        "reduced_M_C",
        "reduced Hilbert polynomial of M_C",
        "M_C polynomial",
        reduced_m_c,
    ),
    (
        "reduced_K_C",
        "reduced Hilbert polynomial of K_C",
        "K_C polynomial",
        reduced_k_c,
    ),
    (
        "E_p_same_reduced",
        "E_p and F_C share a reduced Hilbert polynomial",
        "E_p polynomial",
        e_p_same_reduced,
    ),
    (
        "hilbert_O_C",
        "P(O_C, n) = 3n + 1",
        "twisted cubic",
        hilbert_o_c,
    ),
    (
        "hilbert_O_S",
        "P(O_S, n) = (3n^2 + 3n + 2)/2",
        "cubic surface",
        hilbert_o_s,
    ),
    (
        "hilbert_I_C_S",
        "chi(I_C/S(n)) = 3/2 n(n - 1)",
        "I_C/S polynomial",
        hilbert_i_c_s,
    ),
    (
        "hilbert_O_L",
        "P(O_L(k), n) = n + k + 1",
        "lines",
        hilbert_o_l,
    ),
    (
        "F_C_orthogonal",
        "chi(O(i), F_C) = 0 for i = 0,1,2 and chi(F_C) = 0",
        "F_C in the residual category",
        f_c_orthogonal,
    ),
    (
        "catalog_in_lattice",
        "every catalog class truncates into the lattice",
        "lattice",
        catalog_in_lattice,
    ),
    (
        "gram",
        "Gram matrix of (lambda1, lambda2)",
        "Mukai pairing",
        gram,
    ),
    ("mukai_F_L", "v(F_L) = lambda1", "F_L", mukai_f_l),
    ("mukai_P_L", "v(P_L) = lambda1 + lambda2", "P_L", mukai_p_l),
    (
        "mukai_F_C_prime",
        "v(F_C') = 2 lambda1 + lambda2",
        "F_C'",
        mukai_f_c_prime,
    ),
    ("v0_square", "v0^2 = 6", "Mukai square", v0_square),
    (
        "mukai_pair_arithmetic",
        "v(A)^2 = v(B)^2 = 2 and (v(A), v(B)) = 1",
        "pair of spherical classes",
        mukai_pair_arithmetic,
    ),
    (
        "straight_walls",
        "straight walls of v2' and F_L",
        "straight walls",
        straight_walls,
    ),
    (
        "vertical_wall",
        "wall of v2' against O_Y is the vertical line beta = 0",
        "straight walls",
        vertical_wall,
    ),
    (
        "accumulation_v2",
        "accumulation points of v2' are -sqrt(6)/3 and sqrt(6)/3",
        "accumulation",
        accumulation_v2,
    ),
    (
        "accumulation_F_L",
        "accumulation points of F_L are -1 and 1/3",
        "accumulation",
        accumulation_f_l,
    ),
    (
        "enumerate_twelve",
        "twelve destabilizing classes at the top of W0",
        "W0 classes",
        enumerate_twelve,
    ),
    (
        "enumeration_closed",
        "complements of enumerated classes are enumerated",
        "W0 classes",
        enumeration_complement_closed,
    ),
    (
        "w0_witnesses",
        "each of the twelve classes defines W0",
        "W0",
        w0_witnesses,
    ),
    (
        "v2_line_empty",
        "no wall of v2' meets beta = -1",
        "line beta = -1",
        v2_line_empty,
    ),
    (
        "F_L_line_empty",
        "no wall of F_L meets beta = -1",
        "F_L walls",
        f_l_line_empty,
    ),
    (
        "largest_negative",
        "largest wall of v2' with beta < 0 is W0",
        "W0",
        largest_negative,
    ),
    (
        "w0_region_nested",
        "walls of v2' crossing beta = -5/6 do not cross each other",
        "nesting",
        w0_region_nested,
    ),
    (
        "nu_F_L_below",
        "nu(F_L) < nu(v2') at the top of W0",
        "F_L walls",
        nu_comparison,
    ),
];
