//! Acceptance criteria, one PASS/FAIL line each. Runs as a plain binary so the
//! lines are printed even when everything passes.

#[path = "../../core/tests/support/brute_force.rs"]
mod brute_force;

use std::process::Command;
use std::time::Instant;

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use serde_json::{json, Value};

use tiltwall::catalog::Catalog;
use tiltwall::checks::{f_l_class, twelve_classes, v1, v2, v2_prime, v3, w0_top};
use tiltwall::chern::{ChernCharacter, Polarization, TruncatedClass};
use tiltwall::destab::{enumerate_at, walls_crossing_vertical};
use tiltwall::kuznetsov::{mukai_pairing, KExpression, MukaiVector, MUKAI_GRAM};
use tiltwall::rational::{q, qi, Q};
use tiltwall::riemannroch::{HilbertPolynomial, RiemannRoch};
use tiltwall::surd::QuadraticSurd;
use tiltwall::tilt::{ch1_beta, nu, TiltPoint};
use tiltwall::walls::{
    accumulation_points, is_nested, straight_wall, wall_between, NestRelation, WallDescriptor,
};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn same<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Outcome {
    ensure(got == want, || {
        format!("{what}: got {got:?}, expected {want:?}")
    })
}

fn cli(args: &[&str]) -> Result<Value, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_tiltwall"))
        .args(args)
        .arg("--json")
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!(
            "{args:?} exited with {}: {}",
            out.status,
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())
}

fn ch(parts: &[(i64, i64)]) -> ChernCharacter {
    ChernCharacter::from_fractions(parts)
}

fn poly(parts: &[(i64, i64)]) -> HilbertPolynomial {
    HilbertPolynomial::from_fractions(parts)
}

fn catalog() -> Result<Catalog, String> {
    Catalog::standard().map_err(|e| e.to_string())
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn twelve_classes_at_first_wall() -> Outcome {
    let v = cli(&[
        "destab",
        "enumerate",
        "--class",
        "3,0,-1",
        "--beta",
        "-5/6",
        "--alpha2",
        "1/36",
    ])?;
    let mut got: Vec<Value> = v["candidates"]
        .as_array()
        .ok_or("no candidates array")?
        .iter()
        .map(|c| c["sub"].clone())
        .collect();
    let mut want: Vec<Value> = twelve_classes()
        .iter()
        .map(|c| serde_json::to_value(c).unwrap())
        .collect();
    let key = |v: &Value| v.to_string();
    got.sort_by_key(key);
    want.sort_by_key(key);
    same("destabilizing classes", got, want)
}

fn first_wall() -> Outcome {
    let line = cli(&["destab", "line", "--class", "3,0,-1", "--beta0", "-1"])?;
    same(
        "walls meeting beta = -1",
        line["candidates"].clone(),
        json!([]),
    )?;
    let largest = cli(&[
        "destab", "largest", "--class", "3,0,-1", "--side", "negative",
    ])?;
    same(
        "largest wall",
        largest["wall"].clone(),
        json!({"kind": "semicircle", "center": "-5/6", "radius_sq": "1/36"}),
    )
}

fn f_l_walls() -> Outcome {
    let f_l = f_l_class();
    let scan = walls_crossing_vertical(&f_l, &qi(-1)).map_err(err)?;
    ensure(scan.candidates.is_empty(), || {
        format!("{} walls meet beta = -1", scan.candidates.len())
    })?;
    same("straight wall", straight_wall(&f_l), Some(q(-1, 3)))?;
    let (lo, hi) = accumulation_points(&f_l).map_err(err)?;
    same(
        "accumulation points",
        (lo, hi),
        (
            QuadraticSurd::rational(qi(-1)),
            QuadraticSurd::rational(q(1, 3)),
        ),
    )?;
    let p = w0_top();
    let (a, b) = (nu(&p, &f_l), nu(&p, &v2_prime()));
    ensure(a < b, || {
        format!("nu(F_L) = {a} is not below nu(v2') = {b}")
    })
}

fn chern_table() -> Outcome {
    let cat = catalog()?;
    let get = |n: &str| cat.character(n, 0).map_err(err);
    same(
        "ch(I_S/Y)",
        get("I_S/Y")?,
        ch(&[(1, 1), (0, 1), (-1, 1), (1, 1), (-7, 12)]),
    )?;
    same(
        "ch(K_C)",
        get("K_C")?,
        ch(&[(3, 1), (0, 1), (-2, 1), (1, 1), (0, 1)]),
    )?;
    same(
        "ch(O(-1)^3)",
        cat.resolve_str("3*O(-1)").map_err(err)?,
        ch(&[(3, 1), (-3, 1), (3, 2), (-1, 2), (1, 8)]),
    )?;
    same("ch(M_C)", get("M_C")?, v3())?;
    let pol = Polarization::default();
    same("v1 + v2", &v1() + &v2(), 3 * &ChernCharacter::unit(&pol))?;
    same("ch(F_C)", get("F_C")?, v2())?;
    same(
        "ch(I_C/S(2))",
        cat.character("I_C/S", 2).map_err(err)?,
        v1(),
    )
}

fn hilbert_polynomials() -> Outcome {
    let cat = catalog()?;
    let rr = cat.riemann_roch();
    let red = |n: &str| {
        rr.reduced_hilbert_polynomial(&cat.character(n, 0).map_err(err)?)
            .map_err(err)
    };
    let full = |n: &str| {
        rr.hilbert_polynomial(&cat.character(n, 0).map_err(err)?)
            .map_err(err)
    };
    same(
        "p(F_C)",
        red("F_C")?,
        poly(&[(0, 1), (3, 4), (11, 8), (3, 4), (1, 8)]),
    )?;
    same(
        "p(M_C)",
        red("M_C")?,
        poly(&[(0, 1), (1, 4), (5, 8), (1, 2), (1, 8)]),
    )?;
    same(
        "p(K_C)",
        red("K_C")?,
        poly(&[(0, 1), (1, 4), (7, 8), (3, 4), (1, 8)]),
    )?;
    same("P(O_S)", full("O_S")?, poly(&[(1, 1), (3, 2), (3, 2)]))?;
    same("P(O_C)", full("O_C")?, poly(&[(1, 1), (3, 1)]))?;
    same(
        "chi(I_C/S(n))",
        full("I_C/S")?,
        poly(&[(0, 1), (-3, 2), (3, 2)]),
    )
}

fn mukai_lattice() -> Outcome {
    let cat = catalog()?;
    let lat = cat.lattice().map_err(err)?;
    same(
        "Gram matrix",
        lat.gram().map_err(err)?,
        MUKAI_GRAM.map(|r| r.map(qi)),
    )?;
    let v = |n: &str| {
        lat.mukai_vector(&cat, &KExpression::named(n, 0))
            .map_err(err)
    };
    same(
        "ch(F_L)",
        cat.character("F_L", 0).map_err(err)?,
        ch(&[(3, 1), (-1, 1), (-1, 2), (1, 6), (1, 8)]),
    )?;
    let (a, b, v0) = (v("F_L")?, v("P_L")?, v("F_C'")?);
    same("v(F_L)", a, MukaiVector::new(1, 0))?;
    same("v(P_L)", b, MukaiVector::new(1, 1))?;
    same("v(F_C')", v0, MukaiVector::new(2, 1))?;
    same("v0^2", mukai_pairing(&v0, &v0), 6)?;
    let c0 = cat.character("F_C'", 0).map_err(err)?;
    same(
        "v0^2 from characters",
        lat.pairing(&c0, &c0).map_err(err)?,
        qi(6),
    )?;
    same(
        "pair",
        (
            mukai_pairing(&a, &a),
            mukai_pairing(&b, &b),
            mukai_pairing(&a, &b),
        ),
        (2, 2, 1),
    )
}

fn todd_sanity() -> Outcome {
    let rr = RiemannRoch::cubic_fourfold();
    let pol = Polarization::default();
    same(
        "chi(O_Y)",
        rr.euler_characteristic(&ChernCharacter::unit(&pol))
            .map_err(err)?,
        qi(1),
    )?;
    for n in -5..=10 {
        let got = rr
            .euler_characteristic(&ChernCharacter::line_bundle(&pol, n))
            .map_err(err)?;
        let want =
            (&HilbertPolynomial::binomial(5, 5) - &HilbertPolynomial::binomial(2, 5)).eval(&qi(n));
        same(&format!("chi(O({n}))"), got, want)?;
    }
    Ok(())
}

fn small_class() -> impl Strategy<Value = TruncatedClass> {
    (-6i64..=6, -8i64..=8, -12i64..=12).prop_map(|(r, c, s)| TruncatedClass::from_ints(r, c, s, 2))
}

fn small_rat() -> impl Strategy<Value = Q> {
    (-24i64..=24, 1i64..=12).prop_map(|(n, d)| q(n, d))
}

fn pos_rat() -> impl Strategy<Value = Q> {
    (1i64..=40, 1i64..=12).prop_map(|(n, d)| q(n, d))
}

fn run_prop<S: Strategy>(
    name: &str,
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Outcome {
    let mut runner = TestRunner::new(Config {
        cases,
        max_global_rejects: cases * 20,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&strategy, test)
        .map_err(|e| format!("{name}: {e}"))
}

fn property_suites() -> Outcome {
    run_prop(
        "twist group law",
        300,
        (small_class(), -5i64..=5, -5i64..=5),
        |(w, a, b)| {
            prop_assert_eq!(
                w.tensor_line_bundle(a).tensor_line_bundle(b),
                w.tensor_line_bundle(a + b)
            );
            prop_assert_eq!(w.tensor_line_bundle(0), w.clone());
            let c = w.to_character(&Polarization::default());
            prop_assert_eq!(c.twist(&qi(a)).twist(&qi(b)), c.twist(&qi(a + b)));
            prop_assert_eq!(c.tensor_line_bundle(a), c.twist(&qi(-a)));
            Ok(())
        },
    )?;
    run_prop(
        "discriminant twist invariance",
        300,
        (small_class(), -8i64..=8),
        |(w, k)| {
            prop_assert_eq!(
                w.reduced_discriminant(),
                w.tensor_line_bundle(k).reduced_discriminant()
            );
            Ok(())
        },
    )?;
    run_prop(
        "weak see-saw",
        1000,
        (small_class(), small_class(), small_rat(), pos_rat()),
        |(u, v, beta, a2)| {
            let p = TiltPoint::new(beta, a2).unwrap();
            let heart = |x: TruncatedClass| {
                if ch1_beta(p.beta(), &x) < qi(0) {
                    -&x
                } else {
                    x
                }
            };
            let (u, v) = (heart(u), heart(v));
            if ch1_beta(p.beta(), &u) == qi(0) || ch1_beta(p.beta(), &v) == qi(0) {
                return Ok(());
            }
            let w = &u + &v;
            let (nw, nu_, nv) = (nu(&p, &w), nu(&p, &u), nu(&p, &v));
            prop_assert!((nu_ <= nw && nw <= nv) || (nu_ >= nw && nw >= nv));
            Ok(())
        },
    )?;
    run_prop(
        "wall symmetry",
        300,
        (small_class(), small_class()),
        |(w, u)| {
            if w.is_zero() || u.is_zero() {
                return Ok(());
            }
            prop_assert_eq!(wall_between(&w, &u).unwrap(), wall_between(&u, &w).unwrap());
            let rest = &w - &u;
            if !rest.is_zero() {
                prop_assert_eq!(
                    wall_between(&w, &u).unwrap(),
                    wall_between(&w, &rest).unwrap()
                );
            }
            Ok(())
        },
    )?;

    let mut walls: Vec<WallDescriptor> = Vec::new();
    for beta in [q(-5, 6), q(-4, 5), q(-6, 7), q(-9, 11), q(-7, 9)] {
        for c in walls_crossing_vertical(&v2_prime(), &beta)
            .map_err(err)?
            .candidates
        {
            if !walls.contains(&c.candidate.wall) {
                walls.push(c.candidate.wall);
            }
        }
    }
    for (i, a) in walls.iter().enumerate() {
        for b in &walls[i + 1..] {
            let rel = is_nested(a, b).map_err(err)?.relation;
            ensure(rel != NestRelation::Crossing, || {
                format!("{} crosses {}", a.describe(), b.describe())
            })?;
        }
    }

    run_prop(
        "complement closure",
        60,
        ((1i64..5, -4i64..5, -6i64..7), -8i64..8, 1i64..6),
        |((r, c, s), bn, a)| {
            let e = TruncatedClass::from_ints(r, c, 2 * s + (c * c).rem_euclid(2), 2);
            if e.reduced_discriminant() <= qi(0) {
                return Ok(());
            }
            let p = TiltPoint::new(q(bn, 4), q(a, 16)).unwrap();
            if let Ok(en) = enumerate_at(&p, &e) {
                let subs: Vec<_> = en.candidates.iter().map(|c| &c.sub).collect();
                for c in &en.candidates {
                    prop_assert!(subs.contains(&&c.quot));
                }
            }
            Ok(())
        },
    )?;
    let top = w0_top();
    let en = enumerate_at(&top, &v2_prime()).map_err(err)?;
    for c in &en.candidates {
        ensure(en.candidates.iter().any(|d| d.sub == c.quot), || {
            format!("{} has no partner", c.sub)
        })?;
    }

    same(
        "oracle at the first wall",
        brute_force::compare_at(top.beta(), top.alpha_sq(), &v2_prime()),
        Ok(12),
    )?;
    for a2 in [q(1, 36), q(1, 4), qi(1)] {
        same(
            "oracle on beta = -1",
            brute_force::compare_at(&qi(-1), &a2, &v2_prime()),
            Ok(0),
        )?;
    }
    Ok(())
}

fn accumulation_surds() -> Outcome {
    let (lo, _) = accumulation_points(&v2_prime()).map_err(err)?;
    same(
        "beta bar of v2'",
        lo,
        QuadraticSurd::new(qi(0), q(-1, 3), 6.into()),
    )?;
    let (lo, _) = accumulation_points(&f_l_class()).map_err(err)?;
    same("beta bar of F_L", lo, QuadraticSurd::rational(qi(-1)))
}

fn main() {
    let criteria: [Criterion; 9] = [
        (
            "twelve destabilizing classes at the top of W0",
            twelve_classes_at_first_wall,
        ),
        (
            "nothing meets beta = -1 and the largest wall is W0",
            first_wall,
        ),
        ("walls of F_L", f_l_walls),
        ("Chern character table", chern_table),
        ("Hilbert polynomials", hilbert_polynomials),
        ("Mukai lattice", mukai_lattice),
        ("Todd class and Riemann-Roch", todd_sanity),
        ("property suites", property_suites),
        ("accumulation surds", accumulation_surds),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = f();
        let ms = start.elapsed().as_millis();
        match result {
            Ok(()) => println!("PASS criterion {}: {name} ({ms} ms)", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({ms} ms): {e}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
