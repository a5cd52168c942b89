//! Naive destabilizer scan in machine rationals, shared by test targets.

use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive};
use tiltwall::chern::TruncatedClass;
use tiltwall::destab::enumerate_at;
use tiltwall::rational::Q;
use tiltwall::tilt::TiltPoint;

type R = Ratio<i128>;

fn r(x: &Q) -> R {
    R::new(x.numer().to_i128().unwrap(), x.denom().to_i128().unwrap())
}

#[derive(Clone, Copy)]
struct Small {
    r: i128,
    c: i128,
    s: R,
}

impl Small {
    fn of(t: &TruncatedClass) -> Self {
        Self {
            r: t.r().to_i128().unwrap(),
            c: t.c().to_i128().unwrap(),
            s: r(t.s()),
        }
    }

    fn minus(self, o: Self) -> Self {
        Self {
            r: self.r - o.r,
            c: self.c - o.c,
            s: self.s - o.s,
        }
    }

    fn x(self, beta: R) -> R {
        R::from(self.c) - beta * self.r
    }

    fn y(self, beta: R) -> R {
        self.s - beta * self.c + beta * beta * self.r / 2
    }

    fn delta(self) -> R {
        R::from(self.c * self.c) - self.s * 2 * self.r
    }

    fn realizable(self) -> bool {
        (self.s - R::new(self.c * self.c, 2)).is_integer()
    }
}

/// Every `u = (r, c, s)` with `(r, c)` in the box and `s` on the half-integer
/// grid, checked directly.
fn brute_force(beta: R, a2: R, e: Small, box_size: i128) -> Vec<(i128, i128, R)> {
    let nu_num = |w: Small| w.y(beta) - a2 * w.r / 2;
    let xe = e.x(beta);
    let de = e.delta();
    let mut out = Vec::new();
    for rr in -box_size..=box_size {
        for cc in -box_size..=box_size {
            // Delta(u) in [0, de) limits s when r != 0.
            let (lo, hi) = if rr == 0 {
                (R::from(-400), R::from(400))
            } else {
                let a = R::from(cc * cc) / (2 * rr);
                let b = (R::from(cc * cc) - de) / (2 * rr);
                (a.min(b), a.max(b))
            };
            let mut k = (lo * 2).floor().to_integer() - 1;
            let k_hi = (hi * 2).ceil().to_integer() + 1;
            while k <= k_hi {
                let u = Small {
                    r: rr,
                    c: cc,
                    s: R::new(k, 2),
                };
                k += 1;
                let xu = u.x(beta);
                if !xu.is_positive() || xu >= xe {
                    continue;
                }
                if nu_num(u) * xe != nu_num(e) * xu {
                    continue;
                }
                let v = e.minus(u);
                if !u.realizable() || !v.realizable() {
                    continue;
                }
                let (du, dv) = (u.delta(), v.delta());
                if du.is_negative() || dv.is_negative() || du >= de || dv >= de {
                    continue;
                }
                out.push((u.r, u.c, u.s));
            }
        }
    }
    out.sort();
    out
}

/// Compare `enumerate_at` with the naive scan on the `[-20, 20]^2` box.
/// Returns the number of classes found.
pub fn compare_at(beta: &Q, a2: &Q, e: &TruncatedClass) -> Result<usize, String> {
    let p = TiltPoint::new(beta.clone(), a2.clone()).map_err(|e| e.to_string())?;
    let en = enumerate_at(&p, e).map_err(|e| e.to_string())?;
    let mut ours: Vec<(i128, i128, R)> = en
        .candidates
        .iter()
        .map(|c| {
            let s = Small::of(&c.sub);
            (s.r, s.c, s.s)
        })
        .collect();
    ours.sort();
    if let Some(out) = ours
        .iter()
        .find(|(rr, cc, _)| rr.abs() > 20 || cc.abs() > 20)
    {
        return Err(format!("class {out:?} outside the box"));
    }
    let naive = brute_force(r(beta), r(a2), Small::of(&en.class), 20);
    if ours != naive {
        return Err(format!(
            "at beta={beta}, alpha^2={a2}: {ours:?} vs {naive:?}"
        ));
    }
    Ok(ours.len())
}
