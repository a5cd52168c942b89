use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use tiltwall::catalog::Catalog;
use tiltwall::checks::{Context, Registry};
use tiltwall::chern::{parse_class, ChernCharacter, ParsedClass, Polarization, TruncatedClass};
use tiltwall::destab::{
    enumerate_at, largest_wall_with_depth, walls_crossing_vertical, Side, DEFAULT_PROBE_DEPTH,
};
use tiltwall::error::Error;
use tiltwall::kuznetsov::{mukai_pairing, KExpression, MukaiVector};
use tiltwall::plot::{render, PlotSpec};
use tiltwall::rational::{parse_q, parse_q_list, Q};
use tiltwall::riemannroch::RiemannRoch;
use tiltwall::tilt::{nu, TiltPoint};
use tiltwall::walls::{accumulation_points, straight_wall, wall_between, WallDescriptor};

#[derive(Parser)]
#[command(
    name = "tiltwall",
    version,
    about = "Exact wall computations on a cubic fourfold"
)]
struct Cli {
    /// Degree of the hypersurface.
    #[arg(long, global = true, default_value_t = 3)]
    degree: u32,
    #[arg(long, global = true, default_value_t = 4)]
    dimension: usize,
    #[arg(long, global = true)]
    json: bool,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    #[command(subcommand)]
    Chern(ChernCmd),
    /// Hilbert polynomial of a class.
    Hilbert {
        class: String,
        #[arg(long)]
        reduced: bool,
    },
    /// chi(a), or chi(a, b) with two arguments.
    Euler { a: String, b: Option<String> },
    #[command(subcommand)]
    Tilt(TiltCmd),
    #[command(subcommand)]
    Wall(WallCmd),
    #[command(subcommand)]
    Destab(DestabCmd),
    #[command(subcommand)]
    Mukai(MukaiCmd),
    #[command(subcommand)]
    Catalog(CatalogCmd),
    /// Run every verification check.
    Verify {
        /// Restrict to these check ids.
        ids: Vec<String>,
    },
    /// Draw walls as SVG.
    Plot(PlotArgs),
}

#[derive(Subcommand)]
enum ChernCmd {
    /// ch * exp(-beta H).
    Twist {
        class: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
    },
    Dual {
        class: String,
    },
    /// Product of two characters.
    Tensor {
        a: String,
        b: String,
    },
    /// (rank, H^3.ch_1, H^2.ch_2) with the degree divided out.
    Truncate {
        class: String,
    },
}

#[derive(Subcommand)]
enum TiltCmd {
    Nu(PointArgs),
}

#[derive(Args)]
struct PointArgs {
    #[arg(long, allow_hyphen_values = true)]
    class: String,
    #[arg(long, allow_hyphen_values = true)]
    beta: String,
    #[arg(long)]
    alpha2: String,
}

#[derive(Subcommand)]
enum WallCmd {
    Between {
        #[arg(allow_hyphen_values = true)]
        w: String,
        #[arg(allow_hyphen_values = true)]
        u: String,
    },
    Straight {
        #[arg(allow_hyphen_values = true)]
        class: String,
    },
    Accumulation {
        #[arg(allow_hyphen_values = true)]
        class: String,
    },
}

#[derive(Subcommand)]
enum DestabCmd {
    /// Destabilizing classes at one point.
    Enumerate(PointArgs),
    /// Walls meeting a vertical line.
    Line {
        #[arg(long, allow_hyphen_values = true)]
        class: String,
        #[arg(long, allow_hyphen_values = true)]
        beta0: String,
    },
    /// Outermost wall on one side of the straight wall.
    Largest {
        #[arg(long, allow_hyphen_values = true)]
        class: String,
        #[arg(long)]
        side: Side,
        #[arg(long, default_value_t = DEFAULT_PROBE_DEPTH)]
        depth: u32,
    },
}

#[derive(Subcommand)]
enum MukaiCmd {
    /// Projection of a K-class into the residual category.
    Project {
        expr: String,
    },
    Vector {
        expr: String,
    },
    /// Mukai pairing of two vectors given as "x1,x2".
    Pair {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    Show {
        name: String,
    },
    List,
    /// Run one identity, or all of them.
    Verify {
        id: Option<String>,
        #[arg(long)]
        all: bool,
    },
}

#[derive(Args)]
struct PlotArgs {
    /// Class to draw; defaults to the first-wall figure for (3,0,-1).
    #[arg(long, allow_hyphen_values = true)]
    class: Option<String>,
    /// Extra wall as "center,radius_sq".
    #[arg(long, allow_hyphen_values = true)]
    wall: Vec<String>,
    #[arg(long, allow_hyphen_values = true)]
    guide: Vec<String>,
    /// Also draw the largest wall on each side.
    #[arg(long)]
    largest: bool,
}

struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn new(text: impl Into<String>, value: impl Serialize) -> Result<Self, Error> {
        Ok(Self {
            text: text.into(),
            json: serde_json::to_value(value).map_err(|e| Error::Unsupported(e.to_string()))?,
            ok: true,
        })
    }
}

struct Env {
    rr: RiemannRoch,
    catalog: Option<Catalog>,
}

impl Env {
    fn new(cli: &Cli) -> Result<Self, Error> {
        let rr = RiemannRoch::new(Polarization::new(cli.dimension, cli.degree)?)?;
        let catalog = Catalog::with_riemann_roch(rr.clone()).ok();
        Ok(Self { rr, catalog })
    }

    fn pol(&self) -> &Polarization {
        self.rr.polarization()
    }

    fn catalog(&self) -> Result<&Catalog, Error> {
        self.catalog
            .as_ref()
            .ok_or_else(|| Error::Unsupported("the catalog needs a cubic fourfold".into()))
    }

    /// Numbers, or a K-expression in catalog names.
    fn character(&self, text: &str) -> Result<ChernCharacter, Error> {
        match parse_class(text, self.pol()) {
            Ok(ParsedClass::Full(c)) => Ok(c),
            Ok(ParsedClass::Truncated(t)) => Ok(t.to_character(self.pol())),
            Err(numeric) => {
                if text
                    .trim_start()
                    .starts_with(|ch: char| ch.is_ascii_alphabetic())
                {
                    self.catalog()?.resolve_str(text)
                } else {
                    Err(numeric)
                }
            }
        }
    }

    fn truncated(&self, text: &str) -> Result<TruncatedClass, Error> {
        match parse_class(text, self.pol()) {
            Ok(ParsedClass::Truncated(t)) => Ok(t),
            _ => self.character(text)?.truncate(),
        }
    }
}

fn point(args: &PointArgs) -> Result<TiltPoint, Error> {
    TiltPoint::new(parse_q(&args.beta)?, parse_q(&args.alpha2)?)
}

fn lines<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    let v: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    if v.is_empty() {
        "none".to_string()
    } else {
        v.join("\n")
    }
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let env = Env::new(cli)?;
    match &cli.command {
        Command::Chern(cmd) => {
            let c = match cmd {
                ChernCmd::Twist { class, beta } => env.character(class)?.twist(&parse_q(beta)?),
                ChernCmd::Dual { class } => env.character(class)?.dual(),
                ChernCmd::Tensor { a, b } => env.character(a)?.product(&env.character(b)?),
                ChernCmd::Truncate { class } => {
                    let t = env.character(class)?.truncate()?;
                    return Output::new(t.to_string(), &t);
                }
            };
            Output::new(c.to_string(), &c)
        }
        Command::Hilbert { class, reduced } => {
            let c = env.character(class)?;
            let p = if *reduced {
                env.rr.reduced_hilbert_polynomial(&c)?
            } else {
                env.rr.hilbert_polynomial(&c)?
            };
            Output::new(p.to_string(), &p)
        }
        Command::Euler { a, b } => {
            let a = env.character(a)?;
            let chi = match b {
                Some(b) => env.rr.euler_pairing(&a, &env.character(b)?)?,
                None => env.rr.euler_characteristic(&a)?,
            };
            Output::new(chi.to_string(), chi.to_string())
        }
        Command::Tilt(TiltCmd::Nu(args)) => {
            let v = nu(&point(args)?, &env.truncated(&args.class)?);
            Output::new(v.to_string(), &v)
        }
        Command::Wall(cmd) => match cmd {
            WallCmd::Between { w, u } => {
                let wall = wall_between(&env.truncated(w)?, &env.truncated(u)?)?;
                Output::new(wall.describe(), &wall)
            }
            WallCmd::Straight { class } => {
                let b = straight_wall(&env.truncated(class)?);
                let text = b
                    .as_ref()
                    .map_or_else(|| "none".to_string(), ToString::to_string);
                Output::new(text.clone(), b.map(|_| text))
            }
            WallCmd::Accumulation { class } => {
                let (a, b) = accumulation_points(&env.truncated(class)?)?;
                Output::new(format!("{a}\n{b}"), [&a, &b])
            }
        },
        Command::Destab(cmd) => match cmd {
            DestabCmd::Enumerate(args) => {
                let en = enumerate_at(&point(args)?, &env.truncated(&args.class)?)?;
                let text = lines(
                    en.candidates
                        .iter()
                        .map(|c| format!("{}  ({})", c.sub, c.wall.describe())),
                );
                Output::new(text, &en)
            }
            DestabCmd::Line { class, beta0 } => {
                let scan = walls_crossing_vertical(&env.truncated(class)?, &parse_q(beta0)?)?;
                let text = lines(scan.candidates.iter().map(|c| {
                    format!(
                        "{}  ({}, alpha^2 = {})",
                        c.candidate.sub,
                        c.candidate.wall.describe(),
                        c.alpha_sq
                    )
                }));
                Output::new(text, &scan)
            }
            DestabCmd::Largest { class, side, depth } => {
                let lw = largest_wall_with_depth(&env.truncated(class)?, *side, *depth)?;
                let mut text = lw.wall.describe();
                for w in &lw.witnesses {
                    text.push_str(&format!("\n  {} + {}", w.sub, w.quot));
                }
                Output::new(text, &lw)
            }
        },
        Command::Mukai(cmd) => match cmd {
            MukaiCmd::Project { expr } => {
                let cat = env.catalog()?;
                let p = cat.project(&KExpression::parse(expr)?)?;
                let c = cat.resolve(&p)?;
                Output::new(
                    format!("{p}\n{c}"),
                    json!({"expression": p, "character": c}),
                )
            }
            MukaiCmd::Vector { expr } => {
                let cat = env.catalog()?;
                let v = cat
                    .lattice()?
                    .mukai_vector(cat, &KExpression::parse(expr)?)?;
                Output::new(v.to_string(), v)
            }
            MukaiCmd::Pair { a, b } => {
                let p = mukai_pairing(&MukaiVector::parse(a)?, &MukaiVector::parse(b)?);
                Output::new(p.to_string(), p)
            }
        },
        Command::Catalog(cmd) => {
            let cat = env.catalog()?;
            match cmd {
                CatalogCmd::Show { name } => {
                    let e = cat.get(name)?;
                    let mut text = format!(
                        "{}: {}\n  ch = {}\n  from {}",
                        e.name, e.description, e.character, e.construction
                    );
                    for alt in &e.alternatives {
                        text.push_str(&format!("\n  also {alt}"));
                    }
                    Output::new(text, e)
                }
                CatalogCmd::List => {
                    let text = lines(
                        cat.entries()
                            .iter()
                            .map(|e| format!("{:8} {}", e.name, e.character)),
                    );
                    Output::new(text, cat.entries())
                }
                CatalogCmd::Verify { id, all } => {
                    let ctx = Context::new(env.rr.clone());
                    let reg = Registry::standard();
                    let report = match (id, all) {
                        (Some(id), false) => reg.run_selected(&[id.as_str()], &ctx)?,
                        (None, _) | (_, true) => reg.run_all(&ctx),
                    };
                    let ok = report.all_passed();
                    Ok(Output {
                        ok,
                        ..Output::new(report.to_string(), &report)?
                    })
                }
            }
        }
        Command::Verify { ids } => {
            let ctx = Context::new(env.rr.clone());
            let reg = Registry::standard();
            let report = if ids.is_empty() {
                reg.run_all(&ctx)
            } else {
                let ids: Vec<&str> = ids.iter().map(String::as_str).collect();
                reg.run_selected(&ids, &ctx)?
            };
            let ok = report.all_passed();
            Ok(Output {
                ok,
                ..Output::new(report.to_string(), &report)?
            })
        }
        Command::Plot(args) => {
            let mut spec = match &args.class {
                Some(c) => PlotSpec::for_class(env.truncated(c)?),
                None => PlotSpec::first_wall_figure(),
            };
            if args.largest {
                for side in [Side::Negative, Side::Positive] {
                    if let Ok(lw) = largest_wall_with_depth(&spec.class, side, DEFAULT_PROBE_DEPTH)
                    {
                        spec = spec.with_wall(lw.wall);
                    }
                }
            }
            for w in &args.wall {
                let parts: Vec<Q> = parse_q_list(w)?;
                let [c, r2] = <[Q; 2]>::try_from(parts).map_err(|_| Error::Parse {
                    position: 0,
                    message: "wall is \"center,radius_sq\"".into(),
                })?;
                spec = spec.with_wall(WallDescriptor::semicircle(c, r2));
            }
            for g in &args.guide {
                spec = spec.with_guide(parse_q(g)?);
            }
            let svg = render(&spec)?;
            Ok(Output {
                text: svg.clone(),
                json: json!({"svg": svg}),
                ok: true,
            })
        }
    }
}

fn usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse { .. }
            | Error::UnknownGenerator(_)
            | Error::UnknownIdentity(_)
            | Error::DimensionMismatch { .. }
            | Error::InvalidPolarization(_)
            | Error::NonPositiveAlpha(_)
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut body = if cli.json {
                serde_json::to_string_pretty(&out.json).expect("json values serialize")
            } else {
                out.text
            };
            if !body.ends_with('\n') {
                body.push('\n');
            }
            match &cli.out {
                Some(path) => {
                    if let Err(e) = fs::write(path, body) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(1);
                    }
                }
                None => print!("{body}"),
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if cli.json {
                println!("{}", json!({"error": e.to_string()}));
            }
            eprintln!("error: {e}");
            ExitCode::from(if usage_error(&e) { 2 } else { 1 })
        }
    }
}
