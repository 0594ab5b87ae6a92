//! `equihodge`: equivariant Ehrhart and Hodge invariants of polytopes with
//! symmetry, from a JSON description.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use equihodge::ehrhart::{box_character, compute_phi, ehrhart_character};
use equihodge::hodge::{quotient_diamond, HodgeContext};
use equihodge::io::{keyed, InputDocument, QuotientSpec};
use equihodge::mirror::{mirror_pair, predicted_mirror_diamond, scenario, smooth_pair_check, ScenarioBundle};
use equihodge::polytope::ReflexiveStatus;
use equihodge::{Error, ErrorKind, InvariantPolytope, Region};
use render::{character_table, diamond_json, diamond_text, keyed_values, quotient_json, quotient_text, values, Report};
use serde_json::json;

#[derive(Parser)]
#[command(name = "equihodge", version, about = "Equivariant Ehrhart and Hodge invariants of lattice polytopes with symmetry")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Polytope and generators as JSON
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Largest dilate listed by `ehrhart`
    #[arg(long, global = true, default_value_t = 5)]
    max_dilate: u64,
    /// Extra series terms used to recognise phi as a polynomial
    #[arg(long, global = true, default_value_t = equihodge::ehrhart::DEFAULT_BUFFER)]
    buffer: usize,
    /// `trivial`, `det`, or a comma separated list of generator indices
    #[arg(long, global = true)]
    quotient: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Work with the polar dual and the dual action
    #[arg(long, global = true, value_enum, default_value_t = Side::Primal)]
    side: Side,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Side {
    Primal,
    Dual,
}

#[derive(Subcommand)]
enum Command {
    /// Face numbers, classification and face orbits
    Faces,
    /// Lattice point characters of the dilates
    Ehrhart,
    /// The equivariant h*-polynomial
    Phi,
    /// Box point characters of a simplex by height
    Box,
    /// E-polynomial of the invariant torus hypersurface
    Hodge,
    /// Hodge characters of the compactified hypersurface
    Diamond,
    /// Hodge numbers of a quotient (default: by the kernel of det)
    Quotient,
    /// Polar pair, predicted mirror diamond and boundary checks
    Mirror,
    /// Prepared inputs with expected outputs
    Scenario {
        /// `fermat` or `quintic-mirror`
        name: String,
        /// `d m` for `fermat`
        params: Vec<i64>,
    },
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

struct Loaded {
    /// Element indices of the input generators.
    generators: Vec<usize>,
    ip: InvariantPolytope,
}

fn load(cli: &Cli) -> Result<Loaded, Failure> {
    let path = cli
        .input
        .as_ref()
        .ok_or_else(|| Failure::Lib(Error::InvalidInput("--input is required".into())))?;
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    let doc = InputDocument::from_json(&text)?;
    let ip = doc.build()?;
    let generators = doc.generator_indices(&ip)?;
    let ip = match cli.side {
        Side::Primal => ip,
        Side::Dual => mirror_pair(&ip)?.dual,
    };
    Ok(Loaded { generators, ip })
}

fn quotient_spec(cli: &Cli, default: Option<QuotientSpec>) -> Result<Option<QuotientSpec>, Failure> {
    match &cli.quotient {
        Some(s) => Ok(Some(s.parse()?)),
        None => Ok(default),
    }
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let name = match &cli.command {
        Command::Faces => "faces",
        Command::Ehrhart => "ehrhart",
        Command::Phi => "phi",
        Command::Box => "box",
        Command::Hodge => "hodge",
        Command::Diamond => "diamond",
        Command::Quotient => "quotient",
        Command::Mirror => "mirror",
        Command::Scenario { .. } => "scenario",
    };
    if let Command::Scenario { name: s, params } = &cli.command {
        return scenario_report(s, params);
    }
    let Loaded { generators, ip } = load(cli)?;
    let g = ip.group().clone();
    let ctx = HodgeContext::new(cli.buffer);
    let (payload, text) = match &cli.command {
        Command::Faces => {
            let p = ip.polytope();
            let class = p.classify();
            let mut text = format!(
                "f-vector ({})\nsimple {}, simplex {}, smooth {}",
                join(&p.f_vector(), ", "),
                class.is_simple,
                class.is_simplex,
                p.is_smooth()
            );
            let center = match &class.reflexive {
                ReflexiveStatus::Reflexive { center, .. } => {
                    text.push_str(&format!(", reflexive with interior point {center:?}\n"));
                    Some(center.0.clone())
                }
                ReflexiveStatus::NotReflexive => {
                    text.push_str(", not reflexive\n");
                    None
                }
            };
            let mut orbits = Vec::new();
            text.push_str("face orbits\n");
            for orbit in ip.face_orbits() {
                let rep = p.face(orbit[0]);
                let verts: Vec<Vec<i64>> = rep.vertices.iter().map(|&v| p.vertices()[v].0.clone()).collect();
                let isotropy = ip.isotropy_members(rep.id).len();
                text.push_str(&format!(
                    "  dim {}: {} faces, isotropy order {isotropy}, representative {verts:?}\n",
                    rep.dim,
                    orbit.len()
                ));
                orbits.push(json!({"dim": rep.dim, "size": orbit.len(), "isotropyOrder": isotropy, "vertices": verts}));
            }
            let payload = json!({
                "fVector": p.f_vector(),
                "isSimple": class.is_simple,
                "isSimplex": class.is_simplex,
                "isSmooth": p.is_smooth(),
                "reflexiveCenter": center,
                "orbits": orbits,
            });
            (payload, text)
        }
        Command::Ehrhart => {
            let mut rows = Vec::new();
            let (mut all, mut interior) = (Vec::new(), Vec::new());
            for m in 0..=cli.max_dilate {
                let a = ehrhart_character(&ip, m, Region::All);
                let i = ehrhart_character(&ip, m, Region::Interior);
                all.push(values(&a));
                interior.push(values(&i));
                rows.push((format!("L({m}P)"), a));
                rows.push((format!("L*({m}P)"), i));
            }
            (json!({"all": all, "interior": interior}), character_table(&rows))
        }
        Command::Phi => {
            let phi = compute_phi(&ip, cli.buffer);
            let mut rows: Vec<_> = phi
                .coefficients
                .iter()
                .enumerate()
                .map(|(i, c)| (format!("phi_{i}"), c.clone()))
                .collect();
            let mut text = String::new();
            if !phi.diagnostics.is_polynomial {
                text.push_str("warning: phi is not a polynomial up to the truncation order; tail shown\n");
                rows.extend(
                    phi.tail
                        .iter()
                        .enumerate()
                        .map(|(i, c)| (format!("phi_{}", phi.coefficients.len() + i), c.clone())),
                );
            }
            text.push_str(&character_table(&rows));
            text.push_str(&format!(
                "dimensions ({})\npalindromic {}, effective {}\n",
                join(&phi.dimensions(), ", "),
                phi.diagnostics.is_palindromic,
                phi.diagnostics.is_effective()
            ));
            let payload = json!({
                "coefficients": phi.coefficients.iter().map(values).collect::<Vec<_>>(),
                "tail": phi.tail.iter().map(values).collect::<Vec<_>>(),
                "dimensions": phi.dimensions(),
                "diagnostics": phi.diagnostics,
            });
            (payload, text)
        }
        Command::Box => {
            let mut rows = Vec::new();
            let (mut closed, mut open) = (Vec::new(), Vec::new());
            for k in 0..=ip.dim() + 1 {
                let c = box_character(&ip, k, false)?;
                let o = box_character(&ip, k, true)?;
                closed.push(values(&c));
                open.push(values(&o));
                rows.push((format!("BOX_{k}"), c));
                rows.push((format!("PI_{k}"), o));
            }
            (json!({"box": closed, "openBox": open}), character_table(&rows))
        }
        Command::Hodge => {
            let e = ctx.hypersurface_e(&ip)?;
            let rows: Vec<_> = e.terms().iter().map(|(&(p, q), v)| (format!("e^{{{p},{q}}}"), v.clone())).collect();
            let dims: serde_json::Map<_, _> = keyed(&e.dimensions()).into_iter().map(|(k, v)| (k, json!(v))).collect();
            (
                json!({"terms": keyed_values(e.terms()), "dimensions": dims}),
                character_table(&rows),
            )
        }
        Command::Diamond | Command::Quotient => {
            let default = matches!(cli.command, Command::Quotient).then_some(QuotientSpec::Det);
            let diamond = ctx.hodge_diamond(&ip)?;
            match quotient_spec(cli, default)? {
                None => (diamond_json(&diamond), diamond_text(&diamond)),
                Some(spec) => {
                    let sub = spec.subgroup(&ip, &generators)?;
                    let q = quotient_diamond(&diamond, &sub)?;
                    let text = format!("quotient by a subgroup of order {}\n{}\n", sub.order(), quotient_text(&q));
                    let mut payload = quotient_json(&q);
                    payload["subgroupOrder"] = json!(sub.order());
                    (payload, text)
                }
            }
        }
        Command::Mirror => {
            let pair = mirror_pair(&ip)?;
            let diamond = ctx.hodge_diamond(&pair.polytope)?;
            let predicted = predicted_mirror_diamond(&diamond, &pair.group().det_character());
            let dual_vertices: Vec<Vec<i64>> = pair.dual.polytope().vertices().iter().map(|v| v.0.clone()).collect();
            let mut text = format!(
                "interior point {:?}\ndual vertices {dual_vertices:?}\n\npredicted mirror diamond\n{}\n",
                pair.center,
                diamond_text(&predicted.diamond)
            );
            let check = match smooth_pair_check(&pair) {
                Ok(report) => {
                    let statuses: Vec<String> = report
                        .entries
                        .iter()
                        .map(|(&(p, q), s)| format!("  H^{{{p},{q}}} {}", serde_json::to_value(s).unwrap().as_str().unwrap()))
                        .collect();
                    text.push_str(&format!(
                        "\npair check ({}): {}\n{}\n",
                        if report.full { "full" } else { "boundary" },
                        if report.passed() { "passed" } else { "FAILED" },
                        statuses.join("\n")
                    ));
                    let s: serde_json::Map<_, _> =
                        keyed(&report.entries).into_iter().map(|(k, v)| (k, json!(v))).collect();
                    json!({"full": report.full, "passed": report.passed(), "entries": s})
                }
                Err(Error::NotSimple) => {
                    text.push_str("\nwarning: the dual polytope is not simple; pair check skipped\n");
                    json!({"skipped": "NotSimple"})
                }
                Err(e) => return Err(e.into()),
            };
            let payload = json!({
                "center": pair.center.0,
                "dualVertices": dual_vertices,
                "predicted": diamond_json(&predicted.diamond),
                "check": check,
            });
            (payload, text)
        }
        Command::Scenario { .. } => unreachable!(),
    };
    Ok(Report {
        command: name.to_string(),
        group: g,
        payload,
        text,
    })
}

fn scenario_report(name: &str, params: &[i64]) -> Result<Report, Failure> {
    let bundle = scenario(name, params)?;
    let doc = InputDocument::new(bundle.vertices(), bundle.generators());
    let input = serde_json::to_value(&doc).expect("input documents serialize");
    let (group, expected, text) = match &bundle {
        ScenarioBundle::Fermat(b) => {
            let rows: Vec<_> = b
                .expected_primitive
                .iter()
                .enumerate()
                .map(|(p, c)| (format!("H^{{{p},{}}}_prim", b.d - 1 - p), c.clone()))
                .collect();
            (
                b.input.group().clone(),
                json!({"primitive": b.expected_primitive.iter().map(values).collect::<Vec<_>>()}),
                format!("expected primitive characters\n{}", character_table(&rows)),
            )
        }
        ScenarioBundle::QuinticMirror(b) => {
            let table = |m: &std::collections::BTreeMap<(usize, usize), equihodge::ClassFunction>| {
                let rows: Vec<_> = m.iter().map(|(&(p, q), v)| (format!("H^{{{p},{q}}}"), v.clone())).collect();
                character_table(&rows)
            };
            let text = format!(
                "mu {:?}\nexpected diamond\n{}\nexpected mirror diamond\n{}\nexpected quotient (h11, h21): {:?} and {:?}\n",
                b.mu,
                table(&b.expected_diamond),
                table(&b.expected_mirror),
                b.expected_quotients[0],
                b.expected_quotients[1]
            );
            (
                b.pair.group().clone(),
                json!({
                    "mu": values(&b.mu),
                    "diamond": keyed_values(&b.expected_diamond),
                    "mirrorDiamond": keyed_values(&b.expected_mirror),
                    "quotients": b.expected_quotients,
                }),
                text,
            )
        }
    };
    Ok(Report {
        command: "scenario".into(),
        group,
        text: format!("input\n{}\n\n{text}", doc.to_json()),
        payload: json!({"name": name, "input": input, "expected": expected}),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Table => println!("{}", report.table()),
                Format::Json => println!("{}", report.json()),
            }
            ExitCode::SUCCESS
        }
        Err(failure) => {
            let (code, kind, message) = match failure {
                Failure::Io(m) => (2, "input", m),
                Failure::Lib(e) => match e.kind() {
                    ErrorKind::Input => (2, "input", e.to_string()),
                    ErrorKind::Scope => (3, "scope", e.to_string()),
                    ErrorKind::Internal => (1, "internal", e.to_string()),
                },
            };
            match cli.format {
                Format::Table => eprintln!("error ({kind}): {message}"),
                Format::Json => eprintln!("{}", json!({"error": {"kind": kind, "message": message}})),
            }
            ExitCode::from(code)
        }
    }
}
