mod render;

use std::fmt::Display;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use exotic_springer::circle::{
    glue, intersect, km_dimension, member_of, orientations, pole_name, rational_string, witness_point, SpherePoint,
    Witness,
};
use exotic_springer::diagram::{enumerate, springer_fiber_dimension, CupDiagram, DiagramJson, Weight};
use exotic_springer::homology::{
    betti_numbers, line_diagram_sum, rank_check, standard_enriched, EnrichedCupDiagram,
};
use exotic_springer::ring::{cell_generating_function, format_polynomial, monomial_basis, poincare_polynomial, RingElement};
use exotic_springer::subset::binomial;
use exotic_springer::verify::{run_all, Bounds};
use exotic_springer::weyl::{inner_product, verify_generator_relations, Character, SignedPermutation};

use render::Figure;

#[derive(Parser)]
#[command(name = "exotic", version, about = "Cup diagrams, intersections and cohomology of exotic Springer fibers")]
struct Cli {
    /// Output format; `render` takes svg or tikz.
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Svg,
    Tikz,
}

#[derive(Subcommand)]
enum Command {
    /// List the cup diagrams of type ((k),(m-k)).
    Enumerate {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
    },
    /// Print the flag conditions cut out by a cup diagram.
    Constraints {
        #[arg(long)]
        a: String,
    },
    /// Decide whether two components meet and describe the intersection.
    Intersect {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// Also construct an exact point of the intersection.
        #[arg(long)]
        witness: bool,
        /// Also list the orientations of the circle diagram.
        #[arg(long)]
        orientations: bool,
    },
    /// Torus fixed points, their cup diagrams and cell dimensions.
    Cells {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
    },
    /// The cohomology ring: basis, Poincaré polynomial, products.
    Cohomology {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, conflicts_with = "mul")]
        poincare: bool,
        #[arg(long, num_args = 2, value_names = ["EXPR", "EXPR"])]
        mul: Option<Vec<String>>,
    },
    /// Homology classes of components via enriched cup diagrams.
    Homology {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        /// List the standard enriched cup diagrams.
        #[arg(long, conflicts_with_all = ["lm", "rank"])]
        standard: bool,
        /// Expand an enriched diagram into line diagrams.
        #[arg(long, conflicts_with = "rank")]
        lm: Option<String>,
        /// Rank of the degree-2l classes.
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Character of the Weyl group on the degree-D piece.
    Character {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        degree: usize,
        /// Generator word ("s0 s1") or window ("2 -1 3 4"); repeatable.
        /// Defaults to e and the generators.
        #[arg(long = "element")]
        elements: Vec<String>,
        /// Also print the inner product with the character in this degree.
        #[arg(long)]
        inner: Option<usize>,
    },
    /// Check the Coxeter relations as group elements and as operators.
    Relations {
        #[arg(long)]
        m: usize,
    },
    /// Dimension of the span of oriented circle diagrams.
    KmDim {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
    },
    /// Test whether a point of (S^2)^m lies on the component S_a.
    Member {
        #[arg(long)]
        a: String,
        /// Points separated by ';', coordinates by ','; rationals like 3/5.
        #[arg(long)]
        point: String,
    },
    /// Complex dimension of the exotic Springer fiber of a bipartition.
    FiberDim {
        #[arg(long, value_delimiter = ',')]
        lambda: Vec<i64>,
        #[arg(long, value_delimiter = ',', default_value = "")]
        mu: Vec<i64>,
    },
    /// Draw a cup diagram (dots allowed) or, with --glue, a circle diagram.
    Render {
        #[arg(long)]
        a: String,
        /// Bottom diagram; `a` is then mirrored on top.
        #[arg(long)]
        glue: Option<String>,
    },
    /// Run the acceptance checks with rank bounds capped at N.
    Check {
        #[arg(long, default_value_t = 6)]
        m_max: usize,
    },
}

/// A failure inside the library, tagged with the error type it came from.
#[derive(Debug)]
struct DomainError {
    kind: &'static str,
    message: String,
}

impl Display for DomainError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.kind, self.message)
    }
}

impl std::error::Error for DomainError {}

trait Domain<T> {
    fn domain(self) -> Result<T>;
}

impl<T, E: Display> Domain<T> for std::result::Result<T, E> {
    fn domain(self) -> Result<T> {
        self.map_err(|e| {
            let kind = std::any::type_name::<E>().rsplit("::").next().unwrap_or("Error");
            DomainError { kind, message: e.to_string() }.into()
        })
    }
}

/// A diagram given as a word or as the JSON this tool prints.
fn diagram(s: &str) -> Result<CupDiagram> {
    if s.trim_start().starts_with('{') {
        let j: DiagramJson = serde_json::from_str(s).domain()?;
        return CupDiagram::try_from(j).domain();
    }
    s.parse::<CupDiagram>().domain()
}

fn point_text(x: &[SpherePoint]) -> String {
    let parts: Vec<String> = x
        .iter()
        .map(|p| match pole_name(p) {
            Some(name) => name.to_string(),
            None => {
                let [a, b, c] = p.coords();
                format!("({},{},{})", rational_string(a), rational_string(b), rational_string(c))
            }
        })
        .collect();
    format!("({})", parts.join(","))
}

struct Output {
    text: String,
    json: Value,
}

fn out(text: impl Into<String>, json: Value) -> Result<Output> {
    Ok(Output { text: text.into(), json })
}

fn lines<I: IntoIterator<Item = S>, S: Display>(items: I) -> String {
    items.into_iter().map(|s| s.to_string()).collect::<Vec<_>>().join("\n")
}

fn run(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Enumerate { m, k } => {
            let ds = enumerate(*m, *k).domain()?;
            out(lines(ds.iter().map(CupDiagram::word)), json!(ds))
        }
        Command::Constraints { a } => {
            let a = diagram(a)?;
            let cs = a.component_constraints();
            out(lines(&cs), json!({ "diagram": a, "constraints": cs }))
        }
        Command::Intersect { a, b, witness, orientations: show } => {
            let (a, b) = (diagram(a)?, diagram(b)?);
            let report = intersect(&a, &b).domain()?;
            let mut text = report.to_string();
            let mut j = json!({ "a": a.word(), "b": b.word(), "report": report });
            if *witness {
                match witness_point(&a, &b).domain()? {
                    Witness::Point(x) => {
                        text += &format!("\nwitness: {}", point_text(&x));
                        j["witness"] = json!({ "point": x });
                    }
                    Witness::Empty { offending } => {
                        let block = offending.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
                        text += &format!("\nwitness: none, relations conflict on vertices {{{block}}}");
                        j["witness"] = json!({ "empty": offending });
                    }
                }
            }
            if *show {
                let os = orientations(&a, &b).domain()?;
                let ws: Vec<String> = os.iter().map(|o| o.weight.to_string()).collect();
                text += &format!("\norientations ({}):", ws.len());
                for w in &ws {
                    text += &format!("\n  {w}");
                }
                j["orientations"] = json!(ws);
            }
            out(text, j)
        }
        Command::Cells { m, k } => {
            let mut rows = Vec::new();
            let mut text = Vec::new();
            for w in Weight::all(*m).filter(|w| w.has_type(*k)) {
                let c = w.cup_diagram();
                let dim = c.cups_plus_half_cups();
                text.push(format!("{w}  {}  dim {dim}", c.word()));
                rows.push(json!({ "weight": w.to_string(), "diagram": c.word(), "dim": dim }));
            }
            let cells = cell_generating_function(*m, *k).domain()?;
            let poincare = poincare_polynomial(*m, *k).domain()?;
            let agree = cells == poincare;
            text.push(format!(
                "cells: {}  Poincaré: {}  {}",
                format_polynomial(&cells),
                format_polynomial(&poincare),
                if agree { "agree" } else { "DIFFER" }
            ));
            out(
                text.join("\n"),
                json!({ "cells": rows, "generating": format_polynomial(&cells), "poincare": format_polynomial(&poincare), "agree": agree }),
            )
        }
        Command::Cohomology { m, k, poincare, mul } => {
            let p = poincare_polynomial(*m, *k).domain()?;
            if let Some(exprs) = mul {
                let x = RingElement::parse(*m, *k, &exprs[0]).domain()?;
                let y = RingElement::parse(*m, *k, &exprs[1]).domain()?;
                let z = x.multiply(&y).domain()?;
                return out(z.to_string(), json!(z));
            }
            if *poincare {
                return out(format_polynomial(&p), json!({ "poincare": format_polynomial(&p), "coefficients": p }));
            }
            let mut text = vec![format!("Poincaré polynomial: {}", format_polynomial(&p))];
            let mut pieces = Vec::new();
            for l in 0..p.len() {
                let basis = monomial_basis(*m, *k, l).domain()?;
                let names: Vec<String> = basis.iter().map(|i| format!("X{i}")).collect();
                text.push(format!("degree {}: {}", 2 * l, names.join(" ")));
                pieces.push(json!({ "degree": 2 * l, "basis": names }));
            }
            out(text.join("\n"), json!({ "poincare": format_polynomial(&p), "pieces": pieces }))
        }
        Command::Homology { m, k, standard, lm, rank } => {
            if let Some(l) = rank {
                let r = rank_check(*m, *k, *l).domain()?;
                let want = binomial(*m, *l);
                return out(
                    format!("rank {r} (C({m},{l}) = {want})"),
                    json!({ "m": m, "k": k, "l": l, "rank": r, "expected": want }),
                );
            }
            if let Some(s) = lm {
                let md: EnrichedCupDiagram = s.parse().domain()?;
                if md.base().m() != *m || md.base().k() != *k {
                    bail!(DomainError {
                        kind: "HomologyError",
                        message: format!("{md} is not of type (({k}),({}))", m.saturating_sub(*k)),
                    });
                }
                let v = line_diagram_sum(&md);
                return out(v.to_string(), json!({ "diagram": md.to_string(), "degree": md.degree(), "sum": v }));
            }
            if *standard {
                let sd = standard_enriched(*m, *k).domain()?;
                let text = lines(sd.iter().map(|d| format!("{d}  degree {}", d.degree())));
                let j: Vec<Value> = sd.iter().map(|d| json!({ "diagram": d.to_string(), "degree": d.degree() })).collect();
                return out(text, json!(j));
            }
            let b = betti_numbers(*m, *k).domain()?;
            let text = lines(b.iter().enumerate().map(|(l, n)| format!("b_{} = {n}", 2 * l)));
            out(text, json!({ "betti": b }))
        }
        Command::Character { m, k, degree, elements, inner } => {
            if degree % 2 == 1 {
                bail!(DomainError { kind: "WeylError", message: format!("odd degree {degree}: the ring is even") });
            }
            let chi = Character::new(*m, *k, degree / 2).domain()?;
            let labelled: Vec<(String, SignedPermutation)> = if elements.is_empty() {
                std::iter::once(("e".to_string(), SignedPermutation::identity(*m)))
                    .chain((0..*m).map(|i| (format!("s{i}"), SignedPermutation::generator(*m, i).unwrap())))
                    .collect()
            } else {
                elements
                    .iter()
                    .map(|e| Ok((e.clone(), SignedPermutation::parse(*m, e).domain()?)))
                    .collect::<Result<_>>()?
            };
            let table = chi.table(&labelled).domain()?;
            let mut text = lines(table.values.iter().map(|v| format!("chi_{degree}({}) = {}", v.w, v.chi)));
            let mut j = json!(table);
            if let Some(d2) = inner {
                if d2 % 2 == 1 {
                    bail!(DomainError { kind: "WeylError", message: format!("odd degree {d2}: the ring is even") });
                }
                let ip = inner_product(*m, *k, degree / 2, d2 / 2).domain()?;
                text += &format!("\n<chi_{degree}, chi_{d2}> = {ip}");
                j["inner"] = json!({ "with": d2, "value": ip.to_string() });
            }
            out(text, j)
        }
        Command::Relations { m } => match verify_generator_relations(*m) {
            Ok(()) => out("all Coxeter relations hold", json!({ "m": m, "ok": true })),
            Err(e) => bail!(DomainError { kind: "RelationFailure", message: e.to_string() }),
        },
        Command::KmDim { m, k } => {
            let n = km_dimension(*m, *k).domain()?;
            out(n.to_string(), json!({ "m": m, "k": k, "dim": n }))
        }
        Command::Member { a, point } => {
            let a = diagram(a)?;
            let x: Vec<SpherePoint> = point
                .split(';')
                .map(|p| SpherePoint::from_strings(&p.split(',').map(str::trim).collect::<Vec<_>>()).domain())
                .collect::<Result<_>>()?;
            let inside = member_of(&x, &a).domain()?;
            out(inside.to_string(), json!({ "member": inside }))
        }
        Command::FiberDim { lambda, mu } => {
            let n = springer_fiber_dimension(lambda, mu).domain()?;
            out(n.to_string(), json!({ "lambda": lambda, "mu": mu, "dim": n }))
        }
        Command::Render { a, glue: bottom } => {
            let figure = match bottom {
                Some(b) => {
                    let (top, bottom) = (diagram(a)?, diagram(b)?);
                    glue(&top, &bottom).domain()?;
                    Figure::circle(&top, &bottom)
                }
                None => {
                    let md: EnrichedCupDiagram = a.parse().domain()?;
                    let dots = a.contains('.').then_some(&md);
                    Figure::cup(md.base(), dots)
                }
            };
            let text = match cli.format {
                Format::Tikz => figure.to_tikz(),
                _ => figure.to_svg(),
            };
            out(text.trim_end(), Value::Null)
        }
        Command::Check { m_max } => {
            let outcomes = run_all(&Bounds::capped(*m_max));
            let failed = outcomes.iter().filter(|o| !o.passed).count();
            let mut text = lines(&outcomes);
            text += &format!("\n{} of {} criteria passed", outcomes.len() - failed, outcomes.len());
            let result = Output { text, json: json!(outcomes) };
            if failed > 0 {
                print(cli.format, &result);
                bail!(DomainError { kind: "CheckFailed", message: format!("{failed} criteria failed") });
            }
            Ok(result)
        }
    }
}

fn print(format: Format, o: &Output) {
    match format {
        Format::Json if !o.json.is_null() => println!("{}", serde_json::to_string_pretty(&o.json).unwrap()),
        _ => println!("{}", o.text),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let render = matches!(cli.command, Command::Render { .. });
    let misplaced = match cli.format {
        Format::Json => render,
        Format::Svg | Format::Tikz => !render,
        Format::Text => false,
    };
    if misplaced {
        eprintln!("error: --format svg/tikz is only for render, and render cannot emit json");
        return ExitCode::from(2);
    }
    match run(&cli) {
        Ok(o) => {
            print(cli.format, &o);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
