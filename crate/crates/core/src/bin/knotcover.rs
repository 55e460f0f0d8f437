use std::io::Write;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use knotcover::lowindex::{classes_up_to, eta_prefix, DEFAULT_NODE_BUDGET};
use knotcover::reproduce::{parse_catalog, reproduce_sequences, reproduce_table1, CatalogEntry};
use knotcover::{
    alexander_poly, builtin, diagram_alexander_poly, dynkin_graph, milnor_torsion, parse_surgery,
    plumbing_pi1, reidemeister_schreier, seifert_matrix, skein_defect, skein_triple, wirtinger,
    BraidWord, Error, FpPresentation, OrientedDiagram, PDDiagram, PlumbingGraph, SearchConfig,
};

#[derive(Parser)]
#[command(
    name = "knotcover",
    version,
    about = "Alexander polynomials, link groups, surgery and covering counts"
)]
struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct LinkInput {
    /// Braid word, e.g. "(ab)^3b" or "[1,-2]".
    braid: Option<String>,
    /// PD code instead of a braid, e.g. "[(1,5,2,4),(3,1,4,6),(5,3,6,2)]".
    #[arg(long, conflicts_with = "braid")]
    pd: Option<String>,
    /// Reverse these components (0-based) after orienting.
    #[arg(long, value_delimiter = ',')]
    reverse: Vec<usize>,
}

impl LinkInput {
    fn diagram(&self) -> knotcover::Result<OrientedDiagram> {
        let pd = match (&self.braid, &self.pd) {
            (_, Some(pd)) => PDDiagram::parse(pd)?,
            (Some(b), None) => BraidWord::parse(b)?.closure(),
            (None, None) => return Err(Error::domain("give a braid word or --pd")),
        };
        let mut d = pd.orient()?;
        for &c in &self.reverse {
            if c >= d.num_components() {
                return Err(Error::domain(format!("no component {c}")));
            }
            d = d.reversed(c)?;
        }
        Ok(d)
    }
}

#[derive(Args)]
struct Budget {
    /// Search node budget.
    #[arg(long, env = "KNOTCOVER_BUDGET", default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    /// Wall-clock limit in seconds.
    #[arg(long)]
    time_limit: Option<u64>,
}

impl Budget {
    fn config(&self) -> SearchConfig {
        SearchConfig {
            node_budget: self.budget,
            time_limit: self.time_limit.map(Duration::from_secs),
            ..SearchConfig::default()
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Table {
    Table1,
    Sequences,
}

#[derive(Subcommand)]
enum Command {
    /// Alexander polynomial of a braid closure (or an oriented PD code).
    Alex {
        #[command(flatten)]
        link: LinkInput,
        /// Also print the torsion Δ / (t^(1/2) - t^(-1/2))².
        #[arg(long)]
        torsion: bool,
    },
    /// Seifert matrix of the braid's Bennequin surface.
    SeifertMatrix { braid: String },
    /// Wirtinger presentation with meridians and longitudes.
    Wirtinger {
        #[command(flatten)]
        link: LinkInput,
        #[arg(long)]
        simplify: bool,
    },
    /// Dehn surgery on a link.
    Surgery {
        #[command(flatten)]
        link: LinkInput,
        /// Coefficients per component, e.g. "-2/1,0,-".
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
    },
    /// Counts of conjugacy classes of subgroups by index.
    Eta {
        /// Presentation text, a file containing one, or a built-in name.
        #[arg(long, group = "group")]
        presentation: Option<String>,
        /// Built-in group name.
        #[arg(long, group = "group")]
        builtin: Option<String>,
        /// Braid word whose closure's group is used.
        #[arg(long, group = "group")]
        link: Option<String>,
        /// Affine Dynkin plumbing: D4t, E6t, E7t, E8t.
        #[arg(long, group = "group")]
        plumbing: Option<String>,
        /// Surgery coefficients for --link.
        #[arg(long, requires = "link", allow_hyphen_values = true)]
        surgery: Option<String>,
        #[arg(long)]
        max_index: usize,
        #[command(flatten)]
        budget: Budget,
    },
    /// Plumbing graph, its group and optionally its covering counts.
    Plumb {
        /// D4t, E6t, E7t, E8t, or a JSON file {"vertices":[..],"edges":[[i,j],..]}.
        graph: String,
        #[arg(long)]
        max_index: Option<usize>,
        #[command(flatten)]
        budget: Budget,
    },
    /// Checks Δ₊ - Δ₋ = (t^(1/2) - t^(-1/2)) Δ₀ at every letter.
    SkeinCheck {
        braid: String,
        /// Only this letter position.
        #[arg(long)]
        position: Option<usize>,
    },
    /// Re-runs the published tables.
    Reproduce {
        #[arg(value_enum)]
        table: Table,
        /// Extra JSON-lines catalog.
        #[arg(long)]
        catalog: Option<String>,
        #[command(flatten)]
        budget: Budget,
    },
}

enum Failure {
    Lib(Error),
    Io(String),
    Report,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn read_arg(s: &str) -> Result<String, Failure> {
    std::fs::read_to_string(s).map_err(|e| Failure::Io(format!("{s}: {e}")))
}

fn emit(json: bool, value: Value, text: String) {
    let out = if json {
        serde_json::to_string_pretty(&value).expect("serializable")
    } else {
        text
    };
    // a closed pipe (`| head`) is not an error worth a panic
    let _ = writeln!(std::io::stdout(), "{out}");
}

fn presentation_arg(s: &str) -> Result<FpPresentation, Failure> {
    if let Some(p) = builtin(s) {
        return Ok(p);
    }
    let text = if s.trim_start().starts_with('<') {
        s.to_string()
    } else {
        read_arg(s)?
    };
    Ok(text.parse()?)
}

fn plumbing_arg(s: &str) -> Result<PlumbingGraph, Failure> {
    if let Ok(g) = dynkin_graph(s) {
        return Ok(g);
    }
    let text = read_arg(s)?;
    let g: PlumbingGraph =
        serde_json::from_str(&text).map_err(|e| Error::parse(0, e.to_string()))?;
    Ok(PlumbingGraph::new(g.vertices, g.edges)?)
}

fn eta_report(
    json: bool,
    p: &FpPresentation,
    max_index: usize,
    cfg: &SearchConfig,
) -> Result<(), Failure> {
    let q = p.simplify();
    let inner = SearchConfig {
        simplify: false,
        ..cfg.clone()
    };
    match classes_up_to(&q, max_index, &inner) {
        Ok(classes) => {
            let mut eta = vec![0u64; max_index];
            let mut rows = Vec::new();
            for c in &classes {
                eta[c.index() - 1] += 1;
                let h = reidemeister_schreier(&q, &c.table)?;
                rows.push(json!({"index": c.index(), "normal": c.normal, "abelianization": h.abelianization()}));
            }
            let text = format!(
                "eta = {}",
                serde_json::to_string(&eta).expect("serializable")
            );
            emit(
                json,
                json!({"eta": eta, "complete": true, "classes": rows}),
                text,
            );
            Ok(())
        }
        Err(full @ Error::BudgetExhausted { .. }) => {
            let (seq, err) = eta_prefix(&q, max_index, &inner);
            let err = err.unwrap_or(full);
            let text = format!(
                "eta (partial, {} of {max_index}) = {}",
                seq.values.len(),
                serde_json::to_string(&seq.values).expect("serializable")
            );
            emit(
                json,
                json!({"eta": seq.values, "complete": false, "error": err.to_string()}),
                text,
            );
            Err(Failure::Lib(err))
        }
        Err(e) => Err(e.into()),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let json = cli.json;
    match cli.command {
        Command::Alex { link, torsion } => {
            let delta = match (&link.braid, link.pd.is_none() && link.reverse.is_empty()) {
                (Some(b), true) => alexander_poly(&BraidWord::parse(b)?),
                _ => diagram_alexander_poly(&link.diagram()?)?,
            };
            let mut value = json!({"alexander": delta.to_string(), "terms": delta});
            let mut text = delta.to_string();
            if torsion {
                let t = milnor_torsion(&delta)?;
                text.push_str(&format!("\ntorsion: {t}"));
                value["torsion"] = json!(t);
            }
            emit(json, value, text);
        }
        Command::SeifertMatrix { braid } => {
            let v = seifert_matrix(&BraidWord::parse(&braid)?)?;
            let text = v
                .entries()
                .iter()
                .map(|row| row.iter().map(|x| format!("{x:>3}")).collect::<String>())
                .collect::<Vec<_>>()
                .join("\n");
            emit(json, json!(v), text);
        }
        Command::Wirtinger { link, simplify } => {
            let mut p = wirtinger(&link.diagram()?)?;
            if simplify {
                p = p.simplify();
            }
            let mut text = p.to_string();
            for (i, per) in p.peripheral().iter().enumerate() {
                text.push_str(&format!(
                    "\ncomponent {i}: meridian {}, longitude {}",
                    p.format_word(&per.meridian),
                    p.format_word(&per.longitude)
                ));
            }
            emit(json, json!(p), text);
        }
        Command::Surgery { link, coeffs } => {
            let p = wirtinger(&link.diagram()?)?.surgery(&parse_surgery(&coeffs)?)?;
            let s = p.simplify();
            let ab = s.abelianization();
            let text = format!("{s}\nH1 = {ab}");
            emit(json, json!({"presentation": s, "abelianization": ab}), text);
        }
        Command::Eta {
            presentation,
            builtin: name,
            link,
            plumbing,
            surgery,
            max_index,
            budget,
        } => {
            let p = if let Some(s) = presentation {
                presentation_arg(&s)?
            } else if let Some(n) = name {
                builtin(&n).ok_or_else(|| Error::domain(format!("no built-in group {n}")))?
            } else if let Some(b) = link {
                let p = wirtinger(&BraidWord::parse(&b)?.closure().orient()?)?;
                match surgery {
                    Some(s) => p.surgery(&parse_surgery(&s)?)?,
                    None => p,
                }
            } else if let Some(g) = plumbing {
                plumbing_pi1(&plumbing_arg(&g)?)?
            } else {
                return Err(
                    Error::domain("give --presentation, --builtin, --link or --plumbing").into(),
                );
            };
            eta_report(json, &p, max_index, &budget.config())?;
        }
        Command::Plumb {
            graph,
            max_index,
            budget,
        } => {
            let g = plumbing_arg(&graph)?;
            let p = plumbing_pi1(&g)?;
            let ab = p.abelianization();
            let text = format!("{p}\nsimplified: {}\nH1 = {ab}", p.simplify());
            emit(
                json,
                json!({"graph": g, "presentation": p, "abelianization": ab}),
                text,
            );
            if let Some(n) = max_index {
                eta_report(json, &p, n, &budget.config())?;
            }
        }
        Command::SkeinCheck { braid, position } => {
            let b = BraidWord::parse(&braid)?;
            let positions: Vec<usize> = match position {
                Some(k) => vec![k],
                None => (0..b.len()).collect(),
            };
            let mut rows = Vec::new();
            let mut text = Vec::new();
            let mut ok = true;
            for k in positions {
                let (p, m, z) = skein_triple(&b, k)?;
                let defect = skein_defect(&b, k)?;
                ok &= defect.is_zero();
                text.push(format!(
                    "{k}: D+ = {}, D- = {}, D0 = {} -> {}",
                    alexander_poly(&p),
                    alexander_poly(&m),
                    alexander_poly(&z),
                    if defect.is_zero() { "ok" } else { "VIOLATED" }
                ));
                rows.push(json!({"position": k, "holds": defect.is_zero(), "defect": defect}));
            }
            emit(
                json,
                json!({"holds": ok, "positions": rows}),
                text.join("\n"),
            );
            if !ok {
                return Err(Failure::Report);
            }
        }
        Command::Reproduce {
            table,
            catalog,
            budget,
        } => {
            let extra: Vec<CatalogEntry> = match catalog {
                Some(path) => parse_catalog(&read_arg(&path)?)?,
                None => Vec::new(),
            };
            let cfg = budget.config();
            let report = match table {
                Table::Table1 => reproduce_table1(&extra, &cfg),
                Table::Sequences => reproduce_sequences(&extra, &cfg),
            };
            emit(json, json!(report), report.to_string());
            if !report.is_success() {
                return Err(Failure::Report);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Report) => ExitCode::from(1),
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_parse() { 2 } else { 3 })
        }
    }
}
