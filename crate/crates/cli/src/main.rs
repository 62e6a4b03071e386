//! `dehn`: command-line front end for disk-diagram scans.
//!
//! Exit codes: 0 success or property holds, 1 property violated, 2 usage
//! or input error, 3 resource cap exceeded.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use dehn_core::area::{area_oracle, commutator_power, dehn_table, AreaMethod};
use dehn_core::diagram::DotOptions;
use dehn_core::enumerate::{enumerate_diagrams, EnumerationConfig};
use dehn_core::gallery::{figure3_face_r, figure_diagram, presentation, GalleryId};
use dehn_core::group::{cell_embeds, parse_model};
use dehn_core::props::{
    check_cells_embed, check_pieces, pieces, scan_corpus, verify_proposition_bound, PropertyReport,
};
use dehn_core::{DiskDiagram, Error, FreeProductModel, Presentation};

#[derive(Parser)]
#[command(name = "dehn", version, about = "Disk diagrams, cutcells and Dehn-property scans")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Source {
    /// Built-in presentation: thm1, thm2, eq1, eq2, torusT.
    #[arg(long, conflicts_with = "presentation")]
    gallery: Option<String>,
    /// Presentation file (`gens:` and `rel:` lines, optional model lines).
    #[arg(long)]
    presentation: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PropertyArg {
    Dehn,
    Gdehn1,
    Gdehn2,
    Gdehn3,
    Pieces,
    Embed,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Bfs,
    Corpus,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Scan for a property; exit 1 with the violations if it fails.
    Check {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum)]
        property: PropertyArg,
        #[arg(long, default_value_t = 4)]
        max_area: usize,
        #[arg(long, default_value_t = 5_000_000)]
        max_diagrams: usize,
        /// Write the first violating diagram as DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// List reduced topological-disk diagrams up to isomorphism.
    Enumerate {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 3)]
        max_area: usize,
        #[arg(long)]
        max_perimeter: Option<usize>,
        #[arg(long, default_value_t = 5_000_000)]
        max_diagrams: usize,
    },
    /// Minimal area of a null-homotopic word.
    Area {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        word: String,
        /// Largest area searched.
        #[arg(long, default_value_t = 8)]
        bound: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Bfs)]
        method: MethodArg,
    },
    /// Areas of `[x^n, y^n]` for n = 1..=n-max.
    Table {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "a")]
        x: String,
        #[arg(long, default_value = "b")]
        y: String,
        #[arg(long, default_value_t = 3)]
        n_max: usize,
        #[arg(long, default_value_t = 18)]
        bound: usize,
    },
    /// Values of the recursion f(n) and its arithmetic tail.
    Fbound {
        #[arg(long)]
        c: usize,
        #[arg(long)]
        n: usize,
    },
    /// Built-in presentations and figure diagrams.
    Gallery {
        #[command(subcommand)]
        action: GalleryAction,
    },
    /// Write a diagram (figure or JSON file) as JSON or DOT.
    Export {
        /// Figure id (fig1, fig3) to export.
        #[arg(long, conflicts_with = "input")]
        figure: Option<String>,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Diagram JSON file; needs `--gallery` or `--presentation`.
        #[arg(long)]
        input: Option<PathBuf>,
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        /// Cutcell definition to mark in DOT output.
        #[arg(long, default_value_t = 1)]
        def: u8,
        /// Output path for DOT (stdout otherwise).
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Maximal pieces between relators; exit 1 if some piece is big.
    Pieces {
        #[command(flatten)]
        source: Source,
    },
    /// Whether each 2-cell embeds in the universal cover; exit 1 if not.
    Embed {
        #[command(flatten)]
        source: Source,
    },
}

#[derive(Subcommand)]
enum GalleryAction {
    List,
    Emit {
        /// thm1, thm2, eq1, eq2, torusT, fig1 or fig3.
        #[arg(long)]
        id: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceCap(m) => Failure::Cap(m),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn load(source: &Source) -> Result<(Presentation, Option<FreeProductModel>), Failure> {
    match (&source.gallery, &source.presentation) {
        (Some(id), None) => {
            let (p, m) = presentation(id.parse()?);
            Ok((p, Some(m)))
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            let p = Presentation::parse(&text)?;
            let m = parse_model(&text, &p)?;
            Ok((p, m))
        }
        _ => Err(usage("give exactly one of --gallery or --presentation")),
    }
}

fn need_model(m: Option<FreeProductModel>) -> Result<FreeProductModel, Failure> {
    m.ok_or_else(|| usage("this command needs a word-problem model (abelian_rank, free_rank and image lines)"))
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string(v).expect("JSON values serialize"));
}

fn print_report(r: &PropertyReport, json: bool) {
    if json {
        print_json(&serde_json::to_value(r).expect("reports serialize"));
        return;
    }
    println!(
        "{:?} up to area {}: scanned {}, exempt {}, not minimal {}, uncertified {}, violations {}",
        r.property,
        r.max_area,
        r.scanned,
        r.exempt,
        r.not_minimal,
        r.unknown,
        r.violations.len()
    );
    for v in &r.violations {
        println!("  area {} boundary {}: {}", v.area, v.boundary, v.reason);
    }
}

fn write_dot(path: &PathBuf, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn figure(id: &str, n: usize) -> Result<(DiskDiagram, GalleryId), Failure> {
    match id {
        "fig1" => Ok((figure_diagram(1, n)?, GalleryId::Thm2)),
        "fig3" => Ok((figure_diagram(3, n)?, GalleryId::Eq1)),
        _ => Err(usage(format!("unknown figure `{id}` (fig1 or fig3)"))),
    }
}

fn render(d: &DiskDiagram, gens: &[String], format: Format, def: u8, fig3: bool) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(&d.to_json(gens)).expect("diagrams serialize"),
        Format::Dot => {
            let mut opts = DotOptions { cutcells: Some(def), ..DotOptions::default() };
            if fig3 {
                opts.highlight.push((figure3_face_r(), "R".to_string()));
            }
            d.to_dot(gens, &opts)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let json = cli.json;
    match cli.command {
        Command::Check { source, property, max_area, max_diagrams, dot } => {
            let (p, m) = load(&source)?;
            let report = match property {
                PropertyArg::Pieces => check_pieces(&p),
                PropertyArg::Embed => check_cells_embed(&p, &need_model(m)?)?,
                _ => {
                    let m = need_model(m)?;
                    let def = match property {
                        PropertyArg::Gdehn1 => Some(1),
                        PropertyArg::Gdehn2 => Some(2),
                        PropertyArg::Gdehn3 => Some(3),
                        _ => None,
                    };
                    let cfg = EnumerationConfig { max_diagrams, ..EnumerationConfig::with_max_area(max_area) };
                    let corpus = enumerate_diagrams(&p, &cfg)?;
                    scan_corpus(&p, &m, &corpus, def)?
                }
            };
            print_report(&report, json);
            if let (Some(path), Some(d)) = (&dot, report.violations.iter().find_map(|v| v.source.as_ref())) {
                write_dot(path, &d.to_dot(p.generators(), &DotOptions::default()))?;
            }
            Ok(report.holds())
        }
        Command::Enumerate { source, max_area, max_perimeter, max_diagrams } => {
            let (p, _) = load(&source)?;
            let cfg = EnumerationConfig { max_perimeter, max_diagrams, ..EnumerationConfig::with_max_area(max_area) };
            let e = enumerate_diagrams(&p, &cfg)?;
            if json {
                for d in e.iter() {
                    print_json(&json!({
                        "area": d.area(),
                        "perimeter": d.perimeter(),
                        "boundary": p.format_word(&d.boundary_word()),
                        "diagram": d.to_json(p.generators()),
                    }));
                }
                print_json(&json!({ "counts": e.counts(), "total": e.len() }));
            } else {
                for (n, c) in e.counts().iter().enumerate().skip(1) {
                    println!("area {n}: {c} diagrams");
                }
                println!("total: {}", e.len());
            }
            Ok(true)
        }
        Command::Area { source, word, bound, method } => {
            let (p, m) = load(&source)?;
            let m = need_model(m)?;
            let w = p.parse_word(&word)?;
            let method = match method {
                MethodArg::Bfs => AreaMethod::RelatorBfs,
                MethodArg::Corpus => AreaMethod::DiagramSearch,
            };
            let r = area_oracle(&w, &p, &m, bound, method, None)?;
            if json {
                print_json(&json!({ "word": p.format_word(&w), "result": r }));
            } else {
                let value = r.value.map_or("none within bound".to_string(), |v| v.to_string());
                println!("area {value} (certified {}, {:?}, {} states)", r.certified_exact, r.method, r.explored);
            }
            Ok(true)
        }
        Command::Table { source, x, y, n_max, bound } => {
            let (p, m) = load(&source)?;
            let m = need_model(m)?;
            let gx = p.generator_index(&x).ok_or_else(|| usage(format!("unknown generator `{x}`")))?;
            let gy = p.generator_index(&y).ok_or_else(|| usage(format!("unknown generator `{y}`")))?;
            let family = |n| commutator_power(dehn_core::Letter::pos(gx), dehn_core::Letter::pos(gy), n);
            let rows = dehn_table(&p, &m, family, 1..=n_max, bound)?;
            if json {
                print_json(&serde_json::to_value(&rows).expect("rows serialize"));
            } else {
                println!("n  |w|  area  certified");
                for r in &rows {
                    let a = r.area.map_or("-".to_string(), |v| v.to_string());
                    println!("{:<2} {:<4} {:<5} {}", r.n, r.length, a, r.certified);
                }
            }
            Ok(rows.iter().all(|r| r.certified))
        }
        Command::Fbound { c, n } => {
            let r = verify_proposition_bound(c, n)?;
            if json {
                print_json(&serde_json::to_value(&r).expect("reports serialize"));
            } else {
                println!("c = {c}, N = {n}");
                println!("f = {:?}", r.values);
                println!("increments nondecreasing: {}", r.increments_nondecreasing);
                println!("arithmetic tail from n = {}: {} (slope {}, K = {})", c + 2, r.arithmetic_tail, r.slope, r.k);
            }
            Ok(r.holds())
        }
        Command::Gallery { action: GalleryAction::List } => {
            if json {
                let items: Vec<_> = GalleryId::ALL
                    .iter()
                    .map(|g| json!({ "id": g.name(), "description": g.description() }))
                    .collect();
                print_json(&json!(items));
            } else {
                for g in GalleryId::ALL {
                    println!("{:<7} {}", g.name(), g.description());
                }
                println!("{:<7} figure 1 grid over thm2 (--n)", "fig1");
                println!("{:<7} figure 3 grid over eq1 (--n)", "fig3");
            }
            Ok(true)
        }
        Command::Gallery { action: GalleryAction::Emit { id, n, format } } => {
            if id.starts_with("fig") {
                let (d, g) = figure(&id, n)?;
                let (p, _) = presentation(g);
                print!("{}", render(&d, p.generators(), format, 1, id == "fig3"));
                if format == Format::Json {
                    println!();
                }
                return Ok(true);
            }
            let (p, _) = presentation(id.parse()?);
            match format {
                Format::Json => {
                    let rels: Vec<String> = p.relators().iter().map(|r| p.format_word(r)).collect();
                    print_json(&json!({ "generators": p.generators(), "relators": rels }));
                }
                Format::Dot => return Err(usage("presentations are emitted as JSON")),
            }
            Ok(true)
        }
        Command::Export { figure: fig, n, input, source, format, def, dot } => {
            let (d, gens, fig3) = match (fig, input) {
                (Some(id), None) => {
                    let (d, g) = figure(&id, n)?;
                    (d, presentation(g).0.generators().to_vec(), id == "fig3")
                }
                (None, Some(path)) => {
                    let (p, _) = load(&source)?;
                    let text = fs::read_to_string(&path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
                    let j = serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
                    let d = DiskDiagram::from_json(&j, p.generators())?;
                    let report = d.validate(&dehn_core::presentation::presentation_complex(&p));
                    if !report.is_valid() {
                        return Err(usage(format!("not a diagram over the presentation: {}", report.issues.join("; "))));
                    }
                    (d, p.generators().to_vec(), false)
                }
                _ => return Err(usage("give exactly one of --figure or --input")),
            };
            let text = render(&d, &gens, format, def, fig3);
            match dot {
                Some(path) => write_dot(&path, &text)?,
                None => println!("{}", text.trim_end()),
            }
            Ok(true)
        }
        Command::Pieces { source } => {
            let (p, _) = load(&source)?;
            let all = pieces(&p);
            if json {
                print_json(&serde_json::to_value(&all).expect("pieces serialize"));
            } else {
                for q in &all {
                    let (a, b) = q.sites;
                    println!(
                        "{:<12} relator {}{} @{} / relator {}{} @{}{}",
                        p.format_word(&q.word),
                        a.relator,
                        if a.inverted { "^-1" } else { "" },
                        a.start,
                        b.relator,
                        if b.inverted { "^-1" } else { "" },
                        b.start,
                        if q.big { "  big" } else { "" }
                    );
                }
            }
            Ok(!all.iter().any(|q| q.big))
        }
        Command::Embed { source } => {
            let (p, m) = load(&source)?;
            let m = need_model(m)?;
            let mut all = true;
            let mut rows = Vec::new();
            for r in p.relators() {
                let e = cell_embeds(r, &m)?;
                all &= e;
                rows.push(json!({ "relator": p.format_word(r), "embeds": e }));
                if !json {
                    println!("{} {}", p.format_word(r), if e { "embeds" } else { "does not embed" });
                }
            }
            if json {
                print_json(&json!(rows));
            }
            Ok(all)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(m)) => {
            eprintln!("resource cap: {m}");
            ExitCode::from(3)
        }
    }
}
