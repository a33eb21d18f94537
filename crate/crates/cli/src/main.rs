//! `mapcorn`: build maps, apply operators, enumerate cornerations, classify
//! them and build split graphs from the command line.
//!
//! Exit status is 0 on success, 1 when a verification finds a violated
//! expectation, and 2 on usage or precondition errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use mapcorn::corn::{self, enumerate_transitive_with, Corneration, Width};
use mapcorn::io::{export_dot, parse_corneration, parse_map, write_corneration, write_map};
use mapcorn::split::{self, SplitKind};
use mapcorn::symmetry::{self, automorphism_group, local_action_group, OrbitTarget, DEFAULT_GROUP_BOUND};
use mapcorn::verify::{self, SuiteOptions};
use mapcorn::{build, ops, symtype, CellKind, FlagMap, Genus};

#[derive(Parser)]
#[command(name = "mapcorn", version, about = "Maps on surfaces, cornerations and split graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a map and write it as a map file.
    Build {
        #[command(subcommand)]
        family: Family,
        #[command(flatten)]
        out: Output,
    },
    /// Counts, topology and bipartiteness of a map.
    Info {
        map: PathBuf,
        /// Print the skeleton as Graphviz instead.
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Apply a map operator.
    Op {
        #[arg(value_enum)]
        operator: Operator,
        map: PathBuf,
        /// Hole order, for `hole`.
        #[arg(long)]
        j: Option<usize>,
        /// Component to write when the result is disconnected.
        #[arg(long, default_value_t = 0)]
        component: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Order and generators of the automorphism group.
    Aut {
        map: PathBuf,
        #[command(flatten)]
        search: Search,
    },
    /// Orbits of the automorphism group on flags or cells.
    Orbits {
        map: PathBuf,
        #[arg(long, value_enum, default_value_t = Target::Flags)]
        on: Target,
    },
    /// Reflexible, face-reflexible and Petrie face-reflexible.
    Reflexibility {
        map: PathBuf,
        #[command(flatten)]
        search: Search,
    },
    /// Enumerate or classify cornerations.
    Corn {
        #[command(subcommand)]
        action: CornAction,
    },
    /// Symmetry-type graph of a transitive corneration and its table row.
    Symtype {
        map: PathBuf,
        corn: PathBuf,
        #[arg(long)]
        dot: bool,
    },
    /// Split graph of a corneration.
    Split {
        map: PathBuf,
        corn: PathBuf,
        #[arg(long, value_parser = parse_kind)]
        kind: SplitKind,
        #[command(flatten)]
        format: GraphFormat,
        /// Compare valence and local connectivity with the predicted
        /// values and check vertex transitivity; exit 1 on a mismatch.
        #[arg(long)]
        verify: bool,
    },
    /// Run the verification suite.
    Verify {
        #[command(subcommand)]
        what: VerifyWhat,
    },
}

#[derive(Subcommand)]
enum Family {
    /// The {4,4} torus with `rows x cols` vertices.
    Torus {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
    },
    /// The n-antiprism on the sphere.
    Antiprism {
        #[arg(long)]
        n: usize,
    },
    /// The {3,6} torus with `n x n` vertices.
    Triangular {
        #[arg(long)]
        n: usize,
    },
    /// Two vertices joined by `q` edges on the sphere.
    Dipole {
        #[arg(long)]
        q: usize,
    },
    Tetrahedron,
    Octahedron,
    Cube,
}

#[derive(Subcommand)]
enum CornAction {
    /// Transitive j-cornerations, one line each; `--write DIR` saves them.
    Enumerate {
        map: PathBuf,
        #[arg(long)]
        j: usize,
        /// Directory to write `corn-<i>.txt` files into.
        #[arg(long)]
        write: Option<PathBuf>,
        #[command(flatten)]
        search: Search,
    },
    /// Width, local classes, face patterns and symmetry of one corneration.
    Classify {
        map: PathBuf,
        corn: PathBuf,
    },
}

#[derive(Subcommand)]
enum VerifyWhat {
    /// All ten claims on the built-in suite of maps.
    Suite {
        /// Map file for the connected but not locally connected example.
        #[arg(long)]
        census_map: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        search: Search,
    },
}

#[derive(Args)]
struct Output {
    /// Write to a file instead of standard output.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Args, Clone, Copy)]
struct Search {
    /// Largest group order the subgroup searches accept.
    #[arg(long, default_value_t = DEFAULT_GROUP_BOUND)]
    group_bound: usize,
    /// Largest index of Aut(L) in Aut(M) searched.
    #[arg(long, default_value_t = 4)]
    max_index: usize,
}

#[derive(Args)]
#[group(multiple = false)]
struct GraphFormat {
    #[arg(long)]
    dot: bool,
    #[arg(long)]
    graph6: bool,
    #[arg(long)]
    sparse6: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Operator {
    Dual,
    Petrie,
    Opposite,
    Hole,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Flags,
    Vertices,
    Edges,
    Faces,
}

fn parse_kind(s: &str) -> Result<SplitKind, String> {
    s.parse()
}

fn read_map(path: &Path) -> Result<FlagMap> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_map(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_corneration(path: &Path, map: &FlagMap) -> Result<Corneration> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_corneration(&text, map).with_context(|| format!("parsing {}", path.display()))
}

fn emit(out: &Output, text: &str) -> Result<()> {
    match &out.output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn genus_string(g: Genus) -> String {
    match g {
        Genus::Orientable(h) => format!("orientable genus {h}"),
        Genus::NonOrientable(k) => format!("non-orientable genus {k}"),
    }
}

fn info(m: &FlagMap, as_json: bool) {
    let t = m.topology();
    let valence = m.uniform_valence();
    let simple = m.skeleton().is_simple();
    if as_json {
        let genus = match t.genus {
            Genus::Orientable(h) | Genus::NonOrientable(h) => h,
        };
        let v = json!({
            "name": m.name(),
            "flags": m.n_flags(),
            "vertices": m.n_vertices(),
            "edges": m.n_edges(),
            "faces": m.n_faces(),
            "euler": t.euler,
            "orientable": t.orientable,
            "genus": genus,
            "valence": valence,
            "face_bipartite": m.is_face_bipartite(),
            "vertex_bipartite": m.is_vertex_bipartite(),
            "simple": simple,
        });
        println!("{v:#}");
        return;
    }
    println!("map {}", m.label());
    println!("flags {}", m.n_flags());
    println!("V={} E={} F={} euler={}", m.n_vertices(), m.n_edges(), m.n_faces(), t.euler);
    println!("{}", genus_string(t.genus));
    match valence {
        Some(q) => println!("valence {q}"),
        None => println!("valence mixed"),
    }
    println!("face-bipartite {}", m.is_face_bipartite());
    println!("vertex-bipartite {}", m.is_vertex_bipartite());
    println!("simple skeleton {simple}");
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Build { family, out } => {
            let m = match family {
                Family::Torus { rows, cols } => build::torus_grid(rows, cols)?,
                Family::Antiprism { n } => build::antiprism(n)?,
                Family::Triangular { n } => build::torus_triangular(n)?,
                Family::Dipole { q } => build::dipole(q)?,
                Family::Tetrahedron => build::tetrahedron(),
                Family::Octahedron => build::octahedron(),
                Family::Cube => build::cube(),
            };
            emit(&out, &write_map(&m))?;
        }
        Command::Info { map, dot, json } => {
            let m = read_map(&map)?;
            if dot {
                print!("{}", export_dot(&m.skeleton()));
            } else {
                info(&m, json);
            }
        }
        Command::Op {
            operator,
            map,
            j,
            component,
            out,
        } => {
            let m = read_map(&map)?;
            let result = match operator {
                Operator::Dual => ops::dual(&m)?,
                Operator::Petrie => ops::petrie(&m)?,
                Operator::Opposite => ops::opposite(&m)?,
                Operator::Hole => {
                    let Some(j) = j else { bail!("`op hole` needs --j") };
                    let mut r = ops::hole(&m, j)?;
                    let n = r.maps.len();
                    if n > 1 {
                        eprintln!("H_{j} has {n} components; writing component {component}");
                    }
                    if component >= n {
                        bail!("component {component} out of range 0..{n}");
                    }
                    r.maps.swap_remove(component)
                }
            };
            emit(&out, &write_map(&result))?;
        }
        Command::Aut { map, search } => {
            let m = read_map(&map)?;
            let g = automorphism_group(&m);
            println!("order {}", g.order());
            println!("flag-transitive {}", g.is_flag_transitive());
            println!("generators {}", g.generators().len());
            let subgroups = g.subgroups_up_to_index(search.max_index, search.group_bound)?;
            println!("subgroups of index <= {} {}", search.max_index, subgroups.len());
        }
        Command::Orbits { map, on } => {
            let m = read_map(&map)?;
            let target = match on {
                Target::Flags => OrbitTarget::Flags,
                Target::Vertices => OrbitTarget::Cells(CellKind::Vertex),
                Target::Edges => OrbitTarget::Cells(CellKind::Edge),
                Target::Faces => OrbitTarget::Cells(CellKind::Face),
            };
            let orbits = automorphism_group(&m).orbits_on(&m, target);
            println!("orbits {}", orbits.len());
            for o in &orbits {
                let items: Vec<String> = o.iter().map(usize::to_string).collect();
                println!("{}", items.join(" "));
            }
        }
        Command::Reflexibility { map, search } => {
            let m = read_map(&map)?;
            println!("reflexible {}", symmetry::is_reflexible(&m));
            let face = symmetry::is_face_reflexible(&m, search.group_bound)?;
            println!("face-reflexible {}", face.is_some());
            let petrie = ops::petrie(&m)?;
            let face_p = symmetry::is_face_reflexible(&petrie, search.group_bound)?;
            println!("petrie face-reflexible {}", face_p.is_some());
        }
        Command::Corn { action } => match action {
            CornAction::Enumerate { map, j, write, search } => {
                let m = read_map(&map)?;
                let found = enumerate_transitive_with(&m, j, search.max_index, search.group_bound)?;
                let found: Vec<_> = found.into_iter().filter(|t| t.transitive).collect();
                println!("transitive {j}-cornerations {}", found.len());
                if let Some(dir) = &write {
                    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
                }
                for (i, t) in found.iter().enumerate() {
                    let index = automorphism_group(&m).order() / t.aut.order();
                    println!("{i}: corners={} |Aut(L)|={} index={index} symmetric={}", t.corneration.len(), t.aut.order(), t.symmetric);
                    if let Some(dir) = &write {
                        let p = dir.join(format!("corn-{i}.txt"));
                        fs::write(&p, write_corneration(&m, &t.corneration))
                            .with_context(|| format!("writing {}", p.display()))?;
                    }
                }
            }
            CornAction::Classify { map, corn } => {
                let m = read_map(&map)?;
                let l = read_corneration(&corn, &m)?;
                classify_corneration(&m, &l)?;
            }
        },
        Command::Symtype { map, corn, dot } => {
            let m = read_map(&map)?;
            let l = read_corneration(&corn, &m)?;
            let g = corn::aut_of_corneration(&m, &automorphism_group(&m), &l);
            let c = symtype::classify(&m, &g, &l)?;
            if dot {
                print!("{}", export_dot(&c.diagram));
            } else {
                match c.row {
                    Some(r) => println!("row ({r})"),
                    None => println!("row none"),
                }
                println!("{}", c.attributes);
                println!("nodes {}", c.diagram.node_count());
                println!("matches table {}", c.matches_table);
            }
        }
        Command::Split {
            map,
            corn,
            kind,
            format,
            verify,
        } => {
            let m = read_map(&map)?;
            let l = read_corneration(&corn, &m)?;
            let s = split::split_named(&m, &l, kind)?;
            if format.dot {
                print!("{}", export_dot(&s));
            } else if format.graph6 {
                println!("{}", s.to_graph6());
            } else if format.sparse6 {
                println!("{}", s.to_sparse6());
            } else {
                println!("{kind}: vertices={} edges={}", s.n_vertices(), s.n_edges());
                match s.valence() {
                    Some(v) => println!("valence {v}"),
                    None => println!("valence mixed"),
                }
                println!("connected {}", s.is_connected());
                println!("locally connected {}", split::is_locally_connected(&m, &s).is_ok());
            }
            if verify {
                return verify_split(&m, &l, kind);
            }
        }
        Command::Verify {
            what: VerifyWhat::Suite { census_map, json, search },
        } => {
            let opts = SuiteOptions {
                group_bound: search.group_bound,
                max_index: search.max_index,
                census_map: census_map.as_deref().map(read_map).transpose()?,
            };
            let report = verify::run_suite(&opts)?;
            if json {
                let claims: Vec<_> = report
                    .claims
                    .iter()
                    .map(|c| {
                        json!({
                            "criterion": c.criterion,
                            "claim": c.claim,
                            "passed": c.passed,
                            "instances": c.instances,
                            "witnesses": c.witnesses,
                            "notes": c.notes,
                            "seconds": c.elapsed.as_secs_f64(),
                        })
                    })
                    .collect();
                println!("{:#}", json!({ "all_passed": report.all_passed(), "claims": claims }));
            } else {
                print!("{report}");
            }
            if !report.all_passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn classify_corneration(m: &FlagMap, l: &Corneration) -> Result<()> {
    let aut = automorphism_group(m);
    let g = corn::aut_of_corneration(m, &aut, l);
    match l.width() {
        Width::Uniform(j) => println!("width {j}"),
        Width::Mixed => println!("width mixed"),
    }
    println!("corners {}", l.len());
    println!("|Aut(L)| {} index {}", g.order(), aut.order() / g.order());
    let transitive = l.is_transitive_under(m, &g);
    println!("transitive {transitive}");
    println!("symmetric {}", g.orbits_on(m, OrbitTarget::Cells(CellKind::Dart)).len() == 1);
    let mut classes = std::collections::BTreeMap::new();
    for v in m.vertices() {
        let lc = corn::local_corneration(m, l, v)?;
        *classes.entry(lc.class.to_string()).or_insert(0usize) += 1;
    }
    for (class, n) in classes {
        println!("local class {class} at {n} vertices");
    }
    if let Some(v) = m.vertices().first() {
        println!("local action {}", local_action_group(m, &g, *v).kind);
    }
    if l.width() == Width::Uniform(1) {
        let fp = corn::face_patterns(m, l)?;
        let letters: Vec<String> = fp.letters().iter().map(ToString::to_string).collect();
        println!("face patterns {} configuration {}", letters.join(","), fp.configuration);
    }
    let lengths = corn::circuits_of(m, l).lengths();
    println!("circuits {} lengths {:?}", lengths.len(), lengths);
    Ok(())
}

fn verify_split(m: &FlagMap, l: &Corneration, kind: SplitKind) -> Result<ExitCode> {
    let aut = automorphism_group(m);
    let g = corn::aut_of_corneration(m, &aut, l);
    if !l.is_transitive_under(m, &g) {
        bail!("the corneration is not transitive, so no prediction applies");
    }
    let r = split::measure(m, l, kind)?;
    let Some(want) = r.expected else {
        bail!("no prediction for {kind} at q={} j={}", r.q, r.j);
    };
    let s = split::split_named(m, l, kind)?;
    let transitive = split::verify_vertex_transitive(m, &s, &g)?;
    let lines = [
        ("valence", r.valence_ok(), format!("{:?} expected {}", r.valence, want.valence)),
        (
            "locally connected",
            r.local_ok(),
            format!("{} expected {}", r.locally_connected, want.locally_connected),
        ),
        ("vertex-transitive", transitive, transitive.to_string()),
    ];
    let mut ok = true;
    for (what, pass, detail) in lines {
        println!("{} {what}: {detail}", if pass { "PASS" } else { "FAIL" });
        ok &= pass;
    }
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
