//! Command-line workbench for exact polytope construction, realization of
//! planar graphs as 3-polytopes, and f-vector analytics.  Every subcommand
//! prints a JSON run report to stdout; geometry goes to files.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use polylab::analysis4d::{self, FlagData4};
use polylab::construct4d::{self, FacetPicker};
use polylab::deformed;
use polylab::fvector::{self, FVector};
use polylab::geometry::Polytope;
use polylab::packing::{self, QuadPattern};

use polylab::rat::{self, Rat};
use polylab::realize;
use polylab_cli::formats::{self, round3};
use polylab_cli::report::{inputs, RunReport};
use polylab_cli::expr;
use serde_json::{json, Value};
use std::fs;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "polylab",
    version,
    about = "Polytope construction and f-vector analysis workbench"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Realize a 3-connected planar map as a 3-polytope.
    Realize3d {
        /// Adjacency-list file: line i lists the neighbors of vertex i in
        /// cyclic order (# comments allowed).
        graph: PathBuf,
        /// Realization method.
        #[arg(long, value_enum, default_value_t = Method::Packing)]
        method: Method,
        /// Output stem; writes <stem>.off and <stem>.poly (packing adds
        /// <stem>.svg).  Defaults to the graph file name.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate an f-vector expression.
    Fvector {
        /// Expression, e.g. `glue(cyclic(8,25), truncv(dual(cyclic(8,25))))`.
        expr: String,
    },
    /// Build notable 4-polytopes exactly.
    Construct {
        #[command(subcommand)]
        which: Which,
    },
    /// Flag-vector analytics for a 4-polytope (named or from a file).
    Analyze4d {
        /// Polytope name (simplex, cube, cross, hypersimplex, 24-cell) or a
        /// path to a VERTICES/FACETS section file.
        target: String,
    },
    /// Build a deformed product of polygons; optionally project to 4d.
    DeformedProduct {
        /// Number of polygon factors (>= 2).
        #[arg(long)]
        r: usize,
        /// Polygon size (even, >= 4).
        #[arg(long)]
        n: usize,
        /// Compute the exact projection to the last four coordinates.
        #[arg(long)]
        project: bool,
        /// Write the projected polytope to this section file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// Circle-pattern midsphere realization (floating point, verified).
    Packing,
    /// Spring embedding with an exact rational polyhedral lift.
    Tutte,
}

#[derive(Subcommand)]
enum Which {
    /// The 4-dimensional hypersimplex (sums of coordinates between 1 and 2).
    Hypersimplex {
        /// Write the polytope to this section file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The 24-cell.
    Cell24 {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Stack pyramids onto n facets of the 4-simplex, tracking vertex cuts.
    Stack {
        /// Number of stacking steps.
        #[arg(long)]
        n: usize,
        /// Facet selection rule per step.
        #[arg(long, value_enum, default_value_t = Picker::Cycle)]
        picker: Picker,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Deep vertex truncation of a stacked 4-simplex.
    DvtStack {
        /// Number of stacking steps before truncation.
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Picker::Cycle)]
        picker: Picker,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Picker {
    /// Always stack on the first facet.
    First,
    /// Always stack on the last facet.
    Last,
    /// Rotate through the facet list.
    Cycle,
}

impl From<Picker> for FacetPicker {
    fn from(p: Picker) -> FacetPicker {
        match p {
            Picker::First => FacetPicker::First,
            Picker::Last => FacetPicker::Last,
            Picker::Cycle => FacetPicker::Cycle,
        }
    }
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e:#}");
        std::process::exit(1);
    }
}

fn run() -> Result<()> {
    let cli = Cli::parse();
    let rep = match cli.cmd {
        Cmd::Realize3d { graph, method, out } => cmd_realize3d(&graph, method, out)?,
        Cmd::Fvector { expr } => cmd_fvector(&expr)?,
        Cmd::Construct { which } => cmd_construct(which)?,
        Cmd::Analyze4d { target } => cmd_analyze4d(&target)?,
        Cmd::DeformedProduct { r, n, project, out } => cmd_deformed(r, n, project, out)?,
    };
    println!("{}", rep.to_json());
    Ok(())
}

// ------------------------------------------------------------ formatting

fn big_strings(f: &FVector) -> Vec<String> {
    f.entries().iter().map(|x| x.to_string()).collect()
}

/// Shared 4-polytope analytics block: shape coordinates, fatness,
/// complexity and flags (when `f03` is known).
fn shape_json(f: &FVector, f03: Option<&BigInt>) -> Result<Value> {
    let mut m = serde_json::Map::new();
    m.insert("f".into(), json!(big_strings(f)));
    m.insert("euler_ok".into(), json!(f.euler_ok()));
    m.insert("symmetric".into(), json!(*f == f.reversed()));
    match analysis4d::shape4(f, f03) {
        Ok(s) => {
            m.insert("phi0".into(), json!(s.phi0.to_string()));
            m.insert("phi3".into(), json!(s.phi3.to_string()));
            m.insert("fatness".into(), json!(s.fatness.to_string()));
            m.insert("fatness_decimal".into(), json!(round3(&s.fatness)));
            if let Some(c) = &s.complexity {
                m.insert("complexity".into(), json!(c.to_string()));
                m.insert("complexity_decimal".into(), json!(round3(c)));
            }
            m.insert(
                "pentagon".into(),
                json!(analysis4d::in_pentagon(&s.phi0, &s.phi3)),
            );
        }
        Err(e) => {
            m.insert("shape_error".into(), json!(e.to_string()));
        }
    }
    if let Some(f03) = f03 {
        m.insert("f03".into(), json!(f03.to_string()));
        let fd = FlagData4::new(f.clone(), f03.clone())?;
        let (holds, tight) = analysis4d::flag_lower_bound(&fd);
        m.insert("two_simplicial".into(), json!(fd.two_simplicial()));
        m.insert("two_simple".into(), json!(fd.two_simple()));
        m.insert(
            "2s2s".into(),
            json!(fd.two_simplicial() && fd.two_simple()),
        );
        m.insert("flag_inequality_holds".into(), json!(holds));
        m.insert("flag_inequality_tight".into(), json!(tight));
    }
    Ok(Value::Object(m))
}

fn out_path(stem: &Path, ext: &str) -> PathBuf {
    PathBuf::from(format!("{}.{ext}", stem.display()))
}

fn write_out(path: &Path, contents: &str, outputs: &mut Vec<String>) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))?;
    outputs.push(path.display().to_string());
    Ok(())
}

// -------------------------------------------------------------- commands

fn cmd_realize3d(graph: &Path, method: Method, out: Option<PathBuf>) -> Result<RunReport> {
    let text = fs::read_to_string(graph)
        .with_context(|| format!("reading graph file {}", graph.display()))?;
    let stem = out.unwrap_or_else(|| {
        PathBuf::from(
            graph
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "realization".into()),
        )
    });
    let method_name = match method {
        Method::Packing => "packing",
        Method::Tutte => "tutte",
    };
    let ins = inputs([
        ("graph", graph.display().to_string()),
        ("method", method_name.to_string()),
    ]);
    RunReport::run("realize3d", ins, |outputs| {
        let map = formats::read_graph(&text)?;
        let v = map.num_vertices();
        let e = map.edges().len();
        let faces = map.faces().len();
        let mut m = serde_json::Map::new();
        m.insert("method".into(), json!(method_name));
        m.insert("f".into(), json!([v, e, faces]));
        m.insert(
            "steinitz_member".into(),
            json!(fvector::steinitz_member(v as i64, e as i64, faces as i64)),
        );
        match method {
            Method::Packing => {
                let (a, b) = map.edges()[0];
                let pattern = QuadPattern::build(&map, a, b)?;
                let rho = packing::solve_radii(&pattern)?;
                let lay = packing::layout(&pattern, &rho)?;
                let mid = realize::realize_steinitz_from_edge(&map, a, b)?;
                write_out(
                    &out_path(&stem, "off"),
                    &formats::write_off(&mid.vertices, map.faces()),
                    outputs,
                )?;
                write_out(
                    &out_path(&stem, "poly"),
                    &formats::write_polytope_f64(&mid.vertices, &mid.planes),
                    outputs,
                )?;
                write_out(
                    &out_path(&stem, "svg"),
                    &formats::write_svg(&pattern, &lay),
                    outputs,
                )?;
                m.insert("gradient_norm".into(), json!(mid.gradient_norm));
                m.insert("layout_residual".into(), json!(lay.max_residual));
                m.insert("tangency_residual".into(), json!(mid.tangency_residual));
                m.insert("incidence_residual".into(), json!(mid.incidence_residual));
            }
            Method::Tutte => {
                let rm = realize::realize_tutte(&map)?;
                write_out(
                    &out_path(&stem, "off"),
                    &formats::write_off_exact(&rm.vertices, map.faces()),
                    outputs,
                )?;
                write_out(
                    &out_path(&stem, "poly"),
                    &formats::write_polytope(&rm.polytope),
                    outputs,
                )?;
                let heights: Vec<&Rat> = rm.vertices.iter().map(|p| &p[2]).collect();
                let lo: &Rat = heights.iter().copied().min().expect("nonempty");
                let hi: &Rat = heights.iter().copied().max().expect("nonempty");
                m.insert(
                    "lift_height_range".into(),
                    json!([lo.to_string(), hi.to_string()]),
                );
                m.insert(
                    "lift_height_range_float".into(),
                    json!([rat::to_f64(lo), rat::to_f64(hi)]),
                );
            }
        }
        Ok(Value::Object(m))
    })
}

fn cmd_fvector(src: &str) -> Result<RunReport> {
    let ins = inputs([("expr", src.to_string())]);
    RunReport::run("fvector", ins, |_| {
        let t = expr::evaluate(src)?;
        let f = &t.f;
        let mut m = serde_json::Map::new();
        m.insert("f".into(), json!(big_strings(f)));
        m.insert("dim".into(), json!(f.dim()));
        m.insert("euler_ok".into(), json!(f.euler_ok()));
        m.insert("unimodal".into(), json!(fvector::is_unimodal(f)));
        m.insert("dips".into(), json!(fvector::dips(f)));
        m.insert(
            "bjorner_quarters".into(),
            json!(fvector::bjorner_quarters(f)),
        );
        m.insert("barany".into(), json!(fvector::barany_bound(f)));
        m.insert(
            "flags".into(),
            json!({
                "simplex": t.flags.simplex,
                "simplicial": t.flags.simplicial,
                "simple": t.flags.simple,
                "has_simplicial_facet": t.flags.has_simplicial_facet,
                "has_simple_vertex": t.flags.has_simple_vertex,
            }),
        );
        if f.dim() == 3 {
            if let Ok(phi) = fvector::slope_phi(f) {
                m.insert("slope_phi".into(), json!(phi.to_string()));
            }
            if let Ok(sigma) = fvector::imbalance_sigma(f) {
                m.insert("imbalance_sigma".into(), json!(sigma.to_string()));
            }
            let ints: Option<Vec<i64>> =
                f.entries().iter().map(|x| x.to_i64()).collect();
            if let Some(v) = ints {
                m.insert(
                    "steinitz_member".into(),
                    json!(fvector::steinitz_member(v[0], v[1], v[2])),
                );
            }
        }
        if f.dim() == 4 {
            if let Ok(s) = analysis4d::shape4(f, None) {
                m.insert("phi0".into(), json!(s.phi0.to_string()));
                m.insert("phi3".into(), json!(s.phi3.to_string()));
                m.insert("fatness".into(), json!(s.fatness.to_string()));
                m.insert("fatness_decimal".into(), json!(round3(&s.fatness)));
            }
        }
        Ok(Value::Object(m))
    })
}

fn cmd_construct(which: Which) -> Result<RunReport> {
    let (name, n, picker, out) = match which {
        Which::Hypersimplex { out } => ("hypersimplex", None, None, out),
        Which::Cell24 { out } => ("cell24", None, None, out),
        Which::Stack { n, picker, out } => ("stack", Some(n), Some(picker), out),
        Which::DvtStack { n, picker, out } => ("dvt-stack", Some(n), Some(picker), out),
    };
    let mut ins = inputs([("construction", name.to_string())]);
    if let Some(n) = n {
        ins.insert("n".into(), n.to_string());
    }
    if let Some(p) = picker {
        ins.insert(
            "picker".into(),
            match p {
                Picker::First => "first",
                Picker::Last => "last",
                Picker::Cycle => "cycle",
            }
            .to_string(),
        );
    }
    RunReport::run("construct", ins, |outputs| {
        let (poly, formula): (Polytope, Option<FVector>) = match name {
            "hypersimplex" => (construct4d::hypersimplex(), None),
            "cell24" => (construct4d::cell24(), None),
            "stack" => {
                let cs = construct4d::stacked_with_cuts(
                    n.unwrap(),
                    picker.unwrap().into(),
                )?;
                let base = fvector::f_simplex(4)?;
                let expected = fvector::f_stack(&base, &BigInt::from(n.unwrap()));
                (cs.poly, Some(expected))
            }
            "dvt-stack" => {
                let cs = construct4d::stacked_with_cuts(
                    n.unwrap(),
                    picker.unwrap().into(),
                )?;
                let poly = construct4d::dvt(&cs)?;
                (poly, Some(construct4d::dvt_stacked_f(n.unwrap())))
            }
            _ => unreachable!(),
        };
        let fd = construct4d::flag_data(&poly)?;
        let mut metrics = shape_json(&fd.f, Some(&fd.f03))?;
        if let Some(expected) = formula {
            let obj = metrics.as_object_mut().expect("object");
            obj.insert("formula_f".into(), json!(big_strings(&expected)));
            obj.insert("matches_formula".into(), json!(fd.f == expected));
        }
        if let Some(path) = &out {
            write_out(path, &formats::write_polytope(&poly), outputs)?;
        }
        Ok(metrics)
    })
}

fn cmd_analyze4d(target: &str) -> Result<RunReport> {
    let ins = inputs([("target", target.to_string())]);
    RunReport::run("analyze4d", ins, |_| {
        let (f, f03) = if Path::new(target).exists() {
            let text = fs::read_to_string(target)
                .with_context(|| format!("reading {target}"))?;
            let poly = formats::read_polytope(&text)?;
            if poly.dim() != 4 {
                bail!("analyze4d needs a 4-polytope, file has dimension {}", poly.dim());
            }
            let f = poly.f_vector()?;
            let lattice = poly.face_lattice()?;
            (f, lattice.incidence_count(0, 3))
        } else {
            let fd = analysis4d::named_flag_data(target).ok_or_else(|| {
                anyhow!(
                    "`{target}` is neither a file nor a known name \
                     (simplex, cube, cross, hypersimplex, 24-cell)"
                )
            })?;
            (fd.f.clone(), fd.f03.clone())
        };
        shape_json(&f, Some(&f03))
    })
}

fn cmd_deformed(r: usize, n: usize, project: bool, out: Option<PathBuf>) -> Result<RunReport> {
    let ins = inputs([
        ("r", r.to_string()),
        ("n", n.to_string()),
        ("project", project.to_string()),
    ]);
    RunReport::run("deformed-product", ins, |outputs| {
        let dp = deformed::deformed_product(r, n)?;
        let (product_ok, survival_ok) = dp.verify();
        let formula = deformed::f_projected_product(r, n);
        let mut m = serde_json::Map::new();
        m.insert("eps".into(), json!(dp.eps.to_string()));
        m.insert("scale".into(), json!(dp.scale.to_string()));
        m.insert("vertices".into(), json!(dp.vertices().len()));
        m.insert("product_verified".into(), json!(product_ok));
        m.insert("survival_verified".into(), json!(survival_ok));
        m.insert("f_projected_formula".into(), json!(big_strings(&formula)));
        if project {
            let poly = dp.projected()?;
            let f = poly.f_vector()?;
            let (cubes, prisms, other) = deformed::facet_census(&poly, n)?;
            m.insert("f_projected".into(), json!(big_strings(&f)));
            m.insert("matches_formula".into(), json!(f == formula));
            m.insert(
                "facet_census".into(),
                json!({"cubes": cubes, "prisms": prisms, "other": other}),
            );
            let lattice = poly.face_lattice()?;
            let f03 = lattice.incidence_count(0, 3);
            let shape = shape_json(&f, Some(&f03))?;
            m.insert("shape".into(), shape);
            if let Some(path) = &out {
                write_out(path, &formats::write_polytope(&poly), outputs)?;
            }
        }
        Ok(Value::Object(m))
    })
}
