//! Whole-workspace verification gate: ten numbered checks covering exact
//! f-vector identities, realization corpora, the 4-dimensional
//! constructions, and analytic property suites.  Each check prints one
//! pass/fail line with its runtime; the test fails if any check fails or
//! overruns its time budget.

use num_bigint::BigInt;
use polylab::analysis4d;
use polylab::construct4d::{self, FacetPicker};
use polylab::deformed;
use polylab::fvector::{self, FVector};
use polylab::geometry::equiv::combinatorially_equivalent;
use polylab::geometry::Polytope;
use polylab::packing::{self, QuadPattern};
use polylab::planar::{platonic_maps, random_map, PlanarMap};
use polylab::rat::{self, Rat};
use polylab::realize;
use polylab_cli::{expr, formats};
use std::collections::BTreeSet;
use std::time::Instant;

type Check = Result<(), String>;

macro_rules! expect {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err(format!($($arg)+));
        }
    };
}

/// State carried between checks so later ones can audit earlier results.
#[derive(Default)]
struct Shared {
    /// Every f-vector produced anywhere in the gate.
    produced: Vec<FVector>,
    /// Realization corpus: the five degree-regular sphere maps plus twenty
    /// pseudorandom 3-connected maps.
    corpus: Vec<(String, PlanarMap)>,
    /// `(vertices, edges, faces)` of every realized 3-polytope.
    realized_f: Vec<(i64, i64, i64)>,
    /// The projected product of two squares, kept for reuse.
    square_product: Option<Polytope>,
}

// ---------------------------------------------------------------- checks

/// Gluing two truncated/dualized cyclic 8-polytopes hits a known
/// centrally symmetric f-vector exactly.
fn glued_cyclic_vector(sh: &mut Shared) -> Check {
    let got = expr::evaluate("glue(cyclic(8,25), truncv(dual(cyclic(8,25))))")
        .map_err(|e| e.to_string())?;
    let want = FVector::from_ints(&[7149, 28800, 46800, 46400, 46400, 46800, 28800, 7149])
        .map_err(|e| e.to_string())?;
    expect!(
        got.f == want,
        "glued vector differs: {:?}",
        got.f.entries()
    );
    sh.produced.push(got.f);
    Ok(())
}

/// Stacking 2.59e13 times onto C_20(200) drives an interior dip into the
/// middle of the f-vector; the three affected entries are exact.
fn big_stack_dip(sh: &mut Shared) -> Check {
    let got = expr::evaluate("stack(cyclic(20,200), 25900000000000)").map_err(|e| e.to_string())?;
    let want: [(usize, &str); 3] = [
        (11, "5049794068451336750"),
        (12, "5043828885028647000"),
        (13, "5045792044986529500"),
    ];
    for (k, s) in want {
        let w: BigInt = s.parse().expect("literal integer");
        expect!(got.f.entry(k) == &w, "f_{k} = {}, want {w}", got.f.entry(k));
    }
    expect!(!fvector::is_unimodal(&got.f), "the stacked vector should dip");
    expect!(
        fvector::dips(&got.f) == vec![12],
        "dips at {:?}",
        fvector::dips(&got.f)
    );
    expect!(
        fvector::bjorner_quarters(&got.f),
        "quartile bounds should hold"
    );
    expect!(fvector::barany_bound(&got.f), "entry lower bound should hold");
    sh.produced.push(got.f);
    Ok(())
}

/// The closed-form cyclic f-vector agrees with explicit facet enumeration
/// (evenness criterion) across dimensions, and with the textbook
/// d = 4 formulas.
fn cyclic_cross_validation(sh: &mut Shared) -> Check {
    for d in 4..=8usize {
        for n in (d + 1)..=12 {
            let closed = fvector::f_cyclic(d, n).map_err(|e| e.to_string())?;
            let facets = fvector::gale_facets(d, n).map_err(|e| e.to_string())?;
            let enumerated =
                fvector::faces_by_enumeration(&facets, d).map_err(|e| e.to_string())?;
            expect!(
                closed == enumerated,
                "cyclic({d},{n}): closed {:?} vs enumerated {:?}",
                closed.entries(),
                enumerated.entries()
            );
            sh.produced.push(closed);
        }
    }
    for n in 5..=50i64 {
        let closed = fvector::f_cyclic(4, n as usize).map_err(|e| e.to_string())?;
        let want = FVector::from_ints(&[n, n * (n - 1) / 2, n * (n - 3), n * (n - 3) / 2])
            .map_err(|e| e.to_string())?;
        expect!(closed == want, "cyclic(4,{n}) closed form");
    }
    Ok(())
}

/// Midsphere realization succeeds on the whole corpus: tiny solver
/// gradient, edges tangent to the unit sphere, and the supporting-plane
/// incidence structure reproducing the input map exactly.
fn midsphere_corpus(sh: &mut Shared) -> Check {
    let mut corpus: Vec<(String, PlanarMap)> = platonic_maps()
        .into_iter()
        .map(|(n, m)| (n.to_string(), m))
        .collect();
    for seed in 1..=20u64 {
        corpus.push((format!("random-{seed}"), random_map(seed, 14)));
    }

    for (name, map) in &corpus {
        let mid = realize::realize_steinitz(map).map_err(|e| format!("{name}: {e}"))?;
        expect!(
            mid.gradient_norm <= 1e-12,
            "{name}: gradient norm {:e}",
            mid.gradient_norm
        );
        expect!(
            mid.tangency_residual <= 1e-7,
            "{name}: tangency residual {:e}",
            mid.tangency_residual
        );

        // independent incidence audit: members on the plane, all other
        // vertices strictly beneath it
        let scale = mid
            .vertices
            .iter()
            .map(|p| (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt())
            .fold(1.0f64, f64::max);
        for (fi, cycle) in map.faces().iter().enumerate() {
            let pl = mid.planes[fi];
            let members: BTreeSet<usize> = cycle.iter().copied().collect();
            for (w, p) in mid.vertices.iter().enumerate() {
                let e = pl[0] * p[0] + pl[1] * p[1] + pl[2] * p[2] - pl[3];
                if members.contains(&w) {
                    expect!(
                        e.abs() <= 1e-7 * scale,
                        "{name}: vertex {w} off facet {fi} by {e:e}"
                    );
                } else {
                    expect!(e < 0.0, "{name}: vertex {w} not beneath facet {fi}");
                }
            }
        }
        sh.realized_f.push((
            map.num_vertices() as i64,
            map.edges().len() as i64,
            map.faces().len() as i64,
        ));
    }
    sh.corpus = corpus;
    Ok(())
}

/// On every corpus map with a triangular face, the exact spring-lift
/// realization carries the same facet structure as the map, hence the
/// same combinatorics as the circle-packing realization audited above.
fn spring_lift_agreement(sh: &mut Shared) -> Check {
    let mut tested = 0usize;
    for (name, map) in &sh.corpus {
        if !map.faces().iter().any(|c| c.len() == 3) {
            continue;
        }
        tested += 1;
        let rm = realize::realize_tutte(map).map_err(|e| format!("{name}: {e}"))?;
        let mut pos = std::collections::BTreeMap::new();
        for (w, v) in rm.vertices.iter().enumerate() {
            pos.insert(v.clone(), w);
        }
        let mut got: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        for s in rm.polytope.facet_vertex_sets() {
            let mut t = BTreeSet::new();
            for &i in s {
                let w = pos
                    .get(&rm.polytope.vertices()[i])
                    .copied()
                    .ok_or_else(|| format!("{name}: hull vertex is not a map vertex"))?;
                t.insert(w);
            }
            got.insert(t);
        }
        let want: BTreeSet<BTreeSet<usize>> = map
            .faces()
            .iter()
            .map(|c| c.iter().copied().collect())
            .collect();
        expect!(got == want, "{name}: facet sets differ from the map");
    }
    expect!(tested >= 6, "only {tested} corpus maps have a triangle");
    Ok(())
}

/// Deep vertex truncation of stacked 4-polytopes: exact build for
/// n = 0..5 plus three stacking sequences at n = 5, matching the closed
/// form, 2-simplicial 2-simple, tight flag bound, fatness in [4, 4.5).
fn deep_truncation_suite(sh: &mut Shared) -> Check {
    let mut suite: Vec<(usize, FacetPicker)> =
        (0..=5).map(|n| (n, FacetPicker::Cycle)).collect();
    suite.push((5, FacetPicker::First));
    suite.push((5, FacetPicker::Last));
    for (n, picker) in suite {
        let tag = format!("n={n} {picker:?}");
        let cs = construct4d::stacked_with_cuts(n, picker).map_err(|e| format!("{tag}: {e}"))?;
        let poly = construct4d::dvt(&cs).map_err(|e| format!("{tag}: {e}"))?;
        let fd = construct4d::flag_data(&poly).map_err(|e| format!("{tag}: {e}"))?;
        let k = n as i64;
        let closed =
            FVector::from_ints(&[10 + 4 * k, 30 + 18 * k, 30 + 18 * k, 10 + 4 * k])
                .map_err(|e| e.to_string())?;
        expect!(
            fd.f == closed && fd.f == construct4d::dvt_stacked_f(n),
            "{tag}: f = {:?}",
            fd.f.entries()
        );
        expect!(
            fd.two_simplicial() && fd.two_simple(),
            "{tag}: not 2-simplicial 2-simple"
        );
        let (holds, tight) = analysis4d::flag_lower_bound(&fd);
        expect!(holds && tight, "{tag}: flag bound holds={holds} tight={tight}");
        let s = analysis4d::shape4(&fd.f, Some(&fd.f03)).map_err(|e| e.to_string())?;
        expect!(
            s.fatness >= rat::int(4) && s.fatness < rat::frac(9, 2),
            "{tag}: fatness {}",
            s.fatness
        );
        sh.produced.push(fd.f);
    }
    Ok(())
}

/// Named reference polytopes: hypersimplex and 24-cell shapes, and the
/// octahedron arising as the midpoint vertex truncation of a simplex.
fn named_polytopes(sh: &mut Shared) -> Check {
    let hs = analysis4d::named_flag_data("hypersimplex").ok_or("missing hypersimplex data")?;
    let want_hs = FVector::from_ints(&[10, 30, 30, 10]).map_err(|e| e.to_string())?;
    expect!(hs.f == want_hs, "hypersimplex f = {:?}", hs.f.entries());
    let s = analysis4d::shape4(&hs.f, Some(&hs.f03)).map_err(|e| e.to_string())?;
    expect!(
        s.phi0 == rat::frac(1, 8) && s.phi3 == rat::frac(1, 8),
        "hypersimplex phi = ({}, {})",
        s.phi0,
        s.phi3
    );
    expect!(s.fatness == rat::int(4), "hypersimplex fatness {}", s.fatness);
    let built = construct4d::flag_data(&construct4d::hypersimplex()).map_err(|e| e.to_string())?;
    expect!(
        built.f == hs.f && built.f03 == hs.f03,
        "constructed hypersimplex disagrees with the table"
    );

    let c24 = analysis4d::named_flag_data("24-cell").ok_or("missing 24-cell data")?;
    let want_24 = FVector::from_ints(&[24, 96, 96, 24]).map_err(|e| e.to_string())?;
    expect!(c24.f == want_24, "24-cell f = {:?}", c24.f.entries());
    let s24 = analysis4d::shape4(&c24.f, Some(&c24.f03)).map_err(|e| e.to_string())?;
    expect!(s24.fatness == rat::frac(86, 19), "24-cell fatness {}", s24.fatness);
    expect!(
        formats::round3(&s24.fatness) == "4.526",
        "24-cell fatness prints {}",
        formats::round3(&s24.fatness)
    );
    let built24 = construct4d::flag_data(&construct4d::cell24()).map_err(|e| e.to_string())?;
    expect!(
        built24.f == c24.f && built24.f03 == c24.f03,
        "constructed 24-cell disagrees with the table"
    );

    let oct = construct4d::dvt_at_midpoints(&construct4d::simplex(3)).map_err(|e| e.to_string())?;
    expect!(
        combinatorially_equivalent(&oct, &construct4d::cross_polytope(3)),
        "midpoint truncation of the 3-simplex is not an octahedron"
    );

    sh.produced.push(hs.f);
    sh.produced.push(c24.f);
    Ok(())
}

/// Deformed products of polygons: both exact verifiers pass, projections
/// match the closed-form f-vector, and two squares project to the 4-cube.
fn deformed_products(sh: &mut Shared) -> Check {
    for (r, n) in [(2usize, 4usize), (3, 4), (3, 6), (4, 4)] {
        let dp = deformed::deformed_product(r, n).map_err(|e| format!("({r},{n}): {e}"))?;
        let (product_ok, survival_ok) = dp.verify();
        expect!(
            product_ok && survival_ok,
            "({r},{n}): product {product_ok}, survival {survival_ok}"
        );
        let proj = dp.projected().map_err(|e| format!("({r},{n}): {e}"))?;
        let f = proj.f_vector().map_err(|e| e.to_string())?;
        let formula = deformed::f_projected_product(r, n);
        expect!(
            f == formula,
            "({r},{n}): projection f {:?} vs formula {:?}",
            f.entries(),
            formula.entries()
        );
        if (r, n) == (2, 4) {
            let corners: Vec<Vec<Rat>> = (0..16u32)
                .map(|m| (0..4).map(|b| rat::int(i64::from((m >> b) & 1))).collect())
                .collect();
            let cube = Polytope::hull(&corners).map_err(|e| e.to_string())?;
            expect!(
                combinatorially_equivalent(&proj, &cube),
                "(2,4) projection is not the 4-cube"
            );
            sh.square_product = Some(proj.clone());
        }
        sh.produced.push(f);
    }
    Ok(())
}

/// Cross-cutting property suites over everything built so far.
fn property_suites(sh: &mut Shared) -> Check {
    // Euler-Poincare for every f-vector produced by any check
    for f in &sh.produced {
        expect!(f.euler_ok(), "Euler fails for {:?}", f.entries());
    }
    // and for face lattices of two polytopes kept around
    let hsp = construct4d::hypersimplex();
    let lf = hsp
        .face_lattice()
        .and_then(|l| l.f_vector())
        .map_err(|e| e.to_string())?;
    expect!(
        lf == hsp.f_vector().map_err(|e| e.to_string())? && lf.euler_ok(),
        "hypersimplex lattice disagrees with its face counts"
    );
    let sq = sh.square_product.as_ref().ok_or("square product missing")?;
    let lf2 = sq
        .face_lattice()
        .and_then(|l| l.f_vector())
        .map_err(|e| e.to_string())?;
    expect!(
        lf2 == sq.f_vector().map_err(|e| e.to_string())?,
        "square-product lattice disagrees with its face counts"
    );

    // hull <-> inequality round trip on assorted polytopes
    let round_trip: Vec<(&str, Polytope)> = vec![
        ("simplex", construct4d::simplex(4)),
        ("octahedron", construct4d::cross_polytope(3)),
        ("hypersimplex", hsp),
        ("square-product", sq.clone()),
    ];
    for (name, p) in &round_trip {
        let q = Polytope::from_inequalities(p.facets()).map_err(|e| format!("{name}: {e}"))?;
        expect!(
            q.vertices() == p.vertices(),
            "{name}: vertex enumeration changed the vertex set"
        );
        let h = Polytope::hull(p.vertices()).map_err(|e| format!("{name}: {e}"))?;
        expect!(
            h.vertices() == p.vertices() && h.facets() == p.facets(),
            "{name}: hull round trip changed the polytope"
        );
    }

    // duality reverses f-vectors: polar of a product is the free sum of
    // the polars, and the cube/cross pair are polar duals
    let pairs = [
        ("cyclic4x7-cube3", fvector::f_cyclic(4, 7), fvector::f_cube(3)),
        ("simplex3-cross4", fvector::f_simplex(3), fvector::f_cross(4)),
        ("square-square", fvector::f_cube(2), fvector::f_cube(2)),
    ];
    for (name, x, y) in pairs {
        let x = x.map_err(|e| e.to_string())?;
        let y = y.map_err(|e| e.to_string())?;
        let lhs = fvector::f_free_sum(&x.reversed(), &y.reversed());
        let rhs = fvector::f_product(&x, &y).reversed();
        expect!(lhs == rhs, "{name}: free sum of polars is not the polar product");
    }
    for d in 2..=6usize {
        let cross = fvector::f_cross(d).map_err(|e| e.to_string())?;
        let cube = fvector::f_cube(d).map_err(|e| e.to_string())?;
        expect!(cross == cube.reversed(), "cross({d}) is not the reversed cube({d})");
    }

    // every realized 3-polytope count sits in the Steinitz region
    for &(v, e, f) in &sh.realized_f {
        expect!(v - e + f == 2, "({v},{e},{f}) fails Euler");
        expect!(
            fvector::steinitz_member(v, e, f),
            "({v},{e},{f}) outside the Steinitz region"
        );
    }

    // fatness is invariant under f-vector reversal; shape coordinates are
    // undefined exactly when they are undefined for the reversal too
    for f in sh.produced.iter().filter(|f| f.dim() == 4) {
        match (
            analysis4d::shape4(f, None),
            analysis4d::shape4(&f.reversed(), None),
        ) {
            (Ok(a), Ok(b)) => expect!(
                a.fatness == b.fatness,
                "fatness changes under reversal for {:?}",
                f.entries()
            ),
            (Err(_), Err(_)) => {}
            _ => expect!(false, "shape defined on only one side for {:?}", f.entries()),
        }
    }

    // the radius-solver gradient matches central finite differences of
    // the energy
    for name in ["cube", "dodecahedron"] {
        let map = platonic_maps()
            .into_iter()
            .find(|(n, _)| *n == name)
            .expect("known map")
            .1;
        let (u, v) = map.edges()[0];
        let p = QuadPattern::build(&map, u, v).map_err(|e| e.to_string())?;
        let mut rho = packing::solve_radii(&p).map_err(|e| e.to_string())?;
        for (i, x) in rho.iter_mut().enumerate() {
            *x += 0.15 * (1.0 + i as f64).sin();
        }
        let g = packing::bs_gradient(&p, &rho);
        let h = 1e-4;
        for i in 0..rho.len() {
            let mut hi = rho.clone();
            hi[i] += h;
            let mut lo = rho.clone();
            lo[i] -= h;
            let fd = (packing::bs_energy(&p, &hi) - packing::bs_energy(&p, &lo)) / (2.0 * h);
            let denom = g[i].abs().max(1.0);
            expect!(
                (fd - g[i]).abs() <= 1e-6 * denom,
                "{name} coordinate {i}: finite difference {fd} vs gradient {}",
                g[i]
            );
        }
    }
    Ok(())
}

/// Projected-product fatness grows with the number of polygon factors and
/// crosses 8 inside the search box, evaluated on the closed form only.
fn fatness_trend(_sh: &mut Shared) -> Check {
    let mut best: Option<Rat> = None;
    for n in [4usize, 8, 16, 32, 64] {
        let mut prev: Option<Rat> = None;
        for r in 2..=40usize {
            let f = deformed::f_projected_product(r, n);
            let fat = analysis4d::shape4(&f, None)
                .map_err(|e| e.to_string())?
                .fatness;
            if let Some(p) = &prev {
                expect!(&fat > p, "fatness not increasing at r={r}, n={n}");
            }
            prev = Some(fat.clone());
            if best.as_ref().map_or(true, |b| &fat > b) {
                best = Some(fat);
            }
        }
    }
    let best = best.expect("nonempty search box");
    expect!(
        best > rat::int(8),
        "max fatness {} never exceeds 8",
        rat::to_f64(&best)
    );
    Ok(())
}

// ---------------------------------------------------------------- driver

#[test]
fn acceptance_gate() {
    type Body = fn(&mut Shared) -> Check;
    // (label, time budget in seconds, check)
    let checks: [(&str, Option<f64>, Body); 10] = [
        ("glued-cyclic-vector", Some(1.0), glued_cyclic_vector),
        ("big-stack-dip", Some(1.0), big_stack_dip),
        ("cyclic-cross-validation", Some(10.0), cyclic_cross_validation),
        ("midsphere-corpus", Some(30.0), midsphere_corpus),
        ("spring-lift-agreement", None, spring_lift_agreement),
        ("deep-truncation-suite", Some(60.0), deep_truncation_suite),
        ("named-polytopes", None, named_polytopes),
        ("deformed-products", Some(300.0), deformed_products),
        ("property-suites", None, property_suites),
        ("fatness-trend", Some(1.0), fatness_trend),
    ];

    let mut shared = Shared::default();
    let mut failures = Vec::new();
    for (i, (name, budget, body)) in checks.into_iter().enumerate() {
        let t0 = Instant::now();
        let result = body(&mut shared);
        let dt = t0.elapsed().as_secs_f64();
        let verdict = match (&result, budget) {
            (Err(e), _) => format!("FAIL  ({e})"),
            (Ok(()), Some(b)) if dt > b => format!("FAIL  (took {dt:.2}s, budget {b:.0}s)"),
            (Ok(()), _) => "pass".to_string(),
        };
        println!("acceptance {:>2}  {name:<26} {verdict}  [{dt:.2}s]", i + 1);
        if verdict.starts_with("FAIL") {
            failures.push(format!("check {} {name}: {verdict}", i + 1));
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}
