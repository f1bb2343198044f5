//! File formats: sectioned polytope text, OFF meshes, circle-pattern SVG,
//! and adjacency-list graph files.

use anyhow::{bail, Context, Result};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use polylab::geometry::Polytope;
use polylab::packing::{Layout, Node, QuadPattern};
use polylab::planar::PlanarMap;
use polylab::rat::{self, Rat};

/// Decimal with three digits, rounded half away from zero.
pub fn round3(r: &Rat) -> String {
    let neg = r.is_negative();
    let a = if neg { -r.clone() } else { r.clone() };
    let i = (a * rat::int(1000) + rat::frac(1, 2)).floor().to_integer();
    let whole = &i / BigInt::from(1000);
    let frac = (&i % BigInt::from(1000)).to_u32().expect("three digits");
    format!("{}{whole}.{frac:03}", if neg { "-" } else { "" })
}

/// Serializes a polytope as homogeneous coordinate sections: `VERTICES`
/// rows are `1 x1 ... xd`, `FACETS` rows are `a0 a1 ... ad` meaning
/// `a0 + a1 x1 + ... + ad xd >= 0`.  Both blocks are canonically ordered
/// by the core library, so the output is byte-stable.
pub fn write_polytope(poly: &Polytope) -> String {
    let mut s = String::new();
    s.push_str("VERTICES\n");
    for v in poly.vertices() {
        s.push('1');
        for x in v {
            s.push(' ');
            s.push_str(&x.to_string());
        }
        s.push('\n');
    }
    s.push_str("\nFACETS\n");
    for row in poly.facets() {
        let mut first = true;
        for x in row {
            if !first {
                s.push(' ');
            }
            s.push_str(&x.to_string());
            first = false;
        }
        s.push('\n');
    }
    s
}

/// Reads a polytope from sectioned text.  `VERTICES`/`POINTS` rows take
/// priority (the hull of the dehomogenized points); otherwise
/// `FACETS`/`INEQUALITIES` rows are intersected.  Errors carry line numbers.
pub fn read_polytope(text: &str) -> Result<Polytope> {
    let mut vertices: Vec<Vec<Rat>> = Vec::new();
    let mut facets: Vec<Vec<Rat>> = Vec::new();
    let mut section: Option<&str> = None;
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match line {
            "VERTICES" | "POINTS" => {
                section = Some("V");
                continue;
            }
            "FACETS" | "INEQUALITIES" => {
                section = Some("F");
                continue;
            }
            _ => {}
        }
        if line.chars().next().is_some_and(|c| c.is_ascii_uppercase()) {
            section = None; // unknown section: skip its rows
            continue;
        }
        let Some(which) = section else { continue };
        let row: Vec<Rat> = line
            .split_whitespace()
            .map(|tok| {
                rat::parse(tok).with_context(|| format!("line {}: bad number `{tok}`", ln + 1))
            })
            .collect::<Result<_>>()?;
        if row.len() < 2 {
            bail!("line {}: row needs at least two entries", ln + 1);
        }
        if which == "V" {
            if row[0] != rat::int(1) {
                bail!("line {}: vertex row must start with 1", ln + 1);
            }
            vertices.push(row[1..].to_vec());
        } else {
            facets.push(row);
        }
    }
    if !vertices.is_empty() {
        Ok(Polytope::hull(&vertices)?)
    } else if !facets.is_empty() {
        Ok(Polytope::from_inequalities(&facets)?)
    } else {
        bail!("no VERTICES/POINTS or FACETS/INEQUALITIES section found");
    }
}

fn fmt_f64(x: f64) -> String {
    // fixed precision for byte-stable numeric output
    format!("{x:.12}")
}

/// Sectioned file with floating-point entries (fixed precision): `VERTICES`
/// rows `1 x y z`; `FACETS` rows `c -n1 -n2 -n3` encoding the half-space
/// `n . x <= c` as `c - n . x >= 0`.
pub fn write_polytope_f64(vertices: &[[f64; 3]], planes: &[[f64; 4]]) -> String {
    let mut s = String::from("VERTICES\n");
    for v in vertices {
        s.push_str(&format!(
            "1 {} {} {}\n",
            fmt_f64(v[0]),
            fmt_f64(v[1]),
            fmt_f64(v[2])
        ));
    }
    s.push_str("\nFACETS\n");
    for p in planes {
        s.push_str(&format!(
            "{} {} {} {}\n",
            fmt_f64(p[3]),
            fmt_f64(-p[0]),
            fmt_f64(-p[1]),
            fmt_f64(-p[2])
        ));
    }
    s
}

/// OFF mesh for a 3-polytope given by float vertices and facet cycles.
pub fn write_off(vertices: &[[f64; 3]], faces: &[Vec<usize>]) -> String {
    let edges: usize = faces.iter().map(|f| f.len()).sum::<usize>() / 2;
    let mut s = format!("OFF\n{} {} {}\n", vertices.len(), faces.len(), edges);
    for v in vertices {
        s.push_str(&format!(
            "{} {} {}\n",
            fmt_f64(v[0]),
            fmt_f64(v[1]),
            fmt_f64(v[2])
        ));
    }
    for f in faces {
        s.push_str(&f.len().to_string());
        for w in f {
            s.push(' ');
            s.push_str(&w.to_string());
        }
        s.push('\n');
    }
    s
}

/// OFF mesh from exact rational vertices (converted to floats on output).
pub fn write_off_exact(vertices: &[Vec<Rat>], faces: &[Vec<usize>]) -> String {
    let pts: Vec<[f64; 3]> = vertices
        .iter()
        .map(|v| [rat::to_f64(&v[0]), rat::to_f64(&v[1]), rat::to_f64(&v[2])])
        .collect();
    write_off(&pts, faces)
}

/// SVG drawing of a solved circle pattern: the bounding rectangle, vertex
/// circles solid, face circles dashed.
pub fn write_svg(pattern: &QuadPattern, layout: &Layout) -> String {
    let [x0, x1, y0, y1] = layout.rect;
    let w = x1 - x0;
    let h = y1 - y0;
    let margin = 0.05 * w.max(h);
    let mut s = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">\n",
        fmt_f64(x0 - margin),
        fmt_f64(y0 - margin),
        fmt_f64(w + 2.0 * margin),
        fmt_f64(h + 2.0 * margin)
    );
    let stroke = fmt_f64(0.004 * w.max(h));
    s.push_str(&format!(
        "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"{stroke}\"/>\n",
        fmt_f64(x0), fmt_f64(y0), fmt_f64(w), fmt_f64(h)
    ));
    for (i, node) in pattern.nodes.iter().enumerate() {
        let c = layout.centers[i];
        let r = layout.radii[i];
        let dash = match node {
            Node::Vertex(_) => "",
            Node::Face(_) => " stroke-dasharray=\"0.02 0.012\"",
        };
        s.push_str(&format!(
            "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"{stroke}\"{dash}/>\n",
            fmt_f64(c[0]), fmt_f64(c[1]), fmt_f64(r)
        ));
    }
    s.push_str("</svg>\n");
    s
}

/// Reads a planar map from adjacency-list text: line `i` lists the
/// neighbors of vertex `i` in cyclic (rotation) order; blank lines and
/// `#` comments are skipped.  Parse errors carry line numbers; structural
/// errors (connectivity, planarity) come from the map validator.
pub fn read_graph(text: &str) -> Result<PlanarMap> {
    let mut adj: Vec<Vec<usize>> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row: Vec<usize> = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .with_context(|| format!("line {}: bad vertex index `{tok}`", ln + 1))
            })
            .collect::<Result<_>>()?;
        adj.push(row);
    }
    PlanarMap::new(adj).context("graph text parsed, but the map is invalid")
}
