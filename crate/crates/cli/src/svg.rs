//! Deterministic SVG rendering of a rank-2 chamber decomposition.
//!
//! Cones are clipped against a fixed viewport square with exact rational
//! arithmetic, so the output is byte-identical across runs for identical
//! input: same polygons, same ordering, same formatting.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use secfan_core::gitfan::enumerate_chambers;
use secfan_core::{DegreeMatrix, QCone};

const SIZE: f64 = 640.0;
const CENTER: f64 = 320.0;
const SCALE: f64 = 260.0;

const PALETTE: [&str; 8] = [
    "#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1", "#76b7b2", "#edc948", "#ff9da7",
];

type Point = (BigRational, BigRational);

fn rat(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

fn unit_box() -> Vec<Point> {
    vec![
        (rat(-1), rat(-1)),
        (rat(1), rat(-1)),
        (rat(1), rat(1)),
        (rat(-1), rat(1)),
    ]
}

/// Sutherland-Hodgman clip of a convex polygon by `<n, p> >= 0`.
fn clip_halfplane(poly: &[Point], n: &[BigInt]) -> Vec<Point> {
    let val = |p: &Point| -> BigRational {
        BigRational::from(n[0].clone()) * &p.0 + BigRational::from(n[1].clone()) * &p.1
    };
    let mut out: Vec<Point> = Vec::new();
    for i in 0..poly.len() {
        let p = &poly[i];
        let q = &poly[(i + 1) % poly.len()];
        let vp = val(p);
        let vq = val(q);
        if !vp.is_negative() {
            out.push(p.clone());
        }
        if (vp.is_negative() && vq.is_positive()) || (vp.is_positive() && vq.is_negative()) {
            // intersection point p + t (q - p) with t = vp / (vp - vq)
            let t = &vp / (&vp - &vq);
            let x = &p.0 + &t * (&q.0 - &p.0);
            let y = &p.1 + &t * (&q.1 - &p.1);
            out.push((x, y));
        }
    }
    out.dedup();
    if out.len() > 1 && out.first() == out.last() {
        out.pop();
    }
    out
}

fn clip_cone_to_box(cone: &QCone) -> Vec<Point> {
    let mut poly = unit_box();
    for n in cone.inequalities() {
        poly = clip_halfplane(&poly, n);
        if poly.is_empty() {
            break;
        }
    }
    poly
}

fn to_svg_coords(p: &Point) -> (f64, f64) {
    let x = CENTER + SCALE * p.0.to_f64().unwrap_or(0.0);
    let y = CENTER - SCALE * p.1.to_f64().unwrap_or(0.0);
    (x, y)
}

fn polygon_points(poly: &[Point]) -> String {
    poly.iter()
        .map(|p| {
            let (x, y) = to_svg_coords(p);
            format!("{x:.2},{y:.2}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Endpoint of a ray direction on the unit box boundary.
fn ray_endpoint(dir: &[BigInt]) -> Point {
    let m = dir[0].abs().max(dir[1].abs());
    (
        BigRational::new(dir[0].clone(), m.clone()),
        BigRational::new(dir[1].clone(), m),
    )
}

fn line_to(out: &mut String, from: (f64, f64), to: (f64, f64), style: &str) {
    out.push_str(&format!(
        "  <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" {style}/>\n",
        from.0, from.1, to.0, to.1
    ));
}

/// Renders weight space, basis weight cones, chambers and their walls.
/// The grading must have rank 2.
pub fn render_chamber_plot(g: &DegreeMatrix) -> Result<String, secfan_core::Error> {
    assert_eq!(g.rank(), 2, "caller checks the rank");
    let chambers = enumerate_chambers(g)?;
    let origin = (CENTER, CENTER);

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" \
         viewBox=\"0 0 {SIZE} {SIZE}\">\n"
    ));
    out.push_str(&format!(
        "  <rect x=\"0\" y=\"0\" width=\"{SIZE}\" height=\"{SIZE}\" fill=\"#ffffff\"/>\n"
    ));

    // shaded chambers, in canonical order
    for (i, c) in chambers.iter().enumerate() {
        let poly = clip_cone_to_box(&c.cone);
        if poly.len() >= 3 {
            out.push_str(&format!(
                "  <polygon points=\"{}\" fill=\"{}\" fill-opacity=\"0.45\" stroke=\"none\"/>\n",
                polygon_points(&poly),
                PALETTE[i % PALETTE.len()]
            ));
        }
    }

    // outlines of the basis weight cones
    for b in g.monomic_relevant_generators() {
        let poly = clip_cone_to_box(&g.weight_cone(&b));
        if poly.len() >= 3 {
            out.push_str(&format!(
                "  <polygon points=\"{}\" fill=\"none\" stroke=\"#9a9a9a\" \
                 stroke-width=\"0.8\" stroke-dasharray=\"5,4\"/>\n",
                polygon_points(&poly)
            ));
        }
    }

    // chamber walls: every extreme ray of every chamber
    let mut wall_dirs: Vec<Vec<BigInt>> = Vec::new();
    for c in &chambers {
        for r in c.cone.rays() {
            if !wall_dirs.contains(r) {
                wall_dirs.push(r.clone());
            }
        }
    }
    wall_dirs.sort();
    for dir in &wall_dirs {
        let end = to_svg_coords(&ray_endpoint(dir));
        line_to(
            &mut out,
            origin,
            end,
            "stroke=\"#333333\" stroke-width=\"1.6\"",
        );
    }

    // degree vectors of the variables
    let mut deg_dirs: Vec<Vec<BigInt>> = Vec::new();
    for d in g.degrees() {
        if d.free_part().iter().all(Zero::is_zero) {
            continue;
        }
        if !deg_dirs.contains(&d.free_part().to_vec()) {
            deg_dirs.push(d.free_part().to_vec());
        }
    }
    deg_dirs.sort();
    for dir in &deg_dirs {
        let end = to_svg_coords(&ray_endpoint(dir));
        line_to(
            &mut out,
            origin,
            end,
            "stroke=\"#b04030\" stroke-width=\"1.0\" stroke-dasharray=\"2,3\"",
        );
    }

    // chamber labels at scaled sample points
    for (i, c) in chambers.iter().enumerate() {
        let s = c.sample_point.free_part();
        let m = s
            .iter()
            .map(|x| x.abs())
            .max()
            .unwrap_or_else(BigInt::zero);
        if m.is_zero() {
            continue;
        }
        let pos = (
            BigRational::new(s[0].clone() * BigInt::from(11), m.clone() * BigInt::from(20)),
            BigRational::new(s[1].clone() * BigInt::from(11), m * BigInt::from(20)),
        );
        let (x, y) = to_svg_coords(&pos);
        out.push_str(&format!(
            "  <text x=\"{x:.2}\" y=\"{y:.2}\" font-family=\"monospace\" font-size=\"18\" \
             text-anchor=\"middle\" fill=\"#111111\">C{i}</text>\n"
        ));
    }

    out.push_str("</svg>\n");
    Ok(out)
}
