//! WebAssembly bindings for the browser demo. Every export takes the text of
//! a vertex file and returns a JSON string; the plain functions behind them
//! are ordinary Rust and tested natively.

use std::cmp::Ordering;

use ehrlatt_core::ehrhart::{interpolate, surface_from_ehrhart, volume_from_ehrhart};
use ehrlatt_core::facets::{surface_direct, volume_direct};
use ehrlatt_core::io::parse_vertex_file;
use ehrlatt_core::lattice::{count_triple, lattice_points as enumerate, PointClass};
use ehrlatt_core::linalg::format_rat;
use ehrlatt_core::reflexive::{is_fano, is_reflexive};
use ehrlatt_core::surface::surface_determinant;
use ehrlatt_core::{build_polytope, Int, Polytope};
use num_traits::ToPrimitive;
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest number of candidate points drawn in one picture.
pub const MAX_PICTURE_POINTS: u64 = 40_000;
pub const MAX_TABLE_K: u64 = 12;

#[derive(Debug, Serialize)]
pub struct Analysis {
    pub d: usize,
    pub vertices: Vec<String>,
    pub facets: Vec<String>,
    pub dropped: Vec<String>,
    pub total: String,
    pub interior: String,
    pub boundary: String,
    pub ehrhart: Vec<String>,
    pub polynomial: String,
    pub volume: String,
    pub surface_det: String,
    pub surface_ehrhart: String,
    pub surface_direct: String,
    pub agree: bool,
    pub fano: bool,
    pub reflexive: bool,
}

#[derive(Debug, Serialize)]
pub struct Dot {
    pub x: i64,
    pub y: i64,
    pub boundary: bool,
}

#[derive(Debug, Serialize)]
pub struct Picture {
    pub k: u64,
    /// Vertices of `kP` in counter-clockwise order.
    pub outline: Vec<[i64; 2]>,
    pub points: Vec<Dot>,
}

#[derive(Debug, Serialize)]
pub struct TableRow {
    pub k: u64,
    pub count: String,
    pub polynomial: String,
    pub interior: String,
    pub boundary: String,
    /// `E(-k)`, which should equal `(-1)^d` times the interior count.
    pub polynomial_at_minus_k: String,
}

fn load(text: &str) -> Result<Polytope, String> {
    let (d, points) = parse_vertex_file(text).map_err(|e| e.to_string())?;
    build_polytope(&points, d).map_err(|e| e.to_string())
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

fn small(x: &Int) -> Result<i64, String> {
    x.to_i64()
        .ok_or_else(|| format!("coordinate {x} too large to draw"))
}

pub fn analyze_json(text: &str) -> Result<String, String> {
    let p = load(text)?;
    let err = |e: ehrlatt_core::Error| e.to_string();
    let c = count_triple(&p, 1).map_err(err)?;
    let e = interpolate(&p).map_err(err)?;
    let det = surface_determinant(&p).map_err(err)?;
    let ehr = surface_from_ehrhart(&e);
    let direct = surface_direct(&p).map_err(err)?;
    let volume = volume_from_ehrhart(&e);
    debug_assert_eq!(volume, volume_direct(&p).unwrap());
    let analysis = Analysis {
        d: p.dim(),
        vertices: p.vertices().iter().map(ToString::to_string).collect(),
        facets: p.facets().iter().map(ToString::to_string).collect(),
        dropped: p.dropped_points().iter().map(ToString::to_string).collect(),
        total: c.total.to_string(),
        interior: c.interior.to_string(),
        boundary: c.boundary.to_string(),
        ehrhart: e.coeffs().iter().map(format_rat).collect(),
        polynomial: e.to_string(),
        volume: format_rat(&volume),
        agree: det == ehr && ehr == direct,
        surface_det: format_rat(&det),
        surface_ehrhart: format_rat(&ehr),
        surface_direct: format_rat(&direct),
        fano: is_fano(&p),
        reflexive: is_reflexive(&p),
    };
    Ok(json(&analysis))
}

/// Counter-clockwise order around the vertex sum, compared exactly.
fn counter_clockwise(points: &mut [[i64; 2]]) {
    let n = points.len() as i64;
    let (sx, sy) = points.iter().fold((0, 0), |(a, b), p| (a + p[0], b + p[1]));
    let rel = |p: &[i64; 2]| (p[0] * n - sx, p[1] * n - sy);
    let upper = |(x, y): (i64, i64)| y > 0 || (y == 0 && x > 0);
    points.sort_by(|a, b| {
        let (ra, rb) = (rel(a), rel(b));
        match (upper(ra), upper(rb)) {
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            _ => 0.cmp(&(ra.0 * rb.1 - ra.1 * rb.0)),
        }
    });
}

pub fn lattice_points_json(text: &str, k: u64) -> Result<String, String> {
    let p = load(text)?;
    if p.dim() != 2 {
        return Err(format!(
            "pictures need a polygon, got dimension {}",
            p.dim()
        ));
    }
    let kp = p.dilate(k).map_err(|e| e.to_string())?;
    let (lo, hi) = kp.bounding_box();
    let span = (0..2).try_fold(1u64, |acc, i| {
        let w = (&hi[i] - &lo[i] + 1u32).to_u64()?;
        acc.checked_mul(w)
    });
    match span {
        Some(s) if s <= MAX_PICTURE_POINTS => {}
        _ => {
            return Err(format!(
                "kP is too large to draw (limit {MAX_PICTURE_POINTS} points)"
            ))
        }
    }
    let mut outline = kp
        .vertices()
        .iter()
        .map(|v| Ok([small(&v[0])?, small(&v[1])?]))
        .collect::<Result<Vec<_>, String>>()?;
    counter_clockwise(&mut outline);
    let points = enumerate(&kp)
        .into_iter()
        .map(|(q, class)| {
            Ok(Dot {
                x: small(&q[0])?,
                y: small(&q[1])?,
                boundary: class == PointClass::Boundary,
            })
        })
        .collect::<Result<Vec<_>, String>>()?;
    Ok(json(&Picture { k, outline, points }))
}

pub fn ehrhart_table_json(text: &str, kmax: u64) -> Result<String, String> {
    let p = load(text)?;
    if kmax == 0 || kmax > MAX_TABLE_K {
        return Err(format!("kmax must be between 1 and {MAX_TABLE_K}"));
    }
    let e = interpolate(&p).map_err(|e| e.to_string())?;
    let rows = (1..=kmax)
        .map(|k| {
            let c = count_triple(&p, k).map_err(|e| e.to_string())?;
            let kk = Int::from(k);
            Ok(TableRow {
                k,
                count: c.total.to_string(),
                polynomial: format_rat(&e.eval(&kk)),
                interior: c.interior.to_string(),
                boundary: c.boundary.to_string(),
                polynomial_at_minus_k: format_rat(&e.eval(&-kk)),
            })
        })
        .collect::<Result<Vec<_>, String>>()?;
    Ok(json(&rows))
}

#[wasm_bindgen]
pub fn analyze(text: &str) -> Result<String, JsValue> {
    analyze_json(text).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn lattice_points(text: &str, k: u32) -> Result<String, JsValue> {
    lattice_points_json(text, k.into()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn ehrhart_table(text: &str, kmax: u32) -> Result<String, JsValue> {
    ehrhart_table_json(text, kmax.into()).map_err(|e| JsValue::from_str(&e))
}
