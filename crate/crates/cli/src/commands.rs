use clap::ValueEnum;
use itertools::Itertools;

use ehrlatt_core::ehrhart::{
    check_constant_term, check_reciprocity, interpolate, surface_from_ehrhart, volume_from_ehrhart,
};
use ehrlatt_core::facets::{relative_facet_volume, surface_direct, volume_direct};
use ehrlatt_core::io::parse_vertex_file;
use ehrlatt_core::lattice::{count_triple, dilation_series};
use ehrlatt_core::linalg::format_rat;
use ehrlatt_core::reflexive::{
    dual_polytope, is_fano, is_reflexive, max_facet_height, reflexive_volume_formula,
};
use ehrlatt_core::surface::{build_system, closed_form_5_minus6, surface_closed_form, system_size};
use ehrlatt_core::{build_polytope, Int, Polytope, Rat, Result};

use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Det,
    Ehrhart,
    Direct,
    Closed,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Det => "det",
            Method::Ehrhart => "ehrhart",
            Method::Direct => "direct",
            Method::Closed => "closed",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Disagreement,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Disagreement => 1,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Report,
    pub status: Status,
}

impl From<Report> for Outcome {
    fn from(report: Report) -> Self {
        Outcome {
            report,
            status: Status::Ok,
        }
    }
}

const ERRATUM_NOTE: &str = "d = 5 closed form: the constant is +6; the variant with -6 \
     is off by one and is shown only for comparison";

fn load(text: &str, report: &mut Report, verbose: bool) -> Result<Polytope> {
    let (d, points) = parse_vertex_file(text)?;
    let p = build_polytope(&points, d)?;
    if !p.dropped_points().is_empty() {
        report.note(format!(
            "dropped {} non-extreme or repeated point(s): {}",
            p.dropped_points().len(),
            p.dropped_points().iter().join(" ")
        ));
    }
    report.set("d", d);
    report.set("vertices", p.vertices().len());
    report.set("facets", p.facets().len());
    if verbose {
        report.set("vertex_list", p.vertices().iter().join(" "));
        for (i, h) in p.facets().iter().enumerate() {
            report.set(format!("facet_{i}"), h);
        }
    }
    Ok(p)
}

fn r(x: &Rat) -> String {
    format_rat(x)
}

/// Total, interior and boundary lattice points of `kP`.
pub fn cmd_count(text: &str, k: u64, verbose: bool) -> Result<Outcome> {
    let mut report = Report::new("count", text);
    let p = load(text, &mut report, verbose)?;
    let c = count_triple(&p, k)?;
    report.set("k", k);
    report.set("total", &c.total);
    report.set("interior", &c.interior);
    report.set("boundary", &c.boundary);
    Ok(report.into())
}

fn surface_by(p: &Polytope, method: Method, report: &mut Report, verbose: bool) -> Result<Rat> {
    match method {
        Method::Det => {
            let d = p.dim();
            let series = dilation_series(p, system_size(d) as u64)?;
            let system = build_system(&series, d)?;
            if verbose {
                report.set("numerator_matrix", &system.numerator);
                report.set("numerator_det", system.numerator_det()?);
                report.set("denominator_matrix", &system.denominator);
                report.set("denominator_det", system.denominator_det()?);
            }
            system.surface()
        }
        Method::Ehrhart => Ok(surface_from_ehrhart(&interpolate(p)?)),
        Method::Direct => {
            if verbose {
                for (i, h) in p.facets().iter().enumerate() {
                    report.set(
                        format!("facet_{i}_volume"),
                        r(&relative_facet_volume(p, h)?),
                    );
                }
            }
            surface_direct(p)
        }
        Method::Closed => {
            if p.dim() == 5 {
                report.note(ERRATUM_NOTE);
            }
            surface_closed_form(p)
        }
    }
}

/// Lattice surface area by one method. `det` also reports both matrices and
/// their determinants.
pub fn cmd_surface(text: &str, method: Method, verbose: bool) -> Result<Outcome> {
    let mut report = Report::new("surface", text);
    let p = load(text, &mut report, verbose)?;
    report.set("method", method.name());
    let s = surface_by(&p, method, &mut report, verbose || method == Method::Det)?;
    report.set("surface", r(&s));
    Ok(report.into())
}

pub fn cmd_ehrhart(text: &str, verbose: bool) -> Result<Outcome> {
    let mut report = Report::new("ehrhart", text);
    let p = load(text, &mut report, verbose)?;
    let e = interpolate(&p)?;
    for (i, c) in e.coeffs().iter().enumerate() {
        report.set(format!("e_{i}"), r(c));
    }
    report.set("polynomial", &e);
    report.set("volume", r(&volume_from_ehrhart(&e)));
    report.set("surface", r(&surface_from_ehrhart(&e)));
    report.set("constant_term_is_one", check_constant_term(&e));
    let mut status = Status::Ok;
    for k in 1..=3 {
        let ok = check_reciprocity(&e, &p, k)?;
        if !ok {
            status = Status::Disagreement;
        }
        report.set(format!("reciprocity_k{k}"), ok);
    }
    Ok(Outcome { report, status })
}

/// Fano and reflexive status, the dual, and the volume identities. A
/// non-interior origin is reported, not raised.
pub fn cmd_reflexive(text: &str, verbose: bool) -> Result<Outcome> {
    let mut report = Report::new("reflexive", text);
    let p = load(text, &mut report, verbose)?;
    let d = Rat::from_integer(Int::from(p.dim()));
    report.set("origin_interior", p.origin_in_interior());
    report.set("fano", is_fano(&p));
    report.set("reflexive", is_reflexive(&p));
    match dual_polytope(&p) {
        Ok(dual) => {
            report.set("dual_is_lattice", dual.is_lattice);
            let verts = dual
                .vertices
                .iter()
                .map(|v| format!("({})", v.iter().map(r).join(", ")))
                .join(" ");
            report.set("dual_vertices", verts);
        }
        Err(e) => report.set("dual", format!("undefined ({e})")),
    }
    if let Some(h) = max_facet_height(&p) {
        report.set("max_facet_height", h);
    }
    let volume = volume_direct(&p)?;
    let surf_over_d = surface_direct(&p)? / &d;
    let identity = volume == surf_over_d;
    report.set("volume", r(&volume));
    report.set("surface_over_d", r(&surf_over_d));
    report.set("volume_equals_surface_over_d", identity);
    let formula = reflexive_volume_formula(&p)?;
    report.set("det_surface_over_d", r(&formula));
    report.set("det_surface_over_d_equals_volume", formula == volume);
    let mut status = Status::Ok;
    if is_fano(&p) {
        let consistent = identity == is_reflexive(&p);
        report.set("fano_identity_consistent", consistent);
        if !consistent {
            status = Status::Disagreement;
        }
    }
    Ok(Outcome { report, status })
}

/// Surface area by every applicable method. Disagreement sets
/// [`Status::Disagreement`] and lists the values that differ from `det`.
pub fn cmd_compare(text: &str, verbose: bool) -> Result<Outcome> {
    let mut report = Report::new("compare", text);
    let p = load(text, &mut report, verbose)?;
    let d = p.dim();
    let mut methods = vec![Method::Det, Method::Ehrhart, Method::Direct];
    if d <= 5 {
        methods.push(Method::Closed);
    }
    let mut values = Vec::new();
    for m in methods {
        let s = surface_by(&p, m, &mut report, verbose)?;
        report.set(m.name(), r(&s));
        values.push((m, s));
    }
    if d == 5 {
        let b1 = count_triple(&p, 1)?.boundary;
        let b2 = count_triple(&p, 2)?.boundary;
        let variant = closed_form_5_minus6(&b1, &b2);
        report.set("closed_minus6_variant", r(&variant));
        report.note(format!(
            "known erratum: the -6 variant gives {}, differing from det by {}",
            r(&variant),
            r(&(&variant - &values[0].1))
        ));
    }
    let reference = values[0].1.clone();
    let diffs: Vec<String> = values
        .iter()
        .filter(|(_, s)| *s != reference)
        .map(|(m, s)| format!("{} = {} but det = {}", m.name(), r(s), r(&reference)))
        .collect();
    let agree = diffs.is_empty();
    report.set("agree", agree);
    if !agree {
        for diff in diffs {
            report.note(format!("disagreement: {diff}"));
        }
        let e = interpolate(&p)?;
        let half = e.coeff(d - 1) / Rat::from_integer(Int::from(2));
        report.set("ehrhart_half_reading", r(&half));
        report.note("surface read as e_{d-1}/2 shown alongside 2 e_{d-1}");
    }
    Ok(Outcome {
        report,
        status: if agree {
            Status::Ok
        } else {
            Status::Disagreement
        },
    })
}
