//! Acceptance suite: one PASS/FAIL line per criterion, all checks exact.
//! Run with `cargo test -p ehrlatt-cli --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use ehrlatt_cli::{cmd_compare, Status};
use ehrlatt_core::corpus::{self, CorpusEntry};
use ehrlatt_core::ehrhart::{
    check_constant_term, check_reciprocity, interpolate, surface_from_ehrhart, volume_from_ehrhart,
};
use ehrlatt_core::facets::{surface_direct, volume_direct};
use ehrlatt_core::io::write_vertex_file;
use ehrlatt_core::lattice::{count_points, count_triple};
use ehrlatt_core::reflexive::is_reflexive;
use ehrlatt_core::surface::{
    closed_form_5, closed_form_5_minus6, pick_area, surface_closed_form, surface_determinant,
};
use ehrlatt_core::{Int, Rat};

const SEED: u64 = 20_240_917;
const RANDOM_PER_DIM: usize = 50;

type Check = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn random_members() -> Vec<CorpusEntry> {
    (2..=4)
        .flat_map(|d| corpus::random_corpus(d, RANDOM_PER_DIM, SEED))
        .collect()
}

fn everything() -> Vec<CorpusEntry> {
    let mut all = corpus::standard_corpus();
    all.extend(random_members());
    all
}

fn triangle_identity(all: &[CorpusEntry]) -> Check {
    for e in all {
        let p = &e.polytope;
        let det = surface_determinant(p).map_err(|x| format!("{}: {x}", e.name))?;
        let ehr = surface_from_ehrhart(&interpolate(p).map_err(|x| x.to_string())?);
        let direct = surface_direct(p).map_err(|x| x.to_string())?;
        ensure(det == ehr && ehr == direct, || {
            format!("{}: det {det}, ehrhart {ehr}, direct {direct}", e.name)
        })?;
    }
    Ok(format!("{} polytopes", all.len()))
}

fn closed_forms(all: &[CorpusEntry]) -> Check {
    let mut n = 0;
    for e in all.iter().filter(|e| matches!(e.polytope.dim(), 3 | 4)) {
        let p = &e.polytope;
        let b1 = count_triple(p, 1).unwrap().boundary;
        let formula = if p.dim() == 3 {
            Rat::from_integer(b1 - 2)
        } else {
            let b2 = count_triple(p, 2).unwrap().boundary;
            Rat::new(b2 - b1 * 2, Int::from(6))
        };
        let det = surface_determinant(p).unwrap();
        ensure(
            formula == det && surface_closed_form(p).unwrap() == det,
            || format!("{}: closed form {formula}, det {det}", e.name),
        )?;
        n += 1;
    }
    Ok(format!("{n} polytopes in d = 3, 4"))
}

fn erratum_d5() -> Check {
    let p = corpus::unit_cube(5);
    let ten = rat(10);
    let det = surface_determinant(&p).unwrap();
    let ehr = surface_from_ehrhart(&interpolate(&p).unwrap());
    let direct = surface_direct(&p).unwrap();
    ensure(det == ten && ehr == ten && direct == ten, || {
        format!("det {det}, ehrhart {ehr}, direct {direct}")
    })?;
    let b1 = count_triple(&p, 1).unwrap().boundary;
    let b2 = count_triple(&p, 2).unwrap().boundary;
    let minus = closed_form_5_minus6(&b1, &b2);
    let plus = closed_form_5(&b1, &b2);
    ensure(minus == rat(9) && plus == ten, || {
        format!("-6 variant {minus}, +6 variant {plus}")
    })?;
    Ok("all paths 10; -6 variant 9, +6 variant 10".into())
}

fn pick(all: &[CorpusEntry]) -> Check {
    let mut n = 0;
    for e in all.iter().filter(|e| e.polytope.dim() == 2) {
        let p = &e.polytope;
        let pick = pick_area(p).unwrap();
        let e2 = volume_from_ehrhart(&interpolate(p).unwrap());
        let tri = volume_direct(p).unwrap();
        ensure(pick == e2 && e2 == tri, || {
            format!("{}: pick {pick}, e_2 {e2}, triangulation {tri}", e.name)
        })?;
        n += 1;
    }
    Ok(format!("{n} polygons"))
}

fn ehrhart_structure(all: &[CorpusEntry]) -> Check {
    for e in all {
        let p = &e.polytope;
        let d = p.dim() as u64;
        let poly = interpolate(p).unwrap();
        ensure(check_constant_term(&poly), || {
            format!("{}: e_0 = {}", e.name, poly.coeff(0))
        })?;
        for k in [d + 1, d + 2] {
            let g = count_points(&p.dilate(k).unwrap(), false);
            let ev = poly.eval(&Int::from(k));
            ensure(ev == Rat::from_integer(g.clone()), || {
                format!("{}: E({k}) = {ev}, G = {g}", e.name)
            })?;
        }
        for k in 1..=3 {
            ensure(check_reciprocity(&poly, p, k).unwrap(), || {
                format!("{}: reciprocity at k = {k}", e.name)
            })?;
        }
    }
    Ok(format!("{} polytopes", all.len()))
}

fn fano_equivalence() -> Check {
    let fano = corpus::fano_corpus();
    let reflexive = fano.iter().filter(|(_, r)| *r).count();
    let other = fano.len() - reflexive;
    ensure(reflexive >= 3 && other >= 3, || {
        format!("{reflexive} reflexive, {other} non-reflexive")
    })?;
    for (e, expected) in &fano {
        let p = &e.polytope;
        let d = rat(p.dim() as i64);
        let identity = volume_direct(p).unwrap() == surface_direct(p).unwrap() / d;
        ensure(
            is_reflexive(p) == *expected && identity == *expected,
            || {
                format!(
                    "{}: reflexive {}, identity {identity}",
                    e.name,
                    is_reflexive(p)
                )
            },
        )?;
    }
    Ok(format!("{reflexive} reflexive, {other} non-reflexive"))
}

fn reflexive_volume(all: &[CorpusEntry]) -> Check {
    let fano = corpus::fano_corpus().into_iter().map(|(e, _)| e);
    let mut n = 0;
    for e in all
        .iter()
        .cloned()
        .chain(fano)
        .filter(|e| is_reflexive(&e.polytope))
    {
        let p = &e.polytope;
        let formula = surface_determinant(p).unwrap() / rat(p.dim() as i64);
        let ed = volume_from_ehrhart(&interpolate(p).unwrap());
        let vol = volume_direct(p).unwrap();
        ensure(formula == ed && ed == vol, || {
            format!("{}: det/d {formula}, e_d {ed}, volume {vol}", e.name)
        })?;
        n += 1;
    }
    ensure(n >= 6, || format!("only {n} reflexive members"))?;
    Ok(format!("{n} reflexive polytopes"))
}

fn dilation_covariance(all: &[CorpusEntry]) -> Check {
    let mut n = 0;
    for e in all.iter().filter(|e| (2..=4).contains(&e.polytope.dim())) {
        let p = &e.polytope;
        let s = surface_determinant(p).unwrap();
        for k in [2u64, 3] {
            let sk = surface_determinant(&p.dilate(k).unwrap()).unwrap();
            let scale = rat((k as i64).pow(p.dim() as u32 - 1));
            ensure(sk == &s * &scale, || {
                format!("{}: surf({k}P) = {sk}, surf(P) = {s}", e.name)
            })?;
        }
        n += 1;
    }
    Ok(format!("{n} polytopes, k = 2, 3"))
}

fn compare_all(all: &[CorpusEntry]) -> Result<String, String> {
    let mut out = String::new();
    for e in all {
        let o = cmd_compare(&write_vertex_file(&e.polytope), false)
            .map_err(|x| format!("{}: {x}", e.name))?;
        ensure(o.status == Status::Ok, || {
            format!("{}: {:?}", e.name, o.report.diagnostics)
        })?;
        out.push_str(&o.report.to_structured());
    }
    Ok(out)
}

fn determinism(all: &[CorpusEntry]) -> Check {
    let start = Instant::now();
    let first = compare_all(all)?;
    let elapsed = start.elapsed();
    let second = compare_all(all)?;
    ensure(first == second, || "reports differ between runs".into())?;
    ensure(elapsed < Duration::from_secs(60), || {
        format!("took {elapsed:.1?}")
    })?;
    Ok(format!(
        "{} reports byte-identical, first run {:.1?}",
        all.len(),
        elapsed
    ))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let all = everything();
    let criteria: Vec<Criterion> = vec![
        ("triangle identity", Box::new(|| triangle_identity(&all))),
        ("closed forms d = 3, 4", Box::new(|| closed_forms(&all))),
        ("d = 5 closed-form constant", Box::new(erratum_d5)),
        ("Pick's formula", Box::new(|| pick(&all))),
        ("Ehrhart structure", Box::new(|| ehrhart_structure(&all))),
        (
            "reflexive iff volume = surface/d",
            Box::new(fano_equivalence),
        ),
        (
            "reflexive volume formula",
            Box::new(|| reflexive_volume(&all)),
        ),
        (
            "dilation covariance",
            Box::new(|| dilation_covariance(&all)),
        ),
        (
            "compare determinism and runtime",
            Box::new(|| determinism(&all)),
        ),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS  {}. {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {}. {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.1?}",
        criteria.len() - failed,
        start.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
