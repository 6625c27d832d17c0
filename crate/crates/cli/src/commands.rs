//! Command implementations. Every command returns the exact stdout text it
//! wants printed; all numbers are exact rationals `p/q` (except counts and
//! Euler characteristics, which are integers), so identical invocations
//! produce byte-identical output.

use std::fs;
use std::path::Path;

use num_traits::{One, Zero};
use svlab_core::{
    auto_cocycle, barycentric_subdivide, boundary, build_circle, build_cyclic_cover,
    build_polygon_surface, class_from_integration, class_norm, dual_norm, format_rational,
    is_simplicial, l1_norm, parse_rational, path_norm_bound, smear, transfer, verify_certificate,
    CoverTower, CoveringMap, DeltaComplex, DualNorm, EdgeCocycle, Rational, RationalChain,
};

use crate::dcx::{self, DcxDocument, RawCocycle, RawTower, RawValued};
use crate::error::CliError;

/// A complex plus the name it goes by in reports and output files.
pub struct Loaded {
    pub name: String,
    pub complex: DeltaComplex,
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::domain(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text)
        .map_err(|e| CliError::domain(format!("cannot write {}: {e}", path.display())))
}

fn load_document(path: &Path) -> Result<DcxDocument, CliError> {
    dcx::parse(&read_file(path)?)
}

fn build_from_spec(spec: &str) -> Result<Loaded, CliError> {
    let (kind, arg) = spec
        .split_once(':')
        .ok_or_else(|| CliError::domain(format!("builder spec `{spec}` is not `kind:n`")))?;
    let n: usize = arg
        .parse()
        .map_err(|_| CliError::domain(format!("builder argument `{arg}` is not a number")))?;
    match kind {
        "surface" => Ok(Loaded {
            name: format!("surface_{n}"),
            complex: build_polygon_surface(n)?,
        }),
        "circle" => Ok(Loaded { name: format!("circle_{n}"), complex: build_circle(n)? }),
        other => Err(CliError::domain(format!(
            "unknown builder `{other}`: expected surface:<g> or circle:<n>"
        ))),
    }
}

pub fn load_input(path: Option<&Path>, builder: Option<&str>) -> Result<Loaded, CliError> {
    match (path, builder) {
        (Some(p), None) => {
            let doc = load_document(p)?;
            let raw = doc
                .complexes
                .first()
                .ok_or_else(|| CliError::domain("document contains no complex section"))?;
            let complex = doc.build_complex(&raw.name)?;
            Ok(Loaded { name: raw.name.clone(), complex })
        }
        (None, Some(spec)) => build_from_spec(spec),
        (None, None) => Err(CliError::domain("provide an input file or --builder")),
        (Some(_), Some(_)) => {
            Err(CliError::domain("provide either an input file or --builder, not both"))
        }
    }
}

/// `fundamental` or a DCX file whose first chain section is bound to the
/// given complex.
fn resolve_class(cx: &DeltaComplex, spec: &str) -> Result<RationalChain, CliError> {
    if spec == "fundamental" {
        return Ok(cx.fundamental_cycle()?);
    }
    let doc = load_document(Path::new(spec))?;
    let raw = doc
        .chains
        .first()
        .ok_or_else(|| CliError::domain(format!("{spec} contains no chain section")))?;
    Ok(RationalChain::from_terms(cx, raw.dim, raw.terms.iter().cloned())?)
}

/// `auto:<d>` or a DCX file whose first cocycle section is bound to the
/// given complex; returns the name used in output files.
fn resolve_cocycle(cx: &DeltaComplex, spec: &str) -> Result<(String, EdgeCocycle), CliError> {
    if let Some(d) = spec.strip_prefix("auto:") {
        let d: u64 = d
            .parse()
            .map_err(|_| CliError::domain(format!("auto cocycle modulus `{d}` is not a number")))?;
        return Ok((format!("auto_{d}"), auto_cocycle(cx, d)?));
    }
    let doc = load_document(Path::new(spec))?;
    let raw = doc
        .cocycles
        .first()
        .ok_or_else(|| CliError::domain(format!("{spec} contains no cocycle section")))?;
    Ok((raw.name.clone(), assemble_cocycle(cx, raw)?))
}

fn assemble_cocycle(cx: &DeltaComplex, raw: &RawCocycle) -> Result<EdgeCocycle, CliError> {
    let mut labels: Vec<Option<u64>> = vec![None; cx.count(1)];
    for &(edge, value) in &raw.labels {
        let slot = labels.get_mut(edge).ok_or_else(|| {
            CliError::domain(format!("label for edge {edge} outside the {} edges", cx.count(1)))
        })?;
        if slot.replace(value).is_some() {
            return Err(CliError::domain(format!("duplicate label for edge {edge}")));
        }
    }
    let labels = labels
        .into_iter()
        .enumerate()
        .map(|(e, v)| v.ok_or_else(|| CliError::domain(format!("edge {e} has no label"))))
        .collect::<Result<Vec<u64>, _>>()?;
    Ok(EdgeCocycle::new(cx, raw.modulus, labels)?)
}

fn join_counts(counts: &[usize]) -> String {
    counts.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

pub fn cmd_check(input: &Loaded) -> Result<String, CliError> {
    let report = input.complex.validate()?;
    let betti = report.betti.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(",");
    Ok(format!("chi={} betti={}\n", report.euler_char, betti))
}

pub fn cmd_norm(
    input: &Loaded,
    class: &str,
    dual: bool,
    out: Option<&Path>,
) -> Result<String, CliError> {
    let cx = &input.complex;
    let z = resolve_class(cx, class)?;
    let cert = class_norm(cx, &z)?;
    if let Err(issue) = verify_certificate(cx, &z, &cert) {
        return Err(CliError::Internal(format!("certificate failed re-verification: {issue}")));
    }
    let mut line = format!("norm={}", format_rational(&cert.class_norm));
    if dual {
        match dual_norm(cx, &z)? {
            DualNorm::Value(v) => {
                if &v * &cert.class_norm != Rational::one() {
                    return Err(CliError::Internal(format!(
                        "strong duality violated: norm {} times dual {} is not 1",
                        format_rational(&cert.class_norm),
                        format_rational(&v)
                    )));
                }
                line.push_str(&format!(" dual={}", format_rational(&v)));
            }
            DualNorm::Infeasible => {
                if !cert.class_norm.is_zero() {
                    return Err(CliError::Internal(
                        "dual infeasible although the class norm is nonzero".into(),
                    ));
                }
                line.push_str(" dual=infeasible");
            }
        }
    }
    if let Some(path) = out {
        let mut doc = DcxDocument {
            complexes: vec![dcx::raw_from_complex(&input.name, cx)],
            chains: vec![
                raw_chain("optimal_cycle", &input.name, &cert.optimal_cycle),
                raw_chain("boundary_witness", &input.name, &cert.boundary_witness),
            ],
            ..DcxDocument::default()
        };
        if let Some(phi) = &cert.dual_cochain {
            doc.cochains.push(RawValued {
                name: "dual_certificate".into(),
                complex: input.name.clone(),
                dim: phi.dim(),
                terms: phi.support().map(|(c, q)| (c, q.clone())).collect(),
            });
        }
        write_file(path, &dcx::serialize(&doc))?;
    }
    line.push('\n');
    Ok(line)
}

fn raw_chain(name: &str, complex: &str, c: &RationalChain) -> RawValued {
    RawValued {
        name: name.into(),
        complex: complex.into(),
        dim: c.dim(),
        terms: c.support().map(|(cell, q)| (cell, q.clone())).collect(),
    }
}

/// Appends ` genus=<g>` when the covered space is a closed orientable
/// connected surface, the only case a genus is defined for.
fn genus_field(cx: &DeltaComplex) -> Result<String, CliError> {
    let report = cx.validate()?;
    let applicable = report.dim == 2
        && report.orientable_top
        && report.components == 1
        && report.fundamental_cycle.is_some()
        && report.euler_char % 2 == 0;
    Ok(if applicable {
        format!(" genus={}", (2 - report.euler_char) / 2)
    } else {
        String::new()
    })
}

fn cover_from(input: &Loaded, cocycle_spec: &str) -> Result<(String, CoveringMap), CliError> {
    let (name, w) = resolve_cocycle(&input.complex, cocycle_spec)?;
    Ok((name, build_cyclic_cover(&input.complex, &w)?))
}

pub fn cmd_cover(
    input: &Loaded,
    cocycle_spec: &str,
    out: Option<&Path>,
) -> Result<String, CliError> {
    let (cocycle_name, cm) = cover_from(input, cocycle_spec)?;
    let chi = cm.total().validate()?.euler_char;
    let line = format!("chi={}{} sheets={}\n", chi, genus_field(cm.total())?, cm.sheets());
    if let Some(path) = out {
        let cover_name = format!("{}_cover_{}", input.name, cm.sheets());
        let doc = DcxDocument {
            complexes: vec![
                dcx::raw_from_complex(&input.name, &input.complex),
                dcx::raw_from_complex(&cover_name, cm.total()),
            ],
            cocycles: vec![RawCocycle {
                name: cocycle_name.clone(),
                complex: input.name.clone(),
                modulus: cm.sheets(),
                labels: cm.cocycle().labels().iter().copied().enumerate().collect(),
            }],
            towers: vec![RawTower {
                name: "tower".into(),
                base: input.name.clone(),
                cocycle: cocycle_name,
                sheets: cm.sheets(),
            }],
            ..DcxDocument::default()
        };
        write_file(path, &dcx::serialize(&doc))?;
    }
    Ok(line)
}

pub fn cmd_transfer(input: &Loaded, cocycle_spec: &str, class: &str) -> Result<String, CliError> {
    let (_, cm) = cover_from(input, cocycle_spec)?;
    let a = resolve_class(&input.complex, class)?;
    let t = transfer(&cm, &a)?;
    let mut line = format!(
        "sheets={} l1_base={} l1_transfer={}",
        cm.sheets(),
        format_rational(&l1_norm(&a)),
        format_rational(&l1_norm(&t))
    );
    // Norm multiplicativity is only defined for cycles; 0-chains are
    // cycles by convention.
    let is_cycle = a.dim() == 0 || boundary(&input.complex, &a)?.is_zero();
    if is_cycle {
        let base_norm = class_norm(&input.complex, &a)?.class_norm;
        let cover_norm = class_norm(cm.total(), &t)?.class_norm;
        line.push_str(&format!(
            " norm_base={} norm_cover={}",
            format_rational(&base_norm),
            format_rational(&cover_norm)
        ));
    }
    line.push('\n');
    Ok(line)
}

pub fn cmd_wrap(circle: usize, winding: &str, max_len: usize) -> Result<String, CliError> {
    let cx = build_circle(circle)?;
    let w = parse_rational(winding)
        .map_err(|_| CliError::domain(format!("winding `{winding}` is not a rational")))?;
    let bound = path_norm_bound(&cx, &w, max_len)?;
    Ok(format!("bound={}\n", format_rational(&bound)))
}

pub fn cmd_subdivide(
    input: &Loaded,
    times: usize,
    out: Option<&Path>,
) -> Result<String, CliError> {
    let mut cur = input.complex.clone();
    for _ in 0..times {
        cur = barycentric_subdivide(&cur)?.target().clone();
    }
    let report = cur.validate()?;
    let line = format!(
        "cells={} chi={} simplicial={}\n",
        join_counts(&report.counts),
        report.euler_char,
        is_simplicial(&cur)
    );
    if let Some(path) = out {
        let doc = DcxDocument {
            complexes: vec![dcx::raw_from_complex(
                &format!("{}_sd{}", input.name, times),
                &cur,
            )],
            ..DcxDocument::default()
        };
        write_file(path, &dcx::serialize(&doc))?;
    }
    Ok(line)
}

pub fn cmd_smear(tower_path: &Path, from: u64, to: u64, chain: &str) -> Result<String, CliError> {
    let doc = load_document(tower_path)?;
    let raw_tower = doc
        .towers
        .first()
        .ok_or_else(|| CliError::domain("document contains no tower section"))?;
    let base = doc.build_complex(&raw_tower.base)?;
    let raw_cocycle = doc.find_cocycle(&raw_tower.cocycle).ok_or_else(|| {
        CliError::domain(format!("cocycle `{}` not found in document", raw_tower.cocycle))
    })?;
    if raw_cocycle.complex != raw_tower.base {
        return Err(CliError::domain(format!(
            "tower base `{}` and cocycle complex `{}` disagree",
            raw_tower.base, raw_cocycle.complex
        )));
    }
    if raw_cocycle.modulus != raw_tower.sheets {
        return Err(CliError::domain(format!(
            "tower sheet count {} and cocycle modulus {} disagree",
            raw_tower.sheets, raw_cocycle.modulus
        )));
    }
    let cocycle = assemble_cocycle(&base, raw_cocycle)?;
    let tower = CoverTower::new(&base, &cocycle)?;
    let q_from = tower.quotient(from)?.total().clone();
    let q_to = tower.quotient(to)?.total().clone();
    let c = resolve_class(&q_from, chain)?;
    let smeared = smear(&tower, from, to, &c)?;
    let tov = smeared.total_variation();
    let l1 = l1_norm(&c);
    if tov > l1 {
        return Err(CliError::Internal(format!(
            "smearing increased mass: tov {} exceeds l1 {}",
            format_rational(&tov),
            format_rational(&l1)
        )));
    }
    let ratio = class_from_integration(&q_to, &smeared)?;
    Ok(format!(
        "tov={} l1={} tov_le_l1={} ratio={}\n",
        format_rational(&tov),
        format_rational(&l1),
        tov <= l1,
        format_rational(&ratio)
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn builder(spec: &str) -> Loaded {
        build_from_spec(spec).unwrap()
    }

    #[test]
    fn check_reports_euler_characteristic_and_betti_numbers() {
        assert_eq!(cmd_check(&builder("surface:1")).unwrap(), "chi=0 betti=1,2,1\n");
        assert_eq!(cmd_check(&builder("surface:2")).unwrap(), "chi=-2 betti=1,4,1\n");
        assert_eq!(cmd_check(&builder("circle:5")).unwrap(), "chi=0 betti=1,1\n");
    }

    #[test]
    fn norm_reports_the_torus_value_with_its_dual() {
        let out = cmd_norm(&builder("surface:1"), "fundamental", true, None).unwrap();
        assert_eq!(out, "norm=2/1 dual=1/2\n");
    }

    #[test]
    fn cover_reports_the_covered_genus() {
        let out = cmd_cover(&builder("surface:2"), "auto:3", None).unwrap();
        assert_eq!(out, "chi=-6 genus=4 sheets=3\n");
    }

    #[test]
    fn transfer_scales_norms_by_the_sheet_count() {
        let out = cmd_transfer(&builder("surface:1"), "auto:3", "fundamental").unwrap();
        assert_eq!(out, "sheets=3 l1_base=2/1 l1_transfer=6/1 norm_base=2/1 norm_cover=6/1\n");
    }

    #[test]
    fn wrap_reports_the_closed_form_bound() {
        assert_eq!(cmd_wrap(3, "1", 30).unwrap(), "bound=1/10\n");
        assert_eq!(cmd_wrap(3, "1", 7).unwrap(), "bound=1/2\n");
        assert!(matches!(cmd_wrap(3, "1", 2), Err(CliError::Domain(_))));
    }

    #[test]
    fn subdivide_reports_cells_chi_and_simpliciality() {
        let out = cmd_subdivide(&builder("surface:2"), 2, None).unwrap();
        assert_eq!(out, "cells=106,324,216 chi=-2 simplicial=true\n");
        let once = cmd_subdivide(&builder("surface:1"), 1, None).unwrap();
        assert_eq!(once, "cells=6,18,12 chi=0 simplicial=false\n");
    }

    #[test]
    fn missing_inputs_are_domain_errors() {
        assert!(matches!(load_input(None, None), Err(CliError::Domain(_))));
        assert!(matches!(build_from_spec("nonsense:2"), Err(CliError::Domain(_))));
        assert!(matches!(build_from_spec("surface"), Err(CliError::Domain(_))));
    }
}
