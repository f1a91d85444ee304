use std::fs;
use std::path::Path;

use frobring::codes::{
    dual, macwilliams_holds_on, natural_side, sigma_cyclic_dual_check, weight_enumerator, CodeSide,
    LinearCode,
};
use frobring::finring::{FiniteRing, IdealSide, Side};
use frobring::format::{CodeSpec, FormSpec, RingSpec};
use frobring::frobenius::{find_frobenius_functional, AmbientForm, KernelSide};
use frobring::skewpoly::{check_two_sided, quotient_form_is_nondegenerate, SkewQuotient};
use frobring::znmod::ModElement;
use frobring::Error;

use crate::report::{Report, Verdict};
use crate::SideArg;

pub struct Failure {
    pub code: u8,
    pub message: String,
}

fn fail(path: Option<&Path>, err: Error) -> Failure {
    let prefix = path.map(|p| format!("{}: ", p.display())).unwrap_or_default();
    let code = match err {
        Error::Parse { .. } | Error::EnumerationTooLarge { .. } => 2,
        _ => 1,
    };
    Failure { code, message: format!("{prefix}{err}") }
}

fn read(path: &Path) -> Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|e| Failure { code: 2, message: format!("cannot read {}: {e}", path.display()) })
}

fn text<'a>(path: &Path, bytes: &'a [u8]) -> Result<&'a str, Failure> {
    std::str::from_utf8(bytes)
        .map_err(|e| Failure { code: 2, message: format!("{}: not UTF-8: {e}", path.display()) })
}

fn load_ring_spec(path: &Path, bytes: &[u8]) -> Result<RingSpec, Failure> {
    RingSpec::from_json(text(path, bytes)?).map_err(|e| fail(Some(path), e))
}

fn load_ring(path: &Path, bytes: &[u8]) -> Result<FiniteRing, Failure> {
    load_ring_spec(path, bytes)?.build().map_err(|e| fail(Some(path), e))
}

/// A vector of `A^m` as an array of coordinate arrays.
fn vector(ring: &FiniteRing, v: &ModElement) -> Vec<Vec<u64>> {
    v.blocks(ring.rank()).into_iter().map(ModElement::into_coords).collect()
}

pub fn ring_validate(path: &Path) -> Result<Report, Failure> {
    let bytes = read(path)?;
    let spec = load_ring_spec(path, &bytes)?;
    let mut report = Report::new("ring validate", &[bytes]);
    match spec.build() {
        Ok(ring) => {
            for name in ["well_defined", "associative", "unit_law", "characteristic_matches"] {
                report.check(name, true);
            }
            report
                .verdict("characteristic", Verdict::Number(ring.n() as u128))
                .verdict("cardinality", Verdict::Number(ring.cardinality()))
                .verdict("commutative", Verdict::Bool(ring.is_commutative()));
            report.witness("orders", ring.shape().orders());
        }
        Err(err) => {
            let failed = match &err {
                Error::IllDefinedProduct { i, j } => {
                    report.witness("ill_defined_pair", [i, j]);
                    0
                }
                Error::NotAssociative(i, j, l) => {
                    report.witness("associativity_witness", [i, j, l]);
                    1
                }
                Error::UnitLaw(i) => {
                    report.witness("unit_law_witness", i);
                    2
                }
                Error::Characteristic { found, .. } => {
                    report.witness("additive_order_of_one", found);
                    3
                }
                Error::Parse { .. } | Error::EnumerationTooLarge { .. } => return Err(fail(Some(path), err)),
                _ => {
                    report.check("valid", false);
                    report.witness("error", err.to_string());
                    return Ok(report);
                }
            };
            let names = ["well_defined", "associative", "unit_law", "characteristic_matches"];
            for name in &names[..failed] {
                report.check(name, true);
            }
            report.check(names[failed], false);
            report.witness("error", err.to_string());
        }
    }
    Ok(report)
}

pub fn ring_frobenius(path: &Path) -> Result<Report, Failure> {
    let bytes = read(path)?;
    let ring = load_ring(path, &bytes)?;
    let mut report = Report::new("ring frobenius", &[bytes]);
    let functional = find_frobenius_functional(&ring).map_err(|e| fail(None, e))?;
    let cert = ring.frobenius_socle_certificate().map_err(|e| fail(None, e))?;
    let by_functional = functional.is_some();
    let by_socle = cert.is_frobenius();
    report.check("frobenius_functional", by_functional);
    report.check("socle_test", by_socle);
    report.check("agreement", by_functional == by_socle);
    if let Some(eps) = &functional {
        report.witness("functional_weights", eps.form().weights());
    }
    report
        .witness("radical_size", cert.radical_size)
        .witness("right_socle_size", cert.right_socle_size)
        .witness("left_socle_size", cert.left_socle_size)
        .witness("right_socle_generator", cert.right_witness.as_ref().map(ModElement::coords))
        .witness("left_socle_generator", cert.left_witness.as_ref().map(ModElement::coords));
    Ok(report)
}

pub fn code(
    verb: &str,
    ring_path: &Path,
    code_path: &Path,
    form_path: Option<&Path>,
    side: Option<SideArg>,
) -> Result<Report, Failure> {
    let ring_bytes = read(ring_path)?;
    let code_bytes = read(code_path)?;
    let form_bytes = form_path.map(read).transpose()?;
    let ring = load_ring(ring_path, &ring_bytes)?;
    let code = CodeSpec::from_json(text(code_path, &code_bytes)?)
        .and_then(|spec| spec.build(&ring))
        .map_err(|e| fail(Some(code_path), e))?;
    let form = match (form_path, &form_bytes) {
        (Some(p), Some(bytes)) => FormSpec::from_json(text(p, bytes)?)
            .and_then(|spec| spec.build(&ring))
            .map_err(|e| fail(Some(p), e))?,
        _ => AmbientForm::identity(&ring, code.length()).map_err(|e| fail(None, e))?,
    };
    let side = match side {
        Some(SideArg::Left) => Side::Left,
        Some(SideArg::Right) => Side::Right,
        None => natural_side(&code),
    };
    let mut inputs = vec![ring_bytes, code_bytes];
    inputs.extend(form_bytes);
    let mut report = Report::new(&format!("code {verb}"), &inputs);
    report.verdict("code_size", Verdict::Number(code.len() as u128));

    match verb {
        "dual" => {
            let d = dual(&code, &form, side).map_err(|e| fail(None, e))?;
            let total = ring.cardinality().pow(code.length() as u32);
            report.verdict("dual_size", Verdict::Number(d.len() as u128));
            report.check("cardinality_identity", code.len() as u128 * d.len() as u128 == total);
            report
                .witness("dual_side", d.side().to_string())
                .witness("dual", d.codewords().iter().map(|c| vector(&ring, c)).collect::<Vec<_>>());
        }
        "wenum" => {
            let w = weight_enumerator(&code);
            report.verdict("enumerator", Verdict::Text(w.to_string()));
            report.witness("counts", w.counts());
        }
        "macwilliams" => {
            let check = macwilliams_holds_on(&code, &form, side).map_err(|e| fail(None, e))?;
            report.verdict(
                "identity",
                Verdict::Text(if check.holds { "HOLDS" } else { "FAILS" }.to_string()),
            );
            report.check("holds", check.holds);
            report
                .verdict("monomial", Verdict::Bool(check.monomial))
                .verdict("code_enumerator", Verdict::Text(check.code.to_string()))
                .verdict("dual_enumerator", Verdict::Text(check.dual.to_string()))
                .verdict(
                    "transformed_enumerator",
                    Verdict::Text(match &check.transformed {
                        Some(t) => t.to_string(),
                        None => "not integral".to_string(),
                    }),
                );
            report.witness("dual_counts", check.dual.counts());
            report.witness("transformed_counts", check.transformed.as_ref().map(|t| t.counts()));
        }
        other => unreachable!("unknown code verb {other}"),
    }
    Ok(report)
}

fn load_quotient(path: &Path, bytes: &[u8]) -> Result<SkewQuotient, Failure> {
    let spec = load_ring_spec(path, bytes)?;
    let (sigma, f) = spec.skew_parts().map_err(|e| fail(Some(path), e))?;
    SkewQuotient::new(sigma, f).map_err(|e| fail(Some(path), e))
}

pub fn skew_build(path: &Path) -> Result<Report, Failure> {
    let bytes = read(path)?;
    let spec = load_ring_spec(path, &bytes)?;
    let (sigma, f) = spec.skew_parts().map_err(|e| fail(Some(path), e))?;
    let mut report = Report::new("skew build", &[bytes]);
    let base = sigma.ring().clone();
    let monic = f.len() >= 2 && f.last() == Some(base.one());
    if !report.check("monic", monic) {
        return Ok(report);
    }
    match check_two_sided(&sigma, &f).map_err(|e| fail(None, e))? {
        Ok(()) => {
            report.check("two_sided", true);
        }
        Err(violation) => {
            report.check("two_sided", false);
            report.witness("two_sided_violation", violation.to_string());
            return Ok(report);
        }
    }
    let unit = base.is_unit(&f[0]).map_err(|e| fail(None, e))?;
    if !report.check("constant_is_unit", unit) {
        return Ok(report);
    }
    let quotient = SkewQuotient::new(sigma, f).map_err(|e| fail(None, e))?;
    let ring = quotient.as_finite_ring().map_err(|e| fail(None, e))?;
    report
        .verdict("degree", Verdict::Number(quotient.degree() as u128))
        .verdict("cardinality", Verdict::Number(ring.cardinality()));
    report.witness("ring", RingSpec::from_ring(&ring));
    Ok(report)
}

pub fn skew_frobenius(path: &Path) -> Result<Report, Failure> {
    let bytes = read(path)?;
    let quotient = load_quotient(path, &bytes)?;
    let mut report = Report::new("skew frobenius", &[bytes]);
    let eps = find_frobenius_functional(quotient.base()).map_err(|e| fail(None, e))?;
    let Some(eps) = eps else {
        report.check("base_frobenius", false);
        return Ok(report);
    };
    report.check("base_frobenius", true);
    report.witness("base_functional_weights", eps.form().weights());
    let nondegenerate =
        quotient_form_is_nondegenerate(&quotient, &eps, KernelSide::Both).map_err(|e| fail(None, e))?;
    report.check("form_nondegenerate", nondegenerate);

    let ring = quotient.as_finite_ring().map_err(|e| fail(None, e))?;
    let m = quotient.degree();
    // the closed form only accounts for x^m ≡ −f_0
    if quotient.modulus()[1..m].iter().all(ModElement::is_zero) {
        let elements = ring.elements().map_err(|e| fail(None, e))?;
        let formula_matches = elements.iter().all(|g| {
            let gp = quotient.to_poly(g);
            elements.iter().all(|h| {
                let hp = quotient.to_poly(h);
                quotient.mul(&gp, &hp)[0] == quotient.constant_term_formula(&gp, &hp)
            })
        });
        report.check("constant_term_formula", formula_matches);
    }
    let cert = ring.frobenius_socle_certificate().map_err(|e| fail(None, e))?;
    report.check("socle_test", cert.is_frobenius());
    Ok(report)
}

#[derive(serde::Serialize)]
struct SweepEntry {
    size: usize,
    dual_size: usize,
    dual_matches_theta_orthogonal: bool,
    dual_is_sigma_cyclic: bool,
    code: Vec<Vec<Vec<u64>>>,
    dual: Vec<Vec<Vec<u64>>>,
}

pub fn skew_sweep(path: &Path) -> Result<Report, Failure> {
    let bytes = read(path)?;
    let quotient = load_quotient(path, &bytes)?;
    if !quotient.is_x_pow_minus_one() {
        return Err(fail(Some(path), Error::UnsupportedModulus));
    }
    let mut report = Report::new("skew sweep", &[bytes]);
    let base = quotient.base().clone();
    let Some(eps) = find_frobenius_functional(&base).map_err(|e| fail(None, e))? else {
        report.check("base_frobenius", false);
        return Ok(report);
    };
    let ring = quotient.as_finite_ring().map_err(|e| fail(None, e))?;
    let ideals = ring.enumerate_ideals(IdealSide::Left).map_err(|e| fail(None, e))?;
    let mut entries = Vec::new();
    for ideal in &ideals {
        let code = LinearCode::from_codewords(&base, quotient.degree(), CodeSide::Left, ideal.elements().clone())
            .map_err(|e| fail(None, e))?;
        let check = sigma_cyclic_dual_check(&code, &quotient, &eps).map_err(|e| fail(None, e))?;
        entries.push(SweepEntry {
            size: code.len(),
            dual_size: check.dual.len(),
            dual_matches_theta_orthogonal: check.dual_matches_theta_orthogonal,
            dual_is_sigma_cyclic: check.dual_is_sigma_cyclic,
            code: code.codewords().iter().map(|c| vector(&base, c)).collect(),
            dual: check.dual.iter().map(|c| vector(&base, c)).collect(),
        });
    }
    report.verdict("left_ideals", Verdict::Number(entries.len() as u128));
    report.check("duals_match_theta_orthogonal", entries.iter().all(|e| e.dual_matches_theta_orthogonal));
    report.check("duals_sigma_cyclic", entries.iter().all(|e| e.dual_is_sigma_cyclic));
    report.witness("ideals", entries);
    Ok(report)
}
