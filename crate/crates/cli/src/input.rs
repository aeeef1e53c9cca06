//! Input files: ideal tuples, resolution tables, or a previously emitted
//! polytope.

use std::fs;
use std::path::Path;

use lctpoly::geom::HPolyhedron;
use lctpoly::lct::{lct_polytope_from_resolution, lct_polytope_monomial, ResolutionData};
use lctpoly::rational::parse_rational;
use lctpoly::{MonomialIdeal, RatVec, Rational};
use serde::Deserialize;
use serde_json::Value;

use crate::CliError;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecFile {
    format: u32,
    vars: Option<usize>,
    ideals: Option<Vec<IdealSpec>>,
    resolution: Option<ResolutionSpec>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct IdealSpec {
    monomials: Vec<Vec<u32>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ResolutionSpec {
    kappa: Vec<u32>,
    alpha: Vec<Vec<u32>>,
    through_x: Vec<usize>,
    #[serde(default = "default_local")]
    local: bool,
}

fn default_local() -> bool {
    true
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolytopeFile {
    format: u32,
    dim: usize,
    inequalities: Vec<InequalitySpec>,
    nonnegativity: bool,
    #[allow(dead_code)]
    vertices: Option<Value>,
    provenance: Option<String>,
    #[allow(dead_code)]
    approx: Option<Value>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct InequalitySpec {
    normal: Vec<Value>,
    offset: Value,
}

pub enum Input {
    Ideals(Vec<MonomialIdeal>),
    Resolution {
        data: ResolutionData,
        local: bool,
    },
    Polytope {
        h: HPolyhedron,
        provenance: Option<String>,
    },
}

fn check_format(format: u32) -> Result<(), CliError> {
    if format != 1 {
        return Err(CliError::usage(format!(
            "unsupported format version {format}"
        )));
    }
    Ok(())
}

fn rational(v: &Value) -> Result<Rational, CliError> {
    let s = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
        other => {
            return Err(CliError::usage(format!(
                "expected an exact rational, found {other}"
            )))
        }
    };
    parse_rational(&s).map_err(CliError::from)
}

impl Input {
    pub fn read(path: &Path) -> Result<Input, CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
        Input::parse(&text).map_err(|e| e.context(&path.display().to_string()))
    }

    pub fn parse(text: &str) -> Result<Input, CliError> {
        let value: Value = serde_json::from_str(text)
            .map_err(|e| CliError::usage(format!("invalid JSON: {e}")))?;
        if value.get("inequalities").is_some() {
            let file: PolytopeFile = serde_json::from_value(value)
                .map_err(|e| CliError::usage(format!("invalid polytope file: {e}")))?;
            check_format(file.format)?;
            let rows = file
                .inequalities
                .iter()
                .map(|ineq| {
                    let normal = ineq
                        .normal
                        .iter()
                        .map(rational)
                        .collect::<Result<Vec<_>, _>>()?;
                    Ok((RatVec::new(normal), rational(&ineq.offset)?))
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            let h = HPolyhedron::from_rows(file.dim, rows, file.nonnegativity)?;
            return Ok(Input::Polytope {
                h,
                provenance: file.provenance,
            });
        }

        let file: SpecFile = serde_json::from_value(value)
            .map_err(|e| CliError::usage(format!("invalid input file: {e}")))?;
        check_format(file.format)?;
        match (file.ideals, file.resolution) {
            (Some(ideals), None) => {
                let n = file
                    .vars
                    .ok_or_else(|| CliError::usage("\"vars\" is required with \"ideals\""))?;
                if ideals.is_empty() {
                    return Err(CliError::usage("the ideal list is empty"));
                }
                let ideals = ideals
                    .into_iter()
                    .map(|spec| MonomialIdeal::new(n, spec.monomials))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Input::Ideals(ideals))
            }
            (None, Some(res)) => {
                let r = res.alpha.first().map_or(0, Vec::len);
                let data = ResolutionData::new(r, res.kappa, res.alpha, res.through_x)?;
                Ok(Input::Resolution {
                    data,
                    local: res.local,
                })
            }
            _ => Err(CliError::usage(
                "exactly one of \"ideals\" and \"resolution\" must be given",
            )),
        }
    }

    pub fn ideals(self) -> Result<Vec<MonomialIdeal>, CliError> {
        match self {
            Input::Ideals(ideals) => Ok(ideals),
            _ => Err(CliError::usage("this command needs an ideal list")),
        }
    }

    /// The canonical LCT-polytope described by the input, with its
    /// provenance tag. A re-read polytope file keeps the tag it was
    /// written with.
    pub fn polytope(&self) -> Result<(HPolyhedron, String), CliError> {
        match self {
            Input::Ideals(ideals) => {
                let p = lct_polytope_monomial(ideals)?;
                Ok((p.h().clone(), p.provenance().tag().to_string()))
            }
            Input::Resolution { data, local } => {
                let p = lct_polytope_from_resolution(data, *local)?;
                Ok((p.h().clone(), p.provenance().tag().to_string()))
            }
            Input::Polytope { h, provenance } => Ok((
                h.canonicalize()?,
                provenance.clone().unwrap_or_else(|| "polytope".to_string()),
            )),
        }
    }
}
