//! JSON and text renderings. Every exact value is written as an integer or
//! a `"p/q"` string; decimals appear only under keys named `approx`.

use lctpoly::geom::{enumerate_vertices, HPolyhedron};
use lctpoly::{RatVec, Rational};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::CliError;

pub fn exact(x: &Rational) -> Value {
    Value::String(x.to_string())
}

/// An integer as a JSON number when it fits, as a string otherwise.
fn integer(x: &Rational) -> Value {
    x.to_integer()
        .to_i64()
        .map_or_else(|| Value::String(x.to_string()), Value::from)
}

fn approx(x: &Rational) -> Value {
    x.to_f64().map_or(Value::Null, Value::from)
}

fn vector(v: &RatVec) -> Value {
    Value::Array(v.iter().map(exact).collect())
}

pub fn vertices(h: &HPolyhedron) -> Result<Vec<RatVec>, CliError> {
    let v = enumerate_vertices(h)?;
    if !v.is_bounded() {
        return Err(CliError::usage("the polytope is unbounded"));
    }
    Ok(v.vertices().to_vec())
}

pub fn polytope_json(
    h: &HPolyhedron,
    provenance: &str,
    with_approx: bool,
) -> Result<Value, CliError> {
    let verts = vertices(h)?;
    let inequalities: Vec<Value> = h
        .halfspaces()
        .iter()
        .map(|hs| {
            json!({
                "normal": hs.normal.iter().map(integer).collect::<Vec<_>>(),
                "offset": exact(&hs.offset),
            })
        })
        .collect();
    let mut out = json!({
        "format": 1,
        "dim": h.dim(),
        "inequalities": inequalities,
        "nonnegativity": h.includes_nonnegativity(),
        "vertices": verts.iter().map(vector).collect::<Vec<_>>(),
        "provenance": provenance,
    });
    if with_approx {
        out["approx"] = json!({
            "offsets": h.halfspaces().iter().map(|hs| approx(&hs.offset)).collect::<Vec<_>>(),
            "vertices": verts
                .iter()
                .map(|v| v.iter().map(approx).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        });
    }
    Ok(out)
}

fn term(c: &Rational, var: usize) -> String {
    let name = format!("l{}", var + 1);
    if c.is_one() {
        name
    } else {
        format!("{c}*{name}")
    }
}

/// `3*l1 + 2*l2 <= 7` style rendering of one inequality.
pub fn inequality_text(normal: &RatVec, offset: &Rational) -> String {
    let mut lhs = String::new();
    for (j, c) in normal.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        if lhs.is_empty() {
            if c.is_negative() {
                lhs.push('-');
            }
        } else {
            lhs.push_str(if c.is_negative() { " - " } else { " + " });
        }
        lhs.push_str(&term(&c.abs(), j));
    }
    format!("{lhs} <= {offset}")
}

/// `{6*l1 <= 5, l1 >= 0}`.
pub fn polytope_inline(h: &HPolyhedron) -> String {
    let mut parts: Vec<String> = h
        .halfspaces()
        .iter()
        .map(|hs| inequality_text(&hs.normal, &hs.offset))
        .collect();
    if h.includes_nonnegativity() {
        parts.push("l >= 0".to_string());
    }
    format!("{{{}}}", parts.join(", "))
}

pub fn polytope_text(
    h: &HPolyhedron,
    provenance: &str,
    with_approx: bool,
) -> Result<String, CliError> {
    let verts = vertices(h)?;
    let mut out = format!("polytope in dimension {} ({provenance})\n", h.dim());
    for hs in h.halfspaces() {
        out.push_str(&format!("  {}", inequality_text(&hs.normal, &hs.offset)));
        if with_approx {
            out.push_str(&format!(
                "    [approx {:.6}]",
                hs.offset.to_f64().unwrap_or(f64::NAN)
            ));
        }
        out.push('\n');
    }
    if h.includes_nonnegativity() {
        let names: Vec<String> = (1..=h.dim()).map(|j| format!("l{j}")).collect();
        out.push_str(&format!("  {} >= 0\n", names.join(", ")));
    }
    out.push_str("vertices:\n");
    for v in &verts {
        out.push_str(&format!("  {v}"));
        if with_approx {
            let xs: Vec<String> = v
                .iter()
                .map(|x| format!("{:.6}", x.to_f64().unwrap_or(f64::NAN)))
                .collect();
            out.push_str(&format!("    [approx ({})]", xs.join(", ")));
        }
        out.push('\n');
    }
    Ok(out)
}

pub fn rational_text(x: &Rational, with_approx: bool) -> String {
    if with_approx {
        format!("{x}    [approx {:.6}]", x.to_f64().unwrap_or(f64::NAN))
    } else {
        x.to_string()
    }
}

pub fn rational_json(key: &str, x: &Rational, with_approx: bool) -> Value {
    let mut out = json!({ "format": 1, key: exact(x) });
    if with_approx {
        out["approx"] = approx(x);
    }
    out
}
