//! JSON encodings of fields, elements, polynomials, places and models.
//!
//! Elements of `F_p` and `Q` are decimal strings (`"3"`, `"-7/3"`); numbers
//! are accepted on input. Elements of `F_{p^n}` are coordinate arrays in the
//! power basis. Polynomials are coefficient arrays, lowest degree first.

use cubica_core::analyzer::Classification;
use cubica_core::parshin::{AffinePoint, HyperellipticModel, MumfordClass};
use cubica_core::quadratic::{QuadClass, QuadraticModel};
use cubica_core::{CubicModel, Field, FieldElement, Place, Polynomial, RamificationReport, RationalFunction};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::CliError;

fn schema<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Schema(msg.into()))
}

/// Parses a JSON argument; `@path` reads the document from a file.
pub fn parse_arg(arg: &str) -> Result<Value, CliError> {
    let text = match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| CliError::Schema(format!("{path}: {e}")))?,
        None => arg.to_string(),
    };
    serde_json::from_str(&text).map_err(|e| CliError::Schema(format!("malformed JSON: {e}")))
}

/// `Q`, or the order of a finite field.
pub fn parse_field(s: &str) -> Result<Field, CliError> {
    match s.trim() {
        "Q" | "QQ" | "q" => Ok(Field::rationals()),
        t => {
            let q: u64 = t.parse().map_err(|_| CliError::Schema(format!("field must be Q or a prime power, got {s:?}")))?;
            Ok(Field::finite(q)?)
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational, CliError> {
    let bad = || CliError::Schema(format!("not a rational number: {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn element(k: &Field, v: &Value) -> Result<FieldElement, CliError> {
    match v {
        Value::String(s) => Ok(k.from_rational(&parse_rational(s)?)?),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(k.from_i64(i)),
            None => schema(format!("field elements must be integers or strings, got {n}")),
        },
        Value::Array(coords) => {
            let Some(base) = k.base() else {
                return schema(format!("coordinate arrays need an extension field, not {k}"));
            };
            let c = coords.iter().map(|c| element(base, c)).collect::<Result<Vec<_>, _>>()?;
            Ok(k.from_coordinates(&c)?)
        }
        _ => schema(format!("expected a field element, got {v}")),
    }
}

pub fn element_json(a: &FieldElement) -> Value {
    match a.field().base() {
        Some(_) => Value::Array(a.coordinates().iter().map(element_json).collect()),
        None => Value::String(a.to_string()),
    }
}

pub fn poly(k: &Field, v: &Value) -> Result<Polynomial, CliError> {
    let Value::Array(cs) = v else {
        return schema(format!("expected a coefficient array, got {v}"));
    };
    let c = cs.iter().map(|c| element(k, c)).collect::<Result<Vec<_>, _>>()?;
    Ok(Polynomial::new(k, c))
}

pub fn poly_json(p: &Polynomial) -> Value {
    Value::Array(p.coeffs().iter().map(element_json).collect())
}

/// `{"num": poly, "den": poly}` (denominator optional) or a bare polynomial.
pub fn ratfunc(k: &Field, v: &Value) -> Result<RationalFunction, CliError> {
    match v {
        Value::Array(_) => Ok(RationalFunction::from_poly(&poly(k, v)?)),
        Value::Object(o) => {
            let Some(num) = o.get("num") else {
                return schema("rational function needs \"num\"");
            };
            let den = match o.get("den") {
                Some(d) => poly(k, d)?,
                None => Polynomial::one(k),
            };
            Ok(RationalFunction::new(poly(k, num)?, den)?)
        }
        _ => schema(format!("expected a rational function, got {v}")),
    }
}

pub fn ratfunc_json(f: &RationalFunction) -> Value {
    json!({ "num": poly_json(f.num()), "den": poly_json(f.den()), "text": f.to_string() })
}

pub fn place(k: &Field, v: &Value) -> Result<Place, CliError> {
    let Value::Object(o) = v else {
        return schema(format!("expected a place, got {v}"));
    };
    if o.get("inf") == Some(&Value::Bool(true)) {
        return Ok(Place::Infinity);
    }
    match o.get("poly") {
        Some(p) => Ok(Place::finite(poly(k, p)?)?),
        None => schema("place needs \"inf\": true or \"poly\""),
    }
}

pub fn places(k: &Field, v: &Value) -> Result<Vec<Place>, CliError> {
    let Value::Array(ps) = v else {
        return schema(format!("expected a list of places, got {v}"));
    };
    ps.iter().map(|p| place(k, p)).collect()
}

pub fn place_json(p: &Place) -> Value {
    match p {
        Place::Infinity => json!({ "inf": true }),
        Place::Finite(f) => json!({ "poly": poly_json(f) }),
    }
}

pub fn places_json(ps: &[Place]) -> Value {
    Value::Array(ps.iter().map(place_json).collect())
}

pub fn elements(k: &Field, v: &Value) -> Result<Vec<FieldElement>, CliError> {
    let Value::Array(xs) = v else {
        return schema(format!("expected a list of field elements, got {v}"));
    };
    xs.iter().map(|x| element(k, x)).collect()
}

/// `{"beta": f}` for `y^3 = beta`; `{"c": e, "alpha": f}` for
/// `y^3 = 3 c y + alpha` (`c` defaults to 1).
pub fn model(k: &Field, v: &Value) -> Result<CubicModel, CliError> {
    let Value::Object(o) = v else {
        return schema(format!("expected a cubic model, got {v}"));
    };
    match (o.get("beta"), o.get("alpha")) {
        (Some(b), None) => Ok(CubicModel::pure(ratfunc(k, b)?)?),
        (None, Some(a)) => {
            let c = match o.get("c") {
                Some(c) => element(k, c)?,
                None => k.one(),
            };
            Ok(CubicModel::impure(c, ratfunc(k, a)?)?)
        }
        _ => schema("cubic model needs exactly one of \"beta\" and \"alpha\""),
    }
}

pub fn model_json(m: &CubicModel) -> Value {
    match m {
        CubicModel::Pure { beta } => json!({ "beta": ratfunc_json(beta), "equation": m.equation() }),
        CubicModel::Impure { c, alpha } => {
            json!({ "c": element_json(c), "alpha": ratfunc_json(alpha), "equation": m.equation() })
        }
    }
}

pub fn models_json(ms: &[CubicModel]) -> Value {
    json!({ "count": ms.len(), "models": ms.iter().map(model_json).collect::<Vec<_>>() })
}

/// `{"kummer": poly}` for `y^2 = f`, or `{"artin_schreier": f}` for
/// `y^2 + y = f` (`true` meaning `f = x`).
pub fn quadratic(k: &Field, v: &Value) -> Result<QuadraticModel, CliError> {
    let Value::Object(o) = v else {
        return schema(format!("expected a quadratic model, got {v}"));
    };
    if let Some(f) = o.get("kummer") {
        return Ok(QuadraticModel::kummer(poly(k, f)?)?);
    }
    match o.get("artin_schreier") {
        Some(Value::Bool(true)) => Ok(QuadraticModel::artin_schreier(RationalFunction::x(k))?),
        Some(g) => Ok(QuadraticModel::artin_schreier(ratfunc(k, g)?)?),
        None => schema("quadratic model needs \"kummer\" or \"artin_schreier\""),
    }
}

pub fn quad_class_json(c: &QuadClass) -> Value {
    match c {
        QuadClass::Kummer { kappa, m } => {
            json!({ "kummer": poly_json(&m.scale(kappa)), "text": format!("y^2 = {}", m.scale(kappa)) })
        }
        QuadClass::ArtinSchreier { gamma } => json!({ "artin_schreier": ratfunc_json(gamma) }),
    }
}

pub fn report_json(r: &RamificationReport) -> Value {
    json!({ "total": places_json(&r.total), "partial": places_json(&r.partial), "genus": r.genus })
}

pub fn classification_json(c: &Classification) -> Value {
    json!({ "purely_cubic": c.purely_cubic, "galois": c.galois })
}

pub fn point(k: &Field, v: &Value) -> Result<AffinePoint, CliError> {
    match v {
        Value::Array(xy) if xy.len() == 2 => Ok(AffinePoint::new(element(k, &xy[0])?, element(k, &xy[1])?)),
        Value::Object(o) => match (o.get("x"), o.get("y")) {
            (Some(x), Some(y)) => Ok(AffinePoint::new(element(k, x)?, element(k, y)?)),
            _ => schema("point needs \"x\" and \"y\""),
        },
        _ => schema(format!("expected a point, got {v}")),
    }
}

pub fn point_json(p: &AffinePoint) -> Value {
    json!({ "x": element_json(&p.x), "y": element_json(&p.y) })
}

/// `{"etale": [a0, a1, a2, a3]}` for `v^2 = u^8 + a3 u^6 + a2 u^4 + a1 u^2 + a0`.
pub fn etale_curve(k: &Field, v: &Value) -> Result<HyperellipticModel, CliError> {
    let Some(a) = v.get("etale") else {
        return schema("curve needs \"etale\": [a0, a1, a2, a3]");
    };
    let a = elements(k, a)?;
    let Ok(a): Result<[FieldElement; 4], _> = a.try_into() else {
        return schema("\"etale\" takes exactly four coefficients");
    };
    Ok(HyperellipticModel::etale(&a)?)
}

pub fn mumford_json(c: &MumfordClass) -> Value {
    json!({
        "u": poly_json(&c.u),
        "v": poly_json(&c.v),
        "n_plus": c.n_plus,
        "n_minus": c.n_minus,
        "text": c.to_string(),
    })
}
