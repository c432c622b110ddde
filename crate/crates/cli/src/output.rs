//! JSON shapes shared by the subcommands.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};
use whp_core::algebra::{Coeff, IntPolynomial, Polynomial, RatPolynomial};
use whp_core::Partition;

pub const SCHEMA: &str = "whp/1";

/// `{"variable": v, "coeffs": [...], "text": ...}` with `coeffs[i]` the
/// coefficient of `v^i`, each as a decimal or `p/q` string.
pub fn poly<C: Coeff>(p: &Polynomial<C>, variable: &str) -> Value {
    json!({
        "variable": variable,
        "coeffs": p.coeff_strings(),
        "degree": p.degree(),
        "text": p.to_string_in(variable),
    })
}

pub fn int_poly(p: &IntPolynomial) -> Value {
    poly(p, "x")
}

pub fn rat_poly(p: &RatPolynomial) -> Value {
    poly(p, "x")
}

pub fn int(v: &BigInt) -> Value {
    Value::String(v.to_string())
}

pub fn rat(v: &BigRational) -> Value {
    Value::String(v.to_string())
}

pub fn partition(p: &Partition) -> Value {
    Value::String(p.to_string())
}

/// Adds the schema tag and command name to an object.
pub fn envelope(command: &str, mut body: Value) -> Value {
    let obj = body.as_object_mut().expect("command output is an object");
    obj.insert("schema".into(), SCHEMA.into());
    obj.insert("command".into(), command.into());
    body
}
