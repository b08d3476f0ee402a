use std::fmt::Write;

use super::{lower, Circuit, Gate};
use crate::error::{Error, Result};

/// Renders the circuit as OpenQASM 2.0.
///
/// SWAPs are lowered to CNOT triples first, so the output only contains
/// `ry`, `x` and `cx`. A `Rot(θ)` is written as `ry(2θ)`.
pub fn emit_qasm(c: &Circuit) -> Result<String> {
    let lowered = lower(c).map_err(|e| match e {
        Error::NotLowerable { position } => Error::Synthesis(format!(
            "gate {position} is opaque and has no OpenQASM 2.0 form"
        )),
        other => other,
    })?;
    let mut out = String::new();
    out.push_str("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n");
    writeln!(out, "qreg q[{}];", c.width()).unwrap();
    for g in lowered.gates() {
        match g {
            Gate::Rot { theta, target } => {
                writeln!(out, "ry({}) q[{target}];", format_angle(2.0 * theta)).unwrap()
            }
            Gate::X { target } => writeln!(out, "x q[{target}];").unwrap(),
            Gate::Cnot { control, target } => writeln!(out, "cx q[{control}],q[{target}];").unwrap(),
            Gate::Swap { .. } | Gate::Opaque { .. } => unreachable!("removed by lowering"),
        }
    }
    Ok(out)
}

/// Formats a float with 17 significant digits, `%.17g` style.
///
/// Exponent form keeps a decimal point in the mantissa so the literal stays a
/// valid QASM `real`.
pub fn format_angle(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{:.16e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..17).contains(&exp) {
        let mut m = strip_zeros(mantissa.to_string());
        if !m.contains('.') {
            m.push_str(".0");
        }
        let sign = if exp < 0 { '-' } else { '+' };
        return format!("{m}e{sign}{:02}", exp.abs());
    }
    let decimals = (16 - exp) as usize;
    strip_zeros(format!("{:.*}", decimals, x))
}

fn strip_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}
