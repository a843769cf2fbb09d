//! Text rendering of programs.
//!
//! ```text
//! # slp version 1
//! # mul=88 add=264 neg=4 shift=30
//! # inputs a=16 b=16 outputs=16
//! v0 = a[0]
//! v32 = v0 + v16
//! v33 = v32 >> 1
//! y[0] = v33
//! ```
//!
//! Values are numbered in definition order, so the `v` indices are implied
//! by position and checked when parsing.

use std::fmt::Write;

use crate::exactnum::DyadicRational;

use super::program::{Instr, SLProgram};
use super::SlpError;

const VERSION_LINE: &str = "# slp version 1";

pub fn emit_text(p: &SLProgram) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{VERSION_LINE}");
    let _ = writeln!(s, "# {}", p.histogram());
    let _ = writeln!(s, "# inputs a={} b={} outputs={}", p.a_arity(), p.b_arity(), p.outputs());
    let mut next = 0;
    for ins in p.instrs() {
        let rhs = match ins {
            Instr::LoadA(i) => format!("a[{i}]"),
            Instr::LoadB(i) => format!("b[{i}]"),
            Instr::Const(c) => format!("const {c}"),
            Instr::Add(x, y) => format!("v{x} + v{y}"),
            Instr::Sub(x, y) => format!("v{x} - v{y}"),
            Instr::Neg(x) => format!("-v{x}"),
            Instr::Mul(x, y) => format!("v{x} * v{y}"),
            Instr::Shift(x, k) if *k < 0 => format!("v{x} >> {}", -k),
            Instr::Shift(x, k) => format!("v{x} << {k}"),
            Instr::StoreY(i, x) => {
                let _ = writeln!(s, "y[{i}] = v{x}");
                continue;
            }
        };
        let _ = writeln!(s, "v{next} = {rhs}");
        next += 1;
    }
    s
}

fn bad(line: usize, msg: impl Into<String>) -> SlpError {
    SlpError::Parse {
        line,
        message: msg.into(),
    }
}

fn value_ref(tok: &str, line: usize) -> Result<usize, SlpError> {
    tok.strip_prefix('v')
        .and_then(|n| n.parse().ok())
        .ok_or_else(|| bad(line, format!("expected a value like v12, got {tok:?}")))
}

fn indexed(tok: &str, name: &str) -> Option<usize> {
    tok.strip_prefix(name)?.strip_prefix('[')?.strip_suffix(']')?.parse().ok()
}

fn parse_rhs(rhs: &str, line: usize) -> Result<Instr, SlpError> {
    if let Some(i) = indexed(rhs, "a") {
        return Ok(Instr::LoadA(i));
    }
    if let Some(i) = indexed(rhs, "b") {
        return Ok(Instr::LoadB(i));
    }
    if let Some(c) = rhs.strip_prefix("const ") {
        let v: DyadicRational = c.parse().map_err(|e| bad(line, format!("{e}")))?;
        return Ok(Instr::Const(v));
    }
    if let Some(x) = rhs.strip_prefix('-') {
        return Ok(Instr::Neg(value_ref(x, line)?));
    }
    let toks: Vec<&str> = rhs.split(' ').collect();
    let [x, op, y] = toks[..] else {
        return Err(bad(line, format!("cannot parse {rhs:?}")));
    };
    let x = value_ref(x, line)?;
    let shift = |neg: bool| -> Result<Instr, SlpError> {
        let k: i32 = y.parse().map_err(|_| bad(line, format!("bad shift amount {y:?}")))?;
        Ok(Instr::Shift(x, if neg { -k } else { k }))
    };
    match op {
        "+" => Ok(Instr::Add(x, value_ref(y, line)?)),
        "-" => Ok(Instr::Sub(x, value_ref(y, line)?)),
        "*" => Ok(Instr::Mul(x, value_ref(y, line)?)),
        ">>" => shift(true),
        "<<" => shift(false),
        _ => Err(bad(line, format!("unknown operator {op:?}"))),
    }
}

/// Parses [`emit_text`] output. Header comments other than the version and
/// arity lines are ignored; the histogram is recomputed.
pub fn parse_text(text: &str) -> Result<SLProgram, SlpError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim_end()));
    match lines.next() {
        Some((_, VERSION_LINE)) => {}
        _ => return Err(bad(1, format!("expected {VERSION_LINE:?}"))),
    }
    let mut arity = None;
    let mut instrs = Vec::new();
    let mut next = 0;
    for (n, l) in lines {
        if l.is_empty() {
            continue;
        }
        if let Some(c) = l.strip_prefix("# inputs ") {
            let nums: Vec<usize> = c
                .split(' ')
                .map(|kv| kv.split_once('=').and_then(|(_, v)| v.parse().ok()))
                .collect::<Option<_>>()
                .filter(|v: &Vec<usize>| v.len() == 3)
                .ok_or_else(|| bad(n, "bad inputs line"))?;
            arity = Some((nums[0], nums[1], nums[2]));
            continue;
        }
        if l.starts_with('#') {
            continue;
        }
        let (lhs, rhs) = l.split_once(" = ").ok_or_else(|| bad(n, "expected `lhs = rhs`"))?;
        if let Some(i) = indexed(lhs, "y") {
            instrs.push(Instr::StoreY(i, value_ref(rhs, n)?));
            continue;
        }
        if value_ref(lhs, n)? != next {
            return Err(bad(n, format!("expected v{next} on the left")));
        }
        instrs.push(parse_rhs(rhs, n)?);
        next += 1;
    }
    let (a, b, y) = arity.ok_or_else(|| bad(0, "missing `# inputs` line"))?;
    SLProgram::new(instrs, a, b, y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loads_and_stores_only() {
        let mut instrs: Vec<Instr> = (0..16).map(Instr::LoadA).chain((0..16).map(Instr::LoadB)).collect();
        instrs.extend((0..16).map(|i| Instr::StoreY(i, i)));
        let p = SLProgram::new(instrs, 16, 16, 16).unwrap();
        let text = emit_text(&p);
        let body: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
        assert_eq!(body.iter().filter(|l| l.contains("= a[") || l.contains("= b[")).count(), 32);
        assert_eq!(body.iter().filter(|l| l.starts_with("y[")).count(), 16);
        assert_eq!(parse_text(&text).unwrap(), p);
    }

    #[test]
    fn every_opcode_round_trips() {
        use Instr::*;
        let p = SLProgram::new(
            vec![
                LoadA(0),
                LoadB(0),
                Const(DyadicRational::new(3, 2)),
                Add(0, 1),
                Sub(3, 2),
                Neg(4),
                Mul(5, 0),
                Shift(6, -2),
                Shift(7, 3),
                StoreY(0, 8),
            ],
            1,
            1,
            1,
        )
        .unwrap();
        let text = emit_text(&p);
        assert!(text.contains("v7 = v6 >> 2\nv8 = v7 << 3\n"), "{text}");
        let q = parse_text(&text).unwrap();
        assert_eq!(q, p);
        assert_eq!(emit_text(&q), text);
    }

    #[test]
    fn parse_errors() {
        assert!(parse_text("v0 = a[0]\n").is_err());
        let head = "# slp version 1\n# inputs a=1 b=0 outputs=1\n";
        assert!(parse_text(&format!("{head}v1 = a[0]\ny[0] = v1\n")).is_err());
        assert!(parse_text(&format!("{head}v0 = a[0]\nv1 = v0 % v0\ny[0] = v1\n")).is_err());
        assert!(parse_text(&format!("{head}v0 = a[0]\ny[0] = v4\n")).is_err());
        assert!(parse_text(&format!("{head}v0 = a[0]\ny[0] = v0\n")).is_ok());
    }
}
