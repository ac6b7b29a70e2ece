//! Text formats for ideals and complexes.
//!
//! Ideal files start with `n=<k>` and list one monomial per line, written as
//! `*`-separated factors `x<i>` or `x<i>^<e>`. The letters `a` to `w` are
//! accepted as aliases for `x1` to `x23`. A lone `1` is the unit monomial and
//! a lone `0` line denotes the zero ideal. Complex files start with `n=<k>`
//! and list one facet per line as `{i,j,...}`; `{}` is the empty facet and a
//! file without facets is the void complex. Blank lines and text after `#`
//! are ignored in both formats.

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::mono::{Monomial, MonomialIdeal};

/// A parsed ideal along with its generators in file order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedIdeal {
    pub ideal: MonomialIdeal,
    /// Generators as listed, redundant entries removed.
    pub listed: Vec<Monomial>,
    pub warnings: Vec<String>,
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Meaningful lines as `(line number, column offset, trimmed text)`.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let trimmed = body.trim();
        if trimmed.is_empty() {
            None
        } else {
            let col = body.len() - body.trim_start().len() + 1;
            Some((i + 1, col, trimmed))
        }
    })
}

fn parse_header(line: usize, col: usize, s: &str) -> Result<usize> {
    let rest = s
        .strip_prefix("n")
        .map(str::trim_start)
        .and_then(|r| r.strip_prefix('='))
        .ok_or_else(|| parse_err(line, col, "expected header `n=<number of variables>`"))?;
    rest.trim().parse::<usize>().map_err(|_| {
        parse_err(
            line,
            col,
            format!("invalid variable count `{}`", rest.trim()),
        )
    })
}

/// Parses a monomial such as `x1^2*x3` or `a^2*b`. `line`/`col` locate `s` for errors.
pub fn parse_monomial(s: &str, n: usize, line: usize, col: usize) -> Result<Monomial> {
    let mut exps = vec![0u32; n];
    if s.trim() == "1" {
        return Ok(Monomial::new(exps));
    }
    let mut offset = 0;
    for factor in s.split('*') {
        let fcol = col + offset + (factor.len() - factor.trim_start().len());
        offset += factor.len() + 1;
        let f = factor.trim();
        if f.is_empty() {
            return Err(parse_err(line, fcol, "empty factor"));
        }
        let (var, exp) = match f.split_once('^') {
            Some((v, e)) => {
                let e = e
                    .trim()
                    .parse::<u32>()
                    .map_err(|_| parse_err(line, fcol, format!("invalid exponent in `{f}`")))?;
                (v.trim(), e)
            }
            None => (f, 1),
        };
        let index = if let Some(num) = var.strip_prefix('x') {
            num.parse::<usize>()
                .ok()
                .filter(|&k| k >= 1)
                .ok_or_else(|| parse_err(line, fcol, format!("invalid variable `{var}`")))?
                - 1
        } else {
            let mut chars = var.chars();
            match (chars.next(), chars.next()) {
                (Some(c @ 'a'..='w'), None) => c as usize - 'a' as usize,
                _ => return Err(parse_err(line, fcol, format!("invalid variable `{var}`"))),
            }
        };
        if index >= n {
            return Err(parse_err(
                line,
                fcol,
                format!("variable `{var}` is outside the {n} declared variables"),
            ));
        }
        exps[index] += exp;
    }
    Ok(Monomial::new(exps))
}

pub fn parse_ideal(text: &str) -> Result<ParsedIdeal> {
    let mut lines = content_lines(text);
    let (hl, hc, header) = lines.next().ok_or_else(|| parse_err(1, 1, "empty input"))?;
    let n = parse_header(hl, hc, header)?;
    let mut listed = Vec::new();
    let mut zero_line = None;
    for (line, col, s) in lines {
        if s == "0" {
            zero_line = Some(line);
            continue;
        }
        listed.push(parse_monomial(s, n, line, col)?);
    }
    if let Some(line) = zero_line {
        if !listed.is_empty() {
            return Err(parse_err(line, 1, "`0` must be the only generator"));
        }
        return Ok(ParsedIdeal {
            ideal: MonomialIdeal::zero(n),
            listed,
            warnings: vec![],
        });
    }
    if listed.is_empty() {
        return Err(parse_err(
            hl,
            hc,
            "no generators; write `0` for the zero ideal",
        ));
    }
    let ideal = MonomialIdeal::new(n, listed.iter().cloned())?;
    let mut warnings = Vec::new();
    let mut kept: Vec<Monomial> = Vec::new();
    for m in listed {
        if ideal.gens().contains(&m) && !kept.contains(&m) {
            kept.push(m);
        } else {
            warnings.push(format!("dropped redundant generator {m}"));
        }
    }
    Ok(ParsedIdeal {
        ideal,
        listed: kept,
        warnings,
    })
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let mut lines = content_lines(text);
    let (hl, hc, header) = lines.next().ok_or_else(|| parse_err(1, 1, "empty input"))?;
    let n = parse_header(hl, hc, header)?;
    let mut faces = Vec::new();
    for (line, col, s) in lines {
        let inner = s
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| parse_err(line, col, "expected a facet `{i,j,...}`"))?;
        let mut vs = Vec::new();
        if !inner.trim().is_empty() {
            for tok in inner.split(',') {
                let t = tok.trim();
                let v = t
                    .parse::<usize>()
                    .ok()
                    .filter(|&v| (1..=n).contains(&v))
                    .ok_or_else(|| {
                        parse_err(line, col, format!("invalid vertex `{t}` for n = {n}"))
                    })?;
                vs.push(v - 1);
            }
        }
        faces.push(Face::from_vertices(vs));
    }
    SimplicialComplex::new(n, faces)
}

/// Writes an ideal in the file format, generators in canonical order.
pub fn serialize_ideal(ideal: &MonomialIdeal) -> String {
    let mut out = format!("n={}\n", ideal.n());
    if ideal.is_zero() {
        out.push_str("0\n");
    }
    for g in ideal.gens() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

pub fn serialize_complex(delta: &SimplicialComplex) -> String {
    let mut out = format!("n={}\n", delta.n());
    for f in delta.facets() {
        out.push_str(&f.to_string());
        out.push('\n');
    }
    out
}
