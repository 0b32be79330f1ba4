//! Parameter-grid DSL for the report command: comma-separated
//! `var=lo..hi` ranges over `i`, `j`, `m`, where an endpoint is an integer
//! or a linear term in an earlier variable, e.g.
//! `i=3..5,j=2i+1..2i+3,m=1..4`.

use anyhow::{bail, Context, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Term {
    coefficient: i64,
    variable: Option<char>,
    offset: i64,
}

impl Term {
    fn eval(&self, i: i64, j: i64) -> Result<i64> {
        let base = match self.variable {
            None => 0,
            Some('i') => i,
            Some('j') => j,
            Some(v) => bail!("endpoint references {v:?}, only earlier variables i/j are allowed"),
        };
        Ok(self.coefficient * base + self.offset)
    }
}

fn parse_term(raw: &str) -> Result<Term> {
    let s = raw.trim();
    if s.is_empty() {
        bail!("empty range endpoint");
    }
    let bytes = s.as_bytes();
    let mut pos = 0;
    let mut leading = String::new();
    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
        leading.push(bytes[pos] as char);
        pos += 1;
    }
    if pos == bytes.len() {
        return Ok(Term {
            coefficient: 0,
            variable: None,
            offset: leading.parse().context("endpoint is not an integer")?,
        });
    }
    let variable = bytes[pos] as char;
    if !variable.is_ascii_alphabetic() {
        bail!("cannot parse endpoint {s:?}");
    }
    pos += 1;
    let coefficient: i64 = if leading.is_empty() {
        1
    } else {
        leading.parse().context("bad coefficient")?
    };
    if pos == bytes.len() {
        return Ok(Term {
            coefficient,
            variable: Some(variable),
            offset: 0,
        });
    }
    let sign = match bytes[pos] as char {
        '+' => 1,
        '-' => -1,
        other => bail!("expected + or - after {variable}, found {other:?}"),
    };
    let offset: i64 = s[pos + 1..].trim().parse().context("bad offset")?;
    Ok(Term {
        coefficient,
        variable: Some(variable),
        offset: sign * offset,
    })
}

#[derive(Debug, Clone)]
struct Range {
    lo: Term,
    hi: Term,
}

fn parse_range(raw: &str) -> Result<Range> {
    let (lo, hi) = raw
        .split_once("..")
        .with_context(|| format!("range {raw:?} is missing `..`"))?;
    Ok(Range {
        lo: parse_term(lo)?,
        hi: parse_term(hi)?,
    })
}

/// All `(i, j, m)` triples of the grid, in row-major order.
pub fn parse_grid(raw: &str) -> Result<Vec<(i32, i32, usize)>> {
    let mut ranges: [Option<Range>; 3] = [None, None, None];
    for part in raw.split(',') {
        let (var, range) = part
            .split_once('=')
            .with_context(|| format!("grid segment {part:?} is missing `=`"))?;
        let slot = match var.trim() {
            "i" => 0,
            "j" => 1,
            "m" => 2,
            other => bail!("unknown grid variable {other:?}, expected i, j, or m"),
        };
        if ranges[slot].is_some() {
            bail!("variable {:?} given twice", var.trim());
        }
        ranges[slot] = Some(parse_range(range.trim())?);
    }
    let [Some(ri), Some(rj), Some(rm)] = ranges else {
        bail!("grid must bind all of i, j, and m");
    };
    let mut out = Vec::new();
    for i in ri.lo.eval(0, 0)?..=ri.hi.eval(0, 0)? {
        for j in rj.lo.eval(i, 0)?..=rj.hi.eval(i, 0)? {
            for m in rm.lo.eval(i, j)?..=rm.hi.eval(i, j)? {
                if m < 1 {
                    bail!("grid produced m = {m} < 1");
                }
                out.push((
                    i32::try_from(i).context("i out of range")?,
                    i32::try_from(j).context("j out of range")?,
                    m as usize,
                ));
            }
        }
    }
    Ok(out)
}
