//! File formats and the front expression language.
//!
//! Measures are JSON arrays of `{"n": "p/q"}` maps; families are text files
//! with one set per line (`{1,3,7}`), or a JSON array of element arrays.
//! Front expressions: `schreier`, `cube(d)`, `oplus(a,b)`, `otimes(a,b)`,
//! `envelope(file)`.

use std::path::Path;

use anyhow::{bail, Context};
use idealab_core::fronts::{uniform_envelope, UniformFront};
use idealab_core::measures::RationalMeasure;
use idealab_core::sets::{CompactFamily, FinSet, SetFamily};

pub fn load_measures(path: &Path) -> anyhow::Result<Vec<RationalMeasure>> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("read measures from {}", path.display()))?;
    let value: serde_json::Value = serde_json::from_str(&text).context("parse measures JSON")?;
    let arr = value.as_array().context("measure file must be a JSON array of maps")?;
    arr.iter()
        .map(|v| RationalMeasure::from_json(v).map_err(anyhow::Error::msg))
        .collect()
}

pub fn load_family(path: &Path, window: u32) -> anyhow::Result<SetFamily> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("read family from {}", path.display()))?;
    let trimmed = text.trim_start();
    let members: Vec<FinSet> = if trimmed.starts_with('[') {
        let arr: Vec<Vec<u32>> = serde_json::from_str(trimmed).context("parse family JSON")?;
        arr.into_iter()
            .map(|elems| FinSet::try_from_iter(elems).map_err(anyhow::Error::from))
            .collect::<anyhow::Result<_>>()?
    } else {
        text.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| l.parse::<FinSet>().map_err(anyhow::Error::from))
            .collect::<anyhow::Result<_>>()?
    };
    let max = members.iter().filter_map(FinSet::max_elem).max().map_or(0, |m| m + 1);
    SetFamily::new(members, window.max(max)).map_err(anyhow::Error::from)
}

pub fn parse_set(text: &str) -> anyhow::Result<FinSet> {
    text.parse::<FinSet>().map_err(anyhow::Error::from)
}

/// Parse a front expression; `envelope(file)` loads a family, closes it
/// downward, and envelopes it over the given window.
pub fn parse_front(expr: &str, window: u32) -> anyhow::Result<UniformFront> {
    let expr = expr.trim();
    if expr.eq_ignore_ascii_case("schreier") {
        return Ok(UniformFront::Schreier);
    }
    if let Some(inner) = call_arg(expr, "cube") {
        let d: u32 = inner.trim().parse().context("cube(d) takes a natural number")?;
        return Ok(UniformFront::cube(d));
    }
    if let Some(inner) = call_arg(expr, "oplus") {
        let (a, b) = split_two(inner)?;
        return Ok(UniformFront::oplus(parse_front(a, window)?, parse_front(b, window)?));
    }
    if let Some(inner) = call_arg(expr, "otimes") {
        let (a, b) = split_two(inner)?;
        return Ok(UniformFront::otimes(parse_front(a, window)?, parse_front(b, window)?));
    }
    if let Some(inner) = call_arg(expr, "envelope") {
        let fam = load_family(Path::new(inner.trim()), window)?;
        let compact = CompactFamily::generated_by(fam.members().iter().copied(), fam.window())
            .map_err(anyhow::Error::from)?;
        return Ok(uniform_envelope(&compact, &FinSet::window(window)));
    }
    bail!("unknown front expression {expr:?}; expected schreier, cube(d), oplus(a,b), otimes(a,b) or envelope(file)")
}

fn call_arg<'a>(expr: &'a str, name: &str) -> Option<&'a str> {
    expr.strip_prefix(name)
        .map(str::trim_start)
        .and_then(|rest| rest.strip_prefix('('))
        .and_then(|rest| rest.strip_suffix(')'))
}

/// Split `a,b` at the top-level comma.
fn split_two(inner: &str) -> anyhow::Result<(&str, &str)> {
    let mut depth = 0usize;
    for (i, c) in inner.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => return Ok((&inner[..i], &inner[i + 1..])),
            _ => {}
        }
    }
    bail!("expected two comma-separated arguments in {inner:?}")
}

pub fn parse_coeffs(text: &str, len: usize) -> anyhow::Result<Vec<idealab_core::Rat>> {
    let mut out = Vec::new();
    for part in text.split(',') {
        out.push(idealab_core::rat::parse_rat(part).map_err(anyhow::Error::msg)?);
    }
    while out.len() < len {
        out.push(idealab_core::rat::rint(1));
    }
    Ok(out)
}
