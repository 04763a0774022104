use crate::error::{Error, Result};

/// Parses a value list such as `1000`, `2,4,8`, `1..10`, `2..=1024:2`,
/// `pow2(1..=10)` or `pow2m1(3..=12)` into an increasing, deduplicated list.
/// Integers accept `_` separators and the `1e5` form.
pub fn parse_values(spec: &str) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for item in split_top_level(spec) {
        let item = item.trim();
        if item.is_empty() {
            return Err(Error::Parse(format!("empty item in {spec:?}")));
        }
        if let Some(inner) = strip_call(item, "pow2m1") {
            for e in parse_range(inner)? {
                out.push(pow2(e)? - 1);
            }
        } else if let Some(inner) = strip_call(item, "pow2") {
            for e in parse_range(inner)? {
                out.push(pow2(e)?);
            }
        } else {
            out.extend(parse_range(item)?);
        }
    }
    if out.is_empty() {
        return Err(Error::Parse(format!("{spec:?} selects no values")));
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn split_top_level(spec: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in spec.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&spec[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&spec[start..]);
    parts
}

fn strip_call<'a>(item: &'a str, name: &str) -> Option<&'a str> {
    item.strip_prefix(name)?.trim_start().strip_prefix('(')?.strip_suffix(')')
}

fn pow2(e: u64) -> Result<u64> {
    if e >= 63 {
        return Err(Error::Parse(format!("2^{e} is too large")));
    }
    Ok(1 << e)
}

fn parse_range(item: &str) -> Result<Vec<u64>> {
    let (body, step) = match item.split_once(':') {
        Some((b, s)) => (b, parse_int(s)?),
        None => (item, 1),
    };
    if step == 0 {
        return Err(Error::Parse(format!("zero step in {item:?}")));
    }
    let (lo, hi) = if let Some((a, b)) = body.split_once("..=") {
        (parse_int(a)?, parse_int(b)?)
    } else if let Some((a, b)) = body.split_once("..") {
        let b = parse_int(b)?;
        if b == 0 {
            return Ok(Vec::new());
        }
        (parse_int(a)?, b - 1)
    } else {
        if step != 1 {
            return Err(Error::Parse(format!("step without a range in {item:?}")));
        }
        let v = parse_int(body)?;
        (v, v)
    };
    if lo > hi {
        return Ok(Vec::new());
    }
    Ok((lo..=hi).step_by(step as usize).collect())
}

fn parse_int(s: &str) -> Result<u64> {
    let s = s.trim().replace('_', "");
    if let Ok(v) = s.parse::<u64>() {
        return Ok(v);
    }
    if let Some((m, e)) = s.split_once(['e', 'E']) {
        if let (Ok(m), Ok(e)) = (m.parse::<u64>(), e.parse::<u32>()) {
            if let Some(v) = 10u64.checked_pow(e).and_then(|p| p.checked_mul(m)) {
                return Ok(v);
            }
        }
    }
    Err(Error::Parse(format!("not a non-negative integer: {s:?}")))
}
