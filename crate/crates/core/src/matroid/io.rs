//! Plain-text matroid files.
//!
//! ```text
//! matroid n=4 r=2
//! # one basis per line, 1-based indices
//! 1 2
//! 1 3
//! ```
//!
//! A rank-0 matroid has the single empty basis and no basis lines.

use super::Matroid;
use crate::error::{Error, Result};
use crate::subset::Subset;

pub fn parse_matroid_file(text: &str) -> Result<Matroid> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty matroid file".into()))?;
    let (n, r) = parse_header(header)?;
    let mut bases = Vec::new();
    for line in lines {
        let mut b = Subset::EMPTY;
        for tok in line.split_whitespace() {
            let i: usize = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad element `{tok}` in `{line}`")))?;
            if i == 0 || i > n {
                return Err(Error::Parse(format!("element {i} outside [1, {n}]")));
            }
            b = b.insert(i);
        }
        bases.push(b);
    }
    if r == 0 && bases.is_empty() {
        bases.push(Subset::EMPTY);
    }
    let m = Matroid::validate(n, bases)?;
    if m.rank() != r {
        return Err(Error::Parse(format!(
            "header declares r={r} but bases have {} elements",
            m.rank()
        )));
    }
    Ok(m)
}

fn parse_header(header: &str) -> Result<(usize, usize)> {
    let mut parts = header.split_whitespace();
    if parts.next() != Some("matroid") {
        return Err(Error::Parse(format!("expected `matroid n=.. r=..`, got `{header}`")));
    }
    let mut n = None;
    let mut r = None;
    for part in parts {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("bad header field `{part}`")))?;
        let value: usize = value
            .parse()
            .map_err(|_| Error::Parse(format!("bad header value `{part}`")))?;
        match key {
            "n" => n = Some(value),
            "r" => r = Some(value),
            _ => return Err(Error::Parse(format!("unknown header field `{key}`"))),
        }
    }
    match (n, r) {
        (Some(n), Some(r)) => Ok((n, r)),
        _ => Err(Error::Parse("header needs both n= and r=".into())),
    }
}

/// Canonical text form; parsing the output gives back the same matroid and
/// printing it again is byte-identical.
pub fn write_matroid_file(m: &Matroid) -> String {
    let mut out = format!("matroid n={} r={}\n", m.n(), m.rank());
    if m.rank() > 0 {
        for b in m.bases() {
            let line: Vec<String> = b.iter().map(|i| i.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_byte_identical() {
        for m in [
            Matroid::uniform(2, 4).unwrap(),
            Matroid::fano(),
            Matroid::uniform(0, 3).unwrap(),
        ] {
            let text = write_matroid_file(&m);
            let back = parse_matroid_file(&text).unwrap();
            assert_eq!(back, m);
            assert_eq!(write_matroid_file(&back), text);
        }
    }

    #[test]
    fn comments_and_errors() {
        let m = parse_matroid_file("# U(1,2)\nmatroid n=2 r=1\n1 # first\n2\n").unwrap();
        assert_eq!(m, Matroid::uniform(1, 2).unwrap());
        assert!(parse_matroid_file("matroid n=2 r=2\n1\n").is_err());
        assert!(parse_matroid_file("matroid n=2\n1\n").is_err());
        assert!(parse_matroid_file("matroid n=2 r=1\n3\n").is_err());
        assert!(matches!(
            parse_matroid_file("matroid n=4 r=2\n1 2\n3 4\n"),
            Err(Error::ExchangeFailure { .. })
        ));
    }
}
