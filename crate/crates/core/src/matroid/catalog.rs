//! Named matroids: `uniform:r,n`, `U(r,n)`, `fano`, `directsum(E1,E2)` and
//! `file:PATH`.

use std::collections::HashMap;

use super::{parse_matroid_file, Matroid};
use crate::error::{Error, Result};
use crate::parse::Cursor;

pub fn catalog(expr: &str) -> Result<Matroid> {
    catalog_with(expr, &HashMap::new())
}

/// Like [`catalog`], but bare names are first looked up in `bindings`.
pub fn catalog_with(expr: &str, bindings: &HashMap<String, Matroid>) -> Result<Matroid> {
    let mut cur = Cursor::new(expr);
    let m = parse_matroid(&mut cur, bindings)?;
    if !cur.at_end() {
        return Err(cur.error("trailing input"));
    }
    Ok(m)
}

pub(crate) fn parse_matroid(
    cur: &mut Cursor<'_>,
    bindings: &HashMap<String, Matroid>,
) -> Result<Matroid> {
    if cur.eat("uniform:") {
        let r = cur.uint()?;
        cur.expect(",")?;
        let n = cur.uint()?;
        return Matroid::uniform(r, n);
    }
    if cur.eat("U(") {
        let r = cur.uint()?;
        cur.expect(",")?;
        let n = cur.uint()?;
        cur.expect(")")?;
        return Matroid::uniform(r, n);
    }
    if cur.eat("directsum(") {
        let left = parse_matroid(cur, bindings)?;
        cur.expect(",")?;
        let right = parse_matroid(cur, bindings)?;
        cur.expect(")")?;
        return left.direct_sum(&right);
    }
    if cur.eat("file:") {
        let path = cur.raw_argument();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
        return parse_matroid_file(&text);
    }
    let name = cur.word();
    if let Some(m) = bindings.get(name) {
        return Ok(m.clone());
    }
    match name {
        "fano" => Ok(Matroid::fano()),
        "" => Err(cur.error("expected a matroid expression")),
        other => Err(Error::Parse(format!("unknown matroid `{other}`"))),
    }
}
