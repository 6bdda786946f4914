//! Raw submodular function files.
//!
//! ```text
//! genperm n=2
//! 1:1
//! 2:1
//! 1,2:1
//! ```
//!
//! Every nonempty subset must appear exactly once.

use super::SubmodularSpec;
use crate::error::{Error, Result};
use crate::subset::Subset;

pub fn parse_genperm_file(text: &str) -> Result<SubmodularSpec> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::parse("empty genperm file"))?;
    let n: usize = header
        .strip_prefix("genperm")
        .and_then(|rest| rest.trim().strip_prefix("n="))
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| Error::parse(format!("expected `genperm n=<int>`, got `{header}`")))?;
    if n > super::GENPERM_CAP {
        return Err(Error::CapExceeded {
            n,
            cap: super::GENPERM_CAP,
            what: "submodular function tables",
        });
    }
    let mut z: Vec<Option<i64>> = vec![None; 1 << n];
    z[0] = Some(0);
    for line in lines {
        let (set, value) = line
            .split_once(':')
            .ok_or_else(|| Error::parse(format!("expected `i,j,...:value`, got `{line}`")))?;
        let mut s = Subset::EMPTY;
        for tok in set.split(',') {
            let i: usize = tok
                .trim()
                .parse()
                .map_err(|_| Error::parse(format!("bad index `{tok}` in `{line}`")))?;
            if i == 0 || i > n {
                return Err(Error::parse(format!("index {i} outside [1, {n}]")));
            }
            s = s.insert(i);
        }
        let value: i64 = value
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("bad value in `{line}`")))?;
        let slot = &mut z[s.bits() as usize];
        if slot.is_some() {
            return Err(Error::parse(format!("subset {s:?} listed twice")));
        }
        *slot = Some(value);
    }
    let table = z
        .iter()
        .enumerate()
        .map(|(bits, v)| {
            v.ok_or_else(|| {
                Error::parse(format!("missing value for {:?}", Subset::from_bits(bits as u64)))
            })
        })
        .collect::<Result<Vec<i64>>>()?;
    SubmodularSpec::new(n, table)
}

pub fn write_genperm_file(spec: &SubmodularSpec) -> String {
    let mut out = format!("genperm n={}\n", spec.n());
    for s in Subset::all(spec.n()).skip(1) {
        out.push_str(&format!("{s}:{}\n", spec.z(s)));
    }
    out
}
