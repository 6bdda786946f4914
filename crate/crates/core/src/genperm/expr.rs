//! Polytope expressions.
//!
//! ```text
//! E := matroid:NAME | simplex:i,j,... | seg:i,j | point:v1,...,vn
//!    | sum(E1,...,Ek) | dilate:c*E | neg(E) | buildingset(NAME; F1; F2; ...)
//!    | file:PATH
//! ```
//!
//! `NAME` is a bound name or any matroid catalog expression. The ambient
//! dimension comes from [`Env::n`] when set, otherwise from the largest index
//! or matroid in the expression.

use std::collections::HashMap;

use super::{parse_genperm_file, SubmodularSpec};
use crate::error::{Error, Result};
use crate::matroid::{self, Matroid};
use crate::parse::Cursor;
use crate::subset::Subset;

#[derive(Clone, Debug, Default)]
pub struct Env {
    pub n: Option<usize>,
    pub matroids: HashMap<String, Matroid>,
}

impl Env {
    pub fn with_n(n: usize) -> Self {
        Env {
            n: Some(n),
            matroids: HashMap::new(),
        }
    }

    /// Environment for a pipeline run on `m`: fixes `n` and binds `M`.
    pub fn for_matroid(m: &Matroid) -> Self {
        let mut env = Env::with_n(m.n());
        env.matroids.insert("M".to_string(), m.clone());
        env
    }

    pub fn bind(mut self, name: &str, m: Matroid) -> Self {
        self.matroids.insert(name.to_string(), m);
        self
    }
}

pub fn build_polytope(expr: &str, env: &Env) -> Result<SubmodularSpec> {
    let mut cur = Cursor::new(expr);
    let ast = parse_expr(&mut cur, env)?;
    if !cur.at_end() {
        return Err(cur.error("trailing input"));
    }
    let n = match env.n {
        Some(n) => n,
        None => ast.min_n(),
    };
    if n == 0 {
        return Err(Error::parse("cannot infer the ambient dimension"));
    }
    let spec = ast.eval(n)?;
    if let Some((s, t)) = spec.submodularity_witness() {
        return Err(Error::Internal(format!(
            "polytope expression produced a non-submodular function at ({s:?}, {t:?})"
        )));
    }
    Ok(spec)
}

enum Ast {
    Matroid(Matroid),
    Simplex(Subset),
    Point(Vec<i64>),
    Sum(Vec<Ast>),
    Dilate(i64, Box<Ast>),
    Neg(Box<Ast>),
    BuildingSet(Matroid, Vec<Subset>),
    Spec(SubmodularSpec),
}

impl Ast {
    fn min_n(&self) -> usize {
        match self {
            Ast::Matroid(m) | Ast::BuildingSet(m, _) => m.n(),
            Ast::Simplex(s) => s.max_element().unwrap_or(0),
            Ast::Point(v) => v.len(),
            Ast::Sum(items) => items.iter().map(Ast::min_n).max().unwrap_or(0),
            Ast::Dilate(_, e) | Ast::Neg(e) => e.min_n(),
            Ast::Spec(s) => s.n(),
        }
    }

    fn eval(&self, n: usize) -> Result<SubmodularSpec> {
        let same_n = |found: usize| {
            if found == n {
                Ok(())
            } else {
                Err(Error::DimensionMismatch { expected: n, found })
            }
        };
        match self {
            Ast::Matroid(m) => {
                same_n(m.n())?;
                Ok(SubmodularSpec::rank(m))
            }
            Ast::Simplex(s) => SubmodularSpec::simplex(n, *s),
            Ast::Point(v) => {
                same_n(v.len())?;
                Ok(SubmodularSpec::point(v))
            }
            Ast::Sum(items) => {
                let mut acc = SubmodularSpec::point(&vec![0; n]);
                for item in items {
                    acc = acc.sum(&item.eval(n)?)?;
                }
                Ok(acc)
            }
            Ast::Dilate(c, e) => e.eval(n)?.dilate(*c),
            Ast::Neg(e) => Ok(e.eval(n)?.neg()),
            Ast::BuildingSet(m, flats) => {
                same_n(m.n())?;
                let mut acc = SubmodularSpec::point(&vec![0; n]);
                for s in Subset::all(n).filter(|s| !s.is_empty()) {
                    if flats.contains(&m.closure(s)) {
                        acc = acc.sum(&SubmodularSpec::simplex(n, s)?)?;
                    }
                }
                Ok(acc)
            }
            Ast::Spec(spec) => {
                same_n(spec.n())?;
                Ok(spec.clone())
            }
        }
    }
}

fn subset_of(list: &[i64]) -> Result<Subset> {
    let mut s = Subset::EMPTY;
    for &i in list {
        if i < 1 || i > crate::subset::MAX_GROUND as i64 {
            return Err(Error::parse(format!("index {i} out of range")));
        }
        s = s.insert(i as usize);
    }
    Ok(s)
}

fn lookup_matroid(cur: &mut Cursor<'_>, env: &Env) -> Result<Matroid> {
    matroid::catalog::parse_matroid(cur, &env.matroids)
}

fn parse_expr(cur: &mut Cursor<'_>, env: &Env) -> Result<Ast> {
    if cur.eat("matroid:") {
        return Ok(Ast::Matroid(lookup_matroid(cur, env)?));
    }
    if cur.eat("simplex:") {
        return Ok(Ast::Simplex(subset_of(&cur.int_list()?)?));
    }
    if cur.eat("seg:") {
        let list = cur.int_list()?;
        if list.len() != 2 || list[0] == list[1] {
            return Err(Error::parse(format!("seg needs two distinct indices, got {list:?}")));
        }
        return Ok(Ast::Simplex(subset_of(&list)?));
    }
    if cur.eat("point:") {
        return Ok(Ast::Point(cur.int_list()?));
    }
    if cur.eat("sum(") {
        let mut items = vec![parse_expr(cur, env)?];
        while cur.eat(",") {
            items.push(parse_expr(cur, env)?);
        }
        cur.expect(")")?;
        return Ok(Ast::Sum(items));
    }
    if cur.eat("dilate:") {
        let c = cur.int()?;
        if c < 0 {
            return Err(cur.error("dilation factor must be nonnegative"));
        }
        cur.expect("*")?;
        return Ok(Ast::Dilate(c, Box::new(parse_expr(cur, env)?)));
    }
    if cur.eat("neg(") {
        let inner = parse_expr(cur, env)?;
        cur.expect(")")?;
        return Ok(Ast::Neg(Box::new(inner)));
    }
    if cur.eat("buildingset(") {
        let m = lookup_matroid(cur, env)?;
        let mut flats = Vec::new();
        while cur.eat(";") {
            flats.push(subset_of(&cur.int_list()?)?);
        }
        cur.expect(")")?;
        return Ok(Ast::BuildingSet(m, flats));
    }
    if cur.eat("file:") {
        let path = cur.raw_argument();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
        return Ok(Ast::Spec(parse_genperm_file(&text)?));
    }
    Err(cur.error("expected a polytope expression"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(e: &[usize]) -> Subset {
        Subset::from_elements(e.iter().copied())
    }

    #[test]
    fn grammar_examples() {
        let p = build_polytope("neg(matroid:U(2,3))", &Env::default()).unwrap();
        assert_eq!(p.z(set(&[1])), 0);
        assert_eq!(p.z(set(&[1, 2])), -1);
        assert_eq!(p.z(set(&[1, 2, 3])), -2);

        let single = build_polytope("simplex:1,2,3", &Env::default()).unwrap();
        let double = build_polytope("dilate:2*simplex:1,2,3", &Env::default()).unwrap();
        assert_eq!(double, single.dilate(2).unwrap());

        let segs = build_polytope("sum(seg:1,2, seg:3,4)", &Env::with_n(4)).unwrap();
        for s in Subset::all(4) {
            let meets = [set(&[1, 2]), set(&[3, 4])]
                .iter()
                .filter(|seg| !(**seg & s).is_empty())
                .count() as i64;
            assert_eq!(segs.z(s), meets);
        }
    }

    #[test]
    fn matroid_names_resolve() {
        let env = Env::for_matroid(&Matroid::uniform(2, 4).unwrap());
        let via_binding = build_polytope("matroid:M", &env).unwrap();
        let via_catalog = build_polytope("matroid:uniform:2,4", &env).unwrap();
        assert_eq!(via_binding, via_catalog);
        let summed = build_polytope("sum(matroid:uniform:2,4,point:1,0,0,0)", &env).unwrap();
        assert_eq!(summed.total(), 3);
    }

    #[test]
    fn dimension_errors() {
        let env = Env::with_n(4);
        assert!(matches!(
            build_polytope("matroid:U(2,3)", &env),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            build_polytope("point:1,2", &env),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(build_polytope("seg:1,1", &env), Err(Error::Parse(_))));
        assert!(matches!(build_polytope("dilate:-1*seg:1,2", &env), Err(Error::Parse(_))));
        assert!(matches!(build_polytope("cube", &env), Err(Error::Parse(_))));
    }

    #[test]
    fn building_set_of_fano_lines() {
        let lines: Vec<String> = crate::matroid::fano_lines()
            .iter()
            .map(|l| l.to_string())
            .collect();
        let expr = format!("buildingset(fano; {})", lines.join("; "));
        let p = build_polytope(&expr, &Env::default()).unwrap();
        // Subsets closing to a line: the 3 pairs inside it and the line.
        let expected = 7 * 4;
        assert_eq!(p.total(), expected);
        let only_points = build_polytope("buildingset(fano; 1; 2)", &Env::default()).unwrap();
        assert_eq!(only_points, build_polytope("sum(simplex:1,simplex:2)", &Env::with_n(7)).unwrap());
    }
}
