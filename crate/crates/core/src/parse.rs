//! Character cursor shared by the matroid catalog and polytope grammars.

use crate::error::{Error, Result};

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    pub fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    pub fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    /// Consumes `token` if the input continues with it.
    pub fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{token}`")))
        }
    }

    pub fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at `{}`", self.rest()))
    }

    pub fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let rest = self.rest();
        let len = rest
            .char_indices()
            .take_while(|&(k, c)| c.is_ascii_digit() || (k == 0 && (c == '-' || c == '+')))
            .count();
        let text = &rest[..len];
        let value = text
            .parse::<i64>()
            .map_err(|_| self.error("expected an integer"))?;
        self.pos += len;
        Ok(value)
    }

    pub fn uint(&mut self) -> Result<usize> {
        let v = self.int()?;
        usize::try_from(v).map_err(|_| self.error("expected a nonnegative integer"))
    }

    /// A comma-separated integer list. A comma only continues the list when
    /// an integer follows it, so lists can sit inside argument lists.
    pub fn int_list(&mut self) -> Result<Vec<i64>> {
        let mut out = vec![self.int()?];
        loop {
            let save = self.pos;
            if self.eat(",") {
                self.skip_ws();
                let next = self.rest().chars().next();
                let starts_int = matches!(next, Some(c) if c.is_ascii_digit() || c == '-');
                if starts_int {
                    out.push(self.int()?);
                    continue;
                }
            }
            self.pos = save;
            return Ok(out);
        }
    }

    /// An identifier-like word: letters, digits, `_`, `.`, `/`, `-`.
    pub fn word(&mut self) -> &'a str {
        self.skip_ws();
        let rest = self.rest();
        let len = rest
            .char_indices()
            .take_while(|&(_, c)| c.is_ascii_alphanumeric() || "_./-~".contains(c))
            .map(|(k, c)| k + c.len_utf8())
            .last()
            .unwrap_or(0);
        self.pos += len;
        &rest[..len]
    }

    /// Everything up to (not including) the first unbalanced `)` or a
    /// top-level `,`/`;`.
    pub fn raw_argument(&mut self) -> &'a str {
        self.skip_ws();
        let rest = self.rest();
        let mut depth = 0i32;
        let mut end = rest.len();
        for (k, c) in rest.char_indices() {
            match c {
                '(' => depth += 1,
                ')' if depth == 0 => {
                    end = k;
                    break;
                }
                ')' => depth -= 1,
                ',' | ';' if depth == 0 => {
                    end = k;
                    break;
                }
                _ => {}
            }
        }
        self.pos += end;
        rest[..end].trim_end()
    }
}
