//! Text formats: the ring-definition expression grammar, Cayley table
//! files, and witness matrix files.
//!
//! The expression grammar mirrors the construction algebra:
//!
//! ```text
//! expr := zmod(N)
//!       | matrix(expr, K)
//!       | group_algebra(P, K1 [, K2 ...])
//!       | quaternion_z2
//!       | direct_sum(expr, expr)
//!       | poly_quotient(P, N)
//!       | triangular(KIND, N, expr)        KIND in {s, a, b, u, v}
//!       | unitify(expr, P)
//!       | cayley(PATH)
//! ```
//!
//! Cayley table files list `size N`, the `add` and `mul` tables row-major,
//! and the `star` row; witness matrix files carry a `modulus M` header
//! followed by the square matrix, row-major. `#` starts a line comment in
//! both file formats.

use crate::error::{Error, Result};
use crate::ring::{CayleySpec, ConstructionSpec, TriangularKind};

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn line_col(&self) -> (usize, usize) {
        let mut line = 1;
        let mut col = 1;
        for c in self.src[..self.pos].chars() {
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        (line, col)
    }

    fn err(&self, message: impl Into<String>) -> Error {
        let (line, column) = self.line_col();
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.rest().chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn eat(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.err(format!(
                "expected `{c}`, found {}",
                self.rest()
                    .chars()
                    .next()
                    .map_or("end of input".to_string(), |f| format!("`{f}`"))
            )))
        }
    }

    fn peek_is(&mut self, c: char) -> bool {
        self.skip_ws();
        self.rest().starts_with(c)
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.rest().chars().next() {
            if c.is_ascii_alphanumeric() || c == '_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        if self.pos == start {
            Err(self.err("expected an identifier"))
        } else {
            Ok(self.src[start..self.pos].to_ascii_lowercase())
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self
            .rest()
            .chars()
            .next()
            .map(|c| c.is_ascii_digit())
            .unwrap_or(false)
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a number"));
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| self.err("number out of range"))
    }

    /// A path argument: quoted, or a bare token up to `,` / `)`.
    fn path(&mut self) -> Result<String> {
        self.skip_ws();
        if self.rest().starts_with('"') {
            self.pos += 1;
            let start = self.pos;
            while let Some(c) = self.rest().chars().next() {
                if c == '"' {
                    let s = self.src[start..self.pos].to_string();
                    self.pos += 1;
                    return Ok(s);
                }
                self.pos += c.len_utf8();
            }
            return Err(self.err("unterminated string"));
        }
        let start = self.pos;
        while let Some(c) = self.rest().chars().next() {
            if c == ',' || c == ')' || c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
        if self.pos == start {
            Err(self.err("expected a file path"))
        } else {
            Ok(self.src[start..self.pos].to_string())
        }
    }

    fn expr(&mut self) -> Result<ConstructionSpec> {
        let name = self.ident()?;
        match name.as_str() {
            "zmod" => {
                self.eat('(')?;
                let n = self.number()?;
                self.eat(')')?;
                Ok(ConstructionSpec::ZMod(n))
            }
            "matrix" => {
                self.eat('(')?;
                let base = self.expr()?;
                self.eat(',')?;
                let k = self.number()?;
                self.eat(')')?;
                Ok(ConstructionSpec::MatrixRing(
                    Box::new(base),
                    k.try_into().map_err(|_| self.err("k too large"))?,
                ))
            }
            "group_algebra" => {
                self.eat('(')?;
                let p = self.number()?;
                let mut invariants = Vec::new();
                while self.peek_is(',') {
                    self.eat(',')?;
                    invariants.push(
                        self.number()?
                            .try_into()
                            .map_err(|_| self.err("invariant too large"))?,
                    );
                }
                self.eat(')')?;
                Ok(ConstructionSpec::GroupAlgebra { p, invariants })
            }
            "quaternion_z2" => {
                if self.peek_is('(') {
                    self.eat('(')?;
                    self.eat(')')?;
                }
                Ok(ConstructionSpec::QuaternionZ2)
            }
            "direct_sum" => {
                self.eat('(')?;
                let a = self.expr()?;
                self.eat(',')?;
                let b = self.expr()?;
                self.eat(')')?;
                Ok(ConstructionSpec::DirectSum(Box::new(a), Box::new(b)))
            }
            "poly_quotient" => {
                self.eat('(')?;
                let p = self.number()?;
                self.eat(',')?;
                let n = self.number()?;
                self.eat(')')?;
                Ok(ConstructionSpec::PolyQuotient {
                    p,
                    n: n.try_into().map_err(|_| self.err("n too large"))?,
                })
            }
            "triangular" => {
                self.eat('(')?;
                let kind_tok = self.ident()?;
                let kind = (kind_tok.len() == 1)
                    .then(|| TriangularKind::from_letter(kind_tok.chars().next().unwrap()))
                    .flatten()
                    .ok_or_else(|| {
                        self.err(format!(
                            "unknown triangular kind `{kind_tok}` (use s/a/b/u/v)"
                        ))
                    })?;
                self.eat(',')?;
                let n = self.number()?;
                self.eat(',')?;
                let base = self.expr()?;
                self.eat(')')?;
                Ok(ConstructionSpec::Triangular {
                    kind,
                    n: n.try_into().map_err(|_| self.err("n too large"))?,
                    base: Box::new(base),
                })
            }
            "unitify" => {
                self.eat('(')?;
                let base = self.expr()?;
                self.eat(',')?;
                let p = self.number()?;
                self.eat(')')?;
                Ok(ConstructionSpec::Unitify {
                    base: Box::new(base),
                    p,
                })
            }
            "cayley" => {
                self.eat('(')?;
                let path = self.path()?;
                self.eat(')')?;
                let content = std::fs::read_to_string(&path)
                    .map_err(|e| self.err(format!("cannot read `{path}`: {e}")))?;
                Ok(ConstructionSpec::CayleyTable(parse_cayley_file(&content)?))
            }
            other => Err(self.err(format!(
                "unknown constructor `{other}` (expected one of zmod, matrix, group_algebra, \
                 quaternion_z2, direct_sum, poly_quotient, triangular, unitify, cayley)"
            ))),
        }
    }
}

/// Parse a construction expression. `cayley(path)` arguments are loaded
/// from the filesystem relative to the current directory.
pub fn parse_construction(text: &str) -> Result<ConstructionSpec> {
    let mut p = Parser::new(text);
    let spec = p.expr()?;
    p.skip_ws();
    if !p.rest().is_empty() {
        return Err(p.err("trailing input after expression"));
    }
    Ok(spec)
}

/// Whitespace-separated tokens with their source positions; `#` comments
/// run to end of line.
fn tokenize(content: &str) -> Vec<(usize, usize, &str)> {
    let mut out = Vec::new();
    for (ln, line) in content.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("");
        let mut col = 0;
        for tok in body.split_whitespace() {
            let at = body[col..].find(tok).unwrap() + col;
            col = at + tok.len();
            out.push((ln + 1, at + 1, tok));
        }
    }
    out
}

struct TokenReader<'a> {
    toks: Vec<(usize, usize, &'a str)>,
    idx: usize,
}

impl<'a> TokenReader<'a> {
    fn err_at(&self, message: impl Into<String>) -> Error {
        let (line, column) = if self.idx < self.toks.len() {
            (self.toks[self.idx].0, self.toks[self.idx].1)
        } else {
            self.toks.last().map(|t| (t.0, t.1)).unwrap_or((1, 1))
        };
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn keyword(&mut self, word: &str) -> Result<()> {
        match self.toks.get(self.idx) {
            Some(&(_, _, t)) if t.eq_ignore_ascii_case(word) => {
                self.idx += 1;
                Ok(())
            }
            Some(&(_, _, t)) => Err(self.err_at(format!("expected `{word}`, found `{t}`"))),
            None => Err(self.err_at(format!("expected `{word}`, found end of file"))),
        }
    }

    fn number(&mut self) -> Result<u64> {
        match self.toks.get(self.idx) {
            Some(&(_, _, t)) => {
                let v = t
                    .parse()
                    .map_err(|_| self.err_at(format!("expected a number, found `{t}`")))?;
                self.idx += 1;
                Ok(v)
            }
            None => Err(self.err_at("expected a number, found end of file")),
        }
    }

    fn numbers(&mut self, count: usize) -> Result<Vec<u64>> {
        (0..count).map(|_| self.number()).collect()
    }

    fn at_end(&self) -> bool {
        self.idx >= self.toks.len()
    }
}

/// Parse a Cayley table file: `size N`, `add` table, `mul` table, `star` row.
pub fn parse_cayley_file(content: &str) -> Result<CayleySpec> {
    let mut r = TokenReader {
        toks: tokenize(content),
        idx: 0,
    };
    r.keyword("size")?;
    let size = r.number()?;
    if size == 0 || size > 4096 {
        return Err(r.err_at(format!("cayley size {size} out of range 1..=4096")));
    }
    let nn = (size * size) as usize;
    r.keyword("add")?;
    let add = r.numbers(nn)?;
    r.keyword("mul")?;
    let mul = r.numbers(nn)?;
    r.keyword("star")?;
    let star = r.numbers(size as usize)?;
    if !r.at_end() {
        return Err(r.err_at("trailing tokens after the star row"));
    }
    for &c in add.iter().chain(&mul).chain(&star) {
        if c >= size {
            return Err(r.err_at(format!("table entry {c} out of range 0..{size}")));
        }
    }
    Ok(CayleySpec {
        size,
        add,
        mul,
        star,
    })
}

/// A witness matrix: modulus header plus row-major square entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessMatrix {
    pub modulus: u64,
    pub dim: usize,
    /// Row-major entries, already reduced mod `modulus`.
    pub entries: Vec<u64>,
}

pub fn parse_witness_matrix(content: &str) -> Result<WitnessMatrix> {
    let mut r = TokenReader {
        toks: tokenize(content),
        idx: 0,
    };
    r.keyword("modulus")?;
    let modulus = r.number()?;
    if modulus < 2 {
        return Err(r.err_at("modulus must be at least 2"));
    }
    let mut entries = Vec::new();
    while !r.at_end() {
        entries.push(r.number()? % modulus);
    }
    let dim = (entries.len() as f64).sqrt().round() as usize;
    if dim * dim != entries.len() || dim == 0 {
        return Err(r.err_at(format!(
            "expected a square matrix, got {} entries",
            entries.len()
        )));
    }
    Ok(WitnessMatrix {
        modulus,
        dim,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_nested_expressions() {
        let spec = parse_construction("unitify(zmod(3), 3)").unwrap();
        assert_eq!(spec.to_string(), "unitify(zmod(3), 3)");
        let spec = parse_construction("matrix( zmod(4), 4 )").unwrap();
        assert_eq!(spec.to_string(), "matrix(zmod(4), 4)");
        let spec = parse_construction("triangular(A, 4, zmod(2))").unwrap();
        assert_eq!(spec.to_string(), "triangular(A, 4, zmod(2))");
        let spec = parse_construction("group_algebra(2, 1, 2)").unwrap();
        assert_eq!(spec.to_string(), "group_algebra(2, 1, 2)");
    }

    #[test]
    fn reports_line_and_column() {
        let err = parse_construction("direct_sum(zmod(4),\n  bogus(3))").unwrap_err();
        match err {
            Error::Parse { line, column, .. } => {
                assert_eq!(line, 2);
                assert!(column >= 3);
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_trailing_garbage() {
        assert!(parse_construction("zmod(4) zmod(5)").is_err());
    }

    #[test]
    fn cayley_file_round_trip() {
        let text = "\
# the 2-element zero-product ring
size 2
add
0 1
1 0
mul
0 0
0 0
star
0 1
";
        let spec = parse_cayley_file(text).unwrap();
        assert_eq!(spec.size, 2);
        assert_eq!(spec.add, vec![0, 1, 1, 0]);
        assert_eq!(spec.mul, vec![0; 4]);
    }

    #[test]
    fn cayley_file_errors_carry_positions() {
        let err = parse_cayley_file("size 2\nadd\n0 1 1 9\n").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn witness_matrix_parses() {
        let text = "modulus 4\n1 1 1 1\n0 0 0 0\n0 0 0 0\n0 0 0 0\n";
        let w = parse_witness_matrix(text).unwrap();
        assert_eq!(w.dim, 4);
        assert_eq!(w.modulus, 4);
        assert_eq!(&w.entries[..4], &[1, 1, 1, 1]);
    }

    #[test]
    fn witness_matrix_rejects_non_square() {
        assert!(parse_witness_matrix("modulus 4\n1 2 3\n").is_err());
    }
}
