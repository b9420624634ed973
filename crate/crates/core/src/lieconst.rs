//! The `lieconst v1` text format.
//!
//! ```text
//! # Heisenberg algebra H(1)
//! dim 3
//! [e1,e2] = e3
//! ```
//!
//! One `dim N` header, then one line per nonzero bracket `[ei,ej] = c1 ek1 + c2 ek2 ...`
//! with `i < j`. Coefficients are integers or `p/q` and default to 1; terms are
//! joined by `+` or `-`. A right-hand side of `0` is allowed. Unlisted brackets
//! are zero. `#` starts a comment.

use std::fmt::Write as _;

use thiserror::Error;

use crate::error::LieError;
use crate::lie::LieAlgebra;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: basis vector e{index} out of range for dimension {dim}")]
    IndexOutOfRange { line: usize, index: usize, dim: usize },
    #[error("invalid algebra: {0}")]
    Algebra(#[from] LieError),
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            line: self.line,
            column: self.pos + 1,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c == ' ' || c == '\t') {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.text.len()
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            self.err(format!("expected `{c}`"))
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(&f) {
            self.pos += self.peek().unwrap().len_utf8();
        }
        &self.text[start..self.pos]
    }

    fn number(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            return self.err("expected a number");
        }
        digits.parse().or_else(|_| self.err("number too large"))
    }

    /// `eN`, returning the 1-based `N`.
    fn basis(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        if self.peek() != Some('e') {
            return self.err("expected basis vector `eN`");
        }
        self.pos += 1;
        let col = self.pos;
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            self.pos = col;
            return self.err("expected index after `e`");
        }
        let n: usize = digits.parse().or_else(|_| self.err("index too large"))?;
        if n == 0 {
            self.pos = col;
            return self.err("basis indices start at 1");
        }
        Ok(n)
    }

    fn coefficient(&mut self) -> Result<Option<Rational>, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let lit = self.take_while(|c| c.is_ascii_digit() || c == '/');
        if lit.is_empty() {
            return Ok(None);
        }
        match lit.parse::<Rational>() {
            Ok(r) => Ok(Some(r)),
            Err(_) => {
                self.pos = start;
                self.err(format!("invalid coefficient `{lit}`"))
            }
        }
    }
}

/// Parses a `lieconst v1` document into a validated algebra.
pub fn parse(text: &str) -> Result<LieAlgebra, ParseError> {
    let mut dim: Option<usize> = None;
    let mut brackets: Vec<(usize, usize, Vec<Rational>)> = Vec::new();
    let mut seen = std::collections::HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut cur = Cursor {
            text: content,
            pos: 0,
            line: line_no,
        };
        if cur.at_end() {
            continue;
        }
        let Some(n) = dim else {
            if !content[cur.pos..].starts_with("dim") {
                return cur.err("expected `dim N` header");
            }
            cur.pos += 3;
            if !cur.peek().is_some_and(|c| c == ' ' || c == '\t') {
                return cur.err("expected whitespace after `dim`");
            }
            let n = cur.number()?;
            if !cur.at_end() {
                return cur.err("unexpected text after dimension");
            }
            dim = Some(n);
            continue;
        };

        cur.expect('[')?;
        let i = cur.basis()?;
        cur.expect(',')?;
        let j = cur.basis()?;
        cur.expect(']')?;
        cur.expect('=')?;
        for idx in [i, j] {
            if idx > n {
                return Err(ParseError::IndexOutOfRange {
                    line: line_no,
                    index: idx,
                    dim: n,
                });
            }
        }
        if i >= j {
            return Err(LieError::UnorderedPair { i, j }.into());
        }
        if !seen.insert((i, j)) {
            return Err(LieError::DuplicateBracket { i, j }.into());
        }

        let mut coeffs = vec![Rational::zero(); n];
        let mut first = true;
        loop {
            if cur.at_end() {
                if first {
                    return cur.err("missing right-hand side");
                }
                break;
            }
            let mut negative = false;
            match cur.peek() {
                Some('+') if !first => cur.pos += 1,
                Some('-') => {
                    cur.pos += 1;
                    negative = true;
                }
                _ if !first => return cur.err("expected `+` or `-`"),
                _ => {}
            }
            let c = cur.coefficient()?;
            cur.skip_ws();
            if cur.peek() == Some('e') {
                let k = cur.basis()?;
                if k > n {
                    return Err(ParseError::IndexOutOfRange {
                        line: line_no,
                        index: k,
                        dim: n,
                    });
                }
                let mut c = c.unwrap_or_else(Rational::one);
                if negative {
                    c = -c;
                }
                coeffs[k - 1] += &c;
            } else if first && c.as_ref().is_some_and(Rational::is_zero) && cur.at_end() {
                // `[ei,ej] = 0`
                break;
            } else {
                return cur.err("expected basis vector `eN`");
            }
            first = false;
        }
        brackets.push((i - 1, j - 1, coeffs));
    }

    let Some(n) = dim else {
        return Err(ParseError::Syntax {
            line: text.lines().count().max(1),
            column: 1,
            message: "missing `dim N` header".into(),
        });
    };
    Ok(LieAlgebra::build(n, brackets)?)
}

fn render_terms(coeffs: &[Rational]) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if !mag.is_one() {
            let _ = write!(out, "{mag} ");
        }
        let _ = write!(out, "e{}", k + 1);
    }
    out
}

/// Canonical text: header, then nonzero brackets in `(i, j)` order.
pub fn render(l: &LieAlgebra) -> String {
    let mut out = format!("dim {}\n", l.dim());
    for (i, j, c) in l.nonzero_brackets() {
        let _ = writeln!(out, "[e{},e{}] = {}", i + 1, j + 1, render_terms(c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use proptest::prelude::*;

    #[test]
    fn parse_examples() {
        assert_eq!(parse("dim 3\n[e1,e2] = e3\n").unwrap(), catalog::heisenberg(1).unwrap().algebra);
        assert_eq!(parse("dim 2").unwrap(), catalog::abelian(2).algebra);
        assert_eq!(
            parse("dim 4\n[e1,e2] = e3\n[e1,e3] = e4\n").unwrap(),
            catalog::l_3_4_1_4().algebra
        );
    }

    #[test]
    fn parse_coefficients_and_comments() {
        let text = "# comment\n\ndim 4  # header\n[e1,e2] = 2 e3 - 1/2 e4 + e4\n[ e1 , e3 ] = 0\n";
        let l = parse(text).unwrap();
        let b = l.basis_bracket(0, 1);
        assert_eq!(b[2], Rational::from(2));
        assert_eq!(b[3], Rational::new(1, 2));
        let l = parse("dim 3\n[e1,e2] = -e3\n").unwrap();
        assert_eq!(l.basis_bracket(0, 1)[2], Rational::from(-1));
    }

    #[test]
    fn render_examples() {
        assert_eq!(render(&catalog::abelian(2).algebra), "dim 2\n");
        assert_eq!(render(&catalog::heisenberg(1).unwrap().algebra), "dim 3\n[e1,e2] = e3\n");
        let l = catalog::l_3_4_1_4().algebra;
        let (q, _) = l.quotient(&crate::linalg::Subspace::coordinate(4, &[3])).unwrap();
        assert_eq!(render(&q), "dim 3\n[e1,e2] = e3\n");
        let l = parse("dim 4\n[e1,e2] = -3/6 e3 + 2 e4\n").unwrap();
        assert_eq!(render(&l), "dim 4\n[e1,e2] = -1/2 e3 + 2 e4\n");
    }

    #[test]
    fn syntax_errors_carry_position() {
        match parse("dim 3\n[e1 e2] = e3\n") {
            Err(ParseError::Syntax { line, column, .. }) => assert_eq!((line, column), (2, 5)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse(""), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse("[e1,e2] = e3"), Err(ParseError::Syntax { line: 1, .. })));
        assert!(matches!(parse("dim 3\n[e1,e2] =\n"), Err(ParseError::Syntax { line: 2, .. })));
        assert!(matches!(parse("dim 3\n[e1,e2] = e3 e1\n"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse("dim 3\n[e1,e2] = 1/0 e3\n"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse("dim 3\n[e0,e2] = e3\n"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse("dim3\n"), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn semantic_errors() {
        assert!(matches!(
            parse("dim 3\n[e1,e4] = e3\n"),
            Err(ParseError::IndexOutOfRange { index: 4, .. })
        ));
        assert!(matches!(
            parse("dim 3\n[e1,e2] = e7\n"),
            Err(ParseError::IndexOutOfRange { index: 7, .. })
        ));
        assert!(matches!(
            parse("dim 3\n[e2,e1] = e3\n"),
            Err(ParseError::Algebra(LieError::UnorderedPair { .. }))
        ));
        assert!(matches!(
            parse("dim 3\n[e1,e2] = e3\n[e1,e2] = e3\n"),
            Err(ParseError::Algebra(LieError::DuplicateBracket { .. }))
        ));
        assert!(matches!(
            parse("dim 3\n[e1,e2] = e2\n[e1,e3] = e3\n[e2,e3] = e1\n"),
            Err(ParseError::Algebra(LieError::JacobiViolation { .. }))
        ));
    }

    fn arb_algebra() -> impl Strategy<Value = LieAlgebra> {
        let bases: Vec<LieAlgebra> = catalog::entries(2, 2).into_iter().map(|e| e.algebra).collect();
        (0..bases.len(), proptest::collection::vec(-3i64..=3, 64), 1i64..=4).prop_map(
            move |(idx, entries, scale)| {
                let l = &bases[idx];
                let n = l.dim();
                // identity plus a strictly upper triangular part, columns scaled: invertible
                let mut p = crate::linalg::Matrix::identity(n);
                for i in 0..n {
                    for j in i + 1..n {
                        p[(i, j)] = Rational::from(entries[(i * n + j) % entries.len()]);
                    }
                }
                if n > 0 {
                    p[(n - 1, n - 1)] = Rational::from(scale);
                }
                l.change_of_basis(&p).unwrap()
            },
        )
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(l in arb_algebra()) {
            let text = render(&l);
            prop_assert_eq!(parse(&text).unwrap(), l);
        }
    }
}
