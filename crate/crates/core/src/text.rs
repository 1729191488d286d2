//! Text format for polynomials:
//!
//! ```text
//! poly := rank ';' term*
//! rank := 'A' int
//! term := ('w[' int ',' int ']' | 'kr[' int ',' int ',' int ']') ('^' int)?
//! ```
//!
//! `w[i,a]` is `ω_{i,a}`, `kr[i,a,r]` is `ω_{i,a,r}`, `^m` repeats a term.
//! Whitespace is allowed between tokens. The printer emits fundamentals in
//! `(node, center)` order, with `^m` for repeated factors.

use std::fmt;

use crate::dynkin::DynkinA;
use crate::error::{Error, Result};
use crate::weights::{DrinfeldPolynomial, FundamentalWeight, KrFactor};

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            self.err(format!("expected `{token}`"))
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.src.as_bytes();
        let mut end = start;
        if end < bytes.len() && (bytes[end] == b'-' || bytes[end] == b'+') {
            end += 1;
        }
        let digits = end;
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        if end == digits {
            return self.err("expected an integer");
        }
        match self.src[start..end].parse() {
            Ok(v) => {
                self.pos = end;
                Ok(v)
            }
            Err(_) => self.err("integer out of range"),
        }
    }

    fn positive(&mut self, what: &str) -> Result<i64> {
        let at = self.pos;
        let v = self.int()?;
        if v < 1 {
            return Err(Error::Parse {
                pos: at,
                msg: format!("{what} must be at least 1"),
            });
        }
        Ok(v)
    }

    fn node(&mut self, diagram: DynkinA) -> Result<usize> {
        self.skip_ws();
        let at = self.pos;
        let v = self.int()?;
        if v < 1 || v as u64 > diagram.rank() as u64 {
            return Err(Error::Parse {
                pos: at,
                msg: format!("node {v} is outside {diagram}"),
            });
        }
        Ok(v as usize)
    }
}

/// Parses `"A3; w[1,3] w[2,0]^2 kr[3,1,2]"`.
pub fn parse_polynomial(src: &str) -> Result<DrinfeldPolynomial> {
    let mut cur = Cursor { src, pos: 0 };
    cur.expect("A")?;
    let rank = cur.positive("rank")?;
    let diagram = DynkinA::new(rank as usize)?;
    cur.expect(";")?;
    let mut p = DrinfeldPolynomial::one(diagram);
    while cur.peek().is_some() {
        let factors: Vec<FundamentalWeight> = if cur.eat("kr[") {
            let i = cur.node(diagram)?;
            cur.expect(",")?;
            let a = cur.int()?;
            cur.expect(",")?;
            let r = cur.positive("KR length")?;
            cur.expect("]")?;
            let r = u32::try_from(r).or_else(|_| cur.err("KR length out of range"))?;
            KrFactor::new(i, a, r)?.fundamentals().collect()
        } else if cur.eat("w[") {
            let i = cur.node(diagram)?;
            cur.expect(",")?;
            let a = cur.int()?;
            cur.expect("]")?;
            vec![FundamentalWeight::new(i, a)]
        } else {
            return cur.err("expected `w[` or `kr[`");
        };
        let times = if cur.eat("^") {
            cur.positive("multiplicity")? as usize
        } else {
            1
        };
        for w in factors {
            p.push(w, times)?;
        }
    }
    Ok(p)
}

impl fmt::Display for DrinfeldPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.diagram())?;
        for (w, m) in self.factors() {
            write!(f, " {w}")?;
            if m > 1 {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for DrinfeldPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_polynomial(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(n: usize, ws: &[(usize, i64)]) -> DrinfeldPolynomial {
        DrinfeldPolynomial::new(
            DynkinA::new(n).unwrap(),
            ws.iter().map(|&(i, a)| FundamentalWeight::new(i, a)),
        )
        .unwrap()
    }

    #[test]
    fn parses_examples() {
        assert_eq!(
            parse_polynomial("A3; w[1,3] w[2,0] w[3,3]").unwrap(),
            poly(3, &[(1, 3), (2, 0), (3, 3)])
        );
        assert_eq!(
            parse_polynomial("A3; w[1,0]^2 w[2,3]").unwrap(),
            poly(3, &[(1, 0), (1, 0), (2, 3)])
        );
        assert_eq!(parse_polynomial("A3; kr[2,1,2]").unwrap(), poly(3, &[(2, 0), (2, 2)]));
        assert_eq!(
            parse_polynomial("  A3 ;w[1,-3]w[ 2 , 0 ]  kr[1,0,2]^2 ").unwrap(),
            poly(3, &[(1, -3), (2, 0), (1, -1), (1, 1), (1, -1), (1, 1)])
        );
        assert!(parse_polynomial("A4;").unwrap().is_one());
    }

    #[test]
    fn reports_errors_with_positions() {
        let cases = [
            ("B3; w[1,0]", 0),
            ("A3 w[1,0]", 3),
            ("A3; w[4,0]", 6),
            ("A3; w[0,0]", 6),
            ("A3; kr[1,0,0]", 11),
            ("A3; w[1,0]^0", 11),
            ("A3; w[1,0] x", 11),
            ("A3; w[1,]", 8),
            ("A0;", 1),
        ];
        for (src, at) in cases {
            match parse_polynomial(src) {
                Err(Error::Parse { pos, .. }) => assert_eq!(pos, at, "{src}"),
                other => panic!("{src}: {other:?}"),
            }
        }
    }

    #[test]
    fn prints_canonically() {
        assert_eq!(poly(3, &[(2, 3), (1, 0), (1, 0)]).to_string(), "A3; w[1,0]^2 w[2,3]");
        assert_eq!(DrinfeldPolynomial::one(DynkinA::new(2).unwrap()).to_string(), "A2;");
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(n in 1usize..6, ws in prop::collection::vec((0usize..6, -30i64..30), 0..10)) {
            let p = poly(n, &ws.into_iter().map(|(i, a)| (i % n + 1, a)).collect::<Vec<_>>());
            prop_assert_eq!(parse_polynomial(&p.to_string()).unwrap(), p);
        }
    }
}
