//! Textual monomials: `x1*x3^2` or the exponent vector `[1,0,2]`.
//!
//! Indices in the text are 1-based. Whitespace is ignored everywhere.

use crate::error::{Error, Result};
use crate::monomial::Monomial;

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn error(&mut self, message: String) -> Error {
        self.skip_ws();
        Error::Parse { offset: self.pos, message }
    }

    fn number(&mut self, what: &str) -> Result<(u32, usize)> {
        self.skip_ws();
        let start = self.pos;
        let digits = self.text[start..].chars().take_while(char::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error(format!("expected {what}")));
        }
        self.pos += digits;
        let value = self.text[start..self.pos]
            .parse()
            .map_err(|_| Error::Parse { offset: start, message: format!("{what} too large") })?;
        Ok((value, start))
    }

    fn finish(&mut self) -> Result<()> {
        if self.peek().is_some() {
            Err(self.error("unexpected trailing input".into()))
        } else {
            Ok(())
        }
    }
}

/// Parse a monomial of `k[x1..xn]`. Repeated factors multiply.
pub fn parse_monomial(text: &str, n: usize) -> Result<Monomial> {
    let mut cur = Cursor { text, pos: 0 };
    let mut exps = vec![0u32; n];
    if cur.eat('[') {
        let mut read = Vec::new();
        if !cur.eat(']') {
            loop {
                read.push(cur.number("exponent")?.0);
                if cur.eat(']') {
                    break;
                }
                cur.expect(',')?;
            }
        }
        cur.finish()?;
        if read.len() != n {
            return Err(Error::Parse { offset: 0, message: format!("expected {n} exponents, found {}", read.len()) });
        }
        return Ok(Monomial::new(read));
    }
    loop {
        cur.expect('x')?;
        let (index, at) = cur.number("variable index")?;
        if index == 0 {
            return Err(Error::Parse { offset: at, message: "variable indices start at 1".into() });
        }
        if index as usize > n {
            return Err(Error::IndexOutOfRange { index: index as usize, n });
        }
        let exponent = if cur.eat('^') {
            let (e, at) = cur.number("exponent")?;
            if e == 0 {
                return Err(Error::Parse { offset: at, message: "exponents must be positive".into() });
            }
            e
        } else {
            1
        };
        let slot = &mut exps[index as usize - 1];
        *slot = slot
            .checked_add(exponent)
            .ok_or_else(|| Error::Parse { offset: at, message: "exponent overflow".into() })?;
        if !cur.eat('*') {
            break;
        }
    }
    cur.finish()?;
    Ok(Monomial::new(exps))
}

/// Comma-separated list of monomials. Commas inside `[...]` belong to the
/// vector form.
pub fn parse_monomial_list(text: &str, n: usize) -> Result<Vec<Monomial>> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, c) in text.char_indices().chain(std::iter::once((text.len(), ','))) {
        match c {
            '[' => depth += 1,
            ']' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                let piece = &text[start..i];
                out.push(parse_monomial(piece, n).map_err(|e| match e {
                    Error::Parse { offset, message } => Error::Parse { offset: offset + start, message },
                    other => other,
                })?);
                start = i + 1;
            }
            _ => {}
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        assert_eq!(parse_monomial("x1*x3^2", 4).unwrap(), Monomial::new(vec![1, 0, 2, 0]));
        assert_eq!(parse_monomial("[0,1,2]", 3).unwrap(), Monomial::new(vec![0, 1, 2]));
        assert_eq!(parse_monomial("x1*x1*x2", 3).unwrap(), Monomial::new(vec![2, 1, 0]));
        assert_eq!(parse_monomial(" x2 ^ 3 * x1 ", 3).unwrap(), Monomial::new(vec![1, 3, 0]));
    }

    #[test]
    fn errors() {
        assert_eq!(parse_monomial("x5", 4), Err(Error::IndexOutOfRange { index: 5, n: 4 }));
        assert!(matches!(parse_monomial("x1*", 2), Err(Error::Parse { offset: 3, .. })));
        assert!(matches!(parse_monomial("x1 y2", 2), Err(Error::Parse { offset: 3, .. })));
        assert!(matches!(parse_monomial("x0", 2), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse_monomial("x1^0", 2), Err(Error::Parse { offset: 3, .. })));
        assert!(matches!(parse_monomial("[1,2]", 3), Err(Error::Parse { .. })));
        assert!(matches!(parse_monomial("", 3), Err(Error::Parse { offset: 0, .. })));
    }

    #[test]
    fn lists() {
        let l = parse_monomial_list("x2^3, x1*x2^2,[1,1,1]", 3).unwrap();
        assert_eq!(l, vec![Monomial::new(vec![0, 3, 0]), Monomial::new(vec![1, 2, 0]), Monomial::new(vec![1, 1, 1])]);
        assert!(matches!(parse_monomial_list("x1,x2*", 2), Err(Error::Parse { offset: 6, .. })));
    }

    proptest! {
        #[test]
        fn round_trip(exps in proptest::collection::vec(0u32..5, 1..6)) {
            let m = Monomial::new(exps);
            prop_assume!(!m.is_one());
            let text = m.to_string();
            prop_assert_eq!(parse_monomial(&text, m.n()).unwrap(), m.clone());
            let vector = format!("{:?}", m.exponents()).replace(' ', "");
            prop_assert_eq!(parse_monomial(&vector, m.n()).unwrap(), m);
        }
    }
}
