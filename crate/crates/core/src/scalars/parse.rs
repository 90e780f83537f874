use super::cyclo::CycNumber;
use super::rational::Rat;
use super::scalar::Scalar;
use super::ScalarError;

/// Parses the scalar text grammar: integers, `z`, `a`, `+ - * / ^` and parentheses.
pub fn parse_scalar(src: &str) -> Result<Scalar, ScalarError> {
    let mut p = Parser { src, chars: src.char_indices().collect(), pos: 0 };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

impl std::str::FromStr for Scalar {
    type Err = ScalarError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_scalar(s)
    }
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> ScalarError {
        let at = self.chars.get(self.pos).map_or(self.src.len(), |c| c.0);
        ScalarError::Parse(format!("{what} at offset {at} in {:?}", self.src))
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.1.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn expr(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == '+' { acc + t } else { acc - t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.unary()?;
        while let Some(c @ ('*' | '/')) = self.peek() {
            self.pos += 1;
            let t = self.unary()?;
            acc = if c == '*' { acc * t } else { acc.div(&t)? };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Scalar, ScalarError> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Scalar, ScalarError> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let neg = if self.peek() == Some('-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let e = self.integer()?.to_i64().ok_or_else(|| self.err("exponent too large"))?;
            return base.powi(if neg { -e } else { e });
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<Rat, ScalarError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.1.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let lo = self.chars[start].0;
        let hi = self.chars.get(self.pos).map_or(self.src.len(), |c| c.0);
        Rat::parse_int(&self.src[lo..hi]).ok_or_else(|| self.err("bad integer"))
    }

    fn atom(&mut self) -> Result<Scalar, ScalarError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some('z') => {
                self.pos += 1;
                Ok(Scalar::from_cyc(CycNumber::zeta()))
            }
            Some('a') => {
                self.pos += 1;
                Ok(Scalar::alpha())
            }
            Some(c) if c.is_ascii_digit() => Ok(Scalar::from_rat(self.integer()?)),
            _ => Err(self.err("unexpected token")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_example() {
        let s = parse_scalar("(3/4)*a + z^3").unwrap();
        let expect = Scalar::frac(3, 4) * Scalar::alpha() + Scalar::i();
        assert_eq!(s, expect);
    }

    #[test]
    fn round_trip_display() {
        for src in ["0", "-1/2", "z^2 - 1", "(a + 1)/(a^2 - 3)", "-a - 1", "(z)*a + 2", "1/a"] {
            let s = parse_scalar(src).unwrap();
            assert_eq!(parse_scalar(&s.to_string()).unwrap(), s, "{src} -> {s}");
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(parse_scalar("1 +"), Err(ScalarError::Parse(_))));
        assert!(matches!(parse_scalar("x"), Err(ScalarError::Parse(_))));
        assert!(matches!(parse_scalar("1/0"), Err(ScalarError::ZeroInverse)));
    }
}
