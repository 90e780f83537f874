//! Plain-text serialization:
//!
//! ```text
//! superalgebra <dim>
//! flags lie|associative|none
//! basis
//! <label> even|odd
//! ...
//! products
//! <i> <j> <k> <scalar>
//! ...
//! end
//! ```

use super::{AlgebraError, Flags, Parity, SuperAlgebra};
use crate::scalars::parse_scalar;
use std::fmt::Write;

impl SuperAlgebra {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let flags = match (self.flags.lie_expected, self.flags.associative_expected) {
            (true, _) => "lie",
            (false, true) => "associative",
            _ => "none",
        };
        writeln!(s, "superalgebra {}", self.dim()).unwrap();
        writeln!(s, "flags {flags}").unwrap();
        writeln!(s, "basis").unwrap();
        for (l, p) in self.labels.iter().zip(&self.parity) {
            writeln!(s, "{l} {p}").unwrap();
        }
        writeln!(s, "products").unwrap();
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.basis_product(i, j) {
                    writeln!(s, "{i} {j} {k} {c}").unwrap();
                }
            }
        }
        writeln!(s, "end").unwrap();
        s
    }

    pub fn from_text(text: &str) -> Result<SuperAlgebra, AlgebraError> {
        let err = |line: usize, msg: &str| AlgebraError::Parse { line, msg: msg.to_string() };
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
        let mut next = |what: &str| lines.next().ok_or_else(|| err(0, &format!("unexpected end of input, expected {what}")));
        let (ln, head) = next("header")?;
        let dim: usize = head
            .strip_prefix("superalgebra ")
            .and_then(|d| d.trim().parse().ok())
            .ok_or_else(|| err(ln, "expected 'superalgebra <dim>'"))?;
        let (ln, fl) = next("flags")?;
        let flags = match fl.strip_prefix("flags ").map(str::trim) {
            Some("lie") => Flags::LIE,
            Some("associative") => Flags::ASSOCIATIVE,
            Some("none") => Flags::NONE,
            _ => return Err(err(ln, "expected 'flags lie|associative|none'")),
        };
        let (ln, b) = next("basis")?;
        if b != "basis" {
            return Err(err(ln, "expected 'basis'"));
        }
        let mut labels = Vec::with_capacity(dim);
        let mut parity = Vec::with_capacity(dim);
        for _ in 0..dim {
            let (ln, l) = next("basis line")?;
            let (name, p) = l.rsplit_once(' ').ok_or_else(|| err(ln, "expected '<label> even|odd'"))?;
            parity.push(match p {
                "even" => Parity::Even,
                "odd" => Parity::Odd,
                _ => return Err(err(ln, "parity must be even or odd")),
            });
            labels.push(name.trim().to_string());
        }
        let (ln, p) = next("products")?;
        if p != "products" {
            return Err(err(ln, "expected 'products'"));
        }
        let mut entries = Vec::new();
        loop {
            let (ln, l) = next("product line or 'end'")?;
            if l == "end" {
                break;
            }
            let mut parts = l.splitn(4, ' ');
            let mut idx = || -> Result<usize, AlgebraError> {
                parts
                    .next()
                    .and_then(|x| x.parse().ok())
                    .ok_or_else(|| err(ln, "expected '<i> <j> <k> <scalar>'"))
            };
            let (i, j, k) = (idx()?, idx()?, idx()?);
            let c = parts.next().ok_or_else(|| err(ln, "missing scalar"))?;
            let c = parse_scalar(c).map_err(|e| err(ln, &e.to_string()))?;
            entries.push((i, j, k, c));
        }
        SuperAlgebra::from_entries(labels, parity, flags, entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Scalar;

    #[test]
    fn round_trip_with_parameter() {
        let a = SuperAlgebra::from_entries(
            vec!["h".into(), "x y".into()],
            vec![Parity::Even, Parity::Odd],
            Flags::LIE,
            [(0, 1, 1, Scalar::alpha() + Scalar::frac(1, 3)), (1, 0, 1, -(Scalar::alpha() + Scalar::frac(1, 3)))],
        )
        .unwrap();
        let t = a.to_text();
        assert_eq!(SuperAlgebra::from_text(&t).unwrap(), a);
    }

    #[test]
    fn reports_line_numbers() {
        let bad = "superalgebra 1\nflags lie\nbasis\nx even\nproducts\n0 0 0 q\nend\n";
        match SuperAlgebra::from_text(bad) {
            Err(AlgebraError::Parse { line, .. }) => assert_eq!(line, 6),
            other => panic!("unexpected {other:?}"),
        }
    }
}
