//! Text grammar for polynomials and matrix files.
//!
//! A polynomial is a `+`-separated sum of terms `c`, `c*z`, `c*z^e`, `z`,
//! `z^e`, where `c` uses the field element grammar. A matrix has one row per
//! line (or `;`-separated), entries separated by commas. A matrix file
//! starts with a header line `field GF(q)` optionally followed by
//! `modulus <poly in a>`; lines starting with `#` are comments.

use thiserror::Error;

use crate::gf::{prime_power, Field, GfError};
use crate::poly::Poly;
use crate::polymat::{PolyMatError, PolyMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing `field GF(q)` header")]
    MissingHeader,
    #[error(transparent)]
    Field(#[from] GfError),
    #[error(transparent)]
    Matrix(#[from] PolyMatError),
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        msg: msg.into(),
    }
}

/// Parses a polynomial in `var` with coefficients in `field`.
pub fn parse_poly_in(field: &Field, text: &str, var: char) -> Result<Poly, ParseError> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(syntax(0, "empty polynomial"));
    }
    let mut coeffs: Vec<u8> = Vec::new();
    for term in s.split('+') {
        if term.is_empty() {
            return Err(syntax(0, format!("empty term in `{text}`")));
        }
        let (coef, mono) = match term.split_once('*') {
            Some((c, m)) => (c, Some(m)),
            None if term.starts_with(var) => ("1", Some(term)),
            None => (term, None),
        };
        let c = field.parse_element(coef)?;
        let e = match mono {
            None => 0,
            Some(m) => {
                parse_monomial(m, var).ok_or_else(|| syntax(0, format!("bad monomial `{m}` in `{text}`")))?
            }
        };
        if coeffs.len() <= e {
            coeffs.resize(e + 1, 0);
        }
        coeffs[e] = field.add(coeffs[e], c);
    }
    Ok(Poly::from_coeffs(field, coeffs))
}

fn parse_monomial(m: &str, var: char) -> Option<usize> {
    let rest = m.strip_prefix(var)?;
    if rest.is_empty() {
        return Some(1);
    }
    rest.strip_prefix('^')?.parse().ok()
}

pub fn parse_poly(field: &Field, text: &str) -> Result<Poly, ParseError> {
    parse_poly_in(field, text, 'z')
}

/// Parses matrix rows (no header).
pub fn parse_matrix_rows(field: &Field, text: &str) -> Result<PolyMatrix, ParseError> {
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        for chunk in line.split(';') {
            let chunk = chunk.trim();
            if chunk.is_empty() || chunk.starts_with('#') {
                continue;
            }
            let row = chunk
                .split(',')
                .map(|e| {
                    parse_poly(field, e).map_err(|err| match err {
                        ParseError::Syntax { msg, .. } => syntax(lineno + 1, msg),
                        ParseError::Field(g) => syntax(lineno + 1, g.to_string()),
                        other => other,
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return Err(PolyMatError::Empty.into());
    }
    Ok(PolyMatrix::from_rows(field, rows)?)
}

/// Parses a `field GF(q) [modulus ...]` header.
pub fn parse_field_header(line: &str) -> Result<Field, ParseError> {
    let rest = line
        .trim()
        .strip_prefix("field")
        .ok_or(ParseError::MissingHeader)?
        .trim();
    let (size, modulus) = match rest.split_once("modulus") {
        Some((s, m)) => (s.trim(), Some(m.trim())),
        None => (rest, None),
    };
    let q: u64 = size
        .strip_prefix("GF(")
        .and_then(|s| s.strip_suffix(')'))
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| syntax(1, format!("bad field `{size}`")))?;
    let (p, m) = prime_power(q).ok_or(GfError::NotPrimePower(q))?;
    match modulus {
        None => Ok(Field::new(p, m, None)?),
        Some(text) => {
            let base = Field::prime(p)?;
            let poly = parse_poly_in(&base, text, 'a')?;
            Ok(Field::new(p, m, Some(poly.coeffs()))?)
        }
    }
}

/// Parses a self-contained matrix file.
pub fn parse_matrix_file(text: &str) -> Result<PolyMatrix, ParseError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| {
        let t = l.trim();
        !t.is_empty() && !t.starts_with('#')
    });
    let (_, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let field = parse_field_header(header)?;
    let mut body = String::new();
    let mut first_line = None;
    for (i, l) in lines {
        first_line.get_or_insert(i);
        body.push_str(l);
        body.push('\n');
    }
    parse_matrix_rows(&field, &body).map_err(|e| match (e, first_line) {
        (ParseError::Syntax { line, msg }, Some(off)) => syntax(line + off, msg),
        (e, _) => e,
    })
}

pub fn field_header(field: &Field) -> String {
    if field.m() == 1 {
        format!("field GF({})", field.q())
    } else {
        format!("field GF({}) modulus {}", field.q(), field.modulus_string())
    }
}

/// Serializes a matrix in the file format accepted by [`parse_matrix_file`].
pub fn format_matrix_file(g: &PolyMatrix) -> String {
    let mut out = field_header(g.field());
    out.push('\n');
    for row in g.to_text_rows() {
        out.push_str(&row);
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_terms() {
        let f = Field::with_size(8).unwrap();
        let p = parse_poly(&f, "a^3 + a*z + z^2 + 1").unwrap();
        // a^3 + 1 = a (since a^3 = a + 1)
        assert_eq!(p.coeffs(), &[f.generator(), f.generator(), 1]);
        let f2 = Field::prime(2).unwrap();
        assert_eq!(parse_poly(&f2, "z+z").unwrap(), Poly::zero(&f2));
        assert!(parse_poly(&f2, "1++z").is_err());
        assert!(parse_poly(&f2, "2*z").is_err());
        assert!(parse_poly(&f2, "z^x").is_err());
    }

    #[test]
    fn header_and_file() {
        let text = "# a code\nfield GF(4)\n a+a*z, a^2+a*z, 1+a*z\n";
        let g = parse_matrix_file(text).unwrap();
        assert_eq!((g.rows(), g.cols()), (1, 3));
        assert_eq!(g.field().q(), 4);
        let again = parse_matrix_file(&format_matrix_file(&g)).unwrap();
        assert_eq!(again, g);
        let custom = parse_field_header("field GF(16) modulus a^4+a^3+1").unwrap();
        assert_ne!(custom, Field::with_size(16).unwrap());
        assert!(matches!(
            parse_matrix_file("1, z\n"),
            Err(ParseError::MissingHeader)
        ));
        assert!(matches!(
            parse_matrix_file("field GF(2)\n1, z\n1\n"),
            Err(ParseError::Matrix(PolyMatError::Shape(_)))
        ));
        assert!(matches!(
            parse_matrix_file("field GF(2)\n1, q\n"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
        assert!(parse_matrix_file("field GF(6)\n1\n").is_err());
    }
}
