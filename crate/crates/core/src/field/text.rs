//! Text formats for fields, elements and polynomials.
//!
//! * field: `p`, `q`, `p^k` or `p^k/<modulus>` (modulus written as a polynomial over `GF(p)`)
//! * element: integer (image in the prime subfield), `a`, `a^i`, or
//!   power-basis coordinates `{c0,c1,...}`
//! * polynomial: `c0 + c1*x + c2*x^2`, ascending, unit coefficients omitted on `x` terms

use crate::error::{Error, Result};

use super::{prime_power, Field};

pub(super) fn format_element(field: &Field, v: u32) -> String {
    if field.is_prime_field() || field.is_in_prime_subfield(v) {
        return v.to_string();
    }
    match field.log(v) {
        Some(1) => "a".to_string(),
        Some(i) => format!("a^{i}"),
        None => {
            let coords: Vec<String> = field.coordinates(v).iter().map(|c| c.to_string()).collect();
            format!("{{{}}}", coords.join(","))
        }
    }
}

pub(super) fn parse_element(field: &Field, s: &str) -> Result<u32> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
    if let Ok(n) = t.parse::<i64>() {
        return Ok(field.from_int(n));
    }
    if let Some(body) = t.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
        let coords = body
            .split(',')
            .map(|c| c.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad coordinate in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        return field.from_coordinates(&coords);
    }
    if let Some(rest) = t.strip_prefix('a') {
        if field.is_prime_field() {
            return Err(Error::Parse(format!("power-basis tag {s:?} needs an extension field")));
        }
        let rest = rest.trim();
        let e = if rest.is_empty() {
            1
        } else {
            rest.strip_prefix('^')
                .and_then(|e| e.trim().parse::<u64>().ok())
                .ok_or_else(|| Error::Parse(format!("bad power-basis tag {s:?}")))?
        };
        return Ok(field.pow(field.generator(), e));
    }
    Err(Error::Parse(format!("cannot parse field element {s:?}")))
}

/// Formats ascending coefficients given as raw values.
pub(super) fn format_poly_with(coeffs: &[u32], fmt: impl Fn(u32) -> String) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| {
            let var = match i {
                0 => return fmt(c),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            if c == 1 {
                var
            } else {
                format!("{}*{var}", fmt(c))
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

pub(super) fn format_prime_poly(coeffs: &[u32]) -> String {
    format_poly_with(coeffs, |c| c.to_string())
}

/// Parses a polynomial into ascending raw coefficients (not trimmed).
pub(super) fn parse_poly(field: &Field, s: &str) -> Result<Vec<u32>> {
    let mut coeffs: Vec<u32> = Vec::new();
    for (negative, term) in split_terms(s)? {
        let (coef, degree) = parse_term(field, &term)?;
        let coef = if negative { field.neg(coef) } else { coef };
        if coeffs.len() <= degree {
            coeffs.resize(degree + 1, 0);
        }
        coeffs[degree] = field.add(coeffs[degree], coef);
    }
    Ok(coeffs)
}

fn split_terms(s: &str) -> Result<Vec<(bool, String)>> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut negative = false;
    let mut sign_pending = false;
    let mut depth = 0i32;
    for ch in s.chars() {
        match ch {
            '{' | '(' => {
                depth += 1;
                cur.push(ch);
            }
            '}' | ')' => {
                depth -= 1;
                cur.push(ch);
            }
            '+' | '-' if depth == 0 => {
                if !cur.trim().is_empty() {
                    out.push((negative, std::mem::take(&mut cur)));
                } else if sign_pending {
                    return Err(Error::Parse(format!("dangling sign in polynomial {s:?}")));
                }
                cur.clear();
                negative = ch == '-';
                sign_pending = true;
            }
            _ => cur.push(ch),
        }
    }
    if cur.trim().is_empty() {
        return Err(Error::Parse(format!("empty term in polynomial {s:?}")));
    }
    out.push((negative, cur));
    Ok(out)
}

fn parse_term(field: &Field, term: &str) -> Result<(u32, usize)> {
    let t = term.trim();
    let Some(xpos) = t.find('x') else {
        return Ok((parse_element(field, t)?, 0));
    };
    let before = t[..xpos].trim();
    let after = t[xpos + 1..].trim();
    let coef = if before.is_empty() {
        1
    } else {
        let c = before
            .strip_suffix('*')
            .ok_or_else(|| Error::Parse(format!("expected '*' before x in {term:?}")))?;
        parse_element(field, c)?
    };
    let degree = if after.is_empty() {
        1
    } else {
        after
            .strip_prefix('^')
            .and_then(|e| e.trim().parse::<usize>().ok())
            .ok_or_else(|| Error::Parse(format!("bad exponent in {term:?}")))?
    };
    Ok((coef, degree))
}

pub(super) fn parse_field(s: &str) -> Result<Field> {
    let s = s.trim();
    let (head, modulus) = match s.split_once('/') {
        Some((h, m)) => (h.trim(), Some(m.trim())),
        None => (s, None),
    };
    let (p, k) = match head.split_once('^') {
        Some((p, k)) => {
            let p = p.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad characteristic in {s:?}")))?;
            let k = k.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad degree in {s:?}")))?;
            (p, k)
        }
        None => {
            let q = head.parse::<u64>().map_err(|_| Error::Parse(format!("bad field spec {s:?}")))?;
            prime_power(q).ok_or_else(|| Error::InvalidField(format!("{q} is not a prime power")))?
        }
    };
    match modulus {
        None => Field::extension(p, k, None),
        Some(m) => {
            let base = Field::prime(p)?;
            let mut coeffs = parse_poly(&base, m)?;
            while coeffs.last() == Some(&0) {
                coeffs.pop();
            }
            Field::extension(p, k, Some(coeffs))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_specs() {
        let f: Field = "2^2/1 + x + x^2".parse().unwrap();
        assert_eq!(f.order(), 4);
        assert_eq!(f.to_string(), "2^2/1 + x + x^2");
        assert_eq!(f.to_string().parse::<Field>().unwrap(), f);
        assert_eq!("7".parse::<Field>().unwrap().order(), 7);
        assert_eq!("9".parse::<Field>().unwrap().degree(), 2);
        assert_eq!("3^2".parse::<Field>().unwrap().order(), 9);
        assert!("6".parse::<Field>().is_err());
        assert!("2^2/1 + x^2".parse::<Field>().is_err());
        assert!("two".parse::<Field>().is_err());
    }

    #[test]
    fn elements() {
        let f: Field = "9".parse().unwrap();
        for v in f.values() {
            let s = f.format(v);
            assert_eq!(f.parse(&s).unwrap(), v, "{s}");
        }
        assert_eq!(f.parse("-1").unwrap(), 2);
        assert_eq!(f.parse("{0,1}").unwrap(), f.generator());
        assert_eq!(f.parse("a").unwrap(), f.generator());
        let p: Field = "5".parse().unwrap();
        assert!(p.parse("a").is_err());
        assert!(p.parse("b").is_err());
    }

    #[test]
    fn non_primitive_modulus_uses_coordinates() {
        // x^2 + 1 is irreducible over GF(3) but x has order 4, not 8
        let f = Field::extension(3, 2, Some(vec![1, 0, 1])).unwrap();
        assert!(!f.has_primitive_generator());
        let s = f.format(f.generator());
        assert_eq!(s, "{0,1}");
        assert_eq!(f.parse(&s).unwrap(), f.generator());
    }

    #[test]
    fn polynomials() {
        let f: Field = "3".parse().unwrap();
        assert_eq!(parse_poly(&f, "1 + x^2").unwrap(), vec![1, 0, 1]);
        assert_eq!(parse_poly(&f, "x^2 - 1").unwrap(), vec![2, 0, 1]);
        assert_eq!(parse_poly(&f, "2*x + 2*x").unwrap(), vec![0, 1]);
        assert_eq!(parse_poly(&f, "-x").unwrap(), vec![0, 2]);
        assert!(parse_poly(&f, "1 + + x").is_err());
        assert!(parse_poly(&f, "1 +").is_err());
        assert!(parse_poly(&f, "2x").is_err());
        let g: Field = "4".parse().unwrap();
        assert_eq!(parse_poly(&g, "a^2*x + a").unwrap(), vec![g.generator(), g.pow(g.generator(), 2)]);
    }
}
