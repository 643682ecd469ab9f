//! Shared text formatting and parsing for multivector-like values.
//!
//! The text form is a signed sum of terms, e.g. `1.5 - 2e1 + 0.25e12`, with
//! zero terms omitted. Parsing ignores whitespace. A term is an optional
//! coefficient followed by an optional basis name; a bare sign means a
//! coefficient of plus or minus one.

use std::fmt;

use crate::error::{Error, Result};

/// Writes nonzero `(coefficient, basis-name)` terms as a signed sum. Writes
/// `0` when everything vanishes.
pub(crate) fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[(f64, &str)]) -> fmt::Result {
    let mut first = true;
    for &(c, name) in terms {
        if c == 0.0 {
            continue;
        }
        if first {
            if c < 0.0 {
                write!(f, "-")?;
            }
        } else if c < 0.0 {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let mag = c.abs();
        if name.is_empty() {
            write!(f, "{mag}")?;
        } else if mag == 1.0 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{mag}{name}")?;
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Splits `text` into `(coefficient, basis)` pairs. `basis_names` must be
/// ordered so that no name is a prefix of an earlier one (longest first).
/// The empty basis name (scalar term) is always accepted.
///
/// A trailing basis name binds the digits before it, so `2e1` is the term
/// `2 * e1`, not the float `20`; scientific notation is therefore not
/// supported in text input (use the JSON form for full floats).
pub(crate) fn parse_terms<'a>(
    text: &str,
    basis_names: &[&'a str],
) -> Result<Vec<(f64, &'a str)>> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    let mut out = Vec::new();
    let mut rest = compact.as_str();
    let mut sign = 1.0;
    // Leading sign.
    if let Some(r) = rest.strip_prefix('-') {
        sign = -1.0;
        rest = r;
    } else if let Some(r) = rest.strip_prefix('+') {
        rest = r;
    }
    while !rest.is_empty() {
        // Body runs up to the next +/- term separator.
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        if end == 0 {
            return Err(Error::Parse(format!("empty term in `{text}`")));
        }
        let body = &rest[..end];
        let (coeff_str, basis) = match basis_names.iter().find(|n| body.ends_with(**n)) {
            Some(name) => (&body[..body.len() - name.len()], *name),
            None => (body, ""),
        };
        let coeff = if coeff_str.is_empty() {
            if basis.is_empty() {
                return Err(Error::Parse(format!("bare sign in `{text}`")));
            }
            1.0
        } else {
            coeff_str
                .parse::<f64>()
                .map_err(|_| Error::Parse(format!("bad coefficient `{coeff_str}` in `{text}`")))?
        };
        out.push((sign * coeff, basis));
        rest = &rest[end..];
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1.0;
            rest = r;
        } else if let Some(r) = rest.strip_prefix('+') {
            sign = 1.0;
            rest = r;
        } else if !rest.is_empty() {
            unreachable!();
        }
    }
    Ok(out)
}
