//! Shared tokenizer for the polynomial (`x^4+x+1`) and element (`2a+1`) grammars.
//!
//! A term is `[coef][*][var[^exp]]`; terms are joined by `+` or `-`. Whitespace
//! is ignored. Coefficients must already lie in `[0, p)`; a `-` sign negates the
//! term modulo `p`.

use crate::error::{Error, Result};

pub(crate) struct Term {
    pub coef: u32,
    pub exp: usize,
    pub position: usize,
}

pub(crate) fn parse_terms(text: &str, var: char, p: u32) -> Result<Vec<Term>> {
    let chars: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    if chars.is_empty() {
        return Err(Error::parse(0, "empty input"));
    }
    let end = text.len();
    let mut terms = Vec::new();
    let mut i = 0;
    let at = |i: usize| chars.get(i).map_or(end, |&(pos, _)| pos);

    while i < chars.len() {
        let term_start = at(i);
        let mut negative = false;
        if !terms.is_empty() || matches!(chars[i].1, '+' | '-') {
            match chars[i].1 {
                '+' => {}
                '-' => negative = true,
                _ => return Err(Error::parse(at(i), "expected '+' or '-' between terms")),
            }
            i += 1;
        }

        let coef_start = i;
        let mut coef: Option<u64> = None;
        while let Some(&(_, c)) = chars.get(i) {
            let Some(d) = c.to_digit(10) else { break };
            let next = coef.unwrap_or(0) * 10 + d as u64;
            if next > u32::MAX as u64 {
                return Err(Error::parse(at(coef_start), "coefficient too large"));
            }
            coef = Some(next);
            i += 1;
        }
        if coef.is_some() && matches!(chars.get(i), Some(&(_, '*' | '·'))) {
            i += 1;
            if !matches!(chars.get(i), Some(&(_, c)) if c == var) {
                return Err(Error::parse(at(i), format!("expected '{var}' after '*'")));
            }
        }

        let mut exp = 0;
        if matches!(chars.get(i), Some(&(_, c)) if c == var) {
            i += 1;
            exp = 1;
            if matches!(chars.get(i), Some(&(_, '^'))) {
                i += 1;
                let exp_start = i;
                let mut e: Option<usize> = None;
                while let Some(&(_, c)) = chars.get(i) {
                    let Some(d) = c.to_digit(10) else { break };
                    e = Some(e.unwrap_or(0).saturating_mul(10).saturating_add(d as usize));
                    i += 1;
                }
                exp = e.ok_or_else(|| Error::parse(at(exp_start), "expected exponent after '^'"))?;
            }
        } else if coef.is_none() {
            return Err(Error::parse(
                at(i),
                format!("expected a coefficient or '{var}'"),
            ));
        }

        let coef = coef.unwrap_or(1);
        if coef >= p as u64 {
            return Err(Error::parse(
                at(coef_start),
                format!("coefficient {coef} is not in [0, {p})"),
            ));
        }
        let mut coef = coef as u32;
        if negative && coef != 0 {
            coef = p - coef;
        }
        terms.push(Term {
            coef,
            exp,
            position: term_start,
        });
    }
    Ok(terms)
}

/// Renders coefficients (ascending order) with descending powers: `a^2+2a+1`.
pub(crate) fn render(coeffs: &[u32], var: char) -> String {
    let mut out = String::new();
    for (k, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('+');
        }
        match (k, c) {
            (0, _) => out.push_str(&c.to_string()),
            (_, 1) => {}
            _ => out.push_str(&c.to_string()),
        }
        if k >= 1 {
            out.push(var);
        }
        if k >= 2 {
            out.push('^');
            out.push_str(&k.to_string());
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
