//! Text notation for ordinals, cardinals, chains, groups, posets and ring
//! descriptors.
//!
//! ```text
//! ordinal    w^2*3+w+1 | w*2+3 | 7
//! cardinal   42 | aleph(0) | aleph(w*2+3)
//! term       cardinal | 2^cardinal
//! chain      fin(n) | omega | omega_op | ints | rats | concat(chain, ...)
//! group      zlex(n) | zrevlex(n)
//! poset      chain:n | antichain:n | path/to/poset.json
//! rational   -3 | 1/2
//! ```

use krullkit_core::cardinal::{CardTerm, Cardinal, Ordinal, QCut, RingDescriptor};
use krullkit_core::lexgroup::{LexGroup, Significance};
use krullkit_core::order::{FiniteLinOrder, SymbolicChain};
use krullkit_core::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse {what} from {input:?}")]
pub struct ParseError {
    pub what: &'static str,
    pub input: String,
}

fn err<T>(what: &'static str, input: &str) -> Result<T, ParseError> {
    Err(ParseError { what, input: input.to_string() })
}

/// `name(inner)` with balanced parentheses, returning `inner`.
fn call<'a>(s: &'a str, name: &str) -> Option<&'a str> {
    s.strip_prefix(name)?.trim_start().strip_prefix('(')?.strip_suffix(')')
}

/// Splits on commas at parenthesis depth zero.
pub fn split_top(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}

pub fn parse_ordinal(s: &str) -> Result<Ordinal, ParseError> {
    let s = s.trim();
    if s == "0" {
        return Ok(Ordinal::zero());
    }
    let mut terms = Vec::new();
    for t in s.split('+') {
        let t = t.trim();
        let (base, coef) = match t.split_once('*') {
            Some((b, c)) => (b.trim(), c.trim().parse::<u64>().or_else(|_| err("ordinal", s))?),
            None => (t, 1),
        };
        let exp = if let Ok(n) = base.parse::<u64>() {
            if coef != 1 {
                return err("ordinal", s);
            }
            terms.push((0, n));
            continue;
        } else if base == "w" {
            1
        } else if let Some(e) = base.strip_prefix("w^") {
            e.parse::<u32>().or_else(|_| err("ordinal", s))?
        } else {
            return err("ordinal", s);
        };
        terms.push((exp, coef));
    }
    Ordinal::from_terms(terms).or_else(|_| err("ordinal", s))
}

pub fn parse_cardinal(s: &str) -> Result<Cardinal, ParseError> {
    let s = s.trim();
    if let Ok(n) = s.parse::<u64>() {
        return Ok(Cardinal::Finite(n));
    }
    match call(s, "aleph") {
        Some(inner) => Ok(Cardinal::Aleph(parse_ordinal(inner)?)),
        None => err("cardinal", s),
    }
}

pub fn parse_term(s: &str) -> Result<CardTerm, ParseError> {
    let s = s.trim();
    match s.strip_prefix("2^") {
        Some(base) => Ok(CardTerm::Pow2(parse_cardinal(base)?)),
        None => Ok(CardTerm::Card(parse_cardinal(s)?)),
    }
}

pub fn parse_chain(s: &str) -> Result<SymbolicChain, ParseError> {
    let s = s.trim();
    let c = match s {
        "omega" => SymbolicChain::Omega,
        "omega_op" => SymbolicChain::OmegaOp,
        "ints" => SymbolicChain::Ints,
        "rats" => SymbolicChain::Rats,
        _ => {
            if let Some(n) = call(s, "fin") {
                SymbolicChain::Fin(n.trim().parse().or_else(|_| err("chain", s))?)
            } else if let Some(inner) = call(s, "concat") {
                let parts = split_top(inner).into_iter().map(parse_chain).collect::<Result<Vec<_>, _>>()?;
                SymbolicChain::concat(parts).or_else(|_| err("chain", s))?
            } else {
                return err("chain", s);
            }
        }
    };
    Ok(c)
}

pub fn parse_group(s: &str) -> Result<LexGroup, ParseError> {
    let s = s.trim();
    let (inner, conv) = if let Some(i) = call(s, "zlex") {
        (i, Significance::LeastIndex)
    } else if let Some(i) = call(s, "zrevlex") {
        (i, Significance::GreatestIndex)
    } else {
        return err("group", s);
    };
    let n: usize = inner.trim().parse().or_else(|_| err("group", s))?;
    if n == 0 {
        return err("group", s);
    }
    let index = FiniteLinOrder::new((0..n).map(|i| i.to_string()).collect()).or_else(|_| err("group", s))?;
    LexGroup::new(index, conv).or_else(|_| err("group", s))
}

pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let s = s.trim();
    let parsed = match s.split_once('/') {
        Some((n, d)) => match (n.trim().parse::<i64>(), d.trim().parse::<i64>()) {
            (Ok(n), Ok(d)) if d != 0 => Some(Rational::new(n, d)),
            _ => None,
        },
        None => s.parse::<i64>().ok().map(Rational::from_integer),
    };
    parsed.map_or_else(|| err("rational", s), Ok)
}

pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>, ParseError> {
    s.split(',').filter(|t| !t.trim().is_empty()).map(parse_rational).collect()
}

/// `q` for the cut below `q`, `q+` for the cut just above it.
pub fn parse_qcut(s: &str) -> Result<QCut, ParseError> {
    let s = s.trim();
    match s.strip_suffix('+') {
        Some(q) => Ok(QCut::After(parse_rational(q)?)),
        None => Ok(QCut::At(parse_rational(s)?)),
    }
}

/// `valuation(carrier, rank)`, `poly(base, vars)`, `lpa(chain, field)` or
/// `berry(kappa)`.
pub fn parse_descriptor(s: &str) -> Result<RingDescriptor, ParseError> {
    let s = s.trim();
    let two = |inner: &str| -> Result<(String, String), ParseError> {
        match split_top(inner).as_slice() {
            [a, b] => Ok((a.to_string(), b.to_string())),
            _ => err("descriptor", s),
        }
    };
    if let Some(i) = call(s, "valuation") {
        let (a, b) = two(i)?;
        Ok(RingDescriptor::ValuationFromGroup { carrier: parse_cardinal(&a)?, rank: parse_cardinal(&b)? })
    } else if let Some(i) = call(s, "poly") {
        let (a, b) = two(i)?;
        Ok(RingDescriptor::PolyRing { base: parse_cardinal(&a)?, vars: parse_cardinal(&b)? })
    } else if let Some(i) = call(s, "lpa") {
        let (a, b) = two(i)?;
        Ok(RingDescriptor::LpaFromChain { chain: parse_chain(&a)?, field: parse_cardinal(&b)? })
    } else if let Some(i) = call(s, "berry") {
        Ok(RingDescriptor::BerryFamily { kappa: parse_cardinal(i)? })
    } else {
        err("descriptor", s)
    }
}
