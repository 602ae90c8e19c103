//! Symbolic cardinal arithmetic over `ℵ_α` with `α < ω^ω`, the continuum
//! function under an axiom mode, and the decision procedure for which
//! `(|R|, dim R)` pairs are realized by rings.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::order::SymbolicChain;
use crate::{Rational, TriBool};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CardError {
    #[error("operation needs an infinite cardinal")]
    FiniteCardinal,
    #[error("inconsistent continuum table: {0}")]
    InconsistentTable(String),
    #[error("finite arithmetic overflow")]
    Overflow,
    #[error("malformed ordinal: {0}")]
    MalformedOrdinal(String),
    #[error("unsupported descriptor: {0}")]
    UnsupportedDescriptor(String),
}

/// An ordinal below `ω^ω` in Cantor normal form: `(exponent, coefficient)`
/// terms with strictly decreasing exponents and positive coefficients.
///
/// The derived order is the ordinal order: terms compare lexicographically
/// and a proper prefix is smaller.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Ordinal {
    terms: Vec<(u32, u64)>,
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal { terms: Vec::new() }
    }

    pub fn finite(n: u64) -> Self {
        if n == 0 {
            Self::zero()
        } else {
            Ordinal { terms: vec![(0, n)] }
        }
    }

    pub fn omega() -> Self {
        Ordinal { terms: vec![(1, 1)] }
    }

    /// `ω^e · c`.
    pub fn monomial(e: u32, c: u64) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            Ordinal { terms: vec![(e, c)] }
        }
    }

    /// Terms must already be in normal form.
    pub fn from_terms(terms: Vec<(u32, u64)>) -> Result<Self, CardError> {
        if terms.iter().any(|&(_, c)| c == 0) {
            return Err(CardError::MalformedOrdinal("zero coefficient".into()));
        }
        if terms.windows(2).any(|w| w[0].0 <= w[1].0) {
            return Err(CardError::MalformedOrdinal("exponents not strictly decreasing".into()));
        }
        Ok(Ordinal { terms })
    }

    pub fn terms(&self) -> &[(u32, u64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_finite(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [(0, c)] => Some(*c),
            _ => None,
        }
    }

    pub fn is_successor(&self) -> bool {
        matches!(self.terms.last(), Some((0, _)))
    }

    /// Nonzero and not a successor.
    pub fn is_limit(&self) -> bool {
        matches!(self.terms.last(), Some((e, _)) if *e > 0)
    }

    pub fn succ(&self) -> Self {
        let mut terms = self.terms.clone();
        match terms.last_mut() {
            Some((0, c)) => *c += 1,
            _ => terms.push((0, 1)),
        }
        Ordinal { terms }
    }

    /// `Some(β)` with `β + 1 = self` for successors.
    pub fn pred(&self) -> Option<Self> {
        let mut terms = self.terms.clone();
        match terms.last_mut() {
            Some((0, c)) if *c > 1 => *c -= 1,
            Some((0, _)) => {
                terms.pop();
            }
            _ => return None,
        }
        Some(Ordinal { terms })
    }

    /// Ordinal sum `self + other`; terms of `self` below the leading
    /// exponent of `other` are absorbed.
    pub fn add(&self, other: &Ordinal) -> Self {
        let Some(&(lead, lc)) = other.terms.first() else {
            return self.clone();
        };
        let mut terms: Vec<(u32, u64)> = self.terms.iter().copied().filter(|&(e, _)| e >= lead).collect();
        match terms.last_mut() {
            Some((e, c)) if *e == lead => *c += lc,
            _ => terms.push((lead, lc)),
        }
        terms.extend_from_slice(&other.terms[1..]);
        Ordinal { terms }
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, &(e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            match (e, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("w")?,
                (1, c) => write!(f, "w*{c}")?,
                (e, 1) => write!(f, "w^{e}")?,
                (e, c) => write!(f, "w^{e}*{c}")?,
            }
        }
        Ok(())
    }
}

/// A cardinal: a natural number or `ℵ_α`. Every finite cardinal is below
/// every aleph, as the derived order reflects.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cardinal {
    Finite(u64),
    Aleph(Ordinal),
}

impl Cardinal {
    pub fn aleph(i: u64) -> Self {
        Cardinal::Aleph(Ordinal::finite(i))
    }

    pub fn aleph0() -> Self {
        Self::aleph(0)
    }

    pub fn aleph_omega() -> Self {
        Cardinal::Aleph(Ordinal::omega())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Cardinal::Finite(_))
    }

    pub fn is_infinite(&self) -> bool {
        !self.is_finite()
    }

    pub fn is_zero(&self) -> bool {
        *self == Cardinal::Finite(0)
    }

    pub fn index(&self) -> Option<&Ordinal> {
        match self {
            Cardinal::Aleph(a) => Some(a),
            Cardinal::Finite(_) => None,
        }
    }

    /// The least cardinal above `self`.
    pub fn successor(&self) -> Result<Self, CardError> {
        Ok(match self {
            Cardinal::Finite(n) => Cardinal::Finite(n.checked_add(1).ok_or(CardError::Overflow)?),
            Cardinal::Aleph(a) => Cardinal::Aleph(a.succ()),
        })
    }

    /// `ℵ_{α+1}` form.
    pub fn is_successor_cardinal(&self) -> bool {
        matches!(self, Cardinal::Aleph(a) if a.is_successor())
    }
}

impl fmt::Display for Cardinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinal::Finite(n) => write!(f, "{n}"),
            Cardinal::Aleph(a) => write!(f, "aleph({a})"),
        }
    }
}

pub fn card_add(a: &Cardinal, b: &Cardinal) -> Result<Cardinal, CardError> {
    match (a, b) {
        (Cardinal::Finite(x), Cardinal::Finite(y)) => {
            x.checked_add(*y).map(Cardinal::Finite).ok_or(CardError::Overflow)
        }
        _ => Ok(a.max(b).clone()),
    }
}

/// Zero absorbs; otherwise the max rule once an argument is infinite.
pub fn card_mul(a: &Cardinal, b: &Cardinal) -> Result<Cardinal, CardError> {
    match (a, b) {
        (Cardinal::Finite(0), _) | (_, Cardinal::Finite(0)) => Ok(Cardinal::Finite(0)),
        (Cardinal::Finite(x), Cardinal::Finite(y)) => {
            x.checked_mul(*y).map(Cardinal::Finite).ok_or(CardError::Overflow)
        }
        _ => Ok(a.max(b).clone()),
    }
}

/// A partial continuum function on alephs, as indices: `2^{ℵ_α} = ℵ_β` for
/// each entry `α ↦ β`, and `2^{ℵ_α} = ℵ_{α+1}` for all `α >= successor_from`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ContinuumTable {
    pub entries: BTreeMap<Ordinal, Ordinal>,
    pub successor_from: Option<Ordinal>,
}

impl ContinuumTable {
    /// No information beyond ZFC.
    pub fn empty() -> Self {
        Self::default()
    }

    /// `2^{ℵ_0} = ℵ_2` and `2^β = β^+` from `ℵ_1` on.
    pub fn cohen() -> Self {
        let mut entries = BTreeMap::new();
        entries.insert(Ordinal::zero(), Ordinal::finite(2));
        ContinuumTable { entries, successor_from: Some(Ordinal::finite(1)) }
    }

    /// Checks `2^κ >= κ^+`, monotonicity, and agreement with the tail rule.
    /// Cofinality constraints on `2^κ` are not checked.
    pub fn validate(&self) -> Result<(), CardError> {
        for (k, v) in &self.entries {
            if *v <= *k {
                return Err(CardError::InconsistentTable(format!("2^aleph({k}) = aleph({v}) is below aleph({k})^+")));
            }
            if let Some(t) = &self.successor_from {
                if k >= t && *v != k.succ() {
                    return Err(CardError::InconsistentTable(format!(
                        "entry at aleph({k}) contradicts successor rule from aleph({t})"
                    )));
                }
                if k < t && *v > t.succ() {
                    return Err(CardError::InconsistentTable(format!(
                        "2^aleph({k}) = aleph({v}) exceeds 2^aleph({t}) = aleph({})",
                        t.succ()
                    )));
                }
            }
        }
        let vals: Vec<&Ordinal> = self.entries.values().collect();
        if vals.windows(2).any(|w| w[0] > w[1]) {
            return Err(CardError::InconsistentTable("continuum function not monotone".into()));
        }
        Ok(())
    }

    /// Exact value of `2^{ℵ_α}` as an index, if determined.
    fn exact(&self, a: &Ordinal) -> Option<Ordinal> {
        if let Some(v) = self.entries.get(a) {
            return Some(v.clone());
        }
        match &self.successor_from {
            Some(t) if a >= t => Some(a.succ()),
            _ => None,
        }
    }

    /// Index bounds `[lo, hi]` on `2^{ℵ_α}`; `hi = None` means unbounded.
    fn bounds(&self, a: &Ordinal) -> (Ordinal, Option<Ordinal>) {
        if let Some(v) = self.exact(a) {
            return (v.clone(), Some(v));
        }
        let mut lo = a.succ();
        for v in self.entries.range(..a.clone()).map(|(_, v)| v) {
            if *v > lo {
                lo = v.clone();
            }
        }
        let mut hi = self.entries.range(a.clone()..).next().map(|(_, v)| v.clone());
        if let Some(t) = &self.successor_from {
            // a < t here, so 2^{ℵ_a} <= 2^{ℵ_t}
            let cap = t.succ();
            hi = Some(match hi {
                Some(h) if h < cap => h,
                _ => cap,
            });
        }
        (lo, hi)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomMode {
    Gch,
    Table(ContinuumTable),
}

impl AxiomMode {
    pub fn table_empty() -> Self {
        AxiomMode::Table(ContinuumTable::empty())
    }

    pub fn cohen() -> Self {
        AxiomMode::Table(ContinuumTable::cohen())
    }

    pub fn validate(&self) -> Result<(), CardError> {
        match self {
            AxiomMode::Gch => Ok(()),
            AxiomMode::Table(t) => t.validate(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            AxiomMode::Gch => "gch",
            AxiomMode::Table(t) if *t == ContinuumTable::cohen() => "cohen",
            AxiomMode::Table(t) if *t == ContinuumTable::empty() => "table-empty",
            AxiomMode::Table(_) => "table",
        }
    }
}

/// The value of `2^κ`: exact, or the symbolic power with known bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CardValue {
    Exact(Cardinal),
    Pow2 { base: Cardinal, lo: Cardinal, hi: Option<Cardinal> },
}

impl CardValue {
    pub fn exact(&self) -> Option<&Cardinal> {
        match self {
            CardValue::Exact(c) => Some(c),
            CardValue::Pow2 { .. } => None,
        }
    }

    pub fn lower(&self) -> &Cardinal {
        match self {
            CardValue::Exact(c) => c,
            CardValue::Pow2 { lo, .. } => lo,
        }
    }

    pub fn upper(&self) -> Option<&Cardinal> {
        match self {
            CardValue::Exact(c) => Some(c),
            CardValue::Pow2 { hi, .. } => hi.as_ref(),
        }
    }

    /// `self <= c`, decided from the bounds when possible.
    pub fn le_card(&self, c: &Cardinal) -> TriBool {
        if self.upper().is_some_and(|u| u <= c) {
            TriBool::True
        } else if self.lower() > c {
            TriBool::False
        } else {
            TriBool::Unknown
        }
    }

    /// `c <= self`.
    pub fn ge_card(&self, c: &Cardinal) -> TriBool {
        if self.lower() >= c {
            TriBool::True
        } else if self.upper().is_some_and(|u| u < c) {
            TriBool::False
        } else {
            TriBool::Unknown
        }
    }

    /// The bounds as text, `[lo, hi]` or `[lo, inf)`.
    pub fn bounds_text(&self) -> String {
        match self {
            CardValue::Exact(c) => format!("{c}"),
            CardValue::Pow2 { lo, hi: Some(h), .. } => format!("[{lo}, {h}]"),
            CardValue::Pow2 { lo, hi: None, .. } => format!("[{lo}, inf)"),
        }
    }
}

impl fmt::Display for CardValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CardValue::Exact(c) => write!(f, "{c}"),
            CardValue::Pow2 { base, .. } => write!(f, "2^{base}"),
        }
    }
}

pub fn card_exp2(k: &Cardinal, mode: &AxiomMode) -> Result<CardValue, CardError> {
    mode.validate()?;
    exp2_unchecked(k, mode)
}

fn exp2_unchecked(k: &Cardinal, mode: &AxiomMode) -> Result<CardValue, CardError> {
    match (k, mode) {
        (Cardinal::Finite(n), _) => {
            if *n >= 64 {
                return Err(CardError::Overflow);
            }
            Ok(CardValue::Exact(Cardinal::Finite(1u64 << n)))
        }
        (Cardinal::Aleph(a), AxiomMode::Gch) => Ok(CardValue::Exact(Cardinal::Aleph(a.succ()))),
        (Cardinal::Aleph(a), AxiomMode::Table(t)) => {
            let (lo, hi) = t.bounds(a);
            if hi.as_ref() == Some(&lo) {
                Ok(CardValue::Exact(Cardinal::Aleph(lo)))
            } else {
                Ok(CardValue::Pow2 { base: k.clone(), lo: Cardinal::Aleph(lo), hi: hi.map(Cardinal::Aleph) })
            }
        }
    }
}

pub fn cofinality(k: &Cardinal) -> Result<Cardinal, CardError> {
    match k {
        Cardinal::Finite(_) => Err(CardError::FiniteCardinal),
        Cardinal::Aleph(a) if a.is_successor() => Ok(k.clone()),
        // ℵ_0 and every limit index below ω^ω have countable cofinality
        Cardinal::Aleph(_) => Ok(Cardinal::aleph0()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Predicates {
    pub regular: bool,
    pub singular: bool,
    pub successor_card: bool,
    pub limit_card: bool,
    pub psl: TriBool,
    pub strong_limit: TriBool,
}

pub fn predicates(k: &Cardinal, mode: &AxiomMode) -> Result<Predicates, CardError> {
    mode.validate()?;
    let a = k.index().ok_or(CardError::FiniteCardinal)?;
    let regular = cofinality(k)? == *k;
    let successor_card = a.is_successor();
    Ok(Predicates {
        regular,
        singular: !regular,
        successor_card,
        limit_card: !successor_card,
        psl: psl(a, mode),
        strong_limit: strong_limit(a, mode),
    })
}

/// `2^μ <= ℵ_a` for every `μ < ℵ_a`.
fn psl(a: &Ordinal, mode: &AxiomMode) -> TriBool {
    if a.is_zero() {
        return TriBool::True;
    }
    let t = match mode {
        AxiomMode::Gch => return TriBool::True,
        AxiomMode::Table(t) => t,
    };
    if t.entries.range(..a.clone()).any(|(_, v)| v > a) {
        return TriBool::False;
    }
    if let Some(g) = a.pred() {
        // by monotonicity the largest μ below decides
        let (lo, hi) = t.bounds(&g);
        return if lo > *a {
            TriBool::False
        } else if hi.is_some_and(|h| h <= *a) {
            TriBool::True
        } else {
            TriBool::Unknown
        };
    }
    match &t.successor_from {
        Some(s) if s < a => TriBool::True,
        _ => TriBool::Unknown,
    }
}

/// `2^μ < ℵ_a` for every `μ < ℵ_a`.
fn strong_limit(a: &Ordinal, mode: &AxiomMode) -> TriBool {
    if a.is_zero() {
        return TriBool::True;
    }
    if a.is_successor() {
        return TriBool::False;
    }
    let t = match mode {
        AxiomMode::Gch => return TriBool::True,
        AxiomMode::Table(t) => t,
    };
    if t.entries.range(..a.clone()).any(|(_, v)| v >= a) {
        return TriBool::False;
    }
    match &t.successor_from {
        Some(s) if s < a => TriBool::True,
        _ => TriBool::Unknown,
    }
}

/// Bounds on `ded(κ)`, the supremum of sizes of linear orders with a dense
/// subset of size `κ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DedBounds {
    pub lo: Cardinal,
    pub hi: CardValue,
    /// Set when the bounds pin the value down, possibly symbolically.
    pub exact: Option<CardValue>,
    pub notes: Vec<String>,
}

pub const NOTE_DED_INDEPENDENT: &str = "consistently ded(k) < 2^k when cf(k) > aleph(0)";

pub fn ded_bounds(k: &Cardinal, mode: &AxiomMode) -> Result<DedBounds, CardError> {
    mode.validate()?;
    if k.is_finite() {
        return Err(CardError::FiniteCardinal);
    }
    let lo = k.successor()?;
    let hi = exp2_unchecked(k, mode)?;
    let exact = match mode {
        AxiomMode::Gch => Some(CardValue::Exact(lo.clone())),
        AxiomMode::Table(_) if predicates(k, mode)?.psl.is_true() => Some(hi.clone()),
        AxiomMode::Table(_) => None,
    };
    let mut notes = Vec::new();
    if exact.is_none() && cofinality(k)? > Cardinal::aleph0() {
        notes.push(NOTE_DED_INDEPENDENT.into());
    }
    Ok(DedBounds { lo, hi, exact, notes })
}

/// A cardinal given directly or as `2^κ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CardTerm {
    Card(Cardinal),
    Pow2(Cardinal),
}

impl CardTerm {
    pub fn resolve(&self, mode: &AxiomMode) -> Result<CardValue, CardError> {
        match self {
            CardTerm::Card(c) => Ok(CardValue::Exact(c.clone())),
            CardTerm::Pow2(b) => exp2_unchecked(b, mode),
        }
    }
}

impl From<Cardinal> for CardTerm {
    fn from(c: Cardinal) -> Self {
        CardTerm::Card(c)
    }
}

impl fmt::Display for CardTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CardTerm::Card(c) => write!(f, "{c}"),
            CardTerm::Pow2(b) => write!(f, "2^{b}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingKind {
    Any,
    Valuation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Answer {
    Yes,
    No,
    Unknown,
}

impl Answer {
    pub fn as_str(self) -> &'static str {
        match self {
            Answer::Yes => "yes",
            Answer::No => "no",
            Answer::Unknown => "unknown",
        }
    }
}

/// An answer with the rule that produced it and the fact it rests on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub answer: Answer,
    pub rule: &'static str,
    pub anchor: &'static str,
    pub witness: Option<String>,
    pub notes: Vec<String>,
}

pub mod anchors {
    pub const NONZERO_RING: &str = "nonzero-ring-has-two-elements";
    pub const FINITE_ZERO_DIM: &str = "finite-rings-zero-dimensional";
    pub const FINITE_LOCAL_PRIME_POWER: &str = "finite-local-ring-prime-power";
    pub const SIZE_AT_LEAST_DIM: &str = "dimension-at-most-size-realized";
    pub const POWER_SET_BOUND: &str = "dimension-at-most-power-set";
    pub const GCH_CLASSIFICATION: &str = "gch-classification";
    pub const PSL_POLY: &str = "psl-polynomial-strong-dimension";
    pub const OPEN: &str = "not-settled-in-mode";
    pub const VALUATION_ABOVE: &str = "valuation-ring-dimension-above-size";
    pub const UNDECIDABLE: &str = "full-power-dimension-undecidable";
    pub const VALUATION_FROM_GROUP: &str = "valuation-ring-from-value-group";
    pub const POLY_DED: &str = "polynomial-dimension-is-ded";
    pub const LPA_DIMS: &str = "lpa-dimension-is-completion-size";
    pub const LPA_CARDINALITY: &str = "lpa-cardinality-bound";
    pub const BERRY: &str = "disjoint-well-orders-family";
}

pub const NOTE_VALUATION_ABOVE: &str = "some valuation ring of size k has sc.dim > k";
pub const NOTE_INDEPENDENT: &str = "independent of ZFC: a ring of size k with c.dim 2^k (cf(k) > aleph(0))";
pub const NOTE_IF_POWER_INDEPENDENT: &str = "if l = 2^k this is independent of ZFC (cf(k) > aleph(0))";
pub const NOTE_OPEN_BETWEEN: &str = "realizability of k < l < 2^k is open without GCH";

fn is_prime_power(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut m = n;
            while m.is_multiple_of(p) {
                m /= p;
            }
            return m == 1;
        }
        p += 1;
    }
    true
}

fn verdict(answer: Answer, rule: &'static str, anchor: &'static str, witness: Option<String>) -> Verdict {
    Verdict { answer, rule, anchor, witness, notes: Vec::new() }
}

/// Is there a ring (of the given kind) of cardinality `k` and strong
/// cardinal Krull dimension `l`? Rules R0 to R6 are tried in order.
pub fn exists_ring(k: &Cardinal, l: &CardTerm, mode: &AxiomMode, kind: RingKind) -> Result<Verdict, CardError> {
    use anchors::*;
    mode.validate()?;
    if *k < Cardinal::Finite(2) {
        return Ok(verdict(Answer::No, "R0", NONZERO_RING, None));
    }
    let lv = l.resolve(mode)?;
    if let Cardinal::Finite(n) = k {
        let zero = lv.exact() == Some(&Cardinal::Finite(0));
        if !zero {
            return Ok(verdict(Answer::No, "R1", FINITE_ZERO_DIM, None));
        }
        return Ok(match kind {
            RingKind::Any => verdict(Answer::Yes, "R1", FINITE_ZERO_DIM, Some(format!("Z/{n}Z"))),
            RingKind::Valuation if is_prime_power(*n) => {
                verdict(Answer::Yes, "R1", FINITE_LOCAL_PRIME_POWER, Some(format!("GF({n})")))
            }
            RingKind::Valuation => verdict(Answer::No, "R1", FINITE_LOCAL_PRIME_POWER, None),
        });
    }
    if lv.le_card(k).is_true() {
        let w = match lv.exact() {
            Some(c) if c.is_zero() => format!("field of size {k}"),
            Some(c) => format!("valuation ring of a field of size {k} with value group of rank {c}"),
            None => format!("valuation ring of a field of size {k}"),
        };
        return Ok(verdict(Answer::Yes, "R2", SIZE_AT_LEAST_DIM, Some(w)));
    }
    let pow = exp2_unchecked(k, mode)?;
    // l > 2^k, decided from bounds
    let above = pow.upper().is_some_and(|u| lv.lower() > u);
    if above {
        return Ok(verdict(Answer::No, "R3", POWER_SET_BOUND, None));
    }
    let poly = match kind {
        RingKind::Any => format!("K[X_i | i < {k}] with |K| <= {k}"),
        RingKind::Valuation => format!("valuation ring of size {k} with a chain of 2^{k} primes"),
    };
    if *mode == AxiomMode::Gch {
        return Ok(verdict(Answer::Yes, "R4", GCH_CLASSIFICATION, Some(poly)));
    }
    let equals_pow = match &lv {
        CardValue::Pow2 { base, .. } if base == k => true,
        _ => lv.exact().is_some_and(|a| pow.exact() == Some(a)),
    };
    let p = predicates(k, mode)?;
    if p.psl.is_true() && equals_pow {
        return Ok(verdict(Answer::Yes, "R5", PSL_POLY, Some(poly)));
    }
    let mut v = verdict(Answer::Unknown, "R6", OPEN, None);
    v.notes.push(NOTE_VALUATION_ABOVE.into());
    if cofinality(k)? > Cardinal::aleph0() {
        if equals_pow {
            v.notes.push(NOTE_INDEPENDENT.into());
        } else if lv.exact().is_some_and(|a| pow.ge_card(a) != TriBool::False) {
            v.notes.push(NOTE_IF_POWER_INDEPENDENT.into());
        }
    }
    if !equals_pow {
        v.notes.push(NOTE_OPEN_BETWEEN.into());
    }
    Ok(v)
}

/// A dimension value in a catalog entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Dim {
    /// A term with its value in the current mode.
    Value(CardTerm, CardValue),
    /// Not attained by any chain.
    None,
    Interval(CardValue, CardValue),
    Unknown,
}

impl Dim {
    fn exact(c: Cardinal) -> Self {
        Dim::Value(CardTerm::Card(c.clone()), CardValue::Exact(c))
    }

    fn pow2(base: &Cardinal, mode: &AxiomMode) -> Result<Self, CardError> {
        let t = CardTerm::Pow2(base.clone());
        let v = t.resolve(mode)?;
        Ok(Dim::Value(t, v))
    }

    pub fn as_cardinal(&self) -> Option<&Cardinal> {
        match self {
            Dim::Value(_, v) => v.exact(),
            _ => None,
        }
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dim::Value(CardTerm::Pow2(b), CardValue::Exact(c)) => write!(f, "2^{b} = {c}"),
            Dim::Value(t, _) => write!(f, "{t}"),
            Dim::None => f.write_str("none"),
            Dim::Interval(lo, hi) => write!(f, "[{lo}, {hi}]"),
            Dim::Unknown => f.write_str("unknown"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingDescriptor {
    /// Valuation ring of a field of size `carrier` whose value group has
    /// `rank` nontrivial isolated subgroups.
    ValuationFromGroup { carrier: Cardinal, rank: Cardinal },
    /// `R[X_i | i < vars]` with `|R| = base <= vars`.
    PolyRing { base: Cardinal, vars: Cardinal },
    /// Leavitt path algebra of `E_P` for a chain `P` over a field of size
    /// `field`.
    LpaFromChain { chain: SymbolicChain, field: Cardinal },
    /// The disjoint union of all well-orders below `kappa`.
    BerryFamily { kappa: Cardinal },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub cardinality: Dim,
    pub cdim: Dim,
    pub scdim: Dim,
    /// `(field, anchor)` pairs.
    pub justifications: Vec<(&'static str, &'static str)>,
}

fn chain_size(c: &SymbolicChain) -> Cardinal {
    match c {
        SymbolicChain::Fin(n) => Cardinal::Finite(*n),
        SymbolicChain::Concat(parts) => parts
            .iter()
            .map(chain_size)
            .fold(Cardinal::Finite(0), |a, b| card_add(&a, &b).unwrap_or(Cardinal::aleph0())),
        _ => Cardinal::aleph0(),
    }
}

fn contains_rats(c: &SymbolicChain) -> bool {
    match c {
        SymbolicChain::Rats => true,
        SymbolicChain::Concat(parts) => parts.iter().any(contains_rats),
        _ => false,
    }
}

pub fn catalog(desc: &RingDescriptor, mode: &AxiomMode) -> Result<CatalogEntry, CardError> {
    use anchors::*;
    mode.validate()?;
    let unsupported = |m: &str| Err(CardError::UnsupportedDescriptor(m.into()));
    match desc {
        RingDescriptor::ValuationFromGroup { carrier, rank } => {
            if rank > carrier || (carrier.is_finite() && !rank.is_zero()) || *carrier < Cardinal::Finite(2) {
                return unsupported("value group rank must not exceed an infinite carrier size");
            }
            Ok(CatalogEntry {
                cardinality: Dim::exact(carrier.clone()),
                cdim: Dim::exact(rank.clone()),
                scdim: Dim::exact(rank.clone()),
                justifications: vec![("cdim", VALUATION_FROM_GROUP), ("scdim", VALUATION_FROM_GROUP)],
            })
        }
        RingDescriptor::PolyRing { base, vars } => {
            if vars.is_finite() || base > vars {
                return unsupported("polynomial ring needs infinitely many variables and |R| <= vars");
            }
            let ded = ded_bounds(vars, mode)?;
            let cdim = match &ded.exact {
                Some(CardValue::Pow2 { .. }) => Dim::pow2(vars, mode)?,
                Some(CardValue::Exact(c)) => Dim::exact(c.clone()),
                None => Dim::Interval(CardValue::Exact(ded.lo.clone()), ded.hi.clone()),
            };
            let p = predicates(vars, mode)?;
            let scdim = if *mode == AxiomMode::Gch {
                Dim::exact(vars.successor()?)
            } else if p.psl.is_true() {
                Dim::pow2(vars, mode)?
            } else {
                Dim::Interval(CardValue::Exact(vars.successor()?), ded.hi.clone())
            };
            Ok(CatalogEntry {
                cardinality: Dim::exact(vars.clone()),
                cdim,
                scdim,
                justifications: vec![("cdim", POLY_DED), ("scdim", PSL_POLY)],
            })
        }
        RingDescriptor::LpaFromChain { chain, field } => {
            let chain = chain.normalize();
            let size = chain_size(&chain);
            if field.is_finite() && field.is_zero() {
                return unsupported("field must be nonempty");
            }
            let edges = match &size {
                Cardinal::Finite(n) if *n < 2 => Cardinal::Finite(0),
                _ => card_mul(&Cardinal::aleph0(), &size)?,
            };
            let eps = card_add(&size, &edges)?;
            let cardinality = if edges.is_zero() {
                match (field, &size) {
                    (Cardinal::Finite(k), Cardinal::Finite(n)) => {
                        Dim::exact(Cardinal::Finite(k.checked_pow(*n as u32).ok_or(CardError::Overflow)?))
                    }
                    _ => Dim::exact(field.clone()),
                }
            } else {
                Dim::exact(field.max(&eps).clone())
            };
            let (cdim, scdim) = match &size {
                Cardinal::Finite(n) => {
                    let d = Cardinal::Finite(n.saturating_sub(1));
                    (Dim::exact(d.clone()), Dim::exact(d))
                }
                _ if contains_rats(&chain) => {
                    (Dim::pow2(&Cardinal::aleph0(), mode)?, Dim::pow2(&Cardinal::aleph0(), mode)?)
                }
                _ => (Dim::exact(Cardinal::aleph0()), Dim::exact(Cardinal::aleph0())),
            };
            Ok(CatalogEntry {
                cardinality,
                cdim,
                scdim,
                justifications: vec![("cardinality", LPA_CARDINALITY), ("cdim", LPA_DIMS), ("scdim", LPA_DIMS)],
            })
        }
        RingDescriptor::BerryFamily { kappa } => berry_symbolic(kappa),
    }
}

/// Dimensions for the disjoint union of the well-orders of every length
/// below `kappa`: the supremum `kappa` is attained only when `kappa` is a
/// successor, in which case the supremum is its predecessor.
pub fn berry_symbolic(kappa: &Cardinal) -> Result<CatalogEntry, CardError> {
    let (cdim, scdim) = match kappa {
        Cardinal::Finite(0) => return Err(CardError::UnsupportedDescriptor("empty family".into())),
        Cardinal::Finite(n) => {
            let d = Cardinal::Finite(n - 1);
            (Dim::exact(d.clone()), Dim::exact(d))
        }
        Cardinal::Aleph(a) => match a.pred() {
            Some(p) => (Dim::exact(Cardinal::Aleph(p.clone())), Dim::exact(Cardinal::Aleph(p))),
            None => (Dim::exact(kappa.clone()), Dim::None),
        },
    };
    let cardinality = match kappa {
        Cardinal::Finite(_) => Dim::exact(Cardinal::aleph0()),
        _ => Dim::exact(kappa.clone()),
    };
    Ok(CatalogEntry {
        cardinality,
        cdim,
        scdim,
        justifications: vec![("cdim", anchors::BERRY), ("scdim", anchors::BERRY)],
    })
}

/// A cut of ℚ used to index a prime of a polynomial ring in variables
/// `X_q`, `q ∈ ℚ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QCut {
    /// `{q' : q' < q}`.
    At(Rational),
    /// `{q' : q' <= q}`.
    After(Rational),
}

impl QCut {
    pub fn contains(&self, x: Rational) -> bool {
        match self {
            QCut::At(q) => x < *q,
            QCut::After(q) => x <= *q,
        }
    }

    fn key(&self) -> (Rational, u8) {
        match self {
            QCut::At(q) => (*q, 0),
            QCut::After(q) => (*q, 1),
        }
    }
}

impl PartialOrd for QCut {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QCut {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for QCut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QCut::At(q) => write!(f, "{q}"),
            QCut::After(q) => write!(f, "{q}+"),
        }
    }
}

/// The prime `⟨X_i | i ∈ cut⟩` with a variable in the next prime but not
/// in this one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyPrime {
    pub cut: QCut,
    pub label: String,
    pub witness_to_next: Option<Rational>,
}

pub fn witness_chain_poly(cuts: &[QCut]) -> Vec<PolyPrime> {
    let mut sorted: Vec<QCut> = cuts.to_vec();
    sorted.sort();
    sorted.dedup();
    let two = Rational::from_integer(2);
    let mut out = Vec::with_capacity(sorted.len());
    for (i, c) in sorted.iter().enumerate() {
        let label = match c {
            QCut::At(q) => format!("<X_i | i < {q}>"),
            QCut::After(q) => format!("<X_i | i <= {q}>"),
        };
        let witness = sorted.get(i + 1).map(|next| match (c, next) {
            (QCut::At(q), QCut::After(r)) if q == r => *q,
            (QCut::At(q) | QCut::After(q), QCut::At(r) | QCut::After(r)) => (q + r) / two,
        });
        out.push(PolyPrime { cut: *c, label, witness_to_next: witness });
    }
    out
}

/// The limit `κ = sup κ_n` of `κ_0 = base`, `κ_{n+1} = 2^{κ_n}`, carried as
/// a name together with the facts that hold for it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerCardinal {
    pub name: String,
    pub steps: Vec<String>,
    pub psl: TriBool,
    pub strong_limit: TriBool,
    pub cofinality: Cardinal,
}

pub fn strong_limit_tower(base: &Cardinal, shown: usize) -> Result<TowerCardinal, CardError> {
    if base.is_finite() {
        return Err(CardError::FiniteCardinal);
    }
    let mut steps = vec![format!("k_0 = {base}")];
    for n in 1..shown {
        steps.push(format!("k_{n} = 2^k_{}", n - 1));
    }
    Ok(TowerCardinal {
        name: format!("beth_w({base})"),
        steps,
        psl: TriBool::True,
        strong_limit: TriBool::True,
        cofinality: Cardinal::aleph0(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn al(i: u64) -> Cardinal {
        Cardinal::aleph(i)
    }

    fn ord(t: &[(u32, u64)]) -> Ordinal {
        Ordinal::from_terms(t.to_vec()).unwrap()
    }

    #[test]
    fn ordinal_display_and_order() {
        assert_eq!(ord(&[(2, 3), (1, 1), (0, 1)]).to_string(), "w^2*3+w+1");
        assert_eq!(ord(&[(1, 2), (0, 3)]).to_string(), "w*2+3");
        assert!(Ordinal::finite(5) < Ordinal::omega());
        assert!(ord(&[(1, 1), (0, 7)]) < ord(&[(1, 2)]));
        assert!(Ordinal::omega() < ord(&[(1, 1), (0, 1)]));
        assert_eq!(Ordinal::finite(3).add(&Ordinal::omega()), Ordinal::omega());
        assert_eq!(Ordinal::omega().add(&Ordinal::finite(3)), ord(&[(1, 1), (0, 3)]));
        assert!(Ordinal::omega().is_limit() && Ordinal::finite(2).is_successor());
        assert!(Ordinal::from_terms(vec![(0, 1), (1, 1)]).is_err());
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(card_add(&al(3), &al(1)).unwrap(), al(3));
        assert_eq!(card_add(&Cardinal::Finite(2), &Cardinal::Finite(3)).unwrap(), Cardinal::Finite(5));
        assert_eq!(card_mul(&al(0), &Cardinal::Finite(7)).unwrap(), al(0));
        assert_eq!(card_mul(&al(4), &Cardinal::Finite(0)).unwrap(), Cardinal::Finite(0));
    }

    #[test]
    fn exp2_examples() {
        assert_eq!(card_exp2(&al(0), &AxiomMode::Gch).unwrap(), CardValue::Exact(al(1)));
        assert_eq!(card_exp2(&al(0), &AxiomMode::cohen()).unwrap(), CardValue::Exact(al(2)));
        assert_eq!(card_exp2(&al(1), &AxiomMode::cohen()).unwrap(), CardValue::Exact(al(2)));
        assert_eq!(
            card_exp2(&Cardinal::Finite(5), &AxiomMode::table_empty()).unwrap(),
            CardValue::Exact(Cardinal::Finite(32))
        );
        assert_eq!(
            card_exp2(&al(1), &AxiomMode::table_empty()).unwrap(),
            CardValue::Pow2 { base: al(1), lo: al(2), hi: None }
        );
    }

    #[test]
    fn table_validation() {
        let mut t = ContinuumTable::empty();
        t.entries.insert(Ordinal::finite(1), Ordinal::finite(1));
        assert!(t.validate().is_err());
        let mut t = ContinuumTable::empty();
        t.entries.insert(Ordinal::finite(0), Ordinal::finite(5));
        t.entries.insert(Ordinal::finite(1), Ordinal::finite(3));
        assert!(t.validate().is_err());
        let mut t = ContinuumTable::cohen();
        t.entries.insert(Ordinal::finite(3), Ordinal::finite(7));
        assert!(t.validate().is_err());
        assert!(ContinuumTable::cohen().validate().is_ok());
    }

    #[test]
    fn cofinality_examples() {
        assert_eq!(cofinality(&al(0)).unwrap(), al(0));
        assert_eq!(cofinality(&Cardinal::aleph_omega()).unwrap(), al(0));
        assert_eq!(cofinality(&al(2)).unwrap(), al(2));
        assert_eq!(cofinality(&Cardinal::Finite(3)), Err(CardError::FiniteCardinal));
    }

    #[test]
    fn predicate_examples() {
        for mode in [AxiomMode::Gch, AxiomMode::cohen(), AxiomMode::table_empty()] {
            assert_eq!(predicates(&al(0), &mode).unwrap().psl, TriBool::True);
        }
        assert_eq!(predicates(&al(5), &AxiomMode::Gch).unwrap().psl, TriBool::True);
        assert_eq!(predicates(&al(1), &AxiomMode::cohen()).unwrap().psl, TriBool::False);
        assert_eq!(predicates(&al(2), &AxiomMode::cohen()).unwrap().psl, TriBool::True);
        assert_eq!(predicates(&al(1), &AxiomMode::table_empty()).unwrap().psl, TriBool::Unknown);
        let p = predicates(&Cardinal::aleph_omega(), &AxiomMode::cohen()).unwrap();
        assert!(p.singular && p.limit_card && p.strong_limit.is_true());
        assert_eq!(predicates(&al(3), &AxiomMode::Gch).unwrap().strong_limit, TriBool::False);
    }

    #[test]
    fn ded_examples() {
        let d = ded_bounds(&al(0), &AxiomMode::Gch).unwrap();
        assert_eq!(d.exact, Some(CardValue::Exact(al(1))));
        let d = ded_bounds(&al(1), &AxiomMode::table_empty()).unwrap();
        assert_eq!(d.lo, al(2));
        assert_eq!(d.exact, None);
        assert_eq!(d.notes, vec![NOTE_DED_INDEPENDENT.to_string()]);
        let d = ded_bounds(&al(0), &AxiomMode::cohen()).unwrap();
        assert_eq!(d.hi, CardValue::Exact(al(2)));
        assert_eq!(d.exact, Some(CardValue::Exact(al(2))));
    }

    #[test]
    fn exists_ring_table() {
        let any = RingKind::Any;
        let f = |n| CardTerm::Card(Cardinal::Finite(n));
        let e = AxiomMode::table_empty();
        let v = exists_ring(&Cardinal::Finite(4), &f(0), &e, any).unwrap();
        assert_eq!((v.answer, v.rule, v.witness.as_deref()), (Answer::Yes, "R1", Some("Z/4Z")));
        assert_eq!(exists_ring(&Cardinal::Finite(5), &f(1), &e, any).unwrap().answer, Answer::No);
        assert_eq!(exists_ring(&Cardinal::Finite(1), &f(0), &e, any).unwrap().rule, "R0");
        assert_eq!(exists_ring(&al(0), &al(0).into(), &e, any).unwrap().rule, "R2");
        let v = exists_ring(&al(0), &CardTerm::Pow2(al(0)), &e, any).unwrap();
        assert_eq!((v.answer, v.rule), (Answer::Yes, "R5"));
        assert_eq!(exists_ring(&al(1), &al(2).into(), &AxiomMode::Gch, any).unwrap().rule, "R4");
        let v = exists_ring(&al(1), &al(2).into(), &e, any).unwrap();
        assert_eq!(v.answer, Answer::Unknown);
        assert!(v.notes.contains(&NOTE_IF_POWER_INDEPENDENT.to_string()));
        let v = exists_ring(&al(1), &CardTerm::Pow2(al(1)), &e, any).unwrap();
        assert!(v.notes.contains(&NOTE_INDEPENDENT.to_string()));
        assert_eq!(exists_ring(&Cardinal::Finite(6), &f(0), &e, RingKind::Valuation).unwrap().answer, Answer::No);
        assert_eq!(exists_ring(&Cardinal::Finite(8), &f(0), &e, RingKind::Valuation).unwrap().answer, Answer::Yes);
        assert_eq!(exists_ring(&al(0), &al(2).into(), &AxiomMode::Gch, any).unwrap().rule, "R3");
        assert_eq!(exists_ring(&al(0), &al(3).into(), &AxiomMode::cohen(), any).unwrap().rule, "R3");
    }

    #[test]
    fn catalog_examples() {
        let e = AxiomMode::table_empty();
        let c = catalog(&RingDescriptor::PolyRing { base: al(0), vars: al(0) }, &e).unwrap();
        assert_eq!(c.cardinality.as_cardinal(), Some(&al(0)));
        assert_eq!(c.scdim.to_string(), "2^aleph(0)");
        let c = catalog(&RingDescriptor::LpaFromChain { chain: SymbolicChain::Rats, field: al(0) }, &e).unwrap();
        assert_eq!(c.cardinality.as_cardinal(), Some(&al(0)));
        assert_eq!(c.scdim.to_string(), "2^aleph(0)");
        let c = catalog(&RingDescriptor::BerryFamily { kappa: Cardinal::aleph_omega() }, &e).unwrap();
        assert_eq!(c.cdim.as_cardinal(), Some(&Cardinal::aleph_omega()));
        assert_eq!(c.scdim, Dim::None);
        let c = catalog(&RingDescriptor::ValuationFromGroup { carrier: al(0), rank: Cardinal::Finite(3) }, &e).unwrap();
        assert_eq!(c.cdim.as_cardinal(), Some(&Cardinal::Finite(3)));
    }

    #[test]
    fn poly_witnesses() {
        let q = Rational::from_integer;
        let w = witness_chain_poly(&[QCut::At(q(1)), QCut::At(q(0))]);
        assert_eq!(w[0].witness_to_next, Some(Rational::new(1, 2)));
        let w = witness_chain_poly(&[QCut::At(q(2)), QCut::After(q(2))]);
        assert_eq!(w[0].witness_to_next, Some(q(2)));
        assert_eq!(witness_chain_poly(&[QCut::At(q(0))]).len(), 1);
    }
}
