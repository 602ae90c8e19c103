//! The graph `E_P` of a poset, the completion `Â(P)` by classes of downward
//! directed subsets without a least element, and the prime spectrum order
//! of the Leavitt path algebra `L_K(E_P)`, which `Â(P)` models.
//!
//! For finite posets the completion is computed exactly. For the chains
//! ℚ, ℤ, ω and ω^op it is computed on the fragment of finitely described
//! subsets (finite unions of intervals); cuts at irrationals have no such
//! representative, so that fragment is a proper part of `Â(ℚ)`.
//!
//! The algebra itself is generated by vertices, edges and ghost edges
//! subject to the relations
//!
//! * (V) `v w = δ_{v,w} v`,
//! * (E1) `s(e) e = e r(e) = e`,
//! * (E2) `r(e) e* = e* s(e) = e*`,
//! * (CK1) `e* f = δ_{e,f} r(e)`,
//! * (CK2) `v = Σ_{s(e) = v} e e*` for regular `v`.
//!
//! No arithmetic in the algebra is implemented.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::order::{FiniteOrder, FinitePoset, SymbolicChain};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpectraError {
    #[error("subset is empty")]
    EmptySubset,
    #[error("element index out of range")]
    ForeignElement,
    #[error("|P| = {n} exceeds the exhaustive bound {bound}")]
    TooLarge { n: usize, bound: usize },
    #[error("unsupported carrier {0}")]
    UnsupportedCarrier(String),
    #[error("subsets live over different carriers")]
    CarrierMismatch,
    #[error("multiplicity must be at least 1")]
    ZeroMultiplicity,
}

/// Number of parallel edges along one strict relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Multiplicity {
    Finite(u64),
    CountablyInfinite,
}

impl Multiplicity {
    pub fn finite(m: u64) -> Result<Self, SpectraError> {
        if m == 0 {
            Err(SpectraError::ZeroMultiplicity)
        } else {
            Ok(Multiplicity::Finite(m))
        }
    }

    fn plus(self, other: Multiplicity) -> Multiplicity {
        match (self, other) {
            (Multiplicity::Finite(a), Multiplicity::Finite(b)) => Multiplicity::Finite(a + b),
            _ => Multiplicity::CountablyInfinite,
        }
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplicity::Finite(m) => write!(f, "{m}"),
            Multiplicity::CountablyInfinite => f.write_str("omega"),
        }
    }
}

/// A graph with one vertex `v_p` per poset element and a group of parallel
/// edges `v_p → v_q` for every `p > q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpaGraph {
    labels: Vec<String>,
    arcs: BTreeMap<(usize, usize), Multiplicity>,
}

impl LpaGraph {
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// Arc groups keyed by `(source, range)`.
    pub fn arcs(&self) -> &BTreeMap<(usize, usize), Multiplicity> {
        &self.arcs
    }

    /// Total multiplicity of edges leaving `v`, `None` when there are none.
    pub fn out_multiplicity(&self, v: usize) -> Option<Multiplicity> {
        self.arcs.iter().filter(|((s, _), _)| *s == v).map(|(_, m)| *m).reduce(Multiplicity::plus)
    }

    /// A topological order of the vertices (sources first), or `None` on a
    /// cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.labels.len();
        let mut indeg = vec![0usize; n];
        for &(_, r) in self.arcs.keys() {
            indeg[r] += 1;
        }
        let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut out = Vec::with_capacity(n);
        while let Some(v) = ready.pop() {
            out.push(v);
            for &(s, r) in self.arcs.keys() {
                if s == v {
                    indeg[r] -= 1;
                    if indeg[r] == 0 {
                        ready.push(r);
                    }
                }
            }
        }
        (out.len() == n).then_some(out)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }
}

pub fn build_ep<T: fmt::Display>(p: &FinitePoset<T>, mult: Multiplicity) -> LpaGraph {
    let labels = p.elements().iter().map(|e| format!("{e}")).collect();
    let arcs = p.strict_pairs_desc().into_iter().map(|pq| (pq, mult)).collect();
    LpaGraph { labels, arcs }
}

/// Vertices emitting a finite, nonzero number of edges.
pub fn regular_vertices(g: &LpaGraph) -> Vec<usize> {
    (0..g.vertex_count()).filter(|&v| matches!(g.out_multiplicity(v), Some(Multiplicity::Finite(_)))).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathCount {
    Exact(u128),
    Aleph0,
}

impl fmt::Display for PathCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathCount::Exact(n) => write!(f, "{n}"),
            PathCount::Aleph0 => f.write_str("aleph(0)"),
        }
    }
}

/// Number of finite paths, vertices counted as paths of length 0.
pub fn count_paths(g: &LpaGraph) -> PathCount {
    if g.arcs.values().any(|m| *m == Multiplicity::CountablyInfinite) {
        return PathCount::Aleph0;
    }
    let order = g.topological_order().expect("E_P is acyclic");
    // from[v]: paths starting at v
    let mut from = vec![0u128; g.vertex_count()];
    for &v in order.iter().rev() {
        let mut total = 1u128;
        for (&(s, r), m) in &g.arcs {
            if s == v {
                let Multiplicity::Finite(m) = m else { unreachable!() };
                total += u128::from(*m) * from[r];
            }
        }
        from[v] = total;
    }
    PathCount::Exact(from.iter().sum())
}

/// Deterministic DOT rendering; vertices and edges sorted by label.
pub fn export_dot(g: &LpaGraph) -> String {
    let mut idx: Vec<usize> = (0..g.vertex_count()).collect();
    idx.sort_by(|&a, &b| g.labels[a].cmp(&g.labels[b]));
    let mut out = String::from("digraph E_P {\n");
    for &v in &idx {
        out.push_str(&format!("  \"v_{}\";\n", g.labels[v]));
    }
    let mut arcs: Vec<(&String, &String, Multiplicity)> =
        g.arcs.iter().map(|(&(s, r), m)| (&g.labels[s], &g.labels[r], *m)).collect();
    arcs.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
    for (s, r, m) in arcs {
        match m {
            Multiplicity::Finite(k) => {
                for _ in 0..k {
                    out.push_str(&format!("  \"v_{s}\" -> \"v_{r}\";\n"));
                }
            }
            Multiplicity::CountablyInfinite => {
                out.push_str(&format!("  \"v_{s}\" -> \"v_{r}\" [label=\"ω\", style=bold];\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}

/// `s1 ⪯ s2`: every element of `s2` lies above some element of `s1`.
pub fn subset_preceq(p: &impl FiniteOrder, s1: &[usize], s2: &[usize]) -> Result<bool, SpectraError> {
    if s1.is_empty() || s2.is_empty() {
        return Err(SpectraError::EmptySubset);
    }
    if s1.iter().chain(s2).any(|&x| x >= p.size()) {
        return Err(SpectraError::ForeignElement);
    }
    Ok(s2.iter().all(|&b| s1.iter().any(|&a| p.leq_at(a, b))))
}

pub fn is_downward_directed(p: &impl FiniteOrder, s: &[usize]) -> bool {
    !s.is_empty() && s.iter().all(|&a| s.iter().all(|&b| s.iter().any(|&c| p.leq_at(c, a) && p.leq_at(c, b))))
}

pub fn least_element(p: &impl FiniteOrder, s: &[usize]) -> Option<usize> {
    s.iter().copied().find(|&a| s.iter().all(|&b| p.leq_at(a, b)))
}

/// Whether a completion is exact or restricted to finitely described
/// subsets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fragment {
    Exact,
    FinDesc,
}

impl Fragment {
    pub fn as_str(self) -> &'static str {
        match self {
            Fragment::Exact => "exact",
            Fragment::FinDesc => "finDesc",
        }
    }
}

/// A completion `Â(P)` (or a finite window of it): the original elements
/// followed by the cut points `x_[S]`, with the order as a matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ATPoset {
    pub orig: Vec<String>,
    /// Class keys of the cut points.
    pub cuts: Vec<String>,
    leq: Vec<bool>,
    pub fragment: Fragment,
    /// Number of subsets examined by an exhaustive scan.
    pub scanned: Option<u64>,
}

impl ATPoset {
    pub fn label(&self, i: usize) -> String {
        if i < self.orig.len() {
            self.orig[i].clone()
        } else {
            format!("x{}", self.cuts[i - self.orig.len()])
        }
    }

    pub fn is_cut(&self, i: usize) -> bool {
        i >= self.orig.len()
    }

    /// Strictly related pairs `(a, b)` with `a < b`.
    pub fn relation(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|&(a, b)| a != b && self.leq_at(a, b)).collect()
    }

    pub fn is_partial_order(&self) -> bool {
        crate::order::check_partial_order(self.size(), |a, b| self.leq_at(a, b)).is_ok()
    }

    pub fn is_total(&self) -> bool {
        let n = self.size();
        (0..n).all(|a| (0..n).all(|b| self.leq_at(a, b) || self.leq_at(b, a)))
    }
}

impl FiniteOrder for ATPoset {
    fn size(&self) -> usize {
        self.orig.len() + self.cuts.len()
    }

    fn leq_at(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.size() + j]
    }
}

pub const AT_FINITE_BOUND: usize = 20;

fn members(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

/// `Â(P)` for a finite poset, by scanning every nonempty subset for
/// eligibility. Finite directed sets have a least element, so no cut point
/// survives and the result is a copy of `P`.
pub fn at_finite<T: fmt::Display>(p: &FinitePoset<T>) -> Result<ATPoset, SpectraError> {
    let n = p.len();
    if n > AT_FINITE_BOUND {
        return Err(SpectraError::TooLarge { n, bound: AT_FINITE_BOUND });
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut scanned = 0u64;
    for mask in 1u32..(1u32 << n) {
        scanned += 1;
        let s = members(mask, n);
        if !is_downward_directed(p, &s) || least_element(p, &s).is_some() {
            continue;
        }
        let known = classes
            .iter()
            .any(|c| subset_preceq(p, c, &s).unwrap_or(false) && subset_preceq(p, &s, c).unwrap_or(false));
        if !known {
            classes.push(s);
        }
    }
    let orig: Vec<String> = p.elements().iter().map(|e| format!("{e}")).collect();
    let m = n + classes.len();
    let mut leq = vec![false; m * m];
    let single = |i: usize| vec![i];
    for a in 0..m {
        for b in 0..m {
            let sa = if a < n { single(a) } else { classes[a - n].clone() };
            let sb = if b < n { single(b) } else { classes[b - n].clone() };
            leq[a * m + b] = match (a < n, b < n) {
                (true, true) => p.leq_at(a, b),
                // rules (2) to (4) all reduce to ⪯ with singletons
                _ => subset_preceq(p, &sa, &sb)?,
            };
        }
    }
    let cuts = classes
        .iter()
        .map(|c| format!("[{}]", c.iter().map(|&i| orig[i].as_str()).collect::<Vec<_>>().join(",")))
        .collect();
    Ok(ATPoset { orig, cuts, leq, fragment: Fragment::Exact, scanned: Some(scanned) })
}

/// Chains whose completion is computed on finitely described subsets.
/// Elements are addressed by rational positions: `q` for ℚ, `k` for ℤ and
/// ω, and `-k` for the element `k` of ω^op.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Carrier {
    Rats,
    Ints,
    Omega,
    OmegaOp,
}

impl Carrier {
    pub fn from_chain(c: &SymbolicChain) -> Result<Self, SpectraError> {
        match c.normalize() {
            SymbolicChain::Rats => Ok(Carrier::Rats),
            SymbolicChain::Ints => Ok(Carrier::Ints),
            SymbolicChain::Omega => Ok(Carrier::Omega),
            SymbolicChain::OmegaOp => Ok(Carrier::OmegaOp),
            other => Err(SpectraError::UnsupportedCarrier(format!("{other}"))),
        }
    }

    pub fn chain(self) -> SymbolicChain {
        match self {
            Carrier::Rats => SymbolicChain::Rats,
            Carrier::Ints => SymbolicChain::Ints,
            Carrier::Omega => SymbolicChain::Omega,
            Carrier::OmegaOp => SymbolicChain::OmegaOp,
        }
    }

    pub fn contains(self, x: Rational) -> bool {
        match self {
            Carrier::Rats => true,
            Carrier::Ints => x.is_integer(),
            Carrier::Omega => x.is_integer() && x >= Rational::from_integer(0),
            Carrier::OmegaOp => x.is_integer() && x <= Rational::from_integer(0),
        }
    }

    fn discrete(self) -> bool {
        self != Carrier::Rats
    }

    /// Positions probed when no explicit list is given.
    pub fn default_positions(self) -> Vec<Rational> {
        let q = Rational::from_integer;
        match self {
            Carrier::Rats => crate::chains::default_probes(),
            Carrier::Ints => (-2..=2).map(q).collect(),
            Carrier::Omega => (0..=4).map(q).collect(),
            Carrier::OmegaOp => (-4..=0).map(q).collect(),
        }
    }
}

/// An interval endpoint: value and whether it is included.
pub type Endpoint = Option<(Rational, bool)>;

/// An interval of positions; `None` endpoints are unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interval {
    pub lo: Endpoint,
    pub hi: Endpoint,
}

impl Interval {
    pub fn new(lo: Endpoint, hi: Endpoint) -> Self {
        Interval { lo, hi }
    }

    pub fn contains(&self, x: Rational) -> bool {
        let above = match self.lo {
            None => true,
            Some((v, closed)) => x > v || (closed && x == v),
        };
        let below = match self.hi {
            None => true,
            Some((v, closed)) => x < v || (closed && x == v),
        };
        above && below
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.lo {
            None => f.write_str("(-inf")?,
            Some((v, true)) => write!(f, "[{v}")?,
            Some((v, false)) => write!(f, "({v}")?,
        }
        match self.hi {
            None => f.write_str(", inf)"),
            Some((v, true)) => write!(f, ", {v}]"),
            Some((v, false)) => write!(f, ", {v})"),
        }
    }
}

fn lo_cmp(a: &Endpoint, b: &Endpoint) -> Ordering {
    match (a, b) {
        (None, None) => Ordering::Equal,
        (None, _) => Ordering::Less,
        (_, None) => Ordering::Greater,
        // a closed lower end starts earlier than an open one at the same value
        (Some((x, cx)), Some((y, cy))) => x.cmp(y).then(cy.cmp(cx)),
    }
}

fn hi_cmp(a: &Endpoint, b: &Endpoint) -> Ordering {
    match (a, b) {
        (None, None) => Ordering::Equal,
        (None, _) => Ordering::Greater,
        (_, None) => Ordering::Less,
        (Some((x, cx)), Some((y, cy))) => x.cmp(y).then(cx.cmp(cy)),
    }
}

/// Infimum of a subset of a chain and whether it is attained; `None` value
/// is `-∞`. Two subsets of a chain are `≈` exactly when their keys agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct InfKey {
    pub value: Option<Rational>,
    pub attained: bool,
}

impl InfKey {
    /// `⪯` between subsets with these keys.
    pub fn preceq(&self, other: &InfKey) -> bool {
        match self.value.cmp(&other.value) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => self.attained || !other.attained,
        }
    }
}

impl fmt::Display for InfKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.value, self.attained) {
            (None, _) => f.write_str("(-inf, inf)"),
            (Some(v), true) => write!(f, "[{v}, inf)"),
            (Some(v), false) => write!(f, "({v}, inf)"),
        }
    }
}

/// A nonempty finite union of intervals of a [`Carrier`], normalized to
/// sorted disjoint pieces (closed integer endpoints on discrete carriers).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinDescSubset {
    carrier: Carrier,
    pieces: Vec<Interval>,
}

impl FinDescSubset {
    pub fn new(carrier: Carrier, pieces: Vec<Interval>) -> Result<Self, SpectraError> {
        let mut ps: Vec<Interval> = pieces.into_iter().filter_map(|i| normalize_piece(carrier, i)).collect();
        if ps.is_empty() {
            return Err(SpectraError::EmptySubset);
        }
        ps.sort_by(|a, b| lo_cmp(&a.lo, &b.lo));
        let mut merged: Vec<Interval> = Vec::with_capacity(ps.len());
        for p in ps {
            if let Some(last) = merged.last_mut() {
                if touches(carrier, last, &p) {
                    if hi_cmp(&p.hi, &last.hi) == Ordering::Greater {
                        last.hi = p.hi;
                    }
                    continue;
                }
            }
            merged.push(p);
        }
        Ok(FinDescSubset { carrier, pieces: merged })
    }

    pub fn singleton(carrier: Carrier, x: Rational) -> Result<Self, SpectraError> {
        Self::new(carrier, vec![Interval::new(Some((x, true)), Some((x, true)))])
    }

    /// `{p : p > x}`, or the whole carrier for `x = None`.
    pub fn above(carrier: Carrier, x: Option<Rational>) -> Result<Self, SpectraError> {
        Self::new(carrier, vec![Interval::new(x.map(|v| (v, false)), None)])
    }

    pub fn carrier(&self) -> Carrier {
        self.carrier
    }

    pub fn pieces(&self) -> &[Interval] {
        &self.pieces
    }

    pub fn contains(&self, x: Rational) -> bool {
        self.carrier.contains(x) && self.pieces.iter().any(|p| p.contains(x))
    }

    pub fn inf_key(&self) -> InfKey {
        match self.pieces[0].lo {
            None => InfKey { value: None, attained: false },
            Some((v, closed)) => InfKey { value: Some(v), attained: closed },
        }
    }

    /// Downward directed (automatic in a chain) with no least element.
    pub fn is_eligible(&self) -> bool {
        !self.inf_key().attained
    }
}

impl fmt::Display for FinDescSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.pieces.iter().enumerate() {
            if i > 0 {
                f.write_str(" u ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

fn normalize_piece(carrier: Carrier, i: Interval) -> Option<Interval> {
    let (mut lo, mut hi) = (i.lo, i.hi);
    if carrier.discrete() {
        let one = Rational::from_integer(1);
        lo = lo.map(|(v, c)| (if c { v.ceil() } else { v.floor() + one }, true));
        hi = hi.map(|(v, c)| (if c { v.floor() } else { v.ceil() - one }, true));
        let zero = Rational::from_integer(0);
        if carrier == Carrier::Omega && lo.is_none_or(|(v, _)| v < zero) {
            lo = Some((zero, true));
        }
        if carrier == Carrier::OmegaOp && hi.is_none_or(|(v, _)| v > zero) {
            hi = Some((zero, true));
        }
    }
    if let (Some((a, ca)), Some((b, cb))) = (lo, hi) {
        if a > b || (a == b && !(ca && cb)) {
            return None;
        }
    }
    Some(Interval { lo, hi })
}

/// `b` starts no later than `a` ends, or right after it on a discrete
/// carrier. Assumes `lo(a) <= lo(b)`.
fn touches(carrier: Carrier, a: &Interval, b: &Interval) -> bool {
    let (Some((ah, ac)), Some((bl, bc))) = (a.hi, b.lo) else {
        return true;
    };
    if carrier.discrete() {
        bl <= ah + Rational::from_integer(1)
    } else {
        bl < ah || (bl == ah && (ac || bc))
    }
}

/// `⪯` on finitely described subsets of a chain, by comparing infima.
pub fn fd_preceq(s1: &FinDescSubset, s2: &FinDescSubset) -> Result<bool, SpectraError> {
    if s1.carrier != s2.carrier {
        return Err(SpectraError::CarrierMismatch);
    }
    Ok(s1.inf_key().preceq(&s2.inf_key()))
}

/// An element of the finitely described completion of a chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FdElem {
    Orig(Rational),
    /// `x_[S]` for an eligible subset `S`.
    Cut(FinDescSubset),
}

impl FdElem {
    /// Sort key: an original `q` sits at `(q, 0)`, and a cut whose
    /// representatives have infimum `v` (not attained) sits right above
    /// every original `<= v`, at `(v, 1)`.
    pub fn key(&self) -> (Option<Rational>, u8) {
        match self {
            FdElem::Orig(q) => (Some(*q), 0),
            FdElem::Cut(s) => (s.inf_key().value, 1),
        }
    }
}

/// `a <= b` in `Â` by the four defining rules, each decided with `⪯`.
pub fn rules_leq(carrier: Carrier, a: &FdElem, b: &FdElem) -> Result<bool, SpectraError> {
    match (a, b) {
        (FdElem::Orig(p), FdElem::Orig(q)) => Ok(p <= q),
        (FdElem::Orig(p), FdElem::Cut(t)) => fd_preceq(&FinDescSubset::singleton(carrier, *p)?, t),
        (FdElem::Cut(s), FdElem::Orig(q)) => fd_preceq(s, &FinDescSubset::singleton(carrier, *q)?),
        (FdElem::Cut(s), FdElem::Cut(t)) => fd_preceq(s, t),
    }
}

/// `a <= b` in `Â` through the linear sort key.
pub fn key_leq(a: &FdElem, b: &FdElem) -> bool {
    a.key() <= b.key()
}

/// A finite window of `Â_fd(C)`: the probed originals, one successor cut
/// per probed rational on ℚ, and the bottom class when `C` is unbounded
/// below.
#[derive(Debug, Clone)]
pub struct FdCompletion {
    pub carrier: Carrier,
    /// Sorted ascending.
    pub elements: Vec<FdElem>,
    pub at: ATPoset,
}

impl FdCompletion {
    pub fn cut_indices(&self) -> Vec<usize> {
        (0..self.elements.len()).filter(|&i| matches!(self.elements[i], FdElem::Cut(_))).collect()
    }

    /// Why the fragment misses part of `Â`, if it does.
    pub fn incompleteness(&self) -> Option<&'static str> {
        (self.carrier == Carrier::Rats).then_some("cuts at irrationals have no finitely described representative")
    }
}

pub fn at_fd(chain: &SymbolicChain, positions: &[Rational]) -> Result<FdCompletion, SpectraError> {
    let carrier = Carrier::from_chain(chain)?;
    let mut origs: Vec<Rational> = positions.iter().copied().filter(|&q| carrier.contains(q)).collect();
    origs.sort();
    origs.dedup();
    let mut elements: Vec<FdElem> = origs.iter().map(|&q| FdElem::Orig(q)).collect();
    if matches!(carrier, Carrier::Rats | Carrier::Ints | Carrier::OmegaOp) {
        elements.push(FdElem::Cut(FinDescSubset::above(carrier, None)?));
    }
    if carrier == Carrier::Rats {
        for &q in &origs {
            elements.push(FdElem::Cut(FinDescSubset::above(carrier, Some(q))?));
        }
    }
    elements.sort_by_key(FdElem::key);
    let m = elements.len();
    let mut leq = vec![false; m * m];
    for a in 0..m {
        for b in 0..m {
            leq[a * m + b] = rules_leq(carrier, &elements[a], &elements[b])?;
        }
    }
    // relabel so originals come first, as in ATPoset
    let perm: Vec<usize> = (0..m)
        .filter(|&i| matches!(elements[i], FdElem::Orig(_)))
        .chain((0..m).filter(|&i| matches!(elements[i], FdElem::Cut(_))))
        .collect();
    let mut pleq = vec![false; m * m];
    for (a, &pa) in perm.iter().enumerate() {
        for (b, &pb) in perm.iter().enumerate() {
            pleq[a * m + b] = leq[pa * m + pb];
        }
    }
    let orig = perm
        .iter()
        .filter_map(|&i| match &elements[i] {
            FdElem::Orig(q) => Some(format!("{q}")),
            FdElem::Cut(_) => None,
        })
        .collect();
    let cuts = perm
        .iter()
        .filter_map(|&i| match &elements[i] {
            FdElem::Cut(s) => Some(format!("{}", s.inf_key())),
            FdElem::Orig(_) => None,
        })
        .collect();
    let at = ATPoset { orig, cuts, leq: pleq, fragment: Fragment::FinDesc, scanned: None };
    Ok(FdCompletion { carrier, elements, at })
}

/// `Â(P)` read as the prime spectrum of `L_K(E_P)` under inclusion.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub at: ATPoset,
    pub primes: Vec<String>,
    /// `Some(total?)` when the input is a chain.
    pub linear: Option<bool>,
    /// Size of the full spectrum when it is only known symbolically.
    pub cardinality: Option<&'static str>,
}

fn prime_labels(at: &ATPoset) -> Vec<String> {
    (0..at.size()).map(|i| format!("P[{}]", at.label(i))).collect()
}

pub fn spectrum_finite<T: fmt::Display>(p: &FinitePoset<T>) -> Result<Spectrum, SpectraError> {
    let at = at_finite(p)?;
    let linear = p.is_chain().then(|| at.is_total());
    Ok(Spectrum { primes: prime_labels(&at), linear, cardinality: None, at })
}

pub fn spectrum_fd(chain: &SymbolicChain, positions: &[Rational]) -> Result<Spectrum, SpectraError> {
    let fd = at_fd(chain, positions)?;
    let cardinality = match fd.carrier {
        Carrier::Rats => Some("2^aleph(0)"),
        _ => Some("aleph(0)"),
    };
    Ok(Spectrum { primes: prime_labels(&fd.at), linear: Some(fd.at.is_total()), cardinality, at: fd.at })
}

/// The image of one cut under `r ↦ x_[S_r]`, `S_r = {p : r < p}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InjectionEntry {
    /// Index into [`FdCompletion::elements`].
    pub cut: usize,
    pub s_r: FinDescSubset,
    pub image: InfKey,
}

/// Sends each cut of the window to the class of the originals above it.
pub fn dense_cor_injection(fd: &FdCompletion) -> Result<Vec<InjectionEntry>, SpectraError> {
    let mut out = Vec::new();
    for i in fd.cut_indices() {
        let FdElem::Cut(s) = &fd.elements[i] else { unreachable!() };
        // originals above the cut are those above its infimum
        let s_r = FinDescSubset::above(fd.carrier, s.inf_key().value)?;
        let image = s_r.inf_key();
        out.push(InjectionEntry { cut: i, s_r, image });
    }
    Ok(out)
}

pub fn is_injective(entries: &[InjectionEntry]) -> bool {
    entries.iter().enumerate().all(|(i, a)| entries[..i].iter().all(|b| a.image != b.image))
}

/// Longest chain, counted in elements.
pub fn longest_chain(p: &impl FiniteOrder) -> usize {
    let n = p.size();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by_key(|&i| (0..n).filter(|&j| p.leq_at(j, i)).count());
    let mut best = vec![1usize; n];
    for (k, &i) in idx.iter().enumerate() {
        for &j in &idx[..k] {
            if j != i && p.leq_at(j, i) {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

#[derive(Debug, Clone)]
pub struct BerryReport {
    pub poset: FinitePoset<String>,
    pub at: ATPoset,
    pub at_is_p: bool,
    /// Elements in a longest chain; attained since the poset is finite.
    pub max_chain: usize,
}

/// Disjoint union of chains with the given lengths; zero lengths are
/// skipped.
pub fn berry_family(lengths: &[usize]) -> Result<BerryReport, SpectraError> {
    let parts: Vec<FinitePoset<String>> = lengths.iter().filter(|&&l| l > 0).map(|&l| FinitePoset::chain(l)).collect();
    if parts.is_empty() {
        return Err(SpectraError::EmptySubset);
    }
    let poset = FinitePoset::disjoint_union(&parts).map(|(k, e)| format!("{k}.{e}"));
    let at = at_finite(&poset)?;
    let at_is_p = at.cuts.is_empty() && crate::order::order_iso(&poset, &at).witness().is_some();
    let max_chain = longest_chain(&poset);
    Ok(BerryReport { poset, at, at_is_p, max_chain })
}

pub use crate::cardinal::berry_symbolic;

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn build_ep_examples() {
        let g = build_ep(&FinitePoset::chain(2), Multiplicity::Finite(3));
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.arcs().len(), 1);
        assert_eq!(regular_vertices(&g).len(), 1);
        let g = build_ep(&FinitePoset::antichain(2), Multiplicity::Finite(1));
        assert!(g.arcs().is_empty() && regular_vertices(&g).is_empty());
        let g = build_ep(&FinitePoset::chain(3), Multiplicity::CountablyInfinite);
        assert_eq!(g.arcs().len(), 3);
        assert!(regular_vertices(&g).is_empty());
        assert!(g.is_acyclic());
    }

    #[test]
    fn path_counts() {
        let c3 = FinitePoset::chain(3);
        assert_eq!(count_paths(&build_ep(&c3, Multiplicity::Finite(1))), PathCount::Exact(7));
        assert_eq!(count_paths(&build_ep(&c3, Multiplicity::Finite(2))), PathCount::Exact(13));
        assert_eq!(count_paths(&build_ep(&FinitePoset::chain(1), Multiplicity::Finite(1))), PathCount::Exact(1));
        assert_eq!(count_paths(&build_ep(&c3, Multiplicity::CountablyInfinite)), PathCount::Aleph0);
    }

    #[test]
    fn dot_is_sorted_and_expanded() {
        let g = build_ep(&FinitePoset::chain(2), Multiplicity::Finite(2));
        let dot = export_dot(&g);
        assert_eq!(dot.matches("->").count(), 2);
        assert!(dot.starts_with("digraph E_P {\n"));
        let g = build_ep(&FinitePoset::chain(3), Multiplicity::CountablyInfinite);
        assert_eq!(export_dot(&g).matches("style=bold").count(), 3);
    }

    #[test]
    fn preceq_examples() {
        let c = FinitePoset::chain(2);
        assert!(subset_preceq(&c, &[0], &[0, 1]).unwrap());
        assert!(!subset_preceq(&c, &[1], &[0, 1]).unwrap());
        assert_eq!(subset_preceq(&c, &[], &[0]), Err(SpectraError::EmptySubset));
        let pos = FinDescSubset::above(Carrier::Rats, Some(q(0))).unwrap();
        let pos1 = FinDescSubset::above(Carrier::Rats, Some(q(1))).unwrap();
        assert!(fd_preceq(&pos, &pos1).unwrap());
        assert!(!fd_preceq(&pos1, &pos).unwrap());
    }

    #[test]
    fn at_finite_examples() {
        let at = at_finite(&FinitePoset::chain(3)).unwrap();
        assert_eq!((at.orig.len(), at.cuts.len(), at.scanned), (3, 0, Some(7)));
        assert!(at.is_total());
        let at = at_finite(&FinitePoset::antichain(3)).unwrap();
        assert!(at.cuts.is_empty() && !at.is_total());
        assert_eq!(at_finite(&FinitePoset::chain(1)).unwrap().size(), 1);
    }

    #[test]
    fn at_fd_shapes() {
        let fd = at_fd(&SymbolicChain::Omega, &Carrier::Omega.default_positions()).unwrap();
        assert!(fd.cut_indices().is_empty());
        let fd = at_fd(&SymbolicChain::Rats, &[q(0), q(1)]).unwrap();
        let keys: Vec<String> = fd.elements.iter().map(|e| format!("{:?}", e.key())).collect();
        assert_eq!(keys.len(), 5);
        assert_eq!(fd.cut_indices(), vec![0, 2, 4]);
        assert!(fd.at.is_total() && fd.at.is_partial_order());
        let fd = at_fd(&SymbolicChain::OmegaOp, &Carrier::OmegaOp.default_positions()).unwrap();
        assert_eq!(fd.cut_indices(), vec![0]);
        assert!(at_fd(&SymbolicChain::Fin(3), &[]).is_err());
    }

    #[test]
    fn discrete_normalization() {
        let s = FinDescSubset::new(
            Carrier::Ints,
            vec![
                Interval::new(Some((Rational::new(1, 2), true)), Some((q(3), false))),
                Interval::new(Some((q(3), true)), Some((q(4), true))),
            ],
        )
        .unwrap();
        assert_eq!(s.to_string(), "[1, 4]");
        assert!(FinDescSubset::new(Carrier::Omega, vec![Interval::new(None, Some((q(-1), true)))]).is_err());
        let s = FinDescSubset::new(Carrier::Rats, vec![Interval::new(Some((q(0), false)), Some((q(0), true)))]);
        assert_eq!(s, Err(SpectraError::EmptySubset));
    }

    #[test]
    fn injection_examples() {
        let fd = at_fd(&SymbolicChain::Rats, &crate::chains::default_probes()).unwrap();
        let inj = dense_cor_injection(&fd).unwrap();
        assert_eq!(inj.len(), 6);
        assert!(is_injective(&inj));
        assert_eq!(inj[0].image.value, None);
    }

    #[test]
    fn berry_examples() {
        let r = berry_family(&[1, 2, 3]).unwrap();
        assert!(r.at_is_p);
        assert_eq!(r.max_chain, 3);
        assert_eq!(berry_family(&[1]).unwrap().max_chain, 1);
        assert_eq!(berry_family(&[1, 2, 3]).unwrap().poset.elements()[0].to_string(), "0.0");
    }
}
