//! Finite and symbolic linear orders, finite posets, and the order
//! constructors used throughout the crate: reversal, concatenation,
//! lexicographic products and density tests.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrderError {
    #[error("duplicate element at position {0}")]
    DuplicateElement(usize),
    #[error("relation is not reflexive at element {0}")]
    NotReflexive(usize),
    #[error("relation is not antisymmetric on elements {0} and {1}")]
    NotAntisymmetric(usize, usize),
    #[error("relation is not transitive on elements {0}, {1}, {2}")]
    NotTransitive(usize, usize, usize),
    #[error("unknown element")]
    UnknownElement,
    #[error("element does not belong to the chain")]
    ForeignElement,
    #[error("concatenation needs at least one part")]
    EmptyConcat,
}

/// Read-only view of a finite order on the positions `0..size()`.
pub trait FiniteOrder {
    fn size(&self) -> usize;
    fn leq_at(&self, i: usize, j: usize) -> bool;

    fn is_chain(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..n).all(|j| self.leq_at(i, j) || self.leq_at(j, i)))
    }
}

/// A finite chain; the position of an element in `elements` is its rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLinOrder<T> {
    elements: Vec<T>,
}

impl<T: PartialEq> FiniteLinOrder<T> {
    pub fn new(elements: Vec<T>) -> Result<Self, OrderError> {
        for (i, x) in elements.iter().enumerate() {
            if elements[..i].contains(x) {
                return Err(OrderError::DuplicateElement(i));
            }
        }
        Ok(FiniteLinOrder { elements })
    }

    pub fn position(&self, x: &T) -> Option<usize> {
        self.elements.iter().position(|y| y == x)
    }

    pub fn contains(&self, x: &T) -> bool {
        self.position(x).is_some()
    }

    pub fn cmp_elems(&self, a: &T, b: &T) -> Result<Ordering, OrderError> {
        match (self.position(a), self.position(b)) {
            (Some(i), Some(j)) => Ok(i.cmp(&j)),
            _ => Err(OrderError::UnknownElement),
        }
    }
}

impl<T> FiniteLinOrder<T> {
    /// Skips the distinctness check. Callers guarantee distinct elements.
    pub(crate) fn from_distinct(elements: Vec<T>) -> Self {
        FiniteLinOrder { elements }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<T> {
        self.elements
    }

    pub fn iter(&self) -> core::slice::Iter<'_, T> {
        self.elements.iter()
    }

    pub fn get(&self, i: usize) -> Option<&T> {
        self.elements.get(i)
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> FiniteLinOrder<U> {
        FiniteLinOrder { elements: self.elements.iter().map(f).collect() }
    }
}

impl<T: Clone> FiniteLinOrder<T> {
    /// The dual order: `x <=op y` iff `y <= x`.
    pub fn reverse(&self) -> Self {
        let mut elements = self.elements.clone();
        elements.reverse();
        FiniteLinOrder { elements }
    }
}

impl FiniteLinOrder<u64> {
    /// The chain `0 < 1 < ... < n-1`.
    pub fn fin(n: u64) -> Self {
        FiniteLinOrder { elements: (0..n).collect() }
    }
}

impl<T> FiniteOrder for FiniteLinOrder<T> {
    fn size(&self) -> usize {
        self.elements.len()
    }

    fn leq_at(&self, i: usize, j: usize) -> bool {
        i <= j
    }
}

/// Concatenation of finite chains: `(i, s) <= (j, t)` iff `i < j`, or `i = j`
/// and `s <= t` in part `i`.
pub fn concat<T: Clone>(parts: &[FiniteLinOrder<T>]) -> Result<FiniteLinOrder<(usize, T)>, OrderError> {
    if parts.is_empty() {
        return Err(OrderError::EmptyConcat);
    }
    let elements = parts.iter().enumerate().flat_map(|(i, p)| p.elements.iter().map(move |s| (i, s.clone()))).collect();
    Ok(FiniteLinOrder { elements })
}

/// Lexicographic product: first coordinate decides, ties broken by the second.
pub fn lex_product<A: Clone, B: Clone>(a: &FiniteLinOrder<A>, b: &FiniteLinOrder<B>) -> FiniteLinOrder<(A, B)> {
    let elements = a.elements.iter().flat_map(|x| b.elements.iter().map(move |y| (x.clone(), y.clone()))).collect();
    FiniteLinOrder { elements }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Density {
    /// For all `x < y` some `d` has `x < d < y`.
    Strict,
    /// For all `x < y` some `d` has `x < d <= y`.
    RightSeparating,
}

/// Density of `d` inside `b`. Elements of `d` missing from `b` are ignored.
pub fn is_dense<T: PartialEq>(d: &[T], b: &FiniteLinOrder<T>, variant: Density) -> bool {
    let marks: Vec<bool> = b.elements.iter().map(|x| d.contains(x)).collect();
    let n = marks.len();
    for x in 0..n {
        for y in x + 1..n {
            let hit = match variant {
                Density::Strict => (x + 1..y).any(|k| marks[k]),
                Density::RightSeparating => (x + 1..=y).any(|k| marks[k]),
            };
            if !hit {
                return false;
            }
        }
    }
    true
}

/// A finite partial order stored as a dense `n x n` relation matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset<T> {
    elements: Vec<T>,
    leq: Vec<bool>,
}

impl<T: PartialEq> FinitePoset<T> {
    /// Builds a poset from the full relation given as pairs `(a, b)` meaning
    /// `a <= b`. The relation is checked, not closed.
    pub fn from_pairs(elements: Vec<T>, pairs: &[(T, T)]) -> Result<Self, OrderError> {
        let n = elements.len();
        let mut leq = alloc::vec![false; n * n];
        for (a, b) in pairs {
            let i = elements.iter().position(|x| x == a).ok_or(OrderError::UnknownElement)?;
            let j = elements.iter().position(|x| x == b).ok_or(OrderError::UnknownElement)?;
            leq[i * n + j] = true;
        }
        Self::from_matrix(elements, leq)
    }

    /// Like [`FinitePoset::from_pairs`], but reflexive-transitive closure is
    /// taken first; only antisymmetry can fail.
    pub fn from_generating_pairs(elements: Vec<T>, pairs: &[(T, T)]) -> Result<Self, OrderError> {
        let n = elements.len();
        let mut leq = alloc::vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (a, b) in pairs {
            let i = elements.iter().position(|x| x == a).ok_or(OrderError::UnknownElement)?;
            let j = elements.iter().position(|x| x == b).ok_or(OrderError::UnknownElement)?;
            leq[i * n + j] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        Self::from_matrix(elements, leq)
    }

    pub fn from_matrix(elements: Vec<T>, leq: Vec<bool>) -> Result<Self, OrderError> {
        let n = elements.len();
        assert_eq!(leq.len(), n * n, "relation matrix has wrong size");
        for (i, x) in elements.iter().enumerate() {
            if elements[..i].contains(x) {
                return Err(OrderError::DuplicateElement(i));
            }
        }
        check_partial_order(n, |i, j| leq[i * n + j])?;
        Ok(FinitePoset { elements, leq })
    }

    pub fn index_of(&self, x: &T) -> Option<usize> {
        self.elements.iter().position(|y| y == x)
    }

    pub fn leq(&self, a: &T, b: &T) -> Result<bool, OrderError> {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => Ok(self.leq_at(i, j)),
            _ => Err(OrderError::UnknownElement),
        }
    }
}

impl<T> FinitePoset<T> {
    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn lt_at(&self, i: usize, j: usize) -> bool {
        i != j && self.leq_at(i, j)
    }

    /// Strictly related pairs `(p, q)` with `p > q`, in row-major order.
    pub fn strict_pairs_desc(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for p in 0..n {
            for q in 0..n {
                if self.lt_at(q, p) {
                    out.push((p, q));
                }
            }
        }
        out
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> FinitePoset<U> {
        FinitePoset { elements: self.elements.iter().map(f).collect(), leq: self.leq.clone() }
    }
}

impl FinitePoset<alloc::string::String> {
    /// Chain `0 < 1 < ... < n-1` with decimal labels.
    pub fn chain(n: usize) -> Self {
        use alloc::string::ToString;
        let elements = (0..n).map(|i| i.to_string()).collect();
        let mut leq = alloc::vec![false; n * n];
        for i in 0..n {
            for j in i..n {
                leq[i * n + j] = true;
            }
        }
        FinitePoset { elements, leq }
    }

    pub fn antichain(n: usize) -> Self {
        use alloc::string::ToString;
        let elements = (0..n).map(|i| i.to_string()).collect();
        let mut leq = alloc::vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        FinitePoset { elements, leq }
    }
}

impl<T: Clone> FinitePoset<T> {
    /// Disjoint union; element `(k, x)` comes from part `k`.
    pub fn disjoint_union(parts: &[FinitePoset<T>]) -> FinitePoset<(usize, T)> {
        let mut elements = Vec::new();
        let mut offsets = Vec::new();
        for (k, p) in parts.iter().enumerate() {
            offsets.push(elements.len());
            elements.extend(p.elements.iter().map(|x| (k, x.clone())));
        }
        let n = elements.len();
        let mut leq = alloc::vec![false; n * n];
        for (k, p) in parts.iter().enumerate() {
            let o = offsets[k];
            for i in 0..p.len() {
                for j in 0..p.len() {
                    leq[(o + i) * n + o + j] = p.leq_at(i, j);
                }
            }
        }
        FinitePoset { elements, leq }
    }
}

impl<T> FiniteOrder for FinitePoset<T> {
    fn size(&self) -> usize {
        self.elements.len()
    }

    fn leq_at(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.elements.len() + j]
    }
}

/// Every partial order on `{0, .., n-1}` refining the integer order, so
/// `i <= j` in the poset implies `i <= j` as integers. Each isomorphism type of an `n`-element poset occurs at least
/// once, since every finite poset has a linear extension. Elements are
/// labelled `"0"`, `"1"`, ...
pub fn naturally_labelled_posets(n: usize) -> Vec<FinitePoset<alloc::string::String>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    assert!(pairs.len() < 32, "catalog limited to n <= 8");
    let labels: Vec<alloc::string::String> = (0..n).map(|i| alloc::format!("{i}")).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << pairs.len()) {
        let mut leq = alloc::vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                leq[i * n + j] = true;
            }
        }
        if check_partial_order(n, |i, j| leq[i * n + j]).is_ok() {
            out.push(FinitePoset { elements: labels.clone(), leq });
        }
    }
    out
}

pub(crate) fn check_partial_order(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<(), OrderError> {
    for i in 0..n {
        if !leq(i, i) {
            return Err(OrderError::NotReflexive(i));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if leq(i, j) && leq(j, i) {
                return Err(OrderError::NotAntisymmetric(i, j));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if !leq(i, j) {
                continue;
            }
            for k in 0..n {
                if leq(j, k) && !leq(i, k) {
                    return Err(OrderError::NotTransitive(i, j, k));
                }
            }
        }
    }
    Ok(())
}

/// A map between finite orders, given by positions: `mapping[i]` is the image
/// of source position `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderMap {
    pub mapping: Vec<usize>,
}

impl OrderMap {
    pub fn identity(n: usize) -> Self {
        OrderMap { mapping: (0..n).collect() }
    }

    pub fn is_order_preserving(&self, src: &impl FiniteOrder, dst: &impl FiniteOrder) -> bool {
        let n = src.size();
        self.mapping.len() == n
            && (0..n).all(|i| (0..n).all(|j| !src.leq_at(i, j) || dst.leq_at(self.mapping[i], self.mapping[j])))
    }

    pub fn is_order_reflecting(&self, src: &impl FiniteOrder, dst: &impl FiniteOrder) -> bool {
        let n = src.size();
        self.mapping.len() == n
            && (0..n).all(|i| (0..n).all(|j| !dst.leq_at(self.mapping[i], self.mapping[j]) || src.leq_at(i, j)))
    }

    pub fn is_bijective_onto(&self, dst_size: usize) -> bool {
        if self.mapping.len() != dst_size {
            return false;
        }
        let mut seen = alloc::vec![false; dst_size];
        for &m in &self.mapping {
            if m >= dst_size || seen[m] {
                return false;
            }
            seen[m] = true;
        }
        true
    }

    /// Order-preserving, order-reflecting and bijective.
    pub fn is_isomorphism(&self, src: &impl FiniteOrder, dst: &impl FiniteOrder) -> bool {
        self.is_bijective_onto(dst.size()) && self.is_order_preserving(src, dst) && self.is_order_reflecting(src, dst)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoResult {
    Isomorphic(OrderMap),
    NotIsomorphic(NonIsoReason),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NonIsoReason {
    SizeMismatch,
    ChainMismatch,
    /// The backtracking search exhausted every candidate bijection.
    Exhausted,
}

impl IsoResult {
    pub fn witness(&self) -> Option<&OrderMap> {
        match self {
            IsoResult::Isomorphic(m) => Some(m),
            IsoResult::NotIsomorphic(_) => None,
        }
    }
}

/// Decides order-isomorphism of two finite orders. Chains are decided by
/// length; general posets by backtracking over bijections, pruned by the
/// (down-set size, up-set size) signature of each element.
pub fn order_iso(a: &impl FiniteOrder, b: &impl FiniteOrder) -> IsoResult {
    let n = a.size();
    if n != b.size() {
        return IsoResult::NotIsomorphic(NonIsoReason::SizeMismatch);
    }
    let (ca, cb) = (a.is_chain(), b.is_chain());
    if ca != cb {
        return IsoResult::NotIsomorphic(NonIsoReason::ChainMismatch);
    }
    if ca {
        // Sort both chains by down-set size; the induced map is the witness.
        let rank = |o: &dyn Fn(usize, usize) -> bool, i: usize| (0..n).filter(|&j| o(j, i)).count();
        let mut by_rank_b = alloc::vec![0usize; n];
        for i in 0..n {
            by_rank_b[rank(&|x, y| b.leq_at(x, y), i) - 1] = i;
        }
        let mapping = (0..n).map(|i| by_rank_b[rank(&|x, y| a.leq_at(x, y), i) - 1]).collect();
        return IsoResult::Isomorphic(OrderMap { mapping });
    }
    let sig = |o: &dyn Fn(usize, usize) -> bool, i: usize| {
        ((0..n).filter(|&j| o(j, i)).count(), (0..n).filter(|&j| o(i, j)).count())
    };
    let sa: Vec<_> = (0..n).map(|i| sig(&|x, y| a.leq_at(x, y), i)).collect();
    let sb: Vec<_> = (0..n).map(|i| sig(&|x, y| b.leq_at(x, y), i)).collect();
    let mut mapping = alloc::vec![usize::MAX; n];
    let mut used = alloc::vec![false; n];
    if extend_iso(a, b, &sa, &sb, 0, &mut mapping, &mut used) {
        IsoResult::Isomorphic(OrderMap { mapping })
    } else {
        IsoResult::NotIsomorphic(NonIsoReason::Exhausted)
    }
}

fn extend_iso(
    a: &impl FiniteOrder,
    b: &impl FiniteOrder,
    sa: &[(usize, usize)],
    sb: &[(usize, usize)],
    i: usize,
    mapping: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    let n = a.size();
    if i == n {
        return true;
    }
    for cand in 0..n {
        if used[cand] || sa[i] != sb[cand] {
            continue;
        }
        let consistent = (0..i)
            .all(|k| a.leq_at(k, i) == b.leq_at(mapping[k], cand) && a.leq_at(i, k) == b.leq_at(cand, mapping[k]));
        if !consistent {
            continue;
        }
        mapping[i] = cand;
        used[cand] = true;
        if extend_iso(a, b, sa, sb, i + 1, mapping, used) {
            return true;
        }
        used[cand] = false;
    }
    mapping[i] = usize::MAX;
    false
}

/// Countable chain types built from finite chains, ω, ω^op, ℤ and ℚ by
/// concatenation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SymbolicChain {
    Fin(u64),
    Omega,
    OmegaOp,
    Ints,
    Rats,
    Concat(Vec<SymbolicChain>),
}

/// A finitely presented element of a [`SymbolicChain`].
///
/// `Fin`, `Omega` and `OmegaOp` use `Nat`, `Ints` uses `Int`, `Rats` uses
/// `Rat`, and the parts of a concatenation are addressed by `Part`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SymElem {
    Nat(u64),
    Int(i64),
    Rat(Rational),
    Part(usize, Box<SymElem>),
}

impl SymbolicChain {
    /// Concatenation of the parts, normalized.
    pub fn concat(parts: Vec<SymbolicChain>) -> Result<SymbolicChain, OrderError> {
        if parts.is_empty() {
            return Err(OrderError::EmptyConcat);
        }
        Ok(SymbolicChain::Concat(parts).normalize())
    }

    /// Flattens nested concatenations, drops empty finite parts, merges
    /// adjacent finite parts and unwraps single-part concatenations.
    pub fn normalize(&self) -> SymbolicChain {
        match self {
            SymbolicChain::Concat(parts) => {
                let mut flat: Vec<SymbolicChain> = Vec::new();
                for p in parts {
                    match p.normalize() {
                        SymbolicChain::Concat(inner) => flat.extend(inner),
                        other => flat.push(other),
                    }
                }
                let mut merged: Vec<SymbolicChain> = Vec::new();
                for p in flat {
                    match (merged.last_mut(), &p) {
                        (_, SymbolicChain::Fin(0)) => {}
                        (Some(SymbolicChain::Fin(a)), SymbolicChain::Fin(b)) => *a += b,
                        _ => merged.push(p),
                    }
                }
                match merged.len() {
                    0 => SymbolicChain::Fin(0),
                    1 => merged.pop().unwrap(),
                    _ => SymbolicChain::Concat(merged),
                }
            }
            other => other.clone(),
        }
    }

    pub fn reverse(&self) -> SymbolicChain {
        match self.normalize() {
            SymbolicChain::Omega => SymbolicChain::OmegaOp,
            SymbolicChain::OmegaOp => SymbolicChain::Omega,
            SymbolicChain::Concat(parts) => SymbolicChain::Concat(parts.iter().rev().map(|p| p.reverse()).collect()),
            other => other,
        }
    }

    /// The image of `e` under the canonical anti-isomorphism onto
    /// `self.reverse()`. `self` must be normalized.
    pub fn reverse_element(&self, e: &SymElem) -> Option<SymElem> {
        if !self.contains(e) {
            return None;
        }
        Some(match (self, e) {
            (SymbolicChain::Fin(n), SymElem::Nat(k)) => SymElem::Nat(n - 1 - k),
            (SymbolicChain::Omega | SymbolicChain::OmegaOp, SymElem::Nat(k)) => SymElem::Nat(*k),
            (SymbolicChain::Ints, SymElem::Int(k)) => SymElem::Int(-k),
            (SymbolicChain::Rats, SymElem::Rat(q)) => SymElem::Rat(-*q),
            (SymbolicChain::Concat(parts), SymElem::Part(i, inner)) => {
                let len = parts.len();
                SymElem::Part(len - 1 - i, Box::new(parts[*i].reverse_element(inner)?))
            }
            _ => return None,
        })
    }

    pub fn contains(&self, e: &SymElem) -> bool {
        match (self, e) {
            (SymbolicChain::Fin(n), SymElem::Nat(k)) => k < n,
            (SymbolicChain::Omega | SymbolicChain::OmegaOp, SymElem::Nat(_)) => true,
            (SymbolicChain::Ints, SymElem::Int(k)) => *k != i64::MIN,
            (SymbolicChain::Rats, SymElem::Rat(_)) => true,
            (SymbolicChain::Concat(parts), SymElem::Part(i, inner)) => parts.get(*i).is_some_and(|p| p.contains(inner)),
            _ => false,
        }
    }

    pub fn cmp_elems(&self, a: &SymElem, b: &SymElem) -> Result<Ordering, OrderError> {
        if !self.contains(a) || !self.contains(b) {
            return Err(OrderError::ForeignElement);
        }
        Ok(self.cmp_unchecked(a, b))
    }

    fn cmp_unchecked(&self, a: &SymElem, b: &SymElem) -> Ordering {
        match (self, a, b) {
            (SymbolicChain::OmegaOp, SymElem::Nat(x), SymElem::Nat(y)) => y.cmp(x),
            (_, SymElem::Nat(x), SymElem::Nat(y)) => x.cmp(y),
            (_, SymElem::Int(x), SymElem::Int(y)) => x.cmp(y),
            (_, SymElem::Rat(x), SymElem::Rat(y)) => x.cmp(y),
            (SymbolicChain::Concat(parts), SymElem::Part(i, x), SymElem::Part(j, y)) => {
                i.cmp(j).then_with(|| parts[*i].cmp_unchecked(x, y))
            }
            _ => unreachable!("membership checked by caller"),
        }
    }

    pub fn is_finite(&self) -> bool {
        match self {
            SymbolicChain::Fin(_) => true,
            SymbolicChain::Concat(parts) => parts.iter().all(|p| p.is_finite()),
            _ => false,
        }
    }

    /// A deterministic finite sample of elements, `depth` controlling the
    /// spread inside each infinite part. Returned in ascending order.
    pub fn sample(&self, depth: u64) -> Vec<SymElem> {
        let mut out: Vec<SymElem> = match self {
            SymbolicChain::Fin(n) => (0..(*n).min(depth.max(1))).map(SymElem::Nat).collect(),
            SymbolicChain::Omega | SymbolicChain::OmegaOp => (0..depth).map(SymElem::Nat).collect(),
            SymbolicChain::Ints => {
                let d = depth as i64;
                (-d..=d).map(SymElem::Int).collect()
            }
            SymbolicChain::Rats => {
                let d = depth.max(1) as i64;
                let mut v = Vec::new();
                for num in -d..=d {
                    for den in 1..=3 {
                        let q = Rational::new(num, den);
                        if !v.contains(&SymElem::Rat(q)) {
                            v.push(SymElem::Rat(q));
                        }
                    }
                }
                v
            }
            SymbolicChain::Concat(parts) => parts
                .iter()
                .enumerate()
                .flat_map(|(i, p)| p.sample(depth).into_iter().map(move |e| SymElem::Part(i, Box::new(e))))
                .collect(),
        };
        out.sort_by(|a, b| self.cmp_unchecked(a, b));
        out
    }
}

impl fmt::Display for SymbolicChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymbolicChain::Fin(n) => write!(f, "fin({n})"),
            SymbolicChain::Omega => f.write_str("omega"),
            SymbolicChain::OmegaOp => f.write_str("omega_op"),
            SymbolicChain::Ints => f.write_str("ints"),
            SymbolicChain::Rats => f.write_str("rats"),
            SymbolicChain::Concat(parts) => {
                f.write_str("concat(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{p}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Display for SymElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymElem::Nat(k) => write!(f, "{k}"),
            SymElem::Int(k) => write!(f, "{k}"),
            SymElem::Rat(q) => write!(f, "{q}"),
            SymElem::Part(i, e) => write!(f, "({i}, {e})"),
        }
    }
}
