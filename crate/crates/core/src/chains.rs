//! Chains of subsets of a finite ground set, the order they induce on the
//! ground set, and the passage between chains of subsets and linear orders
//! with a dense subset.
//!
//! The chain-to-order direction builds cuts of `S' × ℚ` (lexicographic,
//! `S'` ordered by the C-order) without materializing ℚ: a cut is either a
//! union of full columns `X × ℚ` for a link `X`, or an initial segment
//! `seg(a, q)`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::order::FiniteLinOrder;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChainError {
    #[error("links are not totally ordered by inclusion")]
    NotAChain,
    #[error("duplicate link")]
    DuplicateLink,
    #[error("link mentions element {0} outside the ground set")]
    OutsideGround(usize),
    #[error("unknown ground label {0:?}")]
    UnknownLabel(String),
    #[error("duplicate ground label at position {0}")]
    DuplicateLabel(usize),
    #[error("order hint is not a permutation of the ground set")]
    BadHint,
    #[error("cuts do not belong to this prepared chain")]
    IncompatibleCuts,
    #[error("n = {n} exceeds the exhaustive bound {bound}")]
    TooLarge { n: usize, bound: usize },
}

/// A chain of subsets of `ground`, stored strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetChain {
    ground: Vec<String>,
    links: Vec<BTreeSet<usize>>,
}

impl SubsetChain {
    /// Accepts links in any order; they are sorted by size and must then be
    /// strictly increasing under inclusion.
    pub fn new(ground: Vec<String>, links: Vec<BTreeSet<usize>>) -> Result<Self, ChainError> {
        for (i, g) in ground.iter().enumerate() {
            if ground[..i].contains(g) {
                return Err(ChainError::DuplicateLabel(i));
            }
        }
        let n = ground.len();
        let mut links = links;
        for l in &links {
            if let Some(&x) = l.iter().find(|&&x| x >= n) {
                return Err(ChainError::OutsideGround(x));
            }
        }
        links.sort_by_key(|l| l.len());
        for w in links.windows(2) {
            if w[0] == w[1] {
                return Err(ChainError::DuplicateLink);
            }
            if !w[0].is_subset(&w[1]) {
                return Err(ChainError::NotAChain);
            }
        }
        Ok(SubsetChain { ground, links })
    }

    /// Same as [`SubsetChain::new`] but with links given by ground labels.
    pub fn from_labels(ground: Vec<String>, links: &[Vec<String>]) -> Result<Self, ChainError> {
        let mut idx_links = Vec::with_capacity(links.len());
        for l in links {
            let mut set = BTreeSet::new();
            for label in l {
                let i =
                    ground.iter().position(|g| g == label).ok_or_else(|| ChainError::UnknownLabel(label.clone()))?;
                set.insert(i);
            }
            idx_links.push(set);
        }
        Self::new(ground, idx_links)
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn links(&self) -> &[BTreeSet<usize>] {
        &self.links
    }

    pub fn len(&self) -> usize {
        self.links.len()
    }

    pub fn is_empty(&self) -> bool {
        self.links.is_empty()
    }

    /// Strict containments between consecutive links, `links - 1`.
    pub fn containments(&self) -> usize {
        self.links.len().saturating_sub(1)
    }

    pub fn format_set(&self, set: &BTreeSet<usize>) -> String {
        let names: Vec<&str> = set.iter().map(|&i| self.ground[i].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }
}

/// Strict relation on the ground set: `x ≺ y` iff some link contains `x`
/// but not `y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct COrder {
    n: usize,
    rel: Vec<bool>,
}

impl COrder {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.rel[x * self.n + y]
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for x in 0..self.n {
            for y in 0..self.n {
                if self.lt(x, y) {
                    v.push((x, y));
                }
            }
        }
        v
    }

    pub fn is_irreflexive(&self) -> bool {
        (0..self.n).all(|x| !self.lt(x, x))
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.n;
        (0..n).all(|x| (0..n).all(|y| !self.lt(x, y) || (0..n).all(|z| !self.lt(y, z) || self.lt(x, z))))
    }

    /// Distinct elements of `subset` are pairwise comparable.
    pub fn is_total_on(&self, subset: &[usize]) -> bool {
        subset.iter().all(|&x| subset.iter().all(|&y| x == y || self.lt(x, y) || self.lt(y, x)))
    }
}

pub fn c_order(chain: &SubsetChain) -> COrder {
    let n = chain.ground.len();
    let mut rel = vec![false; n * n];
    for link in &chain.links {
        for &x in link {
            for y in 0..n {
                if !link.contains(&y) {
                    rel[x * n + y] = true;
                }
            }
        }
    }
    COrder { n, rel }
}

fn separated_pair(chain: &SubsetChain, x: usize, y: usize) -> bool {
    chain.links.iter().any(|l| l.contains(&x) != l.contains(&y))
}

/// Result of the greedy construction of a maximal separated set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separated {
    /// Members in hint order.
    pub members: Vec<usize>,
    /// `A ∩ S'` for each link `A`, in chain order.
    pub restricted: Vec<BTreeSet<usize>>,
}

/// Greedy pass in `hint` order: an element joins when the links separate
/// it from every member chosen so far.
pub fn max_separated(chain: &SubsetChain, hint: &[usize]) -> Result<Separated, ChainError> {
    let n = chain.ground.len();
    let mut seen = vec![false; n];
    if hint.len() != n || hint.iter().any(|&x| x >= n || core::mem::replace(&mut seen[x], true)) {
        return Err(ChainError::BadHint);
    }
    let mut members: Vec<usize> = Vec::new();
    for &x in hint {
        if members.iter().all(|&m| separated_pair(chain, x, m)) {
            members.push(x);
        }
    }
    let restricted = chain.links.iter().map(|l| l.iter().copied().filter(|x| members.contains(x)).collect()).collect();
    Ok(Separated { members, restricted })
}

pub fn max_separated_default(chain: &SubsetChain) -> Separated {
    let hint: Vec<usize> = (0..chain.ground.len()).collect();
    max_separated(chain, &hint).expect("identity hint is a permutation")
}

/// Outcome of checking a [`Separated`] set against its defining properties.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeparationCheck {
    pub separated: bool,
    pub maximal: bool,
    pub injective: bool,
    pub total: bool,
}

impl SeparationCheck {
    pub fn all(&self) -> bool {
        self.separated && self.maximal && self.injective && self.total
    }
}

pub fn verify_separated(chain: &SubsetChain, s: &Separated) -> SeparationCheck {
    let m = &s.members;
    let separated = m.iter().all(|&x| m.iter().all(|&y| x == y || separated_pair(chain, x, y)));
    let maximal =
        (0..chain.ground.len()).filter(|x| !m.contains(x)).all(|x| m.iter().any(|&y| !separated_pair(chain, x, y)));
    let injective = s.restricted.iter().enumerate().all(|(i, a)| s.restricted[..i].iter().all(|b| a != b));
    let total = c_order(chain).is_total_on(m);
    SeparationCheck { separated, maximal, injective, total }
}

/// Result of turning a linear order with a chosen subset into a chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseToChain {
    pub chain: SubsetChain,
    /// Positions `s` of the order whose set `X_s` repeated the one of the
    /// previous position and was collapsed.
    pub collapsed: Vec<usize>,
}

/// `X_s = {x ∈ d : x <= s}` for every `s` in ascending order, duplicates
/// collapsed. The ground set is `d` in the order of `b`.
pub fn dense_to_chain<T: PartialEq>(b: &FiniteLinOrder<T>, d: &[T], label: impl Fn(&T) -> String) -> DenseToChain {
    let dense_pos: Vec<usize> = (0..b.len()).filter(|&i| d.contains(&b.elements()[i])).collect();
    let ground: Vec<String> = dense_pos.iter().map(|&i| label(&b.elements()[i])).collect();
    let mut links: Vec<BTreeSet<usize>> = Vec::new();
    let mut collapsed = Vec::new();
    for s in 0..b.len() {
        let x_s: BTreeSet<usize> = dense_pos.iter().enumerate().filter(|(_, &p)| p <= s).map(|(k, _)| k).collect();
        if links.last() == Some(&x_s) {
            collapsed.push(s);
        } else {
            links.push(x_s);
        }
    }
    DenseToChain { chain: SubsetChain { ground, links }, collapsed }
}

/// A chain restricted to a maximal separated set, with `S'` listed in
/// ascending C-order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreparedChain {
    pub source: SubsetChain,
    /// Ground positions of `S'`, ascending in the C-order.
    pub order: Vec<usize>,
    /// Restricted links in chain order, as ground positions.
    pub links: Vec<BTreeSet<usize>>,
}

impl PreparedChain {
    pub fn new(chain: &SubsetChain) -> Self {
        Self::with_separated(chain, &max_separated_default(chain))
    }

    pub fn with_separated(chain: &SubsetChain, sep: &Separated) -> Self {
        let co = c_order(chain);
        let mut order = sep.members.clone();
        order.sort_by(|&x, &y| {
            if x == y {
                Ordering::Equal
            } else if co.lt(x, y) {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        });
        PreparedChain { source: chain.clone(), order, links: sep.restricted.clone() }
    }

    fn rank(&self, x: usize) -> Option<usize> {
        self.order.iter().position(|&y| y == x)
    }

    pub fn name(&self, x: usize) -> &str {
        &self.source.ground[x]
    }

    fn valid(&self, c: &Cut) -> bool {
        match c {
            Cut::FullColumns(l) => *l < self.links.len(),
            Cut::Seg(a, _) => self.rank(*a).is_some(),
        }
    }

    pub fn format_cut(&self, c: &Cut) -> String {
        match c {
            Cut::FullColumns(l) => format!("cols({})", self.source.format_set(&self.links[*l])),
            Cut::Seg(a, q) => format!("seg({}, {})", self.name(*a), q),
        }
    }

    pub fn format_point(&self, p: &Point) -> String {
        format!("({}, {})", self.name(p.0), p.1)
    }
}

/// A point `(s, q)` of `S' × ℚ`.
pub type Point = (usize, Rational);

/// A cut of `S' × ℚ` under the lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Cut {
    /// `X × ℚ` for the restricted link with this index.
    FullColumns(usize),
    /// `seg(a, q) = {(s, p) : s ≺ a, or s = a and p < q}`.
    Seg(usize, Rational),
}

impl Cut {
    pub fn is_seg(&self) -> bool {
        matches!(self, Cut::Seg(..))
    }

    /// Certificate that the cut has no greatest element.
    pub fn no_greatest_certificate(&self) -> &'static str {
        match self {
            Cut::FullColumns(_) => "every (x, q) in the cut has (x, q + 1) above it inside the cut",
            Cut::Seg(..) => "every (s, p) in the cut lies below (s, (p + q0) / 2) or (s, p + 1) inside the cut",
        }
    }
}

/// Inclusion between two cuts. `Subset` and `Superset` carry a point of the
/// larger cut missing from the smaller one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CutRelation {
    Subset(Point),
    Equal,
    Superset(Point),
}

impl CutRelation {
    pub fn ordering(&self) -> Ordering {
        match self {
            CutRelation::Subset(_) => Ordering::Less,
            CutRelation::Equal => Ordering::Equal,
            CutRelation::Superset(_) => Ordering::Greater,
        }
    }
}

fn flip(r: CutRelation) -> CutRelation {
    match r {
        CutRelation::Subset(p) => CutRelation::Superset(p),
        CutRelation::Superset(p) => CutRelation::Subset(p),
        CutRelation::Equal => CutRelation::Equal,
    }
}

pub fn cut_cmp(prep: &PreparedChain, c1: &Cut, c2: &Cut) -> Result<CutRelation, ChainError> {
    if !prep.valid(c1) || !prep.valid(c2) {
        return Err(ChainError::IncompatibleCuts);
    }
    let one = Rational::from_integer(1);
    Ok(match (c1, c2) {
        (Cut::Seg(a, q), Cut::Seg(b, r)) => {
            let key = (prep.rank(*a), *q).cmp(&(prep.rank(*b), *r));
            match key {
                Ordering::Equal => CutRelation::Equal,
                Ordering::Less => CutRelation::Subset((*a, *q)),
                Ordering::Greater => CutRelation::Superset((*b, *r)),
            }
        }
        (Cut::Seg(a, q), Cut::FullColumns(l)) => {
            if prep.links[*l].contains(a) {
                CutRelation::Subset((*a, *q))
            } else {
                CutRelation::Superset((*a, q - one))
            }
        }
        (Cut::FullColumns(_), Cut::Seg(..)) => flip(cut_cmp(prep, c2, c1)?),
        (Cut::FullColumns(l), Cut::FullColumns(m)) => match l.cmp(m) {
            Ordering::Equal => CutRelation::Equal,
            Ordering::Less => {
                let x = *prep.links[*m].difference(&prep.links[*l]).next().expect("restricted links are distinct");
                CutRelation::Subset((x, Rational::from_integer(0)))
            }
            Ordering::Greater => {
                let x = *prep.links[*l].difference(&prep.links[*m]).next().expect("restricted links are distinct");
                CutRelation::Superset((x, Rational::from_integer(0)))
            }
        },
    })
}

/// Decides `point ∈ c` straight from the definitions. The C-order is
/// recomputed from the restricted links, so this is independent of the
/// ranking that [`cut_cmp`] uses.
pub fn membership_oracle(prep: &PreparedChain, c: &Cut, point: &Point) -> bool {
    let (s, p) = point;
    match c {
        Cut::FullColumns(l) => prep.links[*l].contains(s),
        Cut::Seg(a, q0) => {
            let precedes = prep.links.iter().any(|link| link.contains(s) && !link.contains(a));
            precedes || (s == a && p < q0)
        }
    }
}

/// A `Seg` cut strictly between `lower ⊊ upper`, or `None` when the pair is
/// not a strict inclusion.
pub fn between(prep: &PreparedChain, lower: &Cut, upper: &Cut) -> Result<Option<Cut>, ChainError> {
    if !matches!(cut_cmp(prep, lower, upper)?, CutRelation::Subset(_)) {
        return Ok(None);
    }
    let one = Rational::from_integer(1);
    let two = Rational::from_integer(2);
    Ok(Some(match (lower, upper) {
        (Cut::Seg(a, q), Cut::Seg(b, r)) if a == b => Cut::Seg(*a, (q + r) / two),
        (Cut::Seg(a, q), _) => Cut::Seg(*a, q + one),
        (Cut::FullColumns(_), Cut::Seg(b, r)) => Cut::Seg(*b, r - one),
        (Cut::FullColumns(l), Cut::FullColumns(m)) => {
            let a = *prep.links[*m].difference(&prep.links[*l]).next().expect("strict inclusion");
            Cut::Seg(a, Rational::from_integer(0))
        }
    }))
}

pub fn default_probes() -> Vec<Rational> {
    vec![
        Rational::from_integer(-1),
        Rational::from_integer(0),
        Rational::new(1, 2),
        Rational::from_integer(1),
        Rational::from_integer(2),
    ]
}

/// The cut collection built from a chain, sorted ascending by inclusion.
#[derive(Debug, Clone)]
pub struct DenseCollection {
    pub prep: PreparedChain,
    pub cuts: Vec<Cut>,
    /// `dense[i]` marks `cuts[i]` as a member of the dense part (a `Seg`).
    pub dense: Vec<bool>,
    /// `witnesses[i]` lies strictly between `cuts[i]` and `cuts[i + 1]`.
    pub witnesses: Vec<Cut>,
}

impl DenseCollection {
    /// A witness strictly between `cuts[i]` and `cuts[j]`, `i < j`.
    pub fn witness_between(&self, i: usize, j: usize) -> Option<&Cut> {
        (i < j && j < self.cuts.len()).then(|| &self.witnesses[i])
    }

    /// Positions of the `FullColumns` cuts, ascending.
    pub fn column_positions(&self) -> Vec<usize> {
        (0..self.cuts.len()).filter(|&i| !self.dense[i]).collect()
    }
}

/// Builds `{X × ℚ : X link} ∪ {seg(a, q) : a ∈ S', q ∈ probes}` over the
/// chain restricted to a maximal separated set.
pub fn chain_to_dense(chain: &SubsetChain, probes: &[Rational]) -> Result<DenseCollection, ChainError> {
    let prep = PreparedChain::new(chain);
    let mut cuts: Vec<Cut> = (0..prep.links.len()).map(Cut::FullColumns).collect();
    for &a in &prep.order {
        for q in probes {
            let c = Cut::Seg(a, *q);
            if !cuts.contains(&c) {
                cuts.push(c);
            }
        }
    }
    // insertion sort: the comparator is total on the collection
    let mut sorted: Vec<Cut> = Vec::with_capacity(cuts.len());
    for c in cuts {
        let mut pos = sorted.len();
        while pos > 0 && cut_cmp(&prep, &sorted[pos - 1], &c)?.ordering() == Ordering::Greater {
            pos -= 1;
        }
        sorted.insert(pos, c);
    }
    let dense = sorted.iter().map(Cut::is_seg).collect();
    let mut witnesses = Vec::with_capacity(sorted.len().saturating_sub(1));
    for w in sorted.windows(2) {
        witnesses.push(between(&prep, &w[0], &w[1])?.ok_or(ChainError::IncompatibleCuts)?);
    }
    Ok(DenseCollection { prep, cuts: sorted, dense, witnesses })
}

/// Turns a cut collection back into a chain: the linear order is the sorted
/// cut list, the dense subset is its `Seg` part, and only the sets attached
/// to `FullColumns` cuts are kept. Returns the number of distinct sets.
pub fn round_trip_length(collection: &DenseCollection) -> usize {
    let order = FiniteLinOrder::from_distinct((0..collection.cuts.len()).collect::<Vec<usize>>());
    let d: Vec<usize> = (0..collection.cuts.len()).filter(|&i| collection.dense[i]).collect();
    let back = dense_to_chain(&order, &d, |i| format!("{i}"));
    // link k of `back` is X_s for the s that introduced it; recover the sets
    // for the column positions only
    let mut sets: Vec<BTreeSet<usize>> = Vec::new();
    for s in collection.column_positions() {
        let x_s: BTreeSet<usize> = d.iter().enumerate().filter(|(_, &p)| p <= s).map(|(k, _)| k).collect();
        if !sets.contains(&x_s) {
            sets.push(x_s);
        }
    }
    debug_assert!(sets.iter().all(|s| back.chain.links().contains(s)));
    sets.len()
}

/// Which route [`ded_finite`] takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DedMode {
    /// Longest chain in the subset lattice by dynamic programming over all
    /// subsets; `n <= DED_EXHAUSTIVE_BOUND`.
    Exhaustive,
    /// Checks the explicit witness `∅ ⊂ {0} ⊂ ... ⊂ [n]` and the bound from
    /// strictly increasing sizes.
    WitnessOnly,
}

pub const DED_EXHAUSTIVE_BOUND: usize = 6;
pub const DED_WITNESS_BOUND: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DedReport {
    pub n: usize,
    /// Number of subsets in a longest chain.
    pub links: usize,
    pub containments: usize,
    /// Subsets of the longest chain found, as bit masks.
    pub witness: Vec<u64>,
    pub mode: DedMode,
}

/// Maximum number of links in a chain of subsets of an `n`-set.
pub fn ded_finite(n: usize, mode: DedMode) -> Result<DedReport, ChainError> {
    match mode {
        DedMode::Exhaustive => {
            if n > DED_EXHAUSTIVE_BOUND {
                return Err(ChainError::TooLarge { n, bound: DED_EXHAUSTIVE_BOUND });
            }
            let size = 1usize << n;
            let mut best = vec![1usize; size];
            let mut prev = vec![usize::MAX; size];
            for s in 0..size {
                // proper submasks of s
                let mut t = s;
                while t != 0 {
                    t = (t - 1) & s;
                    if best[t] + 1 > best[s] {
                        best[s] = best[t] + 1;
                        prev[s] = t;
                    }
                }
            }
            let top = (0..size).max_by_key(|&s| best[s]).unwrap_or(0);
            let mut witness = Vec::new();
            let mut cur = top;
            loop {
                witness.push(cur as u64);
                if prev[cur] == usize::MAX {
                    break;
                }
                cur = prev[cur];
            }
            witness.reverse();
            let links = best[top];
            Ok(DedReport { n, links, containments: links - 1, witness, mode })
        }
        DedMode::WitnessOnly => {
            if n > DED_WITNESS_BOUND {
                return Err(ChainError::TooLarge { n, bound: DED_WITNESS_BOUND });
            }
            let witness: Vec<u64> = (0..=n).map(|k| (1u64 << k) - 1).collect();
            let increasing = witness.windows(2).all(|w| w[0] & !w[1] == 0 && w[0] != w[1]);
            // sizes of a strictly increasing chain are distinct values in 0..=n
            let upper = n + 1;
            assert!(increasing && witness.len() == upper);
            Ok(DedReport { n, links: upper, containments: n, witness, mode })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn chain(ground: &[&str], links: &[&[&str]]) -> SubsetChain {
        SubsetChain::from_labels(
            ground.iter().map(|s| s.to_string()).collect(),
            &links.iter().map(|l| l.iter().map(|s| s.to_string()).collect()).collect::<Vec<_>>(),
        )
        .unwrap()
    }

    #[test]
    fn c_order_examples() {
        let c = chain(&["a", "b", "c"], &[&["a"], &["a", "b"]]);
        assert_eq!(c_order(&c).pairs(), vec![(0, 1), (0, 2), (1, 2)]);
        let c = chain(&["a", "b", "c"], &[&[]]);
        assert!(c_order(&c).pairs().is_empty());
        let c = chain(&["a", "b", "c"], &[&["a"], &["a", "b", "c"]]);
        let co = c_order(&c);
        assert_eq!(co.pairs(), vec![(0, 1), (0, 2)]);
        assert!(!co.lt(1, 2) && !co.lt(2, 1));
    }

    #[test]
    fn chain_validation() {
        let g = vec!["a".to_string(), "b".to_string()];
        let l = |v: &[usize]| v.iter().copied().collect::<BTreeSet<_>>();
        assert_eq!(SubsetChain::new(g.clone(), vec![l(&[0]), l(&[1])]), Err(ChainError::NotAChain));
        assert_eq!(SubsetChain::new(g.clone(), vec![l(&[0]), l(&[0])]), Err(ChainError::DuplicateLink));
        assert_eq!(SubsetChain::new(g, vec![l(&[2])]), Err(ChainError::OutsideGround(2)));
    }

    #[test]
    fn separated_examples() {
        let c = chain(&["a", "b", "c"], &[&["a"], &["a", "b", "c"]]);
        let s = max_separated(&c, &[0, 1, 2]).unwrap();
        assert_eq!(s.members, vec![0, 1]);
        assert_eq!(s.restricted, vec![[0].into_iter().collect(), [0, 1].into_iter().collect()]);
        assert!(verify_separated(&c, &s).all());

        let c = chain(&["a", "b", "c"], &[&[], &["a", "b", "c"]]);
        let s = max_separated(&c, &[2, 0, 1]).unwrap();
        assert_eq!(s.members, vec![2]);
        assert!(verify_separated(&c, &s).all());

        let c = chain(&["a", "b", "c"], &[&["a"], &["a", "b"], &["a", "b", "c"]]);
        assert_eq!(max_separated(&c, &[0, 1, 2]).unwrap().members, vec![0, 1, 2]);
        assert_eq!(max_separated(&c, &[0, 1]), Err(ChainError::BadHint));
    }

    #[test]
    fn dense_to_chain_examples() {
        let b = FiniteLinOrder::new(vec![1, 2, 3]).unwrap();
        let r = dense_to_chain(&b, &[2, 3], |x| x.to_string());
        assert_eq!(r.chain.len(), 3);
        assert!(r.collapsed.is_empty());
        assert_eq!(r.chain.format_set(&r.chain.links()[1]), "{2}");

        let b = FiniteLinOrder::new(vec![1, 2]).unwrap();
        let r = dense_to_chain::<i32>(&b, &[], |x| x.to_string());
        assert_eq!(r.chain.len(), 1);

        let b = FiniteLinOrder::new(vec![1, 2, 3]).unwrap();
        let r = dense_to_chain(&b, &[3], |x| x.to_string());
        assert_eq!(r.chain.len(), 2);
        assert_eq!(r.collapsed, vec![1]);
    }

    #[test]
    fn chain_to_dense_two_links() {
        let c = chain(&["a", "b"], &[&["a"], &["a", "b"]]);
        let col = chain_to_dense(&c, &[Rational::from_integer(0)]).unwrap();
        let names: Vec<String> = col.cuts.iter().map(|c| col.prep.format_cut(c)).collect();
        assert_eq!(names, vec!["seg(a, 0)", "cols({a})", "seg(b, 0)", "cols({a,b})"]);
        let w: Vec<String> = col.witnesses.iter().map(|c| col.prep.format_cut(c)).collect();
        assert_eq!(w, vec!["seg(a, 1)", "seg(b, -1)", "seg(b, 1)"]);
    }

    #[test]
    fn singleton_chain_is_one_empty_cut() {
        let c = chain(&["a"], &[&[]]);
        let col = chain_to_dense(&c, &[]).unwrap();
        assert_eq!(col.cuts, vec![Cut::FullColumns(0)]);
        assert!(!membership_oracle(&col.prep, &col.cuts[0], &(0, Rational::from_integer(3))));
    }

    #[test]
    fn cut_cmp_examples() {
        let c = chain(&["a", "b"], &[&["a"], &["a", "b"]]);
        let p = PreparedChain::new(&c);
        let s = |a, n, d| Cut::Seg(a, Rational::new(n, d));
        assert!(matches!(cut_cmp(&p, &s(0, 1, 2), &s(0, 2, 3)), Ok(CutRelation::Subset(_))));
        assert!(matches!(cut_cmp(&p, &Cut::FullColumns(0), &s(1, 5, 1)), Ok(CutRelation::Subset(_))));
        assert_eq!(cut_cmp(&p, &Cut::FullColumns(1), &Cut::FullColumns(1)), Ok(CutRelation::Equal));
        assert_eq!(cut_cmp(&p, &Cut::FullColumns(7), &Cut::FullColumns(1)), Err(ChainError::IncompatibleCuts));
    }

    #[test]
    fn membership_examples() {
        let c = chain(&["a", "b"], &[&["a"], &["a", "b"]]);
        let p = PreparedChain::new(&c);
        let q = Rational::from_integer;
        assert!(membership_oracle(&p, &Cut::FullColumns(0), &(0, q(5))));
        assert!(!membership_oracle(&p, &Cut::Seg(0, q(3)), &(0, q(5))));
        assert!(!membership_oracle(&p, &Cut::Seg(0, q(0)), &(1, q(-7))));
    }

    #[test]
    fn ded_examples() {
        assert_eq!(ded_finite(0, DedMode::Exhaustive).unwrap().links, 1);
        assert_eq!(ded_finite(3, DedMode::Exhaustive).unwrap().links, 4);
        assert_eq!(ded_finite(6, DedMode::WitnessOnly).unwrap().links, 7);
        assert_eq!(ded_finite(7, DedMode::Exhaustive), Err(ChainError::TooLarge { n: 7, bound: 6 }));
    }
}
