//! Lexicographically ordered sums `⊕_I ℤ` over a finite index chain.
//!
//! Two significance conventions are supported. Under
//! [`Significance::LeastIndex`] the least index where two elements differ
//! decides the comparison (the ordinary lexicographic order). Under
//! [`Significance::GreatestIndex`] the sign of an element is the sign of its
//! coordinate at `m(f) = max supp(f)` (the reverse lexicographic order used
//! for the binary-tree group).
//!
//! Isolated subgroups are represented by index segments: the subgroup of all
//! elements whose support lies in the segment. A segment is well formed when
//! it is upward closed (least-index convention) or downward closed
//! (greatest-index convention).

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use rand::Rng;

use crate::order::{concat, order_iso, FiniteLinOrder, IsoResult, OrderMap};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LexError {
    #[error("segment is not closed in the direction required by the significance convention")]
    MalformedSegment,
    #[error("the zero element has no isolated hull")]
    ZeroElement,
    #[error("index position {0} is outside the group's index chain")]
    IndexOutOfRange(usize),
    #[error("the index chain must be nonempty")]
    EmptyIndex,
    #[error("concatenation theorem check needs least-index-significant groups")]
    WrongConvention,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Significance {
    LeastIndex,
    GreatestIndex,
}

/// An element of `⊕_I ℤ`: nonzero coordinates keyed by index position.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GroupElement {
    support: BTreeMap<usize, i64>,
}

impl GroupElement {
    pub fn zero() -> Self {
        GroupElement::default()
    }

    /// Dense coordinates; position `i` of the slice is index position `i`.
    pub fn from_coords(coords: &[i64]) -> Self {
        let support = coords.iter().enumerate().filter(|(_, &v)| v != 0).map(|(i, &v)| (i, v)).collect();
        GroupElement { support }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut e = GroupElement::zero();
        for (i, v) in pairs {
            e.add_at(i, v);
        }
        e
    }

    fn add_at(&mut self, i: usize, v: i64) {
        let entry = self.support.entry(i).or_insert(0);
        *entry += v;
        if *entry == 0 {
            self.support.remove(&i);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn coord(&self, i: usize) -> i64 {
        self.support.get(&i).copied().unwrap_or(0)
    }

    /// `supp(f)` as ascending index positions.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.support.keys().copied()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.support.iter().map(|(&i, &v)| (i, v))
    }

    pub fn add(&self, other: &GroupElement) -> GroupElement {
        let mut out = self.clone();
        for (&i, &v) in &other.support {
            out.add_at(i, v);
        }
        out
    }

    pub fn neg(&self) -> GroupElement {
        GroupElement { support: self.support.iter().map(|(&i, &v)| (i, -v)).collect() }
    }

    pub fn sub(&self, other: &GroupElement) -> GroupElement {
        self.add(&other.neg())
    }

    pub fn to_coords(&self, n: usize) -> Vec<i64> {
        (0..n).map(|i| self.coord(i)).collect()
    }
}

/// Default coordinate bound for [`LexGroup::is_isolated_sample`].
pub const SAMPLE_BOUND: i64 = 8;

/// `⊕_I ℤ` over a nonempty index chain with a significance convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexGroup {
    index: FiniteLinOrder<String>,
    convention: Significance,
}

impl LexGroup {
    pub fn new(index: FiniteLinOrder<String>, convention: Significance) -> Result<Self, LexError> {
        if index.is_empty() {
            return Err(LexError::EmptyIndex);
        }
        Ok(LexGroup { index, convention })
    }

    /// `ℤ^n` with the ordinary lexicographic order, index labels `0..n`.
    pub fn zlex(n: usize) -> Result<Self, LexError> {
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::new(FiniteLinOrder::from_distinct(labels), Significance::LeastIndex)
    }

    pub fn index(&self) -> &FiniteLinOrder<String> {
        &self.index
    }

    pub fn convention(&self) -> Significance {
        self.convention
    }

    pub fn rank_len(&self) -> usize {
        self.index.len()
    }

    fn check(&self, f: &GroupElement) -> Result<(), LexError> {
        match f.support.keys().next_back() {
            Some(&i) if i >= self.index.len() => Err(LexError::IndexOutOfRange(i)),
            _ => Ok(()),
        }
    }

    /// Sign of `f`: the coordinate at the most significant support index.
    pub fn sign(&self, f: &GroupElement) -> Ordering {
        let lead = match self.convention {
            Significance::LeastIndex => f.support.values().next(),
            Significance::GreatestIndex => f.support.values().next_back(),
        };
        lead.map_or(Ordering::Equal, |v| v.cmp(&0))
    }

    pub fn cmp(&self, f1: &GroupElement, f2: &GroupElement) -> Result<Ordering, LexError> {
        self.check(f1)?;
        self.check(f2)?;
        Ok(self.sign(&f1.sub(f2)))
    }

    /// Positive cone membership, `f ∈ P`.
    pub fn is_positive(&self, f: &GroupElement) -> bool {
        self.sign(f) == Ordering::Greater
    }

    pub fn abs(&self, f: &GroupElement) -> Result<GroupElement, LexError> {
        self.check(f)?;
        Ok(if self.sign(f) == Ordering::Less { f.neg() } else { f.clone() })
    }

    /// Keeps the coordinates of the first `prefix` index positions. On a sum
    /// `G ⊕ H` with `G` occupying the first positions this is the projection
    /// onto `G`; under the least-index convention it is order preserving.
    pub fn project_prefix(&self, prefix: usize, f: &GroupElement) -> GroupElement {
        GroupElement { support: f.support.range(..prefix).map(|(&i, &v)| (i, v)).collect() }
    }

    pub fn segment_is_well_formed(&self, segment: &BTreeSet<usize>) -> bool {
        let n = self.index.len();
        if segment.iter().any(|&i| i >= n) {
            return false;
        }
        let k = segment.len();
        match self.convention {
            Significance::LeastIndex => segment.iter().copied().eq(n - k..n),
            Significance::GreatestIndex => segment.iter().copied().eq(0..k),
        }
    }

    /// The segment subgroup of the given size: the last `k` positions
    /// (least-index convention) or the first `k` (greatest-index).
    pub fn segment_subgroup(&self, k: usize) -> IsolatedSubgroup {
        let n = self.index.len();
        let segment = match self.convention {
            Significance::LeastIndex => (n - k..n).collect(),
            Significance::GreatestIndex => (0..k).collect(),
        };
        IsolatedSubgroup { segment }
    }

    /// All segment subgroups ordered by inclusion, trivial and full included.
    pub fn all_segment_subgroups(&self) -> Vec<IsolatedSubgroup> {
        (0..=self.index.len()).map(|k| self.segment_subgroup(k)).collect()
    }

    /// Smallest well-formed segment subgroup containing `f`.
    pub fn isolated_hull(&self, f: &GroupElement) -> Result<IsolatedSubgroup, LexError> {
        self.check(f)?;
        let n = self.index.len();
        let segment = match self.convention {
            Significance::LeastIndex => {
                let lo = *f.support.keys().next().ok_or(LexError::ZeroElement)?;
                (lo..n).collect()
            }
            Significance::GreatestIndex => {
                let hi = *f.support.keys().next_back().ok_or(LexError::ZeroElement)?;
                (0..=hi).collect()
            }
        };
        Ok(IsolatedSubgroup { segment })
    }

    /// Samples pairs `(h, x)` with `h ∈ H` and looks for `|x| <= |h|` with
    /// `x ∉ H`. Malformed segments are rejected before any sampling.
    ///
    /// Coordinates are drawn from `[-bound, bound]`; each coordinate of `x`
    /// is zeroed with probability 1/2 so that `|x| <= |h|` is hit often.
    pub fn is_isolated_sample<R: Rng + ?Sized>(
        &self,
        h_sub: &IsolatedSubgroup,
        trials: usize,
        bound: i64,
        rng: &mut R,
    ) -> Result<SampleReport, LexError> {
        if !self.segment_is_well_formed(&h_sub.segment) {
            return Err(LexError::MalformedSegment);
        }
        let n = self.index.len();
        let mut report = SampleReport { trials, interval_hits: 0, counterexample: None };
        for _ in 0..trials {
            let h = GroupElement::from_pairs(h_sub.segment.iter().map(|&i| (i, rng.gen_range(-bound..=bound))));
            let x = GroupElement::from_pairs((0..n).map(|i| {
                let v = if rng.gen_bool(0.5) { 0 } else { rng.gen_range(-bound..=bound) };
                (i, v)
            }));
            let (ax, ah) = (self.abs(&x)?, self.abs(&h)?);
            if self.cmp(&ax, &ah)? != Ordering::Greater {
                report.interval_hits += 1;
                if !h_sub.contains(&x) {
                    report.counterexample = Some((h, x));
                    break;
                }
            }
        }
        Ok(report)
    }

    /// Nontrivial segment subgroups ordered by inclusion; its order type is
    /// the rank of the group.
    pub fn rank(&self) -> FiniteLinOrder<IsolatedSubgroup> {
        FiniteLinOrder::from_distinct((1..=self.index.len()).map(|k| self.segment_subgroup(k)).collect())
    }

    /// The prime spectrum of a valuation ring with this value group, as the
    /// inclusion-reversed chain of all isolated subgroups. `P0` is the zero
    /// ideal (matching the whole group) and the last prime is the maximal
    /// ideal (matching the trivial subgroup).
    pub fn valuation_spectrum(&self) -> FiniteLinOrder<PrimeLabel> {
        let n = self.index.len();
        FiniteLinOrder::from_distinct(
            (0..=n).map(|k| PrimeLabel { name: format!("P{k}"), subgroup: self.segment_subgroup(n - k) }).collect(),
        )
    }

    pub fn label(&self, i: usize) -> &str {
        self.index.get(i).map(String::as_str).unwrap_or("?")
    }

    pub fn format_element(&self, f: &GroupElement) -> String {
        let parts: Vec<String> = f.entries().map(|(i, v)| format!("{}:{}", self.label(i), v)).collect();
        format!("{{{}}}", parts.join(","))
    }

    pub fn format_segment(&self, h: &IsolatedSubgroup) -> String {
        let parts: Vec<&str> = h.segment.iter().map(|&i| self.label(i)).collect();
        format!("{{{}}}", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleReport {
    pub trials: usize,
    /// Sampled pairs that actually satisfied `|x| <= |h|`.
    pub interval_hits: usize,
    pub counterexample: Option<(GroupElement, GroupElement)>,
}

impl SampleReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// The subgroup `{f : supp(f) ⊆ segment}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IsolatedSubgroup {
    pub segment: BTreeSet<usize>,
}

impl IsolatedSubgroup {
    pub fn from_positions(positions: impl IntoIterator<Item = usize>) -> Self {
        IsolatedSubgroup { segment: positions.into_iter().collect() }
    }

    pub fn contains(&self, f: &GroupElement) -> bool {
        f.support().all(|i| self.segment.contains(&i))
    }

    pub fn is_subgroup_of(&self, other: &IsolatedSubgroup) -> bool {
        self.segment.is_subset(&other.segment)
    }

    pub fn is_trivial(&self) -> bool {
        self.segment.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeLabel {
    pub name: String,
    pub subgroup: IsolatedSubgroup,
}

impl fmt::Display for PrimeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// The lexicographic sum of several groups over the concatenation of their
/// index chains. Labels become `"{k}.{label}"` for summand `k`.
pub fn lex_sum(groups: &[LexGroup]) -> Result<LexGroup, LexError> {
    if groups.iter().any(|g| g.convention != Significance::LeastIndex) {
        return Err(LexError::WrongConvention);
    }
    let parts: Vec<FiniteLinOrder<String>> = groups.iter().map(|g| g.index.clone()).collect();
    let joined = concat(&parts).map_err(|_| LexError::EmptyIndex)?;
    let labels = joined.map(|(k, l)| format!("{k}.{l}"));
    LexGroup::new(labels, Significance::LeastIndex)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConcatReport {
    /// Rank of the sum, computed directly from its segment subgroups.
    pub lhs: FiniteLinOrder<IsolatedSubgroup>,
    /// Concatenation of the summand ranks over the reversed summand order;
    /// elements are `(summand, subgroup of that summand)`.
    pub rhs: FiniteLinOrder<(usize, IsolatedSubgroup)>,
    /// The natural map: a segment of the sum goes to the summand holding its
    /// least index, together with its trace on that summand.
    pub natural_map: Option<OrderMap>,
    pub iso: IsoResult,
}

impl ConcatReport {
    pub fn holds(&self) -> bool {
        self.natural_map.is_some() && matches!(self.iso, IsoResult::Isomorphic(_))
    }
}

/// Checks that the rank of a lexicographic sum equals the concatenation of
/// the summand ranks taken over the reversed index order.
pub fn check_concatenation_theorem(groups: &[LexGroup]) -> Result<ConcatReport, LexError> {
    let sum = lex_sum(groups)?;
    let lhs = sum.rank();

    let k = groups.len();
    let rev_parts: Vec<FiniteLinOrder<(usize, IsolatedSubgroup)>> =
        (0..k).rev().map(|b| groups[b].rank().map(|h| (b, h.clone()))).collect();
    let rhs = concat(&rev_parts).map_err(|_| LexError::EmptyIndex)?.map(|(_, x)| x.clone());

    let offsets: Vec<usize> = groups
        .iter()
        .scan(0, |acc, g| {
            let o = *acc;
            *acc += g.rank_len();
            Some(o)
        })
        .collect();
    let mut mapping = Vec::with_capacity(lhs.len());
    for seg in lhs.iter() {
        let Some(&least) = seg.segment.iter().next() else { break };
        let block = offsets.iter().rposition(|&o| o <= least).unwrap_or(0);
        let len = groups[block].rank_len();
        let trace = IsolatedSubgroup::from_positions(
            seg.segment
                .iter()
                .filter(|&&i| i >= offsets[block] && i < offsets[block] + len)
                .map(|&i| i - offsets[block]),
        );
        match rhs.position(&(block, trace)) {
            Some(p) => mapping.push(p),
            None => break,
        }
    }
    let candidate = OrderMap { mapping };
    let natural_map = candidate.is_isomorphism(&lhs, &rhs).then_some(candidate);
    let iso = order_iso(&lhs, &rhs);
    Ok(ConcatReport { lhs, rhs, natural_map, iso })
}

/// Binary strings of length `< depth` in prefix-lexicographic order: a
/// proper prefix precedes its extensions, otherwise the least differing bit
/// decides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeIndex {
    pub depth: usize,
    pub carrier: Vec<String>,
}

pub fn tree_cmp(a: &str, b: &str) -> Ordering {
    for (x, y) in a.bytes().zip(b.bytes()) {
        if x != y {
            return x.cmp(&y);
        }
    }
    a.len().cmp(&b.len())
}

impl TreeIndex {
    pub fn new(depth: usize) -> Self {
        let mut carrier = binary_strings_below(depth);
        carrier.sort_by(|a, b| tree_cmp(a, b));
        TreeIndex { depth, carrier }
    }

    /// The length-`depth` strings, in tree order.
    pub fn leaves(&self) -> Vec<String> {
        let mut v = binary_strings_of_len(self.depth);
        v.sort_by(|a, b| tree_cmp(a, b));
        v
    }

    /// `seg(x) ∩ carrier`, as carrier positions.
    pub fn seg_positions(&self, x: &str) -> BTreeSet<usize> {
        self.carrier.iter().enumerate().filter(|(_, y)| tree_cmp(y, x) == Ordering::Less).map(|(i, _)| i).collect()
    }
}

fn binary_strings_of_len(len: usize) -> Vec<String> {
    (0..1u64 << len)
        .map(|bits| (0..len).map(|i| if bits >> (len - 1 - i) & 1 == 1 { '1' } else { '0' }).collect())
        .collect()
}

fn binary_strings_below(depth: usize) -> Vec<String> {
    (0..depth).flat_map(binary_strings_of_len).collect()
}

/// Display label of a tree node; the root is `ε`.
pub fn tree_label(s: &str) -> String {
    if s.is_empty() {
        "ε".to_string()
    } else {
        s.to_string()
    }
}

#[derive(Debug, Clone)]
pub struct TreeGroup {
    pub group: LexGroup,
    pub tree: TreeIndex,
    /// `(leaf, G_leaf)` in tree order of the leaves.
    pub leaves: Vec<(String, IsolatedSubgroup)>,
}

impl TreeGroup {
    pub fn distinct_subgroups(&self) -> Vec<IsolatedSubgroup> {
        let mut v: Vec<IsolatedSubgroup> = Vec::new();
        for (_, h) in &self.leaves {
            if !v.contains(h) {
                v.push(h.clone());
            }
        }
        v
    }

    /// `x < z` implies `G_x ⊆ G_z` along the leaf order.
    pub fn is_monotone(&self) -> bool {
        self.leaves.windows(2).all(|w| w[0].1.is_subgroup_of(&w[1].1))
    }
}

/// `ℤ^(2^{<n})` under the greatest-index convention over the tree order,
/// together with the leaf subgroups `G_x = {f : supp(f) ⊆ seg(x)}`.
pub fn tree_group(n: usize) -> Result<TreeGroup, LexError> {
    if n == 0 {
        return Err(LexError::EmptyIndex);
    }
    let tree = TreeIndex::new(n);
    let labels = tree.carrier.iter().map(|s| tree_label(s)).collect();
    let group = LexGroup::new(FiniteLinOrder::from_distinct(labels), Significance::GreatestIndex)?;
    let leaves = tree
        .leaves()
        .into_iter()
        .map(|x| {
            let h = IsolatedSubgroup { segment: tree.seg_positions(&x) };
            (x, h)
        })
        .collect();
    Ok(TreeGroup { group, tree, leaves })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn e(c: &[i64]) -> GroupElement {
        GroupElement::from_coords(c)
    }

    #[test]
    fn cmp_examples() {
        let g = LexGroup::zlex(3).unwrap();
        assert_eq!(g.cmp(&e(&[0, 3, -1]), &e(&[1, 0, 0])), Ok(Ordering::Less));
        assert_eq!(g.cmp(&e(&[4, -2, 7]), &e(&[4, -2, 7])), Ok(Ordering::Equal));
        let t = LexGroup::new(FiniteLinOrder::new(vec!["0".into(), "1".into()]).unwrap(), Significance::GreatestIndex)
            .unwrap();
        assert_eq!(t.cmp(&e(&[5, 0]), &e(&[0, 1])), Ok(Ordering::Less));
        assert_eq!(g.cmp(&e(&[0, 0, 0, 1]), &e(&[0])), Err(LexError::IndexOutOfRange(3)));
    }

    #[test]
    fn greatest_index_sign_table() {
        // Independent oracle: scan the dense coordinates from the top.
        let t = LexGroup::new(FiniteLinOrder::new(vec!["0".into(), "1".into()]).unwrap(), Significance::GreatestIndex)
            .unwrap();
        for a in -3..=3 {
            for b in -3..=3 {
                let expected = if b != 0 { b.cmp(&0) } else { a.cmp(&0) };
                assert_eq!(t.sign(&e(&[a, b])), expected);
            }
        }
    }

    #[test]
    fn abs_examples() {
        let g = LexGroup::zlex(2).unwrap();
        assert_eq!(g.abs(&e(&[0, 0])), Ok(e(&[0, 0])));
        assert_eq!(g.abs(&e(&[-1, 2])), Ok(e(&[1, -2])));
        assert_eq!(g.abs(&e(&[1, -5])), Ok(e(&[1, -5])));
    }

    #[test]
    fn isolation_sampling() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let g = LexGroup::zlex(2).unwrap();
        let full = IsolatedSubgroup::from_positions([0, 1]);
        assert!(g.is_isolated_sample(&full, 1000, 8, &mut rng).unwrap().passed());
        let upper = IsolatedSubgroup::from_positions([1]);
        let r = g.is_isolated_sample(&upper, 10_000, 8, &mut rng).unwrap();
        assert!(r.passed());
        assert!(r.interval_hits > 0);
        let lower = IsolatedSubgroup::from_positions([0]);
        assert_eq!(g.is_isolated_sample(&lower, 10, 8, &mut rng), Err(LexError::MalformedSegment));
    }

    #[test]
    fn hull_examples() {
        let g = LexGroup::zlex(3).unwrap();
        assert_eq!(g.isolated_hull(&e(&[0, 1, 1])).unwrap().segment, [1, 2].into_iter().collect());
        assert_eq!(g.isolated_hull(&e(&[2])).unwrap().segment, [0, 1, 2].into_iter().collect());
        assert_eq!(g.isolated_hull(&e(&[])), Err(LexError::ZeroElement));
        let t = LexGroup::new(
            FiniteLinOrder::new(vec!["0".into(), "1".into(), "2".into()]).unwrap(),
            Significance::GreatestIndex,
        )
        .unwrap();
        assert_eq!(t.isolated_hull(&e(&[0, 4])).unwrap().segment, [0, 1].into_iter().collect());
    }

    #[test]
    fn rank_and_spectrum() {
        assert_eq!(LexGroup::zlex(1).unwrap().rank().len(), 1);
        assert_eq!(LexGroup::zlex(3).unwrap().rank().len(), 3);
        let spec = LexGroup::zlex(1).unwrap().valuation_spectrum();
        assert_eq!(spec.len(), 2);
        assert!(spec.get(0).unwrap().subgroup.segment.len() == 1);
        assert!(spec.get(1).unwrap().subgroup.is_trivial());
        assert_eq!(LexGroup::zlex(0), Err(LexError::EmptyIndex));
    }

    #[test]
    fn concatenation_examples() {
        let z = |n| LexGroup::zlex(n).unwrap();
        let r = check_concatenation_theorem(&[z(1), z(2)]).unwrap();
        assert!(r.holds());
        assert_eq!((r.lhs.len(), r.rhs.len()), (3, 3));
        let r = check_concatenation_theorem(&[z(1)]).unwrap();
        assert!(r.holds());
        let r = check_concatenation_theorem(&[z(2), z(2), z(1)]).unwrap();
        assert!(r.holds());
        assert_eq!(r.lhs.len(), 5);
        let t = tree_group(2).unwrap().group;
        assert_eq!(check_concatenation_theorem(&[t]).unwrap_err(), LexError::WrongConvention);
    }

    #[test]
    fn projection_is_order_preserving() {
        let g = LexGroup::zlex(4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..2000 {
            let f = e(&(0..4).map(|_| rng.gen_range(-3..=3)).collect::<Vec<_>>());
            let h = e(&(0..4).map(|_| rng.gen_range(-3..=3)).collect::<Vec<_>>());
            if g.cmp(&f, &h).unwrap() != Ordering::Greater {
                let (pf, ph) = (g.project_prefix(2, &f), g.project_prefix(2, &h));
                assert_ne!(g.cmp(&pf, &ph).unwrap(), Ordering::Greater);
            }
        }
    }

    #[test]
    fn tree_two() {
        let t = tree_group(2).unwrap();
        assert_eq!(t.tree.carrier, vec!["", "0", "1"]);
        let segs: Vec<Vec<usize>> = t.leaves.iter().map(|(_, h)| h.segment.iter().copied().collect()).collect();
        assert_eq!(segs, vec![vec![0, 1], vec![0, 1], vec![0, 1, 2], vec![0, 1, 2]]);
        assert_eq!(t.distinct_subgroups().len(), 2);
        let spec = t.group.valuation_spectrum();
        assert_eq!(spec.len(), 4);
    }

    #[test]
    fn tree_counts() {
        for n in 1..=4 {
            let t = tree_group(n).unwrap();
            assert_eq!(t.tree.carrier.len(), (1 << n) - 1);
            assert_eq!(t.distinct_subgroups().len(), 1 << (n - 1));
            assert!(t.is_monotone());
            let first = &t.leaves.first().unwrap().1;
            let last = &t.leaves.last().unwrap().1;
            assert!(first.is_subgroup_of(last) && first != last || n == 1);
        }
    }

    #[test]
    fn tree_order_is_preorder_traversal() {
        let t = TreeIndex::new(3);
        assert_eq!(t.carrier, vec!["", "0", "00", "01", "1", "10", "11"]);
    }
}
