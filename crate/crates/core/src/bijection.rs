//! Bijections between the partition families and trees:
//!
//! * tree pairs with `ell - 1` edges  <->  `P^ell((1))`
//! * ordered forests of `m` trees with `ell` edges  <->  `P^ell(Omega_m)`
//!
//! Labels split into two classes. The "low" class (odd levels of the minus
//! tree, even levels of the plus tree) receives `1, 2, ...` deepest level
//! first; the "high" class (even levels of minus, odd levels of plus below
//! the root) receives `ell, ell - 1, ...` the same way. Roots carry the one
//! remaining label `b` as `b-` and `b+`, and `mu(i)` is the label of the
//! parent of `i`.

use std::cmp::Reverse;
use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::closed_form::{find_square_core, member_omega, mu_tilde};
use crate::error::{Error, Result};
use crate::partition::BoundedPartition;
use crate::tree::{attach, cut, Forest, ForestSlot, PlaneTree, TreePair};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexLabel {
    Plain(usize),
    RootMinus(usize),
    RootPlus(usize),
}

impl VertexLabel {
    /// The index in `[ell]` this label stands for.
    pub fn value(self) -> usize {
        match self {
            VertexLabel::Plain(v) | VertexLabel::RootMinus(v) | VertexLabel::RootPlus(v) => v,
        }
    }

    fn mirrored(self, ell: usize) -> Self {
        match self {
            VertexLabel::Plain(v) => VertexLabel::Plain(ell + 1 - v),
            VertexLabel::RootMinus(v) => VertexLabel::RootPlus(ell + 1 - v),
            VertexLabel::RootPlus(v) => VertexLabel::RootMinus(ell + 1 - v),
        }
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Plain(v) => write!(f, "{v}"),
            VertexLabel::RootMinus(v) => write!(f, "{v}-"),
            VertexLabel::RootPlus(v) => write!(f, "{v}+"),
        }
    }
}

impl FromStr for VertexLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad vertex label {s:?}"));
        if let Some(v) = s.strip_suffix('-') {
            Ok(VertexLabel::RootMinus(v.parse().map_err(|_| bad())?))
        } else if let Some(v) = s.strip_suffix('+') {
            Ok(VertexLabel::RootPlus(v.parse().map_err(|_| bad())?))
        } else {
            Ok(VertexLabel::Plain(s.parse().map_err(|_| bad())?))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledTree {
    pub label: VertexLabel,
    pub children: Vec<LabeledTree>,
}

impl LabeledTree {
    pub fn shape(&self) -> PlaneTree {
        PlaneTree::with_children(self.children.iter().map(LabeledTree::shape).collect())
    }

    fn map_labels(&self, f: &impl Fn(VertexLabel) -> VertexLabel) -> LabeledTree {
        LabeledTree {
            label: f(self.label),
            children: self.children.iter().map(|c| c.map_labels(f)).collect(),
        }
    }

    /// Visits `(child, parent)` label pairs in preorder.
    pub fn for_each_edge(&self, f: &mut impl FnMut(VertexLabel, VertexLabel)) {
        for c in &self.children {
            f(c.label, self.label);
            c.for_each_edge(f);
        }
    }
}

impl fmt::Display for LabeledTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)?;
        if !self.children.is_empty() {
            f.write_str("(")?;
            for (i, c) in self.children.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                c.fmt(f)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

struct LabeledParser<'a> {
    src: &'a str,
    pos: usize,
}

impl LabeledParser<'_> {
    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn tree(&mut self) -> Result<LabeledTree> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .find(|c: char| !(c.is_ascii_digit() || c == '+' || c == '-'))
            .unwrap_or(rest.len());
        if len == 0 {
            return Err(Error::Parse(format!("expected a label at offset {}", self.pos)));
        }
        let label: VertexLabel = rest[..len].parse()?;
        self.pos += len;
        let mut children = Vec::new();
        self.skip_ws();
        if self.src[self.pos..].starts_with('(') {
            self.pos += 1;
            loop {
                self.skip_ws();
                if self.src[self.pos..].starts_with(')') {
                    self.pos += 1;
                    break;
                }
                if self.pos >= self.src.len() {
                    return Err(Error::Parse("unbalanced parentheses".into()));
                }
                children.push(self.tree()?);
            }
        }
        Ok(LabeledTree { label, children })
    }
}

impl FromStr for LabeledTree {
    type Err = Error;

    /// Parses `9-(11(1 2 3(14) 4) 10(5))`.
    fn from_str(s: &str) -> Result<Self> {
        let mut p = LabeledParser { src: s, pos: 0 };
        let t = p.tree()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(Error::Parse(format!("trailing input in {s:?}")));
        }
        Ok(t)
    }
}

/// A tree pair carrying the labels of the Catalan bijection.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledTreePair {
    pub ell: usize,
    pub minus: LabeledTree,
    pub plus: LabeledTree,
}

impl LabeledTreePair {
    pub fn shape(&self) -> TreePair {
        TreePair::new(self.minus.shape(), self.plus.shape())
    }

    /// The root label `b`.
    pub fn fixed_point(&self) -> usize {
        self.minus.label.value()
    }

    /// `mu(i)` = label of the parent of `i`, `mu(b) = b`.
    pub fn to_partition(&self) -> Result<BoundedPartition> {
        let b = self.fixed_point();
        let mut parts = vec![0usize; self.ell];
        if b == 0 || b > self.ell {
            return Err(Error::InvalidTree(format!("root label {b} outside [1, {}]", self.ell)));
        }
        parts[b - 1] = b;
        let mut fill = |child: VertexLabel, parent: VertexLabel| {
            if let VertexLabel::Plain(c) = child {
                if (1..=self.ell).contains(&c) {
                    parts[c - 1] = parent.value();
                }
            }
        };
        self.minus.for_each_edge(&mut fill);
        self.plus.for_each_edge(&mut fill);
        if parts.contains(&0) {
            return Err(Error::InvalidTree(format!(
                "labels of {self} do not cover [1, {}]",
                self.ell
            )));
        }
        BoundedPartition::new(parts, self.ell)
    }

    /// Checks that the labels are exactly those the labeling algorithm
    /// assigns to this shape.
    pub fn validate(&self) -> Result<()> {
        let expected = label_pair(&self.shape(), self.ell)?;
        if expected != *self {
            return Err(Error::InvalidTree(format!(
                "labels of {self} differ from the canonical labeling {expected}"
            )));
        }
        Ok(())
    }
}

impl fmt::Display for LabeledTreePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.minus, self.plus)
    }
}

impl FromStr for LabeledTreePair {
    type Err = Error;

    /// Parses `minus | plus`; `ell` is one less than the vertex count.
    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("labeled pair {s:?} needs the form minus | plus")))?;
        let minus: LabeledTree = a.parse()?;
        let plus: LabeledTree = b.parse()?;
        if !matches!(minus.label, VertexLabel::RootMinus(_))
            || !matches!(plus.label, VertexLabel::RootPlus(_))
            || minus.label.value() != plus.label.value()
        {
            return Err(Error::Parse(format!("roots of {s:?} must be b- and b+")));
        }
        let ell = minus.shape().vertices() + plus.shape().vertices() - 1;
        Ok(LabeledTreePair { ell, minus, plus })
    }
}

/// Breadth-first flattening: `levels[d]` holds the vertices at depth `d + 1`
/// left to right, as indices into `children`.
struct Flat {
    children: Vec<Vec<usize>>,
    levels: Vec<Vec<usize>>,
}

fn flatten(tree: &PlaneTree) -> Flat {
    let mut children = Vec::new();
    let mut levels: Vec<Vec<usize>> = Vec::new();
    let mut queue = VecDeque::from([(tree, 0usize)]);
    let mut next = 1;
    while let Some((t, depth)) = queue.pop_front() {
        let id = children.len();
        let n = t.children().len();
        children.push((next..next + n).collect());
        next += n;
        if levels.len() <= depth {
            levels.push(Vec::new());
        }
        levels[depth].push(id);
        queue.extend(t.children().iter().map(|c| (c, depth + 1)));
    }
    Flat { children, levels }
}

fn rebuild(flat: &Flat, labels: &[VertexLabel], id: usize) -> LabeledTree {
    LabeledTree {
        label: labels[id],
        children: flat.children[id].iter().map(|&c| rebuild(flat, labels, c)).collect(),
    }
}

/// Labels a pair with `ell - 1` total edges: deepest level first, left to
/// right, merging both trees' levels of the same class.
pub fn label_pair(pair: &TreePair, ell: usize) -> Result<LabeledTreePair> {
    if ell == 0 || pair.edges() + 1 != ell {
        return Err(Error::Precondition(format!(
            "pair {pair} has {} edges, expected ell - 1 = {}",
            pair.edges(),
            ell.saturating_sub(1)
        )));
    }
    let minus = flatten(&pair.minus);
    let plus = flatten(&pair.plus);
    let mut minus_labels = vec![VertexLabel::Plain(0); pair.minus.vertices()];
    let mut plus_labels = vec![VertexLabel::Plain(0); pair.plus.vertices()];
    let depth = minus.levels.len().max(plus.levels.len());
    let level = |f: &Flat, d: usize| f.levels.get(d - 1).cloned().unwrap_or_default();

    let mut low = 1;
    for d in (2..=depth).rev() {
        let (flat, labels) = if d % 2 == 1 {
            (&minus, &mut minus_labels)
        } else {
            (&plus, &mut plus_labels)
        };
        for v in level(flat, d) {
            labels[v] = VertexLabel::Plain(low);
            low += 1;
        }
    }
    let mut high = ell;
    for d in (2..=depth).rev() {
        let (flat, labels) = if d % 2 == 0 {
            (&minus, &mut minus_labels)
        } else {
            (&plus, &mut plus_labels)
        };
        for v in level(flat, d) {
            labels[v] = VertexLabel::Plain(high);
            high -= 1;
        }
    }
    let b = low;
    assert_eq!(b, high, "exactly one label is left for the roots");
    minus_labels[0] = VertexLabel::RootMinus(b);
    plus_labels[0] = VertexLabel::RootPlus(b);
    Ok(LabeledTreePair {
        ell,
        minus: rebuild(&minus, &minus_labels, 0),
        plus: rebuild(&plus, &plus_labels, 0),
    })
}

/// The partition of `P^ell((1))` encoded by an unlabeled pair.
pub fn pair_to_partition(pair: &TreePair, ell: usize) -> Result<BoundedPartition> {
    label_pair(pair, ell)?.to_partition()
}

/// Builds the labeled trees rooted at `roots` from a parent assignment.
/// Children of class "low" (`i < first_root`) are ordered increasingly,
/// class "high" decreasingly.
fn grow_labeled(
    roots: &[VertexLabel],
    parent_of: &BTreeMap<usize, VertexLabel>,
    is_low: impl Fn(usize) -> bool,
) -> BTreeMap<VertexLabel, LabeledTree> {
    let mut kids: BTreeMap<VertexLabel, Vec<usize>> = BTreeMap::new();
    for (&i, &p) in parent_of {
        kids.entry(p).or_default().push(i);
    }
    for list in kids.values_mut() {
        let low = is_low(list[0]);
        assert!(
            list.iter().all(|&c| is_low(c) == low),
            "siblings {list:?} mix label classes"
        );
        if low {
            list.sort_unstable();
        } else {
            list.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    fn build(label: VertexLabel, kids: &BTreeMap<VertexLabel, Vec<usize>>) -> LabeledTree {
        LabeledTree {
            label,
            children: kids
                .get(&label)
                .map(|list| {
                    list.iter()
                        .map(|&c| build(VertexLabel::Plain(c), kids))
                        .collect()
                })
                .unwrap_or_default(),
        }
    }
    roots.iter().map(|&r| (r, build(r, &kids))).collect()
}

/// Inverse of [`pair_to_partition`] for `mu ∈ P^ell((1))`.
pub fn partition_to_pair(mu: &BoundedPartition) -> Result<LabeledTreePair> {
    let w = find_square_core(mu)?;
    if w.k != 1 {
        return Err(Error::NotInDomain(format!(
            "{mu} lies in the family of core {}, not (1)",
            w.core
        )));
    }
    let ell = mu.len();
    let b = w.b;
    let parent_of: BTreeMap<usize, VertexLabel> = (1..=ell)
        .filter(|&i| i != b)
        .map(|i| {
            let p = mu.at(i);
            let label = if p != b {
                VertexLabel::Plain(p)
            } else if i < b {
                VertexLabel::RootPlus(b)
            } else {
                VertexLabel::RootMinus(b)
            };
            (i, label)
        })
        .collect();
    let roots = [VertexLabel::RootMinus(b), VertexLabel::RootPlus(b)];
    let mut built = grow_labeled(&roots, &parent_of, |i| i < b);
    let pair = LabeledTreePair {
        ell,
        minus: built.remove(&roots[0]).expect("minus root"),
        plus: built.remove(&roots[1]).expect("plus root"),
    };
    debug_assert_eq!(pair.to_partition().as_ref(), Ok(mu));
    Ok(pair)
}

/// Action of `tau` on labeled pairs: the trees swap places, every label `i`
/// becomes `ell + 1 - i`, and `b-`, `b+` become `(ell+1-b)+`, `(ell+1-b)-`.
pub fn tau_on_pair(pair: &LabeledTreePair) -> LabeledTreePair {
    let ell = pair.ell;
    let f = |l: VertexLabel| l.mirrored(ell);
    LabeledTreePair {
        ell,
        minus: pair.plus.map_labels(&f),
        plus: pair.minus.map_labels(&f),
    }
}

/// One forest position after labeling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LabeledSlot {
    Empty,
    Pair(LabeledTreePair),
}

/// The labeled pairs of the forest bijection, placed at their slots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledForest {
    pub m: usize,
    pub ell: usize,
    pub slots: Vec<LabeledSlot>,
}

impl LabeledForest {
    pub fn shape(&self) -> Forest {
        let slots = self
            .slots
            .iter()
            .map(|s| match s {
                LabeledSlot::Empty => ForestSlot::Empty,
                LabeledSlot::Pair(p) => ForestSlot::Tree(attach(&p.shape())),
            })
            .collect();
        Forest::new(slots).expect("m >= 1")
    }

    /// Slot index (1-based) of the pair rooted at each fixed point.
    pub fn positions(&self) -> Vec<(usize, usize)> {
        self.slots
            .iter()
            .enumerate()
            .filter_map(|(i, s)| match s {
                LabeledSlot::Pair(p) => Some((p.fixed_point(), i + 1)),
                LabeledSlot::Empty => None,
            })
            .collect()
    }
}

impl fmt::Display for LabeledForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .slots
            .iter()
            .map(|s| match s {
                LabeledSlot::Empty => "_".to_string(),
                LabeledSlot::Pair(p) => p.to_string(),
            })
            .collect();
        f.write_str(&parts.join(" ; "))
    }
}

/// Labeled pairs for `mu ∈ P^ell(Omega_m)`: vertices `L ∪ H`, roots `b±` for
/// `b ∈ M`, edges `i -> mu~(i)`; the pair rooted at `b` sits at slot
/// `m - mu(b) + b`.
pub fn partition_to_labeled_forest(mu: &BoundedPartition, m: usize) -> Result<LabeledForest> {
    if !member_omega(mu, m)? {
        return Err(Error::NotInDomain(format!("{mu} is not in P^{}(Omega_{m})", mu.len())));
    }
    let tilde = mu_tilde(mu, m)?;
    let classes = tilde.classes();
    assert!(classes.are_ordered_intervals(), "L, M, H of {mu} are not ordered intervals");
    let ell = mu.len();
    let first_fixed = classes.fixed[0];
    let is_low = |i: usize| i < first_fixed;
    let is_fixed = |i: usize| classes.fixed.binary_search(&i).is_ok();

    let mut parent_of = BTreeMap::new();
    for &i in classes.low.iter().chain(&classes.high) {
        let t = tilde.at(i);
        assert!(
            is_low(i) != is_low(t) || is_fixed(t),
            "edge {i} -> {t} stays inside one class"
        );
        let label = if !is_fixed(t) {
            VertexLabel::Plain(t)
        } else if is_low(i) {
            VertexLabel::RootPlus(t)
        } else {
            VertexLabel::RootMinus(t)
        };
        parent_of.insert(i, label);
    }
    let roots: Vec<VertexLabel> = classes
        .fixed
        .iter()
        .flat_map(|&b| [VertexLabel::RootMinus(b), VertexLabel::RootPlus(b)])
        .collect();
    let mut built = grow_labeled(&roots, &parent_of, is_low);

    let mut slots = vec![LabeledSlot::Empty; m];
    let mut last_pos = 0;
    for &b in &classes.fixed {
        let pos = m + b - mu.at(b);
        assert!(
            (1..=m).contains(&pos) && pos > last_pos,
            "slot positions must increase within [1, m]"
        );
        last_pos = pos;
        let pair = LabeledTreePair {
            ell,
            minus: built.remove(&VertexLabel::RootMinus(b)).expect("minus root"),
            plus: built.remove(&VertexLabel::RootPlus(b)).expect("plus root"),
        };
        slots[pos - 1] = LabeledSlot::Pair(pair);
    }
    Ok(LabeledForest { m, ell, slots })
}

pub fn partition_to_forest(mu: &BoundedPartition, m: usize) -> Result<Forest> {
    Ok(partition_to_labeled_forest(mu, m)?.shape())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Minus,
    Plus,
}

struct ForestNode {
    side: Side,
    depth: usize,
    parent: Option<usize>,
    sibling: usize,
    pair: usize,
}

impl ForestNode {
    fn is_low(&self) -> bool {
        match self.side {
            Side::Minus => self.depth % 2 == 1,
            Side::Plus => self.depth.is_multiple_of(2),
        }
    }
}

fn push_nodes(
    tree: &PlaneTree,
    side: Side,
    pair: usize,
    depth: usize,
    parent: Option<usize>,
    sibling: usize,
    nodes: &mut Vec<ForestNode>,
) {
    let id = nodes.len();
    nodes.push(ForestNode {
        side,
        depth,
        parent,
        sibling,
        pair,
    });
    for (s, c) in tree.children().iter().enumerate() {
        push_nodes(c, side, pair, depth + 1, Some(id), s, nodes);
    }
}

/// Inverse of [`partition_to_forest`].
///
/// Every depth of every side holds a single label class, and labels of one
/// class must be assigned so that `mu` decreases: low-class vertices are
/// ranked by parent value descending, high-class vertices by parent value
/// ascending, siblings by position. Ranks are fixed top-down from the roots
/// (ordered by slot), then labels are handed out deepest level first.
pub fn forest_to_labeled(forest: &Forest) -> Result<(BoundedPartition, LabeledForest)> {
    let m = forest.m();
    let ell = forest.edges();
    if ell == 0 {
        return Err(Error::NotInDomain("a forest without edges encodes no partition".into()));
    }
    let mut pairs: Vec<(usize, TreePair)> = Vec::new();
    for (i, slot) in forest.slots().iter().enumerate() {
        if let Some(t) = slot.tree() {
            pairs.push((i + 1, cut(t)?));
        }
    }
    let mut nodes = Vec::new();
    let mut roots = Vec::new();
    for (p, (_, pair)) in pairs.iter().enumerate() {
        roots.push((nodes.len(), Side::Minus));
        push_nodes(&pair.minus, Side::Minus, p, 1, None, 0, &mut nodes);
        roots.push((nodes.len(), Side::Plus));
        push_nodes(&pair.plus, Side::Plus, p, 1, None, 0, &mut nodes);
    }
    let max_depth = nodes.iter().map(|n| n.depth).max().unwrap_or(1);

    // rank[v]: position of v in value-ascending order within its (side, depth)
    let mut rank = vec![0usize; nodes.len()];
    for &(id, _) in &roots {
        rank[id] = nodes[id].pair;
    }
    let mut groups: Vec<[Vec<usize>; 2]> = vec![[Vec::new(), Vec::new()]; max_depth + 1];
    for (id, n) in nodes.iter().enumerate() {
        if n.depth >= 2 {
            groups[n.depth][(n.side == Side::Plus) as usize].push(id);
        }
    }
    for depth_groups in groups.iter_mut().skip(2) {
        for group in depth_groups.iter_mut() {
            if group.is_empty() {
                continue;
            }
            let low = nodes[group[0]].is_low();
            let parent_rank = |id: usize| rank[nodes[id].parent.expect("non-root")];
            if low {
                group.sort_by_key(|&id| (Reverse(parent_rank(id)), nodes[id].sibling));
            } else {
                group.sort_by_key(|&id| (Reverse(parent_rank(id)), Reverse(nodes[id].sibling)));
            }
            for (r, &id) in group.iter().enumerate() {
                rank[id] = r;
            }
        }
    }

    let mut label = vec![0usize; nodes.len()];
    let mut next_low = 1;
    for d in (2..=max_depth).rev() {
        let side = if d % 2 == 1 { Side::Minus } else { Side::Plus };
        for &id in &groups[d][(side == Side::Plus) as usize] {
            label[id] = next_low;
            next_low += 1;
        }
    }
    let low_count = next_low - 1;
    let mut next_high = ell;
    for d in (2..=max_depth).rev() {
        let side = if d % 2 == 0 { Side::Minus } else { Side::Plus };
        for &id in groups[d][(side == Side::Plus) as usize].iter().rev() {
            label[id] = next_high;
            next_high -= 1;
        }
    }
    assert_eq!(
        next_high,
        low_count + pairs.len(),
        "non-root labels and fixed points partition [ell]"
    );
    for &(id, _) in &roots {
        label[id] = low_count + 1 + nodes[id].pair;
    }

    let mut parts = vec![0usize; ell];
    for (p, &(pos, _)) in pairs.iter().enumerate() {
        let b = low_count + 1 + p;
        parts[b - 1] = m + b - pos;
    }
    for (id, n) in nodes.iter().enumerate() {
        let Some(parent) = n.parent else { continue };
        let up = label[parent];
        parts[label[id] - 1] = if n.is_low() { up + m - 1 } else { up };
    }
    let mu = BoundedPartition::new(parts, ell + m - 1)?;

    let vertex_label = |id: usize| match (nodes[id].parent, nodes[id].side) {
        (Some(_), _) => VertexLabel::Plain(label[id]),
        (None, Side::Minus) => VertexLabel::RootMinus(label[id]),
        (None, Side::Plus) => VertexLabel::RootPlus(label[id]),
    };
    let mut slots = vec![LabeledSlot::Empty; m];
    for (p, (pos, pair)) in pairs.iter().enumerate() {
        let minus_root = roots[2 * p].0;
        let plus_root = roots[2 * p + 1].0;
        let mut cursor = minus_root;
        let minus = relabel(&pair.minus, &mut cursor, &vertex_label);
        cursor = plus_root;
        let plus = relabel(&pair.plus, &mut cursor, &vertex_label);
        slots[pos - 1] = LabeledSlot::Pair(LabeledTreePair { ell, minus, plus });
    }
    Ok((mu, LabeledForest { m, ell, slots }))
}

fn relabel(tree: &PlaneTree, cursor: &mut usize, label: &impl Fn(usize) -> VertexLabel) -> LabeledTree {
    let l = label(*cursor);
    *cursor += 1;
    LabeledTree {
        label: l,
        children: tree.children().iter().map(|c| relabel(c, cursor, label)).collect(),
    }
}

pub fn forest_to_partition(forest: &Forest) -> Result<BoundedPartition> {
    Ok(forest_to_labeled(forest)?.0)
}
