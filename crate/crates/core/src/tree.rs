//! Rooted plane trees, tree pairs and ordered forests, with their
//! balanced-parenthesis text forms.
//!
//! A tree is written as `(` followed by its children and `)`, so a bare root
//! is `()` and a root with one leaf is `(())`. A pair is `minus|plus`. A
//! forest is a `;`-separated list of slots where `_` is the empty slot.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::counting::{catalan, forest_count};
use crate::error::{Error, Result};
use crate::partition::Cap;

/// A nonempty rooted tree with ordered children.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PlaneTree {
    children: Vec<PlaneTree>,
}

impl PlaneTree {
    pub fn leaf() -> Self {
        PlaneTree::default()
    }

    pub fn with_children(children: Vec<PlaneTree>) -> Self {
        PlaneTree { children }
    }

    pub fn children(&self) -> &[PlaneTree] {
        &self.children
    }

    pub fn edges(&self) -> usize {
        self.children.iter().map(|c| c.edges() + 1).sum()
    }

    pub fn vertices(&self) -> usize {
        self.edges() + 1
    }

    pub fn height(&self) -> usize {
        self.children.iter().map(|c| c.height() + 1).max().unwrap_or(0)
    }

    fn write_parens(&self, out: &mut String) {
        out.push('(');
        for c in &self.children {
            c.write_parens(out);
        }
        out.push(')');
    }
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write_parens(&mut s);
        f.write_str(&s)
    }
}

fn parse_tree_at(bytes: &[u8], pos: &mut usize) -> Result<PlaneTree> {
    if bytes.get(*pos) != Some(&b'(') {
        return Err(Error::Parse(format!("expected '(' at offset {pos}")));
    }
    *pos += 1;
    let mut children = Vec::new();
    loop {
        match bytes.get(*pos) {
            Some(b'(') => children.push(parse_tree_at(bytes, pos)?),
            Some(b')') => {
                *pos += 1;
                return Ok(PlaneTree { children });
            }
            Some(c) => {
                return Err(Error::Parse(format!(
                    "unexpected {:?} at offset {pos}",
                    *c as char
                )))
            }
            None => return Err(Error::Parse("unbalanced parentheses".into())),
        }
    }
}

impl FromStr for PlaneTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: Vec<u8> = s.bytes().filter(|b| !b.is_ascii_whitespace()).collect();
        let mut pos = 0;
        let tree = parse_tree_at(&compact, &mut pos)?;
        if pos != compact.len() {
            return Err(Error::Parse(format!("trailing input after tree in {s:?}")));
        }
        Ok(tree)
    }
}

/// `(T^-, T^+)`: two nonempty trees.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreePair {
    pub minus: PlaneTree,
    pub plus: PlaneTree,
}

impl TreePair {
    pub fn new(minus: PlaneTree, plus: PlaneTree) -> Self {
        TreePair { minus, plus }
    }

    pub fn edges(&self) -> usize {
        self.minus.edges() + self.plus.edges()
    }
}

impl fmt::Display for TreePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.minus, self.plus)
    }
}

impl FromStr for TreePair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("tree pair {s:?} needs the form minus|plus")))?;
        Ok(TreePair::new(a.parse()?, b.parse()?))
    }
}

/// Splits off the rightmost branch of the root: the plus tree is the last
/// child subtree, the minus tree is what remains.
pub fn cut(tree: &PlaneTree) -> Result<TreePair> {
    let mut minus = tree.clone();
    let plus = minus
        .children
        .pop()
        .ok_or_else(|| Error::InvalidTree("a tree without edges cannot be cut".into()))?;
    Ok(TreePair { minus, plus })
}

/// Hangs `plus` as the new rightmost child of the root of `minus`.
pub fn attach(pair: &TreePair) -> PlaneTree {
    let mut tree = pair.minus.clone();
    tree.children.push(pair.plus.clone());
    tree
}

/// Memoized generator for all plane trees with a given number of edges.
#[derive(Default)]
pub struct TreeCatalog {
    by_edges: HashMap<usize, Vec<PlaneTree>>,
}

impl TreeCatalog {
    pub fn new() -> Self {
        Self::default()
    }

    /// All trees with `n` edges, in a fixed deterministic order. A tree with
    /// `n` edges is a first child subtree with `i` edges plus a tree with
    /// `n - 1 - i` edges holding the remaining children.
    pub fn trees(&mut self, n: usize) -> &[PlaneTree] {
        if !self.by_edges.contains_key(&n) {
            let built = if n == 0 {
                vec![PlaneTree::leaf()]
            } else {
                let mut out = Vec::new();
                for i in 0..n {
                    let firsts = self.trees(i).to_vec();
                    let rests = self.trees(n - 1 - i).to_vec();
                    for first in &firsts {
                        for rest in &rests {
                            let mut children = Vec::with_capacity(rest.children.len() + 1);
                            children.push(first.clone());
                            children.extend(rest.children.iter().cloned());
                            out.push(PlaneTree { children });
                        }
                    }
                }
                out
            };
            self.by_edges.insert(n, built);
        }
        &self.by_edges[&n]
    }
}

/// All plane trees with `n_edges` edges; there are `c_{n_edges}` of them.
pub fn enumerate_trees(n_edges: usize, cap: Cap) -> Result<Vec<PlaneTree>> {
    cap.check(&catalan(n_edges as u64), "trees")?;
    Ok(TreeCatalog::new().trees(n_edges).to_vec())
}

/// All pairs with `total_edges` edges in total; there are
/// `c_{total_edges + 1}` of them.
pub fn enumerate_pairs(total_edges: usize, cap: Cap) -> Result<Vec<TreePair>> {
    cap.check(&catalan(total_edges as u64 + 1), "tree pairs")?;
    let mut catalog = TreeCatalog::new();
    let mut out = Vec::new();
    for i in 0..=total_edges {
        let minus = catalog.trees(i).to_vec();
        let plus = catalog.trees(total_edges - i).to_vec();
        for a in &minus {
            for b in &plus {
                out.push(TreePair::new(a.clone(), b.clone()));
            }
        }
    }
    Ok(out)
}

/// One position of a forest. A slot without edges is always `Empty`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ForestSlot {
    Empty,
    Tree(PlaneTree),
}

impl ForestSlot {
    pub fn edges(&self) -> usize {
        match self {
            ForestSlot::Empty => 0,
            ForestSlot::Tree(t) => t.edges(),
        }
    }

    /// Canonical slot for a tree: bare roots become `Empty`.
    pub fn from_tree(tree: PlaneTree) -> Self {
        if tree.children.is_empty() {
            ForestSlot::Empty
        } else {
            ForestSlot::Tree(tree)
        }
    }

    pub fn tree(&self) -> Option<&PlaneTree> {
        match self {
            ForestSlot::Empty => None,
            ForestSlot::Tree(t) => Some(t),
        }
    }
}

impl fmt::Display for ForestSlot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ForestSlot::Empty => f.write_str("_"),
            ForestSlot::Tree(t) => t.fmt(f),
        }
    }
}

/// An ordered sequence of `m >= 1` slots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Forest {
    slots: Vec<ForestSlot>,
}

impl Forest {
    /// Builds a forest, normalizing bare-root trees to empty slots.
    pub fn new(slots: Vec<ForestSlot>) -> Result<Self> {
        if slots.is_empty() {
            return Err(Error::InvalidTree("a forest needs at least one slot".into()));
        }
        let slots = slots
            .into_iter()
            .map(|s| match s {
                ForestSlot::Tree(t) => ForestSlot::from_tree(t),
                e => e,
            })
            .collect();
        Ok(Forest { slots })
    }

    pub fn slots(&self) -> &[ForestSlot] {
        &self.slots
    }

    pub fn m(&self) -> usize {
        self.slots.len()
    }

    pub fn edges(&self) -> usize {
        self.slots.iter().map(ForestSlot::edges).sum()
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.slots.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(";"))
    }
}

impl FromStr for Forest {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let slots = s
            .split(';')
            .map(|part| {
                let part = part.trim();
                if part == "_" {
                    Ok(ForestSlot::Empty)
                } else {
                    part.parse::<PlaneTree>().map(ForestSlot::from_tree)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Forest::new(slots)
    }
}

/// All forests of `m` slots with `ell` total edges; there are `b_{ell,m-1}`
/// of them for `ell >= 1`.
pub fn enumerate_forests(m: usize, ell: usize, cap: Cap) -> Result<Vec<Forest>> {
    if m == 0 {
        return Err(Error::Precondition("a forest needs at least one slot".into()));
    }
    let expected: BigInt = forest_count(m as u64, ell as u64);
    cap.check(&expected, "forests")?;
    let mut catalog = TreeCatalog::new();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(m);
    fill_slots(&mut catalog, m, ell, &mut current, &mut out);
    Ok(out)
}

fn fill_slots(
    catalog: &mut TreeCatalog,
    remaining_slots: usize,
    remaining_edges: usize,
    current: &mut Vec<ForestSlot>,
    out: &mut Vec<Forest>,
) {
    if remaining_slots == 0 {
        if remaining_edges == 0 {
            out.push(Forest {
                slots: current.clone(),
            });
        }
        return;
    }
    for e in 0..=remaining_edges {
        let options: Vec<ForestSlot> = if e == 0 {
            vec![ForestSlot::Empty]
        } else {
            catalog.trees(e).iter().cloned().map(ForestSlot::Tree).collect()
        };
        for slot in options {
            current.push(slot);
            fill_slots(catalog, remaining_slots - 1, remaining_edges - e, current, out);
            current.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    const FIG2_TREE: &str = "((()()(())())(())(()(()())()))";

    #[test]
    fn parse_and_display() {
        let t: PlaneTree = "(()(()))".parse().unwrap();
        assert_eq!(t.edges(), 3);
        assert_eq!(t.to_string(), "(()(()))");
        assert_eq!(t.height(), 2);
        assert!("(()".parse::<PlaneTree>().is_err());
        assert!("()()".parse::<PlaneTree>().is_err());
        assert!("(x)".parse::<PlaneTree>().is_err());
        assert_eq!(" ( ( ) ) ".parse::<PlaneTree>().unwrap().edges(), 1);
    }

    #[test]
    fn cut_figure_two() {
        let tree: PlaneTree = FIG2_TREE.parse().unwrap();
        let pair = cut(&tree).unwrap();
        assert_eq!(pair.minus.to_string(), "((()()(())())(()))");
        assert_eq!(pair.plus.to_string(), "(()(()())())");
        assert_eq!(pair.edges() + 1, tree.edges());
        assert_eq!(attach(&pair), tree);
    }

    #[test]
    fn cut_single_edge() {
        let pair = cut(&"(())".parse().unwrap()).unwrap();
        assert_eq!(pair, TreePair::new(PlaneTree::leaf(), PlaneTree::leaf()));
        assert_eq!(attach(&pair).to_string(), "(())");
        assert!(cut(&PlaneTree::leaf()).is_err());
    }

    #[test]
    fn cut_attach_round_trips() {
        let cap = Cap::default();
        for n in 1..=7 {
            for t in enumerate_trees(n, cap).unwrap() {
                assert_eq!(attach(&cut(&t).unwrap()), t);
            }
        }
        for n in 0..=6 {
            for p in enumerate_pairs(n, cap).unwrap() {
                assert_eq!(cut(&attach(&p)).unwrap(), p);
            }
        }
    }

    #[test]
    fn tree_counts_are_catalan() {
        let cap = Cap::default();
        assert_eq!(enumerate_trees(0, cap).unwrap(), vec![PlaneTree::leaf()]);
        assert_eq!(enumerate_trees(3, cap).unwrap().len(), 5);
        assert_eq!(enumerate_trees(8, cap).unwrap().len(), 1430);
        for n in 0..=9 {
            let trees = enumerate_trees(n, cap).unwrap();
            let distinct: HashSet<_> = trees.iter().collect();
            assert_eq!(distinct.len(), trees.len());
            assert_eq!(BigInt::from(trees.len()), catalan(n as u64));
            assert!(trees.iter().all(|t| t.edges() == n));
        }
        for n in 0..=7 {
            assert_eq!(
                BigInt::from(enumerate_pairs(n, cap).unwrap().len()),
                catalan(n as u64 + 1)
            );
        }
    }

    #[test]
    fn forest_counts_are_ballot() {
        let cap = Cap::default();
        assert_eq!(enumerate_forests(2, 2, cap).unwrap().len(), 5);
        assert_eq!(enumerate_forests(1, 4, cap).unwrap().len(), 14);
        let empty = enumerate_forests(3, 0, cap).unwrap();
        assert_eq!(empty.len(), 1);
        assert_eq!(empty[0].to_string(), "_;_;_");
        for m in 1..=4 {
            for ell in 1..=6 {
                let forests = enumerate_forests(m, ell, cap).unwrap();
                let distinct: HashSet<_> = forests.iter().collect();
                assert_eq!(distinct.len(), forests.len());
                assert_eq!(
                    BigInt::from(forests.len()),
                    crate::counting::ballot(ell as u64, m as u64 - 1)
                );
            }
        }
    }

    #[test]
    fn forest_text_form() {
        let f: Forest = "(()());_;(())".parse().unwrap();
        assert_eq!(f.m(), 3);
        assert_eq!(f.edges(), 3);
        assert_eq!(f.to_string(), "(()());_;(())");
        let bare: Forest = "();(())".parse().unwrap();
        assert_eq!(bare.slots()[0], ForestSlot::Empty);
        assert!("".parse::<Forest>().is_err());
    }

    #[test]
    fn pair_text_form() {
        let p: TreePair = "(())|()".parse().unwrap();
        assert_eq!(p.edges(), 1);
        assert_eq!(p.to_string(), "(())|()");
        assert!("(())".parse::<TreePair>().is_err());
    }

    #[test]
    fn caps_apply() {
        assert!(enumerate_trees(12, Cap(1000)).is_err());
        assert!(enumerate_forests(3, 8, Cap(1000)).is_err());
    }
}
