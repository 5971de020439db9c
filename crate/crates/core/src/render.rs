//! Output formats: Young diagrams, Graphviz DOT, and the JSON wire schema.
//!
//! DOT output stores sibling order in an explicit `ordinal` edge attribute,
//! because Graphviz does not promise to keep edges in source order.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bijection::{LabeledForest, LabeledSlot, LabeledTree, LabeledTreePair, VertexLabel};
use crate::error::{Error, Result};
use crate::partition::BoundedPartition;
use crate::tree::{Forest, ForestSlot, PlaneTree, TreePair};

/// Row `i` holds `mu_i` cells, first part on top.
pub fn young_ascii(mu: &BoundedPartition) -> String {
    let mut out = String::new();
    for &p in mu.parts() {
        out.push_str(&"[]".repeat(p));
        out.push('\n');
    }
    out
}

struct DotWriter {
    out: String,
    next: usize,
}

impl DotWriter {
    fn new(name: &str, attrs: &[(&str, String)]) -> Self {
        let mut out = format!("digraph {name} {{\n  ordering=out;\n");
        for (k, v) in attrs {
            let _ = writeln!(out, "  {k}={v};");
        }
        DotWriter { out, next: 0 }
    }

    fn node(&mut self, indent: &str, label: &str) -> usize {
        let id = self.next;
        self.next += 1;
        let _ = writeln!(self.out, "{indent}n{id} [label=\"{label}\"];");
        id
    }

    fn edge(&mut self, indent: &str, from: usize, to: usize, ordinal: usize) {
        let _ = writeln!(self.out, "{indent}n{from} -> n{to} [ordinal={ordinal}];");
    }

    fn plain(&mut self, indent: &str, tree: &PlaneTree) -> usize {
        let id = self.node(indent, "");
        for (i, c) in tree.children().iter().enumerate() {
            let cid = self.plain(indent, c);
            self.edge(indent, id, cid, i + 1);
        }
        id
    }

    fn labeled(&mut self, indent: &str, tree: &LabeledTree) -> usize {
        let id = self.node(indent, &tree.label.to_string());
        for (i, c) in tree.children.iter().enumerate() {
            let cid = self.labeled(indent, c);
            self.edge(indent, id, cid, i + 1);
        }
        id
    }

    fn finish(mut self) -> String {
        self.out.push_str("}\n");
        self.out
    }
}

pub fn tree_to_dot(tree: &PlaneTree) -> String {
    let mut w = DotWriter::new("tree", &[("edges", tree.edges().to_string())]);
    w.out.push_str("  node [shape=point];\n");
    w.plain("  ", tree);
    w.finish()
}

pub fn pair_to_dot(pair: &TreePair) -> String {
    let mut w = DotWriter::new("pair", &[("ell", (pair.edges() + 1).to_string())]);
    w.out.push_str("  node [shape=point];\n");
    w.plain("  ", &pair.minus);
    w.plain("  ", &pair.plus);
    w.finish()
}

pub fn labeled_pair_to_dot(pair: &LabeledTreePair) -> String {
    let mut w = DotWriter::new("labeled_pair", &[("ell", pair.ell.to_string())]);
    w.labeled("  ", &pair.minus);
    w.labeled("  ", &pair.plus);
    w.finish()
}

pub fn forest_to_dot(forest: &Forest) -> String {
    let mut w = DotWriter::new(
        "forest",
        &[("m", forest.m().to_string()), ("edges", forest.edges().to_string())],
    );
    w.out.push_str("  node [shape=point];\n");
    for (i, slot) in forest.slots().iter().enumerate() {
        let _ = writeln!(w.out, "  subgraph cluster_{} {{\n    label=\"slot {}\";", i + 1, i + 1);
        match slot {
            ForestSlot::Empty => {
                w.node("    ", "_");
            }
            ForestSlot::Tree(t) => {
                w.plain("    ", t);
            }
        }
        w.out.push_str("  }\n");
    }
    w.finish()
}

pub fn labeled_forest_to_dot(forest: &LabeledForest) -> String {
    let mut w = DotWriter::new(
        "labeled_forest",
        &[("m", forest.m.to_string()), ("ell", forest.ell.to_string())],
    );
    for (i, slot) in forest.slots.iter().enumerate() {
        let _ = writeln!(w.out, "  subgraph cluster_{} {{\n    label=\"slot {}\";", i + 1, i + 1);
        match slot {
            LabeledSlot::Empty => {
                w.node("    ", "_");
            }
            LabeledSlot::Pair(p) => {
                w.labeled("    ", &p.minus);
                w.labeled("    ", &p.plus);
            }
        }
        w.out.push_str("  }\n");
    }
    w.finish()
}

fn unquote(s: &str) -> Result<&str> {
    s.strip_prefix('"')
        .and_then(|s| s.strip_suffix('"'))
        .ok_or_else(|| Error::Parse(format!("expected a quoted string, got {s:?}")))
}

/// Splits `key=value, key=value` inside a bracketed attribute list.
fn attributes(s: &str) -> BTreeMap<&str, &str> {
    s.split(',')
        .filter_map(|kv| kv.split_once('='))
        .map(|(k, v)| (k.trim(), v.trim()))
        .collect()
}

fn node_id(s: &str) -> Result<usize> {
    s.trim()
        .strip_prefix('n')
        .and_then(|d| d.parse().ok())
        .ok_or_else(|| Error::Parse(format!("bad node id {s:?}")))
}

/// Reads back the output of [`labeled_pair_to_dot`].
pub fn labeled_pair_from_dot(src: &str) -> Result<LabeledTreePair> {
    let mut ell = None;
    let mut labels: BTreeMap<usize, VertexLabel> = BTreeMap::new();
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    for raw in src.lines() {
        let line = raw.trim().trim_end_matches(';').trim();
        if line.is_empty() || line.starts_with("digraph") || line == "}" || line.starts_with("//") {
            continue;
        }
        let (head, attrs) = match line.split_once('[') {
            Some((h, rest)) => (
                h.trim(),
                attributes(rest.trim_end().strip_suffix(']').ok_or_else(|| {
                    Error::Parse(format!("unterminated attribute list in {raw:?}"))
                })?),
            ),
            None => (line, BTreeMap::new()),
        };
        if let Some((from, to)) = head.split_once("->") {
            let ordinal = attrs
                .get("ordinal")
                .and_then(|o| o.parse().ok())
                .ok_or_else(|| Error::Parse(format!("edge without ordinal: {raw:?}")))?;
            edges.push((node_id(from)?, node_id(to)?, ordinal));
        } else if let Some(label) = attrs.get("label") {
            labels.insert(node_id(head)?, unquote(label)?.parse()?);
        } else if let Some(v) = head.strip_prefix("ell=") {
            ell = Some(v.trim().parse().map_err(|_| Error::Parse(format!("bad ell in {raw:?}")))?);
        }
    }
    let ell = ell.ok_or_else(|| Error::Parse("missing ell graph attribute".into()))?;

    let mut children: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    let mut has_parent = vec![false; labels.keys().next_back().map_or(0, |&k| k + 1)];
    for &(from, to, ordinal) in &edges {
        if !labels.contains_key(&from) || !labels.contains_key(&to) {
            return Err(Error::Parse(format!("edge n{from} -> n{to} names an undeclared node")));
        }
        if std::mem::replace(&mut has_parent[to], true) {
            return Err(Error::InvalidTree(format!("node n{to} has two parents")));
        }
        children.entry(from).or_default().push((ordinal, to));
    }
    for list in children.values_mut() {
        list.sort_unstable();
        if list.iter().enumerate().any(|(i, &(o, _))| o != i + 1) {
            return Err(Error::InvalidTree("sibling ordinals must be 1, 2, ...".into()));
        }
    }

    fn build(
        id: usize,
        labels: &BTreeMap<usize, VertexLabel>,
        children: &BTreeMap<usize, Vec<(usize, usize)>>,
        depth: usize,
    ) -> Result<LabeledTree> {
        if depth > labels.len() {
            return Err(Error::InvalidTree("cycle in DOT edges".into()));
        }
        let kids = children
            .get(&id)
            .map(|v| v.iter().map(|&(_, c)| build(c, labels, children, depth + 1)).collect())
            .transpose()?
            .unwrap_or_default();
        Ok(LabeledTree {
            label: labels[&id],
            children: kids,
        })
    }

    let roots: Vec<usize> = labels.keys().copied().filter(|&id| !has_parent[id]).collect();
    let root_of = |want: fn(&VertexLabel) -> bool| -> Result<usize> {
        let found: Vec<usize> = roots.iter().copied().filter(|r| want(&labels[r])).collect();
        match found[..] {
            [r] => Ok(r),
            _ => Err(Error::InvalidTree(format!("expected one root of each sign, roots {roots:?}"))),
        }
    };
    if roots.len() != 2 {
        return Err(Error::InvalidTree(format!("expected two roots, found {}", roots.len())));
    }
    let minus = build(
        root_of(|l| matches!(l, VertexLabel::RootMinus(_)))?,
        &labels,
        &children,
        0,
    )?;
    let plus = build(
        root_of(|l| matches!(l, VertexLabel::RootPlus(_)))?,
        &labels,
        &children,
        0,
    )?;
    Ok(LabeledTreePair { ell, minus, plus })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionJson {
    pub parts: Vec<usize>,
    pub bound: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default)]
    pub children: Vec<TreeJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairJson {
    pub minus: TreeJson,
    pub plus: TreeJson,
}

/// `null` slots are empty trees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForestJson {
    pub slots: Vec<Option<TreeJson>>,
}

impl From<&BoundedPartition> for PartitionJson {
    fn from(mu: &BoundedPartition) -> Self {
        PartitionJson {
            parts: mu.parts().to_vec(),
            bound: mu.bound(),
        }
    }
}

impl TryFrom<PartitionJson> for BoundedPartition {
    type Error = Error;

    fn try_from(p: PartitionJson) -> Result<Self> {
        BoundedPartition::new(p.parts, p.bound)
    }
}

impl From<&PlaneTree> for TreeJson {
    fn from(t: &PlaneTree) -> Self {
        TreeJson {
            label: None,
            children: t.children().iter().map(TreeJson::from).collect(),
        }
    }
}

impl From<&LabeledTree> for TreeJson {
    fn from(t: &LabeledTree) -> Self {
        TreeJson {
            label: Some(t.label.to_string()),
            children: t.children.iter().map(TreeJson::from).collect(),
        }
    }
}

impl TreeJson {
    pub fn shape(&self) -> PlaneTree {
        PlaneTree::with_children(self.children.iter().map(TreeJson::shape).collect())
    }

    pub fn to_labeled(&self) -> Result<LabeledTree> {
        let label = self
            .label
            .as_deref()
            .ok_or_else(|| Error::Parse("tree vertex without a label".into()))?
            .parse()?;
        Ok(LabeledTree {
            label,
            children: self
                .children
                .iter()
                .map(TreeJson::to_labeled)
                .collect::<Result<_>>()?,
        })
    }

    fn is_labeled(&self) -> bool {
        self.label.is_some()
    }
}

impl From<&TreePair> for PairJson {
    fn from(p: &TreePair) -> Self {
        PairJson {
            minus: (&p.minus).into(),
            plus: (&p.plus).into(),
        }
    }
}

impl From<&LabeledTreePair> for PairJson {
    fn from(p: &LabeledTreePair) -> Self {
        PairJson {
            minus: (&p.minus).into(),
            plus: (&p.plus).into(),
        }
    }
}

impl PairJson {
    pub fn shape(&self) -> TreePair {
        TreePair::new(self.minus.shape(), self.plus.shape())
    }

    /// The labeled pair, if every vertex carries a label.
    pub fn to_labeled(&self) -> Result<Option<LabeledTreePair>> {
        if !self.minus.is_labeled() {
            return Ok(None);
        }
        let minus = self.minus.to_labeled()?;
        let plus = self.plus.to_labeled()?;
        let ell = minus.shape().vertices() + plus.shape().vertices() - 1;
        Ok(Some(LabeledTreePair { ell, minus, plus }))
    }
}

impl From<&Forest> for ForestJson {
    fn from(f: &Forest) -> Self {
        ForestJson {
            slots: f.slots().iter().map(|s| s.tree().map(TreeJson::from)).collect(),
        }
    }
}

impl From<&LabeledForest> for ForestJson {
    /// Each slot is the attached tree: root `b-` with `b+` as its last child.
    fn from(f: &LabeledForest) -> Self {
        ForestJson {
            slots: f
                .slots
                .iter()
                .map(|s| match s {
                    LabeledSlot::Empty => None,
                    LabeledSlot::Pair(p) => {
                        let mut root = TreeJson::from(&p.minus);
                        root.children.push((&p.plus).into());
                        Some(root)
                    }
                })
                .collect(),
        }
    }
}

impl ForestJson {
    pub fn shape(&self) -> Result<Forest> {
        Forest::new(
            self.slots
                .iter()
                .map(|s| match s {
                    None => ForestSlot::Empty,
                    Some(t) => ForestSlot::from_tree(t.shape()),
                })
                .collect(),
        )
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("wire types always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijection::{partition_to_labeled_forest, partition_to_pair};
    use crate::family::{grow_omega_family, grow_square_family};
    use crate::partition::{Cap, SquarePartition};
    use crate::tree::enumerate_forests;

    fn bp(parts: &[usize], k: usize) -> BoundedPartition {
        BoundedPartition::new(parts.to_vec(), k).unwrap()
    }

    #[test]
    fn young_rows_are_left_aligned() {
        assert_eq!(young_ascii(&bp(&[3, 1, 1], 3)), "[][][]\n[]\n[]\n");
    }

    #[test]
    fn labeled_dot_round_trips() {
        let one = SquarePartition::new(vec![1]).unwrap();
        for ell in 1..=7 {
            for mu in grow_square_family(&one, ell, Cap::default()).unwrap().iter() {
                let pair = partition_to_pair(&mu).unwrap();
                let dot = labeled_pair_to_dot(&pair);
                assert_eq!(labeled_pair_from_dot(&dot).unwrap(), pair, "{dot}");
            }
        }
    }

    #[test]
    fn dot_uses_ordinals() {
        let pair = partition_to_pair(&bp(&[2, 2, 1, 1], 4)).unwrap();
        let dot = labeled_pair_to_dot(&pair);
        assert!(dot.contains("ell=4;"));
        assert!(dot.contains("n0 [label=\"2-\"];"));
        assert!(dot.contains("[ordinal=2]"));
        // Shuffled edge lines still parse to the same pair.
        let mut lines: Vec<&str> = dot.lines().collect();
        let body = lines.len() - 1;
        lines[1..body].reverse();
        assert_eq!(labeled_pair_from_dot(&lines.join("\n")).unwrap(), pair);
    }

    #[test]
    fn dot_parse_errors() {
        assert!(labeled_pair_from_dot("digraph x {\n}\n").is_err());
        let bad = "digraph x {\n ell=2;\n n0 [label=\"1-\"];\n n1 [label=\"1+\"];\n n2 [label=\"2\"];\n n0 -> n2;\n}";
        assert!(labeled_pair_from_dot(bad).is_err());
    }

    #[test]
    fn json_round_trips() {
        let mu = bp(&[2, 2, 1, 1], 4);
        let json = to_json(&PartitionJson::from(&mu));
        let back: PartitionJson = serde_json::from_str(&json).unwrap();
        assert_eq!(BoundedPartition::try_from(back).unwrap(), mu);

        let pair = partition_to_pair(&mu).unwrap();
        let pj: PairJson = serde_json::from_str(&to_json(&PairJson::from(&pair))).unwrap();
        assert_eq!(pj.to_labeled().unwrap(), Some(pair.clone()));
        let shape = PairJson::from(&pair.shape());
        assert!(!to_json(&shape).contains("label"));
        assert_eq!(shape.to_labeled().unwrap(), None);

        for f in enumerate_forests(3, 3, Cap::default()).unwrap() {
            let fj: ForestJson = serde_json::from_str(&to_json(&ForestJson::from(&f))).unwrap();
            assert_eq!(fj.shape().unwrap(), f);
        }
    }

    #[test]
    fn labeled_forest_json_matches_shape() {
        for m in 1..=3 {
            for mu in grow_omega_family(m, 4, Cap::default()).unwrap().iter() {
                let lf = partition_to_labeled_forest(&mu, m).unwrap();
                let fj: ForestJson = serde_json::from_str(&to_json(&ForestJson::from(&lf))).unwrap();
                assert_eq!(fj.shape().unwrap(), lf.shape());
                let dot = labeled_forest_to_dot(&lf);
                assert_eq!(dot.matches("subgraph cluster_").count(), m);
            }
        }
    }
}
