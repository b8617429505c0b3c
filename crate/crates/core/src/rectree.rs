//! The recursion tree `T_n` of MergeSort, materialized node by node.
//!
//! Each node carries the length of the subarray passed to that call. A node
//! of size `m ≥ 2` has children of sizes `⌊m/2⌋` (left) and `⌈m/2⌉` (right);
//! nodes of size 1 are leaves. Nodes are stored in pre-order, so
//! [`RecTree::root`] is always `NodeId(0)`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::analytics;
use crate::{CompCount, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub size: u64,
    pub level: u32,
    pub left: Option<NodeId>,
    pub right: Option<NodeId>,
}

impl Node {
    pub fn is_leaf(&self) -> bool {
        self.left.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecTree {
    nodes: Vec<Node>,
    depth: u32,
}

/// Node sizes found on one level of the tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelProfile {
    pub level: u32,
    /// Sizes in left-to-right order.
    pub node_sizes: Vec<u64>,
    pub internal_count: u64,
    pub leaf_count: u64,
}

impl LevelProfile {
    /// `Σ (size − 1)` over the internal nodes of this level.
    pub fn worst_comps(&self) -> CompCount {
        self.node_sizes.iter().filter(|&&s| s >= 2).map(|s| s - 1).sum()
    }

    /// `max − min` of the sizes on this level.
    pub fn spread(&self) -> u64 {
        let max = self.node_sizes.iter().max().copied().unwrap_or(0);
        let min = self.node_sizes.iter().min().copied().unwrap_or(0);
        max - min
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub leaves: u64,
    pub nodes: u64,
    pub leaves_by_level: BTreeMap<u32, u64>,
}

impl RecTree {
    pub fn build(n: u64) -> Result<RecTree> {
        if n == 0 {
            return Err(Error::Domain("recursion tree needs n ≥ 1"));
        }
        let capacity = usize::try_from(2 * n - 1).map_err(|_| Error::Domain("tree too large"))?;
        let mut tree = RecTree {
            nodes: Vec::with_capacity(capacity),
            depth: 0,
        };
        tree.grow(n, 0);
        Ok(tree)
    }

    fn grow(&mut self, size: u64, level: u32) -> NodeId {
        let id = NodeId(self.nodes.len());
        self.depth = self.depth.max(level);
        self.nodes.push(Node {
            size,
            level,
            left: None,
            right: None,
        });
        if size >= 2 {
            let left = self.grow(size / 2, level + 1);
            let right = self.grow(size - size / 2, level + 1);
            let node = &mut self.nodes[id.0];
            node.left = Some(left);
            node.right = Some(right);
        }
        id
    }

    pub fn root(&self) -> NodeId {
        NodeId(0)
    }

    pub fn size(&self) -> u64 {
        self.nodes[0].size
    }

    pub fn node(&self, id: NodeId) -> Option<&Node> {
        self.nodes.get(id.0)
    }

    /// All nodes in pre-order, paired with their ids.
    pub fn iter(&self) -> impl Iterator<Item = (NodeId, &Node)> + '_ {
        self.nodes.iter().enumerate().map(|(i, n)| (NodeId(i), n))
    }

    pub fn node_count(&self) -> u64 {
        self.nodes.len() as u64
    }

    /// Index of the deepest non-empty level.
    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn level_profile(&self, level: u32) -> Result<LevelProfile> {
        if level > self.depth {
            return Err(Error::LevelOutOfRange {
                level,
                depth: self.depth,
            });
        }
        // Pre-order visits each level left to right.
        let on_level = self.nodes.iter().filter(|n| n.level == level);
        let mut profile = LevelProfile {
            level,
            node_sizes: Vec::new(),
            internal_count: 0,
            leaf_count: 0,
        };
        for node in on_level {
            profile.node_sizes.push(node.size);
            if node.is_leaf() {
                profile.leaf_count += 1;
            } else {
                profile.internal_count += 1;
            }
        }
        Ok(profile)
    }

    /// Profiles of every level `0..=depth`, built in one pass.
    pub fn level_profiles(&self) -> Vec<LevelProfile> {
        let mut profiles: Vec<LevelProfile> = (0..=self.depth)
            .map(|level| LevelProfile {
                level,
                node_sizes: Vec::new(),
                internal_count: 0,
                leaf_count: 0,
            })
            .collect();
        for node in &self.nodes {
            let p = &mut profiles[node.level as usize];
            p.node_sizes.push(node.size);
            if node.is_leaf() {
                p.leaf_count += 1;
            } else {
                p.internal_count += 1;
            }
        }
        profiles
    }

    /// Worst-case comparisons of all merges at `level`: `Σ (size − 1)` over its internal nodes.
    pub fn worst_comps_at_level(&self, level: u32) -> CompCount {
        self.nodes
            .iter()
            .filter(|n| n.level == level && !n.is_leaf())
            .map(|n| n.size - 1)
            .sum()
    }

    /// Sum of sizes over `cut`, after checking that every root-to-leaf path meets it exactly once.
    pub fn cut_sum(&self, cut: &[NodeId]) -> Result<u64> {
        let mut marked = vec![false; self.nodes.len()];
        for id in cut {
            let slot = marked
                .get_mut(id.0)
                .ok_or(Error::InvalidCut("node id outside the tree"))?;
            if *slot {
                return Err(Error::InvalidCut("node listed twice"));
            }
            *slot = true;
        }
        // (node, cut nodes met on the path so far)
        let mut stack = vec![(self.root(), 0u32)];
        while let Some((id, seen)) = stack.pop() {
            let node = &self.nodes[id.0];
            let seen = seen + u32::from(marked[id.0]);
            if seen > 1 {
                return Err(Error::InvalidCut("a branch meets the cut more than once"));
            }
            match (node.left, node.right) {
                (Some(l), Some(r)) => {
                    stack.push((r, seen));
                    stack.push((l, seen));
                }
                _ if seen == 0 => {
                    return Err(Error::InvalidCut("a branch misses the cut"));
                }
                _ => {}
            }
        }
        Ok(cut.iter().map(|id| self.nodes[id.0].size).sum())
    }

    /// Every node on `level` plus every leaf above it.
    pub fn frontier_cut(&self, level: u32) -> Vec<NodeId> {
        self.iter()
            .filter(|(_, n)| n.level == level || (n.level < level && n.is_leaf()))
            .map(|(id, _)| id)
            .collect()
    }

    pub fn leaves(&self) -> Vec<NodeId> {
        self.iter()
            .filter(|(_, n)| n.is_leaf())
            .map(|(id, _)| id)
            .collect()
    }

    /// Sum of sizes over every node of the tree.
    pub fn size_sum(&self) -> u64 {
        self.nodes.iter().map(|n| n.size).sum()
    }

    pub fn census(&self) -> Census {
        let mut leaves_by_level = BTreeMap::new();
        for node in self.nodes.iter().filter(|n| n.is_leaf()) {
            *leaves_by_level.entry(node.level).or_insert(0) += 1;
        }
        Census {
            leaves: leaves_by_level.values().sum(),
            nodes: self.node_count(),
            leaves_by_level,
        }
    }

    /// Census of the last two levels read off the tree, in the shape of
    /// [`analytics::level_census`]. For `n = 1` the root is the only leaf.
    pub fn last_levels(&self) -> analytics::LevelCensus {
        let h = self.depth;
        let count = |level: u32, leaf: bool| {
            self.nodes
                .iter()
                .filter(|n| n.level == level && n.is_leaf() == leaf)
                .count() as u64
        };
        if h == 0 {
            return analytics::LevelCensus {
                leaves_h1: 0,
                internals_h1: 0,
                leaves_h: 1,
            };
        }
        analytics::LevelCensus {
            leaves_h1: count(h - 1, true),
            internals_h1: count(h - 1, false),
            leaves_h: count(h, true),
        }
    }

    /// Plain-text dump: one `level,size,leaf|internal` line per node in
    /// pre-order, then a `leaves_h1=..,internals_h1=..,leaves_h=..` footer.
    pub fn dump(&self) -> Dump<'_> {
        Dump(self)
    }
}

pub struct Dump<'a>(&'a RecTree);

impl fmt::Display for Dump<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for node in &self.0.nodes {
            let kind = if node.is_leaf() { "leaf" } else { "internal" };
            writeln!(f, "{},{},{}", node.level, node.size, kind)?;
        }
        let c = self.0.last_levels();
        writeln!(
            f,
            "leaves_h1={},internals_h1={},leaves_h={}",
            c.leaves_h1, c.internals_h1, c.leaves_h
        )
    }
}
