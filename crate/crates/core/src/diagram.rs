//! Recursive p-Ferrer partitions and the box sets they describe.
//!
//! A 1-partition is a positive integer `λ`, describing the boxes
//! `(1), …, (λ)`. A p-partition is a nonempty weakly decreasing sequence
//! `λ_1 ≥ … ≥ λ_m` of (p−1)-partitions; row `i` contributes the boxes
//! `(η, i)` for every box `η` of `λ_i`. Coordinates are written
//! `(α_1, …, α_p)` with `α_p` the outermost row index.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;
use thiserror::Error;

use crate::binomial::binomial;
use crate::limits::Limits;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("invalid JSON: {0}")]
    InvalidJson(String),
    #[error("malformed partition at {path}: expected a positive integer or a nonempty array")]
    Malformed { path: String },
    #[error("empty partition at {path}")]
    EmptyPartition { path: String },
    #[error("non-positive leaf at {path}")]
    NonPositiveLeaf { path: String },
    #[error("non-uniform depth at {path}: expected {expected}, found {found}")]
    NonUniformDepth {
        path: String,
        expected: usize,
        found: usize,
    },
    #[error("not weakly decreasing at {path}: it exceeds its predecessor")]
    NotDecreasing { path: String },
    #[error("depth {depth} exceeds the limit {limit}")]
    TooDeep { depth: usize, limit: usize },
    #[error("{count} boxes exceed the limit {limit}")]
    TooManyBoxes { count: usize, limit: usize },
    #[error("depth mismatch: {left} vs {right}")]
    DepthMismatch { left: usize, right: usize },
    #[error("removing the last box would empty the diagram")]
    SingletonDiagram,
    #[error("box set is not a diagram: {reason}")]
    NotADiagram { reason: String },
}

/// A box `(α_1, …, α_p)` with positive coordinates.
///
/// The derived order is lexicographic in `(α_1, α_2, …, α_p)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cell(Vec<u32>);

impl Cell {
    /// Panics on an empty coordinate list or a zero coordinate.
    pub fn new(coords: Vec<u32>) -> Cell {
        assert!(!coords.is_empty(), "a box needs at least one coordinate");
        assert!(coords.iter().all(|&c| c >= 1), "box coordinates are positive");
        Cell(coords)
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    /// Index of the diagonal holding this box: `Σ α_i − p + 1`.
    pub fn diagonal(&self) -> usize {
        self.0.iter().map(|&c| c as usize).sum::<usize>() + 1 - self.0.len()
    }

    /// True if `other ≤ self` coordinatewise.
    pub fn dominates(&self, other: &Cell) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Node {
    Leaf(u32),
    Rows(Vec<Node>),
}

impl Node {
    fn depth(&self) -> usize {
        match self {
            Node::Leaf(_) => 1,
            Node::Rows(rows) => 1 + rows[0].depth(),
        }
    }

    fn is_empty(&self) -> bool {
        match self {
            Node::Leaf(v) => *v == 0,
            Node::Rows(rows) => rows.is_empty(),
        }
    }

    /// The recursive order `self ≥ other`.
    fn dominates(&self, other: &Node) -> bool {
        match (self, other) {
            (Node::Leaf(a), Node::Leaf(b)) => a >= b,
            (Node::Rows(a), Node::Rows(b)) => {
                a.len() >= b.len() && a.iter().zip(b).all(|(x, y)| x.dominates(y))
            }
            _ => false,
        }
    }

    fn count(&self) -> usize {
        match self {
            Node::Leaf(v) => *v as usize,
            Node::Rows(rows) => rows.iter().map(Node::count).sum(),
        }
    }

    fn collect(&self, suffix: &mut Vec<u32>, out: &mut BTreeSet<Cell>) {
        match self {
            Node::Leaf(v) => {
                for a in 1..=*v {
                    let mut coords = Vec::with_capacity(suffix.len() + 1);
                    coords.push(a);
                    coords.extend(suffix.iter().rev());
                    out.insert(Cell(coords));
                }
            }
            Node::Rows(rows) => {
                for (i, row) in rows.iter().enumerate() {
                    suffix.push(i as u32 + 1);
                    row.collect(suffix, out);
                    suffix.pop();
                }
            }
        }
    }

    fn diagonal_counts(&self) -> Vec<u64> {
        match self {
            Node::Leaf(v) => vec![1; *v as usize],
            Node::Rows(rows) => {
                let mut counts: Vec<u64> = Vec::new();
                for (shift, row) in rows.iter().enumerate() {
                    for (k, s) in row.diagonal_counts().into_iter().enumerate() {
                        if counts.len() <= k + shift {
                            counts.resize(k + shift + 1, 0);
                        }
                        counts[k + shift] += s;
                    }
                }
                counts
            }
        }
    }

    /// Removes the box whose coordinates, outermost first, are `path`.
    fn remove(&mut self, path: &[u32]) {
        match self {
            Node::Leaf(v) => {
                debug_assert_eq!(path, &[*v]);
                *v -= 1;
            }
            Node::Rows(rows) => {
                let idx = path[0] as usize - 1;
                rows[idx].remove(&path[1..]);
                if rows[idx].is_empty() {
                    debug_assert_eq!(idx + 1, rows.len());
                    rows.pop();
                }
            }
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Node::Leaf(v) => Value::from(*v),
            Node::Rows(rows) => Value::Array(rows.iter().map(Node::to_json).collect()),
        }
    }
}

fn child_path(path: &str, i: usize) -> String {
    format!("{path}[{i}]")
}

fn parse_node(value: &Value, path: &str) -> Result<Node, DiagramError> {
    match value {
        Value::Number(n) => {
            if let Some(v) = n.as_u64() {
                if v == 0 {
                    return Err(DiagramError::NonPositiveLeaf { path: path.into() });
                }
                u32::try_from(v)
                    .map(Node::Leaf)
                    .map_err(|_| DiagramError::Malformed { path: path.into() })
            } else if n.as_i64().is_some() || n.as_f64().is_some_and(|f| f <= 0.0) {
                Err(DiagramError::NonPositiveLeaf { path: path.into() })
            } else {
                Err(DiagramError::Malformed { path: path.into() })
            }
        }
        Value::Array(items) => {
            if items.is_empty() {
                return Err(DiagramError::EmptyPartition { path: path.into() });
            }
            let mut rows = Vec::with_capacity(items.len());
            for (i, item) in items.iter().enumerate() {
                rows.push(parse_node(item, &child_path(path, i))?);
            }
            let expected = rows[0].depth();
            for (i, row) in rows.iter().enumerate().skip(1) {
                let found = row.depth();
                if found != expected {
                    return Err(DiagramError::NonUniformDepth {
                        path: child_path(path, i),
                        expected,
                        found,
                    });
                }
            }
            for i in 1..rows.len() {
                if !rows[i - 1].dominates(&rows[i]) {
                    return Err(DiagramError::NotDecreasing {
                        path: child_path(path, i),
                    });
                }
            }
            Ok(Node::Rows(rows))
        }
        _ => Err(DiagramError::Malformed { path: path.into() }),
    }
}

/// Outcome of comparing two diagrams by box containment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Containment {
    Less,
    Equal,
    Greater,
    Incomparable,
}

/// Diagonal statistics `s(1), …, s(δ)` of a diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagonalProfile {
    /// `counts[k - 1]` is the number of boxes in diagonal `k`.
    pub counts: Vec<u64>,
    pub p: usize,
    /// Number of full diagonals.
    pub df: usize,
    /// Index of the last nonempty diagonal.
    pub delta: usize,
}

impl DiagonalProfile {
    /// `s(k)`, zero outside `1..=δ`.
    pub fn s(&self, k: usize) -> u64 {
        if k == 0 {
            0
        } else {
            self.counts.get(k - 1).copied().unwrap_or(0)
        }
    }

    /// Size of diagonal `k` of the whole orthant: `C(k + p − 2, p − 1)`.
    pub fn capacity(p: usize, k: usize) -> u64 {
        binomial((k + p - 2) as u64, (p - 1) as u64)
    }

    /// Counts of the diagonals beyond the full ones: `(s(df+1), …, s(δ))`.
    pub fn tail(&self) -> Vec<u64> {
        self.counts[self.df..].to_vec()
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    fn from_counts(p: usize, counts: Vec<u64>) -> DiagonalProfile {
        let df = counts
            .iter()
            .enumerate()
            .take_while(|(i, &s)| s == Self::capacity(p, i + 1))
            .count();
        let delta = counts.len();
        DiagonalProfile {
            counts,
            p,
            df,
            delta,
        }
    }
}

/// A validated p-Ferrer partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PFerrerPartition {
    root: Node,
}

impl PFerrerPartition {
    /// Validates a nested JSON tree under the default [`Limits`].
    pub fn from_json(value: &Value) -> Result<PFerrerPartition, DiagramError> {
        Self::from_json_with(value, &Limits::default())
    }

    /// Validates a nested JSON tree. Input must already be weakly decreasing;
    /// nothing is normalized.
    pub fn from_json_with(value: &Value, limits: &Limits) -> Result<PFerrerPartition, DiagramError> {
        let root = parse_node(value, "$")?;
        let depth = root.depth();
        if depth > limits.max_depth {
            return Err(DiagramError::TooDeep {
                depth,
                limit: limits.max_depth,
            });
        }
        let count = root.count();
        if count > limits.max_boxes {
            return Err(DiagramError::TooManyBoxes {
                count,
                limit: limits.max_boxes,
            });
        }
        Ok(PFerrerPartition { root })
    }

    pub fn parse(text: &str) -> Result<PFerrerPartition, DiagramError> {
        Self::parse_with(text, &Limits::default())
    }

    pub fn parse_with(text: &str, limits: &Limits) -> Result<PFerrerPartition, DiagramError> {
        let value: Value =
            serde_json::from_str(text).map_err(|e| DiagramError::InvalidJson(e.to_string()))?;
        Self::from_json_with(&value, limits)
    }

    /// The 1-partition `λ`.
    pub fn leaf(lambda: u32) -> PFerrerPartition {
        assert!(lambda >= 1, "a 1-Ferrer partition is a positive integer");
        PFerrerPartition {
            root: Node::Leaf(lambda),
        }
    }

    /// Builds the diagram with exactly the given boxes, all of depth `p`.
    pub fn from_cells<'a, I>(p: usize, cells: I) -> Result<PFerrerPartition, DiagramError>
    where
        I: IntoIterator<Item = &'a Cell>,
    {
        let set: BTreeSet<&Cell> = cells.into_iter().collect();
        if p == 0 {
            return Err(DiagramError::NotADiagram {
                reason: "depth must be positive".into(),
            });
        }
        if set.is_empty() {
            return Err(DiagramError::EmptyPartition { path: "$".into() });
        }
        for cell in &set {
            if cell.depth() != p {
                return Err(DiagramError::NotADiagram {
                    reason: format!("box {cell} does not have {p} coordinates"),
                });
            }
            for i in 0..p {
                if cell.0[i] > 1 {
                    let mut below = cell.0.clone();
                    below[i] -= 1;
                    if !set.contains(&Cell(below)) {
                        return Err(DiagramError::NotADiagram {
                            reason: format!("box {cell} is present but a box below it is not"),
                        });
                    }
                }
            }
        }
        let coords: Vec<&[u32]> = set.iter().map(|c| c.coords()).collect();
        Ok(PFerrerPartition {
            root: build_node(&coords),
        })
    }

    /// The diagram of all boxes in diagonals `1..=c` of `(ℕ*)^p`.
    pub fn full_diagram(p: usize, c: u32) -> PFerrerPartition {
        assert!(p >= 1 && c >= 1, "full diagrams need p, c ≥ 1");
        fn build(p: usize, c: u32) -> Node {
            if p == 1 {
                Node::Leaf(c)
            } else {
                Node::Rows((1..=c).rev().map(|k| build(p - 1, k)).collect())
            }
        }
        PFerrerPartition { root: build(p, c) }
    }

    /// The depth `p`.
    pub fn depth(&self) -> usize {
        self.root.depth()
    }

    /// The rows `λ_1, …, λ_m`, or `None` for a 1-partition.
    pub fn rows(&self) -> Option<Vec<PFerrerPartition>> {
        match &self.root {
            Node::Leaf(_) => None,
            Node::Rows(rows) => Some(
                rows.iter()
                    .map(|r| PFerrerPartition { root: r.clone() })
                    .collect(),
            ),
        }
    }

    /// The value `λ` of a 1-partition.
    pub fn leaf_value(&self) -> Option<u32> {
        match self.root {
            Node::Leaf(v) => Some(v),
            Node::Rows(_) => None,
        }
    }

    pub fn num_cells(&self) -> usize {
        self.root.count()
    }

    pub fn cells(&self) -> BTreeSet<Cell> {
        let mut out = BTreeSet::new();
        self.root.collect(&mut Vec::new(), &mut out);
        out
    }

    /// Compares by box containment.
    pub fn compare(&self, other: &PFerrerPartition) -> Result<Containment, DiagramError> {
        if self.depth() != other.depth() {
            return Err(DiagramError::DepthMismatch {
                left: self.depth(),
                right: other.depth(),
            });
        }
        let ge = self.root.dominates(&other.root);
        let le = other.root.dominates(&self.root);
        Ok(match (ge, le) {
            (true, true) => Containment::Equal,
            (true, false) => Containment::Greater,
            (false, true) => Containment::Less,
            (false, false) => Containment::Incomparable,
        })
    }

    pub fn diagonal_profile(&self) -> DiagonalProfile {
        DiagonalProfile::from_counts(self.depth(), self.root.diagonal_counts())
    }

    /// Boxes of diagonal `k`, in ascending box order.
    pub fn diagonal_cells(&self, k: usize) -> Vec<Cell> {
        self.cells().into_iter().filter(|c| c.diagonal() == k).collect()
    }

    /// Removes the lexicographically largest box of the last diagonal.
    ///
    /// Every last-diagonal box is maximal, so the remainder is again a
    /// diagram.
    pub fn remove_last_diagonal_box(&self) -> Result<(PFerrerPartition, Cell), DiagramError> {
        if self.num_cells() < 2 {
            return Err(DiagramError::SingletonDiagram);
        }
        let delta = self.diagonal_profile().delta;
        let removed = self
            .cells()
            .into_iter()
            .filter(|c| c.diagonal() == delta)
            .max()
            .expect("the last diagonal is nonempty");
        let outer_first: Vec<u32> = removed.coords().iter().rev().copied().collect();
        let mut root = self.root.clone();
        root.remove(&outer_first);
        Ok((PFerrerPartition { root }, removed))
    }

    pub fn to_json(&self) -> Value {
        self.root.to_json()
    }
}

/// Builds the tree for a nonempty downward-closed set of coordinate lists.
fn build_node(coords: &[&[u32]]) -> Node {
    let p = coords[0].len();
    if p == 1 {
        return Node::Leaf(coords.iter().map(|c| c[0]).max().unwrap_or(0));
    }
    let rows = coords.iter().map(|c| c[p - 1]).max().unwrap_or(0);
    Node::Rows(
        (1..=rows)
            .map(|i| {
                let slice: Vec<&[u32]> = coords
                    .iter()
                    .filter(|c| c[p - 1] == i)
                    .map(|c| &c[..p - 1])
                    .collect();
                build_node(&slice)
            })
            .collect(),
    )
}

impl fmt::Display for PFerrerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

impl PartialOrd for PFerrerPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.compare(other).ok()? {
            Containment::Less => Some(Ordering::Less),
            Containment::Equal => Some(Ordering::Equal),
            Containment::Greater => Some(Ordering::Greater),
            Containment::Incomparable => None,
        }
    }
}

impl Serialize for PFerrerPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PFerrerPartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let value = Value::deserialize(deserializer)?;
        PFerrerPartition::from_json(&value).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn part(v: Value) -> PFerrerPartition {
        PFerrerPartition::from_json(&v).unwrap()
    }

    fn ex4322() -> PFerrerPartition {
        part(json!([[4, 3, 2, 2], [3, 2, 1], [2], [2]]))
    }

    /// Independent count: walk every box of the bounding orthant and test
    /// membership directly against the nested lists.
    fn brute_cells(tree: &Value) -> BTreeSet<Cell> {
        fn member(tree: &Value, coords: &[u32]) -> bool {
            // coords outermost first
            match tree {
                Value::Number(n) => coords.len() == 1 && u64::from(coords[0]) <= n.as_u64().unwrap(),
                Value::Array(items) => {
                    let i = coords[0] as usize;
                    i >= 1 && i <= items.len() && member(&items[i - 1], &coords[1..])
                }
                _ => unreachable!(),
            }
        }
        fn depth(tree: &Value) -> usize {
            match tree {
                Value::Array(items) => 1 + depth(&items[0]),
                _ => 1,
            }
        }
        let p = depth(tree);
        let bound = 12u32;
        let mut out = BTreeSet::new();
        let total = (bound as usize).pow(p as u32);
        for idx in 0..total {
            let mut rest = idx;
            let mut coords = vec![0u32; p];
            for c in coords.iter_mut() {
                *c = (rest % bound as usize) as u32 + 1;
                rest /= bound as usize;
            }
            let outer_first: Vec<u32> = coords.iter().rev().copied().collect();
            if member(tree, &outer_first) {
                out.insert(Cell(coords));
            }
        }
        out
    }

    #[test]
    fn validates_paper_example() {
        let phi = ex4322();
        assert_eq!(phi.depth(), 3);
        assert_eq!(PFerrerPartition::parse("5").unwrap().depth(), 1);
    }

    #[test]
    fn rejects_increasing_rows() {
        let err = PFerrerPartition::from_json(&json!([[2], [3]])).unwrap_err();
        assert_eq!(err, DiagramError::NotDecreasing { path: "$[1]".into() });
        let err = PFerrerPartition::from_json(&json!([[1], [2]])).unwrap_err();
        assert_eq!(err, DiagramError::NotDecreasing { path: "$[1]".into() });
        let err = PFerrerPartition::from_json(&json!([[3, 1], [2, 2]])).unwrap_err();
        assert_eq!(err, DiagramError::NotDecreasing { path: "$[1]".into() });
        let err = PFerrerPartition::from_json(&json!([[2, 3]])).unwrap_err();
        assert_eq!(err, DiagramError::NotDecreasing { path: "$[0][1]".into() });
        // a shorter row may not precede a longer one
        let err = PFerrerPartition::from_json(&json!([[2], [2, 1]])).unwrap_err();
        assert_eq!(err, DiagramError::NotDecreasing { path: "$[1]".into() });
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(matches!(
            PFerrerPartition::from_json(&json!([[2], 1])),
            Err(DiagramError::NonUniformDepth { ref path, expected: 2, found: 1 }) if path == "$[1]"
        ));
        assert_eq!(
            PFerrerPartition::from_json(&json!([2, 0])).unwrap_err(),
            DiagramError::NonPositiveLeaf { path: "$[1]".into() }
        );
        assert_eq!(
            PFerrerPartition::from_json(&json!([[-1]])).unwrap_err(),
            DiagramError::NonPositiveLeaf { path: "$[0][0]".into() }
        );
        assert_eq!(
            PFerrerPartition::from_json(&json!([])).unwrap_err(),
            DiagramError::EmptyPartition { path: "$".into() }
        );
        assert!(matches!(
            PFerrerPartition::from_json(&json!(["a"])),
            Err(DiagramError::Malformed { .. })
        ));
        assert!(matches!(
            PFerrerPartition::parse("[[1]"),
            Err(DiagramError::InvalidJson(_))
        ));
    }

    #[test]
    fn enforces_limits() {
        let limits = Limits {
            max_depth: 2,
            ..Limits::default()
        };
        assert!(matches!(
            PFerrerPartition::from_json_with(&json!([[1]]), &limits),
            Err(DiagramError::TooDeep { depth: 3, limit: 2 })
        ));
        let limits = Limits {
            max_boxes: 5,
            ..Limits::default()
        };
        assert!(matches!(
            PFerrerPartition::from_json_with(&json!([3, 3]), &limits),
            Err(DiagramError::TooManyBoxes { count: 6, limit: 5 })
        ));
    }

    #[test]
    fn small_box_sets() {
        let cells: Vec<Vec<u32>> = PFerrerPartition::leaf(3)
            .cells()
            .into_iter()
            .map(|c| c.0)
            .collect();
        assert_eq!(cells, vec![vec![1], vec![2], vec![3]]);
        let cells: Vec<Vec<u32>> = part(json!([2, 1])).cells().into_iter().map(|c| c.0).collect();
        assert_eq!(cells, vec![vec![1, 1], vec![1, 2], vec![2, 1]]);
    }

    #[test]
    fn example_4322_has_21_boxes() {
        let tree = json!([[4, 3, 2, 2], [3, 2, 1], [2], [2]]);
        let brute = brute_cells(&tree);
        assert_eq!(brute.len(), 21);
        assert_eq!(ex4322().cells(), brute);
        assert_eq!(ex4322().num_cells(), 21);
    }

    #[test]
    fn compare_examples() {
        assert_eq!(
            PFerrerPartition::leaf(3).compare(&PFerrerPartition::leaf(2)),
            Ok(Containment::Greater)
        );
        assert_eq!(ex4322().compare(&ex4322()), Ok(Containment::Equal));
        assert_eq!(
            part(json!([[2], [2]])).compare(&part(json!([[3]]))),
            Ok(Containment::Incomparable)
        );
        assert_eq!(
            part(json!([2, 1])).compare(&part(json!([2, 2]))),
            Ok(Containment::Less)
        );
        assert_eq!(
            PFerrerPartition::leaf(3).compare(&part(json!([3]))),
            Err(DiagramError::DepthMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn profiles() {
        let prof = part(json!([2, 1])).diagonal_profile();
        assert_eq!((prof.counts.clone(), prof.df, prof.delta), (vec![1, 2], 2, 2));
        let prof = ex4322().diagonal_profile();
        assert_eq!((prof.counts.clone(), prof.df, prof.delta), (vec![1, 3, 6, 9, 2], 3, 5));
        let prof = part(json!([2, 2])).diagonal_profile();
        assert_eq!((prof.counts.clone(), prof.df, prof.delta), (vec![1, 2, 1], 2, 3));
        // single row of three: only the first diagonal is full
        let prof = part(json!([3])).diagonal_profile();
        assert_eq!((prof.counts.clone(), prof.df, prof.delta), (vec![1, 1, 1], 1, 3));
    }

    #[test]
    fn profile_matches_box_enumeration() {
        let tree = json!([[4, 3, 2, 2], [3, 2, 1], [2], [2]]);
        let brute = brute_cells(&tree);
        let mut counts = vec![0u64; 5];
        for c in &brute {
            counts[c.diagonal() - 1] += 1;
        }
        assert_eq!(ex4322().diagonal_profile().counts, counts);
        // fullness against C(k+1, 2)
        assert_eq!(counts[..3], [1, 3, 6]);
        assert!(counts[3] < 10);
    }

    #[test]
    fn full_diagrams() {
        assert_eq!(PFerrerPartition::full_diagram(1, 3), PFerrerPartition::leaf(3));
        assert_eq!(PFerrerPartition::full_diagram(2, 2), part(json!([2, 1])));
        let full = PFerrerPartition::full_diagram(3, 3);
        assert_eq!(full, part(json!([[3, 2, 1], [2, 1], [1]])));
        assert_eq!(full.num_cells(), 10);
        let prof = full.diagonal_profile();
        assert_eq!((prof.df, prof.delta), (3, 3));
        assert!(full.cells().iter().all(|c| c.coords().iter().sum::<u32>() <= 5));
    }

    #[test]
    fn removal_examples() {
        let (rest, removed) = part(json!([2, 2])).remove_last_diagonal_box().unwrap();
        assert_eq!(removed.coords(), &[2, 2]);
        assert_eq!(rest, part(json!([2, 1])));

        let (once, first) = ex4322().remove_last_diagonal_box().unwrap();
        assert_eq!(first.coords(), &[2, 4, 1]);
        assert_eq!(once, part(json!([[4, 3, 2, 1], [3, 2, 1], [2], [2]])));
        let (twice, second) = once.remove_last_diagonal_box().unwrap();
        assert_eq!(second.coords(), &[2, 1, 4]);
        assert_eq!(twice, part(json!([[4, 3, 2, 1], [3, 2, 1], [2], [1]])));

        let (rest, removed) = PFerrerPartition::full_diagram(2, 2)
            .remove_last_diagonal_box()
            .unwrap();
        assert_eq!(removed.coords(), &[2, 1]);
        assert_eq!(rest, part(json!([1, 1])));
        assert_eq!(rest.diagonal_profile().delta, 2);

        let (rest, _) = PFerrerPartition::leaf(2).remove_last_diagonal_box().unwrap();
        assert_eq!(rest, PFerrerPartition::leaf(1));
        assert_eq!(
            PFerrerPartition::leaf(1).remove_last_diagonal_box(),
            Err(DiagramError::SingletonDiagram)
        );
        assert_eq!(
            part(json!([[1]])).remove_last_diagonal_box(),
            Err(DiagramError::SingletonDiagram)
        );
    }

    #[test]
    fn removal_drops_empty_rows() {
        let (rest, removed) = part(json!([[2, 1], [1]])).remove_last_diagonal_box().unwrap();
        assert_eq!(removed.coords(), &[2, 1, 1]);
        assert_eq!(rest, part(json!([[1, 1], [1]])));
        let (rest, _) = part(json!([1, 1])).remove_last_diagonal_box().unwrap();
        assert_eq!(rest, part(json!([1])));
    }

    #[test]
    fn cells_round_trip() {
        let phi = ex4322();
        let rebuilt = PFerrerPartition::from_cells(3, &phi.cells()).unwrap();
        assert_eq!(rebuilt, phi);
        let hole = [Cell::new(vec![1, 1]), Cell::new(vec![1, 3])];
        assert!(matches!(
            PFerrerPartition::from_cells(2, &hole),
            Err(DiagramError::NotADiagram { .. })
        ));
    }

    #[test]
    fn serde_round_trip() {
        let phi = ex4322();
        let text = serde_json::to_string(&phi).unwrap();
        assert_eq!(text, "[[4,3,2,2],[3,2,1],[2],[2]]");
        let back: PFerrerPartition = serde_json::from_str(&text).unwrap();
        assert_eq!(back, phi);
        assert!(serde_json::from_str::<PFerrerPartition>("[[1],[2]]").is_err());
    }
}
