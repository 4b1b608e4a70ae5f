//! Connected undirected network topologies.
//!
//! Nodes are `0..n`. Every constructor returns a graph that is connected,
//! simple (no self loops, no parallel edges) and has its neighbor lists
//! sorted ascending, which fixes the summation order used by the consensus
//! updates.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::io::{BufRead, Write};
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};

/// An undirected, connected, simple graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list, validating every structural invariant.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSize(format!("need at least 2 nodes, got {n}")));
        }
        let mut set = BTreeSet::new();
        for (i, j) in edges {
            if i >= n || j >= n {
                return Err(Error::InvalidInput(format!("edge ({i},{j}) out of range for n={n}")));
            }
            if i == j {
                return Err(Error::InvalidInput(format!("self loop at node {i}")));
            }
            if !set.insert((i.min(j), i.max(j))) {
                return Err(Error::InvalidInput(format!("duplicate edge ({i},{j})")));
            }
        }
        let graph = Self::from_sorted_set(n, set);
        if !graph.is_connected() {
            return Err(Error::InvalidInput("graph is not connected".into()));
        }
        Ok(graph)
    }

    fn from_sorted_set(n: usize, set: BTreeSet<(usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for &(i, j) in &set {
            adjacency[i].push(j);
            adjacency[j].push(i);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Self { n, edges: set.into_iter().collect(), adjacency }
    }

    /// Star with node 0 as hub.
    pub fn star(n: usize) -> Result<Self> {
        check_size(n)?;
        Ok(Self::from_sorted_set(n, (1..n).map(|k| (0, k)).collect()))
    }

    pub fn path(n: usize) -> Result<Self> {
        check_size(n)?;
        Ok(Self::from_sorted_set(n, (0..n - 1).map(|k| (k, k + 1)).collect()))
    }

    pub fn complete(n: usize) -> Result<Self> {
        check_size(n)?;
        Ok(Self::from_sorted_set(n, complete_edges(n).collect()))
    }

    /// Random connected graph with exactly `m` edges.
    ///
    /// Starts from the complete graph and removes uniformly chosen edges. An
    /// edge whose removal would disconnect the graph is marked permanent and
    /// another one is drawn; bridges stay bridges as edges disappear, so the
    /// mark never has to be revisited.
    pub fn random_connected<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> Result<Self> {
        check_size(n)?;
        let max = n * (n - 1) / 2;
        if m < n - 1 || m > max {
            return Err(Error::InvalidSize(format!(
                "edge count {m} outside [{}, {max}] for n={n}",
                n - 1
            )));
        }
        let mut adjacency: Vec<BTreeSet<usize>> =
            (0..n).map(|i| (0..n).filter(|&j| j != i).collect()).collect();
        let mut candidates: Vec<(usize, usize)> = complete_edges(n).collect();
        let mut remaining = max;
        while remaining > m {
            // Cannot run dry: a connected graph with more than n-1 edges has a cycle edge.
            let pick = rng.random_range(0..candidates.len());
            let (i, j) = candidates.swap_remove(pick);
            adjacency[i].remove(&j);
            adjacency[j].remove(&i);
            // The graph was connected, so it stays connected iff i still reaches j.
            if reachable(&adjacency, i, j) {
                remaining -= 1;
            } else {
                adjacency[i].insert(j);
                adjacency[j].insert(i);
            }
        }
        let set = adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, nb)| nb.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
            .collect();
        Ok(Self::from_sorted_set(n, set))
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(i, j)` with `i < j`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbors of `i` in ascending order.
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n
    }

    /// Reads the edge-list text format: a header line `n m` followed by `m`
    /// lines `i j`. Blank lines and lines starting with `#` are ignored.
    pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let pair = parse_pair(line, idx + 1)?;
            if header.is_none() {
                header = Some(pair);
            } else {
                edges.push(pair);
            }
        }
        let (n, m) = header.ok_or(Error::Parse { line: 0, msg: "missing `n m` header".into() })?;
        if edges.len() != m {
            return Err(Error::Parse {
                line: 1,
                msg: format!("header announces {m} edges, found {}", edges.len()),
            });
        }
        Self::from_edges(n, edges)
    }

    pub fn write_edge_list<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "{} {}", self.n, self.edges.len())?;
        for (i, j) in &self.edges {
            writeln!(w, "{i} {j}")?;
        }
        Ok(())
    }
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(usize::from_str);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(Error::Parse { line: lineno, msg: format!("expected two integers, got `{line}`") }),
    }
}

fn check_size(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::InvalidSize(format!("need at least 2 nodes, got {n}")))
    } else {
        Ok(())
    }
}

fn complete_edges(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

/// Breadth-first search from `from` that stops as soon as `to` is reached.
fn reachable(adjacency: &[BTreeSet<usize>], from: usize, to: usize) -> bool {
    let mut seen = vec![false; adjacency.len()];
    let mut queue = VecDeque::from([from]);
    seen[from] = true;
    while let Some(u) = queue.pop_front() {
        for &v in &adjacency[u] {
            if v == to {
                return true;
            }
            if !seen[v] {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    false
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph(n={}, m={})", self.n, self.edges.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn assert_invariants(g: &Graph) {
        let n = g.node_count();
        let m = g.edge_count();
        assert!(g.is_connected());
        assert!(m >= n - 1 && m <= n * (n - 1) / 2);
        let mut total = 0;
        for i in 0..n {
            assert!(!g.neighbors(i).contains(&i));
            assert!(g.degree(i) >= 1 && g.degree(i) <= n - 1);
            assert!(g.neighbors(i).windows(2).all(|w| w[0] < w[1]));
            total += g.degree(i);
        }
        assert_eq!(total, 2 * m);
    }

    #[test]
    fn star_shapes() {
        let g = Graph::star(4).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (0, 3)]);
        assert_invariants(&g);
        assert_eq!(Graph::star(2).unwrap().edges(), &[(0, 1)]);
        assert!(matches!(Graph::star(1), Err(Error::InvalidSize(_))));
    }

    #[test]
    fn path_shapes() {
        assert_eq!(Graph::path(3).unwrap().edges(), &[(0, 1), (1, 2)]);
        assert_eq!(Graph::path(2).unwrap().edges(), &[(0, 1)]);
        assert!(Graph::path(0).is_err());
    }

    #[test]
    fn complete_shapes() {
        assert_eq!(Graph::complete(4).unwrap().edge_count(), 6);
        assert_eq!(Graph::complete(2).unwrap().edge_count(), 1);
        let k5 = Graph::complete(5).unwrap();
        assert!((0..5).all(|i| k5.degree(i) == 4));
        assert_invariants(&k5);
    }

    #[test]
    fn random_tree_and_full() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let tree = Graph::random_connected(5, 4, &mut rng).unwrap();
        assert_eq!(tree.edge_count(), 4);
        assert_invariants(&tree);
        let full = Graph::random_connected(5, 10, &mut rng).unwrap();
        assert_eq!(full, Graph::complete(5).unwrap());
    }

    #[test]
    fn random_seeded() {
        let a = Graph::random_connected(6, 8, &mut ChaCha8Rng::seed_from_u64(42)).unwrap();
        let b = Graph::random_connected(6, 8, &mut ChaCha8Rng::seed_from_u64(42)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.edge_count(), 8);
        assert_invariants(&a);
    }

    #[test]
    fn random_rejects_bad_m() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(Graph::random_connected(5, 3, &mut rng).is_err());
        assert!(Graph::random_connected(5, 11, &mut rng).is_err());
    }

    #[test]
    fn from_edges_validation() {
        assert!(Graph::from_edges(3, [(0, 1)]).is_err());
        assert!(Graph::from_edges(3, [(0, 1), (1, 0), (1, 2)]).is_err());
        assert!(Graph::from_edges(3, [(0, 0), (1, 2)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3), (1, 2)]).is_err());
        let g = Graph::from_edges(3, [(2, 1), (1, 0)]).unwrap();
        assert_eq!(g, Graph::path(3).unwrap());
    }

    #[test]
    fn edge_list_text() {
        let g = Graph::star(5).unwrap();
        let mut buf = Vec::new();
        g.write_edge_list(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf.clone()).unwrap().lines().next(), Some("5 4"));
        assert_eq!(Graph::read_edge_list(&buf[..]).unwrap(), g);

        let bad = "3 2\n0 1\n";
        assert!(matches!(Graph::read_edge_list(bad.as_bytes()), Err(Error::Parse { .. })));
        let junk = "3 2\n0 x\n1 2\n";
        assert!(Graph::read_edge_list(junk.as_bytes()).is_err());
    }
}
