//! Simple undirected graphs and their BFS metric (distances, eccentricities).
//!
//! Vertices are indexed `0..n-1` internally; any human-facing display is
//! 1-based to match the usual `v_1..v_n` labelling.

use std::collections::BTreeSet;
use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Sentinel distance for unreachable vertices.
pub const INF: usize = usize::MAX;

/// A finite simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// An edgeless graph on `n >= 1` vertices.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "graph must have at least one vertex");
        Graph {
            n,
            edges: BTreeSet::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts the undirected edge `{u, v}`. Duplicate insertions are no-ops.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexRange { vertex: w, n: self.n });
            }
        }
        let key = (u.min(v), u.max(v));
        if self.edges.insert(key) {
            self.adj[u].push(v);
            self.adj[v].push(u);
            self.adj[u].sort_unstable();
            self.adj[v].sort_unstable();
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    /// Hop distances from `source`; unreachable vertices get [`INF`].
    pub fn bfs_distances(&self, source: usize) -> Vec<usize> {
        assert!(source < self.n);
        let mut dist = vec![INF; self.n];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == INF {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).iter().all(|&d| d != INF)
    }

    /// Full metric structure; errors on disconnected input since
    /// eccentricities would be infinite.
    pub fn metric(&self) -> Result<Metric> {
        let mut dist = Vec::with_capacity(self.n);
        for u in 0..self.n {
            let row = self.bfs_distances(u);
            if row.iter().any(|&d| d == INF) {
                return Err(Error::Disconnected);
            }
            dist.push(row);
        }
        let ecc: Vec<usize> = dist.iter().map(|row| *row.iter().max().unwrap()).collect();
        let diam = *ecc.iter().max().unwrap();
        let rad = *ecc.iter().min().unwrap();
        Ok(Metric { dist, ecc, diam, rad })
    }

    /// True iff the graph is 2-colorable (ignores connectivity).
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![2u8; self.n];
        for start in 0..self.n {
            if color[start] != 2 {
                continue;
            }
            color[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if color[v] == 2 {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// BFS metric of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Metric {
    pub dist: Vec<Vec<usize>>,
    pub ecc: Vec<usize>,
    pub diam: usize,
    pub rad: usize,
}

impl Metric {
    pub fn n(&self) -> usize {
        self.ecc.len()
    }
}

/// Parses an edge-list file: optional leading "n" header line, then "u v"
/// pairs (0-based). Lines starting with '#' are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared_n: Option<usize> = None;
    let mut pairs: Vec<(usize, usize, usize)> = Vec::new(); // (u, v, line no)
    let mut max_vertex = 0usize;
    let mut saw_data = false;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            [one] if !saw_data && declared_n.is_none() => {
                let n: usize = one.parse().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("expected vertex count, got {one:?}"),
                })?;
                if n == 0 {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "vertex count must be at least 1".into(),
                    });
                }
                declared_n = Some(n);
            }
            [a, b] => {
                saw_data = true;
                let u: usize = a.parse().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("bad vertex id {a:?}"),
                })?;
                let v: usize = b.parse().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("bad vertex id {b:?}"),
                })?;
                max_vertex = max_vertex.max(u).max(v);
                pairs.push((u, v, line_no));
            }
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected \"u v\", got {line:?}"),
                })
            }
        }
    }
    if !saw_data && declared_n.is_none() {
        return Err(Error::Parse {
            line: 0,
            msg: "empty edge list".into(),
        });
    }
    let n = declared_n.unwrap_or(max_vertex + 1);
    let mut g = Graph::new(n);
    for (u, v, line_no) in pairs {
        g.add_edge(u, v).map_err(|e| match e {
            Error::SelfLoop(w) => Error::Parse {
                line: line_no,
                msg: format!("self-loop at vertex {w}"),
            },
            other => other,
        })?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{make_family, FamilySpec};

    #[test]
    fn parse_path3() {
        let g = parse_edge_list("3\n0 1\n1 2").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 2);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));
    }

    #[test]
    fn parse_rejects_self_loop() {
        assert!(matches!(
            parse_edge_list("2\n0 0"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn parse_star_with_header() {
        let g = parse_edge_list("5\n0 1\n0 2\n0 3\n0 4").unwrap();
        assert_eq!((g.n(), g.m()), (5, 4));
        assert_eq!(g.degree(0), 4);
    }

    #[test]
    fn parse_comments_and_no_header() {
        let g = parse_edge_list("# a triangle\n0 1\n1 2\n0 2\n").unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
    }

    #[test]
    fn bfs_path_endpoint() {
        let p4 = make_family(&FamilySpec::Path(4)).unwrap();
        assert_eq!(p4.bfs_distances(0), vec![0, 1, 2, 3]);
    }

    #[test]
    fn bfs_star_center() {
        let star = make_family(&FamilySpec::Star(5)).unwrap();
        assert_eq!(star.bfs_distances(0), vec![0, 1, 1, 1, 1]);
    }

    #[test]
    fn bfs_unreachable_sentinel() {
        let g = Graph::new(2);
        assert_eq!(g.bfs_distances(0), vec![0, INF]);
    }

    #[test]
    fn metric_p4() {
        let m = make_family(&FamilySpec::Path(4)).unwrap().metric().unwrap();
        assert_eq!(m.ecc, vec![3, 2, 2, 3]);
        assert_eq!((m.diam, m.rad), (3, 2));
    }

    #[test]
    fn metric_c6_self_centered() {
        let m = make_family(&FamilySpec::Cycle(6)).unwrap().metric().unwrap();
        assert_eq!(m.ecc, vec![3; 6]);
        assert_eq!((m.diam, m.rad), (3, 3));
    }

    #[test]
    fn metric_star() {
        let m = make_family(&FamilySpec::Star(5)).unwrap().metric().unwrap();
        assert_eq!(m.ecc, vec![1, 2, 2, 2, 2]);
        assert_eq!((m.diam, m.rad), (2, 1));
    }

    #[test]
    fn metric_rejects_disconnected() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(g.metric(), Err(Error::Disconnected)));
    }

    #[test]
    fn connectivity() {
        assert!(make_family(&FamilySpec::Complete(4)).unwrap().is_connected());
        assert!(!Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap().is_connected());
        assert!(Graph::new(1).is_connected());
    }
}
