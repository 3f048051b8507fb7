//! Named graph families and isomorphism-free enumeration of trees and
//! small connected graphs.

use std::collections::HashSet;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const TREE_CAP: usize = 14;
pub const GRAPH_CAP: usize = 7;
pub const GRAPH_CAP_OVERRIDE: usize = 8;

/// Unlabeled tree counts for n = 1..12 (generation sanity anchors).
pub const TREE_COUNTS: [usize; 12] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551];

/// Connected unlabeled simple graph counts for n = 1..7.
pub const CONNECTED_COUNTS: [usize; 7] = [1, 1, 2, 6, 21, 112, 853];

#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    Star(usize),
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    CompleteMultipartite(Vec<usize>),
    Crown(usize),
    RandomConnected { n: usize, edge_prob: f64, seed: u64 },
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Mini-grammar: `star:5`, `path:4`, `cycle:6`, `complete:5`,
    /// `complete_bipartite:2,3`, `multipartite:2,2,2`, `crown:3`,
    /// `random:30,0.2,7`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::FamilySpec(s.to_string());
        let (name, params) = s.split_once(':').ok_or_else(bad)?;
        let ints = || -> Result<Vec<usize>> {
            params
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                .collect()
        };
        match name {
            "star" | "path" | "cycle" | "complete" | "crown" => {
                let v = ints()?;
                if v.len() != 1 {
                    return Err(bad());
                }
                Ok(match name {
                    "star" => FamilySpec::Star(v[0]),
                    "path" => FamilySpec::Path(v[0]),
                    "cycle" => FamilySpec::Cycle(v[0]),
                    "complete" => FamilySpec::Complete(v[0]),
                    _ => FamilySpec::Crown(v[0]),
                })
            }
            "complete_bipartite" | "bipartite" => {
                let v = ints()?;
                if v.len() != 2 {
                    return Err(bad());
                }
                Ok(FamilySpec::CompleteBipartite(v[0], v[1]))
            }
            "multipartite" | "complete_multipartite" => Ok(FamilySpec::CompleteMultipartite(ints()?)),
            "random" => {
                let parts: Vec<&str> = params.split(',').map(str::trim).collect();
                if parts.len() != 3 {
                    return Err(bad());
                }
                Ok(FamilySpec::RandomConnected {
                    n: parts[0].parse().map_err(|_| bad())?,
                    edge_prob: parts[1].parse().map_err(|_| bad())?,
                    seed: parts[2].parse().map_err(|_| bad())?,
                })
            }
            _ => Err(bad()),
        }
    }
}

/// Builds the named family with its documented canonical labelling
/// (star: vertex 0 is the center; bipartite: part A is 0..p-1; crown:
/// vertex i of part A is matched to vertex i of part B).
pub fn make_family(spec: &FamilySpec) -> Result<Graph> {
    let positive = |n: usize, what: &str| -> Result<()> {
        if n == 0 {
            Err(Error::FamilySpec(format!("{what} must be positive")))
        } else {
            Ok(())
        }
    };
    match spec {
        FamilySpec::Star(n) => {
            positive(*n, "star order")?;
            Graph::from_edges(*n, (1..*n).map(|v| (0, v)))
        }
        FamilySpec::Path(n) => {
            positive(*n, "path order")?;
            Graph::from_edges(*n, (1..*n).map(|v| (v - 1, v)))
        }
        FamilySpec::Cycle(n) => {
            if *n < 3 {
                return Err(Error::FamilySpec("cycle needs at least 3 vertices".into()));
            }
            Graph::from_edges(*n, (0..*n).map(|v| (v, (v + 1) % n)))
        }
        FamilySpec::Complete(n) => {
            positive(*n, "complete order")?;
            Graph::from_edges(*n, (0..*n).flat_map(|u| (u + 1..*n).map(move |v| (u, v))))
        }
        FamilySpec::CompleteBipartite(p, q) => {
            positive(*p, "part size")?;
            positive(*q, "part size")?;
            Graph::from_edges(p + q, (0..*p).flat_map(|u| (*p..p + q).map(move |v| (u, v))))
        }
        FamilySpec::CompleteMultipartite(parts) => {
            if parts.len() < 2 {
                return Err(Error::FamilySpec("multipartite needs at least 2 parts".into()));
            }
            for &p in parts {
                positive(p, "part size")?;
            }
            let n: usize = parts.iter().sum();
            let mut part_of = Vec::with_capacity(n);
            for (i, &p) in parts.iter().enumerate() {
                part_of.extend(std::iter::repeat(i).take(p));
            }
            Graph::from_edges(
                n,
                (0..n).flat_map(|u| {
                    let part_of = &part_of;
                    (u + 1..n).filter(move |&v| part_of[u] != part_of[v]).map(move |v| (u, v))
                }),
            )
        }
        FamilySpec::Crown(n) => {
            if *n < 2 {
                return Err(Error::FamilySpec(
                    "crown needs part size at least 2 (crown:1 is disconnected)".into(),
                ));
            }
            Graph::from_edges(
                2 * n,
                (0..*n).flat_map(|u| (0..*n).filter(move |&v| v != u).map(move |v| (u, n + v))),
            )
        }
        FamilySpec::RandomConnected { n, edge_prob, seed } => {
            random_connected_graph(*n, *edge_prob, *seed)
        }
    }
}

/// Erdős–Rényi sample, rejection-resampled until connected; deterministic
/// per seed.
pub fn random_connected_graph(n: usize, edge_prob: f64, seed: u64) -> Result<Graph> {
    if !(edge_prob > 0.0 && edge_prob <= 1.0) {
        return Err(Error::FamilySpec(format!("edge probability {edge_prob} out of (0, 1]")));
    }
    if n == 0 {
        return Err(Error::FamilySpec("order must be positive".into()));
    }
    const MAX_ATTEMPTS: usize = 1000;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen::<f64>() < edge_prob {
                    g.add_edge(u, v)?;
                }
            }
        }
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::SamplingExhausted(MAX_ATTEMPTS))
}

/// Canonical certificate: equal bytes iff isomorphic. Colors are refined
/// from degrees by neighbor-color multisets; the remaining permutations
/// (those respecting the ordered color classes) are searched for the
/// lexicographically minimal adjacency bitstring.
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    let n = g.n();
    if n == 1 {
        return vec![1];
    }
    if g.m() == n - 1 && g.is_connected() {
        return tree_certificate(g);
    }
    let classes = refine_classes(g);
    let mut best: Option<Vec<u8>> = None;
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    // bits[i*(i-1)/2 + j] = adjacency of (perm[i], perm[j]), j < i
    let mut bits = vec![0u8; n * (n - 1) / 2];
    search_min(g, &classes, &mut perm, &mut used, &mut bits, &mut best);
    let bitstring = best.unwrap();
    let mut cert = Vec::with_capacity(1 + bitstring.len().div_ceil(8));
    cert.push(n as u8);
    for chunk in bitstring.chunks(8) {
        let mut byte = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            byte |= b << k;
        }
        cert.push(byte);
    }
    cert
}

/// Fast tree certificate: centroid-rooted AHU encoding. The leading 0xff
/// byte keeps tree certificates disjoint from the bitstring ones (whose
/// first byte is the order, <= the enumeration caps).
fn tree_certificate(g: &Graph) -> Vec<u8> {
    let n = g.n();
    // peel leaves to find the one or two centers
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for &u in g.neighbors(v) {
                if !removed[u] {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    let centers: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    fn encode(g: &Graph, v: usize, parent: Option<usize>) -> Vec<u8> {
        let mut children: Vec<Vec<u8>> = g
            .neighbors(v)
            .iter()
            .filter(|&&u| Some(u) != parent)
            .map(|&u| encode(g, u, Some(v)))
            .collect();
        children.sort();
        let mut out = vec![b'('];
        for c in children {
            out.extend(c);
        }
        out.push(b')');
        out
    }
    let enc = centers
        .iter()
        .map(|&c| encode(g, c, None))
        .min()
        .expect("a tree has a center");
    let mut cert = Vec::with_capacity(enc.len() + 2);
    cert.push(0xff);
    cert.push(n as u8);
    cert.extend(enc);
    cert
}

/// Ordered vertex classes from iterated color refinement. Class order is
/// determined only by sorted signatures, so it is isomorphism-invariant.
fn refine_classes(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nc: Vec<usize> = g.neighbors(v).iter().map(|&u| color[u]).collect();
                nc.sort_unstable();
                (color[v], nc)
            })
            .collect();
        let mut uniq: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
        uniq.sort();
        uniq.dedup();
        let next: Vec<usize> = (0..n)
            .map(|v| uniq.binary_search(&&sigs[v]).unwrap())
            .collect();
        let stable = {
            let old_count = color.iter().collect::<HashSet<_>>().len();
            uniq.len() == old_count
        };
        color = next;
        if stable {
            break;
        }
    }
    let num_colors = color.iter().max().unwrap() + 1;
    let mut classes = vec![Vec::new(); num_colors];
    for v in 0..n {
        classes[color[v]].push(v);
    }
    classes.retain(|c| !c.is_empty());
    classes
}

/// Depth-first search for the lexicographically minimal adjacency
/// bitstring over class-respecting permutations. The full prefix is
/// compared against the incumbent at every node, so pruning stays valid
/// when the incumbent changes mid-search.
fn search_min(
    g: &Graph,
    classes: &[Vec<usize>],
    perm: &mut Vec<usize>,
    used: &mut Vec<bool>,
    bits: &mut [u8],
    best: &mut Option<Vec<u8>>,
) {
    use std::cmp::Ordering;
    let n = g.n();
    let i = perm.len();
    if i == n {
        if best.as_ref().is_none_or(|b| &bits[..] < &b[..]) {
            *best = Some(bits.to_vec());
        }
        return;
    }
    let mut offset = 0;
    let class = classes
        .iter()
        .find(|c| {
            if i < offset + c.len() {
                true
            } else {
                offset += c.len();
                false
            }
        })
        .unwrap();
    let base = i * i.saturating_sub(1) / 2;
    for &v in class {
        if used[v] {
            continue;
        }
        for (j, &u) in perm.iter().enumerate() {
            bits[base + j] = u8::from(g.has_edge(v, u));
        }
        if let Some(b) = best.as_ref() {
            if bits[..base + i].cmp(&b[..base + i]) == Ordering::Greater {
                continue;
            }
        }
        used[v] = true;
        perm.push(v);
        search_min(g, classes, perm, used, bits, best);
        perm.pop();
        used[v] = false;
    }
}

/// Prüfer decode: the labeled tree on n >= 2 vertices for a sequence of
/// length n-2 over 0..n.
fn prufer_decode(seq: &[usize], n: usize) -> Graph {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut g = Graph::new(n);
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    for &s in seq {
        let std::cmp::Reverse(leaf) = leaves.pop().unwrap();
        g.add_edge(leaf, s).unwrap();
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.push(std::cmp::Reverse(s));
        }
    }
    let std::cmp::Reverse(a) = leaves.pop().unwrap();
    let std::cmp::Reverse(b) = leaves.pop().unwrap();
    g.add_edge(a, b).unwrap();
    g
}

/// All pairwise non-isomorphic trees on n vertices. Prüfer enumeration
/// with canonical dedup up to n = 9, canonical level sequences beyond.
pub fn all_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > TREE_CAP {
        return Err(Error::EnumerationCap { n, cap: TREE_CAP });
    }
    if n == 1 {
        return Ok(vec![Graph::new(1)]);
    }
    if n == 2 {
        return Ok(vec![Graph::from_edges(2, [(0, 1)])?]);
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    if n <= 9 {
        let mut seq = vec![0usize; n - 2];
        loop {
            let t = prufer_decode(&seq, n);
            if seen.insert(canonical_form(&t)) {
                out.push(t);
            }
            // odometer over [0, n)^(n-2)
            let mut pos = 0;
            loop {
                if pos == seq.len() {
                    return Ok(out);
                }
                seq[pos] += 1;
                if seq[pos] < n {
                    break;
                }
                seq[pos] = 0;
                pos += 1;
            }
        }
    }
    for levels in rooted_level_sequences(n) {
        let t = tree_from_levels(&levels);
        if seen.insert(canonical_form(&t)) {
            out.push(t);
        }
    }
    Ok(out)
}

/// Canonical level sequences of all rooted trees on n vertices
/// (Beyer-Hedetniemi successor rule), root at level 1.
fn rooted_level_sequences(n: usize) -> Vec<Vec<usize>> {
    let mut seq: Vec<usize> = (1..=n).collect(); // the path
    let mut out = Vec::new();
    loop {
        out.push(seq.clone());
        // rightmost entry greater than 2
        let Some(p) = (0..n).rev().find(|&i| seq[i] > 2) else {
            return out;
        };
        let q = (0..p).rev().find(|&i| seq[i] == seq[p] - 1).unwrap();
        for i in p..n {
            seq[i] = seq[i - (p - q)];
        }
    }
}

fn tree_from_levels(levels: &[usize]) -> Graph {
    let n = levels.len();
    let mut g = Graph::new(n);
    for i in 1..n {
        let parent = (0..i).rev().find(|&j| levels[j] == levels[i] - 1).unwrap();
        g.add_edge(parent, i).unwrap();
    }
    g
}

/// All pairwise non-isomorphic connected graphs on n vertices, by vertex
/// augmentation with canonical dedup. Capped at n = 7 unless `allow_n8`.
pub fn all_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    all_connected_graphs_capped(n, false)
}

pub fn all_connected_graphs_capped(n: usize, allow_n8: bool) -> Result<Vec<Graph>> {
    let cap = if allow_n8 { GRAPH_CAP_OVERRIDE } else { GRAPH_CAP };
    if n == 0 || n > cap {
        return Err(Error::EnumerationCap { n, cap });
    }
    let mut level = vec![Graph::new(1)];
    for k in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            // attach a new vertex to every nonempty subset of the old ones
            for mask in 1u32..(1 << (k - 1)) {
                let mut h = Graph::new(k);
                for (u, v) in g.edges() {
                    h.add_edge(u, v).unwrap();
                }
                for u in 0..k - 1 {
                    if mask >> u & 1 == 1 {
                        h.add_edge(u, k - 1).unwrap();
                    }
                }
                if seen.insert(canonical_form(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::to_graph6;

    #[test]
    fn family_edge_counts() {
        assert_eq!(make_family(&FamilySpec::CompleteBipartite(3, 4)).unwrap().m(), 12);
        assert_eq!(make_family(&FamilySpec::Crown(4)).unwrap().m(), 12); // n² − n
        assert_eq!(make_family(&FamilySpec::Star(7)).unwrap().m(), 6);
        assert_eq!(make_family(&FamilySpec::Complete(5)).unwrap().m(), 10);
    }

    #[test]
    fn star_of_one_is_k1() {
        let g = make_family(&FamilySpec::Star(1)).unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
    }

    #[test]
    fn crown3_is_c6() {
        let crown = make_family(&FamilySpec::Crown(3)).unwrap();
        let c6 = make_family(&FamilySpec::Cycle(6)).unwrap();
        assert_eq!(canonical_form(&crown), canonical_form(&c6));
    }

    #[test]
    fn crown1_rejected() {
        assert!(make_family(&FamilySpec::Crown(1)).is_err());
    }

    #[test]
    fn multipartite_needs_two_parts() {
        assert!(make_family(&FamilySpec::CompleteMultipartite(vec![3])).is_err());
    }

    #[test]
    fn octahedron_shape() {
        let g = make_family(&FamilySpec::CompleteMultipartite(vec![2, 2, 2])).unwrap();
        assert_eq!((g.n(), g.m()), (6, 12));
        assert!((0..6).all(|v| g.degree(v) == 4));
    }

    #[test]
    fn spec_parsing() {
        assert_eq!("star:5".parse::<FamilySpec>().unwrap(), FamilySpec::Star(5));
        assert_eq!(
            "complete_bipartite:2,3".parse::<FamilySpec>().unwrap(),
            FamilySpec::CompleteBipartite(2, 3)
        );
        assert_eq!(
            "multipartite:2,2,2".parse::<FamilySpec>().unwrap(),
            FamilySpec::CompleteMultipartite(vec![2, 2, 2])
        );
        assert!("star".parse::<FamilySpec>().is_err());
        assert!("frob:3".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn canonical_relabeling_invariance() {
        let p4 = make_family(&FamilySpec::Path(4)).unwrap();
        let reversed = Graph::from_edges(4, [(3, 2), (2, 1), (1, 0)]).unwrap();
        assert_eq!(canonical_form(&p4), canonical_form(&reversed));
        let star = make_family(&FamilySpec::Star(4)).unwrap();
        assert_ne!(canonical_form(&p4), canonical_form(&star));
    }

    #[test]
    fn tree_counts_match_known_sequence() {
        for (i, &count) in TREE_COUNTS.iter().enumerate().take(10) {
            let n = i + 1;
            assert_eq!(all_trees(n).unwrap().len(), count, "tree count at n={n}");
        }
    }

    #[test]
    fn trees_are_trees() {
        for t in all_trees(7).unwrap() {
            assert_eq!(t.m(), t.n() - 1);
            assert!(t.is_connected());
        }
    }

    #[test]
    fn trees_on_four_vertices() {
        let trees = all_trees(4).unwrap();
        assert_eq!(trees.len(), 2);
        let certs: HashSet<Vec<u8>> = trees.iter().map(canonical_form).collect();
        assert!(certs.contains(&canonical_form(&make_family(&FamilySpec::Path(4)).unwrap())));
        assert!(certs.contains(&canonical_form(&make_family(&FamilySpec::Star(4)).unwrap())));
    }

    #[test]
    fn connected_graph_counts() {
        for (i, &count) in CONNECTED_COUNTS.iter().enumerate().take(6) {
            let n = i + 1;
            assert_eq!(all_connected_graphs(n).unwrap().len(), count, "count at n={n}");
        }
    }

    #[test]
    fn connected_graphs_on_three_vertices() {
        let graphs = all_connected_graphs(3).unwrap();
        let certs: HashSet<Vec<u8>> = graphs.iter().map(canonical_form).collect();
        assert_eq!(certs.len(), 2);
        assert!(certs.contains(&canonical_form(&make_family(&FamilySpec::Path(3)).unwrap())));
        assert!(certs.contains(&canonical_form(&make_family(&FamilySpec::Complete(3)).unwrap())));
    }

    #[test]
    fn enumeration_caps() {
        assert!(all_connected_graphs(8).is_err());
        assert!(all_trees(15).is_err());
        assert!(all_trees(0).is_err());
    }

    #[test]
    fn no_duplicate_certificates_in_streams() {
        let mut seen = HashSet::new();
        for g in all_connected_graphs(5).unwrap() {
            assert!(seen.insert(canonical_form(&g)), "duplicate: {}", to_graph6(&g));
        }
        let mut seen = HashSet::new();
        for t in all_trees(8).unwrap() {
            assert!(seen.insert(canonical_form(&t)));
        }
    }

    #[test]
    fn random_graph_determinism_and_extremes() {
        let a = random_connected_graph(5, 1.0, 42).unwrap();
        assert_eq!(a.m(), 10); // K5
        let b = random_connected_graph(30, 0.2, 7).unwrap();
        let c = random_connected_graph(30, 0.2, 7).unwrap();
        assert_eq!(b, c);
        assert!(b.is_connected());
    }
}
