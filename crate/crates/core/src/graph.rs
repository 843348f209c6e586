//! Graph storage, BFS primitives and eccentricity of vertex sets.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Sentinel distance for vertices a search has not reached.
pub const UNREACHED: u32 = u32::MAX;

/// Immutable, simple, connected, undirected graph on vertices `0..n`.
///
/// Adjacency is stored in compressed form with every neighbour list sorted
/// ascending, so scanning a list visits neighbours in id order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl Graph {
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }
}

/// Builds a validated graph. Duplicate pairs collapse to one edge.
pub fn build_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Empty);
    }
    let mut degree = vec![0usize; n];
    for &(u, v) in edges {
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        degree[u] += 1;
        degree[v] += 1;
    }
    let mut adj: Vec<Vec<usize>> = degree.iter().map(|&d| Vec::with_capacity(d)).collect();
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut offsets = Vec::with_capacity(n + 1);
    let mut targets = Vec::with_capacity(2 * edges.len());
    offsets.push(0);
    for mut list in adj {
        list.sort_unstable();
        list.dedup();
        targets.extend_from_slice(&list);
        offsets.push(targets.len());
    }
    let g = Graph { offsets, targets };
    let dist = bfs_distances(&g, &[0]);
    if let Some(unreached) = dist.iter().position(|&d| d == UNREACHED) {
        return Err(Error::Disconnected { unreached });
    }
    Ok(g)
}

/// Result of one breadth-first search.
///
/// `parent[v]` is the smallest-id neighbour of `v` one layer closer to the
/// source, which makes every extracted path a pure function of the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfsLayers {
    pub source: usize,
    pub dist: Vec<u32>,
    pub parent: Vec<Option<usize>>,
}

impl BfsLayers {
    pub fn eccentricity(&self) -> u32 {
        self.dist.iter().copied().max().unwrap_or(0)
    }

    /// Smallest id among the vertices farthest from the source.
    pub fn farthest(&self) -> usize {
        farthest_in(&self.dist)
    }
}

pub(crate) fn bfs_distances(g: &Graph, sources: &[usize]) -> Vec<u32> {
    let mut dist = vec![UNREACHED; g.n()];
    let mut queue = Vec::with_capacity(g.n());
    for &s in sources {
        if dist[s] == UNREACHED {
            dist[s] = 0;
            queue.push(s);
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        let next = dist[u] + 1;
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHED {
                dist[w] = next;
                queue.push(w);
            }
        }
    }
    dist
}

pub(crate) fn farthest_in(dist: &[u32]) -> usize {
    let mut best = 0;
    for (v, &d) in dist.iter().enumerate() {
        if d > dist[best] {
            best = v;
        }
    }
    best
}

pub fn bfs(g: &Graph, source: usize) -> BfsLayers {
    assert!(source < g.n(), "bfs source {source} out of range");
    let dist = bfs_distances(g, &[source]);
    let parent = (0..g.n())
        .map(|v| {
            if v == source {
                None
            } else {
                g.neighbors(v)
                    .iter()
                    .copied()
                    .find(|&u| dist[u] + 1 == dist[v])
            }
        })
        .collect();
    BfsLayers {
        source,
        dist,
        parent,
    }
}

/// Distance from every vertex to the nearest source.
pub fn multi_source_bfs(g: &Graph, sources: &[usize]) -> Result<Vec<u32>> {
    if sources.is_empty() {
        return Err(Error::EmptySources);
    }
    for &s in sources {
        g.check_vertex(s)?;
    }
    Ok(bfs_distances(g, sources))
}

pub fn distance(g: &Graph, u: usize, v: usize) -> u32 {
    assert!(u < g.n() && v < g.n(), "distance query out of range");
    if u == v {
        return 0;
    }
    let mut dist = vec![UNREACHED; g.n()];
    let mut queue = VecDeque::new();
    dist[u] = 0;
    queue.push_back(u);
    while let Some(a) = queue.pop_front() {
        for &b in g.neighbors(a) {
            if dist[b] == UNREACHED {
                dist[b] = dist[a] + 1;
                if b == v {
                    return dist[b];
                }
                queue.push_back(b);
            }
        }
    }
    unreachable!("graphs are connected by construction")
}

pub fn farthest_vertex(g: &Graph, source: usize) -> usize {
    assert!(source < g.n(), "farthest_vertex source out of range");
    farthest_in(&bfs_distances(g, &[source]))
}

/// A simple path, optionally known to be a shortest path.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    vertices: Vec<usize>,
    shortest: bool,
}

impl Path {
    /// Validates adjacency and distinctness against `g` and records whether
    /// the path is shortest.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Path> {
        if vertices.is_empty() {
            return Err(Error::InvalidPath("empty vertex sequence".into()));
        }
        let mut seen = vec![false; g.n()];
        for &v in &vertices {
            g.check_vertex(v)?;
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPath(format!("vertex {v} repeated")));
            }
        }
        for w in vertices.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(Error::InvalidPath(format!(
                    "{} and {} are not adjacent",
                    w[0], w[1]
                )));
            }
        }
        let len = vertices.len() as u32 - 1;
        let shortest = distance(g, vertices[0], vertices[vertices.len() - 1]) == len;
        Ok(Path { vertices, shortest })
    }

    pub(crate) fn shortest_unchecked(vertices: Vec<usize>) -> Path {
        Path {
            vertices,
            shortest: true,
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.vertices
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        self.vertices[self.vertices.len() - 1]
    }

    pub fn is_flagged_shortest(&self) -> bool {
        self.shortest
    }
}

/// Follows parent pointers from `target` back to the source.
pub fn extract_shortest_path(g: &Graph, layers: &BfsLayers, target: usize) -> Path {
    assert!(target < g.n() && layers.dist.len() == g.n());
    let mut vertices = Vec::with_capacity(layers.dist[target] as usize + 1);
    let mut cur = target;
    vertices.push(cur);
    while let Some(p) = layers.parent[cur] {
        vertices.push(p);
        cur = p;
    }
    vertices.reverse();
    Path::shortest_unchecked(vertices)
}

/// Same path as [`extract_shortest_path`], traced from a distance array
/// without materialising parents.
pub(crate) fn trace_back(g: &Graph, dist: &[u32], target: usize) -> Path {
    let mut vertices = Vec::with_capacity(dist[target] as usize + 1);
    let mut cur = target;
    vertices.push(cur);
    while dist[cur] > 0 {
        cur = *g
            .neighbors(cur)
            .iter()
            .find(|&&u| dist[u] + 1 == dist[cur])
            .expect("BFS layers are contiguous");
        vertices.push(cur);
    }
    vertices.reverse();
    Path::shortest_unchecked(vertices)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EccReport {
    pub value: u32,
    pub witness: usize,
}

/// Eccentricity of an arbitrary non-empty vertex set.
pub fn set_eccentricity(g: &Graph, set: &[usize]) -> Result<EccReport> {
    let dist = multi_source_bfs(g, set)?;
    let witness = farthest_in(&dist);
    Ok(EccReport {
        value: dist[witness],
        witness,
    })
}

pub fn path_eccentricity(g: &Graph, p: &Path) -> EccReport {
    set_eccentricity(g, p.vertices()).expect("paths are non-empty")
}

pub fn is_shortest_path(g: &Graph, p: &Path) -> bool {
    distance(g, p.first(), p.last()) as usize == p.len()
}

/// All-pairs distances by one BFS per vertex, for small graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn new(g: &Graph) -> DistanceMatrix {
        let n = g.n();
        let mut d = Vec::with_capacity(n * n);
        for s in 0..n {
            d.extend(bfs_distances(g, &[s]));
        }
        DistanceMatrix { n, d }
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// Same result as [`set_eccentricity`], from the matrix.
    pub fn set_eccentricity(&self, set: &[usize]) -> EccReport {
        let mut best = EccReport {
            value: 0,
            witness: 0,
        };
        for v in 0..self.n {
            let row = self.row(v);
            let d = set.iter().map(|&s| row[s]).min().expect("non-empty set");
            if d > best.value {
                best = EccReport {
                    value: d,
                    witness: v,
                };
            }
        }
        best
    }
}
