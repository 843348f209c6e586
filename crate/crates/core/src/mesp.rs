//! The recursive 3-approximation for minimum eccentricity shortest paths,
//! plus exhaustive oracles for small graphs.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{bfs, bfs_distances, farthest_in, trace_back, DistanceMatrix, Graph, Path};
use crate::search::spread_pair;

/// Deepest step at which `algorithm3k_step` still recurses is `MAX_STEP - 1`.
pub const MAX_STEP: u32 = 8;
/// Step calls made by one full run: `2^0 + 2^1 + ... + 2^8`.
pub const STEP_CALLS: u64 = (1 << (MAX_STEP + 1)) - 1;

/// Size limits for the exponential oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactLimits {
    pub max_n: usize,
    /// Maximum number of shortest paths enumerated per vertex pair.
    pub path_cap: usize,
}

impl Default for ExactLimits {
    fn default() -> Self {
        ExactLimits {
            max_n: 40,
            path_cap: 100_000,
        }
    }
}

impl ExactLimits {
    fn admit(&self, g: &Graph) -> Result<()> {
        if self.path_cap == 0 {
            return Err(Error::InvalidParameter(
                "path cap must be at least 1".into(),
            ));
        }
        if g.n() > self.max_n {
            return Err(Error::TooLarge {
                n: g.n(),
                limit: self.max_n,
            });
        }
        Ok(())
    }
}

/// Depth-first walk of the shortest-path DAG from `u` to `v`, visiting
/// neighbours in ascending order so paths arrive in lexicographic order.
/// `du` and `dv` are distance arrays from `u` and `v`. Returns the number of
/// paths visited.
pub(crate) fn walk_shortest_paths<F: FnMut(&[usize])>(
    g: &Graph,
    du: &[u32],
    dv: &[u32],
    u: usize,
    v: usize,
    cap: usize,
    mut visit: F,
) -> Result<usize> {
    let target = du[v];
    let mut path = vec![u];
    let mut next = vec![0usize];
    let mut count = 0;
    if u == v {
        visit(&path);
        return Ok(1);
    }
    while let Some(&a) = path.last() {
        let i = next.last_mut().unwrap();
        let nbrs = g.neighbors(a);
        let step = nbrs[*i..]
            .iter()
            .position(|&b| du[b] == du[a] + 1 && du[b] + dv[b] == target);
        match step {
            Some(off) => {
                let b = nbrs[*i + off];
                *i += off + 1;
                if b == v {
                    count += 1;
                    if count > cap {
                        return Err(Error::CapExceeded { u, v, cap, count });
                    }
                    path.push(b);
                    visit(&path);
                    path.pop();
                } else {
                    path.push(b);
                    next.push(0);
                }
            }
            None => {
                path.pop();
                next.pop();
            }
        }
    }
    Ok(count)
}

/// All shortest `u`-`v` paths in lexicographic order.
pub fn enumerate_shortest_paths(g: &Graph, u: usize, v: usize, cap: usize) -> Result<Vec<Path>> {
    if cap == 0 {
        return Err(Error::InvalidParameter("cap must be at least 1".into()));
    }
    let du = bfs(g, u).dist;
    let dv = bfs(g, v).dist;
    let mut out = Vec::new();
    walk_shortest_paths(g, &du, &dv, u, v, cap, |p| {
        out.push(Path::shortest_unchecked(p.to_vec()))
    })?;
    Ok(out)
}

/// Visits every shortest path between every pair `u <= v`, oriented from
/// `u`. Builds a full distance matrix, so meant for small graphs.
pub fn walk_all_shortest_paths<F: FnMut(&[usize])>(
    g: &Graph,
    cap: usize,
    mut visit: F,
) -> Result<usize> {
    if cap == 0 {
        return Err(Error::InvalidParameter("cap must be at least 1".into()));
    }
    let dm = DistanceMatrix::new(g);
    let mut total = 0;
    for u in 0..g.n() {
        for v in u..g.n() {
            total += walk_shortest_paths(g, dm.row(u), dm.row(v), u, v, cap, &mut visit)?;
        }
    }
    Ok(total)
}

/// Running state of one Algorithm3k execution.
#[derive(Debug, Clone)]
pub struct ApproxState {
    pub best_path: Option<Path>,
    pub best_ecc: u32,
    pub calls: u64,
    steps: HashMap<(usize, usize), (Path, usize, u32)>,
    sources: HashMap<usize, Vec<u32>>,
}

impl ApproxState {
    pub fn new(g: &Graph) -> ApproxState {
        ApproxState {
            best_path: None,
            best_ecc: g.n() as u32,
            calls: 0,
            steps: HashMap::new(),
            sources: HashMap::new(),
        }
    }
}

/// Shortest path `Q` from `x` to `y`, the smallest-id vertex `z` farthest
/// from it, and `d(Q, z)`. The result only depends on `(x, y)`, so repeated
/// pairs within a run, and BFS trees of repeated sources, are served from
/// the state.
fn step_data(g: &Graph, x: usize, y: usize, state: &mut ApproxState) -> (Path, usize, u32) {
    if let Some(hit) = state.steps.get(&(x, y)) {
        return hit.clone();
    }
    let dx = state
        .sources
        .entry(x)
        .or_insert_with(|| bfs_distances(g, &[x]));
    let q = trace_back(g, dx, y);
    let dq = bfs_distances(g, q.vertices());
    let z = farthest_in(&dq);
    let out = (q, z, dq[z]);
    state.steps.insert((x, y), out.clone());
    out
}

pub fn algorithm3k_step(g: &Graph, x: usize, y: usize, step: u32, state: &mut ApproxState) {
    assert!(step <= MAX_STEP, "step {step} beyond {MAX_STEP}");
    state.calls += 1;
    let (q, z, d) = step_data(g, x, y, state);
    if d < state.best_ecc {
        let before = state.best_ecc;
        state.best_ecc = d;
        state.best_path = Some(q);
        assert!(state.best_ecc < before, "best eccentricity increased");
    }
    if step < MAX_STEP {
        algorithm3k_step(g, x, z, step + 1, state);
        algorithm3k_step(g, y, z, step + 1, state);
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Approx3k {
    pub path: Path,
    pub ecc: u32,
    pub x: usize,
    pub y: usize,
    pub calls: u64,
}

/// Runs the full recursion from the spread pair of vertex 0.
pub fn algorithm3k(g: &Graph) -> Approx3k {
    let (x, y) = spread_pair(g, 0);
    let mut state = ApproxState::new(g);
    algorithm3k_step(g, x, y, 0, &mut state);
    assert_eq!(state.calls, STEP_CALLS);
    Approx3k {
        path: state.best_path.expect("first step always improves on n"),
        ecc: state.best_ecc,
        x,
        y,
        calls: state.calls,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MespResult {
    pub k: u32,
    pub path: Path,
    pub pairs_scanned: usize,
    pub paths_enumerated: usize,
}

/// Exhaustive MESP: every shortest path between every pair `u <= v`.
/// Among optimal paths the lexicographically smallest vertex sequence wins.
pub fn exact_mesp(g: &Graph, limits: ExactLimits) -> Result<MespResult> {
    limits.admit(g)?;
    let dm = DistanceMatrix::new(g);
    let n = g.n();
    let mut best: Option<(u32, Vec<usize>)> = None;
    let mut pairs_scanned = 0;
    let mut paths_enumerated = 0;
    for u in 0..n {
        for v in u..n {
            pairs_scanned += 1;
            paths_enumerated +=
                walk_shortest_paths(g, dm.row(u), dm.row(v), u, v, limits.path_cap, |p| {
                    let e = dm.set_eccentricity(p).value;
                    let better = match &best {
                        None => true,
                        Some((be, bp)) => e < *be || (e == *be && p < bp.as_slice()),
                    };
                    if better {
                        best = Some((e, p.to_vec()));
                    }
                })?;
        }
    }
    let (k, path) = best.expect("at least one vertex");
    Ok(MespResult {
        k,
        path: Path::shortest_unchecked(path),
        pairs_scanned,
        paths_enumerated,
    })
}

fn farthest_set(row: &[u32]) -> Vec<usize> {
    let max = row.iter().copied().max().unwrap_or(0);
    (0..row.len()).filter(|&v| row[v] == max).collect()
}

/// Eccentricity of one shortest path and the vertices attaining it.
type PathOption = (u32, Vec<usize>);

struct Adversary<'a> {
    g: &'a Graph,
    dm: DistanceMatrix,
    cap: usize,
    /// Per ordered pair: each shortest path's eccentricity and farthest set.
    paths: HashMap<(usize, usize), Vec<PathOption>>,
    memo: HashMap<(usize, usize, u32), u32>,
}

impl Adversary<'_> {
    fn options(&mut self, x: usize, y: usize) -> Result<Vec<PathOption>> {
        if let Some(o) = self.paths.get(&(x, y)) {
            return Ok(o.clone());
        }
        let dm = &self.dm;
        let n = self.g.n();
        let mut opts = Vec::new();
        walk_shortest_paths(self.g, dm.row(x), dm.row(y), x, y, self.cap, |p| {
            let dist: Vec<u32> = (0..n)
                .map(|v| p.iter().map(|&s| dm.get(v, s)).min().unwrap())
                .collect();
            let far = farthest_set(&dist);
            opts.push((dist[far[0]], far));
        })?;
        self.paths.insert((x, y), opts.clone());
        Ok(opts)
    }

    /// Worst final best-eccentricity of the subtree rooted at a call on
    /// `(x, y, step)`, over every admissible choice of path and `z`.
    fn worst(&mut self, x: usize, y: usize, step: u32) -> Result<u32> {
        if let Some(&w) = self.memo.get(&(x, y, step)) {
            return Ok(w);
        }
        let mut w = 0;
        for (ecc, far) in self.options(x, y)? {
            let mut val = ecc;
            if step < MAX_STEP {
                let mut inner = 0;
                for z in far {
                    let a = self.worst(x, z, step + 1)?;
                    let b = self.worst(y, z, step + 1)?;
                    inner = inner.max(a.min(b));
                }
                val = val.min(inner);
            }
            w = w.max(val);
        }
        self.memo.insert((x, y, step), w);
        Ok(w)
    }
}

/// Largest eccentricity Algorithm3k can end with when every tie (the root,
/// the spread pair, each path `Q` and each farthest `z`) is resolved
/// adversarially.
pub fn adversarial_algorithm3k(g: &Graph, limits: ExactLimits) -> Result<u32> {
    limits.admit(g)?;
    let dm = DistanceMatrix::new(g);
    let mut starts = Vec::new();
    for r in 0..g.n() {
        for x in farthest_set(dm.row(r)) {
            for y in farthest_set(dm.row(x)) {
                starts.push((x, y));
            }
        }
    }
    starts.sort_unstable();
    starts.dedup();
    let mut adv = Adversary {
        g,
        dm,
        cap: limits.path_cap,
        paths: HashMap::new(),
        memo: HashMap::new(),
    };
    let mut worst = 0;
    for (x, y) in starts {
        worst = worst.max(adv.worst(x, y, 0)?);
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_fig1, gen_fig3};
    use crate::graph::{build_graph, path_eccentricity};

    fn path_graph(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        build_graph(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        build_graph(n, &edges).unwrap()
    }

    #[test]
    fn shortest_path_enumeration() {
        let g = cycle(4);
        let ps = enumerate_shortest_paths(&g, 0, 2, 10).unwrap();
        let vs: Vec<_> = ps.iter().map(|p| p.vertices().to_vec()).collect();
        assert_eq!(vs, vec![vec![0, 1, 2], vec![0, 3, 2]]);
        assert_eq!(enumerate_shortest_paths(&g, 3, 3, 1).unwrap().len(), 1);
        assert_eq!(
            enumerate_shortest_paths(&g, 0, 2, 1),
            Err(Error::CapExceeded {
                u: 0,
                v: 2,
                cap: 1,
                count: 2
            })
        );
    }

    #[test]
    fn fig3_paths_include_both_kinds() {
        let inst = gen_fig3();
        let g = &inst.graph;
        let ps = enumerate_shortest_paths(g, 0, 6, 1000).unwrap();
        assert!(ps.iter().any(|p| p.vertices() == [0, 1, 2, 3, 4, 5, 6]));
        let via: Vec<_> = ps
            .iter()
            .filter(|p| [8, 9, 10].iter().all(|v| p.vertices().contains(v)))
            .collect();
        assert!(!via.is_empty());
        assert!(via.iter().any(|p| path_eccentricity(g, p).value == 3));
    }

    #[test]
    fn algorithm3k_small_cases() {
        let r = algorithm3k(&path_graph(10));
        assert_eq!((r.ecc, r.calls), (0, STEP_CALLS));
        let r = algorithm3k(&gen_fig3().graph);
        assert!(r.ecc <= 3);
        assert_eq!(path_eccentricity(&gen_fig3().graph, &r.path).value, r.ecc);
        let r = algorithm3k(&path_graph(1));
        assert_eq!(r.path.vertices(), &[0]);
    }

    #[test]
    fn step_at_depth_limit_does_not_recurse() {
        let g = path_graph(6);
        let mut st = ApproxState::new(&g);
        algorithm3k_step(&g, 0, 5, MAX_STEP, &mut st);
        assert_eq!((st.calls, st.best_ecc), (1, 0));
        let mut st = ApproxState::new(&g);
        algorithm3k_step(&g, 1, 3, 0, &mut st);
        assert_eq!(st.calls, STEP_CALLS);
        assert_eq!(st.best_ecc, 0);
    }

    #[test]
    fn fig3_full_recursion_from_v0_v6() {
        let g = gen_fig3().graph;
        let mut st = ApproxState::new(&g);
        algorithm3k_step(&g, 0, 6, 0, &mut st);
        assert!(st.best_ecc <= 3);
    }

    #[test]
    fn exact_examples() {
        let star = build_graph(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(exact_mesp(&star, ExactLimits::default()).unwrap().k, 1);
        assert_eq!(exact_mesp(&cycle(6), ExactLimits::default()).unwrap().k, 1);
        let fig1 = gen_fig1();
        let r = exact_mesp(&fig1.graph, ExactLimits::default()).unwrap();
        assert_eq!(r.k, 1);
        assert_eq!(r.path, fig1.path("mesp"));
        let one = path_graph(1);
        assert_eq!(exact_mesp(&one, ExactLimits::default()).unwrap().k, 0);
        let tight = ExactLimits {
            max_n: 5,
            ..ExactLimits::default()
        };
        assert_eq!(
            exact_mesp(&path_graph(6), tight),
            Err(Error::TooLarge { n: 6, limit: 5 })
        );
    }

    #[test]
    fn adversarial_examples() {
        assert_eq!(
            adversarial_algorithm3k(&path_graph(7), ExactLimits::default()).unwrap(),
            0
        );
        assert_eq!(
            adversarial_algorithm3k(&gen_fig3().graph, ExactLimits::default()).unwrap(),
            3
        );
    }
}
