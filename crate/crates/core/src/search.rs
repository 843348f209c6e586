//! Double-BFS spread pairs and the interval property of shortest paths
//! relative to a low-eccentricity reference path.

use crate::error::{Error, Result};
use crate::graph::{
    bfs, extract_shortest_path, farthest_in, multi_source_bfs, path_eccentricity, set_eccentricity,
    EccReport, Graph, Path,
};
use crate::mesp::walk_shortest_paths;

pub const DEFAULT_SPREAD_CAP: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpreadResult {
    pub start: usize,
    pub x: usize,
    pub y: usize,
    pub path: Path,
    pub ecc: EccReport,
}

pub fn spread_pair(g: &Graph, r: usize) -> (usize, usize) {
    let x = bfs(g, r).farthest();
    let y = bfs(g, x).farthest();
    (x, y)
}

/// Double BFS from `r`: the parent-tree path from `x` to `y`.
pub fn spread_path(g: &Graph, r: usize) -> SpreadResult {
    let x = bfs(g, r).farthest();
    let from_x = bfs(g, x);
    let y = from_x.farthest();
    let path = extract_shortest_path(g, &from_x, y);
    let ecc = path_eccentricity(g, &path);
    SpreadResult {
        start: r,
        x,
        y,
        path,
        ecc,
    }
}

/// One possible double-BFS outcome when ties are resolved arbitrarily.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpreadOutcome {
    pub x: usize,
    pub y: usize,
    pub min_ecc: u32,
    pub max_ecc: u32,
    pub paths: usize,
}

fn all_farthest(dist: &[u32]) -> Vec<usize> {
    let max = dist[farthest_in(dist)];
    (0..dist.len()).filter(|&v| dist[v] == max).collect()
}

/// Every `(x, y)` a double BFS from `r` may pick, with the range of
/// eccentricities over all shortest `x`-`y` paths. Sorted by `(x, y)`.
pub fn enumerate_spread_outcomes(g: &Graph, r: usize, cap: usize) -> Result<Vec<SpreadOutcome>> {
    if cap == 0 {
        return Err(Error::InvalidParameter("cap must be at least 1".into()));
    }
    let mut out = Vec::new();
    for x in all_farthest(&bfs(g, r).dist) {
        let dx = bfs(g, x).dist;
        for y in all_farthest(&dx) {
            let dy = bfs(g, y).dist;
            let (mut lo, mut hi) = (u32::MAX, 0);
            let paths = walk_shortest_paths(g, &dx, &dy, x, y, cap, |p| {
                let e = set_eccentricity(g, p).expect("non-empty path").value;
                lo = lo.min(e);
                hi = hi.max(e);
            })?;
            out.push(SpreadOutcome {
                x,
                y,
                min_ecc: lo,
                max_ecc: hi,
                paths,
            });
        }
    }
    Ok(out)
}

/// Index interval of reference vertices within `k` of a query path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathProjection {
    pub i_min: usize,
    pub i_max: usize,
    pub k: u32,
}

fn require_shortest(p: &Path, what: &str) -> Result<()> {
    if p.is_flagged_shortest() {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{what} is not a shortest path"
        )))
    }
}

pub fn path_projection(g: &Graph, reference: &Path, k: u32, q: &Path) -> Result<PathProjection> {
    require_shortest(reference, "reference")?;
    require_shortest(q, "query path")?;
    let dq = multi_source_bfs(g, q.vertices())?;
    project(reference, k, &dq)
}

fn project(reference: &Path, k: u32, dq: &[u32]) -> Result<PathProjection> {
    let near = |v: &usize| dq[*v] <= k;
    let vs = reference.vertices();
    match (vs.iter().position(near), vs.iter().rposition(near)) {
        (Some(i_min), Some(i_max)) => Ok(PathProjection { i_min, i_max, k }),
        _ => Err(Error::Precondition(format!(
            "no reference vertex within {k} of the query path"
        ))),
    }
}

/// Checks both halves of the interval property for `q` against a reference
/// shortest path of eccentricity at most `k`:
/// reference vertices between `i_min` and `i_max` lie within `2k` of `q`,
/// and every vertex within `k` of that stretch lies within `3k` of `q`.
pub fn check_lemma1(g: &Graph, reference: &Path, k: u32, q: &Path) -> Result<bool> {
    require_shortest(reference, "reference")?;
    require_shortest(q, "query path")?;
    let ecc = path_eccentricity(g, reference).value;
    if ecc > k {
        return Err(Error::Precondition(format!(
            "reference eccentricity {ecc} exceeds k = {k}"
        )));
    }
    let dq = multi_source_bfs(g, q.vertices())?;
    let proj = project(reference, k, &dq)?;
    let stretch = &reference.vertices()[proj.i_min..=proj.i_max];
    if stretch.iter().any(|&v| dq[v] > 2 * k) {
        return Ok(false);
    }
    let ds = multi_source_bfs(g, stretch)?;
    Ok((0..g.n()).all(|v| ds[v] > k || dq[v] <= 3 * k))
}
