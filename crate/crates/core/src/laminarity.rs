//! Diameters as paths, laminarity `l(G)`, strong laminarity `s(G)` and the
//! bounds tying them to `k(G)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{bfs, DistanceMatrix, Graph, Path};
use crate::mesp::{exact_mesp, walk_shortest_paths, ExactLimits};

pub const DEFAULT_DIAMETER_CAP: usize = 100_000;

/// Numeric diameter and the lexicographically smallest pair attaining it.
pub fn graph_diameter(g: &Graph) -> (u32, (usize, usize)) {
    let mut best = (0, (0, 0));
    for u in 0..g.n() {
        let dist = bfs(g, u).dist;
        for (v, &d) in dist.iter().enumerate().skip(u + 1) {
            if d > best.0 {
                best = (d, (u, v));
            }
        }
    }
    best
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiameterSet {
    pub diam: u32,
    /// Pairs `(u, v)` with `u <= v` at distance `diam`, sorted.
    pub pairs: Vec<(usize, usize)>,
    /// Every diameter, oriented from its smaller endpoint.
    pub paths: Vec<Path>,
}

/// All diameters; `cap` bounds the total number of paths.
pub fn enumerate_diameters(g: &Graph, cap: usize) -> Result<DiameterSet> {
    if cap == 0 {
        return Err(Error::InvalidParameter("cap must be at least 1".into()));
    }
    let dm = DistanceMatrix::new(g);
    let n = g.n();
    let diam = (0..n)
        .flat_map(|u| dm.row(u).iter().copied())
        .max()
        .unwrap_or(0);
    let pairs: Vec<_> = (0..n)
        .flat_map(|u| (u..n).map(move |v| (u, v)))
        .filter(|&(u, v)| dm.get(u, v) == diam)
        .collect();
    let mut paths = Vec::new();
    for &(u, v) in &pairs {
        let left = cap - paths.len();
        let found = walk_shortest_paths(g, dm.row(u), dm.row(v), u, v, left, |p| {
            paths.push(Path::shortest_unchecked(p.to_vec()))
        });
        if let Err(Error::CapExceeded { .. }) = found {
            return Err(Error::CapExceeded {
                u,
                v,
                cap,
                count: cap + 1,
            });
        }
        found?;
    }
    Ok(DiameterSet { diam, pairs, paths })
}

/// A laminarity value and a diameter attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Laminarity {
    pub value: u32,
    pub witness: Path,
}

fn diameter_eccentricities(g: &Graph, cap: usize) -> Result<Vec<(u32, Path)>> {
    let set = enumerate_diameters(g, cap)?;
    let dm = DistanceMatrix::new(g);
    Ok(set
        .paths
        .into_iter()
        .map(|p| (dm.set_eccentricity(p.vertices()).value, p))
        .collect())
}

/// `s(G)`: the largest eccentricity of any diameter.
pub fn strong_laminarity(g: &Graph, cap: usize) -> Result<Laminarity> {
    let mut best: Option<(u32, Path)> = None;
    for (e, p) in diameter_eccentricities(g, cap)? {
        if best.as_ref().is_none_or(|(b, _)| e > *b) {
            best = Some((e, p));
        }
    }
    let (value, witness) = best.expect("every graph has a diameter");
    Ok(Laminarity { value, witness })
}

/// `l(G)`: the smallest eccentricity of any diameter.
pub fn laminarity(g: &Graph, cap: usize) -> Result<Laminarity> {
    let mut best: Option<(u32, Path)> = None;
    for (e, p) in diameter_eccentricities(g, cap)? {
        if best.as_ref().is_none_or(|(b, _)| e < *b) {
            best = Some((e, p));
        }
    }
    let (value, witness) = best.expect("every graph has a diameter");
    Ok(Laminarity { value, witness })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheck {
    pub name: &'static str,
    pub status: CheckStatus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub k: u32,
    pub l: u32,
    pub s: u32,
    pub diam: u32,
    pub diameters: usize,
    pub checks: Vec<BoundCheck>,
}

impl BoundsReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundsCaps {
    pub exact: ExactLimits,
    pub diameter_cap: usize,
}

impl Default for BoundsCaps {
    fn default() -> Self {
        BoundsCaps {
            exact: ExactLimits::default(),
            diameter_cap: DEFAULT_DIAMETER_CAP,
        }
    }
}

fn status(ok: bool) -> CheckStatus {
    if ok {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    }
}

/// Computes `k`, `l`, `s` exactly and evaluates
/// `k <= l`, `l <= 4k - 2` (for `k >= 1`), `k <= s`, `s <= 4k`,
/// and `l = s = 0` when `k = 0`.
pub fn bounds_report(g: &Graph, caps: BoundsCaps) -> Result<BoundsReport> {
    let k = exact_mesp(g, caps.exact)?.k;
    let set = enumerate_diameters(g, caps.diameter_cap)?;
    let dm = DistanceMatrix::new(g);
    let eccs: Vec<u32> = set
        .paths
        .iter()
        .map(|p| dm.set_eccentricity(p.vertices()).value)
        .collect();
    let l = eccs
        .iter()
        .copied()
        .min()
        .expect("every graph has a diameter");
    let s = eccs
        .iter()
        .copied()
        .max()
        .expect("every graph has a diameter");
    let skip_unless = |cond: bool, ok: bool| {
        if cond {
            status(ok)
        } else {
            CheckStatus::Skipped
        }
    };
    let checks = vec![
        BoundCheck {
            name: "k<=l",
            status: status(k <= l),
        },
        BoundCheck {
            name: "l<=4k-2",
            status: skip_unless(k >= 1, l + 2 <= 4 * k),
        },
        BoundCheck {
            name: "k<=s",
            status: status(k <= s),
        },
        BoundCheck {
            name: "s<=4k",
            status: status(s <= 4 * k),
        },
        BoundCheck {
            name: "k=0=>l=s=0",
            status: skip_unless(k == 0, l == 0 && s == 0),
        },
    ];
    Ok(BoundsReport {
        k,
        l,
        s,
        diam: set.diam,
        diameters: set.paths.len(),
        checks,
    })
}
