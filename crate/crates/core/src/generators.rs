//! Named instances: the small hand-built examples, the tightness families
//! `G_k`, `J_k`, `H_k`, and seeded random connected graphs.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::{Error, Result};
use crate::graph::{build_graph, multi_source_bfs, path_eccentricity, Graph, Path};
use crate::laminarity::{enumerate_diameters, graph_diameter, laminarity, strong_laminarity};
use crate::mesp::{adversarial_algorithm3k, exact_mesp, ExactLimits};
use crate::search::enumerate_spread_outcomes;

/// A quantity an instance is built to exhibit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Claim {
    MespK(u32),
    Laminarity(u32),
    StrongLaminarity(u32),
    Diameter(u32),
    DiameterCount(usize),
    /// Largest eccentricity over all double-BFS outcomes from a labelled root.
    SpreadMaxEcc {
        root: String,
        value: u32,
    },
    Adversarial3k(u32),
    PathEcc {
        path: String,
        value: u32,
    },
    ShortestPath(String),
    DistanceToPath {
        vertex: String,
        path: String,
        value: u32,
    },
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::MespK(v) => write!(f, "k = {v}"),
            Claim::Laminarity(v) => write!(f, "l = {v}"),
            Claim::StrongLaminarity(v) => write!(f, "s = {v}"),
            Claim::Diameter(v) => write!(f, "diam = {v}"),
            Claim::DiameterCount(v) => write!(f, "diameters = {v}"),
            Claim::SpreadMaxEcc { root, value } => {
                write!(f, "max spread ecc from {root} = {value}")
            }
            Claim::Adversarial3k(v) => write!(f, "adversarial approx3k ecc = {v}"),
            Claim::PathEcc { path, value } => write!(f, "ecc({path}) = {value}"),
            Claim::ShortestPath(p) => write!(f, "{p} is a shortest path"),
            Claim::DistanceToPath {
                vertex,
                path,
                value,
            } => write!(f, "d({vertex}, {path}) = {value}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClaimStatus {
    Pass,
    Fail { actual: String },
    Skipped { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimCheck {
    pub claim: Claim,
    pub status: ClaimStatus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedInstance {
    pub name: String,
    pub graph: Graph,
    pub labels: BTreeMap<String, usize>,
    pub paths: BTreeMap<String, Vec<usize>>,
    pub claims: Vec<Claim>,
}

impl NamedInstance {
    pub fn label(&self, name: &str) -> usize {
        *self
            .labels
            .get(name)
            .unwrap_or_else(|| panic!("{}: no label {name}", self.name))
    }

    pub fn path(&self, name: &str) -> Path {
        let vs = self
            .paths
            .get(name)
            .unwrap_or_else(|| panic!("{}: no path {name}", self.name));
        Path::new(&self.graph, vs.clone()).expect("named paths are valid")
    }

    /// Verifies each claim with the matching oracle. Claims whose oracle
    /// refuses the instance (size limit, path cap) are reported as skipped.
    pub fn check_claims(&self, limits: ExactLimits, diameter_cap: usize) -> Vec<ClaimCheck> {
        self.claims
            .iter()
            .map(|c| ClaimCheck {
                claim: c.clone(),
                status: self.check(c, limits, diameter_cap),
            })
            .collect()
    }

    fn check(&self, claim: &Claim, limits: ExactLimits, cap: usize) -> ClaimStatus {
        let g = &self.graph;
        let actual: Result<String> = match claim {
            Claim::MespK(_) => exact_mesp(g, limits).map(|r| r.k.to_string()),
            Claim::Laminarity(_) => laminarity(g, cap).map(|r| r.value.to_string()),
            Claim::StrongLaminarity(_) => strong_laminarity(g, cap).map(|r| r.value.to_string()),
            Claim::Diameter(_) => Ok(graph_diameter(g).0.to_string()),
            Claim::DiameterCount(_) => {
                enumerate_diameters(g, cap).map(|d| d.paths.len().to_string())
            }
            Claim::SpreadMaxEcc { root, .. } => enumerate_spread_outcomes(g, self.label(root), cap)
                .map(|o| o.iter().map(|x| x.max_ecc).max().unwrap_or(0).to_string()),
            Claim::Adversarial3k(_) => adversarial_algorithm3k(g, limits).map(|v| v.to_string()),
            Claim::PathEcc { path, .. } => {
                Ok(path_eccentricity(g, &self.path(path)).value.to_string())
            }
            Claim::ShortestPath(path) => Ok(self.path(path).is_flagged_shortest().to_string()),
            Claim::DistanceToPath { vertex, path, .. } => {
                multi_source_bfs(g, &self.paths[path]).map(|d| d[self.label(vertex)].to_string())
            }
        };
        let expected = match claim {
            Claim::MespK(v)
            | Claim::Laminarity(v)
            | Claim::StrongLaminarity(v)
            | Claim::Diameter(v)
            | Claim::Adversarial3k(v)
            | Claim::SpreadMaxEcc { value: v, .. }
            | Claim::PathEcc { value: v, .. }
            | Claim::DistanceToPath { value: v, .. } => v.to_string(),
            Claim::DiameterCount(v) => v.to_string(),
            Claim::ShortestPath(_) => "true".to_string(),
        };
        match actual {
            Ok(a) if a == expected => ClaimStatus::Pass,
            Ok(a) => ClaimStatus::Fail { actual: a },
            Err(e @ (Error::TooLarge { .. } | Error::CapExceeded { .. })) => ClaimStatus::Skipped {
                reason: e.to_string(),
            },
            Err(e) => ClaimStatus::Fail {
                actual: e.to_string(),
            },
        }
    }
}

fn instance(
    name: String,
    n: usize,
    edges: &[(usize, usize)],
    labels: BTreeMap<String, usize>,
    paths: BTreeMap<String, Vec<usize>>,
    claims: Vec<Claim>,
) -> NamedInstance {
    let graph = build_graph(n, edges).expect("generated instances are valid");
    NamedInstance {
        name,
        graph,
        labels,
        paths,
        claims,
    }
}

fn names(prefix: &str, ids: impl IntoIterator<Item = usize>) -> Vec<(String, usize)> {
    ids.into_iter()
        .enumerate()
        .map(|(i, v)| (format!("{prefix}{i}"), v))
        .collect()
}

fn path_ecc(path: &str, value: u32) -> Claim {
    Claim::PathEcc {
        path: path.into(),
        value,
    }
}

/// Sixteen vertices where a double BFS can return a path of eccentricity 5
/// although a shortest path of eccentricity 1 exists.
pub fn gen_fig1() -> NamedInstance {
    const NAMES: [&str; 16] = [
        "v0", "v1", "v2", "v3", "v4", "v5", "v6", "r", "a", "b", "z", "c", "d", "e", "x", "y",
    ];
    let id = |s: &str| NAMES.iter().position(|&t| t == s).unwrap();
    let spec = [
        ("v0", "v1"),
        ("v1", "v2"),
        ("v2", "v3"),
        ("v3", "v4"),
        ("v4", "v5"),
        ("v5", "v6"),
        ("v2", "b"),
        ("a", "b"),
        ("b", "r"),
        ("v0", "a"),
        ("v1", "a"),
        ("v3", "x"),
        ("r", "v4"),
        ("v6", "y"),
        ("z", "v0"),
        ("z", "a"),
        ("c", "v4"),
        ("c", "x"),
        ("d", "r"),
        ("d", "v5"),
        ("d", "y"),
        ("e", "v5"),
        ("e", "c"),
    ];
    let edges: Vec<_> = spec.iter().map(|&(a, b)| (id(a), id(b))).collect();
    let labels = NAMES
        .iter()
        .enumerate()
        .map(|(i, s)| (s.to_string(), i))
        .collect();
    let paths = BTreeMap::from([
        ("mesp".to_string(), (0..7).collect()),
        (
            "thick".to_string(),
            ["x", "c", "e", "v5", "v6", "y"]
                .iter()
                .map(|s| id(s))
                .collect(),
        ),
    ]);
    let claims = vec![
        Claim::MespK(1),
        path_ecc("mesp", 1),
        path_ecc("thick", 5),
        Claim::ShortestPath("thick".into()),
        Claim::SpreadMaxEcc {
            root: "r".into(),
            value: 5,
        },
    ];
    instance("fig1".into(), 16, &edges, labels, paths, claims)
}

/// Thirteen vertices where Algorithm3k can end at eccentricity 3 although a
/// shortest path of eccentricity 1 exists.
pub fn gen_fig3() -> NamedInstance {
    let edges = [
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 5),
        (5, 6),
        (0, 7),
        (7, 8),
        (8, 9),
        (9, 10),
        (10, 11),
        (11, 6),
        (3, 12),
        (1, 8),
        (2, 9),
        (4, 9),
        (5, 10),
    ];
    let labels = names("v", 0..13).into_iter().collect();
    let paths = BTreeMap::from([
        ("mesp".to_string(), (0..7).collect()),
        ("top".to_string(), vec![0, 7, 8, 9, 10, 11, 6]),
    ]);
    let claims = vec![
        Claim::MespK(1),
        path_ecc("mesp", 1),
        Claim::ShortestPath("top".into()),
        Claim::Diameter(6),
        Claim::Adversarial3k(3),
    ];
    instance("fig3".into(), 13, &edges, labels, paths, claims)
}

fn check_k(k: u32) -> Result<usize> {
    if k < 1 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    Ok(k as usize)
}

/// Path `x0..x{4k}` with a pendant path `y1..yk` hanging from `x{2k}`.
pub fn gen_gk(k: u32) -> Result<NamedInstance> {
    let kk = check_k(k)?;
    let spine = 4 * kk + 1;
    let mut edges: Vec<_> = (1..spine).map(|i| (i - 1, i)).collect();
    let mut prev = 2 * kk;
    for i in 0..kk {
        edges.push((prev, spine + i));
        prev = spine + i;
    }
    let mut labels: BTreeMap<_, _> = names("x", 0..spine).into_iter().collect();
    labels.extend((1..=kk).map(|i| (format!("y{i}"), spine + i - 1)));
    let paths = BTreeMap::from([("diameter".to_string(), (0..spine).collect())]);
    let claims = vec![
        Claim::MespK(k),
        Claim::Laminarity(k),
        Claim::StrongLaminarity(k),
        Claim::Diameter(4 * k),
        Claim::DiameterCount(1),
        path_ecc("diameter", k),
    ];
    Ok(instance(
        format!("g{k}"),
        spine + kk,
        &edges,
        labels,
        paths,
        claims,
    ))
}

type Point = (i64, i64);

/// Lattice drawing: points plus straight segments through them. A segment
/// joins each pair of consecutive points lying on it.
struct Drawing {
    points: BTreeSet<Point>,
    segments: Vec<(Point, Point)>,
}

impl Drawing {
    fn new() -> Drawing {
        Drawing {
            points: BTreeSet::new(),
            segments: Vec::new(),
        }
    }

    fn add(&mut self, pts: impl IntoIterator<Item = Point>) {
        self.points.extend(pts);
    }

    fn seg(&mut self, a: Point, b: Point) {
        self.segments.push((a, b));
    }

    fn edges(&self) -> BTreeSet<(Point, Point)> {
        let mut out = BTreeSet::new();
        for &(a, b) in &self.segments {
            let (dx, dy) = ((b.0 - a.0).signum(), (b.1 - a.1).signum());
            let steps = (b.0 - a.0).abs().max((b.1 - a.1).abs());
            let on: Vec<Point> = (0..=steps)
                .map(|t| (a.0 + dx * t, a.1 + dy * t))
                .filter(|p| self.points.contains(p))
                .collect();
            for w in on.windows(2) {
                out.insert((w[0].min(w[1]), w[0].max(w[1])));
            }
        }
        out
    }
}

/// Turns a lattice graph into an instance. Ids: red path first, then the
/// green path's remaining vertices, then `z`, then everything else by
/// coordinates.
fn lattice_instance(
    name: String,
    points: &BTreeSet<Point>,
    edges: &BTreeSet<(Point, Point)>,
    red: &[Point],
    green: &[Point],
    z: Point,
    claims: Vec<Claim>,
) -> NamedInstance {
    let mut id: HashMap<Point, usize> = HashMap::new();
    let mut labels = BTreeMap::new();
    let order = red.iter().chain(green).chain([&z]).chain(points.iter());
    for p in order {
        let next = id.len();
        id.entry(*p).or_insert(next);
    }
    for (i, p) in red.iter().enumerate() {
        labels.insert(format!("x{i}"), id[p]);
    }
    let on_red: HashSet<&Point> = red.iter().collect();
    for (i, p) in green.iter().enumerate() {
        if !on_red.contains(p) {
            labels.insert(format!("v{i}"), id[p]);
        }
    }
    labels.insert("z".into(), id[&z]);
    let e: Vec<_> = edges.iter().map(|(a, b)| (id[a], id[b])).collect();
    let paths = BTreeMap::from([
        ("red".to_string(), red.iter().map(|p| id[p]).collect()),
        ("green".to_string(), green.iter().map(|p| id[p]).collect()),
    ]);
    instance(name, points.len(), &e, labels, paths, claims)
}

/// Family with `k(J_k) = k` and `s(J_k) = 4k`: the red diameter lies at
/// distance `4k` from `z`, while the green diameter has eccentricity `k`.
pub fn gen_jk(k: u32) -> Result<NamedInstance> {
    let k = check_k(k)? as i64;
    let mut d = Drawing::new();
    d.add((1..=3 * k + 1).map(|x| (x, 0)));
    d.add((0..=k).flat_map(|x| (0..=x).map(move |y| (x + 1, y))));
    d.add((0..=k).flat_map(|x| (0..=k).map(move |y| (x + k + 1, y))));
    d.add((0..=k).flat_map(|x| (0..=x).map(move |y| (x + k + 1, -y))));
    d.add((0..=k).flat_map(|x| (0..=x).map(move |y| (x + 2 * k + 1, y + k))));
    d.add((0..=k).flat_map(|x| (0..=k).map(move |y| (x + 3 * k + 1, y + k))));
    d.add((k + 1..=4 * k + 1).map(|x| (x, k)));
    d.add((1..k).map(|y| (3 * k + 1, y)));
    d.add((2 * k + 1..=4 * k + 1).map(|x| (x, -k)));
    d.add((0..k).flat_map(|x| (x..k).map(move |y| (x + 3 * k + 1, -y))));
    d.add((0..k).flat_map(|x| (x..k).map(move |y| (x + 2 * k + 1, -y))));
    for (a, b) in [
        ((1, 0), (k + 1, k)),
        ((k + 1, k), (3 * k + 1, k)),
        ((2 * k + 1, 0), (3 * k + 1, -k)),
        ((3 * k + 1, k), (4 * k + 1, k)),
        ((2 * k + 1, k), (3 * k + 1, 2 * k)),
        ((4 * k + 1, 2 * k), (3 * k + 1, 2 * k)),
        ((4 * k + 1, 2 * k), (4 * k + 1, k)),
        ((3 * k + 1, -k), (3 * k + 1, k)),
        ((k + 1, 0), (3 * k + 1, 0)),
        ((1, 0), (k + 1, 0)),
        ((k + 1, 0), (2 * k + 1, -k)),
        ((4 * k + 1, -k), (3 * k + 1, 0)),
        ((4 * k + 1, -k), (2 * k + 1, -k)),
    ] {
        d.seg(a, b);
    }
    for j in 0..=k {
        d.seg((2 * k + 1 - j, -k + j), (2 * k + 1 - j, k));
    }
    for j in 1..k {
        d.seg((k + 1 - j, 0), (k + 1 - j, k - j));
        d.seg((2 * k + 1, -j), (3 * k + 1 - j, -k));
        d.seg((3 * k + 1, -j), (4 * k + 1 - j, -k));
        d.seg((2 * k + 1 + j, k + j), (4 * k + 1, k + j));
        d.seg((2 * k + 1 + j, k + j), (2 * k + 1 + j, k));
    }
    for j in 0..k {
        d.seg((3 * k + 1 + j, 2 * k), (3 * k + 1 + j, k));
    }
    let red: Vec<Point> = (0..=k)
        .map(|t| (1 + t, 0))
        .chain((1..=k).map(|t| (k + 1 + t, -t)))
        .chain((1..=2 * k).map(|t| (2 * k + 1 + t, -k)))
        .collect();
    let green: Vec<Point> = (0..=2 * k)
        .map(|t| (k + 1 + t, 0))
        .chain((1..=k).map(|t| (3 * k + 1, t)))
        .chain((1..=k).map(|t| (3 * k + 1 + t, k)))
        .collect();
    let k = k as u32;
    let claims = vec![
        Claim::MespK(k),
        Claim::StrongLaminarity(4 * k),
        Claim::Diameter(4 * k),
        Claim::ShortestPath("red".into()),
        Claim::ShortestPath("green".into()),
        path_ecc("green", k),
        path_ecc("red", 4 * k),
        Claim::DistanceToPath {
            vertex: "z".into(),
            path: "red".into(),
            value: 4 * k,
        },
    ];
    let edges = d.edges();
    Ok(lattice_instance(
        format!("j{k}"),
        &d.points,
        &edges,
        &red,
        &green,
        (4 * k as i64 + 1, 2 * k as i64),
        claims,
    ))
}

/// Family with a unique diameter of large eccentricity relative to `k`.
///
/// `k = 1` has two diameters of eccentricity 2. `k = 2` is a 21-vertex graph
/// whose unique diameter has eccentricity 6. For `k >= 3` no graph has a
/// unique diameter of eccentricity `4k - 2` together with a shortest path of
/// eccentricity `k`, and the lattice construction reaches `4k - 3`.
pub fn gen_hk(k: u32) -> Result<NamedInstance> {
    match check_k(k)? {
        1 => Ok(gen_h1()),
        2 => Ok(gen_h2()),
        _ => Ok(gen_h_lattice(k as i64)),
    }
}

fn gen_h1() -> NamedInstance {
    let pts: [Point; 9] = [
        (1, 0),
        (2, 0),
        (2, 1),
        (3, 0),
        (3, 1),
        (4, 0),
        (4, 1),
        (4, 2),
        (5, 0),
    ];
    let edges: BTreeSet<(Point, Point)> = [
        ((1, 0), (2, 1)),
        ((2, 0), (1, 0)),
        ((2, 0), (2, 1)),
        ((2, 0), (3, 0)),
        ((3, 0), (2, 1)),
        ((3, 1), (2, 1)),
        ((3, 1), (3, 0)),
        ((3, 1), (4, 1)),
        ((3, 1), (4, 2)),
        ((4, 0), (3, 0)),
        ((4, 0), (4, 1)),
        ((4, 0), (5, 0)),
        ((4, 2), (4, 1)),
    ]
    .into_iter()
    .map(|(a, b)| (a.min(b), a.max(b)))
    .collect();
    let red: Vec<Point> = (1..=5).map(|x| (x, 0)).collect();
    let green = [(2, 0), (3, 0), (4, 0), (4, 1)];
    let claims = vec![
        Claim::MespK(1),
        Claim::Laminarity(2),
        Claim::StrongLaminarity(2),
        Claim::Diameter(4),
        Claim::DiameterCount(2),
        path_ecc("red", 2),
        path_ecc("green", 1),
        Claim::ShortestPath("green".into()),
    ];
    let points = pts.into_iter().collect();
    lattice_instance("h1".into(), &points, &edges, &red, &green, (4, 2), claims)
}

fn gen_h2() -> NamedInstance {
    // Red diameter x0..x8, green MESP v0..v6, z two steps off v3, and
    // connectors pinning the red path at distance 6 from z.
    let names: Vec<String> = (0..9)
        .map(|i| format!("x{i}"))
        .chain((0..7).map(|i| format!("v{i}")))
        .chain(["z", "w", "p", "q", "r"].map(String::from))
        .collect();
    let id = |s: &str| names.iter().position(|t| t == s).unwrap();
    let mut edges: Vec<_> = (1..9).map(|i| (i - 1, i)).collect();
    edges.extend((1..7).map(|i| (9 + i - 1, 9 + i)));
    for (a, b) in [
        ("v3", "w"),
        ("w", "z"),
        ("x1", "v0"),
        ("x7", "v6"),
        ("x3", "p"),
        ("p", "v0"),
        ("x4", "q"),
        ("q", "v5"),
        ("x5", "r"),
        ("r", "v6"),
    ] {
        edges.push((id(a), id(b)));
    }
    let labels = names
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), i))
        .collect();
    let paths = BTreeMap::from([
        ("red".to_string(), (0..9).collect()),
        ("green".to_string(), (9..16).collect()),
    ]);
    let claims = vec![
        Claim::MespK(2),
        Claim::Laminarity(6),
        Claim::StrongLaminarity(6),
        Claim::Diameter(8),
        Claim::DiameterCount(1),
        path_ecc("red", 6),
        path_ecc("green", 2),
        Claim::ShortestPath("green".into()),
        Claim::DistanceToPath {
            vertex: "z".into(),
            path: "red".into(),
            value: 6,
        },
    ];
    instance("h2".into(), names.len(), &edges, labels, paths, claims)
}

fn gen_h_lattice(k: i64) -> NamedInstance {
    let mut d = Drawing::new();
    d.add([(0, 0)]);
    d.add((2..=3 * k + 1).map(|x| (x, 0)));
    d.add((1..=k).map(|t| (t, t)));
    d.add((k..4 * k).map(|x| (x, k)));
    d.add((1..=k).map(|j| (2 * k + 1 + j, k + j)));
    d.add((3 * k + 1..4 * k).map(|x| (x, 2 * k)));
    d.add((k + 1..2 * k).map(|y| (4 * k - 1, y)));
    d.add((1..k).map(|y| (3 * k + 1, y)));
    d.add((1..=k).map(|t| (k + t, -t)));
    d.add((2 * k + 1..=4 * k).map(|x| (x, -k)));
    d.add((0..=k).flat_map(|x| (0..=k).map(move |y| (x + k + 1, y))));
    d.add((0..k - 1).flat_map(|x| (0..=k).map(move |y| (x + 3 * k + 1, y + k))));
    d.add((0..=k).flat_map(|x| (0..=x).map(move |y| (x + k + 1, -y))));
    d.add((0..=k).flat_map(|x| (0..=x).map(move |y| (x + 2 * k + 1, y + k))));
    d.add((0..k).map(|x| (x + 2, x + 1)));
    d.add((0..k).flat_map(|x| (0..=x).map(move |y| (x + 2, y))));
    d.add((0..k - 1).flat_map(|x| (x..k - 1).map(move |y| (x + 3 * k + 1, -1 - y))));
    d.add((0..k - 1).flat_map(|x| (x..k - 1).map(move |y| (x + 2 * k + 1, -1 - y))));
    for (a, b) in [
        ((k, k), (2 * k, 0)),
        ((1, 1), (k, k)),
        ((k, k), (3 * k + 1, k)),
        ((3 * k + 1, k), (4 * k - 1, k)),
        ((2 * k + 1, k), (3 * k + 1, 2 * k)),
        ((4 * k - 1, 2 * k), (3 * k + 1, 2 * k)),
        ((4 * k - 1, 2 * k), (4 * k - 1, k)),
        ((3 * k + 1, 0), (3 * k + 1, k)),
        ((3 * k + 1, -k), (3 * k + 1, 0)),
        ((k, 0), (3 * k + 1, 0)),
        ((0, 0), (1, 1)),
        ((1, 1), (2, 0)),
        ((2, 0), (k, 0)),
        ((k, 0), (2 * k, -k)),
        ((4 * k, -k), (2 * k, -k)),
        ((2 * k + 1, -k), (2 * k + 1, k)),
        ((k, 0), (k, k)),
    ] {
        d.seg(a, b);
    }
    for c in k + 1..=2 * k {
        d.seg((c, -(c - k)), (c, k));
    }
    for j in 1..k - 1 {
        d.seg((k - j, 0), (k - j, k - j));
    }
    for j in 1..k {
        d.seg((2 * k + 1, -j), (3 * k + 1 - j, -k));
        d.seg((3 * k + 1, -j), (4 * k + 1 - j, -k));
        d.seg((2 * k + 1 + j, k + j), (4 * k - 1, k + j));
        d.seg((2 * k + 1 + j, k + j), (2 * k + 1 + j, k));
    }
    for j in 0..k - 1 {
        d.seg((3 * k + 1 + j, 2 * k), (3 * k + 1 + j, k));
    }
    let mut edges = d.edges();
    // Drawn as is, the lower right corner admits further diameters. Cutting
    // the corner and bridging it diagonally leaves the red path unique.
    let cut = [(4 * k - 1, -k), (4 * k - 2, -(k - 1))];
    for p in &cut {
        d.points.remove(p);
    }
    edges.retain(|(a, b)| !cut.contains(a) && !cut.contains(b));
    edges.insert(((4 * k - 2, -k), (4 * k - 1, -(k - 1))));
    let mut red: Vec<Point> = [(0, 0), (1, 1)]
        .into_iter()
        .chain((2..=k).map(|x| (x, 0)))
        .chain((1..=k).map(|t| (k + t, -t)))
        .chain((1..=2 * k - 2).map(|t| (2 * k + t, -k)))
        .collect();
    red.extend([(4 * k - 1, -(k - 1)), (4 * k, -k)]);
    let green: Vec<Point> = (0..=2 * k + 1)
        .map(|t| (k + t, 0))
        .chain((1..=k).map(|t| (3 * k + 1, t)))
        .chain((1..=k - 2).map(|t| (3 * k + 1 + t, k)))
        .collect();
    let z = (4 * k - 1, 2 * k);
    let k = k as u32;
    let claims = vec![
        Claim::MespK(k),
        Claim::Laminarity(4 * k - 3),
        Claim::StrongLaminarity(4 * k - 3),
        Claim::Diameter(4 * k),
        Claim::DiameterCount(1),
        path_ecc("red", 4 * k - 3),
        path_ecc("green", k),
        Claim::ShortestPath("red".into()),
        Claim::ShortestPath("green".into()),
    ];
    lattice_instance(format!("h{k}"), &d.points, &edges, &red, &green, z, claims)
}

/// Uniform draw from `0..len` by widening multiplication.
fn bounded(rng: &mut SplitMix64, len: usize) -> usize {
    ((rng.next_u64() as u128 * len as u128) >> 64) as usize
}

fn rng(seed: u64) -> SplitMix64 {
    SplitMix64::from_seed(seed.to_le_bytes())
}

/// Links every component to the one holding vertex 0. Components are taken
/// in order of their smallest vertex; each one's smallest vertex is joined to
/// a uniformly drawn vertex among those already connected.
fn connect(n: usize, edges: &mut Vec<(usize, usize)>, rng: &mut SplitMix64) {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges.iter() {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut comp = vec![usize::MAX; n];
    let mut attached: Vec<usize> = Vec::with_capacity(n);
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = s;
        let mut members = vec![s];
        let mut i = 0;
        while i < members.len() {
            for &w in &adj[members[i]] {
                if comp[w] == usize::MAX {
                    comp[w] = s;
                    members.push(w);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        if s != 0 {
            let anchor = attached[bounded(rng, attached.len())];
            edges.push((anchor, s));
        }
        attached.extend(members);
    }
}

/// `G(n, p)` made connected. Pairs `u < v` are scanned in row-major order
/// with one 64-bit draw each; the edge is kept when the draw is below
/// `floor(p * 2^64)`. The generator is SplitMix64 seeded with `seed`.
pub fn gen_random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    let mut rng = rng(seed);
    let threshold = (p * 18_446_744_073_709_551_616.0) as u64;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let draw = rng.next_u64();
            if p >= 1.0 || draw < threshold {
                edges.push((u, v));
            }
        }
    }
    connect(n, &mut edges, &mut rng);
    build_graph(n, &edges)
}

/// `m` distinct random edges drawn by rejection, then made connected.
pub fn gen_random_gnm(n: usize, m: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if m > n * (n - 1) / 2 {
        return Err(Error::InvalidParameter(format!(
            "{m} edges do not fit on {n} vertices"
        )));
    }
    let mut rng = rng(seed);
    let mut seen = HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m + n / 8);
    while edges.len() < m {
        let u = bounded(&mut rng, n);
        let v = bounded(&mut rng, n);
        if u != v && seen.insert((u.min(v), u.max(v))) {
            edges.push((u.min(v), u.max(v)));
        }
    }
    connect(n, &mut edges, &mut rng);
    build_graph(n, &edges)
}
