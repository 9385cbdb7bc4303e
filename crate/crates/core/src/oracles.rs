//! Brute-force ground truth: BFS distances, vertex-split max-flow,
//! fault-set enumeration and the aggregated metric report.
//!
//! Everything here works on a CSR adjacency built once per graph through
//! index arithmetic only, and never calls into the router except in
//! [`wide_upper_from_router`].

use std::collections::{BTreeMap, VecDeque};
use std::time::Instant;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::e3c::{edge_count_formula, graph_census, neighbor_indices, E3CParams, E3CVertex, Isomorphism};
use crate::error::{Error, Result};
use crate::qn3::{qnk_neighbors, QnkVertex};
use crate::router::construct_path_system;
use crate::trits::TritString;

/// Largest graph the oracles will materialize.
pub const MAX_VERTICES: u64 = 3u64.pow(14);

/// Default cap on BFS runs for exhaustive sweeps.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Shortest-path length, or a distinct marker when no path survives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Distance {
    Finite(usize),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Self::Finite(d) => Some(d),
            Self::Unreachable => None,
        }
    }
}

impl std::fmt::Display for Distance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Finite(d) => write!(f, "{d}"),
            Self::Unreachable => f.write_str("unreachable"),
        }
    }
}

/// Exhaustive enumeration or a seeded sample of a fixed size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Exhaustive,
    Sampled { seed: u64, trials: usize },
}

impl Mode {
    pub fn seed(&self) -> Option<u64> {
        match self {
            Self::Exhaustive => None,
            Self::Sampled { seed, .. } => Some(*seed),
        }
    }
}

/// A set of deleted vertices, stored as sorted indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FaultSet {
    faults: Vec<u64>,
}

impl FaultSet {
    pub fn new(faults: impl IntoIterator<Item = u64>) -> Self {
        let mut faults: Vec<u64> = faults.into_iter().collect();
        faults.sort_unstable();
        faults.dedup();
        Self { faults }
    }

    pub fn from_vertices<'a>(vertices: impl IntoIterator<Item = &'a E3CVertex>) -> Self {
        Self::new(vertices.into_iter().map(E3CVertex::index))
    }

    pub fn indices(&self) -> &[u64] {
        &self.faults
    }

    pub fn len(&self) -> usize {
        self.faults.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faults.is_empty()
    }

    pub fn contains(&self, index: u64) -> bool {
        self.faults.binary_search(&index).is_ok()
    }

    pub fn vertices(&self, params: E3CParams) -> Vec<E3CVertex> {
        self.faults.iter().map(|&i| E3CVertex::from_index(params, i).expect("fault index in range")).collect()
    }
}

/// Immutable CSR adjacency of an `E3C(r,s,t)` or a `k`-ary `n`-cube.
#[derive(Clone, Debug)]
pub struct Graph {
    params: Option<E3CParams>,
    offsets: Vec<u32>,
    targets: Vec<u32>,
}

impl Graph {
    pub fn new(params: E3CParams) -> Result<Self> {
        let n = params.vertex_count();
        if n > MAX_VERTICES {
            return Err(Error::Resource(format!("{params} has {n} vertices; the oracles stop at {MAX_VERTICES}")));
        }
        let mut offsets = Vec::with_capacity(n as usize + 1);
        let mut targets = Vec::new();
        let mut buf = Vec::new();
        offsets.push(0);
        for i in 0..n {
            buf.clear();
            neighbor_indices(&params, i, &mut buf);
            targets.extend(buf.iter().map(|&j| j as u32));
            offsets.push(targets.len() as u32);
        }
        Ok(Self { params: Some(params), offsets, targets })
    }

    /// The `k`-ary `n`-cube, vertices numbered by base-`k` value.
    pub fn qnk(n: usize, k: u8) -> Result<Self> {
        let count = (k as u64).checked_pow(n as u32).filter(|&c| c <= MAX_VERTICES);
        let count = count.ok_or_else(|| Error::Resource(format!("Q_{n}^{k} exceeds {MAX_VERTICES} vertices")))?;
        let mut offsets = vec![0u32];
        let mut targets = Vec::new();
        for i in 0..count {
            let x = QnkVertex(TritString::from_index(k, n, i)?);
            targets.extend(qnk_neighbors(&x).iter().map(|y| y.0.index() as u32));
            offsets.push(targets.len() as u32);
        }
        Ok(Self { params: None, offsets, targets })
    }

    /// The `E3C` parameters, or `None` for a plain `k`-ary `n`-cube.
    pub fn params(&self) -> Option<E3CParams> {
        self.params
    }

    pub fn min_degree(&self) -> usize {
        (0..self.vertex_count()).map(|i| self.degree(i)).min().unwrap_or(0)
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn neighbors(&self, i: usize) -> &[u32] {
        &self.targets[self.offsets[i] as usize..self.offsets[i + 1] as usize]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.neighbors(i).len()
    }

    fn check_index(&self, i: u64) -> Result<usize> {
        if i < self.vertex_count() as u64 {
            Ok(i as usize)
        } else {
            Err(Error::Codec(format!("vertex index {i} out of range for a {}-vertex graph", self.vertex_count())))
        }
    }

    /// Shortest `u`-`v` distance avoiding `faults`.
    pub fn distance(&self, u: u64, v: u64, faults: &FaultSet) -> Result<Distance> {
        let (u, v) = (self.check_index(u)?, self.check_index(v)?);
        if faults.contains(u as u64) || faults.contains(v as u64) {
            return Err(Error::Domain("an endpoint is in the fault set".into()));
        }
        let blocked: Vec<u32> = faults.indices().iter().map(|&i| i as u32).collect();
        Ok(Bfs::new(self).distance(u, v, &blocked))
    }

    /// Maximum number of internally disjoint `u`-`v` paths, with one
    /// witnessing family as vertex index sequences.
    pub fn pair_connectivity(&self, u: u64, v: u64) -> Result<(usize, Vec<Vec<u64>>)> {
        let (u, v) = (self.check_index(u)?, self.check_index(v)?);
        if u == v {
            return Err(Error::Domain("pair connectivity needs distinct vertices".into()));
        }
        Ok(Flow::split(self, u, v).run())
    }
}

/// BFS scratch with generation stamps, reusable across queries.
struct Bfs<'g> {
    graph: &'g Graph,
    seen: Vec<u32>,
    dist: Vec<u32>,
    generation: u32,
    queue: VecDeque<u32>,
}

impl<'g> Bfs<'g> {
    fn new(graph: &'g Graph) -> Self {
        let n = graph.vertex_count();
        Self { graph, seen: vec![0; n], dist: vec![0; n], generation: 0, queue: VecDeque::new() }
    }

    fn bump(&mut self) -> u32 {
        self.generation = self.generation.wrapping_add(1);
        if self.generation == 0 {
            self.seen.fill(0);
            self.generation = 1;
        }
        self.generation
    }

    fn distance(&mut self, u: usize, v: usize, blocked: &[u32]) -> Distance {
        if u == v {
            return Distance::Finite(0);
        }
        let g = self.bump();
        for &b in blocked {
            self.seen[b as usize] = g;
        }
        self.seen[u] = g;
        self.dist[u] = 0;
        self.queue.clear();
        self.queue.push_back(u as u32);
        while let Some(x) = self.queue.pop_front() {
            let dx = self.dist[x as usize] + 1;
            for &y in self.graph.neighbors(x as usize) {
                if y as usize == v {
                    return Distance::Finite(dx as usize);
                }
                if self.seen[y as usize] != g {
                    self.seen[y as usize] = g;
                    self.dist[y as usize] = dx;
                    self.queue.push_back(y);
                }
            }
        }
        Distance::Unreachable
    }

    /// Largest distance from `u` and a vertex attaining it.
    fn eccentricity(&mut self, u: usize) -> (usize, usize) {
        let g = self.bump();
        self.seen[u] = g;
        self.dist[u] = 0;
        self.queue.clear();
        self.queue.push_back(u as u32);
        let mut far = (0, u);
        while let Some(x) = self.queue.pop_front() {
            let dx = self.dist[x as usize];
            if dx as usize > far.0 {
                far = (dx as usize, x as usize);
            }
            for &y in self.graph.neighbors(x as usize) {
                if self.seen[y as usize] != g {
                    self.seen[y as usize] = g;
                    self.dist[y as usize] = dx + 1;
                    self.queue.push_back(y);
                }
            }
        }
        let reached = self.seen.iter().filter(|&&s| s == g).count();
        if reached < self.graph.vertex_count() {
            return (usize::MAX, u);
        }
        far
    }
}

/// Unit-capacity vertex-split flow network: vertex `i` becomes `2i -> 2i+1`.
struct Flow {
    head: Vec<usize>,
    next: Vec<usize>,
    to: Vec<usize>,
    cap: Vec<u8>,
    source: usize,
    sink: usize,
    u: usize,
    v: usize,
}

impl Flow {
    fn split(graph: &Graph, u: usize, v: usize) -> Self {
        let n = graph.vertex_count();
        let mut flow = Self {
            head: vec![usize::MAX; 2 * n],
            next: Vec::new(),
            to: Vec::new(),
            cap: Vec::new(),
            source: 2 * u + 1,
            sink: 2 * v,
            u,
            v,
        };
        for i in 0..n {
            if i != u && i != v {
                flow.arc(2 * i, 2 * i + 1);
            }
            for &j in graph.neighbors(i) {
                flow.arc(2 * i + 1, 2 * j as usize);
            }
        }
        flow
    }

    fn arc(&mut self, a: usize, b: usize) {
        for (x, y, c) in [(a, b, 1), (b, a, 0)] {
            self.to.push(y);
            self.cap.push(c);
            self.next.push(self.head[x]);
            self.head[x] = self.to.len() - 1;
        }
    }

    fn run(mut self) -> (usize, Vec<Vec<u64>>) {
        let mut count = 0;
        let mut parent = vec![usize::MAX; self.head.len()];
        loop {
            parent.fill(usize::MAX);
            let mut queue = VecDeque::from([self.source]);
            let mut found = false;
            'bfs: while let Some(x) = queue.pop_front() {
                let mut e = self.head[x];
                while e != usize::MAX {
                    let y = self.to[e];
                    if self.cap[e] > 0 && parent[y] == usize::MAX && y != self.source {
                        parent[y] = e;
                        if y == self.sink {
                            found = true;
                            break 'bfs;
                        }
                        queue.push_back(y);
                    }
                    e = self.next[e];
                }
            }
            if !found {
                break;
            }
            let mut y = self.sink;
            while y != self.source {
                let e = parent[y];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                y = self.to[e ^ 1];
            }
            count += 1;
        }
        let paths = self.decompose(count);
        (count, paths)
    }

    /// Follows saturated forward arcs from the source, once per unit of flow.
    fn decompose(&mut self, count: usize) -> Vec<Vec<u64>> {
        let mut paths = Vec::with_capacity(count);
        for _ in 0..count {
            let mut path = vec![self.u as u64];
            let mut x = self.source;
            while x != self.sink {
                let mut e = self.head[x];
                // A forward arc (even index) carrying flow has its reverse
                // capacity raised to 1.
                while !(e.is_multiple_of(2) && self.cap[e ^ 1] > 0) {
                    e = self.next[e];
                }
                self.cap[e ^ 1] -= 1;
                x = self.to[e];
                if x.is_multiple_of(2) && x != self.sink {
                    path.push((x / 2) as u64);
                    x += 1;
                    let inner = self.inner_arc(x - 1);
                    self.cap[inner ^ 1] -= 1;
                }
            }
            path.push(self.v as u64);
            paths.push(path);
        }
        paths
    }

    fn inner_arc(&self, x: usize) -> usize {
        let mut e = self.head[x];
        while self.to[e] != x + 1 || e % 2 == 1 {
            e = self.next[e];
        }
        e
    }
}

/// Fault distance maximum and the fault set achieving it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaultMax {
    pub max: Distance,
    pub witness: FaultSet,
    /// BFS runs performed.
    pub evaluations: u64,
    /// False when the value is only a lower bound on the true maximum.
    pub exhaustive: bool,
    pub seed: Option<u64>,
}

/// `C(n, k)`, saturating.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return u64::MAX;
        }
    }
    acc as u64
}

impl Graph {
    /// Maximum over `f`-vertex fault sets (avoiding `u`, `v`) of the
    /// surviving distance.
    pub fn fault_distance_max(&self, u: u64, v: u64, f: usize, mode: Mode, budget: u64) -> Result<FaultMax> {
        let (ui, vi) = (self.check_index(u)?, self.check_index(v)?);
        if ui == vi {
            return Err(Error::Domain("fault distance needs distinct vertices".into()));
        }
        let delta = self.min_degree();
        if f >= delta {
            return Err(Error::Domain(format!("f = {f} exceeds min degree - 1 = {}", delta - 1)));
        }
        let pool: Vec<u32> =
            (0..self.vertex_count() as u32).filter(|&x| x as usize != ui && x as usize != vi).collect();
        match mode {
            Mode::Exhaustive => {
                let total = binomial(pool.len() as u64, f as u64);
                if total > budget {
                    return Err(Error::Resource(format!(
                        "{total} fault sets exceed the budget of {budget}; use sampled mode"
                    )));
                }
                let (max, witness) = self.enumerate_faults(ui, vi, &pool, f);
                Ok(FaultMax {
                    max,
                    witness: FaultSet::new(witness.into_iter().map(u64::from)),
                    evaluations: total,
                    exhaustive: true,
                    seed: None,
                })
            }
            Mode::Sampled { seed, trials } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut bfs = Bfs::new(self);
                let mut best = (Distance::Finite(0), Vec::new());
                let mut set = Vec::with_capacity(f);
                for _ in 0..trials {
                    set.clear();
                    set.extend(sample(&mut rng, pool.len(), f).into_iter().map(|k| pool[k]));
                    let d = bfs.distance(ui, vi, &set);
                    if best.1.is_empty() || d > best.0 {
                        best = (d, set.clone());
                    }
                }
                Ok(FaultMax {
                    max: best.0,
                    witness: FaultSet::new(best.1.into_iter().map(u64::from)),
                    evaluations: trials as u64,
                    exhaustive: false,
                    seed: Some(seed),
                })
            }
        }
    }

    /// All `f`-subsets of `pool`, split by first element across threads.
    fn enumerate_faults(&self, u: usize, v: usize, pool: &[u32], f: usize) -> (Distance, Vec<u32>) {
        if f == 0 {
            return (Bfs::new(self).distance(u, v, &[]), Vec::new());
        }
        let threads = std::thread::available_parallelism().map_or(1, |n| n.get()).min(16);
        let firsts: Vec<usize> = (0..=pool.len() - f).collect();
        let results: Vec<(Distance, Vec<u32>)> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..threads)
                .map(|t| {
                    let firsts = &firsts;
                    scope.spawn(move || {
                        let mut bfs = Bfs::new(self);
                        let mut best = (Distance::Finite(0), Vec::new());
                        let mut set = vec![0u32; f];
                        let mut idx = vec![0usize; f];
                        for &first in firsts.iter().skip(t).step_by(threads) {
                            for (k, slot) in idx.iter_mut().enumerate() {
                                *slot = first + k;
                            }
                            loop {
                                for k in 0..f {
                                    set[k] = pool[idx[k]];
                                }
                                let d = bfs.distance(u, v, &set);
                                if d > best.0 || best.1.is_empty() {
                                    best = (d, set.clone());
                                }
                                // Next combination with idx[0] fixed.
                                let mut k = f - 1;
                                loop {
                                    if k == 0 {
                                        break;
                                    }
                                    if idx[k] < pool.len() - (f - k) {
                                        idx[k] += 1;
                                        for j in k + 1..f {
                                            idx[j] = idx[j - 1] + 1;
                                        }
                                        break;
                                    }
                                    k -= 1;
                                }
                                if k == 0 {
                                    break;
                                }
                            }
                        }
                        best
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("fault worker panicked")).collect()
        });
        results.into_iter().filter(|r| !r.1.is_empty()).fold((Distance::Finite(0), Vec::new()), |acc, r| {
            if r.0 > acc.0 || acc.1.is_empty() {
                r
            } else {
                acc
            }
        })
    }
}

/// BFS distance in `E3C(r,s,t) - faults`.
pub fn bfs_distance(params: E3CParams, u: &E3CVertex, v: &E3CVertex, faults: &FaultSet) -> Result<Distance> {
    Graph::new(params)?.distance(u.index(), v.index(), faults)
}

/// Maximum number of internally disjoint `u`-`v` paths plus one witness family.
pub fn pair_connectivity(params: E3CParams, u: &E3CVertex, v: &E3CVertex) -> Result<(usize, Vec<Vec<E3CVertex>>)> {
    let (count, paths) = Graph::new(params)?.pair_connectivity(u.index(), v.index())?;
    let paths = paths
        .into_iter()
        .map(|p| p.into_iter().map(|i| E3CVertex::from_index(params, i).expect("index in range")).collect())
        .collect();
    Ok((count, paths))
}

pub fn fault_distance_max(
    params: E3CParams,
    u: &E3CVertex,
    v: &E3CVertex,
    f: usize,
    mode: Mode,
    budget: u64,
) -> Result<FaultMax> {
    Graph::new(params)?.fault_distance_max(u.index(), v.index(), f, mode, budget)
}

/// Router-derived upper bound on the `(2r+2)`-wide diameter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WideUpper {
    pub max: usize,
    pub u: String,
    pub v: String,
    pub pairs: u64,
    pub exhaustive: bool,
    pub seed: Option<u64>,
}

/// Unordered pairs selected by `mode`.
pub fn select_pairs(params: E3CParams, mode: Mode) -> Vec<(u64, u64)> {
    let n = params.vertex_count();
    match mode {
        Mode::Exhaustive => (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect(),
        Mode::Sampled { seed, trials } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..trials)
                .map(|_| {
                    let a = rng.gen_range(0..n);
                    let b = (a + rng.gen_range(1..n)) % n;
                    (a, b)
                })
                .collect()
        }
    }
}

/// Longest path over the router's systems for the selected pairs. Graphs
/// with unordered parameters are routed through their normalizing
/// relabeling, which preserves lengths.
pub fn wide_upper_from_router(params: E3CParams, mode: Mode) -> Result<WideUpper> {
    let iso = Isomorphism::normalizing(params);
    let pairs = select_pairs(params, mode);
    let sweep = |chunk: &[(u64, u64)]| -> Result<(usize, u64, u64)> {
        let mut best = (0, 0, 0);
        for &(a, b) in chunk {
            let u = iso.map(&E3CVertex::from_index(params, a)?);
            let v = iso.map(&E3CVertex::from_index(params, b)?);
            let len = construct_path_system(&u, &v)?.max_len();
            if len > best.0 {
                best = (len, a, b);
            }
        }
        Ok(best)
    };
    let best = par_chunks(&pairs, sweep)?.into_iter().max_by_key(|b| b.0).unwrap_or((0, 0, 0));
    let vertex = |i| E3CVertex::from_index(params, i).expect("index in range").to_string();
    Ok(WideUpper {
        max: best.0,
        u: vertex(best.1),
        v: vertex(best.2),
        pairs: pairs.len() as u64,
        exhaustive: mode == Mode::Exhaustive,
        seed: mode.seed(),
    })
}

/// Runs `work` over contiguous chunks of `items` on scoped threads.
fn par_chunks<I: Sync, R: Send>(items: &[I], work: impl Fn(&[I]) -> Result<R> + Sync) -> Result<Vec<R>> {
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get()).min(16);
    let size = items.len().div_ceil(threads).max(1);
    std::thread::scope(|scope| {
        let handles: Vec<_> = items.chunks(size).map(|chunk| scope.spawn(|| work(chunk))).collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    })
}

/// A pair of vertices achieving some extremum, in flat form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Extremum {
    pub value: usize,
    pub u: String,
    pub v: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectivityMin {
    pub value: usize,
    pub u: String,
    pub v: String,
    pub pairs: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaultReport {
    pub size: usize,
    pub max: Distance,
    pub u: String,
    pub v: String,
    pub faults: Vec<String>,
    pub evaluations: u64,
    pub exhaustive: bool,
}

/// Which of the expensive sections a report should compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MetricOptions {
    pub mode: Mode,
    /// Fault-set size for the fault-distance section; skipped when `None`.
    pub faults: Option<usize>,
    pub connectivity: bool,
    pub wide: bool,
    pub budget: u64,
}

impl Default for MetricOptions {
    fn default() -> Self {
        Self { mode: Mode::Exhaustive, faults: None, connectivity: true, wide: false, budget: DEFAULT_BUDGET }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MetricReport {
    pub version: &'static str,
    pub params: E3CParams,
    pub mode: Mode,
    pub seed: Option<u64>,
    pub vertices: u64,
    pub edges: u64,
    /// Edge counts for E0..E3.
    pub edges_per_class: [u64; 4],
    pub min_degree: usize,
    pub max_degree: usize,
    pub degree_histogram: BTreeMap<usize, u64>,
    pub diameter: Extremum,
    pub connectivity: Option<ConnectivityMin>,
    pub fault: Option<FaultReport>,
    pub wide_upper: Option<WideUpper>,
    pub wall_time_ms: u128,
}

/// Builds the report, cross-checking the census against the degree sum.
pub fn graph_metrics(params: E3CParams, options: MetricOptions) -> Result<MetricReport> {
    let start = Instant::now();
    let graph = Graph::new(params)?;
    let n = graph.vertex_count();
    let census = graph_census(params);
    let edges = graph.edge_count() as u64;
    if census.vertices != n as u64 || census.edges != edges || edge_count_formula(params) != edges {
        return Err(Error::defect(format!(
            "census mismatch: {} vertices / {} edges counted, {} / {} from the adjacency",
            census.vertices, census.edges, n, edges
        )));
    }
    let mut degree_histogram = BTreeMap::new();
    for i in 0..n {
        *degree_histogram.entry(graph.degree(i)).or_insert(0) += 1;
    }
    let vertex = |i: usize| E3CVertex::from_index(params, i as u64).expect("index in range").to_string();

    let sources: Vec<usize> = (0..n).collect();
    let ecc = par_chunks(&sources, |chunk| {
        let mut bfs = Bfs::new(&graph);
        Ok(chunk.iter().map(|&s| (bfs.eccentricity(s), s)).max_by_key(|e| e.0 .0).expect("non-empty chunk"))
    })?;
    let ((diam, far), src) = ecc.into_iter().max_by_key(|e| e.0 .0).expect("graph is non-empty");
    if diam == usize::MAX {
        return Err(Error::defect(format!("{params} is disconnected")));
    }
    let diameter = Extremum { value: diam, u: vertex(src), v: vertex(far) };

    let mut work = 0u64;
    let pairs =
        if options.connectivity || options.faults.is_some() { select_pairs(params, options.mode) } else { Vec::new() };
    let connectivity = if options.connectivity {
        work += pairs.len() as u64;
        if work > options.budget {
            return Err(Error::Resource(format!(
                "{} max-flow runs exceed the budget of {}",
                pairs.len(),
                options.budget
            )));
        }
        let mins = par_chunks(&pairs, |chunk| {
            let mut best = (usize::MAX, 0, 0);
            for &(a, b) in chunk {
                let (k, _) = graph.pair_connectivity(a, b)?;
                if k < best.0 {
                    best = (k, a, b);
                }
            }
            Ok(best)
        })?;
        let (value, a, b) = mins.into_iter().min_by_key(|m| m.0).unwrap_or((0, 0, 0));
        Some(ConnectivityMin { value, u: vertex(a as usize), v: vertex(b as usize), pairs: pairs.len() as u64 })
    } else {
        None
    };

    let fault = match options.faults {
        None => None,
        Some(f) => {
            let per_pair = match options.mode {
                Mode::Exhaustive => binomial(n as u64 - 2, f as u64),
                Mode::Sampled { trials, .. } => trials as u64,
            };
            let total = per_pair.saturating_mul(pairs.len() as u64);
            if total > options.budget {
                return Err(Error::Resource(format!(
                    "{total} fault BFS runs exceed the budget of {}; use sampled mode",
                    options.budget
                )));
            }
            let mut best: Option<(FaultMax, u64, u64)> = None;
            for (k, &(a, b)) in pairs.iter().enumerate() {
                let mode = match options.mode {
                    Mode::Sampled { seed, trials } => Mode::Sampled { seed: seed.wrapping_add(k as u64), trials },
                    m => m,
                };
                let m = graph.fault_distance_max(a, b, f, mode, options.budget)?;
                if best.as_ref().is_none_or(|(x, _, _)| m.max > x.max) {
                    best = Some((m, a, b));
                }
            }
            best.map(|(m, a, b)| FaultReport {
                size: f,
                max: m.max,
                u: vertex(a as usize),
                v: vertex(b as usize),
                faults: m.witness.vertices(params).iter().map(ToString::to_string).collect(),
                evaluations: total,
                exhaustive: m.exhaustive,
            })
        }
    };

    let wide_upper = if options.wide { Some(wide_upper_from_router(params, options.mode)?) } else { None };

    Ok(MetricReport {
        version: env!("CARGO_PKG_VERSION"),
        params,
        mode: options.mode,
        seed: options.mode.seed(),
        vertices: n as u64,
        edges,
        edges_per_class: census.per_class,
        min_degree: degree_histogram.keys().next().copied().unwrap_or(0),
        max_degree: degree_histogram.keys().last().copied().unwrap_or(0),
        degree_histogram,
        diameter,
        connectivity,
        fault,
        wide_upper,
        wall_time_ms: start.elapsed().as_millis(),
    })
}
