//! End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
//! if any fails. The checks here use their own string-level adjacency and
//! disjointness tests rather than the library validators.

use std::collections::{BTreeMap, HashSet};
use std::process::ExitCode;
use std::time::Instant;

use e3c::e3c::{all_vertices, block_isomorphism, e3c_neighbors, graph_census};
use e3c::oracles::{
    bfs_distance, graph_metrics, select_pairs, wide_upper_from_router, Distance, FaultSet, Graph, MetricOptions, Mode,
    DEFAULT_BUDGET,
};
use e3c::qn3::{disjoint_paths_q3, path_profile};
use e3c::router::{case_bound, theorem31_witness};
use e3c::{classify_pair, construct_path_system, E3CParams, E3CVertex, QnkVertex, TritString};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn p(r: usize, s: usize, t: usize) -> E3CParams {
    E3CParams::new(r, s, t).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Adjacency read straight off the flat strings `A B C d`: either only `d`
/// changes, or `d` is fixed and one trit of the block it selects changes
/// (`d = 0` frees `C`, `1` frees `B`, `2` frees `A`).
fn adjacent(g: E3CParams, x: &str, y: &str) -> bool {
    let (x, y) = (x.as_bytes(), y.as_bytes());
    let n = x.len();
    if n != y.len() || x == y {
        return false;
    }
    let diff: Vec<usize> = (0..n).filter(|&i| x[i] != y[i]).collect();
    if diff == [n - 1] {
        return true;
    }
    if diff.len() != 1 || x[n - 1] != y[n - 1] {
        return false;
    }
    let (r, s) = (g.len(2), g.len(1));
    let free = match x[n - 1] {
        b'0' => r + s..n - 1,
        b'1' => r..r + s,
        _ => 0..r,
    };
    free.contains(&diff[0])
}

/// Simple, adjacent-stepping `u`-`v` paths with pairwise disjoint interiors.
fn disjoint_system(paths: &[Vec<String>], u: &str, v: &str, adj: impl Fn(&str, &str) -> bool) -> Result<(), String> {
    let mut seen = HashSet::new();
    let mut direct = 0;
    for path in paths {
        ensure(path.first().map(String::as_str) == Some(u), || format!("path does not start at {u}: {path:?}"))?;
        ensure(path.last().map(String::as_str) == Some(v), || format!("path does not end at {v}: {path:?}"))?;
        ensure(path.windows(2).all(|w| adj(&w[0], &w[1])), || format!("non-edge in {path:?}"))?;
        if path.len() == 2 {
            direct += 1;
        }
        for x in &path[1..path.len() - 1] {
            ensure(x != u && x != v && seen.insert(x.clone()), || format!("{x} reused in {path:?}"))?;
        }
    }
    ensure(direct <= 1, || "more than one direct edge".into())
}

fn census() -> Check {
    let mut notes = Vec::new();
    for (g, vertices, edges) in [(p(1, 1, 1), 81, 162), (p(1, 1, 2), 243, 567), (p(1, 2, 2), 729, 1944)] {
        let rst = (g.len(0) + g.len(1) + g.len(2)) as u64;
        let formula = (rst + 3) * 3u64.pow(rst as u32);
        let degree_sum: usize = all_vertices(g).map(|u| e3c_neighbors(&u).len()).sum();
        let c = graph_census(g);
        ensure(
            c.vertices == vertices && c.edges == edges && formula == edges && degree_sum as u64 == 2 * edges,
            || format!("{g}: census {}/{}, degree sum {degree_sum}, formula {formula}", c.vertices, c.edges),
        )?;
        notes.push(format!("{g} {vertices}/{edges}"));
    }
    Ok(notes.join(", "))
}

fn no_extras(mode: Mode) -> MetricOptions {
    MetricOptions { mode, faults: None, connectivity: false, wide: false, budget: DEFAULT_BUDGET }
}

fn diameter() -> Check {
    let mut notes = Vec::new();
    for (g, want) in [(p(1, 1, 1), 6), (p(1, 1, 2), 7), (p(1, 2, 2), 8)] {
        let report = graph_metrics(g, no_extras(Mode::Exhaustive)).map_err(|e| e.to_string())?;
        ensure(report.diameter.value == want && want == g.n() + 2, || {
            format!("{g}: diameter {} expected {want}", report.diameter.value)
        })?;
        notes.push(format!("{g} {want}"));
    }
    Ok(notes.join(", "))
}

fn connectivity() -> Check {
    let small = graph_metrics(p(1, 1, 1), MetricOptions { connectivity: true, ..no_extras(Mode::Exhaustive) })
        .map_err(|e| e.to_string())?;
    let small = small.connectivity.expect("requested");
    ensure(small.value == 4 && small.pairs == 3240, || {
        format!("(1,1,1): min {} over {} pairs", small.value, small.pairs)
    })?;
    let sampled = Mode::Sampled { seed: 2024, trials: 2000 };
    let big = graph_metrics(p(1, 2, 2), MetricOptions { connectivity: true, ..no_extras(sampled) })
        .map_err(|e| e.to_string())?;
    let big = big.connectivity.expect("requested");
    ensure(big.value == 4, || format!("(1,2,2): sampled min {}", big.value))?;
    Ok(format!("E3C(1,1,1) min 4 over 3240 pairs, E3C(1,2,2) min 4 over {} sampled pairs", big.pairs))
}

/// Routes every pair in `pairs` in both orientations and returns the number
/// of systems checked and the longest path seen.
fn route_all(g: E3CParams, pairs: &[(u64, u64)]) -> Result<(usize, usize), String> {
    let width = 2 * g.len(2) + 2;
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get()).min(16);
    let chunk = pairs.len().div_ceil(threads).max(1);
    let parts: Vec<Result<(usize, usize), String>> = std::thread::scope(|scope| {
        let handles: Vec<_> = pairs
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    let (mut count, mut longest) = (0, 0);
                    for &(a, b) in part {
                        for (a, b) in [(a, b), (b, a)] {
                            let u = E3CVertex::from_index(g, a).unwrap();
                            let v = E3CVertex::from_index(g, b).unwrap();
                            let sys = construct_path_system(&u, &v).map_err(|e| format!("{u} {v}: {e}"))?;
                            let bound = case_bound(&classify_pair(&u, &v).unwrap(), g);
                            let flat: Vec<Vec<String>> =
                                sys.paths.iter().map(|p| p.iter().map(ToString::to_string).collect()).collect();
                            let (us, vs) = (u.to_string(), v.to_string());
                            disjoint_system(&flat, &us, &vs, |x, y| adjacent(g, x, y))
                                .map_err(|e| format!("{us} {vs}: {e}"))?;
                            let max = flat.iter().map(|p| p.len() - 1).max().unwrap_or(0);
                            ensure(flat.len() == width && max <= bound && max <= g.n() + 5, || {
                                format!("{us} {vs}: {} paths, max {max}, bound {bound}", flat.len())
                            })?;
                            count += 1;
                            longest = longest.max(max);
                        }
                    }
                    Ok((count, longest))
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    parts.into_iter().try_fold((0, 0), |acc, part| {
        let (c, l) = part?;
        Ok((acc.0 + c, acc.1.max(l)))
    })
}

fn router() -> Check {
    let mut notes = Vec::new();
    for g in [p(1, 1, 1), p(1, 1, 2), p(1, 2, 2)] {
        let (count, longest) = route_all(g, &select_pairs(g, Mode::Exhaustive))?;
        ensure(count as u64 == g.vertex_count() * (g.vertex_count() - 1), || format!("{g}: only {count} systems"))?;
        notes.push(format!("{g} {count} ordered pairs max {longest}"));
    }
    let g = p(2, 2, 2);
    let (count, longest) = route_all(g, &select_pairs(g, Mode::Sampled { seed: 7, trials: 10_000 }))?;
    notes.push(format!("{g} {} seeded pairs (both orientations) max {longest}", count / 2));
    Ok(notes.join(", "))
}

fn lemma22() -> Check {
    let mut total = 0;
    for n in [2usize, 3] {
        let count = 3u64.pow(n as u32);
        for a in 0..count {
            for b in 0..count {
                if a == b {
                    continue;
                }
                let u = QnkVertex(TritString::from_index(3, n, a).unwrap());
                let v = QnkVertex(TritString::from_index(3, n, b).unwrap());
                let paths = disjoint_paths_q3(&u, &v).map_err(|e| e.to_string())?;
                let flat: Vec<Vec<String>> =
                    paths.iter().map(|p| p.vertices().iter().map(ToString::to_string).collect()).collect();
                let one_trit = |x: &str, y: &str| {
                    x.len() == y.len() && x.bytes().zip(y.bytes()).filter(|(p, q)| p != q).count() == 1
                };
                let (us, vs) = (u.to_string(), v.to_string());
                disjoint_system(&flat, &us, &vs, one_trit).map_err(|e| format!("Q_{n}^3 {us} {vs}: {e}"))?;
                let prof = path_profile(&u, &v).map_err(|e| e.to_string())?;
                let (l, h) = (prof.lee as usize, prof.hamming as usize);
                let mut want = BTreeMap::new();
                *want.entry(l).or_insert(0) += h;
                *want.entry(l + 1).or_insert(0) += h;
                *want.entry(l + 2).or_insert(0) += 2 * (n - h);
                want.retain(|_, c| *c > 0);
                let mut got = BTreeMap::new();
                for path in &flat {
                    *got.entry(path.len() - 1).or_insert(0) += 1;
                }
                ensure(got == want, || format!("Q_{n}^3 {us} {vs}: lengths {got:?}, expected {want:?}"))?;
                total += 1;
            }
        }
    }
    Ok(format!("{total} ordered pairs of Q_2^3 and Q_3^3"))
}

fn witness() -> Check {
    let mut notes = Vec::new();
    for g in [p(1, 1, 1), p(1, 1, 2), p(1, 2, 2), p(2, 2, 2)] {
        let w = theorem31_witness(g).map_err(|e| e.to_string())?;
        let faults = FaultSet::from_vertices(&w.faults);
        ensure(w.faults.len() == 2 * g.len(2) + 1, || format!("{g}: {} faults", w.faults.len()))?;
        let d = bfs_distance(g, &w.u, &w.v, &faults).map_err(|e| e.to_string())?;
        let n = g.n();
        let ok = match d {
            Distance::Finite(d) if g == p(1, 1, 1) => d == 7,
            Distance::Finite(d) => d >= n + 3,
            Distance::Unreachable => false,
        };
        ensure(ok, || format!("{g}: witness distance {d}"))?;
        notes.push(format!("{g} {d}"));
    }
    Ok(notes.join(", "))
}

fn sandwich() -> Check {
    let g = p(1, 1, 1);
    let graph = Graph::new(g).map_err(|e| e.to_string())?;
    let w = theorem31_witness(g).map_err(|e| e.to_string())?;
    let mut pairs = vec![(w.u.index(), w.v.index())];
    pairs.extend(select_pairs(g, Mode::Sampled { seed: 31, trials: 100 }));
    let mut m = Distance::Finite(0);
    for &(a, b) in &pairs {
        let fm = graph.fault_distance_max(a, b, 3, Mode::Exhaustive, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        ensure(fm.exhaustive, || "enumeration was not exhaustive".into())?;
        m = m.max(fm.max);
    }
    let wide = wide_upper_from_router(g, Mode::Exhaustive).map_err(|e| e.to_string())?;
    let m = m.finite().ok_or("some fault set disconnected a pair")?;
    ensure((7..=9).contains(&m) && wide.max <= 9, || format!("M = {m}, wide upper {}", wide.max))?;
    Ok(format!("M = {m} over {} pairs, wide upper {} over {} pairs", pairs.len(), wide.max, wide.pairs))
}

fn isomorphism() -> Check {
    let g = p(1, 1, 2);
    let vertices: Vec<E3CVertex> = all_vertices(g).collect();
    let flat: Vec<String> = vertices.iter().map(ToString::to_string).collect();
    let mut targets = Vec::new();
    for sigma in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
        let iso = block_isomorphism(g, sigma).map_err(|e| e.to_string())?;
        let h = iso.target();
        if h == g {
            continue;
        }
        let image: Vec<String> = vertices.iter().map(|u| iso.map(u).to_string()).collect();
        ensure(image.iter().collect::<HashSet<_>>().len() == image.len(), || format!("{sigma:?} is not injective"))?;
        for i in 0..flat.len() {
            for j in 0..flat.len() {
                ensure(adjacent(g, &flat[i], &flat[j]) == adjacent(h, &image[i], &image[j]), || {
                    format!("{sigma:?}: {} {} vs {} {}", flat[i], flat[j], image[i], image[j])
                })?;
            }
        }
        targets.push(h.to_string());
    }
    targets.sort();
    targets.dedup();
    ensure(targets.len() == 2, || format!("targets {targets:?}"))?;
    Ok(format!("E3C(1,1,2) onto {}", targets.join(" and ")))
}

fn degrees() -> Check {
    let g = p(1, 2, 3);
    let mut hist = BTreeMap::new();
    for u in all_vertices(g) {
        *hist.entry(e3c_neighbors(&u).len()).or_insert(0u64) += 1;
    }
    let want: BTreeMap<usize, u64> = [(4, 729), (6, 729), (8, 729)].into();
    let report = graph_metrics(g, no_extras(Mode::Exhaustive)).map_err(|e| e.to_string())?;
    ensure(hist == want && report.degree_histogram == want, || format!("histogram {hist:?}"))?;
    Ok(format!("{g} {hist:?}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("census", census),
        ("diameter", diameter),
        ("connectivity", connectivity),
        ("router soundness", router),
        ("Q_n^3 disjoint path profile", lemma22),
        ("fault-set lower bound witness", witness),
        ("fault/wide sandwich", sandwich),
        ("isomorphism", isomorphism),
        ("degree law", degrees),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} PASS {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} FAIL {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
