//! The k-ary n-cube `Q_n^k`: adjacency, Lee-distance shortest paths and the
//! `2n` internally disjoint path system of a ternary cube.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::trits::{hamming_distance, lee_distance, TritString};

/// A vertex of `Q_n^k`; its coordinates are a length-`n` base-`k` string.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QnkVertex(pub TritString);

impl QnkVertex {
    pub fn parse(radix: u8, text: &str) -> Result<Self> {
        TritString::parse(radix, text).map(Self)
    }

    pub fn coords(&self) -> &TritString {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }
}

impl std::fmt::Display for QnkVertex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// True when `x` and `y` differ in exactly one position, by `±1 (mod k)`.
pub fn qnk_adjacent(x: &TritString, y: &TritString) -> bool {
    if x.radix() != y.radix() || x.len() != y.len() {
        return false;
    }
    let k = x.radix();
    let mut diffs = x.digits().iter().zip(y.digits()).filter(|(a, b)| a != b);
    match (diffs.next(), diffs.next()) {
        (Some((&a, &b)), None) => {
            let delta = (a + k - b) % k;
            delta == 1 || delta == k - 1
        }
        _ => false,
    }
}

/// A simple path of `Q_n^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPath {
    vertices: Vec<QnkVertex>,
}

impl QPath {
    /// Checks adjacency of consecutive vertices and pairwise distinctness.
    pub fn new(vertices: Vec<QnkVertex>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Domain("a path needs at least one vertex".into()));
        }
        for pair in vertices.windows(2) {
            if !qnk_adjacent(&pair[0].0, &pair[1].0) {
                return Err(Error::Domain(format!("{} and {} are not adjacent", pair[0], pair[1])));
            }
        }
        let distinct: HashSet<_> = vertices.iter().collect();
        if distinct.len() != vertices.len() {
            return Err(Error::Domain("path revisits a vertex".into()));
        }
        Ok(Self { vertices })
    }

    fn from_digits(steps: Vec<TritString>) -> Self {
        Self { vertices: steps.into_iter().map(QnkVertex).collect() }
    }

    pub fn vertices(&self) -> &[QnkVertex] {
        &self.vertices
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn source(&self) -> &QnkVertex {
        &self.vertices[0]
    }

    pub fn target(&self) -> &QnkVertex {
        self.vertices.last().expect("paths are non-empty")
    }

    pub fn interior(&self) -> &[QnkVertex] {
        if self.vertices.len() <= 2 {
            &[]
        } else {
            &self.vertices[1..self.vertices.len() - 1]
        }
    }
}

/// Lee/Hamming summary of a vertex pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPathProfile {
    /// Lee distance `l`.
    pub lee: u32,
    /// Hamming distance `h`.
    pub hamming: u32,
    /// Per-dimension Lee distances `w_i`, position 0 first.
    pub per_dimension: Vec<u32>,
}

pub fn path_profile(u: &QnkVertex, v: &QnkVertex) -> Result<QPathProfile> {
    let lee = lee_distance(&u.0, &v.0)?;
    let hamming = hamming_distance(&u.0, &v.0, None)?;
    let k = u32::from(u.0.radix());
    let per_dimension =
        u.0.digits()
            .iter()
            .zip(v.0.digits())
            .map(|(&a, &b)| {
                let diff = (u32::from(a) + k - u32::from(b)) % k;
                diff.min(k - diff)
            })
            .collect();
    Ok(QPathProfile { lee, hamming, per_dimension })
}

/// Neighbors in `Q_n^k`, in index order and deduplicated (for `k = 2` the `±1` moves coincide).
pub fn qnk_neighbors(v: &QnkVertex) -> Vec<QnkVertex> {
    let k = v.0.radix();
    let mut out: Vec<QnkVertex> =
        (0..v.dimension()).flat_map(|i| [v.0.shifted(i, 1), v.0.shifted(i, k - 1)]).map(QnkVertex).collect();
    out.sort_by_key(|x| x.0.index());
    out.dedup();
    out
}

fn require_ternary(u: &TritString, v: &TritString) -> Result<()> {
    if u.radix() != 3 || v.radix() != 3 {
        return Err(Error::Domain("ternary cube operations require radix 3".into()));
    }
    if u.len() != v.len() {
        return Err(Error::Dimension("vertices of different dimension".into()));
    }
    Ok(())
}

/// Positions where `u` and `v` differ, increasing.
fn differing(u: &TritString, v: &TritString) -> Vec<usize> {
    (0..u.len()).filter(|&i| u.digit(i) != v.digit(i)).collect()
}

/// Corrects the positions in `order` one at a time, starting from `start`.
/// Every step is one ternary edge since a nonzero difference mod 3 is `±1`.
fn correct_in_order(start: &TritString, target: &TritString, order: &[usize], out: &mut Vec<TritString>) {
    let mut cur = start.clone();
    for &i in order {
        if cur.digit(i) != target.digit(i) {
            cur = cur.with_digit(i, target.digit(i));
            out.push(cur.clone());
        }
    }
}

/// Minimal path from `u` to `v`, correcting positions in increasing order.
pub(crate) fn shortest_digits(u: &TritString, v: &TritString) -> Vec<TritString> {
    let mut out = vec![u.clone()];
    correct_in_order(u, v, &differing(u, v), &mut out);
    out
}

/// Shortest path of `Q_n^3` (length `lee_distance(u, v)`).
///
/// Without `avoid` the lowest differing dimension is corrected first. With an
/// avoid set the first minimal path in that same preference order whose
/// intermediate vertices miss the set is returned; endpoints are never checked
/// against it.
pub fn shortest_path_q3(u: &QnkVertex, v: &QnkVertex, avoid: Option<&HashSet<QnkVertex>>) -> Result<QPath> {
    require_ternary(&u.0, &v.0)?;
    let avoid = match avoid {
        None => return Ok(QPath::from_digits(shortest_digits(&u.0, &v.0))),
        Some(set) => set,
    };
    let diff = differing(&u.0, &v.0);
    if diff.len() > 63 {
        return Err(Error::Domain("avoid-set routing supports at most 63 differing positions".into()));
    }
    let full: u64 = if diff.is_empty() { 0 } else { (1u64 << diff.len()) - 1 };
    let mut dead = HashSet::new();
    let mut stack = vec![u.0.clone()];
    if search_minimal(&v.0, &diff, 0, full, avoid, &mut dead, &mut stack) {
        Ok(QPath::from_digits(stack))
    } else {
        Err(Error::defect(format!("every minimal path from {u} to {v} meets the avoid set")))
    }
}

fn search_minimal(
    target: &TritString,
    diff: &[usize],
    done: u64,
    full: u64,
    avoid: &HashSet<QnkVertex>,
    dead: &mut HashSet<u64>,
    stack: &mut Vec<TritString>,
) -> bool {
    if done == full {
        return true;
    }
    for (bit, &pos) in diff.iter().enumerate() {
        if done & (1 << bit) != 0 {
            continue;
        }
        let next_done = done | (1 << bit);
        if dead.contains(&next_done) {
            continue;
        }
        let next = stack.last().unwrap().with_digit(pos, target.digit(pos));
        if next_done != full && avoid.contains(&QnkVertex(next.clone())) {
            dead.insert(next_done);
            continue;
        }
        stack.push(next);
        if search_minimal(target, diff, next_done, full, avoid, dead, stack) {
            return true;
        }
        stack.pop();
        dead.insert(next_done);
    }
    false
}

/// The `2n` internally disjoint `u`–`v` paths of `Q_n^3`, as digit strings.
///
/// With `h` differing positions and `l = h`, the system holds, in this order:
/// `h` minimal paths (the one for position `i` corrects the differing
/// positions cyclically starting at `i`), `h` paths of length `l + 1` that
/// first move position `i` to its third residue and fix it last, and for each
/// of the `n - h` agreeing positions two detours of length `l + 2` through its
/// other two residues.
pub(crate) fn disjoint_digit_paths(u: &TritString, v: &TritString) -> Vec<Vec<TritString>> {
    let diff = differing(u, v);
    let h = diff.len();
    let mut paths = Vec::with_capacity(2 * u.len());

    for start in 0..h {
        let order: Vec<usize> = (0..h).map(|j| diff[(start + j) % h]).collect();
        let mut p = vec![u.clone()];
        correct_in_order(u, v, &order, &mut p);
        paths.push(p);
    }

    for start in 0..h {
        let pos = diff[start];
        let third = 3 - u.digit(pos) - v.digit(pos);
        let first = u.with_digit(pos, third);
        let mut p = vec![u.clone(), first.clone()];
        let rest: Vec<usize> = (1..h).map(|j| diff[(start + j) % h]).collect();
        correct_in_order(&first, v, &rest, &mut p);
        p.push(v.clone());
        paths.push(p);
    }

    for pos in (0..u.len()).filter(|&i| u.digit(i) == v.digit(i)) {
        for delta in [1u8, 2] {
            let first = u.shifted(pos, delta);
            let mut p = vec![u.clone(), first.clone()];
            correct_in_order(&first, &v.with_digit(pos, first.digit(pos)), &diff, &mut p);
            p.push(v.clone());
            paths.push(p);
        }
    }
    paths
}

/// The `2n` internally disjoint paths between distinct vertices of `Q_n^3`,
/// with length multiset `{l × h, (l+1) × h, (l+2) × 2(n−h)}`.
pub fn disjoint_paths_q3(u: &QnkVertex, v: &QnkVertex) -> Result<Vec<QPath>> {
    require_ternary(&u.0, &v.0)?;
    if u == v {
        return Err(Error::Domain("disjoint paths need distinct endpoints".into()));
    }
    Ok(disjoint_digit_paths(&u.0, &v.0).into_iter().map(QPath::from_digits).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::VecDeque;

    fn q(s: &str) -> QnkVertex {
        QnkVertex::parse(3, s).unwrap()
    }

    fn all(n: usize) -> Vec<QnkVertex> {
        (0..3u64.pow(n as u32)).map(|i| QnkVertex(TritString::from_index(3, n, i).unwrap())).collect()
    }

    fn bfs_distance(u: &QnkVertex, v: &QnkVertex) -> usize {
        let mut seen = HashSet::from([u.clone()]);
        let mut queue = VecDeque::from([(u.clone(), 0)]);
        while let Some((x, d)) = queue.pop_front() {
            if &x == v {
                return d;
            }
            for y in qnk_neighbors(&x) {
                if seen.insert(y.clone()) {
                    queue.push_back((y, d + 1));
                }
            }
        }
        unreachable!("Q_n^k is connected")
    }

    fn assert_valid_system(u: &QnkVertex, v: &QnkVertex, paths: &[QPath]) {
        let mut interior = HashSet::new();
        for p in paths {
            QPath::new(p.vertices().to_vec()).unwrap();
            assert_eq!(p.source(), u);
            assert_eq!(p.target(), v);
            for x in p.interior() {
                assert!(interior.insert(x.clone()), "{x} shared between paths from {u} to {v}");
            }
        }
    }

    #[test]
    fn neighbors_examples() {
        let names = |v: &str| qnk_neighbors(&q(v)).iter().map(|x| x.to_string()).collect::<Vec<_>>();
        assert_eq!(names("00"), ["01", "02", "10", "20"]);
        assert_eq!(names("0"), ["1", "2"]);
        for v in all(2) {
            assert_eq!(qnk_neighbors(&v).len(), 4);
        }
        assert_eq!(qnk_neighbors(&QnkVertex::parse(2, "010").unwrap()).len(), 3);
    }

    #[test]
    fn shortest_path_examples() {
        assert_eq!(shortest_path_q3(&q("00"), &q("11"), None).unwrap().len(), 2);
        assert_eq!(shortest_path_q3(&q("12"), &q("12"), None).unwrap().vertices(), [q("12")]);
        let p = shortest_path_q3(&q("000"), &q("111"), None).unwrap();
        let names: Vec<_> = p.vertices().iter().map(|x| x.to_string()).collect();
        assert_eq!(names, ["000", "001", "011", "111"]);
    }

    #[test]
    fn shortest_path_avoid() {
        let avoid = HashSet::from([q("001")]);
        let p = shortest_path_q3(&q("000"), &q("111"), Some(&avoid)).unwrap();
        assert_eq!(p.len(), 3);
        assert!(!p.vertices().contains(&q("001")));
        let block = HashSet::from([q("01"), q("10")]);
        assert!(matches!(shortest_path_q3(&q("00"), &q("11"), Some(&block)), Err(Error::Construction(_))));
        // endpoints are exempt
        let ends = HashSet::from([q("00"), q("11")]);
        assert!(shortest_path_q3(&q("00"), &q("11"), Some(&ends)).is_ok());
        assert!(
            shortest_path_q3(&QnkVertex::parse(5, "00").unwrap(), &QnkVertex::parse(5, "11").unwrap(), None).is_err()
        );
    }

    #[test]
    fn bfs_matches_lee_distance() {
        for n in 2..=3 {
            let vs = all(n);
            let mut diameter = 0;
            for u in &vs {
                for v in &vs {
                    let d = bfs_distance(u, v);
                    assert_eq!(d as u32, lee_distance(&u.0, &v.0).unwrap());
                    assert_eq!(shortest_path_q3(u, v, None).unwrap().len(), d);
                    diameter = diameter.max(d);
                }
            }
            assert_eq!(diameter, n);
        }
        assert_eq!(all(1).iter().map(|v| bfs_distance(&all(1)[0], v)).max(), Some(1));
    }

    #[test]
    fn disjoint_paths_small_examples() {
        let tri = disjoint_paths_q3(&q("0"), &q("1")).unwrap();
        let names: Vec<Vec<String>> =
            tri.iter().map(|p| p.vertices().iter().map(|x| x.to_string()).collect()).collect();
        assert_eq!(names, [vec!["0", "1"], vec!["0", "2", "1"]]);

        let mut lens: Vec<_> = disjoint_paths_q3(&q("00"), &q("11")).unwrap().iter().map(QPath::len).collect();
        lens.sort();
        assert_eq!(lens, [2, 2, 3, 3]);

        let mut lens: Vec<_> = disjoint_paths_q3(&q("00"), &q("01")).unwrap().iter().map(QPath::len).collect();
        lens.sort();
        assert_eq!(lens, [1, 2, 3, 3]);

        assert!(disjoint_paths_q3(&q("00"), &q("00")).is_err());
    }

    #[test]
    fn disjoint_paths_profile_exhaustive() {
        for n in 1..=4 {
            let vs = all(n);
            for u in &vs {
                for v in vs.iter().filter(|v| *v != u) {
                    let paths = disjoint_paths_q3(u, v).unwrap();
                    assert_eq!(paths.len(), 2 * n);
                    assert_valid_system(u, v, &paths);
                    let prof = path_profile(u, v).unwrap();
                    let (l, h) = (prof.lee as usize, prof.hamming as usize);
                    assert_eq!(l, h);
                    assert!(prof.per_dimension.iter().all(|&w| w <= 1));
                    let mut expected = vec![l; h];
                    expected.extend(vec![l + 1; h]);
                    expected.extend(vec![l + 2; 2 * (n - h)]);
                    let mut got: Vec<_> = paths.iter().map(QPath::len).collect();
                    got.sort();
                    assert_eq!(got, expected, "{u} -> {v}");
                }
            }
        }
    }
}
