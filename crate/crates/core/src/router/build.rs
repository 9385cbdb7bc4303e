//! Small vocabulary shared by the case constructions.

use crate::e3c::{E3CParams, E3CVertex};
use crate::qn3::disjoint_digit_paths;
use crate::trits::TritString;

pub(crate) type V = E3CVertex;
pub(crate) type T = TritString;

/// Perturbation number `c` of a block: digit `c / 2` shifted by `+1` (even
/// `c`) or `+2` (odd `c`). The `i`-th fan-out neighbor uses `c = i - 1`.
pub(crate) fn perturb(block: &T, c: usize) -> T {
    block.shifted(c / 2, 1 + (c % 2) as u8)
}

/// Construction context for one graph. Single perturbations that the
/// recipes leave unspecified are read from `choices`, one slot per call to
/// [`Ctx::lone`], so a driver can retry other perturbations when the first
/// pick collides with another branch.
pub(crate) struct Ctx<'a> {
    pub g: E3CParams,
    /// Fan-out width `w`; each recipe builds `2w + 2` paths.
    pub w: usize,
    choices: &'a [usize],
    pub ranges: Vec<usize>,
    /// Enables fallback branches for parameter corners where a written
    /// recipe self-intersects.
    pub repair: bool,
}

impl<'a> Ctx<'a> {
    pub fn new(g: E3CParams, w: usize, choices: &'a [usize], repair: bool) -> Self {
        Self { g, w, choices, ranges: Vec::new(), repair }
    }

    /// Next free choice in `0..range`, `0` on the first attempt.
    pub fn choice(&mut self, range: usize) -> usize {
        let c = self.choices.get(self.ranges.len()).copied().unwrap_or(0) % range;
        self.ranges.push(range);
        c
    }

    pub fn lone(&mut self, block: &T) -> T {
        let c = self.choice(2 * block.len());
        perturb(block, c)
    }

    /// A fan rotated by a free offset, for recipes that pair the fan-out of
    /// `u` with that of `v` index by index.
    pub fn paired_fan(&mut self, block: &T) -> Vec<T> {
        let mut fan = self.fan(block);
        let k = self.choice(fan.len());
        fan.rotate_left(k);
        fan
    }

    /// The first `2w` perturbations of a block.
    pub fn fan(&self, block: &T) -> Vec<T> {
        (0..2 * self.w).map(|c| perturb(block, c)).collect()
    }

    pub fn at(&self, a: &T, b: &T, c: &T, d: u8) -> V {
        V::from_blocks(self.g, [c.clone(), b.clone(), a.clone()], d).expect("recipe blocks fit the graph")
    }

    /// `2w` internally disjoint paths inside one subcube, shortest first,
    /// except that a single-edge path (if any) is placed last.
    pub fn lemma22(&self, from: &V, to: &V) -> Vec<Vec<V>> {
        let role = usize::from(from.d());
        let mut paths: Vec<Vec<V>> = disjoint_digit_paths(from.block(role), to.block(role))
            .into_iter()
            .map(|p| p.into_iter().map(|x| from.with_block(role, x)).collect())
            .collect();
        paths.sort_by_key(Vec::len);
        paths.truncate(2 * self.w);
        if paths[0].len() == 2 {
            paths.rotate_left(1);
        }
        paths
    }

    /// Minimal path inside the subcube of `from`, lowest position first.
    pub fn shortest(&self, from: &V, to: &V) -> Vec<V> {
        Walk::new(from).within(to).end()
    }
}

pub(crate) fn blocks(u: &V) -> (T, T, T) {
    (u.a().clone(), u.b().clone(), u.c().clone())
}

/// Moves the first element whose vertex lies on `path` to the front or the
/// back, mirroring the index rotations the case analysis relies on.
pub(crate) fn rotate_member(fan: &mut [T], path: &[V], vertex: impl Fn(&T) -> V, to_front: bool) {
    if let Some(pos) = fan.iter().position(|x| path.contains(&vertex(x))) {
        if to_front {
            fan[..=pos].rotate_right(1);
        } else {
            fan[pos..].rotate_left(1);
        }
    }
}

/// A path under construction.
pub(crate) struct Walk(Vec<V>);

impl Walk {
    pub fn new(start: &V) -> Self {
        Self(vec![start.clone()])
    }

    fn last(&self) -> &V {
        self.0.last().expect("walks are non-empty")
    }

    /// One step to a neighbor.
    pub fn to(mut self, x: &V) -> Self {
        self.0.push(x.clone());
        self
    }

    /// A minimal path to `x` inside the current subcube. If `x` is outside
    /// it, the walk jumps there and the validator reports the bad edge.
    pub fn within(mut self, x: &V) -> Self {
        let cur = self.last().clone();
        let role = usize::from(cur.d());
        let mut block = cur.block(role).clone();
        for pos in 0..block.len() {
            if block.digit(pos) != x.block(role).digit(pos) {
                block = block.with_digit(pos, x.block(role).digit(pos));
                self.0.push(cur.with_block(role, block.clone()));
            }
        }
        if self.last() != x {
            self.0.push(x.clone());
        }
        self
    }

    /// Appends a vertex sequence, skipping its first vertex if it repeats the
    /// current end.
    pub fn along<'v>(mut self, seq: impl IntoIterator<Item = &'v V>) -> Self {
        for x in seq {
            if self.last() != x {
                self.0.push(x.clone());
            }
        }
        self
    }

    /// The finished path. A recipe degenerates to a closed walk when two of
    /// its named vertices coincide (say `C_i = C'`); any such loop is cut
    /// out, which only removes vertices.
    pub fn end(self) -> Vec<V> {
        let mut out: Vec<V> = Vec::with_capacity(self.0.len());
        for x in self.0 {
            if let Some(pos) = out.iter().position(|y| *y == x) {
                out.truncate(pos);
            }
            out.push(x);
        }
        out
    }
}
