//! The exchanged 3-ary n-cube `E3C(r,s,t)`.
//!
//! A vertex is written `A B C d`: blocks of `r`, `s` and `t` trits followed
//! by a single trit `d` at dimension 0. Internally the blocks are indexed by
//! the `d`-value that frees them, so `block(0) = C`, `block(1) = B` and
//! `block(2) = A`. An edge either changes `d` (class E0) or changes one digit
//! of `block(d)` by ±1 (classes E1, E2, E3 for `d = 0, 1, 2`).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::trits::{Digits, TritString};

/// Block roles in printing order.
pub const ROLE_A: usize = 2;
pub const ROLE_B: usize = 1;
pub const ROLE_C: usize = 0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct E3CParams {
    pub r: usize,
    pub s: usize,
    pub t: usize,
}

impl E3CParams {
    pub fn new(r: usize, s: usize, t: usize) -> Result<Self> {
        if r == 0 || s == 0 || t == 0 {
            return Err(Error::Domain(format!("E3C({r},{s},{t}): every parameter must be at least 1")));
        }
        if r + s + t + 1 > 40 {
            return Err(Error::Domain(format!("E3C({r},{s},{t}): n = {} exceeds 40", r + s + t + 1)));
        }
        Ok(Self { r, s, t })
    }

    /// Builds from block lengths indexed by role (`[t, s, r]`).
    pub fn from_lens(lens: [usize; 3]) -> Result<Self> {
        Self::new(lens[ROLE_A], lens[ROLE_B], lens[ROLE_C])
    }

    pub fn n(&self) -> usize {
        self.r + self.s + self.t + 1
    }

    /// Block lengths indexed by role.
    pub fn lens(&self) -> [usize; 3] {
        [self.t, self.s, self.r]
    }

    pub fn len(&self, role: usize) -> usize {
        self.lens()[role]
    }

    pub fn vertex_count(&self) -> u64 {
        3u64.pow(self.n() as u32)
    }

    /// `r <= s <= t`, the order the path constructions are stated for.
    pub fn is_ordered(&self) -> bool {
        self.r <= self.s && self.s <= self.t
    }

    pub fn min_len(&self) -> usize {
        self.r.min(self.s).min(self.t)
    }

    /// First flat position of a block: the C block starts right after `d`.
    pub(crate) fn offset(&self, role: usize) -> usize {
        1 + self.lens()[..role].iter().sum::<usize>()
    }

    /// Vertex degree for a given `d` value: `2·len(block(d)) + 2`.
    pub fn degree_for(&self, d: u8) -> usize {
        2 * self.len(usize::from(d)) + 2
    }

    pub fn min_degree(&self) -> usize {
        2 * self.min_len() + 2
    }
}

impl fmt::Display for E3CParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E3C({},{},{})", self.r, self.s, self.t)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EdgeClass {
    E0,
    E1,
    E2,
    E3,
}

impl EdgeClass {
    /// The class of edges that change `block(role)`.
    pub fn for_role(role: usize) -> Self {
        [Self::E1, Self::E2, Self::E3][role]
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        ["E0", "E1", "E2", "E3"][self.index()]
    }
}

impl fmt::Display for EdgeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A vertex of `E3C(r,s,t)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct E3CVertex {
    params: E3CParams,
    blocks: [TritString; 3],
    d: u8,
}

impl E3CVertex {
    pub fn new(params: E3CParams, a: TritString, b: TritString, c: TritString, d: u8) -> Result<Self> {
        Self::from_blocks(params, [c, b, a], d)
    }

    /// Builds from blocks indexed by role.
    pub fn from_blocks(params: E3CParams, blocks: [TritString; 3], d: u8) -> Result<Self> {
        if d > 2 {
            return Err(Error::Codec(format!("d = {d} is not a trit")));
        }
        for (role, block) in blocks.iter().enumerate() {
            if block.radix() != 3 || block.len() != params.len(role) {
                return Err(Error::Codec(format!(
                    "block {} must be {} ternary digits for {params}, got {block:?}",
                    ["C", "B", "A"][role],
                    params.len(role)
                )));
            }
        }
        Ok(Self { params, blocks, d })
    }

    pub fn from_flat(params: E3CParams, flat: &TritString) -> Result<Self> {
        if flat.radix() != 3 || flat.len() != params.n() {
            return Err(Error::Codec(format!("{params} vertices are {} ternary digits, got {flat:?}", params.n())));
        }
        let digits = flat.digits();
        let block = |role: usize| {
            let off = params.offset(role);
            TritString::from_raw(3, digits[off..off + params.len(role)].iter().copied().collect())
        };
        Ok(Self { params, blocks: [block(0), block(1), block(2)], d: digits[0] })
    }

    pub fn parse(params: E3CParams, text: &str) -> Result<Self> {
        let flat = TritString::parse(3, text).map_err(|e| Error::Codec(e.to_string()))?;
        Self::from_flat(params, &flat)
    }

    pub fn from_index(params: E3CParams, index: u64) -> Result<Self> {
        let flat = TritString::from_index(3, params.n(), index)?;
        Self::from_flat(params, &flat)
    }

    pub fn to_flat(&self) -> TritString {
        let mut digits = Digits::with_capacity(self.params.n());
        digits.push(self.d);
        for block in &self.blocks {
            digits.extend_from_slice(block.digits());
        }
        TritString::from_raw(3, digits)
    }

    /// Base-3 value of the flat form, `d` least significant.
    pub fn index(&self) -> u64 {
        let mut acc = 0u64;
        for block in self.blocks.iter().rev() {
            for &digit in block.digits().iter().rev() {
                acc = acc * 3 + u64::from(digit);
            }
        }
        acc * 3 + u64::from(self.d)
    }

    pub fn params(&self) -> E3CParams {
        self.params
    }

    pub fn a(&self) -> &TritString {
        &self.blocks[ROLE_A]
    }

    pub fn b(&self) -> &TritString {
        &self.blocks[ROLE_B]
    }

    pub fn c(&self) -> &TritString {
        &self.blocks[ROLE_C]
    }

    pub fn d(&self) -> u8 {
        self.d
    }

    pub fn block(&self, role: usize) -> &TritString {
        &self.blocks[role]
    }

    pub fn blocks(&self) -> &[TritString; 3] {
        &self.blocks
    }

    /// The block edges out of this vertex may change.
    pub fn free_block(&self) -> &TritString {
        &self.blocks[usize::from(self.d)]
    }

    pub fn with_block(&self, role: usize, block: TritString) -> Self {
        debug_assert_eq!(block.len(), self.params.len(role));
        let mut out = self.clone();
        out.blocks[role] = block;
        out
    }

    pub fn with_d(&self, d: u8) -> Self {
        debug_assert!(d < 3);
        Self { d, ..self.clone() }
    }
}

impl fmt::Display for E3CVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}{}", self.a(), self.b(), self.c(), self.d)
    }
}

impl fmt::Debug for E3CVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}|{}|{}", self.a(), self.b(), self.c(), self.d)
    }
}

/// Adjacency per the four edge classes; `None` when not adjacent.
pub fn edge_class(x: &E3CVertex, y: &E3CVertex) -> Option<EdgeClass> {
    if x.params != y.params {
        return None;
    }
    if x.d != y.d {
        return (x.blocks == y.blocks).then_some(EdgeClass::E0);
    }
    let role = usize::from(x.d);
    if (0..3).any(|j| j != role && x.blocks[j] != y.blocks[j]) {
        return None;
    }
    let (p, q) = (x.blocks[role].digits(), y.blocks[role].digits());
    // Any single differing trit is a ±1 change mod 3.
    (p.iter().zip(q).filter(|(a, b)| a != b).count() == 1).then(|| EdgeClass::for_role(role))
}

/// All neighbors with their edge classes, sorted by vertex index.
pub fn e3c_neighbors(u: &E3CVertex) -> Vec<(E3CVertex, EdgeClass)> {
    let role = usize::from(u.d);
    let free = &u.blocks[role];
    let mut out = Vec::with_capacity(2 * free.len() + 2);
    out.push((u.with_d((u.d + 1) % 3), EdgeClass::E0));
    out.push((u.with_d((u.d + 2) % 3), EdgeClass::E0));
    for pos in 0..free.len() {
        for delta in [1, 2] {
            out.push((u.with_block(role, free.shifted(pos, delta)), EdgeClass::for_role(role)));
        }
    }
    out.sort_by_key(|(v, _)| v.index());
    out
}

pub fn e3c_degree(u: &E3CVertex) -> usize {
    u.params.degree_for(u.d)
}

/// Neighbor indices of a vertex index, appended to `out` (unsorted). Used by
/// the oracles, which work on dense index arrays.
pub fn neighbor_indices(params: &E3CParams, index: u64, out: &mut Vec<u64>) {
    let d = index % 3;
    let base = index - d;
    out.push(base + (d + 1) % 3);
    out.push(base + (d + 2) % 3);
    let role = d as usize;
    let off = params.offset(role);
    let mut place = 3u64.pow(off as u32);
    for _ in 0..params.len(role) {
        let digit = (index / place) % 3;
        let cleared = index - digit * place;
        out.push(cleared + ((digit + 1) % 3) * place);
        out.push(cleared + ((digit + 2) % 3) * place);
        place *= 3;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SubcubeClass {
    L,
    M,
    R,
}

impl SubcubeClass {
    pub fn for_d(d: u8) -> Self {
        [Self::L, Self::M, Self::R][usize::from(d)]
    }
}

/// The `Q_m^3` copy containing a vertex, named by its frozen blocks in
/// `A, B, C` order (L: `(A, B)`, M: `(A, C)`, R: `(B, C)`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubcubeId {
    pub class: SubcubeClass,
    pub frozen: [TritString; 2],
}

impl fmt::Display for SubcubeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}({},{})", self.class, self.frozen[0], self.frozen[1])
    }
}

pub fn subcube_id(u: &E3CVertex) -> SubcubeId {
    let role = usize::from(u.d);
    let mut frozen = [ROLE_A, ROLE_B, ROLE_C].into_iter().filter(|&j| j != role).map(|j| u.blocks[j].clone());
    SubcubeId { class: SubcubeClass::for_d(u.d), frozen: [frozen.next().unwrap(), frozen.next().unwrap()] }
}

/// The two E0 neighbors, `d + 1` then `d + 2` (mod 3).
pub fn external_neighbors(u: &E3CVertex) -> (E3CVertex, E3CVertex) {
    (u.with_d((u.d + 1) % 3), u.with_d((u.d + 2) % 3))
}

/// A relabeling of `d`-values, `sigma[d] = d'`, with each block carried to
/// the role of its new label. It maps `E3C` with block lengths `len` onto
/// `E3C` with `len'[sigma[j]] = len[j]`, taking E0 edges to E0 edges and an
/// edge through `block(j)` to one through `block(sigma[j])`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Isomorphism {
    source: E3CParams,
    target: E3CParams,
    sigma: [u8; 3],
}

impl Isomorphism {
    pub fn new(source: E3CParams, sigma: [u8; 3]) -> Result<Self> {
        let mut seen = [false; 3];
        for &x in &sigma {
            if x > 2 || seen[usize::from(x)] {
                return Err(Error::Domain(format!("{sigma:?} is not a permutation of 0, 1, 2")));
            }
            seen[usize::from(x)] = true;
        }
        let lens = source.lens();
        let mut image = [0; 3];
        for j in 0..3 {
            image[usize::from(sigma[j])] = lens[j];
        }
        Ok(Self { source, target: E3CParams::from_lens(image)?, sigma })
    }

    /// Like `new`, but checks the image against an expected target.
    pub fn between(source: E3CParams, target: E3CParams, sigma: [u8; 3]) -> Result<Self> {
        let iso = Self::new(source, sigma)?;
        if iso.target != target {
            return Err(Error::Domain(format!("{sigma:?} maps {source} onto {}, not {target}", iso.target)));
        }
        Ok(iso)
    }

    pub fn identity(params: E3CParams) -> Self {
        Self { source: params, target: params, sigma: [0, 1, 2] }
    }

    /// The relabeling onto the ordered parameters (`r <= s <= t`), choosing
    /// the identity whenever the source is already ordered.
    pub fn normalizing(params: E3CParams) -> Self {
        let perms = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        perms
            .into_iter()
            .map(|sigma| Self::new(params, sigma).expect("fixed permutations"))
            .find(|iso| iso.target.is_ordered())
            .expect("some relabeling sorts the block lengths")
    }

    pub fn source(&self) -> E3CParams {
        self.source
    }

    pub fn target(&self) -> E3CParams {
        self.target
    }

    pub fn sigma(&self) -> [u8; 3] {
        self.sigma
    }

    pub fn is_identity(&self) -> bool {
        self.sigma == [0, 1, 2]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = [0u8; 3];
        for (j, &x) in self.sigma.iter().enumerate() {
            inv[usize::from(x)] = j as u8;
        }
        Self { source: self.target, target: self.source, sigma: inv }
    }

    pub fn map(&self, u: &E3CVertex) -> E3CVertex {
        debug_assert_eq!(u.params, self.source);
        let mut blocks = u.blocks.clone();
        for j in 0..3 {
            blocks[usize::from(self.sigma[j])] = u.blocks[j].clone();
        }
        E3CVertex { params: self.target, blocks, d: self.sigma[usize::from(u.d)] }
    }
}

/// `block_isomorphism` as a free function: the map induced by `sigma`.
pub fn block_isomorphism(params: E3CParams, sigma: [u8; 3]) -> Result<Isomorphism> {
    Isomorphism::new(params, sigma)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub vertices: u64,
    pub edges: u64,
    /// Edge counts for E0, E1, E2, E3.
    pub per_class: [u64; 4],
}

/// Counts vertices and edges by enumerating every vertex's neighborhood.
pub fn graph_census(params: E3CParams) -> Census {
    let mut per_class = [0u64; 4];
    let total = params.vertex_count();
    for index in 0..total {
        let d = index % 3;
        // Each d-triangle contributes 3 E0 edges, counted once at d = 0.
        if d == 0 {
            per_class[0] += 3;
        }
        // Each free-block edge is counted from both ends.
        per_class[d as usize + 1] += params.len(d as usize) as u64;
    }
    let edges = per_class.iter().sum();
    Census { vertices: total, edges, per_class }
}

/// Closed form `(n + 2)·3^(n-1)` of the edge count.
pub fn edge_count_formula(params: E3CParams) -> u64 {
    (params.n() as u64 + 2) * 3u64.pow(params.n() as u32 - 1)
}

/// Every vertex, in index order.
pub fn all_vertices(params: E3CParams) -> impl Iterator<Item = E3CVertex> {
    (0..params.vertex_count()).map(move |i| E3CVertex::from_index(params, i).expect("index in range"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trits::hamming_distance;
    use proptest::prelude::*;
    use std::collections::{HashMap, HashSet, VecDeque};

    fn p(r: usize, s: usize, t: usize) -> E3CParams {
        E3CParams::new(r, s, t).unwrap()
    }

    fn v(params: E3CParams, text: &str) -> E3CVertex {
        E3CVertex::parse(params, text).unwrap()
    }

    fn names(list: &[(E3CVertex, EdgeClass)]) -> Vec<String> {
        list.iter().map(|(x, _)| x.to_string()).collect()
    }

    /// The four edge-class predicates written directly with range Hamming sums.
    fn literal_class(params: E3CParams, x: &TritString, y: &TritString) -> Option<EdgeClass> {
        let (s, t, top) = (params.s, params.t, params.n() - 1);
        let h = |p: usize, q: usize| hamming_distance(x, y, Some((p, q))).unwrap();
        let (x0, y0) = (x.digit(0), y.digit(0));
        if h(1, top) == 0 && x0 != y0 {
            Some(EdgeClass::E0)
        } else if h(t + 1, top) == 0 && h(1, t) == 1 && x0 == 0 && y0 == 0 {
            Some(EdgeClass::E1)
        } else if h(s + t + 1, top) == 0 && h(t + 1, s + t) == 1 && h(1, t) == 0 && x0 == 1 && y0 == 1 {
            Some(EdgeClass::E2)
        } else if h(s + t + 1, top) == 1 && h(1, s + t) == 0 && x0 == 2 && y0 == 2 {
            Some(EdgeClass::E3)
        } else {
            None
        }
    }

    #[test]
    fn codec_examples() {
        let g = p(1, 1, 1);
        let zero = v(g, "0000");
        assert_eq!(
            (zero.a().to_string(), zero.b().to_string(), zero.c().to_string(), zero.d()),
            ("0".into(), "0".into(), "0".into(), 0)
        );
        assert_eq!(zero.index(), 0);
        assert_eq!(E3CVertex::from_index(g, 1).unwrap().to_string(), "0001");
        let w = v(p(1, 1, 2), "01220");
        assert_eq!(
            (w.a().to_string(), w.b().to_string(), w.c().to_string(), w.d()),
            ("0".into(), "1".into(), "22".into(), 0)
        );
        assert!(matches!(E3CVertex::parse(g, "000"), Err(Error::Codec(_))));
        assert!(matches!(E3CVertex::parse(g, "0003"), Err(Error::Codec(_))));
        assert!(E3CVertex::from_index(g, 81).is_err());
        assert!(E3CParams::new(0, 1, 1).is_err());
    }

    #[test]
    fn codec_round_trip_exhaustive() {
        let g = p(1, 1, 2);
        for i in 0..g.vertex_count() {
            let x = E3CVertex::from_index(g, i).unwrap();
            assert_eq!(x.index(), i);
            assert_eq!(x.to_flat().index(), i);
            assert_eq!(E3CVertex::from_flat(g, &x.to_flat()).unwrap(), x);
            assert_eq!(E3CVertex::parse(g, &x.to_string()).unwrap(), x);
        }
    }

    #[test]
    fn neighbor_examples() {
        let g = p(1, 1, 1);
        assert_eq!(names(&e3c_neighbors(&v(g, "0000"))), ["0001", "0002", "0010", "0020"]);
        assert_eq!(names(&e3c_neighbors(&v(g, "0002"))), ["0000", "0001", "1002", "2002"]);
        for x in all_vertices(p(1, 2, 2)).filter(|x| x.d() == 1) {
            assert_eq!(e3c_neighbors(&x).len(), 6);
        }
    }

    #[test]
    fn degree_law() {
        assert!(all_vertices(p(1, 1, 1)).all(|x| e3c_degree(&x) == 4));
        let g = p(1, 2, 3);
        let mut hist = HashMap::new();
        for x in all_vertices(g) {
            assert_eq!(e3c_degree(&x), e3c_neighbors(&x).len());
            *hist.entry(e3c_degree(&x)).or_insert(0) += 1;
        }
        assert_eq!(hist, HashMap::from([(4, 729), (6, 729), (8, 729)]));
        assert_eq!(all_vertices(g).filter(|x| x.d() == 0).map(|x| e3c_degree(&x)).next(), Some(8));
        assert_eq!(g.min_degree(), 4);
    }

    #[test]
    fn adjacency_matches_literal_definition() {
        for g in [p(1, 1, 1), p(1, 2, 1)] {
            let all: Vec<_> = all_vertices(g).collect();
            for x in &all {
                let nbrs: HashMap<u64, EdgeClass> = e3c_neighbors(x).into_iter().map(|(y, c)| (y.index(), c)).collect();
                for y in &all {
                    let literal = literal_class(g, &x.to_flat(), &y.to_flat());
                    assert_eq!(literal, nbrs.get(&y.index()).copied(), "{x} {y}");
                    assert_eq!(literal, edge_class(x, y));
                }
            }
        }
    }

    #[test]
    fn index_neighbors_agree() {
        let g = p(2, 1, 3);
        let mut buf = Vec::new();
        for x in all_vertices(g) {
            buf.clear();
            neighbor_indices(&g, x.index(), &mut buf);
            buf.sort();
            let expected: Vec<u64> = e3c_neighbors(&x).iter().map(|(y, _)| y.index()).collect();
            assert_eq!(buf, expected);
        }
    }

    #[test]
    fn adjacency_symmetric_and_irreflexive() {
        for g in [p(1, 1, 1), p(1, 1, 2)] {
            for x in all_vertices(g) {
                for (y, class) in e3c_neighbors(&x) {
                    assert_ne!(x, y);
                    assert!(e3c_neighbors(&y).contains(&(x.clone(), class)));
                }
            }
        }
    }

    #[test]
    fn census_counts() {
        assert_eq!((graph_census(p(1, 1, 1)).vertices, graph_census(p(1, 1, 1)).edges), (81, 162));
        assert_eq!((graph_census(p(1, 1, 2)).vertices, graph_census(p(1, 1, 2)).edges), (243, 567));
        for g in [p(1, 1, 1), p(1, 1, 2), p(1, 2, 2), p(2, 1, 3)] {
            let census = graph_census(g);
            assert_eq!(census.edges, edge_count_formula(g));
            assert_eq!(census.per_class[0], g.vertex_count());
            let degree_sum: usize = all_vertices(g).map(|x| e3c_degree(&x)).sum();
            assert_eq!(degree_sum as u64, 2 * census.edges);
            // independent count of unordered pairs by class
            let mut counted = [0u64; 4];
            for x in all_vertices(g) {
                for (y, class) in e3c_neighbors(&x) {
                    if y.index() > x.index() {
                        counted[class.index()] += 1;
                    }
                }
            }
            assert_eq!(counted, census.per_class);
        }
    }

    #[test]
    fn subcube_examples() {
        let g = p(1, 1, 1);
        let id = subcube_id(&v(g, "0000"));
        assert_eq!(id.class, SubcubeClass::L);
        assert_eq!(id.frozen.map(|b| b.to_string()), ["0".to_string(), "0".to_string()]);
        let id = subcube_id(&v(g, "0001"));
        assert_eq!(id.class, SubcubeClass::M);
        let g = p(1, 1, 2);
        let ls: HashSet<_> = all_vertices(g).filter(|x| x.d() == 0).map(|x| subcube_id(&x)).collect();
        assert_eq!(ls.len(), 9);
        let ms: HashSet<_> = all_vertices(g).filter(|x| x.d() == 1).map(|x| subcube_id(&x)).collect();
        assert_eq!(ms.len(), 27);
    }

    #[test]
    fn no_edges_between_sibling_subcubes() {
        for g in [p(1, 1, 1), p(1, 1, 2), p(1, 2, 2)] {
            for x in all_vertices(g) {
                for (y, _) in e3c_neighbors(&x) {
                    if x.d() == y.d() {
                        assert_eq!(subcube_id(&x), subcube_id(&y));
                    }
                }
            }
        }
    }

    #[test]
    fn subcubes_are_ternary_cubes() {
        use crate::qn3::qnk_adjacent;
        let g = p(1, 2, 2);
        let all: Vec<_> = all_vertices(g).collect();
        for x in &all {
            for y in &all {
                if subcube_id(x) == subcube_id(y) {
                    let free = usize::from(x.d());
                    assert_eq!(edge_class(x, y).is_some(), qnk_adjacent(x.block(free), y.block(free)));
                }
            }
        }
    }

    #[test]
    fn external_neighbor_structure() {
        let g = p(1, 1, 1);
        let (a, b) = external_neighbors(&v(g, "0000"));
        assert_eq!((a.to_string(), b.to_string()), ("0001".into(), "0002".into()));
        for x in all_vertices(g) {
            let (a, b) = external_neighbors(&x);
            assert_eq!(edge_class(&a, &b), Some(EdgeClass::E0));
            assert_eq!(edge_class(&x, &a), Some(EdgeClass::E0));
            assert_ne!(subcube_id(&a).class, subcube_id(&b).class);
            assert_ne!(subcube_id(&a).class, subcube_id(&x).class);
        }
        // distinct vertices of one subcube have externals in distinct subcubes
        let all: Vec<_> = all_vertices(g).collect();
        for x in &all {
            for y in &all {
                if x != y && subcube_id(x) == subcube_id(y) {
                    let (xa, xb) = external_neighbors(x);
                    let (ya, yb) = external_neighbors(y);
                    assert_ne!(subcube_id(&xa), subcube_id(&ya));
                    assert_ne!(subcube_id(&xb), subcube_id(&yb));
                }
            }
        }
    }

    fn eccentricity(g: E3CParams, start: u64) -> usize {
        let mut dist = vec![usize::MAX; g.vertex_count() as usize];
        dist[start as usize] = 0;
        let mut queue = VecDeque::from([start]);
        let mut buf = Vec::new();
        let mut far = 0;
        while let Some(x) = queue.pop_front() {
            buf.clear();
            neighbor_indices(&g, x, &mut buf);
            for &y in &buf {
                if dist[y as usize] == usize::MAX {
                    dist[y as usize] = dist[x as usize] + 1;
                    far = far.max(dist[y as usize]);
                    queue.push_back(y);
                }
            }
        }
        assert!(dist.iter().all(|&d| d != usize::MAX));
        far
    }

    #[test]
    fn diameter_is_n_plus_2() {
        for (g, want) in [(p(1, 1, 1), 6), (p(1, 1, 2), 7)] {
            let diameter = (0..g.vertex_count()).map(|i| eccentricity(g, i)).max().unwrap();
            assert_eq!(diameter, want);
        }
    }

    fn assert_isomorphism(iso: &Isomorphism) {
        let (src, dst) = (iso.source(), iso.target());
        let mapped: Vec<E3CVertex> = all_vertices(src).map(|x| iso.map(&x)).collect();
        let distinct: HashSet<u64> = mapped.iter().map(E3CVertex::index).collect();
        assert_eq!(distinct.len() as u64, dst.vertex_count());
        let inv = iso.inverse();
        for (x, fx) in all_vertices(src).zip(&mapped) {
            assert_eq!(&inv.map(fx), &x);
            let image: HashSet<u64> = e3c_neighbors(&x).iter().map(|(y, _)| iso.map(y).index()).collect();
            let actual: HashSet<u64> = e3c_neighbors(fx).iter().map(|(y, _)| y.index()).collect();
            assert_eq!(image, actual, "{x} -> {fx}");
            for (y, class) in e3c_neighbors(&x) {
                let mapped_class = edge_class(fx, &iso.map(&y)).unwrap();
                match class {
                    EdgeClass::E0 => assert_eq!(mapped_class, EdgeClass::E0),
                    other => assert_eq!(mapped_class, EdgeClass::for_role(usize::from(iso.sigma()[other.index() - 1]))),
                }
            }
        }
    }

    #[test]
    fn isomorphism_examples() {
        let g = p(1, 1, 2);
        let id = Isomorphism::new(g, [0, 1, 2]).unwrap();
        assert!(all_vertices(g).all(|x| id.map(&x) == x));
        let st = Isomorphism::between(g, p(1, 2, 1), [1, 0, 2]).unwrap();
        assert_isomorphism(&st);
        let rt = Isomorphism::between(p(1, 2, 2), p(2, 2, 1), [2, 1, 0]).unwrap();
        assert_isomorphism(&rt);
        assert!(Isomorphism::between(g, p(2, 1, 1), [1, 0, 2]).is_err());
        assert!(Isomorphism::new(g, [0, 0, 2]).is_err());
        for sigma in [[0, 2, 1], [1, 2, 0], [2, 0, 1]] {
            assert_isomorphism(&Isomorphism::new(g, sigma).unwrap());
        }
    }

    #[test]
    fn normalizing_orders_params() {
        for (r, s, t) in [(2, 1, 1), (1, 2, 1), (3, 1, 2), (1, 1, 1), (2, 3, 1)] {
            let iso = Isomorphism::normalizing(p(r, s, t));
            assert!(iso.target().is_ordered());
        }
        assert!(Isomorphism::normalizing(p(1, 2, 3)).is_identity());
    }

    proptest! {
        #[test]
        fn index_round_trip(r in 1usize..4, s in 1usize..4, t in 1usize..4, seed in any::<u64>()) {
            let g = p(r, s, t);
            let i = seed % g.vertex_count();
            let x = E3CVertex::from_index(g, i).unwrap();
            prop_assert_eq!(x.index(), i);
            prop_assert_eq!(E3CVertex::parse(g, &x.to_string()).unwrap(), x);
        }

        #[test]
        fn isomorphism_preserves_neighbors(r in 1usize..4, s in 1usize..4, t in 1usize..4, seed in any::<u64>(), which in 0usize..6) {
            let g = p(r, s, t);
            let sigma = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]][which];
            let iso = Isomorphism::new(g, sigma).unwrap();
            let x = E3CVertex::from_index(g, seed % g.vertex_count()).unwrap();
            let image: HashSet<u64> = e3c_neighbors(&x).iter().map(|(y, _)| iso.map(y).index()).collect();
            let actual: HashSet<u64> = e3c_neighbors(&iso.map(&x)).iter().map(|(y, _)| y.index()).collect();
            prop_assert_eq!(image, actual);
        }
    }
}
