//! Pair classification and construction of `2r + 2` internally disjoint
//! paths between any two vertices of `E3C(r,s,t)`.

mod build;
mod recipes;

use std::collections::HashSet;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::e3c::{edge_class, E3CParams, E3CVertex, Isomorphism, ROLE_A, ROLE_B, ROLE_C};
use crate::error::{Defect, Error, Result};
use build::Ctx;

/// Upper limit on perturbation retries per candidate construction.
const MAX_ATTEMPTS: usize = 10_000;

const PERMUTATIONS: [[u8; 3]; 6] = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];

/// Which blocks agree and which `d` values the endpoints carry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CaseLabel {
    pub eq_a: bool,
    pub eq_b: bool,
    pub eq_c: bool,
    /// Smaller `d` of the pair (both when equal).
    pub d: u8,
    pub d_prime: u8,
    /// 1..=15: bit 0 for C, bit 1 for B, bit 2 for A differing, plus 8 when
    /// `d != d'`. The value 8 alone is the pair differing only in `d`.
    pub fenlei: u8,
    /// 1..=3: `d + 1` when `d = d'`, else 1, 2, 3 for `{0,1}`, `{0,2}`, `{1,2}`.
    pub subcase: u8,
    /// True when the classification swapped the arguments to get `d < d'`.
    pub swapped: bool,
}

impl CaseLabel {
    /// Differing blocks indexed by role.
    pub fn differing(&self) -> [bool; 3] {
        [!self.eq_c, !self.eq_b, !self.eq_a]
    }

    pub fn same_d(&self) -> bool {
        self.d == self.d_prime
    }
}

/// Classifies a distinct pair.
pub fn classify_pair(u: &E3CVertex, v: &E3CVertex) -> Result<CaseLabel> {
    if u.params() != v.params() {
        return Err(Error::Dimension(format!("{} vs {}", u.params(), v.params())));
    }
    if u == v {
        return Err(Error::Domain(format!("cannot classify identical endpoints {u}")));
    }
    let eq = |role: usize| u.block(role) == v.block(role);
    let (eq_a, eq_b, eq_c) = (eq(ROLE_A), eq(ROLE_B), eq(ROLE_C));
    let mask = u8::from(!eq_c) | u8::from(!eq_b) << 1 | u8::from(!eq_a) << 2;
    let (d, d_prime, swapped) = if u.d() <= v.d() { (u.d(), v.d(), false) } else { (v.d(), u.d(), true) };
    let (fenlei, subcase) = if d == d_prime { (mask, d + 1) } else { (8 + mask, d + d_prime) };
    Ok(CaseLabel { eq_a, eq_b, eq_c, d, d_prime, fenlei, subcase, swapped })
}

/// A length bound of the form `constant + sum of the marked block lengths`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BoundExpr {
    /// Block lengths included, indexed by role.
    pub roles: [bool; 3],
    pub constant: usize,
}

impl BoundExpr {
    pub fn eval(&self, params: E3CParams) -> usize {
        self.constant + (0..3).filter(|&j| self.roles[j]).map(|j| params.len(j)).sum::<usize>()
    }

    /// The same expression after relabeling blocks by `sigma`.
    pub fn permuted(&self, sigma: [u8; 3]) -> Self {
        let mut roles = [false; 3];
        for j in 0..3 {
            roles[usize::from(sigma[j])] = self.roles[j];
        }
        Self { roles, constant: self.constant }
    }
}

impl std::fmt::Display for BoundExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (role, name) in [(ROLE_A, "r"), (ROLE_B, "s"), (ROLE_C, "t")] {
            if self.roles[role] {
                write!(f, "{name}+")?;
            }
        }
        write!(f, "{}", self.constant)
    }
}

/// The per-case bound table.
pub fn bound_expr(fenlei: u8, subcase: u8) -> Result<BoundExpr> {
    if !(1..=3).contains(&subcase) {
        return Err(Error::Domain(format!("subcase {subcase} outside 1..=3")));
    }
    let k = usize::from(subcase - 1);
    let pick = |t: [usize; 3]| t[k];
    let (letters, constant) = match fenlei {
        1 => ("C", 6),
        2 => ("B", 6),
        3 => ("BC", pick([7, 7, 5])),
        4 => ("A", 6),
        5 => ("AC", pick([7, 5, 7])),
        6 => ("AB", pick([5, 7, 7])),
        7 => ("ABC", 4),
        8 => ("", 7),
        9 => ("C", pick([6, 6, 8])),
        10 => ("B", pick([6, 8, 6])),
        11 => ("BC", 7),
        12 => ("A", pick([8, 6, 6])),
        13 => ("AC", 7),
        14 => ("AB", 7),
        15 => ("ABC", 6),
        _ => return Err(Error::Domain(format!("fenlei {fenlei} outside 1..=15"))),
    };
    let roles = [letters.contains('C'), letters.contains('B'), letters.contains('A')];
    Ok(BoundExpr { roles, constant })
}

/// The length bound for a classified pair.
pub fn case_bound(label: &CaseLabel, params: E3CParams) -> usize {
    bound_expr(label.fenlei, label.subcase).expect("labels come from classify_pair").eval(params)
}

/// `2r + 2` internally disjoint paths between two vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathSystem {
    pub source: E3CVertex,
    pub target: E3CVertex,
    pub label: CaseLabel,
    pub bound: usize,
    pub paths: Vec<Vec<E3CVertex>>,
    /// Relabeling of the graph under which the construction ran.
    pub sigma: [u8; 3],
    /// Whether a fallback branch replaced part of the written recipe.
    pub repaired: bool,
    /// Perturbation choices tried before this one succeeded.
    pub retries: usize,
}

impl PathSystem {
    /// Path lengths in edges.
    pub fn lengths(&self) -> Vec<usize> {
        self.paths.iter().map(|p| p.len() - 1).collect()
    }

    pub fn max_len(&self) -> usize {
        self.lengths().into_iter().max().unwrap_or(0)
    }

    pub fn min_len(&self) -> usize {
        self.lengths().into_iter().min().unwrap_or(0)
    }

    /// Re-runs the full set of structural checks against `bound`.
    pub fn check(&self, bound: usize) -> std::result::Result<(), String> {
        let width = 2 * self.source.params().min_len() + 2;
        validate_paths(&self.source, &self.target, &self.paths, width, bound)
    }
}

impl Serialize for PathSystem {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Case {
            fenlei: u8,
            subcase: u8,
        }
        let paths: Vec<Vec<String>> = self.paths.iter().map(|p| p.iter().map(ToString::to_string).collect()).collect();
        let mut s = serializer.serialize_struct("PathSystem", 6)?;
        s.serialize_field("source", &self.source.to_string())?;
        s.serialize_field("target", &self.target.to_string())?;
        s.serialize_field("case", &Case { fenlei: self.label.fenlei, subcase: self.label.subcase })?;
        s.serialize_field("bound", &self.bound)?;
        s.serialize_field("max_length", &self.max_len())?;
        s.serialize_field("paths", &paths)?;
        s.end()
    }
}

/// Checks that `paths` are `width` valid `u`-`v` paths, pairwise internally
/// disjoint, with at most one direct edge and none longer than `bound`.
pub fn validate_paths(
    u: &E3CVertex,
    v: &E3CVertex,
    paths: &[Vec<E3CVertex>],
    width: usize,
    bound: usize,
) -> std::result::Result<(), String> {
    if paths.len() != width {
        return Err(format!("expected {width} paths, got {}", paths.len()));
    }
    let mut interior = HashSet::new();
    let mut direct = 0;
    for (i, path) in paths.iter().enumerate() {
        if path.first() != Some(u) || path.last() != Some(v) {
            return Err(format!("path {i} does not run from {u} to {v}"));
        }
        if path.len() - 1 > bound {
            return Err(format!("path {i} has length {} > {bound}", path.len() - 1));
        }
        if path.len() == 2 {
            direct += 1;
        }
        for pair in path.windows(2) {
            if edge_class(&pair[0], &pair[1]).is_none() {
                return Err(format!("path {i}: {} and {} are not adjacent", pair[0], pair[1]));
            }
        }
        for x in &path[1..path.len() - 1] {
            if x == u || x == v {
                return Err(format!("path {i} revisits an endpoint"));
            }
            if !interior.insert(x.index()) {
                return Err(format!("vertex {x} appears twice (path {i})"));
            }
        }
    }
    if direct > 1 {
        return Err(format!("{direct} single-edge paths"));
    }
    Ok(())
}

/// Builds the path system for `u` and `v`, validated against the case bound.
///
/// Requires `r <= s <= t`; see [`Isomorphism::normalizing`] otherwise.
pub fn construct_path_system(u: &E3CVertex, v: &E3CVertex) -> Result<PathSystem> {
    let params = u.params();
    if !params.is_ordered() {
        return Err(Error::Domain(format!("{params} is not ordered; normalize with Isomorphism::normalizing")));
    }
    let label = classify_pair(u, v)?;
    let bound = case_bound(&label, params);
    let width = 2 * params.min_len() + 2;

    // Every relabeling and orientation whose image is a written subcase.
    let mut candidates = Vec::new();
    for sigma in PERMUTATIONS {
        let iso = Isomorphism::new(params, sigma)?;
        for (p, q) in [(u, v), (v, u)] {
            let (x, y) = (iso.map(p), iso.map(q));
            let image = classify_pair(&x, &y)?;
            if image.swapped {
                continue;
            }
            if let Some(recipe) = recipes::written(image.fenlei, image.subcase) {
                candidates.push((image.fenlei != label.fenlei, iso, x, y, recipe));
            }
        }
    }
    candidates.sort_by_key(|c| c.0);

    let mut last_error = String::from("no written subcase reachable by relabeling");
    let mut last_paths = Vec::new();
    for repair in [false, true] {
        for (_, iso, x, y, recipe) in &candidates {
            let back = iso.inverse();
            let mut choices: Vec<usize> = Vec::new();
            for retries in 0..MAX_ATTEMPTS {
                let mut cx = Ctx::new(iso.target(), params.min_len(), &choices, repair);
                let image_paths = recipe(&mut cx, x, y);
                let ranges = cx.ranges;
                let paths: Vec<Vec<E3CVertex>> = image_paths
                    .iter()
                    .map(|p| {
                        let mut q: Vec<E3CVertex> = p.iter().map(|z| back.map(z)).collect();
                        if q.first() != Some(u) {
                            q.reverse();
                        }
                        q
                    })
                    .collect();
                match validate_paths(u, v, &paths, width, bound) {
                    Ok(()) => {
                        return Ok(PathSystem {
                            source: u.clone(),
                            target: v.clone(),
                            label,
                            bound,
                            paths,
                            sigma: iso.sigma(),
                            repaired: repair,
                            retries,
                        })
                    }
                    Err(e) => {
                        last_error = e;
                        last_paths = paths;
                    }
                }
                if !advance(&mut choices, &ranges) {
                    break;
                }
            }
        }
    }
    Err(Error::Construction(Box::new(Defect {
        message: format!("{u} -> {v}: {last_error}"),
        case: Some((label.fenlei, label.subcase)),
        paths: last_paths.iter().map(|p| p.iter().map(ToString::to_string).collect()).collect(),
    })))
}

/// [`construct_path_system`] for any parameter order: routes in the
/// normalizing image and maps the paths back, re-validating them.
pub fn construct_normalized(u: &E3CVertex, v: &E3CVertex) -> Result<(PathSystem, Isomorphism)> {
    let iso = Isomorphism::normalizing(u.params());
    if iso.is_identity() {
        return Ok((construct_path_system(u, v)?, iso));
    }
    let image = construct_path_system(&iso.map(u), &iso.map(v))?;
    let back = iso.inverse();
    let label = classify_pair(u, v)?;
    let system = PathSystem {
        source: u.clone(),
        target: v.clone(),
        label,
        bound: case_bound(&label, u.params()),
        paths: image.paths.iter().map(|p| p.iter().map(|x| back.map(x)).collect()).collect(),
        sigma: image.sigma,
        repaired: image.repaired,
        retries: image.retries,
    };
    system.check(system.bound).map_err(|e| Error::defect(format!("{u} -> {v} after relabeling: {e}")))?;
    Ok((system, iso))
}

/// Mixed-radix increment of `choices` over `ranges`; false once exhausted.
fn advance(choices: &mut Vec<usize>, ranges: &[usize]) -> bool {
    choices.resize(ranges.len(), 0);
    for (c, &range) in choices.iter_mut().zip(ranges) {
        *c += 1;
        if *c < range {
            return true;
        }
        *c = 0;
    }
    false
}

/// The lower-bound fault set: `u = 0..02`, `v = 1..10`, and `F` the
/// neighbors of `u` inside its R-subcube plus its `d = 1` neighbor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaultWitness {
    pub u: E3CVertex,
    pub v: E3CVertex,
    pub faults: Vec<E3CVertex>,
}

impl Serialize for FaultWitness {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let faults: Vec<String> = self.faults.iter().map(ToString::to_string).collect();
        let mut s = serializer.serialize_struct("FaultWitness", 3)?;
        s.serialize_field("u", &self.u.to_string())?;
        s.serialize_field("v", &self.v.to_string())?;
        s.serialize_field("faults", &faults)?;
        s.end()
    }
}

pub fn theorem31_witness(params: E3CParams) -> Result<FaultWitness> {
    if !params.is_ordered() {
        return Err(Error::Domain(format!("{params} is not ordered")));
    }
    let block = |role: usize, digit: u8| crate::TritString::repeat(3, digit, params.len(role)).expect("lengths >= 1");
    let u = E3CVertex::from_blocks(params, [block(0, 0), block(1, 0), block(2, 0)], 2)?;
    let v = E3CVertex::from_blocks(params, [block(0, 1), block(1, 1), block(2, 1)], 0)?;
    let mut faults: Vec<E3CVertex> = crate::e3c::e3c_neighbors(&u)
        .into_iter()
        .filter(|(_, class)| *class != crate::EdgeClass::E0)
        .map(|(x, _)| x)
        .collect();
    faults.push(u.with_d(1));
    faults.sort_by_key(E3CVertex::index);
    Ok(FaultWitness { u, v, faults })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::e3c::all_vertices;
    use proptest::prelude::*;

    fn g(r: usize, s: usize, t: usize) -> E3CParams {
        E3CParams::new(r, s, t).unwrap()
    }

    fn vx(params: E3CParams, text: &str) -> E3CVertex {
        E3CVertex::parse(params, text).unwrap()
    }

    /// The bound table restated as a rule over roles.
    fn rule(label: &CaseLabel) -> usize {
        let diff = label.differing();
        let count = diff.iter().filter(|&&x| x).count();
        let d = usize::from(label.d);
        let dp = usize::from(label.d_prime);
        match (label.same_d(), count) {
            (true, 1) => 6,
            (true, 2) => {
                if diff[d] {
                    7
                } else {
                    5
                }
            }
            (true, _) => 4,
            (false, 0) => 7,
            (false, 1) => {
                let role = diff.iter().position(|&x| x).unwrap();
                if role == d || role == dp {
                    6
                } else {
                    8
                }
            }
            (false, 2) => 7,
            (false, _) => 6,
        }
    }

    #[test]
    fn classify_examples() {
        let p = g(1, 1, 1);
        let l = classify_pair(&vx(p, "0000"), &vx(p, "0010")).unwrap();
        assert_eq!((l.fenlei, l.subcase), (1, 1));
        assert_eq!(case_bound(&l, p), 7);
        let l = classify_pair(&vx(p, "0000"), &vx(p, "0001")).unwrap();
        assert_eq!((l.fenlei, l.subcase, case_bound(&l, p)), (8, 1, 7));
        let q = g(1, 1, 2);
        let l = classify_pair(&vx(q, "00001"), &vx(q, "01002")).unwrap();
        assert_eq!((l.fenlei, l.subcase), (10, 3));
        assert_eq!(case_bound(&l, q), 7);
        let l = classify_pair(&vx(q, "01002"), &vx(q, "00001")).unwrap();
        assert!(l.swapped);
        assert!(classify_pair(&vx(p, "0000"), &vx(p, "0000")).is_err());
    }

    #[test]
    fn bound_examples() {
        let p = g(1, 1, 1);
        for k in 1..=3 {
            assert_eq!(bound_expr(8, k).unwrap().eval(g(3, 4, 5)), 7);
        }
        assert_eq!(bound_expr(9, 3).unwrap().eval(p), 9);
        let max = (1..=15).flat_map(|f| (1..=3).map(move |k| bound_expr(f, k).unwrap().eval(p))).max();
        assert_eq!(max, Some(9));
        assert_eq!(bound_expr(15, 1).unwrap().to_string(), "r+s+t+6");
    }

    #[test]
    fn table_matches_role_rule() {
        let p = g(1, 1, 1);
        let all: Vec<E3CVertex> = all_vertices(p).collect();
        let u = &all[0];
        for v in &all[1..] {
            for (x, y) in [(u, v), (v, u)] {
                let label = classify_pair(x, y).unwrap();
                let expr = bound_expr(label.fenlei, label.subcase).unwrap();
                assert_eq!(expr.constant, rule(&label), "{label:?}");
                assert_eq!(expr.roles, label.differing());
            }
        }
    }

    #[test]
    fn bounds_never_exceed_n_plus_5() {
        for p in [g(1, 1, 1), g(1, 2, 3), g(2, 2, 2), g(2, 3, 7)] {
            for f in 1..=15 {
                for k in 1..=3 {
                    assert!(bound_expr(f, k).unwrap().eval(p) <= p.n() + 5);
                }
            }
        }
    }

    #[test]
    fn route_examples() {
        let p = g(1, 1, 1);
        let sys = construct_path_system(&vx(p, "0000"), &vx(p, "0001")).unwrap();
        assert_eq!(sys.paths.len(), 4);
        assert!(sys.lengths().contains(&1));
        assert!(sys.paths.iter().any(|path| path.len() == 3 && path[1] == vx(p, "0002")));
        assert!(sys.max_len() <= 7);
        let sys = construct_path_system(&vx(p, "0000"), &vx(p, "0010")).unwrap();
        assert_eq!(sys.paths.len(), 4);
        assert!(sys.max_len() <= 7);
        assert!(construct_path_system(&vx(p, "0000"), &vx(p, "0000")).is_err());
        assert!(matches!(
            construct_path_system(&vx(g(2, 1, 1), "00000"), &vx(g(2, 1, 1), "00001")),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn exhaustive_small() {
        let p = g(1, 1, 1);
        let all: Vec<E3CVertex> = all_vertices(p).collect();
        let mut pairs = 0;
        for (i, u) in all.iter().enumerate() {
            for v in &all[i + 1..] {
                for (x, y) in [(u, v), (v, u)] {
                    let sys = construct_path_system(x, y).unwrap_or_else(|e| panic!("{e}"));
                    assert!(sys.max_len() <= sys.bound);
                    sys.check(sys.bound).unwrap();
                }
                pairs += 1;
            }
        }
        assert_eq!(pairs, 3240);
    }

    #[test]
    fn unordered_params_route_through_relabeling() {
        let p = g(2, 1, 1);
        let all: Vec<E3CVertex> = all_vertices(p).collect();
        for (i, u) in all.iter().enumerate().step_by(5) {
            for v in all[i + 1..].iter().step_by(3) {
                let (sys, iso) = construct_normalized(u, v).unwrap();
                assert!(!iso.is_identity());
                assert_eq!(sys.paths.len(), 4);
                assert!(sys.paths.iter().all(|path| path[0] == *u && path.last() == Some(v)));
            }
        }
    }

    #[test]
    fn json_shape() {
        let p = g(1, 1, 1);
        let sys = construct_path_system(&vx(p, "0000"), &vx(p, "0001")).unwrap();
        let json = serde_json::to_value(&sys).unwrap();
        assert_eq!(json["case"]["fenlei"], 8);
        assert_eq!(json["source"], "0000");
        assert_eq!(json["paths"].as_array().unwrap().len(), 4);
    }

    #[test]
    fn witness_examples() {
        let w = theorem31_witness(g(1, 1, 1)).unwrap();
        assert_eq!(w.u.to_string(), "0002");
        assert_eq!(w.v.to_string(), "1110");
        let mut f: Vec<String> = w.faults.iter().map(ToString::to_string).collect();
        f.sort();
        assert_eq!(f, ["0001", "1002", "2002"]);
        assert_eq!(theorem31_witness(g(1, 2, 2)).unwrap().faults.len(), 3);
        assert_eq!(theorem31_witness(g(2, 2, 3)).unwrap().faults.len(), 5);
    }

    fn arb_pair() -> impl Strategy<Value = (E3CParams, u64, u64)> {
        (1usize..=2, 1usize..=2, 1usize..=2).prop_flat_map(|(r, s, t)| {
            let p = g(r, s, t);
            let n = p.vertex_count();
            (Just(p), 0..n, 0..n)
        })
    }

    proptest! {
        #[test]
        fn classification_transports((p, i, j) in arb_pair(), k in 0usize..6) {
            prop_assume!(i != j);
            let (u, v) = (E3CVertex::from_index(p, i).unwrap(), E3CVertex::from_index(p, j).unwrap());
            let iso = Isomorphism::new(p, PERMUTATIONS[k]).unwrap();
            let before = classify_pair(&u, &v).unwrap();
            let after = classify_pair(&iso.map(&u), &iso.map(&v)).unwrap();
            let mut moved = [false; 3];
            for role in 0..3 {
                moved[usize::from(PERMUTATIONS[k][role])] = before.differing()[role];
            }
            prop_assert_eq!(after.differing(), moved);
            prop_assert_eq!(after.same_d(), before.same_d());
            let e1 = bound_expr(before.fenlei, before.subcase).unwrap();
            let e2 = bound_expr(after.fenlei, after.subcase).unwrap();
            prop_assert_eq!(e1.permuted(PERMUTATIONS[k]), e2);
            prop_assert_eq!(e1.eval(p), e2.eval(iso.target()));
        }

        #[test]
        fn routes_ordered_graphs((p, i, j) in arb_pair()) {
            prop_assume!(i != j && p.is_ordered());
            let (u, v) = (E3CVertex::from_index(p, i).unwrap(), E3CVertex::from_index(p, j).unwrap());
            let sys = construct_path_system(&u, &v).unwrap();
            prop_assert!(sys.max_len() <= sys.bound && sys.bound <= p.n() + 5);
        }
    }
}
