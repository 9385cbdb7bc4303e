//! One function per written subcase. Each receives `u = ABCd` and
//! `v = A'B'C'd'` already oriented so that `d <= d'`, and returns `2w + 2`
//! candidate paths; the caller validates them.

use super::build::{blocks, rotate_member, Ctx, Walk, T, V};
use crate::e3c::{ROLE_A, ROLE_B};

pub(crate) type Recipe = fn(&mut Ctx<'_>, &V, &V) -> Vec<Vec<V>>;

/// The recipe for a written `(fenlei, subcase)`, if there is one.
pub(crate) fn written(fenlei: u8, subcase: u8) -> Option<Recipe> {
    let recipe: Recipe = match (fenlei, subcase) {
        (1, 1) => f1c1,
        (1, 2) => f1c2,
        (2, 1) => f2c1,
        (2, 2) => f2c2,
        (3, 1) => f3c1,
        (3, 3) => f3c3,
        (4, 1) => f4c1,
        (4, 3) => f4c3,
        (5, 1) => f5c1,
        (5, 2) => f5c2,
        (6, 1) => f6c1,
        (6, 2) => f6c2,
        (7, 1) => f7c1,
        (8, 1) => f8c1,
        (9, 1) => f9c1,
        (9, 3) => f9c3,
        (10, 1) => f10c1,
        (10, 2) => f10c2,
        (11, 1) => f11c1,
        (11, 2) => f11c2,
        (12, 1) => f12c1,
        (12, 2) => f12c2,
        (13, 1) => f13c1,
        (13, 2) => f13c2,
        (14, 1) => f14c1,
        (14, 3) => f14c3,
        (15, 1) => f15c1,
        _ => return None,
    };
    Some(recipe)
}

/// `path` with the given blocks taken from `to`.
fn mirror(path: &[V], roles: &[usize], to: &V) -> Vec<V> {
    path.iter().map(|x| roles.iter().fold(x.clone(), |y, &role| y.with_block(role, to.block(role).clone()))).collect()
}

/// `H_i` without its last vertex.
fn trimmed(path: &[V]) -> &[V] {
    &path[..path.len() - 1]
}

fn reversed(path: &[V]) -> Vec<V> {
    path.iter().rev().cloned().collect()
}

fn f1c1(cx: &mut Ctx<'_>, u: &V, v: &V) -> Vec<Vec<V>> {
    let (a, b, c) = blocks(u);
    let cp = v.c().clone();
    let (b1, a1) = (cx.lone(&b), cx.lone(&a));
    let at = |a: &T, b: &T, c: &T, d| cx.at(a, b, c, d);
    let mut out = cx.lemma22(u, v);
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 1))
            .to(&at(&a, &b1, &c, 1))
            .to(&at(&a, &b1, &c, 0))
            .within(&at(&a, &b1, &cp, 0))
            .to(&at(&a, &b1, &cp, 1))
            .to(&at(&a, &b, &cp, 1))
            .to(v)
            .end(),
    );
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 2))
            .to(&at(&a1, &b, &c, 2))
            .to(&at(&a1, &b, &c, 0))
            .within(&at(&a1, &b, &cp, 0))
            .to(&at(&a1, &b, &cp, 2))
            .to(&at(&a, &b, &cp, 2))
            .to(v)
            .end(),
    );
    out
}

fn f1c2(cx: &mut Ctx<'_>, u: &V, v: &V) -> Vec<Vec<V>> {
    let (a, b, c) = blocks(u);
    let cp = v.c().clone();
    let a1 = cx.lone(&a);
    let at = |a: &T, b: &T, c: &T, d| cx.at(a, b, c, d);
    let mut out: Vec<Vec<V>> = cx
        .fan(&b)
        .iter()
        .map(|bi| {
            Walk::new(u)
                .to(&at(&a, bi, &c, 1))
                .to(&at(&a, bi, &c, 0))
                .within(&at(&a, bi, &cp, 0))
                .to(&at(&a, bi, &cp, 1))
                .to(v)
                .end()
        })
        .collect();
    out.push(Walk::new(u).to(&at(&a, &b, &c, 0)).within(&at(&a, &b, &cp, 0)).to(v).end());
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 2))
            .to(&at(&a1, &b, &c, 2))
            .to(&at(&a1, &b, &c, 0))
            .within(&at(&a1, &b, &cp, 0))
            .to(&at(&a1, &b, &cp, 2))
            .to(&at(&a, &b, &cp, 2))
            .to(v)
            .end(),
    );
    out
}

fn f2c1(cx: &mut Ctx<'_>, u: &V, v: &V) -> Vec<Vec<V>> {
    let (a, b, c) = blocks(u);
    let bp = v.b().clone();
    let a1 = cx.lone(&a);
    let at = |a: &T, b: &T, c: &T, d| cx.at(a, b, c, d);
    let mut out: Vec<Vec<V>> = cx
        .fan(&c)
        .iter()
        .map(|ci| {
            Walk::new(u)
                .to(&at(&a, &b, ci, 0))
                .to(&at(&a, &b, ci, 1))
                .within(&at(&a, &bp, ci, 1))
                .to(&at(&a, &bp, ci, 0))
                .to(v)
                .end()
        })
        .collect();
    out.push(Walk::new(u).to(&at(&a, &b, &c, 1)).within(&at(&a, &bp, &c, 1)).to(v).end());
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 2))
            .to(&at(&a1, &b, &c, 2))
            .to(&at(&a1, &b, &c, 1))
            .within(&at(&a1, &bp, &c, 1))
            .to(&at(&a1, &bp, &c, 2))
            .to(&at(&a, &bp, &c, 2))
            .to(v)
            .end(),
    );
    out
}

fn f2c2(cx: &mut Ctx<'_>, u: &V, v: &V) -> Vec<Vec<V>> {
    let (a, b, c) = blocks(u);
    let bp = v.b().clone();
    let (c1, a1) = (cx.lone(&c), cx.lone(&a));
    let at = |a: &T, b: &T, c: &T, d| cx.at(a, b, c, d);
    let mut out = cx.lemma22(u, v);
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 0))
            .to(&at(&a, &b, &c1, 0))
            .to(&at(&a, &b, &c1, 1))
            .within(&at(&a, &bp, &c1, 1))
            .to(&at(&a, &bp, &c1, 0))
            .to(&at(&a, &bp, &c, 0))
            .to(v)
            .end(),
    );
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 2))
            .to(&at(&a1, &b, &c, 2))
            .to(&at(&a1, &b, &c, 1))
            .within(&at(&a1, &bp, &c, 1))
            .to(&at(&a1, &bp, &c, 2))
            .to(&at(&a, &bp, &c, 2))
            .to(v)
            .end(),
    );
    out
}

fn f3c1(cx: &mut Ctx<'_>, u: &V, v: &V) -> Vec<Vec<V>> {
    let (a, b, c) = blocks(u);
    let (bp, cp) = (v.b().clone(), v.c().clone());
    let a1 = cx.lone(&a);
    let at = |a: &T, b: &T, c: &T, d| cx.at(a, b, c, d);
    let wv = at(&a, &b, &cp, 0);
    let z = at(&a, &bp, &c, 0);
    let h = cx.lemma22(u, &wv);
    let (last, rest) = h.split_last().expect("lemma22 is non-empty");
    let mut out: Vec<Vec<V>> = rest
        .iter()
        .map(|hi| {
            let wi = &hi[hi.len() - 2];
            let ci = wi.c();
            Walk::new(u)
                .along(trimmed(hi))
                .to(&at(&a, &b, ci, 1))
                .within(&at(&a, &bp, ci, 1))
                .to(&at(&a, &bp, ci, 0))
                .to(v)
                .end()
        })
        .collect();
    out.push(
        Walk::new(u).to(&at(&a, &b, &c, 1)).within(&at(&a, &bp, &c, 1)).to(&z).along(&mirror(last, &[ROLE_B], v)).end(),
    );
    out.push(Walk::new(u).along(last).to(&at(&a, &b, &cp, 1)).within(&at(&a, &bp, &cp, 1)).to(v).end());
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 2))
            .to(&at(&a1, &b, &c, 2))
            .to(&at(&a1, &b, &c, 1))
            .within(&at(&a1, &bp, &c, 1))
            .to(&at(&a1, &bp, &c, 0))
            .within(&at(&a1, &bp, &cp, 0))
            .to(&at(&a1, &bp, &cp, 2))
            .to(&at(&a, &bp, &cp, 2))
            .to(v)
            .end(),
    );
    out
}

fn f3c3(cx: &mut Ctx<'_>, u: &V, v: &V) -> Vec<Vec<V>> {
    let (a, b, c) = blocks(u);
    let (bp, cp) = (v.b().clone(), v.c().clone());
    let at = |a: &T, b: &T, c: &T, d| cx.at(a, b, c, d);
    let mut out: Vec<Vec<V>> = cx
        .fan(&a)
        .iter()
        .map(|ai| {
            Walk::new(u)
                .to(&at(ai, &b, &c, 2))
                .to(&at(ai, &b, &c, 1))
                .within(&at(ai, &bp, &c, 1))
                .to(&at(ai, &bp, &c, 0))
                .within(&at(ai, &bp, &cp, 0))
                .to(&at(ai, &bp, &cp, 2))
                .to(v)
                .end()
        })
        .collect();
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 0))
            .within(&at(&a, &b, &cp, 0))
            .to(&at(&a, &b, &cp, 1))
            .within(&at(&a, &bp, &cp, 1))
            .to(v)
            .end(),
    );
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 1))
            .within(&at(&a, &bp, &c, 1))
            .to(&at(&a, &bp, &c, 0))
            .within(&at(&a, &bp, &cp, 0))
            .to(v)
            .end(),
    );
    out
}

fn f4c1(cx: &mut Ctx<'_>, u: &V, v: &V) -> Vec<Vec<V>> {
    let (a, b, c) = blocks(u);
    let ap = v.a().clone();
    let b1 = cx.lone(&b);
    let at = |a: &T, b: &T, c: &T, d| cx.at(a, b, c, d);
    let mut out: Vec<Vec<V>> = cx
        .fan(&c)
        .iter()
        .map(|ci| {
            Walk::new(u)
                .to(&at(&a, &b, ci, 0))
                .to(&at(&a, &b, ci, 2))
                .within(&at(&ap, &b, ci, 2))
                .to(&at(&ap, &b, ci, 0))
                .to(v)
                .end()
        })
        .collect();
    out.push(Walk::new(u).to(&at(&a, &b, &c, 2)).within(&at(&ap, &b, &c, 2)).to(v).end());
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 1))
            .to(&at(&a, &b1, &c, 1))
            .to(&at(&a, &b1, &c, 2))
            .within(&at(&ap, &b1, &c, 2))
            .to(&at(&ap, &b1, &c, 1))
            .to(&at(&ap, &b, &c, 1))
            .to(v)
            .end(),
    );
    out
}

fn f4c3(cx: &mut Ctx<'_>, u: &V, v: &V) -> Vec<Vec<V>> {
    let (a, b, c) = blocks(u);
    let ap = v.a().clone();
    let (c1, b1) = (cx.lone(&c), cx.lone(&b));
    let at = |a: &T, b: &T, c: &T, d| cx.at(a, b, c, d);
    let mut out = cx.lemma22(u, v);
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 0))
            .to(&at(&a, &b, &c1, 0))
            .to(&at(&a, &b, &c1, 2))
            .within(&at(&ap, &b, &c1, 2))
            .to(&at(&ap, &b, &c1, 0))
            .to(&at(&ap, &b, &c, 0))
            .to(v)
            .end(),
    );
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 1))
            .to(&at(&a, &b1, &c, 1))
            .to(&at(&a, &b1, &c, 2))
            .within(&at(&ap, &b1, &c, 2))
            .to(&at(&ap, &b1, &c, 1))
            .to(&at(&ap, &b, &c, 1))
            .to(v)
            .end(),
    );
    out
}

fn f5c1(cx: &mut Ctx<'_>, u: &V, v: &V) -> Vec<Vec<V>> {
    let (a, b, c) = blocks(u);
    let (ap, cp) = (v.a().clone(), v.c().clone());
    let b1 = cx.lone(&b);
    let at = |a: &T, b: &T, c: &T, d| cx.at(a, b, c, d);
    let wv = at(&a, &b, &cp, 0);
    let z = at(&ap, &b, &c, 0);
    let h = cx.lemma22(u, &wv);
    let (last, rest) = h.split_last().expect("lemma22 is non-empty");
    let mut out: Vec<Vec<V>> = rest
        .iter()
        .map(|hi| {
            let ci = hi[hi.len() - 2].c();
            Walk::new(u)
                .along(trimmed(hi))
                .to(&at(&a, &b, ci, 2))
                .within(&at(&ap, &b, ci, 2))
                .to(&at(&ap, &b, ci, 0))
                .to(v)
                .end()
        })
        .collect();
    out.push(
        Walk::new(u).to(&at(&a, &b, &c, 2)).within(&at(&ap, &b, &c, 2)).to(&z).along(&mirror(last, &[ROLE_A], v)).end(),
    );
    out.push(Walk::new(u).along(last).to(&at(&a, &b, &cp, 2)).within(&at(&ap, &b, &cp, 2)).to(v).end());
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 1))
            .to(&at(&a, &b1, &c, 1))
            .to(&at(&a, &b1, &c, 2))
            .within(&at(&ap, &b1, &c, 2))
            .to(&at(&ap, &b1, &c, 0))
            .within(&at(&ap, &b1, &cp, 0))
            .to(&at(&ap, &b1, &cp, 1))
            .to(&at(&ap, &b, &cp, 1))
            .to(v)
            .end(),
    );
    out
}

fn f5c2(cx: &mut Ctx<'_>, u: &V, v: &V) -> Vec<Vec<V>> {
    let (a, b, c) = blocks(u);
    let (ap, cp) = (v.a().clone(), v.c().clone());
    let at = |a: &T, b: &T, c: &T, d| cx.at(a, b, c, d);
    let mut out: Vec<Vec<V>> = cx
        .fan(&b)
        .iter()
        .map(|bi| {
            Walk::new(u)
                .to(&at(&a, bi, &c, 1))
                .to(&at(&a, bi, &c, 0))
                .within(&at(&a, bi, &cp, 0))
                .to(&at(&a, bi, &cp, 2))
                .within(&at(&ap, bi, &cp, 2))
                .to(&at(&ap, bi, &cp, 1))
                .to(v)
                .end()
        })
        .collect();
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 0))
            .within(&at(&a, &b, &cp, 0))
            .to(&at(&a, &b, &cp, 2))
            .within(&at(&ap, &b, &cp, 2))
            .to(v)
            .end(),
    );
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 2))
            .within(&at(&ap, &b, &c, 2))
            .to(&at(&ap, &b, &c, 0))
            .within(&at(&ap, &b, &cp, 0))
            .to(v)
            .end(),
    );
    out
}

fn f6c1(cx: &mut Ctx<'_>, u: &V, v: &V) -> Vec<Vec<V>> {
    let (a, b, c) = blocks(u);
    let (ap, bp) = (v.a().clone(), v.b().clone());
    let at = |a: &T, b: &T, c: &T, d| cx.at(a, b, c, d);
    let mut out: Vec<Vec<V>> = cx
        .fan(&c)
        .iter()
        .map(|ci| {
            Walk::new(u)
                .to(&at(&a, &b, ci, 0))
                .to(&at(&a, &b, ci, 1))
                .within(&at(&a, &bp, ci, 1))
                .to(&at(&a, &bp, ci, 2))
                .within(&at(&ap, &bp, ci, 2))
                .to(&at(&ap, &bp, ci, 0))
                .to(v)
                .end()
        })
        .collect();
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 1))
            .within(&at(&a, &bp, &c, 1))
            .to(&at(&a, &bp, &c, 2))
            .within(&at(&ap, &bp, &c, 2))
            .to(v)
            .end(),
    );
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 2))
            .within(&at(&ap, &b, &c, 2))
            .to(&at(&ap, &b, &c, 1))
            .within(&at(&ap, &bp, &c, 1))
            .to(v)
            .end(),
    );
    out
}

fn f6c2(cx: &mut Ctx<'_>, u: &V, v: &V) -> Vec<Vec<V>> {
    let (a, b, c) = blocks(u);
    let (ap, bp) = (v.a().clone(), v.b().clone());
    let c1 = cx.lone(&c);
    let at = |a: &T, b: &T, c: &T, d| cx.at(a, b, c, d);
    let wv = at(&a, &bp, &c, 1);
    let z = at(&ap, &b, &c, 1);
    let h = cx.lemma22(u, &wv);
    let (last, rest) = h.split_last().expect("lemma22 is non-empty");
    let mut out: Vec<Vec<V>> = rest
        .iter()
        .map(|hi| {
            let bi = hi[hi.len() - 2].b();
            Walk::new(u)
                .along(trimmed(hi))
                .to(&at(&a, bi, &c, 2))
                .within(&at(&ap, bi, &c, 2))
                .to(&at(&ap, bi, &c, 1))
                .to(v)
                .end()
        })
        .collect();
    out.push(
        Walk::new(u).to(&at(&a, &b, &c, 2)).within(&at(&ap, &b, &c, 2)).to(&z).along(&mirror(last, &[ROLE_A], v)).end(),
    );
    out.push(Walk::new(u).along(last).to(&at(&a, &bp, &c, 2)).within(&at(&ap, &bp, &c, 2)).to(v).end());
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 0))
            .to(&at(&a, &b, &c1, 0))
            .to(&at(&a, &b, &c1, 1))
            .within(&at(&a, &bp, &c1, 1))
            .to(&at(&a, &bp, &c1, 2))
            .within(&at(&ap, &bp, &c1, 2))
            .to(&at(&ap, &bp, &c1, 0))
            .to(&at(&ap, &bp, &c, 0))
            .to(v)
            .end(),
    );
    out
}

fn f7c1(cx: &mut Ctx<'_>, u: &V, v: &V) -> Vec<Vec<V>> {
    let (a, b, c) = blocks(u);
    let (ap, bp, cp) = blocks(v);
    let at = |a: &T, b: &T, c: &T, d| cx.at(a, b, c, d);
    let wv = at(&a, &b, &cp, 0);
    let z = at(&ap, &bp, &c, 0);
    let h = cx.lemma22(u, &wv);
    let (last, rest) = h.split_last().expect("lemma22 is non-empty");
    let mut out: Vec<Vec<V>> = rest
        .iter()
        .map(|hi| {
            let ci = hi[hi.len() - 2].c();
            Walk::new(u)
                .along(trimmed(hi))
                .to(&at(&a, &b, ci, 1))
                .within(&at(&a, &bp, ci, 1))
                .to(&at(&a, &bp, ci, 2))
                .within(&at(&ap, &bp, ci, 2))
                .to(&at(&ap, &bp, ci, 0))
                .to(v)
                .end()
        })
        .collect();
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 1))
            .within(&at(&a, &bp, &c, 1))
            .to(&at(&a, &bp, &c, 2))
            .within(&at(&ap, &bp, &c, 2))
            .to(&z)
            .along(&mirror(last, &[ROLE_A, ROLE_B], v))
            .end(),
    );
    out.push(
        Walk::new(u)
            .along(last)
            .to(&at(&a, &b, &cp, 1))
            .within(&at(&a, &bp, &cp, 1))
            .to(&at(&a, &bp, &cp, 2))
            .within(&at(&ap, &bp, &cp, 2))
            .to(v)
            .end(),
    );
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 2))
            .within(&at(&ap, &b, &c, 2))
            .to(&at(&ap, &b, &c, 0))
            .within(&at(&ap, &b, &cp, 0))
            .to(&at(&ap, &b, &cp, 1))
            .within(&at(&ap, &bp, &cp, 1))
            .to(v)
            .end(),
    );
    out
}

fn f8c1(cx: &mut Ctx<'_>, u: &V, v: &V) -> Vec<Vec<V>> {
    let (a, b, c) = blocks(u);
    let at = |a: &T, b: &T, c: &T, d| cx.at(a, b, c, d);
    let mut out: Vec<Vec<V>> = cx
        .fan(&c)
        .iter()
        .zip(cx.fan(&b).iter())
        .map(|(ci, bi)| {
            Walk::new(u)
                .to(&at(&a, &b, ci, 0))
                .to(&at(&a, &b, ci, 1))
                .to(&at(&a, bi, ci, 1))
                .to(&at(&a, bi, ci, 0))
                .to(&at(&a, bi, &c, 0))
                .to(&at(&a, bi, &c, 1))
                .to(v)
                .end()
        })
        .collect();
    out.push(Walk::new(u).to(&at(&a, &b, &c, 2)).to(v).end());
    out.push(Walk::new(u).to(v).end());
    out
}

fn f9c1(cx: &mut Ctx<'_>, u: &V, v: &V) -> Vec<Vec<V>> {
    let (a, b, c) = blocks(u);
    let cp = v.c().clone();
    let a1 = cx.lone(&a);
    let at = |a: &T, b: &T, c: &T, d| cx.at(a, b, c, d);
    let k1 = cx.shortest(u, &at(&a, &b, &cp, 0));
    let mut cs = cx.fan(&c);
    rotate_member(&mut cs, &k1, |ci| at(&a, &b, ci, 0), true);
    let bs = cx.fan(&b);
    let mut out = vec![Walk::new(u).along(&k1).to(v).end()];
    for (ci, bi) in cs.iter().zip(&bs).skip(1) {
        out.push(
            Walk::new(u)
                .to(&at(&a, &b, ci, 0))
                .to(&at(&a, &b, ci, 1))
                .to(&at(&a, bi, ci, 1))
                .to(&at(&a, bi, ci, 0))
                .within(&at(&a, bi, &cp, 0))
                .to(&at(&a, bi, &cp, 1))
                .to(v)
                .end(),
        );
    }
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 1))
            .to(&at(&a, &bs[0], &c, 1))
            .to(&at(&a, &bs[0], &c, 0))
            .within(&at(&a, &bs[0], &cp, 0))
            .to(&at(&a, &bs[0], &cp, 1))
            .to(v)
            .end(),
    );
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 2))
            .to(&at(&a1, &b, &c, 2))
            .to(&at(&a1, &b, &c, 0))
            .within(&at(&a1, &b, &cp, 0))
            .to(&at(&a1, &b, &cp, 2))
            .to(&at(&a, &b, &cp, 2))
            .to(v)
            .end(),
    );
    out
}

fn f9c3(cx: &mut Ctx<'_>, u: &V, v: &V) -> Vec<Vec<V>> {
    let (a, b, c) = blocks(u);
    let cp = v.c().clone();
    let repair = cx.repair;
    let (a1, c1p, c1) =
        if repair { (a.clone(), cp.clone(), c.clone()) } else { (cx.lone(&a), cx.lone(&cp), cx.lone(&c)) };
    let at = |a: &T, b: &T, c: &T, d| cx.at(a, b, c, d);
    let (as_, bs) = (cx.fan(&a), cx.fan(&b));
    let skip = usize::from(repair);
    let mut out: Vec<Vec<V>> = as_
        .iter()
        .zip(&bs)
        .skip(skip)
        .map(|(ai, bi)| {
            Walk::new(u)
                .to(&at(&a, bi, &c, 1))
                .to(&at(&a, bi, &c, 2))
                .to(&at(ai, bi, &c, 2))
                .to(&at(ai, bi, &c, 0))
                .within(&at(ai, bi, &cp, 0))
                .to(&at(ai, bi, &cp, 1))
                .to(&at(ai, &b, &cp, 1))
                .to(&at(ai, &b, &cp, 2))
                .to(v)
                .end()
        })
        .collect();
    if repair {
        // Reroutes the first fan index when the three extra paths collide
        // on a one-digit C block.
        let (a_1, b_1) = (&as_[0], &bs[0]);
        out.push(Walk::new(u).to(&at(&a, &b, &c, 0)).within(&at(&a, &b, &cp, 0)).to(v).end());
        out.push(
            Walk::new(u)
                .to(&at(&a, &b, &c, 2))
                .to(&at(a_1, &b, &c, 2))
                .to(&at(a_1, &b, &c, 0))
                .within(&at(a_1, &b, &cp, 0))
                .to(&at(a_1, &b, &cp, 2))
                .to(v)
                .end(),
        );
        out.push(
            Walk::new(u)
                .to(&at(&a, b_1, &c, 1))
                .to(&at(&a, b_1, &c, 0))
                .within(&at(&a, b_1, &cp, 0))
                .to(&at(&a, b_1, &cp, 1))
                .to(&at(&a, &b, &cp, 1))
                .to(v)
                .end(),
        );
        return out;
    }
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 2))
            .to(&at(&a1, &b, &c, 2))
            .to(&at(&a1, &b, &c, 0))
            .within(&at(&a1, &b, &c1p, 0))
            .to(&at(&a1, &b, &c1p, 2))
            .to(&at(&a, &b, &c1p, 2))
            .to(&at(&a, &b, &c1p, 0))
            .to(&at(&a, &b, &cp, 0))
            .to(v)
            .end(),
    );
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 0))
            .to(&at(&a, &b, &c1, 0))
            .to(&at(&a, &b, &c1, 1))
            .to(&at(&a, &bs[0], &c1, 1))
            .to(&at(&a, &bs[0], &c1, 0))
            .within(&at(&a, &bs[0], &cp, 0))
            .to(&at(&a, &bs[0], &cp, 1))
            .to(&at(&a, &b, &cp, 1))
            .to(v)
            .end(),
    );
    out
}

fn f10c1(cx: &mut Ctx<'_>, u: &V, v: &V) -> Vec<Vec<V>> {
    let (a, b, c) = blocks(u);
    let bp = v.b().clone();
    let a1 = cx.lone(&a);
    let at = |a: &T, b: &T, c: &T, d| cx.at(a, b, c, d);
    let k1 = cx.shortest(v, &at(&a, &b, &c, 1));
    let mut bps = cx.fan(&bp);
    rotate_member(&mut bps, &k1, |bi| at(&a, bi, &c, 1), false);
    let cs = cx.fan(&c);
    let n = cs.len();
    let mut out: Vec<Vec<V>> = cs[..n - 1]
        .iter()
        .zip(&bps)
        .map(|(ci, bi)| {
            Walk::new(u)
                .to(&at(&a, &b, ci, 0))
                .to(&at(&a, &b, ci, 1))
                .within(&at(&a, bi, ci, 1))
                .to(&at(&a, bi, ci, 0))
                .to(&at(&a, bi, &c, 0))
                .to(&at(&a, bi, &c, 1))
                .to(v)
                .end()
        })
        .collect();
    out.push(Walk::new(u).to(&at(&a, &b, &c, 1)).along(&reversed(&k1)).end());
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 2))
            .to(&at(&a1, &b, &c, 2))
            .to(&at(&a1, &b, &c, 1))
            .within(&at(&a1, &bp, &c, 1))
            .to(&at(&a1, &bp, &c, 2))
            .to(&at(&a, &bp, &c, 2))
            .to(v)
            .end(),
    );
    let cl = &cs[n - 1];
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, cl, 0))
            .to(&at(&a, &b, cl, 1))
            .within(&at(&a, &bp, cl, 1))
            .to(&at(&a, &bp, cl, 0))
            .to(&at(&a, &bp, &c, 0))
            .to(v)
            .end(),
    );
    out
}

fn f10c2(cx: &mut Ctx<'_>, u: &V, v: &V) -> Vec<Vec<V>> {
    let (a, b, c) = blocks(u);
    let bp = v.b().clone();
    let (a1, b1p, b1, c1) = (cx.lone(&a), cx.lone(&bp), cx.lone(&b), cx.lone(&c));
    let at = |a: &T, b: &T, c: &T, d| cx.at(a, b, c, d);
    let mut out: Vec<Vec<V>> = cx
        .fan(&c)
        .iter()
        .zip(cx.fan(&a).iter())
        .map(|(ci, ai)| {
            Walk::new(u)
                .to(&at(&a, &b, ci, 0))
                .to(&at(&a, &b, ci, 2))
                .to(&at(ai, &b, ci, 2))
                .to(&at(ai, &b, ci, 1))
                .within(&at(ai, &bp, ci, 1))
                .to(&at(ai, &bp, ci, 0))
                .to(&at(ai, &bp, &c, 0))
                .to(&at(ai, &bp, &c, 2))
                .to(v)
                .end()
        })
        .collect();
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 2))
            .to(&at(&a1, &b, &c, 2))
            .to(&at(&a1, &b, &c, 1))
            .within(&at(&a1, &b1p, &c, 1))
            .to(&at(&a1, &b1p, &c, 2))
            .to(&at(&a, &b1p, &c, 2))
            .to(&at(&a, &b1p, &c, 1))
            .to(&at(&a, &bp, &c, 1))
            .to(v)
            .end(),
    );
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 1))
            .to(&at(&a, &b1, &c, 1))
            .to(&at(&a, &b1, &c, 0))
            .to(&at(&a, &b1, &c1, 0))
            .to(&at(&a, &b1, &c1, 1))
            .within(&at(&a, &bp, &c1, 1))
            .to(&at(&a, &bp, &c1, 0))
            .to(&at(&a, &bp, &c, 0))
            .to(v)
            .end(),
    );
    out
}

fn f11c1(cx: &mut Ctx<'_>, u: &V, v: &V) -> Vec<Vec<V>> {
    let (a, b, c) = blocks(u);
    let (bp, cp) = (v.b().clone(), v.c().clone());
    let a1 = cx.lone(&a);
    let at = |a: &T, b: &T, c: &T, d| cx.at(a, b, c, d);
    let k = cx.shortest(u, &at(&a, &b, &cp, 0));
    let h = cx.shortest(v, &at(&a, &b, &cp, 1));
    let mut cs = cx.fan(&c);
    rotate_member(&mut cs, &k, |ci| at(&a, &b, ci, 0), false);
    let mut bps = cx.fan(&bp);
    rotate_member(&mut bps, &h, |bi| at(&a, bi, &cp, 1), false);
    let n = cs.len();
    let mut out: Vec<Vec<V>> = cs[..n - 1]
        .iter()
        .zip(&bps)
        .map(|(ci, bi)| {
            Walk::new(u)
                .to(&at(&a, &b, ci, 0))
                .to(&at(&a, &b, ci, 1))
                .within(&at(&a, bi, ci, 1))
                .to(&at(&a, bi, ci, 0))
                .within(&at(&a, bi, &cp, 0))
                .to(&at(&a, bi, &cp, 1))
                .to(v)
                .end()
        })
        .collect();
    out.push(Walk::new(u).along(&k).to(&at(&a, &b, &cp, 1)).along(&reversed(&h)).end());
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 1))
            .within(&at(&a, &bp, &c, 1))
            .to(&at(&a, &bp, &c, 0))
            .within(&at(&a, &bp, &cp, 0))
            .to(v)
            .end(),
    );
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 2))
            .to(&at(&a1, &b, &c, 2))
            .to(&at(&a1, &b, &c, 0))
            .within(&at(&a1, &b, &cp, 0))
            .to(&at(&a1, &b, &cp, 1))
            .within(&at(&a1, &bp, &cp, 1))
            .to(&at(&a1, &bp, &cp, 2))
            .to(&at(&a, &bp, &cp, 2))
            .to(v)
            .end(),
    );
    out
}

fn f11c2(cx: &mut Ctx<'_>, u: &V, v: &V) -> Vec<Vec<V>> {
    let (a, b, c) = blocks(u);
    let (bp, cp) = (v.b().clone(), v.c().clone());
    let (a1, b1) = (cx.lone(&a), cx.lone(&b));
    let at = |a: &T, b: &T, c: &T, d| cx.at(a, b, c, d);
    let mut out: Vec<Vec<V>> = cx
        .fan(&c)
        .iter()
        .zip(cx.fan(&a).iter())
        .map(|(ci, ai)| {
            Walk::new(u)
                .to(&at(&a, &b, ci, 0))
                .to(&at(&a, &b, ci, 2))
                .to(&at(ai, &b, ci, 2))
                .to(&at(ai, &b, ci, 1))
                .within(&at(ai, &bp, ci, 1))
                .to(&at(ai, &bp, ci, 0))
                .within(&at(ai, &bp, &cp, 0))
                .to(&at(ai, &bp, &cp, 2))
                .to(v)
                .end()
        })
        .collect();
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 2))
            .to(&at(&a1, &b, &c, 2))
            .to(&at(&a1, &b, &c, 1))
            .within(&at(&a1, &bp, &c, 1))
            .to(&at(&a1, &bp, &c, 2))
            .to(&at(&a, &bp, &c, 2))
            .to(&at(&a, &bp, &c, 0))
            .within(&at(&a, &bp, &cp, 0))
            .to(v)
            .end(),
    );
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 1))
            .to(&at(&a, &b1, &c, 1))
            .to(&at(&a, &b1, &c, 0))
            .within(&at(&a, &b1, &cp, 0))
            .to(&at(&a, &b1, &cp, 1))
            .within(&at(&a, &bp, &cp, 1))
            .to(v)
            .end(),
    );
    out
}

fn f12c1(cx: &mut Ctx<'_>, u: &V, v: &V) -> Vec<Vec<V>> {
    let (a, b, c) = blocks(u);
    let ap = v.a().clone();
    let (b1, a1p, a1, c1) = (cx.lone(&b), cx.lone(&ap), cx.lone(&a), cx.lone(&c));
    let at = |a: &T, b: &T, c: &T, d| cx.at(a, b, c, d);
    let mut out: Vec<Vec<V>> = cx
        .fan(&c)
        .iter()
        .zip(cx.fan(&b).iter())
        .map(|(ci, bi)| {
            Walk::new(u)
                .to(&at(&a, &b, ci, 0))
                .to(&at(&a, &b, ci, 1))
                .to(&at(&a, bi, ci, 1))
                .to(&at(&a, bi, ci, 2))
                .within(&at(&ap, bi, ci, 2))
                .to(&at(&ap, bi, ci, 0))
                .to(&at(&ap, bi, &c, 0))
                .to(&at(&ap, bi, &c, 1))
                .to(v)
                .end()
        })
        .collect();
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 1))
            .to(&at(&a, &b1, &c, 1))
            .to(&at(&a, &b1, &c, 2))
            .within(&at(&a1p, &b1, &c, 2))
            .to(&at(&a1p, &b1, &c, 1))
            .to(&at(&a1p, &b, &c, 1))
            .to(&at(&a1p, &b, &c, 2))
            .to(&at(&ap, &b, &c, 2))
            .to(v)
            .end(),
    );
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 2))
            .to(&at(&a1, &b, &c, 2))
            .to(&at(&a1, &b, &c, 0))
            .to(&at(&a1, &b, &c1, 0))
            .to(&at(&a1, &b, &c1, 2))
            .within(&at(&ap, &b, &c1, 2))
            .to(&at(&ap, &b, &c1, 0))
            .to(&at(&ap, &b, &c, 0))
            .to(v)
            .end(),
    );
    out
}

fn f12c2(cx: &mut Ctx<'_>, u: &V, v: &V) -> Vec<Vec<V>> {
    let (a, b, c) = blocks(u);
    let ap = v.a().clone();
    let b1 = cx.lone(&b);
    let at = |a: &T, b: &T, c: &T, d| cx.at(a, b, c, d);
    let k1 = cx.shortest(v, &at(&a, &b, &c, 2));
    let mut aps = cx.fan(&ap);
    rotate_member(&mut aps, &k1, |ai| at(ai, &b, &c, 2), false);
    let cs = cx.fan(&c);
    let n = cs.len();
    let mut out: Vec<Vec<V>> = cs[..n - 1]
        .iter()
        .zip(&aps)
        .map(|(ci, ai)| {
            Walk::new(u)
                .to(&at(&a, &b, ci, 0))
                .to(&at(&a, &b, ci, 2))
                .within(&at(ai, &b, ci, 2))
                .to(&at(ai, &b, ci, 0))
                .to(&at(ai, &b, &c, 0))
                .to(&at(ai, &b, &c, 2))
                .to(v)
                .end()
        })
        .collect();
    out.push(Walk::new(u).to(&at(&a, &b, &c, 2)).along(&reversed(&k1)).end());
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 1))
            .to(&at(&a, &b1, &c, 1))
            .to(&at(&a, &b1, &c, 2))
            .within(&at(&ap, &b1, &c, 2))
            .to(&at(&ap, &b1, &c, 1))
            .to(&at(&ap, &b, &c, 1))
            .to(v)
            .end(),
    );
    let cl = &cs[n - 1];
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, cl, 0))
            .to(&at(&a, &b, cl, 2))
            .within(&at(&ap, &b, cl, 2))
            .to(&at(&ap, &b, cl, 0))
            .to(&at(&ap, &b, &c, 0))
            .to(v)
            .end(),
    );
    out
}

fn f13c1(cx: &mut Ctx<'_>, u: &V, v: &V) -> Vec<Vec<V>> {
    let (a, b, c) = blocks(u);
    let (ap, cp) = (v.a().clone(), v.c().clone());
    let (b1, a1) = (cx.lone(&b), cx.lone(&a));
    let at = |a: &T, b: &T, c: &T, d| cx.at(a, b, c, d);
    let mut out: Vec<Vec<V>> = cx
        .fan(&c)
        .iter()
        .zip(cx.fan(&b).iter())
        .map(|(ci, bi)| {
            Walk::new(u)
                .to(&at(&a, &b, ci, 0))
                .to(&at(&a, &b, ci, 1))
                .to(&at(&a, bi, ci, 1))
                .to(&at(&a, bi, ci, 2))
                .within(&at(&ap, bi, ci, 2))
                .to(&at(&ap, bi, ci, 0))
                .within(&at(&ap, bi, &cp, 0))
                .to(&at(&ap, bi, &cp, 1))
                .to(v)
                .end()
        })
        .collect();
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 1))
            .to(&at(&a, &b1, &c, 1))
            .to(&at(&a, &b1, &c, 2))
            .within(&at(&ap, &b1, &c, 2))
            .to(&at(&ap, &b1, &c, 1))
            .to(&at(&ap, &b, &c, 1))
            .to(&at(&ap, &b, &c, 0))
            .within(&at(&ap, &b, &cp, 0))
            .to(v)
            .end(),
    );
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 2))
            .to(&at(&a1, &b, &c, 2))
            .to(&at(&a1, &b, &c, 0))
            .within(&at(&a1, &b, &cp, 0))
            .to(&at(&a1, &b, &cp, 2))
            .within(&at(&ap, &b, &cp, 2))
            .to(v)
            .end(),
    );
    out
}

fn f13c2(cx: &mut Ctx<'_>, u: &V, v: &V) -> Vec<Vec<V>> {
    let (a, b, c) = blocks(u);
    let (ap, cp) = (v.a().clone(), v.c().clone());
    let b1 = cx.lone(&b);
    let at = |a: &T, b: &T, c: &T, d| cx.at(a, b, c, d);
    let k = cx.shortest(u, &at(&a, &b, &cp, 0));
    let h = cx.shortest(v, &at(&a, &b, &cp, 2));
    let mut cs = cx.fan(&c);
    rotate_member(&mut cs, &k, |ci| at(&a, &b, ci, 0), false);
    let mut aps = cx.fan(&ap);
    rotate_member(&mut aps, &h, |ai| at(ai, &b, &cp, 2), false);
    let n = cs.len();
    let mut out: Vec<Vec<V>> = cs[..n - 1]
        .iter()
        .zip(&aps)
        .map(|(ci, ai)| {
            Walk::new(u)
                .to(&at(&a, &b, ci, 0))
                .to(&at(&a, &b, ci, 2))
                .within(&at(ai, &b, ci, 2))
                .to(&at(ai, &b, ci, 0))
                .within(&at(ai, &b, &cp, 0))
                .to(&at(ai, &b, &cp, 2))
                .to(v)
                .end()
        })
        .collect();
    out.push(Walk::new(u).along(&k).to(&at(&a, &b, &cp, 2)).along(&reversed(&h)).end());
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 2))
            .within(&at(&ap, &b, &c, 2))
            .to(&at(&ap, &b, &c, 0))
            .within(&at(&ap, &b, &cp, 0))
            .to(v)
            .end(),
    );
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 1))
            .to(&at(&a, &b1, &c, 1))
            .to(&at(&a, &b1, &c, 0))
            .within(&at(&a, &b1, &cp, 0))
            .to(&at(&a, &b1, &cp, 2))
            .within(&at(&ap, &b1, &cp, 2))
            .to(&at(&ap, &b1, &cp, 1))
            .to(&at(&ap, &b, &cp, 1))
            .to(v)
            .end(),
    );
    out
}

fn f14c1(cx: &mut Ctx<'_>, u: &V, v: &V) -> Vec<Vec<V>> {
    let (a, b, c) = blocks(u);
    let (ap, bp) = (v.a().clone(), v.b().clone());
    let (c1, a1) = (cx.lone(&c), cx.lone(&a));
    let bps = cx.paired_fan(&bp);
    let at = |a: &T, b: &T, c: &T, d| cx.at(a, b, c, d);
    let mut out: Vec<Vec<V>> = cx
        .fan(&c)
        .iter()
        .zip(&bps)
        .map(|(ci, bi)| {
            Walk::new(u)
                .to(&at(&a, &b, ci, 0))
                .to(&at(&a, &b, ci, 1))
                .within(&at(&a, bi, ci, 1))
                .to(&at(&a, bi, ci, 2))
                .within(&at(&ap, bi, ci, 2))
                .to(&at(&ap, bi, ci, 0))
                .to(&at(&ap, bi, &c, 0))
                .to(&at(&ap, bi, &c, 1))
                .to(v)
                .end()
        })
        .collect();
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 1))
            .within(&at(&a, &bp, &c, 1))
            .to(&at(&a, &bp, &c, 0))
            .to(&at(&a, &bp, &c1, 0))
            .to(&at(&a, &bp, &c1, 2))
            .within(&at(&ap, &bp, &c1, 2))
            .to(&at(&ap, &bp, &c1, 0))
            .to(&at(&ap, &bp, &c, 0))
            .to(v)
            .end(),
    );
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 2))
            .to(&at(&a1, &b, &c, 2))
            .to(&at(&a1, &b, &c, 1))
            .within(&at(&a1, &bp, &c, 1))
            .to(&at(&a1, &bp, &c, 2))
            .within(&at(&ap, &bp, &c, 2))
            .to(v)
            .end(),
    );
    out
}

fn f14c3(cx: &mut Ctx<'_>, u: &V, v: &V) -> Vec<Vec<V>> {
    let (a, b, c) = blocks(u);
    let (ap, bp) = (v.a().clone(), v.b().clone());
    let c1 = cx.lone(&c);
    let at = |a: &T, b: &T, c: &T, d| cx.at(a, b, c, d);
    let k = cx.shortest(u, &at(&a, &bp, &c, 1));
    let h = cx.shortest(v, &at(&a, &bp, &c, 2));
    let mut bs = cx.fan(&b);
    rotate_member(&mut bs, &k, |bi| at(&a, bi, &c, 1), false);
    let mut aps = cx.fan(&ap);
    rotate_member(&mut aps, &h, |ai| at(ai, &bp, &c, 2), false);
    let n = bs.len();
    let mut out: Vec<Vec<V>> = bs[..n - 1]
        .iter()
        .zip(&aps)
        .map(|(bi, ai)| {
            Walk::new(u)
                .to(&at(&a, bi, &c, 1))
                .to(&at(&a, bi, &c, 2))
                .within(&at(ai, bi, &c, 2))
                .to(&at(ai, bi, &c, 1))
                .within(&at(ai, &bp, &c, 1))
                .to(&at(ai, &bp, &c, 2))
                .to(v)
                .end()
        })
        .collect();
    out.push(Walk::new(u).along(&k).to(&at(&a, &bp, &c, 2)).along(&reversed(&h)).end());
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 2))
            .within(&at(&ap, &b, &c, 2))
            .to(&at(&ap, &b, &c, 1))
            .within(&at(&ap, &bp, &c, 1))
            .to(v)
            .end(),
    );
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 0))
            .to(&at(&a, &b, &c1, 0))
            .to(&at(&a, &b, &c1, 1))
            .within(&at(&a, &bp, &c1, 1))
            .to(&at(&a, &bp, &c1, 2))
            .within(&at(&ap, &bp, &c1, 2))
            .to(&at(&ap, &bp, &c1, 0))
            .to(&at(&ap, &bp, &c, 0))
            .to(v)
            .end(),
    );
    out
}

fn f15c1(cx: &mut Ctx<'_>, u: &V, v: &V) -> Vec<Vec<V>> {
    let (a, b, c) = blocks(u);
    let (ap, bp, cp) = blocks(v);
    let bps = cx.paired_fan(&bp);
    let at = |a: &T, b: &T, c: &T, d| cx.at(a, b, c, d);
    let mut out: Vec<Vec<V>> = cx
        .fan(&c)
        .iter()
        .zip(&bps)
        .map(|(ci, bi)| {
            Walk::new(u)
                .to(&at(&a, &b, ci, 0))
                .to(&at(&a, &b, ci, 2))
                .within(&at(&ap, &b, ci, 2))
                .to(&at(&ap, &b, ci, 1))
                .within(&at(&ap, bi, ci, 1))
                .to(&at(&ap, bi, ci, 0))
                .within(&at(&ap, bi, &cp, 0))
                .to(&at(&ap, bi, &cp, 1))
                .to(v)
                .end()
        })
        .collect();
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 2))
            .within(&at(&ap, &b, &c, 2))
            .to(&at(&ap, &b, &c, 1))
            .within(&at(&ap, &bp, &c, 1))
            .to(&at(&ap, &bp, &c, 0))
            .within(&at(&ap, &bp, &cp, 0))
            .to(v)
            .end(),
    );
    out.push(
        Walk::new(u)
            .to(&at(&a, &b, &c, 1))
            .within(&at(&a, &bp, &c, 1))
            .to(&at(&a, &bp, &c, 0))
            .within(&at(&a, &bp, &cp, 0))
            .to(&at(&a, &bp, &cp, 2))
            .within(&at(&ap, &bp, &cp, 2))
            .to(v)
            .end(),
    );
    out
}
