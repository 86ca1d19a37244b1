use std::collections::BTreeSet;

use crate::cartan::RootVector;
use crate::quiver::{Letter, Quiver};

use super::band::{is_cyclic_string, Band};
use super::word::StringWord;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StringFilter {
    All,
    LocallyFree,
}

/// Every string with at most `max_letters` letters, trivial words first,
/// then by first letter and depth-first extension to the right.
pub fn enumerate_strings(q: &Quiver, max_letters: usize, filter: StringFilter) -> Vec<StringWord> {
    let mut out = Vec::new();
    for v in 0..=q.n() {
        for positive in [true, false] {
            out.push(StringWord::trivial(v, positive));
        }
    }
    if max_letters > 0 {
        for a in q.arrows() {
            for x in [Letter::direct(a), Letter::inv(a)] {
                let w = StringWord::new(q, vec![x]).expect("single letter");
                extend(q, w, max_letters, &mut out);
            }
        }
    }
    if filter == StringFilter::LocallyFree {
        out.retain(|w| w.is_locally_free(q));
    }
    out
}

fn extend(q: &Quiver, w: StringWord, max_letters: usize, out: &mut Vec<StringWord>) {
    if w.len() < max_letters {
        for x in w.right_extensions(q) {
            if let Some(longer) = w.push(q, x) {
                extend(q, longer, max_letters, out);
            }
        }
    }
    out.push(w);
}

/// Canonical primitive bands with at most `max_letters` letters, sorted.
pub fn enumerate_bands(q: &Quiver, max_letters: usize) -> Vec<Band> {
    let mut found = BTreeSet::new();
    let mut stack: Vec<Vec<Letter>> = Vec::new();
    for a in q.arrows() {
        for x in [Letter::direct(a), Letter::inv(a)] {
            stack.push(vec![x]);
        }
    }
    while let Some(letters) = stack.pop() {
        if is_cyclic_string(q, &letters) {
            let (b, _) = Band::new(q, letters.clone()).expect("cyclic");
            if b.is_primitive() {
                found.insert(b);
            }
        }
        if letters.len() < max_letters {
            let w = StringWord::new(q, letters.clone()).expect("built by extension");
            for x in w.right_extensions(q) {
                if w.push(q, x).is_some() {
                    let mut next = letters.clone();
                    next.push(x);
                    stack.push(next);
                }
            }
        }
    }
    found.into_iter().collect()
}

/// Visit budget: `d_v` at interior vertices and `2 d_v` at the loop vertices.
fn budget(q: &Quiver, bound: &RootVector) -> Vec<usize> {
    (0..=q.n())
        .map(|v| {
            let d = bound.0[v].max(0) as usize;
            if q.is_loop_vertex(v) {
                2 * d
            } else {
                d
            }
        })
        .collect()
}

/// Every string whose walk fits inside the rank `bound`, trivial words included.
pub fn strings_within(q: &Quiver, bound: &RootVector) -> Vec<StringWord> {
    let cap = budget(q, bound);
    let mut out = Vec::new();
    for v in 0..=q.n() {
        if cap[v] > 0 {
            for positive in [true, false] {
                out.push(StringWord::trivial(v, positive));
            }
        }
    }
    for a in q.arrows() {
        for x in [Letter::direct(a), Letter::inv(a)] {
            let mut used = vec![0usize; q.n() + 1];
            used[q.target(x)] += 1;
            used[q.source(x)] += 1;
            if used.iter().zip(&cap).all(|(u, c)| u <= c) {
                let w = StringWord::new(q, vec![x]).expect("single letter");
                extend_within(q, w, &mut used, &cap, &mut out);
            }
        }
    }
    out
}

fn extend_within(q: &Quiver, w: StringWord, used: &mut [usize], cap: &[usize], out: &mut Vec<StringWord>) {
    for x in w.right_extensions(q) {
        let v = q.source(x);
        if used[v] < cap[v] {
            if let Some(longer) = w.push(q, x) {
                used[v] += 1;
                extend_within(q, longer, used, cap, out);
                used[v] -= 1;
            }
        }
    }
    out.push(w);
}

/// Locally free strings of rank exactly `rank`, one per pair `{w, w^-1}`.
pub fn strings_of_rank(q: &Quiver, rank: &RootVector) -> Vec<StringWord> {
    let found: BTreeSet<StringWord> = strings_within(q, rank)
        .into_iter()
        .filter(|w| w.is_locally_free(q) && w.rank_vector(q).as_ref() == Ok(rank))
        .map(|w| canonical_string(&w))
        .collect();
    found.into_iter().collect()
}

/// The representative of `{w, w^-1}` used as an isomorphism class label.
pub fn canonical_string(w: &StringWord) -> StringWord {
    match w.trivial_data() {
        Some(t) => StringWord::trivial(t.vertex, true),
        None => {
            let inv = w.inverse();
            if inv < *w {
                inv
            } else {
                w.clone()
            }
        }
    }
}

/// Canonical primitive bands whose cyclic walk fits inside `bound`.
pub fn bands_within(q: &Quiver, bound: &RootVector) -> Vec<Band> {
    let cap = budget(q, bound);
    let mut found = BTreeSet::new();
    let mut stack: Vec<(Vec<Letter>, Vec<usize>)> = Vec::new();
    for a in q.arrows() {
        for x in [Letter::direct(a), Letter::inv(a)] {
            let mut used = vec![0usize; q.n() + 1];
            used[q.source(x)] += 1;
            if used[q.source(x)] <= cap[q.source(x)] {
                stack.push((vec![x], used));
            }
        }
    }
    while let Some((letters, used)) = stack.pop() {
        if is_cyclic_string(q, &letters) {
            let (b, _) = Band::new(q, letters.clone()).expect("cyclic");
            if b.is_primitive() {
                found.insert(b);
            }
        }
        let w = StringWord::new(q, letters.clone()).expect("built by extension");
        for x in w.right_extensions(q) {
            let v = q.source(x);
            if used[v] < cap[v] && w.push(q, x).is_some() {
                let mut next = letters.clone();
                next.push(x);
                let mut u = used.clone();
                u[v] += 1;
                stack.push((next, u));
            }
        }
    }
    found.into_iter().collect()
}
