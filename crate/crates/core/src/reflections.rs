//! Reflection sets: the Bruhat chain property checked naively, the chain
//! condition that replaces it, maximality, and exhaustive search for the
//! maximal sets.
//!
//! A reflection `(x, y)` with `x <= d < y` is the transposition of positions
//! `x` and `y`. A chain is a list of points with `x` strictly increasing and
//! `y` strictly decreasing; its transpositions are disjoint and so commute.

use crate::error::{Error, Result};
use crate::grassmannian::{bruhat_leq, FullPermutation, GridPoint, Instance};
use crate::shadow::ReflectionMultiset;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReflectionChain {
    elements: Vec<GridPoint>,
}

impl ReflectionChain {
    /// Fails unless `x` strictly increases and `y` strictly decreases.
    pub fn new(elements: Vec<GridPoint>) -> Option<Self> {
        let ok = elements.windows(2).all(|p| p[0].x < p[1].x && p[0].y > p[1].y);
        ok.then_some(ReflectionChain { elements })
    }

    #[inline]
    pub fn elements(&self) -> &[GridPoint] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// `R(A)`: weakly left of and strictly above `anchor`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Region {
    pub anchor: GridPoint,
}

impl Region {
    pub fn new(anchor: GridPoint) -> Self {
        Region { anchor }
    }

    #[inline]
    pub fn contains(&self, p: GridPoint) -> bool {
        p.x <= self.anchor.x && p.y > self.anchor.y
    }
}

/// Right-multiplies `tau` by the chain's transpositions (swaps positions).
pub fn apply_chain(tau: &FullPermutation, chain: &ReflectionChain) -> FullPermutation {
    let mut out = tau.clone();
    for p in chain.elements() {
        out.swap_positions(p.x as usize, p.y as usize);
    }
    out
}

/// Calls `visit` on every chain (the empty one included) whose elements are
/// drawn from `points`.
fn for_each_chain(points: &[GridPoint], mut visit: impl FnMut(&[GridPoint]) -> bool) -> bool {
    let mut sorted = points.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    fn rec(sorted: &[GridPoint], from: usize, cur: &mut Vec<GridPoint>, visit: &mut dyn FnMut(&[GridPoint]) -> bool) -> bool {
        if !visit(cur) {
            return false;
        }
        for k in from..sorted.len() {
            let p = sorted[k];
            if let Some(last) = cur.last() {
                if !(last.x < p.x && last.y > p.y) {
                    continue;
                }
            }
            cur.push(p);
            let go_on = rec(sorted, k + 1, cur, visit);
            cur.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
    rec(&sorted, 0, &mut Vec::new(), &mut visit)
}

/// Every chain `s_1 > ... > s_t` from the support of `s` keeps
/// `tau * s_1 ... s_t` below `w`. Checked by listing all chains.
pub fn s1_check_naive(s: &ReflectionMultiset, inst: &Instance) -> bool {
    let tau = inst.tau().expand_minimal();
    let shape = inst.shape();
    for_each_chain(&s.support(), |chain| {
        let chain = ReflectionChain { elements: chain.to_vec() };
        let moved = apply_chain(&tau, &chain).coset(shape);
        bruhat_leq(&moved, inst.w()).expect("same shape")
    })
}

/// Longest chain among the support points of `s` that lie inside `r`.
pub fn longest_chain_in_region(s: &ReflectionMultiset, r: Region) -> usize {
    longest_chain(s.support().into_iter().filter(|p| r.contains(*p)))
}

fn longest_chain(points: impl Iterator<Item = GridPoint>) -> usize {
    let mut pts: Vec<GridPoint> = points.collect();
    pts.sort_unstable();
    // best[k]: longest chain ending at pts[k]
    let mut best = vec![1usize; pts.len()];
    for k in 0..pts.len() {
        for j in 0..k {
            if pts[j].x < pts[k].x && pts[j].y > pts[k].y {
                best[k] = best[k].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// For each `q`, chains inside `R(E_q)` have at most `d - kappa_q - q` points.
pub fn chain_condition(s: &ReflectionMultiset, inst: &Instance) -> bool {
    support_passes(&s.support(), inst)
}

fn support_passes(points: &[GridPoint], inst: &Instance) -> bool {
    inst.ends().iter().enumerate().all(|(k, &e)| {
        let region = Region::new(e);
        longest_chain(points.iter().copied().filter(|p| region.contains(*p))) <= inst.chain_bound(k + 1)
    })
}

/// Whether `s` is maximal: adding any missing reflection breaks the chain
/// property. `s` itself must have it.
pub fn s2_check(s: &ReflectionMultiset, inst: &Instance) -> Result<bool> {
    let mut support = s.support();
    if !support_passes(&support, inst) {
        return Err(Error::NotS1);
    }
    for p in inst.rectangle() {
        if s.contains(p) {
            continue;
        }
        support.push(p);
        let passes = support_passes(&support, inst);
        support.pop();
        if passes {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Rectangle points that pass the chain condition on their own; every set
/// with the chain property is drawn from these.
pub fn admissible_reflections(inst: &Instance) -> Vec<GridPoint> {
    inst.rectangle().into_iter().filter(|&p| support_passes(&[p], inst)).collect()
}

/// All maximal reflection sets with the chain property, searched over the
/// admissible reflections.
pub fn enumerate_s1s2_sets(inst: &Instance) -> Vec<ReflectionMultiset> {
    let candidates = admissible_reflections(inst);
    enumerate_s1s2_sets_within(inst, &candidates)
}

/// As [`enumerate_s1s2_sets`], drawing elements only from `candidates`
/// (maximality is still judged against the whole rectangle).
pub fn enumerate_s1s2_sets_within(inst: &Instance, candidates: &[GridPoint]) -> Vec<ReflectionMultiset> {
    let mut candidates: Vec<GridPoint> = candidates.iter().copied().filter(|&p| inst.in_rectangle(p)).collect();
    candidates.sort_unstable();
    candidates.dedup();
    let rectangle = admissible_reflections(inst);
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    search(inst, &candidates, &rectangle, 0, &mut chosen, &mut out);
    out.sort();
    out
}

fn search(
    inst: &Instance,
    candidates: &[GridPoint],
    rectangle: &[GridPoint],
    k: usize,
    chosen: &mut Vec<GridPoint>,
    out: &mut Vec<ReflectionMultiset>,
) {
    if k == candidates.len() {
        let maximal = rectangle.iter().all(|p| {
            if chosen.contains(p) {
                return true;
            }
            chosen.push(*p);
            let passes = support_passes(chosen, inst);
            chosen.pop();
            !passes
        });
        if maximal {
            out.push(chosen.iter().copied().collect());
        }
        return;
    }
    let p = candidates[k];
    chosen.push(p);
    if support_passes(chosen, inst) {
        search(inst, candidates, rectangle, k + 1, chosen, out);
    }
    chosen.pop();
    search(inst, candidates, rectangle, k + 1, chosen, out);
}
