//! Exhaustive cross-checks over every pair `tau <= w` of small Grassmannians:
//! the three multiplicity engines, the light-and-shadow round trip, the chain
//! condition against the naive Bruhat check, and the Hilbert function against
//! multiset counting.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;

use crate::grassmannian::{bruhat_leq, GrassmannianShape, Instance};
use crate::hilbert::{hilbert_function, hilbert_function_oracle, hilbert_series};
use crate::paths::{enumerate_families, lgv_multiplicity, turn_polynomial};
use crate::reflections::{chain_condition, enumerate_s1s2_sets, s1_check_naive};
use crate::shadow::{family_point_multiset, light_and_shadow, ReflectionMultiset};

/// Largest `n` the exhaustive run accepts.
pub const MAX_VERIFY_N: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_n: usize,
    /// Largest support size for the chain-condition equivalence check.
    pub claim3_support: usize,
    /// Largest degree `m` for the Hilbert-function check.
    pub hilbert_max_m: usize,
}

impl VerifyOptions {
    pub fn up_to(max_n: usize) -> Self {
        VerifyOptions { max_n, claim3_support: 4, hilbert_max_m: 3 }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerifyStats {
    pub instances: usize,
    pub families: usize,
    pub maximal_sets: usize,
    pub chain_subsets: usize,
    pub hilbert_values: usize,
}

impl VerifyStats {
    fn absorb(&mut self, other: VerifyStats) {
        self.instances += other.instances;
        self.families += other.families;
        self.maximal_sets += other.maximal_sets;
        self.chain_subsets += other.chain_subsets;
        self.hilbert_values += other.hilbert_values;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub n: usize,
    pub d: usize,
    pub w: Vec<usize>,
    pub tau: Vec<usize>,
    pub check: &'static str,
    pub detail: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} failed for n={} d={} w={:?} tau={:?}: {}",
            self.check, self.n, self.d, self.w, self.tau, self.detail
        )
    }
}

/// Every instance with `1 <= n <= max_n`, ordered by `n`, then `d`, then `w`
/// and `tau` lexicographically.
pub fn all_instances(max_n: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for d in 0..=n {
            let shape = GrassmannianShape::new(n, d).expect("valid shape");
            let cosets = shape.cosets();
            for w in &cosets {
                for tau in cosets.iter().filter(|t| bruhat_leq(t, w).expect("same shape")) {
                    out.push(Instance::new(w.clone(), tau.clone()).expect("tau <= w"));
                }
            }
        }
    }
    out
}

/// Runs every check, stopping at the first mismatch. Since instances are
/// visited in increasing `n`, the reported instance is a smallest failing one.
pub fn verify_all(opts: VerifyOptions) -> Result<VerifyStats, Mismatch> {
    let mut stats = VerifyStats::default();
    for inst in all_instances(opts.max_n) {
        stats.absorb(check_instance(&inst, opts)?);
    }
    Ok(stats)
}

pub fn check_instance(inst: &Instance, opts: VerifyOptions) -> Result<VerifyStats, Mismatch> {
    let fail = |check: &'static str, detail: String| Mismatch {
        n: inst.n(),
        d: inst.d(),
        w: inst.w().entries().to_vec(),
        tau: inst.tau().entries().to_vec(),
        check,
        detail,
    };
    let mut stats = VerifyStats { instances: 1, ..Default::default() };

    let det = lgv_multiplicity(inst);
    let families = enumerate_families(inst);
    let sets = enumerate_s1s2_sets(inst);
    stats.families = families.len();
    stats.maximal_sets = sets.len();
    if BigUint::from(families.len()) != det || BigUint::from(sets.len()) != det {
        return Err(fail(
            "multiplicity engines",
            format!("determinant {det}, paths {}, reflections {}", families.len(), sets.len()),
        ));
    }

    let dim = inst.w().dimension();
    let mut point_sets = BTreeSet::new();
    for f in &families {
        if !f.is_nonintersecting() || !f.connects(inst) {
            return Err(fail("family validity", format!("{:?}", f.paths())));
        }
        let pts = family_point_multiset(f);
        if pts.cardinality() != dim {
            return Err(fail("point count", format!("{} points, expected {dim}", pts.cardinality())));
        }
        match light_and_shadow(&pts, inst) {
            Ok(g) if &g == f => {}
            other => return Err(fail("light-and-shadow round trip", format!("{f:?} -> {other:?}"))),
        }
        point_sets.insert(pts);
    }
    let maximal: BTreeSet<ReflectionMultiset> = sets.iter().cloned().collect();
    if point_sets != maximal {
        return Err(fail("maximal sets equal path point sets", format!("{point_sets:?} vs {maximal:?}")));
    }
    for s in &sets {
        match light_and_shadow(s, inst) {
            Ok(f) if &family_point_multiset(&f) == s => {}
            other => return Err(fail("maximal set round trip", format!("{s:?} -> {other:?}"))),
        }
    }

    let series = hilbert_series(inst);
    if series.numerator.eval_at_one() != det {
        return Err(fail("numerator at 1", format!("{} vs {det}", series.numerator)));
    }
    let mut hist = vec![0u64; families.iter().map(|f| f.en_turns() + 1).max().unwrap_or(1)];
    for f in &families {
        hist[f.en_turns()] += 1;
    }
    let hist = crate::hilbert::IntPolynomial::from_u64(&hist);
    if hist != turn_polynomial(inst) {
        return Err(fail("turn polynomial", format!("{hist} vs {}", series.numerator)));
    }

    let rect = inst.rectangle();
    let mut mismatch = None;
    for_each_subset(&rect, opts.claim3_support, |subset| {
        stats.chain_subsets += 1;
        let s: ReflectionMultiset = subset.iter().copied().collect();
        if chain_condition(&s, inst) != s1_check_naive(&s, inst) {
            mismatch = Some(format!("{subset:?}"));
            return false;
        }
        true
    });
    if let Some(detail) = mismatch {
        return Err(fail("chain condition vs naive Bruhat check", detail));
    }

    for m in 0..=opts.hilbert_max_m {
        stats.hilbert_values += 1;
        let series_value = hilbert_function(&series, m);
        let oracle = hilbert_function_oracle(inst, m);
        if series_value != oracle {
            return Err(fail("Hilbert function", format!("m={m}: series {series_value}, multisets {oracle}")));
        }
    }
    Ok(stats)
}

/// Visits each subset of `items` with at most `max_size` elements.
pub fn for_each_subset<T: Copy>(items: &[T], max_size: usize, mut visit: impl FnMut(&[T]) -> bool) {
    fn rec<T: Copy>(items: &[T], from: usize, max: usize, cur: &mut Vec<T>, visit: &mut dyn FnMut(&[T]) -> bool) -> bool {
        if !visit(cur) {
            return false;
        }
        if cur.len() == max {
            return true;
        }
        for k in from..items.len() {
            cur.push(items[k]);
            let go_on = rec(items, k + 1, max, cur, visit);
            cur.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
    rec(items, 0, max_size, &mut Vec::new(), &mut visit);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_counts() {
        let mut seen = 0;
        for_each_subset(&[1, 2, 3, 4, 5], 2, |_| {
            seen += 1;
            true
        });
        assert_eq!(seen, 1 + 5 + 10);
    }

    #[test]
    fn vacuous_and_small_runs_pass() {
        assert_eq!(verify_all(VerifyOptions::up_to(0)), Ok(VerifyStats::default()));
        let stats = verify_all(VerifyOptions::up_to(4)).unwrap();
        assert!(stats.instances > 0);
    }

    #[test]
    fn instance_listing_is_ordered() {
        let all = all_instances(3);
        assert!(all.windows(2).all(|p| p[0].n() <= p[1].n()));
        // n=1: d=0 and d=1 each have one pair
        assert_eq!(all.iter().filter(|i| i.n() == 1).count(), 2);
    }
}
