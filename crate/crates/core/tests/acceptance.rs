//! Acceptance suite. Each criterion prints one PASS/FAIL line; run with
//! `cargo test -p schubert-core --test acceptance -- --nocapture` to see them.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use schubert_core::verify::{all_instances, for_each_subset};
use schubert_core::*;

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn pt(x: i64, y: i64) -> GridPoint {
    GridPoint::new(x, y)
}

fn fig1() -> Instance {
    Instance::from_entries(21, 9, &[4, 6, 7, 13, 14, 17, 19, 20, 21], &[1, 2, 4, 7, 10, 12, 13, 15, 16]).unwrap()
}

fn quadric() -> Instance {
    Instance::from_entries(4, 2, &[2, 4], &[1, 2]).unwrap()
}

/// Pairs `tau <= w` with `n` in `lo..=hi`, all `d`.
fn instances(lo: usize, hi: usize) -> Vec<Instance> {
    all_instances(hi).into_iter().filter(|i| i.n() >= lo).collect()
}

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Outcome {
    let started = Instant::now();
    let inst = fig1();
    check(inst.kappa() == [6, 6, 5, 2, 2, 0, 0, 0, 0], || format!("kappa {:?}", inst.kappa()))?;
    let sigma: String = inst.sigma_one_based().iter().map(|s| s.to_string()).collect();
    check(sigma == "674583129", || format!("sigma {sigma}"))?;
    let elapsed = started.elapsed();
    check(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("kappa (6,6,5,2,2,0,0,0,0), sigma 674583129 in {elapsed:?}"))
}

fn criterion_2() -> Outcome {
    let started = Instant::now();
    let inst = quadric();
    let det = lgv_multiplicity(&inst);
    let paths = enumerate_families(&inst).len();
    let sets = enumerate_s1s2_sets(&inst).len();
    check(det == big(2) && paths == 2 && sets == 2, || format!("engines {det} {paths} {sets}"))?;
    let hs = hilbert_series(&inst);
    check(hs.numerator == IntPolynomial::from_u64(&[1, 1]), || format!("numerator {}", hs.numerator))?;
    check(hs.pole_order == 3, || format!("T = {}", hs.pole_order))?;
    let values: Vec<BigUint> = (0..=4).map(|m| hilbert_function(&hs, m)).collect();
    check(values == [1u64, 4, 9, 16, 25].map(big), || format!("values {values:?}"))?;
    let elapsed = started.elapsed();
    check(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("multiplicity 2 x3, 1+z, T=3, h = 1,4,9,16,25 in {elapsed:?}"))
}

fn criterion_3() -> Outcome {
    let started = Instant::now();
    let all = instances(4, 6);
    for inst in &all {
        let det = lgv_multiplicity(inst);
        let paths = enumerate_families(inst).len();
        let sets = enumerate_s1s2_sets(inst).len();
        check(BigUint::from(paths) == det && BigUint::from(sets) == det, || {
            format!("w={} tau={}: det {det}, paths {paths}, sets {sets}", inst.w(), inst.tau())
        })?;
    }
    let elapsed = started.elapsed();
    check(elapsed < Duration::from_secs(600), || format!("took {elapsed:?}"))?;
    Ok(format!("{} instances, three engines equal, in {elapsed:?}", all.len()))
}

fn criterion_4() -> Outcome {
    let (mut families, mut sets) = (0, 0);
    for inst in instances(4, 6) {
        for f in enumerate_families(&inst) {
            families += 1;
            let back = light_and_shadow(&family_point_multiset(&f), &inst).map_err(|e| e.to_string())?;
            check(back == f, || format!("w={} tau={}: {f:?} -> {back:?}", inst.w(), inst.tau()))?;
        }
        for s in enumerate_s1s2_sets(&inst) {
            sets += 1;
            let f = light_and_shadow(&s, &inst).map_err(|e| e.to_string())?;
            check(family_point_multiset(&f) == s, || format!("w={} tau={}: {s:?}", inst.w(), inst.tau()))?;
        }
    }
    Ok(format!("{families} families and {sets} maximal sets round-trip"))
}

fn criterion_5() -> Outcome {
    let mut subsets = 0usize;
    for inst in instances(1, 5) {
        let mut failure = None;
        for_each_subset(&inst.rectangle(), 4, |sub| {
            subsets += 1;
            let s: ReflectionMultiset = sub.iter().copied().collect();
            if chain_condition(&s, &inst) != s1_check_naive(&s, &inst) {
                failure = Some(format!("w={} tau={} S={sub:?}", inst.w(), inst.tau()));
                return false;
            }
            true
        });
        if let Some(f) = failure {
            return Err(f);
        }
    }
    Ok(format!("{subsets} reflection subsets agree"))
}

fn criterion_6() -> Outcome {
    let mut checked = 0;
    for inst in instances(1, 5) {
        let hs = hilbert_series(&inst);
        for m in 0..=3 {
            let (a, b) = (hilbert_function(&hs, m), hilbert_function_oracle(&inst, m));
            check(a == b, || format!("w={} tau={} m={m}: {a} vs {b}", inst.w(), inst.tau()))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} Hilbert values agree with multiset counts"))
}

fn criterion_7() -> Outcome {
    let all = instances(4, 6);
    for inst in &all {
        let (num, det) = (turn_polynomial(inst), lgv_multiplicity(inst));
        check(num.eval_at_one() == det, || format!("w={} tau={}: {num} at 1 vs {det}", inst.w(), inst.tau()))?;
    }
    Ok(format!("numerator(1) = determinant on {} instances", all.len()))
}

fn criterion_8() -> Outcome {
    let mut count = 0;
    for n in 1..=6 {
        for d in 0..=n {
            for w in GrassmannianShape::new(n, d).unwrap().cosets() {
                let inst = Instance::new(w.clone(), w.clone()).map_err(|e| e.to_string())?;
                let t: usize = w.entries().iter().enumerate().map(|(k, i)| i - (k + 1)).sum();
                let hs = hilbert_series(&inst);
                check(
                    lgv_multiplicity(&inst) == big(1)
                        && count_families(&inst) == 1
                        && enumerate_s1s2_sets(&inst).len() == 1,
                    || format!("w={w}: multiplicity not 1"),
                )?;
                check(hs.numerator == IntPolynomial::one(), || format!("w={w}: numerator {}", hs.numerator))?;
                check(hs.pole_order == t, || format!("w={w}: T {} vs {t}", hs.pole_order))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} smooth points: multiplicity 1, numerator 1, T = sum(i_l - l)"))
}

/// The multiset drawn for the light-and-shadow example.
fn fig2a() -> ReflectionMultiset {
    let mut s = ReflectionMultiset::new();
    for (x, y, copies) in [
        (2, 13, 1),
        (3, 10, 3),
        (3, 11, 2),
        (4, 10, 1),
        (4, 16, 1),
        (5, 18, 3),
        (6, 17, 1),
        (6, 18, 1),
        (7, 11, 1),
        (7, 16, 2),
        (7, 19, 1),
        (8, 21, 4),
        (9, 13, 1),
        (9, 18, 1),
    ] {
        s.insert_many(pt(x, y), copies);
    }
    s
}

/// The family drawn for it: start column and step word (N = north, E = east).
fn fig2b() -> Vec<(i64, &'static str)> {
    vec![
        (9, "NNNNNNNN"),
        (8, "NNNNNNNNNEN"),
        (7, "NNNNNN"),
        (6, "NNNNNNNE"),
        (5, "NNNNNNNNENNENEE"),
        (4, "NNN"),
        (3, "N"),
        (2, "NNEN"),
        (1, "NNNNENNNEENNENNNEEEE"),
    ]
}

fn criterion_9() -> Outcome {
    let inst = fig1();
    let s = fig2a();
    check(s.cardinality() == 23, || format!("multiset has {} elements", s.cardinality()))?;
    let trace = light_and_shadow_trace(&s, &inst).map_err(|e| e.to_string())?;
    for (l, (x, word)) in fig2b().into_iter().enumerate() {
        let expected = LatticePath::from_letters(pt(x, 9), word).unwrap();
        let got = &trace.family.paths()[l];
        check(got == &expected, || format!("path {}: {} vs {}", l + 1, got, expected))?;
    }
    let first: BTreeSet<GridPoint> = trace.removed[0].iter().copied().collect();
    let expected: BTreeSet<GridPoint> = [pt(9, 9), pt(9, 13), pt(9, 17)].into_iter().collect();
    check(first == expected, || format!("first iteration removed {first:?}"))?;
    Ok("figure 2.b family reproduced; first iteration removes (9,9),(9,13),(9,17)".into())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("1 figure-1 kappa and sigma", criterion_1),
        ("2 quadric cone", criterion_2),
        ("3 three-engine multiplicity, n in 4..=6", criterion_3),
        ("4 light-and-shadow round trips", criterion_4),
        ("5 chain condition = naive Bruhat check, n <= 5", criterion_5),
        ("6 Hilbert function = multiset count, n <= 5, m <= 3", criterion_6),
        ("7 numerator at 1 = multiplicity", criterion_7),
        ("8 smooth points, n <= 6", criterion_8),
        ("9 figure-2 light-and-shadow", criterion_9),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                println!("FAIL criterion {name}: {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
