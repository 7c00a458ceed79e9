//! North/east lattice paths, EN-turns, nonintersecting families and the
//! Lindström–Gessel–Viennot determinant.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::grassmannian::{GridPoint, Instance};
use crate::hilbert::IntPolynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    North,
    East,
}

impl Step {
    pub fn letter(self) -> char {
        match self {
            Step::North => 'N',
            Step::East => 'E',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    start: GridPoint,
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(start: GridPoint, steps: Vec<Step>) -> Self {
        LatticePath { start, steps }
    }

    /// Parses a word over `{N, E}`.
    pub fn from_letters(start: GridPoint, letters: &str) -> Option<Self> {
        let steps = letters
            .chars()
            .map(|c| match c {
                'N' | 'n' => Some(Step::North),
                'E' | 'e' => Some(Step::East),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()?;
        Some(LatticePath { start, steps })
    }

    #[inline]
    pub fn start(&self) -> GridPoint {
        self.start
    }

    #[inline]
    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn end(&self) -> GridPoint {
        let (mut x, mut y) = (self.start.x, self.start.y);
        for s in &self.steps {
            match s {
                Step::North => y += 1,
                Step::East => x += 1,
            }
        }
        GridPoint::new(x, y)
    }

    /// Every visited lattice point, start and end included.
    pub fn points(&self) -> Vec<GridPoint> {
        let mut cur = self.start;
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(cur);
        for s in &self.steps {
            match s {
                Step::North => cur.y += 1,
                Step::East => cur.x += 1,
            }
            out.push(cur);
        }
        out
    }

    /// Points where an east step is immediately followed by a north step.
    pub fn en_turn_points(&self) -> Vec<GridPoint> {
        let pts = self.points();
        self.steps
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] == Step::East && w[1] == Step::North)
            .map(|(k, _)| pts[k + 1])
            .collect()
    }

    pub fn en_turns(&self) -> usize {
        self.steps.windows(2).filter(|w| w[0] == Step::East && w[1] == Step::North).count()
    }

    pub fn letters(&self) -> String {
        self.steps.iter().map(|s| s.letter()).collect()
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.start, self.letters())
    }
}

/// `d` paths, path `l` starting at `A_{l+1}` and ending at `E_{sigma[l]+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathFamily {
    paths: Vec<LatticePath>,
    sigma: Vec<usize>,
}

impl PathFamily {
    pub fn new(paths: Vec<LatticePath>, sigma: Vec<usize>) -> Self {
        PathFamily { paths, sigma }
    }

    #[inline]
    pub fn paths(&self) -> &[LatticePath] {
        &self.paths
    }

    #[inline]
    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn en_turns(&self) -> usize {
        self.paths.iter().map(LatticePath::en_turns).sum()
    }

    pub fn is_nonintersecting(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.paths.iter().flat_map(|p| p.points()).all(|p| seen.insert(p))
    }

    /// Whether the family joins the start and end points of `inst` as `sigma` prescribes.
    pub fn connects(&self, inst: &Instance) -> bool {
        self.paths.len() == inst.d()
            && self.paths.iter().enumerate().all(|(l, p)| p.start() == inst.starts()[l] && p.end() == inst.target(l))
    }
}

/// Number of north/east paths from `a` to `e`.
pub fn count_ne_paths(a: GridPoint, e: GridPoint) -> BigUint {
    let (dx, dy) = (e.x - a.x, e.y - a.y);
    if dx < 0 || dy < 0 {
        return BigUint::zero();
    }
    num_integer::binomial(BigUint::from((dx + dy) as u64), BigUint::from(dx as u64))
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// `|det (paths(A_k -> E_l))|`, the number of nonintersecting families.
pub fn lgv_multiplicity(inst: &Instance) -> BigUint {
    let matrix = inst
        .starts()
        .iter()
        .map(|&a| inst.ends().iter().map(|&e| BigInt::from(count_ne_paths(a, e))).collect())
        .collect();
    bareiss_determinant(matrix).abs().to_biguint().expect("absolute value is nonnegative")
}

/// Backtracking state: paths are routed in order `l = 0, 1, ...` (rightmost
/// start first), north before east, never touching a point already used or
/// reserved as another path's endpoint.
struct Router<'a> {
    inst: &'a Instance,
    d: i64,
    height: i64,
    occupied: Vec<bool>,
    reserved: Vec<bool>,
    steps: Vec<Vec<Step>>,
    turns: usize,
}

impl<'a> Router<'a> {
    fn new(inst: &'a Instance) -> Self {
        let d = inst.d() as i64;
        let height = inst.n() as i64 - d + 1;
        let cells = (d * height).max(0) as usize;
        let mut r = Router {
            inst,
            d,
            height,
            occupied: vec![false; cells],
            reserved: vec![false; cells],
            steps: vec![Vec::new(); inst.d()],
            turns: 0,
        };
        for &p in inst.starts().iter().chain(inst.ends()) {
            let k = r.cell(p);
            r.reserved[k] = true;
        }
        r
    }

    #[inline]
    fn cell(&self, p: GridPoint) -> usize {
        ((p.x - 1) * self.height + (p.y - self.d)) as usize
    }

    fn family(&self) -> PathFamily {
        let paths = self
            .steps
            .iter()
            .enumerate()
            .map(|(l, s)| LatticePath::new(self.inst.starts()[l], s.clone()))
            .collect();
        PathFamily::new(paths, self.inst.sigma().to_vec())
    }

    fn place_path(&mut self, l: usize, steps: &[Step], mark: bool) {
        let path = LatticePath::new(self.inst.starts()[l], steps.to_vec());
        for p in path.points() {
            let k = self.cell(p);
            self.occupied[k] = mark;
        }
    }

    /// Routes paths `l..d`, calling `visit` once per completed family.
    fn route_from(&mut self, l: usize, visit: &mut dyn FnMut(&Router)) {
        if l == self.inst.d() {
            visit(self);
            return;
        }
        let start = self.inst.starts()[l];
        let k = self.cell(start);
        self.occupied[k] = true;
        self.extend(l, start, self.inst.target(l), visit);
        self.occupied[k] = false;
    }

    fn extend(&mut self, l: usize, cur: GridPoint, target: GridPoint, visit: &mut dyn FnMut(&Router)) {
        if cur == target {
            self.route_from(l + 1, visit);
            return;
        }
        for step in [Step::North, Step::East] {
            let next = match step {
                Step::North if cur.y < target.y => GridPoint::new(cur.x, cur.y + 1),
                Step::East if cur.x < target.x => GridPoint::new(cur.x + 1, cur.y),
                _ => continue,
            };
            let k = self.cell(next);
            if self.occupied[k] || (self.reserved[k] && next != target) {
                continue;
            }
            let turn = step == Step::North && self.steps[l].last() == Some(&Step::East);
            self.occupied[k] = true;
            self.steps[l].push(step);
            self.turns += turn as usize;
            self.extend(l, next, target, visit);
            self.turns -= turn as usize;
            self.steps[l].pop();
            self.occupied[k] = false;
        }
    }
}

/// Every admissible route of the first path, in search order.
fn first_path_choices(inst: &Instance) -> Vec<Vec<Step>> {
    let mut router = Router::new(inst);
    let mut out = Vec::new();
    let start = inst.starts()[0];
    let k = router.cell(start);
    router.occupied[k] = true;
    // stop after the first path by routing with d = 1 semantics
    fn collect(r: &mut Router, cur: GridPoint, target: GridPoint, out: &mut Vec<Vec<Step>>) {
        if cur == target {
            out.push(r.steps[0].clone());
            return;
        }
        for step in [Step::North, Step::East] {
            let next = match step {
                Step::North if cur.y < target.y => GridPoint::new(cur.x, cur.y + 1),
                Step::East if cur.x < target.x => GridPoint::new(cur.x + 1, cur.y),
                _ => continue,
            };
            let k = r.cell(next);
            if r.reserved[k] && next != target {
                continue;
            }
            r.steps[0].push(step);
            collect(r, next, target, out);
            r.steps[0].pop();
        }
    }
    collect(&mut router, start, inst.target(0), &mut out);
    out
}

/// Runs `work` on every subtree of the search (one per route of the first
/// path) in parallel, returning per-subtree results in search order.
fn par_subtrees<T: Send>(inst: &Instance, work: impl Fn(&mut Router) -> T + Sync) -> Vec<T> {
    if inst.d() == 0 {
        let mut r = Router::new(inst);
        return vec![work(&mut r)];
    }
    first_path_choices(inst)
        .into_par_iter()
        .map(|first| {
            let mut r = Router::new(inst);
            r.place_path(0, &first, true);
            r.turns = LatticePath::new(inst.starts()[0], first.clone()).en_turns();
            r.steps[0] = first;
            work(&mut r)
        })
        .collect()
}

fn subtree_entry(r: &mut Router, visit: &mut dyn FnMut(&Router)) {
    if r.inst.d() == 0 {
        visit(r);
    } else {
        r.route_from(1, visit);
    }
}

/// All nonintersecting families joining `A_l` to `E_{sigma(l)}`, in
/// deterministic search order.
pub fn enumerate_families(inst: &Instance) -> Vec<PathFamily> {
    par_subtrees(inst, |r| {
        let mut out = Vec::new();
        subtree_entry(r, &mut |r: &Router| out.push(r.family()));
        out
    })
    .into_iter()
    .flatten()
    .collect()
}

/// Number of nonintersecting families, by enumeration.
pub fn count_families(inst: &Instance) -> u64 {
    par_subtrees(inst, |r| {
        let mut count = 0u64;
        subtree_entry(r, &mut |_: &Router| count += 1);
        count
    })
    .into_iter()
    .sum()
}

/// `sum over families of z^{EN(family)}`.
pub fn turn_polynomial(inst: &Instance) -> IntPolynomial {
    let per_tree = par_subtrees(inst, |r| {
        let mut hist: Vec<u64> = Vec::new();
        subtree_entry(r, &mut |r: &Router| {
            if hist.len() <= r.turns {
                hist.resize(r.turns + 1, 0);
            }
            hist[r.turns] += 1;
        });
        hist
    });
    let mut total: Vec<u64> = Vec::new();
    for hist in per_tree {
        if total.len() < hist.len() {
            total.resize(hist.len(), 0);
        }
        for (t, c) in hist.into_iter().enumerate() {
            total[t] += c;
        }
    }
    IntPolynomial::new(total.into_iter().map(BigUint::from).collect())
}
