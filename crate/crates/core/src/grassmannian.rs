//! Cosets of `S_n / (S_d x S_{n-d})`, the induced Bruhat order, and the
//! start/end points that set up the lattice-path model of a pair `tau <= w`.
//!
//! A coset is stored as the increasing vector of its first `d` letters.
//! Grid points use `x` for the column and `y` for the row; start points sit on
//! the row `y = d` and end points lie in the strip `1 <= x <= d`, `d <= y <= n`.

use std::fmt;

use crate::error::{Error, Result};
use crate::shadow;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GrassmannianShape {
    n: usize,
    d: usize,
}

impl GrassmannianShape {
    pub fn new(n: usize, d: usize) -> Result<Self> {
        if n == 0 || d > n {
            return Err(Error::InvalidShape { n, d });
        }
        Ok(GrassmannianShape { n, d })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn d(&self) -> usize {
        self.d
    }

    /// Every coset of this shape, in lexicographic order of the entry vectors.
    pub fn cosets(&self) -> Vec<CosetRep> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(self.d);
        fn rec(shape: GrassmannianShape, next: usize, cur: &mut Vec<usize>, out: &mut Vec<CosetRep>) {
            if cur.len() == shape.d {
                out.push(CosetRep { shape, entries: cur.clone() });
                return;
            }
            let remaining = shape.d - cur.len();
            for v in next..=shape.n + 1 - remaining {
                cur.push(v);
                rec(shape, v + 1, cur, out);
                cur.pop();
            }
        }
        rec(*self, 1, &mut current, &mut out);
        out
    }
}

/// A coset, identified with the increasing vector of the first `d` letters of
/// its minimal representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CosetRep {
    shape: GrassmannianShape,
    entries: Vec<usize>,
}

impl CosetRep {
    pub fn new(shape: GrassmannianShape, entries: Vec<usize>) -> Result<Self> {
        if entries.len() != shape.d {
            return Err(Error::WrongLength { expected: shape.d, got: entries.len() });
        }
        for &v in &entries {
            if v == 0 || v > shape.n {
                return Err(Error::EntryOutOfRange { value: v, n: shape.n });
            }
        }
        for pair in entries.windows(2) {
            if pair[0] >= pair[1] {
                return Err(Error::NotIncreasing { prev: pair[0], next: pair[1] });
            }
        }
        Ok(CosetRep { shape, entries })
    }

    #[inline]
    pub fn shape(&self) -> GrassmannianShape {
        self.shape
    }

    #[inline]
    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Minimal representative: the entries followed by their complement in
    /// ascending order.
    pub fn expand_minimal(&self) -> FullPermutation {
        let mut used = vec![false; self.shape.n + 1];
        for &v in &self.entries {
            used[v] = true;
        }
        let mut word = self.entries.clone();
        word.extend((1..=self.shape.n).filter(|&v| !used[v]));
        FullPermutation { word }
    }

    /// `dim X(w) = sum(i_l) - d(d+1)/2`.
    pub fn dimension(&self) -> usize {
        let d = self.shape.d;
        self.entries.iter().sum::<usize>() - d * (d + 1) / 2
    }
}

impl fmt::Display for CosetRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FullPermutation {
    word: Vec<usize>,
}

impl FullPermutation {
    pub fn from_word(word: Vec<usize>) -> Option<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return None;
            }
            seen[v] = true;
        }
        Some(FullPermutation { word })
    }

    #[inline]
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Swaps the letters in (1-based) positions `a` and `b`.
    pub fn swap_positions(&mut self, a: usize, b: usize) {
        self.word.swap(a - 1, b - 1);
    }

    /// The coset of this word: its first `d` letters, sorted.
    pub fn coset(&self, shape: GrassmannianShape) -> CosetRep {
        let mut entries = self.word[..shape.d].to_vec();
        entries.sort_unstable();
        CosetRep { shape, entries }
    }
}

/// `a <= b` in the induced Bruhat order: componentwise comparison.
pub fn bruhat_leq(a: &CosetRep, b: &CosetRep) -> Result<bool> {
    if a.shape != b.shape {
        return Err(Error::ShapeMismatch);
    }
    Ok(a.entries.iter().zip(&b.entries).all(|(x, y)| x <= y))
}

/// `kappa_q = #{l : i_q < j_l}` where `i` is `w` and `j` is `tau`.
pub fn kappa_vector(w: &CosetRep, tau: &CosetRep) -> Result<Vec<usize>> {
    if w.shape != tau.shape {
        return Err(Error::ShapeMismatch);
    }
    Ok(w.entries
        .iter()
        .map(|&iq| tau.entries.iter().filter(|&&jl| iq < jl).count())
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridPoint {
    pub x: i64,
    pub y: i64,
}

impl GridPoint {
    #[inline]
    pub const fn new(x: i64, y: i64) -> Self {
        GridPoint { x, y }
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl From<(i64, i64)> for GridPoint {
    fn from((x, y): (i64, i64)) -> Self {
        GridPoint { x, y }
    }
}

/// A pair `tau <= w` together with everything the path model needs.
///
/// `starts[l]` is `A_{l+1} = (d - l, d)`, `ends[q]` is
/// `E_{q+1} = (d - kappa_{q+1}, kappa_{q+1} + i_{q+1})`, and path `l` joins
/// `starts[l]` to `ends[sigma[l]]` (all indices 0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    shape: GrassmannianShape,
    w: CosetRep,
    tau: CosetRep,
    kappa: Vec<usize>,
    starts: Vec<GridPoint>,
    ends: Vec<GridPoint>,
    sigma: Vec<usize>,
}

impl Instance {
    pub fn new(w: CosetRep, tau: CosetRep) -> Result<Self> {
        if !bruhat_leq(&tau, &w)? {
            return Err(Error::NotOnVariety);
        }
        let shape = w.shape;
        let d = shape.d;
        let kappa = kappa_vector(&w, &tau)?;
        let starts = (1..=d)
            .map(|l| GridPoint::new((d + 1 - l) as i64, d as i64))
            .collect::<Vec<_>>();
        let ends = kappa
            .iter()
            .zip(&w.entries)
            .map(|(&k, &i)| GridPoint::new(d as i64 - k as i64, (k + i) as i64))
            .collect::<Vec<_>>();

        for (q, &k) in kappa.iter().enumerate() {
            if k + q + 1 > d {
                return Err(Error::Internal(format!("kappa_{} = {k} exceeds d - q", q + 1)));
            }
        }
        let mut sorted = ends.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|p| p[0] == p[1]) {
            return Err(Error::Internal("end points are not distinct".into()));
        }

        let sigma = connection_permutation(&starts, &ends)?;
        Ok(Instance { shape, w, tau, kappa, starts, ends, sigma })
    }

    /// Parses `w` and `tau` as entry vectors of the shape `(n, d)`.
    pub fn from_entries(n: usize, d: usize, w: &[usize], tau: &[usize]) -> Result<Self> {
        let shape = GrassmannianShape::new(n, d)?;
        let w = CosetRep::new(shape, w.to_vec())?;
        let tau = CosetRep::new(shape, tau.to_vec())?;
        Instance::new(w, tau)
    }

    #[inline]
    pub fn shape(&self) -> GrassmannianShape {
        self.shape
    }
    #[inline]
    pub fn d(&self) -> usize {
        self.shape.d
    }
    #[inline]
    pub fn n(&self) -> usize {
        self.shape.n
    }
    #[inline]
    pub fn w(&self) -> &CosetRep {
        &self.w
    }
    #[inline]
    pub fn tau(&self) -> &CosetRep {
        &self.tau
    }
    #[inline]
    pub fn kappa(&self) -> &[usize] {
        &self.kappa
    }
    #[inline]
    pub fn starts(&self) -> &[GridPoint] {
        &self.starts
    }
    #[inline]
    pub fn ends(&self) -> &[GridPoint] {
        &self.ends
    }
    /// 0-based: path `l` ends at `ends()[sigma()[l]]`.
    #[inline]
    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    /// `sigma` in 1-based one-line notation.
    pub fn sigma_one_based(&self) -> Vec<usize> {
        self.sigma.iter().map(|s| s + 1).collect()
    }

    /// End point of path `l`.
    #[inline]
    pub fn target(&self, l: usize) -> GridPoint {
        self.ends[self.sigma[l]]
    }

    /// `d - kappa_q - q` for 1-based `q`; the allowed chain length inside `R(E_q)`.
    pub fn chain_bound(&self, q: usize) -> usize {
        self.shape.d - self.kappa[q - 1] - q
    }

    /// Whether `p` lies in the rectangle `1 <= x <= d`, `d+1 <= y <= n` of
    /// admissible reflections.
    pub fn in_rectangle(&self, p: GridPoint) -> bool {
        let (d, n) = (self.shape.d as i64, self.shape.n as i64);
        1 <= p.x && p.x <= d && d < p.y && p.y <= n
    }

    /// All admissible reflections, ordered by `x` then `y`.
    pub fn rectangle(&self) -> Vec<GridPoint> {
        let (d, n) = (self.shape.d as i64, self.shape.n as i64);
        (1..=d)
            .flat_map(|x| (d + 1..=n).map(move |y| GridPoint::new(x, y)))
            .collect()
    }
}

/// The permutation that joins start points to end points in every
/// nonintersecting family, found by running light-and-shadow on the empty
/// multiset: the border from `starts[l]` ends at the first unused end point.
pub fn connection_permutation(starts: &[GridPoint], ends: &[GridPoint]) -> Result<Vec<usize>> {
    let d = starts.len();
    if ends.len() != d {
        return Err(Error::Internal("start and end point counts differ".into()));
    }
    let mut start_used = vec![false; d];
    let mut end_used = vec![false; d];
    let mut sigma = Vec::with_capacity(d);
    let top = ends.iter().map(|e| e.y).max().unwrap_or(0);
    for l in 0..d {
        let live = starts
            .iter()
            .zip(&start_used)
            .chain(ends.iter().zip(&end_used))
            .filter(|(_, &used)| !used)
            .map(|(p, _)| *p)
            .collect::<Vec<_>>();
        let border = shadow::Border::new(&live);
        let mut reached = None;
        border.walk(starts[l], |p| {
            if p.y > top {
                return shadow::WalkControl::Abort;
            }
            match (0..d).find(|&k| !end_used[k] && ends[k] == p) {
                Some(k) => {
                    reached = Some(k);
                    shadow::WalkControl::Stop
                }
                None => shadow::WalkControl::Continue,
            }
        });
        let k = reached.ok_or_else(|| {
            Error::Internal(format!("no end point is reachable on the border from {}", starts[l]))
        })?;
        start_used[l] = true;
        end_used[k] = true;
        sigma.push(k);
    }
    Ok(sigma)
}
