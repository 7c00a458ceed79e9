//! Light-and-shadow with the sun in the south-east.
//!
//! The shadow of `(x, y)` is the closed quadrant `x' <= x, y' >= y`. The
//! bottom-right border of a union of shadows is a staircase; above column `x`
//! the union starts at `floor(x) = min { y_p : x_p >= x }`, so the border
//! climbs column `x` from `floor(x)` to `floor(x + 1)` and then steps east.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::grassmannian::{GridPoint, Instance};
use crate::paths::{LatticePath, PathFamily, Step};

/// A finite multiset of grid points, each read as the reflection `(x y)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReflectionMultiset {
    counts: BTreeMap<GridPoint, usize>,
}

impl ReflectionMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, p: GridPoint) {
        *self.counts.entry(p).or_insert(0) += 1;
    }

    pub fn insert_many(&mut self, p: GridPoint, copies: usize) {
        if copies > 0 {
            *self.counts.entry(p).or_insert(0) += copies;
        }
    }

    /// Number of copies of `p`.
    pub fn count(&self, p: GridPoint) -> usize {
        self.counts.get(&p).copied().unwrap_or(0)
    }

    pub fn contains(&self, p: GridPoint) -> bool {
        self.counts.contains_key(&p)
    }

    /// Total number of elements, with multiplicity.
    pub fn cardinality(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Distinct points in ascending `(x, y)` order.
    pub fn support(&self) -> Vec<GridPoint> {
        self.counts.keys().copied().collect()
    }

    /// The same points with every multiplicity reset to one.
    pub fn support_set(&self) -> ReflectionMultiset {
        self.counts.keys().copied().collect()
    }

    pub fn is_set(&self) -> bool {
        self.counts.values().all(|&c| c == 1)
    }

    pub fn iter(&self) -> impl Iterator<Item = (GridPoint, usize)> + '_ {
        self.counts.iter().map(|(&p, &c)| (p, c))
    }

    /// Fails unless every point satisfies `1 <= x <= d < y <= n`.
    pub fn check_in_rectangle(&self, inst: &Instance) -> Result<()> {
        match self.counts.keys().find(|p| !inst.in_rectangle(**p)) {
            Some(p) => Err(Error::ReflectionOutOfRange { x: p.x, y: p.y, d: inst.d(), n: inst.n() }),
            None => Ok(()),
        }
    }

    fn remove_all(&mut self, p: GridPoint) -> usize {
        self.counts.remove(&p).unwrap_or(0)
    }
}

impl FromIterator<GridPoint> for ReflectionMultiset {
    fn from_iter<I: IntoIterator<Item = GridPoint>>(iter: I) -> Self {
        let mut m = ReflectionMultiset::new();
        for p in iter {
            m.insert(p);
        }
        m
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum WalkControl {
    Continue,
    Stop,
    Abort,
}

/// Bottom-right border of the union of the shadows of a point set.
#[derive(Debug, Clone)]
pub(crate) struct Border {
    // (x, min y over points with x_p >= x), x ascending
    floors: Vec<(i64, i64)>,
}

impl Border {
    pub(crate) fn new(points: &[GridPoint]) -> Self {
        let mut cols: BTreeMap<i64, i64> = BTreeMap::new();
        for p in points {
            cols.entry(p.x).and_modify(|y| *y = (*y).min(p.y)).or_insert(p.y);
        }
        let mut floors: Vec<(i64, i64)> = cols.into_iter().collect();
        for k in (0..floors.len().saturating_sub(1)).rev() {
            floors[k].1 = floors[k].1.min(floors[k + 1].1);
        }
        Border { floors }
    }

    /// Lowest row of the shadow union in column `x`; `None` if the column is
    /// entirely lit.
    pub(crate) fn floor(&self, x: i64) -> Option<i64> {
        let k = self.floors.partition_point(|&(px, _)| px < x);
        self.floors.get(k).map(|&(_, y)| y)
    }

    /// Walks the border northwards/eastwards from `from`, calling `visit` on
    /// every lattice point including `from`. Returns the path walked and
    /// whether `visit` asked to stop (as opposed to abort).
    pub(crate) fn walk(
        &self,
        from: GridPoint,
        mut visit: impl FnMut(GridPoint) -> WalkControl,
    ) -> (LatticePath, bool) {
        let mut cur = from;
        let mut steps = Vec::new();
        loop {
            match visit(cur) {
                WalkControl::Stop => return (LatticePath::new(from, steps), true),
                WalkControl::Abort => return (LatticePath::new(from, steps), false),
                WalkControl::Continue => {}
            }
            let climb = match self.floor(cur.x + 1) {
                Some(next) => cur.y < next,
                None => true,
            };
            if climb {
                steps.push(Step::North);
                cur.y += 1;
            } else {
                steps.push(Step::East);
                cur.x += 1;
            }
        }
    }
}

/// The border of the shadows of `points`, `from` and `to`, walked from `from`
/// to `to`.
pub fn shadow_border(points: &[GridPoint], from: GridPoint, to: GridPoint) -> Result<LatticePath> {
    let mut all = points.to_vec();
    all.push(from);
    all.push(to);
    let border = Border::new(&all);
    let (path, reached) = border.walk(from, |p| {
        if p == to {
            WalkControl::Stop
        } else if p.x > to.x || p.y > to.y {
            WalkControl::Abort
        } else {
            WalkControl::Continue
        }
    });
    if reached {
        Ok(path)
    } else {
        Err(Error::BorderUnreachable { from, to })
    }
}

/// The family produced by light-and-shadow, with the points removed in each
/// iteration (the path's start and end point first, then the multiset points
/// it covered, in path order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShadowTrace {
    pub family: PathFamily,
    pub removed: Vec<Vec<GridPoint>>,
}

/// Runs light-and-shadow on `s` and returns the resulting family.
pub fn light_and_shadow(s: &ReflectionMultiset, inst: &Instance) -> Result<PathFamily> {
    light_and_shadow_trace(s, inst).map(|t| t.family)
}

pub fn light_and_shadow_trace(s: &ReflectionMultiset, inst: &Instance) -> Result<ShadowTrace> {
    s.check_in_rectangle(inst)?;
    let d = inst.d();
    let mut remaining = s.clone();
    let mut end_used = vec![false; d];
    let mut paths = Vec::with_capacity(d);
    let mut removed = Vec::with_capacity(d);

    for l in 0..d {
        let from = inst.starts()[l];
        let target_index = inst.sigma()[l];
        let to = inst.ends()[target_index];

        let mut live = remaining.support();
        live.extend_from_slice(&inst.starts()[l..]);
        live.extend(inst.ends().iter().zip(&end_used).filter(|(_, &u)| !u).map(|(p, _)| *p));
        let border = Border::new(&live);

        let (path, reached) = border.walk(from, |p| {
            if p == to {
                WalkControl::Stop
            } else if p.x > to.x || p.y > to.y {
                WalkControl::Abort
            } else if inst.ends().iter().zip(&end_used).any(|(e, &u)| !u && *e == p) {
                // another path has to end here
                WalkControl::Abort
            } else {
                WalkControl::Continue
            }
        });
        if !reached {
            return Err(Error::ChainCondition(format!(
                "iteration {}: border from {} does not reach {}",
                l + 1,
                from,
                to
            )));
        }

        let mut gone = vec![from, to];
        for p in path.points() {
            if remaining.remove_all(p) > 0 && p != from && p != to {
                gone.push(p);
            }
        }
        end_used[target_index] = true;
        removed.push(gone);
        paths.push(path);
    }

    if !remaining.is_empty() {
        return Err(Error::ChainCondition(format!(
            "{} point(s) left uncovered after {} iterations, first {}",
            remaining.cardinality(),
            d,
            remaining.support()[0]
        )));
    }
    Ok(ShadowTrace { family: PathFamily::new(paths, inst.sigma().to_vec()), removed })
}

/// Lattice points strictly above the start row, each with multiplicity one.
pub fn family_point_multiset(f: &PathFamily) -> ReflectionMultiset {
    let Some(first) = f.paths().first() else {
        return ReflectionMultiset::new();
    };
    let floor = first.start().y;
    f.paths()
        .iter()
        .flat_map(|p| p.points())
        .filter(|p| p.y > floor)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::Step::{East as E, North as N};

    fn pt(x: i64, y: i64) -> GridPoint {
        GridPoint::new(x, y)
    }

    fn quadric() -> Instance {
        Instance::from_entries(4, 2, &[2, 4], &[1, 2]).unwrap()
    }

    #[test]
    fn border_examples() {
        assert_eq!(shadow_border(&[], pt(1, 2), pt(2, 4)).unwrap().steps(), &[N, N, E]);
        assert_eq!(shadow_border(&[pt(2, 3)], pt(1, 2), pt(2, 4)).unwrap().steps(), &[N, E, N]);
        assert!(shadow_border(&[], pt(2, 2), pt(2, 2)).unwrap().steps().is_empty());
        assert_eq!(
            shadow_border(&[pt(3, 3)], pt(1, 2), pt(2, 4)),
            Err(Error::BorderUnreachable { from: pt(1, 2), to: pt(2, 4) })
        );
    }

    #[test]
    fn light_and_shadow_quadric() {
        let inst = quadric();
        let f = light_and_shadow(&ReflectionMultiset::new(), &inst).unwrap();
        assert!(f.paths()[0].steps().is_empty());
        assert_eq!(f.paths()[0].start(), pt(2, 2));
        assert_eq!(f.paths()[1].steps(), &[N, N, E]);

        let f = light_and_shadow(&[pt(2, 3)].into_iter().collect(), &inst).unwrap();
        assert_eq!(f.paths()[1].steps(), &[N, E, N]);

        let bad: ReflectionMultiset = [pt(1, 4), pt(2, 3)].into_iter().collect();
        assert!(matches!(light_and_shadow(&bad, &inst), Err(Error::ChainCondition(_))));

        let outside: ReflectionMultiset = [pt(3, 3)].into_iter().collect();
        assert!(matches!(light_and_shadow(&outside, &inst), Err(Error::ReflectionOutOfRange { .. })));
    }

    #[test]
    fn point_multiset_examples() {
        let inst = quadric();
        let a = light_and_shadow(&ReflectionMultiset::new(), &inst).unwrap();
        let b = light_and_shadow(&[pt(2, 3)].into_iter().collect(), &inst).unwrap();
        assert_eq!(family_point_multiset(&a), [pt(1, 3), pt(1, 4), pt(2, 4)].into_iter().collect());
        assert_eq!(family_point_multiset(&b), [pt(1, 3), pt(2, 3), pt(2, 4)].into_iter().collect());

        let line = Instance::from_entries(2, 1, &[2], &[2]).unwrap();
        let f = light_and_shadow(&ReflectionMultiset::new(), &line).unwrap();
        assert_eq!(family_point_multiset(&f), [pt(1, 2)].into_iter().collect());
    }

    #[test]
    fn multiplicities_do_not_change_the_family() {
        let inst = quadric();
        let mut s = ReflectionMultiset::new();
        s.insert_many(pt(2, 3), 3);
        s.insert_many(pt(1, 3), 2);
        let f = light_and_shadow(&s, &inst).unwrap();
        assert_eq!(f, light_and_shadow(&s.support_set(), &inst).unwrap());
    }
}
