use std::collections::BTreeSet;
use std::fmt;

use super::Family;

/// A deduplicated, sorted set of points from one family.
pub struct PointSet<F: Family> {
    points: Vec<F::Point>,
}

impl<F: Family> PointSet<F> {
    pub fn from_points<I: IntoIterator<Item = F::Point>>(it: I) -> Self {
        let set: BTreeSet<F::Point> = it.into_iter().collect();
        PointSet {
            points: set.into_iter().collect(),
        }
    }

    pub fn singleton(p: F::Point) -> Self {
        PointSet { points: vec![p] }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, F::Point> {
        self.points.iter()
    }

    pub fn points(&self) -> &[F::Point] {
        &self.points
    }

    pub fn into_points(self) -> Vec<F::Point> {
        self.points
    }

    pub fn contains(&self, p: &F::Point) -> bool {
        self.points.binary_search(p).is_ok()
    }

    pub fn index_of(&self, p: &F::Point) -> Option<usize> {
        self.points.binary_search(p).ok()
    }

    pub fn union(&self, other: &Self) -> Self {
        PointSet::from_points(self.points.iter().chain(other.points.iter()).cloned())
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.points.iter().all(|p| other.contains(p))
    }
}

impl<F: Family> Clone for PointSet<F> {
    fn clone(&self) -> Self {
        PointSet {
            points: self.points.clone(),
        }
    }
}

impl<F: Family> PartialEq for PointSet<F> {
    fn eq(&self, other: &Self) -> bool {
        self.points == other.points
    }
}

impl<F: Family> Eq for PointSet<F> {}

impl<F: Family> fmt::Debug for PointSet<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PointSet")
            .field("family", &F::TAG)
            .field("points", &self.points)
            .finish()
    }
}

/// All pairwise sums `a + b`.
pub fn minkowski_sum<F: Family>(a: &PointSet<F>, b: &PointSet<F>) -> PointSet<F> {
    let mut out = BTreeSet::new();
    for p in a.iter() {
        for q in b.iter() {
            out.insert(F::add(p, q));
        }
    }
    PointSet {
        points: out.into_iter().collect(),
    }
}

/// Points with `|p − center|² ≤ r_sq` (closed disk).
pub fn disk_filter<F: Family>(a: &PointSet<F>, center: &F::Point, r_sq: &F::Field) -> PointSet<F> {
    PointSet {
        points: a
            .iter()
            .filter(|p| &F::dist_sq(p, center) <= r_sq)
            .cloned()
            .collect(),
    }
}
