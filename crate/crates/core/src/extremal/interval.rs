//! Finite unions of open intervals of `[0, ∞)`.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    /// `None` unless `0 ≤ lo < hi`.
    pub fn new(lo: f64, hi: f64) -> Option<Self> {
        (lo.is_finite() && hi.is_finite() && lo >= 0.0 && lo < hi).then_some(Self { lo, hi })
    }

    pub fn contains(&self, r: f64) -> bool {
        self.lo < r && r < self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

/// Pairwise disjoint open intervals sorted by left endpoint. Intervals that only
/// share an endpoint stay separate, since the endpoint belongs to neither.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct IntervalUnion {
    intervals: Vec<Interval>,
}

impl IntervalUnion {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_intervals(items: impl IntoIterator<Item = Interval>) -> Self {
        let mut items: Vec<Interval> = items.into_iter().collect();
        items.sort_by(|a, b| a.lo.total_cmp(&b.lo).then(a.hi.total_cmp(&b.hi)));
        let mut out: Vec<Interval> = Vec::with_capacity(items.len());
        for it in items {
            match out.last_mut() {
                Some(last) if it.lo < last.hi => last.hi = last.hi.max(it.hi),
                _ => out.push(it),
            }
        }
        Self { intervals: out }
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn contains(&self, r: f64) -> bool {
        self.intervals.iter().any(|i| i.contains(r))
    }

    /// Whether the open interval `(lo, hi)` lies inside the union.
    pub fn covers(&self, lo: f64, hi: f64) -> bool {
        self.intervals.iter().any(|i| i.lo <= lo && hi <= i.hi)
    }

    /// Smallest left and largest right endpoint.
    pub fn hull(&self) -> Option<(f64, f64)> {
        Some((self.intervals.first()?.lo, self.intervals.last()?.hi))
    }

    pub fn union(&self, other: &Self) -> Self {
        Self::from_intervals(self.intervals.iter().chain(&other.intervals).copied())
    }
}
