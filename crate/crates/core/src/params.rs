//! Exact Radon number, Helly number and VC dimension, each with a witness.
//!
//! All three searches are exhaustive. They rely on downward closure (subsets
//! of a Radon-shattered or VC-shattered set are shattered again) to grow
//! candidates one level at a time.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::set::PointSet;
use crate::space::{ConvexFamily, ConvexitySpace};

/// Memoizes hulls across the many bipartitions a Radon search inspects.
pub struct HullCache<'a> {
    space: &'a ConvexitySpace,
    memo: HashMap<PointSet, PointSet>,
}

impl<'a> HullCache<'a> {
    pub fn new(space: &'a ConvexitySpace) -> Self {
        HullCache {
            space,
            memo: HashMap::new(),
        }
    }

    pub fn hull(&mut self, y: PointSet) -> PointSet {
        if y.is_empty() {
            return PointSet::EMPTY;
        }
        let space = self.space;
        *self.memo.entry(y).or_insert_with(|| space.convex_hull(y))
    }

    /// Every bipartition `(Y1, Y2)` of `y` has disjoint hulls.
    pub fn is_radon_shattered(&mut self, y: PointSet) -> bool {
        let Some(first) = y.first() else {
            return true;
        };
        let rest = y.without(first);
        // Fix the lowest point in Y1 so each unordered bipartition is seen once.
        rest.subsets().all(|extra| {
            let y1 = extra.with(first);
            let y2 = y.difference(y1);
            y2.is_empty() || self.hull(y1).is_disjoint(self.hull(y2))
        })
    }
}

pub fn is_radon_shattered(space: &ConvexitySpace, y: PointSet) -> bool {
    HullCache::new(space).is_radon_shattered(y)
}

/// Radon number `r` and a largest Radon-shattered set (of size `r - 1`).
pub fn radon_number(space: &ConvexitySpace) -> (usize, PointSet) {
    let mut cache = HullCache::new(space);
    let witness = largest_downward_closed(space.full(), |y| cache.is_radon_shattered(y));
    (witness.len() + 1, witness)
}

/// Level-wise search for the largest member of a downward-closed predicate
/// over subsets of `universe`; ties go to the canonically least set.
fn largest_downward_closed(
    universe: PointSet,
    mut holds: impl FnMut(PointSet) -> bool,
) -> PointSet {
    if !holds(PointSet::EMPTY) {
        return PointSet::EMPTY;
    }
    let mut level: Vec<PointSet> = universe
        .iter()
        .map(PointSet::singleton)
        .filter(|&s| holds(s))
        .collect();
    let mut best = PointSet::EMPTY;
    while !level.is_empty() {
        best = *level.iter().min().expect("non-empty level");
        let known: HashSet<PointSet> = level.iter().copied().collect();
        let mut next = Vec::new();
        for &y in &level {
            let top = y.iter().last().expect("non-empty set");
            for i in universe.iter().filter(|&i| i > top) {
                let cand = y.with(i);
                // Every one-smaller subset must already hold.
                if y.iter().all(|j| known.contains(&cand.without(j))) && holds(cand) {
                    next.push(cand);
                }
            }
        }
        level = next;
    }
    best
}

/// Outcome of a Helly-number search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Helly {
    pub number: usize,
    /// Largest inclusion-minimal subfamily with empty intersection.
    pub witness: Vec<PointSet>,
    /// No minimal empty-intersection subfamily has two or more members.
    pub vacuous: bool,
}

/// Largest inclusion-minimal subfamily of `family` with empty intersection,
/// where the empty subfamily intersects to `universe`.
///
/// The depth-first search keeps, for every chosen member, the intersection
/// of all the other chosen members. A member whose leave-one-out
/// intersection already equals the full intersection can never be part of a
/// minimal family, so the branch is cut as soon as that happens.
pub fn helly_number(family: &ConvexFamily, universe: PointSet) -> Helly {
    struct Search<'a> {
        sets: &'a [PointSet],
        chosen: Vec<usize>,
        best: Vec<usize>,
    }

    impl Search<'_> {
        fn run(&mut self, start: usize, meet: PointSet, leave_one_out: &[PointSet]) {
            for j in start..self.sets.len() {
                let s = self.sets[j];
                let next_meet = meet.intersection(s);
                if next_meet == meet {
                    continue;
                }
                let mut loo: Vec<PointSet> =
                    leave_one_out.iter().map(|l| l.intersection(s)).collect();
                loo.push(meet);
                if loo.contains(&next_meet) {
                    continue;
                }
                self.chosen.push(j);
                if next_meet.is_empty() {
                    if self.chosen.len() > self.best.len() {
                        self.best = self.chosen.clone();
                    }
                } else {
                    self.run(j + 1, next_meet, &loo);
                }
                self.chosen.pop();
            }
        }
    }

    let mut search = Search {
        sets: family.sets(),
        chosen: Vec::new(),
        best: Vec::new(),
    };
    search.run(0, universe, &[]);
    let witness: Vec<PointSet> = search.best.iter().map(|&j| family.sets()[j]).collect();
    Helly {
        number: witness.len().max(1),
        vacuous: witness.len() <= 1,
        witness,
    }
}

/// Size of the largest subset of `universe` on which `family` traces every
/// subset, with the canonically least such set.
pub fn vc_dimension(family: &ConvexFamily, universe: PointSet) -> (usize, PointSet) {
    let witness = largest_downward_closed(universe, |y| shatters(family, y));
    (witness.len(), witness)
}

pub fn shatters(family: &ConvexFamily, y: PointSet) -> bool {
    let k = y.len();
    if k >= 63 || family.len() < 1usize << k {
        return false;
    }
    let traces: HashSet<PointSet> = family.iter().map(|b| b.intersection(y)).collect();
    traces.len() == 1usize << k
}

/// The three invariants of a space, computed over all of its half-spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamsReport {
    pub radon: usize,
    pub helly: usize,
    pub vc: usize,
    pub separable: bool,
    pub radon_witness: PointSet,
    pub helly_witness: Vec<PointSet>,
    pub helly_vacuous: bool,
    pub vc_witness: PointSet,
    /// First `(c, x)` no half-space separates, when not separable.
    pub separability_witness: Option<(PointSet, usize)>,
}

impl ParamsReport {
    /// Helly and VC both lie below the Radon number (required when separable).
    pub fn radon_bounds_hold(&self) -> bool {
        self.helly < self.radon && self.vc < self.radon
    }
}

/// Bundles the invariants over `B = halfspaces(space, proper = false)`. For
/// separable spaces a violation of `helly, vc < radon` is reported as an
/// internal consistency failure.
pub fn analyze(space: &ConvexitySpace) -> Result<ParamsReport> {
    let halfspaces = space.halfspaces(false);
    let (radon, radon_witness) = radon_number(space);
    let helly = helly_number(&halfspaces, space.full());
    let (vc, vc_witness) = vc_dimension(&halfspaces, space.full());
    let separability_witness = space.separability_witness();
    let report = ParamsReport {
        radon,
        helly: helly.number,
        vc,
        separable: separability_witness.is_none(),
        radon_witness,
        helly_witness: helly.witness,
        helly_vacuous: helly.vacuous,
        vc_witness,
        separability_witness,
    };
    if report.radon != report.radon_witness.len() + 1 {
        return Err(Error::Consistency(
            "radon number does not match its witness".into(),
        ));
    }
    if report.separable && !report.radon_bounds_hold() {
        return Err(Error::Consistency(format!(
            "separable space with radon {} but helly {} / vc {}",
            report.radon, report.helly, report.vc
        )));
    }
    Ok(report)
}
