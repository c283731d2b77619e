//! Finite convexity spaces: a ground set with an intersection-closed family.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::set::{PointSet, MAX_POINTS};

/// Default bound on the number of sets an intersection closure may produce.
pub const DEFAULT_CLOSURE_CAP: usize = 1 << 20;

/// Labelled points of the space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroundSet {
    labels: Vec<String>,
}

impl GroundSet {
    /// Labels must be distinct and there may be at most 64 of them. The empty
    /// ground set is accepted so that restrictions to `{}` stay representable.
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_POINTS {
            return Err(Error::GroundTooLarge(labels.len()));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(GroundSet { labels })
    }

    /// Points labelled `0`, `1`, ...
    pub fn indexed(n: usize) -> Result<Self> {
        GroundSet::new((0..n).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn full(&self) -> PointSet {
        PointSet::full(self.len())
    }

    pub fn labels_of(&self, s: PointSet) -> Vec<&str> {
        s.iter().map(|i| self.label(i)).collect()
    }
}

/// Duplicate-free family of point sets kept in canonical order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ConvexFamily {
    sets: Vec<PointSet>,
}

impl ConvexFamily {
    pub fn new(sets: impl IntoIterator<Item = PointSet>) -> Self {
        let mut sets: Vec<PointSet> = sets.into_iter().collect();
        sets.sort_unstable();
        sets.dedup();
        ConvexFamily { sets }
    }

    pub fn sets(&self) -> &[PointSet] {
        &self.sets
    }

    pub fn iter(&self) -> impl Iterator<Item = PointSet> + '_ {
        self.sets.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, s: PointSet) -> bool {
        self.sets.binary_search(&s).is_ok()
    }

    /// Intersection of all members; `universe` for the empty family.
    pub fn intersection(&self, universe: PointSet) -> PointSet {
        self.iter().fold(universe, PointSet::intersection)
    }
}

impl FromIterator<PointSet> for ConvexFamily {
    fn from_iter<I: IntoIterator<Item = PointSet>>(iter: I) -> Self {
        ConvexFamily::new(iter)
    }
}

/// A ground set together with a family containing `{}` and `X` that is
/// closed under intersection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexitySpace {
    ground: GroundSet,
    convex: ConvexFamily,
}

impl ConvexitySpace {
    /// Checks the convexity-space axioms, reporting the first violation.
    pub fn validate(ground: GroundSet, family: impl IntoIterator<Item = PointSet>) -> Result<Self> {
        let full = ground.full();
        let family = ConvexFamily::new(family);
        if let Some(bad) = family.iter().find(|s| !s.is_subset(full)) {
            return Err(Error::OutOfGround(bad));
        }
        if !family.contains(PointSet::EMPTY) {
            return Err(Error::MissingEmptySet);
        }
        if !family.contains(full) {
            return Err(Error::MissingFullSet);
        }
        for (i, &a) in family.sets().iter().enumerate() {
            for &b in &family.sets()[i + 1..] {
                if !family.contains(a.intersection(b)) {
                    return Err(Error::NotIntersectionClosed(a, b));
                }
            }
        }
        Ok(ConvexitySpace {
            ground,
            convex: family,
        })
    }

    /// Smallest convexity space whose family contains `basis`. The empty
    /// intersection is `X`, and `{}` is always added.
    pub fn intersection_closure(
        ground: GroundSet,
        basis: impl IntoIterator<Item = PointSet>,
    ) -> Result<Self> {
        Self::intersection_closure_capped(ground, basis, DEFAULT_CLOSURE_CAP)
    }

    pub fn intersection_closure_capped(
        ground: GroundSet,
        basis: impl IntoIterator<Item = PointSet>,
        cap: usize,
    ) -> Result<Self> {
        let full = ground.full();
        let mut seen: HashSet<PointSet> = HashSet::new();
        let mut members: Vec<PointSet> = Vec::new();
        let mut generators: Vec<PointSet> = Vec::new();
        for b in basis {
            if !b.is_subset(full) {
                return Err(Error::OutOfGround(b));
            }
            if seen.insert(b) {
                generators.push(b);
                members.push(b);
            }
        }
        for s in [full, PointSet::EMPTY] {
            if seen.insert(s) {
                members.push(s);
            }
        }
        // Every intersection of generators arises by intersecting some member
        // with a single generator, so a worklist over members suffices.
        let mut next = 0;
        while next < members.len() {
            let m = members[next];
            next += 1;
            for &g in &generators {
                let x = m.intersection(g);
                if seen.insert(x) {
                    if members.len() >= cap {
                        return Err(Error::ClosureTooLarge(cap));
                    }
                    members.push(x);
                }
            }
        }
        Ok(ConvexitySpace {
            ground,
            convex: ConvexFamily::new(members),
        })
    }

    /// Constructs without checking the axioms; callers guarantee them.
    pub(crate) fn from_parts_unchecked(ground: GroundSet, convex: ConvexFamily) -> Self {
        debug_assert!(convex.contains(PointSet::EMPTY) && convex.contains(ground.full()));
        ConvexitySpace { ground, convex }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn convex(&self) -> &ConvexFamily {
        &self.convex
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    pub fn full(&self) -> PointSet {
        self.ground.full()
    }

    pub fn is_convex(&self, s: PointSet) -> bool {
        self.convex.contains(s)
    }

    /// Intersection of all convex sets containing `y`.
    pub fn convex_hull(&self, y: PointSet) -> PointSet {
        self.convex
            .iter()
            .filter(|c| y.is_subset(*c))
            .fold(self.full(), PointSet::intersection)
    }

    /// Convex sets whose complement is convex. With `proper`, `{}` and `X`
    /// are left out.
    pub fn halfspaces(&self, proper: bool) -> ConvexFamily {
        let n = self.len();
        let full = self.full();
        self.convex
            .iter()
            .filter(|b| self.convex.contains(b.complement(n)))
            .filter(|b| !proper || (!b.is_empty() && *b != full))
            .collect()
    }

    /// First `(c, x)` in canonical order with `x` outside `c` and no
    /// half-space containing `c` but missing `x`.
    pub fn separability_witness(&self) -> Option<(PointSet, usize)> {
        let halfspaces = self.halfspaces(false);
        let full = self.full();
        self.convex.iter().find_map(|c| {
            let cover = halfspaces
                .iter()
                .filter(|b| c.is_subset(*b))
                .fold(full, PointSet::intersection);
            full.difference(c)
                .iter()
                .find(|&x| cover.contains(x))
                .map(|x| (c, x))
        })
    }

    pub fn is_separable(&self) -> bool {
        self.separability_witness().is_none()
    }

    /// Intersection of all half-spaces containing `c`.
    pub fn halfspace_hull(&self, c: PointSet) -> PointSet {
        self.halfspaces(false)
            .iter()
            .filter(|b| c.is_subset(*b))
            .fold(self.full(), PointSet::intersection)
    }

    /// The space `(c, {c' ∩ c})` with points renumbered in ascending order.
    pub fn restrict(&self, c: PointSet) -> Result<Self> {
        if !self.convex.contains(c) {
            return Err(Error::NotConvex(c));
        }
        let ground = GroundSet::new(c.iter().map(|i| self.ground.label(i).to_string()))?;
        let convex = self
            .convex
            .iter()
            .map(|s| s.intersection(c).compress(c))
            .collect();
        Ok(ConvexitySpace { ground, convex })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> PointSet {
        PointSet::from_indices(v.iter().copied())
    }

    fn path3() -> ConvexitySpace {
        // a - b - c: connected subsets plus the empty set
        let fam = [
            vec![],
            vec![0],
            vec![1],
            vec![2],
            vec![0, 1],
            vec![1, 2],
            vec![0, 1, 2],
        ];
        ConvexitySpace::validate(
            GroundSet::new(["a", "b", "c"]).unwrap(),
            fam.iter().map(|v| s(v)),
        )
        .unwrap()
    }

    #[test]
    fn validate_power_set() {
        let g = GroundSet::indexed(2).unwrap();
        assert!(ConvexitySpace::validate(g, PointSet::full(2).subsets()).is_ok());
    }

    #[test]
    fn validate_reports_axioms() {
        let g = GroundSet::indexed(2).unwrap();
        assert_eq!(
            ConvexitySpace::validate(g.clone(), [s(&[]), s(&[0])]),
            Err(Error::MissingFullSet)
        );
        assert_eq!(
            ConvexitySpace::validate(g.clone(), [s(&[0, 1]), s(&[0])]),
            Err(Error::MissingEmptySet)
        );
        let g3 = GroundSet::indexed(3).unwrap();
        assert_eq!(
            ConvexitySpace::validate(g3, [s(&[]), s(&[0, 1]), s(&[1, 2]), s(&[0, 1, 2])]),
            Err(Error::NotIntersectionClosed(s(&[0, 1]), s(&[1, 2])))
        );
        assert_eq!(
            ConvexitySpace::validate(g, [s(&[]), s(&[0, 1]), s(&[2])]),
            Err(Error::OutOfGround(s(&[2])))
        );
    }

    #[test]
    fn validate_sparse_family() {
        // pairwise intersections of {0},{1},{0,1,2} are all {} or the sets themselves
        let g = GroundSet::indexed(3).unwrap();
        assert!(ConvexitySpace::validate(g, [s(&[]), s(&[0]), s(&[1]), s(&[0, 1, 2])]).is_ok());
    }

    #[test]
    fn ground_set_limits() {
        assert_eq!(GroundSet::indexed(65), Err(Error::GroundTooLarge(65)));
        assert_eq!(
            GroundSet::new(["x", "x"]),
            Err(Error::DuplicateLabel("x".into()))
        );
    }

    #[test]
    fn closure_of_nothing() {
        let sp = ConvexitySpace::intersection_closure(GroundSet::indexed(3).unwrap(), []).unwrap();
        assert_eq!(sp.convex().sets(), &[s(&[]), s(&[0, 1, 2])]);
    }

    #[test]
    fn closure_of_co_singletons_is_power_set() {
        let n = 3;
        let full = PointSet::full(n);
        let basis = (0..n).map(|x| full.without(x)).chain([full]);
        let sp =
            ConvexitySpace::intersection_closure(GroundSet::indexed(n).unwrap(), basis).unwrap();
        assert_eq!(sp.convex().len(), 8);
    }

    #[test]
    fn closure_cap() {
        let n = 10;
        let full = PointSet::full(n);
        let basis = (0..n).map(|x| full.without(x));
        assert_eq!(
            ConvexitySpace::intersection_closure_capped(GroundSet::indexed(n).unwrap(), basis, 100),
            Err(Error::ClosureTooLarge(100))
        );
    }

    #[test]
    fn hull_examples() {
        let sp = path3();
        assert_eq!(sp.convex_hull(PointSet::EMPTY), PointSet::EMPTY);
        assert_eq!(sp.convex_hull(s(&[0, 2])), s(&[0, 1, 2]));
        assert_eq!(sp.convex_hull(s(&[1])), s(&[1]));
    }

    #[test]
    fn halfspaces_of_path() {
        let sp = path3();
        assert_eq!(
            sp.halfspaces(true).sets(),
            &[s(&[0]), s(&[0, 1]), s(&[1, 2]), s(&[2])]
        );
        assert_eq!(sp.halfspaces(false).len(), 6);
    }

    #[test]
    fn non_separable_witness() {
        let sp = ConvexitySpace::validate(
            GroundSet::indexed(3).unwrap(),
            [s(&[]), s(&[0]), s(&[0, 1, 2])],
        )
        .unwrap();
        assert_eq!(sp.halfspaces(false).sets(), &[s(&[]), s(&[0, 1, 2])]);
        assert_eq!(sp.separability_witness(), Some((s(&[0]), 1)));
        assert!(!sp.is_separable());
        assert!(path3().is_separable());
    }

    #[test]
    fn restrictions() {
        let sp = path3();
        assert_eq!(sp.restrict(sp.full()).unwrap(), sp);
        let ab = sp.restrict(s(&[0, 1])).unwrap();
        assert_eq!(ab.ground().labels(), &["a", "b"]);
        assert_eq!(ab.convex().len(), 4);
        let empty = sp.restrict(PointSet::EMPTY).unwrap();
        assert!(empty.is_empty());
        assert_eq!(empty.convex().sets(), &[PointSet::EMPTY]);
        assert_eq!(sp.restrict(s(&[0, 2])), Err(Error::NotConvex(s(&[0, 2]))));
    }
}
