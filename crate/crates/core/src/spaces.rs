//! Generators for the standard example spaces: power sets, cylinders,
//! subtrees of a tree, convex lattice sets in a grid, linear extensions of a
//! poset, and random separable spaces.

use std::collections::{BTreeSet, HashSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::set::PointSet;
use crate::space::{ConvexFamily, ConvexitySpace, GroundSet};

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}

/// Parameters naming one generated space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorSpec {
    Power {
        m: usize,
    },
    Cylinders {
        n: usize,
    },
    Subtree {
        edges: Vec<(String, String)>,
    },
    Lattice {
        width: usize,
        height: usize,
    },
    Poset {
        elements: usize,
        relations: Vec<(usize, usize)>,
    },
    Random {
        points: usize,
        seed: u64,
    },
}

impl GeneratorSpec {
    pub fn build(&self) -> Result<ConvexitySpace> {
        match self {
            GeneratorSpec::Power { m } => power_set_space(*m),
            GeneratorSpec::Cylinders { n } => cylinder_space(*n),
            GeneratorSpec::Subtree { edges } => subtree_space(edges),
            GeneratorSpec::Lattice { width, height } => lattice_convex_space(*width, *height),
            GeneratorSpec::Poset {
                elements,
                relations,
            } => linear_extension_space(*elements, relations),
            GeneratorSpec::Random { points, seed } => random_separable(*points, *seed),
        }
    }

    /// Short stable name, used as the `name` field of space files.
    pub fn name(&self) -> String {
        match self {
            GeneratorSpec::Power { m } => format!("power-{m}"),
            GeneratorSpec::Cylinders { n } => format!("cylinders-{n}"),
            GeneratorSpec::Subtree { edges } => {
                let e: Vec<String> = edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
                format!("subtree-{}", e.join(","))
            }
            GeneratorSpec::Lattice { width, height } => format!("lattice-{width}x{height}"),
            GeneratorSpec::Poset {
                elements,
                relations,
            } => {
                let r: Vec<String> = relations.iter().map(|(a, b)| format!("{a}<{b}")).collect();
                format!("poset-{elements}-{}", r.join(","))
            }
            GeneratorSpec::Random { points, seed } => format!("random-{points}-{seed}"),
        }
    }
}

/// `(X, 2^X)` on `m` points.
pub fn power_set_space(m: usize) -> Result<ConvexitySpace> {
    if !(1..=16).contains(&m) {
        return Err(invalid(format!("power set needs 1 <= m <= 16, got {m}")));
    }
    let ground = GroundSet::indexed(m)?;
    let family = ConvexFamily::new(PointSet::full(m).subsets());
    Ok(ConvexitySpace::from_parts_unchecked(ground, family))
}

/// Cylinders of `{0,1}^n` plus the empty set. Point `i` is labelled by its
/// `n` bits, coordinate 0 first.
pub fn cylinder_space(n: usize) -> Result<ConvexitySpace> {
    if !(1..=6).contains(&n) {
        return Err(invalid(format!("cylinders need 1 <= n <= 6, got {n}")));
    }
    let points = 1usize << n;
    let ground = GroundSet::new((0..points).map(|i| {
        (0..n)
            .map(|j| if i >> j & 1 == 1 { '1' } else { '0' })
            .collect::<String>()
    }))?;
    let mut sets = vec![PointSet::EMPTY];
    // Each coordinate is fixed to 0, fixed to 1, or free.
    for code in 0..3usize.pow(n as u32) {
        let pattern: Vec<usize> = (0..n).map(|j| code / 3usize.pow(j as u32) % 3).collect();
        let cyl = (0..points)
            .filter(|&i| {
                pattern
                    .iter()
                    .enumerate()
                    .all(|(j, &p)| p == 2 || (i >> j & 1) == p)
            })
            .collect();
        sets.push(cyl);
    }
    Ok(ConvexitySpace::from_parts_unchecked(
        ground,
        ConvexFamily::new(sets),
    ))
}

/// Connected vertex sets of a tree given by labelled edges; vertices are
/// numbered in order of first appearance.
pub fn subtree_space<S: AsRef<str>>(edges: &[(S, S)]) -> Result<ConvexitySpace> {
    let mut labels: Vec<String> = Vec::new();
    let index = |l: &str, labels: &mut Vec<String>| match labels.iter().position(|x| x == l) {
        Some(i) => i,
        None => {
            labels.push(l.to_string());
            labels.len() - 1
        }
    };
    let numbered: Vec<(usize, usize)> = edges
        .iter()
        .map(|(a, b)| {
            (
                index(a.as_ref(), &mut labels),
                index(b.as_ref(), &mut labels),
            )
        })
        .collect();
    if labels.is_empty() {
        return Err(invalid("a tree needs at least one edge"));
    }
    tree_space(GroundSet::new(labels)?, &numbered)
}

/// Subtree space over an explicit vertex set (allows the one-vertex tree).
pub fn tree_space(ground: GroundSet, edges: &[(usize, usize)]) -> Result<ConvexitySpace> {
    let n = ground.len();
    if !(1..=16).contains(&n) {
        return Err(invalid(format!("trees need 1..=16 vertices, got {n}")));
    }
    if edges.len() != n - 1 {
        return Err(invalid(format!(
            "{} edges cannot form a tree on {n} vertices",
            edges.len()
        )));
    }
    let mut adj = vec![PointSet::EMPTY; n];
    for &(a, b) in edges {
        if a >= n || b >= n || a == b {
            return Err(invalid(format!("bad edge {a}-{b}")));
        }
        adj[a] = adj[a].with(b);
        adj[b] = adj[b].with(a);
    }
    let connected = |s: PointSet| -> bool {
        let Some(start) = s.first() else {
            return true;
        };
        let mut seen = PointSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let reach = frontier
                .iter()
                .fold(PointSet::EMPTY, |acc, v| acc.union(adj[v]))
                .intersection(s)
                .difference(seen);
            seen = seen.union(reach);
            frontier = reach;
        }
        seen == s
    };
    if !connected(PointSet::full(n)) {
        return Err(invalid("edges do not form a connected tree"));
    }
    let family = ConvexFamily::new(PointSet::full(n).subsets().filter(|&s| connected(s)));
    Ok(ConvexitySpace::from_parts_unchecked(ground, family))
}

type Pt = (i64, i64);

fn cross(o: Pt, a: Pt, b: Pt) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Counter-clockwise hull vertices with collinear points dropped.
fn hull_vertices(mut pts: Vec<Pt>) -> Vec<Pt> {
    pts.sort_unstable();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<Pt> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Pt> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn in_hull(hull: &[Pt], p: Pt) -> bool {
    match hull {
        [] => false,
        [a] => *a == p,
        [a, b] => {
            cross(*a, *b, p) == 0
                && p.0 >= a.0.min(b.0)
                && p.0 <= a.0.max(b.0)
                && p.1 >= a.1.min(b.1)
                && p.1 <= a.1.max(b.1)
        }
        _ => (0..hull.len()).all(|i| cross(hull[i], hull[(i + 1) % hull.len()], p) >= 0),
    }
}

/// Grid points in the Euclidean convex hull of `s`.
pub fn lattice_hull(width: usize, height: usize, s: PointSet) -> PointSet {
    let coord = |i: usize| ((i % width) as i64, (i / width) as i64);
    let hull = hull_vertices(s.iter().map(coord).collect());
    (0..width * height)
        .filter(|&i| in_hull(&hull, coord(i)))
        .collect()
}

/// Convex lattice subsets `K ∩ Z^2` of a `width x height` grid. Point
/// `(x, y)` has index `y * width + x`.
pub fn lattice_convex_space(width: usize, height: usize) -> Result<ConvexitySpace> {
    let n = width * height;
    if width == 0 || height == 0 || n > 25 {
        return Err(invalid(format!(
            "grid {width}x{height} must have 1..=25 points"
        )));
    }
    let ground = GroundSet::new((0..n).map(|i| format!("({},{})", i % width, i / width)))?;
    // Closed sets of a closure operator are exactly the sets reachable from
    // the empty set by repeatedly adding a point and re-closing.
    let mut seen: HashSet<PointSet> = HashSet::from([PointSet::EMPTY]);
    let mut queue = vec![PointSet::EMPTY];
    while let Some(t) = queue.pop() {
        for p in PointSet::full(n).difference(t) {
            let c = lattice_hull(width, height, t.with(p));
            if seen.insert(c) {
                queue.push(c);
            }
        }
    }
    Ok(ConvexitySpace::from_parts_unchecked(
        ground,
        ConvexFamily::new(seen),
    ))
}

const ELEMENT_NAMES: &[u8] = b"abcdefghijklmnop";

/// Strict order relation as a bit matrix: `rel[x]` has bit `y` iff `x < y`.
fn transitive_closure(n: usize, relations: &[(usize, usize)]) -> Result<Vec<u32>> {
    let mut rel = vec![0u32; n];
    for &(x, y) in relations {
        if x >= n || y >= n {
            return Err(invalid(format!("relation {x}<{y} outside 0..{n}")));
        }
        rel[x] |= 1 << y;
    }
    for k in 0..n {
        for x in 0..n {
            if rel[x] >> k & 1 == 1 {
                rel[x] |= rel[k];
            }
        }
    }
    if (0..n).any(|x| rel[x] >> x & 1 == 1) {
        return Err(invalid("relations contain a cycle"));
    }
    Ok(rel)
}

fn linear_extensions(n: usize, rel: &[u32]) -> Vec<Vec<usize>> {
    fn go(n: usize, rel: &[u32], placed: u32, order: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if order.len() == n {
            out.push(order.clone());
            return;
        }
        for x in 0..n {
            if placed >> x & 1 == 1 {
                continue;
            }
            // every predecessor of x must already be placed
            let preds_ok = (0..n).all(|p| rel[p] >> x & 1 == 0 || placed >> p & 1 == 1);
            if preds_ok {
                order.push(x);
                go(n, rel, placed | 1 << x, order, out);
                order.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, rel, 0, &mut Vec::new(), &mut out);
    out
}

/// Linear extensions of the partial order generated by `relations` (pairs
/// `(x, y)` meaning `x < y`) on `elements` items, with convex sets
/// `c(P)` for every order `P` extending the base, plus `{}`.
///
/// Each `c(P)` is the intersection of the sets `{L : x before y in L}` over
/// the relations of `P`, so the family is the intersection closure of those
/// sets taken over all incomparable pairs.
pub fn linear_extension_space(
    elements: usize,
    relations: &[(usize, usize)],
) -> Result<ConvexitySpace> {
    if !(1..=5).contains(&elements) {
        return Err(invalid(format!(
            "posets need 1..=5 elements, got {elements}"
        )));
    }
    let rel = transitive_closure(elements, relations)?;
    let orders = linear_extensions(elements, &rel);
    if orders.len() > 64 {
        return Err(Error::GroundTooLarge(orders.len()));
    }
    let ground = GroundSet::new(orders.iter().map(|o| {
        o.iter()
            .map(|&x| ELEMENT_NAMES[x] as char)
            .collect::<String>()
    }))?;
    let position = |o: &[usize], x: usize| o.iter().position(|&e| e == x).expect("element");
    let mut basis = Vec::new();
    for x in 0..elements {
        for y in 0..elements {
            let comparable = rel[x] >> y & 1 == 1 || rel[y] >> x & 1 == 1;
            if x != y && !comparable {
                basis.push(
                    (0..orders.len())
                        .filter(|&i| position(&orders[i], x) < position(&orders[i], y))
                        .collect::<PointSet>(),
                );
            }
        }
    }
    ConvexitySpace::intersection_closure(ground, basis)
}

/// Random separable space on `points` points: a few random half-space pairs
/// `{b, X\b}` closed under intersection.
pub fn random_separable(points: usize, seed: u64) -> Result<ConvexitySpace> {
    if !(1..=16).contains(&points) {
        return Err(invalid(format!(
            "random spaces need 1..=16 points, got {points}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let full = PointSet::full(points);
    loop {
        let pairs = rng.gen_range(1..=points);
        let mut basis = Vec::new();
        for _ in 0..pairs {
            let b = PointSet::from_bits(rng.gen::<u64>()).intersection(full);
            basis.push(b);
            basis.push(b.complement(points));
        }
        let space = ConvexitySpace::intersection_closure(GroundSet::indexed(points)?, basis)?;
        if space.is_separable() {
            return Ok(space);
        }
    }
}

/// Canonical string of a tree rooted at `root` (parenthesised, children sorted).
fn rooted_code(adj: &[Vec<usize>], root: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[root]
        .iter()
        .filter(|&&c| c != parent)
        .map(|&c| rooted_code(adj, c, root))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

fn tree_code(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    (0..n)
        .map(|r| rooted_code(&adj, r, usize::MAX))
        .min()
        .unwrap_or_default()
}

/// One edge list per isomorphism class of trees on `n` vertices.
pub fn nonisomorphic_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    for size in 1..n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for tree in &level {
            for v in 0..size {
                let mut grown = tree.clone();
                grown.push((v, size));
                if seen.insert(tree_code(size + 1, &grown)) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    level
}

fn is_partial_order(n: usize, rel: &[u32]) -> bool {
    (0..n).all(|x| {
        rel[x] >> x & 1 == 0
            && (0..n)
                .all(|y| rel[x] >> y & 1 == 0 || (rel[y] & !rel[x]) == 0 && rel[y] >> x & 1 == 0)
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, p, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            p.swap(j, k - 1);
        }
    }
    heap(n, &mut p, &mut out);
    out
}

/// One relation list per isomorphism class of partial orders on `n` elements.
pub fn nonisomorphic_posets(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    let perms = permutations(n);
    let encode = |rel: &[u32]| -> u64 {
        pairs.iter().enumerate().fold(0u64, |acc, (k, &(x, y))| {
            acc | (u64::from(rel[x] >> y & 1) << k)
        })
    };
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let mut rel = vec![0u32; n];
        for (k, &(x, y)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                rel[x] |= 1 << y;
            }
        }
        if !is_partial_order(n, &rel) {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| {
                let mut r = vec![0u32; n];
                for x in 0..n {
                    for y in 0..n {
                        if rel[x] >> y & 1 == 1 {
                            r[p[x]] |= 1 << p[y];
                        }
                    }
                }
                encode(&r)
            })
            .min()
            .expect("at least one permutation");
        if seen.insert(canon) {
            out.push(
                pairs
                    .iter()
                    .copied()
                    .filter(|&(x, y)| rel[x] >> y & 1 == 1)
                    .collect(),
            );
        }
    }
    out
}

/// Shuffled relabelling of a space (for invariance checks).
pub fn relabel(space: &ConvexitySpace, seed: u64) -> ConvexitySpace {
    let n = space.len();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let ground = GroundSet::new((0..n).map(|i| {
        let src = perm.iter().position(|&p| p == i).expect("permutation");
        space.ground().label(src).to_string()
    }))
    .expect("labels stay distinct");
    let family = space
        .convex()
        .iter()
        .map(|c| c.iter().map(|i| perm[i]).collect::<PointSet>());
    ConvexitySpace::from_parts_unchecked(ground, ConvexFamily::new(family))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{analyze, radon_number};

    fn s(v: &[usize]) -> PointSet {
        PointSet::from_indices(v.iter().copied())
    }

    #[test]
    fn power_sets() {
        assert_eq!(radon_number(&power_set_space(1).unwrap()).0, 2);
        assert_eq!(radon_number(&power_set_space(5).unwrap()).0, 6);
        let p3 = power_set_space(3).unwrap();
        assert!(p3.is_separable());
        assert_eq!(p3.halfspaces(false).len(), 8);
        assert!(power_set_space(0).is_err());
        assert!(power_set_space(17).is_err());
    }

    #[test]
    fn cylinder_counts() {
        for n in 1..=4 {
            assert_eq!(
                cylinder_space(n).unwrap().convex().len(),
                3usize.pow(n as u32) + 1
            );
        }
        let c2 = cylinder_space(2).unwrap();
        assert_eq!(c2.ground().labels(), &["00", "10", "01", "11"]);
        // proper half-spaces are the codimension-1 cylinders
        let hs = c2.halfspaces(true);
        assert_eq!(hs.len(), 4);
        assert!(hs.iter().all(|h| h.len() == 2));
        assert!(c2.is_separable());
    }

    #[test]
    fn cylinders_from_codimension_one_basis() {
        let c2 = cylinder_space(2).unwrap();
        let basis: Vec<PointSet> = c2.convex().iter().filter(|c| c.len() == 2).collect();
        let closed = ConvexitySpace::intersection_closure(c2.ground().clone(), basis).unwrap();
        assert_eq!(closed.convex(), c2.convex());
        assert_eq!(closed.convex().len(), 10);
    }

    #[test]
    fn path_and_star() {
        let path = subtree_space(&[("a", "b"), ("b", "c")]).unwrap();
        assert_eq!(path.convex().len(), 3 * 4 / 2 + 1);
        assert_eq!(radon_number(&path).0, 3);
        assert!(path.is_separable());
        let star = subtree_space(&[("c", "1"), ("c", "2"), ("c", "3"), ("c", "4")]).unwrap();
        assert!(radon_number(&star).0 <= 4);
        assert!(star.is_separable());
        assert!(subtree_space(&[("a", "b"), ("b", "a")]).is_err());
        assert!(subtree_space::<&str>(&[]).is_err());
    }

    #[test]
    fn path_counts() {
        for k in 1..=8 {
            let edges: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
            let sp = tree_space(GroundSet::indexed(k).unwrap(), &edges).unwrap();
            assert_eq!(sp.convex().len(), k * (k + 1) / 2 + 1);
        }
    }

    #[test]
    fn lattice_examples() {
        let g2 = lattice_convex_space(2, 2).unwrap();
        assert_eq!(g2.convex().len(), 16);
        let g3 = lattice_convex_space(3, 3).unwrap();
        assert!(!g3.is_convex(s(&[0, 8])));
        assert!(g3.is_convex(s(&[0, 4, 8])));
        assert_eq!(g3.convex_hull(s(&[0, 8])), s(&[0, 4, 8]));
        assert!(g3.is_separable());
    }

    #[test]
    fn lattice_brute_force() {
        // oracle: S is convex-lattice iff lattice_hull(S) == S, over all 2^9 subsets
        let g = lattice_convex_space(3, 3).unwrap();
        for sub in PointSet::full(9).subsets() {
            assert_eq!(g.is_convex(sub), lattice_hull(3, 3, sub) == sub, "{sub}");
        }
    }

    #[test]
    fn poset_examples() {
        let anti = linear_extension_space(3, &[]).unwrap();
        assert_eq!(anti.len(), 6);
        assert!(anti.is_separable());
        let total = linear_extension_space(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(total.len(), 1);
        assert_eq!(total.convex().len(), 2);
        assert!(linear_extension_space(2, &[(0, 1), (1, 0)]).is_err());
        assert!(linear_extension_space(5, &[]).is_err());
    }

    #[test]
    fn poset_halfspaces_are_single_relations() {
        // antichain {a,b,c}: proper half-spaces are the six "x before y" sets
        let sp = linear_extension_space(3, &[]).unwrap();
        let hs = sp.halfspaces(true);
        let mut expected = Vec::new();
        for x in 0..3u8 {
            for y in 0..3u8 {
                if x != y {
                    let (cx, cy) = ((b'a' + x) as char, (b'a' + y) as char);
                    expected.push(
                        (0..sp.len())
                            .filter(|&i| {
                                let l = sp.ground().label(i);
                                l.find(cx) < l.find(cy)
                            })
                            .collect::<PointSet>(),
                    );
                }
            }
        }
        assert_eq!(hs, ConvexFamily::new(expected));
    }

    #[test]
    fn poset_family_matches_direct_definition() {
        // oracle: a non-empty set of orders is c(P) iff it equals the set of all
        // extensions that respect every relation common to its members
        for (n, rels) in [(3, vec![]), (3, vec![(0, 1)]), (4, vec![(0, 1), (2, 3)])] {
            let sp = linear_extension_space(n, &rels).unwrap();
            let labels = sp.ground().labels();
            let before = |l: &str, x: char, y: char| l.find(x) < l.find(y);
            for sub in sp.full().subsets().filter(|s| !s.is_empty()) {
                let names: Vec<char> = (0..n).map(|x| ELEMENT_NAMES[x] as char).collect();
                let common: Vec<(char, char)> = names
                    .iter()
                    .flat_map(|&x| names.iter().map(move |&y| (x, y)))
                    .filter(|&(x, y)| x != y && sub.iter().all(|i| before(&labels[i], x, y)))
                    .collect();
                let generated: PointSet = (0..labels.len())
                    .filter(|&i| common.iter().all(|&(x, y)| before(&labels[i], x, y)))
                    .collect();
                assert_eq!(sp.is_convex(sub), generated == sub, "{n} {rels:?} {sub}");
            }
        }
    }

    #[test]
    fn random_spaces_are_separable_and_deterministic() {
        for seed in 0..20 {
            let a = random_separable(6, seed).unwrap();
            assert!(a.is_separable());
            assert_eq!(a, random_separable(6, seed).unwrap());
            assert!(ConvexitySpace::validate(a.ground().clone(), a.convex().iter()).is_ok());
        }
    }

    #[test]
    fn tree_and_poset_enumeration_counts() {
        let trees: Vec<usize> = (1..=8).map(|n| nonisomorphic_trees(n).len()).collect();
        assert_eq!(trees, vec![1, 1, 1, 2, 3, 6, 11, 23]);
        let posets: Vec<usize> = (1..=4).map(|n| nonisomorphic_posets(n).len()).collect();
        assert_eq!(posets, vec![1, 2, 5, 16]);
    }

    #[test]
    fn relabel_preserves_invariants() {
        let sp = lattice_convex_space(2, 3).unwrap();
        let base = analyze(&sp).unwrap();
        for seed in 0..5 {
            let r = analyze(&relabel(&sp, seed)).unwrap();
            assert_eq!((r.radon, r.helly, r.vc), (base.radon, base.helly, base.vc));
        }
    }
}
