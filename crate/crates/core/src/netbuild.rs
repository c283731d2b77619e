//! Weak ε-nets from a Helly point plus recursion over a δ-packing.
//!
//! Given a family `B` with Helly number `h` and VC dimension `v` generating
//! the convex sets, the net for `(μ, ε)` is
//!
//! * `{x0}` when `ε > 1 - 1/h` already, where `x0` is a point common to every
//!   `b ∈ B` with `μ(b) > 1 - 1/h`;
//! * otherwise `{x0}` together with the nets for `(μ|a, (1 + 1/(2h))·ε)` over
//!   every `a` of positive mass in a maximal `ε/(2h)²`-separated subfamily of
//!   `B`.
//!
//! Conditioning twice is conditioning on the intersection, so every node's
//! distribution is determined by its support; nodes are shared across the
//! recursion by `(support, level)`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::measure::{Distribution, Scalar};
use crate::params::{helly_number, vc_dimension};
use crate::set::PointSet;
use crate::space::{ConvexFamily, ConvexitySpace};

fn check_eps<T: Scalar>(eps: &T) -> Result<()> {
    if *eps <= T::zero() || *eps > T::one() {
        return Err(Error::EpsilonOutOfRange(eps.to_string()));
    }
    Ok(())
}

fn growth<T: Scalar>(h: usize) -> T {
    T::one() + T::one() / T::from_count(2 * h)
}

fn dense_threshold<T: Scalar>(h: usize) -> T {
    T::one() - T::one() / T::from_count(h)
}

/// Least `n >= 0` with `eps * (1 + 1/(2h))^n > 1 - 1/h`.
pub fn n_of_eps<T: Scalar>(eps: &T, h: usize) -> Result<usize> {
    check_eps(eps)?;
    if h == 0 {
        return Err(Error::ZeroHelly);
    }
    let factor: T = growth(h);
    let target: T = dense_threshold(h);
    let mut level = eps.clone();
    let mut n = 0;
    while level <= target {
        level = level * factor.clone();
        n += 1;
    }
    Ok(n)
}

/// Per-level constants of the construction.
#[derive(Clone, Debug, PartialEq)]
pub struct NetParams<T> {
    pub eps: T,
    pub h: usize,
    pub v: usize,
    /// `eps / (2h)^2`
    pub delta: T,
    /// `(1 + 1/(2h)) * eps`
    pub eps_next: T,
    /// Levels of recursion below this one.
    pub depth: usize,
}

impl<T: Scalar> NetParams<T> {
    pub fn new(eps: T, h: usize, v: usize) -> Result<Self> {
        let depth = n_of_eps(&eps, h)?;
        let two_h = T::from_count(2 * h);
        Ok(NetParams {
            delta: eps.clone() / (two_h.clone() * two_h),
            eps_next: growth::<T>(h) * eps.clone(),
            eps,
            h,
            v,
            depth,
        })
    }

    /// `(4e^2 / delta)^v`, the packing-size bound for a VC class.
    pub fn packing_bound(&self) -> f64 {
        let delta = self.delta.to_f64().unwrap_or(0.0);
        (4.0 * std::f64::consts::E.powi(2) / delta).powi(self.v as i32)
    }
}

/// Least-index point of `∩ dense` (any point when `dense` is empty).
pub fn helly_point(space: &ConvexitySpace, dense: &ConvexFamily) -> Result<usize> {
    dense
        .intersection(space.full())
        .first()
        .ok_or(Error::EmptyIntersection)
}

/// Members of `family` with `μ(b) > 1 - 1/h`.
pub fn dense_halfspaces<T: Scalar>(
    family: &ConvexFamily,
    mu: &Distribution<T>,
    h: usize,
) -> ConvexFamily {
    let threshold: T = dense_threshold(h);
    let table = mu.table();
    family
        .iter()
        .filter(|&b| table.measure(b) > threshold)
        .collect()
}

/// Maximal δ-separated subfamily, built greedily in canonical order. Every
/// member of `family` lies within `delta` of some chosen set; this cover
/// property is checked before returning.
pub fn greedy_packing<T: Scalar>(
    family: &ConvexFamily,
    mu: &Distribution<T>,
    delta: &T,
) -> Result<ConvexFamily> {
    let table = mu.table();
    let dist = |a: PointSet, b: PointSet| table.measure(a.symmetric_difference(b));
    let mut chosen: Vec<PointSet> = Vec::new();
    for b in family.iter() {
        if chosen.iter().all(|&a| dist(a, b) > *delta) {
            chosen.push(b);
        }
    }
    if let Some(b) = family
        .iter()
        .find(|&b| chosen.iter().all(|&a| dist(a, b) > *delta))
    {
        return Err(Error::Consistency(format!("packing does not cover {b}")));
    }
    Ok(ConvexFamily::new(chosen))
}

/// One node of the construction.
#[derive(Clone, Debug, PartialEq)]
pub struct TraceNode<T> {
    /// Support of the node's (conditioned) distribution.
    pub support: PointSet,
    pub eps: T,
    /// Remaining recursion levels, `N(eps)`.
    pub depth: usize,
    pub helly_point: usize,
    /// The δ-packing; empty at the base case.
    pub packing: Vec<PointSet>,
    /// `(a, child node)` for each packing element of positive mass.
    pub children: Vec<(PointSet, usize)>,
}

/// A weak ε-net with the recursion that produced it.
#[derive(Clone, Debug, PartialEq)]
pub struct WeakNet<T> {
    pub points: PointSet,
    pub params: NetParams<T>,
    /// Nodes of the recursion; node 0 is the root. Identical subproblems are
    /// shared, so this is a DAG.
    pub trace: Vec<TraceNode<T>>,
    /// `(120 h^2 / eps)^(4 h v ln(1/eps))`, evaluated in floating point.
    pub size_bound: f64,
    /// Size of the unshared recursion tree.
    pub tree_size: f64,
    /// Bound checks that failed; they do not invalidate the net.
    pub warnings: Vec<String>,
}

impl<T> WeakNet<T> {
    pub fn size(&self) -> usize {
        self.points.len()
    }
}

/// Outcome of an exhaustive piercing check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pierced,
    /// A heaviest convex set of measure `>= eps` missed by the net.
    Missed(PointSet),
}

impl Verdict {
    pub fn is_pierced(self) -> bool {
        self == Verdict::Pierced
    }
}

pub fn verify_weak_net<T: Scalar>(
    space: &ConvexitySpace,
    mu: &Distribution<T>,
    eps: &T,
    net: PointSet,
) -> Verdict {
    let mut worst: Option<(PointSet, T)> = None;
    for c in space.convex().iter().filter(|c| c.is_disjoint(net)) {
        let m = mu.measure(c);
        if m >= *eps && worst.as_ref().is_none_or(|(_, w)| m > *w) {
            worst = Some((c, m));
        }
    }
    worst.map_or(Verdict::Pierced, |(c, _)| Verdict::Missed(c))
}

/// `(120 h^2 / eps)^(4 h v ln(1/eps))`.
pub fn size_bound(eps: f64, h: usize, v: usize) -> f64 {
    let (h, v) = (h as f64, v as f64);
    (120.0 * h * h / eps).powf(4.0 * h * v * (1.0 / eps).ln())
}

struct Builder<'a, T> {
    space: &'a ConvexitySpace,
    family: &'a ConvexFamily,
    h: usize,
    v: usize,
    nodes: Vec<TraceNode<T>>,
    memo: HashMap<(PointSet, usize), usize>,
}

impl<T: Scalar> Builder<'_, T> {
    fn node(&mut self, mu: &Distribution<T>, eps: T, level: usize) -> Result<usize> {
        let support = mu.support();
        if let Some(&id) = self.memo.get(&(support, level)) {
            return Ok(id);
        }
        let params = NetParams::new(eps, self.h, self.v)?;
        let x0 = helly_point(self.space, &dense_halfspaces(self.family, mu, self.h))?;
        let id = self.nodes.len();
        self.nodes.push(TraceNode {
            support,
            eps: params.eps.clone(),
            depth: params.depth,
            helly_point: x0,
            packing: Vec::new(),
            children: Vec::new(),
        });
        self.memo.insert((support, level), id);
        if params.depth == 0 {
            return Ok(id);
        }
        let packing = greedy_packing(self.family, mu, &params.delta)?;
        let mut children = Vec::new();
        for a in packing.iter().filter(|&a| mu.measure(a) > T::zero()) {
            let child = self.node(&mu.conditional(a)?, params.eps_next.clone(), level + 1)?;
            children.push((a, child));
        }
        self.nodes[id].packing = packing.sets().to_vec();
        self.nodes[id].children = children;
        Ok(id)
    }
}

/// Fails unless `family ⊆ C` and every non-empty convex set is the
/// intersection of the members of `family` containing it.
pub fn check_generates(space: &ConvexitySpace, family: &ConvexFamily) -> Result<()> {
    if let Some(b) = family.iter().find(|&b| !space.is_convex(b)) {
        return Err(Error::NotConvex(b));
    }
    for c in space.convex().iter().filter(|c| !c.is_empty()) {
        let cover = family
            .iter()
            .filter(|&b| c.is_subset(b))
            .fold(space.full(), PointSet::intersection);
        if cover != c {
            return Err(Error::InvalidParameters(format!(
                "convex set {c} is not an intersection of the given family"
            )));
        }
    }
    Ok(())
}

/// Builds a weak ε-net for the convex sets of `space` generated by `family`.
///
/// The result is checked exhaustively against every convex set before it is
/// returned; a miss is reported as an internal consistency failure.
pub fn build_weak_net<T: Scalar>(
    space: &ConvexitySpace,
    family: &ConvexFamily,
    mu: &Distribution<T>,
    eps: &T,
) -> Result<WeakNet<T>> {
    check_eps(eps)?;
    if mu.len() != space.len() {
        return Err(Error::WeightCount {
            expected: space.len(),
            got: mu.len(),
        });
    }
    check_generates(space, family)?;
    let h = helly_number(family, space.full()).number;
    let (v, _) = vc_dimension(family, space.full());
    let params = NetParams::new(eps.clone(), h, v)?;

    let mut builder = Builder {
        space,
        family,
        h,
        v,
        nodes: Vec::new(),
        memo: HashMap::new(),
    };
    builder.node(mu, eps.clone(), 0)?;
    let nodes = builder.nodes;
    let points: PointSet = nodes.iter().map(|n| n.helly_point).collect();

    // Unshared tree size; children always sit one level deeper, so
    // processing by increasing remaining depth sees children first.
    let mut order: Vec<usize> = (0..nodes.len()).collect();
    order.sort_by_key(|&id| nodes[id].depth);
    let mut tree = vec![0f64; nodes.len()];
    for id in order {
        tree[id] = 1.0
            + nodes[id]
                .children
                .iter()
                .map(|&(_, c)| tree[c])
                .sum::<f64>();
    }

    let mut warnings = Vec::new();
    for node in &nodes {
        if node.depth == 0 {
            continue;
        }
        let p = NetParams::new(node.eps.clone(), h, v)?;
        if node.packing.len() as f64 > p.packing_bound() {
            warnings.push(format!(
                "packing of {} sets exceeds (4e^2/delta)^v = {:.3e}",
                node.packing.len(),
                p.packing_bound()
            ));
        }
    }
    // β(0) = 1, β(n) = 1 + (4e^2/δ_n)^v β(n-1), with δ taken at each level's ε.
    let mut level_eps = Vec::with_capacity(params.depth + 1);
    let mut e = eps.clone();
    for _ in 0..=params.depth {
        level_eps.push(e.clone());
        e = growth::<T>(h) * e;
    }
    let beta = level_eps.iter().rev().skip(1).try_fold(1f64, |beta, e| {
        NetParams::new(e.clone(), h, v).map(|p| 1.0 + p.packing_bound() * beta)
    })?;
    if tree[0] > beta {
        warnings.push(format!(
            "recursion tree of {} nodes exceeds recurrence bound {beta:.3e}",
            tree[0]
        ));
    }
    let bound = size_bound(eps.to_f64().unwrap_or(f64::NAN), h, v);
    if points.len() as f64 > bound {
        warnings.push(format!(
            "net of {} points exceeds size bound {bound:.3e}",
            points.len()
        ));
    }

    if let Verdict::Missed(c) = verify_weak_net(space, mu, eps, points) {
        return Err(Error::Consistency(format!(
            "built net misses heavy convex set {c}"
        )));
    }
    Ok(WeakNet {
        points,
        params,
        trace: nodes,
        size_bound: bound,
        tree_size: tree[0],
        warnings,
    })
}
