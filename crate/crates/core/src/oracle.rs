//! Exact brute-force solvers: minimum weak ε-nets as hitting sets, and graph
//! chromatic numbers.

use crate::error::{Error, Result};
use crate::measure::{Distribution, Scalar};
use crate::set::PointSet;
use crate::space::ConvexitySpace;

/// Default vertex cap for exact colouring.
pub const DEFAULT_VERTEX_CAP: usize = 64;

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    matrix: Vec<Vec<bool>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            matrix: vec![vec![false; n]; n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for a in 0..n {
            for b in a + 1..n {
                g.add_edge(a, b);
            }
        }
        g
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a != b, "self-loop at {a}");
        if !self.matrix[a][b] {
            self.matrix[a][b] = true;
            self.matrix[b][a] = true;
            self.adj[a].push(b);
            self.adj[b].push(a);
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.matrix[a][b]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = (0..self.vertex_count())
            .flat_map(|a| {
                self.adj[a]
                    .iter()
                    .filter(move |&&b| a < b)
                    .map(move |&b| (a, b))
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn is_proper_coloring(&self, colors: &[usize]) -> bool {
        self.edges().iter().all(|&(a, b)| colors[a] != colors[b])
    }
}

/// Largest clique found greedily from every start vertex.
fn greedy_clique(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut best = usize::from(n > 0);
    for start in 0..n {
        let mut clique = vec![start];
        let mut cands: Vec<usize> = g.neighbors(start).to_vec();
        cands.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
        for v in cands {
            if clique.iter().all(|&u| g.has_edge(u, v)) {
                clique.push(v);
            }
        }
        best = best.max(clique.len());
    }
    best
}

/// DSATUR greedy colouring; returns the number of colours used.
fn dsatur_greedy(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut color: Vec<Option<usize>> = vec![None; n];
    let mut used = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v].is_none())
            .max_by_key(|&v| {
                let mut seen: Vec<usize> =
                    g.neighbors(v).iter().filter_map(|&u| color[u]).collect();
                seen.sort_unstable();
                seen.dedup();
                (seen.len(), g.degree(v), std::cmp::Reverse(v))
            })
            .expect("uncoloured vertex remains");
        let c = (0..)
            .find(|&c| g.neighbors(v).iter().all(|&u| color[u] != Some(c)))
            .expect("some colour is free");
        color[v] = Some(c);
        used = used.max(c + 1);
    }
    used
}

/// Backtracking `k`-colourability with DSATUR vertex choice and
/// forward checking on colour domains.
struct Colorer<'a> {
    g: &'a Graph,
    k: usize,
    color: Vec<Option<usize>>,
    // blocked[v][c] = number of coloured neighbours of v with colour c
    blocked: Vec<Vec<u32>>,
    saturation: Vec<usize>,
}

impl<'a> Colorer<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        let n = g.vertex_count();
        Colorer {
            g,
            k,
            color: vec![None; n],
            blocked: vec![vec![0; k]; n],
            saturation: vec![0; n],
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = Some(c);
        for &u in self.g.neighbors(v) {
            if self.blocked[u][c] == 0 {
                self.saturation[u] += 1;
            }
            self.blocked[u][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = None;
        for &u in self.g.neighbors(v) {
            self.blocked[u][c] -= 1;
            if self.blocked[u][c] == 0 {
                self.saturation[u] -= 1;
            }
        }
    }

    fn search(&mut self, colored: usize, used: usize) -> bool {
        let n = self.g.vertex_count();
        if colored == n {
            return true;
        }
        let mut pick = None;
        for v in (0..n).filter(|&v| self.color[v].is_none()) {
            if self.saturation[v] >= self.k {
                return false;
            }
            let key = (self.saturation[v], self.g.degree(v));
            if pick.is_none_or(|(_, best)| key > best) {
                pick = Some((v, key));
            }
        }
        let (v, _) = pick.expect("uncoloured vertex");
        // Colours beyond the first unused one are symmetric to it.
        for c in 0..self.k.min(used + 1) {
            if self.blocked[v][c] == 0 {
                self.assign(v, c);
                if self.search(colored + 1, used.max(c + 1)) {
                    return true;
                }
                self.unassign(v, c);
            }
        }
        false
    }
}

pub fn is_k_colorable(g: &Graph, k: usize) -> bool {
    if g.vertex_count() == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    Colorer::new(g, k).search(0, 0)
}

/// Exact chromatic number by iterative deepening between a clique lower
/// bound and a DSATUR upper bound. The empty graph has chromatic number 0.
pub fn exact_chromatic_number(g: &Graph, vertex_cap: usize) -> Result<usize> {
    let n = g.vertex_count();
    if n > vertex_cap {
        return Err(Error::TooLargeForExact {
            got: n,
            cap: vertex_cap,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let lower = greedy_clique(g);
    let upper = dsatur_greedy(g);
    Ok((lower..upper)
        .find(|&k| is_k_colorable(g, k))
        .unwrap_or(upper))
}

/// Minimum hitting set problem over a candidate universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HittingSetInstance {
    pub universe: PointSet,
    pub targets: Vec<PointSet>,
}

impl HittingSetInstance {
    /// Restricts targets to `universe` and, with `reduce`, keeps only the
    /// inclusion-minimal ones. An empty target makes the instance infeasible.
    pub fn new(
        universe: PointSet,
        targets: impl IntoIterator<Item = PointSet>,
        reduce: bool,
    ) -> Result<Self> {
        let mut ts: Vec<PointSet> = targets
            .into_iter()
            .map(|t| t.intersection(universe))
            .collect();
        if ts.iter().any(|t| t.is_empty()) {
            return Err(Error::Infeasible);
        }
        ts.sort_unstable_by_key(|t| (t.len(), *t));
        ts.dedup();
        if reduce {
            let mut kept: Vec<PointSet> = Vec::new();
            for t in ts {
                if !kept.iter().any(|k| k.is_subset(t)) {
                    kept.push(t);
                }
            }
            ts = kept;
        }
        Ok(HittingSetInstance {
            universe,
            targets: ts,
        })
    }

    /// Minimum hitting set; among optima the canonically least one.
    pub fn solve(&self) -> (usize, PointSet) {
        let size = (disjoint_packing(&self.targets)..)
            .find(|&k| can_hit(&self.targets, self.universe, k))
            .expect("the full universe hits every target");
        // Fix members one at a time, smallest index first, keeping feasibility.
        let mut chosen = PointSet::EMPTY;
        let mut remaining = self.targets.clone();
        let mut floor = 0;
        for slot in 0..size {
            let budget = size - slot - 1;
            let pick = self
                .universe
                .iter()
                .filter(|&i| i >= floor)
                .find(|&i| {
                    let rest: Vec<PointSet> = remaining
                        .iter()
                        .copied()
                        .filter(|t| !t.contains(i))
                        .collect();
                    let above = self.universe.difference(PointSet::full(i + 1));
                    can_hit(&rest, above, budget)
                })
                .expect("an optimal completion exists");
            chosen = chosen.with(pick);
            remaining.retain(|t| !t.contains(pick));
            floor = pick + 1;
        }
        debug_assert!(remaining.is_empty());
        (size, chosen)
    }
}

/// Number of pairwise disjoint targets picked greedily, smallest first.
fn disjoint_packing(targets: &[PointSet]) -> usize {
    let mut sorted: Vec<PointSet> = targets.to_vec();
    sorted.sort_unstable_by_key(|t| t.len());
    let mut covered = PointSet::EMPTY;
    let mut count = 0;
    for t in sorted {
        if t.is_disjoint(covered) {
            covered = covered.union(t);
            count += 1;
        }
    }
    count
}

/// Whether at most `budget` points of `allowed` hit every target.
fn can_hit(targets: &[PointSet], allowed: PointSet, budget: usize) -> bool {
    if targets.is_empty() {
        return true;
    }
    let restricted: Vec<PointSet> = targets.iter().map(|t| t.intersection(allowed)).collect();
    if budget == 0 || restricted.iter().any(|t| t.is_empty()) {
        return false;
    }
    if disjoint_packing(&restricted) > budget {
        return false;
    }
    let branch = *restricted
        .iter()
        .min_by_key(|t| t.len())
        .expect("non-empty");
    let mut allowed = allowed;
    for p in branch {
        let rest: Vec<PointSet> = targets.iter().copied().filter(|t| !t.contains(p)).collect();
        if can_hit(&rest, allowed, budget - 1) {
            return true;
        }
        // Later siblings need not consider p again.
        allowed = allowed.without(p);
    }
    false
}

/// Which points a net may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Candidates {
    /// Anywhere in the ground set (weak nets).
    Weak,
    /// Only the support of the distribution (strong nets).
    Strong,
}

/// Exact minimum size of a net together with the canonically least optimum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetOptimum {
    pub size: usize,
    pub witness: PointSet,
}

/// Convex sets of measure at least `eps`.
pub fn heavy_sets<T: Scalar>(
    space: &ConvexitySpace,
    mu: &Distribution<T>,
    eps: &T,
) -> Vec<PointSet> {
    space
        .convex()
        .iter()
        .filter(|&c| mu.measure(c) >= *eps)
        .collect()
}

/// Minimum weak ε-net, searching over the whole ground set.
pub fn minimal_weak_net<T: Scalar>(
    space: &ConvexitySpace,
    mu: &Distribution<T>,
    eps: &T,
) -> Result<NetOptimum> {
    minimal_net(space, mu, eps, Candidates::Weak)
}

pub fn minimal_net<T: Scalar>(
    space: &ConvexitySpace,
    mu: &Distribution<T>,
    eps: &T,
    candidates: Candidates,
) -> Result<NetOptimum> {
    if *eps <= T::zero() {
        return Err(Error::EpsilonOutOfRange(eps.to_string()));
    }
    let universe = match candidates {
        Candidates::Weak => space.full(),
        Candidates::Strong => mu.support(),
    };
    let instance = HittingSetInstance::new(universe, heavy_sets(space, mu, eps), true)?;
    let (size, witness) = instance.solve();
    Ok(NetOptimum { size, witness })
}
