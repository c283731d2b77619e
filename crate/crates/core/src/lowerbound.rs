//! Lower bounds on weak-net size.
//!
//! A net picks a point inside every heavy convex set, and two disjoint sets
//! cannot share that point, so any net colours the disjointness graph of the
//! heavy sets. Its chromatic number is therefore a lower bound. Uniform mass
//! on a Radon-shattered set makes that graph contain a Kneser graph, whose
//! chromatic number is known in closed form.

use std::fmt;

use crate::error::{Error, Result};
use crate::measure::{Distribution, Scalar};
use crate::oracle::{exact_chromatic_number, heavy_sets, Graph};
use crate::params::{radon_number, HullCache};
use crate::set::PointSet;
use crate::space::ConvexitySpace;

/// Heavy convex sets joined when disjoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisjointnessGraph {
    pub vertices: Vec<PointSet>,
    pub graph: Graph,
}

impl DisjointnessGraph {
    pub fn index_of(&self, s: PointSet) -> Option<usize> {
        self.vertices.binary_search(&s).ok()
    }
}

/// `G(μ, ε)`: vertices are the convex sets with `μ(c) >= ε`.
pub fn disjointness_graph<T: Scalar>(
    space: &ConvexitySpace,
    mu: &Distribution<T>,
    eps: &T,
) -> DisjointnessGraph {
    let vertices = heavy_sets(space, mu, eps);
    let mut graph = Graph::new(vertices.len());
    for (i, a) in vertices.iter().enumerate() {
        for (j, b) in vertices.iter().enumerate().skip(i + 1) {
            if a.is_disjoint(*b) {
                graph.add_edge(i, j);
            }
        }
    }
    DisjointnessGraph { vertices, graph }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// Exact chromatic number of the disjointness graph.
    ExactChromatic,
    /// `r - 2k + 2` for the embedded Kneser graph `KG(r, k)`, `k = ⌈εr⌉`.
    KneserFormula,
    /// `⌈(1 - 2ε) r⌉`.
    LovaszClosedForm,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::ExactChromatic => "exact-chromatic",
            Method::KneserFormula => "kneser-formula",
            Method::LovaszClosedForm => "lovasz-closed-form",
        })
    }
}

/// Evidence that every weak ε-net for `mu` has at least `bound` points.
#[derive(Clone, Debug, PartialEq)]
pub struct LowerBoundCertificate<T> {
    pub mu: Distribution<T>,
    pub eps: T,
    pub bound: usize,
    pub method: Method,
    /// The Radon-shattered set carrying `mu`, for Radon certificates.
    pub support: Option<PointSet>,
    /// The coloured graph, for exact certificates.
    pub graph: Option<DisjointnessGraph>,
    /// Both closed forms, for Radon certificates.
    pub kneser_bound: Option<usize>,
    pub linear_bound: Option<usize>,
}

/// Exact `χ(G(μ, ε))` as a certificate.
pub fn chromatic_lower_bound<T: Scalar>(
    space: &ConvexitySpace,
    mu: &Distribution<T>,
    eps: &T,
    vertex_cap: usize,
) -> Result<LowerBoundCertificate<T>> {
    let graph = disjointness_graph(space, mu, eps);
    let bound = exact_chromatic_number(&graph.graph, vertex_cap)?;
    Ok(LowerBoundCertificate {
        mu: mu.clone(),
        eps: eps.clone(),
        bound,
        method: Method::ExactChromatic,
        support: None,
        graph: Some(graph),
        kneser_bound: None,
        linear_bound: None,
    })
}

/// `χ(KG(n, k)) = n - 2k + 2` when `n >= 2k`, and 1 otherwise.
pub fn lovasz_formula(n: usize, k: usize) -> usize {
    if n >= 2 * k {
        n - 2 * k + 2
    } else {
        1
    }
}

/// Certificate from uniform mass on a largest Radon-shattered set `Y`,
/// `r = |Y|`: the heavy sets include the Kneser graph `KG(r, ⌈εr⌉)`.
pub fn radon_lower_bound<T: Scalar>(
    space: &ConvexitySpace,
    eps: &T,
) -> Result<LowerBoundCertificate<T>> {
    if *eps <= T::zero() || *eps > T::one() {
        return Err(Error::EpsilonOutOfRange(eps.to_string()));
    }
    let (_, witness) = radon_number(space);
    let r = witness.len();
    if r == 0 {
        return Err(Error::InvalidParameters("space has no points".into()));
    }
    let rr = T::from_count(r);
    let k = (eps.clone() * rr.clone()).ceil_count();
    let kneser = lovasz_formula(r, k).max(1);
    let two = T::from_count(2);
    let linear_value = (T::one() - two * eps.clone()) * rr;
    let linear = if linear_value > T::zero() {
        linear_value.ceil_count()
    } else {
        0
    };
    let (bound, method) = if linear > kneser {
        (linear, Method::LovaszClosedForm)
    } else {
        (kneser, Method::KneserFormula)
    };
    Ok(LowerBoundCertificate {
        mu: Distribution::uniform_on(space.len(), witness),
        eps: eps.clone(),
        bound,
        method,
        support: Some(witness),
        graph: None,
        kneser_bound: Some(kneser),
        linear_bound: Some(linear),
    })
}

/// `KG(n, k)` with its vertices (the k-subsets of `0..n` in canonical order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KneserGraph {
    pub n: usize,
    pub k: usize,
    pub vertices: Vec<PointSet>,
    pub graph: Graph,
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

pub fn kneser_graph(n: usize, k: usize, vertex_cap: usize) -> Result<KneserGraph> {
    if n == 0 || k == 0 || k > n || n > 64 {
        return Err(Error::InvalidParameters(format!(
            "Kneser graph needs 1 <= k <= n <= 64, got n={n} k={k}"
        )));
    }
    let count = binomial(n, k);
    if count > vertex_cap as u128 {
        return Err(Error::TooLargeForExact {
            got: count.min(usize::MAX as u128) as usize,
            cap: vertex_cap,
        });
    }
    let mut vertices: Vec<PointSet> = PointSet::full(n)
        .subsets()
        .filter(|s| s.len() == k)
        .collect();
    vertices.sort_unstable();
    let mut graph = Graph::new(vertices.len());
    for (i, a) in vertices.iter().enumerate() {
        for (j, b) in vertices.iter().enumerate().skip(i + 1) {
            if a.is_disjoint(*b) {
                graph.add_edge(i, j);
            }
        }
    }
    Ok(KneserGraph {
        n,
        k,
        vertices,
        graph,
    })
}

/// Explicit map from `KG(r, k)` into a disjointness graph: vertex `Z` (a
/// `k`-subset of positions in `Y`) goes to `conv(Z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KneserEmbedding {
    pub kneser: KneserGraph,
    /// `(Z as points of the space, vertex index in the disjointness graph)`.
    pub mapping: Vec<(PointSet, usize)>,
}

/// Maps each `k`-subset `Z ⊆ y` to `conv(Z)` in `graph` and checks that
/// the map is injective and preserves both adjacency and non-adjacency.
pub fn kneser_embedding(
    space: &ConvexitySpace,
    y: PointSet,
    k: usize,
    graph: &DisjointnessGraph,
) -> Result<KneserEmbedding> {
    let kneser = kneser_graph(y.len(), k, usize::MAX)?;
    let ys = y.to_vec();
    let mut cache = HullCache::new(space);
    let mut mapping = Vec::with_capacity(kneser.vertices.len());
    for z in &kneser.vertices {
        let points: PointSet = z.iter().map(|p| ys[p]).collect();
        let hull = cache.hull(points);
        let vertex = graph.index_of(hull).ok_or_else(|| {
            Error::Consistency(format!("hull {hull} of {points} is not a heavy set"))
        })?;
        mapping.push((points, vertex));
    }
    for (i, &(_, a)) in mapping.iter().enumerate() {
        for (j, &(_, b)) in mapping.iter().enumerate().skip(i + 1) {
            if a == b {
                return Err(Error::Consistency(
                    "Kneser embedding is not injective".into(),
                ));
            }
            if kneser.graph.has_edge(i, j) != graph.graph.has_edge(a, b) {
                return Err(Error::Consistency(format!(
                    "adjacency of {} and {} not preserved",
                    mapping[i].0, mapping[j].0
                )));
            }
        }
    }
    Ok(KneserEmbedding { kneser, mapping })
}

/// Union size of intersecting families against `2^n - 2^(n-s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KleitmanReport {
    pub n: usize,
    pub s: usize,
    pub union_size: usize,
    pub holds: bool,
    /// The union size meets the bound exactly.
    pub tight: bool,
}

/// Checks `|F_1 ∪ .. ∪ F_s| <= 2^n - 2^(n-s)` for intersecting families of
/// subsets of `0..n`.
pub fn kleitman_check(n: usize, families: &[Vec<PointSet>]) -> Result<KleitmanReport> {
    if n > 30 {
        return Err(Error::InvalidParameters(format!(
            "n = {n} too large for counting"
        )));
    }
    let full = PointSet::full(n);
    for (i, fam) in families.iter().enumerate() {
        if fam.iter().any(|f| !f.is_subset(full)) {
            return Err(Error::InvalidParameters(format!(
                "family {i} leaves 0..{n}"
            )));
        }
        let intersecting = fam.iter().all(|a| fam.iter().all(|b| !a.is_disjoint(*b)));
        if !intersecting {
            return Err(Error::NotIntersecting(i));
        }
    }
    let mut union: Vec<PointSet> = families.iter().flatten().copied().collect();
    union.sort_unstable();
    union.dedup();
    let s = families.len();
    // Compare scaled by 2^s to stay in integers: |U| 2^s vs 2^(n+s) - 2^n.
    let lhs = (union.len() as u128) << s.min(96);
    let rhs = (1u128 << (n + s.min(96))) - (1u128 << n);
    Ok(KleitmanReport {
        n,
        s,
        union_size: union.len(),
        holds: lhs <= rhs,
        tight: lhs == rhs,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlonReport {
    pub n: usize,
    pub chromatic: usize,
    /// `χ(KG(n, n/4)) > n/10`
    pub holds: bool,
}

pub fn alon_bound_check(n: usize, vertex_cap: usize) -> Result<AlonReport> {
    if n == 0 || !n.is_multiple_of(4) {
        return Err(Error::InvalidParameters(format!(
            "n = {n} must be a positive multiple of 4"
        )));
    }
    let kg = kneser_graph(n, n / 4, vertex_cap)?;
    let chromatic = exact_chromatic_number(&kg.graph, vertex_cap)?;
    Ok(AlonReport {
        n,
        chromatic,
        holds: 10 * chromatic > n,
    })
}
