//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Run with `cargo test -p radon-nets --test acceptance`.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use radon_nets::lowerbound::{
    alon_bound_check, disjointness_graph, kleitman_check, kneser_embedding, kneser_graph,
    lovasz_formula, radon_lower_bound,
};
use radon_nets::netbuild::{build_weak_net, verify_weak_net};
use radon_nets::oracle::{exact_chromatic_number, minimal_weak_net};
use radon_nets::params::{analyze, helly_number, radon_number, vc_dimension, ParamsReport};
use radon_nets::{spaces, ConvexFamily, Distribution, PointSet, Rational, Scalar};

use common::{corpus, distributions, epsilons, q, Named};

/// Vertex cap for exact colouring inside the acceptance run. Disjointness
/// graphs of the 3x3 lattice exceed the default of 64 and `KG(8,4)` has 70
/// vertices; the search is still exact, only the guard is raised.
const ACCEPTANCE_VERTEX_CAP: usize = 4096;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn timed(limit: Duration, elapsed: Duration, mut o: Outcome) -> Outcome {
    if elapsed > limit {
        o.pass = false;
    }
    o.detail = format!(
        "{} [{:.2}s, limit {}s]",
        o.detail,
        elapsed.as_secs_f64(),
        limit.as_secs()
    );
    o
}

fn invariants_below_radon(
    corpus: &[Named],
    reports: &[ParamsReport],
    elapsed: Duration,
) -> Outcome {
    let mut failures = Vec::new();
    for (named, r) in corpus.iter().zip(reports) {
        if !r.separable {
            failures.push(format!("{} not separable", named.name));
        } else if r.helly + 1 > r.radon || r.vc + 1 > r.radon {
            failures.push(format!(
                "{}: r={} h={} v={}",
                named.name, r.radon, r.helly, r.vc
            ));
        }
    }
    timed(
        Duration::from_secs(60),
        elapsed,
        outcome(
            failures.is_empty(),
            format!("{} spaces, failures: {:?}", corpus.len(), failures),
        ),
    )
}

fn known_values() -> Outcome {
    let mut bad = Vec::new();
    for m in 1..=5 {
        let r = radon_number(&spaces::power_set_space(m).unwrap()).0;
        if r != m + 1 {
            bad.push(format!("radon(power {m}) = {r}"));
        }
    }
    for n in 2..=3 {
        let cyl = spaces::cylinder_space(n).unwrap();
        let h = helly_number(&cyl.halfspaces(true), cyl.full()).number;
        if h != 2 {
            bad.push(format!("helly(cylinders {n}) = {h}"));
        }
    }
    let mut trees = 0;
    for n in 1..=8 {
        for edges in spaces::nonisomorphic_trees(n) {
            let sp =
                spaces::tree_space(radon_nets::GroundSet::indexed(n).unwrap(), &edges).unwrap();
            let r = radon_number(&sp).0;
            trees += 1;
            if r > 4 {
                bad.push(format!("radon(tree {edges:?}) = {r}"));
            }
        }
    }
    for m in 3..=6 {
        let full = PointSet::full(m);
        let fam: ConvexFamily = (0..m).map(|x| full.without(x)).chain([full]).collect();
        let v = vc_dimension(&fam, full).0;
        if v != 1 {
            bad.push(format!("vc(co-singletons {m}) = {v}"));
        }
    }
    outcome(
        bad.is_empty(),
        format!("{trees} trees checked, mismatches: {bad:?}"),
    )
}

#[derive(Default)]
struct NetStats {
    instances: usize,
    not_pierced: Vec<String>,
    base_case_wrong: Vec<String>,
    sandwich: Vec<String>,
    tight_checked: usize,
    not_tight: Vec<String>,
    warnings: usize,
    largest_graph: usize,
    net_time: Duration,
    graph_time: Duration,
    oracle_time: Duration,
}

fn net_suite(corpus: &[Named], reports: &[ParamsReport]) -> NetStats {
    let mut stats = NetStats::default();
    for (k, (named, report)) in corpus.iter().zip(reports).enumerate() {
        let space = &named.space;
        let family = space.halfspaces(false);
        let threshold = q(1, 1) - q(1, report.helly as i64);
        for (d, mu) in distributions(space.len(), 25, 1000 + k as u64)
            .iter()
            .enumerate()
        {
            for eps in epsilons() {
                stats.instances += 1;
                let tag = format!("{} mu#{d} eps={eps}", named.name);
                let t = Instant::now();
                let built = build_weak_net(space, &family, mu, &eps);
                let net = match built {
                    Ok(net) => net,
                    Err(e) => {
                        stats.not_pierced.push(format!("{tag}: {e}"));
                        continue;
                    }
                };
                stats.warnings += net.warnings.len();
                if !verify_weak_net(space, mu, &eps, net.points).is_pierced() {
                    stats.not_pierced.push(tag.clone());
                }
                stats.net_time += t.elapsed();
                if eps > threshold && net.size() != 1 {
                    stats
                        .base_case_wrong
                        .push(format!("{tag}: size {}", net.size()));
                }
                let t = Instant::now();
                let graph = disjointness_graph(space, mu, &eps);
                stats.largest_graph = stats.largest_graph.max(graph.vertices.len());
                let chi = exact_chromatic_number(&graph.graph, ACCEPTANCE_VERTEX_CAP).unwrap();
                stats.graph_time += t.elapsed();
                let t = Instant::now();
                let opt = minimal_weak_net(space, mu, &eps).unwrap().size;
                stats.oracle_time += t.elapsed();
                if !(chi <= opt && opt <= net.size()) {
                    stats
                        .sandwich
                        .push(format!("{tag}: chi {chi} opt {opt} net {}", net.size()));
                }
                if report.helly == 2 {
                    stats.tight_checked += 1;
                    if chi != opt {
                        stats.not_tight.push(format!("{tag}: chi {chi} opt {opt}"));
                    }
                }
            }
        }
    }
    stats
}

fn kneser_exactness() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for n in 1..=8 {
        for k in 1..=n {
            let kg = kneser_graph(n, k, ACCEPTANCE_VERTEX_CAP).unwrap();
            let chi = exact_chromatic_number(&kg.graph, ACCEPTANCE_VERTEX_CAP).unwrap();
            let expected = if 2 * k <= n { n - 2 * k + 2 } else { 1 };
            checked += 1;
            if chi != expected || chi != lovasz_formula(n, k) {
                bad.push(format!("KG({n},{k}) = {chi}, expected {expected}"));
            }
        }
    }
    let a4 = alon_bound_check(4, ACCEPTANCE_VERTEX_CAP).unwrap();
    let a8 = alon_bound_check(8, ACCEPTANCE_VERTEX_CAP).unwrap();
    let alon_ok = a4.chromatic == 4 && a4.holds && a8.chromatic == 6 && a8.holds;
    outcome(
        bad.is_empty() && alon_ok,
        format!(
            "{checked} graphs, mismatches {bad:?}; chi(KG(4,1)) = {} > 0.4, chi(KG(8,2)) = {} > 0.8",
            a4.chromatic, a8.chromatic
        ),
    )
}

fn cylinder_log_bound() -> Outcome {
    let c4 = spaces::cylinder_space(4).unwrap();
    let mu = Distribution::<Rational>::uniform(16);
    let opt = minimal_weak_net(&c4, &mu, &q(1, 4)).unwrap();
    let labels = c4.ground().labels_of(opt.witness);
    outcome(
        opt.size >= 2,
        format!(
            "minimum weak 1/4-net size {} (>= log2 4 = 2), witness {labels:?}",
            opt.size
        ),
    )
}

fn radon_witness_bound(corpus: &[Named], reports: &[ParamsReport]) -> Outcome {
    let eps = q(1, 4);
    let mut bad = Vec::new();
    let mut checked = 0;
    for (named, report) in corpus.iter().zip(reports) {
        if report.radon < 3 {
            continue;
        }
        checked += 1;
        let r = report.radon - 1;
        let cert = radon_lower_bound(&named.space, &eps).unwrap();
        let opt = minimal_weak_net(&named.space, &cert.mu, &eps).unwrap().size;
        let half = r.div_ceil(2);
        let k = r.div_ceil(4);
        let kneser = (r >= 2 * k).then(|| r - 2 * k + 2);
        if opt < half || kneser.is_some_and(|b| opt < b) || opt < cert.bound {
            bad.push(format!(
                "{}: r={r} opt={opt} cert={}",
                named.name, cert.bound
            ));
        }
    }
    outcome(
        bad.is_empty(),
        format!("{checked} spaces with radon >= 3, failures {bad:?}"),
    )
}

fn random_intersecting_family(rng: &mut ChaCha8Rng, n: usize) -> Vec<PointSet> {
    let mut candidates: Vec<PointSet> = PointSet::full(n)
        .subsets()
        .filter(|s| !s.is_empty())
        .collect();
    for i in (1..candidates.len()).rev() {
        candidates.swap(i, rng.gen_range(0..=i));
    }
    let mut fam: Vec<PointSet> = Vec::new();
    for c in candidates {
        if rng.gen_bool(0.6) && fam.iter().all(|f| !f.is_disjoint(c)) {
            fam.push(c);
        }
    }
    fam
}

fn kleitman() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut violations = Vec::new();
    for trial in 0..100 {
        let n = rng.gen_range(1..=4);
        let s = rng.gen_range(1..=4);
        let fams: Vec<Vec<PointSet>> = (0..s)
            .map(|_| random_intersecting_family(&mut rng, n))
            .collect();
        match kleitman_check(n, &fams) {
            Ok(r) if r.holds => {}
            other => violations.push(format!("trial {trial}: {other:?}")),
        }
    }
    let f1 = vec![PointSet::from_indices([0]), PointSet::from_indices([0, 1])];
    let f2 = vec![PointSet::from_indices([1]), PointSet::from_indices([0, 1])];
    let t1 = kleitman_check(2, std::slice::from_ref(&f1)).unwrap();
    let t2 = kleitman_check(2, &[f1, f2]).unwrap();
    let tight = t1.tight && t1.union_size == 2 && t2.tight && t2.union_size == 3;
    outcome(
        violations.is_empty() && tight,
        format!(
            "100 random tuples, violations {violations:?}; tight cases |U| = {} and {}",
            t1.union_size, t2.union_size
        ),
    )
}

fn kneser_embedding_power4() -> Outcome {
    let pow = spaces::power_set_space(4).unwrap();
    let eps = q(1, 4);
    let cert = radon_lower_bound(&pow, &eps).unwrap();
    let y = cert.support.expect("radon certificate records its support");
    let graph = disjointness_graph(&pow, &cert.mu, &eps);
    let k = (eps * Rational::from_count(y.len())).ceil_count();
    match kneser_embedding(&pow, y, k, &graph) {
        Ok(emb) => {
            let map: Vec<String> = emb
                .mapping
                .iter()
                .map(|(z, v)| format!("{z} -> {}", graph.vertices[*v]))
                .collect();
            outcome(
                emb.kneser.n == 4 && emb.kneser.k == 1 && emb.mapping.len() == 4,
                format!("KG(4,1) -> G(mu, 1/4): {}", map.join(", ")),
            )
        }
        Err(e) => outcome(false, e.to_string()),
    }
}

fn main() {
    let corpus = corpus();
    let mut results: BTreeMap<usize, (&str, Outcome)> = BTreeMap::new();

    let start = Instant::now();
    let reports: Vec<ParamsReport> = corpus.iter().map(|n| analyze(&n.space).unwrap()).collect();
    results.insert(
        1,
        (
            "helly, vc < radon on corpus",
            invariants_below_radon(&corpus, &reports, start.elapsed()),
        ),
    );

    results.insert(2, ("Reproduced invariant values", known_values()));

    let stats = net_suite(&corpus, &reports);
    let c3 = outcome(
        stats.not_pierced.is_empty() && stats.base_case_wrong.is_empty(),
        format!(
            "{} instances, unpierced {:?}, base-case size != 1 {:?}, bound warnings {}",
            stats.instances, stats.not_pierced, stats.base_case_wrong, stats.warnings
        ),
    );
    results.insert(
        3,
        (
            "Built nets pierce every heavy set",
            timed(Duration::from_secs(300), stats.net_time, c3),
        ),
    );
    results.insert(
        4,
        (
            "chi <= optimum <= built, equality when h = 2",
            outcome(
                stats.sandwich.is_empty() && stats.not_tight.is_empty() && stats.tight_checked > 0,
                format!(
                    "{} instances, sandwich failures {:?}, {} h=2 instances, not tight {:?}, largest graph {} vertices, colouring {:.2}s, optimum {:.2}s",
                    stats.instances,
                    stats.sandwich,
                    stats.tight_checked,
                    stats.not_tight,
                    stats.largest_graph,
                    stats.graph_time.as_secs_f64(),
                    stats.oracle_time.as_secs_f64()
                ),
            ),
        ),
    );

    let start = Instant::now();
    let c5 = kneser_exactness();
    results.insert(
        5,
        (
            "Kneser chromatic numbers",
            timed(Duration::from_secs(60), start.elapsed(), c5),
        ),
    );

    results.insert(
        6,
        ("Cylinders n=4 need >= log n points", cylinder_log_bound()),
    );
    results.insert(
        7,
        (
            "Radon-witness distribution lower bound",
            radon_witness_bound(&corpus, &reports),
        ),
    );
    results.insert(8, ("Kleitman union bound", kleitman()));
    results.insert(
        9,
        (
            "KG(4,1) embeds in G(mu, 1/4) of power set 4",
            kneser_embedding_power4(),
        ),
    );

    let mut failed = 0;
    for (id, (title, o)) in &results {
        let mark = if o.pass { "PASS" } else { "FAIL" };
        println!("[{mark}] criterion {id}: {title} -- {}", o.detail);
        failed += usize::from(!o.pass);
    }
    println!("{} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
