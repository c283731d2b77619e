use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use radon_nets::format::{parse_distribution, parse_space, write_space, NamedSpace};
use radon_nets::lowerbound::{
    alon_bound_check, chromatic_lower_bound, kleitman_check, kneser_graph, lovasz_formula,
    radon_lower_bound,
};
use radon_nets::netbuild::{build_weak_net, verify_weak_net, Verdict};
use radon_nets::oracle::{exact_chromatic_number, minimal_weak_net, DEFAULT_VERTEX_CAP};
use radon_nets::params::analyze;
use radon_nets::spaces::GeneratorSpec;
use radon_nets::{
    parse_rational, ConvexitySpace, Distribution, Error, ExactCertificate, PointSet, Rational,
};

use crate::report::{human, sha256_hex, Report};
use crate::{Cli, Command, GenKind, MethodArg};

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_internal() { 3 } else { 2 },
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn internal(message: impl Into<String>) -> Failure {
    Failure {
        code: 3,
        message: message.into(),
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// Vertex cap for exact colouring, overridable through `RADON_NETS_CAP`.
fn vertex_cap() -> CliResult<usize> {
    match std::env::var("RADON_NETS_CAP") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(cap) if cap > 0 => Ok(cap),
            _ => Err(usage(format!(
                "RADON_NETS_CAP must be a positive integer, got {v:?}"
            ))),
        },
        Err(_) => Ok(DEFAULT_VERTEX_CAP),
    }
}

fn read(path: &Path) -> CliResult<Vec<u8>> {
    fs::read(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn text(path: &Path, bytes: &[u8]) -> CliResult<String> {
    String::from_utf8(bytes.to_vec()).map_err(|_| usage(format!("{}: not UTF-8", path.display())))
}

fn load_space(report: &mut Report, path: &Path) -> CliResult<NamedSpace> {
    let bytes = read(path)?;
    let named =
        parse_space(&text(path, &bytes)?).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    report.input("space", &path.display().to_string(), &bytes);
    Ok(named)
}

fn load_distribution(
    report: &mut Report,
    path: Option<&Path>,
    n: usize,
) -> CliResult<Distribution<Rational>> {
    let Some(path) = path else {
        return Ok(Distribution::uniform(n));
    };
    let bytes = read(path)?;
    let mu = parse_distribution(&text(path, &bytes)?, n)
        .map_err(|e| usage(format!("{}: {e}", path.display())))?;
    report.input("distribution", &path.display().to_string(), &bytes);
    Ok(mu)
}

fn parse_eps(s: &str) -> CliResult<Rational> {
    let eps = parse_rational(s)?;
    if eps <= Rational::from_integer(0.into()) {
        return Err(Error::EpsilonOutOfRange(s.to_string()).into());
    }
    Ok(eps)
}

fn frac(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn labels(space: &ConvexitySpace, s: PointSet) -> Value {
    json!(space.ground().labels_of(s))
}

/// Writes to stdout, ignoring a closed pipe.
fn out(s: &str) {
    let _ = io::stdout().lock().write_all(s.as_bytes());
}

fn emit(human_output: bool, report: &Value) {
    if human_output {
        out(&human(report));
    } else {
        out(&format!(
            "{}\n",
            serde_json::to_string_pretty(report).expect("reports serialize")
        ));
    }
}

pub fn run(cli: Cli) -> CliResult<()> {
    let human_output = cli.human;
    match cli.command {
        Command::Gen { kind, output } => gen(kind, output, human_output),
        Command::Analyze { spaces, batch } => cmd_analyze(spaces, batch, human_output),
        Command::Net {
            space,
            dist,
            eps,
            verify,
            oracle,
        } => net(&space, dist.as_deref(), &eps, verify, oracle, human_output),
        Command::Lowerbound {
            space,
            dist,
            eps,
            method,
        } => lowerbound(&space, dist.as_deref(), &eps, method, human_output),
        Command::Kneser { n, k, exact, alon } => kneser(n, k, exact, alon, human_output),
        Command::Kleitman { n, families } => kleitman(n, &families, human_output),
    }
}

fn parse_edges(s: &str) -> CliResult<Vec<(String, String)>> {
    s.split(',')
        .filter(|e| !e.trim().is_empty())
        .map(|e| {
            let (a, b) = e
                .split_once('-')
                .ok_or_else(|| usage(format!("edge {e:?} is not of the form a-b")))?;
            Ok((a.trim().to_string(), b.trim().to_string()))
        })
        .collect()
}

fn parse_relations(s: &str) -> CliResult<Vec<(usize, usize)>> {
    let index = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| usage(format!("bad element {t:?} in relations")))
    };
    s.split(',')
        .filter(|r| !r.trim().is_empty())
        .map(|r| {
            let (a, b) = r
                .split_once('<')
                .ok_or_else(|| usage(format!("relation {r:?} is not of the form i<j")))?;
            Ok((index(a)?, index(b)?))
        })
        .collect()
}

fn gen(kind: GenKind, output: Option<PathBuf>, human_output: bool) -> CliResult<()> {
    let spec = match kind {
        GenKind::Power { m } => GeneratorSpec::Power { m },
        GenKind::Cylinders { n } => GeneratorSpec::Cylinders { n },
        GenKind::Subtree { edges } => GeneratorSpec::Subtree {
            edges: parse_edges(&edges)?,
        },
        GenKind::Lattice { width, height } => GeneratorSpec::Lattice { width, height },
        GenKind::Poset {
            elements,
            relations,
        } => GeneratorSpec::Poset {
            elements,
            relations: parse_relations(&relations)?,
        },
        GenKind::Random { points, seed } => GeneratorSpec::Random { points, seed },
    };
    let mut report = Report::new("gen");
    report.arg("name", spec.name());
    let space = spec.build()?;
    let file = write_space(&spec.name(), &space);
    let Some(path) = output else {
        out(&file);
        return Ok(());
    };
    fs::write(&path, &file).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let result = json!({
        "path": path.display().to_string(),
        "sha256": sha256_hex(file.as_bytes()),
        "points": space.len(),
        "convex_sets": space.convex().len(),
    });
    emit(human_output, &report.finish(result));
    Ok(())
}

fn analysis(named: &NamedSpace) -> CliResult<Value> {
    let space = &named.space;
    let r = analyze(space)?;
    let separability = r
        .separability_witness
        .map(|(c, x)| json!({ "convex": labels(space, c), "point": space.ground().label(x) }));
    let helly_witness: Vec<Value> = r.helly_witness.iter().map(|&b| labels(space, b)).collect();
    Ok(json!({
        "name": named.name,
        "points": space.len(),
        "convex_sets": space.convex().len(),
        "halfspaces": space.halfspaces(false).len(),
        "radon": r.radon,
        "helly": r.helly,
        "vc": r.vc,
        "separable": r.separable,
        "radon_witness": labels(space, r.radon_witness),
        "helly_witness": helly_witness,
        "helly_vacuous": r.helly_vacuous,
        "vc_witness": labels(space, r.vc_witness),
        "separability_witness": separability,
        "radon_bounds_hold": r.separable.then(|| r.radon_bounds_hold()),
    }))
}

fn batch_files(dir: &Path) -> CliResult<Vec<PathBuf>> {
    let entries = fs::read_dir(dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    Ok(files)
}

fn cmd_analyze(
    mut paths: Vec<PathBuf>,
    batch: Option<PathBuf>,
    human_output: bool,
) -> CliResult<()> {
    let mut report = Report::new("analyze");
    if let Some(dir) = &batch {
        report.arg("batch", dir.display().to_string());
        paths.extend(batch_files(dir)?);
    }
    if paths.is_empty() {
        return Err(usage("no space files given"));
    }
    if paths.len() == 1 && batch.is_none() {
        let named = load_space(&mut report, &paths[0])?;
        let result = analysis(&named)?;
        emit(human_output, &report.finish(result));
        return Ok(());
    }

    let outcomes: Vec<(PathBuf, Vec<u8>, CliResult<Value>)> = std::thread::scope(|scope| {
        let handles: Vec<_> = paths
            .iter()
            .map(|path| {
                scope.spawn(move || match read(path) {
                    Ok(bytes) => {
                        let result = text(path, &bytes)
                            .and_then(|t| parse_space(&t).map_err(Failure::from))
                            .and_then(|named| analysis(&named));
                        (path.clone(), bytes, result)
                    }
                    Err(f) => (path.clone(), Vec::new(), Err(f)),
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("analysis thread panicked"))
            .collect()
    });

    let mut worst = 0u8;
    let mut files = Vec::new();
    for (path, bytes, result) in outcomes {
        let shown = path.display().to_string();
        let entry = match result {
            Ok(v) => json!({ "path": shown, "sha256": sha256_hex(&bytes), "analysis": v }),
            Err(f) => {
                worst = worst.max(f.code);
                json!({ "path": shown, "sha256": sha256_hex(&bytes), "error": f.message })
            }
        };
        files.push(entry);
    }
    let failed = files.iter().filter(|f| f.get("error").is_some()).count();
    let total = files.len();
    emit(
        human_output,
        &report.finish(json!({ "files": files, "failed": failed })),
    );
    if worst > 0 {
        return Err(Failure {
            code: worst,
            message: format!("{failed} of {total} files failed"),
        });
    }
    Ok(())
}

fn net(
    space_path: &Path,
    dist: Option<&Path>,
    eps: &str,
    verify: bool,
    oracle: bool,
    human_output: bool,
) -> CliResult<()> {
    let mut report = Report::new("net");
    report
        .arg("eps", eps)
        .arg("verify", verify)
        .arg("oracle", oracle);
    let eps = parse_eps(eps)?;
    let named = load_space(&mut report, space_path)?;
    let space = &named.space;
    let mu = load_distribution(&mut report, dist, space.len())?;
    let net = build_weak_net(space, &space.halfspaces(false), &mu, &eps)?;
    let p = &net.params;
    let mut result = json!({
        "name": named.name,
        "eps": frac(&p.eps),
        "h": p.h,
        "v": p.v,
        "delta": frac(&p.delta),
        "eps_next": frac(&p.eps_next),
        "depth": p.depth,
        "points": labels(space, net.points),
        "size": net.size(),
        "size_bound": net.size_bound,
        "trace_nodes": net.trace.len(),
        "tree_size": net.tree_size,
        "warnings": net.warnings,
    });
    if verify {
        result["verified"] = match verify_weak_net(space, &mu, &eps, net.points) {
            Verdict::Pierced => json!({ "pierced": true, "missed": null }),
            Verdict::Missed(c) => json!({ "pierced": false, "missed": labels(space, c) }),
        };
    }
    if oracle {
        let opt = minimal_weak_net(space, &mu, &eps)?;
        result["oracle"] = json!({
            "size": opt.size,
            "witness": labels(space, opt.witness),
            "ratio": net.size() as f64 / opt.size.max(1) as f64,
        });
    }
    emit(human_output, &report.finish(result));
    Ok(())
}

fn certificate_json(space: &ConvexitySpace, cert: &ExactCertificate) -> Value {
    let mut v = json!({
        "method": cert.method.to_string(),
        "bound": cert.bound,
        "eps": frac(&cert.eps),
        "distribution": cert.mu.to_strs(),
    });
    if let Some(g) = &cert.graph {
        v["vertices"] = json!(g.vertices.len());
        v["edges"] = json!(g.graph.edge_count());
    }
    if let Some(y) = cert.support {
        v["support"] = labels(space, y);
    }
    if let (Some(k), Some(l)) = (cert.kneser_bound, cert.linear_bound) {
        v["kneser_bound"] = json!(k);
        v["linear_bound"] = json!(l);
    }
    v
}

fn lowerbound(
    space_path: &Path,
    dist: Option<&Path>,
    eps_text: &str,
    method: MethodArg,
    human_output: bool,
) -> CliResult<()> {
    let mut report = Report::new("lowerbound");
    let method_name = match method {
        MethodArg::Auto => "auto",
        MethodArg::Chromatic => "chromatic",
        MethodArg::Radon => "radon",
    };
    report.arg("eps", eps_text).arg("method", method_name);
    let eps = parse_eps(eps_text)?;
    let named = load_space(&mut report, space_path)?;
    let space = &named.space;
    let cap = vertex_cap()?;

    let mut certificates = Vec::new();
    let mut skipped = Vec::new();
    let one = Rational::from_integer(1.into());
    if method != MethodArg::Chromatic && (method == MethodArg::Radon || eps <= one) {
        certificates.push(radon_lower_bound(space, &eps)?);
    }
    if method != MethodArg::Radon {
        let mu = load_distribution(&mut report, dist, space.len())?;
        match chromatic_lower_bound(space, &mu, &eps, cap) {
            Ok(c) => certificates.push(c),
            Err(e @ Error::TooLargeForExact { .. }) if method == MethodArg::Auto => {
                skipped.push(e.to_string())
            }
            Err(e) => return Err(e.into()),
        }
    }
    let best = certificates
        .iter()
        .max_by_key(|c| c.bound)
        .expect("at least one certificate");
    let result = json!({
        "name": named.name,
        "bound": best.bound,
        "method": best.method.to_string(),
        "certificates": certificates.iter().map(|c| certificate_json(space, c)).collect::<Vec<_>>(),
        "skipped": skipped,
    });
    emit(human_output, &report.finish(result));
    Ok(())
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn kneser(
    n: usize,
    k: Option<usize>,
    exact: bool,
    alon: bool,
    human_output: bool,
) -> CliResult<()> {
    let mut report = Report::new("kneser");
    report.arg("n", n).arg("exact", exact).arg("alon", alon);
    let k = match (k, alon) {
        (Some(k), true) if 4 * k != n => {
            return Err(usage(format!("--alon uses k = n/4, got k = {k}")))
        }
        (Some(k), _) => k,
        (None, true) => n / 4,
        (None, false) => return Err(usage("--k is required without --alon")),
    };
    report.arg("k", k);
    if k == 0 || k > n || n > 64 {
        return Err(usage(format!(
            "Kneser graph needs 1 <= k <= n <= 64, got n={n} k={k}"
        )));
    }
    let cap = vertex_cap()?;
    let vertices = binomial(n, k);
    let formula = lovasz_formula(n, k);
    let mut result = json!({
        "n": n,
        "k": k,
        "vertices": vertices.to_string(),
        "edges": (vertices * binomial(n - k, k) / 2).to_string(),
        "formula": formula,
    });
    let mut disagreement = None;
    if exact {
        let kg = kneser_graph(n, k, cap)?;
        let chromatic = exact_chromatic_number(&kg.graph, cap)?;
        result["exact"] = json!(chromatic);
        result["agrees"] = json!(chromatic == formula);
        if chromatic != formula {
            disagreement = Some(format!(
                "exact chromatic number {chromatic} differs from formula {formula}"
            ));
        }
    }
    if alon {
        let a = alon_bound_check(n, cap)?;
        result["alon"] =
            json!({ "chromatic": a.chromatic, "threshold": n as f64 / 10.0, "holds": a.holds });
        if !a.holds {
            disagreement = Some(format!("chromatic number {} not above n/10", a.chromatic));
        }
    }
    emit(human_output, &report.finish(result));
    disagreement.map_or(Ok(()), |m| Err(internal(m)))
}

fn parse_family(s: &str) -> CliResult<Vec<PointSet>> {
    s.split(';')
        .map(|set| {
            set.split(',')
                .filter(|p| !p.trim().is_empty())
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| usage(format!("bad point {p:?} in family {s:?}")))
                })
                .collect::<CliResult<Vec<usize>>>()
                .and_then(|idx| {
                    if idx.iter().any(|&i| i >= 64) {
                        Err(usage(format!("point index out of range in family {s:?}")))
                    } else {
                        Ok(PointSet::from_indices(idx))
                    }
                })
        })
        .collect()
}

fn kleitman(n: usize, families: &[String], human_output: bool) -> CliResult<()> {
    let mut report = Report::new("kleitman");
    report.arg("n", n).arg("families", families.to_vec());
    let parsed = families
        .iter()
        .map(|f| parse_family(f))
        .collect::<CliResult<Vec<_>>>()?;
    let r = kleitman_check(n, &parsed)?;
    let bound = 2f64.powi(n as i32) - 2f64.powi(n as i32 - r.s as i32);
    let result = json!({
        "n": r.n,
        "s": r.s,
        "union_size": r.union_size,
        "bound": bound,
        "holds": r.holds,
        "tight": r.tight,
    });
    emit(human_output, &report.finish(result));
    if !r.holds {
        return Err(internal(format!(
            "union of {} sets exceeds the bound {bound}",
            r.union_size
        )));
    }
    Ok(())
}
