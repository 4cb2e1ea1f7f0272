//! Acceptance run: one `criterion N: PASS|FAIL` line per criterion.
//!
//! The process exits 0 regardless so that the workspace test run stays green
//! while failures stay visible. Set `RIGIDKIT_ACCEPTANCE_STRICT=1` to exit 1
//! when any criterion fails, and `RIGIDKIT_ACCEPTANCE_STREAMS=<k>` to change
//! how many extra corpus streams the structural checks draw on (default 60).

use std::collections::{BTreeMap, HashSet};
use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rigidkit::formats::write_facegraph;
use rigidkit::lp::lp_independence_report;
use rigidkit::properties::{check_lemmas, Lemma};
use rigidkit_core::canon::{canonical_form, canonical_hash_bounded, face_graph_digest, GraphDigest};
use rigidkit_core::construct::{discus_and_hole, looped_2sigma, looped_3sigma_minus};
use rigidkit_core::facegraph::fixtures::{heptagon_four_quads, hexagon_three_quads, octagon_five_quads};
use rigidkit_core::facegraph::{
    enumerate_critical_separating_cycles, is_indivisible, reduce_to_k3, replay, EdgeClass, FaceGraph,
};
use rigidkit_core::numeric::{euclidean_rigidity_rank, is_minimally_3_rigid_numeric};
use rigidkit_core::oracle::{check_30, check_36, generate_corpus, CarveStrategy, CorpusConfig};
use rigidkit_core::pebble::{pebble_game, verify_orientation, Orientation, OutdegreeBound};
use rigidkit_core::{Multigraph, SimpleGraph};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn single_block_corpus() -> Vec<FaceGraph> {
    let mut config = CorpusConfig::new(12, 3, 600, 0);
    config.single_block = true;
    generate_corpus(&config).expect("corpus").into_iter().map(|e| e.graph).collect()
}

fn criterion_1(corpus: &[FaceGraph]) -> Outcome {
    let mut disagreements = 0;
    let mut tight = 0;
    for g in corpus {
        let dagger = discus_and_hole(g);
        let verdicts = [
            pebble_game(&looped_2sigma(g).unwrap(), 3, 0).unwrap().is_tight(),
            pebble_game(&looped_3sigma_minus(g).unwrap(), 3, 0).unwrap().is_tight(),
            check_36(&dagger).unwrap().tight,
            is_minimally_3_rigid_numeric(&dagger).unwrap(),
        ];
        if verdicts.iter().any(|&v| v != verdicts[0]) {
            disagreements += 1;
        }
        tight += usize::from(verdicts[0]);
    }
    let pass = corpus.len() >= 500 && disagreements == 0 && tight > 0 && tight < corpus.len();
    outcome(pass, format!("{} graphs, {tight} tight, {disagreements} disagreements", corpus.len()))
}

fn criterion_2(corpus: &[FaceGraph]) -> Outcome {
    let (mut mismatches, mut bad_length, mut bad_replay, mut reduced) = (0, 0, 0, 0);
    for g in corpus {
        let dagger = discus_and_hole(g);
        let tight = check_36(&dagger).unwrap().tight;
        match reduce_to_k3(g) {
            Ok(cert) => {
                reduced += 1;
                mismatches += usize::from(!tight);
                bad_length += usize::from(cert.len() + 3 != dagger.vertex_count());
                let same = replay(&cert).is_ok_and(|r| {
                    r.edge_set() == dagger.edge_set()
                        || canonical_hash_bounded(&r, 64).unwrap() == canonical_hash_bounded(&dagger, 64).unwrap()
                });
                bad_replay += usize::from(!same);
            }
            Err(_) => mismatches += usize::from(tight),
        }
    }
    outcome(
        mismatches + bad_length + bad_replay == 0 && reduced > 0,
        format!("{reduced} reduced, {mismatches} mismatches, {bad_length} wrong lengths, {bad_replay} failed replays"),
    )
}

/// An outdegree-exactly-3 orientation found by bipartite matching of edges
/// to vertex slots, independent of the pebble game.
fn matching_orientation(g: &Multigraph) -> Option<Orientation> {
    let n = g.vertex_count();
    if g.edge_count() != 3 * n {
        return None;
    }
    let mut owner: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut tail = vec![usize::MAX; g.edge_count()];
    fn augment(g: &Multigraph, e: usize, owner: &mut [Vec<usize>], tail: &mut [usize], visited: &mut [bool]) -> bool {
        let (u, v) = g.edge(e);
        for x in [u, v] {
            if visited[x] {
                continue;
            }
            visited[x] = true;
            if owner[x].len() < 3 {
                owner[x].push(e);
                tail[e] = x;
                return true;
            }
            for i in 0..owner[x].len() {
                let f = owner[x][i];
                if augment(g, f, owner, tail, visited) {
                    owner[x][i] = e;
                    tail[e] = x;
                    return true;
                }
            }
        }
        false
    }
    for e in 0..g.edge_count() {
        let mut visited = vec![false; n];
        if !augment(g, e, &mut owner, &mut tail, &mut visited) {
            return None;
        }
    }
    Some(Orientation::new(tail))
}

fn criterion_3(corpus: &[FaceGraph]) -> Outcome {
    let (mut tight, mut oriented, mut failures) = (0, 0, 0);
    for g in corpus {
        for m in [looped_2sigma(g).unwrap(), looped_3sigma_minus(g).unwrap()] {
            let verdict = pebble_game(&m, 3, 0).unwrap();
            if verdict.is_tight() {
                tight += 1;
                let o = verdict.orientation().unwrap();
                failures += usize::from(!verify_orientation(&m, o, 3, OutdegreeBound::Exactly).unwrap());
            }
            if let Some(o) = matching_orientation(&m) {
                if verify_orientation(&m, &o, 3, OutdegreeBound::Exactly).unwrap() {
                    oriented += 1;
                    failures += usize::from(!verdict.is_tight());
                }
            }
        }
    }
    outcome(
        failures == 0 && tight > 0 && oriented > 0,
        format!("{tight} tight pebble verdicts, {oriented} matching orientations, {failures} exceptions"),
    )
}

fn to_multigraph(n: usize, edges: &[(usize, usize)]) -> Multigraph {
    let mut m = Multigraph::new(n);
    for &(a, b) in edges {
        if a == b {
            m.add_loop(a).unwrap();
        } else {
            m.add_edge(a, b).unwrap();
        }
    }
    m
}

/// Enumerates multigraphs on `n` vertices with at most `max_edges` edges up to
/// isomorphism, one edge at a time. Sparse classes are extended; a class that
/// breaks the count is compared and not extended. Returns (classes,
/// disagreements).
fn enumerate_and_compare(n: usize, max_edges: usize, simple: bool) -> (usize, usize) {
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|u| (u..n).map(move |v| (u, v))).collect();
    let colours = vec![0; n];
    let mut level: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    let (mut classes, mut disagreements) = (1, 0);
    for _ in 0..max_edges {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for &s in &slots {
                if simple && s.0 != s.1 && g.contains(&s) {
                    continue;
                }
                let mut h = g.clone();
                h.push(s);
                if !seen.insert(canonical_form(n, &h, &colours).certificate) {
                    continue;
                }
                let m = to_multigraph(n, &h);
                let brute = check_30(&m).unwrap();
                let pebble = pebble_game(&m, 3, 0).unwrap();
                if brute.sparse != pebble.is_sparse() || brute.tight != pebble.is_tight() {
                    disagreements += 1;
                }
                if brute.sparse {
                    next.push(h);
                }
            }
        }
        classes += seen.len();
        level = next;
        if level.is_empty() {
            break;
        }
    }
    (classes, disagreements)
}

fn criterion_4() -> Outcome {
    let mut classes = 0;
    let mut disagreements = 0;
    for n in 1..=5 {
        let (c, d) = enumerate_and_compare(n, 3 * n, false);
        classes += c;
        disagreements += d;
    }
    let (looped, d) = enumerate_and_compare(6, 18, true);
    disagreements += d;
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=10);
        let edges: Vec<(usize, usize)> =
            (0..rng.gen_range(0..=3 * n + 3)).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
        let edges: Vec<(usize, usize)> = edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        let m = to_multigraph(n, &edges);
        let (brute, pebble) = (check_30(&m).unwrap(), pebble_game(&m, 3, 0).unwrap());
        disagreements += usize::from(brute.sparse != pebble.is_sparse() || brute.tight != pebble.is_tight());
    }
    // Six-vertex multigraphs with parallel edges run to tens of millions of
    // classes and are not enumerated.
    outcome(
        false,
        format!(
            "{disagreements} disagreements over {classes} multigraph classes on <=5 vertices, {looped} looped simple \
             classes on 6 vertices and 1000 random graphs; parallel-edge classes on 6 vertices not enumerated"
        ),
    )
}

fn criterion_5() -> Outcome {
    let mut failures = Vec::new();
    let hex = hexagon_three_quads();
    let m2 = looped_2sigma(&hex).unwrap();
    if m2.freedom() != 0 {
        failures.push("freedom of the 2-looped graph");
    }
    if !pebble_game(&m2, 3, 0).unwrap().is_tight()
        || !pebble_game(&looped_3sigma_minus(&hex).unwrap(), 3, 0).unwrap().is_tight()
    {
        failures.push("looped graphs not tight");
    }
    let dir = std::env::temp_dir().join(format!("rigidkit-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("hexagon.fg");
    std::fs::write(&file, write_facegraph(&hex)).unwrap();
    let status =
        Command::new(env!("CARGO_BIN_EXE_rigidkit")).args(["check", "--route=all"]).arg(&file).output().unwrap().status;
    if status.code() != Some(0) {
        failures.push("check --route=all exit status");
    }
    let _ = std::fs::remove_dir_all(&dir);

    let holes_quads = hex.hole_faces().iter().all(|&f| hex.face(f).len() == 4);
    if !(is_indivisible(&hex).unwrap()
        && hex.edges_of_class(EdgeClass::BH).len() == 3
        && hex.edges_of_class(EdgeClass::TT).is_empty()
        && holes_quads)
    {
        failures.push("hexagon structure");
    }
    let has_cycle = |g: &FaceGraph, cycle: &[usize]| {
        let mut want = cycle.to_vec();
        want.sort_unstable();
        enumerate_critical_separating_cycles(g, true).unwrap().iter().any(|c| {
            let mut vs = c.vertices().to_vec();
            vs.sort_unstable();
            vs == want
        })
    };
    if !has_cycle(&heptagon_four_quads(), &[4, 5, 6, 7, 9]) {
        failures.push("heptagon 5-cycle");
    }
    let oct = octagon_five_quads();
    if !has_cycle(&oct, &[5, 6, 7, 8, 12]) || !has_cycle(&oct, &[2, 3, 4, 12, 9]) {
        failures.push("octagon 5-cycles");
    }
    let detail = if failures.is_empty() { "all fixture checks hold".to_string() } else { failures.join(", ") };
    outcome(failures.is_empty(), detail)
}

fn criterion_6() -> Outcome {
    let spheres = generate_corpus(&CorpusConfig::new(10, 0, 200, 0)).unwrap();
    let mut failures = 0;
    for e in &spheres {
        let g = e.graph.graph();
        let report = euclidean_rigidity_rank(g, 3).unwrap();
        failures += usize::from(
            !(report.rank == g.edge_count() && g.edge_count() == 3 * g.vertex_count() - 6 && e.class.m == 0),
        );
    }
    outcome(failures == 0 && !spheres.is_empty(), format!("{} spheres, {failures} exceptions", spheres.len()))
}

fn double_banana() -> SimpleGraph {
    let mut edges = Vec::new();
    for side in [[2, 3, 4], [5, 6, 7]] {
        let vs = [0, 1, side[0], side[1], side[2]];
        for i in 0..5 {
            for j in i + 1..5 {
                if (vs[i], vs[j]) != (0, 1) {
                    edges.push((vs[i], vs[j]));
                }
            }
        }
    }
    SimpleGraph::from_edges(8, edges).unwrap()
}

fn criterion_7() -> Outcome {
    let g = double_banana();
    let tight = check_36(&g).unwrap().tight;
    let rank = euclidean_rigidity_rank(&g, 3).unwrap().rank;
    let dir = std::env::temp_dir().join(format!("rigidkit-banana-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("banana.mg");
    std::fs::write(&file, rigidkit::formats::write_multigraph(g.as_multigraph())).unwrap();
    let code =
        |cmd: &str| Command::new(env!("CARGO_BIN_EXE_rigidkit")).arg(cmd).arg(&file).output().unwrap().status.code();
    let (oracle, numeric) = (code("oracle"), code("numeric"));
    let _ = std::fs::remove_dir_all(&dir);
    outcome(
        tight && rank == 17 && oracle == Some(0) && numeric == Some(1),
        format!("tight {tight}, rank {rank} of 18, oracle exit {oracle:?}, numeric exit {numeric:?}"),
    )
}

fn criterion_8(corpus: &[FaceGraph]) -> Outcome {
    const TARGET: usize = 50;
    let mut hits: BTreeMap<Lemma, (usize, usize)> = Lemma::ALL.iter().map(|&l| (l, (0, 0))).collect();
    let mut seen: HashSet<GraphDigest> = HashSet::new();
    let mut instances = 0;
    let mut record = |g: &FaceGraph, hits: &mut BTreeMap<Lemma, (usize, usize)>| {
        if !seen.insert(face_graph_digest(g)) || !check_36(&discus_and_hole(g)).unwrap().tight {
            return;
        }
        instances += 1;
        for o in check_lemmas(g).unwrap() {
            if o.applicable {
                let entry = hits.get_mut(&o.lemma).unwrap();
                entry.0 += 1;
                entry.1 += usize::from(!o.holds);
            }
        }
    };
    for g in corpus {
        record(g, &mut hits);
    }
    // Further seeded streams aimed at graphs without TT edges. Stops at the
    // target or after RIGIDKIT_ACCEPTANCE_STREAMS streams.
    let streams: u64 = std::env::var("RIGIDKIT_ACCEPTANCE_STREAMS").ok().and_then(|s| s.parse().ok()).unwrap_or(60);
    let start = Instant::now();
    let strategies = [CarveStrategy::MaximalQuads, CarveStrategy::BalancedQuads, CarveStrategy::Balanced];
    for seed in 1..=streams {
        if hits.values().all(|&(n, _)| n >= TARGET) {
            break;
        }
        let mut config = CorpusConfig::new(14, 6, 400, seed);
        config.min_vertices = 9;
        config.single_block = true;
        config.strategy = strategies[seed as usize % strategies.len()];
        for e in generate_corpus(&config).unwrap() {
            record(&e.graph, &mut hits);
        }
    }
    let violations: usize = hits.values().map(|&(_, v)| v).sum();
    let short: Vec<&str> = hits.iter().filter(|(_, &(n, _))| n < TARGET).map(|(l, _)| l.as_str()).collect();
    let counts = hits.iter().map(|(l, (n, v))| format!("{} {n}/{v}", l.as_str())).collect::<Vec<_>>().join(", ");
    let mut detail = format!(
        "{streams} extra streams, {instances} distinct tight graphs; hits/violations: {counts}; {:.0?}",
        start.elapsed()
    );
    if !short.is_empty() {
        detail.push_str(&format!("; below {TARGET} hits: {}", short.join(", ")));
    }
    outcome(violations == 0 && short.is_empty(), detail)
}

fn criterion_9(corpus: &[FaceGraph]) -> Outcome {
    let tight: Vec<SimpleGraph> = corpus.iter().map(discus_and_hole).filter(|g| check_36(g).unwrap().tight).collect();
    let (mut strict, mut relaxed, mut failed) = (0, 0, 0);
    let mut log = Vec::new();
    for (i, g) in tight.iter().enumerate() {
        if lp_independence_report(g, 4.0, 5, 1e-8, 0).unwrap().independent {
            strict += 1;
        } else if lp_independence_report(g, 4.0, 5, 1e-6, 0).unwrap().independent {
            relaxed += 1;
            log.push(format!("#{i} passes at 1e-6"));
        } else {
            failed += 1;
            log.push(format!("#{i} fails"));
        }
    }
    let mut detail =
        format!("{} tight instances: {strict} at 1e-8, {relaxed} at 1e-6, {failed} dependent", tight.len());
    if !log.is_empty() {
        detail.push_str(&format!(" ({})", log.join(", ")));
    }
    outcome(tight.len() >= 50 && failed == 0, detail)
}

fn main() {
    let corpus = single_block_corpus();
    let criteria: Vec<(usize, Box<dyn Fn() -> Outcome + '_>)> = vec![
        (1, Box::new(|| criterion_1(&corpus))),
        (2, Box::new(|| criterion_2(&corpus))),
        (3, Box::new(|| criterion_3(&corpus))),
        (4, Box::new(criterion_4)),
        (5, Box::new(criterion_5)),
        (6, Box::new(criterion_6)),
        (7, Box::new(criterion_7)),
        (8, Box::new(|| criterion_8(&corpus))),
        (9, Box::new(|| criterion_9(&corpus))),
    ];
    let mut failed = 0;
    for (n, run) in criteria {
        let start = Instant::now();
        let o = run();
        failed += usize::from(!o.pass);
        println!("criterion {n}: {} {} [{:.1?}]", if o.pass { "PASS" } else { "FAIL" }, o.detail, start.elapsed());
    }
    println!("acceptance: {} of 9 criteria pass", 9 - failed);
    if failed > 0 && std::env::var_os("RIGIDKIT_ACCEPTANCE_STRICT").is_some() {
        std::process::exit(1);
    }
}
