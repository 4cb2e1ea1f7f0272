use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use rigidkit::formats::{parse_certificate, parse_facegraphs, write_facegraph};
use rigidkit_core::facegraph::fixtures::*;
use rigidkit_core::facegraph::FaceGraph;
use tempfile::TempDir;

fn rigidkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rigidkit")).args(args).env_remove("RIGIDKIT_MAX_VERTICES").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn save(dir: &TempDir, name: &str, g: &FaceGraph) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, write_facegraph(g)).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn hexagon_three_quads_passes_every_route() {
    let dir = TempDir::new().unwrap();
    let f = save(&dir, "hex.fg", &hexagon_three_quads());
    let cert = dir.path().join("hex.orient");
    let o = rigidkit(&["check", s(&f), "--route=all", "--cert", s(&cert)]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    for route in ["pebble-2sigma", "pebble-3sigma", "brute-36", "numeric"] {
        assert!(out.contains(&format!("route {route} tight true")), "{out}");
    }
    assert!(out.ends_with("verdict minimally-rigid\n"));

    let v = rigidkit(&["verify", "--input", s(&f), "--orientation", s(&cert)]);
    assert_eq!(v.status.code(), Some(0));
    assert_eq!(stdout(&v), "orientation 2sigma valid true\norientation 3sigma valid true\n");
}

#[test]
fn heptagon_four_quads_is_minimally_rigid() {
    let dir = TempDir::new().unwrap();
    let f = save(&dir, "hept.fg", &heptagon_four_quads());
    assert_eq!(rigidkit(&["check", s(&f)]).status.code(), Some(0));
}

#[test]
fn corrupted_input_is_an_input_error() {
    let dir = TempDir::new().unwrap();
    let f = dir.path().join("bad.fg");
    std::fs::write(&f, "facegraph 4\nface T 0 1 2\nface Q 0 2 3\n").unwrap();
    assert_eq!(rigidkit(&["check", s(&f)]).status.code(), Some(2));
    std::fs::write(&f, "facegraph 4\nface T 0 1 2\n").unwrap();
    assert_eq!(rigidkit(&["check", s(&f)]).status.code(), Some(2));
    assert_eq!(rigidkit(&["check", s(&dir.path().join("missing.fg"))]).status.code(), Some(2));
}

#[test]
fn pebble_routes_need_one_block() {
    let dir = TempDir::new().unwrap();
    let f = save(&dir, "tet.fg", &tetrahedron());
    assert_eq!(rigidkit(&["check", s(&f), "--route", "pebble2"]).status.code(), Some(2));
    let o = rigidkit(&["check", s(&f), "--route", "all"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("pebble"));
}

#[test]
fn chord_makes_the_check_fail() {
    let dir = TempDir::new().unwrap();
    let f = save(&dir, "chord.fg", &quad_block_with_chord());
    let o = rigidkit(&["check", s(&f)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("verdict not-minimally-rigid"));
}

#[test]
fn reduce_tetrahedron() {
    let dir = TempDir::new().unwrap();
    let f = save(&dir, "tet.fg", &tetrahedron());
    let cert = dir.path().join("tet.red");
    let o = rigidkit(&["reduce", s(&f), "--cert", s(&cert), "--replay"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("moves 1\n"));
    assert!(stdout(&o).contains("replay isomorphic true"));
    assert_eq!(parse_certificate(&std::fs::read_to_string(&cert).unwrap()).unwrap().len(), 1);
}

#[test]
fn reduce_hexagon_three_quads_and_verify() {
    let dir = TempDir::new().unwrap();
    let f = save(&dir, "hex.fg", &hexagon_three_quads());
    let cert = dir.path().join("hex.red");
    let o = rigidkit(&["reduce", s(&f), "--cert", s(&cert), "--replay"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("moves 8\n"));
    let v = rigidkit(&["verify", "--input", s(&f), "--reduction", s(&cert)]);
    assert_eq!(v.status.code(), Some(0));

    // Dropping the last move leaves a certificate that no longer reaches K3.
    let text = std::fs::read_to_string(&cert).unwrap();
    let truncated: Vec<&str> = text.lines().collect();
    std::fs::write(&cert, truncated[..truncated.len() - 1].join("\n")).unwrap();
    assert_eq!(rigidkit(&["verify", "--input", s(&f), "--reduction", s(&cert)]).status.code(), Some(1));
}

#[test]
fn reduce_reports_the_chord_witness() {
    let dir = TempDir::new().unwrap();
    let f = save(&dir, "chord.fg", &quad_block_with_chord());
    let o = rigidkit(&["reduce", s(&f)]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "not tight witness 0 1 2 4 5 6 freedom 5\n");
}

#[test]
fn csc_listings() {
    let dir = TempDir::new().unwrap();
    let hex = save(&dir, "hex.fg", &hexagon_three_quads());
    assert_eq!(stdout(&rigidkit(&["csc", s(&hex), "--nonfacial"])), "count 0\n");

    let hept = save(&dir, "hept.fg", &heptagon_four_quads());
    let out = stdout(&rigidkit(&["csc", s(&hept), "--nonfacial"]));
    assert!(out.contains("cycle 4 5 6 7 9 nonfacial"), "{out}");

    let holed = save(&dir, "holed.fg", &hexagon_hexagonal_hole());
    let pebble = stdout(&rigidkit(&["csc", s(&holed)]));
    let brute = stdout(&rigidkit(&["csc", s(&holed), "--oracle", "brute"]));
    assert_eq!(pebble, brute);
    assert!(pebble.contains("cycle 0 1 2 3 6 5 nonfacial"));
}

fn write_file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

const OPEN_BOX: &str = "surface 8
v 0 0 0
v 1 0 0
v 1 1 0
v 0 1 0
v 0 0 1
v 1 0 1
v 1 1 1
v 0 1 1
face 0 3 2 1
face 0 1 5 4
face 1 2 6 5
face 2 3 7 6
face 3 0 4 7
hole 4 5 6 7
";

#[test]
fn origami_open_box() {
    let dir = TempDir::new().unwrap();
    let f = write_file(&dir, "box.srf", OPEN_BOX);
    for block in ["apex", "prism", "discus"] {
        let o = rigidkit(&["origami", s(&f), "--block", block]);
        let out = stdout(&o);
        assert_eq!(o.status.code(), Some(1), "{out}");
        assert!(out.starts_with("facegraph 8\n"));
        assert!(out.contains("framework rigid\n"), "{out}");
        assert!(out.contains("caveat panels 0 1 2 3 4"));
    }
}

#[test]
fn origami_tetrahedron_is_minimally_rigid() {
    let dir = TempDir::new().unwrap();
    let f = write_file(
        &dir,
        "tet.srf",
        "surface 4\nv 0 0 0\nv 1 0 0\nv 0 1 0\nv 0 0 1\nface 0 2 1\nface 0 1 3\nface 1 2 3\nface 0 3 2\n",
    );
    let o = rigidkit(&["origami", s(&f)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("verdict minimally-rigid\n"));
    assert!(!stdout(&o).contains("caveat"));
}

#[test]
fn origami_rejects_a_repeated_vertex() {
    let dir = TempDir::new().unwrap();
    let f = write_file(
        &dir,
        "bad.srf",
        "surface 4\nv 0 0 0\nv 1 0 0\nv 0 1 0\nv 0 0 1\nface 0 1 0 2\nface 0 1 3\nface 1 2 3\nface 0 3 2\n",
    );
    assert_eq!(rigidkit(&["origami", s(&f)]).status.code(), Some(2));
}

#[test]
fn gen_four_vertices_is_the_tetrahedron() {
    let o = rigidkit(&["gen", "--vertices", "4", "--count", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let graphs = parse_facegraphs(&stdout(&o)).unwrap();
    assert_eq!(graphs.len(), 1);
    assert_eq!(graphs[0].faces().len(), 4);
}

#[test]
fn gen_is_deterministic_and_validated() {
    let dir = TempDir::new().unwrap();
    let (a, b) = (dir.path().join("a.txt"), dir.path().join("b.txt"));
    for out in [&a, &b] {
        let o =
            rigidkit(&["gen", "--vertices", "12", "--holes", "3", "--count", "100", "--seed", "5", "--out", s(out)]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("graph ")).count(), 100);
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    assert_eq!(text.lines().filter(|l| l.starts_with("# class ")).count(), 100);
    assert_eq!(parse_facegraphs(&text).unwrap().len(), 100);

    let other = dir.path().join("c.txt");
    rigidkit(&["gen", "--vertices", "12", "--holes", "3", "--count", "100", "--seed", "6", "--out", s(&other)]);
    assert_ne!(text, std::fs::read_to_string(&other).unwrap());
}

#[test]
fn gen_rejects_large_graphs() {
    assert_eq!(rigidkit(&["gen", "--vertices", "15"]).status.code(), Some(2));
}

#[test]
fn archive_output_does_not_depend_on_jobs() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.txt");
    rigidkit(&["gen", "--vertices", "9", "--holes", "2", "--count", "30", "--single-block", "--out", s(&a)]);
    let one = rigidkit(&["check", s(&a)]);
    let four = rigidkit(&["--jobs", "4", "check", s(&a)]);
    assert_eq!(stdout(&one), stdout(&four));
    assert_eq!(one.status.code(), four.status.code());
    assert_eq!(stdout(&one).matches("verdict ").count(), 30);
}

#[test]
fn oracle_and_numeric() {
    let dir = TempDir::new().unwrap();
    let hex = save(&dir, "hex.fg", &hexagon_three_quads());
    assert_eq!(rigidkit(&["oracle", s(&hex), "--sparsity", "30"]).status.code(), Some(0));
    assert_eq!(rigidkit(&["oracle", s(&hex)]).status.code(), Some(0));
    let o = rigidkit(&["numeric", s(&hex)]);
    assert!(stdout(&o).starts_with("rank 27 target 27 verdict minimally-rigid"));

    let k5 = write_file(&dir, "k5.mg", "multigraph 5\nedge 0 1\nedge 0 2\nedge 0 3\nedge 0 4\nedge 1 2\nedge 1 3\nedge 1 4\nedge 2 3\nedge 2 4\nedge 3 4\n");
    let o = rigidkit(&["oracle", s(&k5)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness 0 1 2 3 4 freedom 5"));
    assert_eq!(rigidkit(&["numeric", s(&k5)]).status.code(), Some(1));

    let lp = rigidkit(&["numeric", s(&hex), "--experimental-lp-rigidity"]);
    assert!(stdout(&lp).contains("lp p 4 independent true"));
    assert_eq!(rigidkit(&["numeric", s(&hex), "--experimental-lp-rigidity", "--p", "2"]).status.code(), Some(2));
}

#[test]
fn max_vertices_bounds_the_enumeration() {
    let dir = TempDir::new().unwrap();
    let hex = save(&dir, "hex.fg", &hexagon_three_quads());
    let o = Command::new(env!("CARGO_BIN_EXE_rigidkit"))
        .args(["oracle", s(&hex)])
        .env("RIGIDKIT_MAX_VERTICES", "8")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_mirror() {
    let dir = TempDir::new().unwrap();
    let hex = save(&dir, "hex.fg", &hexagon_three_quads());
    let o = rigidkit(&["--json", "check", s(&hex)]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["verdict"], "minimally-rigid");
    assert_eq!(v["routes"].as_array().unwrap().len(), 4);
}
