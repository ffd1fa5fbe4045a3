//! End-to-end tests driving the compiled binary: outputs, exit codes, the
//! machine-format round trip and plot determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("fixtures");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_secfan"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn write_temp(name: &str, content: &str) -> String {
    let mut p = std::env::temp_dir();
    p.push(format!("secfan-test-{}-{name}", std::process::id()));
    std::fs::write(&p, content).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn relevants_blowup() {
    let out = run(&["relevants", &fixture("blowup_plane.ring")]);
    assert!(out.status.success());
    let text = stdout(&out);
    for m in ["x*z", "x*w", "y*z", "y*w", "z*w"] {
        assert!(text.contains(m), "missing {m} in {text}");
    }
    assert!(text.contains("(5)"));
}

#[test]
fn relevants_torsion_grading() {
    let out = run(&["relevants", &fixture("torsion.ring")]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("(2)"));
    assert!(text.contains("\n  x "));
    assert!(text.contains("\n  z "));
    assert!(!text.contains("\n  y "));
}

#[test]
fn relevants_machine_format() {
    let out = run(&[
        "relevants",
        &fixture("blowup_plane.ring"),
        "--format",
        "machine",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("generator.count = 5"));
    assert!(text.contains("generator.0.support = [0, 2]"));
    assert!(text.contains("generator.0.monomial = x*z"));
    assert!(text.contains("generator.0.degree = [2, 1]"));
}

#[test]
fn chambers_enumeration() {
    let out = run(&["chambers", &fixture("blowup_plane.ring")]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("chambers: 2"));
    assert!(text.contains("rays (0, 1), (1, 1)"));
    assert!(text.contains("rays (1, 0), (1, 1)"));

    let out = run(&["chambers", &fixture("p2.ring")]);
    assert!(stdout(&out).contains("chambers: 1"));

    let out = run(&["chambers", &fixture("torsion.ring")]);
    assert!(stdout(&out).contains("chambers: 1"));
}

#[test]
fn chambers_at_degree() {
    let out = run(&["chambers", &fixture("blowup_plane.ring"), "--at", "2,1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("generic: yes"));
    assert!(text.contains("rays (1, 0), (1, 1)"));
    assert!(text.contains("x*z, x*w, y*z, y*w"));

    // a wall degree: the GIT cone collapses to the wall ray
    let out = run(&["chambers", &fixture("blowup_plane.ring"), "--at", "1,1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("generic: no"));
    assert!(text.contains("rays (1, 1)"));

    // outside the weight space
    let out = run(&["chambers", &fixture("blowup_plane.ring"), "--at", "-1,0"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).contains("weight space"));
}

#[test]
fn moving_and_nef() {
    let out = run(&["moving", &fixture("blowup_plane.ring")]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("rays (1, 0), (1, 1)"));

    let out = run(&[
        "nef",
        &fixture("blowup_plane.ring"),
        &fixture("blowup_plane.fan"),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("rays (1, 0), (1, 1)"));

    let out = run(&["nef", &fixture("p1xp1.ring"), &fixture("p1xp1.fan")]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("rays (0, 1), (1, 0)"));
}

#[test]
fn gale_duals() {
    let out = run(&["gale", &fixture("p2.fan")]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("group: Z\n"));
    assert_eq!(text.matches("= (1)").count(), 3);

    let out = run(&["gale", &fixture("p1.fan")]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("group: Z\n"));

    let out = run(&["gale", &fixture("blowup_plane.fan"), "--format", "machine"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("group.rank = 2"));
    assert!(text.contains("group.torsion = []"));
    assert!(text.contains("degree.count = 4"));
}

#[test]
fn fan_of_chamber_reconstruction() {
    let out = run(&[
        "fan-of-chamber",
        &fixture("blowup_plane.ring"),
        &fixture("blowup_plane.fan"),
        "--at",
        "2,1",
        "--format",
        "machine",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("cone.count = 4"));
    assert!(stdout(&out).contains("unused = []"));

    let out = run(&[
        "fan-of-chamber",
        &fixture("blowup_plane.ring"),
        &fixture("blowup_plane.fan"),
        "--at",
        "1,2",
        "--format",
        "machine",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("cone.count = 3"));
    assert!(stdout(&out).contains("unused = [3]"));

    // wall degrees name no chamber
    let out = run(&[
        "fan-of-chamber",
        &fixture("blowup_plane.ring"),
        &fixture("blowup_plane.fan"),
        "--at",
        "1,1",
    ]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).contains("not generic"));
}

#[test]
fn separated_pairs() {
    let out = run(&["separated", &fixture("blowup_plane.ring"), "xw", "yw"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("separated (intersection dimension 2)"));

    let out = run(&["separated", &fixture("blowup_plane.ring"), "xz", "zw"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("not separated (intersection dimension 1)"));

    // xy is not relevant
    let out = run(&["separated", &fixture("blowup_plane.ring"), "xy", "zw"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn semistable_points() {
    let out = run(&[
        "semistable",
        &fixture("blowup_plane.ring"),
        "--support",
        "x,w",
        "--at",
        "2,1",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("is semistable"));

    let out = run(&[
        "semistable",
        &fixture("blowup_plane.ring"),
        "--support",
        "z",
        "--at",
        "2,1",
        "--format",
        "machine",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("semistable = false"));

    let out = run(&[
        "semistable",
        &fixture("blowup_plane.ring"),
        "--support",
        "q",
        "--at",
        "2,1",
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn plot_is_deterministic() {
    let out_path_1 = write_temp("plot1.svg", "");
    let out_path_2 = write_temp("plot2.svg", "");
    let out = run(&[
        "plot",
        &fixture("blowup_plane.ring"),
        "--out",
        &out_path_1,
    ]);
    assert!(out.status.success());
    let out = run(&[
        "plot",
        &fixture("blowup_plane.ring"),
        "--out",
        &out_path_2,
    ]);
    assert!(out.status.success());
    let a = std::fs::read(&out_path_1).unwrap();
    let b = std::fs::read(&out_path_2).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b, "plot output must be byte-identical across runs");
    let text = String::from_utf8(a).unwrap();
    assert!(text.starts_with("<svg"));
    assert!(text.contains("C0"));
    assert!(text.contains("C1"));
    // two shaded chambers
    assert_eq!(text.matches("fill-opacity").count(), 2);
}

#[test]
fn plot_rejects_other_ranks() {
    let out_path = write_temp("plot-rank1.svg", "");
    let out = run(&["plot", &fixture("p2.ring"), "--out", &out_path]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn exit_codes() {
    // unparsable ring file
    let bad = write_temp("bad.ring", "rank = 2\nvar x = [1]\n");
    let out = run(&["relevants", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2"));

    // missing file
    let out = run(&["relevants", "/nonexistent/thing.ring"]);
    assert_eq!(out.status.code(), Some(2));

    // parses but is not effective
    let bad = write_temp("noneff.ring", "rank = 1\ntorsion = []\nvar x = [2]\n");
    let out = run(&["relevants", &bad]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("effective"));

    // parses but is not a valid fan (parallel rays)
    let bad = write_temp(
        "bad.fan",
        "dim = 2\nray = [1, 0]\nray = [2, 0]\ncone = [0]\ncone = [1]\n",
    );
    let out = run(&["gale", &bad]);
    assert_eq!(out.status.code(), Some(3));

    // fan that is no Gale dual of the ring
    let out = run(&["nef", &fixture("p1xp1.ring"), &fixture("blowup_plane.fan")]);
    assert_eq!(out.status.code(), Some(4));
}

/// The machine output must reproduce the values the library computes.
#[test]
fn machine_output_round_trips() {
    use secfan_cli::spec_file::parse_ring_spec;
    use secfan_core::gitfan::enumerate_chambers;

    let out = run(&[
        "chambers",
        &fixture("blowup_plane.ring"),
        "--format",
        "machine",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);

    let ring_text = std::fs::read_to_string(fixture("blowup_plane.ring")).unwrap();
    let g = parse_ring_spec(&ring_text)
        .unwrap()
        .to_degree_matrix()
        .unwrap();
    let chambers = enumerate_chambers(&g).unwrap();

    let lookup = |key: &str| -> &str {
        text.lines()
            .find_map(|l| l.strip_prefix(&format!("{key} = ")))
            .unwrap_or_else(|| panic!("missing key {key}"))
    };
    assert_eq!(lookup("chamber.count"), chambers.len().to_string());
    for (i, c) in chambers.iter().enumerate() {
        assert_eq!(
            lookup(&format!("chamber.{i}.ray.count")),
            c.cone.rays().len().to_string()
        );
        for (j, r) in c.cone.rays().iter().enumerate() {
            let printed = lookup(&format!("chamber.{i}.ray.{j}"));
            let expected = format!(
                "[{}]",
                r.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            assert_eq!(printed, expected);
        }
        for (j, b) in c.b_generators.iter().enumerate() {
            let printed = lookup(&format!("chamber.{i}.basis.{j}"));
            let expected = format!(
                "[{}]",
                b.indices()
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            assert_eq!(printed, expected);
        }
    }
}
