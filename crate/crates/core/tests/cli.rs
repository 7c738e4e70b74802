use std::path::PathBuf;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_pomset-block");

const CHAIN5: &str = "m 5\nblocks 1 1\norder 1<2\n";
const SMALL: &str = "m 7\nblocks 2 1 2\norder 1<3\n";
const SIX_BLOCKS: &str = "m 7\nblocks 2 3 4 4 3 2\norder 1<2 2<4 1<4 5<6\n";

/// Scratch directory unique to one test.
struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("pomset-block-cli-{}-{tag}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Self(dir)
    }

    fn file(&self, name: &str, body: &str) -> String {
        let p = self.0.join(name);
        std::fs::write(&p, body).unwrap();
        p.to_string_lossy().into_owned()
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

fn run(args: &[&str]) -> (String, String, i32) {
    let Output { stdout, stderr, status } = Command::new(BIN).args(args).output().unwrap();
    (
        String::from_utf8(stdout).unwrap(),
        String::from_utf8(stderr).unwrap(),
        status.code().unwrap(),
    )
}

fn field<'a>(out: &'a str, key: &str) -> &'a str {
    out.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix('\t')))
        .unwrap_or_else(|| panic!("no `{key}` in {out}"))
}

#[test]
fn weight_of_six_block_vector() {
    let t = Scratch::new("weight");
    let s = t.file("s", SIX_BLOCKS);
    let coords = "0 0 0 0 0 0 0 0 0 0 1 0 1 0 0 0 2 0";
    let mut args = vec!["weight", &s];
    args.extend(coords.split(' '));
    assert_eq!(run(&args), ("12\n".into(), String::new(), 0));
    args.push("--poset");
    assert_eq!(run(&args).0, "5\n");
}

#[test]
fn bad_input_exits_two() {
    let t = Scratch::new("bad");
    let s = t.file("s", SIX_BLOCKS);
    let (_, err, code) = run(&["weight", &s, "1", "2"]);
    assert_eq!(code, 2);
    assert!(err.contains("length"), "{err}");

    let broken = t.file("broken", "m 5\nblocks 1 x\n");
    let (_, err, code) = run(&["weight", &broken, "1", "1"]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");

    assert_eq!(run(&["ballsize", &s]).2, 2);
    assert_eq!(run(&["no-such-command"]).2, 2);
    assert_eq!(run(&["weight", "/nonexistent/space", "1"]).2, 2);
}

#[test]
fn selftest_passes() {
    let t = Scratch::new("selftest");
    for (name, body) in [("chain", CHAIN5), ("small", SMALL), ("anti", "m 6\nblocks 2 1\n")] {
        let s = t.file(name, body);
        let (out, _, code) = run(&["selftest", &s]);
        assert_eq!(code, 0, "{name}: {out}");
        assert!(out.trim_end().ends_with("# all pass"));
        assert!(!out.contains("\tFAIL"));
    }
}

#[test]
fn ideal_listing() {
    let t = Scratch::new("ideals");
    let s = t.file("s", CHAIN5);
    assert_eq!(run(&["ideals", &s, "--card", "3"]).0, "{2/1, 1/2}\t3\t1\n");
    // Chain of two with height 2: counts (0,0) (1,0) (2,0) (2,1) (2,2).
    assert_eq!(run(&["ideals", &s]).0.lines().count(), 5);

    let anti = t.file("anti", "m 5\nblocks 1 1 1\n");
    let (out, _, _) = run(&["ideals", &anti, "--card", "3"]);
    // Compositions of 3 into three parts each at most 2.
    assert_eq!(out.lines().count(), 7);
    let (out, _, _) = run(&["ideals", &anti, "--card", "3", "--maxcount", "3"]);
    assert_eq!(out.lines().count(), 1);
}

#[test]
fn weight_distribution_table() {
    let t = Scratch::new("wdist");
    let s = t.file("s", CHAIN5);
    let expected = "0\t1\n1\t2\n2\t2\n3\t10\n4\t10\n# total 25\n";
    assert_eq!(run(&["wdist", &s]).0, expected);
    assert_eq!(run(&["wdist", &s, "--oracle"]).0, expected);
}

#[test]
fn ball_sizes_agree_with_enumeration() {
    let t = Scratch::new("balls");
    let s = t.file("s", SMALL);
    for shape in [["--radius", "4"], ["--ideal", "3/1 1/2"]] {
        for sphere in [false, true] {
            let mut args = vec!["ballsize", s.as_str(), shape[0], shape[1]];
            if sphere {
                args.push("--sphere");
            }
            let formula = run(&args).0;
            args.extend(["--enumerate", "--center", "1 0 0 2 6"]);
            assert_eq!(run(&args).0, formula, "{args:?}");
        }
    }
}

#[test]
fn perfect_verify_reports_witness() {
    let t = Scratch::new("perfect");
    let s = t.file("s", CHAIN5);
    let bad = t.file("bad", "explicit\n0 0\n1 0\n");
    let (out, _, code) = run(&["perfect", "verify", &s, &bad, "--ideal", "2/1"]);
    assert_eq!(code, 1);
    assert_eq!(field(&out, "perfect"), "false");
    assert!(field(&out, "overlap").starts_with("1 0"));

    let (built, _, code) = run(&["perfect", "construct", &s, "--ideal", "2/1"]);
    assert_eq!(code, 0);
    assert_eq!(built.lines().count(), 6);
    let good = t.file("good", &built);
    let (out, _, code) = run(&["perfect", "verify", &s, &good, "--ideal", "2/1"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(field(&out, "perfect"), "true");
}

#[test]
fn construct_partial_round_trips() {
    let t = Scratch::new("partial");
    let s = t.file("s", "m 9\nblocks 1 1\norder 1<2\n");
    let (built, err, code) = run(&["perfect", "construct", &s, "--ideal", "4/1 1/2"]);
    assert_eq!(code, 0, "{err}");
    let c = t.file("c", &built);
    let (out, _, code) = run(&["perfect", "verify", &s, &c, "--ideal", "4/1 1/2"]);
    assert_eq!(code, 0, "{out}");

    // 5 residues in a block of Z_9 cannot tile it.
    let (_, err, code) = run(&["perfect", "construct", &s, "--ideal", "4/1 2/2"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
}

#[test]
fn chain_code_reports() {
    let t = Scratch::new("chain");
    let s = t.file("s", CHAIN5);
    let diag = t.file("diag", "linear\n1 1\n");

    let (out, _, code) = run(&["mds", "check", &s, &diag]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "distance"), "3");
    assert_eq!(field(&out, "mds"), "true");

    let (out, _, code) = run(&["dual", &s, &diag]);
    assert_eq!(code, 0);
    assert!(out.contains("# order 2<1"));
    assert_eq!(out.lines().filter(|l| !l.starts_with('#')).count(), 6);

    let (out, _, code) = run(&["packrad", &s, &diag]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "bruteforce"), "2");
    assert_eq!(field(&out, "formula"), "2");

    let (out, _, code) = run(&["duality4", &s, &diag]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "all_equal"), "true");

    let axis = t.file("axis", "linear\n1 0\n");
    let (out, _, code) = run(&["duality4", &s, &axis]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(field(&out, "mds"), "false");
    assert_eq!(field(&out, "dual_perfect"), "false");
}

#[test]
fn packing_formula_gap_exits_one() {
    let t = Scratch::new("gap");
    let s = t.file("s", "m 7\nblocks 1\n");
    let c = t.file("c", "explicit\n0\n3\n");
    let (out, _, code) = run(&["packrad", &s, &c]);
    assert_eq!(code, 1);
    assert_ne!(field(&out, "bruteforce"), field(&out, "formula"));
}
