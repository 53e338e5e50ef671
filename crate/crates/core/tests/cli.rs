use std::fs;
use std::path::Path;

use pentacover::cli::{run, EXIT_FAILED, EXIT_OK, EXIT_USAGE};
use pentacover::graph::{parse_graph, to_graph6, to_sparse6};

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn cli(args: &[&str]) -> Output {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("pentacover").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Output { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

#[test]
fn build_then_aut_k6() {
    let dir = tempfile::tempdir().unwrap();
    let file = path(dir.path(), "k6.g6");
    assert_eq!(cli(&["build", "--family", "k6", "-o", &file]).code, EXIT_OK);
    let r = cli(&["aut", &file]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.stdout.contains("order 720"), "{}", r.stdout);
    assert!(r.stdout.contains("stabilizer S5"));
}

#[test]
fn cd11_aut_json() {
    let dir = tempfile::tempdir().unwrap();
    let file = path(dir.path(), "cd11.g6");
    assert_eq!(cli(&["build", "--family", "cd", "--m", "11", "-o", &file]).code, EXIT_OK);
    let r = cli(&["aut", &file, "--json"]);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["order"], "1320");
    assert_eq!(v["stabilizer"], "A5");
    assert_eq!(v["s"], 2);
    assert_eq!(v["arc_transitive"], true);
}

#[test]
fn cgd1_and_cgd2_are_not_isomorphic() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (path(dir.path(), "a.g6"), path(dir.path(), "b.s6"));
    cli(&["build", "--family", "cgd1", "--m", "1", "--p", "11", "--e", "2", "-o", &a]);
    cli(&["build", "--family", "cgd2", "--m", "1", "--p", "11", "--e", "2", "--format", "sparse6", "-o", &b]);
    let r = cli(&["iso", &a, &b]);
    assert_eq!((r.code, r.stdout.trim()), (EXIT_OK, "not isomorphic"));
    let r = cli(&["iso", &a, &a]);
    assert_eq!((r.code, r.stdout.trim()), (EXIT_OK, "isomorphic"));
}

#[test]
fn output_round_trips_byte_identically() {
    let dir = tempfile::tempdir().unwrap();
    for (family, extra) in [("g60", vec![]), ("cgd4", vec!["--m", "1", "--p", "11"])] {
        for format in ["graph6", "sparse6"] {
            let file = path(dir.path(), "g");
            let mut args = vec!["build", "--family", family, "--format", format, "-o", &file];
            args.extend(&extra);
            assert_eq!(cli(&args).code, EXIT_OK);
            let text = fs::read_to_string(&file).unwrap();
            let (g, _) = parse_graph(&text).unwrap();
            let again = if format == "graph6" { to_graph6(&g) } else { to_sparse6(&g) };
            assert_eq!(format!("{again}\n"), text);
        }
    }
}

#[test]
fn side_conditions_are_usage_errors() {
    for (args, condition) in [
        (vec!["--family", "cgd4", "--m", "1", "--p", "7"], "p = 5 or 5 | (p + 1) or 5 | (p - 1)"),
        (vec!["--family", "cgd1", "--m", "1", "--p", "11", "--e", "1"], "e >= 2"),
        (vec!["--family", "cgd5", "--m", "1", "--p", "19"], "5 | (p - 1)"),
        (vec!["--family", "cd", "--m", "7"], "x^4+x^3+x^2+x+1 = 0 to have a root mod m"),
        (vec!["--family", "cgd4", "--m", "5", "--p", "5"], "(m, p) = 1"),
    ] {
        let mut argv = vec!["build"];
        argv.extend(args);
        let r = cli(&argv);
        assert_eq!(r.code, EXIT_USAGE, "{argv:?}");
        assert_eq!(r.stderr.lines().count(), 1, "{}", r.stderr);
        assert!(r.stderr.contains(condition), "{}", r.stderr);
    }
}

#[test]
fn unknown_input_is_a_usage_error() {
    assert_eq!(cli(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(cli(&["aut", "/nonexistent/file.g6"]).code, EXIT_USAGE);
    assert_eq!(cli(&["build", "--family", "nope"]).code, EXIT_USAGE);
    assert_eq!(cli(&["aut", "--bogus-flag", "x"]).code, EXIT_USAGE);
}

#[test]
fn solve_eq1_lists_roots() {
    let r = cli(&["solve-eq1", "--m", "11"]);
    assert_eq!(r.code, EXIT_OK);
    let roots: Vec<&str> = r.stdout.lines().map(|l| l.split_whitespace().next().unwrap()).collect();
    assert_eq!(roots, ["3", "4", "5", "9"]);
    assert!(cli(&["solve-eq1", "--m", "7"]).stdout.contains("no roots"));
}

#[test]
fn catalog_lists_every_family() {
    let r = cli(&["catalog"]);
    for name in ["k6", "cd", "cgd1", "cgd4", "cgd5", "g120"] {
        assert!(r.stdout.lines().any(|l| l.starts_with(name)), "{name}");
    }
    assert!(r.stdout.contains("5 | (p - 1)"));
}

#[test]
fn quotient_and_verify_cover() {
    let dir = tempfile::tempdir().unwrap();
    let (c, q) = (path(dir.path(), "c.g6"), path(dir.path(), "q.g6"));
    cli(&["build", "--family", "cgd4", "--m", "1", "--p", "5", "-o", &c]);
    let r = cli(&["quotient", &c, "--subgroup", "canonical", "--family", "cgd4", "--m", "1", "--p", "5", "-o", &q]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    let (quotient, _) = parse_graph(&fs::read_to_string(&q).unwrap()).unwrap();
    assert_eq!((quotient.vertex_count(), quotient.regular_valency()), (10, Some(5)));

    let r = cli(&["verify-cover", &c, "--family", "cgd4", "--m", "1", "--p", "5", "--json"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["checks_passed"], true);
    assert_eq!(v["quotient_order"], 10);

    // the cover file need not use the constructor's labelling
    let perms = path(dir.path(), "k.txt");
    fs::write(&perms, "1 0 3 2 5 4 7 6 9 8\n").unwrap();
    let k55 = path(dir.path(), "k55.g6");
    cli(&["build", "--family", "k55", "-o", &k55]);
    let r = cli(&["quotient", &k55, "--subgroup", &perms, "-o", &q]);
    assert_eq!(r.code, EXIT_FAILED, "a non-automorphism must be rejected");
}

#[test]
fn verify_cover_rejects_a_different_graph() {
    let dir = tempfile::tempdir().unwrap();
    let c = path(dir.path(), "c.g6");
    cli(&["build", "--family", "cgd4", "--m", "1", "--p", "11", "-o", &c]);
    let r = cli(&["verify-cover", &c, "--family", "cgd5", "--m", "1", "--p", "11"]);
    assert_eq!(r.code, EXIT_FAILED);
    assert!(r.stderr.contains("not isomorphic"));
}
