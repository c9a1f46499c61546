use std::process::{Command, Output};

use skeinlab::catalog::Catalog;
use skeinlab::poly::LaurentPoly;
use skeinlab::select::Invariant;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skeinlab"))
        .args(args)
        .env_remove("SKEINLAB_CATALOG")
        .output()
        .expect("spawn skeinlab")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_examples() {
    let o = run(&["compute", "--invariant", "hr", "--link", "hopf+"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "a*z + a*w^-1*E^-1 - a^-1*w^-1*E^-1\n");
    assert_eq!(stdout(&run(&["compute", "-i", "r", "-l", "unknot"])), "1\n");
    assert_eq!(stdout(&run(&["compute", "-i", "p", "-l", "trefoil-", "--set", "jones"])), "-t^-8 + t^-6 + t^-2\n");
}

#[test]
fn printed_values_parse_back() {
    let cat = Catalog::builtin();
    for inv in Invariant::ALL {
        for link in ["hopf+", "figure8"] {
            let o = run(&["compute", "-i", inv.name(), "-l", link]);
            assert_eq!(o.status.code(), Some(0), "{inv} {link}");
            let printed: LaurentPoly = stdout(&o).trim().parse().unwrap();
            assert_eq!(printed, inv.eval(cat.get(link).unwrap(), None).unwrap(), "{inv} {link}");
        }
    }
}

#[test]
fn json_output() {
    let o = run(&["compute", "-i", "dt", "-l", "PD[X(1,1,2,2)]", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["invariant"], "dt");
    assert_eq!(v["value"], "a");
}

#[test]
fn output_is_stable() {
    let args = ["compute", "-i", "kq", "-l", "whitehead", "--template", "1,2,3,4,5,6,7,8,9,10,11,12"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["compute", "-i", "hr", "-l", "PD[X(1,2,3"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "-i", "hr", "-l", "nosuch"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "-i", "homfly", "-l", "unknot"]).status.code(), Some(3));
    assert_eq!(run(&["compute", "-i", "p", "-l", "unknot", "--set", "q=1"]).status.code(), Some(3));
    let o = run(&["catalog", "show", "nosuch"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn catalog_commands() {
    let list = stdout(&run(&["catalog", "list"]));
    assert!(list.lines().any(|l| l == "whitehead"));
    assert_eq!(stdout(&run(&["catalog", "show", "hopf+"])), "PD[X(1,3,2,4), X(3,1,4,2)] loops=0\n");
}

#[test]
fn catalog_override() {
    let path = std::env::temp_dir().join(format!("skeinlab-cat-{}.txt", std::process::id()));
    std::fs::write(&path, "mine: PD[X(2,1,1,2)] loops=0\n").unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_skeinlab"))
        .args(["compute", "-i", "r", "-l", "mine"])
        .env("SKEINLAB_CATALOG", &path)
        .output()
        .unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(String::from_utf8(o.stdout).unwrap(), "a^-1\n");
}

#[test]
fn verify_suites_are_deterministic() {
    let a = run(&["verify", "specialize", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(a.stdout, run(&["verify", "specialize", "--seed", "7"]).stdout);
    // The trivial-Jones link itself is missing from the catalog.
    let p = run(&["verify", "paper-values"]);
    assert_eq!(p.status.code(), Some(1));
    assert!(stdout(&p).contains("PASS whitehead"));
}
