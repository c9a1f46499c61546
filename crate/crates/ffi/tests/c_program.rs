//! Compiles a small C program against the generated header and the static library.

use std::path::PathBuf;
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "skeinlab.h"

int main(void) {
    SkeinDiagram *d = NULL;
    SkeinPoly *p = NULL, *v = NULL;
    if (skein_diagram_from_catalog("figure8", &d) != SKEIN_STATUS_OK) return 10;
    if (skein_diagram_crossings(d) != 4 || skein_diagram_writhe(d) != 0) return 11;
    if (skein_compute(d, "p", NULL, &p) != SKEIN_STATUS_OK) return 12;
    if (skein_poly_specialize(p, "jones", &v) != SKEIN_STATUS_OK) return 13;
    char *s = skein_poly_to_string(v);
    printf("%s\n", s);
    skein_string_free(s);
    if (skein_compute(d, "nope", NULL, &p) != SKEIN_STATUS_UNKNOWN_INVARIANT) return 14;
    if (skein_last_error() == NULL) return 15;
    skein_poly_free(v);
    skein_poly_free(p);
    skein_diagram_free(d);
    return 0;
}
"#;

#[test]
fn c_program_links_and_runs() {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("no C compiler, skipping");
        return;
    }
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // target/<profile>/deps/<this test> -> target/<profile>
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("libskeinlab_ffi.a");
    if !lib.exists() {
        eprintln!("{} not built, skipping", lib.display());
        return;
    }
    let tmp = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let src = tmp.join("ffi_check.c");
    let exe = tmp.join("ffi_check");
    std::fs::write(&src, PROGRAM).unwrap();
    let st = Command::new(&cc)
        .arg(&src)
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(st.success(), "C compile failed");
    let out = Command::new(&exe).env_remove("SKEINLAB_CATALOG").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "t^-4 - t^-2 + 1 - t^2 + t^4\n");
}
