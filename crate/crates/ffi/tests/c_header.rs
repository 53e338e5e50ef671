//! Compiles a C program against the generated header and the static library.

use std::path::{Path, PathBuf};
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "pentacover.h"

int main(void) {
    PcGraph *g = NULL;
    if (pc_family_build("cd", 11, 0, 0, &g) != PC_STATUS_OK) return 1;
    uint64_t order = 0;
    if (pc_graph_aut_order(g, &order) != PC_STATUS_OK || order != 1320) return 2;
    char *text = NULL;
    if (pc_graph_to_graph6(g, &text) != PC_STATUS_OK) return 3;
    PcGraph *h = NULL;
    if (pc_graph_from_graph6(text, &h) != PC_STATUS_OK) return 4;
    bool iso = false;
    if (pc_graphs_isomorphic(g, h, &iso) != PC_STATUS_OK || !iso) return 5;
    PcGraph *bad = NULL;
    if (pc_family_build("cgd1", 1, 11, 1, &bad) != PC_STATUS_SIDE_CONDITION) return 6;
    if (strstr(pc_last_error_message(), "e >= 2") == NULL) return 7;
    printf("%s %llu\n", text, (unsigned long long)order);
    pc_string_free(text);
    pc_graph_free(g);
    pc_graph_free(h);
    return 0;
}
"#;

fn target_dir() -> PathBuf {
    // target/<profile>/deps/<test binary>
    std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn c_program_links_and_runs() {
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let lib = target_dir().join("libpentacover_ffi.a");
    assert!(lib.exists(), "{} missing", lib.display());
    let work = tempfile::tempdir().unwrap();
    let src = work.path().join("smoke.c");
    let exe = work.path().join("smoke");
    std::fs::write(&src, PROGRAM).unwrap();
    let status = Command::new("cc")
        .args(["-std=c11", "-Wall", "-Werror", "-I"])
        .arg(manifest.join("include"))
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("a C compiler");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status.code());
    assert!(String::from_utf8(out.stdout).unwrap().ends_with(" 1320\n"));
}
