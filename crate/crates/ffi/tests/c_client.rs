//! Compiles a small C program against the generated header and the static
//! library, then runs it.

use std::path::PathBuf;
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "placticc.h"

int main(void) {
    PlacticcWord *w = NULL, *nf = NULL;
    char *text = NULL;
    size_t a = 0, b = 0;
    if (placticc_word_parse("[1 2] [1] [2 -2]", 2, &w) != PLACTICC_STATUS_OK) return 10;
    if (placticc_normalize(w, &nf) != PLACTICC_STATUS_OK) return 11;
    if (placticc_word_to_string(nf, &text) != PLACTICC_STATUS_OK) return 12;
    if (strcmp(text, "[] [1] [1 2]") != 0) return 13;
    if (placticc_conf(w, PLACTICC_VARIANT_ACOL, &a, &b) != PLACTICC_STATUS_OK) return 14;
    if (a != 4 || b != 3) return 15;
    if (placticc_word_parse("[1 3]", 2, &w) != PLACTICC_STATUS_PARSE_ERROR) return 16;
    printf("%s|%s\n", text, placticc_last_error_message());
    placticc_string_free(text);
    placticc_word_free(nf);
    return 0;
}
"#;

#[test]
fn c_program_links_against_the_static_library() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|deps| deps.parent()).unwrap().to_path_buf();
    let lib = profile_dir.join("libplacticc_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let work = std::env::temp_dir().join(format!("placticc-c-{}", std::process::id()));
    std::fs::create_dir_all(&work).unwrap();
    let src = work.join("client.c");
    std::fs::write(&src, PROGRAM).unwrap();
    let bin = work.join("client");
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&bin)
        .status()
        .expect("running cc");
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.starts_with("[] [1] [1 2]|parse error at byte 3"), "{stdout}");
    std::fs::remove_dir_all(work).unwrap();
}
