//! Compiles and runs `smoke.c` against the generated header and the static
//! library, proving the C surface actually links and behaves from C.

use std::path::PathBuf;
use std::process::Command;

fn target_dir() -> PathBuf {
    if let Ok(dir) = std::env::var("CARGO_TARGET_DIR") {
        return PathBuf::from(dir);
    }
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    manifest.parent().unwrap().parent().unwrap().join("target")
}

#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let profile = if cfg!(debug_assertions) { "debug" } else { "release" };
    let lib_dir = target_dir().join(profile);
    let static_lib = lib_dir.join("libcontest_liability_ffi.a");
    assert!(
        static_lib.exists(),
        "static library missing at {} (built before integration tests run)",
        static_lib.display()
    );

    let out_dir = target_dir().join("c-smoke");
    std::fs::create_dir_all(&out_dir).unwrap();
    let binary = out_dir.join("smoke");

    let compile = Command::new("cc")
        .arg(manifest.join("tests/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(static_lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&binary)
        .output()
        .expect("invoke cc");
    assert!(
        compile.status.success(),
        "cc failed:\n{}",
        String::from_utf8_lossy(&compile.stderr)
    );

    let run = Command::new(&binary).output().expect("run smoke binary");
    assert!(
        run.status.success(),
        "smoke binary failed:\nstdout: {}\nstderr: {}",
        String::from_utf8_lossy(&run.stdout),
        String::from_utf8_lossy(&run.stderr)
    );
    assert!(String::from_utf8_lossy(&run.stdout).contains("c smoke test ok"));
}
