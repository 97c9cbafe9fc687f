//! Compiles `client.c` against the generated header and the static library.

use std::path::PathBuf;
use std::process::Command;

fn static_lib() -> PathBuf {
    // target/<profile>/deps/<test binary> -> target/<profile>/liblpres_ffi.a
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().join("liblpres_ffi.a")
}

#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let lib = static_lib();
    assert!(lib.exists(), "{} missing", lib.display());
    let out_dir = tempfile::tempdir().unwrap();
    let exe = out_dir.path().join("client");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let status = Command::new(cc)
        .args(["-std=c99", "-Wall", "-Werror", "-o"])
        .arg(&exe)
        .arg(manifest.join("tests/client.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .status()
        .expect("a C compiler is required for this test");
    assert!(status.success());
    let run = Command::new(&exe).output().unwrap();
    let stdout = String::from_utf8(run.stdout).unwrap();
    assert!(run.status.success(), "{stdout}{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(
        stdout,
        "abelianization Z/3 x Z/3 free_rank 0\na^3 trivial 1\nerror unknown catalog entry `no-such-group`\n"
    );
}
