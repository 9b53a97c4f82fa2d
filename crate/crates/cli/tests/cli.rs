use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn htiling(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_htiling"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn shell_boundary_of_tetrahedron() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert!(htiling(d, &["generate", "--name", "boundary", "--n", "3", "-o", "b3.txt"]).status.success());
    let out = htiling(d, &["shell", "-i", "b3.txt", "--mode", "facets", "--output-dir", "out"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("identity_h = pass"), "{text}");
    assert!(text.contains("c_vector = [1, 0, 1]"));
    for f in ["tiling.txt", "log.txt", "stats.txt"] {
        assert!(d.join("out").join(f).exists());
    }
    let v = htiling(d, &["verify", "-t", "out/tiling.txt"]);
    assert_eq!(v.status.code(), Some(0));
    let v = htiling(d, &["vectors", "-t", "out/tiling.txt", "--manifold"]);
    assert_eq!(v.status.code(), Some(0), "{}", stdout(&v));
    assert!(stdout(&v).contains("palindromic = pass"));
}

#[test]
fn every_mode_passes_verify() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    htiling(d, &["generate", "--name", "wedge", "--n", "2", "-o", "w.txt"]);
    for mode in ["facets", "ridges", "mixed", "barycentric"] {
        let out_dir = format!("out_{mode}");
        let s = htiling(d, &["shell", "-i", "w.txt", "--mode", mode, "--output-dir", &out_dir]);
        assert_eq!(s.status.code(), Some(0), "{mode}");
        let tiling = format!("{out_dir}/tiling.txt");
        assert_eq!(htiling(d, &["verify", "-t", &tiling]).status.code(), Some(0), "{mode}");
        assert_eq!(htiling(d, &["vectors", "-t", &tiling]).status.code(), Some(0), "{mode}");
    }
}

#[test]
fn pseudomanifold_flag() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    htiling(d, &["generate", "--name", "boundary", "--n", "4", "-o", "b4.txt"]);
    let s = htiling(d, &["shell", "-i", "b4.txt", "--pseudomanifold", "--mode", "ridges", "--output-dir", "o"]);
    assert_eq!(s.status.code(), Some(0));
    assert!(stdout(&s).contains("h_vector = [1,"));
    htiling(d, &["generate", "--name", "wedge", "--n", "2", "-o", "w.txt"]);
    let s = htiling(d, &["shell", "-i", "w.txt", "--pseudomanifold", "--output-dir", "o2"]);
    assert_eq!(s.status.code(), Some(2));
}

#[test]
fn corrupted_tiling_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    htiling(d, &["generate", "--name", "boundary", "--n", "3", "-o", "b3.txt"]);
    htiling(d, &["shell", "-i", "b3.txt", "--output-dir", "out"]);
    let text = fs::read_to_string(d.join("out/tiling.txt")).unwrap();
    let corrupted = text.replace("; opp 2 3 ;", "; opp - ;");
    assert_ne!(corrupted, text);
    fs::write(d.join("bad.txt"), corrupted).unwrap();
    let v = htiling(d, &["verify", "-t", "bad.txt"]);
    assert_eq!(v.status.code(), Some(1));
    assert!(stdout(&v).contains("violation not_partition"), "{}", stdout(&v));
}

#[test]
fn wedge_has_no_h_tilings() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    htiling(d, &["generate", "--name", "wedge", "--n", "2", "-o", "w.txt"]);
    let e = htiling(d, &["enumerate", "-i", "w.txt"]);
    assert_eq!(e.status.code(), Some(0));
    assert!(stdout(&e).contains("count = 0"));
}

#[test]
fn circle_enumeration_and_cross_check() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    htiling(d, &["generate", "--name", "boundary", "--n", "2", "-o", "c.txt"]);
    let e = htiling(d, &["enumerate", "-i", "c.txt", "--output-dir", "all"]);
    assert!(stdout(&e).contains("critical_free = 2"));
    assert!(d.join("all/tiling_0.txt").exists());
    let c = htiling(d, &["cross-check", "-i", "c.txt"]);
    assert_eq!(c.status.code(), Some(0));
    assert!(stdout(&c).contains("mu = 2"));
}

#[test]
fn round_trip_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    htiling(d, &["generate", "--name", "disjoint", "--n", "2", "--count", "3", "-o", "a.txt"]);
    let a = fs::read_to_string(d.join("a.txt")).unwrap();
    // the same complex written in another order, with comments
    let mut shuffled: Vec<&str> = a.lines().collect();
    shuffled.reverse();
    let noisy = format!("# header\n{}\n", shuffled.join("  # note\n"));
    fs::write(d.join("noisy.txt"), noisy).unwrap();
    htiling(d, &["subdivide", "-i", "a.txt", "--at", "3 4", "-o", "b.txt"]);
    htiling(d, &["subdivide", "-i", "noisy.txt", "--at", "3 4", "-o", "b2.txt"]);
    let b = fs::read(d.join("b.txt")).unwrap();
    assert_eq!(b, fs::read(d.join("b2.txt")).unwrap());
    let o = htiling(d, &["subdivide", "-i", "b.txt", "--at", "3 4"]);
    assert_eq!(o.status.code(), Some(2), "3 4 is no longer a face");
    htiling(d, &["shell", "-i", "b.txt", "--output-dir", "s"]);
    let t = fs::read_to_string(d.join("s/tiling.txt")).unwrap();
    assert!(t.starts_with(&String::from_utf8(b).unwrap()));
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fs::write(d.join("bad.txt"), "facet 0 1\nfacet 2 zz\n").unwrap();
    let o = htiling(d, &["shell", "-i", "bad.txt", "--output-dir", "o"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    htiling(d, &["generate", "--name", "boundary", "--n", "3", "-o", "b.txt"]);
    let o = htiling(d, &["generate", "--name", "boundary", "--n", "3", "-o", "b.txt"]);
    assert_eq!(o.status.code(), Some(2));
    let o = htiling(d, &["generate", "--name", "boundary", "--n", "3", "-o", "b.txt", "--force"]);
    assert_eq!(o.status.code(), Some(0));
    let o = htiling(d, &["generate", "--name", "pyramid", "--n", "3"]);
    assert_eq!(o.status.code(), Some(2));
    htiling(d, &["generate", "--name", "boundary", "--n", "5", "-o", "b5.txt"]);
    let o = htiling(d, &["enumerate", "-i", "b5.txt"]);
    assert_eq!(o.status.code(), Some(2));
}
