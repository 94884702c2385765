use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn tvsplit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tvsplit"))
        .args(args)
        .env_remove("EULER_THREADS")
        .output()
        .expect("binary runs")
}

fn lines(path: &Path) -> Vec<String> {
    fs::read_to_string(path)
        .unwrap()
        .lines()
        .map(str::to_owned)
        .collect()
}

fn path_arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn run_writes_a_snapshot() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("ex1.csv");
    let o = tvsplit(&["run", "ex1", "--order", "3", "--nx", "40", "--out", path_arg(&out)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let rows = lines(&out);
    assert_eq!(rows[0], "x,rho,u,p,E");
    assert_eq!(rows.len(), 41);
    let stdout = String::from_utf8_lossy(&o.stdout);
    assert!(stdout.contains("density errors"), "{stdout}");
}

#[test]
fn aliases_and_snapshots() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("kh.csv");
    let o = tvsplit(&[
        "run", "--problem", "kh", "--order", "1", "--nx", "16", "--t-final", "0.02",
        "--snapshots", "0.01", "--out", path_arg(&out),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(lines(&out)[0], "x,y,rho,u,v,p,E");
    assert_eq!(lines(&out).len(), 16 * 16 + 1);
    assert!(dir.path().join("kh_t0.01.csv").exists());
}

#[test]
fn explosion_writes_the_diagonal_slice() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("ex8.csv");
    let o = tvsplit(&["run", "ex8", "--order", "2", "--nx", "20", "--t-final", "0.01", "--out", path_arg(&out)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let diag = dir.path().join("ex8_diag_t0.01.csv");
    let rows = lines(&diag);
    assert_eq!(rows[0], "x,rho");
    assert_eq!(rows.len(), 21);
}

#[test]
fn usage_errors_exit_with_2() {
    for args in [
        vec!["run", "ex1", "--order", "4"],
        vec!["run", "ex99"],
        vec!["run", "ex1", "--flux", "roe"],
        vec!["run", "--order", "1"],
        vec!["run", "ex1", "--cfl", "1.5"],
        vec!["converge", "ex3", "--order", "1", "--meshes", "50,100"],
        vec!["bogus"],
    ] {
        let o = tvsplit(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn solver_failure_exits_with_1() {
    // without positivity limiting the fifth-order blast wave fails on its first step
    let o = tvsplit(&["run", "ex5", "--order", "5", "--nx", "100"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("solver error"));
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    let out = dir.path().join("out.csv");
    fs::write(
        &cfg,
        format!(
            "# smooth advection\nproblem = smooth-advection\norder = 2\nnx = 64\nt_final = 0.05\nout = {}\n",
            out.display()
        ),
    )
    .unwrap();
    let o = tvsplit(&["run", "--config", path_arg(&cfg), "--nx", "32"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(lines(&out).len(), 33);
    let stdout = String::from_utf8_lossy(&o.stdout);
    assert!(stdout.contains("ex2 order 2"), "{stdout}");
    assert!(stdout.contains("t = 0.05"), "{stdout}");
}

#[test]
fn converge_writes_one_table_per_order() {
    let dir = tempfile::tempdir().unwrap();
    let o = tvsplit(&[
        "converge", "ex1", "--order", "1,2", "--meshes", "25,50", "--out", path_arg(dir.path()),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    for order in [1, 2] {
        let rows = lines(&dir.path().join(format!("ex1_tv_order{order}.csv")));
        assert_eq!(rows[0], "mesh,error_l1,rate_l1,error_linf,rate_linf,wall_time");
        assert_eq!(rows.len(), 3);
        assert!(rows[1].starts_with("25,"));
        // no rate on the coarsest mesh
        assert_eq!(rows[1].split(',').nth(2), Some(""));
    }
}

#[test]
fn bench_writes_costs() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("eff.csv");
    let o = tvsplit(&[
        "bench", "ex2", "--order", "3,5", "--meshes", "20,40", "--target", "1e-3", "--out", path_arg(&out),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let rows = lines(&out);
    assert_eq!(rows[0], "order,target_error,wall_time,bracketed");
    assert_eq!(rows.len(), 3);
}

#[test]
fn thread_count_from_environment() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_tvsplit"))
            .args(["run", "ex1", "--order", "1", "--nx", "20"])
            .env("EULER_THREADS", threads)
            .output()
            .unwrap()
    };
    assert!(run("1").status.success());
    assert!(run("").status.success());
    assert_eq!(run("many").status.code(), Some(2));
}
