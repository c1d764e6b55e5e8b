#![allow(dead_code)]

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    pub fn claims(&self) -> Vec<&str> {
        self.stdout
            .lines()
            .filter(|l| l.starts_with("CLAIM "))
            .collect()
    }

    /// Exit 0 exactly when every CLAIM line says equal.
    pub fn honours_claim_contract(&self) -> bool {
        let claims = self.claims();
        let all_equal = claims.iter().all(|l| l.ends_with("RESULT equal"));
        (self.code == 0) == (!claims.is_empty() && all_equal)
    }
}

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub const FIXTURES: [&str; 10] = [
    "k2plus.el",
    "c3.el",
    "c7.el",
    "debruijn_2_3.el",
    "spiked_2_1.el",
    "random_6_3.el",
    "path.el",
    "empty_arcs.el",
    "k3plus.mm",
    "dicycle5.mm",
];

/// Fixtures whose digraph is regular of positive degree.
pub const REGULAR: [&str; 7] = [
    "k2plus.el",
    "c3.el",
    "c7.el",
    "debruijn_2_3.el",
    "random_6_3.el",
    "k3plus.mm",
    "dicycle5.mm",
];

pub fn cli(args: &[&str]) -> Output {
    cli_with_stdin(args, None)
}

pub fn cli_with_stdin(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_linedigraph"))
        .args(args)
        .stdin(if stdin.is_some() {
            Stdio::piped()
        } else {
            Stdio::null()
        })
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn linedigraph");
    if let Some(text) = stdin {
        child
            .stdin
            .take()
            .unwrap()
            .write_all(text.as_bytes())
            .unwrap();
    }
    let out = child.wait_with_output().unwrap();
    Output {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

/// Runs every round-trip and exit-status check over the fixture set and
/// returns how many checks were made.
pub fn fixture_contract() -> Result<usize, String> {
    let mut checks = 0;
    let mut expect = |ok: bool, what: &dyn Fn() -> String| {
        checks += 1;
        check(ok, what)
    };

    for gen in [
        &["gen", "kplus", "--d", "3"][..],
        &["gen", "debruijn", "--d", "2", "--k", "3"],
        &["gen", "spiked", "--n", "3", "--spikes", "2"],
        &["gen", "random", "--n", "12", "--d", "4", "--seed", "9"],
    ] {
        let first = cli(gen);
        let again = cli_with_stdin(
            &["export", "-", "--format", "edgelist"],
            Some(&first.stdout),
        );
        expect(
            first.code == 0 && again.code == 0 && again.stdout == first.stdout,
            &|| format!("{gen:?} | export edgelist is not byte-identical"),
        )?;
    }

    for name in FIXTURES {
        let path = fixture(name);
        let path = path.to_str().unwrap();
        let text = std::fs::read_to_string(path).unwrap();
        let regular = REGULAR.contains(&name);

        let el = cli(&["export", path, "--format", "edgelist"]);
        expect(el.code == 0, &|| format!("export {name}: {}", el.stderr))?;
        if name.ends_with(".el") {
            expect(el.stdout == text, &|| {
                format!("{name}: edge list round trip differs")
            })?;
        }
        // edge list -> mm -> edge list
        let mm = cli_with_stdin(&["export", "-", "--format", "mm"], Some(&el.stdout));
        let back = cli_with_stdin(
            &[
                "export",
                "-",
                "--input-format",
                "mm",
                "--format",
                "edgelist",
            ],
            Some(&mm.stdout),
        );
        expect(mm.code == 0 && back.stdout == el.stdout, &|| {
            format!("{name}: Matrix Market round trip differs")
        })?;

        let theorem = cli(&["verify", "theorem", path]);
        expect(theorem.honours_claim_contract(), &|| {
            format!("{name}: verify theorem exit {} vs output", theorem.code)
        })?;
        expect((theorem.code == 0) == regular, &|| {
            format!("{name}: verify theorem exit {}", theorem.code)
        })?;
        expect(regular || !theorem.stderr.is_empty(), &|| {
            format!("{name}: no diagnostic on failure")
        })?;

        let decomposition = cli(&["verify", "decomposition", path]);
        expect(
            decomposition.honours_claim_contract() && (decomposition.code == 0) == regular,
            &|| format!("{name}: verify decomposition exit {}", decomposition.code),
        )?;

        let factorize = cli(&["factorize", path]);
        expect((factorize.code == 0) == regular, &|| {
            format!("{name}: factorize exit {}", factorize.code)
        })?;

        // the plain line digraph only needs a nonempty arc set
        let line = cli(&["line", path]);
        let expected = if name == "empty_arcs.el" { 1 } else { 0 };
        expect(line.code == expected, &|| {
            format!("{name}: line exit {}", line.code)
        })?;
        let canonical = cli(&["line", path, "--canonical"]);
        expect((canonical.code == 0) == regular, &|| {
            format!("{name}: line --canonical exit {}", canonical.code)
        })?;
    }

    let missing = cli(&["line", "missing.txt"]);
    expect(missing.code == 1 && !missing.stderr.is_empty(), &|| {
        format!("line missing.txt exit {}", missing.code)
    })?;
    let dot = cli(&["export", "graph.dot", "--format", "edgelist"]);
    expect(dot.code == 1, &|| format!("DOT input exit {}", dot.code))?;
    for bad in [
        &["frobnicate"][..],
        &["gen", "kplus"],
        &["verify", "theorem", "--bogus"],
    ] {
        let out = cli(bad);
        expect(out.code == 2 && out.stdout.is_empty(), &|| {
            format!("{bad:?}: usage error exit {}", out.code)
        })?;
    }
    Ok(checks)
}
