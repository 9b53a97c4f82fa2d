use std::fmt;
use std::fs;
use std::path::Path;
use std::process::ExitCode;

use htiling::format::{parse_complex, parse_tiling, write_complex, write_log, write_stats, write_tiling};
use htiling::generate::{self, Generator};
use htiling::search;
use htiling::{
    shell_complex, shell_pseudomanifold, validate_shelling, validate_tiling, RelativeComplex, ShellMode, Simplex,
    SimplicialComplex, VectorsReport,
};

/// Input problems exit with 2, failed checks with 1.
#[derive(Debug)]
pub enum Failure {
    Input(String),
    Validation(String),
}

impl Failure {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            Failure::Validation(_) => ExitCode::from(1),
            Failure::Input(_) => ExitCode::from(2),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Input(m) | Failure::Validation(m) => f.write_str(m),
        }
    }
}

impl From<htiling::Error> for Failure {
    fn from(e: htiling::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_complex(path: &Path) -> Result<RelativeComplex, Failure> {
    parse_complex(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, content: &str, force: bool) -> Outcome {
    if path.exists() && !force {
        return Err(Failure::Input(format!("{} exists; pass --force to overwrite", path.display())));
    }
    fs::write(path, content).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit(output: Option<&Path>, content: &str, force: bool) -> Outcome {
    match output {
        Some(p) => write(p, content, force),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn closed_input(path: &Path) -> Result<SimplicialComplex, Failure> {
    let s = read_complex(path)?;
    if !s.removed().is_empty() {
        return Err(Failure::Input(format!("{}: expected a complex without removed faces", path.display())));
    }
    Ok(s.ambient().clone())
}

pub fn generate(name: &str, n: u32, count: u32, inputs: &[std::path::PathBuf], output: Option<&Path>, force: bool) -> Outcome {
    let k = match (name, inputs) {
        ("cone", [a]) => generate::cone(&closed_input(a)?),
        ("join", [a, b]) => generate::join(&closed_input(a)?, &closed_input(b)?),
        ("cone" | "join", _) => {
            return Err(Failure::Input(format!("{name} takes {} --input file(s)", if name == "cone" { 1 } else { 2 })))
        }
        _ => generate::generate(name.parse::<Generator>()?, n, count)?,
    };
    emit(output, &write_complex(&RelativeComplex::closed(k)), force)
}

pub fn subdivide(input: &Path, at: Option<&str>, barycentric: bool, output: Option<&Path>, force: bool) -> Outcome {
    let s = read_complex(input)?;
    let out = if barycentric {
        s.barycentric_subdivide()
    } else {
        let face = at.unwrap_or_default();
        let ids = face
            .split_whitespace()
            .map(|w| w.parse::<u32>().map_err(|_| Failure::Input(format!("bad vertex id {w:?} in --at"))))
            .collect::<Result<Vec<u32>, Failure>>()?;
        let tau = Simplex::new(ids)?;
        let (out, apex) = s.stellar_subdivide(&tau)?;
        eprintln!("apex {apex}");
        out
    };
    emit(output, &write_complex(&out), force)
}

pub fn shell(input: &Path, mode: &str, pseudomanifold: bool, dir: &Path, force: bool) -> Outcome {
    let s = read_complex(input)?;
    let mode: ShellMode = mode.parse()?;
    let result = if pseudomanifold {
        let ShellMode::Stellar(m) = mode else {
            return Err(Failure::Input("--pseudomanifold needs a stellar mode".into()));
        };
        if !s.removed().is_empty() {
            return Err(Failure::Input("--pseudomanifold needs a complex without removed faces".into()));
        }
        shell_pseudomanifold(s.ambient(), m)?
    } else {
        shell_complex(&s, mode)?
    };
    fs::create_dir_all(dir).map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
    let stats = write_stats(&result.stats);
    write(&dir.join("tiling.txt"), &write_tiling(&result.tiling), force)?;
    write(&dir.join("log.txt"), &write_log(&result.subdivision_log), force)?;
    write(&dir.join("stats.txt"), &stats, force)?;
    print!("{stats}");
    let valid = validate_tiling(&result.tiling).ok && validate_shelling(&result.tiling).ok;
    println!("valid = {}", if valid { "pass" } else { "fail" });
    if s.is_pure() {
        let report = VectorsReport::build(&result.tiling, false)?;
        println!("identity_h = {}", if report.identity.holds { "pass" } else { "fail" });
        if !report.identity.holds {
            return Err(Failure::Validation("h identity fails".into()));
        }
    }
    if !valid {
        return Err(Failure::Validation("produced tiling does not validate".into()));
    }
    Ok(())
}

pub fn verify(path: &Path, verbose: bool, shelling: bool) -> Outcome {
    let t = parse_tiling(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let report = if verbose {
        htiling::tiling::validate_tiling_verbose(&t)
    } else {
        validate_tiling(&t)
    };
    println!("[tiling]");
    print!("{report}");
    let mut ok = report.ok;
    if shelling {
        let sh = validate_shelling(&t);
        println!("[shelling]");
        print!("{sh}");
        ok &= sh.ok;
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Validation("verification failed".into()))
    }
}

pub fn vectors(path: &Path, manifold: bool) -> Outcome {
    let t = parse_tiling(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let report = VectorsReport::build(&t, manifold)?;
    print!("{report}");
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Validation("identity check failed".into()))
    }
}

pub fn enumerate(input: &Path, limit: Option<usize>, dir: Option<&Path>, force: bool) -> Outcome {
    let s = read_complex(input)?;
    let tilings = search::enumerate_h_tilings(&s, limit)?;
    let critical_free = tilings.iter().filter(|t| t.critical_indices().is_empty()).count();
    let shellable = tilings.iter().filter(|t| search::is_shellable(t)).count();
    println!("count = {}", tilings.len());
    println!("critical_free = {critical_free}");
    println!("shellable = {shellable}");
    if let Some(dir) = dir {
        fs::create_dir_all(dir).map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
        for (i, t) in tilings.iter().enumerate() {
            write(&dir.join(format!("tiling_{i}.txt")), &write_tiling(t), force)?;
        }
    }
    Ok(())
}

pub fn cross_check(input: &Path) -> Outcome {
    let s = read_complex(input)?;
    let report = search::cross_check(&s)?;
    print!("{report}");
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Validation("cross-check failed".into()))
    }
}
