//! Command-line front end over the antimatroid library.
//!
//! Exit codes follow one contract across subcommands: 0 when the checked
//! property holds, 1 when it fails, 2 on usage, parse, or guardrail errors —
//! so the verification workflows compose with ordinary test harnesses.
//! Data goes to stdout (or `--out`); diagnostics go to stderr.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgAction, Parser, Subcommand};

use antimatroid::duality::{
    build_canonical_linkage, extend_to_maximal, extract_on_family, represents, LinkageFunction,
    SetFunction,
};
use antimatroid::io;
use antimatroid::lab::{verify_all, EnumerationSpec, FamilyClass, VerifyOptions};
use antimatroid::{Error, GroundSet, SetFamily};

const OK: u8 = 0;
const PROPERTY_FAILED: u8 = 1;
const USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "antimatroid",
    version,
    about = "Antimatroid recognizers and the quasi-concave / monotone-linkage duality",
    after_help = "Exit codes: 0 property holds, 1 property fails, 2 usage or parse error."
)]
struct Cli {
    /// Print extra diagnostics (witnesses, certificates) to stderr.
    #[arg(long, short, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a set-system file and print every recognizer verdict.
    Check {
        /// Set-system JSON file.
        #[arg(long)]
        system: PathBuf,
    },
    /// Extract the set function of a linkage: F(X) = min over Γ(X).
    Extract {
        #[arg(long)]
        system: PathBuf,
        /// Linkage JSON file (entries plus optional default fill).
        #[arg(long)]
        linkage: PathBuf,
        /// Truncation level; defaults to the system rank.
        #[arg(long)]
        k: Option<usize>,
        /// Output file for the function table (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Proceed even when the linkage is not monotone.
        #[arg(long)]
        allow_nonmonotone: bool,
        /// Also assign values to the size-k members.
        #[arg(long)]
        extend_maximal: bool,
    },
    /// Build the canonical linkage of a set function.
    Dualize {
        #[arg(long)]
        system: PathBuf,
        /// Function JSON file, total on the members of size below k.
        #[arg(long)]
        function: PathBuf,
        /// Truncation level; defaults to the system rank.
        #[arg(long)]
        k: Option<usize>,
        /// Output file for the explicit linkage table (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Pointwise minimum of two linkage tables over one ground set.
    Meet {
        /// Exactly two linkage files.
        #[arg(long = "linkage", action = ArgAction::Append, required = true)]
        linkages: Vec<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate families of a class in canonical order.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// all | accessible | antimatroid | accessible-non-antimatroid
        #[arg(long)]
        class: String,
        /// Keep only families of rank exactly k.
        #[arg(long)]
        k: Option<usize>,
        /// Directory for one pretty-printed file per family
        /// (JSON lines on stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the theorem verification suites and emit their reports.
    Verify {
        #[arg(long)]
        n: usize,
        /// Selects suites: antimatroid, accessible, or all.
        #[arg(long, default_value = "all")]
        class: String,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Random linkage tables per system.
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        /// Enumerated functions take values in {0..codomain-max}.
        #[arg(long, default_value_t = 2)]
        codomain_max: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the worked two-element example instance files.
    Example {
        /// Write system.json, linkage.json, function.json here instead.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            USAGE
        }
    };
    ExitCode::from(code)
}

fn read_file(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_system(path: &Path) -> Result<SetFamily, String> {
    io::parse_system(&read_file(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_linkage(path: &Path, ground: Option<&GroundSet>) -> Result<LinkageFunction, String> {
    io::parse_linkage(&read_file(path)?, ground).map_err(|e| format!("{}: {e}", path.display()))
}

fn emit(out: &Option<PathBuf>, contents: &str) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, contents).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

fn resolve_level(family: &SetFamily, k: Option<usize>) -> Result<usize, String> {
    let rank = family.rank();
    if rank == 0 {
        return Err("system has rank 0; no truncation level exists".into());
    }
    let k = k.unwrap_or(rank);
    if k < 1 || k > rank {
        return Err(format!("k = {k} is outside 1..={rank}"));
    }
    Ok(k)
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Check { system } => cmd_check(&system),
        Command::Extract {
            system,
            linkage,
            k,
            out,
            allow_nonmonotone,
            extend_maximal,
        } => cmd_extract(
            &system,
            &linkage,
            k,
            &out,
            allow_nonmonotone,
            extend_maximal,
        ),
        Command::Dualize {
            system,
            function,
            k,
            out,
        } => cmd_dualize(&system, &function, k, &out, cli.verbose),
        Command::Meet { linkages, out } => cmd_meet(&linkages, &out),
        Command::Enumerate { n, class, k, out } => cmd_enumerate(n, &class, k, &out),
        Command::Verify {
            n,
            class,
            seed,
            samples,
            codomain_max,
            out,
        } => cmd_verify(n, &class, seed, samples, codomain_max, &out),
        Command::Example { out_dir } => cmd_example(&out_dir),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_check(path: &Path) -> Result<u8, String> {
    let family = load_system(path)?;
    println!("ground: {} elements", family.n());
    println!("members: {}", family.len());
    let accessible = family.is_accessible();
    println!("accessible: {}", yes_no(accessible));
    println!("exchange (A2): {}", yes_no(family.satisfies_exchange()));
    println!("union-closed: {}", yes_no(family.is_union_closed()));
    match family.interval_violation() {
        None => println!("interval property: yes"),
        Some(v) => println!("interval property: no (fails at {v})"),
    }
    let rank = family.rank();
    println!("rank: {rank}");
    let antimatroid = family
        .is_antimatroid()
        .map_err(|e| format!("internal consistency failure: {e}"))?;
    if antimatroid {
        println!("antimatroid: yes, rank {rank}");
    } else if !accessible {
        println!("antimatroid: no (not accessible)");
    } else {
        let v = family
            .interval_violation()
            .expect("accessible non-antimatroid violates the interval property");
        println!("antimatroid: no (interval property fails at {v})");
    }
    for k in 1..=rank {
        match family
            .truncated_interval_violation(k)
            .map_err(|e| e.to_string())?
        {
            None => println!("truncated interval (k={k}): yes"),
            Some(v) => println!("truncated interval (k={k}): no (fails at {v})"),
        }
    }
    Ok(if antimatroid { OK } else { PROPERTY_FAILED })
}

fn cmd_extract(
    system: &Path,
    linkage: &Path,
    k: Option<usize>,
    out: &Option<PathBuf>,
    allow_nonmonotone: bool,
    extend_maximal: bool,
) -> Result<u8, String> {
    let family = load_system(system)?;
    let k = resolve_level(&family, k)?;
    let pi = load_linkage(linkage, Some(family.ground()))?;
    if let Some(v) = pi.monotonicity_violation() {
        eprintln!(
            "linkage is not monotone: π({}, {}) < π({}, {})",
            pi.ground().label(v.element),
            v.smaller,
            pi.ground().label(v.element),
            v.larger
        );
        if !allow_nonmonotone {
            return Ok(PROPERTY_FAILED);
        }
    }
    let f = extract_on_family(&pi, &family, k).map_err(|e| e.to_string())?;
    let f = if extend_maximal {
        extend_to_maximal(&f, &pi).map_err(|e| e.to_string())?
    } else {
        f
    };
    match f.quasi_concavity_violation() {
        None => eprintln!("quasi-concave: yes"),
        Some(v) => eprintln!(
            "quasi-concave: no (F({}) < min{{F({}), F({})}})",
            v.z, v.x, v.y
        ),
    }
    emit(out, &io::function_to_json(&f))?;
    Ok(OK)
}

fn cmd_dualize(
    system: &Path,
    function: &Path,
    k: Option<usize>,
    out: &Option<PathBuf>,
    verbose: bool,
) -> Result<u8, String> {
    let family = load_system(system)?;
    let k = resolve_level(&family, k)?;
    let f: SetFunction = io::parse_function(&read_file(function)?, &family, k)
        .map_err(|e| format!("{}: {e}", function.display()))?;
    match f.quasi_concavity_violation() {
        None => eprintln!("quasi-concave: yes"),
        Some(v) => eprintln!(
            "warning: function is not quasi-concave (F({}) < min{{F({}), F({})}}); \
             the canonical linkage cannot represent it",
            v.z, v.x, v.y
        ),
    }
    let canonical = build_canonical_linkage(&f).map_err(|e| e.to_string())?;
    if verbose {
        eprintln!("canonical linkage is monotone: {}", canonical.is_monotone());
    }
    let represented = match represents(&canonical, &f) {
        Ok(r) => r,
        Err(Error::EmptyContinuationSet(s)) => {
            return Err(format!(
                "no feasible continuation of {s}; cannot re-extract"
            ))
        }
        Err(e) => return Err(e.to_string()),
    };
    emit(out, &io::linkage_to_json(&canonical))?;
    eprintln!("represents: {}", yes_no(represented));
    Ok(if represented { OK } else { PROPERTY_FAILED })
}

fn cmd_meet(linkages: &[PathBuf], out: &Option<PathBuf>) -> Result<u8, String> {
    let [first, second] = linkages else {
        return Err(format!(
            "meet needs exactly two --linkage files, got {}",
            linkages.len()
        ));
    };
    let a = load_linkage(first, None)?;
    let b = load_linkage(second, Some(a.ground()))?;
    let met = a.meet(&b).map_err(|e| e.to_string())?;
    let monotone = met.is_monotone();
    emit(out, &io::linkage_to_json(&met))?;
    eprintln!("monotone: {}", yes_no(monotone));
    Ok(if monotone { OK } else { PROPERTY_FAILED })
}

fn parse_class(s: &str) -> Result<FamilyClass, String> {
    FamilyClass::parse(s).ok_or_else(|| {
        format!(
            "unknown class {s:?}; expected all, accessible, antimatroid, \
             or accessible-non-antimatroid"
        )
    })
}

fn cmd_enumerate(
    n: usize,
    class: &str,
    k: Option<usize>,
    out: &Option<PathBuf>,
) -> Result<u8, String> {
    let spec = EnumerationSpec {
        n,
        class: parse_class(class)?,
        k,
    };
    let families = match antimatroid::lab::enumerate_families(&spec) {
        Ok(f) => f,
        Err(e @ Error::GuardrailExceeded(_)) => return Err(e.to_string()),
        Err(e) => return Err(e.to_string()),
    };
    if let Some(dir) = out {
        fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
        let width = families.len().to_string().len().max(4);
        for (i, family) in families.iter().enumerate() {
            let path = dir.join(format!("system_{i:0width$}.json"));
            fs::write(&path, io::system_to_json(family))
                .map_err(|e| format!("{}: {e}", path.display()))?;
        }
    } else {
        for family in &families {
            println!("{}", io::system_to_compact_json(family));
        }
    }
    println!("count: {}", families.len());
    Ok(OK)
}

fn cmd_verify(
    n: usize,
    class: &str,
    seed: u64,
    samples: u64,
    codomain_max: i64,
    out: &Option<PathBuf>,
) -> Result<u8, String> {
    let spec = EnumerationSpec::new(n, parse_class(class)?);
    let opts = VerifyOptions {
        samples,
        codomain_max,
        ..VerifyOptions::default()
    };
    let reports = match verify_all(&spec, seed, &opts) {
        Ok(r) => r,
        Err(e) => return Err(e.to_string()),
    };
    for report in &reports {
        eprintln!(
            "{}: {} — {} of {} instances in {} ms",
            report.theorem,
            if report.passed() { "pass" } else { "FAIL" },
            report.passes,
            report.instances,
            report.elapsed_ms
        );
    }
    let json = format!(
        "{}\n",
        serde_json::to_string_pretty(&reports).expect("serializable reports")
    );
    emit(out, &json)?;
    let all_passed = reports.iter().all(|r| r.passed());
    Ok(if all_passed { OK } else { PROPERTY_FAILED })
}

fn cmd_example(out_dir: &Option<PathBuf>) -> Result<u8, String> {
    let ground = GroundSet::numeric(2).map_err(|e| e.to_string())?;
    let family = SetFamily::from_masks(&ground, 0..=3).map_err(|e| e.to_string())?;
    let pi = antimatroid::duality::example_linkage(&ground);
    let ta =
        antimatroid::TruncatedAntimatroid::from_antimatroid(&family).map_err(|e| e.to_string())?;
    let f = antimatroid::duality::extract_set_function(&pi, &ta).map_err(|e| e.to_string())?;

    let system_json = io::system_to_json(&family);
    let linkage_json = io::linkage_to_json(&pi);
    let function_json = io::function_to_json(&f);
    match out_dir {
        Some(dir) => {
            fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
            for (name, contents) in [
                ("system.json", &system_json),
                ("linkage.json", &linkage_json),
                ("function.json", &function_json),
            ] {
                let path = dir.join(name);
                fs::write(&path, contents).map_err(|e| format!("{}: {e}", path.display()))?;
            }
            eprintln!(
                "wrote system.json, linkage.json, function.json to {}",
                dir.display()
            );
        }
        None => {
            println!("# system.json");
            print!("{system_json}");
            println!("# linkage.json");
            print!("{linkage_json}");
            println!("# function.json");
            print!("{function_json}");
        }
    }
    Ok(OK)
}
