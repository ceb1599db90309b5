//! The `tangleduct` command line.
//!
//! Exit status: 0 on success, 2 when a hypothesis of the duality theorems
//! fails (`NotFSeparable`, or `FNotStandard` without `--auto-standardize`),
//! 1 for everything else.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::backends::{graph_separations, separations_below, GraphInput, DEFAULT_MAX_CLOSURE};
use crate::duality::{
    first_unforced_trivial, standardize, strong_duality, verify_strong, verify_weak, weak_duality, Certificate,
    StrongOptions, Transcript,
};
use crate::error::Error;
use crate::essential::{essential_core, essentialize_stree, expand_to_f};
use crate::generate::demo_family;
use crate::io::{
    certificate_to_json, family_to_json, parse_certificate, parse_family, parse_system, sets_to_json,
    stree_to_json, Flavour, Loaded,
};
use crate::oracle::{classify, DEFAULT_CAP};
use crate::star::StarFamily;
use crate::stree::{contract_to_tight, validate_stree, STree};

#[derive(Parser, Debug)]
#[command(name = "tangleduct", version, about = "Tangles and S-trees of abstract separation systems")]
pub struct Cli {
    /// Cap on the size of the join/meet closure of set separations.
    #[arg(long, global = true, env = "TANGLEDUCT_MAX_CLOSURE", default_value_t = DEFAULT_MAX_CLOSURE)]
    pub max_closure: usize,
    /// Write the result here instead of stdout.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    /// Star family JSON.
    #[arg(long)]
    pub family: Option<PathBuf>,
    /// Use the demo family of a set system: singletons {(V, B)}, standardized.
    #[arg(long, conflicts_with = "family")]
    pub demo_family: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Only {
    Consistent,
    Avoiding,
    Tangle,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check a system (and optionally a family) and summarize it.
    Validate {
        system: PathBuf,
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// An F-avoiding orientation, or an S-tree over F.
    Weak {
        system: PathBuf,
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// An F-tangle, or an S-tree over F, for standard F.
    Strong {
        system: PathBuf,
        #[command(flatten)]
        family: FamilyArgs,
        /// Add missing cotrivial singletons instead of failing.
        #[arg(long)]
        auto_standardize: bool,
        /// Contract the final tree to a tight one.
        #[arg(long)]
        tighten: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Brute-force census, one JSON line per orientation.
    Tangles {
        system: PathBuf,
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        auto_standardize: bool,
        /// Print only orientations with this flag.
        #[arg(long, value_enum)]
        only: Option<Only>,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
        /// Refuse more nondegenerate separations than this.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Verify a certificate or a bare S-tree.
    CheckTree {
        system: PathBuf,
        certificate: PathBuf,
        /// Family to check against; defaults to the one in the certificate.
        #[arg(long)]
        family: Option<PathBuf>,
    },
    /// Strip trivial separations from every star of a family.
    EssentialCore {
        system: PathBuf,
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Turn an S-tree into an essential one, or expand it back over F.
    Essentialize {
        system: PathBuf,
        tree: PathBuf,
        /// Expand the essential tree to one over F again.
        #[arg(long)]
        expand: bool,
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// The separations of order < k of a graph, as set-separation JSON.
    GraphSk {
        /// Edge list, one "u v" pair per line.
        graph: PathBuf,
        #[arg(long)]
        k: usize,
    },
}

/// Why a command did not succeed.
#[derive(Debug)]
pub enum Failure {
    Lib(Error),
    Io(PathBuf, std::io::Error),
    /// The input was read but did not pass a check.
    Rejected(String),
    Usage(clap::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Lib(Error::NotFSeparable { .. } | Error::FNotStandard(_)) => 2,
            _ => 1,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Lib(e @ Error::FNotStandard(_)) => write!(f, "{e} (rerun with --auto-standardize)"),
            Failure::Lib(e) => write!(f, "{e}"),
            Failure::Io(p, e) => write!(f, "{}: {e}", p.display()),
            Failure::Rejected(m) => write!(f, "{m}"),
            Failure::Usage(e) => write!(f, "{e}"),
        }
    }
}

type Outcome = std::result::Result<String, Failure>;

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn load_system(path: &Path, max_closure: usize) -> std::result::Result<Loaded, Failure> {
    Ok(parse_system(&read(path)?, max_closure)?)
}

fn load_family(args: &FamilyArgs, loaded: &Loaded) -> std::result::Result<Option<StarFamily>, Failure> {
    if args.demo_family {
        let su = loaded
            .sets
            .as_ref()
            .ok_or_else(|| Failure::Rejected("--demo-family needs a set-separation system".into()))?;
        return Ok(Some(demo_family(su)));
    }
    match &args.family {
        Some(p) => Ok(Some(parse_family(&read(p)?, loaded)?)),
        None => Ok(None),
    }
}

/// Emits a certificate after reading the emitted JSON back and verifying
/// that again.
fn emit_certificate(
    loaded: &Loaded,
    cert: &Certificate,
    flavour: Flavour,
    family: &StarFamily,
    format: Format,
) -> Outcome {
    let sys = &loaded.system;
    let verify = |c: &Certificate| match flavour {
        Flavour::Weak => verify_weak(sys, family, c),
        Flavour::Strong => verify_strong(sys, family, c),
    };
    let transcript = verify(cert)?;
    if let Some(name) = transcript.first_failure() {
        return Err(Error::InternalInvariant(format!("certificate fails the check {name:?}")).into());
    }
    let text = pretty(&certificate_to_json(cert, flavour, &transcript, family, loaded));
    let back = parse_certificate(&text, loaded)?;
    if back.certificate != *cert || !verify(&back.certificate)?.all_passed() {
        return Err(Error::InternalInvariant("emitted certificate does not read back".into()).into());
    }
    Ok(match (format, cert) {
        (Format::Json, _) => text,
        (Format::Dot, Certificate::Tree(t)) => t.to_dot(loaded.universe()),
        (Format::Dot, Certificate::Orientation(o)) => {
            let u = loaded.universe();
            let mut out = String::from("digraph orientation {\n");
            for &s in o.picks() {
                out.push_str(&format!("  s{} [label=\"{}\"];\n", u.id(s), label(loaded, s)));
            }
            out.push_str("}\n");
            out
        }
    })
}

fn label(loaded: &Loaded, s: crate::universe::Sep) -> String {
    match &loaded.sets {
        Some(su) => su.describe(s),
        None => loaded.universe().id(s).to_string(),
    }
}

fn validate(loaded: &Loaded, family: Option<&StarFamily>) -> Outcome {
    let sys = &loaded.system;
    let u = sys.universe();
    if u.has_lattice() {
        u.check_laws()?;
    }
    let ids = |v: Vec<_>| u.ids(&v);
    let mut out = json!({
        "elements": u.len(),
        "members": sys.members().len(),
        "separations": sys.separations().len(),
        "degenerate": u.ids(sys.degenerate()),
        "small": ids(sys.members().iter().copied().filter(|&s| sys.is_small(s)).collect()),
        "trivial": ids(sys.trivial_members()),
        "lattice": u.has_lattice(),
    });
    if let Some(f) = family {
        if let Some(bad) = f.first_non_star(u) {
            return Err(Error::FNotStars(u.ids(bad.seps())).into());
        }
        let restricted = f.restrict_to(sys);
        let unforced = first_unforced_trivial(&restricted, sys);
        out["family"] = json!({
            "stars": f.len(),
            "inside_system": restricted.len(),
            "standard": unforced.is_none(),
            "unforced_trivial": unforced.map(|r| u.id(r)),
        });
    }
    Ok(pretty(&out))
}

fn tangles(loaded: &Loaded, family: &StarFamily, only: Option<Only>, cap: usize) -> Outcome {
    let sys = &loaded.system;
    let u = sys.universe();
    let mut out = String::new();
    for (index, c) in classify(sys, family, cap)?.into_iter().enumerate() {
        let tangle = c.consistent && c.avoiding;
        let keep = match only {
            None => true,
            Some(Only::Consistent) => c.consistent,
            Some(Only::Avoiding) => c.avoiding,
            Some(Only::Tangle) => tangle,
        };
        if keep {
            let line = json!({
                "index": index,
                "picks": u.ids(c.orientation.picks()),
                "consistent": c.consistent,
                "avoiding": c.avoiding,
                "tangle": tangle,
            });
            out.push_str(&serde_json::to_string(&line).expect("json values serialize"));
            out.push('\n');
        }
    }
    Ok(out)
}

fn check_tree(loaded: &Loaded, cert_path: &Path, family: Option<&Path>) -> Outcome {
    let file = parse_certificate(&read(cert_path)?, loaded)?;
    let family = match family {
        Some(p) => parse_family(&read(p)?, loaded)?,
        None => file
            .family
            .ok_or_else(|| Failure::Rejected("the certificate names no family; pass --family".into()))?,
    };
    let sys = &loaded.system;
    let transcript: Transcript = match file.flavour {
        Flavour::Weak => verify_weak(sys, &family, &file.certificate)?,
        Flavour::Strong => verify_strong(sys, &family, &file.certificate)?,
    };
    let mut out = json!({
        "kind": match (&file.certificate, file.flavour) {
            (Certificate::Tree(_), _) => "stree",
            (_, Flavour::Strong) => "tangle",
            (_, Flavour::Weak) => "orientation",
        },
        "theorem": if file.flavour == Flavour::Strong { "strong" } else { "weak" },
        "verified": transcript.all_passed(),
        "transcript": transcript,
    });
    if let Certificate::Tree(t) = &file.certificate {
        out["tree"] = json!(validate_stree(t, sys)?);
    }
    match transcript.first_failure() {
        None => Ok(pretty(&out)),
        Some(name) => {
            eprint!("{}", pretty(&out));
            Err(Failure::Rejected(format!("certificate rejected: check {name:?} failed")))
        }
    }
}

fn essentialize(loaded: &Loaded, tree_path: &Path, family: Option<StarFamily>, expand: bool) -> Outcome {
    let file = parse_certificate(&read(tree_path)?, loaded)?;
    let Certificate::Tree(t) = file.certificate else {
        return Err(Failure::Rejected(format!("{} holds an orientation, not an S-tree", tree_path.display())));
    };
    let sys = &loaded.system;
    let e = essentialize_stree(&t, sys)?;
    let out: STree = if expand {
        let f = family
            .or(file.family)
            .ok_or_else(|| Failure::Rejected("--expand needs a family".into()))?;
        let back = expand_to_f(&e, &standardize(&f, sys), sys)?;
        validate_stree(&back, sys)?;
        back
    } else {
        e
    };
    Ok(pretty(&stree_to_json(&out, loaded.universe())))
}

fn graph_sk(path: &Path, k: usize, max_closure: usize) -> Outcome {
    let g = GraphInput::parse_edge_list(&read(path)?)?;
    let su = graph_separations(&g, k, max_closure)?;
    Ok(pretty(&sets_to_json(&su.ground, &separations_below(&g, k)?)))
}

/// Runs one command and returns what it prints.
pub fn execute(cli: &Cli) -> Outcome {
    let mc = cli.max_closure;
    match &cli.command {
        Command::Validate { system, family } => {
            let loaded = load_system(system, mc)?;
            let f = load_family(family, &loaded)?;
            validate(&loaded, f.as_ref())
        }
        Command::Weak { system, family, format } => {
            let loaded = load_system(system, mc)?;
            let f = load_family(family, &loaded)?.unwrap_or_default();
            let cert = weak_duality(&loaded.system, &f)?;
            emit_certificate(&loaded, &cert, Flavour::Weak, &f.restrict_to(&loaded.system), *format)
        }
        Command::Strong { system, family, auto_standardize, tighten, format } => {
            let loaded = load_system(system, mc)?;
            let f = load_family(family, &loaded)?.unwrap_or_default();
            let run = strong_duality(&loaded.system, &f, StrongOptions { auto_standardize: *auto_standardize })?;
            let cert = match run.certificate {
                Certificate::Tree(t) if *tighten => Certificate::Tree(contract_to_tight(&t).compact().0),
                c => c,
            };
            emit_certificate(&loaded, &cert, Flavour::Strong, &run.family, *format)
        }
        Command::Tangles { system, family, auto_standardize, only, jobs, cap } => {
            let loaded = load_system(system, mc)?;
            let mut f = load_family(family, &loaded)?.unwrap_or_default();
            if let Some(bad) = f.first_non_star(loaded.universe()) {
                return Err(Error::FNotStars(loaded.universe().ids(bad.seps())).into());
            }
            if *auto_standardize {
                f = standardize(&f, &loaded.system);
            }
            match jobs {
                Some(n) => rayon::ThreadPoolBuilder::new()
                    .num_threads(*n)
                    .build()
                    .map_err(|e| Failure::Rejected(format!("cannot start {n} workers: {e}")))?
                    .install(|| tangles(&loaded, &f, *only, *cap)),
                None => tangles(&loaded, &f, *only, *cap),
            }
        }
        Command::CheckTree { system, certificate, family } => {
            let loaded = load_system(system, mc)?;
            check_tree(&loaded, certificate, family.as_deref())
        }
        Command::EssentialCore { system, family } => {
            let loaded = load_system(system, mc)?;
            let f = load_family(family, &loaded)?.unwrap_or_default();
            Ok(pretty(&family_to_json(&essential_core(&f, &loaded.system), loaded.universe())))
        }
        Command::Essentialize { system, tree, expand, family } => {
            let loaded = load_system(system, mc)?;
            let f = load_family(family, &loaded)?;
            essentialize(&loaded, tree, f, *expand)
        }
        Command::GraphSk { graph, k } => graph_sk(graph, *k, mc),
    }
}

/// Parses `args`, runs the command and writes its output.
pub fn run_from<I, T>(args: I) -> std::result::Result<(), Failure>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(Failure::Usage)?;
    let text = execute(&cli)?;
    match &cli.output {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Io(p.clone(), e)),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io(PathBuf::from("<stdout>"), e)),
    }
}

pub fn main() -> ExitCode {
    match run_from(std::env::args_os()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) if !e.use_stderr() => {
            let _ = e.print();
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("tangleduct: {f}");
            ExitCode::from(f.exit_code())
        }
    }
}
