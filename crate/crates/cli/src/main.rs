use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use boolnet::dynamics::{attractors_of, strong_convergence, weak_convergence_of, StateGraph};
use boolnet::siggraph::{and_net, detect_circular, global_interaction_graph, local_interaction_graph};
use boolnet::subnetwork::{criticality, describe, find_eosd_subnetwork, subnetworks, FixedPointProfile};
use boolnet::theorems::{open_question_search, sweep_many, Generator, OpenQuestion, TheoremId};
use boolnet::{dot, BooleanNetwork, CircularForm, EosdClass, Error, SignedDigraph};
use clap::{Args, Parser, Subcommand, ValueEnum};

const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;
const EXIT_COUNTEREXAMPLE: u8 = 4;

/// Fixed points, subnetworks, interaction graphs and dynamics of Boolean networks.
#[derive(Parser)]
#[command(name = "boolnet", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summary of fixed points, classes, criticality and dynamics of a `.bn` network.
    Analyze { file: PathBuf },
    /// Every subnetwork with its fixed-point count and class.
    Subnets {
        file: PathBuf,
        /// Leave out the network itself.
        #[arg(long)]
        strict: bool,
        /// Only even- or odd-self-dual subnetworks.
        #[arg(long)]
        eosd: bool,
    },
    /// The global interaction graph, or the local one at `--at`, as `.sg` with its cycles.
    Graph {
        file: PathBuf,
        #[arg(long, value_name = "POINT")]
        at: Option<String>,
    },
    /// Asynchronous state graph summary.
    Dynamics {
        file: PathBuf,
        /// Also list every arc.
        #[arg(long)]
        arcs: bool,
    },
    /// Sweep a theorem over a candidate generator; exits 4 on a counterexample.
    Verify {
        /// Theorem name, a comma-separated list, or `all`.
        #[arg(long)]
        theorem: String,
        #[command(flatten)]
        gen: GenArgs,
    },
    /// Search for a counterexample to an open question; discoveries do not fail.
    Search {
        /// Q1_NEG_LOCAL_CYCLES or Q2_0CRITICAL_ANDNET (or Q1, Q2).
        #[arg(long)]
        question: String,
        #[command(flatten)]
        gen: GenArgs,
    },
    /// List theorem and open-question ids with their statements.
    Theorems,
    /// Write a graph as Graphviz DOT.
    ExportDot {
        /// A `.bn` network or a `.sg` signed digraph.
        #[arg(long)]
        input: PathBuf,
        /// `gf`, `gfx <POINT>` or `gamma`.
        #[arg(long, num_args = 1..=2, value_name = "WHAT", default_value = "gf")]
        what: Vec<String>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print a network in `.bn` form.
    #[command(group = clap::ArgGroup::new("source").required(true))]
    Gen {
        /// Circular network on `1..=N` with arc signs, e.g. `3 +-+`.
        #[arg(long, num_args = 2, value_names = ["N", "SIGNS"], group = "source", allow_hyphen_values = true)]
        circular: Option<Vec<String>>,
        /// And-net of a `.sg` signed digraph.
        #[arg(long, value_name = "SG", group = "source")]
        andnet: Option<PathBuf>,
        /// Uniformly random network of width N.
        #[arg(long, num_args = 2, value_names = ["N", "SEED"], group = "source")]
        random: Option<Vec<String>>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exhaustive,
    Sample,
    Family,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Andnets,
    RandomAndnets,
    Circular,
    Nonexpansive,
    Subsets,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum, default_value = "exhaustive")]
    mode: Mode,
    #[arg(long, value_enum)]
    family: Option<Family>,
    #[arg(long)]
    n: usize,
    /// Number of draws for sampled generators.
    #[arg(long, default_value_t = 100_000)]
    count: u64,
    #[arg(long)]
    seed: Option<u64>,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

impl GenArgs {
    fn seed(&self) -> Result<u64, Error> {
        self.seed
            .ok_or_else(|| Error::Usage("sampled generators need an explicit --seed".into()))
    }

    fn generator(&self, point_sets: bool) -> Result<Generator, Error> {
        let n = self.n;
        let count = self.count;
        let g = match (self.mode, self.family) {
            (Mode::Exhaustive, None) if point_sets => Generator::Subsets { n },
            (Mode::Exhaustive, None) => Generator::Exhaustive { n },
            (Mode::Sample, None) => Generator::Sample {
                n,
                count,
                seed: self.seed()?,
            },
            (Mode::Family, Some(Family::Andnets)) => Generator::AndNets { n },
            (Mode::Family, Some(Family::RandomAndnets)) => Generator::RandomAndNets {
                n,
                count,
                seed: self.seed()?,
            },
            (Mode::Family, Some(Family::Circular)) => Generator::Circular { n },
            (Mode::Family, Some(Family::Nonexpansive)) => Generator::NonExpansiveFiltered {
                n,
                count,
                seed: self.seed()?,
            },
            (Mode::Family, Some(Family::Subsets)) => Generator::Subsets { n },
            (Mode::Family, None) => return Err(Error::Usage("--mode family needs --family".into())),
            (_, Some(_)) => return Err(Error::Usage("--family only applies to --mode family".into())),
        };
        g.validate()?;
        Ok(g)
    }
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load_bn(path: &Path) -> Result<BooleanNetwork, Error> {
    BooleanNetwork::parse_bn(&read(path)?)
}

fn load_sg(path: &Path) -> Result<SignedDigraph, Error> {
    SignedDigraph::parse_sg(&read(path)?)
}

fn is_sg(path: &Path) -> bool {
    path.extension().is_some_and(|e| e == "sg")
}

fn set_literal<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    let items: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn analyze(file: &Path) -> Result<String, Error> {
    let f = load_bn(file)?;
    let gamma = StateGraph::new(&f)?;
    let report = criticality(&f)?;
    let mut kv = BTreeMap::new();
    kv.insert(
        "components",
        f.components()
            .labels()
            .iter()
            .map(|l| l.as_str())
            .collect::<Vec<_>>()
            .join(" "),
    );
    kv.insert("fixed_points", set_literal(f.fixed_points()));
    kv.insert("parity_class", f.parity_class().to_string());
    kv.insert("self_dual", f.is_self_dual().to_string());
    kv.insert("eosd_class", f.eosd_class().to_string());
    kv.insert("non_expansive", f.is_non_expansive().to_string());
    kv.insert("conjugate_bijective", f.is_conjugate_bijective().to_string());
    kv.insert(
        "eosd_subnetwork",
        find_eosd_subnetwork(&f).map_or("none".to_string(), |s| s.to_string()),
    );
    kv.insert(
        "circular",
        detect_circular(&f).map_or("none".to_string(), |(_, s)| s.to_string()),
    );
    kv.insert("criticality", report.label().to_string());
    let attractors: Vec<String> = attractors_of(&gamma).iter().map(|a| a.to_string()).collect();
    kv.insert("attractors", attractors.join(" "));
    kv.insert("weak_convergence", weak_convergence_of(&f, &gamma).to_string());
    kv.insert("strong_convergence", strong_convergence(&f)?.to_string());
    Ok(kv.into_iter().map(|(k, v)| format!("{k}: {v}\n")).collect())
}

fn subnets(file: &Path, strict: bool, eosd_only: bool) -> Result<String, Error> {
    let f = load_bn(file)?;
    let profile = FixedPointProfile::new(&f)?;
    let mut out = String::new();
    for (spec, h) in subnetworks(&f, !strict) {
        let class = h.eosd_class();
        if eosd_only && class == EosdClass::Neither {
            continue;
        }
        out.push_str(&format!(
            "{}  [fixed_points={} eosd_class={class}]\n",
            describe(&spec, &h),
            profile.count_spec(&spec)
        ));
    }
    Ok(out)
}

fn graph(file: &Path, at: Option<&str>) -> Result<String, Error> {
    let f = load_bn(file)?;
    let global = global_interaction_graph(&f);
    let g = match at {
        Some(x) => local_interaction_graph(&f, &f.components().parse_point(x)?)?,
        None => global.clone(),
    };
    let mut out = g.to_sg();
    for c in g.cycles() {
        let chordless = if g.is_chordless(&c)? { "chordless" } else { "chorded" };
        let deloc = global.delocalizing_vertices(&c)?;
        out.push_str(&format!("# cycle {c}  {} {chordless} delocalizing={deloc}\n", c.sign()));
    }
    Ok(out)
}

fn dynamics(file: &Path, list_arcs: bool) -> Result<String, Error> {
    let f = load_bn(file)?;
    let gamma = StateGraph::new(&f)?;
    let attractors: Vec<String> = attractors_of(&gamma).iter().map(|a| a.to_string()).collect();
    let mut out = format!(
        "arcs: {}\nattractors: {}\ncyclic_attractors: {}\nfixed_points: {}\nstrong_convergence: {}\nweak_convergence: {}\n",
        gamma.arc_count(),
        attractors.join(" "),
        attractors_of(&gamma).iter().filter(|a| a.is_cyclic()).count(),
        set_literal(f.fixed_points()),
        strong_convergence(&f)?,
        weak_convergence_of(&f, &gamma),
    );
    if list_arcs {
        let bits = |x: u32| f.components().point(x).to_string();
        for (x, y) in gamma.arcs() {
            out.push_str(&format!("{} -> {}\n", bits(x), bits(y)));
        }
    }
    Ok(out)
}

fn theorem_list(spec: &str, point_sets: bool) -> Result<Vec<TheoremId>, Error> {
    if spec.eq_ignore_ascii_case("all") {
        return Ok(TheoremId::ALL
            .iter()
            .copied()
            .filter(|t| t.is_point_set() == point_sets)
            .collect());
    }
    spec.split(',').map(|s| s.trim().parse()).collect()
}

fn verify(theorem: &str, args: &GenArgs) -> Result<(String, bool), Error> {
    let point_sets = args.family == Some(Family::Subsets)
        || (!theorem.eq_ignore_ascii_case("all") && theorem_list(theorem, false)?.iter().all(|t| t.is_point_set()));
    let ids = theorem_list(theorem, point_sets)?;
    let gen = args.generator(point_sets)?;
    let reports = sweep_many(&ids, &gen, args.jobs)?;
    let ok = reports.iter().all(|r| r.passed());
    let text = reports.iter().map(|r| r.render_timed()).collect::<Vec<_>>().join("\n");
    Ok((text, ok))
}

fn search(question: &str, args: &GenArgs) -> Result<String, Error> {
    let q: OpenQuestion = question.parse()?;
    let gen = args.generator(false)?;
    Ok(open_question_search(q, &gen, args.jobs)?.render_timed())
}

fn export_dot(input: &Path, what: &[String], out: &Path) -> Result<String, Error> {
    let what: Vec<&str> = what.iter().map(String::as_str).collect();
    let text = if is_sg(input) {
        match what.as_slice() {
            ["gf"] => dot::signed_digraph(&load_sg(input)?, "G"),
            _ => return Err(Error::Usage("a .sg input only supports --what gf".into())),
        }
    } else {
        let f = load_bn(input)?;
        match what.as_slice() {
            ["gf"] => dot::signed_digraph(&global_interaction_graph(&f), "G(f)"),
            ["gfx", x] => {
                let p = f.components().parse_point(x)?;
                dot::signed_digraph(&local_interaction_graph(&f, &p)?, &format!("Gf({p})"))
            }
            ["gamma"] => dot::state_graph(&StateGraph::new(&f)?, "gamma"),
            _ => return Err(Error::Usage("--what must be gf, gfx <POINT> or gamma".into())),
        }
    };
    dot::check(&text)?;
    fs::write(out, &text).map_err(|e| Error::Usage(format!("cannot write {}: {e}", out.display())))?;
    Ok(String::new())
}

fn parse_usize(text: &str, what: &str) -> Result<usize, Error> {
    text.parse()
        .map_err(|_| Error::Usage(format!("{what} must be a non-negative integer, got `{text}`")))
}

fn gen(circular: Option<&[String]>, andnet: Option<&Path>, random: Option<&[String]>) -> Result<String, Error> {
    let f = if let Some([n, signs]) = circular {
        let n = parse_usize(n, "N")?;
        if signs.chars().count() != n {
            return Err(Error::Usage(format!("expected {n} signs, got `{signs}`")));
        }
        CircularForm::standard(n, signs)?.network()
    } else if let Some(path) = andnet {
        and_net(&load_sg(path)?)?
    } else if let Some([n, seed]) = random {
        let seed = seed
            .parse()
            .map_err(|_| Error::Usage(format!("SEED must be an unsigned integer, got `{seed}`")))?;
        boolnet::network::random_network(parse_usize(n, "N")?, seed)?
    } else {
        return Err(Error::Usage("gen needs --circular, --andnet or --random".into()));
    };
    Ok(f.to_bn())
}

fn theorems() -> String {
    let mut out = String::new();
    for t in TheoremId::ALL {
        out.push_str(&format!("{}: {}\n", t.name(), t.statement()));
    }
    for q in OpenQuestion::ALL {
        out.push_str(&format!("{}: {}\n", q.name(), q.statement()));
    }
    out
}

fn run(cli: Cli) -> Result<(String, bool), Error> {
    let ok = |s: String| Ok((s, true));
    match cli.command {
        Command::Analyze { file } => ok(analyze(&file)?),
        Command::Subnets { file, strict, eosd } => ok(subnets(&file, strict, eosd)?),
        Command::Graph { file, at } => ok(graph(&file, at.as_deref())?),
        Command::Dynamics { file, arcs } => ok(dynamics(&file, arcs)?),
        Command::Verify { theorem, gen } => verify(&theorem, &gen),
        Command::Search { question, gen } => ok(search(&question, &gen)?),
        Command::Theorems => ok(theorems()),
        Command::ExportDot { input, what, out } => ok(export_dot(&input, &what, &out)?),
        Command::Gen {
            circular,
            andnet,
            random,
        } => ok(gen(circular.as_deref(), andnet.as_deref(), random.as_deref())?),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((text, passed)) => {
            print!("{text}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_COUNTEREXAMPLE)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_cap() { EXIT_CAP } else { EXIT_USAGE })
        }
    }
}
