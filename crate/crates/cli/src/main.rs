use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use oddgirth::budget::{Budget, DEFAULT_BUDGET};
use oddgirth::forbidden::{find_induced_phi, find_phi_prime, find_tetrahedron, ForbiddenError, Witness};
use oddgirth::format::{parse_edge_list, write_certificate, write_decomposition, write_edge_list};
use oddgirth::generators::{cycle, f_family, mobius_ladder, GeneratorSpec};
use oddgirth::harness::{
    check_theorem_instance, explore, verify_lemmas, verify_sharpness, verify_theorem, CampaignReport, InstanceCheck,
    Mode,
};
use oddgirth::hom::{constructive_c_hom, find_hom_bounded, independent_set_from_hom, HomError};
use oddgirth::graph::bits;
use oddgirth::parity::{odd_girth, Dist};
use oddgirth::saturation::{saturate, SaturationOrder};
use oddgirth::Graph;

/// Odd girth, homomorphisms into odd cycles and the structure of dense
/// graphs without short odd cycles.
///
/// Graphs are read as edge lists (`n m` then one `u v` pair per line) from
/// a file or from standard input when the path is `-`.
///
/// Exit status: 0 when the property holds, 1 when it fails or a witness is
/// found, 2 on usage or input errors.
#[derive(Parser, Debug)]
#[command(name = "oddgirth", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a generated graph as an edge list.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Print the odd girth (`inf` for bipartite graphs).
    Girth(Input),
    /// Add every edge that keeps the odd girth at least 2k+1.
    Saturate {
        #[arg(long)]
        k: usize,
        /// Shuffle the candidate pairs with this seed instead of taking
        /// them in lexicographic order.
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        input: Input,
    },
    /// Search for an induced phi, a phi' and a (2k+1)-tetrahedron. Prints
    /// one JSON record per configuration found, or `none`.
    Detect {
        #[arg(long)]
        k: usize,
        /// Search nodes allowed per detector.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[command(flatten)]
        input: Input,
    },
    /// Search for a homomorphism into a target graph.
    Hom {
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long)]
        k: usize,
        /// Degree of the target when it is `ffamily`.
        #[arg(long)]
        l: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[command(flatten)]
        input: Input,
    },
    /// Build the map into C_{2k+1} for a graph with odd girth at least 2k+1
    /// and minimum degree above 3n/4k, and check it.
    Check {
        #[arg(long)]
        k: usize,
        /// Also print the blow-up decomposition of the saturated graph.
        #[arg(long)]
        decomposition: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Print an independent set of at least kn/(2k+1) vertices, read off
    /// the map into C_{2k+1}.
    Indep {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Enumerate graphs below the degree threshold and report which of them
    /// map into C_{2k+1} or M_{4k}. Nothing is asserted.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Minimum degree must exceed this fraction, given as `a/b`.
        /// Defaults to 4n/(6k-1).
        #[arg(long)]
        above: Option<String>,
        /// Print the graphs that map into neither.
        #[arg(long)]
        list: bool,
    },
    /// Run a verification campaign.
    Verify {
        #[command(subcommand)]
        campaign: Campaign,
        /// Print the report as one JSON line.
        #[arg(long, global = true)]
        json: bool,
    },
}

#[derive(Args, Debug)]
struct Input {
    /// Edge-list file, or `-` for standard input.
    #[arg(default_value = "-")]
    path: String,
}

#[derive(Subcommand, Debug)]
enum Family {
    Cycle { r: usize },
    Complete { r: usize },
    Bipartite { a: usize, b: usize },
    Mobius { r: usize },
    /// The graph F(l, k).
    Ffamily { l: usize, k: usize },
    /// Replace each vertex of a base graph by an independent set.
    Blowup {
        /// `cycleR`, `completeR`, `mobiusR`, `bipartiteAxB`, `ffamilyLxK`
        /// or `grotzsch`.
        #[arg(long)]
        base: String,
        /// Comma-separated class sizes, one per base vertex.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
    },
    Grotzsch,
}

#[derive(clap::ValueEnum, Clone, Copy, Debug)]
enum Target {
    /// C_{2k+1}.
    Cycle,
    /// M_{4k}.
    Mobius,
    /// F(l, k); needs `--l`.
    Ffamily,
}

#[derive(Subcommand, Debug)]
enum Campaign {
    /// Every graph (or a seeded sample) meeting the hypotheses.
    Theorem {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n_max: usize,
        /// Sample instead of enumerating; needs `--samples`.
        #[arg(long, requires = "samples")]
        seed: Option<u64>,
        #[arg(long, requires = "seed")]
        samples: Option<usize>,
    },
    /// Balanced blow-up of M_{4k} with classes of size t.
    Sharpness {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
    },
    /// Random saturated graphs checked against both forbidden
    /// configurations.
    Lemmas {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: usize,
    },
}

fn read_graph(input: &Input) -> Result<Graph> {
    let text = if input.path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading standard input")?;
        s
    } else {
        fs::read_to_string(&input.path).with_context(|| format!("reading {}", input.path))?
    };
    parse_edge_list(&text).with_context(|| format!("parsing {}", input.path))
}

fn parse_base(spec: &str) -> Result<GeneratorSpec> {
    let num = |s: &str| s.parse::<usize>().with_context(|| format!("bad number in base {spec:?}"));
    let pair = |s: &str| -> Result<(usize, usize)> {
        let (a, b) = s.split_once('x').with_context(|| format!("base {spec:?} needs two numbers joined by `x`"))?;
        Ok((num(a)?, num(b)?))
    };
    let base = if spec == "grotzsch" {
        GeneratorSpec::Grotzsch
    } else if let Some(r) = spec.strip_prefix("cycle") {
        GeneratorSpec::Cycle(num(r)?)
    } else if let Some(r) = spec.strip_prefix("complete") {
        GeneratorSpec::Complete(num(r)?)
    } else if let Some(r) = spec.strip_prefix("mobius") {
        GeneratorSpec::MobiusLadder(num(r)?)
    } else if let Some(r) = spec.strip_prefix("bipartite") {
        let (a, b) = pair(r)?;
        GeneratorSpec::CompleteBipartite(a, b)
    } else if let Some(r) = spec.strip_prefix("ffamily") {
        let (l, k) = pair(r)?;
        GeneratorSpec::FFamily { l, k }
    } else {
        bail!("unknown base graph {spec:?}");
    };
    Ok(base)
}

fn parse_fraction(s: &str) -> Result<(usize, usize)> {
    let (a, b) = s.split_once('/').context("fraction must look like a/b")?;
    let (a, b) = (a.trim().parse()?, b.trim().parse()?);
    if b == 0 {
        bail!("denominator must be positive");
    }
    Ok((a, b))
}

fn need_k(k: usize) -> Result<()> {
    if k < 2 {
        bail!("k must be at least 2, got {k}");
    }
    Ok(())
}

fn report(r: &CampaignReport, json: bool) -> ExitCode {
    if json {
        println!("{}", r.to_json_line());
    } else {
        println!("{r}");
    }
    if r.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Gen { family } => {
            let spec = match family {
                Family::Cycle { r } => GeneratorSpec::Cycle(r),
                Family::Complete { r } => GeneratorSpec::Complete(r),
                Family::Bipartite { a, b } => GeneratorSpec::CompleteBipartite(a, b),
                Family::Mobius { r } => GeneratorSpec::MobiusLadder(r),
                Family::Ffamily { l, k } => GeneratorSpec::FFamily { l, k },
                Family::Blowup { base, sizes } => GeneratorSpec::Blowup { base: Box::new(parse_base(&base)?), sizes },
                Family::Grotzsch => GeneratorSpec::Grotzsch,
            };
            print!("{}", write_edge_list(&spec.build()?));
        }
        Command::Girth(input) => match odd_girth(&read_graph(&input)?) {
            Dist::Finite(l) => println!("odd_girth {l}"),
            Dist::Infinite => println!("odd_girth inf"),
        },
        Command::Saturate { k, seed, input } => {
            let order = seed.map_or(SaturationOrder::Lexicographic, SaturationOrder::SeededRandom);
            print!("{}", write_edge_list(&saturate(&read_graph(&input)?, k, order)?));
        }
        Command::Detect { k, budget, input } => {
            need_k(k)?;
            let g = read_graph(&input)?;
            let mut found = false;
            let mut inconclusive = Vec::new();
            if let Some(w) = find_induced_phi(&g) {
                println!("{}", Witness::Phi(w).to_json());
                found = true;
            }
            let results = [
                find_phi_prime(&g, k, &mut Budget::new(budget)).map(|w| w.map(Witness::PhiPrime)),
                find_tetrahedron(&g, k, &mut Budget::new(budget)).map(|w| w.map(Witness::Tetrahedron)),
            ];
            for (name, result) in ["phi_prime", "tetrahedron"].into_iter().zip(results) {
                match result {
                    Ok(Some(w)) => {
                        println!("{}", w.to_json());
                        found = true;
                    }
                    Ok(None) => {}
                    Err(ForbiddenError::SearchBudgetExceeded(n)) => inconclusive.push(format!("{name} after {n} nodes")),
                    Err(e) => return Err(e.into()),
                }
            }
            if !inconclusive.is_empty() {
                println!("inconclusive: {}", inconclusive.join(", "));
            } else if !found {
                println!("none");
            }
            return Ok(if found || !inconclusive.is_empty() { ExitCode::FAILURE } else { ExitCode::SUCCESS });
        }
        Command::Hom { target, k, l, budget, input } => {
            need_k(k)?;
            let h = match (target, l) {
                (Target::Cycle, _) => cycle(2 * k + 1)?,
                (Target::Mobius, _) => mobius_ladder(4 * k)?,
                (Target::Ffamily, Some(l)) => f_family(l, k)?,
                (Target::Ffamily, None) => bail!("--target ffamily needs --l"),
            };
            let g = read_graph(&input)?;
            match find_hom_bounded(&g, &h, &mut Budget::new(budget)) {
                Ok(Some(cert)) => print!("{}", write_certificate(&cert.map, h.n())),
                Ok(None) => {
                    println!("none");
                    return Ok(ExitCode::FAILURE);
                }
                Err(e @ HomError::SearchBudgetExceeded(_)) => {
                    println!("inconclusive: {e}");
                    return Ok(ExitCode::FAILURE);
                }
                Err(e) => return Err(e.into()),
            }
        }
        Command::Check { k, decomposition, input } => {
            need_k(k)?;
            let g = read_graph(&input)?;
            match check_theorem_instance(&g, k) {
                InstanceCheck::Passed { .. } => {
                    let out = constructive_c_hom(&g, k)?;
                    print!("{}", write_certificate(&out.certificate.map, 2 * k + 1));
                    if decomposition {
                        print!("{}", write_decomposition(&out.decomposition.classes));
                    }
                }
                InstanceCheck::Skipped => {
                    let why = match constructive_c_hom(&g, k) {
                        Err(e) => e.to_string(),
                        Ok(_) => "outside the hypotheses".into(),
                    };
                    eprintln!("not checked: {why}");
                    return Ok(ExitCode::FAILURE);
                }
                InstanceCheck::Failed { reason, witness } => {
                    eprintln!("check failed: {reason}");
                    if let Some(w) = witness {
                        print!("{w}");
                    }
                    return Ok(ExitCode::FAILURE);
                }
            }
        }
        Command::Indep { k, input } => {
            need_k(k)?;
            let g = read_graph(&input)?;
            let out = match constructive_c_hom(&g, k) {
                Ok(out) => out,
                Err(e @ HomError::HypothesisViolated(_)) => {
                    eprintln!("{e}");
                    return Ok(ExitCode::FAILURE);
                }
                Err(e) => return Err(e.into()),
            };
            let set = independent_set_from_hom(&g, &out.certificate, k)?;
            let members: Vec<String> = bits(set).map(|v| v.to_string()).collect();
            println!("independent_set {}", members.len());
            println!("{}", members.join(" "));
        }
        Command::Search { n, k, above, list } => {
            need_k(k)?;
            let threshold = match above {
                Some(s) => parse_fraction(&s)?,
                None => (4 * n, 6 * k - 1),
            };
            let e = explore(n, k, threshold)?;
            println!("n={} k={} min degree > {}/{}", e.n, e.k, threshold.0, threshold.1);
            println!("graphs {}", e.graphs);
            println!("into C{} {}", 2 * k + 1, e.into_cycle);
            println!("into M{} only {}", 4 * k, e.into_mobius_only);
            println!("neither {}", e.neither.len());
            if list {
                for g in &e.neither {
                    print!("{g}");
                }
            }
        }
        Command::Verify { campaign, json } => {
            let r = match campaign {
                Campaign::Theorem { k, n_max, seed, samples } => {
                    let mode = match (seed, samples) {
                        (Some(seed), Some(count)) => Mode::Sampled { seed, count },
                        _ => Mode::Exhaustive,
                    };
                    verify_theorem(k, n_max, mode)?
                }
                Campaign::Sharpness { k, t } => verify_sharpness(k, t)?,
                Campaign::Lemmas { k, seed, count } => verify_lemmas(k, seed, count)?,
            };
            return Ok(report(&r, json));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
