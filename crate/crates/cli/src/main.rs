use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use monocover::classify::{classify_complete, spanning_mono_small_diameter, CaseWitness};
use monocover::covers::{
    cover_alpha2, cover_general, cover_near_split, cover_stars, cover_via_cliques, detect_near_split,
    two_clique_cover,
};
use monocover::generators::{
    gen_antihole, gen_house_member, gen_k7_triple, gen_matching_complement, gen_p42, gen_random_alpha2,
    gen_random_graph, random_recoloring, AntiholeScheme,
};
use monocover::oracle::{exists_bounds_cover_with, min_cover_exact_with, OracleConfig, ORACLE_LIMIT};
use monocover::search::{enumerate_colorings, Mode, Predicate, SearchConfig, DEFAULT_BUDGET};
use monocover::text::{parse_bundle, parse_certificate, parse_graph, write_bundle, write_certificate, write_graph};
use monocover::{verify_cover, Color, ColoredGraph, CoverCertificate, CoverVerdict, Error};

const EXIT_REJECT: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_LIMIT: u8 = 3;

/// Monochromatic covers of edge-colored graphs.
#[derive(Parser)]
#[command(name = "monocover", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance and print it in the graph format.
    Gen(GenArgs),
    /// Classify a 2-colored complete graph by its color diameters.
    Classify {
        /// Graph file; standard input when omitted.
        input: Option<PathBuf>,
    },
    /// Build a cover certificate.
    Cover {
        #[arg(long, value_enum)]
        method: Method,
        input: Option<PathBuf>,
        /// Write the certificate here. Otherwise graph and certificate go to
        /// standard output and the summary to standard error.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a certificate against a graph.
    Verify {
        /// Graph file, or a graph followed by a certificate when --cert is
        /// omitted; standard input when omitted.
        input: Option<PathBuf>,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Exact minimum covers by exhaustive search.
    Oracle(OracleArgs),
    /// Run a predicate over all colorings of a host graph.
    Search(SearchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    P42,
    Antihole,
    K7triple,
    MatchingComplement,
    RandomAlpha2,
    Substitution,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum Scheme {
    DistanceSplit,
    Red,
    Blue,
}

#[derive(clap::Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long, default_value_t = 1)]
    copies: usize,
    /// Antihole on 2k+1 vertices.
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long, value_enum, default_value_t = Scheme::DistanceSplit)]
    scheme: Scheme,
    #[arg(long, default_value_t = 10)]
    n: usize,
    /// Edge probability for the random families.
    #[arg(long, default_value_t = 0.3)]
    p: f64,
    /// Part sizes of the house blow-up.
    #[arg(long, value_delimiter = ',', num_args = 5, default_values_t = [1, 1, 1, 1, 1])]
    sizes: Vec<usize>,
    /// Number of colors for `random` and `--recolor`.
    #[arg(long, default_value_t = 2)]
    colors: u8,
    /// Recolor every edge uniformly at random afterwards.
    #[arg(long)]
    recolor: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Alpha2,
    NearSplit,
    General,
    Stars,
    Cliques,
    TwoClique,
}

#[derive(clap::Args)]
struct OracleArgs {
    input: Option<PathBuf>,
    /// Print the minimum number of components of diameter at most D.
    #[arg(long, value_name = "D", conflicts_with = "bounds", required_unless_present = "bounds")]
    min_cover: Option<u32>,
    /// Find a cover whose components have these diameter bounds.
    #[arg(long, value_delimiter = ',', value_name = "D1,D2,...")]
    bounds: Option<Vec<u32>>,
    /// Also print the certificate attaining the minimum.
    #[arg(long)]
    cert: bool,
    #[arg(long, default_value_t = ORACLE_LIMIT)]
    limit: usize,
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

#[derive(clap::Args)]
struct SearchArgs {
    #[arg(long)]
    host: PathBuf,
    #[arg(long, default_value_t = 2)]
    colors: u8,
    /// has-bounds-cover:D1,D2,... | min-cover-at-most:D,K |
    /// constructive-matches-oracle | min-cover-value:D
    #[arg(long)]
    predicate: String,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Evaluate this many uniformly sampled colorings instead of all.
    #[arg(long)]
    sample: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = ORACLE_LIMIT)]
    limit: usize,
}

/// A failure carrying its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SizeLimit { .. } => EXIT_LIMIT,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn read_input(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).map_err(|e| usage(format!("cannot read {}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| usage(format!("cannot read standard input: {e}")))?;
            Ok(s)
        }
    }
}

fn read_graph(path: Option<&Path>) -> Result<ColoredGraph, Failure> {
    Ok(parse_graph(&read_input(path)?)?)
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool, Failure> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| usage(format!("cannot start worker pool: {e}")))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(args) => run_gen(&args),
        Command::Classify { input } => run_classify(input.as_deref()),
        Command::Cover { method, input, out } => run_cover(method, input.as_deref(), out.as_deref()),
        Command::Verify { input, cert } => run_verify(input.as_deref(), cert.as_deref()),
        Command::Oracle(args) => run_oracle(&args),
        Command::Search(args) => run_search(&args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("monocover: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run_gen(a: &GenArgs) -> Result<u8, Failure> {
    let scheme = match a.scheme {
        Scheme::DistanceSplit => AntiholeScheme::DistanceSplit,
        Scheme::Red => AntiholeScheme::Uniform(Color::RED),
        Scheme::Blue => AntiholeScheme::Uniform(Color::BLUE),
    };
    let (g, label) = match a.family {
        Family::P42 => (gen_p42(a.copies)?, format!("p42 copies={}", a.copies)),
        Family::Antihole => (gen_antihole(a.k, scheme)?, format!("antihole k={}", a.k)),
        Family::K7triple => (gen_k7_triple(a.copies)?, format!("k7triple copies={}", a.copies)),
        Family::MatchingComplement => (gen_matching_complement(a.n)?, format!("matching-complement n={}", a.n)),
        Family::RandomAlpha2 => (gen_random_alpha2(a.n, a.p, a.seed)?, format!("random-alpha2 n={} p={}", a.n, a.p)),
        Family::Substitution => {
            let sizes: [usize; 5] = a.sizes.clone().try_into().map_err(|_| usage("--sizes takes five values"))?;
            (gen_house_member(sizes, a.seed)?, format!("substitution sizes={sizes:?}"))
        }
        Family::Random => (
            gen_random_graph(a.n, a.p, a.colors, a.seed)?,
            format!("random n={} p={} colors={}", a.n, a.p, a.colors),
        ),
    };
    let g = if a.recolor {
        random_recoloring(&g, a.colors, a.seed)?
    } else {
        g
    };
    println!("# {label}{}", if a.recolor { " recolored" } else { "" });
    println!("# seed {}", a.seed);
    print!("{}", write_graph(&g));
    Ok(0)
}

fn run_classify(input: Option<&Path>) -> Result<u8, Failure> {
    let g = read_graph(input)?;
    let v = classify_complete(&g)?;
    println!("case: {:?}", v.case);
    println!("diameters: red {}, blue {}", v.diameters[0], v.diameters[1]);
    println!("roles swapped: {}", v.role_swap);
    match &v.witness {
        CaseWitness::House(h) => {
            println!(
                "house: x1 = {}, x2 = {}, A3 = {}, A4 = {}, A5 = {}, dense color {:?}",
                h.x1,
                h.x2,
                h.a3,
                h.a4,
                h.a5,
                h.dense_color()
            );
        }
        CaseWitness::Bases { red, blue } => {
            println!("double star bases: red ({}, {}), blue ({}, {})", red.0, red.1, blue.0, blue.1);
        }
        CaseWitness::DoubleStar { color, base } => {
            println!("double star base: {color:?} ({}, {})", base.0, base.1);
        }
        CaseWitness::None => {}
    }
    let s = spanning_mono_small_diameter(&g)?;
    println!("spanning color: {:?} with diameter {}", s.color, s.diameter);
    Ok(0)
}

fn run_cover(method: Method, input: Option<&Path>, out: Option<&Path>) -> Result<u8, Failure> {
    let g = read_graph(input)?;
    let cert = match method {
        Method::Alpha2 => cover_alpha2(&g)?,
        Method::NearSplit => {
            let s = detect_near_split(&g).ok_or_else(|| usage("graph has no near-split structure"))?;
            cover_near_split(&g, &s)?
        }
        Method::General => cover_general(&g)?,
        Method::Stars => cover_stars(&g)?,
        Method::Cliques => cover_via_cliques(&g)?,
        Method::TwoClique => two_clique_cover(&g)?,
    };
    let bounds: Vec<String> = cert.bounds().iter().map(u32::to_string).collect();
    let summary = format!("components: {}\nbounds: {}", cert.len(), bounds.join(" "));
    match out {
        Some(path) => {
            fs::write(path, write_certificate(&cert))
                .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
            println!("{summary}");
        }
        None => {
            print!("{}", write_bundle(&g, &cert));
            eprintln!("{summary}");
        }
    }
    Ok(0)
}

fn run_verify(input: Option<&Path>, cert: Option<&Path>) -> Result<u8, Failure> {
    let (g, cert): (ColoredGraph, CoverCertificate) = match cert {
        Some(path) => (read_graph(input)?, parse_certificate(&read_input(Some(path))?)?),
        None => parse_bundle(&read_input(input)?)?,
    };
    match verify_cover(&g, &cert) {
        CoverVerdict::Accept => {
            println!("accept: {} components, bounds {:?}", cert.len(), cert.bounds());
            Ok(0)
        }
        verdict => {
            println!("{verdict}");
            Ok(EXIT_REJECT)
        }
    }
}

fn run_oracle(a: &OracleArgs) -> Result<u8, Failure> {
    let g = read_graph(a.input.as_deref())?;
    let config = OracleConfig {
        limit: a.limit,
        parallel: true,
    };
    let pool = pool(a.jobs)?;
    if let Some(d) = a.min_cover {
        let (k, cert) = pool.install(|| min_cover_exact_with(&g, d, &config))?;
        println!("{k}");
        if a.cert {
            print!("{}", write_certificate(&cert));
        }
        return Ok(0);
    }
    let bounds = a.bounds.as_deref().unwrap_or_default();
    match pool.install(|| exists_bounds_cover_with(&g, bounds, &config))? {
        Some(cert) => {
            print!("{}", write_certificate(&cert));
            Ok(0)
        }
        None => {
            println!("none: no cover with bounds {bounds:?}");
            Ok(EXIT_REJECT)
        }
    }
}

fn run_search(a: &SearchArgs) -> Result<u8, Failure> {
    let host = read_graph(Some(&a.host))?;
    let predicate: Predicate = a.predicate.parse()?;
    let mode = match a.sample {
        Some(count) => Mode::Sample { count, seed: a.seed },
        None => Mode::Exhaustive,
    };
    let config = SearchConfig {
        budget: a.budget,
        jobs: a.jobs,
        oracle_limit: a.limit,
    };
    let mut report = enumerate_colorings(&host, a.colors, &predicate, mode, &config)?;
    report.host = format!("{} ({})", a.host.display(), report.host);
    print!("{report}");
    Ok(if report.failed > 0 {
        EXIT_REJECT
    } else if report.partial {
        EXIT_LIMIT
    } else {
        0
    })
}
