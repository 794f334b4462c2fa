use std::io::Read;
use std::net::{IpAddr, SocketAddr};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use litgame_cli::api::{parse_params, Api};
use litgame_cli::render::{self, Numbering};
use litgame_core::classifier::{classify_graph, OrbitClassifier};
use litgame_core::game::{enumerate_orbits, replay, solve, Configuration, GameError, OrbitTable};
use litgame_core::graph::{generate_graph, parse_graph_any_indexed, structural_report, Graph, GraphKind};
use serde_json::json;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "litgame", version, about = "Analyze and play the lit-only sigma-game on graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Read and print vertices numbered from 1.
    #[arg(long, global = true)]
    one_indexed: bool,
    /// Largest graph order for exhaustive orbit search.
    #[arg(long, global = true, default_value_t = litgame_core::game::DEFAULT_ORBIT_CAP)]
    cap: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Nondegeneracy, line-graph test, Arf invariant and minimum light number.
    Analyze {
        /// Graph file, or `-` for stdin.
        path: String,
    },
    /// Shortest move sequence to a minimum-weight configuration.
    Solve {
        path: String,
        /// Bitstring or comma-separated list of on vertices.
        #[arg(long)]
        config: String,
    },
    /// Exhaustive orbit table.
    Orbits { path: String },
    /// Print a generated graph: path N, cycle N, complete N, star N, grid R C, tree N.
    Generate {
        kind: String,
        #[arg(allow_negative_numbers = true)]
        params: Vec<String>,
        /// Seed for random trees.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Run the JSON service.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: IpAddr,
    },
}

enum Failure {
    Parse(String),
    Cap(String),
    Other(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Other(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Cap(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Parse(m) | Failure::Cap(m) | Failure::Other(m) => m,
        }
    }
}

impl From<GameError> for Failure {
    fn from(e: GameError) -> Self {
        match e {
            GameError::CapExceeded { .. } => Failure::Cap(e.to_string()),
            _ => Failure::Parse(e.to_string()),
        }
    }
}

fn load(path: &str, one_indexed: bool) -> Result<Graph, Failure> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Other(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Other(format!("{path}: {e}")))?
    };
    parse_graph_any_indexed(&text, one_indexed).map_err(|e| Failure::Parse(format!("{path}: {e}")))
}

fn check_cap(g: &Graph, cap: usize) -> Result<(), Failure> {
    let n = g.order();
    if n > cap {
        return Err(Failure::Cap(format!("graph order {n} exceeds the orbit cap {cap}; raise --cap to search anyway")));
    }
    if n >= 18 {
        let mib = OrbitTable::memory_estimate_bytes(n) as f64 / (1 << 20) as f64;
        eprintln!("note: exhaustive search over 2^{n} configurations needs about {mib:.0} MiB");
    }
    Ok(())
}

fn print_json(value: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn run(cli: Cli) -> Result<(), Failure> {
    let num = Numbering { one_indexed: cli.one_indexed };
    match cli.command {
        Command::Analyze { path } => {
            let g = load(&path, cli.one_indexed)?;
            let report = classify_graph(&g);
            let structure = structural_report(&g);
            match cli.format {
                Format::Text => print!("{}", render::analysis(&report, &structure, num)),
                Format::Json => print_json(&json!({ "report": report, "structure": structure })),
            }
        }
        Command::Solve { path, config } => {
            let g = load(&path, cli.one_indexed)?;
            let f = Configuration::parse(&config, g.order(), cli.one_indexed)?;
            check_cap(&g, cli.cap)?;
            let sol = solve(&g, &f, cli.cap)?;
            let check = replay(&g, &f, &sol.moves)?;
            if !check.all_legal() || check.end != sol.target {
                return Err(Failure::Other("internal error: solver produced an illegal sequence".into()));
            }
            match cli.format {
                Format::Text => print!("{}", render::solution(&f, &sol, num)),
                Format::Json => print_json(&json!({
                    "start": f.to_bitstring(),
                    "target": sol.target.to_bitstring(),
                    "target_weight": sol.target.weight(),
                    "moves": sol.moves,
                })),
            }
        }
        Command::Orbits { path } => {
            let g = load(&path, cli.one_indexed)?;
            check_cap(&g, cli.cap)?;
            let table = enumerate_orbits(&g, cli.cap)?;
            let classes = OrbitClassifier::new(&g).ok().map(|c| {
                let n = g.order();
                table
                    .orbits()
                    .iter()
                    .map(|o| c.classify(&Configuration::from_bits(n, o.representative).unwrap()).unwrap())
                    .collect::<Vec<_>>()
            });
            match cli.format {
                Format::Text => print!("{}", render::orbits(&table, classes.as_deref(), num)),
                Format::Json => {
                    let orbits: Vec<_> = table
                        .orbits()
                        .iter()
                        .enumerate()
                        .map(|(i, o)| {
                            let mut v = serde_json::to_value(o).unwrap();
                            if let Some(c) = &classes {
                                v["orbit_class"] = serde_json::to_value(c[i]).unwrap();
                            }
                            v
                        })
                        .collect();
                    print_json(&json!({
                        "n": table.order(),
                        "orbit_count": table.orbit_count(),
                        "min_light": table.min_light_number(),
                        "orbits": orbits,
                    }));
                }
            }
        }
        Command::Generate { kind, params, seed } => {
            let kind: GraphKind = kind.parse().map_err(|e: litgame_core::graph::GraphError| Failure::Parse(e.to_string()))?;
            let params = parse_params(&params.join(",")).map_err(|e| Failure::Parse(e.message))?;
            let g = generate_graph(kind, &params, seed).map_err(|e| Failure::Parse(e.to_string()))?;
            match cli.format {
                Format::Text => print!("{}", render::graph_text(&g, num)),
                Format::Json => print_json(&g.to_json()),
            }
        }
        Command::Serve { port, host } => {
            let runtime = tokio::runtime::Runtime::new().map_err(|e| Failure::Other(e.to_string()))?;
            let api = Api { cap: cli.cap };
            runtime
                .block_on(litgame_cli::server::serve(api, SocketAddr::new(host, port)))
                .map_err(|e| Failure::Other(format!("server: {e}")))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
