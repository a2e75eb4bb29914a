use anyhow::Result;
use clap::{Parser, Subcommand};
use deltachi_cli::run::{self, ConstructOpts};
use deltachi_core::rational::Rational;
use deltachi_core::search::DEFAULT_BUDGET;

#[derive(Parser)]
#[command(
    name = "deltachi",
    about = "Two-color chromatic thresholds of 3-chromatic graph pairs: \
             classification with certificates, extremal constructions, and \
             independent verification",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a pair: print the threshold value and the decision path
    Classify {
        /// First graph (zoo name or .g6 file)
        h1: String,
        /// Second graph (zoo name or .g6 file)
        h2: String,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Embeddability of a single graph (0..4)
    Emb {
        h: String,
        #[arg(long)]
        json: bool,
        /// Render the witnessing 5-partition as DOT
        #[arg(long)]
        dot: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Single-graph chromatic threshold (0, 1/3 or 1/2)
    Threshold {
        h: String,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Girth and odd girth of a graph
    Girth { h: String },
    /// Build a construction and write .g6/.cg6 plus a JSON parts manifest
    Construct {
        /// One of g1..g6, ramsey_k5, zykov, universal_forest, borsuk, bh,
        /// b1, b2, zoo:<name>
        id: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        /// Sphere dimension for surrogate parts
        #[arg(long, default_value_t = 3)]
        dim: usize,
        /// Near-antipodal radius for surrogate parts
        #[arg(long, default_value_t = 0.3)]
        eps: f64,
        /// Small-part fraction (exact rational, e.g. 0.05 or 1/20)
        #[arg(long, default_value = "0.05", value_parser = parse_rational)]
        alpha: Rational,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Part sizes for ramsey_k5, e.g. 3,3,3,3,3
        #[arg(long)]
        sizes: Option<String>,
        /// Slot graph: E=<builtin name or .g6 path>
        #[arg(long)]
        slot: Option<String>,
        /// Required slot girth (SlotViolation below this)
        #[arg(long)]
        min_girth: Option<usize>,
        /// Output path (payload; manifest goes to <path>.json)
        #[arg(short, long)]
        out: Option<String>,
    },
    /// Check a .cg6 build for a red copy of P1 or a blue copy of P2
    Verify {
        host: String,
        p1: String,
        p2: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Recompute both classification tables and diff against expectations
    ReproduceTables {
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Self-test: corrupt expected cell "i,j" and confirm the diff names it
        #[arg(long, hide = true, value_parser = parse_cell)]
        corrupt: Option<(usize, usize)>,
    },
    /// List built-in graphs with their classification data
    ListZoo,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    Rational::parse(s).ok_or_else(|| format!("cannot parse {s:?} as a rational"))
}

fn parse_cell(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected i,j")?;
    Ok((
        a.trim().parse().map_err(|e| format!("{e}"))?,
        b.trim().parse().map_err(|e| format!("{e}"))?,
    ))
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    let out = match cli.command {
        Command::Classify { h1, h2, json, budget } => run::cmd_classify(&h1, &h2, json, budget)?,
        Command::Emb { h, json, dot, budget } => run::cmd_emb(&h, json, dot, budget)?,
        Command::Threshold { h, json, budget } => run::cmd_threshold(&h, json, budget)?,
        Command::Girth { h } => run::cmd_girth(&h)?,
        Command::Construct {
            id,
            n,
            m,
            k,
            t,
            dim,
            eps,
            alpha,
            seed,
            sizes,
            slot,
            min_girth,
            out,
        } => {
            let slot = slot.map(|s| s.strip_prefix("E=").map(str::to_string).unwrap_or(s));
            let sizes = sizes.map(|s| run::parse_sizes(&s)).transpose()?;
            let opts =
                ConstructOpts { n, m, k, t, dim, eps, alpha, seed, sizes, slot, min_girth, out };
            run::cmd_construct(&id, &opts)?
        }
        Command::Verify { host, p1, p2, budget } => run::cmd_verify(&host, &p1, &p2, budget)?,
        Command::ReproduceTables { budget, corrupt } => {
            run::cmd_reproduce_tables(budget, corrupt)?
        }
        Command::ListZoo => run::cmd_list_zoo()?,
    };
    print!("{}", out.text);
    std::process::exit(out.code);
}
