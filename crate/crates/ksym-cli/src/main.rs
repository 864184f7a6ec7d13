//! `ksym`: command-line surface for the k-symmetric graph toolkit.
//!
//! Results go to stdout, diagnostics to stderr. Exit codes are a stable
//! contract: 0 = success / property holds, 1 = property fails, 2 = usage or
//! input error. Output is plain text (no color escapes), so NO_COLOR is
//! honored by construction.

mod io;
mod manifest;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use num_bigint::BigUint;
use serde_json::json;

use ksym_core::admissibility::{admissible_orders, joint_admissible_orders, OrderEntry};
use ksym_core::canon::automorphism_count;
use ksym_core::density::profile2;
use ksym_core::enumerate::{enumerate_small_orders, enumerate_unlabeled};
use ksym_core::inflation::{inflate, measured_3profile, predict_3profile};
use ksym_core::rational::{decimal_string, rational_json, Rational};
use ksym_core::search::{
    batch_stats, estimate_from_rate, run_search, sample_2symmetric, trial_rng, SampleConfig,
};
use ksym_core::symmetry::{is_almost_3_symmetric, is_k_symmetric, symmetry_report};
use ksym_core::{emit_graph6, Graph};

use io::{read_graph, render_graph, GraphFormat};
use manifest::{file_digest, load_manifest, RunManifest};

#[derive(Parser)]
#[command(name = "ksym", version, about = "Exact tools for k-symmetric graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether a graph is k-symmetric; prints a per-class table and JSON
    Check {
        /// Graph file (graph6 or 0/1 adjacency matrix)
        input: PathBuf,
        /// Subgraph order to test (2..=4)
        #[arg(short, long)]
        k: usize,
        /// Input format
        #[arg(long, value_enum, default_value = "auto")]
        format: GraphFormat,
    },
    /// List k-admissible orders in OEIS b-file style (index value per line)
    Admissible {
        /// Subgraph order (2..=4)
        #[arg(short, long)]
        k: u64,
        /// Largest order to list
        #[arg(long)]
        limit: u64,
        /// Keep only orders admissible for every j in 2..=k
        #[arg(long)]
        joint: bool,
    },
    /// Build inflate(G, H) and report predicted vs measured densities
    Inflate {
        /// File holding G
        g: PathBuf,
        /// File holding H
        h: PathBuf,
        /// Write the constructed graph here instead of stdout
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Output format for the constructed graph
        #[arg(long, value_enum, default_value = "graph6")]
        emit: GraphFormat,
        /// Exit nonzero if any prediction disagrees with measurement
        #[arg(long)]
        verify: bool,
        /// Input format
        #[arg(long, value_enum, default_value = "auto")]
        format: GraphFormat,
    },
    /// Sample 2-symmetric graphs and count/collect the 3-symmetric ones
    Search {
        /// Graph order (needs C(n,2) even)
        #[arg(short = 'n', long = "order")]
        order: usize,
        /// Number of sampling trials
        #[arg(long)]
        trials: u64,
        /// RNG seed
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write found graphs to this file, one graph6 line each
        #[arg(long)]
        out: Option<PathBuf>,
        /// Retain at most this many found graphs
        #[arg(long, default_value_t = 1000)]
        collect_limit: usize,
        /// Compute clique/degree statistics on up to this many found graphs
        #[arg(long)]
        stats_sample: Option<usize>,
        /// Write histogram CSVs with this path prefix
        #[arg(long)]
        csv: Option<PathBuf>,
        /// 2-symmetric population count; prints the paper-methodology
        /// population estimate hit_rate x population
        #[arg(long)]
        population: Option<String>,
    },
    /// Count unlabeled classes of order n <= 8 (total, 2-symmetric,
    /// 3-symmetric, self-complementary)
    Enumerate {
        #[arg(short = 'n', long = "order")]
        order: usize,
        /// Dump all 3-symmetric classes as graph6 lines
        #[arg(long)]
        dump_g6: Option<PathBuf>,
    },
    /// Convert a graph file between graph6 and matrix formats losslessly
    Convert {
        input: PathBuf,
        /// Target format
        #[arg(long, value_enum)]
        to: GraphFormat,
        /// Write here instead of stdout
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Input format
        #[arg(long, value_enum, default_value = "auto")]
        format: GraphFormat,
    },
    /// Sample almost-3-symmetric graphs, inflate pairs, and report whether any
    /// product is 3-symmetric (no result is asserted; the search space is a
    /// parameter)
    InflateSearch {
        /// Orders to sample from (each needs C(n,2) even)
        #[arg(long, value_delimiter = ',', default_value = "4,5,8")]
        orders: Vec<usize>,
        /// Random 2-symmetric samples to draw per order
        #[arg(long, default_value_t = 2000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Re-run a recorded manifest and verify outputs are reproduced bit for bit
    Replay { manifest: PathBuf },
}

fn main() -> ExitCode {
    // die quietly when a pipe closes, like other unix filters
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Check { input, k, format } => cmd_check(&input, k, format),
        Command::Admissible { k, limit, joint } => cmd_admissible(k, limit, joint),
        Command::Inflate {
            g,
            h,
            out,
            emit,
            verify,
            format,
        } => cmd_inflate(&g, &h, out.as_deref(), emit, verify, format),
        Command::Search {
            order,
            trials,
            seed,
            out,
            collect_limit,
            stats_sample,
            csv,
            population,
        } => cmd_search(
            order,
            trials,
            seed,
            out.as_deref(),
            collect_limit,
            stats_sample,
            csv.as_deref(),
            population.as_deref(),
        ),
        Command::Enumerate { order, dump_g6 } => cmd_enumerate(order, dump_g6.as_deref()),
        Command::Convert {
            input,
            to,
            out,
            format,
        } => cmd_convert(&input, to, out.as_deref(), format),
        Command::InflateSearch {
            orders,
            samples,
            seed,
        } => cmd_inflate_search(&orders, samples, seed),
        Command::Replay { manifest } => cmd_replay(&manifest),
    }
}

fn cmd_check(input: &Path, k: usize, format: GraphFormat) -> Result<u8> {
    let g = read_graph(input, format)?;
    let report = symmetry_report(&g, k)?;
    println!("graph: order {}, {} edges", report.order, g.edge_count());
    if report.trivial {
        println!("k = {k}: trivially {k}-symmetric (order below {k})");
    } else {
        println!(
            "k = {k}: {}{k}-symmetric",
            if report.is_symmetric { "" } else { "NOT " }
        );
        println!("edges  count  measured  expected  deviation");
        for entry in &report.entries {
            println!(
                "{:<6} {:<6} {:<9} {:<9} {}",
                entry.edges, entry.count, entry.measured, entry.expected, entry.deviation
            );
        }
    }
    println!("{:#}", report.to_json());
    Ok(if report.is_symmetric { 0 } else { 1 })
}

fn cmd_admissible(k: u64, limit: u64, joint: bool) -> Result<u8> {
    let entries: Vec<OrderEntry> = if joint {
        joint_admissible_orders(k, limit)?
    } else {
        admissible_orders(k, limit)?
    };
    for (index, entry) in entries.iter().enumerate() {
        println!("{} {}", index + 1, entry.n);
    }
    let trivial = entries.iter().filter(|e| e.trivial).count();
    eprintln!(
        "{} orders up to {limit} ({} trivially symmetric because the order is below k)",
        entries.len(),
        trivial
    );
    Ok(0)
}

fn cmd_inflate(
    g_path: &Path,
    h_path: &Path,
    out: Option<&Path>,
    emit: GraphFormat,
    verify: bool,
    format: GraphFormat,
) -> Result<u8> {
    let g = read_graph(g_path, format)?;
    let h = read_graph(h_path, format)?;
    let product = inflate(&g, &h)?;
    let rendered = render_graph(&product, emit)?;

    let predicted = predict_3profile(&g, &h)?;
    let measured = measured_3profile(&product);
    let verified = predicted == measured;

    let profile_json = |p: &ksym_core::InflationPrediction| {
        json!({
            "edge": rational_json(&p.edge_density),
            "triangle": rational_json(&p.triangle),
            "path": rational_json(&p.path),
            "single_edge": rational_json(&p.single_edge),
            "empty": rational_json(&p.empty),
        })
    };
    let mut doc = json!({
        "schema_version": ksym_core::JSON_SCHEMA_VERSION,
        "g_order": g.order(),
        "h_order": h.order(),
        "order": product.order(),
        "edge_count": product.edge_count(),
        "predicted": profile_json(&predicted),
        "measured": profile_json(&measured),
    });
    if verify {
        doc["verified"] = json!(verified);
    }

    match out {
        Some(path) => {
            let mut run = RunManifest::start("inflate", current_argv());
            run.parameter("emit", emit.name())
                .parameter("verify", verify);
            run.input(g_path)?;
            run.input(h_path)?;
            fs::write(path, &rendered)
                .with_context(|| format!("cannot write {}", path.display()))?;
            run.output(path)?;
            let manifest_path = run.write_next_to(path)?;
            eprintln!("wrote {} and {}", path.display(), manifest_path.display());
        }
        None => print!("{rendered}"),
    }
    println!("{doc:#}");
    if verify && !verified {
        eprintln!("prediction/measurement mismatch; this indicates an implementation bug");
        return Ok(1);
    }
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    order: usize,
    trials: u64,
    seed: u64,
    out: Option<&Path>,
    collect_limit: usize,
    stats_sample: Option<usize>,
    csv: Option<&Path>,
    population: Option<&str>,
) -> Result<u8> {
    let config = SampleConfig::new(order, trials, seed, collect_limit)?;
    let outcome = run_search(&config);
    let rate = outcome.hit_rate();
    let mut doc = outcome.to_json();

    println!(
        "hit rate: {}/{} = {} = {}%",
        outcome.hits,
        trials,
        rate,
        decimal_string(&(rate.clone() * Rational::from_integer(100.into())), 4)
    );

    let mut primary_output: Option<PathBuf> = None;
    if let Some(path) = out {
        let mut lines = String::new();
        for g in &outcome.found {
            lines.push_str(&emit_graph6(g));
            lines.push('\n');
        }
        fs::write(path, lines).with_context(|| format!("cannot write {}", path.display()))?;
        primary_output = Some(path.to_path_buf());
    }

    if let Some(limit) = stats_sample {
        let sample: Vec<Graph> = outcome.found.iter().take(limit).cloned().collect();
        if sample.is_empty() {
            eprintln!("no found graphs to compute statistics on");
        } else {
            let stats = batch_stats(&sample)?;
            doc["stats"] = stats.to_json();
            if let Some(prefix) = csv {
                let clique_path = path_with_suffix(prefix, "-clique.csv");
                let degree_path = path_with_suffix(prefix, "-degree.csv");
                fs::write(&clique_path, stats.clique_csv())?;
                fs::write(&degree_path, stats.degree_csv())?;
                if primary_output.is_none() {
                    primary_output = Some(clique_path.clone());
                }
                eprintln!(
                    "wrote {} and {}",
                    clique_path.display(),
                    degree_path.display()
                );
            }
        }
    }

    if let Some(pop) = population {
        let pop = BigUint::from_str(pop).context("population must be a decimal integer")?;
        let estimate = estimate_from_rate(&rate, &pop);
        doc["population_estimate"] = json!({
            "population_2sym": pop.to_string(),
            "estimate": estimate.to_string(),
            "methodology": "paper methodology: labeled-sample hit rate times population count",
        });
        println!("estimated 3-symmetric population: {estimate} (paper methodology)");
    }

    println!("{doc:#}");
    eprintln!(
        "sampled {} graphs of order {} in {:?}",
        trials, order, outcome.elapsed
    );

    if let Some(path) = primary_output {
        let mut run = RunManifest::start("search", current_argv());
        run.parameter("order", order)
            .parameter("trials", trials)
            .parameter("collect_limit", collect_limit)
            .seed(seed);
        run.output(&path)?;
        if let (Some(prefix), Some(_)) = (csv, stats_sample) {
            let degree_path = path_with_suffix(prefix, "-degree.csv");
            if degree_path.exists() && degree_path != path {
                run.output(&degree_path)?;
            }
            let clique_path = path_with_suffix(prefix, "-clique.csv");
            if clique_path.exists() && clique_path != path {
                run.output(&clique_path)?;
            }
        }
        let manifest_path = run.write_next_to(&path)?;
        eprintln!("manifest: {}", manifest_path.display());
    }
    Ok(0)
}

fn cmd_enumerate(order: usize, dump_g6: Option<&Path>) -> Result<u8> {
    let result = enumerate_small_orders(order)?;
    println!(
        "order {}: {} classes, {} two-symmetric, {} three-symmetric, {} self-complementary ({} of those 3-symmetric)",
        result.order,
        result.total_classes,
        result.two_symmetric_classes,
        result.three_symmetric_classes,
        result.self_complementary_classes,
        result.self_complementary_three_symmetric_classes,
    );
    let mut doc = result.to_json();

    // both ratio flavors: class counts vs orbit-weighted labeled counts
    if result.two_symmetric_classes > 0 {
        let classes = enumerate_unlabeled(order)?;
        let factorial: u64 = (1..=order as u64).product();
        let mut labeled_2sym = 0u64;
        let mut labeled_3sym = 0u64;
        for g in &classes {
            let p = profile2(g);
            if p.edges == p.nonedges {
                let orbit = factorial / automorphism_count(g)?;
                labeled_2sym += orbit;
                if ksym_core::search::is_3symmetric_fast(g) {
                    labeled_3sym += orbit;
                }
            }
        }
        let unlabeled = Rational::new(
            result.three_symmetric_classes.into(),
            result.two_symmetric_classes.into(),
        );
        let labeled = Rational::new(labeled_3sym.into(), labeled_2sym.into());
        println!(
            "3-symmetric share of 2-symmetric: unlabeled {}/{} = {}, labeled {}/{} = {}",
            result.three_symmetric_classes,
            result.two_symmetric_classes,
            decimal_string(&unlabeled, 6),
            labeled_3sym,
            labeled_2sym,
            decimal_string(&labeled, 6),
        );
        doc["unlabeled_ratio"] = rational_json(&unlabeled);
        doc["labeled_ratio"] = rational_json(&labeled);
    }
    println!("{doc:#}");

    if let Some(path) = dump_g6 {
        let classes = enumerate_unlabeled(order)?;
        let mut lines = String::new();
        for g in classes
            .iter()
            .filter(|g| ksym_core::search::is_3symmetric_fast(g))
        {
            lines.push_str(&emit_graph6(g));
            lines.push('\n');
        }
        fs::write(path, lines).with_context(|| format!("cannot write {}", path.display()))?;
        let mut run = RunManifest::start("enumerate", current_argv());
        run.parameter("order", order);
        run.output(path)?;
        let manifest_path = run.write_next_to(path)?;
        eprintln!("wrote {} and {}", path.display(), manifest_path.display());
    }
    Ok(0)
}

fn cmd_convert(
    input: &Path,
    to: GraphFormat,
    out: Option<&Path>,
    format: GraphFormat,
) -> Result<u8> {
    if to == GraphFormat::Auto {
        bail!("--to needs a concrete format: graph6 or matrix");
    }
    let g = read_graph(input, format)?;
    let rendered = render_graph(&g, to)?;
    io::ensure_lossless(&g, &rendered, to)?;
    match out {
        Some(path) => {
            fs::write(path, &rendered)
                .with_context(|| format!("cannot write {}", path.display()))?;
            let mut run = RunManifest::start("convert", current_argv());
            run.parameter("to", to.name());
            run.input(input)?;
            run.output(path)?;
            let manifest_path = run.write_next_to(path)?;
            eprintln!("wrote {} and {}", path.display(), manifest_path.display());
        }
        None => print!("{rendered}"),
    }
    Ok(0)
}

fn cmd_inflate_search(orders: &[usize], samples: u64, seed: u64) -> Result<u8> {
    // pools of almost-3-symmetric graphs per order, from seeded sampling
    let mut pools: Vec<(usize, Vec<Graph>)> = Vec::new();
    for (slot, &order) in orders.iter().enumerate() {
        let mut pool = Vec::new();
        for index in 0..samples {
            let mut rng = trial_rng(seed.wrapping_add(slot as u64), index);
            let g = sample_2symmetric(order, &mut rng)?;
            if is_almost_3_symmetric(&g) {
                pool.push(g);
            }
        }
        pool.sort_by_key(|g| g.upper_triangle_bits());
        pool.dedup();
        pools.push((order, pool));
    }

    let mut pairs_checked = 0u64;
    let mut found: Vec<(usize, usize, Graph)> = Vec::new();
    for (go, gs) in &pools {
        for (ho, hs) in &pools {
            if go * ho > ksym_core::MAX_ORDER {
                continue;
            }
            for g in gs {
                for h in hs {
                    let product = inflate(g, h)?;
                    pairs_checked += 1;
                    debug_assert!(is_almost_3_symmetric(&product));
                    if is_k_symmetric(&product, 3)? {
                        found.push((*go, *ho, product));
                    }
                }
            }
        }
    }

    let doc = json!({
        "schema_version": ksym_core::JSON_SCHEMA_VERSION,
        "orders": orders,
        "samples_per_order": samples,
        "seed": seed,
        "pool_sizes": pools.iter().map(|(o, p)| json!({"order": o, "almost_3_symmetric": p.len()})).collect::<Vec<_>>(),
        "pairs_checked": pairs_checked,
        "three_symmetric_products": found.len(),
        "examples": found.iter().take(10).map(|(_, _, g)| emit_graph6(g)).collect::<Vec<_>>(),
    });
    println!("{doc:#}");
    eprintln!(
        "checked {pairs_checked} inflations of almost-3-symmetric factors; {} were 3-symmetric",
        found.len()
    );
    Ok(0)
}

fn cmd_replay(manifest_path: &Path) -> Result<u8> {
    let loaded = load_manifest(manifest_path)?;
    for (path, digest) in &loaded.input_digests {
        let now = file_digest(Path::new(path))?;
        if &now != digest {
            bail!("input {path} changed since the manifest was written; cannot replay");
        }
    }
    eprintln!("replaying: ksym {}", loaded.argv.join(" "));
    let mut argv = vec!["ksym".to_string()];
    argv.extend(loaded.argv.clone());
    let cli = Cli::try_parse_from(&argv).context("manifest argv does not parse")?;
    let code = run(cli.command)?;
    if code != 0 {
        return Ok(code);
    }
    let mut all_match = true;
    for (path, digest) in &loaded.output_digests {
        let now = file_digest(Path::new(path))?;
        let ok = &now == digest;
        all_match &= ok;
        println!(
            "output {path}: {}",
            if ok {
                "reproduced bit-for-bit"
            } else {
                "MISMATCH"
            }
        );
    }
    Ok(if all_match { 0 } else { 1 })
}

/// Raw program arguments after the binary name, recorded for replay.
fn current_argv() -> Vec<String> {
    std::env::args().skip(1).collect()
}

fn path_with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut name = prefix.file_name().unwrap_or_default().to_os_string();
    name.push(suffix);
    prefix.with_file_name(name)
}
