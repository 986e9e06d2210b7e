//! Command-line front end: generators, verification, surgery, geometry,
//! and ledger bookkeeping, in reproducible reports.
//!
//! The same command line produces byte-identical stdout, modulo the version
//! banner (suppress it with --quiet). The environment variable
//! CONTACT_TRI_SEED is reserved; every algorithm here is deterministic.

mod checks;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use contact_tri::algebra::homology;
use contact_tri::complex::SimplicialComplex;
use contact_tri::generators as gen;
use contact_tri::generators::NamedComplex;
use contact_tri::geometry::{
    delta_hat, disk_containment_report, meridian_fit, off_export, t1_wall_model, DiskCenter,
    DiskSpec,
};
use contact_tri::ledger::{
    general_vertex_bound, s3_vertex_bound, t3_ledger, ContactClass, KnotClass,
};
use contact_tri::surgery::{
    connected_sum_canonical, quotient, s_chain, IdentificationScheme, TwistSign,
};
use contact_tri::symmetry::automorphism_group;

#[derive(Parser)]
#[command(
    name = "contact-tri",
    version,
    about = "Triangulated 3-manifolds: constructors, certificates, homology, symmetry, surgery, and contact-geometry checks",
    after_help = "Targets are generator names (see `generate --list`) or facet-list files.\n\
                  CONTACT_TRI_SEED is reserved; all algorithms are deterministic."
)]
struct Cli {
    /// Suppress the version banner.
    #[arg(long, global = true)]
    quiet: bool,
    /// Emit JSON instead of human-readable tables.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a named complex as a facet list.
    Generate {
        /// Generator name, or t3_family / t3_family_cube with --n.
        name: Option<String>,
        /// Family parameter for t3_family targets.
        #[arg(long)]
        n: Option<usize>,
        /// Write the facet list here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Additionally write the realization as an OFF mesh.
        #[arg(long)]
        off: Option<PathBuf>,
        /// List the available generator names.
        #[arg(long)]
        list: bool,
    },
    /// Run a verification suite; exit status 1 when any check fails.
    Verify {
        /// Suite or generator name.
        target: Option<String>,
        /// Run every suite.
        #[arg(long)]
        all: bool,
        /// Slice-grid size for the disk-fit checks.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Bisection tolerance for the disk-fit checks.
        #[arg(long, default_value_t = 1e-3)]
        tol: f64,
    },
    /// Face counts per dimension.
    Fvector {
        target: String,
        /// Family parameter for t3_family targets.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Integral homology.
    Homology {
        target: String,
        /// Family parameter for t3_family targets.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Automorphism group: order, generators, orbit counts.
    Aut {
        target: String,
        /// Vertex guard for the exhaustive search.
        #[arg(long, default_value_t = 16)]
        guard: usize,
    },
    /// Elementary connected sum of two complexes.
    Consum {
        a: String,
        b: String,
        /// Facet of the first summand, space-separated labels.
        #[arg(long)]
        sigma1: String,
        /// Facet of the second summand.
        #[arg(long)]
        sigma2: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Iterated sum chain with its twist ledger.
    Schain {
        #[arg(long)]
        n: u32,
        /// +, -, or 0.
        #[arg(long)]
        sign: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Collapse vertex classes from a class file (one class per line,
    /// members space-separated, first member is the representative).
    Quotient {
        target: String,
        #[arg(long)]
        classes: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Periodic cube triangulations with the twist ledger and disk report.
    T3 {
        /// 1 for the 40-vertex torus, n >= 2 for the 8n^3 family.
        #[arg(long)]
        n: u32,
        /// Twist tube radius in (1/4, 1/2).
        #[arg(long, default_value_t = 0.45)]
        r0: f64,
    },
    /// Meridional-disk fit of the solid-torus wall model.
    Delta {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 1e-3)]
        tol: f64,
    },
    /// Twist-invariant bookkeeping.
    Ledger {
        #[command(subcommand)]
        cmd: LedgerCmd,
    },
    /// OFF mesh export of a realized complex.
    Export {
        name: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum LedgerCmd {
    /// Fresh ledger at the reference structure.
    New {
        /// s3 or t3.
        #[arg(long)]
        manifold: String,
        #[arg(long)]
        f0: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply one twist to a ledger JSON.
    Twist {
        #[arg(long = "in")]
        input: PathBuf,
        /// Homology class "a,b,c" for a homologically nontrivial knot.
        #[arg(long)]
        class: Option<String>,
        /// Self-linking number for a null-homologous knot.
        #[arg(long, allow_hyphen_values = true)]
        sl: Option<i64>,
        #[arg(long, default_value_t = 3)]
        df0: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Vertex-count formulas.
    Bound {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        /// Base vertex count for the general formula.
        #[arg(long)]
        f0: Option<i64>,
    },
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {}", msg);
    ExitCode::from(2)
}

/// A target is a facet-list file if it exists on disk, otherwise a
/// generator name.
fn load_target(target: &str, n: Option<usize>) -> Result<NamedComplex, String> {
    if Path::new(target).exists() {
        let text = std::fs::read_to_string(target).map_err(|e| e.to_string())?;
        let complex = SimplicialComplex::parse_facet_list(&text).map_err(|e| e.to_string())?;
        return Ok(NamedComplex {
            name: target.to_string(),
            complex,
            realization: None,
            provenance: format!("facet-list file {}", target),
        });
    }
    match target {
        "t3_family" => gen::t3_family(n.ok_or("t3_family needs --n")?).map_err(|e| e.to_string()),
        "t3_family_cube" => {
            gen::t3_family_cube(n.ok_or("t3_family_cube needs --n")?).map_err(|e| e.to_string())
        }
        name => gen::by_name(name).map_err(|e| e.to_string()),
    }
}

fn write_or_print(text: &str, out: &Option<PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| e.to_string()),
        None => {
            print!("{}", text);
            Ok(())
        }
    }
}

fn parse_facet_arg(s: &str) -> Vec<String> {
    s.split_whitespace().map(|t| t.to_string()).collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if !cli.quiet {
        println!("contact-tri {}", env!("CARGO_PKG_VERSION"));
    }
    match run(&cli) {
        Ok(code) => code,
        Err(msg) => fail(msg),
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Generate {
            name,
            n,
            out,
            off,
            list,
        } => {
            if *list {
                for name in gen::names() {
                    println!("{}", name);
                }
                println!("t3_family (--n N)");
                println!("t3_family_cube (--n N)");
                return Ok(ExitCode::SUCCESS);
            }
            let name = name.as_ref().ok_or("generate needs a name (or --list)")?;
            let x = load_target(name, *n)?;
            write_or_print(&x.complex.to_facet_list(), out)?;
            if let Some(off_path) = off {
                let real = x
                    .realization
                    .as_ref()
                    .ok_or_else(|| format!("{} has no realization", x.name))?;
                let text = off_export(&x.complex, real).map_err(|e| e.to_string())?;
                std::fs::write(off_path, text).map_err(|e| e.to_string())?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            target,
            all,
            samples,
            tol,
        } => {
            let opts = checks::SuiteOptions {
                disk_samples: *samples,
                disk_tol: *tol,
            };
            let report = if *all || target.as_deref() == Some("all") {
                checks::check_all(&opts)
            } else {
                let t = target.as_ref().ok_or("verify needs a target or --all")?;
                checks::check_target(t, &opts).ok_or_else(|| {
                    format!(
                        "no suite named {}; suites: {}, cube77, or --all",
                        t,
                        checks::all_suites().join(", ")
                    )
                })?
            };
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?
                );
            } else {
                print!("{}", report.render_table());
            }
            Ok(ExitCode::from(report.exit_status() as u8))
        }
        Command::Fvector { target, n } => {
            let x = load_target(target, *n)?;
            let fv = x.complex.f_vector();
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "target": x.name,
                        "f_vector": fv.0,
                        "euler_characteristic": x.complex.euler_characteristic(),
                    })
                );
            } else {
                println!("f-vector: {}", fv);
                println!("euler characteristic: {}", x.complex.euler_characteristic());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Homology { target, n } => {
            let x = load_target(target, *n)?;
            let h = homology(&x.complex);
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&h).map_err(|e| e.to_string())?
                );
            } else {
                println!("H_* = {}", h.display());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Aut { target, guard } => {
            let x = load_target(target, None)?;
            let g = automorphism_group(&x.complex, *guard).map_err(|e| e.to_string())?;
            let cells = |k: usize| -> Vec<Vec<String>> {
                x.complex
                    .faces_of_dim(k)
                    .iter()
                    .map(|f| f.iter().map(|&v| x.complex.label(v).to_string()).collect())
                    .collect()
            };
            let edge_orbits = g.orbits(&cells(1)).len();
            let tri_orbits = g.orbits(&cells(2)).len();
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "target": x.name,
                        "order": g.order,
                        "generators": g.generators.iter().map(|p| p.cycle_notation()).collect::<Vec<_>>(),
                        "edge_orbits": edge_orbits,
                        "triangle_orbits": tri_orbits,
                    })
                );
            } else {
                println!("order: {}", g.order);
                for p in &g.generators {
                    println!("generator: {}", p.cycle_notation());
                }
                println!("edge orbits: {}", edge_orbits);
                println!("triangle orbits: {}", tri_orbits);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Consum {
            a,
            b,
            sigma1,
            sigma2,
            out,
        } => {
            let xa = load_target(a, None)?;
            let xb = load_target(b, None)?;
            let sum = connected_sum_canonical(
                &xa.complex,
                &xb.complex,
                &parse_facet_arg(sigma1),
                &parse_facet_arg(sigma2),
            )
            .map_err(|e| e.to_string())?;
            write_or_print(&sum.to_facet_list(), out)?;
            if out.is_some() && !cli.quiet {
                println!(
                    "f0 = {} (= {} + {} - 4)",
                    sum.vertex_count(),
                    xa.complex.vertex_count(),
                    xb.complex.vertex_count()
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Schain { n, sign, out } => {
            let sign = match sign.as_str() {
                "+" | "plus" => TwistSign::Plus,
                "-" | "minus" => TwistSign::Minus,
                "0" | "zero" => TwistSign::Zero,
                other => return Err(format!("sign {} is not +, -, or 0", other)),
            };
            let chain = s_chain(*n, sign).map_err(|e| e.to_string())?;
            if let Some(path) = out {
                std::fs::write(path, chain.complex.complex.to_facet_list())
                    .map_err(|e| e.to_string())?;
            }
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "name": chain.complex.name,
                        "f_vector": chain.complex.complex.f_vector().0,
                        "ledger": chain.ledger,
                    })
                );
            } else {
                println!("name: {}", chain.complex.name);
                println!("f-vector: {}", chain.complex.complex.f_vector());
                println!("ledger d2: {:?}", chain.ledger.d2);
                println!(
                    "ledger d3: {}",
                    serde_json::to_string(&chain.ledger.d3).unwrap()
                );
                println!("f0 bound: {}", chain.ledger.f0_bound);
                for (i, rec) in chain.ledger.history.iter().enumerate() {
                    println!(
                        "twist {}: {} (sl {:?}, df0 {})",
                        i + 1,
                        rec.knot,
                        rec.sl,
                        rec.delta_f0
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Quotient {
            target,
            classes,
            out,
        } => {
            let x = load_target(target, None)?;
            let text = std::fs::read_to_string(classes).map_err(|e| e.to_string())?;
            let class_lists: Vec<Vec<String>> = text
                .lines()
                .map(|l| l.split_whitespace().map(|s| s.to_string()).collect())
                .filter(|l: &Vec<String>| !l.is_empty())
                .collect();
            let scheme =
                IdentificationScheme::from_classes(class_lists).map_err(|e| e.to_string())?;
            let q = quotient(&x.complex, &scheme).map_err(|e| e.to_string())?;
            write_or_print(&q.to_facet_list(), out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::T3 { n, r0 } => {
            let x = if *n == 1 {
                gen::t3_40().map_err(|e| e.to_string())?
            } else {
                gen::t3_family(*n as usize).map_err(|e| e.to_string())?
            };
            let ledger = t3_ledger(*n, *r0).map_err(|e| e.to_string())?;
            let real = x.realization.as_ref().unwrap();
            let smallest = ledger
                .disks
                .first()
                .cloned()
                .unwrap_or_else(|| DiskSpec::new(DiskCenter::CubeCoreLine, r0 / 2.0, *r0, 1));
            let containment =
                disk_containment_report(&x.complex, real, &smallest).map_err(|e| e.to_string())?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "name": x.name,
                        "f_vector": x.complex.f_vector().0,
                        "ledger": ledger,
                        "containment": containment,
                    })
                );
            } else {
                println!("name: {}", x.name);
                println!("f-vector: {}", x.complex.f_vector());
                println!("ledger d2: {:?}", ledger.contact.d2);
                for d in &ledger.disks {
                    println!(
                        "disk {}: radius in ({:.6}, {:.6})",
                        d.twist_index, d.r_lo, d.r_hi
                    );
                }
                println!(
                    "containment: max facet diameter {:.6} vs smallest disk diameter {:.6} -> {} (margin {:.6})",
                    containment.max_facet_diameter,
                    containment.disk_diameter,
                    if containment.pass { "PASS" } else { "FAIL" },
                    containment.margin
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Delta { samples, tol } => {
            let model = t1_wall_model();
            let d = delta_hat(&model, *samples, *tol);
            let mid = meridian_fit(&model, 1.5 / 7.0, *tol);
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "delta_hat": d,
                        "mid_cell_fit": mid,
                        "samples": samples,
                        "tol": tol,
                        "below_one": d < 0.99,
                    })
                );
            } else {
                println!("delta_hat = {:.6} over {} slices (tol {})", d, samples, tol);
                println!("mid-cell fit f(1.5/7) = {:.6}", mid);
                println!("delta_hat < 0.99: {}", d < 0.99);
            }
            Ok(ExitCode::from(if d < 0.99 { 0 } else { 1 }))
        }
        Command::Ledger { cmd } => run_ledger(cli, cmd),
        Command::Export { name, n, out } => {
            // Periodic targets export their pre-quotient cube.
            let x = match name.as_str() {
                "t3_40" => gen::cube77().map_err(|e| e.to_string())?,
                "t3_family" => gen::t3_family_cube(n.ok_or("t3_family needs --n")?)
                    .map_err(|e| e.to_string())?,
                other => load_target(other, *n)?,
            };
            let real = x
                .realization
                .as_ref()
                .ok_or_else(|| format!("{} has no realization", x.name))?;
            let text = off_export(&x.complex, real).map_err(|e| e.to_string())?;
            write_or_print(&text, out)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_ledger(cli: &Cli, cmd: &LedgerCmd) -> Result<ExitCode, String> {
    match cmd {
        LedgerCmd::New { manifold, f0, out } => {
            let basis_rank = match manifold.as_str() {
                "s3" => 0,
                "t3" => 3,
                other => return Err(format!("manifold {} is not s3 or t3", other)),
            };
            let ledger = ContactClass::new(manifold, basis_rank, *f0);
            let text = serde_json::to_string_pretty(&ledger).map_err(|e| e.to_string())?;
            write_or_print(&(text + "\n"), out)?;
            Ok(ExitCode::SUCCESS)
        }
        LedgerCmd::Twist {
            input,
            class,
            sl,
            df0,
            out,
        } => {
            let text = std::fs::read_to_string(input).map_err(|e| e.to_string())?;
            let ledger: ContactClass = serde_json::from_str(&text).map_err(|e| e.to_string())?;
            let knot = match (class, sl) {
                (Some(c), None) => {
                    let coords: Result<Vec<i64>, _> =
                        c.split(',').map(|t| t.trim().parse::<i64>()).collect();
                    KnotClass::with_class("cli knot", coords.map_err(|e| e.to_string())?)
                }
                (None, Some(s)) => KnotClass::null_homologous("cli knot", *s),
                _ => return Err("give exactly one of --class or --sl".to_string()),
            };
            let next = ledger
                .apply_lutz(&knot, *df0, "applied from the command line")
                .map_err(|e| e.to_string())?;
            let text = serde_json::to_string_pretty(&next).map_err(|e| e.to_string())?;
            write_or_print(&(text + "\n"), out)?;
            Ok(ExitCode::SUCCESS)
        }
        LedgerCmd::Bound { n, f0 } => {
            let value = match f0 {
                None => s3_vertex_bound(*n),
                Some(f0) => general_vertex_bound(*f0, *n).map_err(|e| e.to_string())?,
            };
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({ "n": n, "f0": f0, "bound": value })
                );
            } else {
                println!("{}", value);
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
