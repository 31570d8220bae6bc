use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use schubiso::decide::SchubertReport;
use schubiso::poset::Limits;
use schubiso::render::{render_partition, render_skew};
use schubiso::verify::{self, Reference, Report};
use schubiso::{
    build_poset, richardson_isomorphic_sufficient, schubert_distinguishing_invariants, singular,
    BoxFrame, Error, Partition, RichardsonVerdict, SkewShape,
};

const CONJECTURE_NOTE: &str =
    "The posets are not semi-isomorphic. Non-isomorphism of the varieties \
would follow from the open conjecture that isomorphic Richardson varieties have semi-isomorphic \
cell posets; it is not proved here.";

/// Isomorphism tests for Grassmannian Schubert and Richardson varieties.
#[derive(Parser)]
#[command(name = "schubiso", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether X_λ and X_μ are isomorphic.
    CheckSchubert {
        lambda: Partition,
        mu: Partition,
        /// Print the invariant trace separating a non-isomorphic pair.
        #[arg(long)]
        explain: bool,
    },
    /// Test two skew shapes for semi-isomorphic cell posets.
    CheckRichardson {
        left: SkewShape,
        right: SkewShape,
        /// Print the unmatched components.
        #[arg(long)]
        explain: bool,
    },
    /// Partitions of the singular-locus components and of their intersection.
    Sing { lambda: Partition },
    /// Size of the longest hook.
    Xi { lambda: Partition },
    /// Number of subdiagrams of each size.
    Betti { lambda: Partition },
    /// Hasse diagram of the cell poset, as DOT (default) or JSON.
    Poset {
        shape: SkewShape,
        /// DOT output; the default unless --json is given.
        #[arg(long)]
        dot: bool,
    },
    /// Draw a partition or skew shape.
    Render { shape: SkewShape },
    /// Run an exhaustive verification sweep.
    Verify {
        sweep: Sweep,
        /// Box for the partition sweeps, as MxK.
        #[arg(long = "box")]
        frame: Option<BoxFrame>,
        /// Largest cell count for the skew-shape sweeps.
        #[arg(long)]
        max_cells: Option<usize>,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Search for pairs the invariant signature does not separate.
    Explore {
        #[command(subcommand)]
        what: Explore,
    },
}

#[derive(Subcommand)]
enum Explore {
    /// Non-semi-isomorphic shape pairs with equal invariant signatures.
    Collisions {
        #[arg(long, default_value_t = 6)]
        max_cells: usize,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Sweep {
    /// Singular-locus identities over a box.
    Sing,
    /// Diagonal against poset connectivity.
    Conn,
    /// Isomorphisms between connected shapes.
    Strongskew,
    /// Subdiagram count identities over a box.
    Betti,
    /// Rotation against the opposite poset, transposition against the poset.
    Dagger,
    /// Canonical classes against the matching definition.
    Semi,
}

/// Exit status; `Positive` also covers plain successful output.
enum Outcome {
    Positive,
    Negative,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(cli) {
        Ok(Outcome::Positive) => ExitCode::SUCCESS,
        Ok(Outcome::Negative) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::ResourceBound { .. } | Error::Overflow => 3,
                _ => 2,
            })
        }
    }
}

fn print_json(value: &impl Serialize) {
    println!("{}", serde_json::to_string(value).expect("serializable"));
}

fn run(cli: Cli) -> schubiso::Result<Outcome> {
    let json = cli.json;
    match cli.command {
        Command::CheckSchubert {
            lambda,
            mu,
            explain,
        } => {
            let report = schubert_distinguishing_invariants(&lambda, &mu)?;
            if json {
                print_json(&json!({
                    "lambda": lambda,
                    "mu": mu,
                    "isomorphic": report.is_isomorphic(),
                    "report": report,
                }));
            } else {
                match &report {
                    SchubertReport::Equal => println!("isomorphic: the partitions are equal"),
                    SchubertReport::Transposed => {
                        println!("isomorphic: {mu} is the transpose of {lambda}")
                    }
                    SchubertReport::NotIsomorphic { witness } => {
                        println!("not isomorphic");
                        if explain {
                            print!("{witness}");
                        }
                    }
                }
            }
            Ok(verdict(report.is_isomorphic()))
        }
        Command::CheckRichardson {
            left,
            right,
            explain,
        } => {
            let verdict_value = richardson_isomorphic_sufficient(&left, &right);
            let positive = verdict_value.is_isomorphic();
            if json {
                let mut value = serde_json::to_value(&verdict_value).expect("serializable");
                if !positive {
                    value["note"] = json!(CONJECTURE_NOTE);
                }
                print_json(&value);
            } else {
                match &verdict_value {
                    RichardsonVerdict::Isomorphic => {
                        println!("isomorphic: the cell posets are semi-isomorphic")
                    }
                    RichardsonVerdict::UnknownConjecturedNot {
                        unmatched_left,
                        unmatched_right,
                    } => {
                        println!("unknown (conjectured not isomorphic)");
                        if explain {
                            let list = |v: &[SkewShape]| {
                                v.iter()
                                    .map(|s| format!("[{s}]"))
                                    .collect::<Vec<_>>()
                                    .join(" ")
                            };
                            println!("unmatched components on the left: {}", list(unmatched_left));
                            println!(
                                "unmatched components on the right: {}",
                                list(unmatched_right)
                            );
                        }
                        println!("{CONJECTURE_NOTE}");
                    }
                }
            }
            Ok(verdict(positive))
        }
        Command::Sing { lambda } => {
            let smooth = singular::is_smooth(&lambda);
            let components = if lambda.is_empty() {
                Vec::new()
            } else {
                singular::sing_components(&lambda)?
            };
            let zero = if smooth {
                None
            } else {
                Some(singular::lambda_zero(&lambda)?)
            };
            if json {
                print_json(&json!({ "components": components, "lambda0": zero, "smooth": smooth }));
            } else if smooth {
                println!("{lambda} is a rectangle: the Schubert variety is smooth");
            } else {
                for (i, c) in components.iter().enumerate() {
                    println!("lambda^{} = {c}", i + 1);
                    println!("{}", render_partition(c));
                }
                let zero = zero.expect("not smooth");
                println!("lambda^0 = {zero}");
                println!("{}", render_partition(&zero));
            }
            Ok(Outcome::Positive)
        }
        Command::Xi { lambda } => {
            let xi = lambda.xi()?;
            if json {
                print_json(&json!({ "xi": xi }));
            } else {
                println!("{xi}");
            }
            Ok(Outcome::Positive)
        }
        Command::Betti { lambda } => {
            let counts = lambda.subdiagram_counts()?;
            if json {
                print_json(&json!({ "counts": counts }));
            } else {
                let text: Vec<String> = counts.iter().map(u128::to_string).collect();
                println!("{}", text.join(" "));
            }
            Ok(Outcome::Positive)
        }
        Command::Poset { shape, dot } => {
            let poset = build_poset(&shape);
            if json && !dot {
                print_json(&poset);
            } else {
                print!("{}", poset.to_dot());
            }
            Ok(Outcome::Positive)
        }
        Command::Render { shape } => {
            let text = render_skew(&shape);
            if json {
                print_json(&json!({ "shape": shape.to_string(), "text": text }));
            } else {
                println!("{text}");
            }
            Ok(Outcome::Positive)
        }
        Command::Verify {
            sweep,
            frame,
            max_cells,
            jobs,
        } => {
            let limits = Limits::default();
            let report = with_jobs(jobs, || match sweep {
                Sweep::Sing => Ok(verify::verify_sing_identities(
                    frame.unwrap_or(BoxFrame::new(6, 6)),
                    &Reference,
                )),
                Sweep::Betti => Ok(verify::verify_betti_identities(
                    frame.unwrap_or(BoxFrame::new(5, 5)),
                    &Reference,
                )),
                Sweep::Conn => {
                    verify::verify_connectivity(max_cells.unwrap_or(8), &Reference, &limits)
                }
                Sweep::Strongskew => {
                    verify::verify_strongskew(max_cells.unwrap_or(8), &Reference, &limits)
                }
                Sweep::Dagger => {
                    verify::verify_opposite(max_cells.unwrap_or(8), &Reference, &limits)
                }
                Sweep::Semi => {
                    verify::verify_semi_isomorphism(max_cells.unwrap_or(7), &Reference, &limits)
                }
            })?;
            print_report(&report, json);
            Ok(verdict(report.passed()))
        }
        Command::Explore {
            what: Explore::Collisions { max_cells, jobs },
        } => {
            let limits = Limits::default();
            let pairs = with_jobs(jobs, || {
                verify::conjecture_collision_search(max_cells, &limits)
            })?;
            if json {
                let listed: Vec<_> = pairs
                    .iter()
                    .map(|(a, b)| json!({ "left": a.to_string(), "right": b.to_string() }))
                    .collect();
                print_json(
                    &json!({ "maxCells": max_cells, "count": pairs.len(), "pairs": listed }),
                );
            } else {
                for (a, b) in &pairs {
                    println!("{a}  |  {b}");
                }
                println!(
                    "{} pair(s) with at most {max_cells} cells share a signature without being semi-isomorphic",
                    pairs.len()
                );
            }
            Ok(Outcome::Positive)
        }
    }
}

fn verdict(positive: bool) -> Outcome {
    if positive {
        Outcome::Positive
    } else {
        Outcome::Negative
    }
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

/// Text reports omit the elapsed time so that output depends on the
/// arguments alone.
fn print_report(report: &Report, json: bool) {
    if json {
        print_json(report);
        return;
    }
    for failure in &report.failures {
        println!("FAIL {failure}");
    }
    println!(
        "{} checked, {} failure(s)",
        report.checked,
        report.failures.len()
    );
}
