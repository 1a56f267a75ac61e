use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rayon::prelude::*;
use serde_json::json;

use preproj_core::bricks::brick;
use preproj_core::canjoin::{cjr_direct, decompose};
use preproj_core::census::{
    census, census_entries, chi, diff_entries, global_count, join_irreducibles, parse_fixture, sigma,
};
use preproj_core::coxeter::DEFAULT_CAP;
use preproj_core::grid::{j_module, kernel_socle};
use preproj_core::hom::{hom_dim, iso_bricks, socle_over_end};
use preproj_core::lattice::GroupPoset;
use preproj_core::quiver::is_positive_root;
use preproj_core::render::{decompose_table, diagram_dot, diagram_text, hasse_dot, semibrick_text};
use preproj_core::semibricks::{semibrick, semibrick_direct, verify_semibrick};
use preproj_core::{CoxeterElement, DynkinType, Error, Family};

#[derive(Parser)]
#[command(name = "preproj", version, about = "Bricks and semibricks over preprojective algebras of types A and D")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args)]
struct GroupArgs {
    #[arg(long = "type", value_parser = parse_family)]
    family: Family,
    #[arg(long)]
    rank: usize,
    /// Largest group order to enumerate.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
}

#[derive(Args)]
struct ElementArgs {
    #[command(flatten)]
    group: GroupArgs,
    /// Comma-separated window, e.g. 2,5,8,1,3,4,6,7,9.
    #[arg(long, allow_hyphen_values = true)]
    window: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Oracle,
    Cjr,
    Structure,
    Count,
}

#[derive(Subcommand)]
enum Command {
    /// Length, descents, inversions and join-irreducible type.
    Element(ElementArgs),
    /// The brick of a join-irreducible element.
    Brick(ElementArgs),
    /// The semibrick of any element, one brick per descent.
    Semibrick {
        #[command(flatten)]
        args: ElementArgs,
        /// Build each summand straight from the descent data.
        #[arg(long)]
        direct: bool,
    },
    /// The canonical join representation table.
    Decompose(ElementArgs),
    /// All bricks grouped by shape, or a diff against a fixture file.
    Census {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        fixture: Option<std::path::PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Closed-form count of join-irreducibles against enumeration.
    Count {
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Exhaustive or sampled checks with a pass/fail report.
    Verify {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum)]
        suite: Suite,
        /// Check a random sample of this size instead of everything.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The weak order as a Graphviz digraph.
    Hasse {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Input(String),
    Capacity(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Capacity { .. } => Failure::Capacity(e.to_string()),
            Error::Consistency(_) => Failure::Verification(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

impl GroupArgs {
    fn dynkin(&self) -> Result<DynkinType, Failure> {
        Ok(DynkinType::new(self.family, self.rank)?)
    }
}

impl ElementArgs {
    fn element(&self) -> Result<CoxeterElement, Failure> {
        Ok(CoxeterElement::parse(self.group.dynkin()?, &self.window)?)
    }

    fn no_dot(&self, what: &str) -> Result<(), Failure> {
        if self.format == Format::Dot {
            return Err(Failure::Input(format!("dot output is not available for {what}")));
        }
        Ok(())
    }
}

fn to_json<T: serde::Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("serializable")
}

fn element(args: &ElementArgs) -> Outcome {
    args.no_dot("element")?;
    let w = args.element()?;
    let descents = w.descents();
    let l = w.join_irreducible_type();
    let shape = match (w.dynkin().family, l) {
        (Family::D, Some(_)) => Some((sigma(&w)?, chi(&w)?)),
        _ => None,
    };
    if args.format == Format::Json {
        return Ok(to_json(&json!({
            "window": w,
            "length": w.length(),
            "descents": descents,
            "inversions": w.inversions().len(),
            "jirr_type": l,
            "sigma": shape.as_ref().map(|s| s.0),
            "chi": shape.as_ref().map(|s| &s.1),
        })));
    }
    let mut out = String::new();
    writeln!(out, "window: {w}").unwrap();
    writeln!(out, "length: {}", w.length()).unwrap();
    if descents.is_empty() {
        writeln!(out, "descents: none").unwrap();
    } else {
        let ds: Vec<String> = descents.iter().map(ToString::to_string).collect();
        writeln!(out, "descents: {}", ds.join(",")).unwrap();
    }
    writeln!(out, "inversions: {}", w.inversions().len()).unwrap();
    match l {
        Some(l) => writeln!(out, "jirr of type {l}").unwrap(),
        None => writeln!(out, "not join-irreducible").unwrap(),
    }
    if let Some((s, c)) = shape {
        let c: Vec<String> = c.iter().map(ToString::to_string).collect();
        writeln!(out, "sigma: {s}").unwrap();
        writeln!(out, "chi: ({})", c.join(",")).unwrap();
    }
    Ok(out)
}

fn brick_cmd(args: &ElementArgs) -> Outcome {
    let w = args.element()?;
    let b = brick(&w)?;
    Ok(match args.format {
        Format::Text => diagram_text(&b.diagram) + "\n",
        Format::Json => to_json(&b.to_json()),
        Format::Dot => diagram_dot(&b.diagram),
    })
}

fn semibrick_cmd(args: &ElementArgs, direct: bool) -> Outcome {
    args.no_dot("semibrick")?;
    let w = args.element()?;
    let s = if direct { semibrick_direct(&w)? } else { semibrick(&w)? };
    Ok(match args.format {
        Format::Json => to_json(&s.to_json()),
        _ => semibrick_text(&s) + "\n",
    })
}

fn decompose_cmd(args: &ElementArgs) -> Outcome {
    args.no_dot("decompose")?;
    let w = args.element()?;
    let rows = decompose(&w)?;
    Ok(match args.format {
        Format::Json => to_json(&rows),
        _ => decompose_table(&w, &rows) + "\n",
    })
}

fn census_cmd(group: &GroupArgs, fixture: Option<&std::path::Path>, format: Format) -> Outcome {
    if format == Format::Dot {
        return Err(Failure::Input("dot output is not available for census".into()));
    }
    let c = census(group.dynkin()?, group.cap)?;
    let entries = census_entries(&c);
    if let Some(path) = fixture {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
        let expected = parse_fixture(&text)?;
        let diff = diff_entries(&expected, &entries);
        if diff.is_empty() {
            return Ok(format!("{} entries in {} shapes match the fixture\n", entries.len(), c.len()));
        }
        return Err(Failure::Verification(diff.join("\n")));
    }
    if format == Format::Json {
        return Ok(to_json(&entries));
    }
    let mut out = String::new();
    for (s, v) in &c {
        writeln!(out, "sigma={s} ({} elements)", v.len()).unwrap();
        for (w, d) in v {
            writeln!(out, "  w=({w})").unwrap();
            for line in diagram_text(d).lines() {
                writeln!(out, "    {line}").unwrap();
            }
        }
    }
    writeln!(out, "total {} in {} shapes", entries.len(), c.len()).unwrap();
    Ok(out)
}

fn count_cmd(group: &GroupArgs) -> Outcome {
    let t = group.dynkin()?;
    let formula = global_count(t);
    let enumerated = join_irreducibles(t, group.cap)?.len() as u128;
    let line = format!(
        "formula {formula}, enumerated {enumerated}, {}",
        if formula == enumerated { "OK" } else { "MISMATCH" }
    );
    if formula == enumerated {
        Ok(line + "\n")
    } else {
        Err(Failure::Verification(line))
    }
}

fn pick(mut all: Vec<CoxeterElement>, sample: Option<usize>, seed: u64) -> Vec<CoxeterElement> {
    if let Some(k) = sample {
        if k < all.len() {
            let mut rng = StdRng::seed_from_u64(seed);
            all = all.choose_multiple(&mut rng, k).cloned().collect();
            all.sort();
        }
    }
    all
}

/// Runs `check` on every element and reports failures by window, in order.
fn sweep<F>(items: &[CoxeterElement], check: F) -> Vec<String>
where
    F: Fn(&CoxeterElement) -> Result<Option<String>, Error> + Sync,
{
    items
        .par_iter()
        .filter_map(|w| match check(w) {
            Ok(None) => None,
            Ok(Some(why)) => Some(format!("({w}): {why}")),
            Err(e) => Some(format!("({w}): {e}")),
        })
        .collect()
}

fn report(summary: String, failures: Vec<String>) -> Outcome {
    if failures.is_empty() {
        Ok(summary + "\n")
    } else {
        Err(Failure::Verification(format!("{summary}\n{}", failures.join("\n"))))
    }
}

fn verify_cmd(group: &GroupArgs, suite: Suite, sample: Option<usize>, seed: u64) -> Outcome {
    let t = group.dynkin()?;
    match suite {
        Suite::Count => count_cmd(group),
        Suite::Oracle => {
            let items = pick(join_irreducibles(t, group.cap)?, sample, seed);
            let failures = sweep(&items, |w| {
                let b = brick(w)?;
                let soc = socle_over_end(&j_module(w)?)?;
                if !iso_bricks(&b.rep, &soc.rep)? {
                    return Ok(Some("brick differs from the socle of J(w)".into()));
                }
                match kernel_socle(w) {
                    Ok(k) if !k.same_subspace(&soc) => Ok(Some("shift kernel differs from the socle".into())),
                    Ok(_) | Err(Error::Unsupported(_)) => Ok(None),
                    Err(e) => Err(e),
                }
            });
            let ok = items.len() - failures.len();
            report(format!("{ok}/{} bricks match socle oracle", items.len()), failures)
        }
        Suite::Cjr => {
            let p = GroupPoset::new(t, group.cap)?;
            let items = pick(p.elements().to_vec(), sample, seed);
            let failures = sweep(&items, |w| {
                let direct = cjr_direct(w)?;
                if direct != p.cjr_oracle(w)? {
                    return Ok(Some("closed formula differs from the lattice oracle".into()));
                }
                Ok(None)
            });
            let ok = items.len() - failures.len();
            report(format!("{ok}/{} canonical join representations match", items.len()), failures)
        }
        Suite::Structure => {
            let p = GroupPoset::new(t, group.cap)?;
            let items = pick(p.elements().to_vec(), sample, seed);
            let failures = sweep(&items, |w| {
                let s = semibrick(w)?;
                let r = verify_semibrick(&s, Some(&p))?;
                if !r.passed() {
                    return Ok(Some(format!("{r:?}")));
                }
                for x in &s.summands {
                    if hom_dim(&x.rep, &x.rep)? != 1 || !is_positive_root(t, x.rep.dims()) {
                        return Ok(Some(format!("summand at descent {} is not a brick", x.d)));
                    }
                }
                let direct = semibrick_direct(w)?;
                if s.summands.iter().zip(&direct.summands).any(|(x, y)| x.diagram != y.diagram) {
                    return Ok(Some("direct construction differs".into()));
                }
                Ok(None)
            });
            let ok = items.len() - failures.len();
            report(format!("{ok}/{} semibricks pass", items.len()), failures)
        }
    }
}

fn hasse_cmd(group: &GroupArgs, format: Format) -> Outcome {
    let p = GroupPoset::new(group.dynkin()?, group.cap)?;
    let edges: Vec<(CoxeterElement, CoxeterElement)> =
        p.hasse_edges().into_iter().map(|(hi, lo)| (lo, hi)).collect();
    Ok(match format {
        Format::Dot => hasse_dot(&edges, p.elements()),
        Format::Json => to_json(&edges),
        Format::Text => edges.iter().map(|(u, v)| format!("({u}) < ({v})\n")).collect(),
    })
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Element(a) => element(a),
        Command::Brick(a) => brick_cmd(a),
        Command::Semibrick { args, direct } => semibrick_cmd(args, *direct),
        Command::Decompose(a) => decompose_cmd(a),
        Command::Census { group, fixture, format } => census_cmd(group, fixture.as_deref(), *format),
        Command::Count { group } => count_cmd(group),
        Command::Verify { group, suite, sample, seed } => verify_cmd(group, *suite, *sample, *seed),
        Command::Hasse { group, format } => hasse_cmd(group, *format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(msg)) => {
            println!("{msg}");
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Capacity(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
