//! Command-line surface: every subcommand parses its inputs, runs one
//! library operation, and renders a deterministic text, JSON, DOT, or SVG
//! document. Errors surface as one-line diagnostics with nonzero exit.

use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::arq::{self, ARQuiver};
use crate::chamber;
use crate::error::{Error, Result};
use crate::quiverform::{self, Orientation};
use crate::rootsys::RootSystem;
use crate::typea::{self, WiringFormat};
use crate::words::{CensusBudget, ReducedWord, RootOrder};

/// Top-level argument structure.
#[derive(Parser, Debug)]
#[command(
    name = "arquiver",
    version,
    about = "Auslander-Reiten quivers of ADE path algebras from reduced words, \
             chamber weights, and Coxeter combinatorics"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Output document kinds.
#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    /// Plain text, one fact per line.
    Text,
    /// Pretty-printed JSON.
    Json,
    /// Graphviz DOT (quivers only).
    Dot,
    /// SVG 1.1 (wiring diagrams only).
    Svg,
}

/// Quiver construction selector.
#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum Method {
    /// Letter-pattern construction from the word.
    Word,
    /// Bilinear-form construction from the orientation.
    Ringel,
    /// Chamber-complex coset construction.
    Coset,
    /// All three, with an agreement report.
    All,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the positive roots, their count, and the diagram involution
    Roots {
        /// Dynkin type, e.g. A3, D4, E6
        dynkin: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Show the root order of a reduced word, with levels and convexity
    Order {
        /// Dynkin type, e.g. A3, D4, E6
        dynkin: String,
        /// Comma-separated 1-based letters, e.g. 2,1,3,2,3,1
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Show the chamber weights of a reduced word, with level tails
    Chamber {
        /// Dynkin type, e.g. A3, D4, E6
        dynkin: String,
        /// Comma-separated 1-based letters, e.g. 2,1,3,2,3,1
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decide whether a word is adapted to an orientation
    Adapted {
        /// Dynkin type, e.g. A3, D4, E6
        dynkin: String,
        /// Comma-separated 1-based letters, e.g. 3,2,1,3,2,3
        #[arg(long)]
        word: String,
        /// Arrows like 1>2,3>2; when omitted, the fitting orientation is reconstructed
        #[arg(long)]
        orientation: Option<String>,
    },
    /// Build the Auslander-Reiten quiver by one or all constructions
    Arq {
        /// Dynkin type, e.g. A3, D4, E6
        dynkin: String,
        /// Arrows like 1>2,3>2; defaults the word to its adapted word
        #[arg(long)]
        orientation: Option<String>,
        /// Comma-separated 1-based letters; defaults the orientation to the adapted one
        #[arg(long)]
        word: Option<String>,
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Test linearity of the root-to-weight pairing of a longest word
    Linearity {
        /// Dynkin type, e.g. A3, D4, E6
        dynkin: String,
        /// Comma-separated 1-based letters of a longest word
        #[arg(long)]
        word: String,
    },
    /// Census the commutation classes and compare adaptedness with linearity
    Census {
        /// Dynkin type, e.g. A3, D4, E6
        dynkin: String,
        /// Raise the class budget from 1000 to 50000
        #[arg(long)]
        extended: bool,
        /// Abort the census after this many seconds
        #[arg(long)]
        timeout: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Draw the wiring diagram of a type-A reduced word
    Wiring {
        /// Dynkin type, e.g. A3
        dynkin: String,
        /// Comma-separated 1-based letters, e.g. 2,1,3,2,3,1
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn root_system(dynkin: &str) -> Result<RootSystem> {
    Ok(RootSystem::new(dynkin.parse()?))
}

fn parse_word(rs: &RootSystem, text: &str) -> Result<ReducedWord> {
    let letters = text
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| Error::ParseWord(text.to_string()))
        })
        .collect::<Result<Vec<usize>>>()?;
    ReducedWord::new(rs, letters)
}

fn reject_format(format: Format, allowed: &[Format], context: &str) -> Result<()> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(Error::InvalidCommand(format!(
            "{context} does not support this output format"
        )))
    }
}

fn json_doc(value: &serde_json::Value) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("value serializes");
    out.push('\n');
    out
}

fn run_roots(rs: &RootSystem, format: Format) -> Result<String> {
    reject_format(format, &[Format::Text, Format::Json], "roots")?;
    match format {
        Format::Json => Ok(json_doc(&json!({
            "type": rs.dynkin().to_string(),
            "count": rs.num_positive_roots(),
            "roots": rs.positive_roots().iter().map(|r| json!({
                "root": r.to_string(),
                "coeffs": r.coeffs(),
            })).collect::<Vec<_>>(),
            "star": (1..=rs.rank()).map(|i| rs.star(i)).collect::<Vec<_>>(),
        }))),
        _ => {
            let mut out = format!(
                "type {}\npositive roots {}\n",
                rs.dynkin(),
                rs.num_positive_roots()
            );
            for (k, root) in rs.positive_roots().iter().enumerate() {
                out.push_str(&format!("{}: {root}\n", k + 1));
            }
            let star: Vec<String> = (1..=rs.rank())
                .map(|i| format!("{i}->{}", rs.star(i)))
                .collect();
            out.push_str(&format!("star {}\n", star.join(" ")));
            Ok(out)
        }
    }
}

fn run_order(rs: &RootSystem, word: &ReducedWord, format: Format) -> Result<String> {
    reject_format(format, &[Format::Text, Format::Json], "order")?;
    let order = RootOrder::from_word(rs, word);
    let convex = order.is_convex(rs);
    match format {
        Format::Json => Ok(json_doc(&json!({
            "type": rs.dynkin().to_string(),
            "word": word.letters(),
            "roots": order.roots().iter().enumerate().map(|(k, r)| json!({
                "position": k + 1,
                "root": r.to_string(),
                "coeffs": r.coeffs(),
                "level": word.letters()[k],
            })).collect::<Vec<_>>(),
            "convex": convex,
        }))),
        _ => {
            let mut out = format!("word {word}\n");
            for (k, root) in order.roots().iter().enumerate() {
                out.push_str(&format!("{}: {root} level {}\n", k + 1, word.letters()[k]));
            }
            out.push_str(&format!("convex {convex}\n"));
            Ok(out)
        }
    }
}

fn run_chamber(rs: &RootSystem, word: &ReducedWord, format: Format) -> Result<String> {
    reject_format(format, &[Format::Text, Format::Json], "chamber")?;
    let seq = chamber::chamber_weights(rs, word);
    let tails = if word.is_longest(rs) {
        let structure = chamber::level_structure(rs, &seq, None)?;
        Some(
            (1..=rs.rank())
                .map(|i| structure.tail(i).to_string())
                .collect::<Vec<_>>(),
        )
    } else {
        None
    };
    match format {
        Format::Json => Ok(json_doc(&json!({
            "type": rs.dynkin().to_string(),
            "word": word.letters(),
            "weights": seq.weights().iter().enumerate().map(|(k, w)| json!({
                "position": k + 1,
                "weight": w.to_string(),
                "coords": w.coords(),
                "level": word.letters()[k],
            })).collect::<Vec<_>>(),
            "tails": tails,
        }))),
        _ => {
            let mut out = format!("word {word}\n");
            for (k, weight) in seq.weights().iter().enumerate() {
                out.push_str(&format!(
                    "{}: {weight} level {}\n",
                    k + 1,
                    word.letters()[k]
                ));
            }
            if let Some(tails) = tails {
                for (i, tail) in tails.iter().enumerate() {
                    out.push_str(&format!("level {} tail {tail}\n", i + 1));
                }
            }
            Ok(out)
        }
    }
}

fn run_adapted(rs: &RootSystem, word: &ReducedWord, orientation: Option<&str>) -> Result<String> {
    match orientation {
        Some(text) => {
            let q = Orientation::parse(rs.dynkin(), text)?;
            Ok(format!(
                "adapted {}\n",
                quiverform::is_adapted(&q, word.letters())
            ))
        }
        None => match quiverform::adapted_orientation(rs, word) {
            Some(q) => Ok(format!("adapted true orientation {q}\n")),
            None => Ok("adapted false (no orientation fits)\n".to_string()),
        },
    }
}

fn render_quiver(quiver: &ARQuiver, format: Format) -> String {
    match format {
        Format::Json => json_doc(&quiver.to_json()),
        Format::Dot => quiver.to_dot(),
        _ => quiver.to_text(),
    }
}

fn run_arq(
    rs: &RootSystem,
    orientation: Option<&str>,
    word: Option<&str>,
    method: Method,
    format: Format,
) -> Result<String> {
    reject_format(format, &[Format::Text, Format::Json, Format::Dot], "arq")?;
    let q = match orientation {
        Some(text) => Some(Orientation::parse(rs.dynkin(), text)?),
        None => None,
    };
    let word = match word {
        Some(text) => Some(parse_word(rs, text)?),
        None => None,
    };
    if let (Some(q), Some(w)) = (&q, &word) {
        if !quiverform::is_adapted(q, w.letters()) {
            return Err(Error::NotAdapted(q.to_string()));
        }
    }
    let word = match (word, &q) {
        (Some(w), _) => w,
        (None, Some(q)) => quiverform::adapted_word(rs, q),
        (None, None) => {
            return Err(Error::InvalidCommand(
                "arq needs --orientation, --word, or both".to_string(),
            ))
        }
    };
    let orientation_for_form = || -> Result<Orientation> {
        if let Some(q) = q.clone() {
            return Ok(q);
        }
        quiverform::adapted_orientation(rs, &word).ok_or(Error::NoAdaptedOrientation)
    };
    match method {
        Method::Word => Ok(render_quiver(&arq::arq_from_word(rs, &word), format)),
        Method::Coset => Ok(render_quiver(&arq::arq_from_cosets(rs, &word), format)),
        Method::Ringel => Ok(render_quiver(
            &arq::arq_from_ringel_on(rs, &orientation_for_form()?, &word),
            format,
        )),
        Method::All => {
            let by_word = arq::arq_from_word(rs, &word);
            let by_form = arq::arq_from_ringel_on(rs, &orientation_for_form()?, &word);
            let by_cosets = arq::arq_from_cosets(rs, &word);
            let agree = by_word == by_form && by_word == by_cosets;
            let summary = format!("methods agree: {agree}; arrows={}\n", by_word.arrow_count());
            match format {
                Format::Json => Ok(json_doc(&json!({
                    "agree": agree,
                    "arrows": by_word.arrow_count(),
                    "quiver": by_word.to_json(),
                }))),
                Format::Dot => Ok(format!("{summary}{}", by_word.to_dot())),
                _ => Ok(format!("{summary}{}", by_word.to_text())),
            }
        }
    }
}

fn run_linearity(rs: &RootSystem, word: &ReducedWord) -> Result<String> {
    let report = chamber::linearity_witness(rs, word)?;
    if report.is_linear() {
        let map = report.map().expect("linear reports carry the map");
        let mut out = String::from("linear=true\n");
        for i in 1..=rs.rank() {
            let image = crate::rootsys::Weight::new(map.col(i - 1));
            out.push_str(&format!("L(a{i}) = {image}\n"));
        }
        Ok(out)
    } else {
        Ok(format!(
            "linear=false witness: {}\n",
            report
                .witness()
                .expect("non-linear reports carry a witness")
        ))
    }
}

fn run_census(
    rs: &RootSystem,
    extended: bool,
    timeout: Option<u64>,
    format: Format,
) -> Result<String> {
    reject_format(format, &[Format::Text, Format::Json], "census")?;
    let mut budget = if extended {
        CensusBudget::extended()
    } else {
        CensusBudget::default()
    };
    if let Some(seconds) = timeout {
        budget = budget.with_time_limit(Duration::from_secs(seconds));
    }
    let report = chamber::conjecture_sweep(rs, &budget)?;
    match format {
        Format::Json => Ok(json_doc(&report.to_json())),
        _ => Ok(format!(
            "classes={} adapted={} conjecture={}\n",
            report.class_count(),
            report.adapted_count(),
            if report.holds() { "holds" } else { "fails" }
        )),
    }
}

fn run_wiring(rs: &RootSystem, word: &ReducedWord, format: Format) -> Result<String> {
    reject_format(format, &[Format::Text, Format::Json, Format::Svg], "wiring")?;
    let wd = typea::wiring_diagram(rs, word)?;
    match format {
        Format::Svg => Ok(typea::render_wiring(&wd, WiringFormat::Svg)),
        Format::Json => Ok(json_doc(&json!({
            "type": rs.dynkin().to_string(),
            "word": word.letters(),
            "strands": wd.strands(),
            "zones": (1..=wd.crossing_count()).map(|k| json!({
                "crossing": k,
                "level": wd.letters()[k - 1],
                "label": wd.zone(k).indices(),
            })).collect::<Vec<_>>(),
            "arrows": wd.zone_arrows().into_iter().collect::<Vec<_>>(),
        }))),
        _ => Ok(typea::render_wiring(&wd, WiringFormat::Text)),
    }
}

/// Executes a parsed command line, returning the full output document.
pub fn run(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Roots { dynkin, format } => run_roots(&root_system(&dynkin)?, format),
        Command::Order {
            dynkin,
            word,
            format,
        } => {
            let rs = root_system(&dynkin)?;
            let word = parse_word(&rs, &word)?;
            run_order(&rs, &word, format)
        }
        Command::Chamber {
            dynkin,
            word,
            format,
        } => {
            let rs = root_system(&dynkin)?;
            let word = parse_word(&rs, &word)?;
            run_chamber(&rs, &word, format)
        }
        Command::Adapted {
            dynkin,
            word,
            orientation,
        } => {
            let rs = root_system(&dynkin)?;
            let word = parse_word(&rs, &word)?;
            run_adapted(&rs, &word, orientation.as_deref())
        }
        Command::Arq {
            dynkin,
            orientation,
            word,
            method,
            format,
        } => {
            let rs = root_system(&dynkin)?;
            run_arq(&rs, orientation.as_deref(), word.as_deref(), method, format)
        }
        Command::Linearity { dynkin, word } => {
            let rs = root_system(&dynkin)?;
            let word = parse_word(&rs, &word)?;
            run_linearity(&rs, &word)
        }
        Command::Census {
            dynkin,
            extended,
            timeout,
            format,
        } => run_census(&root_system(&dynkin)?, extended, timeout, format),
        Command::Wiring {
            dynkin,
            word,
            format,
        } => {
            let rs = root_system(&dynkin)?;
            let word = parse_word(&rs, &word)?;
            run_wiring(&rs, &word, format)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::Parser;

    fn exec(args: &[&str]) -> Result<String> {
        let mut full = vec!["arquiver"];
        full.extend_from_slice(args);
        run(Cli::try_parse_from(full).expect("test arguments parse"))
    }

    #[test]
    fn golden_lines() {
        let census = exec(&["census", "A3"]).unwrap();
        assert_eq!(census, "classes=8 adapted=4 conjecture=holds\n");
        let arq = exec(&["arq", "A3", "--orientation", "1>2,3>2", "--method", "all"]).unwrap();
        assert!(arq.starts_with("methods agree: true; arrows=6\n"), "{arq}");
        let lin = exec(&["linearity", "A3", "--word", "2,1,2,3,2,1"]).unwrap();
        assert_eq!(lin, "linear=false witness: mu3+mu1 != mu2\n");
    }

    #[test]
    fn verdicts_and_documents() {
        let roots = exec(&["roots", "A3"]).unwrap();
        assert!(roots.starts_with("type A3\npositive roots 6\n1: a1\n"));
        assert!(roots.contains("star 1->3 2->2 3->1"));
        let order = exec(&["order", "A3", "--word", "2,1,3,2,3,1"]).unwrap();
        assert!(order.contains("1: a2 level 2"));
        assert!(order.contains("convex true"));
        let chamber = exec(&["chamber", "A3", "--word", "2,1,3,2,3,1"]).unwrap();
        assert!(chamber.contains("1: w1-w2+w3 level 2"));
        assert!(chamber.contains("level 1 tail -w3"));
        let adapted = exec(&["adapted", "A3", "--word", "3,2,1,3,2,3"]).unwrap();
        assert_eq!(adapted, "adapted true orientation 1>2,2>3\n");
        let not = exec(&["adapted", "A3", "--word", "2,1,2,3,2,1"]).unwrap();
        assert_eq!(not, "adapted false (no orientation fits)\n");
        let against = exec(&[
            "adapted",
            "A3",
            "--word",
            "3,2,1,3,2,3",
            "--orientation",
            "1>2,3>2",
        ])
        .unwrap();
        assert_eq!(against, "adapted false\n");
        let lin = exec(&["linearity", "A3", "--word", "2,1,3,2,3,1"]).unwrap();
        assert!(lin.starts_with("linear=true\n"));
        assert!(lin.contains("L(a1) = -w1\n"), "{lin}");
    }

    #[test]
    fn formats_and_failures() {
        let json = exec(&["census", "A3", "--format", "json"]).unwrap();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["classes"], 8);
        let dot = exec(&[
            "arq",
            "A3",
            "--word",
            "2,1,3,2,3,1",
            "--method",
            "word",
            "--format",
            "dot",
        ])
        .unwrap();
        assert!(dot.starts_with("digraph arq {"));
        let svg = exec(&["wiring", "A3", "--word", "2,1,3,2,3,1", "--format", "svg"]).unwrap();
        assert!(svg.starts_with("<svg "));
        let wiring_json =
            exec(&["wiring", "A3", "--word", "2,1,3,2,3,1", "--format", "json"]).unwrap();
        let value: serde_json::Value = serde_json::from_str(&wiring_json).unwrap();
        assert_eq!(value["zones"][0]["label"], json!([1, 3]));

        assert!(exec(&["roots", "Z9"]).is_err());
        assert!(exec(&["roots", "A3", "--format", "svg"]).is_err());
        assert!(exec(&["order", "A3", "--word", "1,1"]).is_err());
        assert!(exec(&["order", "A3", "--word", "1,x"]).is_err());
        assert!(exec(&["linearity", "A3", "--word", "2,1"]).is_err());
        assert!(exec(&["arq", "A3"]).is_err());
        assert!(exec(&["arq", "A3", "--word", "2,1,2,3,2,1", "--method", "ringel"]).is_err());
        assert!(exec(&["wiring", "D4", "--word", "1,2"]).is_err());
        assert!(exec(&["census", "A5", "--timeout", "0"]).is_err());
    }
}
