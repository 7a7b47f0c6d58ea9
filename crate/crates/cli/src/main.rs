//! `touchard`: enumerate, map, count, render and verify.
//!
//! Exit status is 0 on success, 1 when a check or an input line fails, and
//! 2 on a usage error.

mod map;
mod verify;

use std::fs;
use std::io::{self, BufRead, BufWriter, Write};
use std::num::NonZeroU32;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use touchard_core::paths::{parse_letters, Letter};
use touchard_core::render::{render_ascii, render_svg, to_drawing, PathDrawing};
use touchard_core::{
    catalan, catalan_to_g, enumerate_dyck, enumerate_g, enumerate_g_restricted, enumerate_motzkin,
    motzkin_count, motzkin_rhs, sample_dyck, touchard_rhs, validate_g, validate_motzkin,
};

use crate::map::Direction;
use crate::verify::{Format, InjectedFault, VerifyConfig};

#[derive(Debug, Parser)]
#[command(
    name = "touchard",
    version,
    about = "Bijections and exact counts behind Touchard's Catalan identity"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check both identities, every round trip, and the stratified censuses.
    Verify {
        #[arg(long, default_value_t = 200)]
        max_identity_n: usize,
        #[arg(long, default_value_t = 9)]
        max_census_n: usize,
        #[arg(long, default_value_t = 10)]
        max_roundtrip_len: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Run the round-trip checks against a deliberately broken construction.
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<InjectedFault>,
    },
    /// Apply one map to every input line.
    Map {
        #[arg(value_enum)]
        direction: Direction,
        /// Input line(s); standard input is read when absent.
        #[arg(long)]
        word: Vec<String>,
    },
    /// List every word of a family in lexicographic order.
    Enumerate {
        #[arg(value_enum)]
        kind: EnumKind,
        /// Semilength for `dyck`, letter count otherwise.
        length: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Print an exact count or an identity report.
    Count {
        #[arg(value_enum)]
        which: CountKind,
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Draw a word as ASCII art or SVG.
    Render {
        #[arg(value_enum)]
        format: RenderFormat,
        /// Word to draw; the first line of standard input otherwise.
        #[arg(long)]
        word: Option<String>,
        /// Pixels per step (SVG only).
        #[arg(long, default_value_t = NonZeroU32::new(20).unwrap())]
        unit: NonZeroU32,
        /// Write to this file instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Draw a uniform random word (ChaCha8 seeded with `--seed`).
    Sample {
        #[arg(value_enum)]
        kind: SampleKind,
        /// Semilength for `dyck`, letter count for `g`.
        length: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EnumKind {
    Dyck,
    G,
    Grestricted,
    Motzkin,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CountKind {
    Catalan,
    Motzkin,
    TouchardRhs,
    MotzkinRhs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RenderFormat {
    Ascii,
    Svg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SampleKind {
    Dyck,
    G,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = match cli.command {
        Command::Verify {
            max_identity_n,
            max_census_n,
            max_roundtrip_len,
            format,
            inject_fault,
        } => {
            let cfg = VerifyConfig {
                max_identity_n,
                max_census_n,
                max_roundtrip_len,
                output_format: format,
                fault: inject_fault,
            };
            verify::run(&cfg, &mut out)?
        }
        Command::Map { direction, word } => {
            let lines = if word.is_empty() {
                read_stdin_lines()?
            } else {
                word
            };
            let mut failed = false;
            for (i, line) in lines.iter().enumerate() {
                match direction.apply(line) {
                    Ok(mapped) => writeln!(out, "{mapped}")?,
                    Err(e) => {
                        failed = true;
                        eprintln!("line {}: {e}", i + 1);
                    }
                }
            }
            ExitCode::from(u8::from(failed))
        }
        Command::Enumerate {
            kind,
            length,
            count_only,
        } => {
            let words: Box<dyn Iterator<Item = String>> = match kind {
                EnumKind::Dyck => Box::new(enumerate_dyck(length).map(|w| w.to_string())),
                EnumKind::G => Box::new(enumerate_g(length).map(|w| w.to_string())),
                EnumKind::Grestricted => {
                    Box::new(enumerate_g_restricted(length).map(|w| w.to_string()))
                }
                EnumKind::Motzkin => Box::new(enumerate_motzkin(length).map(|w| w.to_string())),
            };
            if count_only {
                writeln!(out, "{}", words.count())?;
            } else {
                for w in words {
                    writeln!(out, "{w}")?;
                }
            }
            ExitCode::SUCCESS
        }
        Command::Count { which, n, format } => {
            match which {
                CountKind::Catalan => writeln!(out, "{}", catalan(n))?,
                CountKind::Motzkin => writeln!(out, "{}", motzkin_count(n))?,
                CountKind::TouchardRhs => writeln!(out, "{}", format.report(&touchard_rhs(n)))?,
                CountKind::MotzkinRhs => writeln!(out, "{}", format.report(&motzkin_rhs(n)))?,
            }
            ExitCode::SUCCESS
        }
        Command::Render {
            format,
            word,
            unit,
            output,
        } => {
            let text = match word {
                Some(w) => w,
                None => read_stdin_lines()?.into_iter().next().unwrap_or_default(),
            };
            let drawing = drawing_for(&text)?;
            let rendered = match format {
                RenderFormat::Ascii => render_ascii(&drawing),
                RenderFormat::Svg => render_svg(&drawing, unit),
            };
            match output {
                Some(path) => fs::write(&path, rendered)
                    .with_context(|| format!("writing {}", path.display()))?,
                None => out.write_all(rendered.as_bytes())?,
            }
            ExitCode::SUCCESS
        }
        Command::Sample { kind, length, seed } => {
            let word = match kind {
                SampleKind::Dyck => sample_dyck(length, seed).to_string(),
                // catalan_to_g is a bijection, so uniform in, uniform out.
                SampleKind::G => catalan_to_g(&sample_dyck(length + 1, seed)).to_string(),
            };
            writeln!(out, "{word}")?;
            ExitCode::SUCCESS
        }
    };
    out.flush()?;
    Ok(code)
}

fn read_stdin_lines() -> anyhow::Result<Vec<String>> {
    io::stdin()
        .lock()
        .lines()
        .map(|l| l.map(|l| l.trim_end_matches('\r').to_owned()))
        .collect::<Result<_, _>>()
        .context("reading standard input")
}

/// Motzkin words are recognized by their uncolored zeros; everything else
/// (Dyck words included) is drawn as a G-word.
fn drawing_for(text: &str) -> anyhow::Result<PathDrawing> {
    let letters = parse_letters(text)?;
    if letters.contains(&Letter::Flat) {
        Ok(to_drawing(&validate_motzkin(letters)?))
    } else {
        Ok(to_drawing(&validate_g(letters)?))
    }
}
