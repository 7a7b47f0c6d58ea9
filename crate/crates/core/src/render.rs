//! ASCII and SVG drawings of lattice paths.
//!
//! Up and Down are diagonal steps; zeros are horizontal steps colored
//! green (GreenZero), red (RedZero) or left neutral (Flat). The x-axis is
//! always drawn so a red step on the ground is easy to spot.

use std::fmt::Write as _;
use std::num::NonZeroU32;

use crate::paths::{Letter, Word};

pub const GREEN: &str = "#008000";
pub const RED: &str = "#C00000";
pub const INK: &str = "#000000";
pub const AXIS: &str = "#808080";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepColor {
    Neutral,
    Green,
    Red,
}

/// One unit step to the right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Step {
    pub dy: i8,
    pub color: StepColor,
}

impl Step {
    pub const DX: u32 = 1;

    pub fn from_letter(letter: Letter) -> Step {
        let (dy, color) = match letter {
            Letter::Up => (1, StepColor::Neutral),
            Letter::Down => (-1, StepColor::Neutral),
            Letter::Flat => (0, StepColor::Neutral),
            Letter::GreenZero => (0, StepColor::Green),
            Letter::RedZero => (0, StepColor::Red),
        };
        Step { dy, color }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathDrawing {
    pub steps: Vec<Step>,
    /// Highest level reached.
    pub height: u32,
}

impl PathDrawing {
    pub fn width(&self) -> usize {
        self.steps.len()
    }

    /// Level at the start of each step.
    pub fn start_levels(&self) -> Vec<u32> {
        let mut level = 0i64;
        self.steps
            .iter()
            .map(|s| {
                let start = level;
                level += i64::from(s.dy);
                start as u32
            })
            .collect()
    }
}

pub fn to_drawing<W: Word + ?Sized>(word: &W) -> PathDrawing {
    let steps: Vec<Step> = word
        .letters()
        .iter()
        .map(|&l| Step::from_letter(l))
        .collect();
    PathDrawing {
        steps,
        height: word.max_height() as u32,
    }
}

/// Character grid with `height + 1` rows of `width` columns, top row first.
/// Up and Down occupy the row of their lower endpoint; flats sit on their
/// own level, `=` for red and `-` otherwise. Every line ends in `\n`.
pub fn render_ascii(d: &PathDrawing) -> String {
    let rows = d.height as usize + 1;
    let mut grid = vec![vec![' '; d.width()]; rows];
    for (i, (step, start)) in d.steps.iter().zip(d.start_levels()).enumerate() {
        let (level, glyph) = match (step.dy, step.color) {
            (1, _) => (start, '/'),
            (-1, _) => (start - 1, '\\'),
            (_, StepColor::Red) => (start, '='),
            _ => (start, '-'),
        };
        grid[rows - 1 - level as usize][i] = glyph;
    }
    let mut out = String::with_capacity(rows * (d.width() + 1));
    for row in grid {
        out.extend(row);
        out.push('\n');
    }
    out
}

/// Standalone SVG 1.1 document, `unit` pixels per step, one `polyline`
/// per step, dashed x-axis. Coordinates are integers with height growing
/// upward and a one-unit margin on every side.
pub fn render_svg(d: &PathDrawing, unit: NonZeroU32) -> String {
    let u = u64::from(unit.get());
    let width = (d.width() as u64 + 2) * u;
    let height = (u64::from(d.height) + 2) * u;
    let x = |i: usize| (i as u64 + 1) * u;
    let y = |level: u32| (u64::from(d.height) + 1 - u64::from(level)) * u;

    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    let _ = writeln!(
        svg,
        "  <line class=\"axis\" x1=\"0\" y1=\"{ay}\" x2=\"{width}\" y2=\"{ay}\" stroke=\"{AXIS}\" stroke-width=\"1\" stroke-dasharray=\"4,4\"/>",
        ay = y(0)
    );
    for (i, (step, start)) in d.steps.iter().zip(d.start_levels()).enumerate() {
        let end = (i64::from(start) + i64::from(step.dy)) as u32;
        let (class, stroke) = match (step.dy, step.color) {
            (1, _) => ("up", INK),
            (-1, _) => ("down", INK),
            (_, StepColor::Green) => ("green", GREEN),
            (_, StepColor::Red) => ("red", RED),
            _ => ("flat", INK),
        };
        let _ = writeln!(
            svg,
            "  <polyline class=\"step {class}\" points=\"{},{} {},{}\" fill=\"none\" stroke=\"{stroke}\" stroke-width=\"2\"/>",
            x(i),
            y(start),
            x(i + 1),
            y(end)
        );
    }
    svg.push_str("</svg>\n");
    svg
}
