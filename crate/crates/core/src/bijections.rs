//! The maps of the bijective proof, each paired with its inverse.
//!
//! ```text
//!   C(n+1) --pair_encode--> G'(n+1) --drop_restriction--> G(n)
//!          <--pair_decode--         <--raise_restriction--
//! ```
//!
//! `G'(m)` is the set of restricted G-words with `m` letters and `G(n)` the
//! unrestricted G-words with `n` letters. [`touchard_split`] and
//! [`motzkin_split`] then decompose `G(n)` into the pieces counted by the
//! two sums.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::paths::{
    parse_letters, validate_g, validate_motzkin, DyckWord, GWord, Letter, MotzkinWord,
    RestrictedGWord, Word,
};

use Letter::{Down, Flat, GreenZero, RedZero, Up};

/// Image of the four letter pairs, indexed `[UU, UD, DU, DD]`.
pub(crate) type PairTable = [Letter; 4];

pub(crate) const PAIR_TABLE: PairTable = [Up, GreenZero, RedZero, Down];

const PAIRS: [[Letter; 2]; 4] = [[Up, Up], [Up, Down], [Down, Up], [Down, Down]];

/// Which ground-level red zero `raise_restriction` lifts into an arch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum LiftTarget {
    First,
    Last,
}

pub(crate) fn encode_with(dyck: &[Letter], table: &PairTable) -> Vec<Letter> {
    debug_assert!(dyck.len().is_multiple_of(2));
    dyck.chunks_exact(2)
        .map(|pair| {
            let idx = PAIRS
                .iter()
                .position(|p| p[..] == *pair)
                .expect("Dyck words only hold Up and Down");
            table[idx]
        })
        .collect()
}

pub(crate) fn decode_with(word: &[Letter], table: &PairTable) -> Vec<Letter> {
    word.iter()
        .flat_map(|l| {
            let idx = table
                .iter()
                .position(|t| t == l)
                .expect("letter outside the pair table");
            PAIRS[idx]
        })
        .collect()
}

pub(crate) fn drop_letters(word: &[Letter]) -> Vec<Letter> {
    let (&last, body) = word.split_last().expect("restricted words are non-empty");
    match last {
        GreenZero => body.to_vec(),
        Down => {
            // Last return to the axis strictly before the end; the arch that
            // closes the word opens right after it.
            let mut height = 0i64;
            let mut split = 0usize;
            for (i, l) in body.iter().enumerate() {
                height += l.value();
                if height == 0 {
                    split = i + 1;
                }
            }
            debug_assert_eq!(body[split], Up);
            let mut out = Vec::with_capacity(body.len());
            out.extend_from_slice(&body[..split]);
            out.push(RedZero);
            out.extend_from_slice(&body[split + 1..]);
            out
        }
        other => unreachable!("restricted word cannot end in {other:?}"),
    }
}

/// 0-based positions of red zeros whose preceding prefix sum is 0.
fn ground_red_zeros(word: &[Letter]) -> impl Iterator<Item = usize> + '_ {
    word.iter()
        .scan(0i64, |height, &l| {
            let before = *height;
            *height += l.value();
            Some((before, l))
        })
        .enumerate()
        .filter(|(_, (before, l))| *before == 0 && *l == RedZero)
        .map(|(i, _)| i)
}

pub(crate) fn raise_with(word: &[Letter], target: LiftTarget) -> Vec<Letter> {
    let chosen = match target {
        LiftTarget::First => ground_red_zeros(word).next(),
        LiftTarget::Last => ground_red_zeros(word).last(),
    };
    let mut out = Vec::with_capacity(word.len() + 1);
    out.extend_from_slice(word);
    match chosen {
        None => out.push(GreenZero),
        Some(p) => {
            out[p] = Up;
            out.push(Down);
        }
    }
    out
}

/// Compresses a Dyck word pairwise: `UU -> U`, `UD -> G`, `DU -> R`,
/// `DD -> D`. Prefix sums of the output are half those of the input at even
/// positions, so a `DU` pair (a red zero) can only occur above the axis.
///
/// # Panics
///
/// If `w` is empty.
pub fn pair_encode(w: &DyckWord) -> RestrictedGWord {
    assert!(w.semilength() >= 1, "pair_encode needs semilength >= 1");
    RestrictedGWord::trusted(encode_with(w.letters(), &PAIR_TABLE))
}

/// Inverse of [`pair_encode`].
pub fn pair_decode(v: &RestrictedGWord) -> DyckWord {
    DyckWord::trusted(decode_with(v.letters(), &PAIR_TABLE))
}

/// Removes one letter from a restricted word.
///
/// A trailing green zero is chopped. Otherwise the word ends in Down and
/// reads `w' U w'' D` with `w'` ending at the last return to the axis; the
/// result is `w' R w''`, which puts a red zero on the ground.
pub fn drop_restriction(w: &RestrictedGWord) -> GWord {
    GWord::trusted(drop_letters(w.letters()))
}

/// Inverse of [`drop_restriction`]. Words with no ground-level red zero get
/// a green zero appended; otherwise the first ground-level red zero becomes
/// Up and a closing Down is appended.
pub fn raise_restriction(u: &GWord) -> RestrictedGWord {
    RestrictedGWord::trusted(raise_with(u.letters(), LiftTarget::First))
}

/// `drop_restriction ∘ pair_encode`: semilength `n + 1` to length `n`.
pub fn catalan_to_g(w: &DyckWord) -> GWord {
    drop_restriction(&pair_encode(w))
}

/// `pair_decode ∘ raise_restriction`: length `n` to semilength `n + 1`.
pub fn g_to_catalan(u: &GWord) -> DyckWord {
    pair_decode(&raise_restriction(u))
}

/// A G-word split into its Up/Down skeleton and the colors of its zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TouchardDecomposition {
    pub n: usize,
    /// 0-based, strictly increasing slots holding Up or Down.
    pub positions: Vec<usize>,
    pub core: DyckWord,
    /// One entry per remaining slot, left to right; `true` is a red zero.
    pub colors: Vec<bool>,
}

impl TouchardDecomposition {
    /// `k` in `binom(n, 2k) 2^(n-2k) C(k)`.
    pub fn k(&self) -> usize {
        self.core.semilength()
    }
}

/// A G-word split into its red-zero slots and the Motzkin word left over.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MotzkinDecomposition {
    pub n: usize,
    /// 0-based, strictly increasing.
    pub red_positions: Vec<usize>,
    pub core: MotzkinWord,
}

impl MotzkinDecomposition {
    /// `k` in `binom(n, k) M(k)`.
    pub fn k(&self) -> usize {
        self.core.len()
    }
}

pub fn touchard_split(u: &GWord) -> TouchardDecomposition {
    let mut positions = Vec::new();
    let mut core = Vec::new();
    let mut colors = Vec::new();
    for (i, &l) in u.letters().iter().enumerate() {
        match l {
            Up | Down => {
                positions.push(i);
                core.push(l);
            }
            GreenZero => colors.push(false),
            RedZero => colors.push(true),
            Flat => unreachable!("G-words hold no uncolored zeros"),
        }
    }
    TouchardDecomposition {
        n: u.len(),
        positions,
        core: DyckWord::trusted(core),
        colors,
    }
}

fn check_positions(positions: &[usize], n: usize) -> Result<()> {
    if let Some(&p) = positions.iter().find(|&&p| p >= n) {
        return Err(Error::InvalidDecomposition(format!(
            "position {} outside 1..={n}",
            p + 1
        )));
    }
    if positions.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidDecomposition(
            "positions are not strictly increasing".into(),
        ));
    }
    Ok(())
}

pub fn touchard_merge(d: &TouchardDecomposition) -> Result<GWord> {
    check_positions(&d.positions, d.n)?;
    if d.positions.len() != d.core.len() {
        return Err(Error::InvalidDecomposition(format!(
            "{} positions for a core of length {}",
            d.positions.len(),
            d.core.len()
        )));
    }
    if d.colors.len() + d.positions.len() != d.n {
        return Err(Error::InvalidDecomposition(format!(
            "{} colors and {} positions do not fill {} slots",
            d.colors.len(),
            d.positions.len(),
            d.n
        )));
    }
    let mut out = Vec::with_capacity(d.n);
    let mut core = d.core.letters().iter();
    let mut colors = d.colors.iter();
    let mut slots = d.positions.iter().peekable();
    for i in 0..d.n {
        let letter = if slots.next_if_eq(&&i).is_some() {
            *core.next().expect("core length checked")
        } else if *colors.next().expect("color count checked") {
            RedZero
        } else {
            GreenZero
        };
        out.push(letter);
    }
    validate_g(out).map_err(|e| Error::InvalidDecomposition(format!("reassembly failed: {e}")))
}

pub fn motzkin_split(u: &GWord) -> MotzkinDecomposition {
    let mut red_positions = Vec::new();
    let mut core = Vec::new();
    for (i, &l) in u.letters().iter().enumerate() {
        match l {
            RedZero => red_positions.push(i),
            GreenZero => core.push(Flat),
            Up | Down => core.push(l),
            Flat => unreachable!("G-words hold no uncolored zeros"),
        }
    }
    MotzkinDecomposition {
        n: u.len(),
        red_positions,
        core: MotzkinWord::trusted(core),
    }
}

pub fn motzkin_merge(d: &MotzkinDecomposition) -> Result<GWord> {
    check_positions(&d.red_positions, d.n)?;
    if d.red_positions.len() + d.core.len() != d.n {
        return Err(Error::InvalidDecomposition(format!(
            "{} red zeros and a core of length {} do not fill {} slots",
            d.red_positions.len(),
            d.core.len(),
            d.n
        )));
    }
    let mut out = Vec::with_capacity(d.n);
    let mut core = d.core.letters().iter();
    let mut reds = d.red_positions.iter().peekable();
    for i in 0..d.n {
        if reds.next_if_eq(&&i).is_some() {
            out.push(RedZero);
        } else {
            out.push(match *core.next().expect("core length checked") {
                Flat => GreenZero,
                l => l,
            });
        }
    }
    validate_g(out).map_err(|e| Error::InvalidDecomposition(format!("reassembly failed: {e}")))
}

fn format_positions(positions: &[usize]) -> String {
    let items: Vec<String> = positions.iter().map(|p| (p + 1).to_string()).collect();
    format!("[{}]", items.join(","))
}

fn parse_positions(text: &str) -> Result<Vec<usize>> {
    let inner = text
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Malformed(format!("expected [..], got {text:?}")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|item| match item.trim().parse::<usize>() {
            Ok(p) if p >= 1 => Ok(p - 1),
            _ => Err(Error::Malformed(format!("bad 1-based position {item:?}"))),
        })
        .collect()
}

fn field<'a>(part: Option<&'a str>, key: &str) -> Result<&'a str> {
    part.and_then(|p| p.strip_prefix(key))
        .and_then(|p| p.strip_prefix('='))
        .ok_or_else(|| Error::Malformed(format!("missing field {key:?}")))
}

impl fmt::Display for TouchardDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let colors: String = self
            .colors
            .iter()
            .map(|&red| if red { '1' } else { '0' })
            .collect();
        write!(
            f,
            "positions={};core={};colors={}",
            format_positions(&self.positions),
            self.core,
            colors
        )
    }
}

/// Parses `positions=[i,j,..];core=<word>;colors=<bits>`. The field
/// invariants are left to [`touchard_merge`].
impl FromStr for TouchardDecomposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split(';');
        let positions = parse_positions(field(parts.next(), "positions")?)?;
        let core: DyckWord = field(parts.next(), "core")?.parse()?;
        let colors = field(parts.next(), "colors")?
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Malformed(format!("bad color bit {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.next().is_some() {
            return Err(Error::Malformed("trailing fields".into()));
        }
        Ok(TouchardDecomposition {
            n: positions.len() + colors.len(),
            positions,
            core,
            colors,
        })
    }
}

impl fmt::Display for MotzkinDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "red={};core={}",
            format_positions(&self.red_positions),
            self.core
        )
    }
}

/// Parses `red=[i,..];core=<word>`.
impl FromStr for MotzkinDecomposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split(';');
        let red_positions = parse_positions(field(parts.next(), "red")?)?;
        let core = validate_motzkin(parse_letters(field(parts.next(), "core")?)?)?;
        if parts.next().is_some() {
            return Err(Error::Malformed("trailing fields".into()));
        }
        Ok(MotzkinDecomposition {
            n: red_positions.len() + core.len(),
            red_positions,
            core,
        })
    }
}
