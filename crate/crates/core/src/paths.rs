//! Validated word types, prefix sums, enumeration and sampling.
//!
//! Every word type here is only constructible through a `validate_*`
//! function, an enumerator, or a bijection that guarantees its invariants,
//! so downstream code may rely on them without re-checking.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// A single step. The derived order `Up < GreenZero < Flat < RedZero < Down`
/// is the lexicographic order used by every enumerator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Up,
    GreenZero,
    /// The uncolored zero of Motzkin words.
    Flat,
    RedZero,
    Down,
}

impl Letter {
    pub const fn value(self) -> i64 {
        match self {
            Letter::Up => 1,
            Letter::Down => -1,
            Letter::GreenZero | Letter::Flat | Letter::RedZero => 0,
        }
    }

    pub const fn to_char(self) -> char {
        match self {
            Letter::Up => 'U',
            Letter::Down => 'D',
            Letter::GreenZero => 'G',
            Letter::RedZero => 'R',
            Letter::Flat => 'H',
        }
    }

    pub const fn from_char(c: char) -> Option<Letter> {
        match c {
            'U' => Some(Letter::Up),
            'D' => Some(Letter::Down),
            'G' => Some(Letter::GreenZero),
            'R' => Some(Letter::RedZero),
            'H' => Some(Letter::Flat),
            _ => None,
        }
    }
}

/// Parses the one-character-per-letter text encoding. Surrounding
/// whitespace is not stripped; an empty string is the empty word.
pub fn parse_letters(text: &str) -> Result<Vec<Letter>> {
    text.chars()
        .enumerate()
        .map(|(i, c)| {
            Letter::from_char(c).ok_or(Error::BadCharacter {
                character: c,
                position: i + 1,
            })
        })
        .collect()
}

pub fn format_letters(letters: &[Letter]) -> String {
    letters.iter().map(|l| l.to_char()).collect()
}

/// `S[i]` is the sum of the first `i + 1` letter values.
pub fn prefix_sums(letters: &[Letter]) -> Vec<i64> {
    letters
        .iter()
        .scan(0i64, |acc, l| {
            *acc += l.value();
            Some(*acc)
        })
        .collect()
}

/// Common read access to every validated word type.
pub trait Word {
    fn letters(&self) -> &[Letter];

    fn len(&self) -> usize {
        self.letters().len()
    }

    fn is_empty(&self) -> bool {
        self.letters().is_empty()
    }

    fn prefix_sums(&self) -> Vec<i64> {
        prefix_sums(self.letters())
    }

    fn max_height(&self) -> i64 {
        self.prefix_sums().into_iter().max().unwrap_or(0).max(0)
    }

    fn to_text(&self) -> String {
        format_letters(self.letters())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    Dyck,
    G,
    Restricted,
    Motzkin,
}

impl Family {
    const fn name(self) -> &'static str {
        match self {
            Family::Dyck => "Dyck",
            Family::G => "G",
            Family::Restricted => "restricted G",
            Family::Motzkin => "Motzkin",
        }
    }

    /// Allowed letters in enumeration order.
    const fn alphabet(self) -> &'static [Letter] {
        match self {
            Family::Dyck => &[Letter::Up, Letter::Down],
            Family::G | Family::Restricted => {
                &[Letter::Up, Letter::GreenZero, Letter::RedZero, Letter::Down]
            }
            Family::Motzkin => &[Letter::Up, Letter::Flat, Letter::Down],
        }
    }

    fn allows(self, letter: Letter) -> bool {
        self.alphabet().contains(&letter)
    }
}

fn check(letters: &[Letter], family: Family) -> Result<()> {
    if let Some((i, &letter)) = letters
        .iter()
        .enumerate()
        .find(|(_, l)| !family.allows(**l))
    {
        return Err(Error::BadAlphabet {
            kind: family.name(),
            letter,
            position: i + 1,
        });
    }
    if family == Family::Restricted && letters.is_empty() {
        return Err(Error::EmptyRestricted);
    }
    let mut height = 0i64;
    for (i, &letter) in letters.iter().enumerate() {
        if family == Family::Restricted && letter == Letter::RedZero && height < 1 {
            return Err(Error::RedZeroAtGroundLevel { position: i + 1 });
        }
        height += letter.value();
        if height < 0 {
            return Err(Error::NegativePrefix { position: i + 1 });
        }
    }
    if height != 0 {
        return Err(Error::NotBalanced { sum: height });
    }
    Ok(())
}

macro_rules! word_type {
    ($(#[$meta:meta])* $name:ident, $family:expr, $validate:ident) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(Vec<Letter>);

        impl $name {
            /// Wraps letters the caller has proven valid. Re-checked in
            /// debug builds.
            pub(crate) fn trusted(letters: Vec<Letter>) -> Self {
                if cfg!(debug_assertions) {
                    if let Err(e) = check(&letters, $family) {
                        panic!(
                            "invariant violated building {} from {:?}: {e}",
                            stringify!($name),
                            format_letters(&letters)
                        );
                    }
                }
                $name(letters)
            }

            pub fn into_letters(self) -> Vec<Letter> {
                self.0
            }
        }

        impl Word for $name {
            fn letters(&self) -> &[Letter] {
                &self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&format_letters(&self.0))
            }
        }

        impl FromStr for $name {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                $validate(parse_letters(s)?)
            }
        }

        impl TryFrom<Vec<Letter>> for $name {
            type Error = Error;

            fn try_from(letters: Vec<Letter>) -> Result<Self> {
                $validate(letters)
            }
        }

        impl AsRef<[Letter]> for $name {
            fn as_ref(&self) -> &[Letter] {
                &self.0
            }
        }

        pub fn $validate(letters: Vec<Letter>) -> Result<$name> {
            check(&letters, $family)?;
            Ok($name(letters))
        }
    };
}

word_type!(
    /// Up/Down word with zero sum and non-negative prefix sums.
    DyckWord,
    Family::Dyck,
    validate_dyck
);

word_type!(
    /// Bicolored Motzkin word: any of the four G letters, zero sum,
    /// non-negative prefix sums.
    GWord,
    Family::G,
    validate_g
);

word_type!(
    /// A non-empty [`GWord`] whose red zeros all sit strictly above the axis.
    RestrictedGWord,
    Family::Restricted,
    validate_g_restricted
);

word_type!(
    /// Up/Flat/Down word with zero sum and non-negative prefix sums.
    MotzkinWord,
    Family::Motzkin,
    validate_motzkin
);

impl DyckWord {
    pub fn semilength(&self) -> usize {
        self.0.len() / 2
    }
}

impl From<RestrictedGWord> for GWord {
    fn from(w: RestrictedGWord) -> GWord {
        GWord(w.0)
    }
}

impl From<MotzkinWord> for Vec<Letter> {
    fn from(w: MotzkinWord) -> Self {
        w.0
    }
}

/// Depth-first generator of all valid words of one family and length, in
/// lexicographic order. A branch is pruned as soon as the remaining letters
/// cannot bring the height back to zero.
#[derive(Debug, Clone)]
struct Backtrack {
    family: Family,
    len: usize,
    word: Vec<Letter>,
    choice: Vec<usize>,
    height: i64,
    started: bool,
    done: bool,
}

impl Backtrack {
    fn new(family: Family, len: usize) -> Self {
        Backtrack {
            family,
            len,
            word: Vec::with_capacity(len),
            choice: Vec::with_capacity(len),
            height: 0,
            started: false,
            done: family == Family::Restricted && len == 0,
        }
    }

    fn fits(&self, letter: Letter) -> bool {
        if self.family == Family::Restricted && letter == Letter::RedZero && self.height < 1 {
            return false;
        }
        let next = self.height + letter.value();
        let remaining = (self.len - self.word.len() - 1) as i64;
        next >= 0 && remaining >= next
    }

    fn first_fit(&self, from: usize) -> Option<usize> {
        let alphabet = self.family.alphabet();
        (from..alphabet.len()).find(|&i| self.fits(alphabet[i]))
    }

    fn push(&mut self, idx: usize) {
        let letter = self.family.alphabet()[idx];
        self.height += letter.value();
        self.word.push(letter);
        self.choice.push(idx);
    }

    /// Replaces the deepest letter that still has an untried sibling.
    fn backtrack(&mut self) -> bool {
        while let Some(idx) = self.choice.pop() {
            let letter = self.word.pop().expect("word and choice stacks agree");
            self.height -= letter.value();
            if let Some(next) = self.first_fit(idx + 1) {
                self.push(next);
                return true;
            }
        }
        false
    }

    fn advance(&mut self) -> Option<Vec<Letter>> {
        if self.done {
            return None;
        }
        if self.started && !self.backtrack() {
            self.done = true;
            return None;
        }
        self.started = true;
        loop {
            if self.word.len() == self.len {
                return Some(self.word.clone());
            }
            match self.first_fit(0) {
                Some(idx) => self.push(idx),
                None => {
                    if !self.backtrack() {
                        self.done = true;
                        return None;
                    }
                }
            }
        }
    }
}

macro_rules! enumerator {
    ($(#[$meta:meta])* $iter:ident, $word:ident) => {
        $(#[$meta])*
        #[derive(Debug, Clone)]
        pub struct $iter(Backtrack);

        impl Iterator for $iter {
            type Item = $word;

            fn next(&mut self) -> Option<$word> {
                self.0.advance().map($word)
            }
        }

        impl std::iter::FusedIterator for $iter {}
    };
}

enumerator!(
    /// Iterator returned by [`enumerate_dyck`].
    DyckWords,
    DyckWord
);
enumerator!(
    /// Iterator returned by [`enumerate_g`].
    GWords,
    GWord
);
enumerator!(
    /// Iterator returned by [`enumerate_g_restricted`].
    RestrictedGWords,
    RestrictedGWord
);
enumerator!(
    /// Iterator returned by [`enumerate_motzkin`].
    MotzkinWords,
    MotzkinWord
);

/// All Dyck words of semilength `n`, `Up < Down`.
pub fn enumerate_dyck(n: usize) -> DyckWords {
    DyckWords(Backtrack::new(Family::Dyck, 2 * n))
}

/// All G-words of length `n`, `Up < GreenZero < RedZero < Down`.
pub fn enumerate_g(n: usize) -> GWords {
    GWords(Backtrack::new(Family::G, n))
}

/// All restricted G-words with exactly `len` letters. Empty for `len == 0`.
pub fn enumerate_g_restricted(len: usize) -> RestrictedGWords {
    RestrictedGWords(Backtrack::new(Family::Restricted, len))
}

/// All Motzkin words of length `k`, `Up < Flat < Down`.
pub fn enumerate_motzkin(k: usize) -> MotzkinWords {
    MotzkinWords(Backtrack::new(Family::Motzkin, k))
}

/// Uniform Dyck word of semilength `n` drawn from `rng` by the cycle lemma:
/// shuffle `n` Ups and `n + 1` Downs, rotate so the walk starts just after
/// its first minimum, and drop the trailing Down. Each Dyck word has
/// exactly `2n + 1` preimages.
pub fn sample_dyck_with<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DyckWord {
    let mut steps = vec![Letter::Up; n];
    steps.extend(std::iter::repeat_n(Letter::Down, n + 1));
    steps.shuffle(rng);

    let mut height = 0i64;
    let mut lowest = 0i64;
    let mut cut = 0usize;
    for (i, l) in steps.iter().enumerate() {
        height += l.value();
        if height < lowest {
            lowest = height;
            cut = i + 1;
        }
    }
    let len = steps.len();
    steps.rotate_left(cut % len);
    let last = steps.pop();
    debug_assert_eq!(last, Some(Letter::Down));
    DyckWord::trusted(steps)
}

/// Uniform Dyck word of semilength `n`, reproducible from `seed`. The
/// generator is ChaCha8 seeded through `SeedableRng::seed_from_u64`.
pub fn sample_dyck(n: usize, seed: u64) -> DyckWord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_dyck_with(n, &mut rng)
}
