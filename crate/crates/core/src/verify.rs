//! Exhaustive checks that the bijections really are bijections and that the
//! stratified counts match the summands of both identities.
//!
//! The round-trip check is written against the [`Construction`] trait so
//! the same harness can be pointed at deliberately broken variants
//! ([`Faulty`]) and shown to reject them.

use std::collections::HashSet;
use std::fmt;

use crate::bijections::{
    decode_with, drop_letters, encode_with, motzkin_merge, motzkin_split, raise_with,
    touchard_merge, touchard_split, LiftTarget, PairTable, PAIR_TABLE,
};
use crate::counting::{CountTable, IdentityKind};
use crate::paths::{
    enumerate_dyck, enumerate_g, enumerate_g_restricted, format_letters, validate_dyck, validate_g,
    validate_g_restricted, DyckWord, GWord, Letter, RestrictedGWord, Word,
};
use crate::Natural;

/// The four maps of the proof, producing raw letters so that a broken
/// variant can emit words outside the target set.
pub trait Construction: Sync {
    fn encode(&self, w: &DyckWord) -> Vec<Letter>;
    fn decode(&self, v: &RestrictedGWord) -> Vec<Letter>;
    fn drop_restriction(&self, v: &RestrictedGWord) -> Vec<Letter>;
    fn raise_restriction(&self, u: &GWord) -> Vec<Letter>;
}

/// The maps exported by [`crate::bijections`].
#[derive(Debug, Clone, Copy, Default)]
pub struct Canonical;

impl Construction for Canonical {
    fn encode(&self, w: &DyckWord) -> Vec<Letter> {
        crate::bijections::pair_encode(w).into_letters()
    }

    fn decode(&self, v: &RestrictedGWord) -> Vec<Letter> {
        crate::bijections::pair_decode(v).into_letters()
    }

    fn drop_restriction(&self, v: &RestrictedGWord) -> Vec<Letter> {
        crate::bijections::drop_restriction(v).into_letters()
    }

    fn raise_restriction(&self, u: &GWord) -> Vec<Letter> {
        crate::bijections::raise_restriction(u).into_letters()
    }
}

/// Single-point corruptions of the construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Fault {
    /// `UD` and `DU` pairs trade colors.
    SwapColors,
    /// Lifting picks the last ground-level red zero instead of the first.
    LastGroundRedZero,
}

impl Fault {
    pub const ALL: [Fault; 2] = [Fault::SwapColors, Fault::LastGroundRedZero];

    pub fn name(self) -> &'static str {
        match self {
            Fault::SwapColors => "swap-colors",
            Fault::LastGroundRedZero => "last-red-zero",
        }
    }
}

const SWAPPED_TABLE: PairTable = [Letter::Up, Letter::RedZero, Letter::GreenZero, Letter::Down];

#[derive(Debug, Clone, Copy)]
pub struct Faulty(pub Fault);

impl Faulty {
    fn table(&self) -> &'static PairTable {
        match self.0 {
            Fault::SwapColors => &SWAPPED_TABLE,
            Fault::LastGroundRedZero => &PAIR_TABLE,
        }
    }
}

impl Construction for Faulty {
    fn encode(&self, w: &DyckWord) -> Vec<Letter> {
        encode_with(w.letters(), self.table())
    }

    fn decode(&self, v: &RestrictedGWord) -> Vec<Letter> {
        decode_with(v.letters(), self.table())
    }

    fn drop_restriction(&self, v: &RestrictedGWord) -> Vec<Letter> {
        drop_letters(v.letters())
    }

    fn raise_restriction(&self, u: &GWord) -> Vec<Letter> {
        let target = match self.0 {
            Fault::SwapColors => LiftTarget::First,
            Fault::LastGroundRedZero => LiftTarget::Last,
        };
        raise_with(u.letters(), target)
    }
}

const KEPT_FAILURES: usize = 5;

/// Outcome of the exhaustive round-trip check at one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundTripReport {
    pub n: usize,
    /// `|C(n+1)|`, `|G'(n+1)|` and `|G(n)|` as enumerated.
    pub dyck_words: usize,
    pub restricted_words: usize,
    pub g_words: usize,
    pub failure_count: usize,
    /// The first few failures, in discovery order.
    pub failures: Vec<String>,
}

impl RoundTripReport {
    pub fn ok(&self) -> bool {
        self.failure_count == 0
    }

    fn fail(&mut self, message: impl FnOnce() -> String) {
        if self.failures.len() < KEPT_FAILURES {
            self.failures.push(message());
        }
        self.failure_count += 1;
    }
}

impl fmt::Display for RoundTripReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "roundtrip n={} dyck={} restricted={} g={} failures={} ok={}",
            self.n,
            self.dyck_words,
            self.restricted_words,
            self.g_words,
            self.failure_count,
            self.ok()
        )
    }
}

/// Checks, over every element of `C(n+1)`, `G'(n+1)` and `G(n)`:
/// outputs land in the target set, both forward maps are injective with
/// image equal to the enumerated target, and all four compositions of a
/// map with its inverse are identities. For [`Canonical`] the two split
/// and merge pairs are checked on `G(n)` as well.
pub fn check_round_trips<C: Construction + ?Sized>(c: &C, n: usize) -> RoundTripReport {
    let dyck: Vec<DyckWord> = enumerate_dyck(n + 1).collect();
    let restricted: Vec<RestrictedGWord> = enumerate_g_restricted(n + 1).collect();
    let g: Vec<GWord> = enumerate_g(n).collect();
    let mut report = RoundTripReport {
        n,
        dyck_words: dyck.len(),
        restricted_words: restricted.len(),
        g_words: g.len(),
        failure_count: 0,
        failures: Vec::new(),
    };

    let restricted_set: HashSet<&RestrictedGWord> = restricted.iter().collect();
    let g_set: HashSet<&GWord> = g.iter().collect();

    // C(n+1) -> G'(n+1)
    let mut image = HashSet::with_capacity(dyck.len());
    for w in &dyck {
        let raw = c.encode(w);
        let text = format_letters(&raw);
        let Ok(v) = validate_g_restricted(raw) else {
            report.fail(|| format!("encode({w}) = {text} is not a restricted G-word"));
            continue;
        };
        if c.decode(&v) != w.letters() {
            report.fail(|| format!("decode(encode({w})) != {w}"));
        }
        if !image.insert(v) {
            report.fail(|| format!("encode is not injective: {text} hit twice"));
        }
    }
    if image.len() != restricted_set.len() || !image.iter().all(|v| restricted_set.contains(v)) {
        report.fail(|| "image of encode differs from G'".to_string());
    }

    // G'(n+1) -> C(n+1), G(n)
    let mut image = HashSet::with_capacity(restricted.len());
    for v in &restricted {
        let raw = c.decode(v);
        let text = format_letters(&raw);
        match validate_dyck(raw) {
            Ok(w) if c.encode(&w) == v.letters() => {}
            Ok(_) => report.fail(|| format!("encode(decode({v})) != {v}")),
            Err(_) => report.fail(|| format!("decode({v}) = {text} is not a Dyck word")),
        }

        let raw = c.drop_restriction(v);
        let text = format_letters(&raw);
        let Ok(u) = validate_g(raw) else {
            report.fail(|| format!("drop({v}) = {text} is not a G-word"));
            continue;
        };
        if c.raise_restriction(&u) != v.letters() {
            report.fail(|| format!("raise(drop({v})) != {v}"));
        }
        if !image.insert(u) {
            report.fail(|| format!("drop is not injective: {text} hit twice"));
        }
    }
    if image.len() != g_set.len() || !image.iter().all(|u| g_set.contains(u)) {
        report.fail(|| "image of drop differs from G".to_string());
    }

    // G(n) -> G'(n+1)
    for u in &g {
        let raw = c.raise_restriction(u);
        let text = format_letters(&raw);
        match validate_g_restricted(raw) {
            Ok(v) if c.drop_restriction(&v) == u.letters() => {}
            Ok(_) => report.fail(|| format!("drop(raise({u})) != {u}")),
            Err(_) => report.fail(|| format!("raise({u}) = {text} is not a restricted G-word")),
        }
    }

    report
}

/// Split/merge round trips for both decompositions over all of `G(n)`.
pub fn check_decompositions(n: usize) -> RoundTripReport {
    let g: Vec<GWord> = enumerate_g(n).collect();
    let mut report = RoundTripReport {
        n,
        dyck_words: 0,
        restricted_words: 0,
        g_words: g.len(),
        failure_count: 0,
        failures: Vec::new(),
    };
    for u in &g {
        let t = touchard_split(u);
        match touchard_merge(&t) {
            Ok(back) if back == *u && touchard_split(&back) == t => {}
            _ => report.fail(|| format!("touchard merge(split({u})) != {u}")),
        }
        let m = motzkin_split(u);
        match motzkin_merge(&m) {
            Ok(back) if back == *u && motzkin_split(&back) == m => {}
            _ => report.fail(|| format!("motzkin merge(split({u})) != {u}")),
        }
    }
    report
}

/// Class sizes of `G(n)` against the summands of one identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub kind: IdentityKind,
    pub n: usize,
    /// `counts[k]`: words with `2k` non-zero letters (Touchard) or with
    /// `n - k` red zeros (Motzkin).
    pub counts: Vec<u64>,
    pub expected: Vec<Natural>,
}

impl CensusReport {
    pub fn ok(&self) -> bool {
        self.counts.len() == self.expected.len()
            && self
                .counts
                .iter()
                .zip(&self.expected)
                .all(|(c, e)| Natural::from(*c) == *e)
    }
}

impl fmt::Display for CensusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |items: Vec<String>| items.join(",");
        write!(
            f,
            "census kind={} n={} counts={} expected={} ok={}",
            self.kind.name(),
            self.n,
            join(self.counts.iter().map(u64::to_string).collect()),
            join(self.expected.iter().map(Natural::to_string).collect()),
            self.ok()
        )
    }
}

/// Counts `G(n)` by the statistic of `kind`, via the matching split.
pub fn census_counts(kind: IdentityKind, n: usize) -> Vec<u64> {
    let classes = match kind {
        IdentityKind::Touchard => n / 2 + 1,
        IdentityKind::Motzkin => n + 1,
    };
    let mut counts = vec![0u64; classes];
    for u in enumerate_g(n) {
        let k = match kind {
            IdentityKind::Touchard => touchard_split(&u).k(),
            IdentityKind::Motzkin => motzkin_split(&u).k(),
        };
        counts[k] += 1;
    }
    counts
}

pub fn census(table: &CountTable<Natural>, kind: IdentityKind, n: usize) -> CensusReport {
    CensusReport {
        kind,
        n,
        counts: census_counts(kind, n),
        expected: table.rhs(kind, n).per_k_terms,
    }
}
