//! Enumerators and counts checked against brute force and independent
//! formulas.

use std::collections::BTreeSet;

use touchard_core::paths::{format_letters, parse_letters};
use touchard_core::{
    catalan, enumerate_dyck, enumerate_g, enumerate_g_restricted, enumerate_motzkin, motzkin_count,
    prefix_sums, validate_dyck, validate_g, validate_g_restricted, validate_motzkin, Letter,
    Natural, Word,
};

const ALL: [Letter; 5] = [
    Letter::Up,
    Letter::GreenZero,
    Letter::Flat,
    Letter::RedZero,
    Letter::Down,
];

fn all_sequences(len: usize) -> Vec<Vec<Letter>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                ALL.iter().map(move |&l| {
                    let mut next = w.clone();
                    next.push(l);
                    next
                })
            })
            .collect();
    }
    out
}

fn value(l: Letter) -> i64 {
    match l {
        Letter::Up => 1,
        Letter::Down => -1,
        _ => 0,
    }
}

/// Direct reading of the definitions, sharing nothing with the library.
fn is_member(family: &str, w: &[Letter]) -> bool {
    let allowed: &[Letter] = match family {
        "dyck" => &[Letter::Up, Letter::Down],
        "motzkin" => &[Letter::Up, Letter::Flat, Letter::Down],
        _ => &[Letter::Up, Letter::GreenZero, Letter::RedZero, Letter::Down],
    };
    if !w.iter().all(|l| allowed.contains(l)) {
        return false;
    }
    let sums: Vec<i64> = (0..=w.len())
        .map(|i| w[..i].iter().map(|&l| value(l)).sum())
        .collect();
    if sums.iter().any(|&s| s < 0) || sums[w.len()] != 0 {
        return false;
    }
    if family == "restricted" {
        if w.is_empty() {
            return false;
        }
        if (0..w.len()).any(|i| w[i] == Letter::RedZero && sums[i] < 1) {
            return false;
        }
    }
    true
}

fn texts<W: Word>(it: impl Iterator<Item = W>) -> Vec<String> {
    it.map(|w| format_letters(w.letters())).collect()
}

#[test]
fn enumerators_match_brute_force() {
    for len in 0..=8 {
        let seqs = all_sequences(len);
        for family in ["dyck", "g", "restricted", "motzkin"] {
            let expected: Vec<String> = {
                let set: BTreeSet<Vec<Letter>> = seqs
                    .iter()
                    .filter(|w| is_member(family, w))
                    .cloned()
                    .collect();
                // BTreeSet orders by the derived Letter order, which is the
                // documented enumeration order.
                set.iter().map(|w| format_letters(w)).collect()
            };
            let got = match family {
                "dyck" if len % 2 == 1 => Vec::new(),
                "dyck" => texts(enumerate_dyck(len / 2)),
                "g" => texts(enumerate_g(len)),
                "restricted" => texts(enumerate_g_restricted(len)),
                _ => texts(enumerate_motzkin(len)),
            };
            assert_eq!(got, expected, "{family} len={len}");

            for w in &seqs {
                let accepted = match family {
                    "dyck" => validate_dyck(w.clone()).is_ok(),
                    "g" => validate_g(w.clone()).is_ok(),
                    "restricted" => validate_g_restricted(w.clone()).is_ok(),
                    _ => validate_motzkin(w.clone()).is_ok(),
                };
                assert_eq!(accepted, is_member(family, w), "{family} {w:?}");
            }
        }
    }
}

/// Pascal's triangle, additions only.
fn pascal(n: usize, k: usize) -> Natural {
    let mut row = vec![Natural::from(1u32)];
    for _ in 0..n {
        let mut next = vec![Natural::from(1u32)];
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(Natural::from(1u32));
        row = next;
    }
    row.get(k).cloned().unwrap_or_default()
}

/// C(n) = sum_i C(i) C(n-1-i).
fn segner(n: usize) -> Vec<Natural> {
    let mut c = vec![Natural::from(1u32)];
    for m in 1..=n {
        let next = (0..m).map(|i| &c[i] * &c[m - 1 - i]).sum();
        c.push(next);
    }
    c
}

#[test]
fn catalan_against_formula_and_convolution() {
    let conv = segner(60);
    for (n, c) in conv.iter().enumerate() {
        assert_eq!(catalan(n), *c, "segner n={n}");
        assert_eq!(
            catalan(n),
            pascal(2 * n, n) / Natural::from(n + 1),
            "binomial n={n}"
        );
    }
    assert_eq!(catalan(30), Natural::from(3_814_986_502_092_304u64));
}

#[test]
fn binomial_against_pascal() {
    for n in 0..=45 {
        for k in 0..=n + 1 {
            assert_eq!(touchard_core::binomial(n, k), pascal(n, k), "({n},{k})");
        }
    }
    assert_eq!(pascal(40, 20), Natural::from(137_846_528_820u64));
}

#[test]
fn cardinalities() {
    for n in 0..=11 {
        assert_eq!(
            Natural::from(enumerate_dyck(n).count()),
            catalan(n),
            "dyck {n}"
        );
        assert_eq!(
            Natural::from(enumerate_g(n).count()),
            catalan(n + 1),
            "g {n}"
        );
        assert_eq!(
            Natural::from(enumerate_g_restricted(n + 1).count()),
            catalan(n + 1),
            "restricted {}",
            n + 1
        );
    }
    assert_eq!(Natural::from(enumerate_dyck(12).count()), catalan(12));
    for k in 0..=14 {
        assert_eq!(
            Natural::from(enumerate_motzkin(k).count()),
            motzkin_count(k),
            "motzkin {k}"
        );
    }
}

#[test]
fn enumerated_prefix_sums_end_at_zero() {
    for w in enumerate_g(8) {
        let s = prefix_sums(w.letters());
        assert!(s.iter().all(|&h| h >= 0));
        assert_eq!(s.last().copied().unwrap_or(0), 0);
    }
}

#[test]
fn text_lines_round_trip() {
    for w in enumerate_g_restricted(6) {
        let line = w.to_string();
        assert_eq!(parse_letters(&line).unwrap(), w.letters());
        assert_eq!(line.parse::<touchard_core::RestrictedGWord>().unwrap(), w);
    }
}
