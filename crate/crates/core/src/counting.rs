//! Exact evaluation of both sides of the Touchard and Motzkin sums.
//!
//! Everything is generic over [`Counting`], implemented for any integer-like
//! type from `num-traits`. Use [`crate::Natural`] for exact results at any
//! size; fixed-width types overflow (and panic in debug builds) once the
//! values outgrow them.

use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_traits::{FromPrimitive, NumRef};

use crate::Natural;

/// Integer arithmetic needed by the counting routines.
pub trait Counting: NumRef + Clone + FromPrimitive + fmt::Display + fmt::Debug {}

impl<T> Counting for T where T: NumRef + Clone + FromPrimitive + fmt::Display + fmt::Debug {}

fn lift<T: Counting>(v: usize) -> T {
    T::from_usize(v).expect("small integers are representable")
}

/// Which of the two sums a report evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityKind {
    /// `C(n+1) = sum_k binom(n, 2k) 2^(n-2k) C(k)`
    Touchard,
    /// `C(n+1) = sum_k binom(n, k) M(k)`
    Motzkin,
}

impl IdentityKind {
    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::Touchard => "touchard",
            IdentityKind::Motzkin => "motzkin",
        }
    }
}

/// Both sides of one identity at one `n`, with the summands kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport<T> {
    pub kind: IdentityKind,
    pub n: usize,
    pub lhs: T,
    pub rhs: T,
    pub per_k_terms: Vec<T>,
    pub holds: bool,
}

impl<T: Counting> IdentityReport<T> {
    fn new(kind: IdentityKind, n: usize, lhs: T, per_k_terms: Vec<T>) -> Self {
        let rhs = per_k_terms.iter().fold(T::zero(), |acc, t| acc + t);
        let holds = lhs == rhs;
        IdentityReport {
            kind,
            n,
            lhs,
            rhs,
            per_k_terms,
            holds,
        }
    }
}

/// `n=<n> lhs=<int> rhs=<int> holds=<bool> terms=<int,int,...>`
impl<T: fmt::Display> fmt::Display for IdentityReport<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} lhs={} rhs={} holds={} terms=",
            self.n, self.lhs, self.rhs, self.holds
        )?;
        for (i, t) in self.per_k_terms.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Exact binomial coefficient; 0 when `k > n`.
pub fn binomial_in<T: Counting>(n: usize, k: usize) -> T {
    if k > n {
        return T::zero();
    }
    let k = k.min(n - k);
    // Each partial product is itself binom(n - k + i + 1, i + 1).
    (0..k).fold(T::one(), |acc, i| acc * lift::<T>(n - i) / lift::<T>(i + 1))
}

/// Row `n` of Pascal's triangle by the multiplicative recurrence.
fn binomial_row<T: Counting>(n: usize) -> Vec<T> {
    let mut row = Vec::with_capacity(n + 1);
    row.push(T::one());
    for j in 0..n {
        let next = row[j].clone() * lift::<T>(n - j) / lift::<T>(j + 1);
        row.push(next);
    }
    row
}

/// Memoized Catalan and Motzkin numbers. Shareable across threads; each
/// table extends lazily under its own lock.
#[derive(Debug)]
pub struct CountTable<T> {
    catalan: Mutex<Vec<T>>,
    motzkin: Mutex<Vec<T>>,
}

impl<T: Counting> Default for CountTable<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Counting> CountTable<T> {
    pub fn new() -> Self {
        CountTable {
            catalan: Mutex::new(vec![T::one()]),
            motzkin: Mutex::new(vec![T::one()]),
        }
    }

    /// `C(0..=n)`.
    pub fn catalan_prefix(&self, n: usize) -> Vec<T> {
        let mut memo = self.catalan.lock().expect("catalan memo poisoned");
        while memo.len() <= n {
            // C(m+1) = C(m) * 2(2m+1) / (m+2), exact at every step.
            let m = memo.len() - 1;
            let next = memo[m].clone() * lift::<T>(2 * (2 * m + 1)) / lift::<T>(m + 2);
            memo.push(next);
        }
        memo[..=n].to_vec()
    }

    /// `binom(2n, n) / (n + 1)`.
    pub fn catalan(&self, n: usize) -> T {
        let mut memo = self.catalan_prefix(n);
        memo.swap_remove(n)
    }

    /// `M(0..=k)`.
    pub fn motzkin_prefix(&self, k: usize) -> Vec<T> {
        let mut memo = self.motzkin.lock().expect("motzkin memo poisoned");
        while memo.len() <= k {
            // First-return split: M(j+1) = M(j) + sum_i M(i) M(j-1-i).
            let j = memo.len() - 1;
            let arches = (0..j).fold(T::zero(), |acc, i| acc + memo[i].clone() * &memo[j - 1 - i]);
            let next = memo[j].clone() + arches;
            memo.push(next);
        }
        memo[..=k].to_vec()
    }

    /// Number of Motzkin words of length `k`.
    pub fn motzkin(&self, k: usize) -> T {
        let mut memo = self.motzkin_prefix(k);
        memo.swap_remove(k)
    }

    /// Terms `binom(n, 2k) 2^(n-2k) C(k)` for `0 <= k <= n/2`.
    pub fn touchard_rhs(&self, n: usize) -> IdentityReport<T> {
        let row = binomial_row::<T>(n);
        let catalan = self.catalan_prefix(n / 2 + 1);
        let two = lift::<T>(2);
        let mut pow2 = Vec::with_capacity(n + 1);
        pow2.push(T::one());
        for i in 0..n {
            pow2.push(pow2[i].clone() * &two);
        }
        let terms = (0..=n / 2)
            .map(|k| row[2 * k].clone() * &pow2[n - 2 * k] * &catalan[k])
            .collect();
        let lhs = self.catalan(n + 1);
        IdentityReport::new(IdentityKind::Touchard, n, lhs, terms)
    }

    /// Terms `binom(n, k) M(k)` for `0 <= k <= n`.
    pub fn motzkin_rhs(&self, n: usize) -> IdentityReport<T> {
        let row = binomial_row::<T>(n);
        let motzkin = self.motzkin_prefix(n);
        let terms = row.into_iter().zip(&motzkin).map(|(b, m)| b * m).collect();
        let lhs = self.catalan(n + 1);
        IdentityReport::new(IdentityKind::Motzkin, n, lhs, terms)
    }

    pub fn rhs(&self, kind: IdentityKind, n: usize) -> IdentityReport<T> {
        match kind {
            IdentityKind::Touchard => self.touchard_rhs(n),
            IdentityKind::Motzkin => self.motzkin_rhs(n),
        }
    }
}

fn natural_table() -> &'static CountTable<Natural> {
    static TABLE: OnceLock<CountTable<Natural>> = OnceLock::new();
    TABLE.get_or_init(CountTable::new)
}

/// Exact Catalan number, memoized process-wide.
pub fn catalan(n: usize) -> Natural {
    natural_table().catalan(n)
}

/// Exact Motzkin number, memoized process-wide.
pub fn motzkin_count(k: usize) -> Natural {
    natural_table().motzkin(k)
}

pub fn binomial(n: usize, k: usize) -> Natural {
    binomial_in(n, k)
}

pub fn touchard_rhs(n: usize) -> IdentityReport<Natural> {
    natural_table().touchard_rhs(n)
}

pub fn motzkin_rhs(n: usize) -> IdentityReport<Natural> {
    natural_table().motzkin_rhs(n)
}
