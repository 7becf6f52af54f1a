//! Integer compositions, block splittings and shuffle counting.
//!
//! A [`Composition`] is a nonempty sequence of positive integers. It indexes
//! every coefficient family in the crate and doubles as a word over the
//! alphabet of positive integers in the shuffle algebra.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Nonempty sequence of positive integers.
///
/// Ordered by weight, then length, then lexicographically; within a fixed
/// weight this is the canonical order used for every listing.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let parts = parts.into();
        if parts.is_empty() {
            return Err(Error::InvalidComposition("empty sequence".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!(
                "zero part in {parts:?}"
            )));
        }
        Ok(Composition(parts))
    }

    /// One-part composition `(n)`.
    pub fn single(n: u32) -> Self {
        assert!(n > 0, "composition parts are positive");
        Composition(vec![n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    /// `n_1! n_2! ... n_s!`
    pub fn factorial_product(&self) -> crate::Rational {
        self.0
            .iter()
            .fold(crate::rational::int(1), |acc, &p| acc * crate::rational::factorial(p))
    }

    /// Suffix sum `n_i + ... + n_s` for a zero-based `i`; zero past the end.
    pub fn suffix_sum(&self, i: usize) -> u32 {
        self.0.get(i..).map_or(0, |s| s.iter().sum())
    }

    /// All suffix sums, `[n_1+..+n_s, n_2+..+n_s, ..., n_s]`.
    pub fn suffix_sums(&self) -> Vec<u32> {
        let mut acc = 0;
        let mut out: Vec<u32> = self
            .0
            .iter()
            .rev()
            .map(|&p| {
                acc += p;
                acc
            })
            .collect();
        out.reverse();
        out
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    pub fn reversed(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// Everything but the last part, or `None` for a one-part composition.
    pub fn split_last(&self) -> Option<(Composition, u32)> {
        let (&last, init) = self.0.split_last()?;
        if init.is_empty() {
            None
        } else {
            Some((Composition(init.to_vec()), last))
        }
    }

    /// Multiset of parts, sorted ascending.
    pub fn sorted_parts(&self) -> Vec<u32> {
        let mut v = self.0.clone();
        v.sort_unstable();
        v
    }
}

impl TryFrom<Vec<u32>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<u32> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.weight(), self.length(), &self.0).cmp(&(other.weight(), other.length(), &other.0))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All compositions of `n`, ascending length then lexicographic.
pub fn enumerate_compositions(n: u32) -> Result<Vec<Composition>> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let mut out = Vec::with_capacity(1usize << (n - 1).min(30));
    // Bit i of the mask set means "cut after position i+1".
    for mask in 0u64..(1u64 << (n - 1)) {
        let mut parts = Vec::with_capacity(mask.count_ones() as usize + 1);
        let mut run = 1;
        for i in 0..n - 1 {
            if mask >> i & 1 == 1 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        out.push(Composition(parts));
    }
    out.sort();
    Ok(out)
}

/// Ways to cut `c` into exactly `t` nonempty contiguous blocks.
///
/// Returns an empty list when `t` is zero or exceeds the length.
pub fn splits_into(c: &Composition, t: usize) -> Vec<Vec<Composition>> {
    let s = c.length();
    if t == 0 || t > s {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cuts = Vec::with_capacity(t - 1);
    choose_cuts(c.parts(), 1, t - 1, &mut cuts, &mut out);
    out
}

fn choose_cuts(
    parts: &[u32],
    start: usize,
    remaining: usize,
    cuts: &mut Vec<usize>,
    out: &mut Vec<Vec<Composition>>,
) {
    if remaining == 0 {
        let mut blocks = Vec::with_capacity(cuts.len() + 1);
        let mut prev = 0;
        for &cut in cuts.iter().chain(std::iter::once(&parts.len())) {
            blocks.push(Composition(parts[prev..cut].to_vec()));
            prev = cut;
        }
        out.push(blocks);
        return;
    }
    let last_allowed = parts.len() - remaining;
    for cut in start..=last_allowed {
        cuts.push(cut);
        choose_cuts(parts, cut + 1, remaining - 1, cuts, out);
        cuts.pop();
    }
}

/// Every splitting of `c`, for all block counts `t = 1..=length(c)`.
pub fn all_splits(c: &Composition) -> Vec<Vec<Composition>> {
    (1..=c.length()).flat_map(|t| splits_into(c, t)).collect()
}

/// Number of interleavings of `ws` (each word keeping its internal order)
/// that spell `target`.
pub fn shuffle_coefficient(ws: &[Composition], target: &Composition) -> u64 {
    let words: Vec<&[u32]> = ws.iter().map(|w| w.parts()).collect();
    shuffle_count_words(&words, target.parts())
}

/// [`shuffle_coefficient`] over raw letter slices; empty words are allowed.
pub fn shuffle_count_words(words: &[&[u32]], target: &[u32]) -> u64 {
    let total: usize = words.iter().map(|w| w.len()).sum();
    if total != target.len() {
        return 0;
    }
    let mut memo = HashMap::new();
    let mut pos = vec![0usize; words.len()];
    count_from(words, target, &mut pos, 0, &mut memo)
}

fn count_from(
    words: &[&[u32]],
    target: &[u32],
    pos: &mut Vec<usize>,
    filled: usize,
    memo: &mut HashMap<Vec<usize>, u64>,
) -> u64 {
    if filled == target.len() {
        return 1;
    }
    if let Some(&v) = memo.get(pos.as_slice()) {
        return v;
    }
    let letter = target[filled];
    let mut total = 0;
    for i in 0..words.len() {
        if words[i].get(pos[i]) == Some(&letter) {
            pos[i] += 1;
            total += count_from(words, target, pos, filled + 1, memo);
            pos[i] -= 1;
        }
    }
    memo.insert(pos.clone(), total);
    total
}

/// Shuffle product of two words with multiplicities.
pub fn shuffle_product(c1: &Composition, c2: &Composition) -> BTreeMap<Composition, u64> {
    shuffle_words(c1.parts(), c2.parts())
        .into_iter()
        .map(|(w, m)| (Composition(w), m))
        .collect()
}

/// Shuffle product of two letter sequences (either may be empty).
pub fn shuffle_words(u: &[u32], v: &[u32]) -> BTreeMap<Vec<u32>, u64> {
    let mut memo: HashMap<(usize, usize), BTreeMap<Vec<u32>, u64>> = HashMap::new();
    shuffle_suffixes(u, v, 0, 0, &mut memo)
}

fn shuffle_suffixes(
    u: &[u32],
    v: &[u32],
    i: usize,
    j: usize,
    memo: &mut HashMap<(usize, usize), BTreeMap<Vec<u32>, u64>>,
) -> BTreeMap<Vec<u32>, u64> {
    if i == u.len() || j == v.len() {
        let rest = if i == u.len() { &v[j..] } else { &u[i..] };
        return BTreeMap::from([(rest.to_vec(), 1)]);
    }
    if let Some(r) = memo.get(&(i, j)) {
        return r.clone();
    }
    let mut out = BTreeMap::new();
    for (letter, (ni, nj)) in [(u[i], (i + 1, j)), (v[j], (i, j + 1))] {
        for (tail, m) in shuffle_suffixes(u, v, ni, nj, memo) {
            let mut w = Vec::with_capacity(tail.len() + 1);
            w.push(letter);
            w.extend_from_slice(&tail);
            *out.entry(w).or_insert(0) += m;
        }
    }
    memo.insert((i, j), out.clone());
    out
}

/// Every interleaving of `ws`, listed with repetition. Exponential; kept as
/// an independent check on the counting routines.
pub fn brute_force_interleavings(ws: &[Composition]) -> Vec<Vec<u32>> {
    fn go(words: &[&[u32]], pos: &mut Vec<usize>, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let mut done = true;
        for i in 0..words.len() {
            if let Some(&l) = words[i].get(pos[i]) {
                done = false;
                pos[i] += 1;
                acc.push(l);
                go(words, pos, acc, out);
                acc.pop();
                pos[i] -= 1;
            }
        }
        if done {
            out.push(acc.clone());
        }
    }
    let words: Vec<&[u32]> = ws.iter().map(|w| w.parts()).collect();
    let mut out = Vec::new();
    go(&words, &mut vec![0; words.len()], &mut Vec::new(), &mut out);
    out
}

/// `C(m, t)` with the convention that it vanishes for `t > m` or `t < 0`.
pub fn binomial(m: i64, t: i64) -> u64 {
    if t < 0 || m < 0 || t > m {
        return 0;
    }
    let t = t.min(m - t) as u64;
    let m = m as u64;
    let mut acc: u128 = 1;
    for i in 0..t {
        acc = acc * (m - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflow")
}
