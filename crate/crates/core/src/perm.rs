//! Permutations of `{1..n}` in one-line notation.
//!
//! All public indexing is 1-based: `w.get(i)` is `w(i)`, positions and values
//! both range over `1..=n`. Storage is a packed byte vector.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::QPolynomial;

/// A permutation `w` of `{1..n}`, `1 <= n <= 64`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<u8>,
}

/// The two patterns whose avoidance characterizes smooth Schubert varieties.
pub const SMOOTH_PATTERNS: [&[usize]; 2] = [&[3, 4, 1, 2], &[4, 2, 3, 1]];

/// Patterns whose avoidance characterizes `R_w = B_w`.
pub const HLSS_PATTERNS: [&[usize]; 4] = [
    &[4, 2, 3, 1],
    &[3, 5, 1, 4, 2],
    &[4, 2, 5, 1, 3],
    &[3, 5, 1, 6, 2, 4],
];

impl Permutation {
    pub const MAX_SIZE: usize = 64;

    /// Validates `values` as a bijection of `{1..n}`.
    pub fn new(values: &[usize]) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::EmptyPermutation);
        }
        if n > Self::MAX_SIZE {
            return Err(Error::TooLarge {
                what: "permutation",
                n,
                max: Self::MAX_SIZE,
            });
        }
        let mut seen = 0u64;
        for &v in values {
            if v == 0 || v > n || seen & (1 << (v - 1)) != 0 {
                return Err(Error::NotAPermutation {
                    n,
                    values: values.to_vec(),
                });
            }
            seen |= 1 << (v - 1);
        }
        Ok(Self {
            values: values.iter().map(|&v| v as u8).collect(),
        })
    }

    /// Caller guarantees `values` is a bijection of `1..=len`.
    pub(crate) fn from_bytes_unchecked(values: Vec<u8>) -> Self {
        debug_assert!(Self::new(&values.iter().map(|&v| v as usize).collect::<Vec<_>>()).is_ok());
        Self { values }
    }

    pub(crate) fn bytes(&self) -> &[u8] {
        &self.values
    }

    pub fn identity(n: usize) -> Self {
        assert!((1..=Self::MAX_SIZE).contains(&n), "size {n} out of range");
        Self {
            values: (1..=n as u8).collect(),
        }
    }

    /// The longest element `w_0 = n (n-1) ... 1`.
    pub fn longest(n: usize) -> Self {
        assert!((1..=Self::MAX_SIZE).contains(&n), "size {n} out of range");
        Self {
            values: (1..=n as u8).rev().collect(),
        }
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> SymmetricGroup {
        SymmetricGroup {
            next: Some(Self::identity(n).values),
        }
    }

    pub fn size(&self) -> usize {
        self.values.len()
    }

    /// `w(i)` for `1 <= i <= n`.
    pub fn get(&self, i: usize) -> usize {
        self.values[i - 1] as usize
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.values.iter().map(|&v| v as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Number of inversions `#{(i, j) : i < j, w(i) > w(j)}`.
    pub fn length(&self) -> usize {
        // for each entry, count larger values already seen
        let mut seen = 0u64;
        let mut total = 0;
        for &v in &self.values {
            let above = (!0u64).checked_shl(v as u32).unwrap_or(0);
            total += (seen & above).count_ones() as usize;
            seen |= 1 << (v - 1);
        }
        total
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.size()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v as usize - 1] = (i + 1) as u8;
        }
        Self { values: inv }
    }

    /// Position of value `v`, i.e. `w^{-1}(v)`.
    pub fn position_of(&self, v: usize) -> usize {
        self.values.iter().position(|&x| x as usize == v).unwrap() + 1
    }

    /// `w * t_ij`: swap the entries at positions `i` and `j`.
    pub fn swap_positions(&self, i: usize, j: usize) -> Self {
        let mut values = self.values.clone();
        values.swap(i - 1, j - 1);
        Self { values }
    }

    /// Whether some subsequence of `w` is order-isomorphic to `sigma`.
    pub fn contains_pattern(&self, sigma: &Permutation) -> Result<bool> {
        Ok(self.find_pattern(sigma)?.is_some())
    }

    /// First occurrence (lexicographic in positions) of `sigma` in `w`.
    pub fn find_pattern(&self, sigma: &Permutation) -> Result<Option<Vec<usize>>> {
        let k = sigma.size();
        if k > self.size() {
            return Err(Error::PatternTooLong {
                pattern: k,
                n: self.size(),
            });
        }
        let found = (0..self.size()).combinations(k).find(|positions| {
            (0..k).tuple_combinations().all(|(a, b)| {
                let in_w = self.values[positions[a]] < self.values[positions[b]];
                let in_sigma = sigma.values[a] < sigma.values[b];
                in_w == in_sigma
            })
        });
        Ok(found.map(|p| p.into_iter().map(|i| i + 1).collect()))
    }

    fn first_pattern_hit(&self, patterns: &[&[usize]]) -> Option<(Permutation, Vec<usize>)> {
        patterns.iter().find_map(|p| {
            let sigma = Permutation::new(p).expect("pattern table is valid");
            if sigma.size() > self.size() {
                return None;
            }
            self.find_pattern(&sigma)
                .expect("size checked")
                .map(|pos| (sigma, pos))
        })
    }

    /// Avoids both `3412` and `4231`.
    pub fn is_smooth(&self) -> bool {
        self.smoothness_witness().is_none()
    }

    /// A forbidden pattern (`3412` checked first) and the positions where it occurs.
    pub fn smoothness_witness(&self) -> Option<(Permutation, Vec<usize>)> {
        self.first_pattern_hit(&SMOOTH_PATTERNS)
    }

    /// Avoids `4231`, `35142`, `42513` and `351624`.
    pub fn avoids_hlss_patterns(&self) -> bool {
        self.first_pattern_hit(&HLSS_PATTERNS).is_none()
    }

    /// Left-to-right maxima positions; always starts with 1.
    pub fn record_positions(&self) -> Vec<usize> {
        let mut max = 0;
        let mut out = Vec::new();
        for (i, &v) in self.values.iter().enumerate() {
            if v > max {
                max = v;
                out.push(i + 1);
            }
        }
        out
    }

    /// Record-block exponents. For `r <= i < r'` with `r, r'` consecutive
    /// record positions (`r'` absent past the last record),
    /// `e_i = #{r <= j < i : w(j) > w(i)} + #{k >= r' : w(k) < w(i)}`.
    pub fn exponents_by_records(&self) -> ExponentVector {
        let n = self.size();
        let records = self.record_positions();
        let mut entries = Vec::with_capacity(n);
        let mut block = 0;
        for i in 1..=n {
            while block + 1 < records.len() && records[block + 1] <= i {
                block += 1;
            }
            let start = records[block];
            let next = records.get(block + 1).copied();
            let wi = self.get(i);
            let within = (start..i).filter(|&j| self.get(j) > wi).count();
            let beyond = next.map_or(0, |r| (r..=n).filter(|&k| self.get(k) < wi).count());
            entries.push(within + beyond);
        }
        ExponentVector(entries)
    }

    /// The permutation of size `n - 1` order-isomorphic to `w` with position `k` deleted.
    pub fn flatten(&self, k: usize) -> Result<Permutation> {
        let n = self.size();
        if n == 1 {
            return Err(Error::FlattenSingleton);
        }
        if k == 0 || k > n {
            return Err(Error::PositionOutOfRange { k, n });
        }
        let removed = self.values[k - 1];
        let values = self
            .values
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k - 1)
            .map(|(_, &v)| if v > removed { v - 1 } else { v })
            .collect();
        Ok(Self { values })
    }

    /// Record blocks `[r_s..n], [r_{s-1}..r_s - 1], ..., [r_1..r_2 - 1]`,
    /// each increasing. A perfect elimination ordering of the inversion graph
    /// whenever `w` is smooth.
    pub fn simple_peo_order(&self) -> Vec<usize> {
        let mut bounds = self.record_positions();
        bounds.push(self.size() + 1);
        bounds
            .windows(2)
            .rev()
            .flat_map(|b| b[0]..b[1])
            .collect()
    }

    /// Compact digit form when `n <= 9`, comma-separated otherwise.
    pub fn to_text(&self) -> String {
        if self.size() <= 9 {
            self.values.iter().map(|v| v.to_string()).collect()
        } else {
            self.values.iter().join(",")
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({})", self.to_text())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad entry {t:?} in {s:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| match c.to_digit(10) {
                    Some(d) if d > 0 => Ok(d as usize),
                    _ => Err(Error::Parse(format!(
                        "bad digit {c:?} in {s:?}; use commas for n > 9"
                    ))),
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(&values)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_text())
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Iterator over `S_n` in lexicographic order.
#[derive(Clone, Debug)]
pub struct SymmetricGroup {
    next: Option<Vec<u8>>,
}

impl Iterator for SymmetricGroup {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { values: current })
    }
}

fn next_permutation(a: &mut [u8]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let j = (i..a.len()).rev().find(|&j| a[i - 1] < a[j]).unwrap();
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Exponents `e_1, ..., e_n`, indexed by position/vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(pub Vec<usize>);

impl ExponentVector {
    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// Sorted copy; the multiset of exponents.
    pub fn multiset(&self) -> Vec<usize> {
        let mut v = self.0.clone();
        v.sort_unstable();
        v
    }

    /// `[e_1 + 1]_q [e_2 + 1]_q ... [e_n + 1]_q`.
    pub fn q_product(&self) -> QPolynomial {
        QPolynomial::q_number_product(self.0.iter().map(|&e| e as u32 + 1))
    }

    /// `[e_1+1][e_2+1]...` in bracket notation.
    pub fn bracket_form(&self) -> String {
        self.0.iter().map(|e| format!("[{}]", e + 1)).collect()
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}
